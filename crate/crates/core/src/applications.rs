//! Leap-year calendars and digital straight lines.

use std::fmt;

use crate::error::{Result, RhythmError};
use crate::generators::bjorklund;
use crate::rhythm::{DistanceSeq, Rhythm};

/// Years of the 19-year cycle (taken modulo 19) that are leap years.
const JEWISH_LEAP_RESIDUES: [usize; 7] = [3, 6, 8, 11, 14, 17, 0];

pub fn jewish_leap_year(year: u64) -> Result<bool> {
    if year == 0 {
        return Err(RhythmError::InvalidYear);
    }
    Ok(JEWISH_LEAP_RESIDUES.contains(&((year % 19) as usize)))
}

/// The 19-year leap cycle as a rhythm: pulse `i` stands for year `i + 1` of the cycle.
///
/// This is `bjorklund(7, 19)` started at its seventh pulse.
pub fn jewish_leap_pattern() -> Rhythm {
    bjorklund(7, 19).expect("valid counts").rotate(-6)
}

pub fn gregorian_leap_year(year: u64) -> Result<bool> {
    if year == 0 {
        return Err(RhythmError::InvalidYear);
    }
    Ok(year.is_multiple_of(4) && (!year.is_multiple_of(100) || year.is_multiple_of(400)))
}

/// Which boundary of a rasterized segment to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Horizontal run lengths of a digital line, one per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengths {
    pub runs: Vec<usize>,
}

impl RunLengths {
    pub fn as_distance_seq(&self) -> DistanceSeq {
        DistanceSeq(self.runs.clone())
    }
}

impl fmt::Display for RunLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_distance_seq().fmt(f)
    }
}

/// Run lengths of the segment from the origin with slope `k/n`, `n` pixels wide.
///
/// Column `j` is lit in row `floor(j k / n)`. The upper boundary reads the runs in reverse.
pub fn digital_line_runs(n: usize, k: usize, side: Side) -> Result<RunLengths> {
    if n == 0 {
        return Err(RhythmError::ZeroTimespan);
    }
    if k == 0 {
        return Err(RhythmError::TooFewOnsets {
            required: 1,
            found: 0,
        });
    }
    if k > n {
        return Err(RhythmError::TooManyOnsets { k, n });
    }
    let mut runs = vec![0; k];
    for j in 0..n {
        runs[j * k / n] += 1;
    }
    if side == Side::Upper {
        runs.reverse();
    }
    Ok(RunLengths { runs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jewish_years() {
        assert!(jewish_leap_year(5765).unwrap());
        assert!(!jewish_leap_year(5766).unwrap());
        assert!(jewish_leap_year(19).unwrap());
        assert!(jewish_leap_year(0).is_err());
    }

    #[test]
    fn jewish_pattern() {
        let p = jewish_leap_pattern();
        assert_eq!(p.to_box().as_str(), "..x..x.x..x..x..x.x");
        let years: Vec<usize> = p.onsets().iter().map(|i| i + 1).collect();
        assert_eq!(years, vec![3, 6, 8, 11, 14, 17, 19]);
        assert_eq!(p.necklace(), bjorklund(7, 19).unwrap().necklace());
    }

    #[test]
    fn gregorian_years() {
        assert!(gregorian_leap_year(2000).unwrap());
        assert!(!gregorian_leap_year(1900).unwrap());
        assert!(gregorian_leap_year(4).unwrap());
        assert!(!gregorian_leap_year(2023).unwrap());
        assert!(gregorian_leap_year(0).is_err());
    }

    #[test]
    fn line_runs() {
        assert_eq!(
            digital_line_runs(16, 5, Side::Lower).unwrap().runs,
            vec![4, 3, 3, 3, 3]
        );
        assert_eq!(
            digital_line_runs(16, 5, Side::Upper).unwrap().runs,
            vec![3, 3, 3, 3, 4]
        );
        assert_eq!(digital_line_runs(9, 1, Side::Upper).unwrap().runs, vec![9]);
        assert!(digital_line_runs(4, 5, Side::Lower).is_err());
        assert_eq!(
            digital_line_runs(16, 5, Side::Lower).unwrap().to_string(),
            "(4,3,3,3,3)"
        );
    }
}
