//! Leap years and digital straight lines.

use euclidean_rhythms::applications::{
    digital_line_runs, gregorian_leap_year, jewish_leap_pattern, jewish_leap_year, Side,
};

fn main() -> euclidean_rhythms::Result<()> {
    let cycle = jewish_leap_pattern();
    println!("19-year cycle: {}", cycle.to_box());
    for year in [5765, 5766, 5767, 5768] {
        println!("  {year}: leap = {}", jewish_leap_year(year)?);
    }
    for year in [1900, 2000, 2024] {
        println!("gregorian {year}: leap = {}", gregorian_leap_year(year)?);
    }
    println!(
        "line 16 wide, 5 high: lower {}  upper {}",
        digital_line_runs(16, 5, Side::Lower)?,
        digital_line_runs(16, 5, Side::Upper)?
    );
    Ok(())
}
