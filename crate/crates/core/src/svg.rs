//! Clock diagrams: pulses as ticks around a circle, pulse 0 at the top and
//! time running clockwise, onsets as dots joined by a polygon.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::rhythm::Rhythm;

// Layout, in SVG user units.
const SIZE: f64 = 320.0;
const RADIUS: f64 = 120.0;
const TICK_LENGTH: f64 = 8.0;
const DOT_RADIUS: f64 = 7.0;
const LABEL_FONT_SIZE: f64 = 13.0;
/// Distance of the zero label outside the circle.
const ZERO_LABEL_OFFSET: f64 = 22.0;
/// Distance of arc-length labels inside the circle.
const ARC_LABEL_INSET: f64 = 24.0;

fn point(pulse: f64, n: usize, radius: f64) -> (f64, f64) {
    let theta = 2.0 * PI * pulse / n as f64 - PI / 2.0;
    let c = SIZE / 2.0;
    (c + radius * theta.cos(), c + radius * theta.sin())
}

/// Round to two decimals, avoiding a negative zero.
fn num(x: f64) -> String {
    let v = (x * 100.0).round() / 100.0;
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.2}")
}

/// Render `r` as a standalone SVG document. Output is byte-identical for equal input.
pub fn render_svg(r: &Rhythm) -> String {
    let n = r.timespan();
    let c = num(SIZE / 2.0);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#,
        size = num(SIZE)
    );
    let _ = writeln!(s, "  <title>{}</title>", r.to_subset_string());
    let _ = writeln!(
        s,
        r#"  <circle cx="{c}" cy="{c}" r="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        num(RADIUS)
    );
    for i in 0..n {
        let (x1, y1) = point(i as f64, n, RADIUS - TICK_LENGTH / 2.0);
        let (x2, y2) = point(i as f64, n, RADIUS + TICK_LENGTH / 2.0);
        let _ = writeln!(
            s,
            r#"  <line class="tick" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    }
    let (zx, zy) = point(0.0, n, RADIUS + ZERO_LABEL_OFFSET);
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="middle">0</text>"#,
        num(zx),
        num(zy),
        num(LABEL_FONT_SIZE)
    );
    let pts: Vec<String> = r
        .onsets()
        .iter()
        .map(|&o| {
            let (x, y) = point(o as f64, n, RADIUS);
            format!("{},{}", num(x), num(y))
        })
        .collect();
    if pts.len() >= 2 {
        let _ = writeln!(
            s,
            r#"  <polygon class="onsets" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            pts.join(" ")
        );
    }
    if let Ok(seq) = r.distance_seq() {
        if r.len() >= 2 {
            for (i, &gap) in seq.gaps().iter().enumerate() {
                let mid = r.onset(i) as f64 + gap as f64 / 2.0;
                let (x, y) = point(mid, n, RADIUS - ARC_LABEL_INSET);
                let _ = writeln!(
                    s,
                    r#"  <text class="arc" x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="middle">{gap}</text>"#,
                    num(x),
                    num(y),
                    num(LABEL_FONT_SIZE)
                );
            }
        }
    }
    for &o in r.onsets() {
        let (x, y) = point(o as f64, n, RADIUS);
        let _ = writeln!(
            s,
            r#"  <circle class="onset" cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(x),
            num(y),
            num(DOT_RADIUS)
        );
    }
    s.push_str("</svg>\n");
    s
}
