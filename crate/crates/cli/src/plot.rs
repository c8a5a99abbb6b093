//! Profile emitters: CSV table and a self-contained SVG line plot.

use std::fmt::Write;

/// `x` with 15 significant digits, plain notation where reasonable.
pub fn sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-5..15).contains(&mag) {
        format!("{:.*}", (14 - mag) as usize, x)
    } else {
        format!("{x:.14e}")
    }
}

pub fn csv(rows: &[(f64, f64)]) -> String {
    let mut out = String::from("theta,f\n");
    for (t, f) in rows {
        let _ = writeln!(out, "{},{}", sig15(*t), sig15(*f));
    }
    out
}

const W: f64 = 800.0;
const H: f64 = 600.0;
const PAD: f64 = 60.0;

/// 800×600 plot of `f` against `theta` as a single polyline.
pub fn svg(rows: &[(f64, f64)], title: &str) -> String {
    let (x0, x1) = (0.0, std::f64::consts::PI);
    let lo = rows.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    let hi = rows.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    // flat profiles still get a visible band
    let span = if hi - lo > 1e-12 * hi.abs().max(1.0) { hi - lo } else { hi.abs().max(1.0) * 0.1 };
    let (y0, y1) = (lo - 0.05 * span, lo + 1.05 * span);
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);
    let points: Vec<String> = rows.iter().map(|(t, f)| format!("{:.2},{:.2}", sx(*t), sy(*f))).collect();
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600">"#);
    let _ = writeln!(s, r#"<rect x="0" y="0" width="800" height="600" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{PAD} {PAD} V{b} H{r}" fill="none" stroke="black" stroke-width="1"/>"#,
        b = H - PAD,
        r = W - PAD
    );
    let _ = writeln!(s, r#"<text x="{}" y="30" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#, W / 2.0, escape(title));
    let _ = writeln!(s, r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">theta in [0, pi)</text>"#, W / 2.0, H - 20.0);
    let _ = writeln!(s, r#"<text x="10" y="{}" font-family="sans-serif" font-size="12">{}</text>"#, PAD, sig15(y1));
    let _ = writeln!(s, r#"<text x="10" y="{}" font-family="sans-serif" font-size="12">{}</text>"#, H - PAD, sig15(y0));
    let _ = writeln!(s, r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#, points.join(" "));
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(sig15(1.0), "1.00000000000000");
        assert_eq!(sig15(std::f64::consts::PI), "3.14159265358979");
        assert_eq!(sig15(0.0), "0");
        assert_eq!(sig15(1234.5), "1234.50000000000");
    }

    #[test]
    fn svg_has_one_polyline() {
        let s = svg(&[(0.0, 1.0), (1.0, 2.0), (2.0, 1.5)], "a < b");
        assert_eq!(s.matches("<polyline").count(), 1);
        assert!(s.contains(r#"viewBox="0 0 800 600""#));
        assert!(s.contains("a &lt; b"));
    }
}
