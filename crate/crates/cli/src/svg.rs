//! Static SVG renderings on a unit viewBox.

use std::fmt::Write as _;

use thermolattice::qubit::Disk;
use thermolattice::rational::to_f64;
use thermolattice::{ConeDescriptor, PLCurve, QubitState};

const HEADER: &str = r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" width="400" height="400">"#;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Curves scaled horizontally to the unit box, origin bottom-left.
pub fn curves(curves: &[&PLCurve]) -> String {
    let mut out = String::from(HEADER);
    out.push_str(
        "\n<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.004\"/>\n",
    );
    for (i, c) in curves.iter().enumerate() {
        // majorization curves run over 0..d
        let width = c.points().last().map_or(1.0, |p| to_f64(&p.x)).max(f64::MIN_POSITIVE);
        let pts: Vec<String> =
            c.points().iter().map(|p| format!("{:.6},{:.6}", to_f64(&p.x) / width, 1.0 - to_f64(&p.y))).collect();
        let _ = writeln!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.006\"/>",
            pts.join(" "),
            COLORS[i % COLORS.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}

// Bloch xz half-disk mapped into the unit box.
fn map(x: f64, z: f64) -> (f64, f64) {
    ((x + 1.0) / 2.0, (1.0 - z) / 2.0)
}

fn circle(out: &mut String, d: &Disk, color: &str) {
    let (cx, cy) = map(0.0, d.center);
    let _ = writeln!(
        out,
        "<circle cx=\"{cx:.6}\" cy=\"{cy:.6}\" r=\"{:.6}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"0.004\"/>",
        d.radius / 2.0
    );
}

fn marker(out: &mut String, s: &QubitState, color: &str) {
    let (cx, cy) = map(s.transverse(), s.z);
    let _ = writeln!(out, "<circle cx=\"{cx:.6}\" cy=\"{cy:.6}\" r=\"0.01\" fill=\"{color}\"/>");
}

/// Cones as boundary circles plus state markers.
pub fn cones(cones: &[ConeDescriptor], markers: &[QubitState]) -> String {
    let mut out = String::from(HEADER);
    out.push_str("\n<circle cx=\"0.5\" cy=\"0.5\" r=\"0.5\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.004\"/>\n");
    for (i, c) in cones.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        match c {
            ConeDescriptor::FiniteTemperature { d1, d2 } => {
                circle(&mut out, d1, color);
                circle(&mut out, d2, color);
            }
            ConeDescriptor::ZeroTemperature { d3, z_min } => {
                circle(&mut out, d3, color);
                let y = map(0.0, *z_min).1;
                let _ = writeln!(
                    out,
                    "<line x1=\"0\" y1=\"{y:.6}\" x2=\"1\" y2=\"{y:.6}\" stroke=\"{color}\" stroke-width=\"0.004\"/>"
                );
            }
        }
    }
    for (i, m) in markers.iter().enumerate() {
        marker(&mut out, m, COLORS[i % COLORS.len()]);
    }
    out.push_str("</svg>\n");
    out
}
