//! SVG drawing of a column-wise subdivision.

use std::fmt::Write;

use tropcount::lattice::LatticePoint;
use tropcount::subdivisions::ColumnwiseSubdivision;

pub const PITCH: i64 = 40;
const MARGIN: i64 = 20;

fn coords(d: i64, p: LatticePoint) -> (i64, i64) {
    (MARGIN + p.x * PITCH, MARGIN + (d - p.y) * PITCH)
}

fn points_attr(d: i64, pts: &[LatticePoint]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = coords(d, p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Cell counts and triangle double areas are repeated as `data-*` attributes
/// on the root element.
pub fn render(s: &ColumnwiseSubdivision, path_id: usize) -> String {
    let d = s.degree() as i64;
    let size = 2 * MARGIN + d * PITCH;
    let tri_areas: Vec<String> = s.triangles().map(|t| t.double_area().to_string()).collect();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}" data-degree="{d}" data-path-id="{path_id}" data-triangles="{}" data-parallelograms="{}" data-triangle-double-areas="{}">"#,
        tri_areas.len(),
        s.parallelograms().count(),
        tri_areas.join(",")
    )
    .unwrap();
    out += "  <style>.triangle{fill:#f4d58d;stroke:#333;stroke-width:1}.parallelogram{fill:#8db8f4;stroke:#333;stroke-width:1}.path{fill:none;stroke:#c0392b;stroke-width:3}.outline{fill:none;stroke:#000;stroke-width:2}</style>\n";
    let corners = [
        LatticePoint::new(0, 0),
        LatticePoint::new(d, 0),
        LatticePoint::new(0, d),
    ];
    writeln!(
        out,
        r#"  <polygon class="outline" points="{}"/>"#,
        points_attr(d, &corners)
    )
    .unwrap();
    for c in s.cells() {
        let kind = if c.is_triangle() { "triangle" } else { "parallelogram" };
        writeln!(
            out,
            r#"  <polygon class="{kind}" data-double-area="{}" points="{}"/>"#,
            c.double_area(),
            points_attr(d, c.vertices())
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"  <polyline class="path" points="{}"/>"#,
        points_attr(d, s.source_path().points())
    )
    .unwrap();
    for x in 0..=d {
        for y in 0..=d - x {
            let (cx, cy) = coords(d, LatticePoint::new(x, y));
            writeln!(out, r#"  <circle cx="{cx}" cy="{cy}" r="2"/>"#).unwrap();
        }
    }
    out += "</svg>\n";
    out
}
