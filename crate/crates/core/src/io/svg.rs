use std::fmt::Write;

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::{list_crossings, Drawing, Rational};
use crate::instance::EnergyInstance;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Straight-line drawing with nodes, edges and crossing points marked.
pub fn render_svg(i: &EnergyInstance, d: &Drawing) -> Result<String> {
    d.check_covers(i)?;
    if d.is_empty() {
        return Err(Error::EmptyDrawing);
    }
    let xs: Vec<f64> = d.points().iter().map(|p| f(&p.x)).collect();
    let ys: Vec<f64> = d.points().iter().map(|p| f(&p.y)).collect();
    let (min_x, max_x) = xs.iter().fold((f64::MAX, f64::MIN), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let (min_y, max_y) = ys.iter().fold((f64::MAX, f64::MIN), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    // y grows downwards in SVG
    let map = |x: f64, y: f64| (MARGIN + (x - min_x) * scale, SIZE - MARGIN - (y - min_y) * scale);

    let mut out = String::new();
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(&mut out, format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"));
    w(&mut out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n".into());
    for (e, _) in i.edges() {
        let (x1, y1) = map(xs[e.u()], ys[e.u()]);
        let (x2, y2) = map(xs[e.v()], ys[e.v()]);
        writeln!(
            out,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"black\" stroke-width=\"1\"/>"
        )
        .expect("write to string");
    }
    for c in list_crossings(i, d)? {
        let (x, y) = map(f(&c.point.x), f(&c.point.y));
        writeln!(out, "<circle class=\"crossing\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>")
            .expect("write to string");
    }
    for u in 0..i.num_nodes() {
        let (x, y) = map(xs[u], ys[u]);
        writeln!(out, "<circle class=\"node\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"steelblue\"/>")
            .expect("write to string");
        writeln!(out, "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">{u}</text>", x + 4.0, y - 4.0)
            .expect("write to string");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
