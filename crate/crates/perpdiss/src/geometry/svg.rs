//! SVG rendering of planar arrangements.
//!
//! Lines are clipped to the bounding box of all intersection points and
//! reference points, padded by 20%. Bisectors (zero-gain edges) are stroked
//! heavier; reference points are filled circles. Element order follows edge
//! ids, so output is deterministic.

use super::{Hyperplane, PointConfiguration};
use crate::error::Error;
use crate::graph::GainGraph;
use crate::Result;

pub fn render_svg(
    g: &GainGraph,
    q: &PointConfiguration,
    hyperplanes: &[Hyperplane],
) -> Result<String> {
    if q.d != 2 {
        return Err(Error::InvalidParam("SVG rendering needs d = 2".into()));
    }

    // bounding box over intersection points and reference points
    let mut xs: Vec<f64> = vec![];
    let mut ys: Vec<f64> = vec![];
    for i in 0..hyperplanes.len() {
        for j in i + 1..hyperplanes.len() {
            let a = hyperplanes[i].as_flat(2);
            let b = hyperplanes[j].as_flat(2);
            if let Some(meet) = a.intersect(&b) {
                if meet.dim() == 0 {
                    let p = meet.particular_point();
                    xs.push(p[0].to_f64());
                    ys.push(p[1].to_f64());
                }
            }
        }
    }
    for p in &q.points {
        xs.push(p[0].to_f64());
        ys.push(p[1].to_f64());
    }
    if xs.is_empty() {
        xs.push(0.0);
        ys.push(0.0);
    }
    let (mut min_x, mut max_x) = bounds(&xs);
    let (mut min_y, mut max_y) = bounds(&ys);
    let pad_x = ((max_x - min_x) * 0.2).max(1.0);
    let pad_y = ((max_y - min_y) * 0.2).max(1.0);
    min_x -= pad_x;
    max_x += pad_x;
    min_y -= pad_y;
    max_y += pad_y;

    let width = max_x - min_x;
    let height = max_y - min_y;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt(min_x),
        fmt(-max_y),
        fmt(width),
        fmt(height)
    ));
    // y grows upward mathematically; flip into SVG's downward axis
    out.push_str("<g transform=\"scale(1,-1)\">\n");

    for h in hyperplanes {
        let Some(((x1, y1), (x2, y2))) = clip_line(h, min_x, max_x, min_y, max_y) else {
            continue; // line misses the box entirely
        };
        let heavier = g.edges()[h.source_edge].gain.is_zero();
        let stroke_width = if heavier { "2.5" } else { "1" };
        out.push_str(&format!(
            "<path d=\"M {} {} L {} {}\" stroke=\"black\" stroke-width=\"{}\" fill=\"none\"/>\n",
            fmt(x1),
            fmt(y1),
            fmt(x2),
            fmt(y2),
            stroke_width
        ));
    }
    let r = (width.max(height) / 120.0).max(0.05);
    for p in &q.points {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>\n",
            fmt(p[0].to_f64()),
            fmt(p[1].to_f64()),
            fmt(r)
        ));
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

fn bounds(v: &[f64]) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &x in v {
        min = min.min(x);
        max = max.max(x);
    }
    (min, max)
}

fn fmt(x: f64) -> String {
    format!("{x:.4}")
}

/// Clip the line normal·p = offset to the box, returning two endpoint
/// coordinates, or None when the line misses the box.
fn clip_line(
    h: &Hyperplane,
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
) -> Option<((f64, f64), (f64, f64))> {
    let a = h.normal[0].to_f64();
    let b = h.normal[1].to_f64();
    let c = h.offset.to_f64();
    let mut hits: Vec<(f64, f64)> = vec![];
    let eps = 1e-9;
    // intersect with the four box edges
    if b.abs() > eps {
        for x in [min_x, max_x] {
            let y = (c - a * x) / b;
            if (min_y - eps..=max_y + eps).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a.abs() > eps {
        for y in [min_y, max_y] {
            let x = (c - b * y) / a;
            if (min_x - eps..=max_x + eps).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.dedup_by(|p, r| (p.0 - r.0).abs() < eps && (p.1 - r.1).abs() < eps);
    if hits.len() < 2 {
        return None;
    }
    // the two most distant hits span the visible segment
    let mut best = ((0.0, 0.0), (0.0, 0.0));
    let mut best_d = -1.0;
    for i in 0..hits.len() {
        for j in i + 1..hits.len() {
            let d = (hits[i].0 - hits[j].0).powi(2) + (hits[i].1 - hits[j].1).powi(2);
            if d > best_d {
                best_d = d;
                best = (hits[i], hits[j]);
            }
        }
    }
    Some(best)
}
