//! Static SVG plots: a 2-D scatter of labelled points and a circular layout
//! of a partitioned graph. Output is a pure function of the input, so
//! repeated runs produce identical bytes.

use std::f64::consts::PI;
use std::fmt::Write;

use partitionlab::{Graph, Partition};

use crate::error::{CliError, Result};

pub const PALETTE: [&str; 8] =
    ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"];

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 48.0;
const RADIUS: f64 = 4.0;

/// Scatter plot. `classes[i]` is a 0-based class index used to pick the colour.
pub fn scatter(points: &[(f64, f64)], classes: &[usize], x_label: &str, y_label: &str) -> Result<String> {
    if points.is_empty() || classes.is_empty() {
        return Err(CliError::Runtime("nothing to plot: no labelled points".into()));
    }
    if points.len() != classes.len() {
        return Err(CliError::Runtime(format!("{} points but {} labels", points.len(), classes.len())));
    }
    let (x_min, x_max) = padded_range(points.iter().map(|p| p.0));
    let (y_min, y_max) = padded_range(points.iter().map(|p| p.1));
    let sx = |x: f64| MARGIN + (x - x_min) / (x_max - x_min) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y_min) / (y_max - y_min) * (HEIGHT - 2.0 * MARGIN);

    let mut s = header();
    let (left, right) = (MARGIN, WIDTH - MARGIN);
    let (top, bottom) = (MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        s,
        r#"<path d="M{left:.2} {top:.2} L{left:.2} {bottom:.2} L{right:.2} {bottom:.2}" fill="none" stroke="black"/>"#
    );
    // min/max ticks on both axes
    for (x, v) in [(left, x_min), (right, x_max)] {
        let _ = writeln!(s, r#"<path d="M{x:.2} {bottom:.2} L{x:.2} {:.2}" stroke="black"/>"#, bottom + 5.0);
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" font-size="10" text-anchor="middle">{}</text>"#,
            bottom + 17.0,
            tick(v)
        );
    }
    for (y, v) in [(bottom, y_min), (top, y_max)] {
        let _ = writeln!(s, r#"<path d="M{:.2} {y:.2} L{left:.2} {y:.2}" stroke="black"/>"#, left - 5.0);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{}</text>"#,
            left - 8.0,
            y + 3.0,
            tick(v)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 8.0,
        escape(x_label)
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{:.2}" font-size="12" text-anchor="middle" transform="rotate(-90 14 {:.2})">{}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(y_label)
    );
    for (&(x, y), &c) in points.iter().zip(classes) {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{RADIUS}" fill="{}"/>"#,
            sx(x),
            sy(y),
            PALETTE[c % PALETTE.len()]
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Vertices evenly spaced on a circle (vertex 1 at the top, clockwise), one
/// line per edge, vertices coloured by part.
pub fn graph_layout(g: &Graph, p: &Partition) -> Result<String> {
    if g.n() == 0 || p.len() != g.n() {
        return Err(CliError::Runtime("nothing to plot: partition does not cover the graph".into()));
    }
    let cx = WIDTH / 2.0;
    let cy = HEIGHT / 2.0;
    let r = HEIGHT / 2.0 - MARGIN;
    let pos: Vec<(f64, f64)> = (0..g.n())
        .map(|v| {
            let t = 2.0 * PI * v as f64 / g.n() as f64;
            (cx + r * t.sin(), cy - r * t.cos())
        })
        .collect();

    let mut s = header();
    for &(u, v) in g.edges() {
        let _ = writeln!(
            s,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#999999"/>"##,
            pos[u].0, pos[u].1, pos[v].0, pos[v].1
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{}" fill="{}"/>"#,
            RADIUS * 2.0,
            PALETTE[p.part_of(v) % PALETTE.len()]
        );
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" font-size="10" text-anchor="middle">{}</text>"#,
            y - 12.0,
            v + 1
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn header() -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 1.0, hi + 1.0)
    }
}

fn tick(v: f64) -> String {
    let s = format!("{v:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
