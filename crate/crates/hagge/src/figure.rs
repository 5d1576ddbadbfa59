//! SVG rendering of a construction.
//!
//! Floating point lives only here. Points are normalized exactly and only
//! then converted, and nothing computed here feeds back into the checks.

use std::fmt::Write as _;

use hagge_core::areal::{ArealPoint, GeometryError, TriangleParams};
use hagge_core::construct::{
    run, run_degenerate_h, run_degenerate_k, ConstructError, Construction, StartKind, StartingPoint,
};
use hagge_core::scalar::Rational;
use num_traits::ToPrimitive;

pub type Vec2 = [f64; 2];

#[derive(Debug, thiserror::Error)]
pub enum FigureError {
    #[error("point at infinity cannot be drawn")]
    PointAtInfinity,
    #[error("value {0} is out of floating-point range")]
    Range(String),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

fn to_f64(r: &Rational) -> Result<f64, FigureError> {
    r.as_big()
        .to_f64()
        .filter(|v| v.is_finite())
        .ok_or_else(|| FigureError::Range(r.to_string()))
}

/// Cartesian positions of the vertices: `B` at the origin, `C` on the
/// positive x-axis, `A` above it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Embedding {
    pub a: Vec2,
    pub b: Vec2,
    pub c: Vec2,
}

impl Embedding {
    pub fn new(t: &TriangleParams<Rational>) -> Result<Self, FigureError> {
        let (sa, sb, sc) = (to_f64(&t.sa)?, to_f64(&t.sb)?, to_f64(&t.sc)?);
        let a = sa.sqrt();
        let x = (sa + sc - sb) / (2.0 * a);
        let y = (sc - x * x).max(0.0).sqrt();
        Ok(Embedding {
            a: [x, y],
            b: [0.0, 0.0],
            c: [a, 0.0],
        })
    }

    /// `(x·A + y·B + z·C)/(x + y + z)`.
    pub fn to_cartesian(&self, p: &ArealPoint<Rational>) -> Result<Vec2, FigureError> {
        let w = p.unit_sum().map_err(|e| match e {
            GeometryError::PointAtInfinity => FigureError::PointAtInfinity,
            other => FigureError::Range(other.to_string()),
        })?;
        let (x, y, z) = (to_f64(&w[0])?, to_f64(&w[1])?, to_f64(&w[2])?);
        Ok([
            x * self.a[0] + y * self.b[0] + z * self.c[0],
            x * self.a[1] + y * self.b[1] + z * self.c[1],
        ])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureOptions {
    pub size: u32,
    pub labels: bool,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            size: 800,
            labels: true,
        }
    }
}

/// Circle through three points, or `None` when they are (nearly) collinear.
pub fn circle_through(p: Vec2, q: Vec2, r: Vec2) -> Option<(Vec2, f64)> {
    let d = 2.0 * (p[0] * (q[1] - r[1]) + q[0] * (r[1] - p[1]) + r[0] * (p[1] - q[1]));
    let scale = [p, q, r]
        .iter()
        .map(|v| v[0].abs().max(v[1].abs()))
        .fold(1.0, f64::max);
    if d.abs() <= 1e-12 * scale * scale {
        return None;
    }
    let n = |v: Vec2| v[0] * v[0] + v[1] * v[1];
    let ux = (n(p) * (q[1] - r[1]) + n(q) * (r[1] - p[1]) + n(r) * (p[1] - q[1])) / d;
    let uy = (n(p) * (r[0] - q[0]) + n(q) * (p[0] - r[0]) + n(r) * (q[0] - p[0])) / d;
    let centre = [ux, uy];
    Some((centre, dist(centre, p)))
}

fn dist(p: Vec2, q: Vec2) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Distance from the circle, relative to the radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub circle: String,
    pub point: String,
    pub value: f64,
}

pub struct Figure {
    pub svg: String,
    /// Every labeled point that could be placed, in model coordinates.
    pub positions: Vec<(String, Vec2)>,
    pub residuals: Vec<Residual>,
    pub warnings: Vec<String>,
    pub circles_drawn: usize,
    pub lines_drawn: usize,
}

impl Figure {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.value).fold(0.0, f64::max)
    }

    pub fn position(&self, label: &str) -> Option<Vec2> {
        self.positions
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| *p)
    }
}

/// Runs the construction appropriate to the start, including the
/// degenerate ones, for drawing.
pub fn construct_for_figure(
    t: &TriangleParams<Rational>,
    start: StartingPoint<Rational>,
) -> Result<Construction<Rational>, FigureError> {
    Ok(match start.kind() {
        StartKind::Orthocentre => run_degenerate_h(t)?,
        StartKind::Symmedian => run_degenerate_k(t)?,
        _ => run(t, start)?,
    })
}

const STYLES: [(&str, &str); 12] = [
    ("#1f77b4", ""),
    ("#d62728", ""),
    ("#2ca02c", ""),
    ("#9467bd", ""),
    ("#ff7f0e", ""),
    ("#8c564b", ""),
    ("#e377c2", "6,3"),
    ("#17becf", "6,3"),
    ("#7f7f7f", "6,3"),
    ("#bcbd22", "2,3"),
    ("#393b79", "2,3"),
    ("#637939", "8,3,2,3"),
];

struct Canvas {
    scale: f64,
    offset: Vec2,
}

impl Canvas {
    fn fit(e: &Embedding, size: f64) -> Canvas {
        let height = e.a[1].max(1e-12);
        let scale = 0.7 * size / height;
        let xs = [e.a[0], e.b[0], e.c[0]];
        let mid_x = (xs.iter().cloned().fold(f64::MAX, f64::min)
            + xs.iter().cloned().fold(f64::MIN, f64::max))
            / 2.0;
        let mid_y = e.a[1] / 2.0;
        Canvas {
            scale,
            offset: [size / 2.0 - mid_x * scale, size / 2.0 + mid_y * scale],
        }
    }

    fn map(&self, p: Vec2) -> Vec2 {
        [
            self.offset[0] + p[0] * self.scale,
            self.offset[1] - p[1] * self.scale,
        ]
    }
}

fn style_attrs(i: usize) -> String {
    let (colour, dash) = STYLES[i % STYLES.len()];
    if dash.is_empty() {
        format!(r#"stroke="{colour}""#)
    } else {
        format!(r#"stroke="{colour}" stroke-dasharray="{dash}""#)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Renders the construction as standalone SVG 1.1.
pub fn render(r: &Construction<Rational>, options: &FigureOptions) -> Result<Figure, FigureError> {
    let e = Embedding::new(&r.triangle)?;
    let size = options.size as f64;
    let canvas = Canvas::fit(&e, size);
    let mut warnings = Vec::new();

    let mut positions: Vec<(String, Vec2)> = Vec::new();
    for (label, p) in r.named_points() {
        match e.to_cartesian(&p) {
            Ok(v) => positions.push((label.to_string(), v)),
            Err(err) => warnings.push(format!("{label} not drawn: {err}")),
        }
    }
    let at = |label: &str| positions.iter().find(|(l, _)| l == label).map(|(_, p)| *p);
    let view = ViewBox::around(positions.iter().map(|(_, p)| canvas.map(*p)), size);

    // circle name, the three defining points, and every point said to lie on it
    let mut circles: Vec<(String, [&str; 3], Vec<&str>)> = vec![(
        "circumcircle".into(),
        ["A", "B", "C"],
        vec!["A", "B", "C", "L", "M", "N", "L'", "M'", "N'"],
    )];
    for hc in &r.hagge {
        let names: Vec<&str> = split_triple(hc.label.circle);
        circles.push((
            format!("Hagge circle of {}", hc.label.of),
            [names[0], names[1], names[2]],
            vec![names[0], names[1], names[2], "H"],
        ));
    }
    let vertex_circles: [(&str, [&str; 3], [&str; 4]); 3] = [
        ("BHC", ["B", "H", "C"], ["U", "U'", "U2", "U3"]),
        ("CHA", ["C", "H", "A"], ["V", "V'", "V3", "V1"]),
        ("AHB", ["A", "H", "B"], ["W", "W'", "W1", "W2"]),
    ];
    for (name, defining, reflections) in vertex_circles {
        let mut on = defining.to_vec();
        on.extend(reflections);
        circles.push((format!("circle {name}"), defining, on));
    }

    let mut body = String::new();
    let mut residuals = Vec::new();
    let (mut circles_drawn, mut lines_drawn) = (0, 0);

    let poly = |labels: [&str; 3], class: &str| -> Option<String> {
        let pts: Option<Vec<Vec2>> = labels.iter().map(|l| at(l)).collect();
        let pts = pts?;
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let q = canvas.map(*p);
                format!("{:.3},{:.3}", q[0], q[1])
            })
            .collect();
        Some(format!(
            r#"  <polygon class="{class}" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            coords.join(" ")
        ))
    };
    if let Some(s) = poly(["A", "B", "C"], "triangle-abc") {
        body.push_str(&s);
        body.push('\n');
    }
    match poly(["D", "E", "F"], "triangle-def") {
        Some(s) => {
            body.push_str(&s.replace(
                "stroke-width=\"1.5\"",
                "stroke-width=\"1\" stroke-dasharray=\"4,2\"",
            ));
            body.push('\n');
        }
        None => warnings.push("tangent triangle DEF has a vertex at infinity".into()),
    }

    for (i, (name, defining, on)) in circles.iter().enumerate() {
        let pts: Option<Vec<Vec2>> = defining.iter().map(|l| at(l)).collect();
        let Some(pts) = pts else {
            warnings.push(format!("{name} not drawn: a defining point is at infinity"));
            continue;
        };
        match circle_through(pts[0], pts[1], pts[2]) {
            Some((centre, radius)) => {
                for label in on {
                    if let Some(p) = at(label) {
                        residuals.push(Residual {
                            circle: name.clone(),
                            point: label.to_string(),
                            value: (dist(centre, p) - radius).abs() / radius.max(1e-300),
                        });
                    }
                }
                let c = canvas.map(centre);
                writeln!(
                    body,
                    r#"  <circle class="circle" data-name="{}" cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" {} stroke-width="1"/>"#,
                    escape(name),
                    c[0],
                    c[1],
                    radius * canvas.scale,
                    style_attrs(i)
                )
                .unwrap();
                circles_drawn += 1;
            }
            None => {
                warnings.push(format!(
                    "{name} is degenerate: its defining points are collinear or coincide"
                ));
                if let Some((p, q)) = farthest_pair(&pts) {
                    let (p, q) = (canvas.map(p), canvas.map(q));
                    writeln!(
                        body,
                        r#"  <line class="degenerate-circle" data-name="{}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {} stroke-width="1"/>"#,
                        escape(name),
                        p[0],
                        p[1],
                        q[0],
                        q[1],
                        style_attrs(i)
                    )
                    .unwrap();
                    lines_drawn += 1;
                }
            }
        }
    }

    match line_through_finite(&[at("P1"), at("P2"), at("P3")])
        .and_then(|(p, q)| clip(canvas.map(p), canvas.map(q), &view))
    {
        Some((p, q)) => {
            writeln!(
                body,
                r#"  <line class="polar" data-name="P1P2P3" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
                p[0], p[1], q[0], q[1]
            )
            .unwrap();
            lines_drawn += 1;
        }
        None => warnings.push("line P1P2P3 not drawn".into()),
    }

    for (label, p) in &positions {
        let q = canvas.map(*p);
        writeln!(
            body,
            r#"  <rect class="point" x="{:.3}" y="{:.3}" width="4" height="4" fill="black"/>"#,
            q[0] - 2.0,
            q[1] - 2.0
        )
        .unwrap();
        if options.labels {
            writeln!(
                body,
                r#"  <text class="label" x="{:.3}" y="{:.3}" font-family="serif" font-size="12">{}</text>"#,
                q[0] + 4.0,
                q[1] - 4.0,
                escape(label)
            )
            .unwrap();
        }
    }
    for (i, w) in warnings.iter().enumerate() {
        writeln!(
            body,
            r#"  <text class="warning" x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11" fill="firebrick">warning: {}</text>"#,
            view.x0 + 8.0,
            view.y0 + 16.0 + 14.0 * i as f64,
            escape(w)
        )
        .unwrap();
    }

    let svg = format!(
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="{x:.3} {y:.3} {w:.3} {h:.3}">
  <title>Circles BHC, CHA, AHB and five Hagge circles</title>
  <rect x="{x:.3}" y="{y:.3}" width="{w:.3}" height="{h:.3}" fill="white"/>
{body}</svg>
"#,
        s = options.size,
        x = view.x0,
        y = view.y0,
        w = view.x1 - view.x0,
        h = view.y1 - view.y0,
    );
    Ok(Figure {
        svg,
        positions,
        residuals,
        warnings,
        circles_drawn,
        lines_drawn,
    })
}

/// `"UV3W2"` → `["U", "V3", "W2"]`; primes stay with their letter.
fn split_triple(s: &str) -> Vec<&str> {
    let mut starts: Vec<usize> = s
        .char_indices()
        .filter(|(_, c)| c.is_ascii_uppercase())
        .map(|(i, _)| i)
        .collect();
    starts.push(s.len());
    starts.windows(2).map(|w| &s[w[0]..w[1]]).collect()
}

fn farthest_pair(pts: &[Vec2]) -> Option<(Vec2, Vec2)> {
    let mut best: Option<(Vec2, Vec2, f64)> = None;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = dist(pts[i], pts[j]);
            if best.is_none_or(|(_, _, b)| d > b) {
                best = Some((pts[i], pts[j], d));
            }
        }
    }
    best.filter(|(_, _, d)| *d > 0.0).map(|(p, q, _)| (p, q))
}

/// The two farthest-apart finite points of a line.
fn line_through_finite(pts: &[Option<Vec2>]) -> Option<(Vec2, Vec2)> {
    let finite: Vec<Vec2> = pts.iter().flatten().copied().collect();
    farthest_pair(&finite)
}

/// Visible region in canvas units. It covers the nominal canvas and grows
/// to take in far points such as the tangent triangle, up to a few canvas
/// widths in each direction.
#[derive(Debug, Clone, Copy, PartialEq)]
struct ViewBox {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl ViewBox {
    fn around(points: impl Iterator<Item = Vec2>, size: f64) -> ViewBox {
        let margin = 0.04 * size;
        let mut v = ViewBox {
            x0: 0.0,
            y0: 0.0,
            x1: size,
            y1: size,
        };
        for p in points {
            let (x, y) = (
                p[0].clamp(-2.0 * size, 3.0 * size),
                p[1].clamp(-2.0 * size, 3.0 * size),
            );
            v.x0 = v.x0.min(x - margin);
            v.y0 = v.y0.min(y - margin);
            v.x1 = v.x1.max(x + margin);
            v.y1 = v.y1.max(y + margin);
        }
        v
    }
}

/// The part of the infinite line `pq` inside the view box.
fn clip(p: Vec2, q: Vec2, view: &ViewBox) -> Option<(Vec2, Vec2)> {
    let d = [q[0] - p[0], q[1] - p[1]];
    let (lo_edge, hi_edge) = ([view.x0, view.y0], [view.x1, view.y1]);
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for k in 0..2 {
        if d[k].abs() < 1e-12 {
            if p[k] < lo_edge[k] || p[k] > hi_edge[k] {
                return None;
            }
            continue;
        }
        let (t0, t1) = ((lo_edge[k] - p[k]) / d[k], (hi_edge[k] - p[k]) / d[k]);
        lo = lo.max(t0.min(t1));
        hi = hi.min(t0.max(t1));
    }
    (lo < hi).then(|| {
        (
            [p[0] + lo * d[0], p[1] + lo * d[1]],
            [p[0] + hi * d[0], p[1] + hi * d[1]],
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_circle_names() {
        assert_eq!(split_triple("UVW"), ["U", "V", "W"]);
        assert_eq!(split_triple("U'V'W'"), ["U'", "V'", "W'"]);
        assert_eq!(split_triple("UV3W2"), ["U", "V3", "W2"]);
    }

    #[test]
    fn embedding_has_the_right_side_lengths() {
        let t = TriangleParams::<Rational>::new(4.into(), 5.into(), 6.into()).unwrap();
        let e = Embedding::new(&t).unwrap();
        let close = |x: f64, y: f64| ((x - y) / y).abs() < 1e-9;
        assert!(close(dist(e.b, e.c), 2.0));
        assert!(close(dist(e.c, e.a), 5f64.sqrt()));
        assert!(close(dist(e.a, e.b), 6f64.sqrt()));
        assert!(e.a[1] > 0.0);
        let a = e.to_cartesian(&ArealPoint::vertex_a()).unwrap();
        assert_eq!(a, e.a);
        let g = e
            .to_cartesian(&ArealPoint::from_ints(1, 1, 1).unwrap())
            .unwrap();
        assert!((g[0] - (e.a[0] + e.c[0]) / 3.0).abs() < 1e-12);
        assert!((g[1] - e.a[1] / 3.0).abs() < 1e-12);
        assert!(matches!(
            e.to_cartesian(&ArealPoint::from_ints(1, -1, 0).unwrap()),
            Err(FigureError::PointAtInfinity)
        ));
    }

    #[test]
    fn clipping_to_the_canvas() {
        let view = ViewBox::around(std::iter::empty(), 100.0);
        let (p, q) = clip([10.0, 10.0], [20.0, 20.0], &view).unwrap();
        assert_eq!((p, q), ([0.0, 0.0], [100.0, 100.0]));
        assert!(clip([200.0, 0.0], [200.0, 1.0], &view).is_none());
        let wide = ViewBox::around([[-50.0, 150.0]].into_iter(), 100.0);
        assert!(wide.x0 < -50.0 && wide.y1 > 150.0);
    }

    #[test]
    fn collinear_points_have_no_circle() {
        assert!(circle_through([0.0, 0.0], [1.0, 1.0], [2.0, 2.0]).is_none());
        let (c, r) = circle_through([1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]).unwrap();
        assert!(c[0].abs() < 1e-12 && c[1].abs() < 1e-12 && (r - 1.0).abs() < 1e-12);
    }
}
