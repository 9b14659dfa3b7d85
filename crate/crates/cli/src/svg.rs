//! Stereographic pictures of the positive complex in rank 3.
//!
//! Membership of chambers in `C^{>0}` comes from the exact layer; floats are
//! used only to place points on the page.

use std::fmt::Write;

use num_traits::ToPrimitive;

use cosetlab_core::{choose_rho, Group, IntersectionLattice, PositiveComplex, Rational, Rays};

use crate::commands::load_group;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

const SIZE: f64 = 520.0;
const RADIUS: f64 = 240.0;
const ARC_STEPS: usize = 24;

type V3 = [f64; 3];

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalize(a: V3) -> V3 {
    let n = dot(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

fn to_f64(v: &[Rational]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect()
}

/// Orthonormal coordinates on the span of the roots.
struct Frame {
    basis: Vec<Vec<f64>>,
}

impl Frame {
    fn new(group: &Group) -> Frame {
        let mut basis: Vec<Vec<f64>> = Vec::new();
        for r in group.simple_roots() {
            let mut v = to_f64(r);
            for b in &basis {
                let c: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            basis.push(v.into_iter().map(|x| x / n).collect());
        }
        Frame { basis }
    }

    fn coords(&self, v: &[f64]) -> V3 {
        let c = |k: usize| self.basis[k].iter().zip(v).map(|(x, y)| x * y).sum::<f64>();
        [c(0), c(1), c(2)]
    }
}

struct Projection {
    north: V3,
    e1: V3,
    e2: V3,
}

impl Projection {
    /// Projects from `-north` onto the plane orthogonal to `north`; the
    /// closed upper hemisphere lands in the unit disk.
    fn new(north: V3) -> Projection {
        let axis = (0..3)
            .min_by(|&a, &b| north[a].abs().partial_cmp(&north[b].abs()).unwrap())
            .unwrap();
        let mut t = [0.0; 3];
        t[axis] = 1.0;
        let c = dot(t, north);
        let e1 = normalize([t[0] - c * north[0], t[1] - c * north[1], t[2] - c * north[2]]);
        let e2 = cross(north, e1);
        Projection { north, e1, e2 }
    }

    fn point(&self, x: V3) -> (f64, f64) {
        let x = normalize(x);
        let d = 1.0 + dot(x, self.north);
        let (u, v) = (dot(x, self.e1) / d, dot(x, self.e2) / d);
        (SIZE / 2.0 + RADIUS * u, SIZE / 2.0 - RADIUS * v)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn path(points: &[(f64, f64)], close: bool) -> String {
    let mut d = String::new();
    for (k, &(x, y)) in points.iter().enumerate() {
        let _ = write!(d, "{}{} {}", if k == 0 { "M" } else { " L" }, num(x), num(y));
    }
    if close {
        d.push_str(" Z");
    }
    d
}

/// Points along the great-circle arc from `a` to `b`, excluding `b`.
fn arc(a: V3, b: V3) -> impl Iterator<Item = V3> {
    (0..ARC_STEPS).map(move |k| {
        let t = k as f64 / ARC_STEPS as f64;
        normalize([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])])
    })
}

pub fn render(cfg: &RunConfig) -> CliResult<String> {
    let g = load_group(cfg)?;
    if g.rank() != 3 {
        return Err(CliError::Usage(format!("svg needs a rank-3 group, got {}", g.symbol())));
    }
    let l = IntersectionLattice::new(&g);
    let rays = Rays::new(&g);
    let mode = cfg.rho_modes().into_iter().next().expect("at least one vector mode");
    let rho = choose_rho(&g, &rays, &mode)?;
    let frame = Frame::new(&g);
    let north = normalize(frame.coords(&to_f64(&rho.ambient)));
    let proj = Projection::new(north);
    let weights: Vec<Vec<f64>> = g.fundamental_weights().iter().map(|w| to_f64(w)).collect();
    let ray = |w, j| {
        let c = rays.ray(w, j);
        let amb: Vec<f64> =
            (0..g.ambient_dim()).map(|k| c.iter().zip(&weights).map(|(&x, wt)| x as f64 * wt[k]).sum()).collect();
        frame.coords(&amb)
    };
    let complex = PositiveComplex::new(&g, &l, &rays, rho);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE
    );
    let _ = writeln!(
        out,
        "<title>Positive complex of {} ({} facets)</title>",
        g.symbol(),
        complex.facets().len()
    );
    out.push_str(concat!(
        "<style>\n",
        "  .facet { fill: #9ecae1; stroke: none; }\n",
        "  .fundamental { fill: #3182bd; }\n",
        "  .mirror { fill: none; stroke: #555555; stroke-width: 1; }\n",
        "  .horizon { fill: none; stroke: #d62728; stroke-width: 2.5; }\n",
        "</style>\n"
    ));
    out.push_str("<g id=\"facets\">\n");
    for &w in complex.facets() {
        let v: Vec<V3> = (0..3).map(|j| ray(w, j)).collect();
        let pts: Vec<(f64, f64)> =
            (0..3).flat_map(|k| arc(v[k], v[(k + 1) % 3])).map(|x| proj.point(x)).collect();
        let class = if w == g.identity() { "facet fundamental" } else { "facet" };
        let _ = writeln!(out, r#"  <path class="{class}" d="{}"/>"#, path(&pts, true));
    }
    out.push_str("</g>\n<g id=\"mirrors\">\n");
    for k in 0..g.num_reflections() {
        let beta = normalize(frame.coords(&to_f64(&g.root_vector(k))));
        let along = cross(beta, north);
        if dot(along, along) < 1e-18 {
            continue;
        }
        let u = normalize(along);
        let mut v = cross(beta, u);
        if dot(v, north) < 0.0 {
            v = [-v[0], -v[1], -v[2]];
        }
        let pts: Vec<(f64, f64)> = (0..=4 * ARC_STEPS)
            .map(|s| {
                let t = std::f64::consts::PI * s as f64 / (4 * ARC_STEPS) as f64;
                let (c, si) = (t.cos(), t.sin());
                proj.point([c * u[0] + si * v[0], c * u[1] + si * v[1], c * u[2] + si * v[2]])
            })
            .collect();
        let _ = writeln!(out, r#"  <path class="mirror" d="{}"/>"#, path(&pts, false));
    }
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        r#"<circle class="horizon" cx="{c}" cy="{c}" r="{r}"/>"#,
        c = num(SIZE / 2.0),
        r = num(RADIUS)
    );
    out.push_str("</svg>\n");
    Ok(out)
}
