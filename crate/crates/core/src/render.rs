//! SVG pictures of the 2-simplex: cylinder partitions and clouds of attracting
//! fixed points.
//!
//! The simplex is drawn as an equilateral triangle with `e₀` at the top, `e₁`
//! bottom-left and `e₂` bottom-right. Floats appear only here.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ifs::{Ifs, Word};
use crate::linalg::{cylinder_vertices, IntMatrix};

pub const MAX_PARTITION_DEPTH: usize = 12;
pub const MAX_CLOUD_WORD_LEN: usize = 14;

/// Triangle side length in SVG user units.
pub const SIDE: f64 = 1000.0;
pub const MARGIN: f64 = 20.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub stroke_width: f64,
    pub stroke: String,
    /// Fill colors, indexed by the first digit of a cylinder's word.
    pub palette: Vec<String>,
    pub point_radius: f64,
    pub point_color: String,
}

impl Default for Style {
    fn default() -> Self {
        Self {
            stroke_width: 0.5,
            stroke: "#202020".into(),
            palette: vec!["#f4d35e".into(), "#ee964b".into(), "#6aa9d8".into(), "#9bc53d".into()],
            point_radius: 0.8,
            point_color: "#1d3557".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    pub points: Vec<[f64; 2]>,
    /// Palette slot.
    pub color: usize,
}

impl Polygon {
    /// Shoelace area.
    pub fn area(&self) -> f64 {
        let n = self.points.len();
        let twice: f64 = (0..n)
            .map(|k| {
                let [x0, y0] = self.points[k];
                let [x1, y1] = self.points[(k + 1) % n];
                x0 * y1 - x1 * y0
            })
            .sum();
        twice.abs() / 2.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub polygons: Vec<Polygon>,
    pub points: Vec<[f64; 2]>,
    pub width: f64,
    pub height: f64,
}

impl Scene {
    fn empty() -> Self {
        Self {
            polygons: Vec::new(),
            points: Vec::new(),
            width: SIDE + 2.0 * MARGIN,
            height: SIDE * 3f64.sqrt() / 2.0 + 2.0 * MARGIN,
        }
    }

    /// Cylinder scenes emit exactly one `<polygon>` per cylinder; point
    /// clouds get the bare triangle as a backdrop.
    pub fn to_svg(&self, style: &Style) -> String {
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.4} {h:.4}">"#,
            w = self.width,
            h = self.height
        );
        if self.polygons.is_empty() {
            let _ = writeln!(
                s,
                r#"<polygon points="{}" fill="white" stroke="{}" stroke-width="{}"/>"#,
                fmt_points(&triangle_polygon().points),
                style.stroke,
                style.stroke_width
            );
        }
        for p in &self.polygons {
            let fill = style
                .palette
                .get(p.color % style.palette.len().max(1))
                .map(String::as_str)
                .unwrap_or("none");
            let _ = writeln!(
                s,
                r#"<polygon points="{}" fill="{}" stroke="{}" stroke-width="{}"/>"#,
                fmt_points(&p.points),
                fill,
                style.stroke,
                style.stroke_width
            );
        }
        for [x, y] in &self.points {
            let _ = writeln!(
                s,
                r#"<circle cx="{x:.4}" cy="{y:.4}" r="{}" fill="{}"/>"#,
                style.point_radius, style.point_color
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn fmt_points(points: &[[f64; 2]]) -> String {
    points
        .iter()
        .map(|[x, y]| format!("{x:.4},{y:.4}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn corners() -> [[f64; 2]; 3] {
    let h = SIDE * 3f64.sqrt() / 2.0;
    [
        [MARGIN + SIDE / 2.0, MARGIN],
        [MARGIN, MARGIN + h],
        [MARGIN + SIDE, MARGIN + h],
    ]
}

/// Affine image of a barycentric point.
pub fn to_plane(bary: &[f64]) -> [f64; 2] {
    let c = corners();
    let mut out = [0.0, 0.0];
    for (w, v) in bary.iter().zip(c.iter()) {
        out[0] += w * v[0];
        out[1] += w * v[1];
    }
    out
}

/// The full triangle as a polygon.
pub fn triangle_polygon() -> Polygon {
    Polygon {
        points: corners().to_vec(),
        color: 0,
    }
}

pub fn triangle_area() -> f64 {
    SIDE * SIDE * 3f64.sqrt() / 4.0
}

fn check_plane(ifs: &Ifs) -> Result<()> {
    if ifs.dim() != 2 {
        return Err(Error::Dimension {
            n: ifs.dim(),
            reason: "only the 2-simplex is rendered",
        });
    }
    Ok(())
}

/// One triangle per word of length `depth`, in lexicographic word order.
pub fn partition_scene(ifs: &Ifs, depth: usize) -> Result<Scene> {
    check_plane(ifs)?;
    if depth > MAX_PARTITION_DEPTH {
        return Err(Error::ResourceLimit(format!(
            "partition depth {depth} exceeds {MAX_PARTITION_DEPTH}"
        )));
    }
    let mut level = vec![(Word::empty(), IntMatrix::identity(3)?)];
    for _ in 0..depth {
        level = level
            .iter()
            .flat_map(|(w, a)| {
                (0..ifs.len() as u8).map(move |d| {
                    let mut w2 = w.clone();
                    w2.push(d);
                    (w2, a * ifs.branch(d))
                })
            })
            .collect();
    }
    let mut scene = Scene::empty();
    scene.polygons = level
        .iter()
        .map(|(w, a)| Polygon {
            points: cylinder_vertices(a).iter().map(|v| to_plane(&v.to_f64())).collect(),
            color: w.digits().first().map_or(0, |&d| d as usize),
        })
        .collect();
    Ok(scene)
}

pub fn partition_svg(ifs: &Ifs, depth: usize, style: &Style) -> Result<String> {
    Ok(partition_scene(ifs, depth)?.to_svg(style))
}

/// Attracting direction of a proximal matrix, or `None`.
///
/// Squares the matrix 40 times with renormalization; for a proximal matrix the
/// result is numerically rank one, every nonzero column pointing along the
/// dominant eigendirection. The direction is accepted when all columns agree
/// within `margin` and it is invariant under the matrix within `margin`.
pub fn attracting_direction(a: &[Vec<f64>], margin: f64) -> Option<Vec<f64>> {
    let n = a.len();
    let normalize = |m: &mut Vec<Vec<f64>>| {
        let max = m.iter().flatten().fold(0.0f64, |x, &y| x.max(y));
        if max > 0.0 {
            m.iter_mut().flatten().for_each(|x| *x /= max);
        }
        max > 0.0
    };
    let mut b = a.to_vec();
    if !normalize(&mut b) {
        return None;
    }
    for _ in 0..40 {
        let mut c = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                if b[i][k] != 0.0 {
                    for j in 0..n {
                        c[i][j] += b[i][k] * b[k][j];
                    }
                }
            }
        }
        b = c;
        if !normalize(&mut b) {
            return None;
        }
    }
    let cols: Vec<Vec<f64>> = (0..n)
        .filter_map(|j| {
            let s: f64 = (0..n).map(|i| b[i][j]).sum();
            (s > 1e-300).then(|| (0..n).map(|i| b[i][j] / s).collect())
        })
        .collect();
    let first = cols.first()?;
    let spread = cols
        .iter()
        .map(|c| c.iter().zip(first).map(|(x, y)| (x - y).abs()).sum::<f64>())
        .fold(0.0, f64::max);
    if spread > margin {
        return None;
    }
    let img: Vec<f64> = (0..n).map(|i| (0..n).map(|j| a[i][j] * first[j]).sum()).collect();
    let s: f64 = img.iter().sum();
    let drift: f64 = img.iter().zip(first).map(|(x, y)| (x / s - y).abs()).sum();
    (drift <= margin).then(|| first.clone())
}

pub const DEFAULT_PROXIMALITY_MARGIN: f64 = 1e-6;

/// Attracting fixed points of the proximal products of length `1..=max_len`,
/// deduplicated on a 10⁻⁸ grid and listed in lexicographic order of barycentric coordinates.
pub fn fixed_point_cloud(ifs: &Ifs, max_len: usize, margin: f64) -> Result<Vec<Vec<f64>>> {
    check_plane(ifs)?;
    if max_len > MAX_CLOUD_WORD_LEN {
        return Err(Error::ResourceLimit(format!(
            "cloud word length {max_len} exceeds {MAX_CLOUD_WORD_LEN}"
        )));
    }
    let branches: Vec<Vec<Vec<f64>>> = ifs.branches().iter().map(IntMatrix::to_f64_rows).collect();
    let mut found: BTreeMap<[i64; 3], Vec<f64>> = BTreeMap::new();
    let mut level: Vec<Vec<Vec<f64>>> = vec![identity_f64(3)];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|a| branches.iter().map(move |b| mul_f64(a, b)))
            .collect();
        for a in &level {
            if let Some(u) = attracting_direction(a, margin) {
                let key = [0, 1, 2].map(|k| (u[k] * 1e8).round() as i64);
                found.entry(key).or_insert(u);
            }
        }
    }
    Ok(found.into_values().collect())
}

pub fn fixed_point_cloud_scene(ifs: &Ifs, max_len: usize, margin: f64) -> Result<Scene> {
    let mut scene = Scene::empty();
    scene.points = fixed_point_cloud(ifs, max_len, margin)?
        .iter()
        .map(|u| to_plane(u))
        .collect();
    Ok(scene)
}

pub fn fixed_point_cloud_svg(ifs: &Ifs, max_len: usize, margin: f64, style: &Style) -> Result<String> {
    Ok(fixed_point_cloud_scene(ifs, max_len, margin)?.to_svg(style))
}

fn identity_f64(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

fn mul_f64(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0.0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// Exact measure of a cylinder as a float, for comparing with drawn areas.
pub fn measure_f64(a: &IntMatrix) -> f64 {
    crate::linalg::cylinder_measure(a).to_f64().unwrap_or(f64::NAN)
}
