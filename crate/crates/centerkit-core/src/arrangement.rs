//! Generic line arrangements with multiplicities: validation, exact
//! intersection and bounded-face combinatorics, and the numeric center
//! critical points of `f = l_1^{n_1} ... l_{d+1}^{n_{d+1}}`.
//!
//! All incidence decisions (parallelism, concurrency, face structure) are
//! made in exact rational arithmetic; floating point appears only inside
//! the Newton solver for critical points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::num::{gcd_u32, rat, sign, to_f64, Rat, Ring};
use crate::poly::Poly;

/// A line `l(x, y) = a x + b y + c` with exact rational coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Line {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl Line {
    /// Panics if `(a, b) = (0, 0)`: that is not a line.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "degenerate line: (a, b) = (0, 0)"
        );
        Line { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Line::new(rat(a, 1), rat(b, 1), rat(c, 1))
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        &self.a * x + &self.b * y + &self.c
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        to_f64(&self.a) * x + to_f64(&self.b) * y + to_f64(&self.c)
    }

    pub fn poly(&self) -> Poly<Rat> {
        Poly::linear(self.a.clone(), self.b.clone(), self.c.clone())
    }

    /// Parallel (or equal) iff the direction determinant vanishes.
    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    /// Intersection point of two non-parallel lines.
    pub fn intersect(&self, other: &Line) -> (Rat, Rat) {
        let det = &self.a * &other.b - &self.b * &other.a;
        assert!(!det.is_zero(), "intersecting parallel lines");
        let x = (&self.b * &other.c - &self.c * &other.b) / det.clone();
        let y = (&self.c * &other.a - &self.a * &other.c) / det;
        (x, y)
    }
}

/// A generic line arrangement with positive multiplicities; the global
/// input object of the whole crate.
#[derive(Clone, Debug)]
pub struct LineArrangement {
    lines: Vec<Line>,
    multiplicities: Vec<u32>,
}

/// One violated invariant, with its witness.
#[derive(Clone, PartialEq, Debug)]
pub enum Violation {
    TooFewLines { count: usize },
    ZeroMultiplicity { index: usize },
    ParallelPair { i: usize, j: usize },
    TriplePoint { i: usize, j: usize, k: usize, point: (Rat, Rat) },
    MultiplicityGcd { gcd: u32 },
}

impl Violation {
    pub fn describe(&self) -> String {
        match self {
            Violation::TooFewLines { count } => {
                format!("arrangement needs at least 3 lines, got {count}")
            }
            Violation::ZeroMultiplicity { index } => {
                format!("multiplicity of line {index} must be positive")
            }
            Violation::ParallelPair { i, j } => format!("lines {i} and {j} are parallel"),
            Violation::TriplePoint { i, j, k, point } => format!(
                "triple point at ({}, {}) on lines {i}, {j}, {k}",
                point.0, point.1
            ),
            Violation::MultiplicityGcd { gcd } => {
                format!("multiplicities share the common divisor {gcd}")
            }
        }
    }
}

/// Outcome of `validate`: pass, or every violated invariant found.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum ArrangementError {
    Invalid(Violation),
    NewtonDiverged { face: usize },
    RootEscapedFace { face: usize },
}

impl core::fmt::Display for ArrangementError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ArrangementError::Invalid(v) => write!(f, "invalid arrangement: {}", v.describe()),
            ArrangementError::NewtonDiverged { face } => {
                write!(f, "Newton iteration diverged on face {face}")
            }
            ArrangementError::RootEscapedFace { face } => {
                write!(f, "critical-point iterate escaped face {face}")
            }
        }
    }
}

/// Intersection of lines `i < j`, with the pairwise gcd `e = (n_i, n_j)`.
#[derive(Clone, PartialEq, Debug)]
pub struct IntersectionPoint {
    pub i: usize,
    pub j: usize,
    pub point: (Rat, Rat),
    pub e: u32,
}

/// One side of a bounded face: the supporting line and its multiplicity.
/// Side `k` runs anticlockwise from `vertices[k]` to `vertices[k+1]`.
#[derive(Clone, PartialEq, Debug)]
pub struct FaceSide {
    pub line: usize,
    pub multiplicity: u32,
}

/// A bounded face of the arrangement: a convex polygon listed anticlockwise.
#[derive(Clone, PartialEq, Debug)]
pub struct BoundedFace {
    pub vertices: Vec<(Rat, Rat)>,
    pub sides: Vec<FaceSide>,
    /// Sign of every `l_k` on the open face.
    pub signs: Vec<i32>,
}

impl BoundedFace {
    pub fn num_sides(&self) -> usize {
        self.sides.len()
    }

    /// Rational centroid of the vertex set; interior by convexity.
    pub fn centroid(&self) -> (Rat, Rat) {
        let n = Rat::from_int(self.vertices.len() as i64);
        let mut sx = Rat::zero();
        let mut sy = Rat::zero();
        for (x, y) in &self.vertices {
            sx = sx + x.clone();
            sy = sy + y.clone();
        }
        (sx / n.clone(), sy / n)
    }

    /// Line pair meeting at corner `k` (= `vertices[k]`), i.e. the lines of
    /// the sides before and after it.
    pub fn corner_lines(&self, k: usize) -> (usize, usize) {
        let s = self.sides.len();
        let before = self.sides[(k + s - 1) % s].line;
        let after = self.sides[k].line;
        (before, after)
    }

    pub fn contains_f64(&self, lines: &[Line], x: f64, y: f64) -> bool {
        self.signs.iter().enumerate().all(|(k, &s)| {
            let v = lines[k].eval_f64(x, y);
            (s > 0 && v > 0.0) || (s < 0 && v < 0.0)
        })
    }
}

/// Numeric center critical point inside a bounded face.
#[derive(Clone, Debug)]
pub struct CenterCriticalPoint {
    pub face: usize,
    pub point: (f64, f64),
    pub value: f64,
    pub gradient_residual: f64,
    /// Faces whose critical value coincides with this one within tolerance.
    pub coincident_with: Vec<usize>,
}

impl LineArrangement {
    /// Panics only on shape errors (empty, length mismatch); mathematical
    /// invariants are reported by [`validate`](Self::validate).
    pub fn new(lines: Vec<Line>, multiplicities: Vec<u32>) -> Self {
        assert_eq!(
            lines.len(),
            multiplicities.len(),
            "one multiplicity per line"
        );
        LineArrangement { lines, multiplicities }
    }

    pub fn from_ints(lines: &[(i64, i64, i64)], multiplicities: &[u32]) -> Self {
        let lines = lines
            .iter()
            .map(|&(a, b, c)| Line::from_ints(a, b, c))
            .collect();
        LineArrangement::new(lines, multiplicities.to_vec())
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Number of lines is `d + 1`.
    pub fn d(&self) -> usize {
        self.lines.len() - 1
    }

    /// Total multiplicity `n = sum n_i`.
    pub fn n(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Pairwise gcd `e_{ij} = (n_i, n_j)`.
    pub fn e(&self, i: usize, j: usize) -> u32 {
        gcd_u32(self.multiplicities[i], self.multiplicities[j])
    }

    pub fn pairwise_coprime(&self) -> bool {
        let m = &self.multiplicities;
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| gcd_u32(m[i], m[j]) == 1))
    }

    /// `f = prod l_i^{n_i}` as an expanded polynomial.
    pub fn f_poly(&self) -> Poly<Rat> {
        let mut f = Poly::constant(Rat::from_int(1));
        for (line, &m) in self.lines.iter().zip(&self.multiplicities) {
            f = f * line.poly().pow(m);
        }
        f
    }

    pub fn f_eval_f64(&self, x: f64, y: f64) -> f64 {
        self.lines
            .iter()
            .zip(&self.multiplicities)
            .map(|(l, &m)| l.eval_f64(x, y).powi(m as i32))
            .product()
    }

    /// Checks every arrangement invariant and reports all violations:
    /// line count, positive multiplicities with overall gcd 1, no parallel
    /// pair, no triple point. Parallel lines meet at infinity, so banning
    /// them keeps "no triple points" meaningful in the affine chart.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let count = self.lines.len();
        if count < 3 {
            violations.push(Violation::TooFewLines { count });
        }
        for (index, &m) in self.multiplicities.iter().enumerate() {
            if m == 0 {
                violations.push(Violation::ZeroMultiplicity { index });
            }
        }
        let g = self.multiplicities.iter().fold(0u32, |acc, &m| gcd_u32(acc, m));
        if g > 1 {
            violations.push(Violation::MultiplicityGcd { gcd: g });
        }
        for i in 0..count {
            for j in i + 1..count {
                if self.lines[i].is_parallel(&self.lines[j]) {
                    violations.push(Violation::ParallelPair { i, j });
                }
            }
        }
        // Triple points: any third line through a pairwise intersection.
        for i in 0..count {
            for j in i + 1..count {
                if self.lines[i].is_parallel(&self.lines[j]) {
                    continue;
                }
                let p = self.lines[i].intersect(&self.lines[j]);
                for k in j + 1..count {
                    if self.lines[k].eval(&p.0, &p.1).is_zero() {
                        violations.push(Violation::TriplePoint { i, j, k, point: p.clone() });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    fn require_valid(&self) -> Result<(), ArrangementError> {
        let report = self.validate();
        match report.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(ArrangementError::Invalid(v)),
        }
    }

    /// All `d(d+1)/2` pairwise intersection points, exact.
    pub fn intersections(&self) -> Result<Vec<IntersectionPoint>, ArrangementError> {
        self.require_valid()?;
        let mut out = Vec::new();
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                let point = self.lines[i].intersect(&self.lines[j]);
                out.push(IntersectionPoint { i, j, point, e: self.e(i, j) });
            }
        }
        Ok(out)
    }

    /// Enumerates the `d(d-1)/2` bounded faces.
    ///
    /// Candidate cells are read off from the sign vectors realized in the
    /// four quadrants around each vertex; a cell is bounded iff its
    /// recession cone is trivial, which for a 2D cone only needs the `2(d+1)`
    /// line directions as candidate rays. Faces of a line arrangement are
    /// convex, so the vertex set sorted anticlockwise is the whole story.
    pub fn bounded_faces(&self) -> Result<Vec<BoundedFace>, ArrangementError> {
        let pts = self.intersections()?;
        let nl = self.lines.len();

        let mut seen: alloc::collections::BTreeSet<Vec<i32>> = alloc::collections::BTreeSet::new();
        let mut faces = Vec::new();
        for p in &pts {
            let base: Vec<i32> = self
                .lines
                .iter()
                .map(|l| sign(&l.eval(&p.point.0, &p.point.1)))
                .collect();
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut sv = base.clone();
                sv[p.i] = si;
                sv[p.j] = sj;
                if !seen.insert(sv.clone()) {
                    continue;
                }
                if self.cell_is_bounded(&sv) {
                    faces.push(self.build_face(&pts, sv));
                }
            }
        }
        // Deterministic order: by lexicographic sign vector.
        faces.sort_by(|a, b| a.signs.cmp(&b.signs));
        let _ = nl;
        Ok(faces)
    }

    /// Recession cone of `{x : s_k l_k(x) >= 0}` is nontrivial iff one of
    /// the line directions `+-(-b_k, a_k)` satisfies every inequality.
    fn cell_is_bounded(&self, sv: &[i32]) -> bool {
        for line in &self.lines {
            for flip in [1i64, -1] {
                let dir = (
                    -line.b.clone() * Rat::from_int(flip),
                    line.a.clone() * Rat::from_int(flip),
                );
                let ok = self.lines.iter().zip(sv).all(|(l, &s)| {
                    let v = &l.a * &dir.0 + &l.b * &dir.1;
                    sign(&v) * s >= 0
                });
                if ok {
                    return false;
                }
            }
        }
        true
    }

    fn build_face(&self, pts: &[IntersectionPoint], sv: Vec<i32>) -> BoundedFace {
        // Vertices: intersections whose non-tight lines match the signs.
        let mut verts: Vec<((Rat, Rat), (usize, usize))> = Vec::new();
        for p in pts {
            let ok = self.lines.iter().enumerate().all(|(k, l)| {
                k == p.i || k == p.j || sign(&l.eval(&p.point.0, &p.point.1)) == sv[k]
            });
            if ok {
                verts.push((p.point.clone(), (p.i, p.j)));
            }
        }
        assert!(verts.len() >= 3, "bounded cell with fewer than 3 vertices");

        // Anticlockwise sort around the centroid, exact angular comparator.
        let m = Rat::from_int(verts.len() as i64);
        let cx = verts.iter().map(|(v, _)| v.0.clone()).fold(Rat::zero(), |a, b| a + b) / m.clone();
        let cy = verts.iter().map(|(v, _)| v.1.clone()).fold(Rat::zero(), |a, b| a + b) / m;
        verts.sort_by(|(u, _), (v, _)| {
            let du = (&u.0 - &cx, &u.1 - &cy);
            let dv = (&v.0 - &cx, &v.1 - &cy);
            angular_order(&du, &dv)
        });

        // Consecutive vertices share exactly one line: the supporting side.
        let s = verts.len();
        let mut sides = Vec::with_capacity(s);
        for k in 0..s {
            let (_, (i1, j1)) = &verts[k];
            let (_, (i2, j2)) = &verts[(k + 1) % s];
            let common: Vec<usize> = [*i1, *j1]
                .into_iter()
                .filter(|t| *t == *i2 || *t == *j2)
                .collect();
            assert_eq!(common.len(), 1, "adjacent face vertices must share one line");
            sides.push(FaceSide {
                line: common[0],
                multiplicity: self.multiplicities[common[0]],
            });
        }
        BoundedFace {
            vertices: verts.into_iter().map(|(v, _)| v).collect(),
            sides,
            signs: sv,
        }
    }

    /// Newton iteration for the unique critical point of `f` inside each
    /// bounded face (the maximum of `log |f|`, which is strictly concave
    /// there), started from the centroid. Also flags coincident critical
    /// values: `|v1 - v2| <= 1e-9 max(1, |v1|)` is reported, not fatal.
    pub fn center_critical_points(&self) -> Result<Vec<CenterCriticalPoint>, ArrangementError> {
        let faces = self.bounded_faces()?;
        let mut out = Vec::new();
        for (fi, face) in faces.iter().enumerate() {
            let c = face.centroid();
            let (mut x, mut y) = (to_f64(&c.0), to_f64(&c.1));
            let mut converged = false;
            for _ in 0..100 {
                let (gx, gy, jxx, jxy, jyy) = self.log_gradient(x, y);
                let det = jxx * jyy - jxy * jxy;
                if det == 0.0 || !det.is_finite() {
                    break;
                }
                let dx = (gx * jyy - gy * jxy) / det;
                let dy = (gy * jxx - gx * jxy) / det;
                x -= dx;
                y -= dy;
                let (gx2, gy2, ..) = self.log_gradient(x, y);
                if (gx2 * gx2 + gy2 * gy2) < 1e-28 {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(ArrangementError::NewtonDiverged { face: fi });
            }
            if !face.contains_f64(&self.lines, x, y) {
                return Err(ArrangementError::RootEscapedFace { face: fi });
            }
            let (gx, gy, ..) = self.log_gradient(x, y);
            out.push(CenterCriticalPoint {
                face: fi,
                point: (x, y),
                value: self.f_eval_f64(x, y),
                gradient_residual: (gx * gx + gy * gy).sqrt(),
                coincident_with: Vec::new(),
            });
        }
        for i in 0..out.len() {
            for j in 0..out.len() {
                if i != j {
                    let (v1, v2) = (out[i].value, out[j].value);
                    if (v1 - v2).abs() <= 1e-9 * v1.abs().max(1.0) {
                        out[i].coincident_with.push(j);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Gradient and Hessian of `sum n_i log |l_i|` at `(x, y)`.
    fn log_gradient(&self, x: f64, y: f64) -> (f64, f64, f64, f64, f64) {
        let (mut gx, mut gy, mut jxx, mut jxy, mut jyy) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for (line, &m) in self.lines.iter().zip(&self.multiplicities) {
            let v = line.eval_f64(x, y);
            let (a, b) = (to_f64(&line.a), to_f64(&line.b));
            let m = m as f64;
            gx += m * a / v;
            gy += m * b / v;
            jxx -= m * a * a / (v * v);
            jxy -= m * a * b / (v * v);
            jyy -= m * b * b / (v * v);
        }
        (gx, gy, jxx, jxy, jyy)
    }
}

/// Exact anticlockwise angular order of two nonzero vectors, angles taken
/// in `[0, 2pi)` from the positive x-axis.
fn angular_order(u: &(Rat, Rat), v: &(Rat, Rat)) -> core::cmp::Ordering {
    fn half(p: &(Rat, Rat)) -> u8 {
        // 0 for angle in [0, pi), 1 for [pi, 2pi).
        if p.1.is_positive() || (p.1.is_zero() && p.0.is_positive()) {
            0
        } else {
            1
        }
    }
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    // Same half-plane: compare by cross product.
    let cross = &u.0 * &v.1 - &u.1 * &v.0;
    if cross.is_positive() {
        core::cmp::Ordering::Less
    } else if cross.is_negative() {
        core::cmp::Ordering::Greater
    } else {
        core::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(mults: &[u32]) -> LineArrangement {
        // x, y, x + y - 1
        LineArrangement::from_ints(&[(1, 0, 0), (0, 1, 0), (1, 1, -1)], mults)
    }

    #[test]
    fn standard_triangle_validates() {
        assert!(triangle(&[1, 1, 1]).validate().is_valid());
    }

    #[test]
    fn triple_point_detected() {
        let arr = LineArrangement::from_ints(&[(1, 0, 0), (0, 1, 0), (1, 1, 0)], &[1, 1, 1]);
        let report = arr.validate();
        assert!(!report.is_valid());
        assert!(matches!(
            report.violations[0],
            Violation::TriplePoint { i: 0, j: 1, k: 2, .. }
        ));
    }

    #[test]
    fn multiplicity_gcd_detected() {
        let report = triangle(&[2, 4, 6]).validate();
        assert_eq!(report.violations, vec![Violation::MultiplicityGcd { gcd: 2 }]);
    }

    #[test]
    fn parallel_pair_detected() {
        let arr = LineArrangement::from_ints(&[(1, 0, 0), (1, 0, -1), (0, 1, 0)], &[1, 1, 1]);
        let report = arr.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ParallelPair { i: 0, j: 1 })));
    }

    #[test]
    fn triangle_intersections() {
        let pts = triangle(&[1, 1, 1]).intersections().unwrap();
        assert_eq!(pts.len(), 3);
        let coords: Vec<(Rat, Rat)> = pts.iter().map(|p| p.point.clone()).collect();
        assert!(coords.contains(&(rat(0, 1), rat(0, 1))));
        assert!(coords.contains(&(rat(1, 1), rat(0, 1))));
        assert!(coords.contains(&(rat(0, 1), rat(1, 1))));
    }

    #[test]
    fn four_lines_six_points_three_faces() {
        let arr = LineArrangement::from_ints(
            &[(1, 0, 0), (0, 1, 0), (1, 1, -1), (1, -1, 3)],
            &[1, 1, 1, 1],
        );
        assert!(arr.validate().is_valid());
        assert_eq!(arr.intersections().unwrap().len(), 6);
        assert_eq!(arr.bounded_faces().unwrap().len(), 3);
    }

    #[test]
    fn triangle_single_face_is_anticlockwise() {
        let faces = triangle(&[1, 2, 3]).bounded_faces().unwrap();
        assert_eq!(faces.len(), 1);
        let f = &faces[0];
        assert_eq!(f.num_sides(), 3);
        // Positive signed area = anticlockwise.
        let mut area2 = Rat::zero();
        let s = f.vertices.len();
        for k in 0..s {
            let (x1, y1) = &f.vertices[k];
            let (x2, y2) = &f.vertices[(k + 1) % s];
            area2 = area2 + (x1 * y2 - x2 * y1);
        }
        assert!(area2.is_positive());
        // Side multiplicities come from their supporting lines.
        for side in &f.sides {
            assert_eq!(side.multiplicity, [1, 2, 3][side.line]);
        }
    }

    #[test]
    fn critical_point_of_triangle() {
        // grad(log |xy(x+y-1)|) = 0 at exactly (1/3, 1/3), f there = -1/27.
        let arr = triangle(&[1, 1, 1]);
        let crits = arr.center_critical_points().unwrap();
        assert_eq!(crits.len(), 1);
        let c = &crits[0];
        assert!((c.point.0 - 1.0 / 3.0).abs() < 1e-12);
        assert!((c.point.1 - 1.0 / 3.0).abs() < 1e-12);
        assert!((c.value + 1.0 / 27.0).abs() < 1e-14);
        assert!(c.gradient_residual < 1e-10);
    }

    #[test]
    fn critical_point_of_weighted_triangle() {
        // For x y^2 (x+y-1)^3 the exact critical point is (1/6, 1/3),
        // value -1/432 (solve 1/x = 2/y = -3/(x+y-1)).
        let arr = triangle(&[1, 2, 3]);
        let crits = arr.center_critical_points().unwrap();
        assert_eq!(crits.len(), 1);
        let c = &crits[0];
        assert!((c.point.0 - 1.0 / 6.0).abs() < 1e-12);
        assert!((c.point.1 - 1.0 / 3.0).abs() < 1e-12);
        assert!((c.value + 1.0 / 432.0).abs() < 1e-14);
        assert!(c.value < 0.0);
        assert!(c.gradient_residual < 1e-10);
    }

    #[test]
    fn symmetric_arrangement_critical_point_on_axis() {
        // Lines x, y, x+y-1 with equal multiplicities are symmetric in
        // x <-> y, so the critical point sits on the diagonal.
        let crits = triangle(&[1, 1, 1]).center_critical_points().unwrap();
        assert!((crits[0].point.0 - crits[0].point.1).abs() < 1e-12);
    }
}
