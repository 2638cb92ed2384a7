//! Clifford parallelism on the lines of `P(L_F)`.
//!
//! Two lines `M`, `N` are parallel when `N = M b` for some nonzero `b` in
//! `L`. The same relation is decided geometrically in the scalar-extended
//! space `P(L (x) L)`: `M` and `N` are parallel iff some line of the absolute
//! pencil (the lines of `ker pi` through the absolute point) meets both
//! extended lines.
//!
//! Lines are subspaces of `F^4`, in coordinates with respect to the basis of
//! the space's tensor algebra.

use crate::field::{is_in_intermediate, random_f_elem, random_nonzero_elem, BasisL, FElem, FieldError, LElem};
use crate::linalg::{self, Vec4};
use crate::projective::{collinear, extend_scalars, transversal, LineF, LineL, PointF, PointL, ProjectiveError, Subspace};
use crate::report::CheckReport;
use crate::scalar::Field;
use crate::tensor::{LLElem, TensorAlgebra, TensorError};
use rand::Rng;
use serde::Serialize;
use serde_json::json;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("expected a line, got a subspace of dimension {0}")]
    NotALine(usize),
    #[error("expected a point, got a subspace of dimension {0}")]
    NotAPoint(usize),
    #[error("vectors are linearly dependent over F")]
    Dependent,
    #[error("{0} lies in F")]
    GeneratorInF(String),
    #[error("point does not lie in the absolute plane")]
    NotInAbsolutePlane,
    #[error("extended line meets the absolute plane at the absolute point")]
    HitsAbsolutePoint,
    #[error("solved annihilator of the absolute plane has dimension {0}, expected a point")]
    AnnihilatorNotPoint(usize),
    #[error("lines must be distinct and pass through F*1")]
    BadCosymplecticPair,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// The line through `F*1` parallel to a given line, i.e. an intermediate
/// field `K = F + F i`, together with a generator `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelClass {
    pub line: LineF,
    pub generator: LElem,
}

/// Result of [`CliffordSpace::double_space_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DoubleSpaceOutcome {
    /// `b` or `c` lies on the point `F a`, so a line is undefined.
    DegenerateInput,
    Checked {
        d: LElem,
        /// `F d` lies on both `M'` and `N'`.
        common_point: bool,
        /// `M, M', N, N'` are mutually distinct.
        mutually_distinct: bool,
        /// `Fa + Fd` parallel to `Fb + Fc`; only evaluated when the four
        /// lines are mutually distinct.
        diagonals_parallel: Option<bool>,
    },
}

/// The projective space `P(L_F)` with its extension `P(L (x) L)`, the
/// absolute plane and the absolute point.
#[derive(Clone, Debug)]
pub struct CliffordSpace {
    alg: Arc<TensorAlgebra>,
    plane: Subspace<LElem>,
    absolute_point: Subspace<LElem>,
}

impl CliffordSpace {
    /// Builds the absolute plane `ker pi` and solves for its annihilator
    /// using the algebra's multiplication.
    pub fn new(alg: Arc<TensorAlgebra>) -> Result<Self, CliffordError> {
        let plane = alg.absolute_plane();
        let absolute_point = alg.solved_annihilator();
        if absolute_point.dim() != 1 {
            return Err(CliffordError::AnnihilatorNotPoint(absolute_point.dim()));
        }
        Ok(CliffordSpace { alg, plane, absolute_point })
    }

    pub fn standard() -> Self {
        Self::new(TensorAlgebra::standard()).expect("standard algebra is well formed")
    }

    pub fn algebra(&self) -> &Arc<TensorAlgebra> {
        &self.alg
    }

    pub fn basis(&self) -> &BasisL {
        self.alg.basis()
    }

    pub fn absolute_plane(&self) -> &Subspace<LElem> {
        &self.plane
    }

    pub fn absolute_point(&self) -> &Subspace<LElem> {
        &self.absolute_point
    }

    pub fn vector_of(&self, x: &LElem) -> Vec4<FElem> {
        self.basis().coords(x)
    }

    pub fn elem_of(&self, c: &Vec4<FElem>) -> LElem {
        self.basis().recompose(c)
    }

    pub fn point_of(&self, x: &LElem) -> Result<PointF, CliffordError> {
        if x.is_zero() {
            return Err(CliffordError::ZeroScalar);
        }
        Ok(Subspace::point(self.vector_of(x))?)
    }

    /// The line `F a + F b`.
    pub fn line_through(&self, a: &LElem, b: &LElem) -> Result<LineF, CliffordError> {
        Subspace::line(self.vector_of(a), self.vector_of(b)).map_err(|_| CliffordError::Dependent)
    }

    /// The two canonical basis vectors of a line, as elements of `L`.
    pub fn line_elements(&self, m: &LineF) -> Result<[LElem; 2], CliffordError> {
        if m.dim() != 2 {
            return Err(CliffordError::NotALine(m.dim()));
        }
        Ok([self.elem_of(&m.basis()[0]), self.elem_of(&m.basis()[1])])
    }

    /// `M b = { m b : m in M }`.
    pub fn line_times_scalar(&self, m: &LineF, b: &LElem) -> Result<LineF, CliffordError> {
        if b.is_zero() {
            return Err(CliffordError::ZeroScalar);
        }
        let [x, y] = self.line_elements(m)?;
        self.line_through(&(&x * b), &(&y * b))
    }

    /// The parallel through `F*1`, obtained by dividing by any nonzero
    /// element of the line.
    pub fn canonical_rep(&self, m: &LineF) -> Result<ParallelClass, CliffordError> {
        let [x, _] = self.line_elements(m)?;
        let line = self.line_times_scalar(m, &x.try_inv()?)?;
        // The echelon basis of a line through F*1 is (1, 0, .., ..) plus one
        // row with zero first entry; that second row is outside F.
        let generator = line
            .basis()
            .iter()
            .map(|r| self.elem_of(r))
            .find(|e| !e.is_in_f())
            .expect("a line through F*1 has an element outside F");
        Ok(ParallelClass { line, generator })
    }

    pub fn is_parallel_algebraic(&self, m: &LineF, n: &LineF) -> Result<bool, CliffordError> {
        Ok(self.canonical_rep(m)?.line == self.canonical_rep(n)?.line)
    }

    /// The unique line through `F a` parallel to `M`.
    pub fn parallel_through(&self, m: &LineF, a: &PointF) -> Result<LineF, CliffordError> {
        let g = a.generator().ok_or(CliffordError::NotAPoint(a.dim()))?;
        let k = self.canonical_rep(m)?.line;
        self.line_times_scalar(&k, &self.elem_of(g))
    }

    /// `L(a(x)b + b(x)a)` for any basis `a, b` of `M`: the point where the
    /// extended line meets the absolute plane.
    pub fn absolute_intersection(&self, m: &LineF) -> Result<PointL, CliffordError> {
        let [a, b] = self.line_elements(m)?;
        let w = self.alg.alternation(&a, &b);
        Ok(Subspace::point(w.coords().clone())?)
    }

    /// The same point computed as `extend(M) meet ker pi`.
    pub fn absolute_intersection_by_meet(&self, m: &LineF) -> Result<PointL, CliffordError> {
        if m.dim() != 2 {
            return Err(CliffordError::NotALine(m.dim()));
        }
        let p = extend_scalars(m).meet(&self.plane);
        if p.dim() != 1 {
            return Err(CliffordError::NotAPoint(p.dim()));
        }
        Ok(p)
    }

    /// Parallelism decided in the extended space: both intersection points
    /// with the absolute plane lie on one line through the absolute point.
    pub fn is_parallel_geometric(&self, m: &LineF, n: &LineF) -> Result<bool, CliffordError> {
        let xm = self.absolute_intersection(m)?;
        let xn = self.absolute_intersection(n)?;
        if xm == self.absolute_point || xn == self.absolute_point {
            return Err(CliffordError::HitsAbsolutePoint);
        }
        Ok(collinear(&self.absolute_point, &xm, &xn))
    }

    /// The pencil line through the absolute point meeting both extended
    /// lines, when it exists.
    pub fn pencil_line(&self, m: &LineF, n: &LineF) -> Result<Option<LineL>, CliffordError> {
        if !self.is_parallel_geometric(m, n)? {
            return Ok(None);
        }
        let xm = self.absolute_intersection(m)?;
        Ok(Some(self.absolute_point.join(&xm)))
    }

    /// Extends `(1, i)` to a basis `(1, i, j, ij)`, taking `j` as the first
    /// of `u, v, uv` that keeps `1, i, j` independent.
    pub fn complete_basis(&self, i: &LElem) -> Result<BasisL, CliffordError> {
        if i.is_in_f() {
            return Err(CliffordError::GeneratorInF(i.to_string()));
        }
        for j in [LElem::u(), LElem::v(), LElem::monomial(1, 1)] {
            if let Ok(b) = BasisL::new(i.clone(), j) {
                return Ok(b);
            }
        }
        unreachable!("1, i and one of u, v, uv are independent")
    }

    /// `p = 1(x)i + i(x)1` and `jp + r` for the completed basis, in this
    /// space's tensor frame.
    fn k_rational_frame(&self, i: &LElem) -> Result<(LLElem, LLElem, BasisL), CliffordError> {
        let b = self.complete_basis(i)?;
        let one = LElem::one();
        let p = self.alg.alternation(&one, b.i());
        let r = self.alg.alternation(&one, b.k()).add(&self.alg.alternation(b.i(), b.j()))?;
        let jp_r = p.scale(b.j()).add(&r)?;
        Ok((p, jp_r, b))
    }

    /// The unique `F[i]`-rational line of the absolute plane: the join of
    /// the absolute point with `L(1(x)i + i(x)1)`.
    pub fn k_rational_line_in_pi(&self, i: &LElem) -> Result<LineL, CliffordError> {
        if i.is_in_f() {
            return Err(CliffordError::GeneratorInF(i.to_string()));
        }
        let p = self.alg.alternation(&LElem::one(), i);
        Ok(self.absolute_point.join(&Subspace::point(p.coords().clone())?))
    }

    /// Whether a point of the absolute plane is `F[i]`-rational.
    ///
    /// Such points are `L((y0 + i y1) p + (y2 + i y3)(jp + r))`, so the
    /// point must lie on `Lp + L(jp + r)` and, written as
    /// `c1 p + c2 (jp + r)`, have `c2 = 0` or `c1 / c2` in `F[i]`.
    pub fn is_k_rational_point(&self, point: &PointL, i: &LElem) -> Result<bool, CliffordError> {
        let x = point.generator().ok_or(CliffordError::NotAPoint(point.dim()))?;
        if !self.plane.contains(point) {
            return Err(CliffordError::NotInAbsolutePlane);
        }
        let (p, w, _) = self.k_rational_frame(i)?;
        let line = Subspace::line(p.coords().clone(), w.coords().clone())?;
        if !line.contains(point) {
            return Ok(false);
        }
        let Some((c1, c2)) = solve_pair(x, p.coords(), w.coords()) else {
            return Ok(false);
        };
        if c2.is_zero() {
            return Ok(true);
        }
        Ok(is_in_intermediate(&c1.try_div(&c2)?, i)?)
    }

    /// Checks the double space axiom for `M = Fa + Fb`, `N = Fa + Fc`.
    pub fn double_space_check(&self, a: &LElem, b: &LElem, c: &LElem) -> Result<DoubleSpaceOutcome, CliffordError> {
        let a_inv = a.try_inv().map_err(|_| CliffordError::ZeroScalar)?;
        let (Ok(m), Ok(n)) = (self.line_through(a, b), self.line_through(a, c)) else {
            return Ok(DoubleSpaceOutcome::DegenerateInput);
        };
        let m2 = self.line_times_scalar(&m, &(&a_inv * c))?;
        let n2 = self.line_times_scalar(&n, &(&a_inv * b))?;
        let d = &(&a_inv * b) * c;
        let fd = self.point_of(&d)?;
        let common_point = m2.contains(&fd) && n2.contains(&fd);
        let lines = [&m, &m2, &n, &n2];
        let mutually_distinct = (0..4).all(|x| (x + 1..4).all(|y| lines[x] != lines[y]));
        let diagonals_parallel = if mutually_distinct {
            let ad = self.line_through(a, &d)?;
            let bc = self.line_through(b, c)?;
            Some(self.is_parallel_algebraic(&ad, &bc)?)
        } else {
            None
        };
        Ok(DoubleSpaceOutcome::Checked { d, common_point, mutually_distinct, diagonals_parallel })
    }

    /// Random point `F(alpha m1 + beta m2)` of a line.
    pub fn random_point_on<R: Rng + ?Sized>(&self, m: &Subspace<FElem>, rng: &mut R, bound: u32) -> Option<PointF> {
        let alpha = random_f_elem(rng, bound);
        let beta = random_f_elem(rng, bound);
        let v = linalg::vec_add(&linalg::vec_scale(&alpha, &m.basis()[0]), &linalg::vec_scale(&beta, &m.basis()[1]));
        Subspace::point(v).ok()
    }

    /// Samples reguli through three parallel lines `M, M b1, M b2` and
    /// checks that every regulus line is parallel to `M` and that the
    /// transversals (lines of the opposite regulus) are mutually parallel.
    pub fn regulus_regularity_sample<R: Rng + ?Sized>(
        &self,
        m: &LineF,
        samples: usize,
        rng: &mut R,
        bound: u32,
    ) -> Result<CheckReport, CliffordError> {
        let mut report = CheckReport::new("regular_spread");
        while report.samples + report.skipped < samples {
            match self.regulus_trial(m, rng, bound)? {
                None => report.skip(),
                Some(Ok(())) => report.pass(),
                Some(Err(w)) => report.fail(w),
            }
        }
        Ok(report)
    }

    fn regulus_trial<R: Rng + ?Sized>(
        &self,
        m: &LineF,
        rng: &mut R,
        bound: u32,
    ) -> Result<Option<Result<(), serde_json::Value>>, CliffordError> {
        let b1 = random_nonzero_elem(rng, bound);
        let b2 = random_nonzero_elem(rng, bound);
        let m1 = self.line_times_scalar(m, &b1)?;
        let m2 = self.line_times_scalar(m, &b2)?;
        if *m == m1 || *m == m2 || m1 == m2 {
            return Ok(None);
        }
        let mut opposite = Vec::with_capacity(3);
        for _ in 0..3 {
            let Some(pt) = self.random_point_on(m, rng, bound) else {
                return Ok(None);
            };
            match transversal(&pt, &m1, &m2) {
                Ok(t) => opposite.push(t),
                Err(_) => return Ok(None),
            }
        }
        if opposite[0] == opposite[1] || opposite[0] == opposite[2] || opposite[1] == opposite[2] {
            return Ok(None);
        }
        for t in &opposite[1..] {
            if !self.is_parallel_algebraic(&opposite[0], t)? {
                return Ok(Some(Err(json!({
                    "property": "opposite regulus lines are parallel",
                    "line": m, "b1": b1, "b2": b2,
                    "transversals": [&opposite[0], t],
                }))));
            }
        }
        let Some(q) = self.random_point_on(&opposite[0], rng, bound) else {
            return Ok(None);
        };
        let regulus_line = match transversal(&q, &opposite[1], &opposite[2]) {
            Ok(l) => l,
            Err(_) => return Ok(None),
        };
        if !self.is_parallel_algebraic(&regulus_line, m)? {
            return Ok(Some(Err(json!({
                "property": "regulus lines lie in the parallel class",
                "line": m, "b1": b1, "b2": b2, "regulus_line": regulus_line,
            }))));
        }
        Ok(Some(Ok(())))
    }
}

/// Solves `x = c1 p + c2 w` for independent `p, w` (assuming a solution exists).
fn solve_pair(x: &Vec4<LElem>, p: &Vec4<LElem>, w: &Vec4<LElem>) -> Option<(LElem, LElem)> {
    for a in 0..4 {
        for b in a + 1..4 {
            let det = p[a].mul(&w[b]).sub(&p[b].mul(&w[a]));
            if det.is_zero() {
                continue;
            }
            let inv = det.inv()?;
            let c1 = x[a].mul(&w[b]).sub(&x[b].mul(&w[a])).mul(&inv);
            let c2 = p[a].mul(&x[b]).sub(&p[b].mul(&x[a])).mul(&inv);
            return Some((c1, c2));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> LElem {
        s.parse().unwrap()
    }

    fn space() -> CliffordSpace {
        CliffordSpace::standard()
    }

    #[test]
    fn scalar_multiples_of_lines() {
        let s = space();
        let m = s.line_through(&e("1"), &e("u")).unwrap();
        assert_eq!(s.line_times_scalar(&m, &e("1")).unwrap(), m);
        let mv = s.line_times_scalar(&m, &e("v")).unwrap();
        assert_eq!(mv, s.line_through(&e("v"), &e("u*v")).unwrap());
        let b = e("(u + v^2) / (u*v + 1)");
        let mb = s.line_times_scalar(&m, &b).unwrap();
        assert_eq!(s.line_times_scalar(&mb, &b).unwrap(), m);
        assert_eq!(s.line_times_scalar(&m, &e("0")), Err(CliffordError::ZeroScalar));
    }

    #[test]
    fn canonical_representatives() {
        let s = space();
        let fu = s.line_through(&e("1"), &e("u")).unwrap();
        let class = s.canonical_rep(&fu).unwrap();
        assert_eq!(class.line, fu);
        assert_eq!(class.generator, e("u"));
        let other = s.line_through(&e("v"), &e("u*v")).unwrap();
        assert_eq!(s.canonical_rep(&other).unwrap().line, fu);
    }

    #[test]
    fn parallel_examples() {
        let s = space();
        let fu = s.line_through(&e("1"), &e("u")).unwrap();
        let fv = s.line_through(&e("1"), &e("v")).unwrap();
        assert!(s.is_parallel_algebraic(&fu, &fu).unwrap());
        assert!(!s.is_parallel_algebraic(&fu, &fv).unwrap());
        assert!(!s.is_parallel_geometric(&fu, &fv).unwrap());
        let shifted = s.line_times_scalar(&fu, &e("v + 1")).unwrap();
        assert!(s.is_parallel_algebraic(&fu, &shifted).unwrap());
        assert!(s.is_parallel_geometric(&fu, &shifted).unwrap());
    }

    #[test]
    fn parallel_through_point() {
        let s = space();
        let fu = s.line_through(&e("1"), &e("u")).unwrap();
        let fv_point = s.point_of(&e("v")).unwrap();
        let n = s.parallel_through(&fu, &fv_point).unwrap();
        assert_eq!(n, s.line_through(&e("v"), &e("u*v")).unwrap());
        let on_m = s.point_of(&e("u + 1")).unwrap();
        assert_eq!(s.parallel_through(&fu, &on_m).unwrap(), fu);
    }

    #[test]
    fn absolute_intersection_of_fu() {
        let s = space();
        let fu = s.line_through(&e("1"), &e("u")).unwrap();
        let (p, _, _) = s.algebra().ideal_basis();
        let lp = Subspace::point(p.coords().clone()).unwrap();
        assert_eq!(s.absolute_intersection(&fu).unwrap(), lp);
        assert_eq!(s.absolute_intersection_by_meet(&fu).unwrap(), lp);
    }

    #[test]
    fn k_rational_line_for_u() {
        let s = space();
        let line = s.k_rational_line_in_pi(&e("u")).unwrap();
        let expected = Subspace::line([e("u*v"), e("v"), e("u"), e("1")], [e("u"), e("1"), e("0"), e("0")]).unwrap();
        assert_eq!(line, expected);
        assert!(s.absolute_plane().contains(&line));
        assert!(s.k_rational_line_in_pi(&e("u^2")).is_err());
    }

    #[test]
    fn k_rational_points() {
        let s = space();
        let (p, _, r) = s.algebra().ideal_basis();
        let lp = Subspace::point(p.coords().clone()).unwrap();
        assert!(s.is_k_rational_point(&lp, &e("u")).unwrap());
        assert!(!s.is_k_rational_point(s.absolute_point(), &e("u")).unwrap());
        let jp_r = p.scale(&e("v")).add(&r).unwrap();
        let pt = Subspace::point(jp_r.coords().clone()).unwrap();
        assert!(s.is_k_rational_point(&pt, &e("u")).unwrap());
        let outside = Subspace::point(linalg::unit_vec::<LElem>(0)).unwrap();
        assert_eq!(s.is_k_rational_point(&outside, &e("u")), Err(CliffordError::NotInAbsolutePlane));
    }

    #[test]
    fn double_space_basic() {
        let s = space();
        let out = s.double_space_check(&e("1"), &e("u"), &e("v")).unwrap();
        assert_eq!(
            out,
            DoubleSpaceOutcome::Checked {
                d: e("u*v"),
                common_point: true,
                mutually_distinct: true,
                diagonals_parallel: Some(true)
            }
        );
        assert_eq!(s.double_space_check(&e("u"), &e("u^3"), &e("v")).unwrap(), DoubleSpaceOutcome::DegenerateInput);
        assert_eq!(s.double_space_check(&e("0"), &e("u"), &e("v")), Err(CliffordError::ZeroScalar));
    }
}
