//! Clifford translations `x -> x b` as matrices over `F` and, after scalar
//! extension, over `L` in the ideal basis `(1(x)1, p, q, r)`.

use crate::field::{BasisL, FElem, LElem};
use crate::linalg::{self, Mat4, Vec4};
use crate::projective::{extend_scalars, f_rational_witness, LineF, ProjectiveError, Subspace};
use crate::clifford::{CliffordError, CliffordSpace};
use crate::field::{random_elem, random_nonzero_elem};
use crate::report::CheckReport;
use crate::scalar::Field;
use crate::tensor::{IdealCoords, TensorAlgebra};
use rand::Rng;
use serde::Serialize;
use serde_json::json;
use std::sync::Arc;

/// The matrix of `x -> x b` over `F` with respect to `(1, i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationF {
    pub b: LElem,
    pub basis: BasisL,
    pub matrix: Mat4<FElem>,
}

impl TranslationF {
    pub fn new(b: &LElem, basis: &BasisL) -> Result<Self, CliffordError> {
        if b.is_zero() {
            return Err(CliffordError::ZeroScalar);
        }
        let elems = basis.elements();
        let rows = std::array::from_fn(|s| basis.coords(&(&elems[s] * b)));
        Ok(TranslationF { b: b.clone(), basis: basis.clone(), matrix: Mat4::from_rows(rows) })
    }

    /// The same matrix written from the coordinates `b0..b3` of `b` and the
    /// squares of `i, j, k`.
    pub fn displayed_pattern(b: &LElem, basis: &BasisL) -> Mat4<FElem> {
        let [b0, b1, b2, b3] = basis.coords(b);
        let (ii, jj, kk) = (basis.i().square(), basis.j().square(), basis.k().square());
        Mat4::from_rows([
            [b0.clone(), b1.clone(), b2.clone(), b3.clone()],
            [&ii * &b1, b0.clone(), &ii * &b3, b2.clone()],
            [&jj * &b2, &jj * &b3, b0.clone(), b1.clone()],
            [&kk * &b3, &jj * &b2, &ii * &b1, b0],
        ])
    }

    pub fn apply_line(&self, m: &LineF) -> LineF {
        m.map(&self.matrix)
    }
}

/// The matrix of `z -> z (1(x)b)` on `L (x) L`, in tensor and ideal coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationL {
    pub b: LElem,
    pub ideal_coords: IdealCoords,
    pub tensor_matrix: Mat4<LElem>,
    pub ideal_matrix: Mat4<LElem>,
}

impl TranslationL {
    pub fn new(alg: &Arc<TensorAlgebra>, b: &LElem) -> Result<Self, CliffordError> {
        if b.is_zero() {
            return Err(CliffordError::ZeroScalar);
        }
        let h = alg.embed_second(b);
        let tensor_matrix = alg.right_multiplication_matrix(&h)?;
        let ideal_matrix = alg.ideal_change_matrix().mul(&tensor_matrix).mul(alg.ideal_change_inverse());
        Ok(TranslationL { b: b.clone(), ideal_coords: h.to_ideal(), tensor_matrix, ideal_matrix })
    }

    /// The upper triangular pattern built from the ideal coordinates
    /// `(b0', b1', b2', b3')` of `1(x)b`.
    pub fn displayed_pattern(&self) -> Mat4<LElem> {
        let [c0, c1, c2, c3] = self.ideal_coords.0.clone();
        let z = LElem::zero();
        Mat4::from_rows([
            [c0.clone(), c1.clone(), c2.clone(), c3],
            [z.clone(), c0.clone(), z.clone(), c2],
            [z.clone(), z.clone(), c0.clone(), c1],
            [z.clone(), z.clone(), z, c0],
        ])
    }

    /// `diag((i,1;0,i), (i,1;0,i))` for a generator `i`.
    pub fn block_form(i: &LElem) -> Mat4<LElem> {
        let mut m = Mat4::scalar(i);
        m.0[0][1] = LElem::one();
        m.0[2][3] = LElem::one();
        m
    }

    /// Fixed points in tensor coordinates: the left kernel of `T - b I`.
    pub fn fixed_points(&self) -> Subspace<LElem> {
        let shifted = self.tensor_matrix.sub(&Mat4::scalar(&self.b));
        let cols: Vec<Vec4<LElem>> = (0..4).map(|t| shifted.column(t)).collect();
        Subspace::span(linalg::orthogonal_complement(&cols))
    }

    /// Characteristic polynomial `det(X I - T)`, coefficients from degree 0.
    pub fn characteristic_polynomial(&self) -> Vec<LElem> {
        let m: [[Vec<LElem>; 4]; 4] = std::array::from_fn(|s| {
            std::array::from_fn(|t| {
                let c = self.tensor_matrix.0[s][t].neg();
                if s == t {
                    vec![c, LElem::one()]
                } else {
                    vec![c]
                }
            })
        });
        let rows: Vec<usize> = (0..4).collect();
        let cols: Vec<usize> = (0..4).collect();
        trim(laplace(&m, &rows, &cols))
    }
}

fn poly_add(a: &[LElem], b: &[LElem]) -> Vec<LElem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|d| match (a.get(d), b.get(d)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn poly_mul(a: &[LElem], b: &[LElem]) -> Vec<LElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![LElem::zero(); a.len() + b.len() - 1];
    for (s, x) in a.iter().enumerate() {
        for (t, y) in b.iter().enumerate() {
            out[s + t] = out[s + t].add(&x.mul(y));
        }
    }
    out
}

fn trim(mut p: Vec<LElem>) -> Vec<LElem> {
    while p.last().is_some_and(LElem::is_zero) {
        p.pop();
    }
    p
}

/// Cofactor expansion along the first remaining row.
fn laplace(m: &[[Vec<LElem>; 4]; 4], rows: &[usize], cols: &[usize]) -> Vec<LElem> {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc = Vec::new();
    for (n, &c) in cols.iter().enumerate() {
        let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let mut term = poly_mul(&m[rows[0]][c], &laplace(m, &rows[1..], &minor_cols));
        if n % 2 == 1 {
            term = term.iter().map(LElem::neg).collect();
        }
        acc = poly_add(&acc, &term);
    }
    acc
}

/// `(X + b)^4 = X^4 + b^4` in characteristic 2.
pub fn expected_characteristic_polynomial(b: &LElem) -> Vec<LElem> {
    let b4 = b.pow(4);
    vec![b4, LElem::zero(), LElem::zero(), LElem::zero(), LElem::one()]
}

/// The line `A + L(1(x)b + b(x)1)` for `b` outside `F`.
pub fn expected_fixed_line(space: &CliffordSpace, b: &LElem) -> Result<Subspace<LElem>, CliffordError> {
    if b.is_in_f() {
        return Err(CliffordError::GeneratorInF(b.to_string()));
    }
    let p = space.algebra().alternation(&LElem::one(), b);
    Ok(space.absolute_point().join(&Subspace::point(p.coords().clone())?))
}

/// Fixed points of the translation by a generator `i` outside `F`.
pub fn fixed_point_subspace(space: &CliffordSpace, i: &LElem) -> Result<Subspace<LElem>, CliffordError> {
    if i.is_in_f() {
        return Err(CliffordError::GeneratorInF(i.to_string()));
    }
    Ok(TranslationL::new(space.algebra(), i)?.fixed_points())
}

fn random_l_vector<R: Rng + ?Sized>(rng: &mut R, bound: u32) -> Vec4<LElem> {
    std::array::from_fn(|_| random_elem(rng, bound))
}

/// Sampled checks that a plane is invariant iff it contains the fixed
/// line, and that the action on the absolute plane is an elation with
/// centre the absolute point.
pub fn fixed_structure_check<R: Rng + ?Sized>(
    space: &CliffordSpace,
    i: &LElem,
    samples: usize,
    rng: &mut R,
    bound: u32,
) -> Result<CheckReport, CliffordError> {
    let mut report = CheckReport::new("fixed_structure");
    let t = TranslationL::new(space.algebra(), i)?;
    let fixed = t.fixed_points();
    let alg = space.algebra();
    let h = alg.embed_second(i);
    for n in 0..samples {
        let x = random_l_vector(rng, bound);
        let Ok(pt) = Subspace::point(x) else {
            report.skip();
            continue;
        };
        // Alternate generic planes with planes through the fixed line.
        let plane = if n % 2 == 0 { pt.annihilator() } else { fixed.join(&pt) };
        if plane.dim() != 3 {
            report.skip();
            continue;
        }
        let invariant = plane.map(&t.tensor_matrix) == plane;
        report.record(invariant == plane.contains(&fixed), || {
            json!({"property": "plane invariant iff it contains the fixed line", "i": i, "plane": plane})
        });

        let w = &space.absolute_plane().basis()[n % 3];
        let z = alg.element(linalg::vec_scale(&random_nonzero_elem(rng, bound), w));
        let image = z.mul(&h)?;
        let diff = image.add(&z.scale(i))?;
        report.record(space.absolute_point().contains_vector(diff.coords()), || {
            json!({"property": "elation with centre the absolute point", "i": i, "z": z})
        });
    }
    Ok(report)
}

/// Sampled checks on the lines fixed by the translation with generator `i`.
pub fn invariant_line_congruence_check<R: Rng + ?Sized>(
    space: &CliffordSpace,
    i: &LElem,
    samples: usize,
    rng: &mut R,
    bound: u32,
) -> Result<CheckReport, CliffordError> {
    let mut report = CheckReport::new("invariant_line_congruence");
    let t = TranslationL::new(space.algebra(), i)?;
    let fixed = t.fixed_points();
    let alg = space.algebra();
    let class = space.line_through(&LElem::one(), i)?;
    for _ in 0..samples {
        // A line through x and its image is invariant since the map is involutory.
        let x = random_l_vector(rng, bound);
        let image = t.tensor_matrix.apply(&x);
        let line = Subspace::span([x, image]);
        if line.dim() == 2 {
            report.record(line.map(&t.tensor_matrix) == line && line.meets(&fixed), || {
                json!({"property": "invariant lines meet the fixed line", "i": i, "line": line})
            });
        } else {
            report.skip();
        }

        let b = random_nonzero_elem(rng, bound);
        let parallel = extend_scalars(&space.line_times_scalar(&class, &b)?);
        report.record(parallel.map(&t.tensor_matrix) == parallel, || {
            json!({"property": "extended class lines are invariant", "i": i, "b": b})
        });

        let a = random_nonzero_elem(rng, bound);
        let c = random_nonzero_elem(rng, bound);
        match space.line_through(&a, &c) {
            Ok(m) if !space.is_parallel_algebraic(&m, &class)? => {
                let ext = extend_scalars(&m);
                report.record(ext.map(&t.tensor_matrix) != ext, || {
                    json!({"property": "non-parallel extended lines are not invariant", "i": i, "line": m})
                });
            }
            _ => report.skip(),
        }

        // An F-rational invariant line: the join of 1(x)y and its image.
        let y = random_nonzero_elem(rng, bound);
        let p1 = alg.embed_second(&y);
        let p2 = Subspace::point(t.tensor_matrix.apply(p1.coords()))?;
        let p1 = Subspace::point(p1.coords().clone())?;
        let (Some(w1), Some(w2)) = (f_rational_witness(&p1)?, f_rational_witness(&p2)?) else {
            report.fail(json!({"property": "image of an F-rational point is F-rational", "i": i, "y": y}));
            continue;
        };
        match Subspace::line(w1, w2) {
            Ok(m) => report.record(space.is_parallel_algebraic(&m, &class)?, || {
                json!({"property": "F-rational invariant lines are parallel to F[i]", "i": i, "line": m})
            }),
            Err(ProjectiveError::Dimension { .. }) => report.skip(),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> LElem {
        s.parse().unwrap()
    }

    #[test]
    fn identity_translation() {
        let t = TranslationF::new(&e("1"), &BasisL::standard()).unwrap();
        assert_eq!(t.matrix, Mat4::identity());
        assert_eq!(TranslationF::new(&e("0"), &BasisL::standard()), Err(CliffordError::ZeroScalar));
    }

    #[test]
    fn translation_by_i() {
        let basis = BasisL::standard();
        let t = TranslationF::new(&e("u"), &basis).unwrap();
        let uu = FElem::new(e("u^2")).unwrap();
        let (z, o) = (FElem::zero(), FElem::one());
        let expected = Mat4::from_rows([
            [z.clone(), o.clone(), z.clone(), z.clone()],
            [uu.clone(), z.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone(), o],
            [z.clone(), z.clone(), uu, z],
        ]);
        assert_eq!(t.matrix, expected);
        assert_eq!(TranslationF::displayed_pattern(&e("u"), &basis), expected);
    }

    #[test]
    fn pattern_and_square_for_mixed_element() {
        let basis = BasisL::new(e("u + v^2"), e("v / (u^2 + 1)")).unwrap();
        let b = e("(u*v + 1) / (v + u)");
        let t = TranslationF::new(&b, &basis).unwrap();
        assert_eq!(t.matrix, TranslationF::displayed_pattern(&b, &basis));
        assert_eq!(t.matrix.mul(&t.matrix), Mat4::scalar(&b.square()));
    }

    #[test]
    fn ideal_matrix_block_form() {
        let space = CliffordSpace::standard();
        let t = TranslationL::new(space.algebra(), &e("u")).unwrap();
        assert_eq!(t.ideal_matrix, TranslationL::block_form(&e("u")));
        assert_eq!(t.ideal_matrix, t.displayed_pattern());
        let f = TranslationL::new(space.algebra(), &e("u^2 + v^2")).unwrap();
        assert_eq!(f.ideal_matrix, Mat4::scalar(&e("u^2 + v^2")));
    }

    #[test]
    fn ideal_matrix_pattern_general() {
        let space = CliffordSpace::standard();
        let b = e("(u + v + u*v) / (u^2 + 1)");
        let t = TranslationL::new(space.algebra(), &b).unwrap();
        assert!(t.ideal_matrix.is_upper_triangular());
        assert_eq!(t.ideal_matrix, t.displayed_pattern());
        assert_eq!(t.ideal_coords.0[0], b);
    }

    #[test]
    fn fixed_line_and_char_poly() {
        let space = CliffordSpace::standard();
        let fixed = fixed_point_subspace(&space, &e("u")).unwrap();
        let (p, _, r) = space.algebra().ideal_basis();
        assert_eq!(fixed, Subspace::line(r.coords().clone(), p.coords().clone()).unwrap());
        let t = TranslationL::new(space.algebra(), &e("u")).unwrap();
        assert_eq!(t.characteristic_polynomial(), expected_characteristic_polynomial(&e("u")));
        assert!(fixed_point_subspace(&space, &e("v^2")).is_err());
    }

    #[test]
    fn sampled_structures() {
        use rand::SeedableRng;
        let space = CliffordSpace::standard();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let r = fixed_structure_check(&space, &e("u"), 6, &mut rng, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = invariant_line_congruence_check(&space, &e("u + v"), 6, &mut rng, 2).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
