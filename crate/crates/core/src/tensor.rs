//! The four-dimensional commutative `L`-algebra `L (x)_F L`.
//!
//! Elements are stored by their coordinates with respect to
//! `(1(x)1, 1(x)i, 1(x)j, 1(x)k)` for a basis `(1, i, j, k)` of `L` over `F`.
//! Scalars from `L` act on the first tensor factor, so `x (x) y` has
//! coordinates `x * coords_F(y)`.

use crate::field::{BasisL, FElem, LElem};
use crate::linalg::{self, vec_add, vec_scale, Mat4, Vec4};
use crate::projective::Subspace;
use crate::scalar::Field;
use serde::Serialize;
use std::array;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("operands belong to different coordinate frames")]
    FrameMismatch,
    #[error("element lies in the kernel of pi and has no inverse")]
    NotInvertible,
    #[error("g^2 = {square} differs from (pi g)^2 (1(x)1) = {expected}")]
    SquareIdentity { square: String, expected: String },
}

/// Multiplication table and change-of-basis data for one basis of `L`.
///
/// `constants[s][t]` holds the coordinates of `b_s * b_t`, so that
/// `(1(x)b_s)(1(x)b_t) = sum_m constants[s][t][m] (1(x)b_m)`.
pub struct TensorAlgebra {
    basis: BasisL,
    constants: [[Vec4<LElem>; 4]; 4],
    frame: u64,
    /// Rows: `1(x)1, p, q, r` in tensor coordinates.
    ideal_change: Mat4<LElem>,
    ideal_change_inv: Mat4<LElem>,
    mutated: bool,
}

impl fmt::Debug for TensorAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TensorAlgebra")
            .field("i", self.basis.i())
            .field("j", self.basis.j())
            .field("frame", &self.frame)
            .field("mutated", &self.mutated)
            .finish()
    }
}

impl TensorAlgebra {
    pub fn new(basis: BasisL) -> Arc<Self> {
        let elems = basis.elements();
        let constants = array::from_fn(|s| {
            array::from_fn(|t| linalg::vec_map(&basis.coords(&(&elems[s] * &elems[t])), |c| c.to_l()))
        });
        Arc::new(Self::assemble(basis, constants, false))
    }

    pub fn standard() -> Arc<Self> {
        Self::new(BasisL::standard())
    }

    fn assemble(basis: BasisL, constants: [[Vec4<LElem>; 4]; 4], mutated: bool) -> Self {
        let mut h = DefaultHasher::new();
        basis.i().hash(&mut h);
        basis.j().hash(&mut h);
        constants.hash(&mut h);
        let frame = h.finish();
        let (i, j, k) = (basis.i().clone(), basis.j().clone(), basis.k().clone());
        let one = LElem::one();
        let zero = LElem::zero;
        let ideal_change = Mat4::from_rows([
            [one.clone(), zero(), zero(), zero()],
            [i.clone(), one.clone(), zero(), zero()],
            [j.clone(), zero(), one.clone(), zero()],
            [k, j, i, one],
        ]);
        let ideal_change_inv = ideal_change.inverse().expect("unitriangular change of basis");
        TensorAlgebra { basis, constants, frame, ideal_change, ideal_change_inv, mutated }
    }

    /// A copy with one structure constant flipped between zero and one.
    /// Used to check that the verification suites are not vacuous.
    pub fn with_flipped_constant(&self, s: usize, t: usize, m: usize) -> Arc<Self> {
        let mut constants = self.constants.clone();
        let c = &mut constants[s][t][m];
        *c = if c.is_zero() { LElem::one() } else { LElem::zero() };
        Arc::new(Self::assemble(self.basis.clone(), constants, true))
    }

    pub fn basis(&self) -> &BasisL {
        &self.basis
    }

    pub fn structure_constant(&self, s: usize, t: usize, m: usize) -> &LElem {
        &self.constants[s][t][m]
    }

    pub fn is_mutated(&self) -> bool {
        self.mutated
    }

    pub fn frame(&self) -> u64 {
        self.frame
    }

    /// Rows `1(x)1, p, q, r` in tensor coordinates.
    pub fn ideal_change_matrix(&self) -> &Mat4<LElem> {
        &self.ideal_change
    }

    pub fn ideal_change_inverse(&self) -> &Mat4<LElem> {
        &self.ideal_change_inv
    }
}

/// An element of `L (x) L` in the tensor coordinates of its algebra.
#[derive(Clone)]
pub struct LLElem {
    z: Vec4<LElem>,
    alg: Arc<TensorAlgebra>,
}

impl PartialEq for LLElem {
    fn eq(&self, other: &Self) -> bool {
        self.alg.frame == other.alg.frame && self.z == other.z
    }
}

impl Eq for LLElem {}

impl fmt::Debug for LLElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LLElem({}, {}, {}, {})", self.z[0], self.z[1], self.z[2], self.z[3])
    }
}

impl fmt::Display for LLElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.z[0], self.z[1], self.z[2], self.z[3])
    }
}

impl Serialize for LLElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LLElem", 2)?;
        st.serialize_field("basis", "basisLL")?;
        st.serialize_field("coords", &self.z)?;
        st.end()
    }
}

/// Coordinates with respect to `(1(x)1, p, q, r)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealCoords(pub Vec4<LElem>);

impl Serialize for IdealCoords {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IdealCoords", 2)?;
        st.serialize_field("basis", "ideal")?;
        st.serialize_field("coords", &self.0)?;
        st.end()
    }
}

fn check_frame(a: &LLElem, b: &LLElem) -> Result<(), TensorError> {
    if a.alg.frame == b.alg.frame {
        Ok(())
    } else {
        Err(TensorError::FrameMismatch)
    }
}

impl TensorAlgebra {
    pub fn element(self: &Arc<Self>, z: Vec4<LElem>) -> LLElem {
        LLElem { z, alg: Arc::clone(self) }
    }

    pub fn zero(self: &Arc<Self>) -> LLElem {
        self.element(linalg::zero_vec())
    }

    pub fn unit(self: &Arc<Self>) -> LLElem {
        self.element(linalg::unit_vec(0))
    }

    /// The basis vector `1 (x) b_n`.
    pub fn basis_vector(self: &Arc<Self>, n: usize) -> LLElem {
        self.element(linalg::unit_vec(n))
    }

    /// `1 (x) y`, the second copy of `L` inside `L (x) L`.
    pub fn embed_second(self: &Arc<Self>, y: &LElem) -> LLElem {
        self.element(linalg::vec_map(&self.basis.coords(y), |c| c.to_l()))
    }

    /// `x (x) 1 = x (1 (x) 1)`.
    pub fn embed_first(self: &Arc<Self>, x: &LElem) -> LLElem {
        self.unit().scale(x)
    }

    /// The pure tensor `x (x) y`.
    pub fn pure(self: &Arc<Self>, x: &LElem, y: &LElem) -> LLElem {
        self.embed_second(y).scale(x)
    }

    /// `x (x) y + y (x) x`.
    pub fn alternation(self: &Arc<Self>, x: &LElem, y: &LElem) -> LLElem {
        let a = self.embed_second(y).scale(x);
        let b = self.embed_second(x).scale(y);
        a.add(&b).expect("same frame")
    }

    /// `(p, q, r)` with `p = 1(x)i + i(x)1`, `q = 1(x)j + j(x)1` and
    /// `r = 1(x)k + i(x)j + j(x)i + k(x)1`.
    pub fn ideal_basis(self: &Arc<Self>) -> (LLElem, LLElem, LLElem) {
        let (i, j, k) = (self.basis.i(), self.basis.j(), self.basis.k());
        let one = LElem::one();
        let p = self.alternation(&one, i);
        let q = self.alternation(&one, j);
        let r = self.alternation(&one, k).add(&self.alternation(i, j)).expect("same frame");
        (p, q, r)
    }

    pub fn to_ideal(&self, g: &LLElem) -> Result<IdealCoords, TensorError> {
        if g.alg.frame != self.frame {
            return Err(TensorError::FrameMismatch);
        }
        Ok(IdealCoords(self.ideal_change_inv.apply(&g.z)))
    }

    pub fn from_ideal(self: &Arc<Self>, c: &IdealCoords) -> LLElem {
        self.element(self.ideal_change.apply(&c.0))
    }

    /// The absolute plane `ker pi` as a subspace in tensor coordinates.
    pub fn absolute_plane(&self) -> Subspace<LElem> {
        let pi_row: Vec4<LElem> = [LElem::one(), self.basis.i().clone(), self.basis.j().clone(), self.basis.k().clone()];
        Subspace::span([pi_row]).annihilator()
    }

    /// Matrix of `z -> z * h` acting on row vectors.
    pub fn right_multiplication_matrix(self: &Arc<Self>, h: &LLElem) -> Result<Mat4<LElem>, TensorError> {
        if h.alg.frame != self.frame {
            return Err(TensorError::FrameMismatch);
        }
        let rows = array::from_fn(|s| self.basis_vector(s).mul(h).expect("same frame").z);
        Ok(Mat4::from_rows(rows))
    }

    /// The annihilator of `ker pi`, solved from the multiplication table:
    /// all `z` with `z w = 0` for each basis vector `w` of the plane.
    pub fn solved_annihilator(self: &Arc<Self>) -> Subspace<LElem> {
        let plane = self.absolute_plane();
        let mut columns: Vec<Vec4<LElem>> = Vec::new();
        for w in plane.basis() {
            let m = self
                .right_multiplication_matrix(&self.element(w.clone()))
                .expect("same frame");
            columns.extend((0..4).map(|t| m.column(t)));
        }
        Subspace::span(columns).annihilator()
    }

    /// The absolute point `L r` from its closed form.
    pub fn annihilator_point(self: &Arc<Self>) -> Subspace<LElem> {
        let (_, _, r) = self.ideal_basis();
        Subspace::point(r.z).expect("r is nonzero")
    }

    /// Tensor coordinates with respect to the standard basis `(1, u, v, uv)`.
    pub fn to_standard(&self, g: &LLElem) -> Vec4<LElem> {
        self.basis.to_standard_matrix().map(|c| c.to_l()).apply(&g.z)
    }

    pub fn from_standard(self: &Arc<Self>, z: &Vec4<LElem>) -> LLElem {
        self.element(self.basis.from_standard_matrix().map(|c| c.to_l()).apply(z))
    }

    /// Re-expresses a subspace given in this frame's tensor coordinates in
    /// standard tensor coordinates.
    pub fn subspace_to_standard(&self, s: &Subspace<LElem>) -> Subspace<LElem> {
        s.map(&self.basis.to_standard_matrix().map(|c| c.to_l()))
    }
}

impl LLElem {
    pub fn coords(&self) -> &Vec4<LElem> {
        &self.z
    }

    pub fn algebra(&self) -> &Arc<TensorAlgebra> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.z)
    }

    pub fn add(&self, other: &LLElem) -> Result<LLElem, TensorError> {
        check_frame(self, other)?;
        Ok(LLElem { z: vec_add(&self.z, &other.z), alg: Arc::clone(&self.alg) })
    }

    /// Scalar action of `L` (on the first tensor factor).
    pub fn scale(&self, a: &LElem) -> LLElem {
        LLElem { z: vec_scale(a, &self.z), alg: Arc::clone(&self.alg) }
    }

    /// Product in `L (x) L` via the structure constants.
    pub fn mul(&self, other: &LLElem) -> Result<LLElem, TensorError> {
        check_frame(self, other)?;
        let mut acc: Vec4<LElem> = linalg::zero_vec();
        for s in 0..4 {
            if self.z[s].is_zero() {
                continue;
            }
            for t in 0..4 {
                if other.z[t].is_zero() {
                    continue;
                }
                let coeff = self.z[s].mul(&other.z[t]);
                for (m, c) in self.alg.constants[s][t].iter().enumerate() {
                    if !c.is_zero() {
                        acc[m] = acc[m].add(&coeff.mul(c));
                    }
                }
            }
        }
        Ok(LLElem { z: acc, alg: Arc::clone(&self.alg) })
    }

    /// `pi(g) = z0 + i z1 + j z2 + k z3`, the algebra map `x(x)y -> xy`.
    pub fn pi(&self) -> LElem {
        let b = &self.alg.basis;
        let coeffs = [LElem::one(), b.i().clone(), b.j().clone(), b.k().clone()];
        linalg::dot(&coeffs, &self.z)
    }

    /// The norm form `g -> pi(g)^2`.
    pub fn norm(&self) -> FElem {
        self.pi().square()
    }

    /// Computes `g * g` and checks it against `pi(g)^2 (1(x)1)`.
    pub fn square_identity(&self) -> Result<LLElem, TensorError> {
        let sq = self.mul(self)?;
        let expected = self.alg.unit().scale(&self.norm().to_l());
        if sq != expected {
            return Err(TensorError::SquareIdentity { square: sq.to_string(), expected: expected.to_string() });
        }
        Ok(sq)
    }

    /// `g^-1 = pi(g)^-2 g`; elements of `ker pi` square to zero and have no
    /// inverse.
    pub fn invert(&self) -> Result<LLElem, TensorError> {
        let n = self.norm();
        let inv = n.to_l().try_inv().map_err(|_| TensorError::NotInvertible)?;
        Ok(self.scale(&inv))
    }

    pub fn to_ideal(&self) -> IdealCoords {
        self.alg.to_ideal(self).expect("own frame")
    }

    pub fn in_absolute_plane(&self) -> bool {
        self.pi().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> LElem {
        s.parse().unwrap()
    }

    #[test]
    fn basis_products() {
        let alg = TensorAlgebra::standard();
        let i = alg.basis_vector(1);
        let j = alg.basis_vector(2);
        assert_eq!(i.mul(&j).unwrap(), alg.basis_vector(3));
        assert_eq!(i.mul(&i).unwrap(), alg.unit().scale(&e("u^2")));
        let k = alg.basis_vector(3);
        assert_eq!(k.mul(&k).unwrap(), alg.unit().scale(&e("u^2*v^2")));
        assert_eq!(i.mul(&k).unwrap(), j.scale(&e("u^2")));
    }

    #[test]
    fn ideal_basis_coordinates() {
        let alg = TensorAlgebra::standard();
        let (p, q, r) = alg.ideal_basis();
        assert_eq!(p.coords(), &[e("u"), e("1"), e("0"), e("0")]);
        assert_eq!(q.coords(), &[e("v"), e("0"), e("1"), e("0")]);
        assert_eq!(r.coords(), &[e("u*v"), e("v"), e("u"), e("1")]);
        assert_eq!(p.mul(&q).unwrap(), r);
        assert!(p.mul(&p).unwrap().is_zero());
        assert!(p.pi().is_zero());
        assert!(r.norm().is_zero());
    }

    #[test]
    fn ideal_coordinates_of_k() {
        let alg = TensorAlgebra::standard();
        let c = alg.basis_vector(3).to_ideal();
        assert_eq!(c.0, [e("u*v"), e("v"), e("u"), e("1")]);
        assert_eq!(alg.unit().to_ideal().0, linalg::unit_vec::<LElem>(0));
    }

    #[test]
    fn pi_examples() {
        let alg = TensorAlgebra::standard();
        assert_eq!(alg.unit().pi(), LElem::one());
        let g = alg.element([e("0"), e("1"), e("1"), e("0")]);
        assert_eq!(g.pi(), e("u + v"));
        assert_eq!(alg.embed_second(&e("u^3 + v")).norm().into_l(), e("u^6 + v^2"));
    }

    #[test]
    fn inversion() {
        let alg = TensorAlgebra::standard();
        assert_eq!(alg.unit().invert().unwrap(), alg.unit());
        let g = alg.embed_second(&e("u"));
        let inv = g.invert().unwrap();
        assert_eq!(inv.coords(), &[e("0"), e("1/u^2"), e("0"), e("0")]);
        assert_eq!(g.mul(&inv).unwrap(), alg.unit());
        let (p, _, _) = alg.ideal_basis();
        assert_eq!(p.invert(), Err(TensorError::NotInvertible));
    }

    #[test]
    fn frames_do_not_mix() {
        let a = TensorAlgebra::standard();
        let b = TensorAlgebra::new(BasisL::new(e("u + v^2"), e("v")).unwrap());
        assert_eq!(a.unit().mul(&b.unit()), Err(TensorError::FrameMismatch));
        let again = TensorAlgebra::standard();
        assert!(a.unit().mul(&again.unit()).is_ok());
    }

    #[test]
    fn alternation_examples() {
        let alg = TensorAlgebra::standard();
        let x = e("u^2 + v/u");
        assert!(alg.alternation(&x, &x).is_zero());
        let (p, _, _) = alg.ideal_basis();
        assert_eq!(alg.alternation(&LElem::one(), &e("u")), p);
    }

    #[test]
    fn absolute_point_default_basis() {
        let alg = TensorAlgebra::standard();
        let expected = Subspace::point([e("u*v"), e("v"), e("u"), e("1")]).unwrap();
        assert_eq!(alg.annihilator_point(), expected);
        assert_eq!(alg.solved_annihilator(), expected);
    }
}
