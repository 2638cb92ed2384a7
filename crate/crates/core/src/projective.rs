//! Subspaces of a four-dimensional vector space over an exact field, i.e.
//! points, lines and planes of a projective 3-space.

use crate::field::{standard_coords, FElem, LElem};
use crate::linalg::{self, cofactor_vector, dot, is_zero_vec, orthogonal_complement, rref, Vec4};
use crate::scalar::Field;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectiveError {
    #[error("expected a subspace of dimension {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("coordinates violate the Plücker relation")]
    NotPlucker,
    #[error("the zero vector does not span a point")]
    ZeroVector,
    #[error("point lies on one of the given lines")]
    PointOnLine,
    #[error("the given lines are not skew")]
    NotSkew,
    #[error("degenerate configuration: the planes through the point coincide")]
    Degenerate,
}

/// A subspace given by its reduced row echelon basis. Because the echelon
/// form is canonical, equality of subspaces is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<K> {
    rows: Vec<Vec4<K>>,
}

pub type PointF = Subspace<FElem>;
pub type LineF = Subspace<FElem>;
pub type PlaneF = Subspace<FElem>;
pub type PointL = Subspace<LElem>;
pub type LineL = Subspace<LElem>;
pub type PlaneL = Subspace<LElem>;

impl<K: Field> Subspace<K> {
    /// Span of the given vectors.
    pub fn span<I: IntoIterator<Item = Vec4<K>>>(vectors: I) -> Self {
        Subspace { rows: rref(vectors.into_iter().collect()) }
    }

    pub fn zero() -> Self {
        Subspace { rows: Vec::new() }
    }

    pub fn whole() -> Self {
        Self::span((0..4).map(linalg::unit_vec))
    }

    pub fn point(v: Vec4<K>) -> Result<Self, ProjectiveError> {
        if is_zero_vec(&v) {
            return Err(ProjectiveError::ZeroVector);
        }
        Ok(Self::span([v]))
    }

    /// Line spanned by two vectors; fails if they are dependent.
    pub fn line(a: Vec4<K>, b: Vec4<K>) -> Result<Self, ProjectiveError> {
        Self::span([a, b]).expect_dim(2)
    }

    pub fn expect_dim(self, expected: usize) -> Result<Self, ProjectiveError> {
        if self.dim() == expected {
            Ok(self)
        } else {
            Err(ProjectiveError::Dimension { expected, got: self.dim() })
        }
    }

    /// Vector-space dimension (1 for a point, 2 for a line, 3 for a plane).
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec4<K>] {
        &self.rows
    }

    /// The normalized generator of a point.
    pub fn generator(&self) -> Option<&Vec4<K>> {
        (self.dim() == 1).then(|| &self.rows[0])
    }

    pub fn contains_vector(&self, v: &Vec4<K>) -> bool {
        if is_zero_vec(v) {
            return true;
        }
        let mut rows = self.rows.clone();
        rows.push(v.clone());
        linalg::rank(&rows) == self.dim()
    }

    /// Inclusion `other <= self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.rows.iter().all(|v| self.contains_vector(v))
    }

    pub fn join(&self, other: &Self) -> Self {
        Self::span(self.rows.iter().chain(other.rows.iter()).cloned())
    }

    pub fn meet(&self, other: &Self) -> Self {
        let dual = self.annihilator().join(&other.annihilator());
        dual.annihilator()
    }

    /// `{ w : v . w = 0 for all v in self }` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        Subspace { rows: orthogonal_complement(&self.rows) }
    }

    /// Image under `x -> x * m`.
    pub fn map(&self, m: &linalg::Mat4<K>) -> Self {
        Self::span(self.rows.iter().map(|r| m.apply(r)))
    }

    /// Image under a coordinatewise field map, e.g. scalar extension.
    pub fn map_coords<T: Field, F: Fn(&K) -> T>(&self, f: F) -> Subspace<T> {
        Subspace::span(self.rows.iter().map(|r| linalg::vec_map(r, &f)))
    }

    /// Whether two lines have a common point.
    pub fn meets(&self, other: &Self) -> bool {
        self.meet(other).dim() > 0
    }
}

impl<K: Field> Serialize for Subspace<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let mut st = s.serialize_struct("Subspace", 2)?;
        st.serialize_field("field", K::TAG)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

impl<K: Field> fmt::Display for Subspace<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<", K::TAG)?;
        for (n, r) in self.rows.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {}, {}, {})", r[0], r[1], r[2], r[3])?;
        }
        write!(f, ">")
    }
}

/// Scalar extension of a subspace from `F` to `L`.
pub fn extend_scalars(m: &Subspace<FElem>) -> Subspace<LElem> {
    // Embedding F into L preserves reduced echelon form.
    Subspace { rows: m.rows.iter().map(|r| linalg::vec_map(r, |x| x.to_l())).collect() }
}

/// If the point has a representative in `F^4`, returns it.
///
/// The stored generator has a unit pivot, and a point is F-rational exactly
/// when this pivot-normalized representative has all coordinates in `F`.
pub fn f_rational_witness(p: &Subspace<LElem>) -> Result<Option<Vec4<FElem>>, ProjectiveError> {
    let g = p.generator().ok_or(ProjectiveError::Dimension { expected: 1, got: p.dim() })?;
    if !g.iter().all(LElem::is_in_f) {
        return Ok(None);
    }
    Ok(Some(linalg::vec_map(g, |x| FElem::new(x.clone()).expect("checked"))))
}

pub fn is_f_rational_point(p: &Subspace<LElem>) -> Result<bool, ProjectiveError> {
    Ok(f_rational_witness(p)?.is_some())
}

/// The smallest `F`-subspace whose extension contains the point `Lx`: the
/// span of the components of `x` along an `F`-basis of `L`. Independent of
/// the representative `x`.
pub fn f_rational_hull(p: &Subspace<LElem>) -> Result<Subspace<FElem>, ProjectiveError> {
    let x = p.generator().ok_or(ProjectiveError::Dimension { expected: 1, got: p.dim() })?;
    let coords = x.clone().map(|c| standard_coords(&c));
    Ok(Subspace::span((0..4).map(|t| std::array::from_fn(|s| coords[s][t].clone()))))
}

/// Whether three points lie on a common line.
pub fn collinear<K: Field>(a: &Subspace<K>, b: &Subspace<K>, c: &Subspace<K>) -> bool {
    a.join(b).join(c).dim() <= 2
}

/// The line through `p` meeting the skew lines `m2` and `m3`.
pub fn transversal<K: Field>(
    p: &Subspace<K>,
    m2: &Subspace<K>,
    m3: &Subspace<K>,
) -> Result<Subspace<K>, ProjectiveError> {
    p.clone().expect_dim(1)?;
    m2.clone().expect_dim(2)?;
    m3.clone().expect_dim(2)?;
    let x = K::clear_denominators(&p.rows[0]);
    let [a2, b2] = [0, 1].map(|k| K::clear_denominators(&m2.rows[k]));
    let [a3, b3] = [0, 1].map(|k| K::clear_denominators(&m3.rows[k]));
    // Normals of the planes p + m2 and p + m3; zero when p is on the line.
    let n2 = cofactor_vector(&x, &a2, &b2);
    let n3 = cofactor_vector(&x, &a3, &b3);
    if is_zero_vec(&n2) || is_zero_vec(&n3) {
        return Err(ProjectiveError::PointOnLine);
    }
    if dot(&a2, &cofactor_vector(&b2, &a3, &b3)).is_zero() {
        return Err(ProjectiveError::NotSkew);
    }
    // Where m3 crosses the plane p + m2.
    let q = linalg::vec_add(
        &linalg::vec_scale(&dot(&n2, &b3), &a3),
        &linalg::vec_scale(&dot(&n2, &a3).neg(), &b3),
    );
    Subspace::line(x, q).map_err(|_| ProjectiveError::Degenerate)
}

/// Plücker coordinates `(p01, p02, p03, p12, p13, p23)` of a line,
/// scaled so that the first nonzero entry is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PluckerCoords<K>(pub [K; 6]);

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl<K: Field> PluckerCoords<K> {
    fn normalized(mut c: [K; 6]) -> Result<Self, ProjectiveError> {
        let lead = c.iter().find(|x| !x.is_zero()).ok_or(ProjectiveError::NotPlucker)?;
        let inv = lead.inv().expect("nonzero");
        for x in c.iter_mut() {
            *x = x.mul(&inv);
        }
        Ok(PluckerCoords(c))
    }

    /// `p01 p23 - p02 p13 + p03 p12`.
    pub fn relation(&self) -> K {
        let p = &self.0;
        p[0].mul(&p[5]).sub(&p[1].mul(&p[4])).add(&p[2].mul(&p[3]))
    }

    /// Bilinear pairing; zero exactly when the two lines meet.
    pub fn pairing(&self, other: &Self) -> K {
        let (p, q) = (&self.0, &other.0);
        p[0].mul(&q[5])
            .sub(&p[1].mul(&q[4]))
            .add(&p[2].mul(&q[3]))
            .add(&p[3].mul(&q[2]))
            .sub(&p[4].mul(&q[1]))
            .add(&p[5].mul(&q[0]))
    }

    /// Entry `p_st` for any `s != t`, with `p_ts = -p_st`.
    pub fn get(&self, s: usize, t: usize) -> K {
        if s == t {
            return K::zero();
        }
        let (a, b, sign) = if s < t { (s, t, false) } else { (t, s, true) };
        let n = PAIRS.iter().position(|&x| x == (a, b)).unwrap();
        if sign {
            self.0[n].neg()
        } else {
            self.0[n].clone()
        }
    }
}

impl<K: Field> Serialize for PluckerCoords<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}

pub fn plucker<K: Field>(line: &Subspace<K>) -> Result<PluckerCoords<K>, ProjectiveError> {
    if line.dim() != 2 {
        return Err(ProjectiveError::Dimension { expected: 2, got: line.dim() });
    }
    let (x, y) = (&line.rows[0], &line.rows[1]);
    let c = PAIRS.map(|(s, t)| x[s].mul(&y[t]).sub(&x[t].mul(&y[s])));
    PluckerCoords::normalized(c)
}

pub fn line_from_plucker<K: Field>(pc: &PluckerCoords<K>) -> Result<Subspace<K>, ProjectiveError> {
    if !pc.relation().is_zero() || pc.0.iter().all(K::is_zero) {
        return Err(ProjectiveError::NotPlucker);
    }
    // Row s of the skew matrix (p_st) is x_s y - y_s x, a vector on the line.
    let rows = (0..4).map(|s| std::array::from_fn(|t| pc.get(s, t)));
    let line = Subspace::span(rows).expect_dim(2).map_err(|_| ProjectiveError::NotPlucker)?;
    Ok(line)
}

/// Orthogonal complement with respect to the bilinear form with Gram
/// matrix `gram`: `{ y : x gram y^T = 0 for all x in s }`.
pub fn gram_complement<K: Field>(s: &Subspace<K>, gram: &linalg::Mat4<K>) -> Subspace<K> {
    let images: Vec<Vec4<K>> = s.rows.iter().map(|x| gram.apply(x)).collect();
    Subspace { rows: orthogonal_complement(&images) }
}

pub fn bilinear<K: Field>(x: &Vec4<K>, gram: &linalg::Mat4<K>, y: &Vec4<K>) -> K {
    dot(&gram.apply(x), y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_field::Gf;
    use crate::linalg::unit_vec;

    fn v(x: [i64; 4]) -> Vec4<Gf> {
        x.map(Gf::new)
    }

    #[test]
    fn join_of_point_with_itself() {
        let p = Subspace::point(v([1, 2, 3, 4])).unwrap();
        assert_eq!(p.join(&p), p);
    }

    #[test]
    fn two_planes_meet_in_a_line() {
        let a = Subspace::span([v([1, 0, 0, 0]), v([0, 1, 0, 0]), v([0, 0, 1, 0])]);
        let b = Subspace::span([v([0, 1, 0, 0]), v([0, 0, 1, 0]), v([0, 0, 0, 1])]);
        let m = a.meet(&b);
        assert_eq!(m, Subspace::span([v([0, 1, 0, 0]), v([0, 0, 1, 0])]));
        assert_eq!(a.join(&b).dim() + m.dim(), a.dim() + b.dim());
    }

    #[test]
    fn transversal_of_coordinate_axes() {
        let p = Subspace::point(v([1, 1, 1, 1])).unwrap();
        let m2 = Subspace::line(unit_vec(0), unit_vec(1)).unwrap();
        let m3 = Subspace::line(unit_vec(2), unit_vec(3)).unwrap();
        let t = transversal(&p, &m2, &m3).unwrap();
        assert_eq!(t, Subspace::line(v([1, 1, 0, 0]), v([0, 0, 1, 1])).unwrap());
        assert_eq!(transversal(&Subspace::point(unit_vec(0)).unwrap(), &m2, &m3), Err(ProjectiveError::PointOnLine));
        assert_eq!(transversal(&p, &m2, &m2), Err(ProjectiveError::NotSkew));
    }

    #[test]
    fn plucker_round_trip_and_pairing() {
        let l = Subspace::line(v([1, 0, 0, 0]), v([0, 1, 0, 0])).unwrap();
        let pc = plucker(&l).unwrap();
        assert_eq!(pc.0, [1, 0, 0, 0, 0, 0].map(Gf::new));
        let a = Subspace::line(v([1, 2, 3, 4]), v([5, 6, 7, 9])).unwrap();
        let b = Subspace::line(v([1, 2, 3, 4]), v([0, 1, 1, 0])).unwrap();
        let c = Subspace::line(v([0, 0, 1, 0]), v([3, 0, 0, 1])).unwrap();
        for line in [&a, &b, &c] {
            let pc = plucker(line).unwrap();
            assert!(pc.relation().is_zero());
            assert_eq!(&line_from_plucker(&pc).unwrap(), line);
        }
        assert!(plucker(&a).unwrap().pairing(&plucker(&b).unwrap()).is_zero());
        assert_eq!(plucker(&a).unwrap().pairing(&plucker(&c).unwrap()).is_zero(), a.meets(&c));
        let bad = PluckerCoords([1, 0, 0, 0, 0, 1].map(Gf::new));
        assert_eq!(line_from_plucker(&bad), Err(ProjectiveError::NotPlucker));
    }

    #[test]
    fn collinear_points() {
        let p = Subspace::point(v([1, 0, 0, 0])).unwrap();
        let q = Subspace::point(v([0, 1, 0, 0])).unwrap();
        let r = Subspace::point(v([1, 1, 0, 0])).unwrap();
        let s = Subspace::point(v([0, 0, 1, 0])).unwrap();
        assert!(collinear(&p, &p, &p));
        assert!(collinear(&p, &q, &r));
        assert!(!collinear(&p, &q, &s));
    }
}
