//! F-bases `(1, i, j, k = ij)` of `L` and coordinates with respect to them.

use super::elem::{FElem, LElem};
use super::FieldError;
use crate::linalg::{rank, Mat4, Vec4};
use crate::scalar::Field;
use serde::Serialize;
use std::array;

/// Coordinates `(c0, c1, c2, c3)` of an element of `L` over `F`.
pub type FCoords = Vec4<FElem>;

/// Coordinates of `z` with respect to the standard basis `(1, u, v, uv)`.
///
/// Writes `z = f g / g^2` with `g` the denominator, so that `g^2` lies in
/// `F`, and sorts the monomials of `f g` by exponent parity.
pub fn standard_coords(z: &LElem) -> FCoords {
    if z.is_zero() {
        return array::from_fn(|_| FElem::zero());
    }
    let den = z.den();
    let numer = if den.is_one() { z.num().clone() } else { z.num().mul(den) };
    let parts = [(false, false), (true, false), (false, true), (true, true)];
    // Each part over den^2 lies in F; its square root is half(part) / den.
    array::from_fn(|m| {
        let (uo, vo) = parts[m];
        let half = numer.parity_part(uo, vo).halve_exponents().expect("parity split yields even exponents");
        FElem::from_root_fraction(half, den.clone()).expect("nonzero denominator")
    })
}

/// Inverse of [`standard_coords`].
pub fn standard_recompose(c: &FCoords) -> LElem {
    let basis = [LElem::one(), LElem::u(), LElem::v(), LElem::monomial(1, 1)];
    c.iter()
        .zip(basis.iter())
        .filter(|(x, _)| !x.is_zero())
        .fold(LElem::zero(), |acc, (x, b)| acc.add(&(x * b)))
}

/// An F-basis `(1, i, j, k)` of `L` with `k = ij`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasisL {
    i: LElem,
    j: LElem,
    k: LElem,
    /// Rows: standard coordinates of `1, i, j, k`.
    to_std: Mat4<FElem>,
    from_std: Mat4<FElem>,
    standard: bool,
}

impl BasisL {
    /// The default basis `i = u`, `j = v`, `k = uv`.
    pub fn standard() -> Self {
        BasisL {
            i: LElem::u(),
            j: LElem::v(),
            k: LElem::monomial(1, 1),
            to_std: Mat4::identity(),
            from_std: Mat4::identity(),
            standard: true,
        }
    }

    /// Fails unless `1, i, j` are linearly independent over `F`.
    pub fn new(i: LElem, j: LElem) -> Result<Self, FieldError> {
        let k = &i * &j;
        let to_std = Mat4::from_rows([
            standard_coords(&LElem::one()),
            standard_coords(&i),
            standard_coords(&j),
            standard_coords(&k),
        ]);
        if rank(&to_std.0[..3]) < 3 {
            return Err(FieldError::InvalidBasis(format!("1, {i}, {j} are dependent over F")));
        }
        let from_std = to_std.inverse().ok_or_else(|| {
            FieldError::InvalidBasis(format!("(1, {i}, {j}, {k}) does not span L"))
        })?;
        let standard = to_std == Mat4::identity();
        Ok(BasisL { i, j, k, to_std, from_std, standard })
    }

    pub fn i(&self) -> &LElem {
        &self.i
    }

    pub fn j(&self) -> &LElem {
        &self.j
    }

    pub fn k(&self) -> &LElem {
        &self.k
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    /// The basis vectors `[1, i, j, k]`.
    pub fn elements(&self) -> [LElem; 4] {
        [LElem::one(), self.i.clone(), self.j.clone(), self.k.clone()]
    }

    /// Rows are the standard coordinates of `1, i, j, k`.
    pub fn to_standard_matrix(&self) -> &Mat4<FElem> {
        &self.to_std
    }

    pub fn from_standard_matrix(&self) -> &Mat4<FElem> {
        &self.from_std
    }

    /// The unique `c` in `F^4` with `z = c0 + c1 i + c2 j + c3 k`.
    pub fn coords(&self, z: &LElem) -> FCoords {
        let std = standard_coords(z);
        if self.standard {
            std
        } else {
            self.from_std.apply(&std)
        }
    }

    pub fn recompose(&self, c: &FCoords) -> LElem {
        if self.standard {
            return standard_recompose(c);
        }
        let elems = self.elements();
        c.iter()
            .zip(elems.iter())
            .filter(|(x, _)| !x.is_zero())
            .fold(LElem::zero(), |acc, (x, b)| acc.add(&(x * b)))
    }
}

impl Serialize for BasisL {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BasisL", 3)?;
        st.serialize_field("i", &self.i)?;
        st.serialize_field("j", &self.j)?;
        st.serialize_field("k", &self.k)?;
        st.end()
    }
}

impl Default for BasisL {
    fn default() -> Self {
        Self::standard()
    }
}

/// Whether `z` lies in `F`.
pub fn is_in_f(z: &LElem) -> bool {
    z.is_in_f()
}

/// Whether `z` lies in the intermediate field `F[i] = F + F i`. Requires `i`
/// outside `F`.
pub fn is_in_intermediate(z: &LElem, i: &LElem) -> Result<bool, FieldError> {
    if i.is_in_f() {
        return Err(FieldError::GeneratorInF(i.to_string()));
    }
    let rows = [standard_coords(&LElem::one()), standard_coords(i), standard_coords(z)];
    Ok(rank(&rows) == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> LElem {
        s.parse().unwrap()
    }

    fn f(s: &str) -> FElem {
        s.parse().unwrap()
    }

    #[test]
    fn coords_examples() {
        let b = BasisL::standard();
        assert_eq!(b.coords(&e("u*v + 1")), [f("1"), f("0"), f("0"), f("1")]);
        assert_eq!(b.coords(&e("u^3")), [f("0"), f("u^2"), f("0"), f("0")]);
        let other = BasisL::new(e("u + v^2"), e("v/(u^2+1)")).unwrap();
        let k = other.k().clone();
        assert_eq!(other.coords(&k), [f("0"), f("0"), f("0"), f("1")]);
    }

    #[test]
    fn coords_of_fraction() {
        let z = e("(u + v) / (u*v + 1)");
        let c = standard_coords(&z);
        assert_eq!(standard_recompose(&c), z);
    }

    #[test]
    fn invalid_basis() {
        assert!(BasisL::new(e("u"), e("u^3 + u^2")).is_err());
        assert!(BasisL::new(e("u^2"), e("v")).is_err());
    }

    #[test]
    fn intermediate_membership() {
        assert!(is_in_intermediate(&e("u^3 + u^2"), &e("u")).unwrap());
        assert!(!is_in_intermediate(&e("v"), &e("u")).unwrap());
        assert!(is_in_intermediate(&e("v"), &e("u^2")).is_err());
    }
}
