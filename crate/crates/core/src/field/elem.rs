//! Elements of `L = GF(2)(u, v)` and of its subfield `F = GF(2)(u^2, v^2)`.

use super::poly::BivarPolyGF2;
use super::FieldError;
use crate::scalar::Field;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A rational function `num / den` over GF(2) in lowest terms.
///
/// GF(2) has no nontrivial units, so the reduced fraction is unique and
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LElem {
    num: BivarPolyGF2,
    den: BivarPolyGF2,
}

impl LElem {
    pub fn zero() -> Self {
        LElem { num: BivarPolyGF2::zero(), den: BivarPolyGF2::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(BivarPolyGF2::one())
    }

    pub fn u() -> Self {
        Self::from_poly(BivarPolyGF2::u())
    }

    pub fn v() -> Self {
        Self::from_poly(BivarPolyGF2::v())
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::from_poly(BivarPolyGF2::monomial(a, b))
    }

    pub fn from_poly(p: BivarPolyGF2) -> Self {
        LElem { num: p, den: BivarPolyGF2::one() }
    }

    /// Reduces `num / den`. Fails when `den` is zero.
    pub fn from_fraction(num: BivarPolyGF2, den: BivarPolyGF2) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BivarPolyGF2, den: BivarPolyGF2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return LElem { num, den };
        }
        let (_, num, den) = num.gcd_cofactors(&den);
        LElem { num, den }
    }

    pub fn num(&self) -> &BivarPolyGF2 {
        &self.num
    }

    pub fn den(&self) -> &BivarPolyGF2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn sum(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            return LElem { num: self.num.mul(&other.den).add(&other.num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return LElem { num: other.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        // With g = gcd(d1, d2) the sum is (n1 d2' + n2 d1') / (d1 d2'), and
        // any common factor of that numerator and denominator divides g.
        let (g, d1, d2) = self.den.gcd_cofactors(&other.den);
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&d2);
        if g.is_one() {
            return LElem { num, den };
        }
        let (h, num, _) = num.gcd_cofactors(&g);
        if h.is_one() {
            LElem { num, den }
        } else {
            LElem { num, den: den.div_exact(&h).unwrap() }
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let cross = |n: &BivarPolyGF2, d: &BivarPolyGF2| {
            if n.is_one() || d.is_one() {
                (n.clone(), d.clone())
            } else {
                let (_, n, d) = n.gcd_cofactors(d);
                (n, d)
            }
        };
        let (n1, d2) = cross(&self.num, &other.den);
        let (n2, d1) = cross(&other.num, &self.den);
        LElem { num: n1.mul(&n2), den: d1.mul(&d2) }
    }

    /// Multiplicative inverse.
    pub fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(LElem { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.product(&other.try_inv()?))
    }

    /// Frobenius square. The result always lies in `F`.
    pub fn square(&self) -> FElem {
        FElem { root: self.clone() }
    }

    /// Squares numerator and denominator; the result stays reduced.
    fn frobenius(&self) -> LElem {
        LElem { num: self.num.square(), den: self.den.square() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            base = base.product(&base);
            e >>= 1;
        }
        acc
    }

    /// True when every exponent of the reduced numerator and denominator is
    /// even, which characterizes membership in `F`.
    pub fn is_in_f(&self) -> bool {
        self.num.has_even_exponents() && self.den.has_even_exponents()
    }

    /// Largest exponent of either variable in numerator or denominator.
    pub fn max_exponent(&self) -> u32 {
        [self.num.degree_u(), self.num.degree_v(), self.den.degree_u(), self.den.degree_v()]
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.num.size() + self.den.size()
    }
}

impl fmt::Display for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &BivarPolyGF2| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LElem({self})")
    }
}

impl std::str::FromStr for LElem {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_elem(s)
    }
}

impl Serialize for LElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl Default for LElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl Field for LElem {
    const TAG: &'static str = "L";
    fn zero() -> Self {
        LElem::zero()
    }
    fn one() -> Self {
        LElem::one()
    }
    fn is_zero(&self) -> bool {
        LElem::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LElem::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.sum(rhs)
    }
    fn neg(&self) -> Self {
        self.clone()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.sum(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
    fn clear_denominators(v: &[Self; 4]) -> [Self; 4] {
        super::echelon::clear_denominators(v).map(LElem::from_poly)
    }
    fn rref_override(rows: &[[Self; 4]]) -> Option<Vec<[Self; 4]>> {
        super::echelon::rref(rows)
    }
    fn cost(&self) -> usize {
        self.size()
    }
}

/// An element of `F`: a rational function in `u^2` and `v^2`.
///
/// Stored by its square root in `L`. Squaring is an isomorphism `L -> F`,
/// so arithmetic in `F` runs on polynomials of half the degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FElem {
    root: LElem,
}

impl FElem {
    pub fn zero() -> Self {
        FElem { root: LElem::zero() }
    }

    pub fn one() -> Self {
        FElem { root: LElem::one() }
    }

    /// Checks the even-exponent invariant.
    pub fn new(x: LElem) -> Result<Self, FieldError> {
        if !x.is_in_f() {
            return Err(FieldError::NotInF(x.to_string()));
        }
        let root = LElem {
            num: x.num.halve_exponents().expect("even exponents"),
            den: x.den.halve_exponents().expect("even exponents"),
        };
        Ok(FElem { root })
    }

    /// `num / den` for polynomials in `u^2, v^2` given by their square roots.
    pub(crate) fn from_root_fraction(num: BivarPolyGF2, den: BivarPolyGF2) -> Result<Self, FieldError> {
        Ok(FElem { root: LElem::from_fraction(num, den)? })
    }

    /// The same element as a member of `L`.
    pub fn to_l(&self) -> LElem {
        self.root.frobenius()
    }

    pub fn into_l(self) -> LElem {
        self.to_l()
    }

    pub fn is_zero(&self) -> bool {
        self.root.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.root.is_one()
    }

    pub fn try_inv(&self) -> Result<Self, FieldError> {
        Ok(FElem { root: self.root.try_inv()? })
    }

    /// The unique `x` in `L` with `x^2 = self`.
    pub fn sqrt(&self) -> &LElem {
        &self.root
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_l().fmt(f)
    }
}

impl fmt::Debug for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FElem({})", self.to_l())
    }
}

impl Serialize for FElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_l().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let x = LElem::deserialize(d)?;
        FElem::new(x).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for FElem {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FElem::new(s.parse()?)
    }
}

impl From<FElem> for LElem {
    fn from(x: FElem) -> LElem {
        x.to_l()
    }
}

impl Field for FElem {
    const TAG: &'static str = "F";
    fn zero() -> Self {
        FElem::zero()
    }
    fn one() -> Self {
        FElem::one()
    }
    fn is_zero(&self) -> bool {
        self.root.is_zero()
    }
    fn is_one(&self) -> bool {
        self.root.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        FElem { root: self.root.sum(&rhs.root) }
    }
    fn neg(&self) -> Self {
        self.clone()
    }
    fn sub(&self, rhs: &Self) -> Self {
        Field::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        FElem { root: self.root.product(&rhs.root) }
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
    fn clear_denominators(v: &[Self; 4]) -> [Self; 4] {
        let roots: [LElem; 4] = std::array::from_fn(|k| v[k].root.clone());
        super::echelon::clear_denominators(&roots).map(|p| FElem { root: LElem::from_poly(p) })
    }
    fn rref_override(rows: &[[Self; 4]]) -> Option<Vec<[Self; 4]>> {
        // Squaring is a ring isomorphism, so it carries echelon forms of the
        // roots to echelon forms of the elements.
        let roots: Vec<[LElem; 4]> = rows.iter().map(|r| std::array::from_fn(|j| r[j].root.clone())).collect();
        let reduced = super::echelon::rref(&roots)?;
        Some(reduced.into_iter().map(|r| r.map(|root| FElem { root })).collect())
    }
    fn cost(&self) -> usize {
        self.root.size()
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        forward_ops!(@bin $t, Add, add, |a: &$t, b: &$t| Field::add(a, b));
        forward_ops!(@bin $t, Sub, sub, |a: &$t, b: &$t| Field::add(a, b));
        forward_ops!(@bin $t, Mul, mul, |a: &$t, b: &$t| Field::mul(a, b));
        forward_ops!(@bin $t, Div, div, |a: &$t, b: &$t| {
            Field::mul(a, &Field::inv(b).expect("division by zero"))
        });
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.clone()
            }
        }
    };
    (@bin $t:ty, $tr:ident, $m:ident, $f:expr) => {
        impl $tr<&$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                ($f)(self, rhs)
            }
        }
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                ($f)(&self, &rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                ($f)(&self, rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                ($f)(self, &rhs)
            }
        }
    };
}

forward_ops!(LElem);
forward_ops!(FElem);

impl Mul<&LElem> for &FElem {
    type Output = LElem;
    fn mul(self, rhs: &LElem) -> LElem {
        self.to_l().product(rhs)
    }
}

impl Mul<&FElem> for &LElem {
    type Output = LElem;
    fn mul(self, rhs: &FElem) -> LElem {
        self.product(&rhs.to_l())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> LElem {
        s.parse().unwrap()
    }

    #[test]
    fn char_two_addition() {
        assert!((&e("u/v") + &e("u/v")).is_zero());
    }

    #[test]
    fn product_and_inverse() {
        assert_eq!(&e("u") * &e("u"), e("u^2"));
        assert_eq!(e("u/(v+1)").try_inv().unwrap(), e("(v+1)/u"));
        assert_eq!(LElem::zero().try_inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn square_is_in_f() {
        assert_eq!(e("u+v").square().into_l(), e("u^2+v^2"));
        assert!(LElem::zero().square().is_zero());
        assert_eq!(e("1/(u+v)").square().into_l(), e("1/(u^2+v^2)"));
    }

    #[test]
    fn fractions_reduce() {
        let x = e("(u^2 + u*v)/(u + v)");
        assert_eq!(x, e("u"));
        assert!(x.is_polynomial());
        let y = &e("1/(u+1)") + &e("1/(u^2+1)");
        // 1/(u+1) + 1/(u+1)^2 = u/(u+1)^2
        assert_eq!(y, e("u/(u^2+1)"));
    }

    #[test]
    fn f_membership() {
        assert!(e("u^2*v^4 + 1").is_in_f());
        assert!(!e("u").is_in_f());
        assert!(FElem::new(e("u")).is_err());
        assert_eq!(e("u^2/(v^2+1)").square().sqrt(), &e("u^2/(v^2+1)"));
        assert_eq!(FElem::new(e("u^4/(v^2+1)")).unwrap().sqrt(), &e("u^2/(v+1)"));
    }
}
