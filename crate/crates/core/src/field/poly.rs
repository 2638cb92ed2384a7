//! Bivariate polynomials over GF(2) in `u` and `v`.
//!
//! Stored recursively as a polynomial in `v` whose coefficients are packed
//! univariate polynomials in `u`. Coefficients live in GF(2), so a polynomial
//! is the same thing as a finite set of exponent pairs and addition is the
//! symmetric difference of those sets.

use super::modgcd;
use super::upoly::UPoly;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPolyGF2 {
    /// `rows[b]` is the coefficient of `v^b`; no trailing zero rows.
    rows: Vec<UPoly>,
}

impl fmt::Debug for BivarPolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPolyGF2({self})")
    }
}

impl BivarPolyGF2 {
    pub fn zero() -> Self {
        BivarPolyGF2 { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn u() -> Self {
        Self::monomial(1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        let mut rows = vec![UPoly::zero(); b as usize + 1];
        rows[b as usize] = UPoly::monomial(a);
        BivarPolyGF2 { rows }
    }

    /// Builds a polynomial from exponent pairs; repeated pairs cancel.
    pub fn from_monomials<I: IntoIterator<Item = (u32, u32)>>(monomials: I) -> Self {
        let mut out = Self::zero();
        for (a, b) in monomials {
            out.toggle(a, b);
        }
        out
    }

    fn from_rows(mut rows: Vec<UPoly>) -> Self {
        while rows.last().is_some_and(UPoly::is_zero) {
            rows.pop();
        }
        BivarPolyGF2 { rows }
    }

    /// Flips the coefficient of `u^a v^b`.
    pub fn toggle(&mut self, a: u32, b: u32) {
        let b = b as usize;
        if b >= self.rows.len() {
            self.rows.resize(b + 1, UPoly::zero());
        }
        self.rows[b].flip(a);
        while self.rows.last().is_some_and(UPoly::is_zero) {
            self.rows.pop();
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_one()
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.rows.get(b as usize).is_some_and(|r| r.coeff(a))
    }

    pub fn degree_v(&self) -> Option<u32> {
        self.rows.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn degree_u(&self) -> Option<u32> {
        self.rows.iter().filter_map(UPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.monomials().map(|(a, b)| a + b).max()
    }

    pub fn term_count(&self) -> u32 {
        self.rows.iter().map(UPoly::term_count).sum()
    }

    /// Rough cost measure used for pivot selection.
    pub fn size(&self) -> usize {
        match (self.degree_u(), self.degree_v()) {
            (Some(du), Some(dv)) => (du as usize + 1) * (dv as usize + 1),
            _ => 0,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.term_count() == 1
    }

    /// All exponent pairs, unordered.
    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(b, row)| row.exponents().map(move |a| (a, b as u32)))
    }

    /// Exponent pairs in canonical display order: descending total degree,
    /// ties by descending `u`-exponent.
    pub fn sorted_monomials(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<_> = self.monomials().collect();
        out.sort_by_key(|&(a, b)| std::cmp::Reverse((a + b, a)));
        out
    }

    /// True when every exponent is even, i.e. the polynomial lies in
    /// GF(2)[u^2, v^2].
    pub fn has_even_exponents(&self) -> bool {
        self.monomials().all(|(a, b)| a % 2 == 0 && b % 2 == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.rows.len() >= other.rows.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut rows = long.rows.clone();
        for (r, s) in rows.iter_mut().zip(short.rows.iter()) {
            r.add_assign(s);
        }
        Self::from_rows(rows)
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.rows.len() > self.rows.len() {
            self.rows.resize(other.rows.len(), UPoly::zero());
        }
        for (r, s) in self.rows.iter_mut().zip(other.rows.iter()) {
            r.add_assign(s);
        }
        while self.rows.last().is_some_and(UPoly::is_zero) {
            self.rows.pop();
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut rows = vec![UPoly::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                if !b.is_zero() {
                    rows[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Self::from_rows(rows)
    }

    fn mul_upoly(&self, c: &UPoly) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self::from_rows(self.rows.iter().map(|r| r.mul(c)).collect())
    }

    /// Frobenius: squares every monomial, `(sum m)^2 = sum m^2` in characteristic 2.
    pub fn square(&self) -> Self {
        let mut rows = vec![UPoly::zero(); self.rows.len().saturating_mul(2).saturating_sub(1)];
        for (b, row) in self.rows.iter().enumerate() {
            rows[2 * b] = row.square();
        }
        Self::from_rows(rows)
    }

    /// Keeps only the monomials whose exponents have the given parities, and
    /// divides out one `u` (resp. `v`) when that parity is odd.
    pub fn parity_part(&self, u_odd: bool, v_odd: bool) -> Self {
        Self::from_monomials(
            self.monomials()
                .filter(|(a, b)| (a % 2 == 1) == u_odd && (b % 2 == 1) == v_odd)
                .map(|(a, b)| (a - u_odd as u32, b - v_odd as u32)),
        )
    }

    /// Smallest `u`- and `v`-exponents over all monomials.
    fn monomial_content(&self) -> (u32, u32) {
        let mu = self.rows.iter().filter_map(UPoly::low_degree).min().unwrap_or(0);
        let mv = self.rows.iter().position(|r| !r.is_zero()).unwrap_or(0) as u32;
        (mu, mv)
    }

    fn div_monomial(&self, a: u32, b: u32) -> Self {
        Self::from_rows(self.rows[b as usize..].iter().map(|r| r.shr(a)).collect())
    }

    /// Content with respect to `v`: the gcd of the `u`-coefficients.
    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for r in &self.rows {
            g = g.gcd(r);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_upoly_exact(&self, c: &UPoly) -> Option<Self> {
        if c.is_one() {
            return Some(self.clone());
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_rows(rows))
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    /// Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if divisor.is_one() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.rows.len() == 1 {
            return self.div_upoly_exact(&divisor.rows[0]);
        }
        let n = divisor.rows.len() - 1;
        let lc = divisor.rows.last().unwrap();
        let mut rem = self.rows.clone();
        if rem.len() <= n {
            return None;
        }
        let mut quot = vec![UPoly::zero(); rem.len() - n];
        for top in (n..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let q = rem[top].div_exact(lc)?;
            let shift = top - n;
            for (k, d) in divisor.rows.iter().enumerate() {
                if !d.is_zero() {
                    let t = q.mul(d);
                    rem[shift + k].add_assign(&t);
                }
            }
            quot[shift] = q;
        }
        rem.iter().all(UPoly::is_zero).then(|| Self::from_rows(quot))
    }

    /// Greatest common divisor. Over GF(2) the only unit is 1, so the result
    /// is unique. `gcd(a, 0) = a`; both-zero input panics.
    pub fn gcd(&self, other: &Self) -> Self {
        self.gcd_cofactors(other).0
    }

    /// `(g, self / g, other / g)` where `g = gcd(self, other)`.
    pub fn gcd_cofactors(&self, other: &Self) -> (Self, Self, Self) {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials is undefined"
        );
        if self.is_zero() {
            return (other.clone(), Self::zero(), Self::one());
        }
        if other.is_zero() {
            return (self.clone(), Self::one(), Self::zero());
        }
        if self == other {
            return (self.clone(), Self::one(), Self::one());
        }
        if self.is_one() || other.is_one() {
            return (Self::one(), self.clone(), other.clone());
        }
        let (au, av) = self.monomial_content();
        let (bu, bv) = other.monomial_content();
        let (mu, mv) = (au.min(bu), av.min(bv));
        let mono = Self::monomial(mu, mv);
        if self.is_monomial() || other.is_monomial() {
            return (mono, self.div_monomial(mu, mv), other.div_monomial(mu, mv));
        }
        let a = self.div_monomial(au, av);
        let b = other.div_monomial(bu, bv);
        let ca = a.content();
        let cb = b.content();
        let c = ca.gcd(&cb);
        let a = a.div_upoly_exact(&ca).unwrap();
        let b = b.div_upoly_exact(&cb).unwrap();
        // A primitive polynomial of v-degree zero is 1.
        let (g, qa, qb) = if a.rows.len() == 1 || b.rows.len() == 1 {
            (Self::one(), a, b)
        } else {
            let mut quotients = None;
            let divides = |g: &[UPoly]| {
                let g = Self::from_rows(g.to_vec());
                let found = a.div_exact(&g).zip(b.div_exact(&g));
                let ok = found.is_some();
                quotients = found;
                ok
            };
            let g = Self::from_rows(modgcd::primitive_gcd(&a.rows, &b.rows, divides));
            match quotients {
                Some((qa, qb)) => (g, qa, qb),
                // Coprime images return before any trial division.
                None => (g, a, b),
            }
        };
        let cofactor = |q: Self, cq: &UPoly, eu: u32, ev: u32| {
            q.mul_upoly(&cq.div_exact(&c).expect("content gcd divides")).mul(&Self::monomial(eu - mu, ev - mv))
        };
        (g.mul_upoly(&c).mul(&mono), cofactor(qa, &ca, au, av), cofactor(qb, &cb, bu, bv))
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (_, a, _) = self.gcd_cofactors(other);
        a.mul(other)
    }

    /// Maps `u -> u^2, v -> v^2` inverse: halves all exponents. Requires even
    /// exponents.
    pub fn halve_exponents(&self) -> Option<Self> {
        if !self.has_even_exponents() {
            return None;
        }
        Some(Self::from_monomials(self.monomials().map(|(a, b)| (a / 2, b / 2))))
    }
}

impl fmt::Display for BivarPolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .sorted_monomials()
            .into_iter()
            .map(|(a, b)| monomial_string(a, b))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn monomial_string(a: u32, b: u32) -> String {
    let factor = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [factor("u", a), factor("v", b)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl Serialize for BivarPolyGF2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BivarPolyGF2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        super::parse::parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(monos: &[(u32, u32)]) -> BivarPolyGF2 {
        BivarPolyGF2::from_monomials(monos.iter().copied())
    }

    #[test]
    fn frobenius_on_u_plus_v() {
        let s = p(&[(1, 0), (0, 1)]);
        assert_eq!(s.mul(&s), p(&[(2, 0), (0, 2)]));
        assert_eq!(s.square(), s.mul(&s));
    }

    #[test]
    fn zero_annihilates() {
        let s = p(&[(3, 1), (0, 0)]);
        assert!(s.mul(&BivarPolyGF2::zero()).is_zero());
    }

    #[test]
    fn cube_of_u_plus_one() {
        let s = p(&[(1, 0), (0, 0)]);
        assert_eq!(s.mul(&s).mul(&s), p(&[(3, 0), (2, 0), (1, 0), (0, 0)]));
    }

    #[test]
    fn gcd_examples() {
        let a = p(&[(2, 0), (1, 1)]);
        let b = p(&[(1, 0), (0, 1)]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.gcd(&a), a);
        assert_eq!(BivarPolyGF2::u().gcd(&BivarPolyGF2::v()), BivarPolyGF2::one());
        assert_eq!(a.gcd(&BivarPolyGF2::zero()), a);
    }

    #[test]
    fn gcd_recovers_planted_factor() {
        let f = p(&[(2, 1), (0, 2), (1, 0), (0, 0)]);
        let g = p(&[(1, 3), (3, 0), (0, 0)]);
        let h = p(&[(0, 2), (1, 1), (1, 0)]);
        let a = f.mul(&g);
        let b = f.mul(&h).mul(&BivarPolyGF2::u());
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn exact_division() {
        let f = p(&[(2, 1), (0, 2), (1, 0), (0, 0)]);
        let g = p(&[(1, 3), (3, 0), (0, 0)]);
        let prod = f.mul(&g);
        assert_eq!(prod.div_exact(&f), Some(g.clone()));
        assert_eq!(prod.div_exact(&g), Some(f.clone()));
        assert_eq!(prod.add(&BivarPolyGF2::u()).div_exact(&f), None);
    }

    #[test]
    fn display_order() {
        let s = p(&[(0, 0), (1, 0), (2, 1)]);
        assert_eq!(s.to_string(), "u^2*v + u + 1");
        assert_eq!(p(&[(0, 2), (1, 1), (2, 0)]).to_string(), "u^2 + u*v + v^2");
        assert_eq!(BivarPolyGF2::zero().to_string(), "0");
    }

    #[test]
    fn parity_split() {
        let s = p(&[(3, 0), (2, 2), (1, 1), (0, 3)]);
        assert_eq!(s.parity_part(false, false), p(&[(2, 2)]));
        assert_eq!(s.parity_part(true, false), p(&[(2, 0)]));
        assert_eq!(s.parity_part(false, true), p(&[(0, 2)]));
        assert_eq!(s.parity_part(true, true), p(&[(0, 0)]));
    }
}
