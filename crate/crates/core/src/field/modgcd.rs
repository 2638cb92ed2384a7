//! Gcd of primitive polynomials in `GF(2)[u][v]` by reduction modulo
//! several irreducible `m(u)` of degree [`WORD_DEGREE`].
//!
//! Each image gcd is computed by Euclid in `GF(2^61)[v]`, where an element
//! is one machine word. The monic images are scaled by the gcd of the
//! leading coefficients and combined by Chinese remaindering until the
//! product of the moduli has larger degree than any coefficient of the
//! answer. A lift is accepted only after it divides both inputs exactly, so
//! an unlucky modulus costs more work, never a wrong answer.

use super::upoly::{clmul, UPoly};
use std::sync::Mutex;

/// Degree of each modulus; products of two residues fit in 122 bits.
const WORD_DEGREE: u32 = 61;

/// For prime `d`: `m` is irreducible iff it has no root in GF(2) and
/// `u^(2^d) = u mod m`.
fn is_irreducible_prime_degree(m: &UPoly) -> bool {
    let d = m.degree().unwrap_or(0);
    if d < 2 || !m.coeff(0) || m.term_count().is_multiple_of(2) {
        return false;
    }
    let x = UPoly::monomial(1);
    let mut p = x.clone();
    for _ in 0..d {
        p = p.square().rem(m);
    }
    p == x
}

/// The `index`-th irreducible `u^61 + tail`, in increasing order of the
/// tail. Found on first use and cached.
fn modulus_at(index: usize) -> WordField {
    static FOUND: Mutex<Vec<u64>> = Mutex::new(Vec::new());
    let mut found = FOUND.lock().expect("moduli cache poisoned");
    let mut t = found.last().map_or(0, |tail| tail >> 1);
    while found.len() <= index {
        t += 1;
        let tail = (t << 1) | 1;
        let mut m = UPoly::from_word(tail);
        m.flip(WORD_DEGREE);
        if is_irreducible_prime_degree(&m) {
            found.push(tail);
        }
    }
    WordField { tail: found[index] }
}

/// `GF(2)[u] / (u^61 + tail)`, elements packed in one word.
#[derive(Clone, Copy)]
struct WordField {
    tail: u64,
}

impl WordField {
    const MASK: u128 = (1u128 << WORD_DEGREE) - 1;

    #[inline]
    fn fold(&self, mut p: u128) -> u64 {
        while p >> WORD_DEGREE != 0 {
            let (lo, hi) = clmul((p >> WORD_DEGREE) as u64, self.tail);
            p = (p & Self::MASK) ^ (((hi as u128) << 64) | lo as u128);
        }
        p as u64
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        let (lo, hi) = clmul(a, b);
        self.fold(((hi as u128) << 64) | lo as u128)
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0, "zero has no inverse");
        // Invariant: s * a = r modulo m for both rows.
        let (mut r0, mut r1) = ((1u64 << WORD_DEGREE) | self.tail, a);
        let (mut s0, mut s1) = (0u64, 1u64);
        loop {
            if r1 == 1 {
                return s1;
            }
            if r0 == 1 {
                return s0;
            }
            if r0.leading_zeros() > r1.leading_zeros() {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
            }
            let shift = r1.leading_zeros() - r0.leading_zeros();
            r0 ^= r1 << shift;
            s0 ^= s1 << shift;
        }
    }

    fn reduce(&self, p: &UPoly) -> u64 {
        p.words().iter().rev().fold(0u64, |acc, &w| self.fold(((acc as u128) << 64) | w as u128))
    }

    fn modulus(&self) -> UPoly {
        let mut m = UPoly::from_word(self.tail);
        m.flip(WORD_DEGREE);
        m
    }
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Monic gcd of the images of `a` and `b`; `None` when a leading
/// coefficient vanishes modulo the field's modulus.
fn image_gcd(a: &[UPoly], b: &[UPoly], k: &WordField) -> Option<Vec<u64>> {
    let image = |p: &[UPoly]| p.iter().map(|c| k.reduce(c)).collect::<Vec<u64>>();
    let (mut x, mut y) = (image(a), image(b));
    if x.last() == Some(&0) || y.last() == Some(&0) {
        return None;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let n = y.len() - 1;
        let lead_inv = k.inv(y[n]);
        while x.len() > n {
            let top = x.len() - 1;
            let c = k.mul(x[top], lead_inv);
            let shift = top - n;
            for (j, &yj) in y[..n].iter().enumerate() {
                x[shift + j] ^= k.mul(c, yj);
            }
            x.pop();
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = k.inv(*x.last().expect("nonzero gcd"));
    Some(x.iter().map(|&c| k.mul(c, inv)).collect())
}

/// Coefficients known modulo `modulus`, extended one word field at a time.
struct Crt {
    coeffs: Vec<UPoly>,
    modulus: UPoly,
}

impl Crt {
    fn start(image: &[u64], k: &WordField) -> Self {
        Crt { coeffs: image.iter().map(|&c| UPoly::from_word(c)).collect(), modulus: k.modulus() }
    }

    fn extend(&mut self, image: &[u64], k: &WordField) {
        let scale = k.inv(k.reduce(&self.modulus));
        for (c, &target) in self.coeffs.iter_mut().zip(image) {
            let t = k.mul(target ^ k.reduce(c), scale);
            if t != 0 {
                c.add_assign(&self.modulus.mul(&UPoly::from_word(t)));
            }
        }
        self.modulus = self.modulus.mul(&k.modulus());
    }

    fn degree(&self) -> u32 {
        self.modulus.degree().unwrap_or(0)
    }
}

/// Gcd of two polynomials given as `v`-rows that are primitive over
/// `GF(2)[u]` and of positive `v`-degree. `divides(g)` must report whether
/// the candidate `g` divides both inputs.
pub(super) fn primitive_gcd(a: &[UPoly], b: &[UPoly], mut divides: impl FnMut(&[UPoly]) -> bool) -> Vec<UPoly> {
    let lead = a.last().unwrap().gcd(b.last().unwrap());
    let deg_u = |p: &[UPoly]| p.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let mut needed = deg_u(a).max(deg_u(b)) + lead.degree().unwrap_or(0) + 1;
    let mut acc: Option<Crt> = None;
    for index in 0.. {
        let k = &modulus_at(index);
        let Some(g) = image_gcd(a, b, k) else { continue };
        if g.len() == 1 {
            // The true gcd has no larger v-degree than any of its images.
            return vec![UPoly::one()];
        }
        let scale = k.reduce(&lead);
        let image: Vec<u64> = g.iter().map(|&c| k.mul(c, scale)).collect();
        match &mut acc {
            Some(crt) if crt.coeffs.len() < image.len() => continue,
            Some(crt) if crt.coeffs.len() == image.len() => crt.extend(&image, k),
            _ => acc = Some(Crt::start(&image, k)),
        }
        let crt = acc.as_ref().expect("set above");
        if crt.degree() < needed {
            continue;
        }
        let mut lifted = crt.coeffs.clone();
        let mut content = UPoly::zero();
        for c in &lifted {
            content = content.gcd(c);
        }
        if !content.is_one() {
            for c in lifted.iter_mut() {
                *c = c.div_exact(&content).expect("content divides");
            }
        }
        if divides(&lifted) {
            return lifted;
        }
        // Only an unlucky modulus of the same image degree gets here.
        needed = crt.degree() + WORD_DEGREE;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_moduli_are_irreducible() {
        for index in 0..4 {
            assert!(is_irreducible_prime_degree(&modulus_at(index).modulus()));
        }
        assert_ne!(modulus_at(0).tail, modulus_at(1).tail);
        // u^2 + u + 1 is irreducible, u^2 + 1 = (u + 1)^2 is not.
        let mut q = UPoly::monomial(2);
        q.flip(0);
        assert!(!is_irreducible_prime_degree(&q));
        q.flip(1);
        assert!(is_irreducible_prime_degree(&q));
    }

    #[test]
    fn word_field_arithmetic() {
        let k = modulus_at(0);
        let a = 0x1234_5678_9abc_def1u64 & ((1 << WORD_DEGREE) - 1);
        assert_eq!(k.mul(a, k.inv(a)), 1);
        let big = UPoly::monomial(200);
        assert_eq!(UPoly::from_word(k.reduce(&big)), big.rem(&k.modulus()));
    }

    #[test]
    fn chinese_remainder_recovers_coefficients() {
        let (k1, k2) = (modulus_at(0), modulus_at(1));
        let target = UPoly::monomial(100);
        let mut crt = Crt::start(&[k1.reduce(&target)], &k1);
        crt.extend(&[k2.reduce(&target)], &k2);
        assert_eq!(crt.coeffs[0], target);
    }
}
