//! Dense univariate polynomials over GF(2), packed 64 coefficients per word.
//!
//! Bit `k` of the word vector is the coefficient of `u^k`. The word vector is
//! kept trimmed: no trailing zero words, so the zero polynomial is empty.

use smallvec::SmallVec;

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    words: Words,
}

impl std::fmt::Debug for UPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UPoly[")?;
        let mut first = true;
        for e in self.exponents().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            write!(f, "u^{e}")?;
        }
        write!(f, "]")
    }
}

/// Carry-less 64x64 -> 128 bit product.
#[inline]
pub(super) fn clmul(a: u64, b: u64) -> (u64, u64) {
    #[cfg(all(target_arch = "x86_64", target_feature = "pclmulqdq"))]
    {
        use std::arch::x86_64::{_mm_clmulepi64_si128, _mm_cvtsi128_si64, _mm_set_epi64x, _mm_srli_si128};
        // SAFETY: gated on the pclmulqdq target feature at compile time.
        unsafe {
            let x = _mm_set_epi64x(0, a as i64);
            let y = _mm_set_epi64x(0, b as i64);
            let p = _mm_clmulepi64_si128(x, y, 0);
            let lo = _mm_cvtsi128_si64(p) as u64;
            let hi = _mm_cvtsi128_si64(_mm_srli_si128(p, 8)) as u64;
            (lo, hi)
        }
    }
    #[cfg(not(all(target_arch = "x86_64", target_feature = "pclmulqdq")))]
    {
        clmul_portable(a, b)
    }
}

/// `dst ^= src * u^shift`, where `dst` is long enough to hold the result.
#[inline]
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: u32) {
    let ws = (shift / 64) as usize;
    let bs = shift % 64;
    for (i, &w) in src.iter().enumerate() {
        dst[i + ws] ^= w << bs;
        if bs != 0 && i + ws + 1 < dst.len() {
            dst[i + ws + 1] ^= w >> (64 - bs);
        }
    }
}

/// Moves bit `k` of `x` to bit `2k`.
#[inline]
fn spread_bits(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

#[inline]
#[allow(dead_code)]
fn clmul_portable(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    let mut bits = a;
    while bits != 0 {
        let k = bits.trailing_zeros();
        lo ^= b << k;
        if k != 0 {
            hi ^= b >> (64 - k);
        }
        bits &= bits - 1;
    }
    (lo, hi)
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { words: Words::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(exp: u32) -> Self {
        let w = (exp / 64) as usize;
        let mut words: Words = SmallVec::from_elem(0, w + 1);
        words[w] = 1u64 << (exp % 64);
        UPoly { words }
    }

    pub(super) fn from_word(w: u64) -> Self {
        Self::from_words(SmallVec::from_elem(w, 1))
    }

    /// Packed coefficients, 64 per word, lowest degree first.
    pub(super) fn words(&self) -> &[u64] {
        &self.words
    }

    fn from_words(mut words: Words) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        UPoly { words }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<u32> {
        let last = *self.words.last()?;
        Some((self.words.len() as u32 - 1) * 64 + 63 - last.leading_zeros())
    }

    /// Lowest exponent present, or `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i as u32 * 64 + w.trailing_zeros())
    }

    #[inline]
    pub fn coeff(&self, exp: u32) -> bool {
        let w = (exp / 64) as usize;
        w < self.words.len() && (self.words[w] >> (exp % 64)) & 1 == 1
    }

    pub fn flip(&mut self, exp: u32) {
        let w = (exp / 64) as usize;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (exp % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn term_count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents in ascending order.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        (0..self.words.len() as u32 * 64).filter(move |&e| self.coeff(e))
    }

    pub fn add_assign(&mut self, other: &UPoly) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= *b;
        }
        self.trim();
    }

    #[cfg(test)]
    pub fn add(&self, other: &UPoly) -> UPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out: Words = SmallVec::from_elem(0, self.words.len() + other.words.len());
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.words.iter().enumerate() {
                let (lo, hi) = clmul(a, b);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        UPoly::from_words(out)
    }

    /// Multiply by `u^k`.
    #[cfg(test)]
    pub fn shl(&self, k: u32) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let ws = (k / 64) as usize;
        let bs = k % 64;
        let mut out: Words = SmallVec::from_elem(0, self.words.len() + ws + 1);
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] ^= w << bs;
            if bs != 0 {
                out[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        UPoly::from_words(out)
    }

    /// Divide by `u^k`, discarding the low `k` coefficients.
    pub fn shr(&self, k: u32) -> UPoly {
        let ws = (k / 64) as usize;
        if ws >= self.words.len() {
            return UPoly::zero();
        }
        let bs = k % 64;
        let n = self.words.len() - ws;
        let mut out: Words = SmallVec::from_elem(0, n);
        for i in 0..n {
            let mut w = self.words[i + ws] >> bs;
            if bs != 0 && i + ws + 1 < self.words.len() {
                w |= self.words[i + ws + 1] << (64 - bs);
            }
            out[i] = w;
        }
        UPoly::from_words(out)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        if dd == 0 {
            return (self.clone(), UPoly::zero());
        }
        let mut rem = self.words.clone();
        let rd0 = match self.degree() {
            Some(d) if d >= dd => d,
            _ => return (UPoly::zero(), self.clone()),
        };
        let mut quot: Words = SmallVec::from_elem(0, ((rd0 - dd) / 64 + 1) as usize);
        let mut rd = rd0;
        loop {
            if (rem[(rd / 64) as usize] >> (rd % 64)) & 1 == 1 {
                let shift = rd - dd;
                quot[(shift / 64) as usize] ^= 1u64 << (shift % 64);
                xor_shifted(&mut rem, &divisor.words, shift);
            }
            if rd == dd {
                break;
            }
            rd -= 1;
        }
        (UPoly::from_words(quot), UPoly::from_words(rem))
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor).1
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.is_one() || b.is_one() {
            return UPoly::one();
        }
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Coefficient-wise square: `(sum u^e)^2 = sum u^(2e)`.
    pub fn square(&self) -> UPoly {
        let mut out: Words = SmallVec::from_elem(0, 2 * self.words.len());
        for (i, &w) in self.words.iter().enumerate() {
            out[2 * i] = spread_bits(w as u32);
            out[2 * i + 1] = spread_bits((w >> 32) as u32);
        }
        UPoly::from_words(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[u32]) -> UPoly {
        let mut out = UPoly::zero();
        for &e in exps {
            out.flip(e);
        }
        out
    }

    #[test]
    fn portable_clmul_agrees_with_shift_xor() {
        let pairs = [(0u64, 5u64), (3, 3), (u64::MAX, u64::MAX), (0x8000_0000_0000_0001, 0xdead_beef)];
        for (a, b) in pairs {
            let mut lo = 0u64;
            let mut hi = 0u64;
            for k in 0..64 {
                if (a >> k) & 1 == 1 {
                    lo ^= b << k;
                    if k > 0 {
                        hi ^= b >> (64 - k);
                    }
                }
            }
            assert_eq!(clmul_portable(a, b), (lo, hi));
            assert_eq!(clmul(a, b), (lo, hi));
        }
    }

    #[test]
    fn cube_of_u_plus_one() {
        let a = p(&[1, 0]);
        assert_eq!(a.mul(&a).mul(&a), p(&[3, 2, 1, 0]));
    }

    #[test]
    fn multiword_product_and_division() {
        let a = p(&[130, 64, 3, 0]);
        let b = p(&[70, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod.degree(), Some(200));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert!(prod.add(&UPoly::one()).div_exact(&a).is_none());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = p(&[2, 1, 0]);
        let a = f.mul(&p(&[1, 0]));
        let b = f.mul(&p(&[3, 1, 0]));
        assert_eq!(a.gcd(&b), f);
        assert_eq!(p(&[1]).gcd(&p(&[1, 0])), UPoly::one());
        assert_eq!(UPoly::zero().gcd(&f), f);
    }

    #[test]
    fn shifts() {
        let a = p(&[63, 5, 0]);
        assert_eq!(a.shl(70).shr(70), a);
        assert_eq!(a.shr(5), p(&[58, 0]));
        assert_eq!(a.square(), a.mul(&a));
    }
}
