//! Exact linear algebra on row vectors of length four over any [`Field`].
//!
//! Vectors are rows and matrices act on the right: `x -> x * M`.

use crate::scalar::Field;
use serde::{Serialize, Serializer};
use std::array;

pub type Vec4<K> = [K; 4];

pub fn zero_vec<K: Field>() -> Vec4<K> {
    array::from_fn(|_| K::zero())
}

pub fn unit_vec<K: Field>(n: usize) -> Vec4<K> {
    array::from_fn(|m| if m == n { K::one() } else { K::zero() })
}

pub fn is_zero_vec<K: Field>(v: &Vec4<K>) -> bool {
    v.iter().all(K::is_zero)
}

pub fn vec_add<K: Field>(a: &Vec4<K>, b: &Vec4<K>) -> Vec4<K> {
    array::from_fn(|m| a[m].add(&b[m]))
}

pub fn vec_scale<K: Field>(c: &K, a: &Vec4<K>) -> Vec4<K> {
    array::from_fn(|m| c.mul(&a[m]))
}

pub fn dot<K: Field>(a: &Vec4<K>, b: &Vec4<K>) -> K {
    a.iter()
        .zip(b.iter())
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(K::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// The vector `c` with `dot(x, c) = det[x; a; b; d]` for every `x`; it spans
/// the annihilator of `a, b, d` when they are independent and is zero
/// otherwise.
pub fn cofactor_vector<K: Field>(a: &Vec4<K>, b: &Vec4<K>, d: &Vec4<K>) -> Vec4<K> {
    let det3 = |c: [usize; 3]| {
        let m = |r: &Vec4<K>, k: usize| r[c[k]].clone();
        let t1 = m(a, 0).mul(&m(b, 1).mul(&m(d, 2)).sub(&m(b, 2).mul(&m(d, 1))));
        let t2 = m(a, 1).mul(&m(b, 0).mul(&m(d, 2)).sub(&m(b, 2).mul(&m(d, 0))));
        let t3 = m(a, 2).mul(&m(b, 0).mul(&m(d, 1)).sub(&m(b, 1).mul(&m(d, 0))));
        t1.sub(&t2).add(&t3)
    };
    [
        det3([1, 2, 3]),
        det3([0, 2, 3]).neg(),
        det3([0, 1, 3]),
        det3([0, 1, 2]).neg(),
    ]
}

/// Maps every coordinate through `f`.
pub fn vec_map<K, T, F: Fn(&K) -> T>(a: &Vec4<K>, f: F) -> Vec4<T> {
    array::from_fn(|m| f(&a[m]))
}

/// 4x4 matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat4<K>(pub [[K; 4]; 4]);

impl<K: Field> Mat4<K> {
    pub fn from_fn<F: FnMut(usize, usize) -> K>(mut f: F) -> Self {
        Mat4(array::from_fn(|s| array::from_fn(|t| f(s, t))))
    }

    pub fn from_rows(rows: [Vec4<K>; 4]) -> Self {
        Mat4(rows)
    }

    pub fn identity() -> Self {
        Self::from_fn(|s, t| if s == t { K::one() } else { K::zero() })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| K::zero())
    }

    pub fn scalar(c: &K) -> Self {
        Self::from_fn(|s, t| if s == t { c.clone() } else { K::zero() })
    }

    pub fn row(&self, s: usize) -> &Vec4<K> {
        &self.0[s]
    }

    pub fn rows(&self) -> &[Vec4<K>; 4] {
        &self.0
    }

    pub fn column(&self, t: usize) -> Vec4<K> {
        array::from_fn(|s| self.0[s][t].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|s, t| self.0[t][s].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|s, t| self.0[s][t].add(&other.0[s][t]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(|s, t| self.0[s][t].sub(&other.0[s][t]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(|s, t| {
            (0..4).fold(K::zero(), |acc, m| {
                if self.0[s][m].is_zero() || other.0[m][t].is_zero() {
                    acc
                } else {
                    acc.add(&self.0[s][m].mul(&other.0[m][t]))
                }
            })
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_fn(|s, t| c.mul(&self.0[s][t]))
    }

    /// Row vector times matrix.
    pub fn apply(&self, x: &Vec4<K>) -> Vec4<K> {
        array::from_fn(|t| {
            (0..4).fold(K::zero(), |acc, s| {
                if x[s].is_zero() || self.0[s][t].is_zero() {
                    acc
                } else {
                    acc.add(&x[s].mul(&self.0[s][t]))
                }
            })
        })
    }

    pub fn map<T: Field, F: Fn(&K) -> T>(&self, f: F) -> Mat4<T> {
        Mat4::from_fn(|s, t| f(&self.0[s][t]))
    }

    pub fn rank(&self) -> usize {
        rref(self.0.to_vec()).len()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..4).all(|s| (0..s).all(|t| self.0[s][t].is_zero()))
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a: Vec<Vec<K>> = (0..4)
            .map(|s| {
                let mut row = self.0[s].to_vec();
                row.extend((0..4).map(|t| if s == t { K::one() } else { K::zero() }));
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| a[r][col].cost())?;
            a.swap(col, pivot);
            let inv = a[col][col].inv()?;
            a[col] = a[col].iter().map(|x| x.mul(&inv)).collect();
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let pivot_row = a[col].clone();
                    for (x, p) in a[r].iter_mut().zip(pivot_row.iter()) {
                        if !p.is_zero() {
                            *x = x.sub(&f.mul(p));
                        }
                    }
                }
            }
        }
        Some(Self::from_fn(|s, t| a[s][4 + t].clone()))
    }

    /// Determinant via cofactor expansion along the first row.
    pub fn det(&self) -> K {
        fn det3<K: Field>(m: &[[K; 3]; 3]) -> K {
            let t1 = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
            let t2 = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
            let t3 = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
            t1.sub(&t2).add(&t3)
        }
        let mut acc = K::zero();
        for c in 0..4 {
            if self.0[0][c].is_zero() {
                continue;
            }
            let minor: [[K; 3]; 3] = array::from_fn(|r| {
                array::from_fn(|k| {
                    let col = if k < c { k } else { k + 1 };
                    self.0[r + 1][col].clone()
                })
            });
            let term = self.0[0][c].mul(&det3(&minor));
            acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

impl<K: Field> Serialize for Mat4<K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Reduced row echelon form with unit pivots; zero rows are dropped.
///
/// The result depends only on the row space, so it is a canonical form.
pub fn rref<K: Field>(rows: Vec<Vec4<K>>) -> Vec<Vec4<K>> {
    K::rref_override(&rows).unwrap_or_else(|| rref_generic(rows))
}

/// Gauss-Jordan elimination using only the field operations.
pub fn rref_generic<K: Field>(mut rows: Vec<Vec4<K>>) -> Vec<Vec4<K>> {
    rows.retain(|r| !is_zero_vec(r));
    let mut out_len = 0;
    for col in 0..4 {
        if out_len == rows.len() {
            break;
        }
        let Some(pivot) = (out_len..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].cost() + rows[r].iter().map(K::cost).sum::<usize>())
        else {
            continue;
        };
        rows.swap(out_len, pivot);
        let inv = rows[out_len][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            rows[out_len] = array::from_fn(|m| {
                if m == col {
                    K::one()
                } else {
                    rows[out_len][m].mul(&inv)
                }
            });
        }
        let pivot_row = rows[out_len].clone();
        for r in 0..rows.len() {
            if r != out_len && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                rows[r] = array::from_fn(|m| {
                    if m == col {
                        K::zero()
                    } else if pivot_row[m].is_zero() {
                        rows[r][m].clone()
                    } else {
                        rows[r][m].sub(&f.mul(&pivot_row[m]))
                    }
                });
            }
        }
        out_len += 1;
    }
    rows.truncate(out_len);
    rows.retain(|r| !is_zero_vec(r));
    rows
}

/// Pivot column of each row of a matrix already in reduced echelon form.
pub fn pivot_columns<K: Field>(rows: &[Vec4<K>]) -> Vec<usize> {
    rows.iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

/// Basis of `{ w : r . w = 0 for every row r }`, in reduced echelon form.
pub fn orthogonal_complement<K: Field>(rows: &[Vec4<K>]) -> Vec<Vec4<K>> {
    let reduced = rref(rows.to_vec());
    let pivots = pivot_columns(&reduced);
    let free = (0..4).filter(|c| !pivots.contains(c));
    let basis: Vec<Vec4<K>> = free
        .map(|f| {
            let mut w = zero_vec::<K>();
            w[f] = K::one();
            for (row, &pc) in reduced.iter().zip(pivots.iter()) {
                w[pc] = row[f].neg();
            }
            w
        })
        .collect();
    rref(basis)
}

pub fn rank<K: Field>(rows: &[Vec4<K>]) -> usize {
    rref(rows.to_vec()).len()
}

#[cfg(test)]
pub(crate) mod test_field {
    //! A small prime field used to test the generic code away from
    //! characteristic two, where sign mistakes would be invisible.
    use super::Field;
    use std::fmt;

    pub const P: u64 = 101;

    #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
    pub struct Gf(pub u64);

    impl fmt::Display for Gf {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.0)
        }
    }

    impl Gf {
        pub fn new(x: i64) -> Self {
            Gf(x.rem_euclid(P as i64) as u64)
        }
    }

    impl Field for Gf {
        const TAG: &'static str = "GF101";
        fn zero() -> Self {
            Gf(0)
        }
        fn one() -> Self {
            Gf(1)
        }
        fn is_zero(&self) -> bool {
            self.0 == 0
        }
        fn add(&self, rhs: &Self) -> Self {
            Gf((self.0 + rhs.0) % P)
        }
        fn neg(&self) -> Self {
            Gf((P - self.0) % P)
        }
        fn mul(&self, rhs: &Self) -> Self {
            Gf(self.0 * rhs.0 % P)
        }
        fn inv(&self) -> Option<Self> {
            if self.0 == 0 {
                return None;
            }
            let (mut base, mut e, mut acc) = (self.0, P - 2, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % P;
                }
                base = base * base % P;
                e >>= 1;
            }
            Some(Gf(acc))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::test_field::Gf;
    use super::*;

    fn v(x: [i64; 4]) -> Vec4<Gf> {
        x.map(Gf::new)
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref(vec![v([2, 4, 0, 1]), v([1, 0, 3, 0])]);
        let b = rref(vec![v([3, 4, 3, 1]), v([5, 0, 15, 0]), v([0, 0, 0, 0])]);
        assert_eq!(a, b);
        assert_eq!(rref(a.clone()), a);
    }

    #[test]
    fn complement_is_orthogonal() {
        let rows = vec![v([1, 2, 3, 4]), v([0, 1, 5, 7])];
        let comp = orthogonal_complement(&rows);
        assert_eq!(comp.len(), 2);
        for r in &rows {
            for w in &comp {
                assert!(dot(r, w).is_zero());
            }
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat4::from_rows([v([1, 2, 0, 0]), v([0, 1, 3, 0]), v([4, 0, 1, 0]), v([0, 0, 0, 2])]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat4::identity());
        // det = 2 * (1*1 - 2*(0 - 12)) = 2 * 25
        assert_eq!(m.det(), Gf::new(50));
        let singular = Mat4::from_rows([v([1, 2, 0, 0]), v([2, 4, 0, 0]), v([0, 0, 1, 0]), v([0, 0, 0, 1])]);
        assert!(singular.inverse().is_none());
        assert!(singular.det().is_zero());
    }
}
