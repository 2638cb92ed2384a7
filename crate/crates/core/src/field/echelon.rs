//! Fraction-free row reduction for vectors over `L`.
//!
//! Rows are scaled to polynomial rows, eliminated with Bareiss-style exact
//! divisions (every intermediate entry is a minor of the scaled matrix), and
//! only the final entries are reduced to lowest terms.

use super::elem::LElem;
use super::poly::BivarPolyGF2;

type PolyRow = [BivarPolyGF2; 4];

pub(crate) fn clear_denominators(row: &[LElem; 4]) -> PolyRow {
    let mut common = BivarPolyGF2::one();
    for x in row.iter().filter(|x| !x.is_zero()) {
        if !x.den().is_one() && x.den() != &common {
            common = common.lcm(x.den());
        }
    }
    std::array::from_fn(|j| {
        let x = &row[j];
        if x.is_zero() {
            BivarPolyGF2::zero()
        } else if x.den() == &common {
            x.num().clone()
        } else {
            x.num().mul(&common.div_exact(x.den()).expect("lcm is a multiple"))
        }
    })
}

/// Reduced row echelon form with unit pivots and zero rows dropped, or
/// `None` if an exact division unexpectedly fails.
pub(crate) fn rref(rows: &[[LElem; 4]]) -> Option<Vec<[LElem; 4]>> {
    let mut a: Vec<PolyRow> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(clear_denominators)
        .collect();
    let mut prev = BivarPolyGF2::one();
    let mut pivots = Vec::with_capacity(4);
    for col in 0..4 {
        let r = pivots.len();
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len())
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].size() + a[i].iter().map(BivarPolyGF2::size).sum::<usize>())
        else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][col].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = std::mem::replace(&mut row[col], BivarPolyGF2::zero());
            for j in (0..4).filter(|&j| j != col) {
                let mut t = piv.mul(&row[j]);
                if !f.is_zero() {
                    t.add_assign(&f.mul(&pivot_row[j]));
                }
                row[j] = if prev.is_one() { t } else { t.div_exact(&prev)? };
            }
        }
        prev = piv;
        pivots.push(col);
    }
    a.truncate(pivots.len());
    let out = a
        .iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            std::array::from_fn(|j| {
                if j == pc {
                    LElem::one()
                } else if row[j].is_zero() {
                    LElem::zero()
                } else {
                    LElem::from_fraction(row[j].clone(), row[pc].clone()).expect("nonzero pivot")
                }
            })
        })
        .collect();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::random_elem;
    use crate::linalg::rref_generic;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_generic_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let n = 1 + trial % 6;
            let mut rows: Vec<[LElem; 4]> =
                (0..n).map(|_| std::array::from_fn(|_| random_elem(&mut rng, 2))).collect();
            // Force dependencies and zero columns now and then.
            if n > 2 && rng.gen_bool(0.5) {
                let (a, b) = (rows[0].clone(), rows[1].clone());
                let c = random_elem(&mut rng, 2);
                rows[2] = std::array::from_fn(|j| &a[j] + &(&c * &b[j]));
            }
            if rng.gen_bool(0.3) {
                let col = rng.gen_range(0..4);
                for r in rows.iter_mut() {
                    r[col] = LElem::zero();
                }
            }
            assert_eq!(rref(&rows).unwrap(), rref_generic(rows.clone()), "trial {trial}");
        }
    }
}
