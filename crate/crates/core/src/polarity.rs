//! Polarities of `P(L_F)` from nonzero `F`-linear forms `phi : L -> F`,
//! via the symmetric form `(x, y) -> phi(x y)`.

use crate::clifford::{CliffordError, CliffordSpace};
use crate::field::{random_f_elem, random_nonzero_elem, BasisL, FElem, LElem};
use crate::linalg::{self, Mat4, Vec4};
use crate::projective::{bilinear, gram_complement, plucker, LineF, Subspace};
use crate::report::CheckReport;
use crate::scalar::Field;
use rand::Rng;
use serde::Serialize;
use serde_json::json;

/// Values `(phi(1), phi(i), phi(j), phi(k))` of a nonzero linear form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearFormF {
    pub values: Vec4<FElem>,
    pub basis: BasisL,
}

impl LinearFormF {
    pub fn new(values: Vec4<FElem>, basis: &BasisL) -> Result<Self, CliffordError> {
        if linalg::is_zero_vec(&values) {
            return Err(CliffordError::ZeroScalar);
        }
        Ok(LinearFormF { values, basis: basis.clone() })
    }

    pub fn eval(&self, x: &LElem) -> FElem {
        linalg::dot(&self.values, &self.basis.coords(x))
    }

    pub fn at_one(&self) -> &FElem {
        &self.values[0]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarityKind {
    /// Alternating form, every point self-conjugate.
    Null,
    /// Anisotropic form, no self-conjugate points.
    Elliptic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarityF {
    pub form: LinearFormF,
    pub gram: Mat4<FElem>,
    pub kind: PolarityKind,
}

impl PolarityF {
    /// Builds the Gram matrix `phi(b_s b_t)`; a singular Gram matrix is an
    /// error since the form is non-degenerate for every nonzero `phi`.
    pub fn from_form(form: LinearFormF) -> Result<Self, CliffordError> {
        let elems = form.basis.elements();
        let gram = Mat4::from_fn(|s, t| form.eval(&(&elems[s] * &elems[t])));
        if gram.det().is_zero() {
            return Err(CliffordError::Dependent);
        }
        let kind = if form.at_one().is_zero() { PolarityKind::Null } else { PolarityKind::Elliptic };
        Ok(PolarityF { form, gram, kind })
    }

    pub fn pairing(&self, x: &LElem, y: &LElem) -> FElem {
        self.form.eval(&(x * y))
    }

    /// The pairing computed from coordinates and the Gram matrix.
    pub fn pairing_coords(&self, x: &Vec4<FElem>, y: &Vec4<FElem>) -> FElem {
        bilinear(x, &self.gram, y)
    }

    pub fn polar_of(&self, s: &Subspace<FElem>) -> Subspace<FElem> {
        gram_complement(s, &self.gram)
    }

    /// `<xb, yb> = b^2 <x, y>`.
    pub fn commutes_with_translation(&self, x: &LElem, y: &LElem, b: &LElem) -> bool {
        self.pairing(&(x * b), &(y * b)) == &b.square() * &self.pairing(x, y)
    }

    /// Coefficients `G_st` (s < t) of the linear complex of self-polar lines
    /// in Plücker coordinates, for a null polarity.
    pub fn complex_coefficients(&self) -> Option<[FElem; 6]> {
        if self.kind != PolarityKind::Null {
            return None;
        }
        let g = &self.gram.0;
        Some([
            g[0][1].clone(),
            g[0][2].clone(),
            g[0][3].clone(),
            g[1][2].clone(),
            g[1][3].clone(),
            g[2][3].clone(),
        ])
    }

    /// A line `F + F i` with `phi(i) = 0`, which is self-polar for a null
    /// polarity. Draws `i` from the kernel of `phi`.
    pub fn random_self_polar_line<R: Rng + ?Sized>(
        &self,
        space: &CliffordSpace,
        rng: &mut R,
        bound: u32,
    ) -> Option<LineF> {
        if self.kind != PolarityKind::Null {
            return None;
        }
        let ker = Subspace::span([self.form.values.clone()]).annihilator();
        let mut v = linalg::zero_vec();
        for w in ker.basis() {
            v = linalg::vec_add(&v, &linalg::vec_scale(&random_f_elem(rng, bound), w));
        }
        let i = space.basis().recompose(&v);
        space.line_through(&LElem::one(), &i).ok()
    }
}

/// A null polarity whose self-polar lines contain the classes of two
/// distinct lines through `F*1`, with sampled checks of that claim.
pub fn cosymplectic_witness<R: Rng + ?Sized>(
    space: &CliffordSpace,
    m: &LineF,
    n: &LineF,
    samples: usize,
    rng: &mut R,
    bound: u32,
) -> Result<(PolarityF, CheckReport), CliffordError> {
    let one = space.point_of(&LElem::one())?;
    if m.dim() != 2 || n.dim() != 2 || m == n || !m.contains(&one) || !n.contains(&one) {
        return Err(CliffordError::BadCosymplecticPair);
    }
    let plane = m.join(n);
    let values = plane.annihilator().generator().cloned().ok_or(CliffordError::BadCosymplecticPair)?;
    let pol = PolarityF::from_form(LinearFormF::new(values, space.basis())?)?;
    let mut report = CheckReport::new("cosymplectic");
    report.record(pol.kind == PolarityKind::Null, || json!({"property": "polarity is null", "form": pol.form}));
    for line in [m, n] {
        report.record(pol.polar_of(line) == *line, || json!({"property": "M and N self-polar", "line": line}));
    }
    for k in 0..samples {
        let base = if k % 2 == 0 { m } else { n };
        let b = random_nonzero_elem(rng, bound);
        let line = space.line_times_scalar(base, &b)?;
        report.record(pol.polar_of(&line) == line, || {
            json!({"property": "class lines self-polar", "line": base, "b": b})
        });
    }
    Ok((pol, report))
}

/// Sampled checks for one polarity: commutation with translations, lines
/// mapped to parallels, self-polarity propagating along a class, the
/// linear complex (null case) and anisotropy (elliptic case).
pub fn polarity_check<R: Rng + ?Sized>(
    space: &CliffordSpace,
    pol: &PolarityF,
    samples: usize,
    rng: &mut R,
    bound: u32,
) -> Result<CheckReport, CliffordError> {
    let mut report = CheckReport::new("polarity");
    report.record(pol.gram == pol.gram.transpose() && !pol.gram.det().is_zero(), || {
        json!({"property": "gram symmetric and non-degenerate", "gram": pol.gram})
    });
    if pol.kind == PolarityKind::Null {
        report.record((0..4).all(|s| pol.gram.0[s][s].is_zero()), || {
            json!({"property": "null gram has zero diagonal", "gram": pol.gram})
        });
    }
    for _ in 0..samples {
        // Redraw dependent pairs so that every sample is a line.
        let (x, y, m) = loop {
            let x = random_nonzero_elem(rng, bound);
            let y = random_nonzero_elem(rng, bound);
            if let Ok(m) = space.line_through(&x, &y) {
                break (x, y, m);
            }
        };
        let b = random_nonzero_elem(rng, bound);
        report.record(pol.commutes_with_translation(&x, &y, &b), || {
            json!({"property": "<xb, yb> = b^2 <x, y>", "x": x, "y": y, "b": b})
        });

        let polar = pol.polar_of(&m);
        report.record(polar.dim() == 2 && pol.polar_of(&polar) == m, || {
            json!({"property": "polar of a line is a line, involutively", "line": m})
        });
        report.record(space.is_parallel_algebraic(&m, &polar)?, || {
            json!({"property": "polar line is parallel", "line": m, "polar": polar})
        });
        let mb = space.line_times_scalar(&m, &b)?;
        report.record(pol.polar_of(&mb) == space.line_times_scalar(&polar, &b)?, || {
            json!({"property": "polar commutes with translations", "line": m, "b": b})
        });

        match pol.kind {
            PolarityKind::Null => {
                let coeffs = pol.complex_coefficients().expect("null");
                let Some(s) = pol.random_self_polar_line(space, rng, bound) else {
                    report.skip();
                    continue;
                };
                let sb = space.line_times_scalar(&s, &b)?;
                report.record(pol.polar_of(&s) == s && pol.polar_of(&sb) == sb, || {
                    json!({"property": "self-polarity propagates to parallels", "line": s, "b": b})
                });
                let pc = plucker(&sb)?;
                let value = (0..6).fold(FElem::zero(), |acc, n| acc.add(&coeffs[n].mul(&pc.0[n])));
                report.record(value.is_zero(), || {
                    json!({"property": "self-polar lines lie in one linear complex", "line": sb})
                });
                report.record(pol.pairing(&x, &x).is_zero(), || {
                    json!({"property": "null form is alternating", "x": x})
                });
            }
            PolarityKind::Elliptic => {
                report.record(!pol.pairing(&x, &x).is_zero(), || {
                    json!({"property": "no self-conjugate point", "x": x})
                });
            }
        }
    }
    Ok(report)
}

/// Searches for a self-conjugate point among structured candidates (basis
/// vectors and their pairwise sums) and random elements.
pub fn anisotropy_check<R: Rng + ?Sized>(
    space: &CliffordSpace,
    pol: &PolarityF,
    samples: usize,
    rng: &mut R,
    bound: u32,
) -> CheckReport {
    let mut report = CheckReport::new("anisotropy");
    let elems = space.basis().elements();
    let mut candidates: Vec<LElem> = elems.to_vec();
    for s in 0..4 {
        for t in s + 1..4 {
            candidates.push(elems[s].add(&elems[t]));
        }
    }
    candidates.push(elems.iter().fold(LElem::zero(), |acc, x| acc.add(x)));
    for x in candidates.into_iter().chain((0..samples).map(|_| random_nonzero_elem(rng, bound))) {
        report.record(!pol.pairing(&x, &x).is_zero(), || json!({"property": "no self-conjugate point", "x": x}));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn e(s: &str) -> LElem {
        s.parse().unwrap()
    }

    fn form(values: [u8; 4]) -> LinearFormF {
        LinearFormF::new(values.map(|v| if v == 1 { FElem::one() } else { FElem::zero() }), &BasisL::standard()).unwrap()
    }

    #[test]
    fn zero_form_rejected() {
        assert!(LinearFormF::new(linalg::zero_vec(), &BasisL::standard()).is_err());
    }

    #[test]
    fn classification() {
        let null = PolarityF::from_form(form([0, 1, 0, 0])).unwrap();
        assert_eq!(null.kind, PolarityKind::Null);
        assert!((0..4).all(|s| null.gram.0[s][s].is_zero()));
        let ell = PolarityF::from_form(form([1, 0, 0, 0])).unwrap();
        assert_eq!(ell.kind, PolarityKind::Elliptic);
        assert!(!ell.pairing(&e("u + v"), &e("u + v")).is_zero());
    }

    #[test]
    fn polar_dimensions() {
        let space = CliffordSpace::standard();
        let pol = PolarityF::from_form(form([1, 1, 0, 1])).unwrap();
        let pt = space.point_of(&e("u + 1")).unwrap();
        let plane = pol.polar_of(&pt);
        assert_eq!(plane.dim(), 3);
        assert_eq!(pol.polar_of(&plane), pt);
        let x = space.vector_of(&e("u * v + v"));
        let y = space.vector_of(&e("u^3 + 1 / v"));
        assert_eq!(pol.pairing_coords(&x, &y), pol.pairing(&e("u * v + v"), &e("u^3 + 1 / v")));
    }

    #[test]
    fn cosymplectic_fu_fv() {
        let space = CliffordSpace::standard();
        let m = space.line_through(&e("1"), &e("u")).unwrap();
        let n = space.line_through(&e("1"), &e("v")).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let (pol, report) = cosymplectic_witness(&space, &m, &n, 6, &mut rng, 2).unwrap();
        assert_eq!(pol.form.values, form([0, 0, 0, 1]).values);
        assert!(report.passed(), "{report:?}");
        assert!(cosymplectic_witness(&space, &m, &m, 1, &mut rng, 2).is_err());
    }

    #[test]
    fn sampled_polarity_checks() {
        let space = CliffordSpace::standard();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for values in [[0, 1, 1, 0], [1, 0, 1, 1]] {
            let pol = PolarityF::from_form(form(values)).unwrap();
            let r = polarity_check(&space, &pol, 4, &mut rng, 2).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let ell = PolarityF::from_form(form([1, 0, 0, 0])).unwrap();
        assert!(anisotropy_check(&space, &ell, 20, &mut rng, 2).passed());
    }
}
