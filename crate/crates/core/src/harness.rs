//! Seeded verification suites.
//!
//! Every trial draws from its own ChaCha8 stream derived from the run seed,
//! the suite and the trial index, so reports do not depend on scheduling.

use crate::clifford::{CliffordError, CliffordSpace, DoubleSpaceOutcome};
use crate::collineation::{
    expected_characteristic_polynomial, expected_fixed_line, fixed_structure_check, invariant_line_congruence_check,
    TranslationF, TranslationL,
};
use crate::field::{random_basis, random_f_elem, random_nonzero_elem, random_outside_f, BasisL, FElem, LElem};
use crate::linalg::{self, Mat4};
use crate::polarity::{anisotropy_check, cosymplectic_witness, polarity_check, LinearFormF, PolarityF, PolarityKind};
use crate::projective::{collinear, f_rational_hull, is_f_rational_point, LineF, Subspace};
use crate::report::{CheckReport, MAX_WITNESSES};
use crate::scalar::Field;
use crate::tensor::{IdealCoords, TensorAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 20_260_101;
pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_DEG_BOUND: u32 = 3;

/// Position `(s, t, m)` of a structure constant to flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flip {
    pub s: usize,
    pub t: usize,
    pub m: usize,
}

impl Flip {
    pub fn all() -> impl Iterator<Item = Flip> {
        (0..64).map(|n| Flip { s: n / 16, t: (n / 4) % 4, m: n % 4 })
    }
}

impl FromStr for Flip {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
            .collect::<Result<_, _>>()?;
        match parts[..] {
            [s, t, m] if s < 4 && t < 4 && m < 4 => Ok(Flip { s, t, m }),
            _ => Err(format!("expected three indices in 0..4, got {s:?}")),
        }
    }
}

impl fmt::Display for Flip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.s, self.t, self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub deg_bound: u32,
    /// Suite names to run; empty means all.
    pub suites: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inject_fault: Option<Flip>,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            deg_bound: DEFAULT_DEG_BOUND,
            suites: Vec::new(),
            inject_fault: None,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub statement: String,
    pub samples: usize,
    pub failures: usize,
    pub skipped: usize,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub config: RunConfig,
    pub suites: Vec<SuiteResult>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let verdict = if s.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{verdict} {:<20} samples={} failures={} skipped={}",
                s.name, s.samples, s.failures, s.skipped
            ));
            if let Some(ms) = s.millis {
                out.push_str(&format!(" millis={ms}"));
            }
            out.push('\n');
            for w in &s.witnesses {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        out
    }
}

/// Shared state of one run: sizes, seed and the optional fault.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub seed: u64,
    pub samples: usize,
    pub bound: u32,
    pub fault: Option<Flip>,
}

impl Ctx {
    pub fn new(config: &RunConfig) -> Self {
        Ctx { seed: config.seed, samples: config.samples, bound: config.deg_bound, fault: config.inject_fault }
    }

    fn with_fault(&self, fault: Flip, samples: usize) -> Self {
        Ctx { fault: Some(fault), samples, ..self.clone() }
    }

    /// `samples * num / den`, at least one.
    fn scaled(&self, num: usize, den: usize) -> usize {
        (self.samples * num / den).max(1)
    }

    pub fn algebra(&self, basis: BasisL) -> Arc<TensorAlgebra> {
        let alg = TensorAlgebra::new(basis);
        match self.fault {
            Some(f) => alg.with_flipped_constant(f.s, f.t, f.m),
            None => alg,
        }
    }

    pub fn space(&self) -> Result<CliffordSpace, CliffordError> {
        CliffordSpace::new(self.algebra(BasisL::standard()))
    }

    pub fn rng(&self, suite: u64, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(suite);
        rng.set_word_pos((trial as u128) << 40);
        rng
    }
}

type Trial<'a> = dyn Fn(&Ctx, usize, &mut ChaCha8Rng, &mut CheckReport) -> Result<(), CliffordError> + Sync + 'a;

/// Runs `count` independent trials in parallel and merges their reports
/// in trial order. A trial that returns an error counts as a failure.
fn run_trials(ctx: &Ctx, suite: u64, name: &str, count: usize, trial: &Trial<'_>) -> CheckReport {
    let parts: Vec<CheckReport> = (0..count)
        .into_par_iter()
        .map(|k| {
            let mut rng = ctx.rng(suite, k);
            let mut report = CheckReport::new(name);
            if let Err(e) = trial(ctx, k, &mut rng, &mut report) {
                report.fail(json!({"trial": k, "error": e.to_string()}));
            }
            report
        })
        .collect();
    let mut out = CheckReport::new(name);
    for p in parts {
        out.merge(p);
    }
    out
}

fn random_line(space: &CliffordSpace, rng: &mut ChaCha8Rng, bound: u32) -> Option<LineF> {
    let a = random_nonzero_elem(rng, bound);
    let b = random_nonzero_elem(rng, bound);
    space.line_through(&a, &b).ok()
}

fn random_plane_point(space: &CliffordSpace, rng: &mut ChaCha8Rng, bound: u32) -> Option<Subspace<LElem>> {
    let mut v = linalg::zero_vec();
    for w in space.absolute_plane().basis() {
        v = linalg::vec_add(&v, &linalg::vec_scale(&random_nonzero_elem(rng, bound), w));
    }
    Subspace::point(v).ok()
}

pub fn suite_main_theorem(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 1, "main_theorem", ctx.samples, &|ctx, k, rng, report| {
        let space = ctx.space()?;
        let Some(m) = random_line(&space, rng, ctx.bound) else {
            report.skip();
            return Ok(());
        };
        let (n, forced) = match k % 3 {
            0 => (space.line_times_scalar(&m, &random_nonzero_elem(rng, ctx.bound))?, Some(true)),
            1 => {
                let [a, _] = space.line_elements(&m)?;
                match space.line_through(&a, &random_nonzero_elem(rng, ctx.bound)) {
                    Ok(n) if n != m => (n, Some(false)),
                    _ => {
                        report.skip();
                        return Ok(());
                    }
                }
            }
            _ => match random_line(&space, rng, ctx.bound) {
                Some(n) => (n, None),
                None => {
                    report.skip();
                    return Ok(());
                }
            },
        };
        let algebraic = space.is_parallel_algebraic(&m, &n)?;
        let geometric = space.is_parallel_geometric(&m, &n)?;
        report.record(algebraic == geometric && forced.is_none_or(|f| f == algebraic), || {
            json!({"m": m, "n": n, "algebraic": algebraic, "geometric": geometric, "forced": forced})
        });
        Ok(())
    })
}

pub fn suite_local_quadratic(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 2, "local_quadratic", ctx.samples, &|ctx, k, rng, report| {
        let alg = ctx.algebra(BasisL::standard());
        let g = if k % 2 == 0 {
            alg.element(std::array::from_fn(|_| random_nonzero_elem(rng, ctx.bound)))
        } else {
            let plane = alg.absolute_plane();
            let mut v = linalg::zero_vec();
            for w in plane.basis() {
                v = linalg::vec_add(&v, &linalg::vec_scale(&random_nonzero_elem(rng, ctx.bound), w));
            }
            alg.element(v)
        };
        let sq = g.mul(&g)?;
        let expected = alg.unit().scale(&g.norm().to_l());
        report.record(sq == expected, || json!({"property": "g^2 = (pi g)^2 (1(x)1)", "g": g, "square": sq}));
        let invertible = match g.invert() {
            Ok(h) => g.mul(&h)? == alg.unit(),
            Err(_) => false,
        };
        report.record(invertible == !g.pi().is_zero(), || {
            json!({"property": "g invertible iff pi(g) != 0", "g": g, "pi": g.pi()})
        });
        Ok(())
    })
}

pub fn suite_annihilator(ctx: &Ctx) -> CheckReport {
    let bases = ctx.scaled(1, 10);
    let products = ctx.scaled(1, 2);
    run_trials(ctx, 3, "annihilator", 1 + bases + products, &|ctx, k, rng, report| {
        if k == 0 {
            let alg = ctx.algebra(BasisL::standard());
            let solved = alg.solved_annihilator();
            report.record(solved == alg.annihilator_point(), || {
                json!({"property": "solved annihilator is L r", "solved": solved})
            });
            let (p, q, r) = alg.ideal_basis();
            let pq = p.mul(&q)?;
            report.record(pq == r && p.mul(&p)?.is_zero(), || {
                json!({"property": "p q = r and p^2 = 0", "pq": pq})
            });
        } else if k <= bases {
            let basis = random_basis(rng, ctx.bound);
            let alg = ctx.algebra(basis.clone());
            let solved = alg.solved_annihilator();
            report.record(solved == alg.annihilator_point(), || {
                json!({"property": "solved annihilator is L r", "basis": basis, "solved": solved})
            });
        } else {
            let space = ctx.space()?;
            let (Some(x), Some(y)) = (random_plane_point(&space, rng, ctx.bound), random_plane_point(&space, rng, ctx.bound))
            else {
                report.skip();
                return Ok(());
            };
            let alg = space.algebra();
            let prod = alg.element(x.basis()[0].clone()).mul(&alg.element(y.basis()[0].clone()))?;
            report.record(space.absolute_point().contains_vector(prod.coords()), || {
                json!({"property": "products of plane elements lie on the absolute point", "x": x, "y": y})
            });
        }
        Ok(())
    })
}

pub fn suite_f_rational(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 4, "f_rational", ctx.samples, &|ctx, _, rng, report| {
        let space = ctx.space()?;
        match random_plane_point(&space, rng, ctx.bound) {
            Some(pt) => {
                let hull = f_rational_hull(&pt)?;
                report.record(!is_f_rational_point(&pt)? && hull.dim() >= 2, || {
                    json!({"property": "plane points are not F-rational", "point": pt})
                });
            }
            None => report.skip(),
        }
        let Some(m) = random_line(&space, rng, ctx.bound) else {
            report.skip();
            return Ok(());
        };
        let x = space.absolute_intersection(&m)?;
        let hull = f_rational_hull(&x)?;
        report.record(hull == m, || {
            json!({"property": "the only F-line through the point is M", "line": m, "point": x, "hull": hull})
        });
        let by_meet = space.absolute_intersection_by_meet(&m)?;
        report.record(by_meet == x, || {
            json!({"property": "L(a(x)b + b(x)a) = extend(M) meet plane", "line": m, "alternation": x, "meet": by_meet})
        });
        Ok(())
    })
}

pub fn suite_k_rational(ctx: &Ctx) -> CheckReport {
    let ys = ctx.scaled(1, 10);
    let lines = ctx.scaled(1, 2);
    run_trials(ctx, 5, "k_rational", ctx.scaled(1, 4), &|ctx, _, rng, report| {
        let space = ctx.space()?;
        let alg = space.algebra();
        let i = random_outside_f(rng, ctx.bound);
        let basis = space.complete_basis(&i)?;
        let kline = space.k_rational_line_in_pi(&i)?;
        report.record(space.absolute_plane().contains(&kline) && kline.contains(space.absolute_point()), || {
            json!({"property": "F[i]-rational line lies in the plane through the absolute point", "i": i})
        });
        let one = LElem::one();
        let p = alg.alternation(&one, &i);
        let r = alg.alternation(&one, basis.k()).add(&alg.alternation(&i, basis.j()))?;
        let jp_r = p.scale(basis.j()).add(&r)?;
        for _ in 0..ys {
            let y = random_nonzero_elem(rng, ctx.bound);
            let g = alg.embed_second(&y).mul(&p)?;
            let [y0, y1, y2, y3] = basis.coords(&y);
            let form = p.scale(&y0.to_l().add(&i.mul(&y1.to_l()))).add(&jp_r.scale(&y2.to_l().add(&i.mul(&y3.to_l()))))?;
            let pt = Subspace::point(g.coords().clone())?;
            report.record(g == form && kline.contains(&pt) && space.is_k_rational_point(&pt, &i)?, || {
                json!({"property": "(1(x)y) p = (y0 + i y1) p + (y2 + i y3)(jp + r)", "i": i, "y": y})
            });
        }
        report.record(!space.is_k_rational_point(space.absolute_point(), &i)?, || {
            json!({"property": "absolute point is not F[i]-rational", "i": i})
        });
        let class = space.line_through(&one, &i)?;
        for n in 0..lines {
            let m = if n % 2 == 0 {
                space.line_times_scalar(&class, &random_nonzero_elem(rng, ctx.bound))?
            } else {
                match random_line(&space, rng, ctx.bound) {
                    Some(m) => m,
                    None => {
                        report.skip();
                        continue;
                    }
                }
            };
            let parallel = space.is_parallel_algebraic(&m, &class)?;
            let rational = space.is_k_rational_point(&space.absolute_intersection(&m)?, &i)?;
            report.record(parallel == rational && (n % 2 == 1 || parallel), || {
                json!({"property": "M parallel to F[i] iff its plane point is F[i]-rational", "i": i, "line": m})
            });
        }
        Ok(())
    })
}

pub fn suite_double_space(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 6, "double_space", ctx.samples, &|ctx, _, rng, report| {
        let space = ctx.space()?;
        let [a, b, c] = std::array::from_fn(|_| random_nonzero_elem(rng, ctx.bound));
        match space.double_space_check(&a, &b, &c)? {
            DoubleSpaceOutcome::DegenerateInput => report.skip(),
            DoubleSpaceOutcome::Checked { d, common_point, diagonals_parallel, .. } => {
                report.record(common_point && diagonals_parallel != Some(false), || {
                    json!({"a": a, "b": b, "c": c, "d": d, "common_point": common_point, "diagonals_parallel": diagonals_parallel})
                });
            }
        }
        Ok(())
    })
}

pub fn suite_regular_spread(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 7, "regular_spread", ctx.scaled(1, 4), &|ctx, _, rng, report| {
        let space = ctx.space()?;
        let Some(m) = random_line(&space, rng, ctx.bound) else {
            report.skip();
            return Ok(());
        };
        report.merge(space.regulus_regularity_sample(&m, 2, rng, ctx.bound)?);
        Ok(())
    })
}

/// Ideal coordinates `(b, b1 + b3 j, b2 + b3 i, b3)` of `1(x)b`.
pub fn ideal_coords_of_translation(b: &LElem, basis: &BasisL) -> IdealCoords {
    let [_, b1, b2, b3] = basis.coords(b).map(FElem::into_l);
    IdealCoords([b.clone(), b1.add(&b3.mul(basis.j())), b2.add(&b3.mul(basis.i())), b3])
}

pub fn suite_matrices(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 8, "matrices", ctx.scaled(1, 2), &|ctx, k, rng, report| {
        let bound = ctx.bound;
        let space = ctx.space()?;
        if k == 0 {
            let u = LElem::u();
            let fixed = TranslationL::new(space.algebra(), &u)?.fixed_points();
            let (p, _, r) = space.algebra().ideal_basis();
            let expected = Subspace::span([r.coords().clone(), p.coords().clone()]);
            report.record(fixed == expected, || json!({"property": "fixed points of u are A + Lp", "fixed": fixed}));
        }
        let basis = random_basis(rng, bound);
        let b = random_nonzero_elem(rng, bound);
        let c = random_nonzero_elem(rng, bound);
        let tb = TranslationF::new(&b, &basis)?;
        let tc = TranslationF::new(&c, &basis)?;
        let tbc = TranslationF::new(&(&b * &c), &basis)?;
        report.record(tb.matrix == TranslationF::displayed_pattern(&b, &basis), || {
            json!({"property": "F matrix matches the displayed pattern", "b": b, "basis": basis, "matrix": tb.matrix})
        });
        report.record(tb.matrix.mul(&tb.matrix) == Mat4::scalar(&b.square()), || {
            json!({"property": "T(b)^2 = b^2 I", "b": b, "basis": basis})
        });
        report.record(tb.matrix.mul(&tc.matrix) == tbc.matrix, || {
            json!({"property": "T(b) T(c) = T(bc)", "b": b, "c": c, "basis": basis})
        });
        if let Some(m) = random_line(&space, rng, bound) {
            let t = TranslationF::new(&b, space.basis())?;
            report.record(t.apply_line(&m) == space.line_times_scalar(&m, &b)?, || {
                json!({"property": "matrix action equals M b", "b": b, "line": m})
            });
        }

        let alg = ctx.algebra(basis.clone());
        let tl = TranslationL::new(&alg, &b)?;
        let coords = ideal_coords_of_translation(&b, &basis);
        report.record(tl.ideal_matrix == tl.displayed_pattern() && tl.ideal_coords == coords, || {
            json!({"property": "ideal matrix matches the upper triangular pattern", "b": b, "basis": basis, "matrix": tl.ideal_matrix})
        });
        let ti = TranslationL::new(&alg, basis.i())?;
        report.record(ti.ideal_matrix == TranslationL::block_form(basis.i()), || {
            json!({"property": "block diagonal form for b = i", "basis": basis, "matrix": ti.ideal_matrix})
        });
        let local = CliffordSpace::new(alg.clone())?;
        let fixed = ti.fixed_points();
        let expected = expected_fixed_line(&local, basis.i())?;
        report.record(fixed == expected, || {
            json!({"property": "fixed points of i are A + Lp", "basis": basis, "fixed": fixed})
        });
        if k % 10 == 0 {
            report.record(ti.characteristic_polynomial() == expected_characteristic_polynomial(basis.i()), || {
                json!({"property": "characteristic polynomial (X + i)^4", "basis": basis})
            });
            report.merge(fixed_structure_check(&local, basis.i(), 2, rng, bound)?);
            report.merge(invariant_line_congruence_check(&local, basis.i(), 2, rng, bound)?);
        }
        Ok(())
    })
}

fn random_form(space: &CliffordSpace, null: bool, rng: &mut ChaCha8Rng, bound: u32) -> Result<LinearFormF, CliffordError> {
    loop {
        let mut values: [FElem; 4] = std::array::from_fn(|_| random_f_elem(rng, bound));
        values[0] = if null { FElem::zero() } else { random_nonzero_elem(rng, bound).square() };
        if let Ok(f) = LinearFormF::new(values, space.basis()) {
            return Ok(f);
        }
    }
}

pub fn suite_polarities(ctx: &Ctx) -> CheckReport {
    let forms = ctx.scaled(1, 10).max(2);
    let pairs = ctx.scaled(1, 4);
    let points = ctx.scaled(5, 2);
    run_trials(ctx, 9, "polarities", forms.max(pairs), &|ctx, k, rng, report| {
        let space = ctx.space()?;
        if k < forms {
            let null = k % 2 == 0;
            let form = random_form(&space, null, rng, ctx.bound)?;
            let pol = PolarityF::from_form(form)?;
            let kind = if null { PolarityKind::Null } else { PolarityKind::Elliptic };
            report.record(pol.kind == kind, || json!({"property": "classification", "form": pol.form}));
            report.merge(polarity_check(&space, &pol, ctx.samples, rng, ctx.bound)?);
            if !null {
                report.merge(anisotropy_check(&space, &pol, points, rng, ctx.bound));
            }
        }
        if k < pairs {
            let one = LElem::one();
            let m = space.line_through(&one, &random_outside_f(rng, ctx.bound))?;
            let n = space.line_through(&one, &random_outside_f(rng, ctx.bound))?;
            if m == n {
                report.skip();
            } else {
                report.merge(cosymplectic_witness(&space, &m, &n, 2, rng, ctx.bound)?.1);
            }
        }
        Ok(())
    })
}

/// One marked point of the absolute plane, computed from the ideal basis
/// and from pure tensors.
#[derive(Clone, Debug, Serialize)]
pub struct FanoPoint {
    pub ideal_form: &'static str,
    pub tensor_form: &'static str,
    pub point: Subspace<LElem>,
    pub from_tensors: Subspace<LElem>,
}

/// The seven points of the Fano subplane of the absolute plane.
pub fn fano_points(alg: &Arc<TensorAlgebra>) -> Result<Vec<FanoPoint>, CliffordError> {
    let b = alg.basis();
    let (i, j, k) = (b.i().clone(), b.j().clone(), b.k().clone());
    let one = LElem::one();
    let (p, q, r) = alg.ideal_basis();
    let t = |x: &LElem, y: &LElem| alg.pure(x, y);
    let sum = |xs: &[crate::tensor::LLElem]| -> Result<_, CliffordError> {
        let mut acc = alg.zero();
        for x in xs {
            acc = acc.add(x)?;
        }
        Ok(Subspace::point(acc.coords().clone())?)
    };
    let rows = [
        ("Lp", "L(1⊗i + i⊗1)", sum(std::slice::from_ref(&p))?, sum(&[t(&one, &i), t(&i, &one)])?),
        ("Lq", "L(1⊗j + j⊗1)", sum(std::slice::from_ref(&q))?, sum(&[t(&one, &j), t(&j, &one)])?),
        ("Lr", "L(1⊗k + i⊗j + j⊗i + k⊗1)", sum(std::slice::from_ref(&r))?, sum(&[t(&one, &k), t(&i, &j), t(&j, &i), t(&k, &one)])?),
        ("L(jp+r)", "L(1⊗k + i⊗j)", sum(&[p.scale(&j), r.clone()])?, sum(&[t(&one, &k), t(&i, &j)])?),
        ("L(iq+r)", "L(1⊗k + j⊗i)", sum(&[q.scale(&i), r.clone()])?, sum(&[t(&one, &k), t(&j, &i)])?),
        ("L(jp+iq+r)", "L(1⊗k + k⊗1)", sum(&[p.scale(&j), q.scale(&i), r])?, sum(&[t(&one, &k), t(&k, &one)])?),
        ("L(jp+iq)", "L(i⊗j + j⊗i)", sum(&[p.scale(&j), q.scale(&i)])?, sum(&[t(&i, &j), t(&j, &i)])?),
    ];
    Ok(rows
        .into_iter()
        .map(|(ideal_form, tensor_form, point, from_tensors)| FanoPoint { ideal_form, tensor_form, point, from_tensors })
        .collect())
}

/// Lines of the Fano subplane as index triples, found by collinearity.
pub fn fano_lines(points: &[Subspace<LElem>]) -> Vec<[usize; 3]> {
    let mut lines = Vec::new();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            for c in b + 1..points.len() {
                if collinear(&points[a], &points[b], &points[c]) {
                    lines.push([a, b, c]);
                }
            }
        }
    }
    lines
}

pub fn suite_fano(ctx: &Ctx) -> CheckReport {
    run_trials(ctx, 10, "fano", 1, &|ctx, _, _, report| {
        let space = ctx.space()?;
        let pts = fano_points(space.algebra())?;
        for fp in &pts {
            report.record(fp.point == fp.from_tensors && space.absolute_plane().contains(&fp.point), || {
                json!({"property": "figure identity", "point": fp})
            });
        }
        let points: Vec<_> = pts.iter().map(|fp| fp.point.clone()).collect();
        let distinct = (0..7).all(|a| (a + 1..7).all(|b| points[a] != points[b]));
        report.record(distinct, || json!({"property": "seven distinct points"}));
        let lines = fano_lines(&points);
        let through = |x: usize| lines.iter().filter(|l| l.contains(&x)).count();
        let pairs_ok = (0..7).all(|a| (a + 1..7).all(|b| lines.iter().filter(|l| l.contains(&a) && l.contains(&b)).count() == 1));
        report.record(lines.len() == 7 && (0..7).all(|x| through(x) == 3) && pairs_ok, || {
            json!({"property": "Fano incidence", "lines": lines})
        });
        Ok(())
    })
}

/// Runs suites 1 to 3 on every single-constant mutation of the default
/// algebra; each mutation must make at least one of them fail.
pub fn suite_mutation(ctx: &Ctx) -> CheckReport {
    let per_flip = ctx.scaled(1, 20).max(3);
    let flips: Vec<Flip> = Flip::all().collect();
    let detected: Vec<(Flip, bool)> = flips
        .par_iter()
        .map(|&f| {
            let mutated = ctx.with_fault(f, per_flip);
            let caught = !suite_annihilator(&mutated).passed()
                || !suite_local_quadratic(&mutated).passed()
                || !suite_main_theorem(&mutated).passed();
            (f, caught)
        })
        .collect();
    let mut report = CheckReport::new("mutation");
    for (f, caught) in detected {
        report.record(caught, || json!({"property": "mutation detected by suites 1-3", "flip": f}));
    }
    report
}

pub struct Suite {
    pub name: &'static str,
    pub statement: &'static str,
    pub run: fn(&Ctx) -> CheckReport,
}

pub const SUITES: [Suite; 11] = [
    Suite {
        name: "01_main_theorem",
        statement: "M parallel to N iff a line of the absolute pencil meets both extended lines",
        run: suite_main_theorem,
    },
    Suite {
        name: "02_local_quadratic",
        statement: "g^2 = (pi g)^2 (1(x)1), and g is invertible iff pi(g) != 0",
        run: suite_local_quadratic,
    },
    Suite {
        name: "03_annihilator",
        statement: "the annihilator of ker pi is L r, and products of two elements of ker pi lie in L r",
        run: suite_annihilator,
    },
    Suite {
        name: "04_f_rational",
        statement: "points of the absolute plane are not F-rational, lie on at most one extended F-line, and the extended line M meets the plane at L(a(x)b + b(x)a)",
        run: suite_f_rational,
    },
    Suite {
        name: "05_k_rational",
        statement: "the F[i]-rational points of the absolute plane form a subline of A + Lp missing A, and M is parallel to F[i] iff it meets the plane in one of them",
        run: suite_k_rational,
    },
    Suite {
        name: "06_double_space",
        statement: "parallels through swapped points of two concurrent lines meet in F a^-1 b c, and skew parallelograms have parallel diagonals",
        run: suite_double_space,
    },
    Suite {
        name: "07_regular_spread",
        statement: "every parallel class is a regular spread",
        run: suite_regular_spread,
    },
    Suite {
        name: "08_matrices",
        statement: "matrices of the Clifford translations over F and over L, their block form and fixed line",
        run: suite_matrices,
    },
    Suite {
        name: "09_polarities",
        statement: "polarities from nonzero linear forms are non-degenerate, commute with translations, map lines to parallels, and are null or elliptic; any two classes lie in a common linear complex",
        run: suite_polarities,
    },
    Suite {
        name: "10_fano",
        statement: "the seven marked points of the absolute plane and their coordinate identities form a Fano subplane",
        run: suite_fano,
    },
    Suite {
        name: "11_mutation",
        statement: "flipping any one structure constant makes one of suites 1-3 fail",
        run: suite_mutation,
    },
];

/// Suite names accept either the full name or the part after the number.
pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name || s.name.split_once('_').is_some_and(|(_, rest)| rest == name))
}

pub fn run(config: &RunConfig) -> Result<RunReport, String> {
    let selected: Vec<&Suite> = if config.suites.is_empty() {
        SUITES.iter().collect()
    } else {
        config
            .suites
            .iter()
            .map(|n| find_suite(n).ok_or_else(|| format!("unknown suite {n:?}")))
            .collect::<Result<_, _>>()?
    };
    let ctx = Ctx::new(config);
    let mut suites: Vec<SuiteResult> = selected
        .par_iter()
        .map(|s| {
            let start = Instant::now();
            let r = (s.run)(&ctx);
            let millis = config.timings.then(|| start.elapsed().as_millis() as u64);
            let mut witnesses = r.witnesses;
            witnesses.truncate(MAX_WITNESSES);
            SuiteResult {
                name: s.name.to_string(),
                statement: s.statement.to_string(),
                samples: r.samples,
                failures: r.failures,
                skipped: r.skipped,
                witnesses,
                millis,
            }
        })
        .collect();
    suites.sort_by(|a, b| a.name.cmp(&b.name));
    suites.dedup_by(|a, b| a.name == b.name);
    Ok(RunReport { config: config.clone(), suites })
}
