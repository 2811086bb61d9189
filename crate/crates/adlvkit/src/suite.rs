//! Verification batteries shared by the `suite` subcommand and the
//! acceptance tests. Every runner returns data; judging happens in
//! [`CheckLine`]s.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::adlv::superbasic::Superbasic;
use crate::adlv::{default_window, window_from_env, Context};
use crate::affine::{epsilon_wellformed, lambda_gamma, omega_generators, tilde_root, BasicElement, ExtAffine};
use crate::appendixb::{certify_all, Certification, Mode};
use crate::crystal::{crystal_generate, root_op_e, root_op_f, tensor_decompose, DEFAULT_CAP};
use crate::isocrystal::{kottwitz_quotient, ul_best};
use crate::rootdata::{DatumSpec, RootDatum};
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub id: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountCase {
    pub datum: String,
    pub b: String,
    pub mu: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountOutcome {
    pub case: CountCase,
    pub dim: Option<i64>,
    pub classes: usize,
    pub window_bound: i64,
    pub window_counts: Vec<usize>,
    pub stabilized: bool,
    pub crystal: usize,
    pub ul: Vec<i64>,
    /// `max |R(λ)|` over all window points of `A_{μ,b}`.
    pub max_r: Option<usize>,
    pub window_points: usize,
    pub every_class_has_small: bool,
    pub elapsed_ms: u128,
}

impl CountOutcome {
    pub fn counting_ok(&self) -> bool {
        self.classes == self.crystal && self.stabilized && self.window_counts.first() == Some(&self.classes)
    }

    pub fn dimension_ok(&self) -> bool {
        self.max_r.map(|m| m as i64) == self.dim
    }
}

pub fn build(label: &str) -> Result<(DatumSpec, RootDatum), Error> {
    let spec: DatumSpec = label.parse()?;
    let d = RootDatum::build(&spec)?;
    Ok((spec, d))
}

/// Dominant minuscule coweights with all coordinates in `{0, 1}`; for the
/// data used here this is every dominant minuscule coweight up to centre.
pub fn minuscule_coweights(datum: &RootDatum) -> Vec<Vec<i64>> {
    let r = datum.rank;
    let mut out = Vec::new();
    for bits in 0u32..(1 << r) {
        let mu: Vec<i64> = (0..r).map(|i| i64::from(bits >> i & 1 == 1)).collect();
        if datum.is_dominant(&mu) && datum.is_minuscule(&mu) {
            out.push(mu);
        }
    }
    out.sort();
    out
}

/// Words naming every element of `Ω`, deduplicated.
pub fn omega_words(datum: &RootDatum) -> Vec<(String, BasicElement)> {
    let mut out: Vec<(String, BasicElement)> = vec![("id".into(), BasicElement::identity(datum))];
    let s = datum.num_simple() / datum.copies.max(1);
    for i in 1..=s {
        for k in 1..=(s as i64 + 1) {
            let word = if k == 1 { format!("w{i}") } else { format!("w{i}^{k}") };
            if let Ok(b) = BasicElement::parse(datum, &word) {
                if !out.iter().any(|(_, x)| x.b == b.b) {
                    out.push((word, b));
                }
            }
        }
    }
    out
}

fn matching(datum: &RootDatum, b: &BasicElement) -> Vec<Vec<i64>> {
    let kq = kottwitz_quotient(datum);
    minuscule_coweights(datum).into_iter().filter(|m| kq.same(m, b.t())).collect()
}

/// Counting battery: general linear groups with `b = ω₁^m`, a degree-two
/// product, and adjoint groups with every `b ∈ Ω`.
pub fn count_battery() -> Result<Vec<CountCase>, Error> {
    let mut out = Vec::new();
    let mut push = |label: &str, words: Vec<String>| -> Result<(), Error> {
        let (_, d) = build(label)?;
        for w in words {
            let b = BasicElement::parse(&d, &w)?;
            for mu in matching(&d, &b).into_iter().filter(|m| m.iter().any(|&x| x != 0)) {
                out.push(CountCase { datum: label.into(), b: w.clone(), mu });
            }
        }
        Ok(())
    };
    push("A1:gl", vec!["w1".into()])?;
    push("A2:gl", vec!["w1".into(), "w1^2".into()])?;
    push("A3:gl", vec!["w1".into(), "w1^3".into()])?;
    push("A2:gl:d=2", (0..=6).map(|m: i64| m.to_string()).collect())?;
    for label in ["A2", "A2:sigma=2", "A3", "A3:sigma=2", "C2", "C3", "D4"] {
        let (_, d) = build(label)?;
        push(label, omega_words(&d).into_iter().map(|(w, _)| w).collect())?;
    }
    Ok(out)
}

pub fn run_count_case(case: &CountCase, window: Option<i64>) -> Result<CountOutcome, Error> {
    let t0 = Instant::now();
    let (_, d) = build(&case.datum)?;
    let b = BasicElement::parse(&d, &case.b)?;
    let ctx = Context::new(&d, &case.mu, b.clone())?;
    let cp = ctx.count_top_classes(window)?;
    let ul = ul_best(&d, &b)?;
    let crystal = crystal_generate(&d, &case.mu, DEFAULT_CAP)?.weight_mult_class(&d, &ul.rep);
    let points = ctx.window_points(cp.window_bound);
    let mut max_r = None;
    for l in &points {
        let r = ctx.r_set(l).len();
        max_r = Some(max_r.map_or(r, |m: usize| m.max(r)));
        ctx.is_top_by_criterion(l)?;
    }
    Ok(CountOutcome {
        case: case.clone(),
        dim: ctx.dim,
        classes: cp.classes,
        window_bound: cp.window_bound,
        window_counts: cp.window_counts,
        stabilized: cp.stabilized,
        crystal,
        ul: ul.rep,
        max_r,
        window_points: points.len(),
        every_class_has_small: cp.small_representatives.iter().all(Option::is_some),
        elapsed_ms: t0.elapsed().as_millis(),
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuperbasicSummary {
    pub groups: usize,
    pub tuples: usize,
    pub points: usize,
    pub top: usize,
    pub violations: Vec<String>,
}

/// All `(n, d, m)` with `n ≤ 4`, `d ≤ 3`, `gcd(m, n) = 1`, every minuscule
/// tuple, every point of `A` up to centre.
pub fn superbasic_battery(max_n: usize, max_d: usize) -> Result<SuperbasicSummary, Error> {
    let mut s = SuperbasicSummary::default();
    for n in 2..=max_n {
        for d in 1..=max_d {
            for m in 0..=(n * d) as i64 {
                let Ok(sb) = Superbasic::new(n, d, m) else { continue };
                s.groups += 1;
                for mu in sb.minuscule_tuples() {
                    s.tuples += 1;
                    let ctx = sb.context(&mu)?;
                    for l in sb.enumerate(&mu) {
                        let t = sb.table_in(&ctx, &l)?;
                        s.points += 1;
                        if t.dim_value != t.r_count as i64 {
                            s.violations.push(format!("n={n} d={d} m={m} λ={l:?}: dim {} vs |R| {}", t.dim_value, t.r_count));
                        }
                        if t.is_top {
                            s.top += 1;
                            if !(t.coxeter && t.flat_sum_ok && t.nonneg_ok) {
                                s.violations.push(format!(
                                    "n={n} d={d} m={m} λ={l:?}: coxeter={} sum={} nonneg={}",
                                    t.coxeter, t.flat_sum_ok, t.nonneg_ok
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(s)
}

pub const APPENDIX_TYPES: &[&str] = &[
    "A1", "A2", "A2:sigma=2", "A3", "A3:sigma=2", "A4", "A4:sigma=2", "A5", "A5:sigma=2", "A6", "A6:sigma=2", "A7",
    "A7:sigma=2", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4", "D4:sigma=2", "D4:sigma=3", "D5", "D5:sigma=2",
    "D6", "D6:sigma=2", "E6", "E6:sigma=2", "E7",
];

pub fn appendix_battery(types: &[&str], mode: Mode) -> Result<Vec<Certification>, Error> {
    let mut out = Vec::new();
    for t in types {
        out.extend(certify_all(&t.parse()?, mode)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorOutcome {
    pub product: String,
    pub base: String,
    pub m: i64,
    pub mu: Vec<i64>,
    pub product_count: usize,
    pub decomposition: Vec<(Vec<i64>, usize, usize)>,
    pub weighted_sum: usize,
}

/// Product count against `Σ_μ m^μ · count(μ)` on the base group.
pub fn tensor_battery(n: usize, d: usize) -> Result<Vec<TensorOutcome>, Error> {
    let base_label = format!("A{}:gl", n - 1);
    let prod_label = format!("A{}:gl:d={d}", n - 1);
    let (_, base) = build(&base_label)?;
    let (_, prod) = build(&prod_label)?;
    let mut out = Vec::new();
    let mut ks = vec![0usize; d];
    loop {
        let m: i64 = ks.iter().sum::<usize>() as i64;
        let parts: Vec<Vec<i64>> = ks.iter().map(|&k| (0..n).map(|i| i64::from(i < k)).collect()).collect();
        let mu: Vec<i64> = parts.concat();
        let pb = BasicElement::parse(&prod, &m.to_string())?;
        let ctx = Context::new(&prod, &mu, pb)?;
        let product_count = ctx.count_top_classes(None)?.classes;
        let bb = BasicElement::parse(&base, &m.to_string())?;
        let ul = ul_best(&base, &bb)?;
        let mut decomposition = Vec::new();
        let mut weighted_sum = 0;
        for (nu, mult) in tensor_decompose(&base, &parts, DEFAULT_CAP)? {
            let count = if base.is_minuscule(&nu) {
                Context::new(&base, &nu, bb.clone())?.count_top_classes(None)?.classes
            } else {
                crystal_generate(&base, &nu, DEFAULT_CAP)?.weight_mult_class(&base, &ul.rep)
            };
            weighted_sum += mult * count;
            decomposition.push((nu, mult, count));
        }
        out.push(TensorOutcome {
            product: prod_label.clone(),
            base: base_label.clone(),
            m,
            mu,
            product_count,
            decomposition,
            weighted_sum,
        });
        let mut i = 0;
        loop {
            if i == d {
                return Ok(out);
            }
            if ks[i] < n {
                ks[i] += 1;
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

/// Weyl's dimension formula in the dual convention:
/// `Π_{α>0} <α, μ + ρ^∨> / <α, ρ^∨>`.
pub fn weyl_dimension(datum: &RootDatum, mu: &[i64]) -> u128 {
    let rho = datum.rho_vee();
    let mut num = crate::linalg::q(1);
    for a in datum.positive_roots() {
        let shifted: Vec<_> = mu.iter().zip(&rho).map(|(m, r)| crate::linalg::q(*m) + r).collect();
        num *= datum.pair_q(a, &shifted) / datum.pair_q(a, &rho);
    }
    num.to_integer() as u128
}

/// Dominant coweights with `<2ρ, μ> ≤ bound`.
pub fn dominant_upto(datum: &RootDatum, bound: i64) -> Vec<Vec<i64>> {
    let r = datum.rank;
    let two_rho = |y: &[i64]| (datum.rho_pair(&crate::linalg::to_q(y)) * crate::linalg::q(2)).to_integer() as i64;
    let mut out = Vec::new();
    let mut c = vec![0i64; r];
    loop {
        if datum.is_dominant(&c) && two_rho(&c) <= bound {
            out.push(c.clone());
        }
        let mut i = 0;
        loop {
            if i == r {
                out.sort();
                return out;
            }
            c[i] += 1;
            if c[i] <= bound {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FuzzTally {
    pub name: String,
    pub samples: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

impl FuzzTally {
    fn new(name: &str) -> Self {
        FuzzTally { name: name.into(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(what());
            }
        }
    }
}

/// Randomised identities over the counting battery; each tally reaches
/// `samples` unless the attempt budget runs out first.
pub fn fuzz_properties(samples: usize, seed: u64) -> Result<Vec<FuzzTally>, Error> {
    let mut rng = StdRng::seed_from_u64(seed);
    let cases = count_battery()?;
    let data: Vec<RootDatum> = cases.iter().map(|c| build(&c.datum).map(|x| x.1)).collect::<Result<_, _>>()?;
    let mut ctxs = Vec::new();
    for (c, d) in cases.iter().zip(&data) {
        ctxs.push(Context::new(d, &c.mu, BasicElement::parse(d, &c.b)?)?);
    }
    let omegas: Vec<Vec<ExtAffine>> = data.iter().map(omega_generators).collect();
    let names = [
        "λ_α + λ_{-α} = -1",
        "affine reflection s(λ) = λ - λ_α α^∨",
        "Ω-equivariance of λ_γ and ε_λ",
        "<α, λ♮> = λ_{α⁻¹} - λ_α",
        "♮ is equivariant under W̃ ∩ J_b",
        "orbit longest element keeps λ_γ ≥ 0",
        "sign dichotomy on finite orbits for top λ",
        "ε_λ(Φ⁺) = {γ : λ_γ ≥ 0}",
        "e_i(f_i(p)) = p",
    ];
    let mut t: Vec<FuzzTally> = names.iter().map(|n| FuzzTally::new(n)).collect();
    let budget = samples * 400;
    let mut attempts = 0;
    while t[..8].iter().any(|x| x.samples < samples) && attempts < budget {
        attempts += 1;
        let k = rng.gen_range(0..ctxs.len());
        let (d, ctx, om) = (&data[k], &ctxs[k], &omegas[k]);
        let lam: Vec<i64> = (0..d.rank).map(|_| rng.gen_range(-4..=4)).collect();
        let a = rng.gen_range(0..d.num_roots());
        let lg = |l: &[i64], g| lambda_gamma(d, l, g);
        t[0].record(lg(&lam, a) + lg(&lam, d.neg(a)) == -1, || format!("{} λ={lam:?}", d.label));
        let s = tilde_root(d, a).reflection(d).act(&lam);
        let expect: Vec<i64> = lam.iter().zip(d.coroot(a)).map(|(l, c)| l - lg(&lam, a) * c).collect();
        t[1].record(s == expect, || format!("{} λ={lam:?}", d.label));
        let mut w = ExtAffine::identity(d.rank);
        for _ in 0..rng.gen_range(0..=3) {
            let g = &om[rng.gen_range(0..om.len())];
            w = if rng.gen_bool(0.5) { w.mul(g) } else { w.mul(&g.inverse()) };
        }
        let wl = w.act(&lam);
        let ok = lg(&wl, d.act_root(&w.w, a)) == lg(&lam, a)
            && crate::affine::epsilon_of(d, &wl) == w.w.mul(&crate::affine::epsilon_of(d, &lam));
        t[2].record(ok, || format!("{} λ={lam:?} ω={}", d.label, w.display(d)));
        let (_, nat) = ctx.b.natural_dagger(&lam);
        t[3].record(d.pair(a, &nat) == lg(&lam, ctx.b.prev_root(d, a)) - lg(&lam, a), || format!("{} λ={lam:?}", d.label));
        let gens = ctx.jb_generators();
        if !gens.is_empty() {
            let mut x = ExtAffine::identity(d.rank);
            for _ in 0..rng.gen_range(1..=3) {
                let g = &gens[rng.gen_range(0..gens.len())];
                x = if rng.gen_bool(0.5) { x.mul(g) } else { x.mul(&g.inverse()) };
            }
            let ok = ctx.b.fixed_by_twist(d, &x) && ctx.b.natural_dagger(&x.act(&lam)).1 == x.w.apply(&nat);
            t[4].record(ok, || format!("{} λ={lam:?} x={}", d.label, x.display(d)));
        }
        for od in ctx.orbits.iter().filter(|o| o.finite) {
            let vals: Vec<i64> = od.root_orbit.iter().map(|&x| lg(&lam, x)).collect();
            if vals.iter().all(|&v| v >= 1) || vals.iter().all(|&v| v <= -1) {
                let tw = od.longest.as_ref().expect("finite orbit");
                let img = tw.act(&lam);
                let ok = d.roots().all(|g| lg(&lam, g) < 0 || lg(&img, d.act_root(&tw.w, g)) >= 0);
                t[5].record(ok, || format!("{} λ={lam:?}", d.label));
            }
        }
        let etas = ctx.solvable_etas();
        if !etas.is_empty() {
            let e = etas[rng.gen_range(0..etas.len())];
            let c: Vec<i64> = (0..ctx.k_noncentral.len()).map(|_| rng.gen_range(-6..=6)).collect();
            let p = ctx.coset_point(e, &c).expect("solvable");
            if ctx.is_top(&p) {
                let ok = ctx.small_and_type(&p).is_ok();
                t[6].record(ok, || format!("{} λ={p:?}", d.label));
            }
        }
        t[7].record(epsilon_wellformed(d, &lam), || format!("{} λ={lam:?}", d.label));
    }
    let crystals: Vec<(RootDatum, crate::crystal::Crystal)> = ["A2", "A3", "B2", "C2", "D4", "A2:gl"]
        .iter()
        .flat_map(|l| {
            let (_, d) = build(l).expect("valid label");
            dominant_upto(&d, 8)
                .into_iter()
                .map(|mu| {
                    let c = crystal_generate(&d, &mu, DEFAULT_CAP).expect("small crystal");
                    (d.clone(), c)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    while t[8].samples < samples {
        let (d, c) = &crystals[rng.gen_range(0..crystals.len())];
        let p = &c.elements[rng.gen_range(0..c.len())];
        let i = rng.gen_range(0..d.num_simple());
        if let Some(fp) = root_op_f(d, i, p) {
            t[8].record(root_op_e(d, i, &fp).as_ref() == Some(p), || format!("{} i={i}", d.label));
        }
    }
    Ok(t)
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub window: Option<i64>,
    pub fuzz_samples: usize,
    pub seed: u64,
    pub exhaustive_e7: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { window: None, fuzz_samples: 10_000, seed: 0x5eed, exhaustive_e7: true }
    }
}

fn line(id: &str, name: &str, pass: bool, detail: String, t0: Instant) -> CheckLine {
    CheckLine { id: id.into(), name: name.into(), pass, detail, elapsed_ms: t0.elapsed().as_millis() }
}

fn failed(id: &str, name: &str, e: Error, t0: Instant) -> CheckLine {
    line(id, name, false, format!("error: {e}"), t0)
}

/// Every battery, one line per check.
pub fn run_suite(opts: &SuiteOptions) -> Vec<CheckLine> {
    let mut out = Vec::new();
    let window = opts.window.or_else(|| window_from_env().ok().flatten());

    let t0 = Instant::now();
    match count_battery().and_then(|cs| cs.iter().map(|c| run_count_case(c, window)).collect::<Result<Vec<_>, _>>()) {
        Ok(res) => {
            let bad: Vec<String> = res
                .iter()
                .filter(|r| !r.counting_ok())
                .map(|r| format!("{} b={} μ={:?}: {} vs {}", r.case.datum, r.case.b, r.case.mu, r.classes, r.crystal))
                .collect();
            out.push(line(
                "1",
                "class count equals crystal weight multiplicity",
                bad.is_empty(),
                format!("{} cases; {}", res.len(), if bad.is_empty() { "all equal".into() } else { bad.join("; ") }),
                t0,
            ));
            let bad: Vec<String> = res
                .iter()
                .filter(|r| !r.dimension_ok())
                .map(|r| format!("{} b={} μ={:?}: {:?} vs {:?}", r.case.datum, r.case.b, r.case.mu, r.max_r, r.dim))
                .collect();
            let pts: usize = res.iter().map(|r| r.window_points).sum();
            out.push(line(
                "3",
                "max stratum dimension equals dimension formula",
                bad.is_empty(),
                format!("{} cases, {pts} window points", res.len()),
                t0,
            ));
            let small = res.iter().all(|r| r.every_class_has_small);
            out.push(line("3b", "every class has a small representative", small, String::new(), t0));
        }
        Err(e) => out.push(failed("1", "class count equals crystal weight multiplicity", e, t0)),
    }

    let t0 = Instant::now();
    match superbasic_battery(4, 3) {
        Ok(s) => out.push(line(
            "2",
            "superbasic table dimension identity and top conditions",
            s.violations.is_empty(),
            format!("{} groups, {} tuples, {} points, {} top; {} violations", s.groups, s.tuples, s.points, s.top, s.violations.len()),
            t0,
        )),
        Err(e) => out.push(failed("2", "superbasic table dimension identity and top conditions", e, t0)),
    }

    let t0 = Instant::now();
    match appendix_battery(APPENDIX_TYPES, Mode::Pruned) {
        Ok(cs) => {
            let bad: Vec<String> = cs.iter().filter(|c| !c.verdict).map(|c| format!("{} b={}", c.datum, c.b)).collect();
            let ms = t0.elapsed().as_millis();
            out.push(line(
                "4",
                "minimal Levi J sets and uniqueness (pruned)",
                bad.is_empty() && ms < 5_000,
                format!("{} certifications in {ms} ms; {}", cs.len(), bad.join("; ")),
                t0,
            ));
        }
        Err(e) => out.push(failed("4", "minimal Levi J sets and uniqueness (pruned)", e, t0)),
    }
    if opts.exhaustive_e7 {
        let t0 = Instant::now();
        match appendix_battery(&["E7"], Mode::Exhaustive) {
            Ok(cs) => {
                let ok = cs.iter().all(|c| c.verdict) && t0.elapsed().as_secs() < 300;
                let n: u64 = cs.iter().map(|c| c.report.visited).max().unwrap_or(0);
                out.push(line("4b", "E7 uniqueness by full scan of W", ok, format!("{n} elements scanned"), t0));
            }
            Err(e) => out.push(failed("4b", "E7 uniqueness by full scan of W", e, t0)),
        }
    }

    let t0 = Instant::now();
    let mut bad = Vec::new();
    let mut count = 0;
    for label in ["A1", "A2", "A3", "B2", "C2", "D4"] {
        let Ok((_, d)) = build(label) else { continue };
        for mu in dominant_upto(&d, 12) {
            count += 1;
            match crystal_generate(&d, &mu, DEFAULT_CAP) {
                Ok(c) if c.len() as u128 == weyl_dimension(&d, &mu) => {}
                Ok(c) => bad.push(format!("{label} {mu:?}: {} vs {}", c.len(), weyl_dimension(&d, &mu))),
                Err(e) => bad.push(format!("{label} {mu:?}: {e}")),
            }
        }
    }
    out.push(line("5", "crystal size equals Weyl dimension", bad.is_empty(), format!("{count} weights; {}", bad.join("; ")), t0));

    let t0 = Instant::now();
    let mut bad = Vec::new();
    let mut count = 0;
    for (n, d) in [(3, 2), (2, 3)] {
        match tensor_battery(n, d) {
            Ok(res) => {
                for r in res {
                    count += 1;
                    if r.product_count != r.weighted_sum {
                        bad.push(format!("{} μ={:?}: {} vs {}", r.product, r.mu, r.product_count, r.weighted_sum));
                    }
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    out.push(line("6", "product count equals weighted tensor sum", bad.is_empty(), format!("{count} tuples; {}", bad.join("; ")), t0));

    let t0 = Instant::now();
    match fuzz_properties(opts.fuzz_samples, opts.seed) {
        Ok(ts) => {
            for (k, ft) in ts.iter().enumerate() {
                let ok = ft.violations == 0 && ft.samples >= opts.fuzz_samples;
                let detail = format!(
                    "{} samples, {} violations{}",
                    ft.samples,
                    ft.violations,
                    ft.first_violation.as_ref().map(|v| format!(": {v}")).unwrap_or_default()
                );
                out.push(line(&format!("7.{}", k + 1), &ft.name, ok, detail, t0));
            }
        }
        Err(e) => out.push(failed("7", "property fuzz", e, t0)),
    }
    out
}

/// The default window for a case, honouring the environment override.
pub fn effective_window(datum: &RootDatum, mu: &[i64]) -> Result<i64, Error> {
    Ok(window_from_env()?.unwrap_or_else(|| default_window(datum, mu)))
}
