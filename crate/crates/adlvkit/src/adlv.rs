//! Semi-infinite strata of `X_μ(b)` for minuscule `μ` and basic `b`:
//! classification of coweights, top strata, equivalence moves, class
//! counting, small coweights and stabilizer types.
//!
//! Counting works on cosets. `λ ∈ A_{μ,b}` exactly when `λ♮ = η ∈ W₀μ`,
//! and the solutions of `(p(b)σ − 1)λ = η − t_b` form `λ_η + Y^{p(b)σ}`.
//! Translations by `Y^{p(b)σ}` lie in `J_b`, so classes are orbits of
//! `Ω_{M_v} ∩ J_b` on the set of `η` whose cosets are top far out in the
//! direction of the generic vector `v`. A windowed union-find over explicit
//! coweights is kept as an independent cross-check.

pub mod superbasic;

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{epsilon_of, lambda_gamma, omega_fixed_generators, reduce_to_omega, BasicElement, ExtAffine, OrbitData};
use crate::isocrystal::{adlv_dim, adlv_nonempty};
use crate::linalg::{dot_q, kernel_int, q, smith, solve_int, solve_q, IMat, LatticeQuotient, Q};
use crate::rootdata::{RootDatum, RootId, WeylElement};
use crate::Error;

pub const WINDOW_ENV: &str = "ADLVKIT_WINDOW";

/// Everything about one coweight `λ` for fixed `(μ, b)`.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaReport {
    pub lambda: Vec<i64>,
    pub dagger: Vec<i64>,
    pub natural: Vec<i64>,
    pub in_a: bool,
    pub r_set: Vec<RootId>,
    pub stratum_dim: Option<usize>,
    pub is_top: Option<bool>,
    pub is_small: Option<bool>,
    pub pi_of: Option<Vec<RootId>>,
    pub flat: Option<Vec<i64>>,
    pub class_id: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MoveTag {
    /// `ω ∈ Ω ∩ J_b`.
    Omega,
    /// Longest element of a finite `W_{𝒪_α̃}` with `λ_β ≥ 1` on the orbit.
    OrbitLongest,
    /// Some `λ_β = 0` on a finite orbit: the closure is stable.
    OrbitFixed,
    /// `y ∈ Ω_{M_v} ∩ J_b` between points of `A(v)`.
    LeviOmega,
}

#[derive(Clone, Debug)]
pub struct Move {
    pub target: Vec<i64>,
    pub tag: MoveTag,
}

/// Data for the Levi criterion: `z v = v̄`, `M = M_J`, `b_M = z b σ(z)^{-1}`.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub z: WeylElement,
    pub vbar: Vec<Q>,
    pub j: Vec<usize>,
    pub datum: RootDatum,
    pub b: BasicElement,
}

/// Fixed inputs `(G, μ, b)` and everything derived from them once.
pub struct Context<'a> {
    pub datum: &'a RootDatum,
    pub mu: Vec<i64>,
    pub b: BasicElement,
    /// `dim X_μ(b)`, or `None` when the variety is empty.
    pub dim: Option<i64>,
    pub v: Vec<Q>,
    in_m: Vec<bool>,
    in_n: Vec<bool>,
    pub pi: Vec<RootId>,
    pub orbits: Vec<OrbitData>,
    omega_j: Vec<ExtAffine>,
    gprime: Vec<ExtAffine>,
    /// Non-central part of a basis of `Y^{p(b)σ}`.
    pub k_noncentral: Vec<Vec<i64>>,
    central_quotient: LatticeQuotient,
    pub etas: Vec<Vec<i64>>,
    /// Particular solutions `λ_η`, for solvable `η`.
    particular: Vec<Option<Vec<i64>>>,
    pub levi: LeviData,
}

impl<'a> Context<'a> {
    pub fn new(datum: &'a RootDatum, mu: &[i64], b: BasicElement) -> Result<Context<'a>, Error> {
        if !datum.is_dominant(mu) {
            return Err(Error::Precondition(format!("μ = {mu:?} is not dominant")));
        }
        if !datum.is_minuscule(mu) {
            return Err(Error::Precondition(format!("μ = {mu:?} is not minuscule")));
        }
        let dim = if adlv_nonempty(datum, mu, &b) { Some(adlv_dim(datum, mu, &b)?) } else { None };
        let kbasis = crate::affine::fixed_lattice(&b.f);
        let v = generic_vector_from(datum, &kbasis);
        let in_m: Vec<bool> = datum.roots().map(|a| datum.pair_q(a, &v).is_zero()).collect();
        let in_n: Vec<bool> = datum.roots().map(|a| datum.pair_q(a, &v).is_positive()).collect();
        let pi = datum.pi_set();
        let orbits = pi.iter().map(|&a| b.orbit_data(datum, a)).collect();

        let (k_noncentral, k_central) = split_central(datum, &kbasis);
        let central_quotient = LatticeQuotient::new(datum.rank, &k_central);

        let mut omega_j = Vec::new();
        for w in omega_fixed_generators(datum, &datum.sigma) {
            if !b.fixed_by_twist(datum, &w) {
                return Err(Error::Invariant("Ω^σ element not in J_b".into()));
            }
            omega_j.push(w.inverse());
            omega_j.push(w);
        }

        let m_roots: Vec<RootId> = datum.roots().filter(|&a| in_m[a]).collect();
        let m_datum = datum.sub_datum(&m_roots)?;
        let mut gprime: Vec<ExtAffine> = Vec::new();
        for y in levi_lattice(datum, &m_datum, &b.f) {
            let w = reduce_to_omega(&m_datum, &ExtAffine::translation(y));
            if !w.is_identity() && !gprime.contains(&w) {
                gprime.push(w);
            }
        }
        for k in &k_noncentral {
            let t = ExtAffine::translation(k.clone());
            if !gprime.contains(&t) {
                gprime.push(t);
            }
        }
        let mut both = Vec::new();
        for w in gprime {
            if !b.fixed_by_twist(datum, &w) {
                return Err(Error::Invariant(format!("{} is not in J_b", w.display(datum))));
            }
            both.push(w.inverse());
            both.push(w);
        }

        let etas = datum.weyl_orbit(mu);
        let fm1 = minus_identity(&b.f);
        let particular = etas
            .iter()
            .map(|eta| {
                let rhs: Vec<i64> = eta.iter().zip(b.t()).map(|(e, t)| e - t).collect();
                solve_int(&fm1, &rhs).map(|(x, _)| normalize(&x, &k_noncentral, &k_central))
            })
            .collect();

        let levi = levi_data(datum, &b, &v)?;
        Ok(Context {
            datum,
            mu: mu.to_vec(),
            b,
            dim,
            v,
            in_m,
            in_n,
            pi,
            orbits,
            omega_j,
            gprime: both,
            k_noncentral,
            central_quotient,
            etas,
            particular,
            levi,
        })
    }

    pub fn in_a(&self, lambda: &[i64]) -> bool {
        let (_, nat) = self.b.natural_dagger(lambda);
        self.datum.dominant_rep(&nat).0 == self.mu
    }

    /// `R(λ)`: roots with `<α, λ♮> = −1` and `λ_α ≥ 1`.
    pub fn r_set(&self, lambda: &[i64]) -> Vec<RootId> {
        let (_, nat) = self.b.natural_dagger(lambda);
        self.datum
            .roots()
            .filter(|&a| self.datum.pair(a, &nat) == -1 && lambda_gamma(self.datum, lambda, a) >= 1)
            .collect()
    }

    pub fn is_top(&self, lambda: &[i64]) -> bool {
        self.in_a(lambda) && Some(self.r_set(lambda).len() as i64) == self.dim
    }

    /// `λ ∈ A(v)`: `λ_α ≥ 0` for every `α` with `<α, v> > 0`.
    pub fn in_av(&self, lambda: &[i64]) -> bool {
        self.datum.roots().all(|a| !self.in_n[a] || lambda_gamma(self.datum, lambda, a) >= 0)
    }

    pub fn classify(&self, lambda: &[i64]) -> Result<LambdaReport, Error> {
        if lambda.len() != self.datum.rank {
            return Err(Error::Parse(format!("λ has {} entries, expected {}", lambda.len(), self.datum.rank)));
        }
        let (dagger, natural) = self.b.natural_dagger(lambda);
        let in_a = self.datum.dominant_rep(&natural).0 == self.mu;
        let mut rep = LambdaReport {
            lambda: lambda.to_vec(),
            dagger,
            natural: natural.clone(),
            in_a,
            r_set: Vec::new(),
            stratum_dim: None,
            is_top: None,
            is_small: None,
            pi_of: None,
            flat: None,
            class_id: None,
        };
        if !in_a {
            return Ok(rep);
        }
        rep.r_set = self.r_set(lambda);
        rep.stratum_dim = Some(rep.r_set.len());
        let top = Some(rep.r_set.len() as i64) == self.dim;
        rep.is_top = Some(top);
        rep.flat = Some(self.lambda_flat(lambda));
        if top {
            let (small, pi) = self.small_and_type(lambda)?;
            rep.is_small = Some(small);
            if small {
                rep.pi_of = Some(pi);
            }
        }
        Ok(rep)
    }

    /// `λ♭ = ε_λ^{-1}(λ♮)`.
    pub fn lambda_flat(&self, lambda: &[i64]) -> Vec<i64> {
        let (_, nat) = self.b.natural_dagger(lambda);
        epsilon_of(self.datum, lambda).inverse().apply(&nat)
    }

    /// Criterion through the Levi `M_{v̄}`: `z(λ)` is top for `(M, b_M)`
    /// and `λ_β` has constant sign class on every orbit outside `Φ_{M_v}`.
    pub fn is_top_by_criterion(&self, lambda: &[i64]) -> Result<bool, Error> {
        if !self.in_a(lambda) {
            return Err(Error::Precondition("λ is not in A_{μ,b}".into()));
        }
        let d = self.datum;
        let outside = d.roots().filter(|&a| !self.in_m[a]).all(|a| {
            let orb = self.b.root_orbit(d, a);
            let signs: Vec<bool> = orb.iter().map(|&x| lambda_gamma(d, lambda, x) >= 0).collect();
            signs.iter().all(|&s| s) || signs.iter().all(|&s| !s)
        });
        let lv = &self.levi;
        let zl = lv.z.apply(lambda);
        let (_, nat) = self.b.natural_dagger(lambda);
        let znat = lv.z.apply(&nat);
        let mu_m = lv.datum.dominant_rep(&znat).0;
        let (_, nat_m) = lv.b.natural_dagger(&zl);
        if nat_m != znat {
            return Err(Error::Invariant("z(λ)♮ differs from z(λ♮)".into()));
        }
        let r_m = lv
            .datum
            .roots()
            .filter(|&a| lv.datum.pair(a, &znat) == -1 && lambda_gamma(&lv.datum, &zl, a) >= 1)
            .count() as i64;
        let inside = adlv_nonempty(&lv.datum, &mu_m, &lv.b) && r_m == adlv_dim(&lv.datum, &mu_m, &lv.b)?;
        let by_criterion = inside && outside;
        let by_r = Some(self.r_set(lambda).len() as i64) == self.dim;
        if by_criterion != by_r {
            return Err(Error::Invariant(format!(
                "criterion says {by_criterion} but |R| test says {by_r} for λ = {lambda:?}"
            )));
        }
        Ok(by_criterion)
    }

    /// Smallness and the subset `Π(λ) ⊆ Π` of finite orbits with `λ_β ≥ 0`.
    pub fn small_and_type(&self, lambda: &[i64]) -> Result<(bool, Vec<RootId>), Error> {
        let d = self.datum;
        let mut small = true;
        let mut pi_of = Vec::new();
        for od in &self.orbits {
            let vals: Vec<i64> = od.root_orbit.iter().map(|&x| lambda_gamma(d, lambda, x)).collect();
            if !vals.iter().any(|&x| x <= 0) {
                small = false;
            }
            if od.finite {
                let nonneg = vals.iter().all(|&x| x >= 0);
                if !nonneg && !vals.iter().all(|&x| x <= -1) {
                    return Err(Error::Invariant(format!("mixed signs on a finite orbit for top λ = {lambda:?}")));
                }
                if nonneg {
                    pi_of.push(od.seed);
                }
            }
        }
        Ok((small, pi_of))
    }

    /// Moves `λ ↦ λ'` that keep the class of a top `λ`.
    pub fn equivalence_moves(&self, lambda: &[i64]) -> Result<Vec<Move>, Error> {
        if !self.is_top(lambda) {
            return Err(Error::Precondition(format!("λ = {lambda:?} is not top")));
        }
        let d = self.datum;
        let mut out = Vec::new();
        for w in &self.omega_j {
            out.push(Move { target: w.act(lambda), tag: MoveTag::Omega });
        }
        for od in self.orbits.iter().filter(|o| o.finite) {
            let vals: Vec<i64> = od.root_orbit.iter().map(|&x| lambda_gamma(d, lambda, x)).collect();
            if vals.iter().all(|&x| x >= 1) {
                let tw = od.longest.as_ref().expect("finite orbit has a longest element");
                out.push(Move { target: tw.act(lambda), tag: MoveTag::OrbitLongest });
            } else if vals.contains(&0) {
                out.push(Move { target: lambda.to_vec(), tag: MoveTag::OrbitFixed });
            }
        }
        if self.in_av(lambda) {
            for y in &self.gprime {
                let t = y.act(lambda);
                if self.in_av(&t) {
                    out.push(Move { target: t, tag: MoveTag::LeviOmega });
                }
            }
        }
        for m in &out {
            if !self.is_top(&m.target) {
                return Err(Error::Invariant(format!("{:?} move from {lambda:?} leaves the top strata", m.tag)));
            }
        }
        Ok(out)
    }

    /// Generators of a subgroup of `W̃ ∩ J_b`: `Ω ∩ J_b`, `Ω_{M_v} ∩ J_b`, and
    /// the longest elements of finite orbit groups.
    pub fn jb_generators(&self) -> Vec<ExtAffine> {
        let mut out: Vec<ExtAffine> = self.omega_j.iter().chain(&self.gprime).cloned().collect();
        out.extend(self.orbits.iter().filter_map(|o| o.longest.clone()));
        out
    }

    /// Indices `e` with `η_e − t_b ∈ (p(b)σ − 1)Y`.
    pub fn solvable_etas(&self) -> Vec<usize> {
        (0..self.etas.len()).filter(|&e| self.particular[e].is_some()).collect()
    }

    /// `λ_η + Σ c_j k_j` over the non-central basis.
    pub fn coset_point(&self, e: usize, c: &[i64]) -> Option<Vec<i64>> {
        let mut lam = self.particular[e].clone()?;
        for (cj, k) in c.iter().zip(&self.k_noncentral) {
            for (l, x) in lam.iter_mut().zip(k) {
                *l += cj * x;
            }
        }
        Some(lam)
    }

    /// `|R|` of the coset `λ_η + Y^{p(b)σ}` far out along `v`.
    fn limit_dim(&self, e: usize) -> Option<usize> {
        let lam = self.particular[e].as_ref()?;
        let eta = &self.etas[e];
        let d = self.datum;
        Some(
            d.roots()
                .filter(|&a| {
                    d.pair(a, eta) == -1 && (self.in_n[a] || (self.in_m[a] && lambda_gamma(d, lam, a) >= 1))
                })
                .count(),
        )
    }

    fn eta_index(&self, eta: &[i64]) -> usize {
        self.etas.binary_search_by(|x| x.as_slice().cmp(eta)).expect("η in W₀μ")
    }

    /// Exact classes: orbits of `Ω_{M_v} ∩ J_b` on limit-top `η`.
    pub fn exact_classes(&self) -> Result<ExactClasses, Error> {
        let n = self.etas.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for e in 0..n {
            if self.particular[e].is_none() {
                continue;
            }
            for y in &self.gprime {
                let img = y.w.apply(&self.etas[e]);
                let f = self.eta_index(&img);
                if self.particular[f].is_none() {
                    return Err(Error::Invariant("Ω_M ∩ J_b moves a solvable η to an unsolvable one".into()));
                }
                union(&mut parent, e, f);
            }
        }
        let top: Vec<bool> = (0..n).map(|e| self.limit_dim(e).map(|x| x as i64) == self.dim).collect();
        let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut class_of_eta = vec![None; n];
        for e in 0..n {
            if self.particular[e].is_none() {
                continue;
            }
            let r = find(&mut parent, e);
            if top[e] != top[r] {
                return Err(Error::Invariant("limit-top is not constant on an orbit".into()));
            }
            if top[e] {
                let next = class_of_root.len();
                let id = *class_of_root.entry(r).or_insert(next);
                class_of_eta[e] = Some(id);
            }
        }
        let count = class_of_root.len();
        let mut reps = vec![Vec::new(); count];
        for (e, c) in class_of_eta.iter().enumerate() {
            if let Some(c) = *c {
                if reps[c].is_empty() {
                    reps[c] = self.deep_point(e);
                }
            }
        }
        Ok(ExactClasses { count, class_of_eta, representatives: reps })
    }

    /// A point of `A^top(v)` in the coset of `η`.
    fn deep_point(&self, e: usize) -> Vec<i64> {
        let base = self.particular[e].clone().expect("solvable");
        let vi: Vec<i64> = self.v.iter().map(|x| x.to_integer() as i64).collect();
        let mut k = 0i64;
        loop {
            let lam: Vec<i64> = base.iter().zip(&vi).map(|(a, b)| a + k * b).collect();
            if self.in_av(&lam) {
                return lam;
            }
            k += 1;
        }
    }

    /// Exact class of a point of `A^top(v)`.
    pub fn class_of(&self, exact: &ExactClasses, lambda: &[i64]) -> Option<usize> {
        if !self.in_av(lambda) || !self.is_top(lambda) {
            return None;
        }
        let (_, nat) = self.b.natural_dagger(lambda);
        exact.class_of_eta[self.eta_index(&nat)]
    }

    fn key(&self, lambda: &[i64]) -> Vec<i64> {
        self.central_quotient.canon(lambda)
    }

    /// Points of `A_{μ,b}` in the window `|c_j| ≤ bound` over the non-central
    /// basis of each coset, one per class modulo central translations.
    pub fn window_points(&self, bound: i64) -> Vec<Vec<i64>> {
        self.window_filtered(bound, |_| true)
    }

    /// Top points of the window.
    pub fn window_nodes(&self, bound: i64) -> Vec<Vec<i64>> {
        self.window_filtered(bound, |l| Some(self.r_set(l).len() as i64) == self.dim)
    }

    fn window_filtered(&self, bound: i64, keep: impl Fn(&[i64]) -> bool + Sync) -> Vec<Vec<i64>> {
        let r = self.k_noncentral.len();
        let per: Vec<Vec<Vec<i64>>> = (0..self.etas.len())
            .into_par_iter()
            .map(|e| {
                let Some(base) = &self.particular[e] else { return Vec::new() };
                let mut out = Vec::new();
                let mut c = vec![-bound; r];
                loop {
                    let mut lam = base.clone();
                    for (cj, k) in c.iter().zip(&self.k_noncentral) {
                        for (l, x) in lam.iter_mut().zip(k) {
                            *l += cj * x;
                        }
                    }
                    if keep(&lam) {
                        out.push(lam);
                    }
                    if !crate::isocrystal::odometer(&mut c, bound) {
                        break;
                    }
                }
                out
            })
            .collect();
        per.into_iter().flatten().collect()
    }

    /// Union-find over the window under all equivalence moves.
    pub fn window_partition(&self, bound: i64, exact: &ExactClasses) -> Result<WindowPartition, Error> {
        let nodes = self.window_nodes(bound);
        let index: HashMap<Vec<i64>, usize> = nodes.iter().enumerate().map(|(i, l)| (self.key(l), i)).collect();
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        let moves: Vec<Vec<Move>> = nodes.par_iter().map(|l| self.equivalence_moves(l)).collect::<Result<_, _>>()?;
        for (i, ms) in moves.iter().enumerate() {
            for m in ms {
                if let Some(&j) = index.get(&self.key(&m.target)) {
                    union(&mut parent, i, j);
                }
            }
        }
        let mut comp_class: HashMap<usize, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(nodes.len());
        for (i, l) in nodes.iter().enumerate() {
            let r = find(&mut parent, i);
            if let Some(c) = self.class_of(exact, l) {
                if let Some(&old) = comp_class.get(&r) {
                    if old != c {
                        return Err(Error::Invariant(format!("moves join exact classes {old} and {c}")));
                    }
                }
                comp_class.insert(r, c);
            }
            class_of.push(r);
        }
        let labelled: Vec<Option<usize>> = class_of.iter().map(|r| comp_class.get(r).copied()).collect();
        Ok(WindowPartition { bound, count: comp_class.len(), nodes, class_of: labelled })
    }

    /// Exact count plus windowed union-find at `B`, `B+1`, `B+2`.
    pub fn count_top_classes(&self, window: Option<i64>) -> Result<ClassPartition, Error> {
        let bound = match window {
            Some(b) if b >= 1 => b,
            Some(b) => return Err(Error::Precondition(format!("window {b} must be at least 1"))),
            None => window_from_env()?.unwrap_or_else(|| default_window(self.datum, &self.mu)),
        };
        let exact = if self.dim.is_some() {
            self.exact_classes()?
        } else {
            ExactClasses { count: 0, class_of_eta: vec![None; self.etas.len()], representatives: vec![] }
        };
        let mut counts = Vec::new();
        let mut first = None;
        for b in bound..=bound + 2 {
            let w = if self.dim.is_some() {
                self.window_partition(b, &exact)?
            } else {
                WindowPartition { bound: b, count: 0, nodes: vec![], class_of: vec![] }
            };
            counts.push(w.count);
            if first.is_none() {
                first = Some(w);
            }
        }
        let w = first.expect("at least one window");
        let mut small_reps = vec![None; exact.count];
        for (l, c) in w.nodes.iter().zip(&w.class_of) {
            if let Some(c) = *c {
                if small_reps[c].is_none() && self.small_and_type(l)?.0 {
                    small_reps[c] = Some(l.clone());
                }
            }
        }
        Ok(ClassPartition {
            classes: exact.count,
            representatives: exact.representatives,
            window_bound: bound,
            window_counts: counts.clone(),
            stabilized: counts.windows(2).all(|p| p[0] == p[1]),
            window: w,
            small_representatives: small_reps,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ExactClasses {
    pub count: usize,
    pub class_of_eta: Vec<Option<usize>>,
    pub representatives: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct WindowPartition {
    pub bound: i64,
    /// Components meeting `A^top(v)`.
    pub count: usize,
    pub nodes: Vec<Vec<i64>>,
    /// Exact class of the component of each node, when it meets `A^top(v)`.
    pub class_of: Vec<Option<usize>>,
}

#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub classes: usize,
    pub representatives: Vec<Vec<i64>>,
    pub window_bound: i64,
    pub window_counts: Vec<usize>,
    pub stabilized: bool,
    pub window: WindowPartition,
    /// A small representative per class, when the window contains one.
    pub small_representatives: Vec<Option<Vec<i64>>>,
}

/// `<θ, μ̄> + 2h` with `θ` running over the highest roots.
pub fn default_window(datum: &RootDatum, mu: &[i64]) -> i64 {
    let (d, _) = datum.dominant_rep(mu);
    let theta = datum.highest_roots().iter().map(|&t| datum.pair(t, &d)).max().unwrap_or(0);
    theta + 2 * datum.coxeter_number() as i64
}

pub fn window_from_env() -> Result<Option<i64>, Error> {
    match std::env::var(WINDOW_ENV) {
        Ok(s) => match s.trim().parse::<i64>() {
            Ok(b) if b >= 1 => Ok(Some(b)),
            _ => Err(Error::Parse(format!("{WINDOW_ENV}={s} is not a positive integer"))),
        },
        Err(_) => Ok(None),
    }
}

/// A vector of `Y_ℝ^{p(b)σ}` such that every root vanishing on it vanishes on
/// the whole fixed space.
pub fn generic_vector(datum: &RootDatum, b: &BasicElement) -> Vec<Q> {
    generic_vector_from(datum, &crate::affine::fixed_lattice(&b.f))
}

fn generic_vector_from(datum: &RootDatum, basis: &[Vec<i64>]) -> Vec<Q> {
    let mut n = 2i64;
    loop {
        let mut v = vec![0i64; datum.rank];
        let mut c = 1i64;
        for k in basis {
            for (x, y) in v.iter_mut().zip(k) {
                *x += c * y;
            }
            c *= n;
        }
        let generic = datum
            .roots()
            .all(|a| datum.pair(a, &v) != 0 || basis.iter().all(|k| datum.pair(a, k) == 0));
        if generic {
            return v.into_iter().map(q).collect();
        }
        n += 1;
    }
}

fn minus_identity(f: &IMat) -> IMat {
    let mut a = f.clone();
    for i in 0..f.rows {
        a.set(i, i, a.get(i, i) - 1);
    }
    a
}

/// Split a basis of `Y^f` into a part on which the roots are independent and
/// a central part.
fn split_central(datum: &RootDatum, basis: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    if basis.is_empty() {
        return (vec![], vec![]);
    }
    let s = datum.num_simple();
    if s == 0 {
        return (vec![], basis.to_vec());
    }
    let mut p = IMat::zeros(s, basis.len());
    for i in 0..s {
        for (j, k) in basis.iter().enumerate() {
            p.set(i, j, datum.pair(datum.simple_root(i), k));
        }
    }
    let sm = smith(&p);
    let new: Vec<Vec<i64>> = (0..basis.len())
        .map(|j| {
            let col = sm.v.col(j);
            (0..datum.rank).map(|r| basis.iter().zip(&col).map(|(k, c)| k[r] * c).sum()).collect()
        })
        .collect();
    let (a, b) = new.split_at(sm.rank);
    (a.to_vec(), b.to_vec())
}

/// Subtract the nearest integer combination of the basis vectors.
fn normalize(x: &[i64], noncentral: &[Vec<i64>], central: &[Vec<i64>]) -> Vec<i64> {
    let mut out = x.to_vec();
    for basis in [noncentral, central] {
        if basis.is_empty() {
            continue;
        }
        let gram: Vec<Vec<Q>> =
            basis.iter().map(|a| basis.iter().map(|b| q(a.iter().zip(b).map(|(x, y)| x * y).sum())).collect()).collect();
        let rhs: Vec<Q> = basis.iter().map(|a| dot_q(a, &out.iter().map(|&v| q(v)).collect::<Vec<_>>())).collect();
        let c = solve_q(&gram, &rhs).expect("basis is independent");
        for (cj, k) in c.iter().zip(basis) {
            let r = cj.round().to_integer() as i64;
            for (o, kk) in out.iter_mut().zip(k) {
                *o -= r * kk;
            }
        }
    }
    out
}

/// `{y : (f − 1) y ∈ ℤΦ_M^∨}`, as an integer basis.
fn levi_lattice(datum: &RootDatum, m: &RootDatum, f: &IMat) -> Vec<Vec<i64>> {
    let r = datum.rank;
    let s = m.num_simple();
    let mut a = IMat::zeros(r, r + s);
    for i in 0..r {
        for j in 0..r {
            a.set(i, j, f.get(i, j) - i64::from(i == j));
        }
        for k in 0..s {
            a.set(i, r + k, -m.coroot(m.simple_root(k))[i]);
        }
    }
    kernel_int(&a).into_iter().map(|g| g[..r].to_vec()).collect()
}

pub(crate) fn levi_data(datum: &RootDatum, b: &BasicElement, v: &[Q]) -> Result<LeviData, Error> {
    let (vbar, z) = datum.dominant_rep_q(v);
    let j: Vec<usize> = (0..datum.num_simple()).filter(|&i| datum.pair_q(datum.simple_root(i), &vbar).is_zero()).collect();
    let sig = datum.sigma_simple();
    if !j.iter().all(|i| j.contains(&sig[*i])) {
        return Err(Error::Invariant("the Levi of v̄ is not σ-stable".into()));
    }
    let m = datum.levi(&j)?;
    let ze = ExtAffine { t: vec![0; datum.rank], w: z.clone() };
    let sz = ExtAffine { t: vec![0; datum.rank], w: datum.sigma_weyl(&z) };
    let bm = ze.mul(&b.b).mul(&sz.inverse());
    let bm = BasicElement::new(&m, bm).map_err(|_| Error::Invariant("z b σ(z)^{-1} has positive length in M".into()))?;
    Ok(LeviData { z, vbar, j, datum: m, b: bm })
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut c = x;
    while p[c] != r {
        let n = p[c];
        p[c] = r;
        c = n;
    }
    r
}

fn union(p: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(p, a), find(p, b));
    if ra != rb {
        p[ra.max(rb)] = ra.min(rb);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn classify_gl2() {
        let g = datum("A1:gl");
        let b = BasicElement::parse(&g, "w1").unwrap();
        let ctx = Context::new(&g, &[1, 0], b).unwrap();
        let r = ctx.classify(&[0, 0]).unwrap();
        assert!(r.in_a);
        assert!(r.r_set.is_empty());
        assert_eq!(r.stratum_dim, Some(0));
        assert_eq!(r.is_top, Some(true));
        assert_eq!(r.flat, Some(vec![0, 1]));
        let r = ctx.classify(&[1, 0]).unwrap();
        assert_eq!(r.natural, vec![0, 1]);
        assert!(r.in_a);
        let r = ctx.classify(&[2, 0]).unwrap();
        assert!(!r.in_a && r.stratum_dim.is_none());
        assert!(ctx.is_top_by_criterion(&[0, 0]).unwrap());
    }

    #[test]
    fn rejects_non_minuscule() {
        let g = datum("A2:gl");
        let b = BasicElement::parse(&g, "2").unwrap();
        assert!(Context::new(&g, &[2, 0, 0], b).is_err());
    }

    #[test]
    fn generic_vectors() {
        let g = datum("A3:gl");
        let b = BasicElement::parse(&g, "w1").unwrap();
        let v = generic_vector(&g, &b);
        assert!(v.iter().all(|x| *x == v[0]) && !v[0].is_zero(), "{v:?}");
        let g3 = datum("A2:gl");
        let v = generic_vector(&g3, &BasicElement::identity(&g3));
        assert!(g3.roots().all(|a| !g3.pair_q(a, &v).is_zero()));
        let c2 = datum("C2");
        let b = BasicElement::parse(&c2, "w2").unwrap();
        let v = generic_vector(&c2, &b);
        let fixed = crate::affine::fixed_lattice(&b.f);
        assert!(c2.roots().all(|a| !c2.pair_q(a, &v).is_zero() || fixed.iter().all(|k| c2.pair(a, k) == 0)));
    }

    #[test]
    fn counts_small_cases() {
        let g = datum("A1:gl");
        let ctx = Context::new(&g, &[1, 0], BasicElement::parse(&g, "w1").unwrap()).unwrap();
        let cp = ctx.count_top_classes(Some(3)).unwrap();
        assert_eq!(cp.classes, 1);
        assert_eq!(cp.window_counts, vec![1, 1, 1]);
        let g3 = datum("A2:gl");
        let ctx = Context::new(&g3, &[1, 0, 0], BasicElement::parse(&g3, "w1").unwrap()).unwrap();
        assert_eq!(ctx.count_top_classes(None).unwrap().classes, 1);
        let p = datum("A2:gl:d=2");
        let ctx = Context::new(&p, &[1, 0, 0, 1, 0, 0], BasicElement::parse(&p, "id,w1^2").unwrap()).unwrap();
        let cp = ctx.count_top_classes(None).unwrap();
        assert_eq!(cp.classes, 2);
        assert!(cp.stabilized);
        assert_eq!(cp.window_counts[0], 2);
    }

    #[test]
    fn gl2_moves_are_omega_only() {
        let g = datum("A1:gl");
        let ctx = Context::new(&g, &[1, 0], BasicElement::parse(&g, "w1").unwrap()).unwrap();
        let moves = ctx.equivalence_moves(&[0, 0]).unwrap();
        assert!(moves.iter().any(|m| m.tag == MoveTag::Omega));
        assert!(moves.iter().all(|m| m.tag != MoveTag::OrbitLongest));
    }
}
