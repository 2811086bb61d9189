//! Extended affine Weyl group `Y ⋊ W₀`, affine roots, length, `Ω`, and the
//! twisted calculus `λ_γ`, `λ†`, `λ♮`, `ε_λ` attached to a basic element.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg::{add, dot, kernel_int, q, solve_q, sub, to_q, IMat, Q};
use crate::rootdata::{fmt_vec, Form, RootDatum, RootId, WeylElement};
use crate::Error;

/// `(α, k)`, the affine function `v ↦ −<α,v> + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub root: RootId,
    pub level: i64,
}

impl AffineRoot {
    pub fn value(&self, datum: &RootDatum, v: &[Q]) -> Q {
        q(self.level) - datum.pair_q(self.root, v)
    }

    pub fn is_positive(&self, datum: &RootDatum) -> bool {
        self.value(datum, datum.alcove_point()).is_positive()
    }

    /// The reflection `t^{kα^∨} s_α` in the zero set of this affine root.
    pub fn reflection(&self, datum: &RootDatum) -> ExtAffine {
        let t = datum.coroot(self.root).iter().map(|c| c * self.level).collect();
        ExtAffine { t, w: datum.reflection(self.root) }
    }
}

/// `α̃`: `(α, 0)` for negative `α`, `(α, 1)` for positive `α`.
pub fn tilde_root(datum: &RootDatum, a: RootId) -> AffineRoot {
    AffineRoot { root: a, level: i64::from(datum.is_positive(a)) }
}

/// `t^t · w`, acting by `v ↦ t + w(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtAffine {
    pub t: Vec<i64>,
    pub w: WeylElement,
}

impl ExtAffine {
    pub fn identity(rank: usize) -> Self {
        ExtAffine { t: vec![0; rank], w: WeylElement::identity(rank) }
    }

    pub fn translation(t: Vec<i64>) -> Self {
        let r = t.len();
        ExtAffine { t, w: WeylElement::identity(r) }
    }

    pub fn mul(&self, other: &ExtAffine) -> ExtAffine {
        ExtAffine { t: add(&self.t, &self.w.apply(&other.t)), w: self.w.mul(&other.w) }
    }

    pub fn inverse(&self) -> ExtAffine {
        let wi = self.w.inverse();
        ExtAffine { t: wi.apply(&self.t).iter().map(|x| -x).collect(), w: wi }
    }

    pub fn pow(&self, k: i64) -> ExtAffine {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(ExtAffine::identity(self.t.len()), |acc, _| acc.mul(&base))
    }

    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        add(&self.t, &self.w.apply(v))
    }

    pub fn act_q(&self, v: &[Q]) -> Vec<Q> {
        self.w.apply_q(v).iter().zip(&self.t).map(|(a, b)| a + q(*b)).collect()
    }

    /// `x·a = a ∘ x^{-1}`.
    pub fn act_root(&self, datum: &RootDatum, a: AffineRoot) -> AffineRoot {
        let r = datum.act_root(&self.w, a.root);
        AffineRoot { root: r, level: a.level + datum.pair(r, &self.t) }
    }

    pub fn is_identity(&self) -> bool {
        self.t.iter().all(|&x| x == 0) && self.w.is_identity()
    }

    /// Canonical text form `t^(c1,..,cn)*w` with `w` a reduced word.
    pub fn display<'a>(&'a self, datum: &'a RootDatum) -> impl fmt::Display + 'a {
        struct D<'a>(&'a ExtAffine, &'a RootDatum);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let word = self.1.reduced_word(&self.0.w);
                let w = if word.is_empty() {
                    "1".to_string()
                } else {
                    word.iter().map(|i| format!("s{}", i + 1)).collect::<String>()
                };
                write!(f, "t^{}*{}", fmt_vec(&self.0.t), w)
            }
        }
        D(self, datum)
    }
}

/// `ℓ(x) = Σ_{α>0} |⌊<α, x(p)>⌋|` for `p` inside the base alcove.
pub fn aff_length(datum: &RootDatum, x: &ExtAffine) -> usize {
    let xp = x.act_q(datum.alcove_point());
    datum.positive_roots().map(|a| datum.pair_q(a, &xp).floor().abs().to_integer() as usize).sum()
}

/// `|Φ̃⁻ ∩ x(Φ̃⁺)|`, counted literally over a level range that is large enough.
pub fn aff_length_literal(datum: &RootDatum, x: &ExtAffine) -> usize {
    let xi = x.inverse();
    let bound = datum.roots().map(|a| datum.pair(a, &x.t).abs()).max().unwrap_or(0) + 2;
    let mut count = 0;
    for a in datum.roots() {
        for k in -bound..=bound {
            let r = AffineRoot { root: a, level: k };
            if r.is_positive(datum) && !xi.act_root(datum, r).is_positive(datum) {
                count += 1;
            }
        }
    }
    count
}

/// Multiply on the left by reflections in walls separating `Δ` from `xΔ`
/// until the length is zero; returns the length-zero factor.
pub fn reduce_to_omega(datum: &RootDatum, x: &ExtAffine) -> ExtAffine {
    let mut cur = x.clone();
    loop {
        let xp = cur.act_q(datum.alcove_point());
        let hit = datum.positive_roots().find_map(|a| {
            let c = datum.pair_q(a, &xp);
            let k = if c >= q(1) {
                c.floor().to_integer()
            } else if c <= q(-1) {
                c.floor().to_integer() + 1
            } else if c.is_negative() {
                0
            } else {
                return None;
            };
            Some(AffineRoot { root: a, level: k as i64 })
        });
        match hit {
            Some(r) => cur = r.reflection(datum).mul(&cur),
            None => return cur,
        }
    }
}

/// For `GL_n`: `ω₁ = t^{e_1}·c` with `c(e_i) = e_{i+1}`, indices mod `n`.
pub fn gl_omega1(n: usize) -> ExtAffine {
    let mut m = IMat::zeros(n, n);
    for i in 0..n {
        m.set((i + 1) % n, i, 1);
    }
    let mut t = vec![0; n];
    t[0] = 1;
    ExtAffine { t, w: WeylElement { inv: m.transpose(), mat: m } }
}

/// Generators of `Ω`, one per cyclic factor of `π₁ = Y/ℤΦ^∨`.
pub fn omega_generators(datum: &RootDatum) -> Vec<ExtAffine> {
    if datum.form == Form::Gl && datum.copies == 1 {
        return vec![gl_omega1(datum.rank)];
    }
    let pi1 = datum.fundamental_group();
    let inv = pi1.invariants();
    (0..inv.len())
        .map(|k| {
            let coords: Vec<i64> = (0..inv.len()).map(|j| i64::from(j == k)).collect();
            reduce_to_omega(datum, &ExtAffine::translation(pi1.lift(&coords)))
        })
        .collect()
}

/// The length-zero element of `W̃_M` in the `π₁(M)` class of `t^y`.
pub fn omega_of_class(datum: &RootDatum, y: &[i64]) -> ExtAffine {
    reduce_to_omega(datum, &ExtAffine::translation(y.to_vec()))
}

/// Generators of `{ω ∈ Ω : f-class of ω equals its class}` for a lattice
/// automorphism `f` preserving `Φ`; with `f = p(b)σ` this is `Ω ∩ J_b`.
pub fn omega_fixed_generators(datum: &RootDatum, f: &IMat) -> Vec<ExtAffine> {
    let r = datum.rank;
    let s = datum.num_simple();
    // (f − 1) y − Σ c_i α_i^∨ = 0
    let mut a = IMat::zeros(r, r + s);
    for i in 0..r {
        for j in 0..r {
            a.set(i, j, f.get(i, j) - i64::from(i == j));
        }
        for k in 0..s {
            a.set(i, r + k, -datum.coroot(datum.simple_root(k))[i]);
        }
    }
    let mut out: Vec<ExtAffine> = Vec::new();
    for g in kernel_int(&a) {
        let w = omega_of_class(datum, &g[..r]);
        if !w.is_identity() && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// `λ_γ`: `<γ,λ>` for negative `γ`, `<γ,λ> − 1` for positive `γ`.
pub fn lambda_gamma(datum: &RootDatum, lambda: &[i64], g: RootId) -> i64 {
    datum.pair(g, lambda) - i64::from(datum.is_positive(g))
}

/// `ε_λ ∈ W₀` with `ε_λ(Φ⁺) = {γ : λ_γ ≥ 0}`.
pub fn epsilon_of(datum: &RootDatum, lambda: &[i64]) -> WeylElement {
    let delta = datum.regular_dominant();
    let n = datum.roots().map(|a| datum.pair(a, delta).abs()).max().unwrap_or(0) + 1;
    let x: Vec<i64> = lambda.iter().zip(delta).map(|(l, d)| n * l - d).collect();
    let (_, u) = datum.dominant_rep(&x);
    u.inverse()
}

/// `{γ : λ_γ ≥ 0} == ε_λ(Φ⁺)`.
pub fn epsilon_wellformed(datum: &RootDatum, lambda: &[i64]) -> bool {
    let e = epsilon_of(datum, lambda);
    datum.roots().all(|g| (lambda_gamma(datum, lambda, g) >= 0) == datum.is_positive(datum.act_root(&e.inverse(), g)))
}

/// A basic element `b ∈ Ω` with its twisted action `bσ`.
#[derive(Clone, Debug)]
pub struct BasicElement {
    pub b: ExtAffine,
    /// `p(b)σ` on `Y`.
    pub f: IMat,
    pub f_inv: IMat,
}

impl BasicElement {
    pub fn new(datum: &RootDatum, b: ExtAffine) -> Result<BasicElement, Error> {
        if aff_length(datum, &b) != 0 {
            return Err(Error::Precondition(format!("{} has nonzero length", b.display(datum))));
        }
        let f = b.w.mat.mul(&datum.sigma);
        let f_inv = datum.sigma_inv.mul(&b.w.inv);
        Ok(BasicElement { b, f, f_inv })
    }

    pub fn identity(datum: &RootDatum) -> BasicElement {
        BasicElement::new(datum, ExtAffine::identity(datum.rank)).expect("identity has length 0")
    }

    /// Parse a comma-separated list of per-factor words. A factor word is a
    /// `*`-product of `id`, `w<i>`, `w<i>^k` or an integer `k` (meaning
    /// `w1^k`). A single word on a product datum acts on the last factor.
    pub fn parse(datum: &RootDatum, text: &str) -> Result<BasicElement, Error> {
        let words: Vec<&str> = text.split(',').map(str::trim).collect();
        let d = datum.copies;
        let words: Vec<&str> = match words.len() {
            n if n == d => words,
            1 => {
                let mut v = vec!["id"; d];
                v[d - 1] = words[0];
                v
            }
            n => return Err(Error::Parse(format!("b `{text}`: {n} factors for a datum with {d} copies"))),
        };
        let mut b = ExtAffine::identity(datum.rank);
        for (copy, word) in words.iter().enumerate() {
            for tok in word.split('*').map(str::trim) {
                let y = parse_b_token(datum, copy, tok).map_err(|e| match e {
                    Error::Parse(m) => Error::Parse(format!("b `{text}`: {m}")),
                    other => other,
                })?;
                b = b.mul(&y);
            }
        }
        BasicElement::new(datum, b)
    }

    pub fn t(&self) -> &[i64] {
        &self.b.t
    }

    /// `bσ(λ)`.
    pub fn act(&self, lambda: &[i64]) -> Vec<i64> {
        add(&self.b.t, &self.f.apply(lambda))
    }

    pub fn act_q(&self, v: &[Q]) -> Vec<Q> {
        self.f.apply_q(v).iter().zip(&self.b.t).map(|(a, b)| a + q(*b)).collect()
    }

    /// `(λ†, λ♮)`.
    pub fn natural_dagger(&self, lambda: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let dag = self.act(lambda);
        let nat = sub(&dag, lambda);
        (dag, nat)
    }

    /// `α¹ = p(b)σ(α)`.
    pub fn next_root(&self, datum: &RootDatum, a: RootId) -> RootId {
        datum.root_index(&self.f_inv.left_apply(datum.root(a))).expect("p(b)σ preserves Φ")
    }

    /// `α⁻¹ = (p(b)σ)^{-1}(α)`.
    pub fn prev_root(&self, datum: &RootDatum, a: RootId) -> RootId {
        datum.root_index(&self.f.left_apply(datum.root(a))).expect("p(b)σ preserves Φ")
    }

    /// `bσ` on affine roots: `(α, k) ↦ (α¹, k + <α¹, t_b>)`.
    pub fn act_affine_root(&self, datum: &RootDatum, a: AffineRoot) -> AffineRoot {
        let r = self.next_root(datum, a.root);
        AffineRoot { root: r, level: a.level + datum.pair(r, &self.b.t) }
    }

    /// `σ(x) = σ x σ^{-1}`.
    pub fn sigma_of(&self, datum: &RootDatum, x: &ExtAffine) -> ExtAffine {
        ExtAffine { t: datum.sigma_y(&x.t), w: datum.sigma_weyl(&x.w) }
    }

    /// `bσ(x)b^{-1} = x`.
    pub fn fixed_by_twist(&self, datum: &RootDatum, x: &ExtAffine) -> bool {
        self.b.mul(&self.sigma_of(datum, x)).mul(&self.b.inverse()) == *x
    }

    pub fn root_orbit(&self, datum: &RootDatum, a: RootId) -> Vec<RootId> {
        let mut out = vec![a];
        let mut cur = self.next_root(datum, a);
        while cur != a {
            out.push(cur);
            cur = self.next_root(datum, cur);
        }
        out
    }

    pub fn orbit_data(&self, datum: &RootDatum, a: RootId) -> OrbitData {
        let root_orbit = self.root_orbit(datum, a);
        let mut affine_orbit = vec![tilde_root(datum, a)];
        let mut cur = self.act_affine_root(datum, affine_orbit[0]);
        while cur != affine_orbit[0] {
            assert!(
                affine_orbit.len() <= root_orbit.len(),
                "bσ-orbit of a tilde root is not the tilde of the root orbit"
            );
            affine_orbit.push(cur);
            cur = self.act_affine_root(datum, cur);
        }
        debug_assert!(affine_orbit.iter().zip(&root_orbit).all(|(x, &r)| *x == tilde_root(datum, r)));
        let rows: Vec<Vec<Q>> = affine_orbit.iter().map(|r| to_q(datum.root(r.root))).collect();
        let rhs: Vec<Q> = affine_orbit.iter().map(|r| q(r.level)).collect();
        let finite = solve_q(&rows, &rhs).is_some();
        if !finite {
            return OrbitData { seed: a, root_orbit, affine_orbit, finite, longest: None, case: OrbitCase::Infinite };
        }
        let orthogonal = root_orbit.iter().all(|&x| {
            root_orbit.iter().all(|&y| {
                x == y || (dot(datum.root(x), datum.coroot(y)) == 0 && datum.root_index(&add(datum.root(x), datum.root(y))).is_none())
            })
        });
        let product = |roots: &[RootId]| {
            roots.iter().fold(ExtAffine::identity(datum.rank), |acc, &r| acc.mul(&tilde_root(datum, r).reflection(datum)))
        };
        let (longest, case) = if orthogonal {
            (product(&root_orbit), OrbitCase::StronglyOrthogonal)
        } else {
            let half = root_orbit.len() / 2;
            let sum = add(datum.root(a), datum.root(root_orbit[half]));
            let s = datum
                .root_index(&sum)
                .filter(|_| root_orbit.len().is_multiple_of(2) && dot(datum.root(root_orbit[half]), datum.coroot(a)) == -1)
                .expect("finite orbit group of unexpected shape");
            (product(&self.root_orbit(datum, s)), OrbitCase::AlphaPlusAlphaD)
        };
        OrbitData { seed: a, root_orbit, affine_orbit, finite, longest: Some(longest), case }
    }

    /// Longest element of `W_{𝒪_α̃}` by enumerating the finite group.
    pub fn orbit_longest_by_enumeration(&self, datum: &RootDatum, od: &OrbitData) -> Option<ExtAffine> {
        if !od.finite {
            return None;
        }
        let gens: Vec<ExtAffine> = od.affine_orbit.iter().map(|r| r.reflection(datum)).collect();
        let e = ExtAffine::identity(datum.rank);
        let mut seen: HashSet<ExtAffine> = HashSet::from([e.clone()]);
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.mul(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().max_by_key(|x| aff_length(datum, x))
    }
}

fn parse_b_token(datum: &RootDatum, copy: usize, tok: &str) -> Result<ExtAffine, Error> {
    let r = datum.factor_rank;
    let n = datum.num_simple() / datum.copies;
    let embed = |v: &[i64]| {
        let mut out = vec![0; datum.rank];
        out[copy * r..(copy + 1) * r].copy_from_slice(v);
        out
    };
    let gl1 = |k: i64| -> Result<ExtAffine, Error> {
        if datum.form != Form::Gl {
            return Err(Error::Parse(format!("integer exponent `{tok}` needs a gl datum")));
        }
        let w = gl_omega1(r);
        let mut m = IMat::identity(datum.rank);
        let mut t = vec![0; datum.rank];
        let wk = w.pow(k);
        for i in 0..r {
            for j in 0..r {
                m.set(copy * r + i, copy * r + j, wk.w.mat.get(i, j));
            }
            t[copy * r + i] = wk.t[i];
        }
        Ok(ExtAffine { t, w: WeylElement { inv: m.inverse_unimodular(), mat: m } })
    };
    if tok == "id" {
        return Ok(ExtAffine::identity(datum.rank));
    }
    if let Ok(k) = tok.parse::<i64>() {
        return gl1(k);
    }
    let Some(rest) = tok.strip_prefix('w') else {
        return Err(Error::Parse(format!("unknown factor `{tok}`")));
    };
    let (i, k) = match rest.split_once('^') {
        Some((i, k)) => (i, k.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
        None => (rest, 1),
    };
    let i: usize = i.parse().map_err(|_| Error::Parse(format!("bad index in `{tok}`")))?;
    if i == 0 || i > n {
        return Err(Error::Parse(format!("index {i} out of range 1..={n}")));
    }
    match datum.form {
        Form::Gl if i == 1 => gl1(k),
        Form::Gl => {
            let v: Vec<i64> = (0..r).map(|j| if j < i { k } else { 0 }).collect();
            Ok(omega_of_class(datum, &embed(&v)))
        }
        Form::Adjoint => {
            let v: Vec<i64> = (0..r).map(|j| if j == i - 1 { k } else { 0 }).collect();
            Ok(omega_of_class(datum, &embed(&v)))
        }
        Form::SimplyConnected => Err(Error::Precondition("Ω is trivial for a simply connected datum".into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum OrbitCase {
    StronglyOrthogonal,
    AlphaPlusAlphaD,
    Infinite,
}

#[derive(Clone, Debug)]
pub struct OrbitData {
    pub seed: RootId,
    pub root_orbit: Vec<RootId>,
    pub affine_orbit: Vec<AffineRoot>,
    pub finite: bool,
    pub longest: Option<ExtAffine>,
    pub case: OrbitCase,
}

/// Order of an integer, as used by the GL bookkeeping.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// `Y^f`, the kernel of `f − 1`, as an integer basis.
pub fn fixed_lattice(f: &IMat) -> Vec<Vec<i64>> {
    let n = f.rows;
    let mut a = f.clone();
    for i in 0..n {
        a.set(i, i, a.get(i, i) - 1);
    }
    kernel_int(&a)
}

pub fn is_zero_q(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn tilde_roots_gl2() {
        let g = datum("A1:gl");
        let a = g.simple_root(0);
        assert_eq!(tilde_root(&g, g.neg(a)), AffineRoot { root: g.neg(a), level: 0 });
        assert_eq!(tilde_root(&g, a), AffineRoot { root: a, level: 1 });
    }

    #[test]
    fn tilde_of_pi_is_simple_affine() {
        for s in ["A2:gl", "B2", "C3", "D4", "A3:adjoint"] {
            let g = datum(s);
            for a in g.pi_set() {
                let r = tilde_root(&g, a).reflection(&g);
                assert_eq!(aff_length(&g, &r), 1, "{s}");
            }
        }
    }

    #[test]
    fn lengths() {
        let g = datum("A1:gl");
        assert_eq!(aff_length(&g, &ExtAffine::identity(2)), 0);
        let t = ExtAffine::translation(vec![1, 0]);
        assert_eq!(aff_length(&g, &t), 1);
        assert_eq!(aff_length_literal(&g, &t), 1);
        assert_eq!(aff_length(&g, &gl_omega1(2)), 0);
        let g3 = datum("A2:gl");
        let t = ExtAffine::translation(vec![2, 0, -1]);
        assert_eq!(aff_length(&g3, &t), aff_length_literal(&g3, &t));
    }

    #[test]
    fn omega_gl2_squares_to_center() {
        let w = gl_omega1(2);
        assert_eq!(w.mul(&w), ExtAffine::translation(vec![1, 1]));
        let g = datum("A1:gl");
        assert_eq!(omega_of_class(&g, &[1, 0]), w);
        let g4 = datum("A3:gl");
        assert_eq!(omega_of_class(&g4, &[1, 1, 0, 0]), gl_omega1(4).pow(2));
    }

    #[test]
    fn omega_generators_examples() {
        assert!(omega_generators(&datum("A2:sc")).is_empty());
        let g = datum("A2:adjoint");
        let gens = omega_generators(&g);
        assert_eq!(gens.len(), 1);
        let w = &gens[0];
        assert!(!w.is_identity() && !w.pow(2).is_identity() && w.pow(3).is_identity());
    }

    #[test]
    fn lambda_gamma_examples() {
        let g = datum("A1:gl");
        let a = g.simple_root(0);
        assert_eq!(lambda_gamma(&g, &[0, 0], a), -1);
        assert_eq!(lambda_gamma(&g, &[0, 0], g.neg(a)), 0);
    }

    #[test]
    fn epsilon_examples() {
        let g = datum("A2:gl");
        let e = epsilon_of(&g, &[0, 0, 0]);
        assert_eq!(g.length(&e), 3);
        let e = epsilon_of(&g, &[1, 0, 0]);
        assert_eq!(crate::rootdata::permutation_of(&e), vec![0, 2, 1]);
        assert!(epsilon_wellformed(&g, &[1, 0, 0]));
    }

    #[test]
    fn natural_dagger_gl2() {
        let g = datum("A1:gl");
        let b = BasicElement::parse(&g, "w1").unwrap();
        assert_eq!(b.natural_dagger(&[0, 0]), (vec![1, 0], vec![1, 0]));
        assert_eq!(b.natural_dagger(&[1, 0]), (vec![1, 1], vec![0, 1]));
    }

    #[test]
    fn orbit_examples() {
        let g = datum("A1:gl");
        let one = BasicElement::identity(&g);
        let a = g.neg(g.simple_root(0));
        let od = one.orbit_data(&g, a);
        assert!(od.finite && od.case == OrbitCase::StronglyOrthogonal);
        assert_eq!(od.longest.unwrap(), tilde_root(&g, a).reflection(&g));

        let ad = datum("A1:adjoint");
        let w = BasicElement::parse(&ad, "w1").unwrap();
        let od = w.orbit_data(&ad, ad.neg(ad.simple_root(0)));
        assert_eq!(od.root_orbit.len(), 2);
        assert!(!od.finite);

        let g4 = datum("A3:gl");
        let b = BasicElement::parse(&g4, "2").unwrap();
        let a1 = g4.neg(g4.simple_root(0));
        let a3 = g4.neg(g4.simple_root(2));
        let od = b.orbit_data(&g4, a1);
        assert_eq!(od.root_orbit, vec![a1, a3]);
        assert!(od.finite);
        let expect = tilde_root(&g4, a1).reflection(&g4).mul(&tilde_root(&g4, a3).reflection(&g4));
        let longest = od.longest.clone().unwrap();
        assert_eq!(longest, expect);
        assert_eq!(b.orbit_longest_by_enumeration(&g4, &od).unwrap(), longest);
        assert!(b.fixed_by_twist(&g4, &longest));
    }

    #[test]
    fn twist_fixed_examples() {
        let g = datum("A1:gl");
        let b = BasicElement::parse(&g, "w1").unwrap();
        assert!(b.fixed_by_twist(&g, &b.b));
        assert!(b.fixed_by_twist(&g, &ExtAffine::translation(vec![1, 1])));
        assert!(!b.fixed_by_twist(&g, &ExtAffine::translation(vec![1, 0])));
    }

    #[test]
    fn product_b_parse() {
        let g = datum("A2:gl:d=2");
        let b = BasicElement::parse(&g, "id,w1^2").unwrap();
        assert_eq!(&b.t()[..3], &[0, 0, 0]);
        assert_eq!(b.t()[3..].iter().sum::<i64>(), 2);
        assert!(BasicElement::parse(&g, "id,id,id").is_err());
        assert!(BasicElement::parse(&g, "x").is_err());
    }

    #[test]
    fn display_form() {
        let g = datum("A1:gl");
        assert_eq!(gl_omega1(2).display(&g).to_string(), "t^(1,0)*s1");
    }
}
