use std::collections::BTreeMap;
use std::sync::OnceLock;

use adlvkit::adlv::Context;
use adlvkit::affine::{aff_length, epsilon_wellformed, tilde_root, AffineRoot, BasicElement, ExtAffine};
use adlvkit::appendixb::minimal_levi_j;
use adlvkit::crystal::{crystal_generate, restrict_levi, tensor_decompose, DEFAULT_CAP};
use adlvkit::isocrystal::{kottwitz, kottwitz_quotient, newton, sigma_average_raw, ul_best};
use adlvkit::linalg::{q, Q};
use adlvkit::rootdata::{RootDatum, WeylElement};
use adlvkit::suite::{build, minuscule_coweights, omega_words};
use proptest::prelude::*;

const LABELS: &[&str] = &[
    "A1:gl", "A2:gl", "A3:gl", "A2", "A2:sc", "A2:sigma=2", "A3", "A3:sigma=2", "B2", "B3", "C2", "C3", "D4",
    "D4:sigma=3", "A2:gl:d=2", "E6",
];

fn data() -> &'static Vec<RootDatum> {
    static D: OnceLock<Vec<RootDatum>> = OnceLock::new();
    D.get_or_init(|| LABELS.iter().filter_map(|l| build(l).ok().map(|x| x.1)).collect())
}

fn weyl_from(d: &RootDatum, word: &[usize]) -> WeylElement {
    let s = d.num_simple();
    d.from_word(&word.iter().map(|i| i % s).collect::<Vec<_>>())
}

fn ext_from(d: &RootDatum, t: &[i64], word: &[usize]) -> ExtAffine {
    ExtAffine { t: t[..d.rank].to_vec(), w: weyl_from(d, word) }
}

fn sigma(d: &RootDatum, x: &ExtAffine) -> ExtAffine {
    BasicElement::identity(d).sigma_of(d, x)
}

fn coweight() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 8)
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reflection_is_an_involution(k in 0usize..64, lam in coweight(), a in 0usize..1000) {
        let d = &data()[k % data().len()];
        let a = a % d.num_roots();
        let l = &lam[..d.rank];
        prop_assert_eq!(d.reflect(a, &d.reflect(a, l)), l.to_vec());
    }

    #[test]
    fn pairing_is_weyl_invariant(k in 0usize..64, lam in coweight(), a in 0usize..1000, w in word()) {
        let d = &data()[k % data().len()];
        let a = a % d.num_roots();
        let w = weyl_from(d, &w);
        let l = &lam[..d.rank];
        prop_assert_eq!(d.pair(d.act_root(&w, a), &w.apply(l)), d.pair(a, l));
    }

    #[test]
    fn sigma_commutes_with_dominant_rep(k in 0usize..64, lam in coweight()) {
        let d = &data()[k % data().len()];
        let l = &lam[..d.rank];
        prop_assert_eq!(d.dominant_rep(&d.sigma_y(l)).0, d.sigma_y(&d.dominant_rep(l).0));
    }

    #[test]
    fn length_is_subadditive(k in 0usize..64, t1 in coweight(), w1 in word(), t2 in coweight(), w2 in word()) {
        let d = &data()[k % data().len()];
        let x = ext_from(d, &t1, &w1);
        let y = ext_from(d, &t2, &w2);
        prop_assert!(aff_length(d, &x.mul(&y)) <= aff_length(d, &x) + aff_length(d, &y));
    }

    #[test]
    fn finite_length_adds_along_reduced_words(k in 0usize..64, w in word()) {
        let d = &data()[k % data().len()];
        let x = weyl_from(d, &w);
        let red = d.reduced_word(&x);
        let (a, b) = red.split_at(red.len() / 2);
        let xa = ExtAffine { t: vec![0; d.rank], w: d.from_word(a) };
        let xb = ExtAffine { t: vec![0; d.rank], w: d.from_word(b) };
        prop_assert_eq!(aff_length(d, &xa.mul(&xb)), aff_length(d, &xa) + aff_length(d, &xb));
        prop_assert_eq!(d.length(&x), red.len());
    }

    #[test]
    fn newton_and_kottwitz_are_sigma_conjugation_invariant(
        k in 0usize..64, t1 in coweight(), w1 in word(), t2 in coweight(), w2 in word()
    ) {
        let d = &data()[k % data().len()];
        let x = ext_from(d, &t1, &w1);
        let y = ext_from(d, &t2, &w2);
        let z = y.inverse().mul(&x).mul(&sigma(d, &y));
        prop_assert_eq!(newton(d, &z), newton(d, &x));
        prop_assert_eq!(kottwitz(d, &z), kottwitz(d, &x));
    }

    #[test]
    fn kottwitz_is_additive(k in 0usize..64, t1 in coweight(), w1 in word(), t2 in coweight(), w2 in word()) {
        let d = &data()[k % data().len()];
        let x = ext_from(d, &t1, &w1);
        let y = ext_from(d, &t2, &w2);
        let sum: Vec<i64> = x.t.iter().zip(&y.t).map(|(a, b)| a + b).collect();
        prop_assert!(kottwitz_quotient(d).same(&x.mul(&y).t, &sum));
    }

    #[test]
    fn characters_are_weyl_invariant(k in 0usize..6, c in prop::collection::vec(0i64..=2, 4), w in word()) {
        let labels = ["A2", "A3", "B2", "C2", "B3", "A2:gl"];
        let (_, d) = build(labels[k]).unwrap();
        let mu: Vec<i64> = (0..d.rank).map(|i| if d.is_dominant(&c[..d.rank]) { c[i] } else { 0 }).collect();
        let ch = crystal_generate(&d, &mu, DEFAULT_CAP).unwrap().character();
        let w = weyl_from(&d, &w);
        for (wt, m) in &ch {
            prop_assert_eq!(ch.get(&w.apply(wt)), Some(m));
        }
    }
}

fn dim(d: &RootDatum, mu: &[i64]) -> usize {
    crystal_generate(d, mu, DEFAULT_CAP).unwrap().len()
}

#[test]
fn dominant_rep_is_the_unique_dominant_orbit_element() {
    for l in ["A2", "B2", "A2:gl"] {
        let (_, d) = build(l).unwrap();
        let mut lam = vec![-3i64; d.rank];
        loop {
            let orbit = d.weyl_orbit(&lam);
            let dom: Vec<_> = orbit.iter().filter(|x| d.is_dominant(x)).collect();
            assert_eq!(dom.len(), 1, "{l} {lam:?}");
            assert_eq!(*dom[0], d.dominant_rep(&lam).0);
            if !adlvkit::isocrystal::odometer(&mut lam, 3) {
                break;
            }
        }
    }
}

#[test]
fn tilde_roots_are_the_affine_roots_between_zero_and_one() {
    for l in ["A1", "A2", "A3", "B2", "B3", "C2", "C3"] {
        let (_, d) = build(l).unwrap();
        let theta = d.highest_roots()[0];
        let mut vertices = vec![vec![q(0); d.rank]];
        for i in 0..d.rank {
            let mut v = vec![q(0); d.rank];
            v[i] = Q::new(1, d.coeffs(theta)[i] as i128);
            vertices.push(v);
        }
        let mut found = Vec::new();
        for a in d.roots() {
            for level in -3..=3 {
                let ar = AffineRoot { root: a, level };
                if vertices.iter().all(|v| {
                    let x = ar.value(&d, v);
                    x >= q(0) && x <= q(1)
                }) {
                    found.push(ar);
                }
            }
        }
        let mut expect: Vec<AffineRoot> = d.roots().map(|a| tilde_root(&d, a)).collect();
        found.sort();
        expect.sort();
        assert_eq!(found, expect, "{l}");
    }
}

#[test]
fn epsilon_is_wellformed_on_windows() {
    for d in data() {
        let r = 4 * d.rank as i64;
        let r = r.min(6);
        let mut lam = vec![-r; d.rank];
        let mut n = 0;
        loop {
            assert!(epsilon_wellformed(d, &lam), "{} {lam:?}", d.label);
            n += 1;
            if n > 20_000 || !adlvkit::isocrystal::odometer(&mut lam, r) {
                break;
            }
        }
    }
}

#[test]
fn orbit_longest_elements_are_twist_fixed() {
    for l in ["A1:gl", "A2:gl", "A3:gl", "A2", "A3", "A3:sigma=2", "C2", "C3", "D4"] {
        let (_, d) = build(l).unwrap();
        for (w, b) in omega_words(&d) {
            for a in d.roots() {
                let od = b.orbit_data(&d, a);
                if let Some(x) = &od.longest {
                    assert!(b.fixed_by_twist(&d, x), "{l} b={w} seed={a}");
                }
            }
        }
    }
}

#[test]
fn best_approximation_is_bounded_and_kottwitz_matched() {
    for l in ["A1:gl", "A2:gl", "A3:gl", "A2", "A2:sigma=2", "A3", "C2", "C3", "D4", "A2:gl:d=2"] {
        let (_, d) = build(l).unwrap();
        for (w, b) in omega_words(&d) {
            let ul = ul_best(&d, &b).unwrap();
            assert!(kottwitz_quotient(&d).same(&ul.rep, b.t()), "{l} {w}");
            let avg = sigma_average_raw(&d, &ul.rep);
            assert!(d.leq_dominance(&avg, &newton(&d, &b.b)), "{l} {w}");
        }
    }
}

#[test]
fn tensor_dimensions_multiply() {
    for (l, mus) in [
        ("A2", vec![vec![1, 0], vec![0, 1]]),
        ("A2", vec![vec![1, 0], vec![1, 0], vec![1, 0]]),
        ("B2", vec![vec![1, 0], vec![0, 1]]),
        ("C2", vec![vec![0, 1], vec![0, 1]]),
        ("A2:gl", vec![vec![1, 0, 0], vec![1, 1, 0]]),
    ] {
        let (_, d) = build(l).unwrap();
        let dec = tensor_decompose(&d, &mus, DEFAULT_CAP).unwrap();
        let lhs: usize = dec.iter().map(|(eta, m)| m * dim(&d, eta)).sum();
        let rhs: usize = mus.iter().map(|m| dim(&d, m)).product();
        assert_eq!(lhs, rhs, "{l} {mus:?}");
    }
}

#[test]
fn restriction_dimensions_add_up() {
    for (l, mu, j) in [("A3", vec![1, 1, 0], vec![0, 1]), ("C3", vec![0, 1, 0], vec![1, 2]), ("D4", vec![0, 1, 0, 0], vec![0, 2, 3])] {
        let (_, d) = build(l).unwrap();
        let levi = d.levi(&j).unwrap();
        let table = restrict_levi(&d, &mu, &j, DEFAULT_CAP).unwrap();
        let total: usize = table.iter().map(|(eta, m)| m * dim(&levi, eta)).sum();
        assert_eq!(total, dim(&d, &mu), "{l} {mu:?}");
    }
}

#[test]
fn minuscule_crystals_are_weyl_orbits() {
    for l in ["A3", "C3", "D4", "E6", "A3:gl", "A2:gl:d=2"] {
        let (_, d) = build(l).unwrap();
        for mu in minuscule_coweights(&d) {
            let c = crystal_generate(&d, &mu, DEFAULT_CAP).unwrap();
            let ch: BTreeMap<Vec<i64>, usize> = c.character();
            let mut orbit = d.weyl_orbit(&mu);
            orbit.sort();
            assert_eq!(ch.keys().cloned().collect::<Vec<_>>(), orbit, "{l} {mu:?}");
            assert!(ch.values().all(|&m| m == 1));
        }
    }
}

#[test]
fn criteria_agree_on_window_points() {
    for l in ["A2:gl", "A3:sigma=2", "C2", "D4"] {
        let (_, d) = build(l).unwrap();
        for (w, b) in omega_words(&d) {
            for mu in minuscule_coweights(&d) {
                let Ok(ctx) = Context::new(&d, &mu, b.clone()) else { continue };
                if !kottwitz_quotient(&d).same(&mu, b.t()) || mu.iter().all(|&x| x == 0) {
                    continue;
                }
                for lam in ctx.window_points(6) {
                    let by_r = Some(ctx.r_set(&lam).len() as i64) == ctx.dim;
                    assert_eq!(ctx.is_top_by_criterion(&lam).unwrap(), by_r, "{l} {w} {mu:?} {lam:?}");
                }
            }
        }
    }
}

#[test]
fn superbasic_b_has_full_levi() {
    for (l, w) in [("A2", "w1"), ("A3", "w1"), ("A4", "w2"), ("A2:gl", "1"), ("A3:gl", "3")] {
        let (_, d) = build(l).unwrap();
        let b = BasicElement::parse(&d, w).unwrap();
        let j = minimal_levi_j(&d, &b).j;
        assert_eq!(j, (0..d.num_simple()).collect::<Vec<_>>(), "{l} {w}");
    }
}
