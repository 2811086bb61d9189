//! The minimal σ-stable Levi `M_J` meeting the class of a basic `b`, and a
//! certification that any `z = σ(z) ∈ W^J` with `zJz^{-1} ⊆ S` fixes `J`.

use std::collections::HashMap;
use std::time::Instant;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::adlv::{generic_vector, levi_data};
use crate::affine::{omega_generators, BasicElement, ExtAffine};
use crate::isocrystal::kottwitz_of;
use crate::linalg::Q;
use crate::rootdata::{DatumSpec, Letter, RootDatum, SigmaSpec, WeylElement};
use crate::Error;

#[derive(Clone, Debug)]
pub struct LeviWitness {
    /// 0-based simple indices.
    pub j: Vec<usize>,
    pub v: Vec<Q>,
    pub vbar: Vec<Q>,
    pub z: WeylElement,
}

/// `J = {i : s_i(v̄) = v̄}` for a generic `v` fixed by `p(b)σ`.
pub fn minimal_levi_j(datum: &RootDatum, b: &BasicElement) -> LeviWitness {
    let v = generic_vector(datum, b);
    let (vbar, z) = datum.dominant_rep_q(&v);
    let j = (0..datum.num_simple()).filter(|&i| datum.pair_q(datum.simple_root(i), &vbar).is_zero()).collect();
    LeviWitness { j, v, vbar, z }
}

/// `b` is superbasic in `M_J`: the same construction inside `M_J` returns all of `J`.
pub fn superbasic_in_levi(datum: &RootDatum, b: &BasicElement) -> Result<bool, Error> {
    let w = minimal_levi_j(datum, b);
    let lv = levi_data(datum, b, &w.v)?;
    if lv.j != w.j {
        return Err(Error::Invariant("two computations of J disagree".into()));
    }
    let inner = minimal_levi_j(&lv.datum, &lv.b);
    Ok(inner.j.len() == lv.datum.num_simple())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    Pruned,
    Exhaustive,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub mode: Mode,
    /// σ-fixed `z ∈ W^J` with `z(α_j)` simple for all `j ∈ J`.
    pub candidates: usize,
    /// Elements visited by the search.
    pub visited: u64,
    pub all_fixed: bool,
    /// Images `zJz^{-1} ≠ J` (1-based), if any.
    pub counterexamples: Vec<Vec<usize>>,
}

/// Permutation tables of simple reflections and σ on root ids.
struct Tables {
    simple_refl: Vec<Vec<u16>>,
    sigma: Vec<u16>,
    simple_of: Vec<Option<usize>>,
    sigma_simple: Vec<usize>,
}

impl Tables {
    fn new(datum: &RootDatum) -> Tables {
        let s = datum.num_simple();
        let simple_refl = (0..s)
            .map(|i| {
                let w = datum.simple_reflection(i);
                datum.roots().map(|a| datum.act_root(&w, a) as u16).collect()
            })
            .collect();
        let mut simple_of = vec![None; datum.num_roots()];
        for i in 0..s {
            simple_of[datum.simple_root(i)] = Some(i);
        }
        Tables {
            simple_refl,
            sigma: datum.roots().map(|a| datum.sigma_root(a) as u16).collect(),
            simple_of,
            sigma_simple: datum.sigma_simple().to_vec(),
        }
    }

    /// `z` given by the images of the simple roots commutes with σ.
    fn sigma_fixed(&self, imgs: &[u16]) -> bool {
        (0..imgs.len()).all(|i| imgs[self.sigma_simple[i]] == self.sigma[imgs[i] as usize])
    }

    /// `zJz^{-1}` as sorted simple indices, or `None` if some image is not simple.
    fn image_of_j(&self, imgs: &[u16], j: &[usize]) -> Option<Vec<usize>> {
        let mut out: Vec<usize> = j.iter().map(|&k| self.simple_of[imgs[k] as usize]).collect::<Option<_>>()?;
        out.sort_unstable();
        Some(out)
    }
}

#[derive(Default)]
struct Tally {
    candidates: usize,
    visited: u64,
    bad: Vec<Vec<usize>>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.candidates += other.candidates;
        self.visited += other.visited;
        self.bad.extend(other.bad);
        self
    }
}

pub fn verify_uniqueness(datum: &RootDatum, j: &[usize], mode: Mode) -> UniquenessReport {
    let tables = Tables::new(datum);
    let tally = match mode {
        _ if j.is_empty() => Tally { candidates: 1, visited: 0, bad: vec![] },
        Mode::Exhaustive => exhaustive(datum, &tables, j),
        Mode::Pruned => pruned(datum, &tables, j),
    };
    let mut bad = tally.bad;
    bad.sort();
    bad.dedup();
    UniquenessReport {
        mode,
        candidates: tally.candidates,
        visited: tally.visited,
        all_fixed: bad.is_empty(),
        counterexamples: bad.into_iter().map(|v| v.into_iter().map(|x| x + 1).collect()).collect(),
    }
}

fn check_node(tables: &Tables, imgs: &[u16], j: &[usize], t: &mut Tally) {
    t.visited += 1;
    if let Some(img) = tables.image_of_j(imgs, j) {
        if tables.sigma_fixed(imgs) {
            t.candidates += 1;
            if img != j {
                t.bad.push(img);
            }
        }
    }
}

/// Every element of `W`, split into subtrees of the depth-first traversal.
fn exhaustive(datum: &RootDatum, tables: &Tables, j: &[usize]) -> Tally {
    let s = datum.num_simple();
    let children = |x: &[i64], imgs: &[u16]| -> Vec<(Vec<i64>, Vec<u16>)> {
        (0..s)
            .filter_map(|i| {
                datum.weyl_child(x, i).map(|y| (y, imgs.iter().map(|&a| tables.simple_refl[i][a as usize]).collect()))
            })
            .collect()
    };
    let root = (datum.regular_dominant().to_vec(), (0..s).map(|i| datum.simple_root(i) as u16).collect::<Vec<_>>());
    let mut head = Tally::default();
    let mut frontier = vec![root];
    while !frontier.is_empty() && frontier.len() < 512 {
        let mut next = Vec::new();
        for (x, imgs) in &frontier {
            check_node(tables, imgs, j, &mut head);
            next.extend(children(x, imgs));
        }
        frontier = next;
    }
    frontier
        .into_par_iter()
        .map(|start| {
            let mut t = Tally::default();
            let mut stack = vec![start];
            while let Some((x, imgs)) = stack.pop() {
                check_node(tables, &imgs, j, &mut t);
                stack.extend(children(&x, &imgs));
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
        .merge(head)
}

/// Orbit of the tuple `(α_j)` to find every simple image, then the
/// σ-fixed elements of each coset of the pointwise stabilizer.
fn pruned(datum: &RootDatum, tables: &Tables, j: &[usize]) -> Tally {
    let start: Vec<u16> = j.iter().map(|&k| datum.simple_root(k) as u16).collect();
    let mut seen: HashMap<Vec<u16>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut nodes: Vec<(Vec<u16>, usize, usize)> = vec![(start, usize::MAX, 0)];
    let mut k = 0;
    while k < nodes.len() {
        for (g, refl) in tables.simple_refl.iter().enumerate() {
            let t: Vec<u16> = nodes[k].0.iter().map(|&a| refl[a as usize]).collect();
            if !seen.contains_key(&t) {
                seen.insert(t.clone(), nodes.len());
                nodes.push((t, k, g));
            }
        }
        k += 1;
    }
    let nroots = datum.num_roots();
    let stab = pointwise_stabilizer(datum, j);
    let mut tally = Tally { visited: nodes.len() as u64, ..Tally::default() };
    for (idx, (tuple, _, _)) in nodes.iter().enumerate() {
        if !tuple.iter().all(|&a| tables.simple_of[a as usize].is_some()) {
            continue;
        }
        let mut path = Vec::new();
        let mut c = idx;
        while nodes[c].1 != usize::MAX {
            path.push(nodes[c].2);
            c = nodes[c].1;
        }
        let mut z0: Vec<u16> = (0..nroots as u16).collect();
        for &g in path.iter().rev() {
            z0 = z0.iter().map(|&a| tables.simple_refl[g][a as usize]).collect();
        }
        for s in &stab {
            let imgs: Vec<u16> = (0..datum.num_simple()).map(|i| z0[s[datum.simple_root(i)] as usize]).collect();
            check_node(tables, &imgs, j, &mut tally);
        }
    }
    tally
}

/// Root permutations of the group generated by reflections fixing every `α_j`.
fn pointwise_stabilizer(datum: &RootDatum, j: &[usize]) -> Vec<Vec<u16>> {
    let gens: Vec<Vec<u16>> = datum
        .positive_roots()
        .filter(|&bta| j.iter().all(|&k| datum.pair(bta, datum.coroot(datum.simple_root(k))) == 0))
        .map(|bta| {
            let w = datum.reflection(bta);
            datum.roots().map(|a| datum.act_root(&w, a) as u16).collect()
        })
        .collect();
    let id: Vec<u16> = (0..datum.num_roots() as u16).collect();
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for g in &gens {
            let p: Vec<u16> = out[k].iter().map(|&a| g[a as usize]).collect();
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        k += 1;
    }
    out
}

/// All of `Ω`, as the closure of its generators.
pub fn omega_elements(datum: &RootDatum) -> Vec<ExtAffine> {
    let gens = omega_generators(datum);
    let mut out = vec![ExtAffine::identity(datum.rank)];
    let mut k = 0;
    while k < out.len() {
        for g in &gens {
            let x = out[k].mul(g);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        k += 1;
    }
    out
}

/// Closed-form `J` (1-based) for adjoint simple types, keyed by the class
/// of `b` in `π₁(G)_σ`. `None` when no closed form is tabulated.
pub fn closed_form_j(spec: &DatumSpec, datum: &RootDatum, b: &BasicElement) -> Option<Vec<usize>> {
    let n = spec.rank;
    let order = match &spec.sigma {
        SigmaSpec::Order(o) => *o,
        SigmaSpec::Perm(_) => return None,
    };
    if spec.copies != 1 {
        return None;
    }
    let class = kottwitz_of(datum, b.t());
    let e = |k: usize| -> Vec<i64> { (0..n).map(|i| i64::from(i + 1 == k)).collect() };
    let is = |y: Vec<i64>| kottwitz_of(datum, &y) == class;
    if is(vec![0; n]) {
        return Some(vec![]);
    }
    let odd_upto = |top: usize| (1..=top).step_by(2).collect::<Vec<_>>();
    match (spec.letter, order) {
        (Letter::A, 1) => {
            let size = n + 1;
            let m = (1..size).find(|&m| is(e(1).iter().map(|x| x * m as i64).collect()))?;
            let h = m.gcd(&size);
            let f = size / h;
            Some((0..h).flat_map(|jj| (1..f).map(move |i| i + jj * f)).collect())
        }
        (Letter::A, 2) => Some(vec![n.div_ceil(2)]),
        (Letter::B, 1) => Some(vec![n]),
        (Letter::C, 1) => Some(odd_upto(2 * ((n - 1) / 2) + 1)),
        (Letter::D, 1) => {
            if is(e(1)) {
                return Some(vec![n - 1, n]);
            }
            let mut j = if n % 2 == 1 {
                let mut j = odd_upto(n - 2);
                j.extend([n - 1, n]);
                j
            } else {
                let mut j = odd_upto(n - 3);
                j.push(if (n / 2).is_multiple_of(2) { n - 1 } else { n });
                j
            };
            if !is(e(n)) && n.is_multiple_of(2) {
                // the class of ϖ_{n−1}: apply the diagram flip
                for x in j.iter_mut() {
                    if *x == n - 1 {
                        *x = n;
                    } else if *x == n {
                        *x = n - 1;
                    }
                }
            }
            j.sort_unstable();
            Some(j)
        }
        (Letter::D, 2) => Some(if n.is_multiple_of(2) {
            let mut j = odd_upto(n - 3);
            j.extend([n - 1, n]);
            j
        } else {
            odd_upto(n - 2)
        }),
        (Letter::E, 1) if n == 6 => Some(vec![1, 3, 5, 6]),
        (Letter::E, 1) if n == 7 => Some(vec![2, 5, 7]),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certification {
    pub schema: u32,
    pub datum: String,
    pub b: String,
    pub j: Vec<usize>,
    pub expected_j: Option<Vec<usize>>,
    pub j_matches: Option<bool>,
    pub superbasic_in_levi: bool,
    pub sigma_stable: bool,
    pub report: UniquenessReport,
    pub verdict: bool,
    pub wall_ms: u128,
}

pub fn certify(spec: &DatumSpec, datum: &RootDatum, b: &BasicElement, mode: Mode) -> Result<Certification, Error> {
    let t0 = Instant::now();
    let w = minimal_levi_j(datum, b);
    let sig = datum.sigma_simple();
    let sigma_stable = w.j.iter().all(|i| w.j.contains(&sig[*i]));
    let sb = superbasic_in_levi(datum, b)?;
    let report = verify_uniqueness(datum, &w.j, mode);
    let j1: Vec<usize> = w.j.iter().map(|x| x + 1).collect();
    let expected = closed_form_j(spec, datum, b);
    let matches = expected.as_ref().map(|e| *e == j1);
    let verdict = sigma_stable && sb && report.all_fixed && matches.unwrap_or(true);
    Ok(Certification {
        schema: 1,
        datum: spec.to_string(),
        b: b.b.display(datum).to_string(),
        j: j1,
        expected_j: expected,
        j_matches: matches,
        superbasic_in_levi: sb,
        sigma_stable,
        report,
        verdict,
        wall_ms: t0.elapsed().as_millis(),
    })
}

/// Certify every `b ∈ Ω`.
pub fn certify_all(spec: &DatumSpec, mode: Mode) -> Result<Vec<Certification>, Error> {
    let datum = RootDatum::build(spec)?;
    omega_elements(&datum)
        .into_iter()
        .map(|x| certify(spec, &datum, &BasicElement::new(&datum, x)?, mode))
        .collect()
}
