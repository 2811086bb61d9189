//! Littelmann path crystals `B_μ` for the dual group, with weights in `Y`.
//!
//! A path is stored as its list of displacement vectors; consecutive
//! positively proportional pieces are merged, so equal paths (up to
//! reparametrisation) have equal representations.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::{One, Signed, Zero};

use crate::isocrystal::coinvariant_quotient;
use crate::linalg::{q, to_int, to_q, Q};
use crate::rootdata::RootDatum;
use crate::Error;

pub const DEFAULT_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    segments: Vec<Vec<Q>>,
}

impl Path {
    pub fn straight(mu: &[i64]) -> Path {
        Path::from_segments(vec![to_q(mu)])
    }

    pub fn from_segments(segments: Vec<Vec<Q>>) -> Path {
        let mut out: Vec<Vec<Q>> = Vec::with_capacity(segments.len());
        for s in segments {
            if s.iter().all(Zero::is_zero) {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if positively_parallel(last, &s) {
                    for (a, b) in last.iter_mut().zip(&s) {
                        *a += b;
                    }
                    continue;
                }
            }
            out.push(s);
        }
        Path { segments: out }
    }

    pub fn segments(&self) -> &[Vec<Q>] {
        &self.segments
    }

    pub fn endpoint(&self, rank: usize) -> Vec<Q> {
        let mut e = vec![Q::zero(); rank];
        for s in &self.segments {
            for (a, b) in e.iter_mut().zip(s) {
                *a += b;
            }
        }
        e
    }

    pub fn concat(&self, other: &Path) -> Path {
        let mut segs = self.segments.clone();
        segs.extend(other.segments.iter().cloned());
        Path::from_segments(segs)
    }

    /// Heights `<α_i, π(t)>` at the breakpoints, starting with 0.
    fn heights(&self, datum: &RootDatum, i: usize) -> Vec<Q> {
        let a = datum.simple_root(i);
        let mut h = vec![Q::zero()];
        for s in &self.segments {
            let last = *h.last().unwrap();
            h.push(last + datum.pair_q(a, s));
        }
        h
    }

    fn min_height(&self, datum: &RootDatum, i: usize) -> Q {
        self.heights(datum, i).into_iter().min().unwrap()
    }

    /// Stays in the dominant chamber, i.e. is killed by every `e_i`.
    pub fn is_dominant(&self, datum: &RootDatum) -> bool {
        (0..datum.num_simple()).all(|i| !self.min_height(datum, i).is_negative())
    }

    /// Killed by every `e_j`, `j ∈ J`.
    pub fn is_highest_for(&self, datum: &RootDatum, j: &[usize]) -> bool {
        j.iter().all(|&i| self.min_height(datum, i) > q(-1))
    }
}

fn positively_parallel(a: &[Q], b: &[Q]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let c = b[k] / a[k];
    c.is_positive() && a.iter().zip(b).all(|(x, y)| *x * c == *y)
}

fn reflect(datum: &RootDatum, i: usize, v: &[Q]) -> Vec<Q> {
    datum.reflect_q(datum.simple_root(i), v)
}

/// Lowering operator `f_i`.
pub fn root_op_f(datum: &RootDatum, i: usize, p: &Path) -> Option<Path> {
    let h = p.heights(datum, i);
    let n = p.segments.len();
    let m = *h.iter().min().unwrap();
    if h[n] - m < Q::one() {
        return None;
    }
    let k0 = (0..=n).rev().find(|&k| h[k] == m).unwrap();
    let target = m + Q::one();
    let mut segs: Vec<Vec<Q>> = p.segments[..k0].to_vec();
    let mut k = k0;
    loop {
        let s = &p.segments[k];
        if h[k + 1] >= target {
            let a = (target - h[k]) / (h[k + 1] - h[k]);
            let first: Vec<Q> = s.iter().map(|x| x * a).collect();
            let rest: Vec<Q> = s.iter().map(|x| x * (Q::one() - a)).collect();
            segs.push(reflect(datum, i, &first));
            segs.push(rest);
            segs.extend(p.segments[k + 1..].iter().cloned());
            break;
        }
        segs.push(reflect(datum, i, s));
        k += 1;
    }
    Some(Path::from_segments(segs))
}

/// Raising operator `e_i`.
pub fn root_op_e(datum: &RootDatum, i: usize, p: &Path) -> Option<Path> {
    let h = p.heights(datum, i);
    let n = p.segments.len();
    let m = *h.iter().min().unwrap();
    if m > q(-1) {
        return None;
    }
    let k1 = (0..=n).find(|&k| h[k] == m).unwrap();
    let target = m + Q::one();
    let k = (0..k1).rev().find(|&k| h[k] >= target).unwrap();
    let s = &p.segments[k];
    let a = (target - h[k]) / (h[k + 1] - h[k]);
    let first: Vec<Q> = s.iter().map(|x| x * a).collect();
    let rest: Vec<Q> = s.iter().map(|x| x * (Q::one() - a)).collect();
    let mut segs: Vec<Vec<Q>> = p.segments[..k].to_vec();
    segs.push(first);
    segs.push(reflect(datum, i, &rest));
    for s in &p.segments[k + 1..k1] {
        segs.push(reflect(datum, i, s));
    }
    segs.extend(p.segments[k1..].iter().cloned());
    Some(Path::from_segments(segs))
}

/// A generated crystal `B_μ`.
#[derive(Clone, Debug)]
pub struct Crystal {
    pub highest_weight: Vec<i64>,
    pub elements: Vec<Path>,
    pub weights: Vec<Vec<i64>>,
    /// `(i, from, to)` with `f_i(from) = to`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl Crystal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn weight_mult(&self, lambda: &[i64]) -> usize {
        self.weights.iter().filter(|w| w.as_slice() == lambda).count()
    }

    /// Number of elements whose weight lies in the class of `ul` in `Y_σ`.
    pub fn weight_mult_class(&self, datum: &RootDatum, ul: &[i64]) -> usize {
        let cq = coinvariant_quotient(datum);
        let target = cq.canon(ul);
        self.weights.iter().filter(|w| cq.canon(w) == target).count()
    }

    /// Weight multiplicities, sorted by weight.
    pub fn character(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Close the straight path to `μ` under all `f_i`.
pub fn crystal_generate(datum: &RootDatum, mu: &[i64], cap: usize) -> Result<Crystal, Error> {
    if !datum.is_dominant(mu) {
        return Err(Error::Precondition(format!("{mu:?} is not dominant")));
    }
    let start = Path::straight(mu);
    let mut index: HashMap<Path, usize> = HashMap::from([(start.clone(), 0)]);
    let mut elements = vec![start];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..datum.num_simple() {
            let Some(p) = root_op_f(datum, i, &elements[k]) else { continue };
            let id = match index.get(&p) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::Limit(format!("crystal exceeds {cap} elements")));
                    }
                    let id = elements.len();
                    index.insert(p.clone(), id);
                    elements.push(p);
                    queue.push_back(id);
                    id
                }
            };
            edges.push((i, k, id));
        }
    }
    let weights = elements
        .iter()
        .map(|p| to_int(&p.endpoint(datum.rank)).ok_or_else(|| Error::Invariant("non-integral crystal weight".into())))
        .collect::<Result<_, _>>()?;
    Ok(Crystal { highest_weight: mu.to_vec(), elements, weights, edges })
}

/// Highest weights of `B_{μ_1} ⊗ ⋯ ⊗ B_{μ_k}` with multiplicities, by
/// scanning every concatenation (first factor first).
pub fn tensor_decompose(datum: &RootDatum, mus: &[Vec<i64>], cap: usize) -> Result<BTreeMap<Vec<i64>, usize>, Error> {
    let crystals: Vec<Crystal> = mus.iter().map(|m| crystal_generate(datum, m, cap)).collect::<Result<_, _>>()?;
    let total: usize = crystals.iter().map(Crystal::len).product();
    if total > cap.saturating_mul(50) {
        return Err(Error::Limit(format!("tensor product has {total} elements")));
    }
    let mut out = BTreeMap::new();
    if crystals.is_empty() {
        out.insert(vec![0; datum.rank], 1);
        return Ok(out);
    }
    let mut idx = vec![0usize; crystals.len()];
    loop {
        let p = idx
            .iter()
            .zip(&crystals)
            .fold(Path::from_segments(vec![]), |acc, (&k, c)| acc.concat(&c.elements[k]));
        if p.is_dominant(datum) {
            let w = to_int(&p.endpoint(datum.rank)).expect("integral weight");
            *out.entry(w).or_insert(0) += 1;
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < crystals[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// The same decomposition, one factor at a time: the highest elements of
/// `B_η ⊗ B_μ` are `π_η * b` that stay dominant.
pub fn tensor_decompose_iterative(
    datum: &RootDatum,
    mus: &[Vec<i64>],
    cap: usize,
) -> Result<BTreeMap<Vec<i64>, usize>, Error> {
    let mut acc: BTreeMap<Vec<i64>, usize> = BTreeMap::from([(vec![0; datum.rank], 1)]);
    for mu in mus {
        let c = crystal_generate(datum, mu, cap)?;
        let mut next = BTreeMap::new();
        for (eta, m) in &acc {
            let head = Path::straight(eta);
            for (p, w) in c.elements.iter().zip(&c.weights) {
                if head.concat(p).is_dominant(datum) {
                    let key: Vec<i64> = eta.iter().zip(w).map(|(a, b)| a + b).collect();
                    *next.entry(key).or_insert(0) += m;
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Decompose `B_μ` under the Levi with simple indices `J`.
pub fn restrict_levi(datum: &RootDatum, mu: &[i64], j: &[usize], cap: usize) -> Result<BTreeMap<Vec<i64>, usize>, Error> {
    let c = crystal_generate(datum, mu, cap)?;
    let mut out = BTreeMap::new();
    for (p, w) in c.elements.iter().zip(&c.weights) {
        if p.is_highest_for(datum, j) {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Distinct weights of a crystal.
pub fn weight_set(c: &Crystal) -> HashSet<Vec<i64>> {
    c.weights.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn f_on_gl2() {
        let g = datum("A1:gl");
        let p = Path::straight(&[1, 0]);
        let fp = root_op_f(&g, 0, &p).unwrap();
        assert_eq!(fp, Path::straight(&[0, 1]));
        assert!(root_op_f(&g, 0, &fp).is_none());
        assert_eq!(root_op_e(&g, 0, &fp).unwrap(), p);
    }

    #[test]
    fn small_crystals() {
        let g3 = datum("A2:gl");
        let c = crystal_generate(&g3, &[1, 0, 0], DEFAULT_CAP).unwrap();
        let mut w = c.weights.clone();
        w.sort();
        assert_eq!(w, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(crystal_generate(&g3, &[0, 0, 0], DEFAULT_CAP).unwrap().len(), 1);
        let a2 = datum("A2:adjoint");
        let theta = [1, 1];
        let c = crystal_generate(&a2, &theta, DEFAULT_CAP).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(c.weight_mult(&[0, 0]), 2);
        assert_eq!(c.weight_mult(&theta), 1);
    }

    #[test]
    fn class_multiplicities() {
        let g = datum("A1:gl");
        let c = crystal_generate(&g, &[1, 0], DEFAULT_CAP).unwrap();
        assert_eq!(c.weight_mult_class(&g, &[0, 1]), 1);
        let p = datum("A2:gl:d=2");
        let c = crystal_generate(&p, &[1, 0, 0, 1, 0, 0], DEFAULT_CAP).unwrap();
        assert_eq!(c.weight_mult_class(&p, &[0, 1, 1, 0, 0, 0]), 2);
    }

    #[test]
    fn tensor_examples() {
        let g = datum("A1:gl");
        let t = tensor_decompose(&g, &[vec![1, 0], vec![1, 0]], DEFAULT_CAP).unwrap();
        assert_eq!(t, BTreeMap::from([(vec![1, 1], 1), (vec![2, 0], 1)]));
        let t = tensor_decompose(&g, &[vec![2, 1], vec![0, 0]], DEFAULT_CAP).unwrap();
        assert_eq!(t, BTreeMap::from([(vec![2, 1], 1)]));
        let g3 = datum("A2:gl");
        let v = vec![1, 0, 0];
        let t = tensor_decompose(&g3, &[v.clone(), v.clone(), v.clone()], DEFAULT_CAP).unwrap();
        assert_eq!(t, BTreeMap::from([(vec![1, 1, 1], 1), (vec![2, 1, 0], 2), (vec![3, 0, 0], 1)]));
        assert_eq!(t, tensor_decompose_iterative(&g3, &[v.clone(), v.clone(), v], DEFAULT_CAP).unwrap());
    }

    #[test]
    fn restriction_examples() {
        let g3 = datum("A2:gl");
        let r = restrict_levi(&g3, &[1, 0, 0], &[0], DEFAULT_CAP).unwrap();
        assert_eq!(r, BTreeMap::from([(vec![0, 0, 1], 1), (vec![1, 0, 0], 1)]));
        let r = restrict_levi(&g3, &[2, 1, 0], &[0, 1], DEFAULT_CAP).unwrap();
        assert_eq!(r, BTreeMap::from([(vec![2, 1, 0], 1)]));
        let r = restrict_levi(&g3, &[2, 1, 0], &[], DEFAULT_CAP).unwrap();
        assert_eq!(r.values().sum::<usize>(), 8);
        assert_eq!(r[&vec![1, 1, 1]], 2);
    }
}
