//! Based root data of types A–E7 with a diagram automorphism, Weyl group
//! elements and enumeration.
//!
//! Coordinates: the cocharacter lattice `Y` is `ℤ^rank`, the character lattice
//! `X` is its dual and the pairing is the dot product. `GL_n` uses the standard
//! basis, adjoint forms the fundamental coweights, simply connected forms the
//! simple coroots.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{dot, dot_q, q, solve_q, to_q, IMat, LatticeQuotient, Q};
use crate::Error;

pub type RootId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    Adjoint,
    SimplyConnected,
    Gl,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SigmaSpec {
    /// The standard diagram symmetry of this order (1 = identity).
    Order(u32),
    /// One-line permutation of the simple indices (1-based).
    Perm(Vec<usize>),
}

/// Parsed datum text `<letter><rank>[:adjoint|sc|gl][:d=<copies>][:sigma=<order>|<i,j,..>]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumSpec {
    pub letter: Letter,
    pub rank: usize,
    pub form: Form,
    pub copies: usize,
    pub sigma: SigmaSpec,
}

impl DatumSpec {
    pub fn new(letter: Letter, rank: usize, form: Form) -> Self {
        DatumSpec { letter, rank, form, copies: 1, sigma: SigmaSpec::Order(1) }
    }

    pub fn copies(mut self, d: usize) -> Self {
        self.copies = d;
        self
    }

    pub fn sigma(mut self, s: SigmaSpec) -> Self {
        self.sigma = s;
        self
    }
}

impl FromStr for DatumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |m: &str| Error::Parse(format!("datum `{s}`: {m}"));
        let mut parts = s.trim().split(':');
        let head = parts.next().unwrap_or_default();
        let mut chars = head.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Letter::A,
            Some('B') => Letter::B,
            Some('C') => Letter::C,
            Some('D') => Letter::D,
            Some('E') => Letter::E,
            Some('F') | Some('G') => return Err(Error::Unsupported(format!("type {head}"))),
            _ => return Err(bad("expected a type letter A-E")),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad("expected a rank"))?;
        let mut spec = DatumSpec::new(letter, rank, Form::Adjoint);
        for p in parts {
            match p {
                "adjoint" | "ad" => spec.form = Form::Adjoint,
                "sc" | "simply_connected" => spec.form = Form::SimplyConnected,
                "gl" => spec.form = Form::Gl,
                _ if p.starts_with("d=") => {
                    spec.copies = p[2..].parse().map_err(|_| bad("bad copy count"))?;
                }
                _ if p.starts_with("sigma=") => {
                    let v = &p[6..];
                    spec.sigma = if v.contains(',') {
                        SigmaSpec::Perm(
                            v.split(',')
                                .map(|x| x.trim().parse::<usize>())
                                .collect::<Result<_, _>>()
                                .map_err(|_| bad("bad sigma permutation"))?,
                        )
                    } else {
                        SigmaSpec::Order(v.parse().map_err(|_| bad("bad sigma order"))?)
                    };
                }
                _ => return Err(bad(&format!("unknown field `{p}`"))),
            }
        }
        if spec.copies == 0 {
            return Err(bad("d must be at least 1"));
        }
        Ok(spec)
    }
}

impl fmt::Display for DatumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)?;
        f.write_str(match self.form {
            Form::Adjoint => ":adjoint",
            Form::SimplyConnected => ":sc",
            Form::Gl => ":gl",
        })?;
        if self.copies > 1 {
            write!(f, ":d={}", self.copies)?;
        }
        match &self.sigma {
            SigmaSpec::Order(1) => Ok(()),
            SigmaSpec::Order(k) => write!(f, ":sigma={k}"),
            SigmaSpec::Perm(p) => {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, ":sigma={}", s.join(","))
            }
        }
    }
}

/// Cartan entries `c[i][j] = <α_i, α_j^∨>` in Bourbaki labelling.
pub fn cartan(letter: Letter, n: usize) -> Result<Vec<Vec<i64>>, Error> {
    let unsupported = || Error::Unsupported(format!("{letter:?}{n}"));
    let (edges, len): (Vec<(usize, usize)>, Vec<i64>) = match letter {
        Letter::A if n >= 1 => ((1..n).map(|i| (i - 1, i)).collect(), vec![2; n]),
        Letter::B if n >= 2 => {
            let mut l = vec![2; n];
            l[n - 1] = 1;
            ((1..n).map(|i| (i - 1, i)).collect(), l)
        }
        Letter::C if n >= 2 => {
            let mut l = vec![2; n];
            l[n - 1] = 4;
            ((1..n).map(|i| (i - 1, i)).collect(), l)
        }
        Letter::D if n >= 4 => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
            e.push((n - 3, n - 1));
            (e, vec![2; n])
        }
        Letter::E if n == 6 || n == 7 => {
            let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if n == 7 {
                e.push((5, 6));
            }
            (e, vec![2; n])
        }
        _ => return Err(unsupported()),
    };
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        b[i][i] = len[i];
    }
    for &(i, j) in &edges {
        let v = -len[i].max(len[j]) / 2;
        b[i][j] = v;
        b[j][i] = v;
    }
    Ok((0..n).map(|i| (0..n).map(|j| 2 * b[i][j] / len[j]).collect()).collect())
}

/// The standard diagram symmetry of a given order, as a 0-based permutation.
fn standard_symmetry(letter: Letter, n: usize, order: u32) -> Result<Vec<usize>, Error> {
    let id: Vec<usize> = (0..n).collect();
    let bad = || Error::InvalidSigma(format!("no diagram symmetry of order {order} on {letter:?}{n}"));
    match (letter, order) {
        (_, 1) => Ok(id),
        (Letter::A, 2) => Ok((0..n).rev().collect()),
        (Letter::D, 2) => {
            let mut p = id;
            p.swap(n - 2, n - 1);
            Ok(p)
        }
        (Letter::D, 3) if n == 4 => Ok(vec![2, 1, 3, 0]),
        (Letter::E, 2) if n == 6 => Ok(vec![5, 1, 4, 3, 2, 0]),
        _ => Err(bad()),
    }
}

/// A Weyl group element, stored as its matrix on `Y` and the inverse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub mat: IMat,
    pub inv: IMat,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { mat: IMat::identity(rank), inv: IMat::identity(rank) }
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        WeylElement { mat: self.mat.mul(&other.mat), inv: other.inv.mul(&self.inv) }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { mat: self.inv.clone(), inv: self.mat.clone() }
    }

    pub fn apply(&self, y: &[i64]) -> Vec<i64> {
        self.mat.apply(y)
    }

    pub fn apply_q(&self, y: &[Q]) -> Vec<Q> {
        self.mat.apply_q(y)
    }

    /// Image of a character: `<w x, y> = <x, w^{-1} y>`.
    pub fn act_x(&self, x: &[i64]) -> Vec<i64> {
        self.inv.left_apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }
}

/// Exact based root datum.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub label: String,
    pub form: Form,
    /// Dimension of `Y`.
    pub rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    coeffs: Vec<Vec<i64>>,
    positive: Vec<bool>,
    index: HashMap<Vec<i64>, RootId>,
    neg: Vec<RootId>,
    simple: Vec<RootId>,
    /// Irreducible components as lists of simple indices.
    pub components: Vec<Vec<usize>>,
    highest: Vec<RootId>,
    coxeter: Vec<usize>,
    pub sigma: IMat,
    pub sigma_inv: IMat,
    sigma_simple: Vec<usize>,
    sigma_root: Vec<RootId>,
    regular: Vec<i64>,
    alcove_point: Vec<Q>,
    coroot_solver: Vec<Vec<Q>>,
    /// Simple indices of the ambient datum, for Levi subdata.
    pub parent_simple: Option<Vec<usize>>,
    /// Number of factors of a product datum and the rank of `Y` per factor.
    pub copies: usize,
    pub factor_rank: usize,
}

impl RootDatum {
    /// Build and validate a datum from its text specification.
    pub fn build(spec: &DatumSpec) -> Result<RootDatum, Error> {
        let n = spec.rank;
        let c = cartan(spec.letter, n)?;
        if spec.form == Form::Gl && spec.letter != Letter::A {
            return Err(Error::Unsupported(format!("gl form of {:?}{n}", spec.letter)));
        }
        let perm = match &spec.sigma {
            SigmaSpec::Order(k) => standard_symmetry(spec.letter, n, *k)?,
            SigmaSpec::Perm(p) => {
                if p.len() != n || {
                    let mut s = p.clone();
                    s.sort();
                    s != (1..=n).collect::<Vec<_>>()
                } {
                    return Err(Error::InvalidSigma(format!("{p:?} is not a permutation of 1..{n}")));
                }
                p.iter().map(|x| x - 1).collect()
            }
        };
        for i in 0..n {
            for j in 0..n {
                if c[perm[i]][perm[j]] != c[i][j] {
                    return Err(Error::InvalidSigma(format!("{:?} is not a diagram symmetry", spec.sigma)));
                }
            }
        }
        let r = if spec.form == Form::Gl { n + 1 } else { n };
        let unit = |k: usize, i: usize| -> Vec<i64> { (0..k).map(|j| i64::from(i == j)).collect() };
        let (sr, sc, sig): (Vec<Vec<i64>>, Vec<Vec<i64>>, IMat) = match spec.form {
            Form::Adjoint => {
                let sr = (0..n).map(|i| unit(n, i)).collect();
                let sc = (0..n).map(|j| (0..n).map(|k| c[k][j]).collect()).collect();
                let mut m = IMat::zeros(n, n);
                for j in 0..n {
                    m.set(perm[j], j, 1);
                }
                (sr, sc, m)
            }
            Form::SimplyConnected => {
                let sr = (0..n).map(|i| c[i].clone()).collect();
                let sc = (0..n).map(|j| unit(n, j)).collect();
                let mut m = IMat::zeros(n, n);
                for j in 0..n {
                    m.set(perm[j], j, 1);
                }
                (sr, sc, m)
            }
            Form::Gl => {
                let v: Vec<Vec<i64>> =
                    (0..n).map(|i| (0..r).map(|j| i64::from(j == i) - i64::from(j == i + 1)).collect()).collect();
                let flip = spec.sigma == SigmaSpec::Order(2) || perm.first().is_some_and(|&p| p != 0);
                if !(perm.iter().enumerate().all(|(i, &p)| p == i) || flip) {
                    return Err(Error::InvalidSigma("GL_n admits only the identity and the flip".into()));
                }
                let mut m = IMat::zeros(r, r);
                for j in 0..r {
                    if flip {
                        m.set(r - 1 - j, j, -1);
                    } else {
                        m.set(j, j, 1);
                    }
                }
                (v.clone(), v, m)
            }
        };
        let d = spec.copies;
        let (rt, s) = (r * d, n * d);
        let embed = |v: &[i64], k: usize| -> Vec<i64> {
            let mut out = vec![0; rt];
            out[k * r..(k + 1) * r].copy_from_slice(v);
            out
        };
        let mut simple_roots = Vec::with_capacity(s);
        let mut simple_coroots = Vec::with_capacity(s);
        for k in 0..d {
            for i in 0..n {
                simple_roots.push(embed(&sr[i], k));
                simple_coroots.push(embed(&sc[i], k));
            }
        }
        let mut sigma = IMat::zeros(rt, rt);
        for k in 0..d {
            for a in 0..r {
                if k + 1 < d {
                    sigma.set(k * r + a, (k + 1) * r + a, 1);
                } else {
                    for b in 0..r {
                        sigma.set(k * r + a, b, sig.get(a, b));
                    }
                }
            }
        }
        let mut datum = RootDatum::from_simple(spec.to_string(), spec.form, rt, simple_roots, simple_coroots, sigma)?;
        datum.copies = d;
        datum.factor_rank = r;
        Ok(datum)
    }

    /// Build from explicit simple roots (in `X`) and simple coroots (in `Y`).
    pub fn from_simple(
        label: String,
        form: Form,
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        sigma: IMat,
    ) -> Result<RootDatum, Error> {
        let s = simple_roots.len();
        for i in 0..s {
            if dot(&simple_roots[i], &simple_coroots[i]) != 2 {
                return Err(Error::Invalid(format!("<α_{0}, α_{0}^∨> != 2", i + 1)));
            }
        }
        let cm: Vec<Vec<i64>> =
            (0..s).map(|i| (0..s).map(|j| dot(&simple_roots[i], &simple_coroots[j])).collect()).collect();
        // closure of the simple roots under simple reflections
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut coroots: Vec<Vec<i64>> = Vec::new();
        let mut coeffs: Vec<Vec<i64>> = Vec::new();
        let mut by_coeff: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue = std::collections::VecDeque::new();
        for i in 0..s {
            let c: Vec<i64> = (0..s).map(|j| i64::from(i == j)).collect();
            by_coeff.insert(c.clone(), roots.len());
            roots.push(simple_roots[i].clone());
            coroots.push(simple_coroots[i].clone());
            coeffs.push(c);
            queue.push_back(i);
        }
        while let Some(idx) = queue.pop_front() {
            if roots.len() > 4096 {
                return Err(Error::Invalid("root closure does not terminate".into()));
            }
            for j in 0..s {
                let x = roots[idx].clone();
                let xv = coroots[idx].clone();
                let k = dot(&x, &simple_coroots[j]);
                let kv = dot(&simple_roots[j], &xv);
                let mut c = coeffs[idx].clone();
                c[j] -= k;
                if by_coeff.contains_key(&c) {
                    continue;
                }
                let nx: Vec<i64> = x.iter().zip(&simple_roots[j]).map(|(a, b)| a - k * b).collect();
                let nxv: Vec<i64> = xv.iter().zip(&simple_coroots[j]).map(|(a, b)| a - kv * b).collect();
                by_coeff.insert(c.clone(), roots.len());
                queue.push_back(roots.len());
                roots.push(nx);
                coroots.push(nxv);
                coeffs.push(c);
            }
        }
        let mut positive = Vec::with_capacity(roots.len());
        for c in &coeffs {
            if c.iter().all(|&x| x >= 0) {
                positive.push(true);
            } else if c.iter().all(|&x| x <= 0) {
                positive.push(false);
            } else {
                return Err(Error::Invalid("root with mixed-sign simple expansion".into()));
            }
        }
        let mut index = HashMap::new();
        for (i, x) in roots.iter().enumerate() {
            if index.insert(x.clone(), i).is_some() {
                return Err(Error::Invalid("two roots share a character".into()));
            }
        }
        let neg: Vec<RootId> = roots
            .iter()
            .map(|x| index[&x.iter().map(|a| -a).collect::<Vec<_>>()])
            .collect();
        // components of the Dynkin diagram
        let mut comp_of = vec![usize::MAX; s];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..s {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp_of[start] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..s {
                    if cm[i][j] != 0 && comp_of[j] == usize::MAX {
                        comp_of[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort();
            components.push(members);
        }
        let height = |c: &Vec<i64>| c.iter().sum::<i64>();
        let mut highest = Vec::new();
        let mut coxeter = Vec::new();
        for comp in &components {
            let in_comp = |c: &Vec<i64>| c.iter().enumerate().all(|(j, &x)| x == 0 || comp.contains(&j));
            let members: Vec<usize> = (0..roots.len()).filter(|&i| in_comp(&coeffs[i])).collect();
            let top = *members.iter().max_by_key(|&&i| height(&coeffs[i])).unwrap();
            highest.push(top);
            coxeter.push(members.len() / comp.len());
        }
        let simple: Vec<RootId> = (0..s).collect();
        let sigma_inv = sigma.inverse_unimodular();
        let mut sigma_simple = vec![0; s];
        for i in 0..s {
            let img = sigma.apply(&simple_coroots[i]);
            let Some(j) = simple_coroots.iter().position(|c| *c == img) else {
                return Err(Error::InvalidSigma("σ does not permute the simple coroots".into()));
            };
            if sigma_inv.left_apply(&simple_roots[i]) != simple_roots[j] {
                return Err(Error::InvalidSigma("σ does not permute the simple roots".into()));
            }
            sigma_simple[i] = j;
        }
        let sigma_root: Vec<RootId> = roots
            .iter()
            .map(|x| index.get(&sigma_inv.left_apply(x)).copied())
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidSigma("σ does not preserve the roots".into()))?;
        let sr_q: Vec<Vec<Q>> = simple_roots.iter().map(|x| to_q(x)).collect();
        let one: Vec<Q> = vec![q(1); s];
        let reg_q = if s == 0 {
            vec![Q::zero(); rank]
        } else {
            solve_q(&sr_q, &one).ok_or_else(|| Error::Invalid("simple roots are dependent".into()))?
        };
        let regular = crate::linalg::primitive(&reg_q);
        let h = coxeter.iter().copied().max().unwrap_or(1) as i64;
        let alcove_point: Vec<Q> = reg_q.iter().map(|x| x / Q::from_integer((h + 1) as i128)).collect();
        // left inverse of the simple-coroot matrix (rank × s): (CᵀC)^{-1} Cᵀ
        let ctc: Vec<Vec<Q>> =
            (0..s).map(|i| (0..s).map(|j| q(dot(&simple_coroots[i], &simple_coroots[j]))).collect()).collect();
        let mut coroot_solver = vec![vec![Q::zero(); rank]; s];
        for k in 0..rank {
            let rhs: Vec<Q> = (0..s).map(|i| q(simple_coroots[i][k])).collect();
            let col = solve_q(&ctc, &rhs).ok_or_else(|| Error::Invalid("simple coroots are dependent".into()))?;
            for i in 0..s {
                coroot_solver[i][k] = col[i];
            }
        }
        let datum = RootDatum {
            label,
            form,
            rank,
            roots,
            coroots,
            coeffs,
            positive,
            index,
            neg,
            simple,
            components,
            highest,
            coxeter,
            sigma,
            sigma_inv,
            sigma_simple,
            sigma_root,
            regular,
            alcove_point,
            coroot_solver,
            parent_simple: None,
            copies: 1,
            factor_rank: rank,
        };
        datum.validate()?;
        Ok(datum)
    }

    fn validate(&self) -> Result<(), Error> {
        for a in 0..self.num_roots() {
            if dot(self.root(a), self.coroot(a)) != 2 {
                return Err(Error::Invalid("<α, α^∨> != 2".into()));
            }
        }
        for i in 0..self.num_simple() {
            for a in 0..self.num_roots() {
                if self.root_index(&self.simple_reflection(i).act_x(self.root(a))).is_none() {
                    return Err(Error::Invalid("simple reflection does not permute the roots".into()));
                }
            }
        }
        Ok(())
    }

    /// The standard Levi subdatum on the simple indices `j` (sorted).
    pub fn levi(&self, j: &[usize]) -> Result<RootDatum, Error> {
        let stable = j.iter().all(|i| j.contains(&self.sigma_simple[*i]));
        let sigma = if stable { self.sigma.clone() } else { IMat::identity(self.rank) };
        let sr = j.iter().map(|&i| self.root(self.simple[i]).to_vec()).collect();
        let sc = j.iter().map(|&i| self.coroot(self.simple[i]).to_vec()).collect();
        let label = format!("{}|levi{:?}", self.label, j.iter().map(|x| x + 1).collect::<Vec<_>>());
        let mut m = RootDatum::from_simple(label, self.form, self.rank, sr, sc, sigma)?;
        // keep the ambient alcove point so both data share one base alcove
        m.alcove_point = self.alcove_point.clone();
        m.parent_simple = Some(j.to_vec());
        m.copies = self.copies;
        m.factor_rank = self.factor_rank;
        Ok(m)
    }

    /// The subdatum on a closed symmetric set of roots, with positive system
    /// induced from this one and the same alcove point and `Y`.
    pub fn sub_datum(&self, roots: &[RootId]) -> Result<RootDatum, Error> {
        let pos: Vec<RootId> = roots.iter().copied().filter(|&a| self.positive[a]).collect();
        let simple: Vec<RootId> = pos
            .iter()
            .copied()
            .filter(|&a| {
                !pos.iter().any(|&b| {
                    let d: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x - y).collect();
                    self.index.get(&d).is_some_and(|&c| pos.contains(&c))
                })
            })
            .collect();
        let sr = simple.iter().map(|&a| self.roots[a].clone()).collect();
        let sc = simple.iter().map(|&a| self.coroots[a].clone()).collect();
        let mut m = RootDatum::from_simple(format!("{}|sub", self.label), self.form, self.rank, sr, sc, IMat::identity(self.rank))?;
        m.alcove_point = self.alcove_point.clone();
        m.copies = self.copies;
        m.factor_rank = self.factor_rank;
        Ok(m)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn root(&self, a: RootId) -> &[i64] {
        &self.roots[a]
    }

    pub fn coroot(&self, a: RootId) -> &[i64] {
        &self.coroots[a]
    }

    /// Expansion in simple roots.
    pub fn coeffs(&self, a: RootId) -> &[i64] {
        &self.coeffs[a]
    }

    pub fn is_positive(&self, a: RootId) -> bool {
        self.positive[a]
    }

    pub fn height(&self, a: RootId) -> i64 {
        self.coeffs[a].iter().sum()
    }

    pub fn neg(&self, a: RootId) -> RootId {
        self.neg[a]
    }

    pub fn simple_root(&self, i: usize) -> RootId {
        self.simple[i]
    }

    pub fn root_index(&self, x: &[i64]) -> Option<RootId> {
        self.index.get(x).copied()
    }

    pub fn roots(&self) -> impl Iterator<Item = RootId> {
        0..self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len()).filter(|&a| self.positive[a])
    }

    pub fn pair(&self, a: RootId, y: &[i64]) -> i64 {
        dot(&self.roots[a], y)
    }

    pub fn pair_q(&self, a: RootId, y: &[Q]) -> Q {
        dot_q(&self.roots[a], y)
    }

    pub fn highest_roots(&self) -> &[RootId] {
        &self.highest
    }

    /// Largest Coxeter number over the components.
    pub fn coxeter_number(&self) -> usize {
        self.coxeter.iter().copied().max().unwrap_or(1)
    }

    pub fn sigma_simple(&self) -> &[usize] {
        &self.sigma_simple
    }

    pub fn sigma_root(&self, a: RootId) -> RootId {
        self.sigma_root[a]
    }

    pub fn sigma_y(&self, y: &[i64]) -> Vec<i64> {
        self.sigma.apply(y)
    }

    pub fn sigma_is_trivial(&self) -> bool {
        self.sigma.is_identity()
    }

    pub fn sigma_order(&self) -> usize {
        self.sigma.order(64)
    }

    /// Strictly dominant integer coweight with constant pairing on simple roots.
    pub fn regular_dominant(&self) -> &[i64] {
        &self.regular
    }

    /// Interior point of the base alcove.
    pub fn alcove_point(&self) -> &[Q] {
        &self.alcove_point
    }

    /// Half-sum of positive roots, paired with `y`.
    pub fn rho_pair(&self, y: &[Q]) -> Q {
        let two: Q = self.positive_roots().map(|a| self.pair_q(a, y)).sum();
        two / Q::from_integer(2)
    }

    /// Half-sum of positive coroots (a rational coweight).
    pub fn rho_vee(&self) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rank];
        for a in self.positive_roots() {
            for (o, c) in out.iter_mut().zip(&self.coroots[a]) {
                *o += q(*c);
            }
        }
        out.into_iter().map(|x| x / Q::from_integer(2)).collect()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.reflection(self.simple[i])
    }

    /// Matrix of `s_α` on `Y`.
    pub fn reflection(&self, a: RootId) -> WeylElement {
        let (x, xv) = (&self.roots[a], &self.coroots[a]);
        let mut m = IMat::identity(self.rank);
        for i in 0..self.rank {
            for j in 0..self.rank {
                m.set(i, j, m.get(i, j) - xv[i] * x[j]);
            }
        }
        WeylElement { mat: m.clone(), inv: m }
    }

    /// `s_α(λ) = λ − <α,λ> α^∨`.
    pub fn reflect(&self, a: RootId, lambda: &[i64]) -> Vec<i64> {
        let k = self.pair(a, lambda);
        lambda.iter().zip(&self.coroots[a]).map(|(l, c)| l - k * c).collect()
    }

    pub fn reflect_q(&self, a: RootId, lambda: &[Q]) -> Vec<Q> {
        let k = self.pair_q(a, lambda);
        lambda.iter().zip(&self.coroots[a]).map(|(l, c)| l - k * q(*c)).collect()
    }

    /// Image of a root under a Weyl element.
    pub fn act_root(&self, w: &WeylElement, a: RootId) -> RootId {
        self.index[&w.act_x(&self.roots[a])]
    }

    /// `|Φ⁺ ∩ w^{-1}(Φ⁻)|`.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots().filter(|&a| !self.positive[self.act_root(w, a)]).count()
    }

    /// A reduced word (0-based simple indices) with `w = s_{i1} ⋯ s_{ik}`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'outer: loop {
            for i in 0..self.num_simple() {
                // left descent: w^{-1}(α_i) < 0
                let img = self.index[&cur.mat.left_apply(self.root(self.simple[i]))];
                if !self.positive[img] {
                    word.push(i);
                    cur = self.simple_reflection(i).mul(&cur);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(WeylElement::identity(self.rank), |acc, &i| acc.mul(&self.simple_reflection(i)))
    }

    /// Apply `σ` to a Weyl element: `σ w σ^{-1}`.
    pub fn sigma_weyl(&self, w: &WeylElement) -> WeylElement {
        WeylElement {
            mat: self.sigma.mul(&w.mat).mul(&self.sigma_inv),
            inv: self.sigma.mul(&w.inv).mul(&self.sigma_inv),
        }
    }

    pub fn is_dominant(&self, y: &[i64]) -> bool {
        self.simple.iter().all(|&a| self.pair(a, y) >= 0)
    }

    pub fn is_dominant_q(&self, y: &[Q]) -> bool {
        self.simple.iter().all(|&a| !self.pair_q(a, y).is_negative())
    }

    /// Dominant conjugate `λ̄` and the minimal `w` with `w(λ) = λ̄`.
    pub fn dominant_rep(&self, lambda: &[i64]) -> (Vec<i64>, WeylElement) {
        let mut x = lambda.to_vec();
        let mut w = WeylElement::identity(self.rank);
        while let Some(i) = (0..self.num_simple()).find(|&i| self.pair(self.simple[i], &x) < 0) {
            x = self.reflect(self.simple[i], &x);
            w = self.simple_reflection(i).mul(&w);
        }
        (x, w)
    }

    pub fn dominant_rep_q(&self, lambda: &[Q]) -> (Vec<Q>, WeylElement) {
        let mut x = lambda.to_vec();
        let mut w = WeylElement::identity(self.rank);
        while let Some(i) = (0..self.num_simple()).find(|&i| self.pair_q(self.simple[i], &x).is_negative()) {
            x = self.reflect_q(self.simple[i], &x);
            w = self.simple_reflection(i).mul(&w);
        }
        (x, w)
    }

    /// Coefficients of `y` in the simple coroots, if `y` lies in their span.
    pub fn coroot_coords(&self, y: &[Q]) -> Option<Vec<Q>> {
        let c: Vec<Q> = self
            .coroot_solver
            .iter()
            .map(|row| row.iter().zip(y).map(|(a, b)| a * b).sum())
            .collect();
        let back: Vec<Q> = (0..self.rank)
            .map(|k| (0..self.num_simple()).map(|i| c[i] * q(self.coroots[self.simple[i]][k])).sum())
            .collect();
        (back == y).then_some(c)
    }

    /// `v ≤ v'`: `v' − v` is a non-negative combination of positive coroots.
    pub fn leq_dominance(&self, v: &[Q], v2: &[Q]) -> bool {
        let diff: Vec<Q> = v2.iter().zip(v).map(|(a, b)| a - b).collect();
        self.coroot_coords(&diff).is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Every root pairs with the dominant conjugate in `{-1, 0, 1}`.
    pub fn is_minuscule(&self, mu: &[i64]) -> bool {
        let (d, _) = self.dominant_rep(mu);
        self.positive_roots().all(|a| self.pair(a, &d) <= 1)
    }

    /// Minus simple roots followed by the highest root of each component.
    pub fn pi_set(&self) -> Vec<RootId> {
        let mut out: Vec<RootId> = self.simple.iter().map(|&a| self.neg[a]).collect();
        out.extend_from_slice(&self.highest);
        out
    }

    /// The Weyl orbit of a coweight, sorted.
    pub fn weyl_orbit(&self, lambda: &[i64]) -> Vec<Vec<i64>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![lambda.to_vec()];
        seen.insert(lambda.to_vec());
        while let Some(x) = stack.pop() {
            for &a in &self.simple {
                let y = self.reflect(a, &x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Quotient `Y / ℤΦ^∨`.
    pub fn fundamental_group(&self) -> LatticeQuotient {
        let gens: Vec<Vec<i64>> = self.simple.iter().map(|&a| self.coroots[a].clone()).collect();
        LatticeQuotient::new(self.rank, &gens)
    }

    /// `y` pairs to zero with every root.
    pub fn is_central(&self, y: &[i64]) -> bool {
        self.simple.iter().all(|&a| self.pair(a, y) == 0)
    }

    /// Enumerate `W` once each, depth first on a regular orbit.
    pub fn enumerate_weyl(&self) -> WeylIter<'_> {
        WeylIter {
            datum: self,
            stack: vec![(self.regular.clone(), WeylElement::identity(self.rank))],
        }
    }

    /// `|W|` by the same traversal without building matrices.
    pub fn weyl_order(&self) -> u64 {
        let mut count = 0u64;
        let mut stack = vec![self.regular.clone()];
        while let Some(x) = stack.pop() {
            count += 1;
            for i in 0..self.num_simple() {
                if let Some(y) = self.weyl_child(&x, i) {
                    stack.push(y);
                }
            }
        }
        count
    }

    /// The child `s_i x` of `x` in the canonical spanning tree of the regular
    /// orbit, if `s_i x` is longer and its first descent is `i`.
    #[inline]
    pub fn weyl_child(&self, x: &[i64], i: usize) -> Option<Vec<i64>> {
        if self.pair(self.simple[i], x) <= 0 {
            return None;
        }
        let y = self.reflect(self.simple[i], x);
        let first = (0..self.num_simple()).find(|&j| self.pair(self.simple[j], &y) < 0);
        (first == Some(i)).then_some(y)
    }
}

/// Depth-first iterator over the Weyl group.
pub struct WeylIter<'a> {
    datum: &'a RootDatum,
    stack: Vec<(Vec<i64>, WeylElement)>,
}

impl Iterator for WeylIter<'_> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let (x, w) = self.stack.pop()?;
        for i in 0..self.datum.num_simple() {
            if let Some(y) = self.datum.weyl_child(&x, i) {
                let s = self.datum.simple_reflection(i);
                self.stack.push((y, s.mul(&w)));
            }
        }
        Some(w)
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// One-line notation helper used by `GL_n` code: `w(e_i) = e_{p(i)}`.
pub fn permutation_of(w: &WeylElement) -> Vec<usize> {
    let n = w.mat.rows;
    (0..n)
        .map(|i| {
            let col = w.mat.col(i);
            col.iter().position(|&x| x == 1).expect("not a permutation matrix")
        })
        .collect()
}

pub fn parse_coweight(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("coweight `{s}`"))))
        .collect()
}

pub fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}
