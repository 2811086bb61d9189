//! σ-conjugacy invariants of elements of `W̃`: Kottwitz point, Newton point,
//! σ-average, defect, the best integral approximation `ul`, and the
//! nonemptiness and dimension formulas for `X_μ(b)`.

use num_traits::{Signed, Zero};

use crate::affine::{BasicElement, ExtAffine};
use crate::linalg::{kernel_q, q, to_q, IMat, LatticeQuotient, Q};
use crate::rootdata::RootDatum;
use crate::Error;

/// `Y / (ℤΦ^∨ + (1−σ)Y) = π₁(G)_σ`.
pub fn kottwitz_quotient(datum: &RootDatum) -> LatticeQuotient {
    let mut gens: Vec<Vec<i64>> = (0..datum.num_simple()).map(|i| datum.coroot(datum.simple_root(i)).to_vec()).collect();
    gens.extend(coinvariant_generators(datum));
    LatticeQuotient::new(datum.rank, &gens)
}

/// `Y_σ = Y / (1−σ)Y`.
pub fn coinvariant_quotient(datum: &RootDatum) -> LatticeQuotient {
    LatticeQuotient::new(datum.rank, &coinvariant_generators(datum))
}

fn coinvariant_generators(datum: &RootDatum) -> Vec<Vec<i64>> {
    (0..datum.rank)
        .map(|j| {
            let e: Vec<i64> = (0..datum.rank).map(|i| i64::from(i == j)).collect();
            let s = datum.sigma_y(&e);
            e.iter().zip(&s).map(|(a, b)| a - b).collect()
        })
        .collect()
}

/// Canonical coordinates of `κ(x)`.
pub fn kottwitz(datum: &RootDatum, x: &ExtAffine) -> Vec<i64> {
    kottwitz_quotient(datum).canon(&x.t)
}

pub fn kottwitz_of(datum: &RootDatum, y: &[i64]) -> Vec<i64> {
    kottwitz_quotient(datum).canon(y)
}

/// The non-dominant Newton vector `(1/n) Σ_{i<n} f^i(t)` with `f = p(x)σ`.
pub fn newton_vector(datum: &RootDatum, x: &ExtAffine) -> Vec<Q> {
    let f = x.w.mat.mul(&datum.sigma);
    let n = f.order(1 << 12);
    let mut acc = vec![0i64; datum.rank];
    let mut cur = x.t.clone();
    for _ in 0..n {
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c;
        }
        cur = f.apply(&cur);
    }
    acc.iter().map(|a| Q::new(*a as i128, n as i128)).collect()
}

/// Dominant Newton point `ν(x)`.
pub fn newton(datum: &RootDatum, x: &ExtAffine) -> Vec<Q> {
    datum.dominant_rep_q(&newton_vector(datum, x)).0
}

/// `(1/m) Σ_{i<m} σ^i(λ)` without dominant normalisation.
pub fn sigma_average_raw(datum: &RootDatum, lambda: &[i64]) -> Vec<Q> {
    let m = datum.sigma_order();
    let mut acc = vec![0i64; datum.rank];
    let mut cur = lambda.to_vec();
    for _ in 0..m {
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c;
        }
        cur = datum.sigma_y(&cur);
    }
    acc.iter().map(|a| Q::new(*a as i128, m as i128)).collect()
}

/// `λ^⋄`, the dominant σ-average.
pub fn sigma_average(datum: &RootDatum, lambda: &[i64]) -> Vec<Q> {
    datum.dominant_rep_q(&sigma_average_raw(datum, lambda)).0
}

fn fixed_dim(f: &IMat) -> usize {
    let n = f.rows;
    let rows: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| q(f.get(i, j) - i64::from(i == j))).collect()).collect();
    kernel_q(&rows, n).len()
}

/// `dim Y_ℝ^σ − dim Y_ℝ^{p(b)σ}`.
pub fn defect(datum: &RootDatum, b: &BasicElement) -> usize {
    fixed_dim(&datum.sigma) - fixed_dim(&b.f)
}

#[derive(Clone, Debug)]
pub struct BestApprox {
    /// A representative in `Y`, folded into the first factor of a product.
    pub rep: Vec<i64>,
    /// Its σ-average (not dominant-normalised).
    pub average: Vec<Q>,
    pub radius: i64,
    pub candidates: usize,
}

/// Move every factor of a product coweight into the first factor; this is
/// a representative of the same class in `Y_σ`.
pub fn fold(datum: &RootDatum, y: &[i64]) -> Vec<i64> {
    let r = datum.factor_rank;
    let mut out = vec![0; datum.rank];
    for k in 0..datum.copies {
        for i in 0..r {
            out[i] += y[k * r + i];
        }
    }
    out
}

/// The unique maximal `ul ∈ Y_σ` with `κ(ul) = κ(b)` and `ul^⋄ ≤ ν(b)`,
/// compared on σ-averages. The box around `ν` grows until the answer is stable.
pub fn ul_best(datum: &RootDatum, b: &BasicElement) -> Result<BestApprox, Error> {
    let kq = kottwitz_quotient(datum);
    let cq = coinvariant_quotient(datum);
    let kb = kq.canon(b.t());
    let nu = newton(datum, &b.b);
    let center: Vec<i64> = nu.iter().map(|x| x.round().to_integer() as i64).collect();
    let mut prev: Option<BestApprox> = None;
    let mut radius = 1i64;
    loop {
        let mut cands: Vec<(Vec<i64>, Vec<Q>)> = Vec::new();
        let mut off = vec![-radius; datum.rank];
        loop {
            let lam: Vec<i64> = center.iter().zip(&off).map(|(c, o)| c + o).collect();
            if kq.canon(&lam) == kb {
                let avg = sigma_average_raw(datum, &lam);
                if datum.leq_dominance(&avg, &nu) {
                    let norm = |v: &[i64]| v.iter().map(|x| x.abs()).sum::<i64>();
                    match cands.iter_mut().find(|(x, _)| cq.same(x, &lam)) {
                        Some(slot) if norm(&lam) < norm(&slot.0) => *slot = (lam, avg),
                        Some(_) => {}
                        None => cands.push((lam, avg)),
                    }
                }
            }
            if !odometer(&mut off, radius) {
                break;
            }
        }
        let maxima: Vec<&(Vec<i64>, Vec<Q>)> =
            cands.iter().filter(|(_, a)| cands.iter().all(|(_, c)| datum.leq_dominance(c, a))).collect();
        let found = match maxima.as_slice() {
            [] if cands.is_empty() => None,
            [] => return Err(Error::Invariant("no maximal candidate for ul".into())),
            [one] => Some(BestApprox {
                rep: fold(datum, &one.0),
                average: one.1.clone(),
                radius,
                candidates: cands.len(),
            }),
            _ => return Err(Error::Invariant(format!("{} maximal candidates for ul", maxima.len()))),
        };
        match (&prev, found) {
            (Some(p), Some(f)) if cq.same(&p.rep, &f.rep) => return Ok(f),
            (_, f) => prev = f,
        }
        radius += 1;
        if radius > 8 {
            return Err(Error::Limit("ul search did not stabilise".into()));
        }
    }
}

/// Advance a box odometer with entries in `[-r, r]`; false once exhausted.
pub fn odometer(v: &mut [i64], r: i64) -> bool {
    for x in v.iter_mut() {
        if *x < r {
            *x += 1;
            return true;
        }
        *x = -r;
    }
    false
}

/// `κ(t^μ) = κ(b)` and `ν(b) ≤ μ^⋄`.
pub fn adlv_nonempty(datum: &RootDatum, mu: &[i64], b: &BasicElement) -> bool {
    let kq = kottwitz_quotient(datum);
    kq.same(mu, b.t()) && datum.leq_dominance(&newton(datum, &b.b), &sigma_average(datum, mu))
}

/// `<ρ, μ − ν(b)> − defect(b)/2`.
pub fn adlv_dim(datum: &RootDatum, mu: &[i64], b: &BasicElement) -> Result<i64, Error> {
    if !adlv_nonempty(datum, mu, b) {
        return Err(Error::Precondition("X_μ(b) is empty".into()));
    }
    let nu = newton(datum, &b.b);
    let diff: Vec<Q> = to_q(mu).iter().zip(&nu).map(|(a, b)| a - b).collect();
    let val = datum.rho_pair(&diff) - Q::new(defect(datum, b) as i128, 2);
    if !val.is_integer() || val.is_negative() {
        return Err(Error::Invariant(format!("dimension formula gives {val}")));
    }
    Ok(val.to_integer() as i64)
}

/// ν is central: every root pairs to zero with it.
pub fn is_basic(datum: &RootDatum, x: &ExtAffine) -> bool {
    let nu = newton_vector(datum, x);
    datum.roots().all(|a| datum.pair_q(a, &nu).is_zero())
}
