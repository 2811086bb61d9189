//! Superbasic `b = ω^m` for `GL_n^d` with the Frobenius that shifts factors
//! and `b` sitting in the last factor.
//!
//! For `λ ∈ A_{μ,b}` each factor gets the decreasing arrangement
//! `a_{τ,1} > ⋯ > a_{τ,n}` of `{i + n λ_τ(i)}`; consecutive rows are matched
//! modulo `n` by permutations `w_τ`, and the defect of the match is `λ♭`.

use num_integer::Integer;
use serde::Serialize;

use super::Context;
use crate::affine::{epsilon_of, BasicElement};
use crate::linalg::{solve_int, to_q};
use crate::rootdata::{permutation_of, RootDatum};
use crate::Error;

/// A fixed `(n, d, m)` together with its product datum and `b`.
pub struct Superbasic {
    pub n: usize,
    pub d: usize,
    pub m: i64,
    pub datum: RootDatum,
    pub b: BasicElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuperbasicTable {
    pub n: usize,
    pub d: usize,
    pub m: i64,
    /// Dominant tuple `μ_•`, flattened.
    pub mu: Vec<i64>,
    pub lambda: Vec<Vec<i64>>,
    /// `a_{τ,i}`, rows decreasing.
    pub a: Vec<Vec<i64>>,
    /// `ε_τ` in one-line notation, 1-based.
    pub eps: Vec<Vec<usize>>,
    /// `w_τ` in one-line notation, 1-based.
    pub w: Vec<Vec<usize>>,
    pub flat: Vec<Vec<i64>>,
    pub lengths: Vec<usize>,
    /// `−ℓ(w_λ) + <ρ_•, μ_• − λ♭_•>`.
    pub dim_value: i64,
    pub r_count: usize,
    pub adlv_dim: i64,
    pub is_top: bool,
    /// `ℓ(w_λ) = n−1` and `w_d ⋯ w_1` is a Coxeter element.
    pub coxeter: bool,
    /// `Σ_τ λ♭_τ = λ_{m,n}`.
    pub flat_sum_ok: bool,
    /// Partial sums `Σ_{k=τ+1}^{ι} <α_i, λ♭_k>` over `i ∈ supp(w_τ)` are `≥ 0`.
    pub nonneg_ok: bool,
}

/// `λ_{m,n}(i) = ⌊im/n⌋ − ⌊(i−1)m/n⌋`.
pub fn lambda_mn(m: i64, n: usize) -> Vec<i64> {
    let n = n as i64;
    (1..=n).map(|i| Integer::div_floor(&(i * m), &n) - Integer::div_floor(&((i - 1) * m), &n)).collect()
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// `i ∈ supp(w)` (0-based `i` for `α_{i+1}`) iff `w` moves `{0..=i}` off itself.
fn support(p: &[usize]) -> Vec<usize> {
    (0..p.len().saturating_sub(1)).filter(|&i| p[..=i].iter().any(|&x| x > i)).collect()
}

impl Superbasic {
    pub fn new(n: usize, d: usize, m: i64) -> Result<Superbasic, Error> {
        if n < 2 || d < 1 {
            return Err(Error::Precondition("need n ≥ 2 and d ≥ 1".into()));
        }
        if m.gcd(&(n as i64)) != 1 {
            return Err(Error::Precondition(format!("m = {m} is not coprime to n = {n}")));
        }
        let label = if d == 1 { format!("A{}:gl", n - 1) } else { format!("A{}:gl:d={d}", n - 1) };
        let datum = RootDatum::build(&label.parse()?)?;
        let b = BasicElement::parse(&datum, &m.to_string())?;
        Ok(Superbasic { n, d, m, datum, b })
    }

    /// Dominant minuscule tuples `(1^{k_τ}, 0^{n−k_τ})` with `Σ k_τ = m`.
    pub fn minuscule_tuples(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut ks = vec![0usize; self.d];
        loop {
            if ks.iter().sum::<usize>() as i64 == self.m {
                out.push(ks.iter().flat_map(|&k| (0..self.n).map(move |i| i64::from(i < k))).collect());
            }
            let mut i = 0;
            loop {
                if i == self.d {
                    return out;
                }
                if ks[i] < self.n {
                    ks[i] += 1;
                    break;
                }
                ks[i] = 0;
                i += 1;
            }
        }
    }

    /// All of `A_{μ,b}` modulo the centre: one solution per `η ∈ W₀μ`.
    pub fn enumerate(&self, mu: &[i64]) -> Vec<Vec<i64>> {
        let r = self.datum.rank;
        let mut fm1 = self.b.f.clone();
        for i in 0..r {
            fm1.set(i, i, fm1.get(i, i) - 1);
        }
        let mut out = Vec::new();
        for eta in self.datum.weyl_orbit(mu) {
            let rhs: Vec<i64> = eta.iter().zip(self.b.t()).map(|(e, t)| e - t).collect();
            if let Some((x, _)) = solve_int(&fm1, &rhs) {
                let c = Integer::div_floor(&x.iter().sum::<i64>(), &(r as i64));
                out.push(x.iter().map(|v| v - c).collect());
            }
        }
        out
    }

    pub fn context(&self, mu: &[i64]) -> Result<Context<'_>, Error> {
        Context::new(&self.datum, mu, self.b.clone())
    }

    /// The table for a flattened tuple `λ`.
    pub fn table(&self, lambda: &[i64]) -> Result<SuperbasicTable, Error> {
        let (_, nat) = self.b.natural_dagger(lambda);
        let mu = self.datum.dominant_rep(&nat).0;
        let ctx = self.context(&mu)?;
        self.table_in(&ctx, lambda)
    }

    /// The table for `λ ∈ A_{μ,b}` with `μ` fixed by `ctx`.
    pub fn table_in(&self, ctx: &Context<'_>, lambda: &[i64]) -> Result<SuperbasicTable, Error> {
        let (n, d, m) = (self.n, self.d, self.m);
        let nn = n as i64;
        if lambda.len() != n * d {
            return Err(Error::Parse(format!("λ needs {} entries", n * d)));
        }
        if !ctx.in_a(lambda) {
            return Err(Error::Precondition(format!("λ = {lambda:?} is not in A_{{μ,b}}")));
        }
        let rows: Vec<Vec<i64>> = lambda.chunks(n).map(<[i64]>::to_vec).collect();
        let mut a = Vec::with_capacity(d);
        let mut eps = Vec::with_capacity(d);
        for row in &rows {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&i| std::cmp::Reverse(i as i64 + 1 + nn * row[i]));
            a.push(idx.iter().map(|&i| i as i64 + 1 + nn * row[i]).collect::<Vec<_>>());
            eps.push(idx);
        }
        let eps_check = permutation_of(&epsilon_of(&self.datum, lambda));
        for (t, e) in eps.iter().enumerate() {
            for i in 0..n {
                if eps_check[t * n + i] != t * n + e[i] {
                    return Err(Error::Invariant("decreasing sort disagrees with ε_λ".into()));
                }
            }
        }
        let mut w = vec![vec![0usize; n]; d];
        let mut flat = vec![vec![0i64; n]; d];
        for t in 0..d {
            let (next, shift) = if t + 1 < d { (&a[t + 1], 0) } else { (&a[0], m) };
            for i in 0..n {
                let target = a[t][i] - shift;
                let j = (0..n)
                    .find(|&j| (next[j] - target).rem_euclid(nn) == 0)
                    .ok_or_else(|| Error::Invariant("row matching failed".into()))?;
                w[t][i] = j;
                let num = next[j] - a[t][i] + shift;
                if num % nn != 0 {
                    return Err(Error::Invariant("λ♭ is not integral".into()));
                }
                flat[t][i] = num / nn;
            }
            let mut seen = w[t].clone();
            seen.sort_unstable();
            if seen != (0..n).collect::<Vec<_>>() {
                return Err(Error::Invariant("w_τ is not a permutation".into()));
            }
        }
        let flat_all: Vec<i64> = flat.concat();
        if flat_all != ctx.lambda_flat(lambda) {
            return Err(Error::Invariant(format!("table λ♭ {flat_all:?} differs from ε_λ^{{-1}}(λ♮)")));
        }
        let lengths: Vec<usize> = w.iter().map(|p| inversions(p)).collect();
        let total_len: usize = lengths.iter().sum();
        let diff: Vec<i64> = ctx.mu.iter().zip(&flat_all).map(|(x, y)| x - y).collect();
        let rho = self.datum.rho_pair(&to_q(&diff));
        if !rho.is_integer() {
            return Err(Error::Invariant("<ρ, μ − λ♭> is not integral".into()));
        }
        let dim_value = rho.to_integer() as i64 - total_len as i64;
        let r_count = ctx.r_set(lambda).len();
        let adlv_dim = ctx.dim.ok_or_else(|| Error::Invariant("λ ∈ A but X_μ(b) is empty".into()))?;

        // w_d ⋯ w_1, with w_1 applied first.
        let mut prod: Vec<usize> = (0..n).collect();
        for p in &w {
            prod = prod.iter().map(|&x| p[x]).collect();
        }
        let coxeter = total_len == n - 1 && inversions(&prod) == n - 1 && support(&prod).len() == n - 1;
        let mut sum = vec![0i64; n];
        for f in &flat {
            for (s, x) in sum.iter_mut().zip(f) {
                *s += x;
            }
        }
        let flat_sum_ok = sum == lambda_mn(m, n);
        let mut nonneg_ok = true;
        for t in 0..d.saturating_sub(1) {
            for i in support(&w[t]) {
                let mut acc = 0;
                for f in &flat[t + 1..] {
                    acc += f[i] - f[i + 1];
                    nonneg_ok &= acc >= 0;
                }
            }
        }
        let one_based = |v: &Vec<Vec<usize>>| v.iter().map(|p| p.iter().map(|x| x + 1).collect()).collect();
        Ok(SuperbasicTable {
            n,
            d,
            m,
            mu: ctx.mu.clone(),
            lambda: rows,
            a,
            eps: one_based(&eps),
            w: one_based(&w),
            flat,
            lengths,
            dim_value,
            r_count,
            adlv_dim,
            is_top: r_count as i64 == adlv_dim,
            coxeter,
            flat_sum_ok,
            nonneg_ok,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_worked_example() {
        let s = Superbasic::new(2, 1, 1).unwrap();
        let t = s.table(&[0, 0]).unwrap();
        assert_eq!(t.a, vec![vec![2, 1]]);
        assert_eq!(t.eps, vec![vec![2, 1]]);
        assert_eq!(t.flat, vec![vec![0, 1]]);
        assert_eq!(t.w, vec![vec![2, 1]]);
        assert_eq!(t.lengths, vec![1]);
        assert!(t.is_top && t.coxeter && t.flat_sum_ok);
        assert_eq!(t.dim_value, 0);
    }

    #[test]
    fn lambda_mn_values() {
        assert_eq!(lambda_mn(1, 2), vec![0, 1]);
        assert_eq!(lambda_mn(1, 3), vec![0, 0, 1]);
        assert_eq!(lambda_mn(2, 3), vec![0, 1, 1]);
        assert_eq!(lambda_mn(3, 4), vec![0, 1, 1, 1]);
        assert_eq!(lambda_mn(5, 3).iter().sum::<i64>(), 5);
    }

    #[test]
    fn gl3_dimension_identity() {
        let s = Superbasic::new(3, 1, 1).unwrap();
        let mu = [1, 0, 0];
        let ctx = s.context(&mu).unwrap();
        let all = s.enumerate(&mu);
        assert_eq!(all.len(), 3);
        for l in &all {
            let t = s.table_in(&ctx, l).unwrap();
            assert_eq!(t.dim_value, t.r_count as i64);
            if t.is_top {
                assert!(t.coxeter && t.flat_sum_ok && t.nonneg_ok);
            }
        }
        let t = s.table(&[0, 0, 0]).unwrap();
        assert_eq!(t.flat, vec![vec![0, 0, 1]]);
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(Superbasic::new(4, 1, 2).is_err());
    }
}
