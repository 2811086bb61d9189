//! Test-only character oracles built from a Cartan matrix alone, sharing no
//! code with the library.

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;

pub type R = Ratio<i128>;

fn r(n: i64) -> R {
    R::from_integer(n as i128)
}

/// `C[i][j] = <α_i^∨, α_j>` in Bourbaki numbering.
pub fn cartan(letter: char, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match letter {
        'A' => (1..n).for_each(|i| link(&mut c, i - 1, i)),
        'B' => {
            (1..n).for_each(|i| link(&mut c, i - 1, i));
            c[n - 1][n - 2] = -2;
        }
        'C' => {
            (1..n).for_each(|i| link(&mut c, i - 1, i));
            c[n - 2][n - 1] = -2;
        }
        'D' => {
            (1..n - 1).for_each(|i| link(&mut c, i - 1, i));
            link(&mut c, n - 3, n - 1);
        }
        _ => panic!("oracle covers A-D only"),
    }
    c
}

/// A semisimple system given by its Cartan matrix, with weights written in
/// fundamental-weight coordinates.
pub struct System {
    m: Vec<Vec<i64>>,
    half_len: Vec<R>,
    /// positive roots in simple-root coordinates
    pub positive: Vec<Vec<i64>>,
}

impl System {
    /// The dual system of `cartan(letter, n)`: its weights are the
    /// coweights of the original.
    pub fn dual_of(letter: char, n: usize) -> System {
        let c = cartan(letter, n);
        let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect();
        System::new(m)
    }

    pub fn new(m: Vec<Vec<i64>>) -> System {
        let n = m.len();
        let mut half_len: Vec<Option<R>> = vec![None; n];
        half_len[0] = Some(r(1));
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && m[i][j] != 0 {
                        if let (Some(di), None) = (half_len[i], half_len[j]) {
                            half_len[j] = Some(di * r(m[i][j]) / r(m[j][i]));
                            changed = true;
                        }
                    }
                }
            }
        }
        let half_len: Vec<R> = half_len.into_iter().map(|x| x.expect("connected diagram")).collect();
        let mut positive: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut k = 0;
        while k < positive.len() {
            let root = positive[k].clone();
            for j in 0..n {
                let mut p = 0;
                loop {
                    let mut down = root.clone();
                    down[j] -= p + 1;
                    if down.iter().all(|&x| x >= 0) && positive.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|i| root[i] * m[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = root.clone();
                    up[j] += 1;
                    if !positive.contains(&up) {
                        positive.push(up);
                    }
                }
            }
            k += 1;
        }
        System { m, half_len, positive }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// Fundamental-weight coordinates of a root given in simple-root coordinates.
    pub fn root_weight(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|j| (0..self.rank()).map(|i| c[i] * self.m[j][i]).sum()).collect()
    }

    /// `(λ, β)` for `β` in simple-root coordinates.
    fn form_root(&self, lam: &[R], beta: &[i64]) -> R {
        beta.iter().enumerate().map(|(k, &b)| r(b) * self.half_len[k] * lam[k]).sum()
    }

    /// `(λ, μ)` for two weights.
    fn form(&self, lam: &[R], mu: &[R]) -> R {
        let x = self.to_root_coords(lam);
        x.iter().enumerate().map(|(k, xk)| *xk * self.half_len[k] * mu[k]).sum()
    }

    fn to_root_coords(&self, lam: &[R]) -> Vec<R> {
        let n = self.rank();
        let mut a: Vec<Vec<R>> = (0..n)
            .map(|j| {
                let mut row: Vec<R> = (0..n).map(|k| r(self.m[j][k])).collect();
                row.push(lam[j]);
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&i| a[i][col] != r(0)).expect("invertible Cartan");
            a.swap(col, p);
            let inv = r(1) / a[col][col];
            for x in a[col].iter_mut() {
                *x *= inv;
            }
            for i in 0..n {
                if i != col && a[i][col] != r(0) {
                    let f = a[i][col];
                    for k in 0..=n {
                        let v = a[col][k];
                        a[i][k] -= f * v;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n]).collect()
    }

    fn shift(&self, lam: &[i64]) -> Vec<R> {
        lam.iter().map(|&x| r(x + 1)).collect()
    }

    /// `Σ_{β>0} <λ, β^∨>`, i.e. pairing with the sum of positive coroots.
    pub fn two_rho_check(&self, lam: &[i64]) -> i64 {
        let l: Vec<R> = lam.iter().map(|&x| r(x)).collect();
        let mut s = r(0);
        for b in &self.positive {
            let bw: Vec<R> = self.root_weight(b).iter().map(|&x| r(x)).collect();
            s += r(2) * self.form_root(&l, b) / self.form(&bw, &bw);
        }
        assert!(s.is_integer());
        *s.numer() as i64
    }

    pub fn weyl_dimension(&self, mu: &[i64]) -> u128 {
        let rho = self.shift(&vec![0; self.rank()]);
        let mr = self.shift(mu);
        let mut v = r(1);
        for b in &self.positive {
            v *= self.form_root(&mr, b) / self.form_root(&rho, b);
        }
        assert!(v.is_integer());
        *v.numer() as u128
    }

    /// Weight multiplicities of the irreducible module with highest weight `mu`.
    pub fn freudenthal(&self, mu: &[i64]) -> BTreeMap<Vec<i64>, usize> {
        let n = self.rank();
        let mr = self.shift(mu);
        let top = self.form(&mr, &mr);
        let roots_w: Vec<Vec<i64>> = self.positive.iter().map(|b| self.root_weight(b)).collect();
        let simple_w: Vec<Vec<i64>> = (0..n).map(|i| self.root_weight(&unit(n, i))).collect();
        let mut mult: HashMap<Vec<i64>, i128> = HashMap::new();
        mult.insert(mu.to_vec(), 1);
        let mut level = 1;
        loop {
            let mut any = false;
            for c in compositions(level, n) {
                let nu: Vec<i64> = (0..n).map(|j| mu[j] - (0..n).map(|i| c[i] * simple_w[i][j]).sum::<i64>()).collect();
                let nr = self.shift(&nu);
                let denom = top - self.form(&nr, &nr);
                let mut num = r(0);
                for (b, bw) in self.positive.iter().zip(&roots_w) {
                    let mut k = 1;
                    loop {
                        let up: Vec<i64> = nu.iter().zip(bw).map(|(x, y)| x + k * y).collect();
                        if (0..n).any(|i| c[i] - k * b[i] < 0) {
                            break;
                        }
                        if let Some(&m) = mult.get(&up) {
                            let ur: Vec<R> = up.iter().map(|&x| r(x)).collect();
                            num += R::from_integer(m) * self.form_root(&ur, b);
                        }
                        k += 1;
                    }
                }
                num *= r(2);
                if denom == r(0) {
                    assert_eq!(num, r(0));
                    continue;
                }
                let m = num / denom;
                assert!(m.is_integer());
                if *m.numer() > 0 {
                    mult.insert(nu, *m.numer());
                    any = true;
                }
            }
            if !any {
                break;
            }
            level += 1;
        }
        mult.into_iter().map(|(k, v)| (k, v as usize)).collect()
    }

    /// Dominant weights with `<λ, 2ρ^∨> ≤ bound`.
    pub fn dominant_upto(&self, bound: i64) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut c = vec![0i64; n];
        loop {
            if self.two_rho_check(&c) <= bound {
                out.push(c.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
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
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod sanity {
    use super::*;

    #[test]
    fn oracle_knows_small_dimensions() {
        let a2 = System::new(cartan('A', 2));
        assert_eq!(a2.positive.len(), 3);
        assert_eq!(a2.weyl_dimension(&[1, 1]), 8);
        assert_eq!(a2.freudenthal(&[1, 1]).get(&vec![0, 0]), Some(&2));
        let b2 = System::new(cartan('B', 2));
        assert_eq!(b2.positive.len(), 4);
        assert_eq!(b2.weyl_dimension(&[1, 0]), 5);
        assert_eq!(b2.weyl_dimension(&[0, 1]), 4);
        let d4 = System::new(cartan('D', 4));
        assert_eq!(d4.positive.len(), 12);
        assert_eq!(d4.weyl_dimension(&[0, 1, 0, 0]), 28);
    }
}
