//! Exact linear algebra over ℤ and ℚ: dense integer matrices, Smith normal
//! form, lattice quotients and rational row reduction.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = Ratio<i128>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(n as i128, d as i128)
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Integer vector if every entry is integral.
pub fn to_int(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.is_integer().then(|| i64::try_from(*x.numer()).ok()).flatten())
        .collect()
}

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn dot_q(x: &[i64], y: &[Q]) -> Q {
    x.iter().zip(y).fold(Q::zero(), |acc, (a, b)| acc + q(*a) * b)
}

pub fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(x: &[i64], c: i64) -> Vec<i64> {
    x.iter().map(|a| a * c).collect()
}

pub fn sub_q(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend_from_slice(row);
        }
        IMat { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(rows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for i in 0..rows {
                m.data[i * cols.len() + j] = col[i];
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn apply_q(&self, v: &[Q]) -> Vec<Q> {
        (0..self.rows).map(|i| dot_q(self.row(i), v)).collect()
    }

    /// Row vector times matrix: `x^T M`.
    pub fn left_apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += xi * self.get(i, j);
            }
        }
        out
    }

    pub fn transpose(&self) -> IMat {
        let mut t = IMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn sub(&self, other: &IMat) -> IMat {
        IMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    /// Multiplicative order of a square matrix of finite order (panics past `cap`).
    pub fn order(&self, cap: usize) -> usize {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return k;
            }
            p = p.mul(self);
        }
        panic!("matrix order exceeds {cap}");
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> IMat {
        let s = smith(self);
        assert!(
            s.rank == self.rows && s.diag.iter().all(|&d| d == 1),
            "matrix is not unimodular"
        );
        // U A V = I  =>  A^{-1} = V U
        s.v.mul(&s.u)
    }
}

/// Smith normal form `U A V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IMat,
    pub u_inv: IMat,
    pub v: IMat,
    /// Nonzero diagonal entries of D, positive and successively dividing.
    pub diag: Vec<i64>,
    pub rank: usize,
}

pub fn smith(a: &IMat) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut d: Vec<Vec<i128>> =
        (0..m).map(|i| (0..n).map(|j| a.get(i, j) as i128).collect()).collect();
    let id = |k: usize| -> Vec<Vec<i128>> {
        (0..k).map(|i| (0..k).map(|j| i128::from(i == j)).collect()).collect()
    };
    let mut u = id(m);
    let mut ui = id(m);
    let mut v = id(n);
    let mut rank = 0;
    let mut t = 0;
    while t < m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in ui.iter_mut() {
            row.swap(t, pi);
        }
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..m {
            let f = Integer::div_floor(&d[i][t], &d[t][t]);
            if f != 0 {
                for j in 0..n {
                    d[i][j] -= f * d[t][j];
                }
                for j in 0..m {
                    u[i][j] -= f * u[t][j];
                }
                for row in ui.iter_mut() {
                    row[t] += f * row[i];
                }
            }
            if d[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..n {
            let f = Integer::div_floor(&d[t][j], &d[t][t]);
            if f != 0 {
                for row in d.iter_mut() {
                    row[j] -= f * row[t];
                }
                for row in v.iter_mut() {
                    row[j] -= f * row[t];
                }
            }
            if d[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        let piv = d[t][t];
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[i][j] % piv != 0));
        if let Some(i) = bad {
            for j in 0..n {
                d[t][j] += d[i][j];
            }
            for j in 0..m {
                u[t][j] += u[i][j];
            }
            for row in ui.iter_mut() {
                row[i] -= row[t];
            }
            continue;
        }
        if piv < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
            for row in ui.iter_mut() {
                row[t] = -row[t];
            }
        }
        rank += 1;
        t += 1;
    }
    let conv = |x: Vec<Vec<i128>>, r: usize, c: usize| IMat {
        rows: r,
        cols: c,
        data: x
            .into_iter()
            .flatten()
            .map(|e| i64::try_from(e).expect("Smith transform entry overflows i64"))
            .collect(),
    };
    let diag = (0..rank).map(|i| d[i][i] as i64).collect();
    Smith { u: conv(u, m, m), u_inv: conv(ui, m, m), v: conv(v, n, n), diag, rank }
}

/// Integer solutions of `A x = c`: a particular solution and a basis of the
/// kernel lattice, or `None` if no integer solution exists.
pub fn solve_int(a: &IMat, c: &[i64]) -> Option<(Vec<i64>, Vec<Vec<i64>>)> {
    let s = smith(a);
    let uc = s.u.apply(c);
    let mut y = vec![0i64; a.cols];
    for (i, &ucv) in uc.iter().enumerate() {
        if i < s.rank {
            if ucv % s.diag[i] != 0 {
                return None;
            }
            y[i] = ucv / s.diag[i];
        } else if ucv != 0 {
            return None;
        }
    }
    let x = s.v.apply(&y);
    let kernel = (s.rank..a.cols).map(|j| s.v.col(j)).collect();
    Some((x, kernel))
}

/// Basis of the integer kernel lattice of `A`.
pub fn kernel_int(a: &IMat) -> Vec<Vec<i64>> {
    let s = smith(a);
    (s.rank..a.cols).map(|j| s.v.col(j)).collect()
}

/// The quotient `ℤ^n / L` for a lattice `L` given by generators, with a
/// canonical coordinate vector per coset.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    pub dim: usize,
    smith: Smith,
}

impl LatticeQuotient {
    pub fn new(dim: usize, gens: &[Vec<i64>]) -> Self {
        let m = if gens.is_empty() { IMat::zeros(dim, 1) } else { IMat::from_cols(dim, gens) };
        LatticeQuotient { dim, smith: smith(&m) }
    }

    /// Canonical coordinates: torsion parts reduced modulo their orders,
    /// free parts verbatim, trivial factors dropped.
    pub fn canon(&self, y: &[i64]) -> Vec<i64> {
        let u = self.smith.u.apply(y);
        let mut out = Vec::new();
        for (i, x) in u.into_iter().enumerate() {
            if i < self.smith.rank {
                let d = self.smith.diag[i];
                if d != 1 {
                    out.push(x.rem_euclid(d));
                }
            } else {
                out.push(x);
            }
        }
        out
    }

    pub fn same(&self, a: &[i64], b: &[i64]) -> bool {
        self.canon(&sub(a, b)).iter().all(|&x| x == 0)
    }

    /// Orders of the nontrivial cyclic factors (0 for a free factor).
    pub fn invariants(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.smith.diag.iter().copied().filter(|&d| d != 1).collect();
        out.extend(std::iter::repeat_n(0, self.dim - self.smith.rank));
        out
    }

    pub fn is_finite(&self) -> bool {
        self.smith.rank == self.dim
    }

    /// Lift of a canonical coordinate vector back to `ℤ^n`.
    pub fn lift(&self, coords: &[i64]) -> Vec<i64> {
        let mut u = vec![0i64; self.dim];
        let mut k = 0;
        for (i, ui) in u.iter_mut().enumerate() {
            if i < self.smith.rank && self.smith.diag[i] == 1 {
                continue;
            }
            *ui = coords[k];
            k += 1;
        }
        self.smith.u_inv.apply(&u)
    }

    /// All cosets of a finite quotient, as lifts.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        assert!(self.is_finite(), "quotient is infinite");
        let inv = self.invariants();
        let mut out = vec![vec![]];
        for &d in &inv {
            let mut next = Vec::new();
            for prefix in &out {
                for x in 0..d {
                    let mut p = prefix.clone();
                    p.push(x);
                    next.push(p);
                }
            }
            out = next;
        }
        out.iter().map(|c| self.lift(c)).collect()
    }
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_q(a: &[Vec<Q>]) -> usize {
    let mut m = a.to_vec();
    rref(&mut m).len()
}

/// One rational solution of `A x = b`, if any (free variables set to 0).
pub fn solve_q(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Q>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().copied().chain([*bi]).collect()).collect();
    let piv = rref(&mut m);
    if piv.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = m[r][cols];
    }
    Some(x)
}

/// Basis of the rational kernel of `A` (with `cols` columns).
pub fn kernel_q(a: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = a.to_vec();
    let piv = rref(&mut m);
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[f] = Q::one();
        for (r, &c) in piv.iter().enumerate() {
            v[c] = -m[r][f];
        }
        out.push(v);
    }
    out
}

/// Scale a rational vector to a primitive integer vector with the same direction.
pub fn primitive(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * Q::from_integer(l)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    let g = if g == 0 { 1 } else { g };
    ints.iter().map(|x| i64::try_from(x / g).expect("overflow")).collect()
}

pub fn is_nonneg(v: &[Q]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_is_a_factorisation() {
        let a = IMat::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith(&a);
        let d = s.u.mul(&a).mul(&s.v);
        assert_eq!(s.diag, vec![2, 6, 12]);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diag[i] } else { 0 };
                assert_eq!(d.get(i, j), want);
            }
        }
        assert!(s.u.mul(&s.u_inv).is_identity());
    }

    #[test]
    fn integer_solve_and_kernel() {
        // x + y = 3, kernel spanned by (1,-1)
        let a = IMat::from_rows(&[vec![1, 1]]);
        let (x, k) = solve_int(&a, &[3]).unwrap();
        assert_eq!(x[0] + x[1], 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0] + k[0][1], 0);
        let b = IMat::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert!(solve_int(&b, &[1, 0]).is_none());
    }

    #[test]
    fn quotient_by_coroots_of_gl2() {
        let lq = LatticeQuotient::new(2, &[vec![1, -1]]);
        assert_eq!(lq.invariants(), vec![0]);
        assert!(lq.same(&[1, 0], &[0, 1]));
        assert!(!lq.same(&[1, 0], &[1, 1]));
        let a2 = LatticeQuotient::new(2, &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.invariants(), vec![3]);
        assert_eq!(a2.elements().len(), 3);
        for e in a2.elements() {
            assert_eq!(a2.canon(&a2.lift(&a2.canon(&e))), a2.canon(&e));
        }
    }

    #[test]
    fn rational_solve() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve_q(&a, &[q(1), q(0)]).unwrap();
        assert_eq!(x, vec![qfrac(1, 2), qfrac(1, 2)]);
        assert!(solve_q(&[vec![q(1), q(1)], vec![q(2), q(2)]], &[q(1), q(3)]).is_none());
        assert_eq!(kernel_q(&[vec![q(1), q(1)]], 2).len(), 1);
        assert_eq!(primitive(&[qfrac(1, 2), qfrac(-1, 3)]), vec![3, -2]);
    }
}
