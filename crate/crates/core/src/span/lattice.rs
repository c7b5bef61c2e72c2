//! Integer lattice normal forms and mod-2 elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by some input rows.
///
/// `basis[k]` has its leading nonzero entry (positive) in column `pivots[k]`,
/// entries above each pivot lie in `[0, pivot)`, and
/// `basis[k] = Σ_j transform[k][j] · rows[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub columns: usize,
    pub basis: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub transform: Vec<Vec<BigInt>>,
}

fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Hermite normal form with a transform certificate. Rows must share one length;
/// `columns` is used when `rows` is empty.
pub fn hermite_form(rows: &[Vec<BigInt>], columns: usize) -> HermiteForm {
    let m = rows.len();
    let n = rows.first().map(|r| r.len()).unwrap_or(columns);
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(best) = best else { break };
            a.swap(r, best);
            u.swap(r, best);
            let mut done = true;
            for i in r + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[r][col]);
                let (head, tail) = a.split_at_mut(i);
                axpy(&mut tail[0], &q, &head[r]);
                let (uh, ut) = u.split_at_mut(i);
                axpy(&mut ut[0], &q, &uh[r]);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[col].is_zero()) {
            continue;
        }
        if a[r][col].is_negative() {
            for v in a[r].iter_mut().chain(u[r].iter_mut()) {
                *v = -&*v;
            }
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = a.split_at_mut(r);
            axpy(&mut head[i], &q, &tail[0]);
            let (uh, ut) = u.split_at_mut(r);
            axpy(&mut uh[i], &q, &ut[0]);
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    u.truncate(r);
    HermiteForm {
        columns: n,
        basis: a,
        pivots,
        transform: u,
    }
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `x` by the basis. Returns the remainder and the basis coefficients used.
    pub fn reduce(&self, x: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut rem = x.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.basis.len()];
        for (k, &col) in self.pivots.iter().enumerate() {
            let q = rem[col].div_floor(&self.basis[k][col]);
            axpy(&mut rem, &q, &self.basis[k]);
            coeffs[k] = q;
        }
        (rem, coeffs)
    }

    /// Coefficients over the original input rows, when `x` lies in the lattice.
    pub fn solve(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let (rem, coeffs) = self.reduce(x);
        if rem.iter().any(|v| !v.is_zero()) {
            return None;
        }
        let m = self.transform.first().map(|r| r.len()).unwrap_or(0);
        let mut out = vec![BigInt::zero(); m];
        for (q, row) in coeffs.iter().zip(&self.transform) {
            if q.is_zero() {
                continue;
            }
            for (o, u) in out.iter_mut().zip(row) {
                *o += q * u;
            }
        }
        Some(out)
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.reduce(x).0.iter().all(|v| v.is_zero())
    }
}

/// Invariant factors of `Z^columns / rowspan`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithInvariants {
    /// Nonzero diagonal entries, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub columns: usize,
}

impl SmithInvariants {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    pub fn free_rank(&self) -> usize {
        self.columns - self.diagonal.len()
    }

    /// Torsion orders greater than 1, sorted by divisibility.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_invariants(rows: &[Vec<BigInt>], columns: usize) -> SmithInvariants {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|v| !v.is_zero())).cloned().collect();
    let m = a.len();
    let n = columns;
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < m && t < n {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                axpy(&mut tail[0][t..], &q, &head[t][t..]);
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let s = row[t].clone();
                    if !s.is_zero() {
                        row[j] -= &q * s;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            let p = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_zero() && !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(&tail[0]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
        t += 1;
    }
    SmithInvariants { diagonal, columns }
}

/// A reduced echelon basis of a subspace of `F_2^n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct F2Echelon {
    rows: Vec<(usize, Vec<bool>)>,
}

impl F2Echelon {
    pub fn new<I: IntoIterator<Item = Vec<bool>>>(vectors: I) -> Self {
        let mut e = F2Echelon::default();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, v: &[bool]) -> Vec<bool> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v.get(*p).copied().unwrap_or(false) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x ^= y;
                }
            }
        }
        v
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vec<bool>) -> bool {
        let v = self.reduce(&v);
        let Some(p) = v.iter().position(|&b| b) else {
            return false;
        };
        for (_, row) in self.rows.iter_mut() {
            if row.get(p).copied().unwrap_or(false) {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x ^= y;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
