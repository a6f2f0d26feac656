//! Exact Smith normal form of integer matrices.
//!
//! Sparse boundary matrices are first reduced by eliminating unit pivots in
//! machine integers (Markowitz-style pivot choice keeps fill-in small); if an
//! intermediate value overflows, the same elimination is rerun on big integers.
//! Whatever is left after all unit pivots are gone is diagonalised densely with
//! unbounded integers, pivoting on the entry of least absolute value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashSet;

/// Sparse integer matrix stored by rows; every row is sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged matrix");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) if v == 0 => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = v,
            Err(_) if v == 0 => {}
            Err(i) => row.insert(i, (c, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |e| e.0).map_or(0, |i| row[i].1)
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                out[i][j] = v;
            }
        }
        out
    }

    /// Matrix product (used for chain-complex identities in tests).
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = IntMatrix::zeros(self.nrows, other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = vec![0i64; other.ncols];
            for &(k, a) in r {
                for &(j, b) in &other.rows[k] {
                    acc[j] += a * b;
                }
            }
            out.rows[i] = acc.into_iter().enumerate().filter(|e| e.1 != 0).collect();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }
}

/// Invariant factors `d_1 | d_2 | … | d_rank` (all positive) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows: Vec<Vec<(usize, i64)>> = m.rows.clone();
    let (units, rest) = match eliminate_units::<i64>(rows, m.ncols) {
        Some(r) => r,
        None => {
            let big = m
                .rows
                .iter()
                .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
                .collect();
            eliminate_units::<BigInt>(big, m.ncols).expect("big integers cannot overflow")
        }
    };
    let mut factors: Vec<BigInt> = vec![BigInt::one(); units];
    factors.extend(dense_snf(rest));
    factors.sort();
    SmithForm { rank: factors.len(), factors }
}

trait Ring:
    Clone + Zero + One + Signed + CheckedMul + CheckedSub + PartialEq + Into<BigInt>
{
    fn is_unit(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

impl Ring for i64 {}
impl Ring for BigInt {}

/// Removes unit pivots one at a time. Returns the number eliminated and the
/// residual rows as big integers, or `None` on overflow.
fn eliminate_units<T: Ring>(
    mut rows: Vec<Vec<(usize, T)>>,
    ncols: usize,
) -> Option<(usize, Vec<Vec<(usize, BigInt)>>)> {
    let mut col_rows: Vec<FxHashSet<usize>> = vec![FxHashSet::default(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for (c, _) in r {
            col_rows[*c].insert(i);
        }
    }
    let mut alive: Vec<bool> = vec![true; rows.len()];
    let mut units = 0;
    loop {
        // Markowitz cost (row_nnz - 1) * (col_nnz - 1) over unit entries
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for (i, r) in rows.iter().enumerate() {
            if !alive[i] || r.is_empty() {
                continue;
            }
            for (c, v) in r {
                if v.is_unit() {
                    let cost = (r.len() - 1) * (col_rows[*c].len() - 1);
                    if best.is_none_or(|b| cost < b.2) {
                        best = Some((i, *c, cost));
                        if cost == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let prow = std::mem::take(&mut rows[pr]);
        let pval = prow.iter().find(|e| e.0 == pc).unwrap().1.clone();
        let targets: Vec<usize> = col_rows[pc].iter().copied().filter(|&r| r != pr).collect();
        for t in targets {
            let a = rows[t].iter().find(|e| e.0 == pc).unwrap().1.clone();
            // row_t -= (a / pval) * prow, with pval = ±1
            let factor = if pval.is_one() { a } else { -a };
            let merged = axpy(&rows[t], &prow, &factor)?;
            for (c, _) in &rows[t] {
                col_rows[*c].remove(&t);
            }
            for (c, _) in &merged {
                col_rows[*c].insert(t);
            }
            rows[t] = merged;
        }
        for (c, _) in &prow {
            col_rows[*c].remove(&pr);
        }
        alive[pr] = false;
        units += 1;
    }
    let rest = rows
        .into_iter()
        .zip(alive)
        .filter(|(r, a)| *a && !r.is_empty())
        .map(|(r, _)| r.into_iter().map(|(c, v)| (c, v.into())).collect())
        .collect();
    Some((units, rest))
}

/// `x - factor * y` for sorted sparse rows.
fn axpy<T: Ring>(x: &[(usize, T)], y: &[(usize, T)], factor: &T) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        if cx < cy {
            out.push(x[i].clone());
            i += 1;
        } else {
            let prod = factor.checked_mul(&y[j].1)?;
            let v = if cx == cy {
                let v = x[i].1.checked_sub(&prod)?;
                i += 1;
                v
            } else {
                T::zero().checked_sub(&prod)?
            };
            j += 1;
            if !v.is_zero() {
                out.push((cy, v));
            }
        }
    }
    Some(out)
}

/// Dense Smith normal form of the residual block; returns the nonzero factors.
fn dense_snf(rows: Vec<Vec<(usize, BigInt)>>) -> Vec<BigInt> {
    if rows.is_empty() {
        return Vec::new();
    }
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let nr = rows.len();
    let nc = cols.len();
    let mut a = vec![vec![BigInt::zero(); nc]; nr];
    for (i, r) in rows.into_iter().enumerate() {
        for (c, v) in r {
            let j = cols.binary_search(&c).unwrap();
            a[i][j] = v;
        }
    }
    let mut factors = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // pivot: least nonzero absolute value in the trailing block
        let mut piv: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero()
                    && piv.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..nc {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for i in t..nr {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remainder in row/column t into the pivot
                let mut best = (t, t);
                for i in t..nr {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..nc {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..nc {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    factors
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    assert!(p >= 2);
    let mut rows: Vec<Vec<(usize, u64)>> = m
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
                .filter(|e| e.1 != 0)
                .collect()
        })
        .filter(|r: &Vec<(usize, u64)>| !r.is_empty())
        .collect();
    // pivot on the leading column of each row, keeping rows sorted
    let mut pivots: rustc_hash::FxHashMap<usize, Vec<(usize, u64)>> = Default::default();
    let mut rank = 0;
    while let Some(mut r) = rows.pop() {
        loop {
            let Some(&(c, v)) = r.first() else { break };
            match pivots.get(&c) {
                Some(pr) => {
                    // r -= v * pr  (pr normalised to leading 1)
                    r = sub_scaled_mod(&r, pr, v, p);
                }
                None => {
                    let inv = mod_inv(v, p);
                    let norm: Vec<(usize, u64)> =
                        r.iter().map(|&(c, x)| (c, x * inv % p)).collect();
                    pivots.insert(c, norm);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn sub_scaled_mod(x: &[(usize, u64)], y: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        if cx < cy {
            out.push(x[i]);
            i += 1;
        } else {
            let s = f * y[j].1 % p;
            let v = if cx == cy {
                let v = (x[i].1 + p - s) % p;
                i += 1;
                v
            } else {
                (p - s) % p
            };
            j += 1;
            if v != 0 {
                out.push((cy, v));
            }
        }
    }
    out
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Converts factors to machine integers where they fit (for display and tests).
pub fn factors_u64(f: &[BigInt]) -> Vec<u64> {
    f.iter().map(|x| x.to_u64().expect("factor too large")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> (Vec<u64>, usize) {
        let s = smith_normal_form(&IntMatrix::from_dense(rows));
        (factors_u64(&s.factors), s.rank)
    }

    #[test]
    fn small_cases() {
        assert_eq!(snf(&[vec![2]]), (vec![2], 1));
        assert_eq!(snf(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), (vec![1, 1, 1], 3));
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), (vec![2, 4], 2));
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), (vec![], 0));
    }

    #[test]
    fn divisibility_is_enforced() {
        // diag(2, 3) ~ diag(1, 6)
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 2));
        assert_eq!(snf(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]), (vec![2, 2, 60], 3));
    }

    #[test]
    fn rank_mod_p_matches() {
        let m = IntMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // unit pivots whose elimination squares entries repeatedly
        let big = 3_000_000_000i64;
        let m = IntMatrix::from_dense(&[
            vec![1, big, 0],
            vec![big, 0, big],
            vec![0, big, 1],
        ]);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank, 3);
        // |det| = 2 * big^2
        let prod: BigInt = s.factors.iter().product();
        assert_eq!(prod, BigInt::from(2) * BigInt::from(big) * BigInt::from(big));
    }
}
