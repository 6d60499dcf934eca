//! Counting pop-stacked permutations by the shape of their last run.
//!
//! A slice holds every `p_{n,k;a,b,c}` for one size `n`, laid out so that
//! each column `(a, c)` with `a < c` is contiguous in `b`: entry `b = a` is
//! a last run of length two and entries `b > a` are longer runs. Last runs
//! of length one (`a = b = c`) are kept apart. Each cell is a vector over
//! `k` when run counts are tracked and a single number otherwise.
//!
//! The slice for `n` needs only the slices for `n - 1` and `n - 2`:
//!
//! * `p_{n;A,A,A}   = sum_{a<A} d_{n-1,a,A}`                       (shift k)
//! * `p_{n;A,A,C}   = p_{n-1;A,A,A} + sum_{a=A}^{C-2} d_{n-2,a,a}`  (sum shifts k)
//! * `p_{n;A,A+1,C} = p_{n-1;A,A,C-1}`
//! * `p_{n;A,B,C}   = p_{n;A,B-1,C} + p_{n-1;A,B-1,C-1}`            for `B > A+1`
//!
//! where `d_{n,a,A} = sum_b sum_{c>=A} p_{n;a,b,c}` is accumulated backwards
//! from `A = n`. Every big-integer cell addition is tallied.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::tree::StateKey;
use crate::par::Exec;

type Cell = Vec<BigUint>;

fn col_index(a: usize, c: usize) -> usize {
    (c - 1) * (c - 2) / 2 + (a - 1)
}

/// `dst[k + shift] += src[k]`; returns the number of additions (one per cell).
fn add_into(dst: &mut [BigUint], src: &[BigUint], shift: usize) -> u64 {
    for (d, s) in dst[shift..].iter_mut().zip(src) {
        if !s.is_zero() {
            *d += s;
        }
    }
    1
}

#[derive(Debug, Clone)]
struct Slice {
    n: usize,
    single: Vec<Cell>,
    cols: Vec<Vec<Cell>>,
    /// `d[a-1][A-a-1]` for `A` in `a+1..=n`.
    d: Vec<Vec<Cell>>,
    /// `tot[a-1] = d_{n,a,a}`: everything whose last run starts at `a`.
    tot: Vec<Cell>,
}

impl Slice {
    fn empty(n: usize, kdim: usize) -> Slice {
        let zero = vec![BigUint::zero(); kdim];
        Slice {
            n,
            single: vec![zero.clone(); n],
            cols: (2..=n)
                .flat_map(|c| (1..c).map(move |a| (a, c)))
                .map(|(a, c)| vec![zero.clone(); c - a])
                .collect(),
            d: (1..=n).map(|a| vec![zero.clone(); n - a]).collect(),
            tot: vec![zero; n],
        }
    }

    fn cell(&self, a: usize, b: usize, c: usize) -> Option<&Cell> {
        if a == 0 || c > self.n || !(a <= b && b <= c) {
            return None;
        }
        if a == c {
            return (a == b).then(|| &self.single[a - 1]);
        }
        if b == c {
            return None;
        }
        Some(&self.cols[col_index(a, c)][b - a])
    }

    fn d_at(&self, a: usize, big_a: usize) -> Option<&Cell> {
        if a == 0 || a > self.n {
            return None;
        }
        if big_a <= a {
            Some(&self.tot[a - 1])
        } else {
            self.d[a - 1].get(big_a - a - 1)
        }
    }

    /// Fills `d` and `tot` from `single` and `cols`.
    fn accumulate(&mut self, exec: Exec, kdim: usize) -> u64 {
        let n = self.n;
        let single = &self.single;
        let cols = &self.cols;
        let rows: Vec<(Vec<Cell>, Cell, u64)> = exec.map_range(n, |i| {
            let a = i + 1;
            let mut adds = 0;
            let mut row = vec![vec![BigUint::zero(); kdim]; n - a];
            let mut acc = vec![BigUint::zero(); kdim];
            for big_a in (a + 1..=n).rev() {
                for entry in &cols[col_index(a, big_a)] {
                    adds += add_into(&mut acc, entry, 0);
                }
                row[big_a - a - 1] = acc.clone();
            }
            adds += add_into(&mut acc, &single[a - 1], 0);
            (row, acc, adds)
        });
        let mut adds = 0;
        for (i, (row, tot, a)) in rows.into_iter().enumerate() {
            self.d[i] = row;
            self.tot[i] = tot;
            adds += a;
        }
        adds
    }

    fn total(&self, kdim: usize) -> (Cell, u64) {
        let mut acc = vec![BigUint::zero(); kdim];
        let mut adds = 0;
        for t in &self.tot {
            adds += add_into(&mut acc, t, 0);
        }
        (acc, adds)
    }
}

fn base_slice(n: usize, kdim: usize) -> Slice {
    let mut s = Slice::empty(n, kdim);
    let k1 = if kdim > 1 { 1 } else { 0 };
    match n {
        1 => s.single[0][k1] = BigUint::from(1u8),
        2 => s.cols[col_index(1, 2)][0][k1] = BigUint::from(1u8),
        _ => unreachable!("only sizes 1 and 2 are roots"),
    }
    s
}

fn next_slice(exec: Exec, prev: &Slice, prev2: &Slice, kdim: usize) -> (Slice, u64) {
    let n = prev.n + 1;
    let shift = usize::from(kdim > 1);
    let mut s = Slice::empty(n, kdim);
    let mut adds = 0;

    for big_a in 1..n {
        let cell = &mut s.single[big_a - 1];
        for a in 1..big_a {
            adds += add_into(cell, prev.d_at(a, big_a).expect("a < A < n"), shift);
        }
    }

    let cols: Vec<(usize, usize)> = (2..=n).flat_map(|c| (1..c).map(move |a| (a, c))).collect();
    let built: Vec<(Vec<Cell>, u64)> = exec.map_range(cols.len(), |idx| {
        let (a, c) = cols[idx];
        let mut adds = 0;
        let mut col = Vec::with_capacity(c - a);
        let mut pair = prev.single[a - 1].clone();
        for x in a..=c.saturating_sub(2) {
            adds += add_into(&mut pair, &prev2.tot[x - 1], shift);
        }
        adds += 1;
        col.push(pair);
        if c > a + 1 {
            let below = &prev.cols[col_index(a, c - 1)];
            col.push(below[0].clone());
            for b in a + 2..c {
                let mut cell = col[b - 1 - a].clone();
                adds += add_into(&mut cell, &below[b - 1 - a], 0);
                col.push(cell);
            }
        }
        (col, adds)
    });
    for (i, (col, a)) in built.into_iter().enumerate() {
        s.cols[i] = col;
        adds += a;
    }
    adds += s.accumulate(exec, kdim);
    (s, adds)
}

/// Output of [`count_popstacked`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    /// `p[n]` for `0 <= n <= N`; `p[0] = 1` counts the empty permutation.
    pub p: Vec<BigUint>,
    /// `triangle[n][k] = p_{n,k}`, present when run counts were tracked.
    pub triangle: Option<Vec<Vec<BigUint>>>,
    /// Big-integer cell additions performed by the recurrence.
    pub additions: u64,
}

impl Counts {
    /// `n,k,p_{n,k}` lines for `1 <= k <= n <= N`.
    pub fn triangle_csv(&self) -> Option<String> {
        let t = self.triangle.as_ref()?;
        let mut out = String::from("n,k,count\n");
        for (n, row) in t.iter().enumerate().skip(1) {
            for (k, v) in row.iter().enumerate().take(n + 1).skip(1) {
                out.push_str(&format!("{n},{k},{v}\n"));
            }
        }
        Some(out)
    }

    /// One `n p(n)` pair per line, starting at `n = 1`.
    pub fn bfile(&self) -> String {
        self.p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, v)| format!("{n} {v}\n"))
            .collect()
    }
}

/// All slices for sizes `1..=N`, for inspection of individual cells.
#[derive(Debug, Clone)]
pub struct CountTable {
    slices: Vec<Slice>,
    with_runs: bool,
}

impl CountTable {
    pub fn max_n(&self) -> usize {
        self.slices.len()
    }

    pub fn with_runs(&self) -> bool {
        self.with_runs
    }

    fn slice(&self, n: usize) -> Option<&Slice> {
        self.slices.get(n.checked_sub(1)?)
    }

    /// `p_{n,k;a,b,c}`; `None` unless the table tracks run counts.
    pub fn get(&self, key: &StateKey) -> Option<BigUint> {
        if !self.with_runs {
            return None;
        }
        let cell = self.slice(key.n).and_then(|s| s.cell(key.a, key.b, key.c));
        Some(cell.and_then(|c| c.get(key.k).cloned()).unwrap_or_default())
    }

    /// `sum_k p_{n,k;a,b,c}`.
    pub fn get_any_k(&self, n: usize, a: usize, b: usize, c: usize) -> BigUint {
        self.slice(n)
            .and_then(|s| s.cell(a, b, c))
            .map(|c| c.iter().sum())
            .unwrap_or_default()
    }

    /// The auxiliary `d_{n,k,a,A} = sum_b sum_{c>=A} p_{n,k;a,b,c}`.
    pub fn d(&self, n: usize, k: usize, a: usize, big_a: usize) -> BigUint {
        let idx = if self.with_runs { k } else { 0 };
        self.slice(n)
            .and_then(|s| s.d_at(a, big_a))
            .and_then(|c| c.get(idx).cloned())
            .unwrap_or_default()
    }

    /// Non-zero entries `(key, count)` of size `n`, in key order.
    pub fn entries(&self, n: usize) -> Vec<(StateKey, BigUint)> {
        let Some(s) = self.slice(n) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for c in 1..=n {
            for a in 1..=c {
                for b in a..=c {
                    if let Some(cell) = s.cell(a, b, c) {
                        for (k, v) in cell.iter().enumerate() {
                            if !v.is_zero() {
                                let k = if self.with_runs { k } else { 0 };
                                out.push((StateKey { n, k, a, b, c }, v.clone()));
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn run(exec: Exec, max_n: usize, with_runs: bool, keep: bool) -> (Counts, Vec<Slice>) {
    let kdim = if with_runs { max_n + 1 } else { 1 };
    let mut p = vec![BigUint::from(1u8)];
    let mut triangle = with_runs.then(|| {
        let mut row0 = vec![BigUint::zero(); kdim];
        row0[0] = BigUint::from(1u8);
        vec![row0]
    });
    let mut additions = 0;
    let mut kept = Vec::new();
    let mut window: Vec<Slice> = Vec::new();

    for n in 1..=max_n {
        let (slice, adds) = if n <= 2 {
            let mut s = base_slice(n, kdim);
            let adds = s.accumulate(exec, kdim);
            (s, adds)
        } else {
            next_slice(exec, &window[window.len() - 1], &window[window.len() - 2], kdim)
        };
        additions += adds;
        let (total, adds) = slice.total(kdim);
        additions += adds;
        p.push(total.iter().sum());
        if let Some(t) = triangle.as_mut() {
            t.push(total);
        }
        if keep {
            kept.push(slice.clone());
        }
        window.push(slice);
        if window.len() > 2 {
            window.remove(0);
        }
    }
    (
        Counts {
            p,
            triangle,
            additions,
        },
        kept,
    )
}

/// `p_n` for `n <= N`, and the `p_{n,k}` triangle when `with_runs`.
pub fn count_popstacked(max_n: usize, with_runs: bool) -> Counts {
    count_popstacked_with(Exec::default(), max_n, with_runs)
}

pub fn count_popstacked_with(exec: Exec, max_n: usize, with_runs: bool) -> Counts {
    run(exec, max_n, with_runs, false).0
}

/// Additions performed when computing `p_1..p_N` without run counts.
pub fn addition_cost(max_n: usize) -> u64 {
    count_popstacked(max_n, false).additions
}

/// Runs the recurrence keeping every slice.
pub fn count_table(max_n: usize, with_runs: bool) -> (Counts, CountTable) {
    let (counts, slices) = run(Exec::default(), max_n, with_runs, true);
    (counts, CountTable { slices, with_runs })
}

/// The recurrence before optimization: each branch sums its predecessors
/// directly, with `a` running from 1 in the two-element branch. Meant for
/// cross-checking at small sizes only.
pub fn direct_table(max_n: usize) -> HashMap<StateKey, BigUint> {
    let mut table: HashMap<StateKey, BigUint> = HashMap::new();
    let mut by_n: Vec<Vec<(StateKey, BigUint)>> = vec![Vec::new(); max_n + 1];
    let one = BigUint::from(1u8);
    for (n, a, c) in [(1, 1, 1), (2, 1, 2)] {
        if n <= max_n {
            let key = StateKey { n, k: 1, a, b: a, c };
            table.insert(key, one.clone());
            by_n[n].push((key, one.clone()));
        }
    }
    for n in 3..=max_n {
        let mut level = Vec::new();
        for k in 1..=n {
            for c in 1..=n {
                for a in 1..=c {
                    for b in a..=c {
                        if b == c && a != c {
                            continue;
                        }
                        let mut v = BigUint::zero();
                        if a == c {
                            for (key, x) in &by_n[n - 1] {
                                if key.k + 1 == k && key.a < a && key.c >= a {
                                    v += x;
                                }
                            }
                        } else if a == b {
                            for (key, x) in &by_n[n - 2] {
                                if key.k + 1 == k && key.a + 2 <= c && key.c >= a {
                                    v += x;
                                }
                            }
                        } else {
                            for bb in a..b {
                                let key = StateKey { n: n - 1, k, a, b: bb, c: c - 1 };
                                if let Some(x) = table.get(&key) {
                                    v += x;
                                }
                            }
                        }
                        if !v.is_zero() {
                            level.push((StateKey { n, k, a, b, c }, v));
                        }
                    }
                }
            }
        }
        for (key, v) in &level {
            table.insert(*key, v.clone());
        }
        by_n[n] = level;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_terms() {
        let c = count_popstacked(8, false);
        let got: Vec<u64> = c.p.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(got, [1, 1, 1, 3, 11, 49, 263, 1653, 11877]);
    }

    #[test]
    fn triangle_rows_sum_to_terms() {
        let c = count_popstacked(10, true);
        let t = c.triangle.unwrap();
        for n in 0..=10 {
            assert_eq!(t[n].iter().sum::<BigUint>(), c.p[n]);
        }
    }

    #[test]
    fn both_policies_agree() {
        assert_eq!(
            count_popstacked_with(Exec::Sequential, 14, true),
            count_popstacked_with(Exec::Parallel, 14, true)
        );
    }
}
