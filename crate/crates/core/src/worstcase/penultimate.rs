//! The image of `T^(n-2)` and the worst cases among skew-layered permutations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::oracle;
use crate::par::Exec;
use crate::perm::Permutation;
use crate::popstacked::is_thin;

use super::shadow::{check_verify_n, ShadowWord};

/// Largest `n` accepted by [`skew_conjecture_report`].
pub const MAX_SKEW_N: usize = 20;

/// Thin, and every run other than the first and last has even length.
pub fn is_im_n_minus_2(p: &Permutation) -> bool {
    if !is_thin(p) {
        return false;
    }
    let runs = p.runs().lengths();
    let s = runs.len();
    s <= 2 || runs[1..s - 1].iter().all(|r| r % 2 == 0)
}

/// `|Im(T^(n-2))|` for `n >= 2`.
pub fn im_n_minus_2_count(n: usize) -> u64 {
    assert!(n >= 2, "defined for n >= 2");
    if n.is_multiple_of(2) {
        (1u64 << (n / 2 - 1)) + (1u64 << (n / 2)) - 1
    } else {
        (1u64 << n.div_ceil(2)) - 1
    }
}

/// `⊖(r_s, ..., r_1)` where `(r_1, ..., r_s)` are the run lengths of `p`.
pub fn preimage_n_minus_2(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() || !is_im_n_minus_2(p) {
        return Err(Error::NotInImage(p.to_string()));
    }
    let mut runs = p.runs().lengths();
    runs.reverse();
    Permutation::build_skew_layered(&runs)
}

/// For every `π ∈ S_n` of cost `n - 1` with `τ = T^(n-2)(π)`: some `k` has
/// `shadow_k(τ) ≠ S^k L^(n-k)`, and every such `k` has
/// `shadow_k(π) = L^(n-k) S^k`.
pub fn skew_condition_check(exec: Exec, n: usize) -> Result<bool> {
    check_verify_n(n)?;
    if n < 2 {
        return Ok(true);
    }
    oracle::all_satisfy(exec, n, |p| {
        if p.cost() != n - 1 {
            return true;
        }
        let tau = p.flip_times(n - 2);
        let moved: Vec<usize> = (1..n)
            .filter(|&k| shadow_of(&tau, k) != ShadowWord::minimum(k, n - k))
            .collect();
        !moved.is_empty()
            && moved
                .iter()
                .all(|&k| shadow_of(p, k) == ShadowWord::maximum(k, n - k))
    })
}

fn shadow_of(p: &Permutation, k: usize) -> ShadowWord {
    ShadowWord::new(p.values().iter().map(|&x| x as usize <= k).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewRow {
    pub perm: Permutation,
    pub cost: usize,
    pub conjectured: usize,
}

impl SkewRow {
    pub fn matches(&self) -> bool {
        self.cost == self.conjectured
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewReport {
    pub n: usize,
    /// Every skew-layered permutation other than `id` and `-id`.
    pub rows: Vec<SkewRow>,
    /// Observed number of rows per cost.
    pub by_cost: BTreeMap<usize, u64>,
}

impl SkewReport {
    /// Predicted number of rows per cost.
    pub fn predicted(&self) -> BTreeMap<usize, u64> {
        predicted_counts(self.n)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &SkewRow> {
        self.rows.iter().filter(|r| !r.matches())
    }

    pub fn holds(&self) -> bool {
        self.mismatches().next().is_none() && self.by_cost == self.predicted()
    }

    /// One `perm,cost,conjectured,match` record per row.
    pub fn to_records(&self) -> String {
        let mut s = String::from("perm,cost,conjectured,match\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.perm, r.cost, r.conjectured, r.matches()));
        }
        s
    }
}

fn predicted_counts(n: usize) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    if n < 3 {
        return out;
    }
    if n.is_multiple_of(2) {
        out.insert(n - 1, (1u64 << (n - 1)) - 2);
    } else {
        let low = ((1u64 << (n - 2)) - 2) / 3;
        let high = (5 * (1u64 << (n - 2)) - 4) / 3;
        if low > 0 {
            out.insert(n - 2, low);
        }
        out.insert(n - 1, high);
    }
    out
}

/// Position `(n+1)/2` is the middle entry of a run or of a fall of odd
/// length at least 3.
fn central(p: &Permutation) -> bool {
    let c = p.len().div_ceil(2) - 1;
    [p.runs(), p.falls()].iter().any(|d| {
        d.blocks
            .iter()
            .any(|r| r.len() >= 3 && r.len() % 2 == 1 && r.start + r.len() / 2 == c)
    })
}

pub fn conjectured_cost(p: &Permutation) -> usize {
    let n = p.len();
    if n % 2 == 1 && central(p) {
        n - 2
    } else {
        n - 1
    }
}

pub fn skew_conjecture_report(exec: Exec, n: usize) -> Result<SkewReport> {
    if n > MAX_SKEW_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n,
            limit: MAX_SKEW_N,
        });
    }
    if n < 2 {
        return Ok(SkewReport {
            n,
            rows: Vec::new(),
            by_cost: BTreeMap::new(),
        });
    }
    // Bit b of the mask cuts between positions b+1 and b+2; the empty and
    // full masks give id and -id.
    let masks = (1usize << (n - 1)) - 2;
    let rows = exec.map_range(masks, |idx| {
        let mask = idx + 1;
        let mut parts = Vec::new();
        let mut len = 1;
        for b in 0..n - 1 {
            if mask >> b & 1 == 1 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        let perm = Permutation::build_skew_layered(&parts).expect("positive parts");
        SkewRow {
            cost: perm.cost(),
            conjectured: conjectured_cost(&perm),
            perm,
        }
    });
    let mut by_cost = BTreeMap::new();
    for r in &rows {
        *by_cost.entry(r.cost).or_insert(0) += 1;
    }
    Ok(SkewReport { n, rows, by_cost })
}
