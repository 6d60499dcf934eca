//! Brute-force ground truth over `S_n` for small `n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::Permutation;

pub const MAX_STREAM_N: usize = 10;
pub const MAX_SET_N: usize = 9;

/// Lexicographic stream over permutations, optionally pinned to a first value.
pub struct LexPermutations {
    current: Option<Vec<u32>>,
    pinned_first: bool,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let out = Permutation::from_vec_unchecked(cur.clone());
        let lo = usize::from(self.pinned_first);
        if !next_permutation(&mut cur[lo..]) {
            self.current = None;
        }
        Some(out)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_stream(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPermutation("empty".into()));
    }
    if n > MAX_STREAM_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n,
            limit: MAX_STREAM_N,
        });
    }
    Ok(())
}

/// Every element of `S_n` once, in lexicographic order.
pub fn all_permutations(n: usize) -> Result<LexPermutations> {
    check_stream(n)?;
    Ok(LexPermutations {
        current: Some((1..=n as u32).collect()),
        pinned_first: false,
    })
}

/// The `(n-1)!` permutations starting with `first`, in lexicographic order.
pub fn permutations_starting_with(n: usize, first: u32) -> Result<LexPermutations> {
    check_stream(n)?;
    let mut v = vec![first];
    v.extend((1..=n as u32).filter(|&x| x != first));
    Ok(LexPermutations {
        current: Some(v),
        pinned_first: true,
    })
}

/// Folds over `S_n` split by first value; partial results are merged with `reduce`.
pub fn fold_permutations<A, I, F, R>(exec: Exec, n: usize, init: I, fold: F, reduce: R) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &Permutation) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    check_stream(n)?;
    Ok(exec.fold_range(
        n,
        &init,
        |acc, i| {
            permutations_starting_with(n, i as u32 + 1)
                .expect("n checked above")
                .fold(acc, |a, p| fold(a, &p))
        },
        &reduce,
    ))
}

/// True iff `pred` holds on every element of `S_n`.
pub fn all_satisfy<F>(exec: Exec, n: usize, pred: F) -> Result<bool>
where
    F: Fn(&Permutation) -> bool + Sync + Send,
{
    check_stream(n)?;
    Ok(exec.all_range(n, |i| {
        permutations_starting_with(n, i as u32 + 1)
            .expect("n checked above")
            .all(|p| pred(&p))
    }))
}

fn check_set(n: usize) -> Result<()> {
    if n > MAX_SET_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n,
            limit: MAX_SET_N,
        });
    }
    Ok(())
}

/// `{T^m(pi) : pi in S_n}` in sorted order.
pub fn image_of_tm(n: usize, m: usize) -> Result<BTreeSet<Permutation>> {
    image_of_tm_with(Exec::default(), n, m)
}

pub fn image_of_tm_with(exec: Exec, n: usize, m: usize) -> Result<BTreeSet<Permutation>> {
    check_set(n)?;
    fold_permutations(
        exec,
        n,
        BTreeSet::new,
        |mut acc, p| {
            acc.insert(p.flip_times(m));
            acc
        },
        union,
    )
}

/// `{pi : T(pi) = p}` in sorted order.
pub fn preimage_set(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    check_set(p.len())?;
    fold_permutations(
        Exec::default(),
        p.len(),
        BTreeSet::new,
        |mut acc, q| {
            if q.flip() == *p {
                acc.insert(q.clone());
            }
            acc
        },
        union,
    )
}

fn union(mut a: BTreeSet<Permutation>, mut b: BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    a.extend(b);
    a
}

/// `counts[k]` = number of elements of `Im(T)` in `S_n` with `k` runs.
pub fn popstacked_counts_by_runs(n: usize) -> Result<Vec<u64>> {
    let image = image_of_tm(n, 1)?;
    let mut counts = vec![0u64; n + 1];
    for p in &image {
        counts[p.run_count()] += 1;
    }
    Ok(counts)
}

/// Counts elements of `S_n` matching `pred`.
pub fn count_matching<F>(n: usize, pred: F) -> Result<u64>
where
    F: Fn(&Permutation) -> bool + Sync + Send,
{
    fold_permutations(
        Exec::default(),
        n,
        || 0u64,
        |acc, p| acc + u64::from(pred(p)),
        |a, b| a + b,
    )
}
