//! The generating tree: every pop-stacked permutation other than `1` and
//! `12` has a unique parent, obtained from its last run.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::popstacked::is_popstacked;

/// Position of a pop-stacked permutation in the five-parameter family:
/// size `n`, `k` runs, and the last run described by its smallest entry
/// `a`, its second-largest entry `b` and its largest entry `c`.
/// When the last run is a single entry, `a = b = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateKey {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl StateKey {
    pub fn of(p: &Permutation) -> StateKey {
        let runs = p.runs().blocks;
        let last = runs.last().expect("permutations are non-empty").clone();
        let v = p.values();
        let c = v[last.end - 1] as usize;
        let b = if last.len() >= 2 { v[last.end - 2] as usize } else { c };
        StateKey {
            n: p.len(),
            k: runs.len(),
            a: v[last.start] as usize,
            b,
            c,
        }
    }
}

/// Shifts every value `>= at` up by one, freeing `at`.
fn make_room(v: &mut [u32], at: u32) {
    for x in v.iter_mut() {
        if *x >= at {
            *x += 1;
        }
    }
}

/// All children of `p` in the generating tree.
pub fn expand(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    if !is_popstacked(p) {
        return Err(Error::NotPopStacked(p.to_string()));
    }
    let StateKey { n, a, b, c, .. } = StateKey::of(p);
    let (n, a, b, c) = (n as u32, a as u32, b as u32, c as u32);
    let mut out = BTreeSet::new();

    // A new one-element run.
    for i in a + 1..=c {
        let mut v = p.values().to_vec();
        make_room(&mut v, i);
        v.push(i);
        out.insert(Permutation::from_vec_unchecked(v));
    }
    // A new two-element run.
    for i in 1..=c {
        for j in (a + 2).max(i + 1)..=n + 2 {
            let mut v = p.values().to_vec();
            make_room(&mut v, i);
            make_room(&mut v, j);
            v.extend([i, j]);
            out.insert(Permutation::from_vec_unchecked(v));
        }
    }
    // A new second-largest entry in the last run.
    for i in b + 1..=c {
        let mut v = p.values().to_vec();
        make_room(&mut v, i);
        let at = v.len() - 1;
        v.insert(at, i);
        out.insert(Permutation::from_vec_unchecked(v));
    }
    debug_assert!(out.iter().all(is_popstacked));
    Ok(out)
}

/// The unique predecessor: drop a last run of length at most two, otherwise
/// drop the second-largest entry of the last run, then relabel.
pub fn parent(p: &Permutation) -> Result<Permutation> {
    if !is_popstacked(p) {
        return Err(Error::NotPopStacked(p.to_string()));
    }
    let runs = p.runs().blocks;
    let last = runs.last().expect("non-empty").clone();
    if runs.len() == 1 && last.len() <= 2 {
        return Err(Error::RootPermutation);
    }
    let mut v = p.values().to_vec();
    if last.len() <= 2 {
        v.truncate(last.start);
    } else {
        v.remove(last.end - 2);
    }
    Ok(standardize(&v))
}

pub(crate) fn standardize(v: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by_key(|&i| v[i]);
    let mut out = vec![0; v.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation::from_vec_unchecked(out)
}

/// Grows the tree from its two roots; `levels[n]` lists the nodes of size
/// `n` in generation order, duplicates included, so that uniqueness of the
/// parent relation can be checked from the outside.
pub fn generate_tree(max_n: usize) -> Vec<Vec<Permutation>> {
    let mut levels: Vec<Vec<Permutation>> = vec![Vec::new(); max_n + 1];
    if max_n >= 1 {
        levels[1].push(Permutation::identity(1));
    }
    if max_n >= 2 {
        levels[2].push(Permutation::identity(2));
    }
    for n in 1..max_n {
        let nodes = std::mem::take(&mut levels[n]);
        for p in &nodes {
            for q in expand(p).expect("tree nodes are pop-stacked") {
                if q.len() <= max_n {
                    levels[q.len()].push(q);
                }
            }
        }
        levels[n] = nodes;
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn keys() {
        let key = |s: &str| {
            let k = StateKey::of(&p(s));
            (k.n, k.k, k.a, k.b, k.c)
        };
        assert_eq!(key("261345"), (6, 2, 1, 4, 5));
        assert_eq!(key("142536"), (6, 3, 3, 3, 6));
        assert_eq!(key("123564"), (6, 2, 4, 4, 4));
        assert_eq!(key("1"), (1, 1, 1, 1, 1));
        assert_eq!(key("12"), (2, 1, 1, 1, 2));
    }

    #[test]
    fn parents() {
        assert_eq!(parent(&p("123")).unwrap(), p("12"));
        assert_eq!(parent(&p("1")), Err(Error::RootPermutation));
        assert_eq!(parent(&p("12")), Err(Error::RootPermutation));
        assert_eq!(parent(&p("132")).unwrap(), p("12"));
        assert_eq!(parent(&p("1423")).unwrap(), p("12"));
        assert!(parent(&p("21")).is_err());
    }

    #[test]
    fn children_of_roots() {
        let kids: Vec<String> = expand(&p("1")).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(kids, ["213"]);
        let kids: Vec<String> = expand(&p("12")).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(kids, ["123", "132", "1324", "1423", "2314", "2413"]);
    }
}
