//! Shadows, the word poset on `X(k, n-k)`, and wiring-diagram paths.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle;
use crate::par::Exec;
use crate::perm::Permutation;

/// Largest `|X(k, nk)|` for which [`hasse`] builds the diagram.
pub const MAX_HASSE_NODES: usize = 10_000;
/// Largest `n` for the exhaustive verifications.
pub const MAX_VERIFY_N: usize = 10;

/// A word over `{S, L}`; `true` marks an `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShadowWord {
    small: Vec<bool>,
}

impl ShadowWord {
    pub fn new(small: Vec<bool>) -> ShadowWord {
        ShadowWord { small }
    }

    /// `S^k L^nk`, the minimum of `X(k, nk)`.
    pub fn minimum(k: usize, nk: usize) -> ShadowWord {
        ShadowWord::new((0..k + nk).map(|i| i < k).collect())
    }

    /// `L^nk S^k`, the maximum of `X(k, nk)`.
    pub fn maximum(k: usize, nk: usize) -> ShadowWord {
        ShadowWord::new((0..k + nk).map(|i| i >= nk).collect())
    }

    pub fn len(&self) -> usize {
        self.small.len()
    }

    pub fn is_empty(&self) -> bool {
        self.small.is_empty()
    }

    /// Number of `S` letters.
    pub fn k(&self) -> usize {
        self.small.iter().filter(|&&s| s).count()
    }

    pub fn letters(&self) -> &[bool] {
        &self.small
    }

    /// `s_1 < s_2 < ...`: 1-based positions of the `S` letters from the left.
    pub fn s_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.small[i - 1]).collect()
    }

    /// `l_1 > l_2 > ...`: 1-based positions of the `L` letters, the first
    /// being the rightmost.
    pub fn l_positions(&self) -> Vec<usize> {
        (1..=self.len()).rev().filter(|&i| !self.small[i - 1]).collect()
    }

    /// Replaces every occurrence of `LS` by `SL` simultaneously.
    pub fn rewrite_ls(&self) -> ShadowWord {
        let mut out = self.small.clone();
        let mut i = 0;
        while i + 1 < out.len() {
            if !self.small[i] && self.small[i + 1] {
                out.swap(i, i + 1);
                i += 2;
            } else {
                i += 1;
            }
        }
        ShadowWord::new(out)
    }

    /// All words obtained by swapping a single `LS` to `SL`.
    pub fn lower_covers(&self) -> Vec<ShadowWord> {
        (0..self.len().saturating_sub(1))
            .filter(|&i| !self.small[i] && self.small[i + 1])
            .map(|i| {
                let mut w = self.small.clone();
                w.swap(i, i + 1);
                ShadowWord::new(w)
            })
            .collect()
    }
}

impl fmt::Display for ShadowWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.small {
            f.write_str(if s { "S" } else { "L" })?;
        }
        Ok(())
    }
}

impl FromStr for ShadowWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<ShadowWord> {
        s.chars()
            .map(|c| match c {
                'S' => Ok(true),
                'L' => Ok(false),
                _ => Err(Error::Parse {
                    what: "shadow word",
                    detail: format!("bad letter {c:?} in {s:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(ShadowWord::new)
    }
}

/// Entries `<= k` become `S`, the rest `L`.
pub fn shadow(p: &Permutation, k: usize) -> Result<ShadowWord> {
    let n = p.len();
    if k == 0 || k >= n {
        return Err(Error::ThresholdOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    Ok(shadow_unchecked(p.values(), k))
}

fn shadow_unchecked(v: &[u32], k: usize) -> ShadowWord {
    ShadowWord::new(v.iter().map(|&x| x as usize <= k).collect())
}

/// `a ≼ b`: each `S` of `a` lies weakly left of the matching `S` of `b`.
pub fn poset_leq(a: &ShadowWord, b: &ShadowWord) -> Result<bool> {
    if a.len() != b.len() || a.k() != b.k() {
        return Err(Error::IncomparableShape);
    }
    let by_s = a
        .s_positions()
        .iter()
        .zip(b.s_positions())
        .all(|(x, y)| *x <= y);
    let by_l = a
        .l_positions()
        .iter()
        .zip(b.l_positions())
        .all(|(x, y)| *x >= y);
    assert_eq!(by_s, by_l, "S and L forms of the order disagree on {a}, {b}");
    Ok(by_s)
}

/// Every word with `k` letters `S` and `nk` letters `L`, in lexicographic
/// order with `L < S`.
pub fn all_words(k: usize, nk: usize) -> Vec<ShadowWord> {
    let n = k + nk;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(k: usize, nk: usize, cur: &mut Vec<bool>, out: &mut Vec<ShadowWord>) {
        if k == 0 && nk == 0 {
            out.push(ShadowWord::new(cur.clone()));
            return;
        }
        for (s, ok) in [(false, nk > 0), (true, k > 0)] {
            if ok {
                cur.push(s);
                rec(k - usize::from(s), nk - usize::from(!s), cur, out);
                cur.pop();
            }
        }
    }
    rec(k, nk, &mut cur, &mut out);
    debug_assert!(out.iter().all(|w| w.len() == n));
    out
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hasse {
    pub nodes: Vec<ShadowWord>,
    /// `(upper, lower)` index pairs of the covering relation.
    pub edges: Vec<(usize, usize)>,
    /// Node indices of `shadow(T^m(rho))`, `m = 0, 1, ...`, until the minimum.
    pub rho_shadows: Vec<usize>,
    /// `rho_shadows` refined into a saturated chain: one flip may swap
    /// several `LS` pairs, and those swaps are taken left to right.
    pub rho_chain: Vec<usize>,
}

impl Hasse {
    /// Whether the cover `upper ⋗ lower` lies on the marked chain.
    pub fn is_chain_edge(&self, upper: usize, lower: usize) -> bool {
        self.rho_chain.windows(2).any(|w| w[0] == upper && w[1] == lower)
    }
}

pub fn hasse(k: usize, nk: usize) -> Result<Hasse> {
    let size = binomial(k + nk, k).unwrap_or(usize::MAX);
    if size > MAX_HASSE_NODES {
        return Err(Error::TooLarge {
            what: "|X(k, n-k)|",
            value: size,
            limit: MAX_HASSE_NODES,
        });
    }
    let nodes = all_words(k, nk);
    let index: HashMap<&ShadowWord, usize> = nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let edges = nodes
        .iter()
        .enumerate()
        .flat_map(|(i, w)| w.lower_covers().into_iter().map(move |c| (i, c)))
        .map(|(i, c)| (i, index[&c]))
        .collect();
    let (rho_shadows, rho_chain) = if k == 0 || nk == 0 {
        (vec![0], vec![0])
    } else {
        let rho = Permutation::build_skew_layered(&[nk, k]).expect("positive parts");
        let words: Vec<ShadowWord> = rho
            .trajectory()
            .iter()
            .map(|t| shadow_unchecked(t.values(), k))
            .collect();
        let mut chain = vec![index[&words[0]]];
        for pair in words.windows(2) {
            let mut cur = pair[0].clone();
            while cur != pair[1] {
                let i = (0..cur.len() - 1)
                    .find(|&i| !cur.small[i] && cur.small[i + 1] && pair[1].small[i])
                    .expect("consecutive shadows differ by LS swaps");
                cur.small.swap(i, i + 1);
                chain.push(index[&cur]);
            }
        }
        let mut shadows: Vec<usize> = words.iter().map(|w| index[w]).collect();
        shadows.dedup();
        (shadows, chain)
    };
    Ok(Hasse {
        nodes,
        edges,
        rho_shadows,
        rho_chain,
    })
}

/// Positions of the `S` and `L` letters of `shadow_k(T^m(p))`, `m = 0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub n: usize,
    pub k: usize,
    /// `s[m][j-1] = s_j(T^m(p))`.
    pub s: Vec<Vec<usize>>,
    /// `l[m][j-1] = l_j(T^m(p))`.
    pub l: Vec<Vec<usize>>,
}

impl PathFamily {
    /// Rebuilds the shadow word of row `m`.
    pub fn row_shadow(&self, m: usize) -> ShadowWord {
        let mut small = vec![false; self.n];
        for &i in &self.s[m] {
            small[i - 1] = true;
        }
        ShadowWord::new(small)
    }
}

/// The path family of `p` by simulating the flip.
pub fn path_family(p: &Permutation, k: usize) -> Result<PathFamily> {
    let n = p.len();
    shadow(p, k)?;
    let mut s = Vec::with_capacity(n);
    let mut l = Vec::with_capacity(n);
    for m in 0..n {
        let w = shadow_unchecked(p.flip_times(m).values(), k);
        s.push(w.s_positions());
        l.push(w.l_positions());
    }
    Ok(PathFamily { n, k, s, l })
}

/// Closed form of the path family of `rho_k = ⊖(n-k, k)`.
pub fn rho_paths(n: usize, k: usize) -> Result<PathFamily> {
    if k == 0 || k >= n {
        return Err(Error::ThresholdOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    let s = (0..n)
        .map(|m| {
            (1..=k)
                .map(|j| {
                    if m < j {
                        n - k + j
                    } else if m < n - k + j {
                        n - k + 2 * j - m - 1
                    } else {
                        j
                    }
                })
                .collect()
        })
        .collect();
    let l = (0..n)
        .map(|m| {
            (1..=n - k)
                .map(|j| {
                    if m < j {
                        n - k + 1 - j
                    } else if m < k + j {
                        n - k + m + 2 - 2 * j
                    } else {
                        n + 1 - j
                    }
                })
                .collect()
        })
        .collect();
    Ok(PathFamily { n, k, s, l })
}

pub(super) fn check_verify_n(n: usize) -> Result<()> {
    if n > MAX_VERIFY_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n,
            limit: MAX_VERIFY_N,
        });
    }
    Ok(())
}

/// For every `σ ∈ S_n`, `k` and non-minimal `λ ≽ shadow_k(σ)`:
/// `shadow_k(T(σ)) ≼ λ'` where `λ'` is the `LS -> SL` rewrite of `λ`.
pub fn verify_shadow_monotonicity(exec: Exec, n: usize) -> Result<bool> {
    check_verify_n(n)?;
    let words: Vec<Vec<(ShadowWord, ShadowWord)>> = (0..n)
        .map(|k| {
            all_words(k, n - k)
                .into_iter()
                .filter(|w| *w != ShadowWord::minimum(k, n - k))
                .map(|w| {
                    let r = w.rewrite_ls();
                    (w, r)
                })
                .collect()
        })
        .collect();
    oracle::all_satisfy(exec, n, |sigma| {
        let tau = sigma.flip();
        (1..n).all(|k| {
            let a = shadow_unchecked(sigma.values(), k);
            let b = shadow_unchecked(tau.values(), k);
            words[k].iter().all(|(lambda, rewritten)| {
                !poset_leq(&a, lambda).expect("same shape") || poset_leq(&b, rewritten).expect("same shape")
            })
        })
    })
}

/// `shadow_k(T^m(π)) ≼ shadow_k(T^m(ρ_k))` for all `π`, `k`, `m`.
pub fn verify_majorization(exec: Exec, n: usize) -> Result<bool> {
    check_verify_n(n)?;
    let rho: Vec<Vec<ShadowWord>> = (0..n)
        .map(|k| {
            if k == 0 {
                return Vec::new();
            }
            let r = Permutation::build_skew_layered(&[n - k, k]).expect("positive parts");
            (0..n).map(|m| shadow_unchecked(r.flip_times(m).values(), k)).collect()
        })
        .collect();
    oracle::all_satisfy(exec, n, |p| {
        let mut v = p.clone();
        (0..n).all(|m| {
            if m > 0 {
                v = v.flip();
            }
            (1..n).all(|k| poset_leq(&shadow_unchecked(v.values(), k), &rho[k][m]).expect("same shape"))
        })
    })
}

/// `bandwidth(T^m(π)) <= n - 1 - m` for all `π` and `m <= n - 1`.
pub fn verify_bandwidth_theorem(exec: Exec, n: usize) -> Result<bool> {
    check_verify_n(n)?;
    oracle::all_satisfy(exec, n, |p| {
        p.trajectory()
            .iter()
            .enumerate()
            .all(|(m, t)| t.bandwidth() + m < n.max(1))
    })
}
