//! The invariant suite behind `verify all`: each check compares a fast or
//! structural computation with brute force over `S_n` for small `n`.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::automaton::{build_ak, count_words, scanline, scanline_inverse};
use crate::enumeration::{check_functional_equation, count_popstacked, generate_tree, MAX_ORDER};
use crate::error::Result;
use crate::oracle::{self, MAX_SET_N};
use crate::par::Exec;
use crate::perm::Permutation;
use crate::popstacked::{canonical_preimage, is_layered_popstacked, is_popstacked, preimages_layered};
use crate::sortable::{decode_walk, encode_2pss, is_2pss_structural, is_k_pss};
use crate::worstcase;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// Largest size the check was run at.
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from(name: &'static str, n: usize, r: Result<bool>) -> Check {
        match r {
            Ok(passed) => Check {
                name,
                n,
                passed,
                detail: String::new(),
            },
            Err(e) => Check {
                name,
                n,
                passed: false,
                detail: e.to_string(),
            },
        }
    }
}

/// Runs every check for all sizes `1..=n`, clamped to what brute force allows.
pub fn verify_all(exec: Exec, n: usize) -> Vec<Check> {
    let set_n = n.min(MAX_SET_N);
    let stream_n = n.min(worstcase::MAX_VERIFY_N);
    let upto = |m: usize, f: &dyn Fn(usize) -> Result<bool>| -> Result<bool> {
        for k in 1..=m {
            if !f(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    vec![
        Check::from("popstacked-is-image", set_n, upto(set_n, &|k| {
            let image = oracle::image_of_tm_with(exec, k, 1)?;
            oracle::all_satisfy(exec, k, |p| is_popstacked(p) == image.contains(p))
        })),
        Check::from("preimages", set_n.min(7), upto(set_n.min(7), &|k| {
            for p in oracle::image_of_tm_with(exec, k, 1)? {
                if canonical_preimage(&p)?.flip() != p {
                    return Ok(false);
                }
                if is_layered_popstacked(&p) && preimages_layered(&p)? != oracle::preimage_set(&p)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })),
        Check::from("generating-tree", set_n, {
            let levels = generate_tree(set_n);
            upto(set_n, &|k| {
                let set: BTreeSet<_> = levels[k].iter().cloned().collect();
                Ok(set.len() == levels[k].len() && set == oracle::image_of_tm_with(exec, k, 1)?)
            })
        }),
        Check::from("run-triangle", set_n, {
            let tri = count_popstacked(set_n, true).triangle.expect("requested");
            upto(set_n, &|k| {
                let by_runs = oracle::popstacked_counts_by_runs(k)?;
                Ok((1..=k).all(|r| {
                    tri[k][r] == BigUint::from(by_runs[r]) && count_words(&build_ak(r), k) == tri[k][r]
                }))
            })
        }),
        Check::from("scanline-round-trip", stream_n.min(8), upto(stream_n.min(8), &|k| {
            oracle::all_satisfy(exec, k, |p| scanline_inverse(&scanline(p)).as_ref() == Ok(p))
        })),
        Check::from("functional-equation", n.min(MAX_ORDER), {
            check_functional_equation(n.min(MAX_ORDER)).map(|r| r.holds())
        }),
        Check::from("two-pss-structure", stream_n, upto(stream_n, &|k| {
            oracle::all_satisfy(exec, k, |p| is_2pss_structural(p) == is_k_pss(p, 2))
        })),
        Check::from("two-pss-bijection", stream_n.min(8), upto(stream_n.min(8), &|k| {
            oracle::all_satisfy(exec, k, |p| match encode_2pss(p) {
                Ok(w) => decode_walk(&w).as_ref() == Ok(p),
                Err(_) => p.cost() > 2,
            })
        })),
        Check::from("bandwidth", stream_n, upto(stream_n, &|k| worstcase::verify_bandwidth_theorem(exec, k))),
        Check::from("majorization", stream_n.min(8), upto(stream_n.min(8), &|k| {
            worstcase::verify_majorization(exec, k)
        })),
        Check::from("shadow-monotonicity", stream_n.min(8), upto(stream_n.min(8), &|k| {
            worstcase::verify_shadow_monotonicity(exec, k)
        })),
        Check::from("coverage-witnesses", n.min(12), upto(n.min(12), &|k| Ok(coverage_ok(k)))),
        Check::from("image-of-penultimate-power", set_n, upto(set_n, &|k| {
            if k < 2 {
                return Ok(true);
            }
            let image = oracle::image_of_tm_with(exec, k, k - 2)?;
            let members: Vec<Permutation> = oracle::all_permutations(k)?
                .filter(worstcase::is_im_n_minus_2)
                .collect();
            let round_trip = members
                .iter()
                .all(|t| worstcase::preimage_n_minus_2(t).map(|p| p.flip_times(k - 2)).as_ref() == Ok(t));
            Ok(members.len() == image.len()
                && members.iter().all(|t| image.contains(t))
                && image.len() as u64 == worstcase::im_n_minus_2_count(k)
                && round_trip)
        })),
        Check::from("skew-condition", stream_n.min(8), upto(stream_n.min(8), &|k| {
            worstcase::skew_condition_check(exec, k)
        })),
        Check::from("skew-layered-conjecture", n.min(worstcase::MAX_SKEW_N), upto(n.min(worstcase::MAX_SKEW_N), &|k| {
            Ok(worstcase::skew_conjecture_report(exec, k)?.holds())
        })),
    ]
}

fn coverage_ok(n: usize) -> bool {
    for m in 0..n {
        let width = n - 1 - m;
        for i in 1..=n {
            for j in 1..=n {
                let ok = match worstcase::coverage_witness(n, m, i, j) {
                    Ok(p) => p.flip_times(m).at(i) as usize == j,
                    Err(_) => i.abs_diff(j) > width,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}
