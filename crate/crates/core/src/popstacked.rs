//! The image of the flip: characterization, pre-images, structured families.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::series::{Polynomial, RationalFunction};

/// `p` is in the image of the flip iff every pair of adjacent runs overlaps:
/// the smallest entry of a run is below the largest entry of the next one.
pub fn is_popstacked(p: &Permutation) -> bool {
    let runs = p.runs().blocks;
    let v = p.values();
    // Runs increase, so min is the first entry and max the last.
    runs.windows(2).all(|w| v[w[0].start] < v[w[1].end - 1])
}

/// Reverses every run; the result flips back to `p`.
pub fn canonical_preimage(p: &Permutation) -> Result<Permutation> {
    if !is_popstacked(p) {
        return Err(Error::NotPopStacked(p.to_string()));
    }
    let mut v = p.values().to_vec();
    for r in p.runs().blocks {
        v[r].reverse();
    }
    Ok(Permutation::from_vec_unchecked(v))
}

/// Direct sum of decreasing blocks.
pub fn is_layered(p: &Permutation) -> bool {
    let v = p.values();
    p.falls()
        .blocks
        .iter()
        .all(|r| v[r.start] as usize == r.end && v[r.end - 1] as usize == r.start + 1)
}

/// Skew sum of increasing blocks.
pub fn is_skew_layered(p: &Permutation) -> bool {
    let v = p.values();
    let n = p.len();
    p.runs()
        .blocks
        .iter()
        .all(|r| v[r.start] as usize == n - r.end + 1 && v[r.end - 1] as usize == n - r.start)
}

/// Bandwidth at most one.
pub fn is_thin(p: &Permutation) -> bool {
    p.bandwidth() <= 1
}

pub fn is_layered_popstacked(p: &Permutation) -> bool {
    is_layered(p) && is_popstacked(p)
}

/// All flip pre-images of a layered pop-stacked permutation.
///
/// Gaps `0..=n` sit between positions; gaps `0` and `n` always carry a bar.
/// Every descent gap carries a primary bar, and any subset of ascent gaps may
/// carry secondary bars, provided no primary bar has bars on both
/// neighbouring gaps. Reversing each barred block gives a pre-image, and
/// every pre-image arises exactly once this way.
pub fn preimages_layered(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    if !is_layered_popstacked(p) {
        return Err(Error::NotLayeredPopstacked(p.to_string()));
    }
    let n = p.len();
    let v = p.values();
    let primary: Vec<bool> = (0..=n)
        .map(|g| g > 0 && g < n && v[g - 1] > v[g])
        .collect();
    let mut bars = vec![false; n + 1];
    bars[0] = true;
    bars[n] = true;
    let mut out = BTreeSet::new();
    place_bars(v, &primary, &mut bars, 1, &mut out);
    Ok(out)
}

fn place_bars(
    v: &[u32],
    primary: &[bool],
    bars: &mut [bool],
    g: usize,
    out: &mut BTreeSet<Permutation>,
) {
    let n = v.len();
    // A primary bar at g-1 is settled once gap g is decided.
    let settled_ok = |bars: &[bool], g: usize| -> bool {
        g < 2 || !primary[g - 1] || !(bars[g - 2] && bars[g])
    };
    if g == n {
        if settled_ok(bars, n) {
            out.insert(reverse_blocks(v, bars));
        }
        return;
    }
    let choices: &[bool] = if primary[g] { &[true] } else { &[false, true] };
    for &b in choices {
        bars[g] = b;
        if settled_ok(bars, g) {
            place_bars(v, primary, bars, g + 1, out);
        }
    }
    bars[g] = false;
}

fn reverse_blocks(v: &[u32], bars: &[bool]) -> Permutation {
    let mut out = v.to_vec();
    let mut start = 0;
    for g in 1..bars.len() {
        if bars[g] {
            out[start..g].reverse();
            start = g;
        }
    }
    Permutation::from_vec_unchecked(out)
}

/// Number of layered pop-stacked permutations of size `n`:
/// `[x^n] x + (x + x^2)^2 / (1 - x - x^2 - x^3)`.
pub fn count_layered_popstacked(n: usize) -> BigInt {
    let gf = layered_popstacked_gf();
    gf.series(n).expect("denominator is 1 at 0").coeff(n).to_integer()
}

pub fn layered_popstacked_gf() -> RationalFunction {
    let x = RationalFunction::from_polynomial(Polynomial::from_ints([0, 1]));
    let sq = RationalFunction::new(
        Polynomial::from_ints([0, 1, 1]).pow(2),
        Polynomial::from_ints([1, -1, -1, -1]),
    );
    x.add(&sq)
}

/// Interleaves two permutations of equal size `m` as
/// `p(1), q(1)+m, p(2), q(2)+m, ...`. Every odd-to-even step ascends and
/// every even-to-odd step descends, so the runs are the pairs
/// `(p(j), q(j)+m)` and consecutive pairs always overlap.
pub fn intertwine(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let m = p.len() as u32;
    let v = p
        .values()
        .iter()
        .zip(q.values())
        .flat_map(|(&a, &b)| [a, b + m])
        .collect();
    Ok(Permutation::from_vec_unchecked(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn membership() {
        let big = p("5 7 14 1 2 3 11 4 12 15 9 6 16 17 8 10 13");
        assert!(is_popstacked(&big));
        assert!(is_popstacked(&Permutation::identity(6)));
        assert!(!is_popstacked(&p("21")));
    }

    #[test]
    fn canonical_preimage_flips_back() {
        for s in ["2316745", "132546", "12"] {
            let q = p(s);
            assert_eq!(canonical_preimage(&q).unwrap().flip(), q);
        }
        assert_eq!(
            canonical_preimage(&Permutation::identity(4)).unwrap(),
            Permutation::reversed_identity(4)
        );
        assert!(canonical_preimage(&p("21")).is_err());
    }

    #[test]
    fn layered_preimages_of_worked_example() {
        let got: Vec<String> = preimages_layered(&p("13254687"))
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        let mut want = vec!["31528647", "13528647", "31258647", "31524867", "13524867"];
        want.sort();
        assert_eq!(got, want);
        let two: Vec<_> = preimages_layered(&p("12")).unwrap().into_iter().collect();
        assert_eq!(two, vec![p("12"), p("21")]);
        assert!(preimages_layered(&p("21")).is_err());
        assert!(preimages_layered(&p("2413")).is_err());
        let q = p("2143");
        assert_eq!(preimages_layered(&q).unwrap(), crate::oracle::preimage_set(&q).unwrap());
    }

    #[test]
    fn families() {
        assert!(is_layered(&p("213654")));
        assert!(!is_layered(&p("564123")));
        assert!(is_skew_layered(&p("564123")));
        assert!(!is_skew_layered(&p("213654")));
        assert!(is_thin(&p("12435687")));
        let counts: Vec<i64> = (1..=7)
            .map(|n| count_layered_popstacked(n).try_into().unwrap())
            .collect();
        assert_eq!(counts, [1, 1, 3, 5, 9, 17, 31]);
    }

    #[test]
    fn intertwine_contracts() {
        assert_eq!(intertwine(&p("1"), &p("1")).unwrap(), p("12"));
        assert_eq!(
            intertwine(&p("1"), &p("12")),
            Err(Error::SizeMismatch { left: 1, right: 2 })
        );
        let s = intertwine(&p("21"), &p("21")).unwrap();
        assert!(is_popstacked(&s));
    }
}
