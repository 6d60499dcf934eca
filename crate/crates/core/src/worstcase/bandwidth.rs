//! Sharpness witnesses for the bandwidth bound and dot diagrams of `T^m(p)`.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A two-run skew-layered (or identity) `π` with `T^m(π)_i = j`.
///
/// Follows the case split of the existence argument: for `j < i` the small
/// block of `⊖(k, n-k)` is tracked along its S-paths, for `j > i` the large
/// block of `⊖(n-k, k)` along its L-paths.
pub fn coverage_witness(n: usize, m: usize, i: usize, j: usize) -> Result<Permutation> {
    let out = || Error::OutOfAllowedRegion { n, m, i, j };
    let width = (n.saturating_sub(1)).saturating_sub(m);
    if i == 0 || j == 0 || i > n || j > n || i.abs_diff(j) > width {
        return Err(out());
    }
    let (head, tail) = if j == i {
        return Ok(Permutation::identity(n));
    } else if j < i {
        let k = if m < j { i - j } else { i + m + 1 - 2 * j };
        (k, n.checked_sub(k).ok_or_else(out)?)
    } else {
        let t = n + 1 - j;
        let k = if m < t { j - i } else { (n + m + 2).checked_sub(2 * t + i).ok_or_else(out)? };
        (n.checked_sub(k).ok_or_else(out)?, k)
    };
    if head == 0 || tail == 0 {
        return Err(out());
    }
    Permutation::build_skew_layered(&[head, tail])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDots {
    pub n: usize,
    pub m: usize,
    /// `n - 1 - m`, floored at zero: no dot lies farther than this from the diagonal.
    pub bound: usize,
    /// `(i, T^m(p)_i)`, 1-based.
    pub dots: Vec<(usize, usize)>,
}

impl DiagramDots {
    /// Rows `m,i,value` with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,i,value\n");
        for (i, v) in &self.dots {
            s.push_str(&format!("{},{},{}\n", self.m, i, v));
        }
        s
    }
}

pub fn diagram_dots(p: &Permutation, m: usize) -> Result<DiagramDots> {
    let n = p.len();
    let bound = n.saturating_sub(1).saturating_sub(m);
    let tau = p.flip_times(m);
    let dots: Vec<(usize, usize)> = tau
        .values()
        .iter()
        .enumerate()
        .map(|(i, &v)| (i + 1, v as usize))
        .collect();
    if let Some(&(i, value)) = dots.iter().find(|(i, v)| i.abs_diff(*v) > bound) {
        return Err(Error::BandwidthViolation { i, value, bound });
    }
    Ok(DiagramDots { n, m, bound, dots })
}
