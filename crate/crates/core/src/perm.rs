use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Runs,
    Falls,
}

/// Maximal runs or falls, as 0-based half-open position ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: BlockKind,
    pub blocks: Vec<Range<usize>>,
}

impl Decomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        if n > u32::MAX as usize / 2 {
            return Err(Error::InvalidPermutation("too long".into()));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            let i = v as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is repeated or outside 1..={n}"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a permutation of `1..=n`.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn reversed_identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `inv[v-1]` is the 0-based position of value `v`.
    pub fn inverse_positions(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i;
        }
        inv
    }

    pub fn decompose(&self, kind: BlockKind) -> Decomposition {
        let v = &self.values;
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 1..v.len() {
            let breaks = match kind {
                BlockKind::Runs => v[i] < v[i - 1],
                BlockKind::Falls => v[i] > v[i - 1],
            };
            if breaks {
                blocks.push(start..i);
                start = i;
            }
        }
        blocks.push(start..v.len());
        Decomposition { kind, blocks }
    }

    pub fn runs(&self) -> Decomposition {
        self.decompose(BlockKind::Runs)
    }

    pub fn falls(&self) -> Decomposition {
        self.decompose(BlockKind::Falls)
    }

    pub fn run_count(&self) -> usize {
        1 + self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// One pop-stack pass: every maximal fall is reversed in place.
    pub fn flip(&self) -> Permutation {
        let mut out = self.values.clone();
        flip_in_place(&mut out);
        Permutation { values: out }
    }

    pub fn flip_times(&self, m: usize) -> Permutation {
        let mut out = self.values.clone();
        for _ in 0..m {
            if !flip_in_place(&mut out) {
                break;
            }
        }
        Permutation { values: out }
    }

    pub fn cost(&self) -> usize {
        let mut v = self.values.clone();
        let mut m = 0;
        while flip_in_place(&mut v) {
            m += 1;
        }
        m
    }

    /// `[p, T(p), ..., id]`.
    pub fn trajectory(&self) -> Vec<Permutation> {
        let mut out = vec![self.clone()];
        let mut v = self.values.clone();
        while flip_in_place(&mut v) {
            out.push(Permutation { values: v.clone() });
        }
        out
    }

    /// Maximum displacement `max |a_i - i|`.
    pub fn bandwidth(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (v as usize).abs_diff(i + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn inversions(&self) -> u64 {
        if self.len() <= 10_000 {
            let v = &self.values;
            let mut count = 0u64;
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    if v[i] > v[j] {
                        count += 1;
                    }
                }
            }
            count
        } else {
            let mut v = self.values.clone();
            let mut buf = vec![0; v.len()];
            merge_count(&mut v, &mut buf)
        }
    }

    /// Layered permutation: direct sum of decreasing blocks.
    pub fn build_layered(parts: &[usize]) -> Result<Permutation> {
        check_parts(parts)?;
        let mut values = Vec::with_capacity(parts.iter().sum());
        let mut base = 0u32;
        for &m in parts {
            values.extend((base + 1..=base + m as u32).rev());
            base += m as u32;
        }
        Ok(Permutation { values })
    }

    /// Skew-layered permutation: skew sum of increasing blocks.
    pub fn build_skew_layered(parts: &[usize]) -> Result<Permutation> {
        check_parts(parts)?;
        let n: usize = parts.iter().sum();
        let mut values = Vec::with_capacity(n);
        let mut top = n as u32;
        for &m in parts {
            let lo = top - m as u32;
            values.extend(lo + 1..=top);
            top = lo;
        }
        Ok(Permutation { values })
    }

    /// The permutation with bandwidth at most one and the given run lengths.
    pub fn build_thin(run_lengths: &[usize]) -> Result<Permutation> {
        check_parts(run_lengths)?;
        let s = run_lengths.len();
        if s > 2 && run_lengths[1..s - 1].contains(&1) {
            return Err(Error::InnerRunOfSizeOne);
        }
        let n: usize = run_lengths.iter().sum();
        let mut values: Vec<u32> = (1..=n as u32).collect();
        let mut end = 0;
        for &r in &run_lengths[..s - 1] {
            end += r;
            values.swap(end - 1, end);
        }
        Ok(Permutation { values })
    }

    pub fn to_spaced(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }
}

fn check_parts(parts: &[usize]) -> Result<()> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidPermutation(
            "block sizes must be a nonempty list of positive integers".into(),
        ));
    }
    Ok(())
}

/// Reverses every maximal fall; returns whether anything moved.
pub(crate) fn flip_in_place(v: &mut [u32]) -> bool {
    let n = v.len();
    let mut changed = false;
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && v[j] < v[j - 1] {
            j += 1;
        }
        if j - i > 1 {
            v[i..j].reverse();
            changed = true;
        }
        i = j;
    }
    changed
}

fn merge_count(v: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (l, r) = v.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        merge_count(l, bl) + merge_count(r, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if v[i] <= v[j] {
            buf[k] = v[i];
            i += 1;
        } else {
            buf[k] = v[j];
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&buf[..n]);
    count
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_spaced())
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3 2 7 6 1 4 5`, `3,2,7,6,1,4,5`, or compact `3276145` (n <= 9).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |detail: String| Error::Parse {
            what: "permutation",
            detail,
        };
        let values: Vec<u32> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|e| parse_err(format!("{t:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(parse_err(
                    "compact digit form only for n <= 9; separate values with spaces".into(),
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn blocks_as_strings(p: &Permutation, d: &Decomposition) -> Vec<String> {
        d.blocks
            .iter()
            .map(|b| p.values()[b.clone()].iter().map(|v| v.to_string()).collect())
            .collect()
    }

    #[test]
    fn runs_and_falls_of_running_example() {
        let q = p("3276145");
        assert_eq!(blocks_as_strings(&q, &q.runs()), ["3", "27", "6", "145"]);
        assert_eq!(blocks_as_strings(&q, &q.falls()), ["32", "761", "4", "5"]);
        assert_eq!(Permutation::identity(5).falls().blocks.len(), 5);
    }

    #[test]
    fn flip_and_cost() {
        assert_eq!(p("3276145").flip(), p("2316745"));
        assert_eq!(p("3412").flip(), p("3142"));
        assert_eq!(p("3276145").cost(), 4);
        assert_eq!(p("52341").cost(), 3);
        assert_eq!(Permutation::identity(6).cost(), 0);
        let chain: Vec<String> = p("3276145").trajectory().iter().map(|q| q.to_string()).collect();
        assert_eq!(chain, ["3276145", "2316745", "2136475", "1234657", "1234567"]);
        assert_eq!(p("21").trajectory(), vec![p("21"), p("12")]);
    }

    #[test]
    fn bandwidth_and_inversions() {
        assert_eq!(p("3412").bandwidth(), 2);
        assert_eq!(p("3412").flip().bandwidth(), 2);
        assert_eq!(p("12435687").bandwidth(), 1);
        // Pairs: 3>2,1; 2>1; 7>6,1,4,5; 6>1,4,5.
        assert_eq!(p("3276145").inversions(), 10);
        assert_eq!(Permutation::reversed_identity(7).inversions(), 21);
    }

    #[test]
    fn merge_count_matches_naive() {
        let n = 300;
        let v: Vec<u32> = (0..n).map(|i| ((i * 7919) % n) + 1).collect();
        let q = Permutation::new(v.clone()).unwrap();
        let mut buf = vec![0; v.len()];
        let mut w = v;
        assert_eq!(merge_count(&mut w, &mut buf), q.inversions());
    }

    #[test]
    fn constructors() {
        assert_eq!(Permutation::build_layered(&[2, 1, 3]).unwrap(), p("213654"));
        assert_eq!(Permutation::build_skew_layered(&[2, 1, 3]).unwrap(), p("564123"));
        assert_eq!(Permutation::build_skew_layered(&[3, 2]).unwrap(), p("34512"));
        assert_eq!(Permutation::build_thin(&[3, 4, 1]).unwrap(), p("12435687"));
        assert_eq!(Permutation::build_thin(&[2, 2, 2]).unwrap(), p("132546"));
        assert_eq!(Permutation::build_thin(&[5]).unwrap(), Permutation::identity(5));
        assert_eq!(
            Permutation::build_thin(&[2, 1, 2]),
            Err(Error::InnerRunOfSizeOne)
        );
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3 2 7 6 1 4 5"), p("3276145"));
        assert_eq!(p("3,2,7,6,1,4,5"), p("3276145"));
        assert!("1123".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("12345678910".parse::<Permutation>().is_err());
        let big = Permutation::identity(12);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
