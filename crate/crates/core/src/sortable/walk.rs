//! Dyck walks with bicoloured corner-adjacent up-steps, and the bijection
//! with 2-pop-stack-sortable permutations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// An ascent; `red` marks a twisted one.
    Up { red: bool },
    Down,
}

impl Step {
    pub const BLACK: Step = Step::Up { red: false };
    pub const RED: Step = Step::Up { red: true };

    pub fn is_up(self) -> bool {
        matches!(self, Step::Up { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredWalk {
    steps: Vec<Step>,
}

impl ColouredWalk {
    pub fn new(steps: Vec<Step>) -> Self {
        ColouredWalk { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn altitude(&self) -> i64 {
        self.steps.iter().map(|s| if s.is_up() { 1 } else { -1 }).sum()
    }

    /// An up-step with a down-step on at least one side.
    pub fn is_corner_adjacent(&self, i: usize) -> bool {
        let down = |j: Option<usize>| j.and_then(|j| self.steps.get(j)) == Some(&Step::Down);
        self.steps[i].is_up() && (down(i.checked_sub(1)) || down(Some(i + 1)))
    }

    /// Red is only allowed on corner-adjacent up-steps.
    pub fn validate(&self) -> Result<()> {
        for (i, s) in self.steps.iter().enumerate() {
            if *s == Step::RED && !self.is_corner_adjacent(i) {
                return Err(Error::InvalidColouring(i));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ColouredWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Up { red: false } => "U+",
                Step::Up { red: true } => "U-",
                Step::Down => "D",
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for ColouredWalk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .split_whitespace()
            .map(|t| match t {
                "U+" => Ok(Step::BLACK),
                "U-" => Ok(Step::RED),
                "D" => Ok(Step::Down),
                _ => Err(Error::Parse {
                    what: "walk",
                    detail: format!("unknown step {t:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColouredWalk { steps })
    }
}

/// Cost at most `k`.
pub fn is_k_pss(p: &Permutation, k: usize) -> bool {
    p.cost() <= k
}

/// Adjacent falls satisfy `max(F_i) <= min(F_{i+1}) + 1`.
pub fn is_2pss_structural(p: &Permutation) -> bool {
    let v = p.values();
    p.falls()
        .blocks
        .windows(2)
        .all(|w| v[w[0].start] <= v[w[1].end - 1] + 1)
}

/// Up-steps at ascents, down-steps at descents; an ascent is red when the
/// fall before it has its maximum one above the minimum of the fall after.
pub fn encode_2pss(p: &Permutation) -> Result<ColouredWalk> {
    if !is_2pss_structural(p) {
        return Err(Error::Not2PSS(p.to_string()));
    }
    let v = p.values();
    let falls = p.falls().blocks;
    let mut steps = Vec::with_capacity(p.len().saturating_sub(1));
    for (i, f) in falls.iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::Down, f.len() - 1));
        if let Some(next) = falls.get(i + 1) {
            let twisted = v[f.start] == v[next.end - 1] + 1;
            steps.push(Step::Up { red: twisted });
        }
    }
    Ok(ColouredWalk { steps })
}

/// Inverse of [`encode_2pss`].
///
/// Falls are read off the walk. Values start from the layered assignment,
/// where each fall occupies the next block of values; each red ascent,
/// left to right, then moves the smallest entry of the fall after it to
/// sit directly below the largest entry of the fall before it.
pub fn decode_walk(w: &ColouredWalk) -> Result<Permutation> {
    w.validate()?;
    let n = w.len() + 1;
    let mut falls: Vec<std::ops::Range<usize>> = Vec::new();
    let mut start = 0;
    for (g, s) in w.steps.iter().enumerate() {
        if s.is_up() {
            falls.push(start..g + 1);
            start = g + 1;
        }
    }
    falls.push(start..n);

    // Positions listed from smallest to largest value.
    let mut order: Vec<usize> = falls.iter().flat_map(|f| f.clone().rev()).collect();
    let mut twist = 0;
    for (g, s) in w.steps.iter().enumerate() {
        if !s.is_up() {
            continue;
        }
        if *s == Step::RED {
            let (before, after) = (&falls[twist], &falls[twist + 1]);
            debug_assert_eq!(before.end, g + 1);
            let moving = after.end - 1;
            order.retain(|&x| x != moving);
            let at = order.iter().position(|&x| x == before.start).expect("present");
            order.insert(at, moving);
        }
        twist += 1;
    }
    let mut v = vec![0u32; n];
    for (rank, &pos) in order.iter().enumerate() {
        v[pos] = rank as u32 + 1;
    }
    Ok(Permutation::from_vec_unchecked(v))
}

/// Every validly coloured walk of the given length, shapes in binary order.
pub fn all_coloured_walks(len: usize) -> Vec<ColouredWalk> {
    let mut out = Vec::new();
    for mask in 0u64..1 << len {
        let shape: Vec<Step> = (0..len)
            .map(|i| if mask >> i & 1 == 1 { Step::Down } else { Step::BLACK })
            .collect();
        let base = ColouredWalk { steps: shape };
        let free: Vec<usize> = (0..len).filter(|&i| base.is_corner_adjacent(i)).collect();
        for colours in 0u64..1 << free.len() {
            let mut w = base.clone();
            for (bit, &i) in free.iter().enumerate() {
                if colours >> bit & 1 == 1 {
                    w.steps[i] = Step::RED;
                }
            }
            out.push(w);
        }
    }
    out
}

/// Last step of a partial walk, as needed to decide colour multiplicity.
#[derive(Clone, Copy)]
enum Last {
    Start,
    /// An up-step with no down-step before it; counted once so far.
    UpPending,
    /// An up-step already counted with both colours.
    UpSettled,
    Down,
}

const LAST: [Last; 4] = [Last::Start, Last::UpPending, Last::UpSettled, Last::Down];

/// `counts[len][last][altitude + len]` for coloured walks, Markov in the
/// last step: an up-step after a down-step gets factor 2 at once, while an
/// up-step that turns out to be followed by a down-step gets its second
/// colour when that down-step is appended.
fn walk_dp(len: usize) -> Vec<[Vec<BigInt>; 4]> {
    let width = 2 * len + 1;
    let zeros = || std::array::from_fn(|_| vec![BigInt::zero(); width]);
    let mut dp: Vec<[Vec<BigInt>; 4]> = vec![zeros()];
    dp[0][Last::Start as usize][len] = BigInt::from(1);
    for step in 0..len {
        let mut next = zeros();
        for last in LAST {
            for alt in 0..width {
                let c = &dp[step][last as usize][alt];
                if c.is_zero() {
                    continue;
                }
                let (up, up_w) = match last {
                    Last::Down => (Last::UpSettled, 2),
                    _ => (Last::UpPending, 1),
                };
                next[up as usize][alt + 1] += c * up_w;
                let down_w = if matches!(last, Last::UpPending) { 2 } else { 1 };
                next[Last::Down as usize][alt - 1] += c * down_w;
            }
        }
        dp.push(next);
    }
    dp
}

/// Number of coloured walks of length `len` ending at each altitude,
/// indexed by `altitude + len`.
pub fn coloured_walk_counts(len: usize) -> Vec<BigInt> {
    let dp = walk_dp(len);
    (0..=2 * len)
        .map(|alt| dp[len].iter().map(|row| &row[alt]).sum())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeHalving {
    pub n: usize,
    /// 2-pop-stack-sortable permutations of size `2n+1` with `n` ascents.
    pub total: BigInt,
    /// Those among them whose last fall has size one.
    pub last_fall_single: BigInt,
}

impl BridgeHalving {
    pub fn holds(&self) -> bool {
        &self.last_fall_single * 2 == self.total
    }
}

/// Coloured bridges of length `2n`, split by whether the last step is up
/// (an ascent at the final gap, i.e. a last fall of size one).
pub fn bridge_halving_check(n: usize) -> BridgeHalving {
    let len = 2 * n;
    let dp = walk_dp(len);
    let at_zero = |l: Last| dp[len][l as usize][len].clone();
    let ups = at_zero(Last::UpPending) + at_zero(Last::UpSettled);
    let total = &ups + at_zero(Last::Down) + at_zero(Last::Start);
    BridgeHalving {
        n,
        total,
        last_fall_single: ups,
    }
}
