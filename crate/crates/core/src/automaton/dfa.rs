use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Label `(L, C)` of a state of the run-word automaton.
///
/// `seen` has bit `j-1` set when letter `j` has been read. `C` is split in
/// two masks over the adjacent pairs `(j, j+1)`: `up` bit `j-1` records an
/// occurrence of `j` before `j+1`, `down` bit `j-1` an occurrence of `j+1`
/// before `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateLabel {
    pub seen: u32,
    pub up: u32,
    pub down: u32,
}

impl StateLabel {
    pub fn contains(&self, j: usize) -> bool {
        self.seen >> (j - 1) & 1 == 1
    }

    /// Reads letter `a`: every neighbour `b = a +- 1` already seen now
    /// occurs before an `a`.
    pub fn step(self, a: usize, k: usize) -> StateLabel {
        let mut next = self;
        next.seen |= 1 << (a - 1);
        if a > 1 && self.contains(a - 1) {
            next.up |= 1 << (a - 2);
        }
        if a < k && self.contains(a + 1) {
            next.down |= 1 << (a - 1);
        }
        next
    }
}

/// Complete deterministic automaton over `1..=k`; states are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    k: usize,
    initial: usize,
    accepting: Vec<bool>,
    /// `delta[s * k + (a - 1)]`.
    delta: Vec<u32>,
    labels: Option<Vec<StateLabel>>,
}

impl Dfa {
    pub fn from_parts(k: usize, initial: usize, accepting: Vec<bool>, delta: Vec<u32>) -> Result<Self> {
        let n = accepting.len();
        let bad = |d: String| Error::Parse {
            what: "automaton",
            detail: d,
        };
        if k == 0 || delta.len() != n * k {
            return Err(bad(format!("{} transitions for {n} states over {k} letters", delta.len())));
        }
        if initial >= n || delta.iter().any(|&t| t as usize >= n) {
            return Err(bad("state index out of range".into()));
        }
        Ok(Dfa {
            k,
            initial,
            accepting,
            delta,
            labels: None,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn next(&self, s: usize, a: usize) -> usize {
        self.delta[s * self.k + a - 1] as usize
    }

    pub fn labels(&self) -> Option<&[StateLabel]> {
        self.labels.as_deref()
    }

    pub fn accepts(&self, word: &[u32]) -> bool {
        let mut s = self.initial;
        for &a in word {
            if a == 0 || a as usize > self.k {
                return false;
            }
            s = self.next(s, a as usize);
        }
        self.accepting[s]
    }

    /// Letters per edge `(s, t)`, self-loops included.
    pub fn edge_multiplicities(&self) -> Vec<Vec<(usize, u32)>> {
        (0..self.state_count())
            .map(|s| {
                let mut m: Vec<(usize, u32)> = Vec::new();
                for a in 1..=self.k {
                    let t = self.next(s, a);
                    match m.iter_mut().find(|e| e.0 == t) {
                        Some(e) => e.1 += 1,
                        None => m.push((t, 1)),
                    }
                }
                m
            })
            .collect()
    }

    /// Moore partition refinement. The automaton is complete, so no sink is
    /// added; unreachable states are dropped first.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable();
        let mut class: Vec<usize> = vec![usize::MAX; self.state_count()];
        for &s in &reach {
            class[s] = usize::from(self.accepting[s]);
        }
        let mut classes = reach.iter().map(|&s| class[s]).max().map_or(0, |m| m + 1);
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = vec![usize::MAX; self.state_count()];
            for &s in &reach {
                let mut sig = Vec::with_capacity(self.k + 1);
                sig.push(class[s]);
                sig.extend((1..=self.k).map(|a| class[self.next(s, a)]));
                let fresh = ids.len();
                next[s] = *ids.entry(sig).or_insert(fresh);
            }
            let count = ids.len();
            class = next;
            if count == classes {
                break;
            }
            classes = count;
        }
        let mut accepting = vec![false; classes];
        let mut delta = vec![0u32; classes * self.k];
        for &s in &reach {
            let c = class[s];
            accepting[c] = self.accepting[s];
            for a in 1..=self.k {
                delta[c * self.k + a - 1] = class[self.next(s, a)] as u32;
            }
        }
        Dfa {
            k: self.k,
            initial: class[self.initial],
            accepting,
            delta,
            labels: None,
        }
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let s = order[i];
            for a in 1..=self.k {
                let t = self.next(s, a);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }

    /// Header lines then one `state \t letter \t state` line per transition.
    pub fn export(&self) -> String {
        let mut out = String::new();
        let acc: Vec<String> = (0..self.state_count())
            .filter(|&s| self.accepting[s])
            .map(|s| s.to_string())
            .collect();
        let _ = writeln!(out, "# alphabet {}", self.k);
        let _ = writeln!(out, "# states {}", self.state_count());
        let _ = writeln!(out, "# initial {}", self.initial);
        let _ = writeln!(out, "# accepting {}", acc.join(" "));
        for s in 0..self.state_count() {
            for a in 1..=self.k {
                let _ = writeln!(out, "{s}\t{a}\t{}", self.next(s, a));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Dfa> {
        let bad = |d: &str| Error::Parse {
            what: "automaton",
            detail: d.to_string(),
        };
        let mut header: HashMap<&str, &str> = HashMap::new();
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(h) = line.strip_prefix('#') {
                let (key, val) = h.trim().split_once(' ').unwrap_or((h.trim(), ""));
                header.insert(key, val.trim());
                continue;
            }
            let f: Vec<usize> = line
                .split('\t')
                .map(|t| t.trim().parse().map_err(|_| bad(line)))
                .collect::<Result<_>>()?;
            if f.len() != 3 {
                return Err(bad(line));
            }
            edges.push((f[0], f[1], f[2]));
        }
        let num = |key: &str| -> Result<usize> {
            header
                .get(key)
                .ok_or_else(|| bad(&format!("missing `{key}` header")))?
                .parse()
                .map_err(|_| bad(key))
        };
        let k = num("alphabet")?;
        let n = num("states")?;
        let initial = num("initial")?;
        let mut accepting = vec![false; n];
        for t in header.get("accepting").copied().unwrap_or("").split_whitespace() {
            let s: usize = t.parse().map_err(|_| bad(t))?;
            *accepting.get_mut(s).ok_or_else(|| bad(t))? = true;
        }
        let mut delta = vec![u32::MAX; n * k];
        for (s, a, t) in edges {
            if s >= n || a == 0 || a > k {
                return Err(bad("transition out of range"));
            }
            delta[s * k + a - 1] = t as u32;
        }
        if delta.contains(&u32::MAX) {
            return Err(bad("transition map is not total"));
        }
        Dfa::from_parts(k, initial, accepting, delta)
    }
}

/// The run-word automaton for `k` runs, restricted to reachable states.
///
/// From `(L, C)`, letter `a` leads to `L + {a}` with `(b, a)` added to `C`
/// for each already-seen neighbour `b = a +- 1`. A state accepts when every
/// letter was read and each adjacent pair occurred in both orders.
pub fn build_ak(k: usize) -> Dfa {
    assert!((1..=30).contains(&k), "k must lie in 1..=30");
    let full = (1u32 << k) - 1;
    let pairs = (1u32 << (k - 1)) - 1;
    let start = StateLabel {
        seen: 0,
        up: 0,
        down: 0,
    };
    let mut index: HashMap<StateLabel, u32> = HashMap::from([(start, 0)]);
    let mut labels = vec![start];
    let mut delta: Vec<u32> = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for a in 1..=k {
            let t = s.step(a, k);
            let id = *index.entry(t).or_insert_with(|| {
                labels.push(t);
                queue.push_back(t);
                labels.len() as u32 - 1
            });
            delta.push(id);
        }
    }
    let accepting = labels
        .iter()
        .map(|l| l.seen == full && l.up == pairs && l.down == pairs)
        .collect();
    Dfa {
        k,
        initial: 0,
        accepting,
        delta,
        labels: Some(labels),
    }
}

pub fn state_count(k: usize) -> usize {
    build_ak(k).state_count()
}

/// One row per `k`: the minimized state count and, from `k = 4`, whether it
/// satisfies `b_k = 3 b_{k-1} - b_{k-2} - b_{k-3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizedRow {
    pub k: usize,
    pub states: i64,
    pub predicted: Option<i64>,
}

impl MinimizedRow {
    pub fn holds(&self) -> Option<bool> {
        self.predicted.map(|p| p == self.states)
    }
}

pub fn minimized_recurrence_report(max_k: usize) -> Vec<MinimizedRow> {
    let mut rows: Vec<MinimizedRow> = Vec::new();
    for k in 1..=max_k {
        let states = build_ak(k).minimize().state_count() as i64;
        let predicted = (k >= 4).then(|| {
            let b = |i: usize| rows[i - 1].states;
            3 * b(k - 1) - b(k - 2) - b(k - 3)
        });
        rows.push(MinimizedRow {
            k,
            states,
            predicted,
        });
    }
    rows
}
