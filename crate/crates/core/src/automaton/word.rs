use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A word over the alphabet `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    k: usize,
}

impl Word {
    pub fn new(letters: Vec<u32>, k: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a as usize > k) {
            return Err(Error::LetterOutOfRange { letter: bad, k });
        }
        Ok(Word { letters, k })
    }

    /// Alphabet size taken to be the largest letter.
    pub fn from_letters(letters: Vec<u32>) -> Result<Self> {
        let k = letters.iter().copied().max().unwrap_or(0) as usize;
        Self::new(letters, k)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.k <= 9 { "" } else { " " };
        let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Reads the diagram of `p` bottom to top: letter `v` is the index of the
/// run containing value `v`.
pub fn scanline(p: &Permutation) -> Word {
    let runs = p.runs().blocks;
    let mut run_of_pos = vec![0u32; p.len()];
    for (r, block) in runs.iter().enumerate() {
        for i in block.clone() {
            run_of_pos[i] = r as u32 + 1;
        }
    }
    let letters = p
        .inverse_positions()
        .into_iter()
        .map(|pos| run_of_pos[pos])
        .collect();
    Word {
        letters,
        k: runs.len(),
    }
}

/// Rebuilds the permutation whose scanline is `w`: run `j` collects the
/// values carrying letter `j` in increasing order.
pub fn scanline_inverse(w: &Word) -> Result<Permutation> {
    let k = w.k;
    let mut runs: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (v, &a) in w.letters.iter().enumerate() {
        runs[a as usize - 1].push(v as u32 + 1);
    }
    if w.is_empty() || runs.iter().any(Vec::is_empty) {
        return Err(Error::NotARunWord { k });
    }
    // Adjacent blocks must meet at a descent, else they merge into one run.
    for j in 1..k {
        if runs[j - 1].last() < runs[j].first() {
            return Err(Error::NotARunWord { k });
        }
    }
    Ok(Permutation::from_vec_unchecked(runs.concat()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_example() {
        let p: Permutation = "261453".parse().unwrap();
        let w = scanline(&p);
        assert_eq!(w.to_string(), "213221");
        assert_eq!(scanline_inverse(&w).unwrap(), p);
    }

    #[test]
    fn extremes() {
        assert_eq!(scanline(&Permutation::identity(5)).to_string(), "11111");
        assert_eq!(scanline(&Permutation::reversed_identity(5)).to_string(), "54321");
        let ones = Word::new(vec![1; 4], 1).unwrap();
        assert!(scanline_inverse(&ones).unwrap().is_identity());
    }

    #[test]
    fn rejects_merging_runs() {
        let w = Word::new(vec![1, 2], 2).unwrap();
        assert_eq!(scanline_inverse(&w), Err(Error::NotARunWord { k: 2 }));
        assert_eq!(
            Word::new(vec![1, 3], 2),
            Err(Error::LetterOutOfRange { letter: 3, k: 2 })
        );
    }
}
