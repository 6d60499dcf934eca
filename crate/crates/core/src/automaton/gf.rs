use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::dfa::Dfa;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::series::{Polynomial, RationalFunction};

/// Accepted words of each length `0..=n`, by repeated transfer-matrix
/// products on the vector of path counts from the initial state.
pub fn count_words_upto(d: &Dfa, n: usize, exec: Exec) -> Vec<BigUint> {
    let states = d.state_count();
    let mut preds: Vec<Vec<(usize, u32)>> = vec![Vec::new(); states];
    for (s, out) in d.edge_multiplicities().into_iter().enumerate() {
        for (t, m) in out {
            preds[t].push((s, m));
        }
    }
    let mut cur = vec![BigUint::zero(); states];
    cur[d.initial()] = BigUint::from(1u32);
    let accepted = |v: &[BigUint]| -> BigUint {
        (0..states).filter(|&s| d.is_accepting(s)).map(|s| &v[s]).sum()
    };
    let mut out = vec![accepted(&cur)];
    for _ in 0..n {
        cur = exec.map_range(states, |t| {
            preds[t]
                .iter()
                .filter(|(s, _)| !cur[*s].is_zero())
                .map(|&(s, m)| &cur[s] * m)
                .sum()
        });
        out.push(accepted(&cur));
    }
    out
}

pub fn count_words(d: &Dfa, n: usize) -> BigUint {
    count_words_upto(d, n, Exec::default()).swap_remove(n)
}

/// Generating function of accepted words by length.
///
/// With `F_s` the series of words leading from `s` to acceptance,
/// `F_s = [s accepts] + z * sum_a F_{delta(s, a)}`. If the transition graph
/// is acyclic apart from self-loops (true of the run-word automata, whose
/// labels only grow), each `F_s` is solved in reverse topological order with
/// denominators kept as products `(1 - j z)^e`, `j` being a self-loop count.
/// Otherwise `(I - zM) F = acc` is solved by fraction-free elimination.
pub fn dfa_to_gf(d: &Dfa) -> Result<RationalFunction> {
    let edges = d.edge_multiplicities();
    match topological_order(&edges) {
        Some(order) => Ok(solve_layered(d, &edges, &order)),
        None => solve_bareiss(d, &edges),
    }
}

fn topological_order(edges: &[Vec<(usize, u32)>]) -> Option<Vec<usize>> {
    let n = edges.len();
    let mut indeg = vec![0usize; n];
    for (s, out) in edges.iter().enumerate() {
        for &(t, _) in out {
            if t != s {
                indeg[t] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&s| indeg[s] == 0).collect();
    let mut i = 0;
    while i < order.len() {
        let s = order[i];
        for &(t, _) in &edges[s] {
            if t != s {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    order.push(t);
                }
            }
        }
        i += 1;
    }
    (order.len() == n).then_some(order)
}

/// `num / prod_j (1 - j z)^{exps[j]}` with integer coefficients.
#[derive(Clone)]
struct Factored {
    num: Vec<BigInt>,
    exps: Vec<u32>,
}

fn mul_one_minus(p: &mut Vec<BigInt>, j: usize, times: u32) {
    let j = BigInt::from(j);
    for _ in 0..times {
        p.push(BigInt::zero());
        for i in (1..p.len()).rev() {
            let t = &p[i - 1] * &j;
            p[i] -= t;
        }
    }
}

fn solve_layered(d: &Dfa, edges: &[Vec<(usize, u32)>], order: &[usize]) -> RationalFunction {
    let k = d.k();
    let mut f: Vec<Option<Factored>> = vec![None; d.state_count()];
    for &s in order.iter().rev() {
        let mut loops = 0usize;
        let mut exps = vec![0u32; k + 1];
        for &(t, m) in &edges[s] {
            if t == s {
                loops = m as usize;
            } else {
                let ft = f[t].as_ref().expect("successor solved first");
                for (e, &x) in exps.iter_mut().zip(&ft.exps) {
                    *e = (*e).max(x);
                }
            }
        }
        // z * sum m * F_t over the common denominator, then + [accepting].
        let mut num: Vec<BigInt> = vec![BigInt::zero()];
        for &(t, m) in &edges[s] {
            if t == s {
                continue;
            }
            let ft = f[t].as_ref().expect("successor solved first");
            let mut p = ft.num.clone();
            for j in 1..=k {
                mul_one_minus(&mut p, j, exps[j] - ft.exps[j]);
            }
            if num.len() < p.len() + 1 {
                num.resize(p.len() + 1, BigInt::zero());
            }
            for (i, c) in p.into_iter().enumerate() {
                num[i + 1] += c * m;
            }
        }
        if d.is_accepting(s) {
            let mut den = vec![BigInt::from(1)];
            for j in 1..=k {
                mul_one_minus(&mut den, j, exps[j]);
            }
            if num.len() < den.len() {
                num.resize(den.len(), BigInt::zero());
            }
            for (i, c) in den.into_iter().enumerate() {
                num[i] += c;
            }
        }
        if loops > 0 {
            exps[loops] += 1;
        }
        f[s] = Some(Factored { num, exps });
    }
    let root = f[d.initial()].take().expect("initial state solved");
    let den = root
        .exps
        .iter()
        .enumerate()
        .fold(Polynomial::one(), |acc, (j, &e)| &acc * &Polynomial::one_minus(j as i64).pow(e));
    RationalFunction::new(Polynomial::from_bigints(root.num), den)
}

fn solve_bareiss(d: &Dfa, edges: &[Vec<(usize, u32)>]) -> Result<RationalFunction> {
    let n = d.state_count();
    // Put the initial state last so the final pivot row yields its value.
    let mut perm: Vec<usize> = (0..n).filter(|&s| s != d.initial()).collect();
    perm.push(d.initial());
    let mut pos = vec![0; n];
    for (i, &s) in perm.iter().enumerate() {
        pos[s] = i;
    }
    let mut a: Vec<Vec<Polynomial>> = vec![vec![Polynomial::zero(); n + 1]; n];
    for (i, &s) in perm.iter().enumerate() {
        a[i][i] = Polynomial::one();
        for &(t, m) in &edges[s] {
            let col = pos[t];
            a[i][col] = &a[i][col] - &Polynomial::from_ints([0, m as i64]);
        }
        if d.is_accepting(s) {
            a[i][n] = Polynomial::one();
        }
    }
    // Leading minors of I - zM equal 1 at z = 0, so no pivoting is needed.
    let mut prev = Polynomial::one();
    for kk in 0..n {
        if a[kk][kk].is_zero() {
            return Err(Error::SingularSystem);
        }
        for i in kk + 1..n {
            for j in kk + 1..=n {
                let t = &(&a[kk][kk] * &a[i][j]) - &(&a[i][kk] * &a[kk][j]);
                a[i][j] = t.div_exact(&prev).ok_or(Error::SingularSystem)?;
            }
            a[i][kk] = Polynomial::zero();
        }
        prev = a[kk][kk].clone();
    }
    Ok(RationalFunction::new(a[n - 1][n].clone(), a[n - 1][n - 1].clone()))
}
