use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flipsort::automaton::{build_ak, dfa_to_gf};
use flipsort::enumeration::{count_popstacked, Counts};
use flipsort::popstacked::{is_layered_popstacked, is_popstacked, preimages_layered};
use flipsort::series::eulerian_column_gf;
use flipsort::sortable::{a_table, bridge_gf, decode_walk, diagonal_gf, encode_2pss, ColouredWalk};
use flipsort::verify::verify_all;
use flipsort::worstcase;
use flipsort::{oracle, Exec, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "flipsort", version, about = "Flip-sort and pop-stack sorting toolkit")]
struct Cli {
    /// Run every loop sequentially.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply the flip `steps` times.
    Flip {
        perm: Permutation,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Number of flips needed to sort.
    Cost { perm: Permutation },
    /// Every iterate down to the identity.
    Trace { perm: Permutation },
    IsPopstacked { perm: Permutation },
    /// All flip pre-images.
    Preimages { perm: Permutation },
    #[command(subcommand)]
    Count(CountCmd),
    Automaton {
        action: AutomatonAction,
        #[arg(long)]
        runs: usize,
        /// Write the automaton in text form to this path.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    Series {
        which: SeriesKind,
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Run count for `pk`, column for `eulerian`, diagonal for `dk`.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
    #[command(subcommand)]
    Twopss(TwopssCmd),
    Worstcase {
        action: WorstcaseAction,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        nk: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
    },
    /// Dots `(i, T^m(p)_i)` for scatter plots, with the band limit `n-1-m`.
    Diagram {
        /// A permutation, or `random:N` for a seeded uniform one.
        source: String,
        /// An iteration count, or `all` for every iterate down to the identity.
        #[arg(long, default_value = "all")]
        iter: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Verify {
        suite: VerifySuite,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CountCmd {
    /// Pop-stacked permutations `p_n`, optionally by number of runs.
    P {
        #[arg(long, default_value_t = 18)]
        max: usize,
        #[arg(long)]
        runs: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Recompute a JSON table written by `count p --format json` and compare.
    Check { path: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Bfile,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AutomatonAction {
    Build,
    Minimize,
    Gf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Pk,
    Eulerian,
    A,
    Dk,
    Bridge,
}

#[derive(Subcommand)]
enum TwopssCmd {
    /// Coloured walk of a 2-pop-stack-sortable permutation.
    Encode { perm: Permutation },
    /// Permutation of a walk such as `"U+ U- D"`.
    Decode { walk: ColouredWalk },
    /// `n,ascents,count` for cost at most 2.
    Table {
        #[arg(long, default_value_t = 9)]
        max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WorstcaseAction {
    Bandwidth,
    ImN2,
    Witness,
    Hasse,
    SkewReport,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    All,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct CountsJson {
    max: usize,
    /// `p_1..p_max` as decimal strings.
    p: Vec<String>,
    /// `p_{n,k}` for `1 <= k <= n`, row `n-1`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    runs: Option<Vec<Vec<String>>>,
}

impl CountsJson {
    fn from_counts(c: &Counts) -> CountsJson {
        CountsJson {
            max: c.p.len() - 1,
            p: c.p[1..].iter().map(|x| x.to_string()).collect(),
            runs: c.triangle.as_ref().map(|t| {
                t.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(n, row)| row[1..=n].iter().map(|x| x.to_string()).collect())
                    .collect()
            }),
        }
    }
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<flipsort::Error> for Failure {
    fn from(e: flipsort::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match run(cli.cmd, exec) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
    }
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn run(cmd: Cmd, exec: Exec) -> Out {
    match cmd {
        Cmd::Flip { perm, steps } => Ok(format!("{}\n", perm.flip_times(steps))),
        Cmd::Cost { perm } => Ok(format!("{}\n", perm.cost())),
        Cmd::Trace { perm } => Ok(lines(perm.trajectory())),
        Cmd::IsPopstacked { perm } => Ok(format!("{}\n", is_popstacked(&perm))),
        Cmd::Preimages { perm } => {
            let set = if is_layered_popstacked(&perm) {
                preimages_layered(&perm)?
            } else {
                oracle::preimage_set(&perm)?
            };
            Ok(lines(set))
        }
        Cmd::Count(c) => count(c, exec),
        Cmd::Automaton {
            action,
            runs,
            export,
        } => automaton(action, runs, export),
        Cmd::Series { which, order, k } => series(which, order, k),
        Cmd::Twopss(t) => twopss(t),
        Cmd::Worstcase {
            action,
            n,
            k,
            nk,
            m,
            i,
            j,
        } => worst(action, exec, n, k, nk, m, i, j),
        Cmd::Diagram {
            source,
            iter,
            out,
            seed,
        } => diagram(&source, &iter, out, seed),
        Cmd::Verify { suite: VerifySuite::All, n } => {
            let checks = verify_all(exec, n);
            let mut s = String::new();
            for c in &checks {
                let verdict = if c.passed { "ok" } else { "FAILED" };
                s += &format!("{:<28} n<={:<3} {verdict}", c.name, c.n);
                if !c.detail.is_empty() {
                    s += &format!("  ({})", c.detail);
                }
                s.push('\n');
            }
            if checks.iter().all(|c| c.passed) {
                Ok(s)
            } else {
                Err(Failure::Verification(s))
            }
        }
    }
}

fn count(c: CountCmd, exec: Exec) -> Out {
    match c {
        CountCmd::P { max, runs, format } => {
            if max == 0 {
                return Err(Failure::Usage("--max must be at least 1".into()));
            }
            let counts = flipsort::enumeration::count_popstacked_with(exec, max, runs);
            Ok(match format {
                Format::Plain => {
                    let mut s = lines([counts.p[1..].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")]);
                    if let Some(t) = &counts.triangle {
                        for (n, row) in t.iter().enumerate().skip(1) {
                            let r: Vec<String> = row[1..=n].iter().map(|x| x.to_string()).collect();
                            s += &format!("{n}: {}\n", r.join(" "));
                        }
                    }
                    s
                }
                Format::Bfile => counts.bfile(),
                Format::Csv => match counts.triangle_csv() {
                    Some(csv) => csv,
                    None => {
                        let mut s = String::from("n,count\n");
                        for (n, v) in counts.p.iter().enumerate().skip(1) {
                            s += &format!("{n},{v}\n");
                        }
                        s
                    }
                },
                Format::Json => {
                    serde_json::to_string_pretty(&CountsJson::from_counts(&counts)).expect("plain data") + "\n"
                }
            })
        }
        CountCmd::Check { path } => {
            let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let claimed: CountsJson =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            if claimed.max == 0 {
                return Err(Failure::Usage("table is empty".into()));
            }
            let fresh = CountsJson::from_counts(&count_popstacked(claimed.max, claimed.runs.is_some()));
            let bad: Vec<usize> = (0..claimed.max)
                .filter(|&i| claimed.p.get(i) != fresh.p.get(i))
                .map(|i| i + 1)
                .collect();
            if bad.is_empty() && claimed == fresh {
                Ok(format!("ok: p_1..p_{} agree\n", claimed.max))
            } else {
                Err(Failure::Verification(format!("mismatch at n = {bad:?}\n")))
            }
        }
    }
}

fn automaton(action: AutomatonAction, k: usize, export: Option<PathBuf>) -> Out {
    if k == 0 || k > 10 {
        return Err(Failure::Usage("--runs must be between 1 and 10".into()));
    }
    let d = build_ak(k);
    let (d, out) = match action {
        AutomatonAction::Build => {
            let s = format!("states {}\n", d.state_count());
            (d, s)
        }
        AutomatonAction::Minimize => {
            let m = d.minimize();
            let s = format!("states {} minimized {}\n", d.state_count(), m.state_count());
            (m, s)
        }
        AutomatonAction::Gf => {
            let gf = dfa_to_gf(&d)?;
            let s = format!("{gf}\n{}\n", gf.to_dense_string());
            (d, s)
        }
    };
    if let Some(path) = export {
        fs::write(&path, d.export()).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(out)
}

fn series(which: SeriesKind, order: usize, k: i64) -> Out {
    let positive = |k: i64| -> Result<usize, Failure> {
        usize::try_from(k)
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| Failure::Usage("--k must be positive".into()))
    };
    match which {
        SeriesKind::Pk => {
            let k = positive(k)?;
            if k > 7 {
                return Err(Failure::Usage("--k at most 7 for pk".into()));
            }
            let gf = dfa_to_gf(&build_ak(k))?;
            Ok(format!("{gf}\n{}\n", gf.series(order)?))
        }
        SeriesKind::Eulerian => {
            let gf = eulerian_column_gf(positive(k)?);
            Ok(format!("{gf}\n{}\n", gf.series(order)?))
        }
        SeriesKind::A => {
            let t = a_table(order);
            let mut s = String::from("n,ascents,count\n");
            for (n, row) in t.iter().enumerate().skip(1) {
                for (a, v) in row.iter().enumerate().take(n) {
                    s += &format!("{n},{a},{v}\n");
                }
            }
            Ok(s)
        }
        SeriesKind::Dk => Ok(format!("{}\n", diagonal_gf(k, order))),
        SeriesKind::Bridge => Ok(format!("{}\n", bridge_gf(order))),
    }
}

fn twopss(t: TwopssCmd) -> Out {
    match t {
        TwopssCmd::Encode { perm } => Ok(format!("{}\n", encode_2pss(&perm)?)),
        TwopssCmd::Decode { walk } => Ok(format!("{}\n", decode_walk(&walk)?)),
        TwopssCmd::Table { max } => series(SeriesKind::A, max, 1),
    }
}

#[allow(clippy::too_many_arguments)]
fn worst(action: WorstcaseAction, exec: Exec, n: usize, k: usize, nk: usize, m: usize, i: usize, j: usize) -> Out {
    let verdict = |name: &str, ok: bool| {
        let s = format!("{name} n={n}: {ok}\n");
        if ok {
            Ok(s)
        } else {
            Err(Failure::Verification(s))
        }
    };
    match action {
        WorstcaseAction::Bandwidth => verdict("bandwidth", worstcase::verify_bandwidth_theorem(exec, n)?),
        WorstcaseAction::ImN2 => {
            if n < 2 {
                return Err(Failure::Usage("--n must be at least 2".into()));
            }
            let members: Vec<Permutation> = oracle::all_permutations(n)?
                .filter(worstcase::is_im_n_minus_2)
                .collect();
            let mut s = String::from("perm,preimage\n");
            for t in &members {
                s += &format!("{t},{}\n", worstcase::preimage_n_minus_2(t)?);
            }
            s += &format!("# {} members, formula {}\n", members.len(), worstcase::im_n_minus_2_count(n));
            Ok(s)
        }
        WorstcaseAction::Witness => {
            let p = worstcase::coverage_witness(n, m, i, j)?;
            Ok(format!("{p}\n"))
        }
        WorstcaseAction::Hasse => {
            let h = worstcase::hasse(k, nk)?;
            let mut s = String::from("digraph shadows {\n");
            for (x, y) in &h.edges {
                let style = if h.is_chain_edge(*x, *y) { " [color=blue]" } else { "" };
                s += &format!("  {} -> {}{style};\n", h.nodes[*x], h.nodes[*y]);
            }
            s += "}\n";
            Ok(s)
        }
        WorstcaseAction::SkewReport => {
            let r = worstcase::skew_conjecture_report(exec, n)?;
            let mut s = r.to_records();
            s += &format!("# observed {:?} predicted {:?}\n", r.by_cost, r.predicted());
            if r.holds() {
                Ok(s)
            } else {
                Err(Failure::Verification(s))
            }
        }
    }
}

fn diagram(source: &str, iter: &str, out: Option<PathBuf>, seed: u64) -> Out {
    let (p, origin) = match source.strip_prefix("random:") {
        Some(n) => {
            let n: usize = n
                .parse()
                .map_err(|_| Failure::Usage(format!("bad size in {source:?}")))?;
            if n == 0 {
                return Err(Failure::Usage("random size must be positive".into()));
            }
            let mut v: Vec<u32> = (1..=n as u32).collect();
            v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            (Permutation::new(v)?, format!("random n={n} rng=ChaCha8 seed={seed}"))
        }
        None => {
            let p: Permutation = source.parse()?;
            (p, "given".to_string())
        }
    };
    let iterations: BTreeSet<usize> = if iter == "all" {
        (0..=p.cost()).collect()
    } else {
        let m = iter
            .parse()
            .map_err(|_| Failure::Usage(format!("--iter expects a number or `all`, got {iter:?}")))?;
        BTreeSet::from([m])
    };
    let n = p.len();
    let mut csv = format!("# source: {origin}\n# bound for iteration m: |value - i| <= {}-m\n", n - 1);
    csv += "m,i,value\n";
    for &m in &iterations {
        let d = worstcase::diagram_dots(&p, m)?;
        csv += d.to_csv().strip_prefix("m,i,value\n").expect("header");
    }
    match out {
        Some(path) => {
            fs::write(&path, &csv).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {} iterations of {n} dots to {}\n", iterations.len(), path.display()))
        }
        None => Ok(csv),
    }
}
