//! `ptree`: classify, transform, enumerate and sample plane trees, and check
//! the tree-counting identities.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and
//! 2 for usage or input errors.

use std::fmt::Write as _;
use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use plane_trees::enumerate::{
    catalan, double_factorial_odd, factorial, increasing_trees, labeled_trees,
    rooted_labeled_trees, sample_increasing_with, sample_labeled_with,
};
use plane_trees::polynomials::{
    verify_theorem1, verify_theorem2_with, CoefficientTables, EnumOptions, INCREASING_BOUND,
    LABELED_BOUND,
};
use plane_trees::stirling::{enum_stirling, stirling_to_tree, tree_to_stirling, StirlingPerm};
use plane_trees::{big_phi, big_psi, parse_tree, phi, EdgeStatus, Label, PlaneTree, TagMode};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "ptree",
    version,
    about = "Labeled plane trees, increasing trees and Stirling permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every edge as proper or improper.
    Classify {
        /// Tree text, or "-" to read one tree per line from stdin.
        tree: String,
    },
    /// Apply the edge involution at the edge "parent,child".
    Phi { tree: String, edge: String },
    /// Map to a tagged increasing tree (forward) or back (inverse).
    Bij {
        direction: BijDirection,
        tree: String,
        /// Tag the edges at vertex 1 with t; the root must be labeled 1.
        #[arg(long)]
        rooted: bool,
    },
    /// Convert between increasing trees and Stirling permutations.
    Stirling {
        direction: StirlingDirection,
        /// Tree text or a space-separated permutation; "-" reads stdin.
        input: String,
    },
    /// Check the counting identities exhaustively.
    Verify {
        target: VerifyTarget,
        /// Largest number of edges to enumerate.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Largest power of q in the series check.
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Worker threads for enumeration.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        /// Enumerate beyond the default size bounds.
        #[arg(long)]
        force: bool,
        /// Where the series coefficients come from.
        #[arg(long, value_enum, default_value_t = Source::Closed)]
        source: Source,
    },
    /// Print every member of a family, one per line.
    Enum {
        family: EnumFamily,
        #[arg(long)]
        n: usize,
        /// Print only the number of members.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        force: bool,
    },
    /// Draw uniform random members of a family.
    Sample {
        family: SampleFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BijDirection {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum StirlingDirection {
    To,
    From,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Thm1,
    Thm2,
    Counts,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Closed,
    Enumerated,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFamily {
    #[value(name = "P")]
    P,
    #[value(name = "O")]
    O,
    #[value(name = "I")]
    I,
    Stirling,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleFamily {
    #[value(name = "P")]
    P,
    #[value(name = "I")]
    I,
}

/// Input or usage problem; always exit status 2.
struct Failure(String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Classify { tree } => per_input(&tree, classify),
        Command::Phi { tree, edge } => per_input(&tree, |t| apply_phi(t, &edge)),
        Command::Bij {
            direction,
            tree,
            rooted,
        } => per_input(&tree, |t| bijection(t, direction, rooted)),
        Command::Stirling { direction, input } => {
            per_input(&input, |line| convert_stirling(line, direction))
        }
        Command::Verify {
            target,
            n,
            order,
            jobs,
            force,
            source,
        } => {
            let opts = EnumOptions {
                force,
                jobs: jobs as usize,
            };
            verify(target, n, order, source, &opts)
        }
        Command::Enum {
            family,
            n,
            count_only,
            force,
        } => enumerate(family, n, count_only, force),
        Command::Sample {
            family,
            n,
            seed,
            count,
        } => sample(family, n, seed, count),
    }
}

/// Runs `f` on the operand, or on each non-empty stdin line when it is "-",
/// and prints the results.
fn per_input(operand: &str, f: impl Fn(&str) -> Result<String, Failure>) -> CmdResult {
    let mut out = String::new();
    if operand == "-" {
        for line in io::stdin().lock().lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            out.push_str(&f(line.trim())?);
            out.push('\n');
        }
    } else {
        out.push_str(&f(operand)?);
        out.push('\n');
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(text: &str) -> io::Result<()> {
    let mut stdout = io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn classify(text: &str) -> Result<String, Failure> {
    let tree = parse_tree(text)?;
    let status = tree.classify_all();
    let mut out = String::new();
    for e in tree.edges_first_descent() {
        let (p, c) = tree.edge_labels(e);
        let word = match status[e.index()] {
            EdgeStatus::Proper => "proper",
            EdgeStatus::Improper => "improper",
        };
        writeln!(out, "({p},{c}): {word}").unwrap();
    }
    let stats = tree.stats();
    write!(out, "impr={} prop={}", stats.impr, stats.prop).unwrap();
    Ok(out)
}

fn parse_edge(text: &str) -> Result<(Label, Label), Failure> {
    let bad = || {
        Failure(format!(
            "expected an edge as \"parent,child\", got {text:?}"
        ))
    };
    let (p, c) = text.split_once(',').ok_or_else(bad)?;
    let label = |s: &str| {
        s.trim()
            .parse::<u32>()
            .ok()
            .and_then(Label::new)
            .ok_or_else(bad)
    };
    Ok((label(p)?, label(c)?))
}

fn apply_phi(text: &str, edge: &str) -> Result<String, Failure> {
    let tree = parse_tree(text)?;
    let (p, c) = parse_edge(edge)?;
    let e = tree
        .edge_between(p, c)
        .ok_or_else(|| Failure(format!("({p},{c}) is not an edge of the tree")))?;
    Ok(phi(&tree, e)?.to_string())
}

fn bijection(text: &str, direction: BijDirection, rooted: bool) -> Result<String, Failure> {
    let tree = parse_tree(text)?;
    let out = match direction {
        BijDirection::Forward => {
            let mode = if rooted {
                TagMode::Rooted
            } else {
                TagMode::Plain
            };
            big_phi(&tree, mode)?
        }
        BijDirection::Inverse => big_psi(&tree)?,
    };
    Ok(out.to_string())
}

fn convert_stirling(input: &str, direction: StirlingDirection) -> Result<String, Failure> {
    Ok(match direction {
        StirlingDirection::To => tree_to_stirling(&parse_tree(input)?)?.to_string(),
        StirlingDirection::From => stirling_to_tree(&input.parse::<StirlingPerm>()?).to_string(),
    })
}

fn enumerate(family: EnumFamily, n: usize, count_only: bool, force: bool) -> CmdResult {
    let bound = match family {
        EnumFamily::P | EnumFamily::O => LABELED_BOUND,
        EnumFamily::I | EnumFamily::Stirling => INCREASING_BOUND,
    };
    if n > bound && !force {
        return Err(Failure(format!(
            "n = {n} exceeds the enumeration bound {bound}; pass --force to override"
        )));
    }
    let items: Box<dyn Iterator<Item = String>> = match family {
        EnumFamily::P => Box::new(labeled_trees(n).map(|t| t.to_string())),
        EnumFamily::O => Box::new(rooted_labeled_trees(n).map(|t| t.to_string())),
        EnumFamily::I => Box::new(increasing_trees(n).map(|t| t.to_string())),
        EnumFamily::Stirling => Box::new(enum_stirling(n).map(|p| p.to_string())),
    };
    if count_only {
        emit(&format!("{}\n", items.count()))?;
    } else {
        stream(items)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn stream(mut lines: impl Iterator<Item = String>) -> io::Result<()> {
    let mut out = BufWriter::new(io::stdout().lock());
    let result = lines
        .try_for_each(|line| writeln!(out, "{line}"))
        .and_then(|_| out.flush());
    match result {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn sample(family: SampleFamily, n: usize, seed: u64, count: usize) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = move |_| -> PlaneTree {
        match family {
            SampleFamily::P => sample_labeled_with(n, &mut rng),
            SampleFamily::I => sample_increasing_with(n, &mut rng),
        }
    };
    stream((0..count).map(draw).map(|t| t.to_string()))?;
    Ok(ExitCode::SUCCESS)
}

/// Collects report lines and remembers whether any of them failed.
#[derive(Default)]
struct Report {
    text: String,
    failed: bool,
}

impl Report {
    fn line(&mut self, ok: bool, body: impl std::fmt::Display) {
        self.failed |= !ok;
        let mark = if ok { "PASS" } else { "FAIL" };
        writeln!(self.text, "{mark} {body}").unwrap();
    }
}

fn timed<T>(what: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    eprintln!("{what}: {:.3}s", start.elapsed().as_secs_f64());
    out
}

fn verify(
    target: VerifyTarget,
    n: usize,
    order: usize,
    source: Source,
    opts: &EnumOptions,
) -> CmdResult {
    let wants = |t| target == t || target == VerifyTarget::All;
    let mut report = Report::default();
    if wants(VerifyTarget::Counts) {
        timed("counts", || verify_counts(n, opts, &mut report))?;
    }
    if wants(VerifyTarget::Thm1) {
        timed("thm1", || verify_thm1(n, opts, &mut report))?;
    }
    if wants(VerifyTarget::Thm2) {
        timed("thm2", || verify_thm2(order, source, opts, &mut report))?;
    }
    emit(&report.text)?;
    Ok(if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify_counts(n_max: usize, opts: &EnumOptions, report: &mut Report) -> Result<(), Failure> {
    for n in 0..=n_max {
        let lhs = factorial(n + 1) * catalan(n);
        let rhs = double_factorial_odd(n) << n;
        report.line(lhs == rhs, format_args!("counts n={n}: {lhs} = {rhs}"));
        if n <= LABELED_BOUND || opts.force {
            let p = labeled_trees(n).count();
            report.line(lhs == p.into(), format_args!("|P_{n}| = {p}"));
        }
        if n <= INCREASING_BOUND || opts.force {
            let i = increasing_trees(n).count();
            let expected = double_factorial_odd(n);
            report.line(expected == i.into(), format_args!("|I_{n}| = {i}"));
        }
    }
    Ok(())
}

fn verify_thm1(n_max: usize, opts: &EnumOptions, report: &mut Report) -> Result<(), Failure> {
    for n in 0..=n_max {
        let r = verify_theorem1(n, opts)?;
        let line =
            |name: &str, got: &dyn std::fmt::Display, want: &dyn std::fmt::Display, ok: bool| {
                if ok {
                    format!("{name}_{n} = {got}")
                } else {
                    format!("{name}_{n} = {got}, expected {want}")
                }
            };
        report.line(r.p_holds(), line("P", &r.p, &r.p_expected, r.p_holds()));
        report.line(r.o_holds(), line("O", &r.o, &r.o_expected, r.o_holds()));
    }
    Ok(())
}

fn verify_thm2(
    order: usize,
    source: Source,
    opts: &EnumOptions,
    report: &mut Report,
) -> Result<(), Failure> {
    let tables = match source {
        Source::Closed => CoefficientTables::closed_form(order),
        Source::Enumerated => CoefficientTables::enumerated(order, order, opts)?,
    };
    let r = verify_theorem2_with(&tables);
    for check in &r.checks {
        if check.holds() {
            report.line(true, format_args!("thm2 {} through q^{order}", check.name));
        } else {
            report.line(
                false,
                format_args!(
                    "thm2 {} through q^{order}, residual:\n{}",
                    check.name, check.residual
                ),
            );
        }
    }
    Ok(())
}
