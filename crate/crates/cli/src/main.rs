use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rgs_gray::analysis::{
    check_conjecture_with_guard, column_name, first_violation, gray_bound, is_circular, table1_report, table2_report,
    COLUMNS, TABLE_GUARD,
};
use rgs_gray::digit::{compact, joined};
use rgs_gray::oracle::{oracle_list_with_guard, DEFAULT_GUARD};
use rgs_gray::tree::call_tree;
use rgs_gray::{generate, generate_list, Class, Error, ErrorKind, Order};

/// Largest `n` the enumerating commands accept without `--allow-large`.
const GEN_GUARD: usize = 10;
/// Oracle guard used with `--allow-large`.
const LARGE_ORACLE_GUARD: usize = 10;

#[derive(Parser)]
#[command(name = "rgs-gray", version, about = "Gray codes for restricted growth sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every sequence of a family in the chosen order.
    Gen {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
        /// Stop after this many sequences.
        #[arg(long)]
        limit: Option<u64>,
        /// Allow n above 10.
        #[arg(long)]
        allow_large: bool,
    },
    /// Compare a generator with the brute-force list and check its distance bound.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Raise the brute-force guard from 9 to 10.
        #[arg(long)]
        allow_large: bool,
    },
    /// Worst-case and average neighbor distances of every generated list.
    Stats {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = StatsFormat::Text)]
        format: StatsFormat,
    },
    /// Check that co-reflected descent sequences are 4-adjacent.
    Conjecture {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Raise the brute-force guard from 9 to 10.
        #[arg(long)]
        allow_large: bool,
    },
    /// Print the recursion tree of a generator as Graphviz DOT.
    Tree {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct Target {
    /// se, asc, rgf, stair or desc
    #[arg(long)]
    class: Class,
    /// rgc or corgc
    #[arg(long)]
    order: Order,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Space-separated values, one sequence per line.
    Lines,
    /// Digit strings; n <= 10 only.
    Compact,
    /// Comma-separated values with a header row.
    Csv,
    /// Graphviz; tree command only.
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatsFormat {
    Text,
    Csv,
}

enum Failure {
    /// A check ran and did not hold.
    Check,
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let result = match cli.command {
        Command::Gen { target, format, limit, allow_large } => cmd_gen(&mut out, &target, format, limit, allow_large),
        Command::Verify { target, allow_large } => cmd_verify(&mut out, &target, allow_large),
        Command::Stats { n_min, n_max, format } => cmd_stats(&mut out, n_min, n_max, format),
        Command::Conjecture { n_max, allow_large } => cmd_conjecture(&mut out, n_max, allow_large),
        Command::Tree { target, format } => cmd_tree(&mut out, &target, format),
    };
    let result = result.and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e.kind() {
                ErrorKind::Resource => ExitCode::from(3),
                ErrorKind::Domain | ErrorKind::Unsupported => ExitCode::from(2),
            }
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn oracle_guard(allow_large: bool) -> usize {
    if allow_large {
        LARGE_ORACLE_GUARD
    } else {
        DEFAULT_GUARD
    }
}

fn render(s: &[u8], format: Format) -> String {
    match format {
        Format::Compact => compact(s),
        Format::Csv => joined(s, ","),
        _ => joined(s, " "),
    }
}

fn cmd_gen(out: &mut impl Write, target: &Target, format: Format, limit: Option<u64>, allow_large: bool) -> Outcome {
    let Target { class, order, n } = *target;
    match format {
        Format::Dot => return Err(Failure::Usage("dot output is only available for the tree command".into())),
        Format::Compact if n > 10 => return Err(Failure::Usage(format!("compact output needs n <= 10, got {n}"))),
        _ => {}
    }
    if n > GEN_GUARD && !allow_large {
        return Err(Error::GuardExceeded { n, limit: GEN_GUARD }.into());
    }
    if class == Class::Descent && order != Order::CoRgc {
        return Err(Failure::Usage("descent sequences are only listed in corgc order".into()));
    }
    if format == Format::Csv {
        let header: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        writeln!(out, "{}", header.join(","))?;
    }
    let limit = limit.unwrap_or(u64::MAX);
    if class == Class::Descent {
        let list = oracle_list_with_guard::<u8>(class, n, order, oracle_guard(allow_large))?;
        for s in list.iter().take(usize::try_from(limit).unwrap_or(usize::MAX)) {
            writeln!(out, "{}", render(s, format))?;
        }
        return Ok(());
    }
    let mut written = 0;
    let mut io_error = None;
    if limit > 0 {
        generate(class, order, n, &mut |s: &[u8]| {
            if let Err(e) = writeln!(out, "{}", render(s, format)) {
                io_error = Some(e);
                return ControlFlow::Break(());
            }
            written += 1;
            if written >= limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
    }
    match io_error {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn cmd_verify(out: &mut impl Write, target: &Target, allow_large: bool) -> Outcome {
    let Target { class, order, n } = *target;
    let expected = oracle_list_with_guard::<u8>(class, n, order, oracle_guard(allow_large))?;
    let got = generate_list::<u8>(class, order, n)?;
    if let Some(i) = (0..got.len().max(expected.len())).find(|&i| got.get(i) != expected.get(i)) {
        let show = |s: Option<&Vec<u8>>| s.map_or("<none>".to_string(), |s| joined(s, " "));
        writeln!(out, "FAIL {class} {order} n={n}: lists diverge at index {i}")?;
        writeln!(out, "  generator: {}", show(got.get(i)))?;
        writeln!(out, "  oracle:    {}", show(expected.get(i)))?;
        return Err(Failure::Check);
    }
    let bound = gray_bound(class, order).expect("generated families have a bound");
    if let Some(v) = first_violation(&got, bound, is_circular(class, order))? {
        writeln!(
            out,
            "FAIL {class} {order} n={n}: {} -> {} at index {} differ in {} positions over a window of {} (bound {bound})",
            joined(&v.left, " "),
            joined(&v.right, " "),
            v.index,
            v.diff.distance,
            v.diff.window,
        )?;
        return Err(Failure::Check);
    }
    writeln!(out, "PASS {class} {order} n={n}: {} sequences match, {bound}-adjacent", got.len())?;
    Ok(())
}

fn cmd_stats(out: &mut impl Write, n_min: usize, n_max: usize, format: StatsFormat) -> Outcome {
    let averages = table2_report(n_min, n_max)?;
    let worst = table1_report(n_max.min(TABLE_GUARD))?;
    let header: Vec<String> = COLUMNS.iter().map(|&(c, o)| column_name(c, o)).collect();
    let worst_rows = worst.rows.iter().filter(|(n, _)| *n >= n_min);
    match format {
        StatsFormat::Csv => {
            writeln!(out, "n,{}", header.join(","))?;
            for row in &averages {
                writeln!(out, "{},{}", row.n, row.rendered().join(","))?;
            }
            writeln!(out)?;
            writeln!(out, "n,{}", header.join(","))?;
            for (n, row) in worst_rows {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                writeln!(out, "{n},{}", cells.join(","))?;
            }
        }
        StatsFormat::Text => {
            let line = |out: &mut dyn Write, first: &str, cells: &[String]| -> io::Result<()> {
                write!(out, "{first:>6}")?;
                for c in cells {
                    write!(out, " {c:>9}")?;
                }
                writeln!(out)
            };
            writeln!(out, "average neighbor distance")?;
            line(out, "n", &header)?;
            for row in &averages {
                line(out, &row.n.to_string(), &row.rendered())?;
            }
            writeln!(out)?;
            writeln!(out, "worst-case neighbor distance")?;
            line(out, "n", &header)?;
            for (n, row) in worst_rows {
                line(out, &n.to_string(), &row.map(|v| v.to_string()))?;
            }
            let bounds: Vec<String> = worst.cells.iter().map(|c| c.bound.to_string()).collect();
            line(out, "bound", &bounds)?;
        }
    }
    for cell in worst.cells.iter().filter(|c| c.exceeded()) {
        eprintln!(
            "bound exceeded: {} observed {} > {}",
            column_name(cell.class, cell.order),
            cell.observed,
            cell.bound
        );
    }
    if worst.any_exceeded() {
        return Err(Failure::Check);
    }
    Ok(())
}

fn cmd_conjecture(out: &mut impl Write, n_max: usize, allow_large: bool) -> Outcome {
    if n_max < 2 {
        return Err(Failure::Usage(format!("--n-max must be at least 2, got {n_max}")));
    }
    let guard = oracle_guard(allow_large);
    let mut holds = true;
    for n in 2..=n_max {
        let check = check_conjecture_with_guard(n, guard)?;
        match &check.witness {
            None => writeln!(out, "n={n}: {} sequences, 4-adjacent (worst distance {})", check.count, check.worst)?,
            Some(w) => {
                holds = false;
                writeln!(
                    out,
                    "n={n}: COUNTEREXAMPLE {} -> {} at index {}: {} positions over a window of {}",
                    compact(&w.left),
                    compact(&w.right),
                    w.index,
                    w.diff.distance,
                    w.diff.window
                )?;
                eprintln!("counterexample at n={n}: {} -> {}", compact(&w.left), compact(&w.right));
            }
        }
    }
    if holds {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_tree(out: &mut impl Write, target: &Target, format: Format) -> Outcome {
    if format != Format::Dot {
        return Err(Failure::Usage("the tree command only writes dot".into()));
    }
    let tree = call_tree(target.class, target.order, target.n)?;
    out.write_all(tree.to_dot().as_bytes())?;
    Ok(())
}
