//! `foldar`: enumerate cluster points, build twisted and folded AR-quivers
//! and run the verification suites.

mod export;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use foldar::arquiver::DynkinQuiver;
use foldar::exceptional::{d4_seeds, e6_seed, report};
use foldar::roots::parse_word;
use foldar::twist::{
    class_from_twisted_coxeter, diagram, twisted_cluster_point, twisted_coxeter_elements, vee, Side, TwistedClass,
};
use foldar::words::{ClusterPoint, CommutationClass};

use crate::export::{build_export, Format};
use crate::suites::Suite;

const DEFAULT_MAX_N: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "foldar", version, about = "Twisted and folded AR-quivers of type A_{2n+1}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    E6,
    D4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PointKind {
    /// The twisted adapted cluster point of A_{2n+1}.
    Twisted,
    /// The adapted cluster point of A_{2n}.
    #[value(name = "adapted-2n")]
    Adapted2n,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the classes of a cluster point.
    Enumerate {
        #[arg(long, value_enum, default_value = "a")]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "twisted")]
        point: PointKind,
    },
    /// Build the twisted (or folded) AR-quiver of one class.
    Build {
        /// Orientation string of an A_{2n} quiver, e.g. "><>><".
        #[arg(long, conflicts_with_all = ["word", "coxeter"])]
        quiver: Option<String>,
        /// `<` or `>`; required with --quiver and --coxeter.
        #[arg(long)]
        side: Option<String>,
        /// A reduced word of the longest element of A_{2n+1}.
        #[arg(long, conflicts_with = "coxeter")]
        word: Option<String>,
        /// A twisted Coxeter word of A_{2n+1}; needs --n.
        #[arg(long)]
        coxeter: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        folded: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exits 1 on the first falsification.
    Verify {
        #[arg(value_enum, required = true)]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of suites run concurrently; output order is unchanged.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Invalid input; reported with exit code 2.
#[derive(Debug)]
struct ConfigError(String);

impl<E: std::fmt::Display> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.to_string())
    }
}

fn max_n() -> Result<usize, ConfigError> {
    match std::env::var("FOLDAR_MAX_N") {
        Ok(v) => v.parse().map_err(|_| ConfigError(format!("FOLDAR_MAX_N={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_n(n: usize) -> Result<usize, ConfigError> {
    let cap = max_n()?;
    if n == 0 || n > cap {
        return Err(ConfigError(format!("n = {n} is outside 1..={cap} (set FOLDAR_MAX_N to raise the cap)")));
    }
    Ok(n)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { family, n, point } => enumerate(family, n, point).map(|s| {
            println!("{s}");
            ExitCode::SUCCESS
        }),
        Command::Build { quiver, side, word, coxeter, n, folded, format, out } => {
            build(quiver, side, word, coxeter, n, folded, format, out).map(|_| ExitCode::SUCCESS)
        }
        Command::Verify { suites, n, jobs } => verify(&suites, n, jobs),
    };
    match result {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn composition(c: &[usize]) -> String {
    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn enumerate(family: Family, n: Option<usize>, point: PointKind) -> Result<String, ConfigError> {
    match family {
        Family::A => {
            let n = check_n(n.ok_or_else(|| ConfigError("--n is required for family a".into()))?)?;
            match point {
                PointKind::Twisted => {
                    let p = twisted_cluster_point(n);
                    Ok(format!(
                        "{} classes, composition {}, {} twisted Coxeter elements",
                        p.len(),
                        composition(&p.coxeter_composition(&vee(n))?),
                        twisted_coxeter_elements(n).len()
                    ))
                }
                PointKind::Adapted2n => {
                    let q = DynkinQuiver::type_a(2 * n, &"<".repeat(2 * n - 1))?;
                    let p = ClusterPoint::generate(&q.adapted_class());
                    Ok(format!("{} classes", p.len()))
                }
            }
        }
        Family::E6 => {
            if point != PointKind::Twisted {
                return Err(ConfigError("family e6 only has a twisted point".into()));
            }
            let r = report(&e6_seed())?;
            Ok(format!(
                "{} classes, composition {}, {} twisted Coxeter elements",
                r.classes,
                r.composition.as_deref().map(composition).unwrap_or_else(|| "mixed".into()),
                r.coxeter_elements
            ))
        }
        Family::D4 => {
            if point != PointKind::Twisted {
                return Err(ConfigError("family d4 only has twisted points".into()));
            }
            let mut lines = Vec::new();
            for s in d4_seeds() {
                let r = report(&s)?;
                lines.push(format!(
                    "{}: {} classes, composition {}, {} triply twisted Coxeter elements, {} word(s) per class",
                    r.name,
                    r.classes,
                    r.composition.as_deref().map(composition).unwrap_or_else(|| "mixed".into()),
                    r.coxeter_elements,
                    r.max_words_per_class
                ));
            }
            Ok(lines.join("\n"))
        }
    }
}

fn n_from_word_length(len: usize) -> Option<usize> {
    (1..=16).find(|&n| (2 * n + 1) * (n + 1) == len)
}

#[allow(clippy::too_many_arguments)]
fn build(
    quiver: Option<String>,
    side: Option<String>,
    word: Option<String>,
    coxeter: Option<String>,
    n: Option<usize>,
    folded: bool,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), ConfigError> {
    let side = side.map(|s| Side::parse(&s)).transpose()?;
    let tc = if let Some(o) = quiver {
        check_n(o.len().div_ceil(2))?;
        let q = DynkinQuiver::type_a(o.len() + 1, &o)?;
        TwistedClass::from_quiver(&q, side.ok_or_else(|| ConfigError("--side is required with --quiver".into()))?)?
    } else if let Some(w) = word {
        let w = parse_word(&w)?;
        let n = match n {
            Some(n) => n,
            None => n_from_word_length(w.len())
                .ok_or_else(|| ConfigError(format!("no A_{{2n+1}} has a longest word of length {}", w.len())))?,
        };
        check_n(n)?;
        TwistedClass::identify(&CommutationClass::new(&diagram(n), &w)?)?
    } else if let Some(c) = coxeter {
        let n = check_n(n.ok_or_else(|| ConfigError("--n is required with --coxeter".into()))?)?;
        let c = class_from_twisted_coxeter(n, &parse_word(&c)?)?;
        let tc = TwistedClass::identify(&c)?;
        if side.is_some_and(|s| s != tc.side()) {
            return Err(ConfigError(format!("the class of this twisted Coxeter word has side {}", tc.side().symbol())));
        }
        tc
    } else {
        return Err(ConfigError("one of --quiver, --word or --coxeter is required".into()));
    };
    let text = build_export(&tc, folded, format)?;
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verify(suites: &[Suite], n: usize, jobs: usize) -> Result<ExitCode, ConfigError> {
    let needs_n = suites.iter().any(|s| *s != Suite::Appendix);
    if needs_n {
        check_n(n)?;
    }
    if jobs == 0 {
        return Err(ConfigError("--jobs must be at least 1".into()));
    }
    let mut results = Vec::with_capacity(suites.len());
    for chunk in suites.chunks(jobs) {
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunk.iter().map(|&s| scope.spawn(move || suites::run(s, n))).collect();
            results.extend(handles.into_iter().map(|h| h.join().expect("suite thread panicked")));
        });
    }
    let mut failed = false;
    for (&s, result) in suites.iter().zip(results) {
        match result {
            Ok(summary) => println!("{}: pass ({summary})", s.name()),
            Err(counterexample) => {
                println!("{}: FAIL", s.name());
                println!("  {counterexample}");
                failed = true;
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
