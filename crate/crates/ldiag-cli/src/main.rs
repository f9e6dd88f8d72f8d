//! `ldiag`: command-line front end for the labelled-diagram algebra.
//!
//! Matrices are written in row text (`"1 0; 0 2"`, `"e"` for the empty
//! diagram) and compositions as comma-separated parts (`"2,3"`, `"e"`).
//! Passing `-` for a matrix argument reads it from stdin instead. Exit
//! status is 0 on success, 1 when a computation finds a counterexample or
//! mismatch, and 2 on usage or parse errors. Output for fixed inputs is
//! deterministic byte for byte.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ldiag_core::{
    antipode, deformed_product, deformed_product_at, enumerate_by_weight_bounded,
    mqsym_oracle_product, mzv_truncated, quasi_shuffle, verify_hopf_axioms, Composition,
    DiagramSum, HopfStructure, WeightMatrix, DEFAULT_ENUMERATION_BOUND,
};

/// Environment variable capping the weight `enumerate` accepts; the
/// built-in default applies when unset.
const MAX_WEIGHT_VAR: &str = "LDIAG_MAX_WEIGHT";

#[derive(Parser)]
#[command(
    name = "ldiag",
    version,
    about = "Exact algebra of labelled diagrams: deformed products, Hopf \
             structure, enumeration, and independent cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// The two named parameter points carrying verified Hopf structure.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StructureName {
    /// Crossing and superposing switched off: concatenation product with
    /// the column-subset coproduct.
    Ldiag,
    /// All deformations at 1: the matrix quasi-symmetric product with the
    /// column-cut coproduct.
    Mqsym,
}

impl StructureName {
    fn structure(self) -> HopfStructure {
        match self {
            StructureName::Ldiag => HopfStructure::ldiag(),
            StructureName::Mqsym => HopfStructure::mqsym(),
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Deformed product of two diagrams, symbolic in qc and qs unless
    /// both are overridden.
    Product {
        a: String,
        b: String,
        /// Evaluate the crossing parameter at an integer (needs --qs).
        #[arg(long, requires = "qs", allow_hyphen_values = true)]
        qc: Option<i64>,
        /// Evaluate the superposing parameter at an integer (needs --qc).
        #[arg(long, requires = "qc", allow_hyphen_values = true)]
        qs: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Concatenation of two diagrams (the product at qc = qs = 0).
    Concat {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coproduct of a diagram under a named structure.
    Coproduct {
        d: String,
        #[arg(long, value_enum, default_value = "ldiag")]
        structure: StructureName,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Antipode of a diagram under a named structure.
    Antipode {
        d: String,
        #[arg(long, value_enum, default_value = "ldiag")]
        structure: StructureName,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the Hopf axioms exhaustively on the deck of diagrams up to a
    /// weight; exits 1 when a counterexample is found.
    Verify {
        #[arg(long, value_enum, default_value = "ldiag")]
        structure: StructureName,
        /// Largest diagram weight included in the deck.
        #[arg(long, default_value_t = 2)]
        max_weight: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List every diagram of the given weight in canonical order.
    Enumerate {
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Factor a diagram into its irreducible blocks, one per line.
    Factor {
        d: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Commutative degree monomial of a diagram.
    Monomial {
        d: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Canonical representative of a diagram with row labels forgotten.
    Unlabel {
        d: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Quasi-shuffle product of two compositions.
    Stuffle {
        u: String,
        v: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Truncated Euler sum of a composition, over indices up to N.
    Mzv {
        s: String,
        #[arg(long = "N")]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the product evaluated at (1,1) against the independent
    /// brute-force oracle; exits 1 on mismatch.
    OracleCompare {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Lazily cached stdin so `-` can stand for a matrix argument.
#[derive(Default)]
struct Inputs {
    stdin: Option<String>,
}

impl Inputs {
    fn matrix(&mut self, raw: &str) -> Result<WeightMatrix, String> {
        let text = if raw == "-" {
            if self.stdin.is_none() {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| format!("reading stdin: {e}"))?;
                self.stdin = Some(buf);
            }
            self.stdin.as_deref().unwrap()
        } else {
            raw
        };
        text.parse().map_err(|e| format!("{e}"))
    }
}

fn composition(raw: &str) -> Result<Composition, String> {
    raw.parse().map_err(|e| format!("{e}"))
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE, so printing into a closed pipe (`ldiag
    // enumerate 3 | head -1`) would panic on EPIPE; die silently like
    // any well-behaved filter instead.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut inputs = Inputs::default();
    match cli.verb {
        Verb::Product { a, b, qc, qs, format } => {
            let x = DiagramSum::basis(inputs.matrix(&a)?);
            let y = DiagramSum::basis(inputs.matrix(&b)?);
            let prod = match (qc, qs) {
                (Some(qc), Some(qs)) => deformed_product_at(&x, &y, qc, qs),
                _ => deformed_product(&x, &y),
            };
            match format {
                Format::Text => println!("{prod}"),
                Format::Json => println!("{}", prod.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Concat { a, b, format } => {
            let joined = inputs.matrix(&a)?.concat(&inputs.matrix(&b)?);
            match format {
                Format::Text => println!("{joined}"),
                Format::Json => println!("{}", joined.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Coproduct { d, structure, format } => {
            let split = structure.structure().coproduct(&inputs.matrix(&d)?);
            match format {
                Format::Text => println!("{split}"),
                Format::Json => println!("{}", split.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Antipode { d, structure, format } => {
            let s = antipode(&inputs.matrix(&d)?, &structure.structure())
                .map_err(|e| format!("{e}"))?;
            match format {
                Format::Text => println!("{s}"),
                Format::Json => println!("{}", s.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Verify { structure, max_weight, format } => {
            let mut deck = Vec::new();
            for n in 0..=max_weight {
                deck.extend(
                    enumerate_by_weight_bounded(n, DEFAULT_ENUMERATION_BOUND)
                        .map_err(|e| format!("{e}"))?,
                );
            }
            let report = verify_hopf_axioms(&deck, &structure.structure());
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    for check in &report.checks {
                        match &check.counterexample {
                            None => println!(
                                "{}: {}",
                                check.axiom,
                                if check.passed { "pass" } else { "fail" }
                            ),
                            Some(witness) => {
                                println!("{}: fail ({witness})", check.axiom)
                            }
                        }
                    }
                    match &report.cocommutativity_witness {
                        None => println!("cocommutative: yes"),
                        Some(witness) => println!("cocommutative: no ({witness})"),
                    }
                }
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Verb::Enumerate { n, format } => {
            let bound = match std::env::var(MAX_WEIGHT_VAR) {
                Ok(text) => text
                    .parse::<u64>()
                    .map_err(|_| format!("{MAX_WEIGHT_VAR} must be an integer, got {text:?}"))?,
                Err(_) => DEFAULT_ENUMERATION_BOUND,
            };
            let deck = enumerate_by_weight_bounded(n, bound).map_err(|e| format!("{e}"))?;
            match format {
                Format::Text => {
                    for d in &deck {
                        println!("{d}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::Value::Array(deck.iter().map(|d| d.to_json()).collect())
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Factor { d, format } => {
            let factors = inputs.matrix(&d)?.factor_irreducibles();
            match format {
                Format::Text => {
                    for f in &factors {
                        println!("{f}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::Value::Array(factors.iter().map(|f| f.to_json()).collect())
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Monomial { d, format } => {
            let m = inputs.matrix(&d)?.monomial();
            match format {
                Format::Text => println!("{m}"),
                Format::Json => println!("{}", m.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Unlabel { d, format } => {
            let u = inputs.matrix(&d)?.unlabel();
            match format {
                Format::Text => println!("{}", u.canon()),
                Format::Json => println!("{}", u.canon().to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Stuffle { u, v, format } => {
            let shuffled = quasi_shuffle(&composition(&u)?, &composition(&v)?);
            match format {
                Format::Text => println!("{shuffled}"),
                Format::Json => println!("{}", shuffled.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Mzv { s, n, format } => {
            let value = mzv_truncated(&composition(&s)?, n);
            match format {
                Format::Text => println!("{value:.6}"),
                Format::Json => println!("{}", serde_json::json!({ "value": value })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::OracleCompare { a, b, format } => {
            let a = inputs.matrix(&a)?;
            let b = inputs.matrix(&b)?;
            let evaluated = deformed_product_at(
                &DiagramSum::basis(a.clone()),
                &DiagramSum::basis(b.clone()),
                1,
                1,
            );
            let oracle = mqsym_oracle_product(&a, &b);
            let agree = evaluated == oracle;
            match format {
                Format::Text => {
                    if agree {
                        println!("agree: {} terms", oracle.num_terms());
                    } else {
                        println!("MISMATCH");
                        println!("evaluated product:");
                        println!("{evaluated}");
                        println!("oracle:");
                        println!("{oracle}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "match": agree,
                        "evaluated_product": evaluated.to_json(),
                        "oracle": oracle.to_json(),
                    })
                ),
            }
            Ok(if agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}
