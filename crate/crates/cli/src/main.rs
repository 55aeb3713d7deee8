//! `imcm` — batch command-line interface to the word-problem and
//! canonical-form library for partial braids and punctured-sphere
//! mapping classes.
//!
//! Every invocation is a single request: parse generator words, compute,
//! print, exit.  Exit status 0 reports success (and, for `equal` and
//! `relcheck`, a positive verdict), 1 reports a negative verdict, and 2
//! reports any usage or input error.  Identical invocations produce
//! byte-identical output; JSON output keeps keys in sorted order.

use clap::{Parser, Subcommand, ValueEnum};
use imcm_core::sampling::{random_word, Rng64};
use imcm_core::small_cases::{im0n_table, sphere_group_table, MultiplicationTable};
use imcm_core::sphere::SphereKind;
use imcm_core::tower::{
    abelianize, in_center, is_brunnian, is_brunnian_all, normalize, ElementFlavor,
};
use imcm_core::words::{check_relations, relations, RelationFlavor};
use imcm_core::{parse_word, tau_of_word, Error};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "imcm",
    version,
    about = "Word problems and canonical forms for partial braids and \
             punctured-sphere mapping classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    /// Partial braids of the disc (free-group action engine).
    Disc,
    /// Partial braids of the sphere (layered normal form engine).
    SphereBraid,
    /// Partial mapping classes of the punctured sphere.
    SphereMcg,
}

impl FlavorArg {
    fn element_flavor(self) -> ElementFlavor {
        match self {
            FlavorArg::Disc => ElementFlavor::Disc,
            FlavorArg::SphereBraid => ElementFlavor::SphereBraid,
            FlavorArg::SphereMcg => ElementFlavor::SphereMcg,
        }
    }

    fn name(self) -> &'static str {
        match self {
            FlavorArg::Disc => "disc",
            FlavorArg::SphereBraid => "sphere-braid",
            FlavorArg::SphereMcg => "sphere-mcg",
        }
    }

    fn relation_flavor(self) -> RelationFlavor {
        match self {
            FlavorArg::Disc => RelationFlavor::DiscInverse,
            FlavorArg::SphereBraid => RelationFlavor::SphereInverseBraid,
            FlavorArg::SphereMcg => RelationFlavor::SphereInverseMcg,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a word.
    Reduce {
        /// Number of strands / marked points.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Generator word, e.g. "s1 e2 s1^-1".
        word: String,
    },
    /// Decide equality of two words; exit 0 if equal, 1 if distinct.
    Equal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        left: String,
        right: String,
    },
    /// Print the partial injection traced by the strands of a word.
    Tau {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        word: String,
    },
    /// Print the abelianized image of a word (sphere-mcg flavor).
    Abelianize {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        word: String,
    },
    /// Test which single-strand deletions absorb the element.
    Brunnian {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        word: String,
    },
    /// Test centrality of a word's class (sphere-mcg flavor).
    Center {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        word: String,
    },
    /// Emit the full multiplication table of the partial mapping-class
    /// monoid at a small rank (n <= 3).
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Emit the multiplication table of a finite sphere group (n <= 3).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Check the defining relations of a flavor under its equality
    /// engine, plus seeded random strand-map spot checks; exit 0 on a
    /// full pass, 1 otherwise.
    Relcheck {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::SphereMcg)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn require_sphere_mcg(flavor: FlavorArg, command: &'static str) -> Result<(), Error> {
    if flavor != FlavorArg::SphereMcg {
        return Err(Error::Invalid {
            what: command,
            detail: "this command is defined for --flavor sphere-mcg only".into(),
        });
    }
    Ok(())
}

fn print_table(t: &MultiplicationTable, format: FormatArg, extra: &[(&str, serde_json::Value)]) {
    match format {
        FormatArg::Text => print!("{}", t.render_text()),
        FormatArg::Json => {
            let mut value = json!({
                "identity": t.identity,
                "names": t.names,
                "products": t.products,
                "size": t.names.len(),
            });
            let map = value.as_object_mut().expect("object literal");
            for (k, v) in extra {
                map.insert((*k).to_string(), v.clone());
            }
            println!("{value}");
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Reduce {
            n,
            flavor,
            format,
            word,
        } => {
            let w = parse_word(&word, n)?;
            let e = normalize(&w, flavor.element_flavor())?;
            match format {
                FormatArg::Text => println!("{e}"),
                FormatArg::Json => println!(
                    "{}",
                    json!({
                        "canonical": e.to_string(),
                        "map_rank": e.map_rank(),
                        "dom": e.dom,
                        "flavor": flavor.name(),
                        "idempotent": e.is_idempotent(),
                        "img": e.img,
                        "n": e.n,
                    })
                ),
            }
            Ok(0)
        }
        Command::Equal {
            n,
            flavor,
            format,
            left,
            right,
        } => {
            let f = flavor.element_flavor();
            let a = normalize(&parse_word(&left, n)?, f)?;
            let b = normalize(&parse_word(&right, n)?, f)?;
            let equal = a == b;
            match format {
                FormatArg::Text => println!("{}", if equal { "equal" } else { "distinct" }),
                FormatArg::Json => println!("{}", json!({ "equal": equal })),
            }
            Ok(u8::from(!equal))
        }
        Command::Tau { n, format, word } => {
            let t = tau_of_word(&parse_word(&word, n)?);
            match format {
                FormatArg::Text => println!("{t}"),
                FormatArg::Json => {
                    let pairs: Vec<[usize; 2]> = t
                        .domain()
                        .into_iter()
                        .map(|i| [i, t.apply(i).expect("domain point maps")])
                        .collect();
                    println!("{}", json!({ "map": t.to_string(), "pairs": pairs }));
                }
            }
            Ok(0)
        }
        Command::Abelianize {
            n,
            flavor,
            format,
            word,
        } => {
            require_sphere_mcg(flavor, "abelianize")?;
            let a = abelianize(&parse_word(&word, n)?);
            match format {
                FormatArg::Text => println!("{a}"),
                FormatArg::Json => println!(
                    "{}",
                    json!({
                        "eps": a.eps,
                        "modulus": a.modulus,
                        "residue": a.residue,
                        "text": a.to_string(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Brunnian {
            n,
            flavor,
            format,
            word,
        } => {
            let e = normalize(&parse_word(&word, n)?, flavor.element_flavor())?;
            let mut per_strand = Vec::with_capacity(n);
            for i in 1..=n {
                per_strand.push(is_brunnian(&e, i)?);
            }
            let all = is_brunnian_all(&e)?;
            match format {
                FormatArg::Text => {
                    for (i, ok) in per_strand.iter().enumerate() {
                        println!("strand {}: {}", i + 1, ok);
                    }
                    println!("all: {all}");
                }
                FormatArg::Json => {
                    println!("{}", json!({ "all": all, "per_strand": per_strand }))
                }
            }
            Ok(0)
        }
        Command::Center {
            n,
            flavor,
            format,
            word,
        } => {
            require_sphere_mcg(flavor, "center")?;
            let e = normalize(&parse_word(&word, n)?, ElementFlavor::SphereMcg)?;
            let central = in_center(&e);
            match format {
                FormatArg::Text => {
                    println!("{}", if central { "central" } else { "not central" })
                }
                FormatArg::Json => println!(
                    "{}",
                    json!({ "canonical": e.to_string(), "central": central })
                ),
            }
            Ok(0)
        }
        Command::Table { n, format } => {
            let t = im0n_table(n)?;
            print_table(&t, format, &[("n", json!(n))]);
            Ok(0)
        }
        Command::Enumerate { n, flavor, format } => {
            let kind = match flavor {
                FlavorArg::SphereBraid => SphereKind::Braid,
                FlavorArg::SphereMcg => SphereKind::Mcg,
                FlavorArg::Disc => {
                    return Err(Error::Invalid {
                        what: "enumerate",
                        detail: "disc braid groups are infinite; \
                                 use a sphere flavor with n <= 3"
                            .into(),
                    })
                }
            };
            let t = sphere_group_table(n, kind)?;
            print_table(
                &t,
                format,
                &[("kind", json!(flavor.name())), ("n", json!(n))],
            );
            Ok(0)
        }
        Command::Relcheck {
            n,
            flavor,
            format,
            seed,
        } => {
            let f = flavor.element_flavor();
            let rels = relations(flavor.relation_flavor(), n);
            let report = check_relations(&rels, |l, r| match (normalize(l, f), normalize(r, f)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            });
            let failures: Vec<String> =
                report.failures().iter().map(|s| (*s).to_string()).collect();

            // Seeded spot checks: the strand map of a product must equal
            // the composite of the factors' strand maps.
            let mut rng = Rng64::new(seed);
            let tau_total = 64usize;
            let mut tau_failures = 0usize;
            for _ in 0..tau_total {
                let len_u = rng.gen_range(10);
                let u = random_word(&mut rng, n, len_u, true);
                let len_v = rng.gen_range(10);
                let v = random_word(&mut rng, n, len_v, true);
                let uv = u.concat(&v)?;
                let composite = tau_of_word(&u).compose(&tau_of_word(&v))?;
                if tau_of_word(&uv) != composite {
                    tau_failures += 1;
                }
            }

            let pass = report.all_pass() && tau_failures == 0;
            match format {
                FormatArg::Text => {
                    println!("set: {} (rank {})", report.name, report.rank);
                    println!(
                        "relations: {} checked, {} failed",
                        report.results.len(),
                        failures.len()
                    );
                    for label in &failures {
                        println!("FAIL {label}");
                    }
                    println!(
                        "tau spot-checks: {}/{} pass (seed {})",
                        tau_total - tau_failures,
                        tau_total,
                        seed
                    );
                    println!("verdict: {}", if pass { "pass" } else { "fail" });
                }
                FormatArg::Json => println!(
                    "{}",
                    json!({
                        "failures": failures,
                        "n": n,
                        "pass": pass,
                        "relations": report.results.len(),
                        "seed": seed,
                        "set": report.name,
                        "tau_checks": tau_total,
                        "tau_failures": tau_failures,
                    })
                ),
            }
            Ok(u8::from(!pass))
        }
    }
}
