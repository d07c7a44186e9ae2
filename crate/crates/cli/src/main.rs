use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cog2::cog2::{CoG2Sampler, Coclosed};
use cog2::document::FormDocument;
use cog2::morphism::MorphismContext;
use cog2::random::{Sampler, DEFAULT_SEED};
use cog2::suite::run_suite;
use cog2::Error;

/// Exact exterior calculus checks for coclosed G2-structures on R^7.
#[derive(Parser)]
#[command(name = "cog2", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a randomized verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall time in the written report.
        #[arg(long)]
        timing: bool,
    },
    /// Decide whether a vector field is coG2 and print a potential.
    Classify { field: PathBuf },
    /// Solve X ⌟ ⋆φ = dσ for a 2-form σ.
    SolveCoroch { sigma: PathBuf },
    /// The bracket of two coRochesterian 2-forms.
    Bracket {
        s: PathBuf,
        t: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a polynomial diffeomorphism is a coG2-morphism.
    MorphismCheck {
        psi: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sampled pairs for the naturality method.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Split a 3-form into its 1, 7 and 27 parts.
    Decompose3 { eta: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pullback,
    Graph,
    Naturality,
}

enum Failure {
    Check,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_doc(path: &Path) -> Result<FormDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    FormDocument::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let flat = Coclosed::flat();
    match cli.command {
        Command::Verify {
            suite,
            seed,
            trials,
            out,
            timing,
        } => {
            let report = run_suite(&suite, seed, trials)?;
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => println!("{status} {} [{}] {d}", c.name, c.instances),
                    None => println!("{status} {} [{}]", c.name, c.instances),
                }
                if let Some(w) = &c.witness {
                    println!("     {}", w.message);
                }
            }
            let failed = report.failures().count();
            println!("suite {suite}: {} checks, {failed} failed", report.checks.len());
            if let Some(ms) = report.elapsed_ms {
                eprintln!("elapsed {ms} ms");
            }
            if let Some(path) = out {
                let written = if timing {
                    report.clone()
                } else {
                    report.without_timing()
                };
                write_out(Some(&path), &written.to_json())?;
            }
            verdict(report.passed())
        }
        Command::Classify { field } => {
            let x = read_doc(&field)?.to_field()?;
            let c = flat.classify(&x)?;
            println!("coG2: {}, coRochesterian: {}", yes(c.is_cog2), yes(c.is_corochesterian));
            match &c.potential {
                Some(sigma) => println!("potential: {}", FormDocument::from_form(sigma).to_json()),
                None => println!("L_X(*phi): {}", c.witness),
            }
            verdict(c.is_cog2)
        }
        Command::SolveCoroch { sigma } => {
            let s = read_doc(&sigma)?.to_form()?;
            match flat.coroch_from_sigma(&s) {
                Ok(f) => {
                    println!("{}", FormDocument::from_field(&f.field).to_json());
                    Ok(())
                }
                Err(Error::NotCoRochesterian { residual }) => {
                    println!("not coRochesterian; residual outside the 7-dimensional component:");
                    println!("{}", FormDocument::from_form(&residual).to_json());
                    Err(Failure::Check)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Bracket { s, t, out } => {
            let a = flat.coroch_from_sigma(&read_doc(&s)?.to_form()?)?;
            let b = flat.coroch_from_sigma(&read_doc(&t)?.to_form()?)?;
            let ab = flat.bracket(&a, &b)?;
            eprintln!("field of the bracket: {}", ab.field);
            write_out(out.as_deref(), &FormDocument::from_form(&ab.sigma).to_json())
        }
        Command::MorphismCheck {
            psi,
            method,
            seed,
            samples,
        } => {
            let psi = read_doc(&psi)?.to_diffeo()?;
            let ctx = MorphismContext::flat();
            let check = match method {
                Method::Pullback => ctx.is_cog2_morphism(&psi)?,
                Method::Graph => ctx.graph_criterion(&psi)?,
                Method::Naturality => {
                    let fields = CoG2Sampler::flat();
                    let mut s = Sampler::new(seed);
                    for k in 0..samples {
                        let a = fields.corochesterian(&mut s)?;
                        let b = fields.corochesterian(&mut s)?;
                        let failure = match ctx.bracket_naturality(&psi, &a.sigma, &b.sigma) {
                            Ok(n) => (!n.equal)
                                .then(|| format!("pullback of bracket: {}\nbracket of pullbacks: {}", n.lhs, n.rhs)),
                            Err(Error::PullbackNotCoRochesterian { residual }) => {
                                Some(format!("pullback leaves the coRochesterian space; residual {residual}"))
                            }
                            Err(e) => return Err(e.into()),
                        };
                        if let Some(msg) = failure {
                            println!("coG2-morphism: no");
                            println!("naturality fails at sample {k}");
                            println!("sigma: {}", FormDocument::from_form(&a.sigma).to_json());
                            println!("tau: {}", FormDocument::from_form(&b.sigma).to_json());
                            println!("{msg}");
                            return Err(Failure::Check);
                        }
                    }
                    println!("coG2-morphism: yes");
                    println!("naturality holds on {samples} sampled pairs");
                    return Ok(());
                }
            };
            println!("coG2-morphism: {}", yes(check.holds));
            println!("residual: {}", check.residual);
            verdict(check.holds)
        }
        Command::Decompose3 { eta } => {
            let e = read_doc(&eta)?.to_form()?;
            let p = flat.solver().decompose(&e)?;
            let doc = serde_json::json!({
                "part1": FormDocument::from_form(&p.part1),
                "part7": FormDocument::from_form(&p.part7),
                "part27": FormDocument::from_form(&p.part27),
                "field7": FormDocument::from_field(&flat.solver().solve(&p.part7)?),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
