use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cylsym::fusion::{CoeffTable, FusionContext};
use cylsym::grassmannian::{cyl_schur, GwContext};
use cylsym::{cylindric, run_suite, AlcoveWeight, BoxedPartition, Context, Report, Suite, SymFuncQ};

#[derive(Parser)]
#[command(name = "cylsym", version, about = "Cylindric symmetric functions, fusion rings and quantum cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(clap::Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct Ctx {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

impl Ctx {
    fn context(&self) -> cylsym::Result<Context> {
        Context::new(self.n, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CylKind {
    H,
    E,
    S,
}

#[derive(Subcommand)]
enum Command {
    /// Fusion coefficients N_{λμ}^ν of the symmetric tensor fusion ring.
    Fusion {
        #[command(flatten)]
        ctx: Ctx,
        /// Keep only entries of degree at most this.
        #[arg(long = "dmax", alias = "d-max")]
        d_max: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Gromov-Witten invariants C_{μ̄ν̄}^{λ̄,d} of Gr(k, n).
    Gw {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long = "dmax", alias = "d-max")]
        d_max: Option<i64>,
        /// Report the table with conjugated keys, as a table of Gr(n−k, n).
        #[arg(long)]
        conjugate: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Monomial expansion of h_{λ/d/μ}, e_{λ/d/μ} or s_{λ̄/d/μ̄}.
    Cyl {
        #[arg(value_enum)]
        kind: CylKind,
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Runs a named verification suite and exits 1 on any failure.
    Verify {
        /// One of formula-vs-oracle, symmetry, route-equivalence, coalgebra, orthogonality, all.
        suite: String,
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long = "dmax", alias = "d-max", default_value_t = 1)]
        d_max: i64,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<cylsym::Error> for Failure {
    fn from(e: cylsym::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: &Output, text: String) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_table(table: &CoeffTable, format: Format) -> String {
    match format {
        Format::Json => table.to_json_string(),
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    }
}

fn render_symfun(f: &SymFuncQ, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&f.to_json()).expect("json") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Usage(e.to_string());
            w.write_record(["basis", "partition", "coefficient"]).map_err(io)?;
            for (p, c) in f.terms() {
                w.write_record([f.basis().symbol(), &p.to_string(), &c.to_string()]).map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?).expect("utf8")
        }
        Format::Text => {
            let rows: Vec<(String, String)> = f.terms().iter().map(|(p, c)| (p.to_string(), c.to_string())).collect();
            let width = rows.iter().map(|(p, _)| p.len()).max().unwrap_or(0).max(9);
            let mut text = format!("{:<width$}  coefficient\n", "partition");
            for (p, c) in rows {
                text.push_str(&format!("{p:<width$}  {c:>11}\n"));
            }
            text
        }
    })
}

fn render_reports(reports: &[Report], format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({ "reports": reports })).expect("json") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Usage(e.to_string());
            w.write_record(["name", "checks", "failures", "first_failure"]).map_err(io)?;
            for r in reports {
                let first = r.failures.first().cloned().unwrap_or_default();
                w.write_record([r.name.clone(), r.checks.to_string(), r.failures.len().to_string(), first]).map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?).expect("utf8")
        }
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Fusion { ctx, d_max, out } => {
            let table = FusionContext::new(ctx.context()?).coeff_table();
            let table = match d_max {
                Some(m) => table.filtered(|e| e.d <= m),
                None => table,
            };
            emit(&out, render_table(&table, out.format))
        }
        Command::Gw { ctx, d_max, conjugate, out } => {
            let gw = GwContext::new(ctx.context()?)?;
            let table = if conjugate { gw.conjugate_table() } else { gw.table().clone() };
            let table = match d_max {
                Some(m) => table.filtered(|e| e.d <= m),
                None => table,
            };
            emit(&out, render_table(&table, out.format))
        }
        Command::Cyl { kind, ctx, lambda, mu, d, out } => {
            let c = ctx.context()?;
            let f = match kind {
                CylKind::H | CylKind::E => {
                    let (l, m) = (AlcoveWeight::parse(c, &lambda)?, AlcoveWeight::parse(c, &mu)?);
                    if kind == CylKind::H {
                        cylindric::cyl_h(&l, d, &m)
                    } else {
                        cylindric::cyl_e(&l, d, &m)
                    }
                }
                CylKind::S => {
                    if c.k >= c.n {
                        return Err(Failure::Usage(format!("cylindric Schur functions need k < n, got n={} k={}", c.n, c.k)));
                    }
                    cyl_schur(&BoxedPartition::parse(c, &lambda)?, d, &BoxedPartition::parse(c, &mu)?)
                }
            };
            emit(&out, render_symfun(&f, out.format)?)
        }
        Command::Verify { suite, ctx, d_max, out } => {
            let suite: Suite = suite.parse()?;
            let reports = run_suite(suite, ctx.context()?, d_max)?;
            emit(&out, render_reports(&reports, out.format)?)?;
            match reports.iter().find(|r| !r.passed()) {
                Some(r) => {
                    eprintln!("{}: {}", r.name, r.failures[0]);
                    Err(Failure::Verification)
                }
                None => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
