//! Named verification suites bundling the identity reports of every module
//! for one context.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cylindric;
use crate::error::{Error, Result};
use crate::fusion::FusionContext;
use crate::grassmannian::{self, GwContext};
use crate::partitions::Context;
use crate::report::Report;

/// Default truncation degree for coproduct identities.
pub const COPRODUCT_BOUND: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    FormulaVsOracle,
    Symmetry,
    RouteEquivalence,
    Coalgebra,
    Orthogonality,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["formula-vs-oracle", "symmetry", "route-equivalence", "coalgebra", "orthogonality", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FormulaVsOracle => "formula-vs-oracle",
            Suite::Symmetry => "symmetry",
            Suite::RouteEquivalence => "route-equivalence",
            Suite::Coalgebra => "coalgebra",
            Suite::Orthogonality => "orthogonality",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::FormulaVsOracle,
                Suite::Symmetry,
                Suite::RouteEquivalence,
                Suite::Coalgebra,
                Suite::Orthogonality,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::FormulaVsOracle, Suite::Symmetry, Suite::RouteEquivalence, Suite::Coalgebra, Suite::Orthogonality, Suite::All]
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite { name: s.to_string(), available: Suite::NAMES.join(", ") })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs a suite on one context with cylindric degrees up to `d_max`. The
/// Grassmannian parts run only when k < n.
pub fn run_suite(suite: Suite, ctx: Context, d_max: i64) -> Result<Vec<Report>> {
    if d_max < 0 {
        return Err(Error::NegativeDegree(d_max));
    }
    let fc = FusionContext::new(ctx);
    let gw = if ctx.k < ctx.n { Some(GwContext::new(ctx)?) } else { None };
    let mut out = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::FormulaVsOracle => {
                out.push(cylindric::oracle_report(ctx, d_max));
                if gw.is_some() {
                    out.push(grassmannian::chi_matrix_check(ctx)?);
                }
            }
            Suite::Symmetry => {
                out.push(fc.symmetry_suite());
                out.push(fc.frobenius_suite());
                out.push(cylindric::symmetry_report(ctx, d_max));
                if let Some(gw) = &gw {
                    out.push(gw.symmetry_report()?);
                    out.push(grassmannian::kostka_report(gw, d_max)?);
                }
            }
            Suite::RouteEquivalence => {
                out.push(fc.route_report());
                out.push(cylindric::route_report(ctx, d_max));
                if let Some(gw) = &gw {
                    out.push(gw.route_report());
                    out.push(grassmannian::cyl_schur_report(gw, d_max)?);
                }
            }
            Suite::Coalgebra => {
                out.push(cylindric::coalgebra_report(&fc, d_max, COPRODUCT_BOUND));
                if gw.is_some() {
                    out.push(grassmannian::cyl_schur_coproduct_report(ctx, d_max, COPRODUCT_BOUND)?);
                }
            }
            Suite::Orthogonality => {
                out.push(fc.modular_report());
                out.push(cylindric::nonskew_report(&fc, d_max));
                if let Some(gw) = &gw {
                    out.push(grassmannian::nonskew_orthogonality(ctx, d_max as usize)?);
                    out.push(grassmannian::mcnamara_report(gw, d_max)?);
                }
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(out)
}
