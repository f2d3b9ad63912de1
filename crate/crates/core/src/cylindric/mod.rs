//! Cylindric complete and elementary symmetric functions h_{λ/d/μ} and
//! e_{λ/d/μ}: their monomial, complete/elementary, power sum and non-skew
//! expansions, and the coalgebra identities they satisfy.

pub mod crpp;
pub mod engine;
pub mod strips;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::fusion::{n_count, FusionContext};
use crate::partitions::{enumerate_alcove, partitions_bounded, stab_order, AlcoveWeight, Context, Partition};
use crate::report::Report;
use crate::symfun::{Basis, SymFunc, TensorSymFunc};
use crate::SymFuncQ;

pub use crpp::{enumerate_crpp, Crpp, CrppKind, Filling};
pub use engine::{engine, Engine, Statistic};
pub use strips::{
    chi_cyl, chi_cyl_oracle, is_adjacent_strip, is_horizontal_strip, is_shifted_horizontal_strip, is_vertical_strip,
    phi_cyl, phi_cyl_oracle, psi_cyl, psi_cyl_oracle, reduce_adjacent_strip, ribbon_height, shape_size, theta_cyl,
    theta_cyl_oracle, ReducedStrip,
};

fn rational(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

fn from_integers(basis: Basis, terms: BTreeMap<Partition, BigInt>) -> SymFuncQ {
    SymFunc::from_terms(basis, terms.into_iter().map(|(p, c)| (p, rational(&c))))
}

/// θ_{λ/d/μ}(ν): the θ-weighted count of CRPPs with level sizes ν.
pub fn theta_weight(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, nu: &[usize]) -> BigInt {
    engine(lambda.ctx(), Statistic::Theta).weight(lambda, d, mu, nu)
}

/// ψ_{λ/d/μ}(ν) over row strict CRPPs.
pub fn psi_weight(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, nu: &[usize]) -> BigInt {
    engine(lambda.ctx(), Statistic::Psi).weight(lambda, d, mu, nu)
}

/// φ_{λ/d/μ}(ν) over cylindric adjacent column plane partitions.
pub fn phi_weight(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, nu: &[usize]) -> BigInt {
    engine(lambda.ctx(), Statistic::Phi).weight(lambda, d, mu, nu)
}

/// h_{λ/d/μ} = Σ_ν θ_{λ/d/μ}(ν) m_ν, homogeneous of degree |λ| − |μ| + nd.
pub fn cyl_h(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> SymFuncQ {
    from_integers(Basis::M, engine(lambda.ctx(), Statistic::Theta).expand(lambda, d, mu, None))
}

/// e_{λ/d/μ} = Σ_ν ψ_{λ/d/μ}(ν) m_ν.
pub fn cyl_e(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> SymFuncQ {
    from_integers(Basis::M, engine(lambda.ctx(), Statistic::Psi).expand(lambda, d, mu, None))
}

/// Σ_ν N̄_{μν}^λ b_ν over ν with at most k parts, for b = h or e.
fn fusion_expansion(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, basis: Basis) -> SymFuncQ {
    let ctx = lambda.ctx();
    let m = shape_size(lambda, d, mu);
    let mut out = SymFunc::zero(basis);
    if d < 0 || m < 0 {
        return out;
    }
    for nu in partitions_bounded(m as usize, ctx.k, m as usize) {
        let c = n_count(ctx, mu.parts(), nu.parts(), lambda).expect("weights share the context");
        if !c.is_zero() {
            out.add_term(nu, rational(&c));
        }
    }
    out
}

/// h_{λ/d/μ} = Σ_ν N̄_{μν}^λ h_ν in the complete basis.
pub fn cyl_h_in_h(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> SymFuncQ {
    fusion_expansion(lambda, d, mu, Basis::H)
}

/// e_{λ/d/μ} = Σ_ν N̄_{μν}^λ e_ν in the elementary basis.
pub fn cyl_e_in_e(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> SymFuncQ {
    fusion_expansion(lambda, d, mu, Basis::E)
}

/// The non-skew function h_{λ/d/∅} = Σ_ν (|S_λ|/|S_ν|) h_ν over the orbit
/// weights ν ≥ 0 of λ with |ν| = |λ| + dn; zero for d < −m_n(λ).
pub fn nonskew_cyl_h(lambda: &AlcoveWeight, d: i64) -> SymFuncQ {
    let ctx = lambda.ctx();
    let n = ctx.n as i64;
    let total = lambda.size() as i64 + d * n;
    let mut out = SymFunc::zero(Basis::H);
    if total < 0 {
        return out;
    }
    let s_lambda = lambda.stab_order();
    for nu in partitions_bounded(total as usize, ctx.k, total as usize) {
        let padded = nu.padded(ctx.k);
        let mut reduced: Vec<usize> = padded.iter().map(|&v| ((v as i64 - 1).rem_euclid(n) + 1) as usize).collect();
        reduced.sort_unstable_by(|a, b| b.cmp(a));
        if reduced != lambda.parts() {
            continue;
        }
        let s_nu = stab_order(&padded.iter().map(|&v| v as i64).collect::<Vec<_>>());
        out.add_term(nu, BigRational::new(s_lambda.clone(), s_nu));
    }
    out
}

/// The coefficients N_{μσ}^λ of h_{λ/d/μ} in the non-skew functions
/// h_{σ/d−d′/∅}, keyed by (σ, d − d′); only nonzero members are listed.
pub fn cyl_in_nonskew(fc: &FusionContext, lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BTreeMap<(AlcoveWeight, i64), BigInt> {
    let n = fc.ctx().n as i64;
    let m = shape_size(lambda, d, mu);
    let mut out = BTreeMap::new();
    if d < 0 || m < 0 {
        return out;
    }
    for sigma in fc.alcove() {
        let excess = m - sigma.size() as i64;
        if excess % n != 0 {
            continue;
        }
        let e = excess / n;
        if e < -(sigma.multiplicity(fc.ctx().n) as i64) {
            continue;
        }
        let c = fc.n(mu, sigma, lambda);
        if !c.is_zero() {
            out.insert((sigma.clone(), e), c);
        }
    }
    out
}

/// Σ_ν φ_{λ/d/μ}(ν)/z_ν p_ν, times ε_ν for the elementary family.
pub fn cyl_p_expand(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, elementary: bool) -> SymFuncQ {
    let weights = engine(lambda.ctx(), Statistic::Phi).expand(lambda, d, mu, None);
    SymFunc::from_terms(
        Basis::P,
        weights.into_iter().map(|(nu, c)| {
            let sign = if elementary { nu.sign() } else { 1 };
            let z = nu.z_factor();
            (nu, BigRational::new(c * sign, z))
        }),
    )
}

fn tensor_sum(pairs: impl IntoIterator<Item = (SymFuncQ, SymFuncQ)>, basis: Basis, bound: usize) -> TensorSymFunc<BigRational> {
    let mut acc = TensorSymFunc::zero(basis, basis);
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc = acc.add(&TensorSymFunc::tensor(&a.convert(basis), &b.convert(basis)).truncate(bound));
    }
    acc
}

/// Checks Δ(f_{λ/d/μ}) = Σ_{d₁+d₂=d} Σ_ν f_{λ/d₁/ν} ⊗ f_{ν/d₂/μ} on all
/// terms whose factors have degree at most `bound`, for f = h and f = e.
pub fn coproduct_cyl_check(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, bound: usize) -> Report {
    let mut report = Report::new(format!("coproduct {lambda}/{d}/{mu}"));
    let alcove = enumerate_alcove(lambda.ctx());
    for (name, f) in [("h", cyl_h as fn(&AlcoveWeight, i64, &AlcoveWeight) -> SymFuncQ), ("e", cyl_e)] {
        let lhs = f(lambda, d, mu).coproduct().truncate(bound);
        let rhs = tensor_sum(
            (0..=d).flat_map(|d1| alcove.iter().map(move |nu| (d1, nu))).map(|(d1, nu)| (f(lambda, d1, nu), f(nu, d - d1, mu))),
            Basis::M,
            bound,
        );
        report.check(lhs.sub(&rhs).is_zero(), || format!("{name}: {:?}", lhs.sub(&rhs)));
    }
    report
}

/// Checks the non-skew family is a subcoalgebra with the fusion
/// coefficients as structure constants:
/// Δ h_{λ/d/∅} = Σ h_{λ/d₁/μ} ⊗ h_{μ/d₂/∅} with h_{λ/d₁/μ} = Σ N_{μν}^λ h_{ν/·/∅},
/// truncated to factor degree `bound`.
pub fn coalgebra_check(fc: &FusionContext, lambda: &AlcoveWeight, d: i64, bound: usize) -> Report {
    let k = fc.ctx().k as i64;
    let mut report = Report::new(format!("subcoalgebra {lambda}/{d}"));
    let lhs = nonskew_cyl_h(lambda, d).coproduct().truncate(bound);
    let mut pairs = Vec::new();
    for d1 in 0..=d + k {
        let d2 = d - d1;
        for mu in fc.alcove() {
            let right = nonskew_cyl_h(mu, d2);
            if right.is_zero() {
                continue;
            }
            for ((sigma, e), c) in cyl_in_nonskew(fc, lambda, d1, mu) {
                report.check(!c.is_negative(), || format!("negative constant N[{mu};{sigma}->{lambda}] = {c}"));
                pairs.push((nonskew_cyl_h(&sigma, e).scale(&rational(&c)), right.clone()));
            }
        }
    }
    let rhs = tensor_sum(pairs, Basis::H, bound);
    report.check(lhs.sub(&rhs).is_zero(), || format!("difference {:?}", lhs.sub(&rhs)));
    report
}

/// The antipode maps h_{λ/d/μ} to (−1)^m e_{λ/d/μ}.
pub fn antipode_check(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> bool {
    let h = cyl_h(lambda, d, mu);
    let e = cyl_e(lambda, d, mu);
    let signed = if shape_size(lambda, d, mu).rem_euclid(2) == 1 { e.neg() } else { e };
    h.antipode().convert(Basis::M).sub(&signed).is_zero()
}

/// |S_μ| f_{λ/d/μ} = |S_λ| f_{μ∨/d/λ∨} for f = h and f = e.
pub fn duality_check(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> bool {
    let (sl, sm) = (rational(&lambda.stab_order()), rational(&mu.stab_order()));
    [cyl_h as fn(&AlcoveWeight, i64, &AlcoveWeight) -> SymFuncQ, cyl_e].iter().all(|f| {
        f(lambda, d, mu).scale(&sm).sub(&f(&mu.vee(), d, &lambda.vee()).scale(&sl)).is_zero()
    })
}

/// Every (λ, μ, d) triple of the context with d ≤ `d_max`.
pub fn shapes(ctx: Context, d_max: i64) -> Vec<(AlcoveWeight, i64, AlcoveWeight)> {
    let alcove = enumerate_alcove(ctx);
    let mut out = Vec::new();
    for l in &alcove {
        for m in &alcove {
            for d in 0..=d_max {
                out.push((l.clone(), d, m.clone()));
            }
        }
    }
    out
}

/// θ and ψ formulas against their enumeration oracles, φ against its
/// counting oracle, on every shape with d ≤ `d_max`.
pub fn oracle_report(ctx: Context, d_max: i64) -> Report {
    let mut report = Report::new(format!("strip formulas vs oracles n={} k={}", ctx.n, ctx.k));
    for (l, d, m) in shapes(ctx, d_max) {
        let (t, to) = (theta_cyl(&l, d, &m), theta_cyl_oracle(&l, d, &m));
        report.check(t == to, || format!("theta {l}/{d}/{m}: {t} vs {to}"));
        let (p, po) = (psi_cyl(&l, d, &m), psi_cyl_oracle(&l, d, &m));
        report.check(p == po, || format!("psi {l}/{d}/{m}: {p} vs {po}"));
        let (f, fo) = (phi_cyl(&l, d, &m), phi_cyl_oracle(&l, d, &m));
        report.check(f == fo, || format!("phi {l}/{d}/{m}: {f} vs {fo}"));
    }
    report
}

/// Monomial, fusion and power sum routes for h and e on every shape with
/// d ≤ `d_max`.
pub fn route_report(ctx: Context, d_max: i64) -> Report {
    let mut report = Report::new(format!("cylindric routes n={} k={}", ctx.n, ctx.k));
    for (l, d, m) in shapes(ctx, d_max) {
        let h = cyl_h(&l, d, &m);
        let e = cyl_e(&l, d, &m);
        let hh = cyl_h_in_h(&l, d, &m).convert(Basis::M);
        report.check(h == hh, || format!("h {l}/{d}/{m}: monomial {h:?} vs complete {hh:?}"));
        let ee = cyl_e_in_e(&l, d, &m).convert(Basis::M);
        report.check(e == ee, || format!("e {l}/{d}/{m}: monomial {e:?} vs elementary {ee:?}"));
        let hp = cyl_p_expand(&l, d, &m, false).convert(Basis::M);
        report.check(h == hp, || format!("h {l}/{d}/{m}: monomial {h:?} vs power sum {hp:?}"));
        let ep = cyl_p_expand(&l, d, &m, true).convert(Basis::M);
        report.check(e == ep, || format!("e {l}/{d}/{m}: monomial {e:?} vs power sum {ep:?}"));
    }
    report
}

/// Antipode and ∨-duality on every shape with d ≤ `d_max`.
pub fn symmetry_report(ctx: Context, d_max: i64) -> Report {
    let mut report = Report::new(format!("cylindric symmetries n={} k={}", ctx.n, ctx.k));
    for (l, d, m) in shapes(ctx, d_max) {
        report.check(antipode_check(&l, d, &m), || format!("antipode {l}/{d}/{m}"));
        report.check(duality_check(&l, d, &m), || format!("duality {l}/{d}/{m}"));
    }
    report
}

/// Non-skew reconstruction of every h_{λ/d/μ} with d ≤ `d_max`, the
/// identification h_{λ/d+k/nᵏ} = h_{λ/d/∅}, and linear independence of the
/// non-skew family up to degree d_max.
pub fn nonskew_report(fc: &FusionContext, d_max: i64) -> Report {
    let ctx = fc.ctx();
    let k = ctx.k as i64;
    let top = AlcoveWeight::top(ctx);
    let mut report = Report::new(format!("non-skew expansions n={} k={}", ctx.n, ctx.k));
    for (l, d, m) in shapes(ctx, d_max) {
        let direct = cyl_h_in_h(&l, d, &m);
        let mut rebuilt = SymFunc::zero(Basis::H);
        for ((sigma, e), c) in cyl_in_nonskew(fc, &l, d, &m) {
            report.check(c.is_positive(), || format!("coefficient of {sigma}[{e}] in {l}/{d}/{m} is {c}"));
            rebuilt = rebuilt.add(&nonskew_cyl_h(&sigma, e).scale(&rational(&c)));
        }
        report.check(direct == rebuilt, || format!("{l}/{d}/{m}: {direct:?} vs {rebuilt:?}"));
    }
    let mut family = Vec::new();
    for l in fc.alcove() {
        let floor = -(l.multiplicity(ctx.n) as i64);
        for d in (floor - 1)..=d_max {
            let f = nonskew_cyl_h(l, d);
            if d < floor {
                report.check(f.is_zero(), || format!("h_{l}/{d}/- should vanish"));
                continue;
            }
            let shifted = cyl_h_in_h(l, d + k, &top);
            report.check(f == shifted, || format!("h_{l}/{d}/- differs from the shifted skew function"));
            report.check(
                f.terms().values().all(|c| c.is_integer()),
                || format!("h_{l}/{d}/- has fractional coefficients"),
            );
            family.push(f);
        }
    }
    let rank = rank_of(&family);
    report.check(rank == family.len(), || format!("non-skew family has rank {rank} < {}", family.len()));
    report
}

/// Rank of a family of symmetric functions in one basis, by exact Gaussian
/// elimination on their coefficient vectors.
pub fn rank_of(family: &[SymFuncQ]) -> usize {
    let mut columns: Vec<Partition> = family.iter().flat_map(|f| f.terms().keys().cloned()).collect();
    columns.sort();
    columns.dedup();
    let mut rows: Vec<Vec<BigRational>> =
        family.iter().map(|f| columns.iter().map(|c| f.coeff(c)).collect()).collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() / lead.clone();
                for c in col..columns.len() {
                    let sub = rows[rank][c].clone() * factor.clone();
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coproduct and subcoalgebra identities on every shape with d ≤ `d_max`,
/// truncated to factor degree `bound`.
pub fn coalgebra_report(fc: &FusionContext, d_max: i64, bound: usize) -> Report {
    let ctx = fc.ctx();
    let mut report = Report::new(format!("cylindric coalgebra n={} k={}", ctx.n, ctx.k));
    for (l, d, m) in shapes(ctx, d_max) {
        report.absorb(coproduct_cyl_check(&l, d, &m, bound));
    }
    for l in fc.alcove() {
        for d in -(l.multiplicity(ctx.n) as i64)..=d_max {
            report.absorb(coalgebra_check(fc, l, d, bound));
        }
    }
    report
}

#[cfg(test)]
mod tests;
