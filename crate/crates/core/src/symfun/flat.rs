//! Pieri rules in the monomial basis and the weight statistics θ, ψ, φ of
//! skew diagrams, together with skew complete and elementary functions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::{binomial, distinct_permutations, Partition};
use crate::scalar::Scalar;
use crate::symfun::{Basis, SymFunc};

/// θ_{λ/μ} = ∏ C(λ'_i − μ'_{i+1}, μ'_i − μ'_{i+1}); zero unless μ ⊆ λ.
pub fn theta_flat(lambda: &Partition, mu: &Partition) -> BigInt {
    if !lambda.contains(mu) {
        return BigInt::zero();
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut acc = BigInt::one();
    for i in 0..lc.len() {
        let top = lc.part(i) as i64 - mc.part(i + 1) as i64;
        let bottom = mc.part(i) as i64 - mc.part(i + 1) as i64;
        acc *= binomial(top, bottom);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1)
}

pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| i + 1 >= lambda.len() || lambda.part(i + 1) <= mu.part(i))
}

/// ψ_{λ/μ} = ∏ C(λ'_i − λ'_{i+1}, λ'_i − μ'_i) on vertical strips, zero otherwise.
pub fn psi_flat(lambda: &Partition, mu: &Partition) -> BigInt {
    if !is_vertical_strip(lambda, mu) {
        return BigInt::zero();
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut acc = BigInt::one();
    for i in 0..lc.len() {
        let top = lc.part(i) as i64 - lc.part(i + 1) as i64;
        let bottom = lc.part(i) as i64 - mc.part(i) as i64;
        acc *= binomial(top, bottom);
    }
    acc
}

/// The value u with λ = μ − {u} + {u + r} when λ/μ is an adjacent
/// horizontal strip of length r = |λ| − |μ| ≥ 1.
pub fn adjacent_strip_start(lambda: &Partition, mu: &Partition) -> Option<usize> {
    let r = lambda.size().checked_sub(mu.size())?;
    if r == 0 {
        return None;
    }
    let lm = lambda.multiplicities();
    let mm = mu.multiplicities();
    let values: BTreeSet<usize> = lm.keys().chain(mm.keys()).copied().collect();
    let mut gains = Vec::new();
    let mut losses = Vec::new();
    for v in values {
        let d = lm.get(&v).copied().unwrap_or(0) as i64 - mm.get(&v).copied().unwrap_or(0) as i64;
        let target = if d > 0 { &mut gains } else { &mut losses };
        target.extend(std::iter::repeat_n(v, d.unsigned_abs() as usize));
    }
    match (gains.as_slice(), losses.as_slice()) {
        ([g], []) if *g == r => Some(0),
        ([g], [l]) if *g == *l + r => Some(*l),
        _ => None,
    }
}

/// φ_{λ/μ}: the multiplicity in λ of the part u + r when λ = μ − {u} + {u + r};
/// one for λ = μ; zero otherwise.
pub fn act_phi_flat(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda == mu {
        return BigInt::one();
    }
    match adjacent_strip_start(lambda, mu) {
        Some(u) => BigInt::from(lambda.multiplicity(u + lambda.size() - mu.size())),
        None => BigInt::zero(),
    }
}

/// m_κ · h_r = Σ θ_{ρ/κ} m_ρ.
pub fn pieri_h(kappa: &Partition, r: usize) -> Vec<(Partition, BigInt)> {
    pieri_h_within(kappa, r, None)
}

/// The terms of m_κ · h_r whose partition lies inside `bound`.
pub fn pieri_h_within(kappa: &Partition, r: usize, bound: Option<&Partition>) -> Vec<(Partition, BigInt)> {
    supersets_within(kappa, r, bound)
        .into_iter()
        .filter_map(|rho| {
            let c = theta_flat(&rho, kappa);
            (!c.is_zero()).then_some((rho, c))
        })
        .collect()
}

/// m_κ · e_r = Σ ψ_{ρ/κ} m_ρ.
pub fn pieri_e(kappa: &Partition, r: usize) -> Vec<(Partition, BigInt)> {
    vertical_strips(kappa, r)
        .into_iter()
        .map(|rho| {
            let c = psi_flat(&rho, kappa);
            (rho, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// m_κ · p_r = Σ φ_{ρ/κ} m_ρ, summing over the adjacent horizontal strips.
pub fn pieri_p(kappa: &Partition, r: usize) -> Vec<(Partition, BigInt)> {
    if r == 0 {
        return vec![(kappa.clone(), BigInt::one())];
    }
    let mut values: Vec<usize> = kappa.multiplicities().keys().copied().collect();
    values.insert(0, 0);
    values
        .into_iter()
        .map(|u| {
            let mut parts = kappa.parts().to_vec();
            if u > 0 {
                let pos = parts.iter().position(|&p| p == u).unwrap();
                parts.remove(pos);
            }
            parts.push(u + r);
            let rho = Partition::from_unsorted(parts);
            let c = BigInt::from(rho.multiplicity(u + r));
            (rho, c)
        })
        .collect()
}

/// All partitions ρ ⊇ κ with |ρ| = |κ| + r.
pub fn supersets(kappa: &Partition, r: usize) -> Vec<Partition> {
    supersets_within(kappa, r, None)
}

/// All partitions κ ⊆ ρ ⊆ bound with |ρ| = |κ| + r.
pub fn supersets_within(kappa: &Partition, r: usize, bound: Option<&Partition>) -> Vec<Partition> {
    fn rec(
        kappa: &Partition,
        bound: Option<&Partition>,
        i: usize,
        cap: usize,
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let base = kappa.part(i);
        if rest == 0 && base == 0 {
            out.push(Partition::from_vec_unchecked(cur.clone()));
            return;
        }
        let cap = match bound {
            Some(b) => cap.min(b.part(i)),
            None => cap,
        };
        if base > cap {
            return;
        }
        for v in base.max(1)..=cap.min(base + rest) {
            cur.push(v);
            rec(kappa, bound, i + 1, v, rest - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let cap = kappa.part(0) + r;
    rec(kappa, bound, 0, cap, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All ρ with ρ/κ a vertical strip of size r.
pub fn vertical_strips(kappa: &Partition, r: usize) -> Vec<Partition> {
    let len = kappa.len() + r;
    let mut out = Vec::new();
    let rows: Vec<usize> = (0..len).collect();
    choose(&rows, r, &mut Vec::new(), 0, &mut |chosen| {
        let mut parts = kappa.padded(len);
        for &i in chosen {
            parts[i] += 1;
        }
        if let Ok(p) = Partition::new(parts) {
            out.push(p);
        }
    });
    out.sort();
    out
}

/// All ρ with ρ/κ a horizontal strip of size r.
pub fn horizontal_strips(kappa: &Partition, r: usize) -> Vec<Partition> {
    supersets(kappa, r).into_iter().filter(|rho| is_horizontal_strip(rho, kappa)).collect()
}

fn choose(items: &[usize], r: usize, cur: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == r {
        f(cur);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < r - cur.len() {
            break;
        }
        cur.push(items[i]);
        choose(items, r, cur, i + 1, f);
        cur.pop();
    }
}

/// Expansion Σ_ν stat(ν) m_ν where stat(ν) sums the products of `step`
/// weights along chains μ = κ⁰ ⊂ κ¹ ⊂ ⋯ ⊂ κˡ = λ with |κⁱ/κⁱ⁻¹| = ν_i.
fn chain_expansion<T: Scalar>(
    lambda: &Partition,
    mu: &Partition,
    step: &dyn Fn(&Partition, usize) -> Vec<(Partition, BigInt)>,
) -> SymFunc<T> {
    let mut out = SymFunc::zero(Basis::M);
    if !lambda.contains(mu) {
        return out;
    }
    let total = lambda.size() - mu.size();
    let mut start = BTreeMap::new();
    start.insert(mu.clone(), BigInt::one());
    fn rec<T: Scalar>(
        lambda: &Partition,
        states: &BTreeMap<Partition, BigInt>,
        rest: usize,
        cap: usize,
        nu: &mut Vec<usize>,
        step: &dyn Fn(&Partition, usize) -> Vec<(Partition, BigInt)>,
        out: &mut SymFunc<T>,
    ) {
        if rest == 0 {
            if let Some(c) = states.get(lambda) {
                out.add_term(Partition::from_vec_unchecked(nu.clone()), T::from_bigint(c));
            }
            return;
        }
        for r in (1..=cap.min(rest)).rev() {
            let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for (kappa, c) in states {
                for (rho, w) in step(kappa, r) {
                    if lambda.contains(&rho) {
                        *next.entry(rho).or_insert_with(BigInt::zero) += c * &w;
                    }
                }
            }
            if next.is_empty() {
                continue;
            }
            nu.push(r);
            rec(lambda, &next, rest - r, r, nu, step, out);
            nu.pop();
        }
    }
    rec(lambda, &start, total, total, &mut Vec::new(), step, &mut out);
    out
}

/// h_{λ/μ} = Σ_ν θ_{λ/μ}(ν) m_ν, summing θ_π over reverse plane partitions.
pub fn skew_h<T: Scalar>(lambda: &Partition, mu: &Partition) -> SymFunc<T> {
    chain_expansion(lambda, mu, &|kappa, r| pieri_h_within(kappa, r, Some(lambda)))
}

/// e_{λ/μ} = Σ_ν ψ_{λ/μ}(ν) m_ν, summing ψ_T over row strict tableaux.
pub fn skew_e<T: Scalar>(lambda: &Partition, mu: &Partition) -> SymFunc<T> {
    chain_expansion(lambda, mu, &pieri_e)
}

/// Σ_ν φ_{λ/μ}(ν) m_ν, summing φ_T over adjacent column tableaux.
pub fn skew_phi<T: Scalar>(lambda: &Partition, mu: &Partition) -> SymFunc<T> {
    chain_expansion(lambda, mu, &pieri_p)
}

/// f_{μν}^λ = #{(α, β) : α ∼ μ, β ∼ ν, α + β = λ}, returned for every ν at once.
pub fn f_coefficients(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    if mu.len() > lambda.len() {
        return out;
    }
    for alpha in distinct_permutations(&mu.padded(lambda.len())) {
        if alpha.iter().zip(lambda.parts()).all(|(a, l)| a <= l) {
            let beta: Vec<usize> = lambda.parts().iter().zip(&alpha).map(|(l, a)| l - a).collect();
            *out.entry(Partition::from_unsorted(beta)).or_insert_with(BigInt::zero) += 1;
        }
    }
    out
}

/// f_{μν}^λ for a single triple.
pub fn f_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != mu.size() + nu.size() {
        return BigInt::zero();
    }
    f_coefficients(lambda, mu).remove(nu).unwrap_or_else(BigInt::zero)
}

/// h_{λ/μ} = Σ_ν f_{μν}^λ h_ν.
pub fn skew_h_by_f<T: Scalar>(lambda: &Partition, mu: &Partition) -> SymFunc<T> {
    let mut out = SymFunc::zero(Basis::H);
    for (nu, c) in f_coefficients(lambda, mu) {
        out.add_term(nu, T::from_bigint(&c));
    }
    out
}

/// e_{λ/μ} = Σ_ν f_{μν}^λ e_ν.
pub fn skew_e_by_f<T: Scalar>(lambda: &Partition, mu: &Partition) -> SymFunc<T> {
    let mut out = SymFunc::zero(Basis::E);
    for (nu, c) in f_coefficients(lambda, mu) {
        out.add_term(nu, T::from_bigint(&c));
    }
    out
}

/// Adjacent column tableaux of shape λ/μ and weight ν (a composition),
/// each given as its chain of partitions.
pub fn adjacent_column_tableaux(lambda: &Partition, mu: &Partition, nu: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    fn rec(lambda: &Partition, nu: &[usize], chain: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        let cur = chain.last().unwrap().clone();
        if nu.is_empty() {
            if &cur == lambda {
                out.push(chain.clone());
            }
            return;
        }
        if nu[0] == 0 {
            chain.push(cur);
            rec(lambda, &nu[1..], chain, out);
            chain.pop();
            return;
        }
        for (rho, _) in pieri_p(&cur, nu[0]) {
            if lambda.contains(&rho) {
                chain.push(rho);
                rec(lambda, &nu[1..], chain, out);
                chain.pop();
            }
        }
    }
    rec(lambda, nu, &mut vec![mu.clone()], &mut out);
    out
}

/// φ_T = ∏ φ_{κⁱ/κⁱ⁻¹} for an adjacent column tableau given as a chain.
pub fn adjacent_column_weight(chain: &[Partition]) -> BigInt {
    chain.windows(2).map(|w| act_phi_flat(&w[1], &w[0])).product()
}

/// φ_{λ/μ}(ν) summed over adjacent column tableaux.
pub fn phi_weight_flat(lambda: &Partition, mu: &Partition, nu: &[usize]) -> BigInt {
    adjacent_column_tableaux(lambda, mu, nu).iter().map(|t| adjacent_column_weight(t)).sum()
}

/// Set-cardinality oracle for θ_{λ/μ}: distinct permutations α of μ with α ⊆ λ.
pub fn theta_flat_oracle(lambda: &Partition, mu: &Partition) -> BigInt {
    let len = lambda.len().max(mu.len());
    let lp = lambda.padded(len);
    let count = distinct_permutations(&mu.padded(len))
        .into_iter()
        .filter(|a| a.iter().zip(&lp).all(|(x, y)| x <= y))
        .count();
    BigInt::from(count)
}

/// Set-cardinality oracle for ψ_{λ/μ}: distinct permutations α of μ with λ/α a
/// generalised vertical strip.
pub fn psi_flat_oracle(lambda: &Partition, mu: &Partition) -> BigInt {
    let len = lambda.len().max(mu.len());
    let lp = lambda.padded(len);
    let count = distinct_permutations(&mu.padded(len))
        .into_iter()
        .filter(|a| a.iter().zip(&lp).all(|(x, y)| y >= x && y - x <= 1))
        .count();
    BigInt::from(count)
}
