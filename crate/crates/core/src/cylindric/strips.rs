//! Weight statistics θ, ψ, φ and χ of a single cylindric skew shape λ/d/μ,
//! each with an independent counting oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine::{is_valid_shape, loop_window};
use crate::partitions::{binomial, distinct_permutations, AlcoveWeight};

/// λ'_i for i = 0..=n+1 of an alcove weight, with λ'_{n+1} = 0.
fn conjugate_counts(parts: &[usize], n: usize) -> Vec<i64> {
    (0..=n + 1).map(|i| parts.iter().filter(|&&p| p >= i).count() as i64).collect()
}

/// |λ| − |μ| + nd, the number of cells in one fundamental domain.
pub fn shape_size(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> i64 {
    lambda.size() as i64 - mu.size() as i64 + lambda.ctx().n as i64 * d
}

/// λ/d/μ is valid and every row holds at most one cell.
pub fn is_vertical_strip(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> bool {
    let top = loop_window(lambda.parts(), lambda.ctx().n, d);
    mu.parts().iter().zip(&top).all(|(&m, &l)| (0..=1).contains(&(l - m as i64)))
}

/// λ/d/μ is valid and no two cells share a column of the cylinder.
pub fn is_horizontal_strip(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> bool {
    let n = lambda.ctx().n as i64;
    let top = loop_window(lambda.parts(), n as usize, d);
    let k = top.len();
    is_valid_shape(lambda, d, mu)
        && (0..k).all(|i| {
            let next = if i + 1 < k { top[i + 1] } else { top[0] - n };
            next <= mu.parts()[i] as i64
        })
}

/// Horizontal strip on the shifted cylinder of circumference n − k, tested in
/// the strict coordinates λ = λ̄ + ρ: λ[d]_{i+1} < μ_i on every row.
pub fn is_shifted_horizontal_strip(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> bool {
    let n = lambda.ctx().n as i64;
    let top = loop_window(lambda.parts(), n as usize, d);
    let k = top.len();
    is_valid_shape(lambda, d, mu)
        && (0..k).all(|i| {
            let next = if i + 1 < k { top[i + 1] } else { top[0] - n };
            next < mu.parts()[i] as i64
        })
}

/// θ_{λ/d/μ} as the difference of two binomial products in the conjugate
/// column counts, (λ∘τ^e)'_i = λ'_i + e.
pub fn theta_cyl(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    let n = lambda.ctx().n;
    let lc = conjugate_counts(lambda.parts(), n);
    let mc = conjugate_counts(mu.parts(), n);
    let product = |e: i64| -> BigInt {
        (1..=n).map(|i| binomial(e + lc[i] - mc[i + 1], mc[i] - mc[i + 1])).product()
    };
    product(d) - product(d - 1)
}

/// θ_{λ/d/μ} by enumeration: pairs (w, β) with w a distinct rearrangement of
/// μ, β ≥ 0, |β| = d and (μw)_i ≤ λ_i + nβ_i.
pub fn theta_cyl_oracle(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    count_translations(lambda, d, mu, |gap| gap >= 0)
}

/// ψ_{λ/d/μ} as a single binomial product; zero off vertical strips.
pub fn psi_cyl(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    if d < 0 || !is_vertical_strip(lambda, d, mu) {
        return BigInt::zero();
    }
    let n = lambda.ctx().n;
    let lc = conjugate_counts(lambda.parts(), n);
    let mc = conjugate_counts(mu.parts(), n);
    (1..=n).map(|i| binomial(lc[i] - lc[i + 1], lc[i] + d - mc[i])).product()
}

/// ψ_{λ/d/μ} by enumeration: pairs (w, α) with α ≥ 0, |α| = d and
/// λ_i + nα_i − (μw)_i ∈ {0, 1}.
pub fn psi_cyl_oracle(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    count_translations(lambda, d, mu, |gap| gap == 0 || gap == 1)
}

fn count_translations(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight, admissible: impl Fn(i64) -> bool) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    let n = lambda.ctx().n as i64;
    let k = lambda.ctx().k;
    let lam = lambda.weight();
    let mut total = 0u64;
    for w in distinct_permutations(&mu.weight()) {
        let mut beta = vec![0i64; k];
        compositions(d, 0, &mut beta, &mut |beta| {
            if (0..k).all(|i| admissible(lam[i] + n * beta[i] - w[i])) {
                total += 1;
            }
        });
    }
    BigInt::from(total)
}

/// Visits every composition of `rest` into the slots from `at` onwards.
fn compositions(rest: i64, at: usize, slots: &mut [i64], visit: &mut impl FnMut(&[i64])) {
    if at + 1 == slots.len() {
        slots[at] = rest;
        visit(slots);
        return;
    }
    for v in 0..=rest {
        slots[at] = v;
        compositions(rest - v, at + 1, slots, visit);
    }
}

/// A cylindric adjacent column strip after removing its full windings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedStrip {
    /// Column residue 1..=n where the strip starts.
    pub start: usize,
    /// Total number of cells r = |λ| − |μ| + nd.
    pub length: i64,
    /// Number of full windings removed by τ^{−1}.
    pub windings: i64,
    /// Rows 1..=k holding a cell of the reduced strip.
    pub rows: usize,
}

/// Recognises λ/d/μ as an adjacent column strip whose length is not a
/// multiple of n: translate by τ^{−1} until fewer than n cells remain, which
/// must leave degree 0 or 1, then require a horizontal strip occupying a
/// cyclic interval of columns.
pub fn reduce_adjacent_strip(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> Option<ReducedStrip> {
    let n = lambda.ctx().n as i64;
    let r = shape_size(lambda, d, mu);
    if d < 0 || r <= 0 || r % n == 0 {
        return None;
    }
    let windings = r / n;
    let e = d - windings;
    if !(0..=1).contains(&e) || !is_horizontal_strip(lambda, e, mu) {
        return None;
    }
    let top = loop_window(lambda.parts(), n as usize, e);
    let mut seen = vec![false; n as usize];
    let mut rows = 0;
    for (&m, &l) in mu.parts().iter().zip(&top) {
        if l > m as i64 {
            rows += 1;
        }
        for c in (m as i64 + 1)..=l {
            let res = (c - 1).rem_euclid(n) as usize;
            if seen[res] {
                return None;
            }
            seen[res] = true;
        }
    }
    let starts: Vec<usize> = (0..n as usize).filter(|&c| seen[c] && !seen[(c + n as usize - 1) % n as usize]).collect();
    if starts.len() != 1 {
        return None;
    }
    Some(ReducedStrip { start: starts[0] + 1, length: r, windings, rows })
}

/// Whether λ/d/μ is a cylindric adjacent column strip, including the full
/// windings λ = μ with r a positive multiple of n.
pub fn is_adjacent_strip(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> bool {
    let r = shape_size(lambda, d, mu);
    let n = lambda.ctx().n as i64;
    if r > 0 && r % n == 0 {
        return lambda == mu;
    }
    reduce_adjacent_strip(lambda, d, mu).is_some()
}

/// Number of parts of λ congruent to j modulo n, the multiplicity of j in the
/// cylindric loop of λ.
fn loop_multiplicity(lambda: &AlcoveWeight, j: i64) -> usize {
    let n = lambda.ctx().n as i64;
    lambda.parts().iter().filter(|&&p| (p as i64 - j).rem_euclid(n) == 0).count()
}

/// φ_{λ/d/μ}: the multiplicity m_{a−1+r}(λ∘τ^d) on adjacent column strips,
/// k on full windings, 1 on the empty shape and 0 otherwise.
pub fn phi_cyl(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    let n = lambda.ctx().n as i64;
    let r = shape_size(lambda, d, mu);
    if d < 0 || r < 0 {
        return BigInt::zero();
    }
    if r == 0 {
        return if lambda == mu && d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if r % n == 0 {
        return if lambda == mu { BigInt::from(lambda.ctx().k) } else { BigInt::zero() };
    }
    match reduce_adjacent_strip(lambda, d, mu) {
        Some(strip) => BigInt::from(loop_multiplicity(lambda, strip.start as i64 - 1 + r)),
        None => BigInt::zero(),
    }
}

/// φ_{λ/d/μ} by counting: pairs (a, i) with a a distinct rearrangement of μ
/// and a + r·e_i ≡ λ entrywise modulo n.
pub fn phi_cyl_oracle(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    let n = lambda.ctx().n as i64;
    let r = shape_size(lambda, d, mu);
    if d < 0 || r < 0 {
        return BigInt::zero();
    }
    if r == 0 {
        return if lambda == mu && d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let lam = lambda.weight();
    let mut total = 0u64;
    for a in distinct_permutations(&mu.weight()) {
        for i in 0..a.len() {
            let hit = (0..a.len()).all(|j| {
                let v = a[j] + if i == j { r } else { 0 };
                (v - lam[j]).rem_euclid(n) == 0
            });
            if hit {
                total += 1;
            }
        }
    }
    BigInt::from(total)
}

/// Height of the cylindric ribbon λ̄/d/μ̄ given in strict coordinates
/// λ = λ̄ + ρ, μ = μ̄ + ρ. Each full winding adds a circular ribbon of height
/// k glued along one row.
pub fn ribbon_height(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> Option<usize> {
    let n = lambda.ctx().n as i64;
    let k = lambda.ctx().k;
    let r = shape_size(lambda, d, mu);
    if d < 0 || r <= 0 {
        return None;
    }
    if r % n == 0 {
        return (lambda == mu).then(|| 1 + (r / n) as usize * (k - 1));
    }
    let strip = reduce_adjacent_strip(lambda, d, mu)?;
    Some(strip.rows + strip.windings as usize * (k - 1))
}

/// χ of one cylindric ribbon: (−1)^{ht−1}, times k for full windings where
/// each of the k rows can carry the circular ribbons.
pub fn chi_cyl(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    let n = lambda.ctx().n as i64;
    let r = shape_size(lambda, d, mu);
    if r == 0 {
        return if lambda == mu && d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    match ribbon_height(lambda, d, mu) {
        Some(ht) => {
            let sign = if ht % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            if r % n == 0 {
                sign * lambda.ctx().k
            } else {
                sign
            }
        }
        None => BigInt::zero(),
    }
}

/// χ of one step computed on alternating tensors: move one letter of the
/// 01-word of μ by r, wrap into (0, n], sort with the wedge sign and attach
/// (−1)^{d(k−1)} for the windings.
pub fn chi_cyl_oracle(lambda: &AlcoveWeight, d: i64, mu: &AlcoveWeight) -> BigInt {
    let n = lambda.ctx().n as i64;
    let k = lambda.ctx().k;
    let r = shape_size(lambda, d, mu);
    if d < 0 || r < 0 {
        return BigInt::zero();
    }
    if r == 0 {
        return if lambda == mu && d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let lam = lambda.weight();
    let mut total = BigInt::zero();
    for i in 0..k {
        let mut v = mu.weight();
        v[i] += r;
        let wrapped: Vec<i64> = v.iter().map(|&x| (x - 1).rem_euclid(n) + 1).collect();
        let mut sorted = wrapped.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted != lam {
            continue;
        }
        let inversions = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| wrapped[a] < wrapped[b]).count();
        let odd = (inversions as i64 + d * (k as i64 - 1)) % 2 != 0;
        total += if odd { -1 } else { 1 };
    }
    total
}
