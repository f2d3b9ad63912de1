//! Schur function combinatorics: characters, Kostka numbers, straightening
//! and Littlewood-Richardson coefficients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::partitions::{partitions_of, Partition};
use crate::scalar::Scalar;
use crate::symfun::flat::supersets;
use crate::symfun::{Basis, SymFunc};

type PairCache = Lazy<RwLock<HashMap<(Partition, Partition), BigInt>>>;

static CHARACTERS: PairCache = Lazy::new(|| RwLock::new(HashMap::new()));
static KOSTKA: PairCache = Lazy::new(|| RwLock::new(HashMap::new()));

fn beta_numbers(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i)).collect())
}

/// Border strips of size r removable from λ, with their signs (−1)^{height}.
pub fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let beta = beta_numbers(lambda);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        out.push((from_beta(next), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// The irreducible character χ^λ at the class ν, by Murnaghan-Nakayama.
pub fn mn_character(lambda: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != nu.size() {
        return BigInt::zero();
    }
    if nu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), nu.clone());
    if let Some(v) = CHARACTERS.read().get(&key) {
        return v.clone();
    }
    let rest = Partition::from_unsorted(nu.parts()[1..].to_vec());
    let mut acc = BigInt::zero();
    for (mu, s) in remove_border_strips(lambda, nu.part(0)) {
        acc += mn_character(&mu, &rest) * s;
    }
    CHARACTERS.write().insert(key, acc.clone());
    acc
}

/// Number of semistandard tableaux of shape λ and content μ.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = KOSTKA.read().get(&key) {
        return v.clone();
    }
    let last = mu.part(mu.len() - 1);
    let rest = Partition::from_unsorted(mu.parts()[..mu.len() - 1].to_vec());
    let mut acc = BigInt::zero();
    for kappa in strips_below(lambda, last) {
        acc += kostka(&kappa, &rest);
    }
    KOSTKA.write().insert(key, acc.clone());
    acc
}

/// All κ ⊆ λ with λ/κ a horizontal strip of size r.
pub fn strips_below(lambda: &Partition, r: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if rest == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let top = lambda.part(i);
        let low = lambda.part(i + 1);
        for v in (low..=top).rev() {
            if top - v > rest {
                break;
            }
            cur.push(v);
            rec(lambda, i + 1, rest - (top - v), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, r, &mut Vec::new(), &mut out);
    out
}

/// Straightens s_α for an integer sequence α: returns the sign and partition
/// with s_α = ±s_λ, or None when s_α vanishes.
pub fn schur_straighten(alpha: &[i64]) -> Option<(i64, Partition)> {
    let l = alpha.len() as i64;
    let mut beta: Vec<i64> = alpha.iter().enumerate().map(|(i, &a)| a + l - 1 - i as i64).collect();
    if beta.iter().any(|&b| b < 0) {
        return None;
    }
    let mut sign = 1;
    for i in 0..beta.len() {
        for j in 0..beta.len() - 1 - i {
            if beta[j] == beta[j + 1] {
                return None;
            }
            if beta[j] < beta[j + 1] {
                beta.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts = beta.iter().enumerate().map(|(i, &b)| (b - (l - 1 - i as i64)) as usize).collect();
    Some((sign, Partition::from_unsorted(parts)))
}

/// m_λ in the Schur basis by the raising operator product ∏_{λ_i > λ_j} (1 − R_{ji})
/// applied to s_λ and straightened, with λ padded by zeros to |λ| rows.
pub fn monomial_in_schur<T: Scalar>(lambda: &Partition) -> SymFunc<T> {
    let len = lambda.size();
    let base: Vec<i64> = lambda.padded(len).into_iter().map(|p| p as i64).collect();
    let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    terms.insert(base.clone(), 1);
    for i in 0..len {
        for j in i + 1..len {
            if base[i] <= base[j] {
                continue;
            }
            let mut next = terms.clone();
            for (v, c) in &terms {
                let mut w = v.clone();
                w[i] -= 1;
                w[j] += 1;
                *next.entry(w).or_insert(0) -= c;
            }
            next.retain(|_, c| *c != 0);
            terms = next;
        }
    }
    let mut out = SymFunc::zero(Basis::S);
    for (v, c) in terms {
        if let Some((sign, mu)) = schur_straighten(&v) {
            out.add_term(mu, T::from_i64(sign * c));
        }
    }
    out
}

/// m_λ in the Schur basis, inverting the unitriangular Kostka matrix.
pub fn monomial_by_inverse_kostka<T: Scalar>(lambda: &Partition) -> SymFunc<T> {
    let below: Vec<Partition> = partitions_of(lambda.size()).into_iter().filter(|m| m <= lambda).collect();
    let mut solved: BTreeMap<Partition, SymFunc<T>> = BTreeMap::new();
    for mu in &below {
        let mut f = SymFunc::basis_element(Basis::S, mu.clone());
        for (nu, g) in &solved {
            if nu < mu {
                let k = kostka(mu, nu);
                if !k.is_zero() {
                    f = f.sub(&g.scale(&T::from_bigint(&k)));
                }
            }
        }
        solved.insert(mu.clone(), f);
    }
    solved.remove(lambda).unwrap_or_else(|| SymFunc::zero(Basis::S))
}

/// c^ν_{λμ}: skew tableaux of shape ν/λ and content μ whose reverse reading
/// word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigInt::zero();
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; nu.part(r)]).collect();
    let mut count = vec![0usize; mu.len() + 1];
    let mut total = BigInt::zero();

    struct Search<'a> {
        lambda: &'a Partition,
        mu: &'a Partition,
        nu: &'a Partition,
    }

    impl Search<'_> {
        fn fill(&self, row: usize, col: usize, grid: &mut Vec<Vec<usize>>, count: &mut Vec<usize>, total: &mut BigInt) {
            if row == self.nu.len() {
                *total += 1;
                return;
            }
            if col == self.nu.part(row) {
                // the row is complete; read it right to left for the lattice condition
                let mut seen = count.clone();
                for c in (self.lambda.part(row)..self.nu.part(row)).rev() {
                    let v = grid[row][c];
                    seen[v] += 1;
                    if seen[v] > self.mu.part(v - 1) || (v > 1 && seen[v] > seen[v - 1]) {
                        return;
                    }
                }
                let saved = std::mem::replace(count, seen);
                self.fill(row + 1, self.lambda.part(row + 1).min(self.nu.part(row + 1)), grid, count, total);
                *count = saved;
                return;
            }
            let left = if col > self.lambda.part(row) { grid[row][col - 1] } else { 1 };
            let above = if row > 0 && col >= self.lambda.part(row - 1) { grid[row - 1][col] + 1 } else { 1 };
            let lo = left.max(above);
            let hi = self.mu.len().min(row + 1);
            for v in lo..=hi {
                grid[row][col] = v;
                self.fill(row, col + 1, grid, count, total);
            }
            grid[row][col] = 0;
        }
    }

    if rows == 0 {
        return BigInt::one();
    }
    let search = Search { lambda, mu, nu };
    search.fill(0, lambda.part(0).min(nu.part(0)), &mut grid, &mut count, &mut total);
    total
}

/// s_λ s_μ in the Schur basis, optionally keeping only partitions with at
/// most `max_rows` rows.
pub fn schur_product<T: Scalar>(lambda: &Partition, mu: &Partition, max_rows: Option<usize>) -> SymFunc<T> {
    let mut out = SymFunc::zero(Basis::S);
    let limit = max_rows.unwrap_or(usize::MAX).min(lambda.len() + mu.len());
    for nu in supersets(lambda, mu.size()) {
        if nu.len() > limit || !nu.contains(mu) {
            continue;
        }
        let c = lr_coefficient(lambda, mu, &nu);
        if !c.is_zero() {
            out.add_term(nu, T::from_bigint(&c));
        }
    }
    out
}
