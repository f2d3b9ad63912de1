//! Fusion coefficients N_{λμ}^ν of the symmetric-tensor Frobenius algebra,
//! computed by counting permutation pairs, by a Verlinde-type sum over roots of
//! unity and by reduction of general weights to the alcove.
//!
//! Every function takes the two factors first and the product label last, so
//! `n_count(ctx, λ, μ, ν)` is the multiplicity of v_ν in v_λ·v_μ.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use once_cell::sync::OnceCell;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cyclotomic::{eval_msym, CycloNum};
use crate::error::{Error, Result};
use crate::partitions::{
    distinct_permutations, enumerate_alcove, factorial, partitions_bounded, reduce_to_alcove, stab_order,
    AlcoveWeight, Context, Partition,
};
use crate::report::Report;
use crate::CycloQ;

fn padded(weight: &[usize], ctx: Context) -> Result<Vec<i64>> {
    if weight.len() > ctx.k {
        return Err(Error::RankMismatch { expected: ctx.k, got: weight.len() });
    }
    let mut v: Vec<i64> = weight.iter().map(|&p| p as i64).collect();
    v.resize(ctx.k, 0);
    Ok(v)
}

fn residues(v: &[i64], n: usize) -> Vec<i64> {
    v.iter().map(|x| x.rem_euclid(n as i64)).collect()
}

/// Counts pairs (a, b) of permutations with a + b ≡ target entrywise mod n.
fn count_pairs(n: usize, a_perms: &[Vec<i64>], b_perms: &[Vec<i64>], target: &[i64]) -> BigInt {
    let mut by_residue: HashMap<Vec<i64>, usize> = HashMap::new();
    for b in b_perms {
        *by_residue.entry(residues(b, n)).or_insert(0) += 1;
    }
    let mut total = 0usize;
    for a in a_perms {
        let need: Vec<i64> = a.iter().zip(target).map(|(x, t)| (t - x).rem_euclid(n as i64)).collect();
        total += by_residue.get(&need).copied().unwrap_or(0);
    }
    BigInt::from(total)
}

/// N̄_{λμ}^ν: pairs of distinct permutations (λw, μw′) whose sum is a level-n
/// translate of ν. The factors may be arbitrary dominant weights of length at
/// most k; the witness translation α then satisfies n|α| = |λ|+|μ|−|ν|.
pub fn n_count(ctx: Context, lambda: &[usize], mu: &[usize], nu: &AlcoveWeight) -> Result<BigInt> {
    ctx.ensure_same(&nu.ctx())?;
    let a = distinct_permutations(&padded(lambda, ctx)?);
    let b = distinct_permutations(&padded(mu, ctx)?);
    Ok(count_pairs(ctx.n, &a, &b, &nu.weight()))
}

/// N_{λμ}^ν = Σ_σ m_λ(ζ^σ) m_μ(ζ^σ) |S_ν| m_ν(ζ^{−σ}) / (nᵏ |S_σ|) over the
/// alcove, evaluated exactly in Q(ζₙ).
pub fn n_verlinde(ctx: Context, lambda: &AlcoveWeight, mu: &AlcoveWeight, nu: &AlcoveWeight) -> Result<BigInt> {
    for w in [lambda, mu, nu] {
        ctx.ensure_same(&w.ctx())?;
    }
    let n = ctx.n;
    let mut acc = CycloQ::zero(n);
    for sigma in enumerate_alcove(ctx) {
        let s = sigma.weight();
        let neg: Vec<i64> = s.iter().map(|x| -x).collect();
        let term = eval_msym::<BigRational>(lambda.parts(), &s, n)
            .mul_ref(&eval_msym(mu.parts(), &s, n))
            .mul_ref(&eval_msym(nu.parts(), &neg, n));
        let weight = BigRational::new(nu.stab_order(), BigInt::from(n).pow(ctx.k as u32) * sigma.stab_order());
        acc = acc.add_ref(&term.scale(&weight));
    }
    acc.to_integer()
}

/// |S_μ̌|/|S_μ| as a product of multinomials, one per residue class modulo n:
/// the class of r collects the multiplicities m_j(μ) for j ≡ r and the class
/// of n also receives the zero parts.
pub fn reduction_multiplier(ctx: Context, mu: &[usize]) -> Result<BigInt> {
    let full = padded(mu, ctx)?;
    let n = ctx.n as i64;
    let mut classes: BTreeMap<i64, BTreeMap<i64, usize>> = BTreeMap::new();
    for &v in &full {
        *classes.entry((v - 1).rem_euclid(n) + 1).or_default().entry(v).or_insert(0) += 1;
    }
    let mut acc = BigInt::from(1);
    for counts in classes.values() {
        let total: usize = counts.values().sum();
        let denom: BigInt = counts.values().map(|&m| factorial(m)).product();
        acc *= factorial(total) / denom;
    }
    Ok(acc)
}

/// N_{λμ}^ν for a general dominant μ, reduced to the alcove point μ̌ of its
/// orbit and evaluated there by the Verlinde sum.
pub fn n_reduce(ctx: Context, lambda: &AlcoveWeight, mu: &[usize], nu: &AlcoveWeight) -> Result<BigInt> {
    let (check, _) = reduce_to_alcove(&padded(mu, ctx)?, ctx)?;
    Ok(n_verlinde(ctx, lambda, &check, nu)? * reduction_multiplier(ctx, mu)?)
}

/// Alcove data for one (n, k) with lazily built evaluation and fusion tables.
pub struct FusionContext {
    ctx: Context,
    alcove: Vec<AlcoveWeight>,
    index: HashMap<AlcoveWeight, usize>,
    perms: Vec<Vec<Vec<i64>>>,
    values: OnceCell<Vec<Vec<CycloQ>>>,
    table: OnceCell<Vec<Vec<Vec<BigInt>>>>,
}

impl FusionContext {
    pub fn new(ctx: Context) -> Self {
        let alcove = enumerate_alcove(ctx);
        let index = alcove.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let perms = alcove.iter().map(|w| distinct_permutations(&w.weight())).collect();
        FusionContext { ctx, alcove, index, perms, values: OnceCell::new(), table: OnceCell::new() }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn alcove(&self) -> &[AlcoveWeight] {
        &self.alcove
    }

    pub fn index_of(&self, w: &AlcoveWeight) -> usize {
        self.index[w]
    }

    /// m_λ(ζ^σ) indexed [λ][σ].
    pub fn values(&self) -> &[Vec<CycloQ>] {
        self.values.get_or_init(|| {
            let n = self.ctx.n;
            self.alcove
                .par_iter()
                .map(|l| self.alcove.iter().map(|s| eval_msym(l.parts(), &s.weight(), n)).collect())
                .collect()
        })
    }

    /// The full table N[λ][μ][ν] by the counting route.
    pub fn table(&self) -> &[Vec<Vec<BigInt>>] {
        self.table.get_or_init(|| {
            let size = self.alcove.len();
            let n = self.ctx.n;
            (0..size)
                .into_par_iter()
                .map(|l| {
                    (0..size)
                        .map(|m| {
                            self.alcove
                                .iter()
                                .map(|nu| count_pairs(n, &self.perms[l], &self.perms[m], &nu.weight()))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
    }

    pub fn n(&self, lambda: &AlcoveWeight, mu: &AlcoveWeight, nu: &AlcoveWeight) -> BigInt {
        self.table()[self.index_of(lambda)][self.index_of(mu)][self.index_of(nu)].clone()
    }

    pub fn coeff_table(&self) -> CoeffTable {
        let mut out = CoeffTable::new(self.ctx, "N");
        let table = self.table();
        for (l, lw) in self.alcove.iter().enumerate() {
            for (m, mw) in self.alcove.iter().enumerate() {
                for (v, vw) in self.alcove.iter().enumerate() {
                    let c = &table[l][m][v];
                    if !c.is_zero() {
                        out.insert(lw.parts().to_vec(), mw.parts().to_vec(), vw.parts().to_vec(), c.clone())
                            .expect("fusion entries obey the degree law");
                    }
                }
            }
        }
        out
    }

    /// Counting route against the Verlinde route on every triple, and the
    /// reduction route against counting for all second factors with parts ≤ 2n.
    pub fn route_report(&self) -> Report {
        let mut report = Report::new(format!("fusion routes n={} k={}", self.ctx.n, self.ctx.k));
        let values = self.values();
        let table = self.table();
        let n = self.ctx.n;
        let size = self.alcove.len();
        let scale: Vec<BigRational> = self
            .alcove
            .iter()
            .map(|s| BigRational::new(BigInt::from(1), BigInt::from(n).pow(self.ctx.k as u32) * s.stab_order()))
            .collect();
        let conj: Vec<Vec<CycloQ>> = values.iter().map(|row| row.iter().map(CycloNum::conj).collect()).collect();
        let results: Vec<Vec<String>> = (0..size)
            .into_par_iter()
            .map(|l| {
                let mut bad = Vec::new();
                for m in 0..size {
                    let pre: Vec<CycloQ> =
                        (0..size).map(|s| values[l][s].mul_ref(&values[m][s]).scale(&scale[s])).collect();
                    for v in 0..size {
                        let mut acc = CycloQ::zero(n);
                        for (s, p) in pre.iter().enumerate() {
                            acc = acc.add_ref(&p.mul_ref(&conj[v][s]));
                        }
                        let acc = acc.scale(&BigRational::from_integer(self.alcove[v].stab_order()));
                        let ok = acc.to_integer().map(|x| x == table[l][m][v]).unwrap_or(false);
                        if !ok {
                            bad.push(format!(
                                "count {} != verlinde {} at ({:?},{:?},{:?})",
                                table[l][m][v], acc, self.alcove[l], self.alcove[m], self.alcove[v]
                            ));
                        }
                    }
                }
                bad
            })
            .collect();
        for bad in results {
            report.checks += size * size;
            report.failures.extend(bad);
        }
        for mu in dominant_weights(self.ctx, 2 * n) {
            for lambda in &self.alcove {
                for nu in &self.alcove {
                    let counted = n_count(self.ctx, lambda.parts(), &mu, nu);
                    let reduced = n_reduce(self.ctx, lambda, &mu, nu);
                    report.check(counted.is_ok() && counted == reduced, || {
                        format!("reduce {reduced:?} != count {counted:?} at ({lambda:?},{mu:?},{nu:?})")
                    });
                }
            }
        }
        report
    }

    /// Unit, commutativity, conjugation, duality, rotation covariance,
    /// associativity and the quantum-dimension identity.
    pub fn symmetry_suite(&self) -> Report {
        let mut r = Report::new(format!("fusion symmetries n={} k={}", self.ctx.n, self.ctx.k));
        let t = self.table();
        let a = &self.alcove;
        let size = a.len();
        let n = self.ctx.n;
        let unit = self.index_of(&AlcoveWeight::top(self.ctx));
        let star: Vec<usize> = a.iter().map(|w| self.index_of(&w.star())).collect();
        let dims: Vec<BigInt> = a.iter().map(AlcoveWeight::quantum_dim).collect();
        for l in 0..size {
            for m in 0..size {
                let expect = if l == m { 1 } else { 0 };
                r.check(t[l][unit][m] == BigInt::from(expect), || format!("unit fails at ({:?},{:?})", a[l], a[m]));
                let dual = if star[l] == m { dims[l].clone() } else { BigInt::zero() };
                r.check(t[l][m][unit] == dual, || format!("top coefficient fails at ({:?},{:?})", a[l], a[m]));
                for v in 0..size {
                    let c = &t[l][m][v];
                    r.check(*c == t[m][l][v], || format!("commutativity fails at ({:?},{:?},{:?})", a[l], a[m], a[v]));
                    r.check(*c == t[star[l]][star[m]][star[v]], || {
                        format!("conjugation fails at ({:?},{:?},{:?})", a[l], a[m], a[v])
                    });
                    r.check(c * &dims[v] == &dims[l] * &t[m][star[v]][star[l]], || {
                        format!("duality fails at ({:?},{:?},{:?})", a[l], a[m], a[v])
                    });
                    let degree = a[l].size() + a[m].size();
                    if (degree + n * size - a[v].size()) % n != 0 {
                        r.check(c.is_zero(), || format!("degree law fails at ({:?},{:?},{:?})", a[l], a[m], a[v]));
                    }
                }
            }
        }
        for x in 0..n as i64 {
            for y in 0..n as i64 {
                let rot = |w: &AlcoveWeight, s: i64| self.index_of(&w.rot(s));
                for l in 0..size {
                    for m in 0..size {
                        for v in 0..size {
                            let moved = &t[rot(&a[l], x)][rot(&a[m], y)][rot(&a[v], x + y)];
                            r.check(*moved == t[l][m][v], || {
                                format!("rotation ({x},{y}) fails at ({:?},{:?},{:?})", a[l], a[m], a[v])
                            });
                        }
                    }
                }
            }
        }
        for l in 0..size {
            for m in 0..size {
                let mut total = BigInt::zero();
                for v in 0..size {
                    total += &t[l][m][v] * &dims[v];
                }
                r.check(total == &dims[l] * &dims[m], || format!("quantum dimensions fail at ({:?},{:?})", a[l], a[m]));
            }
        }
        let failures: Vec<String> = (0..size)
            .into_par_iter()
            .flat_map_iter(|l| {
                let mut bad = Vec::new();
                for m in 0..size {
                    for v in 0..size {
                        for rho in 0..size {
                            let mut left = BigInt::zero();
                            let mut right = BigInt::zero();
                            for s in 0..size {
                                left += &t[l][m][s] * &t[s][v][rho];
                                right += &t[m][v][s] * &t[l][s][rho];
                            }
                            if left != right {
                                bad.push(format!(
                                    "associativity fails at ({:?},{:?},{:?};{:?})",
                                    a[l], a[m], a[v], a[rho]
                                ));
                            }
                        }
                    }
                }
                bad
            })
            .collect();
        r.checks += size.pow(4);
        r.failures.extend(failures);
        r
    }

    /// The pairing η(v_λ, v_μ) = N_{λμ}^{nᵏ}, vanishing of the ideal
    /// generators at every alcove point, and the monomial product expansion
    /// at random points.
    pub fn frobenius_suite(&self) -> Report {
        let mut r = Report::new(format!("frobenius algebra n={} k={}", self.ctx.n, self.ctx.k));
        let a = &self.alcove;
        let size = a.len();
        let n = self.ctx.n;
        let k = self.ctx.k;
        let unit = self.index_of(&AlcoveWeight::top(self.ctx));
        let t = self.table();
        for l in 0..size {
            let row: Vec<usize> = (0..size).filter(|&m| !t[l][m][unit].is_zero()).collect();
            let ok = row.len() == 1 && a[row[0]] == a[l].star() && t[l][row[0]][unit] == a[l].quantum_dim();
            r.check(ok, || format!("pairing row of {:?} is {:?}", a[l], row));
        }
        for sigma in a {
            let s = sigma.weight();
            for shift in 1..=2 * n {
                let high: CycloQ = eval_msym(&[n + shift], &s, n);
                let low: CycloQ = eval_msym(&[shift], &s, n);
                r.check(high == low, || format!("p_{} - p_{} does not vanish at {:?}", n + shift, shift, sigma));
            }
            let pn: CycloQ = eval_msym(&[n], &s, n);
            r.check(pn.to_integer().ok() == Some(BigInt::from(k)), || format!("p_n != k at {sigma:?}"));
        }
        let mut rng = StdRng::seed_from_u64(0x5eed ^ (n as u64) << 8 ^ k as u64);
        for _ in 0..50 {
            let p: Vec<i64> = (0..k).map(|_| rng.gen_range(0..3 * n as i64)).collect();
            let vals: Vec<CycloQ> = a.iter().map(|w| eval_msym(w.parts(), &p, n)).collect();
            for l in 0..size {
                for m in l..size {
                    let lhs = vals[l].mul_ref(&vals[m]);
                    let mut rhs = CycloQ::zero(n);
                    for v in 0..size {
                        if !t[l][m][v].is_zero() {
                            rhs = rhs.add_ref(&vals[v].scale(&BigRational::from_integer(t[l][m][v].clone())));
                        }
                    }
                    r.check(lhs == rhs, || format!("product expansion fails at ({:?},{:?}) p={p:?}", a[l], a[m]));
                }
            }
        }
        r
    }

    /// The scaled S-matrix σ_{λμ} = m_λ(ζ^μ); the factor n^{−k/2} is omitted.
    pub fn s_matrix(&self) -> Vec<Vec<CycloQ>> {
        self.values().to_vec()
    }

    /// The inverse of the scaled S-matrix, (σ⁻¹)_{λμ} = |S_μ| m_μ(ζ^{−λ})/(nᵏ|S_λ|).
    pub fn s_inverse(&self) -> Vec<Vec<CycloQ>> {
        let n = self.ctx.n;
        let base = BigInt::from(n).pow(self.ctx.k as u32);
        self.alcove
            .iter()
            .map(|s| {
                self.alcove
                    .iter()
                    .enumerate()
                    .map(|(m, mw)| {
                        let w = BigRational::new(mw.stab_order(), &base * s.stab_order());
                        self.values()[m][self.index_of(s)].conj().scale(&w)
                    })
                    .collect()
            })
            .collect()
    }

    /// Diagonal T-matrix entries in Q(ζ_{24n}): ∏_i ζ_{24n}^{−n(n−1)+12λ_i(n−λ_i)}.
    pub fn t_matrix(&self) -> Vec<CycloQ> {
        let n = self.ctx.n as i64;
        let order = 24 * self.ctx.n;
        self.alcove
            .iter()
            .map(|w| {
                let e: i64 = w.parts().iter().map(|&p| -n * (n - 1) + 12 * p as i64 * (n - p as i64)).sum();
                CycloQ::zeta_pow(order, e)
            })
            .collect()
    }

    /// σ·σ⁻¹ = σ⁻¹·σ = id, T·T* = id, and for k = 1 the relations
    /// σ² = nC and (σT)³ = n√n C with C_{λμ} = δ_{λ*μ}.
    pub fn modular_report(&self) -> Report {
        let mut r = Report::new(format!("modular data n={} k={}", self.ctx.n, self.ctx.k));
        let s = self.s_matrix();
        let si = self.s_inverse();
        let size = s.len();
        let id = identity(size, self.ctx.n);
        r.check(mat_mul(&s, &si) == id, || "S S^-1 != id".into());
        r.check(mat_mul(&si, &s) == id, || "S^-1 S != id".into());
        for (i, t) in self.t_matrix().iter().enumerate() {
            r.check(t.mul_ref(&t.conj()).is_one(), || format!("T entry {i} is not unimodular"));
        }
        if self.ctx.k == 1 {
            let n = self.ctx.n;
            let order = 24 * n;
            let big: Vec<Vec<CycloQ>> = s.iter().map(|row| row.iter().map(|x| x.lift(order)).collect()).collect();
            let t = self.t_matrix();
            let c: Vec<Vec<CycloQ>> = (0..size)
                .map(|i| {
                    let star = self.index_of(&self.alcove[i].star());
                    (0..size).map(|j| if j == star { CycloQ::one(order) } else { CycloQ::zero(order) }).collect()
                })
                .collect();
            let scale_all = |m: &[Vec<CycloQ>], x: &CycloQ| -> Vec<Vec<CycloQ>> {
                m.iter().map(|row| row.iter().map(|y| y.mul_ref(x)).collect()).collect()
            };
            let nq = CycloQ::from_scalar(order, BigRational::from_integer(BigInt::from(n)));
            r.check(mat_mul(&big, &big) == scale_all(&c, &nq), || "S^2 != nC".into());
            let st: Vec<Vec<CycloQ>> =
                big.iter().map(|row| row.iter().zip(&t).map(|(x, ti)| x.mul_ref(ti)).collect()).collect();
            let cube = mat_mul(&mat_mul(&st, &st), &st);
            let root = sqrt_n(n);
            r.check(root.mul_ref(&root) == nq, || "Gauss sum square root is wrong".into());
            r.check(cube == scale_all(&c, &nq.mul_ref(&root)), || "(ST)^3 != n sqrt(n) C".into());
        }
        r
    }
}

/// √n in Q(ζ_{24n}) from the quadratic Gauss sum Σ_{j<4n} ζ_{4n}^{j²} = 2(1+i)√n.
pub fn sqrt_n(n: usize) -> CycloQ {
    let order = 24 * n;
    let step = 6;
    let mut counts = vec![0i64; order];
    for j in 0..4 * n {
        counts[(step * j * j) % order] += 1;
    }
    let gauss = CycloQ::from_power_counts(order, &counts);
    let i = CycloQ::zeta_pow(order, 6 * n as i64);
    let two = CycloQ::from_scalar(order, BigRational::from_integer(BigInt::from(2)));
    let denom = two.mul_ref(&CycloQ::one(order).add_ref(&i));
    gauss.div_ref(&denom).expect("1+i is invertible")
}

fn identity(size: usize, order: usize) -> Vec<Vec<CycloQ>> {
    (0..size)
        .map(|i| (0..size).map(|j| if i == j { CycloQ::one(order) } else { CycloQ::zero(order) }).collect())
        .collect()
}

fn mat_mul(a: &[Vec<CycloQ>], b: &[Vec<CycloQ>]) -> Vec<Vec<CycloQ>> {
    let order = a[0][0].order();
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| {
                    let mut acc = CycloQ::zero(order);
                    for (l, row) in b.iter().enumerate() {
                        acc = acc.add_ref(&a[i][l].mul_ref(&row[j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Dominant weights of length k (zeros allowed) with parts at most `max`.
pub fn dominant_weights(ctx: Context, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..=ctx.k * max)
        .flat_map(|m| partitions_bounded(m, ctx.k, max))
        .map(|p| p.padded(ctx.k))
        .collect();
    out.sort();
    out
}

/// |S_ν| for a weight given as parts.
pub fn stabiliser(parts: &[usize]) -> BigInt {
    stab_order(&parts.iter().map(|&p| p as i64).collect::<Vec<_>>())
}

/// One row of a coefficient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffEntry {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub d: i64,
    pub value: BigInt,
}

/// Sparse integer coefficients keyed by (λ, μ, ν) with the degree
/// d = (|λ|+|μ|−|ν|)/n, so λ and μ are the factors and ν the product label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    ctx: Context,
    value_key: String,
    entries: BTreeMap<(Vec<usize>, Vec<usize>, Vec<usize>), (i64, BigInt)>,
}

fn trimmed(v: Vec<usize>) -> Vec<usize> {
    Partition::from_unsorted(v).into_parts()
}

fn fmt_parts(v: &[usize]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn json_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(x) => x.as_i64().map(BigInt::from).ok_or_else(|| Error::Table(format!("bad integer {x}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Table(format!("bad integer {s:?}"))),
        other => Err(Error::Table(format!("expected integer, got {other}"))),
    }
}

fn json_parts(v: &Value) -> Result<Vec<usize>> {
    let arr = v.as_array().ok_or_else(|| Error::Table(format!("expected array, got {v}")))?;
    arr.iter()
        .map(|x| x.as_u64().map(|p| p as usize).ok_or_else(|| Error::Table(format!("bad part {x}"))))
        .collect()
}

impl CoeffTable {
    pub fn new(ctx: Context, value_key: &str) -> Self {
        CoeffTable { ctx, value_key: value_key.into(), entries: BTreeMap::new() }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn value_key(&self) -> &str {
        &self.value_key
    }

    /// Stores a coefficient, dropping zeros and rejecting keys that violate
    /// the degree law.
    pub fn insert(&mut self, lambda: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>, value: BigInt) -> Result<()> {
        let (lambda, mu, nu) = (trimmed(lambda), trimmed(mu), trimmed(nu));
        let excess = (lambda.iter().sum::<usize>() + mu.iter().sum::<usize>()) as i64 - nu.iter().sum::<usize>() as i64;
        let n = self.ctx.n as i64;
        if excess.rem_euclid(n) != 0 {
            return Err(Error::DegreeLaw(format!("({lambda:?},{mu:?},{nu:?})"), self.ctx.n));
        }
        let key = (lambda, mu, nu);
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, (excess / n, value));
        }
        Ok(())
    }

    pub fn get(&self, lambda: &[usize], mu: &[usize], nu: &[usize]) -> BigInt {
        let key = (trimmed(lambda.to_vec()), trimmed(mu.to_vec()), trimmed(nu.to_vec()));
        self.entries.get(&key).map(|(_, v)| v.clone()).unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = CoeffEntry> + '_ {
        self.entries.iter().map(|((l, m, v), (d, c))| CoeffEntry {
            lambda: l.clone(),
            mu: m.clone(),
            nu: v.clone(),
            d: *d,
            value: c.clone(),
        })
    }

    /// Keeps only the entries satisfying the predicate.
    pub fn filtered(&self, keep: impl Fn(&CoeffEntry) -> bool) -> CoeffTable {
        let mut out = CoeffTable::new(self.ctx, &self.value_key);
        for e in self.entries().filter(|e| keep(e)) {
            out.entries.insert((e.lambda, e.mu, e.nu), (e.d, e.value));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|e| {
                let mut obj = serde_json::Map::new();
                obj.insert("lambda".into(), json!(e.lambda));
                obj.insert("mu".into(), json!(e.mu));
                obj.insert("nu".into(), json!(e.nu));
                obj.insert("d".into(), json!(e.d));
                obj.insert(self.value_key.clone(), int_json(&e.value));
                Value::Object(obj)
            })
            .collect();
        json!({ "n": self.ctx.n, "k": self.ctx.k, "entries": entries })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("tables serialise") + "\n"
    }

    /// Parses a table, taking the value column from whichever of "N" or "C"
    /// is present.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Table(e.to_string()))?;
        let field = |name: &str| v.get(name).and_then(Value::as_u64).ok_or_else(|| Error::Table(format!("missing {name}")));
        let ctx = Context::new(field("n")? as usize, field("k")? as usize)?;
        let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| Error::Table("missing entries".into()))?;
        let key = entries
            .first()
            .and_then(|e| ["N", "C"].into_iter().find(|k| e.get(*k).is_some()))
            .unwrap_or("N");
        let mut table = CoeffTable::new(ctx, key);
        for e in entries {
            let get = |name: &str| e.get(name).ok_or_else(|| Error::Table(format!("entry lacks {name}")));
            let value = json_int(get(key)?)?;
            let (l, m, v) = (json_parts(get("lambda")?)?, json_parts(get("mu")?)?, json_parts(get("nu")?)?);
            table.insert(l.clone(), m.clone(), v.clone(), value)?;
            let d = get("d")?.as_i64().ok_or_else(|| Error::Table("bad degree".into()))?;
            let back = (trimmed(l), trimmed(m), trimmed(v));
            if table.entries.get(&back).is_some_and(|(stored, _)| *stored != d) {
                return Err(Error::Table(format!("degree {d} disagrees with the key {back:?}")));
            }
        }
        Ok(table)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,mu,nu,d,value\n");
        for e in self.entries() {
            out.push_str(&format!(
                "\"{}\",\"{}\",\"{}\",{},{}\n",
                fmt_parts(&e.lambda),
                fmt_parts(&e.mu),
                fmt_parts(&e.nu),
                e.d,
                e.value
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={} k={} entries={}\n", self.ctx.n, self.ctx.k, self.len());
        for e in self.entries() {
            out.push_str(&format!(
                "{}[{} ; {} -> {}] d={} = {}\n",
                self.value_key,
                fmt_parts(&e.lambda),
                fmt_parts(&e.mu),
                fmt_parts(&e.nu),
                e.d,
                e.value
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests;
