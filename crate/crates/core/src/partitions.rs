//! Partitions, weights, alcoves, boxed partitions and n-cores.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so the empty partition is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(r: usize) -> Self {
        if r == 0 {
            Partition::empty()
        } else {
            Partition(vec![r])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The i-th part counting from zero, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// z_λ = ∏ i^{m_i} m_i!
    pub fn z_factor(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            z *= BigInt::from(i).pow(m as u32) * factorial(m);
        }
        z
    }

    /// ε_λ = (−1)^{|λ|−ℓ(λ)}
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + conj.part(j) - i - 1).collect())
            .collect()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux_count(&self) -> BigInt {
        let mut denom = BigInt::one();
        for row in self.hook_lengths() {
            for h in row {
                denom *= h;
            }
        }
        factorial(self.size()) / denom
    }

    /// Union of the two multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

pub fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero whenever an argument is negative or r > m.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if m < 0 || r < 0 || r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

pub fn binomial_u64(m: i64, r: i64) -> u64 {
    if m < 0 || r < 0 || r > m {
        return 0;
    }
    let r = r.min(m - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// ∏ m_v! over the distinct values v of the entries (zeros included).
pub fn stab_order(weight: &[i64]) -> BigInt {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &w in weight {
        *counts.entry(w).or_insert(0) += 1;
    }
    counts.values().map(|&m| factorial(m)).product()
}

/// d_λ = k!/|S_λ|, the number of distinct permutations of the weight.
pub fn quantum_dim(weight: &[i64], k: usize) -> Result<BigInt> {
    if weight.len() != k {
        return Err(Error::RankMismatch { expected: k, got: weight.len() });
    }
    Ok(factorial(k) / stab_order(weight))
}

/// All partitions of m in ascending lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    partitions_bounded(m, usize::MAX, usize::MAX)
}

/// Partitions of m with at most `max_len` parts, each at most `max_part`,
/// in ascending lexicographic order.
pub fn partitions_bounded(m: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 1..=cap.min(rest) {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max_part.min(m), max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Distinct permutations of a sequence, in lexicographic order.
pub fn distinct_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Rank/level pair (n, k) shared by every alcove quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Context {
    pub n: usize,
    pub k: usize,
}

impl Context {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidContext { n, k });
        }
        Ok(Context { n, k })
    }

    /// Context of the level-rank dual Grassmannian Gr(n−k, n).
    pub fn dual(&self) -> Result<Self> {
        if self.k >= self.n {
            return Err(Error::RankExceedsLevel { n: self.n, k: self.k });
        }
        Context::new(self.n, self.n - self.k)
    }

    pub fn ensure_same(&self, other: &Context) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch(self.n, self.k, other.n, other.k));
        }
        Ok(())
    }

    pub fn rho(&self) -> Vec<usize> {
        (1..=self.k).rev().collect()
    }
}

/// An element of the alcove: k parts with n ≥ λ_1 ≥ ⋯ ≥ λ_k ≥ 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlcoveWeight {
    ctx: Context,
    parts: Vec<usize>,
}

impl AlcoveWeight {
    pub fn new(ctx: Context, parts: Vec<usize>) -> Result<Self> {
        let ok = parts.len() == ctx.k
            && parts.windows(2).all(|w| w[0] >= w[1])
            && parts.iter().all(|&p| (1..=ctx.n).contains(&p));
        if !ok {
            return Err(Error::NotInAlcove { parts, n: ctx.n, k: ctx.k });
        }
        Ok(AlcoveWeight { ctx, parts })
    }

    pub fn parse(ctx: Context, text: &str) -> Result<Self> {
        let p: Partition = text.parse()?;
        AlcoveWeight::new(ctx, p.padded(ctx.k))
    }

    /// The weight (n, …, n).
    pub fn top(ctx: Context) -> Self {
        AlcoveWeight { ctx, parts: vec![ctx.n; ctx.k] }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn as_partition(&self) -> Partition {
        Partition::from_vec_unchecked(self.parts.clone())
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn stab_order(&self) -> BigInt {
        stab_order(&self.weight())
    }

    pub fn quantum_dim(&self) -> BigInt {
        factorial(self.ctx.k) / self.stab_order()
    }

    /// λ* : swaps the multiplicities m_i and m_{n−i}, fixing m_n.
    pub fn star(&self) -> AlcoveWeight {
        let n = self.ctx.n;
        let mut parts: Vec<usize> = self.parts.iter().map(|&p| if p == n { n } else { n - p }).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        AlcoveWeight { ctx: self.ctx, parts }
    }

    /// λ∨ = (n+1−λ_k, …, n+1−λ_1).
    pub fn vee(&self) -> AlcoveWeight {
        let n = self.ctx.n;
        let parts = self.parts.iter().rev().map(|&p| n + 1 - p).collect();
        AlcoveWeight { ctx: self.ctx, parts }
    }

    /// Shifts every part by a modulo n into (0, n].
    pub fn rot(&self, a: i64) -> AlcoveWeight {
        let n = self.ctx.n as i64;
        let mut parts: Vec<usize> = self
            .parts
            .iter()
            .map(|&p| ((p as i64 + a - 1).rem_euclid(n) + 1) as usize)
            .collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        AlcoveWeight { ctx: self.ctx, parts }
    }
}

impl fmt::Display for AlcoveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for AlcoveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A partition inside the k × (n−k) box, indexing Schubert classes of Gr(k, n).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxedPartition {
    ctx: Context,
    part: Partition,
}

impl BoxedPartition {
    pub fn new(ctx: Context, part: Partition) -> Result<Self> {
        if ctx.k > ctx.n {
            return Err(Error::RankExceedsLevel { n: ctx.n, k: ctx.k });
        }
        let rest = ctx.n - ctx.k;
        if part.len() > ctx.k || part.part(0) > rest {
            return Err(Error::NotBoxed { parts: part.into_parts(), k: ctx.k, rest });
        }
        Ok(BoxedPartition { ctx, part })
    }

    pub fn parse(ctx: Context, text: &str) -> Result<Self> {
        BoxedPartition::new(ctx, text.parse()?)
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn partition(&self) -> &Partition {
        &self.part
    }

    pub fn size(&self) -> usize {
        self.part.size()
    }

    /// λ = λ̄ + ρ, a strict alcove weight.
    pub fn to_strict(&self) -> AlcoveWeight {
        let k = self.ctx.k;
        let parts = (0..k).map(|i| self.part.part(i) + k - i).collect();
        AlcoveWeight { ctx: self.ctx, parts }
    }

    pub fn from_strict(lambda: &AlcoveWeight) -> Result<Self> {
        if !lambda.is_strict() {
            return Err(Error::NotInAlcove { parts: lambda.parts.clone(), n: lambda.ctx.n, k: lambda.ctx.k });
        }
        let k = lambda.ctx.k;
        let parts = lambda.parts.iter().enumerate().map(|(i, &p)| p - (k - i)).collect();
        BoxedPartition::new(lambda.ctx, Partition::new(parts)?)
    }

    /// The conjugate partition, boxed for Gr(n−k, n).
    pub fn conjugate(&self) -> BoxedPartition {
        let ctx = Context { n: self.ctx.n, k: self.ctx.n - self.ctx.k };
        BoxedPartition { ctx, part: self.part.conjugate() }
    }

    /// Complement in the box: (n−k−λ̄_k, …, n−k−λ̄_1).
    pub fn vee(&self) -> BoxedPartition {
        let rest = self.ctx.n - self.ctx.k;
        let k = self.ctx.k;
        let parts = (0..k).rev().map(|i| rest - self.part.part(i)).collect();
        BoxedPartition { ctx: self.ctx, part: Partition::from_unsorted(parts) }
    }
}

impl fmt::Display for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.part.fmt(f)
    }
}

impl fmt::Debug for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.part)
    }
}

/// The alcove 𝒜⁺_k(n), ascending lexicographic.
pub fn enumerate_alcove(ctx: Context) -> Vec<AlcoveWeight> {
    fn rec(ctx: Context, cap: usize, cur: &mut Vec<usize>, strict: bool, out: &mut Vec<AlcoveWeight>) {
        if cur.len() == ctx.k {
            out.push(AlcoveWeight { ctx, parts: cur.clone() });
            return;
        }
        for p in 1..=cap {
            cur.push(p);
            rec(ctx, if strict { p - 1 } else { p }, cur, strict, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ctx, ctx.n, &mut Vec::new(), false, &mut out);
    out.sort();
    out
}

/// The strict alcove 𝒜⁺⁺_k(n), empty unless k ≤ n.
pub fn enumerate_strict(ctx: Context) -> Vec<AlcoveWeight> {
    enumerate_alcove(ctx).into_iter().filter(|w| w.is_strict()).collect()
}

/// The boxed partitions ℬ_k(n), ascending lexicographic.
pub fn enumerate_boxed(ctx: Context) -> Vec<BoxedPartition> {
    if ctx.k > ctx.n {
        return Vec::new();
    }
    let rest = ctx.n - ctx.k;
    let mut out: Vec<BoxedPartition> = (0..=ctx.k * rest)
        .flat_map(|m| partitions_bounded(m, ctx.k, rest))
        .map(|part| BoxedPartition { ctx, part })
        .collect();
    out.sort();
    out
}

/// Reduces a weight to the unique alcove point of its level-n orbit and the
/// degree d with nd = |ν| − |λ̌|.
pub fn reduce_to_alcove(nu: &[i64], ctx: Context) -> Result<(AlcoveWeight, i64)> {
    if nu.len() != ctx.k {
        return Err(Error::RankMismatch { expected: ctx.k, got: nu.len() });
    }
    let n = ctx.n as i64;
    let mut parts: Vec<usize> = nu.iter().map(|&v| ((v - 1).rem_euclid(n) + 1) as usize).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let total: i64 = nu.iter().sum();
    let reduced: i64 = parts.iter().map(|&p| p as i64).sum();
    Ok((AlcoveWeight { ctx, parts }, (total - reduced) / n))
}

/// Result of stripping all n-ribbons from a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCore {
    pub core: Partition,
    pub weight: usize,
    pub height_parity: usize,
}

/// n-core, n-weight and the parity of the summed ribbon heights, computed by
/// sliding beads on the n-runner abacus.
pub fn n_core(lambda: &Partition, n: usize) -> NCore {
    assert!(n >= 1, "n-core requires n >= 1");
    let len = lambda.len();
    let mut beads: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut occupied = vec![false; beads.first().map_or(0, |b| b + 1)];
    for &b in &beads {
        occupied[b] = true;
    }
    let mut weight = 0;
    let mut parity = 0;
    loop {
        let mut moved = false;
        for idx in 0..beads.len() {
            let b = beads[idx];
            if b >= n && !occupied[b - n] {
                let between = occupied[b - n + 1..b].iter().filter(|&&o| o).count();
                occupied[b] = false;
                occupied[b - n] = true;
                beads[idx] = b - n;
                weight += 1;
                parity ^= (between + 1) & 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let parts = beads.iter().enumerate().map(|(i, &b)| b + i + 1 - len).collect();
    NCore { core: Partition::from_unsorted(parts), weight, height_parity: parity }
}

/// Number of partitions with at most `max_len` parts, the given n-core and
/// n-weight, counted on the abacus with `max_len` beads.
pub fn count_with_core(core: &Partition, n: usize, weight: usize, max_len: usize) -> BigInt {
    if core.len() > max_len || n_core(core, n).weight != 0 {
        return BigInt::zero();
    }
    let mut per_runner = vec![0usize; n];
    for i in 0..max_len {
        let bead = core.part(i) + max_len - 1 - i;
        per_runner[bead % n] += 1;
    }
    // Each runner with c beads contributes partitions with at most c parts.
    let mut series = vec![BigInt::zero(); weight + 1];
    series[0] = BigInt::one();
    for &c in &per_runner {
        for part in 1..=c {
            for w in part..=weight {
                let add = series[w - part].clone();
                series[w] += add;
            }
        }
    }
    series[weight].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(Partition::empty().z_factor(), BigInt::from(1));
        assert_eq!(p(&[1, 1, 1]).z_factor(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z_factor(), BigInt::from(2));
    }

    #[test]
    fn quantum_dims() {
        assert_eq!(quantum_dim(&[3, 3], 2).unwrap(), BigInt::from(1));
        assert_eq!(quantum_dim(&[2, 1], 2).unwrap(), BigInt::from(2));
        assert_eq!(quantum_dim(&[2, 2, 1], 3).unwrap(), BigInt::from(3));
        assert!(quantum_dim(&[2, 1], 3).is_err());
    }

    #[test]
    fn standard_tableaux() {
        assert_eq!(Partition::empty().standard_tableaux_count(), BigInt::from(1));
        assert_eq!(p(&[2, 1]).standard_tableaux_count(), BigInt::from(2));
        assert_eq!(p(&[2, 2]).standard_tableaux_count(), BigInt::from(2));
        for m in 0..=7 {
            let total: BigInt = partitions_of(m).iter().map(|l| l.standard_tableaux_count().pow(2)).sum();
            assert_eq!(total, factorial(m));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,3,2".parse::<Partition>().unwrap(), p(&[4, 3, 2]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 3, 2]).to_string(), "4,3,2");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn alcove_involutions() {
        let ctx = Context::new(4, 3).unwrap();
        let l = AlcoveWeight::new(ctx, vec![4, 3, 2]).unwrap();
        assert_eq!(l.vee().parts(), &[3, 2, 1]);
        let m = AlcoveWeight::new(ctx, vec![2, 2, 1]).unwrap();
        assert_eq!(m.vee().parts(), &[4, 3, 3]);
        assert_eq!(l.rot(0), l);
        assert!(AlcoveWeight::new(ctx, vec![5, 1, 1]).is_err());
        assert!(AlcoveWeight::new(ctx, vec![1, 2, 1]).is_err());
        assert!(AlcoveWeight::new(ctx, vec![2, 1]).is_err());
        for w in enumerate_alcove(ctx) {
            assert_eq!(w.vee().vee(), w);
            assert_eq!(w.star().star(), w);
            assert_eq!(w.star().stab_order(), w.stab_order());
            assert_eq!(w.rot(1).rot(-1), w);
        }
    }

    #[test]
    fn enumeration_counts() {
        let ctx = Context::new(2, 2).unwrap();
        let a: Vec<Vec<usize>> = enumerate_alcove(ctx).iter().map(|w| w.parts().to_vec()).collect();
        assert_eq!(a, vec![vec![1, 1], vec![2, 1], vec![2, 2]]);
        let ctx = Context::new(2, 1).unwrap();
        assert_eq!(enumerate_alcove(ctx).len(), 2);
        for n in 1..=6 {
            for k in 1..=6 {
                let ctx = Context::new(n, k).unwrap();
                let nn = n as i64;
                let kk = k as i64;
                assert_eq!(BigInt::from(enumerate_alcove(ctx).len()), binomial(nn + kk - 1, kk));
                assert_eq!(BigInt::from(enumerate_strict(ctx).len()), binomial(nn, kk));
                assert_eq!(BigInt::from(enumerate_boxed(ctx).len()), binomial(nn, kk));
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let c21 = Context::new(2, 1).unwrap();
        let (l, d) = reduce_to_alcove(&[0], c21).unwrap();
        assert_eq!((l.parts().to_vec(), d), (vec![2], -1));
        let c22 = Context::new(2, 2).unwrap();
        let (l, d) = reduce_to_alcove(&[3, 0], c22).unwrap();
        assert_eq!((l.parts().to_vec(), d), (vec![2, 1], 0));
        let w = AlcoveWeight::new(c22, vec![2, 1]).unwrap();
        assert_eq!(reduce_to_alcove(&w.weight(), c22).unwrap(), (w, 0));
    }

    #[test]
    fn n_core_examples() {
        assert_eq!(n_core(&p(&[2, 1]), 5), NCore { core: p(&[2, 1]), weight: 0, height_parity: 0 });
        assert_eq!(n_core(&p(&[2, 1]), 2), NCore { core: p(&[2, 1]), weight: 0, height_parity: 0 });
        let r = n_core(&p(&[3, 1]), 2);
        assert_eq!((r.core, r.weight), (Partition::empty(), 2));
        // (3,1) → remove the domino {(1,3),(2,1)…}: heights 1 and 2 or 2 and 1.
        assert_eq!(r.height_parity, 1);
    }

    #[test]
    fn boxed_roundtrip() {
        let ctx = Context::new(5, 2).unwrap();
        for b in enumerate_boxed(ctx) {
            let s = b.to_strict();
            assert!(s.is_strict());
            assert_eq!(BoxedPartition::from_strict(&s).unwrap(), b);
            assert_eq!(b.vee().vee(), b);
            assert_eq!(b.conjugate().conjugate(), b);
        }
    }

    #[test]
    fn distinct_permutation_counts() {
        assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
        assert_eq!(distinct_permutations::<i64>(&[]).len(), 1);
        assert_eq!(distinct_permutations(&[3, 2, 1]).len(), 6);
    }
}
