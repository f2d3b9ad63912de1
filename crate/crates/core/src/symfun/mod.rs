//! The ring of symmetric functions in the bases p, m, h, e and s.
//!
//! Products, pairings and the Hopf structure are evaluated in the power sum
//! basis, where multiplication is concatenation and the Hall pairing is
//! diagonal. Changes of basis use per-degree transition tables.

pub mod flat;
pub mod schur;
pub(crate) mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::partitions::{binomial, Partition};
use crate::scalar::Scalar;

pub use flat::{
    act_phi_flat, adjacent_column_tableaux, adjacent_column_weight, f_coefficient, f_coefficients, psi_flat,
    psi_flat_oracle, skew_e, skew_e_by_f, skew_h, skew_h_by_f, theta_flat, theta_flat_oracle,
};
pub use schur::{
    kostka, lr_coefficient, mn_character, monomial_by_inverse_kostka, monomial_in_schur, schur_product, schur_straighten,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    P,
    M,
    H,
    E,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::M, Basis::H, Basis::E, Basis::S];

    pub fn symbol(&self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// A symmetric function as a sparse combination of basis elements.
#[derive(Clone, PartialEq)]
pub struct SymFunc<T: Scalar = BigRational> {
    basis: Basis,
    terms: BTreeMap<Partition, T>,
}

impl<T: Scalar> SymFunc<T> {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.terms.insert(lambda, T::one());
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, T)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, T> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, T> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> T {
        self.terms.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds c to the coefficient of λ, dropping the entry if it cancels.
    pub fn add_term(&mut self, lambda: Partition, c: T) {
        if c == T::zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum == T::zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Largest degree of a stored term.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|l| l.size());
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    /// The homogeneous component of degree d.
    pub fn component(&self, d: usize) -> Self {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x.clone() * c.clone())))
    }

    pub fn neg(&self) -> Self {
        SymFunc { basis: self.basis, terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Change of basis.
    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &T)>> = BTreeMap::new();
        for (l, c) in &self.terms {
            by_degree.entry(l.size()).or_default().push((l, c));
        }
        let mut out = Self::zero(target);
        for (deg, terms) in by_degree {
            let t = tables::tables(deg);
            if target == Basis::M {
                t.to_m(self.basis, &terms, &mut out);
            } else if self.basis == Basis::P {
                t.from_p(target, &terms, &mut out);
            } else {
                let mut p = Self::zero(Basis::P);
                t.to_p(self.basis, &terms, &mut p);
                let pterms: Vec<(&Partition, &T)> = p.terms.iter().collect();
                t.from_p(target, &pterms, &mut out);
            }
        }
        out
    }

    /// Product, returned in the basis of `self`.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.basis == Basis::S && other.basis == Basis::S {
            let mut out = Self::zero(Basis::S);
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    let prod: SymFunc<T> = schur_product(a, b, None);
                    for (l, c) in prod.terms {
                        out.add_term(l, c * x.clone() * y.clone());
                    }
                }
            }
            return out;
        }
        let multiplicative = matches!(self.basis, Basis::P | Basis::H | Basis::E);
        if multiplicative && other.basis == self.basis {
            let mut out = Self::zero(self.basis);
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    out.add_term(a.union(b), x.clone() * y.clone());
                }
            }
            return out;
        }
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        a.multiply(&b).convert(self.basis)
    }

    /// The Hall inner product, ⟨p_λ, p_μ⟩ = δ_{λμ} z_λ.
    pub fn hall_inner(&self, other: &Self) -> T {
        if self.basis == Basis::M && other.basis == Basis::H || self.basis == Basis::H && other.basis == Basis::M {
            return self.terms.iter().fold(T::zero(), |acc, (l, c)| acc + c.clone() * other.coeff(l));
        }
        if self.basis == Basis::S && other.basis == Basis::S {
            return self.terms.iter().fold(T::zero(), |acc, (l, c)| acc + c.clone() * other.coeff(l));
        }
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        a.terms.iter().fold(T::zero(), |acc, (l, c)| {
            let d = b.coeff(l);
            if d == T::zero() {
                acc
            } else {
                acc + c.clone() * d * T::from_bigint(&l.z_factor())
            }
        })
    }

    /// The antipode, γ(p_r) = −p_r.
    pub fn antipode(&self) -> Self {
        match self.basis {
            Basis::P => SymFunc {
                basis: Basis::P,
                terms: self
                    .terms
                    .iter()
                    .map(|(l, c)| (l.clone(), if l.len() % 2 == 0 { c.clone() } else { -c.clone() }))
                    .collect(),
            },
            Basis::H | Basis::E => {
                let target = if self.basis == Basis::H { Basis::E } else { Basis::H };
                let terms = self.terms.iter().map(|(l, c)| {
                    let c = if l.size() % 2 == 0 { c.clone() } else { -c.clone() };
                    (l.clone(), c)
                });
                SymFunc::from_terms(target, terms).convert(self.basis)
            }
            _ => self.convert(Basis::P).antipode().convert(self.basis),
        }
    }

    /// The involution ω(p_r) = (−1)^{r−1} p_r.
    pub fn omega(&self) -> Self {
        match self.basis {
            Basis::P => SymFunc {
                basis: Basis::P,
                terms: self.terms.iter().map(|(l, c)| (l.clone(), c.clone() * T::from_i64(l.sign()))).collect(),
            },
            Basis::H => SymFunc { basis: Basis::E, terms: self.terms.clone() }.convert(Basis::H),
            Basis::E => SymFunc { basis: Basis::H, terms: self.terms.clone() }.convert(Basis::E),
            Basis::S => {
                SymFunc { basis: Basis::S, terms: self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect() }
            }
            Basis::M => self.convert(Basis::P).omega().convert(Basis::M),
        }
    }

    /// The coproduct, an algebra morphism with power sums primitive.
    pub fn coproduct(&self) -> TensorSymFunc<T> {
        let mut out = TensorSymFunc::zero(self.basis, self.basis);
        match self.basis {
            Basis::P | Basis::M => {
                for (l, c) in &self.terms {
                    for (a, b, w) in multiset_splits(l) {
                        let w = if self.basis == Basis::P { w } else { BigInt::one() };
                        out.add_term(a, b, c.clone() * T::from_bigint(&w));
                    }
                }
            }
            Basis::H | Basis::E => {
                for (l, c) in &self.terms {
                    for (a, b) in part_splits(l) {
                        out.add_term(a, b, c.clone());
                    }
                }
            }
            Basis::S => {
                let p = self.convert(Basis::P).coproduct();
                return p.convert(Basis::S, Basis::S);
            }
        }
        out
    }

    /// Projection to k variables: drops m_λ with ℓ(λ) > k. Returns the m-basis.
    pub fn restrict_vars(&self, k: usize) -> Self {
        let m = self.convert(Basis::M);
        SymFunc { basis: Basis::M, terms: m.terms.into_iter().filter(|(l, _)| l.len() <= k).collect() }
    }
}

/// Splits of a multiset of parts into two sub-multisets, with the number of
/// labelled ways to realise each split.
fn multiset_splits(lambda: &Partition) -> Vec<(Partition, Partition, BigInt)> {
    let mults: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
    let mut out = Vec::new();
    fn rec(
        mults: &[(usize, usize)],
        left: &mut Vec<usize>,
        right: &mut Vec<usize>,
        w: BigInt,
        out: &mut Vec<(Partition, Partition, BigInt)>,
    ) {
        let Some(&(v, m)) = mults.first() else {
            out.push((Partition::from_unsorted(left.clone()), Partition::from_unsorted(right.clone()), w));
            return;
        };
        for j in 0..=m {
            let (ll, rl) = (left.len(), right.len());
            left.extend(std::iter::repeat_n(v, j));
            right.extend(std::iter::repeat_n(v, m - j));
            rec(&mults[1..], left, right, &w * binomial(m as i64, j as i64), out);
            left.truncate(ll);
            right.truncate(rl);
        }
    }
    rec(&mults, &mut Vec::new(), &mut Vec::new(), BigInt::one(), &mut out);
    out
}

/// Δh_λ = ∏ Σ_{a+b=λ_i} h_a ⊗ h_b, listed term by term.
fn part_splits(lambda: &Partition) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    fn rec(parts: &[usize], left: &mut Vec<usize>, right: &mut Vec<usize>, out: &mut Vec<(Partition, Partition)>) {
        let Some(&p) = parts.first() else {
            out.push((Partition::from_unsorted(left.clone()), Partition::from_unsorted(right.clone())));
            return;
        };
        for a in 0..=p {
            left.push(a);
            right.push(p - a);
            rec(&parts[1..], left, right, out);
            left.pop();
            right.pop();
        }
    }
    rec(lambda.parts(), &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

impl<T: Scalar + fmt::Display> fmt::Display for SymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> =
            self.terms.iter().map(|(l, c)| format!("{c}*{}[{}]", self.basis, l)).collect();
        f.write_str(&text.join(" + "))
    }
}

impl<T: Scalar> fmt::Debug for SymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.basis)?;
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}: {c:?}")?;
        }
        f.write_str("}")
    }
}

fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn int_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl SymFunc<BigRational> {
    /// {"basis":"m","terms":[{"partition":[2,1],"num":…,"den":…}]}
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| json!({"partition": l.parts(), "num": int_json(c.numer()), "den": int_json(c.denom())}))
            .collect();
        json!({"basis": self.basis.symbol(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let bad = || Error::Parse(v.to_string());
        let basis: Basis = v.get("basis").and_then(Value::as_str).ok_or_else(bad)?.parse()?;
        let mut out = SymFunc::zero(basis);
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
            let parts: Vec<usize> = serde_json::from_value(t.get("partition").cloned().ok_or_else(bad)?)
                .map_err(|_| bad())?;
            let num = t.get("num").and_then(int_from_json).ok_or_else(bad)?;
            let den = t.get("den").and_then(int_from_json).ok_or_else(bad)?;
            if den.is_zero() {
                return Err(bad());
            }
            out.add_term(Partition::new(parts)?, BigRational::new(num, den));
        }
        Ok(out)
    }

    /// The coefficients as integers, when they all are.
    pub fn integer_terms(&self) -> Option<BTreeMap<Partition, BigInt>> {
        self.terms.iter().map(|(l, c)| c.is_integer().then(|| (l.clone(), c.to_integer()))).collect()
    }
}

/// An element of Λ ⊗ Λ with a basis tag per tensor factor.
#[derive(Clone, PartialEq)]
pub struct TensorSymFunc<T: Scalar = BigRational> {
    left: Basis,
    right: Basis,
    terms: BTreeMap<(Partition, Partition), T>,
}

impl<T: Scalar> TensorSymFunc<T> {
    pub fn zero(left: Basis, right: Basis) -> Self {
        TensorSymFunc { left, right, terms: BTreeMap::new() }
    }

    /// f ⊗ g.
    pub fn tensor(f: &SymFunc<T>, g: &SymFunc<T>) -> Self {
        let mut out = Self::zero(f.basis, g.basis);
        for (a, x) in &f.terms {
            for (b, y) in &g.terms {
                out.add_term(a.clone(), b.clone(), x.clone() * y.clone());
            }
        }
        out
    }

    pub fn bases(&self) -> (Basis, Basis) {
        (self.left, self.right)
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), T> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Partition, b: Partition, c: T) {
        if c == T::zero() {
            return;
        }
        let key = (a, b);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if sum != T::zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.convert(self.left, self.right);
        let mut out = self.clone();
        for ((a, b), c) in other.terms {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut neg = other.clone();
        for c in neg.terms.values_mut() {
            *c = -c.clone();
        }
        self.add(&neg)
    }

    /// Keeps the terms whose two factors both have degree at most `bound`.
    pub fn truncate(&self, bound: usize) -> Self {
        TensorSymFunc {
            left: self.left,
            right: self.right,
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a.size() <= bound && b.size() <= bound)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Factorwise change of basis.
    pub fn convert(&self, left: Basis, right: Basis) -> Self {
        if left == self.left && right == self.right {
            return self.clone();
        }
        let mut by_right: BTreeMap<Partition, SymFunc<T>> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            by_right.entry(b.clone()).or_insert_with(|| SymFunc::zero(self.left)).add_term(a.clone(), c.clone());
        }
        let mut stage: BTreeMap<Partition, SymFunc<T>> = BTreeMap::new();
        for (b, f) in by_right {
            for (a, c) in f.convert(left).terms {
                stage.entry(a).or_insert_with(|| SymFunc::zero(self.right)).add_term(b.clone(), c);
            }
        }
        let mut out = Self::zero(left, right);
        for (a, g) in stage {
            for (b, c) in g.convert(right).terms {
                out.add_term(a.clone(), b, c);
            }
        }
        out
    }

    /// Applies Δ to the left factor, giving an element of Λ⊗Λ⊗Λ as nested terms.
    pub fn coproduct_left(&self) -> BTreeMap<(Partition, Partition, Partition), T> {
        let mut out: BTreeMap<(Partition, Partition, Partition), T> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let d: TensorSymFunc<T> = SymFunc::basis_element(self.left, a.clone()).coproduct();
            for ((x, y), w) in d.terms {
                let key = (x, y, b.clone());
                let v = out.remove(&key).unwrap_or_else(T::zero) + w * c.clone();
                if v != T::zero() {
                    out.insert(key, v);
                }
            }
        }
        out
    }

    /// Applies Δ to the right factor.
    pub fn coproduct_right(&self) -> BTreeMap<(Partition, Partition, Partition), T> {
        let mut out: BTreeMap<(Partition, Partition, Partition), T> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let d: TensorSymFunc<T> = SymFunc::basis_element(self.right, b.clone()).coproduct();
            for ((x, y), w) in d.terms {
                let key = (a.clone(), x, y);
                let v = out.remove(&key).unwrap_or_else(T::zero) + w * c.clone();
                if v != T::zero() {
                    out.insert(key, v);
                }
            }
        }
        out
    }

    /// ⟨self, f ⊗ g⟩ with the Hall pairing in each factor.
    pub fn pair(&self, f: &SymFunc<T>, g: &SymFunc<T>) -> T {
        let t = self.convert(Basis::P, Basis::P);
        let fp = f.convert(Basis::P);
        let gp = g.convert(Basis::P);
        t.terms.iter().fold(T::zero(), |acc, ((a, b), c)| {
            let x = fp.coeff(a);
            let y = gp.coeff(b);
            if x == T::zero() || y == T::zero() {
                acc
            } else {
                acc + c.clone() * x * y * T::from_bigint(&(a.z_factor() * b.z_factor()))
            }
        })
    }
}

impl<T: Scalar> fmt::Debug for TensorSymFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}{{", self.left, self.right)?;
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}|{b}: {c:?}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests;
