//! Exact arithmetic in the cyclotomic field Q(ζₙ), with elements stored as
//! residues modulo the n-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::partitions::distinct_permutations;
use crate::report::Report;
use crate::scalar::Scalar;

static CYCLOTOMIC: Lazy<RwLock<HashMap<usize, Arc<Vec<BigInt>>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Coefficients of Φₙ, lowest degree first.
pub fn cyclotomic_poly(n: usize) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if let Some(p) = CYCLOTOMIC.read().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    let poly = Arc::new(num);
    CYCLOTOMIC.write().insert(n, poly.clone());
    poly
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone() / &den[dn];
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Euler's totient, the degree of Φₙ.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&i| i.gcd(&n) == 1).count()
}

/// An element of Q(ζₙ) as a coefficient vector of length φ(n).
#[derive(Clone, PartialEq)]
pub struct CycloNum<T: Scalar> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> CycloNum<T> {
    pub fn zero(order: usize) -> Self {
        CycloNum { order, coeffs: vec![T::zero(); totient(order)] }
    }

    pub fn one(order: usize) -> Self {
        Self::from_scalar(order, T::one())
    }

    pub fn from_scalar(order: usize, c: T) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c;
        z
    }

    /// ζₙ^e.
    pub fn zeta_pow(order: usize, e: i64) -> Self {
        let mut counts = vec![0i64; order];
        counts[e.rem_euclid(order as i64) as usize] = 1;
        Self::from_power_counts(order, &counts)
    }

    /// Σ_e counts[e] ζ^e for exponents 0..order.
    pub fn from_power_counts(order: usize, counts: &[i64]) -> Self {
        let poly: Vec<T> = counts.iter().map(|&c| T::from_i64(c)).collect();
        Self::reduce(order, poly)
    }

    fn reduce(order: usize, mut poly: Vec<T>) -> Self {
        let phi = cyclotomic_poly(order);
        let deg = phi.len() - 1;
        let phi_t: Vec<T> = phi.iter().map(T::from_bigint).collect();
        for i in (deg..poly.len()).rev() {
            let c = poly[i].clone();
            if c == T::zero() {
                continue;
            }
            for j in 0..=deg {
                let t = poly[i - deg + j].clone() - c.clone() * phi_t[j].clone();
                poly[i - deg + j] = t;
            }
        }
        poly.resize(deg, T::zero());
        CycloNum { order, coeffs: poly }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == T::zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.order)
    }

    pub fn scale(&self, c: &T) -> Self {
        CycloNum { order: self.order, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixing cyclotomic fields of different orders");
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        CycloNum { order: self.order, coeffs }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        CycloNum { order: self.order, coeffs }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check(other);
        let len = self.coeffs.len();
        let mut prod = vec![T::zero(); 2 * len - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == T::zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = prod[i + j].clone() + a.clone() * b.clone();
                prod[i + j] = t;
            }
        }
        Self::reduce(self.order, prod)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φₙ.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.order));
        }
        let phi: Vec<T> = cyclotomic_poly(self.order).iter().map(T::from_bigint).collect();
        // Invariant: s·self ≡ r (mod Φₙ).
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<T>::new(), vec![T::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r1.is_empty() {
            return Err(Error::DivisionByZero(self.order));
        }
        let c = r1[0].clone();
        let s: Vec<T> = s1.into_iter().map(|x| x / c.clone()).collect();
        Ok(Self::reduce(self.order, s))
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut poly = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (n - i) % n;
            poly[e] = poly[e].clone() + c.clone();
        }
        Self::reduce(n, poly)
    }

    /// Re-expresses the element inside Q(ζ_m) for a multiple m of the order.
    pub fn lift(&self, m: usize) -> Self {
        assert!(m % self.order == 0, "lift target must be a multiple of the order");
        let step = m / self.order;
        let mut poly = vec![T::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Self::reduce(m, poly)
    }
}

impl CycloNum<BigRational> {
    /// A random element with small integer-over-small-denominator coefficients.
    pub fn random(order: usize, rng: &mut impl Rng) -> Self {
        let coeffs = (0..totient(order))
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(-5i64..=5)), BigInt::from(rng.gen_range(1i64..=4))))
            .collect();
        CycloNum { order, coeffs }
    }

    /// The value as an integer, failing when it is not a rational integer.
    pub fn to_integer(&self) -> Result<BigInt> {
        let rational = self.coeffs.iter().skip(1).all(|c| c.is_zero());
        let c0 = &self.coeffs[0];
        if rational && c0.denom().is_one() {
            Ok(c0.numer().clone())
        } else {
            Err(Error::NotInteger(self.to_string()))
        }
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

fn trim<T: Scalar>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(|c| *c == T::zero()) {
        p.pop();
    }
    p
}

fn poly_mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

fn poly_sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(T::zero);
            let y = b.get(i).cloned().unwrap_or_else(T::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn poly_divmod<T: Scalar>(num: &[T], den: &[T]) -> (Vec<T>, Vec<T>) {
    let mut rem = trim(num.to_vec());
    let den = trim(den.to_vec());
    let dl = den.len();
    if rem.len() < dl {
        return (Vec::new(), rem);
    }
    let lead = den[dl - 1].clone();
    let mut quot = vec![T::zero(); rem.len() - dl + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1].clone() / lead.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] = rem[i + j].clone() - c.clone() * dj.clone();
        }
        quot[i] = c;
    }
    rem.truncate(dl - 1);
    (trim(quot), trim(rem))
}

impl<T: Scalar> Add for CycloNum<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<T: Scalar> Sub for CycloNum<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<T: Scalar> Mul for CycloNum<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<T: Scalar> Neg for CycloNum<T> {
    type Output = Self;
    fn neg(self) -> Self {
        CycloNum { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a, T: Scalar> Add<&'a CycloNum<T>> for &'a CycloNum<T> {
    type Output = CycloNum<T>;
    fn add(self, rhs: Self) -> CycloNum<T> {
        self.add_ref(rhs)
    }
}

impl<'a, T: Scalar> Sub<&'a CycloNum<T>> for &'a CycloNum<T> {
    type Output = CycloNum<T>;
    fn sub(self, rhs: Self) -> CycloNum<T> {
        self.sub_ref(rhs)
    }
}

impl<'a, T: Scalar> Mul<&'a CycloNum<T>> for &'a CycloNum<T> {
    type Output = CycloNum<T>;
    fn mul(self, rhs: Self) -> CycloNum<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for CycloNum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == T::zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl<T: Scalar> fmt::Debug for CycloNum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[", self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c:?}")?;
        }
        f.write_str("]")
    }
}

/// Residue counts of Σ_{μ∼λ} ζ^{(p,μ)}, with λ padded by zeros to the length of p.
pub fn msym_power_counts(lambda: &[usize], p: &[i64], n: usize) -> Vec<i64> {
    let mut padded: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
    padded.resize(p.len(), 0);
    let mut counts = vec![0i64; n];
    if lambda.len() > p.len() {
        return counts;
    }
    for mu in distinct_permutations(&padded) {
        let e: i64 = mu.iter().zip(p).map(|(a, b)| a * b).sum();
        counts[e.rem_euclid(n as i64) as usize] += 1;
    }
    counts
}

/// m_λ(ζ^{p_1}, …, ζ^{p_k}).
pub fn eval_msym<T: Scalar>(lambda: &[usize], p: &[i64], n: usize) -> CycloNum<T> {
    CycloNum::from_power_counts(n, &msym_power_counts(lambda, p, n))
}

/// Permutations of 0..k with their signs.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let ids: Vec<usize> = (0..k).collect();
    distinct_permutations(&ids)
        .into_iter()
        .map(|perm| {
            let mut inversions = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            (perm, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// The alternant a_λ(ζ^σ) = det(ζ^{σ_j λ_i}) by Leibniz expansion.
pub fn eval_alternant<T: Scalar>(lambda: &[i64], sigma: &[i64], n: usize) -> CycloNum<T> {
    assert_eq!(lambda.len(), sigma.len(), "alternant needs square data");
    let mut counts = vec![0i64; n];
    for (perm, sign) in signed_permutations(lambda.len()) {
        let e: i64 = perm.iter().enumerate().map(|(i, &j)| lambda[i] * sigma[j]).sum();
        counts[e.rem_euclid(n as i64) as usize] += sign;
    }
    CycloNum::from_power_counts(n, &counts)
}

/// Field axioms of Q(ζₙ) for every n ≤ `max_order` on `samples` random
/// triples: ring laws, inverses, conjugation as an involutive automorphism
/// and ζⁿ = 1 with ζᵉ ≠ 1 for 0 < e < n.
pub fn field_axiom_report(max_order: usize, samples: usize, seed: u64) -> Report {
    type Q = CycloNum<BigRational>;
    let mut r = Report::new(format!("cyclotomic field axioms n<={max_order}"));
    let mut rng = StdRng::seed_from_u64(seed);
    for n in 1..=max_order {
        let (zero, one) = (Q::zero(n), Q::one(n));
        let zeta = Q::zeta_pow(n, 1);
        r.check(zeta.pow(n as u32).is_one(), || format!("zeta^{n} != 1"));
        for e in 1..n {
            r.check(!zeta.pow(e as u32).is_one(), || format!("zeta_{n} has order dividing {e}"));
        }
        for _ in 0..samples {
            let (a, b, c) = (Q::random(n, &mut rng), Q::random(n, &mut rng), Q::random(n, &mut rng));
            r.check(a.add_ref(&b) == b.add_ref(&a), || format!("addition not commutative in Q(zeta_{n})"));
            r.check(a.mul_ref(&b) == b.mul_ref(&a), || format!("multiplication not commutative in Q(zeta_{n})"));
            r.check(
                a.add_ref(&b).add_ref(&c) == a.add_ref(&b.add_ref(&c)),
                || format!("addition not associative in Q(zeta_{n})"),
            );
            r.check(
                a.mul_ref(&b).mul_ref(&c) == a.mul_ref(&b.mul_ref(&c)),
                || format!("multiplication not associative in Q(zeta_{n})"),
            );
            r.check(
                a.mul_ref(&b.add_ref(&c)) == a.mul_ref(&b).add_ref(&a.mul_ref(&c)),
                || format!("distributivity fails in Q(zeta_{n})"),
            );
            r.check(a.add_ref(&zero) == a && a.mul_ref(&one) == a, || format!("identities fail in Q(zeta_{n})"));
            r.check(a.sub_ref(&a).is_zero(), || format!("a - a != 0 in Q(zeta_{n})"));
            if !a.is_zero() {
                let ok = a.inv().map(|i| i.mul_ref(&a).is_one()).unwrap_or(false);
                r.check(ok, || format!("inverse of {a} fails in Q(zeta_{n})"));
            }
            r.check(a.conj().conj() == a, || format!("conjugation not an involution in Q(zeta_{n})"));
            r.check(
                a.mul_ref(&b).conj() == a.conj().mul_ref(&b.conj()),
                || format!("conjugation not multiplicative in Q(zeta_{n})"),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    type Q = CycloNum<BigRational>;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn basic_identities() {
        let i2 = Q::zeta_pow(4, 2);
        assert_eq!(i2, Q::from_scalar(4, rational(-1, 1)));
        assert_eq!((i2 + Q::one(4)).to_integer().unwrap(), BigInt::zero());
        let s = Q::one(3) + Q::zeta_pow(3, 1) + Q::zeta_pow(3, 2);
        assert!(s.is_zero());
        assert!(Q::zeta_pow(3, 1).to_integer().is_err());
        assert_eq!(Q::zero(5).to_integer().unwrap(), BigInt::zero());
        assert!(Q::zero(5).inv().is_err());
    }

    #[test]
    fn inverse_and_conjugate() {
        for n in 1..=12 {
            for e in 0..n as i64 {
                let z = Q::zeta_pow(n, e);
                assert!(z.mul_ref(&z.conj()).is_one());
                let a = z.add_ref(&Q::from_scalar(n, rational(3, 2)));
                assert!(a.mul_ref(&a.inv().unwrap()).is_one(), "n={n} e={e}");
            }
        }
    }

    #[test]
    fn lifting_preserves_values() {
        let z = Q::zeta_pow(3, 1);
        let lifted = z.lift(12);
        assert_eq!(lifted, Q::zeta_pow(12, 4));
    }

    #[test]
    fn msym_examples() {
        let n = 2;
        assert_eq!(eval_msym::<BigRational>(&[1], &[1], n), Q::from_scalar(2, rational(-1, 1)));
        let ones = [4i64, 4, 4];
        let v: Q = eval_msym(&[2, 1], &ones, 4);
        assert_eq!(v.to_integer().unwrap(), BigInt::from(6));
        let v: Q = eval_msym(&[4, 4, 4], &[1, 2, 3], 4);
        assert!(v.is_one());
    }

    #[test]
    fn alternant_examples() {
        let a: Q = eval_alternant(&[3], &[2], 5);
        assert_eq!(a, Q::zeta_pow(5, 6));
        let z: Q = eval_alternant(&[2, 2], &[1, 3], 5);
        assert!(z.is_zero());
    }
}
