//! Per-degree transition data between the five bases, built on demand and
//! shared across threads.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::{Lazy, OnceCell};
use parking_lot::RwLock;

use crate::partitions::{partitions_of, Partition};
use crate::scalar::Scalar;
use crate::symfun::flat::{pieri_e, pieri_h, pieri_p};
use crate::symfun::schur::{kostka, mn_character};
use crate::symfun::{Basis, SymFunc};

type SparseRow<C> = Vec<(usize, C)>;

pub(crate) struct DegreeTables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    z: Vec<BigInt>,
    sign: Vec<i64>,
    p_to_m: OnceCell<Vec<SparseRow<BigInt>>>,
    p_to_m_cols: OnceCell<Vec<SparseRow<BigInt>>>,
    h_to_m: OnceCell<Vec<SparseRow<BigInt>>>,
    e_to_m: OnceCell<Vec<SparseRow<BigInt>>>,
    s_to_m: OnceCell<Vec<SparseRow<BigInt>>>,
    m_to_p: OnceCell<Vec<SparseRow<BigRational>>>,
    chi: OnceCell<Vec<Vec<BigInt>>>,
}

static CACHE: Lazy<RwLock<HashMap<usize, Arc<DegreeTables>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

pub(crate) fn tables(deg: usize) -> Arc<DegreeTables> {
    if let Some(t) = CACHE.read().get(&deg) {
        return t.clone();
    }
    let t = Arc::new(DegreeTables::new(deg));
    CACHE.write().entry(deg).or_insert(t).clone()
}

fn iterated(lambda: &Partition, step: fn(&Partition, usize) -> Vec<(Partition, BigInt)>) -> BTreeMap<Partition, BigInt> {
    let mut cur = BTreeMap::new();
    cur.insert(Partition::empty(), BigInt::one());
    for &r in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (kappa, c) in &cur {
            for (rho, w) in step(kappa, r) {
                *next.entry(rho).or_insert_with(BigInt::zero) += c * w;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur
}

impl DegreeTables {
    fn new(deg: usize) -> Self {
        let parts = partitions_of(deg);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let z = parts.iter().map(Partition::z_factor).collect();
        let sign = parts.iter().map(Partition::sign).collect();
        DegreeTables {
            parts,
            index,
            z,
            sign,
            p_to_m: OnceCell::new(),
            p_to_m_cols: OnceCell::new(),
            h_to_m: OnceCell::new(),
            e_to_m: OnceCell::new(),
            s_to_m: OnceCell::new(),
            m_to_p: OnceCell::new(),
            chi: OnceCell::new(),
        }
    }

    fn idx(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    fn rows_by(&self, step: fn(&Partition, usize) -> Vec<(Partition, BigInt)>) -> Vec<SparseRow<BigInt>> {
        self.parts
            .iter()
            .map(|l| iterated(l, step).into_iter().map(|(p, c)| (self.idx(&p), c)).collect())
            .collect()
    }

    fn p_to_m(&self) -> &[SparseRow<BigInt>] {
        self.p_to_m.get_or_init(|| self.rows_by(pieri_p))
    }

    /// Column access to the p → m matrix: for each λ the pairs (ν, ⟨p_ν, h_λ⟩).
    fn p_to_m_cols(&self) -> &[SparseRow<BigInt>] {
        self.p_to_m_cols.get_or_init(|| {
            let mut cols = vec![Vec::new(); self.parts.len()];
            for (nu, row) in self.p_to_m().iter().enumerate() {
                for (lam, c) in row {
                    cols[*lam].push((nu, c.clone()));
                }
            }
            cols
        })
    }

    fn h_to_m(&self) -> &[SparseRow<BigInt>] {
        self.h_to_m.get_or_init(|| self.rows_by(pieri_h))
    }

    fn e_to_m(&self) -> &[SparseRow<BigInt>] {
        self.e_to_m.get_or_init(|| self.rows_by(pieri_e))
    }

    fn s_to_m(&self) -> &[SparseRow<BigInt>] {
        self.s_to_m.get_or_init(|| {
            self.parts
                .iter()
                .map(|l| {
                    self.parts
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| *m <= l)
                        .map(|(j, m)| (j, kostka(l, m)))
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect()
        })
    }

    /// m_λ in the power sums, solving the triangular system p → m from the
    /// lexicographically largest partition down.
    fn m_to_p(&self) -> &[SparseRow<BigRational>] {
        self.m_to_p.get_or_init(|| {
            let r = self.p_to_m();
            let n = self.parts.len();
            let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); n];
            for lam in (0..n).rev() {
                let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                acc.insert(lam, BigRational::one());
                let mut diag = BigRational::zero();
                for (mu, c) in &r[lam] {
                    if *mu == lam {
                        diag = BigRational::from_integer(c.clone());
                        continue;
                    }
                    let c = BigRational::from_integer(c.clone());
                    for (nu, d) in &rows[*mu] {
                        *acc.entry(*nu).or_insert_with(BigRational::zero) -= &c * d;
                    }
                }
                rows[lam] = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c / &diag)).collect();
            }
            rows.into_iter().map(|row| row.into_iter().collect()).collect()
        })
    }

    /// χ^λ(ν) for all pairs, indexed [λ][ν].
    fn chi(&self) -> &[Vec<BigInt>] {
        self.chi.get_or_init(|| {
            self.parts.iter().map(|l| self.parts.iter().map(|nu| mn_character(l, nu)).collect()).collect()
        })
    }

    /// Adds the monomial expansion of Σ c_λ b_λ to `out`.
    pub(crate) fn to_m<T: Scalar>(&self, source: Basis, terms: &[(&Partition, &T)], out: &mut SymFunc<T>) {
        let rows = match source {
            Basis::M => {
                for (l, c) in terms {
                    out.add_term((*l).clone(), (*c).clone());
                }
                return;
            }
            Basis::P => self.p_to_m(),
            Basis::H => self.h_to_m(),
            Basis::E => self.e_to_m(),
            Basis::S => self.s_to_m(),
        };
        for (l, c) in terms {
            for (j, w) in &rows[self.idx(l)] {
                out.add_term(self.parts[*j].clone(), (*c).clone() * T::from_bigint(w));
            }
        }
    }

    /// Adds the power sum expansion of Σ c_λ b_λ to `out`.
    pub(crate) fn to_p<T: Scalar>(&self, source: Basis, terms: &[(&Partition, &T)], out: &mut SymFunc<T>) {
        match source {
            Basis::P => {
                for (l, c) in terms {
                    out.add_term((*l).clone(), (*c).clone());
                }
            }
            Basis::M => {
                let rows = self.m_to_p();
                for (l, c) in terms {
                    for (j, w) in &rows[self.idx(l)] {
                        out.add_term(self.parts[*j].clone(), (*c).clone() * T::from_ratio(w));
                    }
                }
            }
            Basis::H | Basis::E => {
                let cols = self.p_to_m_cols();
                for (l, c) in terms {
                    for (nu, w) in &cols[self.idx(l)] {
                        let mut w = BigRational::new(w.clone(), self.z[*nu].clone());
                        if source == Basis::E && self.sign[*nu] < 0 {
                            w = -w;
                        }
                        out.add_term(self.parts[*nu].clone(), (*c).clone() * T::from_ratio(&w));
                    }
                }
            }
            Basis::S => {
                let chi = self.chi();
                for (l, c) in terms {
                    for (nu, x) in chi[self.idx(l)].iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let w = BigRational::new(x.clone(), self.z[nu].clone());
                        out.add_term(self.parts[nu].clone(), (*c).clone() * T::from_ratio(&w));
                    }
                }
            }
        }
    }

    /// Adds the expansion in `target` of a power sum combination to `out`.
    pub(crate) fn from_p<T: Scalar>(&self, target: Basis, terms: &[(&Partition, &T)], out: &mut SymFunc<T>) {
        match target {
            Basis::P => self.to_p(Basis::P, terms, out),
            Basis::M => self.to_m(Basis::P, terms, out),
            Basis::H | Basis::E => {
                let coeffs: HashMap<usize, &T> = terms.iter().map(|(l, c)| (self.idx(l), *c)).collect();
                for (lam, row) in self.m_to_p().iter().enumerate() {
                    let mut acc = T::zero();
                    for (nu, w) in row {
                        if let Some(c) = coeffs.get(nu) {
                            let mut w = w * BigRational::from_integer(self.z[*nu].clone());
                            if target == Basis::E && self.sign[*nu] < 0 {
                                w = -w;
                            }
                            acc = acc + (*c).clone() * T::from_ratio(&w);
                        }
                    }
                    out.add_term(self.parts[lam].clone(), acc);
                }
            }
            Basis::S => {
                let chi = self.chi();
                for (lam, row) in chi.iter().enumerate() {
                    let mut acc = T::zero();
                    for (l, c) in terms {
                        let x = &row[self.idx(l)];
                        if !x.is_zero() {
                            acc = acc + (*c).clone() * T::from_bigint(x);
                        }
                    }
                    out.add_term(self.parts[lam].clone(), acc);
                }
            }
        }
    }
}
