//! Weighted sums over CRPPs by dynamic programming over loop-to-loop
//! transitions. Each part of the weight advances a distribution over states
//! (loop, offset used so far); transition tables are cached per part size.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::{Mutex, RwLock};

use crate::affine::is_valid_shape;
use crate::cylindric::crpp::CrppKind;
use crate::cylindric::strips::{chi_cyl, is_shifted_horizontal_strip, is_vertical_strip, phi_cyl, psi_cyl, theta_cyl};
use crate::partitions::{AlcoveWeight, Context, Partition};

/// The statistic attached to each level of a filling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    /// θ on general fillings.
    Theta,
    /// ψ on row strict fillings.
    Psi,
    /// φ on adjacent column fillings.
    Phi,
    /// (−1)^{ht−1} on ribbon fillings of the shifted cylinder.
    Chi,
    /// Counts column strict fillings of the shifted cylinder.
    Kostka,
    /// Counts row strict fillings of the shifted cylinder.
    KostkaRow,
}

impl Statistic {
    pub fn kind(self) -> CrppKind {
        match self {
            Statistic::Theta => CrppKind::General,
            Statistic::Psi | Statistic::KostkaRow => CrppKind::RowStrict,
            Statistic::Phi => CrppKind::AdjacentColumn,
            Statistic::Chi => CrppKind::Ribbon,
            Statistic::Kostka => CrppKind::ColumnStrict,
        }
    }

    fn uses_strict_loops(self) -> bool {
        matches!(self, Statistic::Chi | Statistic::Kostka | Statistic::KostkaRow)
    }

    /// The statistic of a single level λ/e/μ, zero when inadmissible.
    pub fn step(self, outer: &AlcoveWeight, e: i64, inner: &AlcoveWeight) -> BigInt {
        let indicator = |ok: bool| if ok { BigInt::one() } else { BigInt::zero() };
        match self {
            Statistic::Theta => theta_cyl(outer, e, inner),
            Statistic::Psi => psi_cyl(outer, e, inner),
            Statistic::Phi => phi_cyl(outer, e, inner),
            Statistic::Chi => chi_cyl(outer, e, inner),
            Statistic::Kostka => indicator(is_shifted_horizontal_strip(outer, e, inner)),
            Statistic::KostkaRow => indicator(is_vertical_strip(outer, e, inner)),
        }
    }
}

type StepTable = Vec<Vec<(usize, i64, BigInt)>>;

/// Transition tables of one statistic in one context.
pub struct Engine {
    ctx: Context,
    stat: Statistic,
    loops: Vec<AlcoveWeight>,
    index: HashMap<AlcoveWeight, usize>,
    tables: RwLock<HashMap<usize, Arc<StepTable>>>,
}

static ENGINES: Lazy<Mutex<HashMap<(Context, Statistic), Arc<Engine>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The shared engine for a context and statistic.
pub fn engine(ctx: Context, stat: Statistic) -> Arc<Engine> {
    ENGINES.lock().entry((ctx, stat)).or_insert_with(|| Arc::new(Engine::new(ctx, stat))).clone()
}

type States = HashMap<(usize, i64), BigInt>;

impl Engine {
    fn new(ctx: Context, stat: Statistic) -> Self {
        let loops = if stat.uses_strict_loops() {
            crate::partitions::enumerate_strict(ctx)
        } else {
            crate::partitions::enumerate_alcove(ctx)
        };
        let index = loops.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Engine { ctx, stat, loops, index, tables: RwLock::new(HashMap::new()) }
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn loops(&self) -> &[AlcoveWeight] {
        &self.loops
    }

    /// For every loop κ, the loops κ′ reachable by one level of r cells with
    /// the offset e′ = (|κ| + r − |κ′|)/n and the statistic of κ′/e′/κ.
    fn table(&self, r: usize) -> Arc<StepTable> {
        if let Some(t) = self.tables.read().get(&r) {
            return t.clone();
        }
        let n = self.ctx.n as i64;
        let table: StepTable = self
            .loops
            .iter()
            .map(|kappa| {
                let mut row = Vec::new();
                for (j, next) in self.loops.iter().enumerate() {
                    let excess = kappa.size() as i64 + r as i64 - next.size() as i64;
                    if excess < 0 || excess % n != 0 {
                        continue;
                    }
                    let e = excess / n;
                    let w = self.stat.step(next, e, kappa);
                    if !w.is_zero() {
                        row.push((j, e, w));
                    }
                }
                row
            })
            .collect();
        let table = Arc::new(table);
        self.tables.write().insert(r, table.clone());
        table
    }

    fn position(&self, w: &AlcoveWeight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Loops that can still sit below λ[d] after using offset e.
    fn reachable(&self, outer: &AlcoveWeight, d: i64) -> Vec<Vec<bool>> {
        self.loops.iter().map(|w| (0..=d).map(|e| is_valid_shape(outer, d - e, w)).collect()).collect()
    }

    fn advance(&self, states: &States, r: usize, d: i64, reach: &[Vec<bool>]) -> States {
        let table = self.table(r);
        let mut next: States = HashMap::new();
        for (&(i, used), c) in states {
            for (j, e, w) in &table[i] {
                let total = used + e;
                if total > d || !reach[*j][total as usize] {
                    continue;
                }
                *next.entry((*j, total)).or_insert_with(BigInt::zero) += c * w;
            }
        }
        next.retain(|_, c| !c.is_zero());
        next
    }

    /// The weighted sum of the statistic over fillings of λ/d/μ with level
    /// sizes ν, taken in the given order.
    pub fn weight(&self, outer: &AlcoveWeight, d: i64, inner: &AlcoveWeight, nu: &[usize]) -> BigInt {
        let (Some(start), Some(end)) = (self.position(inner), self.position(outer)) else {
            return BigInt::zero();
        };
        if d < 0 {
            return BigInt::zero();
        }
        let reach = self.reachable(outer, d);
        let mut states: States = HashMap::from([((start, 0), BigInt::one())]);
        for &r in nu {
            states = self.advance(&states, r, d, &reach);
            if states.is_empty() {
                return BigInt::zero();
            }
        }
        states.remove(&(end, d)).unwrap_or_default()
    }

    /// Every nonzero weight over partitions ν of |λ| − |μ| + nd with parts at
    /// most `max_part`, sharing the work of common prefixes.
    pub fn expand(
        &self,
        outer: &AlcoveWeight,
        d: i64,
        inner: &AlcoveWeight,
        max_part: Option<usize>,
    ) -> BTreeMap<Partition, BigInt> {
        let mut out = BTreeMap::new();
        let (Some(start), Some(end)) = (self.position(inner), self.position(outer)) else {
            return out;
        };
        let m = outer.size() as i64 - inner.size() as i64 + self.ctx.n as i64 * d;
        if d < 0 || m < 0 {
            return out;
        }
        let reach = self.reachable(outer, d);
        let states: States = HashMap::from([((start, 0), BigInt::one())]);
        let cap = max_part.unwrap_or(m as usize).min(m as usize);
        let mut prefix = Vec::new();
        self.descend(m as usize, cap, &mut prefix, &states, (end, d), &reach, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        rest: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        states: &States,
        goal: (usize, i64),
        reach: &[Vec<bool>],
        out: &mut BTreeMap<Partition, BigInt>,
    ) {
        if rest == 0 {
            if let Some(c) = states.get(&goal) {
                out.insert(Partition::from_unsorted(prefix.clone()), c.clone());
            }
            return;
        }
        for r in (1..=cap.min(rest)).rev() {
            let next = self.advance(states, r, goal.1, reach);
            if next.is_empty() {
                continue;
            }
            prefix.push(r);
            self.descend(rest - r, r, prefix, &next, goal, reach, out);
            prefix.pop();
        }
    }
}
