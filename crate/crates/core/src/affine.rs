//! The extended affine symmetric group as bijections of Z, its level-n action
//! on weights, cylindric loops and cylindric skew shapes.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{AlcoveWeight, BoxedPartition, Context};

/// An extended affine permutation in window notation (ŵ(1), …, ŵ(k)),
/// extended to Z by ŵ(m + k) = ŵ(m) + k.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtAffinePerm {
    window: Vec<i64>,
}

impl ExtAffinePerm {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let k = window.len() as i64;
        if k == 0 {
            return Err(Error::RankMismatch { expected: 1, got: 0 });
        }
        let sum: i64 = window.iter().sum();
        if (sum - k * (k - 1) / 2).rem_euclid(k) != 0 {
            return Err(Error::WindowSum(window));
        }
        let mut residues: Vec<i64> = window.iter().map(|w| w.rem_euclid(k)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() != window.len() {
            return Err(Error::WindowResidues(window));
        }
        Ok(ExtAffinePerm { window })
    }

    pub fn identity(k: usize) -> Self {
        ExtAffinePerm { window: (1..=k as i64).collect() }
    }

    /// τ^d, with window (1−d, …, k−d).
    pub fn tau_power(k: usize, d: i64) -> Self {
        ExtAffinePerm { window: (1..=k as i64).map(|i| i - d).collect() }
    }

    /// The simple reflection σ_i for 0 ≤ i < k, exchanging i and i+1 modulo k.
    pub fn sigma(k: usize, i: usize) -> Self {
        assert!(i < k, "reflection index out of range");
        let mut window: Vec<i64> = (1..=k as i64).collect();
        if k == 1 {
            return ExtAffinePerm { window };
        }
        if i == 0 {
            window[0] = 0;
            window[k - 1] = k as i64 + 1;
        } else {
            window.swap(i - 1, i);
        }
        ExtAffinePerm { window }
    }

    /// The translation with (x^α)(i) = i + kα_i, so that λ∘x^α = λ − nα.
    pub fn translation(alpha: &[i64]) -> Self {
        let k = alpha.len() as i64;
        ExtAffinePerm { window: alpha.iter().enumerate().map(|(i, a)| i as i64 + 1 + k * a).collect() }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn eval(&self, m: i64) -> i64 {
        let k = self.window.len() as i64;
        let r = (m - 1).rem_euclid(k);
        let q = (m - 1 - r) / k;
        self.window[r as usize] + q * k
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &ExtAffinePerm) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: other.rank() });
        }
        Ok(ExtAffinePerm { window: other.window.iter().map(|&v| self.eval(v)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let k = self.window.len() as i64;
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(k);
            let q = (v - 1 - r) / k;
            window[r as usize] = i as i64 + 1 - q * k;
        }
        ExtAffinePerm { window }
    }

    /// The winding number d in ŵ = w∘τ^d.
    pub fn degree(&self) -> i64 {
        let k = self.window.len() as i64;
        let sum: i64 = self.window.iter().sum();
        (k * (k + 1) / 2 - sum) / k
    }
}

impl fmt::Debug for ExtAffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Evaluates the quasi-periodic extension of a weight, v(i + k) = v(i) − n.
pub fn loop_value(v: &[i64], n: usize, i: i64) -> i64 {
    let k = v.len() as i64;
    let r = (i - 1).rem_euclid(k);
    let q = (i - 1 - r) / k;
    v[r as usize] - q * n as i64
}

/// The level-n right action (v∘ŵ)(i) = v(ŵ(i)) on weights of rank k.
pub fn act_level_n(v: &[i64], n: usize, w: &ExtAffinePerm) -> Result<Vec<i64>> {
    if v.len() != w.rank() {
        return Err(Error::RankMismatch { expected: w.rank(), got: v.len() });
    }
    Ok(w.window().iter().map(|&x| loop_value(v, n, x)).collect())
}

/// The shifted level-n action λ̄ ⊙ ŵ = (λ̄ + ρ)∘ŵ − ρ, evaluated on [k].
pub fn shifted_act(lambda: &BoxedPartition, w: &ExtAffinePerm) -> Result<Vec<i64>> {
    let shifted: Vec<i64> = lambda.to_strict().weight();
    shifted_act_weight(&shifted, lambda.ctx().n, w)
}

/// Shifted action on an arbitrary weight already written in λ + ρ coordinates.
pub fn shifted_act_weight(shifted: &[i64], n: usize, w: &ExtAffinePerm) -> Result<Vec<i64>> {
    let k = shifted.len() as i64;
    let acted = act_level_n(shifted, n, w)?;
    Ok(acted.iter().enumerate().map(|(i, v)| v - (k - i as i64)).collect())
}

/// The cylindric loop λ[d], i.e. λ∘τ^d.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CylindricLoop {
    base: AlcoveWeight,
    offset: i64,
}

impl CylindricLoop {
    pub fn new(base: AlcoveWeight, offset: i64) -> Self {
        CylindricLoop { base, offset }
    }

    pub fn base(&self) -> &AlcoveWeight {
        &self.base
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn value(&self, i: i64) -> i64 {
        let ctx = self.base.ctx();
        loop_value(&self.base.weight(), ctx.n, i - self.offset)
    }

    /// Values on the fundamental rows 1..=k.
    pub fn window(&self) -> Vec<i64> {
        (1..=self.base.ctx().k as i64).map(|i| self.value(i)).collect()
    }

    pub fn act(&self, w: &ExtAffinePerm) -> Result<Vec<i64>> {
        act_level_n(&self.window(), self.base.ctx().n, w)
    }
}

/// λ[d] on rows 1..=k, written directly from the parts.
pub fn loop_window(lambda: &[usize], n: usize, d: i64) -> Vec<i64> {
    let k = lambda.len() as i64;
    let v: Vec<i64> = lambda.iter().map(|&p| p as i64).collect();
    (1..=k).map(|i| loop_value(&v, n, i - d)).collect()
}

/// Checks μ_i ≤ λ[d]_i on the fundamental rows.
pub fn is_valid_shape(outer: &AlcoveWeight, d: i64, inner: &AlcoveWeight) -> bool {
    let n = outer.ctx().n;
    let top = loop_window(outer.parts(), n, d);
    inner.parts().iter().zip(&top).all(|(&m, &l)| m as i64 <= l)
}

/// A cylindric skew shape λ/d/μ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CylindricShape {
    pub outer: AlcoveWeight,
    pub d: i64,
    pub inner: AlcoveWeight,
}

impl CylindricShape {
    pub fn new(outer: AlcoveWeight, d: i64, inner: AlcoveWeight) -> Result<Self> {
        outer.ctx().ensure_same(&inner.ctx())?;
        Ok(CylindricShape { outer, d, inner })
    }

    pub fn ctx(&self) -> Context {
        self.outer.ctx()
    }

    pub fn is_valid(&self) -> bool {
        is_valid_shape(&self.outer, self.d, &self.inner)
    }

    /// Number of cells in one fundamental domain, |λ| − |μ| + nd.
    pub fn size(&self) -> i64 {
        self.outer.size() as i64 - self.inner.size() as i64 + self.ctx().n as i64 * self.d
    }

    /// Cells (row, column) on rows 1..=k lying between μ[0] and λ[d].
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let top = loop_window(self.outer.parts(), self.ctx().n, self.d);
        let mut cells = Vec::new();
        for (i, (&m, &l)) in self.inner.parts().iter().zip(&top).enumerate() {
            for j in (m as i64 + 1)..=l {
                cells.push((i as i64 + 1, j));
            }
        }
        cells
    }

    /// Text rendering of the fundamental domain, rows 1..=k top to bottom.
    pub fn render(&self) -> String {
        let top = loop_window(self.outer.parts(), self.ctx().n, self.d);
        let lo = self.inner.parts().iter().map(|&m| m as i64).min().unwrap_or(0).min(0);
        let hi = top.iter().copied().max().unwrap_or(0);
        let mut out = String::new();
        for (i, &l) in top.iter().enumerate() {
            let m = self.inner.parts()[i] as i64;
            for j in (lo + 1)..=hi {
                out.push(if j <= m { '.' } else if j <= l { '#' } else { ' ' });
            }
            let trimmed = out.trim_end().len();
            out.truncate(trimmed);
            out.push('\n');
        }
        out
    }
}
