//! Cylindric reverse plane partitions as sequences of cylindric loops
//! μ[0] = λ⁽⁰⁾[0], λ⁽¹⁾[d₁], …, λ⁽ˡ⁾[d_l] = λ[d], built layer by layer.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::affine::{is_valid_shape, loop_window, CylindricShape};
use crate::cylindric::strips::{
    chi_cyl, is_adjacent_strip, is_shifted_horizontal_strip, is_vertical_strip, phi_cyl, psi_cyl, shape_size,
    theta_cyl,
};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_alcove, enumerate_strict, AlcoveWeight};

/// Which cylindric strips may appear as the level sets of a CRPP.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrppKind {
    /// Any valid cylindric skew shape.
    General,
    /// Vertical strips, at most one cell per row.
    RowStrict,
    /// Cylindric adjacent column strips.
    AdjacentColumn,
    /// Horizontal strips on the shifted cylinder, for strict loops.
    ColumnStrict,
    /// Cylindric ribbons on the shifted cylinder, for strict loops.
    Ribbon,
}

impl CrppKind {
    /// Ribbon and column strict fillings live on the shifted cylinder, whose
    /// loops are the strict alcove weights λ̄ + ρ.
    pub fn uses_strict_loops(self) -> bool {
        matches!(self, CrppKind::ColumnStrict | CrppKind::Ribbon)
    }

    /// Whether λ/d/μ may be one level set of a filling of this kind.
    pub fn admits(self, outer: &AlcoveWeight, d: i64, inner: &AlcoveWeight) -> bool {
        if d < 0 || !is_valid_shape(outer, d, inner) {
            return false;
        }
        if shape_size(outer, d, inner) == 0 {
            return !matches!(self, CrppKind::AdjacentColumn | CrppKind::Ribbon);
        }
        match self {
            CrppKind::General => true,
            CrppKind::RowStrict => is_vertical_strip(outer, d, inner),
            CrppKind::AdjacentColumn | CrppKind::Ribbon => is_adjacent_strip(outer, d, inner),
            CrppKind::ColumnStrict => is_shifted_horizontal_strip(outer, d, inner),
        }
    }

    pub fn loops(self, ctx: crate::partitions::Context) -> Vec<AlcoveWeight> {
        if self.uses_strict_loops() {
            enumerate_strict(ctx)
        } else {
            enumerate_alcove(ctx)
        }
    }
}

/// How the levels of an enumerated CRPP are constrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filling {
    /// Level i holds exactly weight[i] cells.
    Weight(Vec<usize>),
    /// Exactly this many levels, each of any size.
    Levels(usize),
}

/// A cylindric reverse plane partition of shape λ/d/μ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crpp {
    loops: Vec<(AlcoveWeight, i64)>,
    kind: CrppKind,
}

impl Crpp {
    /// Builds a CRPP from its loop sequence, checking every level set.
    pub fn new(kind: CrppKind, loops: Vec<(AlcoveWeight, i64)>) -> Result<Self> {
        let first = loops.first().ok_or_else(|| Error::Parse("a CRPP needs at least one loop".into()))?;
        if first.1 != 0 {
            return Err(Error::Parse(format!("the first loop must have offset 0, got {}", first.1)));
        }
        for w in loops.windows(2) {
            let ((inner, a), (outer, b)) = (&w[0], &w[1]);
            inner.ctx().ensure_same(&outer.ctx())?;
            if !kind.admits(outer, b - a, inner) {
                return Err(Error::Parse(format!("{outer}/{}/{inner} is not an admissible {kind:?} level", b - a)));
            }
        }
        Ok(Crpp { loops, kind })
    }

    pub fn kind(&self) -> CrppKind {
        self.kind
    }

    pub fn loops(&self) -> &[(AlcoveWeight, i64)] {
        &self.loops
    }

    pub fn levels(&self) -> usize {
        self.loops.len() - 1
    }

    pub fn shape(&self) -> CylindricShape {
        let (inner, _) = &self.loops[0];
        let (outer, d) = self.loops.last().expect("non-empty");
        CylindricShape { outer: outer.clone(), d: *d, inner: inner.clone() }
    }

    /// Number of cells in each level.
    pub fn weight(&self) -> Vec<usize> {
        self.steps().map(|(outer, e, inner)| shape_size(outer, e, inner) as usize).collect()
    }

    fn steps(&self) -> impl Iterator<Item = (&AlcoveWeight, i64, &AlcoveWeight)> + '_ {
        self.loops.windows(2).map(|w| (&w[1].0, w[1].1 - w[0].1, &w[0].0))
    }

    fn product(&self, f: impl Fn(&AlcoveWeight, i64, &AlcoveWeight) -> BigInt) -> BigInt {
        self.steps().fold(BigInt::one(), |acc, (o, e, i)| acc * f(o, e, i))
    }

    pub fn theta(&self) -> BigInt {
        self.product(theta_cyl)
    }

    pub fn psi(&self) -> BigInt {
        self.product(psi_cyl)
    }

    pub fn phi(&self) -> BigInt {
        self.product(phi_cyl)
    }

    pub fn chi(&self) -> BigInt {
        self.product(chi_cyl)
    }

    /// The reflected filling of shape μ∨/d/λ∨ with the levels in reverse
    /// order: λ⁽ˡ⁻ⁱ⁾∨ sits at offset d − d_{l−i}.
    pub fn vee(&self) -> Result<Crpp> {
        let d = self.loops.last().expect("non-empty").1;
        let loops = self.loops.iter().rev().map(|(w, off)| (w.vee(), d - off)).collect();
        Crpp::new(self.kind, loops)
    }

    /// The fundamental domain on rows 1..=k, each cell labelled by its level
    /// (1–9, then a–z) and cells of μ drawn as dots.
    pub fn render(&self) -> String {
        let n = self.loops[0].0.ctx().n;
        let windows: Vec<Vec<i64>> = self.loops.iter().map(|(w, off)| loop_window(w.parts(), n, *off)).collect();
        let lo = windows[0].iter().copied().min().unwrap_or(0).min(0);
        let hi = windows.last().expect("non-empty").iter().copied().max().unwrap_or(0);
        let label = |level: usize| std::char::from_digit(level as u32, 36).unwrap_or('*');
        let mut out = String::new();
        for row in 0..windows[0].len() {
            let mut line = String::new();
            for col in (lo + 1)..=hi {
                let level = windows.iter().position(|w| col <= w[row]);
                line.push(match level {
                    Some(0) => '.',
                    Some(l) => label(l),
                    None => ' ',
                });
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Crpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.loops.iter().map(|(w, off)| format!("({w})[{off}]")).collect();
        f.write_str(&text.join(" < "))
    }
}

/// All CRPPs of the given kind and shape, sorted by loop sequence. Invalid
/// shapes give an empty list.
pub fn enumerate_crpp(shape: &CylindricShape, filling: &Filling, kind: CrppKind) -> Vec<Crpp> {
    let (outer, d, inner) = (&shape.outer, shape.d, &shape.inner);
    if d < 0 || !is_valid_shape(outer, d, inner) || (kind.uses_strict_loops() && !(outer.is_strict() && inner.is_strict())) {
        return Vec::new();
    }
    let loops = kind.loops(shape.ctx());
    let n = shape.ctx().n as i64;
    let levels = match filling {
        Filling::Weight(w) => w.len(),
        Filling::Levels(l) => *l,
    };
    let mut out = Vec::new();
    let mut path = vec![(inner.clone(), 0i64)];
    extend(&mut path, levels, &mut |path, out_level| {
        let (kappa, off) = path.last().expect("non-empty").clone();
        let mut next = Vec::new();
        for cand in &loops {
            for e in 0..=(d - off) {
                let size = cand.size() as i64 - kappa.size() as i64 + n * e;
                let wanted = match filling {
                    Filling::Weight(w) => size == w[out_level] as i64,
                    Filling::Levels(_) => size >= 0,
                };
                if wanted && kind.admits(cand, e, &kappa) && is_valid_shape(outer, d - off - e, cand) {
                    next.push((cand.clone(), off + e));
                }
            }
        }
        next
    }, &mut |path| {
        if path.last() == Some(&(outer.clone(), d)) {
            out.push(Crpp { loops: path.to_vec(), kind });
        }
    });
    out.sort();
    out
}

fn extend(
    path: &mut Vec<(AlcoveWeight, i64)>,
    levels: usize,
    successors: &mut impl FnMut(&[(AlcoveWeight, i64)], usize) -> Vec<(AlcoveWeight, i64)>,
    finish: &mut impl FnMut(&[(AlcoveWeight, i64)]),
) {
    let done = path.len() - 1;
    if done == levels {
        finish(path);
        return;
    }
    for step in successors(path, done) {
        path.push(step);
        extend(path, levels, successors, finish);
        path.pop();
    }
}
