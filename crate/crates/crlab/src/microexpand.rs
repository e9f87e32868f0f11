//! Exact algebra of singular expansions in the basis
//!
//! ```text
//! Φ_j(t) = j!·t^{−j−1}                      (j ≥ 0)
//! Φ_j(t) = ((−1)^j/(−j−1)!)·t^{−j−1}·log t  (j < 0)
//! ```
//!
//! An expansion `Σ a_j Φ_j` is a class modulo functions smooth at `t = 0`;
//! smooth remainders produced by the ring operations are discarded
//! immediately, so equality is coefficient-list equality.
//!
//! The derivative rule `d/dt Φ_j = −Φ_{j+1} (mod smooth)` is uniform across
//! all `j` once `Φ_{−1}(t) = −log t` is adopted (the value of the general
//! `j < 0` formula at `j = −1`). The rule itself is derived, not quoted:
//! for `j ≤ −2` the derivative produces the extra smooth monomial
//! `((−1)^j/(−j−1)!)·t^{−j−2}`, which is dropped.
//!
//! Coefficients are exact [`Scalar`]s, or [`SmoothSeries`] in one auxiliary
//! parameter (called ε throughout) to support the division lemma `u = ε·v`.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Rat, Scalar};
use num::Zero;
use thiserror::Error;

/// Default lower truncation bound for expansions.
pub const DEFAULT_LOWER_BOUND: i64 = -16;

#[derive(Debug, Error)]
pub enum MicroError {
    #[error("Φ_j is only defined for t > 0 (got t = {0})")]
    NonPositiveArgument(f64),
    #[error("division by ε requires every coefficient to vanish at ε = 0; offending order j = {0}")]
    NonzeroConstantTerm(i64),
    #[error("operation requires scalar coefficients, found a series coefficient at order j = {0}")]
    SeriesCoefficient(i64),
}

/// Truncated power series `c_0 + c_1·x + … + c_D·x^D` with exact coefficients.
#[derive(Clone, PartialEq)]
pub struct SmoothSeries {
    coeffs: Vec<Scalar>,
}

impl SmoothSeries {
    /// Series with the given coefficients; depth is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        SmoothSeries { coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        SmoothSeries { coeffs: vec![c] }
    }

    /// The monomial `x` (depth 1).
    pub fn x() -> Self {
        SmoothSeries {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        SmoothSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Termwise sum, truncated to the coarser depth.
    pub fn add(&self, rhs: &SmoothSeries) -> Self {
        let depth = self.depth().min(rhs.depth());
        let coeffs = (0..=depth)
            .map(|k| self.coeff(k) + rhs.coeff(k))
            .collect();
        SmoothSeries { coeffs }
    }

    /// Whether the constant term vanishes (the division-lemma hypothesis).
    pub fn vanishes_at_zero(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// Divide by the series variable: `(c_1, …, c_D)` at depth `D − 1`.
    /// The caller checks `vanishes_at_zero` first.
    fn shift_down(&self) -> Self {
        if self.coeffs.len() == 1 {
            return SmoothSeries::constant(Scalar::zero());
        }
        SmoothSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Numeric evaluation at `x`.
    pub fn eval(&self, x: f64) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for c in self.coeffs.iter().rev() {
            let (cr, ci) = c.to_complex();
            re = re * x + cr;
            im = im * x + ci;
        }
        (re, im)
    }
}

impl fmt::Debug for SmoothSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:?})x^{}", c, k)?;
        }
        write!(f, "]")
    }
}

/// Coefficient of one Φ-order: an exact scalar or a series in the auxiliary
/// parameter ε.
#[derive(Clone, PartialEq, Debug)]
pub enum Coefficient {
    Scalar(Scalar),
    Series(SmoothSeries),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Scalar(s) => s.is_zero(),
            Coefficient::Series(s) => s.is_zero(),
        }
    }

    fn scale(&self, s: &Scalar) -> Self {
        match self {
            Coefficient::Scalar(c) => Coefficient::Scalar(c * s),
            Coefficient::Series(c) => Coefficient::Series(c.scale(s)),
        }
    }

    fn add(&self, rhs: &Coefficient) -> Self {
        match (self, rhs) {
            (Coefficient::Scalar(a), Coefficient::Scalar(b)) => {
                Coefficient::Scalar(a.clone() + b.clone())
            }
            (Coefficient::Series(a), Coefficient::Series(b)) => Coefficient::Series(a.add(b)),
            (Coefficient::Scalar(a), Coefficient::Series(b))
            | (Coefficient::Series(b), Coefficient::Scalar(a)) => {
                // A scalar is a constant series; keep the series depth.
                let mut coeffs = b.coeffs.clone();
                coeffs[0] = coeffs[0].clone() + a.clone();
                Coefficient::Series(SmoothSeries { coeffs })
            }
        }
    }
}

/// Finite expansion `Σ_{b ≤ j ≤ k} a_j Φ_j(t)` modulo smooth functions,
/// truncated below at the bound `b`.
#[derive(Clone, Debug)]
pub struct MicroExpansion {
    terms: BTreeMap<i64, Coefficient>,
    lower_bound: i64,
}

impl PartialEq for MicroExpansion {
    /// Coefficient-list equality; the truncation bound is working metadata.
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

/// The two standard sections of §delta/Heaviside type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionKind {
    Delta,
    Heaviside,
}

/// `Φ_j(t)` with the principal real branch of `log` on `t > 0`.
pub fn phi_eval(j: i64, t: f64) -> Result<f64, MicroError> {
    if !(t > 0.0) {
        return Err(MicroError::NonPositiveArgument(t));
    }
    if j >= 0 {
        let mut v = t.powi(-(j as i32) - 1);
        for m in 1..=j {
            v *= m as f64;
        }
        Ok(v)
    } else {
        // (−1)^j/(−j−1)! · t^{−j−1} · log t
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let mut fact = 1.0;
        for m in 1..=(-j - 1) {
            fact *= m as f64;
        }
        Ok(sign / fact * t.powi((-j - 1) as i32) * t.ln())
    }
}

impl MicroExpansion {
    pub fn zero() -> Self {
        MicroExpansion {
            terms: BTreeMap::new(),
            lower_bound: DEFAULT_LOWER_BOUND,
        }
    }

    /// Expansion from `(order, coefficient)` pairs with the default bound.
    pub fn from_terms(terms: Vec<(i64, Scalar)>) -> Self {
        let mut map = BTreeMap::new();
        for (j, c) in terms {
            if !c.is_zero() {
                map.insert(j, Coefficient::Scalar(c));
            }
        }
        MicroExpansion {
            terms: map,
            lower_bound: DEFAULT_LOWER_BOUND,
        }
        .clipped()
    }

    pub fn from_series_terms(terms: Vec<(i64, SmoothSeries)>) -> Self {
        let mut map = BTreeMap::new();
        for (j, c) in terms {
            if !c.is_zero() {
                map.insert(j, Coefficient::Series(c));
            }
        }
        MicroExpansion {
            terms: map,
            lower_bound: DEFAULT_LOWER_BOUND,
        }
        .clipped()
    }

    /// The single term `1·Φ_j`.
    pub fn phi(j: i64) -> Self {
        MicroExpansion::from_terms(vec![(j, Scalar::one())])
    }

    pub fn with_lower_bound(mut self, bound: i64) -> Self {
        self.lower_bound = bound;
        self.clipped()
    }

    pub fn lower_bound(&self) -> i64 {
        self.lower_bound
    }

    fn clipped(mut self) -> Self {
        let b = self.lower_bound;
        self.terms.retain(|j, c| *j >= b && !c.is_zero());
        self
    }

    /// Largest order with nonzero coefficient, if the expansion is nonzero.
    pub fn order(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Nondegeneracy: the top coefficient is nonzero. (Zero expansions are
    /// degenerate by convention.)
    pub fn is_nondegenerate(&self) -> bool {
        self.order()
            .map(|k| !self.terms[&k].is_zero())
            .unwrap_or(false)
    }

    pub fn coefficient(&self, j: i64) -> Coefficient {
        self.terms
            .get(&j)
            .cloned()
            .unwrap_or(Coefficient::Scalar(Scalar::zero()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coefficient)> {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        MicroExpansion {
            terms: self
                .terms
                .iter()
                .map(|(j, c)| (*j, c.scale(s)))
                .collect(),
            lower_bound: self.lower_bound,
        }
        .clipped()
    }

    /// Termwise sum; the bound clips to the coarser of the operands' bounds.
    pub fn add(&self, rhs: &MicroExpansion) -> Self {
        let mut terms = self.terms.clone();
        for (j, c) in &rhs.terms {
            let cur = terms
                .remove(j)
                .unwrap_or(Coefficient::Scalar(Scalar::zero()));
            terms.insert(*j, cur.add(c));
        }
        MicroExpansion {
            terms,
            lower_bound: self.lower_bound.max(rhs.lower_bound),
        }
        .clipped()
    }

    /// Numeric evaluation at `t > 0` (scalar coefficients only).
    pub fn eval(&self, t: f64) -> Result<(f64, f64), MicroError> {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in &self.terms {
            let phi = phi_eval(*j, t)?;
            let (cr, ci) = match c {
                Coefficient::Scalar(s) => s.to_complex(),
                Coefficient::Series(_) => return Err(MicroError::SeriesCoefficient(*j)),
            };
            re += cr * phi;
            im += ci * phi;
        }
        Ok((re, im))
    }
}

/// The delta and Heaviside sections: `δ = (i/2π)·Φ_0` and
/// `H = (−i/2π)·Φ_{−1}` (both carried by the constant `(−2πi)^{−1}`,
/// with `Φ_{−1}(t) = −log t`).
pub fn standard_section(kind: SectionKind) -> MicroExpansion {
    let c = Scalar::inv_neg_two_pi_i();
    match kind {
        SectionKind::Delta => MicroExpansion::from_terms(vec![(0, c)]),
        SectionKind::Heaviside => MicroExpansion::from_terms(vec![(-1, -c)]),
    }
}

/// Termwise `d/dt`: `Φ_j ↦ −Φ_{j+1}` modulo smooth terms.
pub fn differentiate(u: &MicroExpansion) -> MicroExpansion {
    let terms = u
        .terms
        .iter()
        .map(|(j, c)| (*j + 1, c.scale(&(-Scalar::one()))))
        .collect();
    MicroExpansion {
        terms,
        lower_bound: u.lower_bound,
    }
    .clipped()
}

/// Falling factorial `j·(j−1)···(j−m+1)` as an exact rational.
fn falling_factorial(j: i64, m: usize) -> Rat {
    let mut acc = Rat::from_integer(1.into());
    for step in 0..m as i64 {
        acc *= Rat::from_integer((j - step).into());
    }
    acc
}

/// Multiply by a smooth series in `t`, via `t^m·Φ_j = j^{(m)}·Φ_{j−m}`
/// (mod smooth). Result truncated to `u`'s lower bound.
pub fn multiply_smooth(u: &MicroExpansion, f: &SmoothSeries) -> MicroExpansion {
    let mut out = MicroExpansion::zero().with_lower_bound(u.lower_bound);
    for (j, c) in &u.terms {
        for m in 0..=f.depth() {
            let fm = f.coeff(m);
            if fm.is_zero() {
                continue;
            }
            let ff = falling_factorial(*j, m);
            if ff.is_zero() {
                continue;
            }
            let target = *j - m as i64;
            if target < u.lower_bound {
                continue;
            }
            let scaled = c.scale(&(fm * Scalar::from_rat(ff)));
            let single = MicroExpansion {
                terms: BTreeMap::from([(target, scaled)]),
                lower_bound: u.lower_bound,
            };
            out = out.add(&single);
        }
    }
    out
}

/// Division lemma: if every coefficient (as a series in ε) vanishes at
/// ε = 0, return `v` with `ε·v = u` exactly.
pub fn divide_by_parameter(u: &MicroExpansion) -> Result<MicroExpansion, MicroError> {
    let mut terms = BTreeMap::new();
    for (j, c) in &u.terms {
        match c {
            Coefficient::Scalar(s) => {
                // A nonzero scalar is a series with nonzero constant term.
                if !s.is_zero() {
                    return Err(MicroError::NonzeroConstantTerm(*j));
                }
            }
            Coefficient::Series(s) => {
                if !s.vanishes_at_zero() {
                    return Err(MicroError::NonzeroConstantTerm(*j));
                }
                let v = s.shift_down();
                if !v.is_zero() {
                    terms.insert(*j, Coefficient::Series(v));
                }
            }
        }
    }
    Ok(MicroExpansion {
        terms,
        lower_bound: u.lower_bound,
    }
    .clipped())
}

/// Laplace correspondence `Σ a_j t^j ↦ Σ a_j Φ_j(ρ)`: exact for `j ≥ 0`
/// (`∫_0^∞ e^{−tρ} t^j dt = j!·ρ^{−j−1}`), regularized mod smooth for `j < 0`.
pub fn laplace_from_symbol(symbol: &BTreeMap<i64, Scalar>) -> MicroExpansion {
    MicroExpansion::from_terms(symbol.iter().map(|(j, a)| (*j, a.clone())).collect())
}
