//! Triple points: common points of three dominant lines, one through each
//! of `zeta`, `zeta↓` and `zeta↑`.
//!
//! A sign triple `(μ1, μ2, μ3)` picks the dominant line of sign `μ1` at
//! `zeta↓`, `μ2` at `zeta` and `μ3` at `zeta↑`. With `ψ₊₁ = floor` and
//! `ψ₋₁ = ceil`, the slope of the sign-`μ` dominant line at a point with
//! parameter `τ` is `q (τ - ψ_μ(τ))`, so the three lines are concurrent
//! exactly when `D = ψ_{μ1}(τ⁻) - 2ψ_{μ2}(τ) + ψ_{μ3}(τ⁺)` vanishes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chain::{farey_point_tests, Chain};
use crate::error::{Error, Result};
use crate::orbit::{CriticalPoint, Sign};
use crate::point::{dominant_params, neighbours, ThetaContext};
use crate::rational::{to_i64, Rational};

pub type SignTriple = (i8, i8, i8);

/// All eight sign triples, `+++` first.
pub const SIGN_TRIPLES: [SignTriple; 8] =
    [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1), (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1)];

/// `ψ₊₁(x) = ⌊x⌋`, `ψ₋₁(x) = ⌈x⌉`.
pub fn psi(mu: i8, x: &Rational) -> BigInt {
    if mu > 0 {
        x.floor()
    } else {
        x.ceil()
    }
}

fn sign_of(mu: i8) -> Sign {
    if mu > 0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn format_triple(t: SignTriple) -> String {
    [t.0, t.1, t.2].iter().map(|&m| if m > 0 { '+' } else { '-' }).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TripleType {
    I,
    II,
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChiKind {
    Chi1,
    Chi2,
}

/// Which closed-form clause applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    Generic,
    /// `rho = 1/q`: the lower neighbour sits on `rho = 0`.
    FirstRow,
    /// `rho = (q-1)/q`: the upper neighbour sits on `rho = 1`.
    LastRow,
    /// `zeta = (1/2, 1/2)`, both neighbours on the boundary.
    Half,
}

/// Parameters `τ⁻, τ, τ⁺` at `zeta↓, zeta, zeta↑` together with the
/// continued-fraction data they were computed from.
#[derive(Debug, Clone)]
struct Setting {
    zeta: CriticalPoint,
    down: CriticalPoint,
    up: CriticalPoint,
    theta: ThetaContext,
    tau_minus: Rational,
    tau: Rational,
    tau_plus: Rational,
}

impl Setting {
    fn new(zeta: &CriticalPoint, theta: ThetaContext) -> Result<Self> {
        let (up, down) = neighbours(zeta)?;
        let missing = || Error::MissingNeighbour { theta: zeta.theta.clone(), rho: zeta.rho.clone() };
        let up = up.ok_or_else(missing)?;
        let down = down.ok_or_else(missing)?;
        let qp = Rational::from(theta.q_prime.clone());
        Ok(Setting {
            zeta: zeta.clone(),
            tau_minus: &qp * &down.rho,
            tau: &qp * &zeta.rho,
            tau_plus: &qp * &up.rho,
            down,
            up,
            theta,
        })
    }

    fn row(&self) -> RowKind {
        match (self.down.rho.is_zero(), self.up.rho.is_one()) {
            (true, true) => RowKind::Half,
            (true, false) => RowKind::FirstRow,
            (false, true) => RowKind::LastRow,
            (false, false) => RowKind::Generic,
        }
    }

    /// `ψ_{μ1}(τ⁻)`, shifted on `rho = 0` so that the slope law also
    /// reproduces the boundary conventions `(0, 0)` and `(-q, -p)`.
    fn psi_down(&self, mu: i8) -> Rational {
        if self.down.rho.is_zero() {
            &self.tau_minus - Rational::frac(i64::from(mu) - 1, 2)
        } else {
            Rational::from(psi(mu, &self.tau_minus))
        }
    }

    /// `ψ_{μ3}(τ⁺)`, shifted on `rho = 1` for `(q, p - 1)` and `(0, -1)`.
    fn psi_up(&self, mu: i8) -> Rational {
        if self.up.rho.is_one() {
            &self.tau_plus - Rational::frac(i64::from(mu) + 1, 2)
        } else {
            Rational::from(psi(mu, &self.tau_plus))
        }
    }

    fn psi_mid(&self, mu: i8) -> Rational {
        Rational::from(psi(mu, &self.tau))
    }
}

fn integral(x: &Rational, what: &str) -> Result<i64> {
    let v = x.to_bigint().ok_or_else(|| Error::Consistency(format!("{what} = {x} is not an integer")))?;
    to_i64(&v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantRow {
    pub sign_triple: SignTriple,
    /// Dominant lines `(i, j)` through `zeta↓`, `zeta`, `zeta↑`.
    pub lines: [(i64, i64); 3],
    pub determinant: i64,
    /// `ψ_{μ1}(τ⁻) - ψ_{μ2}(τ)`
    pub nabla: i64,
    /// `ψ_{μ3}(τ⁺) - ψ_{μ2}(τ)`
    pub nabla_prime: i64,
    /// Common point of the three lines, found by direct intersection.
    pub intersection: Option<(Rational, Rational)>,
}

impl DeterminantRow {
    pub fn concurrent(&self) -> bool {
        self.intersection.is_some()
    }
}

/// Common point of three lines `rho = i theta - j`, if there is one.
pub fn intersect_lines(lines: &[(i64, i64); 3]) -> Option<(Rational, Rational)> {
    let (a, b) = lines
        .iter()
        .enumerate()
        .flat_map(|(x, l)| lines[x + 1..].iter().map(move |m| (*l, *m)))
        .find(|(l, m)| l.0 != m.0)?;
    let theta = Rational::frac(a.1 - b.1, a.0 - b.0);
    let rho = &theta * a.0 - a.1;
    lines.iter().all(|l| &theta * l.0 - l.1 == rho).then_some((theta, rho))
}

fn table(setting: &Setting) -> Result<Vec<DeterminantRow>> {
    let dom = [dominant_params(&setting.down)?, dominant_params(&setting.zeta)?, dominant_params(&setting.up)?];
    SIGN_TRIPLES
        .iter()
        .map(|&t| {
            let lines = [dom[0].by_sign(sign_of(t.0)), dom[1].by_sign(sign_of(t.1)), dom[2].by_sign(sign_of(t.2))];
            let (d1, d2, d3) = (setting.psi_down(t.0), setting.psi_mid(t.1), setting.psi_up(t.2));
            let determinant = integral(&(&d1 - &d2 * 2 + &d3), "determinant")?;
            Ok(DeterminantRow {
                sign_triple: t,
                lines,
                determinant,
                nabla: integral(&(&d1 - &d2), "nabla")?,
                nabla_prime: integral(&(&d3 - &d2), "nabla'")?,
                intersection: intersect_lines(&lines),
            })
        })
        .collect()
}

/// The eight sign triples with their determinants and direct line intersections.
pub fn concurrency_oracle(zeta: &CriticalPoint) -> Result<Vec<DeterminantRow>> {
    table(&Setting::new(zeta, ThetaContext::new(&zeta.theta)?)?)
}

/// `μ = 2⌊τ⌋ - ⌊τ⁻⌋ - ⌊τ⁺⌋`.
pub fn mu_of(zeta: &CriticalPoint) -> Result<i64> {
    let s = Setting::new(zeta, ThetaContext::new(&zeta.theta)?)?;
    to_i64(&(s.tau.floor() * 2 - s.tau_minus.floor() - s.tau_plus.floor()))
}

/// Row of the floor-sequence table matching `(⌊τ⁻⌋, ⌊τ⌋, ⌊τ⁺⌋)`:
/// 1 `(k,k,k)`, 2 `(k,k+1,k+2)`, 3 `(k,k-1,k-2)`, 4 `(k,k,k+1)`,
/// 5 `(k,k+1,k+1)`, 6 `(k,k,k-1)`, 7 `(k,k-1,k-1)`.
pub fn floor_pattern(zeta: &CriticalPoint) -> Result<Option<u8>> {
    let s = Setting::new(zeta, ThetaContext::new(&zeta.theta)?)?;
    let k = s.tau_minus.floor();
    let d = (to_i64(&(s.tau.floor() - &k))?, to_i64(&(s.tau_plus.floor() - &k))?);
    Ok(FLOOR_TABLE.iter().find(|row| row.1 == d).map(|row| row.0))
}

/// `(row, (⌊τ⌋ - k, ⌊τ⁺⌋ - k), vanishing sign triples)`.
pub const FLOOR_TABLE: [(u8, (i64, i64), [SignTriple; 2]); 7] = [
    (1, (0, 0), [(1, 1, 1), (-1, -1, -1)]),
    (2, (1, 2), [(1, 1, 1), (-1, -1, -1)]),
    (3, (-1, -2), [(1, 1, 1), (-1, -1, -1)]),
    (4, (0, 1), [(-1, -1, 1), (1, -1, -1)]),
    (5, (1, 1), [(-1, 1, 1), (1, 1, -1)]),
    (6, (0, -1), [(1, 1, -1), (-1, 1, 1)]),
    (7, (-1, -1), [(1, -1, -1), (-1, -1, 1)]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplePoint {
    pub theta: Rational,
    pub rho: Rational,
    pub chi_kind: ChiKind,
    pub psi_sign: i8,
    /// Sign triples whose lines meet here.
    pub sign_triples: Vec<SignTriple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplePointReport {
    pub zeta: CriticalPoint,
    pub mu: i64,
    #[serde(rename = "type")]
    pub triple_type: TripleType,
    pub row: RowKind,
    pub points: Vec<TriplePoint>,
    pub determinant_table: Vec<DeterminantRow>,
}

fn convergent(theta: &ThetaContext, k: usize) -> (Rational, Rational) {
    let (p, q) = theta.cf.convergent(k).expect("index below n");
    let value = Rational::new(p.clone(), q.clone()).expect("convergent denominators are positive");
    (value, Rational::from(q.clone()))
}

/// `χ⁽¹⁾_μ = (p_{n-1}/q_{n-1}, ψ_μ(τ)(-1)^{n-1}/q_{n-1})`
/// and `χ⁽²⁾_μ = (p_{n-2}/q_{n-2}, ρ q/q_{n-2} - ψ_μ(τ)(-1)^{n-1}/q_{n-2})`.
fn chi(setting: &Setting, kind: ChiKind, mu: i8) -> Result<TriplePoint> {
    let n = setting.theta.n();
    let parity = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let psi = Rational::from(psi(mu, &setting.tau)) * parity;
    let (theta, rho) = match kind {
        ChiKind::Chi1 => {
            let (theta, qk) = convergent(&setting.theta, n - 1);
            (theta, (psi / &qk))
        }
        ChiKind::Chi2 => {
            let (theta, qk) = convergent(&setting.theta, n - 2);
            let q = Rational::from(setting.theta.q.clone());
            (theta, &setting.zeta.rho * &q / &qk - psi / &qk)
        }
    };
    Ok(TriplePoint { theta, rho, chi_kind: kind, psi_sign: mu, sign_triples: Vec::new() })
}

pub fn triple_points(zeta: &CriticalPoint) -> Result<TriplePointReport> {
    let setting = Setting::new(zeta, ThetaContext::new(&zeta.theta)?)?;
    let mu = to_i64(&(setting.tau.floor() * 2 - setting.tau_minus.floor() - setting.tau_plus.floor()))?;
    let n_even = setting.theta.n() % 2 == 0;
    let row = setting.row();
    use ChiKind::*;
    let picks: [(ChiKind, i8); 2] = match row {
        RowKind::Half => [(Chi2, 1), (Chi2, -1)],
        _ if row != RowKind::Generic && n_even => [(Chi2, 1), (Chi2, -1)],
        RowKind::FirstRow => [(Chi1, -1), (Chi2, -1)],
        RowKind::LastRow => [(Chi1, 1), (Chi2, 1)],
        RowKind::Generic if mu == 0 => [(Chi2, 1), (Chi2, -1)],
        RowKind::Generic => {
            let m = if mu > 0 { 1 } else { -1 };
            [(Chi1, m), (Chi2, m)]
        }
    };
    let triple_type = if picks[0].0 == picks[1].0 { TripleType::II } else { TripleType::I };
    let determinant_table = table(&setting)?;
    let mut points = picks.iter().map(|&(k, m)| chi(&setting, k, m)).collect::<Result<Vec<_>>>()?;
    for p in &mut points {
        p.sign_triples = determinant_table
            .iter()
            .filter(|r| r.intersection.as_ref() == Some(&(p.theta.clone(), p.rho.clone())))
            .map(|r| r.sign_triple)
            .collect();
    }
    Ok(TriplePointReport { zeta: zeta.clone(), mu, triple_type, row, points, determinant_table })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyStatus {
    pub theta: Rational,
    pub rho: Rational,
    /// Distinct dominant chains concurrent at the point.
    pub chains: Vec<(i64, i64)>,
    /// How many of them have the point as a Farey point.
    pub farey_count: usize,
    /// Lower bound for the triple type: 1 for type I, 2 for type II.
    pub required: usize,
}

impl FareyStatus {
    pub fn holds(&self) -> bool {
        self.farey_count >= self.required
    }
}

/// For each triple point, how many of the concurrent dominant chains see it as a Farey point.
pub fn triple_point_farey_status(zeta: &CriticalPoint) -> Result<Vec<FareyStatus>> {
    let report = triple_points(zeta)?;
    let required = match report.triple_type {
        TripleType::I => 1,
        TripleType::II => 2,
    };
    report
        .points
        .iter()
        .map(|p| {
            let chains: BTreeSet<(i64, i64)> = report
                .determinant_table
                .iter()
                .filter(|r| p.sign_triples.contains(&r.sign_triple))
                .flat_map(|r| r.lines)
                .collect();
            let at = CriticalPoint::new(p.theta.clone(), p.rho.clone())?;
            let mut farey_count = 0;
            for &(i, j) in &chains {
                if farey_point_tests(&Chain::new(i, j)?, &at)?.is_farey {
                    farey_count += 1;
                }
            }
            Ok(FareyStatus {
                theta: p.theta.clone(),
                rho: p.rho.clone(),
                chains: chains.into_iter().collect(),
                farey_count,
                required,
            })
        })
        .collect()
}

/// Figure coordinates: `zeta` moved to the origin, `theta` scaled by `q²`
/// and `rho` by `q`.
pub fn normalize(zeta: &CriticalPoint, theta: &Rational, rho: &Rational) -> (Rational, Rational) {
    let q = Rational::from(zeta.q().clone());
    ((theta - &zeta.theta) * &q * &q, (rho - &zeta.rho) * &q)
}
