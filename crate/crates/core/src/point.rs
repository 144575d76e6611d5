//! Local structure at a rational critical point `zeta = (p/q, r/s)`:
//! every chain through it, the two dominant chains, the four pencils and
//! their far Farey endpoints, the words of the pencil curves, and sequences
//! of rational points closing in on an irrational one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cf::ContinuedFraction;
use crate::chain::{decompose, Chain};
use crate::error::{Error, Result};
use crate::orbit::{CriticalPoint, Sign};
use crate::rational::{to_i64, Rational};
use crate::word::{Letter, Word};

/// Quadrants around `zeta`. I and III hold positive chains, II and IV negative ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV];

    pub fn sign(self) -> Sign {
        match self {
            Quadrant::I | Quadrant::III => Sign::Positive,
            Quadrant::II | Quadrant::IV => Sign::Negative,
        }
    }

    /// Pencils I and II close in on the upper neighbour, III and IV on the lower.
    pub fn is_upper(self) -> bool {
        matches!(self, Quadrant::I | Quadrant::II)
    }

    /// Pencils I and IV leave `zeta` towards larger `theta`.
    pub fn is_right(self) -> bool {
        matches!(self, Quadrant::I | Quadrant::IV)
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Quadrant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(Quadrant::I),
            "II" | "2" => Ok(Quadrant::II),
            "III" | "3" => Ok(Quadrant::III),
            "IV" | "4" => Ok(Quadrant::IV),
            _ => Err(Error::Parse { input: s.to_string(), expected: "a quadrant I, II, III or IV" }),
        }
    }
}

/// Pencils present at `zeta`: four in the interior, two on the rows
/// `rho = 0, 1`, one at each corner.
pub fn available_quadrants(zeta: &CriticalPoint) -> Vec<Quadrant> {
    use Quadrant::*;
    let (t0, t1) = (zeta.theta.is_zero(), zeta.theta.is_one());
    if zeta.rho.is_zero() {
        match (t0, t1) {
            (true, _) => vec![I],
            (_, true) => vec![II],
            _ => vec![I, II],
        }
    } else if zeta.rho.is_one() {
        match (t0, t1) {
            (true, _) => vec![IV],
            (_, true) => vec![III],
            _ => vec![III, IV],
        }
    } else {
        vec![I, II, III, IV]
    }
}

/// Continued-fraction data of `theta = p/q` with `q >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaContext {
    pub p: BigInt,
    pub q: BigInt,
    pub cf: ContinuedFraction,
    /// `(-1)^(n-1) p_{n-1}`
    pub p_prime: BigInt,
    /// `(-1)^(n-1) q_{n-1}`
    pub q_prime: BigInt,
}

impl ThetaContext {
    pub fn new(theta: &Rational) -> Result<Self> {
        if theta.denom() < &BigInt::from(2) {
            return Err(Error::Domain(format!("theta = {theta} has denominator 1; no penultimate convergent")));
        }
        let cf = ContinuedFraction::of(theta)?;
        let (p_prime, q_prime) = cf.signed_penultimate()?;
        Ok(ThetaContext { p: theta.numer().clone(), q: theta.denom().clone(), cf, p_prime, q_prime })
    }

    /// `n`, the index of the last convergent.
    pub fn n(&self) -> usize {
        self.cf.n()
    }
}

/// Derived quantities at an interior rational critical point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointContext {
    pub zeta: CriticalPoint,
    pub theta: ThetaContext,
    /// `q' r/s`
    pub tau: Rational,
    /// `q' (r/s + 1/q)`
    pub tau_plus: Rational,
    /// `q' (r/s - 1/q)`
    pub tau_minus: Rational,
    /// `ceil(-q' r/s)`
    pub t_plus: BigInt,
    pub t_minus: BigInt,
}

impl PointContext {
    pub fn p(&self) -> &BigInt {
        &self.theta.p
    }

    pub fn q(&self) -> &BigInt {
        &self.theta.q
    }

    pub fn p_prime(&self) -> &BigInt {
        &self.theta.p_prime
    }

    pub fn q_prime(&self) -> &BigInt {
        &self.theta.q_prime
    }

    pub fn n(&self) -> usize {
        self.theta.n()
    }
}

pub fn point_context(zeta: &CriticalPoint) -> Result<PointContext> {
    if zeta.on_boundary_row() {
        return Err(Error::MissingNeighbour { theta: zeta.theta.clone(), rho: zeta.rho.clone() });
    }
    let theta = ThetaContext::new(&zeta.theta)?;
    let qp = Rational::from(theta.q_prime.clone());
    let step = Rational::new(1, theta.q.clone())?;
    let tau = &qp * &zeta.rho;
    let tau_plus = &qp * (&zeta.rho + &step);
    let tau_minus = &qp * (&zeta.rho - &step);
    let t_plus = (-&tau).ceil();
    let t_minus = &t_plus - 1;
    Ok(PointContext { zeta: zeta.clone(), theta, tau, tau_plus, tau_minus, t_plus, t_minus })
}

/// `zeta ± (0, 1/q)`, dropping whichever leaves the unit square.
pub fn neighbours(zeta: &CriticalPoint) -> Result<(Option<CriticalPoint>, Option<CriticalPoint>)> {
    let step = Rational::new(1, zeta.q().clone())?;
    let up = &zeta.rho + &step;
    let down = &zeta.rho - &step;
    let up = up.in_unit_interval().then(|| CriticalPoint::new(zeta.theta.clone(), up)).transpose()?;
    let down = down.in_unit_interval().then(|| CriticalPoint::new(zeta.theta.clone(), down)).transpose()?;
    Ok((up, down))
}

fn integral(x: &Rational, what: &str) -> Result<i64> {
    let v = x.to_bigint().ok_or_else(|| Error::Consistency(format!("{what} = {x} is not an integer")))?;
    to_i64(&v)
}

/// `(i_t, j_t) = (ru q' + t q, ru p' + t p)` with `u = q/s`: every chain
/// through an interior `zeta` for some integer `t`.
pub fn all_chain_params(zeta: &CriticalPoint, t: i64) -> Result<(i64, i64)> {
    let ctx = point_context(zeta)?;
    let ru = integral(&(Rational::from(ctx.q().clone()) * &zeta.rho), "r u")?;
    let (ru, t) = (BigInt::from(ru), BigInt::from(t));
    let i = &ru * ctx.q_prime() + &t * ctx.q();
    let j = &ru * ctx.p_prime() + &t * ctx.p();
    Ok((to_i64(&i)?, to_i64(&j)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantParams {
    pub plus: (i64, i64),
    pub minus: (i64, i64),
}

impl DominantParams {
    pub fn by_sign(&self, sign: Sign) -> (i64, i64) {
        match sign {
            Sign::Positive => self.plus,
            Sign::Negative => self.minus,
        }
    }
}

fn interior_params(ctx: &PointContext, sign: Sign, ell: u64) -> Result<(i64, i64)> {
    let (p, q) = (Rational::from(ctx.p().clone()), Rational::from(ctx.q().clone()));
    let ell = Rational::from(BigInt::from(ell));
    let rho = &ctx.zeta.rho;
    let (i, j) = match sign {
        Sign::Positive => {
            let f = ctx.tau.fract() + &ell;
            (&q * &f, &p * &f - rho)
        }
        Sign::Negative => {
            let f = (-&ctx.tau).fract() + &ell;
            (-(&q * &f), -(&p * &f) - rho)
        }
    };
    Ok((integral(&i, "i")?, integral(&j, "j")?))
}

/// The positive and negative chains through `zeta` with least `|i|`.
///
/// On `rho = 0` the positive one is the segment `rho = 0` itself, `(0, 0)`,
/// and the negative one `(-q, -p)`; on `rho = 1` they are `(q, p - 1)` and
/// the segment `(0, -1)`. At the corners these follow the same formulas.
pub fn dominant_params(zeta: &CriticalPoint) -> Result<DominantParams> {
    let p = to_i64(zeta.p())?;
    let q = to_i64(zeta.q())?;
    if zeta.rho.is_zero() {
        return Ok(DominantParams { plus: (0, 0), minus: (-q, -p) });
    }
    if zeta.rho.is_one() {
        return Ok(DominantParams { plus: (q, p - 1), minus: (0, -1) });
    }
    let ctx = point_context(zeta)?;
    Ok(DominantParams {
        plus: interior_params(&ctx, Sign::Positive, 0)?,
        minus: interior_params(&ctx, Sign::Negative, 0)?,
    })
}

fn require_quadrant(zeta: &CriticalPoint, sigma: Quadrant) -> Result<()> {
    if available_quadrants(zeta).contains(&sigma) {
        Ok(())
    } else {
        Err(Error::UnavailablePencil { quadrant: sigma.to_string(), theta: zeta.theta.clone(), rho: zeta.rho.clone() })
    }
}

/// Affine parameters of the `ell`-th chain of pencil `sigma`; `ell = 0` is
/// the dominant chain of that sign.
pub fn pencil_params(zeta: &CriticalPoint, sigma: Quadrant, ell: u64) -> Result<(i64, i64)> {
    require_quadrant(zeta, sigma)?;
    let p = to_i64(zeta.p())?;
    let q = to_i64(zeta.q())?;
    let l = i64::try_from(ell).map_err(|_| Error::Overflow(ell.to_string()))?;
    let checked = |a: Option<i64>, b: Option<i64>| match (a, b) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Overflow(format!("pencil {sigma} at depth {ell}"))),
    };
    if zeta.rho.is_zero() {
        return match sigma {
            Quadrant::I => checked(q.checked_mul(l), p.checked_mul(l)),
            _ => checked(q.checked_mul(l + 1).map(|x| -x), p.checked_mul(l + 1).map(|x| -x)),
        };
    }
    if zeta.rho.is_one() {
        return match sigma {
            Quadrant::III => checked(q.checked_mul(l + 1), p.checked_mul(l + 1).map(|x| x - 1)),
            _ => checked(q.checked_mul(l).map(|x| -x), p.checked_mul(l).map(|x| -x - 1)),
        };
    }
    interior_params(&point_context(zeta)?, sigma.sign(), ell)
}

/// How a pencil endpoint was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Closed-form neighbour table for interior points.
    FareyTable,
    /// Intersection with the segment `rho = 0` or `rho = 1` (rows `1/q`, `(q-1)/q`).
    BoundarySegment,
    /// Closed forms for points on the rows `rho = 0, 1`.
    BoundaryRow,
    /// One of the four corners of the unit square.
    Corner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilEndpoint {
    pub point: CriticalPoint,
    pub provenance: Provenance,
}

fn point(theta: Rational, rho: Rational) -> Result<CriticalPoint> {
    CriticalPoint::new(theta, rho)
}

fn reflect(zeta: &CriticalPoint) -> Result<CriticalPoint> {
    point(Rational::one() - &zeta.theta, Rational::one() - &zeta.rho)
}

/// Far endpoint on the row `rho = 0`, `q >= 2`, pencils I and II.
fn row_zero_endpoint(zeta: &CriticalPoint, sigma: Quadrant, ell: u64) -> Result<CriticalPoint> {
    let th = ThetaContext::new(&zeta.theta)?;
    let (p, q, pp, qp) = (&th.p, &th.q, &th.p_prime, &th.q_prime);
    let l = BigInt::from(ell);
    let neg = qp.is_negative();
    let (num, den) = match sigma {
        Quadrant::I if !neg => (p * &l - pp, q * &l - qp),
        Quadrant::I => (p * &l - p - pp, q * &l - q - qp),
        _ if !neg => (p * &l + pp, q * &l + qp),
        _ => (p * &l + p + pp, q * &l + q + qp),
    };
    let theta = Rational::new(num, den)?;
    let (i, j) = pencil_params(zeta, sigma, ell)?;
    let rho = &theta * i - j;
    point(theta, rho)
}

/// The Farey point of the `ell`-th pencil curve other than `zeta` (`ell >= 1`).
pub fn pencil_endpoint(zeta: &CriticalPoint, sigma: Quadrant, ell: u64) -> Result<PencilEndpoint> {
    require_quadrant(zeta, sigma)?;
    if ell == 0 {
        return Err(Error::Domain("pencil endpoints are defined for depth >= 1 only".into()));
    }
    let l = i64::try_from(ell).map_err(|_| Error::Overflow(ell.to_string()))?;
    if zeta.is_corner() {
        let (t, r) = match (zeta.theta.is_zero(), zeta.rho.is_zero()) {
            (true, true) => (Rational::frac(1, l), Rational::one()),
            (false, true) => (Rational::frac(l, l + 1), Rational::one()),
            (true, false) => (Rational::frac(1, l), Rational::zero()),
            (false, false) => (Rational::frac(l, l + 1), Rational::zero()),
        };
        return Ok(PencilEndpoint { point: point(t, r)?, provenance: Provenance::Corner });
    }
    if zeta.rho.is_zero() {
        let point = row_zero_endpoint(zeta, sigma, ell)?;
        return Ok(PencilEndpoint { point, provenance: Provenance::BoundaryRow });
    }
    if zeta.rho.is_one() {
        // point reflection (theta, rho) -> (1 - theta, 1 - rho) maps chains to
        // chains of the same slope: III(ell) <- I(ell + 1), IV(ell) <- II(ell - 1)
        let mirrored = reflect(zeta)?;
        let image = match sigma {
            Quadrant::III => row_zero_endpoint(&mirrored, Quadrant::I, ell + 1)?,
            _ => row_zero_endpoint(&mirrored, Quadrant::II, ell - 1)?,
        };
        return Ok(PencilEndpoint { point: reflect(&image)?, provenance: Provenance::BoundaryRow });
    }

    let (i, j) = pencil_params(zeta, sigma, ell)?;
    let q = zeta.q();
    let one_over_q = Rational::new(1, q.clone())?;
    let lower_row = zeta.rho == one_over_q;
    let upper_row = zeta.rho == Rational::one() - &one_over_q;
    if lower_row && !sigma.is_upper() {
        let theta = Rational::frac(j, i);
        return Ok(PencilEndpoint { point: point(theta, Rational::zero())?, provenance: Provenance::BoundarySegment });
    }
    if upper_row && sigma.is_upper() {
        let theta = Rational::frac(j + 1, i);
        return Ok(PencilEndpoint { point: point(theta, Rational::one())?, provenance: Provenance::BoundarySegment });
    }

    let ctx = point_context(zeta)?;
    let (p, q, pp, qp) = (ctx.p(), ctx.q(), ctx.p_prime(), ctx.q_prime());
    let l = BigInt::from(ell);
    let (sign, k) = match sigma {
        Quadrant::I => (-1, &l + &ctx.t_plus + ctx.tau_plus.floor()),
        Quadrant::II => (1, &l - &ctx.t_minus + (-&ctx.tau_plus).floor()),
        Quadrant::III => (1, &l + &ctx.t_plus + ctx.tau_minus.floor()),
        Quadrant::IV => (-1, &l - &ctx.t_minus + (-&ctx.tau_minus).floor()),
    };
    let num = pp * sign + p * &k;
    let den = qp * sign + q * &k;
    let theta = Rational::new(num, den)?;
    let rho = &theta * i - j;
    Ok(PencilEndpoint { point: point(theta, rho)?, provenance: Provenance::FareyTable })
}

/// Affine parameters of the line carrying the far endpoints of pencil
/// `sigma`: a dominant line of `zeta`'s upper (I, II) or lower (III, IV)
/// neighbour, or one of the segments `rho = 0` (`(0, 0)`), `rho = 1`
/// (`(0, -1)`) on the rows next to the boundary and at the corners.
pub fn endpoint_line(zeta: &CriticalPoint, sigma: Quadrant) -> Result<(i64, i64)> {
    require_quadrant(zeta, sigma)?;
    if zeta.is_corner() {
        return Ok(if zeta.rho.is_zero() { (0, -1) } else { (0, 0) });
    }
    let one_over_q = Rational::new(1, zeta.q().clone())?;
    if !zeta.on_boundary_row() {
        if zeta.rho == one_over_q && !sigma.is_upper() {
            return Ok((0, 0));
        }
        if zeta.rho == Rational::one() - &one_over_q && sigma.is_upper() {
            return Ok((0, -1));
        }
    }
    let (up, down) = neighbours(zeta)?;
    let nb = if sigma.is_upper() { up } else { down };
    let nb = nb.ok_or_else(|| Error::Consistency(format!("pencil {sigma} at {zeta} has no neighbour")))?;
    Ok(dominant_params(&nb)?.by_sign(sigma.sign()))
}

/// Bold slopes `q{τ⁺}`, `-q{-τ⁺}`, `q{τ⁻}`, `-q{-τ⁻}` of the neighbours'
/// dominant lines, for interior points.
pub fn bold_slope(zeta: &CriticalPoint, sigma: Quadrant) -> Result<i64> {
    let ctx = point_context(zeta)?;
    let q = Rational::from(ctx.q().clone());
    let v = match sigma {
        Quadrant::I => &q * ctx.tau_plus.fract(),
        Quadrant::II => -(&q * (-&ctx.tau_plus).fract()),
        Quadrant::III => &q * ctx.tau_minus.fract(),
        Quadrant::IV => -(&q * (-&ctx.tau_minus).fract()),
    };
    integral(&v, "bold slope")
}

/// Words `(u+, u-)` of the dominant curves of `zeta`.
pub fn dominant_words(zeta: &CriticalPoint) -> Result<(Word, Word)> {
    let q = usize::try_from(zeta.q()).map_err(|_| Error::Overflow(zeta.q().to_string()))?;
    if zeta.rho.is_zero() {
        return Ok((Word::empty(), Word::repeat(Letter::B, q)));
    }
    if zeta.rho.is_one() {
        return Ok((Word::repeat(Letter::A, q), Word::empty()));
    }
    let dom = dominant_params(zeta)?;
    let word_of = |(i, j): (i64, i64)| -> Result<Word> {
        let d = decompose(&Chain::new(i, j)?)?;
        d.curve_at(&zeta.theta)
            .map(|c| c.word.clone())
            .ok_or_else(|| Error::Consistency(format!("{zeta} is not interior to its dominant chain L({i},{j})")))
    };
    Ok((word_of(dom.plus)?, word_of(dom.minus)?))
}

/// Word of the `ell`-th curve of pencil `sigma`:
/// `u+(v-u+)^l`, `u-(u+v-)^l`, `u+(u-v+)^l`, `u-(v+u-)^l` for I..IV, where
/// `v±` is `u±` with its first letter switched.
pub fn pencil_word(zeta: &CriticalPoint, sigma: Quadrant, ell: u64) -> Result<Word> {
    require_quadrant(zeta, sigma)?;
    let (up, um) = dominant_words(zeta)?;
    let (vp, vm) = (up.first_switched(), um.first_switched());
    let l = usize::try_from(ell).map_err(|_| Error::Overflow(ell.to_string()))?;
    Ok(match sigma {
        Quadrant::I => up.concat(&vm.concat(&up).power(l)),
        Quadrant::II => um.concat(&up.concat(&vm).power(l)),
        Quadrant::III => up.concat(&um.concat(&vp).power(l)),
        Quadrant::IV => um.concat(&vp.concat(&um).power(l)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproachStep {
    pub k: usize,
    pub theta: Rational,
    pub rho: Rational,
    /// `rho` left the unit interval; such early terms are skipped.
    pub valid: bool,
    /// `(i, j)` is one of the two dominant pairs at this point.
    pub dominant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproachSequence {
    pub i: i64,
    pub j: i64,
    pub target: Rational,
    pub steps: Vec<ApproachStep>,
}

impl ApproachSequence {
    /// First index from which every step is dominant, if any.
    pub fn dominant_from(&self) -> Option<usize> {
        let tail = self.steps.iter().rev().take_while(|s| s.dominant).count();
        (tail > 0).then(|| self.steps.len() - tail)
    }
}

/// `zeta_k = (p_k/q_k, (i p_k - j q_k)/q_k)`, `k = 0..=K`, with `j = floor(i theta)`
/// taken from the value of the whole coefficient list.
pub fn approach_sequence(coefficients: &[u64], i: i64, big_k: usize) -> Result<ApproachSequence> {
    if coefficients.len() < big_k + 2 {
        return Err(Error::Domain(format!(
            "approach to depth {big_k} needs at least {} coefficients, got {}",
            big_k + 2,
            coefficients.len()
        )));
    }
    let cf = ContinuedFraction::from_coefficients(coefficients.iter().map(|&a| BigInt::from(a)).collect());
    let target = cf.value();
    if !target.in_unit_interval() {
        return Err(Error::OutOfUnitInterval { what: "continued-fraction target", value: target });
    }
    let j = to_i64(&(&target * i).floor())?;
    let mut steps = Vec::with_capacity(big_k + 1);
    for k in 0..=big_k {
        let (pk, qk) = cf.convergent(k).expect("k < number of coefficients");
        let theta = Rational::new(pk.clone(), qk.clone())?;
        let rho = Rational::new(pk * i - qk * j, qk.clone())?;
        let valid = theta.in_unit_interval() && rho.in_unit_interval();
        let dominant = valid && {
            let zeta = CriticalPoint::new(theta.clone(), rho.clone())?;
            let dom = dominant_params(&zeta)?;
            dom.plus == (i, j) || dom.minus == (i, j)
        };
        steps.push(ApproachStep { k, theta, rho, valid, dominant });
    }
    Ok(ApproachSequence { i, j, target, steps })
}

/// Context values in machine-sized integers, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextSummary {
    pub n: usize,
    pub p_prime: i64,
    pub q_prime: i64,
    /// `u = q/s`
    pub u: i64,
    pub tau: Rational,
    pub tau_plus: Rational,
    pub tau_minus: Rational,
    pub t_plus: i64,
    pub t_minus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub zeta: CriticalPoint,
    pub corner: bool,
    /// Absent on the rows `rho = 0, 1`.
    pub context: Option<ContextSummary>,
    pub dominant: DominantParams,
    pub up: Option<CriticalPoint>,
    pub down: Option<CriticalPoint>,
    pub pencils: Vec<Quadrant>,
}

pub fn point_report(zeta: &CriticalPoint) -> Result<PointReport> {
    let context = if zeta.on_boundary_row() {
        None
    } else {
        let c = point_context(zeta)?;
        let u = zeta.q() / zeta.rho.denom();
        Some(ContextSummary {
            n: c.n(),
            p_prime: to_i64(c.p_prime())?,
            q_prime: to_i64(c.q_prime())?,
            u: to_i64(&u)?,
            t_plus: to_i64(&c.t_plus)?,
            t_minus: to_i64(&c.t_minus)?,
            tau: c.tau,
            tau_plus: c.tau_plus,
            tau_minus: c.tau_minus,
        })
    };
    let (up, down) = neighbours(zeta)?;
    Ok(PointReport {
        zeta: zeta.clone(),
        corner: zeta.is_corner(),
        context,
        dominant: dominant_params(zeta)?,
        up,
        down,
        pencils: available_quadrants(zeta),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilRow {
    pub sigma: Quadrant,
    pub ell: u64,
    pub chain: (i64, i64),
    /// Absent for `ell = 0`.
    pub endpoint: Option<PencilEndpoint>,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilTable {
    pub zeta: CriticalPoint,
    pub corner: bool,
    pub depth: u64,
    pub u_plus: Word,
    pub u_minus: Word,
    pub rows: Vec<PencilRow>,
}

/// Every available pencil of `zeta` for `0 <= ell <= depth`.
pub fn pencil_table(zeta: &CriticalPoint, depth: u64) -> Result<PencilTable> {
    let (u_plus, u_minus) = dominant_words(zeta)?;
    let mut rows = Vec::new();
    for sigma in available_quadrants(zeta) {
        for ell in 0..=depth {
            rows.push(PencilRow {
                sigma,
                ell,
                chain: pencil_params(zeta, sigma, ell)?,
                endpoint: if ell == 0 { None } else { Some(pencil_endpoint(zeta, sigma, ell)?) },
                word: pencil_word(zeta, sigma, ell)?,
            });
        }
    }
    Ok(PencilTable { zeta: zeta.clone(), corner: zeta.is_corner(), depth, u_plus, u_minus, rows })
}
