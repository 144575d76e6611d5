//! Direct simulation of the rotation `x -> {x + theta}` with the partition
//! `I_a = [0, rho)`, `I_b = [rho, 1)`.
//!
//! Everything here works by iterating the map, never by closed forms, so it
//! serves as the reference the geometric constructions are checked against.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{to_i64, Rational};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn of(i: i64) -> Option<Sign> {
        match i.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// A rational parameter pair `(theta, rho)` in the unit square whose boundary
/// points `0` and `rho` share an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub theta: Rational,
    pub rho: Rational,
}

impl CriticalPoint {
    /// Validates the unit square and criticality: `rho` in `{0, 1}` or
    /// `den(rho)` divides `den(theta)`.
    pub fn new(theta: Rational, rho: Rational) -> Result<Self> {
        if !theta.in_unit_interval() {
            return Err(Error::OutOfUnitInterval { what: "theta", value: theta });
        }
        if !rho.in_unit_interval() {
            return Err(Error::OutOfUnitInterval { what: "rho", value: rho });
        }
        let boundary = rho.is_zero() || rho.is_one();
        if !boundary && !theta.denom().is_multiple_of(rho.denom()) {
            return Err(Error::NotCritical { theta, rho });
        }
        Ok(CriticalPoint { theta, rho })
    }

    /// Denominator `q` of `theta`.
    pub fn q(&self) -> &BigInt {
        self.theta.denom()
    }

    pub fn p(&self) -> &BigInt {
        self.theta.numer()
    }

    pub fn on_boundary_row(&self) -> bool {
        self.rho.is_zero() || self.rho.is_one()
    }

    pub fn is_corner(&self) -> bool {
        self.on_boundary_row() && (self.theta.is_zero() || self.theta.is_one())
    }
}

impl fmt::Display for CriticalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.theta, self.rho)
    }
}

/// The first `len` symbols of the orbit of `x0`.
pub fn code_orbit(theta: &Rational, rho: &Rational, x0: &Rational, len: usize) -> Result<Word> {
    for (what, v) in [("theta", theta), ("rho", rho), ("x0", x0)] {
        if !v.in_unit_interval() {
            return Err(Error::OutOfUnitInterval { what, value: v.clone() });
        }
    }
    let mut x = x0.fract();
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push(if &x < rho { Letter::A } else { Letter::B });
        x = (&x + theta).fract();
    }
    Ok(Word::from_letters(letters))
}

/// A critical word with the solution `(i, j)` of `i theta = j + rho` it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalWord {
    pub word: Word,
    pub i: i64,
    pub j: i64,
}

/// Critical word of the given sign found by scanning orbit lengths `1..=q`.
///
/// On `rho = 0` and `rho = 1` the boundary points coincide on the circle and
/// the centre is empty for either sign; the trivial solutions `(0, 0)` and
/// `(0, -1)` are returned.
pub fn brute_force_critical_word(zeta: &CriticalPoint, sign: Sign) -> Result<CriticalWord> {
    if zeta.rho.is_zero() {
        return Ok(CriticalWord { word: Word::empty(), i: 0, j: 0 });
    }
    if zeta.rho.is_one() {
        return Ok(CriticalWord { word: Word::empty(), i: 0, j: -1 });
    }
    let q = to_i64(zeta.q())?;
    for m in 1..=q {
        let i = sign.as_i64() * m;
        let v = &zeta.theta * i - &zeta.rho;
        if let Some(j) = v.to_bigint() {
            let start = match sign {
                Sign::Positive => Rational::zero(),
                Sign::Negative => zeta.rho.clone(),
            };
            let word = code_orbit(&zeta.theta, &zeta.rho, &start, m as usize)?;
            return Ok(CriticalWord { word, i, j: to_i64(&j)? });
        }
    }
    Err(Error::NotCritical { theta: zeta.theta.clone(), rho: zeta.rho.clone() })
}

/// Brute-force criticality test. The witness is the trivial solution on the
/// rows `rho = 0, 1` and otherwise the solution with the least positive `i`.
pub fn is_critical(theta: &Rational, rho: &Rational) -> Result<Option<(i64, i64)>> {
    for (what, v) in [("theta", theta), ("rho", rho)] {
        if !v.in_unit_interval() {
            return Err(Error::OutOfUnitInterval { what, value: v.clone() });
        }
    }
    if rho.is_zero() {
        return Ok(Some((0, 0)));
    }
    if rho.is_one() {
        return Ok(Some((0, -1)));
    }
    let q = to_i64(theta.denom())?;
    for i in 1..=q {
        if let Some(j) = (theta * i - rho).to_bigint() {
            return Ok(Some((i, to_i64(&j)?)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pt(t: &str, p: &str) -> CriticalPoint {
        CriticalPoint::new(r(t), r(p)).unwrap()
    }

    #[test]
    fn coding_examples() {
        assert_eq!(code_orbit(&r("3/4"), &r("1/4"), &r("0"), 3).unwrap(), w("abb"));
        assert_eq!(code_orbit(&r("3/5"), &r("2/5"), &r("0"), 5).unwrap(), w("ababb"));
        assert_eq!(code_orbit(&r("2/9"), &r("0"), &r("1/3"), 6).unwrap(), w("b^6"));
    }

    #[test]
    fn start_point_one_is_zero() {
        assert_eq!(
            code_orbit(&r("3/5"), &r("2/5"), &r("1"), 5).unwrap(),
            code_orbit(&r("3/5"), &r("2/5"), &r("0"), 5).unwrap()
        );
    }

    #[test]
    fn critical_word_examples() {
        let cw = brute_force_critical_word(&pt("3/4", "1/4"), Sign::Positive).unwrap();
        assert_eq!((cw.word, cw.i, cw.j), (w("abb"), 3, 2));
        let cw = brute_force_critical_word(&pt("3/5", "2/5"), Sign::Positive).unwrap();
        assert_eq!((cw.word, cw.i, cw.j), (w("abab"), 4, 2));
        let cw = brute_force_critical_word(&pt("3/5", "2/5"), Sign::Negative).unwrap();
        assert_eq!((cw.word, cw.i, cw.j), (w("b"), -1, -1));
    }

    #[test]
    fn boundary_rows_have_empty_centres() {
        let cw = brute_force_critical_word(&pt("2/7", "0"), Sign::Positive).unwrap();
        assert_eq!((cw.word, cw.i, cw.j), (Word::empty(), 0, 0));
        let cw = brute_force_critical_word(&pt("2/7", "1"), Sign::Negative).unwrap();
        assert_eq!((cw.word, cw.i, cw.j), (Word::empty(), 0, -1));
    }

    #[test]
    fn criticality_examples() {
        assert_eq!(is_critical(&r("3/5"), &r("2/5")).unwrap(), Some((4, 2)));
        assert_eq!(is_critical(&r("3/5"), &r("1/3")).unwrap(), None);
        assert_eq!(is_critical(&r("1/2"), &r("0")).unwrap(), Some((0, 0)));
        assert!(matches!(CriticalPoint::new(r("3/5"), r("1/3")), Err(Error::NotCritical { .. })));
        assert!(CriticalPoint::new(r("3/2"), r("0")).is_err());
    }

    #[test]
    fn divisibility_rule_matches_scan() {
        for q in 1..=24i64 {
            for p in 0..=q {
                for s in 1..=24i64 {
                    for rr in 0..=s {
                        let (theta, rho) = (Rational::frac(p, q), Rational::frac(rr, s));
                        let scanned = is_critical(&theta, &rho).unwrap().is_some();
                        assert_eq!(CriticalPoint::new(theta, rho).is_ok(), scanned);
                    }
                }
            }
        }
    }
}
