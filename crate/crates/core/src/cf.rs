//! Continued fractions of rationals in `[0, 1]`.
//!
//! A rational has two finite expansions. [`ContinuedFraction::of`] always
//! picks the one whose last coefficient is 1, which fixes the index `n` of
//! the last convergent `p_n/q_n`. The other expansion is available through
//! [`ContinuedFraction::with_last_coefficient_above_one`] for cross-checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    coefficients: Vec<BigInt>,
    convergents: Vec<(BigInt, BigInt)>,
}

impl ContinuedFraction {
    /// Expansion of `x` with last coefficient 1: `0 = [0]`, `1 = [0; 1]`.
    pub fn of(x: &Rational) -> Result<Self> {
        let mut coefficients = euclid_coefficients(x)?;
        if x.is_one() {
            coefficients = vec![BigInt::zero(), BigInt::one()];
        } else if coefficients.len() >= 2 {
            let last = coefficients.last_mut().expect("non-empty");
            if !last.is_one() {
                *last -= 1;
                coefficients.push(BigInt::one());
            }
        }
        Ok(Self::from_coefficients(coefficients))
    }

    /// Expansion of `x` whose last coefficient exceeds 1 (the Euclid output).
    /// Only meaningful for `0 < x < 1`.
    pub fn with_last_coefficient_above_one(x: &Rational) -> Result<Self> {
        Ok(Self::from_coefficients(euclid_coefficients(x)?))
    }

    /// Builds the convergents of an arbitrary coefficient list `[a0; a1, ...]`.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        let mut convergents = Vec::with_capacity(coefficients.len());
        let (mut p2, mut q2) = (BigInt::zero(), BigInt::one());
        let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
        for a in &coefficients {
            let p = a * &p1 + &p2;
            let q = a * &q1 + &q2;
            convergents.push((p.clone(), q.clone()));
            p2 = std::mem::replace(&mut p1, p);
            q2 = std::mem::replace(&mut q1, q);
        }
        ContinuedFraction { coefficients, convergents }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn convergents(&self) -> &[(BigInt, BigInt)] {
        &self.convergents
    }

    /// Index of the last convergent.
    pub fn n(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `(p_k, q_k)`.
    pub fn convergent(&self, k: usize) -> Option<&(BigInt, BigInt)> {
        self.convergents.get(k)
    }

    pub fn convergent_value(&self, k: usize) -> Option<Rational> {
        self.convergent(k)
            .map(|(p, q)| Rational::new(p.clone(), q.clone()).expect("convergent denominators are positive"))
    }

    pub fn value(&self) -> Rational {
        self.convergent_value(self.n()).expect("at least one coefficient")
    }

    /// `(p', q') = (-1)^(n-1) (p_{n-1}, q_{n-1})`, so that `p q' - q p' = 1`.
    /// Requires `n >= 1`.
    pub fn signed_penultimate(&self) -> Result<(BigInt, BigInt)> {
        let n = self.n();
        if n == 0 {
            return Err(Error::Domain("the expansion [0] has no penultimate convergent".into()));
        }
        let (p, q) = &self.convergents[n - 1];
        if (n - 1).is_even() {
            Ok((p.clone(), q.clone()))
        } else {
            Ok((-p, -q))
        }
    }
}

fn euclid_coefficients(x: &Rational) -> Result<Vec<BigInt>> {
    if !x.in_unit_interval() {
        return Err(Error::OutOfUnitInterval { what: "continued fraction argument", value: x.clone() });
    }
    let mut coefficients = Vec::new();
    let (mut a, mut b) = (x.numer().clone(), x.denom().clone());
    while !b.is_zero() {
        let (quot, rem) = a.div_mod_floor(&b);
        debug_assert!(!quot.is_negative());
        coefficients.push(quot);
        a = std::mem::replace(&mut b, rem);
    }
    Ok(coefficients)
}
