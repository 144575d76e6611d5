//! Chains `L(i,j) = { rho = i theta - j }` and their decomposition into
//! critical curves separated by Farey points.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::farey_sequence;
use crate::orbit::{brute_force_critical_word, CriticalPoint, Sign};
use crate::rational::{to_i64, Rational};
use crate::word::{Letter, Word};

/// A chain with validated affine parameters and its `theta` range.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub i: i64,
    pub j: i64,
    pub theta_minus: Rational,
    pub theta_plus: Rational,
}

/// `j` in `J(i)`.
pub fn is_affine_pair(i: i64, j: i64) -> bool {
    match i {
        0 => j == 0 || j == -1,
        i if i > 0 => (0..i).contains(&j),
        i => (i..=-1).contains(&j),
    }
}

impl Chain {
    pub fn new(i: i64, j: i64) -> Result<Chain> {
        if !is_affine_pair(i, j) {
            return Err(Error::InvalidChain { i, j });
        }
        let (theta_minus, theta_plus) = if i == 0 {
            (Rational::zero(), Rational::one())
        } else {
            let lo = if i > 0 { Rational::frac(j, i) } else { Rational::frac(j + 1, i) };
            let hi = &lo + Rational::frac(1, i.abs());
            (lo, hi)
        };
        Ok(Chain { i, j, theta_minus, theta_plus })
    }

    /// `None` for the horizontal chains `i = 0`, which carry both signs.
    pub fn sign(&self) -> Option<Sign> {
        Sign::of(self.i)
    }

    /// `|i|`, the length of every boundary word on the chain.
    pub fn order(&self) -> u64 {
        self.i.unsigned_abs()
    }

    pub fn rho_at(&self, theta: &Rational) -> Rational {
        theta * self.i - self.j
    }

    pub fn contains_theta(&self, theta: &Rational) -> bool {
        &self.theta_minus <= theta && theta <= &self.theta_plus
    }

    /// `(theta, rho)` satisfies the chain equation and lies in its range.
    pub fn contains(&self, theta: &Rational, rho: &Rational) -> bool {
        self.contains_theta(theta) && &self.rho_at(theta) == rho
    }

    pub fn start(&self) -> (Rational, Rational) {
        (self.theta_minus.clone(), self.rho_at(&self.theta_minus))
    }

    pub fn end(&self) -> (Rational, Rational) {
        (self.theta_plus.clone(), self.rho_at(&self.theta_plus))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyPoint {
    pub theta: Rational,
    pub rho: Rational,
    /// Word of length `|i|` at the point, in the chain's sign.
    pub boundary_word: Word,
    pub critical_word: Word,
}

/// An open critical curve `theta_lo < theta < theta_hi` on a chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub theta_lo: Rational,
    pub theta_hi: Rational,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDecomposition {
    pub chain: Chain,
    pub farey_points: Vec<FareyPoint>,
    pub curves: Vec<Curve>,
}

impl ChainDecomposition {
    /// The curve whose open interval contains `theta`. A chain without Farey
    /// points is a single closed curve.
    pub fn curve_at(&self, theta: &Rational) -> Option<&Curve> {
        if self.farey_points.is_empty() {
            return self.curves.first().filter(|_| self.chain.contains_theta(theta));
        }
        self.curves.iter().find(|c| &c.theta_lo < theta && theta < &c.theta_hi)
    }

    pub fn farey_point_at(&self, theta: &Rational) -> Option<&FareyPoint> {
        self.farey_points.binary_search_by(|fp| fp.theta.cmp(theta)).ok().map(|k| &self.farey_points[k])
    }
}

fn set_positions(word: &mut Word, n: usize, q: usize, residue: usize, from: usize) {
    let mut k = residue % q;
    while k < from {
        k += q;
    }
    while k < n {
        word.set(k, Letter::A);
        k += q;
    }
}

fn as_usize(x: &BigInt) -> usize {
    usize::try_from(x).expect("Farey denominators on a chain are bounded by |i|")
}

/// Splits a chain into curves and Farey points.
///
/// Words are built left to right from `b^n` at `theta_minus`: leaving a Farey
/// fraction `p/q` turns the letters at positions `k ≡ n (mod q)` into `a`,
/// arriving at one turns those at `k ≡ 0 (mod q)`, `k >= 1`, into `a`, and the
/// first curve takes every `k ≡ 0 (mod q)` including `k = 0`. Negative chains
/// follow the same schedule with the two letters exchanged.
pub fn decompose(chain: &Chain) -> Result<ChainDecomposition> {
    if chain.i == 0 {
        return Ok(ChainDecomposition {
            chain: chain.clone(),
            farey_points: Vec::new(),
            curves: vec![Curve { theta_lo: Rational::zero(), theta_hi: Rational::one(), word: Word::empty() }],
        });
    }
    let n = chain.order();
    let len = usize::try_from(n).map_err(|_| Error::Overflow(n.to_string()))?;
    let fractions = farey_sequence(n, &chain.theta_minus, &chain.theta_plus)?;
    let last = fractions.len() - 1;

    let mut boundary_words = Vec::with_capacity(fractions.len());
    let mut curve_words = Vec::with_capacity(last);
    let mut current = Word::repeat(Letter::B, len);
    for (t, theta) in fractions.iter().enumerate() {
        let q = as_usize(theta.denom());
        if t > 0 {
            set_positions(&mut current, len, q, 0, 1);
        }
        boundary_words.push(current.clone());
        if t == 0 {
            set_positions(&mut current, len, q, 0, 0);
        } else if t < last {
            set_positions(&mut current, len, q, len, 0);
        } else {
            break;
        }
        curve_words.push(current.clone());
    }

    let negative = chain.i < 0;
    let orient = |w: Word| if negative { w.swapped() } else { w };

    let mut farey_points = Vec::with_capacity(fractions.len());
    for (t, theta) in fractions.iter().enumerate() {
        let rho = chain.rho_at(theta);
        let boundary_word = orient(boundary_words[t].clone());
        let critical_word = if rho.is_zero() || rho.is_one() {
            Word::empty()
        } else {
            // the shortest same-sign solution has length |i| mod q
            let q = as_usize(theta.denom());
            boundary_word.prefix(len % q)
        };
        farey_points.push(FareyPoint { theta: theta.clone(), rho, boundary_word, critical_word });
    }
    let curves = curve_words
        .into_iter()
        .enumerate()
        .map(|(t, w)| Curve { theta_lo: fractions[t].clone(), theta_hi: fractions[t + 1].clone(), word: orient(w) })
        .collect();
    Ok(ChainDecomposition { chain: chain.clone(), farey_points, curves })
}

/// Number `M` of critical curves on the chain.
pub fn curve_count(chain: &Chain) -> Result<u64> {
    if chain.i == 0 {
        return Ok(1);
    }
    let f = farey_sequence(chain.order(), &chain.theta_minus, &chain.theta_plus)?;
    Ok(f.len() as u64 - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Congruence {
    /// `x ≡ 0 (mod q)`
    Zero,
    /// `x ≡ n (mod q)`
    Order,
    /// `q | n`, so both congruences are the same.
    Coincident,
}

/// Which congruences of which fractions produced each residue mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCover {
    pub n: u64,
    pub m: u64,
    pub fractions: Vec<Rational>,
    /// Indexed by residue.
    pub witnesses: Vec<Vec<(Rational, Congruence)>>,
}

/// Solves `x ≡ n` and `x ≡ 0 (mod q)` over `0..n` for every `p/q` in
/// `F_n ∩ [m/n, (m+1)/n]` and checks the solutions cover every residue,
/// non-zero ones exactly once.
pub fn residue_cover(n: u64, m: u64) -> Result<ResidueCover> {
    if n == 0 || m >= n {
        return Err(Error::Domain(format!("residue cover needs n > m >= 0, got n = {n}, m = {m}")));
    }
    let lo = Rational::frac(m as i64, n as i64);
    let hi = Rational::frac(m as i64 + 1, n as i64);
    let fractions = farey_sequence(n, &lo, &hi)?;
    let mut witnesses: Vec<Vec<(Rational, Congruence)>> = vec![Vec::new(); n as usize];
    for f in &fractions {
        let q = u64::try_from(f.denom()).map_err(|_| Error::Overflow(f.denom().to_string()))?;
        let congruences: &[(u64, Congruence)] = if n.is_multiple_of(q) {
            &[(0, Congruence::Coincident)]
        } else {
            &[(0, Congruence::Zero), (n % q, Congruence::Order)]
        };
        for &(res, kind) in congruences {
            for x in (res..n).step_by(q as usize) {
                witnesses[x as usize].push((f.clone(), kind));
            }
        }
    }
    for (x, w) in witnesses.iter().enumerate() {
        if w.is_empty() || (x != 0 && w.len() != 1) {
            return Err(Error::Consistency(format!("residue {x} mod {n} (m = {m}) solved by {} congruences", w.len())));
        }
    }
    Ok(ResidueCover { n, m, fractions, witnesses })
}

/// The three equivalent characterisations of a Farey point, evaluated separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyPointTests {
    /// `theta` is a Farey fraction of the chain.
    pub is_farey: bool,
    /// The same-sign critical word at the point is shorter than `|i|`.
    pub short_word: bool,
    /// Some chain with smaller `|i|` of the same sign crosses here without a Farey point.
    pub transversal: bool,
    /// `(i', j')` from `i' = i - sign(i) c q`, `j' = j - sign(i) c p`, `c = floor(|i| / q)`.
    pub witness: Option<(i64, i64)>,
}

/// Search for a same-sign (or horizontal) chain with `|i'| < |i|` through the
/// point on which the point is not a Farey point.
fn transversal_exists(chain: &Chain, theta: &Rational, rho: &Rational) -> bool {
    let n = chain.i.abs();
    let den = theta.denom().clone();
    let candidates = (0..n).map(|m| m * chain.i.signum());
    candidates.into_iter().any(|ip| {
        let Some(jp) = (theta * ip - rho).to_bigint() else { return false };
        let Ok(jp) = to_i64(&jp) else { return false };
        let Ok(other) = Chain::new(ip, jp) else { return false };
        other.contains(theta, rho) && (ip == 0 || den > BigInt::from(ip.abs()))
    })
}

pub fn farey_point_tests(chain: &Chain, zeta: &CriticalPoint) -> Result<FareyPointTests> {
    let (theta, rho) = (&zeta.theta, &zeta.rho);
    if !chain.contains(theta, rho) {
        return Err(Error::NotOnChain { i: chain.i, j: chain.j, theta: theta.clone(), rho: rho.clone() });
    }
    let Some(sign) = chain.sign() else {
        return Ok(FareyPointTests { is_farey: false, short_word: false, transversal: false, witness: None });
    };
    let n = chain.i.abs();
    let is_farey = theta.denom() <= &BigInt::from(n);
    let short_word = (brute_force_critical_word(zeta, sign)?.word.len() as i64) < n;
    let transversal = transversal_exists(chain, theta, rho);

    let witness = if is_farey {
        let q = to_i64(theta.denom())?;
        let p = to_i64(theta.numer())?;
        let c = n / q;
        let s = sign.as_i64();
        Some((chain.i - s * c * q, chain.j - s * c * p))
    } else {
        None
    };
    if is_farey != short_word || short_word != transversal {
        return Err(Error::Consistency(format!(
            "Farey point tests disagree on {chain} at {zeta}: farey={is_farey}, short={short_word}, transversal={transversal}"
        )));
    }
    Ok(FareyPointTests { is_farey, short_word, transversal, witness })
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

    #[test]
    fn chain_ranges() {
        let c = Chain::new(7, 5).unwrap();
        assert_eq!((c.theta_minus.clone(), c.theta_plus.clone()), (r("5/7"), r("6/7")));
        let c = Chain::new(0, 0).unwrap();
        assert_eq!((c.theta_minus.clone(), c.theta_plus.clone()), (r("0"), r("1")));
        assert_eq!(c.rho_at(&r("1/3")), r("0"));
        let c = Chain::new(-1, -1).unwrap();
        assert_eq!((c.theta_minus.clone(), c.theta_plus.clone()), (r("0"), r("1")));
        assert_eq!(c.rho_at(&r("1/4")), r("3/4"));
    }

    #[test]
    fn affine_bounds_are_enforced() {
        for (i, j) in [(7, 7), (7, -1), (0, 1), (0, -2), (-3, 0), (-3, -4)] {
            assert_eq!(Chain::new(i, j), Err(Error::InvalidChain { i, j }));
        }
    }

    #[test]
    fn chain_seven_five() {
        let d = decompose(&Chain::new(7, 5).unwrap()).unwrap();
        let thetas: Vec<_> = d.farey_points.iter().map(|f| f.theta.to_string()).collect();
        assert_eq!(thetas, ["5/7", "3/4", "4/5", "5/6", "6/7"]);
        let boundary: Vec<_> = d.farey_points.iter().map(|f| f.boundary_word.clone()).collect();
        assert_eq!(boundary, [w("b^7"), w("ab^3ab^2"), w("ab^2a^3b"), w("aba^5"), w("a^7")]);
        let curves: Vec<_> = d.curves.iter().map(|c| c.word.clone()).collect();
        assert_eq!(curves, [w("ab^6"), w("ab^2a^2b^2"), w("aba^4b"), w("a^7")]);
        let critical: Vec<_> = d.farey_points.iter().map(|f| f.critical_word.clone()).collect();
        assert_eq!(critical, [w(""), w("ab^2"), w("ab"), w("a"), w("")]);
    }

    #[test]
    fn unit_chains() {
        let d = decompose(&Chain::new(1, 0).unwrap()).unwrap();
        assert_eq!(d.farey_points.len(), 2);
        assert_eq!(
            (d.farey_points[0].boundary_word.clone(), d.farey_points[1].boundary_word.clone()),
            (w("b"), w("a"))
        );
        assert_eq!(d.curves[0].word, w("a"));

        let d = decompose(&Chain::new(-1, -1).unwrap()).unwrap();
        assert_eq!(
            (d.farey_points[0].boundary_word.clone(), d.farey_points[1].boundary_word.clone()),
            (w("a"), w("b"))
        );
        assert_eq!(d.curves[0].word, w("b"));
    }

    #[test]
    fn horizontal_chains_are_one_curve() {
        let d = decompose(&Chain::new(0, -1).unwrap()).unwrap();
        assert!(d.farey_points.is_empty());
        assert_eq!(d.curves.len(), 1);
        assert!(d.curves[0].word.is_empty());
        assert!(d.curve_at(&r("0")).is_some());
    }

    #[test]
    fn curve_counts() {
        assert_eq!(curve_count(&Chain::new(7, 5).unwrap()).unwrap(), 4);
        assert_eq!(curve_count(&Chain::new(7, 3).unwrap()).unwrap(), 2);
        for n in 1..30 {
            assert_eq!(curve_count(&Chain::new(n, 0).unwrap()).unwrap(), 1);
            assert_eq!(curve_count(&Chain::new(n, n - 1).unwrap()).unwrap(), 1);
            assert_eq!(curve_count(&Chain::new(-n, -1).unwrap()).unwrap(), 1);
            if n >= 3 && n % 2 == 1 {
                assert_eq!(curve_count(&Chain::new(n, (n - 1) / 2).unwrap()).unwrap(), 2);
            }
        }
        assert_eq!(curve_count(&Chain::new(0, 0).unwrap()).unwrap(), 1);
    }

    #[test]
    fn residue_examples() {
        let cover = residue_cover(7, 5).unwrap();
        let dens: Vec<_> = cover.fractions.iter().map(|f| f.denom().to_string()).collect();
        assert_eq!(dens, ["7", "4", "5", "6", "7"]);
        assert_eq!(cover.witnesses[3], vec![(r("3/4"), Congruence::Order)]);
        assert_eq!(cover.witnesses[1], vec![(r("5/6"), Congruence::Order)]);

        let cover = residue_cover(2, 0).unwrap();
        assert_eq!(cover.fractions, [r("0"), r("1/2")]);
        assert_eq!(cover.witnesses[1], vec![(r("0"), Congruence::Coincident)]);

        let cover = residue_cover(3, 1).unwrap();
        assert_eq!(cover.fractions, [r("1/3"), r("1/2"), r("2/3")]);
        assert!(cover.witnesses[1..].iter().all(|w| w.len() == 1));

        assert!(residue_cover(3, 3).is_err());
    }

    #[test]
    fn lemma_examples() {
        let c75 = Chain::new(7, 5).unwrap();
        let t = farey_point_tests(&c75, &CriticalPoint::new(r("3/4"), r("1/4")).unwrap()).unwrap();
        assert!(t.is_farey && t.short_word && t.transversal);
        assert_eq!(t.witness, Some((3, 2)));

        let t = farey_point_tests(&c75, &CriticalPoint::new(r("5/7"), r("0")).unwrap()).unwrap();
        assert!(t.is_farey && t.short_word && t.transversal);
        assert_eq!(t.witness, Some((0, 0)));

        let c32 = Chain::new(3, 2).unwrap();
        let t = farey_point_tests(&c32, &CriticalPoint::new(r("7/8"), r("5/8")).unwrap()).unwrap();
        assert!(!t.is_farey && !t.short_word && !t.transversal);
        assert_eq!(t.witness, None);
    }

    #[test]
    fn lemma_rejects_points_off_the_chain() {
        let c = Chain::new(3, 2).unwrap();
        let off = CriticalPoint::new(r("7/8"), r("1/8")).unwrap();
        assert!(matches!(farey_point_tests(&c, &off), Err(Error::NotOnChain { .. })));
    }
}
