//! Self-verification: every closed-form construction checked against direct
//! orbit coding, brute-force scans or exact line intersection over a grid of
//! small denominators. Each check sweeps its cases through [`crate::sweep::map`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cf::ContinuedFraction;
use crate::chain::{curve_count, decompose, farey_point_tests, residue_cover, Chain};
use crate::error::{Error, Result};
use crate::farey::{farey_neighbours, farey_sequence};
use crate::net::{net, net_size};
use crate::orbit::{brute_force_critical_word, code_orbit, is_critical, CriticalPoint, Sign};
use crate::point::{
    all_chain_params, available_quadrants, bold_slope, dominant_params, dominant_words, endpoint_line, neighbours,
    pencil_endpoint, pencil_params, pencil_word, Quadrant,
};
use crate::rational::Rational;
use crate::sweep;
use crate::triple::{
    concurrency_oracle, floor_pattern, triple_point_farey_status, triple_points, RowKind, FLOOR_TABLE,
};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Arith,
    Oracle,
    Chain,
    Point,
    Triple,
    Net,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 6] =
        [Suite::Arith, Suite::Oracle, Suite::Chain, Suite::Point, Suite::Triple, Suite::Net];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Oracle => "oracle",
            Suite::Chain => "chain",
            Suite::Point => "point",
            Suite::Triple => "triple",
            Suite::Net => "net",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::MODULES.iter().chain(std::iter::once(&Suite::All)).find(|suite| suite.name() == s).copied().ok_or_else(
            || Error::Parse { input: s.to_string(), expected: "one of arith, oracle, chain, point, triple, net, all" },
        )
    }
}

const KEPT_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// The first few failure messages.
    pub failures: Vec<String>,
    pub millis: u64,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max_q: u64,
    pub parallel: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> u64 {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

type Outcome = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Run `f` over `cases` and tally the outcomes.
pub fn run_check<T, F>(suite: Suite, name: &str, cases: &[T], f: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync + Send,
{
    let start = Instant::now();
    let outcomes = sweep::map(cases, f);
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    CheckResult {
        suite,
        name: name.to_string(),
        passed: (cases.len() - failures.len()) as u64,
        failed: failures.len() as u64,
        failures: failures.into_iter().take(KEPT_FAILURES).collect(),
        millis: start.elapsed().as_millis() as u64,
    }
}

pub fn run(suite: Suite, max_q: u64) -> Result<VerifyReport> {
    if max_q < 2 {
        return Err(Error::Domain(format!("--max-q must be at least 2, got {max_q}")));
    }
    let suites: Vec<Suite> = if suite == Suite::All { Suite::MODULES.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(match s {
            Suite::Arith => arith_checks(max_q),
            Suite::Oracle => oracle_checks(max_q),
            Suite::Chain => chain_checks(max_q),
            Suite::Point => point_checks(max_q),
            Suite::Triple => triple_checks(max_q),
            Suite::Net => net_checks(max_q),
            Suite::All => unreachable!("expanded above"),
        });
    }
    Ok(VerifyReport { suite, max_q, parallel: sweep::is_parallel(), checks })
}

/// Reduced fractions `p/q` in `[0, 1]` with `q <= max_q`, by denominator.
pub fn fractions_up_to(max_q: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 1..=max_q as i64 {
        for p in 0..=q {
            if num_integer::gcd(p, q) == 1 {
                out.push(Rational::frac(p, q));
            }
        }
    }
    out
}

/// Every rational critical point with `den(theta) <= max_q`; `interior`
/// drops the rows `rho = 0, 1`.
pub fn critical_points(max_q: u64, interior: bool) -> Vec<CriticalPoint> {
    let mut out = Vec::new();
    for theta in fractions_up_to(max_q) {
        let q = i64::try_from(theta.denom()).expect("small denominator");
        let ks = if interior { 1..=q - 1 } else { 0..=q };
        for k in ks {
            out.push(CriticalPoint::new(theta.clone(), Rational::frac(k, q)).expect("k/q is critical for theta = p/q"));
        }
    }
    out
}

pub fn chains_up_to(max_order: u64) -> Vec<Chain> {
    net(max_order).expect("order >= 1").chains
}

/// Coding of the orbit segment that starts at the boundary point of the
/// given sign: `0` for positive chains, `rho` for negative ones.
pub fn centre_coding(theta: &Rational, rho: &Rational, sign: Sign, len: usize) -> Result<Word> {
    let start = match sign {
        Sign::Positive => Rational::zero(),
        Sign::Negative => rho.clone(),
    };
    code_orbit(theta, rho, &start, len)
}

// ---------------------------------------------------------------- arith

fn arith_checks(max_q: u64) -> Vec<CheckResult> {
    let orders: Vec<u64> = (1..=max_q).collect();
    let fractions = fractions_up_to(max_q * max_q);
    vec![
        run_check(Suite::Arith, "farey-sequence-vs-enumeration", &orders, |&n| {
            let got = lib(farey_sequence(n, &Rational::zero(), &Rational::one()))?;
            let expect: Vec<Rational> = fractions_up_to(n).into_iter().collect::<BTreeSet<_>>().into_iter().collect();
            ensure!(got == expect, "F_{n} differs from sorted enumeration");
            for w in got.windows(2) {
                let det = w[1].numer() * w[0].denom() - w[0].numer() * w[1].denom();
                ensure!(det == 1.into(), "F_{n}: {} and {} are not unimodular", w[0], w[1]);
            }
            Ok(())
        }),
        run_check(Suite::Arith, "farey-neighbours", &orders, |&n| {
            let seq = lib(farey_sequence(n, &Rational::zero(), &Rational::one()))?;
            for (k, x) in seq.iter().enumerate() {
                let (l, r) = lib(farey_neighbours(x, n))?;
                ensure!(l.as_ref() == k.checked_sub(1).map(|k| &seq[k]), "left neighbour of {x} in F_{n}");
                ensure!(r.as_ref() == seq.get(k + 1), "right neighbour of {x} in F_{n}");
            }
            Ok(())
        }),
        run_check(Suite::Arith, "continued-fractions", &fractions, |x| {
            let cf = lib(ContinuedFraction::of(x))?;
            ensure!(&cf.value() == x, "{x}: expansion does not evaluate back");
            let alt = lib(ContinuedFraction::with_last_coefficient_above_one(x))?;
            ensure!(&alt.value() == x, "{x}: alternate expansion does not evaluate back");
            let conv = cf.convergents();
            for k in 1..conv.len() {
                let det = &conv[k].0 * &conv[k - 1].1 - &conv[k - 1].0 * &conv[k].1;
                let expect: num_bigint::BigInt = if k % 2 == 1 { 1.into() } else { (-1).into() };
                ensure!(det == expect, "{x}: convergents {} and {k} not unimodular", k - 1);
            }
            if x.denom() >= &2.into() {
                let (pp, qp) = lib(cf.signed_penultimate())?;
                ensure!(x.numer() * qp - x.denom() * pp == 1.into(), "{x}: p q' - q p' != 1");
            }
            Ok(())
        }),
        run_check(Suite::Arith, "rational-text-round-trip", &fractions, |x| {
            let back: Rational = lib(x.to_string().parse())?;
            ensure!(&back == x, "{x}: display/parse");
            let json = serde_json::to_string(x).map_err(|e| e.to_string())?;
            let back: Rational = serde_json::from_str(&json).map_err(|e| e.to_string())?;
            ensure!(&back == x, "{x}: json");
            Ok(())
        }),
    ]
}

// ---------------------------------------------------------------- oracle

fn oracle_checks(max_q: u64) -> Vec<CheckResult> {
    let pairs: Vec<(Rational, Rational)> = fractions_up_to(max_q)
        .into_iter()
        .flat_map(|t| fractions_up_to(max_q).into_iter().map(move |r| (t.clone(), r)))
        .collect();
    let points = critical_points(max_q, true);
    vec![
        run_check(Suite::Oracle, "criticality-rule-vs-scan", &pairs, |(t, r)| {
            let scanned = lib(is_critical(t, r))?.is_some();
            ensure!(CriticalPoint::new(t.clone(), r.clone()).is_ok() == scanned, "({t}, {r})");
            Ok(())
        }),
        run_check(Suite::Oracle, "centre-hits-other-boundary-first", &points, |z| {
            for sign in [Sign::Positive, Sign::Negative] {
                let cw = lib(brute_force_critical_word(z, sign))?;
                let m = cw.i.unsigned_abs() as usize;
                ensure!(cw.word.len() == m && Sign::of(cw.i) == Some(sign), "{z} {sign}: length/sign");
                ensure!(&z.theta * cw.i - cw.j == z.rho, "{z} {sign}: (i, j) not a solution");
                let (start, target) = match sign {
                    Sign::Positive => (Rational::zero(), z.rho.clone()),
                    Sign::Negative => (z.rho.clone(), Rational::zero()),
                };
                let mut x = start;
                for step in 1..=m {
                    x = (&x + &z.theta).fract();
                    ensure!((x == target) == (step == m), "{z} {sign}: orbit reaches boundary at step {step}");
                }
                ensure!(cw.word == lib(centre_coding(&z.theta, &z.rho, sign, m))?, "{z} {sign}: word");
            }
            Ok(())
        }),
        run_check(Suite::Oracle, "coding-period", &points, |z| {
            let q = usize::try_from(z.q()).map_err(|e| e.to_string())?;
            let w = lib(code_orbit(&z.theta, &z.rho, &Rational::zero(), 3 * q))?;
            ensure!(w.has_period(q), "{z}: coding not periodic");
            Ok(())
        }),
    ]
}

// ---------------------------------------------------------------- chain

/// Every word of the decomposition against direct coding, and the Farey
/// points against `F_|i|`.
pub fn check_decomposition(chain: &Chain) -> Outcome {
    let d = lib(decompose(chain))?;
    let Some(sign) = chain.sign() else {
        ensure!(d.curves.len() == 1 && d.curves[0].word.is_empty(), "{chain}: horizontal chain");
        return Ok(());
    };
    let n = chain.order();
    let len = n as usize;
    let expect = lib(farey_sequence(n, &chain.theta_minus, &chain.theta_plus))?;
    let got: Vec<Rational> = d.farey_points.iter().map(|f| f.theta.clone()).collect();
    ensure!(got == expect, "{chain}: Farey fractions");
    ensure!(d.curves.len() + 1 == d.farey_points.len(), "{chain}: curve count");
    for fp in &d.farey_points {
        let coded = lib(centre_coding(&fp.theta, &fp.rho, sign, len))?;
        ensure!(fp.boundary_word == coded, "{chain} at {}: boundary {} vs coded {}", fp.theta, fp.boundary_word, coded);
        let z = lib(CriticalPoint::new(fp.theta.clone(), fp.rho.clone()))?;
        let cw = lib(brute_force_critical_word(&z, sign))?;
        ensure!(fp.critical_word == cw.word, "{chain} at {}: critical {} vs {}", fp.theta, fp.critical_word, cw.word);
        ensure!(fp.boundary_word.starts_with(&fp.critical_word), "{chain} at {}: prefix", fp.theta);
    }
    for c in &d.curves {
        let mid = c.theta_lo.mediant(&c.theta_hi);
        let coded = lib(centre_coding(&mid, &chain.rho_at(&mid), sign, len))?;
        ensure!(c.word == coded, "{chain} on ({}, {}): curve {} vs coded {}", c.theta_lo, c.theta_hi, c.word, coded);
    }
    for w in d.curves.windows(2) {
        ensure!(w[0].word != w[1].word, "{chain}: neighbouring curves share a word");
    }
    ensure!(lib(curve_count(chain))? as usize == d.curves.len(), "{chain}: curve_count");
    Ok(())
}

/// The three Farey-point characterisations at every `theta` of `F_order`
/// on the chain, plus the transversal witness.
pub fn check_lemma(chain: &Chain, order: u64) -> Outcome {
    let thetas = lib(farey_sequence(order, &chain.theta_minus, &chain.theta_plus))?;
    for theta in thetas {
        let z = lib(CriticalPoint::new(theta.clone(), chain.rho_at(&theta)))?;
        let t = lib(farey_point_tests(chain, &z))?;
        if let Some((i, j)) = t.witness {
            let other = Chain::new(i, j).map_err(|e| format!("{chain} at {z}: witness {e}"))?;
            ensure!(other.contains(&z.theta, &z.rho), "{chain} at {z}: witness L({i},{j}) misses the point");
            ensure!(other.order() < chain.order(), "{chain} at {z}: witness not shorter");
            ensure!(i == 0 || z.q() > &i.unsigned_abs().into(), "{chain} at {z}: Farey point on the witness");
        }
    }
    Ok(())
}

fn chain_checks(max_q: u64) -> Vec<CheckResult> {
    let chains = chains_up_to(max_q);
    let orders: Vec<(u64, u64)> = (1..=8 * max_q).flat_map(|n| (0..n).map(move |m| (n, m))).collect();
    vec![
        run_check(Suite::Chain, "decomposition-vs-coding", &chains, check_decomposition),
        run_check(Suite::Chain, "farey-point-characterisations", &chains, |c| check_lemma(c, 2 * max_q)),
        run_check(Suite::Chain, "residue-cover", &orders, |&(n, m)| lib(residue_cover(n, m)).map(|_| ())),
    ]
}

// ---------------------------------------------------------------- point

/// Least-`|i|` solutions of `i theta - j = rho` of each sign, by scanning.
pub fn brute_dominant(z: &CriticalPoint) -> ((i64, i64), (i64, i64)) {
    let q = i64::try_from(z.q()).expect("small denominator");
    let find = |s: i64| {
        (1..=q)
            .find_map(|m| (&z.theta * (s * m) - &z.rho).to_bigint().map(|j| (s * m, i64::try_from(j).unwrap())))
            .expect("a solution with |i| <= q exists")
    };
    (find(1), find(-1))
}

fn expected_quadrants(z: &CriticalPoint) -> Vec<Quadrant> {
    use Quadrant::*;
    let corner = |t: bool, r: bool| z.theta == Rational::integer(t as i64) && z.rho == Rational::integer(r as i64);
    if corner(false, false) {
        vec![I]
    } else if corner(true, false) {
        vec![II]
    } else if corner(false, true) {
        vec![IV]
    } else if corner(true, true) {
        vec![III]
    } else if z.rho.is_zero() {
        vec![I, II]
    } else if z.rho.is_one() {
        vec![III, IV]
    } else {
        vec![I, II, III, IV]
    }
}

/// Endpoints of pencil `sigma` for `1 <= l <= depth`: on the pencil chain,
/// on the endpoint line, the Farey neighbour of `theta` in `F_|i|` on the
/// pencil's side, with `theta` approaching `p/q` monotonically.
pub fn check_pencil_endpoints(z: &CriticalPoint, sigma: Quadrant, depth: u64) -> Outcome {
    let line = lib(endpoint_line(z, sigma))?;
    let mut prev: Option<CriticalPoint> = None;
    for ell in 1..=depth {
        let (i, j) = lib(pencil_params(z, sigma, ell))?;
        let chain = lib(Chain::new(i, j))?;
        ensure!(chain.contains(&z.theta, &z.rho), "{z} {sigma}({ell}): pencil chain misses zeta");
        let e = lib(pencil_endpoint(z, sigma, ell))?.point;
        ensure!(chain.contains(&e.theta, &e.rho), "{z} {sigma}({ell}): endpoint {e} off L({i},{j})");
        ensure!(&e.theta * line.0 - line.1 == e.rho, "{z} {sigma}({ell}): endpoint {e} off line {line:?}");
        let (left, right) = lib(farey_neighbours(&z.theta, chain.order()))?;
        let side = if sigma.is_right() { right } else { left };
        ensure!(side.as_ref() == Some(&e.theta), "{z} {sigma}({ell}): {e} is not the Farey neighbour");
        if let Some(p) = &prev {
            let closer = (&e.theta - &z.theta).abs() < (&p.theta - &z.theta).abs();
            ensure!(closer, "{z} {sigma}({ell}): not approaching theta");
            let slope = (&e.rho - &p.rho) / (&e.theta - &p.theta);
            ensure!(slope == Rational::integer(line.0), "{z} {sigma}({ell}): slope {slope} vs {}", line.0);
        }
        prev = Some(e);
    }
    Ok(())
}

/// Pencil words against the decomposition of the pencil chain and against
/// coding at an interior point of the curve next to `zeta`.
pub fn check_pencil_words(z: &CriticalPoint, sigma: Quadrant, depth: u64) -> Outcome {
    for ell in 0..=depth {
        let word = lib(pencil_word(z, sigma, ell))?;
        let (i, j) = lib(pencil_params(z, sigma, ell))?;
        ensure!(
            word.len() as u64 == i.unsigned_abs(),
            "{z} {sigma}({ell}): length {} vs |i| = {}",
            word.len(),
            i.abs()
        );
        if i == 0 {
            ensure!(word.is_empty(), "{z} {sigma}({ell}): horizontal chain carries a letter");
            continue;
        }
        let chain = lib(Chain::new(i, j))?;
        let inner = if ell == 0 {
            // the dominant curve passes through zeta itself
            z.theta.clone()
        } else {
            z.theta.mediant(&lib(pencil_endpoint(z, sigma, ell))?.point.theta)
        };
        // on the rows rho = 0, 1 zeta ends its dominant chain, so only coding applies at l = 0
        if ell > 0 || !z.on_boundary_row() {
            let d = lib(decompose(&chain))?;
            let curve = d.curve_at(&inner).ok_or_else(|| format!("{z} {sigma}({ell}): no curve at {inner}"))?;
            ensure!(curve.word == word, "{z} {sigma}({ell}): formula {} vs decomposition {}", word, curve.word);
        }
        let sign = chain.sign().expect("i != 0");
        let coded = lib(centre_coding(&inner, &chain.rho_at(&inner), sign, word.len()))?;
        ensure!(coded == word, "{z} {sigma}({ell}): formula {} vs coding {}", word, coded);
    }
    Ok(())
}

fn check_point_structure(z: &CriticalPoint) -> Outcome {
    let dom = lib(dominant_params(z))?;
    ensure!((dom.plus, dom.minus) == brute_dominant(z), "{z}: dominant {dom:?}");
    for t in -3..=3 {
        let (i, j) = lib(all_chain_params(z, t))?;
        ensure!(&z.theta * i - j == z.rho, "{z}: all_chain_params({t})");
    }
    let (up, down) = lib(neighbours(z))?;
    ensure!(up.is_some() && down.is_some(), "{z}: interior point lost a neighbour");
    for sigma in Quadrant::ALL {
        let bold = lib(bold_slope(z, sigma))?;
        let line = lib(endpoint_line(z, sigma))?;
        let special = line.0 == 0;
        ensure!(special || bold == line.0, "{z} {sigma}: bold slope {bold} vs line {line:?}");
        check_pencil_endpoints(z, sigma, 6)?;
    }
    Ok(())
}

fn check_dichotomy(z: &CriticalPoint) -> Outcome {
    let dom = lib(dominant_params(z))?;
    for (i, j) in [dom.plus, dom.minus] {
        let t = lib(farey_point_tests(&lib(Chain::new(i, j))?, z))?;
        ensure!(!t.is_farey, "{z}: Farey point of its dominant chain L({i},{j})");
    }
    for sigma in Quadrant::ALL {
        for ell in 1..=3 {
            let (i, j) = lib(pencil_params(z, sigma, ell))?;
            let t = lib(farey_point_tests(&lib(Chain::new(i, j))?, z))?;
            ensure!(t.is_farey, "{z}: not a Farey point of pencil chain L({i},{j})");
        }
    }
    Ok(())
}

fn check_period_law(z: &CriticalPoint) -> Outcome {
    let (up, um) = lib(dominant_words(z))?;
    let q = usize::try_from(z.q()).map_err(|e| e.to_string())?;
    ensure!(up.len() + um.len() == q, "{z}: |u+ u-| != q");
    ensure!(up.concat(&um) == lib(code_orbit(&z.theta, &z.rho, &Rational::zero(), q))?, "{z}: u+u- vs coding from 0");
    ensure!(um.concat(&up) == lib(code_orbit(&z.theta, &z.rho, &z.rho, q))?, "{z}: u-u+ vs coding from rho");
    Ok(())
}

/// Rows `rho = 0, 1` and the rows next to them: pencil availability and the
/// segment intersections.
pub fn check_boundary_clauses(z: &CriticalPoint) -> Outcome {
    let avail = available_quadrants(z);
    ensure!(avail == expected_quadrants(z), "{z}: available pencils {avail:?}");
    for sigma in Quadrant::ALL {
        let r = pencil_params(z, sigma, 1);
        ensure!(r.is_ok() == avail.contains(&sigma), "{z} {sigma}: availability of parameters");
    }
    let (up, down) = lib(neighbours(z))?;
    ensure!(up.is_none() == z.rho.is_one() && down.is_none() == z.rho.is_zero(), "{z}: neighbours");
    let one_over_q = Rational::new(1, z.q().clone()).map_err(|e| e.to_string())?;
    for &sigma in &avail {
        check_pencil_endpoints(z, sigma, 6)?;
        if z.on_boundary_row() {
            continue;
        }
        let to_bottom = z.rho == one_over_q && !sigma.is_upper();
        let to_top = z.rho == Rational::one() - &one_over_q && sigma.is_upper();
        for ell in 1..=6 {
            let e = lib(pencil_endpoint(z, sigma, ell))?.point;
            if to_bottom {
                ensure!(e.rho.is_zero(), "{z} {sigma}({ell}): endpoint {e} not on rho = 0");
            }
            if to_top {
                ensure!(e.rho.is_one(), "{z} {sigma}({ell}): endpoint {e} not on rho = 1");
            }
        }
    }
    Ok(())
}

fn point_checks(max_q: u64) -> Vec<CheckResult> {
    let interior = critical_points(max_q, true);
    let all = critical_points(max_q, false);
    let edge: Vec<CriticalPoint> = all
        .iter()
        .filter(|z| {
            let q = Rational::from(z.q().clone());
            z.on_boundary_row() || &z.rho * &q == Rational::one() || &z.rho * &q == &q - Rational::one()
        })
        .cloned()
        .collect();
    let small: Vec<CriticalPoint> = all.iter().filter(|z| z.q() <= &12.into()).cloned().collect();
    vec![
        run_check(Suite::Point, "dominants-and-pencil-endpoints", &interior, check_point_structure),
        run_check(Suite::Point, "interior-versus-farey", &interior, check_dichotomy),
        run_check(Suite::Point, "boundary-clauses", &edge, check_boundary_clauses),
        run_check(Suite::Point, "pencil-words", &small, |z| {
            available_quadrants(z).into_iter().try_for_each(|s| check_pencil_words(z, s, 3))
        }),
        run_check(Suite::Point, "period-law", &all, check_period_law),
    ]
}

// ---------------------------------------------------------------- triple

pub fn check_triple_points(z: &CriticalPoint) -> Outcome {
    let rows = lib(concurrency_oracle(z))?;
    let concurrent: BTreeSet<(Rational, Rational)> = rows.iter().filter_map(|r| r.intersection.clone()).collect();
    ensure!(rows.iter().filter(|r| r.concurrent()).count() == 2, "{z}: {} concurrent triples", concurrent.len());
    for r in &rows {
        ensure!((r.determinant == 0) == r.concurrent(), "{z}: determinant {} for {:?}", r.determinant, r.sign_triple);
    }
    let rep = lib(triple_points(z))?;
    let located: BTreeSet<(Rational, Rational)> = rep.points.iter().map(|p| (p.theta.clone(), p.rho.clone())).collect();
    ensure!(located == concurrent, "{z}: closed form {located:?} vs intersections {concurrent:?}");
    ensure!(rep.points.len() == 2 && rep.points.iter().all(|p| !p.sign_triples.is_empty()), "{z}: unwitnessed point");
    let distinct = rep.points[0].theta != rep.points[1].theta;
    ensure!(
        distinct == (rep.triple_type == crate::triple::TripleType::I),
        "{z}: type {} vs positions",
        rep.triple_type
    );
    let cf = lib(ContinuedFraction::of(&z.theta))?;
    let n = cf.n();
    let allowed = [cf.convergent_value(n - 1), cf.convergent_value(n - 2)];
    for p in &rep.points {
        ensure!(allowed.contains(&Some(p.theta.clone())), "{z}: theta {} is not a late convergent", p.theta);
        ensure!(p.theta.in_unit_interval() && p.rho.in_unit_interval(), "{z}: point outside the square");
    }
    if rep.row == RowKind::Generic {
        let sign_n = if n % 2 == 0 { 1 } else { -1 };
        for r in rows.iter().filter(|r| r.concurrent()) {
            ensure!(r.nabla == 0 || r.nabla == sign_n, "{z}: nabla {} for {:?}", r.nabla, r.sign_triple);
        }
        let pattern = lib(floor_pattern(z))?.ok_or_else(|| format!("{z}: floors fit no table row"))?;
        ensure!(pattern != 1, "{z}: constant floor sequence");
        let vanishing: BTreeSet<_> = rows.iter().filter(|r| r.concurrent()).map(|r| r.sign_triple).collect();
        let listed: BTreeSet<_> = FLOOR_TABLE[pattern as usize - 1].2.iter().copied().collect();
        ensure!(vanishing == listed, "{z}: row {pattern} lists {listed:?}, found {vanishing:?}");
    }
    Ok(())
}

fn triple_checks(max_q: u64) -> Vec<CheckResult> {
    let points = critical_points(max_q, true);
    vec![
        run_check(Suite::Triple, "triple-points-vs-intersections", &points, check_triple_points),
        run_check(Suite::Triple, "farey-corollary", &points, |z| {
            for s in lib(triple_point_farey_status(z))? {
                ensure!(
                    s.holds(),
                    "{z}: ({}, {}) is a Farey point of {} < {} curves",
                    s.theta,
                    s.rho,
                    s.farey_count,
                    s.required
                );
            }
            Ok(())
        }),
    ]
}

// ---------------------------------------------------------------- net

fn net_checks(max_q: u64) -> Vec<CheckResult> {
    let orders: Vec<u64> = (1..=max_q).collect();
    let chains = chains_up_to(max_q);
    vec![
        run_check(Suite::Net, "net-enumeration", &orders, |&n| {
            let got: Vec<(i64, i64)> = lib(net(n))?.chains.iter().map(|c| (c.i, c.j)).collect();
            ensure!(got.len() as u64 == net_size(n), "N_{n}: {} chains", got.len());
            let m = n as i64;
            let expect: Vec<(i64, i64)> = (-m..=m)
                .flat_map(|i| (-m - 1..=m).map(move |j| (i, j)))
                .filter(|&(i, j)| Chain::new(i, j).is_ok())
                .collect();
            ensure!(got == expect, "N_{n}: enumeration differs from scan");
            Ok(())
        }),
        run_check(Suite::Net, "segments-on-chains", &chains, |c| {
            let d = lib(decompose(c))?;
            for fp in &d.farey_points {
                ensure!(c.contains(&fp.theta, &fp.rho), "{c}: Farey point off the chain");
            }
            for cv in &d.curves {
                ensure!(c.contains_theta(&cv.theta_lo) && c.contains_theta(&cv.theta_hi), "{c}: curve outside range");
            }
            Ok(())
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::MODULES {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(fractions_up_to(5).len(), 11);
        // sum over q of phi(q) * (q - 1) for q = 2..=5
        assert_eq!(critical_points(5, true).len(), 1 + 2 * 2 + 2 * 3 + 4 * 4);
    }

    #[test]
    fn small_sweep_is_clean() {
        let report = run(Suite::All, 6).unwrap();
        for c in &report.checks {
            assert!(c.ok(), "{}: {:?}", c.name, c.failures);
        }
        assert!(report.passed() > 0);
    }
}
