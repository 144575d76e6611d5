//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! The reference values here come from oracles written out in this file
//! (orbit iteration, Farey enumeration by brute force, scans for least
//! solutions, direct line intersection) rather than from the library's
//! closed forms.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use critical_curves::chain::{curve_count, decompose, farey_point_tests, residue_cover, Chain};
use critical_curves::net::net;
use critical_curves::orbit::CriticalPoint;
use critical_curves::point::{
    approach_sequence, available_quadrants, bold_slope, dominant_params, pencil_endpoint, pencil_params, pencil_word,
    Quadrant,
};
use critical_curves::triple::{triple_point_farey_status, triple_points, TripleType};
use critical_curves::{Letter, Rational, Word};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::frac(p, q)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn den(x: &Rational) -> i64 {
    i64::try_from(x.denom()).unwrap()
}

fn num(x: &Rational) -> i64 {
    i64::try_from(x.numer()).unwrap()
}

// ------------------------------------------------------------------ oracles

/// Orbit of `x0` under `x -> {x + theta}`, coded `a` on `[0, rho)`.
fn code(theta: &Rational, rho: &Rational, x0: &Rational, len: usize) -> Word {
    let mut x = x0.fract();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(if &x < rho { Letter::A } else { Letter::B });
        x = (&x + theta).fract();
    }
    Word::from_letters(out)
}

/// Coding from `0` on positive chains and from `rho` on negative ones.
fn centre(theta: &Rational, rho: &Rational, positive: bool, len: usize) -> Word {
    let start = if positive { Rational::zero() } else { rho.clone() };
    code(theta, rho, &start, len)
}

/// Reduced fractions with denominator at most `n` in `[lo, hi]`, sorted.
fn brute_farey(n: i64, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    for q in 1..=n {
        for p in 0..=q {
            if gcd(p, q) == 1 {
                let x = frac(p, q);
                if lo <= &x && &x <= hi {
                    set.insert(x);
                }
            }
        }
    }
    set.into_iter().collect()
}

/// Least `m >= 1` with `s m theta - rho` an integer, for sign `s`, with that integer.
fn least_solution(theta: &Rational, rho: &Rational, s: i64, limit: i64) -> Option<(i64, i64)> {
    (1..=limit).find_map(|m| (theta * (s * m) - rho).to_bigint().map(|j| (s * m, i64::try_from(j).unwrap())))
}

/// Dominant pairs by scanning, with the fixed conventions on `rho = 0, 1`.
fn brute_dominant(theta: &Rational, rho: &Rational) -> ((i64, i64), (i64, i64)) {
    let (p, q) = (num(theta), den(theta));
    if rho.is_zero() {
        return ((0, 0), (-q, -p));
    }
    if rho.is_one() {
        return ((q, p - 1), (0, -1));
    }
    (least_solution(theta, rho, 1, q).unwrap(), least_solution(theta, rho, -1, q).unwrap())
}

fn on_line(pt: &(Rational, Rational), (i, j): (i64, i64)) -> bool {
    &pt.0 * i - j == pt.1
}

/// Convergents of `p/q` with the last coefficient equal to one.
fn convergents(p: i64, q: i64) -> Vec<Rational> {
    let (mut a, mut b) = (p, q);
    let mut coeffs = Vec::new();
    while b != 0 {
        coeffs.push(a.div_euclid(b));
        let t = a.rem_euclid(b);
        a = b;
        b = t;
    }
    let last = coeffs.len() - 1;
    if coeffs[last] > 1 && coeffs.len() > 1 {
        coeffs[last] -= 1;
        coeffs.push(1);
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, coeffs[0], 1i64);
    let mut out = vec![frac(p1, q1)];
    for &c in &coeffs[1..] {
        let (p2, q2) = (c * p1 + p0, c * q1 + q0);
        out.push(frac(p2, q2));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    out
}

/// Interior rational critical points `(p/q, k/q)` with `q` in the range.
fn interior_points(qs: std::ops::RangeInclusive<i64>) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for q in qs {
        for p in 0..=q {
            if gcd(p, q) == 1 {
                for k in 1..q {
                    out.push((frac(p, q), frac(k, q)));
                }
            }
        }
    }
    out
}

fn cp(pt: &(Rational, Rational)) -> CriticalPoint {
    CriticalPoint::new(pt.0.clone(), pt.1.clone()).unwrap()
}

fn chains(max: u64) -> Vec<Chain> {
    net(max).unwrap().chains
}

// ------------------------------------------------------------------ criteria

fn seven_five() -> Check {
    let d = decompose(&Chain::new(7, 5).unwrap()).map_err(|e| e.to_string())?;
    let fr: Vec<String> = d.farey_points.iter().map(|f| f.theta.to_string()).collect();
    ensure!(fr == ["5/7", "3/4", "4/5", "5/6", "6/7"], "Farey fractions {fr:?}");
    let words = |v: Vec<&Word>| v.into_iter().map(|w| w.to_power_string()).collect::<Vec<_>>();
    let boundary = words(d.farey_points.iter().map(|f| &f.boundary_word).collect());
    ensure!(boundary == ["b^7", "ab^3ab^2", "ab^2a^3b", "aba^5", "a^7"], "boundary words {boundary:?}");
    let curves = words(d.curves.iter().map(|c| &c.word).collect());
    ensure!(curves == ["ab^6", "ab^2a^2b^2", "aba^4b", "a^7"], "curve words {curves:?}");
    let critical = words(d.farey_points.iter().map(|f| &f.critical_word).collect());
    ensure!(critical == ["ε", "ab^2", "ab", "a", "ε"], "critical words {critical:?}");
    Ok(())
}

fn seven_five_timed() -> Check {
    seven_five()?;
    let best = (0..50)
        .map(|_| {
            let t = Instant::now();
            let _ = decompose(&Chain::new(7, 5).unwrap()).unwrap();
            t.elapsed()
        })
        .min()
        .unwrap();
    ensure!(best < Duration::from_millis(1), "decomposition took {best:?}");
    Ok(())
}

fn words_versus_coding() -> Check {
    for chain in chains(12) {
        let d = decompose(&chain).map_err(|e| e.to_string())?;
        if chain.i == 0 {
            ensure!(d.curves.len() == 1 && d.curves[0].word.is_empty(), "{chain}");
            continue;
        }
        let n = chain.i.abs();
        let positive = chain.i > 0;
        let expect = brute_farey(n, &chain.theta_minus, &chain.theta_plus);
        let got: Vec<Rational> = d.farey_points.iter().map(|f| f.theta.clone()).collect();
        ensure!(got == expect, "{chain}: Farey fractions");
        for fp in &d.farey_points {
            let coded = centre(&fp.theta, &chain.rho_at(&fp.theta), positive, n as usize);
            ensure!(fp.boundary_word == coded, "{chain} at {}: {} vs {}", fp.theta, fp.boundary_word, coded);
        }
        for c in &d.curves {
            let mid = c.theta_lo.mediant(&c.theta_hi);
            let coded = centre(&mid, &chain.rho_at(&mid), positive, n as usize);
            ensure!(c.word == coded, "{chain} at {mid}: {} vs {}", c.word, coded);
        }
    }
    Ok(())
}

fn residue_system() -> Check {
    for n in 1..=100i64 {
        let all = brute_farey(n, &Rational::zero(), &Rational::one());
        for m in 0..n {
            let (lo, hi) = (frac(m, n), frac(m + 1, n));
            let fractions: Vec<&Rational> = all.iter().filter(|x| &lo <= *x && *x <= &hi).collect();
            let mut hits = vec![0u32; n as usize];
            for f in &fractions {
                let q = den(f);
                let residues: Vec<i64> = if n % q == 0 { vec![0] } else { vec![0, n % q] };
                for res in residues {
                    for x in (res..n).step_by(q as usize) {
                        hits[x as usize] += 1;
                    }
                }
            }
            ensure!(hits.iter().all(|&h| h > 0), "n = {n}, m = {m}: residue not covered");
            ensure!(hits[1..].iter().all(|&h| h == 1), "n = {n}, m = {m}: residue covered twice");
            let lib = residue_cover(n as u64, m as u64).map_err(|e| e.to_string())?;
            ensure!(lib.fractions.iter().collect::<Vec<_>>() == fractions, "n = {n}, m = {m}: fractions");
        }
    }
    Ok(())
}

/// Length of the shortest same-sign centre at a point, by iteration.
fn centre_length(theta: &Rational, rho: &Rational, positive: bool) -> usize {
    if rho.is_zero() || rho.is_one() {
        return 0;
    }
    let (mut x, target) = if positive { (Rational::zero(), rho.clone()) } else { (rho.clone(), Rational::zero()) };
    for m in 1..=den(theta) as usize {
        x = (&x + theta).fract();
        if x == target {
            return m;
        }
    }
    unreachable!("critical point without a centre")
}

fn lemma_equivalence() -> Check {
    let grid = brute_farey(20, &Rational::zero(), &Rational::one());
    for chain in chains(10).into_iter().filter(|c| c.i != 0) {
        let n = chain.i.abs();
        let s = chain.i.signum();
        for theta in grid.iter().filter(|t| chain.contains_theta(t)) {
            let rho = chain.rho_at(theta);
            let farey = den(theta) <= n;
            let short = (centre_length(theta, &rho, s > 0) as i64) < n;
            let transversal = (0..n).any(|m| {
                let ip = s * m;
                match (theta * ip - &rho).to_bigint() {
                    Some(jp) => {
                        let jp = i64::try_from(jp).unwrap();
                        Chain::new(ip, jp).map(|c| c.contains(theta, &rho)).unwrap_or(false)
                            && (ip == 0 || den(theta) > m)
                    }
                    None => false,
                }
            });
            ensure!(farey == short && short == transversal, "{chain} at {theta}: {farey} {short} {transversal}");
            let z = CriticalPoint::new(theta.clone(), rho.clone()).unwrap();
            let t = farey_point_tests(&chain, &z).map_err(|e| e.to_string())?;
            ensure!(
                (t.is_farey, t.short_word, t.transversal) == (farey, short, transversal),
                "{chain} at {theta}: library {t:?}"
            );
        }
    }
    Ok(())
}

/// The line the far endpoints of pencil `sigma` must sit on: a dominant line
/// of the neighbour, or the segment `rho = 0` / `rho = 1` when that neighbour
/// lies on it.
fn expected_endpoint_line(theta: &Rational, rho: &Rational, sigma: Quadrant) -> (i64, i64) {
    let q = den(theta);
    let step = frac(1, q);
    let upper = matches!(sigma, Quadrant::I | Quadrant::II);
    let positive = matches!(sigma, Quadrant::I | Quadrant::III);
    let nb = if upper { rho + &step } else { rho - &step };
    if nb.is_zero() {
        return (0, 0);
    }
    if nb.is_one() {
        return (0, -1);
    }
    let (plus, minus) = brute_dominant(theta, &nb);
    if positive {
        plus
    } else {
        minus
    }
}

fn pencil_structure() -> Check {
    for pt in interior_points(2..=20) {
        let z = cp(&pt);
        let dom = dominant_params(&z).map_err(|e| e.to_string())?;
        ensure!((dom.plus, dom.minus) == brute_dominant(&pt.0, &pt.1), "{z}: dominant {dom:?}");
        let q = den(&pt.0);
        for sigma in Quadrant::ALL {
            let line = expected_endpoint_line(&pt.0, &pt.1, sigma);
            let upper = matches!(sigma, Quadrant::I | Quadrant::II);
            let limit = if upper { &pt.1 + frac(1, q) } else { &pt.1 - frac(1, q) };
            let mut prev: Option<(Rational, Rational)> = None;
            for ell in 1..=6 {
                let (i, j) = pencil_params(&z, sigma, ell).map_err(|e| e.to_string())?;
                ensure!(on_line(&pt, (i, j)), "{z} {sigma}({ell}): pencil chain misses zeta");
                let e = pencil_endpoint(&z, sigma, ell).map_err(|e| e.to_string())?.point;
                let e = (e.theta, e.rho);
                ensure!(on_line(&e, (i, j)), "{z} {sigma}({ell}): endpoint off its chain");
                ensure!(on_line(&e, line), "{z} {sigma}({ell}): endpoint {e:?} off {line:?}");
                if let Some(p) = &prev {
                    let slope = (&e.1 - &p.1) / (&e.0 - &p.0);
                    ensure!(slope == Rational::integer(line.0), "{z} {sigma}({ell}): slope {slope}");
                    if line.0 != 0 {
                        let bold = bold_slope(&z, sigma).map_err(|e| e.to_string())?;
                        ensure!(bold == line.0, "{z} {sigma}: bold slope {bold}");
                    }
                    ensure!((&e.0 - &pt.0).abs() < (&p.0 - &pt.0).abs(), "{z} {sigma}({ell}): theta not closer");
                    ensure!((&e.1 - &limit).abs() <= (&p.1 - &limit).abs(), "{z} {sigma}({ell}): rho not closer");
                }
                prev = Some(e);
            }
        }
    }
    Ok(())
}

fn boundary_clauses() -> Check {
    use Quadrant::*;
    for q in 1..=20i64 {
        for p in 0..=q {
            if gcd(p, q) != 1 {
                continue;
            }
            let theta = frac(p, q);
            for k in [0, 1, q - 1, q] {
                if k < 0 || k > q {
                    continue;
                }
                let rho = frac(k, q);
                let z = CriticalPoint::new(theta.clone(), rho.clone()).unwrap();
                let expect: Vec<Quadrant> = match (p == 0, p == q, k == 0, k == q) {
                    (true, _, true, _) => vec![I],
                    (_, true, true, _) => vec![II],
                    (true, _, _, true) => vec![IV],
                    (_, true, _, true) => vec![III],
                    (_, _, true, _) => vec![I, II],
                    (_, _, _, true) => vec![III, IV],
                    _ => vec![I, II, III, IV],
                };
                let avail = available_quadrants(&z);
                ensure!(avail == expect, "{z}: pencils {avail:?}");
                ensure!(!z.is_corner() || avail.len() == 1, "{z}: corner with {} pencils", avail.len());
                for sigma in Quadrant::ALL {
                    ensure!(
                        pencil_params(&z, sigma, 1).is_ok() == expect.contains(&sigma),
                        "{z} {sigma}: availability"
                    );
                }
                for &sigma in &avail {
                    let line = if z.is_corner() {
                        if k == 0 {
                            (0, -1)
                        } else {
                            (0, 0)
                        }
                    } else {
                        expected_endpoint_line(&theta, &rho, sigma)
                    };
                    for ell in 1..=6 {
                        let (i, j) = pencil_params(&z, sigma, ell).map_err(|e| e.to_string())?;
                        let e = pencil_endpoint(&z, sigma, ell).map_err(|e| e.to_string())?.point;
                        let e = (e.theta, e.rho);
                        ensure!(
                            on_line(&(theta.clone(), rho.clone()), (i, j)),
                            "{z} {sigma}({ell}): chain misses zeta"
                        );
                        ensure!(on_line(&e, (i, j)), "{z} {sigma}({ell}): endpoint off chain");
                        ensure!(on_line(&e, line), "{z} {sigma}({ell}): endpoint {e:?} off {line:?}");
                        if q > 1 && k == 1 && matches!(sigma, III | IV) {
                            ensure!(e.1.is_zero(), "{z} {sigma}({ell}): expected rho = 0");
                        }
                        if q > 1 && k == q - 1 && matches!(sigma, I | II) {
                            ensure!(e.1.is_one(), "{z} {sigma}({ell}): expected rho = 1");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn word_theorem() -> Check {
    for q in 1..=12i64 {
        for p in 0..=q {
            if gcd(p, q) != 1 {
                continue;
            }
            let theta = frac(p, q);
            for k in 0..=q {
                let rho = frac(k, q);
                let z = CriticalPoint::new(theta.clone(), rho.clone()).unwrap();
                let (plus, minus) = brute_dominant(&theta, &rho);
                let u_plus = centre(&theta, &rho, true, plus.0.unsigned_abs() as usize);
                let u_minus = centre(&theta, &rho, false, minus.0.unsigned_abs() as usize);
                ensure!(u_plus.len() + u_minus.len() == q as usize, "{z}: |u+ u-| != q");
                let (v_plus, v_minus) = (u_plus.first_switched(), u_minus.first_switched());
                for sigma in available_quadrants(&z) {
                    for ell in 0..=3usize {
                        let formula = match sigma {
                            Quadrant::I => u_plus.concat(&v_minus.concat(&u_plus).power(ell)),
                            Quadrant::II => u_minus.concat(&u_plus.concat(&v_minus).power(ell)),
                            Quadrant::III => u_plus.concat(&u_minus.concat(&v_plus).power(ell)),
                            Quadrant::IV => u_minus.concat(&v_plus.concat(&u_minus).power(ell)),
                        };
                        let got = pencil_word(&z, sigma, ell as u64).map_err(|e| e.to_string())?;
                        ensure!(got == formula, "{z} {sigma}({ell}): {got} vs formula {formula}");
                        if ell == 0 {
                            continue;
                        }
                        let (i, j) = pencil_params(&z, sigma, ell as u64).map_err(|e| e.to_string())?;
                        let e = pencil_endpoint(&z, sigma, ell as u64).map_err(|e| e.to_string())?.point;
                        let mid = theta.mediant(&e.theta);
                        let coded = centre(&mid, &(&mid * i - j), i > 0, i.unsigned_abs() as usize);
                        ensure!(got == coded, "{z} {sigma}({ell}): {got} vs coding {coded}");
                    }
                }
            }
        }
    }
    Ok(())
}

/// Dominant lines through `zeta↓`, `zeta`, `zeta↑` and their concurrent triples.
fn concurrent_points(theta: &Rational, rho: &Rational) -> BTreeSet<(Rational, Rational)> {
    let step = frac(1, den(theta));
    let centres = [rho - &step, rho.clone(), rho + &step];
    let doms: Vec<((i64, i64), (i64, i64))> = centres.iter().map(|c| brute_dominant(theta, c)).collect();
    let mut out = BTreeSet::new();
    let mut count = 0;
    for m1 in [true, false] {
        for m2 in [true, false] {
            for m3 in [true, false] {
                let pick = |d: &((i64, i64), (i64, i64)), plus: bool| if plus { d.0 } else { d.1 };
                let lines = [pick(&doms[0], m1), pick(&doms[1], m2), pick(&doms[2], m3)];
                let (a, b) = (lines[0], lines[1]);
                if a.0 == b.0 {
                    continue;
                }
                let t = frac(a.1 - b.1, a.0 - b.0);
                let pt = (t.clone(), &t * a.0 - a.1);
                if on_line(&pt, lines[2]) {
                    count += 1;
                    out.insert(pt);
                }
            }
        }
    }
    assert_eq!(count, 2, "({theta}, {rho}): {count} concurrent triples");
    out
}

fn triple_points_check() -> Check {
    for pt in interior_points(2..=30) {
        let z = cp(&pt);
        let expect = catch_unwind(|| concurrent_points(&pt.0, &pt.1)).map_err(|_| format!("{z}: not two triples"))?;
        let rep = triple_points(&z).map_err(|e| e.to_string())?;
        let got: BTreeSet<_> = rep.points.iter().map(|p| (p.theta.clone(), p.rho.clone())).collect();
        ensure!(got == expect, "{z}: {got:?} vs {expect:?}");
        let conv = convergents(num(&pt.0), den(&pt.0));
        let late = &conv[conv.len().saturating_sub(3)..conv.len() - 1];
        for p in &rep.points {
            ensure!(late.contains(&p.theta), "{z}: theta {} is not p_(n-1)/q_(n-1) or p_(n-2)/q_(n-2)", p.theta);
        }
        let distinct = rep.points[0].theta != rep.points[1].theta;
        ensure!(distinct == (rep.triple_type == TripleType::I), "{z}: type {}", rep.triple_type);
    }
    let fig = |t: &str, p: &str| {
        let rep = triple_points(&CriticalPoint::new(r(t), r(p)).unwrap()).unwrap();
        let pts: Vec<(Rational, Rational)> = rep.points.iter().map(|x| (x.theta.clone(), x.rho.clone())).collect();
        (rep.triple_type, pts)
    };
    ensure!(
        fig("3/5", "2/5") == (TripleType::I, vec![(r("2/3"), r("1/3")), (r("1/2"), r("1/2"))]),
        "(3/5, 2/5) worked instance"
    );
    ensure!(
        fig("3/7", "2/7") == (TripleType::II, vec![(r("1/2"), r("1/2")), (r("1/2"), r("0"))]),
        "(3/7, 2/7) worked instance"
    );
    Ok(())
}

fn farey_corollary() -> Check {
    for pt in interior_points(2..=15) {
        let z = cp(&pt);
        let rep = triple_points(&z).map_err(|e| e.to_string())?;
        let need = if rep.triple_type == TripleType::I { 1 } else { 2 };
        let step = frac(1, den(&pt.0));
        let centres = [&pt.1 - &step, pt.1.clone(), &pt.1 + &step];
        for p in &rep.points {
            let at = (p.theta.clone(), p.rho.clone());
            let mut lines = BTreeSet::new();
            for c in &centres {
                let (a, b) = brute_dominant(&pt.0, c);
                lines.extend([a, b].into_iter().filter(|l| on_line(&at, *l)));
            }
            let farey = lines.iter().filter(|l| l.0 != 0 && den(&p.theta) <= l.0.abs()).count();
            ensure!(farey >= need, "{z}: ({}, {}) is a Farey point of {farey} curves", p.theta, p.rho);
        }
        for s in triple_point_farey_status(&z).map_err(|e| e.to_string())? {
            ensure!(s.farey_count >= need, "{z}: library count {}", s.farey_count);
        }
    }
    Ok(())
}

fn average_order() -> Check {
    let n = 500i64;
    let mut total = 0u64;
    let mut count = 0u64;
    for i in [-n, n] {
        let js = if i > 0 { 0..i } else { i..0 };
        for j in js {
            total += curve_count(&Chain::new(i, j).unwrap()).map_err(|e| e.to_string())?;
            count += 1;
        }
    }
    let mean = total as f64 / count as f64;
    // |F_n| = 1 + sum of Euler's phi up to n, and the chains of order n split F_n
    let phi_sum: i64 = (1..=n).map(|k| (1..=k).filter(|&m| gcd(m, k) == 1).count() as i64).sum();
    let exact = (phi_sum as f64) / n as f64;
    ensure!((mean - exact).abs() < 1e-9, "mean {mean} vs (|F_n| - 1)/n = {exact}");
    let target = 3.0 * n as f64 / std::f64::consts::PI.powi(2);
    let rel = (mean - target).abs() / target;
    ensure!(rel < 0.05, "mean {mean:.3} vs {target:.3}: relative error {rel:.4}");
    println!("    mean curve count at |i| = {n}: {mean:.3} (3n/π² = {target:.3}, off by {:.2}%)", rel * 100.0);
    Ok(())
}

fn approach_sequences() -> Check {
    let targets: [(&str, Vec<u64>); 5] = [
        ("golden", std::iter::once(0).chain(std::iter::repeat_n(1, 15)).collect()),
        ("sqrt2", std::iter::once(0).chain(std::iter::repeat_n(2, 15)).collect()),
        ("sqrt3", std::iter::once(0).chain([1, 2].iter().copied().cycle().take(15)).collect()),
        ("e", vec![0, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10, 1]),
        ("pi", vec![0, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1]),
    ];
    for (name, cf) in &targets {
        for i in 1..=3i64 {
            let seq = approach_sequence(cf, i, 12).map_err(|e| e.to_string())?;
            for st in &seq.steps {
                let expect = st.theta.in_unit_interval()
                    && st.rho.in_unit_interval()
                    && !st.rho.is_zero()
                    && !st.rho.is_one()
                    && (1..i).all(|m| (&st.theta * m - &st.rho).to_bigint().is_none());
                let boundary_dominant = st.valid && (st.rho.is_zero() || st.rho.is_one()) && st.dominant;
                ensure!(
                    st.dominant == expect || boundary_dominant,
                    "{name}, i = {i}, k = {}: flag {}",
                    st.k,
                    st.dominant
                );
            }
            let idx = seq.dominant_from().ok_or_else(|| format!("{name}, i = {i}: never dominant"))?;
            let from = seq.steps[idx].k;
            ensure!(from <= 12, "{name}, i = {i}: dominant only from {from}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, fn() -> Check)> = vec![
        ("seven-five-chain-decomposition", Duration::from_secs(1), seven_five_timed),
        ("decomposition-words-match-coding", Duration::from_secs(10), words_versus_coding),
        ("residue-system", Duration::from_secs(10), residue_system),
        ("farey-point-lemma", Duration::from_secs(10), lemma_equivalence),
        ("pencil-structure", Duration::from_secs(30), pencil_structure),
        ("boundary-clauses", Duration::from_secs(10), boundary_clauses),
        ("pencil-word-theorem", Duration::from_secs(10), word_theorem),
        ("triple-points", Duration::from_secs(60), triple_points_check),
        ("triple-point-farey-corollary", Duration::from_secs(10), farey_corollary),
        ("average-curve-count", Duration::from_secs(30), average_order),
        ("approach-sequences", Duration::from_secs(5), approach_sequences),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= budget {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {:>2}  PASS  {name}  ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}  FAIL  {name}  ({elapsed:.2?}): {msg}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
