//! Farey sequences `F_n` and neighbours, generated by the next-term recurrence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A member of `F_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    value: Rational,
    order: u64,
}

impl FareyFraction {
    pub fn new(value: Rational, order: u64) -> Result<Self> {
        if !value.in_unit_interval() {
            return Err(Error::OutOfUnitInterval { what: "Farey fraction", value });
        }
        if *value.denom() > BigInt::from(order) {
            return Err(Error::Domain(format!("{value} is not in F_{order}")));
        }
        Ok(FareyFraction { value, order })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

fn ratio(p: BigInt, q: BigInt) -> Rational {
    Rational::new(p, q).expect("Farey denominators are positive")
}

/// Right neighbour of `a/b` in `F_n`, assuming `b <= n` and `a/b < 1`.
fn right_of_member(x: &Rational, n: &BigInt) -> Rational {
    let (a, b) = (x.numer(), x.denom());
    // b*c - a*d = 1 with the largest admissible d
    let eg = a.extended_gcd(b);
    debug_assert!(eg.gcd.is_one());
    let (c, d) = (eg.y, -eg.x);
    let k = (n - &d).div_floor(b);
    ratio(c + &k * a, d + k * b)
}

/// Left neighbour of `a/b` in `F_n`, assuming `b <= n` and `a/b > 0`.
fn left_of_member(x: &Rational, n: &BigInt) -> Rational {
    let (a, b) = (x.numer(), x.denom());
    // a*f - b*e = 1 with the largest admissible f
    let eg = a.extended_gcd(b);
    debug_assert!(eg.gcd.is_one());
    let (e, f) = (-eg.y, eg.x);
    let k = (n - &f).div_floor(b);
    ratio(e + &k * a, f + k * b)
}

/// The consecutive pair of `F_n` strictly enclosing `x`, for `x` not in `F_n`.
///
/// Stern–Brocot descent with the repeated steps in one direction batched
/// into a single division, so the cost is the length of the continued
/// fraction rather than the sum of its coefficients.
fn bracket_non_member(x: &Rational, n: &BigInt) -> (Rational, Rational) {
    let (xp, xq) = (x.numer(), x.denom());
    let (mut lp, mut lq) = (BigInt::zero(), BigInt::one());
    let (mut rp, mut rq) = (BigInt::one(), BigInt::one());
    loop {
        // Advance L toward R while (lp + k rp)/(lq + k rq) < x and lq + k rq <= n.
        // (lp + k rp) xq < xp (lq + k rq)  <=>  k (rp xq - xp rq) < xp lq - lp xq
        let num = xp * &lq - &lp * xq;
        let den = &rp * xq - xp * &rq;
        let by_value = (&num - BigInt::one()).div_floor(&den);
        let by_order = (n - &lq).div_floor(&rq);
        let kl = by_value.min(by_order);
        if kl.is_positive() {
            lp += &kl * &rp;
            lq += &kl * &rq;
        }
        // Advance R toward L while (rp + k lp)/(rq + k lq) > x and rq + k lq <= n.
        let num = &rp * xq - xp * &rq;
        let den = xp * &lq - &lp * xq;
        let by_value = (&num - BigInt::one()).div_floor(&den);
        let by_order = (n - &rq).div_floor(&lq);
        let kr = by_value.min(by_order);
        if kr.is_positive() {
            rp += &kr * &lp;
            rq += &kr * &lq;
        }
        if !kl.is_positive() && !kr.is_positive() {
            return (ratio(lp, lq), ratio(rp, rq));
        }
    }
}

/// Smallest member of `F_n` that is `>= x`, for `x` in `[0, 1]`.
fn ceiling_in(x: &Rational, n: &BigInt) -> Rational {
    if x.denom() <= n {
        x.clone()
    } else {
        bracket_non_member(x, n).1
    }
}

/// `F_n ∩ [lo, hi]` in increasing order.
pub fn farey_sequence(n: u64, lo: &Rational, hi: &Rational) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::Domain("Farey order must be at least 1".into()));
    }
    for (what, v) in [("lower Farey bound", lo), ("upper Farey bound", hi)] {
        if !v.in_unit_interval() {
            return Err(Error::OutOfUnitInterval { what, value: v.clone() });
        }
    }
    if lo > hi {
        return Ok(Vec::new());
    }
    let order = BigInt::from(n);
    let first = ceiling_in(lo, &order);
    if &first > hi {
        return Ok(Vec::new());
    }
    let mut out = vec![first.clone()];
    if first.is_one() {
        return Ok(out);
    }
    let second = right_of_member(&first, &order);
    if &second > hi {
        return Ok(out);
    }
    out.push(second.clone());

    let (mut a, mut b) = (first.numer().clone(), first.denom().clone());
    let (mut c, mut d) = (second.numer().clone(), second.denom().clone());
    while !(c == d) {
        let k = (&order + &b).div_floor(&d);
        let e = &k * &c - &a;
        let f = &k * &d - &b;
        let next = ratio(e.clone(), f.clone());
        if &next > hi {
            break;
        }
        out.push(next);
        a = std::mem::replace(&mut c, e);
        b = std::mem::replace(&mut d, f);
    }
    Ok(out)
}

/// Immediate neighbours of `x` in `F_n`; `None` on the side where `x` is an
/// endpoint of `[0, 1]`.
pub fn farey_neighbours(x: &Rational, n: u64) -> Result<(Option<Rational>, Option<Rational>)> {
    if !x.in_unit_interval() {
        return Err(Error::OutOfUnitInterval { what: "Farey neighbour argument", value: x.clone() });
    }
    let order = BigInt::from(n);
    if n == 0 || x.denom() > &order {
        return Err(Error::Domain(format!("{x} is not a member of F_{n}")));
    }
    let left = (!x.is_zero()).then(|| left_of_member(x, &order));
    let right = (!x.is_one()).then(|| right_of_member(x, &order));
    Ok((left, right))
}

/// Neighbours in `F_n` of any `x` in `[0, 1]`: for members this is
/// [`farey_neighbours`], otherwise the enclosing consecutive pair.
pub fn farey_bracket(x: &Rational, n: u64) -> Result<(Option<Rational>, Option<Rational>)> {
    let order = BigInt::from(n);
    if x.in_unit_interval() && n > 0 && x.denom() > &order {
        let (l, r) = bracket_non_member(x, &order);
        return Ok((Some(l), Some(r)));
    }
    farey_neighbours(x, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn strs(v: &[Rational]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn chain_seven_five_range() {
        let f = farey_sequence(7, &r("5/7"), &r("6/7")).unwrap();
        assert_eq!(strs(&f), ["5/7", "3/4", "4/5", "5/6", "6/7"]);
    }

    #[test]
    fn first_order_and_degenerate_interval() {
        assert_eq!(strs(&farey_sequence(1, &r("0"), &r("1")).unwrap()), ["0/1", "1/1"]);
        assert_eq!(strs(&farey_sequence(5, &r("3/5"), &r("3/5")).unwrap()), ["3/5"]);
        assert!(farey_sequence(3, &r("3/5"), &r("3/5")).unwrap().is_empty());
    }

    #[test]
    fn bounds_outside_the_sequence() {
        // F_3 = 0, 1/3, 1/2, 2/3, 1
        let f = farey_sequence(3, &r("2/5"), &r("7/10")).unwrap();
        assert_eq!(strs(&f), ["1/2", "2/3"]);
    }

    #[test]
    fn neighbours_examples() {
        assert_eq!(farey_neighbours(&r("3/5"), 8).unwrap(), (Some(r("4/7")), Some(r("5/8"))));
        assert_eq!(farey_neighbours(&r("1/2"), 2).unwrap(), (Some(r("0")), Some(r("1"))));
        assert_eq!(farey_neighbours(&r("3/4"), 7).unwrap(), (Some(r("5/7")), Some(r("4/5"))));
        assert_eq!(farey_neighbours(&r("0"), 4).unwrap(), (None, Some(r("1/4"))));
        assert_eq!(farey_neighbours(&r("1"), 4).unwrap(), (Some(r("3/4")), None));
    }

    #[test]
    fn neighbours_reject_bad_input() {
        assert!(matches!(farey_neighbours(&r("5/4"), 8), Err(Error::OutOfUnitInterval { .. })));
        assert!(farey_neighbours(&r("3/5"), 4).is_err());
    }

    #[test]
    fn bracket_of_non_member() {
        assert_eq!(farey_bracket(&r("7/12"), 5).unwrap(), (Some(r("1/2")), Some(r("3/5"))));
        assert_eq!(farey_bracket(&r("1/1000"), 10).unwrap(), (Some(r("0")), Some(r("1/10"))));
    }

    #[test]
    fn farey_fraction_order_check() {
        assert!(FareyFraction::new(r("3/5"), 5).is_ok());
        assert!(FareyFraction::new(r("3/5"), 4).is_err());
    }
}
