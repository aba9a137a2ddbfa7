//! p-adic valuations of rationals and checks of Kummer-type congruences.
//!
//! A congruence `a ≡ b (mod p^k)` between rationals means
//! `ord_p(a - b) >= k`, so every check is total.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, shifted_product, Rational};
use crate::hbnum::{classical_row, hb_row_big};

/// `ord_p` of a rational; `Infinity` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PadicVal {
    Finite(i64),
    Infinity,
}

impl PadicVal {
    pub fn finite(self) -> Option<i64> {
        match self {
            PadicVal::Finite(v) => Some(v),
            PadicVal::Infinity => None,
        }
    }
}

impl Ord for PadicVal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PadicVal::Finite(a), PadicVal::Finite(b)) => a.cmp(b),
            (PadicVal::Finite(_), PadicVal::Infinity) => Ordering::Less,
            (PadicVal::Infinity, PadicVal::Finite(_)) => Ordering::Greater,
            (PadicVal::Infinity, PadicVal::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PadicVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for PadicVal {
    type Output = PadicVal;

    fn add(self, rhs: PadicVal) -> PadicVal {
        match (self, rhs) {
            (PadicVal::Finite(a), PadicVal::Finite(b)) => PadicVal::Finite(a + b),
            _ => PadicVal::Infinity,
        }
    }
}

impl fmt::Display for PadicVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicVal::Finite(v) => write!(f, "{v}"),
            PadicVal::Infinity => f.write_str("inf"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Trial division up to `10^6`, then Miller-Rabin with the first twelve
/// prime bases (deterministic for every `u64`).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT && d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    if d * d > p {
        return true;
    }
    let s = (p - 1).trailing_zeros();
    let odd = (p - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, odd, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn ord_int(x: &BigInt, p: u64) -> i64 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// `ord_p(x)`, negative when `p` divides the denominator.
pub fn ordp(x: &Rational, p: u64) -> Result<PadicVal> {
    check_prime(p)?;
    Ok(ordp_unchecked(x, p))
}

fn ordp_unchecked(x: &Rational, p: u64) -> PadicVal {
    if x.is_zero() {
        return PadicVal::Infinity;
    }
    PadicVal::Finite(ord_int(x.numer(), p) - ord_int(x.denom(), p))
}

/// `ord_p` of an integer; `Infinity` for zero.
pub fn ordp_int(x: &BigInt, p: u64) -> Result<PadicVal> {
    check_prime(p)?;
    Ok(if x.is_zero() {
        PadicVal::Infinity
    } else {
        PadicVal::Finite(ord_int(x, p))
    })
}

/// Canonical representative of `x` in `[0, modulus)`, if the denominator is
/// a unit modulo `modulus`.
pub fn residue(x: &Rational, modulus: &BigInt) -> Option<BigInt> {
    let d = x.denom().mod_floor(modulus);
    let e = d.extended_gcd(modulus);
    if !e.gcd.is_one() {
        return None;
    }
    Some((x.numer() * e.x).mod_floor(modulus))
}

/// Outcome of one congruence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceVerdict {
    pub holds: bool,
    pub prime: u64,
    /// `k` in `mod p^k`; `Infinity` asks for exact equality.
    pub exponent: PadicVal,
    pub ord_difference: PadicVal,
    pub lhs: Rational,
    pub rhs: Rational,
    /// Both sides reduced modulo `p^k`, when `k` is finite and both are
    /// `p`-integral.
    pub residues: Option<(BigInt, BigInt)>,
}

impl CongruenceVerdict {
    fn new(lhs: Rational, rhs: Rational, p: u64, exponent: PadicVal) -> Self {
        let ord_difference = ordp_unchecked(&(&lhs - &rhs), p);
        let holds = ord_difference >= exponent;
        let residues = match exponent {
            PadicVal::Finite(k) if k >= 0 => {
                let m = num_traits::pow(BigInt::from(p), k as usize);
                residue(&lhs, &m).zip(residue(&rhs, &m))
            }
            _ => None,
        };
        CongruenceVerdict {
            holds,
            prime: p,
            exponent,
            ord_difference,
            lhs,
            rhs,
            residues,
        }
    }

    /// `p^k` for finite `k`.
    pub fn modulus(&self) -> Option<BigInt> {
        match self.exponent {
            PadicVal::Finite(k) if k >= 0 => Some(num_traits::pow(BigInt::from(self.prime), k as usize)),
            _ => None,
        }
    }

    /// Residues modulo `p^j` for some `j <= k`.
    pub fn residues_mod(&self, j: u32) -> Option<(BigInt, BigInt)> {
        let m = num_traits::pow(BigInt::from(self.prime), j as usize);
        residue(&self.lhs, &m).zip(residue(&self.rhs, &m))
    }
}

impl fmt::Display for CongruenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.holds { "holds" } else { "fails" })?;
        match (&self.residues, self.modulus()) {
            (Some((a, b)), Some(m)) if a == b => write!(f, "; residue {a} (mod {m})")?,
            (Some((a, b)), Some(m)) => write!(f, "; residues {a} vs {b} (mod {m})")?,
            (None, Some(m)) => write!(f, "; modulus {m}")?,
            (_, None) => f.write_str("; exact equality")?,
        }
        Ok(())
    }
}

/// `a ≡ b (mod p^k)`.
pub fn congruent(a: &Rational, b: &Rational, p: u64, k: u32) -> Result<CongruenceVerdict> {
    check_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidArgument("congruence exponent must be at least 1".into()));
    }
    Ok(CongruenceVerdict::new(a.clone(), b.clone(), p, PadicVal::Finite(k as i64)))
}

fn hypothesis(ok: bool, text: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(text.into()))
    }
}

fn period(p: u64, nu: u32) -> u64 {
    (p - 1) * p.pow(nu)
}

/// Hypotheses shared by both Kummer statements.
fn kummer_hypotheses(p: u64, m: usize, n: usize, nu: u32) -> Result<()> {
    check_prime(p)?;
    hypothesis(m >= 1 && m % 2 == 0, "m positive and even")?;
    hypothesis(n >= 1 && n % 2 == 0, "n positive and even")?;
    hypothesis(m % (p as usize - 1) != 0, "m ≢ 0 (mod p−1)")?;
    hypothesis(n % (p as usize - 1) != 0, "n ≢ 0 (mod p−1)")?;
    let per = period(p, nu) as usize;
    hypothesis(m % per == n % per, "m ≡ n (mod (p−1)p^ν)")
}

fn euler_factor(p: u64, m: usize) -> Rational {
    Rational::one() - Rational::from_integer(num_traits::pow(BigInt::from(p), m - 1))
}

/// `(1 - p^{m-1}) B_m / m ≡ (1 - p^{n-1}) B_n / n (mod p^{ν+1})`.
pub fn kummer_classical(p: u64, m: usize, n: usize, nu: u32) -> Result<CongruenceVerdict> {
    kummer_hypotheses(p, m, n, nu)?;
    let b = classical_row(m.max(n) + 1);
    let side = |k: usize| euler_factor(p, k) * &b[k] / Rational::from(k);
    Ok(CongruenceVerdict::new(side(m), side(n), p, PadicVal::Finite(nu as i64 + 1)))
}

/// `ord_p(prod_{k=0}^{n} (1+k)!)`.
fn ord_factorial_product(p: u64, n: usize) -> i64 {
    (0..=n).map(|k| ord_int(&factorial(k + 1), p)).sum()
}

/// Lower bound on `ord_p(N-1)` under which `B_{N,n}/n ≡ B_n/n (mod p^{ν+1})`:
/// `ν + 1 + ord_p(prod_{k=0}^n (1+k)!) + ord_p(n)`.
pub fn corollary_threshold(p: u64, n: usize, nu: u32) -> Result<i64> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidArgument("threshold needs n >= 1".into()));
    }
    Ok(nu as i64 + 1 + ord_factorial_product(p, n) + ord_int(&BigInt::from(n), p))
}

/// Lower bound on `ord_p(N-1)` for the two-index statement, with `m >= n`:
/// `ν + 1 + ord_p(prod_{k=0}^m (1+k)!) + max(ord_p m, ord_p n)`.
pub fn pair_threshold(p: u64, m: usize, n: usize, nu: u32) -> Result<i64> {
    check_prime(p)?;
    if n == 0 || m < n {
        return Err(Error::InvalidArgument("threshold needs m >= n >= 1".into()));
    }
    let ords = ord_int(&BigInt::from(m), p).max(ord_int(&BigInt::from(n), p));
    Ok(nu as i64 + 1 + ord_factorial_product(p, m) + ords)
}

fn ord_n_minus_one(big_n: &BigInt, p: u64) -> Result<PadicVal> {
    if *big_n < BigInt::one() {
        return Err(Error::InvalidKey("N must be at least 1".into()));
    }
    ordp_int(&(big_n - 1), p)
}

/// `prod_{k=0}^n (N+k)!/N! * B_{N,n} ≡ prod_{k=0}^n (1+k)! * B_n (mod p^t)` with
/// `t = ord_p(N-1)` (exact equality when `N = 1`).
pub fn hb_factorial_congruence(p: u64, big_n: &BigInt, n: usize) -> Result<CongruenceVerdict> {
    let t = ord_n_minus_one(big_n, p)?;
    let row = hb_row_big(big_n, n + 1)?;
    let lhs_scale: BigInt = (0..=n).map(|k| shifted_product(big_n, 1, k as i64)).product();
    let rhs_scale: BigInt = (0..=n).map(|k| factorial(k + 1)).product();
    let lhs = Rational::from_integer(lhs_scale) * &row[n];
    let rhs = Rational::from_integer(rhs_scale) * classical_row(n + 1).swap_remove(n);
    Ok(CongruenceVerdict::new(lhs, rhs, p, t))
}

fn threshold_met(big_n: &BigInt, p: u64, threshold: i64) -> Result<()> {
    let t = ord_n_minus_one(big_n, p)?;
    hypothesis(
        t >= PadicVal::Finite(threshold),
        format!("ord_p(N−1) ≥ {threshold} (have {t})"),
    )
}

/// `B_{N,n}/n ≡ B_n/n (mod p^{ν+1})`, provided `n ≢ 0 (mod p−1)` and
/// `ord_p(N-1)` reaches [`corollary_threshold`].
pub fn hb_kummer_corollary(p: u64, big_n: &BigInt, n: usize, nu: u32) -> Result<CongruenceVerdict> {
    check_prime(p)?;
    hypothesis(n >= 1, "n ≥ 1")?;
    hypothesis(n % (p as usize - 1) != 0, "n ≢ 0 (mod p−1)")?;
    threshold_met(big_n, p, corollary_threshold(p, n, nu)?)?;
    let row = hb_row_big(big_n, n + 1)?;
    let nq = Rational::from(n);
    let lhs = &row[n] / &nq;
    let rhs = classical_row(n + 1).swap_remove(n) / nq;
    Ok(CongruenceVerdict::new(lhs, rhs, p, PadicVal::Finite(nu as i64 + 1)))
}

/// `(1 - p^{m-1}) B_{N,m}/m ≡ (1 - p^{n-1}) B_{N,n}/n (mod p^{ν+1})` under the
/// Kummer hypotheses, `m >= n`, and [`pair_threshold`].
pub fn hb_kummer_pair(p: u64, big_n: &BigInt, m: usize, n: usize, nu: u32) -> Result<CongruenceVerdict> {
    kummer_hypotheses(p, m, n, nu)?;
    hypothesis(m >= n, "m ≥ n")?;
    threshold_met(big_n, p, pair_threshold(p, m, n, nu)?)?;
    let row = hb_row_big(big_n, m + 1)?;
    let side = |k: usize| euler_factor(p, k) * &row[k] / Rational::from(k);
    Ok(CongruenceVerdict::new(side(m), side(n), p, PadicVal::Finite(nu as i64 + 1)))
}

/// Every `(m, n, ν)` with `m, n <= max` satisfying the classical Kummer
/// hypotheses for `p`. Only `ν` with `(p−1)p^ν <= max` can relate distinct
/// indices; larger `ν` would only add the pairs `m = n`.
pub fn kummer_grid(p: u64, max: usize) -> Vec<(usize, usize, u32)> {
    let mut out = Vec::new();
    let mut nu = 0u32;
    while period(p, nu) as usize <= max {
        for m in (2..=max).step_by(2) {
            for n in (2..=max).step_by(2) {
                if kummer_hypotheses(p, m, n, nu).is_ok() {
                    out.push((m, n, nu));
                }
            }
        }
        nu += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_003));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(1_000_003u64 * 1_000_033));
        assert!(is_prime(999_999_999_989));
    }

    #[test]
    fn valuations() {
        assert_eq!(ordp(&q("3/4"), 2).unwrap(), PadicVal::Finite(-2));
        assert_eq!(ordp(&Rational::zero(), 7).unwrap(), PadicVal::Infinity);
        assert_eq!(ordp(&q("1/252"), 5).unwrap(), PadicVal::Finite(0));
        assert_eq!(ordp(&q("50/3"), 5).unwrap(), PadicVal::Finite(2));
        assert!(matches!(ordp(&q("1/2"), 4), Err(Error::NotPrime(4))));
        assert!(PadicVal::Infinity > PadicVal::Finite(1000));
    }

    fn nonzero_rational() -> impl Strategy<Value = Rational> {
        (-2000i64..=2000, 1i64..=2000)
            .prop_filter("nonzero", |(a, _)| *a != 0)
            .prop_map(|(a, b)| Rational::new(a, b).unwrap())
    }

    proptest! {
        #[test]
        fn valuation_laws(x in nonzero_rational(), y in nonzero_rational(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let (ox, oy) = (ordp(&x, p).unwrap(), ordp(&y, p).unwrap());
            prop_assert_eq!(ordp(&(&x * &y), p).unwrap(), ox + oy);
            let os = ordp(&(&x + &y), p).unwrap();
            prop_assert!(os >= ox.min(oy));
            if ox != oy {
                prop_assert_eq!(os, ox.min(oy));
            }
        }
    }

    #[test]
    fn congruent_examples() {
        let v = congruent(&q("1/252"), &Rational::from(3), 5, 1).unwrap();
        assert!(v.holds);
        assert_eq!(v.residues, Some((BigInt::from(3), BigInt::from(3))));
        let same = congruent(&q("7/9"), &q("7/9"), 5, 40).unwrap();
        assert!(same.holds);
        assert_eq!(same.ord_difference, PadicVal::Infinity);
        let v = congruent(&q("1/5"), &Rational::zero(), 5, 1).unwrap();
        assert!(!v.holds);
        assert_eq!(v.ord_difference, PadicVal::Finite(-1));
        assert_eq!(v.residues, None);
        assert!(congruent(&q("1"), &q("1"), 5, 0).is_err());
        assert!(congruent(&q("1"), &q("1"), 9, 1).is_err());
    }

    #[test]
    fn residue_of_rationals() {
        let m = BigInt::from(25);
        assert_eq!(residue(&q("-1/2"), &m), Some(BigInt::from(12)));
        assert_eq!(residue(&q("3/10"), &m), None);
    }

    #[test]
    fn classical_kummer_examples() {
        let v = kummer_classical(5, 6, 2, 0).unwrap();
        assert!(v.holds);
        assert_eq!(v.residues, Some((BigInt::from(3), BigInt::from(3))));
        let v = kummer_classical(5, 22, 2, 1).unwrap();
        assert!(v.holds);
        assert_eq!(v.modulus(), Some(BigInt::from(25)));
        assert!(kummer_classical(7, 10, 10, 3).unwrap().holds);
    }

    #[test]
    fn kummer_hypothesis_reporting() {
        let msg = |r: Result<CongruenceVerdict>| match r {
            Err(Error::Hypothesis(s)) => s,
            other => panic!("expected hypothesis error, got {other:?}"),
        };
        assert_eq!(msg(kummer_classical(5, 6, 4, 0)), "n ≢ 0 (mod p−1)");
        assert_eq!(msg(kummer_classical(5, 6, 3, 0)), "n positive and even");
        assert_eq!(msg(kummer_classical(5, 10, 2, 1)), "m ≡ n (mod (p−1)p^ν)");
        assert!(matches!(kummer_classical(6, 2, 2, 0), Err(Error::NotPrime(6))));
    }

    #[test]
    fn classical_kummer_grid() {
        for p in [5u64, 7, 11] {
            let grid = kummer_grid(p, 40);
            assert!(!grid.is_empty());
            for (m, n, nu) in grid {
                assert!(kummer_classical(p, m, n, nu).unwrap().holds, "p={p} m={m} n={n} nu={nu}");
            }
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(corollary_threshold(5, 6, 0).unwrap(), 4);
        assert_eq!(pair_threshold(5, 22, 2, 1).unwrap(), 48);
        assert_eq!(corollary_threshold(7, 2, 0).unwrap(), 1);
        assert_eq!(pair_threshold(5, 6, 2, 0).unwrap(), 4);
    }

    #[test]
    fn factorial_lemma() {
        let v = hb_factorial_congruence(5, &BigInt::from(7), 0).unwrap();
        assert!(v.holds);
        assert_eq!(v.lhs, Rational::one());
        let exact = hb_factorial_congruence(3, &BigInt::from(1), 6).unwrap();
        assert_eq!(exact.exponent, PadicVal::Infinity);
        assert!(exact.holds);
        let v = hb_factorial_congruence(5, &BigInt::from(26), 4).unwrap();
        assert_eq!(v.exponent, PadicVal::Finite(2));
        assert!(v.holds);
        for p in [3u64, 5] {
            for t in 1..=2u32 {
                let big_n = BigInt::from(1 + p.pow(t));
                for n in 0..=8 {
                    assert!(hb_factorial_congruence(p, &big_n, n).unwrap().holds, "p={p} t={t} n={n}");
                }
            }
        }
    }

    #[test]
    fn corollary_examples() {
        let big_n = BigInt::from(626);
        for n in [6, 2] {
            let v = hb_kummer_corollary(5, &big_n, n, 0).unwrap();
            assert!(v.holds);
            assert_eq!(v.residues, Some((BigInt::from(3), BigInt::from(3))));
        }
        let exact = hb_kummer_corollary(5, &BigInt::from(1), 6, 0).unwrap();
        assert_eq!(exact.lhs, exact.rhs);
        match hb_kummer_corollary(5, &BigInt::from(26), 6, 0) {
            Err(Error::Hypothesis(s)) => assert!(s.starts_with("ord_p(N−1) ≥ 4"), "{s}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(hb_kummer_corollary(5, &big_n, 4, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn pair_examples() {
        let v = hb_kummer_pair(5, &BigInt::from(626), 6, 2, 0).unwrap();
        assert!(v.holds);
        assert!(hb_kummer_pair(5, &BigInt::from(626), 6, 6, 0).unwrap().holds);
        assert!(matches!(hb_kummer_pair(5, &BigInt::from(626), 2, 6, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn display() {
        let v = hb_kummer_corollary(5, &BigInt::from(626), 6, 0).unwrap();
        assert_eq!(v.to_string(), "holds; residue 3 (mod 5)");
    }
}
