//! Alternative expressions for `B_{N,n}` and `B_{N,n}^{(r)}`: composition
//! sums, partition (Trudi) sums, descent in `N`, and the multinomial
//! convolution. Each function evaluates its own formula; agreement with
//! [`crate::hbnum`] is what the tests check.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{
    binom, composition_sums, enumerate_partition_vectors, factorial, multinomial,
    CompositionSpec, Rational,
};
use crate::hbnum::{self, check_n_param, check_order, factorial_ratios, Series};
use crate::hessenberg::ToeplitzHessenberg;

fn need_positive_n(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::RoutePrecondition(format!("{what} needs n >= 1")));
    }
    Ok(())
}

fn n_fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `M_r(e) = sum_{i_1+..+i_r = e, i_j >= 0} (N!)^r / ((N+i_1)! ... (N+i_r)!)`,
/// summed term by term over the compositions.
pub fn mr(big_n: u64, r: usize, e: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    check_order(r)?;
    let f = factorial_ratios(&BigInt::from(big_n), e + 1);
    Ok(CompositionSpec::nonnegative(e, r)?
        .iter()
        .map(|c| c.iter().map(|&i| &f[i]).product::<Rational>())
        .sum())
}

/// `M_r(0), ..., M_r(max)` for fixed `(N, r)`, taken from the `r`-th power of
/// the series `sum N!/(N+i)! x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MrTable {
    big_n: u64,
    r: usize,
    values: Vec<Rational>,
}

impl MrTable {
    pub fn new(big_n: u64, r: usize, max: usize) -> Result<Self> {
        check_n_param(big_n)?;
        check_order(r)?;
        let f = Series::new(factorial_ratios(&BigInt::from(big_n), max + 1));
        Ok(MrTable {
            big_n,
            r,
            values: f.pow(r).into_coeffs(),
        })
    }

    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, e: usize) -> Option<&Rational> {
        self.values.get(e)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// `n! sum_k sum_{i_1+..+i_k = n, i_j >= 1} (-N!)^k / ((N+i_1)! ... (N+i_k)!)`.
pub fn hb_explicit_comp(big_n: u64, n: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    need_positive_n(n, "the composition sum")?;
    let f = factorial_ratios(&BigInt::from(big_n), n + 1);
    let mut total = Rational::zero();
    for k in 1..=n {
        let s: Rational = CompositionSpec::positive(n, k)?
            .iter()
            .map(|c| c.iter().map(|&i| &f[i]).product::<Rational>())
            .sum();
        total += Rational::sign_power(k) * s;
    }
    Ok(n_fact(n) * total)
}

/// `n! sum_k C(n+1, k+1) sum_{i_1+..+i_k = n, i_j >= 0} (-N!)^k / prod (N+i_j)!`.
///
/// The inner sums over nonnegative compositions are accumulated by
/// convolution (see [`composition_sums`]) instead of listing the tuples.
pub fn hb_explicit_binom(big_n: u64, n: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    need_positive_n(n, "the binomial-weighted sum")?;
    let f = factorial_ratios(&BigInt::from(big_n), n + 1);
    let inner = composition_sums(&f, n, n, 0);
    let mut total = Rational::zero();
    for (k, s) in inner.iter().enumerate().skip(1) {
        let w = Rational::from_integer(binom(BigInt::from(n + 1), k + 1));
        total += Rational::sign_power(k) * w * s;
    }
    Ok(n_fact(n) * total)
}

/// `sum_k (-1)^k sum_{i_1+..+i_k = n, i_j >= 1} multinomial(i) B_{N,i_1} ... B_{N,i_k}`,
/// which equals `1 / C(N+n, N)`.
pub fn reciprocal_binom_inverse(big_n: u64, n: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    need_positive_n(n, "the inversion sum")?;
    let row = hbnum::hb_row(big_n, n + 1)?;
    let mut total = Rational::zero();
    for k in 1..=n {
        let s: Rational = CompositionSpec::positive(n, k)?
            .iter()
            .map(|c| {
                let prod: Rational = c.iter().map(|&i| &row[i]).product();
                Rational::from_integer(multinomial(&c)) * prod
            })
            .sum();
        total += Rational::sign_power(k) * s;
    }
    Ok(total)
}

/// `n! sum_k (-1)^k sum_{e_1+..+e_k = n, e_j >= 1} M_r(e_1) ... M_r(e_k)`.
pub fn hb_higher_explicit(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    need_positive_n(n, "the explicit M_r sum")?;
    let m = MrTable::new(big_n, r, n)?;
    let mut total = Rational::zero();
    for k in 1..=n {
        let s: Rational = CompositionSpec::positive(n, k)?
            .iter()
            .map(|c| c.iter().map(|&e| &m.values[e]).product::<Rational>())
            .sum();
        total += Rational::sign_power(k) * s;
    }
    Ok(n_fact(n) * total)
}

/// `sum_{n_1+..+n_r = n, n_i >= 0} n!/(n_1! ... n_r!) B_{N,n_1} ... B_{N,n_r}`.
pub fn hb_higher_convolution(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    check_order(r)?;
    let row = hbnum::hb_row(big_n, n + 1)?;
    Ok(CompositionSpec::nonnegative(n, r)?
        .iter()
        .map(|c| {
            let prod: Rational = c.iter().map(|&i| &row[i]).product();
            Rational::from_integer(multinomial(&c)) * prod
        })
        .sum())
}

fn descent_preconditions(big_n: u64, n: usize) -> Result<()> {
    check_n_param(big_n)?;
    if big_n < 2 {
        return Err(Error::RoutePrecondition("descent in N needs N >= 2".into()));
    }
    need_positive_n(n, "descent in N")
}

/// `B_{N,0}, ..., B_{N,len-1}` from row `N-1` by
///
/// ```text
/// B_{N,n} = N/(N+n) { B_{N-1,n} + sum_{m=1}^{n-1} C(n, n-m+1) B_{N,m} B_{N-1,n-m+1} }
/// ```
pub fn hb_descent_row(big_n: u64, len: usize) -> Result<Vec<Rational>> {
    descent_preconditions(big_n, 1)?;
    let prev = hbnum::hb_row(big_n - 1, len)?;
    let nq = Rational::from(big_n);
    let mut row: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            row.push(Rational::one());
            continue;
        }
        let mut acc = prev[n].clone();
        for m in 1..n {
            let c = Rational::from_integer(binom(BigInt::from(n), n - m + 1));
            acc += c * &row[m] * &prev[n - m + 1];
        }
        row.push(&nq / Rational::from(big_n + n as u64) * acc);
    }
    Ok(row)
}

/// `B_{N,n}` by one-step descent; the smaller `B_{N,m}` come from the same
/// relation.
pub fn hb_descent_step(big_n: u64, n: usize) -> Result<Rational> {
    descent_preconditions(big_n, n)?;
    Ok(hb_descent_row(big_n, n + 1)?.pop().expect("row has n+1 entries"))
}

/// `B_{N,n}` from `B_{N-1,.}` alone, summing over chains
/// `1 <= i_m < ... < i_1 < i_0 = n`:
///
/// ```text
/// N/(N+n) sum_chains B_{N-1,i_m} prod_{k=1}^m B_{N-1,i_{k-1}-i_k+1} C(i_{k-1}, i_{k-1}-i_k+1) N/(N+i_k)
/// ```
///
/// The chain sum is accumulated from the top: `w[i]` is the total weight of
/// all chain prefixes `n = i_0 > ... > i`, so the cost is quadratic in `n`
/// rather than `2^(n-1)`.
pub fn hb_descent_nested(big_n: u64, n: usize) -> Result<Rational> {
    descent_preconditions(big_n, n)?;
    let prev = hbnum::hb_row(big_n - 1, n + 1)?;
    let nq = Rational::from(big_n);
    let mut w = vec![Rational::zero(); n + 1];
    w[n] = Rational::one();
    for i in (1..n).rev() {
        let link = &nq / Rational::from(big_n + i as u64);
        let mut acc = Rational::zero();
        for j in i + 1..=n {
            if w[j].is_zero() {
                continue;
            }
            let c = Rational::from_integer(binom(BigInt::from(j), j - i + 1));
            acc += &w[j] * &prev[j - i + 1] * c;
        }
        w[i] = acc * link;
    }
    let total: Rational = (1..=n).map(|i| &w[i] * &prev[i]).sum();
    Ok(&nq / Rational::from(big_n + n as u64) * total)
}

/// `n! sum_{t_1 + 2t_2 + .. + n t_n = n} multinomial(t) (-1)^{sum t} prod M_r(i)^{t_i}`.
pub fn hb_trudi(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    need_positive_n(n, "the partition sum")?;
    let m = MrTable::new(big_n, r, n)?;
    let mut total = Rational::zero();
    for pv in enumerate_partition_vectors(n)? {
        let t = pv.multiplicities();
        let mut term = Rational::from_integer(multinomial(t));
        for (i, &ti) in t.iter().enumerate() {
            if ti > 0 {
                term *= m.values[i + 1].pow(ti as i32);
            }
        }
        total += Rational::sign_power(pv.part_count()) * term;
    }
    Ok(n_fact(n) * total)
}

/// `M_r(n)` as the Toeplitz-Hessenberg determinant with unit superdiagonal
/// and entries `a_k = (-1)^k B_{N,k}^{(r)} / k!`.
pub fn recover_mr_det(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    need_positive_n(n, "the inverse determinant")?;
    let row = hbnum::hb_higher_row(big_n, r, n + 1)?;
    let entries: Vec<Rational> = row
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, b)| Rational::sign_power(k) * b / n_fact(k))
        .collect();
    Ok(ToeplitzHessenberg::unit(entries).det())
}
