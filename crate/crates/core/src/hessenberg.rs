//! Toeplitz-Hessenberg determinants
//!
//! ```text
//! | a_1  a_0                |
//! | a_2  a_1  a_0           |
//! | ...            ...  a_0 |
//! | a_m  a_{m-1} ...    a_1 |
//! ```
//!
//! evaluated by first-row expansion, `D_m = sum_{l=1}^m (-a_0)^{l-1} a_l D_{m-l}`,
//! together with the partition-sum (Trudi) form and the inversion relation
//! between two such families.

use std::fmt;

use crate::error::Result;
use crate::exactnum::{enumerate_partition_vectors, factorial, multinomial, Rational};
use crate::hbnum::{check_n_param, check_order};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToeplitzHessenberg {
    a0: Rational,
    /// `a_1, ..., a_m`
    entries: Vec<Rational>,
}

impl ToeplitzHessenberg {
    pub fn new(a0: Rational, entries: Vec<Rational>) -> Self {
        ToeplitzHessenberg { a0, entries }
    }

    /// Unit superdiagonal (`a_0 = 1`).
    pub fn unit(entries: Vec<Rational>) -> Self {
        Self::new(Rational::one(), entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Row-major dense matrix, lower Hessenberg with `a_0` above the diagonal.
    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let m = self.dim();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if j == i + 1 {
                            self.a0.clone()
                        } else if j <= i {
                            self.entries[i - j].clone()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `D_0, D_1, ..., D_m` for the leading principal blocks.
    pub fn det_prefixes(&self) -> Vec<Rational> {
        let m = self.dim();
        let neg_a0 = -&self.a0;
        let mut d = Vec::with_capacity(m + 1);
        d.push(Rational::one());
        for k in 1..=m {
            let mut acc = Rational::zero();
            let mut sign = Rational::one();
            for l in 1..=k {
                if !self.entries[l - 1].is_zero() {
                    acc += &sign * &self.entries[l - 1] * &d[k - l];
                }
                sign *= &neg_a0;
            }
            d.push(acc);
        }
        d
    }

    pub fn det(&self) -> Rational {
        self.det_prefixes().pop().expect("D_0 is always present")
    }

    /// `sum_{t_1 + 2t_2 + .. + m t_m = m} multinomial(t) (-a_0)^{m - sum t} prod a_i^{t_i}`.
    /// The empty matrix has determinant 1.
    pub fn trudi_expand(&self) -> Rational {
        let m = self.dim();
        if m == 0 {
            return Rational::one();
        }
        let neg_a0 = -&self.a0;
        let mut total = Rational::zero();
        for pv in enumerate_partition_vectors(m).expect("m >= 1") {
            let t = pv.multiplicities();
            let mut term = Rational::from_integer(multinomial(t));
            term *= neg_a0.pow((m - pv.part_count()) as i32);
            for (i, &ti) in t.iter().enumerate() {
                if ti > 0 {
                    term *= self.entries[i].pow(ti as i32);
                }
            }
            total += term;
        }
        total
    }
}

fn scaled_det(n: usize, entries: Vec<Rational>) -> Rational {
    Rational::sign_power(n) * Rational::from_integer(factorial(n)) * ToeplitzHessenberg::unit(entries).det()
}

/// `B_{N,n} = (-1)^n n! det[N!/(N+i-j+1)!]`.
pub fn hb_det(big_n: u64, n: usize) -> Result<Rational> {
    hb_higher_det(big_n, 1, n)
}

/// `B_{N,n}^{(r)} = (-1)^n n! det[M_r(i-j+1)]`.
pub fn hb_higher_det(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    check_order(r)?;
    if n == 0 {
        return Err(crate::Error::RoutePrecondition("the determinant needs n >= 1".into()));
    }
    let m = crate::altforms::MrTable::new(big_n, r, n)?;
    Ok(scaled_det(n, m.values()[1..].to_vec()))
}

/// One failed check of [`inversion_pair_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InversionFailure {
    /// `alpha_k` differs from the determinant of `R(1..k)`.
    Forward(usize),
    /// `R(k)` differs from the determinant of `alpha_1..k`.
    Backward(usize),
    /// `sum_{j=0}^k (-1)^{k-j} alpha_j R(k-j) != 0`.
    Relation(usize),
    /// Entry `(row, col)` of the matrix product is not that of the identity.
    MatrixInverse { row: usize, col: usize },
}

impl fmt::Display for InversionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InversionFailure::Forward(k) => write!(f, "alpha_{k} != det(R_1..R_{k})"),
            InversionFailure::Backward(k) => write!(f, "R_{k} != det(alpha_1..alpha_{k})"),
            InversionFailure::Relation(k) => write!(f, "convolution relation fails at k = {k}"),
            InversionFailure::MatrixInverse { row, col } => {
                write!(f, "matrix product differs from identity at ({row}, {col})")
            }
        }
    }
}

/// Unit lower-triangular Toeplitz matrix with `diag[k]` on the `k`-th
/// subdiagonal (`diag[0]` is ignored and taken as 1).
pub fn unit_lower_toeplitz(diag: &[Rational]) -> Vec<Vec<Rational>> {
    let m = diag.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Rational::one(),
                    std::cmp::Ordering::Greater => diag[i - j].clone(),
                    std::cmp::Ordering::Less => Rational::zero(),
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let p = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    a[i].iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, row)| x * &row[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Checks that `alpha_1..n` and `R(1..n)` form an inversion pair: each is the
/// unit Toeplitz-Hessenberg determinant of the other, the convolution
/// relation vanishes, and the unit lower-triangular Toeplitz matrix of
/// `alpha` times that of `(-1)^k R(k)` is the identity. Returns every failed
/// check; an empty list means the pair is consistent.
///
/// The alternating sign on `R` is required: the relation says the generating
/// series of `alpha_k (-x)^k` and `R(k) x^k` are mutually inverse.
pub fn inversion_pair_check(alphas: &[Rational], rs: &[Rational]) -> Vec<InversionFailure> {
    assert_eq!(alphas.len(), rs.len(), "sequences must have equal length");
    let n = alphas.len();
    let mut failures = Vec::new();

    let from_r = ToeplitzHessenberg::unit(rs.to_vec()).det_prefixes();
    let from_alpha = ToeplitzHessenberg::unit(alphas.to_vec()).det_prefixes();
    for k in 1..=n {
        if from_r[k] != alphas[k - 1] {
            failures.push(InversionFailure::Forward(k));
        }
    }
    for k in 1..=n {
        if from_alpha[k] != rs[k - 1] {
            failures.push(InversionFailure::Backward(k));
        }
    }

    let with_one = |v: &[Rational]| {
        let mut out = vec![Rational::one()];
        out.extend_from_slice(v);
        out
    };
    let alpha = with_one(alphas);
    let r = with_one(rs);
    for k in 1..=n {
        let s: Rational = (0..=k)
            .map(|j| Rational::sign_power(k - j) * &alpha[j] * &r[k - j])
            .sum();
        if !s.is_zero() {
            failures.push(InversionFailure::Relation(k));
        }
    }

    let signed_r: Vec<Rational> = r.iter().enumerate().map(|(k, v)| Rational::sign_power(k) * v).collect();
    let prod = mat_mul(&unit_lower_toeplitz(&alpha), &unit_lower_toeplitz(&signed_r));
    for (i, row) in prod.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let expected = if i == j { Rational::one() } else { Rational::zero() };
            if *v != expected {
                failures.push(InversionFailure::MatrixInverse { row: i, col: j });
            }
        }
    }
    failures
}
