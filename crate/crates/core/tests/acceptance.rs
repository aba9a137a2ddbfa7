//! Acceptance gate: one line per criterion with its time budget. Runs as a
//! plain binary so the lines always reach the output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hgbern_core::altforms::{mr, recover_mr_det};
use hgbern_core::congruence::{
    corollary_threshold, hb_kummer_corollary, hb_kummer_pair, is_prime, kummer_classical, kummer_grid,
    pair_threshold,
};
use hgbern_core::contfrac::{
    approximation_defect, classical_identity, convergent_closed, convergent_rec, identity_even,
    identity_even_max_h, identity_odd, identity_odd_max_h, ClassicalVariant,
};
use hgbern_core::hbnum::{hb, hb_higher, hb_higher_row};
use hgbern_core::hessenberg::{hb_det, hb_higher_det, ToeplitzHessenberg};
use hgbern_core::{HbKey, Rational, Route};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn fixture_table() -> Check {
    let expected = ["1", "-1/3", "1/18", "1/90", "-1/270"];
    for (n, e) in expected.iter().enumerate() {
        let v = hb(2, n).map_err(|e| e.to_string())?;
        ensure(v == q(e), || format!("hb(2,{n}) = {v}, want {e}"))?;
    }
    Ok(())
}

fn symbolic_spot_checks() -> Check {
    for big_n in 1..=10i64 {
        let n1 = Rational::from(big_n + 1);
        let want = [
            -Rational::one() / &n1,
            Rational::from(2) / (&n1 * &n1 * Rational::from(big_n + 2)),
            Rational::from(6 * (big_n - 1)) / (&n1 * &n1 * &n1 * Rational::from((big_n + 2) * (big_n + 3))),
        ];
        for (i, w) in want.iter().enumerate() {
            let v = hb(big_n as u64, i + 1).unwrap();
            ensure(v == *w, || format!("hb({big_n},{}) = {v}, want {w}", i + 1))?;
        }
    }
    Ok(())
}

fn route_agreement() -> Check {
    let mut points = 0;
    for big_n in 1..=5 {
        for r in 1..=3 {
            for n in 0..=14 {
                let key = HbKey::new(big_n, r, n).unwrap();
                let oracle = hb_higher(big_n, r, n).unwrap();
                for route in Route::ALL.into_iter().filter(|x| x.applies(&key)) {
                    let v = route.evaluate(&key).map_err(|e| e.to_string())?;
                    ensure(v == oracle, || format!("{route} at {key}: {v} vs {oracle}"))?;
                    points += 1;
                }
            }
            for n in 1..=20 {
                let oracle = hb_higher(big_n, r, n).unwrap();
                ensure(hb_higher_det(big_n, r, n).unwrap() == oracle, || format!("det N={big_n} r={r} n={n}"))?;
            }
        }
        for n in 1..=20 {
            ensure(hb_det(big_n, n).unwrap() == hb(big_n, n).unwrap(), || format!("hb_det N={big_n} n={n}"))?;
        }
    }
    ensure(points > 500, || format!("only {points} route evaluations"))
}

/// `sum_{j} alpha_j * (-1)^{k-j} R_{k-j}` as the entries of the product of
/// the two unit lower-triangular Toeplitz matrices.
fn product_is_identity(alpha: &[Rational], r: &[Rational]) -> bool {
    let n = alpha.len();
    for i in 0..n {
        for j in 0..=i {
            let k = i - j;
            let mut s = Rational::zero();
            for t in 0..=k {
                let sign = if (k - t) % 2 == 0 { Rational::one() } else { -Rational::one() };
                s += &alpha[t] * &r[k - t] * sign;
            }
            let want = if i == j { Rational::one() } else { Rational::zero() };
            if s != want {
                return false;
            }
        }
    }
    true
}

fn inversion_duality() -> Check {
    for big_n in 1..=4 {
        for r in 1..=3 {
            for n in 1..=10 {
                let got = recover_mr_det(big_n, r, n).unwrap();
                let want = mr(big_n, r, n).unwrap();
                ensure(got == want, || format!("recover_mr_det({big_n},{r},{n}) = {got}, mr = {want}"))?;
            }
        }
    }
    for big_n in 1..=4 {
        for r in 1..=3 {
            for n in 1..=12 {
                let row = hb_higher_row(big_n, r, n + 1).unwrap();
                let mut fact = BigInt::from(1);
                let mut alpha = vec![Rational::one()];
                let mut rs = vec![Rational::one()];
                for k in 1..=n {
                    fact *= k;
                    let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                    alpha.push(sign * &row[k] / Rational::from_integer(fact.clone()));
                    rs.push(mr(big_n, r, k).unwrap());
                }
                ensure(product_is_identity(&alpha, &rs), || format!("matrix product N={big_n} r={r} n={n}"))?;
            }
        }
    }
    Ok(())
}

fn continued_fractions() -> Check {
    for big_n in 1..=6 {
        for n in 0..=12 {
            let rec = convergent_rec(big_n, n).unwrap();
            let closed = convergent_closed(big_n, n).unwrap();
            ensure(rec == closed, || format!("closed form differs at N={big_n} n={n}"))?;
            let d = approximation_defect(&rec).unwrap();
            ensure(d.is_zero() && d.order() == n + 1, || format!("defect at N={big_n} n={n}"))?;
        }
    }
    Ok(())
}

fn identity_families() -> Check {
    let mut checked = 0;
    for n in 1..=8 {
        for big_n in 1..=4 {
            for h in 0..=identity_even_max_h(n) {
                let (l, r) = identity_even(big_n, n, h).unwrap();
                ensure(l == r, || format!("even N={big_n} n={n} h={h}: {l} vs {r}"))?;
                checked += 1;
            }
            for h in 0..=identity_odd_max_h(n) {
                let (l, r) = identity_odd(big_n, n, h).unwrap();
                ensure(l == r, || format!("odd N={big_n} n={n} h={h}: {l} vs {r}"))?;
                checked += 1;
            }
        }
        for v in ClassicalVariant::ALL {
            for h in 0..=v.max_h(n) {
                let (l, r) = classical_identity(v, n, h).unwrap();
                ensure(l == r, || format!("{v} n={n} h={h}: {l} vs {r}"))?;
                checked += 1;
            }
        }
    }
    ensure(checked > 300, || format!("only {checked} identities"))
}

fn congruence_examples() -> Check {
    let five = BigInt::from(5);
    let unit = BigInt::from(1);
    let three = Some((BigInt::from(3), BigInt::from(3)));

    let t1 = pair_threshold(5, 6, 2, 0).unwrap();
    ensure(t1 == 4 && corollary_threshold(5, 6, 0).unwrap() == 4, || format!("example 1 threshold {t1}"))?;
    let n1 = &unit + five.pow(4);
    let pair = hb_kummer_pair(5, &n1, 6, 2, 0).map_err(|e| e.to_string())?;
    ensure(pair.holds && pair.residues == three, || format!("example 1 pair: {pair}"))?;
    for n in [6, 2] {
        let v = hb_kummer_corollary(5, &n1, n, 0).map_err(|e| e.to_string())?;
        ensure(v.residues == three, || format!("example 1, B_(N,{n})/{n}: {v}"))?;
    }

    let t2 = pair_threshold(5, 22, 2, 1).unwrap();
    ensure(t2 == 48, || format!("example 2 threshold {t2}"))?;
    let n2 = &unit + five.pow(48);
    let pair = hb_kummer_pair(5, &n2, 22, 2, 1).map_err(|e| e.to_string())?;
    ensure(pair.holds, || format!("example 2: {pair}"))?;
    ensure(pair.residues_mod(1) == three, || format!("example 2 mod 5: {pair}"))?;
    ensure(
        pair.residues == Some((BigInt::from(8), BigInt::from(8))),
        || format!("example 2 mod 25: {pair}"),
    )
}

fn kummer_grid_check() -> Check {
    let mut total = 0;
    for p in [5u64, 7, 11] {
        // hypothesis-satisfying triples, enumerated independently of the library
        let mut mine = Vec::new();
        let mut nu = 0u32;
        while (p - 1) * p.pow(nu) <= 40 {
            let period = ((p - 1) * p.pow(nu)) as usize;
            for m in (2..=40).step_by(2) {
                for n in (2..=40).step_by(2) {
                    if m % (p as usize - 1) != 0 && n % (p as usize - 1) != 0 && (m as isize - n as isize) % period as isize == 0 {
                        mine.push((m, n, nu));
                    }
                }
            }
            nu += 1;
        }
        ensure(mine == kummer_grid(p, 40), || format!("grid enumeration differs for p={p}"))?;
        for &(m, n, nu) in &mine {
            let v = kummer_classical(p, m, n, nu).map_err(|e| e.to_string())?;
            ensure(v.holds, || format!("p={p} m={m} n={n} nu={nu}: {v}"))?;
        }
        total += mine.len();
    }
    ensure(total > 100 && is_prime(11), || format!("grid has {total} triples"))
}

/// Laplace expansion along the first row.
fn cofactor(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = a * cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The dense Toeplitz-Hessenberg matrix with `a0` on the superdiagonal and
/// `a_{i-j+1}` on and below the diagonal.
fn dense(a0: &Rational, a: &[Rational]) -> Vec<Vec<Rational>> {
    let m = a.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if j == i + 1 {
                        a0.clone()
                    } else if j <= i {
                        a[i - j].clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn brute_force_oracles() -> Check {
    let mut rng = rand::rngs::StdRng::seed_from_u64(20261018);
    let rat = |rng: &mut rand::rngs::StdRng| Rational::new(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=7)).unwrap();
    for case in 0..200 {
        let m = rng.gen_range(0..=6);
        let a0 = if case % 4 == 0 { Rational::one() } else { rat(&mut rng) };
        let a: Vec<Rational> = (0..m).map(|_| rat(&mut rng)).collect();
        let mat = ToeplitzHessenberg::new(a0.clone(), a.clone());
        let want = cofactor(&dense(&a0, &a));
        ensure(mat.det() == want, || format!("case {case}: det {} vs cofactor {want}", mat.det()))?;
        ensure(mat.trudi_expand() == want, || format!("case {case}: Trudi {} vs {want}", mat.trudi_expand()))?;
    }
    // Brioschi's case a0 = 2
    let a: Vec<Rational> = ["1/2", "-1/3", "2", "5/6", "-1", "1/7"].iter().map(|s| q(s)).collect();
    let mat = ToeplitzHessenberg::new(Rational::from(2), a.clone());
    let want = cofactor(&dense(&Rational::from(2), &a));
    ensure(mat.trudi_expand() == want && mat.det() == want, || "Brioschi case".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fixture table hb(2, 0..4)", 1, fixture_table),
        ("symbolic spot checks N <= 10", 1, symbolic_spot_checks),
        ("route agreement N<=5 r<=3 n<=14, det to n=20", 60, route_agreement),
        ("inversion duality and matrix product", 30, inversion_duality),
        ("continued fraction convergents and defect", 30, continued_fractions),
        ("identity families n <= 8", 60, identity_families),
        ("congruence examples, thresholds 4 and 48", 15, congruence_examples),
        ("classical Kummer grid p in {5,7,11}, m,n <= 40", 30, kummer_grid_check),
        ("determinant and Trudi brute-force oracles", 30, brute_force_oracles),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let limit = Duration::from_secs(*budget);
        let verdict = match (&result, took <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (over time budget)".to_string(),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("acceptance {}: {verdict} | {name} | {:.3}s of {budget}s", i + 1, took.as_secs_f64());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
