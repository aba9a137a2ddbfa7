use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use hgbern_core::congruence::{
    corollary_threshold, hb_factorial_congruence, hb_kummer_corollary, hb_kummer_pair,
    kummer_classical, pair_threshold, CongruenceVerdict,
};
use hgbern_core::contfrac::{approximation_defect, convergent_closed, convergent_rec};
use hgbern_core::{Error, HbKey, MemoStore, Rational, Route};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::span::Span;
use crate::{CongruenceCmd, Failure, Format, ParamN};

type Outcome = Result<(), Failure>;

fn open_store(cache: Option<PathBuf>) -> Result<MemoStore, Error> {
    match cache {
        Some(p) => MemoStore::open(p),
        None => Ok(MemoStore::in_memory()),
    }
}

fn to_usize(v: u64) -> usize {
    usize::try_from(v).expect("index fits in usize")
}

pub fn compute(
    big_n: u64,
    r: usize,
    n: usize,
    route: Route,
    decimal: Option<usize>,
    show_route: bool,
    cache: Option<PathBuf>,
) -> Outcome {
    let key = HbKey::new(big_n, r, n)?;
    let value = if route == Route::Recurrence {
        let store = open_store(cache)?;
        let v = store.get(key)?;
        store.save()?;
        v
    } else {
        route.evaluate(&key)?
    };
    let mut line = value.to_string();
    if let Some(k) = decimal {
        line.push_str(&format!(" ≈ {}", value.to_decimal_string(k)));
    }
    if show_route {
        line.push_str(&format!("  [{route}]"));
    }
    println!("{line}");
    Ok(())
}

#[derive(Serialize)]
struct Row {
    #[serde(rename = "N")]
    big_n: u64,
    r: usize,
    n: usize,
    value: String,
}

pub fn table(
    big_n: Span,
    r: Span,
    n: Span,
    format: Format,
    output: Option<PathBuf>,
    cache: Option<PathBuf>,
) -> Outcome {
    let store = open_store(cache)?;
    let mut rows = Vec::new();
    for bn in big_n.iter() {
        for rr in r.iter() {
            for nn in n.iter() {
                let key = HbKey::new(bn, to_usize(rr), to_usize(nn))?;
                rows.push(Row {
                    big_n: bn,
                    r: key.r,
                    n: key.n,
                    value: store.get(key)?.to_string(),
                });
            }
        }
    }
    store.save()?;
    let sink: Box<dyn Write> = match output {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            for row in &rows {
                w.serialize(row).map_err(|e| Failure::Core(Error::Io(e.into())))?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut sink, &rows).map_err(|e| Failure::Core(Error::Io(e.into())))?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

fn parse_key(s: &str) -> Result<HbKey, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("expected N,r,n, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let big_n = parts[0].parse().map_err(|_| bad())?;
    let r = parts[1].parse().map_err(|_| bad())?;
    let n = parts[2].parse().map_err(|_| bad())?;
    Ok(HbKey::new(big_n, r, n)?)
}

/// Values of every applicable route at one grid point.
type PointResult = Result<Vec<(Route, Rational)>, Error>;

fn evaluate_point(key: HbKey, routes: &[Route], store: &MemoStore) -> PointResult {
    routes
        .iter()
        .filter(|r| r.applies(&key))
        .map(|&route| {
            // the recurrence route reads through the memo store, so a cache
            // entry is checked against every other route
            let v = if route == Route::Recurrence {
                store.get(key)?
            } else {
                route.evaluate(&key)?
            };
            Ok((route, v))
        })
        .collect()
}

pub fn verify(
    big_n: Span,
    r: Span,
    n: Span,
    mut routes: Vec<Route>,
    jobs: usize,
    cache: Option<PathBuf>,
    inject_fault: Option<String>,
) -> Outcome {
    if routes.is_empty() {
        routes = Route::ALL.to_vec();
    }
    routes.sort();
    routes.dedup();
    if routes.len() < 2 {
        return Err(Failure::Usage("verify needs at least two routes".into()));
    }
    let store = open_store(cache)?;
    let mut keys = Vec::new();
    for bn in big_n.iter() {
        for rr in r.iter() {
            for nn in n.iter() {
                keys.push(HbKey::new(bn, to_usize(rr), to_usize(nn))?);
            }
        }
    }
    if let Some(target) = inject_fault {
        let key = parse_key(&target)?;
        let v = store.get(key)?;
        store.replace(key, v + Rational::one());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let results: Vec<PointResult> =
        pool.install(|| keys.par_iter().map(|&k| evaluate_point(k, &routes, &store)).collect());

    let mut evaluations = 0usize;
    let mut compared = 0usize;
    for (key, result) in keys.iter().zip(results) {
        let values = result?;
        evaluations += values.len();
        if values.len() >= 2 {
            compared += 1;
        }
        let (first_route, first) = &values[0];
        if let Some((route, v)) = values.iter().find(|(_, v)| v != first) {
            return Err(Failure::Verification(format!(
                "disagreement at {key}: {first_route} = {first}, {route} = {v}"
            )));
        }
    }
    let names: Vec<&str> = routes.iter().map(|r| r.name()).collect();
    println!(
        "ok: {} grid points ({compared} compared), {evaluations} evaluations, routes {}",
        keys.len(),
        names.join(",")
    );
    Ok(())
}

/// `N` from `-N` or `1 + p^t`.
fn resolve_n(param: &ParamN, p: u64, default_t: impl FnOnce() -> Result<i64, Error>) -> Result<(BigInt, String), Error> {
    if let Some(n) = &param.big_n {
        return Ok((n.clone(), n.to_string()));
    }
    let t = match param.ordp_target {
        Some(t) => t,
        None => u32::try_from(default_t()?).map_err(|_| Error::InvalidArgument("threshold out of range".into()))?,
    };
    Ok((BigInt::from(1) + BigInt::from(p).pow(t), format!("1 + {p}^{t}")))
}

fn report(v: &CongruenceVerdict, extra: &[String]) -> Outcome {
    println!("{v}");
    for line in extra {
        println!("{line}");
    }
    if let (Some(k), Some((a, b))) = (v.exponent.finite(), v.residues_mod(1)) {
        if k > 1 {
            println!("residues mod {}: {a} vs {b}", v.prime);
        }
    }
    println!("ord_{}(lhs - rhs) = {}", v.prime, v.ord_difference);
    if v.holds {
        Ok(())
    } else {
        Err(Failure::Verification("congruence fails".into()))
    }
}

pub fn congruence(cmd: CongruenceCmd) -> Outcome {
    match cmd {
        CongruenceCmd::Classical { p, m, n, nu } => report(&kummer_classical(p, m, n, nu)?, &[]),
        CongruenceCmd::HbKummer { p, n, nu, param } => {
            let (big_n, shown) = resolve_n(&param, p, || corollary_threshold(p, n, nu))?;
            let v = hb_kummer_corollary(p, &big_n, n, nu)?;
            let thr = corollary_threshold(p, n, nu)?;
            report(&v, &[format!("N = {shown}"), format!("threshold ord_{p}(N-1) >= {thr}")])
        }
        CongruenceCmd::HbPair { p, m, n, nu, param } => {
            let (big_n, shown) = resolve_n(&param, p, || pair_threshold(p, m, n, nu))?;
            let v = hb_kummer_pair(p, &big_n, m, n, nu)?;
            let thr = pair_threshold(p, m, n, nu)?;
            report(&v, &[format!("N = {shown}"), format!("threshold ord_{p}(N-1) >= {thr}")])
        }
        CongruenceCmd::Factorial { p, n, param } => {
            let (big_n, shown) = resolve_n(&param, p, || Ok(1))?;
            report(&hb_factorial_congruence(p, &big_n, n)?, &[format!("N = {shown}")])
        }
        CongruenceCmd::Threshold { p, n, m, nu } => {
            let t = match m {
                Some(m) => pair_threshold(p, m, n, nu)?,
                None => corollary_threshold(p, n, nu)?,
            };
            println!("{t}");
            Ok(())
        }
    }
}

pub fn convergents(big_n: u64, n: usize, closed: bool, check: bool) -> Outcome {
    let pair = if closed { convergent_closed(big_n, n)? } else { convergent_rec(big_n, n)? };
    println!("P = {}, Q = {}", pair.p, pair.q);
    if check {
        let defect = approximation_defect(&pair)?;
        if defect.is_zero() {
            println!("defect ≡ 0 mod x^{}", n + 1);
        } else {
            let first = defect.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
            return Err(Failure::Verification(format!(
                "defect ≢ 0 mod x^{}: coefficient of x^{first} is {}",
                n + 1,
                defect.coeffs()[first]
            )));
        }
    }
    Ok(())
}

pub fn cache_audit(cache: Option<PathBuf>) -> Outcome {
    let path = cache.ok_or_else(|| Failure::Usage("cache-audit needs --cache or HGBERN_CACHE".into()))?;
    let store = MemoStore::load(&path)?;
    let checked = store.audit_all()?;
    println!("{}: {checked} entries audited, all consistent", path.display());
    Ok(())
}
