use kostant::alternation::{alt_set_bruteforce, alt_set_characterized};
use kostant::combinatorics::{binomial_safe, FibTable};
use kostant::partition::{kostant_q, kostant_q_oracle, DEFAULT_ORACLE_HEIGHT_CAP};
use kostant::verify::{run_all, VerifyConfig};
use kostant::weights::highest_root;
use kostant::{AlternationSet, Method, MultiplicityReport, RootInterval, Settings, Weight};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::args::{AltMethod, AltSetArgs, IdentityArgs, Interval, MuArg, PartitionArgs, QmultArgs, QmultMethod, VerifyArgs};
use crate::render::{Output, Table, Verdict};
use crate::Failure;

fn interval(rank: usize, iv: Interval) -> Result<RootInterval, Failure> {
    RootInterval::new(rank, iv.i, iv.j).map_err(|_| Failure::Usage(format!("interval {iv} is not within 1..{rank}")))
}

fn to_json<T: serde::Serialize>(value: T) -> Value {
    serde_json::to_value(value).expect("report types serialize to JSON")
}

/// A big integer as a JSON number when it fits in 64 bits, else a string.
fn int_json(n: impl ToString) -> Value {
    let text = n.to_string();
    text.parse::<u64>()
        .map(Value::from)
        .or_else(|_| text.parse::<i64>().map(Value::from))
        .unwrap_or(Value::String(text))
}

pub fn alt_set(args: &AltSetArgs, settings: &Settings) -> Result<Output, Failure> {
    let iv = interval(args.rank, args.mu)?;
    let mut sets: Vec<(&str, AlternationSet)> = Vec::new();
    if matches!(args.method, AltMethod::Brute | AltMethod::Both) {
        sets.push(("brute", alt_set_bruteforce(&highest_root(args.rank), &iv.root(), settings)?));
    }
    if matches!(args.method, AltMethod::Theorem | AltMethod::Both) {
        sets.push(("theorem", alt_set_characterized(iv)));
    }
    let verdict = match sets.as_slice() {
        [(_, a), (_, b)] => Some(Verdict::from_bool(a.same_elements(b))),
        _ => None,
    };
    let mut table = Table::new(&["source", "rank", "mu", "length", "word", "perm"]);
    for (source, set) in &sets {
        for sigma in set.elements() {
            let perm: Vec<String> = sigma.perm().iter().map(u32::to_string).collect();
            table.push(vec![
                source.to_string(),
                args.rank.to_string(),
                args.mu.to_string(),
                sigma.length().to_string(),
                sigma.to_string(),
                perm.join(" "),
            ]);
        }
    }
    Ok(Output {
        query: Value::Null,
        result: to_json(sets.into_iter().map(|(_, s)| s).collect::<Vec<_>>()),
        verdict,
        table,
    })
}

fn cli_name(method: Method) -> &'static str {
    match method {
        Method::KwmfFull => "kwmf",
        Method::KwmfAltset => "kwmf-altset",
        Method::ClosedForm => "closed",
        Method::Predicted => "predicted",
    }
}

pub fn qmult(args: &QmultArgs, settings: &Settings) -> Result<Output, Failure> {
    let rank = args.rank;
    let mu = match args.mu {
        MuArg::Zero if args.method != QmultMethod::Kwmf => {
            return Err(Failure::Usage("--mu 0 is only available with --method kwmf".into()))
        }
        MuArg::Zero => Weight::zero(rank),
        MuArg::Root(iv) => interval(rank, iv)?.root(),
    };
    let methods = match args.method {
        QmultMethod::Kwmf => vec![Method::KwmfFull],
        QmultMethod::KwmfAltset => vec![Method::KwmfAltset],
        QmultMethod::Closed => vec![Method::ClosedForm],
        QmultMethod::Predicted => vec![Method::Predicted],
        QmultMethod::All if rank > settings.brute_cap => {
            eprintln!("kostant: note: skipping kwmf, rank {rank} exceeds the brute-force cap {}", settings.brute_cap);
            vec![Method::KwmfAltset, Method::ClosedForm, Method::Predicted]
        }
        QmultMethod::All => vec![Method::KwmfFull, Method::KwmfAltset, Method::ClosedForm, Method::Predicted],
    };
    let lambda = highest_root(rank);
    let reports = methods
        .into_iter()
        .map(|m| kostant::multiplicity::q_multiplicity(&lambda, &mu, m, settings))
        .collect::<Result<Vec<MultiplicityReport>, _>>()?;
    let verdict = (args.method == QmultMethod::All)
        .then(|| Verdict::from_bool(reports.windows(2).all(|w| w[0].q_multiplicity == w[1].q_multiplicity)));

    let mut table = Table::new(&["method", "rank", "mu", "q_multiplicity", "coeffs", "at_one", "terms"]);
    for r in &reports {
        let coeffs: Vec<String> = r.q_multiplicity.coeffs().iter().map(ToString::to_string).collect();
        table.push(vec![
            cli_name(r.method).to_string(),
            rank.to_string(),
            args.mu.to_string(),
            r.q_multiplicity.to_string(),
            coeffs.join(" "),
            r.multiplicity_at_one.to_string(),
            r.term_count.to_string(),
        ]);
    }
    Ok(Output {
        query: Value::Null,
        result: to_json(&reports),
        verdict,
        table,
    })
}

pub fn partition(args: &PartitionArgs) -> Result<Output, Failure> {
    let coords = args.weight.0.clone();
    if coords.len() != args.rank {
        return Err(Failure::Usage(format!(
            "--weight has {} coordinates but --rank is {}",
            coords.len(),
            args.rank
        )));
    }
    let xi = Weight::new(coords)?;
    let q = kostant_q(args.rank, &xi)?;
    let oracle = if args.oracle {
        Some(kostant_q_oracle(args.rank, &xi, DEFAULT_ORACLE_HEIGHT_CAP)?)
    } else {
        None
    };
    let verdict = oracle.as_ref().map(|o| Verdict::from_bool(*o == q));
    let count = q.eval_at_one();

    let mut table = Table::new(&["rank", "weight", "kostant_q", "count", "oracle"]);
    table.push(vec![
        args.rank.to_string(),
        xi.to_string(),
        q.to_string(),
        count.to_string(),
        oracle.as_ref().map(ToString::to_string).unwrap_or_default(),
    ]);
    let result = json!({
        "rank": args.rank,
        "weight": xi,
        "kostant_q": q,
        "pretty": q.to_string(),
        "count": int_json(count),
        "oracle": oracle,
    });
    Ok(Output {
        query: Value::Null,
        result,
        verdict,
        table,
    })
}

pub fn identity(args: &IdentityArgs) -> Result<Output, Failure> {
    let fib = FibTable::new(args.max_n + 2);
    let mut table = Table::new(&["n", "binomial_sum", "fibonacci_n_plus_2", "holds"]);
    let mut rows = Vec::new();
    let mut all_hold = true;
    for n in 0..=args.max_n {
        let sum: BigUint = (0..=n + 1)
            .map(|k| binomial_safe((n + 1 - k) as i64, k as i64))
            .sum();
        let f = fib.get(n + 2).expect("table covers n + 2").clone();
        let holds = sum == f;
        all_hold &= holds;
        table.push(vec![n.to_string(), sum.to_string(), f.to_string(), holds.to_string()]);
        rows.push(json!({
            "n": n,
            "binomial_sum": int_json(&sum),
            "fibonacci_n_plus_2": int_json(&f),
            "holds": holds,
        }));
    }
    Ok(Output {
        query: Value::Null,
        result: Value::Array(rows),
        verdict: Some(Verdict::from_bool(all_hold)),
        table,
    })
}

pub fn verify(args: &VerifyArgs, settings: &Settings) -> Result<Output, Failure> {
    if args.max_brute_rank > settings.brute_cap {
        return Err(Failure::Capacity(format!(
            "--max-brute-rank {} exceeds the brute-force cap {} (raise it with --brute-cap or KOSTANT_MAX_BRUTE_RANK)",
            args.max_brute_rank, settings.brute_cap
        )));
    }
    let cfg = VerifyConfig {
        max_brute_rank: args.max_brute_rank,
        max_closed_rank: args.max_closed_rank,
        seed: args.seed,
        settings: *settings,
    };
    let outcomes = run_all(&cfg);
    let mut table = Table::new(&["id", "status", "checked", "seconds", "criterion", "detail"]);
    for o in &outcomes {
        table.push(vec![
            o.id.to_string(),
            if o.passed { "PASS" } else { "FAIL" }.to_string(),
            o.checked.to_string(),
            format!("{:.2}", o.millis as f64 / 1000.0),
            o.name.to_string(),
            o.detail.clone(),
        ]);
    }
    // Timings stay out of the machine-readable result so it is reproducible.
    let result = outcomes
        .iter()
        .map(|o| json!({"id": o.id, "name": o.name, "passed": o.passed, "checked": o.checked, "detail": o.detail}))
        .collect();
    Ok(Output {
        query: Value::Null,
        result: Value::Array(result),
        verdict: Some(Verdict::from_bool(outcomes.iter().all(|o| o.passed))),
        table,
    })
}
