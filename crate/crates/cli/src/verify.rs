//! Named verification suites for `optrep verify`.

use std::collections::{BTreeSet, HashMap};
use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use optrep::count::{
    build_matrices, efficiency_ratio, frequency_table, max_optimal_bounded, optimal_count, r_seq, s_seq, t_vector,
    RCounter,
};
use optrep::extremal::{attainers, verify_extremal};
use optrep::optgraph::{build_full_graph, condense, enumerate_optimal, Sampler};
use optrep::{wnaf, Digit, DigitString, RingElem, System, Transducer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

type Suite = fn() -> Vec<String>;

const SUITES: &[(&str, Suite)] = &[
    ("max", max_search),
    ("recurrence", recurrence),
    ("triple", triple),
    ("examples", examples),
    ("transducer", transducer),
    ("matrices", matrices),
    ("extremal", extremal),
    ("eisenstein", eisenstein),
    ("tvectors", tvectors),
    ("frequency", frequency),
    ("sampler", sampler),
];

const MAX_COUNTS: [u64; 13] = [1, 3, 8, 17, 39, 89, 201, 457, 1037, 2353, 5341, 12121, 27509];

const CONDENSED_ROWS: [(&str, &str, i32); 18] = [
    ("[0]", "[0]", 0),
    ("[0]", "[1]", 1),
    ("[0]", "[1+i]", 1),
    ("[1]", "[0]", -1),
    ("[1]", "[1]", 0),
    ("[1]", "[1+i]", 0),
    ("[1+i]", "[0]", 0),
    ("[1+i]", "[1]", 0),
    ("[1+i]", "[2]", 2),
    ("[1+i]", "[2+i]", 2),
    ("[2]", "[0]", 0),
    ("[2]", "[1]", 0),
    ("[2]", "[1+i]", 0),
    ("[2]", "[2+i]", 2),
    ("[2+i]", "[0]", 0),
    ("[2+i]", "[1]", -1),
    ("[2+i]", "[1+i]", 0),
    ("[2+i]", "[2]", 1),
];

pub fn run(name: &str, json_output: bool, out: &mut impl Write) -> Result<bool> {
    let selected: Vec<&(&str, Suite)> = if name == "all" {
        SUITES.iter().collect()
    } else {
        match SUITES.iter().find(|(n, _)| *n == name) {
            Some(s) => vec![s],
            None => {
                let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
                bail!("unknown suite {name:?}; expected one of: all, {}", names.join(", "));
            }
        }
    };
    let mut all_ok = true;
    let mut records = Vec::new();
    for (suite, f) in selected {
        let started = Instant::now();
        let failures = f();
        let ok = failures.is_empty();
        all_ok &= ok;
        if json_output {
            records.push(json!({"suite": suite, "pass": ok, "failures": failures}));
        } else {
            writeln!(out, "{suite}: {}", if ok { "pass" } else { "FAIL" })?;
            for msg in failures.iter().take(20) {
                writeln!(out, "  {msg}")?;
            }
            eprintln!("{suite} finished in {:.2?}", started.elapsed());
        }
    }
    if json_output {
        writeln!(out, "{}", serde_json::Value::Array(records))?;
    }
    Ok(all_ok)
}

fn expect<T: PartialEq + std::fmt::Debug>(f: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        f.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn max_search() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=8 {
        match max_optimal_bounded(System::Gauss, n, 2) {
            Ok(res) => expect(&mut f, &format!("Max({n})"), res.max, MAX_COUNTS[n - 1].into()),
            Err(e) => f.push(format!("Max({n}): {e}")),
        }
    }
    f
}

fn recurrence() -> Vec<String> {
    let mut f = Vec::new();
    for n in 1..=13 {
        expect(&mut f, &format!("r_{n}"), r_seq(n), MAX_COUNTS[n - 1].into());
    }
    let ratio = r_seq(30).to_f64().unwrap_or(0.0) / r_seq(29).to_f64().unwrap_or(1.0);
    if (ratio - 2.26953).abs() >= 1e-3 {
        f.push(format!("r_30/r_29 = {ratio}"));
    }
    f
}

fn triple() -> Vec<String> {
    let mut f = Vec::new();
    let mut rc = RCounter::new();
    let mut elems: Vec<RingElem> = Vec::new();
    for a in -15i64..=15 {
        for b in -15i64..=15 {
            elems.push(RingElem::new(System::Gauss, a, b));
        }
    }
    for a in -17i64..=17 {
        for b in -17i64..=17 {
            let x = RingElem::new(System::Eisenstein, a, b);
            if x.norm() <= 200.into() {
                elems.push(x);
            }
        }
    }
    for x in elems {
        let r = rc.count(&x, wnaf(&x).hamming_weight());
        let m = optimal_count(&x);
        let listed = BigUint::from(enumerate_optimal(&x, 0).strings.len());
        if r != m || m != listed {
            f.push(format!("{} {x}: r={r} matrix={m} enumerated={listed}", x.ring()));
        }
    }
    f
}

fn examples() -> Vec<String> {
    let mut f = Vec::new();
    let g = |a, b| RingElem::new(System::Gauss, a, b);
    let got: BTreeSet<String> = enumerate_optimal(&g(2, 1), 0).strings.iter().map(|s| s.to_string()).collect();
    let want: BTreeSet<String> = ["100j", "i0i", "j1"].iter().map(|s| s.to_string()).collect();
    expect(&mut f, "2+i", got, want);
    let x = g(-2, 5);
    let e = enumerate_optimal(&x, 0);
    expect(&mut f, "-2+5i count", e.strings.len(), 8);
    if !e.strings.iter().all(|s| s.hamming_weight() == 3 && s.eval() == x) {
        f.push("-2+5i: a string has the wrong weight or value".into());
    }
    let mut rc = RCounter::new();
    for k in 0..=8u32 {
        expect(&mut f, &format!("r(1,{})", k + 1), rc.count(&g(1, 0), k as usize + 1), BigUint::from(3u32).pow(k));
    }
    f
}

fn transducer() -> Vec<String> {
    let mut f = Vec::new();
    for sys in System::ALL {
        let tr = match Transducer::build(sys) {
            Ok(t) => t,
            Err(e) => {
                f.push(format!("{sys}: {e}"));
                continue;
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + sys as u64);
        for _ in 0..10_000 {
            let len = rng.gen_range(0..=20);
            let digits = (0..len).map(|_| Digit(rng.gen_range(0..sys.digit_count()) as u8)).collect();
            let s = DigitString::new(sys, digits).expect("digits in range");
            match tr.transduce(&s) {
                Ok(t) if t == wnaf(&s.eval()) && t.hamming_weight() <= s.hamming_weight() => {}
                other => f.push(format!("{sys} {s}: {other:?}")),
            }
        }
    }
    f
}

fn matrices() -> Vec<String> {
    let mut f = Vec::new();
    for sys in System::ALL {
        if let Err(e) = build_matrices(sys) {
            f.push(format!("{sys}: {e}"));
        }
    }
    match build_full_graph(System::Gauss).and_then(|g| condense(&g)) {
        Ok(gamma) => {
            let want: Vec<(String, String, i32)> =
                CONDENSED_ROWS.iter().map(|&(u, v, w)| (u.to_string(), v.to_string(), w)).collect();
            expect(&mut f, "condensed graph", gamma.rows(), want);
        }
        Err(e) => f.push(e.to_string()),
    }
    f
}

fn extremal() -> Vec<String> {
    let mut f = Vec::new();
    for sys in System::ALL {
        for n in 1..=20 {
            if !verify_extremal(sys, n) {
                f.push(format!("{sys} N={n}: extremal prefix misses the maximum"));
            }
        }
    }
    let census = |sys, n| attainers(sys, n, 2).map(|v| v.len()).unwrap_or(0);
    for n in 4..=7 {
        expect(&mut f, &format!("gauss attainers N={n}"), census(System::Gauss, n), 16);
    }
    for n in 4..=8 {
        expect(&mut f, &format!("eisenstein attainers N={n}"), census(System::Eisenstein, n), 12);
    }
    expect(&mut f, "gauss attainers N=2", census(System::Gauss, 2), 8);
    f
}

fn eisenstein() -> Vec<String> {
    let mut f = Vec::new();
    let mut rc = RCounter::new();
    for n in 1..=8usize {
        let want = s_seq(n as i64);
        match max_optimal_bounded(System::Eisenstein, n, 2) {
            Ok(res) => {
                expect(&mut f, &format!("Max({n})"), res.max.clone(), want.clone());
                for s in &res.attainers {
                    expect(&mut f, &format!("r({s},{n})"), rc.count(&s.eval(), n), want.clone());
                }
            }
            Err(e) => f.push(format!("Max({n}): {e}")),
        }
    }
    f
}

fn tvectors() -> Vec<String> {
    let mut f = Vec::new();
    let big = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
    let t = |sys, n| t_vector(sys, n).unwrap_or_default();
    expect(&mut f, "t_4", t(System::Gauss, 4), big(&[17, 5, 3, 8, 1, 3, 0, 0, 1]));
    expect(&mut f, "t_5", t(System::Gauss, 5), big(&[39, 11, 8, 17, 3, 8, 0, 0, 3]));
    let z = BigUint::from(0u32);
    for m in 5..=40 {
        let r = r_seq;
        let want = vec![r(m), r(m - 2) + r(m - 3), r(m - 2), r(m - 1), r(m - 3), r(m - 2), z.clone(), z.clone(), r(m - 3)];
        expect(&mut f, &format!("gauss t_{m}"), t(System::Gauss, m), want);
    }
    for n in 0..=40usize {
        let s = |k: i64| s_seq(n as i64 - k);
        let two = BigUint::from(2u32);
        let want = match n % 3 {
            0 => vec![s(0), &two * s(3), s(3), &two * s(3), z.clone(), s(1), z.clone()],
            1 => vec![s(0), z.clone(), s(1), z.clone(), s(2), s(2), s(2)],
            _ => vec![s(0), s(2), s(2), s(2), z.clone(), s(1), z.clone()],
        };
        expect(&mut f, &format!("eisenstein t_{n}"), t(System::Eisenstein, n), want);
    }
    f
}

fn frequency() -> Vec<String> {
    let mut f = Vec::new();
    for (sys, target) in [(System::Gauss, 0.25), (System::Eisenstein, 0.4)] {
        let ratio = frequency_table(sys, 14).last().and_then(|r| r.ratio.to_f64()).unwrap_or(f64::NAN);
        if ratio.is_nan() || (ratio - target).abs() > 0.03 {
            f.push(format!("{sys}: ratio at N=14 is {ratio}, want {target} ± 0.03"));
        }
    }
    let eff = efficiency_ratio();
    if (eff - 1.009_487_6).abs() > 5e-8 {
        f.push(format!("efficiency ratio {eff}"));
    }
    f
}

fn sampler() -> Vec<String> {
    let mut f = Vec::new();
    let x = RingElem::new(System::Gauss, -2, 5);
    let reps = enumerate_optimal(&x, 0).strings;
    let mut sampler = Sampler::new(&x, 2024);
    let draws = 100_000;
    let mut hits: HashMap<DigitString, usize> = HashMap::new();
    for _ in 0..draws {
        *hits.entry(sampler.sample()).or_default() += 1;
    }
    expect(&mut f, "distinct samples", hits.len(), reps.len());
    for s in &reps {
        let p = *hits.get(s).unwrap_or(&0) as f64 / draws as f64;
        if !(0.115..=0.135).contains(&p) {
            f.push(format!("{s}: frequency {p}"));
        }
    }
    f
}
