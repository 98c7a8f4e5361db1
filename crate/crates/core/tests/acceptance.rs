//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{nat, nf, oracle_d};
use fmrig::derive::{seeded_derivation, sym_derive};
use fmrig::laws::{check_distinctness, pairwise_distinct};
use fmrig::syntax::{random_term_with, GenConfig};
use fmrig::{
    check_laws, d_n, normalize, Carrier, Key, LawReport, NormalForm, Rig, SuiteConfig, TensorElem,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn laws(names: &[&str], cfg: SuiteConfig) -> (LawReport, Duration) {
    let cfg = SuiteConfig {
        only: Some(names.iter().map(|s| s.to_string()).collect()),
        ..cfg
    };
    let start = Instant::now();
    let report = check_laws(&cfg);
    (report, start.elapsed())
}

fn summarize(report: &LawReport, elapsed: Duration, budget: Duration) -> Verdict {
    let counts: Vec<String> = report
        .laws
        .iter()
        .map(|l| format!("{} {}/{}", l.name, l.cases - l.failures.len(), l.cases))
        .collect();
    let summary = format!("{} in {:.2?}", counts.join(", "), elapsed);
    if !report.passed() {
        return Err(format!("{summary}\n{}", report.table()));
    }
    if elapsed > budget {
        return Err(format!("{summary}: over the {budget:?} budget"));
    }
    Ok(summary)
}

fn distinctness() -> Verdict {
    let start = Instant::now();
    let pairs = check_distinctness(&(0..=10).collect::<Vec<_>>());
    let elapsed = start.elapsed();
    for (n, v) in &pairs {
        if nat(*n) != *v {
            return Err(format!("n = {n} evaluated to {v}"));
        }
    }
    if pairs.len() != 11 || !pairwise_distinct(&pairs) {
        return Err("values are not 11 pairwise-distinct naturals".into());
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("n ↦ n for n = 0..10 in {elapsed:.2?}"))
}

fn four_rules() -> Verdict {
    let (report, elapsed) = laws(
        &[
            "product_rule",
            "linear_rule",
            "chain_rule",
            "interchange_rule",
        ],
        SuiteConfig::default(),
    );
    summarize(&report, elapsed, Duration::from_secs(60))
}

fn rewrite_invariance() -> Verdict {
    let (report, elapsed) = laws(
        &["rewrite_invariance", "derive_rewrite_invariance"],
        SuiteConfig::default(),
    );
    summarize(&report, elapsed, Duration::from_secs(60))
}

fn oracle_equivalence() -> Verdict {
    let ns = [0u64, 1, 2, 3, 7];
    let rigs = [Rig::nat(1), Rig::nat(2)];
    let cases = 1000;
    for i in 0..cases {
        let rig = &rigs[i % 2];
        let n = nat(ns[(i / 2) % ns.len()]);
        let cfg = GenConfig::new(rig.clone(), 0x0c1e_0000 + i as u64);
        let t = fmrig::syntax::random_term(&cfg);
        let fast = d_n(&normalize(&t, rig).unwrap(), &n);
        let slow = oracle_d(&t, rig, &n);
        if fast != slow {
            return Err(format!("case {i}: t = {t}, n = {n}: {fast} vs {slow}"));
        }
    }
    Ok(format!("{cases} random terms over N and N^2"))
}

fn monad_and_modality() -> Verdict {
    let (report, elapsed) = laws(
        &[
            "unit_additive",
            "monad_left_unit",
            "monad_right_unit",
            "monad_associativity",
            "nabla_eta_commutative_monoid",
            "modality_square",
        ],
        SuiteConfig::default(),
    );
    summarize(&report, elapsed, Duration::from_secs(60))
}

fn naturality() -> Verdict {
    let (report, elapsed) = laws(
        &[
            "derive_naturality",
            "eta_nabla_naturality",
            "functoriality",
            "functor_commutes_with_syntax",
        ],
        SuiteConfig {
            cases: 500,
            ranks: vec![2],
            ..SuiteConfig::default()
        },
    );
    summarize(&report, elapsed, Duration::from_secs(60))
}

fn worked_examples() -> Verdict {
    let s2 = Rig::symmetric(Carrier::Nat(2));
    let p = nf("x[1,0] * x[1,0] * x[0,1]", &s2);
    let mono = |text: &str| Key::Mono(nf(text, &s2).terms().next().unwrap().0.clone());
    let expected = TensorElem::from_terms(
        vec![s2.as_carrier(), Carrier::Nat(2)],
        [
            (vec![mono("x[1,0] * x[0,1]"), Key::Idx(0)], nat(2)),
            (vec![mono("x[1,0] * x[1,0]"), Key::Idx(1)], nat(1)),
        ],
    )
    .unwrap();
    let got = sym_derive(&p).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!("symmetric derivative of x₁²x₂ gave {got}"));
    }
    let r = Rig::nat(1);
    let q = nf("x[1]*x[1]*x[1] + x[3]", &r);
    let got = seeded_derivation(&q, &nf("x[1]*x[1]", &r)).map_err(|e| e.to_string())?;
    let expected = nf("x[3]*x[1]*x[1]*x[1] + x[3]*x[1]", &r);
    if got != expected {
        return Err(format!("seeded derivation of x³+3x gave {got}"));
    }
    Ok(format!(
        "∂(x₁²x₂) = {}; ∂(x³+3x) = {got}",
        sym_derive(&p).unwrap()
    ))
}

fn selfmap_not_multiple() -> Verdict {
    for k in [1usize, 2] {
        let rig = Rig::nat(k);
        let zero = NormalForm::zero(rig.clone());
        let x1 = NormalForm::generator(rig.clone(), Key::Idx(0)).unwrap();
        for n in 0..=10u64 {
            if zero.selfmap().unwrap() == zero.scale(&nat(n)) {
                return Err(format!("f(0) = {n}·0 over N^{k}"));
            }
            if x1.selfmap().unwrap() == x1.scale(&nat(n)) {
                return Err(format!("f(x₁) = {n}·x₁ over N^{k}"));
            }
        }
    }
    let (report, elapsed) = laws(
        &["selfmap_not_multiple_of_identity"],
        SuiteConfig::default(),
    );
    summarize(&report, elapsed, Duration::from_secs(60))
        .map(|s| format!("n = 0..10 on 0 and x₁; {s}"))
}

fn n_independence() -> Verdict {
    let ns = [0u64, 1, 2, 3, 7];
    let rigs = [Rig::nat(1), Rig::nat(2)];
    let cases = 500;
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x1dea);
    for i in 0..cases {
        let rig = &rigs[i % 2];
        let t = random_term_with(&mut rng, rig, 4, 0, 5);
        let a = normalize(&t, rig).unwrap();
        if a.has_app() {
            return Err(format!("case {i}: generator produced f in {t}"));
        }
        let reference = d_n(&a, &nat(ns[0]));
        for &p in &ns[1..] {
            if d_n(&a, &nat(p)) != reference {
                return Err(format!("case {i}: t = {t}, n = {p}"));
            }
        }
    }
    let (report, elapsed) = laws(
        &["n_independence"],
        SuiteConfig {
            cases: 500,
            ..SuiteConfig::default()
        },
    );
    summarize(&report, elapsed, Duration::from_secs(60))
        .map(|s| format!("{cases} f-free terms; {s}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("distinctness of the deriving transformations", distinctness),
        ("product, linear, chain and interchange rules", four_rules),
        ("invariance under rewriting", rewrite_invariance),
        (
            "canonical-form derivative matches the term recursion",
            oracle_equivalence,
        ),
        ("monad and modality laws", monad_and_modality),
        ("naturality", naturality),
        ("worked derivation examples", worked_examples),
        (
            "self-map is not a multiple of the identity",
            selfmap_not_multiple,
        ),
        ("n-independence on f-free elements", n_independence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
