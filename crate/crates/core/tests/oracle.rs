mod common;

use common::{nat, nf, oracle_d, rigs};
use fmrig::syntax::{equivalent_variant, random_term, GenConfig};
use fmrig::{d_n, normalize, Rig};

#[test]
fn hand_examples_agree_with_the_term_recursion() {
    let rig = Rig::nat(1);
    for text in [
        "x[1] * f(x[1])",
        "f(f(x[2]) * x[1]) + 1",
        "(x[1] + 1) * (x[1] + 1)",
        "f(0)",
        "x[3]",
    ] {
        let t = fmrig::parse(text, rig.base()).unwrap();
        for n in [0, 1, 2, 7] {
            assert_eq!(
                d_n(&nf(text, &rig), &nat(n)),
                oracle_d(&t, &rig, &nat(n)),
                "{text}, n = {n}"
            );
        }
    }
}

#[test]
fn random_terms_agree_with_the_term_recursion() {
    for (i, rig) in rigs().iter().cycle().take(400).enumerate() {
        let t = random_term(&GenConfig::new(rig.clone(), i as u64));
        let n = nat(i as u64 % 5);
        assert_eq!(
            d_n(&normalize(&t, rig).unwrap(), &n),
            oracle_d(&t, rig, &n),
            "{t}"
        );
    }
}

#[test]
fn term_recursion_is_invariant_under_rewriting() {
    for (i, rig) in rigs().iter().cycle().take(200).enumerate() {
        let t = random_term(&GenConfig::new(rig.clone(), 1000 + i as u64));
        let v = equivalent_variant(&t, 6, i as u64, rig);
        assert_eq!(
            oracle_d(&t, rig, &nat(3)),
            oracle_d(&v, rig, &nat(3)),
            "{t} vs {v}"
        );
    }
}

#[test]
fn level_two_agrees_with_the_term_recursion() {
    let r2 = Rig::nat(1).lift();
    for i in 0..100u64 {
        let cfg = GenConfig {
            max_depth: 3,
            max_f_depth: 1,
            ..GenConfig::new(r2.clone(), i)
        };
        let t = random_term(&cfg);
        assert_eq!(
            d_n(&normalize(&t, &r2).unwrap(), &nat(2)),
            oracle_d(&t, &r2, &nat(2)),
            "{t}"
        );
    }
}
