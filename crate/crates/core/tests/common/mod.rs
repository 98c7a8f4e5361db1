//! Independent reference implementations used by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use fmrig::{normalize, parse, Carrier, Key, Monomial, Natural, NormalForm, Rig, TensorElem, Term};

pub fn nf(text: &str, rig: &Rig) -> NormalForm {
    normalize(&parse(text, rig.base()).unwrap(), rig).unwrap()
}

fn product_monomial(rig: &Rig, a: &Monomial, b: &Monomial) -> Monomial {
    let p = NormalForm::monomial(rig.clone(), a.clone())
        .mul(&NormalForm::monomial(rig.clone(), b.clone()))
        .unwrap();
    let (m, c) = p.terms().next().unwrap();
    assert_eq!(c, &Natural::from(1u32));
    m.clone()
}

type Terms = BTreeMap<(Monomial, Key), Natural>;

fn add_into(acc: &mut Terms, key: (Monomial, Key), c: Natural) {
    if c != Natural::from(0u32) {
        *acc.entry(key).or_insert_with(|| Natural::from(0u32)) += c;
    }
}

/// `[a] ⊗ d` pushed through `∇ ⊗ id`: multiplies `a` into the left factor.
fn left_multiply(rig: &Rig, a: &NormalForm, d: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a.terms() {
        for ((m, k), c) in d {
            add_into(&mut out, (product_monomial(rig, ma, m), k.clone()), ca * c);
        }
    }
    out
}

/// Structural recursion on the raw term, clause by clause:
/// `d(0) = d(1) = 0`, `d(x_m) = [1] ⊗ m`, the Leibniz clause for products,
/// additivity, and `d(f(a)) = n·d(a)`.
fn recurse(t: &Term, rig: &Rig, n: &Natural) -> Terms {
    match t {
        Term::Zero | Term::One => Terms::new(),
        Term::Var(m) => {
            let mut out = Terms::new();
            for (k, c) in m.iter() {
                add_into(&mut out, (Monomial::one(), k.clone()), c.clone());
            }
            out
        }
        Term::Sum(a, b) => {
            let mut out = recurse(a, rig, n);
            for (key, c) in recurse(b, rig, n) {
                add_into(&mut out, key, c);
            }
            out
        }
        Term::Prod(a, b) => {
            let na = normalize(a, rig).unwrap();
            let nb = normalize(b, rig).unwrap();
            let mut out = left_multiply(rig, &na, &recurse(b, rig, n));
            // d(a) ⊗ [b] with the M factor swapped past [b], then ∇ ⊗ id.
            for (key, c) in left_multiply(rig, &nb, &recurse(a, rig, n)) {
                add_into(&mut out, key, c);
            }
            out
        }
        Term::App(a) => recurse(a, rig, n)
            .into_iter()
            .filter(|_| n != &Natural::from(0u32))
            .map(|(key, c)| (key, c * n))
            .collect(),
    }
}

/// The deriving transformation computed on a raw term.
pub fn oracle_d(t: &Term, rig: &Rig, n: &Natural) -> TensorElem {
    let factors = vec![rig.as_carrier(), rig.base().clone()];
    TensorElem::from_terms(
        factors,
        recurse(t, rig, n)
            .into_iter()
            .map(|((m, k), c)| (vec![Key::Mono(m), k], c)),
    )
    .unwrap()
}

/// Standard carriers exercised by the tests.
pub fn rigs() -> Vec<Rig> {
    vec![Rig::nat(1), Rig::nat(2)]
}

pub fn nat(v: u64) -> Natural {
    Natural::from(v)
}

pub fn carrier(rank: usize) -> Carrier {
    Carrier::Nat(rank)
}
