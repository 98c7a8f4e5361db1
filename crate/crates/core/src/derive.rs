//! The deriving transformations `ₙd: FM → FM ⊗ M`.
//!
//! On a monomial `c·α₁⋯α_r` the derivative is the Leibniz sum
//! `Σⱼ c·(α₁⋯α̂ⱼ⋯α_r)·d(αⱼ)`, with `d(generator e) = 1 ⊗ e` and
//! `d(f(t)) = n·d(t)`. Each `n` reads `f` as `n·id`, so the family is indexed
//! by `n ∈ ℕ`; on `f`-free elements every member agrees with the symmetric
//! algebra's derivative.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::carrier::{accumulate, Carrier, Key, LinearMap, Natural, TensorElem};
use crate::error::{Error, Result};
use crate::freerig::{Atom, Monomial, NormalForm, Rig};

pub const LAWS: &[&str] = &[
    "product_rule",
    "linear_rule",
    "chain_rule",
    "interchange_rule",
    "derive_rewrite_invariance",
    "derive_naturality",
    "derive_additive",
    "n_independence",
    "distinctness",
];

/// `FM ⊗ M` for a rig over `M`.
pub fn derivative_factors(rig: &Rig) -> Vec<Carrier> {
    vec![rig.as_carrier(), rig.base().clone()]
}

type Terms = BTreeMap<(Monomial, Key), Natural>;

pub(crate) fn leibniz(a: &NormalForm, n: &Natural, with_multiplicity: bool) -> Terms {
    let mut out = Terms::new();
    for (mono, coeff) in a.terms() {
        for (index, atom, mult) in mono.grouped() {
            let rest = mono.without(index);
            let factor = if with_multiplicity {
                coeff * Natural::from(mult)
            } else {
                coeff.clone()
            };
            match atom {
                Atom::Gen(key) => accumulate(&mut out, (rest, key.clone()), factor),
                Atom::App(inner) => {
                    if n.is_zero() {
                        continue;
                    }
                    let scale = factor * n;
                    for ((m, key), c) in leibniz(inner, n, with_multiplicity) {
                        accumulate(&mut out, (rest.mul(&m), key), &scale * c);
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn to_tensor(rig: &Rig, terms: Terms) -> TensorElem {
    let coeffs = terms
        .into_iter()
        .map(|((m, k), c)| (vec![Key::Mono(m), k], c))
        .collect();
    TensorElem::from_map_unchecked(derivative_factors(rig), coeffs)
}

/// `ₙd(a) ∈ FM ⊗ M`.
pub fn d_n(a: &NormalForm, n: &Natural) -> TensorElem {
    to_tensor(a.rig(), leibniz(a, n, true))
}

/// `ₙd` on `FFM`, landing in `FFM ⊗ FM`.
pub fn d_n_level2(a2: &NormalForm, n: &Natural) -> Result<TensorElem> {
    if a2.rig().lower().is_none() {
        return Err(Error::Unsupported(format!(
            "{} is not a second-level rig",
            a2.rig()
        )));
    }
    Ok(d_n(a2, n))
}

/// `ₙd` as a linear map `FM → FM ⊗ M`.
pub fn derive_map(rig: &Rig, n: &Natural) -> LinearMap {
    let r = rig.clone();
    let n = n.clone();
    LinearMap::new(
        vec![rig.as_carrier()],
        derivative_factors(rig),
        move |keys| match &keys[0] {
            Key::Mono(m) => Ok(d_n(&NormalForm::monomial(r.clone(), m.clone()), &n)),
            Key::Idx(_) => unreachable!("free-rig carriers have monomial keys"),
        },
    )
}

/// The symmetric algebra's derivative `Σᵢ ∂p/∂xᵢ ⊗ eᵢ`, defined on `f`-free
/// elements.
pub fn sym_derive(p: &NormalForm) -> Result<TensorElem> {
    if p.has_app() {
        return Err(Error::Unsupported(
            "symmetric derivative of an element containing f".into(),
        ));
    }
    Ok(d_n(p, &Natural::zero()))
}

/// The ℕ-linear derivation on `ℕ[x]` with `∂(x) = seed`: `c·xᵏ ↦ c·k·xᵏ⁻¹·seed`.
pub fn seeded_derivation(p: &NormalForm, seed: &NormalForm) -> Result<NormalForm> {
    p.rig().expect(seed.rig())?;
    if p.rig().base() != &Carrier::Nat(1) {
        return Err(Error::Unsupported(format!(
            "seeded derivations need a single generator, not {}",
            p.rig().base()
        )));
    }
    if p.has_app() {
        return Err(Error::Unsupported(
            "seeded derivation of an element containing f".into(),
        ));
    }
    let mut acc = NormalForm::zero(p.rig().clone());
    for (mono, coeff) in p.terms() {
        let k = mono.degree();
        if k == 0 {
            continue;
        }
        let lowered = NormalForm::monomial(p.rig().clone(), mono.without(0));
        let term = lowered
            .mul_unchecked(seed)
            .scale(&(coeff * Natural::from(k)));
        acc = acc.add_unchecked(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freerig::normalize;
    use crate::syntax::parse;

    fn nf(text: &str, rig: &Rig) -> NormalForm {
        normalize(&parse(text, rig.base()).unwrap(), rig).unwrap()
    }

    fn tensor(rig: &Rig, terms: &[(&str, Key, u32)]) -> TensorElem {
        TensorElem::from_terms(
            derivative_factors(rig),
            terms.iter().map(|(m, k, c)| {
                let mono = nf(m, rig).terms().next().unwrap().0.clone();
                (vec![Key::Mono(mono), k.clone()], Natural::from(*c))
            }),
        )
        .unwrap()
    }

    fn n(v: u32) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn generators_and_constants() {
        let rig = Rig::nat(1);
        for k in [0, 1, 2, 7] {
            assert_eq!(
                d_n(&nf("x[1]", &rig), &n(k)),
                tensor(&rig, &[("1", Key::Idx(0), 1)])
            );
            assert!(d_n(&NormalForm::one(rig.clone()), &n(k)).is_zero());
            assert!(d_n(&NormalForm::zero(rig.clone()), &n(k)).is_zero());
        }
    }

    #[test]
    fn selfmap_scales_by_n() {
        let rig = Rig::nat(1);
        let t = d_n(&nf("f(x[1])", &rig), &n(2));
        assert_eq!(t, tensor(&rig, &[("1", Key::Idx(0), 2)]));
        assert_eq!(t.to_string(), "2*(1 ⊗ e[0])");
        assert!(d_n(&nf("f(x[1])", &rig), &n(0)).is_zero());
    }

    #[test]
    fn product_rule_by_hand() {
        let rig = Rig::nat(1);
        assert_eq!(
            d_n(&nf("x[1] * x[1]", &rig), &n(3)),
            tensor(&rig, &[("x[1]", Key::Idx(0), 2)])
        );
        // d(x·f(x)) = f(x) ⊗ e + x·n ⊗ e
        assert_eq!(
            d_n(&nf("x[1] * f(x[1])", &rig), &n(3)),
            tensor(
                &rig,
                &[("f(x[1])", Key::Idx(0), 1), ("x[1]", Key::Idx(0), 3)]
            )
        );
    }

    #[test]
    fn level_two() {
        let r1 = Rig::nat(1);
        let r2 = r1.lift();
        let x1 = nf("x[1]", &r1).terms().next().unwrap().0.clone();
        let one = Monomial::one();
        let t = d_n_level2(&nf("y[x[1]]", &r2), &n(4)).unwrap();
        let expected = TensorElem::from_terms(
            derivative_factors(&r2),
            [(vec![Key::Mono(Monomial::one()), Key::Mono(x1)], n(1))],
        )
        .unwrap();
        assert_eq!(t, expected);
        let t = d_n_level2(&nf("g(y[1])", &r2), &n(4)).unwrap();
        let expected = TensorElem::from_terms(
            derivative_factors(&r2),
            [(vec![Key::Mono(Monomial::one()), Key::Mono(one)], n(4))],
        )
        .unwrap();
        assert_eq!(t, expected);
        assert!(d_n_level2(&NormalForm::one(r2), &n(4)).unwrap().is_zero());
        assert!(d_n_level2(&NormalForm::one(r1), &n(4)).is_err());
    }

    #[test]
    fn symmetric_derivative() {
        let rig = Rig::symmetric(Carrier::Nat(2));
        let p = nf("x[1,0] * x[1,0] * x[0,1]", &rig);
        let expected = tensor(
            &rig,
            &[
                ("x[1,0] * x[0,1]", Key::Idx(0), 2),
                ("x[1,0] * x[1,0]", Key::Idx(1), 1),
            ],
        );
        assert_eq!(sym_derive(&p).unwrap(), expected);
        assert!(sym_derive(&nf("1 + 1 + 1", &rig)).unwrap().is_zero());
        assert!(sym_derive(&nf("f(1)", &Rig::nat(1))).is_err());
    }

    #[test]
    fn seeded() {
        let rig = Rig::nat(1);
        let p = nf("x[1]*x[1]*x[1] + x[3]", &rig);
        assert_eq!(
            seeded_derivation(&p, &nf("x[1]*x[1]", &rig)).unwrap(),
            nf("x[3]*x[1]*x[1]*x[1] + x[3]*x[1]", &rig)
        );
        assert_eq!(
            seeded_derivation(&p, &NormalForm::one(rig.clone())).unwrap(),
            nf("x[3]*x[1] + 1 + 1 + 1", &rig)
        );
        assert!(seeded_derivation(&nf("1+1", &rig), &p).unwrap().is_zero());
        let r2 = Rig::nat(2);
        assert!(seeded_derivation(&NormalForm::one(r2.clone()), &NormalForm::one(r2)).is_err());
    }
}
