//! Structured export of canonical forms and tensors.
//!
//! A normal form is a JSON array of `{"coeff": "<decimal>", "atoms": [...]}`
//! in key order. An atom is `{"gen": <key>}` or `{"app": <normal form>}`; a
//! key is a generator index for `ℕᵏ` and an atom array (a monomial) for
//! carriers that are themselves free rigs. Coefficients are decimal strings
//! so that arbitrary-precision values survive unchanged.

use std::sync::Arc;

use serde_json::{json, Value};

use super::{Atom, Monomial, NormalForm, Rig};
use crate::carrier::{Carrier, Key, Natural, TensorElem};
use crate::error::{Error, Result};

fn key_to_json(key: &Key) -> Value {
    match key {
        Key::Idx(i) => json!(i),
        Key::Mono(m) => monomial_to_json(m),
    }
}

fn monomial_to_json(m: &Monomial) -> Value {
    Value::Array(
        m.atoms()
            .iter()
            .map(|atom| match atom {
                Atom::Gen(key) => json!({ "gen": key_to_json(key) }),
                Atom::App(nf) => json!({ "app": nf_to_json(nf) }),
            })
            .collect(),
    )
}

pub fn nf_to_json(nf: &NormalForm) -> Value {
    Value::Array(
        nf.terms()
            .map(|(m, c)| json!({ "coeff": c.to_string(), "atoms": monomial_to_json(m) }))
            .collect(),
    )
}

pub fn tensor_to_json(t: &TensorElem) -> Value {
    Value::Array(
        t.iter()
            .map(|(keys, c)| {
                json!({
                    "coeff": c.to_string(),
                    "keys": keys.iter().map(key_to_json).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Structured(msg.into())
}

fn coeff_from_json(v: &Value) -> Result<Natural> {
    match v {
        Value::String(s) => s
            .parse::<Natural>()
            .map_err(|_| bad(format!("invalid coefficient {s:?}"))),
        Value::Number(n) => n
            .as_u64()
            .map(Natural::from)
            .ok_or_else(|| bad(format!("invalid coefficient {n}"))),
        other => Err(bad(format!("invalid coefficient {other}"))),
    }
}

fn key_from_json(v: &Value, carrier: &Carrier) -> Result<Key> {
    let key = match carrier {
        Carrier::Nat(_) => {
            let i = v
                .as_u64()
                .ok_or_else(|| bad(format!("expected a generator index, found {v}")))?;
            Key::Idx(i as usize)
        }
        Carrier::Fm(rig) => Key::Mono(monomial_from_json(v, rig)?),
    };
    carrier.check_key(&key)?;
    Ok(key)
}

fn monomial_from_json(v: &Value, rig: &Rig) -> Result<Monomial> {
    let atoms = v
        .as_array()
        .ok_or_else(|| bad(format!("expected an atom list, found {v}")))?;
    let atoms = atoms
        .iter()
        .map(|atom| {
            let obj = atom
                .as_object()
                .filter(|o| o.len() == 1)
                .ok_or_else(|| bad(format!("expected a one-field atom object, found {atom}")))?;
            if let Some(key) = obj.get("gen") {
                Ok(Atom::Gen(key_from_json(key, rig.base())?))
            } else if let Some(inner) = obj.get("app") {
                if !rig.has_self_map() {
                    return Err(Error::SelfMapDisabled);
                }
                Ok(Atom::App(Arc::new(nf_from_json(inner, rig)?)))
            } else {
                Err(bad(format!("unknown atom {atom}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Monomial::from_atoms(atoms))
}

/// Parses the structured export back into a normal form over `rig`.
pub fn nf_from_json(v: &Value, rig: &Rig) -> Result<NormalForm> {
    let terms = v
        .as_array()
        .ok_or_else(|| bad(format!("expected a term list, found {v}")))?;
    let terms = terms
        .iter()
        .map(|term| {
            let coeff = coeff_from_json(term.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            let mono =
                monomial_from_json(term.get("atoms").ok_or_else(|| bad("missing atoms"))?, rig)?;
            Ok((mono, coeff))
        })
        .collect::<Result<Vec<_>>>()?;
    NormalForm::from_terms(rig.clone(), terms)
}

pub fn tensor_from_json(v: &Value, factors: &[Carrier]) -> Result<TensorElem> {
    let terms = v
        .as_array()
        .ok_or_else(|| bad(format!("expected a term list, found {v}")))?;
    let terms = terms
        .iter()
        .map(|term| {
            let coeff = coeff_from_json(term.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            let keys = term
                .get("keys")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing keys"))?;
            if keys.len() != factors.len() {
                return Err(Error::ArityMismatch {
                    expected: factors.len(),
                    found: keys.len(),
                });
            }
            let keys = keys
                .iter()
                .zip(factors)
                .map(|(k, c)| key_from_json(k, c))
                .collect::<Result<Vec<_>>>()?;
            Ok((keys, coeff))
        })
        .collect::<Result<Vec<_>>>()?;
    TensorElem::from_terms(factors.to_vec(), terms)
}
