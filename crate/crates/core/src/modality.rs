//! Monad and algebra-modality structure: the unit `u`, the multiplication
//! `μ: FFM → FM`, `η: ℕ → FM`, `∇: FM ⊗ FM → FM`, and evaluation of
//! canonical forms in concrete rigs with a self-map.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::carrier::{Carrier, Key, LinearMap, MonoidElem, MonoidHom, Natural, TensorElem};
use crate::error::{Error, Result};
use crate::freerig::{interpret, Interpretation, NormalForm, Rig};
use crate::syntax::{parse, Term};

pub const LAWS: &[&str] = &[
    "unit_additive",
    "monad_left_unit",
    "monad_right_unit",
    "monad_associativity",
    "nabla_eta_commutative_monoid",
    "modality_square",
    "evaluate_homomorphism",
    "eta_nabla_naturality",
];

/// `u_M(m) = [x_m]`.
pub fn unit(rig: &Rig, m: &MonoidElem) -> Result<NormalForm> {
    NormalForm::var(rig.clone(), m)
}

/// `u_M` as a monoid homomorphism `M → FM`.
pub fn unit_hom(rig: &Rig) -> MonoidHom {
    let r = rig.clone();
    MonoidHom::from_fn(rig.base().clone(), rig.as_carrier(), move |key| {
        Ok(NormalForm::generator(r.clone(), key.clone())?.to_elem())
    })
}

/// `u_{FM}(a) = [y_a]`, landing one level up.
pub fn unit_lifted(a: &NormalForm) -> NormalForm {
    NormalForm::var(a.rig().lift(), &a.to_elem()).expect("payload lives in the lifted base")
}

/// `η_M(k) = k·[1]`.
pub fn eta(rig: &Rig, k: &Natural) -> NormalForm {
    NormalForm::constant(rig.clone(), k.clone())
}

fn expect_fm_factors(t: &[Carrier], arity: usize) -> Result<Rig> {
    if t.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: t.len(),
        });
    }
    let Carrier::Fm(rig) = &t[0] else {
        return Err(Error::Unsupported(format!("{} is not a free rig", t[0])));
    };
    for c in &t[1..] {
        t[0].expect(c)?;
    }
    Ok((**rig).clone())
}

fn mono(key: &Key) -> &crate::freerig::Monomial {
    match key {
        Key::Mono(m) => m,
        Key::Idx(_) => unreachable!("free-rig carriers have monomial keys"),
    }
}

/// `∇([a] ⊗ [b]) = [a][b]`, extended additively.
pub fn nabla(t: &TensorElem) -> Result<NormalForm> {
    let rig = expect_fm_factors(t.factors(), 2)?;
    let terms = t
        .iter()
        .map(|(keys, c)| (mono(&keys[0]).mul(mono(&keys[1])), c.clone()));
    NormalForm::from_terms(rig, terms)
}

/// `∇` as a linear map `FM ⊗ FM → FM`.
pub fn nabla_map(rig: &Rig) -> LinearMap {
    let c = rig.as_carrier();
    let out = vec![c.clone()];
    let r = rig.clone();
    LinearMap::new(vec![c.clone(), c], out, move |keys| {
        let product = NormalForm::monomial(r.clone(), mono(&keys[0]).mul(mono(&keys[1])));
        Ok(TensorElem::from_elem(&product.to_elem()))
    })
}

struct Flatten<'a> {
    lower: &'a Rig,
}

impl Interpretation for Flatten<'_> {
    type Value = NormalForm;

    fn zero(&self) -> NormalForm {
        NormalForm::zero(self.lower.clone())
    }
    fn one(&self) -> NormalForm {
        NormalForm::one(self.lower.clone())
    }
    fn add(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        a.add_unchecked(b)
    }
    fn mul(&self, a: &NormalForm, b: &NormalForm) -> NormalForm {
        a.mul_unchecked(b)
    }
    fn scale(&self, a: &NormalForm, c: &Natural) -> NormalForm {
        a.scale(c)
    }
    fn generator(&self, key: &Key) -> Result<NormalForm> {
        Ok(NormalForm::monomial(self.lower.clone(), mono(key).clone()))
    }
    fn apply(&self, inner: &NormalForm) -> Result<NormalForm> {
        interpret(self, inner)?.selfmap()
    }
}

/// `μ_M: FFM → FM`, determined by `y_{[a]} ↦ [a]` and `g(t) ↦ 𝐟(μ(t))`.
pub fn mu(a2: &NormalForm) -> Result<NormalForm> {
    let lower = a2
        .rig()
        .lower()
        .ok_or_else(|| Error::Unsupported(format!("{} is not a second-level rig", a2.rig())))?;
    if a2.rig().has_self_map() && !lower.has_self_map() {
        return Err(Error::SelfMapDisabled);
    }
    interpret(&Flatten { lower }, a2)
}

/// `μ_M` as a monoid homomorphism `FFM → FM` between the additive carriers.
pub fn mu_hom(lower: &Rig) -> MonoidHom {
    let upper = lower.lift();
    let u = upper.clone();
    MonoidHom::from_fn(upper.as_carrier(), lower.as_carrier(), move |key| {
        Ok(mu(&NormalForm::monomial(u.clone(), mono(key).clone()))?.to_elem())
    })
}

/// `μ_M` as a linear map on one tensor factor.
pub fn mu_map(lower: &Rig) -> LinearMap {
    LinearMap::from_hom(mu_hom(lower))
}

/// A concrete self-map on `ℕ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SelfMap {
    Identity,
    Successor,
    Square,
    Double,
    ConstOne,
    ConstZero,
    /// A one-variable polynomial over `ℕ`; `x[c]` stands for `c·x`.
    Polynomial(Term),
}

impl SelfMap {
    /// Accepts a polynomial term over `ℕ` without `f`.
    pub fn polynomial(t: Term) -> Result<Self> {
        if t.has_app() {
            return Err(Error::Unsupported(
                "a user self-map cannot itself use the self-map".into(),
            ));
        }
        Ok(SelfMap::Polynomial(t))
    }

    pub fn apply(&self, v: &Natural) -> Natural {
        match self {
            SelfMap::Identity => v.clone(),
            SelfMap::Successor => v + 1u32,
            SelfMap::Square => v * v,
            SelfMap::Double => v * 2u32,
            SelfMap::ConstOne => Natural::one(),
            SelfMap::ConstZero => Natural::zero(),
            SelfMap::Polynomial(t) => eval_poly(t, v),
        }
    }
}

fn eval_poly(t: &Term, v: &Natural) -> Natural {
    match t {
        Term::Zero => Natural::zero(),
        Term::One => Natural::one(),
        Term::Var(m) => m.coeff(&Key::Idx(0)) * v,
        Term::Sum(a, b) => eval_poly(a, v) + eval_poly(b, v),
        Term::Prod(a, b) => eval_poly(a, v) * eval_poly(b, v),
        Term::App(_) => unreachable!("rejected at construction"),
    }
}

impl FromStr for SelfMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "identity" | "id" => SelfMap::Identity,
            "successor" | "succ" => SelfMap::Successor,
            "square" => SelfMap::Square,
            "double" => SelfMap::Double,
            "const-one" => SelfMap::ConstOne,
            "const-zero" => SelfMap::ConstZero,
            expr => SelfMap::polynomial(parse(expr, &Carrier::Nat(1))?)?,
        })
    }
}

impl fmt::Display for SelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelfMap::Identity => write!(f, "identity"),
            SelfMap::Successor => write!(f, "successor"),
            SelfMap::Square => write!(f, "square"),
            SelfMap::Double => write!(f, "double"),
            SelfMap::ConstOne => write!(f, "const-one"),
            SelfMap::ConstZero => write!(f, "const-zero"),
            SelfMap::Polynomial(t) => write!(f, "{t}"),
        }
    }
}

/// `(ℕ, 𝐟)`: the naturals with one self-map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RigWithSelfMap {
    pub self_map: SelfMap,
}

impl RigWithSelfMap {
    pub fn new(self_map: SelfMap) -> Self {
        RigWithSelfMap { self_map }
    }
}

struct Evaluation<'a> {
    target: &'a RigWithSelfMap,
    phi: &'a [Natural],
}

impl Interpretation for Evaluation<'_> {
    type Value = Natural;

    fn zero(&self) -> Natural {
        Natural::zero()
    }
    fn one(&self) -> Natural {
        Natural::one()
    }
    fn add(&self, a: &Natural, b: &Natural) -> Natural {
        a + b
    }
    fn mul(&self, a: &Natural, b: &Natural) -> Natural {
        a * b
    }
    fn scale(&self, a: &Natural, c: &Natural) -> Natural {
        a * c
    }
    fn generator(&self, key: &Key) -> Result<Natural> {
        match key {
            Key::Idx(i) => self
                .phi
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::MissingImage(key.to_string())),
            Key::Mono(_) => Err(Error::Unsupported(
                "evaluation needs a carrier of the form ℕᵏ".into(),
            )),
        }
    }
    fn apply(&self, inner: &NormalForm) -> Result<Natural> {
        Ok(self.target.self_map.apply(&interpret(self, inner)?))
    }
}

/// The unique rig-with-self-map homomorphism `F(ℕᵏ) → (ℕ, 𝐟)` sending
/// generator `i` to `phi[i]`.
pub fn evaluate(a: &NormalForm, target: &RigWithSelfMap, phi: &[Natural]) -> Result<Natural> {
    interpret(&Evaluation { target, phi }, a)
}
