//! Canonical forms for the free commutative rig with a self-map.
//!
//! An element is a finite map from monomials to positive coefficients. A
//! monomial is a sorted multiset of atoms, and an atom is either a basis
//! generator of the underlying carrier or `f(t)` for a canonical `t`. A
//! variable `x_m` is always expanded into its basis coordinates, so two terms
//! are equivalent exactly when their canonical forms are equal.
//!
//! With the self-map disabled the same representation is the symmetric
//! algebra, i.e. `ℕ[x₁, …, x_k]` over `ℕᵏ`.

mod export;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::carrier::{accumulate, Carrier, Key, MonoidElem, MonoidHom, Natural};
use crate::error::{Error, Result};
use crate::syntax::Term;

pub use export::{nf_from_json, nf_to_json, tensor_from_json, tensor_to_json};

/// Names of the laws this module's harness entries must cover.
pub const LAWS: &[&str] = &[
    "rig_laws",
    "normalize_homomorphism",
    "rewrite_invariance",
    "functoriality",
    "functor_commutes_with_syntax",
    "selfmap_not_multiple_of_identity",
];

/// `F(M)` (self-map enabled) or `S(M)` (symmetric algebra) over a carrier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rig {
    base: Carrier,
    self_map: bool,
}

impl Rig {
    pub fn free(base: Carrier) -> Self {
        Rig {
            base,
            self_map: true,
        }
    }

    /// The symmetric-algebra specialization: no `f` atoms.
    pub fn symmetric(base: Carrier) -> Self {
        Rig {
            base,
            self_map: false,
        }
    }

    /// `F(ℕᵏ)`.
    pub fn nat(rank: usize) -> Self {
        Rig::free(Carrier::Nat(rank))
    }

    pub fn base(&self) -> &Carrier {
        &self.base
    }

    pub fn has_self_map(&self) -> bool {
        self.self_map
    }

    /// 1 for `F(ℕᵏ)`, 2 for `F(F(ℕᵏ))`, …
    pub fn level(&self) -> usize {
        self.base.level() + 1
    }

    /// This rig read as a carrier whose basis is its set of monomials.
    pub fn as_carrier(&self) -> Carrier {
        Carrier::Fm(Arc::new(self.clone()))
    }

    /// The same construction applied once more: `F(F(M))` from `F(M)`.
    pub fn lift(&self) -> Rig {
        Rig {
            base: self.as_carrier(),
            self_map: self.self_map,
        }
    }

    /// The rig one level down, when the base carrier is itself a rig.
    pub fn lower(&self) -> Option<&Rig> {
        match &self.base {
            Carrier::Fm(inner) => Some(inner),
            Carrier::Nat(_) => None,
        }
    }

    pub(crate) fn expect(&self, other: &Rig) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: self.as_carrier(),
                found: other.as_carrier(),
            })
        }
    }
}

impl fmt::Display for Rig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.self_map { "F" } else { "S" };
        write!(f, "{name}({})", self.base)
    }
}

/// `fm_as_carrier`: the additive monoid of `rig`, free on its monomials.
pub fn fm_as_carrier(rig: &Rig) -> Carrier {
    rig.as_carrier()
}

/// An indivisible multiplicative factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    Gen(Key),
    App(Arc<NormalForm>),
}

impl Atom {
    pub fn is_app(&self) -> bool {
        matches!(self, Atom::App(_))
    }
}

/// A sorted multiset of atoms; the empty monomial is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<Atom>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_atoms(mut atoms: Vec<Atom>) -> Self {
        atoms.sort();
        Monomial(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_app(&self) -> bool {
        self.0.iter().any(|a| match a {
            Atom::App(_) => true,
            Atom::Gen(Key::Mono(m)) => m.has_app(),
            Atom::Gen(Key::Idx(_)) => false,
        })
    }

    /// Multiset union.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut atoms = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                atoms.push(self.0[i].clone());
                i += 1;
            } else {
                atoms.push(other.0[j].clone());
                j += 1;
            }
        }
        atoms.extend_from_slice(&self.0[i..]);
        atoms.extend_from_slice(&other.0[j..]);
        Monomial(atoms)
    }

    /// The monomial with the atom at `index` removed.
    pub fn without(&self, index: usize) -> Monomial {
        let mut atoms = self.0.clone();
        atoms.remove(index);
        Monomial(atoms)
    }

    /// Distinct atoms with their multiplicities, in order; also yields the
    /// index of the first occurrence.
    pub fn grouped(&self) -> Vec<(usize, &Atom, usize)> {
        let mut out: Vec<(usize, &Atom, usize)> = Vec::new();
        for (i, atom) in self.0.iter().enumerate() {
            match out.last_mut() {
                Some((_, last, count)) if *last == atom => *count += 1,
                _ => out.push((i, atom, 1)),
            }
        }
        out
    }

    pub fn belongs_to(&self, rig: &Rig) -> bool {
        self.0.iter().all(|atom| match atom {
            Atom::Gen(key) => rig.base.contains(key),
            Atom::App(nf) => rig.self_map && nf.rig == *rig,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A canonical element of `F(M)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm {
    rig: Rig,
    terms: BTreeMap<Monomial, Natural>,
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms
            .len()
            .cmp(&other.terms.len())
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
            .then_with(|| self.rig.cmp(&other.rig))
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl NormalForm {
    pub fn zero(rig: Rig) -> Self {
        NormalForm {
            rig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rig: Rig) -> Self {
        Self::constant(rig, Natural::one())
    }

    pub fn constant(rig: Rig, c: Natural) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, Monomial::one(), c);
        NormalForm { rig, terms }
    }

    /// The class of `x_m`: `Σᵢ mᵢ·⟨generator i⟩`.
    pub fn var(rig: Rig, m: &MonoidElem) -> Result<Self> {
        rig.base.expect(m.carrier())?;
        let terms = m
            .iter()
            .map(|(key, c)| (Monomial(vec![Atom::Gen(key.clone())]), c.clone()))
            .collect();
        Ok(NormalForm { rig, terms })
    }

    /// The single generator `key` of the base carrier.
    pub fn generator(rig: Rig, key: Key) -> Result<Self> {
        rig.base.check_key(&key)?;
        Ok(NormalForm::monomial(rig, Monomial(vec![Atom::Gen(key)])))
    }

    pub fn monomial(rig: Rig, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mono, Natural::one());
        NormalForm { rig, terms }
    }

    pub fn from_terms(
        rig: Rig,
        terms: impl IntoIterator<Item = (Monomial, Natural)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (mono, c) in terms {
            if !mono.belongs_to(&rig) {
                return Err(Error::KeyOutOfCarrier {
                    key: mono.to_string(),
                    carrier: rig.as_carrier(),
                });
            }
            accumulate(&mut map, mono, c);
        }
        Ok(NormalForm { rig, terms: map })
    }

    /// Reads an element of `fm_as_carrier(rig)` back as a normal form.
    pub fn from_elem(rig: Rig, elem: &MonoidElem) -> Result<Self> {
        rig.as_carrier().expect(elem.carrier())?;
        let terms = elem
            .iter()
            .map(|(key, c)| match key {
                Key::Mono(m) => (m.clone(), c.clone()),
                Key::Idx(_) => unreachable!("checked by carrier"),
            })
            .collect();
        Ok(NormalForm { rig, terms })
    }

    /// This element as a member of the carrier `fm_as_carrier(rig)`.
    pub fn to_elem(&self) -> MonoidElem {
        let coeffs = self
            .terms
            .iter()
            .map(|(m, c)| (Key::Mono(m.clone()), c.clone()))
            .collect();
        MonoidElem::from_map_unchecked(self.rig.as_carrier(), coeffs)
    }

    pub fn rig(&self) -> &Rig {
        &self.rig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Natural)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Natural {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Whether any `f` atom occurs, at any depth.
    pub fn has_app(&self) -> bool {
        self.terms.keys().any(Monomial::has_app)
    }

    pub fn add(&self, other: &NormalForm) -> Result<NormalForm> {
        self.rig.expect(&other.rig)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &NormalForm) -> NormalForm {
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            accumulate(&mut big.terms, m.clone(), c.clone());
        }
        big
    }

    pub fn mul(&self, other: &NormalForm) -> Result<NormalForm> {
        self.rig.expect(&other.rig)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &NormalForm) -> NormalForm {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        NormalForm {
            rig: self.rig.clone(),
            terms,
        }
    }

    pub fn pow(&self, exp: usize) -> NormalForm {
        let mut acc = NormalForm::one(self.rig.clone());
        for _ in 0..exp {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn scale(&self, factor: &Natural) -> NormalForm {
        if factor.is_zero() {
            return NormalForm::zero(self.rig.clone());
        }
        NormalForm {
            rig: self.rig.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// `𝐟(a)`: the fresh atom wrapping the whole argument.
    pub fn selfmap(&self) -> Result<NormalForm> {
        if !self.rig.self_map {
            return Err(Error::SelfMapDisabled);
        }
        Ok(NormalForm::monomial(
            self.rig.clone(),
            Monomial(vec![Atom::App(Arc::new(self.clone()))]),
        ))
    }
}

/// A rig homomorphism out of a free rig, given by the images of atoms.
///
/// Folding a canonical form through an interpretation is the unique
/// homomorphism determined by those images.
pub(crate) trait Interpretation {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, a: &Self::Value, c: &Natural) -> Self::Value;
    fn generator(&self, key: &Key) -> Result<Self::Value>;
    fn apply(&self, inner: &NormalForm) -> Result<Self::Value>;
}

pub(crate) fn interpret<I: Interpretation>(interp: &I, a: &NormalForm) -> Result<I::Value> {
    let mut total = interp.zero();
    for (mono, coeff) in &a.terms {
        let mut product = interp.one();
        for (_, atom, mult) in mono.grouped() {
            let image = match atom {
                Atom::Gen(key) => interp.generator(key)?,
                Atom::App(inner) => interp.apply(inner)?,
            };
            for _ in 0..mult {
                product = interp.mul(&product, &image);
            }
        }
        total = interp.add(&total, &interp.scale(&product, coeff));
    }
    Ok(total)
}

/// The quotient map: the canonical form of a term over `rig`.
pub fn normalize(t: &Term, rig: &Rig) -> Result<NormalForm> {
    Ok(match t {
        Term::Zero => NormalForm::zero(rig.clone()),
        Term::One => NormalForm::one(rig.clone()),
        Term::Var(m) => NormalForm::var(rig.clone(), m)?,
        Term::Sum(a, b) => normalize(a, rig)?.add_unchecked(&normalize(b, rig)?),
        Term::Prod(a, b) => normalize(a, rig)?.mul_unchecked(&normalize(b, rig)?),
        Term::App(a) => normalize(a, rig)?.selfmap()?,
    })
}

pub fn nf_add(a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
    a.add(b)
}

pub fn nf_mul(a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
    a.mul(b)
}

pub fn nf_selfmap(a: &NormalForm) -> Result<NormalForm> {
    a.selfmap()
}

struct Functor<'a> {
    hom: &'a MonoidHom,
    target: Rig,
}

impl Interpretation for Functor<'_> {
    type Value = NormalForm;

    fn zero(&self) -> NormalForm {
        NormalForm::zero(self.target.clone())
    }
    fn one(&self) -> NormalForm {
        NormalForm::one(self.target.clone())
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
        NormalForm::var(self.target.clone(), &self.hom.image(key)?)
    }
    fn apply(&self, inner: &NormalForm) -> Result<NormalForm> {
        interpret(self, inner)?.selfmap()
    }
}

/// `F(hom)`: relabels generators through `hom`, commuting with the rig
/// operations and the self-map.
pub fn apply_functor(hom: &MonoidHom, a: &NormalForm) -> Result<NormalForm> {
    hom.domain().expect(a.rig.base())?;
    let target = Rig {
        base: hom.codomain().clone(),
        self_map: a.rig.self_map,
    };
    interpret(&Functor { hom, target }, a)
}

/// `F(hom)` as a monoid homomorphism between the additive carriers of the
/// rigs over `hom`'s domain and codomain.
pub fn functor_hom(rig: &Rig, hom: &MonoidHom) -> Result<MonoidHom> {
    hom.domain().expect(rig.base())?;
    let source = rig.clone();
    let target = Rig {
        base: hom.codomain().clone(),
        self_map: rig.self_map,
    };
    let hom = hom.clone();
    Ok(MonoidHom::from_fn(
        rig.as_carrier(),
        target.as_carrier(),
        move |key| match key {
            Key::Mono(m) => Ok(apply_functor(
                &hom,
                &NormalForm::monomial(source.clone(), m.clone()),
            )?
            .to_elem()),
            Key::Idx(_) => unreachable!("free-rig carriers have monomial keys"),
        },
    ))
}

fn write_power(f: &mut fmt::Formatter<'_>, atom: &Atom, mult: usize) -> fmt::Result {
    match atom {
        Atom::Gen(Key::Idx(i)) => write!(f, "x[{i}]")?,
        Atom::Gen(Key::Mono(m)) => write!(f, "y[{m}]")?,
        Atom::App(nf) => {
            let symbol = if nf.rig.level() == 1 { "f" } else { "g" };
            write!(f, "{symbol}({nf})")?
        }
    }
    if mult > 1 {
        write!(f, "^{mult}")?;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (_, atom, mult)) in self.grouped().into_iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write_power(f, atom, mult)?;
        }
        Ok(())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if mono.is_one() {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn nf(text: &str, rig: &Rig) -> NormalForm {
        normalize(&parse(text, rig.base()).unwrap(), rig).unwrap()
    }

    fn gen(i: usize) -> Atom {
        Atom::Gen(Key::Idx(i))
    }

    #[test]
    fn variables_collapse_into_basis_coordinates() {
        let rig = Rig::nat(1);
        let a = nf("x[2] + x[3]", &rig);
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&Monomial(vec![gen(0)])), Natural::from(5u32));
        assert_eq!(a.to_string(), "5*x[0]");
    }

    #[test]
    fn annihilation_and_zero_variable() {
        let rig = Rig::nat(1);
        assert!(nf("0 * f(x[1])", &rig).is_zero());
        let a = nf("f(x[0])", &rig);
        let expected = NormalForm::zero(rig.clone()).selfmap().unwrap();
        assert_eq!(a, expected);
        assert!(!a.is_zero());
    }

    #[test]
    fn distributivity_is_forced() {
        let rig = Rig::nat(1);
        let a = nf("x[1] * (x[1] + 1)", &rig);
        let expected = NormalForm::from_terms(
            rig.clone(),
            [
                (Monomial(vec![gen(0), gen(0)]), Natural::one()),
                (Monomial(vec![gen(0)]), Natural::one()),
            ],
        )
        .unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn addition_and_multiplication() {
        let rig = Rig::nat(1);
        let x = nf("x[1]", &rig);
        assert_eq!(nf_add(&x, &x).unwrap(), nf("x[2]", &rig));
        assert_eq!(nf_add(&x, &NormalForm::zero(rig.clone())).unwrap(), x);
        let fx = x.selfmap().unwrap();
        assert_eq!(nf_add(&fx, &x).unwrap().len(), 2);

        let sq = nf_mul(&x, &x).unwrap();
        assert_eq!(sq.terms().next().unwrap().0.degree(), 2);
        assert_eq!(nf_mul(&x, &NormalForm::one(rig.clone())).unwrap(), x);
        // (x+1)² = x² + 2x + 1
        let xp1 = nf("x[1] + 1", &rig);
        let expected = NormalForm::from_terms(
            rig.clone(),
            [
                (Monomial(vec![gen(0), gen(0)]), Natural::from(1u32)),
                (Monomial(vec![gen(0)]), Natural::from(2u32)),
                (Monomial::one(), Natural::from(1u32)),
            ],
        )
        .unwrap();
        assert_eq!(nf_mul(&xp1, &xp1).unwrap(), expected);
    }

    #[test]
    fn mismatched_rigs_are_rejected() {
        let a = NormalForm::one(Rig::nat(1));
        let b = NormalForm::one(Rig::nat(2));
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn selfmap_is_injective_and_never_zero() {
        let rig = Rig::nat(1);
        let zero = NormalForm::zero(rig.clone());
        assert_ne!(nf_selfmap(&zero).unwrap(), zero);
        let x = nf("x[1]", &rig);
        assert_eq!(nf_selfmap(&x).unwrap(), nf("f(x[1])", &rig));
        assert_ne!(
            nf_selfmap(&x).unwrap(),
            nf_selfmap(&x.scale(&2u32.into())).unwrap()
        );
    }

    #[test]
    fn symmetric_mode_rejects_selfmap() {
        let rig = Rig::symmetric(Carrier::Nat(1));
        assert_eq!(
            NormalForm::one(rig.clone()).selfmap(),
            Err(Error::SelfMapDisabled)
        );
        let t = crate::syntax::Term::App(Box::new(crate::syntax::Term::One));
        assert_eq!(normalize(&t, &rig), Err(Error::SelfMapDisabled));
    }

    #[test]
    fn functor_relabels_generators() {
        let h = MonoidHom::from_matrix(1, 2, &[vec![1, 1]]).unwrap();
        let x = nf("x[1]", &Rig::nat(1));
        let image = apply_functor(&h, &x).unwrap();
        assert_eq!(image, nf("x[1,0] + x[0,1]", &Rig::nat(2)));

        let zero_hom = MonoidHom::from_matrix(1, 1, &[vec![0]]).unwrap();
        assert!(apply_functor(&zero_hom, &x).unwrap().is_zero());
        let one = NormalForm::one(Rig::nat(1));
        assert!(apply_functor(&h, &one).unwrap().is_one());

        let fx = nf("f(x[1]) * x[1]", &Rig::nat(1));
        assert_eq!(
            apply_functor(&h, &fx).unwrap(),
            nf("f(x[1,1]) * x[1,1]", &Rig::nat(2))
        );
        assert!(apply_functor(&h, &nf("x[1,1]", &Rig::nat(2))).is_err());
    }

    #[test]
    fn level_two_variables() {
        let r1 = Rig::nat(1);
        let r2 = r1.lift();
        let carrier = fm_as_carrier(&r1);
        let a = nf("x[2] + x[1] * x[1]", &r1);
        let elem = a.to_elem();
        assert_eq!(elem.carrier(), &carrier);
        assert_eq!(elem.len(), 2);
        assert_eq!(
            elem.coeff(&Key::Mono(Monomial(vec![gen(0)]))),
            Natural::from(2u32)
        );

        let b = nf("f(x[1])", &r1);
        let sum = NormalForm::var(r2.clone(), &a.add(&b).unwrap().to_elem()).unwrap();
        let split = NormalForm::var(r2.clone(), &a.to_elem())
            .unwrap()
            .add(&NormalForm::var(r2.clone(), &b.to_elem()).unwrap())
            .unwrap();
        assert_eq!(sum, split);

        let two_x = nf("x[2]", &r1);
        let y = NormalForm::var(r2.clone(), &nf("x[1]", &r1).to_elem()).unwrap();
        assert_eq!(
            NormalForm::var(r2.clone(), &two_x.to_elem()).unwrap(),
            y.scale(&2u32.into())
        );
        assert_eq!(NormalForm::from_elem(r1.clone(), &elem).unwrap(), a);
    }

    #[test]
    fn order_is_graded() {
        let rig = Rig::nat(2);
        let a = nf("x[1,0] * x[1,0] + x[0,1] + 1 + f(1)", &rig);
        let degrees: Vec<usize> = a.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(degrees, vec![0, 1, 1, 2]);
        assert_eq!(a.to_string(), "1 + x[1] + f(1) + x[0]^2");
    }

    #[test]
    fn trivial_carrier_is_supported() {
        let rig = Rig::nat(0);
        let a = nf("f(0) + f(f(1)) * 1", &rig);
        assert_eq!(a.len(), 2);
        assert!(parse("x[1]", rig.base()).is_err());
    }
}
