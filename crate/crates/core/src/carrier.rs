//! Commutative monoids presented by a distinguished free additive basis.
//!
//! Two kinds of carrier exist: `ℕᵏ` with generators `e[0] .. e[k-1]`, and the
//! additive monoid of a free rig, whose basis is its set of monomials. Every
//! element is a finite map from basis keys to positive naturals, so equality
//! of elements is structural equality of the maps.
//!
//! Tensor products of such monoids are again free, on tuples of basis keys.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freerig::{Monomial, NormalForm, Rig};

/// Arbitrary-precision coefficient.
pub type Natural = BigUint;

/// A commutative monoid with a distinguished free basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Carrier {
    /// `ℕᵏ`, basis `Key::Idx(0..k)`.
    Nat(usize),
    /// The additive monoid of a free rig; basis `Key::Mono(_)`.
    Fm(Arc<Rig>),
}

impl Carrier {
    pub fn nat(rank: usize) -> Self {
        Carrier::Nat(rank)
    }

    /// Nesting depth: `ℕᵏ` is level 0, `F(ℕᵏ)` read additively is level 1.
    pub fn level(&self) -> usize {
        match self {
            Carrier::Nat(_) => 0,
            Carrier::Fm(rig) => rig.level(),
        }
    }

    /// Whether `key` is a basis element of this carrier.
    pub fn contains(&self, key: &Key) -> bool {
        match (self, key) {
            (Carrier::Nat(rank), Key::Idx(i)) => i < rank,
            (Carrier::Fm(rig), Key::Mono(mono)) => mono.belongs_to(rig),
            _ => false,
        }
    }

    pub(crate) fn check_key(&self, key: &Key) -> Result<()> {
        if self.contains(key) {
            Ok(())
        } else {
            Err(Error::KeyOutOfCarrier {
                key: key.to_string(),
                carrier: self.clone(),
            })
        }
    }

    pub(crate) fn expect(&self, other: &Carrier) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: self.clone(),
                found: other.clone(),
            })
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Nat(rank) => write!(f, "N^{rank}"),
            Carrier::Fm(rig) => write!(f, "{rig}"),
        }
    }
}

/// A basis element of some carrier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Key {
    Idx(usize),
    Mono(Monomial),
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Idx(i) => write!(f, "e[{i}]"),
            Key::Mono(mono) => write!(f, "{mono}"),
        }
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Natural>, key: K, coeff: Natural) {
    if coeff.is_zero() {
        return;
    }
    *map.entry(key).or_default() += coeff;
}

/// An element of a free-basis carrier: basis key ↦ positive coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonoidElem {
    carrier: Carrier,
    coeffs: BTreeMap<Key, Natural>,
}

impl MonoidElem {
    pub fn zero(carrier: Carrier) -> Self {
        MonoidElem {
            carrier,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `key`, with coefficient one.
    pub fn basis(carrier: Carrier, key: Key) -> Result<Self> {
        Self::from_terms(carrier, [(key, Natural::from(1u32))])
    }

    /// Builds an element of `ℕᵏ` from its coordinates.
    pub fn from_coords(rank: usize, coords: &[u64]) -> Result<Self> {
        if coords.len() != rank {
            return Err(Error::RankMismatch {
                rank,
                found: coords.len(),
            });
        }
        let coeffs = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (Key::Idx(i), Natural::from(*c)))
            .collect();
        Ok(MonoidElem {
            carrier: Carrier::Nat(rank),
            coeffs,
        })
    }

    pub fn from_terms(
        carrier: Carrier,
        terms: impl IntoIterator<Item = (Key, Natural)>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (key, coeff) in terms {
            carrier.check_key(&key)?;
            accumulate(&mut coeffs, key, coeff);
        }
        Ok(MonoidElem { carrier, coeffs })
    }

    pub(crate) fn from_map_unchecked(carrier: Carrier, coeffs: BTreeMap<Key, Natural>) -> Self {
        debug_assert!(coeffs.values().all(|c| !c.is_zero()));
        MonoidElem { carrier, coeffs }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: &Key) -> Natural {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Natural)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coordinates in `ℕᵏ`; `None` for other carriers.
    pub fn coords(&self) -> Option<Vec<Natural>> {
        match self.carrier {
            Carrier::Nat(rank) => Some((0..rank).map(|i| self.coeff(&Key::Idx(i))).collect()),
            Carrier::Fm(_) => None,
        }
    }

    pub fn add(&self, other: &MonoidElem) -> Result<MonoidElem> {
        self.carrier.expect(&other.carrier)?;
        let mut coeffs = self.coeffs.clone();
        for (key, coeff) in &other.coeffs {
            accumulate(&mut coeffs, key.clone(), coeff.clone());
        }
        Ok(MonoidElem {
            carrier: self.carrier.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, factor: &Natural) -> MonoidElem {
        if factor.is_zero() {
            return MonoidElem::zero(self.carrier.clone());
        }
        MonoidElem {
            carrier: self.carrier.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// `self - other` when `other ≤ self` coefficientwise.
    pub fn checked_sub(&self, other: &MonoidElem) -> Option<MonoidElem> {
        if self.carrier != other.carrier {
            return None;
        }
        let mut coeffs = self.coeffs.clone();
        for (key, coeff) in &other.coeffs {
            let slot = coeffs.get_mut(key)?;
            if *slot < *coeff {
                return None;
            }
            *slot -= coeff;
            if slot.is_zero() {
                coeffs.remove(key);
            }
        }
        Some(MonoidElem {
            carrier: self.carrier.clone(),
            coeffs,
        })
    }
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *coeff == Natural::from(1u32) {
                write!(f, "{key}")?;
            } else {
                write!(f, "{coeff}*{key}")?;
            }
        }
        Ok(())
    }
}

/// Pointwise sum of two elements of the same carrier.
pub fn elem_add(a: &MonoidElem, b: &MonoidElem) -> Result<MonoidElem> {
    a.add(b)
}

type BasisFn = dyn Fn(&Key) -> Result<MonoidElem> + Send + Sync;

#[derive(Clone)]
enum HomImages {
    /// Images of `e[0] .. e[k-1]` for a domain `ℕᵏ`.
    Table(Vec<MonoidElem>),
    Func(Arc<BasisFn>),
}

/// A monoid homomorphism, determined by the images of the domain's basis.
#[derive(Clone)]
pub struct MonoidHom {
    domain: Carrier,
    codomain: Carrier,
    images: HomImages,
}

impl fmt::Debug for MonoidHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("MonoidHom");
        s.field("domain", &self.domain)
            .field("codomain", &self.codomain);
        if let HomImages::Table(rows) = &self.images {
            s.field("images", rows);
        }
        s.finish_non_exhaustive()
    }
}

impl MonoidHom {
    /// `ℕᵏ → ℕʲ` given as `k` rows of `j` naturals; row `i` is the image of `e[i]`.
    pub fn from_matrix(
        domain_rank: usize,
        codomain_rank: usize,
        rows: &[Vec<u64>],
    ) -> Result<Self> {
        if rows.len() != domain_rank {
            return Err(Error::RankMismatch {
                rank: domain_rank,
                found: rows.len(),
            });
        }
        let images = rows
            .iter()
            .map(|row| MonoidElem::from_coords(codomain_rank, row))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonoidHom {
            domain: Carrier::Nat(domain_rank),
            codomain: Carrier::Nat(codomain_rank),
            images: HomImages::Table(images),
        })
    }

    /// A homomorphism out of `ℕᵏ` given by the images of its generators.
    pub fn from_images(
        domain_rank: usize,
        codomain: Carrier,
        images: Vec<MonoidElem>,
    ) -> Result<Self> {
        if images.len() != domain_rank {
            return Err(Error::RankMismatch {
                rank: domain_rank,
                found: images.len(),
            });
        }
        for image in &images {
            codomain.expect(image.carrier())?;
        }
        Ok(MonoidHom {
            domain: Carrier::Nat(domain_rank),
            codomain,
            images: HomImages::Table(images),
        })
    }

    /// A homomorphism given by a function on basis keys.
    pub fn from_fn<F>(domain: Carrier, codomain: Carrier, on_basis: F) -> Self
    where
        F: Fn(&Key) -> Result<MonoidElem> + Send + Sync + 'static,
    {
        MonoidHom {
            domain,
            codomain,
            images: HomImages::Func(Arc::new(on_basis)),
        }
    }

    pub fn identity(carrier: Carrier) -> Self {
        let c = carrier.clone();
        MonoidHom::from_fn(carrier.clone(), carrier, move |key| {
            MonoidElem::basis(c.clone(), key.clone())
        })
    }

    pub fn zero(domain: Carrier, codomain: Carrier) -> Self {
        let c = codomain.clone();
        MonoidHom::from_fn(domain, codomain, move |_| Ok(MonoidElem::zero(c.clone())))
    }

    pub fn domain(&self) -> &Carrier {
        &self.domain
    }

    pub fn codomain(&self) -> &Carrier {
        &self.codomain
    }

    /// Image of a single basis key.
    pub fn image(&self, key: &Key) -> Result<MonoidElem> {
        self.domain.check_key(key)?;
        let image = match (&self.images, key) {
            (HomImages::Table(rows), Key::Idx(i)) => rows[*i].clone(),
            (HomImages::Table(_), _) => unreachable!("table homs have an ℕᵏ domain"),
            (HomImages::Func(f), key) => f(key)?,
        };
        self.codomain.expect(image.carrier())?;
        Ok(image)
    }

    /// ℕ-linear extension of the generator images.
    pub fn apply(&self, a: &MonoidElem) -> Result<MonoidElem> {
        self.domain.expect(a.carrier())?;
        let mut coeffs = BTreeMap::new();
        for (key, coeff) in a.iter() {
            for (k, c) in self.image(key)?.coeffs {
                accumulate(&mut coeffs, k, c * coeff);
            }
        }
        Ok(MonoidElem::from_map_unchecked(
            self.codomain.clone(),
            coeffs,
        ))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonoidHom) -> Result<MonoidHom> {
        inner.codomain.expect(&self.domain)?;
        let outer = self.clone();
        let first = inner.clone();
        Ok(MonoidHom::from_fn(
            inner.domain.clone(),
            self.codomain.clone(),
            move |key| outer.apply(&first.image(key)?),
        ))
    }
}

/// `hom_apply`: the ℕ-linear extension of `hom` evaluated at `a`.
pub fn hom_apply(hom: &MonoidHom, a: &MonoidElem) -> Result<MonoidElem> {
    hom.apply(a)
}

/// An element of `C₁ ⊗ … ⊗ Cᵣ`, free on tuples of basis keys.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorElem {
    factors: Vec<Carrier>,
    coeffs: BTreeMap<Vec<Key>, Natural>,
}

impl TensorElem {
    pub fn zero(factors: Vec<Carrier>) -> Self {
        TensorElem {
            factors,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        factors: Vec<Carrier>,
        terms: impl IntoIterator<Item = (Vec<Key>, Natural)>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (keys, coeff) in terms {
            if keys.len() != factors.len() {
                return Err(Error::ArityMismatch {
                    expected: factors.len(),
                    found: keys.len(),
                });
            }
            for (carrier, key) in factors.iter().zip(&keys) {
                carrier.check_key(key)?;
            }
            accumulate(&mut coeffs, keys, coeff);
        }
        Ok(TensorElem { factors, coeffs })
    }

    pub(crate) fn from_map_unchecked(
        factors: Vec<Carrier>,
        coeffs: BTreeMap<Vec<Key>, Natural>,
    ) -> Self {
        TensorElem { factors, coeffs }
    }

    /// Multilinear expansion of `a₁ ⊗ … ⊗ aᵣ`.
    pub fn pure(factors: &[MonoidElem]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut acc = TensorElem::from_elem(&factors[0]);
        for elem in &factors[1..] {
            acc = acc.tensor(&TensorElem::from_elem(elem));
        }
        Ok(acc)
    }

    /// A one-factor tensor.
    pub fn from_elem(elem: &MonoidElem) -> Self {
        TensorElem {
            factors: vec![elem.carrier().clone()],
            coeffs: elem
                .iter()
                .map(|(k, c)| (vec![k.clone()], c.clone()))
                .collect(),
        }
    }

    /// Reads back a one-factor tensor.
    pub fn into_elem(self) -> Result<MonoidElem> {
        if self.factors.len() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: self.factors.len(),
            });
        }
        let carrier = self.factors.into_iter().next().expect("one factor");
        let coeffs = self
            .coeffs
            .into_iter()
            .map(|(mut keys, c)| (keys.pop().expect("one key"), c))
            .collect();
        Ok(MonoidElem::from_map_unchecked(carrier, coeffs))
    }

    pub fn factors(&self) -> &[Carrier] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, keys: &[Key]) -> Natural {
        self.coeffs.get(keys).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Key>, &Natural)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &TensorElem) -> Result<TensorElem> {
        if self.factors != other.factors {
            return Err(factor_mismatch(&self.factors, &other.factors));
        }
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &TensorElem) {
        for (keys, coeff) in &other.coeffs {
            accumulate(&mut self.coeffs, keys.clone(), coeff.clone());
        }
    }

    pub fn scale(&self, factor: &Natural) -> TensorElem {
        if factor.is_zero() {
            return TensorElem::zero(self.factors.clone());
        }
        TensorElem {
            factors: self.factors.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// `self ⊗ other`, concatenating factor lists.
    pub fn tensor(&self, other: &TensorElem) -> TensorElem {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        let mut coeffs = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                let mut keys = ka.clone();
                keys.extend(kb.iter().cloned());
                accumulate(&mut coeffs, keys, ca * cb);
            }
        }
        TensorElem { factors, coeffs }
    }

    /// Moves factor `i` to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<TensorElem> {
        let arity = self.factors.len();
        if perm.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; arity];
        for &p in perm {
            if p >= arity || seen[p] {
                return Err(Error::InvalidPermutation(perm.to_vec()));
            }
            seen[p] = true;
        }
        let place = |src: &[Carrier]| {
            let mut out = src.to_vec();
            for (i, &p) in perm.iter().enumerate() {
                out[p] = src[i].clone();
            }
            out
        };
        let factors = place(&self.factors);
        let coeffs = self
            .coeffs
            .iter()
            .map(|(keys, c)| {
                let mut out = keys.clone();
                for (i, &p) in perm.iter().enumerate() {
                    out[p] = keys[i].clone();
                }
                (out, c.clone())
            })
            .collect();
        Ok(TensorElem { factors, coeffs })
    }

    /// Applies one linear map per group of consecutive factors and tensors
    /// the results together.
    pub fn bimap(&self, maps: &[LinearMap]) -> Result<TensorElem> {
        let consumed: usize = maps.iter().map(|m| m.domain.len()).sum();
        if consumed != self.factors.len() {
            return Err(Error::ArityMismatch {
                expected: self.factors.len(),
                found: consumed,
            });
        }
        let mut offset = 0;
        for map in maps {
            let expected = &self.factors[offset..offset + map.domain.len()];
            if expected != map.domain.as_slice() {
                return Err(factor_mismatch(expected, &map.domain));
            }
            offset += map.domain.len();
        }
        let codomain: Vec<Carrier> = maps
            .iter()
            .flat_map(|m| m.codomain.iter().cloned())
            .collect();
        let mut out = TensorElem::zero(codomain.clone());
        for (keys, coeff) in &self.coeffs {
            let mut offset = 0;
            let mut term: Option<TensorElem> = None;
            for map in maps {
                let slice = &keys[offset..offset + map.domain.len()];
                offset += map.domain.len();
                let image = map.apply_basis(slice)?;
                term = Some(match term {
                    None => image,
                    Some(acc) => acc.tensor(&image),
                });
            }
            let term = term.expect("at least one map");
            debug_assert_eq!(term.factors, codomain);
            out.add_assign_unchecked(&term.scale(coeff));
        }
        Ok(out)
    }
}

fn factor_mismatch(expected: &[Carrier], found: &[Carrier]) -> Error {
    if expected.len() != found.len() {
        return Error::ArityMismatch {
            expected: expected.len(),
            found: found.len(),
        };
    }
    let (e, f) = expected
        .iter()
        .zip(found)
        .find(|(e, f)| e != f)
        .expect("factor lists differ");
    Error::CarrierMismatch {
        expected: e.clone(),
        found: f.clone(),
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (keys, coeff)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *coeff != Natural::from(1u32) {
                write!(f, "{coeff}*")?;
            }
            write!(f, "(")?;
            for (j, key) in keys.iter().enumerate() {
                if j > 0 {
                    write!(f, " ⊗ ")?;
                }
                write!(f, "{key}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// `tensor_pure`: multilinear expansion of a pure tensor.
pub fn tensor_pure(factors: &[MonoidElem]) -> Result<TensorElem> {
    TensorElem::pure(factors)
}

/// `tensor_permute`: factor `i` moves to position `perm[i]`.
pub fn tensor_permute(t: &TensorElem, perm: &[usize]) -> Result<TensorElem> {
    t.permute(perm)
}

/// `tensor_bimap`: applies `maps` factor-group-wise and extends additively.
pub fn tensor_bimap(t: &TensorElem, maps: &[LinearMap]) -> Result<TensorElem> {
    t.bimap(maps)
}

type LinearFn = dyn Fn(&[Key]) -> Result<TensorElem> + Send + Sync;

/// An additive map `C₁ ⊗ … ⊗ Cᵣ → D₁ ⊗ … ⊗ Dₛ`, given on basis tuples.
#[derive(Clone)]
pub struct LinearMap {
    domain: Vec<Carrier>,
    codomain: Vec<Carrier>,
    on_basis: Arc<LinearFn>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearMap")
            .field("domain", &self.domain)
            .field("codomain", &self.codomain)
            .finish_non_exhaustive()
    }
}

impl LinearMap {
    pub fn new<F>(domain: Vec<Carrier>, codomain: Vec<Carrier>, on_basis: F) -> Self
    where
        F: Fn(&[Key]) -> Result<TensorElem> + Send + Sync + 'static,
    {
        LinearMap {
            domain,
            codomain,
            on_basis: Arc::new(on_basis),
        }
    }

    pub fn identity(carrier: Carrier) -> Self {
        let c = carrier.clone();
        LinearMap::new(vec![carrier.clone()], vec![carrier], move |keys| {
            TensorElem::from_terms(vec![c.clone()], [(keys.to_vec(), Natural::from(1u32))])
        })
    }

    pub fn zero(domain: Vec<Carrier>, codomain: Vec<Carrier>) -> Self {
        let c = codomain.clone();
        LinearMap::new(domain, codomain, move |_| Ok(TensorElem::zero(c.clone())))
    }

    pub fn from_hom(hom: MonoidHom) -> Self {
        LinearMap::new(
            vec![hom.domain().clone()],
            vec![hom.codomain().clone()],
            move |keys| Ok(TensorElem::from_elem(&hom.image(&keys[0])?)),
        )
    }

    /// The symmetry `A ⊗ B → B ⊗ A`.
    pub fn swap(left: Carrier, right: Carrier) -> Self {
        let codomain = vec![right.clone(), left.clone()];
        let c = codomain.clone();
        LinearMap::new(vec![left, right], codomain, move |keys| {
            TensorElem::from_terms(
                c.clone(),
                [(vec![keys[1].clone(), keys[0].clone()], Natural::from(1u32))],
            )
        })
    }

    pub fn domain(&self) -> &[Carrier] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Carrier] {
        &self.codomain
    }

    pub fn apply_basis(&self, keys: &[Key]) -> Result<TensorElem> {
        let image = (self.on_basis)(keys)?;
        if image.factors != self.codomain {
            return Err(factor_mismatch(&self.codomain, &image.factors));
        }
        Ok(image)
    }

    pub fn apply(&self, t: &TensorElem) -> Result<TensorElem> {
        t.bimap(std::slice::from_ref(self))
    }
}

/// Reads a normal form as an element of the carrier `F(M)`.
impl From<&NormalForm> for MonoidElem {
    fn from(nf: &NormalForm) -> Self {
        nf.to_elem()
    }
}
