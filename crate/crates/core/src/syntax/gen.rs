use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Term;
use crate::carrier::{Carrier, Key, MonoidElem, Natural};
use crate::freerig::{normalize, Rig};

/// Bounds for random term generation.
///
/// Variables over `ℕᵏ` get coordinates uniform in `[0, max_coeff]`. Over a
/// carrier that is a free rig, a variable's payload is the normal form of a
/// random term one level down with half the depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub rig: Rig,
    pub max_depth: usize,
    pub max_f_depth: usize,
    pub max_coeff: u64,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(rig: Rig, seed: u64) -> Self {
        GenConfig {
            rig,
            max_depth: 4,
            max_f_depth: 2,
            max_coeff: 5,
            seed,
        }
    }
}

/// Deterministic in `cfg`.
pub fn random_term(cfg: &GenConfig) -> Term {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    random_term_with(
        &mut rng,
        &cfg.rig,
        cfg.max_depth,
        cfg.max_f_depth,
        cfg.max_coeff,
    )
}

#[derive(Clone, Copy)]
enum Node {
    Zero,
    One,
    Var,
    Sum,
    Prod,
    App,
}

/// Draws one term; node kinds are uniform among those the remaining depth
/// allows.
pub fn random_term_with<R: Rng + ?Sized>(
    rng: &mut R,
    rig: &Rig,
    depth: usize,
    f_depth: usize,
    max_coeff: u64,
) -> Term {
    let mut kinds = vec![Node::Zero, Node::One];
    if !matches!(rig.base(), Carrier::Nat(0)) {
        kinds.push(Node::Var);
    }
    if depth > 0 {
        kinds.extend([Node::Sum, Node::Prod]);
        if f_depth > 0 && rig.has_self_map() {
            kinds.push(Node::App);
        }
    }
    match kinds[rng.random_range(0..kinds.len())] {
        Node::Zero => Term::Zero,
        Node::One => Term::One,
        Node::Var => Term::Var(random_elem(rng, rig.base(), depth, f_depth, max_coeff)),
        Node::Sum => Term::sum(
            random_term_with(rng, rig, depth - 1, f_depth, max_coeff),
            random_term_with(rng, rig, depth - 1, f_depth, max_coeff),
        ),
        Node::Prod => Term::prod(
            random_term_with(rng, rig, depth - 1, f_depth, max_coeff),
            random_term_with(rng, rig, depth - 1, f_depth, max_coeff),
        ),
        Node::App => Term::app(random_term_with(
            rng,
            rig,
            depth - 1,
            f_depth - 1,
            max_coeff,
        )),
    }
}

/// A random element of `carrier`.
pub(crate) fn random_elem<R: Rng + ?Sized>(
    rng: &mut R,
    carrier: &Carrier,
    depth: usize,
    f_depth: usize,
    max_coeff: u64,
) -> MonoidElem {
    match carrier {
        Carrier::Nat(rank) => MonoidElem::from_terms(
            carrier.clone(),
            (0..*rank).map(|i| (Key::Idx(i), Natural::from(rng.random_range(0..=max_coeff)))),
        )
        .expect("indices below rank"),
        Carrier::Fm(inner) => {
            let t = random_term_with(rng, inner, depth / 2, f_depth, max_coeff);
            normalize(&t, inner)
                .expect("generated over its own rig")
                .to_elem()
        }
    }
}
