//! Single applications of the generating equations, at any position and in
//! either direction. Sequences of steps therefore walk within one
//! equivalence class.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gen::random_term_with;
use super::Term;
use crate::carrier::{Carrier, MonoidElem, Natural};
use crate::error::{Error, Result};
use crate::freerig::Rig;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RuleTag {
    /// `((a+b)+c) ∼ (a+(b+c))`
    AssocAdd,
    /// `(a+0) ∼ a`
    UnitAdd,
    /// `(a+b) ∼ (b+a)`
    CommAdd,
    /// `((ab)c) ∼ (a(bc))`
    AssocMul,
    /// `(a1) ∼ a`
    UnitMul,
    /// `(ab) ∼ (ba)`
    CommMul,
    /// `((a+b)c) ∼ ((ac)+(bc))`
    Distrib,
    /// `(0a) ∼ 0`
    Annihilate,
    /// `x_0 ∼ 0`
    VarZero,
    /// `(x_m+x_n) ∼ x_{m+n}`
    VarAdd,
}

impl RuleTag {
    pub const ALL: [RuleTag; 10] = [
        RuleTag::AssocAdd,
        RuleTag::UnitAdd,
        RuleTag::CommAdd,
        RuleTag::AssocMul,
        RuleTag::UnitMul,
        RuleTag::CommMul,
        RuleTag::Distrib,
        RuleTag::Annihilate,
        RuleTag::VarZero,
        RuleTag::VarAdd,
    ];
}

/// Forward rewrites the left-hand side of an equation into the right.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

/// Data a backward step cannot recover from the term itself.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Witness {
    /// The `a` in `0 ↦ (0a)`; defaults to `1`.
    Term(Term),
    /// The `m` in `x_{m+n} ↦ (x_m + x_n)`; defaults to the coordinatewise
    /// floor half.
    Split(MonoidElem),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RewriteRule {
    pub tag: RuleTag,
    pub direction: Direction,
    pub witness: Option<Witness>,
}

impl RewriteRule {
    pub fn forward(tag: RuleTag) -> Self {
        RewriteRule {
            tag,
            direction: Direction::Forward,
            witness: None,
        }
    }

    pub fn backward(tag: RuleTag) -> Self {
        RewriteRule {
            tag,
            direction: Direction::Backward,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Forward => "→",
            Direction::Backward => "←",
        };
        write!(f, "{:?}{dir}", self.tag)
    }
}

fn half(m: &MonoidElem) -> MonoidElem {
    MonoidElem::from_terms(
        m.carrier().clone(),
        m.iter().map(|(k, c)| (k.clone(), c / 2u32)),
    )
    .expect("keys of m")
}

fn apply_root(t: &Term, rule: &RewriteRule, carrier: &Carrier) -> Option<Term> {
    use Direction::*;
    use RuleTag::*;
    use Term::*;
    let out = match (rule.tag, rule.direction, t) {
        (AssocAdd, Forward, Sum(ab, c)) => match &**ab {
            Sum(a, b) => Term::sum((**a).clone(), Term::sum((**b).clone(), (**c).clone())),
            _ => return None,
        },
        (AssocAdd, Backward, Sum(a, bc)) => match &**bc {
            Sum(b, c) => Term::sum(Term::sum((**a).clone(), (**b).clone()), (**c).clone()),
            _ => return None,
        },
        (UnitAdd, Forward, Sum(a, zero)) if **zero == Zero => (**a).clone(),
        (UnitAdd, Backward, a) => Term::sum(a.clone(), Zero),
        (CommAdd, _, Sum(a, b)) => Term::sum((**b).clone(), (**a).clone()),
        (AssocMul, Forward, Prod(ab, c)) => match &**ab {
            Prod(a, b) => Term::prod((**a).clone(), Term::prod((**b).clone(), (**c).clone())),
            _ => return None,
        },
        (AssocMul, Backward, Prod(a, bc)) => match &**bc {
            Prod(b, c) => Term::prod(Term::prod((**a).clone(), (**b).clone()), (**c).clone()),
            _ => return None,
        },
        (UnitMul, Forward, Prod(a, one)) if **one == One => (**a).clone(),
        (UnitMul, Backward, a) => Term::prod(a.clone(), One),
        (CommMul, _, Prod(a, b)) => Term::prod((**b).clone(), (**a).clone()),
        (Distrib, Forward, Prod(ab, c)) => match &**ab {
            Sum(a, b) => Term::sum(
                Term::prod((**a).clone(), (**c).clone()),
                Term::prod((**b).clone(), (**c).clone()),
            ),
            _ => return None,
        },
        (Distrib, Backward, Sum(ac, bc)) => match (&**ac, &**bc) {
            (Prod(a, c), Prod(b, c2)) if c == c2 => {
                Term::prod(Term::sum((**a).clone(), (**b).clone()), (**c).clone())
            }
            _ => return None,
        },
        (Annihilate, Forward, Prod(zero, _)) if **zero == Zero => Zero,
        (Annihilate, Backward, Zero) => {
            let witness = match &rule.witness {
                Some(Witness::Term(w)) => w.clone(),
                None => One,
                Some(Witness::Split(_)) => return None,
            };
            Term::prod(Zero, witness)
        }
        (VarZero, Forward, Var(m)) if m.is_zero() => Zero,
        (VarZero, Backward, Zero) => Var(MonoidElem::zero(carrier.clone())),
        (VarAdd, Forward, Sum(a, b)) => match (&**a, &**b) {
            (Var(m), Var(n)) => Var(m.add(n).ok()?),
            _ => return None,
        },
        (VarAdd, Backward, Var(m)) => {
            let left = match &rule.witness {
                Some(Witness::Split(s)) => s.clone(),
                None => half(m),
                Some(Witness::Term(_)) => return None,
            };
            let right = m.checked_sub(&left)?;
            Term::sum(Var(left), Var(right))
        }
        _ => return None,
    };
    Some(out)
}

/// Applies `rule` at the subterm addressed by `path` (child indices; `0` is
/// the left operand or the argument of `f`).
///
/// `carrier` is the variable carrier, needed to introduce `x_0`.
pub fn rewrite_step(
    t: &Term,
    rule: &RewriteRule,
    path: &[usize],
    carrier: &Carrier,
) -> Result<Term> {
    let not_applicable = || Error::RuleNotApplicable {
        rule: rule.to_string(),
        path: path.to_vec(),
    };
    t.replace_at(path, |node| {
        apply_root(node, rule, carrier).ok_or_else(not_applicable)
    })
    .ok_or_else(not_applicable)?
}

/// Rules (without witnesses) applicable at the root of `t`.
pub fn applicable_rules(t: &Term, carrier: &Carrier) -> Vec<RewriteRule> {
    RuleTag::ALL
        .iter()
        .flat_map(|&tag| [RewriteRule::forward(tag), RewriteRule::backward(tag)])
        .filter(|rule| {
            !(matches!(rule.tag, RuleTag::CommAdd | RuleTag::CommMul)
                && rule.direction == Direction::Backward)
        })
        .filter(|rule| apply_root(t, rule, carrier).is_some())
        .collect()
}

fn random_split<R: Rng>(rng: &mut R, m: &MonoidElem) -> MonoidElem {
    MonoidElem::from_terms(
        m.carrier().clone(),
        m.iter().map(|(k, c)| {
            let part = match u64::try_from(c) {
                Ok(c) => Natural::from(rng.random_range(0..=c)),
                Err(_) => c / 2u32,
            };
            (k.clone(), part)
        }),
    )
    .expect("keys of m")
}

/// Applies `steps` random applicable rewrites. The rule tag is drawn first
/// (uniformly among applicable tags), then a position.
pub fn equivalent_variant(t: &Term, steps: usize, seed: u64, rig: &Rig) -> Term {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let carrier = rig.base();
    let mut current = t.clone();
    for _ in 0..steps {
        let mut candidates: Vec<(RewriteRule, Vec<usize>)> = Vec::new();
        for path in current.paths() {
            let node = current.subterm(&path).expect("path from paths()");
            for rule in applicable_rules(node, carrier) {
                candidates.push((rule, path.clone()));
            }
        }
        let mut tags: Vec<RuleTag> = candidates.iter().map(|(r, _)| r.tag).collect();
        tags.sort();
        tags.dedup();
        if tags.is_empty() {
            continue;
        }
        let tag = tags[rng.random_range(0..tags.len())];
        let pool: Vec<_> = candidates
            .into_iter()
            .filter(|(r, _)| r.tag == tag)
            .collect();
        let (mut rule, path) = pool[rng.random_range(0..pool.len())].clone();
        if rule.direction == Direction::Backward {
            let node = current.subterm(&path).expect("path from paths()");
            rule.witness = match (rule.tag, node) {
                (RuleTag::Annihilate, _) => {
                    Some(Witness::Term(random_term_with(&mut rng, rig, 1, 1, 3)))
                }
                (RuleTag::VarAdd, Term::Var(m)) => Some(Witness::Split(random_split(&mut rng, m))),
                _ => None,
            };
        }
        current = rewrite_step(&current, &rule, &path, carrier).expect("rule was applicable");
    }
    current
}
