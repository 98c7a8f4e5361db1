//! Seeded, reproducible checks of every equational law, with a report.
//!
//! Each law runs a number of independent cases. Case `i` of law `L` draws
//! all of its inputs from a generator seeded by `(suite seed, L, i)`, so a
//! failure is replayed from its case index alone. Cases run on the rayon
//! pool when the `parallel` feature is enabled.

mod checks;
mod report;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carrier::{Carrier, Key, LinearMap, MonoidElem, MonoidHom, Natural, TensorElem};
use crate::derive::{self, d_n};
use crate::error::Result;
use crate::freerig::{normalize, NormalForm, Rig};
use crate::modality::{evaluate, RigWithSelfMap, SelfMap};
use crate::par;
use crate::syntax::{random_term_with, Term};

pub use report::{Failure, LawOutcome, LawReport};

/// Deliberate corruptions used to check that the harness detects bugs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mutation {
    /// Leibniz expansion that forgets the multiplicity of repeated atoms.
    DropLeibnizMultiplicity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Cases per law.
    pub cases: usize,
    /// Cases for the three-level associativity law.
    pub level3_cases: usize,
    /// Carriers `ℕᵏ` to cycle through.
    pub ranks: Vec<usize>,
    pub max_depth: usize,
    pub max_f_depth: usize,
    pub max_coeff: u64,
    /// Indices of the deriving transformations under test.
    pub n_values: Vec<u64>,
    /// Rewrite steps per equivalence-invariance case.
    pub rewrite_steps: usize,
    /// Restricts the run to these law names.
    pub only: Option<Vec<String>>,
    pub parallel: bool,
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0x5eed_f00d,
            cases: 1000,
            level3_cases: 50,
            ranks: vec![1, 2],
            max_depth: 4,
            max_f_depth: 2,
            max_coeff: 5,
            n_values: vec![0, 1, 2, 3, 7],
            rewrite_steps: 8,
            only: None,
            parallel: true,
            mutation: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.cases == 0 || self.level3_cases == 0 {
            return Err("case counts must be at least 1".into());
        }
        if self.ranks.is_empty() || self.ranks.contains(&0) {
            return Err("at least one carrier rank, each at least 1, is required".into());
        }
        if self.n_values.is_empty() {
            return Err("at least one n value is required".into());
        }
        if let Some(only) = &self.only {
            for name in only {
                if !law_names().contains(&name.as_str()) {
                    return Err(format!("unknown law {name:?}"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum CaseCount {
    Standard,
    Level3,
    Single,
}

struct Law {
    name: &'static str,
    anchor: &'static str,
    count: CaseCount,
    check: fn(&mut Case) -> Outcome,
}

/// Why a case failed.
#[derive(Debug)]
pub(crate) enum CaseError {
    Violated(String),
    Error(crate::error::Error),
}

impl From<crate::error::Error> for CaseError {
    fn from(e: crate::error::Error) -> Self {
        CaseError::Error(e)
    }
}

type Outcome = std::result::Result<(), CaseError>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err($crate::laws::CaseError::Violated(format!($($msg)+)));
        }
    };
}
pub(crate) use ensure;

const REGISTRY: &[Law] = &[
    Law {
        name: "rig_laws",
        anchor: "(FM, +, ·, 0, 1) is a commutative rig",
        count: CaseCount::Standard,
        check: checks::rig_laws,
    },
    Law {
        name: "normalize_homomorphism",
        anchor: "normalize commutes with 0, 1, x_m, +, · and f",
        count: CaseCount::Standard,
        check: checks::normalize_homomorphism,
    },
    Law {
        name: "rewrite_invariance",
        anchor: "a ∼ b ⇒ [a] = [b]",
        count: CaseCount::Standard,
        check: checks::rewrite_invariance,
    },
    Law {
        name: "functoriality",
        anchor: "F(id) = id, F(ψ∘φ) = Fψ∘Fφ",
        count: CaseCount::Standard,
        check: checks::functoriality,
    },
    Law {
        name: "functor_commutes_with_syntax",
        anchor: "Fψ([a]) = [F₀ψ(a)]",
        count: CaseCount::Standard,
        check: checks::functor_commutes_with_syntax,
    },
    Law {
        name: "selfmap_not_multiple_of_identity",
        anchor: "𝐟 ≠ n·id",
        count: CaseCount::Standard,
        check: checks::selfmap_not_multiple,
    },
    Law {
        name: "unit_additive",
        anchor: "u(m+n) = u(m) + u(n), u(0) = 0",
        count: CaseCount::Standard,
        check: checks::unit_additive,
    },
    Law {
        name: "monad_left_unit",
        anchor: "μ ∘ u_F = id",
        count: CaseCount::Standard,
        check: checks::monad_left_unit,
    },
    Law {
        name: "monad_right_unit",
        anchor: "μ ∘ F(u) = id",
        count: CaseCount::Standard,
        check: checks::monad_right_unit,
    },
    Law {
        name: "monad_associativity",
        anchor: "μ ∘ μ_F = μ ∘ F(μ)",
        count: CaseCount::Level3,
        check: checks::monad_associativity,
    },
    Law {
        name: "nabla_eta_commutative_monoid",
        anchor: "(FM, ∇, η) is a commutative monoid",
        count: CaseCount::Standard,
        check: checks::nabla_eta_monoid,
    },
    Law {
        name: "modality_square",
        anchor: "μ ∘ ∇_F = ∇ ∘ (μ ⊗ μ)",
        count: CaseCount::Standard,
        check: checks::modality_square,
    },
    Law {
        name: "evaluate_homomorphism",
        anchor: "evaluation is the homomorphism extending φ",
        count: CaseCount::Standard,
        check: checks::evaluate_homomorphism,
    },
    Law {
        name: "eta_nabla_naturality",
        anchor: "Fψ ∘ η = η, Fψ ∘ ∇ = ∇ ∘ (Fψ ⊗ Fψ)",
        count: CaseCount::Standard,
        check: checks::eta_nabla_naturality,
    },
    Law {
        name: "product_rule",
        anchor: "d ∘ ∇ = (∇⊗1)(1⊗d) + (∇⊗1)(1⊗σ)(d⊗1)",
        count: CaseCount::Standard,
        check: checks::product_rule,
    },
    Law {
        name: "linear_rule",
        anchor: "d ∘ u = η ⊗ 1",
        count: CaseCount::Standard,
        check: checks::linear_rule,
    },
    Law {
        name: "chain_rule",
        anchor: "d ∘ μ = (∇⊗1)(μ⊗d) ∘ d_F",
        count: CaseCount::Standard,
        check: checks::chain_rule,
    },
    Law {
        name: "interchange_rule",
        anchor: "(d⊗1)d = (1⊗σ)(d⊗1)d",
        count: CaseCount::Standard,
        check: checks::interchange_rule,
    },
    Law {
        name: "derive_rewrite_invariance",
        anchor: "a ∼ b ⇒ d(a) = d(b)",
        count: CaseCount::Standard,
        check: checks::derive_rewrite_invariance,
    },
    Law {
        name: "derive_naturality",
        anchor: "(Fψ ⊗ ψ) ∘ d = d ∘ Fψ",
        count: CaseCount::Standard,
        check: checks::derive_naturality,
    },
    Law {
        name: "derive_additive",
        anchor: "d(a+b) = d(a) + d(b), d(0) = 0",
        count: CaseCount::Standard,
        check: checks::derive_additive,
    },
    Law {
        name: "n_independence",
        anchor: "ₙd = ₚd on f-free elements",
        count: CaseCount::Standard,
        check: checks::n_independence,
    },
    Law {
        name: "distinctness",
        anchor: "ε(ₙd(𝐟(x₁))) = n, so ₙd ≠ ₚd",
        count: CaseCount::Single,
        check: checks::distinctness,
    },
];

/// Names of all registered laws, in report order.
pub fn law_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|l| l.name).collect()
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The generator seed of case `index` of law `name`.
pub fn case_seed(suite_seed: u64, name: &str, index: usize) -> u64 {
    splitmix(splitmix(suite_seed ^ fnv1a(name)).wrapping_add(index as u64))
}

/// Inputs and helpers for one case.
pub(crate) struct Case<'a> {
    cfg: &'a SuiteConfig,
    rng: ChaCha8Rng,
    rank: usize,
    n: Natural,
    inputs: Vec<String>,
}

impl<'a> Case<'a> {
    fn new(cfg: &'a SuiteConfig, name: &str, index: usize) -> Self {
        let rank = cfg.ranks[index % cfg.ranks.len()];
        let n = cfg.n_values[(index / cfg.ranks.len()) % cfg.n_values.len()];
        Case {
            cfg,
            rng: ChaCha8Rng::seed_from_u64(case_seed(cfg.seed, name, index)),
            rank,
            n: Natural::from(n),
            inputs: vec![format!("carrier = N^{rank}"), format!("n = {n}")],
        }
    }

    fn rig(&self) -> Rig {
        Rig::nat(self.rank)
    }

    fn record(&mut self, label: &str, value: impl std::fmt::Display) {
        self.inputs.push(format!("{label} = {value}"));
    }

    fn term_bounded(&mut self, label: &str, rig: &Rig, depth: usize, f_depth: usize) -> Term {
        let t = random_term_with(&mut self.rng, rig, depth, f_depth, self.cfg.max_coeff);
        self.record(label, &t);
        t
    }

    fn term(&mut self, label: &str, rig: &Rig) -> Term {
        self.term_bounded(label, rig, self.cfg.max_depth, self.cfg.max_f_depth)
    }

    fn nf(&mut self, label: &str, rig: &Rig) -> Result<NormalForm> {
        let t = self.term(label, rig);
        normalize(&t, rig)
    }

    /// A level-two element, kept small enough for products of payloads.
    fn nf_level2(&mut self, label: &str) -> Result<NormalForm> {
        let r2 = self.rig().lift();
        let depth = self.cfg.max_depth.min(3);
        let t = self.term_bounded(label, &r2, depth, self.cfg.max_f_depth.min(1));
        normalize(&t, &r2)
    }

    fn elem(&mut self, label: &str, rank: usize) -> MonoidElem {
        let coords: Vec<u64> = (0..rank)
            .map(|_| self.rng.random_range(0..=self.cfg.max_coeff))
            .collect();
        let m = MonoidElem::from_coords(rank, &coords).expect("rank coordinates");
        self.record(label, &m);
        m
    }

    fn hom(&mut self, label: &str, domain: usize, codomain: usize) -> MonoidHom {
        let rows: Vec<Vec<u64>> = (0..domain)
            .map(|_| {
                (0..codomain)
                    .map(|_| self.rng.random_range(0..=3))
                    .collect()
            })
            .collect();
        self.record(label, format!("{rows:?}"));
        MonoidHom::from_matrix(domain, codomain, &rows).expect("matrix shape")
    }

    fn small_rank(&mut self) -> usize {
        self.rng.random_range(1..=2)
    }

    fn seed(&mut self) -> u64 {
        self.rng.random()
    }

    fn d(&self, a: &NormalForm) -> TensorElem {
        self.d_with(a, &self.n)
    }

    fn d_with(&self, a: &NormalForm, n: &Natural) -> TensorElem {
        match self.cfg.mutation {
            None => d_n(a, n),
            Some(Mutation::DropLeibnizMultiplicity) => {
                derive::to_tensor(a.rig(), derive::leibniz(a, n, false))
            }
        }
    }

    fn d_map(&self, rig: &Rig) -> LinearMap {
        let r = rig.clone();
        let n = self.n.clone();
        let mutation = self.cfg.mutation;
        LinearMap::new(
            vec![rig.as_carrier()],
            derive::derivative_factors(rig),
            move |keys| {
                let Key::Mono(m) = &keys[0] else {
                    unreachable!("monomial keys")
                };
                let a = NormalForm::monomial(r.clone(), m.clone());
                Ok(match mutation {
                    None => d_n(&a, &n),
                    Some(Mutation::DropLeibnizMultiplicity) => {
                        derive::to_tensor(a.rig(), derive::leibniz(&a, &n, false))
                    }
                })
            },
        )
    }
}

fn run_case(law: &Law, cfg: &SuiteConfig, index: usize) -> Option<Failure> {
    let mut case = Case::new(cfg, law.name, index);
    let outcome = (law.check)(&mut case);
    outcome.err().map(|err| Failure {
        case: index,
        seed: case_seed(cfg.seed, law.name, index),
        message: match err {
            CaseError::Violated(msg) => msg,
            CaseError::Error(e) => format!("error: {e}"),
        },
        inputs: case.inputs,
    })
}

fn case_count(law: &Law, cfg: &SuiteConfig) -> usize {
    match law.count {
        CaseCount::Standard => cfg.cases,
        CaseCount::Level3 => cfg.level3_cases,
        CaseCount::Single => 1,
    }
}

/// Runs every selected law. Failures are report content; a panic inside a
/// case is not caught.
pub fn check_laws(cfg: &SuiteConfig) -> LawReport {
    let laws = REGISTRY.iter().filter(|law| {
        cfg.only
            .as_ref()
            .is_none_or(|only| only.iter().any(|n| n == law.name))
    });
    let mut outcomes = Vec::new();
    for law in laws {
        let start = Instant::now();
        let cases = case_count(law, cfg);
        let failures: Vec<Failure> =
            par::map_indices(cases, cfg.parallel, |i| run_case(law, cfg, i))
                .into_iter()
                .flatten()
                .collect();
        outcomes.push(LawOutcome {
            name: law.name.to_string(),
            anchor: law.anchor.to_string(),
            cases,
            failures,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    LawReport {
        seed: cfg.seed,
        laws: outcomes,
    }
}

/// Re-runs one case; `None` if the law is unknown, `Some(None)` if it passes.
pub fn replay(cfg: &SuiteConfig, law: &str, case: usize) -> Option<Option<Failure>> {
    let law = REGISTRY.iter().find(|l| l.name == law)?;
    Some(run_case(law, cfg, case))
}

/// `ε_(ℕ,id)` of `ₙd(𝐟(x₁))` over `M = ℕ`, reading `FM ⊗ ℕ` as `FM`.
///
/// Returns `(n, value)` for each requested `n`; the values are `n` itself,
/// hence pairwise distinct.
pub fn check_distinctness(n_values: &[u64]) -> Vec<(u64, Natural)> {
    let rig = Rig::nat(1);
    let x1 = NormalForm::generator(rig.clone(), Key::Idx(0)).expect("rank one");
    let fx1 = x1.selfmap().expect("free rig");
    let target = RigWithSelfMap::new(SelfMap::Identity);
    let phi = [Natural::from(1u32)];
    n_values
        .iter()
        .map(|&n| {
            let t = d_n(&fx1, &Natural::from(n));
            let left = right_unitor(&rig, &t);
            let value = evaluate(&left, &target, &phi).expect("phi covers the generator");
            (n, value)
        })
        .collect()
}

/// `FM ⊗ ℕ ≅ FM`: `μ ⊗ e₀ ↦ μ`, since `e₀` is `1 ∈ ℕ`.
fn right_unitor(rig: &Rig, t: &TensorElem) -> NormalForm {
    debug_assert_eq!(t.factors()[1], Carrier::Nat(1));
    let terms = t.iter().map(|(keys, c)| match &keys[0] {
        Key::Mono(m) => (m.clone(), c.clone()),
        Key::Idx(_) => unreachable!("first factor is FM"),
    });
    NormalForm::from_terms(rig.clone(), terms).expect("monomials of rig")
}

/// Whether all values are pairwise distinct.
pub fn pairwise_distinct(pairs: &[(u64, Natural)]) -> bool {
    let mut values: Vec<&Natural> = pairs.iter().map(|(_, v)| v).collect();
    values.sort();
    values.windows(2).all(|w| w[0] != w[1])
}
