//! One function per law; each draws its inputs from the case generator.

use num_traits::{One, Zero};
use rand::Rng;

use super::{ensure, Case, Outcome};
use crate::carrier::{Carrier, Key, LinearMap, MonoidElem, MonoidHom, Natural, TensorElem};
use crate::freerig::{apply_functor, functor_hom, normalize, NormalForm};
use crate::modality::{
    eta, evaluate, mu, mu_hom, mu_map, nabla, nabla_map, unit, unit_hom, unit_lifted,
    RigWithSelfMap, SelfMap,
};
use crate::syntax::{equivalent_variant, term_map_hom, Term};

fn pure2(a: &NormalForm, b: &NormalForm) -> crate::error::Result<TensorElem> {
    TensorElem::pure(&[a.to_elem(), b.to_elem()])
}

pub(super) fn rig_laws(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let b = c.nf("b", &rig)?;
    let d = c.nf("c", &rig)?;
    let zero = NormalForm::zero(rig.clone());
    let one = NormalForm::one(rig.clone());
    ensure!(
        a.add(&b)?.add(&d)? == a.add(&b.add(&d)?)?,
        "addition is not associative"
    );
    ensure!(a.add(&b)? == b.add(&a)?, "addition is not commutative");
    ensure!(a.add(&zero)? == a, "0 is not additively neutral");
    ensure!(
        a.mul(&b)?.mul(&d)? == a.mul(&b.mul(&d)?)?,
        "multiplication is not associative"
    );
    ensure!(
        a.mul(&b)? == b.mul(&a)?,
        "multiplication is not commutative"
    );
    ensure!(a.mul(&one)? == a, "1 is not multiplicatively neutral");
    ensure!(
        a.add(&b)?.mul(&d)? == a.mul(&d)?.add(&b.mul(&d)?)?,
        "multiplication does not distribute over addition"
    );
    ensure!(zero.mul(&a)?.is_zero(), "0 does not annihilate");
    Ok(())
}

pub(super) fn normalize_homomorphism(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let s = c.term("s", &rig);
    let t = c.term("t", &rig);
    let (ns, nt) = (normalize(&s, &rig)?, normalize(&t, &rig)?);
    ensure!(normalize(&Term::Zero, &rig)?.is_zero(), "[0] ≠ 0");
    ensure!(normalize(&Term::One, &rig)?.is_one(), "[1] ≠ 1");
    ensure!(
        normalize(&Term::sum(s.clone(), t.clone()), &rig)? == ns.add(&nt)?,
        "[s + t] ≠ [s] + [t]"
    );
    ensure!(
        normalize(&Term::prod(s.clone(), t.clone()), &rig)? == ns.mul(&nt)?,
        "[s · t] ≠ [s]·[t]"
    );
    ensure!(
        normalize(&Term::app(s), &rig)? == ns.selfmap()?,
        "[f(s)] ≠ 𝐟([s])"
    );
    let m = c.elem("m", c.rank);
    let expanded = m
        .iter()
        .try_fold(NormalForm::zero(rig.clone()), |acc, (k, coeff)| {
            acc.add(&NormalForm::generator(rig.clone(), k.clone())?.scale(coeff))
        })?;
    ensure!(
        normalize(&Term::Var(m), &rig)? == expanded,
        "[x_m] is not Σ mᵢ·[xᵢ]"
    );
    Ok(())
}

pub(super) fn rewrite_invariance(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let t = c.term("t", &rig);
    let seed = c.seed();
    let v = equivalent_variant(&t, c.cfg.rewrite_steps, seed, &rig);
    c.record("variant", &v);
    ensure!(
        normalize(&t, &rig)? == normalize(&v, &rig)?,
        "equivalent terms normalize differently"
    );
    Ok(())
}

pub(super) fn functoriality(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let (j, l) = (c.small_rank(), c.small_rank());
    let h = c.hom("psi", c.rank, j);
    let k = c.hom("chi", j, l);
    let id = MonoidHom::identity(rig.base().clone());
    ensure!(apply_functor(&id, &a)? == a, "F(id) ≠ id");
    let composite = apply_functor(&k.compose(&h)?, &a)?;
    ensure!(
        composite == apply_functor(&k, &apply_functor(&h, &a)?)?,
        "F(χ∘ψ) ≠ Fχ∘Fψ"
    );
    Ok(())
}

pub(super) fn functor_commutes_with_syntax(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let t = c.term("t", &rig);
    let j = c.small_rank();
    let h = c.hom("psi", c.rank, j);
    let lhs = normalize(&term_map_hom(&h, &t)?, &crate::freerig::Rig::nat(j))?;
    ensure!(
        lhs == apply_functor(&h, &normalize(&t, &rig)?)?,
        "[F₀ψ(t)] ≠ Fψ([t])"
    );
    Ok(())
}

pub(super) fn selfmap_not_multiple(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let zero = NormalForm::zero(rig.clone());
    let x1 = NormalForm::generator(rig.clone(), Key::Idx(0))?;
    let f0 = zero.selfmap()?;
    let fx = x1.selfmap()?;
    let fa = a.selfmap()?;
    // Evaluating into (ℕ, const-one) with every generator at 0 separates
    // 𝐟(0) = 1 from p·0 = 0 for any p.
    let target = RigWithSelfMap::new(SelfMap::ConstOne);
    let phi = vec![Natural::zero(); c.rank];
    ensure!(
        evaluate(&f0, &target, &phi)?.is_one(),
        "𝐟(0) does not evaluate to 1"
    );
    let mut ns: Vec<Natural> = (0u32..=10).map(Natural::from).collect();
    ns.push(c.n.clone());
    for p in &ns {
        ensure!(f0 != zero.scale(p), "𝐟(0) = {p}·0");
        ensure!(fx != x1.scale(p), "𝐟(x₁) = {p}·x₁");
        ensure!(fa != a.scale(p), "𝐟(a) = {p}·a");
        ensure!(
            evaluate(&zero.scale(p), &target, &phi)?.is_zero(),
            "{p}·0 evaluates to nonzero"
        );
    }
    Ok(())
}

pub(super) fn unit_additive(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let m = c.elem("m", c.rank);
    let n = c.elem("n", c.rank);
    ensure!(
        unit(&rig, &m.add(&n)?)? == unit(&rig, &m)?.add(&unit(&rig, &n)?)?,
        "u(m + n) ≠ u(m) + u(n)"
    );
    ensure!(
        unit(&rig, &MonoidElem::zero(rig.base().clone()))?.is_zero(),
        "u(0) ≠ 0"
    );
    Ok(())
}

pub(super) fn monad_left_unit(c: &mut Case) -> Outcome {
    let a = c.nf("a", &c.rig())?;
    ensure!(mu(&unit_lifted(&a))? == a, "μ(u(a)) ≠ a");
    Ok(())
}

pub(super) fn monad_right_unit(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let lifted = apply_functor(&unit_hom(&rig), &a)?;
    ensure!(mu(&lifted)? == a, "μ(F(u)(a)) ≠ a");
    Ok(())
}

pub(super) fn monad_associativity(c: &mut Case) -> Outcome {
    let r1 = c.rig();
    let r3 = r1.lift().lift();
    let t = c.term_bounded("a", &r3, 2, 1);
    let a3 = normalize(&t, &r3)?;
    let lhs = mu(&mu(&a3)?)?;
    let rhs = mu(&apply_functor(&mu_hom(&r1), &a3)?)?;
    ensure!(lhs == rhs, "μ∘μ_F ≠ μ∘F(μ)");
    Ok(())
}

pub(super) fn nabla_eta_monoid(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let b = c.nf("b", &rig)?;
    let d = c.nf("c", &rig)?;
    let fm = rig.as_carrier();
    let id = LinearMap::identity(fm);
    let abc = TensorElem::pure(&[a.to_elem(), b.to_elem(), d.to_elem()])?;
    let left = nabla_map(&rig).apply(&abc.bimap(&[nabla_map(&rig), id.clone()])?)?;
    let right = nabla_map(&rig).apply(&abc.bimap(&[id, nabla_map(&rig)])?)?;
    ensure!(left == right, "∇ is not associative");
    let ab = pure2(&a, &b)?;
    ensure!(
        nabla(&ab)? == nabla(&ab.permute(&[1, 0])?)?,
        "∇ is not commutative"
    );
    let k: u64 = c.rng.random_range(0..=c.cfg.max_coeff);
    c.record("k", k);
    let k = Natural::from(k);
    ensure!(
        nabla(&pure2(&a, &eta(&rig, &Natural::one()))?)? == a,
        "η(1) is not a unit for ∇"
    );
    ensure!(
        nabla(&pure2(&eta(&rig, &k), &a)?)? == a.scale(&k),
        "∇(η(k) ⊗ a) ≠ k·a"
    );
    Ok(())
}

pub(super) fn modality_square(c: &mut Case) -> Outcome {
    let r1 = c.rig();
    let u = c.nf_level2("u")?;
    let v = c.nf_level2("v")?;
    let lhs = mu(&nabla(&pure2(&u, &v)?)?)?;
    ensure!(
        lhs == nabla(&pure2(&mu(&u)?, &mu(&v)?)?)?,
        "μ(∇(u⊗v)) ≠ ∇(μu ⊗ μv)"
    );
    let via_maps = pure2(&u, &v)?.bimap(&[mu_map(&r1), mu_map(&r1)])?;
    ensure!(lhs == nabla(&via_maps)?, "μ∘∇_F ≠ ∇∘(μ⊗μ) on tensors");
    Ok(())
}

const TARGETS: &[&str] = &[
    "identity",
    "successor",
    "square",
    "double",
    "const-one",
    "const-zero",
    "x[1]*x[1] + x[2] + 1",
];

pub(super) fn evaluate_homomorphism(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let b = c.nf("b", &rig)?;
    let name = TARGETS[c.rng.random_range(0..TARGETS.len())];
    let target = RigWithSelfMap::new(name.parse()?);
    let phi: Vec<Natural> = (0..c.rank)
        .map(|_| Natural::from(c.rng.random_range(0u32..=4)))
        .collect();
    c.record("target", name);
    c.record("phi", format!("{phi:?}"));
    let m = c.elem("m", c.rank);
    let ev = |x: &NormalForm| evaluate(x, &target, &phi);
    let (ea, eb) = (ev(&a)?, ev(&b)?);
    ensure!(ev(&NormalForm::zero(rig.clone()))?.is_zero(), "ε(0) ≠ 0");
    ensure!(ev(&NormalForm::one(rig.clone()))?.is_one(), "ε(1) ≠ 1");
    ensure!(ev(&a.add(&b)?)? == &ea + &eb, "ε(a + b) ≠ ε(a) + ε(b)");
    ensure!(ev(&a.mul(&b)?)? == &ea * &eb, "ε(a·b) ≠ ε(a)·ε(b)");
    ensure!(
        ev(&a.selfmap()?)? == target.self_map.apply(&ea),
        "ε(𝐟a) ≠ 𝐟(ε(a))"
    );
    let linear: Natural = m
        .coords()
        .expect("ℕᵏ element")
        .iter()
        .zip(&phi)
        .map(|(x, p)| x * p)
        .sum();
    ensure!(ev(&unit(&rig, &m)?)? == linear, "ε∘u ≠ φ");
    Ok(())
}

pub(super) fn eta_nabla_naturality(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let b = c.nf("b", &rig)?;
    let j = c.small_rank();
    let h = c.hom("psi", c.rank, j);
    let rj = crate::freerig::Rig::nat(j);
    let k = Natural::from(c.rng.random_range(0..=c.cfg.max_coeff));
    ensure!(
        apply_functor(&h, &eta(&rig, &k))? == eta(&rj, &k),
        "Fψ∘η ≠ η"
    );
    let lhs = apply_functor(&h, &nabla(&pure2(&a, &b)?)?)?;
    let rhs = nabla(&pure2(&apply_functor(&h, &a)?, &apply_functor(&h, &b)?)?)?;
    ensure!(lhs == rhs, "Fψ∘∇ ≠ ∇∘(Fψ⊗Fψ)");
    Ok(())
}

pub(super) fn product_rule(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let b = c.nf("b", &rig)?;
    let fm = LinearMap::identity(rig.as_carrier());
    let m = LinearMap::identity(rig.base().clone());
    let ab = pure2(&a, &b)?;
    let right = ab
        .bimap(&[fm.clone(), c.d_map(&rig)])?
        .bimap(&[nabla_map(&rig), m.clone()])?;
    let left = ab
        .bimap(&[c.d_map(&rig), fm])?
        .permute(&[0, 2, 1])?
        .bimap(&[nabla_map(&rig), m])?;
    ensure!(
        c.d(&a.mul(&b)?) == left.add(&right)?,
        "d(ab) ≠ d(a)·b + a·d(b)"
    );
    Ok(())
}

pub(super) fn linear_rule(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let m = c.elem("m", c.rank);
    let expected = TensorElem::pure(&[eta(&rig, &Natural::one()).to_elem(), m.clone()])?;
    ensure!(c.d(&unit(&rig, &m)?) == expected, "d(u(m)) ≠ 1 ⊗ m");
    Ok(())
}

pub(super) fn chain_rule(c: &mut Case) -> Outcome {
    let r1 = c.rig();
    let a2 = c.nf_level2("a")?;
    let lhs = c.d(&mu(&a2)?);
    let rhs = c
        .d(&a2)
        .bimap(&[mu_map(&r1), c.d_map(&r1)])?
        .bimap(&[nabla_map(&r1), LinearMap::identity(r1.base().clone())])?;
    ensure!(lhs == rhs, "d(μ(a)) ≠ (∇⊗1)(μ⊗d)(d_F(a))");
    Ok(())
}

pub(super) fn interchange_rule(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let t = c
        .d(&a)
        .bimap(&[c.d_map(&rig), LinearMap::identity(rig.base().clone())])?;
    ensure!(
        t.permute(&[0, 2, 1])? == t,
        "(d⊗1)d is not symmetric in its M factors"
    );
    Ok(())
}

pub(super) fn derive_rewrite_invariance(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let t = c.term("t", &rig);
    let seed = c.seed();
    let v = equivalent_variant(&t, c.cfg.rewrite_steps, seed, &rig);
    c.record("variant", &v);
    ensure!(
        c.d(&normalize(&t, &rig)?) == c.d(&normalize(&v, &rig)?),
        "equivalent terms have different derivatives"
    );
    Ok(())
}

pub(super) fn derive_naturality(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let j = c.small_rank();
    let h = c.hom("psi", c.rank, j);
    let lhs = c.d(&a).bimap(&[
        LinearMap::from_hom(functor_hom(&rig, &h)?),
        LinearMap::from_hom(h.clone()),
    ])?;
    ensure!(lhs == c.d(&apply_functor(&h, &a)?), "(Fψ⊗ψ)∘d ≠ d∘Fψ");
    Ok(())
}

pub(super) fn derive_additive(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let a = c.nf("a", &rig)?;
    let b = c.nf("b", &rig)?;
    ensure!(
        c.d(&a.add(&b)?) == c.d(&a).add(&c.d(&b))?,
        "d(a + b) ≠ d(a) + d(b)"
    );
    ensure!(c.d(&NormalForm::zero(rig)).is_zero(), "d(0) ≠ 0");
    Ok(())
}

pub(super) fn n_independence(c: &mut Case) -> Outcome {
    let rig = c.rig();
    let t = c.term_bounded("a", &rig, c.cfg.max_depth, 0);
    let a = normalize(&t, &rig)?;
    let reference = c.d(&a);
    for &p in &c.cfg.n_values {
        ensure!(
            c.d_with(&a, &Natural::from(p)) == reference,
            "{p}d(a) differs from {}d(a) on an f-free element",
            c.n
        );
    }
    Ok(())
}

pub(super) fn distinctness(c: &mut Case) -> Outcome {
    let mut ns: Vec<u64> = (0..=10).chain(c.cfg.n_values.iter().copied()).collect();
    ns.sort_unstable();
    ns.dedup();
    c.record("n values", format!("{ns:?}"));
    let pairs = super::check_distinctness(&ns);
    for (n, v) in &pairs {
        ensure!(&Natural::from(*n) == v, "ε(ₙd(𝐟(x₁))) = {v}, expected {n}");
    }
    ensure!(
        super::pairwise_distinct(&pairs),
        "two deriving transformations coincide"
    );
    let rig = crate::freerig::Rig::nat(1);
    let fx = NormalForm::generator(rig.clone(), Key::Idx(0))?.selfmap()?;
    for &n in &ns {
        let n = Natural::from(n);
        let expected = TensorElem::from_terms(
            vec![rig.as_carrier(), Carrier::Nat(1)],
            [(
                vec![Key::Mono(crate::freerig::Monomial::one()), Key::Idx(0)],
                n.clone(),
            )],
        )?;
        ensure!(c.d_with(&fx, &n) == expected, "ₙd(𝐟(x₁)) ≠ n·(1 ⊗ e)");
    }
    Ok(())
}
