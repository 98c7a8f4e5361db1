//! Raw terms: `0`, `1`, `x_m`, sums, products and `f(t)`.
//!
//! Surface grammar (whitespace insignificant):
//!
//! ```text
//! expr := expr "+" mult | mult
//! mult := mult "*" atom | atom
//! atom := "0" | "1" | var | "f" "(" expr ")" | "(" expr ")"
//! var  := "x" "[" nat ("," nat)* "]"
//! ```
//!
//! Over a carrier that is itself a free rig, a variable's brackets hold an
//! expression one level down (`y[x[1] + 1]`), and the self-map is spelled
//! `g`. The parser accepts `x`/`y` and `f`/`g` at every level.

mod gen;
mod parse;
mod rewrite;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::carrier::{Carrier, Key, MonoidElem, MonoidHom, Natural};
use crate::error::Result;
use crate::freerig::{Atom, NormalForm};

pub use gen::{random_term, random_term_with, GenConfig};
pub use parse::parse;
pub use rewrite::{
    applicable_rules, equivalent_variant, rewrite_step, Direction, RewriteRule, RuleTag, Witness,
};

/// A term of the free term algebra, before quotienting.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Zero,
    One,
    Var(MonoidElem),
    Sum(Box<Term>, Box<Term>),
    Prod(Box<Term>, Box<Term>),
    App(Box<Term>),
}

impl Term {
    pub fn sum(a: Term, b: Term) -> Term {
        Term::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: Term, b: Term) -> Term {
        Term::Prod(Box::new(a), Box::new(b))
    }

    pub fn app(a: Term) -> Term {
        Term::App(Box::new(a))
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Zero | Term::One | Term::Var(_) => vec![],
            Term::Sum(a, b) | Term::Prod(a, b) => vec![a, b],
            Term::App(a) => vec![a],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        self.children()
            .iter()
            .map(|c| 1 + c.depth())
            .max()
            .unwrap_or(0)
    }

    /// Maximum nesting of `f`.
    pub fn f_depth(&self) -> usize {
        let inner = self
            .children()
            .iter()
            .map(|c| c.f_depth())
            .max()
            .unwrap_or(0);
        match self {
            Term::App(_) => inner + 1,
            _ => inner,
        }
    }

    pub fn has_app(&self) -> bool {
        self.f_depth() > 0
    }

    pub fn subterm(&self, path: &[usize]) -> Option<&Term> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i)?.subterm(rest),
        }
    }

    /// Replaces the subterm at `path` by `f(old)`.
    pub(crate) fn replace_at<F>(&self, path: &[usize], f: F) -> Option<Result<Term>>
    where
        F: FnOnce(&Term) -> Result<Term>,
    {
        let Some((&i, rest)) = path.split_first() else {
            return Some(f(self));
        };
        let rebuilt = match (self, i) {
            (Term::Sum(a, b), 0) => a
                .replace_at(rest, f)?
                .map(|a| Term::Sum(Box::new(a), b.clone())),
            (Term::Sum(a, b), 1) => b
                .replace_at(rest, f)?
                .map(|b| Term::Sum(a.clone(), Box::new(b))),
            (Term::Prod(a, b), 0) => a
                .replace_at(rest, f)?
                .map(|a| Term::Prod(Box::new(a), b.clone())),
            (Term::Prod(a, b), 1) => b
                .replace_at(rest, f)?
                .map(|b| Term::Prod(a.clone(), Box::new(b))),
            (Term::App(a), 0) => a.replace_at(rest, f)?.map(|a| Term::App(Box::new(a))),
            _ => return None,
        };
        Some(rebuilt)
    }

    /// Every position in preorder.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for (i, child) in self.children().into_iter().enumerate() {
            for mut p in child.paths() {
                p.insert(0, i);
                out.push(p);
            }
        }
        out
    }

    /// The canonical representative of a normal form, written with the
    /// term constructors only.
    pub fn from_nf(nf: &NormalForm) -> Term {
        let mut acc: Option<Term> = None;
        for (mono, coeff) in nf.terms() {
            let atoms = mono.atoms();
            let term = match atoms.first() {
                // c·x_e·rest is written x_{c·e}·rest
                Some(Atom::Gen(key)) => {
                    let head = Term::Var(
                        MonoidElem::from_terms(
                            nf.rig().base().clone(),
                            [(key.clone(), coeff.clone())],
                        )
                        .expect("key from a canonical form"),
                    );
                    atoms[1..]
                        .iter()
                        .fold(head, |acc, atom| Term::prod(acc, atom_term(nf, atom)))
                }
                Some(_) => {
                    let product = atoms[1..]
                        .iter()
                        .fold(atom_term(nf, &atoms[0]), |acc, atom| {
                            Term::prod(acc, atom_term(nf, atom))
                        });
                    if coeff.is_one() {
                        product
                    } else {
                        Term::prod(numeral(coeff), product)
                    }
                }
                None => numeral(coeff),
            };
            acc = Some(match acc {
                None => term,
                Some(prev) => Term::sum(prev, term),
            });
        }
        acc.unwrap_or(Term::Zero)
    }

    fn level_hint(&self) -> usize {
        match self {
            Term::Var(m) => m.carrier().level() + 1,
            _ => self
                .children()
                .iter()
                .map(|c| c.level_hint())
                .max()
                .unwrap_or(1),
        }
    }
}

fn atom_term(nf: &NormalForm, atom: &Atom) -> Term {
    match atom {
        Atom::Gen(key) => Term::Var(
            MonoidElem::basis(nf.rig().base().clone(), key.clone())
                .expect("key from a canonical form"),
        ),
        Atom::App(inner) => Term::app(Term::from_nf(inner)),
    }
}

/// `c` written with `0`, `1`, `+` and `*` (binary expansion).
pub fn numeral(c: &Natural) -> Term {
    if c.is_zero() {
        return Term::Zero;
    }
    if c.is_one() {
        return Term::One;
    }
    let two = Term::sum(Term::One, Term::One);
    let half = c >> 1usize;
    let doubled = if half.is_one() {
        two
    } else {
        Term::prod(two, numeral(&half))
    };
    if (c & BigUint::one()).is_one() {
        Term::sum(doubled, Term::One)
    } else {
        doubled
    }
}

/// `F₀ψ`: relabels every variable through `hom`.
pub fn term_map_hom(hom: &MonoidHom, t: &Term) -> Result<Term> {
    Ok(match t {
        Term::Zero => Term::Zero,
        Term::One => Term::One,
        Term::Var(m) => Term::Var(hom.apply(m)?),
        Term::Sum(a, b) => Term::sum(term_map_hom(hom, a)?, term_map_hom(hom, b)?),
        Term::Prod(a, b) => Term::prod(term_map_hom(hom, a)?, term_map_hom(hom, b)?),
        Term::App(a) => Term::app(term_map_hom(hom, a)?),
    })
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, level: usize) -> fmt::Result {
    match t {
        Term::Zero => write!(f, "0"),
        Term::One => write!(f, "1"),
        Term::Var(m) => match m.carrier() {
            Carrier::Nat(rank) => {
                write!(f, "x[")?;
                for i in 0..*rank {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", m.coeff(&Key::Idx(i)))?;
                }
                write!(f, "]")
            }
            Carrier::Fm(rig) => {
                let inner =
                    NormalForm::from_elem((**rig).clone(), m).expect("payload in its own carrier");
                write!(f, "y[")?;
                write_term(f, &Term::from_nf(&inner), rig.level())?;
                write!(f, "]")
            }
        },
        Term::Sum(a, b) => {
            write!(f, "(")?;
            write_term(f, a, level)?;
            write!(f, " + ")?;
            write_term(f, b, level)?;
            write!(f, ")")
        }
        Term::Prod(a, b) => {
            write!(f, "(")?;
            write_term(f, a, level)?;
            write!(f, " * ")?;
            write_term(f, b, level)?;
            write!(f, ")")
        }
        Term::App(a) => {
            write!(f, "{}(", if level >= 2 { "g" } else { "f" })?;
            write_term(f, a, level)?;
            write!(f, ")")
        }
    }
}

/// Fully parenthesized rendering; `parse` inverts it.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, self.level_hint())
    }
}

/// `print`: the fully parenthesized surface form of `t`.
pub fn print(t: &Term) -> String {
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freerig::{normalize, Rig};

    fn var1(c: u64) -> Term {
        Term::Var(MonoidElem::from_coords(1, &[c]).unwrap())
    }

    #[test]
    fn printing() {
        assert_eq!(print(&Term::prod(var1(1), Term::One)), "(x[1] * 1)");
        assert_eq!(print(&Term::Zero), "0");
        assert_eq!(print(&Term::app(Term::Zero)), "f(0)");
        let v = Term::Var(MonoidElem::from_coords(2, &[0, 2]).unwrap());
        assert_eq!(print(&Term::app(v)), "f(x[0,2])");
    }

    #[test]
    fn level_two_printing_uses_y_and_g() {
        let r2 = Rig::nat(1).lift();
        let t = parse("g(y[x[1]]) * y[x[2] * f(1)]", r2.base()).unwrap();
        let printed = print(&t);
        assert_eq!(printed, "(g(y[x[1]]) * y[(x[2] * f(1))])");
        assert_eq!(parse(&printed, r2.base()).unwrap(), t);
    }

    #[test]
    fn numerals_evaluate_correctly() {
        let rig = Rig::nat(0);
        for c in 0u32..40 {
            let nf = normalize(&numeral(&Natural::from(c)), &rig).unwrap();
            assert_eq!(nf, NormalForm::constant(rig.clone(), c.into()));
        }
    }

    #[test]
    fn from_nf_is_a_right_inverse_of_normalize() {
        let rig = Rig::nat(2);
        let t = parse(
            "(x[1,3] + f(x[2,0]) * 1 + 1 + 1) * (f(0) + f(0) + x[0,1])",
            rig.base(),
        )
        .unwrap();
        let nf = normalize(&t, &rig).unwrap();
        assert_eq!(normalize(&Term::from_nf(&nf), &rig).unwrap(), nf);
    }

    #[test]
    fn map_hom_on_terms() {
        let double = MonoidHom::from_matrix(1, 1, &[vec![2]]).unwrap();
        assert_eq!(term_map_hom(&double, &var1(1)).unwrap(), var1(2));
        assert_eq!(term_map_hom(&double, &Term::One).unwrap(), Term::One);
        assert_eq!(
            term_map_hom(&double, &Term::app(var1(3))).unwrap(),
            Term::app(var1(6))
        );
        let wrong = Term::Var(MonoidElem::from_coords(2, &[1, 1]).unwrap());
        assert!(term_map_hom(&double, &wrong).is_err());
    }

    #[test]
    fn paths_and_subterms() {
        let t = Term::sum(Term::app(var1(1)), Term::One);
        assert_eq!(t.paths(), vec![vec![], vec![0], vec![0, 0], vec![1]]);
        assert_eq!(t.subterm(&[0, 0]), Some(&var1(1)));
        assert_eq!(t.subterm(&[2]), None);
        assert_eq!(t.size(), 4);
        assert_eq!(t.depth(), 2);
        assert_eq!(t.f_depth(), 1);
    }
}
