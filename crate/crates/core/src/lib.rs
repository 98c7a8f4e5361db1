//! The free commutative rig with a self-map over a commutative monoid.
//!
//! Elements are kept in canonical form ([`NormalForm`]), so equality of
//! elements is structural. On top of that sit the monad and modality
//! structure ([`modality`]), the family of deriving transformations
//! `ₙd: FM → FM ⊗ M` ([`derive`]) and a seeded law-checking harness
//! ([`laws`]).
//!
//! ```
//! use fmrig::{normalize, parse, Rig};
//!
//! let rig = Rig::nat(1);
//! let a = normalize(&parse("x[2] + x[3]", rig.base()).unwrap(), &rig).unwrap();
//! assert_eq!(a.to_string(), "5*x[0]");
//! ```

pub mod carrier;
pub mod derive;
pub mod error;
pub mod freerig;
pub mod laws;
pub mod modality;
pub mod par;
pub mod syntax;

pub use carrier::{Carrier, Key, LinearMap, MonoidElem, MonoidHom, Natural, TensorElem};
pub use derive::{d_n, derive_map, sym_derive};
pub use error::{Error, Result};
pub use freerig::{apply_functor, normalize, Monomial, NormalForm, Rig};
pub use laws::{check_laws, LawReport, SuiteConfig};
pub use modality::{evaluate, mu, nabla, unit, RigWithSelfMap, SelfMap};
pub use syntax::{parse, Term};
