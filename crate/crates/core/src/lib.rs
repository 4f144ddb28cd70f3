//! Quantum walks of anyons on a line.
//!
//! Three walk families are covered:
//!
//! * the Abelian walk with a four-state die ([`walk_abelian`]),
//! * the single-coin SU(2)_k walk, computed either by dense evolution of the
//!   fusion space ([`walk_nonabelian::distribution_dense`]) or by a sum over
//!   path pairs weighted with plat-closure Kauffman brackets
//!   ([`walk_nonabelian::distribution_pathsum`]),
//! * the D(S_N) walk, whose anyonic weights are Markov traces evaluated in
//!   exact rational arithmetic ([`quantum_double`]).

pub mod anyon_models;
pub mod error;
pub mod fusion_braid;
pub mod io;
pub mod kauffman_tl;
pub mod laurent;
pub mod quantum_double;
pub mod sparse;
pub mod walk_abelian;
pub mod walk_nonabelian;

pub use anyon_models::{build_dsn, build_su2k, AnyonLabel, AnyonModel, DoubleIrrepParams, ModelSpec, UnitPhase};
pub use error::{Error, Result};
pub use io::{Format, Payload, ResultEnvelope};
pub use fusion_braid::{BraidRepresentation, FusionPath, FusionSpace, QubitRepresentation, TlRepresentation};
pub use kauffman_tl::{BraidWord, Closure, Letter, TLDiagram, TLElement};
pub use laurent::LaurentPoly;
pub use walk_abelian::{AbelianConfig, MomentumOperator, SpinorField, VarianceSurface};
pub use walk_nonabelian::{Coin, CoinState, Distribution, Engine, PathVector, WalkGeometry};
