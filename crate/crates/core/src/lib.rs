//! Computational algebra for finite quandles.
//!
//! The crate validates operation tables, computes inner automorphism groups
//! and the reflection onto trivial quandles, manipulates congruences and
//! relations, and implements the two factorisation systems that exist for
//! surjective quandle homomorphisms:
//!
//! * `(E, M)`, induced by the component reflection: `E` consists of the
//!   surjections inverted by the reflection, `M` of the trivial extensions.
//! * `(E1, M1)`, via rigid quotients: `E1` consists of the surjections whose
//!   kernel is the orbit congruence of the kernel of the induced inner-group
//!   map, `M1` of the surjections inducing an isomorphism of inner groups.
//!
//! Everything is exact and small-scale by design: carriers are `{0, …, n−1}`
//! with `n` around a dozen at most, groups are materialized element sets,
//! and the `sweep` module re-verifies the structural claims exhaustively
//! over every quandle of small order.

pub mod congruence;
pub mod enumerate;
pub mod error;
pub mod factorisation;
pub mod fixtures;
pub mod group;
pub mod hom;
pub mod inner;
pub mod partition;
pub mod perm;
pub mod quandle;
pub mod sweep;

pub use congruence::{
    compose_relations, congruences_of, direct_image, inn_orbit_congruence, is_congruence, join,
    kernel_congruence, meet, orbit_congruence, quotient, relations_permute, Congruence,
    OrbitRelation, Relation,
};
pub use enumerate::{
    canonical_form, enumerate_homs, enumerate_quandles, enumerate_surjective_homs, subgroups,
    EnumConfig,
};
pub use error::{Axiom, Error, Result};
pub use factorisation::{
    check_admissibility_instance, classify, comparison_to_pullback, factor_em, factor_rigid,
    is_trivial_extension, orthogonal_fill, pi0_preserves_kernel_pair, pullback,
    pushout_of_surjections, special_pushout_comparison_surjective, ClassReport, Factorisation,
    PullbackResult,
};
pub use group::{is_normal_subgroup, Generator, GroupHom, PermGroup, DEFAULT_GROUP_CAP};
pub use hom::Hom;
pub use inner::{inn_hom, inner_group, inner_group_with_cap, is_connected, pi0, pi0_map, Pi0Result};
pub use partition::{set_partitions, Partition};
pub use perm::Permutation;
pub use quandle::Quandle;
pub use sweep::{run_sweep, ClaimId, SweepReport};
