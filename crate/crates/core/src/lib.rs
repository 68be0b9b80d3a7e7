//! Exact combinatorics of tame inertial parameters for reductive p-adic
//! groups: root data and Weyl groups, semisimple classes in `X ⊗ Q/Z`,
//! facets of the fundamental alcove with their class systems, Levi
//! functoriality, and characteristic-polynomial bookkeeping for classical
//! groups.
//!
//! ```
//! use level_zero::{catalog, enumerate_inertial_params, Group, Lambda};
//!
//! let g = Group::split(catalog::sl(2), 3).unwrap();
//! let params = enumerate_inertial_params(&g, 8, Lambda::Qlbar).unwrap();
//! assert_eq!(params.len(), 3);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod building;
pub mod catalog;
pub mod classical;
pub mod cli;
pub mod error;
pub mod functoriality;
pub mod group;
pub mod inertial_params;
pub mod lattice;
pub mod root_datum;
pub mod spec_file;
pub mod ss_classes;
pub mod weyl;

pub use building::{
    compute_s_phi, face_restriction, facet_types, is_attained, parahoric_quotient, psi_sigma, verify_partition,
    verify_zero_coherence, Apartment, ClassSystem, FacetType,
};
pub use classical::{
    char_polynomial, is_self_dual, jordan_inertial_restriction, jordan_multiplicities, verify_compatibility,
    vertex_polynomial, ClassicalFamily, ClassicalType, EigenOrbit, OrbitPolynomial,
};
pub use error::{Error, Result, RootDatumError};
pub use functoriality::{is_discrete, levi_param_map, restriction_fibers, satisfies_equivalence_criterion, LeviContext};
pub use group::Group;
pub use inertial_params::{
    centralizer_connected, enumerate_inertial_params, refine_to_ql, torus_theta_decomposition, InertialParam,
};
pub use lattice::IntMatrix;
pub use root_datum::{transpose_automorphism, BasedAutomorphism, RawRootDatum, RootDatum};
pub use spec_file::GroupSpec;
pub use ss_classes::{ClassVector, FrobeniusDescriptor, GeometricClass, Lambda};
pub use weyl::{generate_weyl, WeylGroup};
