//! One-dimensional kernels: co-flag data, `GH²(A, k)`, `HOC(A, k)`,
//! automorphism groups of extensions, towers and the classifier.

mod classify;
mod cohomology;
mod datum;
pub(crate) mod iso;

pub use classify::{classify_coflag, coflag_tower, Classified, CoflagTower};
pub use cohomology::{
    coboundary, coboundary_space, cocycle_space, gh2_coflag, h2_pair, Gh2Counts, Gh2Report, H2Block,
};
pub use datum::{
    build_coflag_algebra, cf_from_hs, hs_from_cf, trivializer_second_kind, validate_coflag,
    CoflagDatum,
};
pub use iso::{
    aut_group, embed, find_iso_first_kind, hoc, verify_witness, AutGroup, HocClass, HocReport,
    IsoWitness, SemidirectElement,
};
