//! Exact symbolic verification toolkit for minimalistic presentations of
//! twisted Yangians, their classical current-algebra degenerations, and the
//! rank-one Drinfeld/RTT realizations.
//!
//! All arithmetic is exact, over the field `Q(√2,√3)`.  The crate is organized
//! bottom-up: scalars → root data → a generic PBW straightening engine →
//! truncated series → the individual check suites.

pub mod scalar;
pub mod rootdata;
pub mod pbw;
pub mod report;
pub mod current;
pub mod series;
pub mod fragment;
pub mod rank1;
pub mod cache;
