//! Combinatorial and cohomological kernel for splitting criteria of vector
//! bundles on GL partial flag varieties.
//!
//! * [`weights`]: flag shapes, Levi-dominant weights, ρ-shifts, inversions.
//! * [`schur`]: Pieri rules, Weyl dimensions, tableau oracles.
//! * [`bott`]: Bott's algorithm, canonical bundles, h-splitting, the
//!   `∀ m` vanishing check on `F(n, ν+n−1; ν+n)`.
//! * [`resolutions`]: Koszul and Buchsbaum–Eisenbud complexes as formal
//!   sums of Schur functors, and the vanishing chase through them.
//! * [`criteria`]: split bundles, ampleness, effective thresholds, rank
//!   gates, the isotypical poset, and the Grassmannian/flag reduction chains.

pub mod bott;
pub mod criteria;
pub mod error;
pub mod resolutions;
pub mod schur;
pub mod weights;

pub use bott::{cohomology, CohomologyResult};
pub use error::{Error, Result};
pub use weights::{FlagShape, LeviWeight, Partition};

pub(crate) fn serialize_biguint<S: serde::Serializer>(
    v: &num_bigint::BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
