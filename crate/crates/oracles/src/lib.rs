//! Reference implementations that share no algorithmic code with
//! `slicepd`, plus seeded suites comparing the two.
//!
//! Everything here works on dense exponent vectors and plain big
//! rationals; conversion to and from `slicepd` types happens at the edge.

pub mod dense;
pub mod frac;
pub mod linalg;
pub mod random;
pub mod slice;
pub mod suites;

/// Seed for randomized checks: `SLICEPD_SEED` if set, else `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("SLICEPD_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}
