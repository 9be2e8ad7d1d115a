use proptest::test_runner::{Config, RngSeed};
use slicepd_oracles::seed_from_env;

/// Proptest settings with the RNG seeded from `SLICEPD_SEED` (default 2024).
pub fn seeded(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed_from_env(2024)),
        ..Config::default()
    }
}
