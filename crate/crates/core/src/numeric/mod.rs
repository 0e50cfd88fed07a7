//! Exact integer and rational primitives.

mod bits;
mod factor;
mod rational;
mod unit_sum;

pub use bits::{bit_positions, floor_log2, is_power_of_two, popcount};
pub use factor::{
    factorize, factorize_u64, is_prime_u64, primes_up_to, sigma, small_primes, Factorization, DEFAULT_FACTOR_BUDGET,
};
pub use rational::Rational;
pub use unit_sum::{sum_unit_fractions, UnitFractionSum};
