//! Shared inputs for the benchmarks.

use num_bigint::BigInt;

/// Indices at which single-value routes are timed.
pub const ROUTE_SIZES: [usize; 3] = [6, 10, 14];

/// Indices for the polynomial-cost routes, which reach further.
pub const DEEP_SIZES: [usize; 3] = [20, 40, 80];

/// `1 + p^t`, the parameter that makes `ord_p(N - 1) = t`.
pub fn lifted_parameter(p: u64, t: u32) -> BigInt {
    BigInt::from(1) + BigInt::from(p).pow(t)
}
