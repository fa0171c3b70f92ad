//! Exact scalars: ℚ, real quadratic fields, polynomials and the
//! root-of-unity utilities built on them.

mod arith;
mod field;
mod poly;

pub use arith::{
    candidate_orders, cyclotomic_bound, cyclotomic_poly, field_degree, gcd_with_unity, is_prime,
    prime_power, sqrt_power, totient,
};
pub use field::Scalar;
pub use poly::Poly;
