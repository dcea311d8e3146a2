mod product;
mod satake;

pub use product::{lambda_assembly, partial_l, partial_l_with_guard, primes_below, DEFAULT_GUARD};
pub use satake::{
    complex_str, ext2_factor, ext2_reciprocal_poly, is_prime, random_satake, standard_factor, standard_reciprocal_poly,
    SatakeData,
};
