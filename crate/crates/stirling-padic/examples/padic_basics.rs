//! Tour of the base-p toolkit: digit vectors, valuations, unit parts,
//! and the classical factorial/binomial congruences.
//!
//! Run with: cargo run --example padic_basics

use num_bigint::BigInt;
use num_rational::BigRational;
use stirling_padic::padic::{
    anton_epsilon, carry_count, digit_sum, digits, factorial, lucas_residue, nu_binomial,
    nu_factorial, val_unit, val_unit_int, Prime,
};

fn main() -> stirling_padic::Result<()> {
    let p3 = Prime::new(3)?;

    // digits are little-endian: index i holds the coefficient of p^i
    let d = digits(7203, p3);
    println!("digits_3(7203)      = {:?}", d.digits());
    println!("sigma_3(7203)       = {}", digit_sum(7203, p3));

    // valuation/unit decomposition works on integers and rationals
    let vu = val_unit_int(&BigInt::from(720), p3);
    println!(
        "720 = 3^{} * {}   (unit residue {} mod 3)",
        vu.valuation,
        vu.unit.clone().unwrap(),
        vu.unit_residue.unwrap()
    );
    let q = BigRational::new(BigInt::from(5), BigInt::from(18));
    let vu = val_unit(&q, p3);
    println!(
        "5/18 = 3^{} * {}  (unit residue {} mod 3)",
        vu.valuation,
        vu.unit.clone().unwrap(),
        vu.unit_residue.unwrap()
    );

    // nu(n!) by digit sums, cross-checked against the exact factorial
    let p2 = Prime::new(2)?;
    println!(
        "nu_2(20!)           = {} (exact: {})",
        nu_factorial(20, p2),
        val_unit_int(&factorial(20), p2).valuation
    );

    // nu(C(n,m)) is the carry count of m + (n-m) in base p
    let (n, m) = (100u64, 37u64);
    println!(
        "nu_3(C({n},{m}))     = {} = {} carries when adding {m} and {}",
        nu_binomial(n, m, p3)?,
        carry_count(m, n - m, p3),
        n - m
    );

    // Lucas: C(n,m) mod p from digit binomials; Anton: the unit part up
    // to the sign (-1)^e
    println!("C({n},{m}) mod 3     = {}", lucas_residue(n, m, p3)?);
    println!("(-1)^e eps_3(C)     = {}", anton_epsilon(n, m, p3)?);
    Ok(())
}
