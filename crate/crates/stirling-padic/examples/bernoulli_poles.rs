//! Higher-order Bernoulli numbers B_n^(l), their polynomials, and the
//! pole structure of the coefficients.
//!
//! Run with: cargo run --example bernoulli_poles

use stirling_padic::bernoulli::{
    bernoulli_number, bernoulli_numbers, bernoulli_poly, coefficient_valuations, connect_first,
    connect_second,
};
use stirling_padic::padic::Prime;
use stirling_padic::Valuation;

fn main() -> stirling_padic::Result<()> {
    // classical values sit at order l = 1
    println!("B_2  = {}", bernoulli_number(2, 1));
    println!("B_4  = {}", bernoulli_number(4, 1));

    // orders may be any integer; negative orders avoid series inversion
    // entirely because ((e^t-1)/t)^m has explicit coefficients
    println!("B_2^(-3) = {}", bernoulli_number(2, -3));
    println!("B_6^(12) = {}", bernoulli_number(6, 12));
    let row: Vec<String> = bernoulli_numbers(-4, 6)
        .iter()
        .map(|b| b.to_string())
        .collect();
    println!("B_0..B_6 at order -4: {}", row.join(", "));

    // the polynomial is monic of degree n with constant term B_n^(l)
    println!("B_3^(-2)(x) = {}", bernoulli_poly(3, -2));

    // connection formulas reproduce both Stirling kinds exactly
    println!("C(5,3) B_2^(-3) = {}  (= S(5,3))", connect_second(5, 3)?);
    println!("C(3,1) B_2^(4)  = {}  (= s(4,2))", connect_first(4, 2)?);

    // coefficient valuations, scanned by codegree: the first pole has
    // order exactly 1 and sits where p-1 | i and p !| C(n,i)
    let p2 = Prime::new(2)?;
    for l in [-3i64, 2] {
        let vals = coefficient_valuations(6, l, p2);
        let shown: Vec<String> = vals
            .iter()
            .map(|(i, v)| match v {
                Valuation::Finite(x) => format!("{i}:{x}"),
                Valuation::Infinite => format!("{i}:inf"),
            })
            .collect();
        println!("codegree:nu_2 of B_6^({l})(x) coefficients: {}", shown.join(" "));
    }
    Ok(())
}
