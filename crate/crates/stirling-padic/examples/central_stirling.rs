//! Central Stirling numbers S(pk,k): divisibility by p is decided by a
//! digit pattern of k alone, and the residue mod p is a digit product.
//!
//! Run with: cargo run --example central_stirling

use stirling_padic::minzero::{central_fibbinary, central_residue};
use stirling_padic::padic::{digits, residue_int, Prime};
use stirling_padic::stirling::stirling2;

fn main() -> stirling_padic::Result<()> {
    let p2 = Prime::new(2)?;

    // k is Fibbinary when its binary expansion has no adjacent ones;
    // exactly then S(2k,k) is odd
    println!("k, binary, Fibbinary, S(2k,k) odd?");
    for k in 1..=12u64 {
        let fib = central_fibbinary(k, p2);
        let odd = residue_int(&stirling2(2 * k, k), p2) == 1;
        println!(
            "{k:>2}  {:>6b}  {:>5}  {:>5}",
            k, fib, odd
        );
        assert_eq!(fib, odd);
    }

    // for odd p the analog asks every adjacent digit pair to sum below p
    let p3 = Prime::new(3)?;
    println!("\np = 3: k, digits (little-endian), S(3k,k) mod 3 = digit product");
    for k in 1..=10u64 {
        let predicted = central_residue(k, p3);
        let actual = residue_int(&stirling2(3 * k, k), p3);
        println!(
            "{k:>2}  {:?}  {predicted} = {actual}",
            digits(k, p3).digits()
        );
        assert_eq!(predicted, actual);
    }
    Ok(())
}
