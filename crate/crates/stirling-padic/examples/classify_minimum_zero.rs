//! Minimum-zero classification: a digit-level criterion decides whether
//! a Stirling number's valuation attains its lower bound, and in that
//! case the valuation and unit residue are predicted exactly.
//!
//! Run with: cargo run --example classify_minimum_zero

use stirling_padic::minzero::{
    classify_first, classify_second, dewannemacker_second, invariance_second, max_pole_classify,
    shift_first, shift_second, single_digit_first,
};
use stirling_padic::padic::Prime;

fn main() -> stirling_padic::Result<()> {
    let p2 = Prime::new(2)?;

    // S(5,3) = 25: no base-2 carry in (n+r) choose r, so the bound is
    // attained; witnessing checks the prediction against the exact value
    let rep = classify_second(5, 3, p2, true)?;
    println!(
        "S(5,3): min zero = {}, predicted nu = {:?}, witnessed nu = {:?}",
        rep.is_min_zero, rep.predicted_valuation, rep.witnessed_valuation
    );

    // S(6,4) = 65 is odd but its bound is -1, so it is NOT a minimum zero
    let rep = classify_second(6, 4, p2, true)?;
    println!(
        "S(6,4): min zero = {} (criterion binomial residue {:?})",
        rep.is_min_zero, rep.binomial_test
    );

    // the single-digit family S(a*p^h, k) is always minimum zero
    let (v, res) = dewannemacker_second(1, 5, 13, p2)?;
    println!("S(32,13): nu_2 = {v}, eps residue = {res}");

    // minimum-zero classification is equivalent to a maximum pole of the
    // connected higher-order Bernoulli number
    let mp = max_pole_classify(2, -3, p2)?;
    println!(
        "B_2^(-3): max pole = {}, congruence residue = {:?}",
        mp.is_max_pole, mp.congruence_residue
    );

    // laws that transport minimum-zero data around the triangle:
    // common bottom segments, diagonal shifts on both kinds
    let shifted = invariance_second(4, 2, 1, p2)?;
    println!(
        "S(4,2) -> S(5,3): still min zero = {}, nu = {:?}",
        shifted.is_min_zero, shifted.predicted_valuation
    );
    let (v, res) = shift_second(4, 3, p2)?;
    println!("S(4,3) -> S(5,4): common nu_2 = {v}, residue = {res}");

    // first kind: the window k <= n < kp is necessary
    let p3 = Prime::new(3)?;
    let rep = classify_first(7, 3, p3, true)?;
    println!(
        "s(7,3) at p=3: min zero = {}, witnessed nu = {:?}",
        rep.is_min_zero, rep.witnessed_valuation
    );
    let (v, res) = single_digit_first(1, 2, 6, p2)?;
    println!("s(6,4): nu_2 = {v}, eps residue = {res}");
    let (v, _) = shift_first(6, 4, p2)?;
    println!("s(6,4) -> s(5,3): common nu_2 = {v}");
    Ok(())
}
