//! Drive the verification engine from code: run the quick profile over
//! the whole claim registry, then zoom in on one claim with custom
//! ranges.
//!
//! Run with: cargo run --example theorem_sweeps

use stirling_padic::oracle::{
    find_non_minzero_shift_examples, run_all, run_sweep, ClaimId, Profile, SweepSpec,
};
use stirling_padic::padic::Prime;

fn main() -> stirling_padic::Result<()> {
    // every claim, small ranges
    for report in run_all(Profile::Quick)? {
        println!("{}", report.log_line());
    }

    // one claim, custom ranges: deeper powers for the central family
    let mut spec = SweepSpec::for_profile(ClaimId::T2_4, Profile::Quick);
    spec.ranges.k_max = 200;
    spec.primes = vec![2, 3];
    let report = run_sweep(&spec)?;
    println!("\ncustom T2.4 sweep: {}", report.log_line());
    println!("  {}", report.description);

    // the diagonal shift law holds even where the successor stops being
    // a minimum zero case; list the small examples
    let examples = find_non_minzero_shift_examples(Prime::new(2)?, 16);
    println!("\nmin-zero (n,k) whose successor is not min zero, n <= 16:");
    println!("  {examples:?}");
    Ok(())
}
