//! Exact Stirling triangles of both kinds, their streaming/modular row
//! iterators, and valuation tables.
//!
//! Run with: cargo run --example stirling_triangles

use stirling_padic::output::{valuation_table, valuation_table_csv};
use stirling_padic::padic::Prime;
use stirling_padic::stirling::{
    falling_factorial, rows_mod, stirling1, stirling2, stirling2_row, StirlingKind,
};

fn main() -> stirling_padic::Result<()> {
    // random access is memoized
    println!("S(9,5)   = {}", stirling2(9, 5));
    println!("s(9,5)   = {}", stirling1(9, 5));
    println!("S(40,20) = {}", stirling2(40, 20));

    // whole rows for sweep-style consumers
    let row = stirling2_row(8);
    let rendered: Vec<String> = row.iter().map(|v| v.to_string()).collect();
    println!("row 8 of the second kind: {}", rendered.join(" "));

    // the falling factorial x(x-1)...(x-(n-1)) expands into first-kind
    // coefficients
    println!("(x)_5 = {}", falling_factorial(5));

    // modular rows scale to heights where exact values would be huge:
    // 2-adic valuations of S(4096, k) without ever materializing them
    let n = 4096u64;
    let row = rows_mod(StirlingKind::Second, 1 << 20)
        .nth(n as usize)
        .unwrap();
    let p2 = Prime::new(2)?;
    let sample: Vec<String> = (1..=6)
        .map(|k| {
            let mut x = row[k];
            let mut v = 0;
            while x % 2 == 0 {
                v += 1;
                x /= 2;
            }
            format!("nu_2(S({n},{k})) = {v}")
        })
        .collect();
    println!("{}", sample.join(", "));

    // valuation tables serialize to CSV (empty field = infinite)
    let table = valuation_table(StirlingKind::Second, 6, p2);
    print!("{}", valuation_table_csv(&table));
    Ok(())
}
