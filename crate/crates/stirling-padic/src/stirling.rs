//! Stirling numbers of both kinds: memoized triangles for random access,
//! streaming row iterators for large exhaustive sweeps, and modular row
//! iterators for sweeps that only need values mod p^m.
//!
//! Second kind: S(n+1,k+1) = S(n,k) + (k+1) S(n,k+1), S(0,0) = 1.
//! First kind (signed): s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k), and the
//! sign of s(n,k) is (-1)^(n-k).

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::SeriesPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StirlingKind {
    First,
    Second,
}

impl std::fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StirlingKind::First => write!(f, "first"),
            StirlingKind::Second => write!(f, "second"),
        }
    }
}

/// A triangular table of Stirling numbers, `rows[n][k]` for 0 <= k <= n.
#[derive(Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTriangle {
            kind,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn rows_computed(&self) -> usize {
        self.rows.len()
    }

    /// Extends the table so rows 0..=n are present. Rows are append-only;
    /// existing rows are never touched.
    pub fn ensure_rows(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 always present");
            self.rows.push(next_row(self.kind, self.rows.len() - 1, prev));
        }
    }

    /// `rows[n][k]`; zero for k > n. None when row n has not been computed.
    pub fn value(&self, n: usize, k: usize) -> Option<BigInt> {
        if k > n {
            return Some(BigInt::zero());
        }
        self.rows.get(n).map(|row| row[k].clone())
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(|r| r.as_slice())
    }
}

/// Row n+1 from row n (`prev` has length n+1).
fn next_row(kind: StirlingKind, n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(prev.len() + 1);
    row.push(BigInt::zero());
    for k in 1..=prev.len() {
        let diag = &prev[k - 1];
        let up = if k < prev.len() { &prev[k] } else { &BigInt::ZERO };
        let entry = match kind {
            StirlingKind::Second => diag + up * BigInt::from(k),
            StirlingKind::First => diag - up * BigInt::from(n),
        };
        row.push(entry);
    }
    row
}

// Shared memoized triangles. Rows are computed once under the write lock
// and thereafter read-only, so concurrent readers always see a consistent
// append-only table.
static MEMO_LIMIT: AtomicUsize = AtomicUsize::new(512);
static SECOND: LazyLock<RwLock<StirlingTriangle>> =
    LazyLock::new(|| RwLock::new(StirlingTriangle::new(StirlingKind::Second)));
static FIRST: LazyLock<RwLock<StirlingTriangle>> =
    LazyLock::new(|| RwLock::new(StirlingTriangle::new(StirlingKind::First)));

/// Highest row index the shared triangles will memoize (default 512).
/// Lookups beyond the limit are computed by streaming and not retained.
pub fn memo_limit() -> usize {
    MEMO_LIMIT.load(Ordering::Relaxed)
}

pub fn set_memo_limit(n: usize) {
    MEMO_LIMIT.store(n, Ordering::Relaxed);
}

fn lookup(table: &RwLock<StirlingTriangle>, kind: StirlingKind, n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if n > memo_limit() {
        let row = streamed_row(kind, n);
        return row[k].clone();
    }
    if let Some(v) = table.read().expect("triangle lock").value(n, k) {
        return v;
    }
    let mut guard = table.write().expect("triangle lock");
    guard.ensure_rows(n);
    guard.value(n, k).expect("row just ensured")
}

fn lookup_row(table: &RwLock<StirlingTriangle>, kind: StirlingKind, n: u64) -> Vec<BigInt> {
    let n = n as usize;
    if n > memo_limit() {
        return streamed_row(kind, n);
    }
    if let Some(row) = table.read().expect("triangle lock").row(n) {
        return row.to_vec();
    }
    let mut guard = table.write().expect("triangle lock");
    guard.ensure_rows(n);
    guard.row(n).expect("row just ensured").to_vec()
}

fn streamed_row(kind: StirlingKind, n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        row = next_row(kind, m, &row);
    }
    row
}

/// S(n,k), the number of partitions of an n-set into k nonempty blocks.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    lookup(&SECOND, StirlingKind::Second, n, k)
}

/// Signed s(n,k), the coefficient of x^k in x(x-1)...(x-(n-1)).
pub fn stirling1(n: u64, k: u64) -> BigInt {
    lookup(&FIRST, StirlingKind::First, n, k)
}

/// Full row n of the second-kind triangle: S(n,0..=n).
pub fn stirling2_row(n: u64) -> Vec<BigInt> {
    lookup_row(&SECOND, StirlingKind::Second, n)
}

/// Full row n of the signed first-kind triangle: s(n,0..=n).
pub fn stirling1_row(n: u64) -> Vec<BigInt> {
    lookup_row(&FIRST, StirlingKind::First, n)
}

/// Streaming iterator over triangle rows starting at row 0, independent
/// of the shared memo; O(row length) memory.
pub struct RowIter {
    kind: StirlingKind,
    n: usize,
    row: Option<Vec<BigInt>>,
}

impl Iterator for RowIter {
    type Item = Vec<BigInt>;

    fn next(&mut self) -> Option<Vec<BigInt>> {
        let current = self.row.take()?;
        self.row = Some(next_row(self.kind, self.n, &current));
        self.n += 1;
        Some(current)
    }
}

pub fn rows(kind: StirlingKind) -> RowIter {
    RowIter {
        kind,
        n: 0,
        row: Some(vec![BigInt::one()]),
    }
}

/// Streaming rows reduced mod `modulus`. For the first kind the entries
/// are |s(n,k)| mod modulus (the recurrence for the unsigned values is
/// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)); apply the sign (-1)^(n-k)
/// separately if needed.
///
/// `modulus * (n+1)` must fit in u64 for every row visited; callers pick
/// the modulus accordingly (it is asserted per row).
pub struct ModRowIter {
    kind: StirlingKind,
    modulus: u64,
    n: usize,
    row: Option<Vec<u64>>,
}

impl Iterator for ModRowIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.row.take()?;
        assert!(
            self.modulus.checked_mul(self.n as u64 + 2).is_some(),
            "modulus too large for row {}",
            self.n + 1
        );
        let mult = self.n as u64 % self.modulus;
        let mut next = Vec::with_capacity(current.len() + 1);
        next.push(0u64);
        for k in 1..=current.len() {
            let diag = current[k - 1];
            let up = if k < current.len() { current[k] } else { 0 };
            let entry = match self.kind {
                StirlingKind::Second => (diag + up * k as u64) % self.modulus,
                // the multiplier (n mod modulus) can be as large as the
                // modulus itself, so widen to u128 here
                StirlingKind::First => {
                    ((diag as u128 + up as u128 * mult as u128) % self.modulus as u128) as u64
                }
            };
            next.push(entry);
        }
        self.row = Some(next);
        self.n += 1;
        Some(current)
    }
}

pub fn rows_mod(kind: StirlingKind, modulus: u64) -> ModRowIter {
    assert!(modulus > 0);
    ModRowIter {
        kind,
        modulus,
        n: 0,
        row: Some(vec![1 % modulus]),
    }
}

/// The falling factorial x(x-1)...(x-(n-1)) as a polynomial; its
/// coefficient of x^k is s(n,k).
pub fn falling_factorial(n: u64) -> SeriesPoly {
    let mut poly = SeriesPoly::one(1);
    for i in 0..n {
        // multiply by (x - i)
        let factor = SeriesPoly::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(-(i as i64))),
            BigRational::one(),
        ]);
        poly = poly.mul(&factor);
    }
    poly
}
