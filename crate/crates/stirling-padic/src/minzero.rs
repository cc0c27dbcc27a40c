//! Minimum-zero / maximum-pole classification and the exact valuation and
//! unit-residue laws that come with it.
//!
//! A Stirling number is a *minimum zero case* when its p-adic valuation
//! attains the digit-sum lower bound: nu(S(n,k)) = (sigma(k)-sigma(n))/(p-1)
//! for the second kind, nu(s(n,k)) = (sigma(k-1)-sigma(n-1))/(p-1) for the
//! first. Both reduce to a single binomial-coefficient criterion mod p,
//! so classification is pure digit arithmetic; witnessing against the
//! exact triangles is opt-in. A higher-order Bernoulli number has a
//! *maximum pole* when nu(B_n^(l)) = -sigma(n)/(p-1), the theoretical
//! minimum, and the same binomial criterion decides that too.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bernoulli;
use crate::padic::{
    binomial_residue_signed, digit_sum, digits, epsilon_factorial_residue, lucas_residue,
    mod_inverse, mul_mod, nu, residue_rational, val_unit_int, Prime,
};
use crate::stirling::{self, StirlingKind};
use crate::{Error, Result};

/// Outcome of a minimum-zero query, with every intermediate witness:
/// r = (n-k)/(p-1) when it is an integer, the criterion binomial's residue
/// mod p, the predicted valuation and unit residue (present exactly when
/// the case is a minimum zero), and the exact valuation/residue when
/// witnessing was requested.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ClassificationReport {
    pub kind: StirlingKind,
    pub n: u64,
    pub k: u64,
    pub p: u64,
    pub r: Option<u64>,
    pub binomial_test: Option<u64>,
    pub is_min_zero: bool,
    pub predicted_valuation: Option<i64>,
    pub predicted_unit_residue: Option<u64>,
    pub witnessed_valuation: Option<i64>,
    pub witnessed_unit_residue: Option<u64>,
}

/// (-1)^exp mod p, in [0, p-1]. For p = 2 this is always 1.
fn sign_residue(exp: u64, p: Prime) -> u64 {
    if exp % 2 == 0 {
        1
    } else {
        p.get() - 1
    }
}

/// eps_p(n!/k!) mod p.
fn eps_factorial_ratio(n: u64, k: u64, p: Prime) -> u64 {
    mul_mod(
        epsilon_factorial_residue(n, p),
        mod_inverse(epsilon_factorial_residue(k, p), p),
        p.get(),
    )
}

/// Lower bound for nu_p(S(n,k)) whenever S(n,k) != 0:
/// ceil((sigma(k) - sigma(n)) / (p-1)).
pub fn lower_bound_second(n: u64, k: u64, p: Prime) -> Result<i64> {
    if k > n {
        return Err(Error::Domain(format!(
            "lower_bound_second requires n >= k, got n={n}, k={k}"
        )));
    }
    let num = digit_sum(k, p) as i64 - digit_sum(n, p) as i64;
    Ok(num.div_euclid(p.get() as i64 - 1) + i64::from(num.rem_euclid(p.get() as i64 - 1) != 0))
}

/// Lower bound for nu_p(s(n,k)) whenever s(n,k) != 0:
/// ceil((sigma(k-1) - sigma(n-1)) / (p-1)).
pub fn lower_bound_first(n: u64, k: u64, p: Prime) -> Result<i64> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "lower_bound_first requires n >= k >= 1, got n={n}, k={k}"
        )));
    }
    let num = digit_sum(k - 1, p) as i64 - digit_sum(n - 1, p) as i64;
    Ok(num.div_euclid(p.get() as i64 - 1) + i64::from(num.rem_euclid(p.get() as i64 - 1) != 0))
}

/// Classifies S(n,k): minimum zero iff r = (n-k)/(p-1) is an integer and
/// p does not divide C(n+r, r). In the minimum zero case the valuation is
/// (sigma(k)-sigma(n))/(p-1) and
/// eps(S(n,k)) = (-1)^r eps(n!/k!) C(n+r,r) mod p.
/// With `witness` the exact S-values are attached and the predictions are
/// checked against them.
pub fn classify_second(n: u64, k: u64, p: Prime, witness: bool) -> Result<ClassificationReport> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "classify_second requires n >= k >= 1, got n={n}, k={k}"
        )));
    }
    let pm1 = p.get() - 1;
    let r = ((n - k) % pm1 == 0).then(|| (n - k) / pm1);
    if let Some(r) = r {
        if n.checked_add(r).is_none() {
            return Err(Error::Domain(format!("n + r overflows for n={n}, k={k}")));
        }
    }
    let binomial_test = r.map(|r| lucas_residue(n + r, r, p).expect("r <= n+r"));
    let is_min_zero = binomial_test.is_some_and(|t| t != 0);

    let (predicted_valuation, predicted_unit_residue) = if is_min_zero {
        let r = r.unwrap();
        let v = (digit_sum(k, p) as i64 - digit_sum(n, p) as i64) / (pm1 as i64);
        debug_assert!(v >= 0, "minimum zero case implies the bound is attainable");
        let res = mul_mod(
            sign_residue(r, p),
            mul_mod(eps_factorial_ratio(n, k, p), binomial_test.unwrap(), p.get()),
            p.get(),
        );
        (Some(v), Some(res))
    } else {
        (None, None)
    };

    let mut report = ClassificationReport {
        kind: StirlingKind::Second,
        n,
        k,
        p: p.get(),
        r,
        binomial_test,
        is_min_zero,
        predicted_valuation,
        predicted_unit_residue,
        witnessed_valuation: None,
        witnessed_unit_residue: None,
    };
    if witness {
        let vu = val_unit_int(&stirling::stirling2(n, k), p);
        report.witnessed_valuation = vu.valuation.finite();
        report.witnessed_unit_residue = vu.unit_residue;
        check_witness(&report)?;
    }
    Ok(report)
}

/// Classifies s(n,k): minimum zero iff r = (n-k)/(p-1) is an integer,
/// r <= k-1, and p does not divide C(k-1, r) (r > k-1 counts as a failed
/// criterion, not an error). In the minimum zero case the valuation is
/// (sigma(k-1)-sigma(n-1))/(p-1) and
/// eps(s(n,k)) = eps((n-1)!/(k-1)!) C(k-1,r) mod p.
pub fn classify_first(n: u64, k: u64, p: Prime, witness: bool) -> Result<ClassificationReport> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "classify_first requires n >= k >= 1, got n={n}, k={k}"
        )));
    }
    let pm1 = p.get() - 1;
    let r = ((n - k) % pm1 == 0).then(|| (n - k) / pm1);
    let binomial_test = r.map(|r| {
        if r > k - 1 {
            0
        } else {
            lucas_residue(k - 1, r, p).expect("r <= k-1")
        }
    });
    let is_min_zero = binomial_test.is_some_and(|t| t != 0);

    let (predicted_valuation, predicted_unit_residue) = if is_min_zero {
        let v = (digit_sum(k - 1, p) as i64 - digit_sum(n - 1, p) as i64) / (pm1 as i64);
        debug_assert!(v >= 0);
        let res = mul_mod(
            eps_factorial_ratio(n - 1, k - 1, p),
            binomial_test.unwrap(),
            p.get(),
        );
        (Some(v), Some(res))
    } else {
        (None, None)
    };

    let mut report = ClassificationReport {
        kind: StirlingKind::First,
        n,
        k,
        p: p.get(),
        r,
        binomial_test,
        is_min_zero,
        predicted_valuation,
        predicted_unit_residue,
        witnessed_valuation: None,
        witnessed_unit_residue: None,
    };
    if witness {
        let vu = val_unit_int(&stirling::stirling1(n, k), p);
        report.witnessed_valuation = vu.valuation.finite();
        report.witnessed_unit_residue = vu.unit_residue;
        check_witness(&report)?;
    }
    Ok(report)
}

/// Predicted and witnessed data must agree: equality in the minimum zero
/// case, and in the non-minimum-zero case the witnessed valuation must
/// not attain the bound (the criterion is an if-and-only-if).
fn check_witness(report: &ClassificationReport) -> Result<()> {
    if report.is_min_zero {
        if report.predicted_valuation != report.witnessed_valuation
            || report.predicted_unit_residue != report.witnessed_unit_residue
        {
            return Err(Error::Inconsistency(format!(
                "{} kind (n,k,p)=({},{},{}): predicted {:?}/{:?}, witnessed {:?}/{:?}",
                report.kind,
                report.n,
                report.k,
                report.p,
                report.predicted_valuation,
                report.predicted_unit_residue,
                report.witnessed_valuation,
                report.witnessed_unit_residue,
            )));
        }
    } else if report.r.is_some() {
        let p = Prime::new(report.p).expect("validated");
        let pm1 = p.get() as i64 - 1;
        let bound = match report.kind {
            StirlingKind::Second => {
                (digit_sum(report.k, p) as i64 - digit_sum(report.n, p) as i64) / pm1
            }
            StirlingKind::First => {
                (digit_sum(report.k - 1, p) as i64 - digit_sum(report.n - 1, p) as i64) / pm1
            }
        };
        if report.witnessed_valuation == Some(bound) {
            return Err(Error::Inconsistency(format!(
                "{} kind (n,k,p)=({},{},{}): criterion failed but the valuation attains the bound {bound}",
                report.kind, report.n, report.k, report.p,
            )));
        }
    }
    Ok(())
}

/// Exact valuation and unit residue of S(a*p^h, k) for a single-digit
/// leading coefficient: always a minimum zero case, with
/// nu = (sigma(k)-a)/(p-1) and eps = (-1)^(r+a*h) a!/eps(k!) mod p.
pub fn dewannemacker_second(a: u64, h: u32, k: u64, p: Prime) -> Result<(i64, u64)> {
    if a == 0 || a >= p.get() {
        return Err(Error::Domain(format!(
            "dewannemacker_second requires 1 <= a <= p-1, got a={a}, p={p}"
        )));
    }
    let n = a
        .checked_mul(
            p.get()
                .checked_pow(h)
                .ok_or_else(|| Error::Domain(format!("p^h overflows: p={p}, h={h}")))?,
        )
        .ok_or_else(|| Error::Domain(format!("a*p^h overflows: a={a}, p={p}, h={h}")))?;
    if k == 0 || k > n {
        return Err(Error::Domain(format!(
            "dewannemacker_second requires 1 <= k <= a*p^h, got k={k}, n={n}"
        )));
    }
    if (n - k) % (p.get() - 1) != 0 {
        return Err(Error::Domain(format!(
            "dewannemacker_second requires (p-1) | n-k, got n={n}, k={k}, p={p}"
        )));
    }
    let r = (n - k) / (p.get() - 1);
    let valuation = (digit_sum(k, p) as i64 - a as i64) / (p.get() as i64 - 1);
    let mut residue = mul_mod(
        crate::padic::factorial_residue_small(a, p),
        mod_inverse(epsilon_factorial_residue(k, p), p),
        p.get(),
    );
    if (r + a * h as u64) % 2 == 1 {
        residue = (p.get() - residue) % p.get();
    }

    // this family is always classified minimum zero, with matching
    // prediction
    let report = classify_second(n, k, p, false)?;
    if !report.is_min_zero
        || report.predicted_valuation != Some(valuation)
        || report.predicted_unit_residue != Some(residue)
    {
        return Err(Error::Inconsistency(format!(
            "single-digit classification disagrees at (a,h,k,p)=({a},{h},{k},{p})"
        )));
    }
    Ok((valuation, residue))
}

/// Shift a minimum-zero S(n,k) by a common bottom segment b: for
/// 0 <= b < min(p^nu(k), p^nu(n)), S(n+b, k+b) is again a minimum zero
/// case with the same valuation and a congruent unit residue.
pub fn invariance_second(n: u64, k: u64, b: u64, p: Prime) -> Result<ClassificationReport> {
    let base = classify_second(n, k, p, false)?;
    if !base.is_min_zero {
        return Err(Error::Domain(format!(
            "invariance_second requires a minimum zero case, but S({n},{k}) is not one at p={p}"
        )));
    }
    let bound = p_pow_nu(k, p).min(p_pow_nu(n, p));
    if !below(b, bound) {
        return Err(Error::Domain(format!(
            "invariance_second requires b < min(p^nu(k), p^nu(n)), got b={b}"
        )));
    }
    let shifted = classify_second(n + b, k + b, p, false)?;
    if !shifted.is_min_zero
        || shifted.predicted_valuation != base.predicted_valuation
        || shifted.predicted_unit_residue != base.predicted_unit_residue
    {
        return Err(Error::Inconsistency(format!(
            "bottom-segment invariance failed from ({n},{k}) to ({},{}) at p={p}",
            n + b,
            k + b
        )));
    }
    Ok(shifted)
}

/// p^nu_p(x); None stands for "larger than any u64" (overflow).
fn p_pow_nu(x: u64, p: Prime) -> Option<u64> {
    debug_assert!(x > 0);
    let mut v = 0u32;
    let mut m = x;
    while m % p.get() == 0 {
        v += 1;
        m /= p.get();
    }
    p.get().checked_pow(v)
}

fn below(b: u64, bound: Option<u64>) -> bool {
    bound.is_none_or(|limit| b < limit)
}

/// k is p-Fibbinary: every two consecutive base-p digits sum to at most
/// p-1. Decides whether p divides the central Stirling number S(pk,k).
pub fn central_fibbinary(k: u64, p: Prime) -> bool {
    digits(k, p).digits().windows(2).all(|w| w[0] + w[1] < p.get())
}

/// S(pk,k) mod p as the digit product prod_i C(a_i + a_(i+1), a_i) over
/// the base-p digits a_i of k.
pub fn central_residue(k: u64, p: Prime) -> u64 {
    let d = digits(k, p);
    let mut acc = 1 % p.get();
    for i in 0..d.len() {
        let (a, b) = (d.digit(i), d.digit(i + 1));
        acc = mul_mod(acc, lucas_residue(a + b, a, p).expect("a <= a+b"), p.get());
    }
    acc
}

/// For a minimum-zero S(n,k), the diagonal neighbor S(n+1,k+1) keeps the
/// valuation and the unit residue mod p (it need not itself be a minimum
/// zero case). Returns the common (valuation, residue), verified against
/// the exact triangle on both ends.
pub fn shift_second(n: u64, k: u64, p: Prime) -> Result<(i64, u64)> {
    let base = classify_second(n, k, p, true)?;
    if !base.is_min_zero {
        return Err(Error::Domain(format!(
            "shift_second requires a minimum zero case, but S({n},{k}) is not one at p={p}"
        )));
    }
    let val = base.witnessed_valuation.expect("witnessed");
    let res = base.witnessed_unit_residue.expect("witnessed");
    let vu = val_unit_int(&stirling::stirling2(n + 1, k + 1), p);
    if vu.valuation.finite() != Some(val) || vu.unit_residue != Some(res) {
        return Err(Error::Inconsistency(format!(
            "diagonal shift failed from S({n},{k}) to S({},{}) at p={p}",
            n + 1,
            k + 1
        )));
    }
    Ok((val, res))
}

/// Exact valuation and unit residue of s(n, a*p^h) for single-digit
/// k = a*p^h, k <= n < kp, (p-1) | n-k (always a minimum zero case):
/// nu = (a-1-sigma(n-1))/(p-1) + h and
/// eps = (-1)^(a*h + r - r_h) eps((n-1)!)/(a-1)! C(a-1, r_h) mod p,
/// where r_h is the h-th base-p digit of r. Verified against the exact
/// value.
pub fn single_digit_first(a: u64, h: u32, n: u64, p: Prime) -> Result<(i64, u64)> {
    if a == 0 || a >= p.get() {
        return Err(Error::Domain(format!(
            "single_digit_first requires 1 <= a <= p-1, got a={a}, p={p}"
        )));
    }
    let k = a
        .checked_mul(
            p.get()
                .checked_pow(h)
                .ok_or_else(|| Error::Domain(format!("p^h overflows: p={p}, h={h}")))?,
        )
        .ok_or_else(|| Error::Domain(format!("a*p^h overflows: a={a}, p={p}, h={h}")))?;
    let window_end = k
        .checked_mul(p.get())
        .ok_or_else(|| Error::Domain(format!("k*p overflows: k={k}, p={p}")))?;
    if n < k || n >= window_end {
        return Err(Error::Domain(format!(
            "single_digit_first requires k <= n < k*p, got k={k}, n={n}, p={p}"
        )));
    }
    if (n - k) % (p.get() - 1) != 0 {
        return Err(Error::Domain(format!(
            "single_digit_first requires (p-1) | n-k, got n={n}, k={k}, p={p}"
        )));
    }
    let r = (n - k) / (p.get() - 1);
    let r_h = digits(r, p).digit(h as usize);
    let valuation =
        (a as i64 - 1 - digit_sum(n - 1, p) as i64) / (p.get() as i64 - 1) + h as i64;
    let mut residue = mul_mod(
        mul_mod(
            epsilon_factorial_residue(n - 1, p),
            mod_inverse(crate::padic::factorial_residue_small(a - 1, p), p),
            p.get(),
        ),
        lucas_residue(a - 1, r_h, p).expect("r_h <= a-1 in the window"),
        p.get(),
    );
    if (a * h as u64 + r - r_h) % 2 == 1 {
        residue = (p.get() - residue) % p.get();
    }

    let vu = val_unit_int(&stirling::stirling1(n, k), p);
    if vu.valuation.finite() != Some(valuation) || vu.unit_residue != Some(residue) {
        return Err(Error::Inconsistency(format!(
            "single-digit first-kind prediction failed at (a,h,n,p)=({a},{h},{n},{p}): \
             predicted ({valuation},{residue}), got ({},{:?})",
            vu.valuation, vu.unit_residue
        )));
    }
    Ok((valuation, residue))
}

/// Shift a minimum-zero s(n,k) by a common top segment t with
/// p^nu(t) > n (t = 0 is the identity): s(t+n, t+k) is again a minimum
/// zero case with the same valuation and a congruent unit residue.
pub fn invariance_first(n: u64, k: u64, t: u64, p: Prime) -> Result<ClassificationReport> {
    let base = classify_first(n, k, p, false)?;
    if !base.is_min_zero {
        return Err(Error::Domain(format!(
            "invariance_first requires a minimum zero case, but s({n},{k}) is not one at p={p}"
        )));
    }
    if t == 0 {
        return Ok(base);
    }
    if p_pow_nu(t, p).is_some_and(|b| b <= n) {
        return Err(Error::Domain(format!(
            "invariance_first requires p^nu(t) > n, got t={t}, n={n}, p={p}"
        )));
    }
    if t.checked_add(n).is_none() {
        return Err(Error::Domain(format!("t + n overflows for t={t}, n={n}")));
    }
    let shifted = classify_first(t + n, t + k, p, false)?;
    if !shifted.is_min_zero
        || shifted.predicted_valuation != base.predicted_valuation
        || shifted.predicted_unit_residue != base.predicted_unit_residue
    {
        return Err(Error::Inconsistency(format!(
            "top-segment invariance failed from ({n},{k}) to ({},{}) at p={p}",
            t + n,
            t + k
        )));
    }
    Ok(shifted)
}

/// For a minimum-zero s(n,k) with n,k >= 2, the diagonal predecessor
/// s(n-1,k-1) keeps the valuation and the unit residue mod p. Returns the
/// common (valuation, residue), verified against the exact triangle.
pub fn shift_first(n: u64, k: u64, p: Prime) -> Result<(i64, u64)> {
    if n < 2 || k < 2 {
        return Err(Error::Domain(format!(
            "shift_first requires n, k >= 2, got n={n}, k={k}"
        )));
    }
    let base = classify_first(n, k, p, true)?;
    if !base.is_min_zero {
        return Err(Error::Domain(format!(
            "shift_first requires a minimum zero case, but s({n},{k}) is not one at p={p}"
        )));
    }
    let val = base.witnessed_valuation.expect("witnessed");
    let res = base.witnessed_unit_residue.expect("witnessed");
    let vu = val_unit_int(&stirling::stirling1(n - 1, k - 1), p);
    if vu.valuation.finite() != Some(val) || vu.unit_residue != Some(res) {
        return Err(Error::Inconsistency(format!(
            "diagonal shift failed from s({n},{k}) to s({},{}) at p={p}",
            n - 1,
            k - 1
        )));
    }
    Ok((val, res))
}

/// Maximum-pole query for B_n^(l).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MaxPoleReport {
    pub n: u64,
    pub l: i64,
    pub p: u64,
    pub is_max_pole: bool,
    pub r: Option<u64>,
    /// Residue mod p of p^r B_n^(l) / n!, present in the maximum pole
    /// case; equals (-1)^n C(l-n-1, r) = (-1)^r C(n-l+r, r) mod p.
    pub congruence_residue: Option<u64>,
}

/// B_n^(l) has a maximum pole iff r = n/(p-1) is an integer and p does
/// not divide C(l-n-1, r). In that case nu_p(B_n^(l)) = -sigma(n)/(p-1)
/// and p^r B_n^(l)/n! = (-1)^r C(n-l+r, r) mod p; both facts are checked
/// against the exact value before returning.
pub fn max_pole_classify(n: u64, l: i64, p: Prime) -> Result<MaxPoleReport> {
    let pm1 = p.get() - 1;
    let r = (n % pm1 == 0).then_some(n / pm1);
    let mut report = MaxPoleReport {
        n,
        l,
        p: p.get(),
        is_max_pole: false,
        r,
        congruence_residue: None,
    };
    let Some(r) = r else {
        return Ok(report);
    };
    let top = checked_top(l, n)?;
    let criterion = binomial_residue_signed(top, r, p);
    if criterion == 0 {
        return Ok(report);
    }
    report.is_max_pole = true;

    let b = bernoulli::exact_bernoulli(n, l);
    let expect_val = -((digit_sum(n, p) / pm1) as i64);
    let actual_val = nu(&b, p).map_err(|_| {
        Error::Inconsistency(format!("B_{n}^({l}) vanished in a maximum pole case"))
    })?;
    if actual_val != expect_val {
        return Err(Error::Inconsistency(format!(
            "maximum pole valuation of B_{n}^({l}) at p={p}: expected {expect_val}, got {actual_val}"
        )));
    }
    let scaled = scaled_bernoulli(&b, n, r, p)?;
    let expected = mul_mod(sign_residue(n, p), criterion, p.get());
    if scaled != expected {
        return Err(Error::Inconsistency(format!(
            "maximum pole congruence of B_{n}^({l}) at p={p}: expected {expected}, got {scaled}"
        )));
    }
    report.congruence_residue = Some(scaled);
    Ok(report)
}

/// Residue mod p of p^r B / n!, which is a p-adic integer.
fn scaled_bernoulli(b: &BigRational, n: u64, r: u64, p: Prime) -> Result<u64> {
    let q = b * BigRational::new(
        BigInt::from(p.get()).pow(r as u32),
        crate::padic::factorial(n),
    );
    residue_rational(&q, p)
}

fn checked_top(l: i64, n: u64) -> Result<i64> {
    i64::try_from(l as i128 - n as i128 - 1)
        .map_err(|_| Error::Domain(format!("l - n - 1 out of range for l={l}, n={n}")))
}

/// For (p-1) | n with r = n/(p-1):
/// (-1)^n p^r B_n^(l) / n! = (-1)^r C(n+r-l, r) mod p. Returns the
/// right-hand side after checking it against the exact left-hand side.
pub fn proposition_congruence(n: u64, l: i64, p: Prime) -> Result<u64> {
    let pm1 = p.get() - 1;
    if n % pm1 != 0 {
        return Err(Error::Domain(format!(
            "proposition_congruence requires (p-1) | n, got n={n}, p={p}"
        )));
    }
    let r = n / pm1;
    let top = i64::try_from(n as i128 + r as i128 - l as i128)
        .map_err(|_| Error::Domain(format!("n + r - l out of range for n={n}, l={l}")))?;
    let predicted = mul_mod(sign_residue(r, p), binomial_residue_signed(top, r, p), p.get());

    let b = bernoulli::exact_bernoulli(n, l);
    let actual = if num_traits::Zero::is_zero(&b) {
        0
    } else {
        let scaled = scaled_bernoulli(&b, n, r, p)?;
        mul_mod(sign_residue(n, p), scaled, p.get())
    };
    if actual != predicted {
        return Err(Error::Inconsistency(format!(
            "order congruence for B_{n}^({l}) at p={p}: predicted {predicted}, got {actual}"
        )));
    }
    Ok(predicted)
}

/// Digit-shift scaling for the second kind: S(n,k) is a minimum zero case
/// iff S(np,kp) is, and then both share the valuation and the unit
/// residue mod p. Returns both witnessed classifications.
pub fn scaling_second(n: u64, k: u64, p: Prime) -> Result<(ClassificationReport, ClassificationReport)> {
    let np = scaled_index(n, p)?;
    let base = classify_second(n, k, p, true)?;
    let scaled = classify_second(np, k * p.get(), p, true)?;
    if base.is_min_zero != scaled.is_min_zero {
        return Err(Error::Inconsistency(format!(
            "scaling changed the minimum zero verdict from ({n},{k}) to ({np},{}) at p={p}",
            k * p.get()
        )));
    }
    if base.is_min_zero
        && (base.witnessed_valuation != scaled.witnessed_valuation
            || base.witnessed_unit_residue != scaled.witnessed_unit_residue)
    {
        return Err(Error::Inconsistency(format!(
            "scaling broke valuation/residue equality from ({n},{k}) at p={p}"
        )));
    }
    Ok((base, scaled))
}

fn scaled_index(n: u64, p: Prime) -> Result<u64> {
    n.checked_mul(p.get())
        .ok_or_else(|| Error::Domain(format!("n*p overflows for n={n}, p={p}")))
}

/// Digit-shift scaling for the first kind: the minimum zero verdicts of
/// s(n,k) and s(np,kp) agree, and in the minimum zero case the unit
/// residues are congruent mod p (the valuations differ in general).
pub fn scaling_first(n: u64, k: u64, p: Prime) -> Result<(ClassificationReport, ClassificationReport)> {
    let np = scaled_index(n, p)?;
    let base = classify_first(n, k, p, true)?;
    let scaled = classify_first(np, k * p.get(), p, true)?;
    if base.is_min_zero != scaled.is_min_zero {
        return Err(Error::Inconsistency(format!(
            "scaling changed the minimum zero verdict from ({n},{k}) to ({np},{}) at p={p}",
            k * p.get()
        )));
    }
    if base.is_min_zero && base.witnessed_unit_residue != scaled.witnessed_unit_residue {
        return Err(Error::Inconsistency(format!(
            "scaling broke residue congruence from ({n},{k}) at p={p}"
        )));
    }
    Ok((base, scaled))
}
