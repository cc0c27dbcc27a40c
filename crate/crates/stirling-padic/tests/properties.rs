//! Property-based invariants for the digit arithmetic, the valuation
//! machinery, exact series, and the classification layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use stirling_padic::bernoulli::{bernoulli_numbers, bernoulli_poly};
use stirling_padic::minzero::{classify_first, classify_second, lower_bound_second};
use stirling_padic::padic::{
    anton_epsilon, carry_count, digit_sum, digits, lucas_residue, nu, nu_binomial, nu_factorial,
    nu_int, residue_int, val_unit, val_unit_int, Prime,
};
use stirling_padic::series::SeriesPoly;
use stirling_padic::stirling::{stirling1, stirling2};

fn small_prime() -> impl Strategy<Value = Prime> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(11)]
        .prop_map(|p| Prime::new(p).unwrap())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-3000i64..3000, 1i64..300)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #[test]
    fn digits_reconstruct(n in 0u64..1_000_000, p in small_prime()) {
        let dv = digits(n, p);
        prop_assert_eq!(dv.value(), n);
        prop_assert!(dv.digits().iter().all(|&d| d < p.get()));
        prop_assert!(dv.digits().last().map_or(n == 0, |&d| d != 0));
        prop_assert_eq!(dv.sum(), digit_sum(n, p));
    }

    #[test]
    fn digit_sum_congruence(n in 0u64..1_000_000, p in small_prime()) {
        // p-1 | n - sigma(n), and multiplying by p preserves the sum
        let sigma = digit_sum(n, p);
        prop_assert_eq!((n as i64 - sigma as i64).rem_euclid(p.get() as i64 - 1), 0);
        prop_assert_eq!(digit_sum(n * p.get(), p), sigma);
    }

    #[test]
    fn factorial_valuation_formula(n in 0u64..800, p in small_prime()) {
        // digit-sum formula vs the sum of the valuations of 1..=n
        let direct: u64 = (1..=n)
            .map(|i| {
                let mut v = 0u64;
                let mut m = i;
                while m % p.get() == 0 {
                    v += 1;
                    m /= p.get();
                }
                v
            })
            .sum();
        prop_assert_eq!(nu_factorial(n, p), direct);
    }

    #[test]
    fn binomial_valuation_is_carry_count(n in 0u64..3000, frac in 0.0f64..=1.0, p in small_prime()) {
        let m = (n as f64 * frac) as u64;
        prop_assert_eq!(nu_binomial(n, m, p).unwrap(), carry_count(m, n - m, p));
    }

    #[test]
    fn val_unit_reconstructs(q in rational(), p in small_prime()) {
        let vu = val_unit(&q, p);
        if q.is_zero() {
            prop_assert!(vu.valuation.is_infinite());
            prop_assert!(vu.unit.is_none());
        } else {
            let v = vu.valuation.finite().unwrap();
            let unit = vu.unit.clone().unwrap();
            let pow = BigInt::from(p.get()).pow(v.unsigned_abs() as u32);
            let scale = if v >= 0 {
                BigRational::from_integer(pow)
            } else {
                BigRational::new(BigInt::one(), pow)
            };
            prop_assert_eq!(&unit * scale, q);
            prop_assert_eq!(nu(&unit, p).unwrap(), 0);
            let res = vu.unit_residue.unwrap();
            prop_assert!(res >= 1 && res < p.get());
        }
    }

    #[test]
    fn valuation_is_additive(a in rational(), b in rational(), p in small_prime()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(nu(&prod, p).unwrap(), nu(&a, p).unwrap() + nu(&b, p).unwrap());
        // unit parts multiply mod p
        let ra = val_unit(&a, p).unit_residue.unwrap();
        let rb = val_unit(&b, p).unit_residue.unwrap();
        let rp = val_unit(&prod, p).unit_residue.unwrap();
        prop_assert_eq!(rp, ra * rb % p.get());
    }

    #[test]
    fn dominant_term_wins(a in rational(), b in rational(), p in small_prime()) {
        // nu(a) < nu(b) forces nu(a+b) = nu(a) and eps(a+b) = eps(a) mod p
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assume!(nu(&a, p).unwrap() < nu(&b, p).unwrap());
        let sum = &a + &b;
        prop_assert_eq!(nu(&sum, p).unwrap(), nu(&a, p).unwrap());
        prop_assert_eq!(
            val_unit(&sum, p).unit_residue,
            val_unit(&a, p).unit_residue
        );
    }

    #[test]
    fn lucas_and_anton_match_exact(n in 0u64..400, frac in 0.0f64..=1.0, p in small_prime()) {
        let m = (n as f64 * frac) as u64;
        let binom = stirling_padic::padic::binomial(n, m);
        prop_assert_eq!(lucas_residue(n, m, p).unwrap(), residue_int(&binom, p));
        let vu = val_unit_int(&binom, p);
        let e = vu.valuation.finite().unwrap() as u64;
        let eps = vu.unit_residue.unwrap();
        let signed = if e % 2 == 0 { eps } else { (p.get() - eps) % p.get() };
        prop_assert_eq!(anton_epsilon(n, m, p).unwrap(), signed);
    }

    #[test]
    fn series_product_associative(
        a in proptest::collection::vec(-20i64..20, 1..6),
        b in proptest::collection::vec(-20i64..20, 1..6),
        c in proptest::collection::vec(-20i64..20, 1..6),
    ) {
        let poly = |v: &[i64]| {
            SeriesPoly::from_coeffs(
                v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect(),
            )
        };
        let (a, b, c) = (poly(&a), poly(&b), poly(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn series_reciprocal_inverts(
        mut coeffs in proptest::collection::vec((-9i64..=9, 1i64..=9), 2..7),
    ) {
        coeffs[0].0 = 1; // nonzero constant term
        let series = SeriesPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        );
        let order = series.truncation_order();
        let recip = series.recip_trunc(order).unwrap();
        prop_assert_eq!(series.mul_trunc(&recip, order), SeriesPoly::one(order));
    }

    #[test]
    fn second_kind_recurrence_consistency(n in 1u64..80, frac in 0.0f64..=1.0) {
        let k = 1 + ((n - 1) as f64 * frac) as u64;
        // S(n+1,k+1) = S(n,k) + (k+1) S(n,k+1)
        prop_assert_eq!(
            stirling2(n + 1, k + 1),
            stirling2(n, k) + BigInt::from(k + 1) * stirling2(n, k + 1)
        );
        // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
        prop_assert_eq!(
            stirling1(n, k),
            stirling1(n - 1, k - 1) - BigInt::from(n - 1) * stirling1(n - 1, k)
        );
        // sign pattern of the first kind
        let s = stirling1(n, k);
        if !s.is_zero() {
            prop_assert_eq!(s.is_negative(), (n - k) % 2 == 1);
        }
    }

    #[test]
    fn classification_is_sound(n in 1u64..120, frac in 0.0f64..=1.0, p in small_prime()) {
        let k = 1 + ((n - 1) as f64 * frac) as u64;
        // witnessing validates predictions internally and must never fail
        let second = classify_second(n, k, p, true).unwrap();
        prop_assert_eq!(second.is_min_zero, second.predicted_valuation.is_some());
        if let Some(v) = second.predicted_valuation {
            prop_assert!(v >= lower_bound_second(n, k, p).unwrap());
        }
        let first = classify_first(n, k, p, true).unwrap();
        if first.is_min_zero {
            // the first-kind window constraint k <= n < kp
            prop_assert!(n < k * p.get());
        }
    }

    #[test]
    fn bound_is_sound_for_random_pairs(n in 1u64..200, frac in 0.0f64..=1.0, p in small_prime()) {
        let k = 1 + ((n - 1) as f64 * frac) as u64;
        let bound = lower_bound_second(n, k, p).unwrap();
        let v = nu_int(&stirling2(n, k), p).unwrap();
        prop_assert!(v >= bound, "nu = {}, bound = {}", v, bound);
    }
}

#[test]
fn bernoulli_polynomials_are_monic_of_full_degree() {
    // for every n <= 40 and |l| <= 40: B_n^(l)(x) is monic of degree n
    // with constant term B_n^(l). Checked against one batched expansion
    // per order; bernoulli_poly itself is exercised on a diagonal.
    for l in -40i64..=40 {
        let numbers = bernoulli_numbers(l, 40);
        for n in 0..=40u64 {
            let mut coeffs = vec![BigRational::zero(); n as usize + 1];
            for (i, b) in numbers.iter().take(n as usize + 1).enumerate() {
                let c = BigRational::from_integer(stirling_padic::padic::binomial(n, i as u64));
                coeffs[n as usize - i] = c * b;
            }
            let poly = SeriesPoly::from_coeffs(coeffs);
            assert_eq!(poly.degree(), Some(n as usize), "n={n} l={l}");
            assert!(poly.is_monic(), "n={n} l={l}");
            assert_eq!(poly.coeff(0), numbers[n as usize], "n={n} l={l}");
        }
        let n = l.unsigned_abs().min(40);
        assert_eq!(
            bernoulli_poly(n, l).coeff(0),
            numbers[n as usize],
            "constant term at n={n} l={l}"
        );
    }
}
