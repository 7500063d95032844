//! Randomized properties, each checked against a second computation that
//! shares no code with the routine under test.

use mtlab_core::arith::{self, FactorBudget, FactoredInt};
use mtlab_core::quadfield::{self, QuadForm};
use mtlab_core::trinomial::{IrreducibilityVerdict, Trinomial};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn naive_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Class number formula for `D < −4`: `h = −(1/|D|) Σ_{a<|D|} χ_D(a)·a`.
fn analytic_h_imaginary(d: i64) -> i64 {
    let m = -d;
    let s: i64 = (1..m).map(|a| arith::kronecker_i64(d, a) as i64 * a).sum();
    -s / m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kronecker_matches_euler_criterion(a in -10_000i64..10_000, k in 0usize..200) {
        let p = (3u64..).filter(|&n| naive_prime(n)).nth(k).unwrap();
        let r = a.rem_euclid(p as i64) as u64;
        let euler = match pow_mod(r, (p - 1) / 2, p) {
            0 => 0,
            1 => 1,
            _ => -1,
        };
        prop_assert_eq!(arith::kronecker(&BigInt::from(a), &BigInt::from(p)).unwrap(), euler);
        prop_assert_eq!(arith::kronecker_i64(a, p as i64), euler);
    }

    #[test]
    fn factorization_multiplies_back(n in 2u64..u64::MAX) {
        let f = arith::factorize(&BigInt::from(n), &FactorBudget::default()).unwrap();
        prop_assert!(f.is_complete());
        prop_assert_eq!(f.product(), BigInt::from(n));
        for p in f.primes() {
            let p = u64::try_from(p).unwrap();
            prop_assert!(arith::is_prime_u64(p));
            if p < 1 << 20 {
                prop_assert!(naive_prime(p));
            }
        }
    }

    #[test]
    fn products_merge_exponents(x in 2u64..1_000_000, y in 2u64..1_000_000, e in 1u32..4) {
        let budget = FactorBudget::default();
        let fx = arith::factorize(&BigInt::from(x), &budget).unwrap();
        let fy = arith::factorize(&BigInt::from(y), &budget).unwrap();
        let merged = FactoredInt::product_of(&[(&fx, e), (&fy, 1)]);
        let expected = BigInt::from(x).pow(e) * y;
        prop_assert_eq!(merged.value(), &expected);
        prop_assert!(merged.is_complete());
        prop_assert_eq!(merged.product(), expected.clone());
        let direct = arith::factorize(&expected, &budget).unwrap();
        prop_assert_eq!(merged.factors(), direct.factors());
    }

    #[test]
    fn swan_matches_resultant(n in 3u32..9, a in -1000i64..1000, b in -1000i64..1000) {
        prop_assume!(b != 0);
        let t = Trinomial::new(n, a, b).unwrap();
        prop_assert_eq!(t.swan_discriminant(), t.resultant_discriminant().unwrap());
    }

    #[test]
    fn reducible_verdicts_carry_roots(n in 3u32..8, a in -50i64..50, b in -50i64..50) {
        prop_assume!(b != 0);
        let t = Trinomial::new(n, a, b).unwrap();
        let primes = t.default_trial_primes(25);
        match t.irreducibility(&primes, &FactorBudget::default()) {
            IrreducibilityVerdict::Reducible(r) => prop_assert!(t.eval(&r).is_zero()),
            IrreducibilityVerdict::Irreducible(_) => {
                for r in -60i64..=60 {
                    prop_assert!(!t.eval(&BigInt::from(r)).is_zero());
                }
            }
            IrreducibilityVerdict::Unknown => {}
        }
    }

    #[test]
    fn composition_is_a_group_law(k in 1i64..5000, i in 0usize..64, j in 0usize..64, l in 0usize..64) {
        let d = -4 * k - 3;
        prop_assume!(quadfield::is_fundamental_discriminant(d));
        let forms = quadfield::reduced_forms_imaginary(d).unwrap();
        let (f, g, h) = (forms[i % forms.len()], forms[j % forms.len()], forms[l % forms.len()]);
        let e = QuadForm::principal(d).unwrap();
        let c = |x, y| quadfield::compose(x, y, d).unwrap();
        prop_assert_eq!(c(f, e), f);
        prop_assert_eq!(c(f, g), c(g, f));
        prop_assert_eq!(c(c(f, g), h), c(f, c(g, h)));
        prop_assert_eq!(quadfield::reduce_definite(f.inverse(), d).map(|x| c(f, x)).unwrap(), e);
    }
}

#[test]
fn imaginary_class_numbers_match_the_formula() {
    for d in (-3000i64..-4).filter(|&d| quadfield::is_fundamental_discriminant(d)) {
        let h = quadfield::class_number_imaginary(d).unwrap().h as i64;
        assert_eq!(h, analytic_h_imaginary(d), "D={d}");
    }
}

#[test]
fn fundamental_units_solve_pell() {
    for d in (5i64..2000).filter(|&d| quadfield::is_fundamental_discriminant(d)) {
        let (x, y) = quadfield::fundamental_unit(d).unwrap();
        let norm: BigInt = (&x * &x - BigInt::from(d) * &y * &y) / 4;
        assert!(norm.abs().is_one(), "D={d}: x={x} y={y}");
        let expected = quadfield::class_number_real(d).unwrap().unit_norm.unwrap();
        assert_eq!(norm, BigInt::from(expected), "D={d}");
    }
}

#[test]
fn squarefree_examples() {
    let budget = FactorBudget::default();
    let cases: [(i64, bool); 5] = [(30, true), (-2186, true), (12, false), (15626, true), (1 - 3i64.pow(13), true)];
    for (n, sf) in cases {
        let status = arith::squarefree_status(&BigInt::from(n), &budget).unwrap();
        assert_eq!(status.is_squarefree(), sf, "{n}");
    }
}
