//! Independent cross-checks: each pits a production routine against a
//! second computation of the same quantity.

use std::collections::BTreeSet;

use mtlab_core::quadfield::{self, ANALYTIC_CUTOFF, ANALYTIC_MARGIN};
use mtlab_core::trinomial::{Trinomial, INDEX_ORACLE_MAX_PRIME};
use mtlab_core::FactorBudget;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Mismatches are kept in full; the report prints the first few.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub name: &'static str,
    pub cases: u64,
    pub mismatches: Vec<String>,
    /// Cases the oracle could not decide (never counted as agreement).
    pub undecided: u64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.undecided == 0
    }

    fn merge(name: &'static str, parts: Vec<(u64, Vec<String>, u64)>) -> Self {
        let mut r = OracleReport { name, ..Default::default() };
        for (c, m, u) in parts {
            r.cases += c;
            r.mismatches.extend(m);
            r.undecided += u;
        }
        r
    }
}

/// Swan's closed form against `(−1)^{N(N−1)/2} Res(f, f′)` for every
/// `N ∈ degrees` and `A, B ∈ [−bound, bound]`, `B ≠ 0`.
pub fn discriminant_oracle(degrees: (u32, u32), bound: i64) -> OracleReport {
    let parts = (degrees.0..=degrees.1)
        .into_par_iter()
        .flat_map_iter(|n| (-bound..=bound).map(move |a| (n, a)))
        .map(|(n, a)| {
            let mut cases = 0;
            let mut bad = Vec::new();
            for b in (-bound..=bound).filter(|&b| b != 0) {
                let t = Trinomial::new(n, BigInt::from(a), BigInt::from(b)).expect("valid");
                let swan = t.swan_discriminant();
                match t.resultant_discriminant() {
                    Ok(res) if res == swan => {}
                    Ok(res) => bad.push(format!("{t}: swan {swan} resultant {res}")),
                    Err(e) => bad.push(format!("{t}: {e}")),
                }
                cases += 1;
            }
            (cases, bad, 0)
        })
        .collect();
    OracleReport::merge("discriminant", parts)
}

/// For every irreducible `x³ + Ax + B` with `|A|, |B| ≤ bound` and every
/// prime `q ≤ max_prime` dividing `Δ`: the JKS test passes iff the
/// exhaustive index search finds no integral `g(θ)/q`.
pub fn jks_oracle(bound: i64, max_prime: u64) -> OracleReport {
    let primes: Vec<u64> = (2..=max_prime).filter(|&q| mtlab_core::arith::is_prime_u64(q)).collect();
    let budget = FactorBudget::default();
    let parts = (-bound..=bound)
        .into_par_iter()
        .map(|a| {
            let mut cases = 0;
            let mut bad = Vec::new();
            for b in (-bound..=bound).filter(|&b| b != 0) {
                let t = Trinomial::new(3, BigInt::from(a), BigInt::from(b)).expect("valid");
                if !t.irreducibility(&[], &budget).is_irreducible() {
                    continue;
                }
                let disc = t.swan_discriminant();
                for &q in &primes {
                    if !(&disc % q).eq(&BigInt::from(0)) {
                        continue;
                    }
                    cases += 1;
                    let pass = t.jks_prime_test(&BigInt::from(q)).map(|o| o.passed());
                    let divides = t.index_oracle_cubic(q, max_prime);
                    match (pass, divides) {
                        (Ok(p), Ok(d)) if p != d => {}
                        (Ok(p), Ok(d)) => bad.push(format!("{t} q={q}: jks pass={p}, index oracle divides={d}")),
                        (p, d) => bad.push(format!("{t} q={q}: {p:?} {d:?}")),
                    }
                }
            }
            (cases, bad, 0)
        })
        .collect();
    OracleReport::merge("jks-vs-index", parts)
}

pub fn fundamental_real(range: std::ops::RangeInclusive<i64>) -> Vec<i64> {
    range.filter(|&d| quadfield::is_fundamental_discriminant(d)).collect()
}

/// `count` distinct fundamental discriminants drawn uniformly from `range`.
pub fn sample_fundamental(range: std::ops::RangeInclusive<i64>, count: usize, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = BTreeSet::new();
    while chosen.len() < count {
        let d = rng.gen_range(range.clone());
        if quadfield::is_fundamental_discriminant(d) {
            chosen.insert(d);
        }
    }
    chosen.into_iter().collect()
}

/// Cycle counting against the analytic class number formula, plus the
/// stored narrow/unit-norm relation.
pub fn real_class_number_oracle(discs: &[i64]) -> OracleReport {
    let parts = discs
        .par_iter()
        .map(|&d| {
            let cycles = quadfield::class_number_real(d);
            let analytic = quadfield::class_number_real_analytic(d, ANALYTIC_CUTOFF, ANALYTIC_MARGIN);
            match (cycles, analytic) {
                (Ok(c), Ok(Some(a))) => {
                    let mut bad = Vec::new();
                    if c.h != a.h {
                        bad.push(format!("D={d}: cycles h={} analytic h={}", c.h, a.h));
                    }
                    let norm = c.unit_norm.unwrap_or(0);
                    let narrow = c.narrow_h.unwrap_or(0);
                    let expected = if norm == -1 { c.h } else { 2 * c.h };
                    if narrow != expected || (norm == 1 && narrow % 2 != 0) {
                        bad.push(format!("D={d}: narrow h {narrow} inconsistent with h={} norm={norm}", c.h));
                    }
                    (1, bad, 0)
                }
                (Ok(_), Ok(None)) => (1, Vec::new(), 1),
                (c, a) => (1, vec![format!("D={d}: {c:?} {a:?}")], 0),
            }
        })
        .collect();
    OracleReport::merge("real-class-number", parts)
}

/// Every reduced form of every fundamental `D ∈ (−bound, 0)` has an order
/// (by repeated composition) dividing the form count.
pub fn form_order_oracle(bound: i64) -> OracleReport {
    let discs: Vec<i64> = (1..bound)
        .map(|x| -x)
        .filter(|&d| quadfield::is_fundamental_discriminant(d))
        .collect();
    let parts = discs
        .par_iter()
        .map(|&d| {
            let forms = match quadfield::reduced_forms_imaginary(d) {
                Ok(f) => f,
                Err(e) => return (1, vec![format!("D={d}: {e}")], 0),
            };
            let h = forms.len() as u64;
            let mut bad = Vec::new();
            for f in &forms {
                match quadfield::form_order(*f, d, h) {
                    Ok(Some(k)) if h % k == 0 => {}
                    other => bad.push(format!("D={d} form {f}: order {other:?}, h={h}")),
                }
            }
            (forms.len() as u64, bad, 0)
        })
        .collect();
    OracleReport::merge("form-order", parts)
}

/// Defaults used by `verify oracles`.
pub const DISC_DEGREES: (u32, u32) = (3, 9);
pub const DISC_COEFF_BOUND: i64 = 30;
pub const JKS_COEFF_BOUND: i64 = 20;
pub const REAL_EXHAUSTIVE_MAX: i64 = 10_000;
pub const REAL_SAMPLE_RANGE: (i64, i64) = (10_001, 1_000_000);
pub const REAL_SAMPLES: usize = 100;
pub const FORM_ORDER_BOUND: i64 = 100_000;

pub fn all_oracles(seed: u64) -> Vec<OracleReport> {
    let mut real = fundamental_real(2..=REAL_EXHAUSTIVE_MAX);
    real.extend(sample_fundamental(REAL_SAMPLE_RANGE.0..=REAL_SAMPLE_RANGE.1, REAL_SAMPLES, seed));
    vec![
        discriminant_oracle(DISC_DEGREES, DISC_COEFF_BOUND),
        jks_oracle(JKS_COEFF_BOUND, INDEX_ORACLE_MAX_PRIME),
        real_class_number_oracle(&real),
        form_order_oracle(FORM_ORDER_BOUND),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_oracles_agree() {
        assert!(discriminant_oracle((3, 4), 3).passed());
        let r = jks_oracle(4, 7);
        assert!(r.passed() && r.cases > 0, "{r:?}");
        assert!(real_class_number_oracle(&fundamental_real(2..=300)).passed());
        assert!(form_order_oracle(500).passed());
    }

    #[test]
    fn sampling_is_seeded() {
        let a = sample_fundamental(10_001..=1_000_000, 5, 7);
        assert_eq!(a, sample_fundamental(10_001..=1_000_000, 5, 7));
        assert!(a.iter().all(|&d| quadfield::is_fundamental_discriminant(d)));
    }
}
