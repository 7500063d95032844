//! Arbitrary-precision integer utilities.
//!
//! Everything that needs to decide "is this squarefree?" ends up in
//! [`factorize`]. The pipeline is trial division up to
//! [`FactorBudget::trial_bound`], then Pollard rho with Brent's cycle
//! detection. Cofactors that fit in a machine word are always factored
//! completely; larger ones consume the iteration budget and are left as an
//! unfactored `cofactor` when it runs out.
//!
//! Randomized steps (rho starting points, Miller-Rabin bases above 64 bits)
//! draw from a ChaCha stream seeded by [`FactorBudget::seed`], so identical
//! inputs and budgets give identical results.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("square root of negative integer {0}")]
    NegativeSqrt(BigInt),
    #[error("operation undefined for zero")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("kronecker symbol (0|0) is undefined")]
    KroneckerZeroZero,
}

/// Effort limits for [`factorize`] and [`squarefree_status`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBudget {
    /// Trial division runs over all primes up to this bound.
    pub trial_bound: u64,
    /// Total Pollard rho iterations spent on cofactors wider than 64 bits.
    pub rho_iterations: u64,
    /// Optional wall-clock cap on the rho phase.
    pub time_limit: Option<Duration>,
    /// Seed for every randomized step.
    pub seed: u64,
    /// Random Miller-Rabin rounds for candidates above 64 bits.
    pub primality_rounds: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: 1_000_000,
            rho_iterations: 1 << 24,
            time_limit: None,
            seed: 0x6d74_6c61_6273_6565,
            primality_rounds: 64,
        }
    }
}

/// An integer together with its (possibly partial) prime factorization.
///
/// `|value| = cofactor · ∏ p^e`; the factorization is complete iff
/// `cofactor == 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInt {
    value: BigInt,
    factors: Vec<(BigInt, u32)>,
    cofactor: BigInt,
}

impl FactoredInt {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Prime factors in strictly increasing order.
    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn cofactor(&self) -> &BigInt {
        &self.cofactor
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    #[cfg(test)]
    pub(crate) fn from_parts(value: BigInt, factors: Vec<(BigInt, u32)>, cofactor: BigInt) -> Self {
        FactoredInt { value, factors, cofactor }
    }

    /// The factorization of `∏ vᵢ^eᵢ` from factorizations of the `vᵢ`.
    pub fn product_of(parts: &[(&FactoredInt, u32)]) -> FactoredInt {
        let mut value = BigInt::one();
        let mut cofactor = BigInt::one();
        let mut merged: Vec<(BigInt, u32)> = Vec::new();
        for &(part, e) in parts {
            value *= part.value.pow(e);
            cofactor *= part.cofactor.pow(e);
            for (p, k) in &part.factors {
                match merged.iter_mut().find(|(q, _)| q == p) {
                    Some(entry) => entry.1 += k * e,
                    None if k * e > 0 => merged.push((p.clone(), k * e)),
                    None => {}
                }
            }
        }
        merged.sort();
        FactoredInt {
            value,
            factors: merged,
            cofactor,
        }
    }

    /// Multiplies the listed prime powers and the cofactor back together.
    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(self.cofactor.clone(), |acc, (p, e)| acc * p.pow(*e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquarefreeStatus {
    Squarefree,
    /// A prime `p` with `p² | n`.
    NotSquarefree(BigInt),
    Unknown(String),
}

impl SquarefreeStatus {
    pub fn is_squarefree(&self) -> bool {
        matches!(self, SquarefreeStatus::Squarefree)
    }
}

/// `(⌊√n⌋, ⌊√n⌋² == n)`.
pub fn int_sqrt(n: &BigInt) -> Result<(BigInt, bool), ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSqrt(n.clone()));
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok((root, exact))
}

/// Exponent of the prime `q` in `n`.
pub fn valuation(n: &BigInt, q: &BigInt) -> Result<u32, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    if !is_prime(q) {
        return Err(ArithError::NotPrime(q.clone()));
    }
    let mut m = n.abs();
    let mut e = 0;
    loop {
        let (quot, rem) = m.div_rem(q);
        if !rem.is_zero() {
            return Ok(e);
        }
        m = quot;
        e += 1;
    }
}

// (-1)^((n^2-1)/8) indexed by n mod 8
const KRONECKER_TWO: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];

/// Kronecker symbol `(a|n)`.
pub fn kronecker(a: &BigInt, n: &BigInt) -> Result<i32, ArithError> {
    if a.is_zero() && n.is_zero() {
        return Err(ArithError::KroneckerZeroZero);
    }
    if let (Some(a), Some(n)) = (a.to_i64(), n.to_i64()) {
        return Ok(kronecker_i64(a, n));
    }
    let mut a = a.clone();
    let mut b = n.clone();
    if b.is_zero() {
        return Ok(if a.abs().is_one() { 1 } else { 0 });
    }
    if a.is_even() && b.is_even() {
        return Ok(0);
    }
    let v = b.trailing_zeros().unwrap_or(0);
    b >>= v;
    let mut k = if v % 2 == 0 { 1 } else { KRONECKER_TWO[low_bits(&a, 8)] };
    if b.is_negative() {
        b = -b;
        if a.is_negative() {
            k = -k;
        }
    }
    loop {
        if a.is_zero() {
            return Ok(if b.is_one() { k } else { 0 });
        }
        let v = a.trailing_zeros().unwrap_or(0);
        a >>= v;
        if v % 2 == 1 {
            k *= KRONECKER_TWO[low_bits(&b, 8)];
        }
        if low_bits(&a, 4) & low_bits(&b, 4) & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b.mod_floor(&r);
        b = r;
    }
}

// two's-complement low bits, as `n & (m - 1)` would give for machine ints
fn low_bits(n: &BigInt, m: u32) -> usize {
    n.mod_floor(&BigInt::from(m)).to_usize().unwrap()
}

/// Kronecker symbol on machine integers; `(0|0)` is reported as 0.
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    let mut a = a as i128;
    let mut b = n as i128;
    if b == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a & 1 == 0 && b & 1 == 0 {
        return 0;
    }
    let v = b.trailing_zeros();
    b >>= v;
    let mut k = if v % 2 == 0 { 1 } else { KRONECKER_TWO[(a & 7) as usize] };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b == 1 { k } else { 0 };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= KRONECKER_TWO[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b.rem_euclid(r);
        b = r;
    }
}

/// Deterministic below 2^64, Miller-Rabin with 64 seeded random bases
/// above.
pub fn is_prime(n: &BigInt) -> bool {
    let budget = FactorBudget::default();
    is_prime_with(n, budget.primality_rounds, budget.seed)
}

pub fn is_prime_with(n: &BigInt, rounds: u32, seed: u64) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    match n.to_u64() {
        Some(m) => is_prime_u64(m),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            is_probable_prime_big(n.magnitude(), rounds, &mut rng)
        }
    }
}

// ---------------------------------------------------------------------------
// machine-word arithmetic

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// These twelve bases are a deterministic witness set for all n < 3.3e24.
const MR_BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES_U64 {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES_U64 {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_probable_prime_big(n: &BigUint, rounds: u32, rng: &mut ChaCha8Rng) -> bool {
    for &p in small_primes().iter().take(168) {
        if (n % p).is_zero() {
            return *n == BigUint::from(p);
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let two = BigUint::from(2u32);
    let span = n - 3u32;
    let witness_ok = |a: &BigUint| {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };
    if !witness_ok(&two) {
        return false;
    }
    for _ in 0..rounds {
        let a = random_below(&span, rng) + &two;
        if !witness_ok(&a) {
            return false;
        }
    }
    true
}

fn random_below(bound: &BigUint, rng: &mut ChaCha8Rng) -> BigUint {
    let digits = bound.to_u64_digits().len() + 1;
    let words: Vec<u64> = (0..digits).map(|_| rng.gen()).collect();
    let mut bytes = Vec::with_capacity(words.len() * 8);
    for w in words {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    BigUint::from_bytes_le(&bytes) % bound
}

const SIEVE_LIMIT: u64 = 1_000_000;

/// Primes up to 10^6, computed once.
pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(SIEVE_LIMIT))
}

fn sieve(limit: u64) -> Vec<u32> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One Brent rho attempt on a machine word with polynomial `x² + c`.
fn brent_rho_u64(n: u64, c: u64, x0: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let step = |v: u64| {
        let s = mul_mod(v, v, n) as u128 + c as u128;
        (s % n as u128) as u64
    };
    let (mut y, mut r, mut q) = (x0 % n, 1u64, 1u64);
    let (mut x, mut ys) = (0u64, 0u64);
    let mut g = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = step(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn split_u64(n: u64) -> u64 {
    let r = n.sqrt();
    if r * r == n {
        return r;
    }
    for c in 1.. {
        if let Some(d) = brent_rho_u64(n, c, 2 + c) {
            return d;
        }
    }
    unreachable!()
}

/// Complete factorization of a machine word, primes increasing.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut out: BTreeMap<u64, u32> = BTreeMap::new();
    let mut m = n;
    if m <= 1 {
        return Vec::new();
    }
    for &p in small_primes().iter().take(172) {
        let p = p as u64;
        if p * p > m {
            break;
        }
        while m % p == 0 {
            m /= p;
            *out.entry(p).or_default() += 1;
        }
    }
    let mut stack = vec![m];
    while let Some(c) = stack.pop() {
        if c == 1 {
            continue;
        }
        if is_prime_u64(c) {
            *out.entry(c).or_default() += 1;
            continue;
        }
        let d = split_u64(c);
        stack.push(d);
        stack.push(c / d);
    }
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// arbitrary precision

struct Factorizer<'a> {
    budget: &'a FactorBudget,
    rng: ChaCha8Rng,
    deadline: Option<Instant>,
    rho_left: u64,
    stop_on_square: bool,
    found: BTreeMap<BigUint, u32>,
    unfactored: BigUint,
    square_witness: Option<BigUint>,
    exhausted: Option<String>,
}

impl<'a> Factorizer<'a> {
    fn new(budget: &'a FactorBudget, stop_on_square: bool) -> Self {
        Factorizer {
            budget,
            rng: ChaCha8Rng::seed_from_u64(budget.seed),
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            rho_left: budget.rho_iterations,
            stop_on_square,
            found: BTreeMap::new(),
            unfactored: BigUint::one(),
            square_witness: None,
            exhausted: None,
        }
    }

    fn record(&mut self, p: BigUint, e: u32) {
        let slot = self.found.entry(p.clone()).or_default();
        *slot += e;
        if *slot >= 2 && self.square_witness.is_none() {
            self.square_witness = Some(p);
        }
    }

    fn done_early(&self) -> bool {
        self.stop_on_square && self.square_witness.is_some()
    }

    fn run(&mut self, n: BigUint) {
        let mut m = n;
        let trial_done = self.trial_divide(&mut m);
        if self.done_early() || m.is_one() {
            return;
        }
        if trial_done {
            // every prime up to sqrt(m) has been tried
            self.record(m, 1);
            return;
        }
        let mut stack = vec![m];
        while let Some(c) = stack.pop() {
            if self.done_early() {
                return;
            }
            if c.is_one() {
                continue;
            }
            if let Some(w) = c.to_u64() {
                for (p, e) in factor_u64(w) {
                    self.record(BigUint::from(p), e);
                }
                continue;
            }
            if is_probable_prime_big(&c, self.budget.primality_rounds, &mut self.rng) {
                self.record(c, 1);
                continue;
            }
            let r = c.sqrt();
            if &r * &r == c {
                stack.push(r.clone());
                stack.push(r);
                continue;
            }
            match self.rho_big(&c) {
                Some(d) => {
                    let other = &c / &d;
                    stack.push(d);
                    stack.push(other);
                }
                None => {
                    self.unfactored *= c;
                }
            }
        }
    }

    /// Returns true when trial division proved the remainder prime or 1.
    fn trial_divide(&mut self, m: &mut BigUint) -> bool {
        let bound = self.budget.trial_bound;
        let table;
        let primes: &[u32] = if bound <= SIEVE_LIMIT {
            let all = small_primes();
            let end = all.partition_point(|&p| (p as u64) <= bound);
            &all[..end]
        } else {
            table = sieve(bound);
            &table
        };
        for &p in primes {
            if self.done_early() {
                return false;
            }
            let p = p as u64;
            if let Some(w) = m.to_u64() {
                let mut w = w;
                if p.checked_mul(p).is_none_or(|sq| sq > w) {
                    *m = BigUint::from(w);
                    return true;
                }
                let mut e = 0;
                while w % p == 0 {
                    w /= p;
                    e += 1;
                }
                if e > 0 {
                    self.record(BigUint::from(p), e);
                }
                *m = BigUint::from(w);
            } else {
                let mut e = 0;
                while (&*m % p).is_zero() {
                    *m /= p;
                    e += 1;
                }
                if e > 0 {
                    self.record(BigUint::from(p), e);
                }
            }
        }
        false
    }

    fn out_of_budget(&mut self) -> bool {
        if self.exhausted.is_some() {
            return true;
        }
        if self.rho_left == 0 {
            self.exhausted = Some(format!(
                "rho iteration budget ({}) exhausted",
                self.budget.rho_iterations
            ));
            return true;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.exhausted = Some("factorization time limit reached".into());
                return true;
            }
        }
        false
    }

    fn rho_big(&mut self, n: &BigUint) -> Option<BigUint> {
        const BATCH: u64 = 256;
        while !self.out_of_budget() {
            let c = random_below(n, &mut self.rng);
            let x0 = random_below(n, &mut self.rng);
            let step = |v: &BigUint| (v * v + &c) % n;
            let mut y = x0;
            let mut r = 1u64;
            let mut q = BigUint::one();
            let mut x = BigUint::zero();
            let mut ys = BigUint::zero();
            let mut g = BigUint::one();
            while g.is_one() {
                x = y.clone();
                for _ in 0..r {
                    y = step(&y);
                }
                self.rho_left = self.rho_left.saturating_sub(r);
                let mut k = 0;
                while k < r && g.is_one() {
                    ys = y.clone();
                    let batch = BATCH.min(r - k);
                    for _ in 0..batch {
                        y = step(&y);
                        let diff = if x > y { &x - &y } else { &y - &x };
                        q = q * diff % n;
                    }
                    g = q.gcd(n);
                    k += batch;
                    self.rho_left = self.rho_left.saturating_sub(batch);
                }
                r *= 2;
                if g.is_one() && self.out_of_budget() {
                    return None;
                }
            }
            if &g == n {
                loop {
                    ys = step(&ys);
                    let diff = if x > ys { &x - &ys } else { &ys - &x };
                    g = diff.gcd(n);
                    if !g.is_one() {
                        break;
                    }
                }
            }
            if &g != n {
                return Some(g);
            }
        }
        None
    }
}

/// Factors `n` within `budget`. Never fails for `n ≠ 0`; an exhausted
/// budget leaves a non-trivial cofactor.
pub fn factorize(n: &BigInt, budget: &FactorBudget) -> Result<FactoredInt, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    let mut f = Factorizer::new(budget, false);
    f.run(n.magnitude().clone());
    Ok(FactoredInt {
        value: n.clone(),
        factors: f
            .found
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect(),
        cofactor: BigInt::from(f.unfactored),
    })
}

/// Squarefree decision. `Squarefree` is only returned on a complete
/// factorization; a square factor ends the search immediately.
pub fn squarefree_status(
    n: &BigInt,
    budget: &FactorBudget,
) -> Result<SquarefreeStatus, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    let mut f = Factorizer::new(budget, true);
    f.run(n.magnitude().clone());
    if let Some(p) = f.square_witness {
        return Ok(SquarefreeStatus::NotSquarefree(BigInt::from(p)));
    }
    if f.unfactored.is_one() {
        Ok(SquarefreeStatus::Squarefree)
    } else {
        let why = f
            .exhausted
            .unwrap_or_else(|| "incomplete factorization".into());
        Ok(SquarefreeStatus::Unknown(format!(
            "{why}; unfactored cofactor of {} bits",
            f.unfactored.bits()
        )))
    }
}

/// Squarefree test for a factorization already at hand.
pub fn squarefree_from(f: &FactoredInt) -> SquarefreeStatus {
    if let Some((p, _)) = f.factors().iter().find(|(_, e)| *e >= 2) {
        return SquarefreeStatus::NotSquarefree(p.clone());
    }
    if f.is_complete() {
        SquarefreeStatus::Squarefree
    } else {
        SquarefreeStatus::Unknown(format!(
            "unfactored cofactor of {} bits",
            f.cofactor().bits()
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn int_sqrt_examples() {
        assert_eq!(int_sqrt(&big(0)).unwrap(), (big(0), true));
        assert_eq!(int_sqrt(&big(81)).unwrap(), (big(9), true));
        assert_eq!(int_sqrt(&big(4027)).unwrap(), (big(63), false));
        assert!(int_sqrt(&big(-1)).is_err());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&big(12), &big(2)).unwrap(), 2);
        assert_eq!(valuation(&big(6), &big(2)).unwrap(), 1);
        assert_eq!(valuation(&big(-2186), &big(2)).unwrap(), 1);
        assert_eq!(valuation(&big(0), &big(2)), Err(ArithError::Zero));
        assert!(valuation(&big(8), &big(4)).is_err());
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(&big(1), &big(7)).unwrap(), 1);
        assert_eq!(kronecker(&big(-23), &big(23)).unwrap(), 0);
        assert_eq!(kronecker(&big(-23), &big(5)).unwrap(), -1);
        assert_eq!(kronecker(&big(0), &big(0)), Err(ArithError::KroneckerZeroZero));
        // 2 mod 5 is a non-residue: squares mod 5 are {1, 4}
        let squares: Vec<i64> = (1..5).map(|x| x * x % 5).collect();
        assert!(!squares.contains(&2));
    }

    #[test]
    fn kronecker_big_path_matches_word_path() {
        let huge = BigInt::from(10).pow(30) + 7;
        for a in [-11i64, -3, 2, 5, 8, 13] {
            let direct = kronecker(&big(a), &huge).unwrap();
            // reduce a big modulus through the word path when n is odd and positive
            let a_mod = BigInt::from(a).mod_floor(&huge);
            let via = kronecker(&a_mod, &huge).unwrap();
            assert_eq!(direct, via, "a={a}");
        }
    }

    #[test]
    fn is_prime_examples() {
        assert!(is_prime(&big(1931)));
        assert!(!is_prime(&big(81)));
        assert!(is_prime(&big(2)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(-7)));
        // 2^89 - 1 is a Mersenne prime, 2^67 - 1 is not
        assert!(is_prime(&((BigInt::one() << 89) - 1)));
        assert!(!is_prime(&((BigInt::one() << 67) - 1)));
    }

    #[test]
    fn is_prime_agrees_with_trial_division_to_a_million() {
        let table = sieve(1_000_000);
        let mut idx = 0;
        for n in 0..=1_000_000u64 {
            let expected = idx < table.len() && table[idx] as u64 == n;
            if expected {
                idx += 1;
            }
            assert_eq!(is_prime_u64(n), expected, "n={n}");
        }
        for n in [0u64, 1, 2, 3, 4, 25, 91, 7919, 1_000_003] {
            let by_trial = n >= 2 && trial_division(n) == vec![(n, 1)];
            assert_eq!(is_prime_u64(n), by_trial);
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to several small bases
        for n in [2047u64, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383] {
            assert!(!is_prime_u64(n), "{n}");
        }
    }

    #[test]
    fn factorize_examples() {
        let b = FactorBudget::default();
        let f = factorize(&big(15626), &b).unwrap();
        assert_eq!(f.factors(), &[(big(2), 1), (big(13), 1), (big(601), 1)]);
        assert!(f.is_complete());
        let f = factorize(&big(-400), &b).unwrap();
        assert_eq!(f.factors(), &[(big(2), 4), (big(5), 2)]);
        assert_eq!(f.value(), &big(-400));
        let f = factorize(&big(96889010407), &b).unwrap();
        assert_eq!(f.factors(), &[(big(7), 13)]);
        assert!(factorize(&big(0), &b).is_err());
    }

    #[test]
    fn factorize_every_integer_up_to_1e5() {
        let b = FactorBudget::default();
        for n in 2..=100_000i64 {
            let f = factorize(&big(n), &b).unwrap();
            assert!(f.is_complete());
            assert_eq!(f.product(), big(n));
            let expected: Vec<(BigInt, u32)> = trial_division(n as u64)
                .into_iter()
                .map(|(p, e)| (big(p as i64), e))
                .collect();
            assert_eq!(f.factors(), expected.as_slice());
        }
    }

    #[test]
    fn factorize_wide_semiprime_with_rho() {
        // two 40-bit primes, beyond trial division and beyond a machine word
        let p = BigInt::from(1_099_511_627_791u64);
        let q = BigInt::from(1_099_511_628_401u64);
        assert!(is_prime(&p) && is_prime(&q));
        let n = &p * &q * 3 * 3;
        let f = factorize(&n, &FactorBudget::default()).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.factors(), &[(big(3), 2), (p, 1), (q, 1)]);
    }

    #[test]
    fn exhausted_budget_leaves_cofactor() {
        let p = BigInt::from(1_099_511_627_791u64);
        let q = BigInt::from(1_099_511_628_401u64);
        let n = &p * &q * 2;
        let tight = FactorBudget {
            rho_iterations: 10,
            ..FactorBudget::default()
        };
        let f = factorize(&n, &tight).unwrap();
        assert!(!f.is_complete());
        assert_eq!(f.product(), n);
        assert!(matches!(
            squarefree_status(&n, &tight).unwrap(),
            SquarefreeStatus::Unknown(_)
        ));
    }

    #[test]
    fn factorization_is_deterministic_for_a_seed() {
        let n = BigInt::from(1_099_511_627_791u64) * BigInt::from(1_000_000_007u64) * 1_000_000_009u64;
        let b = FactorBudget::default();
        assert_eq!(factorize(&n, &b).unwrap(), factorize(&n, &b).unwrap());
    }

    #[test]
    fn squarefree_examples() {
        let b = FactorBudget::default();
        assert_eq!(
            squarefree_status(&big(81), &b).unwrap(),
            SquarefreeStatus::NotSquarefree(big(3))
        );
        assert_eq!(squarefree_status(&big(-1931), &b).unwrap(), SquarefreeStatus::Squarefree);
        assert_eq!(squarefree_status(&big(-545747), &b).unwrap(), SquarefreeStatus::Squarefree);
        assert_eq!(squarefree_status(&big(1), &b).unwrap(), SquarefreeStatus::Squarefree);
        // square of a prime above the trial bound
        let p = BigInt::from(1_000_003u64);
        let n = &p * &p * 5;
        assert_eq!(squarefree_status(&n, &b).unwrap(), SquarefreeStatus::NotSquarefree(p));
    }

    #[test]
    fn factor_u64_handles_prime_squares_and_large_words() {
        assert_eq!(factor_u64(1_000_003 * 1_000_003), vec![(1_000_003, 2)]);
        assert_eq!(factor_u64(96889010406), vec![(2, 1), (3, 1), (16148168401, 1)]);
        let f = factor_u64(u64::MAX);
        assert_eq!(f.len(), 7);
        assert_eq!(f.iter().map(|&(p, e)| p.pow(e) as u128).product::<u128>(), u64::MAX as u128);
        assert!(f.iter().all(|&(p, _)| trial_division(p) == vec![(p, 1)]));
    }
}
