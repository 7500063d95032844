//! Trinomials `x^N + A·x + B`: discriminants, irreducibility, and the local
//! index test of Jakhar, Khanduja and Sangwan.
//!
//! A monic irreducible `f` with root `θ` satisfies
//! `Δ(f) = [Z_K : Z[θ]]² · Δ(K)`, so `f` is monogenic exactly when no prime
//! divisor of `Δ(f)` divides the index. For trinomials, the JKS test decides
//! "q divides the index" from `N`, `A`, `B` and `q` alone, one of four
//! conditions being selected by whether `q` divides `A` and/or `B`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{self, FactorBudget, FactoredInt};
use crate::fp_poly::{self, FpPoly};
use crate::poly::{resultant, IntPoly};

/// Largest degree accepted by [`Trinomial::resultant_discriminant`].
pub const RESULTANT_MAX_DEGREE: u32 = 12;

/// Default bound on `q` for [`Trinomial::index_oracle_cubic`].
pub const INDEX_ORACLE_MAX_PRIME: u64 = 13;

/// Number of mod-p trial primes used by [`Trinomial::default_trial_primes`].
pub const DEFAULT_TRIAL_PRIMES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrinomialError {
    #[error("degree {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("constant term is zero, x divides the polynomial")]
    ZeroConstantTerm,
    #[error("degree {degree} exceeds the supported bound {max}")]
    DegreeAboveBound { degree: u32, max: u32 },
    #[error("this operation requires degree 3, got {0}")]
    NotCubic(u32),
    #[error("the local index test requires degree at least 3, got {0}")]
    DegreeBelowThree(u32),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("{q} does not divide the discriminant {disc}")]
    PrimeNotDividingDiscriminant { q: BigInt, disc: BigInt },
    #[error("factorization is of {found}, not of the discriminant {expected}")]
    DiscriminantMismatch { found: BigInt, expected: BigInt },
    #[error("the factorization of B is incomplete")]
    IncompleteFactorization,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("prime {q} exceeds the oracle bound {bound}")]
    PrimeAboveOracleBound { q: u64, bound: u64 },
    #[error("prime {0} is too large for the F_p polynomial engine")]
    PrimeTooLarge(u64),
}

/// The polynomial `x^N + A·x + B` with `N ≥ 2` and `B ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trinomial {
    degree: u32,
    a: BigInt,
    b: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// Degree at most 3 with no integer root.
    RationalRootExhaustion,
    Eisenstein(BigInt),
    /// `p ∤ Δ(f)` and `f mod p` is irreducible.
    ModP(u64),
    /// Primes `p ∤ Δ(f)` whose factorization patterns mod `p` admit no
    /// common proper factor degree.
    DegreePattern(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(IrreducibilityCertificate),
    /// An integer root.
    Reducible(BigInt),
    Unknown,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }
}

/// Which JKS condition applies at a prime `q`, selected by `(q | A, q | B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JksCondition {
    /// `q | A`, `q | B`.
    BothDivide,
    /// `q | A`, `q ∤ B`.
    DividesAOnly,
    /// `q ∤ A`, `q | B`.
    DividesBOnly,
    /// `q ∤ AB`.
    DividesNeither,
}

impl JksCondition {
    pub fn id(self) -> u8 {
        match self {
            JksCondition::BothDivide => 1,
            JksCondition::DividesAOnly => 2,
            JksCondition::DividesBOnly => 3,
            JksCondition::DividesNeither => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JksOutcome {
    Pass(JksCondition),
    Fail(JksCondition),
}

impl JksOutcome {
    pub fn passed(self) -> bool {
        matches!(self, JksOutcome::Pass(_))
    }

    pub fn condition(self) -> JksCondition {
        match self {
            JksOutcome::Pass(c) | JksOutcome::Fail(c) => c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonogenicityVerdict {
    Monogenic,
    /// `q` divides the index; `condition` is the JKS condition that failed.
    NotMonogenic { prime: BigInt, condition: JksCondition },
    /// Carries an integer root.
    NotIrreducible(BigInt),
    Unknown(String),
}

impl MonogenicityVerdict {
    pub fn is_monogenic(&self) -> bool {
        matches!(self, MonogenicityVerdict::Monogenic)
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, MonogenicityVerdict::Unknown(_))
    }
}

/// Everything [`Trinomial::analyze`] computes on the way to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialAnalysis {
    pub discriminant: BigInt,
    /// Absent when the discriminant is zero.
    pub discriminant_factors: Option<FactoredInt>,
    pub irreducibility: IrreducibilityVerdict,
    pub verdict: MonogenicityVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicGalois {
    S3,
    C3,
}

impl Trinomial {
    pub fn new(
        degree: u32,
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
    ) -> Result<Self, TrinomialError> {
        let (a, b) = (a.into(), b.into());
        if degree < 2 {
            return Err(TrinomialError::DegreeTooSmall(degree));
        }
        if b.is_zero() {
            return Err(TrinomialError::ZeroConstantTerm);
        }
        Ok(Trinomial { degree, a, b })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        x.pow(self.degree) + &self.a * x + &self.b
    }

    fn to_poly(&self) -> IntPoly {
        let mut c = vec![BigInt::zero(); self.degree as usize + 1];
        c[0] = self.b.clone();
        c[1] += &self.a;
        c[self.degree as usize] += BigInt::one();
        IntPoly::new(c)
    }

    /// Closed form
    /// `(-1)^{N(N-1)/2} (N^N B^{N-1} - (-1)^N (N-1)^{N-1} A^N)`.
    pub fn swan_discriminant(&self) -> BigInt {
        let n = self.degree;
        let nn = BigInt::from(n);
        let first = nn.pow(n) * self.b.pow(n - 1);
        let second = BigInt::from(n - 1).pow(n - 1) * self.a.pow(n);
        let inner = if n % 2 == 0 { first - second } else { first + second };
        if (n as u64 * (n as u64 - 1) / 2) % 2 == 1 {
            -inner
        } else {
            inner
        }
    }

    /// `(-1)^{N(N-1)/2} Res(f, f')` from the Sylvester matrix, for
    /// `N ≤ 12`.
    pub fn resultant_discriminant(&self) -> Result<BigInt, TrinomialError> {
        if self.degree > RESULTANT_MAX_DEGREE {
            return Err(TrinomialError::DegreeAboveBound {
                degree: self.degree,
                max: RESULTANT_MAX_DEGREE,
            });
        }
        let f = self.to_poly();
        let res = resultant(&f, &f.derivative());
        let n = self.degree as u64;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
    }

    /// All integer roots, ascending.
    ///
    /// `f' = N x^{N-1} + A` has at most two real zeros, so `f` is monotone
    /// between integer cut points placed around them; each piece is
    /// binary-searched with exact evaluation. No factorization of `B` is
    /// needed.
    pub fn rational_roots(&self) -> Vec<BigInt> {
        let bound: BigInt = self.a.abs().max(self.b.abs()) + 1;
        // floor((|A|/N)^{1/(N-1)}) bounds the real critical points
        let t = (self.a.abs() / BigInt::from(self.degree)).nth_root(self.degree - 1);
        let mut cuts = vec![
            -bound.clone(),
            -&t - 1,
            -t.clone(),
            t.clone(),
            &t + 1,
            bound.clone(),
        ];
        cuts.retain(|c| c.abs() <= bound);
        cuts.sort();
        cuts.dedup();
        let mut roots = Vec::new();
        for c in &cuts {
            if self.eval(c).is_zero() {
                roots.push(c.clone());
            }
        }
        for w in cuts.windows(2) {
            if let Some(r) = self.root_strictly_between(&w[0], &w[1]) {
                roots.push(r);
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    fn root_strictly_between(&self, lo: &BigInt, hi: &BigInt) -> Option<BigInt> {
        let mut lo = lo + 1;
        let mut hi = hi - 1;
        if lo > hi {
            return None;
        }
        let f_lo = self.eval(&lo).signum();
        let f_hi = self.eval(&hi).signum();
        if f_lo.is_zero() {
            return Some(lo);
        }
        if f_hi.is_zero() {
            return Some(hi);
        }
        if f_lo == f_hi {
            return None;
        }
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            let v = self.eval(&mid).signum();
            if v.is_zero() {
                return Some(mid);
            }
            if v == f_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        None
    }

    /// Primes `p` with `p | A`, `p | B` and `p² ∤ B`, given the complete
    /// factorization of `B`.
    pub fn eisenstein_primes(&self, fb: &FactoredInt) -> Result<Vec<BigInt>, TrinomialError> {
        if !fb.is_complete() || fb.value().abs() != self.b.abs() {
            return Err(TrinomialError::IncompleteFactorization);
        }
        Ok(fb
            .factors()
            .iter()
            .filter(|(p, e)| *e == 1 && self.a.is_multiple_of(p))
            .map(|(p, _)| p.clone())
            .collect())
    }

    /// Whether `f mod p` is irreducible over `F_p` (Rabin's test).
    pub fn is_irreducible_mod_p(&self, p: u64) -> Result<bool, TrinomialError> {
        if !arith::is_prime_u64(p) {
            return Err(TrinomialError::NotPrime(BigInt::from(p)));
        }
        if p >= 1 << 32 {
            return Err(TrinomialError::PrimeTooLarge(p));
        }
        Ok(fp_poly::is_irreducible(&self.reduce_mod(p)))
    }

    fn reduce_mod(&self, p: u64) -> FpPoly {
        let pb = BigInt::from(p);
        let residue = |v: &BigInt| v.mod_floor(&pb).to_u64().unwrap();
        let mut c = vec![0u64; self.degree as usize + 1];
        c[0] = residue(&self.b);
        c[1] = (c[1] + residue(&self.a)) % p;
        c[self.degree as usize] = (c[self.degree as usize] + 1) % p;
        FpPoly::new(p, c)
    }

    /// The first `count` primes not dividing `Δ(f)`.
    pub fn default_trial_primes(&self, count: usize) -> Vec<u64> {
        let disc = self.swan_discriminant();
        arith::small_primes()
            .iter()
            .map(|&p| p as u64)
            .filter(|&p| !disc.is_multiple_of(&BigInt::from(p)))
            .take(count)
            .collect()
    }

    /// Irreducibility over `Q`. Exact for `N ≤ 3`; above that, a rational
    /// root proves reducibility; an Eisenstein prime, an irreducible
    /// reduction mod some `p` in `trial_primes`, or incompatible factor
    /// degree patterns across several of them prove irreducibility.
    pub fn irreducibility(&self, trial_primes: &[u64], budget: &FactorBudget) -> IrreducibilityVerdict {
        if let Some(r) = self.rational_roots().into_iter().next() {
            return IrreducibilityVerdict::Reducible(r);
        }
        if self.degree <= 3 {
            return IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::RationalRootExhaustion);
        }
        // Eisenstein primes divide gcd(A, B), which is cheaper to factor than B
        let g = self.a.gcd(&self.b);
        if !g.is_one() {
            if let Ok(fg) = arith::factorize(&g, budget) {
                for p in fg.primes() {
                    if !self.b.is_multiple_of(&(p * p)) {
                        return IrreducibilityVerdict::Irreducible(
                            IrreducibilityCertificate::Eisenstein(p.clone()),
                        );
                    }
                }
            }
        }
        // A factor over Q of degree d reduces mod p ∤ Δ to a product of
        // irreducibles, so d is a subset sum of every mod-p degree pattern.
        let disc = self.swan_discriminant();
        let n = self.degree as usize;
        let mut possible = vec![true; n + 1];
        let mut used = Vec::new();
        for &p in trial_primes {
            if disc.is_multiple_of(&BigInt::from(p)) || p >= 1 << 32 {
                continue;
            }
            let degrees = fp_poly::factor_degrees(&self.reduce_mod(p));
            if degrees == [n] {
                return IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::ModP(p));
            }
            let mut sums = vec![false; n + 1];
            sums[0] = true;
            for d in degrees {
                for s in (d..=n).rev() {
                    sums[s] |= sums[s - d];
                }
            }
            possible.iter_mut().zip(&sums).for_each(|(x, &s)| *x &= s);
            used.push(p);
            if !possible[1..n].iter().any(|&x| x) {
                return IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::DegreePattern(used));
            }
        }
        IrreducibilityVerdict::Unknown
    }

    /// The JKS condition at a prime `q | Δ(f)`.
    ///
    /// Conditions (2) and (3) need `B₁ = (B + (-B)^{q^j})/q` and
    /// `A₁ = (A + (-A)^{q^l})/q` only modulo `q`, so the powers are taken
    /// modulo `q²` and never expanded.
    pub fn jks_prime_test(&self, q: &BigInt) -> Result<JksOutcome, TrinomialError> {
        if self.degree < 3 {
            return Err(TrinomialError::DegreeBelowThree(self.degree));
        }
        if !arith::is_prime(q) {
            return Err(TrinomialError::NotPrime(q.clone()));
        }
        let disc = self.swan_discriminant();
        if !disc.is_multiple_of(q) {
            return Err(TrinomialError::PrimeNotDividingDiscriminant {
                q: q.clone(),
                disc,
            });
        }
        let n = self.degree;
        let q2 = q * q;
        let q_divides_a = self.a.is_multiple_of(q);
        let q_divides_b = self.b.is_multiple_of(q);
        let nonzero_mod_q = |v: &BigInt| !v.mod_floor(q).is_zero();
        let outcome = |cond, pass| {
            if pass {
                JksOutcome::Pass(cond)
            } else {
                JksOutcome::Fail(cond)
            }
        };
        Ok(match (q_divides_a, q_divides_b) {
            (true, true) => outcome(JksCondition::BothDivide, !self.b.is_multiple_of(&q2)),
            (true, false) => {
                let a2 = exact_quotient_mod(&self.a, q);
                let j = prime_power_exponent(n as u64, q);
                let b1 = shifted_power_quotient(&self.b, q, j);
                let pass = (a2.is_zero() && !b1.is_zero()) || {
                    // A₂·(−B·A₂^N − (−B₁)^N) mod q
                    let t1 = -&self.b * a2.modpow(&BigInt::from(n), q);
                    let t2 = (-&b1).mod_floor(q).modpow(&BigInt::from(n), q);
                    nonzero_mod_q(&(&a2 * (t1 - t2)))
                };
                outcome(JksCondition::DividesAOnly, pass)
            }
            (false, true) => {
                let b2 = exact_quotient_mod(&self.b, q);
                let l = prime_power_exponent(n as u64 - 1, q);
                let a1 = shifted_power_quotient(&self.a, q, l);
                let pass = (a1.is_zero() && !b2.is_zero()) || {
                    // A₁·(−A·A₁^{N−1} − (−B₂)^{N−1}) mod q
                    let t1 = -&self.a * a1.modpow(&BigInt::from(n - 1), q);
                    let t2 = (-&b2).mod_floor(q).modpow(&BigInt::from(n - 1), q);
                    nonzero_mod_q(&(&a1 * (t1 - t2)))
                };
                outcome(JksCondition::DividesBOnly, pass)
            }
            (false, false) => outcome(JksCondition::DividesNeither, !disc.is_multiple_of(&q2)),
        })
    }

    /// Monogenicity from a factorization of `Δ(f)` and an irreducibility
    /// verdict. A failing prime among the known factors decides
    /// `NotMonogenic` even when the factorization is incomplete.
    pub fn monogenicity(
        &self,
        fdisc: &FactoredInt,
        irr: &IrreducibilityVerdict,
    ) -> Result<MonogenicityVerdict, TrinomialError> {
        if self.degree < 3 {
            return Err(TrinomialError::DegreeBelowThree(self.degree));
        }
        let disc = self.swan_discriminant();
        if *fdisc.value() != disc {
            return Err(TrinomialError::DiscriminantMismatch {
                found: fdisc.value().clone(),
                expected: disc,
            });
        }
        match irr {
            IrreducibilityVerdict::Reducible(r) => {
                return Ok(MonogenicityVerdict::NotIrreducible(r.clone()))
            }
            IrreducibilityVerdict::Unknown => {
                return Ok(MonogenicityVerdict::Unknown(
                    "irreducibility not certified".into(),
                ))
            }
            IrreducibilityVerdict::Irreducible(_) => {}
        }
        for q in fdisc.primes() {
            if let JksOutcome::Fail(condition) = self.jks_prime_test(q)? {
                return Ok(MonogenicityVerdict::NotMonogenic {
                    prime: q.clone(),
                    condition,
                });
            }
        }
        if fdisc.is_complete() {
            Ok(MonogenicityVerdict::Monogenic)
        } else {
            Ok(MonogenicityVerdict::Unknown(format!(
                "discriminant only partially factored; cofactor of {} bits",
                fdisc.cofactor().bits()
            )))
        }
    }

    /// Factors `Δ(f)`, certifies irreducibility with the default trial
    /// primes, and decides monogenicity.
    pub fn analyze(&self, budget: &FactorBudget) -> Result<TrinomialAnalysis, TrinomialError> {
        let discriminant = self.swan_discriminant();
        let irreducibility =
            self.irreducibility(&self.default_trial_primes(DEFAULT_TRIAL_PRIMES), budget);
        if discriminant.is_zero() {
            // repeated root, so never irreducible
            let verdict = match &irreducibility {
                IrreducibilityVerdict::Reducible(r) => MonogenicityVerdict::NotIrreducible(r.clone()),
                _ => MonogenicityVerdict::Unknown("zero discriminant".into()),
            };
            return Ok(TrinomialAnalysis {
                discriminant,
                discriminant_factors: None,
                irreducibility,
                verdict,
            });
        }
        let fdisc = arith::factorize(&discriminant, budget).expect("nonzero discriminant");
        let verdict = self.monogenicity(&fdisc, &irreducibility)?;
        Ok(TrinomialAnalysis {
            discriminant,
            discriminant_factors: Some(fdisc),
            irreducibility,
            verdict,
        })
    }

    /// Whether the prime `q` divides `[Z_K : Z[θ]]` for an irreducible
    /// cubic, by exhaustive search.
    ///
    /// `q` divides the index iff some `(c₂θ² + c₁θ + c₀)/q` with
    /// `0 ≤ cᵢ < q`, not all zero, is an algebraic integer. The
    /// characteristic polynomial of `g(θ)` is `Res_y(f(y), t − g(y))`; it
    /// is evaluated at `t = 0, 1, 2` and interpolated, then `g(θ)/q` is
    /// integral iff its coefficients are divisible by `q, q², q³`.
    pub fn index_oracle_cubic(&self, q: u64, q_bound: u64) -> Result<bool, TrinomialError> {
        if self.degree != 3 {
            return Err(TrinomialError::NotCubic(self.degree));
        }
        if !arith::is_prime_u64(q) {
            return Err(TrinomialError::NotPrime(BigInt::from(q)));
        }
        if q > q_bound {
            return Err(TrinomialError::PrimeAboveOracleBound { q, bound: q_bound });
        }
        let disc = self.swan_discriminant();
        let qb = BigInt::from(q);
        if !disc.is_multiple_of(&qb) {
            return Err(TrinomialError::PrimeNotDividingDiscriminant { q: qb, disc });
        }
        if !self.rational_roots().is_empty() {
            return Err(TrinomialError::NotIrreducible);
        }
        let f = self.to_poly();
        let q2 = &qb * &qb;
        let q3 = &q2 * &qb;
        for idx in 1..q * q * q {
            let (c0, c1, c2) = (idx % q, (idx / q) % q, idx / (q * q));
            let charpoly_at = |t: i64| {
                let h = IntPoly::new(vec![
                    BigInt::from(t) - c0,
                    -BigInt::from(c1),
                    -BigInt::from(c2),
                ]);
                resultant(&f, &h)
            };
            let (v0, v1, v2) = (charpoly_at(0), charpoly_at(1), charpoly_at(2));
            // t³ + e2 t² + e1 t + e0
            let e0 = v0;
            let s1 = v1 - 1 - &e0;
            let s2 = v2 - 8 - &e0;
            let e2: BigInt = (s2 - &s1 * 2) / 2;
            let e1: BigInt = s1 - &e2;
            if e2.is_multiple_of(&qb) && e1.is_multiple_of(&q2) && e0.is_multiple_of(&q3) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `S3` unless `Δ(f)` is a perfect square.
    pub fn cubic_galois_group(&self, irr: &IrreducibilityVerdict) -> Result<CubicGalois, TrinomialError> {
        if self.degree != 3 {
            return Err(TrinomialError::NotCubic(self.degree));
        }
        if !irr.is_irreducible() {
            return Err(TrinomialError::NotIrreducible);
        }
        let disc = self.swan_discriminant();
        if disc.is_negative() {
            return Ok(CubicGalois::S3);
        }
        let (_, exact) = arith::int_sqrt(&disc).expect("nonnegative");
        Ok(if exact { CubicGalois::C3 } else { CubicGalois::S3 })
    }
}

impl std::fmt::Display for Trinomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let term = |c: &BigInt, var: &str| {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if mag.is_one() && !var.is_empty() {
                format!(" {sign} {var}")
            } else {
                format!(" {sign} {mag}{var}")
            }
        };
        write!(f, "x^{}", self.degree)?;
        if !self.a.is_zero() {
            write!(f, "{}", term(&self.a, "x"))?;
        }
        write!(f, "{}", term(&self.b, ""))
    }
}

/// `e` with `q^e ‖ n`, for `n ≥ 1`.
fn prime_power_exponent(mut n: u64, q: &BigInt) -> u32 {
    let Some(q) = q.to_u64() else { return 0 };
    let mut e = 0;
    while n % q == 0 {
        n /= q;
        e += 1;
    }
    e
}

/// `(v / q) mod q` for `q | v`.
fn exact_quotient_mod(v: &BigInt, q: &BigInt) -> BigInt {
    let q2 = q * q;
    let r = v.mod_floor(&q2);
    debug_assert!(r.is_multiple_of(q));
    r / q
}

/// `((v + (−v)^{q^e}) / q) mod q`, computed modulo `q²`.
fn shifted_power_quotient(v: &BigInt, q: &BigInt, e: u32) -> BigInt {
    let q2 = q * q;
    let exponent = q.pow(e);
    let power = (-v).mod_floor(&q2).modpow(&exponent, &q2);
    let s = (v + power).mod_floor(&q2);
    assert!(
        s.is_multiple_of(q),
        "q must divide v + (-v)^(q^e) by Fermat's little theorem"
    );
    s / q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u32, a: i64, b: i64) -> Trinomial {
        Trinomial::new(n, a, b).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn construction_rules() {
        assert_eq!(Trinomial::new(1, 1, 1), Err(TrinomialError::DegreeTooSmall(1)));
        assert_eq!(Trinomial::new(3, 1, 0), Err(TrinomialError::ZeroConstantTerm));
        assert!(Trinomial::new(2, 0, 1).is_ok());
        assert_eq!(t(3, -1, -1).to_string(), "x^3 - x - 1");
        assert_eq!(t(6, -30, -5).to_string(), "x^6 - 30x - 5");
    }

    #[test]
    fn swan_examples() {
        assert_eq!(t(3, -1, -1).swan_discriminant(), big(-23));
        assert_eq!(t(3, -10, -1).swan_discriminant(), big(3973));
        assert_eq!(t(5, 1, 1).swan_discriminant(), big(3381));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(t(3, -1, -1).resultant_discriminant().unwrap(), big(-23));
        assert_eq!(t(2, 2, 1).resultant_discriminant().unwrap(), big(0));
        assert_eq!(t(3, -4, -3).resultant_discriminant().unwrap(), big(13));
        assert_eq!(t(5, 1, 1).resultant_discriminant().unwrap(), big(3381));
        assert!(matches!(
            t(13, 1, 1).resultant_discriminant(),
            Err(TrinomialError::DegreeAboveBound { .. })
        ));
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(t(3, -2, -1).rational_roots(), vec![big(-1)]);
        assert_eq!(t(3, -1, -1).rational_roots(), Vec::<BigInt>::new());
        assert_eq!(t(3, -4, -3).rational_roots(), vec![big(-1)]);
        // (x - 1)(x - 2)(x + 3) = x³ - 7x + 6
        assert_eq!(t(3, -7, 6).rational_roots(), vec![big(-3), big(1), big(2)]);
        // 16 - 34 + 18 = 0, while f(1) = 2
        assert_eq!(t(4, -17, 18).rational_roots(), vec![big(2)]);
    }

    #[test]
    fn rational_roots_match_divisor_search() {
        for n in 2..=6u32 {
            for a in -25i64..=25 {
                for b in (-25i64..=25).filter(|&b| b != 0) {
                    let f = t(n, a, b);
                    let mut expected = Vec::new();
                    for d in 1..=b.abs() {
                        if b % d == 0 {
                            for r in [-d, d] {
                                if f.eval(&big(r)).is_zero() {
                                    expected.push(big(r));
                                }
                            }
                        }
                    }
                    expected.sort();
                    assert_eq!(f.rational_roots(), expected, "{f}");
                }
            }
        }
    }

    #[test]
    fn eisenstein_examples() {
        let b = FactorBudget::default();
        let f = t(6, -30, -5);
        let fb = arith::factorize(f.b(), &b).unwrap();
        assert_eq!(f.eisenstein_primes(&fb).unwrap(), vec![big(5)]);
        let f = t(3, -1, -18);
        let fb = arith::factorize(f.b(), &b).unwrap();
        assert!(f.eisenstein_primes(&fb).unwrap().is_empty());
        let f = t(3, -6, -2);
        let fb = arith::factorize(f.b(), &b).unwrap();
        assert_eq!(f.eisenstein_primes(&fb).unwrap(), vec![big(2)]);
    }

    #[test]
    fn mod_p_examples() {
        assert!(t(3, -1, -1).is_irreducible_mod_p(2).unwrap());
        assert!(!t(3, -2, -1).is_irreducible_mod_p(5).unwrap());
        assert!(!t(2, 0, 1).is_irreducible_mod_p(2).unwrap());
        assert!(t(3, -1, -1).is_irreducible_mod_p(4).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        let b = FactorBudget::default();
        let verdict = |f: &Trinomial| f.irreducibility(&f.default_trial_primes(25), &b);
        assert_eq!(
            verdict(&t(3, -1, -1)),
            IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::RationalRootExhaustion)
        );
        assert_eq!(verdict(&t(3, -4, -3)), IrreducibilityVerdict::Reducible(big(-1)));
        assert_eq!(
            verdict(&t(6, -30, -5)),
            IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::Eisenstein(big(5)))
        );
        // x^4 + x + 1 is irreducible mod 2
        assert_eq!(
            verdict(&t(4, 1, 1)),
            IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::ModP(2))
        );
        // x^4 + 4 = (x² + 2x + 2)(x² − 2x + 2) has no root but splits mod every p
        assert_eq!(verdict(&Trinomial::new(4, 0, 4).unwrap()), IrreducibilityVerdict::Unknown);
    }

    #[test]
    fn jks_examples() {
        assert_eq!(
            t(3, -1, -1).jks_prime_test(&big(23)).unwrap(),
            JksOutcome::Pass(JksCondition::DividesNeither)
        );
        assert_eq!(
            t(3, -2, -4).jks_prime_test(&big(2)).unwrap(),
            JksOutcome::Fail(JksCondition::BothDivide)
        );
        assert_eq!(
            t(6, -30, -5).jks_prime_test(&big(2)).unwrap(),
            JksOutcome::Pass(JksCondition::DividesAOnly)
        );
        assert_eq!(
            t(3, -9, -1).jks_prime_test(&big(3)).unwrap(),
            JksOutcome::Fail(JksCondition::DividesAOnly)
        );
        // x³ − 3x − 1 generates the conductor-9 cyclic cubic field: index 1
        assert_eq!(
            t(3, -3, -1).jks_prime_test(&big(3)).unwrap(),
            JksOutcome::Pass(JksCondition::DividesAOnly)
        );
        // condition (3): x³ − x − 18 at q = 2
        assert_eq!(
            t(3, -1, -18).jks_prime_test(&big(2)).unwrap(),
            JksOutcome::Pass(JksCondition::DividesBOnly)
        );
    }

    #[test]
    fn degree_patterns_certify_a4_quartic() {
        // Galois group A4 has no 4-cycle, so no reduction is irreducible
        let t = Trinomial::new(4, 8, 12).unwrap();
        let primes = t.default_trial_primes(DEFAULT_TRIAL_PRIMES);
        assert!(primes.iter().all(|&p| !t.is_irreducible_mod_p(p).unwrap()));
        match t.irreducibility(&primes, &FactorBudget::default()) {
            IrreducibilityVerdict::Irreducible(IrreducibilityCertificate::DegreePattern(used)) => {
                assert!(used.len() >= 2)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn jks_usage_errors() {
        assert!(matches!(
            t(3, -1, -1).jks_prime_test(&big(5)),
            Err(TrinomialError::PrimeNotDividingDiscriminant { .. })
        ));
        assert!(matches!(t(2, 0, 1).jks_prime_test(&big(2)), Err(TrinomialError::DegreeBelowThree(2))));
        assert!(matches!(t(3, -3, -1).jks_prime_test(&big(9)), Err(TrinomialError::NotPrime(_))));
    }

    #[test]
    fn monogenicity_examples() {
        let b = FactorBudget::default();
        assert_eq!(t(3, -1, -1).analyze(&b).unwrap().verdict, MonogenicityVerdict::Monogenic);
        // x³ − 2x − 4 = (x − 2)(x² + 2x + 2)
        assert_eq!(t(3, -2, -4).analyze(&b).unwrap().verdict, MonogenicityVerdict::NotIrreducible(big(2)));
        assert_eq!(
            t(3, -10, -4).analyze(&b).unwrap().verdict,
            MonogenicityVerdict::NotMonogenic { prime: big(2), condition: JksCondition::BothDivide }
        );
        assert_eq!(
            t(3, -9, -1).analyze(&b).unwrap().verdict,
            MonogenicityVerdict::NotMonogenic { prime: big(3), condition: JksCondition::DividesAOnly }
        );
        assert_eq!(t(3, -3, -1).analyze(&b).unwrap().verdict, MonogenicityVerdict::Monogenic);
        assert_eq!(t(3, -4, -3).analyze(&b).unwrap().verdict, MonogenicityVerdict::NotIrreducible(big(-1)));
    }

    #[test]
    fn monogenicity_rejects_wrong_factorization() {
        let b = FactorBudget::default();
        let f = t(3, -1, -1);
        let wrong = arith::factorize(&big(23), &b).unwrap();
        let irr = f.irreducibility(&[], &b);
        assert!(matches!(
            f.monogenicity(&wrong, &irr),
            Err(TrinomialError::DiscriminantMismatch { .. })
        ));
    }

    #[test]
    fn failing_prime_dominates_incomplete_factorization() {
        // Δ(x³ − 10x − 4) = 2⁴·223, with 223 left as an unfactored cofactor
        let b = FactorBudget::default();
        let f = t(3, -10, -4);
        let irr = f.irreducibility(&[], &b);
        let partial = FactoredInt::from_parts(big(3568), vec![(big(2), 4)], big(223));
        assert!(!partial.is_complete());
        assert_eq!(
            f.monogenicity(&partial, &irr).unwrap(),
            MonogenicityVerdict::NotMonogenic { prime: big(2), condition: JksCondition::BothDivide }
        );
        // Δ(x³ − x − 1) = −23 with nothing factored: no verdict
        let g = t(3, -1, -1);
        let nothing = FactoredInt::from_parts(big(-23), vec![], big(23));
        assert!(matches!(
            g.monogenicity(&nothing, &g.irreducibility(&[], &b)).unwrap(),
            MonogenicityVerdict::Unknown(_)
        ));
    }

    #[test]
    fn index_oracle_examples() {
        assert!(!t(3, -1, -1).index_oracle_cubic(23, 23).unwrap());
        assert!(!t(3, -3, -1).index_oracle_cubic(3, 13).unwrap());
        assert!(t(3, -10, -4).index_oracle_cubic(2, 13).unwrap());
        assert!(t(3, -9, -1).index_oracle_cubic(3, 13).unwrap());
        assert!(matches!(
            t(3, -1, -1).index_oracle_cubic(23, 13),
            Err(TrinomialError::PrimeAboveOracleBound { .. })
        ));
        assert!(matches!(t(3, -4, -3).index_oracle_cubic(13, 13), Err(TrinomialError::NotIrreducible)));
    }

    #[test]
    fn galois_examples() {
        let b = FactorBudget::default();
        let g = |f: &Trinomial| f.cubic_galois_group(&f.irreducibility(&[], &b)).unwrap();
        assert_eq!(g(&t(3, -1, -1)), CubicGalois::S3);
        assert_eq!(g(&t(3, -3, -1)), CubicGalois::C3);
        assert_eq!(g(&t(3, -4, -1)), CubicGalois::S3);
        assert_eq!(t(3, -4, -1).swan_discriminant(), big(229));
    }
}
