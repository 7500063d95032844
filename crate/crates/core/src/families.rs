//! The four trinomial families and their class-number divisibility claims.
//!
//! | family | trinomial                       | δ                      | claimed divisor of h |
//! |--------|---------------------------------|------------------------|----------------------|
//! | Main1  | `x³ − w·x − 1`                  | `d = 4w³ − 27`         | `3`                  |
//! | Main2  | `x³ − 2^{2a}·x − 3^{b−1}`       | `2^{6a+2} − 3^{2b+1}`  | `(6b+3)/gcd(3, 2b+1)`|
//! | Main3  | `x^N − N(N−1)^b·x − (N−1)`      | `(N−1)^{bN} + 1`       | `bN/2`               |
//! | Main4  | `x^N − x − (N−1)N^b`            | `1 − N^{(b+1)N−b}`     | `(b+1)N − b`         |
//!
//! Each analyzer runs the generic pipeline (irreducibility, factored
//! discriminant, JKS verdict) next to the family's closed-form criterion,
//! checks the structural facts the family relies on, and evaluates the
//! claim only for members of the family. A claim is never guessed: a
//! missing class number leaves it [`ClaimStatus::NotEvaluated`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{self, FactorBudget, FactoredInt, SquarefreeStatus};
use crate::quadfield::{self, ClassNumberResult, QuadField, QuadForm};
use crate::trinomial::{
    CubicGalois, IrreducibilityVerdict, JksOutcome, MonogenicityVerdict, Trinomial, TrinomialError,
    DEFAULT_TRIAL_PRIMES,
};

/// Default bit-size guard on δ.
pub const DEFAULT_MAX_DELTA_BITS: u64 = 4096;

/// Real discriminants above this need `slow_paths`.
pub const SLOW_REAL_DISC: i64 = 100_000_000;

/// Imaginary discriminants with `|D|` above this need `slow_paths`.
pub const SLOW_IMAGINARY_DISC: i64 = 10_000_000_000;

/// Largest `|D|` for which the element-order probe runs.
pub const DEFAULT_PROBE_MAX_DISC: i64 = 10_000_000;

pub const DEFAULT_PROBE_ORDER_BOUND: u64 = 1000;

pub type Progress = Arc<dyn Fn(u64, u64) + Send + Sync>;

#[derive(Clone)]
pub struct FamilyConfig {
    pub budget: FactorBudget,
    /// How many primes the mod-p irreducibility certificate may try.
    pub trial_primes: usize,
    pub max_delta_bits: u64,
    /// Allows class numbers beyond [`SLOW_REAL_DISC`] / [`SLOW_IMAGINARY_DISC`].
    pub slow_paths: bool,
    /// Compute class numbers for non-members whose δ is squarefree.
    pub all_h: bool,
    /// Bound passed to `form_order` by the Main4 probe; 0 disables it.
    pub probe_order_bound: u64,
    pub probe_max_abs_disc: i64,
    /// Receives `(done, total)` from the imaginary form sweep.
    pub progress: Option<Progress>,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        FamilyConfig {
            budget: FactorBudget::default(),
            trial_primes: DEFAULT_TRIAL_PRIMES,
            max_delta_bits: DEFAULT_MAX_DELTA_BITS,
            slow_paths: false,
            all_h: false,
            probe_order_bound: DEFAULT_PROBE_ORDER_BOUND,
            probe_max_abs_disc: DEFAULT_PROBE_MAX_DISC,
            progress: None,
        }
    }
}

impl fmt::Debug for FamilyConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilyConfig")
            .field("budget", &self.budget)
            .field("trial_primes", &self.trial_primes)
            .field("max_delta_bits", &self.max_delta_bits)
            .field("slow_paths", &self.slow_paths)
            .field("all_h", &self.all_h)
            .field("probe_order_bound", &self.probe_order_bound)
            .field("probe_max_abs_disc", &self.probe_max_abs_disc)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("parameters out of range: {0}")]
    ParameterRange(String),
    #[error("gcd({u}, {w}) ≠ 1")]
    NotCoprime { u: BigInt, w: BigInt },
    #[error("records from more than one family")]
    MixedFamilies,
    #[error("record {0} is not monogenic")]
    NotMonogenicRecord(String),
    #[error(transparent)]
    Trinomial(#[from] TrinomialError),
}

// ---------------------------------------------------------------------------
// applicability gates

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KmCondition {
    /// `3 ∤ w`.
    C1,
    /// `3 | w`, `uw ≢ 3 (mod 9)`, `u ≡ w ± 1 (mod 9)`.
    C2,
    /// `3 | w`, `uw ≡ 3 (mod 9)`, `u ≡ w ± 1 (mod 27)`.
    C3,
}

/// A pair `(u, w)` with `d = 4uw³ − 27u²` and the Kishi–Miyake condition
/// it satisfies, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmParams {
    pub u: BigInt,
    pub w: BigInt,
    pub d: BigInt,
    pub condition: Option<KmCondition>,
    pub d_nonsquare: bool,
}

impl KmParams {
    /// The parameterization theorem applies to `(u, w)`.
    pub fn applies(&self) -> bool {
        self.condition.is_some() && self.d_nonsquare
    }

    /// The cubic `x³ − uw·x − u²`.
    pub fn cubic(&self) -> Result<Trinomial, TrinomialError> {
        Trinomial::new(3, -(&self.u * &self.w), -(&self.u * &self.u))
    }
}

/// Both signs of each `±` are tried.
pub fn km_conditions(u: &BigInt, w: &BigInt) -> Result<KmParams, FamilyError> {
    if !u.gcd(w).is_one() {
        return Err(FamilyError::NotCoprime {
            u: u.clone(),
            w: w.clone(),
        });
    }
    let d: BigInt = 4 * u * w.pow(3) - 27 * u * u;
    let residue = |x: &BigInt, m: i32| x.mod_floor(&BigInt::from(m));
    let near = |m: i32| {
        let (u, w) = (residue(u, m), residue(w, m));
        u == residue(&(&w + 1), m) || u == residue(&(&w - 1), m)
    };
    let condition = if !w.is_multiple_of(&BigInt::from(3)) {
        Some(KmCondition::C1)
    } else {
        let uw_is_3 = residue(&(u * w), 9) == BigInt::from(3);
        if !uw_is_3 && near(9) {
            Some(KmCondition::C2)
        } else if uw_is_3 && near(27) {
            Some(KmCondition::C3)
        } else {
            None
        }
    };
    let d_nonsquare = d.is_negative() || !arith::int_sqrt(&d).expect("nonnegative").1;
    Ok(KmParams {
        u: u.clone(),
        w: w.clone(),
        d,
        condition,
        d_nonsquare,
    })
}

/// `2^{2k} < 3^n` and `(k, n) ≠ (2, 3)`.
pub fn kishi_check(k: u32, n: u32) -> bool {
    k >= 1 && n >= 1 && (k, n) != (2, 3) && BigInt::from(4).pow(k) < BigInt::from(3).pow(n)
}

/// `M ≥ 5` and `M^{2n} + 1` squarefree.
pub fn ankeny_chowla_check(m: u64, _n: u64, sf: &SquarefreeStatus) -> bool {
    m >= 5 && sf.is_squarefree()
}

/// `1 − M^n` squarefree, with `M ≥ 5` odd, or `M = 3` and `n` odd.
pub fn murty_check(m: u64, n: u64, sf: &SquarefreeStatus) -> bool {
    sf.is_squarefree() && ((m >= 5 && m % 2 == 1) || (m == 3 && n % 2 == 1))
}

// ---------------------------------------------------------------------------
// records

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Main1,
    Main2,
    Main3,
    Main4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Main1 => "Main1",
            Family::Main2 => "Main2",
            Family::Main3 => "Main3",
            Family::Main4 => "Main4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family parameters. `n` is the degree `N` for Main3 and Main4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    Main1 { w: i64 },
    Main2 { a: u32, b: u32 },
    Main3 { n: u32, b: u32 },
    Main4 { n: u32, b: u32 },
}

impl Params {
    pub fn family(&self) -> Family {
        match self {
            Params::Main1 { .. } => Family::Main1,
            Params::Main2 { .. } => Family::Main2,
            Params::Main3 { .. } => Family::Main3,
            Params::Main4 { .. } => Family::Main4,
        }
    }

    /// The divisor of `h` the family's theorem claims.
    pub fn n_claimed(&self) -> u64 {
        match *self {
            Params::Main1 { .. } => 3,
            Params::Main2 { b, .. } => {
                let b = b as u64;
                (6 * b + 3) / (2 * b + 1).gcd(&3)
            }
            Params::Main3 { n, b } => b as u64 * n as u64 / 2,
            Params::Main4 { n, b } => (b as u64 + 1) * n as u64 - b as u64,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Main1 { w } => write!(f, "w={w}"),
            Params::Main2 { a, b } => write!(f, "a={a} b={b}"),
            Params::Main3 { n, b } | Params::Main4 { n, b } => write!(f, "N={n} b={b}"),
        }
    }
}

/// Why a claim was not evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotEvaluatedReason {
    /// The record is not in the family the claim is about.
    NotInFamily,
    /// The class number needs `slow_paths`.
    SlowPath,
    /// Membership is undecided, usually an exhausted factoring budget.
    Undecided(String),
    OutOfRange(String),
}

impl NotEvaluatedReason {
    /// Whether this counts against a claim check; non-members do not.
    pub fn is_pending(&self) -> bool {
        !matches!(self, NotEvaluatedReason::NotInFamily)
    }
}

impl fmt::Display for NotEvaluatedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotEvaluatedReason::NotInFamily => f.write_str("not a member of the family"),
            NotEvaluatedReason::SlowPath => f.write_str("class number needs --slow"),
            NotEvaluatedReason::Undecided(why) => write!(f, "membership undecided: {why}"),
            NotEvaluatedReason::OutOfRange(why) => write!(f, "out of range: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Holds,
    Fails,
    NotEvaluated(NotEvaluatedReason),
}

impl ClaimStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ClaimStatus::Holds => "true",
            ClaimStatus::Fails => "false",
            ClaimStatus::NotEvaluated(_) => "NotEvaluated",
        }
    }
}

/// A structural fact the family's argument relies on, checked on one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub params: Params,
    pub trinomial: Trinomial,
    /// `d` for Main1, `δ` otherwise.
    pub delta: BigInt,
    /// `Δ(f)`.
    pub discriminant: BigInt,
    pub irreducible: IrreducibilityVerdict,
    pub monogenic: MonogenicityVerdict,
    /// The family's closed-form monogenicity criterion; `None` if undecided.
    pub criterion: Option<bool>,
    /// Whether the theorem's hypotheses hold, so `criterion` must agree
    /// with `monogenic`.
    pub criterion_applies: bool,
    /// Membership in the set the divisibility claim is about.
    pub member: Option<bool>,
    /// Whether the cited class-number theorem applies to this member.
    pub gate: Option<bool>,
    /// Main2 only: the pair `(3^{2b−2}, 2^{2a})`.
    pub witness: Option<KmParams>,
    pub galois: Option<CubicGalois>,
    pub field: Option<QuadField>,
    pub h: Option<ClassNumberResult>,
    pub n_claimed: u64,
    pub claim: ClaimStatus,
    /// Main4: whether some reduced form has order divisible by `n`.
    pub order_probe: Option<bool>,
    pub checks: Vec<Check>,
}

impl FamilyRecord {
    pub fn family(&self) -> Family {
        self.params.family()
    }

    /// Closed form and JKS verdict disagree on a decided case.
    pub fn criterion_mismatch(&self) -> bool {
        self.criterion_applies
            && self.monogenic.is_decided()
            && self
                .criterion
                .is_some_and(|c| c != self.monogenic.is_monogenic())
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

// ---------------------------------------------------------------------------
// shared machinery

fn tri_state(sf: &SquarefreeStatus) -> Option<bool> {
    match sf {
        SquarefreeStatus::Squarefree => Some(true),
        SquarefreeStatus::NotSquarefree(_) => Some(false),
        SquarefreeStatus::Unknown(_) => None,
    }
}

fn both(x: Option<bool>, y: Option<bool>) -> Option<bool> {
    match (x, y) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

fn check(name: &'static str, holds: bool) -> Check {
    Check { name, holds }
}

fn class_number_gated(field: &QuadField, cfg: &FamilyConfig) -> Result<ClassNumberResult, NotEvaluatedReason> {
    let d = field
        .discriminant_i64()
        .map_err(|e| NotEvaluatedReason::OutOfRange(e.to_string()))?;
    let slow = if d < 0 { -d > SLOW_IMAGINARY_DISC } else { d > SLOW_REAL_DISC };
    if slow && !cfg.slow_paths {
        return Err(NotEvaluatedReason::SlowPath);
    }
    let result = if d < 0 {
        match &cfg.progress {
            Some(p) => quadfield::class_number_imaginary_with_progress(d, p.as_ref()),
            None => quadfield::class_number_imaginary(d),
        }
    } else {
        quadfield::class_number_real(d)
    };
    result.map_err(|e| NotEvaluatedReason::OutOfRange(e.to_string()))
}

/// Field, class number and claim status from membership and `δ`.
fn evaluate_claim(
    member: Option<bool>,
    fdelta: Option<&FactoredInt>,
    n: u64,
    cfg: &FamilyConfig,
) -> (Option<QuadField>, Option<ClassNumberResult>, ClaimStatus) {
    let field = fdelta.and_then(|f| QuadField::from_factored(f).ok());
    match member {
        Some(true) => {
            let Some(field) = field else {
                let why = "δ not certified squarefree".to_string();
                return (None, None, ClaimStatus::NotEvaluated(NotEvaluatedReason::Undecided(why)));
            };
            match class_number_gated(&field, cfg) {
                Ok(h) => {
                    let status = if h.h % n == 0 { ClaimStatus::Holds } else { ClaimStatus::Fails };
                    (Some(field), Some(h), status)
                }
                Err(reason) => (Some(field), None, ClaimStatus::NotEvaluated(reason)),
            }
        }
        Some(false) => {
            let h = match (&field, cfg.all_h) {
                (Some(k), true) => class_number_gated(k, cfg).ok(),
                _ => None,
            };
            (field, h, ClaimStatus::NotEvaluated(NotEvaluatedReason::NotInFamily))
        }
        None => {
            let why = "squarefreeness or monogenicity undecided".to_string();
            (field, None, ClaimStatus::NotEvaluated(NotEvaluatedReason::Undecided(why)))
        }
    }
}

fn over_guard(bits: u64, cfg: &FamilyConfig) -> bool {
    bits > cfg.max_delta_bits
}

fn irreducibility(t: &Trinomial, cfg: &FamilyConfig) -> IrreducibilityVerdict {
    t.irreducibility(&t.default_trial_primes(cfg.trial_primes), &cfg.budget)
}

fn factor(n: &BigInt, cfg: &FamilyConfig) -> FactoredInt {
    arith::factorize(n, &cfg.budget).expect("nonzero")
}

// ---------------------------------------------------------------------------
// analyzers

/// `x³ − w·x − 1`, the `u = 1` slice of the Kishi–Miyake cubics.
///
/// When `9 | w`, the JKS test at 3 alone rules out monogenicity and `d`
/// is not factored. The pairs `(1, w)` with `w ≡ ±3 (mod 9)` satisfy none
/// of the Kishi–Miyake conditions, so they get the generic verdict and
/// are not members.
pub fn main1_analyze(w: i64, cfg: &FamilyConfig) -> Result<FamilyRecord, FamilyError> {
    let params = Params::Main1 { w };
    let wb = BigInt::from(w);
    let t = Trinomial::new(3, -&wb, BigInt::from(-1))?;
    let km = km_conditions(&BigInt::one(), &wb)?;
    let d = km.d.clone();
    let disc = t.swan_discriminant();
    let irr = irreducibility(&t, cfg);
    let mut checks = vec![check("Δ(f) = 4w³ − 27", disc == d)];

    let (monogenic, fd) = if w % 9 == 0 && irr.is_irreducible() {
        let verdict = match t.jks_prime_test(&BigInt::from(3))? {
            JksOutcome::Fail(condition) => MonogenicityVerdict::NotMonogenic {
                prime: BigInt::from(3),
                condition,
            },
            JksOutcome::Pass(_) => {
                checks.push(check("JKS fails at 3 when 9 | w", false));
                MonogenicityVerdict::Unknown("short-circuit did not apply".into())
            }
        };
        (verdict, None)
    } else {
        let fd = factor(&d, cfg);
        (t.monogenicity(&fd, &irr)?, Some(fd))
    };
    // 9 | w gives 27 | d
    let d_squarefree = match &fd {
        Some(f) => tri_state(&arith::squarefree_from(f)),
        None => Some(false),
    };
    let criterion_applies = km.applies() && irr.is_irreducible();
    let member = if !criterion_applies { Some(false) } else { d_squarefree };
    let galois = if irr.is_irreducible() {
        Some(t.cubic_galois_group(&irr)?)
    } else {
        None
    };
    if member == Some(true) {
        checks.push(check("Galois group is S3", galois == Some(CubicGalois::S3)));
    }
    let n = params.n_claimed();
    let (field, h, claim) = evaluate_claim(member, fd.as_ref(), n, cfg);
    Ok(FamilyRecord {
        params,
        trinomial: t,
        delta: d,
        discriminant: disc,
        irreducible: irr,
        monogenic,
        criterion: d_squarefree,
        criterion_applies,
        member,
        gate: Some(km.applies()),
        witness: None,
        galois,
        field,
        h,
        n_claimed: n,
        claim,
        order_probe: None,
        checks,
    })
}

/// `x³ − 2^{2a}·x − 3^{b−1}` with `δ = 2^{6a+2} − 3^{2b+1}`.
pub fn main2_analyze(a: u32, b: u32, cfg: &FamilyConfig) -> Result<FamilyRecord, FamilyError> {
    if a < 1 || b < 2 {
        return Err(FamilyError::ParameterRange(format!("need a ≥ 1, b ≥ 2; got a={a}, b={b}")));
    }
    let params = Params::Main2 { a, b };
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let t = Trinomial::new(3, -two.pow(2 * a), -three.pow(b - 1))?;
    let delta: BigInt = two.pow(6 * a + 2) - three.pow(2 * b + 1);
    let disc = t.swan_discriminant();
    let irr = irreducibility(&t, cfg);
    let mut checks = vec![
        check("Δ(f) = δ", disc == delta),
        check("irreducible iff (a,b) ≠ (1,2)", irr.is_irreducible() == ((a, b) != (1, 2))),
    ];

    let u = three.pow(2 * b - 2);
    let w = two.pow(2 * a);
    let witness = km_conditions(&u, &w)?;
    checks.push(check("witness satisfies C1", witness.condition == Some(KmCondition::C1)));
    checks.push(check("witness d = uδ", witness.d == &u * &delta));
    let cubic_disc = witness.cubic()?.swan_discriminant();
    checks.push(check("witness Δ = u³δ", cubic_disc == u.pow(3) * &delta));

    let guarded = over_guard(delta.bits(), cfg);
    let fdelta = (!guarded).then(|| factor(&delta, cfg));
    let monogenic = match &fdelta {
        Some(f) => t.monogenicity(f, &irr)?,
        None => MonogenicityVerdict::Unknown("δ exceeds the bit-size guard".into()),
    };
    let sf = fdelta.as_ref().and_then(|f| tri_state(&arith::squarefree_from(f)));
    let criterion_applies = irr.is_irreducible();
    let member = if !irr.is_irreducible() || !delta.is_negative() {
        Some(false)
    } else {
        sf
    };
    let gate = delta
        .is_negative()
        .then(|| kishi_check(3 * a + 1, 2 * b + 1));
    let galois = if irr.is_irreducible() {
        Some(t.cubic_galois_group(&irr)?)
    } else {
        None
    };
    if member == Some(true) {
        checks.push(check("Galois group is S3", galois == Some(CubicGalois::S3)));
        checks.push(check("Kishi's theorem applies", gate == Some(true)));
    }
    let n = params.n_claimed();
    let (field, h, claim) = evaluate_claim(member, fdelta.as_ref(), n, cfg);
    Ok(FamilyRecord {
        params,
        trinomial: t,
        delta,
        discriminant: disc,
        irreducible: irr,
        monogenic,
        criterion: sf,
        criterion_applies,
        member,
        gate,
        witness: Some(witness),
        galois,
        field,
        h,
        n_claimed: n,
        claim,
        order_probe: None,
        checks,
    })
}

/// `x^N − N(N−1)^b·x − (N−1)` with `δ = (N−1)^{bN} + 1`, for `N ≡ 2 (mod 4)`.
pub fn main3_analyze(n: u32, b: u32, cfg: &FamilyConfig) -> Result<FamilyRecord, FamilyError> {
    if n < 6 || n % 4 != 2 || b < 1 {
        return Err(FamilyError::ParameterRange(format!(
            "need N ≥ 6, N ≡ 2 (mod 4), b ≥ 1; got N={n}, b={b}"
        )));
    }
    let params = Params::Main3 { n, b };
    let nb = BigInt::from(n);
    let m = BigInt::from(n - 1);
    let a_coeff: BigInt = &nb * m.pow(b);
    let t = Trinomial::new(n, -&a_coeff, -&m)?;
    let delta: BigInt = m.pow(b * n) + 1;
    let disc = t.swan_discriminant();
    let mut checks = vec![
        check("Δ(f) = N^N (N−1)^{N−1} δ", disc == nb.pow(n) * m.pow(n - 1) * &delta),
        check("2 ‖ δ", delta.mod_floor(&BigInt::from(4)) == BigInt::from(2)),
        check("gcd(A, δ) = 2", a_coeff.gcd(&delta) == BigInt::from(2)),
    ];
    let irr = irreducibility(&t, cfg);

    let guarded = over_guard(delta.bits(), cfg);
    let (monogenic, fdelta, nm_sf) = if guarded {
        let verdict = MonogenicityVerdict::Unknown("δ exceeds the bit-size guard".into());
        (verdict, None, None)
    } else {
        let fn_ = factor(&nb, cfg);
        let fm = factor(&m, cfg);
        let fdelta = factor(&delta, cfg);
        let fdisc = FactoredInt::product_of(&[(&fn_, n), (&fm, n - 1), (&fdelta, 1)]);
        let nm = FactoredInt::product_of(&[(&fn_, 1), (&fm, 1)]);
        let verdict = t.monogenicity(&fdisc, &irr)?;
        (verdict, Some(fdelta), tri_state(&arith::squarefree_from(&nm)))
    };
    let delta_sf = fdelta.as_ref().map(arith::squarefree_from);
    let criterion = both(nm_sf, delta_sf.as_ref().and_then(tri_state));
    let criterion_applies = irr.is_irreducible();
    let member = if monogenic.is_decided() {
        Some(monogenic.is_monogenic())
    } else {
        None
    };
    let bn2 = params.n_claimed();
    let gate = delta_sf
        .as_ref()
        .map(|sf| ankeny_chowla_check(n as u64 - 1, bn2, sf));
    if member == Some(true) {
        checks.push(check("Ankeny–Chowla applies", gate == Some(true)));
    }
    let (field, h, claim) = evaluate_claim(member, fdelta.as_ref(), bn2, cfg);
    Ok(FamilyRecord {
        params,
        trinomial: t,
        delta,
        discriminant: disc,
        irreducible: irr,
        monogenic,
        criterion,
        criterion_applies,
        member,
        gate,
        witness: None,
        galois: None,
        field,
        h,
        n_claimed: bn2,
        claim,
        order_probe: None,
        checks,
    })
}

/// `x^N − x − (N−1)N^b` with `δ = 1 − N^{(b+1)N−b}`, for `N ≡ 3 (mod 4)`.
pub fn main4_analyze(n: u32, b: u32, cfg: &FamilyConfig) -> Result<FamilyRecord, FamilyError> {
    if n < 3 || n % 4 != 3 || b < 1 {
        return Err(FamilyError::ParameterRange(format!(
            "need N ≥ 3, N ≡ 3 (mod 4), b ≥ 1; got N={n}, b={b}"
        )));
    }
    let params = Params::Main4 { n, b };
    let order = params.n_claimed();
    let exponent = u32::try_from(order)
        .map_err(|_| FamilyError::ParameterRange(format!("exponent {order} too large")))?;
    let nb = BigInt::from(n);
    let m = BigInt::from(n - 1);
    let t = Trinomial::new(n, BigInt::from(-1), -(&m * nb.pow(b)))?;
    let delta: BigInt = BigInt::one() - nb.pow(exponent);
    let disc = t.swan_discriminant();
    let mut checks = vec![check("Δ(f) = (N−1)^{N−1} δ", disc == m.pow(n - 1) * &delta)];
    let irr = irreducibility(&t, cfg);

    let guarded = over_guard(delta.bits(), cfg);
    let (monogenic, fdelta) = if guarded {
        (MonogenicityVerdict::Unknown("δ exceeds the bit-size guard".into()), None)
    } else {
        let fm = factor(&m, cfg);
        let fdelta = factor(&delta, cfg);
        let fdisc = FactoredInt::product_of(&[(&fm, n - 1), (&fdelta, 1)]);
        (t.monogenicity(&fdisc, &irr)?, Some(fdelta))
    };
    let delta_sf = fdelta.as_ref().map(arith::squarefree_from);
    let criterion = delta_sf.as_ref().and_then(tri_state);
    let criterion_applies = irr.is_irreducible();
    let member = if monogenic.is_decided() {
        Some(monogenic.is_monogenic())
    } else {
        None
    };
    let gate = delta_sf.as_ref().map(|sf| murty_check(n as u64, order, sf));
    if member == Some(true) {
        checks.push(check("Murty's theorem applies", gate == Some(true)));
    }
    let (field, h, mut claim) = evaluate_claim(member, fdelta.as_ref(), order, cfg);
    let mut order_probe = None;
    if let (Some(k), ClaimStatus::Holds) = (&field, &claim) {
        if let Ok(d) = k.discriminant_i64() {
            if cfg.probe_order_bound > 0 && d.unsigned_abs() <= cfg.probe_max_abs_disc as u64 {
                order_probe = probe_element_order(d, order, cfg.probe_order_bound);
                if order_probe == Some(false) {
                    claim = ClaimStatus::Fails;
                }
            }
        }
    }
    Ok(FamilyRecord {
        params,
        trinomial: t,
        delta,
        discriminant: disc,
        irreducible: irr,
        monogenic,
        criterion,
        criterion_applies,
        member,
        gate,
        witness: None,
        galois: None,
        field,
        h,
        n_claimed: order,
        claim,
        order_probe,
        checks,
    })
}

/// Whether the class group of `disc < 0` has an element of order `n`:
/// some reduced form whose order is a multiple of `n`. `None` when a form
/// order exceeds `bound` before a witness turns up.
pub fn probe_element_order(disc: i64, n: u64, bound: u64) -> Option<bool> {
    let forms = quadfield::reduced_forms_imaginary(disc).ok()?;
    let mut undecided = false;
    for form in forms {
        match quadfield::form_order(form, disc, bound).ok()? {
            Some(k) if k % n == 0 => return Some(true),
            Some(_) => {}
            None => undecided = true,
        }
    }
    (!undecided).then_some(false)
}

/// A reduced form whose order is a multiple of `n`, with that order.
pub fn order_witness(disc: i64, n: u64, bound: u64) -> Option<(QuadForm, u64)> {
    let forms = quadfield::reduced_forms_imaginary(disc).ok()?;
    forms.into_iter().find_map(|form| match quadfield::form_order(form, disc, bound) {
        Ok(Some(k)) if k % n == 0 => Some((form, k)),
        _ => None,
    })
}

pub fn analyze(params: Params, cfg: &FamilyConfig) -> Result<FamilyRecord, FamilyError> {
    match params {
        Params::Main1 { w } => main1_analyze(w, cfg),
        Params::Main2 { a, b } => main2_analyze(a, b, cfg),
        Params::Main3 { n, b } => main3_analyze(n, b, cfg),
        Params::Main4 { n, b } => main4_analyze(n, b, cfg),
    }
}

// ---------------------------------------------------------------------------
// scans

/// Inclusive parameter ranges for [`scan`]. For Main3 and Main4 the
/// degrees outside the family's residue class are skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanRange {
    Main1 { w: (i64, i64) },
    Main2 { a: (u32, u32), b: (u32, u32) },
    Main3 { n: (u32, u32), b: (u32, u32) },
    Main4 { n: (u32, u32), b: (u32, u32) },
}

impl ScanRange {
    /// Parameter tuples in lexicographic order.
    pub fn params(&self) -> Vec<Params> {
        let grid = |x: (u32, u32), y: (u32, u32)| {
            (x.0..=x.1).flat_map(move |i| (y.0..=y.1).map(move |j| (i, j)))
        };
        match *self {
            ScanRange::Main1 { w } => (w.0..=w.1).map(|w| Params::Main1 { w }).collect(),
            ScanRange::Main2 { a, b } => grid(a, b).map(|(a, b)| Params::Main2 { a, b }).collect(),
            ScanRange::Main3 { n, b } => grid(n, b)
                .filter(|&(n, _)| n >= 6 && n % 4 == 2)
                .map(|(n, b)| Params::Main3 { n, b })
                .collect(),
            ScanRange::Main4 { n, b } => grid(n, b)
                .filter(|&(n, _)| n >= 3 && n % 4 == 3)
                .map(|(n, b)| Params::Main4 { n, b })
                .collect(),
        }
    }
}

/// One record per tuple, in the order given; tuples are analyzed in parallel.
pub fn scan_params(params: &[Params], cfg: &FamilyConfig) -> Result<Vec<FamilyRecord>, FamilyError> {
    params.par_iter().map(|&p| analyze(p, cfg)).collect()
}

pub fn scan(range: &ScanRange, cfg: &FamilyConfig) -> Result<Vec<FamilyRecord>, FamilyError> {
    scan_params(&range.params(), cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinctness {
    Pass,
    /// Two records with the same degree and field discriminant.
    Fail(Params, Params),
}

/// Monogenic trinomials of equal degree generate the same field only if
/// their discriminants, which equal the field discriminants, coincide.
pub fn distinctness(records: &[FamilyRecord]) -> Result<Distinctness, FamilyError> {
    let Some(first) = records.first() else {
        return Ok(Distinctness::Pass);
    };
    let mut seen: std::collections::HashMap<(u32, &BigInt), Params> = Default::default();
    for r in records {
        if r.family() != first.family() {
            return Err(FamilyError::MixedFamilies);
        }
        if !r.monogenic.is_monogenic() {
            return Err(FamilyError::NotMonogenicRecord(r.params.to_string()));
        }
        if let Some(&other) = seen.get(&(r.trinomial.degree(), &r.discriminant)) {
            return Ok(Distinctness::Fail(other, r.params));
        }
        seen.insert((r.trinomial.degree(), &r.discriminant), r.params);
    }
    Ok(Distinctness::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> FamilyConfig {
        FamilyConfig::default()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn km_examples() {
        let k = km_conditions(&big(1), &big(1)).unwrap();
        assert_eq!((k.d.clone(), k.condition, k.d_nonsquare), (big(-23), Some(KmCondition::C1), true));
        let k = km_conditions(&big(81), &big(4)).unwrap();
        assert_eq!(k.condition, Some(KmCondition::C1));
        assert_eq!(k.d, big(81) * (big(256) - big(2187)));
        assert_eq!(km_conditions(&big(2), &big(3)).unwrap().condition, Some(KmCondition::C2));
        assert!(matches!(km_conditions(&big(3), &big(6)), Err(FamilyError::NotCoprime { .. })));
        // d = 0 is a square
        assert!(!km_conditions(&big(4), &big(3)).unwrap().d_nonsquare);
    }

    #[test]
    fn km_condition_c3_by_definition() {
        // 3 | w, uw ≡ 3 (mod 9), u ≡ w ± 1 (mod 27): u = 4, w = 3
        let k = km_conditions(&big(4), &big(3)).unwrap();
        assert_eq!(k.condition, Some(KmCondition::C3));
        // u = 1 never reaches C3
        for w in (-300..=300).filter(|w| w % 3 == 0) {
            let c = km_conditions(&big(1), &big(w)).unwrap().condition;
            assert_eq!(c.is_some(), w % 9 == 0, "w={w}");
            assert_ne!(c, Some(KmCondition::C3));
        }
    }

    #[test]
    fn gate_examples() {
        assert!(kishi_check(4, 7));
        assert!(!kishi_check(2, 3));
        assert!(!kishi_check(5, 4));
        let sf = SquarefreeStatus::Squarefree;
        assert!(ankeny_chowla_check(5, 3, &sf));
        assert!(!ankeny_chowla_check(4, 2, &sf));
        assert!(ankeny_chowla_check(5, 6, &sf));
        assert!(murty_check(3, 7, &sf));
        assert!(murty_check(7, 13, &sf));
        assert!(murty_check(9, 4, &sf));
        assert!(!murty_check(4, 3, &sf));
        assert!(!murty_check(3, 4, &sf));
        assert!(!murty_check(7, 13, &SquarefreeStatus::NotSquarefree(big(2))));
    }

    #[test]
    fn main1_examples() {
        let r = main1_analyze(-1, &cfg()).unwrap();
        assert_eq!(r.delta, big(-31));
        assert!(r.monogenic.is_monogenic());
        assert_eq!(r.h.unwrap().h, 3);
        assert_eq!(r.claim, ClaimStatus::Holds);

        let r = main1_analyze(3, &cfg()).unwrap();
        assert_eq!(r.delta, big(81));
        assert_eq!(r.member, Some(false));
        assert!(!r.criterion_applies);

        let r = main1_analyze(9, &cfg()).unwrap();
        assert!(matches!(r.monogenic, MonogenicityVerdict::NotMonogenic { .. }));
        assert_eq!(r.criterion, Some(false));

        let r = main1_analyze(2, &cfg()).unwrap();
        assert_eq!(r.monogenic, MonogenicityVerdict::NotIrreducible(big(-1)));
        assert_eq!(r.claim, ClaimStatus::NotEvaluated(NotEvaluatedReason::NotInFamily));
    }

    #[test]
    fn main2_examples() {
        let r = main2_analyze(1, 3, &cfg()).unwrap();
        assert_eq!(r.delta, big(-1931));
        assert!(r.monogenic.is_monogenic());
        assert_eq!((r.h.unwrap().h, r.n_claimed), (21, 21));
        assert_eq!(r.claim, ClaimStatus::Holds);
        assert!(r.checks.iter().all(|c| c.holds));

        let r = main2_analyze(1, 2, &cfg()).unwrap();
        assert_eq!(r.irreducible, IrreducibilityVerdict::Reducible(big(-1)));

        let r = main2_analyze(2, 6, &cfg()).unwrap();
        assert_eq!(r.delta, big(-1577939));
        assert_eq!((r.h.unwrap().h, r.n_claimed), (624, 39));
        assert!(matches!(main2_analyze(0, 3, &cfg()), Err(FamilyError::ParameterRange(_))));
    }

    #[test]
    fn main3_examples() {
        let r = main3_analyze(6, 1, &cfg()).unwrap();
        assert_eq!(r.trinomial.to_string(), "x^6 - 30x - 5");
        assert_eq!(r.delta, big(15626));
        assert!(r.monogenic.is_monogenic());
        assert_eq!((r.h.unwrap().h, r.n_claimed), (24, 3));
        assert_eq!(r.claim, ClaimStatus::Holds);
        assert!(r.checks.iter().all(|c| c.holds));

        let r = main3_analyze(6, 2, &cfg()).unwrap();
        assert_eq!(r.delta, big(244140626));
        assert_eq!(r.claim, ClaimStatus::NotEvaluated(NotEvaluatedReason::SlowPath));

        let r = main3_analyze(10, 1, &cfg()).unwrap();
        assert!(matches!(r.monogenic, MonogenicityVerdict::NotMonogenic { .. }));
        assert_eq!(r.criterion, Some(false));
        assert!(!r.criterion_mismatch());
        assert!(main3_analyze(8, 1, &cfg()).is_err());
    }

    #[test]
    fn main4_examples() {
        let r = main4_analyze(3, 2, &cfg()).unwrap();
        assert_eq!(r.trinomial.to_string(), "x^3 - x - 18");
        assert_eq!(r.delta, big(-2186));
        assert_eq!((r.h.unwrap().h, r.n_claimed), (42, 7));
        assert_eq!(r.claim, ClaimStatus::Holds);
        assert_eq!(r.order_probe, Some(true));

        let r = main4_analyze(3, 4, &cfg()).unwrap();
        assert_eq!((r.h.unwrap().h, r.n_claimed), (396, 11));

        let r = main4_analyze(7, 1, &cfg()).unwrap();
        assert_eq!(r.delta, big(-96889010406));
        assert!(r.monogenic.is_monogenic());
        assert_eq!(r.claim, ClaimStatus::NotEvaluated(NotEvaluatedReason::SlowPath));
    }

    #[test]
    fn bit_guard_leaves_verdict_unknown() {
        let small = FamilyConfig {
            max_delta_bits: 64,
            ..cfg()
        };
        let r = main4_analyze(7, 3, &small).unwrap();
        assert!(!r.monogenic.is_decided());
        assert!(matches!(r.claim, ClaimStatus::NotEvaluated(NotEvaluatedReason::Undecided(_))));
    }

    #[test]
    fn scan_shapes() {
        let recs = scan(&ScanRange::Main1 { w: (-10, 10) }, &cfg()).unwrap();
        assert_eq!(recs.len(), 21);
        let members: Vec<i64> = recs
            .iter()
            .filter(|r| r.member == Some(true))
            .map(|r| match r.params {
                Params::Main1 { w } => w,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(members, vec![-10, -7, -5, -4, -2, -1, 1, 4, 5, 7, 8, 10]);
        assert_eq!(ScanRange::Main2 { a: (1, 3), b: (2, 6) }.params().len(), 15);
        assert_eq!(
            ScanRange::Main3 { n: (6, 14), b: (1, 2) }.params(),
            vec![
                Params::Main3 { n: 6, b: 1 },
                Params::Main3 { n: 6, b: 2 },
                Params::Main3 { n: 10, b: 1 },
                Params::Main3 { n: 10, b: 2 },
                Params::Main3 { n: 14, b: 1 },
                Params::Main3 { n: 14, b: 2 },
            ]
        );
    }

    #[test]
    fn distinctness_examples() {
        let recs = scan(&ScanRange::Main1 { w: (-10, 10) }, &cfg()).unwrap();
        let members: Vec<_> = recs.into_iter().filter(|r| r.member == Some(true)).collect();
        assert_eq!(distinctness(&members).unwrap(), Distinctness::Pass);
        assert_eq!(distinctness(&members[..1]).unwrap(), Distinctness::Pass);
        let dup = vec![members[0].clone(), members[0].clone()];
        assert!(matches!(distinctness(&dup).unwrap(), Distinctness::Fail(..)));
        let mixed = vec![members[0].clone(), main2_analyze(1, 3, &cfg()).unwrap()];
        assert_eq!(distinctness(&mixed), Err(FamilyError::MixedFamilies));
    }
}
