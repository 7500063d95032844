//! Quadratic fields `Q(√δ)` and their class numbers.
//!
//! Class numbers are counted with binary quadratic forms `(a, b, c)` of
//! discriminant `D = b² − 4ac`:
//!
//! * `D < 0`: `h` is the number of primitive reduced forms
//!   (`|b| ≤ a ≤ c`, `b ≥ 0` when `|b| = a` or `a = c`). The enumeration
//!   sweeps `b` and factors `(b² − D)/4 = a·c`.
//! * `D > 0`: reduced indefinite forms fall into cycles under the reduction
//!   operator ρ, one cycle per narrow class. The narrow class number `h⁺`
//!   equals `h` when the fundamental unit has norm −1 and `2h` otherwise;
//!   the norm is read off the parity of the continued-fraction period.
//!
//! The analytic class number formula is kept as an independent oracle for
//! the real case.
//!
//! Form coefficients are `i64`; intermediate products use `i128`. Every
//! discriminant handled here must satisfy `|D| < 2^62`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{self, factor_u64, kronecker_i64, FactorBudget, FactoredInt, SquarefreeStatus};

/// Largest `|D|` accepted by the form machinery.
pub const MAX_ABS_DISCRIMINANT: i64 = 1 << 62;

/// Default bound on `D` for [`class_number_real_analytic`].
pub const ANALYTIC_CUTOFF: i64 = 10_000_000;

/// Default distance from a half-integer that the analytic value must keep.
pub const ANALYTIC_MARGIN: f64 = 0.2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadFieldError {
    #[error("δ must not be 0 or 1")]
    DegenerateRadicand,
    #[error("{0} is not squarefree")]
    NotSquarefree(BigInt),
    #[error("squarefreeness of δ is undecided: {0}")]
    SquarefreeUnknown(String),
    #[error("discriminant {0} is outside the supported range")]
    OutOfRange(BigInt),
    #[error("{0} is not a discriminant (must be 0 or 1 mod 4)")]
    NotADiscriminant(i64),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("expected a negative discriminant, got {0}")]
    NotNegative(i64),
    #[error("expected a positive discriminant, got {0}")]
    NotPositive(i64),
    #[error("{0} is a perfect square")]
    SquareDiscriminant(i64),
    #[error("form {form:?} does not have discriminant {disc}")]
    WrongDiscriminant { form: QuadForm, disc: i64 },
    #[error("form {0:?} is not positive definite")]
    NotPositiveDefinite(QuadForm),
    #[error("form {0:?} is not primitive")]
    Imprimitive(QuadForm),
    #[error("discriminant {disc} exceeds the analytic cutoff {cutoff}")]
    AboveCutoff { disc: i64, cutoff: i64 },
}

/// The form `a·x² + b·xy + c·y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// The identity of the form class group of discriminant `disc`.
    pub fn principal(disc: i64) -> Result<QuadForm, QuadFieldError> {
        check_discriminant(disc)?;
        Ok(if disc.rem_euclid(4) == 0 {
            QuadForm::new(1, 0, -disc / 4)
        } else {
            QuadForm::new(1, 1, (1 - disc) / 4)
        })
    }

    pub fn inverse(&self) -> QuadForm {
        QuadForm::new(self.a, -self.b, self.c)
    }

    fn from_wide(a: i128, b: i128, c: i128) -> QuadForm {
        let narrow = |v: i128| i64::try_from(v).expect("reduced form coefficient exceeds i64");
        QuadForm::new(narrow(a), narrow(b), narrow(c))
    }
}

impl std::fmt::Display for QuadForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassNumberMethod {
    FormEnumeration,
    CycleCount,
    Analytic,
}

impl ClassNumberMethod {
    pub fn name(self) -> &'static str {
        match self {
            ClassNumberMethod::FormEnumeration => "FormEnumeration",
            ClassNumberMethod::CycleCount => "CycleCount",
            ClassNumberMethod::Analytic => "Analytic",
        }
    }
}

/// A class number and how it was obtained. `narrow_h` and `unit_norm` are
/// present for real fields only, with `narrow_h = h` when the fundamental
/// unit has norm −1 and `narrow_h = 2h` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassNumberResult {
    pub h: u64,
    pub method: ClassNumberMethod,
    pub narrow_h: Option<u64>,
    pub unit_norm: Option<i8>,
}

/// `Q(√δ)` for squarefree `δ ∉ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadField {
    delta: BigInt,
    disc: BigInt,
}

impl QuadField {
    /// Certifies `δ` squarefree within `budget`.
    pub fn new(delta: &BigInt, budget: &FactorBudget) -> Result<Self, QuadFieldError> {
        if delta.is_zero() || delta.is_one() {
            return Err(QuadFieldError::DegenerateRadicand);
        }
        match arith::squarefree_status(delta, budget).expect("nonzero") {
            SquarefreeStatus::Squarefree => {}
            SquarefreeStatus::NotSquarefree(_) => {
                return Err(QuadFieldError::NotSquarefree(delta.clone()))
            }
            SquarefreeStatus::Unknown(why) => return Err(QuadFieldError::SquarefreeUnknown(why)),
        }
        Ok(QuadField {
            delta: delta.clone(),
            disc: attach_discriminant(delta),
        })
    }

    /// As [`QuadField::new`], reusing a factorization of `δ`.
    pub fn from_factored(delta: &FactoredInt) -> Result<Self, QuadFieldError> {
        let value = delta.value();
        if value.is_zero() || value.is_one() {
            return Err(QuadFieldError::DegenerateRadicand);
        }
        match arith::squarefree_from(delta) {
            SquarefreeStatus::Squarefree => Ok(QuadField {
                delta: value.clone(),
                disc: attach_discriminant(value),
            }),
            SquarefreeStatus::NotSquarefree(_) => Err(QuadFieldError::NotSquarefree(value.clone())),
            SquarefreeStatus::Unknown(why) => Err(QuadFieldError::SquarefreeUnknown(why)),
        }
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    /// The fundamental discriminant `D`.
    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn is_imaginary(&self) -> bool {
        self.delta.is_negative()
    }

    /// `D` as a machine integer, if inside the supported range.
    pub fn discriminant_i64(&self) -> Result<i64, QuadFieldError> {
        self.disc
            .to_i64()
            .filter(|d| d.unsigned_abs() < MAX_ABS_DISCRIMINANT as u64)
            .ok_or_else(|| QuadFieldError::OutOfRange(self.disc.clone()))
    }

    /// Forms for `D < 0`, cycles for `D > 0`.
    pub fn class_number(&self) -> Result<ClassNumberResult, QuadFieldError> {
        let d = self.discriminant_i64()?;
        if d < 0 {
            class_number_imaginary(d)
        } else {
            class_number_real(d)
        }
    }
}

fn attach_discriminant(delta: &BigInt) -> BigInt {
    if delta.mod_floor(&BigInt::from(4)).is_one() {
        delta.clone()
    } else {
        delta * 4
    }
}

/// `D = δ` if `δ ≡ 1 (mod 4)`, else `4δ`. Square factors below 10^4 are
/// detected and rejected; larger ones are the caller's responsibility.
pub fn fundamental_discriminant(delta: &BigInt) -> Result<BigInt, QuadFieldError> {
    if delta.is_zero() || delta.is_one() {
        return Err(QuadFieldError::DegenerateRadicand);
    }
    let cheap = FactorBudget {
        trial_bound: 10_000,
        rho_iterations: 0,
        ..FactorBudget::default()
    };
    if let SquarefreeStatus::NotSquarefree(_) = arith::squarefree_status(delta, &cheap).expect("nonzero") {
        return Err(QuadFieldError::NotSquarefree(delta.clone()));
    }
    Ok(attach_discriminant(delta))
}

fn check_discriminant(disc: i64) -> Result<(), QuadFieldError> {
    if disc.unsigned_abs() >= MAX_ABS_DISCRIMINANT as u64 {
        return Err(QuadFieldError::OutOfRange(BigInt::from(disc)));
    }
    if !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(QuadFieldError::NotADiscriminant(disc));
    }
    Ok(())
}

fn is_squarefree_u64(n: u64) -> bool {
    factor_u64(n).iter().all(|&(_, e)| e == 1)
}

pub fn is_fundamental_discriminant(disc: i64) -> bool {
    if disc == 0 || disc == 1 || disc.unsigned_abs() >= MAX_ABS_DISCRIMINANT as u64 {
        return false;
    }
    match disc.rem_euclid(4) {
        1 => is_squarefree_u64(disc.unsigned_abs()),
        0 => {
            let m = disc / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree_u64(m.unsigned_abs())
        }
        _ => false,
    }
}

fn require_fundamental(disc: i64) -> Result<(), QuadFieldError> {
    check_discriminant(disc)?;
    if !is_fundamental_discriminant(disc) {
        return Err(QuadFieldError::NotFundamental(disc));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// definite forms

/// The unique reduced form equivalent to a positive definite `form`.
pub fn reduce_definite(form: QuadForm, disc: i64) -> Result<QuadForm, QuadFieldError> {
    if form.discriminant() != disc as i128 {
        return Err(QuadFieldError::WrongDiscriminant { form, disc });
    }
    if disc >= 0 || form.a <= 0 {
        return Err(QuadFieldError::NotPositiveDefinite(form));
    }
    Ok(reduce_wide(form.a as i128, form.b as i128, form.c as i128))
}

fn reduce_wide(mut a: i128, mut b: i128, mut c: i128) -> QuadForm {
    loop {
        if !(-a < b && b <= a) {
            // b ← b + 2ra with the result in (−a, a]
            let r = (a - b).div_euclid(2 * a);
            c += r * (a * r + b);
            b += 2 * r * a;
        }
        if a > c {
            (a, b, c) = (c, -b, a);
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return QuadForm::from_wide(a, b, c);
    }
}

/// `(g, x, y)` with `x·a + y·b = g = gcd(a, b) ≥ 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

fn check_definite_input(form: QuadForm, disc: i64) -> Result<(), QuadFieldError> {
    if form.discriminant() != disc as i128 {
        return Err(QuadFieldError::WrongDiscriminant { form, disc });
    }
    if disc >= 0 || form.a <= 0 {
        return Err(QuadFieldError::NotPositiveDefinite(form));
    }
    if !form.is_primitive() {
        return Err(QuadFieldError::Imprimitive(form));
    }
    Ok(())
}

/// Gauss composition (Shanks' formulation) followed by reduction.
pub fn compose(f1: QuadForm, f2: QuadForm, disc: i64) -> Result<QuadForm, QuadFieldError> {
    check_definite_input(f1, disc)?;
    check_definite_input(f2, disc)?;
    let (f1, f2) = if f1.a > f2.a { (f2, f1) } else { (f1, f2) };
    let (a1, b1) = (f1.a as i128, f1.b as i128);
    let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
    let s = (b1 + b2) / 2;
    let n = b2 - s;
    let (d, y1) = if a2 % a1 == 0 {
        (a1, 0)
    } else {
        let (g, u, _) = ext_gcd(a2, a1);
        (g, u)
    };
    let (d1, x2, y2) = if s % d == 0 {
        (d, 0, -1)
    } else {
        let (g, x, y) = ext_gcd(s, d);
        (g, x, -y)
    };
    let v1 = a1 / d1;
    let v2 = a2 / d1;
    let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
    let b3 = b2 + 2 * v2 * r;
    let a3 = v1 * v2;
    let c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
    Ok(reduce_wide(a3, b3, c3))
}

/// Least `k ≤ bound` with `form^k` principal, by repeated composition;
/// `None` when the bound is reached first.
pub fn form_order(form: QuadForm, disc: i64, bound: u64) -> Result<Option<u64>, QuadFieldError> {
    check_definite_input(form, disc)?;
    let identity = QuadForm::principal(disc)?;
    let base = reduce_definite(form, disc)?;
    let mut acc = base;
    for k in 1..=bound {
        if acc == identity {
            return Ok(Some(k));
        }
        acc = compose(acc, base, disc)?;
    }
    Ok(None)
}

/// All divisors of `n ≥ 1`, unsorted.
fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out
}

const SWEEP_CHUNK: u64 = 512;

/// Primitive reduced forms of a negative discriminant, sorted by `(a, b)`.
pub fn reduced_forms_imaginary(disc: i64) -> Result<Vec<QuadForm>, QuadFieldError> {
    reduced_forms_imaginary_with_progress(disc, &|_, _| {})
}

/// As [`reduced_forms_imaginary`], reporting `(b values done, total)` as
/// the sweep advances. Chunks of the `b` range run in parallel; the result
/// does not depend on the partition.
pub fn reduced_forms_imaginary_with_progress(
    disc: i64,
    progress: &(dyn Fn(u64, u64) + Sync),
) -> Result<Vec<QuadForm>, QuadFieldError> {
    if disc >= 0 {
        return Err(QuadFieldError::NotNegative(disc));
    }
    check_discriminant(disc)?;
    let abs = disc.unsigned_abs();
    // b ≤ a ≤ c forces 3b² ≤ |D|
    let b_max = (abs / 3).sqrt();
    let parity = abs % 2;
    let b_values: Vec<u64> = (0..=b_max).filter(|b| b % 2 == parity).collect();
    let total = b_values.len() as u64;
    let done = AtomicU64::new(0);
    let mut forms: Vec<QuadForm> = b_values
        .par_chunks(SWEEP_CHUNK as usize)
        .flat_map_iter(|chunk| {
            let mut local = Vec::new();
            for &b in chunk {
                forms_with_b(b, abs, &mut local);
            }
            let finished = done.fetch_add(chunk.len() as u64, Ordering::Relaxed) + chunk.len() as u64;
            progress(finished, total);
            local
        })
        .collect();
    forms.sort_unstable_by_key(|f| (f.a, f.b));
    Ok(forms)
}

fn forms_with_b(b: u64, abs_disc: u64, out: &mut Vec<QuadForm>) {
    let m = (b * b + abs_disc) / 4;
    for a in divisors(m) {
        if a < b.max(1) || a > m / a {
            continue;
        }
        let c = m / a;
        if a.gcd(&b).gcd(&c) != 1 {
            continue;
        }
        let (a, bi, c) = (a as i64, b as i64, c as i64);
        out.push(QuadForm::new(a, bi, c));
        if bi != 0 && bi != a && a != c {
            out.push(QuadForm::new(a, -bi, c));
        }
    }
}

/// `h(D)` for a fundamental `D < 0` by counting reduced forms.
pub fn class_number_imaginary(disc: i64) -> Result<ClassNumberResult, QuadFieldError> {
    class_number_imaginary_with_progress(disc, &|_, _| {})
}

pub fn class_number_imaginary_with_progress(
    disc: i64,
    progress: &(dyn Fn(u64, u64) + Sync),
) -> Result<ClassNumberResult, QuadFieldError> {
    if disc >= 0 {
        return Err(QuadFieldError::NotNegative(disc));
    }
    require_fundamental(disc)?;
    let forms = reduced_forms_imaginary_with_progress(disc, progress)?;
    Ok(ClassNumberResult {
        h: forms.len() as u64,
        method: ClassNumberMethod::FormEnumeration,
        narrow_h: None,
        unit_norm: None,
    })
}

// ---------------------------------------------------------------------------
// indefinite forms

/// Continued fraction data of `ω_D`, where `ω_D = (1 + √D)/2` for
/// `D ≡ 1 (mod 4)` and `√D/2` for `D ≡ 0 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuedFraction {
    pub period: u64,
    /// Norm of the fundamental unit: −1 iff the period is odd.
    pub unit_norm: i8,
    /// `ln ε`, summed over the complete quotients of one period.
    pub regulator: f64,
}

fn check_real(disc: i64) -> Result<u64, QuadFieldError> {
    if disc <= 0 {
        return Err(QuadFieldError::NotPositive(disc));
    }
    check_discriminant(disc)?;
    let s = (disc as u64).sqrt();
    if s * s == disc as u64 {
        return Err(QuadFieldError::SquareDiscriminant(disc));
    }
    Ok(s)
}

/// Iterates `x_i = (P_i + √D)/Q_i` from `x_0 = ω_D`.
struct Quotients {
    disc: i128,
    root: i128,
    p: i128,
    q: i128,
}

impl Quotients {
    fn new(disc: i64, root: u64) -> Self {
        let p = if disc % 4 == 1 { 1 } else { 0 };
        Quotients { disc: disc as i128, root: root as i128, p, q: 2 }
    }

    /// Partial quotient of the current term, then advances.
    fn step(&mut self) -> i128 {
        let a = (self.p + self.root).div_euclid(self.q);
        let p_next = a * self.q - self.p;
        self.q = (self.disc - p_next * p_next) / self.q;
        self.p = p_next;
        a
    }

    fn state(&self) -> (i128, i128) {
        (self.p, self.q)
    }

    fn complete_quotient(&self) -> f64 {
        (self.p as f64 + (self.disc as f64).sqrt()) / self.q as f64
    }
}

pub fn continued_fraction_sqrt(disc: i64) -> Result<ContinuedFraction, QuadFieldError> {
    let root = check_real(disc)?;
    let mut it = Quotients::new(disc, root);
    it.step();
    let start = it.state();
    let mut period = 0u64;
    let mut regulator = 0.0f64;
    loop {
        regulator += it.complete_quotient().ln();
        it.step();
        period += 1;
        if it.state() == start {
            break;
        }
    }
    Ok(ContinuedFraction {
        period,
        unit_norm: if period % 2 == 1 { -1 } else { 1 },
        regulator,
    })
}

/// The fundamental unit `ε = (x + y√D)/2 > 1`, exactly, from the
/// convergents of `ω_D` over one period.
pub fn fundamental_unit(disc: i64) -> Result<(BigInt, BigInt), QuadFieldError> {
    let root = check_real(disc)?;
    let period = continued_fraction_sqrt(disc)?.period;
    let mut it = Quotients::new(disc, root);
    // p_{-1} = 1, p_{-2} = 0; q_{-1} = 0, q_{-2} = 1
    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q) = (BigInt::one(), BigInt::zero());
    for _ in 0..period {
        let a = BigInt::from(it.step());
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        (p_prev, p) = (p, p_next);
        (q_prev, q) = (q, q_next);
    }
    // ε = p − q·ω̄
    if disc % 4 == 1 {
        Ok((&p * 2 - &q, q))
    } else {
        Ok((p * 2, q))
    }
}

/// Primitive reduced indefinite forms: `0 < b < √D` and
/// `√D − b < 2|a| < √D + b`.
pub fn reduced_forms_real(disc: i64) -> Result<Vec<QuadForm>, QuadFieldError> {
    let root = check_real(disc)?;
    let d = disc as u64;
    let b_values: Vec<u64> = (1..=root).filter(|b| b % 2 == d % 2).collect();
    let mut forms: Vec<QuadForm> = b_values
        .par_chunks(SWEEP_CHUNK as usize)
        .flat_map_iter(|chunk| {
            let mut local = Vec::new();
            for &b in chunk {
                let m = (d - b * b) / 4;
                for a in divisors(m) {
                    // x < √D ⟺ x ≤ ⌊√D⌋ for integers, D not a square
                    if 2 * a + b <= root || (2 * a).saturating_sub(b) > root {
                        continue;
                    }
                    let c = m / a;
                    if a.gcd(&b).gcd(&c) != 1 {
                        continue;
                    }
                    let (a, bi, c) = (a as i64, b as i64, c as i64);
                    local.push(QuadForm::new(a, bi, -c));
                    local.push(QuadForm::new(-a, bi, c));
                }
            }
            local
        })
        .collect();
    forms.sort_unstable();
    Ok(forms)
}

/// One reduction step `ρ(a, b, c) = (c, r, (r² − D)/4c)` on a reduced
/// indefinite form, with `r ≡ −b (mod 2c)` and `√D − 2|c| < r < √D`.
pub fn rho(form: QuadForm, disc: i64, root: u64) -> QuadForm {
    let (b, c) = (form.b as i128, form.c as i128);
    let m = 2 * c.abs();
    let s = root as i128;
    let r = s - (s + b).rem_euclid(m);
    let c_next = (r * r - disc as i128) / (4 * c);
    QuadForm::from_wide(c, r, c_next)
}

/// `h(D)` for a fundamental `D > 0`: cycles of reduced forms give `h⁺`,
/// corrected by the norm of the fundamental unit.
pub fn class_number_real(disc: i64) -> Result<ClassNumberResult, QuadFieldError> {
    let root = check_real(disc)?;
    require_fundamental(disc)?;
    let forms = reduced_forms_real(disc)?;
    let mut seen: HashMap<QuadForm, bool> = forms.iter().map(|&f| (f, false)).collect();
    let mut cycles = 0u64;
    for &start in &forms {
        if seen[&start] {
            continue;
        }
        cycles += 1;
        let mut f = start;
        loop {
            *seen.get_mut(&f).expect("ρ maps reduced forms to reduced forms") = true;
            f = rho(f, disc, root);
            if f == start {
                break;
            }
        }
    }
    let cf = continued_fraction_sqrt(disc)?;
    let h = if cf.unit_norm == -1 { cycles } else { cycles / 2 };
    Ok(ClassNumberResult {
        h,
        method: ClassNumberMethod::CycleCount,
        narrow_h: Some(cycles),
        unit_norm: Some(cf.unit_norm),
    })
}

/// Neumaier's compensated sum.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// The real class number from the finite analytic formula
/// `h = −(1/(2 ln ε)) Σ_{a=1}^{D−1} χ_D(a) ln(2 sin(πa/D))`.
///
/// Returns `Ok(None)` when the computed value lies within `margin` of a
/// half-integer, i.e. when rounding would not be trustworthy.
pub fn class_number_real_analytic(
    disc: i64,
    cutoff: i64,
    margin: f64,
) -> Result<Option<ClassNumberResult>, QuadFieldError> {
    check_real(disc)?;
    require_fundamental(disc)?;
    if disc > cutoff {
        return Err(QuadFieldError::AboveCutoff { disc, cutoff });
    }
    let cf = continued_fraction_sqrt(disc)?;
    let mut acc = CompensatedSum::default();
    let df = disc as f64;
    // χ_D is even for D > 0, so the terms for a and D − a coincide
    for a in 1..=(disc - 1) / 2 {
        let chi = kronecker_i64(disc, a);
        if chi != 0 {
            let term = (2.0 * (std::f64::consts::PI * a as f64 / df).sin()).ln();
            acc.add(chi as f64 * term);
        }
    }
    let value = -acc.value() / cf.regulator;
    let nearest = value.round();
    if 0.5 - (value - nearest).abs() < margin || nearest < 1.0 {
        return Ok(None);
    }
    let h = nearest as u64;
    Ok(Some(ClassNumberResult {
        h,
        method: ClassNumberMethod::Analytic,
        narrow_h: Some(if cf.unit_norm == -1 { h } else { 2 * h }),
        unit_norm: Some(cf.unit_norm),
    }))
}
