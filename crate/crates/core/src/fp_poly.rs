//! Polynomials over a prime field `F_p` with `p < 2^32`.

use crate::arith::mul_mod;

/// Coefficients low to high, trimmed, reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub(crate) fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly {
            p,
            c: coeffs.into_iter().map(|x| x % p).collect(),
        };
        f.trim();
        f
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub(crate) fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = other.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        FpPoly::new(self.p, c)
    }

    fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::new(self.p, Vec::new());
        }
        let mut c = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, c)
    }

    fn inv(&self, a: u64) -> u64 {
        crate::arith::pow_mod(a, self.p - 2, self.p)
    }

    /// Quotient and remainder.
    pub(crate) fn div_rem(&self, m: &FpPoly) -> (FpPoly, FpPoly) {
        let dm = m.degree().expect("division by zero polynomial");
        let lead_inv = self.inv(m.c[dm]);
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len().saturating_sub(dm)];
        while r.len() > dm {
            let top = r.len() - 1;
            let coef = mul_mod(r[top], lead_inv, self.p);
            if coef != 0 {
                q[top - dm] = coef;
                for k in 0..=dm {
                    let idx = top - dm + k;
                    r[idx] = (r[idx] + self.p - mul_mod(coef, m.c[k], self.p)) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (FpPoly::new(self.p, q), FpPoly::new(self.p, r))
    }

    pub(crate) fn rem(&self, m: &FpPoly) -> FpPoly {
        self.div_rem(m).1
    }

    pub(crate) fn mul_mod(&self, other: &FpPoly, m: &FpPoly) -> FpPoly {
        self.mul(other).rem(m)
    }

    /// `self^e mod m`.
    pub(crate) fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

/// Rabin's test: `f` of degree `n` is irreducible over `F_p` iff
/// `x^(p^n) ≡ x (mod f)` and `gcd(x^(p^(n/ℓ)) - x, f) = 1` for each prime
/// `ℓ | n`.
pub(crate) fn is_irreducible(f: &FpPoly) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let p = f.p;
    let x = FpPoly::x(p).rem(f);
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![x.clone()];
    for k in 1..=n {
        let next = frob[k - 1].pow_mod(p, f);
        frob.push(next);
    }
    if frob[n] != x {
        return false;
    }
    let mut m = n;
    let mut l = 2;
    let mut prime_divisors = Vec::new();
    while l * l <= m {
        if m % l == 0 {
            prime_divisors.push(l);
            while m % l == 0 {
                m /= l;
            }
        }
        l += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    prime_divisors.into_iter().all(|l| {
        let g = frob[n / l].sub(&x).gcd(f);
        g.degree() == Some(0)
    })
}

/// Degrees of the irreducible factors of a squarefree monic `f`, sorted,
/// by distinct-degree factorization.
pub(crate) fn factor_degrees(f: &FpPoly) -> Vec<usize> {
    let p = f.p;
    let mut g = f.clone();
    let mut h = FpPoly::x(p);
    let mut out = Vec::new();
    let mut d = 1;
    while g.degree().is_some_and(|n| n >= 2 * d) {
        // h = x^(p^d) mod g
        h = h.pow_mod(p, &g);
        let common = h.sub(&FpPoly::x(p)).gcd(&g);
        let k = common.degree().unwrap_or(0);
        if k > 0 {
            out.extend(std::iter::repeat(d).take(k / d));
            g = g.div_rem(&common).0;
            h = h.rem(&g);
        }
        d += 1;
    }
    if let Some(n) = g.degree().filter(|&n| n > 0) {
        out.push(n);
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_has_no_factor(p: u64, coeffs: &[u64]) -> bool {
        // try every monic polynomial of degree 1..=n/2 as a divisor
        let f = FpPoly::new(p, coeffs.to_vec());
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    c.push(v % p);
                    v /= p;
                }
                c.push(1);
                let g = FpPoly::new(p, c);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn matches_brute_force_for_small_fields() {
        for p in [2u64, 3, 5] {
            for n in 2..=4usize {
                let total = p.pow(n as u32);
                for idx in 0..total {
                    let mut c = Vec::new();
                    let mut v = idx;
                    for _ in 0..n {
                        c.push(v % p);
                        v /= p;
                    }
                    c.push(1);
                    let f = FpPoly::new(p, c.clone());
                    assert_eq!(
                        is_irreducible(&f),
                        brute_force_has_no_factor(p, &c),
                        "p={p} f={c:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_patterns_of_products() {
        // x^5 + x + 1 = (x² + x + 1)(x³ + x² + 1) over F_2
        assert_eq!(factor_degrees(&FpPoly::new(2, vec![1, 1, 0, 0, 0, 1])), vec![2, 3]);
        // x^4 − 1 = (x − 1)(x + 1)(x² + 1) over F_3
        assert_eq!(factor_degrees(&FpPoly::new(3, vec![2, 0, 0, 0, 1])), vec![1, 1, 2]);

        // products of distinct irreducibles of degrees 1..=4 over F_5
        let p: u64 = 5;
        let mut irreducibles: Vec<Vec<FpPoly>> = vec![Vec::new(); 5];
        for d in 1..=4usize {
            for idx in 0..p.pow(d as u32) {
                let mut c: Vec<u64> = (0..d).map(|i| idx / p.pow(i as u32) % p).collect();
                c.push(1);
                let f = FpPoly::new(p, c);
                if is_irreducible(&f) && irreducibles[d].len() < 3 {
                    irreducibles[d].push(f);
                }
            }
        }
        for pick in [vec![(1, 0), (1, 1), (2, 0)], vec![(4, 0), (3, 1)], vec![(2, 0), (2, 1), (2, 2), (1, 2)], vec![(4, 2)]] {
            let mut f = FpPoly::new(p, vec![1]);
            let mut degrees = Vec::new();
            for (d, i) in pick {
                f = f.mul(&irreducibles[d][i]);
                degrees.push(d);
            }
            degrees.sort_unstable();
            assert_eq!(factor_degrees(&f), degrees);
        }
    }
}
