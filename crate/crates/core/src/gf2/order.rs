//! Multiplicative order and primitivity of matrices in GL(m, F2).

use super::BitMatrix;
use crate::error::{Error, Result};

impl BitMatrix {
    /// Least n ≥ 1 with selfⁿ = I, found by repeated multiplication.
    ///
    /// Gives up with [`Error::CapExceeded`] once n would pass `cap`.
    pub fn multiplicative_order(&self, cap: u64) -> Result<u64> {
        if cap == 0 {
            return Err(Error::InvalidArgument("order cap must be at least 1".into()));
        }
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let mut power = self.clone();
        let mut n = 1u64;
        while !power.is_identity() {
            if n >= cap {
                return Err(Error::CapExceeded { cap });
            }
            power = &power * self;
            n += 1;
        }
        Ok(n)
    }

    /// Invertible with multiplicative order exactly 2^m − 1.
    ///
    /// Uses the group-order test (self^(2^m−1) = I and self^((2^m−1)/q) ≠ I
    /// for every prime q dividing 2^m − 1) so it stays cheap for all m ≤ 64.
    pub fn is_primitive(&self) -> bool {
        if !self.is_invertible() {
            return false;
        }
        let m = self.dim();
        let n = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        self.pow(n).is_identity() && prime_factors(n).into_iter().all(|q| !self.pow(n / q).is_identity())
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64
}

fn pow_mod(mut base: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all u64.
fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
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

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Pollard's rho (Floyd cycle finding). `n` must be odd and composite.
fn rho(n: u64) -> u64 {
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

/// Distinct prime factors, ascending.
fn prime_factors(n: u64) -> Vec<u64> {
    fn split(n: u64, out: &mut Vec<u64>) {
        if n == 1 {
            return;
        }
        if is_prime(n) {
            out.push(n);
            return;
        }
        for p in [2u64, 3, 5, 7] {
            if n.is_multiple_of(p) {
                out.push(p);
                let mut rest = n;
                while rest.is_multiple_of(p) {
                    rest /= p;
                }
                split(rest, out);
                return;
            }
        }
        let d = rho(n);
        split(d, out);
        split(n / d, out);
    }
    let mut out = Vec::new();
    split(n, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::low_mask;

    fn mat(s: &str) -> BitMatrix {
        s.parse().unwrap()
    }

    fn pj(m: usize) -> BitMatrix {
        &BitMatrix::pascal_p(m).unwrap() * &BitMatrix::antidiag_j(m).unwrap()
    }

    #[test]
    fn order_examples() {
        assert_eq!(BitMatrix::identity(5).unwrap().multiplicative_order(10), Ok(1));
        for m in 2..=64 {
            assert_eq!(pj(m).multiplicative_order(100), Ok(3), "m={m}");
        }
        assert_eq!(mat("11,10").multiplicative_order(10), Ok(3));
        assert_eq!(mat("11,11").multiplicative_order(10), Err(Error::Singular));
        assert_eq!(mat("11,10").multiplicative_order(2), Err(Error::CapExceeded { cap: 2 }));
        assert!(mat("11,10").multiplicative_order(0).is_err());
    }

    #[test]
    fn primitive_examples() {
        assert!(!BitMatrix::identity(2).unwrap().is_primitive());
        assert!(mat("11,10").is_primitive());
        assert!(!pj(3).is_primitive());
        assert!(mat("1").is_primitive());
        assert!(!mat("0").is_primitive());
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(u64::MAX), vec![3, 5, 17, 257, 641, 65537, 6700417]);
        assert_eq!(prime_factors((1 << 61) - 1), vec![(1 << 61) - 1]);
        assert_eq!(prime_factors((1 << 12) - 1), vec![3, 5, 7, 13]);
        for m in 1..=64u32 {
            let n = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
            let f = prime_factors(n);
            let mut rest = n;
            for q in &f {
                assert!(is_prime(*q));
                while rest % q == 0 {
                    rest /= q;
                }
            }
            assert_eq!(rest, 1, "m={m}");
        }
    }

    /// Companion matrix of x^m + x + 1 style trinomials; x^7+x+1 and x^63+x+1 are primitive.
    fn companion(m: usize, taps: &[usize]) -> BitMatrix {
        // x_{k+1} = shift; feedback from taps into the last row
        let mut rows = vec![0u64; m];
        for (i, row) in rows.iter_mut().enumerate().take(m - 1) {
            *row = 1 << (i + 1);
        }
        rows[m - 1] = taps.iter().fold(0, |acc, &t| acc | (1 << t));
        BitMatrix::from_rows(m, &rows).unwrap()
    }

    #[test]
    fn primitive_trinomials_large_m() {
        // x^7 + x + 1 is primitive: feedback x_{k+7} = x_{k+1} + x_k
        assert!(companion(7, &[0, 1]).is_primitive());
        assert!(companion(63, &[0, 1]).is_primitive());
        // x^8 + x + 1 = (x^2 + x + 1)(x^6 + x^5 + x^3 + x^2 + 1) is reducible
        assert!(!companion(8, &[0, 1]).is_primitive());
    }

    #[test]
    fn primitive_agrees_with_order_exhaustive() {
        for m in 1..=4usize {
            let n = (1u64 << m) - 1;
            for k in 0..(1u64 << (m * m)) {
                let rows: Vec<u64> = (0..m).map(|i| (k >> (i * m)) & low_mask(m)).collect();
                let a = BitMatrix::from_rows(m, &rows).unwrap();
                let by_order = a.multiplicative_order(n).map(|o| o == n).unwrap_or(false);
                assert_eq!(a.is_primitive(), by_order, "{a:?}");
            }
        }
    }
}
