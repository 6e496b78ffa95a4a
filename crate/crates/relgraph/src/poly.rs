//! Dense integer polynomials in the failure probability `p`, plus the exact
//! Bernstein/power basis change. All coefficient arithmetic is over
//! unbounded integers; floating point never enters here.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Binomial coefficient as an unbounded integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Polynomial in the power basis: `coeffs[i]` multiplies `p^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Poly {
                coeffs: vec![BigInt::from(c)],
            }
        }
    }

    /// `1 - p`
    pub fn q() -> Self {
        Poly {
            coeffs: vec![BigInt::one(), BigInt::from(-1)],
        }
    }

    /// `p`
    pub fn p() -> Self {
        Poly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly { coeffs: out }.trim()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly { coeffs: out }.trim()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly { coeffs: out }.trim()
    }

    /// `p^a (1-p)^b`
    pub fn bernstein_term(a: usize, b: usize) -> Poly {
        let mut out = Poly {
            coeffs: vec![BigInt::one()],
        };
        for _ in 0..b {
            out = out.mul(&Poly::q());
        }
        let mut coeffs = vec![BigInt::zero(); a];
        coeffs.extend(out.coeffs);
        Poly { coeffs }
    }

    /// Power coefficients padded/truncated to length `len`.
    pub fn coeffs_padded(&self, len: usize) -> Vec<BigInt> {
        let mut out = self.coeffs.clone();
        out.resize(len, BigInt::zero());
        out
    }
}

/// Power coefficients `a_0..a_m` from Bernstein coefficients `b_0..b_m`:
/// `a_j = sum_k b_k * C(m-k, j-k) * (-1)^(j-k)`.
pub fn bernstein_to_power(b: &[BigInt]) -> Vec<BigInt> {
    let m = b.len() - 1;
    let mut a = vec![BigInt::zero(); m + 1];
    for (k, bk) in b.iter().enumerate() {
        if bk.is_zero() {
            continue;
        }
        for j in k..=m {
            let c = BigInt::from(binomial(m - k, j - k));
            if (j - k) % 2 == 0 {
                a[j] += bk * c;
            } else {
                a[j] -= bk * c;
            }
        }
    }
    a
}

/// Bernstein coefficients `b_0..b_m` from power coefficients `a_0..a_m`:
/// `b_k = sum_j a_j * C(m-j, k-j)`.
pub fn power_to_bernstein(a: &[BigInt]) -> Vec<BigInt> {
    let m = a.len() - 1;
    let mut b = vec![BigInt::zero(); m + 1];
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        for k in j..=m {
            b[k] += aj * BigInt::from(binomial(m - j, k - j));
        }
    }
    b
}
