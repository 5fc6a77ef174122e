//! Univariate polynomials over F_{q²} in the packed-code representation.
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty vector.

use crate::gf::{Fq2Table, FQ2_ONE, FQ2_ZERO};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<u32>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![FQ2_ONE])
    }

    pub fn constant(c: u32) -> Self {
        if c == FQ2_ZERO {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&FQ2_ZERO) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        *self.0.last().unwrap_or(&FQ2_ZERO)
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(FQ2_ZERO)
    }

    pub fn is_unit(&self) -> bool {
        self.0.len() == 1
    }

    pub fn add(&self, other: &Poly, f: &Fq2Table) -> Poly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly, f: &Fq2Table) -> Poly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: u32, f: &Fq2Table) -> Poly {
        if c == FQ2_ZERO {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Multiplication by D^k.
    pub fn shifted(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FQ2_ZERO; k];
        coeffs.extend_from_slice(&self.0);
        Poly(coeffs)
    }

    pub fn mul(&self, other: &Poly, f: &Fq2Table) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FQ2_ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == FQ2_ZERO {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly, f: &Fq2Table) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.0.len() - 1;
        if self.0.len() < divisor.0.len() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.0.clone();
        let mut quot = vec![FQ2_ZERO; self.0.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == FQ2_ZERO {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dj) in divisor.0.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, dj));
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn make_monic(&self, f: &Fq2Table) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.leading()), f)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly, f: &Fq2Table) -> Poly {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            let (_, r) = r0.div_rem(&r1, f);
            r0 = r1;
            r1 = r;
        }
        r0.make_monic(f)
    }

    pub fn eval(&self, x: u32, f: &Fq2Table) -> u32 {
        let mut acc = FQ2_ZERO;
        for &c in self.0.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }
}
