//! Exact scalars of the form `(a + b·i)·π^k` with rational `a`, `b` and integer `k`.
//!
//! All ring operations are exact. The π-exponent is additive under
//! multiplication; addition requires both operands to carry the same
//! π-exponent (zero is compatible with everything). Constants such as
//! `(−2πi)^{-1}` therefore stay exact through every algebraic pipeline.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

/// Arbitrary-precision rational, re-exported for the exact modules.
pub type Rat = BigRational;

/// Build a rational from an integer pair `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact complex-rational multiple of an integer power of π.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    pub re: Rat,
    pub im: Rat,
    pub pi_exp: i32,
}

impl Scalar {
    pub fn new(re: Rat, im: Rat, pi_exp: i32) -> Self {
        Scalar { re, im, pi_exp }.normalized()
    }

    pub fn zero() -> Self {
        Scalar {
            re: Rat::zero(),
            im: Rat::zero(),
            pi_exp: 0,
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: rat(n, 1),
            im: Rat::zero(),
            pi_exp: 0,
        }
    }

    pub fn from_rat(re: Rat) -> Self {
        Scalar {
            re,
            im: Rat::zero(),
            pi_exp: 0,
        }
    }

    /// `(p/q)·i`
    pub fn imag(p: i64, q: i64) -> Self {
        Scalar {
            re: Rat::zero(),
            im: rat(p, q),
            pi_exp: 0,
        }
    }

    /// `(p/q)·π^k`
    pub fn pi_pow(p: i64, q: i64, k: i32) -> Self {
        Scalar {
            re: rat(p, q),
            im: Rat::zero(),
            pi_exp: k,
        }
        .normalized()
    }

    /// The constant `(−2πi)^{−1} = (i/2)·π^{−1}`.
    pub fn inv_neg_two_pi_i() -> Self {
        Scalar {
            re: Rat::zero(),
            im: rat(1, 2),
            pi_exp: -1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Zero keeps a canonical π-exponent of 0 so that equality is structural.
    fn normalized(mut self) -> Self {
        if self.is_zero() {
            self.pi_exp = 0;
        }
        self
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
            pi_exp: self.pi_exp,
        }
    }

    /// Exact multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero Scalar");
        let norm = &self.re * &self.re + &self.im * &self.im;
        Scalar {
            re: &self.re / &norm,
            im: -&self.im / &norm,
            pi_exp: -self.pi_exp,
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        Scalar {
            re: &self.re * c,
            im: &self.im * c,
            pi_exp: self.pi_exp,
        }
        .normalized()
    }

    /// Numeric value `(re + i·im)·π^k` as a complex pair.
    pub fn to_complex(&self) -> (f64, f64) {
        let p = std::f64::consts::PI.powi(self.pi_exp);
        (rat_to_f64(&self.re) * p, rat_to_f64(&self.im) * p)
    }

    /// Numeric value for real scalars; panics if the imaginary part is nonzero.
    pub fn to_f64(&self) -> f64 {
        assert!(self.is_real(), "to_f64 on a non-real Scalar");
        rat_to_f64(&self.re) * std::f64::consts::PI.powi(self.pi_exp)
    }
}

/// Convert a big rational to f64 (correct to one ulp for the magnitudes used here).
pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // Scale down so both parts fit in f64 without overflow.
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let n2 = n >> shift;
    let d2 = d >> shift;
    bigint_to_f64(&n2) / bigint_to_f64(&d2)
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    let (sign, digits) = n.to_u64_digits();
    let mut v = 0.0f64;
    for d in digits.iter().rev() {
        v = v * 1.8446744073709552e19 + *d as f64;
    }
    match sign {
        num::bigint::Sign::Minus => -v,
        _ => v,
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        assert_eq!(
            self.pi_exp, rhs.pi_exp,
            "Scalar addition with mismatched π-exponents ({} vs {})",
            self.pi_exp, rhs.pi_exp
        );
        Scalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
            pi_exp: self.pi_exp,
        }
        .normalized()
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
            pi_exp: self.pi_exp,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
            pi_exp: self.pi_exp + rhs.pi_exp,
        }
        .normalized()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.clone() * rhs.clone()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)·π^{}", self.re, self.im, self.pi_exp)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_exp == 0 {
            if self.im.is_zero() {
                write!(f, "{}", self.re)
            } else if self.re.is_zero() {
                write!(f, "{}i", self.im)
            } else if self.im.is_positive() {
                write!(f, "{}+{}i", self.re, self.im)
            } else {
                write!(f, "{}{}i", self.re, self.im)
            }
        } else if self.im.is_zero() {
            write!(f, "{}·π^{}", self.re, self.pi_exp)
        } else {
            write!(f, "({}+{}i)·π^{}", self.re, self.im, self.pi_exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_exponent_additive_under_multiplication() {
        let a = Scalar::pi_pow(3, 2, 2);
        let b = Scalar::pi_pow(1, 3, -1);
        let p = a * b;
        assert_eq!(p.pi_exp, 1);
        assert_eq!(p.re, rat(1, 2));
    }

    #[test]
    fn inv_neg_two_pi_i_is_exact() {
        // (−2πi)·(i/(2π)) = 1
        let c = Scalar::inv_neg_two_pi_i();
        let m = Scalar {
            re: Rat::zero(),
            im: rat(-2, 1),
            pi_exp: 1,
        };
        assert_eq!(m * c, Scalar::one());
    }

    #[test]
    fn zero_is_compatible_with_any_pi_exponent() {
        let z = Scalar::zero();
        let a = Scalar::pi_pow(1, 1, 5);
        assert_eq!(z + a.clone(), a);
    }

    #[test]
    #[should_panic]
    fn mismatched_pi_exponent_addition_panics() {
        let _ = Scalar::pi_pow(1, 1, 1) + Scalar::pi_pow(1, 1, 2);
    }

    #[test]
    fn complex_inverse() {
        let s = Scalar::new(rat(1, 1), rat(2, 1), 3);
        let p = s.clone() * s.inv();
        assert_eq!(p, Scalar::one());
    }

    #[test]
    fn big_rational_to_f64() {
        assert!((rat_to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-16);
        let big = Rat::new(BigInt::from(10).pow(40) + 1, BigInt::from(3));
        let expect = 1e40 / 3.0;
        assert!((rat_to_f64(&big) - expect).abs() / expect < 1e-15);
    }
}
