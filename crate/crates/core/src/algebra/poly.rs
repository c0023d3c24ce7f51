//! Univariate polynomials with rational coefficients, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use super::rational::Rational;

/// Polynomial over Q. The coefficient vector is trimmed: the leading
/// coefficient is nonzero unless the polynomial is identically zero (then
/// the vector is empty).
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// Convenience constructor from integer coefficients, lowest first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(BigInt::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let t = &d.coeffs[i] * &c;
                rem[k + i] -= t;
            }
            quot[k] = c;
            while rem.last().map_or(false, |x| x.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Primitive integer form with the sign kept: divide by the positive
    /// rational content so all coefficients become coprime integers.
    pub fn primitive(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        RatPoly::new(ints.iter().map(|v| Rational::from(v / &g)).collect())
    }

    /// Cauchy bound: every real root lies strictly inside (-B, B).
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().expect("zero polynomial has no root bound").abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max / lead
    }

    /// True when some rational number is a root. Candidates are p/q with
    /// p | constant term and q | leading coefficient (after clearing
    /// denominators), so the test is exhaustive.
    pub fn has_rational_root(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        if self.coeff(0).is_zero() {
            return true; // x = 0
        }
        let prim = self.primitive();
        let a0 = prim.coeff(0).numer().abs();
        let an = prim.leading().unwrap().numer().abs();
        let div0 = divisors(&a0);
        let divn = divisors(&an);
        for p in &div0 {
            for q in &divn {
                let cand = Rational::new(p.clone(), q.clone());
                if prim.eval(&cand).is_zero() || prim.eval(&(-&cand)).is_zero() {
                    return true;
                }
            }
        }
        false
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // trial division; fine for the small constants used here
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn div_rem_reconstructs() {
        let a = RatPoly::from_ints(&[7, 19, -331, 401]);
        let d = RatPoly::from_ints(&[-2, 0, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap() < d.degree().unwrap());
    }

    #[test]
    fn eval_horner() {
        let p = RatPoly::from_ints(&[1, -2, 1]); // (x-1)^2
        assert_eq!(p.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(p.eval(&rat(3, 1)), rat(4, 1));
    }

    #[test]
    fn primitive_clears_denominators() {
        let p = RatPoly::new(vec![rat(1, 2), rat(3, 4)]);
        assert_eq!(p.primitive(), RatPoly::from_ints(&[2, 3]));
        let q = RatPoly::new(vec![rat(-4, 1), rat(8, 1)]);
        assert_eq!(q.primitive(), RatPoly::from_ints(&[-1, 2]));
    }

    #[test]
    fn rational_root_test() {
        assert!(RatPoly::from_ints(&[-2, 1]).has_rational_root()); // x - 2
        assert!(!RatPoly::from_ints(&[-2, 0, 1]).has_rational_root()); // x^2 - 2
        assert!(!RatPoly::from_ints(&[7, 19, -331, 401]).has_rational_root());
    }
}
