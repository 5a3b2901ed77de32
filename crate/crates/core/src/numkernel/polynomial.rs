//! Polynomials with exact rational coefficients, ascending degree order.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense rational-coefficient polynomial. The zero polynomial has an empty
/// coefficient list; otherwise the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RationalPolynomial { coeffs: vec![BigRational::one()] }
    }

    /// The monomial t.
    pub fn t() -> Self {
        RationalPolynomial { coeffs: vec![BigRational::zero(), BigRational::one()] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a + b);
        }
        Self::new(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact definite integral over [0, 1].
    pub fn integral_unit(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc += c / BigRational::from_integer((j as i64 + 1).into());
        }
        acc
    }

    /// Synthetic division by (t - r): returns (quotient, remainder).
    pub fn div_linear(&self, r: &BigRational) -> (Self, BigRational) {
        if self.is_zero() {
            return (Self::zero(), BigRational::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![BigRational::zero(); n.saturating_sub(1)];
        let mut carry = BigRational::zero();
        for i in (0..n).rev() {
            let c = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return (Self::new(q), c);
            }
            q[i - 1] = c.clone();
            carry = c;
        }
        unreachable!()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::exact::{rat_int, ratio};

    #[test]
    fn mul_and_eval() {
        // (1 - t)^2 = 1 - 2t + t^2
        let one_minus_t = RationalPolynomial::new(vec![rat_int(1), rat_int(-1)]);
        let sq = one_minus_t.pow(2);
        assert_eq!(sq.coeffs(), &[rat_int(1), rat_int(-2), rat_int(1)]);
        assert_eq!(sq.eval(&ratio(1, 2)), ratio(1, 4));
    }

    #[test]
    fn division_by_linear_factor() {
        // t^3 - 2t^2 + t = (t + 1)(t^2 - 3t + 4) - 4
        let p = RationalPolynomial::new(vec![rat_int(0), rat_int(1), rat_int(-2), rat_int(1)]);
        let (q, r) = p.div_linear(&rat_int(-1));
        assert_eq!(q.coeffs(), &[rat_int(4), rat_int(-3), rat_int(1)]);
        assert_eq!(r, rat_int(-4));
    }

    #[test]
    fn unit_integral() {
        let p = RationalPolynomial::new(vec![rat_int(4), rat_int(-3), rat_int(1)]);
        // 4 - 3/2 + 1/3 = 17/6
        assert_eq!(p.integral_unit(), ratio(17, 6));
    }
}
