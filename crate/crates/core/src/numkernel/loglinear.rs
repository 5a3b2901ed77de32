//! Exact values of the form a + b log2 + c log3 with rational coefficients.

use num_rational::BigRational;
use num_traits::Zero;

use super::bigreal::BigReal;
use super::transcend::const_log;

/// Exact number a + b*log2 + c*log3. Arithmetic never rounds; conversion to
/// `BigReal` at precision P carries at most 4 units in the last place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogLinearValue {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl LogLinearValue {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Self {
        LogLinearValue { a, b, c }
    }

    pub fn zero() -> Self {
        LogLinearValue { a: BigRational::zero(), b: BigRational::zero(), c: BigRational::zero() }
    }

    pub fn from_rational(a: BigRational) -> Self {
        LogLinearValue { a, b: BigRational::zero(), c: BigRational::zero() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        LogLinearValue { a: &self.a + &rhs.a, b: &self.b + &rhs.b, c: &self.c + &rhs.c }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        LogLinearValue { a: &self.a * k, b: &self.b * k, c: &self.c * k }
    }

    pub fn to_bigreal(&self, prec: u32) -> BigReal {
        let wp = prec + 16;
        let mut acc = BigReal::from_rational(&self.a, wp);
        if !self.b.is_zero() {
            acc = acc.add(&BigReal::from_rational(&self.b, wp).mul(&const_log(2, wp).unwrap()));
        }
        if !self.c.is_zero() {
            acc = acc.add(&BigReal::from_rational(&self.c, wp).mul(&const_log(3, wp).unwrap()));
        }
        acc.with_prec(prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::exact::{rat_int, ratio};

    #[test]
    fn conversion_accuracy() {
        // 2 - 2 log 2 = 0.6137056388801093811655...
        let v = LogLinearValue::new(rat_int(2), rat_int(-2), rat_int(0));
        let x = v.to_bigreal(128);
        let expected =
            BigReal::from_decimal_str("0.61370563888010938116553575708364686384899973128", 160)
                .unwrap();
        assert!(x.approx_eq_abs(&expected, -124));
    }

    #[test]
    fn exact_ops() {
        let v = LogLinearValue::new(ratio(1, 2), rat_int(1), rat_int(-1));
        let w = v.scale(&rat_int(6)).add(&LogLinearValue::from_rational(rat_int(1)));
        assert_eq!(w.a, rat_int(4));
        assert_eq!(w.b, rat_int(6));
        assert_eq!(w.c, rat_int(-6));
    }
}
