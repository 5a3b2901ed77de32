//! Exact evaluation of integrals of the form int_0^1 P(t)/(c +- t) dt.
//!
//! Polynomial long division peels off the rational part; what remains is a
//! logarithm that stays inside the {1, log2, log3} basis for c in {1, 2}.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exact::rat_int;
use super::loglinear::LogLinearValue;
use super::polynomial::RationalPolynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralSign {
    Plus,
    Minus,
}

/// int_0^1 P(t)/(c + sign*t) dt, exactly. Requires c in {1, 2}; the pole at
/// t = 1 forbids sign Minus with c = 1.
pub fn rational_log_integral(
    p: &RationalPolynomial,
    c: &BigRational,
    sign: IntegralSign,
) -> Result<LogLinearValue> {
    let c_int: i64 = if *c == BigRational::one() {
        1
    } else if *c == rat_int(2) {
        2
    } else {
        return Err(Error::Domain(format!("rational_log_integral requires c in {{1,2}}, got {c}")));
    };
    if sign == IntegralSign::Minus && c_int == 1 {
        return Err(Error::Domain(
            "rational_log_integral with sign '-' requires c > 1 (pole at t = 1)".into(),
        ));
    }
    let sigma: i64 = match sign {
        IntegralSign::Plus => 1,
        IntegralSign::Minus => -1,
    };
    // P(t)/(c + sigma t) = sigma * P(t)/(t - root) with root = -sigma*c
    let root = rat_int(-sigma * c_int);
    let (q, rem) = p.div_linear(&root);
    let poly_part = q.integral_unit();
    // int_0^1 dt/(t + sigma c) in the log2/log3 basis
    let (lb, lc): (i64, i64) = match (sigma, c_int) {
        (1, 1) => (1, 0),   // log 2
        (1, 2) => (-1, 1),  // log(3/2)
        (-1, 2) => (-1, 0), // log(1/2)
        _ => unreachable!(),
    };
    let sig = rat_int(sigma);
    Ok(LogLinearValue::new(
        &sig * &poly_part,
        &sig * &rem * rat_int(lb),
        if lc == 0 { BigRational::zero() } else { &sig * &rem * rat_int(lc) },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::bigreal::BigReal;
    use crate::numkernel::exact::ratio;

    #[test]
    fn constant_over_one_plus_t() {
        // int_0^1 dt/(1+t) = log 2
        let v = rational_log_integral(&RationalPolynomial::one(), &rat_int(1), IntegralSign::Plus)
            .unwrap();
        assert_eq!((v.a, v.b, v.c), (rat_int(0), rat_int(1), rat_int(0)));
    }

    #[test]
    fn t_over_one_plus_t() {
        // int_0^1 t/(1+t) dt = 1 - log 2, by the symbolic antiderivative t - log(1+t)
        let v = rational_log_integral(&RationalPolynomial::t(), &rat_int(1), IntegralSign::Plus)
            .unwrap();
        assert_eq!((v.a, v.b, v.c), (rat_int(1), rat_int(-1), rat_int(0)));
    }

    #[test]
    fn constant_over_two_minus_t() {
        // antiderivative -log(2-t) gives log 2 at the endpoints
        let v = rational_log_integral(&RationalPolynomial::one(), &rat_int(2), IntegralSign::Minus)
            .unwrap();
        assert_eq!((v.a, v.b, v.c), (rat_int(0), rat_int(1), rat_int(0)));
    }

    #[test]
    fn rejects_unsupported_parameters() {
        let p = RationalPolynomial::one();
        assert!(rational_log_integral(&p, &ratio(3, 2), IntegralSign::Plus).is_err());
        assert!(rational_log_integral(&p, &rat_int(1), IntegralSign::Minus).is_err());
    }

    #[test]
    fn matches_direct_summation_for_quadratic() {
        // int_0^1 (t^2+1)/(2+t) dt = [t^2/2 - 2t] + 5 log(3/2)
        let p = RationalPolynomial::new(vec![rat_int(1), rat_int(0), rat_int(1)]);
        let v = rational_log_integral(&p, &rat_int(2), IntegralSign::Plus).unwrap();
        // spot-check numerically against a midpoint-free Riemann refinement
        let x = v.to_bigreal(96);
        let mut riemann = BigReal::zero(96);
        let n = 20000u64;
        for k in 0..n {
            let t = ratio(2 * k as i64 + 1, 2 * n as i64);
            let f = (&t * &t + rat_int(1)) / (rat_int(2) + &t);
            riemann = riemann.add(&BigReal::from_rational(&f, 96));
        }
        riemann = riemann.div_u64(n);
        // midpoint rule error ~ 1/n^2
        assert!(x.sub(&riemann).abs().to_f64() < 1e-8);
    }
}
