//! Double-exponential (tanh-sinh) quadrature on (0, 1).
//!
//! The substitution t(u) = 1/(1 + exp(-pi sinh u)) pushes the endpoints to
//! infinity so algebraic endpoint singularities of exponent > -1 are handled.
//! Levels halve the step and reuse previous abscissas; evaluation stops when
//! two successive levels agree within 2^-prec.

use super::bigreal::BigReal;
use super::transcend::{const_pi, exp};
use crate::error::{Error, Result};

const MAX_LEVEL: u32 = 12;

/// Integrand handle. Receives t and 1-t separately so endpoint behaviour can
/// be computed without cancellation, plus the working precision.
pub type Integrand<'a> = &'a dyn Fn(&BigReal, &BigReal, u32) -> BigReal;

/// Integrates f over (0, 1) to absolute tolerance 2^-prec.
pub fn tanh_sinh_quadrature(f: Integrand<'_>, prec: u32) -> Result<BigReal> {
    let wp = prec + 48;
    let pi_half = const_pi(wp).mul_pow2(-1);
    // weights below 2^-(prec+16) cannot move the result
    let weight_cut = -(prec as i64) - 16;
    let conv_cut = -(prec as i64);

    let mut total = BigReal::zero(wp); // sum of w_k * f_k over all evaluated nodes, step-free
    let mut prev: Option<BigReal> = None;

    for level in 0..=MAX_LEVEL {
        let h_log2 = -(level as i64);
        // level 0 walks every node; deeper levels only the odd ones
        let stride = if level == 0 { 1u64 } else { 2u64 };
        let start = if level == 0 { 0u64 } else { 1u64 };
        let eh = exp(&BigReal::pow2(h_log2, wp), wp); // e^h
        let estart = exp(&BigReal::pow2(h_log2, wp).mul_i64(start as i64), wp);
        let estep = if level == 0 { eh.clone() } else { eh.square() };

        let mut eu = estart; // e^{kh}
        let mut k = start;
        loop {
            // u = k h, sinh u = (e^u - e^-u)/2, cosh u likewise
            let eu_inv = BigReal::one(wp).div(&eu);
            let sinh_u = eu.sub(&eu_inv).mul_pow2(-1);
            let cosh_u = eu.add(&eu_inv).mul_pow2(-1);
            let v = pi_half.mul(&sinh_u);
            let ev = exp(&v, wp);
            let ev_inv = BigReal::one(wp).div(&ev);
            // t = 1/(1+e^{-2v}), 1-t = 1/(1+e^{2v})
            let e2v = ev.square();
            let e2v_inv = ev_inv.square();
            let t = BigReal::one(wp).div(&BigReal::one(wp).add(&e2v_inv));
            let one_minus_t = BigReal::one(wp).div(&BigReal::one(wp).add(&e2v));
            // weight = (pi/2) cosh u / cosh^2 v, times 1/2 for the map to (0,1)
            let cosh_v = ev.add(&ev_inv).mul_pow2(-1);
            let w = pi_half.mul(&cosh_u).div(&cosh_v.square()).mul_pow2(-1);
            if k > 0 && w.top_bit() < weight_cut {
                break;
            }
            if k == 0 {
                total = total.add(&w.mul(&f(&t, &one_minus_t, wp)));
            } else {
                // symmetric pair: u and -u swap t and 1-t
                let a = f(&t, &one_minus_t, wp);
                let b = f(&one_minus_t, &t, wp);
                total = total.add(&w.mul(&a.add(&b)));
            }
            eu = eu.mul(&estep);
            k += stride;
        }

        let estimate = total.mul_pow2(h_log2);
        if let Some(p) = &prev {
            let diff = estimate.sub(p).abs();
            if diff.is_zero() || diff.top_bit() <= conv_cut {
                return Ok(estimate.with_prec(prec));
            }
        }
        prev = Some(estimate);
    }
    Err(Error::NonConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::transcend::{const_log, sqrt};

    #[test]
    fn constant_integrand() {
        let f = |_t: &BigReal, _omt: &BigReal, wp: u32| BigReal::one(wp);
        let v = tanh_sinh_quadrature(&f, 64).unwrap();
        assert!(v.approx_eq_abs(&BigReal::one(64), -64));
    }

    #[test]
    fn rational_integrand() {
        // int_0^1 t/(1+t) dt = 1 - log 2
        let f = |t: &BigReal, _omt: &BigReal, wp: u32| t.div(&BigReal::one(wp).add(t));
        let v = tanh_sinh_quadrature(&f, 64).unwrap();
        let expected = BigReal::one(96).sub(&const_log(2, 96).unwrap());
        assert!(v.approx_eq_abs(&expected, -62), "got {v}");
    }

    #[test]
    fn endpoint_singularity() {
        // int_0^1 (1-t)^(-1/2) dt = 2
        let f = |_t: &BigReal, omt: &BigReal, wp: u32| BigReal::one(wp).div(&sqrt(omt, wp));
        let v = tanh_sinh_quadrature(&f, 64).unwrap();
        assert!(v.approx_eq_abs(&BigReal::from_i64(2, 64), -60), "got {v}");
    }

    #[test]
    fn high_precision_log() {
        // int_0^1 dt/(1+t) = log 2 at 192 bits
        let f = |t: &BigReal, _omt: &BigReal, wp: u32| BigReal::one(wp).div(&BigReal::one(wp).add(t));
        let v = tanh_sinh_quadrature(&f, 192).unwrap();
        let expected = const_log(2, 224).unwrap();
        assert!(v.approx_eq_abs(&expected, -190));
    }
}
