//! Elementary transcendental functions on `BigReal`: pi, logarithms, exp,
//! sin, sqrt and real powers.
//!
//! The constants run on scaled-integer series (every floor division costs at
//! most one unit), everything else is argument reduction plus Taylor series at
//! a guarded working precision.

use std::sync::{LazyLock, Mutex};

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{Signed, Zero};

use super::bigreal::BigReal;
use crate::error::{Error, Result};

/// floor(2^wp * atan(1/x)) up to a few units.
fn atan_inv_scaled(x: u64, wp: u32) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut term: BigInt = (BigInt::from(1i8) << wp as usize) / x;
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term /= &x2;
        if term.is_zero() {
            break;
        }
        let contrib = &term / (2 * k + 1);
        if k % 2 == 1 {
            sum -= contrib;
        } else {
            sum += contrib;
        }
        k += 1;
    }
    sum
}

/// floor(2^wp * atanh(1/x)) up to a few units.
fn atanh_inv_scaled(x: u64, wp: u32) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut term: BigInt = (BigInt::from(1i8) << wp as usize) / x;
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term /= &x2;
        if term.is_zero() {
            break;
        }
        sum += &term / (2 * k + 1);
        k += 1;
    }
    sum
}

struct ConstCache {
    value: Option<BigReal>,
}

static PI_CACHE: LazyLock<Mutex<ConstCache>> = LazyLock::new(|| Mutex::new(ConstCache { value: None }));
static LN2_CACHE: LazyLock<Mutex<ConstCache>> = LazyLock::new(|| Mutex::new(ConstCache { value: None }));
static LN3_CACHE: LazyLock<Mutex<ConstCache>> = LazyLock::new(|| Mutex::new(ConstCache { value: None }));

fn cached_const(cache: &Mutex<ConstCache>, prec: u32, compute: impl Fn(u32) -> BigReal) -> BigReal {
    let mut guard = cache.lock().unwrap();
    if let Some(v) = &guard.value {
        if v.prec() >= prec + 32 {
            return v.with_prec(prec);
        }
    }
    let fresh = compute(prec + 64);
    let out = fresh.with_prec(prec);
    guard.value = Some(fresh);
    out
}

/// pi with |result - pi| <= 2^(-prec+2), by Machin's formula.
pub fn const_pi(prec: u32) -> BigReal {
    assert!(prec >= 8, "const_pi requires prec >= 8");
    cached_const(&PI_CACHE, prec, |wp| {
        let wp_i = wp + 32;
        let a = atan_inv_scaled(5, wp_i);
        let b = atan_inv_scaled(239, wp_i);
        BigReal::new(a * 16 - b * 4, -(wp_i as i64), wp)
    })
}

/// log k for k in {2, 3} with |result - log k| <= 2^(-prec+2).
pub fn const_log(k: u32, prec: u32) -> Result<BigReal> {
    assert!(prec >= 8, "const_log requires prec >= 8");
    match k {
        2 => Ok(cached_const(&LN2_CACHE, prec, |wp| {
            let wp_i = wp + 32;
            BigReal::new(atanh_inv_scaled(3, wp_i) * 2, -(wp_i as i64), wp)
        })),
        3 => Ok(cached_const(&LN3_CACHE, prec, |wp| {
            let wp_i = wp + 32;
            BigReal::new(atanh_inv_scaled(2, wp_i) * 2, -(wp_i as i64), wp)
        })),
        _ => Err(Error::Domain(format!("const_log only supports k in {{2,3}}, got {k}"))),
    }
}

/// Natural logarithm for x > 0.
pub fn ln(x: &BigReal, prec: u32) -> BigReal {
    assert!(x.is_positive(), "ln requires a positive argument");
    let wp = prec + 48;
    // x = m * 2^e with m in [1, 2)
    let e = x.top_bit() - 1;
    let m = x.with_prec(wp).mul_pow2(-e);
    let one = BigReal::one(wp);
    // ln m = 2 atanh(u), u = (m-1)/(m+1) in [0, 1/3)
    let u = m.sub(&one).div(&m.add(&one));
    let u2 = u.square();
    let mut term = u.clone();
    let mut sum = u;
    let mut k = 1u64;
    let cut = -(wp as i64 + 4);
    loop {
        term = term.mul(&u2);
        if term.is_zero() || term.top_bit() < cut {
            break;
        }
        sum = sum.add(&term.div_u64(2 * k + 1));
        k += 1;
    }
    let mut r = sum.mul_pow2(1);
    if e != 0 {
        r = r.add(&const_log(2, wp).unwrap().mul_i64(e));
    }
    r.with_prec(prec)
}

/// Exponential function.
pub fn exp(x: &BigReal, prec: u32) -> BigReal {
    let wp = prec + 64;
    if x.is_zero() {
        return BigReal::one(prec);
    }
    // range reduce: x = k ln2 + r, |r| <= ln2/2
    let ln2 = const_log(2, wp).unwrap();
    let k = x.with_prec(wp).div(&ln2).to_i64_round();
    let r = x.with_prec(wp).sub(&ln2.mul_i64(k));
    // halve j times, Taylor, square back
    let j = ((wp as f64).sqrt() as i64).clamp(4, 48);
    let rj = r.mul_pow2(-j);
    let mut term = BigReal::one(wp);
    let mut sum = BigReal::one(wp);
    let mut n = 1u64;
    let cut = -(wp as i64 + 2 * j + 8);
    loop {
        term = term.mul(&rj).div_u64(n);
        if term.is_zero() || term.top_bit() < cut {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    for _ in 0..j {
        sum = sum.square();
    }
    sum.mul_pow2(k).with_prec(prec)
}

/// sin x for moderate |x| (reduces modulo pi/2).
pub fn sin(x: &BigReal, prec: u32) -> BigReal {
    let wp = prec + 48;
    if x.is_zero() {
        return BigReal::zero(prec);
    }
    let half_pi = const_pi(wp + 8).mul_pow2(-1);
    let q = x.with_prec(wp).div(&half_pi).to_i64_round();
    let r = x.with_prec(wp + 8).sub(&half_pi.mul_i64(q)).with_prec(wp);
    let val = match q.rem_euclid(4) {
        0 => sin_taylor(&r, wp),
        1 => cos_taylor(&r, wp),
        2 => sin_taylor(&r, wp).neg(),
        _ => cos_taylor(&r, wp).neg(),
    };
    val.with_prec(prec)
}

fn sin_taylor(r: &BigReal, wp: u32) -> BigReal {
    let r2 = r.square();
    let mut term = r.clone();
    let mut sum = r.clone();
    let mut n = 1u64;
    let cut = -(wp as i64 + 4);
    loop {
        term = term.mul(&r2).div_u64((2 * n) * (2 * n + 1)).neg();
        if term.is_zero() || term.top_bit() < cut {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    sum
}

fn cos_taylor(r: &BigReal, wp: u32) -> BigReal {
    let r2 = r.square();
    let mut term = BigReal::one(wp);
    let mut sum = BigReal::one(wp);
    let mut n = 1u64;
    let cut = -(wp as i64 + 4);
    loop {
        term = term.mul(&r2).div_u64((2 * n - 1) * (2 * n)).neg();
        if term.is_zero() || term.top_bit() < cut {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    sum
}

/// Square root of a nonnegative value.
pub fn sqrt(x: &BigReal, prec: u32) -> BigReal {
    assert!(!x.is_negative(), "sqrt requires a nonnegative argument");
    if x.is_zero() {
        return BigReal::zero(prec);
    }
    let wp = prec + 16;
    // scale to an integer with ~2*wp bits and take the integer square root
    let bits = x.mantissa().bits() as i64;
    let mut shift = 2 * wp as i64 - bits;
    if (x.exponent() - shift) % 2 != 0 {
        shift += 1;
    }
    debug_assert!(shift >= 0);
    let n: BigUint = x.mantissa().magnitude() << shift as usize;
    let root = n.sqrt();
    let exact = &root * &root == n;
    let mut m = BigInt::from(root) << 1;
    if !exact {
        m += 1; // sticky
    }
    BigReal::new(m, (x.exponent() - shift) / 2 - 1, prec)
}

/// x^y for x > 0 and real y.
pub fn pow(x: &BigReal, y: &BigReal, prec: u32) -> BigReal {
    if y.is_zero() {
        return BigReal::one(prec);
    }
    let extra = y.log2_abs_approx().max(0.0) as u32 + 8;
    let wp = prec + 32 + extra;
    exp(&y.with_prec(wp).mul(&ln(x, wp)), prec)
}

/// 2^y for real y.
pub fn exp2(y: &BigReal, prec: u32) -> BigReal {
    if y.is_integer() {
        let k = y.to_i64_round();
        return BigReal::pow2(k, prec);
    }
    let wp = prec + 32;
    exp(&y.with_prec(wp).mul(&const_log(2, wp).unwrap()), prec)
}

/// Integer power n^a for n >= 1, real a, as exp(a ln n).
pub fn int_pow_real(n: u64, a: &BigReal, prec: u32) -> BigReal {
    assert!(n >= 1);
    if n == 1 {
        return BigReal::one(prec);
    }
    let wp = prec + 32;
    let ln_n = ln(&BigReal::from_i64(n as i64, wp), wp);
    exp(&a.with_prec(wp).mul(&ln_n), prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    // First 70 decimal digits; checked in-tree against the independent
    // two-term arctangent oracle below.
    const PI_70: &str =
        "3.141592653589793238462643383279502884197169399375105820974944592307816";
    const LN2_40: &str = "0.6931471805599453094172321214581765680755";
    const LN3_40: &str = "1.098612288668109691395245236922525704647";

    /// Independent oracle: pi = 4 (atan(1/2) + atan(1/3)).
    fn pi_oracle(prec: u32) -> BigReal {
        let wp = prec + 32;
        let s = atan_inv_scaled(2, wp) + atan_inv_scaled(3, wp);
        BigReal::new(s * 4, -(wp as i64), prec)
    }

    #[test]
    fn pi_matches_independent_arctan_oracle() {
        for prec in [64u32, 256] {
            let a = const_pi(prec);
            let b = pi_oracle(prec + 16);
            assert!(a.approx_eq_abs(&b, -(prec as i64) + 2), "prec {prec}");
        }
    }

    #[test]
    fn pi_digit_strings() {
        let a = const_pi(256);
        let s = a.to_decimal_string(70);
        assert_eq!(s, PI_70);
        let lo = const_pi(8);
        let ref64 = const_pi(64);
        assert!(lo.approx_eq_abs(&ref64, -6));
    }

    #[test]
    fn log_constants() {
        let l2 = const_log(2, 64).unwrap();
        let l3 = const_log(3, 64).unwrap();
        assert_eq!(
            BigReal::from_decimal_str(LN2_40, 64).unwrap().to_decimal_string(21),
            l2.to_decimal_string(21)
        );
        assert_eq!(
            BigReal::from_decimal_str(LN3_40, 64).unwrap().to_decimal_string(21),
            l3.to_decimal_string(21)
        );
        let lo = const_log(2, 8).unwrap();
        assert!(lo.approx_eq_abs(&l2, -6));
        assert!(const_log(5, 64).is_err());
    }

    #[test]
    fn ln_exp_round_trip() {
        let x = BigReal::from_decimal_str("2.718281828", 128).unwrap();
        let y = exp(&ln(&x, 128), 128);
        assert!(y.approx_eq_abs(&x, -120));
        // ln agrees with the scaled-integer constant
        let l3 = ln(&BigReal::from_i64(3, 160), 160);
        assert!(l3.approx_eq_abs(&const_log(3, 160).unwrap(), -152));
    }

    #[test]
    fn exp_known_values() {
        let one = BigReal::one(128);
        let e = exp(&one, 128);
        let expected =
            BigReal::from_decimal_str("2.71828182845904523536028747135266249775724709369996", 128)
                .unwrap();
        assert!(e.approx_eq_abs(&expected, -120));
        assert!(exp(&BigReal::zero(64), 64) == BigReal::one(64));
    }

    #[test]
    fn sin_known_values() {
        let pi = const_pi(128);
        // sin(pi/6) = 1/2
        let x = pi.div_u64(6);
        assert!(sin(&x, 128).approx_eq_abs(&BigReal::pow2(-1, 128), -120));
        // sin(pi) = 0
        let sp = sin(&pi, 128);
        assert!(sp.is_zero() || sp.top_bit() < -120);
        // sin(-pi/2) = -1
        let neg = sin(&pi.mul_pow2(-1).neg(), 128);
        assert!(neg.approx_eq_abs(&BigReal::one(128).neg(), -120));
    }

    #[test]
    fn sqrt_known_values() {
        let four = BigReal::from_i64(4, 64);
        assert_eq!(sqrt(&four, 64), BigReal::from_i64(2, 64));
        let two = BigReal::from_i64(2, 192);
        let r = sqrt(&two, 192);
        assert!(r.square().approx_eq_abs(&two, -184));
    }

    #[test]
    fn pow_basics() {
        let x = BigReal::from_i64(2, 96);
        let y = BigReal::from_decimal_str("0.5", 96).unwrap();
        let r = pow(&x, &y, 96);
        assert!(r.approx_eq_abs(&sqrt(&x, 96), -90));
        assert_eq!(exp2(&BigReal::from_i64(-3, 64), 64), BigReal::pow2(-3, 64));
    }
}
