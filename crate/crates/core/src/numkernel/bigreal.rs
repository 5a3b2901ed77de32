//! Arbitrary-precision binary floating point.
//!
//! A value is `mant * 2^exp` with an arbitrary-size integer mantissa kept in
//! canonical form (zero, or odd). `prec` is the precision in bits applied when
//! an operation has to round; exact results below that size are kept exact.
//! All basic operations are faithful: the result differs from the true value
//! by at most one unit in the last place at the stated precision.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision real number with explicit binary precision.
#[derive(Debug, Clone)]
pub struct BigReal {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn round_mantissa(mant: BigInt, exp: i64, prec: u32) -> (BigInt, i64) {
    if mant.is_zero() {
        return (mant, 0);
    }
    let bits = mant.bits();
    let (sign, mut mag) = mant.into_parts();
    let mut exp = exp;
    if bits > prec as u64 {
        let shift = (bits - prec as u64) as usize;
        let rem = &mag & ((BigUint::one() << shift) - 1u32);
        mag >>= shift;
        exp += shift as i64;
        let half = BigUint::one() << (shift - 1);
        match rem.cmp(&half) {
            Ordering::Greater => mag += 1u32,
            Ordering::Equal => {
                if mag.is_odd() {
                    mag += 1u32;
                }
            }
            Ordering::Less => {}
        }
    }
    if mag.is_zero() {
        return (BigInt::zero(), 0);
    }
    let tz = mag.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        mag >>= tz as usize;
        exp += tz as i64;
    }
    (BigInt::from_biguint(sign, mag), exp)
}

impl BigReal {
    /// Builds `mant * 2^exp` rounded to `prec` bits.
    pub fn new(mant: BigInt, exp: i64, prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        let (mant, exp) = round_mantissa(mant, exp, prec);
        BigReal { mant, exp, prec }
    }

    pub fn zero(prec: u32) -> Self {
        BigReal { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn one(prec: u32) -> Self {
        BigReal { mant: BigInt::one(), exp: 0, prec }
    }

    /// Exact power of two `2^k`.
    pub fn pow2(k: i64, prec: u32) -> Self {
        BigReal { mant: BigInt::one(), exp: k, prec }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::new(n.clone(), 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::new(BigInt::from(n), 0, prec)
    }

    pub fn from_u32(n: u32, prec: u32) -> Self {
        Self::new(BigInt::from(n), 0, prec)
    }

    /// Faithfully rounded conversion; exact whenever the rational is a dyadic
    /// number representable in `prec` bits.
    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        if r.numer().is_zero() {
            return Self::zero(prec);
        }
        let num = Self { mant: r.numer().clone(), exp: 0, prec: u32::MAX };
        num.div_raw(r.denom(), 0, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    /// True when the value is an exact integer.
    pub fn is_integer(&self) -> bool {
        self.is_zero() || self.exp >= 0
    }

    /// Exact conversion to a rational.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Rounds (or retags) to a new working precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::new(self.mant.clone(), self.exp, prec)
    }

    /// Bit position of the most significant bit, i.e. floor(log2|x|) + 1.
    /// Zero input returns i64::MIN.
    pub fn top_bit(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    /// Approximate log2(|x|) for parameter selection; not contractual.
    pub fn log2_abs_approx(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits();
        let take = bits.min(53);
        let top = (self.mant.magnitude() >> (bits - take) as usize).to_u64().unwrap();
        self.exp as f64 + (bits - take) as f64 + (top as f64).log2()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let take = bits.min(53);
        let top = (self.mant.magnitude() >> (bits - take) as usize).to_u64().unwrap();
        let scale = self.exp + (bits - take) as i64;
        let mut v = top as f64;
        if scale > 1023 {
            v = f64::INFINITY;
        } else if scale < -1060 {
            v = 0.0;
        } else {
            v *= (2f64).powi(scale as i32);
        }
        if self.mant.is_negative() {
            -v
        } else {
            v
        }
    }

    /// Nearest integer, half away from zero. Panics if out of i64 range.
    pub fn to_i64_round(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        if self.exp >= 0 {
            let v: BigInt = &self.mant << self.exp as usize;
            v.to_i64().expect("rounded value exceeds i64")
        } else {
            let s = (-self.exp) as usize;
            let mag = self.mant.magnitude();
            let q = (mag + (BigUint::one() << (s - 1))) >> s;
            let q = BigInt::from_biguint(self.mant.sign(), q);
            q.to_i64().expect("rounded value exceeds i64")
        }
    }

    pub fn abs(&self) -> Self {
        BigReal { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        BigReal { mant: -self.mant.clone(), exp: self.exp, prec: self.prec }
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigReal { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return rhs.with_prec(prec);
        }
        if rhs.is_zero() {
            return self.with_prec(prec);
        }
        let ta = self.top_bit();
        let tb = rhs.top_bit();
        let gap = prec as i64 + 8;
        // When one operand is far below the other's last place it only acts as
        // a sticky bit for the final rounding.
        if ta - tb > gap {
            return self.add_sticky(rhs.mant.sign(), prec);
        }
        if tb - ta > gap {
            return rhs.add_sticky(self.mant.sign(), prec);
        }
        let e = self.exp.min(rhs.exp);
        let ma: BigInt = &self.mant << (self.exp - e) as usize;
        let mb: BigInt = &rhs.mant << (rhs.exp - e) as usize;
        Self::new(ma + mb, e, prec)
    }

    fn add_sticky(&self, sign: Sign, prec: u32) -> Self {
        let ta = self.top_bit();
        let se = ta - prec as i64 - 6;
        debug_assert!(self.exp > se);
        let mut m: BigInt = &self.mant << (self.exp - se) as usize;
        match sign {
            Sign::Plus => m += 1,
            Sign::Minus => m -= 1,
            Sign::NoSign => {}
        }
        Self::new(m, se, prec)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(prec);
        }
        Self::new(&self.mant * &rhs.mant, self.exp + rhs.exp, prec)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        let prec = self.prec.max(rhs.prec);
        self.div_raw(&rhs.mant, rhs.exp, prec)
    }

    fn div_raw(&self, dm: &BigInt, de: i64, prec: u32) -> Self {
        if self.is_zero() {
            return Self::zero(prec);
        }
        let na = self.mant.bits() as i64;
        let nb = dm.bits() as i64;
        let s = (prec as i64 + 3 + nb - na).max(0) as usize;
        let num = self.mant.magnitude() << s;
        let (q, r) = num.div_rem(dm.magnitude());
        let mut q2: BigUint = q << 1u32;
        if !r.is_zero() {
            q2 += 1u32;
        }
        let sign = if (self.mant.sign() == Sign::Minus) != (dm.sign() == Sign::Minus) {
            Sign::Minus
        } else {
            Sign::Plus
        };
        Self::new(
            BigInt::from_biguint(sign, q2),
            self.exp - de - s as i64 - 1,
            prec,
        )
    }

    /// Division by a small positive integer.
    pub fn div_u64(&self, d: u64) -> Self {
        assert!(d > 0);
        self.div_raw(&BigInt::from(d), 0, self.prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero(self.prec);
        }
        Self::new(&self.mant * k, self.exp, self.prec)
    }

    /// Integer power with rounding at the current precision per step.
    pub fn powi(&self, n: u64) -> Self {
        let mut result = Self::one(self.prec);
        if n == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut n = n;
        loop {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.square();
        }
        result
    }

    /// Exact value comparison (independent of stored precision).
    pub fn cmp_value(&self, rhs: &Self) -> Ordering {
        let sa = self.mant.sign();
        let sb = rhs.mant.sign();
        match (sa, sb) {
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            (Sign::NoSign, Sign::Plus) | (Sign::Minus, Sign::NoSign) | (Sign::Minus, Sign::Plus) => {
                return Ordering::Less
            }
            (Sign::Plus, Sign::NoSign) | (Sign::NoSign, Sign::Minus) | (Sign::Plus, Sign::Minus) => {
                return Ordering::Greater
            }
            _ => {}
        }
        let ta = self.top_bit();
        let tb = rhs.top_bit();
        if ta != tb {
            let mag_order = ta.cmp(&tb);
            return if sa == Sign::Minus { mag_order.reverse() } else { mag_order };
        }
        // Same sign and magnitude range: an exact aligned subtraction decides.
        let e = self.exp.min(rhs.exp);
        let ma: BigInt = &self.mant << (self.exp - e) as usize;
        let mb: BigInt = &rhs.mant << (rhs.exp - e) as usize;
        ma.cmp(&mb)
    }

    /// |self - rhs| <= 2^log2_tol
    pub fn approx_eq_abs(&self, rhs: &Self, log2_tol: i64) -> bool {
        let d = self.sub(rhs).abs();
        d.is_zero() || d.top_bit() <= log2_tol + 1
    }

    // ---- decimal conversion ----

    /// Renders with `digits` significant decimal digits. Positional notation
    /// is used for moderate exponents, otherwise scientific.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let digits = digits as i64;
        // First pass decimal exponent estimate from the bit position.
        let mut d10 = ((self.top_bit() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let mut dec = String::new();
        for _ in 0..4 {
            let q = digits - 1 - d10;
            let num_p10 = q.max(0) as u32;
            let den_p10 = (-q).max(0) as u32;
            let num_p2 = self.exp.max(0) as usize;
            let den_p2 = (-self.exp).max(0) as usize;
            let mut num = self.mant.magnitude() * BigUint::from(10u32).pow(num_p10);
            num <<= num_p2;
            let den = BigUint::from(10u32).pow(den_p10) << den_p2;
            let (mut q_int, r) = num.div_rem(&den);
            // round half away from zero on the decimal digit
            if &r * 2u32 >= den {
                q_int += 1u32;
            }
            let s = q_int.to_string();
            let n = s.len() as i64;
            if n == digits {
                dec = s;
                break;
            }
            // estimate was off by one, or rounding carried into a new digit
            d10 += n - digits;
            if n == digits + 1 && s.ends_with('0') {
                dec = s[..s.len() - 1].to_string();
                break;
            }
        }
        assert!(!dec.is_empty(), "decimal rendering failed to settle");
        // strip meaningless trailing zeros beyond the first digit
        while dec.len() > 1 && dec.ends_with('0') {
            dec.pop();
        }
        let sign = if self.mant.is_negative() { "-" } else { "" };
        if d10 >= -4 && d10 < digits {
            if d10 >= 0 {
                let int_len = (d10 + 1) as usize;
                if dec.len() <= int_len {
                    let zeros = "0".repeat(int_len - dec.len());
                    format!("{sign}{dec}{zeros}")
                } else {
                    format!("{sign}{}.{}", &dec[..int_len], &dec[int_len..])
                }
            } else {
                let zeros = "0".repeat((-d10 - 1) as usize);
                format!("{sign}0.{zeros}{dec}")
            }
        } else if dec.len() == 1 {
            format!("{sign}{dec}e{d10}")
        } else {
            format!("{sign}{}.{}e{}", &dec[..1], &dec[1..], d10)
        }
    }

    /// Parses a decimal string (positional or scientific) with faithful
    /// rounding at `prec` bits.
    pub fn from_decimal_str(s: &str, prec: u32) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty decimal string".into());
        }
        let (sign, rest) = match s.as_bytes()[0] {
            b'+' => (1, &s[1..]),
            b'-' => (-1, &s[1..]),
            _ => (1, s),
        };
        let (mant_part, exp_part) = match rest.find(['e', 'E']) {
            Some(i) => (&rest[..i], &rest[i + 1..]),
            None => (rest, ""),
        };
        let exp10: i64 = if exp_part.is_empty() {
            0
        } else {
            exp_part.parse().map_err(|_| format!("bad exponent in {s:?}"))?
        };
        let (int_part, frac_part) = match mant_part.find('.') {
            Some(i) => (&mant_part[..i], &mant_part[i + 1..]),
            None => (mant_part, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(format!("no digits in {s:?}"));
        }
        let all: String = format!("{int_part}{frac_part}");
        if !all.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid digit in {s:?}"));
        }
        let digits: BigInt = all.parse().map_err(|_| format!("bad mantissa in {s:?}"))?;
        let scale = exp10 - frac_part.len() as i64;
        let num = if sign < 0 { -digits } else { digits };
        let r = if scale >= 0 {
            BigRational::from_integer(num * BigInt::from(10u32).pow(scale as u32))
        } else {
            BigRational::new(num, BigInt::from(10u32).pow((-scale) as u32))
        };
        Ok(Self::from_rational(&r, prec))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        // canonical mantissas make value equality structural
        self.exp == other.exp && self.mant == other.mant
    }
}

impl Eq for BigReal {}

impl Hash for BigReal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mant.hash(state);
        self.exp.hash(state);
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec as f64 * std::f64::consts::LOG10_2).ceil() as u32 + 2;
        write!(f, "{}", self.to_decimal_string(digits.max(3)))
    }
}

impl std::ops::Add for &BigReal {
    type Output = BigReal;
    fn add(self, rhs: &BigReal) -> BigReal {
        BigReal::add(self, rhs)
    }
}

impl std::ops::Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, rhs: &BigReal) -> BigReal {
        BigReal::sub(self, rhs)
    }
}

impl std::ops::Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, rhs: &BigReal) -> BigReal {
        BigReal::mul(self, rhs)
    }
}

impl std::ops::Div for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        BigReal::div(self, rhs)
    }
}

impl std::ops::Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::neg(self)
    }
}
