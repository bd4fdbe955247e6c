//! The universal numeric carrier: a complex number at a configurable working
//! precision, plus the precision policy shared by all numeric modules.
//!
//! Real and imaginary parts are MPFR floats ([`rug::Float`]); the complex
//! arithmetic itself (the full set needed here: field operations, modulus,
//! integer powers, power-of-two rescaling) is implemented in this module.
//! Every operation rounds at the wider operand's precision, so a value
//! faithfully carries the precision of the [`PrecisionPolicy`] that created
//! it through arbitrarily long formulas.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Special;
use rug::Float;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Working-precision selector: `Standard` targets double-digit decimal
/// accuracy suitable for the 5·tol residual checks; `Extended` reruns the
/// same code paths at ≥ 30 decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrecisionMode {
    Standard,
    Extended,
}

impl fmt::Display for PrecisionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrecisionMode::Standard => write!(f, "standard"),
            PrecisionMode::Extended => write!(f, "extended"),
        }
    }
}

/// The numeric contract under which all evaluations run.
///
/// Invariants (enforced by [`PrecisionPolicy::new`]):
/// * `decimal_digits ≥ 15` for standard mode, `≥ 30` for extended mode;
/// * `tol ≥ 10^(5 − decimal_digits)` — the tolerance must be honest for the
///   carried precision;
/// * `max_terms ≥ 100`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrecisionPolicy {
    pub mode: PrecisionMode,
    pub decimal_digits: u32,
    pub tol: f64,
    pub max_terms: usize,
}

impl PrecisionPolicy {
    /// Standard mode: 17 decimal digits (the minimum honoring tol = 1e-12),
    /// relative tolerance 1e-12, at most 10000 terms per series.
    pub fn standard() -> Self {
        Self {
            mode: PrecisionMode::Standard,
            decimal_digits: 17,
            tol: 1e-12,
            max_terms: 10_000,
        }
    }

    /// Extended mode: 40 decimal digits, relative tolerance 1e-30.
    pub fn extended() -> Self {
        Self {
            mode: PrecisionMode::Extended,
            decimal_digits: 40,
            tol: 1e-30,
            max_terms: 10_000,
        }
    }

    /// Validating constructor.
    pub fn new(
        mode: PrecisionMode,
        decimal_digits: u32,
        tol: f64,
        max_terms: usize,
    ) -> Result<Self> {
        let min_digits = match mode {
            PrecisionMode::Standard => 15,
            PrecisionMode::Extended => 30,
        };
        if decimal_digits < min_digits {
            return Err(Error::InvalidPolicy(format!(
                "{mode} mode requires at least {min_digits} decimal digits, got {decimal_digits}"
            )));
        }
        if decimal_digits > 10_000 {
            return Err(Error::InvalidPolicy(format!(
                "decimal_digits = {decimal_digits} is unreasonably large"
            )));
        }
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Error::InvalidPolicy(format!(
                "tol = {tol} must be finite and positive"
            )));
        }
        let floor = 10f64.powi(5 - decimal_digits as i32);
        if tol < floor {
            return Err(Error::InvalidPolicy(format!(
                "tol = {tol:e} below 10^(5 - decimal_digits) = {floor:e}"
            )));
        }
        if max_terms < 100 {
            return Err(Error::InvalidPolicy(format!(
                "max_terms = {max_terms} < 100"
            )));
        }
        Ok(Self {
            mode,
            decimal_digits,
            tol,
            max_terms,
        })
    }

    /// Binary working precision: decimal digits converted to bits plus a
    /// 32-bit guard band for intermediate rounding.
    pub fn prec_bits(&self) -> u32 {
        (self.decimal_digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
    }

    /// One unit in the last place of the working precision, as f64
    /// (0.0 if the precision is too high for f64 to express the ulp).
    pub fn eps(&self) -> f64 {
        2f64.powi(-(self.prec_bits() as i32))
    }

    /// The threshold below which a would-be denominator factor counts as
    /// singular: |factor| < tol·10.
    pub fn singular_threshold(&self) -> f64 {
        self.tol * 10.0
    }

    /// Build a scalar at this policy's precision.
    pub fn scalar(&self, re: f64, im: f64) -> Scalar {
        Scalar::new(self.prec_bits(), re, im)
    }

    /// Real scalar at this policy's precision.
    pub fn real(&self, re: f64) -> Scalar {
        self.scalar(re, 0.0)
    }

    pub fn zero(&self) -> Scalar {
        self.scalar(0.0, 0.0)
    }

    pub fn one(&self) -> Scalar {
        self.scalar(1.0, 0.0)
    }

    /// Parse a complex literal `RE`, `RE+IMi`, or `RE-IMi` (decimal
    /// components) at this policy's full precision.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        parse_complex(text, self.prec_bits())
    }
}

/// A complex number at a definite working precision.
#[derive(Debug, Clone)]
pub struct Scalar {
    re: Float,
    im: Float,
}

impl Scalar {
    /// New scalar with both parts at `prec` bits.
    pub fn new(prec: u32, re: f64, im: f64) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    /// Assemble from parts (parts keep their own precisions).
    pub fn from_parts(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(prec, 0.0, 0.0)
    }

    pub fn one(prec: u32) -> Self {
        Self::new(prec, 1.0, 0.0)
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn re_f64(&self) -> f64 {
        self.re.to_f64()
    }

    pub fn im_f64(&self) -> f64 {
        self.im.to_f64()
    }

    /// Working precision in bits (the wider of the two parts).
    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Modulus |z| as a real float at this scalar's precision.
    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Exact multiplication by 2^e (the overflow-guard rescaling primitive).
    pub fn scale_pow2(&mut self, e: i32) {
        self.re <<= e;
        self.im <<= e;
    }

    /// Base-2 exponent of the modulus, approximately: the larger exponent of
    /// the two parts. `None` when the value is zero or non-finite.
    pub fn mag_exp(&self) -> Option<i64> {
        let er = self.re.get_exp().map(|e| e as i64);
        let ei = self.im.get_exp().map(|e| e as i64);
        match (er, ei) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        }
    }

    /// Integer power by binary exponentiation; `n < 0` inverts.
    pub fn powi(&self, n: i64) -> Self {
        let prec = self.prec();
        if n == 0 {
            return Self::one(prec);
        }
        let mut base = self.clone();
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if n < 0 {
            &Self::one(prec) / &acc
        } else {
            acc
        }
    }

    /// |self - other| as f64 — convenience for tests and residuals.
    pub fn dist(&self, other: &Scalar) -> f64 {
        (self - other).abs_f64()
    }

    /// Render with `digits` significant decimal digits per part.
    pub fn to_display(&self, digits: usize) -> String {
        let fmt_part = |x: &Float| -> String {
            if x.is_zero() {
                "0".to_string()
            } else {
                format!("{:.*e}", digits.saturating_sub(1), x)
            }
        };
        if self.im.is_zero() {
            fmt_part(&self.re)
        } else if self.im.is_sign_negative() {
            let neg = -self.im.clone();
            format!("{}-{}i", fmt_part(&self.re), fmt_part(&neg))
        } else {
            format!("{}+{}i", fmt_part(&self.re), fmt_part(&self.im))
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Default rendering: enough digits to round-trip the precision.
        let digits = (self.prec() as f64 / std::f64::consts::LOG2_10).floor() as usize;
        write!(f, "{}", self.to_display(digits.max(6)))
    }
}

/// Reports serialize scalars as a plain f64 pair: residual-scale diagnostics
/// never need more, and the representation is byte-stable.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Scalar", 2)?;
        s.serialize_field("re", &self.re_f64())?;
        s.serialize_field("im", &self.im_f64())?;
        s.end()
    }
}

fn bin_prec(a: &Scalar, b: &Scalar) -> u32 {
    a.prec().max(b.prec())
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = bin_prec(a, b);
    Scalar {
        re: Float::with_val(p, &a.re + &b.re),
        im: Float::with_val(p, &a.im + &b.im),
    }
}

fn sub_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = bin_prec(a, b);
    Scalar {
        re: Float::with_val(p, &a.re - &b.re),
        im: Float::with_val(p, &a.im - &b.im),
    }
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = bin_prec(a, b);
    let mut re = Float::with_val(p, &a.re * &b.re);
    re -= Float::with_val(p, &a.im * &b.im);
    let mut im = Float::with_val(p, &a.re * &b.im);
    im += Float::with_val(p, &a.im * &b.re);
    Scalar { re, im }
}

fn div_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = bin_prec(a, b);
    if b.is_zero() {
        // Complex field has no signed infinity worth inventing here; surface
        // a NaN pair, which every caller's is_finite() guard rejects.
        return Scalar {
            re: Float::with_val(p, Special::Nan),
            im: Float::with_val(p, Special::Nan),
        };
    }
    let mut den = Float::with_val(p, &b.re * &b.re);
    den += Float::with_val(p, &b.im * &b.im);
    let mut re = Float::with_val(p, &a.re * &b.re);
    re += Float::with_val(p, &a.im * &b.im);
    re /= &den;
    let mut im = Float::with_val(p, &a.im * &b.re);
    im -= Float::with_val(p, &a.re * &b.im);
    im /= &den;
    Scalar { re, im }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $func(self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $func(self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $func(&self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $func(&self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_impl);
impl_binop!(Sub, sub, sub_impl);
impl_binop!(Mul, mul, mul_impl);
impl_binop!(Div, div, div_impl);

macro_rules! impl_assign {
    ($trait:ident, $method:ident, $func:ident) => {
        impl $trait<&Scalar> for Scalar {
            fn $method(&mut self, rhs: &Scalar) {
                *self = $func(self, rhs);
            }
        }
        impl $trait<Scalar> for Scalar {
            fn $method(&mut self, rhs: Scalar) {
                *self = $func(self, &rhs);
            }
        }
    };
}

impl_assign!(AddAssign, add_assign, add_impl);
impl_assign!(SubAssign, sub_assign, sub_impl);
impl_assign!(MulAssign, mul_assign, mul_impl);
impl_assign!(DivAssign, div_assign, div_impl);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parse `RE`, `RE+IMi`, or `RE-IMi`. Components are decimal floats
/// (scientific notation allowed); the imaginary part, when present, must be
/// terminated by `i`.
pub fn parse_complex(text: &str, prec: u32) -> Result<Scalar> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let parse_part = |part: &str| -> Result<Float> {
        let incomplete = Float::parse(part)
            .map_err(|e| Error::Parse(format!("bad numeric component {part:?}: {e}")))?;
        Ok(Float::with_val(prec, incomplete))
    };
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // RE+IMi / RE-IMi: split at the last '+'/'-' that starts the
        // imaginary component (not a leading sign, not an exponent sign).
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let idx = split
            .ok_or_else(|| Error::Parse(format!("complex literal {s:?} lacks RE±IMi shape")))?;
        let re = parse_part(&body[..idx])?;
        let sign = if bytes[idx] == b'-' { -1.0 } else { 1.0 };
        let im_text = &body[idx + 1..];
        if im_text.is_empty() {
            return Err(Error::Parse(format!(
                "missing imaginary component in {s:?}"
            )));
        }
        let mut im = parse_part(im_text)?;
        if sign < 0.0 {
            im = -im;
        }
        Ok(Scalar::from_parts(re, im))
    } else {
        let re = parse_part(s)?;
        let im = Float::with_val(prec, 0.0);
        Ok(Scalar::from_parts(re, im))
    }
}

/// Total order helper for deterministic sorting of reported points: compares
/// (re, im) lexicographically through f64 projections.
pub fn lex_cmp(a: &Scalar, b: &Scalar) -> Ordering {
    a.re_f64()
        .total_cmp(&b.re_f64())
        .then(a.im_f64().total_cmp(&b.im_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> PrecisionPolicy {
        PrecisionPolicy::standard()
    }

    #[test]
    fn policy_invariants_enforced() {
        assert!(PrecisionPolicy::new(PrecisionMode::Standard, 14, 1e-9, 1000).is_err());
        assert!(PrecisionPolicy::new(PrecisionMode::Extended, 29, 1e-20, 1000).is_err());
        // tol below the 10^(5-digits) floor
        assert!(PrecisionPolicy::new(PrecisionMode::Standard, 15, 1e-11, 1000).is_err());
        assert!(PrecisionPolicy::new(PrecisionMode::Standard, 15, 1e-10, 1000).is_ok());
        assert!(PrecisionPolicy::new(PrecisionMode::Standard, 17, 1e-12, 99).is_err());
        let std = p();
        assert!(std.tol >= 10f64.powi(5 - std.decimal_digits as i32));
        let ext = PrecisionPolicy::extended();
        assert!(ext.decimal_digits >= 30);
        assert!(ext.tol >= 10f64.powi(5 - ext.decimal_digits as i32));
    }

    #[test]
    fn field_arithmetic_matches_f64() {
        let pol = p();
        let a = pol.scalar(1.5, -0.25);
        let b = pol.scalar(0.3, 0.7);
        let sum = &a + &b;
        assert!((sum.re_f64() - 1.8).abs() < 1e-15);
        assert!((sum.im_f64() - 0.45).abs() < 1e-15);
        let prod = &a * &b;
        // (1.5 - 0.25i)(0.3 + 0.7i) = 0.45 + 0.175 + i(1.05 - 0.075)
        assert!((prod.re_f64() - 0.625).abs() < 1e-15);
        assert!((prod.im_f64() - 0.975).abs() < 1e-15);
        let quot = &prod / &b;
        assert!(quot.dist(&a) < 1e-15);
    }

    #[test]
    fn division_by_zero_is_not_finite() {
        let pol = p();
        let z = &pol.one() / &pol.zero();
        assert!(!z.is_finite());
    }

    #[test]
    fn powi_agrees_with_repeated_multiplication() {
        let pol = p();
        let z = pol.scalar(0.8, 0.45);
        let mut acc = pol.one();
        for _ in 0..7 {
            acc = &acc * &z;
        }
        assert!(z.powi(7).dist(&acc) < 1e-15);
        let inv = z.powi(-3);
        let direct = &pol.one() / &z.powi(3);
        assert!(inv.dist(&direct) < 1e-15);
        assert_eq!(z.powi(0), pol.one());
    }

    #[test]
    fn scale_pow2_is_exact() {
        let pol = p();
        let mut z = pol.scalar(0.7, -0.3);
        let orig = z.clone();
        z.scale_pow2(120);
        z.scale_pow2(-120);
        assert_eq!(z, orig);
    }

    #[test]
    fn precision_carries_through_operations() {
        let ext = PrecisionPolicy::extended();
        let a = ext.scalar(1.0, 0.0);
        let b = ext.scalar(3.0, 0.0);
        let third = &a / &b;
        assert_eq!(third.prec(), ext.prec_bits());
        // 1/3 at 40 digits differs from 1/3 at f64 by more than f64 eps
        let coarse = 1.0f64 / 3.0;
        let diff = (third.re() - Float::with_val(third.prec(), coarse)).abs();
        assert!(diff.to_f64() > 0.0 && diff.to_f64() < 1e-16);
    }

    #[test]
    fn parse_complex_forms() {
        let prec = 64;
        let z = parse_complex("1.5", prec).unwrap();
        assert_eq!(z.re_f64(), 1.5);
        assert_eq!(z.im_f64(), 0.0);
        let z = parse_complex("0.25+0.5i", prec).unwrap();
        assert_eq!((z.re_f64(), z.im_f64()), (0.25, 0.5));
        let z = parse_complex("-1.25-2.5i", prec).unwrap();
        assert_eq!((z.re_f64(), z.im_f64()), (-1.25, -2.5));
        let z = parse_complex("1e-3+2.5e-2i", prec).unwrap();
        assert_eq!((z.re_f64(), z.im_f64()), (1e-3, 2.5e-2));
        assert!(parse_complex("", prec).is_err());
        assert!(parse_complex("1.5+i", prec).is_err());
        assert!(parse_complex("i", prec).is_err());
        assert!(parse_complex("1.5+2.5j", prec).is_err());
    }

    #[test]
    fn display_forms() {
        let pol = p();
        assert!(pol.scalar(0.5, 0.0).to_display(6).starts_with("5.0000"));
        let s = pol.scalar(0.5, -0.25).to_display(6);
        assert!(s.contains('-') && s.ends_with('i'), "{s}");
        let s = pol.scalar(0.5, 0.25).to_display(6);
        assert!(s.contains('+') && s.ends_with('i'), "{s}");
    }

    #[test]
    fn mag_exp_tracks_magnitude() {
        let pol = p();
        assert_eq!(pol.zero().mag_exp(), None);
        let z = pol.scalar(1024.0, 0.0);
        assert_eq!(z.mag_exp(), Some(11)); // 1024 = 0.5 * 2^11 in MPFR's normalization
    }
}
