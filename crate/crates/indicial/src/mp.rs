//! Explicit-precision binary floating point and complex arithmetic.
//!
//! Thin wrappers over `astro-float` with the precision (in bits) passed at
//! every operation and a fixed round-to-even mode, so results are
//! deterministic for fixed inputs and precision. Conversions from exact
//! integers and rationals are exact up to the stated precision, and every
//! float converts back to an exact rational (`mantissa * 2^exp`), which is
//! how decimal rendering stays on the single exact code path.

use crate::rational::{render_sig, Decimal};
use crate::{Int, Rat};
use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::Sign as ISign;
use num_traits::Zero;
use std::cell::RefCell;

const RM: RoundingMode = RoundingMode::ToEven;

/// Precisions are rounded up to whole words; some astro-float kernels
/// misbehave at fractional-word precisions.
fn wp(p: usize) -> usize {
    p.div_ceil(64) * 64
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Exact conversion of a big integer (no rounding; the precision of the
/// result covers every bit).
pub fn from_int(v: &Int) -> BigFloat {
    if v.is_zero() {
        return BigFloat::from_f64(0.0, 64);
    }
    let (sign, digits) = v.to_u64_digits();
    let s = if sign == ISign::Minus { Sign::Neg } else { Sign::Pos };
    let e = (digits.len() * 64) as i32;
    BigFloat::from_words(&digits, s, e.into())
}

/// `num/den` rounded to `p` bits.
pub fn from_rat(r: &Rat, p: usize) -> BigFloat {
    let n = from_int(r.numer());
    let d = from_int(r.denom());
    n.div(&d, wp(p), RM)
}

/// Exact value of a finite float as a rational.
pub fn to_rat(x: &BigFloat) -> Option<Rat> {
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let (words, nbits, sign, exp, _) = x.as_raw_parts()?;
    let mant = num_bigint::BigUint::from_slice(
        &words
            .iter()
            .flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32])
            .collect::<Vec<_>>(),
    );
    let mant = Int::from(mant);
    let mant = if sign == Sign::Neg { -mant } else { mant };
    let shift = exp as i64 - nbits as i64;
    Some(if shift >= 0 {
        Rat::from(mant * (Int::from(1) << shift as u64))
    } else {
        Rat::new(mant, Int::from(1) << (-shift) as u64)
    })
}

/// Decimal rendering at `sig` significant digits (exact, via rationals).
pub fn render(x: &BigFloat, sig: usize) -> Decimal {
    match to_rat(x) {
        Some(r) => render_sig(&r, sig),
        None => Decimal {
            negative: false,
            digits: "nan".into(),
            exp10: 0,
        },
    }
}

pub fn pi(p: usize) -> BigFloat {
    CONSTS.with(|c| c.borrow_mut().pi(wp(p), RM))
}

pub fn sin(x: &BigFloat, p: usize) -> BigFloat {
    CONSTS.with(|c| x.sin(wp(p), RM, &mut c.borrow_mut()))
}

pub fn cos(x: &BigFloat, p: usize) -> BigFloat {
    CONSTS.with(|c| x.cos(wp(p), RM, &mut c.borrow_mut()))
}

pub fn exp(x: &BigFloat, p: usize) -> BigFloat {
    CONSTS.with(|c| x.exp(wp(p), RM, &mut c.borrow_mut()))
}

pub fn ln(x: &BigFloat, p: usize) -> BigFloat {
    CONSTS.with(|c| x.ln(wp(p), RM, &mut c.borrow_mut()))
}

pub fn sqrt(x: &BigFloat, p: usize) -> BigFloat {
    x.sqrt(wp(p), RM)
}

pub fn powi(x: &BigFloat, k: usize, p: usize) -> BigFloat {
    x.powi(k, wp(p), RM)
}

pub fn add(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.add(b, wp(p), RM)
}

pub fn sub(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.sub(b, wp(p), RM)
}

pub fn mul(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.mul(b, wp(p), RM)
}

pub fn div(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.div(b, wp(p), RM)
}

pub fn from_f64(v: f64, p: usize) -> BigFloat {
    BigFloat::from_f64(v, wp(p))
}

pub fn from_u64(v: u64, p: usize) -> BigFloat {
    BigFloat::from_u64(v, wp(p))
}

/// Rough magnitude as log2, for working-precision estimates only.
pub fn log2_estimate(x: &BigFloat) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    x.exponent().map(|e| e as i64)
}

/// Complex number at explicit precision. Operations never change precision
/// implicitly; the caller passes `p` everywhere.
#[derive(Clone, Debug)]
pub struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cx {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Cx { re, im }
    }

    pub fn zero(p: usize) -> Self {
        Cx::new(from_f64(0.0, p), from_f64(0.0, p))
    }

    pub fn one(p: usize) -> Self {
        Cx::new(from_f64(1.0, p), from_f64(0.0, p))
    }

    pub fn from_rat(re: &Rat, p: usize) -> Self {
        Cx::new(from_rat(re, p), from_f64(0.0, p))
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        Cx::new(re, from_f64(0.0, p))
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.re.is_inf() || self.im.is_nan() || self.im.is_inf())
    }

    pub fn conj(&self, _p: usize) -> Self {
        Cx::new(self.re.clone(), self.im.neg())
    }

    pub fn add(&self, o: &Cx, p: usize) -> Self {
        Cx::new(add(&self.re, &o.re, p), add(&self.im, &o.im, p))
    }

    pub fn sub(&self, o: &Cx, p: usize) -> Self {
        Cx::new(sub(&self.re, &o.re, p), sub(&self.im, &o.im, p))
    }

    pub fn mul(&self, o: &Cx, p: usize) -> Self {
        let rr = mul(&self.re, &o.re, p);
        let ii = mul(&self.im, &o.im, p);
        let ri = mul(&self.re, &o.im, p);
        let ir = mul(&self.im, &o.re, p);
        Cx::new(sub(&rr, &ii, p), add(&ri, &ir, p))
    }

    pub fn div(&self, o: &Cx, p: usize) -> Self {
        let d = o.norm_sqr(p);
        let num = self.mul(&o.conj(p), p);
        Cx::new(div(&num.re, &d, p), div(&num.im, &d, p))
    }

    pub fn scale(&self, s: &BigFloat, p: usize) -> Self {
        Cx::new(mul(&self.re, s, p), mul(&self.im, s, p))
    }

    pub fn neg(&self, _p: usize) -> Self {
        Cx::new(self.re.neg(), self.im.neg())
    }

    pub fn norm_sqr(&self, p: usize) -> BigFloat {
        add(&mul(&self.re, &self.re, p), &mul(&self.im, &self.im, p), p)
    }

    pub fn abs(&self, p: usize) -> BigFloat {
        sqrt(&self.norm_sqr(p), p)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `exp(self)`.
    pub fn exp_cx(&self, p: usize) -> Self {
        let r = exp(&self.re, p);
        Cx::new(mul(&r, &cos(&self.im, p), p), mul(&r, &sin(&self.im, p), p))
    }

    /// Principal power `x^self` for a positive real base.
    pub fn pow_of_positive_real(&self, x: &BigFloat, p: usize) -> Self {
        let lx = ln(x, p);
        self.scale(&lx, p).exp_cx(p)
    }

    /// Lexicographic (re, im) comparison; total on finite values.
    pub fn cmp_re_im(&self, o: &Cx) -> std::cmp::Ordering {
        match self.re.partial_cmp(&o.re) {
            Some(std::cmp::Ordering::Equal) | None => self
                .im
                .partial_cmp(&o.im)
                .unwrap_or(std::cmp::Ordering::Equal),
            Some(ord) => ord,
        }
    }
}

/// Horner evaluation of a rational-coefficient polynomial at a complex
/// point, with coefficients converted at precision `p`.
pub fn eval_qpoly_cx(coeffs: &[Rat], z: &Cx, p: usize) -> Cx {
    let mut acc = Cx::zero(p);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, p);
        acc.re = add(&acc.re, &from_rat(c, p), p);
    }
    acc
}

/// `2^-k` as a float, for tolerance thresholds.
pub fn pow2(k: i64, p: usize) -> BigFloat {
    let mut one = from_f64(1.0, p);
    one.set_exponent(1 + k as astro_float::Exponent);
    one
}
