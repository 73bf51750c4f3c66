//! The indicial family `D_{2n}(z; c) = prod_{j=1}^{2n} [z - (j-1)] + (-1)^n c`
//! and its derived data: the coefficients of the `-1/2` shift, the closed
//! forms for the shifted constant term and the semiboundedness borderline,
//! and the comparison roots of the unperturbed binomial family.
//!
//! The coupling `c` enters only through the constant term, so the family
//! stores the base polynomial `P(z) = D_{2n}(z; 0)` together with the sign
//! `(-1)^n` instead of a bivariate polynomial.

use crate::mp::{self, Cx};
use crate::poly::Polynomial;
use crate::{Error, Int, QPoly, Rat, Result};
use num_traits::{One, Signed, Zero};

/// The pair `(n, P)` with `P(z) = D_{2n}(z; 0)`.
#[derive(Clone, Debug)]
pub struct IndicialFamily {
    n: u32,
    base: QPoly,
}

impl IndicialFamily {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(-1)^n`, the sign with which `c` enters the constant term.
    pub fn sign(&self) -> i32 {
        if self.n % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `P(z) = D_{2n}(z; 0) = z (z-1) ... (z - (2n-1))`, monic of degree `2n`.
    pub fn base(&self) -> &QPoly {
        &self.base
    }

    /// `D_{2n}(.; c)` as a polynomial in `z` for a fixed rational `c`.
    pub fn at(&self, c: &Rat) -> QPoly {
        let mut coeffs = self.base.coeffs().to_vec();
        let term = if self.sign() < 0 { -c.clone() } else { c.clone() };
        coeffs[0] = &coeffs[0] + &term;
        Polynomial::new(coeffs)
    }

    /// `D_{2n}(z; c)` at a rational point.
    pub fn value(&self, z: &Rat, c: &Rat) -> Rat {
        let term = if self.sign() < 0 { -c.clone() } else { c.clone() };
        self.base.eval(z) + term
    }
}

/// Build the family for order parameter `n >= 1`.
pub fn build_indicial(n: u32) -> Result<IndicialFamily> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    let mut base = QPoly::constant(Rat::one());
    for j in 0..2 * n as i64 {
        let lin = QPoly::new(vec![Rat::from(Int::from(-j)), Rat::one()]);
        base = &base * &lin;
    }
    Ok(IndicialFamily { n, base })
}

/// Odd double factorial `(2k-1)!! = 1 * 3 * 5 * ... * (2k-1)`.
pub fn odd_double_factorial(k: u32) -> Int {
    let mut acc = Int::one();
    let mut f = Int::one();
    for _ in 0..k {
        acc *= &f;
        f += 2;
    }
    acc
}

/// `q_0 = (4n-1)!! / 2^{2n}`, the constant term of `D_{2n}(z - 1/2; 0)`.
pub fn q0_closed_form(n: u32) -> Rat {
    Rat::new(odd_double_factorial(2 * n), Int::one() << (2 * n) as u64)
}

/// `[(2n-1)!!]^2 / 2^{2n}`: `-c` at this value is the borderline below
/// which the minimal operator stops being bounded from below.
pub fn birman_constant(n: u32) -> Rat {
    let d = odd_double_factorial(n);
    Rat::new(&d * &d, Int::one() << (2 * n) as u64)
}

/// Coefficients `q_0 .. q_{2n}` of `D_{2n}(z - 1/2; 0)` in ascending
/// degree; for nonzero `c` the constant term becomes `q_0 + (-1)^n c`.
#[derive(Clone, Debug)]
pub struct ShiftedCoeffs {
    q: Vec<Rat>,
}

impl ShiftedCoeffs {
    pub fn q(&self) -> &[Rat] {
        &self.q
    }

    pub fn q0(&self) -> &Rat {
        &self.q[0]
    }

    /// Constant term with the coupling folded in: `q_0 + (-1)^n c`.
    pub fn constant_with(&self, n: u32, c: &Rat) -> Rat {
        if n % 2 == 0 {
            self.q0() + c
        } else {
            self.q0() - c
        }
    }
}

/// Shift the family by `-1/2` and return the exact coefficients. The
/// constant term is cross-checked against the closed form; a mismatch
/// means the polynomial arithmetic above it is broken.
pub fn shifted_coeffs(fam: &IndicialFamily) -> Result<ShiftedCoeffs> {
    let half = Rat::new(Int::from(-1), Int::from(2));
    let shifted = fam.base().taylor_shift(&half);
    let q: Vec<Rat> = (0..=2 * fam.n() as usize).map(|k| shifted.coeff(k)).collect();
    let expect = q0_closed_form(fam.n());
    if q[0] != expect {
        return Err(Error::Invariant(format!(
            "shifted constant term {} differs from the closed form {}",
            q[0], expect
        )));
    }
    if !q[2 * fam.n() as usize].is_one() {
        return Err(Error::Invariant("shifted polynomial is not monic".into()));
    }
    Ok(ShiftedCoeffs { q })
}

/// The `2n` roots of `[z - (n - 1/2)]^{2n} + (-1)^n c = 0`: the center
/// `n - 1/2` plus the 2n-th roots of `(-1)^{n-1} c`, sorted by (re, im)
/// ascending. These are the straight-line comparison curves the true roots
/// approach as `|c|` grows.
pub fn beta_roots(n: u32, c: &Rat, precision: usize) -> Vec<Cx> {
    let p = precision.max(53);
    let deg = 2 * n as usize;
    let center = mp::from_rat(&Rat::new(Int::from(2 * n as i64 - 1), Int::from(2)), p);
    if c.is_zero() {
        let z = Cx::real(center, p);
        return vec![z; deg];
    }
    // radicand (-1)^(n-1) c: positive -> angles 2 pi k / 2n, else offset pi/2n
    let radicand_positive = (n % 2 == 1) == c.is_positive();
    let r = {
        let a = mp::from_rat(&c.abs(), p);
        let ln_a = mp::ln(&a, p);
        let k = mp::div(&ln_a, &mp::from_u64(deg as u64, p), p);
        mp::exp(&k, p)
    };
    let pi = mp::pi(p);
    let mut out = Vec::with_capacity(deg);
    for k in 0..deg {
        let theta = {
            let base = mp::mul(&pi, &mp::from_u64(2 * k as u64, p), p);
            let num = if radicand_positive {
                base
            } else {
                mp::add(&base, &pi, p)
            };
            mp::div(&num, &mp::from_u64(deg as u64, p), p)
        };
        let re = mp::add(&center, &mp::mul(&r, &mp::cos(&theta, p), p), p);
        let im = mp::mul(&r, &mp::sin(&theta, p), p);
        out.push(Cx::new(re, im));
    }
    out.sort_by(|a, b| a.cmp_re_im(b));
    out
}
