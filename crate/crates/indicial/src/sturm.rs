//! Certified real-root counting and isolation via Sturm sequences.
//!
//! The chain is built over primitive integer polynomials using signed
//! pseudo-remainders with content stripping, which contains coefficient
//! growth well enough for the degree-50 polynomials that show up at the
//! largest orders handled here. Counts follow the half-open convention:
//! `count(lo, hi)` is the number of distinct real roots in `(lo, hi]`.

use crate::poly::Polynomial;
use crate::rational::rat_to_f64;
use crate::{Error, Int, QPoly, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type ZPoly = Polynomial<Int>;

/// One endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// Clear denominators and divide by the integer content; the scaling is by
/// a positive rational, so all sign information survives.
fn primitive_int(p: &QPoly) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let mut l = Int::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<Int> = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = Int::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    ZPoly::new(ints.into_iter().map(|c| &c / &g).collect())
}

/// Signed pseudo-remainder: the remainder of `|lc(b)|^(da-db+1) * a` by `b`.
/// The positive premultiplier preserves the sign pattern Sturm needs.
fn signed_prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    debug_assert!(da >= db);
    let lead = b.leading().unwrap().abs();
    let mut rem: Vec<Int> = a.coeffs().to_vec();
    let bneg = b.leading().unwrap().is_negative();
    for i in (db..=da).rev() {
        // rem <- lead * rem - rem[i] * x^(i-db) * b  (sign-adjusted so the
        // effective divisor has positive leading coefficient)
        let top = rem[i].clone();
        for c in rem.iter_mut() {
            *c = &*c * &lead;
        }
        if top.is_zero() {
            continue;
        }
        let factor = if bneg { -top } else { top };
        for (j, bc) in b.coeffs().iter().enumerate() {
            rem[i - db + j] -= &factor * bc;
        }
        debug_assert!(rem[i].is_zero());
    }
    rem.truncate(db);
    ZPoly::new(rem)
}

/// Sturm chain of a rational polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

impl SturmChain {
    /// Build the chain `p, p', -prem(...), ...` with primitive-part
    /// stripping at every step. Errors on the zero polynomial.
    pub fn new(p: &QPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = primitive_int(p);
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap() >= 1 {
            let p1 = {
                let d = p0.derivative();
                let mut g = Int::zero();
                for c in d.coeffs() {
                    g = g.gcd(c);
                }
                ZPoly::new(d.coeffs().iter().map(|c| c / &g).collect())
            };
            chain.push(p1);
            loop {
                let k = chain.len();
                let (a, b) = (&chain[k - 2], &chain[k - 1]);
                if b.degree().is_none() {
                    break;
                }
                if b.degree() == Some(0) {
                    break;
                }
                let r = signed_prem(a, b);
                if r.is_zero() {
                    break;
                }
                let mut g = Int::zero();
                for c in r.coeffs() {
                    g = g.gcd(c);
                }
                let next = ZPoly::new(r.coeffs().iter().map(|c| -(c / &g)).collect());
                chain.push(next);
            }
        }
        Ok(SturmChain { chain })
    }

    fn signs_at(&self, x: &Bound) -> Vec<i8> {
        self.chain
            .iter()
            .map(|p| match x {
                Bound::Finite(v) => sign_rat_eval(p, v),
                Bound::PosInf => sign_int(p.leading().unwrap()),
                Bound::NegInf => {
                    let s = sign_int(p.leading().unwrap());
                    if p.degree().unwrap() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
            })
            .collect()
    }

    fn variations(signs: &[i8]) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for &s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`. The underlying
    /// polynomial must be square-free on the queried interval.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let v_lo = Self::variations(&self.signs_at(lo));
        let v_hi = Self::variations(&self.signs_at(hi));
        v_lo.saturating_sub(v_hi)
    }
}

fn sign_int(v: &Int) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Sign of `p(x)` for integer `p` and rational `x = a/b`, evaluated as the
/// integer `b^deg p(a/b)` via Horner.
fn sign_rat_eval(p: &ZPoly, x: &Rat) -> i8 {
    let a = x.numer();
    let b = x.denom();
    let mut acc = Int::zero();
    let mut bpow = Int::one();
    // sum c_k a^k b^(d-k): Horner in a with a trailing b-multiplication
    for c in p.coeffs().iter().rev() {
        acc = &acc * a + c * &bpow;
        bpow *= b;
    }
    // note: loop multiplies by one extra b; harmless for the sign
    sign_int(&acc)
}

/// Number of distinct real roots of `p` in `(lo, hi]`, exactly.
/// Precondition: `p` square-free on the interval; errors on zero `p`.
pub fn sturm_count(p: &QPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// An interval `(lo, hi]` certified (by Sturm count) to contain exactly one
/// real root of the stored square-free polynomial.
#[derive(Clone, Debug)]
pub struct IsolatingInterval {
    lo: Rat,
    hi: Rat,
    poly: QPoly,
    // primitive integer form, cached: sign evaluations are the hot path
    zp: Polynomial<Int>,
    sign_hi: i8,
}

impl IsolatingInterval {
    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from(Int::from(2))
    }

    /// Bisect until `width <= eps`, keeping the root inside `(lo, hi]`.
    pub fn refine_to(&mut self, eps: &Rat) {
        let two = Rat::from(Int::from(2));
        while self.width() > *eps {
            let mid = self.midpoint();
            let s = sign_rat_eval(&self.zp, &mid);
            if s == 0 {
                // the root is exactly the midpoint; clamp around it
                let quarter = self.width() / &two / &two;
                self.lo = &mid - &quarter;
                self.hi = mid;
                self.sign_hi = 0;
                continue;
            }
            if self.sign_hi != 0 && s == self.sign_hi {
                self.hi = mid;
            } else if self.sign_hi == 0 {
                // root sits exactly at hi; shrink from the left
                self.lo = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    /// Default certification width: `2^-80 * max(1, |midpoint|)`.
    pub fn refine_default(&mut self) {
        let m = self.midpoint().abs();
        let one = Rat::one();
        let scale = if m > one { m } else { Rat::one() };
        let eps = scale / Rat::from(Int::one() << 80);
        self.refine_to(&eps);
    }

    /// The root as an exact rational, when bisection has pinned it (the
    /// upper endpoint is a root of the stored polynomial).
    pub fn exact_root(&self) -> Option<Rat> {
        (self.sign_hi == 0).then(|| self.hi.clone())
    }

    /// Where does `x` sit relative to the unique root? `Equal` means `x`
    /// is exactly the root (decided by evaluating the polynomial).
    pub fn compare_point(&mut self, x: &Rat) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if sign_rat_eval(&self.zp, x) == 0 && *x > self.lo && *x <= self.hi {
            return Equal;
        }
        loop {
            if *x <= self.lo {
                return Greater; // the root exceeds x
            }
            if *x > self.hi {
                return Less;
            }
            let w = self.width();
            self.refine_to(&(w / Rat::from(Int::from(4))));
        }
    }
}

/// Strict root bound (Cauchy), rounded up to a power of two.
fn root_bound(p: &QPoly) -> Rat {
    let lead = p.leading().unwrap();
    let mut m = Rat::zero();
    for c in p.coeffs() {
        let r = (c / lead).abs();
        if r > m {
            m = r;
        }
    }
    let b = m + Rat::one();
    let mut pow = Rat::one();
    let two = Rat::from(Int::from(2));
    while pow < b {
        pow = pow * &two;
    }
    pow
}

/// Fast path for polynomials with all roots real and simple (the
/// threshold polynomials are, by the structure theorem). Floating Aberth
/// iteration approximates the roots at any scale cheaply; short dyadic
/// separators between consecutive approximations are then checked by
/// exact sign evaluation. Finding deg(sf) sign changes certifies exactly
/// one root per interval; anything less returns `None` and the caller
/// falls back to Sturm bisection.
fn isolate_if_all_real(sf: &QPoly) -> Option<Vec<IsolatingInterval>> {
    let deg = sf.degree()?;
    let zp = primitive_int(sf);
    if deg == 0 {
        return Some(Vec::new());
    }
    let bound = root_bound(sf);
    for p in [192usize, 448, 960] {
        let Some(mut res) = approx_real_parts(sf, p) else {
            continue;
        };
        res.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        let mut separators: Vec<Rat> = Vec::with_capacity(deg + 1);
        separators.push(-bound.clone());
        for w in res.windows(2) {
            if let Some(s) = short_dyadic_between(&w[0], &w[1]) {
                separators.push(s);
            }
        }
        separators.push(bound.clone());
        separators.sort();
        separators.dedup();
        // move separators off exact roots
        for s in separators.iter_mut() {
            let mut tries = 0;
            while sign_rat_eval(&zp, s) == 0 && tries < 8 {
                let scale = s.abs() + Rat::one();
                *s = &*s + &(scale / Rat::from(Int::one() << 70));
                tries += 1;
            }
        }
        let mut out = Vec::with_capacity(deg);
        for w in separators.windows(2) {
            let (u, v) = (&w[0], &w[1]);
            let su = sign_rat_eval(&zp, u);
            let sv = sign_rat_eval(&zp, v);
            if su != sv && su != 0 && sv != 0 {
                out.push(IsolatingInterval {
                    lo: u.clone(),
                    hi: v.clone(),
                    poly: sf.clone(),
                    zp: zp.clone(),
                    sign_hi: sv,
                });
            }
        }
        if out.len() == deg {
            return Some(out);
        }
    }
    None
}

/// Real parts of floating Aberth approximations to the roots of `sf`.
fn approx_real_parts(sf: &QPoly, p: usize) -> Option<Vec<astro_float::BigFloat>> {
    use crate::mp::{self, Cx};
    let deg = sf.degree()?;
    let coeffs: Vec<Cx> = sf.coeffs().iter().map(|c| Cx::from_rat(c, p)).collect();
    let dcoeffs: Vec<Cx> = sf
        .derivative()
        .coeffs()
        .iter()
        .map(|c| Cx::from_rat(c, p))
        .collect();
    let eval = |cs: &[Cx], z: &Cx| {
        let mut acc = Cx::zero(p);
        for c in cs.iter().rev() {
            acc = acc.mul(z, p).add(c, p);
        }
        acc
    };
    // Newton-polygon initialization: per-root radius estimates from the
    // upper convex hull of (i, log2|a_i|), which handles coefficient
    // scales spanning hundreds of binary orders of magnitude
    let radii = newton_polygon_radii(sf, deg, p);
    let pi = mp::pi(p);
    let mut z: Vec<Cx> = (0..deg)
        .map(|k| {
            let theta = mp::div(
                &mp::mul(&pi, &mp::from_f64(2.0 * k as f64 + 0.4, p), p),
                &mp::from_u64(deg as u64, p),
                p,
            );
            let r = &radii[k];
            Cx::new(mp::mul(r, &mp::cos(&theta, p), p), mp::mul(r, &mp::sin(&theta, p), p))
        })
        .collect();
    let tol = mp::pow2(-(p as i64) + 32, p);
    for _sweep in 0..400 {
        let mut worst = mp::from_f64(0.0, p);
        for k in 0..deg {
            let fz = eval(&coeffs, &z[k]);
            if fz.is_zero() {
                continue;
            }
            let dfz = eval(&dcoeffs, &z[k]);
            let newton = if dfz.is_zero() {
                Cx::new(mp::pow2(-8, p), mp::from_f64(0.0, p))
            } else {
                fz.div(&dfz, p)
            };
            let mut s = Cx::zero(p);
            for j in 0..deg {
                if j != k {
                    let d = z[k].sub(&z[j], p);
                    if !d.is_zero() {
                        s = s.add(&Cx::one(p).div(&d, p), p);
                    }
                }
            }
            let denom = Cx::one(p).sub(&newton.mul(&s, p), p);
            let w = if denom.is_zero() { newton } else { newton.div(&denom, p) };
            z[k] = z[k].sub(&w, p);
            if !z[k].is_finite() {
                return None;
            }
            let scale = mp::add(&mp::from_f64(1.0, p), &z[k].abs(p), p);
            let rel = mp::div(&w.abs(p), &scale, p);
            if rel > worst {
                worst = rel;
            }
        }
        if worst < tol {
            return Some(z.into_iter().map(|c| c.re).collect());
        }
    }
    None
}

/// Root-modulus estimates from the upper convex hull of the points
/// `(i, log2 |a_i|)`: the hull edge joining `(i, y_i)` to `(k, y_k)` with
/// `i < k` accounts for `k - i` roots of modulus about
/// `2^((y_i - y_k)/(k - i))`, ascending along the hull.
fn newton_polygon_radii(sf: &QPoly, deg: usize, p: usize) -> Vec<astro_float::BigFloat> {
    use crate::mp;
    // exact bit lengths of the primitive integer coefficients
    let zp = primitive_int(sf);
    let pts: Vec<(usize, f64)> = zp
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.bits() as f64))
        .collect();
    // upper hull, left to right
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(x, y) in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross = (x2 as f64 - x1 as f64) * (y - y1) - (x as f64 - x1 as f64) * (y2 - y1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    let mut radii = Vec::with_capacity(deg);
    for w in hull.windows(2) {
        let (i, yi) = w[0];
        let (k, yk) = w[1];
        let slope = (yi - yk) / (k - i) as f64; // log2 of the modulus
        let two = mp::from_f64(2.0, p);
        let r = {
            let l = mp::ln(&two, p);
            mp::exp(&mp::mul(&l, &mp::from_f64(slope, p), p), p)
        };
        for _ in 0..(k - i) {
            radii.push(r.clone());
        }
    }
    while radii.len() < deg {
        radii.push(mp::from_f64(1.0, p));
    }
    radii.truncate(deg);
    radii
}

/// A rational with a short binary representation strictly between `a` and
/// `b` (when they are distinct and finite).
fn short_dyadic_between(a: &astro_float::BigFloat, b: &astro_float::BigFloat) -> Option<Rat> {
    use crate::mp;
    let p = 128usize;
    let mid = mp::div(&mp::add(a, b, p), &mp::from_f64(2.0, p), p);
    // round the midpoint to ~56 significant bits for cheap exact evals
    let rounded = mp::add(&mid, &mp::from_f64(0.0, 56), 56);
    let r = mp::to_rat(&rounded)?;
    let ra = mp::to_rat(a)?;
    let rb = mp::to_rat(b)?;
    (r > ra && r < rb).then_some(r)
}

/// Fast square-freeness certificate: if `gcd(f, f') mod p` is constant for
/// a prime not dividing the leading coefficient, the rational gcd is
/// constant too (reduction can only grow the gcd degree), so `p` is
/// square-free and the expensive rational gcd can be skipped.
fn squarefree_by_modular_witness(zp: &ZPoly) -> bool {
    use crate::galois::ModPoly;
    for p in [4611686018427387847u64, 4611686018427387817, 2305843009213693951] {
        let lead = zp.leading().unwrap();
        if (lead % Int::from(p)).is_zero() {
            continue;
        }
        let fp = ModPoly::new(
            p,
            zp.coeffs()
                .iter()
                .map(|c| {
                    use num_traits::ToPrimitive;
                    c.mod_floor(&Int::from(p)).to_u64().unwrap()
                })
                .collect(),
        );
        if fp.degree() != zp.degree() {
            continue;
        }
        let g = fp.gcd(&fp.derivative());
        return g.degree() == Some(0);
    }
    false
}

/// Isolate all distinct real roots of `p`: disjoint certified intervals in
/// ascending order, one per root. Errors on the zero polynomial;
/// constants isolate to an empty list.
pub fn isolate_real_roots(p: &QPoly) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = if squarefree_by_modular_witness(&primitive_int(p)) {
        p.monic()
    } else {
        p.squarefree_part()?
    };
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    if let Some(v) = isolate_if_all_real(&sf) {
        return Ok(v);
    }
    let chain = SturmChain::new(&sf)?;
    let zp = primitive_int(&sf);
    let bound = root_bound(&sf);
    let total = chain.count(&Bound::Finite(-bound.clone()), &Bound::Finite(bound.clone()));
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(-bound.clone(), bound.clone(), total)];
    while let Some((lo, hi, k)) = stack.pop() {
        match k {
            0 => {}
            1 => {
                let s_hi = sign_rat_eval(&zp, &hi);
                out.push(IsolatingInterval {
                    lo,
                    hi,
                    poly: sf.clone(),
                    zp: zp.clone(),
                    sign_hi: s_hi,
                });
            }
            _ => {
                let mid = (&lo + &hi) / Rat::from(Int::from(2));
                let left = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()));
                // push right first so the stack pops left-to-right
                stack.push((mid.clone(), hi, k - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// Convenience: one refined interval per root, default width.
pub fn isolate_and_refine(p: &QPoly) -> Result<Vec<IsolatingInterval>> {
    let mut v = isolate_real_roots(p)?;
    for iv in &mut v {
        iv.refine_default();
    }
    Ok(v)
}

/// f64 estimate of the midpoint, for diagnostics and initial guesses.
pub fn interval_to_f64(iv: &IsolatingInterval) -> f64 {
    rat_to_f64(&iv.midpoint())
}
