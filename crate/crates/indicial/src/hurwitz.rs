//! The Hurwitz matrix of the shifted indicial polynomial, its determinant
//! factorization `det H_{2n}(c) = [q_0 + (-1)^n c] * h_{n-1}(c)`, and the
//! Orlando product identity that cross-checks `h_{n-1}` against the roots.
//!
//! Let `a_0 .. a_{2n}` be the descending coefficients of
//! `D_{2n}(z - 1/2; c)` (so `a_0 = 1` and only `a_{2n}` depends on `c`).
//! The matrix built here is
//!
//! ```text
//!     M[i][j] = (-1)^i a_{2j - i},   i, j = 1..2n  (entries 0 out of range)
//! ```
//!
//! i.e. the classical Hurwitz layout with the odd rows negated. The
//! orientation is pinned by two checks (see the tests): the n = 3 quotient
//! `h_2` must come out coefficient-for-coefficient as
//! `-5832 c^2 + 207083520 c + 146313216000`, and Orlando's formula must
//! hold with constant one:
//!
//! ```text
//!     h_{n-1}(c) = prod_{j1 < j2} [(alpha_{j1} + 1/2) + (alpha_{j2} + 1/2)].
//! ```
//!
//! With the raw even/odd interleaving and no row negation, the determinant
//! identity picks up a stray `(-1)^n`; the negated odd rows absorb it for
//! every `n` at once. `c` appears only in even rows either way.

use crate::indicial::{build_indicial, shifted_coeffs, ShiftedCoeffs};
use crate::matrix::{bareiss_det_generic, PolyMatrix};
use crate::mp::{self, Cx};
use crate::poly::Polynomial;
use crate::rootcount::numeric_roots;
use crate::{Error, Int, QPoly, QPolyMatrix, Rat, Result};
use num_traits::{One, Signed, Zero};

/// Above this matrix size the symbolic Bareiss determinant in Q[c] is
/// replaced by exact evaluation at n+1 integer points plus Lagrange
/// interpolation (still fraction-free at every step, just over Q instead
/// of Q[c]). Both paths are exact; the cutoff only trades speed.
const DIRECT_DET_MAX_SIZE: usize = 16;

/// The assembled matrix together with the determinant factorization.
#[derive(Clone, Debug)]
pub struct HurwitzFamily {
    n: u32,
    matrix: QPolyMatrix,
    det: QPoly,
    h_poly: QPoly,
    linear_factor: QPoly,
}

impl HurwitzFamily {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The `2n x 2n` matrix over Q[c]; every entry has degree <= 1.
    pub fn matrix(&self) -> &QPolyMatrix {
        &self.matrix
    }

    /// `det H_{2n}` as a degree-n polynomial in `c`.
    pub fn det(&self) -> &QPoly {
        &self.det
    }

    /// `h_{n-1}`, degree n-1 in `c`.
    pub fn h_poly(&self) -> &QPoly {
        &self.h_poly
    }

    /// `q_0 + (-1)^n c`.
    pub fn linear_factor(&self) -> &QPoly {
        &self.linear_factor
    }

    pub fn h_at(&self, c: &Rat) -> Rat {
        self.h_poly.eval(c)
    }
}

/// Descending coefficients `a_0 .. a_{2n}` of `D_{2n}(z - 1/2; c)` with the
/// coupling kept symbolic: each entry is a polynomial in `c` of degree <= 1.
fn descending_coeffs_in_c(n: u32, q: &ShiftedCoeffs) -> Vec<QPoly> {
    let deg = 2 * n as usize;
    let mut a: Vec<QPoly> = (0..=deg)
        .map(|k| QPoly::constant(q.q()[deg - k].clone()))
        .collect();
    let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
    a[deg] = &a[deg] + &Polynomial::monomial(sign, 1);
    a
}

/// Assemble the matrix and factor the determinant.
pub fn build_hurwitz(n: u32) -> Result<HurwitzFamily> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    let fam = build_indicial(n)?;
    let q = shifted_coeffs(&fam)?;
    let size = 2 * n as usize;
    let a = descending_coeffs_in_c(n, &q);
    let matrix = PolyMatrix::from_fn(size, size, |i0, j0| {
        let (i, j) = (i0 + 1, j0 + 1);
        let k = 2 * j as isize - i as isize;
        if k < 0 || k as usize > size {
            return QPoly::zero();
        }
        let entry = a[k as usize].clone();
        if i % 2 == 1 {
            -&entry
        } else {
            entry
        }
    });
    let det = if size <= DIRECT_DET_MAX_SIZE {
        matrix.bareiss_det()?
    } else {
        det_by_interpolation(n, &q)?
    };
    let linear_factor = a[size].clone();
    let h_poly = det.exact_div(&linear_factor).map_err(|_| {
        Error::Invariant("linear factor does not divide det H exactly".into())
    })?;
    if h_poly.degree() != Some(n as usize - 1) {
        return Err(Error::Invariant(format!(
            "h polynomial has degree {:?}, expected {}",
            h_poly.degree(),
            n - 1
        )));
    }
    Ok(HurwitzFamily {
        n,
        matrix,
        det,
        h_poly,
        linear_factor,
    })
}

/// Exact determinant of `H_{2n}(c)` by evaluation at the integer points
/// `c = 0..n` and Lagrange interpolation. Each evaluation clears the
/// power-of-two denominators row by row (positive scalings) and runs
/// integer Bareiss.
fn det_by_interpolation(n: u32, q: &ShiftedCoeffs) -> Result<QPoly> {
    let size = 2 * n as usize;
    let pts: Vec<Rat> = (0..=n as i64).map(|k| Rat::from(Int::from(k))).collect();
    let vals: Vec<Rat> = pts
        .iter()
        .map(|c| det_at_rational(n, q, c))
        .collect::<Result<Vec<_>>>()?;
    let _ = size;
    Ok(lagrange_interpolate(&pts, &vals))
}

/// `det H_{2n}(c)` at a fixed rational `c`, via integer Bareiss on the
/// denominator-cleared matrix.
pub(crate) fn det_at_rational(n: u32, q: &ShiftedCoeffs, c: &Rat) -> Result<Rat> {
    let size = 2 * n as usize;
    let a = descending_rats(n, q, c);
    // row i holds entries a_{2j-i}: clear denominators per row
    let mut scale = Rat::one();
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(size);
    for i in 1..=size {
        let mut l = Int::one();
        for j in 1..=size {
            let k = 2 * j as isize - i as isize;
            if k >= 0 && (k as usize) <= size {
                l = num_integer::Integer::lcm(&l, a[k as usize].denom());
            }
        }
        let mut row = Vec::with_capacity(size);
        for j in 1..=size {
            let k = 2 * j as isize - i as isize;
            let v = if k < 0 || k as usize > size {
                Int::zero()
            } else {
                let e = &a[k as usize];
                let s: Int = if i % 2 == 1 { -Int::one() } else { Int::one() };
                e.numer() * (&l / e.denom()) * s
            };
            row.push(v);
        }
        scale = scale * Rat::from(l);
        rows.push(row);
    }
    let det_scaled = bareiss_det_generic(size, |i, j| rows[i][j].clone())?;
    Ok(Rat::from(det_scaled) / scale)
}

fn descending_rats(n: u32, q: &ShiftedCoeffs, c: &Rat) -> Vec<Rat> {
    let deg = 2 * n as usize;
    let mut a: Vec<Rat> = (0..=deg).map(|k| q.q()[deg - k].clone()).collect();
    a[deg] = q.constant_with(n, c);
    a
}

fn lagrange_interpolate(xs: &[Rat], ys: &[Rat]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, yi) in ys.iter().enumerate() {
        let mut basis = QPoly::constant(Rat::one());
        let mut denom = Rat::one();
        for (j, xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = &basis * &Polynomial::new(vec![-xj.clone(), Rat::one()]);
            denom = denom * (&xs[i] - xj);
        }
        acc = acc + &basis.scale(&(yi / &denom));
    }
    acc
}

/// Orlando's product over all root pairs,
/// `prod_{j1<j2} [(alpha_{j1}(c) + 1/2) + (alpha_{j2}(c) + 1/2)]`,
/// computed from the certified numeric roots with multiplicity.
pub fn orlando_product(n: u32, c: &Rat, precision: usize) -> Result<Cx> {
    let inv = numeric_roots(n, c, precision)?;
    let p = precision.max(53);
    let one = mp::from_f64(1.0, p);
    let mut flat: Vec<Cx> = Vec::with_capacity(2 * n as usize);
    for (root, mult) in inv.roots() {
        for _ in 0..*mult {
            flat.push(root.clone());
        }
    }
    let mut prod = Cx::one(p);
    for i in 0..flat.len() {
        for j in i + 1..flat.len() {
            let s = flat[i].add(&flat[j], p);
            let term = Cx::new(mp::add(&s.re, &one, p), s.im.clone());
            prod = prod.mul(&term, p);
        }
    }
    Ok(prod)
}

/// `|orlando_product - h_{n-1}(c)| / max(1, |h_{n-1}(c)|)` at the given
/// precision; the two sides come from independent routes (numeric roots vs
/// the exact determinant quotient), so this is a genuine cross-check.
pub fn orlando_check(n: u32, c: &Rat, precision: usize) -> Result<f64> {
    let fam = build_hurwitz(n)?;
    let p = precision.max(53);
    let exact = fam.h_at(c);
    let prod = orlando_product(n, c, precision)?;
    let target = Cx::from_rat(&exact, p);
    let diff = prod.sub(&target, p).abs(p);
    let denom = if exact.abs() > Rat::one() {
        mp::from_rat(&exact.abs(), p)
    } else {
        mp::from_f64(1.0, p)
    };
    let rel = mp::div(&diff, &denom, p);
    Ok(crate::rational::rat_to_f64(
        &mp::to_rat(&rel).unwrap_or_else(|| Rat::from(Int::from(-1))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{qpoly_from_ints, qpoly_from_strs};
    use crate::indicial::q0_closed_form;
        use crate::rational::parse_rat;

    #[test]
    fn n1_is_the_one_by_two_case() {
        let f = build_hurwitz(1).unwrap();
        // thresholds come solely from the linear factor 3/4 - c
        assert_eq!(f.h_poly(), &qpoly_from_ints(&[2]));
        assert_eq!(
            f.linear_factor(),
            &qpoly_from_strs(&["3/4", "-1"]).unwrap()
        );
        assert_eq!(f.det(), &qpoly_from_strs(&["3/2", "-2"]).unwrap());
    }

    #[test]
    fn n2_h_is_linear_with_root_45() {
        let f = build_hurwitz(2).unwrap();
        assert_eq!(f.h_poly(), &qpoly_from_ints(&[2880, -64]));
        assert_eq!(
            f.h_poly().eval(&parse_rat("45").unwrap()),
            Rat::zero()
        );
    }

    #[test]
    fn n3_h_matches_the_published_quadratic() {
        let f = build_hurwitz(3).unwrap();
        assert_eq!(
            f.h_poly(),
            &qpoly_from_strs(&["146313216000", "207083520", "-5832"]).unwrap()
        );
        // det = (10395/64 - c) * h_2(c)
        let lin = qpoly_from_strs(&["10395/64", "-1"]).unwrap();
        assert_eq!(f.linear_factor(), &lin);
        assert_eq!(f.det(), &(&lin * f.h_poly()));
    }

    #[test]
    fn one_by_one_bareiss_example() {
        // the 1x1 matrix [q0 + (-1)^n c] for n = 1 has determinant 3/4 - c
        let m = PolyMatrix::from_fn(1, 1, |_, _| qpoly_from_strs(&["3/4", "-1"]).unwrap());
        assert_eq!(
            m.bareiss_det().unwrap(),
            qpoly_from_strs(&["3/4", "-1"]).unwrap()
        );
    }

    #[test]
    fn coupling_only_in_even_rows() {
        for n in [1u32, 2, 3, 4] {
            let f = build_hurwitz(n).unwrap();
            let m = f.matrix();
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let dc = m.at(i, j).coeff(1);
                    if (i + 1) % 2 == 1 {
                        assert!(dc.is_zero(), "n={n} odd row {} has c", i + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn leading_coefficient_normalization() {
        for n in 1..=6u32 {
            let f = build_hurwitz(n).unwrap();
            let lead = f.h_poly().leading().unwrap().clone();
            let expect = {
                let base = Rat::from(Int::from(2 * (n as i64) * (n as i64)));
                let mut acc = Rat::one();
                for _ in 0..n {
                    acc = acc * &base;
                }
                if (n / 2) % 2 == 1 {
                    -acc
                } else {
                    acc
                }
            };
            assert_eq!(lead, expect, "n={n}");
        }
    }

    #[test]
    fn interpolated_det_matches_direct() {
        for n in [2u32, 4, 6, 8] {
            let fam = build_indicial(n).unwrap();
            let q = shifted_coeffs(&fam).unwrap();
            let direct = build_hurwitz(n).unwrap();
            let interp = det_by_interpolation(n, &q).unwrap();
            assert_eq!(direct.det(), &interp, "n={n}");
        }
    }

    #[test]
    fn det_vanishes_at_the_distinguished_rational() {
        for n in 1..=5u32 {
            let f = build_hurwitz(n).unwrap();
            let c = if n % 2 == 1 {
                q0_closed_form(n)
            } else {
                -q0_closed_form(n)
            };
            assert!(f.det().eval(&c).is_zero(), "n={n}");
            assert!(!f.h_at(&c).is_zero(), "n={n}: h must not share the root");
        }
    }
}
