//! Data behind the root-trajectory figure: real parts of the roots of
//! `D_{2n}(.; c)` and of the comparison binomial family over a grid in the
//! rescaled coordinate `x = sgn(c) |c|^(1/(2n))` (in which the comparison
//! curves are straight lines).

use crate::indicial::beta_roots;
use crate::mp;
use crate::rational::{parse_rat, render_sig};
use crate::rootcount::numeric_roots;
use crate::{Error, Rat, Result};
use num_traits::{One, Signed};

/// Inclusive rational grid `lo:hi:count`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub lo: Rat,
    pub hi: Rat,
    pub count: usize,
}

impl GridSpec {
    pub fn parse(s: &str) -> Result<GridSpec> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Input(format!(
                "grid must be lo:hi:count, got {s:?}"
            )));
        }
        let lo = parse_rat(parts[0])?;
        let hi = parse_rat(parts[1])?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| Error::Input(format!("bad grid count {:?}", parts[2])))?;
        if count < 2 || lo >= hi {
            return Err(Error::Input("grid needs lo < hi and count >= 2".into()));
        }
        Ok(GridSpec { lo, hi, count })
    }

    pub fn points(&self) -> Vec<Rat> {
        let steps = self.count - 1;
        let width = &self.hi - &self.lo;
        (0..self.count)
            .map(|k| {
                &self.lo
                    + &(width.clone() * Rat::new(crate::Int::from(k as i64), crate::Int::from(steps as i64)))
            })
            .collect()
    }
}

/// One grid row: the rescaled coordinate, the coupling, and the sorted
/// real parts of the indicial and comparison roots.
#[derive(Clone, Debug)]
pub struct FigureRow {
    pub x: Rat,
    pub c: Rat,
    pub re_alpha: Vec<astro_float::BigFloat>,
    pub re_beta: Vec<astro_float::BigFloat>,
}

/// Rows over the grid; `c = sgn(x) x^{2n}` exactly (rational grid points).
pub fn figure_rows(n: u32, grid: &GridSpec, precision: usize) -> Result<Vec<FigureRow>> {
    let p = precision.max(53);
    grid.points()
        .into_iter()
        .map(|x| {
            let mut c = Rat::one();
            for _ in 0..2 * n {
                c = c * &x.abs();
            }
            if x.is_negative() {
                c = -c;
            }
            let inv = numeric_roots(n, &c, p)?;
            let mut re_alpha = Vec::with_capacity(2 * n as usize);
            for (z, m) in inv.roots() {
                for _ in 0..*m {
                    re_alpha.push(z.re.clone());
                }
            }
            let re_beta = beta_roots(n, &c, p).into_iter().map(|z| z.re).collect();
            Ok(FigureRow {
                x,
                c,
                re_alpha,
                re_beta,
            })
        })
        .collect()
}

/// Deterministic CSV: header `x,c,re_alpha_1..,re_beta_1..`, decimal
/// renderings at `digits` significant digits.
pub fn figure_csv(n: u32, grid: &GridSpec, precision: usize, digits: usize) -> Result<String> {
    let rows = figure_rows(n, grid, precision)?;
    let mut out = String::from("x,c");
    for j in 1..=2 * n {
        out.push_str(&format!(",re_alpha_{j}"));
    }
    for j in 1..=2 * n {
        out.push_str(&format!(",re_beta_{j}"));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&render_sig(&r.x, digits).plain_or_sci());
        out.push(',');
        out.push_str(&render_sig(&r.c, digits).plain_or_sci());
        for v in r.re_alpha.iter().chain(r.re_beta.iter()) {
            out.push(',');
            out.push_str(&mp::render(v, digits).sci());
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn grid_parsing() {
        let g = GridSpec::parse("-2:2:5").unwrap();
        assert_eq!(g.points().len(), 5);
        assert_eq!(g.points()[2], Rat::from(crate::Int::from(0)));
        assert!(GridSpec::parse("1:0:5").is_err());
        assert!(GridSpec::parse("0:1").is_err());
    }

    #[test]
    fn center_row_has_integer_real_parts() {
        let g = GridSpec::parse("-1:1:3").unwrap();
        let rows = figure_rows(3, &g, 128).unwrap();
        let mid = &rows[1];
        assert!(mid.c.is_zero());
        for (k, v) in mid.re_alpha.iter().enumerate() {
            let e = mp::from_u64(k as u64, 128);
            assert!(mp::sub(v, &e, 128).abs() < mp::pow2(-100, 128), "k={k}");
        }
    }

    #[test]
    fn csv_is_reproducible() {
        let g = GridSpec::parse("-2:2:9").unwrap();
        let a = figure_csv(2, &g, 128, 12).unwrap();
        let b = figure_csv(2, &g, 128, 12).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("x,c,re_alpha_1"));
    }

}
