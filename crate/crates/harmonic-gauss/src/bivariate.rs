//! Sparse bivariate polynomials over the rationals.
//!
//! This is the user-facing input format for harmonic coordinates (`x^i y^j`
//! terms) and the engine behind the symbolic checks: Laplacian residuals,
//! the expanded normal cross product used by the planarity classifier, and
//! the second-order quantity `M` expanded in (x, y).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{rat_int, Rational};

/// Polynomial in x and y; keys are degree pairs (i, j), zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Adds `c * x^i y^j`, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    /// Largest exponent of x and of y appearing in any term.
    pub fn max_degrees(&self) -> (u32, u32) {
        let mut dx = 0;
        let mut dy = 0;
        for (i, j) in self.terms.keys() {
            dx = dx.max(*i);
            dy = dy.max(*j);
        }
        (dx, dy)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let (dx, dy) = self.max_degrees();
        let xs = powers(x, dx);
        let ys = powers(y, dy);
        let mut acc = Rational::zero();
        for ((i, j), c) in &self.terms {
            acc += c * &xs[*i as usize] * &ys[*j as usize];
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in &self.terms {
            if *i > 0 {
                p.add_term(i - 1, *j, c * rat_int(*i as i64));
            }
        }
        p
    }

    pub fn partial_y(&self) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in &self.terms {
            if *j > 0 {
                p.add_term(*i, j - 1, c * rat_int(*j as i64));
            }
        }
        p
    }

    /// p_xx + p_yy.
    pub fn laplacian(&self) -> Self {
        self.partial_x().partial_x().add(&self.partial_y().partial_y())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut p = self.clone();
        for ((i, j), c) in &rhs.terms {
            p.add_term(*i, *j, c.clone());
        }
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in &self.terms {
            p.add_term(*i, *j, -c.clone());
        }
        p
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut p = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                p.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        p
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in &self.terms {
            p.add_term(*i, *j, c * k);
        }
        p
    }
}

fn powers(base: &Rational, up_to: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(Rational::one());
    for k in 1..=up_to as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending total degree, then descending x degree
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| (std::cmp::Reverse(k.0 + k.1), std::cmp::Reverse(k.0)));
        for (pos, key) in keys.iter().enumerate() {
            let c = &self.terms[*key];
            let (i, j) = **key;
            let mag = if c < &Rational::zero() { -c.clone() } else { c.clone() };
            if pos == 0 {
                if c < &Rational::zero() {
                    write!(f, "-")?;
                }
            } else if c < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let has_vars = i > 0 || j > 0;
            if !has_vars || !mag.is_one() {
                write!(f, "{mag}")?;
                if has_vars {
                    write!(f, " ")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            if i > 0 && j > 0 {
                write!(f, " ")?;
            }
            match j {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{j}")?,
            }
        }
        Ok(())
    }
}
