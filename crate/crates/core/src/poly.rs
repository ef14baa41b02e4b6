//! Sparse integer Laurent polynomials in the single variable `A`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

/// Finitely supported map from exponents to integer coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exponent: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exponent, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// The loop weight `d = -A^2 - A^-2`.
    pub fn loop_weight() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(2, -1);
        coeffs.insert(-2, -1);
        LaurentPoly { coeffs }
    }

    /// `(-A^3)^k`, the writhe correction factor.
    pub fn writhe_factor(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        LaurentPoly::monomial(sign, 3 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, &c) in &rhs.coeffs {
            let v = coeffs.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                let v = coeffs.entry(e1 + e2).or_insert(0);
                *v += c1 * c2;
            }
        }
        coeffs.retain(|_, c| *c != 0);
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (pos, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if pos == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mag, e) {
                (m, 0) => write!(f, "{m}")?,
                (1, 1) => write!(f, "A")?,
                (m, 1) => write!(f, "{m}A")?,
                (1, e) => write!(f, "A^{e}")?,
                (m, e) => write!(f, "{m}A^{e}")?,
            }
        }
        Ok(())
    }
}
