//! Exact integer Laurent polynomials in one variable `t`.
//!
//! Coefficients are `i128` with checked arithmetic; an overflow aborts loudly
//! rather than wrapping. All operations are exact, there is no floating
//! point anywhere in the invariant pipeline.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// `sum coeffs[i] * t^(min_degree + i)`, with nonzero first and last
/// coefficients unless the polynomial is zero (empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<i128>,
}

/// JSON shape: `{"min_degree": m, "coeffs": [c0, c1, ...]}`.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    min_degree: i64,
    coeffs: Vec<i128>,
}

impl TryFrom<PolyRepr> for LaurentPoly {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self, Error> {
        Ok(LaurentPoly::new(repr.min_degree, repr.coeffs))
    }
}

impl From<LaurentPoly> for PolyRepr {
    fn from(p: LaurentPoly) -> Self {
        Self {
            min_degree: p.min_degree,
            coeffs: p.coeffs,
        }
    }
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("laurent coefficient overflow")
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("laurent coefficient overflow")
}

impl LaurentPoly {
    /// Builds from raw data, trimming zero margins.
    pub fn new(min_degree: i64, coeffs: Vec<i128>) -> Self {
        let mut p = Self { min_degree, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_degree = 0;
            return;
        }
        self.coeffs.drain(..leading_zeros);
        self.min_degree += leading_zeros as i64;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self {
            min_degree: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::new(0, vec![c])
    }

    /// `c * t^degree`.
    pub fn monomial(c: i128, degree: i64) -> Self {
        Self::new(degree, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `t^k - 1`.
    pub fn t_power_minus_one(k: i64) -> Self {
        assert!(k > 0);
        let mut coeffs = vec![0i128; k as usize + 1];
        coeffs[0] = -1;
        coeffs[k as usize] = 1;
        Self::new(0, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: i64) -> i128 {
        if self.is_zero() || degree < self.min_degree || degree > self.max_degree() {
            0
        } else {
            self.coeffs[(degree - self.min_degree) as usize]
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let min = self.min_degree.min(other.min_degree);
        let max = self.max_degree().max(other.max_degree());
        let mut coeffs = vec![0i128; (max - min + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_degree - min) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let idx = (other.min_degree - min) as usize + i;
            coeffs[idx] = checked_add(coeffs[idx], c);
        }
        Self::new(min, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = checked_add(coeffs[i + j], checked_mul(a, b));
            }
        }
        Self::new(self.min_degree + other.min_degree, coeffs)
    }

    /// Exact division over the integers; any nonzero remainder (or a
    /// coefficient that fails to divide) is an error.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::InvalidParameter("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let quot_len = self.coeffs.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![0i128; quot_len];
        let lead = *divisor.coeffs.last().unwrap();
        for k in (0..quot_len).rev() {
            let top = rem[k + divisor.coeffs.len() - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(Error::InexactDivision);
            }
            let q = top / lead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = checked_add(rem[k + j], -checked_mul(q, d));
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(self.min_degree - divisor.min_degree, quot))
    }

    /// Multiplies by `±t^m` so the lowest degree is 0 and the constant term
    /// is positive; the canonical representative of an Alexander polynomial.
    pub fn normalize_alexander(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shifted = Self {
            min_degree: 0,
            coeffs: self.coeffs.clone(),
        };
        if shifted.coeffs[0] < 0 {
            shifted.neg()
        } else {
            shifted
        }
    }

    /// The substitution `t -> 1/t`.
    pub fn reciprocal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs: Vec<i128> = self.coeffs.iter().rev().copied().collect();
        Self::new(-self.max_degree(), coeffs)
    }

    pub fn eval_at_one(&self) -> i128 {
        self.coeffs.iter().fold(0, |acc, &c| checked_add(acc, c))
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let degree = self.min_degree + i as i64;
            let magnitude = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = magnitude != 1 || degree == 0;
            if show_coeff {
                write!(f, "{}", magnitude)?;
            }
            match degree {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                d => write!(f, "{}t^{}", if show_coeff { "*" } else { "" }, d)?,
            }
        }
        Ok(())
    }
}
