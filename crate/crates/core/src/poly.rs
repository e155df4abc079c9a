//! Dense univariate polynomials over `Z` with arbitrary-precision coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient `k` is the coefficient of `x^k`. Always canonical: no
/// trailing zeros, and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c · x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `1 - x^k`.
    pub fn one_minus_x_pow(k: usize) -> Self {
        Self::one() - Self::monomial(1, k)
    }

    /// `1 + x^k`.
    pub fn one_plus_x_pow(k: usize) -> Self {
        Self::one() + Self::monomial(1, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Substitutes `x → x^k` (coefficient re-indexing).
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k > 0, "dilation factor must be positive");
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPolynomial { coeffs }
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Long division over `Z`. Fails unless every step divides exactly by the
    /// divisor's leading coefficient.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision);
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    pub fn product(factors: impl IntoIterator<Item = IntPolynomial>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * &f)
    }
}

impl From<i64> for IntPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Self::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        *self += &-rhs;
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

/// Ascending exponent order, e.g. `1 - x^2 + x^4`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&var)?;
        }
        Ok(())
    }
}

/// `{"coeffs": [c0, c1, …], "var": "x"}` with exact integer literals.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let numbers = self
            .coeffs
            .iter()
            .map(|c| c.to_string().parse::<serde_json::Number>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        let mut st = serializer.serialize_struct("IntPolynomial", 2)?;
        st.serialize_field("coeffs", &numbers)?;
        st.serialize_field("var", "x")?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<serde_json::Number>,
            var: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.var != "x" {
            return Err(de::Error::custom(format!(
                "unsupported variable {:?}",
                raw.var
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[3, 0, 2]) + &IntPolynomial::zero(), p(&[3, 0, 2]));
        assert_eq!(
            IntPolynomial::one_minus_x_pow(2) * IntPolynomial::one_minus_x_pow(4),
            p(&[1, 0, -1, 0, -1, 0, 1])
        );
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPolynomial::zero());
        assert_eq!(p(&[0, 0, 0]).coeffs().len(), 0);
        assert_eq!(p(&[1, 1]).shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[1, 1, 2]).dilate(2), p(&[1, 0, 1, 0, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -1, 0, 1]).to_string(), "1 - x^2 + x^4");
        assert_eq!(p(&[0, -1, 0, 0, 1]).to_string(), "-x + x^4");
        assert_eq!(p(&[-2, 3]).to_string(), "-2 + 3x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn division() {
        let a = p(&[1, 0, -1, 0, -1, 0, 1]);
        assert_eq!(
            a.div_exact(&IntPolynomial::one_minus_x_pow(2)).unwrap(),
            IntPolynomial::one_minus_x_pow(4)
        );
        assert_eq!(
            p(&[1, 1]).div_exact(&p(&[1, -1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[0, 2])),
            Err(Error::InexactDivision)
        );
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
    }

    #[test]
    fn json_shape() {
        let big = IntPolynomial::from_coeffs(vec![
            "123456789012345678901234567890".parse().unwrap(),
            BigInt::from(-1),
        ]);
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(
            text,
            r#"{"coeffs":[123456789012345678901234567890,-1],"var":"x"}"#
        );
        assert_eq!(serde_json::from_str::<IntPolynomial>(&text).unwrap(), big);
        assert_eq!(
            serde_json::to_string(&IntPolynomial::zero()).unwrap(),
            r#"{"coeffs":[],"var":"x"}"#
        );
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            let prod = &a * &b;
            if !b.is_zero() && b.coeffs().last().unwrap().abs().is_one() {
                prop_assert_eq!(prod.div_exact(&b).unwrap(), a.clone());
            }
            let x = BigInt::from(3);
            prop_assert_eq!(prod.eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let text = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<IntPolynomial>(&text).unwrap(), a);
        }
    }
}
