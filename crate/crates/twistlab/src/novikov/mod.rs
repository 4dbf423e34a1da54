//! Exact arithmetic in the Novikov field Λ at finite support.
//!
//! A `NovikovScalar` is a finite formal sum Σ aᵢ q^{ωᵢ} with exact
//! coefficients and strictly increasing rational exponents. Inverses are
//! truncated geometric series controlled by a `TruncationPolicy`.

mod base;
mod parse;

pub use base::{
    cyclotomic_polynomial, qi, qr, rational_to_f64, BaseFieldElement, Cyclotomic, Q,
};
pub use parse::parse_novikov;

use num::traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NovikovError {
    #[error("division by zero in the Novikov field")]
    ZeroDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Cutoff for lazily expanded inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncationPolicy {
    omega_max: Q,
}

impl TruncationPolicy {
    pub fn new(omega_max: Q) -> Self {
        assert!(omega_max > Q::zero(), "omega_max must be positive");
        TruncationPolicy { omega_max }
    }

    pub fn omega_max(&self) -> &Q {
        &self.omega_max
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovScalar {
    /// (exponent, coefficient), exponents strictly increasing, no zero coefficients.
    terms: Vec<(Q, BaseFieldElement)>,
}

impl NovikovScalar {
    pub fn zero_value() -> Self {
        NovikovScalar { terms: vec![] }
    }

    pub fn from_terms(terms: Vec<(Q, BaseFieldElement)>) -> Self {
        let mut s = NovikovScalar { terms };
        s.normalize();
        s
    }

    pub fn monomial(exponent: Q, coeff: BaseFieldElement) -> Self {
        NovikovScalar::from_terms(vec![(exponent, coeff)])
    }

    /// A base-field constant at q⁰.
    pub fn constant(coeff: BaseFieldElement) -> Self {
        NovikovScalar::monomial(Q::zero(), coeff)
    }

    pub fn from_rational(q: Q) -> Self {
        NovikovScalar::constant(BaseFieldElement::rational(q))
    }

    pub fn from_int(n: i64) -> Self {
        NovikovScalar::from_rational(qi(n))
    }

    pub fn q_power(exponent: Q) -> Self {
        NovikovScalar::monomial(exponent, BaseFieldElement::one())
    }

    pub fn terms(&self) -> &[(Q, BaseFieldElement)] {
        &self.terms
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Q, BaseFieldElement)> = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.drain(..) {
            let c = c.normalize();
            match out.last_mut() {
                Some((le, lc)) if *le == e => {
                    *lc = (lc.clone() + c).normalize();
                }
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    /// Minimal exponent with nonzero coefficient; `None` stands for +∞ (the zero element).
    pub fn valuation(&self) -> Option<Q> {
        self.terms.first().map(|(e, _)| e.clone())
    }

    pub fn leading(&self) -> Option<(&Q, &BaseFieldElement)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    /// Drop all terms with exponent above `omega_max`.
    pub fn truncate(&self, omega_max: &Q) -> Self {
        NovikovScalar {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e <= omega_max)
                .cloned()
                .collect(),
        }
    }

    /// True when the support is exactly {0} (or empty).
    pub fn support_is_q0(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_zero())
    }

    /// The q⁰ coefficient.
    pub fn coeff_at_zero(&self) -> BaseFieldElement {
        self.terms
            .iter()
            .find(|(e, _)| e.is_zero())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BaseFieldElement::zero)
    }

    /// Leading-monomial inverse times a truncated geometric series:
    /// the result `b` has valuation −val(a) and a·b ≡ 1 modulo terms of
    /// exponent > omega_max.
    pub fn invert_truncated(&self, policy: &TruncationPolicy) -> Result<Self, NovikovError> {
        let (v, lead) = self.leading().ok_or(NovikovError::ZeroDivision)?;
        let v = v.clone();
        let lead_inv = lead.inv().expect("leading coefficient is nonzero");
        // a = lead·q^v (1 + u) with val(u) > 0
        let head_inv = NovikovScalar::monomial(-v.clone(), lead_inv);
        let u = (self.clone() * head_inv.clone()) - NovikovScalar::from_int(1);
        let omega = policy.omega_max();
        let mut series = NovikovScalar::from_int(1);
        let mut power = NovikovScalar::from_int(1);
        loop {
            power = (power * (-u.clone())).truncate(omega);
            match power.valuation() {
                Some(val) if val <= *omega => series = series + power.clone(),
                _ => break,
            }
        }
        Ok((head_inv * series.truncate(omega)).truncate(&(omega - &v)))
    }
}

impl Add for NovikovScalar {
    type Output = NovikovScalar;
    fn add(self, rhs: Self) -> Self {
        let mut terms = self.terms;
        terms.extend(rhs.terms);
        NovikovScalar::from_terms(terms)
    }
}

impl Sub for NovikovScalar {
    type Output = NovikovScalar;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for NovikovScalar {
    type Output = NovikovScalar;
    fn neg(self) -> Self {
        NovikovScalar {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for NovikovScalar {
    type Output = NovikovScalar;
    fn mul(self, rhs: Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                terms.push((ea + eb, (ca.clone() * cb.clone()).normalize()));
            }
        }
        NovikovScalar::from_terms(terms)
    }
}

impl Zero for NovikovScalar {
    fn zero() -> Self {
        NovikovScalar::zero_value()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for NovikovScalar {
    fn one() -> Self {
        NovikovScalar::from_int(1)
    }
}

impl fmt::Display for NovikovScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.denom().is_one() {
                write!(f, "{}*q^({})", c, e.numer())?;
            } else {
                write!(f, "{}*q^({}/{})", c, e.numer(), e.denom())?;
            }
        }
        Ok(())
    }
}

impl Serialize for NovikovScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NovikovScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_novikov(&s).map_err(serde::de::Error::custom)
    }
}
