//! Polynomials in one variable λ (dense, exact rational coefficients) and
//! bivariate Whitney-number polynomials in (x, λ) (sparse).

use serde::{Deserialize, Deserializer, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use super::rat::Rat;

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of λ^k.
/// Invariant: the leading coefficient is nonzero unless the polynomial is zero
/// (represented by an empty coefficient vector).
///
/// Serializes as a bare coefficient array, lowest degree first.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        // re-trim so the leading-coefficient invariant survives round trips
        Ok(Polynomial::from_coeffs(Vec::<Rat>::deserialize(de)?))
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// λ itself.
    pub fn lambda() -> Self {
        Polynomial::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Coefficients lowest degree first; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of λ^k as i128, when it is an integer.
    pub fn coeff_i128(&self, k: usize) -> Option<i128> {
        self.coeff(k).to_i128()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// The polynomial part of `self / λ^m`: coefficients of λ^k with k ≥ m,
    /// shifted down. Lower-order terms are discarded.
    pub fn polynomial_part_div_lambda_pow(&self, m: usize) -> Polynomial {
        if m >= self.coeffs.len() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(self.coeffs[m..].to_vec())
    }

    /// Multiply by λ^m.
    pub fn shift_up(&self, m: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial::from_coeffs(coeffs)
    }

    /// Render with λ as the variable, highest degree first.
    pub fn display_lambda(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if out.is_empty() {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { " - " } else { " + " });
            }
            let coeff_part = if mag == Rat::one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match k {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{k}"),
            };
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_lambda())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_lambda())
    }
}

/// Sparse polynomial in x and λ; keys are `(x_degree, lambda_degree)`.
/// No explicitly stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl BivariatePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, x_deg: usize, l_deg: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((x_deg, l_deg)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(x_deg, l_deg));
        }
    }

    pub fn coeff(&self, x_deg: usize, l_deg: usize) -> Rat {
        self.terms
            .get(&(x_deg, l_deg))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &Rat, lambda: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * &(x.pow(i as u32) * lambda.pow(j as u32)))
            .sum()
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| format!("{c}·x^{i}λ^{j}"))
            .collect();
        write!(
            f,
            "{}",
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        )
    }
}
