//! Truncated formal power series in z whose coefficients are polynomials in λ.
//!
//! This is just enough machinery to evaluate exponential generating functions
//! of the form `exp(scale·∫f′) − 1` exactly through a chosen order.

use super::poly::Polynomial;
use super::rat::Rat;

/// Power series truncated at order `n`: `coeffs[j]` is the coefficient of z^j,
/// a polynomial in λ. Length is always `order + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySeries {
    order: usize,
    coeffs: Vec<Polynomial>,
}

impl PolySeries {
    pub fn zero(order: usize) -> Self {
        PolySeries {
            order,
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<Polynomial>) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        PolySeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, j: usize) -> &Polynomial {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, rhs: &PolySeries) -> PolySeries {
        assert_eq!(self.order, rhs.order);
        PolySeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &PolySeries) -> PolySeries {
        assert_eq!(self.order, rhs.order);
        let mut out = PolySeries::zero(self.order);
        for i in 0..=self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=self.order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        out
    }

    /// Multiply every coefficient by a fixed polynomial in λ.
    pub fn scale_poly(&self, p: &Polynomial) -> PolySeries {
        PolySeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    /// Term-wise formal integral with zero constant term: z^j ↦ z^{j+1}/(j+1).
    /// The order stays the same, so the top input coefficient falls off.
    pub fn integrate(&self) -> PolySeries {
        let mut out = PolySeries::zero(self.order);
        for j in 0..self.order {
            out.coeffs[j + 1] = self.coeffs[j].scale(&Rat::new(1, j as i64 + 1));
        }
        out
    }

    /// Substitute `inner` (zero constant term required) for z, truncated.
    pub fn compose(&self, inner: &PolySeries) -> PolySeries {
        assert_eq!(self.order, inner.order);
        assert!(
            inner.coeffs[0].is_zero(),
            "composition requires an inner series with zero constant term"
        );
        // Horner over truncated series
        let mut result = PolySeries::zero(self.order);
        for m in (0..=self.order).rev() {
            result = result.mul(inner);
            result.coeffs[0] = result.coeffs[0].add(&self.coeffs[m]);
        }
        result
    }

    /// The exponential series e^z − 1 through the given order, as a series
    /// with constant coefficients.
    pub fn exp_z_minus_one(order: usize) -> PolySeries {
        let mut coeffs = vec![Polynomial::zero()];
        let mut factorial = Rat::one();
        for m in 1..=order {
            factorial *= Rat::from_int(m as i64);
            coeffs.push(Polynomial::constant(factorial.recip()));
        }
        PolySeries::from_coeffs(order, coeffs)
    }

    /// `exp(self) − 1 = Σ_{m≥1} self^m / m!`; requires zero constant term.
    pub fn exp_minus_one(&self) -> PolySeries {
        assert!(
            self.coeffs[0].is_zero(),
            "exp requires a series with zero constant term"
        );
        let mut acc = PolySeries::zero(self.order);
        let mut power = self.clone();
        let mut m_factorial = Rat::one();
        for m in 1..=self.order {
            m_factorial *= Rat::from_int(m as i64);
            acc = acc.add(&power.scale_poly(&Polynomial::constant(m_factorial.recip())));
            if m < self.order {
                power = power.mul(self);
            }
        }
        acc
    }
}

/// `exp(scale·∫f′) − 1` through order `n`, with ∫ the formal term-wise
/// integral pinned to zero at the origin.
pub fn series_exp_of_integral(fprime: &PolySeries, scale: &Polynomial, order: usize) -> PolySeries {
    let f = PolySeries::from_coeffs(order, fprime.coeffs.clone()).integrate();
    f.scale_poly(scale).exp_minus_one()
}
