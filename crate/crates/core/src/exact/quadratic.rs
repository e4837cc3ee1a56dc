//! Membership tests against the roots of `A x^2 + B x + C` without radicals.

use serde::{Deserialize, Serialize};

use super::{ExactError, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Inside,
    Outside,
    OnBoundary,
}

/// Where a point sits relative to the two real roots `X <= Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootPosition {
    BelowLower,
    OnLower,
    Between,
    OnUpper,
    AboveUpper,
}

impl RootPosition {
    pub fn membership(self) -> Membership {
        match self {
            RootPosition::Between => Membership::Inside,
            RootPosition::OnLower | RootPosition::OnUpper => Membership::OnBoundary,
            _ => Membership::Outside,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Root {
    Lower,
    Upper,
}

/// A quadratic with positive leading coefficient and real roots.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadratic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Quadratic {
    /// Requires `a > 0` and a nonnegative discriminant.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, ExactError> {
        if !a.is_positive() {
            return Err(ExactError::Precondition(format!("leading coefficient {a} is not positive")));
        }
        let q = Quadratic { a, b, c };
        if q.discriminant().is_negative() {
            return Err(ExactError::Precondition(format!(
                "discriminant {} is negative",
                q.discriminant()
            )));
        }
        Ok(q)
    }

    /// Instantiates `a(n) x^2 + b(n) x + c(n)` at an integer `n`.
    pub fn at(a: &Polynomial, b: &Polynomial, c: &Polynomial, n: i64) -> Result<Self, ExactError> {
        Self::new(a.eval_int(n), b.eval_int(n), c.eval_int(n)).map_err(|e| match e {
            ExactError::Precondition(msg) => ExactError::Precondition(format!("at n = {n}: {msg}")),
            other => other,
        })
    }

    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - Rational::from(4) * &self.a * &self.c
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.a * x + &self.b) * x + &self.c
    }

    /// `-b / (2a)`, the midpoint of the roots.
    pub fn vertex(&self) -> Rational {
        -&self.b / (Rational::from(2) * &self.a)
    }

    pub fn position(&self, x: &Rational) -> RootPosition {
        let value = self.eval(x);
        let left_of_vertex = *x < self.vertex();
        match value.signum() {
            -1 => RootPosition::Between,
            0 if left_of_vertex || self.discriminant().is_zero() => RootPosition::OnLower,
            0 => RootPosition::OnUpper,
            _ if left_of_vertex => RootPosition::BelowLower,
            _ => RootPosition::AboveUpper,
        }
    }

    /// Rational interval of width at most `width` containing the chosen root.
    pub fn enclose_root(&self, root: Root, width: &Rational) -> (Rational, Rational) {
        let vertex = self.vertex();
        let reach = Rational::one() + (&self.b / &self.a).abs() + (&self.c / &self.a).abs();
        // Sign of the quadratic is <= 0 on the vertex side, > 0 (or 0) at the far end.
        let (mut inner, mut outer) = match root {
            Root::Lower => (vertex.clone(), &vertex - &reach),
            Root::Upper => (vertex.clone(), &vertex + &reach),
        };
        let half = Rational::new(1, 2);
        while (&inner - &outer).abs() > *width {
            let mid = (&inner + &outer) * &half;
            if self.eval(&mid).is_positive() {
                outer = mid;
            } else {
                inner = mid;
            }
        }
        if inner < outer {
            (inner, outer)
        } else {
            (outer, inner)
        }
    }
}

/// Decides `X(n) <= q <= Y(n)` for the roots of `a(n) x^2 + b(n) x + c(n)`,
/// using only the sign of the quadratic at `q`.
pub fn in_quadratic_root_interval(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
    n: i64,
    q: &Rational,
) -> Result<Membership, ExactError> {
    Ok(Quadratic::at(a, b, c, n)?.position(q).membership())
}
