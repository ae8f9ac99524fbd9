//! Binary forms over `Q`: arithmetic, linear substitutions, GCDs and root
//! multiplicities over the algebraic closure.
//!
//! A form of degree `d` is stored as `d + 1` coefficients where index `i`
//! holds the coefficient of `x^i y^(d-i)`. The zero form of degree `d` is the
//! all-zero vector of that length; it keeps its degree so that graded
//! components stay well typed.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{int, Scalar};
use crate::univariate::{self, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("operation is undefined on the zero form")]
    ZeroForm,
    #[error("gcd of two zero forms is undefined")]
    BothZero,
    #[error("linear change of variables is singular")]
    SingularChange,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({self})")
    }
}

/// Binomial coefficient as a scalar.
pub(crate) fn binomial(n: usize, k: usize) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

impl BinaryForm {
    /// Builds a form from its coefficient vector (index = power of `x`).
    ///
    /// Panics on an empty vector; use [`BinaryForm::zero`] for zero forms.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs degree + 1 coefficients"
        );
        BinaryForm { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![Scalar::zero(); degree + 1],
        }
    }

    pub fn constant(value: Scalar) -> Self {
        BinaryForm {
            coeffs: vec![value],
        }
    }

    pub fn one() -> Self {
        BinaryForm::constant(Scalar::one())
    }

    /// The monomial `x^i y^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut f = BinaryForm::zero(i + j);
        f.coeffs[i] = Scalar::one();
        f
    }

    pub fn x() -> Self {
        BinaryForm::monomial(1, 0)
    }

    pub fn y() -> Self {
        BinaryForm::monomial(0, 1)
    }

    /// The linear form `a x + b y`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        BinaryForm { coeffs: vec![b, a] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i y^(d-i)`.
    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn multiply(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        (0..e).fold(BinaryForm::one(), |acc, _| acc.multiply(self))
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "adding forms of different degrees"
        );
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Rescales so that the coefficient of the highest surviving power of `x`
    /// is 1. The zero form is returned unchanged.
    pub fn normalized(&self) -> BinaryForm {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            None => self.clone(),
            Some(top) => self.scale(&self.coeffs[top].recip()),
        }
    }

    /// `f(ax + by, cx + dy)` for the change `(a, b; c, d)`.
    pub fn substitute(&self, change: &LinearChange) -> BinaryForm {
        let image_x = BinaryForm::linear(change.a.clone(), change.b.clone());
        let image_y = BinaryForm::linear(change.c.clone(), change.d.clone());
        let d = self.degree();
        let x_powers: Vec<BinaryForm> =
            std::iter::successors(Some(BinaryForm::one()), |p| Some(p.multiply(&image_x)))
                .take(d + 1)
                .collect();
        let y_powers: Vec<BinaryForm> =
            std::iter::successors(Some(BinaryForm::one()), |p| Some(p.multiply(&image_y)))
                .take(d + 1)
                .collect();
        let mut out = BinaryForm::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = x_powers[i].multiply(&y_powers[d - i]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Power of `y` dividing a nonzero form.
    pub fn y_valuation(&self) -> usize {
        let top = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("y-valuation of the zero form");
        self.degree() - top
    }

    /// Power of `x` dividing a nonzero form.
    pub fn x_valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("x-valuation of the zero form")
    }

    /// `f(x, 1)` as a univariate polynomial in `x`.
    pub(crate) fn dehomogenize(&self) -> Poly {
        univariate::trim(self.coeffs.clone())
    }

    /// Homogenizes a univariate polynomial to the given degree.
    pub(crate) fn from_univariate(p: &[Scalar], degree: usize) -> BinaryForm {
        debug_assert!(p.len() <= degree + 1);
        let mut coeffs = p.to_vec();
        coeffs.resize(degree + 1, Scalar::zero());
        BinaryForm { coeffs }
    }

    /// Normalized GCD of two forms, not both zero. `gcd(f, 0)` is `f` normalized.
    pub fn gcd(&self, other: &BinaryForm) -> Result<BinaryForm, FormError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(FormError::BothZero),
            (true, false) => Ok(other.normalized()),
            (false, true) => Ok(self.normalized()),
            (false, false) => {
                let vy = self.y_valuation().min(other.y_valuation());
                let g = univariate::gcd(&self.dehomogenize(), &other.dehomogenize());
                let deg = univariate::degree(&g).unwrap_or(0);
                Ok(BinaryForm::from_univariate(&g, deg + vy))
            }
        }
    }

    /// The quotient `self / divisor` when it exists as a binary form.
    pub fn exact_quotient(&self, divisor: &BinaryForm) -> Option<BinaryForm> {
        if divisor.is_zero() || divisor.degree() > self.degree() {
            return None;
        }
        let deg = self.degree() - divisor.degree();
        if self.is_zero() {
            return Some(BinaryForm::zero(deg));
        }
        if self.y_valuation() < divisor.y_valuation() {
            return None;
        }
        let (q, r) = univariate::div_rem(&self.dehomogenize(), &divisor.dehomogenize());
        if !r.is_empty() {
            return None;
        }
        Some(BinaryForm::from_univariate(&q, deg))
    }

    /// Whether `self` divides `f`, i.e. `f = self * q` for some binary form `q`.
    /// The zero form divides only zero forms.
    pub fn divides(&self, f: &BinaryForm) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.exact_quotient(self).is_some()
    }

    /// Root multiplicities in `P^1` over the algebraic closure, via the
    /// `y`-adic valuation (the point `[1:0]`) and a squarefree decomposition
    /// of `f(x, 1)`.
    pub fn multiplicity_partition(&self) -> Result<MultiplicityPartition, FormError> {
        if self.is_zero() {
            return Err(FormError::ZeroForm);
        }
        let mut parts = Vec::new();
        let vy = self.y_valuation();
        if vy > 0 {
            parts.push(vy);
        }
        for (factor, mult) in univariate::squarefree_decomposition(&self.dehomogenize()) {
            let count = univariate::degree(&factor).unwrap_or(0);
            parts.extend(std::iter::repeat_n(mult, count));
        }
        Ok(MultiplicityPartition::new(parts))
    }

    pub fn derivative_x(&self) -> BinaryForm {
        if self.degree() == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        }
    }

    pub fn derivative_y(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .take(d)
                .enumerate()
                .map(|(i, c)| c * int((d - i) as i64))
                .collect(),
        }
    }

    /// The Jacobian `df/dx dg/dy - df/dy dg/dx`. For a pencil `<f, g>` its
    /// roots are the double roots of the degenerate members.
    pub fn jacobian(&self, other: &BinaryForm) -> BinaryForm {
        let a = self.derivative_x().multiply(&other.derivative_y());
        let b = self.derivative_y().multiply(&other.derivative_x());
        a.add(&b.scale(&-Scalar::one()))
    }

    /// Rational linear factors `a x + b y`, normalized and without multiplicity.
    /// `None` when the rational-root search gives up on coefficient size.
    pub fn rational_linear_factors(&self) -> Option<Vec<BinaryForm>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut out = Vec::new();
        if self.y_valuation() > 0 {
            out.push(BinaryForm::y());
        }
        for r in univariate::rational_roots(&self.dehomogenize())? {
            // x - r y
            out.push(BinaryForm::linear(Scalar::one(), -r).normalized());
        }
        Some(out)
    }

    /// Multiplicity of the linear form `l` as a factor of `self`.
    pub fn multiplicity_of(&self, l: &BinaryForm) -> usize {
        debug_assert_eq!(l.degree(), 1);
        let mut f = self.clone();
        let mut count = 0;
        while !f.is_zero() && f.degree() >= 1 {
            match f.exact_quotient(l) {
                Some(q) => {
                    f = q;
                    count += 1;
                }
                None => break,
            }
        }
        count
    }

    /// All monomials of degree `d`, highest power of `x` first.
    pub fn monomials(d: usize) -> impl Iterator<Item = BinaryForm> {
        (0..=d).rev().map(move |i| BinaryForm::monomial(i, d - i))
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;

    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        self.multiply(rhs)
    }
}

/// Gcd of arbitrary degree forms, ignoring zero forms; `None` if all are zero.
pub fn gcd_all<'a, I>(forms: I) -> Option<BinaryForm>
where
    I: IntoIterator<Item = &'a BinaryForm>,
{
    forms
        .into_iter()
        .filter(|f| !f.is_zero())
        .fold(None, |acc, f| match acc {
            None => Some(f.normalized()),
            Some(g) => Some(g.gcd(f).expect("nonzero")),
        })
}

/// Convenience wrapper for [`BinaryForm::gcd`].
pub fn gcd_forms(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm, FormError> {
    f.gcd(g)
}

/// An invertible substitution `x -> a x + b y`, `y -> c x + d y`.
///
/// Acting on linear forms written as row vectors `(p, q)` for `p x + q y`,
/// the substitution is right multiplication by the matrix `(a, b; c, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearChange {
    a: Scalar,
    b: Scalar,
    c: Scalar,
    d: Scalar,
}

impl LinearChange {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self, FormError> {
        let change = LinearChange { a, b, c, d };
        if change.determinant().is_zero() {
            return Err(FormError::SingularChange);
        }
        Ok(change)
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Result<Self, FormError> {
        LinearChange::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        LinearChange::from_integers(1, 0, 0, 1).unwrap()
    }

    /// `x <-> y`.
    pub fn swap() -> Self {
        LinearChange::from_integers(0, 1, 1, 0).unwrap()
    }

    pub fn determinant(&self) -> Scalar {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Rows `[[a, b], [c, d]]`.
    pub fn matrix(&self) -> [[Scalar; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }

    pub fn inverse(&self) -> LinearChange {
        let det = self.determinant();
        LinearChange {
            a: &self.d / &det,
            b: -&self.b / &det,
            c: -&self.c / &det,
            d: &self.a / &det,
        }
    }

    /// Applies `other` after `self`: substituting by the result equals
    /// substituting by `self` and then by `other`.
    pub fn then(&self, other: &LinearChange) -> LinearChange {
        // f(M v) then g(v) = f(M N v)
        LinearChange {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// Image of the linear factor `p x + q y` under the substitution.
    pub fn map_linear(&self, l: &BinaryForm) -> BinaryForm {
        let p = l.coeff(1);
        let q = l.coeff(0);
        BinaryForm::linear(p * &self.a + q * &self.c, p * &self.b + q * &self.d)
    }
}

/// Root multiplicities of a binary form, in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityPartition(Vec<usize>);

impl MultiplicityPartition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        MultiplicityPartition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for MultiplicityPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
