//! Homogeneous ideals of `K[x,y]` given by generators and an optional
//! truncation `(x,y)^D`, with their graded components and Hilbert functions.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::forms::{binomial, gcd_all, BinaryForm, FormError, LinearChange};
use crate::linalg::{RowBasis, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("not Artinian: common factor {common_factor}")]
    NotArtinian { common_factor: BinaryForm },
    #[error("generator {index} is the zero form")]
    ZeroGenerator { index: usize },
    #[error("truncation degree must be at least 1")]
    ZeroTruncation,
    #[error("an ideal needs at least one generator or a truncation")]
    NoGenerators,
    #[error("component of degree {degree} is zero")]
    EmptyComponent { degree: usize },
    #[error("power pairing needs t_{degree} = 1, found {found}")]
    PairingUndefined { degree: usize, found: usize },
}

/// A homogeneous ideal `(g_1, ..., g_r) + (x,y)^D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedIdeal {
    generators: Vec<BinaryForm>,
    truncation: Option<usize>,
}

/// The degree-`d` piece `I_d`, as a row basis over the monomials
/// `x^d, x^(d-1) y, ..., y^d` (column `j` is `x^(d-j) y^j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponent {
    degree: usize,
    basis: RowBasis,
}

/// Coordinates of a form against the monomial columns of its degree.
pub(crate) fn form_to_row(f: &BinaryForm) -> Vec<Scalar> {
    f.coeffs().iter().rev().cloned().collect()
}

pub(crate) fn row_to_form(row: &[Scalar]) -> BinaryForm {
    BinaryForm::new(row.iter().rev().cloned().collect())
}

/// Basis of `(h)_d`, the multiples of `h` in degree `d`.
pub(crate) fn principal_component(h: &BinaryForm, d: usize) -> RowBasis {
    let rows = if h.degree() <= d {
        BinaryForm::monomials(d - h.degree())
            .map(|m| form_to_row(&m.multiply(h)))
            .collect()
    } else {
        Vec::new()
    };
    RowBasis::from_rows(d + 1, rows).expect("rows have uniform length")
}

impl GradedComponent {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &RowBasis {
        &self.basis
    }

    /// `dim I_d`.
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// `t_d = dim K[x,y]_d / I_d`.
    pub fn codimension(&self) -> usize {
        self.degree + 1 - self.rank()
    }

    /// The basis rows as forms.
    pub fn forms(&self) -> Vec<BinaryForm> {
        self.basis.rows().iter().map(|r| row_to_form(r)).collect()
    }

    pub fn contains(&self, f: &BinaryForm) -> bool {
        f.degree() == self.degree
            && self
                .basis
                .contains(&form_to_row(f))
                .expect("matching length")
    }
}

impl GradedIdeal {
    pub fn new(generators: Vec<BinaryForm>, truncation: Option<usize>) -> Result<Self, IdealError> {
        if let Some(index) = generators.iter().position(BinaryForm::is_zero) {
            return Err(IdealError::ZeroGenerator { index });
        }
        if truncation == Some(0) {
            return Err(IdealError::ZeroTruncation);
        }
        if generators.is_empty() && truncation.is_none() {
            return Err(IdealError::NoGenerators);
        }
        Ok(GradedIdeal {
            generators,
            truncation,
        })
    }

    /// `(x, y)^d`.
    pub fn maximal_power(d: usize) -> Result<Self, IdealError> {
        GradedIdeal::new(Vec::new(), Some(d))
    }

    pub fn generators(&self) -> &[BinaryForm] {
        &self.generators
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn component(&self, d: usize) -> GradedComponent {
        if self.truncation.is_some_and(|t| t <= d) {
            return GradedComponent {
                degree: d,
                basis: RowBasis::full(d + 1),
            };
        }
        let rows = self
            .generators
            .iter()
            .filter(|g| g.degree() <= d)
            .flat_map(|g| {
                BinaryForm::monomials(d - g.degree()).map(move |m| form_to_row(&m.multiply(g)))
            });
        let basis = RowBasis::from_rows(d + 1, rows).expect("rows have uniform length");
        GradedComponent { degree: d, basis }
    }

    /// Errors with [`IdealError::NotArtinian`] when the generators share a
    /// nonconstant factor and no truncation is present.
    pub fn check_finite_colength(&self) -> Result<(), IdealError> {
        if self.truncation.is_some() {
            return Ok(());
        }
        let g = gcd_all(&self.generators).expect("generators are nonzero");
        if g.degree() > 0 {
            return Err(IdealError::NotArtinian { common_factor: g });
        }
        Ok(())
    }

    /// A degree by which `t_d = 0` is guaranteed.
    fn vanishing_bound(&self) -> usize {
        if let Some(t) = self.truncation {
            return t;
        }
        let gens = &self.generators;
        let mut best: Option<usize> = None;
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let sum = a.degree() + b.degree();
                if best.is_some_and(|cur| cur <= sum.saturating_sub(1)) {
                    continue;
                }
                if a.gcd(b).expect("nonzero").degree() == 0 {
                    best = Some(sum.saturating_sub(1));
                }
            }
        }
        if gens.iter().any(|g| g.degree() == 0) {
            return 0;
        }
        let max_degree = gens.iter().map(BinaryForm::degree).max().unwrap_or(0);
        best.unwrap_or((2 * max_degree).saturating_sub(1))
    }

    /// The Hilbert function `(t_0, t_1, ...)` of `K[x,y]/I` with trailing
    /// zeros removed.
    pub fn hilbert_samuel(&self) -> Result<Vec<usize>, IdealError> {
        self.check_finite_colength()?;
        let bound = self.vanishing_bound();
        let mut out = Vec::new();
        let mut previous_rank = 0;
        for d in 0.. {
            let comp = self.component(d);
            let rank = comp.rank();
            assert!(
                previous_rank == 0 || rank > previous_rank,
                "component ranks must grow by at least one once positive (degree {d})"
            );
            let t = comp.codimension();
            if t == 0 {
                break;
            }
            assert!(
                d < bound,
                "Hilbert function did not vanish by degree {bound}"
            );
            out.push(t);
            previous_rank = rank;
        }
        Ok(out)
    }

    /// Normalized GCD of the degree-`d` component.
    pub fn common_factor(&self, d: usize) -> Result<BinaryForm, IdealError> {
        let forms = self.component(d).forms();
        gcd_all(&forms).ok_or(IdealError::EmptyComponent { degree: d })
    }

    /// Whether `I_d` equals `(h)_d` for `h` its common factor.
    pub fn verify_factor_structure(&self, d: usize) -> Result<bool, IdealError> {
        let h = self.common_factor(d)?;
        Ok(principal_component(&h, d) == *self.component(d).basis())
    }

    /// The form `F(a, b)`: class of `(a x + b y)^m` in the one-dimensional
    /// quotient `K[x,y]_m / I_m`, written in the dual variables (`a` in the
    /// role of `x`) and normalized. Only its multiplicity data is canonical.
    pub fn power_pairing(&self, m: usize) -> Result<BinaryForm, IdealError> {
        let comp = self.component(m);
        let t = comp.codimension();
        if t != 1 {
            return Err(IdealError::PairingUndefined {
                degree: m,
                found: t,
            });
        }
        let basis = comp.basis();
        let free = basis.free_columns()[0];
        // value of the functional on each monomial column
        let mut values = vec![Scalar::zero(); m + 1];
        values[free] = Scalar::one();
        for (row, &pivot) in basis.rows().iter().zip(basis.pivots()) {
            values[pivot] = -row[free].clone();
        }
        // column j is x^(m-j) y^j, contributing C(m, j) a^(m-j) b^j
        let mut coeffs = vec![Scalar::zero(); m + 1];
        for (j, v) in values.into_iter().enumerate() {
            coeffs[m - j] = binomial(m, j) * v;
        }
        let f = BinaryForm::new(coeffs);
        assert!(!f.is_zero(), "powers of linear forms span every degree");
        Ok(f.normalized())
    }

    pub fn substitute(&self, change: &LinearChange) -> GradedIdeal {
        GradedIdeal {
            generators: self
                .generators
                .iter()
                .map(|g| g.substitute(change))
                .collect(),
            truncation: self.truncation,
        }
    }

    /// Whether both ideals have the same components in every degree.
    pub fn equal_ideals(&self, other: &GradedIdeal) -> Result<bool, IdealError> {
        let a = self.hilbert_samuel()?;
        let b = other.hilbert_samuel()?;
        if a != b {
            return Ok(false);
        }
        Ok((0..a.len()).all(|d| self.component(d).basis() == other.component(d).basis()))
    }
}

/// Convenience wrapper for [`GradedIdeal::substitute`] that rejects singular input.
pub fn substitute_ideal(
    ideal: &GradedIdeal,
    change: &LinearChange,
) -> Result<GradedIdeal, FormError> {
    if change.determinant().is_zero() {
        return Err(FormError::SingularChange);
    }
    Ok(ideal.substitute(change))
}
