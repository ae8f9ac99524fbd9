//! Invariants of graded ideals under linear changes of variables: run factors,
//! their pairwise gcds, the power-pairing pattern, pencil discriminants, and
//! the joint root signature of all of these forms.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::forms::{BinaryForm, MultiplicityPartition};
use crate::ideal::{row_to_form, GradedIdeal, IdealError};
use crate::linalg::Scalar;
use crate::sequence::{HsSequence, SequenceError};
use crate::univariate::{self, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error("a pencil needs two linearly independent quadratics")]
    InvalidPencil,
}

/// `D(a, b) = disc(a p1 + b p2)` in the dual variables, normalized.
pub fn pencil_discriminant(p1: &BinaryForm, p2: &BinaryForm) -> Result<BinaryForm, InvariantError> {
    if p1.degree() != 2 || p2.degree() != 2 || p1.is_zero() || p2.is_zero() {
        return Err(InvariantError::InvalidPencil);
    }
    let (a1, b1, c1) = (p1.coeff(2), p1.coeff(1), p1.coeff(0));
    let (a2, b2, c2) = (p2.coeff(2), p2.coeff(1), p2.coeff(0));
    // dependent iff all 2x2 minors vanish
    let minors = [a1 * b2 - a2 * b1, a1 * c2 - a2 * c1, b1 * c2 - b2 * c1];
    if minors.iter().all(Zero::is_zero) {
        return Err(InvariantError::InvalidPencil);
    }
    let four = Scalar::from_integer(4.into());
    let two = Scalar::from_integer(2.into());
    let aa = b1 * b1 - &four * a1 * c1;
    let ab = &two * b1 * b2 - &four * (a1 * c2 + a2 * c1);
    let bb = b2 * b2 - &four * a2 * c2;
    let d = BinaryForm::new(vec![bb, ab, aa]);
    debug_assert!(!d.is_zero());
    Ok(d.normalized())
}

/// A maximal run `t_start = ... = t_end = s` of length at least two, with the
/// multiplicity partition of the common factor of `I_start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunData {
    pub start: usize,
    pub end: usize,
    pub s: usize,
    pub partition: MultiplicityPartition,
}

/// Everything [`structural_invariant`] extracts. Fields compare in
/// declaration order; [`StructuralInvariant::first_difference`] names the
/// first one that differs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructuralInvariant {
    pub sequence: HsSequence,
    pub runs: Vec<RunData>,
    pub pairwise_gcds: Vec<MultiplicityPartition>,
    pub theta: Option<(usize, MultiplicityPartition)>,
    pub pencils: Vec<(usize, MultiplicityPartition)>,
    /// Sorted per-point multiplicity vectors over the extracted forms, one
    /// entry per point of `P^1` (over the algebraic closure) where some form
    /// vanishes.
    pub root_signature: Vec<Vec<usize>>,
}

/// Field names in comparison order.
pub const FIELD_NAMES: [&str; 6] = [
    "sequence",
    "run-data",
    "pairwise-gcd-data",
    "theta-pattern",
    "pencil-pattern",
    "root-signature",
];

impl StructuralInvariant {
    pub fn first_difference(&self, other: &StructuralInvariant) -> Option<&'static str> {
        let same = [
            self.sequence == other.sequence,
            self.runs == other.runs,
            self.pairwise_gcds == other.pairwise_gcds,
            self.theta == other.theta,
            self.pencils == other.pencils,
            self.root_signature == other.root_signature,
        ];
        same.iter().position(|s| !s).map(|i| FIELD_NAMES[i])
    }

    /// Human-readable value of a named field.
    pub fn describe(&self, field: &str) -> String {
        let parts = |p: &[MultiplicityPartition]| {
            p.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match field {
            "sequence" => self.sequence.to_string(),
            "run-data" => self
                .runs
                .iter()
                .map(|r| format!("{}..{} s={} {}", r.start, r.end, r.s, r.partition))
                .collect::<Vec<_>>()
                .join("; "),
            "pairwise-gcd-data" => parts(&self.pairwise_gcds),
            "theta-pattern" => match &self.theta {
                Some((m, p)) => format!("{p} at degree {m}"),
                None => "none".into(),
            },
            "pencil-pattern" => self
                .pencils
                .iter()
                .map(|(d, p)| format!("{p} at degree {d}"))
                .collect::<Vec<_>>()
                .join("; "),
            "root-signature" => format!("{:?}", self.root_signature),
            _ => String::new(),
        }
    }
}

impl fmt::Display for StructuralInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in FIELD_NAMES {
            writeln!(f, "{name}: {}", self.describe(name))?;
        }
        Ok(())
    }
}

/// Forms that move covariantly under a change of variables: component gcds
/// from the deviation index on, the primal power-pairing form, and the
/// Jacobians of two-dimensional components. Used both for the root signature
/// and as the source of witness candidates.
pub(crate) struct Extraction {
    pub sequence: HsSequence,
    pub forms: Vec<BinaryForm>,
}

/// `F*(x, y) = F(y, -x)`: its roots are the linear forms `l` with `l^m` in `I_m`.
pub(crate) fn primal_pairing(f: &BinaryForm) -> BinaryForm {
    let m = f.degree();
    let coeffs = (0..=m)
        .map(|i| {
            let c = f.coeff(m - i).clone();
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    BinaryForm::new(coeffs).normalized()
}

fn theta_degree(seq: &HsSequence) -> Option<usize> {
    seq.entries()
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &t)| t == 1)
        .map(|(m, _)| m)
}

pub(crate) fn extract(ideal: &GradedIdeal) -> Result<Extraction, InvariantError> {
    let sequence = HsSequence::validate(&ideal.hilbert_samuel()?)?;
    let n = sequence.deviation_index();
    let len = sequence.entries().len();
    let mut forms = Vec::new();
    for d in n..len {
        forms.push(ideal.common_factor(d)?);
    }
    if let Some(m) = theta_degree(&sequence) {
        forms.push(primal_pairing(&ideal.power_pairing(m)?));
    }
    for d in n..len {
        let comp = ideal.component(d);
        if comp.rank() == 2 {
            let rows = comp.basis().rows();
            let j = row_to_form(&rows[0]).jacobian(&row_to_form(&rows[1]));
            if !j.is_zero() {
                forms.push(j.normalized());
            }
        }
    }
    Ok(Extraction { sequence, forms })
}

/// Pairwise coprime squarefree monic polynomials whose products recover the
/// squarefree parts of the inputs.
fn coprime_base(mut polys: Vec<Poly>) -> Vec<Poly> {
    polys.retain(|p| univariate::degree(p).unwrap_or(0) > 0);
    loop {
        let mut split = None;
        'search: for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                let g = univariate::gcd(&polys[i], &polys[j]);
                if univariate::degree(&g).unwrap_or(0) > 0 {
                    split = Some((i, j, g));
                    break 'search;
                }
            }
        }
        let Some((i, j, g)) = split else { return polys };
        let q = polys.swap_remove(j);
        let p = polys.swap_remove(i);
        for r in [
            univariate::div_rem(&p, &g).0,
            univariate::div_rem(&q, &g).0,
            g,
        ] {
            let r = univariate::monic(r);
            if univariate::degree(&r).unwrap_or(0) > 0 {
                polys.push(r);
            }
        }
    }
}

/// Multiset of multiplicity vectors, one per point where some form vanishes.
pub(crate) fn root_signature(forms: &[BinaryForm]) -> Vec<Vec<usize>> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    let decomps: Vec<Vec<(Poly, usize)>> = nonzero
        .iter()
        .map(|f| univariate::squarefree_decomposition(&f.dehomogenize()))
        .collect();
    let pieces = decomps.iter().flatten().map(|(p, _)| p.clone()).collect();
    let mut out = Vec::new();
    for b in coprime_base(pieces) {
        let vector: Vec<usize> = decomps
            .iter()
            .map(|dec| {
                dec.iter()
                    .find(|(p, _)| univariate::div_rem(p, &b).1.is_empty())
                    .map_or(0, |(_, mult)| *mult)
            })
            .collect();
        let count = univariate::degree(&b).unwrap_or(0);
        out.extend(std::iter::repeat_n(vector, count));
    }
    let at_infinity: Vec<usize> = nonzero.iter().map(|f| f.y_valuation()).collect();
    if at_infinity.iter().any(|&v| v > 0) {
        out.push(at_infinity);
    }
    out.sort();
    out
}

/// Computes every field of [`StructuralInvariant`].
pub fn structural_invariant(ideal: &GradedIdeal) -> Result<StructuralInvariant, InvariantError> {
    let extraction = extract(ideal)?;
    let sequence = extraction.sequence.clone();
    let entries = sequence.entries();
    let n = sequence.deviation_index();

    let mut runs = Vec::new();
    let mut factors = Vec::new();
    let mut start = n;
    while start < entries.len() {
        let mut end = start;
        while end + 1 < entries.len() && entries[end + 1] == entries[start] {
            end += 1;
        }
        if end > start {
            let h = ideal.common_factor(start)?;
            let partition = h
                .multiplicity_partition()
                .expect("component gcd is nonzero");
            runs.push(RunData {
                start,
                end,
                s: h.degree(),
                partition,
            });
            factors.push(h);
        }
        start = end + 1;
    }

    let mut pairwise_gcds = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let g = factors[i]
                .gcd(&factors[j])
                .expect("run factors are nonzero");
            pairwise_gcds.push(g.multiplicity_partition().expect("gcd of nonzero forms"));
        }
    }

    let theta = match theta_degree(&sequence) {
        Some(m) => {
            let f = ideal.power_pairing(m)?;
            Some((
                m,
                f.multiplicity_partition().expect("pairing form is nonzero"),
            ))
        }
        None => None,
    };

    let mut pencils = Vec::new();
    for d in n..entries.len() {
        let comp = ideal.component(d);
        if comp.rank() != 2 {
            continue;
        }
        let g = ideal.common_factor(d)?;
        if d - g.degree() != 2 {
            continue;
        }
        let reduced: Vec<BinaryForm> = comp
            .forms()
            .iter()
            .map(|f| {
                f.exact_quotient(&g)
                    .expect("component gcd divides its forms")
            })
            .collect();
        let disc = pencil_discriminant(&reduced[0], &reduced[1])?;
        pencils.push((
            d,
            disc.multiplicity_partition()
                .expect("discriminant is nonzero"),
        ));
    }

    let root_signature = root_signature(&extraction.forms);
    Ok(StructuralInvariant {
        sequence,
        runs,
        pairwise_gcds,
        theta,
        pencils,
        root_signature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::LinearChange;
    use crate::text::{parse_form, parse_ideal};

    fn form(s: &str) -> BinaryForm {
        parse_form(s).unwrap()
    }

    fn partition(f: &BinaryForm) -> Vec<usize> {
        f.multiplicity_partition().unwrap().parts().to_vec()
    }

    #[test]
    fn discriminants() {
        let d = pencil_discriminant(&form("x^2"), &form("y^2")).unwrap();
        assert_eq!(d, form("x*y"));
        assert_eq!(partition(&d), vec![1, 1]);
        // in dual variables, b^2 is y^2
        assert_eq!(
            pencil_discriminant(&form("x^2"), &form("x*y")).unwrap(),
            form("y^2")
        );
        assert_eq!(
            pencil_discriminant(&form("x*y"), &form("y^2")).unwrap(),
            form("x^2")
        );
        assert_eq!(
            pencil_discriminant(&form("x^2"), &form("2*x^2")),
            Err(InvariantError::InvalidPencil)
        );
        assert_eq!(
            pencil_discriminant(&form("x"), &form("y")),
            Err(InvariantError::InvalidPencil)
        );
    }

    #[test]
    fn discriminant_pattern_is_covariant() {
        let (p, q) = (form("x^2 + 3*x*y"), form("x*y - y^2"));
        let m = LinearChange::from_integers(2, 1, -1, 3).unwrap();
        let before = partition(&pencil_discriminant(&p, &q).unwrap());
        let after = partition(&pencil_discriminant(&p.substitute(&m), &q.substitute(&m)).unwrap());
        assert_eq!(before, after);
    }

    #[test]
    fn primal_pairing_roots() {
        // (x^2, y^2) + (x,y)^3: x^2 and y^2 lie in I_2
        let i = parse_ideal("x^2\ny^2\ntruncate: 3").unwrap();
        let p = primal_pairing(&i.power_pairing(2).unwrap());
        assert_eq!(p, form("x*y"));
        let i = parse_ideal("x*y\ny^2\ntruncate: 3").unwrap();
        let p = primal_pairing(&i.power_pairing(2).unwrap());
        assert_eq!(p, form("y^2"));
    }

    #[test]
    fn invariant_examples() {
        let inv = structural_invariant(&parse_ideal("x^2\ntruncate: 5").unwrap()).unwrap();
        assert_eq!(inv.sequence.entries(), &[1, 2, 2, 2, 2]);
        assert_eq!(inv.runs.len(), 1);
        let run = &inv.runs[0];
        assert_eq!(
            (run.start, run.end, run.s, run.partition.parts()),
            (2, 4, 2, &[2][..])
        );

        let inv = structural_invariant(&parse_ideal("x^2\ny^2\ntruncate: 3").unwrap()).unwrap();
        assert!(inv.runs.is_empty());
        assert_eq!(inv.theta.as_ref().unwrap().1.parts(), &[1, 1]);

        // T9 chain (x^2 y, x) with n = 3, k = 1, l = 2: (1,2,3,3,3,1,1)
        let text = "x^2*y\nx^5\nx^4*y\nx^3*y^2\nx^2*y^3\nx*y^4\ntruncate: 7";
        let inv = structural_invariant(&parse_ideal(text).unwrap()).unwrap();
        assert_eq!(inv.sequence.entries(), &[1, 2, 3, 3, 3, 1, 1]);
        let parts: Vec<&[usize]> = inv.runs.iter().map(|r| r.partition.parts()).collect();
        assert_eq!(parts, vec![&[2, 1][..], &[1][..]]);
        assert_eq!(inv.pairwise_gcds.len(), 1);
        assert_eq!(inv.pairwise_gcds[0].parts(), &[1]);
    }

    #[test]
    fn root_signature_counts_points() {
        // x^2 y and x(x - y): points x=0 (y-axis), y=0, x=y
        let sig = root_signature(&[form("x^2*y"), form("x^2 - x*y")]);
        assert_eq!(sig, vec![vec![0, 1], vec![1, 0], vec![2, 1]]);
        // irreducible quadratic contributes two points
        let sig = root_signature(&[form("x^2 + y^2")]);
        assert_eq!(sig, vec![vec![1], vec![1]]);
    }

    #[test]
    fn first_difference_names_field() {
        let a = structural_invariant(&parse_ideal("x^2\ny^2\ntruncate: 3").unwrap()).unwrap();
        let b = structural_invariant(&parse_ideal("x*y\ny^2\ntruncate: 3").unwrap()).unwrap();
        assert_eq!(a.first_difference(&b), Some("theta-pattern"));
        assert_eq!(a.first_difference(&a), None);
    }
}
