//! Isomorphism testing for graded quotients. Invariants refute; witnesses are
//! found by matching rational roots of the covariant forms and are always
//! checked by substitution before being reported.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::forms::{BinaryForm, LinearChange};
use crate::ideal::{substitute_ideal, GradedIdeal};
use crate::invariants::{extract, structural_invariant, InvariantError};
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// `substitute_ideal(I, witness) == J`.
    Isomorphic(LinearChange),
    /// The named invariant differs; the two strings are its values on each side.
    Distinguished {
        field: &'static str,
        left: String,
        right: String,
    },
    Unknown,
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

/// A rational point of `P^1`, as the normalized linear form vanishing there,
/// labelled by its multiplicity in each extracted form.
#[derive(Clone, Debug)]
struct Point {
    label: Vec<usize>,
    form: BinaryForm,
}

fn rational_points(forms: &[BinaryForm]) -> Vec<Point> {
    let mut found: Vec<BinaryForm> = Vec::new();
    for f in forms {
        // forms whose roots are out of reach contribute nothing
        for l in f.rational_linear_factors().unwrap_or_default() {
            if !found.contains(&l) {
                found.push(l);
            }
        }
    }
    let mut points: Vec<Point> = found
        .into_iter()
        .map(|l| Point {
            label: forms.iter().map(|f| f.multiplicity_of(&l)).collect(),
            form: l,
        })
        .collect();
    points.sort_by(|a, b| a.label.cmp(&b.label));
    points
}

/// `(p, q)` for the linear form `p x + q y`.
fn row(l: &BinaryForm) -> (Scalar, Scalar) {
    (l.coeff(1).clone(), l.coeff(0).clone())
}

fn rows_matrix(first: (Scalar, Scalar), second: (Scalar, Scalar)) -> Option<LinearChange> {
    LinearChange::new(first.0, first.1, second.0, second.1).ok()
}

fn times(v: &(Scalar, Scalar), m: &LinearChange) -> (Scalar, Scalar) {
    let [[a, b], [c, d]] = m.matrix();
    (&v.0 * a + &v.1 * c, &v.0 * b + &v.1 * d)
}

fn diagonal(s: Scalar, t: Scalar) -> LinearChange {
    LinearChange::new(s, Scalar::zero(), Scalar::zero(), t).expect("nonzero diagonal")
}

/// Rational `k`-th roots of `r`.
fn rational_roots_of(r: &Scalar, k: usize) -> Vec<Scalar> {
    let exact = |n: &BigInt| -> Option<BigInt> {
        let root = n.nth_root(k as u32);
        (root.pow(k as u32) == *n).then_some(root)
    };
    let (num, den) = (r.numer().abs(), r.denom().clone());
    let (Some(p), Some(q)) = (exact(&num), exact(&den)) else {
        return Vec::new();
    };
    let root = Scalar::new(p, q);
    match (r.is_negative(), k.is_multiple_of(2)) {
        (true, true) => Vec::new(),
        (true, false) => vec![-root],
        (false, true) => vec![root.clone(), -root],
        (false, false) => vec![root],
    }
}

/// Values of `t` for which `diag(1, t)` could carry `a` onto `b`, read off
/// the reduced echelon entries: an entry `e` at pivot `p`, column `c` of `a`
/// becomes `e t^(c - p)`.
fn torus_candidates(a: &GradedIdeal, b: &GradedIdeal, top: usize) -> Vec<Scalar> {
    for d in 0..top {
        let (ca, cb) = (a.component(d), b.component(d));
        let (ba, bb) = (ca.basis(), cb.basis());
        if ba.pivots() != bb.pivots() {
            return Vec::new();
        }
        for (r, (ra, rb)) in ba.rows().iter().zip(bb.rows()).enumerate() {
            let p = ba.pivots()[r];
            for c in p + 1..ra.len() {
                if ra[c].is_zero() {
                    if !rb[c].is_zero() {
                        return Vec::new();
                    }
                    continue;
                }
                if rb[c].is_zero() {
                    return Vec::new();
                }
                return rational_roots_of(&(&rb[c] / &ra[c]), c - p);
            }
        }
    }
    vec![Scalar::one()]
}

/// Changes `M` with `l_i M` proportional to `v_i` for two point pairs, up to
/// the torus fixing both, recovered from echelon data.
fn two_point_candidates(
    i: &GradedIdeal,
    j: &GradedIdeal,
    top: usize,
    l: [(Scalar, Scalar); 2],
    v: [(Scalar, Scalar); 2],
) -> Vec<LinearChange> {
    let (Some(p), Some(q)) = (
        rows_matrix(l[0].clone(), l[1].clone()),
        rows_matrix(v[0].clone(), v[1].clone()),
    ) else {
        return Vec::new();
    };
    let (p_inv, q_inv) = (p.inverse(), q.inverse());
    let moved_i = i.substitute(&p_inv);
    let moved_j = j.substitute(&q_inv);
    torus_candidates(&moved_i, &moved_j, top)
        .into_iter()
        .map(|t| p_inv.then(&diagonal(Scalar::one(), t)).then(&q))
        .collect()
}

/// The unique `M` (up to scale) sending three points onto three points.
fn three_point_candidate(
    l: [(Scalar, Scalar); 3],
    v: [(Scalar, Scalar); 3],
) -> Option<LinearChange> {
    let p = rows_matrix(l[0].clone(), l[1].clone())?;
    let q = rows_matrix(v[0].clone(), v[1].clone())?;
    let (alpha, beta) = times(&l[2], &p.inverse());
    let (gamma, delta) = times(&v[2], &q.inverse());
    if [&alpha, &beta, &gamma, &delta].iter().any(|s| s.is_zero()) {
        return None;
    }
    let d = diagonal(gamma / alpha, delta / beta);
    Some(p.inverse().then(&d).then(&q))
}

const AUXILIARY: [(i64, i64); 6] = [(0, 1), (1, 0), (1, 1), (1, -1), (1, 2), (2, 1)];

const FALLBACK: [[i64; 4]; 6] = [
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [1, 1, 0, 1],
    [1, 0, 1, 1],
    [1, 1, 1, -1],
    [1, -1, 1, 1],
];

fn int_row(r: (i64, i64)) -> (Scalar, Scalar) {
    (
        Scalar::from_integer(r.0.into()),
        Scalar::from_integer(r.1.into()),
    )
}

fn candidates(
    i: &GradedIdeal,
    j: &GradedIdeal,
    pi: &[Point],
    pj: &[Point],
    top: usize,
) -> Vec<LinearChange> {
    let compatible = |a: &Point, b: &Point| a.label == b.label;
    let mut out = Vec::new();
    match pi.len() {
        0 => {
            for m in FALLBACK {
                out.extend(LinearChange::from_integers(m[0], m[1], m[2], m[3]).ok());
            }
        }
        1 => {
            let l = row(&pi[0].form);
            for target in pj.iter().filter(|b| compatible(&pi[0], b)) {
                let v = row(&target.form);
                for aux_i in AUXILIARY.map(int_row) {
                    if rows_matrix(l.clone(), aux_i.clone()).is_none() {
                        continue;
                    }
                    for aux_j in AUXILIARY.map(int_row) {
                        out.extend(two_point_candidates(
                            i,
                            j,
                            top,
                            [l.clone(), aux_i.clone()],
                            [v.clone(), aux_j],
                        ));
                    }
                    break;
                }
            }
        }
        2 => {
            for a in pj.iter().filter(|b| compatible(&pi[0], b)) {
                for b in pj.iter().filter(|b| compatible(&pi[1], b)) {
                    if a.form == b.form {
                        continue;
                    }
                    out.extend(two_point_candidates(
                        i,
                        j,
                        top,
                        [row(&pi[0].form), row(&pi[1].form)],
                        [row(&a.form), row(&b.form)],
                    ));
                }
            }
        }
        _ => {
            let l = [row(&pi[0].form), row(&pi[1].form), row(&pi[2].form)];
            for a in pj.iter().filter(|b| compatible(&pi[0], b)) {
                for b in pj
                    .iter()
                    .filter(|b| compatible(&pi[1], b) && b.form != a.form)
                {
                    for c in pj
                        .iter()
                        .filter(|c| compatible(&pi[2], c) && c.form != a.form && c.form != b.form)
                    {
                        let v = [row(&a.form), row(&b.form), row(&c.form)];
                        out.extend(three_point_candidate(l.clone(), v));
                    }
                }
            }
        }
    }
    out
}

/// Decides whether `K[x,y]/I` and `K[x,y]/J` are isomorphic, with a verified
/// witness, a distinguishing invariant, or `Unknown`.
pub fn are_isomorphic(i: &GradedIdeal, j: &GradedIdeal) -> Result<IsoVerdict, InvariantError> {
    let inv_i = structural_invariant(i)?;
    let inv_j = structural_invariant(j)?;
    if let Some(field) = inv_i.first_difference(&inv_j) {
        return Ok(IsoVerdict::Distinguished {
            field,
            left: inv_i.describe(field),
            right: inv_j.describe(field),
        });
    }
    let ext_i = extract(i)?;
    let ext_j = extract(j)?;
    let pi = rational_points(&ext_i.forms);
    let pj = rational_points(&ext_j.forms);
    let top = inv_i.sequence.entries().len();
    for m in candidates(i, j, &pi, &pj, top) {
        let image = substitute_ideal(i, &m).expect("candidates are invertible");
        if image.equal_ideals(j)? {
            return Ok(IsoVerdict::Isomorphic(m));
        }
    }
    Ok(IsoVerdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};
    use crate::text::parse_ideal;

    fn ideal(s: &str) -> GradedIdeal {
        parse_ideal(s).unwrap()
    }

    fn check_witness(i: &GradedIdeal, j: &GradedIdeal) {
        match are_isomorphic(i, j).unwrap() {
            IsoVerdict::Isomorphic(m) => {
                assert!(substitute_ideal(i, &m).unwrap().equal_ideals(j).unwrap())
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn distinguished_by_theta() {
        let v = are_isomorphic(
            &ideal("x^2\ny^2\ntruncate: 3"),
            &ideal("x*y\ny^2\ntruncate: 3"),
        )
        .unwrap();
        assert_eq!(
            v,
            IsoVerdict::Distinguished {
                field: "theta-pattern",
                left: "[1,1] at degree 2".into(),
                right: "[2] at degree 2".into()
            }
        );
    }

    #[test]
    fn witnesses_for_substituted_ideals() {
        let i = ideal("x^2\ny^2\ntruncate: 3");
        check_witness(&i, &ideal("x*y\nx^2 + y^2\ntruncate: 3"));
        check_witness(&i, &i.substitute(&LinearChange::swap()));
        let m = LinearChange::new(int(3), ratio(-1, 2), int(2), int(5)).unwrap();
        for text in [
            "x*y\ny^2\ntruncate: 3",
            "x^3\ny^3\nx^2*y - x*y^2\ntruncate: 4",
            "x^2*y\nx*y^2\ny^3\ntruncate: 4",
            "x^2\nx*y^3 + y^4\ntruncate: 5",
            "x*y\nx^4 + y^4\ntruncate: 5",
        ] {
            let i = ideal(text);
            check_witness(&i, &i.substitute(&m));
        }
    }

    #[test]
    fn irrational_configuration_is_unknown() {
        let v = are_isomorphic(
            &ideal("x^2\ny^2\ntruncate: 3"),
            &ideal("x*y\nx^2 - y^2\ntruncate: 3"),
        )
        .unwrap();
        assert_eq!(v, IsoVerdict::Unknown);
    }

    #[test]
    fn rational_kth_roots() {
        assert_eq!(rational_roots_of(&ratio(8, 27), 3), vec![ratio(2, 3)]);
        assert_eq!(rational_roots_of(&ratio(-8, 27), 3), vec![ratio(-2, 3)]);
        assert_eq!(rational_roots_of(&int(4), 2), vec![int(2), int(-2)]);
        assert!(rational_roots_of(&int(2), 2).is_empty());
        assert!(rational_roots_of(&int(-4), 2).is_empty());
    }
}
