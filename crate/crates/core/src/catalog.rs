//! Normal forms for every finite-type row and their self-verification.

use thiserror::Error;

use crate::forms::BinaryForm;
use crate::ideal::{form_to_row, substitute_ideal, GradedIdeal};
use crate::invariants::InvariantError;
use crate::iso::{are_isomorphic, IsoVerdict};
use crate::linalg::RowBasis;
use crate::sequence::{HsSequence, SequenceError, TableRow, TypeLabel};
use crate::text::parse_form;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("no catalog for an infinite-type sequence (dim G_T = {dimension})")]
    NoCatalog { dimension: usize },
    #[error(transparent)]
    InvalidParameters(#[from] SequenceError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("no ideal with sequence {sequence} found after {retries} attempts")]
    SamplingFailed {
        sequence: HsSequence,
        retries: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: TypeLabel,
    pub ideal: GradedIdeal,
    /// Which choice of factors produced this entry.
    pub note: String,
}

fn form(text: &str) -> BinaryForm {
    parse_form(text).expect("catalog forms are well formed")
}

/// `h` times every monomial of degree `d - deg h`.
fn multiples(h: &BinaryForm, d: usize) -> Vec<BinaryForm> {
    BinaryForm::monomials(d - h.degree())
        .map(|m| m.multiply(h))
        .collect()
}

/// Start degrees of the tail runs, from the deviation index on.
fn run_starts(seq: &HsSequence) -> Vec<usize> {
    let e = seq.entries();
    (seq.deviation_index()..e.len())
        .filter(|&d| d == seq.deviation_index() || e[d] != e[d - 1])
        .collect()
}

/// Places `factors[i]` at the start of the `i`-th run: its multiples of that
/// degree become generators.
fn chain_ideal(seq: &HsSequence, factors: &[&str]) -> GradedIdeal {
    let starts = run_starts(seq);
    assert_eq!(starts.len(), factors.len(), "one factor per run of {seq}");
    let generators = starts
        .iter()
        .zip(factors)
        .flat_map(|(&d, h)| multiples(&form(h), d))
        .collect();
    GradedIdeal::new(generators, Some(seq.entries().len())).expect("catalog ideals are well formed")
}

fn truncated(generators: &[&str], truncation: usize) -> GradedIdeal {
    GradedIdeal::new(
        generators.iter().map(|g| form(g)).collect(),
        Some(truncation),
    )
    .expect("catalog ideals are well formed")
}

/// `x Q` in degree 3 plus `x` times enough cubics that `I_4 = x K[x,y]_3`.
fn t4_ideal(q: [&str; 2], truncation: usize) -> GradedIdeal {
    let x = BinaryForm::x();
    let q: Vec<BinaryForm> = q.iter().map(|s| form(s)).collect();
    let mut generators: Vec<BinaryForm> = q.iter().map(|f| x.multiply(f)).collect();
    let shifted = q
        .iter()
        .flat_map(|f| multiples(f, 3))
        .map(|f| form_to_row(&f));
    let mut span = RowBasis::from_rows(4, shifted).expect("cubic rows");
    for cubic in BinaryForm::monomials(3) {
        let row = form_to_row(&cubic);
        if !span.contains(&row).expect("cubic row") {
            span = span.extend([row]).expect("cubic row");
            generators.push(x.multiply(&cubic));
        }
    }
    debug_assert_eq!(span, RowBasis::full(4));
    GradedIdeal::new(generators, Some(truncation)).expect("catalog ideals are well formed")
}

fn entry(label: TypeLabel, ideal: GradedIdeal, note: impl Into<String>) -> CatalogEntry {
    CatalogEntry {
        label,
        ideal,
        note: note.into(),
    }
}

/// The normal forms listed for a finite-type label. Lists may contain
/// isomorphic duplicates; [`verify_catalog`] reports them.
pub fn normal_forms(label: &TypeLabel) -> Result<Vec<CatalogEntry>, CatalogError> {
    let row = match *label {
        TypeLabel::Finite { row, .. } => row,
        TypeLabel::Infinite { dimension } => return Err(CatalogError::NoCatalog { dimension }),
    };
    let seq = row.sequence()?;
    let label = TypeLabel::from(row);
    let len = seq.entries().len();
    let n = seq.deviation_index();
    let chains = |lists: &[&[&str]]| -> Vec<CatalogEntry> {
        lists
            .iter()
            .map(|factors| {
                entry(
                    label,
                    chain_ideal(&seq, factors),
                    format!("factors {}", factors.join(", ")),
                )
            })
            .collect()
    };
    use TableRow::*;
    let entries = match row {
        T1 { n } => vec![entry(
            label,
            GradedIdeal::maximal_power(n).expect("n >= 1"),
            "(x, y)^n",
        )],
        T2 => vec![
            entry(label, truncated(&["x^2", "y^2"], 3), "distinct roots"),
            entry(label, truncated(&["x*y", "y^2"], 3), "double root"),
        ],
        T3 => vec![
            entry(
                label,
                truncated(&["x^3", "y^3", "x^2*y - x*y^2"], 4),
                "pattern [1,1,1]",
            ),
            entry(
                label,
                truncated(&["x^3", "x*y^2", "y^3"], 4),
                "pattern [2,1]",
            ),
            entry(
                label,
                truncated(&["x^2*y", "x*y^2", "y^3"], 4),
                "pattern [3]",
            ),
        ],
        T4 { .. } => [
            ["x*y", "y^2"],
            ["x^2 + x*y", "y^2"],
            ["x^2", "x*y + y^2"],
            ["x^2", "x*y"],
            ["x^2", "y^2"],
        ]
        .into_iter()
        .map(|q| entry(label, t4_ideal(q, len), format!("Q = <{}, {}>", q[0], q[1])))
        .collect(),
        T5 { .. } => chains(&[&["x"]]),
        T6 { .. } => chains(&[&["x*y"], &["x^2"]]),
        T8 { .. } => chains(&[&["x^2*y + x*y^2"], &["x^2*y"], &["x^3"]]),
        T9 { .. } => chains(&[
            &["x^2*y + x*y^2", "x"],
            &["x^2*y", "x"],
            &["x^2*y", "y"],
            &["x^3", "x"],
        ]),
        T10 { .. } => chains(&[
            &["x^2*y + x*y^2", "x*y"],
            &["x^2*y", "x^2"],
            &["x^2*y", "x*y"],
            &["x^3", "x^2"],
        ]),
        T11 { .. } => chains(&[
            &["x^2*y + x*y^2", "x*y", "x"],
            &["x^2*y", "x^2", "x"],
            &["x^2*y", "x*y", "x"],
            &["x^2*y", "x*y", "y"],
            &["x^3", "x^2", "x"],
        ]),
        T7 { l, .. } => {
            let big_n = run_starts(&seq)[1];
            let pairs: Vec<(&str, String)> = if l == 1 {
                vec![
                    ("x*y", format!("x^{big_n} + y^{big_n}")),
                    ("x*y", format!("x^{big_n}")),
                    ("x^2", format!("x*y^{} + y^{big_n}", big_n - 1)),
                    ("x^2", format!("x*y^{}", big_n - 1)),
                    ("x^2", format!("y^{big_n}")),
                ]
            } else {
                vec![
                    ("x*y", format!("x^{big_n}")),
                    ("x^2", format!("x*y^{}", big_n - 1)),
                ]
            };
            pairs
                .into_iter()
                .map(|(f, h)| {
                    let mut generators = multiples(&form(f), n);
                    generators.push(form(&h));
                    let ideal = GradedIdeal::new(generators, Some(len))
                        .expect("catalog ideals are well formed");
                    entry(label, ideal, format!("f = {f}, h = {h}"))
                })
                .collect()
        }
    };
    Ok(entries)
}

/// Sequence check for one catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryCheck {
    pub computed: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub left: usize,
    pub right: usize,
    pub verdict: IsoVerdict,
    /// For isomorphic pairs, whether the witness was re-checked by substitution.
    pub witness_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogReport {
    pub label: TypeLabel,
    pub sequence: HsSequence,
    pub entries: Vec<CatalogEntry>,
    pub checks: Vec<EntryCheck>,
    pub verdicts: Vec<PairVerdict>,
    /// Entry indices grouped by proven isomorphism.
    pub classes: Vec<Vec<usize>>,
    pub unknown_pairs: Vec<(usize, usize)>,
}

impl CatalogReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Isomorphic pairs, i.e. redundant catalog entries.
    pub fn merges(&self) -> Vec<(usize, usize)> {
        self.verdicts
            .iter()
            .filter(|v| v.verdict.is_isomorphic())
            .map(|v| (v.left, v.right))
            .collect()
    }

    pub fn unverified_witnesses(&self) -> usize {
        self.verdicts
            .iter()
            .filter(|v| v.verdict.is_isomorphic() && !v.witness_verified)
            .count()
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut root = i;
    while parent[root] != root {
        root = parent[root];
    }
    parent[i] = root;
    root
}

/// Checks every entry's sequence, tests every pair, and groups entries into
/// isomorphism classes.
pub fn verify_catalog(label: &TypeLabel) -> Result<CatalogReport, CatalogError> {
    let entries = normal_forms(label)?;
    let row = label.row().expect("normal_forms rejects infinite labels");
    let sequence = row.sequence()?;
    let mut checks = Vec::new();
    for e in &entries {
        let computed = e.ideal.hilbert_samuel().map_err(InvariantError::from)?;
        let passed = computed == sequence.entries();
        checks.push(EntryCheck { computed, passed });
    }
    let mut verdicts = Vec::new();
    let mut unknown_pairs = Vec::new();
    let mut parent: Vec<usize> = (0..entries.len()).collect();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            let verdict = are_isomorphic(&entries[i].ideal, &entries[j].ideal)?;
            let witness_verified = match &verdict {
                IsoVerdict::Isomorphic(m) => {
                    let image =
                        substitute_ideal(&entries[i].ideal, m).expect("witnesses are invertible");
                    image
                        .equal_ideals(&entries[j].ideal)
                        .map_err(InvariantError::from)?
                }
                _ => false,
            };
            if verdict.is_isomorphic() && witness_verified {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
            if verdict == IsoVerdict::Unknown {
                unknown_pairs.push((i, j));
            }
            verdicts.push(PairVerdict {
                left: i,
                right: j,
                verdict,
                witness_verified,
            });
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of_class = Vec::new();
    for i in 0..entries.len() {
        let r = find(&mut parent, i);
        match root_of_class.iter().position(|&x| x == r) {
            Some(k) => classes[k].push(i),
            None => {
                root_of_class.push(r);
                classes.push(vec![i]);
            }
        }
    }
    Ok(CatalogReport {
        label: TypeLabel::from(row),
        sequence,
        entries,
        checks,
        verdicts,
        classes,
        unknown_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use TableRow::*;

    fn report(row: TableRow) -> CatalogReport {
        verify_catalog(&TypeLabel::from(row)).unwrap()
    }

    #[test]
    fn small_catalogs() {
        let t1 = normal_forms(&T1 { n: 3 }.into()).unwrap();
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0].ideal, GradedIdeal::maximal_power(3).unwrap());
        assert_eq!(
            normal_forms(&T7 { n: 2, k: 1, l: 1 }.into()).unwrap().len(),
            5
        );
        assert_eq!(
            normal_forms(&T7 { n: 2, k: 1, l: 2 }.into()).unwrap().len(),
            2
        );
        assert!(matches!(
            normal_forms(&TypeLabel::Infinite { dimension: 4 }),
            Err(CatalogError::NoCatalog { dimension: 4 })
        ));
        assert!(matches!(
            normal_forms(&T8 { n: 1, k: 1 }.into()),
            Err(CatalogError::InvalidParameters(_))
        ));
    }

    #[test]
    fn sequences_match_labels() {
        for row in TableRow::instances(4, 2, 2, 2) {
            let seq = row.sequence().unwrap();
            for e in normal_forms(&row.into()).unwrap() {
                assert_eq!(
                    e.ideal.hilbert_samuel().unwrap(),
                    seq.entries(),
                    "{row} {}",
                    e.note
                );
            }
        }
    }

    #[test]
    fn theta_and_quadric_classes() {
        let r = report(T2);
        assert_eq!(r.class_count(), 2);
        assert_eq!(r.verdicts.len(), 1);
        let r = report(T3);
        assert_eq!(r.class_count(), 3);
        assert!(r
            .verdicts
            .iter()
            .all(|v| matches!(v.verdict, IsoVerdict::Distinguished { .. })));
    }

    #[test]
    fn redundant_entries_merge() {
        let r = report(T4 { k: 1 });
        assert!(r.all_checks_pass());
        assert_eq!(r.class_count(), 4);
        assert!(r.unknown_pairs.is_empty());
        assert_eq!(r.merges(), vec![(2, 4)]);
        let r = report(T7 { n: 2, k: 1, l: 1 });
        assert_eq!(r.merges(), vec![(2, 4)]);
    }
}
