//! Hilbert-Samuel sequences with `t_1 = 2`: validation, jump indices, the
//! dimension of the locus `G_T`, and the finite-type table.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("colength must be at least 3, got {0}")]
    InvalidColength(usize),
    #[error("invalid parameters for {row}: {reason}")]
    InvalidParameters { row: &'static str, reason: String },
}

fn invalid(reason: impl Into<String>) -> SequenceError {
    SequenceError::InvalidSequence(reason.into())
}

/// A Hilbert-Samuel sequence `(1, 2, ..., n, t_n, ..., t_last)` with
/// `n = t_(n-1) >= t_n >= ... >= t_last >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HsSequence {
    entries: Vec<usize>,
    n: usize,
}

impl HsSequence {
    /// Checks the shape and computes the deviation index `n`. Trailing zeros
    /// are dropped.
    pub fn validate(entries: &[usize]) -> Result<Self, SequenceError> {
        let mut entries = entries.to_vec();
        while entries.last() == Some(&0) {
            entries.pop();
        }
        match entries.first() {
            None => return Err(invalid("empty sequence")),
            Some(&1) => {}
            Some(&t0) => return Err(invalid(format!("t_0 must be 1, got {t0}"))),
        }
        match entries.get(1) {
            Some(&2) => {}
            Some(&t1) => return Err(invalid(format!("t_1 must be 2, got {t1}"))),
            None => return Err(invalid("t_1 must be 2, got 0")),
        }
        if let Some(i) = entries.iter().position(|&t| t == 0) {
            return Err(invalid(format!(
                "t_{i} is zero before the end of the sequence"
            )));
        }
        if let Some(i) = entries.iter().enumerate().position(|(i, &t)| t > i + 1) {
            return Err(invalid(format!("t_{i} = {} exceeds {}", entries[i], i + 1)));
        }
        let n = entries
            .iter()
            .enumerate()
            .position(|(i, &t)| t != i + 1)
            .unwrap_or(entries.len());
        for i in n.max(1)..entries.len() {
            if entries[i] > entries[i - 1] {
                return Err(invalid(format!(
                    "tail must be nonincreasing: t_{i} = {} > t_{} = {}",
                    entries[i],
                    i - 1,
                    entries[i - 1]
                )));
            }
        }
        Ok(HsSequence { entries, n })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// First index with `t_i != i + 1`.
    pub fn deviation_index(&self) -> usize {
        self.n
    }

    /// `N = sum t_i`.
    pub fn colength(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `t_i`, zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.entries.get(i).copied().unwrap_or(0)
    }

    /// `e_j = t_(j-1) - t_j` for `n <= j <= last + 1`.
    pub fn jump_indices(&self) -> JumpIndices {
        let jumps = (self.n..=self.entries.len())
            .map(|j| (j, self.get(j - 1) - self.get(j)))
            .collect();
        JumpIndices { jumps }
    }

    /// `dim G_T = sum_(j >= n) (e_j + 1) e_(j+1)`.
    pub fn gt_dimension(&self) -> usize {
        let e = self.jump_indices();
        e.jumps
            .iter()
            .map(|(&j, &ej)| (ej + 1) * e.get(j + 1))
            .sum()
    }

    /// Maximal runs of equal values in the tail, as `(value, length)`. The
    /// first run absorbs `t_(n-1)` when it equals the run's value, which is
    /// how the table counts run lengths.
    fn table_runs(&self) -> (usize, Vec<(usize, usize)>) {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &t in &self.entries[self.n..] {
            match runs.last_mut() {
                Some((v, len)) if *v == t => *len += 1,
                _ => runs.push((t, 1)),
            }
        }
        let mut start = self.n;
        if let Some(first) = runs.first_mut() {
            if first.0 == self.n {
                first.1 += 1;
                start -= 1;
            }
        }
        (start, runs)
    }

    /// The table row this sequence instantiates, with parameters in the
    /// table's own convention.
    pub fn match_pattern(&self) -> Option<TableRow> {
        let n_c = self.n;
        let (n, runs) = self.table_runs();
        use TableRow::*;
        let row = match runs.as_slice() {
            [] => T1 { n: n_c },
            [(1, 1)] if n_c == 2 => T2,
            [(1, 1)] if n_c == 3 => T3,
            [(2, 1), (1, c)] if n_c == 3 && *c >= 2 => T4 { k: c - 1 },
            [(1, c)] if *c >= 2 => T5 { n: n_c, k: c - 1 },
            [(2, c)] if *c >= 2 => T6 { n, k: c - 1 },
            [(2, c), (1, l)] if *c >= 2 => T7 { n, k: c - 1, l: *l },
            [(3, c)] if *c >= 2 => T8 { n, k: c - 1 },
            [(3, c), (1, l)] if *c >= 2 && *l >= 2 => T9 { n, k: c - 1, l: *l },
            [(3, c), (2, l)] if *c >= 2 && *l >= 2 => T10 { n, k: c - 1, l: *l },
            [(3, c), (2, l), (1, s)] if *c >= 2 && *l >= 2 && *s >= 2 => T11 {
                n,
                k: c - 1,
                l: *l,
                s: *s,
            },
            _ => return None,
        };
        Some(row)
    }

    /// Finite or infinite type, decided by `dim G_T <= 3` and cross-checked
    /// against the table.
    pub fn classify(&self) -> TypeLabel {
        let dimension = self.gt_dimension();
        let row = self.match_pattern();
        match (row, dimension <= 3) {
            (Some(row), true) => {
                assert_eq!(
                    row.table_dimension(),
                    dimension,
                    "table dimension disagrees for {row}"
                );
                TypeLabel::Finite { row, dimension }
            }
            (None, false) => TypeLabel::Infinite { dimension },
            (row, _) => {
                panic!("table match {row:?} disagrees with dim G_T = {dimension} for {self}")
            }
        }
    }
}

impl fmt::Display for HsSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_sequence(&self.entries))
    }
}

/// Jump indices `e_j` keyed by `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpIndices {
    jumps: BTreeMap<usize, usize>,
}

impl JumpIndices {
    /// `e_j`, zero outside the stored range.
    pub fn get(&self, j: usize) -> usize {
        self.jumps.get(&j).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.jumps.iter().map(|(&j, &e)| (j, e))
    }

    pub fn total(&self) -> usize {
        self.jumps.values().sum()
    }
}

/// Rows of the finite-type table. `n` is the index where the first run
/// starts, which may be one less than the deviation index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableRow {
    T1 {
        n: usize,
    },
    T2,
    T3,
    T4 {
        k: usize,
    },
    T5 {
        n: usize,
        k: usize,
    },
    T6 {
        n: usize,
        k: usize,
    },
    T7 {
        n: usize,
        k: usize,
        l: usize,
    },
    T8 {
        n: usize,
        k: usize,
    },
    T9 {
        n: usize,
        k: usize,
        l: usize,
    },
    T10 {
        n: usize,
        k: usize,
        l: usize,
    },
    T11 {
        n: usize,
        k: usize,
        l: usize,
        s: usize,
    },
}

fn head(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn run(value: usize, len: usize) -> Vec<usize> {
    vec![value; len]
}

impl TableRow {
    pub fn name(&self) -> &'static str {
        use TableRow::*;
        match self {
            T1 { .. } => "T1",
            T2 => "T2",
            T3 => "T3",
            T4 { .. } => "T4",
            T5 { .. } => "T5",
            T6 { .. } => "T6",
            T7 { .. } => "T7",
            T8 { .. } => "T8",
            T9 { .. } => "T9",
            T10 { .. } => "T10",
            T11 { .. } => "T11",
        }
    }

    /// Named parameters in table order.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        use TableRow::*;
        match *self {
            T1 { n } => vec![("n", n)],
            T2 | T3 => vec![],
            T4 { k } => vec![("k", k)],
            T5 { n, k } | T6 { n, k } | T8 { n, k } => vec![("n", n), ("k", k)],
            T7 { n, k, l } | T9 { n, k, l } | T10 { n, k, l } => vec![("n", n), ("k", k), ("l", l)],
            T11 { n, k, l, s } => vec![("n", n), ("k", k), ("l", l), ("s", s)],
        }
    }

    fn check_params(&self) -> Result<(), SequenceError> {
        use TableRow::*;
        let min_n = match self {
            T1 { .. } | T5 { .. } | T8 { .. } | T9 { .. } | T10 { .. } | T11 { .. } => 2,
            T6 { .. } | T7 { .. } => 1,
            _ => 0,
        };
        let mins = |name: &str| match (self, name) {
            (_, "n") => min_n,
            (_, "k") => 1,
            (T7 { .. }, "l") => 1,
            (_, "l") | (_, "s") => 2,
            _ => 0,
        };
        for (name, value) in self.params() {
            if value < mins(name) {
                return Err(SequenceError::InvalidParameters {
                    row: self.name(),
                    reason: format!("{name} = {value} is below the minimum {}", mins(name)),
                });
            }
        }
        Ok(())
    }

    /// The sequence of this row, after checking its restrictions.
    pub fn sequence(&self) -> Result<HsSequence, SequenceError> {
        self.check_params()?;
        use TableRow::*;
        let entries = match *self {
            T1 { n } => head(n),
            T2 => vec![1, 2, 1],
            T3 => vec![1, 2, 3, 1],
            T4 { k } => [vec![1, 2, 3, 2], run(1, k + 1)].concat(),
            T5 { n, k } => [head(n), run(1, k + 1)].concat(),
            T6 { n, k } => [head(n), run(2, k + 1)].concat(),
            T7 { n, k, l } => [head(n), run(2, k + 1), run(1, l)].concat(),
            T8 { n, k } => [head(n), run(3, k + 1)].concat(),
            T9 { n, k, l } => [head(n), run(3, k + 1), run(1, l)].concat(),
            T10 { n, k, l } => [head(n), run(3, k + 1), run(2, l)].concat(),
            T11 { n, k, l, s } => [head(n), run(3, k + 1), run(2, l), run(1, s)].concat(),
        };
        HsSequence::validate(&entries)
    }

    /// The `dim G_T` column of the table.
    pub fn table_dimension(&self) -> usize {
        use TableRow::*;
        match *self {
            T1 { .. } => 0,
            T5 { .. } => 1,
            T2 | T6 { .. } => 2,
            T7 { l, .. } => {
                if l > 1 {
                    2
                } else {
                    3
                }
            }
            T3 | T4 { .. } | T8 { .. } | T9 { .. } | T10 { .. } | T11 { .. } => 3,
        }
    }

    /// Every instance of every row with parameters up to the given bounds.
    pub fn instances(max_n: usize, max_k: usize, max_l: usize, max_s: usize) -> Vec<TableRow> {
        use TableRow::*;
        let mut out = vec![T2, T3];
        for n in 1..=max_n {
            out.push(T1 { n });
            for k in 1..=max_k {
                out.push(T5 { n, k });
                out.push(T6 { n, k });
                out.push(T8 { n, k });
                for l in 1..=max_l {
                    out.push(T7 { n, k, l });
                    out.push(T9 { n, k, l });
                    out.push(T10 { n, k, l });
                    for s in 1..=max_s {
                        out.push(T11 { n, k, l, s });
                    }
                }
            }
        }
        for k in 1..=max_k {
            out.push(T4 { k });
        }
        out.retain(|r| r.check_params().is_ok());
        out.sort();
        out
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        let params = self.params();
        if !params.is_empty() {
            let parts: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Classification verdict with `dim G_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    Finite { row: TableRow, dimension: usize },
    Infinite { dimension: usize },
}

impl TypeLabel {
    pub fn dimension(&self) -> usize {
        match *self {
            TypeLabel::Finite { dimension, .. } | TypeLabel::Infinite { dimension } => dimension,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TypeLabel::Finite { .. })
    }

    pub fn row(&self) -> Option<TableRow> {
        match *self {
            TypeLabel::Finite { row, .. } => Some(row),
            TypeLabel::Infinite { .. } => None,
        }
    }
}

impl From<TableRow> for TypeLabel {
    fn from(row: TableRow) -> Self {
        TypeLabel::Finite {
            row,
            dimension: row.table_dimension(),
        }
    }
}

/// Every valid sequence of colength `n_total`, in lexicographic order.
pub fn enumerate_sequences(n_total: usize) -> Result<Vec<HsSequence>, SequenceError> {
    if n_total < 3 {
        return Err(SequenceError::InvalidColength(n_total));
    }
    let mut out = Vec::new();
    let mut n = 2;
    while n * (n + 1) / 2 <= n_total {
        let rest = n_total - n * (n + 1) / 2;
        let mut tail = Vec::new();
        partitions(rest, n, &mut tail, &mut |tail| {
            let entries = [head(n), tail.to_vec()].concat();
            out.push(HsSequence { entries, n });
        });
        n += 1;
    }
    out.sort();
    Ok(out)
}

/// Calls `emit` on each nonincreasing sequence of positive parts `<= max_part`
/// summing to `rest`.
fn partitions(
    rest: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if rest == 0 {
        emit(prefix);
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        prefix.push(part);
        partitions(rest - part, part, prefix, emit);
        prefix.pop();
    }
}
