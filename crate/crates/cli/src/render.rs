//! Text and JSON renderings of every command's result.

use std::fmt::Write;

use hsft_core::{
    format_sequence, CatalogReport, GradedIdeal, HsSequence, IsoVerdict, LinearChange, TypeLabel,
};
use serde::Serialize;

pub struct Output {
    pub text: String,
    pub json: String,
}

fn output(text: String, value: &impl Serialize) -> Output {
    Output {
        text,
        json: serde_json::to_string_pretty(value).expect("plain data serializes"),
    }
}

/// `T6 (n=1, k=2)`, or just `T2` for rows without parameters.
pub fn label_text(label: &TypeLabel) -> String {
    match label.row() {
        Some(row) => {
            let params = row.params();
            if params.is_empty() {
                row.name().to_string()
            } else {
                let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("{} ({})", row.name(), inner.join(", "))
            }
        }
        None => "-".to_string(),
    }
}

#[derive(Serialize)]
struct Param {
    name: &'static str,
    value: usize,
}

#[derive(Serialize)]
struct Classification {
    sequence: Vec<usize>,
    colength: usize,
    finite: bool,
    dimension: usize,
    label: Option<&'static str>,
    parameters: Vec<Param>,
    canonical_n: usize,
}

fn classification(seq: &HsSequence) -> Classification {
    let label = seq.classify();
    let row = label.row();
    Classification {
        sequence: seq.entries().to_vec(),
        colength: seq.colength(),
        finite: label.is_finite(),
        dimension: label.dimension(),
        label: row.map(|r| r.name()),
        parameters: row
            .map(|r| {
                r.params()
                    .into_iter()
                    .map(|(name, value)| Param { name, value })
                    .collect()
            })
            .unwrap_or_default(),
        canonical_n: seq.deviation_index(),
    }
}

fn classification_text(c: &Classification, label: &TypeLabel) -> String {
    if !c.finite {
        return format!("infinite, dim {}", c.dimension);
    }
    let mut s = format!("finite, {}, dim {}", label_text(label), c.dimension);
    if c.parameters.iter().any(|p| p.name == "n") {
        write!(s, " [canonical n={}]", c.canonical_n).unwrap();
    }
    s
}

#[derive(Serialize)]
struct SequenceResult<'a> {
    sequence: &'a [usize],
}

pub fn hs(entries: &[usize]) -> Output {
    output(
        format!("{}\n", format_sequence(entries)),
        &SequenceResult { sequence: entries },
    )
}

pub fn classify(seq: &HsSequence) -> Output {
    let c = classification(seq);
    output(
        format!("{}\n", classification_text(&c, &seq.classify())),
        &c,
    )
}

#[derive(Serialize)]
struct Enumeration {
    rows: Vec<Classification>,
}

pub fn enumerate(sequences: &[HsSequence]) -> Output {
    let mut text = String::from("colength\tsequence\tdim\ttype\tlabel\n");
    let mut rows = Vec::new();
    for seq in sequences {
        let label = seq.classify();
        let c = classification(seq);
        let kind = if c.finite { "finite" } else { "infinite" };
        writeln!(
            text,
            "{}\t{}\t{}\t{kind}\t{}",
            c.colength,
            seq,
            c.dimension,
            label_text(&label)
        )
        .unwrap();
        rows.push(c);
    }
    output(text, &Enumeration { rows })
}

#[derive(Serialize)]
struct IdealDto {
    generators: Vec<String>,
    truncation: Option<usize>,
}

impl From<&GradedIdeal> for IdealDto {
    fn from(i: &GradedIdeal) -> Self {
        IdealDto {
            generators: i.generators().iter().map(|g| g.to_string()).collect(),
            truncation: i.truncation(),
        }
    }
}

fn ideal_text(i: &GradedIdeal) -> String {
    let mut parts: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
    if let Some(d) = i.truncation() {
        parts.push(format!("(x, y)^{d}"));
    }
    parts.join(", ")
}

fn matrix_strings(m: &LinearChange) -> [[String; 2]; 2] {
    m.matrix().map(|row| row.map(|v| v.to_string()))
}

fn matrix_text(m: &LinearChange) -> String {
    let [[a, b], [c, d]] = matrix_strings(m);
    format!("[[{a}, {b}], [{c}, {d}]]")
}

#[derive(Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
enum VerdictDto {
    Isomorphic {
        witness: [[String; 2]; 2],
    },
    Distinguished {
        field: &'static str,
        left: String,
        right: String,
    },
    Unknown,
}

impl From<&IsoVerdict> for VerdictDto {
    fn from(v: &IsoVerdict) -> Self {
        match v {
            IsoVerdict::Isomorphic(m) => VerdictDto::Isomorphic {
                witness: matrix_strings(m),
            },
            IsoVerdict::Distinguished { field, left, right } => VerdictDto::Distinguished {
                field,
                left: left.clone(),
                right: right.clone(),
            },
            IsoVerdict::Unknown => VerdictDto::Unknown,
        }
    }
}

fn verdict_text(v: &IsoVerdict) -> String {
    match v {
        IsoVerdict::Isomorphic(m) => format!("isomorphic, witness {}", matrix_text(m)),
        IsoVerdict::Distinguished { field, left, right } => {
            format!("distinguished by {field}: {left} vs {right}")
        }
        IsoVerdict::Unknown => "unknown".to_string(),
    }
}

pub fn iso(v: &IsoVerdict) -> Output {
    output(format!("{}\n", verdict_text(v)), &VerdictDto::from(v))
}

#[derive(Serialize)]
struct EntryDto {
    index: usize,
    file: Option<String>,
    note: String,
    ideal: IdealDto,
    computed: Vec<usize>,
    passed: bool,
}

#[derive(Serialize)]
struct PairDto {
    pair: [usize; 2],
    #[serde(flatten)]
    verdict: VerdictDto,
    witness_verified: bool,
}

#[derive(Serialize)]
struct CatalogDto {
    label: &'static str,
    parameters: Vec<Param>,
    sequence: Vec<usize>,
    dimension: usize,
    entries: Vec<EntryDto>,
    verdicts: Vec<PairDto>,
    classes: Vec<Vec<usize>>,
    class_count: usize,
    unknown_pairs: Vec<[usize; 2]>,
}

pub fn catalog(report: &CatalogReport, files: Option<&[String]>) -> Output {
    let row = report
        .label
        .row()
        .expect("catalogs exist only for finite labels");
    let mut text = format!(
        "{}, sequence {}, dim {}\n",
        label_text(&report.label),
        report.sequence,
        report.label.dimension()
    );
    let mut entries = Vec::new();
    for (i, (entry, check)) in report.entries.iter().zip(&report.checks).enumerate() {
        let status = if check.passed {
            "ok".to_string()
        } else {
            format!("FAILED {}", format_sequence(&check.computed))
        };
        writeln!(text, "entry {i}: {} [{status}]", ideal_text(&entry.ideal)).unwrap();
        entries.push(EntryDto {
            index: i,
            file: files.map(|f| f[i].clone()),
            note: entry.note.clone(),
            ideal: IdealDto::from(&entry.ideal),
            computed: check.computed.clone(),
            passed: check.passed,
        });
    }
    let mut verdicts = Vec::new();
    for v in &report.verdicts {
        let mut line = format!("pair {}-{}: {}", v.left, v.right, verdict_text(&v.verdict));
        if v.verdict.is_isomorphic() && !v.witness_verified {
            line.push_str(" (witness NOT verified)");
        }
        writeln!(text, "{line}").unwrap();
        verdicts.push(PairDto {
            pair: [v.left, v.right],
            verdict: VerdictDto::from(&v.verdict),
            witness_verified: v.witness_verified,
        });
    }
    let classes: Vec<String> = report
        .classes
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    writeln!(
        text,
        "classes: {} {}",
        report.class_count(),
        classes.join(" ")
    )
    .unwrap();
    writeln!(text, "unknown pairs: {}", report.unknown_pairs.len()).unwrap();
    let dto = CatalogDto {
        label: row.name(),
        parameters: row
            .params()
            .into_iter()
            .map(|(name, value)| Param { name, value })
            .collect(),
        sequence: report.sequence.entries().to_vec(),
        dimension: report.label.dimension(),
        entries,
        verdicts,
        classes: report.classes.clone(),
        class_count: report.class_count(),
        unknown_pairs: report.unknown_pairs.iter().map(|&(a, b)| [a, b]).collect(),
    };
    output(text, &dto)
}

#[derive(Serialize)]
struct Diagram {
    sequence: Vec<usize>,
    lines: Vec<String>,
}

/// One column of `#` cells per degree, bottom-aligned, over a degree axis.
fn diagram_lines(entries: &[usize]) -> Vec<String> {
    let width = (entries.len().saturating_sub(1)).to_string().len();
    let height = entries.iter().copied().max().unwrap_or(0);
    let mut lines = Vec::new();
    for level in (1..=height).rev() {
        let cells: Vec<String> = entries
            .iter()
            .map(|&t| format!("{:<width$}", if t >= level { "#" } else { "" }))
            .collect();
        lines.push(cells.join(" ").trim_end().to_string());
    }
    let axis: Vec<String> = (0..entries.len()).map(|d| format!("{d:<width$}")).collect();
    lines.push(axis.join(" ").trim_end().to_string());
    lines
}

pub fn diagram(seq: &HsSequence) -> Output {
    let lines = diagram_lines(seq.entries());
    let mut text = String::new();
    for l in &lines {
        writeln!(text, "{l}").unwrap();
    }
    output(
        text,
        &Diagram {
            sequence: seq.entries().to_vec(),
            lines,
        },
    )
}

#[derive(Serialize)]
struct SampleDto {
    index: usize,
    seed: u64,
    file: Option<String>,
    ideal: IdealDto,
    verified: bool,
}

#[derive(Serialize)]
struct Samples {
    sequence: Vec<usize>,
    samples: Vec<SampleDto>,
}

pub fn sample(
    seq: &HsSequence,
    samples: &[(u64, GradedIdeal)],
    files: Option<&[String]>,
) -> Output {
    let mut text = String::new();
    let mut dtos = Vec::new();
    for (i, (seed, ideal)) in samples.iter().enumerate() {
        // sample_ideal re-checks before returning; this is a second, independent look
        let verified = ideal.hilbert_samuel().is_ok_and(|t| t == seq.entries());
        match files {
            Some(f) => writeln!(text, "{} (seed {seed})", f[i]).unwrap(),
            None => writeln!(text, "seed {seed}: {}", ideal_text(ideal)).unwrap(),
        }
        dtos.push(SampleDto {
            index: i,
            seed: *seed,
            file: files.map(|f| f[i].clone()),
            ideal: IdealDto::from(ideal),
            verified,
        });
    }
    output(
        text,
        &Samples {
            sequence: seq.entries().to_vec(),
            samples: dtos,
        },
    )
}
