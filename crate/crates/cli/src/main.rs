//! `hsft`: Hilbert-Samuel sequences, finite-type classification and
//! normal-form catalogs for graded ideals in `k[x, y]`.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use hsft_core::{
    are_isomorphic, enumerate_sequences, format_ideal, parse_ideal, parse_sequence,
    sample_ideal_with_retries, verify_catalog, CatalogError, GradedIdeal, HsSequence, IdealError,
    InvariantError, ParseError, SequenceError, SAMPLE_RETRIES,
};

use render::Output;

#[derive(Parser)]
#[command(
    name = "hsft",
    version,
    about = "Hilbert-Samuel sequences and normal forms of graded ideals in k[x, y]"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert-Samuel sequence of the ideal in an ideal file.
    Hs { path: PathBuf },
    /// Finite or infinite type of a sequence such as "1,2,3,1".
    Classify { sequence: String },
    /// Every valid sequence of a given colength.
    Enumerate(EnumerateArgs),
    /// Normal forms of a finite-type sequence, verified pairwise.
    Catalog {
        sequence: String,
        /// Directory for one ideal file per entry plus report.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two ideals differ by a linear change of variables.
    Iso { left: PathBuf, right: PathBuf },
    /// Column diagram of a sequence.
    Diagram { sequence: String },
    /// Random ideals with a given sequence.
    Sample {
        sequence: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Attempts per sample before giving up.
        #[arg(long, default_value_t = SAMPLE_RETRIES)]
        retries: usize,
        /// Directory for the sampled ideal files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EnumerateArgs {
    #[arg(long)]
    colength: Option<usize>,
    #[arg(long)]
    max_colength: Option<usize>,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn domain(message: impl ToString) -> Self {
        Failure {
            code: 3,
            message: message.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Ideal(inner @ IdealError::NotArtinian { .. }) => Failure::domain(inner),
            other => Failure::parse(other),
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        Failure::domain(e)
    }
}

impl From<SequenceError> for Failure {
    fn from(e: SequenceError) -> Self {
        Failure::domain(e)
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Ideal(inner) => inner.into(),
            other => Failure::domain(other),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::SamplingFailed { .. } => Failure {
                code: 4,
                message: e.to_string(),
            },
            CatalogError::Invariant(inner) => inner.into(),
            other => Failure::domain(other),
        }
    }
}

fn read_ideal(path: &Path) -> Result<GradedIdeal, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let ideal = parse_ideal(&text).map_err(|e| {
        let mut f = Failure::from(e);
        if f.code == 2 {
            f.message = format!("{}: {}", path.display(), f.message);
        }
        f
    })?;
    ideal.check_finite_colength()?;
    Ok(ideal)
}

fn read_sequence(text: &str) -> Result<HsSequence, Failure> {
    let entries = parse_sequence(text)?;
    Ok(HsSequence::validate(&entries)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::parse(format!("{}: {e}", dir.display())))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Hs { path } => {
            let ideal = read_ideal(&path)?;
            Ok(render::hs(&ideal.hilbert_samuel()?))
        }
        Command::Classify { sequence } => Ok(render::classify(&read_sequence(&sequence)?)),
        Command::Enumerate(args) => {
            let (low, high) = match (args.colength, args.max_colength) {
                (Some(n), _) => (n, n),
                (None, Some(n)) => (3, n),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            if high < 3 {
                return Err(SequenceError::InvalidColength(high).into());
            }
            let mut sequences = Vec::new();
            for n in low..=high {
                sequences.extend(enumerate_sequences(n)?);
            }
            Ok(render::enumerate(&sequences))
        }
        Command::Catalog { sequence, out } => {
            let seq = read_sequence(&sequence)?;
            let report = verify_catalog(&seq.classify())?;
            let files: Vec<String> = (0..report.entries.len())
                .map(|i| format!("entry-{i}.ideal"))
                .collect();
            let output = render::catalog(&report, out.as_ref().map(|_| files.as_slice()));
            if let Some(dir) = &out {
                create_dir(dir)?;
                for (i, (entry, name)) in report.entries.iter().zip(&files).enumerate() {
                    let comments = vec![
                        format!("{} entry {i}", render::label_text(&report.label)),
                        format!("sequence {}", report.sequence),
                        entry.note.clone(),
                    ];
                    write_file(&dir.join(name), &format_ideal(&entry.ideal, &comments))?;
                }
                write_file(
                    &dir.join("report.json"),
                    &render::catalog(&report, Some(&files)).json,
                )?;
            }
            Ok(output)
        }
        Command::Iso { left, right } => {
            let (i, j) = (read_ideal(&left)?, read_ideal(&right)?);
            Ok(render::iso(&are_isomorphic(&i, &j)?))
        }
        Command::Diagram { sequence } => Ok(render::diagram(&read_sequence(&sequence)?)),
        Command::Sample {
            sequence,
            seed,
            count,
            retries,
            out,
        } => {
            let seq = read_sequence(&sequence)?;
            let mut samples = Vec::new();
            for i in 0..count {
                let s = seed.wrapping_add(i as u64);
                samples.push((s, sample_ideal_with_retries(&seq, s, retries)?));
            }
            let files: Vec<String> = (0..count).map(|i| format!("sample-{i}.ideal")).collect();
            if let Some(dir) = &out {
                create_dir(dir)?;
                for ((s, ideal), name) in samples.iter().zip(&files) {
                    let comments = vec![format!("sequence {seq}"), format!("seed {s}")];
                    write_file(&dir.join(name), &format_ideal(ideal, &comments))?;
                }
            }
            Ok(render::sample(
                &seq,
                &samples,
                out.as_ref().map(|_| files.as_slice()),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(output) => {
            if json {
                println!("{}", output.json);
            } else {
                print!("{}", output.text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
