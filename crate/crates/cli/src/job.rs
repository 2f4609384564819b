//! Command-line parsing into a validated [`JobSpec`].

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use toral::ideals::lattice_basis_ideal;
use toral::{int_matrix, IntMat, Matrix};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Catalog the bounded congruence classes of the moves given by the columns of M.
    Subgraphs,
    /// Number of bounded classes, for `a b c d` or a matrix.
    BoundedCount,
    /// Zero-block decompositions of a lattice basis matrix B.
    Decompose,
    /// Toral primary components of I(B).
    Components,
    /// Polynomial (or truncated series) solutions of I(M).
    Solve,
    /// Smith and Hermite normal forms.
    Snf,
    /// Characters of sat(ZB) extending the trivial character on ZB.
    Characters,
    /// Check the 2x2 law for [[a, b], [-c, -d]].
    #[value(name = "verify-2x2")]
    Verify2x2,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Subgraphs => "subgraphs",
            Command::BoundedCount => "bounded-count",
            Command::Decompose => "decompose",
            Command::Components => "components",
            Command::Solve => "solve",
            Command::Snf => "snf",
            Command::Characters => "characters",
            Command::Verify2x2 => "verify-2x2",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest total degree the catalog visits.
    pub budget: u64,
    pub node_cap: usize,
    /// `e` in the monomial ideal `⟨x_i^e⟩`.
    pub power: Option<u64>,
    pub truncate: Option<u64>,
    /// Base point for `solve`.
    pub point: Option<Vec<i64>>,
    pub format: Format,
    pub render: bool,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            budget: toral::congruence::DEFAULT_MAX_DEGREE,
            node_cap: toral::congruence::DEFAULT_NODE_CAP,
            power: None,
            truncate: None,
            point: None,
            format: Format::Json,
            render: false,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub matrix: IntMat,
    pub options: Options,
}

#[derive(Debug, Parser)]
#[command(name = "toral", version, about = "Lattice-point combinatorics of binomial primary decomposition")]
#[command(allow_negative_numbers = true)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Matrix rows separated by `;` (or `a b c d` for the 2x2 commands). Put
    /// `--` before a matrix that starts with a minus sign.
    operands: Vec<String>,
    /// Read the matrix from a file (text rows, or JSON `[[...]]` / `{"matrix": [[...]]}`).
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = toral::congruence::DEFAULT_MAX_DEGREE)]
    budget: u64,
    #[arg(long, default_value_t = toral::congruence::DEFAULT_NODE_CAP)]
    node_cap: usize,
    #[arg(long, value_name = "E")]
    power: Option<u64>,
    #[arg(long, value_name = "D")]
    truncate: Option<u64>,
    /// Base point for `solve`, e.g. `4 0 0`.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Add an ASCII picture of the classes (q = 2 or 3).
    #[arg(long)]
    render: bool,
    /// Print elapsed time on stderr.
    #[arg(long)]
    timing: bool,
}

/// Parses a matrix written as rows of whitespace-separated integers, rows
/// separated by `;` or newlines. Positions in errors are 1-based.
pub fn parse_matrix(text: &str) -> Result<IntMat, CliError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for line in text.split([';', '\n']) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let row_no = rows.len() + 1;
        let mut row = Vec::with_capacity(tokens.len());
        for (j, tok) in tokens.iter().enumerate() {
            let x: BigInt = tok.parse().map_err(|_| {
                CliError::Usage(format!("row {row_no} col {}: `{tok}` is not an integer", j + 1))
            })?;
            row.push(x);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(CliError::Usage(format!(
                    "row {row_no} has {} entries, expected {}",
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Usage("empty matrix".into()));
    }
    Ok(Matrix::from_rows(&rows)?)
}

fn parse_json_matrix(text: &str) -> Result<IntMat, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("input file: {e}")))?;
    let rows = match &value {
        serde_json::Value::Object(map) => map.get("matrix").cloned().unwrap_or(serde_json::Value::Null),
        other => other.clone(),
    };
    let serde_json::Value::Array(rows) = rows else {
        return Err(CliError::Usage("input file: expected an array of rows".into()));
    };
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let serde_json::Value::Array(entries) = row else {
            return Err(CliError::Usage(format!("input file: row {} is not an array", i + 1)));
        };
        let line = entries
            .iter()
            .enumerate()
            .map(|(j, x)| match x {
                serde_json::Value::Number(n) => Ok(n.to_string()),
                serde_json::Value::String(s) => Ok(s.clone()),
                _ => Err(CliError::Usage(format!("row {} col {}: not an integer", i + 1, j + 1))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(line.join(" "));
    }
    parse_matrix(&out.join(";"))
}

fn parse_point(text: &str) -> Result<Vec<i64>, CliError> {
    text.split([' ', ',', '\t'])
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, t)| {
            t.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("--point entry {}: `{t}` is not an integer", i + 1)))
        })
        .collect()
}

fn two_by_two(ints: &[BigInt]) -> Result<IntMat, CliError> {
    let small: Vec<i64> = ints
        .iter()
        .map(|x| i64::try_from(x).map_err(|_| CliError::Usage(format!("{x} is out of range"))))
        .collect::<Result<_, _>>()?;
    if small.iter().any(|&x| x <= 0) {
        return Err(CliError::Usage(format!("a b c d must be positive, got {small:?}")));
    }
    Ok(int_matrix(&[[small[0], small[1]], [-small[2], -small[3]]]))
}

/// `(a, b, c, d)` when `m` is `[[a, b], [-c, -d]]` with positive entries.
pub fn as_two_by_two(m: &IntMat) -> Option<[BigInt; 4]> {
    if m.shape() != (2, 2) {
        return None;
    }
    let v = [m[(0, 0)].clone(), m[(0, 1)].clone(), -m[(1, 0)].clone(), -m[(1, 1)].clone()];
    v.iter().all(Signed::is_positive).then_some(v)
}

fn matrix_operand(command: Command, operands: &[String], file: Option<String>) -> Result<IntMat, CliError> {
    if let Some(text) = file {
        if !operands.is_empty() {
            return Err(CliError::Usage("give the matrix either inline or with --input, not both".into()));
        }
        let trimmed = text.trim_start();
        return if trimmed.starts_with('[') || trimmed.starts_with('{') {
            parse_json_matrix(&text)
        } else {
            parse_matrix(&text)
        };
    }
    if operands.is_empty() {
        return Err(CliError::Usage(format!("{} needs a matrix", command.name())));
    }
    let four_ints = operands.len() == 4 && operands.iter().all(|o| o.trim().parse::<BigInt>().is_ok());
    match command {
        Command::Verify2x2 | Command::BoundedCount if four_ints => {
            let ints: Vec<BigInt> = operands.iter().map(|o| o.trim().parse().unwrap()).collect();
            two_by_two(&ints)
        }
        Command::Verify2x2 => {
            let m = parse_matrix(&operands.join(";"))?;
            if as_two_by_two(&m).is_none() {
                return Err(CliError::Usage("verify-2x2 needs positive a b c d".into()));
            }
            Ok(m)
        }
        _ if operands.len() == 1 => parse_matrix(&operands[0]),
        // one operand per row
        _ => parse_matrix(&operands.join(";")),
    }
}

/// Command-specific checks that can be made before running.
fn validate(command: Command, m: &IntMat, options: &Options) -> Result<(), CliError> {
    match command {
        Command::Subgraphs | Command::BoundedCount | Command::Solve => {
            toral::congruence::moves_from_columns(m)?;
            if let Some(p) = &options.point {
                if p.len() != m.rows() {
                    return Err(CliError::Usage(format!(
                        "--point has {} coordinates, the matrix has {} rows",
                        p.len(),
                        m.rows()
                    )));
                }
                if p.iter().any(|&x| x < 0) {
                    return Err(toral::Error::NegativeExponent(p.clone()).into());
                }
            }
        }
        Command::Decompose | Command::Components => {
            lattice_basis_ideal(m)?;
        }
        Command::Verify2x2 => {
            if as_two_by_two(m).is_none() {
                return Err(CliError::Usage("verify-2x2 needs positive a b c d".into()));
            }
        }
        Command::Characters => {
            toral::lattice::LatticeBasis::new(m.clone())?;
        }
        Command::Snf => {}
    }
    if options.power == Some(0) {
        return Err(CliError::Usage("--power must be positive".into()));
    }
    if options.point.is_some() && command != Command::Solve {
        return Err(CliError::Usage("--point only applies to solve".into()));
    }
    Ok(())
}

/// Parses `argv` (including the program name) into a validated job. The
/// `--input` file, if any, is read here.
pub fn parse_job<I, T>(argv: I) -> Result<JobSpec, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    let file = match &args.input {
        Some(path) => Some(
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let matrix = matrix_operand(args.command, &args.operands, file)?;
    let options = Options {
        budget: args.budget,
        node_cap: args.node_cap,
        power: args.power,
        truncate: args.truncate,
        point: args.point.as_deref().map(parse_point).transpose()?,
        format: args.format,
        render: args.render,
        timing: args.timing,
    };
    validate(args.command, &matrix, &options)?;
    Ok(JobSpec { command: args.command, matrix, options })
}

impl JobSpec {
    /// Arguments (program name first) that parse back to this job.
    pub fn to_args(&self) -> Vec<String> {
        let mut out = vec!["toral".to_string(), self.command.name().to_string()];
        let o = &self.options;
        let d = Options::default();
        if o.budget != d.budget {
            out.extend(["--budget".into(), o.budget.to_string()]);
        }
        if o.node_cap != d.node_cap {
            out.extend(["--node-cap".into(), o.node_cap.to_string()]);
        }
        if let Some(e) = o.power {
            out.extend(["--power".into(), e.to_string()]);
        }
        if let Some(t) = o.truncate {
            out.extend(["--truncate".into(), t.to_string()]);
        }
        if let Some(p) = &o.point {
            let p: Vec<String> = p.iter().map(ToString::to_string).collect();
            out.push(format!("--point={}", p.join(" ")));
        }
        if o.format == Format::Text {
            out.extend(["--format".into(), "text".into()]);
        }
        if o.render {
            out.push("--render".into());
        }
        if o.timing {
            out.push("--timing".into());
        }
        out.push("--".into());
        match (self.command, as_two_by_two(&self.matrix)) {
            (Command::Verify2x2, Some(v)) => out.extend(v.iter().map(ToString::to_string)),
            _ => out.push(self.matrix.to_string()),
        }
        out
    }
}
