//! Command-line front end: sequence dumps, solved tables, verification runs, and SVG board charts.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource or I/O error.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::beatty::{lower_wythoff, upper_wythoff, SequenceIndex};
use crate::closedform::{b1, b2, p0_contains, p1_contains, p2_contains, SET_A, SET_B, SET_C};
use crate::hofstadter::{f, GTable, HTable};
use crate::rules::{is_terminal, Position, Ruleset, SumPosition};
use crate::solver::{
    board_cells, solve_grundy, solve_outcomes, solve_sum_grundy, solve_sum_outcomes, GrundyTable,
    OutcomeTable, SolverError, SumGrundyTable, SumOutcomeTable,
};
use crate::verify::{run_claims, Claim, VerifyError, DEFAULT_MAX_MISMATCHES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Resource(_) | CliError::Io(_) => EXIT_RESOURCE,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::TooLarge { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Solver(s) => s.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "wythoff", about = "Wythoff's game with a terminal set: sequences, solved tables, checks, charts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first COUNT values of a sequence as "index,value"
    Seq {
        #[arg(value_enum)]
        name: SeqName,
        count: u64,
    },
    /// Solve a game on the board 0..=N and print outcomes or Grundy values
    Solve {
        #[arg(value_enum)]
        game: Game,
        bound: u32,
        #[arg(value_enum)]
        kind: OutputKind,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a claim (or "all") against the solver on region x+y <= N
    Verify {
        claim: String,
        bound: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_MISMATCHES)]
        max_mismatches: usize,
        /// Emit JSON instead of one text record per claim
        #[arg(long)]
        json: bool,
    },
    /// Draw position sets on the board as an SVG grid
    Chart {
        #[arg(long)]
        bound: u32,
        /// SET:COLOR, where SET is one of p0, p1, p2, a, b, c
        #[arg(long = "layer", required = true, num_args = 1..)]
        layers: Vec<Layer>,
        #[arg(long)]
        overlay: bool,
        #[arg(long, default_value_t = 20)]
        cell_size: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    LowerWythoff,
    UpperWythoff,
    HofstadterG,
    G,
    F,
    B1,
    B2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Game {
    Wythoff,
    Variant,
    VariantMisere,
    VariantPlusNim,
}

impl Game {
    pub fn ruleset(self) -> Ruleset {
        match self {
            Game::Wythoff => Ruleset::WYTHOFF,
            Game::Variant | Game::VariantPlusNim => Ruleset::VARIANT,
            Game::VariantMisere => Ruleset::VARIANT_MISERE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputKind {
    Outcomes,
    Grundy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Runs the tool on `args` (without the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once("wythoff".into()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Seq { name, count } => {
            let mut out = BufWriter::new(stdout);
            cmd_seq(name, count, &mut out)?;
            out.flush()?;
            Ok(EXIT_OK)
        }
        Command::Solve { game, bound, kind, format, out } => {
            let table = SolvedTable::solve(game, bound, kind)?;
            with_output(out, stdout, |w| match format {
                Format::Csv => table.write_csv(w),
                Format::Json => table.write_json(w),
            })?;
            Ok(EXIT_OK)
        }
        Command::Verify { claim, bound, max_mismatches, json } => {
            cmd_verify(&claim, bound, max_mismatches, json, stdout)
        }
        Command::Chart { bound, layers, overlay, cell_size, out } => {
            let spec = ChartSpec::new(bound, layers, cell_size, overlay)?;
            with_output(Some(out), stdout, |w| w.write_all(spec.render().as_bytes()))?;
            Ok(EXIT_OK)
        }
    }
}

fn with_output<F>(path: Option<PathBuf>, stdout: &mut dyn Write, body: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(path) => {
            let file = File::create(&path)
                .map_err(|e| CliError::Resource(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(stdout);
            body(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Writes the first `count` values of a sequence; `f` starts at index 1.
pub fn cmd_seq(name: SeqName, count: u64, out: &mut dyn Write) -> Result<(), CliError> {
    if count == 0 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    let usage = |e: crate::beatty::SequenceError| CliError::Usage(e.to_string());
    let first = if name == SeqName::F { 1 } else { 0 };
    let last = first + count - 1;
    SequenceIndex::new(last).map_err(usage)?;
    match name {
        SeqName::HofstadterG => {
            for (n, v) in HTable::up_to(last).as_slice().iter().enumerate() {
                writeln!(out, "{n},{v}")?;
            }
        }
        SeqName::G => {
            let table = GTable::up_to(last).map_err(usage)?;
            for n in 0..=last {
                writeln!(out, "{n},{}", table.get(n).expect("within table"))?;
            }
        }
        _ => {
            for n in first..=last {
                let idx = SequenceIndex::new(n).map_err(usage)?;
                let v = match name {
                    SeqName::LowerWythoff => lower_wythoff(idx),
                    SeqName::UpperWythoff => upper_wythoff(idx),
                    SeqName::F => f(n).map_err(usage)?,
                    SeqName::B1 => b1(idx),
                    SeqName::B2 => b2(idx),
                    SeqName::HofstadterG | SeqName::G => unreachable!(),
                };
                writeln!(out, "{n},{v}")?;
            }
        }
    }
    Ok(())
}

/// A solved table ready for serialization.
#[derive(Debug)]
pub enum SolvedTable {
    Outcomes(Game, OutcomeTable),
    Grundy(Game, GrundyTable),
    SumOutcomes(SumOutcomeTable),
    SumGrundy(SumGrundyTable),
}

/// One serialized row: `z` is present only for the sum game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvRow {
    pub x: u32,
    pub y: u32,
    pub z: Option<u8>,
    pub value: String,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    game: Game,
    bound: u32,
    terminal_threshold: u32,
    convention: &'a str,
    kind: OutputKind,
    /// `x,y,value` or `x,y,z,value`.
    columns: &'a [&'a str],
    /// Row-major values: `values[y][x]`, or `values[y][x][z]` for the sum game.
    values: serde_json::Value,
}

impl SolvedTable {
    pub fn solve(game: Game, bound: u32, kind: OutputKind) -> Result<Self, CliError> {
        let r = game.ruleset();
        Ok(match (game, kind) {
            (Game::VariantPlusNim, OutputKind::Outcomes) => {
                SolvedTable::SumOutcomes(solve_sum_outcomes(bound)?)
            }
            (Game::VariantPlusNim, OutputKind::Grundy) => {
                SolvedTable::SumGrundy(solve_sum_grundy(r, bound)?)
            }
            (_, OutputKind::Outcomes) => SolvedTable::Outcomes(game, solve_outcomes(r, bound)?),
            (_, OutputKind::Grundy) => SolvedTable::Grundy(game, solve_grundy(r, bound)?),
        })
    }

    fn game(&self) -> Game {
        match self {
            SolvedTable::Outcomes(g, _) | SolvedTable::Grundy(g, _) => *g,
            SolvedTable::SumOutcomes(_) | SolvedTable::SumGrundy(_) => Game::VariantPlusNim,
        }
    }

    fn kind(&self) -> OutputKind {
        match self {
            SolvedTable::Outcomes(..) | SolvedTable::SumOutcomes(_) => OutputKind::Outcomes,
            SolvedTable::Grundy(..) | SolvedTable::SumGrundy(_) => OutputKind::Grundy,
        }
    }

    pub fn bound(&self) -> u32 {
        match self {
            SolvedTable::Outcomes(_, t) => t.bound(),
            SolvedTable::Grundy(_, t) => t.bound(),
            SolvedTable::SumOutcomes(t) => t.bound(),
            SolvedTable::SumGrundy(t) => t.bound(),
        }
    }

    fn is_sum(&self) -> bool {
        self.game() == Game::VariantPlusNim
    }

    fn value_at(&self, x: u32, y: u32, z: Option<u8>) -> String {
        let p = Position::new(x, y);
        let sp = |z: Option<u8>| SumPosition::new(x, y, z == Some(1));
        match self {
            SolvedTable::Outcomes(_, t) => t.outcome(p).to_string(),
            SolvedTable::Grundy(_, t) => t.value(p).to_string(),
            SolvedTable::SumOutcomes(t) => t.outcome(sp(z)).to_string(),
            SolvedTable::SumGrundy(t) => t.value(sp(z)).to_string(),
        }
    }

    /// Rows in output order: `y` outer, `x` inner, `z` innermost.
    pub fn rows(&self) -> impl Iterator<Item = CsvRow> + '_ {
        let zs: &[Option<u8>] = if self.is_sum() { &[Some(0), Some(1)] } else { &[None] };
        board_cells(self.bound()).flat_map(move |p| {
            zs.iter().map(move |&z| CsvRow { x: p.x, y: p.y, z, value: self.value_at(p.x, p.y, z) })
        })
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        if self.is_sum() {
            out.write_record(["x", "y", "z", "value"])?;
        } else {
            out.write_record(["x", "y", "value"])?;
        }
        for row in self.rows() {
            let (x, y) = (row.x.to_string(), row.y.to_string());
            match row.z {
                Some(z) => out.write_record([x, y, z.to_string(), row.value])?,
                None => out.write_record([x, y, row.value])?,
            }
        }
        out.flush()
    }

    pub fn write_json(&self, w: &mut dyn Write) -> io::Result<()> {
        use serde_json::Value;
        let cell = |v: String| match self.kind() {
            OutputKind::Grundy => Value::from(v.parse::<u64>().expect("decimal Grundy value")),
            OutputKind::Outcomes => Value::from(v),
        };
        let n = self.bound();
        let values: Value = (0..=n)
            .map(|y| {
                (0..=n)
                    .map(|x| {
                        if self.is_sum() {
                            Value::Array(vec![
                                cell(self.value_at(x, y, Some(0))),
                                cell(self.value_at(x, y, Some(1))),
                            ])
                        } else {
                            cell(self.value_at(x, y, None))
                        }
                    })
                    .collect::<Value>()
            })
            .collect();
        let r = self.game().ruleset();
        let doc = JsonTable {
            game: self.game(),
            bound: n,
            terminal_threshold: r.terminal_threshold,
            convention: match r.convention {
                crate::rules::Convention::Normal => "normal",
                crate::rules::Convention::Misere => "misere",
            },
            kind: self.kind(),
            columns: if self.is_sum() { &["x", "y", "z", "value"] } else { &["x", "y", "value"] },
            values,
        };
        serde_json::to_writer(&mut *w, &doc)?;
        w.write_all(b"\n")
    }
}

/// Parses the CSV written by [`SolvedTable::write_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| e.to_string())?;
    let with_z = match header.iter().collect::<Vec<_>>()[..] {
        ["x", "y", "value"] => false,
        ["x", "y", "z", "value"] => true,
        _ => return Err(format!("unexpected header {header:?}")),
    };
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let line = record.position().map_or(0, |p| p.line());
        let num = |i: usize| -> Result<u32, String> {
            record[i].parse().map_err(|e| format!("line {line}: {e}"))
        };
        rows.push(CsvRow {
            x: num(0)?,
            y: num(1)?,
            z: if with_z { Some(num(2)? as u8) } else { None },
            value: record[record.len() - 1].to_string(),
        });
    }
    Ok(rows)
}

fn cmd_verify(
    claim: &str,
    bound: u64,
    max_mismatches: usize,
    json: bool,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    let claims: Vec<Claim> = if claim == "all" {
        Claim::ALL.to_vec()
    } else {
        claim
            .split(',')
            .map(Claim::from_str)
            .collect::<Result<_, _>>()?
    };
    let reports = run_claims(&claims, bound)?;
    let mut out = BufWriter::new(stdout);
    if json {
        let mut capped = reports.clone();
        for r in &mut capped {
            r.mismatches.truncate(max_mismatches);
        }
        serde_json::to_writer_pretty(&mut out, &capped).map_err(io::Error::from)?;
        writeln!(out)?;
    } else {
        for r in &reports {
            writeln!(out, "{}", r.to_record(max_mismatches))?;
        }
    }
    out.flush()?;
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_MISMATCH })
}

/// Position sets that can be drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartSet {
    P0,
    P1,
    P2,
    A,
    B,
    C,
}

impl ChartSet {
    pub fn contains(self, p: Position) -> bool {
        match self {
            ChartSet::P0 => p0_contains(p),
            ChartSet::P1 => p1_contains(p),
            ChartSet::P2 => p2_contains(p),
            ChartSet::A => SET_A.contains(&p),
            ChartSet::B => SET_B.contains(&p),
            ChartSet::C => SET_C.contains(&p),
        }
    }
}

impl FromStr for ChartSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "p0" => ChartSet::P0,
            "p1" => ChartSet::P1,
            "p2" => ChartSet::P2,
            "a" => ChartSet::A,
            "b" => ChartSet::B,
            "c" => ChartSet::C,
            _ => return Err(format!("unknown set '{s}' (expected p0, p1, p2, a, b, c)")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub set: ChartSet,
    pub color: String,
}

impl FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (set, color) = s.split_once(':').ok_or_else(|| format!("expected SET:COLOR, got '{s}'"))?;
        let valid = !color.is_empty() && color.chars().all(|c| c.is_ascii_alphanumeric() || c == '#');
        if !valid {
            return Err(format!("invalid color '{color}'"));
        }
        Ok(Layer { set: set.parse()?, color: color.to_string() })
    }
}

/// What to draw. Later layers paint over earlier ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartSpec {
    pub bound: u32,
    pub layers: Vec<Layer>,
    pub cell_size: u32,
    /// Draw layers translucent so intersections blend.
    pub overlay: bool,
}

/// Charts larger than this are refused; an SVG of that many rects is already unwieldy.
const CHART_MAX_BOUND: u32 = 1024;

impl ChartSpec {
    pub fn new(bound: u32, layers: Vec<Layer>, cell_size: u32, overlay: bool) -> Result<Self, CliError> {
        if layers.is_empty() {
            return Err(CliError::Usage("at least one layer is required".into()));
        }
        if cell_size == 0 {
            return Err(CliError::Usage("cell size must be positive".into()));
        }
        if bound > CHART_MAX_BOUND {
            return Err(CliError::Usage(format!("chart bound {bound} exceeds {CHART_MAX_BOUND}")));
        }
        Ok(ChartSpec { bound, layers, cell_size, overlay })
    }

    /// SVG with `(0,0)` at the top left, `x` to the right and `y` downward.
    /// Cells terminal under the variant are shaded grey.
    pub fn render(&self) -> String {
        let side = (self.bound + 1) * self.cell_size;
        let c = self.cell_size;
        let mut svg = String::new();
        writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
        )
        .unwrap();
        writeln!(svg, r#"<rect x="0" y="0" width="{side}" height="{side}" fill="white"/>"#).unwrap();
        for p in board_cells(self.bound).filter(|&p| is_terminal(p, &Ruleset::VARIANT)) {
            writeln!(svg, r##"<rect x="{}" y="{}" width="{c}" height="{c}" fill="#d0d0d0"/>"##, p.x * c, p.y * c)
                .unwrap();
        }
        let opacity = if self.overlay { r#" fill-opacity="0.5""# } else { "" };
        for layer in &self.layers {
            for p in board_cells(self.bound).filter(|&p| layer.set.contains(p)) {
                writeln!(
                    svg,
                    r#"<rect x="{}" y="{}" width="{c}" height="{c}" fill="{}"{opacity}/>"#,
                    p.x * c,
                    p.y * c,
                    layer.color
                )
                .unwrap();
            }
        }
        // grid lines as thin rects
        for i in 0..=self.bound + 1 {
            let at = i * c;
            writeln!(svg, r##"<rect x="{at}" y="0" width="1" height="{side}" fill="#808080"/>"##).unwrap();
            writeln!(svg, r##"<rect x="0" y="{at}" width="{side}" height="1" fill="#808080"/>"##).unwrap();
        }
        svg.push_str("</svg>\n");
        svg
    }
}
