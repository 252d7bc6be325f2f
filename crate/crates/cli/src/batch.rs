use std::collections::HashSet;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;

use abchrome::solver::{solve, SolveReport, Value};
use abchrome::{parse_graph6, SearchBudget};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{BatchArgs, CliError, OutputFormat, EXIT_STRICT};

pub const CSV_HEADER: [&str; 10] = ["graph6", "n", "m", "girth", "A", "phi", "Ab", "status", "nodes", "millis"];

/// Lines solved between two flushes, per worker.
const CHUNK_PER_WORKER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordStatus {
    Ok,
    BudgetExhausted,
    InvalidInput,
}

impl RecordStatus {
    fn as_str(self) -> &'static str {
        match self {
            RecordStatus::Ok => "ok",
            RecordStatus::BudgetExhausted => "budget-exhausted",
            RecordStatus::InvalidInput => "invalid-input",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchRecord {
    pub line: usize,
    pub graph6: String,
    pub status: RecordStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<SolveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl BatchRecord {
    fn solve(line: usize, text: &str, targets: &[abchrome::solver::Target], budget: &SearchBudget, timing: bool) -> Self {
        let invalid = |error: String| BatchRecord {
            line,
            graph6: text.to_string(),
            status: RecordStatus::InvalidInput,
            report: None,
            error: Some(error),
        };
        let g = match parse_graph6(text) {
            Ok(g) => g,
            Err(e) => return invalid(e.to_string()),
        };
        match solve(&g, targets, budget) {
            Ok(mut report) => {
                if !timing {
                    report.millis = 0;
                }
                let status = if report.budget_exhausted() { RecordStatus::BudgetExhausted } else { RecordStatus::Ok };
                BatchRecord { line, graph6: text.to_string(), status, report: Some(report), error: None }
            }
            Err(e) => invalid(e.to_string()),
        }
    }

    /// The fixed CSV row. Undetermined values print as `lower..upper`.
    pub fn csv_row(&self) -> [String; 10] {
        let cell = |v: &Option<Value>| match v {
            None => String::new(),
            Some(v) => match v.value {
                Some(x) => x.to_string(),
                None => format!(
                    "{}..{}",
                    v.lower.map(|x| x.to_string()).unwrap_or_default(),
                    v.upper.map(|x| x.to_string()).unwrap_or_default()
                ),
            },
        };
        let status = self.status.as_str().to_string();
        match &self.report {
            Some(r) => [
                self.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.girth.to_string(),
                cell(&r.a),
                cell(&r.phi),
                cell(&r.ab),
                status,
                r.nodes.to_string(),
                r.millis.to_string(),
            ],
            None => {
                let mut row: [String; 10] = Default::default();
                row[0] = self.graph6.clone();
                row[7] = status;
                row
            }
        }
    }
}

/// graph6 strings already present in an earlier output.
fn done_set(path: &Path, format: OutputFormat) -> Result<HashSet<String>, CliError> {
    if !path.exists() {
        return Ok(HashSet::new());
    }
    let mut done = HashSet::new();
    match format {
        OutputFormat::Csv => {
            let mut rdr = csv::Reader::from_path(path)?;
            for rec in rdr.records() {
                if let Some(g6) = rec?.get(0) {
                    done.insert(g6.to_string());
                }
            }
        }
        OutputFormat::Json => {
            #[derive(Deserialize)]
            struct Key {
                graph6: String,
            }
            for line in fs::read_to_string(path)?.lines().filter(|l| !l.trim().is_empty()) {
                done.insert(serde_json::from_str::<Key>(line)?.graph6);
            }
        }
    }
    Ok(done)
}

enum Sink {
    Csv(Box<csv::Writer<File>>),
    Json(BufWriter<File>),
}

impl Sink {
    fn open(path: &Path, format: OutputFormat, append: bool) -> Result<Sink, CliError> {
        let file = if append { OpenOptions::new().append(true).open(path)? } else { File::create(path)? };
        Ok(match format {
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(file);
                if !append {
                    w.write_record(CSV_HEADER)?;
                }
                Sink::Csv(Box::new(w))
            }
            OutputFormat::Json => Sink::Json(BufWriter::new(file)),
        })
    }

    fn write(&mut self, r: &BatchRecord) -> Result<(), CliError> {
        match self {
            Sink::Csv(w) => w.write_record(r.csv_row())?,
            Sink::Json(w) => {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<(), CliError> {
        match self {
            Sink::Csv(w) => w.flush()?,
            Sink::Json(w) => w.flush()?,
        }
        Ok(())
    }
}

pub(crate) fn cmd_batch(args: BatchArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let text = fs::read_to_string(&args.input)?;
    let done = if args.skip_done { done_set(&args.output, args.format)? } else { HashSet::new() };
    let append = args.skip_done && args.output.exists();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let jobs: Vec<(usize, &str)> = lines.iter().copied().filter(|(_, l)| !done.contains(*l)).collect();
    let skipped = lines.len() - jobs.len();

    let workers = args.workers.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let budget = args.budget.budget();
    let timing = !args.budget.no_timing;
    let mut sink = Sink::open(&args.output, args.format, append)?;
    let (mut solved, mut exhausted, mut invalid) = (0, 0, 0);
    for chunk in jobs.chunks(CHUNK_PER_WORKER * pool.current_num_threads()) {
        let records: Vec<BatchRecord> = pool.install(|| {
            chunk.par_iter().map(|&(line, g6)| BatchRecord::solve(line, g6, &args.targets, &budget, timing)).collect()
        });
        for r in &records {
            sink.write(r)?;
            match r.status {
                RecordStatus::Ok => solved += 1,
                RecordStatus::BudgetExhausted => exhausted += 1,
                RecordStatus::InvalidInput => invalid += 1,
            }
        }
        sink.flush()?;
    }
    writeln!(
        out,
        "{} records: {solved} ok, {exhausted} budget-exhausted, {invalid} invalid-input, {skipped} skipped",
        jobs.len(),
    )?;
    Ok(if args.budget.strict && exhausted > 0 { EXIT_STRICT } else { 0 })
}
