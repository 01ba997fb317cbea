//! File formats and diff-stable printing.
//!
//! Three interchange formats are read and written canonically:
//!
//! * game JSON — `{ "alternatives": [...], "dominances": [[i, j], ...] }`
//!   with dominances sorted lexicographically;
//! * matrix pair — two CSV blocks of integers (`W`, then `R`) separated by
//!   one blank line;
//! * marginal JSON — `{ "alternatives": [...], "rounds": [[i, j, m], ...] }`
//!   where margin `m > 0` means `i` beat `j` by `m` and `m = 0` records a
//!   drawn round.
//!
//! Result payloads print potentials to 12 significant digits and winner
//! sets sorted by label, so outputs are stable under re-runs and diffs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{AbstractGame, FormGame, GameError};
use crate::hodge::{HodgeError, HodgeResult, MarginalGame};

#[derive(Debug, Error)]
pub enum ReadError {
    /// Structural/syntactic problems: bad JSON, bad CSV, bad numbers.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json error: {0}")]
    Json(String),
    /// The file parsed but encodes an invalid game.
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Hodge(HodgeError),
}

impl ReadError {
    /// True for syntax-level failures (as opposed to domain-invalid games).
    pub fn is_syntactic(&self) -> bool {
        matches!(self, ReadError::Parse { .. } | ReadError::Json(_))
    }
}

#[derive(Serialize, Deserialize)]
struct GameFile {
    alternatives: Vec<String>,
    dominances: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MarginalFile {
    alternatives: Vec<String>,
    rounds: Vec<(usize, usize, f64)>,
}

pub fn read_game_json(text: &str) -> Result<AbstractGame, ReadError> {
    let file: GameFile = serde_json::from_str(text).map_err(|e| ReadError::Json(e.to_string()))?;
    Ok(AbstractGame::new(file.alternatives, file.dominances)?)
}

/// Canonical game JSON: pretty-printed, dominances sorted, trailing newline.
pub fn write_game_json(game: &AbstractGame) -> String {
    let file = GameFile {
        alternatives: game.labels().to_vec(),
        dominances: game.dominances().collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

pub fn read_marginal_json(text: &str) -> Result<MarginalGame, ReadError> {
    let file: MarginalFile =
        serde_json::from_str(text).map_err(|e| ReadError::Json(e.to_string()))?;
    MarginalGame::from_rounds(file.alternatives, &file.rounds).map_err(ReadError::Hodge)
}

pub fn write_marginal_json(mg: &MarginalGame) -> String {
    let file = MarginalFile {
        alternatives: mg.labels().to_vec(),
        rounds: mg.to_rounds(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

/// Parses the two-block integer CSV format (`W`, blank line, `R`).
pub fn read_matrix_pair(text: &str) -> Result<FormGame, ReadError> {
    let mut blocks: Vec<Vec<(usize, Vec<i64>)>> = vec![Vec::new()];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        let mut row = Vec::new();
        for cell in line.split(',') {
            let cell = cell.trim();
            let v: i64 = cell.parse().map_err(|_| ReadError::Parse {
                line: idx + 1,
                msg: format!("invalid integer {cell:?}"),
            })?;
            row.push(v);
        }
        blocks.last_mut().unwrap().push((idx + 1, row));
    }
    if blocks.last().is_some_and(|b| b.is_empty()) {
        blocks.pop();
    }
    if blocks.len() != 2 {
        return Err(ReadError::Parse {
            line: text.lines().count(),
            msg: format!(
                "expected 2 matrix blocks separated by a blank line, found {}",
                blocks.len()
            ),
        });
    }
    let to_matrix = |block: &[(usize, Vec<i64>)]| -> Result<Vec<Vec<i64>>, ReadError> {
        let n = block.len();
        for (line, row) in block {
            if row.len() != n {
                return Err(ReadError::Parse {
                    line: *line,
                    msg: format!("row has {} entries, expected {n}", row.len()),
                });
            }
        }
        Ok(block.iter().map(|(_, row)| row.clone()).collect())
    };
    let w = to_matrix(&blocks[0])?;
    let r = to_matrix(&blocks[1])?;
    Ok(FormGame::from_matrices(&w, &r)?)
}

/// Two CSV blocks of integers, `W` then `R`, one blank line between.
pub fn write_matrix_pair(fg: &FormGame) -> String {
    let (w, r) = fg.to_matrices();
    let block = |m: &[Vec<i64>]| {
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    format!("{}\n\n{}\n", block(&w), block(&r))
}

/// Formats with `sig` significant digits, printf `%g`-style: positional
/// decimal inside a sane exponent range, scientific outside it, trailing
/// zeros trimmed. Output is a valid JSON number.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    assert!(sig >= 1 && v.is_finite());
    if v == 0.0 {
        return "0".to_string();
    }
    let exp_str = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp_part) = exp_str.split_once('e').expect("std e-format");
    let exp: i32 = exp_part.parse().expect("std exponent");
    let neg = mantissa.starts_with('-');
    let digits: Vec<u8> = mantissa.bytes().filter(|b| b.is_ascii_digit()).collect();
    let digits = String::from_utf8(digits).unwrap();

    let body = if exp < -4 || exp >= sig as i32 {
        let (first, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{first}e{exp}")
        } else {
            format!("{first}.{rest}e{exp}")
        }
    } else if exp >= 0 {
        let point = exp as usize + 1;
        if point >= digits.len() {
            format!("{}{}", digits, "0".repeat(point - digits.len()))
        } else {
            let (int_part, frac) = digits.split_at(point);
            let frac = frac.trim_end_matches('0');
            if frac.is_empty() {
                int_part.to_string()
            } else {
                format!("{int_part}.{frac}")
            }
        }
    } else {
        let zeros = (-exp - 1) as usize;
        let frac = format!("{}{}", "0".repeat(zeros), digits);
        format!("0.{}", frac.trim_end_matches('0'))
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Default precision for printed potentials and tenseness values.
pub const PRINT_SIG_DIGITS: usize = 12;

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn labels_sorted(labels: &[String], indices: &[usize]) -> Vec<String> {
    let mut out: Vec<String> = indices.iter().map(|&i| labels[i].clone()).collect();
    out.sort();
    out
}

fn dense_form_json(m: &[Vec<f64>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|&v| fmt_sig(v, PRINT_SIG_DIGITS)).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    format!("[\n{}\n  ]", rows.join(",\n"))
}

/// The result payload for `solve`/`decompose`/`ehpc`: potential to 12
/// significant digits, winner sets sorted by label, Copeland data always
/// included. `result = None` prints the Copeland-only payload.
/// `include_forms` appends the dense gradient and harmonic matrices.
pub fn result_json(
    labels: &[String],
    copeland: &[i64],
    copeland_winners: &[usize],
    result: Option<&HodgeResult>,
    include_forms: bool,
) -> String {
    let mut fields: Vec<String> = Vec::new();
    if let Some(res) = result {
        let potential: Vec<String> = res
            .potential
            .values
            .iter()
            .map(|&v| fmt_sig(v, PRINT_SIG_DIGITS))
            .collect();
        fields.push(format!("  \"potential\": [{}]", potential.join(", ")));
        let winners: Vec<String> = labels_sorted(labels, &res.winners)
            .iter()
            .map(|l| json_str(l))
            .collect();
        fields.push(format!("  \"winners\": [{}]", winners.join(", ")));
        fields.push(format!(
            "  \"tenseness\": {}",
            fmt_sig(res.tenseness, PRINT_SIG_DIGITS)
        ));
    }
    let cs: Vec<String> = copeland.iter().map(|v| v.to_string()).collect();
    fields.push(format!("  \"copeland\": [{}]", cs.join(", ")));
    let cw: Vec<String> = labels_sorted(labels, copeland_winners)
        .iter()
        .map(|l| json_str(l))
        .collect();
    fields.push(format!("  \"copeland_winners\": [{}]", cw.join(", ")));
    if include_forms {
        if let Some(res) = result {
            fields.push(format!(
                "  \"gradient\": {}",
                dense_form_json(&res.gradient.to_dense())
            ));
            fields.push(format!(
                "  \"harmonic\": {}",
                dense_form_json(&res.harmonic.to_dense())
            ));
        }
    }
    format!("{{\n{}\n}}\n", fields.join(",\n"))
}

/// Parses a `key=value` config file: one pair per line, `#` comments and
/// blank lines ignored.
pub fn parse_kv(text: &str) -> Result<Vec<(String, String)>, ReadError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| ReadError::Parse {
            line: idx + 1,
            msg: format!("expected key=value, got {line:?}"),
        })?;
        out.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(out)
}
