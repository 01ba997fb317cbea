//! Grid comparison harness: Hodge potential winners vs Copeland winners
//! over a sweep of game sizes and completeness levels.
//!
//! Every `(n, eta)` cell draws `samples` independent irregular connected
//! games, classifies the relation between the two winner sets per game, and
//! reduces to per-cell statistics. Task seeds derive from the cell
//! coordinates (`sub_seed(seed, [n, eta.to_bits(), replicate])`), and
//! results are reduced in replicate order, so output is byte-identical
//! across runs and worker counts. Per-solve wall time is the single
//! non-reproducible column; disable it with [`RunOptions::timing`] when
//! byte-stable CSV matters.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::AbstractGame;
use crate::gen::{random_game, sub_seed, GenConfig};
use crate::hodge::{copeland_choice, hpc_with};
use crate::io::fmt_sig;
use crate::solver::SolveOptions;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("empty grid: {0}")]
    EmptyGrid(String),
    #[error("winner sets must be nonempty")]
    EmptySet,
    #[error("audit i/o failed: {0}")]
    Io(String),
}

/// How a Hodge potential winner set relates to the Copeland winner set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// Strict superset: the potential choice is coarser.
    T,
    /// Equal sets.
    E,
    /// Strict subset: the potential choice refines Copeland.
    R,
    /// Incomparable sets.
    X,
}

/// Classifies two sorted, nonempty winner index sets.
pub fn classify(cp: &[usize], hp: &[usize]) -> Result<Relation, ExperimentError> {
    if cp.is_empty() || hp.is_empty() {
        return Err(ExperimentError::EmptySet);
    }
    let sub = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    let hp_in_cp = sub(hp, cp);
    let cp_in_hp = sub(cp, hp);
    Ok(match (cp_in_hp, hp_in_cp) {
        (true, true) => Relation::E,
        (true, false) => Relation::T,
        (false, true) => Relation::R,
        (false, false) => Relation::X,
    })
}

fn default_samples() -> usize {
    200
}

fn default_p_mutual() -> f64 {
    0.2
}

/// Grid description, deserializable from `grid.json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridSpec {
    pub n: Vec<usize>,
    pub eta: Vec<f64>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_p_mutual")]
    pub p_mutual: f64,
}

/// Runner knobs that do not affect the drawn games.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Measure per-solve wall time. Off, the timing column prints 0 and the
    /// CSV is byte-stable.
    pub timing: bool,
    /// Spool every game and its winner sets to one JSONL file per cell.
    pub audit_dir: Option<PathBuf>,
    pub solver: SolveOptions,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            timing: true,
            audit_dir: None,
            solver: SolveOptions::default(),
        }
    }
}

/// Reduced statistics for one `(n, eta)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellStats {
    pub n: usize,
    pub eta: f64,
    pub samples: usize,
    pub f_t: f64,
    pub f_e: f64,
    pub f_r: f64,
    pub f_x: f64,
    pub mean_card_hpc: f64,
    pub mean_card_cp: f64,
    pub mean_tenseness: f64,
    pub mean_solve_ms: f64,
    pub failed: usize,
}

/// One spooled game with everything needed to replay it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditRecord {
    pub n: usize,
    pub eta: f64,
    pub replicate: usize,
    pub seed: u64,
    pub alternatives: Vec<String>,
    pub dominances: Vec<(usize, usize)>,
    pub copeland_winners: Vec<usize>,
    pub hpc_winners: Vec<usize>,
    pub relation: Relation,
    pub tenseness: f64,
}

/// Re-solves a spooled game and checks that both winner sets reproduce.
pub fn replay_record(rec: &AuditRecord) -> Result<bool, String> {
    let game = AbstractGame::new(rec.alternatives.clone(), rec.dominances.iter().copied())
        .map_err(|e| e.to_string())?;
    let fg = game.to_form();
    let cp = copeland_choice(&fg);
    let hp = hpc_with(&fg, &SolveOptions::default())
        .map_err(|e| e.to_string())?
        .winners;
    Ok(cp == rec.copeland_winners && hp == rec.hpc_winners)
}

struct GameRun {
    game: AbstractGame,
    seed: u64,
    cp: Vec<usize>,
    hp: Vec<usize>,
    relation: Relation,
    tenseness: f64,
    solve_ms: f64,
}

fn run_one(
    n: usize,
    eta: f64,
    p_mutual: f64,
    base_seed: u64,
    replicate: usize,
    opts: &RunOptions,
) -> Result<GameRun, String> {
    let seed = sub_seed(base_seed, &[n as u64, eta.to_bits(), replicate as u64]);
    let cfg = GenConfig {
        n,
        eta_target: eta,
        p_mutual,
        seed,
        require_irregular: true,
        max_retries: 100,
    };
    let fg = random_game(&cfg).map_err(|e| e.to_string())?;
    let cp = copeland_choice(&fg);
    let started = opts.timing.then(Instant::now);
    let res = hpc_with(&fg, &opts.solver).map_err(|e| e.to_string())?;
    let solve_ms = started.map_or(0.0, |t| t.elapsed().as_secs_f64() * 1e3);
    let relation = classify(&cp, &res.winners).map_err(|e| e.to_string())?;
    Ok(GameRun {
        game: fg.to_abstract(),
        seed,
        cp,
        hp: res.winners,
        relation,
        tenseness: res.tenseness,
        solve_ms,
    })
}

/// Runs every cell of the grid and reduces to per-cell statistics.
///
/// Games run in parallel; per-game generation or solver failures are
/// counted in the cell's `failed` column instead of aborting the sweep.
pub fn run_grid(grid: &GridSpec, opts: &RunOptions) -> Result<Vec<CellStats>, ExperimentError> {
    if grid.n.is_empty() || grid.eta.is_empty() {
        return Err(ExperimentError::EmptyGrid(
            "need at least one n and one eta".into(),
        ));
    }
    if grid.samples == 0 {
        return Err(ExperimentError::EmptyGrid("need samples >= 1".into()));
    }
    if let Some(dir) = &opts.audit_dir {
        fs::create_dir_all(dir).map_err(|e| ExperimentError::Io(e.to_string()))?;
    }

    let mut cells = Vec::with_capacity(grid.n.len() * grid.eta.len());
    for &n in &grid.n {
        for &eta in &grid.eta {
            let runs: Vec<Result<GameRun, String>> = (0..grid.samples)
                .into_par_iter()
                .map(|rep| run_one(n, eta, grid.p_mutual, grid.seed, rep, opts))
                .collect();

            if let Some(dir) = &opts.audit_dir {
                spool_cell(dir, n, eta, &runs)?;
            }

            let mut counts = [0usize; 4];
            let mut card_hpc = 0.0;
            let mut card_cp = 0.0;
            let mut ts_sum = 0.0;
            let mut ms_sum = 0.0;
            let mut failed = 0usize;
            for run in &runs {
                match run {
                    Err(_) => failed += 1,
                    Ok(r) => {
                        let slot = match r.relation {
                            Relation::T => 0,
                            Relation::E => 1,
                            Relation::R => 2,
                            Relation::X => 3,
                        };
                        counts[slot] += 1;
                        card_hpc += r.hp.len() as f64;
                        card_cp += r.cp.len() as f64;
                        ts_sum += r.tenseness;
                        ms_sum += r.solve_ms;
                    }
                }
            }
            let ok = grid.samples - failed;
            let freq = |c: usize| if ok == 0 { 0.0 } else { c as f64 / ok as f64 };
            let mean = |s: f64| if ok == 0 { 0.0 } else { s / ok as f64 };
            cells.push(CellStats {
                n,
                eta,
                samples: grid.samples,
                f_t: freq(counts[0]),
                f_e: freq(counts[1]),
                f_r: freq(counts[2]),
                f_x: freq(counts[3]),
                mean_card_hpc: mean(card_hpc),
                mean_card_cp: mean(card_cp),
                mean_tenseness: mean(ts_sum),
                mean_solve_ms: mean(ms_sum),
                failed,
            });
        }
    }
    Ok(cells)
}

fn spool_cell(
    dir: &Path,
    n: usize,
    eta: f64,
    runs: &[Result<GameRun, String>],
) -> Result<(), ExperimentError> {
    let path = dir.join(format!("audit_n{}_eta{}.jsonl", n, fmt_sig(eta, 12)));
    let mut file = fs::File::create(&path).map_err(|e| ExperimentError::Io(e.to_string()))?;
    for (rep, run) in runs.iter().enumerate() {
        if let Ok(r) = run {
            let record = AuditRecord {
                n,
                eta,
                replicate: rep,
                seed: r.seed,
                alternatives: r.game.labels().to_vec(),
                dominances: r.game.dominances().collect(),
                copeland_winners: r.cp.clone(),
                hpc_winners: r.hp.clone(),
                relation: r.relation,
                tenseness: r.tenseness,
            };
            let line = serde_json::to_string(&record).expect("serializable record");
            writeln!(file, "{line}").map_err(|e| ExperimentError::Io(e.to_string()))?;
        }
    }
    Ok(())
}

/// The per-cell CSV table. Column order is fixed; floats print with six
/// decimals, so byte equality across runs holds whenever timing is off.
pub fn summarize_csv(cells: &[CellStats]) -> String {
    let mut out = String::from(
        "n,eta,samples,f_t,f_e,f_r,f_x,mean_card_hpc,mean_card_cp,mean_tenseness,mean_solve_ms,failed\n",
    );
    for c in cells {
        out.push_str(&format!(
            "{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{}\n",
            c.n,
            c.eta,
            c.samples,
            c.f_t,
            c.f_e,
            c.f_r,
            c.f_x,
            c.mean_card_hpc,
            c.mean_card_cp,
            c.mean_tenseness,
            c.mean_solve_ms,
            c.failed,
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct NPoint {
    pub n: usize,
    pub f_t: f64,
    pub f_e: f64,
    pub f_r: f64,
    pub f_x: f64,
    pub mean_card_hpc: f64,
    pub mean_card_cp: f64,
    pub mean_tenseness: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EtaPoint {
    pub eta: f64,
    pub f_t: f64,
    pub f_e: f64,
    pub f_r: f64,
    pub f_x: f64,
    pub mean_card_hpc: f64,
    pub mean_card_cp: f64,
    pub mean_tenseness: f64,
}

/// Conditional averages along each axis (cells averaged over the other
/// axis), the data behind the two-panel frequency/cardinality plots.
#[derive(Debug, Clone, Serialize)]
pub struct PlotData {
    pub along_n: Vec<NPoint>,
    pub along_eta: Vec<EtaPoint>,
}

pub fn plot_data(cells: &[CellStats]) -> PlotData {
    let mut ns: Vec<usize> = cells.iter().map(|c| c.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let mut etas: Vec<f64> = cells.iter().map(|c| c.eta).collect();
    etas.sort_by(f64::total_cmp);
    etas.dedup();

    let avg = |selected: Vec<&CellStats>| -> [f64; 7] {
        let k = selected.len().max(1) as f64;
        let mut acc = [0.0; 7];
        for c in selected {
            acc[0] += c.f_t;
            acc[1] += c.f_e;
            acc[2] += c.f_r;
            acc[3] += c.f_x;
            acc[4] += c.mean_card_hpc;
            acc[5] += c.mean_card_cp;
            acc[6] += c.mean_tenseness;
        }
        acc.map(|v| v / k)
    };

    let along_n = ns
        .iter()
        .map(|&n| {
            let a = avg(cells.iter().filter(|c| c.n == n).collect());
            NPoint {
                n,
                f_t: a[0],
                f_e: a[1],
                f_r: a[2],
                f_x: a[3],
                mean_card_hpc: a[4],
                mean_card_cp: a[5],
                mean_tenseness: a[6],
            }
        })
        .collect();
    let along_eta = etas
        .iter()
        .map(|&eta| {
            let a = avg(cells.iter().filter(|c| c.eta == eta).collect());
            EtaPoint {
                eta,
                f_t: a[0],
                f_e: a[1],
                f_r: a[2],
                f_x: a[3],
                mean_card_hpc: a[4],
                mean_card_cp: a[5],
                mean_tenseness: a[6],
            }
        })
        .collect();
    PlotData { along_n, along_eta }
}

pub fn plot_data_json(data: &PlotData) -> String {
    let mut s = serde_json::to_string_pretty(data).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_relations() {
        assert_eq!(classify(&[0, 4], &[0]).unwrap(), Relation::R);
        assert_eq!(classify(&[0, 4], &[0, 4]).unwrap(), Relation::E);
        assert_eq!(classify(&[0], &[1]).unwrap(), Relation::X);
        assert_eq!(classify(&[0], &[0, 1]).unwrap(), Relation::T);
        assert_eq!(classify(&[0, 2], &[1, 2]).unwrap(), Relation::X);
        assert!(matches!(
            classify(&[], &[0]),
            Err(ExperimentError::EmptySet)
        ));
    }

    #[test]
    fn complete_cells_are_all_equal() {
        let grid = GridSpec {
            n: vec![10],
            eta: vec![1.0],
            samples: 50,
            seed: 9,
            p_mutual: 0.2,
        };
        let cells = run_grid(&grid, &RunOptions::default()).unwrap();
        assert_eq!(cells.len(), 1);
        let c = &cells[0];
        assert_eq!(c.failed, 0);
        assert_eq!(c.f_e, 1.0);
        assert_eq!(c.f_t + c.f_r + c.f_x, 0.0);
        assert_eq!(c.mean_card_hpc, c.mean_card_cp);
    }

    #[test]
    fn frequencies_sum_to_one() {
        let grid = GridSpec {
            n: vec![8, 12],
            eta: vec![0.4, 0.7],
            samples: 40,
            seed: 3,
            p_mutual: 0.2,
        };
        let cells = run_grid(&grid, &RunOptions::default()).unwrap();
        assert_eq!(cells.len(), 4);
        for c in &cells {
            assert_eq!(c.failed, 0);
            assert!((c.f_t + c.f_e + c.f_r + c.f_x - 1.0).abs() < 1e-12);
            assert!(c.mean_card_hpc >= 1.0 && c.mean_card_cp >= 1.0);
        }
    }

    #[test]
    fn csv_deterministic_without_timing() {
        let grid = GridSpec {
            n: vec![6, 10],
            eta: vec![0.3, 0.6],
            samples: 25,
            seed: 42,
            p_mutual: 0.2,
        };
        let opts = RunOptions {
            timing: false,
            ..RunOptions::default()
        };
        let a = summarize_csv(&run_grid(&grid, &opts).unwrap());
        let b = summarize_csv(&run_grid(&grid, &opts).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with("n,eta,samples,"));
        assert_eq!(a.lines().count(), 5);
    }

    #[test]
    fn plot_data_shapes() {
        let grid = GridSpec {
            n: vec![6],
            eta: vec![0.4, 0.8],
            samples: 10,
            seed: 1,
            p_mutual: 0.2,
        };
        let cells = run_grid(&grid, &RunOptions::default()).unwrap();
        let data = plot_data(&cells);
        assert_eq!(data.along_n.len(), 1);
        assert_eq!(data.along_eta.len(), 2);
        // single-n averages along eta reproduce the cells
        assert!((data.along_eta[0].f_e - cells[0].f_e).abs() < 1e-15);
        let json = plot_data_json(&data);
        assert!(json.contains("\"along_n\"") && json.contains("\"along_eta\""));
    }

    #[test]
    fn audit_records_replay() {
        let dir = tempfile::tempdir().unwrap();
        let grid = GridSpec {
            n: vec![7],
            eta: vec![0.5],
            samples: 12,
            seed: 77,
            p_mutual: 0.2,
        };
        let opts = RunOptions {
            audit_dir: Some(dir.path().to_path_buf()),
            ..RunOptions::default()
        };
        run_grid(&grid, &opts).unwrap();
        let path = dir.path().join("audit_n7_eta0.5.jsonl");
        let text = std::fs::read_to_string(path).unwrap();
        let mut count = 0;
        for line in text.lines() {
            let rec: AuditRecord = serde_json::from_str(line).unwrap();
            assert!(replay_record(&rec).unwrap(), "replay diverged: {line}");
            count += 1;
        }
        assert_eq!(count, 12);
    }

    #[test]
    fn empty_grid_rejected() {
        let grid = GridSpec {
            n: vec![],
            eta: vec![0.5],
            samples: 5,
            seed: 0,
            p_mutual: 0.2,
        };
        assert!(matches!(
            run_grid(&grid, &RunOptions::default()),
            Err(ExperimentError::EmptyGrid(_))
        ));
        let grid = GridSpec {
            n: vec![5],
            eta: vec![0.5],
            samples: 0,
            seed: 0,
            p_mutual: 0.2,
        };
        assert!(run_grid(&grid, &RunOptions::default()).is_err());
    }

    #[test]
    fn failures_counted_not_fatal() {
        // eta too small to connect 12 vertices: every draw fails validation
        let grid = GridSpec {
            n: vec![12],
            eta: vec![0.05],
            samples: 8,
            seed: 5,
            p_mutual: 0.2,
        };
        let cells = run_grid(&grid, &RunOptions::default()).unwrap();
        assert_eq!(cells[0].failed, 8);
        assert_eq!(cells[0].f_e, 0.0);
    }
}
