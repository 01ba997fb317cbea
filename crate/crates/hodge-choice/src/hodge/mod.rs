//! Discrete differential forms on a base space, the graph Laplacian, and the
//! decomposition-based solution concepts.
//!
//! On a base space `W` a 0-form is a real score vector over alternatives and
//! a 1-form is a skew function on arranged edges. The differential `d` sends
//! scores to edge differences, its adjoint `δ` (divergence) sends edge data
//! back to vertices, and `δ∘d` is realized by the graph Laplacian `L = D - W`.
//! Every 1-form on a connected base splits uniquely as `φ = dP + H` with
//! `δH = 0`; the potential `P` solves `L·P = δφ` and is canonicalized here to
//! mean zero.

mod marginal;

pub use marginal::{ehpc, ehpc_with, MarginalGame};

use std::sync::Arc;

use thiserror::Error;

use crate::game::{BaseSpace, FormGame};
use crate::solver::{self, SolveError, SolveOptions};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HodgeError {
    #[error("disconnected base space ({components} components)")]
    Disconnected { components: usize },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("forms live on different base spaces")]
    BaseMismatch,
    #[error("negative margin {value} on round ({i},{j})")]
    NegativeMargin { i: usize, j: usize, value: f64 },
    #[error("margin support violation at ({i},{j}): {reason}")]
    SupportViolation { i: usize, j: usize, reason: String },
    #[error("invalid 1-form: {0}")]
    InvalidForm(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// A real score vector over alternatives.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroForm {
    pub values: Vec<f64>,
}

impl ZeroForm {
    pub fn zeros(n: usize) -> Self {
        ZeroForm {
            values: vec![0.0; n],
        }
    }

    pub fn from_vec(values: Vec<f64>) -> Self {
        ZeroForm { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        if self.values.is_empty() {
            0.0
        } else {
            self.values.iter().sum::<f64>() / self.values.len() as f64
        }
    }

    /// Subtracts the mean from every entry.
    pub fn mean_center(&mut self) {
        let m = self.mean();
        for v in &mut self.values {
            *v -= m;
        }
    }

    pub fn inf_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }
}

/// A skew-symmetric real function on the edges of a base space.
///
/// One value is stored per edge index `e` for the oriented pair `(i, j)`
/// with `i < j`; reading the opposite orientation negates. Off-edge values
/// are exact zeros and never enter inner products.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    base: Arc<BaseSpace>,
    values: Vec<f64>,
}

impl OneForm {
    pub fn zeros(base: Arc<BaseSpace>) -> Self {
        let values = vec![0.0; base.edge_count()];
        OneForm { base, values }
    }

    /// Wraps per-edge values given in edge-index order.
    pub fn from_edge_values(base: Arc<BaseSpace>, values: Vec<f64>) -> Result<Self, HodgeError> {
        if values.len() != base.edge_count() {
            return Err(HodgeError::SizeMismatch {
                expected: base.edge_count(),
                got: values.len(),
            });
        }
        Ok(OneForm { base, values })
    }

    /// Builds a 1-form from a dense matrix, requiring exact skew-symmetry
    /// and support on the base's edges.
    pub fn from_dense(base: Arc<BaseSpace>, m: &[Vec<f64>]) -> Result<Self, HodgeError> {
        let n = base.n();
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(HodgeError::SizeMismatch {
                expected: n,
                got: m.len(),
            });
        }
        for i in 0..n {
            for j in i..n {
                if m[i][j] != -m[j][i] {
                    return Err(HodgeError::InvalidForm(format!(
                        "not skew-symmetric at ({i},{j})"
                    )));
                }
                if i != j && m[i][j] != 0.0 && !base.has_edge(i, j) {
                    return Err(HodgeError::InvalidForm(format!(
                        "value off the base space at ({i},{j})"
                    )));
                }
            }
        }
        let values = base.edges().iter().map(|&(i, j)| m[i][j]).collect();
        Ok(OneForm { base, values })
    }

    pub fn base(&self) -> &Arc<BaseSpace> {
        &self.base
    }

    /// Values in edge-index order (orientation `(i, j)`, `i < j`).
    pub fn edge_values(&self) -> &[f64] {
        &self.values
    }

    /// `φ(i, j)`; zero off the arranged edges.
    pub fn value(&self, i: usize, j: usize) -> f64 {
        match self.base.edge_index(i, j) {
            None => 0.0,
            Some(e) => {
                if i < j {
                    self.values[e]
                } else {
                    -self.values[e]
                }
            }
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.base.n();
        let mut m = vec![vec![0.0; n]; n];
        for (e, &(i, j)) in self.base.edges().iter().enumerate() {
            m[i][j] = self.values[e];
            m[j][i] = -self.values[e];
        }
        m
    }

    /// Entrywise difference on a shared base.
    pub fn sub(&self, other: &OneForm) -> Result<OneForm, HodgeError> {
        self.check_same_base(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(OneForm {
            base: self.base.clone(),
            values,
        })
    }

    pub fn scale(&self, k: f64) -> OneForm {
        OneForm {
            base: self.base.clone(),
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }

    pub fn inf_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    fn check_same_base(&self, other: &OneForm) -> Result<(), HodgeError> {
        if Arc::ptr_eq(&self.base, &other.base) || self.base == other.base {
            Ok(())
        } else {
            Err(HodgeError::BaseMismatch)
        }
    }
}

/// The dominance-difference form of a game as a real 1-form.
pub fn dominance_form(fg: &FormGame) -> OneForm {
    OneForm {
        base: fg.base().clone(),
        values: fg.diff_values().iter().map(|&v| v as f64).collect(),
    }
}

/// Differential: `(dψ)(i, j) = ψ(j) - ψ(i)` on arranged edges.
pub fn differential(psi: &ZeroForm, base: &Arc<BaseSpace>) -> Result<OneForm, HodgeError> {
    if psi.len() != base.n() {
        return Err(HodgeError::SizeMismatch {
            expected: base.n(),
            got: psi.len(),
        });
    }
    let values = base
        .edges()
        .iter()
        .map(|&(i, j)| psi.values[j] - psi.values[i])
        .collect();
    Ok(OneForm {
        base: base.clone(),
        values,
    })
}

/// Divergence: `(δφ)(i) = Σ_k φ(k, i)` over arranged edges, i.e. the
/// negative row sums of the dense form.
pub fn divergence(phi: &OneForm) -> ZeroForm {
    let mut out = vec![0.0; phi.base.n()];
    for (e, &(i, j)) in phi.base.edges().iter().enumerate() {
        let v = phi.values[e];
        out[i] -= v;
        out[j] += v;
    }
    ZeroForm { values: out }
}

/// Euclidean inner product of 0-forms.
pub fn inner0(a: &ZeroForm, b: &ZeroForm) -> Result<f64, HodgeError> {
    if a.len() != b.len() {
        return Err(HodgeError::SizeMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum())
}

/// Euclidean inner product of 1-forms: each arranged edge counted once.
pub fn inner1(f: &OneForm, g: &OneForm) -> Result<f64, HodgeError> {
    f.check_same_base(g)?;
    Ok(f.values.iter().zip(&g.values).map(|(x, y)| x * y).sum())
}

/// `⟨φ, dψ⟩ - ⟨δφ, ψ⟩`; identically zero in exact arithmetic, exposed as a
/// test utility for the adjointness of `d` and `δ`.
pub fn adjointness_defect(phi: &OneForm, psi: &ZeroForm) -> Result<f64, HodgeError> {
    let dpsi = differential(psi, &phi.base)?;
    Ok(inner1(phi, &dpsi)? - inner0(&divergence(phi), psi)?)
}

/// Graph Laplacian `L = D - W` as a dense matrix.
pub fn laplacian_dense(base: &BaseSpace) -> Vec<Vec<f64>> {
    let n = base.n();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        l[i][i] = base.degree(i) as f64;
        for &(j, _) in base.neighbors(i) {
            l[i][j] = -1.0;
        }
    }
    l
}

/// Copeland scores: dominated-count minus dominating-count per alternative.
/// Equals the divergence of the dominance-difference form.
pub fn copeland_scores_int(fg: &FormGame) -> Vec<i64> {
    let mut cs = vec![0i64; fg.n()];
    for (e, &(i, j)) in fg.base().edges().iter().enumerate() {
        let v = fg.diff_values()[e] as i64;
        cs[i] -= v;
        cs[j] += v;
    }
    cs
}

pub fn copeland_scores(fg: &FormGame) -> ZeroForm {
    ZeroForm::from_vec(
        copeland_scores_int(fg)
            .into_iter()
            .map(|v| v as f64)
            .collect(),
    )
}

/// The Copeland winner set: exact argmax of the integer scores, sorted.
pub fn copeland_choice(fg: &FormGame) -> Vec<usize> {
    let cs = copeland_scores_int(fg);
    let max = *cs.iter().max().expect("nonempty game");
    cs.iter()
        .enumerate()
        .filter(|(_, &v)| v == max)
        .map(|(i, _)| i)
        .collect()
}

/// Relative slack under which potential entries tie for the argmax.
pub const TIE_EPS: f64 = 1e-9;

/// Argmax of a potential under the tie tolerance
/// `ε = TIE_EPS · max(1, |P|_∞)`, returned sorted.
pub fn argmax_winners(potential: &ZeroForm) -> Vec<usize> {
    let max = potential
        .values
        .iter()
        .fold(f64::NEG_INFINITY, |acc, &v| acc.max(v));
    let eps = TIE_EPS * potential.inf_norm().max(1.0);
    potential
        .values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= max - eps)
        .map(|(i, _)| i)
        .collect()
}

/// Result of decomposing a 1-form on a connected base.
///
/// `potential` is the mean-zero representative of the potential family,
/// `gradient` its differential, `harmonic` the divergence-free remainder,
/// and `winners` the argmax of the potential under the tie tolerance.
#[derive(Debug, Clone)]
pub struct HodgeResult {
    pub potential: ZeroForm,
    pub gradient: OneForm,
    pub harmonic: OneForm,
    pub tenseness: f64,
    pub winners: Vec<usize>,
}

/// Threshold below which a divergence is treated as identically zero.
const ZERO_DIVERGENCE_EPS: f64 = 1e-12;

/// Splits `φ = dP + H` on a connected base with default solver options.
pub fn hodge_decompose(phi: &OneForm) -> Result<HodgeResult, HodgeError> {
    hodge_decompose_with(phi, &SolveOptions::default())
}

/// Splits `φ = dP + H` on a connected base.
///
/// The potential is unique up to an additive constant; the mean-zero
/// representative is returned. When `δφ = 0` the form is already harmonic:
/// the potential is zero, every alternative wins, and the tenseness is 1.
pub fn hodge_decompose_with(phi: &OneForm, opts: &SolveOptions) -> Result<HodgeResult, HodgeError> {
    let base = &phi.base;
    let parts = base.components().len();
    if parts > 1 {
        return Err(HodgeError::Disconnected { components: parts });
    }
    let b = divergence(phi);
    if b.inf_norm() <= ZERO_DIVERGENCE_EPS {
        let n = base.n();
        return Ok(HodgeResult {
            potential: ZeroForm::zeros(n),
            gradient: OneForm::zeros(base.clone()),
            harmonic: phi.clone(),
            tenseness: 1.0,
            winners: (0..n).collect(),
        });
    }
    let report = solver::solve_laplacian(base, &b.values, opts)?;
    let potential = report.solution;
    let gradient = differential(&potential, base)?;
    let harmonic = phi.sub(&gradient)?;
    let energy = inner1(phi, phi)?;
    let tenseness = (inner1(&harmonic, &harmonic)? / energy).clamp(0.0, 1.0);
    let winners = argmax_winners(&potential);
    Ok(HodgeResult {
        potential,
        gradient,
        harmonic,
        tenseness,
        winners,
    })
}

/// Hodge potential choice for a connected game with default solver options.
pub fn hpc(fg: &FormGame) -> Result<HodgeResult, HodgeError> {
    hpc_with(fg, &SolveOptions::default())
}

/// Hodge potential choice: decompose the dominance-difference form and take
/// the argmax of the potential.
///
/// Constant Copeland scores (a regular game) short-circuit: the scores are
/// then all zero, the form is harmonic, and every alternative wins.
pub fn hpc_with(fg: &FormGame, opts: &SolveOptions) -> Result<HodgeResult, HodgeError> {
    let parts = fg.base().components().len();
    if parts > 1 {
        return Err(HodgeError::Disconnected { components: parts });
    }
    let cs = copeland_scores_int(fg);
    let regular = cs.iter().min() == cs.iter().max();
    let phi = dominance_form(fg);
    if regular {
        let n = fg.n();
        return Ok(HodgeResult {
            potential: ZeroForm::zeros(n),
            gradient: OneForm::zeros(fg.base().clone()),
            harmonic: phi,
            tenseness: 1.0,
            winners: (0..n).collect(),
        });
    }
    hodge_decompose_with(&phi, opts)
}

/// Harmonic energy fraction `⟨H, H⟩ / ⟨R, R⟩` of a connected game.
/// A regular game (including the all-mutual case `⟨R, R⟩ = 0`) has
/// tenseness 1.
pub fn tenseness(fg: &FormGame) -> Result<f64, HodgeError> {
    Ok(hpc(fg)?.tenseness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::AbstractGame;

    fn x5_form() -> FormGame {
        fixtures::x5().to_form()
    }

    #[test]
    fn copeland_scores_known_values() {
        assert_eq!(copeland_scores_int(&x5_form()), vec![2, -2, 0, -2, 2]);
        assert_eq!(copeland_choice(&x5_form()), vec![0, 4]);

        // mutual-removal variant keeps the same scores
        let removed = fixtures::x5_mutual_removed().to_form();
        assert_eq!(copeland_scores_int(&removed), vec![2, -2, 0, -2, 2]);

        // all-mutual game: zero scores, everyone wins
        let sym = AbstractGame::with_default_labels(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
            .unwrap()
            .to_form();
        assert_eq!(copeland_scores_int(&sym), vec![0, 0, 0]);
        assert_eq!(copeland_choice(&sym), vec![0, 1, 2]);

        let single = AbstractGame::with_default_labels(1, []).unwrap().to_form();
        assert_eq!(copeland_choice(&single), vec![0]);
    }

    #[test]
    fn differential_of_copeland_scores() {
        let fg = x5_form();
        let cs = copeland_scores(&fg);
        let d = differential(&cs, fg.base()).unwrap();
        assert_eq!(d.value(0, 1), -4.0);
        assert_eq!(d.value(0, 2), -2.0);
        assert_eq!(d.value(0, 4), 0.0);
        // off-edge reads are exact zeros
        assert_eq!(d.value(0, 3), 0.0);

        let constant = ZeroForm::from_vec(vec![3.0; 5]);
        let dzero = differential(&constant, fg.base()).unwrap();
        assert_eq!(dzero.inf_norm(), 0.0);

        // indicator of vertex k: ±1 exactly on incident edges
        let mut ind = ZeroForm::zeros(5);
        ind.values[2] = 1.0;
        let dind = differential(&ind, fg.base()).unwrap();
        for &(i, j) in fg.base().edges() {
            let expect = match (i == 2, j == 2) {
                (true, false) => -1.0,
                (false, true) => 1.0,
                _ => 0.0,
            };
            assert_eq!(dind.value(i, j), expect);
        }

        let short = ZeroForm::zeros(3);
        assert!(matches!(
            differential(&short, fg.base()),
            Err(HodgeError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn divergence_recovers_copeland_scores() {
        let fg = x5_form();
        let div = divergence(&dominance_form(&fg));
        assert_eq!(div.values, vec![2.0, -2.0, 0.0, -2.0, 2.0]);
        assert!(div.values.iter().sum::<f64>().abs() < 1e-15);

        let zero = OneForm::zeros(fg.base().clone());
        assert_eq!(divergence(&zero).values, vec![0.0; 5]);

        // any cycle as a 1-form is divergence-free: x2 -> x5 -> x3 -> x2
        let mut m = vec![vec![0.0; 5]; 5];
        for (i, j) in [(1, 4), (4, 2), (2, 1)] {
            m[i][j] = -1.0;
            m[j][i] = 1.0;
        }
        let cf = OneForm::from_dense(fg.base().clone(), &m).unwrap();
        assert_eq!(divergence(&cf).inf_norm(), 0.0);
    }

    #[test]
    fn inner_products_known_values() {
        let fg = x5_form();
        let r = dominance_form(&fg);
        // oracle: direct edge sum — six asymmetric edges contribute 1 each
        assert_eq!(inner1(&r, &r).unwrap(), 6.0);

        let zero = ZeroForm::zeros(5);
        assert_eq!(inner0(&zero, &copeland_scores(&fg)).unwrap(), 0.0);

        let bad = ZeroForm::zeros(3);
        assert!(inner0(&bad, &zero).is_err());
    }

    #[test]
    fn adjointness_on_known_pair() {
        let fg = x5_form();
        let defect = adjointness_defect(&dominance_form(&fg), &copeland_scores(&fg)).unwrap();
        assert!(defect.abs() < 1e-12, "defect {defect}");

        let zero_phi = OneForm::zeros(fg.base().clone());
        let zero_psi = ZeroForm::zeros(5);
        assert_eq!(adjointness_defect(&zero_phi, &zero_psi).unwrap(), 0.0);
    }

    #[test]
    fn laplacian_known_values() {
        let fg = x5_form();
        let l = laplacian_dense(fg.base());
        let diag: Vec<f64> = (0..5).map(|i| l[i][i]).collect();
        assert_eq!(diag, vec![3.0, 3.0, 4.0, 2.0, 4.0]);
        assert_eq!(l[0], vec![3.0, -1.0, -1.0, 0.0, -1.0]);
        assert_eq!(l[3], vec![0.0, 0.0, -1.0, 2.0, -1.0]);
        for i in 0..5 {
            assert_eq!(l[i].iter().sum::<f64>(), 0.0);
        }

        let empty = BaseSpace::empty(3);
        assert!(laplacian_dense(&empty).iter().flatten().all(|&v| v == 0.0));

        let k4 = BaseSpace::complete(4);
        let lk = laplacian_dense(&k4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(lk[i][j], if i == j { 3.0 } else { -1.0 });
            }
        }
    }

    #[test]
    fn decompose_x5_matches_known_values() {
        let fg = x5_form();
        let res = hpc(&fg).unwrap();
        // family [7/10, -3/10, 0, -4/5, 2/5] + k·1 already sums to zero
        let expect = [0.7, -0.3, 0.0, -0.8, 0.4];
        for (got, want) in res.potential.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12, "got {got}, want {want}");
        }
        assert_eq!(res.winners, vec![0]);
        assert!((res.tenseness - 4.0 / 15.0).abs() < 1e-13);

        // harmonic energy equals the value read off the printed matrix
        let h = &res.harmonic;
        assert!((inner1(h, h).unwrap() - 1.6).abs() < 1e-12);
        // spot-check harmonic entries
        assert!((h.value(0, 2) - (-0.3)).abs() < 1e-12);
        assert!((h.value(1, 2) - 0.7).abs() < 1e-12);
        assert!((h.value(2, 3) - (-0.2)).abs() < 1e-12);
        assert!((h.value(2, 4) - 0.6).abs() < 1e-12);

        // residual invariants
        assert!(divergence(h).inf_norm() < 1e-12);
        assert!(inner1(&res.gradient, h).unwrap().abs() < 1e-12);
        let r = dominance_form(&fg);
        assert!(r.sub(&res.gradient).unwrap().sub(h).unwrap().inf_norm() < 1e-12);
    }

    #[test]
    fn decompose_harmonic_input_short_circuits() {
        let fg = x5_form();
        let mut m = vec![vec![0.0; 5]; 5];
        for (i, j) in [(1, 4), (4, 2), (2, 1)] {
            m[i][j] = -1.0;
            m[j][i] = 1.0;
        }
        let cf = OneForm::from_dense(fg.base().clone(), &m).unwrap();
        let res = hodge_decompose(&cf).unwrap();
        assert_eq!(res.potential.values, vec![0.0; 5]);
        assert_eq!(res.tenseness, 1.0);
        assert_eq!(res.winners, vec![0, 1, 2, 3, 4]);
        assert_eq!(res.harmonic, cf);
    }

    #[test]
    fn decompose_pure_gradient_has_zero_tenseness() {
        let fg = x5_form();
        let psi = ZeroForm::from_vec(vec![0.3, -1.2, 0.5, 2.0, -0.1]);
        let dpsi = differential(&psi, fg.base()).unwrap();
        let res = hodge_decompose(&dpsi).unwrap();
        assert!(res.harmonic.inf_norm() < 1e-9);
        assert!(res.tenseness < 1e-12);
        // dP is reproduced even though P itself is only unique up to constant
        assert!(res.gradient.sub(&dpsi).unwrap().inf_norm() < 1e-9);
    }

    #[test]
    fn decompose_rejects_disconnected() {
        let g = AbstractGame::with_default_labels(4, [(0, 1), (2, 3)]).unwrap();
        let fg = g.to_form();
        assert!(matches!(
            hpc(&fg),
            Err(HodgeError::Disconnected { components: 2 })
        ));
        assert!(matches!(
            hodge_decompose(&dominance_form(&fg)),
            Err(HodgeError::Disconnected { .. })
        ));
    }

    #[test]
    fn hpc_on_variants_matches_known_winners() {
        let replaced = fixtures::x5_cycle_replaced().to_form();
        let res = hpc(&replaced).unwrap();
        let expect = [0.4, -0.5, 0.0, -0.4, 0.5];
        for (got, want) in res.potential.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(res.winners, vec![4]);
        // Copeland data is unchanged by the cycle replacement
        assert_eq!(copeland_scores_int(&replaced), vec![2, -2, 0, -2, 2]);

        let removed = fixtures::x5_mutual_removed().to_form();
        let res = hpc(&removed).unwrap();
        // family [1, -1/3, 1/3, -1/3, 1] + k·1, centered here
        let mean = (1.0 - 1.0 / 3.0 + 1.0 / 3.0 - 1.0 / 3.0 + 1.0) / 5.0;
        let expect = [1.0, -1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0, 1.0].map(|v| v - mean);
        for (got, want) in res.potential.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(res.winners, vec![0, 4]);
    }

    #[test]
    fn hpc_regular_game_returns_everyone() {
        // directed triangle: all scores zero
        let g = AbstractGame::with_default_labels(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let res = hpc(&g.to_form()).unwrap();
        assert_eq!(res.winners, vec![0, 1, 2]);
        assert_eq!(res.tenseness, 1.0);
        assert_eq!(res.potential.values, vec![0.0; 3]);

        // single alternative
        let one = AbstractGame::with_default_labels(1, []).unwrap();
        let res = hpc(&one.to_form()).unwrap();
        assert_eq!(res.winners, vec![0]);
        assert_eq!(res.tenseness, 1.0);
    }

    #[test]
    fn tenseness_bounds_and_values() {
        assert!((tenseness(&x5_form()).unwrap() - 4.0 / 15.0).abs() < 1e-13);

        // all-mutual game is regular: tenseness 1 by convention
        let sym = AbstractGame::with_default_labels(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(tenseness(&sym.to_form()).unwrap(), 1.0);
    }

    #[test]
    fn argmax_tie_tolerance() {
        let p = ZeroForm::from_vec(vec![1.0, 1.0 - 1e-12, 0.5]);
        assert_eq!(argmax_winners(&p), vec![0, 1]);
        let p = ZeroForm::from_vec(vec![1.0, 1.0 - 1e-6, 0.5]);
        assert_eq!(argmax_winners(&p), vec![0]);
    }
}
