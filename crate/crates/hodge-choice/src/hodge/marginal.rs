//! Games whose rounds carry victory margins.

use std::sync::Arc;

use crate::game::{default_labels, BaseSpace, FormGame, GameError};
use crate::solver::SolveOptions;

use super::{hodge_decompose_with, HodgeError, HodgeResult, OneForm};

/// A dominance game with a non-negative victory margin on every round.
///
/// A strictly positive margin on `(i, j)` means `i` beat `j` by that much;
/// a drawn round (mutual dominance) carries margin zero on both sides. The
/// induced margin form `M̄ = -M + Mᵀ` is skew and supported on the arranged
/// edges, and its sign pattern recovers the plain dominance-difference form.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginalGame {
    labels: Vec<String>,
    base: Arc<BaseSpace>,
    /// `M̄(i, j)` per edge `(i, j)` with `i < j`.
    mbar: Vec<f64>,
}

impl MarginalGame {
    /// Builds a marginal game from `(winner, loser, margin)` rounds.
    /// Margin 0 records a drawn round between the two alternatives.
    pub fn from_rounds(
        labels: Vec<String>,
        rounds: &[(usize, usize, f64)],
    ) -> Result<Self, HodgeError> {
        let n = labels.len();
        let mut edges = Vec::with_capacity(rounds.len());
        for &(i, j, m) in rounds {
            if i == j || i >= n || j >= n {
                return Err(HodgeError::InvalidForm(format!(
                    "round ({i},{j}) outside 0..{n}"
                )));
            }
            if !m.is_finite() || m < 0.0 {
                return Err(HodgeError::NegativeMargin { i, j, value: m });
            }
            edges.push((i.min(j), i.max(j)));
        }
        let sorted = {
            let mut e = edges.clone();
            e.sort_unstable();
            e
        };
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(HodgeError::SupportViolation {
                i: w[0].0,
                j: w[0].1,
                reason: "pair appears in more than one round".into(),
            });
        }
        let base = Arc::new(
            BaseSpace::from_edges(n, edges).map_err(|e| HodgeError::InvalidForm(e.to_string()))?,
        );
        let mut mbar = vec![0.0; base.edge_count()];
        for &(i, j, m) in rounds {
            let e = base.edge_index(i, j).expect("round edge exists");
            // M̄(i, j) = -m when i beats j; stored for the orientation i < j
            mbar[e] = if i < j { -m } else { m };
        }
        Ok(MarginalGame { labels, base, mbar })
    }

    /// Builds a marginal game from a base matrix `W` and margin matrix `M`.
    pub fn from_matrices(w: &[Vec<i64>], m: &[Vec<f64>]) -> Result<Self, HodgeError> {
        let n = w.len();
        let zero_r = vec![vec![0i64; n]; n];
        let violations = crate::game::validate(w, &zero_r)
            .map_err(|e| HodgeError::InvalidForm(e.to_string()))?;
        if !violations.is_empty() {
            return Err(HodgeError::InvalidForm(
                GameError::InvalidForm(violations).to_string(),
            ));
        }
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(HodgeError::SizeMismatch {
                expected: n,
                got: m.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let v = m[i][j];
                if !v.is_finite() || v < 0.0 {
                    return Err(HodgeError::NegativeMargin { i, j, value: v });
                }
                if i == j && v != 0.0 {
                    return Err(HodgeError::SupportViolation {
                        i,
                        j,
                        reason: "margin on the diagonal".into(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if w[i][j] == 0 && (m[i][j] > 0.0 || m[j][i] > 0.0) {
                    return Err(HodgeError::SupportViolation {
                        i,
                        j,
                        reason: "margin on an unarranged pair".into(),
                    });
                }
                if m[i][j] > 0.0 && m[j][i] > 0.0 {
                    return Err(HodgeError::SupportViolation {
                        i,
                        j,
                        reason: "positive margins in both directions".into(),
                    });
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if w[i][j] == 1 {
                    edges.push((i, j));
                }
            }
        }
        let base = Arc::new(
            BaseSpace::from_edges(n, edges).map_err(|e| HodgeError::InvalidForm(e.to_string()))?,
        );
        let mbar = base
            .edges()
            .iter()
            .map(|&(i, j)| -m[i][j] + m[j][i])
            .collect();
        Ok(MarginalGame {
            labels: default_labels(n),
            base,
            mbar,
        })
    }

    /// A marginal game putting the same margin on every decided round of a
    /// plain game; drawn rounds stay at zero.
    pub fn uniform_margins(fg: &FormGame, margin: f64) -> Result<Self, HodgeError> {
        if !margin.is_finite() || margin <= 0.0 {
            return Err(HodgeError::NegativeMargin {
                i: 0,
                j: 0,
                value: margin,
            });
        }
        let mbar = fg
            .diff_values()
            .iter()
            .map(|&d| d as f64 * margin)
            .collect();
        Ok(MarginalGame {
            labels: fg.labels().to_vec(),
            base: fg.base().clone(),
            mbar,
        })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn base(&self) -> &Arc<BaseSpace> {
        &self.base
    }

    /// The margin form `M̄ = -M + Mᵀ` as a 1-form on the base.
    pub fn margin_form(&self) -> OneForm {
        OneForm::from_edge_values(self.base.clone(), self.mbar.clone())
            .expect("lengths match by construction")
    }

    /// The plain game carrying only the sign pattern of the margins.
    pub fn to_form_game(&self) -> FormGame {
        let (w, mut r) = (self.base.to_dense(), vec![vec![0i64; self.n()]; self.n()]);
        for (e, &(i, j)) in self.base.edges().iter().enumerate() {
            let sign = match self.mbar[e] {
                v if v < 0.0 => -1,
                v if v > 0.0 => 1,
                _ => 0,
            };
            r[i][j] = sign;
            r[j][i] = -sign;
        }
        let w: Vec<Vec<i64>> = w
            .into_iter()
            .map(|row| row.into_iter().map(i64::from).collect())
            .collect();
        FormGame::from_matrices_labelled(&w, &r, self.labels.clone())
            .expect("sign pattern is a valid form")
    }

    /// Rounds as `(winner, loser, margin)`, drawn rounds as `(i, j, 0)`,
    /// sorted lexicographically.
    pub fn to_rounds(&self) -> Vec<(usize, usize, f64)> {
        let mut rounds: Vec<(usize, usize, f64)> = self
            .base
            .edges()
            .iter()
            .zip(&self.mbar)
            .map(|(&(i, j), &v)| {
                if v < 0.0 {
                    (i, j, -v)
                } else if v > 0.0 {
                    (j, i, v)
                } else {
                    (i, j, 0.0)
                }
            })
            .collect();
        rounds.sort_by_key(|r| (r.0, r.1));
        rounds
    }
}

/// Extended Hodge potential choice: decompose the margin form on a
/// connected base and take the argmax of its potential.
pub fn ehpc(mg: &MarginalGame) -> Result<HodgeResult, HodgeError> {
    ehpc_with(mg, &SolveOptions::default())
}

pub fn ehpc_with(mg: &MarginalGame, opts: &SolveOptions) -> Result<HodgeResult, HodgeError> {
    hodge_decompose_with(&mg.margin_form(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hodge::{divergence, hpc, inner1, laplacian_dense};

    #[test]
    fn marginal_example_decomposes_to_known_values() {
        let mg = fixtures::x5_marginal();
        let mbar = mg.margin_form();
        // oracle: the divergence feeding the Laplacian solve
        assert_eq!(divergence(&mbar).values, vec![3.0, -5.0, 5.0, -7.0, 4.0]);

        let res = ehpc(&mg).unwrap();
        // solution family [0.6, -1.4, 0.2, -3.4, 0] + k·1
        let raw = [0.6, -1.4, 0.2, -3.4, 0.0];
        let mean = raw.iter().sum::<f64>() / 5.0;
        for (got, want) in res.potential.values.iter().zip(raw) {
            assert!(
                (got - (want - mean)).abs() < 1e-12,
                "got {got}, want {}",
                want - mean
            );
        }
        assert_eq!(res.winners, vec![0]);
        // ⟨H,H⟩ = 13.4, ⟨M̄,M̄⟩ = 47
        assert!((inner1(&res.harmonic, &res.harmonic).unwrap() - 13.4).abs() < 1e-12);
        assert!((inner1(&mbar, &mbar).unwrap() - 47.0).abs() < 1e-12);
        assert!((res.tenseness - 13.4 / 47.0).abs() < 1e-12);
        assert!((res.tenseness - 0.2851).abs() < 5e-4);

        // oracle: L·P reproduces the divergence on the uncentered family too
        let l = laplacian_dense(mg.base());
        for i in 0..5 {
            let lp: f64 = (0..5).map(|j| l[i][j] * res.potential.values[j]).sum();
            assert!((lp - divergence(&mbar).values[i]).abs() < 1e-10);
        }

        // harmonic part matches the known matrix entries
        let h = &res.harmonic;
        assert!((h.value(0, 2) - (-0.6)).abs() < 1e-12);
        assert!((h.value(1, 2) - 1.4).abs() < 1e-12);
        assert!((h.value(2, 4) - 2.2).abs() < 1e-12);
        assert!((h.value(3, 4) - (-1.4)).abs() < 1e-12);
    }

    #[test]
    fn unit_margins_reduce_to_plain_hpc() {
        let fg = fixtures::x5().to_form();
        let mg = MarginalGame::uniform_margins(&fg, 1.0).unwrap();
        let via_margin = ehpc(&mg).unwrap();
        let plain = hpc(&fg).unwrap();
        assert_eq!(via_margin.winners, plain.winners);
        for (a, b) in via_margin
            .potential
            .values
            .iter()
            .zip(&plain.potential.values)
        {
            assert!((a - b).abs() < 1e-12);
        }
        assert!((via_margin.tenseness - plain.tenseness).abs() < 1e-12);
    }

    #[test]
    fn margin_scaling_scales_potential_only() {
        let mg = fixtures::x5_marginal();
        let scaled = MarginalGame {
            labels: mg.labels().to_vec(),
            base: mg.base().clone(),
            mbar: mg.mbar.iter().map(|v| v * 3.5).collect(),
        };
        let a = ehpc(&mg).unwrap();
        let b = ehpc(&scaled).unwrap();
        assert_eq!(a.winners, b.winners);
        assert!((a.tenseness - b.tenseness).abs() < 1e-12);
        for (x, y) in a.potential.values.iter().zip(&b.potential.values) {
            assert!((x * 3.5 - y).abs() < 1e-10);
        }
    }

    #[test]
    fn construction_errors() {
        let labels = default_labels(3);
        assert!(matches!(
            MarginalGame::from_rounds(labels.clone(), &[(0, 1, -2.0)]),
            Err(HodgeError::NegativeMargin { .. })
        ));
        assert!(matches!(
            MarginalGame::from_rounds(labels.clone(), &[(0, 1, 1.0), (1, 0, 2.0)]),
            Err(HodgeError::SupportViolation { .. })
        ));
        assert!(matches!(
            MarginalGame::from_rounds(labels, &[(0, 3, 1.0)]),
            Err(HodgeError::InvalidForm(_))
        ));

        // margin off the arranged edges
        let w = vec![vec![0, 1], vec![1, 0]];
        let m = vec![vec![0.0, 0.0], vec![0.0, 0.0]];
        assert!(MarginalGame::from_matrices(&w, &m).is_ok());
        let w0 = vec![vec![0, 0], vec![0, 0]];
        let m1 = vec![vec![0.0, 2.0], vec![0.0, 0.0]];
        assert!(matches!(
            MarginalGame::from_matrices(&w0, &m1),
            Err(HodgeError::SupportViolation { .. })
        ));
    }

    #[test]
    fn disconnected_marginal_rejected() {
        let labels = default_labels(4);
        let mg = MarginalGame::from_rounds(labels, &[(0, 1, 1.0), (2, 3, 1.0)]).unwrap();
        assert!(matches!(ehpc(&mg), Err(HodgeError::Disconnected { .. })));
    }

    #[test]
    fn rounds_round_trip() {
        let mg = fixtures::x5_marginal();
        let rebuilt = MarginalGame::from_rounds(mg.labels().to_vec(), &mg.to_rounds()).unwrap();
        assert_eq!(rebuilt, mg);
    }

    #[test]
    fn sign_pattern_recovers_plain_game() {
        let mg = fixtures::x5_marginal();
        assert_eq!(mg.to_form_game(), fixtures::x5().to_form());
    }
}
