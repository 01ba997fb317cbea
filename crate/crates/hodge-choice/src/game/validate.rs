//! Raw matrix-pair validation: the conditions under which a `(W, R)` pair
//! encodes a game.

use std::fmt;

use super::GameError;

/// One violated matrix-pair condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `W[i][j] != W[j][i]`.
    BaseNotSymmetric { i: usize, j: usize },
    /// `W[i][i] != 0`.
    BaseDiagonalNonzero { i: usize },
    /// `W[i][j]` outside `{0, 1}`.
    BaseEntryOutOfRange { i: usize, j: usize, value: i64 },
    /// `R[i][j] != -R[j][i]` (includes a nonzero diagonal).
    FormNotSkew { i: usize, j: usize },
    /// `R[i][j]` outside `{-1, 0, 1}`.
    FormEntryOutOfRange { i: usize, j: usize, value: i64 },
    /// `R` nonzero on a pair with `W[i][j] = 0`.
    FormOffEdge { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BaseNotSymmetric { i, j } => {
                write!(f, "base space not symmetric at ({i},{j})")
            }
            Violation::BaseDiagonalNonzero { i } => {
                write!(f, "base space diagonal nonzero at ({i},{i})")
            }
            Violation::BaseEntryOutOfRange { i, j, value } => {
                write!(f, "base space entry {value} at ({i},{j}) not in {{0,1}}")
            }
            Violation::FormNotSkew { i, j } => {
                write!(f, "dominance form not skew-symmetric at ({i},{j})")
            }
            Violation::FormEntryOutOfRange { i, j, value } => {
                write!(
                    f,
                    "dominance form entry {value} at ({i},{j}) not in {{-1,0,1}}"
                )
            }
            Violation::FormOffEdge { i, j } => {
                write!(
                    f,
                    "dominance form nonzero at ({i},{j}) but no round arranged"
                )
            }
        }
    }
}

/// Checks a raw `(W, R)` matrix pair against the encoding conditions and
/// reports every violation found (an empty list means the pair is valid).
///
/// Fails outright only when the two matrices are not square of equal size.
pub fn validate(w: &[Vec<i64>], r: &[Vec<i64>]) -> Result<Vec<Violation>, GameError> {
    let n = w.len();
    let square = |m: &[Vec<i64>]| m.iter().all(|row| row.len() == m.len());
    if r.len() != n || !square(w) || !square(r) {
        return Err(GameError::DimensionMismatch {
            w_rows: w.len(),
            r_rows: r.len(),
        });
    }

    let mut out = Vec::new();
    for i in 0..n {
        if w[i][i] != 0 {
            out.push(Violation::BaseDiagonalNonzero { i });
        }
        if r[i][i] != 0 {
            out.push(Violation::FormNotSkew { i, j: i });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(i, j), (j, i)] {
                if !matches!(w[a][b], 0 | 1) {
                    out.push(Violation::BaseEntryOutOfRange {
                        i: a,
                        j: b,
                        value: w[a][b],
                    });
                }
                if !matches!(r[a][b], -1..=1) {
                    out.push(Violation::FormEntryOutOfRange {
                        i: a,
                        j: b,
                        value: r[a][b],
                    });
                }
            }
            if w[i][j] != w[j][i] {
                out.push(Violation::BaseNotSymmetric { i, j });
            }
            if r[i][j] != -r[j][i] {
                out.push(Violation::FormNotSkew { i, j });
            }
            if w[i][j] == 0 && w[j][i] == 0 && (r[i][j] != 0 || r[j][i] != 0) {
                out.push(Violation::FormOffEdge { i, j });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_pair_has_no_violations() {
        let w = vec![vec![0, 1], vec![1, 0]];
        let r = vec![vec![0, -1], vec![1, 0]];
        assert!(validate(&w, &r).unwrap().is_empty());
    }

    #[test]
    fn skew_violation_reported() {
        let w = vec![vec![0, 1], vec![1, 0]];
        let r = vec![vec![0, 1], vec![1, 0]];
        let v = validate(&w, &r).unwrap();
        assert_eq!(v, vec![Violation::FormNotSkew { i: 0, j: 1 }]);
    }

    #[test]
    fn support_violation_reported() {
        let w = vec![vec![0, 0], vec![0, 0]];
        let r = vec![vec![0, -1], vec![1, 0]];
        let v = validate(&w, &r).unwrap();
        assert_eq!(v, vec![Violation::FormOffEdge { i: 0, j: 1 }]);
    }

    #[test]
    fn dimension_mismatch_is_hard_error() {
        let w = vec![vec![0, 1], vec![1, 0]];
        let r = vec![vec![0]];
        assert!(matches!(
            validate(&w, &r),
            Err(GameError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn multiple_violations_collected() {
        let w = vec![vec![2, 1], vec![0, 0]];
        let r = vec![vec![0, 5], vec![1, 0]];
        let v = validate(&w, &r).unwrap();
        assert!(
            v.contains(&Violation::BaseEntryOutOfRange {
                i: 0,
                j: 0,
                value: 2
            }) || v.contains(&Violation::BaseDiagonalNonzero { i: 0 })
        );
        assert!(v.contains(&Violation::BaseNotSymmetric { i: 0, j: 1 }));
        assert!(v.contains(&Violation::FormEntryOutOfRange {
            i: 0,
            j: 1,
            value: 5
        }));
    }
}
