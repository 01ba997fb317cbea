//! Bundled example games.
//!
//! A family of small 5-alternative games exercising every feature the
//! solvers care about: mutual dominances, an empty round, a dominance cycle,
//! and a margin-weighted variant. The `examples` CLI subcommand writes them
//! to disk, the guide walks through them, and the acceptance suite pins
//! their known winner sets and potentials.

use crate::game::AbstractGame;
use crate::hodge::MarginalGame;

/// The running example: five alternatives, eight arranged rounds, two of
/// them mutual (`x1~x5`, `x2~x5`), no round between `x1` and `x4`.
///
/// Copeland scores `[2, -2, 0, -2, 2]`; Copeland winners `{x1, x5}`; Hodge
/// potential winners `{x1}`.
pub fn x5() -> AbstractGame {
    AbstractGame::with_default_labels(
        5,
        [
            (0, 1), // x1 beats x2
            (0, 2), // x1 beats x3
            (0, 4), // x1 ~ x5 (mutual)
            (4, 0),
            (1, 4), // x2 ~ x5 (mutual)
            (4, 1),
            (2, 1), // x3 beats x2
            (2, 3), // x3 beats x4
            (4, 2), // x5 beats x3
            (4, 3), // x5 beats x4
        ],
    )
    .expect("valid fixture")
}

/// [`x5`] with the cycle `x2→x5→x3→x2` removed and `x2→x1→x4→x2` added.
/// Copeland scores are unchanged, yet the Hodge potential winner moves from
/// `x1` to `x5` because the arrangement graph itself changed.
pub fn x5_cycle_replaced() -> AbstractGame {
    AbstractGame::with_default_labels(
        5,
        [
            (0, 1), // x1 ~ x2 (mutual, after adding x2 beats x1)
            (1, 0),
            (0, 2), // x1 beats x3
            (0, 3), // x1 beats x4
            (0, 4), // x1 ~ x5 (mutual)
            (4, 0),
            (3, 1), // x4 beats x2
            (4, 1), // x5 beats x2
            (2, 3), // x3 beats x4
            (4, 3), // x5 beats x4
        ],
    )
    .expect("valid fixture")
}

/// [`x5`] with the mutual dominances `x1~x5` and `x2~x5` replaced by empty
/// rounds. Copeland output is identical to [`x5`]'s; the Hodge potential
/// winner set widens to `{x1, x5}`.
pub fn x5_mutual_removed() -> AbstractGame {
    x5().remove_mutual(0, 4)
        .and_then(|g| g.remove_mutual(1, 4))
        .expect("fixture mutuals exist")
}

/// [`x5`] endowed with victory margins; drawn rounds carry margin 0.
/// The potential ranks `x1` first and exposes `x4`'s big margin win over a
/// weak field: its potential is lowest despite the flashy margin.
pub fn x5_marginal() -> MarginalGame {
    MarginalGame::from_rounds(
        crate::game::default_labels(5),
        &[
            (0, 1, 2.0), // x1 beats x2 by 2
            (0, 2, 1.0), // x1 beats x3 by 1
            (2, 1, 3.0), // x3 beats x2 by 3
            (2, 3, 5.0), // x3 beats x4 by 5
            (4, 2, 2.0), // x5 beats x3 by 2
            (4, 3, 2.0), // x5 beats x4 by 2
            (0, 4, 0.0), // drawn
            (1, 4, 0.0), // drawn
        ],
    )
    .expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_connected_and_valid() {
        for g in [x5(), x5_cycle_replaced(), x5_mutual_removed()] {
            let fg = g.to_form();
            assert!(fg.is_connected());
            let (w, r) = fg.to_matrices();
            assert!(crate::game::validate(&w, &r).unwrap().is_empty());
        }
        assert!(x5_marginal().base().is_connected());
    }

    #[test]
    fn cycle_replacement_matches_transform() {
        // oracle: apply the edit to x5 directly at the set level
        let mut pairs: std::collections::BTreeSet<(usize, usize)> = x5().dominances().collect();
        for removed in [(1, 4), (4, 2), (2, 1)] {
            assert!(pairs.remove(&removed));
        }
        for added in [(1, 0), (0, 3), (3, 1)] {
            assert!(pairs.insert(added));
        }
        let rebuilt = AbstractGame::with_default_labels(5, pairs).unwrap();
        assert_eq!(rebuilt, x5_cycle_replaced());
    }

    #[test]
    fn cycle_replacement_matrices() {
        let (w, r) = x5_cycle_replaced().to_form().to_matrices();
        assert_eq!(w[0], vec![0, 1, 1, 1, 1]);
        assert_eq!(w[1], vec![1, 0, 0, 1, 1]);
        assert_eq!(w[2], vec![1, 0, 0, 1, 0]);
        assert_eq!(w[3], vec![1, 1, 1, 0, 1]);
        assert_eq!(w[4], vec![1, 1, 0, 1, 0]);
        assert_eq!(r[0], vec![0, 0, -1, -1, 0]);
        assert_eq!(r[1], vec![0, 0, 0, 1, 1]);
        assert_eq!(r[2], vec![1, 0, 0, -1, 0]);
        assert_eq!(r[3], vec![1, -1, 1, 0, 1]);
        assert_eq!(r[4], vec![0, -1, 0, -1, 0]);
    }

    #[test]
    fn marginal_fixture_margins() {
        let mg = x5_marginal();
        let mbar = mg.margin_form();
        assert_eq!(mbar.value(0, 1), -2.0);
        assert_eq!(mbar.value(1, 2), 3.0);
        assert_eq!(mbar.value(2, 3), -5.0);
        assert_eq!(mbar.value(0, 4), 0.0);
        assert_eq!(mbar.value(3, 4), 2.0);
    }
}
