//! Named input presets: the concrete root lists and ramification points used
//! by the reference computations.

use num_rational::BigRational;

use crate::lattice::{Root, RootLabel};

fn a(i: u8, j: u8) -> Root {
    Root::from_label(RootLabel::Ij(i, j), false)
}

fn b(i: u8, j: u8, k: u8) -> Root {
    Root::from_label(RootLabel::Ijk(i, j, k), false)
}

fn mx() -> Root {
    Root::from_label(RootLabel::Max, false)
}

/// Root list certifying dominance of the Prym-Tyurin map (determinant 2^12).
pub fn dominance_roots() -> Vec<Root> {
    vec![
        b(1, 3, 5),
        a(1, 2),
        a(2, 3),
        a(3, 4),
        a(4, 5),
        a(5, 6),
        b(4, 5, 6),
        a(2, 6),
        b(1, 2, 3),
        b(1, 2, 5),
        b(2, 5, 6),
        a(1, 5),
    ]
}

/// Root list for the vanishing `h^0(2K - 5L) = 0` on the 72-nodal cover.
pub fn twok5_roots() -> Vec<Root> {
    vec![
        b(1, 3, 5),
        a(1, 2),
        a(2, 3),
        a(3, 4),
        a(4, 5),
        a(5, 6),
        a(1, 6),
        b(4, 5, 6),
        b(1, 2, 3),
        b(3, 4, 6),
        b(2, 3, 4),
        b(1, 5, 6),
    ]
}

/// Root list for the Petri generality check.
pub fn petri_roots() -> Vec<Root> {
    vec![
        b(1, 3, 5),
        a(1, 2),
        a(2, 3),
        a(3, 4),
        a(4, 5),
        a(5, 6),
        mx(),
        b(1, 2, 4),
        b(2, 3, 4),
        a(3, 5),
        a(1, 3),
        a(3, 6),
    ]
}

/// The standard ramification points `q_i = i`, `i = 1..12`.
pub fn standard_points() -> Vec<BigRational> {
    (1..=12)
        .map(|i| BigRational::from_integer(i.into()))
        .collect()
}

/// Resolves a preset name to its root list (and points where applicable).
pub fn preset_roots(name: &str) -> Option<Vec<Root>> {
    match name {
        "thm-dominance" => Some(dominance_roots()),
        "thm-2k5" => Some(twok5_roots()),
        "thm-petri" => Some(petri_roots()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_twelve_roots_each() {
        for name in ["thm-dominance", "thm-2k5", "thm-petri"] {
            let roots = preset_roots(name).unwrap();
            assert_eq!(roots.len(), 12);
            assert!(roots.iter().all(|r| r.vec.is_root()));
        }
        assert!(preset_roots("nope").is_none());
    }

    #[test]
    fn consecutive_pairs_are_azygetic_for_dominance() {
        // the tree pairs ends (1,2), (3,4), ...; those pairs must not be
        // orthogonal or the monodromy forms degenerate
        let roots = dominance_roots();
        for k in 0..6 {
            let p = roots[2 * k].vec.pairing(&roots[2 * k + 1].vec);
            assert_ne!(p, 0, "pair ({}, {})", 2 * k + 1, 2 * k + 2);
        }
    }
}
