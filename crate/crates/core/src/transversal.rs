//! Minimal hitting sets of small set families.
//!
//! The new faces added at a step of a shelling are exactly the subsets of the
//! new facet that hit every difference `F_i \ F_j`, so "unique minimal new
//! face" is "unique minimal hitting set" of the difference family.

use crate::face::Face;

/// The unique inclusion-minimal hitting set of `family`, if there is one.
///
/// A family of nonempty sets has a unique minimal transversal iff each of its
/// minimal members is a singleton; the transversal is then the union of the
/// singleton members. An empty family is hit by the empty set. A family
/// containing the empty set has no transversal at all.
pub fn unique_minimal_transversal(family: &[Face]) -> Option<Face> {
    let singletons = family
        .iter()
        .filter(|s| s.len() == 1)
        .fold(Face::EMPTY, |acc, s| acc.union(*s));
    family
        .iter()
        .all(|s| !s.intersection(singletons).is_empty())
        .then_some(singletons)
}

/// Inclusion-minimal members of `family`, deduplicated, canonical order.
pub fn minimal_members(family: &[Face]) -> Vec<Face> {
    let mut sorted = family.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sorted.len());
    for s in sorted {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    // All minimal hitting sets by exhausting subsets of the ground set.
    fn brute_minimal_transversals(family: &[Face], ground: Face) -> Vec<Face> {
        let hits: Vec<Face> = ground
            .subsets()
            .filter(|t| family.iter().all(|s| !s.intersection(*t).is_empty()))
            .collect();
        hits.iter()
            .copied()
            .filter(|t| !hits.iter().any(|u| u != t && u.is_subset(*t)))
            .collect()
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        // Every family of up to three sets over a 4-element ground set.
        let ground = Face::full(4);
        let sets: Vec<Face> = ground.subsets().collect();
        for &a in &sets {
            for &b in &sets {
                for &c in &sets {
                    let family = [a, b, c];
                    let brute = brute_minimal_transversals(&family, ground);
                    let expected = match brute.as_slice() {
                        [only] => Some(*only),
                        _ => None,
                    };
                    assert_eq!(unique_minimal_transversal(&family), expected, "{family:?}");
                }
            }
        }
    }

    #[test]
    fn empty_family() {
        assert_eq!(unique_minimal_transversal(&[]), Some(Face::EMPTY));
    }

    #[test]
    fn minimal_members_drop_supersets() {
        let family = [
            Face::from_bits(0b011),
            Face::from_bits(0b001),
            Face::from_bits(0b110),
            Face::from_bits(0b001),
        ];
        assert_eq!(
            minimal_members(&family),
            vec![Face::from_bits(0b001), Face::from_bits(0b110)]
        );
    }
}
