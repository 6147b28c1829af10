//! Shelling orders: verification, restriction faces, and depth-first search.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{is_permutation, is_pure_facets, HVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::transversal::unique_minimal_transversal;

/// How the facet list is arranged before the depth-first search.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// The base list as given.
    #[default]
    Default,
    /// The base list shuffled by a ChaCha8 generator seeded with `seed`
    /// (`rand_chacha::ChaCha8Rng::seed_from_u64` and `SliceRandom::shuffle`).
    Random { seed: u64 },
    /// Position `i` of the arranged list is `base[perm[i]]`.
    Permutation(Vec<usize>),
}

/// Step condition used to verify a facet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShellingCondition {
    /// The faces added by each facet have a unique minimal element.
    UniqueMinimalNewFace,
    /// Each facet meets the earlier ones in a pure codimension-one subcomplex.
    PureIntersection,
}

impl ShellingCondition {
    fn for_facets(facets: &[Face]) -> Self {
        if is_pure_facets(facets) {
            ShellingCondition::UniqueMinimalNewFace
        } else {
            ShellingCondition::PureIntersection
        }
    }

    fn step(self) -> fn(&[Face], Face) -> bool {
        match self {
            ShellingCondition::UniqueMinimalNewFace => pure_step_ok,
            ShellingCondition::PureIntersection => intersection_step_ok,
        }
    }
}

/// A shelling order together with the restriction face of each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    pub facets: Vec<Face>,
    /// The unique minimal new face of each step; `∅` at position 0.
    pub restrictions: Vec<Face>,
}

impl ShellingOrder {
    /// `h_j` = number of steps whose restriction face has `j` vertices.
    pub fn h_vector(&self) -> HVector {
        let d = self.facets.first().map_or(0, |f| f.len());
        let mut h = vec![0i64; d + 1];
        for r in &self.restrictions {
            h[r.len()] += 1;
        }
        HVector(h)
    }
}

impl SimplicialComplex {
    /// Whether `order` (a permutation of the facets) is a shelling.
    ///
    /// Pure complexes use the unique-minimal-new-face condition; non-pure
    /// complexes use the intersection condition: each new facet meets the
    /// earlier ones in a pure subcomplex of codimension one.
    pub fn is_shelling_order(&self, order: &[Face]) -> Result<bool> {
        self.is_shelling_order_by(order, ShellingCondition::for_facets(self.facets()))
    }

    /// Checks `order` against an explicitly chosen step condition. The two
    /// conditions coincide on pure complexes.
    pub fn is_shelling_order_by(
        &self,
        order: &[Face],
        condition: ShellingCondition,
    ) -> Result<bool> {
        self.require_non_void()?;
        self.check_facet_order(order)?;
        let step_ok = condition.step();
        Ok((1..order.len()).all(|i| step_ok(&order[..i], order[i])))
    }

    /// The unique minimal new face at every step of a shelling order.
    pub fn restriction_faces(&self, order: &[Face]) -> Result<Vec<Face>> {
        if !self.is_shelling_order(order)? {
            return Err(Error::InvalidOrder);
        }
        Ok(restrictions(order))
    }

    /// The h-vector tabulated from the restriction faces of a shelling.
    pub fn h_from_shelling(&self, order: &[Face]) -> Result<HVector> {
        if !self.is_pure()? {
            return Err(Error::NotPure);
        }
        let restrictions = self.restriction_faces(order)?;
        Ok(ShellingOrder {
            facets: order.to_vec(),
            restrictions,
        }
        .h_vector())
    }

    /// Searches for a shelling starting from the canonical facet list.
    pub fn shelling_order(&self, strategy: &SearchStrategy) -> Result<Option<ShellingOrder>> {
        self.shelling_order_from(self.facets(), strategy)
    }

    /// Searches for a shelling, arranging `base` (a permutation of the
    /// facets) according to `strategy` first.
    ///
    /// Depth-first: at each step the remaining facets are tried in list
    /// order and the first one passing the step condition is kept. For
    /// non-pure complexes only the largest remaining facets are candidates,
    /// so facet sizes weakly decrease along the result.
    pub fn shelling_order_from(
        &self,
        base: &[Face],
        strategy: &SearchStrategy,
    ) -> Result<Option<ShellingOrder>> {
        self.require_non_void()?;
        self.check_facet_order(base)?;
        let mut list = base.to_vec();
        match strategy {
            SearchStrategy::Default => {}
            SearchStrategy::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                list.shuffle(&mut rng);
            }
            SearchStrategy::Permutation(perm) => {
                if !is_permutation(perm, list.len()) {
                    return Err(Error::InvalidPermutation(perm.clone(), list.len()));
                }
                list = perm.iter().map(|&p| base[p]).collect();
            }
        }
        let step_ok = ShellingCondition::for_facets(self.facets()).step();
        let mut search = Search {
            list: &list,
            used: vec![false; list.len()],
            prefix: Vec::with_capacity(list.len()),
            step_ok,
        };
        Ok(search.extend().then(|| {
            let facets = search.prefix;
            ShellingOrder {
                restrictions: restrictions(&facets),
                facets,
            }
        }))
    }

    pub fn is_shellable(&self) -> Result<bool> {
        Ok(self.shelling_order(&SearchStrategy::Default)?.is_some())
    }
}

struct Search<'a> {
    list: &'a [Face],
    used: Vec<bool>,
    prefix: Vec<Face>,
    step_ok: fn(&[Face], Face) -> bool,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        if self.prefix.len() == self.list.len() {
            return true;
        }
        let largest = self
            .list
            .iter()
            .zip(&self.used)
            .filter(|(_, used)| !**used)
            .map(|(f, _)| f.len())
            .max()
            .unwrap_or(0);
        for i in 0..self.list.len() {
            let facet = self.list[i];
            if self.used[i] || facet.len() != largest {
                continue;
            }
            if !self.prefix.is_empty() && !(self.step_ok)(&self.prefix, facet) {
                continue;
            }
            self.used[i] = true;
            self.prefix.push(facet);
            if self.extend() {
                return true;
            }
            self.prefix.pop();
            self.used[i] = false;
        }
        false
    }
}

fn differences(earlier: &[Face], facet: Face) -> Vec<Face> {
    earlier.iter().map(|g| facet.difference(*g)).collect()
}

fn pure_step_ok(earlier: &[Face], facet: Face) -> bool {
    unique_minimal_transversal(&differences(earlier, facet)).is_some()
}

// Every maximal `facet ∩ G` has exactly |facet| - 1 vertices.
fn intersection_step_ok(earlier: &[Face], facet: Face) -> bool {
    let ridge = facet.len().saturating_sub(1);
    let meets: Vec<Face> = earlier.iter().map(|g| facet.intersection(*g)).collect();
    let ridges: Vec<Face> = meets.iter().copied().filter(|m| m.len() == ridge).collect();
    meets.iter().all(|m| ridges.iter().any(|r| m.is_subset(*r)))
}

fn restrictions(order: &[Face]) -> Vec<Face> {
    (0..order.len())
        .map(|i| {
            unique_minimal_transversal(&differences(&order[..i], order[i]))
                .expect("validated shelling step")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::VertexSet;
    use std::sync::Arc;

    fn complex(labels: &[&str], facets: &[&str]) -> SimplicialComplex {
        let vs = Arc::new(VertexSet::new(labels.iter().copied()).unwrap());
        let raw = facets
            .iter()
            .map(|s| vs.face(s.chars().map(|c| c.to_string())).unwrap())
            .collect();
        SimplicialComplex::from_facets(vs, raw).unwrap()
    }

    #[test]
    fn two_disjoint_edges_are_not_shellable() {
        let c = complex(&["a", "b", "c", "d"], &["ab", "cd"]);
        let ab = Face::from_bits(0b0011);
        let cd = Face::from_bits(0b1100);
        assert_eq!(c.is_shelling_order(&[ab, cd]), Ok(false));
        assert_eq!(c.is_shelling_order(&[cd, ab]), Ok(false));
        for strategy in [
            SearchStrategy::Default,
            SearchStrategy::Random { seed: 7 },
            SearchStrategy::Permutation(vec![1, 0]),
        ] {
            assert_eq!(c.shelling_order(&strategy), Ok(None));
        }
        assert_eq!(c.is_shellable(), Ok(false));
        assert_eq!(c.restriction_faces(&[ab, cd]), Err(Error::InvalidOrder));
    }

    #[test]
    fn single_facet() {
        let c = complex(&["a", "b", "c"], &["abc"]);
        let order = c.shelling_order(&SearchStrategy::Default).unwrap().unwrap();
        assert_eq!(order.facets, c.facets());
        assert_eq!(order.restrictions, vec![Face::EMPTY]);
        assert_eq!(
            c.h_from_shelling(&order.facets).unwrap().0,
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn triangle_boundary_restrictions() {
        let c = complex(&["a", "b", "c"], &["ab", "bc", "ac"]);
        let (ab, bc, ac) = (
            Face::from_bits(0b011),
            Face::from_bits(0b110),
            Face::from_bits(0b101),
        );
        assert_eq!(
            c.restriction_faces(&[ab, bc, ac]).unwrap(),
            vec![Face::EMPTY, Face::from_bits(0b100), Face::from_bits(0b101)]
        );
        assert_eq!(c.h_from_shelling(&[ab, bc, ac]).unwrap().0, vec![1, 1, 1]);
    }

    #[test]
    fn isolated_points_are_shellable() {
        let c = complex(&["a", "b", "c", "d"], &["a", "b", "c", "d"]);
        let order = c.shelling_order(&SearchStrategy::Default).unwrap().unwrap();
        assert_eq!(order.restrictions[1..], order.facets[1..]);
    }

    #[test]
    fn non_pure_search_orders_by_size() {
        // A triangle with a dangling edge is shellable only triangle first.
        let c = complex(&["a", "b", "c", "d"], &["abc", "cd"]);
        let abc = Face::from_bits(0b0111);
        let cd = Face::from_bits(0b1100);
        assert_eq!(c.is_shelling_order(&[abc, cd]), Ok(true));
        assert_eq!(c.is_shelling_order(&[cd, abc]), Ok(false));
        let order = c
            .shelling_order(&SearchStrategy::Permutation(vec![1, 0]))
            .unwrap()
            .unwrap();
        assert_eq!(order.facets, vec![abc, cd]);
        assert_eq!(c.h_from_shelling(&[abc, cd]), Err(Error::NotPure));
    }

    #[test]
    fn bad_permutation() {
        let c = complex(&["a", "b", "c"], &["ab", "bc"]);
        assert_eq!(
            c.shelling_order(&SearchStrategy::Permutation(vec![0, 0])),
            Err(Error::InvalidPermutation(vec![0, 0], 2))
        );
    }

    #[test]
    fn void_is_rejected() {
        let vs = Arc::new(VertexSet::new(["a"]).unwrap());
        let void = SimplicialComplex::from_facets(vs, vec![]).unwrap();
        assert_eq!(void.is_shellable(), Err(Error::VoidComplex));
    }
}
