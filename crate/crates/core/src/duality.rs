//! Stanley–Reisner combinatorics: minimal nonfaces, Alexander duality and
//! linear quotients of squarefree monomial ideals.
//!
//! A squarefree monomial is identified with its support, so an ideal is an
//! ordered list of faces over a ground vertex set.

use std::sync::Arc;

use crate::complex::{contains_face, is_permutation, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, VertexSet};
use crate::transversal::{minimal_members, unique_minimal_transversal};

/// Ordered generators of a squarefree monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    ground: Arc<VertexSet>,
    gens: Vec<Face>,
}

impl MonomialSet {
    pub fn new(ground: impl Into<Arc<VertexSet>>, gens: Vec<Face>) -> Result<Self> {
        let ground = ground.into();
        let full = ground.full_face();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(full)) {
            let v = bad.difference(full).vertices().next().unwrap_or_default();
            return Err(Error::InvalidVertex(v));
        }
        Ok(MonomialSet { ground, gens })
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn gens(&self) -> &[Face] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Supports of the minimal generators of `(g_1, ..., g_{i-1}) : (g_i)`.
    ///
    /// For squarefree monomials the colon ideal is generated by the
    /// monomials with supports `g_j \ g_i`.
    pub fn colon_generators(&self, i: usize) -> Vec<Face> {
        let gi = self.gens[i];
        let diffs: Vec<Face> = self.gens[..i].iter().map(|g| g.difference(gi)).collect();
        minimal_members(&diffs)
    }

    /// Each successive colon ideal is generated by variables.
    ///
    /// A generator dividing the current one makes the colon ideal the unit
    /// ideal, which is reported as not linear.
    pub fn has_linear_quotients(&self) -> bool {
        (1..self.gens.len()).all(|i| {
            let gi = self.gens[i];
            let diffs: Vec<Face> = self.gens[..i].iter().map(|g| g.difference(gi)).collect();
            unique_minimal_transversal(&diffs).is_some()
        })
    }
}

impl SimplicialComplex {
    /// Generators of the Stanley–Reisner ideal, in canonical face order.
    ///
    /// Built level by level: a `k`-set is a minimal nonface iff it is not a
    /// face while all of its `(k-1)`-subsets are.
    pub fn minimal_nonfaces(&self) -> Result<MonomialSet> {
        self.require_non_void()?;
        let n = self.vertices().len();
        let facets = self.facets();
        let mut level = vec![Face::EMPTY];
        let mut nonfaces = Vec::new();
        while !level.is_empty() {
            let mut next = Vec::new();
            for &base in &level {
                let start = base.max_vertex().map_or(0, |m| m + 1);
                for v in start..n {
                    let candidate = base.with(v);
                    if contains_face(facets, candidate) {
                        next.push(candidate);
                    } else if candidate
                        .vertices()
                        .all(|x| contains_face(facets, candidate.without(x)))
                    {
                        nonfaces.push(candidate);
                    }
                }
            }
            level = next;
        }
        nonfaces.sort();
        MonomialSet::new(self.vertex_set().clone(), nonfaces)
    }

    /// `Δ∨ = { V \ F : F ∉ Δ }`, whose facets are the complements of the
    /// minimal nonfaces of `Δ`.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let nonfaces = self.minimal_nonfaces()?;
        if nonfaces.is_empty() {
            return Err(Error::VoidDual);
        }
        let full = self.vertices().full_face();
        let facets = nonfaces.gens.iter().map(|g| full.difference(*g)).collect();
        SimplicialComplex::from_facets(self.vertex_set().clone(), facets)
    }

    /// Generators of the Stanley–Reisner ideal of `Δ∨`: complements of the
    /// facets, in facet-list order.
    pub fn dual_ideal_generators(&self) -> Result<MonomialSet> {
        self.dual_ideal_generators_in(self.facets())
    }

    /// Complements of `order`, which must be a permutation of the facets.
    pub fn dual_ideal_generators_in(&self, order: &[Face]) -> Result<MonomialSet> {
        if self.kind() != crate::ComplexKind::Proper {
            return Err(Error::InvalidComplex);
        }
        self.check_facet_order(order)?;
        let full = self.vertices().full_face();
        let gens = order.iter().map(|f| full.difference(*f)).collect();
        MonomialSet::new(self.vertex_set().clone(), gens)
    }

    /// Linear-quotient variables read off a facet order.
    ///
    /// Step `i` (for `i >= 1`) collects, over `j < i` in order, every `x` for
    /// which some `k < i` has `F_i \ F_k = {x}` with `x ∈ F_i \ F_j`.
    /// Duplicates are dropped keeping first occurrences, so each step lists
    /// vertex positions in discovery order.
    pub fn linear_quotients_from_shelling(&self, order: &[Face]) -> Result<Vec<Vec<usize>>> {
        self.check_facet_order(order)?;
        let mut steps = Vec::with_capacity(order.len().saturating_sub(1));
        for i in 1..order.len() {
            let fi = order[i];
            let mut found: Vec<usize> = Vec::new();
            for fj in &order[..i] {
                let outside_j = fi.difference(*fj);
                for fk in &order[..i] {
                    let outside_k = fi.difference(*fk);
                    if outside_k.len() == 1 && outside_k.is_subset(outside_j) {
                        let x = outside_k.vertices().next().expect("singleton");
                        if !found.contains(&x) {
                            found.push(x);
                        }
                    }
                }
            }
            steps.push(found);
        }
        Ok(steps)
    }

    /// `order` lists every facet exactly once.
    pub(crate) fn check_facet_order(&self, order: &[Face]) -> Result<()> {
        let facets = self.facets();
        if order.len() != facets.len() {
            return Err(Error::InvalidOrder);
        }
        let positions: Option<Vec<usize>> = order
            .iter()
            .map(|f| facets.iter().position(|g| g == f))
            .collect();
        match positions {
            Some(p) if is_permutation(&p, facets.len()) => Ok(()),
            _ => Err(Error::InvalidOrder),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Arc<VertexSet> {
        Arc::new(VertexSet::new(["a", "b", "c", "d"]).unwrap())
    }

    #[test]
    fn linear_quotient_examples() {
        let vs = abcd();
        let ab = vs.face(["a", "b"]).unwrap();
        let cd = vs.face(["c", "d"]).unwrap();
        assert!(!MonomialSet::new(vs.clone(), vec![ab, cd])
            .unwrap()
            .has_linear_quotients());
        assert!(!MonomialSet::new(vs.clone(), vec![cd, ab])
            .unwrap()
            .has_linear_quotients());
        assert!(MonomialSet::new(vs.clone(), vec![ab])
            .unwrap()
            .has_linear_quotients());
        let bc = vs.face(["b", "c"]).unwrap();
        let m = MonomialSet::new(vs, vec![ab, bc, cd]).unwrap();
        assert!(m.has_linear_quotients());
        assert_eq!(m.colon_generators(2), vec![Face::singleton(1)]);
    }

    #[test]
    fn comparable_generators_are_not_linear() {
        let vs = abcd();
        let a = vs.face(["a"]).unwrap();
        let ab = vs.face(["a", "b"]).unwrap();
        assert!(!MonomialSet::new(vs, vec![a, ab])
            .unwrap()
            .has_linear_quotients());
    }

    #[test]
    fn dual_generators_need_proper_complex() {
        let vs = abcd();
        let irr = SimplicialComplex::from_facets(vs, vec![Face::EMPTY]).unwrap();
        assert_eq!(irr.dual_ideal_generators(), Err(Error::InvalidComplex));
        // The irrelevant complex's dual is the boundary of the full simplex.
        let dual = irr.alexander_dual().unwrap();
        assert_eq!(dual.facets().len(), 4);
        assert!(dual.facets().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn order_must_be_a_permutation() {
        let vs = abcd();
        let ab = vs.face(["a", "b"]).unwrap();
        let cd = vs.face(["c", "d"]).unwrap();
        let c = SimplicialComplex::from_facets(vs, vec![ab, cd]).unwrap();
        assert_eq!(
            c.linear_quotients_from_shelling(&[ab, ab]),
            Err(Error::InvalidOrder)
        );
        assert_eq!(
            c.linear_quotients_from_shelling(&[ab]),
            Err(Error::InvalidOrder)
        );
        assert_eq!(
            c.linear_quotients_from_shelling(&[cd, ab]).unwrap(),
            vec![Vec::<usize>::new()]
        );
    }
}
