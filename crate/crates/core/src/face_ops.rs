//! Link and face deletion.
//!
//! Both constructions keep the parent vertex set, so faces stay comparable
//! across a decomposition recursion.

use crate::complex::{maximalize, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;

impl SimplicialComplex {
    /// `{ τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }`.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace);
        }
        Ok(SimplicialComplex::from_canonical(
            self.vertex_set().clone(),
            link_facets(self.facets(), sigma),
        ))
    }

    /// `{ τ ∈ Δ : σ ⊄ τ }`.
    pub fn face_deletion(&self, sigma: Face) -> Result<SimplicialComplex> {
        if sigma.is_empty() {
            return Err(Error::EmptyFace);
        }
        if !self.contains(sigma) {
            return Err(Error::NotAFace);
        }
        Ok(SimplicialComplex::from_canonical(
            self.vertex_set().clone(),
            deletion_facets(self.facets(), sigma),
        ))
    }
}

pub(crate) fn link_facets(facets: &[Face], sigma: Face) -> Vec<Face> {
    maximalize(
        facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect(),
    )
}

pub(crate) fn deletion_facets(facets: &[Face], sigma: Face) -> Vec<Face> {
    let mut raw = Vec::with_capacity(facets.len() + sigma.len());
    for &f in facets {
        if sigma.is_subset(f) {
            raw.extend(sigma.vertices().map(|x| f.without(x)));
        } else {
            raw.push(f);
        }
    }
    maximalize(raw)
}

/// Every facet of the deletion of `sigma` is already a facet of `facets`.
///
/// The only candidates for new facets are `F \ x` with `σ ⊆ F`, `x ∈ σ`;
/// such a set is covered by a face avoiding `σ` iff another facet contains it.
pub(crate) fn is_shedding(facets: &[Face], sigma: Face) -> bool {
    facets.iter().filter(|f| sigma.is_subset(**f)).all(|&f| {
        sigma.vertices().all(|x| {
            let truncated = f.without(x);
            facets.iter().any(|&g| g != f && truncated.is_subset(g))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::VertexSet;
    use std::sync::Arc;

    #[test]
    fn link_of_empty_face_is_identity() {
        let vs = Arc::new(VertexSet::new(["a", "b", "c"]).unwrap());
        let c = SimplicialComplex::from_facets(
            vs,
            vec![Face::from_bits(0b011), Face::from_bits(0b100)],
        )
        .unwrap();
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);
    }

    #[test]
    fn errors() {
        let vs = Arc::new(VertexSet::new(["a", "b", "c"]).unwrap());
        let c = SimplicialComplex::from_facets(vs, vec![Face::from_bits(0b011)]).unwrap();
        assert_eq!(c.link(Face::from_bits(0b100)), Err(Error::NotAFace));
        assert_eq!(c.face_deletion(Face::EMPTY), Err(Error::EmptyFace));
        assert_eq!(
            c.face_deletion(Face::from_bits(0b101)),
            Err(Error::NotAFace)
        );
    }
}
