//! Shedding faces, vertex-decomposability and k-decomposability.
//!
//! A face `σ` is a shedding face when every facet of `fdel(Δ, σ)` is a facet
//! of `Δ`. `Δ` is k-decomposable when it is a simplex, or some shedding face
//! of dimension at most `k` has a k-decomposable link and deletion;
//! vertex-decomposability is the case `k = 0`. For pure complexes the
//! shedding condition is exactly the requirement that the deletion stay pure
//! of the same dimension.

use std::collections::HashMap;

use crate::complex::{faces_up_to, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::face_ops::{deletion_facets, is_shedding, link_facets};

impl SimplicialComplex {
    pub fn is_vertex_decomposable(&self) -> Result<bool> {
        self.is_k_decomposable(0)
    }

    pub fn is_k_decomposable(&self, k: usize) -> Result<bool> {
        self.require_non_void()?;
        Ok(Decomposer::new(k).decomposable(self.facets()))
    }

    /// Whether every facet of the deletion of `sigma` is a facet of `self`.
    pub fn is_shedding_face(&self, sigma: Face) -> Result<bool> {
        if sigma.is_empty() {
            return Err(Error::EmptyFace);
        }
        if !self.contains(sigma) {
            return Err(Error::NotAFace);
        }
        Ok(is_shedding(self.facets(), sigma))
    }

    /// `v` is a shedding face whose link and deletion are both
    /// vertex-decomposable.
    pub fn is_shedding_vertex(&self, v: usize) -> Result<bool> {
        if v >= self.vertices().len() {
            return Err(Error::InvalidVertex(v));
        }
        let sigma = Face::singleton(v);
        if !self.contains(sigma) {
            return Err(Error::NotAFace);
        }
        Ok(Decomposer::new(0).witnesses(self.facets(), sigma))
    }

    /// Faces of dimension at most `k` passing [`Self::is_shedding_face`],
    /// in canonical face order.
    pub fn shedding_faces(&self, k: usize) -> Result<Vec<Face>> {
        let facets = self.facets();
        Ok(self
            .all_faces(k)?
            .into_iter()
            .filter(|&sigma| is_shedding(facets, sigma))
            .collect())
    }

    /// Vertices passing [`Self::is_shedding_vertex`], ascending.
    pub fn shedding_vertices(&self) -> Result<Vec<usize>> {
        let mut decomposer = Decomposer::new(0);
        let facets = self.facets();
        Ok(self
            .all_faces(0)?
            .into_iter()
            .filter(|&v| decomposer.witnesses(facets, v))
            .flat_map(Face::vertices)
            .collect())
    }
}

/// Memoized recursion for one top-level query.
struct Decomposer {
    max_len: usize,
    memo: HashMap<Vec<Face>, bool>,
}

impl Decomposer {
    fn new(k: usize) -> Self {
        Decomposer {
            max_len: k + 1,
            memo: HashMap::new(),
        }
    }

    // Facet lists are canonical, so they serve directly as memo keys.
    fn decomposable(&mut self, facets: &[Face]) -> bool {
        if facets.len() <= 1 {
            return true;
        }
        if let Some(&known) = self.memo.get(facets) {
            return known;
        }
        let result = faces_up_to(facets, self.max_len)
            .into_iter()
            .any(|sigma| self.witnesses(facets, sigma));
        self.memo.insert(facets.to_vec(), result);
        result
    }

    fn witnesses(&mut self, facets: &[Face], sigma: Face) -> bool {
        is_shedding(facets, sigma)
            && self.decomposable(&link_facets(facets, sigma))
            && self.decomposable(&deletion_facets(facets, sigma))
    }
}
