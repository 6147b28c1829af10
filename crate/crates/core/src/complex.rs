//! Canonical facet-list representation of finite simplicial complexes.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::face::{Face, VertexSet};

/// Which of the three structural cases a complex falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// No faces at all, not even the empty face.
    Void,
    /// Only the empty face.
    Irrelevant,
    /// At least one nonempty face.
    Proper,
}

/// A simplicial complex stored as its inclusion-maximal faces.
///
/// Facets are kept sorted by cardinality descending, then bit pattern
/// ascending, so two complexes on the same vertex set are equal exactly when
/// their facet lists are.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Arc<VertexSet>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex generated by `raw`: its inclusion-maximal members.
    pub fn from_facets(vertices: impl Into<Arc<VertexSet>>, raw: Vec<Face>) -> Result<Self> {
        let vertices = vertices.into();
        let full = vertices.full_face();
        if let Some(bad) = raw.iter().find(|f| !f.is_subset(full)) {
            let v = bad.difference(full).vertices().next().unwrap_or_default();
            return Err(Error::InvalidVertex(v));
        }
        Ok(Self::from_canonical(vertices, maximalize(raw)))
    }

    /// The complex of all subsets of `vertices` that contain none of `nonfaces`.
    pub fn from_nonfaces(vertices: impl Into<Arc<VertexSet>>, nonfaces: &[Face]) -> Result<Self> {
        let vertices = vertices.into();
        let full = vertices.full_face();
        let mut facets = vec![full];
        for &nonface in nonfaces {
            if nonface.is_empty() {
                return Err(Error::InvalidNonface);
            }
            if !nonface.is_subset(full) {
                let v = nonface
                    .difference(full)
                    .vertices()
                    .next()
                    .unwrap_or_default();
                return Err(Error::InvalidVertex(v));
            }
            let mut next = Vec::with_capacity(facets.len());
            for facet in facets {
                if nonface.is_subset(facet) {
                    next.extend(nonface.vertices().map(|x| facet.without(x)));
                } else {
                    next.push(facet);
                }
            }
            facets = maximalize(next);
        }
        Ok(Self::from_canonical(vertices, facets))
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: impl Into<Arc<VertexSet>>) -> Self {
        let vertices = vertices.into();
        let full = vertices.full_face();
        Self::from_canonical(vertices, vec![full])
    }

    /// `facets` must already be a canonical antichain on `vertices`.
    pub(crate) fn from_canonical(vertices: Arc<VertexSet>, facets: Vec<Face>) -> Self {
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub(crate) fn vertex_set(&self) -> &Arc<VertexSet> {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Irrelevant,
            _ => ComplexKind::Proper,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub(crate) fn require_non_void(&self) -> Result<()> {
        if self.is_void() {
            Err(Error::VoidComplex)
        } else {
            Ok(())
        }
    }

    /// Whether `face` belongs to the complex.
    pub fn contains(&self, face: Face) -> bool {
        contains_face(&self.facets, face)
    }

    pub fn dimension(&self) -> Result<isize> {
        self.facets
            .first()
            .map(|f| f.dim())
            .ok_or(Error::VoidComplex)
    }

    pub fn is_pure(&self) -> Result<bool> {
        self.require_non_void()?;
        Ok(is_pure_facets(&self.facets))
    }

    /// A single facet, including the irrelevant complex `{∅}`.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Face counts `(f_{-1}, f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Result<FVector> {
        self.require_non_void()?;
        let d = self.facets[0].len();
        let mut seen = HashSet::new();
        for facet in &self.facets {
            seen.extend(facet.subsets());
        }
        let mut f = vec![0u64; d + 1];
        for face in seen {
            f[face.len()] += 1;
        }
        Ok(FVector(f))
    }

    /// `h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}` for `0 <= j <= d`.
    pub fn h_vector(&self) -> Result<HVector> {
        Ok(self.f_vector()?.to_h_vector())
    }

    /// Nonempty faces of dimension at most `k`, in canonical face order.
    pub fn all_faces(&self, k: usize) -> Result<Vec<Face>> {
        self.require_non_void()?;
        Ok(faces_up_to(&self.facets, k + 1))
    }

    /// Applies a vertex relabelling: position `v` moves to `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertices.len();
        if !is_permutation(perm, n) {
            return Err(Error::InvalidPermutation(perm.to_vec(), n));
        }
        let mut labels = vec![String::new(); n];
        for (v, label) in self.vertices.labels().iter().enumerate() {
            labels[perm[v]] = label.clone();
        }
        let vertices = VertexSet::new(labels)?;
        let facets = self
            .facets
            .iter()
            .map(|f| f.vertices().map(|v| perm[v]).collect())
            .collect();
        Self::from_facets(vertices, facets)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facets
            .iter()
            .map(|&face| self.vertices.face_labels(face).concat())
            .collect();
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices.labels())
            .field("facets", &facets)
            .finish()
    }
}

/// `(f_{-1}, ..., f_{d-1})`; index `i` counts faces with `i` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<u64>);

/// `(h_0, ..., h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(pub Vec<i64>);

impl FVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn to_h_vector(&self) -> HVector {
        let d = self.0.len() - 1;
        let h = (0..=d)
            .map(|j| {
                let mut sum: i128 = 0;
                for i in 0..=j {
                    let term = binomial(d - i, j - i) as i128 * self.0[i] as i128;
                    if (j - i) % 2 == 0 {
                        sum += term;
                    } else {
                        sum -= term;
                    }
                }
                i64::try_from(sum).expect("h-vector entry exceeds i64")
            })
            .collect();
        HVector(h)
    }
}

impl HVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&h| h >= 0)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Inclusion-maximal members of `raw`, deduplicated, in canonical facet order.
pub(crate) fn maximalize(mut raw: Vec<Face>) -> Vec<Face> {
    raw.sort_by(Face::facet_order);
    raw.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(raw.len());
    for face in raw {
        // Earlier faces are at least as large, so only they can contain `face`.
        if !kept.iter().any(|k| face.is_subset(*k)) {
            kept.push(face);
        }
    }
    kept
}

pub(crate) fn contains_face(facets: &[Face], face: Face) -> bool {
    facets.iter().any(|f| face.is_subset(*f))
}

pub(crate) fn is_pure_facets(facets: &[Face]) -> bool {
    facets.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Nonempty faces with at most `max_len` vertices, canonical face order.
pub(crate) fn faces_up_to(facets: &[Face], max_len: usize) -> Vec<Face> {
    let mut faces = BTreeSet::new();
    for facet in facets {
        faces.extend(
            facet
                .subsets()
                .filter(|s| !s.is_empty() && s.len() <= max_len),
        );
    }
    faces.into_iter().collect()
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    perm.iter()
        .all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
}
