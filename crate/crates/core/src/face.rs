//! Faces as bit-subsets of a labelled vertex set.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex set; every face fits in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex positions, stored as a bit mask (bit `i` is vertex `i`).
///
/// Faces are ordered by cardinality first and bit pattern second, which is
/// the canonical order used whenever faces are listed.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The face `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        Face(1u64 << v)
    }

    /// Builds a face from vertex positions. Positions must be below 64.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::InvalidVertex(v));
            }
            bits |= 1u64 << v;
        }
        Ok(Face(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|self| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn without(self, v: usize) -> Face {
        self.difference(Face::singleton(v))
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    /// Largest vertex position in the face.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertex positions in ascending order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Facet sort key: cardinality descending, then bit pattern ascending.
    pub(crate) fn facet_order(a: &Face, b: &Face) -> Ordering {
        b.len().cmp(&a.len()).then(a.0.cmp(&b.0))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl FromIterator<usize> for Face {
    /// Panics on positions >= 64; use [`Face::from_vertices`] for checked input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Face::from_vertices(iter).expect("vertex position out of range")
    }
}

#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration in increasing bit-pattern order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let current = self.next?;
        self.next = if current == self.mask {
            None
        } else {
            Some(current.wrapping_sub(self.mask) & self.mask)
        };
        Some(Face(current))
    }
}

/// Ordered, distinct vertex labels with a reverse index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(VertexSet { labels, index })
    }

    /// Vertices labelled `0`, `1`, ..., `n-1`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).map(String::as_str)
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The face containing every vertex.
    pub fn full_face(&self) -> Face {
        Face::full(self.len())
    }

    pub fn contains_face(&self, face: Face) -> bool {
        face.is_subset(self.full_face())
    }

    /// Resolves labels into a face; duplicates collapse.
    pub fn face<I, S>(&self, labels: I) -> Result<Face>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut face = Face::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let v = self
                .position(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            face = face.with(v);
        }
        Ok(face)
    }

    /// Labels of the face's vertices in vertex order.
    pub fn face_labels(&self, face: Face) -> Vec<&str> {
        face.vertices().filter_map(|v| self.label(v)).collect()
    }

    pub fn vertex_labels(&self, vertices: &[usize]) -> Vec<&str> {
        vertices.iter().filter_map(|&v| self.label(v)).collect()
    }
}
