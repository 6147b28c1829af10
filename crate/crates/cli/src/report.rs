use serde::Serialize;

use sdecomp_core::{Face, Result, SimplicialComplex, VertexSet};

/// Structured output of one invocation. Fields serialize in declaration
/// order; optional verdicts and witnesses are omitted when absent.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub name: String,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub pure: bool,
    pub dimension: isize,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shellable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_decomposable: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub k_decomposable: Vec<KVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shelling_order: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restriction_faces: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_quotients: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_nonfaces: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shedding_faces: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shedding_vertices: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KVerdict {
    pub k: usize,
    pub decomposable: bool,
}

impl ComplexReport {
    /// Invariants of `complex`; fails on the void complex.
    pub fn new(name: impl Into<String>, complex: &SimplicialComplex) -> Result<Self> {
        let vs = complex.vertices();
        Ok(ComplexReport {
            name: name.into(),
            vertices: vs.labels().to_vec(),
            facets: label_lists(vs, complex.facets()),
            pure: complex.is_pure()?,
            dimension: complex.dimension()?,
            f_vector: complex.f_vector()?.0,
            h_vector: complex.h_vector()?.0,
            shellable: None,
            vertex_decomposable: None,
            k_decomposable: Vec::new(),
            shelling_order: None,
            restriction_faces: None,
            linear_quotients: None,
            minimal_nonfaces: None,
            shedding_faces: None,
            shedding_vertices: None,
        })
    }
}

fn labels(vs: &VertexSet, face: Face) -> Vec<String> {
    vs.face_labels(face).into_iter().map(String::from).collect()
}

pub(crate) fn label_lists(vs: &VertexSet, faces: &[Face]) -> Vec<Vec<String>> {
    faces.iter().map(|&f| labels(vs, f)).collect()
}
