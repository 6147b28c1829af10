//! Brute-force reference computations used by the test suites.
//!
//! Everything here works on explicit sets of faces obtained by scanning all
//! `2^n` subsets of the vertex set, and never calls the decision procedures
//! of `sdecomp-core`. Only construction and accessors are borrowed from it.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use sdecomp_core::{Face, SimplicialComplex, VertexSet};

/// Every face of the complex, as bit patterns, by scanning all subsets.
pub fn faces(c: &SimplicialComplex) -> BTreeSet<u64> {
    let n = c.vertices().len();
    assert!(n <= 20, "brute force limited to small vertex sets");
    (0..1u64 << n)
        .filter(|&s| c.facets().iter().any(|f| s & !f.bits() == 0))
        .collect()
}

/// Inclusion-maximal members of a face set.
pub fn maximal(faces: &BTreeSet<u64>) -> BTreeSet<u64> {
    faces
        .iter()
        .copied()
        .filter(|&s| !faces.iter().any(|&t| t != s && s & !t == 0))
        .collect()
}

pub fn facet_bits(c: &SimplicialComplex) -> BTreeSet<u64> {
    c.facets().iter().map(|f| f.bits()).collect()
}

/// `f[i]` = number of faces with `i` vertices, up to the largest face.
pub fn f_vector(c: &SimplicialComplex) -> Vec<u64> {
    let all = faces(c);
    let d = all
        .iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut f = vec![0u64; d + 1];
    for s in all {
        f[s.count_ones() as usize] += 1;
    }
    f
}

/// Coefficients of `sum_i f_{i-1} t^i (1-t)^{d-i}`.
pub fn h_vector(f: &[u64]) -> Vec<i64> {
    let d = f.len() - 1;
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        // (1 - t)^(d - i) by repeated multiplication.
        let mut poly = vec![1i64];
        for _ in 0..d - i {
            let mut next = vec![0i64; poly.len() + 1];
            for (e, &c) in poly.iter().enumerate() {
                next[e] += c;
                next[e + 1] -= c;
            }
            poly = next;
        }
        for (e, &c) in poly.iter().enumerate() {
            h[i + e] += c * fi as i64;
        }
    }
    h
}

/// Minimal subsets of the vertex set that are not faces.
pub fn minimal_nonfaces(c: &SimplicialComplex) -> BTreeSet<u64> {
    let all = faces(c);
    let n = c.vertices().len();
    (1..1u64 << n)
        .filter(|s| !all.contains(s))
        .filter(|&s| {
            (0..n)
                .filter(|v| s >> v & 1 == 1)
                .all(|v| all.contains(&(s & !(1 << v))))
        })
        .collect()
}

/// Faces of the complex defined by forbidding `nonfaces`.
pub fn faces_avoiding(n: usize, nonfaces: &[u64]) -> BTreeSet<u64> {
    (0..1u64 << n)
        .filter(|&s| nonfaces.iter().all(|&m| m & !s != 0))
        .collect()
}

/// `{ V \ F : F ⊆ V not a face }`.
pub fn alexander_dual_faces(c: &SimplicialComplex) -> BTreeSet<u64> {
    let all = faces(c);
    let n = c.vertices().len();
    let full = (1u64 << n) - 1;
    (0..1u64 << n)
        .filter(|s| !all.contains(s))
        .map(|s| full & !s)
        .collect()
}

pub fn link_faces(faces: &BTreeSet<u64>, sigma: u64) -> BTreeSet<u64> {
    faces
        .iter()
        .copied()
        .filter(|&t| t & sigma == 0 && faces.contains(&(t | sigma)))
        .collect()
}

pub fn deletion_faces(faces: &BTreeSet<u64>, sigma: u64) -> BTreeSet<u64> {
    faces.iter().copied().filter(|&t| sigma & !t != 0).collect()
}

/// Faces added by `facet` given the earlier facets have a unique minimal
/// element; returns it.
pub fn unique_minimal_new_face(earlier: &[u64], facet: u64) -> Option<u64> {
    let new: Vec<u64> = subsets(facet)
        .filter(|&s| !earlier.iter().any(|&g| s & !g == 0))
        .collect();
    let minimal: Vec<u64> = new
        .iter()
        .copied()
        .filter(|&s| !new.iter().any(|&t| t != s && t & !s == 0))
        .collect();
    match minimal.as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}

/// The faces of `facet` lying in earlier facets form a pure complex of
/// dimension `|facet| - 2`.
pub fn intersection_is_pure_ridge(earlier: &[u64], facet: u64) -> bool {
    let old: BTreeSet<u64> = subsets(facet)
        .filter(|&s| earlier.iter().any(|&g| s & !g == 0))
        .collect();
    let ridge = (facet.count_ones() as usize).saturating_sub(1);
    maximal(&old)
        .iter()
        .all(|m| m.count_ones() as usize == ridge)
}

/// Step check appropriate for the purity of `facets`.
pub fn is_shelling(facets: &[u64]) -> bool {
    let pure = facets
        .windows(2)
        .all(|w| w[0].count_ones() == w[1].count_ones());
    (1..facets.len()).all(|i| {
        if pure {
            unique_minimal_new_face(&facets[..i], facets[i]).is_some()
        } else {
            intersection_is_pure_ridge(&facets[..i], facets[i])
        }
    })
}

/// Shellability by trying every facet permutation.
pub fn is_shellable(c: &SimplicialComplex) -> bool {
    let facets: Vec<u64> = c.facets().iter().map(|f| f.bits()).collect();
    permutations(&facets).any(|p| is_shelling(&p))
}

/// Restriction face sizes tabulated into an h-vector, via brute-force new
/// face enumeration.
pub fn h_from_order(order: &[u64]) -> Vec<i64> {
    let d = order.first().map_or(0, |f| f.count_ones() as usize);
    let mut h = vec![0i64; d + 1];
    for i in 0..order.len() {
        let r = unique_minimal_new_face(&order[..i], order[i]).expect("shelling step");
        h[r.count_ones() as usize] += 1;
    }
    h
}

/// Each colon ideal `(g_1..g_{i-1}) : g_i` is generated by variables: its
/// minimal generators `g_j \ g_i` all have degree one.
pub fn has_linear_quotients(gens: &[u64]) -> bool {
    (1..gens.len()).all(|i| {
        let colon: BTreeSet<u64> = gens[..i].iter().map(|g| g & !gens[i]).collect();
        colon
            .iter()
            .filter(|&&s| !colon.iter().any(|&t| t != s && t & !s == 0))
            .all(|s| s.count_ones() == 1)
    })
}

/// Every facet of the deletion of `sigma` is a facet of the complex,
/// computed on explicit face sets.
pub fn is_shedding(faces: &BTreeSet<u64>, sigma: u64) -> bool {
    let facets = maximal(faces);
    maximal(&deletion_faces(faces, sigma))
        .iter()
        .all(|g| facets.contains(g))
}

/// BW vertex condition: no facet of `lk(v)` is a facet of `fdel(v)`.
pub fn is_shedding_vertex_bw(faces: &BTreeSet<u64>, v: usize) -> bool {
    let sigma = 1u64 << v;
    let link = maximal(&link_faces(faces, sigma));
    let deletion = maximal(&deletion_faces(faces, sigma));
    link.is_disjoint(&deletion)
}

/// k-decomposability straight from the recursive definition on face sets.
pub fn is_k_decomposable(c: &SimplicialComplex, k: usize) -> bool {
    let mut memo = HashMap::new();
    k_decomposable(&faces(c), k, &mut memo)
}

fn k_decomposable(
    faces: &BTreeSet<u64>,
    k: usize,
    memo: &mut HashMap<BTreeSet<u64>, bool>,
) -> bool {
    if maximal(faces).len() <= 1 {
        return true;
    }
    if let Some(&known) = memo.get(faces) {
        return known;
    }
    let result = faces
        .iter()
        .copied()
        .filter(|s| *s != 0 && s.count_ones() as usize <= k + 1)
        .any(|s| {
            is_shedding(faces, s)
                && k_decomposable(&link_faces(faces, s), k, memo)
                && k_decomposable(&deletion_faces(faces, s), k, memo)
        });
    memo.insert(faces.clone(), result);
    result
}

/// Submasks of `mask`, including 0 and `mask`.
pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let n = mask.count_ones();
    let bits: Vec<u64> = (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| 1u64 << b)
        .collect();
    (0..1u64 << n).map(move |i| {
        bits.iter()
            .enumerate()
            .filter(|(j, _)| i >> j & 1 == 1)
            .fold(0, |acc, (_, b)| acc | b)
    })
}

/// All orderings of `items` (Heap's algorithm, eagerly collected).
pub fn permutations(items: &[u64]) -> impl Iterator<Item = Vec<u64>> {
    fn heap(k: usize, a: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    let mut a = items.to_vec();
    let mut out = Vec::new();
    heap(a.len(), &mut a, &mut out);
    out.into_iter()
}

/// Random complex on `n` numbered vertices with up to `max_facets`
/// generating faces; pure complexes draw all faces with one common size.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    max_facets: usize,
    pure: bool,
) -> SimplicialComplex {
    let vs = Arc::new(VertexSet::numbered(n).unwrap());
    let count = rng.gen_range(1..=max_facets);
    let size = rng.gen_range(1..=n);
    let mut raw = Vec::with_capacity(count);
    for _ in 0..count {
        let len = if pure { size } else { rng.gen_range(1..=n) };
        let mut vertices: Vec<usize> = (0..n).collect();
        vertices.shuffle(rng);
        raw.push(vertices[..len].iter().copied().collect::<Face>());
    }
    SimplicialComplex::from_facets(vs, raw).unwrap()
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
