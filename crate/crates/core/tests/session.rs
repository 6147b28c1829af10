//! The worked example: the complex D on a..g given by the nonfaces
//! ab, ac, bc, cd, de, df, fg, its shellings, and its chain of links.

use std::sync::Arc;

use sdecomp_core::{ComplexKind, Error, Face, SearchStrategy, SimplicialComplex, VertexSet};

fn ground() -> Arc<VertexSet> {
    Arc::new(VertexSet::new(["a", "b", "c", "d", "e", "f", "g"]).unwrap())
}

fn face(vs: &VertexSet, s: &str) -> Face {
    vs.face(s.chars().map(String::from)).unwrap()
}

fn faces(vs: &VertexSet, list: &str) -> Vec<Face> {
    list.split_whitespace().map(|s| face(vs, s)).collect()
}

fn names(vs: &VertexSet, list: &[Face]) -> Vec<String> {
    list.iter().map(|&f| vs.face_labels(f).concat()).collect()
}

fn sorted_names(vs: &VertexSet, list: &[Face]) -> Vec<String> {
    let mut v = names(vs, list);
    v.sort();
    v
}

const O1: &str = "ceg beg aeg bdg adg cef bef aef";
const O2: &str = "beg aeg adg bef cef aef ceg bdg";
const O3: &str = "bdg beg aeg ceg adg cef bef aef";

fn d() -> SimplicialComplex {
    let vs = ground();
    let nonfaces = faces(&vs, "ab ac bc cd de df fg");
    SimplicialComplex::from_nonfaces(vs, &nonfaces).unwrap()
}

fn quotient_labels(vs: &VertexSet, steps: &[Vec<usize>]) -> Vec<Vec<String>> {
    steps
        .iter()
        .map(|s| vs.vertex_labels(s).into_iter().map(String::from).collect())
        .collect()
}

fn expect_quotients(expected: &str) -> Vec<Vec<String>> {
    expected
        .split('|')
        .map(|s| s.split_whitespace().map(String::from).collect())
        .collect()
}

#[test]
fn nonfaces_and_facets_agree() {
    let vs = ground();
    let from_facets = SimplicialComplex::from_facets(vs.clone(), faces(&vs, O1)).unwrap();
    let d = d();
    assert_eq!(d, from_facets);
    assert_eq!(d.kind(), ComplexKind::Proper);
    assert_eq!(d.is_pure(), Ok(true));
    assert_eq!(d.dimension(), Ok(2));
    assert!(!d.is_simplex());
    assert_eq!(
        names(&vs, d.minimal_nonfaces().unwrap().gens()),
        vec!["ab", "ac", "bc", "cd", "de", "df", "fg"]
    );
}

#[test]
fn enumerative_invariants() {
    let d = d();
    let f = d.f_vector().unwrap();
    assert_eq!(f.0, sdecomp_oracle::f_vector(&d));
    assert_eq!(f.0, vec![1, 7, 14, 8]);
    let h = d.h_vector().unwrap();
    assert_eq!(h.0, sdecomp_oracle::h_vector(&f.0));
    assert_eq!(h.0, vec![1, 4, 3, 0]);
    let vertices = d.all_faces(0).unwrap();
    assert_eq!(
        names(&ground(), &vertices),
        vec!["a", "b", "c", "d", "e", "f", "g"]
    );
}

#[test]
fn printed_shellings_are_valid() {
    let vs = ground();
    let d = d();
    for order in [O1, O2, O3] {
        assert_eq!(d.is_shelling_order(&faces(&vs, order)), Ok(true), "{order}");
    }
}

#[test]
fn linear_quotients_reproduce_session_output() {
    let vs = ground();
    let d = d();
    let cases = [
        (O1, "b|a|d|d a|f|f b|f a"),
        (O2, "a|d|f|c|f a|c g|d b"),
        (O3, "e|a|c|a d|f|f b|f a"),
    ];
    for (order, expected) in cases {
        let steps = d
            .linear_quotients_from_shelling(&faces(&vs, order))
            .unwrap();
        assert_eq!(
            quotient_labels(&vs, &steps),
            expect_quotients(expected),
            "{order}"
        );
    }
}

#[test]
fn restriction_faces_of_first_shelling() {
    let vs = ground();
    let d = d();
    let order = faces(&vs, O1);
    let restrictions = d.restriction_faces(&order).unwrap();
    let oracle: Vec<Face> = (0..order.len())
        .map(|i| {
            let earlier: Vec<u64> = order[..i].iter().map(|f| f.bits()).collect();
            Face::from_bits(
                sdecomp_oracle::unique_minimal_new_face(&earlier, order[i].bits()).unwrap(),
            )
        })
        .collect();
    assert_eq!(restrictions, oracle);
    assert_eq!(
        names(&vs, &restrictions),
        vec!["", "b", "a", "d", "ad", "f", "bf", "af"]
    );
    assert_eq!(d.h_from_shelling(&order).unwrap().0, vec![1, 4, 3, 0]);
}

#[test]
fn search_reproduces_printed_orders_from_printed_facet_list() {
    let vs = ground();
    let d = d();
    let base = faces(&vs, O1);
    let found = d
        .shelling_order_from(&base, &SearchStrategy::Default)
        .unwrap()
        .unwrap();
    assert_eq!(found.facets, base);
    let permuted = d
        .shelling_order_from(
            &base,
            &SearchStrategy::Permutation(vec![3, 2, 1, 0, 4, 5, 6, 7]),
        )
        .unwrap()
        .unwrap();
    assert_eq!(permuted.facets, faces(&vs, O3));
    let default = d.shelling_order(&SearchStrategy::Default).unwrap().unwrap();
    assert_eq!(d.is_shelling_order(&default.facets), Ok(true));
    assert_eq!(default.h_vector().0, vec![1, 4, 3, 0]);
}

#[test]
fn random_strategy_is_reproducible() {
    let d = d();
    let a = d
        .shelling_order(&SearchStrategy::Random { seed: 42 })
        .unwrap();
    let b = d
        .shelling_order(&SearchStrategy::Random { seed: 42 })
        .unwrap();
    assert_eq!(a, b);
    assert_eq!(d.is_shelling_order(&a.unwrap().facets), Ok(true));
}

#[test]
fn dual_ideal_in_shelling_order_has_linear_quotients() {
    let vs = ground();
    let d = d();
    let gens = d.dual_ideal_generators_in(&faces(&vs, O1)).unwrap();
    assert_eq!(
        names(&vs, gens.gens()),
        vec!["abdf", "acdf", "bcdf", "acef", "bcef", "abdg", "acdg", "bcdg"]
    );
    assert!(gens.has_linear_quotients());
    assert_eq!(names(&vs, &gens.colon_generators(1)), vec!["b"]);
}

#[test]
fn alexander_dual_of_d() {
    let vs = ground();
    let dual = d().alexander_dual().unwrap();
    assert_eq!(
        sorted_names(&vs, dual.facets()),
        vec!["abcde", "abceg", "abcfg", "abefg", "adefg", "bdefg", "cdefg"]
    );
    assert_eq!(dual.alexander_dual().unwrap(), d());
}

#[test]
fn chain_of_links() {
    let vs = ground();
    let d = d();
    let e = d.link(face(&vs, "f")).unwrap();
    assert_eq!(sorted_names(&vs, e.facets()), vec!["ae", "be", "ce"]);
    assert_eq!(
        names(&vs, e.minimal_nonfaces().unwrap().gens()),
        vec!["d", "f", "g", "ab", "ac", "bc"]
    );
    let f = e.link(face(&vs, "c")).unwrap();
    assert_eq!(names(&vs, f.facets()), vec!["e"]);
    assert!(f.is_simplex());
    assert_eq!(
        sorted_names(&vs, f.minimal_nonfaces().unwrap().gens()),
        vec!["a", "b", "c", "d", "f", "g"]
    );
}

#[test]
fn decomposability_of_d_and_its_link() {
    let vs = ground();
    let d = d();
    assert_eq!(d.is_vertex_decomposable(), Ok(true));
    assert_eq!(d.is_k_decomposable(0), Ok(true));
    let shedding = d.shedding_vertices().unwrap();
    assert_eq!(vs.vertex_labels(&shedding), vec!["a", "b", "c", "d", "f"]);
    assert_eq!(
        names(&vs, &d.shedding_faces(0).unwrap()),
        vec!["a", "b", "c", "d", "f"]
    );
    assert_eq!(d.is_shedding_vertex(4), Ok(false));
    assert_eq!(d.is_shedding_vertex(6), Ok(false));

    let e = d.link(face(&vs, "f")).unwrap();
    assert_eq!(
        vs.vertex_labels(&e.shedding_vertices().unwrap()),
        vec!["a", "b", "c"]
    );
    assert_eq!(e.is_shedding_vertex(3), Err(Error::NotAFace));
}

#[test]
fn deletion_examples() {
    let vs = ground();
    let d = d();
    let del = d.face_deletion(face(&vs, "f")).unwrap();
    assert_eq!(
        sorted_names(&vs, del.facets()),
        vec!["adg", "aeg", "bdg", "beg", "ceg"]
    );
    assert_eq!(d.is_shedding_face(face(&vs, "f")), Ok(true));

    let abc = Arc::new(VertexSet::new(["a", "b", "c"]).unwrap());
    let full = SimplicialComplex::simplex(abc.clone());
    let del = full.face_deletion(face(&abc, "a")).unwrap();
    assert_eq!(names(&abc, del.facets()), vec!["bc"]);
    let boundary = SimplicialComplex::from_facets(abc.clone(), faces(&abc, "ab ac bc")).unwrap();
    let del = boundary.face_deletion(face(&abc, "ab")).unwrap();
    assert_eq!(names(&abc, del.facets()), vec!["ac", "bc"]);
    assert_eq!(boundary.is_shedding_face(face(&abc, "a")), Ok(true));
}

#[test]
fn negative_control() {
    let vs = Arc::new(VertexSet::new(["a", "b", "c", "d"]).unwrap());
    let c = SimplicialComplex::from_facets(vs.clone(), faces(&vs, "ab cd")).unwrap();
    assert_eq!(c.is_shellable(), Ok(false));
    assert_eq!(c.is_vertex_decomposable(), Ok(false));
    assert_eq!(c.is_k_decomposable(1), Ok(false));
    let gens = c.dual_ideal_generators().unwrap();
    assert_eq!(names(&vs, gens.gens()), vec!["cd", "ab"]);
    assert!(!gens.has_linear_quotients());
}

#[test]
fn duality_edge_cases() {
    let abc = Arc::new(VertexSet::new(["a", "b", "c"]).unwrap());
    let full = SimplicialComplex::simplex(abc.clone());
    assert!(full.minimal_nonfaces().unwrap().is_empty());
    assert_eq!(full.alexander_dual(), Err(Error::VoidDual));
    let boundary = SimplicialComplex::from_facets(abc.clone(), faces(&abc, "ab ac bc")).unwrap();
    assert_eq!(
        names(&abc, boundary.minimal_nonfaces().unwrap().gens()),
        vec!["abc"]
    );
    assert_eq!(
        boundary.alexander_dual().unwrap().kind(),
        ComplexKind::Irrelevant
    );
    let edge = SimplicialComplex::from_facets(abc.clone(), faces(&abc, "ab")).unwrap();
    assert_eq!(
        names(&abc, edge.dual_ideal_generators().unwrap().gens()),
        vec!["c"]
    );
    let void = SimplicialComplex::from_facets(abc, vec![]).unwrap();
    assert_eq!(void.minimal_nonfaces(), Err(Error::VoidComplex));
    assert_eq!(void.alexander_dual(), Err(Error::VoidComplex));
}
