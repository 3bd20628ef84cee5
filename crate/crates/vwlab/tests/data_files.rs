//! The files under `data/` encode exactly the built-in witnesses.

use std::fs;
use std::path::PathBuf;

use vwlab::formats::{parse_group, parse_lie, parse_matrix, parse_matrix_list, parse_relations, parse_vectors};
use vwlab::paperlab::{build_group_witness, build_lie_witness, B_PRIME_RELATIONS, B_RELATIONS, S_RELATIONS};
use vwlab_core::group::{vector_semidirect, MatrixGroup};
use vwlab_core::lie::{abelian, gl, heisenberg, HeisenbergVariant};
use vwlab_core::FieldSpec;

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn same_group(a: &MatrixGroup, b: &MatrixGroup) {
    assert_eq!(a.p(), b.p());
    assert_eq!(a.labels(), b.labels());
    assert_eq!(a.generators(), b.generators());
}

#[test]
fn group_generator_files() {
    let w = build_group_witness();
    same_group(&parse_group(&data("bgens.json")).unwrap(), &w.b);
    same_group(&parse_group(&data("bprime_gens.json")).unwrap(), &w.b_prime);
    same_group(&parse_group(&data("sgens.json")).unwrap(), &w.s);
    same_group(&parse_group(&data("bpsi.json")).unwrap(), &vector_semidirect(&w.b));
    same_group(
        &parse_group(&data("bprime_psi.json")).unwrap(),
        &vector_semidirect(&w.b_prime),
    );
}

#[test]
fn relation_files() {
    for (file, expected) in [
        ("srels.txt", S_RELATIONS),
        ("brels.txt", B_RELATIONS),
        ("bprime_rels.txt", B_PRIME_RELATIONS),
    ] {
        let texts: Vec<String> = parse_relations(&data(file))
            .unwrap()
            .into_iter()
            .map(|r| r.text)
            .collect();
        assert_eq!(texts, expected, "{file}");
    }
}

#[test]
fn lie_files() {
    let q = FieldSpec::rationals();
    let w = build_lie_witness(q).unwrap();
    assert_eq!(
        parse_lie(&data("heisenberg.json")).unwrap(),
        heisenberg(q, HeisenbergVariant::Xab)
    );
    assert_eq!(parse_lie(&data("heisenberg_prime.json")).unwrap(), w.b_prime);
    assert_eq!(parse_lie(&data("abelian3.json")).unwrap(), abelian(q, 3));
    assert_eq!(parse_lie(&data("gl3.json")).unwrap(), gl(q, 3));
    let (bpsi, bpsi_prime) = w.semidirect_products().unwrap();
    assert_eq!(parse_lie(&data("bpsi_lie.json")).unwrap(), bpsi.algebra);
    assert_eq!(parse_lie(&data("bprime_psi_lie.json")).unwrap(), bpsi_prime.algebra);
    assert!(!parse_lie(&data("broken.json")).unwrap().is_valid());
}

#[test]
fn action_and_map_files() {
    let q = FieldSpec::rationals();
    let w = build_lie_witness(q).unwrap();
    let as_matrices = |f: &vwlab_core::lie::LinearMap| -> Vec<vwlab_core::ExactMatrix> {
        (0..3)
            .map(|j| vwlab_core::ExactMatrix::new(q, 3, 3, f.matrix().column_vec(j)).unwrap())
            .collect()
    };
    assert_eq!(
        parse_matrix_list(&data("psi_action.json"), q, 3).unwrap(),
        as_matrices(&w.psi)
    );
    assert_eq!(
        parse_matrix_list(&data("psi_prime_action.json"), q, 3).unwrap(),
        as_matrices(&w.psi_prime)
    );
    assert_eq!(
        &parse_matrix(&data("psi_map.json"), q, Some((9, 3))).unwrap(),
        w.psi.matrix()
    );
    assert_eq!(
        parse_vectors(&data("amalgam_generators.json"), q, 9).unwrap(),
        w.generator_images()
    );
}
