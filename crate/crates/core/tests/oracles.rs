//! Expected values computed by brute force, independent of the library's
//! row reduction and closure code paths.

mod common;

use common::*;
use vwlab_core::group::{
    brute_force_commutator_subgroup, commutator, derived_series_grp, group_exponent, lower_central_series_grp,
    vector_semidirect, DEFAULT_CAP,
};
use vwlab_core::lie::{
    abelian, derivations, derived_series, gl, gl_index, heisenberg, lower_central_series, semidirect_by_action,
    HeisenbergVariant, LieAlgebra,
};
use vwlab_core::{ExactMatrix, FieldSpec, Subspace};

/// Counts 3x3 matrices over GF(5) satisfying D[u,v] = [Du,v] + [u,Dv] on
/// the Heisenberg basis, by enumerating all 5^9 of them.
fn count_heisenberg_derivations_gf5() -> usize {
    // [x, a] = b with x, a, b = 0, 1, 2
    let br = |u: [u32; 3], v: [u32; 3]| -> [u32; 3] { [0, 0, (u[0] * v[1] + 20 - u[1] * v[0]) % 5] };
    let basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut count = 0;
    for code in 0..5u32.pow(9) {
        let mut d = [0u32; 9];
        let mut c = code;
        for slot in d.iter_mut() {
            *slot = c % 5;
            c /= 5;
        }
        let apply = |v: [u32; 3]| -> [u32; 3] {
            let mut o = [0; 3];
            for r in 0..3 {
                o[r] = (0..3).map(|k| d[r * 3 + k] * v[k]).sum::<u32>() % 5;
            }
            o
        };
        let ok = (0..3).all(|i| {
            (0..3).all(|j| {
                let lhs = apply(br(basis[i], basis[j]));
                let a = br(apply(basis[i]), basis[j]);
                let b = br(basis[i], apply(basis[j]));
                (0..3).all(|k| lhs[k] == (a[k] + b[k]) % 5)
            })
        });
        if ok {
            count += 1;
        }
    }
    count
}

#[test]
fn heisenberg_derivations_by_enumeration() {
    let solutions = count_heisenberg_derivations_gf5();
    assert_eq!(solutions, 5usize.pow(6));
    let der = derivations(&heisenberg(gf(5), HeisenbergVariant::Xab)).unwrap();
    assert_eq!(5usize.pow(der.algebra.dim() as u32), solutions);
}

#[test]
fn gl3_bracket_matches_matrix_commutator() {
    let f = FieldSpec::rationals();
    let g = gl(f, 3);
    let neg_e23 = ExactMatrix::unit(f, 3, 3, 1, 2).scale(&f.from_i64(-1)).unwrap();
    let e12 = ExactMatrix::unit(f, 3, 3, 0, 1);
    let expected = neg_e23.mul(&e12).unwrap().sub(&e12.mul(&neg_e23).unwrap()).unwrap();
    let got = g.bracket(neg_e23.entries(), e12.entries()).unwrap();
    assert_eq!(got, expected.entries());
    assert_eq!(got, g.basis_vector(gl_index(3, 1, 3)));
}

/// Closure by repeatedly bracketing every pair of elements of the current
/// spanning set over GF(5), to a fixpoint.
fn closure_dim_gf5(l: &LieAlgebra, gens: &[Vec<u32>]) -> usize {
    let t = RawTable::from_algebra(l);
    let mut span = rref_mod(gens.to_vec(), 5);
    loop {
        let mut rows = span.clone();
        for u in &span {
            for v in &span {
                rows.push(t.bracket(u, v));
            }
        }
        let next = rref_mod(rows, 5);
        if next == span {
            return span.len();
        }
        span = next;
    }
}

#[test]
fn gl3_generated_subalgebra_has_dim_5() {
    let f = gf(5);
    let g = gl(f, 3);
    let unit = |i, j, s: i64| {
        let mut v = g.zero_vector();
        v[gl_index(3, i, j)] = f.from_i64(s);
        v
    };
    let gens = vec![unit(2, 3, -1), unit(1, 2, 1), unit(1, 3, 1), unit(3, 2, -1)];
    let raw: Vec<Vec<u32>> = gens.iter().map(|v| residues(v)).collect();
    assert_eq!(closure_dim_gf5(&g, &raw), 5);
    let s = g.subalgebra_generated(&gens).unwrap();
    assert_eq!(s.dim(), 5);
    // e22 - e33 is added by the closure
    let mut h = g.zero_vector();
    h[gl_index(3, 2, 2)] = f.one();
    h[gl_index(3, 3, 3)] = f.from_i64(-1);
    assert!(s.contains(&h).unwrap());
}

fn b_psi_lie(f: FieldSpec) -> LieAlgebra {
    let b = heisenberg(f, HeisenbergVariant::Xab);
    let x = abelian(f, 3);
    let m = |i: usize, j: usize, s: i64| ExactMatrix::unit(f, 3, 3, i - 1, j - 1).scale(&f.from_i64(s)).unwrap();
    semidirect_by_action(&b, &x, &[m(2, 3, -1), m(1, 2, 1), m(1, 3, 1)])
        .unwrap()
        .algebra
}

/// Lower central / derived dimensions from the brackets of every pair of
/// spanning vectors, reduced with a standalone GF(5) elimination.
fn brute_series_dims(l: &LieAlgebra, derived: bool) -> Vec<usize> {
    let t = RawTable::from_algebra(l);
    let n = l.dim();
    let full: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|k| u32::from(i == k)).collect()).collect();
    let mut term = full.clone();
    let mut dims = vec![n];
    while !term.is_empty() {
        let left = if derived { &term } else { &full };
        let mut rows = Vec::new();
        for u in left {
            for v in &term {
                let w = t.bracket(u, v);
                if w.iter().any(|&c| c != 0) {
                    rows.push(w);
                }
            }
        }
        let next = rref_mod(rows, 5);
        if next.len() == term.len() {
            break;
        }
        dims.push(next.len());
        term = next;
    }
    dims
}

#[test]
fn b_psi_series_by_brute_force() {
    let l = b_psi_lie(gf(5));
    assert_eq!(brute_series_dims(&l, false), vec![6, 3, 1, 0]);
    assert_eq!(brute_series_dims(&l, true), vec![6, 3, 0]);
    assert_eq!(lower_central_series(&l).unwrap().dims(), vec![6, 3, 1, 0]);
    assert_eq!(derived_series(&l).unwrap().dims(), vec![6, 3, 0]);
    let lcs = lower_central_series(&b_psi_lie(FieldSpec::rationals())).unwrap();
    let dcs = derived_series(&b_psi_lie(FieldSpec::rationals())).unwrap();
    assert!(dcs.terms[1].is_subspace_of(&lcs.terms[1]).unwrap());
    assert_eq!(dcs.terms[1], lcs.terms[1]);
}

#[test]
fn b_psi_group_order_and_exponent() {
    let bpsi = vector_semidirect(&b_group());
    let set = bpsi.enumerate(DEFAULT_CAP).unwrap();
    assert_eq!(set.order(), 125 * 125);
    // exponent 5: brute force over all 15625 elements
    assert!(set.iter().all(|g| g.pow(5).is_identity()));
    assert_eq!(group_exponent(&set), 5);
}

#[test]
fn b_psi_group_series_and_abelian_gamma2() {
    let bpsi = vector_semidirect(&b_group());
    let lcs = lower_central_series_grp(&bpsi, DEFAULT_CAP).unwrap();
    assert_eq!(lcs.orders(), vec![15625, 125, 5, 1]);
    let gamma2 = &lcs.terms[1];
    // brute force: all commutators of pairs of γ2 elements are trivial
    assert!(gamma2
        .elements
        .iter()
        .all(|a| gamma2.elements.iter().all(|b| commutator(a, b).is_identity())));
    let brute = brute_force_commutator_subgroup(gamma2, gamma2, DEFAULT_CAP).unwrap();
    assert!(brute.is_trivial());
    let dcs = derived_series_grp(&bpsi, DEFAULT_CAP).unwrap();
    assert_eq!(dcs.orders(), vec![15625, 125, 1]);
}

#[test]
fn b_prime_relations_realized() {
    let g = b_prime_group();
    let y = g.generator("y").unwrap();
    let a = g.generator("a").unwrap();
    let b = g.generator("b").unwrap();
    assert_eq!(commutator(y, b), a.inverse().unwrap());
    assert!(commutator(y, a).is_identity());
    assert_eq!(g.enumerate(DEFAULT_CAP).unwrap().order(), 125);
}

#[test]
fn subspace_oracle_heisenberg_square() {
    let h = heisenberg(gf(5), HeisenbergVariant::Xab);
    let full = h.full_space();
    let d = h.product_subspace(&full, &full).unwrap();
    let t = RawTable::from_algebra(&h);
    let basis = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let all = all_elements(&basis, 3, 5);
    let rows: Vec<Vec<u32>> = all.iter().flat_map(|u| all.iter().map(|v| t.bracket(u, v))).collect();
    let oracle = rref_mod(rows, 5);
    let got: Vec<Vec<u32>> = d.basis_vectors().iter().map(|v| residues(v)).collect();
    assert_eq!(got, oracle);
    assert_eq!(d, Subspace::span(gf(5), 3, &[h.basis_vector(2)]).unwrap());
}
