//! Test-only helpers: the witnesses used across suites and small GF(p)
//! routines written independently of the library's linear algebra.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vwlab_core::group::{GroupElement, MatrixGroup};
use vwlab_core::lie::{BracketEntry, LieAlgebra};
use vwlab_core::{FieldSpec, Scalar};

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn el5(rows: &[&[u32]]) -> GroupElement {
    GroupElement::from_rows(5, rows).unwrap()
}

pub fn psi_x() -> GroupElement {
    el5(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])
}
pub fn psi_y() -> GroupElement {
    el5(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]])
}
pub fn psi_a() -> GroupElement {
    el5(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]])
}
pub fn psi_b() -> GroupElement {
    el5(&[&[1, 0, 4], &[0, 1, 0], &[0, 0, 1]])
}

pub fn group(gens: &[(&str, GroupElement)]) -> MatrixGroup {
    let n = gens.first().map_or(1, |g| g.1.n());
    MatrixGroup::new(5, n, gens.iter().map(|(l, g)| (l.to_string(), g.clone())).collect()).unwrap()
}

pub fn b_group() -> MatrixGroup {
    group(&[("x", psi_x()), ("a", psi_a()), ("b", psi_b())])
}

pub fn b_prime_group() -> MatrixGroup {
    group(&[("y", psi_y()), ("a", psi_a()), ("b", psi_b())])
}

/// Coordinates over GF(p) as plain residues.
pub fn residues(v: &[Scalar]) -> Vec<u32> {
    v.iter().map(|s| s.residue_value().unwrap()).collect()
}

pub fn scalars(f: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.from_i64(x)).collect()
}

/// RREF over GF(p) on plain integers, zero rows dropped.
pub fn rref_mod(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let inv = |a: u32| (1..p).find(|&b| a * b % p == 1).unwrap();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let s = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Raw structure constants `c[i][j][k]` over GF(p).
pub struct RawTable {
    pub n: usize,
    pub p: u32,
    pub c: Vec<u32>,
}

impl RawTable {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        RawTable {
            n: l.dim(),
            p: l.field().modulus().unwrap(),
            c: residues(l.constants()),
        }
    }

    pub fn bracket(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let (n, p) = (self.n, self.p);
        let mut out = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                let w = u[i] * v[j] % p;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + w * self.c[(i * n + j) * n + k]) % p;
                }
            }
        }
        out
    }
}

/// Every vector of a subspace over GF(p), given a spanning set.
pub fn all_elements(basis: &[Vec<u32>], n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; n]];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for v in &out {
            for t in 0..p {
                next.push(v.iter().zip(b).map(|(x, y)| (x + t * y) % p).collect());
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Random Lie tables over GF(p) with dimension in `1..=max_dim`, by
/// rejection sampling on the Jacobi identity. Entries are zero with
/// probability 1/2 to keep acceptance reasonable.
pub fn random_valid_tables(rng: &mut impl Rng, count: usize, max_dim: usize, p: u32) -> Vec<LieAlgebra> {
    let f = gf(p as u64);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_dim);
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs = (0..n)
                    .filter_map(|k| {
                        let v = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..p) };
                        (v != 0).then(|| (k, f.from_i64(v as i64)))
                    })
                    .collect();
                entries.push(BracketEntry::new(i, j, coeffs));
            }
        }
        let l = LieAlgebra::from_brackets(f, n, &entries).unwrap();
        if l.is_valid() {
            out.push(l);
        }
    }
    out
}

pub fn random_invertible(rng: &mut impl Rng, p: u32, n: usize) -> GroupElement {
    loop {
        let entries = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
        let g = GroupElement::new(p, n, entries).unwrap();
        if g.determinant() != 0 {
            return g;
        }
    }
}

/// Small random matrix groups of order at most 625.
pub fn random_group(seed: u64) -> MatrixGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let (p, n) = [(2, 2), (3, 2), (5, 2), (2, 3), (5, 3)][rng.gen_range(0..5)];
        let k = rng.gen_range(1..=3);
        let gens: Vec<(String, GroupElement)> = (0..k)
            .map(|i| {
                let g = if n == 3 && p == 5 {
                    // upper unitriangular keeps the order at most 125
                    let mut g = GroupElement::identity(5, 3).entries().to_vec();
                    for (r, c) in [(0, 1), (0, 2), (1, 2)] {
                        g[r * 3 + c] = rng.gen_range(0..5);
                    }
                    GroupElement::new(5, 3, g).unwrap()
                } else {
                    random_invertible(&mut rng, p, n)
                };
                (format!("g{i}"), g)
            })
            .collect();
        let g = MatrixGroup::new(p, n, gens).unwrap();
        if g.enumerate(625).is_ok() {
            return g;
        }
    }
}
