use serde_json::{json, Value};
use vwlab_core::lie::{
    abelian, check_hom, derivations, derived_series, gl, gl_index, heisenberg, is_isomorphic_via, lower_central_series,
    semidirect, verify_split_extension, BracketEntry, DerivationAlgebra, HeisenbergVariant, HomKind, LieAlgebra,
    LieError, LinearMap, SemidirectProduct, SeriesReport,
};
use vwlab_core::{FieldSpec, Scalar};

use super::{series_value, Check, CheckResult, Report, Scenario};

/// `S = F{a, b}` abelian; `B`, `B'` Heisenberg with `[x, a] = b` and
/// `[y, b] = a`; `X` abelian of dimension 3; the representations `ψ`, `ψ'`
/// into `gl(3, F)`; and `v: gl(3, F) -> Der(X)`, the identity on matrices.
#[derive(Debug, Clone)]
pub struct LieWitness {
    pub s: LieAlgebra,
    pub b: LieAlgebra,
    pub b_prime: LieAlgebra,
    pub x: LieAlgebra,
    pub gl3: LieAlgebra,
    pub psi: LinearMap,
    pub psi_prime: LinearMap,
    /// The inclusions `S -> B` and `S -> B'`.
    pub m: LinearMap,
    pub m_prime: LinearMap,
    pub der: DerivationAlgebra,
    pub v: LinearMap,
}

impl LieWitness {
    /// `e_ij` in `gl(3, F)`, 1-based.
    pub fn unit(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.gl3.basis_vector(gl_index(3, i, j))
    }

    /// `B ⋉_{vψ} X` and `B' ⋉_{vψ'} X`.
    pub fn semidirect_products(&self) -> Result<(SemidirectProduct, SemidirectProduct), LieError> {
        let bpsi = semidirect(&self.b, &self.x, &self.der, &self.v.compose(&self.psi)?)?;
        let bpsi_prime = semidirect(&self.b_prime, &self.x, &self.der, &self.v.compose(&self.psi_prime)?)?;
        Ok((bpsi, bpsi_prime))
    }

    /// The images `ψ(x), ψ(a), ψ(b), ψ'(y), ψ'(a), ψ'(b)` in `gl(3, F)`.
    pub fn generator_images(&self) -> Vec<Vec<Scalar>> {
        let cols = |f: &LinearMap| (0..3).map(|j| f.matrix().column_vec(j)).collect::<Vec<_>>();
        let mut out = cols(&self.psi);
        out.extend(cols(&self.psi_prime));
        out
    }
}

fn neg(v: Vec<Scalar>) -> Vec<Scalar> {
    v.iter().map(|c| -c).collect()
}

pub fn build_lie_witness(field: FieldSpec) -> Result<LieWitness, LieError> {
    let s = abelian(field, 2).with_labels(["a", "b"])?;
    let b = heisenberg(field, HeisenbergVariant::Xab);
    let b_prime = heisenberg(field, HeisenbergVariant::Yab);
    let x = abelian(field, 3);
    let gl3 = gl(field, 3);
    let e = |i, j| gl3.basis_vector(gl_index(3, i, j));
    let psi = LinearMap::from_images(b.clone(), gl3.clone(), &[neg(e(2, 3)), e(1, 2), e(1, 3)])?;
    let psi_prime = LinearMap::from_images(b_prime.clone(), gl3.clone(), &[neg(e(3, 2)), e(1, 2), e(1, 3)])?;
    let m = LinearMap::from_images(s.clone(), b.clone(), &[b.basis_vector(1), b.basis_vector(2)])?;
    let m_prime = LinearMap::from_images(
        s.clone(),
        b_prime.clone(),
        &[b_prime.basis_vector(1), b_prime.basis_vector(2)],
    )?;
    let der = derivations(&x)?;
    // Der of an abelian algebra is all of gl(n); its kernel basis is the
    // unit matrices in gl(n)'s own order, so v is the identity matrix.
    let v = LinearMap::new(
        gl3.clone(),
        der.algebra.clone(),
        vwlab_core::ExactMatrix::identity(field, 9),
    )?;
    Ok(LieWitness {
        s,
        b,
        b_prime,
        x,
        gl3,
        psi,
        psi_prime,
        m,
        m_prime,
        der,
        v,
    })
}

fn hom_name(k: HomKind) -> &'static str {
    match k {
        HomKind::NotHom => "not-hom",
        HomKind::Hom => "hom",
        HomKind::MonoHom => "mono-hom",
    }
}

/// The algebra with the given nonzero brackets (by label) on `labels`.
fn table(field: FieldSpec, labels: &[&str], brackets: &[(&str, &str, i64, &str)]) -> Result<LieAlgebra, LieError> {
    let idx = |l: &str| labels.iter().position(|x| *x == l).expect("known label");
    let entries: Vec<BracketEntry> = brackets
        .iter()
        .map(|&(u, v, c, w)| BracketEntry::new(idx(u), idx(v), vec![(idx(w), field.from_i64(c))]))
        .collect();
    LieAlgebra::from_brackets(field, labels.len(), &entries)?.with_labels(labels.iter().copied())
}

/// `f(B)` as an algebra, with the witness sending the standard Heisenberg
/// basis `x, a, b` to `images` (given as domain basis indices of `f`).
fn heisenberg_image(f: &LinearMap, order: [usize; 3]) -> Result<Value, LieError> {
    let gl3 = f.codomain();
    let image = f.image();
    let restricted = gl3.restrict(&image)?;
    let coords: Vec<Vec<Scalar>> = order
        .iter()
        .map(|&j| {
            image
                .coordinates(&f.matrix().column_vec(j))
                .map(|c| c.expect("column lies in the image"))
        })
        .collect::<Result<_, _>>()?;
    let h = heisenberg(gl3.field(), HeisenbergVariant::Xab);
    let witness = LinearMap::from_images(h, restricted, &coords)?;
    Ok(json!({"dim": image.dim(), "isomorphic": is_isomorphic_via(&witness)}))
}

fn lcs_check(
    check: Check,
    series: &Result<SeriesReport, LieError>,
    algebra: &LieAlgebra,
    bases: &[&[&str]],
) -> CheckResult {
    match series {
        Err(e) => check.error(e),
        Ok(s) => {
            let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
            let expected = json!({"dims": dims, "class": dims.len() - 1, "bases": bases});
            check.compare(expected, series_value(s, |v| algebra.format_vector(v)))
        }
    }
}

fn derived_check(check: Check, series: &Result<SeriesReport, LieError>) -> CheckResult {
    match series {
        Err(e) => check.error(e),
        Ok(s) => check.compare(
            json!({"dims": [6, 3, 0], "length": 2}),
            json!({"dims": s.dims(), "length": super::class_value(s.class)}),
        ),
    }
}

/// The Lie checklist: axioms, representations, bracket tables, series of
/// both semidirect products and the split-extension structure.
pub fn verify_lie_counterexample(field: FieldSpec) -> Report {
    let notes = vec![
        "The second semidirect product is built from B', i.e. B' ⋉_psi' X (it is sometimes written with B in place of B').".to_string(),
        "The isomorphisms with the Heisenberg algebra are checked through explicit basis assignments, not by search.".to_string(),
    ];
    let w = match build_lie_witness(field) {
        Ok(w) => w,
        Err(e) => {
            let c = Check {
                id: "lie.witness",
                description: "construct the witness algebras and maps",
                anchor: "witness",
            };
            return Report::new(Scenario::Lie, field, vec![c.error(e)], notes);
        }
    };
    let products = w.semidirect_products();
    let mut checks = Vec::new();

    let axioms = Check {
        id: "lie.axioms",
        description: "every constructed table is alternating and satisfies the Jacobi identity",
        anchor: "lie-axioms",
    };
    checks.push(match &products {
        Err(e) => axioms.error(e),
        Ok((p, q)) => {
            let all = [
                ("S", &w.s),
                ("B", &w.b),
                ("B'", &w.b_prime),
                ("X", &w.x),
                ("gl(3)", &w.gl3),
                ("Der(X)", &w.der.algebra),
                ("B_psi", &p.algebra),
                ("B'_psi'", &q.algebra),
            ];
            let computed: serde_json::Map<String, Value> =
                all.iter().map(|(n, l)| (n.to_string(), json!(l.is_valid()))).collect();
            let expected: serde_json::Map<String, Value> =
                all.iter().map(|(n, _)| (n.to_string(), json!(true))).collect();
            axioms.compare(Value::Object(expected), Value::Object(computed))
        }
    });

    checks.push(
        Check {
            id: "lie.representations",
            description:
                "psi and psi' are injective homomorphisms agreeing on S, and v: gl(3) -> Der(X) is an isomorphism",
            anchor: "faithful-representations",
        }
        .run(|| {
            let agree = w.psi.compose(&w.m)?.matrix() == w.psi_prime.compose(&w.m_prime)?.matrix();
            let computed = json!({
                "psi": hom_name(check_hom(&w.psi)),
                "psi'": hom_name(check_hom(&w.psi_prime)),
                "v": is_isomorphic_via(&w.v),
                "agree_on_s": agree,
                "der_dim": w.der.algebra.dim(),
            });
            let expected = json!({
                "psi": "mono-hom",
                "psi'": "mono-hom",
                "v": true,
                "agree_on_s": true,
                "der_dim": 9,
            });
            Ok::<_, LieError>((expected, computed))
        }),
    );

    checks.push(
        Check {
            id: "lie.heisenberg-images",
            description: "psi(B) and psi'(B') are each isomorphic to the Heisenberg algebra via explicit witnesses",
            anchor: "heisenberg-images",
        }
        .run(|| {
            // x, a, b  ↦  psi(x), psi(a), psi(b)  and  psi'(y), psi'(b), psi'(a)
            let computed = json!({
                "psi(B)": heisenberg_image(&w.psi, [0, 1, 2])?,
                "psi'(B')": heisenberg_image(&w.psi_prime, [0, 2, 1])?,
            });
            let one = json!({"dim": 3, "isomorphic": true});
            Ok::<_, LieError>((json!({"psi(B)": one, "psi'(B')": one}), computed))
        }),
    );

    let b_labels = ["x", "a", "b", "e1", "e2", "e3"];
    let bp_labels = ["y", "a", "b", "e1", "e2", "e3"];
    let table_check = |check: Check, labels: &[&str], brackets: &[(&str, &str, i64, &str)], which: bool| match &products
    {
        Err(e) => check.error(e),
        Ok((p, q)) => {
            let algebra = if which { &q.algebra } else { &p.algebra };
            match table(field, labels, brackets) {
                Err(e) => check.error(e),
                Ok(expected) => check.compare_with(
                    json!({"labels": expected.labels(), "brackets": expected.format_table()}),
                    json!({"labels": algebra.labels(), "brackets": algebra.format_table()}),
                    json!({"same_table": algebra.same_table(&expected)}),
                ),
            }
        }
    };
    checks.push(table_check(
        Check {
            id: "lie.bpsi.table",
            description: "B_psi has exactly the brackets [x,a] = b, [x,e3] = -e2, [a,e2] = e1, [b,e3] = e1",
            anchor: "bracket-table",
        },
        &b_labels,
        &[
            ("x", "a", 1, "b"),
            ("x", "e3", -1, "e2"),
            ("a", "e2", 1, "e1"),
            ("b", "e3", 1, "e1"),
        ],
        false,
    ));
    checks.push(table_check(
        Check {
            id: "lie.bpsi-prime.table",
            description: "B'_psi' has exactly the brackets [y,b] = a, [y,e2] = -e3, [a,e2] = e1, [b,e3] = e1",
            anchor: "bracket-table",
        },
        &bp_labels,
        &[
            ("y", "b", 1, "a"),
            ("y", "e2", -1, "e3"),
            ("a", "e2", 1, "e1"),
            ("b", "e3", 1, "e1"),
        ],
        true,
    ));

    let (lcs, lcs_prime, der, der_prime) = match &products {
        Ok((p, q)) => (
            lower_central_series(&p.algebra),
            lower_central_series(&q.algebra),
            derived_series(&p.algebra),
            derived_series(&q.algebra),
        ),
        Err(e) => (Err(e.clone()), Err(e.clone()), Err(e.clone()), Err(e.clone())),
    };
    let fallback = w.b.clone();
    let (alg, alg_prime) = match &products {
        Ok((p, q)) => (&p.algebra, &q.algebra),
        Err(_) => (&fallback, &fallback),
    };
    checks.push(lcs_check(
        Check {
            id: "lie.bpsi.lcs",
            description: "lower central series of B_psi: L1 = span{b, e1, e2}, L2 = span{e1}, L3 = 0 (3-nilpotent)",
            anchor: "lcs-chain",
        },
        &lcs,
        alg,
        &[&b_labels, &["b", "e1", "e2"], &["e1"], &[]],
    ));
    checks.push(lcs_check(
        Check {
            id: "lie.bpsi-prime.lcs",
            description: "lower central series of B'_psi': L1 = span{a, e1, e3}, L2 = span{e1}, L3 = 0 (3-nilpotent)",
            anchor: "lcs-chain",
        },
        &lcs_prime,
        alg_prime,
        &[&bp_labels, &["a", "e1", "e3"], &["e1"], &[]],
    ));
    checks.push(derived_check(
        Check {
            id: "lie.bpsi.derived",
            description: "derived series of B_psi has dims 6, 3, 0 (2-solvable)",
            anchor: "two-solvable",
        },
        &der,
    ));
    checks.push(derived_check(
        Check {
            id: "lie.bpsi-prime.derived",
            description: "derived series of B'_psi' has dims 6, 3, 0 (2-solvable)",
            anchor: "two-solvable",
        },
        &der_prime,
    ));

    let not_two = Check {
        id: "lie.not-2-nilpotent",
        description: "neither semidirect product is 2-nilpotent: L2 is nonzero",
        anchor: "k2-excluded",
    };
    checks.push(match (&lcs, &lcs_prime) {
        (Ok(s), Ok(t)) => {
            let l2 = |s: &SeriesReport, a: &LieAlgebra| -> Value {
                let basis: Vec<String> = s
                    .terms
                    .get(2)
                    .map(|t| t.basis_vectors().iter().map(|v| a.format_vector(v)).collect())
                    .unwrap_or_default();
                json!({"nonzero": !basis.is_empty(), "L2": basis})
            };
            not_two.compare(
                json!({"B_psi": {"nonzero": true, "L2": ["e1"]}, "B'_psi'": {"nonzero": true, "L2": ["e1"]}}),
                json!({"B_psi": l2(s, alg), "B'_psi'": l2(t, alg_prime)}),
            )
        }
        (Err(e), _) | (_, Err(e)) => not_two.error(e),
    });

    checks.push(
        Check {
            id: "lie.split-extension",
            description: "X -> B ⋉ X -> B with the canonical section is a split extension, for both products",
            anchor: "split-extension",
        }
        .run(|| {
            let (p, q) = products.as_ref().map_err(Clone::clone)?;
            let split = |s: &SemidirectProduct| {
                verify_split_extension(&s.algebra, &s.kernel_inclusion(), &s.projection(), &s.section())
            };
            let computed = json!({"B_psi": split(p)?, "B'_psi'": split(q)?});
            Ok::<_, LieError>((json!({"B_psi": true, "B'_psi'": true}), computed))
        }),
    );

    Report::new(Scenario::Lie, field, checks, notes)
}
