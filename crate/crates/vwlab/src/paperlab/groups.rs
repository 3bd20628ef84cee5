use serde_json::{json, Map, Value};
use vwlab_core::group::{
    derived_series_grp, evaluate_relation, group_exponent, lower_central_series_grp, translation, vector_semidirect,
    GroupElement, GroupError, GroupSeries, MatrixGroup, RelationWord, DEFAULT_CAP,
};
use vwlab_core::FieldSpec;

use super::{class_value, Check, CheckResult, Report, Scenario};

pub const S_RELATIONS: &[&str] = &["[a,b]", "a^5", "b^5"];
pub const B_RELATIONS: &[&str] = &["[x,a]=b^-1", "[x,b]", "x^5", "a^5", "b^5"];
pub const B_PRIME_RELATIONS: &[&str] = &["[y,b]=a^-1", "[y,a]", "y^5", "a^5", "b^5"];

const P: u32 = 5;

/// The groups `B = <x, a, b>`, `B' = <y, a, b>` and `S = <a, b>`, realized by
/// their actions `ψ`, `ψ'` on `X = Z_5^3`: the generators of each group are
/// the images of the abstract generators.
#[derive(Debug, Clone)]
pub struct GroupWitness {
    pub b: MatrixGroup,
    pub b_prime: MatrixGroup,
    pub s: MatrixGroup,
    pub x_dim: usize,
}

impl GroupWitness {
    pub fn psi(&self, label: &str) -> &GroupElement {
        self.b.generator(label).expect("generator of B")
    }

    pub fn psi_prime(&self, label: &str) -> &GroupElement {
        self.b_prime.generator(label).expect("generator of B'")
    }
}

fn el(rows: [[u32; 3]; 3]) -> GroupElement {
    let rows: Vec<&[u32]> = rows.iter().map(|r| &r[..]).collect();
    GroupElement::from_rows(P, &rows).expect("3x3 residues")
}

fn group(gens: &[(&str, &GroupElement)]) -> MatrixGroup {
    let gens = gens.iter().map(|(l, g)| (l.to_string(), (*g).clone())).collect();
    MatrixGroup::new(P, 3, gens).expect("unitriangular generators")
}

pub fn build_group_witness() -> GroupWitness {
    let x = el([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
    let y = el([[1, 0, 0], [1, 1, 0], [0, 0, 1]]);
    let a = el([[1, 0, 0], [0, 1, 1], [0, 0, 1]]);
    let b = el([[1, 0, 4], [0, 1, 0], [0, 0, 1]]);
    GroupWitness {
        b: group(&[("x", &x), ("a", &a), ("b", &b)]),
        b_prime: group(&[("y", &y), ("a", &a), ("b", &b)]),
        s: group(&[("a", &a), ("b", &b)]),
        x_dim: 3,
    }
}

fn relations_hold(g: &MatrixGroup, rels: &[&str]) -> Result<Value, GroupError> {
    let mut out = Map::new();
    for r in rels {
        let word = RelationWord::parse(r)?;
        out.insert(r.to_string(), json!(evaluate_relation(g, &word)?));
    }
    Ok(Value::Object(out))
}

fn all_true(rels: &[&str]) -> Value {
    Value::Object(rels.iter().map(|r| (r.to_string(), json!(true))).collect())
}

fn series_data(s: &GroupSeries) -> Value {
    json!({"orders": s.orders(), "class": class_value(s.class)})
}

fn series_check(check: Check, series: &Result<GroupSeries, GroupError>, orders: &[usize], class: usize) -> CheckResult {
    match series {
        Ok(s) => check.compare(json!({"orders": orders, "class": class}), series_data(s)),
        Err(e) => check.error(e),
    }
}

/// The group checklist: relations, orders, agreement on `S`, and the lower
/// central and derived series of both semidirect products.
pub fn verify_group_counterexample() -> Report {
    let w = build_group_witness();
    let bpsi = vector_semidirect(&w.b);
    let bpsi_prime = vector_semidirect(&w.b_prime);
    let lcs = lower_central_series_grp(&bpsi, DEFAULT_CAP);
    let lcs_prime = lower_central_series_grp(&bpsi_prime, DEFAULT_CAP);
    let derived = derived_series_grp(&bpsi, DEFAULT_CAP);
    let derived_prime = derived_series_grp(&bpsi_prime, DEFAULT_CAP);

    let mut checks = Vec::new();
    checks.push(
        Check {
            id: "groups.relations",
            description: "the defining relations of S, B and B' hold for the matrix generators",
            anchor: "relations-preserved",
        }
        .run(|| {
            let computed = json!({
                "S": relations_hold(&w.s, S_RELATIONS)?,
                "B": relations_hold(&w.b, B_RELATIONS)?,
                "B'": relations_hold(&w.b_prime, B_PRIME_RELATIONS)?,
            });
            let expected = json!({
                "S": all_true(S_RELATIONS),
                "B": all_true(B_RELATIONS),
                "B'": all_true(B_PRIME_RELATIONS),
            });
            Ok::<_, GroupError>((expected, computed))
        }),
    );
    checks.push(
        Check {
            id: "groups.orders",
            description: "|S| = 25 and |B| = |B'| = 125",
            anchor: "group-orders",
        }
        .run(|| {
            let computed = json!({
                "S": w.s.enumerate(DEFAULT_CAP)?.order(),
                "B": w.b.enumerate(DEFAULT_CAP)?.order(),
                "B'": w.b_prime.enumerate(DEFAULT_CAP)?.order(),
            });
            Ok::<_, GroupError>((json!({"S": 25, "B": 125, "B'": 125}), computed))
        }),
    );
    checks.push(
        Check {
            id: "groups.agree-on-s",
            description: "psi and psi' agree on the generators a, b of S",
            anchor: "agree-on-s",
        }
        .compare(
            json!({"a": true, "b": true}),
            json!({
                "a": w.psi("a") == w.psi_prime("a"),
                "b": w.psi("b") == w.psi_prime("b"),
            }),
        ),
    );
    checks.push(
        Check {
            id: "groups.semidirect-orders",
            description: "|B ⋉_psi X| = |B' ⋉_psi' X| = 15625",
            anchor: "semidirect-orders",
        }
        .run(|| {
            let computed = json!({
                "B_psi": bpsi.enumerate(DEFAULT_CAP)?.order(),
                "B'_psi'": bpsi_prime.enumerate(DEFAULT_CAP)?.order(),
            });
            Ok::<_, GroupError>((json!({"B_psi": 15625, "B'_psi'": 15625}), computed))
        }),
    );
    checks.push(series_check(
        Check {
            id: "groups.bpsi.lcs",
            description: "lower central series of B_psi has orders 15625, 125, 5, 1 (class 3)",
            anchor: "lcs-chain",
        },
        &lcs,
        &[15625, 125, 5, 1],
        3,
    ));
    checks.push(series_check(
        Check {
            id: "groups.bpsi-prime.lcs",
            description: "lower central series of B'_psi' has orders 15625, 125, 5, 1 (class 3)",
            anchor: "lcs-chain",
        },
        &lcs_prime,
        &[15625, 125, 5, 1],
        3,
    ));
    let gamma2 = Check {
        id: "groups.bpsi.gamma2",
        description:
            "[B_psi, B_psi] = <b> ⋉ Z_5^2: order 125, generated by the block of psi(b) and the translations e1, e2",
        anchor: "gamma2-structure",
    };
    checks.push(match &lcs {
        Err(e) => gamma2.error(e),
        Ok(s) if s.terms.len() < 2 => gamma2.error("series has no second term"),
        Ok(s) => gamma2.run(|| {
            let g2 = &s.terms[1];
            let block = bpsi.generator("b").expect("block of psi(b)");
            let t1 = translation(P, &[1, 0, 0]);
            let t2 = translation(P, &[0, 1, 0]);
            let generated = MatrixGroup::new(
                P,
                4,
                vec![
                    ("b".into(), block.clone()),
                    ("t1".into(), t1.clone()),
                    ("t2".into(), t2.clone()),
                ],
            )?
            .enumerate(DEFAULT_CAP)?;
            let computed = json!({
                "order": g2.order(),
                "contains_psi_b": g2.contains(block),
                "contains_e1": g2.contains(&t1),
                "contains_e2": g2.contains(&t2),
                "equals_generated": generated == g2.elements,
                "abelian": g2.elements.is_abelian(),
            });
            let expected = json!({
                "order": 125,
                "contains_psi_b": true,
                "contains_e1": true,
                "contains_e2": true,
                "equals_generated": true,
                "abelian": true,
            });
            Ok::<_, GroupError>((expected, computed))
        }),
    });
    checks.push(series_check(
        Check {
            id: "groups.bpsi.derived",
            description: "derived series of B_psi has orders 15625, 125, 1 (2-solvable)",
            anchor: "two-solvable",
        },
        &derived,
        &[15625, 125, 1],
        2,
    ));
    checks.push(series_check(
        Check {
            id: "groups.bpsi-prime.derived",
            description: "derived series of B'_psi' has orders 15625, 125, 1 (2-solvable)",
            anchor: "two-solvable",
        },
        &derived_prime,
        &[15625, 125, 1],
        2,
    ));
    let not_two = Check {
        id: "groups.not-class-2",
        description: "neither semidirect product has class at most 2: the third lower central term is nontrivial",
        anchor: "k2-excluded",
    };
    checks.push(match (&lcs, &lcs_prime) {
        (Ok(s), Ok(t)) => {
            let third = |s: &GroupSeries| s.terms.get(2).map_or(1, |g| g.order());
            not_two.compare(
                json!({"B_psi": true, "B'_psi'": true}),
                json!({"B_psi": third(s) > 1, "B'_psi'": third(t) > 1}),
            )
        }
        (Err(e), _) | (_, Err(e)) => not_two.error(e),
    });
    checks.push(
        Check {
            id: "groups.bpsi.exponent",
            description: "B_psi has exponent 5",
            anchor: "exponent",
        }
        .run(|| {
            let set = bpsi.enumerate(DEFAULT_CAP)?;
            Ok::<_, GroupError>((json!(5), json!(group_exponent(&set))))
        }),
    );

    let notes = vec![
        "y generates B', so its action is implemented as psi'(y) (the same matrix is sometimes labelled psi(y)).".to_string(),
        "Commutators are [g,h] = g^-1 h^-1 g h; the relations are evaluated in the matrix realizations, not in the abstract presentations.".to_string(),
        "That S embeds into B and B' with no amalgam in any solvable group is a classical result taken as an assumption; only the witness computations are checked.".to_string(),
    ];
    Report::new(
        Scenario::Groups,
        FieldSpec::prime(u64::from(P)).expect("5 is prime"),
        checks,
        notes,
    )
}
