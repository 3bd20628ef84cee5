//! Acceptance criteria, one pass/fail line each. Tolerances are exact.
//!
//! Runs without the libtest harness so the lines are always printed; the
//! process exits nonzero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{all_elements, b_group, b_prime_group, random_group, random_valid_tables, residues, rref_mod, RawTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use vwlab::paperlab::build_lie_witness;
use vwlab_core::group::{
    brute_force_commutator_subgroup, commutator_subgroup, derived_series_grp, lower_central_series_grp, GroupElement,
    MatrixGroup, DEFAULT_CAP,
};
use vwlab_core::lie::{derivations, derived_series, lower_central_series, LieAlgebra};
use vwlab_core::{FieldSpec, Scalar, Subspace};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn verify_paper(args: &[&str]) -> Result<(Vec<u8>, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_vwlab"))
        .arg("verify-paper")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(
        out.status.code() == Some(0),
        format!("exit status {:?}", out.status.code()),
    )?;
    Ok((out.stdout, elapsed))
}

fn report(args: &[&str]) -> Result<(Value, Duration), String> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (bytes, t) = verify_paper(&full)?;
    let v = serde_json::from_slice(&bytes).map_err(|e| e.to_string())?;
    Ok((v, t))
}

fn check<'a>(r: &'a Value, id: &str) -> Result<&'a Value, String> {
    let c = r["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["id"] == id))
        .ok_or_else(|| format!("no check {id}"))?;
    ensure(c["status"] == "pass", format!("{id} has status {}", c["status"]))?;
    Ok(&c["data"]["computed"])
}

fn same(got: &Value, want: Value, what: &str) -> Result<(), String> {
    ensure(*got == want, format!("{what}: got {got}, want {want}"))
}

fn within(t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let (r, t) = report(&["--part", "lie", "--field", "Q"])?;
    let lcs = check(&r, "lie.bpsi.lcs")?;
    same(&lcs["dims"], json!([6, 3, 1, 0]), "B_psi lower central dims")?;
    same(&lcs["class"], json!(3), "B_psi class")?;
    same(&lcs["bases"][2], json!(["e1"]), "L2 of B_psi")?;
    same(
        &check(&r, "lie.bpsi.derived")?["dims"],
        json!([6, 3, 0]),
        "B_psi derived dims",
    )?;
    let lcs_p = check(&r, "lie.bpsi-prime.lcs")?;
    same(&lcs_p["dims"], json!([6, 3, 1, 0]), "B'_psi' lower central dims")?;
    same(&lcs_p["class"], json!(3), "B'_psi' class")?;
    same(
        &check(&r, "lie.bpsi-prime.derived")?["dims"],
        json!([6, 3, 0]),
        "B'_psi' derived dims",
    )?;
    same(&r["overall"], json!(true), "overall")?;
    within(t, Duration::from_secs(1))?;
    Ok(format!(
        "lcs [6,3,1,0], derived [6,3,0], class 3, L2 = span{{e1}} for both products ({t:.2?})"
    ))
}

fn criterion_2() -> Outcome {
    let q = FieldSpec::rationals();
    let w = build_lie_witness(q).map_err(|e| e.to_string())?;
    let (bpsi, _) = w.semidirect_products().map_err(|e| e.to_string())?;
    let l = &bpsi.algebra;
    let labels = ["x", "a", "b", "e1", "e2", "e3"];
    same(&json!(l.labels()), json!(labels), "basis")?;
    let table = [
        ("x", "a", 1, "b"),
        ("x", "e3", -1, "e2"),
        ("a", "e2", 1, "e1"),
        ("b", "e3", 1, "e1"),
    ];
    let idx = |s: &str| labels.iter().position(|l| *l == s).unwrap();
    // every ordered pair of basis vectors, against the table and antisymmetry
    for i in 0..6 {
        for j in 0..6 {
            let mut want = vec![q.zero(); 6];
            for &(u, v, c, w) in &table {
                if (idx(u), idx(v)) == (i, j) {
                    want[idx(w)] = q.from_i64(c);
                } else if (idx(v), idx(u)) == (i, j) {
                    want[idx(w)] = q.from_i64(-c);
                }
            }
            ensure(
                l.bracket_basis(i, j) == want.as_slice(),
                format!(
                    "[{}, {}] = {}",
                    labels[i],
                    labels[j],
                    l.format_vector(l.bracket_basis(i, j))
                ),
            )?;
        }
    }
    Ok("exactly [x,a]=b, [x,e3]=-e2, [a,e2]=e1, [b,e3]=e1 on all 36 ordered pairs".into())
}

fn criterion_3() -> Outcome {
    let mut times = Vec::new();
    for f in ["Q", "GF(5)", "GF(7)"] {
        let (r, t) = report(&["--part", "amalgam", "--field", f])?;
        let ctx = |e: String| format!("{f}: {e}");
        same(&check(&r, "amalgam.p-dim").map_err(ctx)?["dim"], json!(5), "dim P").map_err(ctx)?;
        let u = check(&r, "amalgam.u-ideal").map_err(ctx)?;
        same(&u["ideal_of_p"], json!(true), "U ideal of P").map_err(ctx)?;
        let ad = check(&r, "amalgam.ad-matrices").map_err(ctx)?;
        same(&ad["ad_psi(x)"], json!([["0", "0"], ["1", "0"]]), "ad psi(x)").map_err(ctx)?;
        same(&ad["ad_psi'(y)"], json!([["0", "1"], ["0", "0"]]), "ad psi'(y)").map_err(ctx)?;
        same(
            &check(&r, "amalgam.image-dim").map_err(ctx)?["dim"],
            json!(3),
            "dim ad(P)",
        )
        .map_err(ctx)?;
        let perfect = check(&r, "amalgam.image-perfect").map_err(ctx)?;
        same(
            perfect,
            json!({"perfect": true, "derived_dims": [3], "solvable": false}),
            "ad(P)",
        )
        .map_err(ctx)?;
        same(
            &check(&r, "amalgam.sl2-witness").map_err(ctx)?["isomorphism"],
            json!(true),
            "sl2 witness",
        )
        .map_err(ctx)?;
        within(t, Duration::from_secs(1)).map_err(ctx)?;
        times.push(format!("{f} {t:.2?}"));
    }
    Ok(format!(
        "dim P 5, U ideal, ad matrices match, ad(P) ≅ sl(2) of dim 3, perfect, not solvable ({})",
        times.join(", ")
    ))
}

fn criterion_4() -> Outcome {
    let (r, t) = report(&["--part", "groups"])?;
    let rel = check(&r, "groups.relations")?;
    for group in ["S", "B", "B'"] {
        let all = rel[group].as_object().ok_or("relations missing")?;
        ensure(
            all.values().all(|v| *v == json!(true)),
            format!("a relation of {group} fails"),
        )?;
    }
    same(
        check(&r, "groups.orders")?,
        json!({"S": 25, "B": 125, "B'": 125}),
        "orders",
    )?;
    same(
        check(&r, "groups.semidirect-orders")?,
        json!({"B_psi": 15625, "B'_psi'": 15625}),
        "semidirect orders",
    )?;
    for id in ["groups.bpsi.lcs", "groups.bpsi-prime.lcs"] {
        same(check(&r, id)?, json!({"orders": [15625, 125, 5, 1], "class": 3}), id)?;
    }
    for id in ["groups.bpsi.derived", "groups.bpsi-prime.derived"] {
        same(check(&r, id)?, json!({"orders": [15625, 125, 1], "class": 2}), id)?;
    }
    same(check(&r, "groups.bpsi.exponent")?, json!(5), "exponent")?;
    within(t, Duration::from_secs(30))?;
    Ok(format!(
        "relations hold, orders 25/125/125/15625, lcs [15625,125,5,1], derived [15625,125,1], exponent 5 ({t:.2?})"
    ))
}

fn criterion_5() -> Outcome {
    let (g, _) = report(&["--part", "groups"])?;
    same(
        check(&g, "groups.not-class-2")?,
        json!({"B_psi": true, "B'_psi'": true}),
        "gamma3 nontrivial",
    )?;
    same(&check(&g, "groups.bpsi.lcs")?["orders"][2], json!(5), "|gamma3|")?;
    let (l, _) = report(&["--part", "lie"])?;
    let not2 = check(&l, "lie.not-2-nilpotent")?;
    same(&not2["B_psi"], json!({"nonzero": true, "L2": ["e1"]}), "L2 of B_psi")?;
    Ok("class <= 2 fails: |gamma3(B_psi)| = 5 and L2(B_psi) = span{e1}".into())
}

fn random_rows(rng: &mut impl Rng, n: usize) -> Vec<Vec<u32>> {
    let k = rng.gen_range(0..=n);
    (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..5)).collect()).collect()
}

fn subspace(rows: &[Vec<u32>], n: usize) -> Subspace {
    let f = common::gf(5);
    let vs: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| f.from_i64(i64::from(x))).collect())
        .collect();
    Subspace::span(f, n, &vs).unwrap()
}

fn lie_properties(l: &LieAlgebra, rng: &mut impl Rng) -> Result<(), String> {
    let n = l.dim();
    let t = RawTable::from_algebra(l);
    // (a) product_subspace against all pairs of elements
    let (ra, rb) = (random_rows(rng, n), random_rows(rng, n));
    let full: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|k| u32::from(k == i)).collect()).collect();
    for (a, b) in [(&ra, &rb), (&full, &full), (&full, &ra)] {
        let (ea, eb) = (all_elements(a, n, 5), all_elements(b, n, 5));
        let pairs: Vec<Vec<u32>> = ea.iter().flat_map(|u| eb.iter().map(|v| t.bracket(u, v))).collect();
        let got = l
            .product_subspace(&subspace(a, n), &subspace(b, n))
            .map_err(|e| e.to_string())?;
        let got: Vec<Vec<u32>> = got.basis_vectors().iter().map(|v| residues(v)).collect();
        ensure(
            got == rref_mod(pairs, 5),
            "(a) product_subspace differs from the all-pairs span",
        )?;
    }
    // (b) ideals, (c) derived inside lower central
    let lcs = lower_central_series(l).map_err(|e| e.to_string())?;
    let der = derived_series(l).map_err(|e| e.to_string())?;
    for term in lcs.terms.iter().chain(&der.terms) {
        ensure(l.is_ideal(term).unwrap(), "(b) a series term is not an ideal")?;
    }
    for (k, d) in der.terms.iter().enumerate() {
        let c = lcs.terms.get(k).unwrap_or_else(|| lcs.terms.last().unwrap());
        ensure(
            d.is_subspace_of(c).unwrap(),
            format!("(c) derived term {k} not in lower central term {k}"),
        )?;
    }
    // (d) derivation condition on every basis matrix
    let d = derivations(l).map_err(|e| e.to_string())?;
    for m in &d.basis_maps {
        let m = residues(m.entries());
        let apply = |v: &[u32]| -> Vec<u32> {
            (0..n)
                .map(|r| (0..n).map(|k| m[r * n + k] * v[k]).sum::<u32>() % 5)
                .collect()
        };
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (&full[i], &full[j]);
                let lhs = apply(&t.bracket(ei, ej));
                let (x, y) = (t.bracket(&apply(ei), ej), t.bracket(ei, &apply(ej)));
                let rhs: Vec<u32> = x.iter().zip(&y).map(|(p, q)| (p + q) % 5).collect();
                ensure(lhs == rhs, "(d) a returned basis matrix is not a derivation")?;
            }
        }
    }
    Ok(())
}

fn group_properties(g: &MatrixGroup) -> Result<usize, String> {
    let whole = g.as_subgroup(DEFAULT_CAP).map_err(|e| e.to_string())?;
    // (e) commutator subgroups against all element pairs
    let d = commutator_subgroup(&whole, &whole.generators, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let brute = brute_force_commutator_subgroup(&whole, &whole, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(d.elements == brute.elements, "(e) [G,G] differs from brute force")?;
    let dd = commutator_subgroup(&whole, &d.generators, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let brute2 = brute_force_commutator_subgroup(&whole, &d, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(dd.elements == brute2.elements, "(e) [G,[G,G]] differs from brute force")?;
    // (b) normal subgroups, (c) derived inside lower central
    let lcs = lower_central_series_grp(g, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let der = derived_series_grp(g, DEFAULT_CAP).map_err(|e| e.to_string())?;
    for term in lcs.terms.iter().chain(&der.terms) {
        for h in term.elements.iter() {
            for x in g.generators() {
                let conj = x.inverse().unwrap().mul(h).mul(x);
                ensure(term.contains(&conj), "(b) a series term is not normal")?;
            }
        }
    }
    for (k, d) in der.terms.iter().enumerate() {
        let c = lcs.terms.get(k).unwrap_or_else(|| lcs.terms.last().unwrap());
        ensure(
            d.elements.is_subset(&c.elements),
            format!("(c) derived term {k} not in lower central term {k}"),
        )?;
    }
    Ok(whole.order())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let tables = random_valid_tables(&mut rng, 200, 3, 5);
    ensure(tables.len() == 200, "generator returned too few tables")?;
    for (n, l) in tables.iter().enumerate() {
        lie_properties(l, &mut rng).map_err(|e| format!("table {n}: {e}"))?;
    }
    let gl25 = MatrixGroup::new(
        5,
        2,
        vec![
            (
                "d".to_string(),
                GroupElement::from_rows(5, &[&[2, 0], &[0, 1]]).unwrap(),
            ),
            (
                "u".to_string(),
                GroupElement::from_rows(5, &[&[1, 1], &[0, 1]]).unwrap(),
            ),
            (
                "w".to_string(),
                GroupElement::from_rows(5, &[&[0, 1], &[4, 0]]).unwrap(),
            ),
        ],
    )
    .unwrap();
    let s = MatrixGroup::new(5, 3, vec![("a".into(), common::psi_a()), ("b".into(), common::psi_b())]).unwrap();
    let named = [("B", b_group()), ("B'", b_prime_group()), ("S", s), ("GL(2,5)", gl25)];
    for (name, g) in &named {
        group_properties(g).map_err(|e| format!("{name}: {e}"))?;
    }
    same(&json!(gl25_order(&named[3].1)), json!(480), "|GL(2,5)|")?;
    let mut largest = 0;
    for seed in 0..60 {
        let order = group_properties(&random_group(seed)).map_err(|e| format!("group seed {seed}: {e}"))?;
        largest = largest.max(order);
    }
    Ok(format!(
        "200 random GF(5) tables (a)-(d); B, B', S, GL(2,5) and 60 random groups of order <= {largest} (b),(c),(e): 0 failures"
    ))
}

fn gl25_order(g: &MatrixGroup) -> usize {
    g.enumerate(DEFAULT_CAP).map_or(0, |e| e.order())
}

fn criterion_7() -> Outcome {
    let (first, _) = verify_paper(&["--json"])?;
    let (second, _) = verify_paper(&["--json"])?;
    ensure(first == second, "reports differ between runs")?;
    let v: Value = serde_json::from_slice(&first).map_err(|e| e.to_string())?;
    let n = v.as_array().map_or(0, Vec::len);
    ensure(n == 3, format!("expected 3 reports, found {n}"))?;
    Ok(format!(
        "two runs of verify-paper --json are byte-identical ({} bytes)",
        first.len()
    ))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("1 Lie counterexample series", criterion_1),
        ("2 bracket-table fidelity", criterion_2),
        ("3 amalgam obstruction", criterion_3),
        ("4 group counterexample", criterion_4),
        ("5 class-2 negative control", criterion_5),
        ("6 property suites", criterion_6),
        ("7 report determinism", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
