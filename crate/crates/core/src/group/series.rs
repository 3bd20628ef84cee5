use alloc::vec;
use alloc::vec::Vec;

use super::enumerate::closure;
use super::{commutator, GroupElement, GroupError, MatrixGroup, Subgroup};
use crate::lie::{SeriesClass, SeriesKind};

/// Lower central or derived series of a finite matrix group, indexed like
/// the Lie series: the first term is the group itself, and
/// [`SeriesClass::Terminates`]`(k)` means term `k` is the first trivial one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSeries {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    pub class: SeriesClass,
}

impl GroupSeries {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    pub fn length(&self) -> Option<usize> {
        match self.class {
            SeriesClass::Terminates(k) => Some(k),
            SeriesClass::Stabilizes => None,
        }
    }
}

/// Normal closure of `seeds` in `⟨ambient⟩`.
pub fn normal_closure(
    p: u32,
    n: usize,
    ambient: &[GroupElement],
    seeds: &[GroupElement],
    cap: usize,
) -> Result<Subgroup, GroupError> {
    let inverses: Vec<GroupElement> = ambient
        .iter()
        .map(|g| g.inverse().ok_or(GroupError::NotInGroup))
        .collect::<Result<_, _>>()?;
    let mut gens: Vec<GroupElement> = Vec::new();
    for s in seeds {
        if !s.is_identity() && !gens.contains(s) {
            gens.push(s.clone());
        }
    }
    let mut elements = closure(p, n, &gens, cap)?;
    let mut i = 0;
    while i < gens.len() {
        for (g, gi) in ambient.iter().zip(&inverses) {
            let conj = gi.mul(&gens[i]).mul(g);
            if !elements.contains(&conj) {
                gens.push(conj);
                elements = closure(p, n, &gens, cap)?;
            }
        }
        i += 1;
    }
    Ok(Subgroup {
        generators: gens,
        elements,
    })
}

/// `[G, H]` for `H = ⟨h_gens⟩ ≤ G`: the normal closure in `G` of the
/// commutators of generators.
pub fn commutator_subgroup(g: &Subgroup, h_gens: &[GroupElement], cap: usize) -> Result<Subgroup, GroupError> {
    let (p, n) = (g.elements.p(), g.elements.n());
    for h in h_gens {
        if !g.contains(h) {
            return Err(GroupError::NotInGroup);
        }
    }
    let mut seeds = Vec::with_capacity(g.generators.len() * h_gens.len());
    for x in &g.generators {
        for h in h_gens {
            seeds.push(commutator(x, h));
        }
    }
    normal_closure(p, n, &g.generators, &seeds, cap)
}

/// `[A, B]` by brute force: every commutator of an element of `a` with an
/// element of `b`, then closure. Only practical for small groups.
pub fn brute_force_commutator_subgroup(a: &Subgroup, b: &Subgroup, cap: usize) -> Result<Subgroup, GroupError> {
    let (p, n) = (a.elements.p(), a.elements.n());
    let mut gens = Vec::new();
    let mut seen = alloc::collections::BTreeSet::new();
    for x in a.elements.iter() {
        for y in b.elements.iter() {
            let c = commutator(x, y);
            if !c.is_identity() && seen.insert(c.clone()) {
                gens.push(c);
            }
        }
    }
    let elements = closure(p, n, &gens, cap)?;
    Ok(Subgroup {
        generators: gens,
        elements,
    })
}

fn run_series(
    g: &MatrixGroup,
    kind: SeriesKind,
    cap: usize,
    step: impl Fn(&Subgroup, &Subgroup) -> Result<Subgroup, GroupError>,
) -> Result<GroupSeries, GroupError> {
    let whole = g.as_subgroup(cap)?;
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().expect("series is never empty");
        if last.is_trivial() {
            let class = SeriesClass::Terminates(terms.len() - 1);
            return Ok(GroupSeries { kind, terms, class });
        }
        let next = step(&whole, last)?;
        if next.order() == last.order() {
            return Ok(GroupSeries {
                kind,
                terms,
                class: SeriesClass::Stabilizes,
            });
        }
        terms.push(next);
    }
}

/// `γ_1 = G`, `γ_{k+1} = [G, γ_k]`.
pub fn lower_central_series_grp(g: &MatrixGroup, cap: usize) -> Result<GroupSeries, GroupError> {
    run_series(g, SeriesKind::LowerCentral, cap, |whole, last| {
        commutator_subgroup(whole, &last.generators, cap)
    })
}

/// `G^(0) = G`, `G^(k+1) = [G^(k), G^(k)]`.
pub fn derived_series_grp(g: &MatrixGroup, cap: usize) -> Result<GroupSeries, GroupError> {
    run_series(g, SeriesKind::Derived, cap, |_, last| {
        commutator_subgroup(last, &last.generators, cap)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupElement, DEFAULT_CAP};
    use alloc::string::String;

    fn el(rows: &[&[u32]]) -> GroupElement {
        GroupElement::from_rows(5, rows).unwrap()
    }

    fn heisenberg_group() -> MatrixGroup {
        MatrixGroup::new(
            5,
            3,
            vec![
                (String::from("x"), el(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])),
                (String::from("a"), el(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]])),
                (String::from("b"), el(&[&[1, 0, 4], &[0, 1, 0], &[0, 0, 1]])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_group_series() {
        let g = heisenberg_group();
        let lcs = lower_central_series_grp(&g, DEFAULT_CAP).unwrap();
        assert_eq!(lcs.orders(), vec![125, 5, 1]);
        assert_eq!(lcs.class, SeriesClass::Terminates(2));
        assert_eq!(derived_series_grp(&g, DEFAULT_CAP).unwrap().orders(), vec![125, 5, 1]);
    }

    #[test]
    fn commutator_with_trivial_subgroup() {
        let whole = heisenberg_group().as_subgroup(DEFAULT_CAP).unwrap();
        let id = GroupElement::identity(5, 3);
        let c = commutator_subgroup(&whole, &[id], DEFAULT_CAP).unwrap();
        assert!(c.is_trivial());
    }

    #[test]
    fn foreign_element_is_rejected() {
        let whole = heisenberg_group().as_subgroup(DEFAULT_CAP).unwrap();
        let d = el(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            commutator_subgroup(&whole, &[d], DEFAULT_CAP),
            Err(GroupError::NotInGroup)
        );
    }

    #[test]
    fn perfect_group_stabilizes() {
        // SL(2, 5) is perfect
        let s = MatrixGroup::new(
            5,
            2,
            vec![
                (String::from("u"), el(&[&[1, 1], &[0, 1]])),
                (String::from("l"), el(&[&[1, 0], &[1, 1]])),
            ],
        )
        .unwrap();
        let lcs = lower_central_series_grp(&s, DEFAULT_CAP).unwrap();
        assert_eq!(lcs.orders(), vec![120]);
        assert_eq!(lcs.class, SeriesClass::Stabilizes);
    }
}
