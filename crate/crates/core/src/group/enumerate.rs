use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::element::element_order;
use super::{GroupElement, GroupError};
use crate::exactmath::{ExactMatrix, FieldSpec};

/// Default limit on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A subgroup of `GL(n, p)` given by labelled invertible generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup {
    p: u32,
    n: usize,
    labels: Vec<String>,
    generators: Vec<GroupElement>,
}

impl MatrixGroup {
    pub fn new(p: u32, n: usize, generators: Vec<(String, GroupElement)>) -> Result<Self, GroupError> {
        FieldSpec::prime(p as u64)?;
        let mut labels = Vec::with_capacity(generators.len());
        let mut gens = Vec::with_capacity(generators.len());
        for (label, g) in generators {
            if g.p() != p || g.n() != n {
                return Err(GroupError::Mismatch(p, n, g.p(), g.n()));
            }
            if labels.contains(&label) {
                return Err(GroupError::DuplicateLabel(label));
            }
            if g.determinant() == 0 {
                return Err(GroupError::NotInvertible(label));
            }
            labels.push(label);
            gens.push(g);
        }
        Ok(MatrixGroup {
            p,
            n,
            labels,
            generators: gens,
        })
    }

    /// From square matrices over `GF(p)`.
    pub fn from_matrices(
        field: FieldSpec,
        n: usize,
        generators: Vec<(String, ExactMatrix)>,
    ) -> Result<Self, GroupError> {
        let p = field
            .modulus()
            .ok_or(GroupError::Exact(crate::ExactError::FieldMismatch {
                left: FieldSpec::rationals(),
                right: field,
            }))?;
        let gens = generators
            .into_iter()
            .map(|(l, m)| {
                if m.rows() != n || m.cols() != n {
                    return Err(GroupError::Shape {
                        expected: n,
                        found: m.entries().len(),
                    });
                }
                Ok((l, GroupElement::from_matrix(&m)?))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MatrixGroup::new(p, n, gens)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<&GroupElement> {
        self.labels.iter().position(|l| l == label).map(|i| &self.generators[i])
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.p, self.n)
    }

    /// Breadth-first closure of the generators under multiplication.
    pub fn enumerate(&self, cap: usize) -> Result<ElementSet, GroupError> {
        closure(self.p, self.n, &self.generators, cap)
    }

    /// The whole group as a [`Subgroup`] of itself.
    pub fn as_subgroup(&self, cap: usize) -> Result<Subgroup, GroupError> {
        Ok(Subgroup {
            generators: self.generators.clone(),
            elements: self.enumerate(cap)?,
        })
    }
}

/// The elements of a finite matrix group, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    p: u32,
    n: usize,
    elements: BTreeSet<GroupElement>,
}

impl ElementSet {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> + '_ {
        self.elements.iter()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn is_abelian(&self) -> bool {
        let els: Vec<&GroupElement> = self.elements.iter().collect();
        els.iter()
            .enumerate()
            .all(|(i, a)| els[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }
}

/// A subgroup together with the generators it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub generators: Vec<GroupElement>,
    pub elements: ElementSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.order()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

/// Closure of `gens` (plus the identity) under multiplication.
pub(crate) fn closure(p: u32, n: usize, gens: &[GroupElement], cap: usize) -> Result<ElementSet, GroupError> {
    if cap == 0 {
        return Err(GroupError::ZeroCap);
    }
    for g in gens {
        if g.p() != p || g.n() != n {
            return Err(GroupError::Mismatch(p, n, g.p(), g.n()));
        }
    }
    let id = GroupElement::identity(p, n);
    let mut elements = BTreeSet::new();
    elements.insert(id.clone());
    let mut frontier = alloc::vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in gens {
                let prod = e.mul(g);
                if elements.contains(&prod) {
                    continue;
                }
                if elements.len() == cap {
                    return Err(GroupError::CapExceeded(cap));
                }
                elements.insert(prod.clone());
                next.push(prod);
            }
        }
        frontier = next;
    }
    Ok(ElementSet { p, n, elements })
}

/// Least common multiple of all element orders.
pub fn group_exponent(set: &ElementSet) -> u64 {
    set.iter()
        .map(element_order)
        .fold(1, |acc, k| num_integer::Integer::lcm(&acc, &k))
}
