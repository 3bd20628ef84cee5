use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use super::GroupError;
use crate::exactmath::{ExactMatrix, FieldSpec};

/// An `n x n` matrix over `GF(p)` stored as row-major canonical residues.
///
/// The residue sequence is the canonical form: equality, ordering and
/// hashing all go through it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    p: u32,
    n: usize,
    entries: Vec<u32>,
}

/// How `[g, h]` expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommutatorConvention {
    /// `g⁻¹h⁻¹gh`
    #[default]
    LeftInverse,
    /// `ghg⁻¹h⁻¹`
    RightInverse,
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u32;
    let mut base = a;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

impl GroupElement {
    pub fn identity(p: u32, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % p;
        }
        GroupElement { p, n, entries }
    }

    /// Checks entries are residues in `[0, p)`. Invertibility is not checked.
    pub fn new(p: u32, n: usize, entries: Vec<u32>) -> Result<Self, GroupError> {
        if entries.len() != n * n {
            return Err(GroupError::Shape {
                expected: n,
                found: entries.len(),
            });
        }
        if let Some(&v) = entries.iter().find(|&&v| v >= p) {
            return Err(GroupError::ResidueOutOfRange { value: v as u64, p });
        }
        Ok(GroupElement { p, n, entries })
    }

    pub fn from_rows(p: u32, rows: &[&[u32]]) -> Result<Self, GroupError> {
        let n = rows.len();
        let entries: Vec<u32> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        GroupElement::new(p, n, entries)
    }

    /// From a square matrix over `GF(p)`.
    pub fn from_matrix(m: &ExactMatrix) -> Result<Self, GroupError> {
        let p = m
            .field()
            .modulus()
            .ok_or(GroupError::Exact(crate::ExactError::FieldMismatch {
                left: FieldSpec::rationals(),
                right: m.field(),
            }))?;
        if !m.is_square() {
            return Err(GroupError::Shape {
                expected: m.rows(),
                found: m.entries().len(),
            });
        }
        let entries = m
            .entries()
            .iter()
            .map(|s| s.residue_value().expect("prime field entries"))
            .collect();
        GroupElement::new(p, m.rows(), entries)
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        let field = FieldSpec::prime(self.p as u64).expect("group modulus is prime");
        let entries = self.entries.iter().map(|&v| field.from_i64(v as i64)).collect();
        ExactMatrix::new(field, self.n, self.n, entries).expect("square")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.n + c]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    /// Matrix product. Panics if the shapes or moduli differ.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        assert!(self.p == other.p && self.n == other.n, "group element mismatch");
        let n = self.n;
        let p = self.p as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u64 * other.entries[k * n + j] as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                entries[i * n + j] = (acc % p) as u32;
            }
        }
        GroupElement { p: self.p, n, entries }
    }

    pub fn determinant(&self) -> u32 {
        let (n, p) = (self.n, self.p);
        let mut m = self.entries.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for c in 0..n {
                    m.swap(piv * n + c, col * n + c);
                }
                det = (p - det) % p;
            }
            let pv = m[col * n + col];
            det = mul_mod(det, pv, p);
            let inv = inv_mod(pv, p);
            for r in col + 1..n {
                let f = mul_mod(m[r * n + col], inv, p);
                if f == 0 {
                    continue;
                }
                for c in col..n {
                    let sub = mul_mod(f, m[col * n + c], p);
                    m[r * n + c] = (m[r * n + c] + p - sub) % p;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; `None` for singular matrices.
    pub fn inverse(&self) -> Option<GroupElement> {
        let (n, p) = (self.n, self.p);
        let w = 2 * n;
        let mut m = vec![0u32; n * w];
        for r in 0..n {
            m[r * w..r * w + n].copy_from_slice(&self.entries[r * n..(r + 1) * n]);
            m[r * w + n + r] = 1 % p;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| m[r * w + col] != 0)?;
            if piv != col {
                for c in 0..w {
                    m.swap(piv * w + c, col * w + c);
                }
            }
            let inv = inv_mod(m[col * w + col], p);
            for c in 0..w {
                m[col * w + c] = mul_mod(m[col * w + c], inv, p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = m[r * w + col];
                if f == 0 {
                    continue;
                }
                for c in 0..w {
                    let sub = mul_mod(f, m[col * w + c], p);
                    m[r * w + c] = (m[r * w + c] + p - sub) % p;
                }
            }
        }
        let entries = (0..n).flat_map(|r| m[r * w + n..r * w + w].to_vec()).collect();
        Some(GroupElement { p, n, entries })
    }

    /// `self^k`; negative powers go through the inverse. Panics on singular
    /// elements with `k < 0`.
    pub fn pow(&self, k: i64) -> GroupElement {
        let base = if k < 0 {
            self.inverse().expect("negative power of a singular matrix")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = GroupElement::identity(self.p, self.n);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }
}

/// `[g, h] = g⁻¹h⁻¹gh`.
pub fn commutator(g: &GroupElement, h: &GroupElement) -> GroupElement {
    let gi = g.inverse().expect("invertible");
    let hi = h.inverse().expect("invertible");
    gi.mul(&hi).mul(g).mul(h)
}

/// Least `k ≥ 1` with `g^k = 1`. Panics on singular input.
pub fn element_order(g: &GroupElement) -> u64 {
    assert!(g.determinant() != 0, "element_order of a singular matrix");
    let mut k = 1u64;
    let mut acc = g.clone();
    while !acc.is_identity() {
        acc = acc.mul(g);
        k += 1;
    }
    k
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[", self.p)?;
        for r in 0..self.n {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.n {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(rows: &[&[u32]]) -> GroupElement {
        GroupElement::from_rows(5, rows).unwrap()
    }

    #[test]
    fn inverse_and_det() {
        let x = el(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(x.determinant(), 1);
        let xi = x.inverse().unwrap();
        assert!(x.mul(&xi).is_identity());
        assert_eq!(xi, el(&[&[1, 4, 0], &[0, 1, 0], &[0, 0, 1]]));
        let sing = el(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.determinant(), 0);
        assert!(sing.inverse().is_none());
        let swap = el(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant(), 4);
    }

    #[test]
    fn orders() {
        let x = el(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(element_order(&x), 5);
        assert_eq!(element_order(&GroupElement::identity(5, 3)), 1);
        assert_eq!(element_order(&el(&[&[2]])), 4);
        assert!(x.pow(5).is_identity());
        assert_eq!(x.pow(-1), x.inverse().unwrap());
        assert_eq!(x.pow(0), GroupElement::identity(5, 3));
    }

    #[test]
    fn heisenberg_commutator() {
        let x = el(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let a = el(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert_eq!(commutator(&x, &a), el(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn residues_are_validated() {
        assert!(matches!(
            GroupElement::from_rows(5, &[&[5]]),
            Err(GroupError::ResidueOutOfRange { value: 5, p: 5 })
        ));
        assert!(GroupElement::new(5, 2, vec![1, 0, 0]).is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let x = el(&[&[1, 0, 4], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(GroupElement::from_matrix(&x.to_matrix()).unwrap(), x);
    }
}
