use alloc::format;
use alloc::vec::Vec;

use super::{GroupElement, MatrixGroup};

/// The block matrix `[[g, 0], [0, 1]]` in `GL(n + 1, p)`.
fn embed(g: &GroupElement) -> GroupElement {
    let n = g.n();
    let m = n + 1;
    let mut entries = alloc::vec![0u32; m * m];
    for r in 0..n {
        entries[r * m..r * m + n].copy_from_slice(&g.entries()[r * n..(r + 1) * n]);
    }
    entries[m * m - 1] = 1;
    GroupElement::new(g.p(), m, entries).expect("residues preserved")
}

/// The translation by `v` as the block matrix `[[1, v], [0, 1]]`.
pub fn translation(p: u32, v: &[u32]) -> GroupElement {
    let n = v.len();
    let m = n + 1;
    let mut t = GroupElement::identity(p, m).entries().to_vec();
    for (r, &x) in v.iter().enumerate() {
        t[r * m + n] = x % p;
    }
    GroupElement::new(p, m, t).expect("residues reduced")
}

/// `G ⋉ Z_p^n` inside `GL(n + 1, p)`: `(g, x)` is the block matrix
/// `[[g, x], [0, 1]]`, so block multiplication gives
/// `(g, x)(g', x') = (gg', x + g x')`. Generators are those of `G`
/// followed by the standard translations `t1, ..., tn`.
pub fn vector_semidirect(g: &MatrixGroup) -> MatrixGroup {
    let (p, n) = (g.p(), g.n());
    let mut gens: Vec<_> = g
        .labels()
        .iter()
        .cloned()
        .zip(g.generators().iter().map(embed))
        .collect();
    for i in 0..n {
        let mut v = alloc::vec![0u32; n];
        v[i] = 1;
        gens.push((format!("t{}", i + 1), translation(p, &v)));
    }
    MatrixGroup::new(p, n + 1, gens).expect("embedding preserves invertibility")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn trivial_group_on_a_line() {
        let triv = MatrixGroup::new(5, 1, alloc::vec![]).unwrap();
        let sd = vector_semidirect(&triv);
        assert_eq!(sd.n(), 2);
        assert_eq!(sd.enumerate(DEFAULT_CAP).unwrap().order(), 5);
    }

    #[test]
    fn block_product_is_semidirect_law() {
        let g = GroupElement::from_rows(5, &[&[1, 1], &[0, 1]]).unwrap();
        let h = GroupElement::from_rows(5, &[&[2, 0], &[0, 3]]).unwrap();
        let (x, y) = ([1u32, 2], [3u32, 4]);
        // (g, x) is t(x) e(g); expect (g, x)(h, y) = (gh, x + g y)
        let lhs = translation(5, &x)
            .mul(&embed(&g))
            .mul(&translation(5, &y))
            .mul(&embed(&h));
        let gy = [(3 + 4) % 5, 4];
        let sum = [(x[0] + gy[0]) % 5, (x[1] + gy[1]) % 5];
        let rhs = translation(5, &sum).mul(&embed(&g.mul(&h)));
        assert_eq!(lhs, rhs);
    }
}
