//! Named example braces with fixed labellings.

use crate::brace::{brace_from_group, SkewBrace};
use crate::constructions::{brace_from_cocycle, semidirect_product, CocycleDatum};
use crate::groups::{FiniteGroup, Permutation};

/// The dihedral group of order 16 acting on `ℤ/8 × ℤ/2` with a bijective
/// 1-cocycle.
///
/// `X` has `m·a + n·b` at index `2m + n`. `G` has `r^i s^j` at index
/// `i + 8j`, and `r^i s^j` acts as `R^i S^j` with `R: a ↦ a + b, b ↦ 4a + b`
/// and `S: a ↦ 3a, b ↦ 4a + b`.
pub fn funny_cocycle() -> CocycleDatum {
    let g = FiniteGroup::dihedral(16);
    let x = FiniteGroup::cyclic(8).direct_product(&FiniteGroup::cyclic(2));
    let idx = |m: usize, n: usize| 2 * (m % 8) + n % 2;
    let linear = |ia: (usize, usize), ib: (usize, usize)| -> Vec<usize> {
        (0..16)
            .map(|v| {
                let (m, n) = (v / 2, v % 2);
                idx(m * ia.0 + n * ib.0, m * ia.1 + n * ib.1)
            })
            .collect()
    };
    let r = linear((1, 1), (4, 1));
    let s = linear((3, 0), (4, 1));
    let action = (0..16)
        .map(|e| {
            let (i, j) = (e % 8, e / 8);
            (0..16)
                .map(|v| {
                    let mut w = if j == 1 { s[v] } else { v };
                    for _ in 0..i {
                        w = r[w];
                    }
                    w
                })
                .collect()
        })
        .collect();
    // r^i ↦ …, then r^i s ↦ …
    let images = [
        (0, 0),
        (1, 0),
        (2, 1),
        (7, 1),
        (4, 0),
        (5, 0),
        (6, 1),
        (3, 1),
        (1, 1),
        (6, 0),
        (7, 0),
        (0, 1),
        (5, 1),
        (2, 0),
        (3, 0),
        (4, 1),
    ];
    let pi = images.iter().map(|&(m, n)| idx(m, n)).collect();
    CocycleDatum { g, x, action, pi }
}

/// The order-16 brace of [`funny_cocycle`]: abelian type, with strong
/// series sizes 16, 8, 4, 2, 2, 1.
pub fn funny_brace() -> SkewBrace {
    brace_from_cocycle(&funny_cocycle()).expect("the tabulated cocycle is valid")
}

/// `ℤ/3 ⋊ ℤ/2` with `ℤ/2` acting by inversion on the trivial brace `ℤ/3`.
/// The pair `(x, y)` sits at index `3y + x`.
pub fn fix_example() -> SkewBrace {
    let z3 = brace_from_group(&FiniteGroup::cyclic(3));
    let z2 = brace_from_group(&FiniteGroup::cyclic(2));
    let inversion = Permutation::from_images(vec![0, 2, 1]).unwrap();
    let product = semidirect_product(&z3, &z2, &[Permutation::identity(3), inversion])
        .expect("inversion is a brace automorphism of a trivial brace");
    // The product puts (x, y) at 2x + y.
    let perm: Vec<usize> = (0..6).map(|old| 3 * (old % 2) + old / 2).collect();
    product.relabel(&perm)
}

/// Adjoint brace `a ∘ b = a + b + ab` of the commutative ring over `𝔽₂`
/// spanned by `x, y, xy` with `x² = y² = 0`. Index is `c₁ + 2c₂ + 4c₃` for
/// `c₁x + c₂y + c₃xy`.
pub fn f2_ring_brace() -> SkewBrace {
    let mul = |a: usize, b: usize| (((a & 1) & (b >> 1 & 1)) ^ ((a >> 1 & 1) & (b & 1))) << 2;
    let add = FiniteGroup::from_fn_trusted(8, |a, b| a ^ b);
    let circle = FiniteGroup::from_fn_trusted(8, |a, b| a ^ b ^ mul(a, b));
    SkewBrace::revalidate(add, circle).expect("adjoint groups of nilpotent rings give braces")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn funny_is_not_trivial_and_abelian_type() {
        let a = funny_brace();
        assert!(!a.is_trivial());
        assert!(a.additive_group().is_abelian());
        assert!(!a.multiplicative_group().is_abelian());
    }

    #[test]
    fn fix_example_labels() {
        let a = fix_example();
        // (1, 0) + (1, 0) = (2, 0)
        assert_eq!(a.add(1, 1), 2);
        // (0, 1) ∘ (1, 0) = (−1, 1)
        assert_eq!(a.circ(3, 1), 5);
        assert_eq!(a.add(3, 3), 0);
    }

    #[test]
    fn f2_ring() {
        let a = f2_ring_brace();
        // x ∘ y = x + y + xy
        assert_eq!(a.circ(1, 2), 7);
        assert_eq!(a.circ(1, 1), 0);
        assert!(a.multiplicative_group().is_abelian());
    }
}
