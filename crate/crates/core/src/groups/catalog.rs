//! Standard small groups.

use std::collections::HashMap;

use super::{FiniteGroup, GroupError, Permutation};

impl FiniteGroup {
    /// `ℤ/n` with element `k` at index `k`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        FiniteGroup::from_fn_trusted(n, |a, b| (a + b) % n)
    }

    /// Dihedral group of the given (even) order, element `r^i s^j` at index
    /// `i + m·j` where `m = order / 2`.
    pub fn dihedral(order: usize) -> FiniteGroup {
        assert!(order >= 2 && order.is_multiple_of(2));
        let m = order / 2;
        FiniteGroup::from_fn_trusted(order, |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let rot = if j == 0 { i + k } else { i + m - k };
            rot % m + m * ((j + l) % 2)
        })
    }

    /// Dicyclic group of order `4m`: `⟨a, x | a^{2m} = 1, x² = a^m, x a x⁻¹ = a⁻¹⟩`,
    /// element `a^i x^j` at index `i + 2m·j`. Order 8 is the quaternion group.
    pub fn dicyclic(order: usize) -> FiniteGroup {
        assert!(order >= 8 && order.is_multiple_of(4));
        let n = order / 2;
        let m = order / 4;
        FiniteGroup::from_fn_trusted(order, |x, y| {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            if j == 0 {
                (i + k) % n + n * l
            } else if l == 0 {
                (i + n - k) % n + n
            } else {
                (i + n - k + m) % n
            }
        })
    }

    /// The group generated by permutations of `0..degree`. Elements are
    /// numbered in breadth-first order from the identity.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> FiniteGroup {
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in generators {
                let y = x.compose(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        FiniteGroup::from_fn_trusted(elements.len(), |a, b| index[&elements[a].compose(&elements[b])])
    }

    pub fn symmetric(n: usize) -> FiniteGroup {
        if n < 2 {
            return FiniteGroup::cyclic(1);
        }
        let mut cycle: Vec<usize> = (1..n).collect();
        cycle.push(0);
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        FiniteGroup::from_permutations(
            n,
            &[
                Permutation::from_images(cycle).unwrap(),
                Permutation::from_images(swap).unwrap(),
            ],
        )
    }

    /// Alternating group, generated by the 3-cycles `(0 1 k)`.
    pub fn alternating(n: usize) -> FiniteGroup {
        if n < 3 {
            return FiniteGroup::cyclic(1);
        }
        let gens: Vec<Permutation> = (2..n)
            .map(|k| {
                let mut img: Vec<usize> = (0..n).collect();
                img[0] = 1;
                img[1] = k;
                img[k] = 0;
                Permutation::from_images(img).unwrap()
            })
            .collect();
        FiniteGroup::from_permutations(n, &gens)
    }
}

/// One representative of every isomorphism class of groups of order `n`,
/// for `1 ≤ n ≤ 12`.
pub fn small_groups(n: usize) -> Result<Vec<FiniteGroup>, GroupError> {
    let c = FiniteGroup::cyclic;
    let groups = match n {
        1 | 2 | 3 | 5 | 7 | 11 => vec![c(n)],
        4 => vec![c(4), c(2).direct_product(&c(2))],
        6 => vec![c(6), FiniteGroup::symmetric(3)],
        8 => vec![
            c(8),
            c(4).direct_product(&c(2)),
            c(2).direct_product(&c(2)).direct_product(&c(2)),
            FiniteGroup::dihedral(8),
            FiniteGroup::dicyclic(8),
        ],
        9 => vec![c(9), c(3).direct_product(&c(3))],
        10 => vec![c(10), FiniteGroup::dihedral(10)],
        12 => vec![
            c(12),
            c(2).direct_product(&c(6)),
            FiniteGroup::alternating(4),
            FiniteGroup::dihedral(12),
            FiniteGroup::dicyclic(12),
        ],
        _ => return Err(GroupError::CapExceeded { order: n, cap: 12 }),
    };
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::super::{are_isomorphic_groups, is_nilpotent};
    use super::*;

    #[test]
    fn constructions_are_groups() {
        for g in [
            FiniteGroup::dihedral(8),
            FiniteGroup::dihedral(16),
            FiniteGroup::dicyclic(8),
            FiniteGroup::dicyclic(12),
            FiniteGroup::symmetric(4),
            FiniteGroup::alternating(5),
        ] {
            g.recheck().unwrap();
        }
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(5).order(), 60);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
    }

    #[test]
    fn catalogue_is_pairwise_distinct() {
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];
        for n in 1..=12 {
            let groups = small_groups(n).unwrap();
            assert_eq!(groups.len(), expected[n - 1], "order {n}");
            for (i, g) in groups.iter().enumerate() {
                assert_eq!(g.order(), n);
                for h in &groups[i + 1..] {
                    assert!(!are_isomorphic_groups(g, h).unwrap());
                }
            }
        }
        assert!(small_groups(13).is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = FiniteGroup::dicyclic(8);
        let involutions = (0..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(is_nilpotent(&q8));
        assert!(!is_nilpotent(&FiniteGroup::dicyclic(12)));
    }
}
