//! Automorphisms and isomorphism testing by generator-image search.

use std::collections::VecDeque;

use super::{subgroup_closure, ElementSet, FiniteGroup, GroupError, Permutation};

pub const AUTOMORPHISM_CAP: usize = 16;
pub const ISOMORPHISM_CAP: usize = 32;

/// A small generating set, picked greedily by decreasing element order.
pub(crate) fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens = Vec::new();
    let mut span = ElementSet::zero(g.order());
    for x in by_order {
        if span.is_full() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = subgroup_closure(g, &ElementSet::new(g.order(), gens.iter().copied()).unwrap());
        }
    }
    gens
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `g → h` along the Cayley
/// graph. Returns `None` on any inconsistency.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut f = vec![usize::MAX; g.order()];
    f[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.op(x, s);
            let fy = h.op(f[x], t);
            if f[y] == usize::MAX {
                f[y] = fy;
                queue.push_back(y);
            } else if f[y] != fy {
                return None;
            }
        }
    }
    Some(f)
}

/// Calls `visit` with every isomorphism `g → h` until it returns `false`.
fn for_each_isomorphism(g: &FiniteGroup, h: &FiniteGroup, mut visit: impl FnMut(Vec<usize>) -> bool) {
    if g.order() != h.order() {
        return;
    }
    let gens = generating_set(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            (0..h.order()).filter(|&t| h.element_order(t) == o).collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    fn rec(
        depth: usize,
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        visit: &mut dyn FnMut(Vec<usize>) -> bool,
    ) -> bool {
        if depth == gens.len() {
            if let Some(f) = extend(g, h, gens, images) {
                if super::is_bijection(&f) {
                    return visit(f);
                }
            }
            return true;
        }
        for &t in &candidates[depth] {
            images[depth] = t;
            // Prefix consistency: the partial map must extend on the
            // subgroup generated so far.
            if extend(g, h, &gens[..=depth], &images[..=depth]).is_none() {
                continue;
            }
            if !rec(depth + 1, g, h, gens, candidates, images, visit) {
                return false;
            }
        }
        true
    }
    rec(0, g, h, &gens, &candidates, &mut images, &mut visit);
}

pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Permutation>, GroupError> {
    automorphisms_with_cap(g, AUTOMORPHISM_CAP)
}

/// All automorphisms, as permutations fixing 0.
pub fn automorphisms_with_cap(g: &FiniteGroup, cap: usize) -> Result<Vec<Permutation>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::CapExceeded { order: g.order(), cap });
    }
    let mut out = Vec::new();
    for_each_isomorphism(g, g, |f| {
        out.push(Permutation::from_images(f).unwrap());
        true
    });
    out.sort();
    Ok(out)
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut p: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    p.sort_unstable();
    p
}

pub fn are_isomorphic_groups(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, GroupError> {
    are_isomorphic_groups_with_cap(g, h, ISOMORPHISM_CAP)
}

pub fn are_isomorphic_groups_with_cap(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<bool, GroupError> {
    for x in [g, h] {
        if x.order() > cap {
            return Err(GroupError::CapExceeded { order: x.order(), cap });
        }
    }
    Ok(find_isomorphism(g, h).is_some())
}

/// An isomorphism `g → h` as an image vector, if one exists. Not capped.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() || order_profile(g) != order_profile(h) {
        return None;
    }
    let mut found = None;
    for_each_isomorphism(g, h, |f| {
        found = Some(f);
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_automorphism_count(g: &FiniteGroup) -> usize {
        // Heap's algorithm over permutations fixing 0.
        let n = g.order();
        let mut rest: Vec<usize> = (1..n).collect();
        let mut count = 0;
        let mut check = |rest: &[usize]| {
            let mut f = vec![0];
            f.extend_from_slice(rest);
            if (0..n).all(|a| (0..n).all(|b| f[g.op(a, b)] == g.op(f[a], f[b]))) {
                count += 1;
            }
        };
        fn heap(k: usize, a: &mut Vec<usize>, check: &mut dyn FnMut(&[usize])) {
            if k <= 1 {
                check(a);
                return;
            }
            heap(k - 1, a, check);
            for i in 0..k - 1 {
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
                heap(k - 1, a, check);
            }
        }
        let len = rest.len();
        heap(len, &mut rest, &mut check);
        count
    }

    #[test]
    fn automorphism_counts() {
        let c = FiniteGroup::cyclic;
        assert_eq!(automorphisms(&c(2)).unwrap().len(), 1);
        assert_eq!(automorphisms(&c(5)).unwrap().len(), 4);
        let v4 = c(2).direct_product(&c(2));
        assert_eq!(automorphisms(&v4).unwrap().len(), 6);
        for g in [
            v4,
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(8),
            FiniteGroup::dicyclic(8),
            c(8),
        ] {
            let auts = automorphisms(&g).unwrap();
            assert_eq!(auts.len(), brute_force_automorphism_count(&g));
            for f in &auts {
                assert_eq!(f.apply(0), 0);
            }
        }
        let z2_3 = c(2).direct_product(&c(2)).direct_product(&c(2));
        assert_eq!(automorphisms(&z2_3).unwrap().len(), 168);
        assert!(matches!(
            automorphisms(&c(17)),
            Err(GroupError::CapExceeded { order: 17, cap: 16 })
        ));
    }

    #[test]
    fn isomorphism() {
        let c = FiniteGroup::cyclic;
        assert!(!are_isomorphic_groups(&c(4), &c(2).direct_product(&c(2))).unwrap());
        assert!(are_isomorphic_groups(&c(6), &c(2).direct_product(&c(3))).unwrap());
        let d8 = FiniteGroup::dihedral(8);
        let relabeled = d8.relabel(&[0, 3, 1, 2, 7, 6, 5, 4]);
        assert!(are_isomorphic_groups(&d8, &relabeled).unwrap());
        assert!(!are_isomorphic_groups(&d8, &FiniteGroup::dicyclic(8)).unwrap());
        assert!(are_isomorphic_groups(&c(33), &c(33)).is_err());
    }
}
