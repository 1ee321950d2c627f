//! Brace isomorphism: invariant pruning followed by generator-image search.

use std::collections::VecDeque;

use serde::Serialize;

use super::{BraceError, SkewBrace};
use crate::groups::{find_isomorphism, is_bijection, ElementSet, ISOMORPHISM_CAP};
use crate::series::{left_series, right_series};
use crate::substructure::{fix, generated_subbrace, ker_lambda, lambda_orbit, socle};

/// Isomorphism invariants. Equal signatures are necessary for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BraceSignature {
    pub order: usize,
    pub add_abelian: bool,
    pub circle_abelian: bool,
    pub add_orders: Vec<usize>,
    pub circle_orders: Vec<usize>,
    pub socle: usize,
    pub fix: usize,
    pub ker_lambda: usize,
    pub lambda_image: usize,
    pub right_series: Vec<usize>,
    pub left_series: Vec<usize>,
    pub element_profiles: Vec<ElementProfile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementProfile {
    add_order: usize,
    circle_order: usize,
    lambda_orbit: usize,
    lambda_fixed_points: usize,
    in_socle: bool,
    in_fix: bool,
    in_ker_lambda: bool,
}

fn element_profiles(a: &SkewBrace, soc: &ElementSet, fx: &ElementSet, ker: &ElementSet) -> Vec<ElementProfile> {
    (0..a.order())
        .map(|x| ElementProfile {
            add_order: a.additive_group().element_order(x),
            circle_order: a.multiplicative_group().element_order(x),
            lambda_orbit: lambda_orbit(a, x).len(),
            lambda_fixed_points: a.lambda_row(x).iter().enumerate().filter(|(i, &y)| *i == y).count(),
            in_socle: soc.contains(x),
            in_fix: fx.contains(x),
            in_ker_lambda: ker.contains(x),
        })
        .collect()
}

impl BraceSignature {
    pub fn of(a: &SkewBrace) -> Self {
        let soc = socle(a);
        let fx = fix(a);
        let ker = ker_lambda(a);
        let mut element_profiles = element_profiles(a, &soc, &fx, &ker);
        element_profiles.sort();
        let mut add_orders: Vec<usize> = (0..a.order()).map(|x| a.additive_group().element_order(x)).collect();
        add_orders.sort_unstable();
        let mut circle_orders: Vec<usize> = (0..a.order())
            .map(|x| a.multiplicative_group().element_order(x))
            .collect();
        circle_orders.sort_unstable();
        let mut images: Vec<&[usize]> = (0..a.order()).map(|x| a.lambda_row(x)).collect();
        images.sort_unstable();
        images.dedup();
        BraceSignature {
            order: a.order(),
            add_abelian: a.additive_group().is_abelian(),
            circle_abelian: a.multiplicative_group().is_abelian(),
            add_orders,
            circle_orders,
            socle: soc.len(),
            fix: fx.len(),
            ker_lambda: ker.len(),
            lambda_image: images.len(),
            right_series: right_series(a).terms.iter().map(|t| t.len()).collect(),
            left_series: left_series(a).terms.iter().map(|t| t.len()).collect(),
            element_profiles,
        }
    }
}

pub fn are_isomorphic_braces(a: &SkewBrace, b: &SkewBrace) -> Result<bool, BraceError> {
    are_isomorphic_braces_with_cap(a, b, ISOMORPHISM_CAP)
}

pub fn are_isomorphic_braces_with_cap(a: &SkewBrace, b: &SkewBrace, cap: usize) -> Result<bool, BraceError> {
    for x in [a, b] {
        if x.order() > cap {
            return Err(BraceError::CapExceeded { order: x.order(), cap });
        }
    }
    Ok(find_brace_isomorphism(a, b).is_some())
}

/// A bijection preserving both tables, if one exists. Not capped.
pub fn find_brace_isomorphism(a: &SkewBrace, b: &SkewBrace) -> Option<Vec<usize>> {
    if a.order() != b.order() || BraceSignature::of(a) != BraceSignature::of(b) {
        return None;
    }
    if find_isomorphism(a.additive_group(), b.additive_group()).is_none()
        || find_isomorphism(a.multiplicative_group(), b.multiplicative_group()).is_none()
    {
        return None;
    }
    let profile = |x: &SkewBrace| element_profiles(x, &socle(x), &fix(x), &ker_lambda(x));
    let pa = profile(a);
    let pb = profile(b);

    let gens = brace_generators(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..b.order()).filter(|&y| pb[y] == pa[g]).collect())
        .collect();
    let mut images = vec![0; gens.len()];
    search(a, b, &gens, &candidates, &mut images, 0)
}

fn search(
    a: &SkewBrace,
    b: &SkewBrace,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        let f = extend(a, b, gens, images)?;
        let ok = is_bijection(&f)
            && (0..a.order()).all(|x| {
                (0..a.order()).all(|y| f[a.add(x, y)] == b.add(f[x], f[y]) && f[a.circ(x, y)] == b.circ(f[x], f[y]))
            });
        return ok.then_some(f);
    }
    for &t in &candidates[depth] {
        if images[..depth].contains(&t) {
            continue;
        }
        images[depth] = t;
        if extend(a, b, &gens[..=depth], &images[..=depth]).is_none() {
            continue;
        }
        if let Some(f) = search(a, b, gens, candidates, images, depth + 1) {
            return Some(f);
        }
    }
    None
}

/// Greedy generators of `a` as a brace.
fn brace_generators(a: &SkewBrace) -> Vec<usize> {
    let mut order: Vec<usize> = (1..a.order()).collect();
    order.sort_by_key(|&x| {
        std::cmp::Reverse((
            a.additive_group().element_order(x),
            a.multiplicative_group().element_order(x),
        ))
    });
    let mut gens = Vec::new();
    let mut span = ElementSet::zero(a.order());
    for x in order {
        if span.is_full() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = generated_subbrace(a, &ElementSet::new(a.order(), gens.iter().copied()).unwrap());
        }
    }
    gens
}

/// Propagates `gens ↦ images` through sums and products of already mapped
/// elements. Conflicts mean no isomorphism extends the assignment.
fn extend(a: &SkewBrace, b: &SkewBrace, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut f = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    let mut done: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    let mut assign = |x: usize, fx: usize, f: &mut Vec<usize>, queue: &mut VecDeque<usize>| -> bool {
        if f[x] == usize::MAX {
            if used[fx] {
                return false;
            }
            used[fx] = true;
            f[x] = fx;
            queue.push_back(x);
            true
        } else {
            f[x] == fx
        }
    };
    if !assign(0, 0, &mut f, &mut queue) {
        return None;
    }
    for (&g, &h) in gens.iter().zip(images) {
        if !assign(g, h, &mut f, &mut queue) {
            return None;
        }
    }
    while let Some(z) = queue.pop_front() {
        done.push(z);
        for &w in &done {
            let pairs = [
                (a.add(z, w), b.add(f[z], f[w])),
                (a.add(w, z), b.add(f[w], f[z])),
                (a.circ(z, w), b.circ(f[z], f[w])),
                (a.circ(w, z), b.circ(f[w], f[z])),
            ];
            for (y, fy) in pairs {
                if !assign(y, fy, &mut f, &mut queue) {
                    return None;
                }
            }
        }
    }
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::brace_from_group;
    use crate::catalog;
    use crate::groups::FiniteGroup;

    #[test]
    fn trivial_braces_on_different_groups() {
        let z4 = brace_from_group(&FiniteGroup::cyclic(4));
        let v4 = brace_from_group(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)));
        assert!(!are_isomorphic_braces(&z4, &v4).unwrap());
    }

    #[test]
    fn relabeling_is_isomorphic() {
        let a = catalog::funny_brace();
        let mut perm: Vec<usize> = (0..16).collect();
        perm[1..].reverse();
        perm.swap(3, 9);
        let b = a.relabel(&perm);
        assert_ne!(a, b);
        let f = find_brace_isomorphism(&a, &b).unwrap();
        for x in 0..16 {
            for y in 0..16 {
                assert_eq!(f[a.circ(x, y)], b.circ(f[x], f[y]));
            }
        }
        assert!(are_isomorphic_braces(&a, &b).unwrap());
    }

    #[test]
    fn cap() {
        let a = brace_from_group(&FiniteGroup::cyclic(33));
        assert!(matches!(
            are_isomorphic_braces(&a, &a),
            Err(BraceError::CapExceeded { order: 33, cap: 32 })
        ));
    }
}
