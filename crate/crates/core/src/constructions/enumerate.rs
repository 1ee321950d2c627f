//! Exhaustive enumeration of skew braces of a given order.
//!
//! A brace with additive group `A` is the same thing as a map
//! `λ: A → Aut(A)` with `λ_(a + λ_a(b)) = λ_a λ_b`, via `a ∘ b = a + λ_a(b)`.
//! Such maps are found by backtracking with closure propagation, then
//! deduplicated by the least `Aut(A)`-conjugate of the λ vector.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::ConstructionError;
use crate::brace::SkewBrace;
use crate::groups::{automorphisms, small_groups, FiniteGroup, GroupError};
use crate::par::Exec;

pub const DEFAULT_ENUMERATION_CAP: usize = 8;
pub const HARD_ENUMERATION_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    /// Orders above this are refused. Values above
    /// [`HARD_ENUMERATION_CAP`] are clamped.
    pub cap: usize,
    pub exec: Exec,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            exec: Exec::default(),
        }
    }
}

/// All braces of order `n` up to isomorphism, optionally only those whose
/// additive group is `additive` (used with its own labels).
pub fn enumerate_braces(n: usize, additive: Option<&FiniteGroup>) -> Result<Vec<SkewBrace>, ConstructionError> {
    enumerate_braces_with(n, additive, &EnumerationOptions::default())
}

pub fn enumerate_braces_with(
    n: usize,
    additive: Option<&FiniteGroup>,
    opts: &EnumerationOptions,
) -> Result<Vec<SkewBrace>, ConstructionError> {
    let cap = opts.cap.min(HARD_ENUMERATION_CAP);
    if n > cap {
        return Err(ConstructionError::CapExceeded { order: n, cap });
    }
    if n == 0 {
        return Err(GroupError::Malformed("order must be positive".into()).into());
    }
    let groups = match additive {
        Some(g) if g.order() != n => {
            return Err(GroupError::Malformed(format!("additive group has order {}, expected {n}", g.order())).into())
        }
        Some(g) => vec![g.clone()],
        None => small_groups(n)?,
    };
    let mut out = Vec::new();
    for g in &groups {
        out.extend(braces_over(g, opts.exec)?);
    }
    Ok(out)
}

struct AutTable {
    perms: Vec<Vec<usize>>,
    /// `mul[i][j]` is the index of `perms[i] ∘ perms[j]` (apply `j` first).
    mul: Vec<Vec<u32>>,
    /// `conj[i][j]` is the index of `perms[i] ∘ perms[j] ∘ perms[i]⁻¹`.
    conj: Vec<Vec<u32>>,
    inverse: Vec<usize>,
}

impl AutTable {
    fn new(g: &FiniteGroup) -> Result<Self, GroupError> {
        let perms: Vec<Vec<usize>> = automorphisms(g)?.into_iter().map(|p| p.into_images()).collect();
        let index: HashMap<&[usize], u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
        let mul: Vec<Vec<u32>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| index[compose(p, q).as_slice()]).collect())
            .collect();
        let inverse: Vec<usize> = (0..perms.len())
            .map(|i| {
                (0..perms.len())
                    .find(|&j| mul[i][j] == 0)
                    .expect("automorphisms form a group")
            })
            .collect();
        let conj = (0..perms.len())
            .map(|i| (0..perms.len()).map(|j| mul[mul[i][j] as usize][inverse[i]]).collect())
            .collect();
        Ok(AutTable {
            perms,
            mul,
            conj,
            inverse,
        })
    }
}

const UNSET: u32 = u32::MAX;

/// Assigns `lam[c] = alpha` and propagates the closure rule. Returns `false`
/// on a conflict.
fn assign(g: &FiniteGroup, auts: &AutTable, lam: &mut [u32], assigned: &mut Vec<usize>, c: usize, alpha: u32) -> bool {
    let mut queue = VecDeque::from([(c, alpha)]);
    while let Some((x, a)) = queue.pop_front() {
        if lam[x] != UNSET {
            if lam[x] != a {
                return false;
            }
            continue;
        }
        lam[x] = a;
        assigned.push(x);
        let px = &auts.perms[a as usize];
        for &y in assigned.iter() {
            let ly = lam[y];
            // λ_(x + λ_x(y)) = λ_x λ_y and λ_(y + λ_y(x)) = λ_y λ_x
            let targets = [
                (g.op(x, px[y]), auts.mul[a as usize][ly as usize]),
                (g.op(y, auts.perms[ly as usize][x]), auts.mul[ly as usize][a as usize]),
            ];
            for (z, b) in targets {
                if lam[z] == UNSET {
                    queue.push_back((z, b));
                } else if lam[z] != b {
                    return false;
                }
            }
        }
    }
    true
}

fn search(g: &FiniteGroup, auts: &AutTable, lam: &mut Vec<u32>, assigned: &mut Vec<usize>, found: &mut Vec<Vec<u32>>) {
    let Some(c) = lam.iter().position(|&l| l == UNSET) else {
        found.push(lam.clone());
        return;
    };
    for alpha in 0..auts.perms.len() as u32 {
        let (saved_lam, saved_len) = (lam.clone(), assigned.len());
        if assign(g, auts, lam, assigned, c, alpha) {
            search(g, auts, lam, assigned, found);
        }
        *lam = saved_lam;
        assigned.truncate(saved_len);
    }
}

/// Least conjugate of `lam` under `φ ∈ Aut(A)`: `λ'_(φ(x)) = φ λ_x φ⁻¹`.
fn canonical_key(auts: &AutTable, lam: &[u32]) -> Vec<u32> {
    let n = lam.len();
    let mut best: Option<Vec<u32>> = None;
    let mut key = vec![0; n];
    for phi in 0..auts.perms.len() {
        let inv = &auts.perms[auts.inverse[phi]];
        for (y, k) in key.iter_mut().enumerate() {
            *k = auts.conj[phi][lam[inv[y]] as usize];
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key.clone());
        }
    }
    best.expect("Aut(A) contains the identity")
}

fn braces_over(g: &FiniteGroup, exec: Exec) -> Result<Vec<SkewBrace>, ConstructionError> {
    let n = g.order();
    let auts = AutTable::new(g)?;
    let mut root = vec![UNSET; n];
    let mut root_assigned = Vec::new();
    let ok = assign(g, &auts, &mut root, &mut root_assigned, 0, 0);
    debug_assert!(ok && auts.perms[0].iter().enumerate().all(|(i, &x)| i == x));

    let keys: Vec<BTreeSet<Vec<u32>>> = match root.iter().position(|&l| l == UNSET) {
        None => vec![BTreeSet::from([root.clone()])],
        Some(c) => exec.map_range(auts.perms.len(), |alpha| {
            let mut lam = root.clone();
            let mut assigned = root_assigned.clone();
            let mut found = Vec::new();
            if assign(g, &auts, &mut lam, &mut assigned, c, alpha as u32) {
                search(g, &auts, &mut lam, &mut assigned, &mut found);
            }
            found.iter().map(|l| canonical_key(&auts, l)).collect()
        }),
    };
    let keys: BTreeSet<Vec<u32>> = keys.into_iter().flatten().collect();
    keys.into_iter()
        .map(|key| {
            let circle = FiniteGroup::from_fn_trusted(n, |a, b| g.op(a, auts.perms[key[a] as usize][b]));
            Ok(SkewBrace::revalidate(g.clone(), circle)?)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::are_isomorphic_braces;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_braces(n, None).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 1, 6, 1]);
    }

    #[test]
    fn members_are_pairwise_non_isomorphic() {
        let braces = enumerate_braces(6, None).unwrap();
        for (i, a) in braces.iter().enumerate() {
            assert!(a.star_identities_check());
            for b in &braces[i + 1..] {
                assert!(!are_isomorphic_braces(a, b).unwrap());
            }
        }
    }

    #[test]
    fn filter_and_caps() {
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let braces = enumerate_braces(4, Some(&v4)).unwrap();
        assert_eq!(braces.len(), 2);
        assert!(braces.iter().all(|b| b.additive_group() == &v4));
        assert!(matches!(
            enumerate_braces(3, Some(&v4)),
            Err(ConstructionError::Group(_))
        ));
        assert_eq!(
            enumerate_braces(9, None).unwrap_err(),
            ConstructionError::CapExceeded { order: 9, cap: 8 }
        );
        let opts = EnumerationOptions {
            cap: 100,
            exec: Exec::Sequential,
        };
        assert_eq!(
            enumerate_braces_with(13, None, &opts).unwrap_err(),
            ConstructionError::CapExceeded { order: 13, cap: 12 }
        );
        assert_eq!(enumerate_braces_with(9, None, &opts).unwrap().len(), 4);
    }

    #[test]
    fn sequential_matches_parallel() {
        let seq = EnumerationOptions {
            cap: 8,
            exec: Exec::Sequential,
        };
        assert_eq!(
            enumerate_braces_with(6, None, &seq).unwrap(),
            enumerate_braces(6, None).unwrap()
        );
    }
}
