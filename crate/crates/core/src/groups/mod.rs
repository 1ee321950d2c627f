//! Finite groups given by explicit operation tables over `0..n`.
//!
//! Every validated group has its identity at index 0. Subgroups, quotients and
//! series are carried as [`ElementSet`]s over the same index space.

mod catalog;
mod iso;
mod perm;
mod set;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par::Exec;

pub use catalog::small_groups;
pub use iso::{
    are_isomorphic_groups, are_isomorphic_groups_with_cap, automorphisms, automorphisms_with_cap, find_isomorphism,
    AUTOMORPHISM_CAP, ISOMORPHISM_CAP,
};
pub use perm::{is_bijection, Permutation};
pub use set::ElementSet;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("identity is at index {0}, expected 0")]
    IdentityNotZero(usize),
    #[error("index {index} out of range for order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal: conjugating {1} by {0} leaves it")]
    NotNormal(usize, usize),
    #[error("order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// A finite group as a row-major operation table with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

/// Group file format: `{"order": n, "table": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a square table as a group. If the identity is not at index 0
    /// the labels of 0 and the identity are swapped.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let (order, mut table) = flatten(rows)?;
        let e = find_identity(order, &table).ok_or(GroupError::NoIdentity)?;
        if e != 0 {
            let swap = |x: usize| {
                if x == 0 {
                    e
                } else if x == e {
                    0
                } else {
                    x
                }
            };
            let mut relabeled = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    relabeled[swap(a) * order + swap(b)] = swap(table[a * order + b]);
                }
            }
            table = relabeled;
        }
        Self::finish(order, table)
    }

    /// Like [`FiniteGroup::from_table`] but rejects tables whose identity is
    /// not already index 0.
    pub fn from_table_strict(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let (order, table) = flatten(rows)?;
        match find_identity(order, &table) {
            None => Err(GroupError::NoIdentity),
            Some(0) => Self::finish(order, table),
            Some(e) => Err(GroupError::IdentityNotZero(e)),
        }
    }

    fn finish(order: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).ok_or(GroupError::NoInverse(x))?;
            if table[y * order + x] != 0 {
                return Err(GroupError::NoInverse(x));
            }
            inv[x] = y;
        }
        let assoc = Exec::default().find_map_first(order, |x| {
            for y in 0..order {
                let xy = table[x * order + y];
                for z in 0..order {
                    let lhs = table[xy * order + z];
                    let rhs = table[x * order + table[y * order + z]];
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
            None
        });
        if let Some((x, y, z)) = assoc {
            return Err(GroupError::NotAssociative(x, y, z));
        }
        Ok(FiniteGroup { order, table, inv })
    }

    /// Builds a group from a closure without re-checking the axioms. Only for
    /// constructions whose group laws are guaranteed by design; debug builds
    /// still verify.
    pub(crate) fn from_fn_trusted(order: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(op(a, b));
            }
        }
        if cfg!(debug_assertions) {
            let rows: Vec<Vec<usize>> = table.chunks(order).map(|r| r.to_vec()).collect();
            return Self::from_table_strict(&rows).expect("trusted construction is a group");
        }
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order).find(|&y| table[x * order + y] == 0).expect("inverse");
        }
        FiniteGroup { order, table, inv }
    }

    /// Validating constructor from a closure.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let rows: Vec<Vec<usize>> = (0..order).map(|a| (0..order).map(|b| op(a, b)).collect()).collect();
        Self::from_table(&rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            table: self.rows(),
        }
    }

    pub fn from_file(file: &GroupFile) -> Result<Self, GroupError> {
        if file.table.len() != file.order {
            return Err(GroupError::Malformed(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        Self::from_table(&file.table)
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.op(self.op(a, b), self.op(self.inv(a), self.inv(b)))
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.op(self.op(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn center(&self) -> ElementSet {
        let mask: Vec<bool> = (0..self.order)
            .map(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
            .collect();
        ElementSet::from_mask(&mask)
    }

    /// Direct product with pair `(a, b)` encoded as `|H|·a + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order;
        FiniteGroup::from_fn_trusted(self.order * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
    }

    /// Verifies the group axioms from scratch.
    pub fn recheck(&self) -> Result<(), GroupError> {
        FiniteGroup::from_table_strict(&self.rows()).map(|_| ())
    }

    /// Relabels elements: element `x` becomes `perm[x]`. `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroup {
        assert!(is_bijection(perm) && perm[0] == 0);
        let n = self.order;
        let inv = Permutation::from_images(perm.to_vec()).unwrap().inverse();
        FiniteGroup::from_fn_trusted(n, |x, y| perm[self.op(inv.apply(x), inv.apply(y))])
    }
}

fn flatten(rows: &[Vec<usize>]) -> Result<(usize, Vec<usize>), GroupError> {
    let order = rows.len();
    if order == 0 {
        return Err(GroupError::Malformed("empty table".into()));
    }
    let mut table = Vec::with_capacity(order * order);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(GroupError::Malformed(format!(
                "row {r} has length {} but table has {order} rows",
                row.len()
            )));
        }
        for (c, &value) in row.iter().enumerate() {
            if value >= order {
                return Err(GroupError::NotClosed { row: r, col: c, value });
            }
            table.push(value);
        }
    }
    Ok((order, table))
}

fn find_identity(order: usize, table: &[usize]) -> Option<usize> {
    (0..order).find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
}

/// Smallest subgroup containing `generators`.
pub fn subgroup_closure(g: &FiniteGroup, generators: &ElementSet) -> ElementSet {
    // Products of generators from the identity; finiteness makes the monoid
    // generated a subgroup.
    let gens: Vec<usize> = generators.iter().filter(|&x| x != 0).collect();
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.op(x, s);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    ElementSet::from_mask(&seen)
}

/// Every subgroup, ordered by size and then members. `None` once more than
/// `limit` have been found.
pub fn all_subgroups(g: &FiniteGroup, limit: usize) -> Option<Vec<ElementSet>> {
    let mut seen = std::collections::BTreeSet::new();
    let zero = ElementSet::zero(g.order());
    seen.insert(zero.members().to_vec());
    let mut queue = VecDeque::from([zero]);
    while let Some(h) = queue.pop_front() {
        for x in 0..g.order() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.mask();
            gens[x] = true;
            let k = subgroup_closure(g, &ElementSet::from_mask(&gens));
            if seen.insert(k.members().to_vec()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(k);
            }
        }
    }
    let mut out: Vec<ElementSet> = seen
        .into_iter()
        .map(|m| ElementSet::new(g.order(), m).expect("members are in range"))
        .collect();
    out.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    Some(out)
}

/// `true` if `h` contains 0 and is closed under the operation.
pub fn is_subgroup(g: &FiniteGroup, h: &ElementSet) -> bool {
    h.contains(0) && h.iter().all(|a| h.iter().all(|b| h.contains(g.op(a, b))))
}

pub fn is_normal_subgroup(g: &FiniteGroup, h: &ElementSet) -> Result<bool, GroupError> {
    Ok(normality_witness(g, h)?.is_none())
}

/// First `(g, h)` with `g h g⁻¹ ∉ H`, if any.
pub fn normality_witness(g: &FiniteGroup, h: &ElementSet) -> Result<Option<(usize, usize)>, GroupError> {
    if !is_subgroup(g, h) {
        return Err(GroupError::NotASubgroup);
    }
    for x in 0..g.order() {
        for y in h.iter() {
            if !h.contains(g.conjugate(x, y)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Quotient group together with the projection `element -> coset index`.
///
/// Cosets are represented by their minimum element and numbered in
/// increasing order of representative, so the coset of 0 is 0.
pub fn quotient_group(g: &FiniteGroup, n: &ElementSet) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    if let Some((x, y)) = normality_witness(g, n)? {
        return Err(GroupError::NotNormal(x, y));
    }
    let (reps, projection) = cosets(g.order(), |x| n.iter().map(move |m| g.op(x, m)));
    let q = FiniteGroup::from_fn_trusted(reps.len(), |a, b| projection[g.op(reps[a], reps[b])]);
    Ok((q, projection))
}

/// Partitions `0..order` into the classes produced by `class_of`, returning
/// the sorted minimum representatives and the class index of each element.
pub(crate) fn cosets<F, I>(order: usize, class_of: F) -> (Vec<usize>, Vec<usize>)
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut projection = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if projection[x] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(x);
        for y in class_of(x) {
            projection[y] = k;
        }
    }
    (reps, projection)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowSubgroup {
    pub prime: usize,
    pub subgroup: ElementSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyReport {
    pub center: ElementSet,
    /// `γ₁ = G, γᵢ₊₁ = [G, γᵢ]`, up to stabilization.
    pub lower_central: Vec<ElementSet>,
    pub nilpotent: bool,
    pub class: Option<usize>,
    /// Populated only for nilpotent groups.
    pub sylow: Option<Vec<SylowSubgroup>>,
}

/// Subgroup generated by `[a, b]` for `a ∈ A`, `b ∈ B`.
pub fn commutator_subgroup(g: &FiniteGroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut gens = vec![false; g.order()];
    for x in a.iter() {
        for y in b.iter() {
            gens[g.commutator(x, y)] = true;
        }
    }
    subgroup_closure(g, &ElementSet::from_mask(&gens))
}

pub fn lower_central_series(g: &FiniteGroup) -> Vec<ElementSet> {
    let full = ElementSet::full(g.order());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = commutator_subgroup(g, &full, last);
        if &next == last {
            break;
        }
        series.push(next);
    }
    series
}

pub fn nilpotency_analysis(g: &FiniteGroup) -> NilpotencyReport {
    let lower_central = lower_central_series(g);
    let nilpotent = lower_central.last().unwrap().is_zero();
    let class = nilpotent.then(|| lower_central.len() - 1);
    let sylow = nilpotent.then(|| sylow_subgroups_of_nilpotent(g));
    NilpotencyReport {
        center: g.center(),
        lower_central,
        nilpotent,
        class,
        sylow,
    }
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    lower_central_series(g).last().unwrap().is_zero()
}

/// For each prime `p` dividing the order, the elements of `p`-power order.
/// These are subgroups exactly when the Sylow subgroups are normal.
pub fn sylow_subgroups_of_nilpotent(g: &FiniteGroup) -> Vec<SylowSubgroup> {
    let orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    prime_factors(g.order())
        .into_iter()
        .map(|(p, _)| SylowSubgroup {
            prime: p,
            subgroup: ElementSet::from_mask(&orders.iter().map(|&o| is_power_of(o, p)).collect::<Vec<_>>()),
        })
        .collect()
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_factors(n) == [(n, 1)]
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
