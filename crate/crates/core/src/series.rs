//! Right, left, strong and socle series; multipermutation level; nilpotency
//! and per-element nil verdicts.

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::groups::{lower_central_series, subgroup_closure, ElementSet, FiniteGroup};
use crate::substructure::{quotient_brace, socle, star_span};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Right,
    Left,
    Strong,
    Socle,
    AdditiveLowerCentral,
    MultiplicativeLowerCentral,
}

/// A computed series. `terms[0]` is the first term (`A` for the descending
/// series, `{0}` for the socle series).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<ElementSet>,
    /// The series became constant at a term other than its natural end.
    pub stabilized: bool,
    /// Descending series reached `{0}`, or the socle series reached `A`.
    pub reaches_zero_or_full: bool,
    pub length: usize,
}

impl SeriesReport {
    fn new(kind: SeriesKind, terms: Vec<ElementSet>) -> Self {
        let last = terms.last().expect("series have a first term");
        let reaches_zero_or_full = match kind {
            SeriesKind::Socle => last.is_full(),
            _ => last.is_zero(),
        };
        SeriesReport {
            kind,
            stabilized: !reaches_zero_or_full,
            reaches_zero_or_full,
            length: terms.len(),
            terms,
        }
    }

    /// 1-based index of the first term equal to `{0}`.
    pub fn zero_index(&self) -> Option<usize> {
        self.terms.iter().position(|t| t.is_zero()).map(|i| i + 1)
    }
}

fn iterate(a: &SkewBrace, kind: SeriesKind, step: impl Fn(&ElementSet) -> ElementSet) -> SeriesReport {
    let mut terms = vec![ElementSet::full(a.order())];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = step(last);
        let done = &next == last;
        terms.push(next);
        if done {
            break;
        }
    }
    SeriesReport::new(kind, terms)
}

/// `A^(1) = A`, `A^(n+1) = A^(n) ⁎ A`.
pub fn right_series(a: &SkewBrace) -> SeriesReport {
    let full = ElementSet::full(a.order());
    iterate(a, SeriesKind::Right, |t| star_span(a, t, &full))
}

/// `A^1 = A`, `A^(n+1) = A ⁎ A^n`.
pub fn left_series(a: &SkewBrace) -> SeriesReport {
    let full = ElementSet::full(a.order());
    iterate(a, SeriesKind::Left, |t| star_span(a, &full, t))
}

/// `A^[1] = A`, `A^[n+1]` the additive span of all `A^[i] ⁎ A^[n+1−i]`.
///
/// Two equal consecutive terms do not end this series (the order-16 example
/// has `A^[4] = A^[5] ≠ A^[6]`). Once `A^[k] = … = A^[N]` with `N ≥ 2k`,
/// every later term is the same, and iteration stops there.
pub fn strong_series(a: &SkewBrace) -> SeriesReport {
    let n = a.order();
    let mut terms = vec![ElementSet::full(n)];
    let mut run_start = 0;
    loop {
        let m = terms.len();
        if terms[m - 1].is_zero() || m >= 2 * (run_start + 1) {
            break;
        }
        let mut generators = vec![false; n];
        for i in 0..m {
            for x in terms[i].iter() {
                for y in terms[m - 1 - i].iter() {
                    generators[a.star(x, y)] = true;
                }
            }
        }
        let next = subgroup_closure(a.additive_group(), &ElementSet::from_mask(&generators));
        if next != terms[m - 1] {
            run_start = m;
        }
        terms.push(next);
    }
    // Trim the repeated tail to two equal terms.
    if !terms.last().unwrap().is_zero() {
        terms.truncate(run_start + 2);
    }
    SeriesReport::new(SeriesKind::Strong, terms)
}

pub fn additive_lower_central(a: &SkewBrace) -> SeriesReport {
    group_series(a.additive_group(), SeriesKind::AdditiveLowerCentral)
}

pub fn multiplicative_lower_central(a: &SkewBrace) -> SeriesReport {
    group_series(a.multiplicative_group(), SeriesKind::MultiplicativeLowerCentral)
}

fn group_series(g: &FiniteGroup, kind: SeriesKind) -> SeriesReport {
    let mut terms = lower_central_series(g);
    if !terms.last().unwrap().is_zero() {
        let last = terms.last().unwrap().clone();
        terms.push(last);
    }
    SeriesReport::new(kind, terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    /// `Soc_0 = {0} ⊆ Soc_1 ⊆ …`, ending at `A` or at the first repeat.
    pub series: SeriesReport,
    pub has_s_series: bool,
    /// Least `n` with `Soc_n = A`.
    pub mpl: Option<usize>,
    /// Least `m` with `S_m = 0` in the quotient tower `S_1 = A`,
    /// `S_(k+1) = S_k / Soc(S_k)`. Equals `mpl + 1`.
    pub tower_index: Option<usize>,
    /// Least `n` with `Soc_n = Soc_(n+1)`, whether or not that term is `A`.
    pub stall_index: usize,
}

pub fn socle_series_and_mpl(a: &SkewBrace) -> SocleReport {
    let n = a.order();
    let mut terms = vec![ElementSet::zero(n)];
    loop {
        let last = terms.last().unwrap();
        if last.is_full() {
            break;
        }
        let (q, projection) = quotient_brace(a, last).expect("socle series terms are ideals");
        let soc = socle(&q);
        let mask: Vec<bool> = projection.iter().map(|&c| soc.contains(c)).collect();
        let next = ElementSet::from_mask(&mask);
        let done = &next == last;
        terms.push(next);
        if done {
            break;
        }
    }
    let series = SeriesReport::new(SeriesKind::Socle, terms);
    let mpl = series.terms.iter().position(|t| t.is_full());
    let stall_index = series
        .terms
        .windows(2)
        .position(|w| w[0] == w[1])
        .unwrap_or(series.terms.len() - 1);
    SocleReport {
        has_s_series: mpl.is_some(),
        tower_index: mpl.map(|m| m + 1),
        mpl,
        stall_index,
        series,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessLengths {
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub strong: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyVerdict {
    pub left: bool,
    pub right: bool,
    pub strong: bool,
    /// 1-based index of the first `{0}` term in each series.
    pub witness_lengths: WitnessLengths,
}

pub fn nilpotency_report(a: &SkewBrace) -> NilpotencyVerdict {
    let witness_lengths = WitnessLengths {
        left: left_series(a).zero_index(),
        right: right_series(a).zero_index(),
        strong: strong_series(a).zero_index(),
    };
    NilpotencyVerdict {
        left: witness_lengths.left.is_some(),
        right: witness_lengths.right.is_some(),
        strong: witness_lengths.strong.is_some(),
        witness_lengths,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StronglyNil {
    /// Every ⁎-product of `n` copies vanishes.
    Yes {
        n: usize,
    },
    /// The product sets became constant and nonzero from index `from` on.
    Never {
        from: usize,
    },
    Undetermined {
        cutoff: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilReport {
    pub left_nil: bool,
    pub right_nil: bool,
    /// Per element: least `n` with `a⁎(a⁎(⋯⁎a)) = 0` (`n` copies).
    pub left_index: Vec<Option<usize>>,
    pub right_index: Vec<Option<usize>>,
    pub strongly_nil: Vec<StronglyNil>,
    /// `yes` only if every element is; `never` if some element is.
    pub strongly_nil_all: StronglyNilAggregate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StronglyNilAggregate {
    Yes,
    No,
    Undetermined,
}

pub fn default_nil_cutoff(a: &SkewBrace) -> usize {
    a.order() * a.order()
}

pub fn nil_report(a: &SkewBrace) -> NilReport {
    nil_report_with_cutoff(a, default_nil_cutoff(a))
}

pub fn nil_report_with_cutoff(a: &SkewBrace, cutoff: usize) -> NilReport {
    let n = a.order();
    let left_index: Vec<Option<usize>> = (0..n).map(|x| nil_index(n, x, |t| a.star(x, t))).collect();
    let right_index: Vec<Option<usize>> = (0..n).map(|x| nil_index(n, x, |t| a.star(t, x))).collect();
    let strongly_nil: Vec<StronglyNil> = (0..n).map(|x| strongly_nil_element(a, x, cutoff)).collect();
    let strongly_nil_all = if strongly_nil.iter().all(|v| matches!(v, StronglyNil::Yes { .. })) {
        StronglyNilAggregate::Yes
    } else if strongly_nil.iter().any(|v| matches!(v, StronglyNil::Never { .. })) {
        StronglyNilAggregate::No
    } else {
        StronglyNilAggregate::Undetermined
    };
    NilReport {
        left_nil: left_index.iter().all(Option::is_some),
        right_nil: right_index.iter().all(Option::is_some),
        left_index,
        right_index,
        strongly_nil,
        strongly_nil_all,
    }
}

/// Iterates `t ← step(t)` from `t = x`; `Some(k)` when the `k`-th value is
/// 0, `None` once a value repeats.
fn nil_index(n: usize, x: usize, step: impl Fn(usize) -> usize) -> Option<usize> {
    let mut seen = vec![false; n];
    let mut t = x;
    let mut k = 1;
    loop {
        if t == 0 {
            return Some(k);
        }
        if seen[t] {
            return None;
        }
        seen[t] = true;
        t = step(t);
        k += 1;
    }
}

/// `P_1 = {x}`, `P_k = ∪ P_i ⁎ P_(k−i)`: the values of all bracketings of
/// `k` copies of `x`.
pub fn strongly_nil_element(a: &SkewBrace, x: usize, cutoff: usize) -> StronglyNil {
    let n = a.order();
    let mut sets: Vec<Vec<usize>> = vec![vec![x]];
    let mut masks: Vec<Vec<bool>> = vec![{
        let mut m = vec![false; n];
        m[x] = true;
        m
    }];
    let mut run_start = 1;
    loop {
        let k = sets.len();
        if sets[k - 1] == [0] {
            return StronglyNil::Yes { n: k };
        }
        if k >= 2 * run_start {
            return StronglyNil::Never { from: run_start };
        }
        if k >= cutoff {
            return StronglyNil::Undetermined { cutoff };
        }
        let mut mask = vec![false; n];
        for i in 0..k {
            for &p in &sets[i] {
                for &q in &sets[k - 1 - i] {
                    mask[a.star(p, q)] = true;
                }
            }
        }
        if mask != masks[k - 1] {
            run_start = k + 1;
        }
        sets.push((0..n).filter(|&y| mask[y]).collect());
        masks.push(mask);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{brace_from_group, brace_from_group_opposite_addition};
    use crate::catalog;
    use crate::groups::FiniteGroup;

    fn sizes(r: &SeriesReport) -> Vec<usize> {
        r.terms.iter().map(|t| t.len()).collect()
    }

    #[test]
    fn trivial_brace_series() {
        let t = brace_from_group(&FiniteGroup::cyclic(6));
        for r in [right_series(&t), left_series(&t), strong_series(&t)] {
            assert_eq!(sizes(&r), vec![6, 1]);
            assert!(r.reaches_zero_or_full && !r.stabilized);
        }
        let s = socle_series_and_mpl(&t);
        assert_eq!(s.mpl, Some(1));
        assert_eq!(s.tower_index, Some(2));
        let zero = brace_from_group(&FiniteGroup::cyclic(1));
        assert_eq!(socle_series_and_mpl(&zero).mpl, Some(0));
    }

    #[test]
    fn funny_strong_series() {
        let a = catalog::funny_brace();
        let r = strong_series(&a);
        assert_eq!(sizes(&r), vec![16, 8, 4, 2, 2, 1]);
        assert_eq!(r.terms[2].members(), &[0, 5, 8, 13]);
        assert_eq!(r.terms[3].members(), &[0, 8]);
        assert!(right_series(&a).reaches_zero_or_full);
        assert!(left_series(&a).reaches_zero_or_full);
        assert!(socle_series_and_mpl(&a).mpl.is_some());
        let nil = nil_report(&a);
        assert!(nil.left_nil && nil.right_nil);
        for v in nil.strongly_nil {
            assert!(matches!(v, StronglyNil::Yes { n } if n <= 6));
        }
    }

    #[test]
    fn trivial_s3() {
        let t = brace_from_group(&FiniteGroup::symmetric(3));
        let v = nilpotency_report(&t);
        assert!(v.left && v.right && v.strong);
        let s = socle_series_and_mpl(&t);
        assert_eq!(s.mpl, None);
        assert_eq!(s.stall_index, 0);
        assert_eq!(sizes(&s.series), vec![1, 1]);
    }

    #[test]
    fn opposite_s3() {
        let a = brace_from_group_opposite_addition(&FiniteGroup::symmetric(3));
        for r in [right_series(&a), left_series(&a), strong_series(&a)] {
            assert!(r.stabilized);
            assert_eq!(r.terms.last().unwrap().len(), 3);
            let m = r.terms.len();
            assert_eq!(r.terms[m - 1], r.terms[m - 2]);
        }
        let v = nilpotency_report(&a);
        assert!(!v.left && !v.right && !v.strong);
        // a⁎a = 0 for every a, so the literal nil definitions hold.
        let nil = nil_report(&a);
        assert!(nil.left_nil && nil.right_nil);
        assert_eq!(nil.strongly_nil_all, StronglyNilAggregate::Yes);
    }

    #[test]
    fn definite_nil_verdicts() {
        let a = catalog::fix_example();
        let nil = nil_report(&a);
        assert_eq!(nil.left_index.len(), 6);
        assert_eq!(nil.left_index[0], Some(1));
        // (1,1) ⁎ (1,1) = (1,0) and (1,1) ⁎ (1,0) = (1,0).
        assert_eq!(nil.left_index[4], None);
        assert_eq!(nil.right_index[4], Some(3));
        let c = nil.left_index.iter().filter(|v| v.is_none()).count();
        assert!(c > 0);
    }

    #[test]
    fn strongly_nil_never() {
        // Products of (1,1) settle at {0, (1,0)}.
        let a = catalog::fix_example();
        let verdicts: Vec<_> = (0..6).map(|x| strongly_nil_element(&a, x, 36)).collect();
        assert_eq!(verdicts[4], StronglyNil::Never { from: 3 });
        assert_eq!(verdicts[0], StronglyNil::Yes { n: 1 });
    }
}
