//! Left ideals, ideals, socle, Fix, ⁎-spans, sub-braces, λ-orbits and
//! quotient braces.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::brace::{BraceError, SkewBrace};
use crate::groups::{cosets, subgroup_closure, ElementSet, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FailureReason {
    /// `(0, 0, 0)`: the set does not contain 0.
    MissingZero,
    /// `(x, y, x+y)` with `x+y` outside.
    NotAdditivelyClosed,
    /// `(a, x, λ_a(x))` with `λ_a(x)` outside.
    NotLambdaInvariant,
    /// `(g, x, g+x−g)` with the conjugate outside.
    NotAdditivelyNormal,
    /// `(x, a, x⁎a)` with `x⁎a` outside.
    StarNotAbsorbed,
    /// `(a, x, a∘x∘a′)` with the conjugate outside.
    NotCircleNormal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub reason: FailureReason,
    pub triple: (usize, usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.triple;
        match self.reason {
            FailureReason::MissingZero => write!(f, "0 is missing"),
            FailureReason::NotAdditivelyClosed => write!(f, "{a} + {b} = {c} is outside"),
            FailureReason::NotLambdaInvariant => write!(f, "λ_{a}({b}) = {c} is outside"),
            FailureReason::NotAdditivelyNormal => write!(f, "{a} + {b} − {a} = {c} is outside"),
            FailureReason::StarNotAbsorbed => write!(f, "{a} ⁎ {b} = {c} is outside"),
            FailureReason::NotCircleNormal => write!(f, "{a} ∘ {b} ∘ {a}′ = {c} is outside"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubstructureVerdict {
    pub set: ElementSet,
    pub is_add_subgroup: bool,
    pub is_left_ideal: bool,
    /// Decided as: left ideal, normal in `(A,+)`, and `I⁎A ⊆ I`.
    pub is_ideal: bool,
    pub failing_witness: Option<Witness>,
    /// Direct check of `a∘I∘a′ ⊆ I`, kept alongside the ⁎-criterion.
    pub circle_normal: bool,
    pub circle_normal_witness: Option<Witness>,
}

/// `⟨x⁎y : x ∈ X, y ∈ Y⟩₊`.
pub fn star_span(a: &SkewBrace, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let mut image = vec![false; a.order()];
    for p in x.iter() {
        for q in y.iter() {
            image[a.star(p, q)] = true;
        }
    }
    subgroup_closure(a.additive_group(), &ElementSet::from_mask(&image))
}

fn analyze(a: &SkewBrace, s: &ElementSet) -> SubstructureVerdict {
    let n = a.order();
    let w = |reason, triple| Some(Witness { reason, triple });
    let mut verdict = SubstructureVerdict {
        set: s.clone(),
        is_add_subgroup: false,
        is_left_ideal: false,
        is_ideal: false,
        failing_witness: None,
        circle_normal: false,
        circle_normal_witness: None,
    };
    if !s.contains(0) {
        verdict.failing_witness = w(FailureReason::MissingZero, (0, 0, 0));
        return verdict;
    }
    for x in s.iter() {
        for y in s.iter() {
            let z = a.add(x, y);
            if !s.contains(z) {
                verdict.failing_witness = w(FailureReason::NotAdditivelyClosed, (x, y, z));
                return verdict;
            }
        }
    }
    verdict.is_add_subgroup = true;

    verdict.circle_normal_witness = (0..n).find_map(|g| {
        s.iter().find_map(|x| {
            let c = a.circ(a.circ(g, x), a.circ_inv(g));
            (!s.contains(c)).then_some(Witness {
                reason: FailureReason::NotCircleNormal,
                triple: (g, x, c),
            })
        })
    });
    verdict.circle_normal = verdict.circle_normal_witness.is_none();

    let lambda_fail = (0..n).find_map(|g| {
        s.iter()
            .find_map(|x| (!s.contains(a.lambda(g, x))).then_some((g, x, a.lambda(g, x))))
    });
    if let Some(t) = lambda_fail {
        verdict.failing_witness = w(FailureReason::NotLambdaInvariant, t);
        return verdict;
    }
    verdict.is_left_ideal = true;

    let normal_fail = (0..n).find_map(|g| {
        s.iter().find_map(|x| {
            let c = a.sub(a.add(g, x), g);
            (!s.contains(c)).then_some((g, x, c))
        })
    });
    if let Some(t) = normal_fail {
        verdict.failing_witness = w(FailureReason::NotAdditivelyNormal, t);
        return verdict;
    }
    let star_fail = s
        .iter()
        .find_map(|x| (0..n).find_map(|g| (!s.contains(a.star(x, g))).then_some((x, g, a.star(x, g)))));
    if let Some(t) = star_fail {
        verdict.failing_witness = w(FailureReason::StarNotAbsorbed, t);
        return verdict;
    }
    verdict.is_ideal = true;
    verdict
}

/// Additive subgroup closed under every `λ_a`. The verdict also carries the
/// ideal analysis.
pub fn is_left_ideal(a: &SkewBrace, s: &ElementSet) -> SubstructureVerdict {
    analyze(a, s)
}

/// Left ideal, normal in `(A,+)`, with `I⁎A ⊆ I`. Multiplicative normality is
/// checked directly as well and reported in `circle_normal`.
pub fn is_ideal(a: &SkewBrace, s: &ElementSet) -> SubstructureVerdict {
    analyze(a, s)
}

/// `{a : λ_a = id}`.
pub fn ker_lambda(a: &SkewBrace) -> ElementSet {
    let mask: Vec<bool> = (0..a.order())
        .map(|x| a.lambda_row(x).iter().enumerate().all(|(i, &y)| i == y))
        .collect();
    ElementSet::from_mask(&mask)
}

/// `ker λ ∩ Z(A,+)`.
pub fn socle(a: &SkewBrace) -> ElementSet {
    ker_lambda(a).intersection(&a.additive_group().center())
}

/// `{a : λ_x(a) = a for all x}`.
pub fn fix(a: &SkewBrace) -> ElementSet {
    let n = a.order();
    let mask: Vec<bool> = (0..n).map(|y| (0..n).all(|x| a.lambda(x, y) == y)).collect();
    ElementSet::from_mask(&mask)
}

/// Quotient by an ideal with the projection onto coset indices. Cosets are
/// numbered by minimum representative, so the class of 0 is 0.
pub fn quotient_brace(a: &SkewBrace, ideal: &ElementSet) -> Result<(SkewBrace, Vec<usize>), BraceError> {
    let verdict = is_ideal(a, ideal);
    if !verdict.is_ideal {
        return Err(BraceError::NotAnIdeal(
            verdict.failing_witness.expect("failed verdicts carry a witness"),
        ));
    }
    let (reps, projection) = cosets(a.order(), |x| ideal.iter().map(move |i| a.add(x, i)));
    debug_assert!((0..a.order()).all(|x| ideal.iter().all(|i| projection[a.circ(x, i)] == projection[x])));
    let q = reps.len();
    let add = FiniteGroup::from_fn_trusted(q, |s, t| projection[a.add(reps[s], reps[t])]);
    let circle = FiniteGroup::from_fn_trusted(q, |s, t| projection[a.circ(reps[s], reps[t])]);
    let quotient = SkewBrace::revalidate(add, circle)?;
    Ok((quotient, projection))
}

/// Smallest subset containing `s` and 0 closed under `+` and `∘`.
pub fn generated_subbrace(a: &SkewBrace, s: &ElementSet) -> ElementSet {
    let mut seen = vec![false; a.order()];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for x in std::iter::once(0).chain(s.iter()) {
        if !seen[x] {
            seen[x] = true;
            queue.push_back(x);
        }
    }
    while let Some(z) = queue.pop_front() {
        members.push(z);
        for &w in &members {
            for y in [a.add(z, w), a.add(w, z), a.circ(z, w), a.circ(w, z)] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    ElementSet::from_mask(&seen)
}

/// `{λ_a(x) : a ∈ A}`.
pub fn lambda_orbit(a: &SkewBrace, x: usize) -> ElementSet {
    let mut mask = vec![false; a.order()];
    for g in 0..a.order() {
        mask[a.lambda(g, x)] = true;
    }
    ElementSet::from_mask(&mask)
}

/// The sub-brace on a set closed under both operations, re-indexed in
/// increasing order. Returns the brace and the embedding into `a`.
pub fn sub_brace(a: &SkewBrace, s: &ElementSet) -> Result<(SkewBrace, Vec<usize>), BraceError> {
    if generated_subbrace(a, s) != *s {
        return Err(BraceError::NotASubBrace);
    }
    let embedding: Vec<usize> = s.members().to_vec();
    let mut index = vec![usize::MAX; a.order()];
    for (i, &x) in embedding.iter().enumerate() {
        index[x] = i;
    }
    let m = embedding.len();
    let add = FiniteGroup::from_fn_trusted(m, |i, j| index[a.add(embedding[i], embedding[j])]);
    let circle = FiniteGroup::from_fn_trusted(m, |i, j| index[a.circ(embedding[i], embedding[j])]);
    Ok((SkewBrace::revalidate(add, circle)?, embedding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{brace_from_group, brace_from_group_opposite_addition};
    use crate::catalog;
    use crate::series::{left_series, right_series};

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::new(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn star_spans() {
        let t = brace_from_group(&FiniteGroup::cyclic(6));
        let full = ElementSet::full(6);
        assert!(star_span(&t, &full, &full).is_zero());

        let a = catalog::funny_brace();
        let full = ElementSet::full(16);
        assert_eq!(star_span(&a, &full, &full).members(), &[0, 1, 4, 5, 8, 9, 12, 13]);
        assert!(star_span(&a, &socle(&a), &full).is_zero());
    }

    #[test]
    fn fix_example() {
        let a = catalog::fix_example();
        let f = fix(&a);
        assert_eq!(f.members(), &[0, 3]);
        let v = is_left_ideal(&a, &f);
        assert!(v.is_add_subgroup && v.is_left_ideal);
        assert!(!v.is_ideal && !v.circle_normal);
        let w = v.circle_normal_witness.unwrap();
        let (g, x, c) = w.triple;
        assert_eq!(a.circ(a.circ(g, x), a.circ_inv(g)), c);
        assert!(!f.contains(c));
        assert_eq!(v.failing_witness.unwrap().reason, FailureReason::StarNotAbsorbed);
    }

    #[test]
    fn left_ideal_failure_has_witness() {
        let a = catalog::funny_brace();
        // {0, a} is not even an additive subgroup; {0, 8} is λ-stable; take
        // the additive subgroup ⟨b⟩ = {0, 1}: λ_a(b) = 4a + b.
        let v = is_left_ideal(&a, &set(16, &[0, 1]));
        assert!(v.is_add_subgroup && !v.is_left_ideal);
        let w = v.failing_witness.unwrap();
        assert_eq!(w.reason, FailureReason::NotLambdaInvariant);
        let (g, x, y) = w.triple;
        assert_eq!(a.lambda(g, x), y);
        assert!(!is_left_ideal(&a, &set(16, &[0, 2])).is_add_subgroup);
        assert_eq!(
            is_left_ideal(&a, &set(16, &[1])).failing_witness.unwrap().reason,
            FailureReason::MissingZero
        );
    }

    #[test]
    fn series_terms_are_ideals() {
        let a = catalog::funny_brace();
        for t in right_series(&a).terms {
            let v = is_ideal(&a, &t);
            assert!(v.is_ideal && v.circle_normal);
        }
        for t in left_series(&a).terms {
            assert!(is_left_ideal(&a, &t).is_left_ideal);
        }
        assert!(is_ideal(&a, &socle(&a)).is_ideal);
    }

    #[test]
    fn socle_fix_kernel() {
        let t = brace_from_group(&FiniteGroup::cyclic(4));
        assert!(socle(&t).is_full());
        let s3 = brace_from_group(&FiniteGroup::symmetric(3));
        assert!(socle(&s3).is_zero());
        assert!(ker_lambda(&s3).is_full());
        let op = brace_from_group_opposite_addition(&FiniteGroup::symmetric(3));
        assert!(socle(&op).is_zero());
    }

    #[test]
    fn quotients() {
        let a = catalog::funny_brace();
        let (q, proj) = quotient_brace(&a, &ElementSet::full(16)).unwrap();
        assert_eq!(q.order(), 1);
        assert!(proj.iter().all(|&p| p == 0));

        let full = ElementSet::full(16);
        let a2 = star_span(&a, &full, &full);
        let (q, _) = quotient_brace(&a, &a2).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_trivial());

        let fx = catalog::fix_example();
        assert!(matches!(quotient_brace(&fx, &fix(&fx)), Err(BraceError::NotAnIdeal(_))));
    }

    #[test]
    fn generated_subbraces() {
        let a = catalog::funny_brace();
        assert!(generated_subbrace(&a, &set(16, &[0])).is_zero());
        assert!(generated_subbrace(&a, &set(16, &[2])).is_full());
        let t = brace_from_group(&FiniteGroup::cyclic(6));
        assert_eq!(generated_subbrace(&t, &set(6, &[2])).members(), &[0, 2, 4]);
        let (sub, emb) = sub_brace(&t, &set(6, &[0, 2, 4])).unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(emb, vec![0, 2, 4]);
        assert_eq!(sub_brace(&t, &set(6, &[0, 2])), Err(BraceError::NotASubBrace));
    }

    #[test]
    fn orbits() {
        let t = brace_from_group(&FiniteGroup::cyclic(5));
        assert_eq!(lambda_orbit(&t, 3).members(), &[3]);
        let a = catalog::fix_example();
        assert_eq!(lambda_orbit(&a, 1).members(), &[1, 2]);
        // λ-table column scan for the funny brace.
        let f = catalog::funny_brace();
        let scan: ElementSet = ElementSet::new(16, (0..16).map(|g| f.lambda(g, 2))).unwrap();
        assert_eq!(lambda_orbit(&f, 2), scan);
        assert!(scan.len() > 1);
    }
}
