//! The skew left brace value type.

mod iso;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{is_bijection, is_nilpotent, FiniteGroup, GroupError, Permutation};
use crate::par::Exec;
use crate::substructure::Witness;

pub use iso::{are_isomorphic_braces, are_isomorphic_braces_with_cap, find_brace_isomorphism, BraceSignature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Additive,
    Multiplicative,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Additive => "additive",
            Side::Multiplicative => "multiplicative",
        })
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraceError {
    #[error("{side} table: {source}")]
    Group { side: Side, source: GroupError },
    #[error("additive order {add} differs from multiplicative order {circle}")]
    OrderMismatch { add: usize, circle: usize },
    #[error("identities differ: additive {add}, multiplicative {circle} (both must be 0)")]
    IdentityMismatch { add: usize, circle: usize },
    #[error("compatibility fails at a={0}, b={1}, c={2}")]
    CompatibilityFailed(usize, usize, usize),
    #[error("order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("not an ideal: {0}")]
    NotAnIdeal(Witness),
    #[error("set is not closed under both operations")]
    NotASubBrace,
    #[error("internal construction produced an invalid brace: {0}")]
    ValidationFailed(Box<BraceError>),
}

/// A finite skew left brace with cached λ and ⁎ tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    add: FiniteGroup,
    circle: FiniteGroup,
    lambda: Vec<usize>,
    star: Vec<usize>,
}

/// Brace file format: `{"order": n, "add": [[...]], "circle": [[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BraceFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub circle: Vec<Vec<usize>>,
}

/// Validates two tables as a skew left brace. Both identities must be 0.
pub fn validate_brace(add: &[Vec<usize>], circle: &[Vec<usize>]) -> Result<SkewBrace, BraceError> {
    if add.len() != circle.len() {
        return Err(BraceError::OrderMismatch {
            add: add.len(),
            circle: circle.len(),
        });
    }
    let add_id = identity_of(add);
    let circle_id = identity_of(circle);
    if let (Some(a), Some(c)) = (add_id, circle_id) {
        if a != 0 || c != 0 {
            return Err(BraceError::IdentityMismatch { add: a, circle: c });
        }
    }
    let add = FiniteGroup::from_table_strict(add).map_err(|source| BraceError::Group {
        side: Side::Additive,
        source,
    })?;
    let circle = FiniteGroup::from_table_strict(circle).map_err(|source| BraceError::Group {
        side: Side::Multiplicative,
        source,
    })?;
    SkewBrace::new(add, circle)
}

fn identity_of(rows: &[Vec<usize>]) -> Option<usize> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return None;
    }
    (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
}

/// Classification flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub trivial: bool,
    pub abelian_type: bool,
    pub nilpotent_type: bool,
    pub two_sided_candidate: bool,
}

impl SkewBrace {
    /// Checks compatibility on all triples and caches λ and ⁎.
    pub fn new(add: FiniteGroup, circle: FiniteGroup) -> Result<Self, BraceError> {
        let n = add.order();
        if circle.order() != n {
            return Err(BraceError::OrderMismatch {
                add: n,
                circle: circle.order(),
            });
        }
        // a∘(b+c) = a∘b − a + a∘c
        let bad = Exec::default().find_map_first(n, |a| {
            let neg_a = add.inv(a);
            for b in 0..n {
                let ab = circle.op(a, b);
                let left = add.op(ab, neg_a);
                for c in 0..n {
                    if circle.op(a, add.op(b, c)) != add.op(left, circle.op(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        if let Some((a, b, c)) = bad {
            return Err(BraceError::CompatibilityFailed(a, b, c));
        }
        Ok(Self::assemble(add, circle))
    }

    fn assemble(add: FiniteGroup, circle: FiniteGroup) -> Self {
        let n = add.order();
        let mut lambda = vec![0; n * n];
        let mut star = vec![0; n * n];
        for a in 0..n {
            let neg_a = add.inv(a);
            for b in 0..n {
                let l = add.op(neg_a, circle.op(a, b));
                lambda[a * n + b] = l;
                star[a * n + b] = add.op(l, add.inv(b));
            }
        }
        SkewBrace {
            add,
            circle,
            lambda,
            star,
        }
    }

    /// Re-validates after an internal construction. A failure here means the
    /// construction itself is wrong.
    pub(crate) fn revalidate(add: FiniteGroup, circle: FiniteGroup) -> Result<Self, BraceError> {
        SkewBrace::new(add, circle).map_err(|e| BraceError::ValidationFailed(Box::new(e)))
    }

    pub fn from_file(file: &BraceFile) -> Result<Self, BraceError> {
        if file.add.len() != file.order {
            return Err(BraceError::Group {
                side: Side::Additive,
                source: GroupError::Malformed(format!(
                    "declared order {} but table has {} rows",
                    file.order,
                    file.add.len()
                )),
            });
        }
        validate_brace(&file.add, &file.circle)
    }

    pub fn to_file(&self) -> BraceFile {
        BraceFile {
            order: self.order(),
            add: self.add.rows(),
            circle: self.circle.rows(),
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn multiplicative_group(&self) -> &FiniteGroup {
        &self.circle
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `a − b`, that is `a + (−b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inv(b))
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circle.op(a, b)
    }

    /// The ∘-inverse `a′`.
    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.circle.inv(a)
    }

    /// `λ_a(b) = −a + a∘b`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order() + b]
    }

    pub fn lambda_row(&self, a: usize) -> &[usize] {
        let n = self.order();
        &self.lambda[a * n..(a + 1) * n]
    }

    pub fn lambda_of(&self, a: usize) -> Permutation {
        Permutation::from_images(self.lambda_row(a).to_vec()).expect("λ_a is a bijection")
    }

    /// `a ⁎ b = λ_a(b) − b`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a * self.order() + b]
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.circle
    }

    pub fn classify(&self) -> Classification {
        let n = self.order();
        let two_sided_candidate = (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.add(a, b);
                (0..n).all(|c| {
                    let rhs = self.add(self.add(self.add(self.star(a, c), c), self.star(b, c)), self.neg(c));
                    self.star(ab, c) == rhs
                })
            })
        });
        Classification {
            trivial: self.is_trivial(),
            abelian_type: self.add.is_abelian(),
            nilpotent_type: is_nilpotent(&self.add),
            two_sided_candidate,
        }
    }

    /// Checks `a⁎(b+c) = a⁎b + b + a⁎c − b` and
    /// `(a∘b)⁎c = a⁎(b⁎c) + b⁎c + a⁎c` on all triples.
    pub fn star_identities_check(&self) -> bool {
        self.star_identities_witness().is_none()
    }

    pub fn star_identities_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        Exec::default().find_map_first(n, |a| {
            for b in 0..n {
                let ab = self.circ(a, b);
                for c in 0..n {
                    let first = self.add(self.add(self.add(self.star(a, b), b), self.star(a, c)), self.neg(b));
                    if self.star(a, self.add(b, c)) != first {
                        return Some((a, b, c));
                    }
                    let bc = self.star(b, c);
                    let second = self.add(self.add(self.star(a, bc), bc), self.star(a, c));
                    if self.star(ab, c) != second {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Relabels elements: `x` becomes `perm[x]`; `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> SkewBrace {
        assert!(is_bijection(perm) && perm.len() == self.order() && perm[0] == 0);
        Self::assemble(self.add.relabel(perm), self.circle.relabel(perm))
    }
}

/// The trivial brace `a∘b = a+b` on `g`.
pub fn brace_from_group(g: &FiniteGroup) -> SkewBrace {
    SkewBrace::assemble(g.clone(), g.clone())
}

/// Multiplication of `g` with addition `a + b = ba`.
pub fn brace_from_group_opposite_addition(g: &FiniteGroup) -> SkewBrace {
    let add = FiniteGroup::from_fn_trusted(g.order(), |a, b| g.op(b, a));
    SkewBrace::new(add, g.clone()).expect("opposite addition always gives a skew brace")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_brace() {
        let a = brace_from_group(&FiniteGroup::cyclic(6));
        let v = validate_brace(&a.additive_group().rows(), &a.multiplicative_group().rows()).unwrap();
        assert_eq!(a, v);
        for x in 0..6 {
            assert!(a.lambda_of(x).is_identity());
            for y in 0..6 {
                assert_eq!(a.star(x, y), 0);
            }
        }
        let c = a.classify();
        assert!(c.trivial && c.abelian_type && c.nilpotent_type);
        assert!(a.star_identities_check());
        assert_eq!(brace_from_group(&FiniteGroup::cyclic(2)).order(), 2);
        assert_eq!(brace_from_group(&FiniteGroup::alternating(5)).order(), 60);
    }

    #[test]
    fn funny_star_values() {
        let a = catalog::funny_brace();
        assert_eq!(a.order(), 16);
        assert_eq!(a.star(2, 2), 1);
        assert_eq!(a.star(11, 2), 4);
        assert!(a.star_identities_check());
        let c = a.classify();
        assert!(!c.trivial && c.abelian_type && c.nilpotent_type);
    }

    #[test]
    fn compatibility_failure_has_witness() {
        // Z/4 addition with Z/4 relabelled by swapping 1 and 2 as the circle.
        let z4 = FiniteGroup::cyclic(4);
        let circle = z4.relabel(&[0, 2, 1, 3]);
        let err = SkewBrace::new(z4.clone(), circle.clone()).unwrap_err();
        let BraceError::CompatibilityFailed(a, b, c) = err else {
            panic!("expected compatibility failure, got {err:?}");
        };
        let lhs = circle.op(a, z4.op(b, c));
        let rhs = z4.op(z4.op(circle.op(a, b), z4.inv(a)), circle.op(a, c));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn validation_errors() {
        let z2 = FiniteGroup::cyclic(2).rows();
        let z3 = FiniteGroup::cyclic(3).rows();
        assert!(matches!(
            validate_brace(&z2, &z3),
            Err(BraceError::OrderMismatch { .. })
        ));
        let shifted = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(
            validate_brace(&z2, &shifted),
            Err(BraceError::IdentityMismatch { add: 0, circle: 1 })
        );
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            validate_brace(&bad, &z2),
            Err(BraceError::Group {
                side: Side::Additive,
                source: GroupError::NoInverse(1)
            })
        ));
    }

    #[test]
    fn remark_formulas_and_lambda_homomorphism() {
        for a in [
            catalog::funny_brace(),
            brace_from_group_opposite_addition(&FiniteGroup::symmetric(3)),
        ] {
            let n = a.order();
            for x in 0..n {
                assert_eq!(a.lambda(x, a.circ_inv(x)), a.neg(x));
                for y in 0..n {
                    assert_eq!(a.add(x, a.lambda(x, y)), a.circ(x, y));
                }
            }
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(a.lambda_of(a.circ(x, y)), a.lambda_of(x).compose(&a.lambda_of(y)));
                }
            }
        }
    }

    #[test]
    fn opposite_addition() {
        let g = FiniteGroup::symmetric(3);
        let b = brace_from_group_opposite_addition(&g);
        for x in 0..6 {
            for y in 0..6 {
                let expected = g.op(g.op(g.op(g.inv(y), x), y), g.inv(x));
                assert_eq!(b.star(x, y), expected);
            }
        }
        assert!(!b.classify().nilpotent_type);
        let ab = brace_from_group_opposite_addition(&FiniteGroup::cyclic(5));
        assert!(ab.is_trivial());
    }

    #[test]
    fn file_round_trip() {
        let a = catalog::funny_brace();
        let json = serde_json::to_string(&a.to_file()).unwrap();
        let back: BraceFile = serde_json::from_str(&json).unwrap();
        assert_eq!(SkewBrace::from_file(&back).unwrap(), a);
    }
}
