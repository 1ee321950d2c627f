//! Brace factories: products, wreath sub-braces, bijective 1-cocycles,
//! windowed checks of two infinite examples, and exhaustive enumeration.

mod cocycle;
mod enumerate;
mod products;
mod window;

use thiserror::Error;

use crate::brace::{BraceError, SkewBrace};
use crate::groups::GroupError;
use crate::substructure::star_span;
use crate::ElementSet;

pub use cocycle::{brace_from_cocycle, CocycleDatum, CocycleFile};
pub use enumerate::{
    enumerate_braces, enumerate_braces_with, EnumerationOptions, DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_CAP,
};
pub use products::{direct_product, direct_product_many, semidirect_product, wreath_sub_brace, WREATH_CAP};
pub use window::{z_shift_window_check, z_window_check, z_window_check_with, WindowKind, WindowReport};

pub use crate::brace::brace_from_group_opposite_addition;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("action of {0} is not an automorphism of both tables")]
    NotABraceAutomorphism(usize),
    #[error("action is not multiplicative at ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("{0} is not an odd prime coprime to the order of B")]
    BadPrime(usize),
    #[error("order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("cocycle identity fails at ({0}, {1})")]
    NotACocycle(usize, usize),
    #[error("pi is not a bijection onto X")]
    NotBijective,
    #[error("bad action: {0}")]
    BadAction(String),
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `A² = A`. The zero brace counts as perfect.
pub fn is_perfect(a: &SkewBrace) -> bool {
    let full = ElementSet::full(a.order());
    star_span(a, &full, &full).is_full()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::brace_from_group;
    use crate::groups::FiniteGroup;
    use crate::substructure::socle;

    #[test]
    fn perfect() {
        assert!(!is_perfect(&brace_from_group(&FiniteGroup::cyclic(5))));
        assert!(is_perfect(&brace_from_group(&FiniteGroup::cyclic(1))));
        let a5 = brace_from_group_opposite_addition(&FiniteGroup::alternating(5));
        assert!(is_perfect(&a5));
        assert!(socle(&a5).is_zero());
        let s3 = brace_from_group_opposite_addition(&FiniteGroup::symmetric(3));
        assert!(!is_perfect(&s3));
    }
}
