use super::ConstructionError;
use crate::brace::{brace_from_group, SkewBrace};
use crate::groups::{is_prime, FiniteGroup, Permutation};

pub const WREATH_CAP: usize = 512;

/// `A × B` with `(a, b)` at index `|B|·a + b`.
pub fn direct_product(a: &SkewBrace, b: &SkewBrace) -> SkewBrace {
    let add = a.additive_group().direct_product(b.additive_group());
    let circle = a.multiplicative_group().direct_product(b.multiplicative_group());
    SkewBrace::revalidate(add, circle).expect("direct products of braces are braces")
}

/// Left fold of [`direct_product`]; the empty product is the zero brace.
pub fn direct_product_many(factors: &[SkewBrace]) -> SkewBrace {
    factors
        .iter()
        .fold(brace_from_group(&FiniteGroup::cyclic(1)), |acc, f| {
            direct_product(&acc, f)
        })
}

/// `A ⋊ B` for an action `b ↦ action[b]` of `(B, ∘)` by brace automorphisms
/// of `A`. Pair `(h, x)` sits at index `|B|·h + x`;
/// `(h, x) + (k, y) = (h + k, x + y)` and `(h, x) ∘ (k, y) = (h ∘ x(k), x ∘ y)`.
pub fn semidirect_product(
    a: &SkewBrace,
    b: &SkewBrace,
    action: &[Permutation],
) -> Result<SkewBrace, ConstructionError> {
    let (na, nb) = (a.order(), b.order());
    if action.len() != nb {
        return Err(ConstructionError::BadAction(format!(
            "expected {nb} permutations, got {}",
            action.len()
        )));
    }
    for (x, p) in action.iter().enumerate() {
        if p.degree() != na {
            return Err(ConstructionError::BadAction(format!(
                "permutation for {x} has degree {}, expected {na}",
                p.degree()
            )));
        }
        let preserves = (0..na).all(|h| {
            (0..na).all(|k| {
                p.apply(a.add(h, k)) == a.add(p.apply(h), p.apply(k))
                    && p.apply(a.circ(h, k)) == a.circ(p.apply(h), p.apply(k))
            })
        });
        if !preserves {
            return Err(ConstructionError::NotABraceAutomorphism(x));
        }
    }
    for x in 0..nb {
        for y in 0..nb {
            if action[b.circ(x, y)] != action[x].compose(&action[y]) {
                return Err(ConstructionError::NotAHomomorphism(x, y));
            }
        }
    }
    let n = na * nb;
    let add = FiniteGroup::from_fn_trusted(n, |s, t| {
        let (h, x, k, y) = (s / nb, s % nb, t / nb, t % nb);
        nb * a.add(h, k) + b.add(x, y)
    });
    let circle = FiniteGroup::from_fn_trusted(n, |s, t| {
        let (h, x, k, y) = (s / nb, s % nb, t / nb, t % nb);
        nb * a.circ(h, action[x].apply(k)) + b.circ(x, y)
    });
    Ok(SkewBrace::revalidate(add, circle)?)
}

/// `W ⋊ B` inside `T ≀ B`, where `T` has odd prime order `p` not dividing
/// `|B|` and `W` is the set of zero-sum functions `B → T`.
///
/// A function `f ∈ W` is encoded by its values on `1..|B|` as base-`p`
/// digits (`f(1)` least significant); `f(0)` is determined by the zero sum.
/// `(f, x)` sits at index `|B|·code(f) + x`, and `x` acts on `W` by
/// `(x·g)(y) = g(x′ ∘ y)`.
pub fn wreath_sub_brace(t: &SkewBrace, b: &SkewBrace, cap: usize) -> Result<SkewBrace, ConstructionError> {
    let p = t.order();
    let nb = b.order();
    if p == 2 || !is_prime(p) || nb.is_multiple_of(p) {
        return Err(ConstructionError::BadPrime(p));
    }
    let too_big = || ConstructionError::CapExceeded { order: usize::MAX, cap };
    let w = (1..nb)
        .try_fold(1usize, |acc, _| acc.checked_mul(p))
        .ok_or_else(too_big)?;
    let order = w.checked_mul(nb).ok_or_else(too_big)?;
    if order > cap {
        return Err(ConstructionError::CapExceeded { order, cap });
    }

    let decode = |code: usize| -> Vec<usize> {
        let mut values = vec![0; nb];
        let mut c = code;
        for v in values.iter_mut().skip(1) {
            *v = c % p;
            c /= p;
        }
        let sum = values[1..].iter().fold(0, |s, &v| t.add(s, v));
        values[0] = t.neg(sum);
        values
    };
    let encode = |values: &[usize]| -> usize { values[1..].iter().rev().fold(0, |acc, &v| acc * p + v) };
    let functions: Vec<Vec<usize>> = (0..w).map(decode).collect();
    let pointwise = |op: &dyn Fn(usize, usize) -> usize| {
        FiniteGroup::from_fn_trusted(w, |f, g| {
            let values: Vec<usize> = (0..nb).map(|y| op(functions[f][y], functions[g][y])).collect();
            encode(&values)
        })
    };
    let w_brace = SkewBrace::revalidate(pointwise(&|u, v| t.add(u, v)), pointwise(&|u, v| t.circ(u, v)))?;
    let action: Vec<Permutation> = (0..nb)
        .map(|x| {
            let xi = b.circ_inv(x);
            let images = (0..w)
                .map(|g| {
                    let values: Vec<usize> = (0..nb).map(|y| functions[g][b.circ(xi, y)]).collect();
                    encode(&values)
                })
                .collect();
            Permutation::from_images(images).expect("translation permutes W")
        })
        .collect();
    semidirect_product(&w_brace, b, &action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::are_isomorphic_braces;
    use crate::catalog;
    use crate::constructions::is_perfect;
    use crate::substructure::socle;

    fn trivial(n: usize) -> SkewBrace {
        brace_from_group(&FiniteGroup::cyclic(n))
    }

    #[test]
    fn direct_products() {
        let p = direct_product(&trivial(2), &trivial(3));
        assert!(are_isomorphic_braces(&p, &trivial(6)).unwrap());
        let f = catalog::funny_brace();
        let q = direct_product(&f, &trivial(3));
        assert_eq!(q.order(), 48);
        for s in 0..48 {
            for u in 0..48 {
                assert_eq!(q.star(s, u), 3 * f.star(s / 3, u / 3));
            }
        }
        assert_eq!(direct_product_many(&[]).order(), 1);
        assert_eq!(direct_product_many(&[trivial(2), trivial(2), trivial(2)]).order(), 8);
    }

    #[test]
    fn semidirect_products() {
        let a = trivial(3);
        let b = trivial(2);
        let id = vec![Permutation::identity(3); 2];
        assert_eq!(semidirect_product(&a, &b, &id).unwrap(), direct_product(&a, &b));

        let inversion = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let fx = semidirect_product(&a, &b, &[Permutation::identity(3), inversion.clone()]).unwrap();
        assert_eq!(fx.order(), 6);
        assert!(!fx.is_trivial());

        let shift = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(
            semidirect_product(&a, &b, &[Permutation::identity(3), shift]),
            Err(ConstructionError::NotABraceAutomorphism(1))
        );
        assert_eq!(
            semidirect_product(&a, &b, &[inversion.clone(), inversion]),
            Err(ConstructionError::NotAHomomorphism(0, 0))
        );
    }

    #[test]
    fn wreath() {
        let t = trivial(3);
        let small = wreath_sub_brace(&t, &trivial(2), WREATH_CAP).unwrap();
        assert_eq!(small.order(), 6);
        assert_eq!(socle(&small).members(), &[0, 2, 4]);
        assert!(!is_perfect(&small));

        let v4 = brace_from_group(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)));
        let big = wreath_sub_brace(&t, &v4, WREATH_CAP).unwrap();
        assert_eq!(big.order(), 108);
        let expected: Vec<usize> = (0..27).map(|f| 4 * f).collect();
        assert_eq!(socle(&big).members(), expected.as_slice());

        assert_eq!(
            wreath_sub_brace(&trivial(2), &trivial(3), 512),
            Err(ConstructionError::BadPrime(2))
        );
        assert_eq!(
            wreath_sub_brace(&t, &trivial(3), 512),
            Err(ConstructionError::BadPrime(3))
        );
        assert_eq!(
            wreath_sub_brace(&t, &v4, 100),
            Err(ConstructionError::CapExceeded { order: 108, cap: 100 })
        );
    }
}
