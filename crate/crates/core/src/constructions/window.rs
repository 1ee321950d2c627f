//! Exhaustive checks of two brace structures on ℤ over a window
//! `[−N, N]³`, with overflow-checked `i128` arithmetic.

use serde::Serialize;

use crate::par::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowKind {
    /// Element `m·a` is `m`; `m + n` as usual and
    /// `m ∘ n = (−1)^m·n + m`.
    RumpCyclic,
    /// Element `g^k` is `k`; `k ⊕ l = k + (−1)^k·l` and `k ∘ l = k + l`.
    DihedralZ,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub kind: String,
    pub window: i64,
    pub triples_checked: u64,
    pub failure_count: u64,
    /// The first failures in scan order, at most [`MAX_WITNESSES`].
    pub failures: Vec<(i64, i64, i64)>,
}

pub const MAX_WITNESSES: usize = 16;

impl WindowReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

fn sign(k: i128) -> i128 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The two group laws with their inverses.
struct Ops {
    add: fn(i128, i128) -> Option<i128>,
    neg: fn(i128) -> Option<i128>,
    circ: fn(i128, i128) -> Option<i128>,
    circ_inv: fn(i128) -> Option<i128>,
}

fn ops(kind: WindowKind) -> Ops {
    match kind {
        WindowKind::RumpCyclic => Ops {
            add: |m, n| m.checked_add(n),
            neg: |m| m.checked_neg(),
            circ: |m, n| sign(m).checked_mul(n)?.checked_add(m),
            circ_inv: |m| sign(m).checked_mul(m)?.checked_neg(),
        },
        WindowKind::DihedralZ => Ops {
            add: |k, l| sign(k).checked_mul(l)?.checked_add(k),
            neg: |k| sign(k).checked_mul(k)?.checked_neg(),
            circ: |k, l| k.checked_add(l),
            circ_inv: |k| k.checked_neg(),
        },
    }
}

/// Both laws are groups on the window (associativity, identity 0, inverses)
/// and `a∘(b+c) = a∘b − a + a∘c` holds.
fn check_triple(o: &Ops, a: i128, b: i128, c: i128) -> Option<bool> {
    let assoc = |f: fn(i128, i128) -> Option<i128>| -> Option<bool> { Some(f(f(a, b)?, c)? == f(a, f(b, c)?)?) };
    let mut ok = assoc(o.add)? && assoc(o.circ)?;
    if b == 0 && c == 0 {
        ok &= (o.add)(a, 0)? == a && (o.add)(0, a)? == a;
        ok &= (o.circ)(a, 0)? == a && (o.circ)(0, a)? == a;
        let n = (o.neg)(a)?;
        ok &= (o.add)(a, n)? == 0 && (o.add)(n, a)? == 0;
        let i = (o.circ_inv)(a)?;
        ok &= (o.circ)(a, i)? == 0 && (o.circ)(i, a)? == 0;
    }
    let lhs = (o.circ)(a, (o.add)(b, c)?)?;
    let rhs = (o.add)((o.add)((o.circ)(a, b)?, (o.neg)(a)?)?, (o.circ)(a, c)?)?;
    Some(ok && lhs == rhs)
}

pub fn z_window_check(kind: WindowKind, n: i64) -> WindowReport {
    z_window_check_with(kind, n, Exec::default())
}

pub fn z_window_check_with(kind: WindowKind, n: i64, exec: Exec) -> WindowReport {
    let o = ops(kind);
    let label = match kind {
        WindowKind::RumpCyclic => "rump_cyclic",
        WindowKind::DihedralZ => "dihedral_z",
    };
    scan(label, n, exec, |a, b, c| check_triple(&o, a, b, c).unwrap_or(false))
}

/// The shift solution `r(a, b) = (b + 1, a + 1)` on ℤ: checks the braid
/// relation on the window.
///
/// ```
/// let report = braceforge::constructions::z_shift_window_check(20);
/// assert!(report.passed());
/// assert_eq!(report.triples_checked, 41 * 41 * 41);
/// ```
pub fn z_shift_window_check(n: i64) -> WindowReport {
    let r = |x: i128, y: i128| (y + 1, x + 1);
    scan("shift", n, Exec::default(), |a, b, c| {
        let r12 = |(x, y, z): (i128, i128, i128)| {
            let (p, q) = r(x, y);
            (p, q, z)
        };
        let r23 = |(x, y, z): (i128, i128, i128)| {
            let (p, q) = r(y, z);
            (x, p, q)
        };
        r12(r23(r12((a, b, c)))) == r23(r12(r23((a, b, c))))
    })
}

fn scan(label: &str, n: i64, exec: Exec, ok: impl Fn(i128, i128, i128) -> bool + Sync) -> WindowReport {
    assert!(n >= 0);
    let width = (2 * n + 1) as usize;
    let per_a = exec.map_range(width, |i| {
        let a = i as i128 - n as i128;
        let mut count = 0u64;
        let mut witnesses = Vec::new();
        for b in -n..=n {
            for c in -n..=n {
                if !ok(a, b as i128, c as i128) {
                    count += 1;
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push((a as i64, b, c));
                    }
                }
            }
        }
        (count, witnesses)
    });
    let failure_count = per_a.iter().map(|(c, _)| c).sum();
    let failures = per_a.into_iter().flat_map(|(_, w)| w).take(MAX_WITNESSES).collect();
    WindowReport {
        kind: label.to_string(),
        window: n,
        triples_checked: (width as u64).pow(3),
        failure_count,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let r = ops(WindowKind::RumpCyclic);
        // a ∘ a = 0·a
        assert_eq!((r.circ)(1, 1), Some(0));
        let d = ops(WindowKind::DihedralZ);
        assert_eq!((d.add)(1, 1), Some(0));
        assert_eq!((d.add)(2, 1), Some(3));
        assert_eq!((d.add)(1, 2), Some(-1));
        assert_eq!((d.neg)(-3), Some(-3));
        assert_eq!((d.neg)(4), Some(-4));
    }

    #[test]
    fn windows_pass() {
        for kind in [WindowKind::RumpCyclic, WindowKind::DihedralZ] {
            let report = z_window_check(kind, 20);
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.triples_checked, 41 * 41 * 41);
        }
    }

    #[test]
    fn a_wrong_law_is_caught() {
        // The opposite of the rump circle law is still a group on ℤ but is
        // not compatible with ordinary addition.
        let opposite = Ops {
            add: |m, n| m.checked_add(n),
            neg: |m| m.checked_neg(),
            circ: |m, n| sign(n).checked_mul(m)?.checked_add(n),
            circ_inv: |m| sign(m).checked_mul(m)?.checked_neg(),
        };
        assert_eq!(check_triple(&opposite, 1, 1, 1), Some(false));
        let report = scan("opposite", 3, Exec::Sequential, |a, b, c| {
            check_triple(&opposite, a, b, c).unwrap_or(false)
        });
        assert!(!report.passed());
        assert_eq!(report.failures.len(), MAX_WITNESSES);
        let (a, b, c) = report.failures[0];
        assert_eq!(check_triple(&opposite, a.into(), b.into(), c.into()), Some(false));
    }
}
