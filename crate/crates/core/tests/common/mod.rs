//! Brute-force oracles that share no code with the library's group catalogue,
//! automorphism search, enumeration or isomorphism test.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Table = Vec<Vec<usize>>;

/// Every permutation of `0..n` that fixes 0.
pub fn perms_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn rec(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k >= current.len() {
            out.push(current.clone());
            return;
        }
        for i in k..current.len() {
            current.swap(k, i);
            rec(k + 1, current, out);
            current.swap(k, i);
        }
    }
    rec(1.min(n), &mut current, &mut out);
    out
}

pub fn is_associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// `t'[p[a]][p[b]] = p[t[a][b]]`, flattened.
fn relabelled(t: &Table, p: &[usize]) -> Vec<usize> {
    let n = t.len();
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[p[a] * n + p[b]] = p[t[a][b]];
        }
    }
    out
}

/// Group tables of order `n` with identity 0, one per isomorphism class,
/// found by filling reduced Latin squares and keeping the associative ones.
pub fn groups_by_latin_squares(n: usize) -> Vec<Table> {
    let mut t = vec![vec![usize::MAX; n]; n];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = i;
    }
    t[0] = (0..n).collect();
    let mut found = Vec::new();
    fn fill(t: &mut Table, cell: usize, found: &mut Vec<Table>) {
        let n = t.len();
        if cell == (n - 1) * (n - 1) {
            if is_associative(t) {
                found.push(t.clone());
            }
            return;
        }
        let (r, c) = (1 + cell / (n - 1), 1 + cell % (n - 1));
        for v in 0..n {
            if t[r].contains(&v) || (0..n).any(|i| t[i][c] == v) {
                continue;
            }
            t[r][c] = v;
            fill(t, cell + 1, found);
            t[r][c] = usize::MAX;
        }
    }
    if n == 1 {
        return vec![vec![vec![0]]];
    }
    fill(&mut t, 0, &mut found);
    let perms = perms_fixing_zero(n);
    let mut classes = BTreeSet::new();
    let mut out = Vec::new();
    for g in found {
        let key = perms.iter().map(|p| relabelled(&g, p)).min().unwrap();
        if classes.insert(key) {
            out.push(g);
        }
    }
    out
}

/// Automorphisms of a group table, by testing every permutation.
pub fn automorphisms(g: &Table) -> Vec<Vec<usize>> {
    let n = g.len();
    perms_fixing_zero(n)
        .into_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[g[a][b]] == g[p[a]][p[b]])))
        .collect()
}

fn compatible(add: &Table, circle: &Table) -> bool {
    let n = add.len();
    let neg: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| add[a][b] == 0).unwrap()).collect();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| circle[a][add[b][c]] == add[add[circle[a][b]][neg[a]]][circle[a][c]])))
}

/// Every `(add, circle)` brace of order `n` up to isomorphism. `λ_a` ranges
/// over all permutations fixing 0 when `n ≤ 5` and over `Aut(A,+)` at `n = 6`;
/// `a∘b = a + λ_a(b)`, and compatibility and associativity are checked
/// directly.
pub fn braces_by_brute_force(n: usize) -> Vec<(Table, Table)> {
    assert!(n <= 6, "brute force is only feasible up to order 6");
    let mut classes = BTreeSet::new();
    let mut out = Vec::new();
    let perms = perms_fixing_zero(n);
    for add in groups_by_latin_squares(n) {
        let choices = if n <= 5 { perms.clone() } else { automorphisms(&add) };
        let mut pick = vec![0usize; n.saturating_sub(1)];
        loop {
            let lambda = |a: usize, b: usize| if a == 0 { b } else { choices[pick[a - 1]][b] };
            let circle: Table = (0..n).map(|a| (0..n).map(|b| add[a][lambda(a, b)]).collect()).collect();
            if is_associative(&circle) && compatible(&add, &circle) {
                let key = perms
                    .iter()
                    .map(|p| (relabelled(&add, p), relabelled(&circle, p)))
                    .min()
                    .unwrap();
                if classes.insert(key) {
                    out.push((add.clone(), circle));
                }
            }
            // Odometer over the choices for λ_1, …, λ_(n−1).
            let mut k = 0;
            loop {
                if k == pick.len() {
                    break;
                }
                pick[k] += 1;
                if pick[k] < choices.len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
    }
    out
}

/// Brace counts of orders 1..=6 from [`braces_by_brute_force`].
pub const ORACLE_BRACE_COUNTS: [usize; 6] = [1, 1, 1, 4, 1, 6];
/// Group counts of orders 1..=6 from [`groups_by_latin_squares`].
pub const ORACLE_GROUP_COUNTS: [usize; 6] = [1, 1, 1, 2, 1, 2];
