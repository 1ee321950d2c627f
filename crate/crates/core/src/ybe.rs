//! Finite set-theoretic solutions of the Yang–Baxter equation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brace::SkewBrace;
use crate::groups::{is_bijection, ElementSet, Permutation};
use crate::par::Exec;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum YbeError {
    #[error("malformed solution: {0}")]
    Malformed(String),
    #[error("sigma and tau do not commute")]
    NotCommuting,
    #[error("subset is not invariant: {map}_{y}({z}) = {image} leaves it")]
    NotInvariant {
        map: MapName,
        y: usize,
        z: usize,
        image: usize,
    },
    #[error("not a valid solution: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapName {
    Sigma,
    Tau,
}

impl std::fmt::Display for MapName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MapName::Sigma => "σ",
            MapName::Tau => "τ",
        })
    }
}

/// `r(x, y) = (σ_x(y), τ_y(x))` on `0..size`. Row `x` of `sigma` is `σ_x`;
/// row `y` of `tau` is `τ_y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    size: usize,
    sigma: Vec<Vec<usize>>,
    tau: Vec<Vec<usize>>,
}

/// Solution file format: `{"size": n, "sigma": [[...]], "tau": [[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionFile {
    pub size: usize,
    pub sigma: Vec<Vec<usize>>,
    pub tau: Vec<Vec<usize>>,
}

impl Solution {
    /// Checks shape and range only; see [`validate_solution`] for the axioms.
    pub fn from_tables(size: usize, sigma: Vec<Vec<usize>>, tau: Vec<Vec<usize>>) -> Result<Self, YbeError> {
        for (name, t) in [("sigma", &sigma), ("tau", &tau)] {
            if t.len() != size || t.iter().any(|r| r.len() != size) {
                return Err(YbeError::Malformed(format!("{name} is not {size}×{size}")));
            }
            if let Some(v) = t.iter().flatten().find(|&&v| v >= size) {
                return Err(YbeError::Malformed(format!("{name} entry {v} is out of range")));
            }
        }
        Ok(Solution { size, sigma, tau })
    }

    pub fn from_file(file: &SolutionFile) -> Result<Self, YbeError> {
        Self::from_tables(file.size, file.sigma.clone(), file.tau.clone())
    }

    pub fn to_file(&self) -> SolutionFile {
        SolutionFile {
            size: self.size,
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `σ_x(y)`.
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x][y]
    }

    /// `τ_y(x)`.
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau[y][x]
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma[x][y], self.tau[y][x])
    }
}

/// `σ_a(b) = λ_a(b)` and `τ_b(a) = λ_a(b)′ ∘ a ∘ b`.
pub fn solution_from_brace(a: &SkewBrace) -> Solution {
    let n = a.order();
    let sigma = (0..n).map(|x| a.lambda_row(x).to_vec()).collect();
    let tau = (0..n)
        .map(|b| {
            (0..n)
                .map(|x| a.circ(a.circ(a.circ_inv(a.lambda(x, b)), x), b))
                .collect()
        })
        .collect();
    Solution { size: n, sigma, tau }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateWitness {
    pub map: MapName,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub ybe: bool,
    pub nondegenerate: bool,
    pub involutive: bool,
    /// `(x, y, z)` with `r₁₂r₂₃r₁₂ ≠ r₂₃r₁₂r₂₃`.
    pub ybe_witness: Option<(usize, usize, usize)>,
    pub degenerate_witness: Option<DegenerateWitness>,
    /// `(x, y)` with `r(r(x, y)) ≠ (x, y)`.
    pub involutive_witness: Option<(usize, usize)>,
}

impl SolutionReport {
    pub fn is_valid(&self) -> bool {
        self.ybe && self.nondegenerate
    }
}

pub fn validate_solution(s: &Solution) -> SolutionReport {
    validate_solution_with(s, Exec::default())
}

pub fn validate_solution_with(s: &Solution, exec: Exec) -> SolutionReport {
    let n = s.size;
    let ybe_witness = exec.find_map_first(n, |x| {
        for y in 0..n {
            for z in 0..n {
                // r₁₂ r₂₃ r₁₂ (x, y, z), applied right to left.
                let (a1, b1) = s.r(x, y);
                let (b2, c2) = s.r(b1, z);
                let (a3, b3) = s.r(a1, b2);
                let left = (a3, b3, c2);
                // r₂₃ r₁₂ r₂₃ (x, y, z)
                let (p1, q1) = s.r(y, z);
                let (o2, p2) = s.r(x, p1);
                let (p3, q3) = s.r(p2, q1);
                let right = (o2, p3, q3);
                if left != right {
                    return Some((x, y, z));
                }
            }
        }
        None
    });
    let degenerate_witness = (0..n)
        .find(|&x| !is_bijection(&s.sigma[x]))
        .map(|index| DegenerateWitness {
            map: MapName::Sigma,
            index,
        })
        .or_else(|| {
            (0..n)
                .find(|&y| !is_bijection(&s.tau[y]))
                .map(|index| DegenerateWitness {
                    map: MapName::Tau,
                    index,
                })
        });
    let involutive_witness = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| {
        let (u, v) = s.r(x, y);
        s.r(u, v) != (x, y)
    });
    SolutionReport {
        ybe: ybe_witness.is_none(),
        nondegenerate: degenerate_witness.is_none(),
        involutive: involutive_witness.is_none(),
        ybe_witness,
        degenerate_witness,
        involutive_witness,
    }
}

/// `r(x, y) = (σ(y), τ(x))` for commuting permutations `σ, τ`.
pub fn permutation_solution(n: usize, sigma: &Permutation, tau: &Permutation) -> Result<Solution, YbeError> {
    if sigma.degree() != n || tau.degree() != n {
        return Err(YbeError::Malformed(format!("permutations must have degree {n}")));
    }
    if sigma.compose(tau) != tau.compose(sigma) {
        return Err(YbeError::NotCommuting);
    }
    let s = Solution {
        size: n,
        sigma: vec![sigma.images().to_vec(); n],
        tau: vec![tau.images().to_vec(); n],
    };
    debug_assert!(validate_solution(&s).is_valid());
    Ok(s)
}

/// Connected components of `z — σ_x(z)`, `z — τ_x(z)`, ordered by least
/// element.
pub fn orbits(s: &Solution) -> Vec<ElementSet> {
    let n = s.size;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..n {
        for z in 0..n {
            for w in [s.sigma[x][z], s.tau[x][z]] {
                let (a, b) = (find(&mut parent, z), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for z in 0..n {
        let root = find(&mut parent, z);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(z);
    }
    classes
        .into_iter()
        .map(|c| ElementSet::new(n, c).expect("orbit members are in range"))
        .collect()
}

/// Exactly one orbit.
pub fn is_indecomposable(s: &Solution) -> bool {
    orbits(s).len() == 1
}

/// Restriction to an invariant subset, re-indexed in increasing order.
pub fn restrict_solution(s: &Solution, y: &ElementSet) -> Result<Solution, YbeError> {
    if y.context_order() != s.size {
        return Err(YbeError::Malformed(format!(
            "subset lives in 0..{}, solution has size {}",
            y.context_order(),
            s.size
        )));
    }
    for u in y.iter() {
        for z in y.iter() {
            for (map, image) in [(MapName::Sigma, s.sigma[u][z]), (MapName::Tau, s.tau[u][z])] {
                if !y.contains(image) {
                    return Err(YbeError::NotInvariant { map, y: u, z, image });
                }
            }
        }
    }
    let members = y.members();
    let mut index = vec![usize::MAX; s.size];
    for (i, &m) in members.iter().enumerate() {
        index[m] = i;
    }
    let table = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        members
            .iter()
            .map(|&u| members.iter().map(|&z| index[t[u][z]]).collect())
            .collect()
    };
    let restricted = Solution {
        size: members.len(),
        sigma: table(&s.sigma),
        tau: table(&s.tau),
    };
    let report = validate_solution(&restricted);
    if !report.is_valid() {
        return Err(YbeError::Invalid(format!("{report:?}")));
    }
    Ok(restricted)
}

/// Largest size accepted by [`brute_force_decomposable`].
pub const BRUTE_DECOMPOSITION_CAP: usize = 16;

/// Searches every split `X = X₁ ⊔ X₂` for `r(Xᵢ × Xⱼ) = Xⱼ × Xᵢ`.
pub fn brute_force_decomposable(s: &Solution) -> Option<bool> {
    let n = s.size;
    if n > BRUTE_DECOMPOSITION_CAP {
        return None;
    }
    if n < 2 {
        return Some(false);
    }
    // Element 0 always goes to X₁, so each split is visited once.
    Some((1..(1u32 << (n - 1))).any(|bits| {
        let side = |x: usize| x > 0 && bits >> (x - 1) & 1 == 1;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = s.r(x, y);
                side(u) == side(y) && side(v) == side(x)
            })
        })
    }))
}
