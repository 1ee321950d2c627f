use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::brace::SkewBrace;
use crate::groups::{is_bijection, FiniteGroup, GroupFile};

/// A group `G` acting on a group `X` by automorphisms, with a map
/// `pi: G → X`. `action[g][x]` is `g·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleDatum {
    pub g: FiniteGroup,
    pub x: FiniteGroup,
    pub action: Vec<Vec<usize>>,
    pub pi: Vec<usize>,
}

/// Cocycle file format: `{"G": group, "X": group, "action": [[...]], "pi": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleFile {
    #[serde(rename = "G")]
    pub g: GroupFile,
    #[serde(rename = "X")]
    pub x: GroupFile,
    pub action: Vec<Vec<usize>>,
    pub pi: Vec<usize>,
}

impl CocycleDatum {
    pub fn from_file(file: &CocycleFile) -> Result<Self, ConstructionError> {
        Ok(CocycleDatum {
            g: FiniteGroup::from_file(&file.g)?,
            x: FiniteGroup::from_file(&file.x)?,
            action: file.action.clone(),
            pi: file.pi.clone(),
        })
    }

    pub fn to_file(&self) -> CocycleFile {
        CocycleFile {
            g: self.g.to_file(),
            x: self.x.to_file(),
            action: self.action.clone(),
            pi: self.pi.clone(),
        }
    }
}

/// The brace on `X`'s labels with `x ∘ y = π(π⁻¹(x) π⁻¹(y))`, for a
/// bijective 1-cocycle `π(gh) = π(g) + g·π(h)`.
pub fn brace_from_cocycle(d: &CocycleDatum) -> Result<SkewBrace, ConstructionError> {
    let (ng, nx) = (d.g.order(), d.x.order());
    let bad = |msg: String| Err(ConstructionError::BadAction(msg));
    if d.action.len() != ng {
        return bad(format!("{} action rows for a group of order {ng}", d.action.len()));
    }
    for (g, row) in d.action.iter().enumerate() {
        if row.len() != nx || !is_bijection(row) {
            return bad(format!("row {g} is not a permutation of X"));
        }
        if (0..nx).any(|u| (0..nx).any(|v| row[d.x.op(u, v)] != d.x.op(row[u], row[v]))) {
            return bad(format!("row {g} is not an automorphism of X"));
        }
    }
    for g in 0..ng {
        for h in 0..ng {
            let gh = &d.action[d.g.op(g, h)];
            if (0..nx).any(|u| gh[u] != d.action[g][d.action[h][u]]) {
                return bad(format!("action is not a homomorphism at ({g}, {h})"));
            }
        }
    }
    if d.pi.len() != ng || ng != nx || !is_bijection(&d.pi) {
        return Err(ConstructionError::NotBijective);
    }
    for g in 0..ng {
        for h in 0..ng {
            if d.pi[d.g.op(g, h)] != d.x.op(d.pi[g], d.action[g][d.pi[h]]) {
                return Err(ConstructionError::NotACocycle(g, h));
            }
        }
    }
    let mut inverse = vec![0; nx];
    for (g, &x) in d.pi.iter().enumerate() {
        inverse[x] = g;
    }
    let circle = FiniteGroup::from_fn_trusted(nx, |u, v| d.pi[d.g.op(inverse[u], inverse[v])]);
    Ok(SkewBrace::revalidate(d.x.clone(), circle)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::brace_from_group;
    use crate::catalog;

    #[test]
    fn funny_cocycle() {
        let d = catalog::funny_cocycle();
        assert_eq!(brace_from_cocycle(&d).unwrap(), catalog::funny_brace());
        let json = serde_json::to_string(&d.to_file()).unwrap();
        let back = CocycleDatum::from_file(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn identity_cocycle_is_trivial() {
        let g = FiniteGroup::cyclic(5);
        let d = CocycleDatum {
            g: g.clone(),
            x: g.clone(),
            action: vec![(0..5).collect(); 5],
            pi: (0..5).collect(),
        };
        assert_eq!(brace_from_cocycle(&d).unwrap(), brace_from_group(&g));
    }

    #[test]
    fn errors() {
        let g = FiniteGroup::cyclic(3);
        let base = CocycleDatum {
            g: g.clone(),
            x: g.clone(),
            action: vec![(0..3).collect(); 3],
            pi: vec![0; 3],
        };
        assert_eq!(brace_from_cocycle(&base), Err(ConstructionError::NotBijective));
        let negation = CocycleDatum {
            pi: vec![0, 2, 1],
            ..base.clone()
        };
        assert!(brace_from_cocycle(&negation).is_ok());
        let shifted = CocycleDatum {
            pi: vec![1, 2, 0],
            ..base.clone()
        };
        assert_eq!(brace_from_cocycle(&shifted), Err(ConstructionError::NotACocycle(0, 0)));
        let bad_action = CocycleDatum {
            action: vec![vec![0, 1, 2], vec![1, 2, 0], vec![0, 1, 2]],
            pi: vec![0, 1, 2],
            ..base
        };
        assert!(matches!(
            brace_from_cocycle(&bad_action),
            Err(ConstructionError::BadAction(_))
        ));
    }
}
