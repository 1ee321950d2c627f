use serde::{Serialize, Serializer};

use super::GroupError;

/// A subset of element indices of some ambient structure, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<usize>,
    context_order: usize,
}

impl ElementSet {
    pub fn new<I: IntoIterator<Item = usize>>(context_order: usize, members: I) -> Result<Self, GroupError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >= context_order) {
            return Err(GroupError::OutOfRange {
                index: bad,
                order: context_order,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(ElementSet { members, context_order })
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        ElementSet {
            members: (0..mask.len()).filter(|&i| mask[i]).collect(),
            context_order: mask.len(),
        }
    }

    pub fn full(context_order: usize) -> Self {
        ElementSet {
            members: (0..context_order).collect(),
            context_order,
        }
    }

    /// The set `{0}`.
    pub fn zero(context_order: usize) -> Self {
        ElementSet {
            members: vec![0],
            context_order,
        }
    }

    pub fn empty(context_order: usize) -> Self {
        ElementSet {
            members: Vec::new(),
            context_order,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn context_order(&self) -> usize {
        self.context_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.context_order
    }

    /// `true` for `{0}`.
    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.context_order];
        for &m in &self.members {
            mask[m] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            members: self.members.iter().copied().filter(|&m| other.contains(m)).collect(),
            context_order: self.context_order,
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        ElementSet {
            members,
            context_order: self.context_order.max(other.context_order),
        }
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let s = ElementSet::new(6, [4, 2, 4, 0]).unwrap();
        assert_eq!(s.members(), &[0, 2, 4]);
        assert!(s.contains(2) && !s.contains(3));
        assert_eq!(ElementSet::from_mask(&s.mask()), s);
        assert!(matches!(
            ElementSet::new(3, [3]),
            Err(GroupError::OutOfRange { index: 3, order: 3 })
        ));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,2,4]");
    }
}
