//! Subsets of a group and the arithmetic performed on them: sum and
//! difference sets, inverse-closure tests, the subgroup of periods, and
//! images under quotient maps.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement, QuotientMap, SubgroupHandle};

/// A finite subset of an [`AbelianGroup`], stored as a sorted duplicate-free
/// element set. The ambient group is part of the subset's identity: equal
/// element sets over different groups compare unequal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSubset {
    group: AbelianGroup,
    indices: Arc<[u64]>,
}

impl GroupSubset {
    pub fn from_elements(group: &AbelianGroup, elements: &[GroupElement]) -> Result<GroupSubset> {
        for e in elements {
            if e.group() != group {
                return Err(Error::AmbientMismatch);
            }
        }
        let mut indices: Vec<u64> = elements.iter().map(|e| e.index()).collect();
        indices.sort_unstable();
        indices.dedup();
        Ok(GroupSubset { group: group.clone(), indices: indices.into() })
    }

    /// Subset from coordinate rows; convenient for literals in tests.
    pub fn from_coords(group: &AbelianGroup, rows: &[&[i64]]) -> Result<GroupSubset> {
        let elements: Vec<GroupElement> =
            rows.iter().map(|r| group.element(r)).collect::<Result<_>>()?;
        GroupSubset::from_elements(group, &elements)
    }

    pub(crate) fn from_indices(group: &AbelianGroup, mut indices: Vec<u64>) -> GroupSubset {
        indices.sort_unstable();
        indices.dedup();
        GroupSubset { group: group.clone(), indices: indices.into() }
    }

    pub fn empty(group: &AbelianGroup) -> GroupSubset {
        GroupSubset { group: group.clone(), indices: Vec::new().into() }
    }

    pub fn full(group: &AbelianGroup) -> GroupSubset {
        GroupSubset::from_indices(group, (0..group.order()).collect())
    }

    pub fn singleton(x: &GroupElement) -> GroupSubset {
        GroupSubset { group: x.group().clone(), indices: vec![x.index()].into() }
    }

    pub fn from_subgroup(h: &SubgroupHandle) -> GroupSubset {
        GroupSubset { group: h.group().clone(), indices: h.indices().to_vec().into() }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.indices
            .iter()
            .map(move |&i| self.group.element_from_index(i).expect("stored index"))
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.group() == &self.group && self.indices.binary_search(&x.index()).is_ok()
    }

    pub(crate) fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub(crate) fn contains_index(&self, i: u64) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// The set with the identity adjoined (S₀ for a connection set S).
    pub fn with_identity(&self) -> GroupSubset {
        if self.contains_index(0) {
            self.clone()
        } else {
            let mut v = self.indices.to_vec();
            v.push(0);
            GroupSubset::from_indices(&self.group, v)
        }
    }

    pub fn without_identity(&self) -> GroupSubset {
        GroupSubset::from_indices(
            &self.group,
            self.indices.iter().copied().filter(|&i| i != 0).collect(),
        )
    }

    pub fn translate(&self, g: &GroupElement) -> Result<GroupSubset> {
        if g.group() != &self.group {
            return Err(Error::AmbientMismatch);
        }
        Ok(GroupSubset::from_indices(
            &self.group,
            self.indices
                .iter()
                .map(|&i| self.group.add_indices(i, g.index()))
                .collect(),
        ))
    }

    pub fn negate(&self) -> GroupSubset {
        GroupSubset::from_indices(
            &self.group,
            self.indices.iter().map(|&i| self.group.neg_index(i)).collect(),
        )
    }

    pub fn union(&self, other: &GroupSubset) -> Result<GroupSubset> {
        if other.group != self.group {
            return Err(Error::AmbientMismatch);
        }
        let mut v = self.indices.to_vec();
        v.extend_from_slice(&other.indices);
        Ok(GroupSubset::from_indices(&self.group, v))
    }

    /// Parses a subset literal: a brace-enclosed comma list of element
    /// literals, e.g. `{(1,1),(1,2)}` or `{1,5,6,7}`.
    pub fn parse(group: &AbelianGroup, text: &str) -> Result<GroupSubset> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("subset literal must be brace-enclosed: {text:?}")))?;
        let mut elements = Vec::new();
        // Split on commas at parenthesis depth zero.
        let mut depth = 0i32;
        let mut start = 0usize;
        let bytes = inner.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b',' if depth == 0 => {
                    let piece = &inner[start..i];
                    if !piece.trim().is_empty() {
                        elements.push(GroupElement::parse(group, piece)?);
                    }
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
        }
        let last = &inner[start..];
        if !last.trim().is_empty() {
            elements.push(GroupElement::parse(group, last)?);
        }
        GroupSubset::from_elements(group, &elements)
    }
}

impl fmt::Display for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊆ {}", self, self.group)
    }
}

fn require_same_group(x: &GroupSubset, y: &GroupSubset) -> Result<()> {
    if x.group() != y.group() {
        return Err(Error::AmbientMismatch);
    }
    Ok(())
}

fn require_nonempty(x: &GroupSubset, what: &'static str) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyOperand(what));
    }
    Ok(())
}

/// X + Y = {x + y : x ∈ X, y ∈ Y}.
pub fn sum_set(x: &GroupSubset, y: &GroupSubset) -> Result<GroupSubset> {
    require_same_group(x, y)?;
    require_nonempty(x, "sum_set left operand")?;
    require_nonempty(y, "sum_set right operand")?;
    let g = x.group();
    let n = g.order() as usize;
    let mut hit = vec![false; n];
    for &a in x.indices() {
        for &b in y.indices() {
            hit[g.add_indices(a, b) as usize] = true;
        }
    }
    Ok(collect_hits(g, &hit))
}

/// X − Y = {x − y : x ∈ X, y ∈ Y}.
pub fn difference_set(x: &GroupSubset, y: &GroupSubset) -> Result<GroupSubset> {
    require_same_group(x, y)?;
    require_nonempty(x, "difference_set left operand")?;
    require_nonempty(y, "difference_set right operand")?;
    let g = x.group();
    let n = g.order() as usize;
    let mut hit = vec![false; n];
    for &a in x.indices() {
        for &b in y.indices() {
            hit[g.add_indices(a, g.neg_index(b)) as usize] = true;
        }
    }
    Ok(collect_hits(g, &hit))
}

fn collect_hits(g: &AbelianGroup, hit: &[bool]) -> GroupSubset {
    GroupSubset::from_indices(
        g,
        hit.iter()
            .enumerate()
            .filter_map(|(i, &h)| h.then_some(i as u64))
            .collect(),
    )
}

/// True iff S avoids the identity and is closed under negation, i.e. S is a
/// valid connection set for a Cayley graph.
pub fn is_inverse_closed_connection_set(s: &GroupSubset) -> bool {
    let g = s.group();
    !s.contains_index(0) && s.indices().iter().all(|&i| s.contains_index(g.neg_index(i)))
}

/// The subgroup of periods G_X = {g : X + g = X}, the setwise stabilizer of
/// X under translation. X is always a union of its cosets.
pub fn periods(x: &GroupSubset) -> Result<SubgroupHandle> {
    require_nonempty(x, "periods")?;
    let g = x.group();
    let n = g.order();
    let mut members = Vec::new();
    for t in 0..n {
        if x.indices()
            .iter()
            .all(|&i| x.contains_index(g.add_indices(i, t)))
        {
            members.push(t);
        }
    }
    // Stabilizers are subgroups, so the member list is already closed.
    let generators = members
        .iter()
        .map(|&i| g.element_from_index(i).expect("index"))
        .collect();
    Ok(SubgroupHandle::from_indices(g, members, generators))
}

/// True iff the subgroup of periods is nontrivial.
pub fn is_periodic(x: &GroupSubset) -> Result<bool> {
    Ok(periods(x)?.order() > 1)
}

/// Image X/H of a subset under a quotient map.
pub fn quotient_subset(x: &GroupSubset, q: &QuotientMap) -> Result<GroupSubset> {
    if x.group() != q.group() {
        return Err(Error::AmbientMismatch);
    }
    Ok(GroupSubset::from_indices(
        q.quotient_group(),
        x.indices().iter().map(|&i| q.forward_index(i)).collect(),
    ))
}
