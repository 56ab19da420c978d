//! Finite abelian groups as direct products of cyclic groups.
//!
//! A group is described by its factor list `[n₁, …, n_d]`, standing for
//! `Z_{n₁} × … × Z_{n_d}` under componentwise addition. Elements are stored
//! reduced (coordinate i in `[0, nᵢ)`) and ordered lexicographically on their
//! coordinate sequences, which makes sets, sorting and golden output
//! deterministic. Subgroups are explicit element sets; quotients come with a
//! canonical invariant-factor target and an explicit isomorphism.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ambient-order guard for exhaustive subgroup enumeration.
pub const DEFAULT_SUBGROUP_ENUMERATION_BOUND: u64 = 512;

#[derive(Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Inner {
    factors: Box<[u64]>,
    /// strides[i] = n_{i+1} · … · n_d, so lexicographic coordinate order
    /// coincides with numeric order of flat indices.
    strides: Box<[u64]>,
    order: u64,
}

/// A finite abelian group `Z_{n₁} × … × Z_{n_d}`.
///
/// Cheap to clone (shared storage). Two groups are equal exactly when their
/// factor lists are equal; isomorphic groups with different factor lists are
/// distinct values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    inner: Arc<Inner>,
}

impl AbelianGroup {
    /// Builds the group with the given cyclic factors. Every factor must be
    /// at least 2 and the list nonempty.
    pub fn new(factors: &[u64]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup("no cyclic factors given".into()));
        }
        if let Some(&bad) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidGroup(format!("factor {bad} is smaller than 2")));
        }
        Self::build(factors)
    }

    /// The one-element group. Only produced internally (quotients by the
    /// whole group); `new` rejects factors below 2.
    pub fn trivial() -> Self {
        Self::build(&[1]).expect("trivial group")
    }

    fn build(factors: &[u64]) -> Result<Self> {
        let mut order: u64 = 1;
        for &f in factors {
            order = order
                .checked_mul(f)
                .ok_or_else(|| Error::InvalidGroup("group order overflows u64".into()))?;
        }
        let mut strides = vec![1u64; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(AbelianGroup {
            inner: Arc::new(Inner {
                factors: factors.into(),
                strides: strides.into(),
                order,
            }),
        })
    }

    pub fn factors(&self) -> &[u64] {
        &self.inner.factors
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.inner.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { group: self.clone(), index: 0 }
    }

    /// Element from coordinates, reduced mod the respective factors.
    /// Accepts any integers (negative values wrap around).
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        let mut index = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            let n = self.inner.factors[i] as i64;
            let r = c.rem_euclid(n) as u64;
            index += r * self.inner.strides[i];
        }
        Ok(GroupElement { group: self.clone(), index })
    }

    /// Element from its flat index in `[0, order)`.
    pub fn element_from_index(&self, index: u64) -> Result<GroupElement> {
        if index >= self.inner.order {
            return Err(Error::InvalidArgument(format!(
                "index {index} out of range for group of order {}",
                self.inner.order
            )));
        }
        Ok(GroupElement { group: self.clone(), index })
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.inner.order).map(move |index| GroupElement { group: self.clone(), index })
    }

    pub(crate) fn coords_of_index(&self, index: u64) -> Vec<u64> {
        let mut coords = Vec::with_capacity(self.rank());
        let mut rest = index;
        for i in 0..self.rank() {
            coords.push(rest / self.inner.strides[i]);
            rest %= self.inner.strides[i];
        }
        coords
    }

    pub(crate) fn add_indices(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        let mut ra = a;
        let mut rb = b;
        for i in 0..self.rank() {
            let s = self.inner.strides[i];
            let n = self.inner.factors[i];
            let ca = ra / s;
            let cb = rb / s;
            ra %= s;
            rb %= s;
            let mut c = ca + cb;
            if c >= n {
                c -= n;
            }
            out += c * s;
        }
        out
    }

    pub(crate) fn neg_index(&self, a: u64) -> u64 {
        let mut out = 0u64;
        let mut ra = a;
        for i in 0..self.rank() {
            let s = self.inner.strides[i];
            let n = self.inner.factors[i];
            let c = ra / s;
            ra %= s;
            if c != 0 {
                out += (n - c) * s;
            }
        }
        out
    }

    pub(crate) fn mul_index(&self, a: u64, k: u64) -> u64 {
        let mut out = 0u64;
        let mut ra = a;
        for i in 0..self.rank() {
            let s = self.inner.strides[i];
            let n = self.inner.factors[i];
            let c = ra / s;
            ra %= s;
            out += (c * (k % n) % n) * s;
        }
        out
    }

    /// Order of the element with the given index (lcm of coordinate orders).
    pub(crate) fn index_order(&self, a: u64) -> u64 {
        let mut ord = 1u64;
        let mut ra = a;
        for i in 0..self.rank() {
            let s = self.inner.strides[i];
            let n = self.inner.factors[i];
            let c = ra / s;
            ra %= s;
            let o = n / gcd(n, c);
            ord = lcm(ord, o);
        }
        ord
    }

    /// G ≅ ∏_p ∏_j Z_{p^{e_{p,j}}}: for every prime dividing the order, the
    /// exponents of its cyclic summands, sorted descending.
    pub fn primary_decomposition(&self) -> BTreeMap<u64, Vec<u32>> {
        let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &f in self.factors() {
            for (p, e) in factorize(f) {
                out.entry(p).or_default().push(e);
            }
        }
        for exps in out.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        out
    }

    /// Parses a group literal: factors joined by `x`, e.g. `6x4` or `42`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in text.trim().split(['x', 'X']) {
            let f: u64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad group factor {part:?} in {text:?}")))?;
            factors.push(f);
        }
        AbelianGroup::new(&factors).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AbelianGroup::parse(s)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.factors().iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({self})")
    }
}

/// An element of an [`AbelianGroup`], always stored reduced.
///
/// Elements order lexicographically by coordinates within one group (ties are
/// broken by the group itself so the order stays total across groups).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: AbelianGroup,
    index: u64,
}

impl GroupElement {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> Vec<u64> {
        self.group.coords_of_index(self.index)
    }

    /// Flat canonical index; lexicographic coordinate order equals index order.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn is_identity(&self) -> bool {
        self.index == 0
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::AmbientMismatch);
        }
        Ok(GroupElement {
            group: self.group.clone(),
            index: self.group.add_indices(self.index, other.index),
        })
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            index: self.group.neg_index(self.index),
        }
    }

    /// k-fold sum of the element with itself.
    pub fn scalar_mul(&self, k: u64) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            index: self.group.mul_index(self.index, k),
        }
    }

    /// Additive order.
    pub fn order(&self) -> u64 {
        self.group.index_order(self.index)
    }

    /// Parses an element literal: `(3,2)`, or a bare integer for rank-1
    /// groups. Coordinates may be any integers and are reduced.
    pub fn parse(group: &AbelianGroup, text: &str) -> Result<GroupElement> {
        let t = text.trim();
        let inner = if let Some(stripped) = t.strip_prefix('(') {
            stripped
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?
        } else {
            t
        };
        let mut coords = Vec::new();
        for part in inner.split(',') {
            let c: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coordinate {part:?} in {text:?}")))?;
            coords.push(c);
        }
        group
            .element(&coords)
            .map_err(|e| Error::Parse(format!("{e} in {text:?}")))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.group
            .cmp(&other.group)
            .then(self.index.cmp(&other.index))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.coords();
        if coords.len() == 1 {
            write!(f, "{}", coords[0])
        } else {
            write!(f, "(")?;
            for (i, c) in coords.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A subgroup given by an explicit element set together with the generators
/// it was built from. Always closed and containing the identity; the order
/// divides the ambient order by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct SubgroupHandle {
    group: AbelianGroup,
    /// Sorted, duplicate-free flat indices.
    indices: Arc<[u64]>,
    generators: Vec<GroupElement>,
}

impl SubgroupHandle {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.indices.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.len() == 1
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.indices
            .iter()
            .map(move |&i| GroupElement { group: self.group.clone(), index: i })
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.group == self.group && self.indices.binary_search(&x.index).is_ok()
    }

    pub(crate) fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub(crate) fn contains_index(&self, i: u64) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub(crate) fn from_indices(
        group: &AbelianGroup,
        indices: Vec<u64>,
        generators: Vec<GroupElement>,
    ) -> SubgroupHandle {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        assert!(
            group.order() % indices.len() as u64 == 0,
            "subgroup order must divide the ambient order"
        );
        SubgroupHandle { group: group.clone(), indices: indices.into(), generators }
    }

    /// The whole group as a subgroup of itself.
    pub fn full(group: &AbelianGroup) -> SubgroupHandle {
        let indices: Vec<u64> = (0..group.order()).collect();
        let generators = group.elements().collect();
        SubgroupHandle::from_indices(group, indices, generators)
    }
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order(), self.group)
    }
}

/// Closure of a generating set under addition (negation follows in a finite
/// group). The empty set yields the trivial subgroup.
pub fn subgroup_generated(group: &AbelianGroup, gens: &[GroupElement]) -> Result<SubgroupHandle> {
    for g in gens {
        if g.group() != group {
            return Err(Error::AmbientMismatch);
        }
    }
    let gen_indices: Vec<u64> = gens.iter().map(|g| g.index()).collect();
    let indices = close_under_generators(group, &gen_indices);
    Ok(SubgroupHandle::from_indices(group, indices, gens.to_vec()))
}

pub(crate) fn close_under_generators(group: &AbelianGroup, gens: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(0);
    let mut queue: VecDeque<u64> = VecDeque::new();
    queue.push_back(0);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.add_indices(x, g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// All subgroups of `group`, found by closing generating sets grown one
/// element at a time. The list is complete, duplicate-free and sorted by
/// (order, element set). Fails when the ambient order exceeds the bound.
pub fn all_subgroups(group: &AbelianGroup, max_order_bound: u64) -> Result<Vec<SubgroupHandle>> {
    if group.order() > max_order_bound {
        return Err(Error::LimitExceeded(format!(
            "group order {} exceeds subgroup enumeration bound {}",
            group.order(),
            max_order_bound
        )));
    }
    let n = group.order();
    let mut seen: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new(); // elements -> generators
    let trivial = vec![0u64];
    seen.insert(trivial.clone(), vec![]);
    let mut queue: VecDeque<Vec<u64>> = VecDeque::new();
    queue.push_back(trivial);
    while let Some(h) = queue.pop_front() {
        let gens = seen[&h].clone();
        for x in 1..n {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(x);
            let closed = close_under_generators(group, &new_gens);
            if !seen.contains_key(&closed) {
                seen.insert(closed.clone(), new_gens);
                queue.push_back(closed);
            }
        }
    }
    let mut out: Vec<SubgroupHandle> = seen
        .into_iter()
        .map(|(indices, gens)| {
            let generators = gens
                .into_iter()
                .map(|i| GroupElement { group: group.clone(), index: i })
                .collect();
            SubgroupHandle::from_indices(group, indices, generators)
        })
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.indices.cmp(&b.indices))
    });
    Ok(out)
}

/// Surjection onto a canonical quotient group.
///
/// The quotient target is in invariant-factor form `[d₁, …, d_k]` with
/// `d_{i+1} | d_i`, computed from the coset structure by order profiling;
/// `forward` is an explicit isomorphism from the coset group onto it and
/// `section` picks the least representative of each coset.
#[derive(Clone)]
pub struct QuotientMap {
    group: AbelianGroup,
    kernel: SubgroupHandle,
    quotient: AbelianGroup,
    forward: Arc<[u64]>,
    section: Arc<[u64]>,
}

impl QuotientMap {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn kernel(&self) -> &SubgroupHandle {
        &self.kernel
    }

    pub fn quotient_group(&self) -> &AbelianGroup {
        &self.quotient
    }

    /// Image of an ambient element in the quotient group.
    pub fn map(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.group() != &self.group {
            return Err(Error::AmbientMismatch);
        }
        self.quotient.element_from_index(self.forward[x.index() as usize])
    }

    /// The chosen coset representative of a quotient element.
    pub fn section(&self, q: &GroupElement) -> Result<GroupElement> {
        if q.group() != &self.quotient {
            return Err(Error::AmbientMismatch);
        }
        self.group.element_from_index(self.section[q.index() as usize])
    }

    pub(crate) fn forward_index(&self, x: u64) -> u64 {
        self.forward[x as usize]
    }

    pub(crate) fn section_index(&self, q: u64) -> u64 {
        self.section[q as usize]
    }

    /// Quotient by the trivial subgroup with the identity relabelling; used
    /// where a trivial reduction must leave an instance literally unchanged.
    pub(crate) fn identity_map(
        group: &AbelianGroup,
        kernel: &SubgroupHandle,
        ids: Vec<u64>,
    ) -> QuotientMap {
        debug_assert_eq!(kernel.order(), 1);
        QuotientMap {
            group: group.clone(),
            kernel: kernel.clone(),
            quotient: group.clone(),
            forward: ids.clone().into(),
            section: ids.into(),
        }
    }
}

impl fmt::Debug for QuotientMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientMap({} -> {})", self.group, self.quotient)
    }
}

/// Quotient of `group` by the subgroup `kernel`.
pub fn quotient(group: &AbelianGroup, kernel: &SubgroupHandle) -> Result<QuotientMap> {
    if kernel.group() != group {
        return Err(Error::NotASubgroup);
    }
    let n = group.order() as usize;

    // Coset decomposition; cosets are numbered by their least element.
    let mut coset_of = vec![u32::MAX; n];
    let mut reps: Vec<u64> = Vec::new();
    for x in 0..n as u64 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &k in kernel.indices() {
            coset_of[group.add_indices(x, k) as usize] = id;
        }
    }
    let m = reps.len();

    // The coset group on representative ids.
    let q_add = |i: usize, j: usize| -> usize {
        coset_of[group.add_indices(reps[i], reps[j]) as usize] as usize
    };
    let mut q_order = vec![0u64; m];
    for i in 0..m {
        let mut acc = i;
        let mut ord = 1u64;
        while acc != 0 {
            acc = q_add(acc, i);
            ord += 1;
        }
        q_order[i] = ord;
    }

    // Invariant factors from the order profile, one prime at a time:
    // the number of elements killed by p^j determines the conjugate of the
    // exponent partition.
    let mut partitions: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (p, _) in factorize(m as u64) {
        let vp = |x: u64| -> u32 {
            let mut v = 0;
            let mut x = x;
            while x % p == 0 {
                v += 1;
                x /= p;
            }
            v
        };
        let max_v = q_order.iter().map(|&o| vp(o)).max().unwrap_or(0);
        let mut conj: Vec<u32> = Vec::new();
        let mut prev_log = 0u32;
        for j in 1..=max_v {
            let count = q_order.iter().filter(|&&o| vp(o) <= j).count() as u64;
            let mut log = 0u32;
            let mut c = count;
            while c > 1 {
                debug_assert!(c % p == 0);
                c /= p;
                log += 1;
            }
            conj.push(log - prev_log);
            prev_log = log;
        }
        // Conjugate back: part i of the partition = #{j : conj[j] > i}.
        let rows = conj.first().copied().unwrap_or(0);
        let partition: Vec<u32> = (0..rows)
            .map(|i| conj.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        partitions.insert(p, partition);
    }
    let width = partitions.values().map(|v| v.len()).max().unwrap_or(0);
    let mut dims: Vec<u64> = Vec::new();
    for i in 0..width {
        let mut d = 1u64;
        for (&p, parts) in &partitions {
            if let Some(&e) = parts.get(i) {
                d *= p.pow(e);
            }
        }
        dims.push(d);
    }
    let quotient_group = if dims.is_empty() {
        AbelianGroup::trivial()
    } else {
        AbelianGroup::build(&dims)?
    };

    // Explicit basis of the coset group matching the invariant factors,
    // found by backtracking over elements of the right order.
    let basis = find_basis(m, &q_add, &q_order, &dims)
        .ok_or_else(|| Error::InternalConsistency("no basis matches the invariant factors".into()))?;

    // Coordinates of every coset over the basis.
    let mut q_index_of_coset = vec![u64::MAX; m];
    let qn = quotient_group.order();
    {
        let k = dims.len();
        let mut tuple = vec![0u64; k];
        let mut elt = 0usize; // Σ tuple[i]·basis[i]
        'outer: loop {
            let mut qidx = 0u64;
            for i in 0..k {
                qidx = qidx * dims[i] + tuple[i];
            }
            if k == 0 {
                qidx = 0;
            }
            debug_assert!(q_index_of_coset[elt] == u64::MAX);
            q_index_of_coset[elt] = qidx;
            // Mixed-radix increment, keeping `elt` in step.
            for i in (0..k).rev() {
                tuple[i] += 1;
                elt = q_add(elt, basis[i]);
                if tuple[i] < dims[i] {
                    continue 'outer;
                }
                tuple[i] = 0;
                // basis[i]·dims[i] = 0, so elt is already reduced here.
            }
            break;
        }
        debug_assert_eq!(q_index_of_coset.iter().filter(|&&q| q != u64::MAX).count(), m);
    }
    let forward: Vec<u64> = (0..n)
        .map(|x| q_index_of_coset[coset_of[x] as usize])
        .collect();
    let mut section = vec![u64::MAX; qn as usize];
    for (coset, &qidx) in q_index_of_coset.iter().enumerate() {
        section[qidx as usize] = reps[coset];
    }

    let map = QuotientMap {
        group: group.clone(),
        kernel: kernel.clone(),
        quotient: quotient_group,
        forward: forward.into(),
        section: section.into(),
    };
    verify_quotient(&map)?;
    Ok(map)
}

fn find_basis(
    m: usize,
    q_add: &dyn Fn(usize, usize) -> usize,
    q_order: &[u64],
    dims: &[u64],
) -> Option<Vec<usize>> {
    fn rec(
        level: usize,
        dims: &[u64],
        m: usize,
        q_add: &dyn Fn(usize, usize) -> usize,
        q_order: &[u64],
        span: &mut HashSet<usize>,
        basis: &mut Vec<usize>,
    ) -> bool {
        if level == dims.len() {
            return true;
        }
        let d = dims[level];
        'cand: for g in 1..m {
            if q_order[g] != d {
                continue;
            }
            // Independence: no proper multiple of g may fall into the span.
            let mut acc = g;
            for _ in 1..d {
                if span.contains(&acc) {
                    continue 'cand;
                }
                acc = q_add(acc, g);
            }
            let saved: Vec<usize> = span.iter().copied().collect();
            let mut grown = Vec::new();
            for &s in &saved {
                let mut acc = s;
                for _ in 1..d {
                    acc = q_add(acc, g);
                    grown.push(acc);
                }
            }
            span.extend(grown);
            basis.push(g);
            if rec(level + 1, dims, m, q_add, q_order, span, basis) {
                return true;
            }
            basis.pop();
            span.clear();
            span.extend(saved);
        }
        false
    }

    let mut span = HashSet::new();
    span.insert(0usize);
    let mut basis = Vec::new();
    if rec(0, dims, m, q_add, q_order, &mut span, &mut basis) {
        debug_assert_eq!(span.len(), m);
        Some(basis)
    } else {
        None
    }
}

/// Full structural check of a freshly built quotient map: the forward map is
/// a homomorphism, its kernel is exactly the given subgroup, and the section
/// splits it. This is cheap at the guarded sizes where quotients are built.
fn verify_quotient(map: &QuotientMap) -> Result<()> {
    let g = &map.group;
    let q = &map.quotient;
    let n = g.order();
    for x in 0..n {
        let in_kernel = map.kernel.contains_index(x);
        if (map.forward_index(x) == 0) != in_kernel {
            return Err(Error::InternalConsistency(
                "quotient kernel does not match the given subgroup".into(),
            ));
        }
    }
    for qi in 0..q.order() {
        if map.forward_index(map.section_index(qi)) != qi {
            return Err(Error::InternalConsistency("section does not split the quotient".into()));
        }
    }
    for x in 0..n {
        for y in x..n {
            let lhs = map.forward_index(g.add_indices(x, y));
            let rhs = q.add_indices(map.forward_index(x), map.forward_index(y));
            if lhs != rhs {
                return Err(Error::InternalConsistency(
                    "quotient forward map is not a homomorphism".into(),
                ));
            }
        }
    }
    Ok(())
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization by trial division, ascending primes.
pub(crate) fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}
