//! Bitmask backend for groups of order at most 64.
//!
//! Subsets are single `u64` masks with bit i standing for the element of
//! flat index i, which makes translation, periods and exact-cover search a
//! handful of word operations. This is the engine behind the large
//! exhaustive cross-validation sweeps; it is checked against the general
//! solver and the element-level operations in tests.

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::subsets::GroupSubset;

#[derive(Clone)]
pub struct DenseGroup {
    group: AbelianGroup,
    n: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
}

impl DenseGroup {
    pub fn new(group: &AbelianGroup) -> Result<DenseGroup> {
        let n = group.order();
        if n > 64 {
            return Err(Error::LimitExceeded(format!(
                "dense backend supports order <= 64, got {n}"
            )));
        }
        let n = n as usize;
        let mut add = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        for a in 0..n {
            neg[a] = group.neg_index(a as u64) as u16;
            for b in 0..n {
                add[a * n + b] = group.add_indices(a as u64, b as u64) as u16;
            }
        }
        Ok(DenseGroup { group: group.clone(), n, add, neg })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Mask of {x + g : x ∈ mask}.
    pub fn translate(&self, mask: u64, g: usize) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        let row = &self.add[g * self.n..(g + 1) * self.n];
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << row[b];
        }
        out
    }

    /// Mask of {−x : x ∈ mask}.
    pub fn negate_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << self.neg[b];
        }
        out
    }

    /// Subgroup of periods {g : mask + g = mask} as a mask.
    pub fn periods_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for g in 0..self.n {
            if self.translate(mask, g) == mask {
                out |= 1 << g;
            }
        }
        out
    }

    /// Mask of {x + y : x ∈ a, y ∈ b}.
    pub fn sum_mask(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        let mut m = a;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.translate(b, x);
        }
        out
    }

    /// Mask of {x − y : x, y ∈ a}.
    pub fn self_difference_mask(&self, a: u64) -> u64 {
        let mut out = 0u64;
        let mut m = a;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.translate(a, self.neg[x]);
        }
        out
    }

    pub fn subset_mask(&self, s: &GroupSubset) -> Result<u64> {
        if s.group() != &self.group {
            return Err(Error::AmbientMismatch);
        }
        Ok(s.indices().iter().fold(0u64, |m, &i| m | (1 << i)))
    }

    pub fn subset_from_mask(&self, mask: u64) -> GroupSubset {
        let mut indices = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as u64;
            m &= m - 1;
            indices.push(b);
        }
        GroupSubset::from_indices(&self.group, indices)
    }
}

/// Exact cover of the group by translates of a fixed tile, at mask level.
pub struct MaskCover {
    n: usize,
    full: u64,
    /// tiles[c] = tile + c.
    tiles: Vec<u64>,
    /// candidates[x] = mask of translation amounts whose tile covers cell x.
    candidates: Vec<u64>,
}

impl MaskCover {
    pub fn new(n: usize, tiles: Vec<u64>) -> MaskCover {
        debug_assert!(n <= 64 && tiles.len() == n);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut candidates = vec![0u64; n];
        for (c, &t) in tiles.iter().enumerate() {
            let mut m = t;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                candidates[x] |= 1 << c;
            }
        }
        MaskCover { n, full, tiles, candidates }
    }

    pub fn for_group_tile(dg: &DenseGroup, tile: u64) -> MaskCover {
        let tiles: Vec<u64> = (0..dg.order()).map(|c| dg.translate(tile, c)).collect();
        MaskCover::new(dg.order(), tiles)
    }

    pub fn for_cyclic_tile(n: usize, tile: u64) -> MaskCover {
        let tiles: Vec<u64> = (0..n).map(|c| rotate(tile, c, n)).collect();
        MaskCover::new(n, tiles)
    }

    /// Is there any exact cover? Solutions of these covers are closed under
    /// translation, so existence is tested with the tile at 0 pre-placed.
    pub fn exists_translation_closed(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let t0 = self.tiles[0];
        self.exists_from(t0)
    }

    /// Is there any exact cover extending `covered`?
    fn exists_from(&self, covered: u64) -> bool {
        if covered == self.full {
            return true;
        }
        let x = (!covered & self.full).trailing_zeros() as usize;
        let mut cands = self.candidates[x];
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let t = self.tiles[c];
            if t & covered == 0 && self.exists_from(covered | t) {
                return true;
            }
        }
        false
    }

    /// All exact covers, as masks of chosen translation amounts, ascending.
    pub fn collect_all(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.walk(0, 0, &mut |code| out.push(code));
        out.sort_unstable();
        out
    }

    /// All exact covers whose translation set contains 0.
    pub fn collect_containing_zero(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let t0 = self.tiles[0];
        self.walk(t0, 1, &mut |code| out.push(code));
        out.sort_unstable();
        out
    }

    pub fn count_all(&self) -> u64 {
        let mut count = 0u64;
        self.walk(0, 0, &mut |_| count += 1);
        count
    }

    fn walk(&self, covered: u64, chosen: u64, visit: &mut impl FnMut(u64)) {
        if covered == self.full {
            visit(chosen);
            return;
        }
        let x = (!covered & self.full).trailing_zeros() as usize;
        let mut cands = self.candidates[x];
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let t = self.tiles[c];
            if t & covered == 0 {
                self.walk(covered | t, chosen | (1 << c), visit);
            }
        }
    }
}

/// Rotate a subset mask of Z_n by c positions (addition of c).
#[inline]
pub fn rotate(mask: u64, c: usize, n: usize) -> u64 {
    debug_assert!(n <= 64 && c < n);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if c == 0 {
        mask & full
    } else {
        ((mask << c) | (mask >> (n - c))) & full
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotate_wraps() {
        assert_eq!(rotate(0b1, 3, 6), 0b1000);
        assert_eq!(rotate(0b100000, 1, 6), 0b1);
        assert_eq!(rotate(0b100011, 0, 6), 0b100011);
    }

    #[test]
    fn dense_group_matches_element_ops() {
        let g = AbelianGroup::new(&[6, 4]).unwrap();
        let dg = DenseGroup::new(&g).unwrap();
        for a in 0..24usize {
            assert_eq!(dg.neg(a) as u64, g.neg_index(a as u64));
            for b in 0..24usize {
                assert_eq!(dg.add(a, b) as u64, g.add_indices(a as u64, b as u64));
            }
        }
        let s = GroupSubset::parse(&g, "{(1,1),(1,2),(3,2),(5,2),(5,3)}").unwrap();
        let mask = dg.subset_mask(&s).unwrap();
        assert_eq!(dg.subset_from_mask(mask), s);
        assert_eq!(mask.count_ones() as usize, s.len());
        // Inverse-closed set: negation fixes the mask.
        assert_eq!(dg.negate_mask(mask), mask);
    }

    #[test]
    fn periods_mask_matches_subset_periods() {
        let g = AbelianGroup::new(&[2, 6]).unwrap();
        let dg = DenseGroup::new(&g).unwrap();
        let c = GroupSubset::parse(&g, "{(0,0),(0,2),(1,3),(1,5)}").unwrap();
        let mask = dg.subset_mask(&c).unwrap();
        let pm = dg.periods_mask(mask);
        let h = crate::subsets::periods(&c).unwrap();
        let want: u64 = h.elements().fold(0, |m, e| m | (1 << e.index()));
        assert_eq!(pm, want);
    }

    #[test]
    fn cyclic_cover_counts_ball_partitions() {
        // Balls of radius 1 in the 6-cycle: three partitions.
        let tile = 0b100011u64; // {0,1,5} = S0 for S={1,5} in Z6
        let cover = MaskCover::for_cyclic_tile(6, tile);
        let codes = cover.collect_all();
        assert_eq!(codes, vec![0b001001, 0b010010, 0b100100]);
        assert!(cover.exists_translation_closed());
        assert_eq!(cover.count_all(), 3);
        assert_eq!(cover.collect_containing_zero(), vec![0b001001]);
    }

    #[test]
    fn rejects_large_groups() {
        let g = AbelianGroup::new(&[65]).unwrap();
        assert!(DenseGroup::new(&g).is_err());
    }
}
