//! Exact-cover backtracking over tile translates.
//!
//! Cells are group elements, tiles are the translates B + c of a fixed tile
//! B, and a solution is a set of pairwise disjoint tiles covering every
//! cell; the chosen translation amounts c form the code. Branching picks the
//! uncovered cell with the fewest admissible tile placements (ties to the
//! least cell) and tries its tiles in ascending order, so enumeration order
//! is deterministic.

use std::time::Instant;

pub(crate) struct ExactCover {
    n: usize,
    words: usize,
    /// Tile bitsets, indexed by translation amount.
    tiles: Vec<Vec<u64>>,
    /// For each cell, the tiles that cover it.
    candidates: Vec<Vec<u32>>,
}

pub(crate) struct CoverOutcome {
    /// Chosen translation sets, each sorted ascending.
    pub solutions: Vec<Vec<u32>>,
    pub nodes: u64,
    /// False when the node or time budget ran out before exhausting the tree.
    pub complete: bool,
}

pub(crate) struct CoverBudget {
    pub max_nodes: u64,
    pub deadline: Option<Instant>,
    /// Stop after this many solutions (u64::MAX to collect everything).
    pub max_solutions: u64,
}

impl ExactCover {
    /// Builds the instance from the cell lists of every tile translate.
    pub fn new(n: usize, tile_cells: Vec<Vec<u32>>) -> ExactCover {
        let words = n.div_ceil(64);
        let mut tiles = Vec::with_capacity(tile_cells.len());
        let mut candidates = vec![Vec::new(); n];
        for (c, cells) in tile_cells.iter().enumerate() {
            let mut bits = vec![0u64; words];
            for &cell in cells {
                bits[cell as usize / 64] |= 1 << (cell as usize % 64);
                candidates[cell as usize].push(c as u32);
            }
            tiles.push(bits);
        }
        ExactCover { n, words, tiles, candidates }
    }

    pub fn run(&self, forced: &[u32], budget: &CoverBudget) -> CoverOutcome {
        let mut covered = vec![0u64; self.words];
        let mut chosen: Vec<u32> = Vec::new();
        let mut out = CoverOutcome { solutions: Vec::new(), nodes: 0, complete: true };
        for &c in forced {
            let tile = &self.tiles[c as usize];
            if disjoint(tile, &covered) {
                or_into(&mut covered, tile);
                chosen.push(c);
            } else {
                // Forced tiles collide: no solutions under this forcing.
                return out;
            }
        }
        self.search(&mut covered, &mut chosen, budget, &mut out);
        out
    }

    fn search(
        &self,
        covered: &mut [u64],
        chosen: &mut Vec<u32>,
        budget: &CoverBudget,
        out: &mut CoverOutcome,
    ) -> bool {
        // Returns true when the search should unwind (budget hit or enough
        // solutions collected).
        let Some(cell) = self.pick_cell(covered) else {
            let mut solution = chosen.clone();
            solution.sort_unstable();
            out.solutions.push(solution);
            return out.solutions.len() as u64 >= budget.max_solutions;
        };
        for &c in &self.candidates[cell] {
            let tile = &self.tiles[c as usize];
            if !disjoint(tile, covered) {
                continue;
            }
            out.nodes += 1;
            if out.nodes > budget.max_nodes {
                out.complete = false;
                return true;
            }
            if out.nodes % 4096 == 0 {
                if let Some(deadline) = budget.deadline {
                    if Instant::now() >= deadline {
                        out.complete = false;
                        return true;
                    }
                }
            }
            or_into(covered, tile);
            chosen.push(c);
            let stop = self.search(covered, chosen, budget, out);
            chosen.pop();
            xor_into(covered, tile);
            if stop {
                return true;
            }
        }
        false
    }

    /// Uncovered cell with the fewest admissible tiles; `None` when all cells
    /// are covered.
    fn pick_cell(&self, covered: &[u64]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for cell in 0..self.n {
            if covered[cell / 64] >> (cell % 64) & 1 == 1 {
                continue;
            }
            let count = self.candidates[cell]
                .iter()
                .filter(|&&c| disjoint(&self.tiles[c as usize], covered))
                .count();
            match best {
                Some((_, b)) if b <= count => {}
                _ => best = Some((cell, count)),
            }
            if count == 0 {
                break;
            }
        }
        best.map(|(cell, _)| cell)
    }
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> CoverBudget {
        CoverBudget { max_nodes: u64::MAX, deadline: None, max_solutions: u64::MAX }
    }

    #[test]
    fn dominoes_on_a_cycle() {
        // Tiles {c, c+1} on Z6: exactly two domino tilings.
        let tiles: Vec<Vec<u32>> = (0..6u32).map(|c| vec![c, (c + 1) % 6]).collect();
        let cover = ExactCover::new(6, tiles);
        let out = cover.run(&[], &budget());
        assert!(out.complete);
        assert_eq!(out.solutions, vec![vec![0, 2, 4], vec![1, 3, 5]]);
    }

    #[test]
    fn forced_tiles_restrict_solutions() {
        let tiles: Vec<Vec<u32>> = (0..6u32).map(|c| vec![c, (c + 1) % 6]).collect();
        let cover = ExactCover::new(6, tiles);
        let out = cover.run(&[1], &budget());
        assert_eq!(out.solutions, vec![vec![1, 3, 5]]);
        let none = cover.run(&[0, 1], &budget());
        assert!(none.solutions.is_empty());
    }

    #[test]
    fn node_budget_flags_incomplete() {
        let tiles: Vec<Vec<u32>> = (0..12u32).map(|c| vec![c, (c + 1) % 12]).collect();
        let cover = ExactCover::new(12, tiles);
        let out = cover.run(&[], &CoverBudget { max_nodes: 2, deadline: None, max_solutions: u64::MAX });
        assert!(!out.complete);
    }
}
