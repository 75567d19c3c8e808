//! Ordered partitions and equitable refinement.
//!
//! Cells occupy contiguous ranges of `lab`; a cell is named by its start
//! position. Every decision below depends only on positions and neighbour
//! counts, never on vertex labels, so refinement commutes with relabelling.

use std::collections::VecDeque;

/// Adjacency lists plus a bit matrix for constant-time link queries.
pub(crate) struct DenseGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    lists: Vec<Vec<u32>>,
}

impl DenseGraph {
    pub(crate) fn new(n: usize, lists: Vec<Vec<u32>>) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for (u, nbrs) in lists.iter().enumerate() {
            for &v in nbrs {
                rows[u * words + v as usize / 64] |= 1 << (v % 64);
            }
        }
        DenseGraph { n, words, rows, lists }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn neighbors(&self, u: usize) -> &[u32] {
        &self.lists[u]
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// True when `map` sends every edge of `self` onto an edge of `other`.
    /// With equal edge counts this makes `map` an isomorphism.
    pub(crate) fn maps_edges_into(&self, other: &DenseGraph, map: &[usize]) -> bool {
        (0..self.n).all(|u| {
            self.lists[u]
                .iter()
                .all(|&v| other.has_edge(map[u], map[v as usize]))
        })
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub(crate) lab: Vec<usize>,
    pos: Vec<usize>,
    // start position of the cell holding each vertex
    cell_of: Vec<usize>,
    // length of the cell starting at each position (meaningful at starts only)
    cell_len: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Ordered partition whose cells are the colour classes in increasing
    /// colour order.
    pub(crate) fn from_colors(colors: &[usize]) -> Self {
        let n = colors.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        let mut p = Partition {
            lab,
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_len: vec![0; n],
            cells: 0,
        };
        let mut start = 0;
        for i in 0..n {
            let v = p.lab[i];
            p.pos[v] = i;
            if i > 0 && colors[v] != colors[p.lab[i - 1]] {
                p.cell_len[start] = i - start;
                start = i;
            }
            p.cell_of[v] = start;
        }
        if n > 0 {
            p.cell_len[start] = n - start;
        }
        p.cells = p.cell_starts().len();
        p
    }

    pub(crate) fn len(&self) -> usize {
        self.lab.len()
    }

    pub(crate) fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut s = 0;
        while s < self.len() {
            out.push(s);
            s += self.cell_len[s];
        }
        out
    }

    pub(crate) fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.cell_len[start]]
    }

    pub(crate) fn cell_count(&self) -> usize {
        self.cells
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cell_count() == self.len()
    }

    /// Sequence of cell lengths in positional order.
    pub(crate) fn shape(&self) -> Vec<usize> {
        self.cell_starts().iter().map(|&s| self.cell_len[s]).collect()
    }

    /// Colour of each vertex: the index of its cell in positional order.
    pub(crate) fn colors(&self) -> Vec<usize> {
        let starts = self.cell_starts();
        let mut index = vec![0; self.len()];
        for (k, &s) in starts.iter().enumerate() {
            index[s] = k;
        }
        (0..self.len()).map(|v| index[self.cell_of[v]]).collect()
    }

    /// First smallest cell with more than one vertex.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        self.cell_starts()
            .into_iter()
            .filter(|&s| self.cell_len[s] > 1)
            .min_by_key(|&s| (self.cell_len[s], s))
    }

    /// Splits `v` off the front of its cell; returns the start of the new
    /// singleton cell.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let start = self.cell_of[v];
        let len = self.cell_len[start];
        debug_assert!(len > 1);
        let front = self.lab[start];
        let pv = self.pos[v];
        self.lab.swap(start, pv);
        self.pos[front] = pv;
        self.pos[v] = start;
        self.cell_len[start] = 1;
        self.cell_len[start + 1] = len - 1;
        self.cells += 1;
        for i in start + 1..start + len {
            self.cell_of[self.lab[i]] = start + 1;
        }
        start
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting from the given splitter cells.
    pub(crate) fn refine(&mut self, g: &DenseGraph, splitters: &[usize]) {
        let n = self.len();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut queued = vec![false; n];
        for &s in splitters {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0u32; n];
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut cell_touched = vec![false; n];
        let mut scratch: Vec<(u32, usize)> = Vec::new();

        while let Some(splitter) = queue.pop_front() {
            queued[splitter] = false;
            if self.is_discrete() {
                break;
            }
            let members: Vec<usize> = self.cell(splitter).to_vec();
            let mut touched_vertices: Vec<usize> = Vec::new();
            for &u in &members {
                for &v in g.neighbors(u) {
                    let v = v as usize;
                    if count[v] == 0 {
                        touched_vertices.push(v);
                    }
                    count[v] += 1;
                    let c = self.cell_of[v];
                    if !cell_touched[c] {
                        cell_touched[c] = true;
                        touched_cells.push(c);
                    }
                }
            }
            touched_cells.sort_unstable();
            for &c in &touched_cells {
                cell_touched[c] = false;
                let len = self.cell_len[c];
                if len == 1 {
                    continue;
                }
                scratch.clear();
                scratch.extend(self.lab[c..c + len].iter().map(|&v| (count[v], v)));
                let first = scratch[0].0;
                if scratch.iter().all(|&(k, _)| k == first) {
                    continue;
                }
                scratch.sort_unstable();
                let mut pieces: Vec<(usize, usize)> = Vec::new();
                let mut piece_start = c;
                for (i, &(k, v)) in scratch.iter().enumerate() {
                    let p = c + i;
                    self.lab[p] = v;
                    self.pos[v] = p;
                    if i > 0 && k != scratch[i - 1].0 {
                        pieces.push((piece_start, p - piece_start));
                        piece_start = p;
                    }
                }
                pieces.push((piece_start, c + len - piece_start));
                self.cells += pieces.len() - 1;
                for &(s, l) in &pieces {
                    self.cell_len[s] = l;
                    for i in s..s + l {
                        self.cell_of[self.lab[i]] = s;
                    }
                }
                if queued[c] {
                    for &(s, _) in &pieces[1..] {
                        queued[s] = true;
                        queue.push_back(s);
                    }
                } else {
                    let largest = pieces
                        .iter()
                        .enumerate()
                        .max_by_key(|&(i, &(_, l))| (l, std::cmp::Reverse(i)))
                        .map(|(i, _)| i)
                        .unwrap();
                    for (i, &(s, _)) in pieces.iter().enumerate() {
                        if i != largest {
                            queued[s] = true;
                            queue.push_back(s);
                        }
                    }
                }
            }
            touched_cells.clear();
            for v in touched_vertices {
                count[v] = 0;
            }
        }
    }
}
