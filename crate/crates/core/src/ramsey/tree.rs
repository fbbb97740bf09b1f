//! The Erdős–Rado tree of a colouring and the branch predicates over it.
//!
//! `j ≺ i` (for `j < i`) holds iff `c(k, i) = c(k, j)` for every `k ≺ j`. The
//! order is a binary tree rooted at 0: the immediate successors of a node `v`
//! are separated by their colour against `v`. Node `i` is therefore placed by
//! walking down from the root, at each node `v` following the child whose
//! colour against `v` equals `c(v, i)`, and the walk visits exactly the
//! predecessors of `i`.
//!
//! A 0-1 word `s` of length `L` is *witnessed* by `k' >= L` when
//! `s_i = 0 ⟺ i ≺ k'` for all `i < L`. Then
//!
//! - `T'(s, k)` holds iff `s` has a witness in `[L, k]`;
//! - `Depth_n(s, bound)` holds iff some `s * t` with `|t| = n` has a witness
//!   in `[|s| + n, bound]`.
//!
//! Minimal witnesses are discovered by scanning `k'` upwards once per length
//! and kept for the lifetime of the tree.

use std::cell::{Cell, RefCell};
use rustc_hash::FxHashMap as HashMap;

use super::colouring::{Colour, PairColouring};
use crate::error::{Budget, Error, Result};

/// Exhaustive Depth searches are refused beyond this many levels.
pub const MAX_DFS_DEPTH: usize = 24;

const NONE: usize = usize::MAX;

#[derive(Debug, Default)]
struct Trie {
    // predecessors of each inserted node, increasing
    paths: Vec<Vec<usize>>,
    children: Vec<[usize; 2]>,
}

#[derive(Debug)]
struct WitnessTable {
    next: usize,
    found: Vec<(Vec<u8>, usize)>,
    index: HashMap<Vec<u8>, usize>,
}

impl WitnessTable {
    fn new(len: usize) -> Self {
        WitnessTable {
            next: len,
            found: Vec::new(),
            index: HashMap::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeCounters {
    pub depth_evaluations: u64,
    pub witness_scans: u64,
    pub nodes: usize,
}

/// Memoised Erdős–Rado order of one colouring, together with the work
/// budget of the computation that owns it.
pub struct ErTree<'c> {
    colouring: &'c dyn PairColouring,
    budget: Budget,
    trie: RefCell<Trie>,
    witnesses: RefCell<HashMap<usize, WitnessTable>>,
    depth_evaluations: Cell<u64>,
    witness_scans: Cell<u64>,
}

impl<'c> ErTree<'c> {
    pub fn new(colouring: &'c dyn PairColouring, budget: Budget) -> Self {
        ErTree {
            colouring,
            budget,
            trie: RefCell::new(Trie::default()),
            witnesses: RefCell::new(HashMap::default()),
            depth_evaluations: Cell::new(0),
            witness_scans: Cell::new(0),
        }
    }

    pub fn unbounded(colouring: &'c dyn PairColouring) -> Self {
        ErTree::new(colouring, Budget::unlimited())
    }

    pub fn colouring(&self) -> &'c dyn PairColouring {
        self.colouring
    }

    pub fn colour(&self, i: usize, j: usize) -> Colour {
        self.colouring.colour(i, j) & 1
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn counters(&self) -> TreeCounters {
        TreeCounters {
            depth_evaluations: self.depth_evaluations.get(),
            witness_scans: self.witness_scans.get(),
            nodes: self.trie.borrow().paths.len(),
        }
    }

    fn grow(&self, upto: usize) {
        let mut trie = self.trie.borrow_mut();
        while trie.paths.len() <= upto {
            let k = trie.paths.len();
            trie.children.push([NONE; 2]);
            if k == 0 {
                trie.paths.push(Vec::new());
                continue;
            }
            let mut path = vec![0];
            let mut v = 0;
            loop {
                let b = self.colour(v, k) as usize;
                match trie.children[v][b] {
                    NONE => {
                        trie.children[v][b] = k;
                        break;
                    }
                    u => {
                        path.push(u);
                        v = u;
                    }
                }
            }
            trie.paths.push(path);
        }
    }

    /// `j ≺ i`. Always false unless `j < i`.
    pub fn prec(&self, j: usize, i: usize) -> bool {
        if j >= i {
            return false;
        }
        self.grow(i);
        self.trie.borrow().paths[i].binary_search(&j).is_ok()
    }

    /// All `j ≺ i`, increasing.
    pub fn predecessors(&self, i: usize) -> Vec<usize> {
        self.grow(i);
        self.trie.borrow().paths[i].clone()
    }

    /// The word `s` of length `len` with `s_i = 0 ⟺ i ≺ k`.
    pub fn pattern(&self, k: usize, len: usize) -> Vec<u8> {
        self.grow(k);
        let trie = self.trie.borrow();
        let mut s = vec![1u8; len];
        for &i in trie.paths[k].iter().take_while(|&&i| i < len) {
            s[i] = 0;
        }
        s
    }

    /// Scans witnesses of length `len` up to `bound`, stopping early once
    /// `stop` (if given) has been found.
    fn scan(&self, len: usize, bound: usize, stop: Option<&[u8]>) -> Result<()> {
        if let Some(s) = stop {
            let tables = self.witnesses.borrow();
            if tables.get(&len).is_some_and(|t| t.index.contains_key(s)) {
                return Ok(());
            }
        }
        let next = self
            .witnesses
            .borrow()
            .get(&len)
            .map_or(len, |t| t.next);
        if next > bound {
            return Ok(());
        }
        self.grow(bound);
        let mut k = next;
        while k <= bound {
            self.budget.charge(1)?;
            self.witness_scans.set(self.witness_scans.get() + 1);
            let p = self.pattern(k, len);
            let hit = stop == Some(p.as_slice());
            let mut tables = self.witnesses.borrow_mut();
            let table = tables.entry(len).or_insert_with(|| WitnessTable::new(len));
            table.next = k + 1;
            if !table.index.contains_key(&p) {
                table.index.insert(p.clone(), k);
                table.found.push((p, k));
            }
            if hit {
                break;
            }
            k += 1;
        }
        Ok(())
    }

    /// The least witness of `s` if it is at most `bound`.
    pub fn min_witness(&self, s: &[u8], bound: usize) -> Result<Option<usize>> {
        self.scan(s.len(), bound, Some(s))?;
        let tables = self.witnesses.borrow();
        Ok(tables
            .get(&s.len())
            .and_then(|t| t.index.get(s).copied())
            .filter(|&w| w <= bound))
    }

    /// `T'(s, k)`: `s` has a witness in `[|s|, k]`.
    pub fn t_prime(&self, s: &[u8], k: usize) -> Result<bool> {
        Ok(self.min_witness(s, k)?.is_some())
    }

    /// `T^β(s) = T'(s, β(|s|))`.
    pub fn t_beta(&self, beta: &[usize], s: &[u8]) -> Result<bool> {
        self.t_prime(s, crate::selection::at(beta, s.len()))
    }

    /// Words of length `len` with a witness at most `bound`, paired with their
    /// least witness, in order of discovery.
    pub fn witnessed_words(&self, len: usize, bound: usize) -> Result<Vec<(Vec<u8>, usize)>> {
        self.scan(len, bound, None)?;
        let tables = self.witnesses.borrow();
        Ok(tables.get(&len).map_or_else(Vec::new, |t| {
            t.found
                .iter()
                .filter(|(_, w)| *w <= bound)
                .cloned()
                .collect()
        }))
    }

    /// True iff some word of length `len` has its least witness in
    /// `(lo, hi]`, i.e. `∃s. T'(s, hi) ∧ ¬T'(s, lo)`.
    pub fn new_word_between(&self, len: usize, lo: usize, hi: usize) -> Result<bool> {
        if hi <= lo {
            return Ok(false);
        }
        self.scan(len, hi, None)?;
        let tables = self.witnesses.borrow();
        Ok(tables
            .get(&len)
            .is_some_and(|t| t.found.iter().any(|&(_, w)| w > lo && w <= hi)))
    }

    /// `∃t (|t| = n ∧ T'(s * t, bound))`.
    pub fn depth_bounded(&self, s: &[u8], n: usize, bound: usize) -> Result<bool> {
        self.budget.charge(1)?;
        self.depth_evaluations
            .set(self.depth_evaluations.get() + 1);
        let len = s.len() + n;
        if bound < len {
            return Ok(false);
        }
        self.scan(len, bound, None)?;
        let tables = self.witnesses.borrow();
        Ok(tables.get(&len).is_some_and(|t| {
            t.found
                .iter()
                .any(|(w, k)| *k <= bound && w.starts_with(s))
        }))
    }

    /// `Depth_n(T^β_s)`: some extension of `s` by `n` bits lies in `T^β`.
    pub fn depth(&self, beta: &[usize], s: &[u8], n: usize) -> Result<bool> {
        let bound = crate::selection::at(beta, s.len() + n);
        self.depth_bounded(s, n, bound)
    }

    /// [`ErTree::depth_bounded`] computed by depth-first search over the
    /// extensions, pruning every `u` with `¬T'(s * u, bound)`.
    pub fn depth_dfs(&self, s: &[u8], n: usize, bound: usize) -> Result<bool> {
        if n > MAX_DFS_DEPTH {
            return Err(Error::DepthTooLarge {
                requested: n,
                cap: MAX_DFS_DEPTH,
            });
        }
        self.budget.charge(1)?;
        self.depth_evaluations
            .set(self.depth_evaluations.get() + 1);
        let mut word = s.to_vec();
        self.dfs(&mut word, s.len() + n, bound)
    }

    fn dfs(&self, word: &mut Vec<u8>, target: usize, bound: usize) -> Result<bool> {
        if !self.t_prime(word, bound)? {
            return Ok(false);
        }
        if word.len() == target {
            return Ok(true);
        }
        for b in [0u8, 1] {
            word.push(b);
            let found = self.dfs(word, target, bound)?;
            word.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
