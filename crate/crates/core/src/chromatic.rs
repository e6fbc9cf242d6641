//! Exact chromatic number, k-colorability with witnesses, and exhaustive
//! enumeration of color-class partitions.
//!
//! The branch-and-bound kernel pairs a pivoting max-clique lower bound with
//! a DSATUR greedy upper bound, then settles the gap with exact
//! k-colorability searches. Exactness is non-negotiable: running out of
//! time is an error, never a wrong answer.

use crate::bitset::VertexSet;
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of `V(G)` into nonempty independent classes, stored in
/// canonical order: classes sorted by their smallest member. Enumeration is
/// therefore duplicate-free up to permutation of colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<VertexSet>,
}

impl Coloring {
    /// Builds a coloring, dropping empty classes and normalizing the order.
    pub fn new(mut classes: Vec<VertexSet>) -> Coloring {
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| c.first().expect("nonempty class"));
        Coloring { classes }
    }

    pub fn from_assignment(n: usize, assign: &[usize]) -> Coloring {
        let k = assign.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![VertexSet::new(n); k];
        for (v, &c) in assign.iter().enumerate() {
            classes[c].insert(v);
        }
        Coloring::new(classes)
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_sizes_sorted(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        s.sort_unstable();
        s
    }

    /// Color index per vertex.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c.iter() {
                out[v] = i;
            }
        }
        out
    }

    /// Checks the partition/independence/nonemptiness invariants against `g`.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut seen = VertexSet::new(g.n());
        for (i, c) in self.classes.iter().enumerate() {
            if c.is_empty() {
                return Err(format!("class {i} is empty"));
            }
            if c.intersects(&seen) {
                return Err(format!("class {i} overlaps an earlier class"));
            }
            seen.union_with(c);
            if !g.is_independent_set(c) {
                return Err(format!("class {i} is not independent"));
            }
        }
        if seen.len() != g.n() {
            return Err("classes do not cover V(G)".into());
        }
        Ok(())
    }
}

impl serde::Serialize for Coloring {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.classes.iter())
    }
}

/// Greedy DSATUR coloring; upper bound plus witness assignment.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut assign = vec![usize::MAX; n];
    let mut saturation: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
    for _ in 0..n {
        // highest saturation, then highest degree, then lowest index
        let v = (0..n)
            .filter(|&v| assign[v] == usize::MAX)
            .max_by_key(|&v| (saturation[v].len(), g.degree(v), usize::MAX - v))
            .expect("uncolored vertex");
        let mut c = 0;
        while saturation[v].contains(c) {
            c += 1;
        }
        assign[v] = c;
        for u in g.neighbors(v).iter() {
            saturation[u].insert(c);
        }
    }
    assign
}

/// Greedy-plus-pivoting search for a large clique; sound lower bound, capped
/// effort. Returns the best clique found.
fn clique_lower_bound(g: &Graph, node_cap: usize) -> VertexSet {
    let n = g.n();
    let mut best = VertexSet::new(n);
    if n == 0 {
        return best;
    }
    let mut nodes = 0usize;
    let mut current = VertexSet::new(n);

    fn expand(
        g: &Graph,
        candidates: &VertexSet,
        current: &mut VertexSet,
        best: &mut VertexSet,
        nodes: &mut usize,
        cap: usize,
    ) {
        if *nodes >= cap {
            return;
        }
        *nodes += 1;
        if candidates.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        // pivot on a candidate of maximum degree within the candidate set
        let pivot = candidates
            .iter()
            .max_by_key(|&v| g.neighbors(v).intersection_count(candidates))
            .expect("nonempty candidates");
        let branch = candidates.difference(g.neighbors(pivot));
        for v in branch.iter() {
            current.insert(v);
            let next = candidates.intersection(g.neighbors(v));
            expand(g, &next, current, best, nodes, cap);
            current.remove(v);
            if *nodes >= cap {
                return;
            }
        }
    }

    let all = VertexSet::full(n);
    expand(g, &all, &mut current, &mut best, &mut nodes, node_cap);
    best
}

/// Exact k-colorability via DSATUR-ordered backtracking. Color symmetry is
/// broken by pre-coloring a clique and by only opening the lowest unused
/// color at each step.
struct KColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    assign: Vec<usize>,
    // forbidden[v] = colors used by >=1 neighbor, with per-color counts
    forbidden: Vec<u64>,
    counts: Vec<u16>,
    ticker: Ticker<'a>,
}

impl<'a> KColorSearch<'a> {
    fn run(g: &'a Graph, k: usize, budget: &'a Budget) -> Result<Option<Vec<usize>>> {
        let n = g.n();
        if k >= n {
            return Ok(Some((0..n).collect()));
        }
        if k == 0 {
            return Ok((n == 0).then_some(vec![]));
        }
        debug_assert!(k <= 64, "color masks use u64");
        let mut search = KColorSearch {
            g,
            k,
            assign: vec![usize::MAX; n],
            forbidden: vec![0u64; n],
            counts: vec![0u16; n * k],
            ticker: Ticker::new(budget, "k-coloring"),
        };
        // pre-color a clique: valid symmetry breaking, strong pruning
        let clique = clique_lower_bound(g, 2_000);
        if clique.len() > k {
            return Ok(None);
        }
        let mut used = 0usize;
        for (c, v) in clique.iter().enumerate() {
            search.place(v, c);
            used = used.max(c + 1);
        }
        let found = search.solve(used)?;
        Ok(found.then(|| search.assign.clone()))
    }

    fn place(&mut self, v: usize, c: usize) {
        self.assign[v] = c;
        for u in self.g.neighbors(v).iter() {
            let slot = u * self.k + c;
            self.counts[slot] += 1;
            if self.counts[slot] == 1 {
                self.forbidden[u] |= 1 << c;
            }
        }
    }

    fn unplace(&mut self, v: usize, c: usize) {
        self.assign[v] = usize::MAX;
        for u in self.g.neighbors(v).iter() {
            let slot = u * self.k + c;
            self.counts[slot] -= 1;
            if self.counts[slot] == 0 {
                self.forbidden[u] &= !(1 << c);
            }
        }
    }

    fn solve(&mut self, used: usize) -> Result<bool> {
        self.ticker.tick()?;
        let n = self.g.n();
        // most-saturated uncolored vertex
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if self.assign[v] != usize::MAX {
                continue;
            }
            let sat = (self.forbidden[v] & mask(self.k)).count_ones() as usize;
            if sat == self.k {
                return Ok(false);
            }
            let key = (sat, self.g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        if pick == usize::MAX {
            return Ok(true);
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[pick] >> c & 1 == 1 {
                continue;
            }
            self.place(pick, c);
            let next_used = used.max(c + 1);
            if self.solve(next_used)? {
                return Ok(true);
            }
            self.unplace(pick, c);
        }
        Ok(false)
    }
}

#[inline]
fn mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Witness k-coloring if one exists. The witness may use fewer than `k`
/// classes; it always satisfies the `Coloring` invariants.
pub fn is_k_colorable(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Coloring>> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(vec![])));
    }
    if k == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok((g.edge_count() == 0).then(|| Coloring::new(vec![VertexSet::full(g.n())])));
    }
    if k == 2 {
        return Ok(g.bipartition().map(|(a, b)| Coloring::new(vec![a, b])));
    }
    if k > 64 {
        // cap is far below any instance needing this many colors
        return Err(Error::InvalidParameter("k > 64 unsupported".into()));
    }
    match KColorSearch::run(g, k, budget)? {
        Some(assign) => Ok(Some(Coloring::from_assignment(g.n(), &assign))),
        None => Ok(None),
    }
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if g.is_bipartite() {
        return Ok(2);
    }
    let lb = clique_lower_bound(g, 20_000).len().max(3);
    let ub_assign = dsatur_greedy(g);
    let ub = ub_assign.iter().max().unwrap() + 1;
    for k in lb..ub {
        budget.check("chromatic-number")?;
        if is_k_colorable(g, k, budget)?.is_some() {
            return Ok(k);
        }
    }
    Ok(ub)
}

/// Exhaustive stream of partitions of `V(g)` into exactly `k` nonempty
/// independent classes, one per partition (canonical class order).
///
/// Enumeration is in restricted-growth order: vertex 0 lands in class 0,
/// and a vertex may open a new class only if it is the lowest unused one.
pub fn color_class_partitions<'a>(g: &'a Graph, k: usize, budget: &'a Budget) -> Partitions<'a> {
    Partitions {
        g,
        k,
        budget,
        assign: Vec::with_capacity(g.n()),
        next_try: vec![0],
        classes: vec![VertexSet::new(g.n()); k],
        used: 0,
        done: k == 0 && g.n() > 0,
        tick: 0,
    }
}

pub struct Partitions<'a> {
    g: &'a Graph,
    k: usize,
    budget: &'a Budget,
    /// colors of the assigned prefix
    assign: Vec<usize>,
    /// next color to try at each depth (len = assign.len() + 1)
    next_try: Vec<usize>,
    classes: Vec<VertexSet>,
    used: usize,
    done: bool,
    tick: u32,
}

impl Partitions<'_> {
    fn backtrack(&mut self) -> bool {
        // undo the deepest assignment; false when the stack empties
        self.next_try.pop();
        match self.assign.pop() {
            Some(c) => {
                let v = self.assign.len();
                self.classes[c].remove(v);
                if self.classes[c].is_empty() {
                    self.used -= 1;
                }
                true
            }
            None => false,
        }
    }
}

impl Iterator for Partitions<'_> {
    type Item = Result<Coloring>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n = self.g.n();
        if n == 0 {
            self.done = true;
            return (self.k == 0).then(|| Ok(Coloring::new(vec![])));
        }
        loop {
            self.tick = self.tick.wrapping_add(1);
            if self.tick & 0xfff == 0 {
                if let Err(e) = self.budget.check("partition-enumeration") {
                    self.done = true;
                    return Some(Err(e));
                }
            }
            let pos = self.assign.len();
            if pos == n {
                let emit = (self.used == self.k).then(|| Coloring {
                    classes: self.classes.clone(),
                });
                if !self.backtrack() {
                    self.done = true;
                }
                if let Some(col) = emit {
                    return Some(Ok(col));
                }
                continue;
            }
            // remaining vertices must be able to open the missing classes
            let feasible = self.used + (n - pos) >= self.k;
            // colors 0..used reuse an open class; color == used opens the next
            let limit = if feasible {
                (self.used + 1).min(self.k)
            } else {
                0
            };
            let mut advanced = false;
            let start = self.next_try[pos];
            for c in start..limit {
                if self.g.neighbors(pos).intersects(&self.classes[c]) {
                    continue;
                }
                self.next_try[pos] = c + 1;
                self.assign.push(c);
                if self.classes[c].is_empty() {
                    self.used += 1;
                }
                self.classes[c].insert(pos);
                self.next_try.push(0);
                advanced = true;
                break;
            }
            if !advanced && !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}
