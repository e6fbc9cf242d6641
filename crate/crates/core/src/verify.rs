//! Independent checkers: subgraph containment, forest embedding, graph
//! isomorphism, odd-cycle oracles, and a from-scratch validator for
//! threshold reports.
//!
//! Subgraph semantics are non-induced throughout: an embedding must send
//! pattern edges to host edges and nothing more. The witness checker is
//! deliberately implemented against the bare definitions and shares no
//! search code with `classify`.

use crate::bitset::VertexSet;
use crate::budget::{Budget, Ticker};
use crate::classify::{ThresholdClass, ThresholdReport};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Injective vertex map from pattern to host carrying every pattern edge
/// to a host edge.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn check(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut used = VertexSet::new(host.n());
        for &img in &self.map {
            if img >= host.n() || used.contains(img) {
                return false;
            }
            used.insert(img);
        }
        pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Pattern-vertex order: first the highest degree, then always the vertex
/// with the most already-placed neighbors (ties by degree, then index).
fn matching_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::new(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    pattern.neighbors(v).intersection_count(&placed),
                    pattern.degree(v),
                    usize::MAX - v,
                )
            })
            .expect("vertex left");
        placed.insert(v);
        order.push(v);
    }
    order
}

/// Descending neighbor-degree sequence, for the candidate prefilter:
/// a host vertex can host a pattern vertex only if its sequence dominates.
fn neighbor_degree_signature(g: &Graph, v: usize) -> Vec<usize> {
    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
    sig.sort_unstable_by(|a, b| b.cmp(a));
    sig
}

fn dominates(host_sig: &[usize], pat_sig: &[usize]) -> bool {
    pat_sig.len() <= host_sig.len() && pat_sig.iter().zip(host_sig).all(|(p, h)| p <= h)
}

/// Exact non-induced subgraph search with degree and neighbor-signature
/// pruning. First embedding in canonical branch order, or `None`.
pub fn contains_subgraph(
    host: &Graph,
    pattern: &Graph,
    budget: &Budget,
) -> Result<Option<Embedding>> {
    if pattern.n() == 0 {
        return Ok(Some(Embedding { map: vec![] }));
    }
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let order = matching_order(pattern);
    let host_sigs: Vec<Vec<usize>> = (0..host.n())
        .map(|v| neighbor_degree_signature(host, v))
        .collect();
    // static candidate sets per pattern vertex
    let mut candidates: Vec<VertexSet> = Vec::with_capacity(pattern.n());
    for p in 0..pattern.n() {
        let sig = neighbor_degree_signature(pattern, p);
        let mut set = VertexSet::new(host.n());
        for v in 0..host.n() {
            if host.degree(v) >= pattern.degree(p) && dominates(&host_sigs[v], &sig) {
                set.insert(v);
            }
        }
        if set.is_empty() {
            return Ok(None);
        }
        candidates.push(set);
    }

    struct Search<'a> {
        host: &'a Graph,
        pattern: &'a Graph,
        order: &'a [usize],
        candidates: &'a [VertexSet],
        map: Vec<usize>,
        used: VertexSet,
        ticker: Ticker<'a>,
    }

    impl Search<'_> {
        fn solve(&mut self, depth: usize) -> Result<bool> {
            self.ticker.tick()?;
            if depth == self.order.len() {
                return Ok(true);
            }
            let p = self.order[depth];
            let mut cands = self.candidates[p].difference(&self.used);
            for q in self.pattern.neighbors(p).iter() {
                if self.map[q] != usize::MAX {
                    cands.intersect_with(self.host.neighbors(self.map[q]));
                }
            }
            for v in cands.iter() {
                self.map[p] = v;
                self.used.insert(v);
                if self.solve(depth + 1)? {
                    return Ok(true);
                }
                self.used.remove(v);
                self.map[p] = usize::MAX;
            }
            Ok(false)
        }
    }

    let mut search = Search {
        host,
        pattern,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; pattern.n()],
        used: VertexSet::new(host.n()),
        ticker: Ticker::new(budget, "subgraph-search"),
    };
    if search.solve(0)? {
        Ok(Some(Embedding { map: search.map }))
    } else {
        Ok(None)
    }
}

/// Constructive forest embedding. When `e(host) >= |f| * v(host)` the
/// embedding is found by peeling the host to its min-degree >= |f| core and
/// inserting the forest leaf-upward; that construction cannot fail. Below
/// the guarantee the plain backtracking search runs and may legitimately
/// return `None`.
pub fn embed_forest(host: &Graph, forest: &Graph, budget: &Budget) -> Result<Option<Embedding>> {
    if !forest.is_acyclic() {
        return Err(Error::InvalidParameter(
            "embed_forest needs an acyclic pattern".into(),
        ));
    }
    let fsize = forest.n();
    if fsize == 0 {
        return Ok(Some(Embedding { map: vec![] }));
    }
    if host.n() == 0 || host.edge_count() < fsize * host.n() {
        return contains_subgraph(host, forest, budget);
    }
    // peel to the core of minimum degree >= fsize
    let mut core = VertexSet::full(host.n());
    loop {
        let victim = core
            .iter()
            .find(|&v| host.neighbors(v).intersection_count(&core) < fsize);
        match victim {
            Some(v) => core.remove(v),
            None => break,
        }
    }
    debug_assert!(
        core.len() > fsize,
        "average degree >= 2|f| guarantees a core larger than |f|"
    );
    // BFS order per tree: each non-root has its parent already placed
    let mut map = vec![usize::MAX; fsize];
    let mut used = VertexSet::new(host.n());
    for comp in forest.connected_components() {
        let root = comp.first().expect("nonempty");
        let mut queue = vec![(root, usize::MAX)];
        let mut head = 0;
        let mut seen = VertexSet::singleton(fsize, root);
        while head < queue.len() {
            let (p, parent) = queue[head];
            head += 1;
            let image = if parent == usize::MAX {
                core.difference(&used).first()
            } else {
                host.neighbors(map[parent])
                    .intersection(&core)
                    .difference(&used)
                    .first()
            };
            let image = image.expect("core degree exceeds placed vertices");
            map[p] = image;
            used.insert(image);
            for q in forest.neighbors(p).iter() {
                if !seen.contains(q) {
                    seen.insert(q);
                    queue.push((q, p));
                }
            }
        }
    }
    let emb = Embedding { map };
    debug_assert!(emb.check(host, forest));
    Ok(Some(emb))
}

/// Exact triangle count via bitset intersections.
pub fn scan_triangles(g: &Graph) -> u64 {
    let mut count = 0u64;
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        count += common.iter().filter(|&w| w > v).count() as u64;
    }
    count
}

/// Common neighborhood of every vertex in `set`; all of `V` for the empty
/// set.
pub fn common_neighbors(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut acc = VertexSet::full(g.n());
    for v in set.iter() {
        acc.intersect_with(g.neighbors(v));
    }
    acc
}

/// All odd cycles of length <= `max_len` that meet `s` in at most one
/// vertex. Exhaustive DFS enumeration, deduplicated by anchoring each cycle
/// at its minimum vertex and fixing the traversal direction.
pub fn odd_cycle_oracle(
    h: &Graph,
    s: &VertexSet,
    max_len: usize,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let n = h.n();
    let max_len = max_len.min(n);
    let mut violations = Vec::new();
    if max_len < 3 {
        return Ok(violations);
    }
    let mut ticker = Ticker::new(budget, "odd-cycle-oracle");
    let mut path: Vec<usize> = Vec::with_capacity(max_len);
    let mut on_path = VertexSet::new(n);

    fn dfs(
        h: &Graph,
        s: &VertexSet,
        base: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut VertexSet,
        out: &mut Vec<Vec<usize>>,
        ticker: &mut Ticker<'_>,
    ) -> Result<()> {
        ticker.tick()?;
        let last = *path.last().expect("nonempty path");
        // close the cycle
        if path.len() >= 3 && path.len() % 2 == 1 && h.has_edge(last, base) && path[1] < last {
            let hits = path.iter().filter(|&&v| s.contains(v)).count();
            if hits <= 1 {
                out.push(path.clone());
            }
        }
        if path.len() == max_len {
            return Ok(());
        }
        for next in h.neighbors(last).iter() {
            if next > base && !on_path.contains(next) {
                path.push(next);
                on_path.insert(next);
                dfs(h, s, base, max_len, path, on_path, out, ticker)?;
                on_path.remove(next);
                path.pop();
            }
        }
        Ok(())
    }

    for base in 0..n {
        path.clear();
        path.push(base);
        on_path.clear();
        on_path.insert(base);
        dfs(
            h,
            s,
            base,
            max_len,
            &mut path,
            &mut on_path,
            &mut violations,
            &mut ticker,
        )?;
    }
    Ok(violations)
}

// ---------------------------------------------------------------------------
// isomorphism
// ---------------------------------------------------------------------------

/// Cheap isomorphism-invariant fingerprint: order, size, degree multiset,
/// and the multiset of per-vertex triangle counts.
pub fn invariant_key(g: &Graph) -> Vec<u64> {
    let mut key = vec![g.n() as u64, g.edge_count() as u64];
    let mut degs: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    degs.sort_unstable();
    let mut tris: Vec<u64> = (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            nb.iter()
                .map(|u| g.neighbors(u).intersection_count(nb) as u64)
                .sum::<u64>()
                / 2
        })
        .collect();
    tris.sort_unstable();
    key.extend(degs);
    key.extend(tris);
    key
}

/// Exact isomorphism test by backtracking over degree-compatible maps.
pub fn isomorphic(a: &Graph, b: &Graph, budget: &Budget) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if invariant_key(a) != invariant_key(b) {
        return Ok(false);
    }
    let n = a.n();
    if n == 0 {
        return Ok(true);
    }
    let order = matching_order(a);
    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::new(n);
    let mut ticker = Ticker::new(budget, "isomorphism");

    fn solve(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut VertexSet,
        ticker: &mut Ticker<'_>,
    ) -> Result<bool> {
        ticker.tick()?;
        if depth == order.len() {
            return Ok(true);
        }
        let p = order[depth];
        'cand: for v in 0..b.n() {
            if used.contains(v) || b.degree(v) != a.degree(p) {
                continue;
            }
            for q in 0..a.n() {
                if map[q] != usize::MAX && a.has_edge(p, q) != b.has_edge(v, map[q]) {
                    continue 'cand;
                }
            }
            map[p] = v;
            used.insert(v);
            if solve(a, b, order, depth + 1, map, used, ticker)? {
                return Ok(true);
            }
            used.remove(v);
            map[p] = usize::MAX;
        }
        Ok(false)
    }

    solve(a, b, &order, 0, &mut map, &mut used, &mut ticker)
}

// ---------------------------------------------------------------------------
// witness checking
// ---------------------------------------------------------------------------

/// Result of re-validating a threshold report. Empty violations = pass.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CheckOutcome {
    pub violations: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Plain sequential k-colorability: lexicographic vertex order, lowest-new-
/// color symmetry break, no heuristics. Kept deliberately separate from the
/// `chromatic` module's engine so the checker does not share its code path.
fn plain_k_colorable(g: &Graph, k: usize, budget: &Budget) -> Result<bool> {
    fn rec(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        assign: &mut Vec<usize>,
        ticker: &mut Ticker<'_>,
    ) -> Result<bool> {
        ticker.tick()?;
        if v == g.n() {
            return Ok(true);
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if g.neighbors(v).iter().any(|u| u < v && assign[u] == c) {
                continue;
            }
            assign[v] = c;
            if rec(g, k, v + 1, used.max(c + 1), assign, ticker)? {
                return Ok(true);
            }
        }
        assign[v] = usize::MAX;
        Ok(false)
    }
    let mut ticker = Ticker::new(budget, "plain-coloring");
    let mut assign = vec![usize::MAX; g.n()];
    rec(g, k, 0, 0, &mut assign, &mut ticker)
}

fn plain_chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=g.n() {
        if plain_k_colorable(g, k, budget)? {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

/// Re-validates every report invariant from scratch: chromatic number,
/// class/threshold arithmetic, witness shape, independence, disjointness,
/// acyclicity, bipartitions, the tree-class condition, and the chromatic
/// number of the remainder.
pub fn check_threshold_witness(
    h: &Graph,
    report: &ThresholdReport,
    budget: &Budget,
) -> Result<CheckOutcome> {
    use crate::classify::{lambda, pi, theta};
    let mut violations: Vec<String> = Vec::new();
    let mut fail = |v: String| violations.push(v);

    let chi = plain_chromatic_number(h, budget)?;
    if chi != report.chi {
        fail(format!(
            "chi-mismatch: recomputed {chi}, report says {}",
            report.chi
        ));
    }
    let r = report.chi;

    // class tag vs chi, and threshold arithmetic
    match report.class {
        ThresholdClass::Bipartite => {
            if chi > 2 {
                fail("class-bipartite-wrong: chi > 2".into());
            }
            if !report.threshold.is_zero() {
                fail("threshold-arithmetic: bipartite threshold must be 0".into());
            }
        }
        ThresholdClass::Theta => {
            if chi <= 2 {
                fail("class-tag-wrong: THETA with chi <= 2".into());
            }
            if report.threshold != theta(r) {
                fail(format!("threshold-arithmetic: THETA expects {}", theta(r)));
            }
            if report.near_acyclic_witness.is_none() {
                fail("theta-witness-missing: no near-acyclic witness".into());
            }
        }
        ThresholdClass::Lambda => {
            if chi <= 2 {
                fail("class-tag-wrong: LAMBDA with chi <= 2".into());
            }
            if report.threshold != lambda(r) {
                fail(format!(
                    "threshold-arithmetic: LAMBDA expects {}",
                    lambda(r)
                ));
            }
            if report.forest_witness.is_none() {
                fail("lambda-forest-missing: no forest witness".into());
            }
            if report.near_acyclic_witness.is_some() {
                fail("lambda-near-witness-present".into());
            }
        }
        ThresholdClass::Pi => {
            if chi <= 2 {
                fail("class-tag-wrong: PI with chi <= 2".into());
            }
            if report.threshold != pi(r) {
                fail(format!("threshold-arithmetic: PI expects {}", pi(r)));
            }
            if report.forest_witness.is_some() {
                fail("pi-forest-witness-present".into());
            }
            if report.near_acyclic_witness.is_some() {
                fail("pi-near-witness-present".into());
            }
        }
    }
    if chi <= 2 && report.class != ThresholdClass::Bipartite {
        fail("class-bipartite-wrong: chi <= 2 must be BIPARTITE".into());
    }

    if let Some(fw) = &report.forest_witness {
        if let Err(e) = fw.coloring.check(h) {
            fail(format!("forest-coloring-invalid: {e}"));
        } else if fw.coloring.num_classes() != r {
            fail(format!(
                "forest-coloring-classes: {} classes, expected {r}",
                fw.coloring.num_classes()
            ));
        }
        let (i, j) = fw.pair;
        if i >= fw.coloring.num_classes() || j >= fw.coloring.num_classes() || i == j {
            fail("forest-pair-range: bad class pair".into());
        } else {
            let union = fw.coloring.classes()[i].union(&fw.coloring.classes()[j]);
            let (member, _) = h.induced(&union);
            if !member.is_acyclic() {
                fail("forest-pair-acyclic: class pair induces a cycle".into());
            }
        }
    }

    if let Some(nw) = &report.near_acyclic_witness {
        if nw.removed_sets.len() + 3 != r {
            fail(format!(
                "near-removed-count: {} sets, expected {}",
                nw.removed_sets.len(),
                r.saturating_sub(3)
            ));
        }
        let mut all_sets: Vec<(&str, &VertexSet)> =
            nw.removed_sets.iter().map(|s| ("removed set", s)).collect();
        all_sets.push(("s_set", &nw.s_set));
        for (name, set) in &all_sets {
            if !h.is_independent_set(set) {
                fail(format!("near-sets-independent: {name} is not independent"));
            }
        }
        let mut union_all = VertexSet::new(h.n());
        let mut overlap = false;
        let forest_vertices = nw.forest.all_vertices(h.n());
        for (_, set) in &all_sets {
            if union_all.intersects(set) {
                overlap = true;
            }
            union_all.union_with(set);
        }
        if union_all.intersects(&forest_vertices) {
            overlap = true;
        }
        if overlap {
            fail("near-sets-disjoint: witness parts overlap".into());
        }
        union_all.union_with(&forest_vertices);
        if union_all.len() != h.n() {
            fail("near-forest-cover: witness parts do not cover V(H)".into());
        }

        // the recorded forest must be exactly the induced remainder
        let mut removed_union = VertexSet::new(h.n());
        for s in &nw.removed_sets {
            removed_union.union_with(s);
        }
        let remainder = removed_union.union(&nw.s_set).complement();
        if remainder != forest_vertices {
            fail("near-forest-cover: forest vertices mismatch remainder".into());
        }

        let mut tree_edge_count = 0usize;
        for (ti, tree) in nw.forest.trees.iter().enumerate() {
            // sides partition the tree's vertex set
            if !tree.side_a.is_disjoint(&tree.side_b)
                || tree.side_a.union(&tree.side_b) != tree.vertices
            {
                fail(format!(
                    "near-forest-bipartition: tree {ti} sides malformed"
                ));
                continue;
            }
            if tree.edges.len() + 1 != tree.vertices.len() {
                fail(format!("near-forest-trees: tree {ti} edge count not |V|-1"));
            }
            for &(u, v) in &tree.edges {
                tree_edge_count += 1;
                if !h.has_edge(u, v) {
                    fail(format!("near-forest-edges: ({u},{v}) not an edge of H"));
                }
                let crosses = (tree.side_a.contains(u) && tree.side_b.contains(v))
                    || (tree.side_b.contains(u) && tree.side_a.contains(v));
                if !crosses {
                    fail(format!(
                        "near-forest-bipartition: edge ({u},{v}) inside one side"
                    ));
                }
            }
            // tree-class condition
            for s in nw.s_set.iter() {
                if h.neighbors(s).intersects(&tree.side_a)
                    && h.neighbors(s).intersects(&tree.side_b)
                {
                    fail(format!(
                        "near-tree-class: vertex {s} sees both sides of tree {ti}"
                    ));
                }
            }
        }
        // no extra edges hidden in the remainder
        let (induced_forest, _) = h.induced(&forest_vertices);
        if induced_forest.edge_count() != tree_edge_count {
            fail("near-forest-edges: induced remainder has extra edges".into());
        }
        if !induced_forest.is_acyclic() {
            fail("near-forest-acyclic: remainder contains a cycle".into());
        }

        // chi(H minus removed sets) must be exactly 3
        let (after_removal, _) = h.remove_vertices(&removed_union);
        if after_removal.is_bipartite() {
            fail("near-remainder-chi3: remainder is bipartite".into());
        } else if !plain_k_colorable(&after_removal, 3, budget)? {
            fail("near-remainder-chi3: remainder not 3-colorable".into());
        }
    }

    Ok(CheckOutcome { violations })
}
