//! Simple undirected graphs on vertex set `0..n`, adjacency stored as
//! per-vertex bitsets.
//!
//! Graphs are immutable after construction; every operation returns a new
//! graph. The hard vertex cap keeps everything inside the exact, desk-scale
//! regime the rest of the crate assumes.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Hard cap on the vertex count of any graph this crate will build.
pub const MAX_VERTICES: usize = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                requested: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Attaches per-vertex labels (generators use these to record provenance).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::LabelLength {
                got: labels.len(),
                expected: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Checks the representation invariants (symmetric, irreflexive adjacency).
    pub fn validate(&self) -> Result<()> {
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        if let Some(l) = &self.labels {
            if l.len() != self.n {
                return Err(Error::LabelLength {
                    got: l.len(),
                    expected: self.n,
                });
            }
        }
        Ok(())
    }

    // ----- elementary parameters -----

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn min_degree_fraction(&self) -> Result<Rational> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(self.min_degree() as i64, self.n as i64))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Length of the shortest cycle; `None` when acyclic.
    ///
    /// One BFS per root; a non-tree edge seen at levels `a`, `b` closes a
    /// walk of length `a + b + 1` which bounds the girth from above, and the
    /// bound is attained for roots on a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for y in self.adj[x].iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Length of the shortest odd cycle; `None` when bipartite.
    ///
    /// BFS on the bipartite double cover: the distance from `(v, even)` to
    /// `(v, odd)` is the shortest odd closed walk through `v`, and a
    /// shortest odd closed walk is a cycle.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; 2 * self.n];
        let mut queue = Vec::with_capacity(2 * self.n);
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[2 * root] = 0;
            queue.clear();
            queue.push(2 * root);
            let mut head = 0;
            while head < queue.len() {
                let node = queue[head];
                head += 1;
                let (x, parity) = (node / 2, node % 2);
                if dist[node] >= best {
                    break;
                }
                for y in self.adj[x].iter() {
                    let next = 2 * y + (1 - parity);
                    if dist[next] == usize::MAX {
                        dist[next] = dist[node] + 1;
                        queue.push(next);
                    }
                }
            }
            if dist[2 * root + 1] != usize::MAX {
                best = best.min(dist[2 * root + 1]);
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn is_acyclic(&self) -> bool {
        // A simple graph is a forest iff m = n - c.
        let c = self.connected_components().len();
        self.edge_count() == self.n - c
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(x) = stack.pop() {
                for y in self.adj[x].iter() {
                    if !seen.contains(y) {
                        seen.insert(y);
                        comp.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Proper 2-coloring `(even side, odd side)` if one exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.clear();
            queue.push(start);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for y in self.adj[x].iter() {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        let mut a = VertexSet::new(self.n);
        let mut b = VertexSet::new(self.n);
        for v in 0..self.n {
            if color[v] == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Trees of an acyclic graph with their unique bipartitions; `None` when
    /// the graph contains a cycle. Isolated vertices become one-vertex trees
    /// with an empty second side.
    pub fn forest_decomposition(&self) -> Option<ForestDecomposition> {
        if !self.is_acyclic() {
            return None;
        }
        let trees = self
            .connected_components()
            .into_iter()
            .map(|comp| {
                let root = comp.first().expect("nonempty component");
                let mut side_a = VertexSet::new(self.n);
                let mut side_b = VertexSet::new(self.n);
                let mut edges = Vec::new();
                let mut stack = vec![(root, 0u8)];
                let mut seen = VertexSet::singleton(self.n, root);
                side_a.insert(root);
                while let Some((x, side)) = stack.pop() {
                    for y in self.adj[x].iter() {
                        if y > x {
                            edges.push((x, y));
                        }
                        if !seen.contains(y) {
                            seen.insert(y);
                            if side == 0 {
                                side_b.insert(y);
                            } else {
                                side_a.insert(y);
                            }
                            stack.push((y, 1 - side));
                        }
                    }
                }
                edges.sort_unstable();
                TreeComponent {
                    vertices: comp,
                    side_a,
                    side_b,
                    edges,
                }
            })
            .collect();
        Some(ForestDecomposition { trees })
    }

    /// Minimum `C` such that the graph is `C`-degenerate, plus a witnessing
    /// ordering: each vertex has at most `C` neighbors earlier in the order.
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let mut deg = self.degrees();
        let mut removed = VertexSet::new(self.n);
        let mut peel_order = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed.contains(v))
                .min_by_key(|&v| (deg[v], v))
                .expect("vertex remains");
            degeneracy = degeneracy.max(deg[v]);
            removed.insert(v);
            peel_order.push(v);
            for u in self.adj[v].iter() {
                if !removed.contains(u) {
                    deg[u] -= 1;
                }
            }
        }
        peel_order.reverse();
        (degeneracy, peel_order)
    }

    // ----- composition operations -----

    /// Replaces vertex `v` by an independent set of `sizes[v]` vertices and
    /// each edge by a complete bipartite graph. Size 0 deletes the vertex.
    /// Labels record the origin vertex.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "blow_up needs {} sizes, got {}",
                self.n,
                sizes.len()
            )));
        }
        let total: usize = sizes.iter().sum();
        let mut start = vec![0usize; self.n];
        let mut acc = 0;
        for v in 0..self.n {
            start[v] = acc;
            acc += sizes[v];
        }
        let mut g = Graph::empty(total)?;
        for (u, v) in self.edges() {
            for i in 0..sizes[u] {
                for j in 0..sizes[v] {
                    let a = start[u] + i;
                    let b = start[v] + j;
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
        let mut labels = Vec::with_capacity(total);
        for v in 0..self.n {
            let base = match self.label(v) {
                Some(l) => l.to_string(),
                None => format!("{v}"),
            };
            for _ in 0..sizes[v] {
                labels.push(base.clone());
            }
        }
        g.with_labels(labels)
    }

    /// Disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let total = self.n + other.n;
        let mut g = Graph::empty(total)?;
        for (u, v) in self.edges() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        for (u, v) in other.edges() {
            g.adj[self.n + u].insert(self.n + v);
            g.adj[self.n + v].insert(self.n + u);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.adj[u].insert(self.n + v);
                g.adj[self.n + v].insert(u);
            }
        }
        Ok(g)
    }

    /// Parts independent, all cross pairs adjacent.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
        if sizes.is_empty() {
            return Err(Error::InvalidParameter(
                "complete_multipartite needs at least one part".into(),
            ));
        }
        let total: usize = sizes.iter().sum();
        let mut g = Graph::empty(total)?;
        let mut part = Vec::with_capacity(total);
        for (i, &s) in sizes.iter().enumerate() {
            for _ in 0..s {
                part.push(i);
            }
        }
        for u in 0..total {
            for v in u + 1..total {
                if part[u] != part[v] {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `keep`; second value maps new indices back to the
    /// originals (ascending order of the kept vertices).
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(old.len()).expect("induced subgraph under cap");
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].iter() {
                if w > v && keep.contains(w) {
                    g.adj[i].insert(pos[w]);
                    g.adj[pos[w]].insert(i);
                }
            }
        }
        if let Some(labels) = &self.labels {
            let kept: Vec<String> = old.iter().map(|&v| labels[v].clone()).collect();
            g = g.with_labels(kept).expect("label length matches");
        }
        (g, old)
    }

    pub fn remove_vertices(&self, drop: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced(&drop.complement())
    }

    // ----- standard small families -----

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Graph::empty(0);
        }
        Graph::complete_multipartite(&vec![1; n])
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        Graph::complete_multipartite(&[a, b])
    }

    /// Star with one center and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// One tree of a forest with its unique 2-coloring (up to swap).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TreeComponent {
    pub vertices: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ForestDecomposition {
    pub trees: Vec<TreeComponent>,
}

impl ForestDecomposition {
    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(|t| t.vertices.len()).sum()
    }

    pub fn all_vertices(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for t in &self.trees {
            s.union_with(&t.vertices);
        }
        s
    }
}

/// Named graphs used across the test corpus.
pub mod named {
    use super::*;

    /// Hamiltonian cycle on `n` vertices plus the LCF chords. The caller is
    /// expected to know the pattern describes a valid cubic graph.
    pub fn lcf(n: usize, pattern: &[i64], repeats: usize) -> Result<Graph> {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        let mut i = 0usize;
        for _ in 0..repeats {
            for &jump in pattern {
                let target = ((i as i64 + jump).rem_euclid(n as i64)) as usize;
                let e = (i.min(target), i.max(target));
                if !edges.contains(&e) {
                    edges.push(e);
                }
                i += 1;
            }
        }
        Graph::from_edges(n, edges)
    }

    /// Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, edges).expect("petersen")
    }

    /// Dodecahedral graph (20 vertices, cubic, girth 5).
    pub fn dodecahedron() -> Graph {
        lcf(20, &[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2).expect("dodecahedron")
    }

    /// Icosahedral graph (12 vertices, 5-regular): two apexes and two
    /// pentagonal rings.
    pub fn icosahedron() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((0, 1 + i));
            edges.push((1 + i, 1 + (i + 1) % 5));
            edges.push((6 + i, 6 + (i + 1) % 5));
            edges.push((11, 6 + i));
            // ring-to-ring: vertex 1+i sits over the gap (6+i, 6+(i+4)%5)
            edges.push((1 + i, 6 + i));
            edges.push((1 + i, 6 + (i + 4) % 5));
        }
        Graph::from_edges(12, edges).expect("icosahedron")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexRange { v: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(Graph::empty(MAX_VERTICES).is_ok());
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn min_degree_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.min_degree(), 3);
        assert_eq!(k4.min_degree_fraction().unwrap(), Rational::new(3, 4));

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.min_degree(), 2);
        assert_eq!(c5.min_degree_fraction().unwrap(), Rational::new(2, 5));

        let star = Graph::star(3).unwrap();
        assert_eq!(star.min_degree(), 1);
        assert_eq!(star.min_degree_fraction().unwrap(), Rational::new(1, 4));

        assert!(Graph::empty(0).unwrap().min_degree_fraction().is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::cycle(5).unwrap().girth(), Some(5));
        assert_eq!(Graph::cycle(5).unwrap().odd_girth(), Some(5));
        assert_eq!(Graph::path(6).unwrap().girth(), None);
        assert_eq!(Graph::path(6).unwrap().odd_girth(), None);
        assert_eq!(Graph::cycle(6).unwrap().girth(), Some(6));
        assert_eq!(Graph::cycle(6).unwrap().odd_girth(), None);
        assert_eq!(named::petersen().girth(), Some(5));
        assert_eq!(Graph::complete(4).unwrap().girth(), Some(3));
    }

    #[test]
    fn forest_decomposition_examples() {
        let p4 = Graph::path(4).unwrap();
        let f = p4.forest_decomposition().unwrap();
        assert_eq!(f.trees.len(), 1);
        let t = &f.trees[0];
        assert_eq!(t.side_a.len(), 2);
        assert_eq!(t.side_b.len(), 2);

        assert!(Graph::cycle(4).unwrap().forest_decomposition().is_none());

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let f = two_edges.forest_decomposition().unwrap();
        assert_eq!(f.trees.len(), 2);
        for t in &f.trees {
            assert_eq!(t.side_a.len(), 1);
            assert_eq!(t.side_b.len(), 1);
        }

        // isolated vertex: one-vertex tree, empty second side
        let lone = Graph::empty(1).unwrap();
        let f = lone.forest_decomposition().unwrap();
        assert_eq!(f.trees.len(), 1);
        assert_eq!(f.trees[0].side_a.len(), 1);
        assert!(f.trees[0].side_b.is_empty());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(Graph::path(5).unwrap().degeneracy().0, 1);
        assert_eq!(Graph::star(4).unwrap().degeneracy().0, 1);
        assert_eq!(Graph::complete(5).unwrap().degeneracy().0, 4);
        assert_eq!(Graph::cycle(4).unwrap().degeneracy().0, 2);
    }

    #[test]
    fn degeneracy_ordering_witnesses() {
        for g in [
            named::petersen(),
            named::icosahedron(),
            Graph::cycle(7).unwrap(),
        ] {
            let (d, order) = g.degeneracy();
            let mut earlier = VertexSet::new(g.n());
            for &v in &order {
                assert!(g.neighbors(v).intersection_count(&earlier) <= d);
                earlier.insert(v);
            }
        }
    }

    #[test]
    fn blow_up_examples() {
        let k2 = Graph::complete(2).unwrap();
        let k33 = k2.blow_up(&[3, 3]).unwrap();
        assert_eq!(k33.n(), 6);
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.is_bipartite());

        // K_s(t) agrees with the complete multipartite construction
        let ks = Graph::complete(3).unwrap().blow_up(&[2, 2, 2]).unwrap();
        let km = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(ks.edges(), km.edges());

        // all sizes 1 leaves the graph unchanged
        let g = named::petersen();
        let same = g.blow_up(&[1; 10]).unwrap();
        assert_eq!(g.edges(), same.edges());

        // size 0 deletes
        let gone = k2.blow_up(&[0, 2]).unwrap();
        assert_eq!(gone.n(), 2);
        assert_eq!(gone.edge_count(), 0);

        // labels record the origin vertex
        assert_eq!(k33.label(0), Some("0"));
        assert_eq!(k33.label(5), Some("1"));
    }

    #[test]
    fn join_examples() {
        let w5 = Graph::complete(1)
            .unwrap()
            .join(&Graph::cycle(5).unwrap())
            .unwrap();
        assert_eq!(w5.n(), 6);
        assert_eq!(w5.edge_count(), 10);

        let k22 = Graph::empty(2)
            .unwrap()
            .join(&Graph::empty(2).unwrap())
            .unwrap();
        assert_eq!(
            k22.edges(),
            Graph::complete_bipartite(2, 2).unwrap().edges()
        );

        let g = named::petersen();
        let h = Graph::cycle(4).unwrap();
        let j = g.join(&h).unwrap();
        assert_eq!(j.n(), g.n() + h.n());
        assert_eq!(
            j.edge_count(),
            g.edge_count() + h.edge_count() + g.n() * h.n()
        );
    }

    #[test]
    fn complete_multipartite_examples() {
        let k3 = Graph::complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(k3.edges(), Graph::complete(3).unwrap().edges());

        let octa = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(octa.n(), 6);
        assert_eq!(octa.edge_count(), 12);

        let e = Graph::complete_multipartite(&[5]).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(e.n(), 5);
    }

    #[test]
    fn induced_subgraph_keeps_structure() {
        let g = named::petersen();
        let keep = VertexSet::from_vertices(10, [0, 1, 2, 5, 7]);
        let (sub, back) = g.induced(&keep);
        assert_eq!(sub.n(), 5);
        assert_eq!(back, vec![0, 1, 2, 5, 7]);
        for u in 0..sub.n() {
            for v in u + 1..sub.n() {
                assert_eq!(sub.has_edge(u, v), g.has_edge(back[u], back[v]));
            }
        }
    }

    #[test]
    fn named_graphs_have_expected_parameters() {
        let p = named::petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));

        let d = named::dodecahedron();
        assert_eq!((d.n(), d.edge_count()), (20, 30));
        assert!(d.degrees().iter().all(|&deg| deg == 3));
        assert_eq!(d.girth(), Some(5));
        assert!(d.is_connected());

        let i = named::icosahedron();
        assert_eq!((i.n(), i.edge_count()), (12, 30));
        assert!(i.degrees().iter().all(|&deg| deg == 5));
        assert_eq!(i.girth(), Some(3));
        assert!(i.is_connected());
    }

    #[test]
    fn bipartition_and_independence() {
        let c6 = Graph::cycle(6).unwrap();
        let (a, b) = c6.bipartition().unwrap();
        assert!(c6.is_independent_set(&a));
        assert!(c6.is_independent_set(&b));
        assert!(Graph::cycle(5).unwrap().bipartition().is_none());
    }
}
