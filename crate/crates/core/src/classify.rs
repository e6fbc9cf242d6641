//! The threshold decision procedure.
//!
//! For `chi(H) = r >= 3` the chromatic threshold of `H` is one of
//! `(r-3)/(r-2)`, `(2r-5)/(2r-3)`, `(r-2)/(r-1)`; bipartite graphs sit at 0.
//! Which value applies is decided by two structural tests: is `H`
//! r-near-acyclic (threshold theta), and failing that, does the
//! decomposition family of `H` contain a forest (lambda vs pi).
//! Every positive answer ships a witness that the `verify` module can
//! re-check from the definitions.

use crate::bitset::VertexSet;
use crate::budget::{Budget, Ticker};
use crate::chromatic::{self, Coloring};
use crate::error::{Error, Result};
use crate::graph::{ForestDecomposition, Graph, TreeComponent};
use crate::rational::Rational;
use std::collections::HashSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub enum ThresholdClass {
    #[serde(rename = "BIPARTITE")]
    Bipartite,
    #[serde(rename = "THETA")]
    Theta,
    #[serde(rename = "LAMBDA")]
    Lambda,
    #[serde(rename = "PI")]
    Pi,
}

impl ThresholdClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ThresholdClass::Bipartite => "BIPARTITE",
            ThresholdClass::Theta => "THETA",
            ThresholdClass::Lambda => "LAMBDA",
            ThresholdClass::Pi => "PI",
        }
    }
}

/// `(r-3)/(r-2)`
pub fn theta(r: usize) -> Rational {
    Rational::new(r as i64 - 3, r as i64 - 2)
}

/// `(2r-5)/(2r-3)`
pub fn lambda(r: usize) -> Rational {
    Rational::new(2 * r as i64 - 5, 2 * r as i64 - 3)
}

/// `(r-2)/(r-1)`, the Turan density
pub fn pi(r: usize) -> Rational {
    Rational::new(r as i64 - 2, r as i64 - 1)
}

/// An r-coloring of H together with a class pair whose union induces a
/// forest: a constructive proof that the decomposition family contains a
/// forest.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ForestWitness {
    pub coloring: Coloring,
    pub pair: (usize, usize),
}

/// Witness that H is r-near-acyclic: `removed_sets` are r-3 independent
/// sets, and H minus them splits into the independent set `s_set` and the
/// recorded forest, with no S-vertex adjacent to both sides of any tree.
#[derive(Clone, Debug, serde::Serialize)]
pub struct NearAcyclicWitness {
    pub removed_sets: Vec<VertexSet>,
    pub s_set: VertexSet,
    pub forest: ForestDecomposition,
}

#[derive(Clone, Debug)]
pub struct ThresholdReport {
    pub chi: usize,
    pub class: ThresholdClass,
    pub threshold: Rational,
    pub forest_witness: Option<ForestWitness>,
    pub near_acyclic_witness: Option<NearAcyclicWitness>,
}

pub const REPORT_SCHEMA: &str = "ctl/1";

impl ThresholdReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": REPORT_SCHEMA,
            "chi": self.chi,
            "class": self.class.as_str(),
            "threshold": self.threshold,
            "witnesses": {
                "forest": self.forest_witness,
                "near_acyclic": self.near_acyclic_witness,
            },
        })
    }

    /// Parses the JSON emitted by `to_json`; `n` is the vertex count of the
    /// graph the report describes.
    pub fn from_json(v: &serde_json::Value, n: usize) -> Result<ThresholdReport> {
        let bad = |what: &str| Error::InvalidParameter(format!("report JSON: {what}"));
        let chi = v["chi"].as_u64().ok_or_else(|| bad("missing chi"))? as usize;
        let class = match v["class"].as_str() {
            Some("BIPARTITE") => ThresholdClass::Bipartite,
            Some("THETA") => ThresholdClass::Theta,
            Some("LAMBDA") => ThresholdClass::Lambda,
            Some("PI") => ThresholdClass::Pi,
            _ => return Err(bad("unknown class")),
        };
        let threshold: Rational = serde_json::from_value(v["threshold"].clone())
            .map_err(|e| bad(&format!("threshold: {e}")))?;
        let w = &v["witnesses"];
        let forest_witness = match &w["forest"] {
            serde_json::Value::Null => None,
            fw => Some(ForestWitness {
                coloring: coloring_from_json(&fw["coloring"], n)?,
                pair: (
                    fw["pair"][0].as_u64().ok_or_else(|| bad("forest pair"))? as usize,
                    fw["pair"][1].as_u64().ok_or_else(|| bad("forest pair"))? as usize,
                ),
            }),
        };
        let near_acyclic_witness = match &w["near_acyclic"] {
            serde_json::Value::Null => None,
            nw => {
                let removed = nw["removed_sets"]
                    .as_array()
                    .ok_or_else(|| bad("removed_sets"))?
                    .iter()
                    .map(|s| vertex_set_from_json(s, n))
                    .collect::<Result<Vec<_>>>()?;
                Some(NearAcyclicWitness {
                    removed_sets: removed,
                    s_set: vertex_set_from_json(&nw["s_set"], n)?,
                    forest: forest_from_json(&nw["forest"], n)?,
                })
            }
        };
        Ok(ThresholdReport {
            chi,
            class,
            threshold,
            forest_witness,
            near_acyclic_witness,
        })
    }
}

fn vertex_set_from_json(v: &serde_json::Value, n: usize) -> Result<VertexSet> {
    let bad = || Error::InvalidParameter("report JSON: bad vertex list".into());
    let arr = v.as_array().ok_or_else(bad)?;
    let mut s = VertexSet::new(n);
    for x in arr {
        let idx = x.as_u64().ok_or_else(bad)? as usize;
        if idx >= n {
            return Err(Error::VertexRange { v: idx, n });
        }
        s.insert(idx);
    }
    Ok(s)
}

fn coloring_from_json(v: &serde_json::Value, n: usize) -> Result<Coloring> {
    let bad = || Error::InvalidParameter("report JSON: bad coloring".into());
    let arr = v.as_array().ok_or_else(bad)?;
    let classes = arr
        .iter()
        .map(|c| vertex_set_from_json(c, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(classes))
}

fn forest_from_json(v: &serde_json::Value, n: usize) -> Result<ForestDecomposition> {
    let bad = |what: &str| Error::InvalidParameter(format!("report JSON: {what}"));
    let arr = v["trees"].as_array().ok_or_else(|| bad("forest trees"))?;
    let mut trees = Vec::new();
    for t in arr {
        let mut edges = Vec::new();
        for e in t["edges"].as_array().ok_or_else(|| bad("tree edges"))? {
            let u = e[0].as_u64().ok_or_else(|| bad("tree edge"))? as usize;
            let w = e[1].as_u64().ok_or_else(|| bad("tree edge"))? as usize;
            edges.push((u, w));
        }
        trees.push(TreeComponent {
            vertices: vertex_set_from_json(&t["vertices"], n)?,
            side_a: vertex_set_from_json(&t["side_a"], n)?,
            side_b: vertex_set_from_json(&t["side_b"], n)?,
            edges,
        });
    }
    Ok(ForestDecomposition { trees })
}

/// Rewraps budget errors with the sub-test that was running.
fn with_stage<T>(r: Result<T>, label: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::Budget { stage } => Error::Budget {
            stage: format!("{label}/{stage}"),
        },
        other => other,
    })
}

// ---------------------------------------------------------------------------
// decomposition family
// ---------------------------------------------------------------------------

/// All bipartite graphs obtained by keeping two color classes of some
/// r-coloring of `h`, deduplicated up to isomorphism.
pub fn decomposition_family(h: &Graph, budget: &Budget) -> Result<Vec<Graph>> {
    let r = chromatic::chromatic_number(h, budget)?;
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "decomposition family needs chi >= 3, got {r}"
        )));
    }
    let mut members: Vec<Graph> = Vec::new();
    let mut buckets: std::collections::HashMap<Vec<u64>, Vec<usize>> =
        std::collections::HashMap::new();
    for coloring in chromatic::color_class_partitions(h, r, budget) {
        let coloring = coloring?;
        let classes = coloring.classes();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                budget.check("decomposition-family")?;
                let union = classes[i].union(&classes[j]);
                let (member, _) = h.induced(&union);
                let key = crate::verify::invariant_key(&member);
                let bucket = buckets.entry(key).or_default();
                let mut duplicate = false;
                for &idx in bucket.iter() {
                    if crate::verify::isomorphic(&members[idx], &member, budget)? {
                        duplicate = true;
                        break;
                    }
                }
                if !duplicate {
                    bucket.push(members.len());
                    members.push(member);
                }
            }
        }
    }
    Ok(members)
}

/// First r-coloring and class pair whose union induces a forest, if any.
pub fn has_forest_in_decomposition(h: &Graph, budget: &Budget) -> Result<Option<ForestWitness>> {
    let r = chromatic::chromatic_number(h, budget)?;
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "decomposition family needs chi >= 3, got {r}"
        )));
    }
    for coloring in chromatic::color_class_partitions(h, r, budget) {
        let coloring = coloring?;
        let classes = coloring.classes();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                budget.check("forest-in-decomposition")?;
                let union = classes[i].union(&classes[j]);
                let (member, _) = h.induced(&union);
                if member.is_acyclic() {
                    return Ok(Some(ForestWitness {
                        coloring,
                        pair: (i, j),
                    }));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// near-acyclicity
// ---------------------------------------------------------------------------

/// Whether the partition `(V - s, s)` satisfies the tree-class condition:
/// `s` independent, `h - s` a forest, and no vertex of `s` adjacent to both
/// color classes of one tree. `None` when the partition shape is wrong.
pub fn tree_class_holds(h: &Graph, s: &VertexSet) -> Option<bool> {
    if !h.is_independent_set(s) {
        return None;
    }
    let rest = s.complement();
    let (sub, back) = h.induced(&rest);
    let fd = sub.forest_decomposition()?;
    for tree in &fd.trees {
        let side_a = remap_set(&tree.side_a, &back, h.n());
        let side_b = remap_set(&tree.side_b, &back, h.n());
        for v in s.iter() {
            if h.neighbors(v).intersects(&side_a) && h.neighbors(v).intersects(&side_b) {
                return Some(false);
            }
        }
    }
    Some(true)
}

fn remap_set(s: &VertexSet, back: &[usize], n: usize) -> VertexSet {
    VertexSet::from_vertices(n, s.iter().map(|v| back[v]))
}

fn remap_forest(fd: &ForestDecomposition, back: &[usize], n: usize) -> ForestDecomposition {
    ForestDecomposition {
        trees: fd
            .trees
            .iter()
            .map(|t| TreeComponent {
                vertices: remap_set(&t.vertices, back, n),
                side_a: remap_set(&t.side_a, back, n),
                side_b: remap_set(&t.side_b, back, n),
                edges: t.edges.iter().map(|&(u, v)| (back[u], back[v])).collect(),
            })
            .collect(),
    }
}

/// Branching search for an independent set `s` with `g - s` a forest that
/// satisfies the tree-class condition. Vertices are decided in descending
/// degree order; the forest side is tracked with a parity DSU so cycles and
/// settled both-sides violations prune early.
struct NearSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    s_set: VertexSet,
    excluded: VertexSet,
    parent: Vec<usize>,
    parity: Vec<u8>,
    size: Vec<usize>,
    ticker: Ticker<'a>,
}

impl<'a> NearSearch<'a> {
    fn run(g: &'a Graph, budget: &'a Budget) -> Result<Option<(VertexSet, ForestDecomposition)>> {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
        let mut search = NearSearch {
            g,
            order,
            s_set: VertexSet::new(n),
            excluded: VertexSet::new(n),
            parent: (0..n).collect(),
            parity: vec![0; n],
            size: vec![1; n],
            ticker: Ticker::new(budget, "near-acyclic-search"),
        };
        search.solve(0)
    }

    /// Root and parity of `v` relative to it. No path compression: unions
    /// must be undoable.
    fn find(&self, mut v: usize) -> (usize, u8) {
        let mut p = 0u8;
        while self.parent[v] != v {
            p ^= self.parity[v];
            v = self.parent[v];
        }
        (v, p)
    }

    /// Merges the components of `a` and `b` requiring opposite sides.
    /// Returns the subordinated root for rollback; `None` on a cycle.
    fn union_opposite(&mut self, a: usize, b: usize) -> Option<usize> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return None;
        }
        let rel = pa ^ pb ^ 1;
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.parity[small] = rel;
        self.size[big] += self.size[small];
        Some(small)
    }

    fn rollback(&mut self, small: usize) {
        let big = self.parent[small];
        self.size[big] -= self.size[small];
        self.parent[small] = small;
        self.parity[small] = 0;
    }

    /// Rolls back in reverse order of union.
    fn rollback_all(&mut self, merged: &mut Vec<usize>) {
        while let Some(tok) = merged.pop() {
            self.rollback(tok);
        }
    }

    fn solve(&mut self, idx: usize) -> Result<Option<(VertexSet, ForestDecomposition)>> {
        self.ticker.tick()?;
        if idx == self.g.n() {
            return Ok(self.leaf());
        }
        let v = self.order[idx];

        // exclude v (forest side) first: witnesses tend to have large forests
        let nbrs: Vec<usize> = self.g.neighbors(v).intersection(&self.excluded).to_vec();
        let mut merged = Vec::with_capacity(nbrs.len());
        let mut acyclic = true;
        for &u in &nbrs {
            match self.union_opposite(v, u) {
                Some(tok) => merged.push(tok),
                None => {
                    acyclic = false;
                    break;
                }
            }
        }
        if acyclic {
            self.excluded.insert(v);
            let found = self.solve(idx + 1)?;
            self.excluded.remove(v);
            if found.is_some() {
                self.rollback_all(&mut merged);
                return Ok(found);
            }
        }
        self.rollback_all(&mut merged);

        // include v in S
        if !self.g.neighbors(v).intersects(&self.s_set) && !self.sees_both_sides(v) {
            self.s_set.insert(v);
            let found = self.solve(idx + 1)?;
            self.s_set.remove(v);
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Does `v` already see both parities of one excluded component?
    fn sees_both_sides(&self, v: usize) -> bool {
        let mut seen: Vec<(usize, u8)> = Vec::new();
        for u in self.g.neighbors(v).intersection(&self.excluded).iter() {
            let (root, p) = self.find(u);
            match seen.iter().find(|&&(r, _)| r == root) {
                Some(&(_, q)) if q != p => return true,
                Some(_) => {}
                None => seen.push((root, p)),
            }
        }
        false
    }

    fn leaf(&self) -> Option<(VertexSet, ForestDecomposition)> {
        let (sub, back) = self.g.induced(&self.excluded);
        let fd = sub.forest_decomposition()?;
        let fd = remap_forest(&fd, &back, self.g.n());
        for tree in &fd.trees {
            for v in self.s_set.iter() {
                if self.g.neighbors(v).intersects(&tree.side_a)
                    && self.g.neighbors(v).intersects(&tree.side_b)
                {
                    return None;
                }
            }
        }
        Some((self.s_set.clone(), fd))
    }
}

/// Near-acyclicity test (the r = 3 case): present iff `chi(h) = 3` and `h`
/// partitions into a forest and an independent set with every odd cycle
/// meeting the independent set at least twice.
pub fn is_near_acyclic(h: &Graph, budget: &Budget) -> Result<Option<NearAcyclicWitness>> {
    if h.n() == 0 || h.is_bipartite() {
        return Ok(None);
    }
    if chromatic::is_k_colorable(h, 3, budget)?.is_none() {
        return Ok(None);
    }
    Ok(
        NearSearch::run(h, budget)?.map(|(s_set, forest)| NearAcyclicWitness {
            removed_sets: vec![],
            s_set,
            forest,
        }),
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn r_near_acyclic_with_chi(
    h: &Graph,
    r: usize,
    budget: &Budget,
) -> Result<Option<NearAcyclicWitness>> {
    if r < 3 {
        return Ok(None);
    }
    if r == 3 {
        return is_near_acyclic(h, budget);
    }
    // Any admissible removal set U (chi(H[U]) <= r-3, chi(H-U) = 3) is the
    // union of r-3 classes of an r-coloring and vice versa, so enumerating
    // colorings is exhaustive. Removals repeat across colorings and are
    // deduplicated.
    let mut tried: HashSet<Vec<usize>> = HashSet::new();
    for coloring in chromatic::color_class_partitions(h, r, budget) {
        let coloring = coloring?;
        let classes = coloring.classes();
        let mut combos = combinations(classes.len(), r - 3);
        // high-degree classes first: removing join-like structure is the
        // usual way to reach a near-acyclic remainder
        combos.sort_by_key(|combo| {
            let deg_sum: usize = combo
                .iter()
                .flat_map(|&i| classes[i].iter())
                .map(|v| h.degree(v))
                .sum();
            (usize::MAX - deg_sum, combo.clone())
        });
        for combo in combos {
            budget.check("r-near-acyclic")?;
            let mut removed = VertexSet::new(h.n());
            for &i in &combo {
                removed.union_with(&classes[i]);
            }
            if !tried.insert(removed.to_vec()) {
                continue;
            }
            let (rest, back) = h.remove_vertices(&removed);
            if let Some(w) = is_near_acyclic(&rest, budget)? {
                return Ok(Some(NearAcyclicWitness {
                    removed_sets: combo.iter().map(|&i| classes[i].clone()).collect(),
                    s_set: remap_set(&w.s_set, &back, h.n()),
                    forest: remap_forest(&w.forest, &back, h.n()),
                }));
            }
        }
    }
    Ok(None)
}

/// Full r-near-acyclicity test: `chi(h) = r >= 3` and some r-3 independent
/// sets can be removed to leave a near-acyclic graph. For r = 3 this is
/// exactly `is_near_acyclic`.
pub fn is_r_near_acyclic(h: &Graph, budget: &Budget) -> Result<Option<NearAcyclicWitness>> {
    if h.n() == 0 {
        return Ok(None);
    }
    let r = chromatic::chromatic_number(h, budget)?;
    r_near_acyclic_with_chi(h, r, budget)
}

// ---------------------------------------------------------------------------
// the decision tree
// ---------------------------------------------------------------------------

/// Derives a forest witness directly from a near-acyclic witness: the
/// removed sets, S, and the two forest sides form an r-coloring whose
/// forest-side pair induces exactly the witness forest.
fn forest_witness_from_near(w: &NearAcyclicWitness, n: usize) -> Option<ForestWitness> {
    let mut side_a = VertexSet::new(n);
    let mut side_b = VertexSet::new(n);
    for t in &w.forest.trees {
        side_a.union_with(&t.side_a);
        side_b.union_with(&t.side_b);
    }
    if side_a.is_empty() || side_b.is_empty() {
        return None;
    }
    let mut classes = w.removed_sets.clone();
    classes.push(w.s_set.clone());
    classes.push(side_a.clone());
    classes.push(side_b.clone());
    let coloring = Coloring::new(classes);
    let pos_a = coloring.classes().iter().position(|c| *c == side_a)?;
    let pos_b = coloring.classes().iter().position(|c| *c == side_b)?;
    Some(ForestWitness {
        coloring,
        pair: (pos_a.min(pos_b), pos_a.max(pos_b)),
    })
}

/// Computes `chi(h)`, classifies the threshold, and attaches witnesses.
pub fn chromatic_threshold(h: &Graph, budget: &Budget) -> Result<ThresholdReport> {
    if h.n() == 0 {
        return Err(Error::InvalidParameter(
            "chromatic_threshold needs at least one vertex".into(),
        ));
    }
    let chi = with_stage(chromatic::chromatic_number(h, budget), "chi")?;
    if chi <= 2 {
        return Ok(ThresholdReport {
            chi,
            class: ThresholdClass::Bipartite,
            threshold: Rational::zero(),
            forest_witness: None,
            near_acyclic_witness: None,
        });
    }
    if let Some(w) = with_stage(r_near_acyclic_with_chi(h, chi, budget), "r-near-acyclic")? {
        let forest_witness = forest_witness_from_near(&w, h.n());
        return Ok(ThresholdReport {
            chi,
            class: ThresholdClass::Theta,
            threshold: theta(chi),
            forest_witness,
            near_acyclic_witness: Some(w),
        });
    }
    if let Some(fw) = with_stage(has_forest_in_decomposition(h, budget), "forest-search")? {
        return Ok(ThresholdReport {
            chi,
            class: ThresholdClass::Lambda,
            threshold: lambda(chi),
            forest_witness: Some(fw),
            near_acyclic_witness: None,
        });
    }
    Ok(ThresholdReport {
        chi,
        class: ThresholdClass::Pi,
        threshold: pi(chi),
        forest_witness: None,
        near_acyclic_witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn b() -> Budget {
        Budget::seconds(120)
    }

    #[test]
    fn decomposition_family_of_k3_is_one_edge() {
        let m = decomposition_family(&Graph::complete(3).unwrap(), &b()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!((m[0].n(), m[0].edge_count()), (2, 1));
    }

    #[test]
    fn decomposition_family_of_octahedron_is_c4() {
        let octa = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let m = decomposition_family(&octa, &b()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!((m[0].n(), m[0].edge_count()), (4, 4));
        assert_eq!(m[0].girth(), Some(4));
    }

    #[test]
    fn decomposition_family_of_c5() {
        // derived by enumerating the five 3-colorings by hand: the class-pair
        // subgraphs are P4 and P2 + K1, both forests
        let m = decomposition_family(&Graph::cycle(5).unwrap(), &b()).unwrap();
        assert_eq!(m.len(), 2);
        let mut shapes: Vec<(usize, usize)> = m.iter().map(|g| (g.n(), g.edge_count())).collect();
        shapes.sort_unstable();
        assert_eq!(shapes, vec![(3, 1), (4, 3)]);
        assert!(m.iter().all(|g| g.is_acyclic()));
    }

    #[test]
    fn forest_in_decomposition_examples() {
        assert!(
            has_forest_in_decomposition(&Graph::complete(3).unwrap(), &b())
                .unwrap()
                .is_some()
        );
        let octa = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(has_forest_in_decomposition(&octa, &b()).unwrap().is_none());
        let ico = named::icosahedron();
        let fw = has_forest_in_decomposition(&ico, &b())
            .unwrap()
            .expect("icosahedron has a forest member");
        fw.coloring.check(&ico).unwrap();
        let union = fw.coloring.classes()[fw.pair.0].union(&fw.coloring.classes()[fw.pair.1]);
        let (member, _) = ico.induced(&union);
        assert!(member.is_acyclic());
    }

    #[test]
    fn near_acyclic_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let w = is_near_acyclic(&c5, &b())
            .unwrap()
            .expect("C5 is near-acyclic");
        assert!(w.removed_sets.is_empty());
        assert_eq!(tree_class_holds(&c5, &w.s_set), Some(true));

        assert!(is_near_acyclic(&Graph::complete(3).unwrap(), &b())
            .unwrap()
            .is_none());

        assert!(is_near_acyclic(&named::dodecahedron(), &b())
            .unwrap()
            .is_some());

        // not 3-chromatic: absent
        assert!(is_near_acyclic(&Graph::cycle(4).unwrap(), &b())
            .unwrap()
            .is_none());
        assert!(is_near_acyclic(&Graph::complete(4).unwrap(), &b())
            .unwrap()
            .is_none());
    }

    #[test]
    fn r_near_acyclic_examples() {
        // near-acyclic 3-chromatic graphs: removed_sets empty
        let w = is_r_near_acyclic(&Graph::cycle(7).unwrap(), &b())
            .unwrap()
            .expect("C7");
        assert!(w.removed_sets.is_empty());

        assert!(is_r_near_acyclic(&named::icosahedron(), &b())
            .unwrap()
            .is_none());
        assert!(is_r_near_acyclic(&Graph::complete(4).unwrap(), &b())
            .unwrap()
            .is_none());
        assert!(is_r_near_acyclic(&Graph::complete(5).unwrap(), &b())
            .unwrap()
            .is_none());
    }

    #[test]
    fn threshold_catalog_small() {
        let r = chromatic_threshold(&Graph::complete(3).unwrap(), &b()).unwrap();
        assert_eq!(r.class, ThresholdClass::Lambda);
        assert_eq!(r.threshold, Rational::new(1, 3));

        let r = chromatic_threshold(&Graph::cycle(5).unwrap(), &b()).unwrap();
        assert_eq!(r.class, ThresholdClass::Theta);
        assert!(r.threshold.is_zero());

        let octa = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let r = chromatic_threshold(&octa, &b()).unwrap();
        assert_eq!(r.class, ThresholdClass::Pi);
        assert_eq!(r.threshold, Rational::new(1, 2));

        let r = chromatic_threshold(&Graph::complete_bipartite(3, 4).unwrap(), &b()).unwrap();
        assert_eq!(r.class, ThresholdClass::Bipartite);
        assert!(r.threshold.is_zero());
    }

    #[test]
    fn wheel_w5_is_theta_at_one_half() {
        // hub + C5: removing the hub (one independent set) leaves a
        // near-acyclic graph, so the threshold is (4-3)/(4-2)
        let w5 = Graph::complete(1).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        let report = chromatic_threshold(&w5, &b()).unwrap();
        assert_eq!(report.chi, 4);
        assert_eq!(report.class, ThresholdClass::Theta);
        assert_eq!(report.threshold, Rational::new(1, 2));
        let w = report.near_acyclic_witness.unwrap();
        assert_eq!(w.removed_sets.len(), 1);
    }

    #[test]
    fn report_json_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let report = chromatic_threshold(&g, &b()).unwrap();
        let js = report.to_json();
        assert_eq!(js["schema"], "ctl/1");
        let back = ThresholdReport::from_json(&js, g.n()).unwrap();
        assert_eq!(back.chi, report.chi);
        assert_eq!(back.class, report.class);
        assert_eq!(back.threshold, report.threshold);
        assert_eq!(
            back.near_acyclic_witness.unwrap().s_set,
            report.near_acyclic_witness.unwrap().s_set
        );
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 1).len(), 4);
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn budget_errors_name_the_subtest() {
        // chi = 5 with clique number 2: the colorability refutations are
        // guaranteed to outlast the amortized budget check point
        let m5 = crate::constructions::mycielski(
            &crate::constructions::mycielski(&Graph::cycle(5).unwrap()).unwrap(),
        )
        .unwrap();
        let g = m5;
        let tight = Budget::millis(0);
        std::thread::sleep(std::time::Duration::from_millis(2));
        match chromatic_threshold(&g, &tight) {
            Err(Error::Budget { stage }) => assert!(!stage.is_empty()),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
