//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Augmentation: every graph on n+1 vertices arises from a graph on n
//! vertices by attaching a new vertex with some neighborhood, so extending
//! every n-vertex representative by every one of the 2^n neighborhoods and
//! deduplicating up to isomorphism is exhaustive. Intended for the oracle
//! test suites (n <= 8).

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::verify;
use std::collections::HashMap;

/// All graphs on exactly `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    let budget = Budget::unlimited();
    let mut current = vec![Graph::empty(0)?];
    for size in 1..=n {
        let mut next: Vec<Graph> = Vec::new();
        let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        for g in &current {
            let old = size - 1;
            for nbhd in 0u64..(1 << old) {
                let mut edges = g.edges();
                for v in 0..old {
                    if nbhd >> v & 1 == 1 {
                        edges.push((v, old));
                    }
                }
                let candidate = Graph::from_edges(size, edges)?;
                let key = verify::invariant_key(&candidate);
                let bucket = buckets.entry(key).or_default();
                let mut dup = false;
                for &idx in bucket.iter() {
                    if verify::isomorphic(&next[idx], &candidate, &budget)? {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    bucket.push(next.len());
                    next.push(candidate);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_literature() {
        // numbers of graphs up to isomorphism: 1, 2, 4, 11, 34, 156
        let expected = [1usize, 2, 4, 11, 34, 156];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_graphs(i + 1).unwrap().len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn connected_counts_match_the_literature() {
        // connected graphs: 1, 1, 2, 6, 21, 112
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(
                connected_graphs(i + 1).unwrap().len(),
                want,
                "n = {}",
                i + 1
            );
        }
    }
}
