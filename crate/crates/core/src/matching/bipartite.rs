//! Hopcroft-Karp on a bipartite host.

use std::collections::VecDeque;

use super::Matching;
use crate::error::Result;
use crate::graph::{Bipartition, Graph, Vertex};

const INF: usize = usize::MAX;

/// Maximum matching of a bipartite graph via layered augmenting paths.
/// Fails if `b` is not a bipartition of `g`.
pub fn max_matching_bipartite(g: &Graph, b: &Bipartition) -> Result<Matching> {
    b.validate(g)?;
    let n = g.vertex_count();
    let left = b.side0();
    let mut mate: Vec<Option<Vertex>> = vec![None; n + 1];
    let mut dist = vec![INF; n + 1];

    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                match mate[w] {
                    None => found = true,
                    Some(x) if dist[x] == INF => {
                        dist[x] = dist[u] + 1;
                        queue.push_back(x);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for &u in &left {
            if mate[u].is_none() {
                augment(g, u, &mut mate, &mut dist);
            }
        }
    }
    Ok(Matching::from_mate(&mate))
}

fn augment(g: &Graph, u: Vertex, mate: &mut [Option<Vertex>], dist: &mut [usize]) -> bool {
    for &w in g.neighbors(u) {
        let ok = match mate[w] {
            None => true,
            Some(x) => dist[x] == dist[u].wrapping_add(1) && augment(g, x, mate, dist),
        };
        if ok {
            mate[u] = Some(w);
            mate[w] = Some(u);
            return true;
        }
    }
    dist[u] = INF;
    false
}
