//! Simple graphs, Hamming and complete graph constructors, and a backtracking
//! isomorphism search sized for graphs with a few hundred vertices.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_VERTEX_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would have more than {limit} vertices")]
    TooLarge { limit: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("{labels} labels for {n} vertices")]
    LabelCount { labels: usize, n: usize },
    #[error("invalid parameters: {0}")]
    Params(String),
}

/// An undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Duplicate edges are merged; loops are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n_vertices() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n_vertices(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|n| n.len() == k).then_some(k)
    }

    /// Same edge set, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }

    /// Image of this graph under the vertex relabelling `v -> map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n_vertices(), self.edges().map(|(a, b)| (map[a], map[b])))
    }

    /// Adjacency-list JSON for debugging; not a stable format.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export<'a> {
            n_vertices: usize,
            adjacency: &'a [Vec<usize>],
            #[serde(skip_serializing_if = "Option::is_none")]
            labels: Option<&'a [String]>,
        }
        serde_json::to_value(Export {
            n_vertices: self.n_vertices(),
            adjacency: &self.adjacency,
            labels: self.labels(),
        })
        .expect("graph export is plain data")
    }
}

/// `H(d, n)` with vertex index `Σ v_i · n^i`.
pub fn hamming(d: usize, n: usize) -> Result<Graph, GraphError> {
    hamming_with_limit(d, n, DEFAULT_VERTEX_LIMIT)
}

pub fn hamming_with_limit(d: usize, n: usize, limit: usize) -> Result<Graph, GraphError> {
    if d < 1 || n < 2 {
        return Err(GraphError::Params(format!("H({d},{n}) needs d >= 1 and n >= 2")));
    }
    let size = (0..d)
        .try_fold(1usize, |acc, _| acc.checked_mul(n))
        .filter(|&s| s <= limit)
        .ok_or(GraphError::TooLarge { limit })?;
    let mut edges = Vec::with_capacity(size * d * (n - 1) / 2);
    for v in 0..size {
        let mut place = 1;
        for _ in 0..d {
            let digit = (v / place) % n;
            for other in digit + 1..n {
                edges.push((v, v + (other - digit) * place));
            }
            place *= n;
        }
    }
    let labels = (0..size)
        .map(|v| {
            let coords: Vec<String> = (0..d).map(|i| ((v / n.pow(i as u32)) % n).to_string()).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    Graph::from_edges(size, edges)?.with_labels(labels)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::Params(format!("K_{n} needs n >= 2")));
    }
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Per-vertex invariant: degree, triangles through the vertex, and the sorted
/// multiset of common-neighbour counts with every other vertex.
fn vertex_signatures(g: &Graph) -> Vec<(usize, usize, Vec<usize>)> {
    let n = g.n_vertices();
    let mut marks = vec![0usize; n];
    (0..n)
        .map(|v| {
            marks.iter_mut().for_each(|m| *m = 0);
            for &u in g.neighbors(v) {
                for &w in g.neighbors(u) {
                    marks[w] += 1;
                }
            }
            let triangles = g.neighbors(v).iter().map(|&u| marks[u]).sum::<usize>() / 2;
            let mut common: Vec<usize> = (0..n).filter(|&u| u != v).map(|u| marks[u]).collect();
            common.sort_unstable();
            (g.degree(v), triangles, common)
        })
        .collect()
}

/// Returns `map` with `map[v]` the image in `g2` of vertex `v` of `g1`, or
/// `None` when the graphs are not isomorphic.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.n_vertices();
    if n != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return None;
    }
    let sig1 = vertex_signatures(g1);
    let sig2 = vertex_signatures(g2);
    // Compress signatures to class ids shared by both graphs.
    let mut classes = BTreeMap::new();
    for s in sig1.iter().chain(sig2.iter()) {
        let next = classes.len();
        classes.entry(s.clone()).or_insert(next);
    }
    let class1: Vec<usize> = sig1.iter().map(|s| classes[s]).collect();
    let class2: Vec<usize> = sig2.iter().map(|s| classes[s]).collect();
    let mut hist1 = class1.clone();
    let mut hist2 = class2.clone();
    hist1.sort_unstable();
    hist2.sort_unstable();
    if hist1 != hist2 {
        return None;
    }

    // Visit g1 in BFS order so each vertex after the first of its component
    // has an already-mapped neighbour to draw candidates from.
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g1.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    anchor[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
    }

    let mut state = Search {
        g1,
        g2,
        class1: &class1,
        class2: &class2,
        order: &order,
        anchor: &anchor,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        Some(state.map)
    } else {
        None
    }
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    class1: &'a [usize],
    class2: &'a [usize],
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, c: usize, depth: usize) -> bool {
        if self.used[c] || self.class1[v] != self.class2[c] {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&w| self.g1.has_edge(v, w) == self.g2.has_edge(c, self.map[w]))
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[v] {
            Some(a) => self.g2.neighbors(self.map[a]).to_vec(),
            None => (0..self.g2.n_vertices()).collect(),
        };
        for c in candidates {
            if !self.consistent(v, c, depth) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// Checks that `map` is a bijection sending edges to edges and non-edges to
/// non-edges.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.n_vertices();
    if n != g2.n_vertices() || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    (0..n).all(|a| (a + 1..n).all(|b| g1.has_edge(a, b) == g2.has_edge(map[a], map[b])))
}
