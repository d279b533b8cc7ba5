//! Graph representations: the raw directed multigraph built from compounds,
//! the simplified undirected graph all statistics run on, connected
//! components, and induced subgraphs.

use std::collections::HashSet;
use std::io::{Read, Write};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::corpus::{CharSet, Compound};
use crate::error::{Error, Result};

/// Dense node identifier, `0..n_nodes`.
pub type NodeId = u32;

/// One directed arc of the raw multigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: NodeId,
    pub to: NodeId,
    pub multiplicity: u32,
}

/// Directed multigraph with self-loops: one node per distinct character, one
/// arc per distinct (upper, lower) pair carrying its multiplicity.
///
/// Node ids are dense and assigned in first-appearance order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDigraph {
    nodes: IndexMap<char, NodeId>,
    arcs: Vec<Arc>,
}

impl MultiDigraph {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn node_id(&self, c: char) -> Option<NodeId> {
        self.nodes.get(&c).copied()
    }

    pub fn label(&self, id: NodeId) -> char {
        *self
            .nodes
            .get_index(id as usize)
            .expect("node id in range")
            .0
    }

    /// Labels in node-id order.
    pub fn labels(&self) -> Vec<char> {
        self.nodes.keys().copied().collect()
    }
}

/// Builds the raw multigraph: one node per distinct character occurring as
/// upper or lower, one arc per distinct (upper, lower) pair. Duplicate pairs
/// in the input merge by summing multiplicity.
pub fn build_multigraph(compounds: &[Compound]) -> MultiDigraph {
    let mut nodes: IndexMap<char, NodeId> = IndexMap::new();
    let mut arc_index: IndexMap<(NodeId, NodeId), u32> = IndexMap::new();

    let intern = |nodes: &mut IndexMap<char, NodeId>, c: char| -> NodeId {
        let next = nodes.len() as NodeId;
        *nodes.entry(c).or_insert(next)
    };

    for c in compounds {
        let from = intern(&mut nodes, c.upper);
        let to = intern(&mut nodes, c.lower);
        *arc_index.entry((from, to)).or_insert(0) += c.multiplicity;
    }

    let arcs = arc_index
        .into_iter()
        .map(|((from, to), multiplicity)| Arc {
            from,
            to,
            multiplicity,
        })
        .collect();
    MultiDigraph { nodes, arcs }
}

/// Undirected, unweighted, loop-free graph: the substrate for all metrics.
///
/// Adjacency lists are sorted and duplicate-free, and symmetry holds by
/// construction. Node labels are optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<NodeId>>,
    n_edges: usize,
    labels: Option<Vec<char>>,
}

/// On-disk JSON form of a [`SimpleGraph`].
#[derive(Serialize, Deserialize)]
struct GraphFile {
    n_nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<char>>,
    edges: Vec<(NodeId, NodeId)>,
}

impl SimpleGraph {
    /// Builds a graph from undirected edges. Edge direction and duplicates are
    /// normalized away; self-loops are rejected.
    pub fn from_edges(
        n_nodes: usize,
        edges: impl IntoIterator<Item = (NodeId, NodeId)>,
        labels: Option<Vec<char>>,
    ) -> Result<Self> {
        if let Some(ref l) = labels {
            if l.len() != n_nodes {
                return Err(Error::InvalidGraph(format!(
                    "{} labels for {} nodes",
                    l.len(),
                    n_nodes
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); n_nodes];
        let mut seen: HashSet<(NodeId, NodeId)> = HashSet::new();
        let mut n_edges = 0;
        for (a, b) in edges {
            if a as usize >= n_nodes || b as usize >= n_nodes {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n_nodes} nodes"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at node {a}")));
            }
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                adjacency[a as usize].push(b);
                adjacency[b as usize].push(a);
                n_edges += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(SimpleGraph {
            adjacency,
            n_edges,
            labels,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[char]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: NodeId) -> Option<char> {
        self.labels.as_ref().map(|l| l[v as usize])
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::with_capacity(self.n_edges);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            let u = u as NodeId;
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        ensure_connected(self).is_ok()
    }

    /// Replaces the label map (length-checked against the node count).
    pub fn with_labels(mut self, labels: Option<Vec<char>>) -> Result<Self> {
        if let Some(ref l) = labels {
            if l.len() != self.n_nodes() {
                return Err(Error::InvalidGraph(format!(
                    "{} labels for {} nodes",
                    l.len(),
                    self.n_nodes()
                )));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Writes the JSON form: `{"n_nodes": .., "labels": [..], "edges": [[u, v], ..]}`
    /// with u < v and edges sorted. Compact, UTF-8, trailing newline.
    pub fn to_json<W: Write>(&self, mut w: W) -> Result<()> {
        let file = GraphFile {
            n_nodes: self.n_nodes(),
            labels: self.labels.clone(),
            edges: self.edges(),
        };
        serde_json::to_writer(&mut w, &file)?;
        w.write_all(b"\n")?;
        Ok(())
    }

    /// Reads the JSON form. Edge order and orientation are normalized on
    /// load; out-of-range endpoints and self-loops are errors.
    pub fn from_json<R: Read>(r: R) -> Result<Self> {
        let file: GraphFile = serde_json::from_reader(r)?;
        SimpleGraph::from_edges(file.n_nodes, file.edges, file.labels)
    }
}

/// Errors with a concrete unreachable node pair if the graph is disconnected.
pub fn ensure_connected(g: &SimpleGraph) -> Result<()> {
    let n = g.n_nodes();
    if n <= 1 {
        return Ok(());
    }
    let mut visited = vec![false; n];
    let mut stack = vec![0 as NodeId];
    visited[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !visited[w as usize] {
                visited[w as usize] = true;
                stack.push(w);
            }
        }
    }
    if let Some(b) = visited.iter().position(|&seen| !seen) {
        return Err(Error::Disconnected {
            a: 0,
            b: b as u32,
            a_label: g.label(0),
            b_label: g.label(b as u32),
        });
    }
    Ok(())
}

/// Omits direction, multiplicity, and self-loops: an undirected edge {u, v}
/// exists iff some arc u→v or v→u exists with u ≠ v. Nodes left with no
/// edges are retained as degree-0 nodes.
pub fn simplify(g: &MultiDigraph) -> SimpleGraph {
    let edges = g
        .arcs()
        .iter()
        .filter(|a| a.from != a.to)
        .map(|a| (a.from, a.to));
    SimpleGraph::from_edges(g.n_nodes(), edges, Some(g.labels()))
        .expect("multigraph arcs are in range")
}

/// Partition of a graph's nodes into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// node id → component id; components numbered in discovery order, so
    /// component ids ascend with their smallest member.
    pub assignment: Vec<u32>,
    /// component id → node count.
    pub sizes: Vec<usize>,
    /// Largest component; ties broken by smallest minimum node id.
    pub maximal_id: u32,
}

impl ComponentPartition {
    pub fn n_components(&self) -> usize {
        self.sizes.len()
    }

    /// Node ids of one component, ascending.
    pub fn component_nodes(&self, id: u32) -> Result<Vec<NodeId>> {
        if id as usize >= self.sizes.len() {
            return Err(Error::UnknownComponent {
                id,
                n_components: self.sizes.len(),
            });
        }
        Ok(self
            .assignment
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == id)
            .map(|(v, _)| v as NodeId)
            .collect())
    }

    /// Fraction of all nodes that lie in the maximal component.
    pub fn maximal_fraction(&self) -> f64 {
        if self.assignment.is_empty() {
            return 0.0;
        }
        self.sizes[self.maximal_id as usize] as f64 / self.assignment.len() as f64
    }
}

/// Standard undirected connectivity via breadth-first search.
pub fn connected_components(g: &SimpleGraph) -> ComponentPartition {
    let n = g.n_nodes();
    const UNASSIGNED: u32 = u32::MAX;
    let mut assignment = vec![UNASSIGNED; n];
    let mut sizes = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    for start in 0..n {
        if assignment[start] != UNASSIGNED {
            continue;
        }
        let comp = sizes.len() as u32;
        let mut size = 0usize;
        assignment[start] = comp;
        queue.push_back(start as NodeId);
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(v) {
                if assignment[w as usize] == UNASSIGNED {
                    assignment[w as usize] = comp;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(size);
    }

    // Discovery order means component ids ascend with their smallest node id,
    // so "first strictly larger wins" implements the tie-break rule.
    let mut maximal_id = 0u32;
    for (id, &size) in sizes.iter().enumerate() {
        if size > sizes[maximal_id as usize] {
            maximal_id = id as u32;
        }
    }

    ComponentPartition {
        assignment,
        sizes,
        maximal_id,
    }
}

/// An induced subgraph with its mapping back to the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: SimpleGraph,
    /// new node id → original node id (ascending in original id).
    pub original_ids: Vec<NodeId>,
}

/// Induces the subgraph on `keep` (given ascending, duplicate-free). Node ids
/// are re-densified preserving relative order; labels carry over.
pub fn induce_by_ids(g: &SimpleGraph, keep: &[NodeId]) -> Induced {
    debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
    let mut new_id = vec![u32::MAX; g.n_nodes()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v as usize] = i as u32;
    }
    let mut edges = Vec::new();
    for &v in keep {
        for &w in g.neighbors(v) {
            if v < w && new_id[w as usize] != u32::MAX {
                edges.push((new_id[v as usize], new_id[w as usize]));
            }
        }
    }
    let labels = g
        .labels()
        .map(|l| keep.iter().map(|&v| l[v as usize]).collect());
    let graph = SimpleGraph::from_edges(keep.len(), edges, labels)
        .expect("induced edges are in range");
    Induced {
        graph,
        original_ids: keep.to_vec(),
    }
}

/// Extracts one component as a standalone graph plus the original-id mapping.
pub fn extract_component(
    g: &SimpleGraph,
    partition: &ComponentPartition,
    id: u32,
) -> Result<Induced> {
    let nodes = partition.component_nodes(id)?;
    Ok(induce_by_ids(g, &nodes))
}

/// Result of restricting a graph to a character whitelist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub graph: SimpleGraph,
    pub original_ids: Vec<NodeId>,
    /// Whitelist characters absent from the graph, ascending. Nonempty is a
    /// warning condition, not an error; a disjoint whitelist yields an empty
    /// graph with every member listed here.
    pub missing: Vec<char>,
}

/// Keeps nodes whose label is in the whitelist and edges with both endpoints
/// kept. Requires node labels.
pub fn induced_subgraph(g: &SimpleGraph, keep: &CharSet) -> Result<Restriction> {
    let labels = g.labels().ok_or(Error::MissingLabels)?;
    let mut present: HashSet<char> = HashSet::new();
    let mut ids: Vec<NodeId> = Vec::new();
    for (v, &c) in labels.iter().enumerate() {
        if keep.contains(c) {
            ids.push(v as NodeId);
            present.insert(c);
        }
    }
    let missing: Vec<char> = keep.iter().filter(|c| !present.contains(c)).collect();
    let induced = induce_by_ids(g, &ids);
    Ok(Restriction {
        graph: induced.graph,
        original_ids: induced.original_ids,
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_compounds, ParsePolicy};

    fn compounds(text: &str) -> Vec<Compound> {
        parse_compounds(text.as_bytes(), ParsePolicy::Strict)
            .unwrap()
            .0
    }

    #[test]
    fn multigraph_nodes_and_arcs() {
        let g = build_multigraph(&compounds("山川\n川上\n"));
        assert_eq!(g.n_nodes(), 3);
        assert_eq!(g.n_arcs(), 2);
        assert_eq!(g.label(0), '山');
        assert_eq!(g.node_id('上'), Some(2));
    }

    #[test]
    fn self_loop_makes_single_node_arc() {
        let g = build_multigraph(&compounds("人人\n"));
        assert_eq!(g.n_nodes(), 1);
        assert_eq!(g.n_arcs(), 1);
        assert_eq!(g.arcs()[0], Arc { from: 0, to: 0, multiplicity: 1 });
    }

    #[test]
    fn inverted_pairs_stay_distinct_arcs() {
        let g = build_multigraph(&compounds("山川\n山川\n川山\n"));
        assert_eq!(g.n_nodes(), 2);
        assert_eq!(g.n_arcs(), 2);
        assert_eq!(g.arcs()[0].multiplicity, 2);
        assert_eq!(g.arcs()[1].multiplicity, 1);
    }

    #[test]
    fn simplify_merges_directions_and_drops_loops() {
        // A→B ×2, B→A ×1, A→A ×1 collapse to the single edge {A, B}.
        let g = build_multigraph(&compounds("山川\n山川\n川山\n山山\n"));
        let s = simplify(&g);
        assert_eq!(s.n_nodes(), 2);
        assert_eq!(s.n_edges(), 1);
        assert!(s.has_edge(0, 1) && s.has_edge(1, 0));
    }

    #[test]
    fn simplify_keeps_loop_only_nodes_as_degree_zero() {
        let g = build_multigraph(&compounds("人人\n"));
        let s = simplify(&g);
        assert_eq!(s.n_nodes(), 1);
        assert_eq!(s.n_edges(), 0);
        assert_eq!(s.degree(0), 0);
    }

    #[test]
    fn simplify_empty_multigraph() {
        let s = simplify(&build_multigraph(&[]));
        assert_eq!(s.n_nodes(), 0);
        assert_eq!(s.n_edges(), 0);
    }

    #[test]
    fn components_of_two_triangles() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], None)
            .unwrap();
        let p = connected_components(&g);
        assert_eq!(p.n_components(), 2);
        assert_eq!(p.sizes, vec![3, 3]);
        // Tie on size: the component containing node 0 wins.
        assert_eq!(p.maximal_id, 0);
        assert_eq!(p.maximal_fraction(), 0.5);
    }

    #[test]
    fn components_of_path() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)], None).unwrap();
        let p = connected_components(&g);
        assert_eq!(p.n_components(), 1);
        assert_eq!(p.sizes, vec![5]);
    }

    #[test]
    fn extract_component_redensifies() {
        let labels: Vec<char> = "abcdef".chars().collect();
        let g = SimpleGraph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
            Some(labels),
        )
        .unwrap();
        let p = connected_components(&g);
        let sub = extract_component(&g, &p, 1).unwrap();
        assert_eq!(sub.graph.n_nodes(), 3);
        assert_eq!(sub.graph.n_edges(), 3);
        assert_eq!(sub.original_ids, vec![3, 4, 5]);
        assert_eq!(sub.graph.labels().unwrap(), &['d', 'e', 'f']);

        let err = extract_component(&g, &p, 9).unwrap_err();
        assert!(matches!(err, Error::UnknownComponent { id: 9, .. }));
    }

    #[test]
    fn extract_single_component_is_identity_up_to_ids() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)], None).unwrap();
        let p = connected_components(&g);
        let sub = extract_component(&g, &p, p.maximal_id).unwrap();
        assert_eq!(sub.graph, g);
    }

    #[test]
    fn isolated_node_component() {
        let g = SimpleGraph::from_edges(3, [(0, 1)], None).unwrap();
        let p = connected_components(&g);
        let sub = extract_component(&g, &p, 1).unwrap();
        assert_eq!(sub.graph.n_nodes(), 1);
        assert_eq!(sub.graph.n_edges(), 0);
    }

    #[test]
    fn whitelist_restriction() {
        let labels = vec!['A', 'B', 'C'];
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)], Some(labels)).unwrap();
        let keep = CharSet::new("pair", ['A', 'B']).unwrap();
        let r = induced_subgraph(&g, &keep).unwrap();
        assert_eq!(r.graph.n_nodes(), 2);
        assert_eq!(r.graph.n_edges(), 1);
        assert!(r.missing.is_empty());

        let disjoint = CharSet::new("other", ['X', 'Y']).unwrap();
        let r = induced_subgraph(&g, &disjoint).unwrap();
        assert_eq!(r.graph.n_nodes(), 0);
        assert_eq!(r.missing, vec!['X', 'Y']);

        let unlabeled = SimpleGraph::from_edges(2, [(0, 1)], None).unwrap();
        assert!(matches!(
            induced_subgraph(&unlabeled, &keep).unwrap_err(),
            Error::MissingLabels
        ));
    }

    #[test]
    fn restriction_to_all_labels_is_identity() {
        let labels = vec!['A', 'B', 'C', 'D'];
        let g =
            SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)], Some(labels.clone())).unwrap();
        let keep = CharSet::new("all", labels).unwrap();
        let r = induced_subgraph(&g, &keep).unwrap();
        assert_eq!(r.graph, g);
    }

    #[test]
    fn json_roundtrip_preserves_graph() {
        let g = SimpleGraph::from_edges(4, [(2, 3), (0, 1), (1, 2)], Some(vec!['w', 'x', 'y', 'z']))
            .unwrap();
        let mut buf = Vec::new();
        g.to_json(&mut buf).unwrap();
        let back = SimpleGraph::from_json(&buf[..]).unwrap();
        assert_eq!(back, g);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"edges\":[[0,1],[1,2],[2,3]]"));
    }

    #[test]
    fn json_rejects_bad_edges() {
        let bad = r#"{"n_nodes": 2, "edges": [[0, 5]]}"#;
        assert!(SimpleGraph::from_json(bad.as_bytes()).is_err());
        let loop_edge = r#"{"n_nodes": 2, "edges": [[1, 1]]}"#;
        assert!(SimpleGraph::from_json(loop_edge.as_bytes()).is_err());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)], None).unwrap();
        let total: usize = (0..5).map(|v| g.degree(v as NodeId)).sum();
        assert_eq!(total, 2 * g.n_edges());
    }
}
