//! Typed undirected multigraph of stations and communication links.
//!
//! [`Network`] is the substrate every other module operates on. Nodes and
//! edges carry closed-set type tags ([`NodeType`], [`EdgeType`]), edges are
//! unordered pairs of node ids, parallel edges (same endpoint pair, distinct
//! ids) are allowed, self-loops are not. All iteration is in ascending id
//! order so downstream transforms and reports are reproducible.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Station category. The set is closed: parsing any other token fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeType {
    Connector,
    ControlCenter,
    Generating,
    Microwave,
    Office,
    Other,
    Repeater,
    Transmission,
}

impl NodeType {
    /// Every node type, in token order.
    pub const ALL: [NodeType; 8] = [
        NodeType::Connector,
        NodeType::ControlCenter,
        NodeType::Generating,
        NodeType::Microwave,
        NodeType::Office,
        NodeType::Other,
        NodeType::Repeater,
        NodeType::Transmission,
    ];

    pub fn token(self) -> &'static str {
        match self {
            NodeType::Connector => "connector",
            NodeType::ControlCenter => "control_center",
            NodeType::Generating => "generating",
            NodeType::Microwave => "microwave",
            NodeType::Office => "office",
            NodeType::Other => "other",
            NodeType::Repeater => "repeater",
            NodeType::Transmission => "transmission",
        }
    }
}

impl fmt::Display for NodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown node type `{0}`")]
pub struct UnknownNodeType(pub String);

impl FromStr for NodeType {
    type Err = UnknownNodeType;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NodeType::ALL
            .iter()
            .copied()
            .find(|t| t.token() == s)
            .ok_or_else(|| UnknownNodeType(s.to_owned()))
    }
}

/// Communication link category. `Untyped` is reserved for edges created or
/// stripped by simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeType {
    Fiber,
    Leased,
    Microwave,
    Plc,
    Radio,
    Untyped,
}

impl EdgeType {
    /// Every edge type, in token order.
    pub const ALL: [EdgeType; 6] = [
        EdgeType::Fiber,
        EdgeType::Leased,
        EdgeType::Microwave,
        EdgeType::Plc,
        EdgeType::Radio,
        EdgeType::Untyped,
    ];

    pub fn token(self) -> &'static str {
        match self {
            EdgeType::Fiber => "fiber",
            EdgeType::Leased => "leased",
            EdgeType::Microwave => "microwave",
            EdgeType::Plc => "plc",
            EdgeType::Radio => "radio",
            EdgeType::Untyped => "untyped",
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown edge type `{0}`")]
pub struct UnknownEdgeType(pub String);

impl FromStr for EdgeType {
    type Err = UnknownEdgeType;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EdgeType::ALL
            .iter()
            .copied()
            .find(|t| t.token() == s)
            .ok_or_else(|| UnknownEdgeType(s.to_owned()))
    }
}

/// A station.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub label: String,
    pub node_type: NodeType,
}

impl Node {
    pub fn new(id: impl Into<String>, label: impl Into<String>, node_type: NodeType) -> Self {
        Node {
            id: id.into(),
            label: label.into(),
            node_type,
        }
    }
}

/// A communication link. `source`/`target` preserve the order the edge was
/// constructed with (so export is exact), but the pair is semantically
/// unordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub target: String,
    pub edge_type: EdgeType,
}

impl Edge {
    pub fn new(
        id: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
        edge_type: EdgeType,
    ) -> Self {
        Edge {
            id: id.into(),
            source: source.into(),
            target: target.into(),
            edge_type,
        }
    }

    /// Endpoint pair normalized to ascending id order.
    pub fn pair(&self) -> (&str, &str) {
        normalize(&self.source, &self.target)
    }
}

fn normalize<'a>(a: &'a str, b: &'a str) -> (&'a str, &'a str) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate node id `{0}`")]
    DuplicateNode(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` references missing node `{node}`")]
    MissingEndpoint { edge: String, node: String },
    #[error("edge `{0}` is a self-loop")]
    SelfLoop(String),
    #[error("unknown node id `{0}`")]
    UnknownNode(String),
    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),
}

/// Typed undirected multigraph.
///
/// The adjacency index (`node id -> neighbor id -> edge ids`) is kept
/// consistent with the edge map across every mutation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Network {
    nodes: BTreeMap<String, Node>,
    edges: BTreeMap<String, Edge>,
    adjacency: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

impl Network {
    pub fn new() -> Self {
        Network::default()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, id: &str) -> bool {
        self.nodes.contains_key(id)
    }

    pub fn contains_edge(&self, id: &str) -> bool {
        self.edges.contains_key(id)
    }

    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.get(id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.get(id)
    }

    /// Nodes in ascending id order.
    pub fn nodes(&self) -> impl Iterator<Item = &Node> {
        self.nodes.values()
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn add_node(&mut self, node: Node) -> Result<(), GraphError> {
        if self.nodes.contains_key(&node.id) {
            return Err(GraphError::DuplicateNode(node.id));
        }
        self.adjacency.insert(node.id.clone(), BTreeMap::new());
        self.nodes.insert(node.id.clone(), node);
        Ok(())
    }

    pub fn add_edge(&mut self, edge: Edge) -> Result<(), GraphError> {
        if self.edges.contains_key(&edge.id) {
            return Err(GraphError::DuplicateEdge(edge.id));
        }
        for endpoint in [&edge.source, &edge.target] {
            if !self.nodes.contains_key(endpoint) {
                return Err(GraphError::MissingEndpoint {
                    edge: edge.id,
                    node: endpoint.clone(),
                });
            }
        }
        if edge.source == edge.target {
            return Err(GraphError::SelfLoop(edge.id));
        }
        self.index_edge(&edge);
        self.edges.insert(edge.id.clone(), edge);
        debug_assert!(self.validate().is_ok());
        Ok(())
    }

    /// Removes a node together with all incident edges. Returns the node and
    /// the removed edges.
    pub fn remove_node(&mut self, id: &str) -> Result<(Node, Vec<Edge>), GraphError> {
        let node = self
            .nodes
            .remove(id)
            .ok_or_else(|| GraphError::UnknownNode(id.to_owned()))?;
        let incident: Vec<String> = self
            .adjacency
            .remove(id)
            .unwrap_or_default()
            .into_values()
            .flatten()
            .collect();
        let mut removed = Vec::with_capacity(incident.len());
        for edge_id in incident {
            let edge = self.edges.remove(&edge_id).expect("index consistent");
            let other = if edge.source == id {
                &edge.target
            } else {
                &edge.source
            };
            if let Some(entries) = self.adjacency.get_mut(other) {
                if let Some(ids) = entries.get_mut(id) {
                    ids.retain(|e| e != &edge_id);
                    if ids.is_empty() {
                        entries.remove(id);
                    }
                }
            }
            removed.push(edge);
        }
        removed.sort_by(|a, b| a.id.cmp(&b.id));
        debug_assert!(self.validate().is_ok());
        Ok((node, removed))
    }

    pub fn remove_edge(&mut self, id: &str) -> Result<Edge, GraphError> {
        let edge = self
            .edges
            .remove(id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_owned()))?;
        for (from, to) in [(&edge.source, &edge.target), (&edge.target, &edge.source)] {
            if let Some(entries) = self.adjacency.get_mut(from) {
                if let Some(ids) = entries.get_mut(to) {
                    ids.retain(|e| e != id);
                    if ids.is_empty() {
                        entries.remove(to);
                    }
                }
            }
        }
        debug_assert!(self.validate().is_ok());
        Ok(edge)
    }

    /// Rewrites an edge's type in place. The adjacency index is unaffected.
    pub fn set_edge_type(&mut self, id: &str, edge_type: EdgeType) -> Result<(), GraphError> {
        let edge = self
            .edges
            .get_mut(id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_owned()))?;
        edge.edge_type = edge_type;
        Ok(())
    }

    /// De-duplicated set of adjacent node ids; never contains the node itself.
    pub fn neighbors(&self, id: &str) -> Result<BTreeSet<&str>, GraphError> {
        let entries = self
            .adjacency
            .get(id)
            .ok_or_else(|| GraphError::UnknownNode(id.to_owned()))?;
        Ok(entries.keys().map(String::as_str).collect())
    }

    /// Count of incident edges, parallel edges counted individually.
    pub fn degree(&self, id: &str) -> Result<usize, GraphError> {
        let entries = self
            .adjacency
            .get(id)
            .ok_or_else(|| GraphError::UnknownNode(id.to_owned()))?;
        Ok(entries.values().map(Vec::len).sum())
    }

    /// Incident edges in ascending id order.
    pub fn incident_edges(&self, id: &str) -> Result<Vec<&Edge>, GraphError> {
        let entries = self
            .adjacency
            .get(id)
            .ok_or_else(|| GraphError::UnknownNode(id.to_owned()))?;
        let mut ids: Vec<&String> = entries.values().flatten().collect();
        ids.sort();
        Ok(ids.iter().map(|e| &self.edges[*e]).collect())
    }

    /// Edge ids between two endpoints, in ascending order. Empty when either
    /// node is unknown or no such edge exists.
    pub fn edges_between(&self, a: &str, b: &str) -> &[String] {
        self.adjacency
            .get(a)
            .and_then(|entries| entries.get(b))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn has_adjacency(&self, a: &str, b: &str) -> bool {
        !self.edges_between(a, b).is_empty()
    }

    /// Partition of all node ids into maximal connected sets, ordered by
    /// smallest member id.
    pub fn connected_components(&self) -> Vec<BTreeSet<String>> {
        let mut components = Vec::new();
        let mut visited: BTreeSet<&str> = BTreeSet::new();
        for start in self.nodes.keys() {
            if visited.contains(start.as_str()) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut queue = std::collections::VecDeque::from([start.as_str()]);
            visited.insert(start);
            while let Some(id) = queue.pop_front() {
                component.insert(id.to_owned());
                for neighbor in self.adjacency[id].keys() {
                    if visited.insert(neighbor) {
                        queue.push_back(neighbor);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// True when the network has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Simple-graph view: one representative per endpoint pair plus the pair's
    /// original edge ids. The network itself is unchanged.
    pub fn collapse_parallel(&self) -> CollapsedGraph {
        let mut adjacency: BTreeMap<String, BTreeSet<String>> = self
            .nodes
            .keys()
            .map(|id| (id.clone(), BTreeSet::new()))
            .collect();
        let mut multiplicity: BTreeMap<(String, String), Vec<String>> = BTreeMap::new();
        for edge in self.edges.values() {
            let (a, b) = edge.pair();
            adjacency.get_mut(a).expect("endpoint exists").insert(b.to_owned());
            adjacency.get_mut(b).expect("endpoint exists").insert(a.to_owned());
            multiplicity
                .entry((a.to_owned(), b.to_owned()))
                .or_default()
                .push(edge.id.clone());
        }
        // BTreeMap iteration visits edges by id, so each list is presorted.
        CollapsedGraph {
            adjacency,
            multiplicity,
        }
    }

    fn index_edge(&mut self, edge: &Edge) {
        for (from, to) in [(&edge.source, &edge.target), (&edge.target, &edge.source)] {
            let ids = self
                .adjacency
                .get_mut(from)
                .expect("endpoint exists")
                .entry(to.clone())
                .or_default();
            let pos = ids.binary_search(&edge.id).unwrap_err();
            ids.insert(pos, edge.id.clone());
        }
    }

    /// Checks every structural invariant of the adjacency index. Intended for
    /// tests and debug assertions.
    pub fn validate(&self) -> Result<(), String> {
        let mut indexed = 0usize;
        for (node, entries) in &self.adjacency {
            if !self.nodes.contains_key(node) {
                return Err(format!("adjacency key `{node}` has no node"));
            }
            for (neighbor, ids) in entries {
                for id in ids {
                    let edge = self
                        .edges
                        .get(id)
                        .ok_or_else(|| format!("indexed edge `{id}` missing from edge map"))?;
                    let (a, b) = edge.pair();
                    let (x, y) = normalize(node, neighbor);
                    if (a, b) != (x, y) {
                        return Err(format!("edge `{id}` indexed under wrong pair"));
                    }
                }
                indexed += ids.len();
            }
        }
        if indexed != 2 * self.edges.len() {
            return Err(format!(
                "index holds {indexed} entries for {} edges",
                self.edges.len()
            ));
        }
        if self.adjacency.len() != self.nodes.len() {
            return Err("adjacency and node map sizes differ".to_owned());
        }
        for edge in self.edges.values() {
            if edge.source == edge.target {
                return Err(format!("edge `{}` is a self-loop", edge.id));
            }
        }
        Ok(())
    }
}

/// Simple-graph view produced by [`Network::collapse_parallel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedGraph {
    adjacency: BTreeMap<String, BTreeSet<String>>,
    multiplicity: BTreeMap<(String, String), Vec<String>>,
}

impl CollapsedGraph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Count of distinct endpoint pairs.
    pub fn edge_count(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = &str> {
        self.adjacency.keys().map(String::as_str)
    }

    pub fn neighbors(&self, id: &str) -> Option<&BTreeSet<String>> {
        self.adjacency.get(id)
    }

    /// Endpoint pairs with their original edge ids, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (&(String, String), &Vec<String>)> {
        self.multiplicity.iter()
    }

    /// Original edge ids collapsed onto the pair, ascending.
    pub fn edge_ids(&self, a: &str, b: &str) -> &[String] {
        let (a, b) = normalize(a, b);
        self.multiplicity
            .get(&(a.to_owned(), b.to_owned()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Smallest original edge id on the pair, if any.
    pub fn representative(&self, a: &str, b: &str) -> Option<&str> {
        self.edge_ids(a, b).first().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn station(id: &str, node_type: NodeType) -> Node {
        Node::new(id, format!("station {id}"), node_type)
    }

    fn path_abc() -> Network {
        let mut net = Network::new();
        for id in ["a", "b", "c"] {
            net.add_node(station(id, NodeType::Transmission)).unwrap();
        }
        net.add_edge(Edge::new("e1", "a", "b", EdgeType::Fiber)).unwrap();
        net.add_edge(Edge::new("e2", "b", "c", EdgeType::Plc)).unwrap();
        net
    }

    #[test]
    fn add_node_base_case() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Office)).unwrap();
        assert_eq!(net.node_count(), 1);
        assert_eq!(net.edge_count(), 0);
        net.validate().unwrap();
    }

    #[test]
    fn add_node_rejects_duplicate_id() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Office)).unwrap();
        let err = net.add_node(station("a", NodeType::Other)).unwrap_err();
        assert_eq!(err, GraphError::DuplicateNode("a".into()));
        assert_eq!(net.node_count(), 1);
    }

    #[test]
    fn add_node_increments_count() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Office)).unwrap();
        net.add_node(station("b", NodeType::Office)).unwrap();
        assert_eq!(net.node_count(), 2);
    }

    #[test]
    fn add_edge_base_case() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Transmission)).unwrap();
        net.add_node(station("b", NodeType::Generating)).unwrap();
        net.add_edge(Edge::new("e1", "a", "b", EdgeType::Fiber)).unwrap();
        assert_eq!(net.edge_count(), 1);
        net.validate().unwrap();
    }

    #[test]
    fn parallel_edges_coexist() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Transmission)).unwrap();
        net.add_node(station("b", NodeType::Generating)).unwrap();
        net.add_edge(Edge::new("e1", "a", "b", EdgeType::Fiber)).unwrap();
        net.add_edge(Edge::new("e2", "b", "a", EdgeType::Plc)).unwrap();
        assert_eq!(net.edge_count(), 2);
        assert_eq!(net.edges_between("a", "b"), ["e1", "e2"]);
        net.validate().unwrap();
    }

    #[test]
    fn add_edge_rejects_self_loop() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Transmission)).unwrap();
        let err = net
            .add_edge(Edge::new("e1", "a", "a", EdgeType::Fiber))
            .unwrap_err();
        assert_eq!(err, GraphError::SelfLoop("e1".into()));
    }

    #[test]
    fn add_edge_rejects_missing_endpoint() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Transmission)).unwrap();
        let err = net
            .add_edge(Edge::new("e1", "a", "z", EdgeType::Fiber))
            .unwrap_err();
        assert_eq!(
            err,
            GraphError::MissingEndpoint {
                edge: "e1".into(),
                node: "z".into()
            }
        );
    }

    #[test]
    fn add_edge_rejects_duplicate_id() {
        let mut net = path_abc();
        let err = net
            .add_edge(Edge::new("e1", "a", "c", EdgeType::Fiber))
            .unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge("e1".into()));
    }

    #[test]
    fn neighbors_on_path() {
        let net = path_abc();
        let mid: Vec<&str> = net.neighbors("b").unwrap().into_iter().collect();
        assert_eq!(mid, ["a", "c"]);
    }

    #[test]
    fn neighbors_dedup_parallel() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Transmission)).unwrap();
        net.add_node(station("b", NodeType::Generating)).unwrap();
        net.add_edge(Edge::new("e1", "a", "b", EdgeType::Fiber)).unwrap();
        net.add_edge(Edge::new("e2", "a", "b", EdgeType::Plc)).unwrap();
        let ns: Vec<&str> = net.neighbors("a").unwrap().into_iter().collect();
        assert_eq!(ns, ["b"]);
        assert_eq!(net.degree("a").unwrap(), 2);
    }

    #[test]
    fn neighbors_isolated_node_empty() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Other)).unwrap();
        assert!(net.neighbors("a").unwrap().is_empty());
        assert_eq!(net.degree("a").unwrap(), 0);
    }

    #[test]
    fn neighbors_unknown_node() {
        let net = Network::new();
        assert_eq!(
            net.neighbors("x").unwrap_err(),
            GraphError::UnknownNode("x".into())
        );
        assert_eq!(
            net.degree("x").unwrap_err(),
            GraphError::UnknownNode("x".into())
        );
    }

    #[test]
    fn degree_on_path() {
        let net = path_abc();
        assert_eq!(net.degree("b").unwrap(), 2);
        assert_eq!(net.degree("a").unwrap(), 1);
    }

    #[test]
    fn components_single() {
        let net = path_abc();
        let comps = net.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 3);
        assert!(net.is_connected());
    }

    #[test]
    fn components_with_isolated_node() {
        let mut net = path_abc();
        net.add_node(station("z", NodeType::Other)).unwrap();
        let comps = net.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].iter().next().unwrap(), "a");
        assert_eq!(comps[1].iter().next().unwrap(), "z");
        assert!(!net.is_connected());
    }

    #[test]
    fn components_empty_network() {
        let net = Network::new();
        assert!(net.connected_components().is_empty());
        assert!(net.is_connected());
    }

    #[test]
    fn collapse_merges_parallel_edges() {
        let mut net = Network::new();
        net.add_node(station("a", NodeType::Transmission)).unwrap();
        net.add_node(station("b", NodeType::Generating)).unwrap();
        net.add_edge(Edge::new("e1", "a", "b", EdgeType::Fiber)).unwrap();
        net.add_edge(Edge::new("e2", "b", "a", EdgeType::Plc)).unwrap();
        let collapsed = net.collapse_parallel();
        assert_eq!(collapsed.edge_count(), 1);
        assert_eq!(collapsed.edge_ids("a", "b"), ["e1", "e2"]);
        assert_eq!(collapsed.representative("b", "a"), Some("e1"));
        // underlying network unchanged
        assert_eq!(net.edge_count(), 2);
    }

    #[test]
    fn collapse_identity_on_simple_graph() {
        let net = path_abc();
        let collapsed = net.collapse_parallel();
        assert_eq!(collapsed.edge_count(), 2);
        for (_, ids) in collapsed.pairs() {
            assert_eq!(ids.len(), 1);
        }
    }

    #[test]
    fn remove_node_drops_incident_edges() {
        let mut net = path_abc();
        let (node, removed) = net.remove_node("b").unwrap();
        assert_eq!(node.id, "b");
        assert_eq!(removed.len(), 2);
        assert_eq!(net.node_count(), 2);
        assert_eq!(net.edge_count(), 0);
        net.validate().unwrap();
    }

    #[test]
    fn remove_edge_updates_index() {
        let mut net = path_abc();
        net.remove_edge("e1").unwrap();
        assert!(!net.has_adjacency("a", "b"));
        assert!(net.has_adjacency("b", "c"));
        net.validate().unwrap();
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let net = path_abc();
        let sum: usize = net.nodes().map(|n| net.degree(&n.id).unwrap()).sum();
        assert_eq!(sum, 2 * net.edge_count());
    }

    #[test]
    fn type_tokens_round_trip() {
        for t in NodeType::ALL {
            assert_eq!(t.token().parse::<NodeType>().unwrap(), t);
        }
        for t in EdgeType::ALL {
            assert_eq!(t.token().parse::<EdgeType>().unwrap(), t);
        }
        assert!("satellite".parse::<NodeType>().is_err());
        assert!("carrier_pigeon".parse::<EdgeType>().is_err());
    }
}
