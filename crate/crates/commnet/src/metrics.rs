//! Network statistics: degree-type distribution, PLC-Fiber ratio, average
//! degree load, primary shortest pathlengths with skewness, and edge
//! betweenness centrality.
//!
//! Path-based metrics run on the collapsed simple graph with uniform edge
//! weights; parallel edges cannot shorten a hop-count path, so they inherit
//! their collapsed pair's betweenness value. Everything here is a pure read
//! over an immutable [`Network`], and identical inputs produce identical
//! results down to the serialized byte.

use crate::model::{EdgeType, Network, NodeType};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use std::io;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("network has no edges")]
    NoEdges,
    #[error("network is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("no control centers given and none present in the network")]
    NoControls,
    #[error("unknown control node id `{0}`")]
    UnknownControl(String),
    #[error("no pathlengths to summarize")]
    EmptyLengths,
}

/// Fraction of total degree count per node-type/edge-type combination.
///
/// An edge of type `t` between nodes of types `A` and `B` contributes half a
/// count to `(A, t)` and half to `(B, t)` (a full count to `(A, t)` when the
/// endpoint types coincide), normalized by the edge total. Only nonzero cells
/// are stored, so all cells sum to 1 and the column total for `t` equals the
/// fraction of edges with type `t`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeTypeMatrix {
    cells: BTreeMap<NodeType, BTreeMap<EdgeType, f64>>,
}

impl DegreeTypeMatrix {
    pub fn cell(&self, node_type: NodeType, edge_type: EdgeType) -> f64 {
        self.cells
            .get(&node_type)
            .and_then(|row| row.get(&edge_type))
            .copied()
            .unwrap_or(0.0)
    }

    /// Sum of the cells for one edge type.
    pub fn column_total(&self, edge_type: EdgeType) -> f64 {
        self.cells
            .values()
            .filter_map(|row| row.get(&edge_type))
            .sum()
    }

    /// Sum over all cells.
    pub fn total(&self) -> f64 {
        self.cells.values().flat_map(|row| row.values()).sum()
    }

    /// Nonzero cells in (node type, edge type) order.
    pub fn iter(&self) -> impl Iterator<Item = (NodeType, EdgeType, f64)> + '_ {
        self.cells
            .iter()
            .flat_map(|(nt, row)| row.iter().map(move |(et, v)| (*nt, *et, *v)))
    }
}

/// Integer hop-count distribution with its summary statistics.
///
/// `skewness` is the mode-based coefficient `(mean - mode) / std` with the
/// sample (n-1) standard deviation, reported as 0 when the deviation is 0.
/// Mode ties resolve to the smallest length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathLengthHistogram {
    pub counts: BTreeMap<u64, u64>,
    pub mean: f64,
    pub mode: u64,
    pub skewness: f64,
    pub std: f64,
}

impl PathLengthHistogram {
    /// Two-column `length,count` CSV of the distribution.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (length, count) in &self.counts {
            writeln!(out, "{length},{count}").expect("write to String cannot fail");
        }
        out
    }
}

/// The full statistics bundle for one network.
///
/// Serializes to a stable JSON document: keys sorted, reals with six decimal
/// places, identical inputs yielding identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatisticsProfile {
    pub adl: BTreeMap<NodeType, f64>,
    pub aebc: BTreeMap<EdgeType, f64>,
    pub degree_type_matrix: DegreeTypeMatrix,
    pub edge_count: usize,
    pub node_count: usize,
    pub plc_fiber_ratio: f64,
    pub psl_histogram: PathLengthHistogram,
}

struct SixDecimalFloats;

impl serde_json::ser::Formatter for SixDecimalFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.6}")
    }
}

impl StatisticsProfile {
    /// Canonical JSON: sorted keys, reals fixed to six decimals.
    pub fn to_json(&self) -> String {
        let mut buf = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, SixDecimalFloats);
        Serialize::serialize(self, &mut ser).expect("profile serialization cannot fail");
        String::from_utf8(buf).expect("serializer emits UTF-8")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Degree-type distribution of the network. Errors when there are no edges.
pub fn degree_type_matrix(network: &Network) -> Result<DegreeTypeMatrix, MetricsError> {
    if network.edge_count() == 0 {
        return Err(MetricsError::NoEdges);
    }
    let mut cells: BTreeMap<NodeType, BTreeMap<EdgeType, f64>> = BTreeMap::new();
    for edge in network.edges() {
        let a = network.node(&edge.source).expect("endpoint exists").node_type;
        let b = network.node(&edge.target).expect("endpoint exists").node_type;
        for (node_type, weight) in if a == b {
            [(a, 1.0), (b, 0.0)]
        } else {
            [(a, 0.5), (b, 0.5)]
        } {
            if weight > 0.0 {
                *cells
                    .entry(node_type)
                    .or_default()
                    .entry(edge.edge_type)
                    .or_insert(0.0) += weight;
            }
        }
    }
    let total = network.edge_count() as f64;
    for row in cells.values_mut() {
        for value in row.values_mut() {
            *value /= total;
        }
    }
    Ok(DegreeTypeMatrix { cells })
}

/// Fraction of edges carried over transmission-line infrastructure (PLC or
/// fiber), parallel edges counted individually.
pub fn plc_fiber_ratio(network: &Network) -> Result<f64, MetricsError> {
    if network.edge_count() == 0 {
        return Err(MetricsError::NoEdges);
    }
    let wired = network
        .edges()
        .filter(|e| matches!(e.edge_type, EdgeType::Plc | EdgeType::Fiber))
        .count();
    Ok(wired as f64 / network.edge_count() as f64)
}

/// Mean incident-edge count per node type. Types without nodes are omitted.
pub fn average_degree_load(network: &Network) -> BTreeMap<NodeType, f64> {
    let mut sums: BTreeMap<NodeType, (usize, usize)> = BTreeMap::new();
    for node in network.nodes() {
        let degree = network.degree(&node.id).expect("node exists");
        let entry = sums.entry(node.node_type).or_insert((0, 0));
        entry.0 += degree;
        entry.1 += 1;
    }
    sums.into_iter()
        .map(|(node_type, (total, count))| (node_type, total as f64 / count as f64))
        .collect()
}

/// All control-center node ids, ascending.
pub fn control_centers(network: &Network) -> Vec<String> {
    network
        .nodes()
        .filter(|n| n.node_type == NodeType::ControlCenter)
        .map(|n| n.id.clone())
        .collect()
}

/// Minimum hop count from each node to its nearest control center, computed
/// with uniform weights on the collapsed simple graph. Control nodes map
/// to 0. Requires a connected network and a non-empty control list.
pub fn primary_shortest_lengths(
    network: &Network,
    control_ids: &[String],
) -> Result<BTreeMap<String, u64>, MetricsError> {
    if control_ids.is_empty() {
        return Err(MetricsError::NoControls);
    }
    for id in control_ids {
        if !network.contains_node(id) {
            return Err(MetricsError::UnknownControl(id.clone()));
        }
    }
    let components = network.connected_components().len();
    if components != 1 {
        return Err(MetricsError::Disconnected(components));
    }

    // one search seeded with every control center = per-control minimum
    let mut lengths: BTreeMap<String, u64> = BTreeMap::new();
    let mut queue: VecDeque<&str> = VecDeque::new();
    let mut sources: Vec<&str> = control_ids.iter().map(String::as_str).collect();
    sources.sort_unstable();
    sources.dedup();
    for id in sources {
        lengths.insert(id.to_owned(), 0);
        queue.push_back(id);
    }
    while let Some(id) = queue.pop_front() {
        let next = lengths[id] + 1;
        for neighbor in network.neighbors(id).expect("node exists") {
            if !lengths.contains_key(neighbor) {
                lengths.insert(neighbor.to_owned(), next);
                queue.push_back(neighbor);
            }
        }
    }
    Ok(lengths)
}

/// Summarizes a pathlength map into a [`PathLengthHistogram`].
pub fn psl_histogram(lengths: &BTreeMap<String, u64>) -> Result<PathLengthHistogram, MetricsError> {
    if lengths.is_empty() {
        return Err(MetricsError::EmptyLengths);
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for length in lengths.values() {
        *counts.entry(*length).or_insert(0) += 1;
    }
    // moments come from the histogram, not the per-node map, so the result
    // is independent of node naming
    let n = lengths.len() as f64;
    let mean = counts
        .iter()
        .map(|(&l, &c)| (l * c) as f64)
        .sum::<f64>()
        / n;
    let mode = counts
        .iter()
        .fold((0u64, 0u64), |best, (&length, &count)| {
            if count > best.1 {
                (length, count)
            } else {
                best
            }
        })
        .0;
    let std = if lengths.len() < 2 {
        0.0
    } else {
        let ss: f64 = counts
            .iter()
            .map(|(&l, &c)| c as f64 * (l as f64 - mean).powi(2))
            .sum();
        (ss / (n - 1.0)).sqrt()
    };
    let skewness = if std > 0.0 { (mean - mode as f64) / std } else { 0.0 };
    Ok(PathLengthHistogram {
        counts,
        mean,
        mode,
        skewness,
        std,
    })
}

/// Unnormalized edge betweenness centrality over all unordered node pairs,
/// computed on the collapsed simple graph. Every original edge (parallels
/// included) is assigned its collapsed pair's value. Unreachable pairs
/// contribute nothing.
pub fn edge_betweenness(network: &Network) -> BTreeMap<String, f64> {
    let collapsed = network.collapse_parallel();
    let ids: Vec<&str> = collapsed.node_ids().collect();
    let index: BTreeMap<&str, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();
    let adjacency: Vec<Vec<usize>> = ids
        .iter()
        .map(|id| {
            collapsed
                .neighbors(id)
                .expect("node exists")
                .iter()
                .map(|n| index[n.as_str()])
                .collect()
        })
        .collect();
    let n = ids.len();

    // Brandes accumulation; every ordered pair is visited once per source,
    // so unordered-pair totals are the halved sums.
    let mut pair_values: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    let mut distance = vec![u64::MAX; n];
    let mut path_counts = vec![0.0f64; n];
    let mut predecessors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut dependency = vec![0.0f64; n];
    for source in 0..n {
        distance.fill(u64::MAX);
        path_counts.fill(0.0);
        dependency.fill(0.0);
        for preds in &mut predecessors {
            preds.clear();
        }

        distance[source] = 0;
        path_counts[source] = 1.0;
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adjacency[v] {
                if distance[w] == u64::MAX {
                    distance[w] = distance[v] + 1;
                    queue.push_back(w);
                }
                if distance[w] == distance[v] + 1 {
                    path_counts[w] += path_counts[v];
                    predecessors[w].push(v);
                }
            }
        }

        for &w in order.iter().rev() {
            for &v in &predecessors[w] {
                let credit = path_counts[v] / path_counts[w] * (1.0 + dependency[w]);
                let key = (v.min(w), v.max(w));
                *pair_values.entry(key).or_insert(0.0) += credit;
                dependency[v] += credit;
            }
        }
    }

    let mut result = BTreeMap::new();
    for ((i, j), value) in pair_values {
        for edge_id in collapsed.edge_ids(ids[i], ids[j]) {
            result.insert(edge_id.clone(), value / 2.0);
        }
    }
    // pairs in components of size one never accumulate, but they also have no
    // edges; any remaining edge belongs to a visited pair
    for edge in network.edges() {
        result.entry(edge.id.clone()).or_insert(0.0);
    }
    result
}

/// Mean edge betweenness over the original edges of each type present.
pub fn average_ebc_by_type(network: &Network) -> Result<BTreeMap<EdgeType, f64>, MetricsError> {
    if network.edge_count() == 0 {
        return Err(MetricsError::NoEdges);
    }
    let betweenness = edge_betweenness(network);
    let mut sums: BTreeMap<EdgeType, (f64, usize)> = BTreeMap::new();
    for edge in network.edges() {
        let entry = sums.entry(edge.edge_type).or_insert((0.0, 0));
        entry.0 += betweenness[&edge.id];
        entry.1 += 1;
    }
    Ok(sums
        .into_iter()
        .map(|(edge_type, (total, count))| (edge_type, total / count as f64))
        .collect())
}

/// Computes the whole statistics bundle. `control_ids` of `None` selects all
/// control-center nodes.
pub fn statistics_profile(
    network: &Network,
    control_ids: Option<&[String]>,
) -> Result<StatisticsProfile, MetricsError> {
    let controls: Vec<String> = match control_ids {
        Some(ids) => ids.to_vec(),
        None => control_centers(network),
    };
    let lengths = primary_shortest_lengths(network, &controls)?;
    Ok(StatisticsProfile {
        adl: average_degree_load(network),
        aebc: average_ebc_by_type(network)?,
        degree_type_matrix: degree_type_matrix(network)?,
        edge_count: network.edge_count(),
        node_count: network.node_count(),
        plc_fiber_ratio: plc_fiber_ratio(network)?,
        psl_histogram: psl_histogram(&lengths)?,
    })
}
