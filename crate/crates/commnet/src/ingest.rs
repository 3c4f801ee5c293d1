//! Canonical node/edge file format plus island pruning.
//!
//! Nodes file: header `node_id,label,node_type`, one row per station.
//! Edges file: header `edge_id,source_id,target_id,edge_type`.
//! UTF-8, LF line endings, comma separated. Ids match `[A-Za-z0-9_.-]+` and
//! are never quoted; labels are double-quoted when they embed commas or
//! quotes. Parsing is strict: unknown type tokens, malformed rows, dangling
//! endpoints and duplicate ids are rejected with the offending line number,
//! never coerced.

use crate::model::{Edge, GraphError, Network, Node};
use std::collections::BTreeSet;
use thiserror::Error;

pub const NODES_HEADER: &str = "node_id,label,node_type";
pub const EDGES_HEADER: &str = "edge_id,source_id,target_id,edge_type";

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{file} file header must be `{expected}`")]
    Header {
        file: &'static str,
        expected: &'static str,
    },
    #[error("line {line}: expected {expected} columns, found {found}")]
    Columns {
        line: u64,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: invalid id `{id}`")]
    InvalidId { line: u64, id: String },
    #[error("line {line}: unknown node type `{token}`")]
    UnknownNodeType { line: u64, token: String },
    #[error("line {line}: unknown edge type `{token}`")]
    UnknownEdgeType { line: u64, token: String },
    #[error("line {line}: duplicate node id `{id}`")]
    DuplicateNode { line: u64, id: String },
    #[error("line {line}: duplicate edge id `{id}`")]
    DuplicateEdge { line: u64, id: String },
    #[error("line {line}: edge `{edge}` references missing node `{node}`")]
    MissingEndpoint {
        line: u64,
        edge: String,
        node: String,
    },
    #[error("line {line}: edge `{edge}` is a self-loop")]
    SelfLoop { line: u64, edge: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("cannot prune an empty network")]
    EmptyNetwork,
}

/// What `prune_islands` removed and what it kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneReport {
    pub removed_node_ids: Vec<String>,
    pub removed_edge_ids: Vec<String>,
    pub kept_component_size: usize,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes())
}

fn record_line(record: &csv::StringRecord) -> u64 {
    record.position().map(|p| p.line()).unwrap_or(0)
}

/// Parses the canonical nodes/edges texts into a [`Network`].
pub fn parse_network(nodes_text: &str, edges_text: &str) -> Result<Network, ParseError> {
    let mut network = Network::new();

    let mut saw_header = false;
    for record in reader(nodes_text).records() {
        let record = record?;
        let line = record_line(&record);
        if !saw_header {
            saw_header = true;
            if record.iter().collect::<Vec<_>>().join(",") != NODES_HEADER {
                return Err(ParseError::Header {
                    file: "nodes",
                    expected: NODES_HEADER,
                });
            }
            continue;
        }
        if record.len() != 3 {
            return Err(ParseError::Columns {
                line,
                expected: 3,
                found: record.len(),
            });
        }
        let (id, label, token) = (&record[0], &record[1], &record[2]);
        if !valid_id(id) {
            return Err(ParseError::InvalidId {
                line,
                id: id.to_owned(),
            });
        }
        let node_type = token
            .parse()
            .map_err(|_| ParseError::UnknownNodeType {
                line,
                token: token.to_owned(),
            })?;
        network
            .add_node(Node::new(id, label, node_type))
            .map_err(|_| ParseError::DuplicateNode {
                line,
                id: id.to_owned(),
            })?;
    }
    if !saw_header {
        return Err(ParseError::Header {
            file: "nodes",
            expected: NODES_HEADER,
        });
    }

    let mut saw_header = false;
    for record in reader(edges_text).records() {
        let record = record?;
        let line = record_line(&record);
        if !saw_header {
            saw_header = true;
            if record.iter().collect::<Vec<_>>().join(",") != EDGES_HEADER {
                return Err(ParseError::Header {
                    file: "edges",
                    expected: EDGES_HEADER,
                });
            }
            continue;
        }
        if record.len() != 4 {
            return Err(ParseError::Columns {
                line,
                expected: 4,
                found: record.len(),
            });
        }
        let (id, source, target, token) = (&record[0], &record[1], &record[2], &record[3]);
        for field in [id, source, target] {
            if !valid_id(field) {
                return Err(ParseError::InvalidId {
                    line,
                    id: field.to_owned(),
                });
            }
        }
        let edge_type = token
            .parse()
            .map_err(|_| ParseError::UnknownEdgeType {
                line,
                token: token.to_owned(),
            })?;
        network
            .add_edge(Edge::new(id, source, target, edge_type))
            .map_err(|err| match err {
                GraphError::DuplicateEdge(id) => ParseError::DuplicateEdge { line, id },
                GraphError::MissingEndpoint { edge, node } => {
                    ParseError::MissingEndpoint { line, edge, node }
                }
                GraphError::SelfLoop(edge) => ParseError::SelfLoop { line, edge },
                other => unreachable!("unexpected graph error during parse: {other}"),
            })?;
    }
    if !saw_header {
        return Err(ParseError::Header {
            file: "edges",
            expected: EDGES_HEADER,
        });
    }

    Ok(network)
}

/// Emits the canonical nodes/edges texts, rows sorted by id. Exporting the
/// same network twice yields byte-identical output, and
/// `parse_network(export_network(n))` reconstructs `n` exactly.
pub fn export_network(network: &Network) -> (String, String) {
    let mut nodes = csv::WriterBuilder::new().from_writer(Vec::new());
    nodes
        .write_record(NODES_HEADER.split(','))
        .expect("write to Vec cannot fail");
    for node in network.nodes() {
        nodes
            .write_record([node.id.as_str(), node.label.as_str(), node.node_type.token()])
            .expect("write to Vec cannot fail");
    }

    let mut edges = csv::WriterBuilder::new().from_writer(Vec::new());
    edges
        .write_record(EDGES_HEADER.split(','))
        .expect("write to Vec cannot fail");
    for edge in network.edges() {
        edges
            .write_record([
                edge.id.as_str(),
                edge.source.as_str(),
                edge.target.as_str(),
                edge.edge_type.token(),
            ])
            .expect("write to Vec cannot fail");
    }

    let into_string = |w: csv::Writer<Vec<u8>>| {
        String::from_utf8(w.into_inner().expect("flush to Vec cannot fail"))
            .expect("canonical output is UTF-8")
    };
    (into_string(nodes), into_string(edges))
}

/// Keeps only the largest connected component (ties broken by smallest member
/// id) and reports everything that was dropped. The result is connected.
pub fn prune_islands(network: &Network) -> Result<(Network, PruneReport), PruneError> {
    let components = network.connected_components();
    if components.is_empty() {
        return Err(PruneError::EmptyNetwork);
    }
    // components are ordered by smallest member id, so max_by_key with a
    // strict `>` comparison keeps the earliest among equal sizes.
    let mut keep = 0;
    for (i, component) in components.iter().enumerate() {
        if component.len() > components[keep].len() {
            keep = i;
        }
    }
    let kept: &BTreeSet<String> = &components[keep];

    let mut pruned = network.clone();
    let mut removed_node_ids = Vec::new();
    let mut removed_edge_ids = Vec::new();
    for node in network.nodes() {
        if kept.contains(&node.id) {
            continue;
        }
        let (node, edges) = pruned.remove_node(&node.id).expect("node present");
        removed_node_ids.push(node.id);
        removed_edge_ids.extend(edges.into_iter().map(|e| e.id));
    }
    removed_edge_ids.sort();

    Ok((
        pruned,
        PruneReport {
            removed_node_ids,
            removed_edge_ids,
            kept_component_size: kept.len(),
        },
    ))
}
