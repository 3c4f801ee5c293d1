//! Collapses microwave stations into direct inter-substation connectivity.
//!
//! Microwave stations relay traffic between substations; in a pure
//! connectivity model they are noise. [`simplify`] removes them one at a
//! time, in ascending id order: a station with two or more distinct
//! neighbors has those neighbors circularly linked before the station and
//! its incident edges are deleted, a station with at most one neighbor is
//! deleted outright. Circular linking walks the neighbor ids in ascending
//! order and connects consecutive ids (closing the cycle back to the first),
//! skipping any adjacency that already exists, so the removed station's
//! neighbors stay mutually reachable and no parallel edges accumulate.
//! Because link media lose their meaning once edges are synthesized, every
//! edge type in the output is set to `untyped`.
//!
//! Created edges are named `simpl_0`, `simpl_1`, ... in creation order,
//! continuing past any `simpl_<n>` ids already present, which keeps repeated
//! runs deterministic and collision-free.

use crate::model::{Edge, EdgeType, GraphError, Network, NodeType};

/// Connects the given nodes into a cycle of `untyped` edges, in ascending id
/// order: one edge for a pair, a closed cycle for three or more, nothing for
/// fewer than two. Edges whose adjacency already exists are skipped. Returns
/// the created edge ids.
pub fn circular_link(network: &mut Network, node_ids: &[String]) -> Result<Vec<String>, GraphError> {
    for id in node_ids {
        if !network.contains_node(id) {
            return Err(GraphError::UnknownNode(id.clone()));
        }
    }
    let mut ids: Vec<&str> = node_ids.iter().map(String::as_str).collect();
    ids.sort_unstable();
    ids.dedup();
    let mut next = next_created_index(network);
    Ok(link_cycle(network, &ids, &mut next))
}

/// Returns a copy of the network with every microwave station removed per the
/// circular-link procedure and all remaining edge types set to `untyped`.
/// The input is not mutated.
pub fn simplify(network: &Network) -> Network {
    let mut out = network.clone();
    let mut next = next_created_index(&out);

    loop {
        // recompute after each removal: deleting a station changes the
        // neighbor sets of the stations still queued
        let station = out
            .nodes()
            .find(|n| n.node_type == NodeType::Microwave)
            .map(|n| n.id.clone());
        let Some(station) = station else { break };

        let neighbors: Vec<String> = out
            .neighbors(&station)
            .expect("station present")
            .into_iter()
            .map(str::to_owned)
            .collect();
        if neighbors.len() >= 2 {
            let refs: Vec<&str> = neighbors.iter().map(String::as_str).collect();
            link_cycle(&mut out, &refs, &mut next);
        }
        out.remove_node(&station).expect("station present");
    }

    let edge_ids: Vec<String> = out.edges().map(|e| e.id.clone()).collect();
    for id in edge_ids {
        out.set_edge_type(&id, EdgeType::Untyped).expect("edge present");
    }
    out
}

/// `ids` must be sorted, de-duplicated, self-excluded and present in the
/// network.
fn link_cycle(network: &mut Network, ids: &[&str], next: &mut u64) -> Vec<String> {
    let mut created = Vec::new();
    match ids.len() {
        0 | 1 => {}
        2 => {
            if let Some(id) = link_pair(network, ids[0], ids[1], next) {
                created.push(id);
            }
        }
        k => {
            for i in 0..k {
                let (a, b) = (ids[i], ids[(i + 1) % k]);
                if let Some(id) = link_pair(network, a, b, next) {
                    created.push(id);
                }
            }
        }
    }
    created
}

fn link_pair(network: &mut Network, a: &str, b: &str, next: &mut u64) -> Option<String> {
    if network.has_adjacency(a, b) {
        return None;
    }
    let id = format!("simpl_{next}");
    *next += 1;
    network
        .add_edge(Edge::new(id.clone(), a, b, EdgeType::Untyped))
        .expect("endpoints exist and id is fresh");
    Some(id)
}

fn next_created_index(network: &Network) -> u64 {
    network
        .edges()
        .filter_map(|e| e.id.strip_prefix("simpl_"))
        .filter_map(|n| n.parse::<u64>().ok())
        .map(|n| n + 1)
        .max()
        .unwrap_or(0)
}
