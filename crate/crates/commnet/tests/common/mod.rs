//! Seeded random network generators shared by the integration suites.

use commnet::model::{Edge, EdgeType, Network, Node, NodeType};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_node_type(rng: &mut ChaCha8Rng) -> NodeType {
    *NodeType::ALL.choose(rng).expect("non-empty")
}

pub fn random_edge_type(rng: &mut ChaCha8Rng) -> EdgeType {
    *EdgeType::ALL.choose(rng).expect("non-empty")
}

pub fn random_label(rng: &mut ChaCha8Rng) -> String {
    const ALPHABET: &[char] = &[
        'a', 'b', 'c', 'x', 'y', 'z', '0', '1', '9', ' ', ',', '"', '.', '_', '-',
    ];
    let len = rng.gen_range(0..12);
    (0..len)
        .map(|_| *ALPHABET.choose(rng).expect("non-empty"))
        .collect()
}

fn node_id(i: usize) -> String {
    format!("n{i:03}")
}

/// Connected network: a random spanning tree plus `extra` random edges
/// (parallels allowed). Node and edge types are uniform random.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Network {
    assert!(n >= 1);
    let mut net = Network::new();
    for i in 0..n {
        let label = random_label(rng);
        net.add_node(Node::new(node_id(i), label, random_node_type(rng)))
            .expect("fresh id");
    }
    let mut next_edge = 0usize;
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let edge_type = random_edge_type(rng);
        net.add_edge(Edge::new(format!("e{next_edge:03}"), node_id(i), node_id(j), edge_type))
            .expect("valid tree edge");
        next_edge += 1;
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let edge_type = random_edge_type(rng);
        net.add_edge(Edge::new(format!("e{next_edge:03}"), node_id(a), node_id(b), edge_type))
            .expect("valid extra edge");
        next_edge += 1;
    }
    net
}

/// Arbitrary network, possibly disconnected, parallels allowed.
pub fn random_network(rng: &mut ChaCha8Rng, n: usize, edges: usize) -> Network {
    let mut net = Network::new();
    for i in 0..n {
        let label = random_label(rng);
        net.add_node(Node::new(node_id(i), label, random_node_type(rng)))
            .expect("fresh id");
    }
    let mut next_edge = 0usize;
    for _ in 0..edges {
        if n < 2 {
            break;
        }
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let edge_type = random_edge_type(rng);
        net.add_edge(Edge::new(format!("e{next_edge:03}"), node_id(a), node_id(b), edge_type))
            .expect("valid edge");
        next_edge += 1;
    }
    net
}

/// Connected network with exactly `microwave` nodes of microwave type; the
/// rest draw from the other types.
pub fn random_connected_with_microwave(
    rng: &mut ChaCha8Rng,
    n: usize,
    microwave: usize,
    extra: usize,
) -> Network {
    assert!(microwave < n);
    let mut indices: Vec<usize> = (0..n).collect();
    indices.shuffle(rng);

    let mut net = Network::new();
    for (rank, i) in indices.iter().enumerate() {
        let node_type = if rank < microwave {
            NodeType::Microwave
        } else {
            loop {
                let t = random_node_type(rng);
                if t != NodeType::Microwave {
                    break t;
                }
            }
        };
        net.add_node(Node::new(node_id(*i), random_label(rng), node_type))
            .expect("fresh id");
    }
    let mut next_edge = 0usize;
    for i in 1..n {
        let j = rng.gen_range(0..i);
        net.add_edge(Edge::new(
            format!("e{next_edge:03}"),
            node_id(i),
            node_id(j),
            random_edge_type(rng),
        ))
        .expect("valid tree edge");
        next_edge += 1;
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        net.add_edge(Edge::new(
            format!("e{next_edge:03}"),
            node_id(a),
            node_id(b),
            random_edge_type(rng),
        ))
        .expect("valid extra edge");
        next_edge += 1;
    }
    net
}

/// Non-empty random subset of the network's node ids.
pub fn random_controls(rng: &mut ChaCha8Rng, network: &Network) -> Vec<String> {
    let ids: Vec<String> = network.nodes().map(|n| n.id.clone()).collect();
    let count = rng.gen_range(1..=ids.len());
    let mut picked = ids;
    picked.shuffle(rng);
    picked.truncate(count);
    picked.sort();
    picked
}
