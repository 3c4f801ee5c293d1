//! Collapsing microwave relay stations into direct substation connectivity.
//!
//! Two small scenarios: a microwave hub whose neighbors get circularly
//! linked into a triangle, and a degree-1 relay that is simply dropped.
//!
//! Run with: cargo run -p commnet --example simplify_network

use commnet::{export_network, simplify, Edge, EdgeType, Network, Node, NodeType};

fn show(title: &str, net: &Network) {
    let (nodes, edges) = export_network(net);
    println!("=== {title}: {} nodes, {} edges", net.node_count(), net.edge_count());
    print!("{nodes}");
    print!("{edges}");
    println!();
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // scenario 1: hub-and-spoke around a microwave station
    let mut star = Network::new();
    star.add_node(Node::new("mw1", "ridge relay", NodeType::Microwave))?;
    for id in ["t1", "t2", "t3"] {
        star.add_node(Node::new(id, "substation", NodeType::Transmission))?;
    }
    star.add_edge(Edge::new("l1", "mw1", "t1", EdgeType::Microwave))?;
    star.add_edge(Edge::new("l2", "mw1", "t2", EdgeType::Microwave))?;
    star.add_edge(Edge::new("l3", "mw1", "t3", EdgeType::Microwave))?;

    show("star before", &star);
    show("star after (neighbors circularly linked)", &simplify(&star));

    // scenario 2: a relay hanging off the end of a chain
    let mut chain = Network::new();
    chain.add_node(Node::new("t1", "substation", NodeType::Transmission))?;
    chain.add_node(Node::new("t2", "substation", NodeType::Transmission))?;
    chain.add_node(Node::new("mw2", "spur relay", NodeType::Microwave))?;
    chain.add_edge(Edge::new("l1", "t1", "t2", EdgeType::Fiber))?;
    chain.add_edge(Edge::new("l2", "t2", "mw2", EdgeType::Microwave))?;

    show("chain before", &chain);
    show("chain after (degree-1 relay dropped, types stripped)", &simplify(&chain));

    Ok(())
}
