//! Constructing a network in memory and querying its structure.
//!
//! Run with: cargo run -p commnet --example build_network

use commnet::{Edge, EdgeType, Network, Node, NodeType};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut net = Network::new();

    net.add_node(Node::new("cc1", "regional control center", NodeType::ControlCenter))?;
    net.add_node(Node::new("t1", "substation north", NodeType::Transmission))?;
    net.add_node(Node::new("t2", "substation south", NodeType::Transmission))?;
    net.add_node(Node::new("g1", "hydro plant", NodeType::Generating))?;
    net.add_node(Node::new("islanded", "defunct station", NodeType::Other))?;

    net.add_edge(Edge::new("l1", "cc1", "t1", EdgeType::Fiber))?;
    net.add_edge(Edge::new("l2", "t1", "t2", EdgeType::Plc))?;
    net.add_edge(Edge::new("l3", "t2", "g1", EdgeType::Plc))?;
    // a parallel backup link between the same stations
    net.add_edge(Edge::new("l4", "t1", "t2", EdgeType::Leased))?;

    println!("{} nodes, {} edges", net.node_count(), net.edge_count());
    println!("neighbors of t1: {:?}", net.neighbors("t1")?);
    println!("degree of t1 (parallels count): {}", net.degree("t1")?);

    // self-loops are rejected outright
    let loop_err = net.add_edge(Edge::new("bad", "t1", "t1", EdgeType::Radio));
    println!("self-loop attempt: {}", loop_err.unwrap_err());

    for (i, component) in net.connected_components().iter().enumerate() {
        println!("component {i}: {component:?}");
    }

    // collapse parallel links into a simple-graph view
    let collapsed = net.collapse_parallel();
    println!(
        "collapsed: {} endpoint pairs (from {} edges)",
        collapsed.edge_count(),
        net.edge_count()
    );
    println!("t1-t2 carries: {:?}", collapsed.edge_ids("t1", "t2"));

    Ok(())
}
