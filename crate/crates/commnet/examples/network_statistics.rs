//! Computing the full statistics profile of a small utility-style network.
//!
//! The demo network has a microwave backbone, transmission stations branching
//! off it, generating stations at the edges and one control center. The
//! profile bundles the degree-type distribution, PLC-Fiber ratio, per-type
//! average degree load, hop-count distribution to the control center with its
//! skewness coefficient, and per-type average edge betweenness.
//!
//! Run with: cargo run -p commnet --example network_statistics

use commnet::metrics::{edge_betweenness, statistics_profile};
use commnet::{simplify, Edge, EdgeType, Network, Node, NodeType};

fn demo_network() -> Result<Network, Box<dyn std::error::Error>> {
    let mut net = Network::new();
    let stations = [
        ("cc1", "dispatch", NodeType::ControlCenter),
        ("mw1", "ridge relay", NodeType::Microwave),
        ("mw2", "valley relay", NodeType::Microwave),
        ("t1", "substation", NodeType::Transmission),
        ("t2", "substation", NodeType::Transmission),
        ("t3", "substation", NodeType::Transmission),
        ("t4", "substation", NodeType::Transmission),
        ("g1", "hydro plant", NodeType::Generating),
        ("g2", "gas plant", NodeType::Generating),
        ("o1", "district office", NodeType::Office),
    ];
    for (id, label, node_type) in stations {
        net.add_node(Node::new(id, label, node_type))?;
    }
    let links = [
        ("l01", "cc1", "mw1", EdgeType::Microwave),
        ("l02", "mw1", "mw2", EdgeType::Microwave),
        ("l03", "mw1", "t1", EdgeType::Microwave),
        ("l04", "mw2", "t2", EdgeType::Microwave),
        ("l05", "t1", "t2", EdgeType::Plc),
        ("l06", "t2", "t3", EdgeType::Plc),
        ("l07", "t3", "g1", EdgeType::Fiber),
        ("l08", "t1", "t4", EdgeType::Fiber),
        ("l09", "t4", "g2", EdgeType::Plc),
        ("l10", "cc1", "o1", EdgeType::Leased),
        ("l11", "o1", "t4", EdgeType::Leased),
    ];
    for (id, a, b, edge_type) in links {
        net.add_edge(Edge::new(id, a, b, edge_type))?;
    }
    Ok(net)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = demo_network()?;

    // control centers are auto-detected when none are passed
    let profile = statistics_profile(&net, None)?;
    println!("profile JSON:\n{}\n", profile.to_json());

    println!("PLC-Fiber ratio: {:.4}", profile.plc_fiber_ratio);
    for (node_type, adl) in &profile.adl {
        println!("average degree load, {node_type}: {adl:.3}");
    }
    println!(
        "pathlength mean {:.3}, mode {}, skewness {:.3}",
        profile.psl_histogram.mean, profile.psl_histogram.mode, profile.psl_histogram.skewness
    );
    println!("\nhistogram CSV:\n{}", profile.psl_histogram.to_csv());

    let most_loaded = edge_betweenness(&net)
        .into_iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("network has edges");
    println!("busiest link: {} (betweenness {:.2})", most_loaded.0, most_loaded.1);

    // the simplified model keeps connectivity but drops media types
    let simplified = simplify(&net);
    let controls = vec!["cc1".to_owned()];
    let simplified_profile = statistics_profile(&simplified, Some(&controls))?;
    println!(
        "\nsimplified: {} nodes, {} edges, skewness {:.3}",
        simplified_profile.node_count,
        simplified_profile.edge_count,
        simplified_profile.psl_histogram.skewness
    );

    Ok(())
}
