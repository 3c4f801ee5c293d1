//! Validating a synthetic network against a reference profile.
//!
//! A synthetic topology is only useful if its statistics resemble the real
//! system it stands in for. This example profiles a reference network and a
//! synthetic candidate, scores the candidate with per-metric tolerances, and
//! prints the report both ways.
//!
//! Run with: cargo run -p commnet --example compare_profiles

use commnet::{
    compare_profiles, statistics_profile, Edge, EdgeType, Network, Node, NodeType, ToleranceSpec,
};

fn reference_network() -> Result<Network, Box<dyn std::error::Error>> {
    let mut net = Network::new();
    for (id, node_type) in [
        ("cc1", NodeType::ControlCenter),
        ("t1", NodeType::Transmission),
        ("t2", NodeType::Transmission),
        ("t3", NodeType::Transmission),
        ("g1", NodeType::Generating),
    ] {
        net.add_node(Node::new(id, "", node_type))?;
    }
    for (id, a, b, edge_type) in [
        ("l1", "cc1", "t1", EdgeType::Fiber),
        ("l2", "t1", "t2", EdgeType::Plc),
        ("l3", "t2", "t3", EdgeType::Plc),
        ("l4", "t3", "g1", EdgeType::Fiber),
        ("l5", "t1", "t3", EdgeType::Leased),
    ] {
        net.add_edge(Edge::new(id, a, b, edge_type))?;
    }
    Ok(net)
}

/// Same station mix, but the synthesizer wired one link with the wrong medium
/// and dropped the redundant leased path.
fn synthetic_candidate() -> Result<Network, Box<dyn std::error::Error>> {
    let mut net = Network::new();
    for (id, node_type) in [
        ("s_cc", NodeType::ControlCenter),
        ("s_t1", NodeType::Transmission),
        ("s_t2", NodeType::Transmission),
        ("s_t3", NodeType::Transmission),
        ("s_g1", NodeType::Generating),
    ] {
        net.add_node(Node::new(id, "", node_type))?;
    }
    for (id, a, b, edge_type) in [
        ("l1", "s_cc", "s_t1", EdgeType::Fiber),
        ("l2", "s_t1", "s_t2", EdgeType::Plc),
        ("l3", "s_t2", "s_t3", EdgeType::Plc),
        ("l4", "s_t3", "s_g1", EdgeType::Microwave),
    ] {
        net.add_edge(Edge::new(id, a, b, edge_type))?;
    }
    Ok(net)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reference = statistics_profile(&reference_network()?, None)?;
    let candidate = statistics_profile(&synthetic_candidate()?, None)?;

    let tolerances = ToleranceSpec::default();
    let report = compare_profiles(&reference, &candidate, &tolerances)?;
    println!("{}", report.to_text());

    // looser tolerances for an early-stage synthesizer
    let relaxed = ToleranceSpec {
        matrix_cell: 0.25,
        ratio: 0.25,
        adl: 1.0,
        skewness: 0.5,
        aebc_relative: 0.5,
    };
    let relaxed_report = compare_profiles(&reference, &candidate, &relaxed)?;
    println!(
        "relaxed tolerances: {}",
        if relaxed_report.overall_pass { "PASS" } else { "still failing" }
    );

    println!("\nJSON report:\n{}", report.to_json());
    Ok(())
}
