//! Modeling and statistics toolkit for utility communication networks.
//!
//! Power-grid communication systems are typed multigraphs: stations
//! (microwave relays, transmission and generating stations, offices, control
//! centers, ...) joined by links of different media (microwave, PLC, fiber,
//! leased, radio), with parallel links between the same pair of stations.
//! Real models of this kind are confidential, so synthetic replacements need
//! a way to be judged against reality. This crate provides the pieces:
//!
//! - [`model`]: the typed undirected multigraph ([`Network`]) with
//!   connectivity queries and a parallel-edge-collapsing simple-graph view;
//! - [`ingest`]: a canonical CSV format for node/edge lists, strict parsing,
//!   byte-stable export, and island pruning down to the largest component;
//! - [`simplify`](mod@simplify): collapses microwave relay stations by circularly linking
//!   their neighbors, turning a detailed station-level model into a pure
//!   inter-substation connectivity model;
//! - [`metrics`]: degree-type distribution, PLC-Fiber ratio, average degree
//!   load per station type, hop-count distribution to the nearest control
//!   center with a mode-based skewness coefficient, and edge betweenness
//!   centrality averaged per link type — bundled into a serializable
//!   [`StatisticsProfile`];
//! - [`compare`]: tolerance-based scoring of a candidate profile against a
//!   reference, the validation step for synthetic networks.
//!
//! # Quick start
//!
//! ```
//! use commnet::{Edge, EdgeType, Network, Node, NodeType};
//!
//! let mut net = Network::new();
//! net.add_node(Node::new("cc1", "control center", NodeType::ControlCenter))?;
//! net.add_node(Node::new("t1", "substation", NodeType::Transmission))?;
//! net.add_node(Node::new("g1", "plant", NodeType::Generating))?;
//! net.add_edge(Edge::new("l1", "cc1", "t1", EdgeType::Fiber))?;
//! net.add_edge(Edge::new("l2", "t1", "g1", EdgeType::Plc))?;
//!
//! let profile = commnet::metrics::statistics_profile(&net, None)?;
//! assert_eq!(profile.psl_histogram.mean, 1.0);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run -p commnet --example build_network       # model construction and queries
//! cargo run -p commnet --example parse_and_prune     # CSV ingest, island pruning, export
//! cargo run -p commnet --example simplify_network    # microwave collapse walkthrough
//! cargo run -p commnet --example network_statistics  # full statistics profile
//! cargo run -p commnet --example compare_profiles    # validating a synthetic candidate
//! ```
//!
//! The `commnet` binary wires the same operations into batch workflows; see
//! `commnet --help`.

pub mod cli;
pub mod compare;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod simplify;

pub use compare::{compare_profiles, ComparisonReport, ToleranceSpec};
pub use ingest::{export_network, parse_network, prune_islands, PruneReport};
pub use metrics::{statistics_profile, PathLengthHistogram, StatisticsProfile};
pub use model::{Edge, EdgeType, Network, Node, NodeType};
pub use simplify::simplify;
