//! Parsing the canonical CSV format, pruning island nodes, re-exporting.
//!
//! Run with: cargo run -p commnet --example parse_and_prune

use commnet::{export_network, parse_network, prune_islands};

const NODES: &str = "\
node_id,label,node_type
cc1,regional control,control_center
t1,substation north,transmission
t2,substation south,transmission
g1,\"hydro plant, unit 1\",generating
x1,abandoned repeater,repeater
x2,abandoned repeater,repeater
";

const EDGES: &str = "\
edge_id,source_id,target_id,edge_type
l1,cc1,t1,fiber
l2,t1,t2,plc
l3,t2,g1,plc
l4,x1,x2,radio
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let network = parse_network(NODES, EDGES)?;
    println!(
        "parsed {} nodes / {} edges across {} component(s)",
        network.node_count(),
        network.edge_count(),
        network.connected_components().len()
    );

    let (pruned, report) = prune_islands(&network)?;
    println!(
        "pruned islands: removed nodes {:?}, removed edges {:?}, kept {}",
        report.removed_node_ids, report.removed_edge_ids, report.kept_component_size
    );

    let (nodes_text, edges_text) = export_network(&pruned);
    println!("--- nodes.csv ---\n{nodes_text}");
    println!("--- edges.csv ---\n{edges_text}");

    // strict parsing: unknown tokens are errors, not coercions
    let bad = NODES.replace("control_center", "mothership");
    match parse_network(&bad, EDGES) {
        Err(err) => println!("rejected as expected: {err}"),
        Ok(_) => unreachable!("unknown type token must not parse"),
    }

    Ok(())
}
