// Builds each graph family, prints its size and degree profile, and shows
// how vertex ids map to roles.
//
//     cargo run --example graph_families

use thresholdlab::{FamilySpec, Graph, VertexRole};

pub fn run_example() -> thresholdlab::Result<()> {
    for spec in [
        FamilySpec::cycle(6),
        FamilySpec::complete(4),
        FamilySpec::corona(5, 3),
        FamilySpec::double_corona(4, 2),
    ] {
        let graph = spec.build()?;
        assert_eq!(graph.num_vertices(), spec.num_vertices());
        assert_eq!(graph.num_edges(), spec.num_edges());
        println!(
            "{spec}: |V| = {}, |E| = {}, degrees {:?}",
            graph.num_vertices(),
            graph.num_edges(),
            graph.degree_histogram()
        );
    }

    let spec = FamilySpec::double_corona(4, 2);
    let graph = spec.build()?;
    for v in [
        spec.inner(1),
        spec.outer(1),
        spec.block(1, 1),
        spec.block(4, 2),
    ] {
        let role = graph.role(v).expect("double coronas carry roles");
        println!(
            "  vertex {v:>2} = {:<10} neighbours {:?}",
            role.to_string(),
            graph.neighbors(v)
        );
    }
    let role: VertexRole = "Block(3,2)".parse()?;
    println!("  {role} is vertex {:?}", spec.vertex(role));

    let json = serde_json::to_string(&graph.to_json()).expect("graph serializes");
    let back = Graph::from_json(&serde_json::from_str(&json).expect("valid json"))?;
    assert_eq!(back.to_json(), graph.to_json());
    println!("  JSON round trip: {} bytes", json.len());
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
