//! A dissection and its dual tree: one node per piece, one leaf per side.

use mosaic::polygon::{Dissection, TreeEnd};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Dissection::new(vec![1, 2, 3, 4, 5, 6, 7], [(0, 2), (0, 4), (4, 6)])?;
    println!("dissection {g}");
    println!("pieces {:?} (sizes {:?})", g.regions(), g.region_sizes());
    let t = g.dual_tree();
    println!("dual tree: {} nodes, {} leaves, internal edges {:?}", t.node_count(), t.leaf_count(), t.edges());
    for node in 0..t.node_count() {
        let around: Vec<String> = t
            .neighbors(node)
            .iter()
            .map(|e| match e {
                TreeEnd::Node(m) => format!("node {m}"),
                TreeEnd::Leaf(p) => format!("side {}", t.leaf_label(*p)),
            })
            .collect();
        println!("  node {node}: {}", around.join(", "));
    }
    println!("reading the leaves around the tree gives {:?}", t.boundary_labels());
    println!("dihedral canonical form {}", g.dihedral_canonical());
    Ok(())
}
