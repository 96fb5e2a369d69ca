//! The chromatic number of a graphic matroid is the arboricity of the graph:
//! the fewest forests covering its edges.

use indicolor::oracle::graph_arboricity_bound;
use indicolor::union::{chromatic_number, partition_ground_set};
use indicolor::{corpus, Matroid, Palette};

fn main() {
    let graphs = [
        ("K4", 4, corpus::k4_edges()),
        ("K5", 5, corpus::complete_graph_edges(5)),
        ("K3,3", 6, corpus::complete_bipartite_edges(3, 3)),
        ("Petersen", 10, corpus::petersen_edges()),
    ];
    for (name, vertices, edges) in graphs {
        let m = Matroid::graphic(vertices, edges.clone()).unwrap();
        let chi = chromatic_number(&m).unwrap();
        let formula = graph_arboricity_bound(vertices, &edges).unwrap();
        println!("{name}: {chi} forests (density formula gives {formula})");
        let cover = partition_ground_set(&Palette::copies(&m, chi))
            .into_cover()
            .unwrap();
        for (i, forest) in cover.parts().iter().enumerate() {
            let list: Vec<_> = forest.iter().map(|e| edges[e]).collect();
            println!("  forest {}: {list:?}", i + 1);
        }
    }
}
