//! A point inside a spike of the brush polyhedron sees only the six edges
//! of that spike.

use sodvis::geom::{rat, Point3};
use sodvis::scene::brush;
use sodvis::visibility::World;

fn main() {
    let poly = brush(2).expect("brush");
    let w = World::polyhedron(&poly);
    println!(
        "brush(2): {} facets, {} edges, {} vertices",
        w.polygons().len(),
        w.edges().len(),
        w.vertices().len()
    );
    let near_tip = Point3::new(rat(1, 2), rat(5, 12), rat(49, 10));
    let r = w.visibility_report(&near_tip).expect("valid edges");
    println!(
        "from {near_tip}: weak {} positive {} ({:?})",
        r.weak_count,
        r.positive_count,
        w.classify_point(&near_tip)
    );
    for e in r.edges.iter().filter(|e| !e.seen.is_empty()) {
        let (a, b) = &w.edges()[e.edge];
        println!("  edge {:>3} {a} -> {b}  seen {:?}", e.edge, e.seen);
    }
}
