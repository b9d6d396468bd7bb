//! The spherical occlusion diagram of the eight-edge scene seen from the
//! origin: arcs, who feeds into whom, swirls and the two graphs.

use sodvis::geom::Point3;
use sodvis::scene::eight_edge_scene;
use sodvis::sod::analyze;
use sodvis::sphere::build_sod;
use sodvis::visibility::World;

fn main() {
    let w = World::scene(&eight_edge_scene());
    let p = Point3::origin();
    let sod = build_sod(&w, &p).expect("origin sees no vertex");
    for (a, arc) in sod.arcs().iter().enumerate() {
        let e = arc.source_edge.expect("projected arc");
        println!(
            "arc {a}: edge {:<6} {} -> {}  feeds into {:?}",
            w.edge_label(e),
            arc.u,
            arc.v,
            sod.feeds_into(a)
        );
    }
    let r = analyze(&sod, Some((&w, &p))).expect("swirls");
    println!("{} faces, connected: {}", r.faces, r.connected);
    for s in &r.swirls {
        println!(
            "{:?} swirl through arcs {:?}, eye face {:?}",
            s.orientation, s.arcs, s.eye
        );
    }
    for e in &r.swirl_graph.edges {
        println!(
            "swirl {} -- swirl {} share arc {}",
            e.swirls[0], e.swirls[1], e.arc
        );
    }
    println!("contact graph out-lists {:?}", r.contact_graph.out);
    println!("law failures: {:?}", r.law_failures());
}
