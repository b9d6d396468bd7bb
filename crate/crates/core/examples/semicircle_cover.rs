//! Semicircle covers of a diagram: one induced by the scene edges, one built
//! from the arcs themselves, and random semicircles that must each cut
//! some arc.

use sodvis::geom::Point3;
use sodvis::scene::eight_edge_scene;
use sodvis::sod::{arc_cover, check_cover, induced_cover};
use sodvis::sphere::{build_sod, semicircle_pierce_test};
use sodvis::visibility::World;

fn main() {
    let w = World::scene(&eight_edge_scene());
    let p = Point3::origin();
    let sod = build_sod(&w, &p).expect("origin sees no vertex");

    let induced = induced_cover(&w, &p, &sod).expect("p is off every edge line");
    let check = check_cover(sod.arcs(), &induced);
    println!(
        "induced cover: {} semicircles, covers every arc: {}",
        check.size, check.pass
    );
    for m in &induced.members {
        println!(
            "  edge {:?}: normal {}  towards {}",
            m.edge, m.semicircle.normal, m.semicircle.m
        );
    }
    println!("arc membership {:?}", check.membership);

    let own = arc_cover(sod.arcs());
    println!(
        "per-arc cover passes: {}",
        check_cover(sod.arcs(), &own).pass
    );

    let r = semicircle_pierce_test(sod.arcs(), 1000, 9);
    println!(
        "{} random semicircles, {} miss every arc",
        r.samples,
        r.counterexamples.len()
    );
}
