//! Weak and positive edge counts of a regular tetrahedron and a unit cube
//! from a few viewpoints.

use sodvis::geom::{rat, Point3, Rat};
use sodvis::scene::{cube, tetrahedron};
use sodvis::visibility::World;

fn report(name: &str, w: &World, p: &Point3) {
    let (weak, positive) = w.count_visible_edges(p).expect("valid edges");
    println!(
        "{name:<28} {:<24} {:?}  weak {weak:>2}  positive {positive:>2}  vertices {}",
        p.to_string(),
        w.classify_point(p),
        w.visible_vertices(p).len()
    );
}

fn main() {
    let t = World::polyhedron(&tetrahedron());
    report("tetrahedron centroid", &t, &Point3::origin());
    // just outside the centre of the facet opposite (-1, -1, 1)
    let outside = Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30));
    report("tetrahedron over a facet", &t, &outside);
    report("tetrahedron far away", &t, &Point3::int(10, 7, 3));
    report("tetrahedron at a vertex", &t, &Point3::int(1, 1, 1));

    let c = World::polyhedron(&cube(&Rat::one()).expect("unit cube"));
    let h = rat(1, 2);
    report(
        "cube centroid",
        &c,
        &Point3::new(h.clone(), h.clone(), h.clone()),
    );
    report(
        "cube off-centre",
        &c,
        &Point3::new(rat(1, 10), rat(9, 10), rat(1, 3)),
    );
    report("cube corner view", &c, &Point3::int(3, 3, 3));
}
