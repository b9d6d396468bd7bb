//! Frozen outputs for fixed inputs.

use sodvis::geom::{rat, Point3};
use sodvis::scene::{brush, eight_edge_scene, tetrahedron};
use sodvis::sod::{analyze, Orientation};
use sodvis::sphere::build_sod;
use sodvis::visibility::World;

#[test]
fn eight_edge_diagram() {
    let s = eight_edge_scene();
    assert_eq!(s.edges().len(), 20);
    let w = World::scene(&s);
    let p = Point3::origin();
    let sod = build_sod(&w, &p).unwrap();
    assert_eq!(sod.len(), 8);
    let edges: Vec<usize> = sod.arcs().iter().map(|a| a.source_edge.unwrap()).collect();
    assert_eq!(edges, vec![1, 3, 4, 6, 9, 12, 15, 18]);
    let r = analyze(&sod, Some((&w, &p))).unwrap();
    assert_eq!(r.faces, 10);
    let swirls: Vec<(Orientation, Vec<usize>)> = r
        .swirls
        .iter()
        .map(|s| (s.orientation, s.arcs.clone()))
        .collect();
    assert_eq!(
        swirls,
        vec![
            (Orientation::Cw, vec![1, 5, 4]),
            (Orientation::Cw, vec![0, 7, 6]),
            (Orientation::Ccw, vec![2, 6, 5]),
            (Orientation::Ccw, vec![3, 4, 7]),
        ]
    );
    assert_eq!(r.swirl_graph.edges.len(), 4);
    assert_eq!(
        r.contact_graph.out,
        vec![
            vec![5, 7],
            vec![7, 5],
            vec![4, 6],
            vec![6, 4],
            vec![1, 7],
            vec![2, 4],
            vec![0, 5],
            vec![3, 6]
        ]
    );
    let cover = r.cover.as_ref().unwrap();
    assert_eq!(cover.check.size, 8);
    assert!(r.law_failures().is_empty());
}

#[test]
fn tetrahedron_and_brush_counts() {
    let t = World::polyhedron(&tetrahedron());
    assert_eq!(t.count_visible_edges(&Point3::origin()).unwrap(), (6, 6));
    let over = Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30));
    assert_eq!(t.count_visible_edges(&over).unwrap(), (6, 3));

    let b = World::polyhedron(&brush(2).unwrap());
    let tip = Point3::new(rat(1, 2), rat(5, 12), rat(49, 10));
    assert_eq!(b.count_visible_edges(&tip).unwrap(), (6, 6));
    // a single point of edge 3 is seen through the gap between two facets
    let p = Point3::new(rat(7, 12), rat(17, 36), rat(7, 3));
    assert_eq!(b.count_visible_edges(&p).unwrap(), (31, 21));
    let v = b.edge_visibility(&p, 3).unwrap();
    assert_eq!(v.seen.intervals.len(), 1);
    assert!(v.seen.intervals[0].is_degenerate());
    assert_eq!(v.seen.intervals[0].lo, rat(1, 24));
    assert!(v.clear.is_empty());
}
