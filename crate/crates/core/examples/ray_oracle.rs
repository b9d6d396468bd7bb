//! Cross-check the exact engine against brute-force ray casting.

use sodvis::geom::{rat, Point3};
use sodvis::harness::ray_oracle;
use sodvis::scene::{eight_edge_scene, tetrahedron};
use sodvis::visibility::World;

fn main() {
    let dirs = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2000);
    let cases = [
        (
            "eight-edge scene, origin",
            World::scene(&eight_edge_scene()),
            Point3::origin(),
        ),
        (
            "tetrahedron, centroid",
            World::polyhedron(&tetrahedron()),
            Point3::origin(),
        ),
        (
            "tetrahedron, over a facet",
            World::polyhedron(&tetrahedron()),
            Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30)),
        ),
    ];
    for (name, w, p) in &cases {
        let r = ray_oracle(w, p, dirs, 1);
        let edge_hits = r
            .records
            .iter()
            .filter(|h| matches!(h.hit, sodvis::harness::Hit::Edge { .. }))
            .count();
        println!(
            "{name}: {} rays ({} resampled), {edge_hits} edge hits, {} interval checks, {} disagreements",
            r.samples,
            r.resampled,
            r.interval_checks,
            r.disagreements.len()
        );
        for d in r.disagreements.iter().take(5) {
            println!("  {d:?}");
        }
    }
}
