//! Seeded random scenes and deformed copies of the eight-edge scene, with a
//! short run of the theorem suite.

use sodvis::harness::{perturbed_eight_edge, random_scene, theorem_suite, TrialConfig};
use sodvis::scene::validate_scene;
use sodvis::visibility::World;

fn main() {
    let cfg = TrialConfig::default().with_seed(11);
    let s = random_scene(&cfg).expect("placement");
    println!(
        "random scene: {} triangles, valid: {}",
        s.polygons().len(),
        validate_scene(&s).is_valid()
    );
    let (copy, p) = perturbed_eight_edge(11);
    let w = World::scene(&copy);
    println!(
        "deformed copy: valid {}, viewpoint {p} sees {} vertices, counts {:?}",
        validate_scene(&copy).is_valid(),
        w.visible_vertices(&p).len(),
        w.count_visible_edges(&p).expect("valid edges")
    );

    let r = theorem_suite(&TrialConfig { trials: 10, ..cfg });
    for t in &r.theorems {
        println!(
            "{:<72} trials {:>4}  min {:?}  pass {}",
            t.name,
            t.trials,
            t.min,
            t.pass()
        );
    }
    println!("vertex-free viewpoints analysed: {}", r.sod.viewpoints);
}
