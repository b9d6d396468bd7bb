//! Every open hemisphere contains the eye of some swirl. Walk a few random
//! hemispheres of the eight-edge diagram and report the swirl found.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sodvis::geom::Point3;
use sodvis::scene::eight_edge_scene;
use sodvis::sod::{swirl_in_hemisphere, Hemisphere};
use sodvis::sphere::build_sod;
use sodvis::visibility::World;

fn main() {
    let w = World::scene(&eight_edge_scene());
    let sod = build_sod(&w, &Point3::origin()).expect("origin sees no vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut n = 0;
    while n < 8 {
        let mut c = || rng.gen_range(-50..=50);
        let Some(h) = Hemisphere::new(Point3::int(c(), c(), c())) else {
            continue;
        };
        n += 1;
        match swirl_in_hemisphere(&sod, &h) {
            Ok(walk) => {
                let inside = walk.swirl.corners.iter().all(|d| h.contains(d));
                println!(
                    "pole {:<12} {} legs, {:?} swirl {:?}, eye inside: {inside}",
                    h.pole.to_string(),
                    walk.legs.len(),
                    walk.swirl.orientation,
                    walk.swirl.arcs
                );
            }
            Err(e) => println!("pole {}: {e}", h.pole),
        }
    }
}
