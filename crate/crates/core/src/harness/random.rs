//! Seeded instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{collinear, Point3, Rat};
use crate::scene::{eight_edge_scene, interiors_overlap, validate_scene, Isometry, Polygon, Scene};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    /// Triangles per random scene.
    pub triangles: usize,
    /// Coordinates lie in `[-bound, bound]`.
    pub bound: Rat,
    /// Random viewpoints per world.
    pub viewpoints: usize,
}

impl Default for TrialConfig {
    fn default() -> TrialConfig {
        TrialConfig {
            seed: 1,
            trials: 100,
            triangles: 6,
            bound: Rat::int(20),
            viewpoints: 3,
        }
    }
}

impl TrialConfig {
    pub fn with_seed(&self, seed: u64) -> TrialConfig {
        TrialConfig {
            seed,
            ..self.clone()
        }
    }

    /// Seed for trial `i`, independent of the others.
    pub fn trial_seed(&self, i: usize) -> u64 {
        self.seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(i as u64)
            .rotate_left(17)
            ^ 0x5851_F42D_4C95_7F2D
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("a scene needs at least one polygon")]
    Empty,
    #[error("coordinate bound must be positive")]
    BadBound,
    #[error("no disjoint placement for triangle {0} after {1} attempts")]
    Exhausted(usize, usize),
}

const GRID: i64 = 64;
const ATTEMPTS: usize = 500;

/// Rational in `[-bound, bound]` on a grid of step `bound / 64`.
pub fn random_coord(rng: &mut ChaCha8Rng, bound: &Rat) -> Rat {
    &Rat::new(rng.gen_range(-GRID..=GRID), GRID) * bound
}

pub fn random_point(rng: &mut ChaCha8Rng, bound: &Rat) -> Point3 {
    Point3::new(
        random_coord(rng, bound),
        random_coord(rng, bound),
        random_coord(rng, bound),
    )
}

/// Triangles placed by rejection sampling so that no two interiors overlap.
pub fn random_scene(cfg: &TrialConfig) -> Result<Scene, GenError> {
    if cfg.triangles == 0 {
        return Err(GenError::Empty);
    }
    if !cfg.bound.is_positive() {
        return Err(GenError::BadBound);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut polys: Vec<Polygon> = Vec::new();
    for i in 0..cfg.triangles {
        let mut placed = false;
        for _ in 0..ATTEMPTS {
            let [a, b, c] = [0; 3].map(|_| random_point(&mut rng, &cfg.bound));
            if collinear(&a, &b, &c) {
                continue;
            }
            let Ok(t) = Polygon::new(format!("t{i}"), vec![a, b, c]) else {
                continue;
            };
            if polys.iter().all(|q| !interiors_overlap(q, &t)) {
                polys.push(t);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(GenError::Exhausted(i, ATTEMPTS));
        }
    }
    Ok(Scene::new(polys))
}

fn random_signed_permutation(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let perm = perms[rng.gen_range(0..6)];
    let mut m = [[0; 3]; 3];
    for (r, &c) in perm.iter().enumerate() {
        m[r][c] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    m
}

fn jitter(rng: &mut ChaCha8Rng, den: i64, reach: i64) -> Point3 {
    let mut c = || Rat::new(rng.gen_range(-reach..=reach), den);
    Point3::new(c(), c(), c())
}

/// A moved and slightly deformed copy of the eight-edge scene with a
/// viewpoint near the image of its centre: triangle corners move by up to
/// 1/40 each, rectangles as a whole, the viewpoint by up to 1/10.
pub fn perturbed_eight_edge(seed: u64) -> (Scene, Point3) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = random_signed_permutation(&mut rng);
        let t = (
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
        );
        let iso = Isometry::from_int(m, t).expect("signed permutation");
        let mut polys = Vec::new();
        for poly in eight_edge_scene().polygons() {
            let shift = jitter(&mut rng, 400, 10);
            let rigid = poly.vertices().count() == 4;
            let moved = poly.map_points(|v| {
                let d = if rigid {
                    shift.clone()
                } else {
                    jitter(&mut rng, 400, 10)
                };
                iso.apply(&(v + &d))
            });
            if let Ok(q) = moved {
                polys.push(q);
            }
        }
        let scene = Scene::new(polys);
        if scene.polygons().len() == 6 && validate_scene(&scene).is_valid() {
            let p = iso.apply(&jitter(&mut rng, 100, 10));
            return (scene, p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_scenes_are_valid_and_repeatable() {
        let cfg = TrialConfig {
            seed: 1,
            triangles: 5,
            ..TrialConfig::default()
        };
        let s = random_scene(&cfg).unwrap();
        assert_eq!(s.polygons().len(), 5);
        assert!(validate_scene(&s).is_valid());
        assert_eq!(random_scene(&cfg).unwrap(), s);
        assert_ne!(random_scene(&cfg.with_seed(2)).unwrap(), s);
        assert_eq!(
            random_scene(&TrialConfig {
                triangles: 0,
                ..cfg
            }),
            Err(GenError::Empty)
        );
    }

    #[test]
    fn perturbed_copies_are_valid() {
        for seed in 0..5 {
            let (s, _) = perturbed_eight_edge(seed);
            assert!(validate_scene(&s).is_valid());
        }
    }
}
