//! Randomized checks of the edge-count theorems and the diagram laws.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::random::{perturbed_eight_edge, random_scene, TrialConfig};
use crate::geom::{rat, Point3, Rat};
use crate::scene::{brush, cube, eight_edge_scene, tetrahedron, Polyhedron, Scene};
use crate::sod::analyze;
use crate::sphere::{build_sod, semicircle_pierce_test, BuildSodError};
use crate::visibility::{PointClass, World};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub world: String,
    pub point: Point3,
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremStat {
    pub name: String,
    pub bound: usize,
    pub trials: usize,
    pub min: Option<usize>,
    pub min_at: Option<Witness>,
    pub violations: Vec<Witness>,
}

impl TheoremStat {
    fn new(name: &str, bound: usize) -> TheoremStat {
        TheoremStat {
            name: name.to_string(),
            bound,
            trials: 0,
            min: None,
            min_at: None,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, world: &str, p: &Point3, value: usize) {
        self.trials += 1;
        let w = Witness {
            world: world.to_string(),
            point: p.clone(),
            value,
            note: None,
        };
        if self.min.is_none_or(|m| value < m) {
            self.min = Some(value);
            self.min_at = Some(w.clone());
        }
        if value < self.bound {
            self.violations.push(w);
        }
    }

    fn fail(&mut self, world: &str, p: &Point3, note: String) {
        self.trials += 1;
        self.violations.push(Witness {
            world: world.to_string(),
            point: p.clone(),
            value: 0,
            note: Some(note),
        });
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SodStats {
    pub viewpoints: usize,
    pub min_arcs: Option<usize>,
    pub min_swirls: Option<usize>,
    pub min_cover: Option<usize>,
    pub max_swirls: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: TrialConfig,
    pub pass: bool,
    pub theorems: Vec<TheoremStat>,
    pub sod: SodStats,
    /// Random scenes that could not be generated.
    pub generation_failures: usize,
}

/// The builtin polyhedra.
pub fn polyhedron_corpus() -> Vec<(String, Polyhedron)> {
    vec![
        ("tetrahedron".to_string(), tetrahedron()),
        ("cube".to_string(), cube(&Rat::one()).expect("unit cube")),
        ("brush(2)".to_string(), brush(2).expect("brush")),
    ]
}

/// Fixed viewpoints where the bounds are attained.
pub fn tight_points(world: &str) -> Vec<Point3> {
    match world {
        "tetrahedron" => vec![
            Point3::origin(),
            Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30)),
        ],
        "cube" => vec![Point3::new(rat(1, 2), rat(1, 2), rat(1, 2))],
        "brush(2)" => vec![Point3::new(rat(1, 2), rat(5, 12), rat(49, 10))],
        _ => Vec::new(),
    }
}

fn random_in_box(rng: &mut ChaCha8Rng, lo: &Point3, hi: &Point3) -> Point3 {
    // the box inflated by a factor of two about its centre
    let c = lo.midpoint(hi);
    let half = hi - lo;
    let mut coord = |i: usize| {
        let u = Rat::new(rng.gen_range(-256..=256), 256);
        c.coord(i) + &(half.coord(i) * &u)
    };
    Point3::new(coord(0), coord(1), coord(2))
}

/// Random points of the inflated bounding box, then points on, just inside
/// and just outside a few facets and near a few edge midpoints.
pub fn sample_viewpoints(
    world: &World,
    lo: &Point3,
    hi: &Point3,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Point3> {
    let mut out: Vec<Point3> = (0..n).map(|_| random_in_box(rng, lo, hi)).collect();
    let polys = world.polygons();
    let step = polys.len().div_ceil(6).max(1);
    for f in polys.iter().step_by(step) {
        let c = f.vertex_centroid();
        let n = &f.plane().normal;
        let scale = n
            .coords()
            .into_iter()
            .map(Rat::abs)
            .max()
            .expect("3 coords");
        let off = n.scale(&(&Rat::new(1, 50) / &scale));
        out.push(&c + &off);
        out.push(&c - &off);
        out.push(c);
    }
    let edges = world.edges();
    let step = edges.len().div_ceil(6).max(1);
    for (a, b) in edges.iter().step_by(step) {
        let m = a.midpoint(b);
        let j = Point3::new(
            Rat::new(rng.gen_range(-8..=8), 400),
            Rat::new(rng.gen_range(-8..=8), 400),
            Rat::new(rng.gen_range(-8..=8), 400),
        );
        out.push(&m + &j);
    }
    out
}

struct Stats {
    weak6: TheoremStat,
    inner6: TheoremStat,
    outer3: TheoremStat,
    cube12: TheoremStat,
    free8: TheoremStat,
    laws: TheoremStat,
    sod: SodStats,
}

fn min_opt(m: &mut Option<usize>, v: usize) {
    if m.is_none_or(|x| v < x) {
        *m = Some(v);
    }
}

impl Stats {
    fn new() -> Stats {
        Stats {
            weak6: TheoremStat::new("any point sees at least 6 edges", 6),
            inner6: TheoremStat::new(
                "interior or boundary point sees positive portions of at least 6 edges",
                6,
            ),
            outer3: TheoremStat::new(
                "exterior point sees positive portions of at least 3 edges",
                3,
            ),
            cube12: TheoremStat::new("cube interior point sees at least 12 edges", 12),
            free8: TheoremStat::new(
                "point seeing no vertex sees positive portions of at least 8 edges",
                8,
            ),
            laws: TheoremStat::new("diagram laws at points seeing no vertex", 0),
            sod: SodStats {
                viewpoints: 0,
                min_arcs: None,
                min_swirls: None,
                min_cover: None,
                max_swirls: None,
            },
        }
    }

    fn vertex_free(
        &mut self,
        name: &str,
        world: &World,
        p: &Point3,
        positive: usize,
        pierce: usize,
    ) {
        self.free8.record(name, p, positive);
        self.sod.viewpoints += 1;
        let sod = match build_sod(world, p) {
            Ok(s) => s,
            Err(BuildSodError::VisibleVertex(_)) => unreachable!("checked by caller"),
            Err(e) => return self.laws.fail(name, p, e.to_string()),
        };
        let report = match analyze(&sod, Some((world, p))) {
            Ok(r) => r,
            Err(e) => return self.laws.fail(name, p, e.to_string()),
        };
        let mut failures = report.law_failures();
        if report.cover.is_none() {
            failures.push("induced cover".to_string());
        }
        if pierce > 0
            && !semicircle_pierce_test(sod.arcs(), pierce, positive as u64)
                .counterexamples
                .is_empty()
        {
            failures.push("semicircle missing every arc".to_string());
        }
        if failures.is_empty() {
            self.laws.record(name, p, 0);
        } else {
            self.laws.fail(name, p, failures.join(", "));
        }
        min_opt(&mut self.sod.min_arcs, report.arcs);
        min_opt(&mut self.sod.min_swirls, report.swirls.len());
        if let Some(c) = &report.cover {
            min_opt(&mut self.sod.min_cover, c.check.size);
        }
        self.sod.max_swirls = self.sod.max_swirls.max(Some(report.swirls.len()));
    }

    fn polyhedron_point(&mut self, name: &str, world: &World, p: &Point3) {
        let (weak, positive) = match world.count_visible_edges(p) {
            Ok(c) => c,
            Err(e) => return self.weak6.fail(name, p, e.to_string()),
        };
        self.weak6.record(name, p, weak);
        match world.classify_point(p) {
            PointClass::Exterior => self.outer3.record(name, p, positive),
            class => {
                self.inner6.record(name, p, positive);
                if name == "cube" && class == PointClass::Interior {
                    self.cube12.record(name, p, weak);
                }
            }
        }
        if world.visible_vertices(p).is_empty() {
            self.vertex_free(name, world, p, positive, 0);
        }
    }

    fn scene_point(&mut self, name: &str, world: &World, p: &Point3, pierce: usize) {
        if !world.visible_vertices(p).is_empty() {
            return;
        }
        match world.count_visible_edges(p) {
            Ok((_, positive)) => self.vertex_free(name, world, p, positive, pierce),
            Err(e) => self.free8.fail(name, p, e.to_string()),
        }
    }
}

fn scene_world(s: &Scene) -> (World, Point3, Point3) {
    let (lo, hi) = s.bounding_box();
    (World::scene(s), lo, hi)
}

/// Random scenes and deformed copies of the eight-edge scene; every
/// viewpoint that sees no vertex gets the full diagram analysis.
fn scene_trials(cfg: &TrialConfig, stats: &mut Stats, pierce: usize) -> usize {
    let mut failures = 0;
    let (w, _, _) = scene_world(&eight_edge_scene());
    stats.scene_point("eight_edge_scene", &w, &Point3::origin(), pierce);
    for i in 0..cfg.trials {
        let seed = cfg.trial_seed(i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match random_scene(&cfg.with_seed(seed)) {
            Ok(s) => {
                let (w, lo, hi) = scene_world(&s);
                for _ in 0..cfg.viewpoints {
                    let p = random_in_box(&mut rng, &lo, &hi);
                    stats.scene_point(&format!("random scene {i}"), &w, &p, pierce);
                }
            }
            Err(_) => failures += 1,
        }
        let (s, p) = perturbed_eight_edge(seed);
        let (w, _, _) = scene_world(&s);
        stats.scene_point(&format!("deformed eight-edge scene {i}"), &w, &p, pierce);
    }
    failures
}

fn finish(
    cfg: &TrialConfig,
    stats: Stats,
    generation_failures: usize,
    with_polyhedra: bool,
) -> SuiteReport {
    let mut theorems = Vec::new();
    if with_polyhedra {
        theorems.extend([stats.weak6, stats.inner6, stats.outer3, stats.cube12]);
    }
    theorems.extend([stats.free8, stats.laws]);
    let pass = theorems.iter().all(TheoremStat::pass);
    SuiteReport {
        config: cfg.clone(),
        pass,
        theorems,
        sod: stats.sod,
        generation_failures,
    }
}

/// All edge-count theorems over the polyhedron corpus and the eight-edge
/// scene (`cfg.trials` random viewpoints each plus targeted and tight
/// points) and `cfg.trials` random scene trials.
pub fn theorem_suite(cfg: &TrialConfig) -> SuiteReport {
    let mut stats = Stats::new();
    for (k, (name, poly)) in polyhedron_corpus().into_iter().enumerate() {
        let world = World::polyhedron(&poly);
        let (lo, hi) = poly.facets().bounding_box();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.trial_seed(usize::MAX - k));
        let mut points = tight_points(&name);
        points.extend(sample_viewpoints(&world, &lo, &hi, cfg.trials, &mut rng));
        for p in &points {
            stats.polyhedron_point(&name, &world, p);
        }
    }
    let scene = eight_edge_scene();
    let (w, lo, hi) = scene_world(&scene);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.trial_seed(usize::MAX - 3));
    for p in sample_viewpoints(&w, &lo, &hi, cfg.trials, &mut rng) {
        stats.scene_point("eight_edge_scene", &w, &p, 0);
    }
    let failures = scene_trials(cfg, &mut stats, 0);
    finish(cfg, stats, failures, true)
}

/// Only the scene trials, with `pierce` random semicircles per diagram.
pub fn sod_law_suite(cfg: &TrialConfig, pierce: usize) -> SuiteReport {
    let mut stats = Stats::new();
    let failures = scene_trials(cfg, &mut stats, pierce);
    finish(cfg, stats, failures, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scene_suite() {
        let cfg = TrialConfig {
            trials: 5,
            ..TrialConfig::default()
        };
        let r = sod_law_suite(&cfg, 20);
        assert!(r.pass, "{}", serde_json::to_string_pretty(&r).unwrap());
        assert!(r.sod.viewpoints >= 5);
        assert!(r.sod.min_swirls.unwrap() >= 4);
    }
}
