//! Projection of visible edge pieces onto the unit sphere around the
//! viewpoint: arcs, the visibility map, spherical occlusion diagrams and
//! the faces of arc arrangements.

mod arc;
mod faces;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::Point3;
use crate::sod::{check_axioms, AxiomReport};
use crate::visibility::{VisError, World};

pub use arc::{canonical, project, Arc, ArcError, BadSemicircle, GreatSemicircle};
pub use faces::{enumerate_faces, Arrangement, FaceEdge, SphereFace};

/// Arcs seen from one viewpoint, with the arc (if any) whose relative
/// interior holds each endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisMap {
    pub viewpoint: Option<Point3>,
    pub arcs: Vec<Arc>,
    /// `hosts[a][end]` for `end` 0 (`u`) and 1 (`v`).
    pub hosts: Vec<[Option<usize>; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SphereError {
    #[error(transparent)]
    Vis(#[from] VisError),
    #[error("edge {0} projects to a degenerate arc")]
    DegenerateArc(usize),
    #[error("arc {index} has id {id}; ids must be 0..n in order")]
    ArcId { index: usize, id: usize },
    #[error("arc {0}: {1}")]
    BadArc(usize, ArcError),
    #[error("arc {0}: recorded feeds_into does not match the arcs")]
    FeedsInto(usize),
}

impl VisMap {
    pub fn from_arcs(viewpoint: Option<Point3>, arcs: Vec<Arc>) -> Result<VisMap, SphereError> {
        for (i, a) in arcs.iter().enumerate() {
            if a.id != i {
                return Err(SphereError::ArcId { index: i, id: a.id });
            }
            a.check().map_err(|e| SphereError::BadArc(i, e))?;
        }
        let hosts = arcs
            .iter()
            .map(|a| {
                [&a.u, &a.v].map(|q| {
                    arcs.iter()
                        .position(|b| b.id != a.id && b.contains_interior(q))
                })
            })
            .collect();
        Ok(VisMap {
            viewpoint,
            arcs,
            hosts,
        })
    }

    /// Contact graph edges `(a, b)`: an endpoint of `a` in the interior of `b`.
    pub fn contacts(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, hs) in self.hosts.iter().enumerate() {
            for b in hs.iter().flatten() {
                out.push((a, *b));
            }
        }
        out
    }

    /// The union of arcs is connected (arcs meeting at any point).
    pub fn is_connected(&self) -> bool {
        Arrangement::new(&self.arcs).component_count() <= 1
    }

    pub fn faces(&self) -> Vec<SphereFace> {
        enumerate_faces(&self.arcs)
    }
}

/// One arc per positive-length piece of every edge's E-set.
pub fn build_vismap(world: &World, p: &Point3) -> Result<VisMap, SphereError> {
    let mut arcs = Vec::new();
    for e in 0..world.edges().len() {
        let vis = world.visible_subsegments(p, e)?;
        for iv in vis.intervals.iter().filter(|iv| !iv.is_degenerate()) {
            let u = &world.edge_point(e, &iv.lo) - p;
            let v = &world.edge_point(e, &iv.hi) - p;
            // same directions, smaller numbers
            let a = Arc::new(arcs.len(), u.primitive(), v.primitive())
                .map_err(|_| SphereError::DegenerateArc(e))?;
            arcs.push(a.with_source(e, iv.lo.clone(), iv.hi.clone()));
        }
    }
    VisMap::from_arcs(Some(p.clone()), arcs)
}

/// A visibility map (or abstract arc set) satisfying the diagram axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sod {
    map: VisMap,
}

impl Sod {
    pub fn new(map: VisMap) -> Result<Sod, Box<AxiomReport>> {
        let report = check_axioms(&map);
        if report.all_pass() {
            Ok(Sod { map })
        } else {
            Err(Box::new(report))
        }
    }

    pub fn map(&self) -> &VisMap {
        &self.map
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.map.arcs
    }

    pub fn len(&self) -> usize {
        self.map.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.arcs.is_empty()
    }

    /// The arc each endpoint feeds into.
    pub fn feeds_into(&self, a: usize) -> [usize; 2] {
        self.map.hosts[a].map(|h| h.expect("axiom A2 holds"))
    }

    pub fn to_file(&self) -> SodFile {
        SodFile {
            viewpoint: self.map.viewpoint.clone(),
            arcs: self.map.arcs.clone(),
            feeds_into: Some((0..self.len()).map(|a| self.feeds_into(a)).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildSodError {
    #[error("viewpoint sees vertex {0}")]
    VisibleVertex(usize),
    #[error("the vertex-free visibility map violates the diagram axioms: {0:?}")]
    Axioms(Box<AxiomReport>),
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

/// The visibility map from `p`, checked against the axioms. Fails with a
/// witness when `p` sees a vertex.
pub fn build_sod(world: &World, p: &Point3) -> Result<Sod, BuildSodError> {
    if let Some(&v) = world.visible_vertices(p).first() {
        return Err(BuildSodError::VisibleVertex(v));
    }
    let map = build_vismap(world, p)?;
    Sod::new(map).map_err(BuildSodError::Axioms)
}

/// SOD exchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SodFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub viewpoint: Option<Point3>,
    pub arcs: Vec<Arc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feeds_into: Option<Vec<[usize; 2]>>,
}

impl SodFile {
    /// The arc set as a map; recorded `feeds_into` entries must agree with
    /// the hosts found from the arcs.
    pub fn to_map(&self) -> Result<VisMap, SphereError> {
        let map = VisMap::from_arcs(self.viewpoint.clone(), self.arcs.clone())?;
        if let Some(f) = &self.feeds_into {
            for (a, h) in map.hosts.iter().enumerate() {
                if f.get(a).map(|x| x.map(Some)) != Some(*h) {
                    return Err(SphereError::FeedsInto(a));
                }
            }
        }
        Ok(map)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PierceReport {
    pub samples: usize,
    pub counterexamples: Vec<GreatSemicircle>,
}

fn random_vec(rng: &mut ChaCha8Rng, bound: i64) -> Point3 {
    loop {
        let v = Point3::int(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        );
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_semicircle(rng: &mut ChaCha8Rng, bound: i64) -> GreatSemicircle {
    loop {
        let n = random_vec(rng, bound);
        let m = n.cross(&random_vec(rng, bound));
        if let Ok(s) = GreatSemicircle::new(n, m) {
            return s;
        }
    }
}

/// Random great semicircles whose relative interior misses every arc.
pub fn semicircle_pierce_test(arcs: &[Arc], samples: usize, seed: u64) -> PierceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // same directions, smaller numbers
    let arcs: Vec<Arc> = arcs
        .iter()
        .map(|a| Arc {
            normal: a.normal.primitive(),
            u: a.u.primitive(),
            v: a.v.primitive(),
            ..a.clone()
        })
        .collect();
    let counterexamples = (0..samples)
        .map(|_| random_semicircle(&mut rng, 1000))
        .filter(|s| !arcs.iter().any(|a| s.interior_meets(a)))
        .collect();
    PierceReport {
        samples,
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, Rat};
    use crate::scene::{eight_edge_scene, tetrahedron, Polygon, Scene};

    #[test]
    fn tetrahedron_exterior_triangle() {
        let w = World::polyhedron(&tetrahedron());
        let p = Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30));
        let m = build_vismap(&w, &p).unwrap();
        assert_eq!(m.arcs.len(), 3);
        assert!(m.hosts.iter().all(|h| h == &[None, None]));
        assert_eq!(m.faces().len(), 2);
        assert!(matches!(
            build_sod(&w, &Point3::origin()),
            Err(BuildSodError::VisibleVertex(_))
        ));
    }

    #[test]
    fn square_gives_quadrilateral() {
        let sq = Polygon::new(
            "sq",
            vec![
                Point3::int(0, 0, 1),
                Point3::int(1, 0, 1),
                Point3::int(1, 1, 1),
                Point3::int(0, 1, 1),
            ],
        )
        .unwrap();
        let w = World::scene(&Scene::new(vec![sq]));
        let m = build_vismap(&w, &Point3::new(rat(1, 3), rat(1, 4), Rat::zero())).unwrap();
        assert_eq!(m.arcs.len(), 4);
        assert_eq!(m.faces().len(), 2);
    }

    #[test]
    fn eight_edge_sod() {
        let w = World::scene(&eight_edge_scene());
        let s = build_sod(&w, &Point3::origin()).unwrap();
        let sources: std::collections::BTreeSet<usize> =
            s.arcs().iter().filter_map(|a| a.source_edge).collect();
        assert_eq!(sources.len(), 8);
        assert!(s.len() >= 8);
        assert_eq!(s.map().faces().len(), s.len() + 2);
        assert!(s.map().is_connected());
        assert!(semicircle_pierce_test(s.arcs(), 200, 1)
            .counterexamples
            .is_empty());
        assert!(semicircle_pierce_test(s.arcs(), 0, 1)
            .counterexamples
            .is_empty());
    }

    #[test]
    fn lone_arc_is_missed() {
        let a = Arc::new(0, Point3::int(1, 0, 0), Point3::int(0, 1, 0)).unwrap();
        let r = semicircle_pierce_test(&[a], 100, 3);
        assert!(!r.counterexamples.is_empty());
    }
}
