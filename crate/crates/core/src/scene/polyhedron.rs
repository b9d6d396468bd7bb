use std::collections::BTreeMap;

use crate::geom::{Point3, Rat};

use super::{validate_scene, Polygon, Scene, ValidationReport};

/// An edge of a polyhedron with the two facets sharing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyEdge {
    pub a: Point3,
    pub b: Point3,
    pub facets: [usize; 2],
}

/// Closed connected manifold surface whose facets are oriented outward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    facets: Scene,
    edges: Vec<PolyEdge>,
    vertices: Vec<Point3>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedronError {
    #[error("facets do not form a valid scene: {0:?}")]
    InvalidScene(ValidationReport),
    #[error("edge {a:?}-{b:?} is used by {count} facet sides; a closed surface needs exactly 2")]
    NotClosed { a: Point3, b: Point3, count: usize },
    #[error("facets {0} and {1} traverse their shared edge in the same direction")]
    Inconsistent(usize, usize),
    #[error("facets {0} and {1} share an edge but lie in the same plane")]
    CoplanarNeighbours(usize, usize),
    #[error("the surface is not connected")]
    Disconnected,
    #[error("the surface is pinched at vertex {0:?}")]
    PinchedVertex(Point3),
    #[error("the surface encloses zero volume")]
    ZeroVolume,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    parent[ra] = rb;
}

impl Polyhedron {
    /// Checks closedness, orientability and connectivity. Facets wound
    /// consistently inward are flipped so that every normal points outward.
    pub fn new(facets: Vec<Polygon>) -> Result<Polyhedron, PolyhedronError> {
        let scene = Scene::new(facets);
        let report = validate_scene(&scene);
        if !report.is_valid() {
            return Err(PolyhedronError::InvalidScene(report));
        }
        // key: endpoints in sorted order; value: (facet, runs forward along key)
        let mut uses: BTreeMap<(Point3, Point3), Vec<(usize, bool)>> = BTreeMap::new();
        let mut order = Vec::new();
        for r in scene.edges() {
            let fwd = r.a < r.b;
            let key = if fwd {
                (r.a.clone(), r.b.clone())
            } else {
                (r.b.clone(), r.a.clone())
            };
            let entry = uses.entry(key.clone()).or_default();
            if entry.is_empty() {
                order.push(key);
            }
            entry.push((r.polygon, fwd));
        }
        let n = scene.polygons().len();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut edges = Vec::with_capacity(order.len());
        for key in order {
            let u = &uses[&key];
            if u.len() != 2 {
                return Err(PolyhedronError::NotClosed {
                    a: key.0,
                    b: key.1,
                    count: u.len(),
                });
            }
            let (f, g) = (u[0].0, u[1].0);
            if u[0].1 == u[1].1 {
                return Err(PolyhedronError::Inconsistent(f, g));
            }
            if scene.polygons()[f]
                .plane()
                .same_plane(scene.polygons()[g].plane())
            {
                return Err(PolyhedronError::CoplanarNeighbours(f, g));
            }
            union(&mut parent, f, g);
            let (a, b) = if u[0].1 {
                (key.0, key.1)
            } else {
                (key.1, key.0)
            };
            edges.push(PolyEdge {
                a,
                b,
                facets: [f, g],
            });
        }
        let root = find(&mut parent, 0);
        if (0..n).any(|i| find(&mut parent, i) != root) {
            return Err(PolyhedronError::Disconnected);
        }
        let vertices = scene.vertices();
        for v in &vertices {
            let around: Vec<usize> = (0..n)
                .filter(|&f| scene.polygons()[f].vertices().any(|w| w == v))
                .collect();
            let mut local: Vec<usize> = (0..n).collect();
            for e in edges.iter().filter(|e| &e.a == v || &e.b == v) {
                union(&mut local, e.facets[0], e.facets[1]);
            }
            let r = find(&mut local, around[0]);
            if around.iter().any(|&f| find(&mut local, f) != r) {
                return Err(PolyhedronError::PinchedVertex(v.clone()));
            }
        }
        let six_vol: Rat = scene
            .polygons()
            .iter()
            .map(|p| p.area_vector().dot(&p.outer()[0]))
            .sum();
        let scene = match six_vol.signum() {
            0 => return Err(PolyhedronError::ZeroVolume),
            s if s < 0 => {
                for e in &mut edges {
                    std::mem::swap(&mut e.a, &mut e.b);
                }
                Scene::new(scene.polygons().iter().map(Polygon::reversed).collect())
            }
            _ => scene,
        };
        Ok(Polyhedron {
            facets: scene,
            edges,
            vertices,
        })
    }

    pub fn facets(&self) -> &Scene {
        &self.facets
    }

    pub fn edges(&self) -> &[PolyEdge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Six times the enclosed volume.
    pub fn six_volume(&self) -> Rat {
        self.facets
            .polygons()
            .iter()
            .map(|p| p.area_vector().dot(&p.outer()[0]))
            .sum()
    }
}
