//! Polygons, scenes and polyhedra: validated containers for the worlds the
//! visibility engine works on, plus builtin constructions, isometries and
//! JSON scene files.

mod builtins;
mod io;
mod isometry;
mod overlap;
mod polygon;
mod polyhedron;

use serde::Serialize;

use crate::geom::Point3;

pub use builtins::{
    brush, builtin, cube, eight_edge_scene, tetrahedron, Builtin, BuiltinError, BUILTIN_NAMES,
};
pub use io::{
    load_scene, parse_scene, save_scene, scene_file, scene_to_json, LoadedScene, PolygonFile,
    SceneFile, SceneIoError,
};
pub use isometry::{check_symmetry, polygon_permutation, Isometry, NotOrthogonal};
pub use overlap::{closed_polygons_meet, interiors_overlap};
pub use polygon::{Polygon, PolygonError};
pub use polyhedron::{PolyEdge, Polyhedron, PolyhedronError};

/// One boundary edge of one polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRef {
    pub polygon: usize,
    pub index: usize,
    pub a: Point3,
    pub b: Point3,
}

/// A nonempty collection of polygons, in input order, with a global edge
/// table (each boundary segment listed once per polygon).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    polygons: Vec<Polygon>,
    edges: Vec<EdgeRef>,
}

impl Scene {
    /// Builds the container without checking interior disjointness; see
    /// [`validate_scene`].
    pub fn new(polygons: Vec<Polygon>) -> Scene {
        let mut edges = Vec::new();
        for (pi, poly) in polygons.iter().enumerate() {
            for (index, (a, b)) in poly.edges().enumerate() {
                edges.push(EdgeRef {
                    polygon: pi,
                    index,
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        Scene { polygons, edges }
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn polygon_by_id(&self, id: &str) -> Option<&Polygon> {
        self.polygons.iter().find(|p| p.id() == id)
    }

    /// Edge label `polygon_id:index`.
    pub fn edge_label(&self, e: usize) -> String {
        let r = &self.edges[e];
        format!("{}:{}", self.polygons[r.polygon].id(), r.index)
    }

    /// Distinct vertices in first-appearance order.
    pub fn vertices(&self) -> Vec<Point3> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for v in self.polygons.iter().flat_map(Polygon::vertices) {
            if seen.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }

    pub fn with_polygon(&self, p: Polygon) -> Scene {
        let mut polys = self.polygons.clone();
        polys.push(p);
        Scene::new(polys)
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Point3, Point3) {
        let mut it = self.polygons.iter().flat_map(Polygon::vertices);
        let first = it.next().expect("scene is nonempty").clone();
        let (mut lo, mut hi) = (first.clone(), first);
        for v in it {
            lo = Point3::new(
                lo.x.clone().min(v.x.clone()),
                lo.y.clone().min(v.y.clone()),
                lo.z.clone().min(v.z.clone()),
            );
            hi = Point3::new(
                hi.x.clone().max(v.x.clone()),
                hi.y.clone().max(v.y.clone()),
                hi.z.clone().max(v.z.clone()),
            );
        }
        (lo, hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    EmptyScene,
    DuplicateId { id: String },
    InteriorOverlap { first: String, second: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every pair of polygons whose relative interiors meet, plus container
/// problems. An empty report means `s` is a valid scene.
pub fn validate_scene(s: &Scene) -> ValidationReport {
    let mut violations = Vec::new();
    if s.polygons.is_empty() {
        violations.push(Violation::EmptyScene);
    }
    let mut ids = std::collections::BTreeSet::new();
    for p in &s.polygons {
        if !ids.insert(p.id()) {
            violations.push(Violation::DuplicateId {
                id: p.id().to_string(),
            });
        }
    }
    for (i, a) in s.polygons.iter().enumerate() {
        for b in &s.polygons[i + 1..] {
            if interiors_overlap(a, b) {
                violations.push(Violation::InteriorOverlap {
                    first: a.id().to_string(),
                    second: b.id().to_string(),
                });
            }
        }
    }
    ValidationReport { violations }
}
