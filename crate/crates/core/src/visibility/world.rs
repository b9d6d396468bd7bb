use serde::Serialize;

use crate::geom::{
    collinear_param, on_segment, plane_line_param, ray_meets_segment, segment_crosses_polygon,
    Point3, PointLocation, Rat,
};
use crate::scene::{Polygon, Polyhedron, Scene};

/// Which definition of "p sees q" applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    /// The segment crosses no polygon.
    Scene,
    /// The closed segment avoids the interior or avoids the exterior.
    Polyhedron,
}

/// A boundary feature of a polyhedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "id")]
pub enum Feature {
    Vertex(usize),
    Edge(usize),
    Facet(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase", tag = "class", content = "feature")]
pub enum PointClass {
    Interior,
    Exterior,
    Boundary(Feature),
}

/// A scene or polyhedron prepared for visibility queries. Edges and
/// vertices are numbered; for a scene each polygon contributes its own
/// edges, for a polyhedron every shared edge appears once.
#[derive(Clone, Debug)]
pub struct World {
    semantics: Semantics,
    polygons: Vec<Polygon>,
    edges: Vec<(Point3, Point3)>,
    labels: Vec<String>,
    vertices: Vec<Point3>,
}

impl World {
    pub fn scene(s: &Scene) -> World {
        World {
            semantics: Semantics::Scene,
            polygons: s.polygons().to_vec(),
            edges: s
                .edges()
                .iter()
                .map(|e| (e.a.clone(), e.b.clone()))
                .collect(),
            labels: (0..s.edges().len()).map(|i| s.edge_label(i)).collect(),
            vertices: s.vertices(),
        }
    }

    pub fn polyhedron(p: &Polyhedron) -> World {
        World {
            semantics: Semantics::Polyhedron,
            polygons: p.facets().polygons().to_vec(),
            edges: p
                .edges()
                .iter()
                .map(|e| (e.a.clone(), e.b.clone()))
                .collect(),
            labels: p
                .edges()
                .iter()
                .map(|e| {
                    let f = p.facets().polygons();
                    format!("{}|{}", f[e.facets[0]].id(), f[e.facets[1]].id())
                })
                .collect(),
            vertices: p.vertices().to_vec(),
        }
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn edges(&self) -> &[(Point3, Point3)] {
        &self.edges
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn vertex_id(&self, v: &Point3) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn edge_point(&self, e: usize, t: &Rat) -> Point3 {
        let (a, b) = &self.edges[e];
        a.lerp(b, t)
    }

    /// Boundary feature containing `p`, lowest dimension first.
    pub fn boundary_feature(&self, p: &Point3) -> Option<Feature> {
        if let Some(v) = self.vertex_id(p) {
            return Some(Feature::Vertex(v));
        }
        if let Some(e) = self.edges.iter().position(|(a, b)| on_segment(p, a, b)) {
            return Some(Feature::Edge(e));
        }
        self.polygons
            .iter()
            .position(|f| f.contains_closed(p))
            .map(Feature::Facet)
    }

    /// Interior/exterior by counting facet crossings along a ray that misses
    /// every edge. Requires `p` off the boundary.
    fn parity_inside(&self, p: &Point3) -> bool {
        // Directions (1, k, k^2) lie on a moment curve, which meets each plane
        // through the origin at most twice, so a clear one is found quickly.
        let dir = (1i64..)
            .map(|k| Point3::int(1, k, k * k))
            .find(|d| {
                !self
                    .edges
                    .iter()
                    .any(|(a, b)| ray_meets_segment(p, d, a, b))
            })
            .expect("some direction avoids all edges");
        let mut inside = false;
        for f in &self.polygons {
            if let Some(t) = plane_line_param(f.plane(), p, &dir) {
                if t.is_positive() && f.locate(&(p + &dir.scale(&t))) == PointLocation::Inside {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Exact classification relative to the closed solid bounded by the
    /// world's polygons. Meaningful for polyhedra.
    pub fn classify_point(&self, p: &Point3) -> PointClass {
        match self.boundary_feature(p) {
            Some(f) => PointClass::Boundary(f),
            None if self.parity_inside(p) => PointClass::Interior,
            None => PointClass::Exterior,
        }
    }

    pub fn sees_point(&self, p: &Point3, q: &Point3) -> bool {
        self.sees_point_from(p, None, q)
    }

    /// As `sees_point`, reusing a known classification of `p`.
    pub(crate) fn sees_point_from(
        &self,
        p: &Point3,
        p_class: Option<PointClass>,
        q: &Point3,
    ) -> bool {
        match self.semantics {
            Semantics::Scene => !self
                .polygons
                .iter()
                .any(|poly| segment_crosses_polygon(p, q, poly)),
            Semantics::Polyhedron => self.segment_one_sided(p, p_class, q),
        }
    }

    /// Parameters in [0, 1] along `p -> q` where the segment meets a facet
    /// plane transversally or touches an edge.
    fn segment_breakpoints(&self, p: &Point3, q: &Point3) -> Vec<Rat> {
        let d = q - p;
        let mut ts = vec![Rat::zero(), Rat::one()];
        let unit = |t: &Rat| !t.is_negative() && *t <= Rat::one();
        for f in &self.polygons {
            if let Some(t) = plane_line_param(f.plane(), p, &d) {
                if unit(&t) {
                    ts.push(t);
                }
            }
        }
        for (a, b) in &self.edges {
            for w in [a, b] {
                if on_segment(w, p, q) {
                    let t = &(w - p).dot(&d) / &d.norm2();
                    ts.push(t);
                }
            }
            // interior crossing of the edge: p + t d on line(a, b)
            if let Some(t) = collinear_param(a, b, p, &d) {
                if unit(&t) && on_segment(&p.lerp(q, &t), a, b) {
                    ts.push(t);
                }
            }
        }
        ts.sort();
        ts.dedup();
        ts
    }

    fn segment_one_sided(&self, p: &Point3, p_class: Option<PointClass>, q: &Point3) -> bool {
        if p == q {
            return true;
        }
        let ts = self.segment_breakpoints(p, q);
        // (touches interior, touches exterior)
        let mut sides = (false, false);
        fn both(sides: &mut (bool, bool), c: PointClass) -> bool {
            match c {
                PointClass::Interior => sides.0 = true,
                PointClass::Exterior => sides.1 = true,
                PointClass::Boundary(_) => {}
            }
            sides.0 && sides.1
        }
        // Class of the open piece just before the current breakpoint, when it
        // is known to be off the boundary.
        let mut prev: Option<PointClass> = None;
        for (i, t) in ts.iter().enumerate() {
            let x = p.lerp(q, t);
            let at = self.boundary_feature(&x);
            let here = match (at, prev, i, p_class) {
                (Some(f), ..) => PointClass::Boundary(f),
                (None, Some(c), ..) => c,
                (None, None, 0, Some(c)) => c,
                _ => self.classify_point(&x),
            };
            if both(&mut sides, here) {
                return false;
            }
            let Some(next) = ts.get(i + 1) else { break };
            let m = p.lerp(q, &Rat::midpoint(t, next));
            let class = match (at, prev) {
                // off the boundary the class is locally constant
                (None, _) => here,
                (Some(Feature::Facet(f)), Some(c)) if !self.polygons[f].plane().contains(&m) => {
                    // a single transversal pass through a facet interior
                    match c {
                        PointClass::Interior => PointClass::Exterior,
                        PointClass::Exterior => PointClass::Interior,
                        b => b,
                    }
                }
                _ => self.classify_point(&m),
            };
            prev = match class {
                PointClass::Boundary(_) => None,
                c => Some(c),
            };
            if both(&mut sides, class) {
                return false;
            }
        }
        true
    }
}
