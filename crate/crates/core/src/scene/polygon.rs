use crate::geom::{
    locate_in_loops, on_segment, open_segment_meets_segment, Plane, Point3, PointLocation, Rat,
};

/// Planar polygon with rational vertices.
///
/// The outer loop is stored counter-clockwise around `plane.normal` and any
/// hole loops clockwise, so the region is always on the left of every
/// directed boundary edge when viewed from the normal side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    id: String,
    loops: Vec<Vec<Point3>>,
    plane: Plane,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("polygon {id}: loop {lp} has {n} vertices, need at least 3")]
    TooFewVertices { id: String, lp: usize, n: usize },
    #[error("polygon {id}: vertices are collinear or the outer loop has zero area")]
    Degenerate { id: String },
    #[error("polygon {id}: vertex {vertex} of loop {lp} is off the polygon plane")]
    NotPlanar {
        id: String,
        lp: usize,
        vertex: usize,
    },
    #[error("polygon {id}: loop {lp} has a zero-length or collinear corner at vertex {vertex}")]
    DegenerateCorner {
        id: String,
        lp: usize,
        vertex: usize,
    },
    #[error("polygon {id}: boundary edges {first:?} and {second:?} intersect")]
    SelfIntersecting {
        id: String,
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("polygon {id}: hole {hole} is not strictly inside the outer loop")]
    HoleOutside { id: String, hole: usize },
    #[error("polygon {id}: hole {hole} lies inside another hole")]
    NestedHole { id: String, hole: usize },
}

/// Newell normal: twice the vector area of a closed loop.
pub(crate) fn loop_area_vector(lp: &[Point3]) -> Point3 {
    let n = lp.len();
    let mut acc = Point3::origin();
    for i in 0..n {
        acc = &acc + &lp[i].cross(&lp[(i + 1) % n]);
    }
    acc
}

impl Polygon {
    pub fn new(id: impl Into<String>, vertices: Vec<Point3>) -> Result<Polygon, PolygonError> {
        Polygon::with_holes(id, vertices, Vec::new())
    }

    pub fn with_holes(
        id: impl Into<String>,
        outer: Vec<Point3>,
        holes: Vec<Vec<Point3>>,
    ) -> Result<Polygon, PolygonError> {
        let id = id.into();
        let mut loops = Vec::with_capacity(1 + holes.len());
        loops.push(outer);
        loops.extend(holes);
        for (li, lp) in loops.iter().enumerate() {
            if lp.len() < 3 {
                return Err(PolygonError::TooFewVertices {
                    id,
                    lp: li,
                    n: lp.len(),
                });
            }
        }
        let normal = loop_area_vector(&loops[0]);
        if normal.is_zero() {
            return Err(PolygonError::Degenerate { id });
        }
        let offset = normal.dot(&loops[0][0]);
        let plane = Plane::new(normal, offset);
        for (li, lp) in loops.iter().enumerate() {
            for (vi, v) in lp.iter().enumerate() {
                if !plane.contains(v) {
                    return Err(PolygonError::NotPlanar {
                        id,
                        lp: li,
                        vertex: vi,
                    });
                }
            }
            let n = lp.len();
            for vi in 0..n {
                let prev = &lp[(vi + n - 1) % n];
                let next = &lp[(vi + 1) % n];
                let cur = &lp[vi];
                if (cur - prev).cross(&(next - cur)).is_zero() {
                    return Err(PolygonError::DegenerateCorner {
                        id,
                        lp: li,
                        vertex: vi,
                    });
                }
            }
        }
        for lp in loops.iter_mut().skip(1) {
            if loop_area_vector(lp).dot(&plane.normal).is_positive() {
                lp.reverse();
            }
        }
        let poly = Polygon { id, loops, plane };
        poly.check_simple()?;
        Ok(poly)
    }

    fn check_simple(&self) -> Result<(), PolygonError> {
        let edges: Vec<((usize, usize), &Point3, &Point3)> = self
            .loops
            .iter()
            .enumerate()
            .flat_map(|(li, lp)| {
                let n = lp.len();
                (0..n).map(move |i| ((li, i), &lp[i], &lp[(i + 1) % n]))
            })
            .collect();
        for (i, (ki, a, b)) in edges.iter().enumerate() {
            for (kj, c, d) in edges.iter().skip(i + 1) {
                let n = self.loops[ki.0].len();
                let adjacent = ki.0 == kj.0 && ((ki.1 + 1) % n == kj.1 || (kj.1 + 1) % n == ki.1);
                if adjacent {
                    // Non-collinear corners: adjacent edges share exactly their vertex.
                    continue;
                }
                if segments_touch(a, b, c, d) {
                    return Err(PolygonError::SelfIntersecting {
                        id: self.id.clone(),
                        first: *ki,
                        second: *kj,
                    });
                }
            }
        }
        let outer = std::slice::from_ref(&self.loops[0]);
        for (h, lp) in self.loops.iter().enumerate().skip(1) {
            if locate_in_loops(outer, &self.plane.normal, &lp[0]) != PointLocation::Inside {
                return Err(PolygonError::HoleOutside {
                    id: self.id.clone(),
                    hole: h,
                });
            }
            for (g, other) in self.loops.iter().enumerate().skip(1) {
                if g != h
                    && locate_in_loops(std::slice::from_ref(other), &self.plane.normal, &lp[0])
                        == PointLocation::Inside
                {
                    return Err(PolygonError::NestedHole {
                        id: self.id.clone(),
                        hole: h,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    /// Outer loop first, then holes.
    pub fn loops(&self) -> &[Vec<Point3>] {
        &self.loops
    }

    pub fn outer(&self) -> &[Point3] {
        &self.loops[0]
    }

    pub fn holes(&self) -> &[Vec<Point3>] {
        &self.loops[1..]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Point3> {
        self.loops.iter().flatten()
    }

    pub fn edge_count(&self) -> usize {
        self.loops.iter().map(Vec::len).sum()
    }

    /// Directed boundary edges, loop by loop.
    pub fn edges(&self) -> impl Iterator<Item = (&Point3, &Point3)> {
        self.loops.iter().flat_map(|lp| {
            let n = lp.len();
            (0..n).map(move |i| (&lp[i], &lp[(i + 1) % n]))
        })
    }

    pub fn locate(&self, p: &Point3) -> PointLocation {
        if !self.plane.contains(p) {
            return PointLocation::Outside;
        }
        locate_in_loops(&self.loops, &self.plane.normal, p)
    }

    pub fn contains_closed(&self, p: &Point3) -> bool {
        self.locate(p) != PointLocation::Outside
    }

    /// Twice the vector area (normal direction, area magnitude).
    pub fn area_vector(&self) -> Point3 {
        self.loops
            .iter()
            .fold(Point3::origin(), |acc, lp| &acc + &loop_area_vector(lp))
    }

    /// Arithmetic mean of the outer loop's vertices.
    pub fn vertex_centroid(&self) -> Point3 {
        let n = Rat::int(self.loops[0].len() as i64);
        let sum = self.loops[0]
            .iter()
            .fold(Point3::origin(), |acc, v| &acc + v);
        sum.scale(&n.recip())
    }

    pub fn map_points(
        &self,
        mut f: impl FnMut(&Point3) -> Point3,
    ) -> Result<Polygon, PolygonError> {
        let mut loops: Vec<Vec<Point3>> = self
            .loops
            .iter()
            .map(|lp| lp.iter().map(&mut f).collect())
            .collect();
        let outer = loops.remove(0);
        Polygon::with_holes(self.id.clone(), outer, loops)
    }

    pub fn with_id(&self, id: impl Into<String>) -> Polygon {
        Polygon {
            id: id.into(),
            ..self.clone()
        }
    }

    /// Reverse every loop, flipping the normal.
    pub fn reversed(&self) -> Polygon {
        let loops: Vec<Vec<Point3>> = self
            .loops
            .iter()
            .map(|lp| lp.iter().rev().cloned().collect())
            .collect();
        let plane = Plane::new(-&self.plane.normal, -&self.plane.offset);
        Polygon {
            id: self.id.clone(),
            loops,
            plane,
        }
    }

    /// Equal as closed point sets, regardless of id, starting vertex or
    /// orientation.
    pub fn same_point_set(&self, other: &Polygon) -> bool {
        if self.loops.len() != other.loops.len() || !self.plane.same_plane(&other.plane) {
            return false;
        }
        if !same_cycle(&self.loops[0], &other.loops[0]) {
            return false;
        }
        let mut used = vec![false; other.loops.len()];
        self.loops[1..].iter().all(|h| {
            (1..other.loops.len()).any(|j| {
                if !used[j] && same_cycle(h, &other.loops[j]) {
                    used[j] = true;
                    true
                } else {
                    false
                }
            })
        })
    }
}

fn same_cycle(a: &[Point3], b: &[Point3]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let Some(start) = b.iter().position(|v| *v == a[0]) else {
        return false;
    };
    let fwd = (0..n).all(|i| a[i] == b[(start + i) % n]);
    let bwd = (0..n).all(|i| a[i] == b[(start + n - i) % n]);
    fwd || bwd
}

/// Closed segments `[a, b]` and `[c, d]` share at least one point.
pub(crate) fn segments_touch(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    on_segment(a, c, d)
        || on_segment(b, c, d)
        || on_segment(c, a, b)
        || on_segment(d, a, b)
        || open_segment_meets_segment(a, b, c, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Point3> {
        vec![
            Point3::int(0, 0, 0),
            Point3::int(2, 0, 0),
            Point3::int(2, 2, 0),
            Point3::int(0, 2, 0),
        ]
    }

    #[test]
    fn rejects_bad_polygons() {
        assert!(matches!(
            Polygon::new("a", vec![Point3::int(0, 0, 0), Point3::int(1, 0, 0)]),
            Err(PolygonError::TooFewVertices { .. })
        ));
        assert!(matches!(
            Polygon::new(
                "b",
                vec![
                    Point3::int(0, 0, 0),
                    Point3::int(1, 0, 0),
                    Point3::int(1, 1, 0),
                    Point3::int(0, 1, 1)
                ]
            ),
            Err(PolygonError::NotPlanar { .. })
        ));
        assert!(matches!(
            Polygon::new(
                "c",
                vec![
                    Point3::int(0, 0, 0),
                    Point3::int(1, 0, 0),
                    Point3::int(2, 0, 0),
                    Point3::int(1, 1, 0)
                ]
            ),
            Err(PolygonError::DegenerateCorner { .. })
        ));
        // bow tie
        assert!(matches!(
            Polygon::new(
                "d",
                vec![
                    Point3::int(0, 0, 0),
                    Point3::int(2, 2, 0),
                    Point3::int(2, 0, 0),
                    Point3::int(0, 2, 0)
                ]
            ),
            Err(PolygonError::SelfIntersecting { .. }) | Err(PolygonError::Degenerate { .. })
        ));
    }

    #[test]
    fn holes_are_normalized_and_checked() {
        let outer = vec![
            Point3::int(0, 0, 0),
            Point3::int(4, 0, 0),
            Point3::int(4, 4, 0),
            Point3::int(0, 4, 0),
        ];
        let hole = vec![
            Point3::int(1, 1, 0),
            Point3::int(2, 1, 0),
            Point3::int(1, 2, 0),
        ];
        let p = Polygon::with_holes("h", outer.clone(), vec![hole.clone()]).unwrap();
        assert!(loop_area_vector(&p.holes()[0])
            .dot(&p.plane().normal)
            .is_negative());
        assert_eq!(
            p.locate(&Point3::new(Rat::new(5, 4), Rat::new(5, 4), Rat::zero())),
            PointLocation::Outside
        );
        let far = vec![
            Point3::int(5, 5, 0),
            Point3::int(6, 5, 0),
            Point3::int(5, 6, 0),
        ];
        assert!(matches!(
            Polygon::with_holes("h", outer, vec![far]),
            Err(PolygonError::HoleOutside { .. })
        ));
    }

    #[test]
    fn point_set_equality_ignores_start_and_direction() {
        let a = Polygon::new("a", square()).unwrap();
        let mut rev = square();
        rev.reverse();
        rev.rotate_left(2);
        let b = Polygon::new("b", rev).unwrap();
        assert!(a.same_point_set(&b));
        let c = a.map_points(|p| p + &Point3::int(0, 0, 1)).unwrap();
        assert!(!a.same_point_set(&c));
    }
}
