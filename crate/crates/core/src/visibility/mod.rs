//! Exact point-to-point and point-to-edge visibility.
//!
//! Along any segment the combinatorics of a sightline change only at
//! finitely many rational parameters. Every query collects those
//! breakpoints and classifies each breakpoint and each open piece between
//! them exactly.

mod edges;
mod world;

pub use edges::{
    EdgeReport, EdgeVisibility, ParamInterval, VisError, VisibilityReport, VisibleSet,
};
pub use world::{Feature, PointClass, Semantics, World};

use crate::scene::{Builtin, Polyhedron, Scene};

impl From<&Scene> for World {
    fn from(s: &Scene) -> World {
        World::scene(s)
    }
}

impl From<&Polyhedron> for World {
    fn from(p: &Polyhedron) -> World {
        World::polyhedron(p)
    }
}

impl From<&Builtin> for World {
    fn from(b: &Builtin) -> World {
        match b {
            Builtin::Scene(s) => World::scene(s),
            Builtin::Polyhedron(p) => World::polyhedron(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, Point3, Rat};
    use crate::scene::{cube, eight_edge_scene, tetrahedron, Polygon};

    fn facet_exterior_point() -> Point3 {
        Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30))
    }

    #[test]
    fn tetrahedron_counts() {
        let w = World::polyhedron(&tetrahedron());
        assert_eq!(w.count_visible_edges(&Point3::origin()).unwrap(), (6, 6));
        assert_eq!(w.visible_vertices(&Point3::origin()).len(), 4);
        let p = facet_exterior_point();
        assert_eq!(w.count_visible_edges(&p).unwrap(), (6, 3));
        let far = Point3::int(-1, -1, 1);
        for e in 0..6 {
            let (a, b) = &w.edges()[e];
            let v = w.visible_subsegments(&p, e).unwrap();
            if a != &far && b != &far {
                assert_eq!(
                    v.intervals,
                    vec![ParamInterval::new(Rat::zero(), Rat::one())]
                );
            } else {
                // only the endpoint on the near facet
                let t = if a == &far { Rat::one() } else { Rat::zero() };
                assert_eq!(v.intervals, vec![ParamInterval::new(t.clone(), t)]);
            }
        }
        assert_eq!(w.detect_split_edge(&Point3::origin()).unwrap(), None);
    }

    #[test]
    fn cube_centroid_sees_everything() {
        let w = World::polyhedron(&cube(&Rat::one()).unwrap());
        let c = Point3::new(rat(1, 2), rat(1, 2), rat(1, 2));
        assert_eq!(w.count_visible_edges(&c).unwrap(), (12, 12));
        assert_eq!(w.visible_vertices(&c).len(), 8);
    }

    #[test]
    fn eight_edge_scene_from_origin() {
        let s = eight_edge_scene();
        let w = World::scene(&s);
        let o = Point3::origin();
        assert!(w.visible_vertices(&o).is_empty());
        assert_eq!(w.count_visible_edges(&o).unwrap(), (8, 8));
        assert_eq!(w.detect_split_edge(&o).unwrap(), None);
        let low = (0..w.edges().len())
            .find(|&e| {
                let (a, b) = &w.edges()[e];
                w.edge_label(e).starts_with("R1") && a.z.is_negative() && b.z.is_negative()
            })
            .unwrap();
        assert!(w.visible_subsegments(&o, low).unwrap().is_empty());
    }

    #[test]
    fn middle_occluder_splits_an_edge() {
        let long = Polygon::new(
            "long",
            vec![
                Point3::int(-10, 0, 10),
                Point3::int(10, 0, 10),
                Point3::int(10, 1, 10),
                Point3::int(-10, 1, 10),
            ],
        )
        .unwrap();
        let square = Polygon::new(
            "sq",
            vec![
                Point3::int(-1, -1, 5),
                Point3::int(1, -1, 5),
                Point3::int(1, 1, 5),
                Point3::int(-1, 1, 5),
            ],
        )
        .unwrap();
        let w = World::scene(&Scene::new(vec![long, square]));
        let p = Point3::origin();
        let e = w.detect_split_edge(&p).unwrap().expect("split edge");
        assert_eq!(w.edge_label(e), "long:0");
        let v = w.visible_subsegments(&p, e).unwrap();
        assert_eq!(
            v.intervals,
            vec![
                ParamInterval::new(Rat::zero(), rat(2, 5)),
                ParamInterval::new(rat(3, 5), Rat::one())
            ]
        );
    }
}
