//! Structure of spherical occlusion diagrams: axioms, swirls and their
//! eyes, the swirl and contact graphs, hemisphere walks and semicircle
//! covers.

mod axioms;
mod cover;
mod graphs;
mod swirls;
mod walk;

use serde::Serialize;

use crate::geom::Point3;
use crate::sphere::{Arrangement, Sod};
use crate::visibility::World;

pub use axioms::{arrival_side, check_axioms, AxiomCheck, AxiomReport};
pub use cover::{
    arc_cover, arc_semicircle, check_cover, induced_cover, line_semicircle, CoverCheck, CoverError,
    CoverMember, SemicircleCover,
};
pub use graphs::{
    contact_graph, swirl_graph, ContactGraph, ContactGraphCheck, SwirlEdge, SwirlGraph,
    SwirlGraphCheck,
};
pub use swirls::{find_swirls, find_swirls_in, turn, Orientation, State, Swirl, SwirlError};
pub use walk::{
    four_swirls, separating_pole, swirl_in_hemisphere, swirl_in_hemisphere_in, FourSwirls,
    Hemisphere, HemisphereWalk, Leg, WalkError,
};

#[derive(Clone, Debug, Serialize)]
pub struct CoverSection {
    pub cover: SemicircleCover,
    pub check: CoverCheck,
}

/// Everything checked about one diagram.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub arcs: usize,
    pub faces: usize,
    pub connected: bool,
    pub axioms: AxiomReport,
    pub swirls: Vec<Swirl>,
    pub cw: usize,
    pub ccw: usize,
    pub swirl_graph: SwirlGraph,
    pub swirl_graph_check: SwirlGraphCheck,
    pub contact_graph: ContactGraph,
    pub contact_graph_check: ContactGraphCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub four_swirls: Option<FourSwirls>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_error: Option<String>,
}

/// Analyze `sod`; with a scene and viewpoint also build and check the
/// induced cover.
pub fn analyze(sod: &Sod, origin: Option<(&World, &Point3)>) -> Result<AnalysisReport, SwirlError> {
    let map = sod.map();
    let arrangement = Arrangement::new(&map.arcs);
    let faces = arrangement.faces();
    let swirls = find_swirls_in(sod, &faces)?;
    let graph = swirl_graph(sod, &swirls);
    let contacts = contact_graph(sod);
    let cover = match origin {
        Some((w, p)) => induced_cover(w, p, sod).ok().map(|cover| {
            let check = check_cover(sod.arcs(), &cover);
            CoverSection { cover, check }
        }),
        None => None,
    };
    let (four, walk_error) = match four_swirls(sod, &faces, &swirls) {
        Ok(f) => (f, None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(AnalysisReport {
        arcs: sod.len(),
        faces: faces.len(),
        connected: arrangement.component_count() <= 1,
        axioms: check_axioms(map),
        cw: swirls
            .iter()
            .filter(|w| w.orientation == Orientation::Cw)
            .count(),
        ccw: swirls
            .iter()
            .filter(|w| w.orientation == Orientation::Ccw)
            .count(),
        swirl_graph_check: graph.check(),
        swirl_graph: graph,
        contact_graph_check: contacts.check(),
        contact_graph: contacts,
        swirls,
        cover,
        four_swirls: four,
        walk_error,
    })
}

impl AnalysisReport {
    /// Violated structural laws, empty when the diagram behaves as every
    /// diagram must.
    pub fn law_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut need = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        need(self.axioms.all_pass(), "axioms");
        need(self.connected, "arc union connected");
        need(self.faces == self.arcs + 2, "faces = arcs + 2");
        need(self.arcs >= 8, "at least 8 arcs");
        need(self.swirls.len() >= 4, "at least 4 swirls");
        need(self.cw >= 1 && self.ccw >= 1, "both swirl orientations");
        need(
            self.swirls.iter().all(|w| w.eye.is_some()),
            "every swirl has an eye",
        );
        need(self.swirl_graph_check.all_pass(), "swirl graph");
        need(self.contact_graph_check.all_pass(), "contact graph");
        need(self.walk_error.is_none(), "hemisphere walk");
        need(
            self.four_swirls.as_ref().is_some_and(|f| f.distinct),
            "four distinct swirls",
        );
        if let Some(c) = &self.cover {
            need(c.check.pass, "cover contains every arc");
            need(c.check.size >= 8, "cover has at least 8 semicircles");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::eight_edge_scene;
    use crate::sphere::build_sod;
    use rand::{Rng, SeedableRng};

    fn eight() -> (World, Sod) {
        let w = World::scene(&eight_edge_scene());
        let s = build_sod(&w, &Point3::origin()).unwrap();
        (w, s)
    }

    #[test]
    fn eight_edge_analysis() {
        let (w, s) = eight();
        let r = analyze(&s, Some((&w, &Point3::origin()))).unwrap();
        assert_eq!(
            r.law_failures(),
            Vec::<String>::new(),
            "{}",
            serde_json::to_string_pretty(&r).unwrap()
        );
        assert_eq!(r.cover.as_ref().unwrap().check.size, 8);
    }

    #[test]
    fn walks_in_axis_hemispheres() {
        let (_, s) = eight();
        for pole in [
            Point3::int(1, 0, 0),
            Point3::int(-1, 0, 0),
            Point3::int(0, 1, 0),
            Point3::int(0, 0, -1),
        ] {
            let h = Hemisphere::new(pole).unwrap();
            let walk = swirl_in_hemisphere(&s, &h).unwrap();
            assert!(walk.swirl.corners.iter().all(|c| h.contains(c)));
        }
    }

    #[test]
    fn walks_in_random_hemispheres() {
        let (_, s) = eight();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let pole = Point3::int(
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
            );
            let Some(h) = Hemisphere::new(pole) else {
                continue;
            };
            swirl_in_hemisphere(&s, &h).unwrap();
        }
    }
}
