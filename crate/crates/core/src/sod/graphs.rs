use std::collections::BTreeSet;

use serde::Serialize;

use super::swirls::{Orientation, Swirl};
use crate::sphere::Sod;

/// Edge between two swirls sharing an arc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwirlEdge {
    pub swirls: [usize; 2],
    pub arc: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwirlGraph {
    pub orientations: Vec<Orientation>,
    pub edges: Vec<SwirlEdge>,
    /// Arcs lying on more than two swirls, or on two of one orientation.
    pub overloaded_arcs: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwirlGraphCheck {
    pub simple: bool,
    pub bipartite: bool,
    pub parts_nonempty: bool,
    pub euler_bound: bool,
    pub arc_membership: bool,
}

impl SwirlGraphCheck {
    pub fn all_pass(&self) -> bool {
        self.simple
            && self.bipartite
            && self.parts_nonempty
            && self.euler_bound
            && self.arc_membership
    }
}

pub fn swirl_graph(sod: &Sod, swirls: &[Swirl]) -> SwirlGraph {
    let mut edges = Vec::new();
    let mut overloaded_arcs = Vec::new();
    for a in 0..sod.len() {
        let on: Vec<usize> = (0..swirls.len())
            .filter(|&i| swirls[i].contains_arc(a))
            .collect();
        match on.as_slice() {
            [] | [_] => {}
            [i, j] if swirls[*i].orientation != swirls[*j].orientation => edges.push(SwirlEdge {
                swirls: [*i, *j],
                arc: a,
            }),
            _ => overloaded_arcs.push(a),
        }
    }
    SwirlGraph {
        orientations: swirls.iter().map(|w| w.orientation).collect(),
        edges,
        overloaded_arcs,
    }
}

impl SwirlGraph {
    pub fn vertex_count(&self) -> usize {
        self.orientations.len()
    }

    pub fn check(&self) -> SwirlGraphCheck {
        let pairs: BTreeSet<[usize; 2]> = self.edges.iter().map(|e| sorted(e.swirls)).collect();
        let simple = pairs.len() == self.edges.len()
            && self.edges.iter().all(|e| e.swirls[0] != e.swirls[1]);
        let bipartite = self
            .edges
            .iter()
            .all(|e| self.orientations[e.swirls[0]] != self.orientations[e.swirls[1]]);
        let parts_nonempty = self.orientations.contains(&Orientation::Cw)
            && self.orientations.contains(&Orientation::Ccw);
        let v = self.vertex_count();
        let euler_bound = v < 3 || self.edges.len() + 4 <= 2 * v;
        SwirlGraphCheck {
            simple,
            bipartite,
            parts_nonempty,
            euler_bound,
            arc_membership: self.overloaded_arcs.is_empty(),
        }
    }
}

fn sorted(p: [usize; 2]) -> [usize; 2] {
    [p[0].min(p[1]), p[0].max(p[1])]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactGraph {
    /// `out[a]` are the arcs that `a` feeds into.
    pub out: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactGraphCheck {
    pub out_degree_two: bool,
    pub no_self_loops: bool,
    pub no_two_cycles: bool,
    pub two_cycles: Vec<[usize; 2]>,
}

impl ContactGraphCheck {
    pub fn all_pass(&self) -> bool {
        self.out_degree_two && self.no_self_loops && self.no_two_cycles
    }
}

pub fn contact_graph(sod: &Sod) -> ContactGraph {
    let mut out = vec![Vec::new(); sod.len()];
    for (a, b) in sod.map().contacts() {
        out[a].push(b);
    }
    ContactGraph { out }
}

impl ContactGraph {
    pub fn check(&self) -> ContactGraphCheck {
        let out_degree_two = self.out.iter().all(|o| {
            let d: BTreeSet<_> = o.iter().collect();
            o.len() == 2 && d.len() == 2
        });
        let no_self_loops = self.out.iter().enumerate().all(|(a, o)| !o.contains(&a));
        let mut two_cycles = Vec::new();
        for (a, o) in self.out.iter().enumerate() {
            for &b in o {
                if a < b && self.out[b].contains(&a) {
                    two_cycles.push([a, b]);
                }
            }
        }
        ContactGraphCheck {
            out_degree_two,
            no_self_loops,
            no_two_cycles: two_cycles.is_empty(),
            two_cycles,
        }
    }
}
