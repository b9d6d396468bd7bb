use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::Point3;
use crate::sphere::{Arc, Sod, SphereFace};

/// Turning direction as seen from outside the sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Cw,
    Ccw,
}

impl Orientation {
    pub fn opposite(self) -> Orientation {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Ccw => Orientation::Cw,
        }
    }
}

/// Travelling along `arc` towards its endpoint `end` (0 = `u`, 1 = `v`).
pub type State = (usize, usize);

/// Continue from the end of `s` into the arc it feeds into, turning the
/// given way.
///
/// Arriving at `q` from the other endpoint `o`, a left turn heads towards
/// `v` of the host `b` exactly when `n_b . o > 0`.
pub fn turn(sod: &Sod, s: State, way: Orientation) -> State {
    let b = sod.feeds_into(s.0)[s.1];
    let o = sod.arcs()[s.0].endpoint(1 - s.1);
    let side_pos = sod.arcs()[b].normal.dot(o).is_positive();
    let towards_v = match way {
        Orientation::Ccw => side_pos,
        Orientation::Cw => !side_pos,
    };
    (b, towards_v as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Swirl {
    pub arcs: Vec<usize>,
    /// End of each arc that is reached (feeds into the next arc).
    pub ends: Vec<usize>,
    pub orientation: Orientation,
    /// `corners[i]` is where `arcs[i]` meets `arcs[i + 1]`.
    pub corners: Vec<Point3>,
    /// Face id of the eye in `enumerate_faces` order.
    pub eye: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SwirlError {
    #[error("turn cycle {0:?} visits an arc twice")]
    RepeatedArc(Vec<usize>),
    #[error("turn cycle {0:?} is shorter than three arcs")]
    Short(Vec<usize>),
}

impl Swirl {
    /// Build from a closed cycle of states, rotated to start at the smallest
    /// arc id.
    pub fn from_cycle(
        sod: &Sod,
        faces: &[SphereFace],
        states: &[State],
        orientation: Orientation,
    ) -> Result<Swirl, SwirlError> {
        let arcs: Vec<usize> = states.iter().map(|s| s.0).collect();
        let mut seen = arcs.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != arcs.len() {
            return Err(SwirlError::RepeatedArc(arcs));
        }
        if arcs.len() < 3 {
            return Err(SwirlError::Short(arcs));
        }
        let start = (0..states.len()).min_by_key(|&i| states[i].0).unwrap();
        let states: Vec<State> = states[start..]
            .iter()
            .chain(&states[..start])
            .copied()
            .collect();
        let corners = states
            .iter()
            .map(|&(a, k)| sod.arcs()[a].endpoint(k).clone())
            .collect();
        let mut w = Swirl {
            arcs: states.iter().map(|s| s.0).collect(),
            ends: states.iter().map(|s| s.1).collect(),
            orientation,
            corners,
            eye: None,
        };
        w.eye = w.find_eye(faces);
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains_arc(&self, a: usize) -> bool {
        self.arcs.contains(&a)
    }

    /// Piece of `arcs[i]` on the eye boundary, in travel order.
    pub fn side(&self, i: usize) -> (&Point3, &Point3) {
        let k = self.len();
        (&self.corners[(i + k - 1) % k], &self.corners[i])
    }

    // The eye lies to the right of travel for a clockwise swirl; faces keep
    // their interior on the left of their boundary edges.
    fn find_eye(&self, faces: &[SphereFace]) -> Option<usize> {
        let (a, k) = (self.arcs[0], self.ends[0]);
        let (from, to) = self.side(0);
        let piece = Arc::new(0, from.clone(), to.clone()).ok()?;
        let forward = (k == 1) == (self.orientation == Orientation::Ccw);
        faces
            .iter()
            .find(|f| {
                f.boundary.iter().flatten().any(|e| {
                    e.arc == a
                        && e.forward == forward
                        && piece.contains_interior(&(&e.from + &e.to))
                })
            })
            .map(|f| f.id)
    }

    /// A direction strictly inside the eye.
    pub fn interior_point(&self) -> Point3 {
        self.corners
            .iter()
            .fold(Point3::origin(), |acc, c| &acc + c)
    }
}

/// Every cycle of the left-turn and right-turn maps, clockwise first.
pub fn find_swirls(sod: &Sod) -> Result<Vec<Swirl>, SwirlError> {
    find_swirls_in(sod, &sod.map().faces())
}

/// As `find_swirls`, with the faces of the diagram already enumerated.
pub fn find_swirls_in(sod: &Sod, faces: &[SphereFace]) -> Result<Vec<Swirl>, SwirlError> {
    let mut out = Vec::new();
    for way in [Orientation::Cw, Orientation::Ccw] {
        let states: Vec<State> = (0..sod.len()).flat_map(|a| [(a, 0), (a, 1)]).collect();
        // 0 unvisited, 1 on current path, 2 done
        let mut mark: BTreeMap<State, u8> = states.iter().map(|&s| (s, 0)).collect();
        for &s0 in &states {
            if mark[&s0] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut s = s0;
            while mark[&s] == 0 {
                mark.insert(s, 1);
                path.push(s);
                s = turn(sod, s, way);
            }
            if mark[&s] == 1 {
                let at = path.iter().position(|&x| x == s).unwrap();
                out.push(Swirl::from_cycle(sod, faces, &path[at..], way)?);
            }
            for p in path {
                mark.insert(p, 2);
            }
        }
    }
    Ok(out)
}
