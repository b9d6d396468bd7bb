use serde::Serialize;

use crate::geom::{
    collinear, collinear_param, open_segment_meets_segment, plane_line_param, Plane, Point3, Rat,
};

use super::world::{Semantics, World};

/// Closed parameter range `[lo, hi]` along an edge, `0 <= lo <= hi <= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
#[serde(from = "[Rat; 2]", into = "[Rat; 2]")]
pub struct ParamInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl From<[Rat; 2]> for ParamInterval {
    fn from([lo, hi]: [Rat; 2]) -> ParamInterval {
        ParamInterval { lo, hi }
    }
}

impl From<ParamInterval> for [Rat; 2] {
    fn from(i: ParamInterval) -> [Rat; 2] {
        [i.lo, i.hi]
    }
}

impl ParamInterval {
    pub fn new(lo: Rat, hi: Rat) -> ParamInterval {
        assert!(lo <= hi, "interval bounds out of order");
        ParamInterval { lo, hi }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &Rat) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    pub fn midpoint(&self) -> Rat {
        Rat::midpoint(&self.lo, &self.hi)
    }
}

/// Visible part of one edge as sorted intervals. Consecutive intervals may
/// share an endpoint when a single sightline through that point is blocked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VisibleSet {
    pub edge: usize,
    pub intervals: Vec<ParamInterval>,
}

impl VisibleSet {
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn has_positive_part(&self) -> bool {
        self.intervals.iter().any(|i| !i.is_degenerate())
    }

    pub fn contains(&self, t: &Rat) -> bool {
        self.intervals.iter().any(|i| i.contains(t))
    }

    pub fn positive_components(&self) -> usize {
        self.intervals.iter().filter(|i| !i.is_degenerate()).count()
    }

    /// Every point of `self` is a point of `other`.
    pub fn subset_of(&self, other: &VisibleSet) -> bool {
        self.intervals
            .iter()
            .all(|i| other.intervals.iter().any(|j| j.lo <= i.lo && i.hi <= j.hi))
    }
}

/// Both visibility notions for one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeVisibility {
    /// Points `x` of the edge with `sees_point(p, x)`.
    pub seen: VisibleSet,
    /// Seen points `x != p` whose open sightline also avoids every closed edge.
    pub clear: VisibleSet,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VisError {
    #[error("edge {0} does not exist")]
    UnknownEdge(usize),
}

impl World {
    /// Parameters along edge `e` where the combinatorics of the sightline
    /// from `p` can change.
    pub fn edge_breakpoints(&self, p: &Point3, e: usize) -> Vec<Rat> {
        let (a, b) = &self.edges()[e];
        let d = b - a;
        let mut ts = vec![Rat::zero(), Rat::one()];
        let mut push = |t: Option<Rat>| {
            if let Some(t) = t {
                if !t.is_negative() && t <= Rat::one() {
                    ts.push(t);
                }
            }
        };
        for f in self.polygons() {
            push(plane_line_param(f.plane(), a, &d));
        }
        for (g, h) in self.edges() {
            match Plane::through(p, g, h) {
                Some(pl) => match plane_line_param(&pl, a, &d) {
                    Some(t) => push(Some(t)),
                    None if pl.contains(a) => {
                        push(collinear_param(p, g, a, &d));
                        push(collinear_param(p, h, a, &d));
                    }
                    None => {}
                },
                None => {
                    let w = if p == g { h } else { g };
                    push(collinear_param(p, w, a, &d));
                }
            }
        }
        for w in self.vertices() {
            if w != p {
                push(collinear_param(p, w, a, &d));
            }
        }
        if collinear(a, b, p) {
            push(Some(&(p - a).dot(&d) / &d.norm2()));
        }
        ts.sort();
        ts.dedup();
        ts
    }

    fn sightline_clear(&self, p: &Point3, x: &Point3) -> bool {
        x != p
            && !self
                .edges()
                .iter()
                .any(|(g, h)| open_segment_meets_segment(p, x, g, h))
    }

    pub fn edge_visibility(&self, p: &Point3, e: usize) -> Result<EdgeVisibility, VisError> {
        if e >= self.edges().len() {
            return Err(VisError::UnknownEdge(e));
        }
        let ts = self.edge_breakpoints(p, e);
        // samples: t0, (t0,t1), t1, ..., t_m
        let mut samples = Vec::with_capacity(2 * ts.len());
        for (i, t) in ts.iter().enumerate() {
            samples.push(t.clone());
            if let Some(n) = ts.get(i + 1) {
                samples.push(Rat::midpoint(t, n));
            }
        }
        let mut seen = Vec::with_capacity(samples.len());
        let mut clear = Vec::with_capacity(samples.len());
        let p_class = match self.semantics() {
            Semantics::Polyhedron => Some(self.classify_point(p)),
            Semantics::Scene => None,
        };
        for t in &samples {
            let x = self.edge_point(e, t);
            let s = self.sees_point_from(p, p_class, &x);
            seen.push(s);
            clear.push(s && self.sightline_clear(p, &x));
        }
        Ok(EdgeVisibility {
            seen: VisibleSet {
                edge: e,
                intervals: World::runs(&ts, &seen),
            },
            clear: VisibleSet {
                edge: e,
                intervals: World::runs(&ts, &clear),
            },
        })
    }

    /// Merge maximal runs of visible samples into closed intervals. A run
    /// of one breakpoint is an isolated visible point (a vertex, or a point
    /// seen through the gap where two occluders meet along the sightline).
    fn runs(ts: &[Rat], flags: &[bool]) -> Vec<ParamInterval> {
        let bound = |k: usize, hi: bool| -> Rat {
            // even k: the point ts[k/2]; odd k: the open piece after ts[k/2]
            if k.is_multiple_of(2) || !hi {
                ts[k / 2].clone()
            } else {
                ts[k / 2 + 1].clone()
            }
        };
        let mut out = Vec::new();
        let mut k = 0;
        while k < flags.len() {
            if !flags[k] {
                k += 1;
                continue;
            }
            let start = k;
            while k + 1 < flags.len() && flags[k + 1] {
                k += 1;
            }
            out.push(ParamInterval::new(bound(start, false), bound(k, true)));
            k += 1;
        }
        out
    }

    /// E-set of edge `e`: visible points whose sightline is clear of edges.
    pub fn visible_subsegments(&self, p: &Point3, e: usize) -> Result<VisibleSet, VisError> {
        Ok(self.edge_visibility(p, e)?.clear)
    }

    pub fn all_edge_visibility(&self, p: &Point3) -> Result<Vec<EdgeVisibility>, VisError> {
        (0..self.edges().len())
            .map(|e| self.edge_visibility(p, e))
            .collect()
    }

    pub fn visible_vertices(&self, p: &Point3) -> Vec<usize> {
        (0..self.vertices().len())
            .filter(|&v| self.sees_point(p, &self.vertices()[v]))
            .collect()
    }

    /// `(weak, positive)`: edges with any seen point, and edges with a seen
    /// piece of positive length.
    pub fn count_visible_edges(&self, p: &Point3) -> Result<(usize, usize), VisError> {
        let all = self.all_edge_visibility(p)?;
        Ok(counts(&all))
    }

    /// Some edge whose E-set has two or more components of positive length.
    pub fn detect_split_edge(&self, p: &Point3) -> Result<Option<usize>, VisError> {
        let all = self.all_edge_visibility(p)?;
        Ok(all
            .iter()
            .find(|v| v.clear.positive_components() >= 2)
            .map(|v| v.clear.edge))
    }

    pub fn visibility_report(&self, p: &Point3) -> Result<VisibilityReport, VisError> {
        let all = self.all_edge_visibility(p)?;
        let (weak_count, positive_count) = counts(&all);
        Ok(VisibilityReport {
            point: p.clone(),
            semantics: self.semantics(),
            visible_vertices: self.visible_vertices(p),
            edges: all
                .into_iter()
                .map(|v| EdgeReport {
                    edge: v.clear.edge,
                    label: self.edge_label(v.clear.edge).to_string(),
                    intervals: v.clear.intervals,
                    seen: v.seen.intervals,
                })
                .collect(),
            weak_count,
            positive_count,
        })
    }
}

fn counts(all: &[EdgeVisibility]) -> (usize, usize) {
    let weak = all.iter().filter(|v| !v.seen.is_empty()).count();
    let positive = all.iter().filter(|v| v.seen.has_positive_part()).count();
    (weak, positive)
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub edge: usize,
    pub label: String,
    pub intervals: Vec<ParamInterval>,
    pub seen: Vec<ParamInterval>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VisibilityReport {
    pub point: Point3,
    pub semantics: Semantics,
    pub visible_vertices: Vec<usize>,
    pub edges: Vec<EdgeReport>,
    pub weak_count: usize,
    pub positive_count: usize,
}
