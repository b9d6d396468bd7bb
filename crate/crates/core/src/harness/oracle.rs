//! Brute-force ray casting, used to cross-check the visibility engine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geom::{Point3, PointLocation, Rat};
use crate::visibility::{Semantics, VisibleSet, World};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Hit {
    None,
    Polygon { polygon: usize, s: Rat },
    Edge { edge: usize, t: Rat, clear: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayRecord {
    pub dir: Point3,
    pub hit: Hit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub what: String,
    pub dir: Point3,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Rat>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub viewpoint: Point3,
    pub samples: usize,
    /// Directions rejected for touching an edge or vertex.
    pub resampled: usize,
    pub interval_checks: usize,
    pub records: Vec<RayRecord>,
    pub disagreements: Vec<Disagreement>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

enum LineContact {
    At(Rat),
    Span(Rat, Rat),
}

/// Where the line `p + s d` meets the closed segment `ab`.
fn line_segment_contact(p: &Point3, d: &Point3, a: &Point3, b: &Point3) -> Option<LineContact> {
    let w = b - a;
    let ap = a - p;
    let dw = d.cross(&w);
    if dw.is_zero() {
        if !ap.cross(d).is_zero() {
            return None;
        }
        let d2 = d.norm2();
        let sa = &ap.dot(d) / &d2;
        let sb = &(b - p).dot(d) / &d2;
        return Some(if sa <= sb {
            LineContact::Span(sa, sb)
        } else {
            LineContact::Span(sb, sa)
        });
    }
    if !ap.dot(&dw).is_zero() {
        return None;
    }
    let n2 = dw.norm2();
    let s = &ap.cross(&w).dot(&dw) / &n2;
    let r = &ap.cross(d).dot(&dw) / &n2;
    (!r.is_negative() && r <= Rat::one()).then_some(LineContact::At(s))
}

struct Caster<'a> {
    world: &'a World,
}

impl Caster<'_> {
    /// Transversal hits `(s, polygon)` of the ray `p + s d`, `s > 0`, sorted.
    fn polygon_hits(&self, p: &Point3, d: &Point3) -> Vec<(Rat, usize)> {
        let mut out = Vec::new();
        for (i, poly) in self.world.polygons().iter().enumerate() {
            let pl = poly.plane();
            let den = pl.normal.dot(d);
            if den.is_zero() {
                continue;
            }
            let s = &(-&pl.eval(p)) / &den;
            if s.is_positive() && poly.locate(&(p + &d.scale(&s))) != PointLocation::Outside {
                out.push((s, i));
            }
        }
        out.sort();
        out
    }

    fn ray_touches_edge(&self, p: &Point3, d: &Point3) -> bool {
        self.world
            .edges()
            .iter()
            .any(|(a, b)| match line_segment_contact(p, d, a, b) {
                Some(LineContact::At(s)) => s.is_positive(),
                Some(LineContact::Span(_, hi)) => hi.is_positive(),
                None => false,
            })
    }

    fn on_boundary(&self, m: &Point3) -> bool {
        self.world
            .polygons()
            .iter()
            .any(|f| f.plane().contains(m) && f.locate(m) != PointLocation::Outside)
    }

    /// Interior of the polyhedron, by parity along a generic ray.
    fn inside(&self, m: &Point3) -> bool {
        for k in 1i64.. {
            let r = Point3::int(k * k + 3, 2 * k - 7, 1 - k * k * k);
            let grazing = self
                .world
                .polygons()
                .iter()
                .any(|f| f.plane().contains(m) && f.plane().normal.dot(&r).is_zero());
            if grazing || self.ray_touches_edge(m, &r) {
                continue;
            }
            return self.polygon_hits(m, &r).len() % 2 == 1;
        }
        unreachable!()
    }

    /// -1 exterior, 0 boundary, 1 interior.
    fn class(&self, m: &Point3) -> i32 {
        if self.on_boundary(m) {
            0
        } else if self.inside(m) {
            1
        } else {
            -1
        }
    }

    /// Parameters in `[0, 1]` where `p + s (x - p)` meets an edge.
    fn edge_params(&self, p: &Point3, d: &Point3) -> Vec<Rat> {
        let mut out = Vec::new();
        let unit = |s: &Rat| !s.is_negative() && s <= &Rat::one();
        for (a, b) in self.world.edges() {
            match line_segment_contact(p, d, a, b) {
                Some(LineContact::At(s)) if unit(&s) => out.push(s),
                Some(LineContact::Span(lo, hi)) => {
                    out.extend([lo, hi].into_iter().filter(unit));
                }
                _ => {}
            }
        }
        out
    }

    fn visible(&self, p: &Point3, x: &Point3) -> bool {
        let d = x - p;
        if d.is_zero() {
            return true;
        }
        match self.world.semantics() {
            Semantics::Scene => !self
                .polygon_hits(p, &d)
                .iter()
                .any(|(s, _)| s < &Rat::one()),
            Semantics::Polyhedron => {
                let mut cuts: Vec<Rat> = self
                    .polygon_hits(p, &d)
                    .into_iter()
                    .map(|(s, _)| s)
                    .filter(|s| s < &Rat::one())
                    .collect();
                cuts.extend(self.edge_params(p, &d));
                cuts.push(Rat::zero());
                cuts.push(Rat::one());
                cuts.sort();
                cuts.dedup();
                let mut probes: Vec<Rat> = cuts.clone();
                probes.extend(cuts.windows(2).map(|w| Rat::midpoint(&w[0], &w[1])));
                let (mut int, mut ext) = (false, false);
                for s in probes {
                    match self.class(&(p + &d.scale(&s))) {
                        1 => int = true,
                        -1 => ext = true,
                        _ => {}
                    }
                    if int && ext {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// Visible and the open sightline misses every closed edge.
    fn clear(&self, p: &Point3, x: &Point3) -> bool {
        let d = x - p;
        if d.is_zero() || !self.visible(p, x) {
            return false;
        }
        let zero = Rat::zero();
        let one = Rat::one();
        !self
            .world
            .edges()
            .iter()
            .any(|(a, b)| match line_segment_contact(p, &d, a, b) {
                Some(LineContact::At(s)) => s > zero && s < one,
                Some(LineContact::Span(lo, hi)) => lo < one && hi > zero,
                None => false,
            })
    }
}

/// Oracle verdict against a closed visible set: hidden points inside the
/// set are allowed only at interval ends.
fn agrees(oracle: bool, set: &VisibleSet, t: &Rat) -> bool {
    match (oracle, set.contains(t)) {
        (true, inside) => inside,
        (false, false) => true,
        (false, true) => set
            .intervals
            .iter()
            .any(|iv| !iv.is_degenerate() && (&iv.lo == t || &iv.hi == t)),
    }
}

fn random_dir(rng: &mut ChaCha8Rng, bound: i64) -> Point3 {
    loop {
        let d = Point3::int(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        );
        if !d.is_zero() {
            return d;
        }
    }
}

fn random_unit_param(rng: &mut ChaCha8Rng) -> Rat {
    let den = rng.gen_range(2..=997i64);
    Rat::new(rng.gen_range(1..den), den)
}

/// Half of the budget goes to random directions (first hit must be visible,
/// points just past it hidden), half to random points on random edges
/// (clear sightline iff inside the engine's visible set). Every visible
/// interval's endpoints and midpoint are checked as well.
pub fn ray_oracle(world: &World, p: &Point3, n_dirs: usize, seed: u64) -> OracleReport {
    let caster = Caster { world };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = OracleReport {
        viewpoint: p.clone(),
        samples: n_dirs,
        resampled: 0,
        interval_checks: 0,
        records: Vec::with_capacity(n_dirs),
        disagreements: Vec::new(),
    };
    if n_dirs == 0 {
        return report;
    }
    let vis = match world.all_edge_visibility(p) {
        Ok(v) => v,
        Err(e) => {
            report.disagreements.push(Disagreement {
                what: format!("engine failed: {e}"),
                dir: Point3::origin(),
                edge: None,
                t: None,
            });
            return report;
        }
    };
    let flag = |report: &mut OracleReport,
                what: &str,
                dir: &Point3,
                edge: Option<usize>,
                t: Option<Rat>| {
        report.disagreements.push(Disagreement {
            what: what.to_string(),
            dir: dir.clone(),
            edge,
            t,
        });
    };

    // visible sets are stored closed; only midpoints and isolated points
    // must be strictly visible
    for (e, v) in vis.iter().enumerate() {
        for (set, strict) in [(&v.clear, true), (&v.seen, false)] {
            for iv in &set.intervals {
                let t = iv.midpoint();
                let x = world.edge_point(e, &t);
                report.interval_checks += 1;
                let ok = if strict {
                    caster.clear(p, &x)
                } else {
                    caster.visible(p, &x)
                };
                if !ok {
                    flag(
                        &mut report,
                        "engine interval point is hidden",
                        &(&x - p),
                        Some(e),
                        Some(t),
                    );
                }
            }
        }
    }

    let n_edges = world.edges().len();
    for i in 0..n_dirs {
        if i % 2 == 1 && n_edges > 0 {
            let e = rng.gen_range(0..n_edges);
            let t = random_unit_param(&mut rng);
            let x = world.edge_point(e, &t);
            let dir = &x - p;
            let clear = caster.clear(p, &x);
            let seen = x != *p && caster.visible(p, &x);
            if !agrees(clear, &vis[e].clear, &t) {
                flag(
                    &mut report,
                    "clear sightline disagrees with visible set",
                    &dir,
                    Some(e),
                    Some(t.clone()),
                );
            }
            if !agrees(seen, &vis[e].seen, &t) {
                flag(
                    &mut report,
                    "visibility disagrees with seen set",
                    &dir,
                    Some(e),
                    Some(t.clone()),
                );
            }
            report.records.push(RayRecord {
                dir,
                hit: Hit::Edge { edge: e, t, clear },
            });
            continue;
        }
        let d = loop {
            let d = random_dir(&mut rng, 1000);
            if caster.ray_touches_edge(p, &d) {
                report.resampled += 1;
                continue;
            }
            break d;
        };
        let hits = caster.polygon_hits(p, &d);
        let hit = match hits.first() {
            None => {
                if !world.sees_point(p, &(p + &d)) {
                    flag(
                        &mut report,
                        "unobstructed ray point reported hidden",
                        &d,
                        None,
                        None,
                    );
                }
                Hit::None
            }
            Some((s, poly)) => {
                let x = p + &d.scale(s);
                if !world.sees_point(p, &x) {
                    flag(&mut report, "first hit reported hidden", &d, None, None);
                }
                let beyond = match hits.get(1) {
                    Some((s2, _)) => Rat::midpoint(s, s2),
                    None => s + s,
                };
                if world.sees_point(p, &(p + &d.scale(&beyond))) {
                    flag(
                        &mut report,
                        "point behind first hit reported visible",
                        &d,
                        None,
                        None,
                    );
                }
                Hit::Polygon {
                    polygon: *poly,
                    s: s.clone(),
                }
            }
        };
        report.records.push(RayRecord { dir: d, hit });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;
    use crate::scene::{eight_edge_scene, tetrahedron};

    #[test]
    fn tetrahedron_centroid_rays_hit_facets() {
        let w = World::polyhedron(&tetrahedron());
        let r = ray_oracle(&w, &Point3::origin(), 200, 4);
        assert!(r.agrees(), "{:?}", r.disagreements);
        assert!(r.records.iter().all(|rec| !matches!(rec.hit, Hit::None)));
    }

    #[test]
    fn empty_budget() {
        let w = World::scene(&eight_edge_scene());
        let r = ray_oracle(&w, &Point3::origin(), 0, 1);
        assert!(r.records.is_empty() && r.disagreements.is_empty());
    }

    #[test]
    fn eight_edge_and_exterior_points_agree() {
        let w = World::scene(&eight_edge_scene());
        assert!(ray_oracle(&w, &Point3::origin(), 600, 2).agrees());
        let t = World::polyhedron(&tetrahedron());
        assert!(ray_oracle(
            &t,
            &Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30)),
            400,
            3
        )
        .agrees());
    }
}
