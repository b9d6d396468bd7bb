use serde::Serialize;

use crate::sphere::VisMap;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub pass: bool,
    /// Offending arc ids (pairs for A1', `[arc, end]` for A2, `[host,
    /// hitters...]` for A3).
    pub witnesses: Vec<Vec<usize>>,
}

impl AxiomCheck {
    fn from_witnesses(witnesses: Vec<Vec<usize>>) -> AxiomCheck {
        AxiomCheck {
            pass: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// Arcs shorter than a semicircle and pairwise internally disjoint.
    pub a1: AxiomCheck,
    /// Both endpoints of every arc lie inside other arcs.
    pub a2: AxiomCheck,
    /// Arcs ending on a common arc all arrive from the same side.
    pub a3: AxiomCheck,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.a1.pass && self.a2.pass && self.a3.pass
    }
}

/// Side of `host`'s great circle on which arc `a` lies, given that its
/// endpoint `end` is on that circle: the sign of `n_host . other endpoint`.
pub fn arrival_side(map: &VisMap, a: usize, end: usize, host: usize) -> i32 {
    let other = map.arcs[a].endpoint(1 - end);
    map.arcs[host].normal.dot(other).signum()
}

pub fn check_axioms(map: &VisMap) -> AxiomReport {
    let arcs = &map.arcs;
    let mut a1 = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        if a.check().is_err() {
            a1.push(vec![a.id]);
        }
        for b in &arcs[i + 1..] {
            if a.interiors_meet(b) {
                a1.push(vec![a.id, b.id]);
            }
        }
    }
    let mut a2 = Vec::new();
    for (i, hs) in map.hosts.iter().enumerate() {
        for (end, h) in hs.iter().enumerate() {
            if h.is_none() {
                a2.push(vec![arcs[i].id, end]);
            }
        }
    }
    let mut a3 = Vec::new();
    for host in 0..arcs.len() {
        let mut hitters = Vec::new();
        let mut sides = Vec::new();
        for (a, hs) in map.hosts.iter().enumerate() {
            for (end, h) in hs.iter().enumerate() {
                if *h == Some(host) {
                    hitters.push(arcs[a].id);
                    sides.push(arrival_side(map, a, end, host));
                }
            }
        }
        let uniform = sides.iter().all(|&s| s != 0 && s == sides[0]);
        if !uniform {
            let mut w = vec![arcs[host].id];
            w.extend(hitters);
            a3.push(w);
        }
    }
    AxiomReport {
        a1: AxiomCheck::from_witnesses(a1),
        a2: AxiomCheck::from_witnesses(a2),
        a3: AxiomCheck::from_witnesses(a3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point3;
    use crate::sphere::Arc;

    fn arc(id: usize, u: (i64, i64, i64), v: (i64, i64, i64)) -> Arc {
        Arc::new(id, Point3::int(u.0, u.1, u.2), Point3::int(v.0, v.1, v.2)).unwrap()
    }

    #[test]
    fn single_arc_fails_a2() {
        let m = VisMap::from_arcs(None, vec![arc(0, (1, 0, 0), (0, 1, 0))]).unwrap();
        let r = check_axioms(&m);
        assert!(r.a1.pass && r.a3.pass);
        assert_eq!(r.a2.witnesses, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn crossing_arcs_fail_a1() {
        let m = VisMap::from_arcs(
            None,
            vec![arc(0, (1, -1, 0), (1, 1, 0)), arc(1, (1, 0, -1), (1, 0, 1))],
        )
        .unwrap();
        let r = check_axioms(&m);
        assert_eq!(r.a1.witnesses, vec![vec![0, 1]]);
    }

    #[test]
    fn opposite_sides_fail_a3() {
        let host = arc(0, (1, -2, 0), (1, 2, 0));
        let up = arc(1, (1, -1, 0), (1, -1, 1));
        let down = arc(2, (1, 1, 0), (1, 1, -1));
        let m = VisMap::from_arcs(None, vec![host, up, down]).unwrap();
        let r = check_axioms(&m);
        assert_eq!(r.a3.witnesses, vec![vec![0, 1, 2]]);
    }
}
