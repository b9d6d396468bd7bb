//! Faces of an arc arrangement on the sphere, by half-edge walking.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::geom::{det3, Point3, Rat};

use super::arc::{canonical, Arc};

/// One sub-arc on a face boundary, traversed from `from` to `to` with the
/// face on the left as seen from outside the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceEdge {
    pub arc: usize,
    pub from: Point3,
    pub to: Point3,
    /// Traversed in the arc's own `u -> v` direction.
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereFace {
    pub id: usize,
    /// One closed walk per connected piece of the arrangement touching the
    /// face; empty for the whole sphere.
    pub boundary: Vec<Vec<FaceEdge>>,
}

impl SphereFace {
    /// Corner directions of every boundary walk.
    pub fn corners(&self) -> impl Iterator<Item = &Point3> {
        self.boundary.iter().flatten().map(|e| &e.from)
    }
}

struct Half {
    from: usize,
    to: usize,
    arc: usize,
    forward: bool,
}

/// Half-edge structure of an arrangement of arcs. Arcs may touch at
/// endpoints or end inside one another; transversal crossings are split.
pub struct Arrangement<'a> {
    arcs: &'a [Arc],
    nodes: Vec<Point3>,
    halves: Vec<Half>,
    next: Vec<usize>,
}

fn left_of(x: &Point3, y: &Point3) -> Point3 {
    x.cross(y)
}

/// Minor arc from `p` to `q` meets the closed sub-arc `[x, y]` (circle
/// normal `n`) at points other than `p`, `q`. Returns `None` when the
/// configuration is degenerate (shared circle or passing through `x`/`y`).
fn path_crossings(p: &Point3, q: &Point3, x: &Point3, y: &Point3, n: &Point3) -> Option<usize> {
    let np = p.cross(q);
    let l = np.cross(n);
    if l.is_zero() {
        return None;
    }
    let in_path = |d: &Point3| det3(p, d, &np).is_positive() && det3(d, q, &np).is_positive();
    let on_sub = |d: &Point3| !det3(x, d, n).is_negative() && !det3(d, y, n).is_negative();
    let mut count = 0;
    for d in [l.clone(), -&l] {
        if in_path(&d) && on_sub(&d) {
            if d.cross(x).is_zero() || d.cross(y).is_zero() {
                return None;
            }
            count += 1;
        }
    }
    Some(count)
}

impl<'a> Arrangement<'a> {
    pub fn new(arcs: &'a [Arc]) -> Arrangement<'a> {
        let mut index: BTreeMap<Point3, usize> = BTreeMap::new();
        let mut nodes = Vec::new();
        let mut add = |d: &Point3, nodes: &mut Vec<Point3>| {
            let key = canonical(d);
            *index.entry(key.clone()).or_insert_with(|| {
                nodes.push(key);
                nodes.len() - 1
            })
        };
        for a in arcs {
            add(&a.u, &mut nodes);
            add(&a.v, &mut nodes);
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                for c in a.crossings(b) {
                    add(&c, &mut nodes);
                }
            }
        }
        let mut halves = Vec::new();
        for (ai, a) in arcs.iter().enumerate() {
            let mut on: Vec<usize> = (0..nodes.len())
                .filter(|&k| a.contains(&nodes[k]))
                .collect();
            on.sort_by(|&i, &j| a.cmp_along(&nodes[i], &nodes[j]));
            for w in on.windows(2) {
                halves.push(Half {
                    from: w[0],
                    to: w[1],
                    arc: ai,
                    forward: true,
                });
                halves.push(Half {
                    from: w[1],
                    to: w[0],
                    arc: ai,
                    forward: false,
                });
            }
        }
        // outgoing half-edges around each node, counter-clockwise from outside
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for (h, he) in halves.iter().enumerate() {
            out[he.from].push(h);
        }
        for (x, list) in out.iter_mut().enumerate() {
            let xv = &nodes[x];
            let tangent = |h: usize| {
                let y = &nodes[halves[h].to];
                &y.scale(&xv.norm2()) - &xv.scale(&xv.dot(y))
            };
            if list.is_empty() {
                continue;
            }
            let r = tangent(list[0]);
            let half = |t: &Point3| -> u8 {
                let s = det3(&r, t, xv);
                if s.is_positive() || (s.is_zero() && r.dot(t).is_positive()) {
                    0
                } else {
                    1
                }
            };
            list.sort_by(|&h1, &h2| {
                let (t1, t2) = (tangent(h1), tangent(h2));
                half(&t1)
                    .cmp(&half(&t2))
                    .then_with(|| match det3(&t1, &t2, xv).signum() {
                        s if s > 0 => std::cmp::Ordering::Less,
                        0 => std::cmp::Ordering::Equal,
                        _ => std::cmp::Ordering::Greater,
                    })
            });
        }
        let mut pos = vec![0; halves.len()];
        for list in &out {
            for (i, &h) in list.iter().enumerate() {
                pos[h] = i;
            }
        }
        let next = (0..halves.len())
            .map(|h| {
                let twin = h ^ 1;
                let list = &out[halves[h].to];
                // the outgoing edge just clockwise of the twin keeps the face on the left
                list[(pos[twin] + list.len() - 1) % list.len()]
            })
            .collect();
        Arrangement {
            arcs,
            nodes,
            halves,
            next,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.halves.len() / 2
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.halves.len()];
        let mut cycles = Vec::new();
        for start in 0..self.halves.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                cyc.push(h);
                h = self.next[h];
            }
            cycles.push(cyc);
        }
        cycles
    }

    fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.nodes.len()];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for he in &self.halves {
            adj[he.from].push(he.to);
        }
        let mut count = 0;
        for s in 0..self.nodes.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// Number of connected pieces of the union of arcs.
    pub fn component_count(&self) -> usize {
        self.components().0
    }

    /// A point just left of the first half-edge of `cyc`, off every arc,
    /// reachable from that edge without touching any arc.
    fn sample_point(&self, cyc: &[usize]) -> Point3 {
        let he = &self.halves[cyc[0]];
        let (x, y) = (&self.nodes[he.from], &self.nodes[he.to]);
        let m = x + y;
        let n = left_of(x, y).scale(&m.norm2().recip());
        let mut eps = Rat::one();
        loop {
            let s = &m + &n.scale(&eps);
            let clear = self.arcs.iter().enumerate().all(|(ai, a)| {
                ai == he.arc || {
                    // the short path m -> s must miss arc `a`
                    let np = m.cross(&s);
                    let l = np.cross(&a.normal);
                    !a.contains(&s)
                        && (l.is_zero() && !a.contains(&m)
                            || !l.is_zero()
                                && [l.clone(), -&l].iter().all(|d| {
                                    !(!det3(&m, d, &np).is_negative()
                                        && !det3(d, &s, &np).is_negative()
                                        && a.contains(d))
                                }))
                }
            });
            if clear {
                return s;
            }
            eps = &eps * &Rat::new(1, 4);
        }
    }

    /// Is `s` (off every arc) inside the face bounded by the walk `cyc`?
    fn in_cycle_face(&self, s: &Point3, target: &Point3, cyc: &[usize]) -> bool {
        // edges walked once bound the face mod 2
        let mut uses: BTreeMap<usize, usize> = BTreeMap::new();
        for &h in cyc {
            *uses.entry(h / 2).or_default() += 1;
        }
        let boundary: Vec<usize> = uses
            .iter()
            .filter(|(_, &c)| c == 1)
            .map(|(&e, _)| e * 2)
            .collect();
        let crossings = |p: &Point3, q: &Point3| -> Option<usize> {
            if p.cross(q).is_zero() {
                return if p.dot(q).is_positive() {
                    Some(0)
                } else {
                    None
                };
            }
            let mut total = 0;
            for &h in &boundary {
                let he = &self.halves[h];
                let (x, y) = (&self.nodes[he.from], &self.nodes[he.to]);
                total += path_crossings(p, q, x, y, &x.cross(y))?;
            }
            Some(total)
        };
        if let Some(c) = crossings(s, target) {
            return c % 2 == 0;
        }
        for k in 1i64.. {
            let w = &(s + target)
                + &Point3::int(k, k * k, k * k * k - 3).scale(&Rat::new(1, 1 << k.min(40)));
            if w.is_zero() || self.arcs.iter().any(|a| a.contains(&w)) {
                continue;
            }
            if let (Some(a), Some(b)) = (crossings(s, &w), crossings(&w, target)) {
                return (a + b) % 2 == 0;
            }
        }
        unreachable!()
    }

    pub fn faces(&self) -> Vec<SphereFace> {
        if self.halves.is_empty() {
            return vec![SphereFace {
                id: 0,
                boundary: Vec::new(),
            }];
        }
        let cycles = self.cycles();
        let (ncomp, comp) = self.components();
        let walk = |cyc: &Vec<usize>| -> Vec<FaceEdge> {
            cyc.iter()
                .map(|&h| {
                    let he = &self.halves[h];
                    FaceEdge {
                        arc: self.arcs[he.arc].id,
                        from: self.nodes[he.from].clone(),
                        to: self.nodes[he.to].clone(),
                        forward: he.forward,
                    }
                })
                .collect()
        };
        if ncomp == 1 {
            return cycles
                .iter()
                .enumerate()
                .map(|(id, c)| SphereFace {
                    id,
                    boundary: vec![walk(c)],
                })
                .collect();
        }
        let cyc_comp: Vec<usize> = cycles
            .iter()
            .map(|c| comp[self.halves[c[0]].from])
            .collect();
        let samples: Vec<Point3> = cycles.iter().map(|c| self.sample_point(c)).collect();
        // signature: for every component, the cycle whose face holds the sample
        let signature = |ci: usize| -> Vec<usize> {
            (0..ncomp)
                .map(|k| {
                    if k == cyc_comp[ci] {
                        return ci;
                    }
                    (0..cycles.len())
                        .filter(|&cj| cyc_comp[cj] == k)
                        .find(|&cj| self.in_cycle_face(&samples[ci], &samples[cj], &cycles[cj]))
                        .expect("every point lies in some face of each component")
                })
                .collect()
        };
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for ci in 0..cycles.len() {
            groups.entry(signature(ci)).or_default().push(ci);
        }
        let mut faces: Vec<SphereFace> = groups
            .into_values()
            .map(|members| SphereFace {
                id: 0,
                boundary: members.iter().map(|&c| walk(&cycles[c])).collect(),
            })
            .collect();
        faces.sort_by_key(|f| f.boundary[0][0].arc);
        for (i, f) in faces.iter_mut().enumerate() {
            f.id = i;
        }
        faces
    }
}

pub fn enumerate_faces(arcs: &[Arc]) -> Vec<SphereFace> {
    Arrangement::new(arcs).faces()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(id: usize, u: (i64, i64, i64), v: (i64, i64, i64)) -> Arc {
        Arc::new(id, Point3::int(u.0, u.1, u.2), Point3::int(v.0, v.1, v.2)).unwrap()
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(enumerate_faces(&[]).len(), 1);
        let f = enumerate_faces(&[arc(0, (1, 0, 0), (0, 1, 0))]);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].boundary[0].len(), 2);
    }

    #[test]
    fn triangle_has_two_faces() {
        let t = [
            arc(0, (1, 0, 0), (0, 1, 0)),
            arc(1, (0, 1, 0), (0, 0, 1)),
            arc(2, (0, 0, 1), (1, 0, 0)),
        ];
        let f = enumerate_faces(&t);
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|face| face.boundary[0].len() == 3));
    }

    #[test]
    fn disjoint_pieces_share_faces() {
        // two small triangles far apart: 3 faces in all
        let a = [
            arc(0, (10, 0, 1), (10, 1, 0)),
            arc(1, (10, 1, 0), (10, 0, -1)),
            arc(2, (10, 0, -1), (10, 0, 1)),
        ];
        let mut all = a.to_vec();
        for (i, x) in a.iter().enumerate() {
            all.push(Arc::new(3 + i, -&x.u, -&x.v).unwrap());
        }
        let f = enumerate_faces(&all);
        assert_eq!(f.len(), 3);
        assert_eq!(f.iter().filter(|face| face.boundary.len() == 2).count(), 1);
    }

    #[test]
    fn crossing_arcs_are_split() {
        let x = [arc(0, (1, -1, 0), (1, 1, 0)), arc(1, (1, 0, -1), (1, 0, 1))];
        let g = Arrangement::new(&x);
        assert_eq!((g.node_count(), g.edge_count()), (5, 4));
        assert_eq!(g.faces().len(), 1);
    }
}
