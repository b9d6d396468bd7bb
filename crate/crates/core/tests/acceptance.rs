//! Acceptance criteria. Each test writes one `PASS`/`FAIL` line straight to
//! stdout, so the lines show up even when output capture is on.

use std::io::Write;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sodvis::geom::{rat, Point3};
use sodvis::harness::{
    ray_oracle, sod_law_suite, theorem_suite, verify_section6, SuiteReport, TheoremStat,
    TrialConfig,
};
use sodvis::scene::{brush, cube, eight_edge_scene, tetrahedron};
use sodvis::sod::{swirl_in_hemisphere, Hemisphere};
use sodvis::sphere::{build_sod, semicircle_pierce_test};
use sodvis::visibility::World;

fn report(n: usize, pass: bool, what: &str) {
    let mark = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n:>2}: {mark}  {what}");
    let _ = out.flush();
}

fn theorems() -> &'static SuiteReport {
    static R: OnceLock<SuiteReport> = OnceLock::new();
    R.get_or_init(|| {
        theorem_suite(&TrialConfig {
            seed: 7,
            trials: 100,
            ..TrialConfig::default()
        })
    })
}

fn laws() -> &'static (SuiteReport, Duration) {
    static R: OnceLock<(SuiteReport, Duration)> = OnceLock::new();
    R.get_or_init(|| {
        let t = Instant::now();
        let r = sod_law_suite(
            &TrialConfig {
                seed: 3,
                trials: 1000,
                ..TrialConfig::default()
            },
            1000,
        );
        (r, t.elapsed())
    })
}

fn stat<'a>(r: &'a SuiteReport, prefix: &str) -> &'a TheoremStat {
    r.theorems
        .iter()
        .find(|t| t.name.starts_with(prefix))
        .unwrap_or_else(|| panic!("no theorem named {prefix:?}"))
}

fn tetra_over_facet() -> Point3 {
    Point3::new(rat(11, 30), rat(11, 30), rat(-11, 30))
}

fn brush_tip() -> Point3 {
    Point3::new(rat(1, 2), rat(5, 12), rat(49, 10))
}

#[test]
fn c01_eight_edge_verification_is_exact_and_fast() {
    let t = Instant::now();
    let r = verify_section6();
    let took = t.elapsed();
    let passed = |suffix: &str| {
        r.checks
            .iter()
            .filter(|c| c.name.ends_with(suffix) && c.pass)
            .count()
    };
    let points = passed(": point");
    let coeffs = passed(": barycentric coefficients");
    let pass = r.pass && points == 6 && coeffs == 4 && took < Duration::from_secs(5);
    report(
        1,
        pass,
        &format!(
            "eight-edge scene verifier: {} checks, {points}/6 occlusion points, {}/12 coefficients, {took:?}",
            r.checks.len(),
            coeffs * 3
        ),
    );
    assert!(
        pass,
        "{:#?}",
        r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
    );
}

#[test]
fn c02_origin_sees_no_vertex_and_eight_edges() {
    let w = World::scene(&eight_edge_scene());
    let o = Point3::origin();
    let vv = w.visible_vertices(&o);
    let (_, positive) = w.count_visible_edges(&o).unwrap();
    let pass = vv.is_empty() && positive == 8;
    report(
        2,
        pass,
        &format!(
            "origin: {} visible vertices, positive count {positive}",
            vv.len()
        ),
    );
    assert!(pass);
}

#[test]
fn c03_every_point_of_a_polyhedron_sees_six_edges() {
    let r = theorems();
    let weak = stat(r, "any point sees at least 6");
    let t = World::polyhedron(&tetrahedron());
    let b = World::polyhedron(&brush(2).unwrap());
    let tetra = t.count_visible_edges(&tetra_over_facet()).unwrap().0;
    let spike = b.count_visible_edges(&brush_tip()).unwrap().0;
    let pass = weak.pass() && weak.trials >= 300 && weak.min == Some(6) && tetra == 6 && spike == 6;
    report(
        3,
        pass,
        &format!(
            "weak count >= 6 over {} viewpoints (min {:?}); tetrahedron over a facet {tetra}, brush spike {spike}",
            weak.trials, weak.min
        ),
    );
    assert!(pass, "{:?}", weak.violations);
}

#[test]
fn c04_positive_portions() {
    let r = theorems();
    let inner = stat(r, "interior or boundary point");
    let outer = stat(r, "exterior point");
    let t = World::polyhedron(&tetrahedron());
    let centroid = t.count_visible_edges(&Point3::origin()).unwrap().1;
    let over = t.count_visible_edges(&tetra_over_facet()).unwrap().1;
    let pass = inner.pass()
        && outer.pass()
        && inner.trials > 0
        && outer.trials > 0
        && centroid == 6
        && over == 3;
    report(
        4,
        pass,
        &format!(
            "inside/boundary >= 6 ({} pts, min {:?}), outside >= 3 ({} pts, min {:?}); tetrahedron centroid {centroid}, over a facet {over}",
            inner.trials, inner.min, outer.trials, outer.min
        ),
    );
    assert!(pass, "{:?} {:?}", inner.violations, outer.violations);
}

#[test]
fn c05_cube_interior_sees_twelve() {
    let r = theorems();
    let c12 = stat(r, "cube interior point");
    let w = World::polyhedron(&cube(&rat(1, 1)).unwrap());
    let h = rat(1, 2);
    let centroid = w
        .count_visible_edges(&Point3::new(h.clone(), h.clone(), h))
        .unwrap()
        .0;
    let pass = c12.pass() && c12.trials > 0 && centroid == 12;
    report(
        5,
        pass,
        &format!(
            "cube interior weak count >= 12 over {} points (min {:?}); centroid {centroid}",
            c12.trials, c12.min
        ),
    );
    assert!(pass, "{:?}", c12.violations);
}

#[test]
fn c06_diagram_laws_over_random_trials() {
    let (r, took) = laws();
    let laws = stat(r, "diagram laws");
    let free = stat(r, "point seeing no vertex");
    let pass = r.pass
        && r.config.trials >= 1000
        && laws.trials == r.sod.viewpoints
        && r.sod.min_arcs.is_some_and(|n| n >= 8)
        && r.sod.min_swirls.is_some_and(|n| n >= 4)
        && r.sod.min_cover.is_some_and(|n| n >= 8)
        && *took < Duration::from_secs(600);
    report(
        6,
        pass,
        &format!(
            "{} scene trials, {} vertex-free viewpoints, {} law failures, min arcs {:?}, swirls {:?}, cover {:?}, {took:?}",
            r.config.trials,
            r.sod.viewpoints,
            laws.violations.len() + free.violations.len(),
            r.sod.min_arcs,
            r.sod.min_swirls,
            r.sod.min_cover
        ),
    );
    assert!(pass, "{:?} {:?}", laws.violations, free.violations);
}

#[test]
fn c07_random_hemispheres_hold_an_eye() {
    let w = World::scene(&eight_edge_scene());
    let sod = build_sod(&w, &Point3::origin()).unwrap();
    let faces = sod.map().faces();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut done, mut failures) = (0, Vec::new());
    while done < 100 {
        let mut c = || rng.gen_range(-1000..=1000);
        let Some(h) = Hemisphere::new(Point3::int(c(), c(), c())) else {
            continue;
        };
        done += 1;
        let ok = match swirl_in_hemisphere(&sod, &h) {
            Ok(walk) => {
                walk.swirl.corners.iter().all(|d| h.contains(d))
                    && walk
                        .swirl
                        .eye
                        .is_some_and(|e| faces[e].corners().all(|d| h.contains(d)))
            }
            Err(_) => false,
        };
        if !ok {
            failures.push(h.pole);
        }
    }
    let pass = failures.is_empty();
    report(
        7,
        pass,
        &format!(
            "{done} random hemispheres, {} without an eye inside",
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn c08_random_semicircles_cut_an_arc() {
    let w = World::scene(&eight_edge_scene());
    let sod = build_sod(&w, &Point3::origin()).unwrap();
    let direct = semicircle_pierce_test(sod.arcs(), 1000, 8);
    // the law suite runs the same test with 1000 semicircles on every
    // diagram it finds
    let (r, _) = laws();
    let suite_ok = stat(r, "diagram laws").pass();
    let pass = direct.counterexamples.is_empty() && suite_ok;
    report(
        8,
        pass,
        &format!(
            "1000 semicircles on the eight-edge diagram: {} misses; 1000 each on {} suite diagrams: {}",
            direct.counterexamples.len(),
            r.sod.viewpoints,
            if suite_ok { "no misses" } else { "misses found" }
        ),
    );
    assert!(pass, "{:?}", direct.counterexamples);
}

#[test]
fn c09_oracle_matches_engine() {
    let h = rat(1, 2);
    let pairs = [
        (
            "eight_edge_scene",
            World::scene(&eight_edge_scene()),
            Point3::origin(),
        ),
        (
            "tetrahedron",
            World::polyhedron(&tetrahedron()),
            Point3::origin(),
        ),
        (
            "tetrahedron",
            World::polyhedron(&tetrahedron()),
            tetra_over_facet(),
        ),
        (
            "cube",
            World::polyhedron(&cube(&rat(1, 1)).unwrap()),
            Point3::new(h.clone(), h.clone(), h),
        ),
        (
            "brush(2)",
            World::polyhedron(&brush(2).unwrap()),
            brush_tip(),
        ),
    ];
    let mut bad = Vec::new();
    let mut rays = 0;
    for (name, w, p) in &pairs {
        let r = ray_oracle(w, p, 10_000, 1);
        rays += r.samples;
        if r.samples < 10_000 || !r.agrees() {
            bad.push(format!("{name} at {p}: {:?}", r.disagreements));
        }
    }
    let pass = bad.is_empty();
    report(
        9,
        pass,
        &format!(
            "{} world/viewpoint pairs, {rays} rays, {} pairs with disagreements",
            pairs.len(),
            bad.len()
        ),
    );
    assert!(pass, "{bad:?}");
}

#[test]
fn c10_theorem_suite_output_is_deterministic() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sodvis"))
            .args(["suite", "theorems", "--seed", "7", "--trials", "100"])
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    let parses = serde_json::from_slice::<serde_json::Value>(&a.stdout).is_ok();
    let pass = a.status.code() == Some(0)
        && b.status.code() == Some(0)
        && parses
        && !a.stdout.is_empty()
        && a.stdout == b.stdout;
    report(
        10,
        pass,
        &format!(
            "two runs of `suite theorems --seed 7 --trials 100`: {} and {} bytes, identical: {}",
            a.stdout.len(),
            b.stdout.len(),
            a.stdout == b.stdout
        ),
    );
    assert!(pass);
}
