//! Command-line front end. Every command prints one JSON document.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use super::{ray_oracle, sod_law_suite, theorem_suite, verify_section6, TrialConfig};
use crate::geom::{Point3, Rat};
use crate::scene::{builtin, load_scene, scene_file, validate_scene, Builtin, Polyhedron, Scene};
use crate::sod::{analyze, arc_cover, check_axioms, check_cover, find_swirls, induced_cover};
use crate::sod::{swirl_graph, SemicircleCover};
use crate::sphere::{build_sod, semicircle_pierce_test, BuildSodError, Sod, SodFile};
use crate::visibility::{Semantics, World};

#[derive(Parser, Debug)]
#[command(
    name = "sodvis",
    about = "Exact edge visibility and spherical occlusion diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Scene files and builtins.
    #[command(subcommand)]
    Scene(SceneCmd),
    /// Edge visibility from a point.
    #[command(subcommand)]
    Vis(VisCmd),
    /// Spherical occlusion diagrams.
    #[command(subcommand)]
    Sod(SodCmd),
    /// Randomized and exact verification suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
    /// Compare the engine against brute-force ray casting.
    Oracle {
        #[command(flatten)]
        world: WorldArgs,
        #[arg(long, value_parser = parse_point)]
        point: Point3,
        #[arg(long, default_value_t = 10_000)]
        dirs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum SceneCmd {
    /// Parse a scene file or builtin and check interior disjointness.
    Validate {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        builtin: Option<String>,
    },
    /// Print a builtin as a scene file.
    Emit {
        #[arg(long)]
        builtin: String,
    },
}

#[derive(Subcommand, Debug)]
enum VisCmd {
    /// Visible vertices, per-edge intervals and the two edge counts.
    Stats {
        #[command(flatten)]
        world: WorldArgs,
        #[arg(long, value_parser = parse_point)]
        point: Point3,
    },
}

#[derive(Subcommand, Debug)]
enum SodCmd {
    /// Build the diagram seen from a point that sees no vertex.
    Build {
        #[command(flatten)]
        world: WorldArgs,
        #[arg(long, value_parser = parse_point)]
        point: Point3,
    },
    /// Axioms and structural laws of a diagram file.
    Check {
        #[arg(long)]
        sod: PathBuf,
    },
    /// Swirls, their eyes and the swirl graph of a diagram file.
    Swirls {
        #[arg(long)]
        sod: PathBuf,
    },
    /// A semicircle cover: induced by a scene and point, or one per arc of
    /// a diagram file.
    Cover {
        #[arg(long, conflicts_with_all = ["scene", "builtin", "point"])]
        sod: Option<PathBuf>,
        #[command(flatten)]
        world: OptWorldArgs,
        #[arg(long, value_parser = parse_point)]
        point: Option<Point3>,
        /// Random great semicircles to test against the arcs.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum SuiteCmd {
    /// Edge-count theorems over the corpus and random scenes.
    Theorems {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Diagram laws over random scene trials.
    Laws {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1000)]
        pierce: usize,
    },
    /// Exact check of the eight-edge scene.
    Section6,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct WorldSource {
    #[arg(long)]
    scene: Option<PathBuf>,
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
struct WorldArgs {
    #[command(flatten)]
    source: WorldSource,
    #[arg(long, value_parser = parse_semantics)]
    semantics: Option<Semantics>,
}

#[derive(Args, Debug)]
struct OptWorldArgs {
    #[arg(long, conflicts_with = "builtin")]
    scene: Option<PathBuf>,
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long, value_parser = parse_semantics)]
    semantics: Option<Semantics>,
}

fn parse_point(s: &str) -> Result<Point3, String> {
    let cs: Vec<&str> = s.split(',').collect();
    if cs.len() != 3 {
        return Err(format!("expected x,y,z, got {s:?}"));
    }
    let c = |t: &str| t.parse::<Rat>().map_err(|e| e.to_string());
    Ok(Point3::new(c(cs[0])?, c(cs[1])?, c(cs[2])?))
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    match s {
        "scene" => Ok(Semantics::Scene),
        "polyhedron" => Ok(Semantics::Polyhedron),
        _ => Err(format!("expected scene or polyhedron, got {s:?}")),
    }
}

/// Exit status and the text for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check failed: exit 1 with this document.
    Check(Value),
}

type Res = Result<Value, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn verdict(pass: bool, v: Value) -> Res {
    if pass {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

/// Scene plus, when closed, the polyhedron it bounds.
fn load(
    scene: Option<&PathBuf>,
    name: Option<&str>,
) -> Result<(Scene, Option<Polyhedron>), Failure> {
    match (scene, name) {
        (Some(path), _) => {
            let l = load_scene(path).map_err(usage)?;
            Ok((l.scene, l.polyhedron))
        }
        (None, Some(n)) => match builtin(n, &[]).map_err(usage)? {
            Builtin::Scene(s) => Ok((s, None)),
            Builtin::Polyhedron(p) => Ok((p.facets().clone(), Some(p))),
        },
        (None, None) => Err(usage("give --scene FILE or --builtin NAME")),
    }
}

fn world(
    scene: Option<&PathBuf>,
    name: Option<&str>,
    semantics: Option<Semantics>,
) -> Result<World, Failure> {
    let (s, poly) = load(scene, name)?;
    match (semantics, poly) {
        (Some(Semantics::Scene), _) => Ok(World::scene(&s)),
        (_, Some(p)) => Ok(World::polyhedron(&p)),
        (Some(Semantics::Polyhedron), None) => Err(usage(
            "polyhedron semantics needs a closed scene file or a polyhedron builtin",
        )),
        (None, None) => Ok(World::scene(&s)),
    }
}

fn world_of(w: &WorldArgs) -> Result<World, Failure> {
    world(
        w.source.scene.as_ref(),
        w.source.builtin.as_deref(),
        w.semantics,
    )
}

fn read_sod(path: &PathBuf) -> Result<SodFile, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// The file as a diagram, or a failure document with the axiom report.
fn sod_from_file(path: &PathBuf) -> Result<Sod, Failure> {
    let map = read_sod(path)?.to_map().map_err(usage)?;
    let axioms = check_axioms(&map);
    Sod::new(map).map_err(|_| Failure::Check(json!({ "pass": false, "axioms": to_value(&axioms) })))
}

fn scene_cmd(c: SceneCmd) -> Res {
    match c {
        SceneCmd::Validate { file, builtin } => {
            let (s, poly) = load(file.as_ref(), builtin.as_deref())?;
            let report = validate_scene(&s);
            verdict(
                report.is_valid(),
                json!({
                    "valid": report.is_valid(),
                    "polygons": s.polygons().len(),
                    "edges": s.edges().len(),
                    "closed": poly.is_some(),
                    "report": to_value(&report),
                }),
            )
        }
        SceneCmd::Emit { builtin } => {
            let (s, poly) = load(None, Some(&builtin))?;
            Ok(to_value(&scene_file(&s, poly.is_some())))
        }
    }
}

fn cover_doc(
    arcs: &[crate::sphere::Arc],
    cover: &SemicircleCover,
    samples: usize,
    seed: u64,
) -> Res {
    let check = check_cover(arcs, cover);
    let pierce = semicircle_pierce_test(arcs, samples, seed);
    let pass = check.pass && pierce.counterexamples.is_empty();
    verdict(
        pass,
        json!({
            "pass": pass,
            "cover": to_value(cover),
            "check": to_value(&check),
            "pierce": to_value(&pierce),
        }),
    )
}

fn sod_cmd(c: SodCmd) -> Res {
    match c {
        SodCmd::Build { world: w, point } => {
            let world = world_of(&w)?;
            match build_sod(&world, &point) {
                Ok(sod) => Ok(to_value(&sod.to_file())),
                Err(BuildSodError::VisibleVertex(v)) => Err(Failure::Check(json!({
                    "error": "visible_vertex",
                    "vertex": v,
                    "position": to_value(&world.vertices()[v]),
                }))),
                Err(BuildSodError::Axioms(r)) => Err(Failure::Check(json!({
                    "error": "axioms",
                    "axioms": to_value(&r),
                }))),
                Err(e) => Err(usage(e)),
            }
        }
        SodCmd::Check { sod } => {
            let sod = sod_from_file(&sod)?;
            let report = analyze(&sod, None).map_err(|e| {
                Failure::Check(json!({
                    "pass": false,
                    "error": e.to_string(),
                }))
            })?;
            let failures = report.law_failures();
            verdict(
                failures.is_empty(),
                json!({
                    "pass": failures.is_empty(),
                    "failures": failures,
                    "analysis": to_value(&report),
                }),
            )
        }
        SodCmd::Swirls { sod } => {
            let sod = sod_from_file(&sod)?;
            let swirls = find_swirls(&sod).map_err(|e| {
                Failure::Check(json!({
                    "pass": false,
                    "error": e.to_string(),
                }))
            })?;
            let graph = swirl_graph(&sod, &swirls);
            let check = graph.check();
            verdict(
                check.all_pass(),
                json!({
                    "pass": check.all_pass(),
                    "swirls": to_value(&swirls),
                    "swirl_graph": to_value(&graph),
                    "check": to_value(&check),
                }),
            )
        }
        SodCmd::Cover {
            sod,
            world: w,
            point,
            samples,
            seed,
        } => match (sod, point) {
            (Some(path), _) => {
                let sod = sod_from_file(&path)?;
                cover_doc(sod.arcs(), &arc_cover(sod.arcs()), samples, seed)
            }
            (None, Some(p)) => {
                let world = world(w.scene.as_ref(), w.builtin.as_deref(), w.semantics)?;
                let sod = build_sod(&world, &p).map_err(|e| {
                    Failure::Check(json!({ "pass": false, "error": e.to_string() }))
                })?;
                let cover = induced_cover(&world, &p, &sod).map_err(|e| {
                    Failure::Check(json!({ "pass": false, "error": e.to_string() }))
                })?;
                cover_doc(sod.arcs(), &cover, samples, seed)
            }
            (None, None) => Err(usage("give --sod FILE, or a world and --point")),
        },
    }
}

fn suite_cmd(c: SuiteCmd) -> Res {
    match c {
        SuiteCmd::Theorems { seed, trials } => {
            let cfg = TrialConfig {
                seed,
                trials,
                ..TrialConfig::default()
            };
            let r = theorem_suite(&cfg);
            verdict(r.pass, to_value(&r))
        }
        SuiteCmd::Laws {
            seed,
            trials,
            pierce,
        } => {
            let cfg = TrialConfig {
                seed,
                trials,
                ..TrialConfig::default()
            };
            let r = sod_law_suite(&cfg, pierce);
            verdict(r.pass, to_value(&r))
        }
        SuiteCmd::Section6 => {
            let r = verify_section6();
            verdict(r.pass, to_value(&r))
        }
    }
}

fn dispatch(c: Command) -> Res {
    match c {
        Command::Scene(c) => scene_cmd(c),
        Command::Vis(VisCmd::Stats { world: w, point }) => {
            let r = world_of(&w)?.visibility_report(&point).map_err(usage)?;
            Ok(to_value(&r))
        }
        Command::Sod(c) => sod_cmd(c),
        Command::Suite(c) => suite_cmd(c),
        Command::Oracle {
            world: w,
            point,
            dirs,
            seed,
        } => {
            let r = ray_oracle(&world_of(&w)?, &point, dirs, seed);
            verdict(r.agrees(), to_value(&r))
        }
    }
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutcome {
                        code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => CliOutcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let pretty = |v: &Value| serde_json::to_string_pretty(v).expect("json") + "\n";
    match dispatch(cli.command) {
        Ok(v) => CliOutcome {
            code: 0,
            stdout: pretty(&v),
            stderr: String::new(),
        },
        Err(Failure::Check(v)) => CliOutcome {
            code: 1,
            stdout: pretty(&v),
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => CliOutcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n\nRun `sodvis --help` for usage.\n"),
        },
    }
}
