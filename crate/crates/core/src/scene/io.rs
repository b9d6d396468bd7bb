use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::geom::Point3;

use super::{
    validate_scene, Polygon, PolygonError, Polyhedron, PolyhedronError, Scene, ValidationReport,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub id: String,
    pub vertices: Vec<Point3>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub holes: Vec<Vec<Point3>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub polygons: Vec<PolygonFile>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub closed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum SceneIoError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column} (field `{field}`): {message}")]
    Parse {
        line: usize,
        column: usize,
        field: String,
        message: String,
    },
    #[error("invalid polygon at index {index}: {source}")]
    Polygon { index: usize, source: PolygonError },
    #[error("scene has no polygons")]
    Empty,
    #[error("closed surface check failed: {0}")]
    Polyhedron(PolyhedronError),
}

/// A parsed scene file. Interior overlaps do not stop loading; they are
/// listed in `report`.
#[derive(Clone, Debug)]
pub struct LoadedScene {
    pub scene: Scene,
    pub polyhedron: Option<Polyhedron>,
    pub report: ValidationReport,
}

pub fn parse_scene(text: &str) -> Result<LoadedScene, SceneIoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: SceneFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        SceneIoError::Parse {
            line: inner.line(),
            column: inner.column(),
            field,
            message: inner.to_string(),
        }
    })?;
    if file.polygons.is_empty() {
        return Err(SceneIoError::Empty);
    }
    let polys = file
        .polygons
        .into_iter()
        .enumerate()
        .map(|(index, p)| {
            Polygon::with_holes(p.id, p.vertices, p.holes)
                .map_err(|source| SceneIoError::Polygon { index, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if file.closed {
        let poly = Polyhedron::new(polys).map_err(SceneIoError::Polyhedron)?;
        Ok(LoadedScene {
            scene: poly.facets().clone(),
            polyhedron: Some(poly),
            report: ValidationReport::default(),
        })
    } else {
        let scene = Scene::new(polys);
        let report = validate_scene(&scene);
        Ok(LoadedScene {
            scene,
            polyhedron: None,
            report,
        })
    }
}

pub fn load_scene(path: impl AsRef<Path>) -> Result<LoadedScene, SceneIoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| SceneIoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_scene(&text)
}

pub fn scene_file(s: &Scene, closed: bool) -> SceneFile {
    SceneFile {
        polygons: s
            .polygons()
            .iter()
            .map(|p| PolygonFile {
                id: p.id().to_string(),
                vertices: p.outer().to_vec(),
                holes: p.holes().to_vec(),
            })
            .collect(),
        closed,
    }
}

pub fn scene_to_json(s: &Scene, closed: bool) -> String {
    serde_json::to_string_pretty(&scene_file(s, closed)).expect("scene serializes")
}

pub fn save_scene(s: &Scene, closed: bool, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, scene_to_json(s, closed) + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::{brush, eight_edge_scene};

    #[test]
    fn round_trip() {
        let s = eight_edge_scene();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        save_scene(&s, false, &path).unwrap();
        let back = load_scene(&path).unwrap();
        assert_eq!(back.scene, s);
        assert!(back.report.is_valid());

        let b = brush(2).unwrap();
        let text = scene_to_json(b.facets(), true);
        let back = parse_scene(&text).unwrap();
        assert_eq!(back.polyhedron.unwrap(), b);
    }

    #[test]
    fn zero_denominator_is_a_parse_error() {
        let text =
            r#"{"polygons":[{"id":"a","vertices":[["0","0","0"],["1/0","0","0"],["0","1","0"]]}]}"#;
        match parse_scene(text) {
            Err(SceneIoError::Parse { field, .. }) => {
                assert_eq!(field, "polygons[0].vertices[1][0]")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn overlap_loads_with_report() {
        let text = r#"{"polygons":[
            {"id":"a","vertices":[["0","0","0"],["2","0","0"],["0","2","0"]]},
            {"id":"b","vertices":[["1/2","1/2","0"],["3","1/2","0"],["1/2","3","0"]]}]}"#;
        let l = parse_scene(text).unwrap();
        assert_eq!(l.report.violations.len(), 1);
    }
}
