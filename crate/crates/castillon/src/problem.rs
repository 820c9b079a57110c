//! Problem files.
//!
//! ```json
//! {"triangle": {"a": 6, "b": 9, "c": 13}, "circle": "incircle"}
//! {"triangle": {"vertices": [[0,0],[4,0],[1,3]]}, "inconic_perspector": [1,1,1]}
//! {"circle": {"center": [0,0], "radius": 1}, "points": [[5,0],[0,4],[-3,-3]]}
//! ```

use castillon_core::geom::{circle_for, CircleData, CircleTag, HomoBary, Point, TriangleData, Vertex};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TriangleInput {
    Sides { a: f64, b: f64, c: f64 },
    Vertices { vertices: [[f64; 2]; 3] },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitCircle {
    pub center: [f64; 2],
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CircleInput {
    Named(String),
    Explicit(ExplicitCircle),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<TriangleInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circle: Option<CircleInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inconic_perspector: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[f64; 2]>>,
}

/// A problem after validation.
#[derive(Clone, Debug, PartialEq)]
pub enum Problem {
    /// Triangle vertices on one of its tritangent circles.
    Tritangent { triangle: TriangleData, tag: CircleTag },
    /// Triangle vertices on an inconic given by its perspector.
    Inconic { triangle: TriangleData, perspector: HomoBary },
    /// Any circle and any list of points.
    General { circle: CircleData, points: Vec<Point>, triangle: Option<TriangleData> },
}

pub fn parse_tag(name: &str) -> Option<CircleTag> {
    Some(match name {
        "incircle" => CircleTag::Incircle,
        "excircle-A" => CircleTag::Excircle(Vertex::A),
        "excircle-B" => CircleTag::Excircle(Vertex::B),
        "excircle-C" => CircleTag::Excircle(Vertex::C),
        _ => return None,
    })
}

fn point(p: [f64; 2]) -> Point {
    Point::new(p[0], p[1])
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<ProblemFile, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Input(format!("problem file, line {} column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn triangle_data(&self) -> Result<Option<TriangleData>, CliError> {
        let Some(tri) = &self.triangle else { return Ok(None) };
        let t = match tri {
            TriangleInput::Sides { a, b, c } => {
                if !(*a > 0.0 && *b > 0.0 && *c > 0.0) {
                    return Err(CliError::Input("sidelengths must be positive".into()));
                }
                if !(a + b > *c && b + c > *a && c + a > *b) {
                    return Err(CliError::Input("sidelengths violate the triangle inequality".into()));
                }
                TriangleData::from_sides(*a, *b, *c)
            }
            TriangleInput::Vertices { vertices } => TriangleData::from_vertices(vertices.map(point)),
        };
        t.map(Some).map_err(CliError::from)
    }

    pub fn resolve(&self) -> Result<Problem, CliError> {
        let triangle = self.triangle_data()?;
        match (&triangle, &self.circle, &self.inconic_perspector, &self.points) {
            (Some(t), Some(CircleInput::Named(name)), None, None) => {
                let tag = parse_tag(name).ok_or_else(|| {
                    CliError::Input(format!(
                        "unknown circle {name:?}; expected incircle, excircle-A, excircle-B or excircle-C"
                    ))
                })?;
                Ok(Problem::Tritangent { triangle: *t, tag })
            }
            (Some(t), None, Some(p), None) => {
                Ok(Problem::Inconic { triangle: *t, perspector: HomoBary::new(p[0], p[1], p[2]) })
            }
            (Some(t), Some(CircleInput::Explicit(c)), None, None) => Ok(Problem::General {
                circle: CircleData::new(point(c.center), c.radius)?,
                points: t.vertices().to_vec(),
                triangle: Some(*t),
            }),
            (None, Some(CircleInput::Explicit(c)), None, Some(pts)) => Ok(Problem::General {
                circle: CircleData::new(point(c.center), c.radius)?,
                points: pts.iter().copied().map(point).collect(),
                triangle: None,
            }),
            (Some(t), Some(CircleInput::Named(name)), None, Some(pts)) => {
                let tag = parse_tag(name).ok_or_else(|| CliError::Input(format!("unknown circle {name:?}")))?;
                Ok(Problem::General {
                    circle: circle_for(t, tag),
                    points: pts.iter().copied().map(point).collect(),
                    triangle: Some(*t),
                })
            }
            _ => Err(CliError::Input(
                "expected one of: triangle + named circle, triangle + inconic_perspector, \
                 triangle + explicit circle, or explicit circle + points"
                    .into(),
            )),
        }
    }
}

impl Problem {
    pub fn triangle(&self) -> Option<&TriangleData> {
        match self {
            Problem::Tritangent { triangle, .. } | Problem::Inconic { triangle, .. } => Some(triangle),
            Problem::General { triangle, .. } => triangle.as_ref(),
        }
    }
}
