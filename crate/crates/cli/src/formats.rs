//! Wire and file formats: the stable-pair JSON contract, pile-configuration
//! text, shadow-diagram JSON and SVG, and number-table rendering.
//!
//! Stable pairs serialize as
//! `{"n": 8, "R": [[6,4,1],[5,2],[8,7,3]], "S": [[1,2,4],[3,7],[5,6,8]]}`:
//! piles left to right, insertion cards bottom to top, recording indices in
//! arrival order. This byte form is the round-trip contract of the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};

use patience_core::enumeration::{BigUint, LowerTriangular};
use patience_core::geometry::{crossings, ShadowDiagram};
use patience_core::patience::StablePair;
use patience_core::perm::PileConfig;

#[derive(Clone, Debug)]
pub enum FormatError {
    Json(String),
    Invalid(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(m) => write!(f, "bad JSON: {m}"),
            FormatError::Invalid(m) => write!(f, "invalid value: {m}"),
        }
    }
}

impl std::error::Error for FormatError {}

#[derive(Serialize, Deserialize)]
pub struct StablePairJson {
    pub n: usize,
    #[serde(rename = "R")]
    pub r: Vec<Vec<u32>>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<u32>>,
}

pub fn stable_pair_to_json(pair: &StablePair) -> String {
    let r = pair
        .insertion()
        .piles()
        .iter()
        .map(|p| p.cards().to_vec())
        .collect();
    let s = (0..pair.recording().pile_count())
        .map(|j| pair.recording_arrivals(j))
        .collect();
    let doc = StablePairJson {
        n: pair.n(),
        r,
        s,
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn stable_pair_from_json(text: &str) -> Result<StablePair, FormatError> {
    let doc: StablePairJson =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let insertion =
        PileConfig::new(doc.r).map_err(|e| FormatError::Invalid(format!("R piles: {e}")))?;
    let recording_stacks: Vec<Vec<u32>> = doc
        .s
        .into_iter()
        .map(|mut arrivals| {
            arrivals.reverse();
            arrivals
        })
        .collect();
    let recording = PileConfig::new(recording_stacks)
        .map_err(|e| FormatError::Invalid(format!("S piles: {e}")))?;
    if insertion.n() != doc.n || recording.n() != doc.n {
        return Err(FormatError::Invalid(format!(
            "declared n = {} does not match the {} cards given",
            doc.n,
            insertion.n()
        )));
    }
    StablePair::from_configs(insertion, recording)
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

/// Piles as `"6 4 1 | 5 2 | 8 7 3"`.
pub fn pile_config_text(r: &PileConfig) -> String {
    r.piles()
        .iter()
        .map(|p| {
            p.cards()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

#[derive(Serialize, Deserialize)]
pub struct PileConfigJson {
    pub n: usize,
    pub piles: Vec<Vec<u32>>,
}

pub fn pile_config_to_json(r: &PileConfig) -> String {
    let doc = PileConfigJson {
        n: r.n(),
        piles: r.piles().iter().map(|p| p.cards().to_vec()).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[derive(Serialize)]
pub struct LineJson {
    pub anchors: Vec<[u32; 2]>,
    pub vertices: Vec<[u32; 2]>,
    pub salient: Vec<[u32; 2]>,
}

#[derive(Serialize)]
pub struct CrossingJson {
    /// `[x numerator, x denominator, y numerator, y denominator]`.
    pub at: [i64; 4],
    /// 1-based indices of the two lines involved.
    pub lines: [usize; 2],
}

#[derive(Serialize)]
pub struct DiagramJson {
    pub iterate: usize,
    pub lines: Vec<LineJson>,
    pub crossings: Vec<CrossingJson>,
}

pub fn diagram_to_json_value(d: &ShadowDiagram) -> DiagramJson {
    let lines = d
        .lines()
        .iter()
        .map(|l| LineJson {
            anchors: l.anchors().iter().map(|a| [a.x, a.y]).collect(),
            vertices: l.vertices().iter().map(|&(x, y)| [x, y]).collect(),
            salient: l.salient_points().iter().map(|a| [a.x, a.y]).collect(),
        })
        .collect();
    let crossings = crossings(d)
        .into_iter()
        .map(|c| CrossingJson {
            at: [
                *c.at.0.numer(),
                *c.at.0.denom(),
                *c.at.1.numer(),
                *c.at.1.denom(),
            ],
            lines: [c.lines.0, c.lines.1],
        })
        .collect();
    DiagramJson {
        iterate: d.index(),
        lines,
        crossings,
    }
}

pub fn diagram_to_json(d: &ShadowDiagram) -> String {
    serde_json::to_string(&diagram_to_json_value(d)).expect("serializable")
}

pub fn diagrams_to_json(ds: &[ShadowDiagram]) -> String {
    let docs: Vec<DiagramJson> = ds.iter().map(diagram_to_json_value).collect();
    serde_json::to_string(&docs).expect("serializable")
}

const SCALE: i64 = 32;
const MARGIN: i64 = 28;

/// One SVG document; several diagrams are laid out as panels left to
/// right. Anchors are filled circles, salient points open circles,
/// crossings cross markers; the y axis points up.
pub fn diagrams_to_svg(ds: &[ShadowDiagram]) -> String {
    let extent = ds
        .iter()
        .flat_map(|d| d.lines().iter())
        .flat_map(|l| l.anchors())
        .map(|a| a.x.max(a.y) as i64)
        .max()
        .unwrap_or(1)
        + 1;
    let panel = extent * SCALE + 2 * MARGIN;
    let width = panel * ds.len().max(1) as i64;
    let height = extent * SCALE + 2 * MARGIN;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    for (i, d) in ds.iter().enumerate() {
        let dx = panel * i as i64;
        out.push_str(&format!("  <g transform=\"translate({dx},0)\">\n"));
        let px = |x: i64| MARGIN + x * SCALE;
        let py = |y: i64| MARGIN + (extent - y) * SCALE;
        // axes
        out.push_str(&format!(
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\"/>\n",
            px(0),
            py(0),
            px(extent),
            py(0)
        ));
        out.push_str(&format!(
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\"/>\n",
            px(0),
            py(0),
            px(0),
            py(extent)
        ));
        for line in d.lines() {
            let pts: Vec<String> = line
                .vertices()
                .iter()
                .map(|&(x, y)| format!("{},{}", px(x as i64), py(y as i64)))
                .collect();
            out.push_str(&format!(
                "    <polyline fill=\"none\" stroke=\"#334\" stroke-width=\"2\" points=\"{}\"/>\n",
                pts.join(" ")
            ));
        }
        for line in d.lines() {
            for a in line.anchors() {
                out.push_str(&format!(
                    "    <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#111\"/>\n",
                    px(a.x as i64),
                    py(a.y as i64)
                ));
            }
            for s in line.salient_points() {
                out.push_str(&format!(
                    "    <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"white\" stroke=\"#111\"/>\n",
                    px(s.x as i64),
                    py(s.y as i64)
                ));
            }
        }
        for c in crossings(d) {
            // crossing coordinates are rational; scale exactly then round
            let cx = MARGIN as f64
                + (*c.at.0.numer() as f64 / *c.at.0.denom() as f64) * SCALE as f64;
            let cy = MARGIN as f64
                + (extent as f64 - *c.at.1.numer() as f64 / *c.at.1.denom() as f64) * SCALE as f64;
            out.push_str(&format!(
                "    <path d=\"M {x0} {y0} L {x1} {y1} M {x0} {y1} L {x1} {y0}\" \
                 stroke=\"#c00\" stroke-width=\"2\"/>\n",
                x0 = cx - 5.0,
                y0 = cy - 5.0,
                x1 = cx + 5.0,
                y1 = cy + 5.0
            ));
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

pub fn sequence_text(vals: &[BigUint]) -> String {
    vals.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn sequence_to_json(key: &str, vals: &[BigUint]) -> String {
    let strings: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
    let mut map = serde_json::Map::new();
    map.insert(key.to_string(), serde_json::json!(strings));
    serde_json::Value::Object(map).to_string()
}

/// Triangle rows, right-aligned per column.
pub fn triangle_text(m: &LowerTriangular) -> String {
    let size = m.size();
    let mut widths = vec![0usize; size];
    for i in 0..size {
        for (j, v) in m.row(i).iter().enumerate() {
            widths[j] = widths[j].max(v.to_string().len());
        }
    }
    let mut out = String::new();
    for i in 0..size {
        let cells: Vec<String> = m
            .row(i)
            .iter()
            .enumerate()
            .map(|(j, v)| format!("{:>width$}", v.to_string(), width = widths[j]))
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn triangle_to_json(key: &str, m: &LowerTriangular) -> String {
    let rows: Vec<Vec<String>> = (0..m.size())
        .map(|i| m.row(i).iter().map(|v| v.to_string()).collect())
        .collect();
    let mut map = serde_json::Map::new();
    map.insert(key.to_string(), serde_json::json!(rows));
    serde_json::Value::Object(map).to_string()
}
