//! Diagram file parser.
//!
//! Diagrams are TOML documents:
//!
//! ```toml
//! boundary_in = [1, 2]      # open incoming ends, top to bottom (optional)
//! boundary_out = [4, 3]     # open outgoing ends, top to bottom (optional)
//!
//! [[crossings]]
//! sign = 1                  # +1 or -1
//! s1 = 1                    # incoming strand 1 (over at positive crossings)
//! s2 = 2                    # incoming strand 2 (over at negative crossings)
//! s1p = 3                   # outgoing continuation of strand 1
//! s2p = 4                   # outgoing continuation of strand 2
//! ccw = ["in:2", "out:3", "out:4", "in:1"]
//!
//! # base_region_hint = { segment = 1, side = "up" }
//! # closed_loops = [9]      # a single crossingless unknot component
//! ```
//!
//! `ccw` lists the four segment-ends counterclockwise; `in:N` is the end
//! where segment N enters the crossing, `out:N` where it leaves. The order
//! must be cyclically (in:s2, out:s1p, out:s2p, in:s1). Unknown fields are
//! rejected.

use super::{BaseRegionHint, Crossing, Diagram, EndKind, EndRef, SegmentId, Side, Sign};
use crate::error::{Error, Result};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    #[serde(default)]
    crossings: Vec<CrossingDoc>,
    #[serde(default)]
    boundary_in: Vec<u32>,
    #[serde(default)]
    boundary_out: Vec<u32>,
    #[serde(default)]
    closed_loops: Vec<u32>,
    #[serde(default)]
    base_region_hint: Option<HintDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossingDoc {
    sign: i8,
    s1: u32,
    s2: u32,
    s1p: u32,
    s2p: u32,
    ccw: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HintDoc {
    segment: u32,
    side: Side,
}

fn parse_end(s: &str, crossing: usize) -> Result<EndRef> {
    let (kind, id) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse {
            location: format!("crossings[{crossing}].ccw"),
            message: format!("end reference `{s}` must be `in:<segment>` or `out:<segment>`"),
        })?;
    let kind = match kind {
        "in" => EndKind::In,
        "out" => EndKind::Out,
        other => {
            return Err(Error::Parse {
                location: format!("crossings[{crossing}].ccw"),
                message: format!("unknown end kind `{other}`"),
            })
        }
    };
    let id: u32 = id.trim().parse().map_err(|_| Error::Parse {
        location: format!("crossings[{crossing}].ccw"),
        message: format!("invalid segment id in `{s}`"),
    })?;
    Ok(EndRef { seg: SegmentId(id), kind })
}

/// Parses and validates a diagram file.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let doc: DiagramDoc = toml::from_str(text).map_err(|e| Error::Parse {
        location: e
            .span()
            .map(|s| format!("bytes {}..{}", s.start, s.end))
            .unwrap_or_else(|| "document".into()),
        message: e.message().to_string(),
    })?;
    let mut crossings = Vec::with_capacity(doc.crossings.len());
    for (cix, c) in doc.crossings.iter().enumerate() {
        let sign = match c.sign {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            other => {
                return Err(Error::Parse {
                    location: format!("crossings[{cix}].sign"),
                    message: format!("sign must be 1 or -1, got {other}"),
                })
            }
        };
        if c.ccw.len() != 4 {
            return Err(Error::Parse {
                location: format!("crossings[{cix}].ccw"),
                message: format!("expected 4 end references, got {}", c.ccw.len()),
            });
        }
        let mut rotation = [EndRef { seg: SegmentId(0), kind: EndKind::In }; 4];
        for (k, s) in c.ccw.iter().enumerate() {
            rotation[k] = parse_end(s, cix)?;
        }
        crossings.push(Crossing {
            sign,
            s1: SegmentId(c.s1),
            s2: SegmentId(c.s2),
            s1p: SegmentId(c.s1p),
            s2p: SegmentId(c.s2p),
            rotation,
        });
    }
    Diagram::new(
        crossings,
        doc.boundary_in.into_iter().map(SegmentId).collect(),
        doc.boundary_out.into_iter().map(SegmentId).collect(),
        doc.closed_loops.into_iter().map(SegmentId).collect(),
        doc.base_region_hint
            .map(|h| BaseRegionHint { segment: SegmentId(h.segment), side: h.side }),
    )
}
