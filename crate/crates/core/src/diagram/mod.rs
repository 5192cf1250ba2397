//! Combinatorial tangle and knot diagrams.
//!
//! A diagram is a decorated 4-valent graph. Each crossing carries a sign and
//! four segment ends in the roles 1, 2, 1', 2' of the standard labeling:
//! strands run 1 -> 1' and 2 -> 2'; at a positive crossing strand 1 passes
//! over (1 and 1' are the same arc), at a negative crossing strand 2 does.
//!
//! The counterclockwise rotation at every crossing is, in role terms, the
//! cyclic order (in:2, out:1', out:2', in:1); the `ccw` field of the file
//! format is validated against this. Faces are traced from the rotation
//! system, and the region above a segment (`up`) is the face on the left of
//! the oriented segment. The four faces around a crossing are labeled
//! N = up(1) = up(2'), W = up(2) = dn(1), S = dn(2) = dn(1'),
//! E = up(1') = dn(2').
//!
//! Tangle boundaries attach to a virtual vertex closing the diagram on the
//! sphere; `boundary_in` and `boundary_out` list the open ends top to bottom
//! on the left and right walls. The topmost region is the face above the
//! first boundary segment.

mod parse;

pub use parse::parse_diagram;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// User-facing segment identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SegmentId(pub u32);

impl fmt::Display for SegmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Region (face) identifier, dense from 0.
pub type RegionId = usize;

/// Crossing sign epsilon(c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn epsilon(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }
}

/// Which end of a segment sits at a vertex: `In` is the head (the segment
/// flows into the vertex), `Out` is the tail (it leaves).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndKind {
    In,
    Out,
}

/// One of the four segment-ends around a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EndRef {
    pub seg: SegmentId,
    pub kind: EndKind,
}

/// The four roles at a crossing in the standard labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    In1,
    In2,
    Out1,
    Out2,
}

/// A crossing with its sign, role assignment and rotation.
#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    pub sign: Sign,
    pub s1: SegmentId,
    pub s2: SegmentId,
    pub s1p: SegmentId,
    pub s2p: SegmentId,
    /// Counterclockwise order of the four ends; must be cyclically equal to
    /// (in:s2, out:s1p, out:s2p, in:s1).
    pub rotation: [EndRef; 4],
}

impl Crossing {
    /// The canonical counterclockwise rotation implied by the roles.
    pub fn canonical_rotation(&self) -> [EndRef; 4] {
        [
            EndRef { seg: self.s2, kind: EndKind::In },
            EndRef { seg: self.s1p, kind: EndKind::Out },
            EndRef { seg: self.s2p, kind: EndKind::Out },
            EndRef { seg: self.s1, kind: EndKind::In },
        ]
    }

    /// Segment filling a role.
    pub fn seg(&self, role: Role) -> SegmentId {
        match role {
            Role::In1 => self.s1,
            Role::In2 => self.s2,
            Role::Out1 => self.s1p,
            Role::Out2 => self.s2p,
        }
    }

    /// The incoming over / under segments given the sign.
    pub fn over_in(&self) -> SegmentId {
        match self.sign {
            Sign::Positive => self.s1,
            Sign::Negative => self.s2,
        }
    }

    pub fn under_in(&self) -> SegmentId {
        match self.sign {
            Sign::Positive => self.s2,
            Sign::Negative => self.s1,
        }
    }
}

/// Side of a segment, used for base-region hints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Up,
    Dn,
}

/// Optional override for the base region: the region on the given side of
/// the given segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseRegionHint {
    pub segment: SegmentId,
    pub side: Side,
}

/// A validated combinatorial diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    /// Open incoming ends, top to bottom on the left wall.
    pub boundary_in: Vec<SegmentId>,
    /// Open outgoing ends, top to bottom on the right wall.
    pub boundary_out: Vec<SegmentId>,
    /// A single crossingless closed component, if the diagram is one.
    pub closed_loops: Vec<SegmentId>,
    pub base_region_hint: Option<BaseRegionHint>,
    segments: Vec<SegmentId>,
}

/// Where a given segment end is attached.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Attach {
    /// (crossing index, position in its rotation array)
    Crossing(usize, usize),
    /// Position in the virtual boundary vertex's rotation list.
    Boundary(usize),
    /// Closed-loop segments have no attachments.
    Loop,
}

impl Diagram {
    /// Builds and validates a diagram from raw parts.
    pub fn new(
        crossings: Vec<Crossing>,
        boundary_in: Vec<SegmentId>,
        boundary_out: Vec<SegmentId>,
        closed_loops: Vec<SegmentId>,
        base_region_hint: Option<BaseRegionHint>,
    ) -> Result<Diagram> {
        let mut segments: Vec<SegmentId> = Vec::new();
        for c in &crossings {
            segments.extend([c.s1, c.s2, c.s1p, c.s2p]);
        }
        segments.extend(boundary_in.iter().copied());
        segments.extend(boundary_out.iter().copied());
        segments.extend(closed_loops.iter().copied());
        segments.sort();
        segments.dedup();
        let d = Diagram {
            crossings,
            boundary_in,
            boundary_out,
            closed_loops,
            base_region_hint,
            segments,
        };
        d.validate()?;
        Ok(d)
    }

    /// Sorted list of segment ids.
    pub fn segments(&self) -> &[SegmentId] {
        &self.segments
    }

    pub fn num_segments(&self) -> usize {
        self.segments.len()
    }

    /// Dense index of a segment id.
    pub fn seg_ix(&self, id: SegmentId) -> Result<usize> {
        self.segments
            .binary_search(&id)
            .map_err(|_| Error::InvalidDiagram(format!("unknown segment id {id}")))
    }

    pub fn seg_id(&self, ix: usize) -> SegmentId {
        self.segments[ix]
    }

    /// For each segment (by dense index), the crossing and role where its
    /// head arrives, or None for boundary ends.
    pub fn head_roles(&self) -> Vec<Option<(usize, Role)>> {
        let mut out = vec![None; self.num_segments()];
        for (cix, c) in self.crossings.iter().enumerate() {
            out[self.seg_ix(c.s1).unwrap()] = Some((cix, Role::In1));
            out[self.seg_ix(c.s2).unwrap()] = Some((cix, Role::In2));
        }
        out
    }

    /// For each segment, the crossing and role where its tail leaves.
    pub fn tail_roles(&self) -> Vec<Option<(usize, Role)>> {
        let mut out = vec![None; self.num_segments()];
        for (cix, c) in self.crossings.iter().enumerate() {
            out[self.seg_ix(c.s1p).unwrap()] = Some((cix, Role::Out1));
            out[self.seg_ix(c.s2p).unwrap()] = Some((cix, Role::Out2));
        }
        out
    }

    fn validate(&self) -> Result<()> {
        if !self.closed_loops.is_empty()
            && (!self.crossings.is_empty()
                || !self.boundary_in.is_empty()
                || !self.boundary_out.is_empty())
        {
            return Err(Error::InvalidDiagram(
                "closed_loops are only supported as a standalone crossingless diagram".into(),
            ));
        }
        if self.closed_loops.len() > 1 {
            return Err(Error::InvalidDiagram(
                "at most one closed loop is supported (nesting is ambiguous)".into(),
            ));
        }
        // Each segment head is used exactly once (as a crossing input or a
        // boundary_out end), and each tail exactly once (crossing output or
        // boundary_in end). Closed loops use neither.
        let mut heads: BTreeMap<SegmentId, usize> = BTreeMap::new();
        let mut tails: BTreeMap<SegmentId, usize> = BTreeMap::new();
        for c in &self.crossings {
            *heads.entry(c.s1).or_insert(0) += 1;
            *heads.entry(c.s2).or_insert(0) += 1;
            *tails.entry(c.s1p).or_insert(0) += 1;
            *tails.entry(c.s2p).or_insert(0) += 1;
        }
        for &s in &self.boundary_out {
            *heads.entry(s).or_insert(0) += 1;
        }
        for &s in &self.boundary_in {
            *tails.entry(s).or_insert(0) += 1;
        }
        for &s in &self.segments {
            if self.closed_loops.contains(&s) {
                continue;
            }
            let h = heads.get(&s).copied().unwrap_or(0);
            if h != 1 {
                return Err(Error::DanglingEnd { segment: s.0, kind: "input/head", count: h });
            }
            let t = tails.get(&s).copied().unwrap_or(0);
            if t != 1 {
                return Err(Error::DanglingEnd { segment: s.0, kind: "output/tail", count: t });
            }
        }
        // Rotation must list exactly the four incident ends, once each,
        // cyclically in the canonical order.
        for (cix, c) in self.crossings.iter().enumerate() {
            let canon = c.canonical_rotation();
            let rot = &c.rotation;
            for e in &canon {
                if !rot.contains(e) {
                    return Err(Error::RotationInconsistent {
                        crossing: cix,
                        detail: format!(
                            "missing end {:?}:{} in ccw list",
                            e.kind, e.seg
                        ),
                    });
                }
            }
            let offset = (0..4).find(|&k| rot[k] == canon[0]).unwrap();
            for i in 0..4 {
                if rot[(offset + i) % 4] != canon[i] {
                    return Err(Error::RotationInconsistent {
                        crossing: cix,
                        detail: format!(
                            "ccw order must be cyclically (in:{}, out:{}, out:{}, in:{})",
                            c.s2, c.s1p, c.s2p, c.s1
                        ),
                    });
                }
            }
        }
        // Planarity / connectivity: face tracing must close with Euler
        // characteristic 2 on the associated sphere graph.
        self.trace_faces().map(|_| ())
    }

    /// Attachment of every segment end, plus the virtual boundary vertex's
    /// rotation (counterclockwise as seen from the sphere's far side, i.e.
    /// clockwise around the tangle box: out_1..out_m then in_n..in_1).
    fn attachments(&self) -> Result<(Vec<Attach>, Vec<Attach>, Vec<EndRef>)> {
        let n = self.num_segments();
        let mut head_at = vec![Attach::Loop; n];
        let mut tail_at = vec![Attach::Loop; n];
        for (cix, c) in self.crossings.iter().enumerate() {
            for (pos, e) in c.rotation.iter().enumerate() {
                let ix = self.seg_ix(e.seg)?;
                match e.kind {
                    EndKind::In => head_at[ix] = Attach::Crossing(cix, pos),
                    EndKind::Out => tail_at[ix] = Attach::Crossing(cix, pos),
                }
            }
        }
        let mut boundary_rot: Vec<EndRef> = Vec::new();
        for &s in &self.boundary_out {
            boundary_rot.push(EndRef { seg: s, kind: EndKind::In });
        }
        for &s in self.boundary_in.iter().rev() {
            boundary_rot.push(EndRef { seg: s, kind: EndKind::Out });
        }
        for (pos, e) in boundary_rot.iter().enumerate() {
            let ix = self.seg_ix(e.seg)?;
            match e.kind {
                EndKind::In => head_at[ix] = Attach::Boundary(pos),
                EndKind::Out => tail_at[ix] = Attach::Boundary(pos),
            }
        }
        Ok((head_at, tail_at, boundary_rot))
    }

    /// Traces the faces of the rotation system. Returns the face of each
    /// dart: `faces.0[i]` for the forward dart of segment i (the face on the
    /// left of the oriented segment, "up"), `faces.1[i]` for the backward
    /// dart ("dn"), and the number of faces.
    fn trace_faces(&self) -> Result<(Vec<RegionId>, Vec<RegionId>, usize)> {
        let n = self.num_segments();
        if n == 0 {
            return Ok((Vec::new(), Vec::new(), 1));
        }
        if self.closed_loops.len() == 1 {
            // A single crossingless loop: two faces, up and dn.
            return Ok((vec![0], vec![1], 2));
        }
        let (head_at, tail_at, boundary_rot) = self.attachments()?;

        // Dart d = 2*seg + 0 (forward, arrives at head) or +1 (backward,
        // arrives at tail). The face on the left of a dart continues by
        // leaving the arrival vertex along the clockwise-next end.
        let arrival = |d: usize| -> Attach {
            let (ix, fwd) = (d / 2, d % 2 == 0);
            if fwd {
                head_at[ix]
            } else {
                tail_at[ix]
            }
        };
        let next = |d: usize| -> Result<usize> {
            let (vrot, pos): (&[EndRef], usize) = match arrival(d) {
                Attach::Crossing(cix, pos) => (&self.crossings[cix].rotation, pos),
                Attach::Boundary(pos) => (&boundary_rot, pos),
                Attach::Loop => {
                    return Err(Error::InvalidDiagram("loop segment in face trace".into()))
                }
            };
            let len = vrot.len();
            let e = vrot[(pos + len - 1) % len];
            let ix = self.seg_ix(e.seg)?;
            Ok(match e.kind {
                // Leaving the vertex along a head end means traversing the
                // segment backward; along a tail end, forward.
                EndKind::In => 2 * ix + 1,
                EndKind::Out => 2 * ix,
            })
        };

        let mut face_of = vec![usize::MAX; 2 * n];
        let mut num_faces = 0usize;
        for d0 in 0..2 * n {
            if face_of[d0] != usize::MAX {
                continue;
            }
            let f = num_faces;
            num_faces += 1;
            let mut d = d0;
            loop {
                face_of[d] = f;
                d = next(d)?;
                if d == d0 {
                    break;
                }
                if face_of[d] != usize::MAX {
                    return Err(Error::InvalidDiagram(
                        "face trace merged into an existing face".into(),
                    ));
                }
            }
        }
        let vertices = self.crossings.len() as i64
            + if boundary_rot.is_empty() { 0 } else { 1 };
        let chi = vertices - n as i64 + num_faces as i64;
        if chi != 2 {
            return Err(Error::EulerCheckFailed { chi });
        }
        let up = (0..n).map(|i| face_of[2 * i]).collect();
        let dn = (0..n).map(|i| face_of[2 * i + 1]).collect();
        Ok((up, dn, num_faces))
    }
}

/// Partition of segments (arcs or components): `index_of[seg_ix]` is the
/// class index; classes are numbered by their smallest member id and
/// `rep[class]` is that id.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub index_of: Vec<usize>,
    pub rep: Vec<SegmentId>,
}

impl Partition {
    fn from_union_find(diagram: &Diagram, mut parent: Vec<usize>) -> Partition {
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let n = parent.len();
        let mut roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        // Name each class by its smallest segment id (= smallest index, as
        // segments are sorted).
        let mut seen: Vec<usize> = roots.clone();
        seen.sort_unstable();
        seen.dedup();
        let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut rep = Vec::new();
        // The smallest member of each class is the first index whose root is
        // that class's root.
        for i in 0..n {
            let r = roots[i];
            if !class_of_root.contains_key(&r) {
                class_of_root.insert(r, rep.len());
                rep.push(diagram.seg_id(i));
            }
        }
        for r in roots.iter_mut() {
            *r = class_of_root[r];
        }
        Partition { index_of: roots, rep }
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    /// Class index of a segment (by dense index).
    pub fn class(&self, seg_ix: usize) -> usize {
        self.index_of[seg_ix]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.index_of[a] == self.index_of[b]
    }
}

/// Corner labels around a crossing, in the order stored by
/// [`Combinatorics::corners`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    North = 0,
    West = 1,
    South = 2,
    East = 3,
}

/// Derived combinatorial structure of a diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct Combinatorics {
    pub num_regions: usize,
    /// Region above each segment (face on the left of the orientation).
    pub up: Vec<RegionId>,
    /// Region below each segment.
    pub dn: Vec<RegionId>,
    /// Arc partition: maximal chains of segments joined where the strand
    /// passes over.
    pub arcs: Partition,
    /// Component partition: strands 1<->1' and 2<->2' joined everywhere.
    pub components: Partition,
    /// The four corner regions [N, W, S, E] of each crossing.
    pub corners: Vec<[RegionId; 4]>,
    pub base_region: RegionId,
    /// Dual-graph adjacency: for each region, (neighbor, segment ix,
    /// exponent) where exponent +1 crosses up -> dn and -1 crosses dn -> up.
    pub region_adjacency: Vec<Vec<(RegionId, usize, i8)>>,
}

/// Computes faces, region structure, arcs and components of a valid diagram.
pub fn build_combinatorics(d: &Diagram) -> Result<Combinatorics> {
    let n = d.num_segments();
    let (up, dn, num_regions) = d.trace_faces()?;

    let mut arc_parent: Vec<usize> = (0..n).collect();
    let mut comp_parent: Vec<usize> = (0..n).collect();
    fn union(parent: &mut [usize], a: usize, b: usize) {
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let (ra, rb) = (find(parent, a), find(parent, b));
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
    for c in &d.crossings {
        let i1 = d.seg_ix(c.s1)?;
        let i2 = d.seg_ix(c.s2)?;
        let o1 = d.seg_ix(c.s1p)?;
        let o2 = d.seg_ix(c.s2p)?;
        union(&mut comp_parent, i1, o1);
        union(&mut comp_parent, i2, o2);
        match c.sign {
            Sign::Positive => union(&mut arc_parent, i1, o1),
            Sign::Negative => union(&mut arc_parent, i2, o2),
        }
    }

    let arcs = Partition::from_union_find(d, arc_parent);
    let components = Partition::from_union_find(d, comp_parent);

    let mut corners = Vec::with_capacity(d.crossings.len());
    for c in &d.crossings {
        let i1 = d.seg_ix(c.s1)?;
        let i2 = d.seg_ix(c.s2)?;
        let o1 = d.seg_ix(c.s1p)?;
        let o2 = d.seg_ix(c.s2p)?;
        let quad = [up[i1], up[i2], dn[i2], up[o1]];
        // The face structure closes up around the crossing.
        debug_assert_eq!(up[o2], quad[0]);
        debug_assert_eq!(dn[i1], quad[1]);
        debug_assert_eq!(dn[o1], quad[2]);
        debug_assert_eq!(dn[o2], quad[3]);
        corners.push(quad);
    }

    let base_region = match d.base_region_hint {
        Some(hint) => {
            let ix = d.seg_ix(hint.segment)?;
            match hint.side {
                Side::Up => up[ix],
                Side::Dn => dn[ix],
            }
        }
        None => {
            if let Some(&s) = d.boundary_out.first() {
                up[d.seg_ix(s)?]
            } else if let Some(&s) = d.boundary_in.first() {
                up[d.seg_ix(s)?]
            } else if n > 0 {
                // Closed diagram: any region is a legitimate anchor for over
                // paths; take the face above the smallest segment id.
                up[0]
            } else {
                0
            }
        }
    };

    let mut region_adjacency: Vec<Vec<(RegionId, usize, i8)>> = vec![Vec::new(); num_regions];
    for i in 0..n {
        region_adjacency[up[i]].push((dn[i], i, 1));
        region_adjacency[dn[i]].push((up[i], i, -1));
    }

    Ok(Combinatorics {
        num_regions,
        up,
        dn,
        arcs,
        components,
        corners,
        base_region,
        region_adjacency,
    })
}

/// A Wirtinger relation attached to a crossing. Positive crossings read
/// `out = over^-1 in over` (w_2' = w_1^-1 w_2 w_1), negative ones
/// `out = over in over^-1` (w_1' = w_2 w_1 w_2^-1). Arcs are named by their
/// smallest segment id.
#[derive(Debug, Clone, PartialEq)]
pub struct WirtingerRelation {
    pub crossing: usize,
    pub sign: Sign,
    pub out_arc: SegmentId,
    pub over_arc: SegmentId,
    pub in_arc: SegmentId,
}

impl fmt::Display for WirtingerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(
                f,
                "w{} = w{}^-1 w{} w{}",
                self.out_arc, self.over_arc, self.in_arc, self.over_arc
            ),
            Sign::Negative => write!(
                f,
                "w{} = w{} w{} w{}^-1",
                self.out_arc, self.over_arc, self.in_arc, self.over_arc
            ),
        }
    }
}

/// Presentation of the tangle group: one generator per arc, one relation per
/// crossing.
#[derive(Debug, Clone, PartialEq)]
pub struct WirtingerPresentation {
    /// Arc representatives (smallest segment id per arc), sorted.
    pub generators: Vec<SegmentId>,
    pub relations: Vec<WirtingerRelation>,
}

/// Builds the Wirtinger presentation of the diagram.
pub fn wirtinger_presentation(d: &Diagram, c: &Combinatorics) -> Result<WirtingerPresentation> {
    let arc_rep = |seg: SegmentId| -> Result<SegmentId> {
        Ok(c.arcs.rep[c.arcs.class(d.seg_ix(seg)?)])
    };
    let mut relations = Vec::with_capacity(d.crossings.len());
    for (cix, cr) in d.crossings.iter().enumerate() {
        let rel = match cr.sign {
            Sign::Positive => WirtingerRelation {
                crossing: cix,
                sign: cr.sign,
                out_arc: arc_rep(cr.s2p)?,
                over_arc: arc_rep(cr.s1)?,
                in_arc: arc_rep(cr.s2)?,
            },
            Sign::Negative => WirtingerRelation {
                crossing: cix,
                sign: cr.sign,
                out_arc: arc_rep(cr.s1p)?,
                over_arc: arc_rep(cr.s2)?,
                in_arc: arc_rep(cr.s1)?,
            },
        };
        relations.push(rel);
    }
    Ok(WirtingerPresentation { generators: c.arcs.rep.clone(), relations })
}

/// Level of a groupoid generator: paths above or below a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Above,
    Below,
}

/// One letter of a groupoid word: x_seg^level raised to exp in {-1, +1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Letter {
    pub seg_ix: usize,
    pub level: Level,
    pub exp: i8,
}

/// A word in the fundamental groupoid of the diagram, with its domain and
/// codomain regions. A letter with exp +1 steps from up(seg) to dn(seg).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupoidWord {
    pub letters: Vec<Letter>,
    pub domain: RegionId,
    pub codomain: RegionId,
}

impl GroupoidWord {
    /// Checks that consecutive letters compose in the region dual graph.
    pub fn check_composable(&self, c: &Combinatorics) -> Result<()> {
        let mut at = self.domain;
        for l in &self.letters {
            let (from, to) = if l.exp == 1 {
                (c.up[l.seg_ix], c.dn[l.seg_ix])
            } else {
                (c.dn[l.seg_ix], c.up[l.seg_ix])
            };
            if from != at {
                return Err(Error::InvalidDiagram(format!(
                    "groupoid word does not compose: at region {at}, letter crosses from {from}"
                )));
            }
            at = to;
        }
        if at != self.codomain {
            return Err(Error::InvalidDiagram(format!(
                "groupoid word ends at region {at}, declared codomain {}",
                self.codomain
            )));
        }
        Ok(())
    }
}

/// Breadth-first tree of over paths from the base region: for each region,
/// the path to it as a word in the x_i^+ generators.
pub fn over_path_tree(c: &Combinatorics) -> Vec<Option<GroupoidWord>> {
    let mut words: Vec<Option<GroupoidWord>> = vec![None; c.num_regions];
    let base = c.base_region;
    words[base] = Some(GroupoidWord { letters: Vec::new(), domain: base, codomain: base });
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(base);
    while let Some(r) = queue.pop_front() {
        let prefix = words[r].clone().unwrap();
        for &(nbr, seg_ix, exp) in &c.region_adjacency[r] {
            if words[nbr].is_some() {
                continue;
            }
            let mut letters = prefix.letters.clone();
            letters.push(Letter { seg_ix, level: Level::Above, exp });
            words[nbr] = Some(GroupoidWord { letters, domain: base, codomain: nbr });
            queue.push_back(nbr);
        }
    }
    words
}

/// Over path from the base region to region `j`: a word in the letters
/// x_i^+ only, with exponent +1 when the step crosses from up(i) to dn(i).
pub fn over_path(c: &Combinatorics, j: RegionId) -> Result<GroupoidWord> {
    let tree = over_path_tree(c);
    tree.into_iter()
        .nth(j)
        .flatten()
        .ok_or(Error::UnreachableRegion(j))
}

#[cfg(test)]
mod tests;
