//! Deterministic diagram and coloring generators for the verification
//! suites.
//!
//! Braid-style builders produce correctly rotated crossings by construction:
//! a letter at position p crosses the strands at positions p and p+1
//! (0-based, top to bottom), with the strand entering top-left in role 1 and
//! the one entering bottom-left in role 2. Positive letters make the role-1
//! strand pass over, negative letters the role-2 strand. Closures identify
//! the outgoing strand ends with the incoming ones.

use crate::coloring::{decorate, propagate_shadow, DecorationChoice, ShadowColoring, Sl2Coloring};
use crate::diagram::{
    build_combinatorics, Combinatorics, Crossing, Diagram, EndKind, EndRef, SegmentId, Sign,
};
use crate::error::{Error, Result};
use crate::gauge::random_sl2;
use crate::mat2::{ColVec, Mat2, RowLine};
use crate::numeric::NumericContext;
use crate::C64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// One braid letter: crossing at `position` (0-based from the top) with the
/// given sign.
pub type BraidLetter = (usize, Sign);

const PLACEHOLDER_END: EndRef = EndRef { seg: SegmentId(0), kind: EndKind::In };

fn braid_crossings(
    strands: usize,
    word: &[BraidLetter],
) -> Result<(Vec<Crossing>, Vec<u32>, Vec<u32>)> {
    if strands < 2 {
        return Err(Error::InvalidDiagram("a braid needs at least 2 strands".into()));
    }
    let init: Vec<u32> = (1..=strands as u32).collect();
    let mut cur = init.clone();
    let mut next_id = strands as u32 + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for &(pos, sign) in word {
        if pos + 1 >= strands {
            return Err(Error::InvalidDiagram(format!(
                "braid letter position {pos} out of range for {strands} strands"
            )));
        }
        let s1 = SegmentId(cur[pos]);
        let s2 = SegmentId(cur[pos + 1]);
        let s2p = SegmentId(next_id);
        let s1p = SegmentId(next_id + 1);
        next_id += 2;
        let mut c = Crossing { sign, s1, s2, s1p, s2p, rotation: [PLACEHOLDER_END; 4] };
        c.rotation = c.canonical_rotation();
        crossings.push(c);
        // The strands swap: the role-1 strand exits at the lower position.
        cur[pos] = s2p.0;
        cur[pos + 1] = s1p.0;
    }
    Ok((crossings, init, cur))
}

/// Open braid tangle: `strands` incoming and outgoing ends.
pub fn braid_tangle(strands: usize, word: &[BraidLetter]) -> Result<Diagram> {
    let (crossings, init, cur) = braid_crossings(strands, word)?;
    Diagram::new(
        crossings,
        init.into_iter().map(SegmentId).collect(),
        cur.into_iter().map(SegmentId).collect(),
        Vec::new(),
        None,
    )
}

/// Braid closure: outgoing ends rejoined to the incoming ones. Every strand
/// position must be crossed at least once.
pub fn braid_closure(strands: usize, word: &[BraidLetter]) -> Result<Diagram> {
    let (mut crossings, init, cur) = braid_crossings(strands, word)?;
    let mut rename: BTreeMap<u32, u32> = BTreeMap::new();
    for p in 0..strands {
        if cur[p] == init[p] {
            return Err(Error::InvalidDiagram(format!(
                "braid closure leaves strand position {p} crossingless"
            )));
        }
        rename.insert(cur[p], init[p]);
    }
    let map = |s: SegmentId| SegmentId(*rename.get(&s.0).unwrap_or(&s.0));
    for c in &mut crossings {
        c.s1 = map(c.s1);
        c.s2 = map(c.s2);
        c.s1p = map(c.s1p);
        c.s2p = map(c.s2p);
        for e in &mut c.rotation {
            e.seg = map(e.seg);
        }
    }
    Diagram::new(crossings, Vec::new(), Vec::new(), Vec::new(), None)
}

/// The one-crossing 2-strand tangle (smallest legal input).
pub fn one_crossing_tangle(sign: Sign) -> Diagram {
    braid_tangle(2, &[(0, sign)]).expect("valid fixture")
}

/// The standard figure-eight diagram: closure of (sigma_1 sigma_2^-1)^2.
pub fn figure_eight() -> Diagram {
    braid_closure(
        3,
        &[
            (0, Sign::Positive),
            (1, Sign::Negative),
            (0, Sign::Positive),
            (1, Sign::Negative),
        ],
    )
    .expect("valid fixture")
}

/// Trefoil: closure of sigma_1^3.
pub fn trefoil() -> Diagram {
    braid_closure(2, &[(0, Sign::Positive), (0, Sign::Positive), (0, Sign::Positive)])
        .expect("valid fixture")
}

/// Closed one-crossing unknot with a kink: the over and under arcs at the
/// crossing coincide.
pub fn closed_kink(sign: Sign) -> Diagram {
    let mut c = Crossing {
        sign,
        s1: SegmentId(1),
        s2: SegmentId(2),
        s1p: SegmentId(2),
        s2p: SegmentId(1),
        rotation: [PLACEHOLDER_END; 4],
    };
    c.rotation = c.canonical_rotation();
    Diagram::new(vec![c], Vec::new(), Vec::new(), Vec::new(), None).expect("valid fixture")
}

/// Single-strand tangle with one Reidemeister-I kink.
pub fn kink_tangle(sign: Sign) -> Diagram {
    let mut c = Crossing {
        sign,
        s1: SegmentId(1),
        s2: SegmentId(2),
        s1p: SegmentId(2),
        s2p: SegmentId(3),
        rotation: [PLACEHOLDER_END; 4],
    };
    c.rotation = c.canonical_rotation();
    Diagram::new(vec![c], vec![SegmentId(1)], vec![SegmentId(3)], Vec::new(), None)
        .expect("valid fixture")
}

/// The crossingless unknot.
pub fn zero_crossing_unknot() -> Diagram {
    Diagram::new(Vec::new(), Vec::new(), Vec::new(), vec![SegmentId(1)], None)
        .expect("valid fixture")
}

/// A deterministic random braid word; mixed signs.
pub fn random_braid_word(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> Vec<BraidLetter> {
    (0..len)
        .map(|_| {
            let pos = rng.gen_range(0..strands - 1);
            let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
            (pos, sign)
        })
        .collect()
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> C64 {
    use rand_distr::{Distribution, StandardNormal};
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im)
}

pub fn random_line(rng: &mut ChaCha8Rng) -> RowLine {
    loop {
        let v1 = random_complex(rng);
        let v2 = random_complex(rng);
        if v1.norm() > 0.1 && v2.norm() > 0.1 {
            return RowLine::new(v1, v2);
        }
    }
}

pub fn random_nonzero_vec(rng: &mut ChaCha8Rng) -> ColVec {
    loop {
        let u = ColVec::new(random_complex(rng), random_complex(rng));
        if u.norm() > 0.3 {
            return u;
        }
    }
}

/// A corpus entry: a diagram together with a valid SL(2,C) coloring of it.
pub struct CorpusCase {
    pub name: String,
    pub diagram: Diagram,
    pub combinatorics: Combinatorics,
    pub coloring: Sl2Coloring,
}

impl CorpusCase {
    /// Decorates and shadows the coloring with deterministic generic data.
    pub fn shadowed(&self, rng: &mut ChaCha8Rng, ctx: &NumericContext) -> Result<ShadowColoring> {
        let mut choices = BTreeMap::new();
        for k in 0..self.combinatorics.components.len() {
            let comp = self.combinatorics.components.rep[k];
            let g =
                self.coloring.segment_color(self.diagram.seg_ix(comp)?);
            let choice = match crate::mat2::eigen_lines(&g, ctx)? {
                crate::mat2::EigenLines::All => DecorationChoice::Explicit(random_line(rng)),
                crate::mat2::EigenLines::One(..) => DecorationChoice::Index(0),
                crate::mat2::EigenLines::Two(_) => DecorationChoice::Index(rng.gen_range(0..2usize)),
            };
            choices.insert(comp, choice);
        }
        let dc = decorate(&self.diagram, &self.combinatorics, &self.coloring, &choices, ctx)?;
        let seed = random_nonzero_vec(rng);
        propagate_shadow(&dc, self.combinatorics.base_region, seed, ctx)
    }
}

/// Free-group coloring of a braid tangle: random SL(2,C) matrices on the
/// incoming arcs, propagated through the crossings (no relations to solve).
pub fn random_tangle_coloring(
    d: &Diagram,
    c: &Combinatorics,
    rng: &mut ChaCha8Rng,
    ctx: &NumericContext,
) -> Result<Sl2Coloring> {
    let mut arc_color: BTreeMap<SegmentId, Mat2> = BTreeMap::new();
    for &s in &d.boundary_in {
        let arc = c.arcs.rep[c.arcs.class(d.seg_ix(s)?)];
        arc_color.entry(arc).or_insert_with(|| random_sl2(rng));
    }
    // Close under the Wirtinger rules: each crossing determines its outgoing
    // under-arc color from the incoming ones.
    let mut changed = true;
    while changed {
        changed = false;
        for cr in &d.crossings {
            let arc_of =
                |s: SegmentId| -> Result<SegmentId> { Ok(c.arcs.rep[c.arcs.class(d.seg_ix(s)?)]) };
            let (over, input, out) = match cr.sign {
                Sign::Positive => (arc_of(cr.s1)?, arc_of(cr.s2)?, arc_of(cr.s2p)?),
                Sign::Negative => (arc_of(cr.s2)?, arc_of(cr.s1)?, arc_of(cr.s1p)?),
            };
            if arc_color.contains_key(&out) {
                continue;
            }
            let (Some(&g_over), Some(&g_in)) = (arc_color.get(&over), arc_color.get(&input))
            else {
                continue;
            };
            let g_out = match cr.sign {
                Sign::Positive => g_over.inverse()? * g_in * g_over,
                Sign::Negative => g_over * g_in * g_over.inverse()?,
            };
            arc_color.insert(out, g_out);
            changed = true;
        }
    }
    Sl2Coloring::check_representation(d, c, &arc_color, ctx)
}

/// Abelian coloring: every arc mapped to the same matrix. Always satisfies
/// the Wirtinger relations.
pub fn abelian_coloring(
    d: &Diagram,
    c: &Combinatorics,
    rng: &mut ChaCha8Rng,
    ctx: &NumericContext,
) -> Result<Sl2Coloring> {
    let g = random_sl2(rng);
    let mut arc_color = BTreeMap::new();
    for &arc in &c.arcs.rep {
        arc_color.insert(arc, g);
    }
    Sl2Coloring::check_representation(d, c, &arc_color, ctx)
}

/// Deterministic corpus of random diagrams with valid colorings, 2 to 8
/// crossings with mixed signs: 2-strand tangles carry free-group
/// representations (generically irreducible and non-pinched), closed braid
/// knots carry abelian representations.
pub fn standard_corpus(seed: u64, count: usize, ctx: &NumericContext) -> Result<Vec<CorpusCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(count);
    for k in 0..count {
        let crossings = 2 + (k % 7); // 2..=8
        if k % 2 == 0 {
            let word = random_braid_word(&mut rng, 2, crossings);
            let d = braid_tangle(2, &word)?;
            let c = build_combinatorics(&d)?;
            let coloring = random_tangle_coloring(&d, &c, &mut rng, ctx)?;
            cases.push(CorpusCase {
                name: format!("tangle-{k}-c{crossings}"),
                diagram: d,
                combinatorics: c,
                coloring,
            });
        } else {
            // Closed 2-braids with an odd letter count are knots.
            let len = if crossings % 2 == 0 { crossings + 1 } else { crossings };
            let d = loop {
                let word = random_braid_word(&mut rng, 2, len.clamp(3, 8));
                if let Ok(d) = braid_closure(2, &word) {
                    break d;
                }
            };
            let c = build_combinatorics(&d)?;
            let coloring = abelian_coloring(&d, &c, &mut rng, ctx)?;
            cases.push(CorpusCase {
                name: format!("knot-{k}-c{}", d.crossings.len()),
                diagram: d,
                combinatorics: c,
                coloring,
            });
        }
    }
    Ok(cases)
}

/// Tangle-only corpus (free-group colorings; generically non-pinched).
pub fn tangle_corpus(seed: u64, count: usize, ctx: &NumericContext) -> Result<Vec<CorpusCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(count);
    for k in 0..count {
        let crossings = 2 + (k % 7);
        let word = random_braid_word(&mut rng, 2, crossings);
        let d = braid_tangle(2, &word)?;
        let c = build_combinatorics(&d)?;
        let coloring = random_tangle_coloring(&d, &c, &mut rng, ctx)?;
        cases.push(CorpusCase {
            name: format!("tangle-{k}-c{crossings}"),
            diagram: d,
            combinatorics: c,
            coloring,
        });
    }
    Ok(cases)
}
