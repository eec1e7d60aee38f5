//! The lattice-path form of the algorithm: southwest shadows, shadowlines,
//! shadow diagrams and their iterates, crossing detection, and the pile
//! reconstruction from a 0-th iterate.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::patience::StablePair;
use crate::perm::{Permutation, PileConfig};

/// Exact planar coordinate used for crossing witnesses.
pub type Rat = Ratio<i64>;

/// A point of the permutation plot: `x` is the position, `y` the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: u32,
    pub y: u32,
}

impl LatticePoint {
    pub fn new(x: u32, y: u32) -> Self {
        LatticePoint { x, y }
    }
}

/// Whether `q` lies in the southwest shadow of `corner`: the quarter plane
/// of points componentwise `<=` the corner (boundary included).
pub fn shadow_contains(corner: LatticePoint, q: LatticePoint) -> bool {
    q.x <= corner.x && q.y <= corner.y
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    /// Shadowline anchors must be nonempty and strictly decreasing in `y`
    /// as `x` increases (an antichain in the product order).
    BadAnchors,
    /// The diagram's anchors are not the plot of a permutation peeled by
    /// the minimal-point rule.
    MalformedDiagram,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::BadAnchors => {
                write!(f, "anchors must have strictly increasing x and strictly decreasing y")
            }
            GeometryError::MalformedDiagram => {
                write!(f, "diagram is not a 0-th iterate of any permutation")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

/// The boundary of the union of the southwest shadows of a staircase of
/// anchor points.
///
/// The polyline enters from the y-axis at the height of the first anchor,
/// alternates horizontal and vertical runs turning at anchors and at the
/// southwest corners between them, and drops to the x-axis after the last
/// anchor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shadowline {
    anchors: Vec<LatticePoint>,
}

impl Shadowline {
    /// Builds a shadowline; anchors are sorted by `x` and must then have
    /// strictly decreasing `y`.
    pub fn new(mut anchors: Vec<LatticePoint>) -> Result<Self, GeometryError> {
        if anchors.is_empty() {
            return Err(GeometryError::BadAnchors);
        }
        anchors.sort();
        let staircase = anchors
            .windows(2)
            .all(|w| w[0].x < w[1].x && w[0].y > w[1].y);
        if !staircase {
            return Err(GeometryError::BadAnchors);
        }
        Ok(Shadowline { anchors })
    }

    fn from_staircase(anchors: Vec<LatticePoint>) -> Self {
        Shadowline { anchors }
    }

    pub fn anchors(&self) -> &[LatticePoint] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Polyline vertices from the y-axis entry to the x-axis exit:
    /// `(0, y_1), (x_1, y_1), (x_1, y_2), (x_2, y_2), .., (x_k, y_k), (x_k, 0)`.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(2 * self.anchors.len() + 1);
        out.push((0, self.anchors[0].y));
        for (i, a) in self.anchors.iter().enumerate() {
            out.push((a.x, a.y));
            let next_y = self.anchors.get(i + 1).map_or(0, |b| b.y);
            out.push((a.x, next_y));
        }
        out
    }

    /// The southwest corners between consecutive anchors:
    /// `(x_i, y_{i+1})` for `i = 1, .., k-1`. Empty for single-anchor lines.
    pub fn salient_points(&self) -> Vec<LatticePoint> {
        self.anchors
            .windows(2)
            .map(|w| LatticePoint::new(w[0].x, w[1].y))
            .collect()
    }
}

/// An ordered family of shadowlines, tagged with its iterate index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowDiagram {
    index: usize,
    lines: Vec<Shadowline>,
}

impl ShadowDiagram {
    /// Which iterate this is: 0 for the diagram of a permutation plot.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn lines(&self) -> &[Shadowline] {
        &self.lines
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn anchor_count(&self) -> usize {
        self.lines.iter().map(Shadowline::len).sum()
    }

    /// The next iterate: the salient points of each line, kept together,
    /// become the anchors of one new line. Salient points of one line
    /// already form a staircase, so peeling minimal points within a line
    /// takes all of them at once; lines without salient points vanish.
    pub fn iterate(&self) -> ShadowDiagram {
        let lines = self
            .lines
            .iter()
            .filter_map(|l| {
                let s = l.salient_points();
                if s.is_empty() {
                    None
                } else {
                    Some(Shadowline::from_staircase(s))
                }
            })
            .collect();
        ShadowDiagram {
            index: self.index + 1,
            lines,
        }
    }
}

/// Peels the plot `{(i, p(i))}` into shadowlines: the first line is
/// anchored on the points whose shadows contain no other plot point (the
/// minimal points), and each later line repeats this on what remains.
pub fn shadow_diagram(p: &Permutation) -> ShadowDiagram {
    let mut remaining: Vec<LatticePoint> = p
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| LatticePoint::new(i as u32 + 1, v))
        .collect();
    let mut lines = Vec::new();
    while !remaining.is_empty() {
        let mut anchors = Vec::new();
        let mut rest = Vec::new();
        let mut min_y = u32::MAX;
        // points arrive in x order, so a point is minimal exactly when its
        // y beats the running minimum
        for pt in remaining {
            if pt.y < min_y {
                min_y = pt.y;
                anchors.push(pt);
            } else {
                rest.push(pt);
            }
        }
        lines.push(Shadowline::from_staircase(anchors));
        remaining = rest;
    }
    ShadowDiagram { index: 0, lines }
}

/// All nonempty iterates `(D0, D1, ..)`; the sequence has at most `n`
/// entries since every step loses one anchor per surviving line.
pub fn exhaustive_iterates(p: &Permutation) -> Vec<ShadowDiagram> {
    let mut out = Vec::new();
    let mut d = shadow_diagram(p);
    while !d.is_empty() {
        let next = d.iterate();
        out.push(d);
        d = next;
    }
    out
}

/// A point shared by two distinct shadowlines of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Crossing {
    /// Exact planar coordinates.
    pub at: (Rat, Rat),
    /// 1-based indices of the two lines involved, smaller first.
    pub lines: (usize, usize),
}

#[derive(Clone, Copy, Debug)]
enum Seg {
    H { y: i64, x0: i64, x1: i64 },
    V { x: i64, y0: i64, y1: i64 },
}

fn segments(l: &Shadowline) -> Vec<Seg> {
    let verts = l.vertices();
    verts
        .windows(2)
        .map(|w| {
            let (ax, ay) = (w[0].0 as i64, w[0].1 as i64);
            let (bx, by) = (w[1].0 as i64, w[1].1 as i64);
            if ay == by {
                Seg::H {
                    y: ay,
                    x0: ax.min(bx),
                    x1: ax.max(bx),
                }
            } else {
                Seg::V {
                    x: ax,
                    y0: ay.min(by),
                    y1: ay.max(by),
                }
            }
        })
        .collect()
}

/// All points shared by two axis-parallel polylines, exactly. Collinear
/// overlap of positive length contributes its two endpoints.
pub fn polyline_intersections(a: &Shadowline, b: &Shadowline) -> Vec<(Rat, Rat)> {
    let mut points: Vec<(i64, i64)> = Vec::new();
    for sa in segments(a) {
        for sb in segments(b) {
            match (sa, sb) {
                (Seg::H { y, x0, x1 }, Seg::V { x, y0, y1 })
                | (Seg::V { x, y0, y1 }, Seg::H { y, x0, x1 }) => {
                    if x0 <= x && x <= x1 && y0 <= y && y <= y1 {
                        points.push((x, y));
                    }
                }
                (Seg::H { y: ya, x0: a0, x1: a1 }, Seg::H { y: yb, x0: b0, x1: b1 }) => {
                    if ya == yb {
                        let lo = a0.max(b0);
                        let hi = a1.min(b1);
                        if lo <= hi {
                            points.push((lo, ya));
                            points.push((hi, ya));
                        }
                    }
                }
                (Seg::V { x: xa, y0: a0, y1: a1 }, Seg::V { x: xb, y0: b0, y1: b1 }) => {
                    if xa == xb {
                        let lo = a0.max(b0);
                        let hi = a1.min(b1);
                        if lo <= hi {
                            points.push((xa, lo));
                            points.push((xa, hi));
                        }
                    }
                }
            }
        }
    }
    points.sort_unstable();
    points.dedup();
    points
        .into_iter()
        .map(|(x, y)| (Rat::from_integer(x), Rat::from_integer(y)))
        .collect()
}

/// Every point shared by two distinct lines of `d`, deduplicated and in
/// lexicographic order. An empty result is what "non-crossing" means.
pub fn crossings(d: &ShadowDiagram) -> Vec<Crossing> {
    let mut out = Vec::new();
    for i in 0..d.lines.len() {
        for j in i + 1..d.lines.len() {
            for at in polyline_intersections(&d.lines[i], &d.lines[j]) {
                out.push(Crossing {
                    at,
                    lines: (i + 1, j + 1),
                });
            }
        }
    }
    out.sort();
    out
}

/// Reads the stable pair off a 0-th iterate: line `i`'s anchor ordinates
/// (top to bottom of the staircase) are insertion pile `i`, its abscissae
/// in increasing order are the arrival times of recording pile `i`.
///
/// The diagram is validated by rebuilding: its anchors must plot a
/// permutation whose own shadow diagram has exactly these lines.
pub fn piles_from_diagram(d: &ShadowDiagram) -> Result<StablePair, GeometryError> {
    let n = d.anchor_count();
    let mut word = alloc::vec![0u32; n];
    for line in &d.lines {
        for a in line.anchors() {
            if a.x == 0 || a.x as usize > n || word[a.x as usize - 1] != 0 {
                return Err(GeometryError::MalformedDiagram);
            }
            word[a.x as usize - 1] = a.y;
        }
    }
    let p = Permutation::from_word(word).map_err(|_| GeometryError::MalformedDiagram)?;
    if shadow_diagram(&p).lines != d.lines {
        return Err(GeometryError::MalformedDiagram);
    }
    let insertion: Vec<Vec<u32>> = d
        .lines
        .iter()
        .map(|l| l.anchors().iter().map(|a| a.y).collect())
        .collect();
    let recording: Vec<Vec<u32>> = d
        .lines
        .iter()
        .map(|l| {
            let mut xs: Vec<u32> = l.anchors().iter().map(|a| a.x).collect();
            xs.reverse(); // stack order: most recent arrival at the bottom
            xs
        })
        .collect();
    let insertion = PileConfig::new(insertion).map_err(|_| GeometryError::MalformedDiagram)?;
    let recording = PileConfig::new(recording).map_err(|_| GeometryError::MalformedDiagram)?;
    StablePair::from_configs(insertion, recording).map_err(|_| GeometryError::MalformedDiagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patience::extended_patience_sort;
    use crate::perm::for_each_permutation;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pt(x: u32, y: u32) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn anchor_lists(d: &ShadowDiagram) -> Vec<Vec<(u32, u32)>> {
        d.lines()
            .iter()
            .map(|l| l.anchors().iter().map(|a| (a.x, a.y)).collect())
            .collect()
    }

    #[test]
    fn shadow_membership() {
        assert!(shadow_contains(pt(3, 3), pt(1, 2)));
        assert!(shadow_contains(pt(3, 3), pt(3, 3)));
        assert!(!shadow_contains(pt(1, 6), pt(2, 4)));
    }

    #[test]
    fn worked_example_diagram() {
        let d = shadow_diagram(&p("64518723"));
        assert_eq!(
            anchor_lists(&d),
            vec![
                vec![(1, 6), (2, 4), (4, 1)],
                vec![(3, 5), (7, 2)],
                vec![(5, 8), (6, 7), (8, 3)],
            ]
        );
        assert_eq!(d.index(), 0);
    }

    #[test]
    fn identity_diagram_is_singletons() {
        let d = shadow_diagram(&p("123"));
        assert_eq!(anchor_lists(&d), vec![vec![(1, 1)], vec![(2, 2)], vec![(3, 3)]]);
    }

    #[test]
    fn polygonal_example_diagram() {
        let d = shadow_diagram(&p("45312"));
        assert_eq!(
            anchor_lists(&d),
            vec![vec![(1, 4), (3, 3), (4, 1)], vec![(2, 5), (5, 2)]]
        );
    }

    #[test]
    fn polyline_vertices_follow_the_corner_rule() {
        let d = shadow_diagram(&p("64518723"));
        assert_eq!(
            d.lines()[0].vertices(),
            vec![(0, 6), (1, 6), (1, 4), (2, 4), (2, 1), (4, 1), (4, 0)]
        );
        assert_eq!(
            d.lines()[1].vertices(),
            vec![(0, 5), (3, 5), (3, 2), (7, 2), (7, 0)]
        );
    }

    #[test]
    fn salient_points_of_the_worked_example() {
        let d = shadow_diagram(&p("64518723"));
        let s: Vec<Vec<(u32, u32)>> = d
            .lines()
            .iter()
            .map(|l| l.salient_points().iter().map(|a| (a.x, a.y)).collect())
            .collect();
        assert_eq!(
            s,
            vec![vec![(1, 4), (2, 1)], vec![(3, 2)], vec![(5, 7), (6, 3)]]
        );
        let single = Shadowline::new(vec![pt(2, 2)]).unwrap();
        assert!(single.salient_points().is_empty());
    }

    #[test]
    fn iterates_of_the_worked_example() {
        let all = exhaustive_iterates(&p("64518723"));
        assert_eq!(all.len(), 3);
        assert_eq!(
            anchor_lists(&all[1]),
            vec![vec![(1, 4), (2, 1)], vec![(3, 2)], vec![(5, 7), (6, 3)]]
        );
        assert_eq!(anchor_lists(&all[2]), vec![vec![(1, 1)], vec![(5, 3)]]);
        assert_eq!(all[2].index(), 2);
        assert!(all[2].iterate().is_empty());
    }

    #[test]
    fn iterate_counts() {
        assert_eq!(exhaustive_iterates(&p("123")).len(), 1);
        assert_eq!(exhaustive_iterates(&p("54321")).len(), 5);
        assert_eq!(exhaustive_iterates(&p("")).len(), 0);
    }

    #[test]
    fn anchor_conservation() {
        for word in ["64518723", "45312", "2413", "54321"] {
            let its = exhaustive_iterates(&p(word));
            for w in its.windows(2) {
                assert_eq!(
                    w[1].anchor_count(),
                    w[0].anchor_count() - w[0].lines().len()
                );
            }
        }
    }

    #[test]
    fn crossing_detection() {
        let d1 = shadow_diagram(&p("64518723")).iterate();
        let cr = crossings(&d1);
        assert_eq!(cr.len(), 1);
        assert_eq!(cr[0].at, (Rat::from_integer(1), Rat::from_integer(2)));
        assert_eq!(cr[0].lines, (1, 2));

        assert!(crossings(&shadow_diagram(&p("1234"))).is_empty());

        let cr = crossings(&shadow_diagram(&p("45312")));
        let pts: Vec<(i64, i64)> = cr
            .iter()
            .map(|c| (*c.at.0.numer(), *c.at.1.numer()))
            .collect();
        assert_eq!(pts, vec![(2, 3), (3, 2)]);
        assert!(cr.iter().all(|c| c.lines == (1, 2)));
    }

    #[test]
    fn collinear_overlap_reports_endpoints() {
        // synthetic lines sharing a horizontal run at y = 2
        let a = Shadowline::new(vec![pt(5, 2)]).unwrap();
        let b = Shadowline::new(vec![pt(3, 4), pt(8, 2)]).unwrap();
        // b's horizontal at y=2 spans x in [3,8]; a's spans [0,5]
        let pts = polyline_intersections(&a, &b);
        assert!(pts.contains(&(Rat::from_integer(3), Rat::from_integer(2))));
        assert!(pts.contains(&(Rat::from_integer(5), Rat::from_integer(2))));
    }

    #[test]
    fn pile_reconstruction_matches_the_sort() {
        let d = shadow_diagram(&p("64518723"));
        let pair = piles_from_diagram(&d).unwrap();
        assert_eq!(pair, extended_patience_sort(&p("64518723")));

        for n in 0..=6 {
            for_each_permutation(n, |w| {
                let q = Permutation::from_slice(w).unwrap();
                let pair = piles_from_diagram(&shadow_diagram(&q)).unwrap();
                assert_eq!(pair, extended_patience_sort(&q));
            });
        }
    }

    #[test]
    fn malformed_diagrams_are_rejected() {
        // anchors of a genuine diagram, but with the lines swapped: the
        // peeling order is wrong
        let l1 = Shadowline::new(vec![pt(3, 5), pt(7, 2)]).unwrap();
        let l2 = Shadowline::new(vec![pt(1, 6), pt(2, 4), pt(4, 1)]).unwrap();
        let l3 = Shadowline::new(vec![pt(5, 8), pt(6, 7), pt(8, 3)]).unwrap();
        let d = ShadowDiagram {
            index: 0,
            lines: vec![l1, l2, l3],
        };
        assert_eq!(
            piles_from_diagram(&d).unwrap_err(),
            GeometryError::MalformedDiagram
        );

        // duplicated abscissa
        let d = ShadowDiagram {
            index: 0,
            lines: vec![
                Shadowline::new(vec![pt(1, 2)]).unwrap(),
                Shadowline::new(vec![pt(1, 1)]).unwrap(),
            ],
        };
        assert!(piles_from_diagram(&d).is_err());
    }

    #[test]
    fn bad_anchor_sets_are_rejected() {
        assert_eq!(
            Shadowline::new(vec![]).unwrap_err(),
            GeometryError::BadAnchors
        );
        assert_eq!(
            Shadowline::new(vec![pt(1, 1), pt(2, 2)]).unwrap_err(),
            GeometryError::BadAnchors
        );
        assert_eq!(
            Shadowline::new(vec![pt(1, 1), pt(1, 2)]).unwrap_err(),
            GeometryError::BadAnchors
        );
        // unsorted staircases are accepted and sorted
        let l = Shadowline::new(vec![pt(4, 1), pt(1, 6), pt(2, 4)]).unwrap();
        assert_eq!(l.anchors()[0], pt(1, 6));
    }
}
