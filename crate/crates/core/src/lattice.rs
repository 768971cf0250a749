//! Triangular-lattice geometry.
//!
//! Sites carry axial integer coordinates `(x, y)` and embed into the plane as
//! `x + y*e^{i pi/3} = (x + y/2, y*sqrt(3)/2)`. All windows (rectangles, L-inf
//! balls, annuli) are regions of the *embedded* plane; a site belongs to a
//! window iff its embedding lies in the closed region. The L-inf norm is used
//! throughout for balls and annuli.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Row spacing of the embedded lattice, `sqrt(3)/2`.
pub const ROW_H: f64 = 0.866_025_403_784_438_6;

/// Largest allowed window extent (absolute embedded coordinate).
pub const MAX_EXTENT: f64 = (1 << 20) as f64;

/// Axial neighbor offsets; each embeds at Euclidean distance exactly 1.
pub const NEIGHBOR_OFFSETS: [(i32, i32); 6] =
    [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// A lattice site in axial coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SiteCoord {
    pub x: i32,
    pub y: i32,
}

impl SiteCoord {
    pub const ORIGIN: SiteCoord = SiteCoord { x: 0, y: 0 };

    pub fn new(x: i32, y: i32) -> Self {
        SiteCoord { x, y }
    }

    /// Plane embedding `(x + y/2, y*sqrt(3)/2)`.
    #[inline]
    pub fn embed(self) -> (f64, f64) {
        (self.x as f64 + 0.5 * self.y as f64, self.y as f64 * ROW_H)
    }

    /// The six lattice neighbors.
    #[inline]
    pub fn neighbors(self) -> [SiteCoord; 6] {
        let mut out = [self; 6];
        for (i, (dx, dy)) in NEIGHBOR_OFFSETS.iter().enumerate() {
            out[i] = SiteCoord::new(self.x + dx, self.y + dy);
        }
        out
    }
}

/// Standalone embedding, matching [`SiteCoord::embed`].
pub fn embed(v: SiteCoord) -> (f64, f64) {
    v.embed()
}

/// L-inf distance between two embedded points.
#[inline]
pub fn linf(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

/// A finite window of the plane. Site membership is by embedded coordinate
/// in the closed region.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Window {
    /// `[x1, x2] x [y1, y2]` in the embedded plane.
    Rectangle { x1: f64, x2: f64, y1: f64, y2: f64 },
    /// Closed L-inf ball of radius `r` around `center`.
    Ball { center: (f64, f64), r: f64 },
    /// `ball(outer) \ ball(inner)`: sites with `inner < |v - center| <= outer`.
    Annulus { center: (f64, f64), inner: f64, outer: f64 },
}

impl Window {
    pub fn rectangle(x1: f64, x2: f64, y1: f64, y2: f64) -> Self {
        Window::Rectangle { x1, x2, y1, y2 }
    }

    pub fn ball(r: f64, center: (f64, f64)) -> Self {
        Window::Ball { center, r }
    }

    pub fn ball0(r: f64) -> Self {
        Window::ball(r, (0.0, 0.0))
    }

    pub fn annulus(inner: f64, outer: f64, center: (f64, f64)) -> Self {
        Window::Annulus { center, inner, outer }
    }

    pub fn annulus0(inner: f64, outer: f64) -> Self {
        Window::annulus(inner, outer, (0.0, 0.0))
    }

    fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v.abs() <= MAX_EXTENT;
        let fine = match *self {
            Window::Rectangle { x1, x2, y1, y2 } => {
                ok(x1) && ok(x2) && ok(y1) && ok(y2) && x1 <= x2 && y1 <= y2
            }
            Window::Ball { center, r } => ok(center.0) && ok(center.1) && ok(r) && r >= 0.0,
            Window::Annulus { center, inner, outer } => {
                if !(inner >= 0.0 && outer >= inner) {
                    return Err(Error::BadAnnulus { inner, outer });
                }
                ok(center.0) && ok(center.1) && ok(outer)
            }
        };
        if fine {
            Ok(())
        } else {
            Err(Error::WindowTooLarge(self.extent()))
        }
    }

    fn extent(&self) -> f64 {
        match *self {
            Window::Rectangle { x1, x2, y1, y2 } => {
                x1.abs().max(x2.abs()).max(y1.abs()).max(y2.abs())
            }
            Window::Ball { center, r } => center.0.abs().max(center.1.abs()) + r,
            Window::Annulus { center, outer, .. } => center.0.abs().max(center.1.abs()) + outer,
        }
    }

    /// Closed-region membership of the embedded point.
    #[inline]
    pub fn contains_point(&self, p: (f64, f64)) -> bool {
        match *self {
            Window::Rectangle { x1, x2, y1, y2 } => {
                p.0 >= x1 && p.0 <= x2 && p.1 >= y1 && p.1 <= y2
            }
            Window::Ball { center, r } => linf(p, center) <= r,
            Window::Annulus { center, inner, outer } => {
                let d = linf(p, center);
                d > inner && d <= outer
            }
        }
    }

    #[inline]
    pub fn contains(&self, v: SiteCoord) -> bool {
        self.contains_point(v.embed())
    }

    /// Embedded bounding box `(x1, x2, y1, y2)`.
    pub fn bbox(&self) -> (f64, f64, f64, f64) {
        match *self {
            Window::Rectangle { x1, x2, y1, y2 } => (x1, x2, y1, y2),
            Window::Ball { center, r } | Window::Annulus { center, outer: r, .. } => {
                (center.0 - r, center.0 + r, center.1 - r, center.1 + r)
            }
        }
    }
}

/// All sites of the window in row-major order (y ascending, then x ascending).
pub fn sites_in(w: &Window) -> Result<Vec<SiteCoord>> {
    w.validate()?;
    let (bx1, bx2, by1, by2) = w.bbox();
    let ymin = (by1 / ROW_H).ceil() as i64;
    let ymax = (by2 / ROW_H).floor() as i64;
    let mut out = Vec::new();
    for y in ymin..=ymax {
        let half = 0.5 * y as f64;
        let xmin = (bx1 - half).ceil() as i64;
        let xmax = (bx2 - half).floor() as i64;
        for x in xmin..=xmax {
            let v = SiteCoord::new(x as i32, y as i32);
            if w.contains(v) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Boundary selector for [`boundary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundarySide {
    Left,
    Right,
    Top,
    Bottom,
    Inner,
    Outer,
}

/// Boundary site sets of a window.
///
/// `Inner` is the set of window sites with a neighbor outside; `Outer` the
/// set of outside sites with a neighbor inside. The four geometric sides are
/// the inner-boundary sites whose embedding lies within distance 1 of that
/// side of the window's bounding box.
pub fn boundary(w: &Window, side: BoundarySide) -> Result<Vec<SiteCoord>> {
    match side {
        BoundarySide::Inner => Ok(sites_in(w)?
            .into_iter()
            .filter(|v| v.neighbors().iter().any(|u| !w.contains(*u)))
            .collect()),
        BoundarySide::Outer => {
            // Outside sites adjacent to the window: scan a one-row/col inflation.
            let inflated = inflate(w, 1.5);
            let mut out: Vec<SiteCoord> = sites_in(&inflated)?
                .into_iter()
                .filter(|v| !w.contains(*v) && v.neighbors().iter().any(|u| w.contains(*u)))
                .collect();
            out.sort();
            out.dedup();
            Ok(out)
        }
        geo => {
            let (x1, x2, y1, y2) = w.bbox();
            if let Window::Annulus { .. } = w {
                return Err(Error::InvalidParameter(
                    "geometric sides are undefined for annuli".into(),
                ));
            }
            let keep = |p: (f64, f64)| match geo {
                BoundarySide::Left => p.0 - x1 <= 1.0,
                BoundarySide::Right => x2 - p.0 <= 1.0,
                BoundarySide::Bottom => p.1 - y1 <= 1.0,
                BoundarySide::Top => y2 - p.1 <= 1.0,
                _ => unreachable!(),
            };
            Ok(sites_in(w)?
                .into_iter()
                .filter(|v| keep(v.embed()))
                .filter(|v| v.neighbors().iter().any(|u| !w.contains(*u)))
                .collect())
        }
    }
}

fn inflate(w: &Window, by: f64) -> Window {
    match *w {
        Window::Rectangle { x1, x2, y1, y2 } => Window::Rectangle {
            x1: x1 - by,
            x2: x2 + by,
            y1: y1 - by,
            y2: y2 + by,
        },
        Window::Ball { center, r } => Window::Ball { center, r: r + by },
        Window::Annulus { center, inner, outer } => Window::Annulus {
            center,
            inner: (inner - by).max(-1.0),
            outer: outer + by,
        },
    }
}

/// Precomputed site table of a window: deterministic site order, O(1)
/// coordinate lookup and a dense neighbor-index table.
///
/// Building a `Region` is linear in the covered bounding box; everything the
/// samplers and detectors do afterwards works on flat indices.
#[derive(Clone, Debug)]
pub struct Region {
    pub window: Window,
    pub sites: Vec<SiteCoord>,
    /// Neighbor indices, `NONE` for sites outside the region.
    pub neighbors: Vec<[u32; 6]>,
    ymin: i32,
    xmin: i32,
    cols: usize,
    rows: usize,
    grid: Vec<u32>,
}

pub const NONE: u32 = u32::MAX;

impl Region {
    pub fn new(window: Window) -> Result<Region> {
        let sites = sites_in(&window)?;
        Self::from_sites(window, sites)
    }

    /// Axial parallelogram `{0..a-1} x {0..b-1}`, the canonical self-dual
    /// crossing window. Not expressible as an embedded rectangle; used by the
    /// exact crossing duality.
    pub fn parallelogram(a: u32, b: u32) -> Result<Region> {
        if a == 0 || b == 0 || a.max(b) as f64 > MAX_EXTENT {
            return Err(Error::InvalidParameter(format!(
                "parallelogram sides must be in 1..=2^20, got {a}x{b}"
            )));
        }
        let mut sites = Vec::with_capacity((a * b) as usize);
        for y in 0..b as i32 {
            for x in 0..a as i32 {
                sites.push(SiteCoord::new(x, y));
            }
        }
        // The enclosing window is only descriptive here.
        let window = Window::Rectangle {
            x1: 0.0,
            x2: a as f64 - 1.0 + 0.5 * (b as f64 - 1.0),
            y1: 0.0,
            y2: (b as f64 - 1.0) * ROW_H,
        };
        Self::from_sites_raw(window, sites)
    }

    fn from_sites(window: Window, sites: Vec<SiteCoord>) -> Result<Region> {
        Self::from_sites_raw(window, sites)
    }

    fn from_sites_raw(window: Window, sites: Vec<SiteCoord>) -> Result<Region> {
        if sites.is_empty() {
            return Ok(Region {
                window,
                sites,
                neighbors: Vec::new(),
                ymin: 0,
                xmin: 0,
                cols: 0,
                rows: 0,
                grid: Vec::new(),
            });
        }
        let ymin = sites.iter().map(|v| v.y).min().unwrap();
        let ymax = sites.iter().map(|v| v.y).max().unwrap();
        let xmin = sites.iter().map(|v| v.x).min().unwrap();
        let xmax = sites.iter().map(|v| v.x).max().unwrap();
        let rows = (ymax - ymin + 1) as usize;
        let cols = (xmax - xmin + 1) as usize;
        let mut grid = vec![NONE; rows * cols];
        for (i, v) in sites.iter().enumerate() {
            grid[(v.y - ymin) as usize * cols + (v.x - xmin) as usize] = i as u32;
        }
        let mut region = Region {
            window,
            sites,
            neighbors: Vec::new(),
            ymin,
            xmin,
            cols,
            rows,
            grid,
        };
        let mut neighbors = vec![[NONE; 6]; region.sites.len()];
        for (i, v) in region.sites.iter().enumerate() {
            for (k, (dx, dy)) in NEIGHBOR_OFFSETS.iter().enumerate() {
                neighbors[i][k] = region.index_of(SiteCoord::new(v.x + dx, v.y + dy));
            }
        }
        region.neighbors = neighbors;
        Ok(region)
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// Index of a site, or [`NONE`] when outside the region.
    #[inline]
    pub fn index_of(&self, v: SiteCoord) -> u32 {
        let r = v.y.wrapping_sub(self.ymin);
        let c = v.x.wrapping_sub(self.xmin);
        if r < 0 || c < 0 || r as usize >= self.rows || c as usize >= self.cols {
            return NONE;
        }
        self.grid[r as usize * self.cols + c as usize]
    }

    #[inline]
    pub fn site(&self, idx: u32) -> SiteCoord {
        self.sites[idx as usize]
    }

    /// Indices of sites satisfying a predicate on coordinates.
    pub fn indices_where(&self, mut pred: impl FnMut(SiteCoord) -> bool) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&i| pred(self.sites[i as usize]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_basis() {
        assert_eq!(SiteCoord::new(1, 0).embed(), (1.0, 0.0));
        let (ex, ey) = SiteCoord::new(0, 1).embed();
        assert!((ex - 0.5).abs() < 1e-12);
        assert!((ey - 0.866_025_403_784_438_6).abs() < 1e-12);
        let (ex, ey) = SiteCoord::new(2, -2).embed();
        assert!((ex - 1.0).abs() < 1e-12);
        assert!((ey + 1.732_050_807_568_877_2).abs() < 1e-12);
    }

    #[test]
    fn neighbors_unit_distance_and_symmetry() {
        let v = SiteCoord::new(3, -7);
        for u in v.neighbors() {
            let (ax, ay) = v.embed();
            let (bx, by) = u.embed();
            let d = ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt();
            assert!((d - 1.0).abs() < 1e-12);
            assert!(u.neighbors().contains(&v));
        }
    }

    #[test]
    fn ball_zero_is_origin() {
        let s = sites_in(&Window::ball0(0.0)).unwrap();
        assert_eq!(s, vec![SiteCoord::ORIGIN]);
    }

    #[test]
    fn degenerate_annulus_empty() {
        let s = sites_in(&Window::annulus0(5.0, 5.0)).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn site_density() {
        // |ball(n)| / (2n)^2 -> 2/sqrt(3) as n grows.
        let n = 64.0;
        let count = sites_in(&Window::ball0(n)).unwrap().len() as f64;
        let density = count / (2.0 * n).powi(2);
        let target = 2.0 / 3.0_f64.sqrt();
        assert!(
            (density - target).abs() / target < 0.02,
            "density {density} vs {target}"
        );
    }

    #[test]
    fn ball_partition() {
        for (n1, n2) in [(0.0, 3.0), (2.0, 5.0), (7.0, 11.0), (0.0, 64.0)] {
            let ball1 = sites_in(&Window::ball0(n1)).unwrap();
            let ann = sites_in(&Window::annulus0(n1, n2)).unwrap();
            let ball2 = sites_in(&Window::ball0(n2)).unwrap();
            assert_eq!(ball1.len() + ann.len(), ball2.len());
            let mut merged = ball1;
            merged.extend(ann);
            merged.sort();
            let mut full = ball2;
            full.sort();
            assert_eq!(merged, full);
        }
    }

    #[test]
    fn boundaries_ball0() {
        let w = Window::ball0(0.0);
        assert_eq!(boundary(&w, BoundarySide::Inner).unwrap(), vec![SiteCoord::ORIGIN]);
        let mut outer = boundary(&w, BoundarySide::Outer).unwrap();
        outer.sort();
        let mut nb = SiteCoord::ORIGIN.neighbors().to_vec();
        nb.sort();
        assert_eq!(outer, nb);
    }

    #[test]
    fn inner_boundary_has_outside_neighbor() {
        let w = Window::ball0(8.0);
        for v in boundary(&w, BoundarySide::Inner).unwrap() {
            assert!(v.neighbors().iter().any(|u| !w.contains(*u)));
        }
    }

    #[test]
    fn oversized_window_rejected() {
        let w = Window::ball0(2.0 * MAX_EXTENT);
        assert!(matches!(sites_in(&w), Err(Error::WindowTooLarge(_))));
    }

    #[test]
    fn region_roundtrip_indices() {
        let region = Region::new(Window::annulus0(2.0, 6.0)).unwrap();
        for (i, v) in region.sites.iter().enumerate() {
            assert_eq!(region.index_of(*v), i as u32);
        }
        assert_eq!(region.index_of(SiteCoord::ORIGIN), NONE);
    }

    #[test]
    fn determinism() {
        let w = Window::annulus0(3.0, 9.0);
        assert_eq!(sites_in(&w).unwrap(), sites_in(&w).unwrap());
    }
}
