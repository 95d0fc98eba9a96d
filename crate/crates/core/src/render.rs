//! Deterministic SVG figures of boards, polygons and tilings.
//!
//! Documents are assembled as plain strings; identical inputs give
//! byte-identical output.

use std::fmt::Write;

use thiserror::Error;

use crate::game::BoardPosition;
use crate::poly::{oriented_cells, Isometry, Point, Polygon};
use crate::tiling::{TilingCertificate, Torus, TorusTiling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("invalid canvas: {0}")]
    InvalidCanvas(&'static str),
    #[error("certificate does not verify for this polygon")]
    InvalidCertificate,
}

pub const DEFAULT_PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canvas {
    unit: u32,
    margin: u32,
    palette: Vec<String>,
}

impl Default for Canvas {
    fn default() -> Self {
        Canvas {
            unit: 32,
            margin: 1,
            palette: DEFAULT_PALETTE.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl Canvas {
    pub fn new(unit: u32, margin: u32, palette: Vec<String>) -> Result<Self, RenderError> {
        if unit == 0 {
            return Err(RenderError::InvalidCanvas("unit size must be positive"));
        }
        if palette.is_empty() {
            return Err(RenderError::InvalidCanvas("palette must not be empty"));
        }
        Ok(Canvas {
            unit,
            margin,
            palette,
        })
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn margin(&self) -> u32 {
        self.margin
    }

    fn color(&self, i: usize) -> &str {
        &self.palette[i % self.palette.len()]
    }
}

/// Lattice-to-pixel mapping for a bounding box; flips y so north is up.
struct Frame {
    unit: i64,
    min: (i64, i64),
    max_y: i64,
    width: i64,
    height: i64,
}

impl Frame {
    fn new(canvas: &Canvas, min: Point, max: Point) -> Frame {
        let m = i64::from(canvas.margin);
        let min = (i64::from(min.0) - m, i64::from(min.1) - m);
        let max = (i64::from(max.0) + m, i64::from(max.1) + m);
        let unit = i64::from(canvas.unit);
        Frame {
            unit,
            min,
            max_y: max.1,
            width: (max.0 - min.0) * unit,
            height: (max.1 - min.1) * unit,
        }
    }

    fn px(&self, (x, y): Point) -> (i64, i64) {
        (
            (i64::from(x) - self.min.0) * self.unit,
            (self.max_y - i64::from(y)) * self.unit,
        )
    }

    fn open(&self, out: &mut String) {
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = self.width,
            h = self.height
        );
    }
}

fn path_data(frame: &Frame, vertices: &[Point]) -> String {
    let mut d = String::new();
    for (i, &v) in vertices.iter().enumerate() {
        let (x, y) = frame.px(v);
        let _ = write!(d, "{}{x} {y} ", if i == 0 { "M" } else { "L" });
    }
    d.push('Z');
    d
}

/// Outline of a polygon as one closed path.
pub fn polygon_figure(polygon: &Polygon, canvas: &Canvas) -> String {
    let (min, max) = polygon.bounds();
    let frame = Frame::new(canvas, min, max);
    let mut out = String::new();
    frame.open(&mut out);
    let _ = writeln!(out, "<title>{}</title>", polygon.turns());
    let _ = writeln!(
        out,
        r##"<path d="{}" fill="{}" stroke="#000000" stroke-width="2"/>"##,
        path_data(&frame, polygon.vertices()),
        canvas.color(0)
    );
    out.push_str("</svg>\n");
    out
}

/// Vertices of the polygon transformed by `iso` and moved so the minimum
/// corner sits at `offset`. Matches the cell normalisation used by placements.
fn placed_outline(polygon: &Polygon, iso: Isometry, offset: Point) -> Vec<Point> {
    let image: Vec<Point> = polygon.vertices().iter().map(|&v| iso.apply(v)).collect();
    let min_x = image.iter().map(|p| p.0).min().unwrap_or(0);
    let min_y = image.iter().map(|p| p.1).min().unwrap_or(0);
    image
        .into_iter()
        .map(|(x, y)| (x - min_x + offset.0, y - min_y + offset.1))
        .collect()
}

/// Greedy colouring of torus placements so touching copies differ in colour
/// whenever the palette allows.
fn torus_colors(polygon: &Polygon, tiling: &TorusTiling, palette_len: usize) -> Vec<usize> {
    let torus = Torus::of(tiling);
    let cells = polygon.rasterize();
    let mut owner = vec![usize::MAX; torus.cells()];
    let index = |x: i32, y: i32| torus.index((x, y));
    let footprints: Vec<Vec<Point>> = tiling
        .placements
        .iter()
        .map(|p| {
            let iso = Isometry::new(p.orientation).unwrap_or(Isometry::IDENTITY);
            oriented_cells(&cells, iso)
                .into_iter()
                .map(|(x, y)| (x + p.anchor.0, y + p.anchor.1))
                .collect()
        })
        .collect();
    for (id, fp) in footprints.iter().enumerate() {
        for &(x, y) in fp {
            owner[index(x, y)] = id;
        }
    }
    let mut colors = vec![0usize; footprints.len()];
    for (id, fp) in footprints.iter().enumerate() {
        let mut used = vec![false; palette_len];
        for &(x, y) in fp {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let other = owner[index(x + dx, y + dy)];
                if other < id {
                    used[colors[other] % palette_len] = true;
                }
            }
        }
        colors[id] = used.iter().position(|&u| !u).unwrap_or(id % palette_len);
    }
    colors
}

/// A `repeats × repeats` patch of the tiling described by `cert`.
pub fn tiling_figure(
    cert: &TilingCertificate,
    polygon: &Polygon,
    repeats: usize,
    canvas: &Canvas,
) -> Result<String, RenderError> {
    if !cert.verify(polygon) {
        return Err(RenderError::InvalidCertificate);
    }
    // (outline, colour index)
    let mut tiles: Vec<(Vec<Point>, usize)> = Vec::new();
    match cert {
        TilingCertificate::Translation(f) => {
            for i in 0..repeats as i32 {
                for j in 0..repeats as i32 {
                    let shift = (i * f.u.0 + j * f.v.0, i * f.u.1 + j * f.v.1);
                    let outline = polygon
                        .vertices()
                        .iter()
                        .map(|&(x, y)| (x + shift.0, y + shift.1))
                        .collect();
                    tiles.push((outline, (i + 2 * j) as usize));
                }
            }
        }
        TilingCertificate::Periodic(t) => {
            let colors = torus_colors(polygon, t, canvas.palette.len());
            for i in 0..repeats as i32 {
                for j in 0..repeats as i32 {
                    for (p, &color) in t.placements.iter().zip(&colors) {
                        let iso = Isometry::new(p.orientation).expect("verified orientation");
                        let offset = (
                            p.anchor.0 + i * t.width as i32 + j * t.shear as i32,
                            p.anchor.1 + j * t.height as i32,
                        );
                        tiles.push((placed_outline(polygon, iso, offset), color));
                    }
                }
            }
        }
    }
    let all: Vec<Point> = tiles.iter().flat_map(|(o, _)| o.iter().copied()).collect();
    let (min, max) = crate::poly::bounds_of(&all);
    let frame = Frame::new(canvas, min, max);
    let mut out = String::new();
    frame.open(&mut out);
    let _ = writeln!(out, "<title>{} {}</title>", cert.kind(), polygon.turns());
    for (outline, color) in &tiles {
        let _ = writeln!(
            out,
            r##"<path d="{}" fill="{}" stroke="#000000" stroke-width="1"/>"##,
            path_data(&frame, outline),
            canvas.color(*color)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// A row of cells with counters drawn as filled circles.
pub fn board_figure(board: &BoardPosition, canvas: &Canvas) -> String {
    let n = board.length() as i32;
    let frame = Frame::new(canvas, (0, 0), (n, 1));
    let unit = frame.unit;
    let mut out = String::new();
    frame.open(&mut out);
    let _ = writeln!(out, "<title>board n={n}</title>");
    for cell in 1..=n {
        let (x, y) = frame.px((cell - 1, 1));
        let _ = writeln!(
            out,
            r##"<rect x="{x}" y="{y}" width="{unit}" height="{unit}" fill="#ffffff" stroke="#000000" stroke-width="2"/>"##
        );
        if board.is_occupied(cell as u32) {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
                x + unit / 2,
                y + unit / 2,
                unit * 3 / 8,
                canvas.color(0)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn polygon_file_name(polygon: &Polygon) -> String {
    format!("poly-{}.svg", crate::poly::canonical(polygon.turns()))
}

pub fn tiling_file_name(polygon: &Polygon) -> String {
    format!("tiling-{}.svg", crate::poly::canonical(polygon.turns()))
}

pub fn board_file_name(board: &BoardPosition) -> String {
    format!("board-n{}.svg", board.length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::validate;
    use crate::tiling::tile_any;

    fn poly(s: &str) -> Polygon {
        validate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn square_outline() {
        let svg = polygon_figure(&poly("LLLL"), &Canvas::default());
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(
            svg.contains(r#"d="M32 64 L64 64 L64 32 L32 32 Z""#),
            "{svg}"
        );
        assert_eq!(svg, polygon_figure(&poly("LLLL"), &Canvas::default()));
    }

    #[test]
    fn square_patch_has_nine_tiles() {
        let sq = poly("LLLL");
        let cert = tile_any(&sq, 12).unwrap();
        let svg = tiling_figure(&cert, &sq, 3, &Canvas::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 9);
    }

    #[test]
    fn corrupted_certificate_rejected() {
        let sq = poly("LLLL");
        let plus = poly("LLRLLRLLRLLR");
        let cert = tile_any(&plus, 12).unwrap();
        assert_eq!(
            tiling_figure(&cert, &sq, 2, &Canvas::default()),
            Err(RenderError::InvalidCertificate)
        );
    }

    #[test]
    fn boards() {
        let c = Canvas::default();
        let b = BoardPosition::with_counters(2, &[1]).unwrap();
        let svg = board_figure(&b, &c);
        assert_eq!(
            (svg.matches("<rect").count(), svg.matches("<circle").count()),
            (2, 1)
        );
        let b = BoardPosition::with_counters(3, &[2]).unwrap();
        let svg = board_figure(&b, &c);
        assert_eq!(
            (svg.matches("<rect").count(), svg.matches("<circle").count()),
            (3, 1)
        );
        assert!(svg.contains(r#"<circle cx="80""#), "{svg}");
        let svg = board_figure(&BoardPosition::new(0).unwrap(), &c);
        assert_eq!(svg.matches("<rect").count(), 0);
        assert!(svg.contains(r#"viewBox="0 0 64 96""#), "{svg}");
    }

    #[test]
    fn canvas_validation() {
        assert!(Canvas::new(0, 1, vec!["#000".into()]).is_err());
        assert!(Canvas::new(8, 1, vec![]).is_err());
        assert!(Canvas::new(8, 0, vec!["#000".into()]).is_ok());
    }
}
