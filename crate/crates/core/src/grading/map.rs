use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use super::region::{classify, RegionClass, RegionTag};
use crate::exactmath::{GaussRat, ParseError, Rat};

/// An inclusive arithmetic progression `lo, lo + step, …, <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisRange {
    pub lo: Rat,
    pub hi: Rat,
    pub step: Rat,
}

impl AxisRange {
    pub fn new(lo: Rat, hi: Rat, step: Rat) -> Result<Self, ParseError> {
        if !step.is_positive() {
            return Err(ParseError::new(0, "grid step must be positive"));
        }
        if hi < lo {
            return Err(ParseError::new(0, "grid upper end is below the lower end"));
        }
        Ok(AxisRange { lo, hi, step })
    }

    pub fn points(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        let mut x = self.lo.clone();
        while x <= self.hi {
            out.push(x.clone());
            x += &self.step;
        }
        out
    }
}

impl FromStr for AxisRange {
    type Err = ParseError;

    /// `lo:hi:step` with exact rationals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(ParseError::new(0, "expected `lo:hi:step`"));
        }
        let mut offset = 0;
        let mut vals = Vec::with_capacity(3);
        for part in parts {
            let v: Rat = part.parse().map_err(|e: ParseError| ParseError::new(offset + e.position, e.message))?;
            vals.push(v);
            offset += part.len() + 1;
        }
        let step = vals.pop().expect("three parts");
        let hi = vals.pop().expect("three parts");
        let lo = vals.pop().expect("three parts");
        AxisRange::new(lo, hi, step)
    }
}

/// A rectangular grid of μ values, `re` by `im`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub re: AxisRange,
    pub im: AxisRange,
}

impl FromStr for GridSpec {
    type Err = ParseError;

    /// `reLo:reHi:step,imLo:imHi:step`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (re, im) =
            s.split_once(',').ok_or_else(|| ParseError::new(0, "expected `reLo:reHi:step,imLo:imHi:step`"))?;
        let re: AxisRange = re.parse()?;
        let im: AxisRange =
            im.parse().map_err(|e: ParseError| ParseError::new(re_len(s) + 1 + e.position, e.message))?;
        Ok(GridSpec { re, im })
    }
}

fn re_len(s: &str) -> usize {
    s.find(',').unwrap_or(0)
}

impl GridSpec {
    /// Grid points, real part outer and imaginary part inner, both ascending.
    pub fn points(&self) -> Vec<GaussRat> {
        let ims = self.im.points();
        self.re
            .points()
            .into_iter()
            .flat_map(|re| ims.iter().map(move |im| GaussRat::new(re.clone(), im.clone())))
            .collect()
    }

    pub fn classify(&self) -> Vec<(GaussRat, RegionClass)> {
        let pts = self.points();
        pts.into_par_iter()
            .map(|mu| {
                let c = classify(&mu);
                (mu, c)
            })
            .collect()
    }
}

pub fn region_csv(rows: &[(GaussRat, RegionClass)]) -> String {
    let mut out = String::from("reMu,imMu,tag,subcase\n");
    for (mu, c) in rows {
        let _ = writeln!(out, "{},{},{},{}", mu.re, mu.im, c.tag, c.subcase);
    }
    out
}

pub fn tag_color(tag: RegionTag) -> &'static str {
    match tag {
        RegionTag::OmegaVoa => "#2b7bba",
        RegionTag::StripConfOmega => "#9ecae1",
        RegionTag::NotOmegaGenerated => "#f0f0f0",
    }
}

/// The μ-plane cells of one SVG rendering: `nx × ny` squares of side `step` whose
/// lower-left corner is `(x0, y0)`, each classified at its centre.
#[derive(Debug, Clone)]
pub struct RegionMap {
    pub x0: Rat,
    pub y0: Rat,
    pub step: Rat,
    pub nx: usize,
    pub ny: usize,
    /// Row-major from the top row (largest imaginary part).
    pub cells: Vec<RegionTag>,
}

impl RegionMap {
    /// The rectangle `[-1/2, 3/2] × [-1, 1]` cut into `2n × 2n` cells.
    pub fn standard(n: usize) -> Self {
        let step = Rat::new(1, n as i64);
        RegionMap::over(Rat::new(-1, 2), Rat::from(-1), step, 2 * n, 2 * n)
    }

    pub fn over(x0: Rat, y0: Rat, step: Rat, nx: usize, ny: usize) -> Self {
        let half = &step * &Rat::new(1, 2);
        let coords: Vec<(usize, usize)> = (0..ny).flat_map(|row| (0..nx).map(move |col| (row, col))).collect();
        let cells = coords
            .into_par_iter()
            .map(|(row, col)| {
                let re = &(&x0 + &(&step * &Rat::from(col as i64))) + &half;
                let im = &(&y0 + &(&step * &Rat::from((ny - 1 - row) as i64))) + &half;
                classify(&GaussRat::new(re, im)).tag
            })
            .collect();
        RegionMap { x0, y0, step, nx, ny, cells }
    }

    /// Cells centred on the points of a grid.
    pub fn from_grid(grid: &GridSpec) -> Result<Self, ParseError> {
        if grid.re.step != grid.im.step {
            return Err(ParseError::new(0, "an SVG rendering needs equal steps on both axes"));
        }
        let step = grid.re.step.clone();
        let half = &step * &Rat::new(1, 2);
        let nx = grid.re.points().len();
        let ny = grid.im.points().len();
        Ok(RegionMap::over(&grid.re.lo - &half, &grid.im.lo - &half, step, nx, ny))
    }

    pub fn svg(&self) -> String {
        let scale = 12;
        let (w, h) = (self.nx * scale, self.ny * scale);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{}\" viewBox=\"0 0 {w} {}\">",
            h + 60,
            h + 60
        );
        let _ = writeln!(
            out,
            "<title>mu-plane classes on [{}, {}] x [{}, {}]</title>",
            self.x0,
            &self.x0 + &(&self.step * &Rat::from(self.nx as i64)),
            self.y0,
            &self.y0 + &(&self.step * &Rat::from(self.ny as i64)),
        );
        for row in 0..self.ny {
            for col in 0..self.nx {
                let tag = self.cells[row * self.nx + col];
                let _ = writeln!(
                    out,
                    "<rect x=\"{}\" y=\"{}\" width=\"{scale}\" height=\"{scale}\" fill=\"{}\" data-tag=\"{}\"/>",
                    col * scale,
                    row * scale,
                    tag_color(tag),
                    tag
                );
            }
        }
        for (i, tag) in
            [RegionTag::OmegaVoa, RegionTag::StripConfOmega, RegionTag::NotOmegaGenerated].into_iter().enumerate()
        {
            let y = h + 8 + 16 * i;
            let _ = writeln!(
                out,
                "<g class=\"legend\"><rect x=\"4\" y=\"{y}\" width=\"12\" height=\"12\" fill=\"{}\" stroke=\"#444\"/>\
                 <text x=\"22\" y=\"{}\" font-size=\"11\" font-family=\"sans-serif\">{tag}</text></g>",
                tag_color(tag),
                y + 10
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
