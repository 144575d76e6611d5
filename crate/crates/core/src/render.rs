//! SVG and CSV output for nets, chain decompositions, pencils and triple points.
//!
//! Geometry stays exact up to [`Viewport::project`]; only there are
//! coordinates converted to floating point, and only for drawing. Numbers are
//! printed with a fixed number of decimals so equal input gives equal bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chain::{decompose, Chain, ChainDecomposition};
use crate::error::{Error, Result};
use crate::net::Net;
use crate::orbit::CriticalPoint;
use crate::point::{dominant_params, neighbours, pencil_table, Quadrant};
use crate::rational::Rational;
use crate::triple::{normalize, TriplePointReport};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Palette {
    pub dominant: String,
    pub pencil: String,
    pub neighbour: String,
    pub point: String,
    pub frame: String,
    pub text: String,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            dominant: "black".into(),
            pencil: "grey".into(),
            neighbour: "blue".into(),
            point: "red".into(),
            frame: "#999999".into(),
            text: "black".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderOptions {
    /// Pixels per coordinate unit. Without it the longer side of the plot is 800 px.
    pub scale: Option<f64>,
    pub margin: f64,
    pub stroke: f64,
    pub palette: Palette,
    /// Triple-point figures: move `zeta` to the origin, scale `theta` by `q²` and `rho` by `q`.
    pub normalize: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { scale: None, margin: 40.0, stroke: 1.0, palette: Palette::default(), normalize: false }
    }
}

const DEFAULT_SIDE: f64 = 800.0;

/// Fixed three-decimal formatting with trailing zeros and negative zero removed.
pub fn fmt_px(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".to_string(),
        s => s.to_string(),
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Exact plotting window mapped onto a pixel rectangle, `rho` upwards.
#[derive(Debug, Clone)]
pub struct Viewport {
    pub x0: Rational,
    pub x1: Rational,
    pub y0: Rational,
    pub y1: Rational,
    pub scale: f64,
    pub margin: f64,
}

impl Viewport {
    pub fn new(x0: Rational, x1: Rational, y0: Rational, y1: Rational, opts: &RenderOptions) -> Result<Self> {
        if x1 <= x0 || y1 <= y0 {
            return Err(Error::Domain("empty plotting window".into()));
        }
        let scale = match opts.scale {
            Some(s) if s.is_finite() && s > 0.0 => s,
            Some(s) => return Err(Error::Domain(format!("scale must be positive, got {s}"))),
            None => {
                let side = (&x1 - &x0).max(&y1 - &y0);
                DEFAULT_SIDE / side.to_f64()
            }
        };
        Ok(Viewport { x0, x1, y0, y1, scale, margin: opts.margin })
    }

    /// Smallest window holding all points, widened by `pad` of its size on each side.
    pub fn around(points: &[(Rational, Rational)], pad: Rational, opts: &RenderOptions) -> Result<Self> {
        let first = points.first().ok_or_else(|| Error::Domain("nothing to draw".into()))?;
        let (mut x0, mut x1, mut y0, mut y1) = (first.0.clone(), first.0.clone(), first.1.clone(), first.1.clone());
        for (x, y) in points {
            x0 = x0.min(x.clone());
            x1 = x1.max(x.clone());
            y0 = y0.min(y.clone());
            y1 = y1.max(y.clone());
        }
        let w = (&x1 - &x0).max(Rational::frac(1, 1_000_000));
        let h = (&y1 - &y0).max(Rational::frac(1, 1_000_000));
        let (dx, dy) = (&w * &pad, &h * &pad);
        Viewport::new(&x0 - &dx, &x1 + &dx, &y0 - &dy, &y1 + &dy, opts)
    }

    pub fn width(&self) -> f64 {
        (&self.x1 - &self.x0).to_f64() * self.scale + 2.0 * self.margin
    }

    pub fn height(&self) -> f64 {
        (&self.y1 - &self.y0).to_f64() * self.scale + 2.0 * self.margin
    }

    pub fn project(&self, x: &Rational, y: &Rational) -> (f64, f64) {
        let px = (x - &self.x0).to_f64() * self.scale + self.margin;
        let py = (&self.y1 - y).to_f64() * self.scale + self.margin;
        (px, py)
    }
}

/// Minimal SVG writer producing stable output.
pub struct Svg {
    view: Viewport,
    body: String,
    clip: bool,
}

impl Svg {
    pub fn new(view: Viewport, clip: bool) -> Self {
        Svg { view, body: String::new(), clip }
    }

    pub fn open_group(&mut self, id: &str, stroke: &str, width: f64) {
        let _ = writeln!(self.body, r#"<g id="{id}" stroke="{stroke}" stroke-width="{}" fill="none">"#, fmt_px(width));
    }

    pub fn close_group(&mut self) {
        self.body.push_str("</g>\n");
    }

    pub fn line(&mut self, a: &(Rational, Rational), b: &(Rational, Rational), title: Option<&str>) {
        let (x1, y1) = self.view.project(&a.0, &a.1);
        let (x2, y2) = self.view.project(&b.0, &b.1);
        let _ = write!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}""#,
            fmt_px(x1),
            fmt_px(y1),
            fmt_px(x2),
            fmt_px(y2)
        );
        match title {
            Some(t) => {
                let _ = writeln!(self.body, "><title>{}</title></line>", escape(t));
            }
            None => self.body.push_str("/>\n"),
        }
    }

    pub fn dot(&mut self, p: &(Rational, Rational), radius: f64, fill: &str, title: Option<&str>) {
        let (x, y) = self.view.project(&p.0, &p.1);
        let _ =
            write!(self.body, r#"<circle cx="{}" cy="{}" r="{}" fill="{fill}""#, fmt_px(x), fmt_px(y), fmt_px(radius));
        match title {
            Some(t) => {
                let _ = writeln!(self.body, "><title>{}</title></circle>", escape(t));
            }
            None => self.body.push_str("/>\n"),
        }
    }

    /// Text at a projected point, shifted by `(dx, dy)` pixels.
    pub fn text(
        &mut self,
        p: &(Rational, Rational),
        dx: f64,
        dy: f64,
        anchor: &str,
        size: f64,
        fill: &str,
        text: &str,
    ) {
        let (x, y) = self.view.project(&p.0, &p.1);
        let _ = writeln!(
            self.body,
            r#"<text x="{}" y="{}" text-anchor="{anchor}" font-size="{}" font-family="serif" fill="{fill}" stroke="none">{}</text>"#,
            fmt_px(x + dx),
            fmt_px(y + dy),
            fmt_px(size),
            escape(text)
        );
    }

    pub fn finish(self, frame: &str) -> String {
        let (w, h) = (self.view.width(), self.view.height());
        let (x0, y0) = self.view.project(&self.view.x0, &self.view.y1);
        let (x1, y1) = self.view.project(&self.view.x1, &self.view.y0);
        let (fw, fh) = (fmt_px(x1 - x0), fmt_px(y1 - y0));
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
            fmt_px(w),
            fmt_px(h)
        );
        let _ = writeln!(
            out,
            r#"<defs><clipPath id="window"><rect x="{}" y="{}" width="{fw}" height="{fh}"/></clipPath></defs>"#,
            fmt_px(x0),
            fmt_px(y0)
        );
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            out,
            r#"<rect id="frame" x="{}" y="{}" width="{fw}" height="{fh}" fill="none" stroke="{frame}" stroke-width="0.5"/>"#,
            fmt_px(x0),
            fmt_px(y0)
        );
        if self.clip {
            out.push_str("<g clip-path=\"url(#window)\">\n");
            out.push_str(&self.body);
            out.push_str("</g>\n");
        } else {
            out.push_str(&self.body);
        }
        out.push_str("</svg>\n");
        out
    }
}

fn chain_ends(chain: &Chain) -> ((Rational, Rational), (Rational, Rational)) {
    (chain.start(), chain.end())
}

fn unit_square(opts: &RenderOptions) -> Result<Viewport> {
    Viewport::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::one(), opts)
}

/// Every chain of the net as a segment across the unit square.
pub fn net_svg(net: &Net, opts: &RenderOptions) -> Result<String> {
    let mut svg = Svg::new(unit_square(opts)?, false);
    svg.open_group("chains", &opts.palette.dominant, opts.stroke * 0.5);
    for c in &net.chains {
        let (a, b) = chain_ends(c);
        svg.line(&a, &b, Some(&c.to_string()));
    }
    svg.close_group();
    Ok(svg.finish(&opts.palette.frame))
}

/// The chain laid out horizontally by `theta`, with Farey fractions above the
/// line and boundary and critical words below, curve words between points.
pub fn decomposition_svg(d: &ChainDecomposition, opts: &RenderOptions) -> Result<String> {
    let (lo, hi) = (d.chain.theta_minus.clone(), d.chain.theta_plus.clone());
    let span = &hi - &lo;
    let band = &span / Rational::integer(4);
    let view = Viewport::new(lo.clone(), hi.clone(), -band.clone(), band.clone(), opts)?;
    let size = (view.width() / 60.0).clamp(9.0, 16.0);
    let mut svg = Svg::new(view, false);
    let zero = Rational::zero();
    svg.open_group("chain", &opts.palette.dominant, opts.stroke * 2.0);
    svg.line(&(lo.clone(), zero.clone()), &(hi.clone(), zero.clone()), Some(&d.chain.to_string()));
    svg.close_group();
    svg.open_group("curves", &opts.palette.text, 0.0);
    for c in &d.curves {
        let mid = (&c.theta_lo + &c.theta_hi) / Rational::integer(2);
        svg.text(&(mid, zero.clone()), 0.0, -size * 0.6, "middle", size, &opts.palette.text, &c.word.to_power_string());
    }
    svg.close_group();
    svg.open_group("farey-points", &opts.palette.point, 0.0);
    for fp in &d.farey_points {
        let at = (fp.theta.clone(), zero.clone());
        let title = format!("({}, {})", fp.theta, fp.rho);
        svg.dot(&at, size * 0.3, &opts.palette.point, Some(&title));
        svg.text(&at, 0.0, -size * 2.2, "middle", size, &opts.palette.text, &fp.theta.to_string());
        svg.text(&at, 0.0, size * 1.8, "middle", size, &opts.palette.text, &fp.boundary_word.to_power_string());
        svg.text(
            &at,
            0.0,
            size * 3.2,
            "middle",
            size * 0.85,
            &opts.palette.neighbour,
            &fp.critical_word.to_power_string(),
        );
    }
    svg.close_group();
    svg.text(&(lo, band), 0.0, size, "start", size, &opts.palette.text, &d.chain.to_string());
    Ok(svg.finish(&opts.palette.frame))
}

/// Dominant chains of `zeta` (black), its pencils up to `depth` drawn from
/// `zeta` to their far Farey points (grey), and the dominant chains of the
/// neighbours (blue), clipped to a window around the construction.
pub fn pencils_svg(zeta: &CriticalPoint, depth: u64, opts: &RenderOptions) -> Result<String> {
    let table = pencil_table(zeta, depth)?;
    let (up, down) = neighbours(zeta)?;
    let z = (zeta.theta.clone(), zeta.rho.clone());
    let mut pts = vec![z.clone()];
    pts.extend(up.iter().chain(down.iter()).map(|n| (n.theta.clone(), n.rho.clone())));
    let first_ends: Vec<(Rational, Rational)> = table
        .rows
        .iter()
        .filter(|r| r.ell == 1)
        .filter_map(|r| r.endpoint.as_ref().map(|e| (e.point.theta.clone(), e.point.rho.clone())))
        .collect();
    pts.extend(first_ends);
    let view = Viewport::around(&pts, Rational::frac(1, 8), opts)?;
    let mut svg = Svg::new(view, true);

    let dom = dominant_params(zeta)?;
    svg.open_group("dominant", &opts.palette.dominant, opts.stroke * 1.5);
    for (i, j) in [dom.plus, dom.minus] {
        let c = Chain::new(i, j)?;
        let (a, b) = chain_ends(&c);
        svg.line(&a, &b, Some(&c.to_string()));
    }
    svg.close_group();

    svg.open_group("pencils", &opts.palette.pencil, opts.stroke);
    for row in &table.rows {
        if let Some(e) = &row.endpoint {
            let title = format!(
                "{} l={} L({},{}) {}",
                row.sigma,
                row.ell,
                row.chain.0,
                row.chain.1,
                row.word.to_power_string()
            );
            svg.line(&z, &(e.point.theta.clone(), e.point.rho.clone()), Some(&title));
        }
    }
    svg.close_group();

    svg.open_group("neighbour-dominant", &opts.palette.neighbour, opts.stroke * 1.5);
    for nb in up.iter().chain(down.iter()) {
        let d = dominant_params(nb)?;
        for (i, j) in [d.plus, d.minus] {
            let c = Chain::new(i, j)?;
            let (a, b) = chain_ends(&c);
            svg.line(&a, &b, Some(&c.to_string()));
        }
    }
    svg.close_group();

    svg.open_group("points", &opts.palette.point, 0.0);
    svg.dot(&z, 4.0, &opts.palette.point, Some(&format!("zeta {zeta}")));
    for nb in up.iter().chain(down.iter()) {
        svg.dot(&(nb.theta.clone(), nb.rho.clone()), 3.0, &opts.palette.neighbour, Some(&nb.to_string()));
    }
    for row in table.rows.iter().filter(|r| r.ell > 0) {
        if let Some(e) = &row.endpoint {
            svg.dot(&(e.point.theta.clone(), e.point.rho.clone()), 2.0, &opts.palette.pencil, None);
        }
    }
    for q in [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV] {
        if let Some(row) = table.rows.iter().find(|r| r.sigma == q && r.ell == 1) {
            if let Some(e) = &row.endpoint {
                let at = (e.point.theta.clone(), e.point.rho.clone());
                svg.text(&at, 6.0, -6.0, "start", 12.0, &opts.palette.text, &q.to_string());
            }
        }
    }
    svg.close_group();
    Ok(svg.finish(&opts.palette.frame))
}

/// The six dominant lines of `zeta`, `zeta↑`, `zeta↓` and the two triple
/// points, optionally in normalized coordinates.
pub fn triples_svg(report: &TriplePointReport, opts: &RenderOptions) -> Result<String> {
    let zeta = &report.zeta;
    let map = |p: (Rational, Rational)| if opts.normalize { normalize(zeta, &p.0, &p.1) } else { p };
    let (up, down) = neighbours(zeta)?;
    let centres: Vec<CriticalPoint> = down.into_iter().chain(std::iter::once(zeta.clone())).chain(up).collect();
    let mut pts: Vec<(Rational, Rational)> = centres.iter().map(|c| map((c.theta.clone(), c.rho.clone()))).collect();
    pts.extend(report.points.iter().map(|p| map((p.theta.clone(), p.rho.clone()))));
    let view = Viewport::around(&pts, Rational::frac(1, 4), opts)?;
    let mut svg = Svg::new(view, true);

    let colours = [&opts.palette.neighbour, &opts.palette.dominant, &opts.palette.neighbour];
    let ids = ["lower-dominant", "dominant", "upper-dominant"];
    for ((c, colour), id) in centres.iter().zip(colours).zip(ids) {
        let d = dominant_params(c)?;
        svg.open_group(id, colour, opts.stroke);
        for (i, j) in [d.plus, d.minus] {
            let chain = Chain::new(i, j)?;
            let (a, b) = chain_ends(&chain);
            svg.line(&map(a), &map(b), Some(&chain.to_string()));
        }
        svg.close_group();
    }
    svg.open_group("points", &opts.palette.point, 0.0);
    for c in &centres {
        svg.dot(&map((c.theta.clone(), c.rho.clone())), 3.0, &opts.palette.dominant, Some(&c.to_string()));
    }
    for p in &report.points {
        let at = map((p.theta.clone(), p.rho.clone()));
        svg.dot(&at, 4.0, &opts.palette.point, Some(&format!("({}, {})", p.theta, p.rho)));
        svg.text(&at, 6.0, -6.0, "start", 12.0, &opts.palette.text, &format!("({}, {})", p.theta, p.rho));
    }
    svg.close_group();
    svg.text(&pts[1], 6.0, 14.0, "start", 12.0, &opts.palette.text, &format!("type {}", report.triple_type));
    Ok(svg.finish(&opts.palette.frame))
}

pub const CSV_HEADER: &str = "i,j,theta_lo,theta_hi,rho_lo,rho_hi,word";

/// One row per curve with exact endpoints.
pub fn decomposition_csv_rows(d: &ChainDecomposition, out: &mut String) {
    let c = &d.chain;
    for cv in &d.curves {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            c.i,
            c.j,
            cv.theta_lo,
            cv.theta_hi,
            c.rho_at(&cv.theta_lo),
            c.rho_at(&cv.theta_hi),
            cv.word
        );
    }
}

pub fn decomposition_csv(d: &ChainDecomposition) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    decomposition_csv_rows(d, &mut out);
    out
}

/// Every curve of every chain of the net.
pub fn net_csv(net: &Net) -> Result<String> {
    let decomps = crate::sweep::map(&net.chains, decompose);
    let mut out = format!("{CSV_HEADER}\n");
    for d in decomps {
        decomposition_csv_rows(&d?, &mut out);
    }
    Ok(out)
}
