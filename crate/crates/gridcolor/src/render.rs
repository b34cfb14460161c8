//! Text and image renderings of colorings. Ascii and svg draw 2-D grids
//! only (slice higher-dimensional colorings first); json is the interchange
//! format and accepts anything. All output is deterministic: no timestamps,
//! no environment queries.

use std::fmt::Write;

use crate::coloring::PartialColoring;
use crate::interchange;
use crate::pairs::PairSet;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
    Json,
}

/// Deterministic color-index to fill mapping for svg.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Palette {
    /// Hue steps by the golden angle: adjacent indices get distant hues.
    GoldenAngle,
    Grayscale,
}

#[derive(Debug, Clone, Copy)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// Svg cell edge in pixels.
    pub cell_size: u32,
    pub palette: Palette,
}

impl RenderSpec {
    pub fn new(format: RenderFormat) -> Self {
        RenderSpec {
            format,
            cell_size: 32,
            palette: Palette::GoldenAngle,
        }
    }
}

/// Render `c` to a document string. `remainder` is carried through into
/// json output so files round-trip losslessly; the visual formats ignore it.
pub fn render(
    c: &PartialColoring,
    remainder: Option<&PairSet>,
    spec: &RenderSpec,
) -> Result<String> {
    match spec.format {
        RenderFormat::Json => Ok(interchange::to_json(c, remainder)),
        RenderFormat::Ascii => {
            require_2d(c, "ascii")?;
            Ok(ascii(c))
        }
        RenderFormat::Svg => {
            require_2d(c, "svg")?;
            Ok(svg(c, spec))
        }
    }
}

fn require_2d(c: &PartialColoring, format: &'static str) -> Result<()> {
    let got = c.graph().ndim();
    if got != 2 {
        return Err(Error::NotRenderable { got, format });
    }
    Ok(())
}

fn digits(mut x: u32) -> usize {
    let mut d = 1;
    while x >= 10 {
        x /= 10;
        d += 1;
    }
    d
}

fn ascii(c: &PartialColoring) -> String {
    let dims = c.graph().dims();
    let (rows, cols) = (dims[0], dims[1]);
    let widest = c
        .cells()
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(1)
        .max(1);
    let w = digits(widest);
    let mut out = String::new();
    let border = format!("+{}+\n", "-".repeat((w + 1) * cols + 1));
    out.push_str(&border);
    for i in 1..=rows {
        out.push('|');
        for j in 1..=cols {
            match c.get_at(&[i, j]).expect("in range") {
                Some(color) => write!(out, " {color:>w$}").unwrap(),
                None => write!(out, " {:>w$}", ".").unwrap(),
            }
        }
        out.push_str(" |\n");
    }
    out.push_str(&border);
    out
}

fn fill(color: u32, k: u32, palette: Palette) -> String {
    match palette {
        Palette::GoldenAngle => {
            let hue = ((color - 1) as f64 * 137.507_764_05) % 360.0;
            format!("hsl({hue:.2},65%,72%)")
        }
        Palette::Grayscale => {
            let span = k.max(2) - 1;
            let l = 85.0 - 60.0 * (color - 1).min(span) as f64 / span as f64;
            format!("hsl(0,0%,{l:.2}%)")
        }
    }
}

fn svg(c: &PartialColoring, spec: &RenderSpec) -> String {
    let dims = c.graph().dims();
    let (rows, cols) = (dims[0], dims[1]);
    let s = spec.cell_size as usize;
    let (width, height) = (cols * s, rows * s);
    let font = (spec.cell_size as f64 * 0.4).round() as usize;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"{font}\">"
    )
    .unwrap();
    for i in 0..rows {
        for j in 0..cols {
            let (x, y) = (j * s, i * s);
            let cell = c.get_at(&[i + 1, j + 1]).expect("in range");
            let paint = match cell {
                Some(color) => fill(color, c.k(), spec.palette),
                None => "#ffffff".to_string(),
            };
            writeln!(
                out,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{s}\" height=\"{s}\" \
                 fill=\"{paint}\" stroke=\"#333333\" stroke-width=\"1\"/>"
            )
            .unwrap();
            if let Some(color) = cell {
                let (cx, cy) = (x + s / 2, y + s / 2);
                writeln!(
                    out,
                    "  <text x=\"{cx}\" y=\"{cy}\" text-anchor=\"middle\" \
                     dominant-baseline=\"central\">{color}</text>"
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridGraph;
    use crate::interchange::from_json;

    fn coloring(dims: &[usize], k: u32, cells: Vec<Option<u32>>) -> PartialColoring {
        PartialColoring::from_cells(GridGraph::new(dims).unwrap(), k, cells).unwrap()
    }

    #[test]
    fn ascii_2x2() {
        let c = coloring(&[2, 2], 3, vec![Some(1), Some(2), Some(3), Some(2)]);
        let got = render(&c, None, &RenderSpec::new(RenderFormat::Ascii)).unwrap();
        assert_eq!(got, "+-----+\n| 1 2 |\n| 3 2 |\n+-----+\n");
    }

    #[test]
    fn ascii_pads_to_widest_color_and_dots_empties() {
        let c = coloring(&[2, 2], 10, vec![Some(1), None, Some(10), Some(2)]);
        let got = render(&c, None, &RenderSpec::new(RenderFormat::Ascii)).unwrap();
        assert_eq!(got, "+-------+\n|  1  . |\n| 10  2 |\n+-------+\n");
    }

    #[test]
    fn json_render_round_trips() {
        let c = coloring(&[1, 3], 4, vec![Some(1), Some(2), None]);
        let rem = PairSet::from_pairs(4, &[(3, 4)]).unwrap();
        let doc = render(&c, Some(&rem), &RenderSpec::new(RenderFormat::Json)).unwrap();
        let (back, back_rem) = from_json(&doc).unwrap();
        assert_eq!(back.cells(), c.cells());
        assert_eq!(back_rem.as_ref(), Some(&rem));
    }

    #[test]
    fn svg_has_a_rect_per_cell_and_text_per_assignment() {
        let c = coloring(
            &[2, 3],
            5,
            vec![Some(1), Some(2), None, Some(3), None, Some(5)],
        );
        let got = render(&c, None, &RenderSpec::new(RenderFormat::Svg)).unwrap();
        assert_eq!(got.matches("<rect ").count(), 6);
        assert_eq!(got.matches("<text ").count(), 4);
        assert!(got.contains("hsl(0.00,65%,72%)"));
        assert!(!got.to_lowercase().contains("time"));
    }

    #[test]
    fn grayscale_palette_is_monotone_distinct() {
        let shades: Vec<String> = (1..=5).map(|c| fill(c, 5, Palette::Grayscale)).collect();
        let mut unique = shades.clone();
        unique.dedup();
        assert_eq!(unique.len(), 5);
    }

    #[test]
    fn visual_formats_reject_3d() {
        let c = PartialColoring::empty(GridGraph::new(&[2, 2, 2]).unwrap(), 2);
        for format in [RenderFormat::Ascii, RenderFormat::Svg] {
            match render(&c, None, &RenderSpec::new(format)) {
                Err(Error::NotRenderable { got: 3, .. }) => {}
                other => panic!("expected NotRenderable, got {other:?}"),
            }
        }
        assert!(render(&c, None, &RenderSpec::new(RenderFormat::Json)).is_ok());
    }

    #[test]
    fn sliced_layers_render() {
        let cells = (1..=8).map(Some).collect();
        let c = coloring(&[2, 2, 2], 8, cells);
        let layer = c.slice_first_axis(2).unwrap();
        let got = render(&layer, None, &RenderSpec::new(RenderFormat::Ascii)).unwrap();
        assert_eq!(got, "+-----+\n| 5 6 |\n| 7 8 |\n+-----+\n");
    }
}
