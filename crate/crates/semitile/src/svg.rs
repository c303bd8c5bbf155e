//! SVG rendering of tilings, with optional trapped-block highlighting.
//!
//! Output is deterministic text. Coordinates are decimal approximations with
//! 20 significant digits, for display only; documents and traces always carry
//! exact rationals.

use crate::block::TrappedBlock;
use crate::rational::{to_decimal, Rational};
use crate::tiling::Tiling;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub scale: Rational,
    pub label_tiles: bool,
    pub highlight: Option<TrappedBlock>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: Rational::from(40i64),
            label_tiles: true,
            highlight: None,
        }
    }
}

const FILL_PLAIN: &str = "#f4f1e8";
const FILL_ROOF: &str = "#e0918f";
const FILL_FLOOR: &str = "#92b4d6";

/// One `<rect>` per tile plus a frame around the big rectangle. A highlighted
/// block draws its roof and floors in distinct fills.
pub fn render_svg(t: &Tiling, opts: &RenderOptions) -> String {
    assert!(opts.scale.is_positive(), "render scale must be positive");
    let s = &opts.scale;
    let dec = |v: &Rational| to_decimal(v, 20);
    let big_h = t.height();
    let width = dec(&(t.width() * s));
    let height = dec(&(&big_h * s));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));

    for (i, tile) in t.tiles().iter().enumerate() {
        let fill = match &opts.highlight {
            Some(block) if block.roof == i => FILL_ROOF,
            Some(block) if block.floors.contains(&i) => FILL_FLOOR,
            _ => FILL_PLAIN,
        };
        let x = dec(&(tile.x0() * s));
        let y = dec(&((&big_h - tile.y1()) * s));
        let w = dec(&(tile.width() * s));
        let h = dec(&(tile.height() * s));
        out.push_str(&format!(
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"{fill}\" stroke=\"#333\" stroke-width=\"1\"/>\n"
        ));
        if opts.label_tiles {
            let two = Rational::from(2i64);
            let cx = dec(&((tile.x0() + tile.x1()) * s / &two));
            let cy = dec(&((&(&big_h - tile.y0()) + &(&big_h - tile.y1())) * s / &two));
            let font = dec(&(s * &Rational::new(2, 5).expect("nonzero denominator")));
            out.push_str(&format!(
                "  <text x=\"{cx}\" y=\"{cy}\" font-size=\"{font}\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#222\">{i}</text>\n"
            ));
        }
    }

    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n"
    ));
    out.push_str("</svg>\n");
    out
}
