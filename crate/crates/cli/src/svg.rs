//! Static SVG scatter of roots in the complex plane: fixed 800x800
//! canvas, axes, the unit circle, optional dashed annulus circles.

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

pub fn root_scatter(roots: &[(f64, f64)], annulus: Option<(f64, f64)>) -> String {
    let mut extent = 1.2f64;
    for &(re, im) in roots {
        extent = extent.max(re.abs()).max(im.abs());
    }
    if let Some((_, outer)) = annulus {
        extent = extent.max(outer);
    }
    extent *= 1.1;
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let cx = SIZE / 2.0;
    let cy = SIZE / 2.0;
    let x = |re: f64| cx + re * scale;
    let y = |im: f64| cy - im * scale;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    ));
    // axes
    svg.push_str(&format!(
        "  <line x1=\"0\" y1=\"{cy}\" x2=\"{SIZE}\" y2=\"{cy}\" stroke=\"#999\" stroke-width=\"1\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{cx}\" y1=\"0\" x2=\"{cx}\" y2=\"{SIZE}\" stroke=\"#999\" stroke-width=\"1\"/>\n"
    ));
    // unit circle
    svg.push_str(&format!(
        "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{:.3}\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\"/>\n",
        scale
    ));
    if let Some((inner, outer)) = annulus {
        for r in [inner, outer] {
            svg.push_str(&format!(
                "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{:.3}\" fill=\"none\" stroke=\"#4a7\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n",
                r * scale
            ));
        }
    }
    // scale label
    svg.push_str(&format!(
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"14\" fill=\"#666\">extent {extent:.4}</text>\n",
        10.0, 20.0
    ));
    for &(re, im) in roots {
        svg.push_str(&format!(
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"#c33\" fill-opacity=\"0.8\"/>\n",
            x(re),
            y(im)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let roots = [(-1.0, 0.0), (0.5, 0.5), (0.5, -0.5)];
        let a = root_scatter(&roots, Some((0.4, 2.0)));
        let b = root_scatter(&roots, Some((0.4, 2.0)));
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<circle").count(), 3 + 3); // unit + 2 annulus + roots
    }
}
