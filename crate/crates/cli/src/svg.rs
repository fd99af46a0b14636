//! Static SVG 1.1 rendering of a unit sphere with overlays: attainment
//! chords, one highlighted point–partner pair, and approximate-orthogonality
//! arcs. Purely geometric input, deterministic output.

use normplane_core::vec2::Vec2;

/// Everything to draw, already sampled in world coordinates.
pub struct Scene {
    /// Closed outline of the unit sphere (vertices or dense samples).
    pub sphere: Vec<Vec2>,
    /// Attainment chords, drawn thin.
    pub chords: Vec<[Vec2; 2]>,
    /// A highlighted point–partner chord, drawn thick with markers.
    pub pair: Option<[Vec2; 2]>,
    /// Arc overlays traced along the sphere, drawn as thick strokes.
    pub arcs: Vec<Vec<Vec2>>,
}

/// Canvas size in SVG user units.
const SIZE: f64 = 600.0;
/// Half the canvas, the world origin in SVG coordinates.
const CENTER: f64 = SIZE / 2.0;
/// Fraction of the half-canvas the drawing may occupy.
const FILL: f64 = 0.9;

struct Mapper {
    scale: f64,
}

impl Mapper {
    fn new(scene: &Scene) -> Self {
        let mut extent = 1.0f64;
        let mut see = |v: &Vec2| {
            extent = extent.max(v.x.abs()).max(v.y.abs());
        };
        scene.sphere.iter().for_each(&mut see);
        scene.chords.iter().flatten().for_each(&mut see);
        if let Some(pair) = &scene.pair {
            pair.iter().for_each(&mut see);
        }
        scene.arcs.iter().flatten().for_each(&mut see);
        Mapper {
            scale: CENTER * FILL / extent,
        }
    }

    fn map(&self, v: Vec2) -> (f64, f64) {
        (CENTER + v.x * self.scale, CENTER - v.y * self.scale)
    }

    fn coords(&self, v: Vec2) -> String {
        let (x, y) = self.map(v);
        format!("{x:.3},{y:.3}")
    }
}

/// Render the scene to a complete SVG document.
pub fn render(scene: &Scene) -> String {
    let m = Mapper::new(scene);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    s.push_str(&format!(
        "  <line x1=\"0\" y1=\"{CENTER}\" x2=\"{SIZE}\" y2=\"{CENTER}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n"
    ));
    s.push_str(&format!(
        "  <line x1=\"{CENTER}\" y1=\"0\" x2=\"{CENTER}\" y2=\"{SIZE}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n"
    ));

    let outline: Vec<String> = scene.sphere.iter().map(|&v| m.coords(v)).collect();
    s.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n",
        outline.join(" ")
    ));

    for arc in &scene.arcs {
        let pts: Vec<String> = arc.iter().map(|&v| m.coords(v)).collect();
        s.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#ed7d31\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n",
            pts.join(" ")
        ));
    }

    for chord in &scene.chords {
        let (x1, y1) = m.map(chord[0]);
        let (x2, y2) = m.map(chord[1]);
        s.push_str(&format!(
            "  <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#c0504d\" stroke-width=\"1.5\"/>\n"
        ));
        for &p in chord {
            let (cx, cy) = m.map(p);
            s.push_str(&format!(
                "  <circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"3\" fill=\"#c0504d\"/>\n"
            ));
        }
    }

    if let Some(pair) = &scene.pair {
        let (x1, y1) = m.map(pair[0]);
        let (x2, y2) = m.map(pair[1]);
        s.push_str(&format!(
            "  <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#4472c4\" stroke-width=\"2.5\"/>\n"
        ));
        for &p in pair {
            let (cx, cy) = m.map(p);
            s.push_str(&format!(
                "  <circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"5\" fill=\"#4472c4\"/>\n"
            ));
        }
    }

    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_scene() -> Scene {
        Scene {
            sphere: vec![
                Vec2::new(1.0, 1.0),
                Vec2::new(-1.0, 1.0),
                Vec2::new(-1.0, -1.0),
                Vec2::new(1.0, -1.0),
            ],
            chords: vec![[Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0)]],
            pair: Some([Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]),
            arcs: vec![vec![
                Vec2::new(0.0, 1.0),
                Vec2::new(0.5, 1.0),
                Vec2::new(1.0, 1.0),
            ]],
        }
    }

    #[test]
    fn renders_a_complete_svg_document() {
        let text = render(&square_scene());
        assert!(text.starts_with("<?xml"));
        assert!(text.contains("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
        assert!(text.contains("<polygon points="));
        assert!(text.contains("<polyline points="));
        assert!(text.contains("<circle"));
        assert!(text.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn rendering_is_deterministic() {
        assert_eq!(render(&square_scene()), render(&square_scene()));
    }

    #[test]
    fn sphere_is_scaled_into_the_canvas() {
        let scene = Scene {
            sphere: vec![
                Vec2::new(3.0, 0.0),
                Vec2::new(0.0, 3.0),
                Vec2::new(-3.0, 0.0),
                Vec2::new(0.0, -3.0),
            ],
            chords: vec![],
            pair: None,
            arcs: vec![],
        };
        let text = render(&scene);
        // Rightmost vertex lands at the 90 % mark of the half-canvas.
        assert!(text.contains("570.000,300.000"));
    }
}
