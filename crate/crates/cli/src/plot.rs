//! Point data for plotting a root system together with its norm curves.

use rank2_roots::num_traits::ToPrimitive;
use rank2_roots::RootSystem;

/// Samples per curve branch.
const SAMPLES: usize = 200;

pub fn csv(sys: &RootSystem, max_index: u64) -> String {
    let mut roots = sys.real_roots_in_window(max_index);
    sys.sort_by_height(&mut roots);
    roots.dedup_by_key(|r| sys.coords(r));

    let mut out = String::from("x,y,orbit,positive\n");
    let mut x_max = 1.0f64;
    for r in &roots {
        let v = sys.coords(r);
        // the Weyl orbit, even when a = b makes every root long
        let orbit = if r.family.in_long_orbit() { "long" } else { "short" };
        x_max = x_max.max(v.x.to_f64().unwrap_or(f64::MAX).abs());
        out.push_str(&format!("{},{},{},{}\n", v.x, v.y, orbit, r.is_positive()));
    }
    let p = sys.params();
    for (c, name) in [(p.a(), "long-curve"), (p.b(), "short-curve")] {
        for (x, y) in conic(p.a() as f64, p.b() as f64, c as f64, x_max) {
            out.push_str(&format!("{x},{y},{name},\n"));
        }
    }
    out
}

/// Points of `a x² − ab xy + b y² = c` with `|x| ≤ x_max`, both branches.
pub fn conic(a: f64, b: f64, c: f64, x_max: f64) -> Vec<(f64, f64)> {
    let mut pts = Vec::with_capacity(2 * SAMPLES + 2);
    for i in 0..=SAMPLES {
        let x = -x_max + 2.0 * x_max * i as f64 / SAMPLES as f64;
        // b y² − ab x y + (a x² − c) = 0
        let disc = (a * b * x).powi(2) - 4.0 * b * (a * x * x - c);
        if disc < 0.0 {
            continue;
        }
        // cancellation-free roots of b y² + B y + C
        let (bb, cc) = (-a * b * x, a * x * x - c);
        let q = -0.5 * (bb + bb.signum() * disc.sqrt());
        let q = if q == 0.0 { -0.5 * disc.sqrt() } else { q };
        pts.push((x, q / b));
        pts.push((x, cc / q));
    }
    pts
}
