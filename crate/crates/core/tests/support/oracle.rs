//! Exact-arithmetic reference renderer.
//!
//! Recomputes a trajectory map from first principles with rational numbers:
//! colormap interpolation, hexcone HSV conversion (sector / p-q-t form),
//! bounding-box fit, and a per-pixel scan of every canvas pixel against the
//! closed-form line rule. Shares no code with the library's rendering path.
//! Inputs must have rational speeds (integer-valued squared norms that are
//! perfect squares, scaled by a perfect-square denominator).

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy)]
pub struct Q {
    n: i128,
    d: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl Q {
    pub fn new(n: i128, d: i128) -> Q {
        assert!(d != 0);
        let g = gcd(n, d);
        let s = if d < 0 { -1 } else { 1 };
        Q { n: s * n / g, d: s * d / g }
    }

    pub fn int(n: i128) -> Q {
        Q::new(n, 1)
    }

    /// Exact conversion of a finite f64 (dyadic rational).
    pub fn from_f64(v: f64) -> Q {
        assert!(v.is_finite());
        let mut d: i128 = 1;
        let mut x = v;
        while x.fract() != 0.0 {
            x *= 2.0;
            d *= 2;
            assert!(d < (1 << 60), "value {v} has too many fractional bits");
        }
        Q::new(x as i128, d)
    }

    pub fn floor(self) -> i128 {
        self.n.div_euclid(self.d)
    }

    pub fn is_zero(self) -> bool {
        self.n == 0
    }

    pub fn sqrt_exact(self) -> Q {
        let r = |v: i128| {
            let s = (v as f64).sqrt().round() as i128;
            assert_eq!(s * s, v, "oracle needs rational speeds, {v} is not a square");
            s
        };
        Q::new(r(self.n), r(self.d))
    }

    pub fn min(self, o: Q) -> Q {
        if self < o {
            self
        } else {
            o
        }
    }

    pub fn max(self, o: Q) -> Q {
        if self > o {
            self
        } else {
            o
        }
    }
}

impl PartialEq for Q {
    fn eq(&self, o: &Q) -> bool {
        self.n * o.d == o.n * self.d
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, o: &Q) -> Option<Ordering> {
        Some((self.n * o.d).cmp(&(o.n * self.d)))
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        Q::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        self + (-o)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q::new(-self.n, self.d)
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, o: Q) -> Q {
        Q::new(self.n * o.n, self.d * o.d)
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, o: Q) -> Q {
        Q::new(self.n * o.d, self.d * o.n)
    }
}

/// Exact pipeline settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Plain,
    Hue,
    Parts,
    Sat,
    Bright,
    SatBright,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Middle,
}

pub struct Scene {
    /// frames[i][j] = (x, y, z)
    pub frames: Vec<Vec<(f64, f64, f64)>>,
    pub sides: Vec<Side>,
    pub width: i128,
    pub height: i128,
    pub margin: f64,
    /// 0 = front (x, y), 1 = top (x, z), 2 = side (z, y)
    pub plane: usize,
    pub s_range: (f64, f64),
    pub b_range: (f64, f64),
}

type Rgb = [Q; 3];

fn jet(x: Q) -> Rgb {
    let anchors: [(Q, [i128; 3]); 6] = [
        (Q::new(0, 1), [0, 0, 128]),
        (Q::new(1, 8), [0, 0, 255]),
        (Q::new(3, 8), [0, 255, 255]),
        (Q::new(5, 8), [255, 255, 0]),
        (Q::new(7, 8), [255, 0, 0]),
        (Q::new(1, 1), [128, 0, 0]),
    ];
    for w in anchors.windows(2) {
        let ((p0, c0), (p1, c1)) = (w[0], w[1]);
        if x >= p0 && x <= p1 {
            let t = (x - p0) / (p1 - p0);
            let one = Q::int(1);
            return [0, 1, 2].map(|i| Q::int(c0[i]) * (one - t) + Q::int(c1[i]) * t);
        }
    }
    panic!("jet position out of range");
}

fn gray(x: Q) -> Rgb {
    let v = Q::int(211) * (Q::int(1) - x);
    [v, v, v]
}

fn base(level: Level, side: Side, x: Q) -> Rgb {
    match (level, side) {
        (Level::Plain, _) => [Q::int(255); 3],
        (Level::Hue, _) | (_, Side::Left) => jet(x),
        (_, Side::Right) => jet(Q::int(1) - x),
        (_, Side::Middle) => gray(x),
    }
}

/// Hue in sixths of a turn `[0, 6)`, saturation, value; inputs 0..255.
fn to_hsv(c: Rgb) -> (Q, Q, Q) {
    let k = Q::int(255);
    let (r, g, b) = (c[0] / k, c[1] / k, c[2] / k);
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let chroma = max - min;
    let sixths = if chroma.is_zero() {
        Q::int(0)
    } else if max == r {
        let h = (g - b) / chroma;
        if h < Q::int(0) {
            h + Q::int(6)
        } else {
            h
        }
    } else if max == g {
        (b - r) / chroma + Q::int(2)
    } else {
        (r - g) / chroma + Q::int(4)
    };
    let s = if max.is_zero() { Q::int(0) } else { chroma / max };
    (sixths, s, max)
}

fn from_hsv(sixths: Q, s: Q, v: Q) -> Rgb {
    let one = Q::int(1);
    let i = sixths.floor();
    let f = sixths - Q::int(i);
    let p = v * (one - s);
    let q = v * (one - s * f);
    let t = v * (one - s * (one - f));
    let (r, g, b) = match i {
        0 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        5 => (v, p, q),
        _ => unreachable!(),
    };
    let k = Q::int(255);
    [r * k, g * k, b * k]
}

fn quantize(c: Rgb) -> [u8; 3] {
    c.map(|v| (v + Q::new(1, 2)).floor().clamp(0, 255) as u8)
}

fn color(level: Level, side: Side, x: Q, speed: Q, v_max: Q, s_range: (Q, Q), b_range: (Q, Q)) -> [u8; 3] {
    let c = base(level, side, x);
    let (sat, bright) = match level {
        Level::Sat => (true, false),
        Level::Bright => (false, true),
        Level::SatBright => (true, true),
        _ => (false, false),
    };
    if !sat && !bright {
        return quantize(c);
    }
    let norm = if v_max.is_zero() { Q::int(0) } else { speed / v_max };
    let (h, mut s, mut v) = to_hsv(c);
    if sat {
        s = norm * (s_range.1 - s_range.0) + s_range.0;
    }
    if bright {
        v = norm * (b_range.1 - b_range.0) + b_range.0;
    }
    quantize(from_hsv(h, s, v))
}

fn round_half_up(v: Q) -> i128 {
    (v + Q::new(1, 2)).floor()
}

/// Does pixel `(px, py)` lie on the line from `a` to `b` under the
/// major-axis rule `minor offset = floor((2 i |d_minor| + |d_major|) / (2 |d_major|))`?
fn on_line(a: (i128, i128), b: (i128, i128), px: i128, py: i128) -> bool {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let x_major = dx.abs() >= dy.abs();
    let (ma, mp, md, na, np, nd) = if x_major { (a.0, px, dx, a.1, py, dy) } else { (a.1, py, dy, a.0, px, dx) };
    if md == 0 {
        return px == a.0 && py == a.1;
    }
    let i = (mp - ma) * md.signum();
    if i < 0 || i > md.abs() {
        return false;
    }
    let offset = (2 * i * nd.abs() + md.abs()).div_euclid(2 * md.abs());
    np == na + nd.signum() * offset
}

/// Render `scene` at `level`, returning the RGB byte buffer (black background).
pub fn render(scene: &Scene, level: Level) -> Vec<u8> {
    let n = scene.frames.len();
    let m = scene.sides.len();
    let pts: Vec<Vec<(Q, Q, Q)>> = scene
        .frames
        .iter()
        .map(|f| f.iter().map(|&(x, y, z)| (Q::from_f64(x), Q::from_f64(y), Q::from_f64(z))).collect())
        .collect();
    let project = |p: (Q, Q, Q)| match scene.plane {
        0 => (p.0, p.1),
        1 => (p.0, p.2),
        _ => (p.2, p.1),
    };

    let all: Vec<(Q, Q)> = pts.iter().flatten().map(|&p| project(p)).collect();
    let (mut lo, mut hi) = (all[0], all[0]);
    for &(u, v) in &all {
        lo = (lo.0.min(u), lo.1.min(v));
        hi = (hi.0.max(u), hi.1.max(v));
    }
    let (w, h) = (Q::int(scene.width), Q::int(scene.height));
    let keep = Q::int(1) - Q::int(2) * Q::from_f64(scene.margin);
    let mut scale: Option<Q> = None;
    for (ext, inner) in [(hi.0 - lo.0, w * keep), (hi.1 - lo.1, h * keep)] {
        if ext > Q::int(0) {
            let s = inner / ext;
            scale = Some(scale.map_or(s, |c: Q| c.min(s)));
        }
    }
    let scale = scale.unwrap_or(Q::int(0));
    let two = Q::int(2);
    let (cu, cv) = ((lo.0 + hi.0) / two, (lo.1 + hi.1) / two);
    let to_px = |p: (Q, Q, Q)| {
        let (u, v) = project(p);
        (round_half_up(w / two + scale * (u - cu)), round_half_up(h / two - scale * (v - cv)))
    };

    let speed = |i: usize, j: usize| {
        let (a, b) = (pts[i][j], pts[i + 1][j]);
        let (dx, dy, dz) = (b.0 - a.0, b.1 - a.1, b.2 - a.2);
        (dx * dx + dy * dy + dz * dz).sqrt_exact()
    };
    let mut v_max = Q::int(0);
    for i in 0..n - 1 {
        for j in 0..m {
            v_max = v_max.max(speed(i, j));
        }
    }
    let s_range = (Q::from_f64(scene.s_range.0), Q::from_f64(scene.s_range.1));
    let b_range = (Q::from_f64(scene.b_range.0), Q::from_f64(scene.b_range.1));

    let mut img = vec![0u8; (3 * scene.width * scene.height) as usize];
    for i in 0..n - 1 {
        let x = Q::new(i as i128 + 1, n as i128 - 1);
        for j in 0..m {
            let c = color(level, scene.sides[j], x, speed(i, j), v_max, s_range, b_range);
            let (a, b) = (to_px(pts[i][j]), to_px(pts[i + 1][j]));
            for py in 0..scene.height {
                for px in 0..scene.width {
                    if on_line(a, b, px, py) {
                        let k = (3 * (py * scene.width + px)) as usize;
                        img[k..k + 3].copy_from_slice(&c);
                    }
                }
            }
        }
    }
    img
}
