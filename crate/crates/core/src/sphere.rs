//! Fixed-point spherical geometry for the Borsuk-style generators.
//!
//! Coordinates are integers scaled by 10^9, all comparisons run on integer
//! dot products, and the trig needed for thresholds is evaluated with
//! integer Taylor series / Simpson sums. The point is bit-reproducibility:
//! the same seed yields the same graph on every platform. Pairs that land
//! within rounding distance of a threshold are resolved by the rounded
//! comparison itself (edge iff the integer comparison passes).

use crate::error::{Error, Result};
use crate::rational::Rational;
use num_traits::ToPrimitive;
use rand::Rng;

/// Coordinate scale: one unit is 10^-9.
pub const SCALE: i64 = 1_000_000_000;
const S2: i128 = (SCALE as i128) * (SCALE as i128);
/// pi scaled by 10^9.
pub const PI_FP: i64 = 3_141_592_654;

/// A point of the unit sphere in fixed-point coordinates.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SpherePoint {
    pub coords: Vec<i64>,
}

impl SpherePoint {
    pub fn dot(&self, other: &SpherePoint) -> i128 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    pub fn norm2(&self) -> i128 {
        self.dot(self)
    }

    /// Distance of the squared norm from 1, in squared-scale units.
    pub fn unit_defect(&self) -> i128 {
        (self.norm2() - S2).abs()
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    pub fn csv_row(&self) -> String {
        self.coords
            .iter()
            .map(|&c| format!("{}.{:09}", c / SCALE, (c % SCALE).unsigned_abs()))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// cos(x) for x in fixed-point radians, |x| <= pi. Result scaled by 10^9.
pub fn cos_fp(x: i64) -> i64 {
    let x = (x.unsigned_abs() as i128).min(PI_FP as i128);
    // reduce to [0, pi/2]: cos(x) = -cos(pi - x)
    let (x, negate) = if x > PI_FP as i128 / 2 {
        (PI_FP as i128 - x, true)
    } else {
        (x, false)
    };
    let x2 = x * x;
    let mut term: i128 = S2;
    let mut sum: i128 = S2;
    for k in 1..40i128 {
        term = term * x2 / S2;
        term = -term / ((2 * k - 1) * (2 * k));
        if term == 0 {
            break;
        }
        sum += term;
    }
    let v = (sum / SCALE as i128) as i64;
    if negate {
        -v
    } else {
        v
    }
}

/// sin(x) for x in [0, pi], fixed point.
pub fn sin_fp(x: i64) -> i64 {
    cos_fp(PI_FP / 2 - x)
}

/// arcsin(v) for v in [-1, 1] scaled by 10^9; bisection against `sin_fp`.
pub fn asin_fp(v: i64) -> i64 {
    let neg = v < 0;
    let v = v.abs().min(SCALE);
    let (mut lo, mut hi) = (0i64, PI_FP / 2);
    for _ in 0..48 {
        let mid = (lo + hi) / 2;
        if sin_fp(mid) < v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if neg {
        -hi
    } else {
        hi
    }
}

/// Fraction of the sphere S^k inside a cap of polar angle `theta`
/// (both fixed point; result scaled by 10^9). The area element of S^k is
/// proportional to sin^(k-1); k = 1 reduces to theta / pi.
pub fn cap_fraction(k: usize, theta: i64) -> i64 {
    let theta = theta.clamp(0, PI_FP);
    if k == 1 {
        return ((theta as i128 * SCALE as i128) / PI_FP as i128) as i64;
    }
    let num = simpson_sin_power(k - 1, theta);
    let den = simpson_sin_power(k - 1, PI_FP);
    ((num * SCALE as i128) / den.max(1)) as i64
}

/// Simpson integral of sin^p over [0, upper], 1024 panels, fixed point.
fn simpson_sin_power(p: usize, upper: i64) -> i128 {
    const PANELS: i128 = 1024;
    let integrand = |x: i64| -> i128 {
        let s = sin_fp(x).max(0) as i128;
        let mut acc = s;
        for _ in 1..p {
            acc = acc * s / SCALE as i128;
        }
        acc
    };
    let mut sum: i128 = integrand(0) + integrand(upper);
    for i in 1..PANELS {
        let x = ((upper as i128 * i) / PANELS) as i64;
        sum += integrand(x) * if i % 2 == 1 { 4 } else { 2 };
    }
    // width factor upper/(3*PANELS) is common to numerator and denominator
    // of cap_fraction, but keep it for standalone use
    sum * upper as i128 / (3 * PANELS)
}

/// Smallest polar angle whose cap covers at least `target` (scaled 10^9)
/// of the sphere S^k.
pub fn solve_cap_angle(k: usize, target: i64) -> i64 {
    let (mut lo, mut hi) = (0i64, PI_FP);
    for _ in 0..48 {
        let mid = (lo + hi) / 2;
        if cap_fraction(k, mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Converts a rational multiple of pi into fixed-point radians.
pub fn angle_from_rational(multiple_of_pi: &Rational) -> Result<i64> {
    let num = multiple_of_pi
        .numer()
        .to_i128()
        .ok_or_else(|| Error::InvalidParameter("angle numerator too large".into()))?;
    let den = multiple_of_pi
        .denom()
        .to_i128()
        .ok_or_else(|| Error::InvalidParameter("angle denominator too large".into()))?;
    let v = PI_FP as i128 * num / den;
    i64::try_from(v).map_err(|_| Error::InvalidParameter("angle out of range".into()))
}

fn isqrt(v: i128) -> i128 {
    if v <= 0 {
        return 0;
    }
    let mut x = (v as f64).sqrt() as i128;
    // Newton correction to an exact floor sqrt
    while x > 0 && x * x > v {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= v {
        x += 1;
    }
    x
}

/// Uniform point on S^k (which has k+1 coordinates): rejection-sample the
/// integer cube into the unit annulus and normalize.
pub fn sample_point<R: Rng>(k: usize, rng: &mut R) -> SpherePoint {
    let dim = k + 1;
    loop {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(-SCALE..=SCALE)).collect();
        let norm2: i128 = coords.iter().map(|&c| c as i128 * c as i128).sum();
        if !(S2 / 16..=S2).contains(&norm2) {
            continue;
        }
        let norm = isqrt(norm2);
        if norm == 0 {
            continue;
        }
        let scaled: Vec<i64> = coords
            .iter()
            .map(|&c| ((c as i128 * SCALE as i128) / norm) as i64)
            .collect();
        return SpherePoint { coords: scaled };
    }
}

/// Borsuk adjacency: angle(x, y) >= pi - eps, i.e. the dot product is at
/// most -cos(eps).
pub fn is_borsuk_edge(x: &SpherePoint, y: &SpherePoint, eps_fp: i64) -> bool {
    x.dot(y) <= -(cos_fp(eps_fp) as i128) * SCALE as i128
}

/// Cap adjacency used by the Borsuk-Hajnal rule: angle(x, y) < pi/2 - delta,
/// i.e. the dot product exceeds sin(delta).
pub fn in_delta_cap(x: &SpherePoint, y: &SpherePoint, delta_fp: i64) -> bool {
    x.dot(y) > sin_fp(delta_fp) as i128 * SCALE as i128
}
