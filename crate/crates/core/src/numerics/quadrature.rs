//! Globally adaptive Gauss-Kronrod (7, 15) quadrature.

// node and weight tables keep the published digits
#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances and work limit for [`integrate_adaptive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureSpec {
    // negated comparisons also reject NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 {
            return Err(Error::domain(
                "quadrature spec needs abs_tol > 0, rel_tol > 0 and max_subdivisions >= 1",
            ));
        }
        Ok(QuadratureSpec {
            abs_tol,
            rel_tol,
            max_subdivisions,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

/// Integral estimate with its metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Estimated absolute error, including any truncation bound.
    pub abs_error: f64,
    /// Number of panels in the final partition.
    pub subdivisions: usize,
    /// Upper limit actually used for a semi-infinite integral.
    pub truncated_at: Option<f64>,
    /// Bound on the discarded tail beyond `truncated_at`.
    pub tail_bound: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / res_asc).powf(1.5);
        e = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for i in 0..7 {
        let dx = half * XGK[i];
        let (f1, f2) = (f(centre - dx), f(centre + dx));
        fv1[i] = f1;
        fv2[i] = f2;
        res_k += WGK[i] * (f1 + f2);
        res_abs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            res_g += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for i in 0..7 {
        res_asc += WGK[i] * ((fv1[i] - mean).abs() + (fv2[i] - mean).abs());
    }
    let scale = half.abs();
    Panel {
        a,
        b,
        value: res_k * half,
        error: rescale_error((res_k - res_g) * half, res_abs * scale, res_asc * scale),
    }
}

/// Integrates `f` over `[a, b]` until the error estimate falls below
/// `max(abs_tol, rel_tol * |result|)`, bisecting the worst panel each step.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<Quadrature> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "integration needs finite a < b, got [{a}, {b}]"
        )));
    }
    let mut panels = vec![gk15(&f, a, b)];
    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if !value.is_finite() {
            return Err(Error::domain("integrand is not finite on the interval"));
        }
        let tol = spec.abs_tol.max(spec.rel_tol * value.abs());
        if error <= tol {
            return Ok(Quadrature {
                value,
                abs_error: error,
                subdivisions: panels.len(),
                truncated_at: None,
                tail_bound: None,
            });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one panel");
        let p = panels[worst];
        let mid = 0.5 * (p.a + p.b);
        let too_narrow = mid <= p.a || mid >= p.b;
        if panels.len() >= spec.max_subdivisions || too_narrow {
            return Err(Error::Convergence {
                message: format!(
                    "tolerance {tol:e} not met after {} panels on [{a}, {b}]",
                    panels.len()
                ),
                estimate: value,
                abs_error: error,
            });
        }
        panels[worst] = gk15(&f, p.a, mid);
        panels.push(gk15(&f, mid, p.b));
    }
}

/// Bound on `int_x^inf t^m e^{-t^2/2} dt`, valid for `x^2 > m - 1`. Negative `m` is allowed.
pub fn gaussian_tail_bound(m: i32, x: f64) -> f64 {
    let k = (m - 1).max(0) as f64;
    let denom = 1.0 - k / (x * x);
    if denom <= 0.0 {
        return f64::INFINITY;
    }
    x.powi(m - 1) * (-0.5 * x * x).exp() / denom
}

/// Integrates `f` over `[a, inf)` given `|f(x)| <= scale * x^m e^{-x^2/2}` for `x >= a`.
///
/// The range is cut where the envelope tail drops below a hundredth of `abs_tol`;
/// the cut point and the tail bound are returned with the estimate.
pub fn integrate_gaussian_tail<F: Fn(f64) -> f64>(
    f: F,
    m: i32,
    scale: f64,
    a: f64,
    spec: &QuadratureSpec,
) -> Result<Quadrature> {
    let target = 0.01 * spec.abs_tol;
    let mut x = a.max(0.0) + 1.0 + ((m - 1).max(0) as f64).sqrt();
    while scale * gaussian_tail_bound(m, x) > target {
        x += 0.25;
    }
    let tail = scale * gaussian_tail_bound(m, x);
    let inner = QuadratureSpec {
        abs_tol: spec.abs_tol - tail,
        ..*spec
    };
    let q = integrate_adaptive(f, a, x, &inner)?;
    Ok(Quadrature {
        abs_error: q.abs_error + tail,
        truncated_at: Some(x),
        tail_bound: Some(tail),
        ..q
    })
}
