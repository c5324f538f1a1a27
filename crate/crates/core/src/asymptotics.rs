//! Asymptotic rate bounds `tau(delta)` for ternary d1 codes, where
//! `tau(delta) = limsup (1/n) log_3 T(n, ceil(delta n))`.
//!
//! Every family is reported clamped at zero. Closed-form optimizers are the
//! production path; the grid and golden-section routines at the bottom of the
//! module exist to check them.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// `log_3(2)`.
pub fn log3_2() -> f64 {
    2f64.ln() / 3f64.ln()
}

/// Points per grid used by [`verify_optimizers`].
pub const GRID_POINTS: usize = 10_000;
/// Largest allowed gap between a closed-form value and its grid supremum.
pub const OPTIMIZER_TOLERANCE: f64 = 1e-6;

fn xlogx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `h_q(x)` with the continuity limits at the ends, for arguments already
/// known to lie in `[0, 1]` (clamped against rounding).
fn h(q: u32, x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    let lq = (q as f64).ln();
    (-xlogx(x) - xlogx(1.0 - x) + x * ((q - 1) as f64).ln()) / lq
}

fn h2(x: f64) -> f64 {
    h(2, x)
}

/// The q-ary entropy function
/// `h_q(x) = -x log_q x - (1-x) log_q (1-x) + x log_q (q-1)`.
pub fn entropy(q: u32, x: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("alphabet size {q} is below 2")));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!(
            "entropy argument {x} is outside [0, 1]"
        )));
    }
    Ok(h(q, x))
}

/// Asymptotic GV bound `alpha_q(delta) >= 1 - h_q(delta)`, zero from
/// `delta = 1 - 1/q` on.
pub fn alpha_gv(q: u32, delta: f64) -> f64 {
    if delta <= 0.0 {
        return 1.0;
    }
    if delta >= (q - 1) as f64 / q as f64 {
        return 0.0;
    }
    (1.0 - h(q, delta)).max(0.0)
}

/// Upper bound on `alpha_q(delta)` used by the upper-bound curves: the rate
/// never exceeds 1, and binary codes have rate 0 from `delta = 1/2` on.
pub fn alpha_upper(q: u32, delta: f64) -> f64 {
    if q == 2 && delta >= 0.5 {
        0.0
    } else {
        1.0
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..=2.0).contains(&delta) || delta.is_nan() {
        return Err(Error::InvalidParameter(format!(
            "delta = {delta} is outside [0, 2]"
        )));
    }
    Ok(())
}

/// Bounds read off the Hamming-metric comparisons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimpleBounds {
    /// `alpha_3(delta)`.
    pub tau_lower_a3: f64,
    /// `alpha_3(delta/2)`, with the trivial upper bound on `alpha_3`.
    pub tau_upper_a3_half: f64,
    /// `log_3(2) alpha_2(delta/2)`.
    pub tau_lower_binary: f64,
    /// `2 log_3(2) alpha_2(delta/2)`, with the upper bound on `alpha_2`.
    pub tau_upper_binary: f64,
    /// `log_3(3/4) + 2 log_3(2) alpha_2(delta/2)`.
    pub tau_lower_double: f64,
}

pub fn tau_simple_bounds(delta: f64) -> Result<SimpleBounds> {
    check_delta(delta)?;
    let l = log3_2();
    let a2 = alpha_gv(2, delta / 2.0);
    Ok(SimpleBounds {
        tau_lower_a3: alpha_gv(3, delta),
        tau_upper_a3_half: alpha_upper(3, delta / 2.0),
        tau_lower_binary: l * a2,
        tau_upper_binary: 2.0 * l * alpha_upper(2, delta / 2.0),
        tau_lower_double: ((0.75f64).ln() / 3f64.ln() + 2.0 * l * a2).max(0.0),
    })
}

/// How the coset-average optimizer was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaMethod {
    ClosedForm,
    /// `delta = 1/2`: the closed form sits on the open end of the range and
    /// the value is the limit from above.
    BoundaryLimit,
    GoldenSection,
    /// No feasible `omega` (`delta >= 1`).
    Empty,
}

impl OmegaMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            OmegaMethod::ClosedForm => "closed-form",
            OmegaMethod::BoundaryLimit => "boundary-limit",
            OmegaMethod::GoldenSection => "golden-section",
            OmegaMethod::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosetBound {
    pub value: f64,
    pub omega: f64,
    pub method: OmegaMethod,
}

/// `log_3(2) (-1 + alpha_2(delta) + h_2(omega) + omega alpha_2(delta / (2 omega)))`,
/// unclamped.
pub fn coset_objective(delta: f64, omega: f64, alpha2: impl Fn(f64) -> f64) -> f64 {
    log3_2() * (-1.0 + alpha2(delta) + h2(omega) + omega * alpha2(delta / (2.0 * omega)))
}

/// Averaged support construction with an arbitrary lower bound on
/// `alpha_2`, maximized by golden section over `[max(delta, 1/2), 1]`.
pub fn tau_lower_coset_with(delta: f64, alpha2: impl Fn(f64) -> f64 + Copy) -> Result<CosetBound> {
    check_delta(delta)?;
    if delta >= 1.0 {
        return Ok(CosetBound {
            value: 0.0,
            omega: 1.0,
            method: OmegaMethod::Empty,
        });
    }
    let lo = delta.max(0.5);
    let (omega, v) = golden_max(|w| coset_objective(delta, w, alpha2), lo, 1.0);
    Ok(CosetBound {
        value: v.max(0.0),
        omega,
        method: OmegaMethod::GoldenSection,
    })
}

/// The averaged support construction with the GV bound for `alpha_2`.
pub fn tau_lower_coset(delta: f64) -> Result<CosetBound> {
    check_delta(delta)?;
    if delta > 0.5 {
        return tau_lower_coset_with(delta, |x| alpha_gv(2, x));
    }
    let omega = (2.0 + delta + (4.0 - 8.0 * delta + delta * delta).max(0.0).sqrt()) / 6.0;
    let method = if delta == 0.5 {
        OmegaMethod::BoundaryLimit
    } else {
        OmegaMethod::ClosedForm
    };
    Ok(CosetBound {
        value: coset_objective(delta, omega, |x| alpha_gv(2, x)).max(0.0),
        omega,
        method,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GgvBound {
    pub value: f64,
    pub omega: f64,
    pub beta: f64,
}

/// `h_2(omega) + 2 omega h_2(beta / (2 omega)) + omega`.
pub fn ggv_objective(omega: f64, beta: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    h2(omega) + 2.0 * omega * h2(beta / (2.0 * omega)) + omega
}

/// Asymptotic generalized GV bound with its closed-form optimizers.
pub fn tau_lower_ggv(delta: f64) -> Result<GgvBound> {
    check_delta(delta)?;
    if delta >= 8.0 / 9.0 {
        return Ok(GgvBound {
            value: 0.0,
            omega: 8.0 / 9.0,
            beta: 8.0 / 9.0,
        });
    }
    let omega = (2.0 + delta + (2.0 * (-delta * delta + 2.0 * delta + 2.0)).sqrt()) / 6.0;
    let beta = delta;
    Ok(GgvBound {
        value: (2.0 - log3_2() * ggv_objective(omega, beta)).max(0.0),
        omega,
        beta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CwBound {
    pub value: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Log-volume exponent of a constant-weight ball:
/// `omega h(gamma/omega) + (1-omega) h(gamma/(1-omega))
///  + (omega-gamma) h((beta-gamma)/(omega-gamma)) + gamma`.
pub fn cw_ball_exponent(omega: f64, beta: f64, gamma: f64) -> f64 {
    let term = |weight: f64, num: f64| {
        if weight <= 0.0 {
            0.0
        } else {
            weight * h2(num / weight)
        }
    };
    term(omega, gamma) + term(1.0 - omega, gamma) + term(omega - gamma, beta - gamma) + gamma
}

/// GV bound inside the shell of relative weight `omega`, with the inner
/// supremum at `beta = delta/2` and the stationary `gamma`.
pub fn tau_lower_cw(delta: f64, omega: f64) -> Result<CwBound> {
    check_delta(delta)?;
    if !(0.0..=1.0).contains(&omega) {
        return Err(Error::InvalidParameter(format!(
            "omega = {omega} is outside [0, 1]"
        )));
    }
    let reach = omega * (2.0 - omega);
    if delta >= reach {
        return Ok(CwBound {
            value: 0.0,
            beta: reach / 2.0,
            gamma: omega * (1.0 - omega),
        });
    }
    let beta = delta / 2.0;
    let a = 1.0 - omega;
    let gamma = (a + beta - (a * a + beta * beta).sqrt()).max(0.0);
    let value = log3_2() * (h2(omega) + omega - cw_ball_exponent(omega, beta, gamma));
    Ok(CwBound {
        value: value.max(0.0),
        beta,
        gamma,
    })
}

/// The root `(1 + delta + sqrt(delta^2 - delta + 1)) / 3` of the stationarity
/// quartic in `omega`.
pub fn optimal_omega_cw(delta: f64) -> f64 {
    (1.0 + delta + (delta * delta - delta + 1.0).sqrt()) / 3.0
}

/// `3w^4 - 2(4+d)w^3 + 4(1+2d)w^2 - 2d(2+d)w + d^2`.
pub fn quartic(delta: f64, omega: f64) -> f64 {
    let d = delta;
    let w = omega;
    (((3.0 * w - 2.0 * (4.0 + d)) * w + 4.0 * (1.0 + 2.0 * d)) * w - 2.0 * d * (2.0 + d)) * w
        + d * d
}

/// `[1 - sqrt(1-d), 1 + sqrt(1-d), (1+d-s)/3, (1+d+s)/3]` with
/// `s = sqrt(d^2 - d + 1)`.
pub fn quartic_roots(delta: f64) -> [f64; 4] {
    let r = (1.0 - delta).max(0.0).sqrt();
    let s = (delta * delta - delta + 1.0).sqrt();
    [
        1.0 - r,
        1.0 + r,
        (1.0 + delta - s) / 3.0,
        (1.0 + delta + s) / 3.0,
    ]
}

/// Coefficients (constant term first) of the quartic and of the product
/// `(w^2 - 2w + d)(3w^2 - 2(d+1)w + d)`, in exact arithmetic.
pub fn quartic_coefficients(delta: &BigRational) -> ([BigRational; 5], [BigRational; 5]) {
    let r = |v: i64| BigRational::from_integer(v.into());
    let d = delta.clone();
    let quartic = [
        &d * &d,
        -(r(2) * &d * (r(2) + &d)),
        r(4) * (r(1) + r(2) * &d),
        -(r(2) * (r(4) + &d)),
        r(3),
    ];
    let left = [d.clone(), r(-2), BigRational::one()];
    let right = [d.clone(), -(r(2) * (&d + r(1))), r(3)];
    let mut product: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            product[i + j] += a * b;
        }
    }
    (quartic, product)
}

/// Rate-distance families available for export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    LowerA3,
    UpperA3Half,
    LowerBinary,
    UpperBinary,
    LowerDouble,
    LowerCoset,
    LowerGgv,
    LowerCw,
    LowerCwFixedOmega,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::LowerA3,
        Family::UpperA3Half,
        Family::LowerBinary,
        Family::UpperBinary,
        Family::LowerDouble,
        Family::LowerCoset,
        Family::LowerGgv,
        Family::LowerCw,
        Family::LowerCwFixedOmega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::LowerA3 => "tau_lower_a3",
            Family::UpperA3Half => "tau_upper_a3_half",
            Family::LowerBinary => "tau_lower_binary",
            Family::UpperBinary => "tau_upper_binary",
            Family::LowerDouble => "tau_lower_double",
            Family::LowerCoset => "tau_lower_coset",
            Family::LowerGgv => "tau_lower_ggv",
            Family::LowerCw => "tau_lower_cw",
            Family::LowerCwFixedOmega => "tau_lower_cw_fixed_omega",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| {
            f.name() == s || f.name().strip_prefix("tau_") == Some(s)
        })
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Family::UpperA3Half | Family::UpperBinary)
    }

    /// Names of the optimizer columns that accompany this family.
    pub fn optimizer_columns(self) -> &'static [&'static str] {
        match self {
            Family::LowerCoset => &["coset_omega", "coset_method"],
            Family::LowerGgv => &["ggv_omega", "ggv_beta"],
            Family::LowerCw => &["cw_omega", "cw_beta", "cw_gamma"],
            Family::LowerCwFixedOmega => &["cw_fixed_beta", "cw_fixed_gamma"],
            _ => &[],
        }
    }
}

/// Every family at one `delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticPoint {
    pub delta: f64,
    pub simple: SimpleBounds,
    pub coset: CosetBound,
    pub ggv: GgvBound,
    pub cw_omega: f64,
    pub cw: CwBound,
    pub cw_fixed: CwBound,
}

/// Relative weight used for the fixed-shell curve.
pub const FIXED_OMEGA: f64 = 2.0 / 3.0;

impl AsymptoticPoint {
    pub fn at(delta: f64) -> Result<AsymptoticPoint> {
        let cw_omega = optimal_omega_cw(delta).min(1.0);
        Ok(AsymptoticPoint {
            delta,
            simple: tau_simple_bounds(delta)?,
            coset: tau_lower_coset(delta)?,
            ggv: tau_lower_ggv(delta)?,
            cw_omega,
            cw: tau_lower_cw(delta, cw_omega)?,
            cw_fixed: tau_lower_cw(delta, FIXED_OMEGA)?,
        })
    }

    pub fn value(&self, family: Family) -> f64 {
        match family {
            Family::LowerA3 => self.simple.tau_lower_a3,
            Family::UpperA3Half => self.simple.tau_upper_a3_half,
            Family::LowerBinary => self.simple.tau_lower_binary,
            Family::UpperBinary => self.simple.tau_upper_binary,
            Family::LowerDouble => self.simple.tau_lower_double,
            Family::LowerCoset => self.coset.value,
            Family::LowerGgv => self.ggv.value,
            Family::LowerCw => self.cw.value,
            Family::LowerCwFixedOmega => self.cw_fixed.value,
        }
    }

    /// Optimizer cells matching [`Family::optimizer_columns`].
    pub fn optimizers(&self, family: Family) -> Vec<String> {
        let f = |x: f64| format!("{x:.10}");
        match family {
            Family::LowerCoset => vec![f(self.coset.omega), self.coset.method.as_str().into()],
            Family::LowerGgv => vec![f(self.ggv.omega), f(self.ggv.beta)],
            Family::LowerCw => vec![f(self.cw_omega), f(self.cw.beta), f(self.cw.gamma)],
            Family::LowerCwFixedOmega => vec![f(self.cw_fixed.beta), f(self.cw_fixed.gamma)],
            _ => Vec::new(),
        }
    }
}

/// `from, from + step, ...` up to `to` (inclusive up to rounding).
pub fn delta_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter(format!("grid step {step} must be positive")));
    }
    if !(from <= to) {
        return Err(Error::InvalidParameter(format!(
            "grid start {from} is above its end {to}"
        )));
    }
    check_delta(from)?;
    check_delta(to)?;
    let count = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| from + i as f64 * step).collect())
}

/// Evaluates every point of `deltas` in parallel; rows keep grid order.
pub fn curve_export(deltas: &[f64]) -> Result<Vec<AsymptoticPoint>> {
    deltas.par_iter().map(|&d| AsymptoticPoint::at(d)).collect()
}

/// Maximizes a unimodal `f` on `[a, b]`; the endpoints are also compared so
/// that suprema on the boundary are found exactly.
pub fn golden_max(f: impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo < 1e-13 {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    let mid = (lo + hi) / 2.0;
    [(mid, f(mid)), (a, f(a)), (b, f(b))]
        .into_iter()
        .fold((mid, f64::NEG_INFINITY), |best, c| if c.1 > best.1 { c } else { best })
}

/// `points + 1` evenly spaced values covering `[a, b]` including both ends.
fn grid(a: f64, b: f64, points: usize) -> impl Iterator<Item = f64> {
    (0..=points).map(move |i| {
        if i == points {
            b
        } else {
            a + (b - a) * i as f64 / points as f64
        }
    })
}

fn grid_max(f: impl Fn(f64) -> f64, a: f64, b: f64, points: usize) -> (f64, f64) {
    grid(a, b, points).fold((a, f64::NEG_INFINITY), |best, x| {
        let v = f(x);
        if v > best.1 {
            (x, v)
        } else {
            best
        }
    })
}

/// Grid supremum of the coset objective over `omega in [max(delta,1/2), 1]`.
pub fn coset_grid_sup(delta: f64, points: usize) -> f64 {
    let lo = delta.max(0.5);
    grid_max(|w| coset_objective(delta, w, |x| alpha_gv(2, x)), lo, 1.0, points)
        .1
        .max(0.0)
}

/// Supremum of the generalized GV exponent over `omega` on a grid and over
/// `beta in [0, min(delta, 2 omega)]` by golden section.
pub fn ggv_grid_sup(delta: f64, points: usize) -> f64 {
    let (_, sup) = grid_max(
        |w| {
            let top = delta.min(2.0 * w);
            golden_max(|b| ggv_objective(w, b), 0.0, top).1
        },
        0.0,
        1.0,
        points,
    );
    (2.0 - log3_2() * sup).max(0.0)
}

/// Inner supremum of the constant-weight exponent on a `beta` grid with
/// golden section over `gamma in [0, min(beta, omega, 1 - omega)]`; returns
/// the resulting bound.
pub fn cw_inner_grid_sup(delta: f64, omega: f64, points: usize) -> f64 {
    let (_, sup) = grid_max(
        |b| {
            let top = b.min(omega).min(1.0 - omega);
            golden_max(|g| cw_ball_exponent(omega, b, g), 0.0, top).1
        },
        0.0,
        (delta / 2.0).min(omega),
        points,
    );
    (log3_2() * (h2(omega) + omega - sup)).max(0.0)
}

/// Grid supremum over `omega in [0, 1]` of the constant-weight bound.
pub fn cw_omega_grid_sup(delta: f64, points: usize) -> f64 {
    grid_max(
        |w| tau_lower_cw(delta, w).map_or(0.0, |b| b.value),
        0.0,
        1.0,
        points,
    )
    .1
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerCheck {
    pub family: &'static str,
    pub delta: f64,
    pub closed_form: f64,
    pub grid: f64,
}

impl OptimizerCheck {
    pub fn gap(&self) -> f64 {
        (self.closed_form - self.grid).abs()
    }

    pub fn passed(&self) -> bool {
        self.gap() < OPTIMIZER_TOLERANCE
    }
}

/// `0.1, 0.2, ...` up to `max` (inclusive), computed without drift.
pub fn tenths_up_to(max: f64) -> Vec<f64> {
    (1..)
        .map(|i| i as f64 / 10.0)
        .take_while(|&d| d <= max + 1e-12)
        .collect()
}

/// Compares every closed-form optimizer with an independent grid supremum.
pub fn verify_optimizers(points: usize) -> Vec<OptimizerCheck> {
    let mut jobs: Vec<(&'static str, f64)> = Vec::new();
    jobs.extend(tenths_up_to(0.5).into_iter().map(|d| ("coset", d)));
    let mut ggv = tenths_up_to(0.8);
    ggv.push(0.85);
    jobs.extend(ggv.into_iter().map(|d| ("ggv", d)));
    jobs.extend(tenths_up_to(0.9).into_iter().map(|d| ("cw-inner", d)));
    jobs.extend(tenths_up_to(0.9).into_iter().map(|d| ("cw-omega", d)));
    jobs.par_iter()
        .map(|&(family, delta)| {
            let (closed_form, grid) = match family {
                "coset" => (
                    tau_lower_coset(delta).expect("delta in range").value,
                    coset_grid_sup(delta, points),
                ),
                "ggv" => (
                    tau_lower_ggv(delta).expect("delta in range").value,
                    ggv_grid_sup(delta, points),
                ),
                "cw-inner" => (
                    tau_lower_cw(delta, optimal_omega_cw(delta))
                        .expect("delta in range")
                        .value,
                    cw_inner_grid_sup(delta, optimal_omega_cw(delta), points),
                ),
                _ => (
                    tau_lower_cw(delta, optimal_omega_cw(delta))
                        .expect("delta in range")
                        .value,
                    cw_omega_grid_sup(delta, points),
                ),
            };
            OptimizerCheck {
                family,
                delta,
                closed_form,
                grid,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_values() {
        assert!((entropy(2, 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((entropy(3, 2.0 / 3.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(entropy(5, 0.0).unwrap(), 0.0);
        assert_eq!(entropy(2, 1.0).unwrap(), 0.0);
        assert!(entropy(2, 1.5).is_err());
        assert!(entropy(2, -0.1).is_err());
        assert!(entropy(1, 0.5).is_err());
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha_gv(2, 0.0), 1.0);
        assert_eq!(alpha_gv(2, 0.5), 0.0);
        assert_eq!(alpha_gv(3, 2.0 / 3.0), 0.0);
        assert!(alpha_gv(2, 0.1) > 0.0);
    }

    #[test]
    fn simple_bounds() {
        let b = tau_simple_bounds(1e-12).unwrap();
        assert!((b.tau_lower_binary - log3_2()).abs() < 1e-9);
        let b = tau_simple_bounds(0.85).unwrap();
        assert!((b.tau_lower_binary - 0.0103).abs() < 1e-3);
        for d in [1.0, 1.3, 2.0] {
            let b = tau_simple_bounds(d).unwrap();
            assert_eq!(b.tau_lower_binary, 0.0);
            assert_eq!(b.tau_lower_double, 0.0);
        }
        assert!(tau_simple_bounds(2.5).is_err());
    }

    #[test]
    fn coset_optimizer() {
        let c = tau_lower_coset(0.25).unwrap();
        assert!((c.omega - (2.25 + 2.0625f64.sqrt()) / 6.0).abs() < 1e-15);
        assert_eq!(c.method, OmegaMethod::ClosedForm);
        let c = tau_lower_coset(0.0).unwrap();
        assert!((c.omega - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(tau_lower_coset(0.5).unwrap().method, OmegaMethod::BoundaryLimit);
        let c = tau_lower_coset(0.6).unwrap();
        assert_eq!(c.method, OmegaMethod::GoldenSection);
        assert!((c.value - coset_grid_sup(0.6, GRID_POINTS)).abs() < 1e-9);
    }

    #[test]
    fn ggv_limits() {
        let g = tau_lower_ggv(0.0).unwrap();
        assert!((g.omega - 2.0 / 3.0).abs() < 1e-15);
        assert!((g.value - 1.0).abs() < 1e-9);
        assert_eq!(tau_lower_ggv(8.0 / 9.0).unwrap().value, 0.0);
        assert!((tau_lower_ggv(0.85).unwrap().value - 0.0012).abs() < 1e-3);
        // the unconstrained maximum of h(w) + 3w sits at w = 8/9 with value 2 / log_3 2
        assert!((ggv_objective(8.0 / 9.0, 8.0 / 9.0) - 2.0 / log3_2()).abs() < 1e-12);
    }

    #[test]
    fn constant_weight_limits() {
        let c = tau_lower_cw(0.0, 2.0 / 3.0).unwrap();
        assert!((c.value - 1.0).abs() < 1e-9);
        let c = tau_lower_cw(0.9, 0.5).unwrap();
        assert_eq!(c.value, 0.0);
        assert!((c.beta - 0.375).abs() < 1e-15 && (c.gamma - 0.25).abs() < 1e-15);
        // continuity at the edge of the trivial region
        let w = 0.6;
        let edge = w * (2.0 - w);
        assert!(tau_lower_cw(edge - 1e-9, w).unwrap().value < 1e-6);
        assert!(tau_lower_cw(0.3, 1.2).is_err());
    }

    #[test]
    fn constant_weight_inner_matches_grid() {
        let closed = tau_lower_cw(0.3, 2.0 / 3.0).unwrap().value;
        let grid = cw_inner_grid_sup(0.3, 2.0 / 3.0, GRID_POINTS);
        assert!((closed - grid).abs() < 1e-6, "{closed} vs {grid}");
    }

    #[test]
    fn omega_root() {
        assert!((optimal_omega_cw(0.0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((optimal_omega_cw(1.0) - 1.0).abs() < 1e-15);
        assert!((optimal_omega_cw(0.5) - (1.5 + 0.75f64.sqrt()) / 3.0).abs() < 1e-15);
        for d in tenths_up_to(0.9) {
            let w = optimal_omega_cw(d);
            assert!(quartic(d, w).abs() < 1e-12);
            assert!(d < w * (2.0 - w));
        }
    }

    #[test]
    fn quartic_root_limits() {
        let close = |a: [f64; 4], b: [f64; 4]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-15);
        assert!(close(quartic_roots(0.0), [0.0, 2.0, 0.0, 2.0 / 3.0]));
        assert!(close(quartic_roots(1.0), [1.0, 1.0, 1.0 / 3.0, 1.0]));
        let r = BigRational::new(7.into(), 13.into());
        let (q, p) = quartic_coefficients(&r);
        assert_eq!(q, p);
    }

    #[test]
    fn grid_rejects_bad_steps() {
        assert!(delta_grid(0.1, 0.2, 0.0).is_err());
        assert!(delta_grid(0.1, 0.2, -0.1).is_err());
        assert!(delta_grid(0.3, 0.2, 0.1).is_err());
        let g = delta_grid(0.01, 0.99, 0.01).unwrap();
        assert_eq!(g.len(), 99);
        assert!((g[98] - 0.99).abs() < 1e-12);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
        assert_eq!(Family::from_name("lower_ggv"), Some(Family::LowerGgv));
        assert_eq!(Family::from_name("nope"), None);
    }

    #[test]
    fn golden_finds_boundary_maximum() {
        let (x, v) = golden_max(|x| x, 0.0, 1.0);
        assert_eq!((x, v), (1.0, 1.0));
        let (x, _) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0);
        assert!((x - 0.3).abs() < 1e-6);
    }
}
