//! The double zeta-function on its full continuation, direct nested series
//! for `r <= 3`, the triple zeta-function by Mellin–Barnes contour
//! integration, the limit function `F`, and identity residuals.

use std::f64::consts::PI;

use crate::error::Error;
use crate::params::{c64, require_finite, Complex, EvalParams};
use crate::special::{
    bernoulli, factorial, gamma, phi_bound_constant, phi_tail_with, pochhammer, zeta,
};
use crate::Result;

/// Ceiling for the internal order escalation of [`zeta2`].
const MAX_DOUBLE_ORDER: u32 = 40;

/// Predicate for the singular set of the double zeta-function: `s2 = 1`,
/// `s1 + s2 = 2`, `s1 + s2 = 1`, and `s1 + s2 = 1 - q` for odd `q >= 1`
/// (that is `s1 + s2` among `0, -2, -4, ...`).
#[derive(Debug, Clone, Copy, Default)]
pub struct SingularSet2;

impl SingularSet2 {
    pub fn is_near(s1: Complex, s2: Complex, radius: f64) -> bool {
        if (s2 - 1.0).norm() <= radius {
            return true;
        }
        let w = s1 + s2;
        if (w - 2.0).norm() <= radius || (w - 1.0).norm() <= radius {
            return true;
        }
        if w.im.abs() <= radius && w.re <= radius {
            let k = (w.re / 2.0).round() * 2.0;
            if k <= 0.0 && (w - k).norm() <= radius {
                return true;
            }
        }
        false
    }
}

fn guard_singular(s1: Complex, s2: Complex, p: &EvalParams) -> Result<()> {
    if SingularSet2::is_near(s1, s2, p.pole_radius) {
        Err(Error::PoleProximity {
            at: s1 + s2,
            radius: p.pole_radius,
        })
    } else {
        Ok(())
    }
}

/// Order ladder for the adaptive `l` of [`zeta2`].
fn double_order_ladder(start: u32) -> impl Iterator<Item = u32> {
    let start = start.max(1);
    std::iter::successors(Some(start), |&l| {
        if l >= MAX_DOUBLE_ORDER {
            None
        } else {
            Some((l + 4).min(MAX_DOUBLE_ORDER))
        }
    })
}

/// Double zeta-function on its full meromorphic continuation.
///
/// Evaluates `zeta(s1+s2-1)/(s2-1) - zeta(s1+s2)/2
/// + sum_{q=1}^{l} (s2)_q B_{q+1}/(q+1)! zeta(s1+s2+q)
/// - sum_{n1} phi_l(n1, s2) n1^(-s1)`,
/// with the first `n0 = ceil(|Im s2|/pi)` outer terms peeled off and summed
/// directly as `n1^(-s1) (zeta(s2) - sum_{k<=n1} k^(-s2))` — an exact
/// rearrangement that keeps the remainder terms at unit scale — and the
/// `phi`-sum truncated where its decay bound drops below `target_eps`.
/// The order `l` is raised internally (up to 40) when the convergence margin
/// `Re s1 + Re s2 + l > 1/2` fails or the truncation would exceed
/// `max_trunc`.
pub fn zeta2(s1: Complex, s2: Complex, p: &EvalParams) -> Result<Complex> {
    require_finite(s1, "zeta2 argument s1")?;
    require_finite(s2, "zeta2 argument s2")?;
    guard_singular(s1, s2, p)?;
    let eps = p.target_eps;
    let mut last = Error::InsufficientOrder;
    for l in double_order_ladder(p.em_order_l) {
        let margin = s1.re + s2.re + l as f64;
        if margin <= 0.5 {
            last = Error::InsufficientOrder;
            continue;
        }
        // |phi_l(n, s2)| <= c n^(-Re s2 - l - 1); outer weight n^(-Re s1)
        let c = 2.0 * phi_bound_constant(s2, l);
        let n0 = 1u64.max((s2.im.abs() / PI).ceil() as u64);
        let eps_tail = eps / 4.0;
        let n1 = {
            let x = if c <= eps_tail * margin {
                0.0
            } else {
                (c / (eps_tail * margin)).powf(1.0 / margin)
            };
            if !x.is_finite() || x > 1e18 {
                last = Error::AccuracyUnreachable;
                continue;
            }
            (n0 + 1).max(10).max(x.ceil() as u64)
        };
        if n1 > p.max_trunc {
            last = Error::AccuracyUnreachable;
            continue;
        }
        return zeta2_fixed(s1, s2, p, l, n0, n1);
    }
    Err(last)
}

fn zeta2_fixed(
    s1: Complex,
    s2: Complex,
    p: &EvalParams,
    l: u32,
    n0: u64,
    n1: u64,
) -> Result<Complex> {
    let inner = p.with_eps(p.target_eps * 0.25 / (l as f64 + 4.0));
    let zeta_s2 = zeta(s2, &inner)?;

    // zeta(w) with the first n0 terms removed, reused by every main term
    let tail_term = |w: Complex| -> Result<Complex> {
        let mut t = zeta(w, &inner)?;
        for k in 1..=n0 {
            t -= c64(k as f64, 0.0).powc(-w);
        }
        Ok(t)
    };

    let w = s1 + s2;
    let mut total = tail_term(w - 1.0)? / (s2 - 1.0) - tail_term(w)? / 2.0;
    let mut q = 1;
    while q <= l {
        let r = bernoulli(q + 1)? / factorial(q + 1);
        total += pochhammer(s2, q) * r * tail_term(w + q as f64)?;
        q += 2;
    }

    // peeled outer terms and the phi-sum share one running prefix of k^(-s2)
    let mut prefix = c64(0.0, 0.0);
    for n in 1..=n0 {
        prefix += c64(n as f64, 0.0).powc(-s2);
        total += c64(n as f64, 0.0).powc(-s1) * (zeta_s2 - prefix);
    }
    for n in (n0 + 1)..=n1 {
        let nf = c64(n as f64, 0.0);
        prefix += nf.powc(-s2);
        let phi = phi_tail_with(n, s2, l, zeta_s2, prefix);
        total -= phi * nf.powc(-s1);
    }
    Ok(total)
}

/// Residual of the axis identity `zeta2(s1, 0) = -zeta(s1-1) - zeta(s1)/2`:
/// returns `zeta2(s1, 0) + zeta(s1-1) + zeta(s1)/2`, which stays at the
/// evaluation-noise level everywhere the identity's terms are regular.
pub fn zeta2_axis_residual(s1: Complex, p: &EvalParams) -> Result<Complex> {
    let z2 = zeta2(s1, c64(0.0, 0.0), p)?;
    let za = zeta(s1 - 1.0, p)?;
    let zb = zeta(s1, p)?;
    Ok(z2 + za + zb / 2.0)
}

/// Residual of the harmonic product (r = 2):
/// `zeta(s1) zeta(s2) - zeta2(s1, s2) - zeta2(s2, s1) - zeta(s1+s2)`.
pub fn stuffle_residual(s1: Complex, s2: Complex, p: &EvalParams) -> Result<Complex> {
    let a = zeta(s1, p)?;
    let b = zeta(s2, p)?;
    let ab = zeta(s1 + s2, p)?;
    let z12 = zeta2(s1, s2, p)?;
    let z21 = zeta2(s2, s1, p)?;
    Ok(a * b - z12 - z21 - ab)
}

// ---------------------------------------------------------------------------
// direct nested summation (the oracle for the continued evaluators)
// ---------------------------------------------------------------------------

/// `sum_{n>m} n^(-s)` by a short Euler–Maclaurin tail; valid once `m` clears
/// `|Im s|` comfortably.
fn series_tail(s: Complex, m: u64) -> Complex {
    let mf = c64(m as f64, 0.0);
    let inv = 1.0 / m as f64;
    let base = mf.powc(-s);
    let mut t = base * mf / (s - 1.0) - base / 2.0;
    // q = 1, 3, 5 with B2/2! = 1/12, B4/4! = -1/720, B6/6! = 1/30240
    let mut pw = base * inv;
    t += pochhammer(s, 1) * (1.0 / 12.0) * pw;
    pw *= inv * inv;
    t += pochhammer(s, 3) * (-1.0 / 720.0) * pw;
    pw *= inv * inv;
    t += pochhammer(s, 5) * (1.0 / 30240.0) * pw;
    t
}

/// Cutoff so the [`series_tail`] remainder `|(s)_7 B_8/8!| m^(-Re s - 7)`
/// stays below `eps`.
fn series_cutoff(s: Complex, eps: f64, max_trunc: u64) -> Result<u64> {
    let expo = s.re + 7.0;
    if expo <= 0.5 {
        return Err(Error::NotInConvergentRegion);
    }
    let c = 2.0 * pochhammer(s, 7).norm() * (1.0 / 30.0) / factorial(8);
    let base = 15u64.max((3.0 * (1.0 + s.im.abs())).ceil() as u64);
    let n = if c <= eps {
        base
    } else {
        base.max((c / eps).powf(1.0 / expo).ceil() as u64)
    };
    if n > max_trunc {
        return Err(Error::AccuracyUnreachable);
    }
    Ok(n)
}

fn convergence_margins(s: &[Complex]) -> bool {
    let r = s.len();
    let mut acc = 0.0;
    for j in 1..=r {
        acc += s[r - j].re;
        if acc <= j as f64 + 1e-9 {
            return false;
        }
    }
    true
}

fn direct_r1(s: Complex, p: &EvalParams) -> Result<Complex> {
    let k = series_cutoff(s, p.target_eps / 2.0, p.max_trunc)?;
    let mut sum = c64(0.0, 0.0);
    for n in 1..=k {
        sum += c64(n as f64, 0.0).powc(-s);
    }
    Ok(sum + series_tail(s, k))
}

fn direct_r2(s1: Complex, s2: Complex, p: &EvalParams) -> Result<Complex> {
    let eps = p.target_eps;
    // outer truncation from the first asymptotic order dropped in the tail
    let expo = s1.re + s2.re + 2.0;
    let c_out = 2.0 * pochhammer(s2, 3).norm() * (1.0 / 30.0) / factorial(4);
    let m1 = {
        let base = 30u64.max((3.0 * (1.0 + s2.im.abs())).ceil() as u64);
        let n = if c_out <= eps / 4.0 * expo {
            base
        } else {
            base.max(((c_out / (eps / 4.0 * expo)).powf(1.0 / expo)).ceil() as u64)
        };
        if n > p.max_trunc {
            return Err(Error::AccuracyUnreachable);
        }
        n
    };
    let k = m1.max(series_cutoff(s2, eps / 8.0, p.max_trunc)?);

    // prefix sums of n^(-s2) up to k; Z2(m) = P(k) - P(m) + tail(k)
    let mut pref = Vec::with_capacity(m1 as usize + 1);
    pref.push(c64(0.0, 0.0));
    let mut acc = c64(0.0, 0.0);
    for n in 1..=k {
        acc += c64(n as f64, 0.0).powc(-s2);
        if n <= m1 {
            pref.push(acc);
        }
    }
    let p_total = acc + series_tail(s2, k);

    let mut out = c64(0.0, 0.0);
    for m in 1..=m1 {
        out += c64(m as f64, 0.0).powc(-s1) * (p_total - pref[m as usize]);
    }
    // sum_{m>M1} m^(-s1) Z2(m) with Z2 ~ m^(1-s2)/(s2-1) - m^(-s2)/2 + s2/12 m^(-s2-1)
    let w = s1 + s2;
    out += series_tail(w - 1.0, m1) / (s2 - 1.0) - series_tail(w, m1) / 2.0
        + s2 / 12.0 * series_tail(w + 1.0, m1);
    Ok(out)
}

fn direct_r3(s1: Complex, s2: Complex, s3: Complex, p: &EvalParams) -> Result<Complex> {
    let eps = p.target_eps;
    let a = s2 + s3;
    // outer truncation: the dropped asymptotic order decays like m^-(sig_sum)
    let expo = s1.re + a.re;
    let c_out =
        (1.0 + a.norm()).powi(3) * (1.0 + 1.0 / (s3 - 1.0).norm() + 1.0 / (a - 2.0).norm());
    let m1 = {
        let base = 40u64.max((3.0 * (1.0 + a.im.abs())).ceil() as u64);
        let n = base.max(((c_out / (eps / 8.0 * expo)).powf(1.0 / expo)).ceil() as u64);
        if n > p.max_trunc {
            return Err(Error::AccuracyUnreachable);
        }
        n
    };
    // middle truncation: next order of the inner asymptotics
    let c_mid = 2.0 * pochhammer(s3, 3).norm() * (1.0 / 30.0) / factorial(4);
    let k2 = {
        let e2 = s2.re + s3.re + 2.0;
        let base = m1.max((3.0 * (1.0 + s3.im.abs())).ceil() as u64).max(40);
        base.max(((c_mid / (eps / 16.0 * e2)).powf(1.0 / e2)).ceil() as u64)
    };
    let k3 = k2.max(series_cutoff(s3, eps / 20.0, p.max_trunc)?);
    if k3 > p.max_trunc {
        return Err(Error::AccuracyUnreachable);
    }

    // innermost prefix: P3(n) = sum_{k<=n} k^(-s3), kept up to k2
    let mut p3 = Vec::with_capacity(k2 as usize + 1);
    p3.push(c64(0.0, 0.0));
    let mut acc = c64(0.0, 0.0);
    for n in 1..=k3 {
        acc += c64(n as f64, 0.0).powc(-s3);
        if n <= k2 {
            p3.push(acc);
        }
    }
    let p3_total = acc + series_tail(s3, k3);

    // middle prefix: Q(m) = sum_{n<=m} n^(-s2) Z3(n), Z3(n) = p3_total - P3(n)
    let mut q = Vec::with_capacity(m1 as usize + 1);
    q.push(c64(0.0, 0.0));
    let mut qacc = c64(0.0, 0.0);
    for n in 1..=k2 {
        qacc += c64(n as f64, 0.0).powc(-s2) * (p3_total - p3[n as usize]);
        if n <= m1 {
            q.push(qacc);
        }
    }
    // Z23(m) = Q(k2) - Q(m) + midtail(k2)
    let midtail = |m: u64| -> Complex {
        series_tail(a - 1.0, m) / (s3 - 1.0) - series_tail(a, m) / 2.0
            + s3 / 12.0 * series_tail(a + 1.0, m)
    };
    let q_total = qacc + midtail(k2);

    let mut out = c64(0.0, 0.0);
    for m in 1..=m1 {
        out += c64(m as f64, 0.0).powc(-s1) * (q_total - q[m as usize]);
    }
    // outer tail via the two-order asymptotics of Z23
    let c0 = 1.0 / ((a - 2.0) * (s3 - 1.0));
    let c1 = -0.5 / (s3 - 1.0) - 0.5 / (a - 1.0);
    let c2 = (a - 1.0) / (12.0 * (s3 - 1.0)) + 0.25 + s3 / (12.0 * a);
    out += c0 * series_tail(s1 + a - 2.0, m1)
        + c1 * series_tail(s1 + a - 1.0, m1)
        + c2 * series_tail(s1 + a, m1);
    Ok(out)
}

/// Direct nested summation of the `r`-fold sum in its region of absolute
/// convergence (`Re(s_{r-j+1}+...+s_r) > j` for all `j`), with per-level
/// truncations chosen from tail bounds. The independent oracle for the
/// continued evaluators; supports `r <= 3`.
pub fn zeta_r_direct(s: &[Complex], p: &EvalParams) -> Result<Complex> {
    if s.is_empty() {
        return Err(Error::Range("zeta_r_direct needs r >= 1".into()));
    }
    for (i, v) in s.iter().enumerate() {
        require_finite(*v, &format!("zeta_r_direct argument s{}", i + 1))?;
    }
    if !convergence_margins(s) {
        return Err(Error::NotInConvergentRegion);
    }
    match s.len() {
        1 => direct_r1(s[0], p),
        2 => direct_r2(s[0], s[1], p),
        3 => direct_r3(s[0], s[1], s[2], p),
        r => Err(Error::Range(format!(
            "direct summation supports r <= 3, got r = {r}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Mellin-Barnes continuation of the triple zeta-function
// ---------------------------------------------------------------------------

/// Number of residues collected by the shifted contour.
const MB_SHIFT: u32 = 10;
/// Distance kept from the Gamma poles flanking the contour.
const MB_EPS: f64 = 0.5;

/// `zeta(-j)` for integer `j >= 0`, exact via Bernoulli numbers.
fn zeta_neg_int(j: u32) -> f64 {
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    sign * bernoulli(j + 1).unwrap() / (j + 1) as f64
}

/// Triple zeta-function by the shifted Mellin–Barnes representation:
/// `zeta2(s1, s2+s3-1)/(s3-1)
///  + sum_{j=0}^{M-1} C(-s3, j) zeta2(s1, s2+s3+j) zeta(-j)
///  + (2 pi)^{-1} Int_{Re z = M-1/2} Gamma(s3+z) Gamma(-z)/Gamma(s3)
///       zeta2(s1, s2+s3+z) zeta(-z) dy`,
/// with the contour truncated where the Gamma decay pushes the tail below
/// `target_eps` and the trapezoid step refined until two refinements agree.
/// `C(-s3, j) = (-1)^j (s3)_j / j!`.
pub fn zeta3_mb(s1: Complex, s2: Complex, s3: Complex, p: &EvalParams) -> Result<Complex> {
    require_finite(s1, "zeta3 argument s1")?;
    require_finite(s2, "zeta3 argument s2")?;
    require_finite(s3, "zeta3 argument s3")?;
    let m = MB_SHIFT as f64;
    let margin = 0.05;
    // region of validity for the shifted representation
    if !(s3.re > -m + MB_EPS + margin
        && (s2 + s3).re > 1.0 - m + MB_EPS + margin
        && (s1 + s2 + s3).re > 2.0 - m + MB_EPS + margin)
    {
        return Err(Error::Range(
            "arguments outside the contour representation's region".into(),
        ));
    }
    if (s3 - 1.0).norm() <= p.pole_radius {
        return Err(Error::PoleProximity {
            at: s3,
            radius: p.pole_radius,
        });
    }
    let gamma_s3 = gamma(s3, p)?; // also rejects s3 near non-positive integers
    let eps = p.target_eps;
    let a = s2 + s3;
    let inner = p.with_eps(eps / 20.0);

    let mut res = zeta2(s1, a - 1.0, &inner)? / (s3 - 1.0);
    for j in 0..MB_SHIFT {
        let zj = zeta_neg_int(j);
        if zj == 0.0 {
            continue; // trivial zeros kill even j >= 2
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let binom = sign * pochhammer(s3, j) / factorial(j);
        res += binom * zeta2(s1, a + j as f64, &inner)? * zj;
    }

    let c = m - MB_EPS;
    let g = |y: f64| -> Result<Complex> {
        let z = c64(c, y);
        let gv = gamma(s3 + z, p)? * gamma(-z, p)? / gamma_s3;
        Ok(gv * zeta2(s1, a + z, &p.with_eps(eps / 10.0))? * zeta(-z, &inner)?)
    };

    // integrand decays like exp(-pi |y|): the tail beyond T is about |g(T)|/pi
    let mut t_lim = 10.0f64;
    loop {
        let edge = g(t_lim)?.norm() + g(-t_lim)?.norm();
        if edge / PI < eps / 4.0 {
            break;
        }
        t_lim += 5.0;
        if t_lim > 120.0 {
            return Err(Error::QuadratureNotConverged);
        }
    }

    // trapezoid with step halving until two refinements agree
    let mut h = 0.25f64;
    let mut n = (2.0 * t_lim / h).ceil() as usize;
    h = 2.0 * t_lim / n as f64;
    let mut sum = (g(-t_lim)? + g(t_lim)?) / 2.0;
    for i in 1..n {
        sum += g(-t_lim + i as f64 * h)?;
    }
    let mut integral = sum * h;
    for _ in 0..4 {
        let mut mid = c64(0.0, 0.0);
        for i in 0..n {
            mid += g(-t_lim + (i as f64 + 0.5) * h)?;
        }
        let refined = (integral + mid * h) / 2.0;
        let delta = (refined - integral).norm();
        integral = refined;
        n *= 2;
        h /= 2.0;
        if delta < eps / 2.0 {
            return Ok(res + integral / (2.0 * PI));
        }
    }
    Err(Error::QuadratureNotConverged)
}

// ---------------------------------------------------------------------------
// the limit function F
// ---------------------------------------------------------------------------

/// `F_{r-1}(s_2,...,s_r) = sum_{j=1}^{r-1} (-1)^{r-j+1}
/// zeta_j(s_{r-j+1},...,s_r) - (-1)^r`, the asymptotic value of `zeta_r` as
/// `Re s_1 -> +infinity`. The empty tail returns `F_0 = 1`. Supports tails up
/// to length 3 (r <= 4); the triple component uses the contour continuation
/// and falls back to direct summation.
pub fn limit_f(tail: &[Complex], p: &EvalParams) -> Result<Complex> {
    let r_minus_1 = tail.len();
    if r_minus_1 > 3 {
        return Err(Error::Range(
            "limit function supports tails up to length 3".into(),
        ));
    }
    let r = r_minus_1 + 1;
    let minus_one_r = if r % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = c64(-minus_one_r, 0.0);
    for j in 1..=r_minus_1 {
        let args = &tail[r_minus_1 - j..];
        let sign = if (r - j + 1) % 2 == 0 { 1.0 } else { -1.0 };
        let val = match j {
            1 => zeta(args[0], p)?,
            2 => zeta2(args[0], args[1], p)?,
            3 => match zeta3_mb(args[0], args[1], args[2], p) {
                Ok(v) => v,
                Err(Error::Range(_)) => zeta_r_direct(args, p)?,
                Err(e) => return Err(e),
            },
            _ => unreachable!(),
        };
        acc += sign * val;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> EvalParams {
        EvalParams::default()
    }

    // zeta(3) by the stated oracle: brute-force double sum of 1/(m n^2) over
    // m < n <= 10^6, plus the analytic tail estimate.
    fn euler_identity_oracle() -> f64 {
        let n_max = 1_000_000u64;
        let mut harmonic = 0.0f64;
        let mut sum = 0.0f64;
        for n in 2..=n_max {
            harmonic += 1.0 / (n - 1) as f64;
            sum += harmonic / (n as f64 * n as f64);
        }
        let nf = n_max as f64;
        let gamma_e = 0.5772156649015329;
        let lg = nf.ln() + gamma_e;
        sum + (lg + 1.0) / nf + lg / (2.0 * nf * nf) - 0.25 / (nf * nf)
    }

    #[test]
    fn zeta2_euler_identity() {
        let oracle = euler_identity_oracle();
        assert!((oracle - 1.2020569031595943).abs() < 1e-10);
        let got = zeta2(c64(1.0, 0.0), c64(2.0, 0.0), &p()).unwrap();
        assert!((got - oracle).norm() < 1e-9, "got {got}");
    }

    #[test]
    fn zeta2_pi4_over_120() {
        // (zeta(2)^2 - zeta(4))/2 from independent constants
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        let z4 = std::f64::consts::PI.powi(4) / 90.0;
        let want = (z2 * z2 - z4) / 2.0;
        let got = zeta2(c64(2.0, 0.0), c64(2.0, 0.0), &p()).unwrap();
        assert!((got - want).norm() < 1e-11);
    }

    #[test]
    fn zeta2_vanishes_at_listed_diagonal_zero() {
        let a5 = c64(0.12844956, 20.59707674);
        let got = zeta2(a5, a5, &p()).unwrap();
        assert!(got.norm() < 1e-6, "|zeta2(a5,a5)| = {}", got.norm());
    }

    #[test]
    fn zeta2_on_axis_matches_closed_form() {
        let got = zeta2(c64(3.0, 0.0), c64(0.0, 0.0), &p()).unwrap();
        assert!((got - c64(-2.2459625184280235, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn zeta2_reference_values() {
        // 30-digit evaluations of the continuation
        let cases = [
            (c64(2.0, 0.0), c64(3.0, 0.0), c64(0.22881039760335376, 0.0)),
            (c64(3.0, 0.0), c64(2.0, 0.0), c64(0.711566197550572432, 0.0)),
            (c64(2.5, 0.0), c64(3.5, 0.0), c64(0.13507512946478865, 0.0)),
            (
                c64(2.0, 1.0),
                c64(3.0, -0.5),
                c64(0.199383238620924457, 0.089838550106458041),
            ),
            (
                c64(0.5, 7.0),
                c64(0.5, -3.0),
                c64(-0.33449226462340012, -0.059731078923090062),
            ),
            (
                c64(-1.0, 12.0),
                c64(2.3, 4.0),
                c64(0.068215169445346242, -0.11770451183525738),
            ),
        ];
        for (s1, s2, want) in cases {
            let got = zeta2(s1, s2, &p()).unwrap();
            assert!(
                (got - want).norm() < 1e-10,
                "zeta2({s1}, {s2}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn zeta2_diagonal_matches_product_formula() {
        // zeta2(s,s) = (zeta(s)^2 - zeta(2s))/2, valid on the continuation
        let pr = p();
        for s in [
            c64(0.5, 20.0),
            c64(1.6, 9.3),
            c64(-0.4, 31.0),
            c64(0.12844956, 20.59707674),
        ] {
            let lhs = zeta2(s, s, &pr).unwrap();
            let rhs = (zeta(s, &pr).unwrap().powi(2) - zeta(2.0 * s, &pr).unwrap()) / 2.0;
            assert!((lhs - rhs).norm() < 1e-9, "s = {s}: lhs {lhs} rhs {rhs}");
        }
    }

    #[test]
    fn zeta2_conjugation() {
        let pr = p();
        for (s1, s2) in [
            (c64(0.5, 7.0), c64(0.5, -3.0)),
            (c64(-1.0, 12.0), c64(2.3, 4.0)),
            (c64(2.0, 1.0), c64(3.0, -0.5)),
        ] {
            let a = zeta2(s1.conj(), s2.conj(), &pr).unwrap();
            let b = zeta2(s1, s2, &pr).unwrap().conj();
            assert!((a - b).norm() < 1e-11);
        }
    }

    #[test]
    fn zeta2_singular_set_rejected() {
        let pr = p();
        for (s1, s2) in [
            (c64(1.0, 0.0), c64(1.0, 0.0)),   // s2 = 1 and s1+s2 = 2
            (c64(3.0, 0.0), c64(1.0, 0.0)),   // s2 = 1
            (c64(0.5, 0.0), c64(0.5, 0.0)),   // s1+s2 = 1
            (c64(1.5, 0.0), c64(0.5, 0.0)),   // s1+s2 = 2
            (c64(3.0, 0.0), c64(-3.0, 0.0)),  // s1+s2 = 0
            (c64(2.0, 1e-9), c64(-4.0, 0.0)), // s1+s2 = -2
        ] {
            assert!(
                matches!(zeta2(s1, s2, &pr), Err(Error::PoleProximity { .. })),
                "({s1}, {s2}) should be excluded"
            );
        }
        // odd negative sums are regular
        assert!(zeta2(c64(2.0, 0.0), c64(-5.0, 0.0), &pr).is_ok());
    }

    #[test]
    fn zeta2_insufficient_order_far_left() {
        assert!(matches!(
            zeta2(c64(-22.6, 0.0), c64(-22.6, 0.0), &p()),
            Err(Error::InsufficientOrder)
        ));
    }

    #[test]
    fn axis_identity_residuals() {
        let pr = p();
        for s1 in [
            c64(3.0, 0.0),
            c64(0.5, 20.0),
            c64(1.247595281, 14.14857043),
            c64(-1.3, 7.7),
        ] {
            let r = zeta2_axis_residual(s1, &pr).unwrap();
            assert!(r.norm() < 1e-9, "s1 = {s1}: residual {}", r.norm());
        }
        // the Table-1 point is itself a zero of zeta2(., 0)
        let v = zeta2(c64(1.247595281, 14.14857043), c64(0.0, 0.0), &pr).unwrap();
        assert!(v.norm() < 1e-8);
    }

    #[test]
    fn stuffle_residuals() {
        let pr = p();
        for (s1, s2) in [
            (c64(2.0, 0.0), c64(3.0, 0.0)),
            (c64(0.5, 7.0), c64(0.5, -3.0)),
            (c64(2.0, 0.0), c64(2.0, 0.0)),
            (c64(-0.8, 9.0), c64(2.4, 1.0)),
        ] {
            let r = stuffle_residual(s1, s2, &pr).unwrap();
            assert!(r.norm() < 1e-9, "({s1},{s2}): {}", r.norm());
        }
    }

    #[test]
    fn direct_r1_is_zeta() {
        let got = zeta_r_direct(&[c64(2.0, 0.0)], &p()).unwrap();
        assert!((got - std::f64::consts::PI.powi(2) / 6.0).norm() < 1e-10);
    }

    #[test]
    fn direct_r2_matches_zeta2() {
        let pr = p();
        for (s1, s2) in [
            (c64(2.0, 0.0), c64(3.0, 0.0)),
            (c64(2.0, 1.0), c64(3.0, -0.5)),
            (c64(3.3, 2.0), c64(2.1, 0.7)),
        ] {
            let a = zeta_r_direct(&[s1, s2], &pr).unwrap();
            let b = zeta2(s1, s2, &pr).unwrap();
            assert!((a - b).norm() < 1e-9, "({s1},{s2}): |diff| = {}", (a - b).norm());
        }
    }

    #[test]
    fn direct_r3_reference_values() {
        // pi^6/5040 and 30-digit layered evaluations
        let pr = p();
        let cases = [
            ((2.0, 2.0, 2.0), 0.190751824122084),
            ((2.0, 2.0, 3.0), 0.0291256222898262),
            ((3.0, 2.0, 2.0), 0.177259817366971),
            ((2.0, 3.0, 2.0), 0.0720466343287066),
        ];
        for ((a, b, c), want) in cases {
            let got = zeta_r_direct(&[c64(a, 0.0), c64(b, 0.0), c64(c, 0.0)], &pr).unwrap();
            assert!(
                (got - want).norm() < 1e-10,
                "zeta3({a},{b},{c}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn direct_rejects_outside_convergence() {
        assert!(matches!(
            zeta_r_direct(&[c64(0.5, 0.0), c64(1.2, 0.0)], &p()),
            Err(Error::NotInConvergentRegion)
        ));
        assert!(matches!(
            zeta_r_direct(&[c64(0.9, 0.0)], &p()),
            Err(Error::NotInConvergentRegion)
        ));
    }

    #[test]
    fn mb_matches_direct_in_overlap() {
        let pr = p();
        for (a, b, c) in [(2.0, 2.0, 3.0), (2.0, 2.0, 2.0), (3.0, 2.0, 2.0)] {
            let s = [c64(a, 0.0), c64(b, 0.0), c64(c, 0.0)];
            let mb = zeta3_mb(s[0], s[1], s[2], &pr).unwrap();
            let direct = zeta_r_direct(&s, &pr).unwrap();
            assert!(
                (mb - direct).norm() < 1e-8,
                "({a},{b},{c}): |diff| = {}",
                (mb - direct).norm()
            );
        }
    }

    #[test]
    fn mb_rejects_pole_at_s3() {
        assert!(matches!(
            zeta3_mb(c64(2.0, 0.0), c64(2.0, 0.0), c64(1.0, 0.0), &p()),
            Err(Error::PoleProximity { .. })
        ));
    }

    #[test]
    fn limit_f_values() {
        let pr = p();
        assert_eq!(limit_f(&[], &pr).unwrap(), c64(1.0, 0.0));
        let f1 = limit_f(&[c64(2.0, 0.0)], &pr).unwrap();
        assert!((f1 - 0.6449340668482264).norm() < 1e-10);
        let f2 = limit_f(&[c64(2.0, 0.0), c64(3.0, 0.0)], &pr).unwrap();
        let want = zeta2(c64(2.0, 0.0), c64(3.0, 0.0), &pr).unwrap()
            - zeta(c64(3.0, 0.0), &pr).unwrap()
            + 1.0;
        assert!((f2 - want).norm() < 1e-10);
    }

    #[test]
    fn decay_in_the_second_variable() {
        // |zeta2(2+3i, sigma2)| * 2^sigma2 stays near 1 as sigma2 grows
        let pr = p();
        let s1 = c64(2.0, 3.0);
        for sigma2 in [10.0, 15.0, 20.0, 25.0] {
            let v = zeta2(s1, c64(sigma2, 0.0), &pr).unwrap();
            let scaled = v.norm() * 2f64.powf(sigma2);
            assert!((0.1..=10.0).contains(&scaled), "sigma2 = {sigma2}: {scaled}");
        }
    }

    #[test]
    fn limit_in_the_first_variable() {
        // |zeta2(sigma1+5i, s2) - (zeta(s2)-1)| <= 10 * 2^-sigma1
        let pr = p();
        let s2 = c64(1.5, 10.0);
        let f1 = zeta(s2, &pr).unwrap() - 1.0;
        for sigma1 in [10.0, 15.0, 20.0, 25.0] {
            let v = zeta2(c64(sigma1, 5.0), s2, &pr).unwrap();
            assert!(
                (v - f1).norm() <= 10.0 * 2f64.powf(-sigma1),
                "sigma1 = {sigma1}: {}",
                (v - f1).norm()
            );
        }
    }
}
