//! Scalar special functions: Bernoulli numbers, Pochhammer symbols, complex
//! Gamma, the Riemann zeta-function and its derivative by Euler–Maclaurin
//! summation, and the order-`l` tail remainder `phi_tail`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::params::{c64, require_finite, Complex, EvalParams};
use crate::Result;

/// Largest supported Bernoulli index (covers Euler–Maclaurin orders up to 64).
pub const MAX_BERNOULLI: u32 = 140;

/// Largest Euler–Maclaurin order the evaluators will escalate to internally.
pub(crate) const MAX_EM_ORDER: u32 = 64;

/// Left of this line the zeta evaluators switch to the functional equation;
/// the direct Euler–Maclaurin partial sum cancels catastrophically there.
const REFLECT_THRESHOLD: f64 = -1.0;

fn bernoulli_table() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Standard recurrence sum_{j=0}^{k-1} C(k+1, j) B_j = -(k+1) B_k, run in
        // exact rational arithmetic; the f64 recurrence loses all digits by k ~ 40.
        let n = MAX_BERNOULLI as usize;
        let mut exact: Vec<BigRational> = Vec::with_capacity(n + 1);
        exact.push(BigRational::one());
        for k in 1..=n {
            if k >= 3 && k % 2 == 1 {
                exact.push(BigRational::zero());
                continue;
            }
            // binomials C(k+1, j) built incrementally
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for (j, b) in exact.iter().enumerate().take(k) {
                if !b.is_zero() {
                    acc += BigRational::from(binom.clone()) * b;
                }
                // C(k+1, j+1) = C(k+1, j) * (k+1-j) / (j+1)
                binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
            }
            exact.push(-acc / BigRational::from(BigInt::from(k + 1)));
        }
        exact
            .iter()
            .map(|r| r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap())
            .collect()
    })
}

fn factorial_table() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(MAX_BERNOULLI as usize + 2);
        t.push(1.0);
        for k in 1..=(MAX_BERNOULLI as usize + 1) {
            let prev = t[k - 1];
            t.push(prev * k as f64);
        }
        t
    })
}

pub(crate) fn factorial(k: u32) -> f64 {
    factorial_table()[k as usize]
}

/// `k`-th Bernoulli number with the `B_1 = -1/2` convention.
///
/// Values are computed once by the standard recurrence (in exact rational
/// arithmetic) and cached; the cache is write-once and safe for concurrent
/// readers.
pub fn bernoulli(k: u32) -> Result<f64> {
    if k > MAX_BERNOULLI {
        return Err(Error::Range(format!(
            "Bernoulli index {k} exceeds supported maximum {MAX_BERNOULLI}"
        )));
    }
    Ok(bernoulli_table()[k as usize])
}

/// Rising factorial `(s)_q = s (s+1) ... (s+q-1)`; `q = 0` returns 1.
pub fn pochhammer(s: Complex, q: u32) -> Complex {
    let mut p = c64(1.0, 0.0);
    for j in 0..q {
        p *= s + j as f64;
    }
    p
}

/// `(s)_q` together with its derivative in `s`, without divisions (safe when
/// some factor `s + j` vanishes).
pub(crate) fn pochhammer_with_derivative(s: Complex, q: u32) -> (Complex, Complex) {
    let mut p = c64(1.0, 0.0);
    let mut dp = c64(0.0, 0.0);
    for j in 0..q {
        let f = s + j as f64;
        dp = dp * f + p;
        p *= f;
    }
    (p, dp)
}

// Lanczos coefficients (g = 7, n = 9), the GSL set.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn lanczos_series(z: Complex) -> Complex {
    let mut a = c64(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z - 1.0 + k as f64);
    }
    a
}

fn gamma_unchecked(s: Complex) -> Complex {
    if s.re < 0.5 {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
        let pi_c = c64(PI, 0.0);
        pi_c / ((pi_c * s).sin() * gamma_unchecked(c64(1.0, 0.0) - s))
    } else {
        let a = lanczos_series(s);
        let w = s + (LANCZOS_G - 0.5);
        (2.0 * PI).sqrt() * w.powc(s - 0.5) * (-w).exp() * a
    }
}

/// Complex Gamma function by the Lanczos approximation with reflection for
/// `Re s < 1/2`. Good to at least 12 significant digits for `|s| <= 200`.
pub fn gamma(s: Complex, p: &EvalParams) -> Result<Complex> {
    require_finite(s, "gamma argument")?;
    if s.im.abs() < p.pole_radius && s.re <= 0.5 {
        let nearest = s.re.round();
        if nearest <= 0.0 && (s - nearest).norm() <= p.pole_radius {
            return Err(Error::PoleProximity {
                at: s,
                radius: p.pole_radius,
            });
        }
    }
    Ok(gamma_unchecked(s))
}

/// Digamma by differentiating the Lanczos form; valid for `Re z >= 0.5`.
pub(crate) fn digamma_right(z: Complex) -> Complex {
    let a = lanczos_series(z);
    let mut da = c64(0.0, 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        let d = z - 1.0 + k as f64;
        da -= c / (d * d);
    }
    let w = z + (LANCZOS_G - 0.5);
    w.ln() + (z - 0.5) / w - 1.0 + da / a
}

/// Picks the first omitted `q` whose Bernoulli factor does not vanish.
fn first_nonzero_tail_index(l: u32) -> u32 {
    if l % 2 == 0 {
        l + 1
    } else {
        l + 2
    }
}

/// Remainder-bound constant `|(s)_q'| |B_{q'+1}| / (q'+1)!` for order `l`.
fn remainder_constant(s: Complex, l: u32) -> f64 {
    let qp = first_nonzero_tail_index(l);
    let b = bernoulli_table()[(qp + 1) as usize].abs();
    pochhammer(s, qp).norm() * b / factorial(qp + 1)
}

/// Chooses the summation cutoff `N` so the Euler–Maclaurin remainder bound
/// `C(s,l) N^{-(Re s + q')}` stays below `eps`. `None` means order `l` cannot
/// reach `eps` within `max_trunc` terms.
fn choose_cutoff(s: Complex, l: u32, eps: f64, max_trunc: u64) -> Option<u64> {
    let qp = first_nonzero_tail_index(l);
    let expo = s.re + qp as f64;
    if expo <= 0.25 {
        return None;
    }
    let c = 2.0 * remainder_constant(s, l);
    let n_base = 10u64.max((s.im.abs() / PI).ceil() as u64 + l as u64);
    let n_bound = if c <= eps {
        n_base
    } else {
        let x = (c / eps).powf(1.0 / expo);
        if !x.is_finite() || x > 1e18 {
            return None;
        }
        x.ceil() as u64
    };
    let n = n_base.max(n_bound);
    if n > max_trunc {
        None
    } else {
        Some(n)
    }
}

/// Euler–Maclaurin evaluation at a fixed cutoff and order; no remainder check.
fn zeta_em_fixed(s: Complex, n: u64, l: u32) -> Complex {
    let mut sum = c64(0.0, 0.0);
    for k in 1..=n {
        sum += c64(k as f64, 0.0).powc(-s);
    }
    let nf = c64(n as f64, 0.0);
    let n_pow = nf.powc(-s);
    sum -= n_pow / 2.0;
    sum += nf.powc(1.0 - s) / (s - 1.0);
    let bern = bernoulli_table();
    let mut q = 1;
    while q <= l {
        // even q has B_{q+1} = 0
        let r = bern[(q + 1) as usize] / factorial(q + 1);
        sum += pochhammer(s, q) * r * nf.powc(-s - q as f64);
        q += 2;
    }
    sum
}

/// Term-wise derivative of the expression in [`zeta_em_fixed`].
fn zeta_em_fixed_deriv(s: Complex, n: u64, l: u32) -> Complex {
    let mut sum = c64(0.0, 0.0);
    for k in 1..=n {
        let kf = k as f64;
        sum -= kf.ln() * c64(kf, 0.0).powc(-s);
    }
    let nf = c64(n as f64, 0.0);
    let ln_n = (n as f64).ln();
    sum += ln_n * nf.powc(-s) / 2.0;
    let sm1 = s - 1.0;
    sum += -nf.powc(1.0 - s) * (ln_n * sm1 + 1.0) / (sm1 * sm1);
    let bern = bernoulli_table();
    let mut q = 1;
    while q <= l {
        let r = bern[(q + 1) as usize] / factorial(q + 1);
        let (p, dp) = pochhammer_with_derivative(s, q);
        sum += (dp - p * ln_n) * r * nf.powc(-s - q as f64);
        q += 2;
    }
    sum
}

fn check_pole(s: Complex, p: &EvalParams) -> Result<()> {
    if (s - 1.0).norm() <= p.pole_radius {
        return Err(Error::PoleProximity {
            at: s,
            radius: p.pole_radius,
        });
    }
    Ok(())
}

/// Escalation ladder for the internal Euler–Maclaurin order.
fn order_ladder(start: u32) -> impl Iterator<Item = u32> {
    let start = start.max(1);
    std::iter::successors(Some(start), |&l| {
        if l >= MAX_EM_ORDER {
            None
        } else {
            Some((l + 8).min(MAX_EM_ORDER))
        }
    })
}

fn zeta_principal(s: Complex, p: &EvalParams, eps: f64) -> Result<Complex> {
    for l in order_ladder(p.em_order_l) {
        if let Some(n) = choose_cutoff(s, l, eps, p.max_trunc) {
            return Ok(zeta_em_fixed(s, n, l));
        }
    }
    Err(Error::AccuracyUnreachable)
}

fn zeta_principal_deriv(s: Complex, p: &EvalParams, eps: f64) -> Result<Complex> {
    for l in order_ladder(p.em_order_l) {
        // extra log factor from the differentiated terms
        if let Some(n) = choose_cutoff(s, l, eps / 8.0, p.max_trunc) {
            let ln_n = (n as f64).ln();
            if let Some(n2) = choose_cutoff(s, l, eps / (2.0 * (1.0 + ln_n)), p.max_trunc) {
                return Ok(zeta_em_fixed_deriv(s, n.max(n2), l));
            }
        }
    }
    Err(Error::AccuracyUnreachable)
}

/// Reflection factor `chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s)`.
fn chi(s: Complex) -> Complex {
    c64(2.0, 0.0).powc(s)
        * c64(PI, 0.0).powc(s - 1.0)
        * (c64(PI / 2.0, 0.0) * s).sin()
        * gamma_unchecked(1.0 - s)
}

/// Riemann zeta on the full continuation.
///
/// Uses the Euler–Maclaurin expansion with a cutoff chosen from the standard
/// remainder bound; for `Re s < -1` switches to the functional equation. The
/// absolute error stays below `p.target_eps` for moderate values (and below
/// `p.target_eps` relative where `|zeta|` is large), for `|Im s| <= 100`.
pub fn zeta(s: Complex, p: &EvalParams) -> Result<Complex> {
    require_finite(s, "zeta argument")?;
    check_pole(s, p)?;
    let eps = p.target_eps;
    if s.re < REFLECT_THRESHOLD {
        let z = zeta_principal(1.0 - s, p, eps)?;
        Ok(chi(s) * z)
    } else {
        zeta_principal(s, p, eps)
    }
}

/// Derivative of [`zeta`], by term-wise differentiation of the same expansion
/// (with the differentiated functional equation on the reflected side).
pub fn zeta_deriv(s: Complex, p: &EvalParams) -> Result<Complex> {
    require_finite(s, "zeta argument")?;
    check_pole(s, p)?;
    let eps = p.target_eps;
    if s.re < REFLECT_THRESHOLD {
        let w = 1.0 - s;
        let z = zeta_principal(w, p, eps)?;
        let dz = zeta_principal_deriv(w, p, eps)?;
        let pref = c64(2.0, 0.0).powc(s) * c64(PI, 0.0).powc(s - 1.0) * gamma_unchecked(w);
        let half_pi_s = c64(PI / 2.0, 0.0) * s;
        let ln_2pi = (2.0 * PI).ln();
        let chi_d = pref * ((ln_2pi - digamma_right(w)) * half_pi_s.sin() + (PI / 2.0) * half_pi_s.cos());
        let chi_v = pref * half_pi_s.sin();
        // zeta'(s) = chi'(s) zeta(1-s) - chi(s) zeta'(1-s)
        Ok(chi_d * z - chi_v * dz)
    } else {
        zeta_principal_deriv(s, p, eps)
    }
}

/// `phi_l(n, s)`: the order-`l` Euler–Maclaurin remainder of the zeta partial
/// sum at cutoff `n`,
/// `sum_{k<=n} k^-s - { (n^(1-s)-1)/(1-s) + n^-s/2 - sum_q (s)_q B_{q+1}/(q+1)! n^(-s-q) + zeta(s) - 1/(s-1) }`.
///
/// Decays like `n^(-Re s - l - 1)`.
pub fn phi_tail(n: u64, s: Complex, p: &EvalParams) -> Result<Complex> {
    if n < 1 {
        return Err(Error::Range("phi_tail cutoff must be >= 1".into()));
    }
    require_finite(s, "phi_tail argument")?;
    check_pole(s, p)?;
    let zeta_s = zeta(s, &p.with_eps(p.target_eps * 0.05))?;
    let mut partial = c64(0.0, 0.0);
    for k in 1..=n {
        partial += c64(k as f64, 0.0).powc(-s);
    }
    Ok(phi_tail_with(n, s, p.em_order_l, zeta_s, partial))
}

/// Core of [`phi_tail`] with the zeta value and partial sum supplied by the
/// caller (the double-zeta evaluator accumulates the partial sum
/// incrementally across `n`).
pub(crate) fn phi_tail_with(n: u64, s: Complex, l: u32, zeta_s: Complex, partial: Complex) -> Complex {
    let nf = c64(n as f64, 0.0);
    let one_m_s = 1.0 - s;
    let mut bracket = (nf.powc(one_m_s) - 1.0) / one_m_s + nf.powc(-s) / 2.0 + zeta_s
        - 1.0 / (s - 1.0);
    let bern = bernoulli_table();
    let mut q = 1;
    while q <= l {
        let r = bern[(q + 1) as usize] / factorial(q + 1);
        bracket -= pochhammer(s, q) * r * nf.powc(-s - q as f64);
        q += 2;
    }
    partial - bracket
}

/// Bound constant for `|phi_l(n, s)| <= C(s, l) n^(-Re s - l - 1)`; also the
/// remainder constant of the zeta expansion itself.
pub(crate) fn phi_bound_constant(s: Complex, l: u32) -> f64 {
    remainder_constant(s, l)
}
