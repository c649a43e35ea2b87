//! Log-gamma, gamma and the Pochhammer symbol in floating point.

use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Direct products are used up to this length; beyond it, log-gamma.
pub const POCHHAMMER_DIRECT_MAX: usize = 64;

/// `(ln|Γ(x)|, sign Γ(x))`. Poles return `(+inf, 1)`.
pub fn ln_gamma_sign<T: Real>(x: T) -> (T, T) {
    let one = T::one();
    let half = T::lit(0.5);
    if x <= T::zero() && x == x.floor() {
        return (T::infinity(), one);
    }
    if x < half {
        // Reflection: Γ(x)Γ(1-x) = π / sin(πx).
        let pi = T::lit(std::f64::consts::PI);
        let s = (pi * x).sin();
        let (lg, _) = ln_gamma_sign(one - x);
        let sign = if s < T::zero() { -one } else { one };
        return (pi.ln() - s.abs().ln() - lg, sign);
    }
    let z = x - one;
    let mut acc = T::lit(LANCZOS[0]);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::lit(*c) / (z + T::from_index(i));
    }
    let t = z + T::lit(LANCZOS_G) + half;
    let ln_sqrt_2pi = T::lit(0.918_938_533_204_672_8);
    (ln_sqrt_2pi + (z + half) * t.ln() - t + acc.ln(), one)
}

pub fn ln_gamma<T: Real>(x: T) -> T {
    ln_gamma_sign(x).0
}

/// Γ(x). Small positive integers are returned exactly.
pub fn gamma<T: Real>(x: T) -> T {
    if x > T::zero() && x == x.floor() && x <= T::lit(30.0) {
        let n = x.to_usize().unwrap_or(1);
        return (1..n).fold(T::one(), |acc, k| acc * T::from_index(k));
    }
    let (lg, s) = ln_gamma_sign(x);
    s * lg.exp()
}

/// B(p, q) = Γ(p)Γ(q)/Γ(p+q) for positive arguments.
pub fn beta<T: Real>(p: T, q: T) -> T {
    (ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)).exp()
}

/// `(a)_m`. Exact product for short runs and for non-positive integer `a`
/// (where the product terminates at zero); sign-tracked log-gamma beyond.
pub fn pochhammer<T: Real>(a: T, m: usize) -> T {
    let terminating = a <= T::zero() && a == a.floor();
    if m <= POCHHAMMER_DIRECT_MAX || terminating {
        let mut acc = T::one();
        let mut f = a;
        for _ in 0..m {
            if f == T::zero() {
                return T::zero();
            }
            acc = acc * f;
            f = f + T::one();
        }
        return acc;
    }
    let (l1, s1) = ln_gamma_sign(a + T::from_index(m));
    let (l0, s0) = ln_gamma_sign(a);
    s1 * s0 * (l1 - l0).exp()
}
