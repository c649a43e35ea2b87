use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::gamma::ln_gamma_sign;
use crate::series::params::{Family, LauricellaParams};
use crate::series::term::HyperTerm;
use crate::series::walker::sum_term;

#[derive(Debug, Clone, PartialEq)]
pub struct EvalOptions<T> {
    /// Largest total degree summed.
    pub degree_cap: usize,
    /// Target size of the estimated tail relative to the value.
    pub rel_tol: T,
    /// Hard budget on generated terms.
    pub max_terms: usize,
}

impl<T: Real> Default for EvalOptions<T> {
    fn default() -> Self {
        EvalOptions { degree_cap: 600, rel_tol: T::epsilon(), max_terms: 40_000_000 }
    }
}

impl<T: Real> EvalOptions<T> {
    pub fn with_tol(rel_tol: T) -> Self {
        EvalOptions { rel_tol, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree_cap < 1 {
            return Err(Error::Param("degree_cap must be at least 1".into()));
        }
        if !(self.rel_tol > T::zero()) {
            return Err(Error::Param("rel_tol must be positive".into()));
        }
        if self.max_terms < 1 {
            return Err(Error::Param("max_terms must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    pub terms_summed: usize,
    /// Sum of `|term|` over the last shell summed.
    pub last_shell_magnitude: T,
    pub tail_estimate: T,
    pub converged: bool,
    /// Sum of `|term|` for every shell from degree 0 up to the last one.
    pub shell_magnitudes: Vec<T>,
}

/// Whether `point` lies strictly inside the family's region, and the
/// distance `1 - norm` (clamped at zero when outside).
pub fn in_convergence_domain<T: Real>(family: Family, point: &[T]) -> (bool, T) {
    let norm = match family {
        Family::A => point.iter().fold(T::zero(), |a, x| a + x.abs()),
        Family::B | Family::D => point.iter().fold(T::zero(), |a, x| a.max(x.abs())),
        Family::C => point.iter().fold(T::zero(), |a, x| a + x.abs().sqrt()),
    };
    let inside = norm < T::one() && point.iter().all(|x| x.is_finite());
    (inside, (T::one() - norm).max(T::zero()))
}

fn check_domain<T: Real>(family: Family, point: &[T]) -> Result<T> {
    let (inside, margin) = in_convergence_domain(family, point);
    if !inside {
        return Err(Error::Domain(format!(
            "point {:?} is outside the convergence region of F_{family}",
            point.iter().map(|x| x.as_f64()).collect::<Vec<_>>()
        )));
    }
    Ok(margin)
}

/// Truncated Lauricella series at `point`.
pub fn eval_lauricella<T: Real>(
    params: &LauricellaParams<T>,
    point: &[T],
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    opts.validate()?;
    if point.len() != params.arity {
        return Err(Error::Param(format!(
            "point has {} coordinates, F_{} has arity {}",
            point.len(),
            params.family,
            params.arity
        )));
    }
    let margin = check_domain(params.family, point)?;
    sum_term(&params.term(), point, margin, opts)
}

/// Gauss 2F1(a, b; c; z) for |z| < 1.
pub fn eval_gauss_2f1<T: Real>(a: T, b: T, c: T, z: T, opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    let p = LauricellaParams::gauss(a, b, c)?;
    eval_lauricella(&p, &[z], opts)
}

/// Appell F2 = F_A in two variables.
#[allow(clippy::too_many_arguments)]
pub fn eval_appell_f2<T: Real>(
    alpha: T,
    beta1: T,
    beta2: T,
    gamma1: T,
    gamma2: T,
    x: T,
    y: T,
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    let p = LauricellaParams::fa(alpha, vec![beta1, beta2], vec![gamma1, gamma2])?;
    eval_lauricella(&p, &[x, y], opts)
}

/// `prod_j (1 - x_j)^(-b_j)` summed as a series (max-norm region).
pub fn eval_binomial_product<T: Real>(beta: &[T], point: &[T], opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    let margin = check_domain(Family::D, point)?;
    sum_term(&HyperTerm::binomial_product(beta.to_vec()), point, margin, opts)
}

/// `(1 - x_1 - ... - x_r)^(-a)` summed as a series (sum-norm region).
pub fn eval_power_of_sum<T: Real>(alpha: T, point: &[T], opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    let margin = check_domain(Family::A, point)?;
    sum_term(&HyperTerm::power_of_sum(alpha, point.len()), point, margin, opts)
}

/// Closed form of F_D with every argument equal to 1:
/// `Γ(γ)Γ(γ-α-Σβ) / (Γ(γ-α)Γ(γ-Σβ))`.
pub fn fd_at_unity<T: Real>(params: &LauricellaParams<T>) -> Result<T> {
    if params.family != Family::D {
        return Err(Error::Param(format!("fd_at_unity needs family D, got {}", params.family)));
    }
    let a = params.alpha[0];
    let g = params.gamma[0];
    let sb = params.beta.iter().fold(T::zero(), |s, b| s + *b);
    if !(g - a - sb > T::zero()) {
        return Err(Error::Param("gamma - alpha - sum(beta) must be positive".into()));
    }
    if a == T::zero() || sb == T::zero() {
        return Ok(T::one());
    }
    let lg = |x: T| ln_gamma_sign(x);
    let (l1, s1) = lg(g);
    let (l2, s2) = lg(g - a - sb);
    let (l3, s3) = lg(g - a);
    let (l4, s4) = lg(g - sb);
    if !l3.is_finite() || !l4.is_finite() {
        // A pole in the denominator makes the ratio vanish.
        return Ok(T::zero());
    }
    Ok(s1 * s2 * s3 * s4 * (l1 + l2 - l3 - l4).exp())
}

/// Geometric tail from the last two shell magnitudes.
pub fn geometric_tail<T: Real>(prev: T, last: T, margin: T) -> Result<T> {
    if last == T::zero() {
        return Ok(T::zero());
    }
    let q = last / prev;
    if !(q < T::one()) {
        return Err(Error::Truncation(format!("shell ratio {} is not below 1", q.as_f64())));
    }
    let q = q.max(T::zero()).min(T::one() - margin / T::lit(2.0));
    Ok(last * q / (T::one() - q))
}

/// Bound on the terms beyond total degree `n`.
pub fn tail_bound<T: Real>(params: &LauricellaParams<T>, point: &[T], n: usize) -> Result<T> {
    if n < 1 {
        return Err(Error::Param("tail_bound needs N >= 1".into()));
    }
    let margin = check_domain(params.family, point)?;
    let opts = EvalOptions { degree_cap: n, rel_tol: T::zero(), max_terms: usize::MAX };
    let res = sum_term(&params.term(), point, margin, &opts)?;
    let m = &res.shell_magnitudes;
    if m.len() <= n {
        // Terminated before degree n.
        return Ok(T::zero());
    }
    geometric_tail(m[n - 1], m[n], margin)
}
