//! Shell-by-shell summation of a [`HyperTerm`] series at a point.
//!
//! A term `m + e_j` is generated from its parent `m` only for
//! `j >= last(m)`, where `last(m)` is the position of the last non-zero
//! entry. Every index then has exactly one parent, so a shell is built from
//! the previous one in a single pass with one ratio per term and no lookups.
//! Zero terms are dropped. Because every coefficient is a product of
//! Pochhammer symbols, a zero term only has zero descendants, so dropping it
//! loses nothing. An empty shell therefore means the series has terminated.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::eval::{EvalOptions, EvalResult};
use crate::series::term::HyperTerm;

#[derive(Clone, Copy)]
struct Neumaier<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Neumaier<T> {
    fn new() -> Self {
        Neumaier { sum: T::zero(), comp: T::zero() }
    }

    fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp = self.comp + ((self.sum - t) + v);
        } else {
            self.comp = self.comp + ((v - t) + self.sum);
        }
        self.sum = t;
    }

    fn value(&self) -> T {
        self.sum + self.comp
    }
}

/// Per-coordinate ratio tables, grown on demand.
struct CoordRatios<'a, T> {
    term: &'a HyperTerm<T>,
    point: &'a [T],
    table: Vec<Vec<T>>,
}

impl<'a, T: Real> CoordRatios<'a, T> {
    fn get(&mut self, j: usize, mj: usize) -> T {
        while self.table[j].len() <= mj {
            let k = T::from_index(self.table[j].len());
            let mut num = self.point[j];
            let mut den = k + T::one();
            for c in &self.term.coord_upper[j] {
                num = num * (*c + k);
            }
            for d in &self.term.coord_lower[j] {
                den = den * (*d + k);
            }
            self.table[j].push(num / den);
        }
        self.table[j][mj]
    }
}

/// Sums the series. `margin` is the distance from the boundary of the
/// convergence region and bounds the shell ratio used for the tail.
pub fn sum_term<T: Real>(
    term: &HyperTerm<T>,
    point: &[T],
    margin: T,
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    let r = term.arity();
    if point.len() != r {
        return Err(Error::Param(format!("point has {} coordinates, series has {r}", point.len())));
    }
    term.check_lower()?;
    let q_max = T::one() - margin / T::lit(2.0);
    let mut ratios = CoordRatios { term, point, table: vec![Vec::new(); r] };

    // Current shell: term values, flat multi-indices, and last non-zero position.
    let mut vals: Vec<T> = vec![T::one()];
    let mut idx: Vec<u32> = vec![0; r];
    let mut last: Vec<u8> = vec![0];

    let mut total = Neumaier::new();
    total.add(T::one());
    let mut mags = vec![T::one()];
    let mut terms_summed = 1usize;
    let mut tail = T::infinity();
    let mut streak = 0;
    let mut converged = false;

    for s in 1..=opts.degree_cap {
        let mut tot = T::one();
        let big_m = T::from_index(s - 1);
        for u in &term.total_upper {
            tot = tot * (*u + big_m);
        }
        for l in &term.total_lower {
            tot = tot / (*l + big_m);
        }
        let mut nvals = Vec::with_capacity(vals.len() * 2);
        let mut nidx = Vec::with_capacity(idx.len() * 2);
        let mut nlast = Vec::with_capacity(vals.len() * 2);
        let mut shell = Neumaier::new();
        let mut mag = T::zero();
        for p in 0..vals.len() {
            let base = vals[p] * tot;
            let m = &idx[p * r..(p + 1) * r];
            for j in (last[p] as usize)..r {
                terms_summed += 1;
                let v = base * ratios.get(j, m[j] as usize);
                if v == T::zero() {
                    continue;
                }
                shell.add(v);
                mag = mag + v.abs();
                nvals.push(v);
                nidx.extend_from_slice(m);
                let at = nidx.len() - r + j;
                nidx[at] += 1;
                nlast.push(j as u8);
            }
        }
        if terms_summed > opts.max_terms {
            return Err(Error::Truncation(format!(
                "more than {} terms without convergence (degree {s})",
                opts.max_terms
            )));
        }
        mags.push(mag);
        if nvals.is_empty() {
            tail = T::zero();
            converged = true;
            break;
        }
        total.add(shell.value());
        let prev = mags[mags.len() - 2];
        let q = (mag / prev).min(q_max);
        tail = mag * q / (T::one() - q);
        let scale = total.value().abs().max(T::min_positive_value());
        if tail <= opts.rel_tol * scale {
            streak += 1;
            if streak >= 2 {
                converged = true;
                break;
            }
        } else {
            streak = 0;
        }
        vals = nvals;
        idx = nidx;
        last = nlast;
    }
    if !tail.is_finite() {
        // degree_cap == 0: nothing beyond the constant term was examined.
        tail = T::infinity();
    }
    Ok(EvalResult {
        value: total.value(),
        terms_summed,
        last_shell_magnitude: *mags.last().unwrap(),
        tail_estimate: tail,
        converged,
        shell_magnitudes: mags,
    })
}
