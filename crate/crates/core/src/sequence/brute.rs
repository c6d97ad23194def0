use rand::Rng;
use serde::Serialize;

use super::problem::{f_eval, SeqProblem};
use super::SequenceError;
use crate::seed::rng;
use crate::Scalar;

pub const DEFAULT_RESOLUTION: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BruteMode {
    /// Every feasible point of the lattice `λ = (C/resolution)·ℤ^N`.
    Grid { resolution: usize },
    /// Random feasible points, each polished by pairwise transfers.
    Random { samples: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BruteResult<T> {
    pub min_value: T,
    pub argmin: Vec<T>,
    /// Head sum of the minimizer.
    pub a_at_min: T,
    /// Documented slack for comparing against candidate values:
    /// `C·N/resolution` on the grid, rounding level for random search.
    pub tol_grid: T,
    pub points: usize,
    /// `(a, min f at that head sum)` over the lattice head sums (grid only).
    pub a_profile: Vec<(T, T)>,
}

/// Nondecreasing, total `C`, head sum in `[0, k₂C/N]`, all up to `tol`.
pub fn is_feasible<T: Scalar>(lambdas: &[T], k2: usize, c: T, tol: T) -> bool {
    let n = lambdas.len();
    if n <= k2 || lambdas.windows(2).any(|w| !(w[0] <= w[1] + tol)) {
        return false;
    }
    let total: T = lambdas.iter().copied().sum();
    let head: T = lambdas[..k2].iter().copied().sum();
    let a_max = T::of_usize(k2) * c / T::of_usize(n);
    (total - c).abs() <= tol && head >= -tol && head <= a_max + tol
}

struct Lattice<'a, T> {
    big_n: usize,
    k2: usize,
    res: i64,
    head_cap: i64,
    h: T,
    b: T,
    c: T,
    budget: usize,
    points: usize,
    u: Vec<i64>,
    best: Option<(T, Vec<i64>)>,
    per_head: &'a mut [Option<T>],
}

impl<T: Scalar> Lattice<'_, T> {
    /// f at `λ = h·u` from the exact integer power sums of u.
    fn value(&self, s2: i64, s3: i64) -> T {
        let h = self.h;
        self.b * self.c * h * h * T::of(s2 as f64) + h * h * h * T::of(s3 as f64)
    }

    fn visit(&mut self, head: i64, s2: i64, s3: i64) -> Result<(), SequenceError> {
        self.points += 1;
        if self.points > self.budget {
            return Err(SequenceError::BudgetExceeded { budget: self.budget });
        }
        let v = self.value(s2, s3);
        let slot = &mut self.per_head[head as usize];
        if slot.is_none_or(|x| v < x) {
            *slot = Some(v);
        }
        if self.best.as_ref().is_none_or(|(x, _)| v < *x) {
            self.best = Some((v, self.u.clone()));
        }
        Ok(())
    }

    fn rec(&mut self, i: usize, prev: i64, rem: i64, head: i64, s2: i64, s3: i64) -> Result<(), SequenceError> {
        let left = (self.big_n - i) as i64;
        if left == 0 {
            if rem == 0 {
                return self.visit(head, s2, s3);
            }
            return Ok(());
        }
        let hi = rem.div_euclid(left);
        for x in prev..=hi {
            let (next_head, in_head) = if i < self.k2 { (head + x, true) } else { (head, false) };
            if in_head {
                let later = (self.k2 - i - 1) as i64;
                // later head entries are >= x
                if next_head + later * x > self.head_cap {
                    break;
                }
                // and at most (rem - x) / (left - 1) each
                if later > 0 {
                    let cap = (rem - x).div_euclid(left - 1);
                    if next_head + later * cap < 0 {
                        continue;
                    }
                } else if next_head < 0 {
                    continue;
                }
            }
            self.u[i] = x;
            self.rec(i + 1, x, rem - x, next_head, s2 + x * x, s3 + x * x * x)?;
        }
        Ok(())
    }
}

fn grid<T: Scalar>(p: &SeqProblem<T>, resolution: usize, budget: usize) -> Result<BruteResult<T>, SequenceError> {
    if resolution == 0 {
        return Err(SequenceError::BadProblem("resolution must be positive".into()));
    }
    let (big_n, k2) = (p.big_n, p.k2);
    let res = resolution as i64;
    let head_cap = (k2 as i64 * res).div_euclid(big_n as i64);
    let lo = -((k2 as i64 - 1) * res).div_euclid(big_n as i64 - k2 as i64) - 1;
    let mut per_head = vec![None; head_cap as usize + 1];
    let mut lat = Lattice {
        big_n,
        k2,
        res,
        head_cap,
        h: p.c / T::of_usize(resolution),
        b: p.b,
        c: p.c,
        budget,
        points: 0,
        u: vec![0; big_n],
        best: None,
        per_head: &mut per_head,
    };
    lat.rec(0, lo, lat.res, 0, 0, 0)?;
    let points = lat.points;
    let h = lat.h;
    let (min_value, u) = lat.best.ok_or_else(|| SequenceError::BadProblem("no feasible lattice point".into()))?;
    let argmin: Vec<T> = u.iter().map(|&x| T::of(x as f64) * h).collect();
    let a_at_min = argmin[..k2].iter().copied().sum();
    let a_profile = per_head.iter().enumerate().filter_map(|(j, v)| v.map(|v| (T::of_usize(j) * h, v))).collect();
    Ok(BruteResult {
        min_value,
        argmin,
        a_at_min,
        tol_grid: p.c * T::of_usize(big_n) / T::of_usize(resolution),
        points,
        a_profile,
    })
}

fn random_feasible<T: Scalar>(p: &SeqProblem<T>, g: &mut impl Rng) -> Option<Vec<T>> {
    let (big_n, k2) = (p.big_n, p.k2);
    let c = p.c.as_f64();
    let a = g.random_range(0.0..=1.0) * p.a_max().as_f64();
    let tail_mean = (c - a) / (big_n - k2) as f64;
    let head_mean = a / k2 as f64;
    let spread = g.random_range(0.0..=1.0) * (tail_mean - head_mean).abs().max(c / big_n as f64);
    let mut block = |len: usize, mean: f64| -> Vec<f64> {
        let mut v: Vec<f64> = (0..len).map(|_| g.random_range(-1.0..=1.0)).collect();
        let m = v.iter().sum::<f64>() / len as f64;
        v.iter_mut().for_each(|x| *x = mean + spread * (*x - m));
        v.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
        v
    };
    let mut lambdas = block(k2, head_mean);
    lambdas.extend(block(big_n - k2, tail_mean));
    let out: Vec<T> = lambdas.into_iter().map(T::of).collect();
    is_feasible(&out, k2, p.c, T::of(1e-12)).then_some(out)
}

fn polish<T: Scalar>(p: &SeqProblem<T>, x: &mut [T], g: &mut impl Rng) {
    let n = x.len();
    let tol = T::of(1e-12);
    let mut step = p.c / T::of_usize(4 * n);
    let mut fx = f_eval(x, p.b, p.c);
    let floor = p.c * T::of(1e-9) + T::min_positive_value();
    while step > floor {
        let mut improved = false;
        for _ in 0..4 * n {
            let i = g.random_range(0..n);
            let j = g.random_range(0..n);
            if i == j {
                continue;
            }
            x[i] += step;
            x[j] -= step;
            let fy = f_eval(x, p.b, p.c);
            if fy < fx && is_feasible(x, p.k2, p.c, tol) {
                fx = fy;
                improved = true;
            } else {
                x[i] -= step;
                x[j] += step;
            }
        }
        if !improved {
            step *= T::of(0.5);
        }
    }
}

fn random<T: Scalar>(p: &SeqProblem<T>, samples: usize, seed: u64) -> Result<BruteResult<T>, SequenceError> {
    let mut g = rng(seed);
    let mut best: Option<(T, Vec<T>)> = None;
    let mut points = 0;
    let mut tries = 0;
    while points < samples && tries < 100 * samples.max(1) {
        tries += 1;
        let Some(mut x) = random_feasible(p, &mut g) else { continue };
        points += 1;
        polish(p, &mut x, &mut g);
        let v = f_eval(&x, p.b, p.c);
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, x));
        }
    }
    let (min_value, argmin) = best.ok_or_else(|| SequenceError::BadProblem("no feasible sample".into()))?;
    let a_at_min = argmin[..p.k2].iter().copied().sum();
    Ok(BruteResult {
        min_value,
        argmin,
        a_at_min,
        tol_grid: T::of(1e-12) * (T::one() + min_value.abs()),
        points,
        a_profile: Vec::new(),
    })
}

/// Independent minimization of f over the feasible set with free head sum
/// `a ∈ [0, k₂C/N]`. `budget` caps the number of grid points visited.
pub fn brute_min<T: Scalar>(
    p: &SeqProblem<T>,
    mode: BruteMode,
    budget: usize,
    seed: u64,
) -> Result<BruteResult<T>, SequenceError> {
    if p.c == T::zero() {
        return Ok(BruteResult {
            min_value: T::zero(),
            argmin: vec![T::zero(); p.big_n],
            a_at_min: T::zero(),
            tol_grid: T::zero(),
            points: 1,
            a_profile: vec![(T::zero(), T::zero())],
        });
    }
    match mode {
        BruteMode::Grid { resolution } => grid(p, resolution, budget),
        BruteMode::Random { samples } => random(p, samples.min(budget), seed),
    }
}

/// Head sum at which the lattice a-profile is smallest, and whether it lies
/// within `tol` of an end of `[0, k₂C/N]`.
pub fn a_scan<T: Scalar>(p: &SeqProblem<T>, r: &BruteResult<T>, tol: T) -> (T, bool) {
    let arg = r
        .a_profile
        .iter()
        .copied()
        .reduce(|best, x| if x.1 < best.1 { x } else { best })
        .map(|x| x.0)
        .unwrap_or(r.a_at_min);
    let ok = arg <= tol || arg >= p.a_max() - tol;
    (arg, ok)
}

/// Candidate sufficiency and, for B > 0 on the grid, the boundary dichotomy.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellCheck<T> {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub k2: usize,
    #[serde(rename = "B")]
    pub b: T,
    pub min_candidate: T,
    pub argmin_candidate: usize,
    pub brute: BruteResult<T>,
    /// `brute_min ≥ min(candidates) − tol_grid`.
    pub sufficient: bool,
    /// Same comparison at rounding tolerance only.
    pub sufficient_strict: bool,
    /// Head sum minimizing the a-profile.
    pub a_argmin: Option<T>,
    /// `a_argmin` within `tol_grid` of 0 or `k₂C/N` (grid mode, `B > 0`).
    pub dichotomy: Option<bool>,
    /// `a_argmin` on the first or last lattice head sum.
    pub dichotomy_strict: Option<bool>,
}

pub fn check_cell<T: Scalar>(
    p: &SeqProblem<T>,
    mode: BruteMode,
    budget: usize,
    seed: u64,
) -> Result<CellCheck<T>, SequenceError> {
    let cands = super::candidate_points(p.big_n, p.k2, p.c, p.b)?;
    let best = cands.iter().reduce(|b, x| if x.f_value < b.f_value { x } else { b }).expect("at least two candidates");
    let brute = brute_min(p, mode, budget, seed)?;
    let round = T::of(1e-12) * (T::one() + best.f_value.abs());
    let sufficient = brute.min_value >= best.f_value - brute.tol_grid - round;
    let sufficient_strict = brute.min_value >= best.f_value - round;
    let grid = matches!(mode, BruteMode::Grid { .. }) && p.c > T::zero();
    let (a_argmin, dichotomy, dichotomy_strict) = if grid {
        let (arg, ok) = a_scan(p, &brute, brute.tol_grid);
        let first = brute.a_profile.first().map(|x| x.0);
        let last = brute.a_profile.last().map(|x| x.0);
        let strict = Some(arg) == first || Some(arg) == last;
        let gate = p.b > T::zero();
        (Some(arg), gate.then_some(ok), gate.then_some(strict))
    } else {
        (None, None, None)
    };
    Ok(CellCheck {
        big_n: p.big_n,
        k2: p.k2,
        b: p.b,
        min_candidate: best.f_value,
        argmin_candidate: best.m,
        brute,
        sufficient,
        sufficient_strict,
        a_argmin,
        dichotomy,
        dichotomy_strict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{candidate_points, dimension_b};

    fn min_candidate(p: &SeqProblem<f64>) -> f64 {
        candidate_points(p.big_n, p.k2, p.c, p.b).unwrap().iter().map(|c| c.f_value).fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn grid_matches_candidates_positive_b() {
        let p = SeqProblem::new(5, 1, 1.0f64, 0.0, 0.5).unwrap();
        let r = brute_min(&p, BruteMode::Grid { resolution: 40 }, 1_000_000, 0).unwrap();
        let m = min_candidate(&p);
        assert!(r.min_value >= m - 1e-12);
        assert!(r.min_value - m < 1e-3);
        assert!(is_feasible(&r.argmin, 1, 1.0, 1e-12));
    }

    #[test]
    fn grid_with_negative_dimension_b() {
        let p = SeqProblem::new(6, 2, 1.0, 0.0, dimension_b(8)).unwrap();
        let r = brute_min(&p, BruteMode::Grid { resolution: 40 }, 1_000_000, 0).unwrap();
        assert!(r.min_value >= min_candidate(&p) - 1e-12);
    }

    #[test]
    fn flat_short_circuit() {
        let p = SeqProblem::new(6, 2, 0.0, 0.0, 0.5).unwrap();
        let r = brute_min(&p, BruteMode::Grid { resolution: 40 }, 10, 0).unwrap();
        assert_eq!(r.min_value, 0.0);
        assert!(r.argmin.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn budget_is_enforced() {
        let p = SeqProblem::new(10, 3, 1.0, 0.0, 0.5).unwrap();
        assert!(matches!(
            brute_min(&p, BruteMode::Grid { resolution: 40 }, 10, 0),
            Err(SequenceError::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn random_search_stays_feasible_and_above_candidates() {
        let p = SeqProblem::new(8, 2, 1.0, 0.0, 0.05).unwrap();
        let r = brute_min(&p, BruteMode::Random { samples: 50 }, 1000, 3).unwrap();
        assert!(is_feasible(&r.argmin, 2, 1.0, 1e-9));
        assert!(r.min_value >= min_candidate(&p) - 1e-12);
    }

    #[test]
    fn lattice_contains_uniform_when_divisible() {
        let p = SeqProblem::new(5, 1, 1.0f64, 0.0, 0.5).unwrap();
        let r = brute_min(&p, BruteMode::Grid { resolution: 40 }, 1_000_000, 0).unwrap();
        let top = r.a_profile.last().unwrap();
        assert!((top.0 - 0.2).abs() < 1e-15);
    }
}
