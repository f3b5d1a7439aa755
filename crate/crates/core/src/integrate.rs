//! Integration of forms over the Hamming cube and its faces.
//!
//! Integrals take values in GF(2). An n-form `f d_1∧…∧d_n` integrates over
//! the cube to `f(1, …, 1)`. A single-term (n−1)-form missing `d_k`
//! integrates to zero on faces of any other axis, and on the face
//! `x_k = j` to `f` evaluated with `x_k = j` and every other coordinate 1.
//! The boundary integral sums over all `2n` faces, and
//! [`stokes_check`] compares it with the cube integral of `dω`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::anf::{Monomial, ZhegalkinPoly};
use crate::cube::{all_faces, check_arity, full_mask, Face};
use crate::error::{Error, Result};
use crate::forms::{index_sets, IndexSet, KForm};

/// Where a single-term form of degree n or n−1 is integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    WholeCube,
    /// The two faces `x_k = 0` and `x_k = 1`.
    FacePair(usize),
}

fn missing_index(arity: usize, set: IndexSet) -> usize {
    (!set.mask() & full_mask(arity)).trailing_zeros() as usize + 1
}

fn require_degree(w: &KForm, expected: usize) -> Result<()> {
    if w.grade() != expected {
        Err(Error::DegreeMismatch {
            expected,
            found: w.grade(),
        })
    } else {
        Ok(())
    }
}

fn single_term(w: &KForm) -> Result<(IndexSet, &ZhegalkinPoly)> {
    let mut terms = w.terms();
    match (terms.next(), terms.next()) {
        (Some(t), None) => Ok(t),
        _ => Err(Error::NotMonomial { terms: w.len() }),
    }
}

/// Support of a single-term form of degree n or n−1.
pub fn support(w: &KForm) -> Result<Support> {
    let n = w.arity();
    let k = w.grade();
    if k != n && k + 1 != n {
        return Err(Error::UnsupportedDegree {
            degree: k,
            arity: n,
        });
    }
    let (set, _) = single_term(w)?;
    Ok(if k == n {
        Support::WholeCube
    } else {
        Support::FacePair(missing_index(n, set))
    })
}

/// `∫_{H^n} f d_1∧…∧d_n = f(1, …, 1)`.
pub fn integrate_top(w: &KForm) -> Result<bool> {
    let n = w.arity();
    require_degree(w, n)?;
    Ok(w.terms()
        .next()
        .is_some_and(|(_, f)| f.eval_bits(full_mask(n))))
}

/// Integral of an (n−1)-form over one face, term by term.
pub fn integrate_face(w: &KForm, face: Face) -> Result<bool> {
    let n = w.arity();
    require_degree(w, n - 1)?;
    face.check(n)?;
    let mut acc = false;
    for (set, g) in w.terms() {
        if missing_index(n, set) == face.axis {
            let bit = 1u32 << (face.axis - 1);
            let at = if face.level {
                full_mask(n)
            } else {
                full_mask(n) & !bit
            };
            acc ^= g.eval_bits(at);
        }
    }
    Ok(acc)
}

/// `∫_{∂H^n} ω`: the sum of the face integrals over all `2n` faces.
pub fn integrate_boundary(w: &KForm) -> Result<bool> {
    let n = w.arity();
    require_degree(w, n - 1)?;
    all_faces(n).try_fold(false, |acc, face| Ok(acc ^ integrate_face(w, face)?))
}

/// Integral of `f d_I` as the whole-cube sum `Σ_{v ∈ H^n} (x_I · f)(v)`.
///
/// A monomial sums to 1 over the cube exactly when it is the full product
/// `x_1⋯x_n`, so the sum is read off that coefficient of `x_I · f`.
pub fn integrate_monomial_form(w: &KForm) -> Result<bool> {
    let (set, f) = match w.len() {
        0 => return Ok(false),
        _ => single_term(w)?,
    };
    let g = f.mul_monomial(Monomial::from_mask(set.mask()))?;
    Ok(g.contains(Monomial::from_mask(full_mask(w.arity()))))
}

/// Both sides of `∫_{H^n} dω = ∫_{∂H^n} ω` for one (n−1)-form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StokesReport {
    pub lhs: bool,
    pub rhs: bool,
    pub pass: bool,
    pub form: KForm,
}

impl fmt::Display for StokesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lhs={} rhs={} pass={} form={}",
            self.lhs as u8, self.rhs as u8, self.pass, self.form
        )
    }
}

pub fn stokes_check(w: &KForm) -> Result<StokesReport> {
    let n = w.arity();
    require_degree(w, n - 1)?;
    let lhs = integrate_top(&w.exterior_derivative())?;
    let rhs = integrate_boundary(w)?;
    Ok(StokesReport {
        lhs,
        rhs,
        pass: lhs == rhs,
        form: w.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every (n−1)-form; only for n ≤ 2.
    Exhaustive,
    /// `count` forms drawn from a stream fixed by `seed`.
    Random { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub arity: usize,
    pub checked: u64,
    pub failed: u64,
    /// Lowest failing sample index and its form.
    pub first_counterexample: Option<(u64, KForm)>,
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "checked={} failed={}", self.checked, self.failed)?;
        if let Some((index, form)) = &self.first_counterexample {
            write!(f, "\ncounterexample index={index} form={form}")?;
        }
        Ok(())
    }
}

/// The `index`-th (n−1)-form in enumeration order: slot `s` (in canonical
/// key order) takes coefficient bits `s·2^n .. (s+1)·2^n` of `index`.
fn enumerated_form(arity: usize, index: u64) -> KForm {
    let width = 1u32 << arity;
    let slot_mask = (1u64 << width) - 1;
    let terms = index_sets(arity, arity - 1)
        .into_iter()
        .enumerate()
        .map(|(s, set)| {
            let bits = (index >> (s as u32 * width)) & slot_mask;
            (
                set,
                ZhegalkinPoly::from_coefficient_bits(arity, bits).expect("arity <= 2"),
            )
        });
    KForm::from_terms(arity, arity - 1, terms).expect("well-formed slots")
}

/// Sample `index` of the random stream for `seed`. Each sample has its own
/// ChaCha stream, so the set of forms does not depend on evaluation order.
pub fn sampled_form(arity: usize, seed: u64, index: u64) -> Result<KForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    KForm::random(arity, arity - 1, &mut rng)
}

/// Runs [`stokes_check`] over a family of (n−1)-forms.
pub fn stokes_sweep(arity: usize, mode: SweepMode) -> Result<SweepSummary> {
    check_arity(arity)?;
    let (count, make): (u64, Box<dyn Fn(u64) -> Result<KForm> + Sync>) = match mode {
        SweepMode::Exhaustive => {
            if arity > 2 {
                return Err(Error::ExhaustiveTooLarge { arity });
            }
            let bits = arity as u32 * (1u32 << arity);
            (
                1u64 << bits,
                Box::new(move |i| Ok(enumerated_form(arity, i))),
            )
        }
        SweepMode::Random { count, seed } => {
            (count, Box::new(move |i| sampled_form(arity, seed, i)))
        }
    };

    let (failed, first) = (0..count)
        .into_par_iter()
        .map(|i| -> Result<(u64, Option<u64>)> {
            let report = stokes_check(&make(i)?)?;
            Ok(if report.pass { (0, None) } else { (1, Some(i)) })
        })
        .try_reduce(
            || (0, None),
            |a, b| {
                let first = match (a.1, b.1) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                };
                Ok((a.0 + b.0, first))
            },
        )?;

    let first_counterexample = match first {
        Some(i) => Some((i, make(i)?)),
        None => None,
    };
    Ok(SweepSummary {
        arity,
        checked: count,
        failed,
        first_counterexample,
    })
}
