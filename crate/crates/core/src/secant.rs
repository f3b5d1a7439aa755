//! Secants, the secant space, and the differential of a function.
//!
//! The secant `∂_i` sends `f = f₁ + x_i·f₂` (neither part mentioning `x_i`)
//! to `f₂`. It is GF(2)-linear but not a derivation: `∂_1(x1·x1) = 1` while
//! the Leibniz expression `x1 + x1` is `0`. A secant-space element
//! `φ = Σ f_i ∂_i` acts by `φ(g) = Σ f_i ∂_i(g)`, and 1-forms pair with it
//! through `d_i(∂_j) = δ_ij`.

use crate::anf::ZhegalkinPoly;
use crate::cube::check_index;
use crate::error::{Error, Result};
use crate::forms::{IndexSet, KForm};

impl ZhegalkinPoly {
    /// The secant `∂_i`: keep the terms containing `x_i`, with `x_i` removed.
    pub fn partial(&self, i: usize) -> Result<ZhegalkinPoly> {
        check_index(self.arity(), i)?;
        Ok(self.partial_unchecked(i))
    }

    pub(crate) fn partial_unchecked(&self, i: usize) -> ZhegalkinPoly {
        // stripping x_i is injective on the terms that contain it
        ZhegalkinPoly::from_monomials(
            self.arity(),
            self.terms().filter(|m| m.contains(i)).map(|m| m.without(i)),
        )
        .expect("masks stay within arity")
    }

    /// `∂_i` computed as the cofactor sum `f|_{x_i=0} + f|_{x_i=1}`.
    ///
    /// Independent of [`ZhegalkinPoly::partial`]; the two always agree.
    pub fn partial_via_cofactors(&self, i: usize) -> Result<ZhegalkinPoly> {
        self.restrict(i, false)?
            .checked_add(&self.restrict(i, true)?)
    }
}

/// `φ = Σ f_i ∂_i`, an element of the free rank-n module spanned by the secants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SecantElement {
    coeffs: Vec<ZhegalkinPoly>,
}

impl SecantElement {
    /// Takes `(f_1, ..., f_n)`; every coefficient must have arity `n`.
    pub fn new(coeffs: Vec<ZhegalkinPoly>) -> Result<Self> {
        let n = coeffs.len();
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        if let Some(f) = coeffs.iter().find(|f| f.arity() != n) {
            return Err(Error::ArityMismatch {
                left: n,
                right: f.arity(),
            });
        }
        Ok(SecantElement { coeffs })
    }

    pub fn zero(arity: usize) -> Result<Self> {
        let z = ZhegalkinPoly::zero(arity)?;
        Ok(SecantElement {
            coeffs: vec![z; arity],
        })
    }

    /// The basis secant `∂_i`.
    pub fn basis(arity: usize, i: usize) -> Result<Self> {
        let mut phi = Self::zero(arity)?;
        check_index(arity, i)?;
        phi.coeffs[i - 1] = ZhegalkinPoly::one(arity)?;
        Ok(phi)
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient `f_i` (1-based).
    pub fn coeff(&self, i: usize) -> Option<&ZhegalkinPoly> {
        i.checked_sub(1).and_then(|k| self.coeffs.get(k))
    }

    pub fn coeffs(&self) -> &[ZhegalkinPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZhegalkinPoly::is_zero)
    }

    pub fn checked_add(&self, other: &SecantElement) -> Result<SecantElement> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(SecantElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// The module action `g·φ = Σ (g f_i) ∂_i`.
    pub fn scale(&self, g: &ZhegalkinPoly) -> Result<SecantElement> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|f| f.checked_mul(g))
            .collect::<Result<_>>()?;
        Ok(SecantElement { coeffs })
    }

    /// `φ(g) = Σ f_i ∂_i(g)`.
    pub fn apply(&self, g: &ZhegalkinPoly) -> Result<ZhegalkinPoly> {
        if g.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: g.arity(),
            });
        }
        let mut acc = ZhegalkinPoly::zero(g.arity())?;
        for (i, f) in self.coeffs.iter().enumerate() {
            if !f.is_zero() {
                acc = &acc + &(f * &g.partial_unchecked(i + 1));
            }
        }
        Ok(acc)
    }
}

/// `df = Σ ∂_i(f) d_i`.
pub fn differential(f: &ZhegalkinPoly) -> KForm {
    KForm::from_poly(f.clone()).exterior_derivative()
}

/// Pairs a 1-form with a secant: `(Σ g_i d_i)(Σ f_j ∂_j) = Σ g_i f_i`.
pub fn pair(omega: &KForm, phi: &SecantElement) -> Result<ZhegalkinPoly> {
    if omega.arity() != phi.arity() {
        return Err(Error::ArityMismatch {
            left: omega.arity(),
            right: phi.arity(),
        });
    }
    if omega.grade() != 1 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: omega.grade(),
        });
    }
    let mut acc = ZhegalkinPoly::zero(phi.arity())?;
    for (set, g) in omega.terms() {
        let i = set.indices().next().expect("1-form keys have one index");
        acc = &acc + &(g * &phi.coeffs[i - 1]);
    }
    Ok(acc)
}

/// The 1-form `d_i`; equal to `d(x_i)`.
pub fn basis_one_form(arity: usize, i: usize) -> Result<KForm> {
    KForm::monomial(
        ZhegalkinPoly::one(arity)?,
        IndexSet::from_indices(arity, &[i])?,
    )
}

/// Leibniz right-hand side `∂_i(p)·q + p·∂_i(q)`, used to exhibit that `∂_i`
/// is not a derivation.
pub fn leibniz_expression(p: &ZhegalkinPoly, q: &ZhegalkinPoly, i: usize) -> Result<ZhegalkinPoly> {
    let lhs = p.partial(i)?.checked_mul(q)?;
    let rhs = p.checked_mul(&q.partial(i)?)?;
    lhs.checked_add(&rhs)
}
