//! Homogeneous k-forms with polynomial coefficients.
//!
//! A k-form is stored as a map from k-element index sets `I` to nonzero
//! coefficients `f_I`, standing for `Σ f_I d_I` where `d_I` is the wedge of
//! the basis 1-forms `d_i`, `i ∈ I`. Over GF(2) the wedge is commutative, so
//! each basis element has a single key with no sign attached.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::Add;

use rand::Rng;

use crate::anf::{Monomial, ZhegalkinPoly};
use crate::cube::{check_arity, check_index, full_mask};
use crate::error::{Error, Result};

/// A subset of `{1, ..., n}` as a bitmask (bit `i - 1` ↔ index `i`).
///
/// Sets order by size, then lexicographically by their ascending index
/// lists, so `{1,4}` sorts before `{2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub const fn from_mask(mask: u32) -> Self {
        IndexSet(mask)
    }

    /// Builds a set from 1-based indices, validated against `arity`.
    /// Repeated indices are rejected.
    pub fn from_indices(arity: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in indices {
            check_index(arity, i)?;
            let bit = 1 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::IndexOutOfRange { index: i, arity });
            }
            mask |= bit;
        }
        Ok(IndexSet(mask))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 32 && (self.0 >> (i - 1)) & 1 == 1
    }

    pub const fn is_disjoint(self, other: IndexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub const fn with(self, i: usize) -> IndexSet {
        IndexSet(self.0 | (1 << (i - 1)))
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        Monomial::from_mask(self.0).vars()
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the smallest differing index belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All k-element subsets of `{1..n}`, in canonical order.
pub fn index_sets(arity: usize, degree: usize) -> Vec<IndexSet> {
    fn extend(from: usize, arity: usize, left: usize, mask: u32, out: &mut Vec<IndexSet>) {
        if left == 0 {
            out.push(IndexSet(mask));
            return;
        }
        for i in from..=arity + 1 - left {
            extend(i + 1, arity, left - 1, mask | (1 << (i - 1)), out);
        }
    }
    let mut sets = Vec::new();
    if degree <= arity {
        extend(1, arity, degree, 0, &mut sets);
    }
    sets
}

/// Binomial coefficient C(n, k).
pub fn slot_count(arity: usize, degree: usize) -> u64 {
    if degree > arity {
        return 0;
    }
    let k = degree.min(arity - degree) as u64;
    (0..k).fold(1u64, |acc, j| acc * (arity as u64 - j) / (j + 1))
}

/// A homogeneous element of the degree-`k` exterior power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    arity: usize,
    degree: usize,
    coeffs: BTreeMap<IndexSet, ZhegalkinPoly>,
}

impl KForm {
    pub fn zero(arity: usize, degree: usize) -> Result<Self> {
        check_arity(arity)?;
        if degree > arity {
            return Err(Error::DegreeMismatch {
                expected: arity,
                found: degree,
            });
        }
        Ok(KForm {
            arity,
            degree,
            coeffs: BTreeMap::new(),
        })
    }

    /// A polynomial viewed as a 0-form.
    pub fn from_poly(f: ZhegalkinPoly) -> Self {
        let mut w = KForm {
            arity: f.arity(),
            degree: 0,
            coeffs: BTreeMap::new(),
        };
        if !f.is_zero() {
            w.coeffs.insert(IndexSet::EMPTY, f);
        }
        w
    }

    /// The single-term form `f · d_I`.
    pub fn monomial(f: ZhegalkinPoly, set: IndexSet) -> Result<Self> {
        let mut w = Self::zero(f.arity(), set.len())?;
        if set.mask() & !full_mask(w.arity) != 0 {
            return Err(Error::IndexOutOfRange {
                index: (32 - set.mask().leading_zeros()) as usize,
                arity: w.arity,
            });
        }
        if !f.is_zero() {
            w.coeffs.insert(set, f);
        }
        Ok(w)
    }

    /// The basis element `d_{i1} ∧ ... ∧ d_{ik}` with coefficient 1.
    pub fn basis(arity: usize, indices: &[usize]) -> Result<Self> {
        let set = IndexSet::from_indices(arity, indices)?;
        Self::monomial(ZhegalkinPoly::one(arity)?, set)
    }

    /// Sums `(I, f_I)` pairs of a common degree; repeated keys add.
    pub fn from_terms<I>(arity: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IndexSet, ZhegalkinPoly)>,
    {
        let mut w = Self::zero(arity, degree)?;
        for (set, f) in terms {
            if f.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: f.arity(),
                });
            }
            if set.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: set.len(),
                });
            }
            if set.mask() & !full_mask(arity) != 0 {
                return Err(Error::IndexOutOfRange {
                    index: (32 - set.mask().leading_zeros()) as usize,
                    arity,
                });
            }
            w.accumulate(set, &f);
        }
        Ok(w)
    }

    /// Random form with independently random coefficients in every slot.
    pub fn random<R: Rng + ?Sized>(arity: usize, degree: usize, rng: &mut R) -> Result<Self> {
        let mut w = Self::zero(arity, degree)?;
        for set in index_sets(arity, degree) {
            let f = ZhegalkinPoly::random(arity, rng)?;
            if !f.is_zero() {
                w.coeffs.insert(set, f);
            }
        }
        Ok(w)
    }

    fn accumulate(&mut self, set: IndexSet, f: &ZhegalkinPoly) {
        if f.is_zero() {
            return;
        }
        match self.coeffs.remove(&set) {
            Some(g) => {
                let sum = &g + f;
                if !sum.is_zero() {
                    self.coeffs.insert(set, sum);
                }
            }
            None => {
                self.coeffs.insert(set, f.clone());
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The degree `k` of the form.
    pub fn grade(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero coefficient slots.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, set: IndexSet) -> Option<&ZhegalkinPoly> {
        self.coeffs.get(&set)
    }

    /// Coefficient at `set`, zero if absent.
    pub fn coeff_of(&self, set: IndexSet) -> ZhegalkinPoly {
        self.coeffs
            .get(&set)
            .cloned()
            .unwrap_or_else(|| ZhegalkinPoly::zero(self.arity).expect("arity validated"))
    }

    /// Nonzero terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, &ZhegalkinPoly)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    /// Splits the form into its single-term summands.
    pub fn monomial_terms(&self) -> impl Iterator<Item = KForm> + '_ {
        self.coeffs.iter().map(|(&set, f)| KForm {
            arity: self.arity,
            degree: self.degree,
            coeffs: BTreeMap::from([(set, f.clone())]),
        })
    }

    /// Degree-0 forms as polynomials.
    pub fn as_poly(&self) -> Option<ZhegalkinPoly> {
        (self.degree == 0).then(|| self.coeff_of(IndexSet::EMPTY))
    }

    pub fn checked_add(&self, other: &KForm) -> Result<KForm> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut sum = self.clone();
        for (&set, f) in &other.coeffs {
            sum.accumulate(set, f);
        }
        Ok(sum)
    }

    /// Multiplies every coefficient by `g`.
    pub fn scale(&self, g: &ZhegalkinPoly) -> Result<KForm> {
        if g.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: g.arity(),
            });
        }
        let mut w = KForm::zero(self.arity, self.degree)?;
        for (&set, f) in &self.coeffs {
            w.accumulate(set, &(f * g));
        }
        Ok(w)
    }

    /// The wedge product. Terms whose index sets overlap vanish; the rest
    /// multiply coefficients and union their index sets.
    ///
    /// When the degrees sum past `n` every term vanishes and the result is
    /// the zero form of degree `n`.
    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let degree = (self.degree + other.degree).min(self.arity);
        let mut w = KForm::zero(self.arity, degree)?;
        for (&a, f) in &self.coeffs {
            for (&b, g) in &other.coeffs {
                if a.is_disjoint(b) {
                    w.accumulate(a.union(b), &(f * g));
                }
            }
        }
        Ok(w)
    }

    /// `dω = Σ_I Σ_{i ∉ I} ∂_i(f_I) d_{{i} ∪ I}`.
    ///
    /// On an n-form there is no index left to adjoin; the result is the zero
    /// form, reported at degree `n`.
    pub fn exterior_derivative(&self) -> KForm {
        let degree = (self.degree + 1).min(self.arity);
        let mut w = KForm::zero(self.arity, degree).expect("arity validated");
        for (&set, f) in &self.coeffs {
            for i in 1..=self.arity {
                if !set.contains(i) {
                    w.accumulate(set.with(i), &f.partial_unchecked(i));
                }
            }
        }
        w
    }
}

impl Add for &KForm {
    type Output = KForm;

    /// Panics on arity or degree mismatch; see [`KForm::checked_add`].
    fn add(self, rhs: Self) -> KForm {
        self.checked_add(rhs).expect("mismatched forms in sum")
    }
}
