//! Zhegalkin polynomials (algebraic normal form) over GF(2).
//!
//! A polynomial is an arity tag plus a set of square-free monomials. Adding
//! is symmetric difference of term sets, multiplying unions variable masks
//! and cancels duplicate products in pairs. Because every Boolean function
//! has exactly one such term set, two polynomials of equal arity are the
//! same function iff they compare equal.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::ops::{Add, Mul};

use rand::Rng;

use crate::cube::{check_arity, check_index, full_mask, Vertex};
use crate::error::{Error, Result};
use crate::table::{check_table_arity, TruthTable};

/// A square-free product of variables; bit `i - 1` marks `x_i`.
///
/// The empty mask is the constant monomial `1`. Monomials order by degree,
/// then by mask value, which is the canonical print order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_mask(mask: u32) -> Self {
        Monomial(mask)
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        assert!((1..=32).contains(&i), "variable index {i} out of range");
        Monomial(1 << (i - 1))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 32 && (self.0 >> (i - 1)) & 1 == 1
    }

    /// `x_i * x_i = x_i`, so the product is the union.
    pub const fn product(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub const fn without(self, i: usize) -> Monomial {
        Monomial(self.0 & !(1 << (i - 1)))
    }

    /// Variable indices in ascending order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(tz + 1)
        })
    }

    /// True on vertices where every variable of the monomial is 1.
    pub const fn evaluate(self, vertex_bits: u32) -> bool {
        self.0 & !vertex_bits == 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the Zhegalkin algebra in `arity` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZhegalkinPoly {
    arity: usize,
    terms: BTreeSet<Monomial>,
}

fn toggle(set: &mut BTreeSet<Monomial>, m: Monomial) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

fn check_same_arity(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::ArityMismatch { left, right })
    } else {
        Ok(())
    }
}

impl ZhegalkinPoly {
    pub fn zero(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        Ok(ZhegalkinPoly {
            arity,
            terms: BTreeSet::new(),
        })
    }

    pub fn one(arity: usize) -> Result<Self> {
        Self::constant(arity, true)
    }

    /// The image of a field element under the constant embedding.
    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        let mut p = Self::zero(arity)?;
        if value {
            p.terms.insert(Monomial::ONE);
        }
        Ok(p)
    }

    /// The generator `x_i`.
    pub fn variable(arity: usize, i: usize) -> Result<Self> {
        check_arity(arity)?;
        check_index(arity, i)?;
        Ok(ZhegalkinPoly {
            arity,
            terms: BTreeSet::from([Monomial::var(i)]),
        })
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I>(arity: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut p = Self::zero(arity)?;
        let allowed = full_mask(arity);
        for m in monomials {
            if m.mask() & !allowed != 0 {
                return Err(Error::IndexOutOfRange {
                    index: (32 - m.mask().leading_zeros()) as usize,
                    arity,
                });
            }
            toggle(&mut p.terms, m);
        }
        Ok(p)
    }

    /// Polynomial whose monomials are the set bits of `coeffs` (bit `m` ↦ mask `m`).
    /// Only meaningful for `arity <= 6`.
    pub fn from_coefficient_bits(arity: usize, coeffs: u64) -> Result<Self> {
        check_arity(arity)?;
        assert!(arity <= 6, "coefficient word holds at most 6 variables");
        let width = 1u32 << arity;
        Self::from_monomials(
            arity,
            (0..width)
                .filter(|&m| (coeffs >> m) & 1 == 1)
                .map(Monomial::from_mask),
        )
    }

    /// Random polynomial: each of the `2^n` monomials independently for
    /// `n <= 8`, otherwise up to 16 random monomials.
    pub fn random<R: Rng + ?Sized>(arity: usize, rng: &mut R) -> Result<Self> {
        let mut p = Self::zero(arity)?;
        let allowed = full_mask(arity);
        if arity <= 8 {
            for m in 0..(1u32 << arity) {
                if rng.gen::<bool>() {
                    p.terms.insert(Monomial(m));
                }
            }
        } else {
            let count = rng.gen_range(0..=16);
            for _ in 0..count {
                toggle(&mut p.terms, Monomial(rng.gen::<u32>() & allowed));
            }
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Terms in canonical order (degree, then mask).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = Monomial> + ExactSizeIterator + '_ {
        self.terms.iter().copied()
    }

    /// Number of terms; emptiness is [`is_zero`](Self::is_zero).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&Monomial::ONE)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.contains(&m)
    }

    /// Whether any term involves `x_i`.
    pub fn mentions(&self, i: usize) -> bool {
        self.terms.iter().any(|m| m.contains(i))
    }

    /// Largest monomial degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().next_back().map(|m| m.degree())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same_arity(self.arity, other.arity)?;
        Ok(ZhegalkinPoly {
            arity: self.arity,
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .copied()
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same_arity(self.arity, other.arity)?;
        let mut terms = BTreeSet::new();
        for &a in &self.terms {
            for &b in &other.terms {
                toggle(&mut terms, a.product(b));
            }
        }
        Ok(ZhegalkinPoly {
            arity: self.arity,
            terms,
        })
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: Monomial) -> Result<Self> {
        Self::from_monomials(self.arity, self.terms.iter().map(|t| t.product(m)))
    }

    pub fn evaluate(&self, v: Vertex) -> Result<bool> {
        if v.arity() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                found: v.arity(),
            });
        }
        Ok(self.eval_bits(v.bits()))
    }

    /// Evaluation at the vertex whose bit `i - 1` is `x_i`; no arity check.
    pub fn eval_bits(&self, vertex_bits: u32) -> bool {
        self.terms
            .iter()
            .filter(|m| m.evaluate(vertex_bits))
            .count()
            % 2
            == 1
    }

    /// The cofactor `f|_{x_i = value}`, kept at the same arity.
    pub fn restrict(&self, i: usize, value: bool) -> Result<Self> {
        check_index(self.arity, i)?;
        let mut terms = BTreeSet::new();
        for &m in &self.terms {
            if !m.contains(i) {
                toggle(&mut terms, m);
            } else if value {
                toggle(&mut terms, m.without(i));
            }
        }
        Ok(ZhegalkinPoly {
            arity: self.arity,
            terms,
        })
    }

    /// Unique ANF of the tabulated function, via the Möbius transform.
    pub fn from_truth_table(table: &TruthTable) -> Result<Self> {
        let mut coeffs = table.clone();
        coeffs.moebius();
        Ok(ZhegalkinPoly {
            arity: table.arity(),
            terms: coeffs.ones().map(|k| Monomial(k as u32)).collect(),
        })
    }

    pub fn to_truth_table(&self) -> Result<TruthTable> {
        check_table_arity(self.arity)?;
        let mut t = TruthTable::zeros(self.arity)?;
        for m in &self.terms {
            t.set(m.mask() as usize, true);
        }
        t.moebius();
        Ok(t)
    }
}

impl Add for &ZhegalkinPoly {
    type Output = ZhegalkinPoly;

    /// Panics on arity mismatch; use [`ZhegalkinPoly::checked_add`] otherwise.
    fn add(self, rhs: Self) -> ZhegalkinPoly {
        self.checked_add(rhs)
            .expect("arity mismatch in polynomial sum")
    }
}

impl Mul for &ZhegalkinPoly {
    type Output = ZhegalkinPoly;

    /// Panics on arity mismatch; use [`ZhegalkinPoly::checked_mul`] otherwise.
    fn mul(self, rhs: Self) -> ZhegalkinPoly {
        self.checked_mul(rhs)
            .expect("arity mismatch in polynomial product")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::cube_vertices;

    fn var(n: usize, i: usize) -> ZhegalkinPoly {
        ZhegalkinPoly::variable(n, i).unwrap()
    }

    fn one(n: usize) -> ZhegalkinPoly {
        ZhegalkinPoly::one(n).unwrap()
    }

    fn all_polys(n: usize) -> Vec<ZhegalkinPoly> {
        (0u64..(1 << (1 << n)))
            .map(|c| ZhegalkinPoly::from_coefficient_bits(n, c).unwrap())
            .collect()
    }

    #[test]
    fn constants() {
        assert!(ZhegalkinPoly::constant(2, false).unwrap().is_zero());
        assert!(ZhegalkinPoly::constant(2, true).unwrap().is_one());
        let p = ZhegalkinPoly::constant(5, true).unwrap();
        assert_eq!(p.arity(), 5);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![Monomial::ONE]);
        assert_eq!(ZhegalkinPoly::constant(0, true), Err(Error::ZeroArity));
    }

    #[test]
    fn variables() {
        assert_eq!(var(3, 1).terms().next(), Some(Monomial::var(1)));
        assert_eq!(var(3, 3).terms().next(), Some(Monomial::from_mask(0b100)));
        assert_eq!(
            ZhegalkinPoly::variable(1, 2),
            Err(Error::IndexOutOfRange { index: 2, arity: 1 })
        );
    }

    #[test]
    fn addition_examples() {
        let x1 = var(2, 1);
        let x2 = var(2, 2);
        assert!((&x1 + &x1).is_zero());
        let lhs = &x1 + &x2;
        let rhs = &x2 + &one(2);
        assert_eq!(&lhs + &rhs, &x1 + &one(2));
        assert_eq!(
            x1.checked_add(&var(3, 1)),
            Err(Error::ArityMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn multiplication_examples() {
        let x1 = var(2, 1);
        let x2 = var(2, 2);
        assert_eq!(&x1 * &x1, x1);
        assert!((&x1 * &(&one(2) + &x1)).is_zero());
        let s = &x1 + &x2;
        assert_eq!(&s * &s, s);
        assert!(x1.checked_mul(&var(1, 1)).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let x1 = var(2, 1);
        let x2 = var(2, 2);
        let and = &x1 * &x2;
        assert!(and.evaluate(Vertex::new(2, 0b11).unwrap()).unwrap());
        let or = &(&x1 + &x2) + &and;
        assert!(or
            .evaluate(Vertex::from_coords(&[true, false]).unwrap())
            .unwrap());
        for v in cube_vertices(2).unwrap() {
            assert!(one(2).evaluate(v).unwrap());
        }
        assert_eq!(
            and.evaluate(Vertex::new(3, 0).unwrap()),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn restriction_examples() {
        let p = &(&var(3, 1) * &var(3, 2)) + &var(3, 3);
        assert_eq!(p.restrict(1, false).unwrap(), var(3, 3));
        assert_eq!(p.restrict(1, true).unwrap(), &var(3, 2) + &var(3, 3));
        for b in [false, true] {
            let once = p.restrict(2, b).unwrap();
            assert_eq!(once.restrict(2, b).unwrap(), once);
        }
        assert!(p.restrict(4, true).is_err());
    }

    /// Restriction checked pointwise against the forced-coordinate evaluation.
    #[test]
    fn restriction_matches_forced_evaluation() {
        for n in 1..=3 {
            for p in all_polys(n) {
                for i in 1..=n {
                    for b in [false, true] {
                        let r = p.restrict(i, b).unwrap();
                        assert!(!r.mentions(i));
                        for v in cube_vertices(n).unwrap() {
                            let forced = v.with_coord(i, b).unwrap();
                            assert_eq!(r.evaluate(v).unwrap(), p.evaluate(forced).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn truth_table_examples() {
        let and = TruthTable::from_bits(2, &[false, false, false, true]).unwrap();
        assert_eq!(
            ZhegalkinPoly::from_truth_table(&and).unwrap(),
            &var(2, 1) * &var(2, 2)
        );
        let xor = TruthTable::from_bits(2, &[false, true, true, false]).unwrap();
        assert_eq!(
            ZhegalkinPoly::from_truth_table(&xor).unwrap(),
            &var(2, 1) + &var(2, 2)
        );
        let maj = TruthTable::from_bits(3, &[false, false, false, true, false, true, true, true])
            .unwrap();
        let (a, b, c) = (var(3, 1), var(3, 2), var(3, 3));
        let expected = &(&(&a * &b) + &(&a * &c)) + &(&b * &c);
        assert_eq!(ZhegalkinPoly::from_truth_table(&maj).unwrap(), expected);

        assert_eq!((&var(2, 1) * &var(2, 2)).to_truth_table().unwrap(), and);
        let zero = ZhegalkinPoly::zero(3).unwrap().to_truth_table().unwrap();
        assert_eq!(zero.count_ones(), 0);
        assert_eq!(zero.len(), 8);
    }

    #[test]
    fn truth_table_matches_pointwise_evaluation() {
        for n in 1..=3 {
            for p in all_polys(n) {
                let t = p.to_truth_table().unwrap();
                for v in cube_vertices(n).unwrap() {
                    assert_eq!(t.get(v.bits() as usize), p.evaluate(v).unwrap());
                }
            }
        }
    }

    #[test]
    fn dense_tables_capped() {
        let p = ZhegalkinPoly::variable(25, 25).unwrap();
        assert!(matches!(
            p.to_truth_table(),
            Err(Error::ArityTooLarge { .. })
        ));
    }

    #[test]
    fn degrees() {
        assert_eq!(one(3).degree(), Some(0));
        let p = &(&var(3, 1) * &var(3, 2)) + &var(3, 3);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(ZhegalkinPoly::zero(3).unwrap().degree(), None);
    }

    #[test]
    fn canonical_order() {
        let p = ZhegalkinPoly::from_monomials(
            3,
            [0b011, 0b100, 0, 0b001, 0b110].map(Monomial::from_mask),
        )
        .unwrap();
        let masks: Vec<u32> = p.terms().map(Monomial::mask).collect();
        assert_eq!(masks, vec![0, 0b001, 0b100, 0b011, 0b110]);
    }

    #[test]
    fn duplicate_monomials_cancel() {
        let p = ZhegalkinPoly::from_monomials(2, [Monomial::var(1); 2]).unwrap();
        assert!(p.is_zero());
        assert!(ZhegalkinPoly::from_monomials(2, [Monomial::var(3)]).is_err());
    }

    #[test]
    fn ring_laws_exhaustive() {
        for n in 1..=2 {
            let ps = all_polys(n);
            for a in &ps {
                assert_eq!(&(a * a), a);
                assert!((a + a).is_zero());
                for b in &ps {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in &ps {
                        assert_eq!(&(a + b) + c, a + &(b + c));
                        assert_eq!(&(a * b) * c, a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
            }
        }
    }

    /// At n = 3 there are 256^3 triples; pairs are exhaustive and the third
    /// operand runs over a fixed spread of 16 polynomials.
    #[test]
    fn ring_laws_n3() {
        let ps = all_polys(3);
        let thirds: Vec<_> = ps.iter().step_by(17).collect();
        for a in &ps {
            assert_eq!(&(a * a), a);
            assert!((a + a).is_zero());
            for b in &ps {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for &c in &thirds {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }

    #[test]
    fn evaluation_is_a_ring_morphism_exhaustive() {
        for n in 1..=3 {
            let ps = all_polys(n);
            for a in &ps {
                for b in &ps {
                    let (s, p) = (a + b, a * b);
                    for v in 0..(1u32 << n) {
                        assert_eq!(s.eval_bits(v), a.eval_bits(v) ^ b.eval_bits(v));
                        assert_eq!(p.eval_bits(v), a.eval_bits(v) & b.eval_bits(v));
                    }
                }
            }
        }
    }
}
