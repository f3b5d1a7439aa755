//! Bit-packed truth tables and the binary Möbius transform.
//!
//! Entry `k` of a table is `f(v_k)`, stored as bit `k % 64` of word `k / 64`.
//! The Möbius butterfly maps a table to its ANF coefficient vector (bit `m`
//! set iff the monomial with variable mask `m` is present) and back; over
//! GF(2) it is its own inverse.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::check_arity;
use crate::error::{Error, Result};

/// Largest arity for dense tables (16 Mi entries, 2 MiB).
pub const MAX_TABLE_ARITY: usize = 24;

/// Positions whose index has bit `i` set, for `i < 6`.
const LANE_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

pub(crate) fn check_table_arity(arity: usize) -> Result<()> {
    check_arity(arity)?;
    if arity > MAX_TABLE_ARITY {
        return Err(Error::ArityTooLarge {
            arity,
            max: MAX_TABLE_ARITY,
        });
    }
    Ok(())
}

fn word_count(arity: usize) -> usize {
    if arity <= 6 {
        1
    } else {
        1 << (arity - 6)
    }
}

fn tail_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

/// In-place binary Möbius transform over `2^arity` packed bits.
///
/// For every variable `i` and every index `k` with bit `i` set,
/// `bits[k] ^= bits[k ^ (1 << i)]`. Applying it twice is the identity.
pub fn moebius_transform(words: &mut [u64], arity: usize) {
    assert_eq!(words.len(), word_count(arity), "table length mismatch");
    let lane_levels = arity.min(6);
    for w in words.iter_mut() {
        let mut x = *w;
        for (level, &mask) in LANE_MASKS.iter().enumerate().take(lane_levels) {
            x ^= (x << (1 << level)) & mask;
        }
        *w = x;
    }
    for level in 6..arity {
        let half = 1usize << (level - 6);
        for block in words.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// Truth table of an `n`-variable Boolean function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    words: Vec<u64>,
}

impl TruthTable {
    /// The all-zero table.
    pub fn zeros(arity: usize) -> Result<Self> {
        check_table_arity(arity)?;
        Ok(TruthTable {
            arity,
            words: vec![0; word_count(arity)],
        })
    }

    /// Entry `k` is `bits[k]`; the slice must have exactly `2^arity` entries.
    pub fn from_bits(arity: usize, bits: &[bool]) -> Result<Self> {
        let mut t = Self::zeros(arity)?;
        if bits.len() != t.len() {
            return Err(Error::TableLength {
                expected: t.len(),
                found: bits.len(),
            });
        }
        for (k, &b) in bits.iter().enumerate() {
            t.set(k, b);
        }
        Ok(t)
    }

    /// Takes packed words directly. Bits beyond entry `2^arity - 1` must be clear.
    pub fn from_words(arity: usize, words: Vec<u64>) -> Result<Self> {
        check_table_arity(arity)?;
        let expected = word_count(arity);
        if words.len() != expected || words[0] & !tail_mask(arity) != 0 {
            return Err(Error::TableLength {
                expected: 1 << arity,
                found: words.len() * 64,
            });
        }
        Ok(TruthTable { arity, words })
    }

    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut t = Self::zeros(arity)?;
        for k in 0..t.len() {
            t.set(k, f(k));
        }
        Ok(t)
    }

    /// Uniformly random table.
    pub fn random<R: Rng + ?Sized>(arity: usize, rng: &mut R) -> Result<Self> {
        let mut t = Self::zeros(arity)?;
        for w in t.words.iter_mut() {
            *w = rng.gen();
        }
        t.words[0] &= tail_mask(arity);
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of entries, `2^arity`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, k: usize) -> bool {
        assert!(k < self.len(), "entry {k} out of range");
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    pub fn set(&mut self, k: usize, value: bool) {
        assert!(k < self.len(), "entry {k} out of range");
        let bit = 1u64 << (k % 64);
        if value {
            self.words[k / 64] |= bit;
        } else {
            self.words[k / 64] &= !bit;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set entries, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + tz)
            })
        })
    }

    /// Applies the Möbius butterfly in place.
    pub fn moebius(&mut self) {
        moebius_transform(&mut self.words, self.arity);
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len()).map(|k| self.get(k)).collect()
    }
}

/// Timing summary for repeated forward+inverse transforms.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub arity: usize,
    pub reps: usize,
    pub min: Duration,
    pub median: Duration,
    /// Table entries pushed through one forward+inverse pair per second, at the median.
    pub entries_per_sec: f64,
    /// Every repetition reproduced its input table.
    pub verified: bool,
}

/// Runs `reps` forward+inverse transforms on random tables of the given
/// arity, timing each pair and checking the round trip.
pub fn bench_transform(arity: usize, reps: usize, seed: u64) -> Result<BenchReport> {
    check_table_arity(arity)?;
    let reps = reps.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut times = Vec::with_capacity(reps);
    let mut verified = true;
    for _ in 0..reps {
        let original = TruthTable::random(arity, &mut rng)?;
        let mut t = original.clone();
        let start = Instant::now();
        t.moebius();
        t.moebius();
        times.push(start.elapsed());
        verified &= t == original;
    }
    times.sort();
    let median = times[times.len() / 2];
    let secs = median.as_secs_f64().max(1e-9);
    Ok(BenchReport {
        arity,
        reps,
        min: times[0],
        median,
        entries_per_sec: (1u64 << arity) as f64 / secs,
        verified,
    })
}
