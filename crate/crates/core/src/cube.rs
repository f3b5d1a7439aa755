//! The Hamming cube: vertices and the `(i, j)` faces.
//!
//! Vertex `k` of the `n`-cube carries `x_j = (k >> (j - 1)) & 1`, so variable
//! `x1` is the least significant bit of the vertex index. Truth tables use
//! the same indexing.

use std::fmt;

use crate::error::{Error, Result};

/// Largest arity accepted by the symbolic side (monomials are `u32` masks).
pub const MAX_ARITY: usize = 32;

pub(crate) fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 {
        Err(Error::ZeroArity)
    } else if arity > MAX_ARITY {
        Err(Error::ArityTooLarge {
            arity,
            max: MAX_ARITY,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_index(arity: usize, index: usize) -> Result<()> {
    if index == 0 || index > arity {
        Err(Error::IndexOutOfRange { index, arity })
    } else {
        Ok(())
    }
}

/// Mask with the low `arity` bits set.
pub(crate) fn full_mask(arity: usize) -> u32 {
    if arity >= 32 {
        u32::MAX
    } else {
        (1u32 << arity) - 1
    }
}

/// A point of `{0,1}^n`; bit `i - 1` of the mask is the value of `x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    arity: usize,
    bits: u32,
}

impl Vertex {
    pub fn new(arity: usize, bits: u32) -> Result<Self> {
        check_arity(arity)?;
        if bits & !full_mask(arity) != 0 {
            return Err(Error::IndexOutOfRange {
                index: (32 - bits.leading_zeros()) as usize,
                arity,
            });
        }
        Ok(Vertex { arity, bits })
    }

    /// Builds a vertex from coordinates listed as `x1, x2, ...`.
    pub fn from_coords(coords: &[bool]) -> Result<Self> {
        check_arity(coords.len())?;
        let bits = coords
            .iter()
            .enumerate()
            .fold(0u32, |acc, (j, &b)| acc | ((b as u32) << j));
        Ok(Vertex {
            arity: coords.len(),
            bits,
        })
    }

    pub fn all_ones(arity: usize) -> Result<Self> {
        check_arity(arity)?;
        Ok(Vertex {
            arity,
            bits: full_mask(arity),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Value of `x_i` (1-based).
    pub fn coord(&self, i: usize) -> bool {
        i >= 1 && i <= self.arity && (self.bits >> (i - 1)) & 1 == 1
    }

    /// The same vertex with coordinate `i` forced to `value`.
    pub fn with_coord(&self, i: usize, value: bool) -> Result<Self> {
        check_index(self.arity, i)?;
        let bit = 1u32 << (i - 1);
        let bits = if value {
            self.bits | bit
        } else {
            self.bits & !bit
        };
        Ok(Vertex { bits, ..*self })
    }
}

impl fmt::Display for Vertex {
    /// Coordinates `x1 x2 ... xn`, left to right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.arity {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// All `2^n` vertices in ascending index order.
pub fn cube_vertices(arity: usize) -> Result<impl Iterator<Item = Vertex>> {
    check_arity(arity)?;
    let count = 1u64 << arity;
    Ok((0..count).map(move |k| Vertex {
        arity,
        bits: k as u32,
    }))
}

/// The face `{v : v_axis = level}` of the cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub axis: usize,
    pub level: bool,
}

impl Face {
    pub fn new(axis: usize, level: bool) -> Self {
        Face { axis, level }
    }

    pub(crate) fn check(&self, arity: usize) -> Result<()> {
        check_index(arity, self.axis)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.axis, self.level as u8)
    }
}

/// The `2n` faces of the cube, ordered by axis then level.
pub fn all_faces(arity: usize) -> impl Iterator<Item = Face> {
    (1..=arity).flat_map(|axis| [false, true].map(|level| Face { axis, level }))
}

/// The `2^(n-1)` vertices lying on `face`, ascending by index.
pub fn face_vertices(arity: usize, face: Face) -> Result<Vec<Vertex>> {
    check_arity(arity)?;
    face.check(arity)?;
    let bit = 1u32 << (face.axis - 1);
    Ok(cube_vertices(arity)?
        .filter(|v| (v.bits & bit != 0) == face.level)
        .collect())
}
