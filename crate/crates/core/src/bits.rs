//! 128-bit vertex masks used by the exhaustive searches.

use crate::error::{Error, Result};

pub type Mask = u128;

pub const MAX_MASK_VERTICES: usize = 128;

pub fn ensure_fits(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_MASK_VERTICES {
        return Err(Error::TooLarge {
            what,
            n,
            max: MAX_MASK_VERTICES,
        });
    }
    Ok(())
}

#[inline]
pub fn bit(v: usize) -> Mask {
    1u128 << v
}

pub fn from_slice(vs: &[usize]) -> Mask {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

pub fn full(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterates the set bits of `m` in increasing order.
pub fn iter(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub fn to_vec(m: Mask) -> Vec<usize> {
    iter(m).collect()
}

#[inline]
pub fn count(m: Mask) -> usize {
    m.count_ones() as usize
}
