//! GF(4) arithmetic on two-bit codes `b0 + b1·w` with `w² = w + 1`, for the
//! affine planes over GF(4).

use crate::error::Result;
use crate::perm::{PermGroup, Permutation};

pub(crate) fn add(a: u8, b: u8) -> u8 {
    a ^ b
}

pub(crate) fn mul(a: u8, b: u8) -> u8 {
    // log table over the generator w (code 2): w⁰ = 1, w¹ = 2, w² = 3.
    const LOG: [u8; 4] = [0, 0, 1, 2];
    const EXP: [u8; 3] = [1, 2, 3];
    if a == 0 || b == 0 {
        0
    } else {
        EXP[((LOG[a as usize] + LOG[b as usize]) % 3) as usize]
    }
}

pub(crate) fn frob(a: u8) -> u8 {
    mul(a, a)
}

fn point(v: [u8; 2]) -> usize {
    v[0] as usize + 4 * v[1] as usize
}

fn vector(i: usize) -> [u8; 2] {
    [(i % 4) as u8, (i / 4) as u8]
}

fn perm_of(f: impl Fn([u8; 2]) -> [u8; 2]) -> Result<Permutation> {
    Permutation::from_images((0..16).map(|i| point(f(vector(i)))).collect())
}

fn linear(m: [[u8; 2]; 2]) -> impl Fn([u8; 2]) -> [u8; 2] {
    move |v| {
        [
            add(mul(m[0][0], v[0]), mul(m[0][1], v[1])),
            add(mul(m[1][0], v[0]), mul(m[1][1], v[1])),
        ]
    }
}

/// AGL(2,4) on the 16 vectors of GF(4)²; with `semilinear`, AΓL(2,4).
pub fn affine_plane_group(semilinear: bool) -> Result<PermGroup> {
    let mut gens = vec![
        perm_of(|v| [add(v[0], 1), v[1]])?,
        perm_of(linear([[2, 0], [0, 1]]))?,
        perm_of(linear([[1, 1], [0, 1]]))?,
        perm_of(linear([[0, 1], [1, 0]]))?,
    ];
    if semilinear {
        gens.push(perm_of(|v| [frob(v[0]), frob(v[1])])?);
    }
    Ok(PermGroup::new(16, gens)?.freeze())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for a in 1..4u8 {
            assert_eq!((1..4u8).filter(|&b| mul(a, b) == 1).count(), 1);
            for b in 0..4u8 {
                for c in 0..4u8 {
                    assert_eq!(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
                }
            }
        }
        assert_eq!(mul(2, 2), 3);
    }

    #[test]
    fn affine_orders() {
        assert_eq!(affine_plane_group(false).unwrap().order().unwrap(), 2_880);
        assert_eq!(affine_plane_group(true).unwrap().order().unwrap(), 5_760);
    }
}
