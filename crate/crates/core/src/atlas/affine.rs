use crate::error::{arg, Error, Result};
use crate::ffalg::{Fe, Field, MatRep, Matrix, MatrixGroup};
use crate::perm::{ChainOptions, PermGroup, Permutation};

/// Largest affine degree p^d built as a permutation group.
pub const MAX_AFFINE_DEGREE: u64 = 50_000;
/// Bound on the enumerated linear part.
const LINEAR_PART_BOUND: usize = 100_000;

/// `V ⋊ L` acting on the p^d vectors of GF(p)^d, vectors encoded by
/// little-endian base-p digits (the zero vector is point 0).
#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub p: u64,
    pub dim: usize,
    pub linear: MatRep,
    pub linear_order: usize,
    pub group: PermGroup,
}

pub fn encode(v: &[Fe], p: u64) -> usize {
    v.iter().rev().fold(0usize, |acc, a| acc * p as usize + a.c0 as usize)
}

pub fn decode(mut x: usize, p: u64, dim: usize) -> Vec<Fe> {
    (0..dim)
        .map(|_| {
            let c = Fe {
                c0: (x % p as usize) as u32,
                c1: 0,
            };
            x /= p as usize;
            c
        })
        .collect()
}

/// Permutation of the vectors induced by `v ↦ m·v`.
pub fn linear_permutation(m: &Matrix) -> Result<Permutation> {
    let f = m.field();
    if f.is_extension() {
        return arg("affine groups are built over prime fields");
    }
    let p = f.characteristic();
    let d = m.rows();
    let n = (p as usize).pow(d as u32);
    Permutation::from_images((0..n).map(|x| encode(&m.apply(&decode(x, p, d)), p)).collect())
}

impl AffineGroup {
    pub fn new(linear: MatRep) -> Result<AffineGroup> {
        let f: Field = linear.field();
        if f.is_extension() {
            return arg("affine groups are built over prime fields");
        }
        let p = f.characteristic();
        let dim = linear.dim();
        let degree = p
            .checked_pow(dim as u32)
            .filter(|&n| n <= MAX_AFFINE_DEGREE)
            .ok_or_else(|| Error::Resource(format!("affine degree {p}^{dim} exceeds {MAX_AFFINE_DEGREE}")))?
            as usize;
        let linear_order = MatrixGroup::of_rep(&linear, LINEAR_PART_BOUND)?.order();
        let mut gens = Vec::with_capacity(dim + linear.generators().len());
        for i in 0..dim {
            let step = (p as usize).pow(i as u32);
            // Adding e_i: only digit i changes, with wrap-around.
            gens.push(Permutation::from_images(
                (0..degree)
                    .map(|x| {
                        let digit = (x / step) % p as usize;
                        if digit + 1 == p as usize {
                            x - digit * step
                        } else {
                            x + step
                        }
                    })
                    .collect(),
            )?);
        }
        for m in linear.generators() {
            gens.push(linear_permutation(m)?);
        }
        let order = degree as u128 * linear_order as u128;
        let group = PermGroup::new(degree, gens)?.freeze_with(&ChainOptions {
            seed: 0,
            base_prefix: vec![0],
            known_order: Some(order),
        });
        Ok(AffineGroup {
            p,
            dim,
            linear,
            linear_order,
            group,
        })
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// Stabilizer of the zero vector: the linear part.
    pub fn zero_stabilizer(&self) -> Result<PermGroup> {
        self.group.point_stabilizer(0)
    }

    /// The point `-x`.
    pub fn negate(&self, x: usize) -> usize {
        let f = self.linear.field();
        let v: Vec<Fe> = decode(x, self.p, self.dim).into_iter().map(|a| f.neg(a)).collect();
        encode(&v, self.p)
    }

    pub fn add_points(&self, x: usize, y: usize) -> usize {
        let f = self.linear.field();
        let v: Vec<Fe> = decode(x, self.p, self.dim)
            .into_iter()
            .zip(decode(y, self.p, self.dim))
            .map(|(a, b)| f.add(a, b))
            .collect();
        encode(&v, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_round_trip() {
        for x in 0..81 {
            assert_eq!(encode(&decode(x, 3, 4), 3), x);
        }
        assert_eq!(encode(&decode(0, 7, 2), 7), 0);
    }

    #[test]
    fn frobenius_group_of_order_55() {
        let f = Field::prime(11).unwrap();
        let z = Matrix::scalar(f, 1, f.from_i64(4));
        let a = AffineGroup::new(MatRep::new(f, 1, vec![z]).unwrap()).unwrap();
        assert_eq!(a.degree(), 11);
        assert_eq!(a.group.order().unwrap(), 55);
        assert_eq!(a.zero_stabilizer().unwrap().order().unwrap(), 5);
        // Independent check of the order by closure.
        let all = crate::perm::closure(11, a.group.generators(), 1000).unwrap();
        assert_eq!(all.len(), 55);
    }
}
