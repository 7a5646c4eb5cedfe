use std::fmt;
use std::ops::Mul;

use crate::error::{arg, Result};

/// A permutation of `{0, …, n-1}` stored as its image array.
///
/// Products are read left to right: `(g * h)(x) = h(g(x))`, so points are
/// acted on from the right as in most computer algebra systems.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return arg(format!("image {x} of point {i} out of range for degree {n}"));
            }
            if seen[x] {
                return arg(format!("point {x} is hit twice"));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return arg(format!("cycle point {x} out of range for degree {degree}"));
                }
                if touched[x] {
                    return arg(format!("point {x} appears in two cycles"));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub(crate) fn apply_u32(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub(crate) fn compose_in_place(&mut self, other: &Permutation) {
        for x in self.images.iter_mut() {
            *x = other.images[*x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // x^(g⁻¹ s g): relabel each point through g.
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Cycle lengths, including fixed points, in order of first point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        let mut lens = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycle_lengths().iter().map(|l| l - 1).sum();
        transpositions % 2 == 0
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Moves the whole permutation up by `offset` points inside `degree`.
    pub fn shift(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).apply(0), 2);
    }

    #[test]
    fn inverse_and_order() {
        let p = Permutation::from_cycles(7, &[&[0, 1, 2], &[3, 4, 5, 6]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), 12);
        assert!(p.pow(12).is_identity());
        assert!(!p.is_even());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let s = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let g = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let c = s.conjugate_by(&g);
        assert_eq!(c, g.inverse().compose(&s).compose(&g));
        assert_eq!(c, Permutation::from_cycles(4, &[&[0, 2]]).unwrap());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }
}
