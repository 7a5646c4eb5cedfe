//! Linear and semilinear groups acting on the projective line PG(1,q), q ∈ {p, p²}.

use crate::error::{arg, Result};
use crate::ffalg::{Fe, Field};
use crate::perm::{ChainOptions, PermGroup, Permutation};

/// Which group between PSL(2,q) and PΓL(2,q) to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineGroup {
    Psl,
    Pgl,
    /// PSL extended by the Frobenius automorphism (q = p² only).
    Psigmal,
    /// PGL extended by the Frobenius automorphism (q = p² only).
    Pgammal,
    /// PSL extended by the product of a non-square diagonal and the Frobenius
    /// (q = p² only); for q = 9 this is M₁₀.
    PslTwisted,
}

/// The points of PG(1,q): field elements by index, then ∞ as the last point.
#[derive(Clone, Copy, Debug)]
pub struct ProjectiveLine {
    field: Field,
}

impl ProjectiveLine {
    /// `q` must be a prime or the square of an odd prime.
    pub fn new(q: u64) -> Result<ProjectiveLine> {
        if crate::ffalg::is_prime(q) {
            return Ok(ProjectiveLine { field: Field::prime(q)? });
        }
        let r = (q as f64).sqrt().round() as u64;
        if r * r == q && crate::ffalg::is_prime(r) {
            return Ok(ProjectiveLine { field: Field::quadratic(r)? });
        }
        arg(format!("q = {q} is neither a prime nor the square of a prime"))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    pub fn degree(&self) -> usize {
        self.q() as usize + 1
    }

    pub fn infinity(&self) -> usize {
        self.q() as usize
    }

    pub fn point(&self, a: Fe) -> usize {
        (a.c0 as u64 + self.field.characteristic() * a.c1 as u64) as usize
    }

    pub fn element(&self, i: usize) -> Option<Fe> {
        let p = self.field.characteristic() as usize;
        (i < self.infinity()).then(|| Fe {
            c0: (i % p) as u32,
            c1: (i / p) as u32,
        })
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let f = self.field;
        let found = f.elements().find(|&a| f.order(a) == Some(f.size() - 1));
        found.expect("multiplicative group is cyclic")
    }

    /// The Möbius map `z ↦ (az + b)/(cz + d)`.
    pub fn mobius(&self, a: Fe, b: Fe, c: Fe, d: Fe) -> Result<Permutation> {
        let f = self.field;
        if f.sub(f.mul(a, d), f.mul(b, c)).is_zero() {
            return arg("singular Möbius matrix");
        }
        let inf = self.infinity();
        let images = (0..self.degree())
            .map(|i| match self.element(i) {
                None => match f.div(a, c) {
                    Some(v) => self.point(v),
                    None => inf,
                },
                Some(z) => {
                    let den = f.add(f.mul(c, z), d);
                    match f.inv(den) {
                        Some(di) => self.point(f.mul(f.add(f.mul(a, z), b), di)),
                        None => inf,
                    }
                }
            })
            .collect();
        Permutation::from_images(images)
    }

    /// `z ↦ z^p`, fixing ∞.
    pub fn frobenius(&self) -> Result<Permutation> {
        let f = self.field;
        let images = (0..self.degree())
            .map(|i| self.element(i).map_or(i, |z| self.point(f.frobenius(z))))
            .collect();
        Permutation::from_images(images)
    }

    fn psl_generators(&self) -> Result<Vec<Permutation>> {
        let f = self.field;
        let (o, z) = (f.one(), Fe::ZERO);
        let w = self.primitive_element();
        Ok(vec![
            self.mobius(o, o, z, o)?,
            self.mobius(f.mul(w, w), z, z, o)?,
            self.mobius(z, f.neg(o), o, z)?,
        ])
    }

    pub fn group_order(&self, kind: LineGroup) -> u128 {
        let q = self.q() as u128;
        let pgl = q * (q * q - 1);
        let psl = if q % 2 == 0 { pgl } else { pgl / 2 };
        match kind {
            LineGroup::Psl => psl,
            LineGroup::Pgl => pgl,
            LineGroup::Psigmal | LineGroup::PslTwisted => psl * self.field.degree() as u128,
            LineGroup::Pgammal => pgl * self.field.degree() as u128,
        }
    }

    /// The requested group, frozen against its known order.
    pub fn group(&self, kind: LineGroup) -> Result<PermGroup> {
        let f = self.field;
        let (o, z) = (f.one(), Fe::ZERO);
        let w = self.primitive_element();
        let mut gens = self.psl_generators()?;
        let semilinear = matches!(kind, LineGroup::Psigmal | LineGroup::Pgammal | LineGroup::PslTwisted);
        if semilinear && !f.is_extension() {
            return arg("field automorphisms need q = p²");
        }
        match kind {
            LineGroup::Psl => {}
            LineGroup::Pgl => gens.push(self.mobius(w, z, z, o)?),
            LineGroup::Psigmal => gens.push(self.frobenius()?),
            LineGroup::Pgammal => {
                gens.push(self.mobius(w, z, z, o)?);
                gens.push(self.frobenius()?);
            }
            LineGroup::PslTwisted => gens.push(self.mobius(w, z, z, o)?.compose(&self.frobenius()?)),
        }
        let order = self.group_order(kind);
        Ok(PermGroup::new(self.degree(), gens)?.freeze_with(&ChainOptions {
            seed: 0,
            base_prefix: Vec::new(),
            known_order: Some(order),
        }))
    }
}

pub fn psl2(q: u64) -> Result<PermGroup> {
    ProjectiveLine::new(q)?.group(LineGroup::Psl)
}

pub fn pgl2(q: u64) -> Result<PermGroup> {
    ProjectiveLine::new(q)?.group(LineGroup::Pgl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::closure;

    #[test]
    fn psl_orders_agree_with_enumeration() {
        // Closure enumeration is independent of the chain.
        for q in [5u64, 7, 9] {
            let g = psl2(q).unwrap();
            let all = closure(g.degree(), g.generators(), 100_000).unwrap();
            assert_eq!(all.len() as u128, g.order().unwrap(), "q = {q}");
        }
        let g = pgl2(7).unwrap();
        assert_eq!(closure(8, g.generators(), 100_000).unwrap().len(), 336);
    }

    #[test]
    fn psl_2_41_order() {
        assert_eq!(psl2(41).unwrap().order().unwrap(), 34_440);
    }

    #[test]
    fn semilinear_groups_on_ten_points() {
        let line = ProjectiveLine::new(9).unwrap();
        for kind in [LineGroup::Psigmal, LineGroup::PslTwisted, LineGroup::Pgammal] {
            let g = line.group(kind).unwrap();
            let all = closure(10, g.generators(), 10_000).unwrap();
            assert_eq!(all.len() as u128, line.group_order(kind));
        }
    }
}
