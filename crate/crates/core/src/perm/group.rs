use std::collections::HashSet;
use std::sync::Arc;

use super::chain::{ChainOptions, StabChain};
use super::permutation::Permutation;
use crate::error::{arg, Error, Result};

/// A permutation group given by generators, with an optional stabilizer chain
/// attached by [`PermGroup::freeze`]. Frozen groups are immutable and cheap to clone.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: Option<Arc<StabChain>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return arg(format!(
                    "generator of degree {} in group of degree {degree}",
                    g.degree()
                ));
            }
        }
        Ok(PermGroup {
            degree,
            gens,
            chain: None,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: Vec::new(),
            chain: None,
        }
        .freeze()
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
            let cyc: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cyc]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        for k in 2..n {
            gens.push(Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        let cyc: Vec<usize> = (0..n).collect();
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[&cyc]).unwrap()]
        } else {
            vec![]
        };
        PermGroup::new(n, gens).unwrap()
    }

    /// Dihedral group of order `2n` acting on `n` points.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_images(rot).unwrap(),
                Permutation::from_images(refl).unwrap(),
            ],
        )
        .unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn is_frozen(&self) -> bool {
        self.chain.is_some()
    }

    pub fn chain(&self) -> Result<&StabChain> {
        self.chain
            .as_deref()
            .ok_or_else(|| Error::State("group is not frozen".into()))
    }

    /// Attaches a stabilizer chain computed with the default seed.
    pub fn freeze(&self) -> PermGroup {
        self.freeze_with(&ChainOptions::default())
    }

    pub fn freeze_with(&self, opts: &ChainOptions) -> PermGroup {
        if let Some(chain) = &self.chain {
            if opts.base_prefix.is_empty() || chain.base().starts_with(&opts.base_prefix) {
                return self.clone();
            }
        }
        let chain = StabChain::build(self.degree, &self.gens, opts);
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: Some(Arc::new(chain)),
        }
    }

    /// Re-freezes with the given base prefix, reusing the known order.
    pub fn with_base(&self, prefix: &[usize]) -> Result<PermGroup> {
        let order = self.order()?;
        Ok(self.freeze_with(&ChainOptions {
            seed: 0,
            base_prefix: prefix.to_vec(),
            known_order: Some(order),
        }))
    }

    pub fn order(&self) -> Result<u128> {
        Ok(self.chain()?.order())
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        Ok(self.chain()?.contains(g))
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return arg(format!("point {point} out of range for degree {}", self.degree));
        }
        let mut orb = orbit_of(self.degree, &self.gens, point);
        orb.sort_unstable();
        Ok(orb)
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let mut orb = orbit_of(self.degree, &self.gens, p);
            for &x in &orb {
                seen[x] = true;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || orbit_of(self.degree, &self.gens, 0).len() == self.degree
    }

    /// Stabilizer of `point`, frozen.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        let chain = self.chain()?;
        if point >= self.degree {
            return arg(format!("point {point} out of range for degree {}", self.degree));
        }
        let order = chain.order();
        let rebased = if chain.base().first() == Some(&point) {
            self.clone()
        } else {
            self.freeze_with(&ChainOptions {
                seed: 0,
                base_prefix: vec![point],
                known_order: Some(order),
            })
        };
        let c = rebased.chain()?;
        let orbit_len = c.level(0).map(|l| l.orbit.len()).unwrap_or(1);
        let gens = if c.base().first() == Some(&point) {
            c.level_generators(1)
        } else {
            // group fixes nothing and has an empty chain
            Vec::new()
        };
        let stab = PermGroup::new(self.degree, gens)?;
        let sub_order = order / orbit_len as u128;
        let base_rest: Vec<usize> = c.base().into_iter().skip(1).collect();
        Ok(stab.freeze_with(&ChainOptions {
            seed: 0,
            base_prefix: base_rest,
            known_order: Some(sub_order),
        }))
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let mut g = self.clone();
        for &p in points {
            g = g.point_stabilizer(p)?;
        }
        Ok(g)
    }

    /// An element mapping `from` to `to`, if one exists.
    pub fn transporter(&self, from: usize, to: usize) -> Result<Option<Permutation>> {
        let chain = self.chain()?;
        if from >= self.degree || to >= self.degree {
            return arg("point out of range");
        }
        if chain.base().first() != Some(&from) {
            let rebased = self.with_base(&[from])?;
            if rebased.chain()?.base().first() != Some(&from) {
                return Ok((from == to).then(|| Permutation::identity(self.degree)));
            }
            return rebased.transporter(from, to);
        }
        let l = chain.level(0).expect("non-empty chain");
        Ok(l.contains(to as u32).then(|| l.transversal(to as u32)))
    }

    /// All elements; fails if the order exceeds `bound`.
    pub fn elements(&self, bound: u128) -> Result<Vec<Permutation>> {
        let order = self.order()?;
        if order > bound {
            return Err(Error::Resource(format!(
                "group order {order} exceeds element enumeration bound {bound}"
            )));
        }
        Ok(self.chain()?.elements())
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        let c = other.chain()?;
        Ok(self.degree == other.degree && self.gens.iter().all(|g| c.contains(g)))
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Normal closure of `gens` inside this group, frozen.
    pub fn normal_closure(&self, gens: &[Permutation]) -> PermGroup {
        let mut current: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut group = PermGroup::new(self.degree, current.clone()).unwrap().freeze();
        loop {
            let mut grew = false;
            let snapshot = current.clone();
            for d in &snapshot {
                for g in &self.gens {
                    let c = d.conjugate_by(g);
                    if !group.chain().unwrap().contains(&c) {
                        current.push(c);
                        group = PermGroup::new(self.degree, current.clone()).unwrap().freeze();
                        grew = true;
                    }
                }
            }
            if !grew {
                return group;
            }
        }
    }

    /// Derived subgroup, frozen.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Subgroup generated by the given elements, frozen.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        Ok(PermGroup::new(self.degree, gens)?.freeze())
    }

    /// The group induced on a union of orbits, relabelled `0..points.len()` in the given order.
    pub fn restrict_to(&self, points: &[usize]) -> Result<PermGroup> {
        let mut index = vec![usize::MAX; self.degree];
        for (i, &p) in points.iter().enumerate() {
            index[p] = i;
        }
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut images = Vec::with_capacity(points.len());
            for &p in points {
                let q = index[g.apply(p)];
                if q == usize::MAX {
                    return arg("point set is not invariant");
                }
                images.push(q);
            }
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::new(points.len(), gens)
    }
}

fn orbit_of(degree: usize, gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orb = vec![point];
    let mut head = 0;
    while head < orb.len() {
        let x = orb[head];
        head += 1;
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                orb.push(y);
            }
        }
    }
    orb
}

/// Enumerates the group generated by `gens` by closure, giving up past `bound` elements.
pub fn closure(degree: usize, gens: &[Permutation], bound: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                out.push(y);
                if out.len() > bound {
                    return None;
                }
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn identity_orbit_is_singleton() {
        let g = PermGroup::new(5, vec![]).unwrap();
        assert_eq!(g.orbit(3).unwrap(), vec![3]);
        assert!(g.orbit(5).is_err());
    }

    #[test]
    fn five_cycle_and_three_cycle_are_transitive() {
        let g = PermGroup::new(5, vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.orbit(0).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn small_orders() {
        assert_eq!(PermGroup::new(2, vec![p(2, &[&[0, 1]])]).unwrap().freeze().order().unwrap(), 2);
        assert_eq!(PermGroup::symmetric(5).freeze().order().unwrap(), 120);
        assert_eq!(PermGroup::alternating(6).freeze().order().unwrap(), 360);
        assert_eq!(PermGroup::symmetric(9).freeze().order().unwrap(), 362_880);
        assert_eq!(PermGroup::new(4, vec![]).unwrap().freeze().order().unwrap(), 1);
    }

    #[test]
    fn stabilizer_of_sym3() {
        let g = PermGroup::symmetric(3).freeze();
        let s = g.point_stabilizer(0).unwrap();
        assert_eq!(s.order().unwrap(), 2);
        assert!(g.point_stabilizer(1).unwrap().generators().iter().all(|h| h.apply(1) == 1));
    }

    #[test]
    fn unfrozen_stabilizer_is_state_error() {
        let g = PermGroup::symmetric(3);
        assert!(matches!(g.point_stabilizer(0), Err(Error::State(_))));
    }

    #[test]
    fn membership_rejects_outsiders() {
        let a5 = PermGroup::alternating(5).freeze();
        assert!(a5.contains(&p(5, &[&[0, 1, 2]])).unwrap());
        assert!(!a5.contains(&p(5, &[&[0, 1]])).unwrap());
        assert!(!a5.contains(&p(6, &[&[0, 1, 2]])).unwrap());
    }

    #[test]
    fn derived_subgroup_of_s5_is_a5() {
        assert_eq!(PermGroup::symmetric(5).freeze().derived_subgroup().order().unwrap(), 60);
        assert_eq!(PermGroup::alternating(5).freeze().derived_subgroup().order().unwrap(), 60);
        assert_eq!(PermGroup::symmetric(4).freeze().derived_subgroup().order().unwrap(), 12);
    }

    #[test]
    fn transporter_maps_points() {
        let g = PermGroup::dihedral(7).freeze();
        let t = g.transporter(2, 5).unwrap().unwrap();
        assert_eq!(t.apply(2), 5);
        let h = PermGroup::new(4, vec![p(4, &[&[0, 1]])]).unwrap().freeze();
        assert!(h.transporter(0, 3).unwrap().is_none());
    }
}
