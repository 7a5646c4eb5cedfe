use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{arg, Result};

/// A partition of the points into blocks, stored as a point → block id map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub block_of: Vec<usize>,
    pub block_count: usize,
}

impl BlockSystem {
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (p, &b) in self.block_of.iter().enumerate() {
            out[b].push(p);
        }
        out
    }

    pub fn block_size(&self) -> usize {
        self.block_of.len() / self.block_count.max(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.block_count <= 1 || self.block_count == self.block_of.len()
    }

    /// True when every generator maps blocks onto blocks.
    pub fn is_preserved_by(&self, gens: &[Permutation]) -> bool {
        for g in gens {
            let mut image_block = vec![usize::MAX; self.block_count];
            for (p, &b) in self.block_of.iter().enumerate() {
                let ib = self.block_of[g.apply(p)];
                if image_block[b] == usize::MAX {
                    image_block[b] = ib;
                } else if image_block[b] != ib {
                    return false;
                }
            }
        }
        true
    }
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns `(absorbed, survivor)` when two classes merge.
    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (small, big) = if self.size[ra as usize] < self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        Some((small, big))
    }
}

/// Finest block system in which `a` and `b` share a block (Atkinson's algorithm).
pub fn minimal_block_system(degree: usize, gens: &[Permutation], a: usize, b: usize) -> BlockSystem {
    let mut uf = UnionFind::new(degree);
    let mut queue: Vec<(u32, u32)> = Vec::new();
    if let Some(pair) = uf.union(a as u32, b as u32) {
        queue.push(pair);
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            if let Some(pair) = uf.union(g.apply_u32(x), g.apply_u32(y)) {
                queue.push(pair);
            }
        }
    }
    let mut id = vec![usize::MAX; degree];
    let mut block_of = vec![0; degree];
    let mut count = 0;
    for p in 0..degree {
        let r = uf.find(p as u32) as usize;
        if id[r] == usize::MAX {
            id[r] = count;
            count += 1;
        }
        block_of[p] = id[r];
    }
    BlockSystem {
        block_of,
        block_count: count,
    }
}

/// Primitivity test. Returns `None` when primitive, or a nontrivial block system.
///
/// Seeds are the base point paired with one representative of each orbit of its
/// stabilizer; the minimal block through `{v, w}` depends only on the `G_v`-orbit of `w`.
pub fn primitivity_witness(group: &PermGroup) -> Result<Option<BlockSystem>> {
    let n = group.degree();
    if !group.is_transitive() {
        return arg("primitivity test needs a transitive group");
    }
    if n <= 2 {
        return Ok(None);
    }
    let stab = group.point_stabilizer(0)?;
    for orb in stab.orbits() {
        let w = orb[0];
        if w == 0 {
            continue;
        }
        let bs = minimal_block_system(n, group.generators(), 0, w);
        if bs.block_count > 1 {
            return Ok(Some(bs));
        }
    }
    Ok(None)
}

impl PermGroup {
    /// True iff the group preserves no nontrivial block system.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(primitivity_witness(self)?.is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_square_blocks() {
        let d8 = PermGroup::dihedral(4).freeze();
        let bs = primitivity_witness(&d8).unwrap().expect("imprimitive");
        assert_eq!(bs.blocks(), vec![vec![0, 2], vec![1, 3]]);
        assert!(bs.is_preserved_by(d8.generators()));
    }

    #[test]
    fn cyclic_six_is_imprimitive() {
        let c6 = PermGroup::cyclic(6).freeze();
        let bs = primitivity_witness(&c6).unwrap().expect("imprimitive");
        assert!(!bs.is_trivial());
        assert!(bs.is_preserved_by(c6.generators()));
    }

    #[test]
    fn symmetric_and_prime_cyclic_are_primitive() {
        assert!(PermGroup::symmetric(6).freeze().is_primitive().unwrap());
        assert!(PermGroup::cyclic(7).freeze().is_primitive().unwrap());
    }

    #[test]
    fn intransitive_is_rejected() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()])
            .unwrap()
            .freeze();
        assert!(g.is_primitive().is_err());
    }
}
