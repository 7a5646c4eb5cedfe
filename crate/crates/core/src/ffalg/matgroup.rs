use std::collections::{BTreeMap, HashMap};

use super::matrix::Matrix;
use super::module::MatRep;
use crate::error::{arg, Error, Result};

/// A finite matrix group held as an explicit element list.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

impl MatrixGroup {
    /// Enumerates the closure of `gens`; fails once more than `bound` elements appear.
    pub fn generate(gens: &[Matrix], dim: usize, field: super::field::Field, bound: usize) -> Result<MatrixGroup> {
        let id = Matrix::identity(field, dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor].clone();
            cursor += 1;
            for g in gens {
                let y = x.mul(g);
                if !index.contains_key(&y) {
                    if elements.len() >= bound {
                        return Err(Error::Resource(format!("matrix group exceeds {bound} elements")));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        Ok(MatrixGroup { elements, index })
    }

    pub fn of_rep(rep: &MatRep, bound: usize) -> Result<MatrixGroup> {
        MatrixGroup::generate(rep.generators(), rep.dim(), rep.field(), bound)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Order of each element, by index.
    pub fn element_orders(&self) -> Vec<u64> {
        let n = self.elements.len() as u64;
        self.elements
            .iter()
            .map(|m| m.order(n).expect("finite group element"))
            .collect()
    }

    pub fn order_histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for o in self.element_orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    /// Closure of a subset of elements, given by index.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.elements.len()];
        mark[0] = true;
        let mut members = vec![0usize];
        let mut cursor = 0;
        while cursor < members.len() {
            let x = self.elements[members[cursor]].clone();
            cursor += 1;
            for &gi in gens {
                let y = self.index[&x.mul(&self.elements[gi])];
                if !mark[y] {
                    mark[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        // Commutators of generators' closure: using all pairs is cheap at this size.
        let n = self.elements.len();
        let inv: Vec<Matrix> = self.elements.iter().map(|m| m.inverse().expect("invertible")).collect();
        let mut comms = Vec::new();
        let mut seen = vec![false; n];
        for a in 0..n {
            for b in 0..n {
                let c = inv[a].mul(&inv[b]).mul(&self.elements[a]).mul(&self.elements[b]);
                let k = self.index[&c];
                if !seen[k] {
                    seen[k] = true;
                    comms.push(k);
                }
            }
        }
        self.subgroup(&comms)
    }

    /// The central involution `-I`, if present.
    pub fn contains_minus_identity(&self) -> bool {
        let e = &self.elements[0];
        let f = e.field();
        self.contains(&e.scale(f.neg(f.one())))
    }

    pub fn rep_of(&self, members: &[usize]) -> Result<MatRep> {
        let Some(&first) = members.first() else {
            return arg("empty element list");
        };
        let e = &self.elements[first];
        MatRep::new(e.field(), e.rows(), members.iter().map(|&i| self.elements[i].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffalg::field::Field;

    #[test]
    fn sl2_3_has_order_24() {
        let f = Field::prime(3).unwrap();
        let a = Matrix::from_ints(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Matrix::from_ints(f, &[vec![1, 0], vec![1, 1]]).unwrap();
        let g = MatrixGroup::generate(&[a, b], 2, f, 1000).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.contains_minus_identity());
        // Q8 is the derived subgroup of SL(2,3).
        assert_eq!(g.derived_subgroup().len(), 8);
        assert_eq!(g.order_histogram().get(&4), Some(&6));
    }

    #[test]
    fn bound_is_enforced() {
        let f = Field::prime(3).unwrap();
        let a = Matrix::from_ints(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Matrix::from_ints(f, &[vec![1, 0], vec![1, 1]]).unwrap();
        assert!(matches!(MatrixGroup::generate(&[a, b], 2, f, 10), Err(Error::Resource(_))));
    }
}
