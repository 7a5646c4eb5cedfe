use std::collections::HashMap;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{arg, Error, Result};

pub const DEFAULT_COSET_BOUND: usize = 100_000;

/// The action of a group on the right cosets of a subgroup.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Image group acting on `0..index`, frozen. Coset 0 is the subgroup itself.
    pub action: PermGroup,
    /// Canonical (lexicographically least) member of each coset.
    pub representatives: Vec<Permutation>,
    /// Order of the kernel of the action.
    pub kernel_order: u128,
}

impl CosetAction {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_order == 1
    }
}

fn canonical(sub_elements: &[Permutation], x: &Permutation) -> Permutation {
    let mut best: Option<Permutation> = None;
    for m in sub_elements {
        let y = m.compose(x);
        if best.as_ref().map_or(true, |b| y.images() < b.images()) {
            best = Some(y);
        }
    }
    best.expect("subgroup has the identity")
}

/// Right-coset action of `group` on `subgroup`, with index capped at `bound`.
pub fn coset_action(group: &PermGroup, subgroup: &PermGroup, bound: usize) -> Result<CosetAction> {
    let gchain = group.chain()?;
    if subgroup.degree() != group.degree() {
        return arg("subgroup has a different degree");
    }
    if !subgroup.generators().iter().all(|h| gchain.contains(h)) {
        return arg("subgroup is not contained in the group");
    }
    let sub = subgroup.freeze();
    let g_order = gchain.order();
    let h_order = sub.order()?;
    let index = g_order / h_order;
    if index > bound as u128 {
        return Err(Error::Resource(format!(
            "coset action of index {index} exceeds bound {bound}"
        )));
    }
    let sub_elements = sub.elements(u128::MAX)?;
    let id = Permutation::identity(group.degree());
    let mut reps = vec![canonical(&sub_elements, &id)];
    let mut lookup: HashMap<Permutation, usize> = HashMap::new();
    lookup.insert(reps[0].clone(), 0);
    let ngens = group.generators().len();
    let mut table: Vec<Vec<usize>> = vec![Vec::new(); ngens];
    let mut head = 0;
    while head < reps.len() {
        let x = reps[head].clone();
        for (k, g) in group.generators().iter().enumerate() {
            let c = canonical(&sub_elements, &x.compose(g));
            let idx = match lookup.get(&c) {
                Some(&i) => i,
                None => {
                    reps.push(c.clone());
                    lookup.insert(c, reps.len() - 1);
                    reps.len() - 1
                }
            };
            table[k].push(idx);
        }
        head += 1;
    }
    if reps.len() as u128 != index {
        return Err(Error::Internal(format!(
            "found {} cosets, expected {index}",
            reps.len()
        )));
    }
    let gens: Vec<Permutation> = table
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<_>>()?;
    let action = PermGroup::new(reps.len(), gens)?.freeze();
    let image_order = action.order()?;
    Ok(CosetAction {
        action,
        representatives: reps,
        kernel_order: g_order / image_order,
    })
}

impl PermGroup {
    pub fn coset_action(&self, subgroup: &PermGroup) -> Result<CosetAction> {
        coset_action(self, subgroup, DEFAULT_COSET_BOUND)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_on_itself_has_degree_one() {
        let s4 = PermGroup::symmetric(4).freeze();
        let ca = s4.coset_action(&s4).unwrap();
        assert_eq!(ca.index(), 1);
        assert_eq!(ca.kernel_order, 24);
    }

    #[test]
    fn s4_on_cosets_of_point_stabilizer_is_natural() {
        let s4 = PermGroup::symmetric(4).freeze();
        let stab = s4.point_stabilizer(0).unwrap();
        let ca = s4.coset_action(&stab).unwrap();
        assert_eq!(ca.index(), 4);
        assert!(ca.is_faithful());
        assert_eq!(ca.action.order().unwrap(), 24);
    }

    #[test]
    fn rejects_non_subgroup_and_bound() {
        let a4 = PermGroup::alternating(4).freeze();
        let s = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(matches!(coset_action(&a4, &s, 100), Err(Error::Argument(_))));
        let triv = PermGroup::trivial(4);
        assert!(matches!(coset_action(&a4, &triv, 5), Err(Error::Resource(_))));
    }
}
