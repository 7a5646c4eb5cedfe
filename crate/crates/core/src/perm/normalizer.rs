use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{arg, Error, Result};

pub const DEFAULT_NORMALIZER_ORBIT_BOUND: usize = 500_000;
pub const NORMALIZER_SUBGROUP_LIMIT: u128 = 200;

/// 128-bit digest of a sorted element set.
fn digest(elements: &mut [Permutation]) -> (u64, u64) {
    elements.sort_unstable();
    let mut h1 = DefaultHasher::new();
    let mut h2 = DefaultHasher::new();
    0x9e37_79b9u32.hash(&mut h2);
    for e in elements.iter() {
        e.images().hash(&mut h1);
        e.images().hash(&mut h2);
        h2.write_u8(0xa5);
    }
    (h1.finish(), h2.finish())
}

/// `N_G(H)` for small `H`, via the orbit of `H`'s element set under conjugation.
pub fn subgroup_normalizer_small(group: &PermGroup, subgroup: &PermGroup, orbit_bound: usize) -> Result<PermGroup> {
    let g_order = group.order()?;
    if subgroup.degree() != group.degree() {
        return arg("subgroup has a different degree");
    }
    let h = subgroup.freeze();
    let h_order = h.order()?;
    if h_order > NORMALIZER_SUBGROUP_LIMIT {
        return Err(Error::Resource(format!(
            "subgroup order {h_order} exceeds {NORMALIZER_SUBGROUP_LIMIT}"
        )));
    }
    if !h.is_subgroup_of(group)? {
        return arg("subgroup is not contained in the group");
    }
    let base_elements = h.elements(NORMALIZER_SUBGROUP_LIMIT)?;
    let mut start = base_elements.clone();
    let start_key = digest(&mut start);

    let n = group.degree();
    let mut keys: HashMap<(u64, u64), usize> = HashMap::new();
    keys.insert(start_key, 0);
    // transversal[i] conjugates H to the i-th orbit element
    let mut transversal = vec![Permutation::identity(n)];
    let mut members: Vec<Vec<Permutation>> = vec![start];
    let mut schreier: Vec<Permutation> = Vec::new();
    let mut head = 0;
    while head < members.len() {
        for g in group.generators() {
            let mut conj: Vec<Permutation> = members[head].iter().map(|e| e.conjugate_by(g)).collect();
            let key = digest(&mut conj);
            let t = transversal[head].compose(g);
            match keys.get(&key) {
                Some(&j) => {
                    let s = t.compose(&transversal[j].inverse());
                    if !s.is_identity() {
                        schreier.push(s);
                    }
                }
                None => {
                    if members.len() >= orbit_bound {
                        return Err(Error::Resource(format!(
                            "conjugation orbit exceeds bound {orbit_bound}"
                        )));
                    }
                    keys.insert(key, members.len());
                    members.push(conj);
                    transversal.push(t);
                }
            }
        }
        // Only the last layer is needed to continue the search.
        members[head].clear();
        head += 1;
    }
    let orbit_size = transversal.len() as u128;
    schreier.sort_unstable();
    schreier.dedup();
    let mut gens: Vec<Permutation> = h.generators().to_vec();
    // Schreier generators already in the group generated so far add nothing.
    let mut norm = PermGroup::new(n, gens.clone())?.freeze();
    for s in schreier {
        if !norm.contains(&s)? {
            gens.push(s);
            norm = PermGroup::new(n, gens.clone())?.freeze();
        }
    }
    let norm_order = norm.order()?;
    if orbit_size * norm_order != g_order {
        return Err(Error::Internal(format!(
            "orbit-stabilizer mismatch: {orbit_size} * {norm_order} != {g_order}"
        )));
    }
    for x in norm.generators() {
        for y in h.generators() {
            if !h.contains(&y.conjugate_by(x))? {
                return Err(Error::Internal("normalizer does not normalize".into()));
            }
        }
    }
    Ok(norm)
}

impl PermGroup {
    pub fn normalizer_of_small(&self, subgroup: &PermGroup) -> Result<PermGroup> {
        subgroup_normalizer_small(self, subgroup, DEFAULT_NORMALIZER_ORBIT_BOUND)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_transposition_in_a5() {
        let a5 = PermGroup::alternating(5).freeze();
        let h = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
        let n = a5.normalizer_of_small(&h).unwrap();
        assert_eq!(n.order().unwrap(), 4);
    }

    #[test]
    fn a4_in_s5_has_normalizer_s4() {
        let s5 = PermGroup::symmetric(5).freeze();
        let a4 = PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
                Permutation::from_cycles(5, &[&[1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s5.normalizer_of_small(&a4).unwrap().order().unwrap(), 24);
    }

    #[test]
    fn orbit_bound_is_enforced() {
        let s6 = PermGroup::symmetric(6).freeze();
        let h = PermGroup::new(6, vec![Permutation::from_cycles(6, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(matches!(
            subgroup_normalizer_small(&s6, &h, 3),
            Err(Error::Resource(_))
        ));
    }
}
