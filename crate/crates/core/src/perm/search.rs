use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fingerprint::{Fingerprint, FINGERPRINT_ORDER_LIMIT};
use super::group::{closure, PermGroup};
use super::permutation::Permutation;
use crate::error::{arg, Error, Result};

pub const DEFAULT_SEARCH_BUDGET: usize = 4_000;
const SAMPLES_PER_ELEMENT: usize = 400;

fn random_of_order<R: Rng>(group: &PermGroup, order: u64, rng: &mut R) -> Result<Option<Permutation>> {
    let chain = group.chain()?;
    for _ in 0..SAMPLES_PER_ELEMENT {
        let g = chain.random_element(rng);
        let o = g.order();
        if o == order {
            return Ok(Some(g));
        }
        // A power of an element whose order is a multiple lands on the wanted order.
        if o % order == 0 {
            return Ok(Some(g.pow(o / order)));
        }
    }
    Ok(None)
}

/// Seeded two-generator search for a subgroup with the given fingerprint.
///
/// One generator has the largest element order of the target, the other an order
/// drawn from the target histogram weighted by multiplicity.
pub fn random_subgroup_search(
    group: &PermGroup,
    target: &Fingerprint,
    seed: u64,
    budget: usize,
) -> Result<PermGroup> {
    group.chain()?;
    if target.order > FINGERPRINT_ORDER_LIMIT || !target.is_full() {
        return arg(format!("target order {} is above the search limit", target.order));
    }
    if target.order == 1 {
        return Ok(PermGroup::trivial(group.degree()));
    }
    let g_order = group.order()?;
    if g_order % target.order != 0 {
        return Err(Error::SearchFailure(format!(
            "target order {} does not divide {g_order}",
            target.order
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5ea2_c400);
    let top = target.exponent_max();
    let weighted: Vec<(u64, u64)> = target
        .order_histogram
        .iter()
        .filter(|(&k, _)| k > 1)
        .map(|(&k, &v)| (k, v))
        .collect();
    let total: u64 = weighted.iter().map(|(_, v)| v).sum();
    let bound = target.order as usize;
    for _ in 0..budget {
        let Some(a) = random_of_order(group, top, &mut rng)? else {
            continue;
        };
        let mut pick = rng.gen_range(0..total);
        let mut ord_b = weighted[0].0;
        for &(k, v) in &weighted {
            if pick < v {
                ord_b = k;
                break;
            }
            pick -= v;
        }
        let Some(b) = random_of_order(group, ord_b, &mut rng)? else {
            continue;
        };
        let gens = if top as u128 == target.order {
            vec![a]
        } else {
            vec![a, b]
        };
        let Some(elements) = closure(group.degree(), &gens, bound) else {
            continue;
        };
        if elements.len() as u128 != target.order {
            continue;
        }
        let sub = PermGroup::new(group.degree(), gens)?.freeze();
        if sub.fingerprint()? == *target {
            return Ok(sub);
        }
    }
    Err(Error::SearchFailure(format!(
        "no subgroup with fingerprint {target} after {budget} attempts"
    )))
}

impl PermGroup {
    pub fn find_subgroup(&self, target: &Fingerprint, seed: u64) -> Result<PermGroup> {
        random_subgroup_search(self, target, seed, DEFAULT_SEARCH_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_a4_in_a5() {
        let a5 = PermGroup::alternating(5).freeze();
        let target = PermGroup::alternating(4).freeze().fingerprint().unwrap();
        let h = a5.find_subgroup(&target, 0).unwrap();
        assert_eq!(h.order().unwrap(), 12);
        assert!(h.is_subgroup_of(&a5).unwrap());
    }

    #[test]
    fn finds_d5_in_s5() {
        let s5 = PermGroup::symmetric(5).freeze();
        let target = PermGroup::dihedral(5).freeze().fingerprint().unwrap();
        for seed in 0..5 {
            assert_eq!(s5.find_subgroup(&target, seed).unwrap().order().unwrap(), 10);
        }
    }

    #[test]
    fn impossible_target_fails_cleanly() {
        let a5 = PermGroup::alternating(5).freeze();
        // Z4 is not a subgroup of A5 although 4 divides 60.
        let target = PermGroup::cyclic(4).freeze().fingerprint().unwrap();
        assert!(matches!(
            random_subgroup_search(&a5, &target, 0, 20),
            Err(Error::SearchFailure(_))
        ));
    }
}
