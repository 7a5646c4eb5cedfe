use std::collections::BTreeMap;
use std::fmt;

use super::group::PermGroup;
use crate::error::Result;

/// Full invariants are computed only up to this order.
pub const FINGERPRINT_ORDER_LIMIT: u128 = 10_000;

/// Isomorphism invariant: order, element-order histogram, abelian flag, derived order.
///
/// For groups above [`FINGERPRINT_ORDER_LIMIT`] only `order` is populated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: u128,
    pub order_histogram: BTreeMap<u64, u64>,
    pub abelian: bool,
    pub derived_order: Option<u128>,
}

impl Fingerprint {
    pub fn is_full(&self) -> bool {
        self.derived_order.is_some()
    }

    /// Largest element order present.
    pub fn exponent_max(&self) -> u64 {
        self.order_histogram.keys().copied().max().unwrap_or(1)
    }

    pub fn count_of_order(&self, k: u64) -> u64 {
        self.order_histogram.get(&k).copied().unwrap_or(0)
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}", self.order)?;
        if self.is_full() {
            let hist: Vec<String> = self
                .order_histogram
                .iter()
                .map(|(k, v)| format!("{k}^{v}"))
                .collect();
            write!(
                f,
                " [{}] abelian={} derived={}",
                hist.join(" "),
                self.abelian,
                self.derived_order.unwrap_or(0)
            )?;
        }
        Ok(())
    }
}

pub fn fingerprint(group: &PermGroup) -> Result<Fingerprint> {
    let order = group.order()?;
    if order > FINGERPRINT_ORDER_LIMIT {
        return Ok(Fingerprint {
            order,
            order_histogram: BTreeMap::new(),
            abelian: group.is_abelian(),
            derived_order: None,
        });
    }
    let mut hist = BTreeMap::new();
    for g in group.elements(FINGERPRINT_ORDER_LIMIT)? {
        *hist.entry(g.order()).or_insert(0u64) += 1;
    }
    let abelian = group.is_abelian();
    let derived_order = if abelian {
        1
    } else {
        group.derived_subgroup().order()?
    };
    Ok(Fingerprint {
        order,
        order_histogram: hist,
        abelian,
        derived_order: Some(derived_order),
    })
}

impl PermGroup {
    pub fn fingerprint(&self) -> Result<Fingerprint> {
        fingerprint(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn trivial_group() {
        let fp = PermGroup::trivial(3).fingerprint().unwrap();
        assert_eq!(fp.order, 1);
        assert_eq!(fp.order_histogram, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn a5_histogram() {
        let fp = PermGroup::alternating(5).freeze().fingerprint().unwrap();
        assert_eq!(fp.order, 60);
        assert_eq!(
            fp.order_histogram,
            BTreeMap::from([(1, 1), (2, 15), (3, 20), (5, 24)])
        );
        assert_eq!(fp.derived_order, Some(60));
        assert!(!fp.abelian);
    }

    #[test]
    fn a5_in_two_actions_agree() {
        // A5 acting on the 6 points of the projective line over GF(5), via PSL(2,5)
        let x = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4]]).unwrap();
        // x -> -1/x with infinity = 5
        let y = Permutation::from_images(vec![5, 4, 2, 3, 1, 0]).unwrap();
        let g = PermGroup::new(6, vec![x, y]).unwrap().freeze();
        assert_eq!(g.order().unwrap(), 60);
        assert_eq!(
            g.fingerprint().unwrap(),
            PermGroup::alternating(5).freeze().fingerprint().unwrap()
        );
    }

    #[test]
    fn agl15_and_d10_differ() {
        let f = PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
                Permutation::from_images(vec![0, 2, 4, 1, 3]).unwrap(),
            ],
        )
        .unwrap()
        .freeze();
        let d = PermGroup::dihedral(10).freeze();
        let (ff, fd) = (f.fingerprint().unwrap(), d.fingerprint().unwrap());
        assert_eq!(ff.order, 20);
        assert_eq!(fd.order, 20);
        assert!(ff.count_of_order(4) > 0 && fd.count_of_order(4) == 0);
        assert_ne!(ff, fd);
    }
}
