//! Reference fingerprints for the stabilizers and groups named in the tables.
//!
//! Each entry is computed from an explicit permutation construction. Groups of
//! order above the fingerprint limit are represented by their order alone.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::affine::AffineGroup;
use super::gf4::affine_plane_group;
use super::projective::{LineGroup, ProjectiveLine};
use crate::error::{arg, Error, Result};
use crate::ffalg::{deleted_permutation_rep, Field};
use crate::perm::{Fingerprint, PermGroup, Permutation};

pub const CATALOGUE: &[&str] = &[
    "1",
    "Z2",
    "Z4",
    "Z5",
    "V4",
    "D5",
    "D10",
    "AGL(1,5)",
    "AGL(1,5)xZ2",
    "A4",
    "S4",
    "A5",
    "S5",
    "(A4xA5):2",
    "S4xS5",
    "PSL(2,9)",
    "PGL(2,9)",
    "M10",
    "PSigmaL(2,9)",
    "PGammaL(2,9)",
    "PGL(2,11)",
    "PSL(2,19)",
    "Z2^4:S5",
    "AGL(2,4)",
    "AGammaL(2,4)",
    "A9",
    "S9",
    "Suz(8)",
];

/// Order of the Suzuki group Sz(8), q²(q²+1)(q−1) at q = 8.
pub const SUZ8_ORDER: u128 = 29_120;

fn cyc(n: usize, cycles: &[&[usize]]) -> Result<Permutation> {
    Permutation::from_cycles(n, cycles)
}

/// x ↦ x + 1 and x ↦ 2x on GF(5), shifted to start at `offset`.
pub(crate) fn agl15_generators(degree: usize, offset: usize) -> Result<Vec<Permutation>> {
    let o = offset;
    Ok(vec![
        cyc(degree, &[&[o, o + 1, o + 2, o + 3, o + 4]])?,
        cyc(degree, &[&[o + 1, o + 2, o + 4, o + 3]])?,
    ])
}

/// S4 × S5 on 9 points as the stabilizer of {0,1,2,3}; with `even`, its
/// intersection with A9.
pub fn young_subgroup_4_5(even: bool) -> Result<PermGroup> {
    let gens = if even {
        vec![
            cyc(9, &[&[0, 1, 2]])?,
            cyc(9, &[&[1, 2, 3]])?,
            cyc(9, &[&[4, 5, 6]])?,
            cyc(9, &[&[4, 5, 6, 7, 8]])?,
            cyc(9, &[&[0, 1], &[4, 5]])?,
        ]
    } else {
        vec![
            cyc(9, &[&[0, 1]])?,
            cyc(9, &[&[0, 1, 2, 3]])?,
            cyc(9, &[&[4, 5]])?,
            cyc(9, &[&[4, 5, 6, 7, 8]])?,
        ]
    };
    Ok(PermGroup::new(9, gens)?.freeze())
}

/// Z₂⁴ ⋊ S₅ on 16 points via the deleted permutation module over GF(2).
pub fn clebsch_affine_group() -> Result<AffineGroup> {
    let f = Field::prime(2)?;
    let gens = [cyc(5, &[&[0, 1, 2, 3, 4]])?, cyc(5, &[&[0, 1]])?];
    AffineGroup::new(deleted_permutation_rep(f, &gens)?)
}

/// A permutation construction of a catalogue group.
pub fn catalogue_group(name: &str) -> Result<PermGroup> {
    let g = match name {
        "1" => PermGroup::trivial(1),
        "Z2" => PermGroup::cyclic(2),
        "Z4" => PermGroup::cyclic(4),
        "Z5" => PermGroup::cyclic(5),
        "V4" => PermGroup::new(4, vec![cyc(4, &[&[0, 1], &[2, 3]])?, cyc(4, &[&[0, 2], &[1, 3]])?])?,
        "D5" => PermGroup::dihedral(5),
        "D10" => PermGroup::dihedral(10),
        "AGL(1,5)" => PermGroup::new(5, agl15_generators(5, 0)?)?,
        "AGL(1,5)xZ2" => {
            let mut gens = agl15_generators(7, 0)?;
            gens.push(cyc(7, &[&[5, 6]])?);
            PermGroup::new(7, gens)?
        }
        "A4" => PermGroup::alternating(4),
        "S4" => PermGroup::symmetric(4),
        "A5" => PermGroup::alternating(5),
        "S5" => PermGroup::symmetric(5),
        "(A4xA5):2" => young_subgroup_4_5(true)?,
        "S4xS5" => young_subgroup_4_5(false)?,
        "PSL(2,9)" => ProjectiveLine::new(9)?.group(LineGroup::Psl)?,
        "PGL(2,9)" => ProjectiveLine::new(9)?.group(LineGroup::Pgl)?,
        "M10" => ProjectiveLine::new(9)?.group(LineGroup::PslTwisted)?,
        "PSigmaL(2,9)" => ProjectiveLine::new(9)?.group(LineGroup::Psigmal)?,
        "PGammaL(2,9)" => ProjectiveLine::new(9)?.group(LineGroup::Pgammal)?,
        "PGL(2,11)" => ProjectiveLine::new(11)?.group(LineGroup::Pgl)?,
        "PSL(2,19)" => ProjectiveLine::new(19)?.group(LineGroup::Psl)?,
        "Z2^4:S5" => clebsch_affine_group()?.group,
        "AGL(2,4)" => affine_plane_group(false)?,
        "AGammaL(2,4)" => affine_plane_group(true)?,
        "A9" => PermGroup::alternating(9),
        "S9" => PermGroup::symmetric(9),
        "Suz(8)" => return Err(Error::Unsupported("Suz(8) is available only from a generator file".into())),
        other => return arg(format!("unknown catalogue group `{other}`")),
    };
    Ok(g.freeze())
}

fn compute_fingerprint(name: &str) -> Result<Fingerprint> {
    if name == "Suz(8)" {
        return Ok(Fingerprint {
            order: SUZ8_ORDER,
            order_histogram: BTreeMap::new(),
            abelian: false,
            derived_order: None,
        });
    }
    catalogue_group(name)?.fingerprint()
}

fn table() -> &'static Vec<(&'static str, Fingerprint)> {
    static TABLE: OnceLock<Vec<(&'static str, Fingerprint)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        CATALOGUE
            .iter()
            .map(|&n| (n, compute_fingerprint(n).expect("catalogue constructions are valid")))
            .collect()
    })
}

pub fn catalogue_fingerprint(name: &str) -> Result<Fingerprint> {
    table()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, fp)| fp.clone())
        .ok_or_else(|| Error::Argument(format!("unknown catalogue group `{name}`")))
}

/// Name of the catalogue group with this fingerprint.
pub fn identify(fp: &Fingerprint) -> Option<&'static str> {
    table().iter().find(|(_, f)| f == fp).map(|(n, _)| *n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_pairwise_distinct() {
        let t = table();
        for (i, (a, fa)) in t.iter().enumerate() {
            for (b, fb) in &t[i + 1..] {
                assert_ne!(fa, fb, "{a} and {b} share a fingerprint");
            }
        }
    }

    #[test]
    fn agl_and_d10_differ_by_order_four_elements() {
        let agl = catalogue_fingerprint("AGL(1,5)").unwrap();
        let d10 = catalogue_fingerprint("D10").unwrap();
        assert_eq!(agl.order, 20);
        assert_eq!(d10.order, 20);
        assert!(agl.count_of_order(4) > 0);
        assert_eq!(d10.count_of_order(4), 0);
        assert!(d10.count_of_order(10) > 0);
    }

    #[test]
    fn index_two_overgroups_of_psl_2_9() {
        let pgl = catalogue_fingerprint("PGL(2,9)").unwrap();
        let m10 = catalogue_fingerprint("M10").unwrap();
        let s6 = catalogue_fingerprint("PSigmaL(2,9)").unwrap();
        assert!(pgl.count_of_order(10) > 0 && m10.count_of_order(10) == 0);
        assert!(m10.count_of_order(8) > 0 && s6.count_of_order(8) == 0);
        assert!(s6.count_of_order(6) > 0 && m10.count_of_order(6) == 0);
        // M10 has no involutions outside PSL(2,9): same count as A6 (45).
        assert_eq!(m10.count_of_order(2), 45);
    }
}
