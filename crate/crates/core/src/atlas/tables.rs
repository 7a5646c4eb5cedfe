//! Row constructors for the sporadic and infinite families of primitive groups
//! with a suborbit of length five.

use std::fmt;
use std::path::Path;

use super::affine::{AffineGroup, MAX_AFFINE_DEGREE};
use super::catalogue::{agl15_generators, catalogue_fingerprint, young_subgroup_4_5, SUZ8_ORDER};
use super::projective::{LineGroup, ProjectiveLine};
use crate::error::{arg, Error, Result};
use crate::ffalg::small_reps::quadratic_order5;
use crate::ffalg::{deleted_permutation_rep, inverting_involution, is_prime, phi5_companion, Field, MatRep};
use crate::perm::{coset_action, load_generators, PermGroup, Permutation, DEFAULT_COSET_BOUND};

/// Largest coset-action degree built for the PSL(2,·) families.
pub const MAX_PROJECTIVE_FAMILY_DEGREE: u128 = 20_000;

/// Which table a row belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Table {
    Sporadic,
    Infinite,
}

/// One table row together with its parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub table: Table,
    pub row: u8,
    pub p: Option<u64>,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.table {
            Table::Sporadic => 1,
            Table::Infinite => 2,
        };
        write!(f, "T{t}.{}", self.row)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        Ok(())
    }
}

/// Row data that does not depend on the construction.
#[derive(Clone, Copy, Debug)]
pub struct RowInfo {
    pub group: &'static str,
    pub stabilizer: &'static str,
}

const SPORADIC: [RowInfo; 13] = [
    RowInfo { group: "A5", stabilizer: "D5" },
    RowInfo { group: "S5", stabilizer: "AGL(1,5)" },
    RowInfo { group: "PGL(2,9)", stabilizer: "D10" },
    RowInfo { group: "M10", stabilizer: "AGL(1,5)" },
    RowInfo { group: "PGammaL(2,9)", stabilizer: "AGL(1,5)xZ2" },
    RowInfo { group: "PGL(2,11)", stabilizer: "D10" },
    RowInfo { group: "A9", stabilizer: "(A4xA5):2" },
    RowInfo { group: "S9", stabilizer: "S4xS5" },
    RowInfo { group: "PSL(2,19)", stabilizer: "D10" },
    RowInfo { group: "Suz(8)", stabilizer: "AGL(1,5)" },
    RowInfo { group: "J3", stabilizer: "AGL(2,4)" },
    RowInfo { group: "J3:2", stabilizer: "AGammaL(2,4)" },
    RowInfo { group: "Th", stabilizer: "S5" },
];

const SPORADIC_INDEX: [u128; 13] = [
    6,
    6,
    36,
    36,
    36,
    66,
    126,
    126,
    171,
    1_456,
    17_442,
    17_442,
    756_216_199_065_600,
];

const INFINITE: [RowInfo; 14] = [
    RowInfo { group: "Zp:Z5", stabilizer: "Z5" },
    RowInfo { group: "Zp^2:Z5", stabilizer: "Z5" },
    RowInfo { group: "Zp^4:Z5", stabilizer: "Z5" },
    RowInfo { group: "Zp^2:D5", stabilizer: "D5" },
    RowInfo { group: "Zp^4:D5", stabilizer: "D5" },
    RowInfo { group: "Zp^4:AGL(1,5)", stabilizer: "AGL(1,5)" },
    RowInfo { group: "Zp^4:A5", stabilizer: "A5" },
    RowInfo { group: "Zp^4:S5", stabilizer: "S5" },
    RowInfo { group: "PSL(2,p)", stabilizer: "A5" },
    RowInfo { group: "PSL(2,p^2)", stabilizer: "A5" },
    RowInfo { group: "PSigmaL(2,p^2)", stabilizer: "S5" },
    RowInfo { group: "PSp(6,p)", stabilizer: "S5" },
    RowInfo { group: "PSp(6,p)", stabilizer: "A5" },
    RowInfo { group: "PGSp(6,p)", stabilizer: "S5" },
];

pub fn row_info(table: Table, row: u8) -> Result<RowInfo> {
    let list: &[RowInfo] = match table {
        Table::Sporadic => &SPORADIC,
        Table::Infinite => &INFINITE,
    };
    row.checked_sub(1)
        .and_then(|i| list.get(i as usize))
        .copied()
        .ok_or_else(|| Error::Argument(format!("no row {row} in this table")))
}

/// Dimension d of the affine rows, with degree p^d.
fn affine_dimension(row: u8) -> usize {
    match row {
        1 => 1,
        2 | 4 => 2,
        _ => 4,
    }
}

/// Whether `p` satisfies the congruence conditions of an infinite-family row.
pub fn infinite_row_condition(row: u8, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return arg(format!("{p} is not prime"));
    }
    Ok(match row {
        1 => p % 5 == 1,
        2 => p % 5 == 4,
        3 | 5 => matches!(p % 5, 2 | 3),
        4 => matches!(p % 5, 1 | 4),
        6..=8 => p != 5,
        9 => matches!(p % 40, 1 | 9 | 31 | 39),
        10 | 11 => matches!(p % 10, 3 | 7),
        12 => matches!(p % 8, 1 | 7),
        13 => matches!(p % 40, 3 | 13 | 27 | 37),
        14 => matches!(p % 8, 3 | 5) && p >= 11,
        _ => return arg(format!("no row {row} in the infinite families")),
    })
}

/// The index column of a row, where it fits in 128 bits.
pub fn expected_index(spec: &GroupSpec) -> Result<u128> {
    match spec.table {
        Table::Sporadic => {
            row_info(Table::Sporadic, spec.row)?;
            Ok(SPORADIC_INDEX[spec.row as usize - 1])
        }
        Table::Infinite => {
            let p = spec.p.ok_or_else(|| Error::Argument("infinite-family rows need p".into()))? as u128;
            Ok(match spec.row {
                1..=8 => p.pow(affine_dimension(spec.row) as u32),
                9 => (p * p * p - p) / 120,
                10 | 11 => (p.pow(6) - p * p) / 120,
                12..=14 => {
                    let core = p.pow(9) * (p.pow(6) - 1) * (p.pow(4) - 1) * (p * p - 1);
                    if spec.row == 12 {
                        core / 240
                    } else {
                        core / 120
                    }
                }
                r => return arg(format!("no row {r} in the infinite families")),
            })
        }
    }
}

/// A constructed row: the group, the stabilizer of point 0 and the data
/// the row claims for them.
#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: GroupSpec,
    pub group: PermGroup,
    pub stabilizer: PermGroup,
    pub info: RowInfo,
    pub expected_index: u128,
    /// Present for the affine rows.
    pub affine: Option<AffineGroup>,
}

fn cyc(n: usize, cycles: &[&[usize]]) -> Result<Permutation> {
    Permutation::from_cycles(n, cycles)
}

/// `group` on the cosets of `sub`, with the stabilizer of coset 0.
fn on_cosets(group: &PermGroup, sub: &PermGroup, bound: usize) -> Result<(PermGroup, PermGroup)> {
    let action = coset_action(group, sub, bound)?.action;
    let stab = action.point_stabilizer(0)?;
    Ok((action, stab))
}

fn locate(group: &PermGroup, name: &str, seed: u64) -> Result<PermGroup> {
    group.find_subgroup(&catalogue_fingerprint(name)?, seed)
}

/// Builds a sporadic row. Row 10 needs Suz(8) generators from a file; rows
/// 11–13 are refused.
pub fn build_table1_row(row: u8, generators: Option<&Path>, seed: u64) -> Result<Construction> {
    let info = row_info(Table::Sporadic, row)?;
    let (group, stabilizer) = match row {
        1 => {
            let a5 = PermGroup::alternating(5).freeze();
            let d5 = PermGroup::new(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])?, cyc(5, &[&[1, 4], &[2, 3]])?])?;
            on_cosets(&a5, &d5, DEFAULT_COSET_BOUND)?
        }
        2 => {
            let s5 = PermGroup::symmetric(5).freeze();
            on_cosets(&s5, &PermGroup::new(5, agl15_generators(5, 0)?)?, DEFAULT_COSET_BOUND)?
        }
        3..=6 | 9 => {
            let (q, kind) = match row {
                3 => (9, LineGroup::Pgl),
                4 => (9, LineGroup::PslTwisted),
                5 => (9, LineGroup::Pgammal),
                6 => (11, LineGroup::Pgl),
                _ => (19, LineGroup::Psl),
            };
            let g = ProjectiveLine::new(q)?.group(kind)?;
            let sub = locate(&g, info.stabilizer, seed)?;
            on_cosets(&g, &sub, DEFAULT_COSET_BOUND)?
        }
        7 | 8 => {
            let even = row == 7;
            let g = if even { PermGroup::alternating(9) } else { PermGroup::symmetric(9) }.freeze();
            on_cosets(&g, &young_subgroup_4_5(even)?, DEFAULT_COSET_BOUND)?
        }
        10 => {
            let path = generators.ok_or_else(|| {
                Error::Unsupported("Suz(8) needs a generator file (none supplied)".into())
            })?;
            let g = load_generators(path)?.freeze();
            if g.order()? != SUZ8_ORDER {
                return Err(Error::Validation(format!(
                    "generators give a group of order {}, not |Suz(8)| = {SUZ8_ORDER}",
                    g.order()?
                )));
            }
            let sub = locate(&g, info.stabilizer, seed)?;
            on_cosets(&g, &sub, DEFAULT_COSET_BOUND)?
        }
        11 | 12 => {
            return Err(Error::Unsupported(
                "J3 needs external generators and a degree-17442 coset action".into(),
            ))
        }
        _ => return Err(Error::Unsupported("Th is out of scope".into())),
    };
    let spec = GroupSpec {
        table: Table::Sporadic,
        row,
        p: None,
    };
    Ok(Construction {
        expected_index: expected_index(&spec)?,
        spec,
        group,
        stabilizer,
        info,
        affine: None,
    })
}

/// Linear part of an affine infinite-family row.
pub fn affine_linear_part(row: u8, p: u64, seed: u64) -> Result<MatRep> {
    let f = Field::prime(p)?;
    match row {
        1..=3 => MatRep::new(f, affine_dimension(row), vec![phi5_companion(p, affine_dimension(row))?]),
        4 | 5 => {
            let rho = if row == 4 { quadratic_order5(f)? } else { phi5_companion(p, 4)? };
            let s = inverting_involution(&rho, seed)?;
            MatRep::new(f, rho.rows(), vec![rho, s])
        }
        6 => deleted_permutation_rep(f, &agl15_generators(5, 0)?),
        7 => deleted_permutation_rep(f, &[cyc(5, &[&[0, 1, 2, 3, 4]])?, cyc(5, &[&[0, 1, 2]])?]),
        8 => deleted_permutation_rep(f, &[cyc(5, &[&[0, 1, 2, 3, 4]])?, cyc(5, &[&[0, 1]])?]),
        _ => arg(format!("row {row} is not affine")),
    }
}

/// `PSL(2,p)` on the cosets of a located `A₅`, with no congruence check
/// beyond the existence of `A₅` (p ≡ ±1 mod 10).
pub fn psl2_on_a5_cosets(p: u64, seed: u64) -> Result<(PermGroup, PermGroup)> {
    if !is_prime(p) || !matches!(p % 10, 1 | 9) {
        return arg(format!("PSL(2,{p}) has no A5 subgroup unless p ≡ ±1 (mod 10)"));
    }
    projective_on_cosets(p, LineGroup::Psl, "A5", seed)
}

fn projective_on_cosets(q: u64, kind: LineGroup, sub: &str, seed: u64) -> Result<(PermGroup, PermGroup)> {
    let line = ProjectiveLine::new(q)?;
    let degree = line.group_order(kind) / catalogue_fingerprint(sub)?.order;
    if degree > MAX_PROJECTIVE_FAMILY_DEGREE {
        return Err(Error::Resource(format!(
            "degree {degree} exceeds {MAX_PROJECTIVE_FAMILY_DEGREE}"
        )));
    }
    let g = line.group(kind)?;
    let m = locate(&g, sub, seed)?;
    on_cosets(&g, &m, MAX_PROJECTIVE_FAMILY_DEGREE as usize)
}

/// Builds an infinite-family row at the prime `p`. Rows 12–14 are refused:
/// their permutation degrees are astronomical.
pub fn build_table2_row(row: u8, p: u64, seed: u64) -> Result<Construction> {
    let info = row_info(Table::Infinite, row)?;
    if !infinite_row_condition(row, p)? {
        return arg(format!("p = {p} violates the conditions of row {row}"));
    }
    let spec = GroupSpec {
        table: Table::Infinite,
        row,
        p: Some(p),
    };
    let expected = expected_index(&spec)?;
    let (group, stabilizer, affine) = match row {
        1..=8 => {
            if expected > MAX_AFFINE_DEGREE as u128 {
                return Err(Error::Resource(format!("degree {expected} exceeds {MAX_AFFINE_DEGREE}")));
            }
            let aff = AffineGroup::new(affine_linear_part(row, p, seed)?)?;
            let stab = aff.zero_stabilizer()?;
            (aff.group.clone(), stab, Some(aff))
        }
        9 => {
            let (g, s) = projective_on_cosets(p, LineGroup::Psl, "A5", seed)?;
            (g, s, None)
        }
        10 | 11 => {
            let (kind, sub) = if row == 10 {
                (LineGroup::Psl, "A5")
            } else {
                (LineGroup::Psigmal, "S5")
            };
            let (g, s) = projective_on_cosets(p * p, kind, sub, seed)?;
            (g, s, None)
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "row {row} has no permutation form within bounds; checked at the matrix level"
            )))
        }
    };
    Ok(Construction {
        spec,
        group,
        stabilizer,
        info,
        expected_index: expected,
        affine,
    })
}

/// Smallest primes satisfying a row's conditions, in increasing order.
pub fn smallest_valid_primes(row: u8, count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    let mut p = 2;
    while out.len() < count {
        if is_prime(p) && infinite_row_condition(row, p)? {
            out.push(p);
        }
        p += 1;
    }
    Ok(out)
}

/// Reads a generator file and freezes the group.
pub fn load_group_file(path: &Path) -> Result<PermGroup> {
    Ok(load_generators(path)?.freeze())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_of_first_rows() {
        for (row, deg) in [(1u8, 6usize), (2, 6), (6, 66)] {
            let c = build_table1_row(row, None, 0).unwrap();
            assert_eq!(c.group.degree(), deg);
            assert_eq!(c.stabilizer.fingerprint().unwrap(), catalogue_fingerprint(c.info.stabilizer).unwrap());
        }
    }

    #[test]
    fn refused_rows() {
        assert!(matches!(build_table1_row(10, None, 0), Err(Error::Unsupported(_))));
        assert!(matches!(build_table1_row(13, None, 0), Err(Error::Unsupported(_))));
        assert!(matches!(build_table2_row(12, 7, 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn congruences_are_enforced() {
        assert!(matches!(build_table2_row(1, 7, 0), Err(Error::Argument(_))));
        assert!(build_table2_row(1, 11, 0).is_ok());
    }

    #[test]
    fn frobenius_row_has_two_five_point_suborbits() {
        let c = build_table2_row(1, 11, 0).unwrap();
        let mut lens: Vec<usize> = c.stabilizer.orbits().iter().map(Vec::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 5, 5]);
    }

    #[test]
    fn psl_family_degree() {
        let c = build_table2_row(9, 31, 0).unwrap();
        assert_eq!(c.group.degree(), 248);
    }

    #[test]
    fn smallest_primes() {
        assert_eq!(smallest_valid_primes(4, 2).unwrap(), vec![11, 19]);
        assert_eq!(smallest_valid_primes(6, 2).unwrap(), vec![2, 3]);
    }
}
