//! Centralizers and module decompositions of the subgroups Ĥ ≤ 2·S₅⁻ ≤ Sp(6,p)
//! whose normalizer quotients appear in the maximal-subgroup tables.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::report::{timed_check, Report};
use crate::atlas::{build_2s5minus, derived_2a5_over_prime, locate_subrep};
use crate::error::{arg, Error, Result};
use crate::ffalg::{bilinear, centralizer_algebra, direct_summands, Fe, Field, MatRep, Matrix, MatrixGroup};
use crate::perm::{gcd, lcm};

/// Largest prime accepted by [`centralizer_group`].
pub const MAX_CENTRALIZER_PRIME: u64 = 60;
const HAT_BOUND: usize = 64;

/// Which Ĥ is examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// Ĥ = Z₅ ⋊ Z₈ in 2·S₅⁻, p ≡ 7, 23 (mod 40).
    Lemma61,
    /// Ĥ = 2·S₄⁻ in 2·S₅⁻, p ≡ ±1 (mod 8).
    Row12,
    /// Ĥ = 2·A₄ in 2·A₅, p ≡ 13, 37, 43, 67 (mod 120).
    Row9,
    /// Ĥ = 2·A₄ in 2·A₅, p ≡ 53, 77, 83, 107 (mod 120).
    Row10,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Lemma61, Target::Row12, Target::Row9, Target::Row10];

    pub fn name(self) -> &'static str {
        match self {
            Target::Lemma61 => "lemma61",
            Target::Row12 => "row12",
            Target::Row9 => "row9",
            Target::Row10 => "row10",
        }
    }

    pub fn admits(self, p: u64) -> bool {
        match self {
            Target::Lemma61 => [7, 23].contains(&(p % 40)),
            Target::Row12 => [1, 7].contains(&(p % 8)),
            Target::Row9 => [13, 37, 43, 67].contains(&(p % 120)),
            Target::Row10 => [53, 77, 83, 107].contains(&(p % 120)),
        }
    }

    pub fn hat_order(self) -> usize {
        match self {
            Target::Lemma61 => 40,
            Target::Row12 => 48,
            Target::Row9 | Target::Row10 => 24,
        }
    }

    pub fn expected_algebra_dim(self) -> usize {
        match self {
            Target::Row12 => 2,
            _ => 3,
        }
    }

    /// Expected cyclic factors of the centralizer in Sp(6,p).
    pub fn expected_structure(self, p: u64) -> Vec<u64> {
        match self {
            Target::Lemma61 | Target::Row10 => vec![p + 1, 2],
            Target::Row9 => vec![p - 1, 2],
            Target::Row12 => vec![2, 2],
        }
    }

    /// Expected cyclic factors of N/H = C/Z(Ĥ).
    pub fn expected_quotient(self, p: u64) -> Vec<u64> {
        match self {
            Target::Lemma61 | Target::Row10 => vec![p + 1],
            Target::Row9 => vec![p - 1],
            Target::Row12 => vec![2],
        }
    }

    /// Primes pinned in the default suite.
    pub fn pinned_primes(self) -> &'static [u64] {
        match self {
            Target::Lemma61 => &[7, 23, 47],
            Target::Row12 => &[7, 17],
            Target::Row9 => &[13, 37],
            Target::Row10 => &[53],
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Target> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown target `{s}` (expected lemma61, row12, row9 or row10)")))
    }
}

/// `Z_a × Z_b × …` notation for a list of cyclic factors; `1` when empty.
pub fn structure_name(factors: &[u64]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x")
}

/// Ĥ as a representation over GF(p) carrying the invariant form J.
pub fn hat_subgroup(p: u64, target: Target, seed: u64) -> Result<MatRep> {
    if p > MAX_CENTRALIZER_PRIME {
        return arg(format!("p = {p} exceeds the bound {MAX_CENTRALIZER_PRIME}"));
    }
    if !target.admits(p) {
        return arg(format!("p = {p} violates the congruence for {target}"));
    }
    let ambient = match target {
        Target::Lemma61 | Target::Row12 => build_2s5minus(p)?,
        Target::Row9 | Target::Row10 => derived_2a5_over_prime(p, seed)?,
    };
    if ambient.field().is_extension() {
        return Err(Error::Internal(format!("{target} at p = {p} is not realized over GF(p)")));
    }
    locate_subrep(&ambient, target.hat_order(), seed)
}

/// The centralizer of Ĥ in Sp(6,p), listed element by element.
///
/// Invariants: closed under products and inverses, every element commutes
/// with Ĥ and preserves J, and the group is abelian of rank at most two with
/// `structure = [m, n]`, `n | m`.
#[derive(Clone, Debug)]
pub struct CentralizerGroup {
    pub p: u64,
    pub target: Target,
    pub algebra_dim: usize,
    pub hat: MatRep,
    pub elements: Vec<Matrix>,
    /// Cyclic factors of C, largest first, trivial factors dropped.
    pub structure: Vec<u64>,
    /// Cyclic factors of C/⟨−I⟩ ≅ N/H, under N = CĤ.
    pub quotient_structure: Vec<u64>,
}

impl CentralizerGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Enumerates every `X` in the centralizer algebra with `XᵀJX = J`.
pub fn centralizer_group(p: u64, target: Target, seed: u64) -> Result<CentralizerGroup> {
    let hat = hat_subgroup(p, target, seed)?;
    let j = hat.form.clone().ok_or_else(|| Error::Internal("Ĥ carries no form".into()))?;
    let basis = centralizer_algebra(&hat);
    let f = hat.field();
    let k = basis.len() as u32;
    let total = p.checked_pow(k).filter(|&t| t <= 1 << 24).ok_or_else(|| {
        Error::Resource(format!("centralizer algebra of dimension {k} is too large to enumerate"))
    })?;
    let elements: Vec<Matrix> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut x = Matrix::zero(f, 6, 6);
            for b in &basis {
                let c = f.from_i64((code % p) as i64);
                code /= p;
                if !c.is_zero() {
                    x = x.add(&b.scale(c));
                }
            }
            (x.transpose().mul(&j).mul(&x) == j).then_some(x)
        })
        .collect();
    let orders: Vec<u64> = elements
        .iter()
        .map(|x| x.order(4 * p * p).ok_or_else(|| Error::Internal("centralizer element of huge order".into())))
        .collect::<Result<_>>()?;
    let structure = abelian_structure(elements.len() as u64, &orders)?;
    let minus = Matrix::scalar(f, 6, f.from_i64(-1));
    let quotient_orders: Vec<u64> = elements
        .iter()
        .map(|x| projective_order(x, &minus))
        .collect();
    // Each coset {x, −x} is counted twice, which the counting test tolerates
    // after halving.
    let quotient_structure = abelian_structure_halved(elements.len() as u64 / 2, &quotient_orders)?;
    Ok(CentralizerGroup {
        p,
        target,
        algebra_dim: basis.len(),
        hat,
        elements,
        structure,
        quotient_structure,
    })
}

fn projective_order(x: &Matrix, minus: &Matrix) -> u64 {
    let mut y = x.clone();
    let mut k = 1;
    while !y.is_identity() && y != *minus {
        y = y.mul(x);
        k += 1;
    }
    k
}

/// Cyclic factors `[m, n]` of an abelian group of rank at most two, from its
/// element orders: m is the exponent and the solution counts
/// `#{x : x^k = 1} = gcd(k,m)·gcd(k,n)` are checked for every divisor k.
pub fn abelian_structure(order: u64, element_orders: &[u64]) -> Result<Vec<u64>> {
    structure_from_counts(order, element_orders, 1)
}

fn abelian_structure_halved(order: u64, doubled_orders: &[u64]) -> Result<Vec<u64>> {
    structure_from_counts(order, doubled_orders, 2)
}

fn structure_from_counts(order: u64, element_orders: &[u64], multiplicity: u64) -> Result<Vec<u64>> {
    if element_orders.len() as u64 != order * multiplicity {
        return Err(Error::Validation("element count disagrees with the order".into()));
    }
    let m = element_orders.iter().fold(1, |a, &b| lcm(a, b));
    if m == 0 || order % m != 0 {
        return Err(Error::Validation(format!("exponent {m} does not divide order {order}")));
    }
    let n = order / m;
    if m % n != 0 {
        return Err(Error::Validation(format!("order {order} is not that of Z{m} x Z{n}")));
    }
    for k in (1..=order).filter(|k| order % k == 0) {
        let count = element_orders.iter().filter(|&&o| k % o == 0).count() as u64 / multiplicity;
        if count != gcd(k, m) * gcd(k, n) {
            return Err(Error::Validation(format!("not of rank at most two: {count} solutions of x^{k} = 1")));
        }
    }
    Ok([m, n].into_iter().filter(|&c| c > 1).collect())
}

/// Verifies the centralizer against the expected structure.
pub fn centralizer_check(p: u64, target: Target, seed: u64) -> Report {
    timed_check(&format!("CENT.{target}.p{p}"), seed, |r| {
        r.assume("N = CĤ");
        let c = centralizer_group(p, target, seed)?;
        r.compare("algebraDim", c.algebra_dim, target.expected_algebra_dim());
        let expected = target.expected_structure(p);
        r.compare("order", c.order(), expected.iter().product::<u64>());
        r.compare("structure", structure_name(&c.structure), structure_name(&expected));
        r.compare(
            "normQuotient",
            structure_name(&c.quotient_structure),
            structure_name(&target.expected_quotient(p)),
        );
        let closed = is_closed_abelian(&c);
        let commutes = c.elements.iter().all(|x| c.hat.generators().iter().all(|g| x.mul(g) == g.mul(x)));
        r.compare("closedAbelian", closed, true);
        r.compare("commutesWithHat", commutes, true);
        Ok(())
    })
}

fn is_closed_abelian(c: &CentralizerGroup) -> bool {
    let set: HashSet<&Matrix> = c.elements.iter().collect();
    c.elements.par_iter().all(|x| {
        x.inverse().is_some_and(|xi| set.contains(&xi))
            && c.elements.iter().all(|y| {
                let xy = x.mul(y);
                xy == y.mul(x) && set.contains(&xy)
            })
    })
}

/// How the form restricts to a summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormType {
    Nondegenerate,
    TotallyIsotropic,
    Degenerate,
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Nondegenerate => "nondegenerate",
            FormType::TotallyIsotropic => "isotropic",
            FormType::Degenerate => "degenerate",
        })
    }
}

/// One irreducible summand of V restricted to Ĥ.
#[derive(Clone, Debug)]
pub struct SummandInfo {
    pub dim: usize,
    /// Dimension of End(U); 1 exactly when U is absolutely irreducible.
    pub endomorphism_dim: usize,
    pub form: FormType,
    pub basis: Vec<Vec<Fe>>,
}

/// The summands of V restricted to Ĥ, sorted by dimension then form type.
pub fn decompose(hat: &MatRep, seed: u64) -> Result<Vec<SummandInfo>> {
    let j = hat.form.clone().ok_or_else(|| Error::Argument("representation carries no form".into()))?;
    let group = MatrixGroup::of_rep(hat, HAT_BOUND)?;
    let f: Field = hat.field();
    let mut out: Vec<SummandInfo> = direct_summands(hat, group.elements(), seed)?
        .into_iter()
        .map(|s| {
            let basis = s.subspace.basis().to_vec();
            let gram = Matrix::from_fn(f, basis.len(), basis.len(), |a, b| bilinear(&j, &basis[a], &basis[b]));
            let form = if gram.is_zero() {
                FormType::TotallyIsotropic
            } else if gram.is_invertible() {
                FormType::Nondegenerate
            } else {
                FormType::Degenerate
            };
            SummandInfo {
                dim: basis.len(),
                endomorphism_dim: centralizer_algebra(&s.rep).len(),
                form,
                basis,
            }
        })
        .collect();
    out.sort_by_key(|s| (s.dim, s.form as u8, s.endomorphism_dim));
    Ok(out)
}

/// Whether the span of two totally isotropic summands is nondegenerate.
fn paired(j: &Matrix, a: &SummandInfo, b: &SummandInfo) -> bool {
    let f = j.field();
    let cross = Matrix::from_fn(f, a.dim, b.dim, |x, y| bilinear(j, &a.basis[x], &b.basis[y]));
    a.dim == b.dim && cross.is_invertible()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Checks the constituent dimensions, absolute irreducibility and form type
/// of every summand of V restricted to Ĥ.
pub fn decomposition_check(p: u64, target: Target, seed: u64) -> Report {
    timed_check(&format!("DECOMP.{target}.p{p}"), seed, |r| {
        let hat = hat_subgroup(p, target, seed)?;
        let parts = decompose(&hat, seed)?;
        let j = hat.form.clone().expect("hat carries J");
        r.compare("dims", join(parts.iter().map(|s| s.dim)), match target {
            Target::Row9 => "2,2,2",
            _ => "2,4",
        });
        let abs = join(parts.iter().map(|s| if s.endomorphism_dim == 1 { "abs" } else { "nonabs" }));
        let forms = join(parts.iter().map(|s| s.form));
        match target {
            Target::Row12 => {
                r.compare("absIrreducible", abs, "abs,abs");
                r.compare("forms", forms, "nondegenerate,nondegenerate");
            }
            Target::Lemma61 => {
                r.compare("absIrreducible", abs, "nonabs,abs");
                r.compare("forms", forms, "nondegenerate,nondegenerate");
            }
            Target::Row10 => {
                r.compare("absIrreducible", abs, "abs,nonabs");
                r.compare("forms", forms, "nondegenerate,nondegenerate");
            }
            Target::Row9 => {
                r.measure("absIrreducible", abs);
                r.compare("forms", forms, "nondegenerate,isotropic,isotropic");
                let iso: Vec<&SummandInfo> =
                    parts.iter().filter(|s| s.form == FormType::TotallyIsotropic).collect();
                let pair = iso.len() == 2 && paired(&j, iso[0], iso[1]);
                r.compare("isotropicPaired", pair, true);
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_of_known_groups() {
        // Z4 × Z2: orders 1,2,2,2,4,4,4,4
        assert_eq!(abelian_structure(8, &[1, 2, 2, 2, 4, 4, 4, 4]).unwrap(), vec![4, 2]);
        // Z8
        assert_eq!(abelian_structure(8, &[1, 2, 4, 4, 8, 8, 8, 8]).unwrap(), vec![8]);
        // Z2³ has rank three
        assert!(abelian_structure(8, &[1, 2, 2, 2, 2, 2, 2, 2]).is_err());
    }

    #[test]
    fn congruences() {
        assert!(Target::Lemma61.admits(7) && Target::Lemma61.admits(47) && !Target::Lemma61.admits(17));
        assert!(Target::Row9.admits(13) && Target::Row9.admits(37));
        assert!(Target::Row10.admits(53));
        assert!(centralizer_group(11, Target::Row12, 0).is_err());
        assert_eq!("row9".parse::<Target>().unwrap(), Target::Row9);
    }

    #[test]
    fn lemma61_at_seven() {
        let c = centralizer_group(7, Target::Lemma61, 0).unwrap();
        assert_eq!(c.structure, vec![8, 2]);
        assert_eq!(c.quotient_structure, vec![8]);
    }
}
