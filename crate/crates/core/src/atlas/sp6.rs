//! The double cover 2·S₅⁻ inside Sp(6,p), built from the icosians.
//!
//! The binary icosahedral group 2·A₅ = SL(2,5) is realized by quaternion units
//! in M₂(GF(p²)); its fifth symmetric power is the faithful symplectic
//! 6-dimensional module. The outer automorphism of 2·A₅ is Galois conjugation
//! √5 ↦ −√5 of the icosian coordinates; the intertwiner between the module and
//! its twist, rescaled into Sp(6), extends 2·A₅ to 2·S₅⁻.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{arg, Error, Result};
use crate::ffalg::{
    galois_descent, intertwiners, invariant_forms, is_alternating, is_prime, sym5_matrix, Fe, Field, MatRep,
    Matrix, MatrixGroup,
};

/// Largest prime accepted.
pub const MAX_SP6_PRIME: u64 = 1 << 16;
/// Order of 2·S₅⁻.
pub const DOUBLE_COVER_ORDER: usize = 240;
const SUBGROUP_SEARCH_BUDGET: usize = 20_000;

fn corruption(msg: impl Into<String>) -> Error {
    Error::Corruption(msg.into())
}

/// Icosian generators over GF(p²): `a = ½(1+i+j+k)` of order 6 and
/// `b = ½(φ + φ⁻¹i + j)` of order 10.
fn icosians(e: Field) -> Result<(Matrix, Matrix)> {
    let base = e.base();
    let minus_one = base.neg(base.one());
    let (x, y) = base
        .elements()
        .find_map(|x| {
            let r = base.sub(minus_one, base.mul(x, x));
            base.sqrt(r).map(|y| (x, y))
        })
        .ok_or_else(|| Error::Internal("no solution of x² + y² = −1".into()))?;
    let half = e.inv(e.from_i64(2)).ok_or_else(|| Error::Argument("characteristic 2".into()))?;
    let sqrt5 = e.sqrt(e.from_i64(5)).expect("GF(p²) contains √5");
    let phi = e.mul(e.add(e.one(), sqrt5), half);
    let phi_inv = e.inv(phi).ok_or_else(|| Error::Argument("characteristic 5".into()))?;
    let one = Matrix::identity(e, 2);
    let i = Matrix::from_fn(e, 2, 2, |r, c| match (r, c) {
        (0, 0) => x,
        (1, 1) => e.neg(x),
        _ => y,
    });
    let j = Matrix::from_fn(e, 2, 2, |r, c| match (r, c) {
        (0, 1) => e.one(),
        (1, 0) => e.neg(e.one()),
        _ => Fe::ZERO,
    });
    let k = i.mul(&j);
    let a = one.add(&i).add(&j).add(&k).scale(half);
    let b = one.scale(phi).add(&i.scale(phi_inv)).add(&j).scale(half);
    Ok((a, b))
}

/// An element of Sp(J) inducing an outer automorphism of `inner` that fixes
/// its first generator: the symplectic intertwiner `a ↦ a, b ↦ b″` for the
/// first order-10 element `b″` for which the extension has order 240.
fn outer_element(inner: &MatRep, j: &Matrix) -> Result<Matrix> {
    let e = inner.field();
    let group = MatrixGroup::of_rep(inner, 2 * DOUBLE_COVER_ORDER)?;
    let orders = group.element_orders();
    let a = inner.generators()[0].clone();
    for (idx, candidate) in group.elements().iter().enumerate() {
        if orders[idx] != 10 {
            continue;
        }
        let twisted = MatRep::new(e, 6, vec![a.clone(), candidate.clone()])?;
        let ts = intertwiners(inner, &twisted)?;
        let [t] = ts.as_slice() else { continue };
        let Some(c) = t.transpose().mul(j).mul(t).as_scalar_multiple_of(j) else {
            continue;
        };
        let Some(root) = e.sqrt(c) else { continue };
        let t1 = t.scale(e.inv(root).ok_or_else(|| corruption("zero similitude factor"))?);
        let mut gens = inner.generators().to_vec();
        gens.push(t1.clone());
        let full = MatRep::new(e, 6, gens)?;
        match MatrixGroup::of_rep(&full, 2 * DOUBLE_COVER_ORDER) {
            Ok(g) if g.order() == DOUBLE_COVER_ORDER => return Ok(t1),
            _ => continue,
        }
    }
    Err(corruption("no outer automorphism of 2·A₅ is realized in Sp(6)"))
}

/// Whether 2·S₅⁻ ⊂ Sp(6,p) is realized over GF(p) (p ≡ ±1 mod 8) rather than GF(p²).
pub fn realized_over_prime_field(p: u64) -> bool {
    matches!(p % 8, 1 | 7)
}

/// The 6-dimensional symplectic representation of 2·S₅⁻ with its form attached.
/// Generators: images of `a`, `b` and the outer element.
pub fn build_2s5minus(p: u64) -> Result<MatRep> {
    if !is_prime(p) || p == 2 || p == 5 || p > MAX_SP6_PRIME {
        return arg(format!("p = {p} must be an odd prime other than 5, at most {MAX_SP6_PRIME}"));
    }
    let e = Field::quadratic(p)?;
    let (a, b) = icosians(e)?;
    for (m, want) in [(&a, 6u64), (&b, 10)] {
        if m.order(20) != Some(want) {
            return Err(corruption(format!("icosian generator does not have order {want}")));
        }
    }
    let (a6, b6) = (sym5_matrix(&a), sym5_matrix(&b));
    let inner = MatRep::new(e, 6, vec![a6.clone(), b6.clone()])?;
    let forms = invariant_forms(&inner);
    if forms.len() != 1 || !is_alternating(&forms[0]) || !forms[0].is_invertible() {
        return Err(corruption("2·A₅ does not preserve a unique symplectic form"));
    }
    let t1 = outer_element(&inner, &forms[0])?;
    let mut rep = MatRep::new(e, 6, vec![a6, b6, t1])?;
    if realized_over_prime_field(p) {
        rep = galois_descent(&rep, 0).map_err(|err| corruption(format!("descent to GF({p}) failed: {err}")))?;
    }
    let forms = invariant_forms(&rep);
    if forms.len() != 1 {
        return Err(corruption("invariant form space is not one-dimensional"));
    }
    let rep = rep.with_form(forms[0].clone()).map_err(|err| corruption(err.to_string()))?;
    validate(&rep)?;
    Ok(rep)
}

fn validate(rep: &MatRep) -> Result<()> {
    let group = MatrixGroup::of_rep(rep, 2 * DOUBLE_COVER_ORDER)
        .map_err(|_| corruption("closure exceeds 240 elements"))?;
    if group.order() != DOUBLE_COVER_ORDER {
        return Err(corruption(format!("closure has {} elements, expected 240", group.order())));
    }
    if !group.contains_minus_identity() {
        return Err(corruption("−I is missing"));
    }
    if group.derived_subgroup().len() != 120 {
        return Err(corruption("derived subgroup is not of order 120"));
    }
    let involutions = group.element_orders().iter().filter(|&&o| o == 2).count();
    if involutions != 1 {
        return Err(corruption(format!(
            "{involutions} involutions; 2·S₅⁻ has only the central one"
        )));
    }
    let j = rep.form.as_ref().expect("form attached");
    if !group.elements().iter().all(|g| g.transpose().mul(j).mul(g) == *j) {
        return Err(corruption("form is not preserved by every element"));
    }
    Ok(())
}

impl Matrix {
    /// `c` with `self = c·other`, if `other` is nonzero and such a `c` exists.
    pub fn as_scalar_multiple_of(&self, other: &Matrix) -> Option<Fe> {
        let f = self.field();
        let (i, &pivot) = other.entries().iter().enumerate().find(|(_, a)| !a.is_zero())?;
        let c = f.div(self.entries()[i], pivot)?;
        (*self == other.scale(c)).then_some(c)
    }
}

/// Subgroup orders accepted by [`locate_subrep`].
pub const LOCATABLE_ORDERS: [usize; 4] = [24, 40, 48, 120];

/// Two generators of a subgroup of the given order containing −I:
/// 24 ↦ 2·A₄, 40 ↦ Z₅ ⋊ Z₈, 48 ↦ 2·S₄⁻, 120 ↦ 2·A₅.
pub fn locate_subrep(group_rep: &MatRep, target_order: usize, seed: u64) -> Result<MatRep> {
    if !LOCATABLE_ORDERS.contains(&target_order) {
        return arg(format!("target order {target_order} is not one of {LOCATABLE_ORDERS:?}"));
    }
    let group = MatrixGroup::of_rep(group_rep, 2 * DOUBLE_COVER_ORDER)?;
    if group.order() % target_order != 0 {
        return arg(format!(
            "target order {target_order} does not divide the group order {}",
            group.order()
        ));
    }
    let orders = group.element_orders();
    let minus = group
        .position(&Matrix::scalar(group_rep.field(), group_rep.dim(), group_rep.field().from_i64(-1)))
        .ok_or_else(|| Error::Argument("group does not contain −I".into()))?;
    // For Z₅ ⋊ Z₈ the generator orders are forced.
    let (first, second): (Vec<usize>, Vec<usize>) = if target_order == 40 {
        (
            (0..group.order()).filter(|&i| orders[i] == 5).collect(),
            (0..group.order()).filter(|&i| orders[i] == 8).collect(),
        )
    } else {
        let all: Vec<usize> = (1..group.order()).collect();
        (all.clone(), all)
    };
    if first.is_empty() || second.is_empty() {
        return Err(Error::SearchFailure("no elements of the required orders".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SUBGROUP_SEARCH_BUDGET {
        let x = first[rng.gen_range(0..first.len())];
        let y = second[rng.gen_range(0..second.len())];
        let members = group.subgroup(&[x, y]);
        if members.len() == target_order && members.binary_search(&minus).is_ok() {
            let mut sub = group.rep_of(&[x, y])?;
            sub.form = group_rep.form.clone();
            return Ok(sub);
        }
    }
    Err(Error::SearchFailure(format!(
        "no subgroup of order {target_order} after {SUBGROUP_SEARCH_BUDGET} pairs"
    )))
}

/// 2·A₅ ⊂ Sp(6,p) over GF(p) for every valid p: the derived subgroup of
/// 2·S₅⁻, descended when 2·S₅⁻ itself needs GF(p²).
pub fn derived_2a5_over_prime(p: u64, seed: u64) -> Result<MatRep> {
    let full = build_2s5minus(p)?;
    let derived = locate_subrep(&full, 120, seed)?;
    let rep = MatRep::new(derived.field(), 6, derived.generators().to_vec())?;
    let down = galois_descent(&rep, seed)?;
    let forms = invariant_forms(&down);
    if forms.len() != 1 {
        return Err(corruption("descended 2·A₅ has no unique invariant form"));
    }
    down.with_form(forms[0].clone())
}

/// Trace multiset of a 2·S₅⁻ representation, keyed by (element order, label)
/// where labels are `k` for traces of inner elements and `k√2` for the outer
/// coset. Needs p ≥ 13 so that small integers stay distinct.
pub fn trace_labels(rep: &MatRep) -> Result<BTreeMap<(u64, String), usize>> {
    let f = rep.field();
    if f.characteristic() < 13 {
        return arg("trace labels need p ≥ 13");
    }
    let e = if f.is_extension() { f } else { f.extension()? };
    let sqrt2 = e.sqrt(e.from_i64(2)).expect("GF(p²) contains √2");
    let group = MatrixGroup::of_rep(rep, 2 * DOUBLE_COVER_ORDER)?;
    let derived = group.derived_subgroup();
    let orders = group.element_orders();
    let mut out = BTreeMap::new();
    for (idx, g) in group.elements().iter().enumerate() {
        let t = g.with_field(e)?.trace();
        let inner = derived.binary_search(&idx).is_ok();
        let target = if inner { t } else { e.div(t, sqrt2).expect("nonzero") };
        let k = (-6i64..=6)
            .find(|&k| e.from_i64(k) == target)
            .ok_or_else(|| Error::Validation(format!("trace {} has no small label", e.fmt_elem(t))))?;
        let label = if inner { k.to_string() } else { format!("{k}r2") };
        *out.entry((orders[idx], label)).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_of_definition_follows_p_mod_8() {
        assert!(!build_2s5minus(7).unwrap().field().is_extension());
        assert!(build_2s5minus(13).unwrap().field().is_extension());
    }

    #[test]
    fn locate_each_order_at_7() {
        let g = build_2s5minus(7).unwrap();
        for n in LOCATABLE_ORDERS {
            let sub = locate_subrep(&g, n, 0).unwrap();
            assert_eq!(MatrixGroup::of_rep(&sub, 240).unwrap().order(), n);
        }
    }

    #[test]
    fn descended_derived_group_is_over_gf13() {
        let r = derived_2a5_over_prime(13, 0).unwrap();
        assert!(!r.field().is_extension());
        assert_eq!(MatrixGroup::of_rep(&r, 240).unwrap().order(), 120);
    }

    #[test]
    fn trace_labels_agree_across_primes() {
        let reference = trace_labels(&build_2s5minus(13).unwrap()).unwrap();
        assert_eq!(reference.values().sum::<usize>(), 240);
        for p in [17, 19, 23, 29, 31] {
            assert_eq!(trace_labels(&build_2s5minus(p).unwrap()).unwrap(), reference, "p = {p}");
        }
    }
}
