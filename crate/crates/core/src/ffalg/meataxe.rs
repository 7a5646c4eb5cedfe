//! MeatAxe-style splitting: random algebra elements, kernel spinning and
//! Norton's irreducibility test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Fe;
use super::matrix::Matrix;
use super::module::{quotient, restrict, spin, MatRep, Subspace};
use super::poly::{distinct_degree_factors, equal_degree_factor, minimal_polynomial};
use crate::error::{arg, Error, Result};

/// Random algebra elements tried before giving up on one module.
pub const MEATAXE_RETRY_BUDGET: usize = 64;
/// Largest module dimension accepted by `chop`.
pub const MAX_CHOP_DIM: usize = 16;

/// One composition factor, with lifted representatives of its basis in the
/// ambient module.
#[derive(Clone, Debug)]
pub struct Constituent {
    pub rep: MatRep,
    pub basis: Vec<Vec<Fe>>,
}

impl Constituent {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

/// Outcome of one splitting attempt.
#[derive(Clone, Debug)]
pub enum Split {
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
    /// Norton's test certified irreducibility.
    Irreducible,
}

fn random_algebra_element<R: Rng>(rep: &MatRep, rng: &mut R) -> Matrix {
    let f = rep.field();
    let n = rep.dim();
    let gens = rep.generators();
    let mut acc = Matrix::zero(f, n, n);
    let mut word = Matrix::identity(f, n);
    for _ in 0..6 {
        if !gens.is_empty() {
            word = word.mul(&gens[rng.gen_range(0..gens.len())]);
        }
        acc = acc.add(&word.scale(f.random(rng)));
    }
    acc
}

/// Annihilator `{x : s·x = 0 for all s ∈ dual}`.
fn annihilator(dual: &Subspace, rep: &MatRep) -> Subspace {
    let m = dual.basis_matrix();
    Subspace::spanned_by(rep.field(), rep.dim(), &m.nullspace())
}

/// Looks for a proper submodule or certifies irreducibility.
pub fn split<R: Rng>(rep: &MatRep, rng: &mut R) -> Result<Split> {
    let n = rep.dim();
    if n <= 1 {
        return Ok(Split::Irreducible);
    }
    let f = rep.field();
    let dual = rep.transpose_rep();
    for _ in 0..MEATAXE_RETRY_BUDGET {
        let a = random_algebra_element(rep, rng);
        let minpoly = minimal_polynomial(&a);
        let factors = distinct_degree_factors(&minpoly, f);
        // Smallest-degree part; a single irreducible factor is split off it.
        let Some((d, g)) = factors.first() else { continue };
        let fac = equal_degree_factor(g, *d, f, rng);
        let nmat = fac.eval_matrix(&a);
        let kernel = nmat.nullspace();
        let Some(v) = kernel.first() else { continue };
        let s = spin(std::slice::from_ref(v), rep);
        if s.dim() < n {
            return Ok(Split::Reducible(s));
        }
        let kernel_t = nmat.transpose().nullspace();
        let Some(w) = kernel_t.first() else { continue };
        let st = spin(std::slice::from_ref(w), &dual);
        if st.dim() < n {
            return Ok(Split::Reducible(annihilator(&st, rep)));
        }
        if Some(kernel.len()) == fac.degree() {
            return Ok(Split::Irreducible);
        }
    }
    Err(Error::SearchFailure(format!(
        "no splitting or certificate after {MEATAXE_RETRY_BUDGET} algebra elements"
    )))
}

/// Whether the module is irreducible over its field of definition.
pub fn is_irreducible(rep: &MatRep, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(matches!(split(rep, &mut rng)?, Split::Irreducible))
}

fn lift(vectors: &[Vec<Fe>], basis: &[Vec<Fe>], rep: &MatRep) -> Vec<Vec<Fe>> {
    let f = rep.field();
    vectors
        .iter()
        .map(|c| {
            let mut out = vec![Fe::ZERO; basis.first().map_or(0, Vec::len)];
            for (ci, b) in c.iter().zip(basis) {
                for (o, bi) in out.iter_mut().zip(b) {
                    *o = f.add(*o, f.mul(*ci, *bi));
                }
            }
            out
        })
        .collect()
}

fn chop_into<R: Rng>(rep: &MatRep, basis: &[Vec<Fe>], rng: &mut R, out: &mut Vec<Constituent>) -> Result<()> {
    match split(rep, rng)? {
        Split::Irreducible => {
            out.push(Constituent {
                rep: rep.clone(),
                basis: basis.to_vec(),
            });
        }
        Split::Reducible(sub) => {
            let sub_rep = restrict(rep, &sub)?;
            chop_into(&sub_rep, &lift(sub.basis(), basis, rep), rng, out)?;
            let (quo_rep, reps) = quotient(rep, &sub)?;
            chop_into(&quo_rep, &lift(&reps, basis, rep), rng, out)?;
        }
    }
    Ok(())
}

/// Composition factors from the bottom of a composition series upwards.
pub fn chop(rep: &MatRep, seed: u64) -> Result<Vec<Constituent>> {
    if rep.dim() > MAX_CHOP_DIM {
        return arg(format!("module dimension {} exceeds {MAX_CHOP_DIM}", rep.dim()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = rep.field();
    let n = rep.dim();
    let id = Matrix::identity(f, n).row_vectors();
    let mut out = Vec::new();
    if n > 0 {
        chop_into(rep, &id, &mut rng, &mut out)?;
    }
    Ok(out)
}

/// Constituent dimensions of `chop`, sorted.
pub fn constituent_dims(rep: &MatRep, seed: u64) -> Result<Vec<usize>> {
    let mut dims: Vec<usize> = chop(rep, seed)?.iter().map(Constituent::dim).collect();
    dims.sort_unstable();
    Ok(dims)
}

/// One irreducible direct summand: its subspace of the ambient module and the action on it.
#[derive(Clone, Debug)]
pub struct Summand {
    pub subspace: Subspace,
    pub rep: MatRep,
}

/// Decomposes a completely reducible module into irreducible direct summands.
/// `elements` must list every element of the represented group; the group
/// order must be invertible in the field so that averaging yields equivariant
/// projections.
pub fn direct_summands(rep: &MatRep, elements: &[Matrix], seed: u64) -> Result<Vec<Summand>> {
    let f = rep.field();
    let order = elements.len() as u64;
    if order % f.characteristic() == 0 {
        return arg("group order divisible by the characteristic");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = Matrix::identity(f, rep.dim()).row_vectors();
    let mut out = Vec::new();
    summands_into(rep, elements, &id, &mut rng, &mut out)?;
    let n = rep.dim();
    Ok(out
        .into_iter()
        .map(|(basis, r)| Summand {
            subspace: Subspace::spanned_by(f, n, &basis),
            rep: r,
        })
        .collect())
}

fn summands_into<R: Rng>(
    rep: &MatRep,
    elements: &[Matrix],
    basis: &[Vec<Fe>],
    rng: &mut R,
    out: &mut Vec<(Vec<Vec<Fe>>, MatRep)>,
) -> Result<()> {
    let f = rep.field();
    let n = rep.dim();
    let sub = match split(rep, rng)? {
        Split::Irreducible => {
            out.push((basis.to_vec(), rep.clone()));
            return Ok(());
        }
        Split::Reducible(s) => s,
    };
    // Projection onto `sub` along standard complement, then averaged.
    let mut cols = sub.basis().to_vec();
    cols.extend(sub.complement_basis());
    let b = Matrix::from_columns(f, n, &cols);
    let b_inv = b.inverse().expect("basis");
    let mut diag = Matrix::zero(f, n, n);
    for i in 0..sub.dim() {
        diag.set(i, i, f.one());
    }
    let p0 = b.mul(&diag).mul(&b_inv);
    let mut p = Matrix::zero(f, n, n);
    for g in elements {
        let gi = g.inverse().expect("group element");
        p = p.add(&g.mul(&p0).mul(&gi));
    }
    let inv_order = f.inv(f.from_i64(elements.len() as i64)).expect("order invertible");
    p = p.scale(inv_order);
    let complement_vectors = Matrix::identity(f, n).sub(&p).transpose().row_vectors();
    let complement = Subspace::spanned_by(f, n, &complement_vectors);
    if complement.dim() + sub.dim() != n {
        return Err(Error::Internal("averaged projection has wrong rank".into()));
    }
    for part in [&sub, &complement] {
        let part_rep = restrict(rep, part)?;
        let part_elements = restrict(&MatRep::new(f, n, elements.to_vec())?, part)?;
        summands_into(
            &part_rep,
            part_elements.generators(),
            &lift(part.basis(), basis, rep),
            rng,
            out,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffalg::field::Field;

    fn deleted_s5(f: Field) -> MatRep {
        // (0 1 2 3 4) and (0 1) on e_i − e_5.
        let five = Matrix::from_ints(
            f,
            &[vec![0, 0, 0, -1], vec![1, 0, 0, -1], vec![0, 1, 0, -1], vec![0, 0, 1, -1]],
        )
        .unwrap();
        let swap = Matrix::from_ints(
            f,
            &[vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        MatRep::new(f, 4, vec![five, swap]).unwrap()
    }

    #[test]
    fn deleted_module_is_irreducible() {
        let f = Field::prime(7).unwrap();
        assert_eq!(constituent_dims(&deleted_s5(f), 0).unwrap(), vec![4]);
    }

    #[test]
    fn deleted_module_in_characteristic_five_has_trivial_sub() {
        let f = Field::prime(5).unwrap();
        assert_eq!(constituent_dims(&deleted_s5(f), 1).unwrap(), vec![1, 3]);
    }

    #[test]
    fn trivial_sum() {
        let f = Field::prime(3).unwrap();
        let rep = MatRep::new(f, 2, vec![Matrix::identity(f, 2)]).unwrap();
        assert_eq!(constituent_dims(&rep, 0).unwrap(), vec![1, 1]);
    }

    #[test]
    fn order_five_on_plane_over_gf11_splits() {
        let f = Field::prime(11).unwrap();
        // Companion of x² − 7x + 1; its roots 4 and 3 have order 5.
        let c = Matrix::from_ints(f, &[vec![0, -1], vec![1, 7]]).unwrap();
        let rep = MatRep::new(f, 2, vec![c.clone()]).unwrap();
        let els: Vec<Matrix> = (0..5).map(|k| c.pow(k)).collect();
        let parts = direct_summands(&rep, &els, 0).unwrap();
        assert_eq!(parts.len(), 2);
    }
}
