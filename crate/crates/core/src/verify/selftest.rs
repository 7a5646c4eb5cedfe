//! Randomized property checks run from the command line, one report per
//! property. Every property is driven by a seeded generator so a run is
//! reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks::cayley_row_check;
use super::report::{timed_check, Report};
use crate::atlas::{catalogue_fingerprint, derived_2a5_over_prime, locate_subrep, build_2s5minus, CATALOGUE};
use crate::error::Result;
use crate::ffalg::{chop, deleted_permutation_rep, galois_descent, spin, Field, MatRep};
use crate::perm::{PermGroup, Permutation};

/// Random groups examined by the orbit–stabilizer property.
pub const RANDOM_GROUPS: usize = 50;
/// Random words examined by the descent and form properties.
pub const RANDOM_WORDS: usize = 100;

fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("a shuffle is a bijection")
}

fn random_group<R: Rng>(rng: &mut R) -> PermGroup {
    let n = rng.gen_range(4..=12);
    let k = rng.gen_range(1..=3);
    let gens = (0..k).map(|_| random_permutation(n, rng)).collect();
    PermGroup::new(n, gens).expect("same degree").freeze()
}

/// |orbit(x)|·|G_x| = |G| for a random point of each random group.
fn orbit_stabilizer(rng: &mut ChaCha8Rng, r: &mut Report) -> Result<()> {
    let mut holds = 0;
    for _ in 0..RANDOM_GROUPS {
        let g = random_group(rng);
        let x = rng.gen_range(0..g.degree());
        let orbit = g.orbit(x)?.len() as u128;
        if orbit * g.point_stabilizer(x)?.order()? == g.order()? {
            holds += 1;
        }
    }
    r.compare("groupsSatisfying", holds, RANDOM_GROUPS);
    Ok(())
}

/// Random elements sift through the chain; a random permutation sifts
/// exactly when adjoining it leaves the order unchanged.
fn sifting(rng: &mut ChaCha8Rng, r: &mut Report) -> Result<()> {
    let mut agree = 0;
    for _ in 0..RANDOM_GROUPS {
        let g = random_group(rng);
        let chain = g.chain()?;
        let inside = chain.random_element(rng);
        let outside = random_permutation(g.degree(), rng);
        let mut gens = g.generators().to_vec();
        gens.push(outside.clone());
        let bigger = PermGroup::new(g.degree(), gens)?.freeze().order()?;
        if chain.contains(&inside) && chain.contains(&outside) == (bigger == g.order()?) {
            agree += 1;
        }
    }
    r.compare("groupsSatisfying", agree, RANDOM_GROUPS);
    Ok(())
}

/// The deleted permutation module of S₅ over GF(p) for p ∈ {2, 3, 7}.
fn deleted_modules() -> Result<Vec<MatRep>> {
    let s5 = PermGroup::symmetric(5);
    [2u64, 3, 7]
        .into_iter()
        .map(|p| deleted_permutation_rep(Field::prime(p)?, s5.generators()))
        .collect()
}

/// spin(v) contains v, is invariant, and spinning it again changes nothing.
fn spin_closure(rng: &mut ChaCha8Rng, r: &mut Report) -> Result<()> {
    let mut holds = 0;
    let mut total = 0;
    for rep in deleted_modules()? {
        let f = rep.field();
        for _ in 0..10 {
            total += 1;
            let v: Vec<_> = (0..rep.dim()).map(|_| f.random(rng)).collect();
            let s = spin(&[v.clone()], &rep);
            let invariant = s.basis().iter().all(|b| rep.generators().iter().all(|g| s.contains(&g.apply(b))));
            let again = spin(s.basis(), &rep);
            if s.contains(&v) && invariant && again.dim() == s.dim() {
                holds += 1;
            }
        }
    }
    r.compare("vectorsSatisfying", holds, total);
    Ok(())
}

/// Chopping any composition factor again returns it whole.
fn rechop(seed: u64, r: &mut Report) -> Result<()> {
    let mut stable = 0;
    let mut total = 0;
    for rep in deleted_modules()? {
        for c in chop(&rep, seed)? {
            total += 1;
            let again = chop(&c.rep, seed.wrapping_add(1))?;
            if again.len() == 1 && again[0].dim() == c.dim() {
                stable += 1;
            }
        }
    }
    r.compare("factorsStable", stable, total);
    Ok(())
}

/// Equal words in the generators have equal traces before and after descent.
fn descent_traces(rng: &mut ChaCha8Rng, seed: u64, r: &mut Report) -> Result<()> {
    let full = build_2s5minus(13)?;
    let up = locate_subrep(&full, 120, seed)?;
    let up = MatRep::new(up.field(), up.dim(), up.generators().to_vec())?;
    let down = galois_descent(&up, seed)?;
    let e = up.field();
    let mut equal = 0;
    for _ in 0..RANDOM_WORDS {
        let len = rng.gen_range(1..=12);
        let word: Vec<(usize, bool)> = (0..len).map(|_| (rng.gen_range(0..up.generators().len()), rng.gen_bool(0.5))).collect();
        let eval = |rep: &MatRep| {
            word.iter().fold(crate::ffalg::Matrix::identity(rep.field(), rep.dim()), |m, &(i, inv)| {
                let g = &rep.generators()[i];
                m.mul(&if inv { g.inverse().expect("invertible") } else { g.clone() })
            })
        };
        let t_up = eval(&up).trace();
        let t_down = eval(&down).with_field(e)?.trace();
        if t_up == t_down {
            equal += 1;
        }
    }
    r.compare("wordsWithEqualTrace", equal, RANDOM_WORDS);
    Ok(())
}

/// Random words in descended 2·A₅ preserve its invariant form.
fn invariant_forms_hold(rng: &mut ChaCha8Rng, seed: u64, r: &mut Report) -> Result<()> {
    let rep = derived_2a5_over_prime(13, seed)?;
    let j = rep.form.clone().expect("descended rep carries a form");
    let preserved = (0..RANDOM_WORDS)
        .filter(|_| {
            let w = rep.random_word(rng.gen_range(1..=16), rng);
            w.transpose().mul(&j).mul(&w) == j
        })
        .count();
    r.compare("wordsPreservingForm", preserved, RANDOM_WORDS);
    Ok(())
}

/// Catalogue fingerprints are pairwise distinct.
fn fingerprints_distinct(r: &mut Report) -> Result<()> {
    let fps = CATALOGUE.iter().map(|n| catalogue_fingerprint(n)).collect::<Result<Vec<_>>>()?;
    let clashes = (0..fps.len())
        .flat_map(|i| (i + 1..fps.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| fps[i] == fps[j])
        .count();
    r.compare("clashes", clashes, 0);
    Ok(())
}

/// The Cayley inversion check on randomly chosen affine rows and primes.
fn cayley(rng: &mut ChaCha8Rng, seed: u64, r: &mut Report) -> Result<()> {
    let cases = [(1u8, 11u64), (1, 31), (2, 19), (3, 2), (3, 3), (4, 11), (5, 2), (6, 3), (7, 3), (8, 2), (8, 3)];
    let picked: Vec<_> = cases.choose_multiple(rng, 5).copied().collect();
    let passing = picked.iter().filter(|&&(row, p)| cayley_row_check(row, p, seed).is_pass()).count();
    r.compare("casesPassing", passing, picked.len());
    Ok(())
}

/// Runs every property with generators derived from `seed`.
pub fn selftest(seed: u64) -> Vec<Report> {
    let rng = |salt: u64| ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt));
    let id = |name: &str| format!("PROP.{name}.s{seed}");
    vec![
        timed_check(&id("orbitStabilizer"), seed, |r| orbit_stabilizer(&mut rng(1), r)),
        timed_check(&id("sifting"), seed, |r| sifting(&mut rng(2), r)),
        timed_check(&id("spinClosure"), seed, |r| spin_closure(&mut rng(3), r)),
        timed_check(&id("rechop"), seed, |r| rechop(seed, r)),
        timed_check(&id("descentTraces"), seed, |r| descent_traces(&mut rng(5), seed, r)),
        timed_check(&id("invariantForms"), seed, |r| invariant_forms_hold(&mut rng(6), seed, r)),
        timed_check(&id("fingerprintsDistinct"), seed, fingerprints_distinct),
        timed_check(&id("cayleyInversion"), seed, |r| cayley(&mut rng(8), seed, r)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_zero_passes() {
        for r in selftest(0) {
            assert!(r.is_pass(), "{}", r.to_line());
        }
    }
}
