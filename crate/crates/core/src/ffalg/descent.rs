use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Fe, Field};
use super::matrix::Matrix;
use super::module::{intertwiners, MatRep};
use crate::error::{arg, Error, Result};

/// Words sampled for the trace precondition of `galois_descent`.
const TRACE_SAMPLE_WORDS: usize = 40;

/// Fifth symmetric power of a 2-dimensional representation, on the monomials
/// `e1⁵, e1⁴e2, …, e2⁵`.
pub fn sym5_power(rep2: &MatRep) -> Result<MatRep> {
    if rep2.dim() != 2 {
        return arg(format!("expected a 2-dimensional representation, got {}", rep2.dim()));
    }
    let f = rep2.field();
    let gens = rep2.generators().iter().map(|g| sym5_matrix(g)).collect();
    MatRep::new(f, 6, gens)
}

/// Binary-form product, coefficients indexed by the power of `e2`.
fn form_mul(f: Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

pub fn sym5_matrix(g: &Matrix) -> Matrix {
    let f = g.field();
    let ge1 = [g.get(0, 0), g.get(1, 0)];
    let ge2 = [g.get(0, 1), g.get(1, 1)];
    let mut cols = Vec::with_capacity(6);
    for k in 0..6 {
        let mut acc = vec![f.one()];
        for _ in 0..5 - k {
            acc = form_mul(f, &acc, &ge1);
        }
        for _ in 0..k {
            acc = form_mul(f, &acc, &ge2);
        }
        cols.push(acc);
    }
    Matrix::from_columns(f, 6, &cols)
}

fn check_traces(rep: &MatRep, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7ace);
    let mut words: Vec<Matrix> = rep.generators().to_vec();
    for _ in 0..TRACE_SAMPLE_WORDS {
        let len = rng.gen_range(2..8);
        words.push(rep.random_word(len, &mut rng));
    }
    for w in &words {
        if !w.trace().in_prime_field() {
            return arg(format!(
                "trace {} is not in the prime field",
                rep.field().fmt_elem(w.trace())
            ));
        }
    }
    Ok(())
}

/// Smallest `a + b·x` (scanning `b`, then `a`) with norm `lambda`.
fn norm_preimage(f: Field, lambda: Fe) -> Option<Fe> {
    let p = f.characteristic() as i64;
    for b in 0..p {
        for a in 0..p {
            let mu = f.from_pair(a, b);
            if f.norm(mu) == lambda {
                return Some(mu);
            }
        }
    }
    None
}

/// Rewrites an absolutely irreducible representation over GF(p²) whose
/// character takes values in GF(p) on a basis over GF(p).
pub fn galois_descent(rep: &MatRep, seed: u64) -> Result<MatRep> {
    let f = rep.field();
    if !f.is_extension() {
        return Ok(rep.clone());
    }
    check_traces(rep, seed)?;
    let n = rep.dim();
    let conj = MatRep::new(f, n, rep.generators().iter().map(Matrix::frobenius).collect())?;
    let sols = intertwiners(&conj, rep)?;
    if sols.len() != 1 {
        return arg(format!(
            "expected a one-dimensional intertwiner space, found dimension {}",
            sols.len()
        ));
    }
    let t = &sols[0];
    let lambda = t
        .mul(&t.frobenius())
        .as_scalar()
        .ok_or_else(|| Error::Internal("T·σ(T) is not scalar".into()))?;
    if !lambda.in_prime_field() || lambda.is_zero() {
        return Err(Error::Internal("T·σ(T) is not a nonzero element of the prime field".into()));
    }
    let mu = norm_preimage(f, lambda).ok_or_else(|| Error::Internal("norm equation has no solution".into()))?;
    let t1 = t.scale(f.inv(mu).expect("nonzero"));

    // Fixed points of v ↦ T′σ(v): with T′ = A + xB and v = v0 + x·v1,
    // (A − I)v0 − ns·B·v1 = 0 and B·v0 − (A + I)v1 = 0.
    let base = f.base();
    let ns = base.from_i64(f.non_square() as i64);
    let system = Matrix::from_fn(base, 2 * n, 2 * n, |r, c| {
        let (ri, ci) = (r % n, c % n);
        let e = t1.get(ri, ci);
        let a = Fe { c0: e.c0, c1: 0 };
        let b = Fe { c0: e.c1, c1: 0 };
        let delta = if ri == ci { base.one() } else { Fe::ZERO };
        match (r < n, c < n) {
            (true, true) => base.sub(a, delta),
            (true, false) => base.neg(base.mul(ns, b)),
            (false, true) => b,
            (false, false) => base.neg(base.add(a, delta)),
        }
    });
    let fixed = system.nullspace();
    let vectors: Vec<Vec<Fe>> = fixed
        .iter()
        .map(|s| (0..n).map(|i| Fe { c0: s[i].c0, c1: s[n + i].c0 }).collect())
        .collect();
    // Any GF(p)-basis of the fixed space is a GF(p²)-basis of the module; pick n
    // vectors that are independent over GF(p²).
    let mut chosen: Vec<Vec<Fe>> = Vec::with_capacity(n);
    for v in vectors {
        let mut trial = chosen.clone();
        trial.push(v.clone());
        if Matrix::from_columns(f, n, &trial).rank() == trial.len() {
            chosen = trial;
        }
        if chosen.len() == n {
            break;
        }
    }
    if chosen.len() != n {
        return Err(Error::Internal("fixed space of the semilinear map is too small".into()));
    }
    let bm = Matrix::from_columns(f, n, &chosen);
    let bm_inv = bm.inverse().expect("independent columns");
    let gens = rep
        .generators()
        .iter()
        .map(|g| bm_inv.mul(g).mul(&bm).with_field(base))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Internal("descended generators left the prime field".into()))?;
    MatRep::new(base, n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym5_of_diagonal() {
        let f = Field::prime(11).unwrap();
        let t = f.from_i64(2);
        let ti = f.inv(t).unwrap();
        let d = Matrix::from_fn(f, 2, 2, |i, j| if i != j { Fe::ZERO } else if i == 0 { t } else { ti });
        let s = sym5_matrix(&d);
        for (k, e) in [5i64, 3, 1, -1, -3, -5].into_iter().enumerate() {
            let want = if e >= 0 { f.pow(t, e as u64) } else { f.pow(ti, (-e) as u64) };
            assert_eq!(s.get(k, k), want);
        }
        assert!(sym5_matrix(&Matrix::identity(f, 2)).is_identity());
    }

    #[test]
    fn sym5_is_multiplicative() {
        let f = Field::prime(13).unwrap();
        let a = Matrix::from_ints(f, &[vec![1, 2], vec![3, 7]]).unwrap();
        let b = Matrix::from_ints(f, &[vec![0, 1], vec![-1, 5]]).unwrap();
        assert_eq!(sym5_matrix(&a.mul(&b)), sym5_matrix(&a).mul(&sym5_matrix(&b)));
    }

    #[test]
    fn descent_of_prime_field_rep_preserves_traces() {
        let p = Field::prime(7).unwrap();
        let q = p.extension().unwrap();
        let a = Matrix::from_ints(p, &[vec![0, -1], vec![1, -1]]).unwrap();
        let b = Matrix::from_ints(p, &[vec![1, 1], vec![0, 1]]).unwrap();
        // Conjugate into GF(49) by a non-rational basis change.
        let c = Matrix::from_fn(q, 2, 2, |i, j| if i == j { q.one() } else if i == 0 { q.gen() } else { Fe::ZERO });
        let ci = c.inverse().unwrap();
        let gens: Vec<Matrix> = [a, b].iter().map(|m| ci.mul(&m.with_field(q).unwrap()).mul(&c)).collect();
        assert!(gens.iter().any(|g| !g.is_over_prime_field()));
        let rep = MatRep::new(q, 2, gens.clone()).unwrap();
        let down = galois_descent(&rep, 0).unwrap();
        assert_eq!(down.field(), p);
        for (g, h) in gens.iter().zip(down.generators()) {
            assert_eq!(g.trace(), h.trace().clone());
        }
    }
}
