//! Small linear groups used as point stabilizers of affine groups: order-5
//! elements, dihedral extensions and deleted permutation modules.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{is_prime, Fe, Field};
use super::matrix::Matrix;
use super::module::{intertwiners, MatRep};
use crate::error::{arg, Error, Result};
use crate::perm::Permutation;

/// Coefficient vectors enumerated exhaustively below this count; sampled above it.
const REFLECTION_ENUMERATION_LIMIT: u64 = 200_000;
const REFLECTION_SAMPLES: usize = 200_000;

/// Dimension of the smallest faithful GF(p)-module for Z₅ (the order of p mod 5).
pub fn phi5_dimension(p: u64) -> Option<usize> {
    match p % 5 {
        0 => None,
        1 => Some(1),
        4 => Some(2),
        _ => Some(4),
    }
}

/// A primitive fifth root of unity in GF(p), p ≡ 1 (mod 5).
fn fifth_root(f: Field) -> Fe {
    let p = f.characteristic();
    (2..p)
        .map(|a| f.pow(f.from_i64(a as i64), (p - 1) / 5))
        .find(|z| *z != f.one())
        .expect("p ≡ 1 mod 5 has a primitive fifth root")
}

/// `ζ + ζ⁻¹` for a primitive fifth root ζ: the smallest root of y² + y − 1.
fn golden_trace(f: Field) -> Option<Fe> {
    f.elements()
        .find(|&c| f.add(f.add(f.mul(c, c), c), f.neg(f.one())).is_zero())
}

fn companion(f: Field, lower: &[i64]) -> Matrix {
    // Companion of x^n + lower[n−1] x^{n−1} + … + lower[0].
    let n = lower.len();
    Matrix::from_fn(f, n, n, |i, j| {
        if j == n - 1 {
            f.neg(f.from_i64(lower[i]))
        } else if i == j + 1 {
            f.one()
        } else {
            Fe::ZERO
        }
    })
}

/// A matrix of order 5 over GF(p) with no eigenvalue 1, acting irreducibly
/// on GF(p)^dim. `dim` must be the order of p modulo 5.
pub fn phi5_companion(p: u64, dim: usize) -> Result<Matrix> {
    if !is_prime(p) {
        return arg(format!("{p} is not prime"));
    }
    let Some(want) = phi5_dimension(p) else {
        return arg("p = 5 has no element of order 5 acting fixed-point-freely");
    };
    if want != dim {
        return arg(format!("dimension {dim} is incompatible with p = {p} (needs {want})"));
    }
    let f = Field::prime(p)?;
    Ok(match dim {
        1 => Matrix::scalar(f, 1, fifth_root(f)),
        2 => quadratic_order5(f)?,
        _ => companion(f, &[1, 1, 1, 1]),
    })
}

/// Companion of x² − cx + 1 with c = ζ + ζ⁻¹; needs p ≡ ±1 (mod 5).
pub(crate) fn quadratic_order5(f: Field) -> Result<Matrix> {
    let c = golden_trace(f).ok_or_else(|| Error::Argument("5 is not a square in the field".into()))?;
    let mut m = companion(f, &[1, 0]);
    m.set(1, 1, c);
    Ok(m)
}

/// An involution `s` with `s ρ s = ρ⁻¹`, found in the solution space of the
/// linear system `S ρ = ρ⁻¹ S`.
pub fn inverting_involution(rho: &Matrix, seed: u64) -> Result<Matrix> {
    let f = rho.field();
    let n = rho.rows();
    let rho_inv = rho.inverse().ok_or_else(|| Error::Argument("singular matrix".into()))?;
    let a = MatRep::new(f, n, vec![rho.clone()])?;
    let b = MatRep::new(f, n, vec![rho_inv])?;
    let basis = intertwiners(&a, &b)?;
    let k = basis.len() as u32;
    let q = f.size();
    let combine = |coeffs: &[Fe]| {
        coeffs
            .iter()
            .zip(&basis)
            .fold(Matrix::zero(f, n, n), |acc, (&c, m)| acc.add(&m.scale(c)))
    };
    let good = |s: &Matrix| s.mul(s).is_identity();
    if q.checked_pow(k).is_some_and(|t| t <= REFLECTION_ENUMERATION_LIMIT) {
        let total = q.pow(k);
        let elems: Vec<Fe> = f.elements().collect();
        for idx in 1..total {
            let mut r = idx;
            let coeffs: Vec<Fe> = (0..k)
                .map(|_| {
                    let c = elems[(r % q) as usize];
                    r /= q;
                    c
                })
                .collect();
            let s = combine(&coeffs);
            if good(&s) {
                return Ok(s);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..REFLECTION_SAMPLES {
            let coeffs: Vec<Fe> = (0..k).map(|_| f.random(&mut rng)).collect();
            let s = combine(&coeffs);
            if good(&s) {
                return Ok(s);
            }
        }
    }
    Err(Error::SearchFailure("no inverting involution found".into()))
}

/// Matrix of a permutation of `{0,…,n−1}` on the basis `e_i − e_{n−1}` of the
/// sum-zero submodule of the permutation module.
pub fn deleted_permutation_matrix(f: Field, g: &Permutation) -> Matrix {
    let n = g.degree();
    let d = n - 1;
    let last = g.apply(d);
    let mut m = Matrix::zero(f, d, d);
    for i in 0..d {
        let gi = g.apply(i);
        if gi < d {
            m.set(gi, i, f.add(m.get(gi, i), f.one()));
        }
        if last < d {
            m.set(last, i, f.sub(m.get(last, i), f.one()));
        }
    }
    m
}

pub fn deleted_permutation_rep(f: Field, gens: &[Permutation]) -> Result<MatRep> {
    let Some(n) = gens.first().map(Permutation::degree) else {
        return arg("no generators");
    };
    if n < 2 || gens.iter().any(|g| g.degree() != n) {
        return arg("generators must share a degree of at least 2");
    }
    let mats = gens.iter().map(|g| deleted_permutation_matrix(f, g)).collect();
    MatRep::new(f, n - 1, mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifth_root_mod_11_is_4() {
        let m = phi5_companion(11, 1).unwrap();
        assert_eq!(m.get(0, 0).c0, 4);
    }

    #[test]
    fn companion_orders() {
        for (p, d) in [(19, 2), (29, 2), (7, 4), (2, 4), (3, 4), (31, 1)] {
            let m = phi5_companion(p, d).unwrap();
            assert_eq!(m.order(10), Some(5), "p = {p}");
            let id = Matrix::identity(m.field(), d);
            assert_eq!(m.sub(&id).nullity(), 0);
        }
    }

    #[test]
    fn incompatible_dimension_rejected() {
        assert!(phi5_companion(7, 2).is_err());
        assert!(phi5_companion(5, 4).is_err());
        assert!(phi5_companion(11, 4).is_err());
    }

    #[test]
    fn reflection_inverts() {
        for (p, d) in [(11u64, 2usize), (19, 2), (3, 4), (7, 4)] {
            let f = Field::prime(p).unwrap();
            let rho = if d == 2 { quadratic_order5(f).unwrap() } else { phi5_companion(p, 4).unwrap() };
            let s = inverting_involution(&rho, 0).unwrap();
            assert!(s.mul(&s).is_identity());
            assert_eq!(s.mul(&rho).mul(&s), rho.inverse().unwrap());
        }
    }

    #[test]
    fn deleted_matrix_is_a_representation() {
        let f = Field::prime(7).unwrap();
        let a = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[0, 4]]).unwrap();
        let ab = a.compose(&b);
        // Right action on points: M(a·b) = M(b)·M(a).
        let m = |g: &Permutation| deleted_permutation_matrix(f, g);
        assert_eq!(m(&ab), m(&b).mul(&m(&a)));
        assert_eq!(m(&a).order(10), Some(5));
    }
}
