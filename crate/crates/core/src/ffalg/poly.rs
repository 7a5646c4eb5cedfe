use super::field::{Fe, Field};
use super::matrix::Matrix;

/// Polynomial with coefficients listed from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Fe>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::new(vec![c])
    }

    pub fn x(field: Field) -> Poly {
        Poly::new(vec![Fe::ZERO, field.one()])
    }

    pub fn from_ints(field: Field, c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| field.from_i64(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn monic(&self, f: Field) -> Poly {
        match f.inv(self.lead()) {
            Some(inv) => Poly::new(self.coeffs.iter().map(|&c| f.mul(c, inv)).collect()),
            None => Poly::zero(),
        }
    }

    pub fn add(&self, other: &Poly, f: Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    f.add(
                        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO),
                        other.coeffs.get(i).copied().unwrap_or(Fe::ZERO),
                    )
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, f: Field) -> Poly {
        self.add(&Poly::new(other.coeffs.iter().map(|&c| f.neg(c)).collect()), f)
    }

    pub fn mul(&self, other: &Poly, f: Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly, f: Field) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lead()).expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Fe::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, dc));
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly, f: Field) -> Poly {
        self.div_rem(d, f).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly, f: Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly, f: Field) -> Poly {
        let mut base = self.rem(m, f);
        let mut r = Poly::constant(f.one()).rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base, f).rem(m, f);
            }
            base = base.mul(&base, f).rem(m, f);
            e >>= 1;
        }
        r
    }

    pub fn eval(&self, x: Fe, f: Field) -> Fe {
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let f = a.field();
        let n = a.rows();
        let mut acc = Matrix::zero(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a).add(&Matrix::scalar(f, n, c));
        }
        acc
    }
}

/// Minimal polynomial of a square matrix (monic).
pub fn minimal_polynomial(a: &Matrix) -> Poly {
    let f = a.field();
    let n = a.rows();
    let mut powers: Vec<Vec<Fe>> = vec![Matrix::identity(f, n).entries().to_vec()];
    let mut cur = Matrix::identity(f, n);
    loop {
        cur = cur.mul(a);
        powers.push(cur.entries().to_vec());
        let m = Matrix::from_columns(f, n * n, &powers);
        let null = m.nullspace();
        if let Some(rel) = null.first() {
            return Poly::new(rel.clone()).monic(f);
        }
    }
}

/// Distinct-degree factorization: `(d, g_d)` where `g_d` is the product of the
/// distinct monic irreducible factors of degree `d`.
pub fn distinct_degree_factors(poly: &Poly, f: Field) -> Vec<(usize, Poly)> {
    let q = f.size();
    let mut rest = poly.monic(f);
    let x = Poly::x(f);
    let mut out = Vec::new();
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        h = h.pow_mod(q, &rest, f);
        let g = rest.gcd(&h.sub(&x, f), f);
        if g.degree().unwrap_or(0) > 0 {
            // Strip every power of the new factors so later gcds see degree exactly d.
            loop {
                let c = rest.gcd(&g, f);
                if c.degree().unwrap_or(0) == 0 {
                    break;
                }
                rest = rest.div_rem(&c, f).0;
            }
            out.push((d, g));
            h = h.rem(&rest, f);
        }
    }
    out
}

/// One irreducible factor of `g`, a product of distinct irreducibles of degree `d`
/// (Cantor–Zassenhaus equal-degree splitting).
pub fn equal_degree_factor<R: rand::Rng>(g: &Poly, d: usize, f: Field, rng: &mut R) -> Poly {
    let mut g = g.monic(f);
    while g.degree().unwrap_or(0) > d {
        let n = g.degree().expect("nonzero");
        let a = Poly::new((0..n).map(|_| f.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let probe = if f.characteristic() == 2 {
            // Absolute trace a + a² + a⁴ + … over GF(2^(d·degree)).
            let steps = d * f.degree() as usize;
            let mut t = a.rem(&g, f);
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.mul(&t, f).rem(&g, f);
                acc = acc.add(&t, f);
            }
            acc
        } else {
            let e = (f.size().pow(d as u32) - 1) / 2;
            a.pow_mod(e, &g, f).sub(&Poly::constant(f.one()), f)
        };
        let c = g.gcd(&probe, f);
        let dc = c.degree().unwrap_or(0);
        if dc > 0 && dc < n {
            let other = g.div_rem(&c, f).0;
            g = if dc <= n - dc { c } else { other.monic(f) };
        }
    }
    g
}

/// Cyclotomic Φ₅ = x⁴ + x³ + x² + x + 1.
pub fn phi5(f: Field) -> Poly {
    Poly::from_ints(f, &[1, 1, 1, 1, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let f = Field::prime(7).unwrap();
        let a = Poly::from_ints(f, &[3, 0, 2, 5, 1]);
        let b = Poly::from_ints(f, &[1, 1, 2]);
        let (q, r) = a.div_rem(&b, f);
        assert_eq!(q.mul(&b, f).add(&r, f), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn phi5_factorization_by_residue() {
        // Φ₅ splits into linear factors iff p ≡ 1 mod 5, quadratics iff p ≡ 4, stays irreducible iff p ≡ ±2.
        for (p, d) in [(11u64, 1usize), (31, 1), (19, 2), (29, 2), (2, 4), (3, 4), (7, 4), (13, 4)] {
            let f = Field::prime(p).unwrap();
            let fac = distinct_degree_factors(&phi5(f), f);
            assert_eq!(fac.len(), 1, "p = {p}");
            assert_eq!(fac[0].0, d, "p = {p}");
        }
    }

    #[test]
    fn repeated_factors_are_reported_once() {
        let f = Field::prime(5).unwrap();
        // (x − 1)³ (x² + 2)
        let l = Poly::from_ints(f, &[-1, 1]);
        let q = Poly::from_ints(f, &[2, 0, 1]);
        let p = l.mul(&l, f).mul(&l, f).mul(&q, f);
        let fac = distinct_degree_factors(&p, f);
        assert_eq!(fac, vec![(1, l.monic(f)), (2, q)]);
    }

    #[test]
    fn equal_degree_splitting_finds_factor() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for p in [2u64, 3, 11, 31] {
            let f = Field::prime(p).unwrap();
            let fac = distinct_degree_factors(&phi5(f), f);
            let (d, g) = &fac[0];
            let h = equal_degree_factor(g, *d, f, &mut rng);
            assert_eq!(h.degree(), Some(*d));
            assert!(phi5(f).rem(&h, f).is_zero());
        }
    }

    #[test]
    fn minimal_polynomial_of_companion() {
        let f = Field::prime(7).unwrap();
        let c = Matrix::from_ints(f, &[vec![0, -1], vec![1, -1]]).unwrap();
        assert_eq!(minimal_polynomial(&c), Poly::from_ints(f, &[1, 1, 1]));
        assert!(minimal_polynomial(&c).eval_matrix(&c).is_zero());
        let s = Matrix::scalar(f, 3, f.from_i64(2));
        assert_eq!(minimal_polynomial(&s), Poly::from_ints(f, &[-2, 1]));
    }
}
