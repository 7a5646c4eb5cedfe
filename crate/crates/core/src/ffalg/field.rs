use std::fmt;

use crate::error::{arg, Error, Result};

/// Largest supported characteristic; keeps every product below 2^62.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// An element `c0 + c1·x` of GF(p) or GF(p²) = GF(p)[x]/(x² − ns).
///
/// Prime-field elements always have `c1 = 0`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    pub c0: u32,
    pub c1: u32,
}

impl Fe {
    pub const ZERO: Fe = Fe { c0: 0, c1: 0 };

    pub fn is_zero(self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn in_prime_field(self) -> bool {
        self.c1 == 0
    }
}

/// GF(p) (`degree() == 1`) or GF(p²) (`degree() == 2`, p odd).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
    ext: bool,
    ns: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p >= MAX_CHARACTERISTIC {
            return arg(format!("{p} is not a supported prime"));
        }
        Ok(Field { p, ext: false, ns: 0 })
    }

    /// GF(p²) for odd p, with modulus x² − ns and ns the least non-square ≥ 2.
    pub fn quadratic(p: u64) -> Result<Field> {
        if !is_prime(p) || p >= MAX_CHARACTERISTIC {
            return arg(format!("{p} is not a supported prime"));
        }
        if p == 2 {
            return Err(Error::Unsupported("GF(4) is not provided by this field type".into()));
        }
        let ns = (2..p)
            .find(|&a| pow_mod(a, (p - 1) / 2, p) == p - 1)
            .expect("odd primes have non-squares");
        Ok(Field { p, ext: true, ns })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        if self.ext {
            2
        } else {
            1
        }
    }

    pub fn size(&self) -> u64 {
        if self.ext {
            self.p * self.p
        } else {
            self.p
        }
    }

    pub fn is_extension(&self) -> bool {
        self.ext
    }

    /// The non-square `ns` with `x² = ns` (0 for prime fields).
    pub fn non_square(&self) -> u64 {
        self.ns
    }

    /// The prime subfield.
    pub fn base(&self) -> Field {
        Field {
            p: self.p,
            ext: false,
            ns: 0,
        }
    }

    /// GF(p²) over the same prime.
    pub fn extension(&self) -> Result<Field> {
        if self.ext {
            Ok(*self)
        } else {
            Field::quadratic(self.p)
        }
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe { c0: 1, c1: 0 }
    }

    /// The generator `x` of GF(p²) over GF(p).
    pub fn gen(&self) -> Fe {
        debug_assert!(self.ext);
        Fe { c0: 0, c1: 1 }
    }

    pub fn from_i64(&self, v: i64) -> Fe {
        let p = self.p as i64;
        Fe {
            c0: v.rem_euclid(p) as u32,
            c1: 0,
        }
    }

    pub fn from_pair(&self, c0: i64, c1: i64) -> Fe {
        let p = self.p as i64;
        Fe {
            c0: c0.rem_euclid(p) as u32,
            c1: if self.ext { c1.rem_euclid(p) as u32 } else { 0 },
        }
    }

    /// Symmetric integer lift of a prime-field element.
    pub fn to_signed(&self, a: Fe) -> Option<i64> {
        if a.c1 != 0 {
            return None;
        }
        let v = a.c0 as i64;
        let p = self.p as i64;
        Some(if v > p / 2 { v - p } else { v })
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        Fe {
            c0: ((a.c0 as u64 + b.c0 as u64) % p) as u32,
            c1: ((a.c1 as u64 + b.c1 as u64) % p) as u32,
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.p;
        Fe {
            c0: ((p - a.c0 as u64) % p) as u32,
            c1: ((p - a.c1 as u64) % p) as u32,
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        let (a0, a1, b0, b1) = (a.c0 as u64, a.c1 as u64, b.c0 as u64, b.c1 as u64);
        if !self.ext {
            return Fe {
                c0: (a0 * b0 % p) as u32,
                c1: 0,
            };
        }
        let t = a1 * b1 % p * self.ns % p;
        Fe {
            c0: ((a0 * b0 % p + t) % p) as u32,
            c1: ((a0 * b1 % p + a1 * b0 % p) % p) as u32,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let p = self.p;
        // (a0 + a1 x)(a0 − a1 x) = a0² − ns·a1² ∈ GF(p)
        let (a0, a1) = (a.c0 as u64, a.c1 as u64);
        let n = (a0 * a0 % p + p - a1 * a1 % p * self.ns % p) % p;
        let ninv = pow_mod(n, p - 2, p);
        Some(Fe {
            c0: (a0 * ninv % p) as u32,
            c1: ((p - a1) % p * ninv % p) as u32,
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, mut a: Fe, mut e: u64) -> Fe {
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Frobenius `a ↦ a^p`; on GF(p²) this is `c0 + c1 x ↦ c0 − c1 x` because ns is a non-square.
    pub fn frobenius(&self, a: Fe) -> Fe {
        if !self.ext {
            return a;
        }
        Fe {
            c0: a.c0,
            c1: ((self.p - a.c1 as u64) % self.p) as u32,
        }
    }

    /// Field norm to GF(p): `a · a^p`.
    pub fn norm(&self, a: Fe) -> Fe {
        self.mul(a, self.frobenius(a))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let q1 = self.size() - 1;
        let mut ord = q1;
        for f in prime_factors(q1) {
            while ord % f == 0 && self.pow(a, ord / f) == self.one() {
                ord /= f;
            }
        }
        Some(ord)
    }

    pub fn is_square(&self, a: Fe) -> bool {
        a.is_zero() || self.pow(a, (self.size() - 1) / 2) == self.one() || self.p == 2
    }

    /// A square root in this field, if one exists (Tonelli–Shanks).
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(a);
        }
        if self.p == 2 {
            return Some(a);
        }
        if !self.is_square(a) {
            return None;
        }
        let q1 = self.size() - 1;
        let s = q1.trailing_zeros();
        let odd = q1 >> s;
        let z = self
            .elements()
            .find(|&z| !z.is_zero() && !self.is_square(z))
            .expect("odd fields have non-squares");
        let mut m = s;
        let mut c = self.pow(z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, (odd + 1) / 2);
        while t != self.one() {
            let mut i = 0;
            let mut tt = t;
            while tt != self.one() {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// All field elements in a fixed order (prime-field elements first).
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        let p = self.p as u32;
        let top = if self.ext { p } else { 1 };
        (0..top).flat_map(move |c1| (0..p).map(move |c0| Fe { c0, c1 }))
    }

    /// Uniform random element.
    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> Fe {
        let p = self.p as u32;
        Fe {
            c0: rng.gen_range(0..p),
            c1: if self.ext { rng.gen_range(0..p) } else { 0 },
        }
    }

    pub fn fmt_elem(&self, a: Fe) -> String {
        FeDisplay(a).to_string()
    }
}

struct FeDisplay(Fe);

impl fmt::Display for FeDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0;
        if a.c1 == 0 {
            write!(f, "{}", a.c0)
        } else if a.c0 == 0 {
            write!(f, "{}x", a.c1)
        } else {
            write!(f, "{}+{}x", a.c0, a.c1)
        }
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert!(Field::prime(8).is_err());
    }

    #[test]
    fn quadratic_extension_axioms() {
        let f = Field::quadratic(7).unwrap();
        assert_eq!(f.non_square(), 3);
        let x = f.gen();
        assert_eq!(f.mul(x, x), f.from_i64(3));
        for a in f.elements().filter(|a| !a.is_zero()) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            assert_eq!(f.pow(a, 48), f.one());
            assert_eq!(f.frobenius(a), f.pow(a, 7));
        }
        let fixed = f.elements().filter(|&a| f.frobenius(a) == a).count();
        assert_eq!(fixed, 7);
    }

    #[test]
    fn square_roots() {
        for p in [3u64, 7, 13, 17, 41] {
            for f in [Field::prime(p).unwrap(), Field::quadratic(p).unwrap()] {
                for a in f.elements() {
                    if let Some(r) = f.sqrt(a) {
                        assert_eq!(f.mul(r, r), a);
                    } else {
                        assert!(!f.is_square(a));
                    }
                }
            }
        }
        // every prime-field element is a square in GF(p²)
        let f = Field::quadratic(13).unwrap();
        assert!(f.sqrt(f.from_i64(2)).is_some());
        assert!(Field::prime(13).unwrap().sqrt(Field::prime(13).unwrap().from_i64(2)).is_none());
    }

    #[test]
    fn element_orders() {
        let f = Field::prime(11).unwrap();
        assert_eq!(f.order(f.from_i64(4)), Some(5));
        assert_eq!(f.order(f.from_i64(2)), Some(10));
        assert_eq!(f.order(f.zero()), None);
    }
}
