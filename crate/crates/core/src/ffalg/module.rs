use rand::Rng;

use super::field::{Fe, Field};
use super::matrix::{vec_is_zero, Matrix};
use crate::error::{arg, Result};

/// A matrix representation: invertible generator matrices acting on column vectors.
#[derive(Clone, Debug)]
pub struct MatRep {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
    /// Invariant symplectic form, when one has been attached.
    pub form: Option<Matrix>,
}

impl MatRep {
    pub fn new(field: Field, dim: usize, gens: Vec<Matrix>) -> Result<MatRep> {
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return arg(format!("generator is {}x{}, expected {dim}x{dim}", g.rows(), g.cols()));
            }
            if g.field() != field {
                return arg("generator over a different field");
            }
            if !g.is_invertible() {
                return arg("generator is singular");
            }
        }
        Ok(MatRep {
            field,
            dim,
            gens,
            form: None,
        })
    }

    /// Attaches `j` after checking it is alternating, nondegenerate and invariant.
    pub fn with_form(mut self, j: Matrix) -> Result<MatRep> {
        if !is_alternating(&j) || !j.is_invertible() {
            return arg("form is not alternating and nondegenerate");
        }
        for g in &self.gens {
            if g.transpose().mul(&j).mul(g) != j {
                return arg("form is not invariant");
            }
        }
        self.form = Some(j);
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn transpose_rep(&self) -> MatRep {
        MatRep {
            field: self.field,
            dim: self.dim,
            gens: self.gens.iter().map(|g| g.transpose()).collect(),
            form: None,
        }
    }

    /// Same generators viewed over another field of the same characteristic.
    pub fn over(&self, field: Field) -> Result<MatRep> {
        let gens = self.gens.iter().map(|g| g.with_field(field)).collect::<Result<_>>()?;
        let form = self.form.as_ref().map(|j| j.with_field(field)).transpose()?;
        Ok(MatRep {
            field,
            dim: self.dim,
            gens,
            form,
        })
    }

    /// A random word of the given length in the generators and their inverses.
    pub fn random_word<R: Rng>(&self, len: usize, rng: &mut R) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dim);
        if self.gens.is_empty() {
            return m;
        }
        for _ in 0..len {
            let g = &self.gens[rng.gen_range(0..self.gens.len())];
            m = if rng.gen_bool(0.5) {
                m.mul(g)
            } else {
                m.mul(&g.inverse().expect("invertible generator"))
            };
        }
        m
    }
}

pub fn is_alternating(j: &Matrix) -> bool {
    let f = j.field();
    j.is_square()
        && (0..j.rows()).all(|i| j.get(i, i).is_zero() && (0..j.cols()).all(|k| j.get(i, k) == f.neg(j.get(k, i))))
}

pub fn is_symmetric(j: &Matrix) -> bool {
    *j == j.transpose()
}

/// A subspace kept as a reduced echelon basis (rows).
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by(field: Field, ambient: usize, vectors: &[Vec<Fe>]) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, &self.rows).with_shape(self.rows.len(), self.ambient)
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for (wi, &ri) in w.iter_mut().zip(row) {
                *wi = f.sub(*wi, f.mul(c, ri));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if it lies in the subspace.
    pub fn coordinates(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        let coords: Vec<Fe> = self.pivots.iter().map(|&pc| v[pc]).collect();
        self.contains(v).then_some(coords)
    }

    /// Adds `v`; returns true if the dimension grew. Keeps the basis fully reduced.
    pub fn insert(&mut self, v: Vec<Fe>) -> bool {
        let f = self.field;
        let mut w = self.reduce(&v);
        let Some(pc) = w.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("nonzero");
        for a in w.iter_mut() {
            *a = f.mul(*a, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            for (ri, &wi) in row.iter_mut().zip(&w) {
                *ri = f.sub(*ri, f.mul(c, wi));
            }
        }
        let pos = self.pivots.iter().position(|&p| p > pc).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Standard basis vectors completing this subspace to the whole space.
    pub fn complement_basis(&self) -> Vec<Vec<Fe>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&i| !is_pivot[i])
            .map(|i| {
                let mut e = vec![Fe::ZERO; self.ambient];
                e[i] = self.field.one();
                e
            })
            .collect()
    }
}

impl Matrix {
    /// Reshape helper so an empty row list still records its column count.
    pub(crate) fn with_shape(self, rows: usize, cols: usize) -> Matrix {
        if self.rows() == rows && self.cols() == cols {
            self
        } else {
            debug_assert!(rows == 0);
            Matrix::zero(self.field(), rows, cols)
        }
    }
}

/// Smallest invariant subspace containing the given vectors.
pub fn spin(vectors: &[Vec<Fe>], rep: &MatRep) -> Subspace {
    let mut s = Subspace::zero(rep.field, rep.dim);
    let mut queue: Vec<Vec<Fe>> = Vec::new();
    for v in vectors {
        if s.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in &rep.gens {
            let w = g.apply(&v);
            if s.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    s
}

/// Common fixed space of the generators.
pub fn fixed_space(rep: &MatRep) -> Subspace {
    let f = rep.field;
    let n = rep.dim;
    if rep.gens.is_empty() {
        return Subspace::spanned_by(f, n, &Matrix::identity(f, n).row_vectors());
    }
    let id = Matrix::identity(f, n);
    let blocks: Vec<Matrix> = rep.gens.iter().map(|g| g.sub(&id)).collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let stacked = Matrix::vstack(f, n, &refs);
    Subspace::spanned_by(f, n, &stacked.nullspace())
}

/// Solves a homogeneous system in the n² entries of an unknown n×n matrix.
/// `equations(e)` gives, for the basis matrix `E_{ij}` as input, the image of
/// a linear map whose kernel is wanted.
fn solve_matrix_system(f: Field, n: usize, maps: &[Box<dyn Fn(&Matrix) -> Matrix + '_>]) -> Vec<Matrix> {
    if maps.is_empty() {
        return (0..n * n)
            .map(|k| {
                let mut m = Matrix::zero(f, n, n);
                m.set(k / n, k % n, f.one());
                m
            })
            .collect();
    }
    // Columns: images of each elementary matrix, all maps stacked.
    let mut columns: Vec<Vec<Fe>> = Vec::with_capacity(n * n);
    for k in 0..n * n {
        let mut e = Matrix::zero(f, n, n);
        e.set(k / n, k % n, f.one());
        let mut col = Vec::with_capacity(maps.len() * n * n);
        for m in maps {
            col.extend_from_slice(m(&e).entries());
        }
        columns.push(col);
    }
    let system = Matrix::from_columns(f, maps.len() * n * n, &columns);
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(f, n, n, |i, j| v[i * n + j]))
        .collect()
}

/// Basis of `{X : X g = g X for every generator}`.
pub fn centralizer_algebra(rep: &MatRep) -> Vec<Matrix> {
    let maps: Vec<Box<dyn Fn(&Matrix) -> Matrix + '_>> = rep
        .gens
        .iter()
        .map(|g| Box::new(move |x: &Matrix| x.mul(g).sub(&g.mul(x))) as Box<dyn Fn(&Matrix) -> Matrix>)
        .collect();
    solve_matrix_system(rep.field, rep.dim, &maps)
}

/// Basis of `{J : gᵀ J g = J for every generator}`.
pub fn invariant_forms(rep: &MatRep) -> Vec<Matrix> {
    let maps: Vec<Box<dyn Fn(&Matrix) -> Matrix + '_>> = rep
        .gens
        .iter()
        .map(|g| {
            let gt = g.transpose();
            Box::new(move |x: &Matrix| gt.mul(x).mul(g).sub(x)) as Box<dyn Fn(&Matrix) -> Matrix>
        })
        .collect();
    solve_matrix_system(rep.field, rep.dim, &maps)
}

/// Basis of `{T : T a(g) = b(g) T}` for two representations of the same group
/// given by corresponding generator lists.
pub fn intertwiners(a: &MatRep, b: &MatRep) -> Result<Vec<Matrix>> {
    if a.dim != b.dim || a.gens.len() != b.gens.len() || a.field != b.field {
        return arg("representations are not comparable");
    }
    let maps: Vec<Box<dyn Fn(&Matrix) -> Matrix + '_>> = a
        .gens
        .iter()
        .zip(&b.gens)
        .map(|(ga, gb)| Box::new(move |t: &Matrix| t.mul(ga).sub(&gb.mul(t))) as Box<dyn Fn(&Matrix) -> Matrix>)
        .collect();
    Ok(solve_matrix_system(a.field, a.dim, &maps))
}

/// Action on an invariant subspace, in coordinates of its echelon basis.
pub fn restrict(rep: &MatRep, sub: &Subspace) -> Result<MatRep> {
    let f = rep.field;
    let k = sub.dim();
    let mut gens = Vec::with_capacity(rep.gens.len());
    for g in &rep.gens {
        let mut cols = Vec::with_capacity(k);
        for b in sub.basis() {
            let img = g.apply(b);
            let Some(c) = sub.coordinates(&img) else {
                return arg("subspace is not invariant");
            };
            cols.push(c);
        }
        gens.push(Matrix::from_columns(f, k, &cols));
    }
    MatRep::new(f, k, gens)
}

/// Action on the quotient by an invariant subspace, with coset representatives
/// taken from the standard basis vectors off the pivot columns.
pub fn quotient(rep: &MatRep, sub: &Subspace) -> Result<(MatRep, Vec<Vec<Fe>>)> {
    let f = rep.field;
    let reps = sub.complement_basis();
    let free: Vec<usize> = reps
        .iter()
        .map(|e| e.iter().position(|a| !a.is_zero()).expect("unit vector"))
        .collect();
    let k = reps.len();
    let mut gens = Vec::with_capacity(rep.gens.len());
    for g in &rep.gens {
        let mut cols = Vec::with_capacity(k);
        for e in &reps {
            let img = sub.reduce(&g.apply(e));
            // After reduction, pivot coordinates are zero; the free coordinates
            // are the quotient coordinates.
            cols.push(free.iter().map(|&i| img[i]).collect::<Vec<_>>());
        }
        gens.push(Matrix::from_columns(f, k, &cols));
    }
    Ok((MatRep::new(f, k, gens)?, reps))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Deleted permutation module of a permutation group given by images on 5 points,
    /// basis e_i − e_5.
    fn deleted(f: Field, perms: &[[usize; 5]]) -> MatRep {
        let gens = perms
            .iter()
            .map(|pi| {
                let mut m = Matrix::zero(f, 4, 4);
                for i in 0..4 {
                    // e_i − e_5 ↦ e_{π i} − e_{π 5}
                    if pi[i] < 4 {
                        let v = m.get(pi[i], i);
                        m.set(pi[i], i, f.add(v, f.one()));
                    }
                    if pi[4] < 4 {
                        let v = m.get(pi[4], i);
                        m.set(pi[4], i, f.sub(v, f.one()));
                    }
                }
                m
            })
            .collect();
        MatRep::new(f, 4, gens).unwrap()
    }

    const A5: [[usize; 5]; 2] = [[1, 2, 0, 3, 4], [0, 1, 3, 4, 2]];
    const A4: [[usize; 5]; 2] = [[1, 2, 0, 3, 4], [0, 2, 3, 1, 4]];

    #[test]
    fn fixed_space_dimensions() {
        let f = Field::prime(7).unwrap();
        let triv = MatRep::new(f, 4, vec![Matrix::identity(f, 4)]).unwrap();
        assert_eq!(fixed_space(&triv).dim(), 4);
        assert_eq!(fixed_space(&deleted(f, &A5)).dim(), 0);
        let a4 = deleted(f, &A4);
        let fs = fixed_space(&a4);
        assert_eq!(fs.dim(), 1);
        // e1+e2+e3+e4−4e5 = Σ (e_i − e_5): coordinates (1,1,1,1)
        assert!(fs.contains(&vec![f.one(); 4]));
        assert_eq!(spin(fs.basis(), &a4).dim(), 1);
    }

    #[test]
    fn spin_basics() {
        let f = Field::prime(7).unwrap();
        let rep = deleted(f, &A5);
        assert_eq!(spin(&[vec![Fe::ZERO; 4]], &rep).dim(), 0);
        assert_eq!(spin(&[vec![f.one(), Fe::ZERO, Fe::ZERO, Fe::ZERO]], &rep).dim(), 4);
    }

    #[test]
    fn centralizer_and_forms_trivial() {
        let f = Field::prime(5).unwrap();
        let triv = MatRep::new(f, 3, vec![Matrix::identity(f, 3)]).unwrap();
        assert_eq!(centralizer_algebra(&triv).len(), 9);
        let triv2 = MatRep::new(f, 2, vec![Matrix::identity(f, 2)]).unwrap();
        assert_eq!(invariant_forms(&triv2).len(), 4);
    }

    #[test]
    fn deleted_module_has_symmetric_form() {
        let f = Field::prime(7).unwrap();
        let forms = invariant_forms(&deleted(f, &A5));
        assert!(!forms.is_empty());
        assert!(forms.iter().any(|j| is_symmetric(j) && j.is_invertible()));
        assert_eq!(centralizer_algebra(&deleted(f, &A5)).len(), 1);
    }

    #[test]
    fn restrict_and_quotient_dimensions() {
        let f = Field::prime(7).unwrap();
        let a4 = deleted(f, &A4);
        let fs = fixed_space(&a4);
        let sub = restrict(&a4, &fs).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.generators().iter().all(|g| g.is_identity()));
        let (q, reps) = quotient(&a4, &fs).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(reps.len(), 3);
    }
}
