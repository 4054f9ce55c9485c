use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, PrimitiveRep};

use super::module::FgGammaModule;

/// Dense matrix over Γ. As a presentation, rows are relations and columns
/// generators; as a linear map it acts on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl GammaMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(GammaMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        GammaMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn diagonal(diag: &[LaurentPoly]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Ragged input is rejected. An empty list gives the 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(GammaMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn parse_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| s.as_ref().parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &GammaMatrix) -> Result<GammaMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hstack(&self, other: &GammaMatrix) -> Result<GammaMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &GammaMatrix) -> Result<GammaMatrix> {
        Ok(self.transpose().hstack(&other.transpose())?.transpose())
    }

    pub fn select_rows(&self, range: std::ops::Range<usize>) -> GammaMatrix {
        let rows = range.len();
        let entries = range.flat_map(|i| self.row(i).to_vec()).collect();
        GammaMatrix { rows, cols: self.cols, entries }
    }

    pub fn select_columns(&self, range: std::ops::Range<usize>) -> GammaMatrix {
        self.transpose().select_rows(range).transpose()
    }

    pub fn scale(&self, c: &LaurentPoly) -> GammaMatrix {
        GammaMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }
}

impl fmt::Display for GammaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U * M * V = D` with `U`, `V` invertible over Γ and `D` diagonal. The
/// nonzero diagonal entries are primitive representatives forming a
/// divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: GammaMatrix,
    pub u_inv: GammaMatrix,
    pub v: GammaMatrix,
    pub diag: Vec<PrimitiveRep>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

/// Invariant factors of a presentation (units included, zeros omitted) and
/// the free rank of its cokernel.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    pub factors: Vec<PrimitiveRep>,
    pub free_rank_defect: usize,
}

struct Work {
    a: Vec<Vec<LaurentPoly>>,
    u: Vec<Vec<LaurentPoly>>,
    u_inv: Vec<Vec<LaurentPoly>>,
    v: Vec<Vec<LaurentPoly>>,
}

fn to_grid(m: &GammaMatrix) -> Vec<Vec<LaurentPoly>> {
    (0..m.rows).map(|i| m.row(i).to_vec()).collect()
}

fn from_grid(rows: usize, cols: usize, g: Vec<Vec<LaurentPoly>>) -> GammaMatrix {
    GammaMatrix { rows, cols, entries: g.into_iter().flatten().collect() }
}

fn grid_identity(n: usize) -> Vec<Vec<LaurentPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect()
}

impl Work {
    fn nrows(&self) -> usize {
        self.a.len()
    }

    fn ncols(&self) -> usize {
        self.v.len()
    }

    /// row_i += q * row_j
    fn row_add(&mut self, i: usize, j: usize, q: &LaurentPoly) {
        for c in 0..self.ncols() {
            if !self.a[j][c].is_zero() {
                self.a[i][c] = &self.a[i][c] + &(q * &self.a[j][c]);
            }
        }
        for c in 0..self.nrows() {
            if !self.u[j][c].is_zero() {
                self.u[i][c] = &self.u[i][c] + &(q * &self.u[j][c]);
            }
        }
        for r in 0..self.nrows() {
            if !self.u_inv[r][i].is_zero() {
                self.u_inv[r][j] = &self.u_inv[r][j] - &(q * &self.u_inv[r][i]);
            }
        }
    }

    /// col_j += q * col_i
    fn col_add(&mut self, j: usize, i: usize, q: &LaurentPoly) {
        for r in 0..self.nrows() {
            if !self.a[r][i].is_zero() {
                self.a[r][j] = &self.a[r][j] + &(q * &self.a[r][i]);
            }
        }
        for r in 0..self.ncols() {
            if !self.v[r][i].is_zero() {
                self.v[r][j] = &self.v[r][j] + &(q * &self.v[r][i]);
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
            for row in &mut self.u_inv {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            for row in &mut self.v {
                row.swap(i, j);
            }
        }
    }

    fn scale_row(&mut self, i: usize, unit: &LaurentPoly) {
        let inv = unit.unit_inverse().expect("scaling by a unit");
        for c in 0..self.ncols() {
            self.a[i][c] = &self.a[i][c] * unit;
        }
        for c in 0..self.nrows() {
            self.u[i][c] = &self.u[i][c] * unit;
        }
        for r in 0..self.nrows() {
            self.u_inv[r][i] = &self.u_inv[r][i] * &inv;
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.nrows() {
            for j in t..self.ncols() {
                if let Some(s) = self.a[i][j].span() {
                    if best.is_none_or(|(_, _, b)| s < b) {
                        best = Some((i, j, s));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry in row `t` or column `t` past the pivot.
    fn min_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        let cands = (t + 1..self.nrows())
            .map(|i| (i, t))
            .chain((t + 1..self.ncols()).map(|j| (t, j)));
        for (i, j) in cands {
            if let Some(s) = self.a[i][j].span() {
                if best.is_none_or(|(_, _, b)| s < b) {
                    best = Some((i, j, s));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn undivided(&self, t: usize) -> Option<usize> {
        let p = &self.a[t][t];
        (t + 1..self.nrows())
            .find(|&i| (t + 1..self.ncols()).any(|j| !p.divides(&self.a[i][j])))
    }

    fn run(&mut self) -> usize {
        let bound = self.nrows().min(self.ncols());
        let mut t = 0;
        while t < bound {
            let Some((pi, pj)) = self.min_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..self.nrows() {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[i][t].div_rem(&self.a[t][t]);
                    self.row_add(i, t, &-q);
                    dirty |= !r.is_zero();
                }
                for j in t + 1..self.ncols() {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[t][j].div_rem(&self.a[t][t]);
                    self.col_add(j, t, &-q);
                    dirty |= !r.is_zero();
                }
                if dirty {
                    if let Some((i, j)) = self.min_in_cross(t) {
                        self.swap_rows(t, i);
                        self.swap_cols(t, j);
                    }
                    continue;
                }
                if let Some(i) = self.undivided(t) {
                    self.row_add(t, i, &LaurentPoly::one());
                    continue;
                }
                break;
            }
            let unit = self.a[t][t].associate_unit().expect("nonzero pivot");
            self.scale_row(t, &unit);
            t += 1;
        }
        t
    }
}

pub fn smith_decomposition(m: &GammaMatrix) -> SmithDecomposition {
    let mut w = Work {
        a: to_grid(m),
        u: grid_identity(m.rows),
        u_inv: grid_identity(m.rows),
        v: grid_identity(m.cols),
    };
    let rank = w.run();
    let diag = (0..rank)
        .map(|k| w.a[k][k].normalize().expect("nonzero pivot"))
        .collect();
    SmithDecomposition {
        u: from_grid(m.rows, m.rows, w.u),
        u_inv: from_grid(m.rows, m.rows, w.u_inv),
        v: from_grid(m.cols, m.cols, w.v),
        diag,
    }
}

pub fn smith_normal_form(m: &GammaMatrix) -> SmithForm {
    let d = smith_decomposition(m);
    SmithForm { free_rank_defect: m.cols - d.rank(), factors: d.diag }
}

/// The module with generators the columns of `m` and relations its rows.
pub fn cokernel(m: &GammaMatrix) -> FgGammaModule {
    let sf = smith_normal_form(m);
    FgGammaModule::new(sf.free_rank_defect, sf.factors)
}

/// Columns spanning `{x : m x = 0}`, a free module.
pub fn kernel_basis(m: &GammaMatrix) -> GammaMatrix {
    let d = smith_decomposition(m);
    d.v.select_columns(d.rank()..m.cols)
}

/// Independent columns spanning the column space of `m`.
pub fn image_basis(m: &GammaMatrix) -> GammaMatrix {
    let d = smith_decomposition(m);
    let mut out = d.u_inv.select_columns(0..d.rank());
    for (j, dj) in d.diag.iter().enumerate() {
        let dj = dj.to_laurent();
        for i in 0..out.rows {
            let v = out.get(i, j) * &dj;
            out.set(i, j, v);
        }
    }
    out
}

/// `C` with `basis * C = targets`, when every target lies in the span of
/// the (independent) basis columns.
pub fn solve_in_basis(basis: &GammaMatrix, targets: &GammaMatrix) -> Option<GammaMatrix> {
    assert_eq!(basis.rows, targets.rows, "row count mismatch");
    let d = smith_decomposition(basis);
    let k = d.rank();
    if k != basis.cols {
        return None;
    }
    let y = d.u.mul(targets).expect("conforming");
    let mut scaled = GammaMatrix::zeros(k, targets.cols);
    for j in 0..targets.cols {
        for i in 0..y.rows {
            let e = y.get(i, j);
            if i >= k {
                if !e.is_zero() {
                    return None;
                }
                continue;
            }
            scaled.set(i, j, e.exact_div(&d.diag[i].to_laurent())?);
        }
    }
    Some(d.v.mul(&scaled).expect("conforming"))
}

/// `span(z) / span(b)` where every column of `b` lies in `span(z)`.
pub fn subquotient(z: &GammaMatrix, b: &GammaMatrix) -> Result<FgGammaModule> {
    let basis = image_basis(z);
    let coords = solve_in_basis(&basis, b).ok_or_else(|| {
        Error::DimensionMismatch("denominator is not contained in the numerator".into())
    })?;
    Ok(cokernel(&coords.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> GammaMatrix {
        let v: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        GammaMatrix::parse_rows(&v).unwrap()
    }

    fn reps(xs: &[&str]) -> Vec<PrimitiveRep> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn identity_has_unit_factors() {
        let sf = smith_normal_form(&GammaMatrix::identity(2));
        assert_eq!(sf.factors, reps(&["1", "1"]));
        assert!(cokernel(&GammaMatrix::identity(2)).is_zero());
    }

    #[test]
    fn diagonal_and_triangular() {
        let sf = smith_normal_form(&m(&[&["t - 1", "0"], &["0", "t - 1"]]));
        assert_eq!(sf.factors, reps(&["t - 1", "t - 1"]));
        let tri = m(&[&["t - 1", "1"], &["0", "t + 1"]]);
        assert_eq!(smith_normal_form(&tri).factors, reps(&["1", "t^2 - 1"]));
        assert_eq!(cokernel(&tri), FgGammaModule::new(0, reps(&["t^2 - 1"])));
    }

    #[test]
    fn empty_and_wide_presentations() {
        assert_eq!(cokernel(&GammaMatrix::zeros(0, 3)), FgGammaModule::free(3));
        assert_eq!(cokernel(&m(&[&["t - 1"]])), FgGammaModule::new(0, reps(&["t - 1"])));
        assert!(cokernel(&GammaMatrix::zeros(0, 0)).is_zero());
    }

    #[test]
    fn decomposition_identity_holds() {
        let a = m(&[
            &["t^2 - 1", "t + 2", "3"],
            &["t", "t^-1 - 1", "0"],
            &["2t^2 - 2", "2t + 4", "6"],
        ]);
        let d = smith_decomposition(&a);
        let prod = d.u.mul(&a).unwrap().mul(&d.v).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let e = prod.get(i, j);
                if i == j && i < d.rank() {
                    assert_eq!(e, &d.diag[i].to_laurent());
                } else {
                    assert!(e.is_zero());
                }
            }
        }
        assert_eq!(d.u.mul(&d.u_inv).unwrap(), GammaMatrix::identity(3));
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn subquotient_of_cyclic() {
        // (t-1)Γ / (t-1)(t+1)Γ ≅ Γ/(t+1)
        let z = m(&[&["t - 1"]]);
        let b = m(&[&["t^2 - 1"]]);
        assert_eq!(subquotient(&z, &b).unwrap(), FgGammaModule::new(0, reps(&["t + 1"])));
        assert!(subquotient(&b, &z).is_err());
    }
}
