//! Exact linear algebra over `Cyc`: sparse matrices and subspaces in reduced row echelon form.

use std::collections::BTreeMap;

use crate::scalar::Cyc;

pub type Vector = Vec<Cyc>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Cyc::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Cyc::one();
    v
}

pub fn is_zero(v: &[Cyc]) -> bool {
    v.iter().all(Cyc::is_zero)
}

/// `dst += c * src`.
pub fn axpy(dst: &mut [Cyc], c: &Cyc, src: &[Cyc]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

pub fn scaled(v: &[Cyc], c: &Cyc) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add(u: &[Cyc], v: &[Cyc]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Cyc], v: &[Cyc]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn support(v: &[Cyc]) -> impl Iterator<Item = usize> + '_ {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
}

/// Column-sparse matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: Vec<Vec<(usize, Cyc)>>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for (j, col) in m.cols.iter_mut().enumerate() {
            col.push((j, Cyc::one()));
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let cols = columns
            .iter()
            .map(|c| {
                debug_assert_eq!(c.len(), rows);
                support(c).map(|i| (i, c[i].clone())).collect()
            })
            .collect();
        Mat { rows, cols }
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Mat::zeros(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            for j in support(r) {
                m.cols[j].push((i, r[j].clone()));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Cyc)] {
        &self.cols[j]
    }

    pub fn column_dense(&self, j: usize) -> Vector {
        let mut v = zero_vector(self.rows);
        for (i, c) in &self.cols[j] {
            v[*i] = c.clone();
        }
        v
    }

    pub fn get(&self, i: usize, j: usize) -> Cyc {
        self.cols[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map_or_else(Cyc::zero, |(_, c)| c.clone())
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        let mut out = vec![zero_vector(self.ncols()); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                out[*i][j] = c.clone();
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyc]) -> Vector {
        debug_assert_eq!(v.len(), self.ncols());
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, c) in &self.cols[j] {
                out[*i] += c * x;
            }
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.ncols(), other.rows, "matrix shapes do not compose");
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Cyc> = BTreeMap::new();
                for (k, x) in col {
                    for (i, c) in &self.cols[*k] {
                        *acc.entry(*i).or_default() += c * x;
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Mat {
            rows: self.rows,
            cols,
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.lin_comb(&Cyc::one(), other, &Cyc::one())
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.lin_comb(&Cyc::one(), other, &Cyc::int(-1))
    }

    pub fn scale(&self, c: &Cyc) -> Mat {
        self.lin_comb(c, &Mat::zeros(self.rows, self.ncols()), &Cyc::zero())
    }

    fn lin_comb(&self, a: &Cyc, other: &Mat, b: &Cyc) -> Mat {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(x, y)| {
                let mut acc: BTreeMap<usize, Cyc> = BTreeMap::new();
                for (i, c) in x {
                    *acc.entry(*i).or_default() += a * c;
                }
                for (i, c) in y {
                    *acc.entry(*i).or_default() += b * c;
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Mat {
            rows: self.rows,
            cols,
        }
    }

    /// Kronecker product; index `(i, k)` maps to `i * other.nrows() + k`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows * other.rows, self.ncols() * other.ncols());
        for (j, cj) in self.cols.iter().enumerate() {
            for (l, cl) in other.cols.iter().enumerate() {
                let col = &mut m.cols[j * other.ncols() + l];
                for (i, a) in cj {
                    for (k, b) in cl {
                        col.push((i * other.rows + k, a * b));
                    }
                }
                col.sort_by_key(|(i, _)| *i);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        let mut s = Subspace::new(self.rows);
        for j in 0..self.ncols() {
            s.insert(self.column_dense(j));
        }
        s.dim()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }
}

/// Subspace of `Q(z)^n` stored as the rows of a reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::spanned_by(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn spanned_by<I: IntoIterator<Item = Vector>>(ambient: usize, vs: I) -> Self {
        let mut s = Subspace::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// RREF rows, a canonical basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` modulo the subspace; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[Cyc]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Cyc]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve a*A = b*B through the left kernel of the stacked bases.
        let mut stacked: Vec<Vector> = self.rows.clone();
        stacked.extend(other.rows.iter().cloned());
        let ker = left_kernel(&stacked);
        let k = self.dim();
        Subspace::spanned_by(
            self.ambient,
            ker.into_iter().map(|c| {
                let mut v = zero_vector(self.ambient);
                for (ci, row) in c[..k].iter().zip(&self.rows) {
                    axpy(&mut v, ci, row);
                }
                v
            }),
        )
    }

    /// Coordinates of `v` with respect to `basis()`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Cyc]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Complement coordinates: the ambient positions that are not pivots.
    pub fn free_positions(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|i| self.pivots.binary_search(i).is_err())
            .collect()
    }

    pub fn image(&self, m: &Mat) -> Subspace {
        Subspace::spanned_by(m.nrows(), self.rows.iter().map(|r| m.apply(r)))
    }
}

/// Expresses vectors in terms of a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    ambient: usize,
    size: usize,
    // RREF of the augmented rows `[b_i | e_i]`.
    rows: Vec<(usize, Vector, Vector)>,
}

impl Coordinates {
    /// Returns `None` if the family is linearly dependent.
    pub fn new(ambient: usize, family: &[Vector]) -> Option<Self> {
        let k = family.len();
        let augmented = family.iter().enumerate().map(|(i, b)| {
            let mut a = b.clone();
            a.extend(unit_vector(k, i));
            a
        });
        let s = Subspace::spanned_by(ambient + k, augmented);
        if s.pivots.iter().any(|&p| p >= ambient) {
            return None;
        }
        let rows = s
            .rows
            .iter()
            .zip(&s.pivots)
            .map(|(r, &p)| (p, r[..ambient].to_vec(), r[ambient..].to_vec()))
            .collect();
        Some(Coordinates {
            ambient,
            size: k,
            rows,
        })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Coefficients `c` with `v = sum c_i * family[i]`, if they exist.
    pub fn solve(&self, v: &[Cyc]) -> Option<Vector> {
        debug_assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        let mut coef = zero_vector(self.size);
        for (p, left, right) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let c = r[*p].clone();
            axpy(&mut r, &-c.clone(), left);
            axpy(&mut coef, &c, right);
        }
        is_zero(&r).then_some(coef)
    }
}

/// All coefficient vectors `c` with `sum c_i * rows[i] = 0`, as a basis.
pub fn left_kernel(rows: &[Vector]) -> Vec<Vector> {
    let k = rows.len();
    if k == 0 {
        return Vec::new();
    }
    let n = rows[0].len();
    let augmented: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            a.extend(unit_vector(k, i));
            a
        })
        .collect();
    let s = Subspace::spanned_by(n + k, augmented);
    s.rows
        .iter()
        .zip(&s.pivots)
        .filter(|(_, &p)| p >= n)
        .map(|(r, _)| r[n..].to_vec())
        .collect()
}
