//! Exact rational linear algebra over finite-dimensional spaces with named bases.
//!
//! Every space carries a list of basis labels. Tensor products use row-major
//! ordering (the left factor varies slowest) and composite labels `a⊗b`, so a
//! triple tensor product has the same flat indexing whichever way it is
//! bracketed. Maps are stored column-wise and sparsely: column `j` is the image
//! of the `j`-th domain basis vector.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::Error;

/// Exact scalar of the base field (the rationals).
pub type Scalar = BigRational;

/// Sparse column: `(row, value)` pairs sorted by row, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` into a canonical rational.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    match text.split_once('/') {
        None => text.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
            let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Renders a dense coordinate vector as a linear combination of labels.
pub fn format_vector(coords: &[Scalar], space: &Space) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format_scalar(&abs));
            out.push('·');
        }
        out.push_str(space.label(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A finite-dimensional space with a fixed, labelled basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    labels: Arc<[String]>,
}

impl Space {
    pub fn new(labels: Vec<String>) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::Shape("a space needs at least one basis vector".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Shape(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(Self { labels: labels.into() })
    }

    /// Builds a space from string literals; panics on duplicate labels.
    pub fn from_labels(labels: &[&str]) -> Self {
        Self::new(labels.iter().map(|s| s.to_string()).collect()).expect("valid labels")
    }

    /// `prefix0, prefix1, ...`
    pub fn indexed(prefix: &str, dim: usize) -> Self {
        Self::new((0..dim).map(|i| format!("{prefix}{i}")).collect()).expect("valid labels")
    }

    /// The one-dimensional ground field.
    pub fn scalars() -> Self {
        Self::from_labels(&["1"])
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in self.labels.iter() {
            for b in other.labels.iter() {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Space { labels: labels.into() }
    }

    pub fn tensor_all(spaces: &[&Space]) -> Space {
        let mut it = spaces.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, s| acc.tensor(s))
    }

    /// Direct sum `self ⊕ other` with labels tagged by summand.
    pub fn direct_sum(&self, other: &Space) -> Space {
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}⊕0"))
            .chain(other.labels.iter().map(|l| format!("0⊕{l}")))
            .collect::<Vec<_>>();
        Space { labels: labels.into() }
    }
}

fn normalize(mut entries: Vec<(usize, Scalar)>) -> SparseVec {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// A linear map between labelled spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: Space,
    codomain: Space,
    cols: Vec<SparseVec>,
}

impl LinearMap {
    /// Builds a map from the image of each domain basis vector.
    pub fn from_fn(domain: &Space, codomain: &Space, mut image: impl FnMut(usize) -> Vec<(usize, Scalar)>) -> Self {
        let cols = (0..domain.dim())
            .map(|j| {
                let col = normalize(image(j));
                debug_assert!(col.iter().all(|(i, _)| *i < codomain.dim()));
                col
            })
            .collect();
        Self { domain: domain.clone(), codomain: codomain.clone(), cols }
    }

    /// Builds a map sending basis vector `j` to basis vector `image(j)`.
    pub fn from_basis_fn(domain: &Space, codomain: &Space, image: impl Fn(usize) -> usize) -> Self {
        Self::from_fn(domain, codomain, |j| vec![(image(j), Scalar::one())])
    }

    /// Dense constructor from `codomain.dim()` rows of length `domain.dim()`.
    pub fn from_rows(domain: &Space, codomain: &Space, rows: &[Vec<Scalar>]) -> Result<Self, Error> {
        if rows.len() != codomain.dim() || rows.iter().any(|r| r.len() != domain.dim()) {
            return Err(Error::Shape(format!(
                "expected a {}×{} matrix",
                codomain.dim(),
                domain.dim()
            )));
        }
        Ok(Self::from_fn(domain, codomain, |j| {
            rows.iter()
                .enumerate()
                .filter(|(_, r)| !r[j].is_zero())
                .map(|(i, r)| (i, r[j].clone()))
                .collect()
        }))
    }

    /// Dense constructor from `domain.dim()` columns.
    pub fn from_columns(domain: &Space, codomain: &Space, cols: &[Vec<Scalar>]) -> Self {
        assert_eq!(cols.len(), domain.dim());
        Self::from_fn(domain, codomain, |j| {
            assert_eq!(cols[j].len(), codomain.dim());
            sparse_from_dense(&cols[j])
        })
    }

    /// The map `k → codomain` picking out `v`.
    pub fn from_vector(codomain: &Space, v: &[Scalar]) -> Self {
        Self::from_columns(&Space::scalars(), codomain, &[v.to_vec()])
    }

    pub fn identity(space: &Space) -> Self {
        Self::from_basis_fn(space, space, |j| j)
    }

    pub fn zero(domain: &Space, codomain: &Space) -> Self {
        Self::from_fn(domain, codomain, |_| Vec::new())
    }

    /// Permutation of tensor factors: output factor `k` is input factor `order[k]`.
    pub fn permute_factors(factors: &[&Space], order: &[usize]) -> Self {
        assert_eq!(factors.len(), order.len());
        let domain = Space::tensor_all(factors);
        let out_factors: Vec<&Space> = order.iter().map(|&k| factors[k]).collect();
        let codomain = Space::tensor_all(&out_factors);
        let dims: Vec<usize> = factors.iter().map(|s| s.dim()).collect();
        let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
        Self::from_basis_fn(&domain, &codomain, |j| {
            let mut idx = vec![0; dims.len()];
            let mut rest = j;
            for k in (0..dims.len()).rev() {
                idx[k] = rest % dims[k];
                rest /= dims[k];
            }
            order
                .iter()
                .zip(&out_dims)
                .fold(0, |acc, (&k, &d)| acc * d + idx[k])
        })
    }

    /// The flip `X⊗Y → Y⊗X`.
    pub fn swap(x: &Space, y: &Space) -> Self {
        Self::permute_factors(&[x, y], &[1, 0])
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn column_dense(&self, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.codomain.dim()];
        for (i, x) in &self.cols[j] {
            v[*i] = x.clone();
        }
        v
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .iter()
            .find(|(i, _)| *i == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Dense rows (`codomain.dim()` × `domain.dim()`).
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.domain.dim()]; self.codomain.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    /// Same matrix, relabelled spaces of equal dimension.
    pub fn with_spaces(&self, domain: &Space, codomain: &Space) -> Self {
        assert_eq!(domain.dim(), self.domain.dim());
        assert_eq!(codomain.dim(), self.codomain.dim());
        Self { domain: domain.clone(), codomain: codomain.clone(), cols: self.cols.clone() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.domain.dim());
        let mut out = vec![Scalar::zero(); self.codomain.dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * x;
            }
        }
        out
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(
            rhs.codomain.dim(),
            self.domain.dim(),
            "composition dimension mismatch"
        );
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, x) in col {
                    for (i, a) in &self.cols[*k] {
                        *acc.entry(*i).or_insert_with(Scalar::zero) += a * x;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        LinearMap { domain: rhs.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    /// `next ∘ self`, for writing pipelines left to right.
    pub fn then(&self, next: &LinearMap) -> LinearMap {
        next.compose(self)
    }

    /// `self ⊗ rhs` in row-major basis order.
    pub fn tensor(&self, rhs: &LinearMap) -> LinearMap {
        let rd = rhs.codomain.dim();
        let mut cols = Vec::with_capacity(self.cols.len() * rhs.cols.len());
        for a in &self.cols {
            for b in &rhs.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (p, x) in a {
                    for (q, y) in b {
                        col.push((p * rd + q, x * y));
                    }
                }
                cols.push(col);
            }
        }
        LinearMap {
            domain: self.domain.tensor(&rhs.domain),
            codomain: self.codomain.tensor(&rhs.codomain),
            cols,
        }
    }

    pub fn tensor_all(maps: &[&LinearMap]) -> LinearMap {
        let mut it = maps.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, m| acc.tensor(m))
    }

    pub fn add(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.domain.dim(), rhs.domain.dim());
        assert_eq!(self.codomain.dim(), rhs.codomain.dim());
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| normalize(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        LinearMap { domain: self.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v * c)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        LinearMap { domain: self.domain.clone(), codomain: self.codomain.clone(), cols }
    }

    pub fn sub(&self, rhs: &LinearMap) -> LinearMap {
        self.add(&rhs.scale(&int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.domain.dim() == self.codomain.dim()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// Whether both maps have the same matrix (labels are ignored).
    pub fn same_matrix(&self, rhs: &LinearMap) -> bool {
        self.first_difference(rhs).is_none()
    }

    /// Index of the first domain basis vector on which the two maps differ.
    pub fn first_difference(&self, rhs: &LinearMap) -> Option<usize> {
        assert_eq!(self.domain.dim(), rhs.domain.dim(), "maps compared on different domains");
        assert_eq!(self.codomain.dim(), rhs.codomain.dim(), "maps compared on different codomains");
        self.cols.iter().zip(&rhs.cols).position(|(a, b)| a != b)
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows())
    }

    pub fn rank(&self) -> usize {
        rank_fraction_free(&self.rows())
    }

    /// Basis of the kernel, one dense domain vector per element.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.to_matrix();
        let pivots = m.rref();
        kernel_from_rref(&m, &pivots)
    }

    /// Basis of the image (reduced echelon form of the column span).
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.domain.dim()).map(|j| self.column_dense(j)).collect();
        Subspace::span(&self.codomain, &cols)
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.domain.dim();
        if n != self.codomain.dim() {
            return None;
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for (i, row) in self.rows().into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                *aug.at_mut(i, j) = x;
            }
            *aug.at_mut(i, n + i) = Scalar::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv_rows: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| aug.at(i, n + j).clone()).collect()).collect();
        Some(LinearMap::from_rows(&self.codomain, &self.domain, &inv_rows).expect("square"))
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.domain.dim() {
            writeln!(
                f,
                "{} ↦ {}",
                self.domain.label(j),
                format_vector(&self.column_dense(j), &self.codomain)
            )?;
        }
        Ok(())
    }
}

/// Dense row-major rational matrix used for elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        let data: Vec<Scalar> = rows.into_iter().flat_map(|r| {
            assert_eq!(r.len(), m, "ragged matrix");
            r
        }).collect();
        Self { rows: n, cols: m, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    ///
    /// Columns are scanned left to right and the first row with a nonzero
    /// entry becomes the pivot row, so the output is deterministic.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).recip();
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    if self.at(r, j).is_zero() {
                        continue;
                    }
                    let v = self.at(i, j) - &factor * self.at(r, j);
                    *self.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

fn kernel_from_rref(m: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let n = m.ncols();
    let mut is_pivot = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..n)
        .filter(|&f| is_pivot[f].is_none())
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m.at(r, f).clone();
            }
            v
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
///
/// Each row is first cleared of denominators; all intermediate values stay
/// integral. Pivots are taken in the leftmost column with a nonzero entry.
pub fn rank_fraction_free(rows: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..n {
            for j in c + 1..m {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Outcome of solving `coeff · x = rhs` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Feasible {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
    /// `rank(coeff) < rank([coeff | rhs])`.
    Infeasible { rank: usize, augmented_rank: usize },
}

impl AffineSolution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, AffineSolution::Feasible { .. })
    }
}

/// Solves a dense system given by rows of coefficients.
pub fn solve_affine_rows(coeff: &[Vec<Scalar>], ncols: usize, rhs: &[Scalar]) -> AffineSolution {
    assert_eq!(coeff.len(), rhs.len(), "rhs length must equal the number of equations");
    let mut aug = Matrix::zeros(coeff.len(), ncols + 1);
    for (i, row) in coeff.iter().enumerate() {
        assert_eq!(row.len(), ncols);
        for (j, x) in row.iter().enumerate() {
            *aug.at_mut(i, j) = x.clone();
        }
        *aug.at_mut(i, ncols) = rhs[i].clone();
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&ncols) {
        let rank = pivots.len() - 1;
        return AffineSolution::Infeasible { rank, augmented_rank: rank + 1 };
    }
    let mut particular = vec![Scalar::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug.at(r, ncols).clone();
    }
    // The kernel of the coefficient block ignores the augmented column.
    let mut block = Matrix::zeros(aug.nrows(), ncols);
    for i in 0..aug.nrows() {
        for j in 0..ncols {
            *block.at_mut(i, j) = aug.at(i, j).clone();
        }
    }
    let kernel = kernel_from_rref(&block, &pivots);
    AffineSolution::Feasible { particular, kernel }
}

/// Solves `coeff · x = rhs` for a linear map.
pub fn solve_affine(coeff: &LinearMap, rhs: &[Scalar]) -> AffineSolution {
    assert_eq!(rhs.len(), coeff.codomain().dim(), "rhs must live in the codomain");
    solve_affine_rows(&coeff.rows(), coeff.domain().dim(), rhs)
}

/// A subspace given by a reduced-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: Space,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of arbitrary ambient vectors.
    pub fn span(ambient: &Space, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Self { ambient: ambient.clone(), basis: Vec::new(), pivots: Vec::new() };
        }
        let mut m = Matrix::from_rows(vectors.to_vec());
        assert_eq!(m.ncols(), ambient.dim(), "vector outside the ambient space");
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Self { ambient: ambient.clone(), basis, pivots }
    }

    pub fn kernel_of(map: &LinearMap) -> Self {
        Self::span(map.domain(), &map.kernel())
    }

    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Scalar::zero(); self.ambient.dim()];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in rebuilt.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// A space whose labels spell out the basis vectors.
    pub fn space(&self) -> Space {
        if self.basis.is_empty() {
            return Space::from_labels(&["∅"]);
        }
        let labels = self
            .basis
            .iter()
            .map(|b| {
                let s = format_vector(b, &self.ambient);
                if b.iter().filter(|x| !x.is_zero()).count() == 1 && !s.contains(' ') && !s.contains('·') && !s.starts_with('-') {
                    s
                } else {
                    format!("({s})")
                }
            })
            .collect();
        Space::new(labels).expect("echelon basis vectors are distinct")
    }

    /// The inclusion of the subspace into the ambient space.
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_columns(&self.space(), &self.ambient, &self.basis)
    }

    /// Restricts `f: ambient → ambient'` with image inside `target`, giving `self → target`.
    pub fn restrict(&self, f: &LinearMap, target: &Subspace) -> Option<LinearMap> {
        let cols = self
            .basis
            .iter()
            .map(|b| target.coordinates(&f.apply(b)))
            .collect::<Option<Vec<_>>>()?;
        Some(LinearMap::from_columns(&self.space(), &target.space(), &cols))
    }
}

/// `ambient / span(relations)` with an explicit projection and section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient: Space,
    relations: Subspace,
    space: Space,
    dim: usize,
    projection: LinearMap,
    section: LinearMap,
}

impl QuotientSpace {
    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Dimension of the quotient; `0` when the relations span everything,
    /// in which case `space` is a one-element placeholder.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    pub fn section(&self) -> &LinearMap {
        &self.section
    }

    /// Whether `f: ambient → Y` vanishes on every relation vector.
    pub fn kills_relations(&self, f: &LinearMap) -> Option<Vec<Scalar>> {
        self.relations
            .basis()
            .iter()
            .find(|r| f.apply(r).iter().any(|x| !x.is_zero()))
            .cloned()
    }
}

/// Builds `ambient / span(relations)`.
///
/// Representatives of the quotient basis are the ambient basis vectors in
/// non-pivot positions of the reduced relation matrix.
pub fn quotient_by(ambient: &Space, relations: &[Vec<Scalar>]) -> QuotientSpace {
    let rel = Subspace::span(ambient, relations);
    let n = ambient.dim();
    let mut pivot_row = vec![None; n];
    for (r, &p) in rel.pivots.iter().enumerate() {
        pivot_row[p] = Some(r);
    }
    let free: Vec<usize> = (0..n).filter(|&j| pivot_row[j].is_none()).collect();
    let mut position = vec![usize::MAX; n];
    for (k, &j) in free.iter().enumerate() {
        position[j] = k;
    }
    let space = if free.is_empty() {
        Space::from_labels(&["∅"])
    } else {
        Space::new(free.iter().map(|&j| format!("[{}]", ambient.label(j))).collect()).expect("distinct")
    };
    let qdim = free.len();
    let projection = if qdim == 0 {
        LinearMap::zero(ambient, &space)
    } else {
        LinearMap::from_fn(ambient, &space, |i| match pivot_row[i] {
            None => vec![(position[i], Scalar::one())],
            Some(r) => free
                .iter()
                .map(|&c| (position[c], -rel.basis[r][c].clone()))
                .collect(),
        })
    };
    let section = if qdim == 0 {
        LinearMap::zero(&space, ambient)
    } else {
        LinearMap::from_basis_fn(&space, ambient, |k| free[k])
    };
    QuotientSpace { ambient: ambient.clone(), relations: rel, space, dim: qdim, projection, section }
}
