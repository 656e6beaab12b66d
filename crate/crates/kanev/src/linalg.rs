//! Exact dense linear algebra: rational elimination for ranks and nullspaces,
//! fraction-free (Bareiss) determinants, Hermite and Smith reduction over Z.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix over arbitrary-precision rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> QMat {
        QMat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMat {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> QMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> QMat {
        QMat::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<BigRational>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    /// Row-reduces in place; returns the rank and the pivot columns.
    pub fn row_reduce(&mut self) -> (usize, Vec<usize>) {
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !self[(i, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(rank, p);
            let inv = self[(rank, col)].recip();
            for c in col..self.cols {
                let v = &self[(rank, c)] * &inv;
                self[(rank, c)] = v;
            }
            for i in 0..self.rows {
                if i != rank && !self[(i, col)].is_zero() {
                    let factor = self[(i, col)].clone();
                    for c in col..self.cols {
                        let v = &self[(i, c)] - &factor * &self[(rank, c)];
                        self[(i, c)] = v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().0
    }

    /// Basis of the right kernel `{ x : A x = 0 }`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let (_, pivots) = m.row_reduce();
        let piv_of_col: std::collections::HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if piv_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (&c, &r) in &piv_of_col {
                v[c] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Scales a rational vector to a primitive integer vector (clears denominators,
/// divides by the content). Zero stays zero.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Dense matrix over big integers.
#[derive(Clone, Debug, PartialEq)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl ZMat {
    pub fn zero(rows: usize, cols: usize) -> ZMat {
        ZMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> ZMat {
        let mut m = ZMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> ZMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        ZMat {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn add_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self[(dst, c)] + q * &self[(src, c)];
            self[(dst, c)] = v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self[(i, c)].clone();
            self[(i, c)] = v;
        }
    }

    /// Fraction-free determinant (Bareiss). Panics unless square.
    pub fn bareiss_det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(sw) = ((k + 1)..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, sw);
                sign = -sign;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    /// Row Hermite normal form; returns `(H, U)` with `U` unimodular and
    /// `U * self = H`, pivots positive, entries above a pivot reduced.
    pub fn hnf_with_transform(&self) -> (ZMat, ZMat) {
        let mut h = self.clone();
        let mut u = ZMat::identity(self.rows);
        let mut row = 0;
        for col in 0..self.cols {
            // euclidean elimination below `row`
            loop {
                let mut best: Option<usize> = None;
                for i in row..h.rows {
                    if !h[(i, col)].is_zero()
                        && best.is_none_or(|b| h[(i, col)].abs() < h[(b, col)].abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(p) = best else { break };
                h.swap_rows(row, p);
                u.swap_rows(row, p);
                let mut done = true;
                let pivot = h[(row, col)].clone();
                for i in (row + 1)..h.rows {
                    if !h[(i, col)].is_zero() {
                        let q = -(&h[(i, col)] / &pivot);
                        h.add_multiple(i, row, &q);
                        u.add_multiple(i, row, &q);
                        if !h[(i, col)].is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if h[(row, col)].is_zero() {
                continue;
            }
            if h[(row, col)].is_negative() {
                h.negate_row(row);
                u.negate_row(row);
            }
            // reduce entries above the pivot
            let pivot = h[(row, col)].clone();
            for i in 0..row {
                let q = -(div_floor(&h[(i, col)], &pivot));
                h.add_multiple(i, row, &q);
                u.add_multiple(i, row, &q);
            }
            row += 1;
            if row == h.rows {
                break;
            }
        }
        (h, u)
    }

    /// Rank over Q (via HNF pivot count).
    pub fn rank(&self) -> usize {
        let (h, _) = self.hnf_with_transform();
        (0..h.rows)
            .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
            .count()
    }

    /// Basis of the integer row kernel `{ v : v * self = 0 }`, Hermite-reduced,
    /// rows ordered by pivot column.
    pub fn left_kernel(&self) -> Vec<Vec<BigInt>> {
        let (h, u) = self.hnf_with_transform();
        let mut ker: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..h.rows {
            if h.row(i).iter().all(|x| x.is_zero()) {
                ker.push(u.row(i).to_vec());
            }
        }
        if ker.is_empty() {
            return ker;
        }
        let (kh, _) = ZMat {
            rows: ker.len(),
            cols: self.rows,
            data: ker.into_iter().flatten().collect(),
        }
        .hnf_with_transform();
        (0..kh.rows)
            .filter(|&i| kh.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| kh.row(i).to_vec())
            .collect()
    }

    /// Diagonal of the Smith normal form (nonnegative, divisibility chain).
    pub fn snf_diagonal(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let n = m.rows.min(m.cols);
        let mut out = Vec::with_capacity(n);
        let mut top = 0;
        while top < n {
            // find a nonzero entry in the submatrix
            let mut piv: Option<(usize, usize)> = None;
            for i in top..m.rows {
                for j in top..m.cols {
                    if !m[(i, j)].is_zero()
                        && piv.is_none_or(|(pi, pj)| m[(i, j)].abs() < m[(pi, pj)].abs())
                    {
                        piv = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = piv else { break };
            m.swap_rows(top, pi);
            m.swap_cols(top, pj);
            // clear row and column `top`
            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in (top + 1)..m.rows {
                    if !m[(i, top)].is_zero() {
                        let q = -(&m[(i, top)] / &m[(top, top)]);
                        m.add_multiple(i, top, &q);
                        if !m[(i, top)].is_zero() {
                            m.swap_rows(top, i);
                            dirty = true;
                        }
                    }
                }
                for j in (top + 1)..m.cols {
                    if !m[(top, j)].is_zero() {
                        let q = -(&m[(top, j)] / &m[(top, top)]);
                        m.add_col_multiple(j, top, &q);
                        if !m[(top, j)].is_zero() {
                            m.swap_cols(top, j);
                            dirty = true;
                        }
                    }
                }
            }
            // enforce divisibility: pivot must divide every remaining entry
            let mut fixed = false;
            'outer: for i in (top + 1)..m.rows {
                for j in (top + 1)..m.cols {
                    if !(&m[(i, j)] % &m[(top, top)]).is_zero() {
                        let one = BigInt::one();
                        m.add_multiple(top, i, &one);
                        fixed = true;
                        break 'outer;
                    }
                }
            }
            if fixed {
                continue;
            }
            out.push(m[(top, top)].abs());
            top += 1;
        }
        while out.len() < n {
            out.push(BigInt::zero());
        }
        out
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self[(r, dst)] + q * &self[(r, src)];
            self[(r, dst)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for ZMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ZMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
