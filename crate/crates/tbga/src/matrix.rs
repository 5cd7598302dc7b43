//! Exact dense linear algebra over GF(p).
//!
//! Rows over GF(2) are bit-packed into `u64` words; the enumeration workload
//! is rank and kernel computations over GF(2) at sizes up to a few hundred,
//! and bit-packing gives the needed throughput. Other primes are stored
//! bytewise. No floating point anywhere.

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[inline]
pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

#[derive(Debug, Clone)]
enum Data {
    /// p = 2: one bit per entry, row-major words, padding bits kept zero.
    Bit { wpr: usize, words: Vec<u64> },
    /// General p: one byte per entry, row-major.
    Byte(Vec<u8>),
}

/// Dense matrix over a prime field with exact arithmetic.
#[derive(Debug, Clone)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Data,
}

impl PartialEq for FMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == other.get(r, c)))
    }
}
impl Eq for FMatrix {}

impl FMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        let data = if field.is_binary() {
            Data::Bit {
                wpr: words_for(cols),
                words: vec![0; rows * words_for(cols)],
            }
        } else {
            Data::Byte(vec![0; rows * cols])
        };
        FMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = FMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row-major entries (canonical residues).
    pub fn from_entries(field: PrimeField, rows: usize, cols: usize, entries: &[u8]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        let mut m = FMatrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, entries[r * cols + c] % field.modulus());
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Self {
        let mut m = FMatrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                if v != 0 {
                    m.set(r, c, v % field.modulus());
                }
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.data {
            Data::Bit { wpr, words } => {
                ((words[r * wpr + c / 64] >> (c % 64)) & 1) as u8
            }
            Data::Byte(b) => b[r * self.cols + c],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!(r < self.rows && c < self.cols);
        debug_assert!(v < self.field.modulus());
        match &mut self.data {
            Data::Bit { wpr, words } => {
                let w = &mut words[r * *wpr + c / 64];
                let mask = 1u64 << (c % 64);
                if v & 1 == 1 {
                    *w |= mask;
                } else {
                    *w &= !mask;
                }
            }
            Data::Byte(b) => b[r * self.cols + c] = v,
        }
    }

    /// Row as unpacked canonical residues.
    pub fn row_entries(&self, r: usize) -> Vec<u8> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Bit { words, .. } => words.iter().all(|&w| w == 0),
            Data::Byte(b) => b.iter().all(|&x| x == 0),
        }
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    t.set(c, r, v);
                }
            }
        }
        t
    }

    /// Entry-wise negation; the identity map over GF(2).
    pub fn neg(&self) -> FMatrix {
        match &self.data {
            Data::Bit { .. } => self.clone(),
            Data::Byte(b) => {
                let f = self.field;
                let data = b.iter().map(|&x| f.neg(x)).collect();
                FMatrix {
                    field: f,
                    rows: self.rows,
                    cols: self.cols,
                    data: Data::Byte(data),
                }
            }
        }
    }

    pub fn add(&self, other: &FMatrix) -> Result<FMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        match (&mut out.data, &other.data) {
            (Data::Bit { words, .. }, Data::Bit { words: ow, .. }) => {
                for (a, b) in words.iter_mut().zip(ow) {
                    *a ^= b;
                }
            }
            (Data::Byte(a), Data::Byte(b)) => {
                let f = self.field;
                for (x, y) in a.iter_mut().zip(b) {
                    *x = f.add(*x, *y);
                }
            }
            _ => return Err(Error::MixedContext),
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FMatrix) -> Result<FMatrix> {
        self.add(&other.neg())
    }

    fn check_same_shape(&self, other: &FMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedContext);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::MixedContext);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = FMatrix::zero(self.field, self.rows, other.cols);
        match (&self.data, &other.data, &mut out.data) {
            (Data::Bit { wpr: wa, words: a }, Data::Bit { wpr: wb, words: b }, Data::Bit { words: o, .. }) => {
                // C_row_i = XOR of B_row_j over set bits j of A_row_i.
                for i in 0..self.rows {
                    let arow = &a[i * wa..(i + 1) * wa];
                    let orow = &mut o[i * wb..(i + 1) * wb];
                    for (wi, &w) in arow.iter().enumerate() {
                        let mut bits = w;
                        while bits != 0 {
                            let j = wi * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            let brow = &b[j * wb..(j + 1) * wb];
                            for (x, y) in orow.iter_mut().zip(brow) {
                                *x ^= y;
                            }
                        }
                    }
                }
            }
            (Data::Byte(a), Data::Byte(b), Data::Byte(o)) => {
                let p = self.field.modulus() as u32;
                let (n, m, k) = (self.rows, other.cols, self.cols);
                for i in 0..n {
                    for t in 0..k {
                        let av = a[i * k + t] as u32;
                        if av == 0 {
                            continue;
                        }
                        for j in 0..m {
                            let cur = o[i * m + j] as u32;
                            o[i * m + j] = ((cur + av * b[t * m + j] as u32) % p) as u8;
                        }
                    }
                }
            }
            _ => return Err(Error::MixedContext),
        }
        Ok(out)
    }

    /// Matrix-vector product `M v` with `v` given as residues.
    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = self.field;
        let mut out = vec![0u8; self.rows];
        for r in 0..self.rows {
            let mut acc = 0u32;
            for c in 0..self.cols {
                acc += self.get(r, c) as u32 * v[c] as u32;
            }
            out[r] = (acc % f.modulus() as u32) as u8;
        }
        Ok(out)
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hcat(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::MixedContext);
        }
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: other.rows,
            });
        }
        let mut out = FMatrix::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, c, v);
                }
            }
            for c in 0..other.cols {
                let v = other.get(r, c);
                if v != 0 {
                    out.set(r, self.cols + c, v);
                }
            }
        }
        Ok(out)
    }

    /// Vertical stacking `(self ; other)`.
    pub fn vcat(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.field != other.field {
            return Err(Error::MixedContext);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut out = FMatrix::zero(self.field, self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, c, v);
                }
            }
        }
        for r in 0..other.rows {
            for c in 0..self.cols {
                let v = other.get(r, c);
                if v != 0 {
                    out.set(self.rows + r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Submatrix on the given row and column index lists (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FMatrix {
        let mut out = FMatrix::zero(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rows permuted by `perm`: row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> FMatrix {
        debug_assert_eq!(perm.len(), self.rows);
        let idx: Vec<usize> = (0..self.cols).collect();
        self.submatrix(perm, &idx)
    }

    pub fn rank(&self) -> usize {
        match &self.data {
            Data::Bit { wpr, words } => {
                let mut rows: Vec<Vec<u64>> = (0..self.rows)
                    .map(|r| words[r * wpr..(r + 1) * wpr].to_vec())
                    .collect();
                b2_rref(&mut rows, self.cols).len()
            }
            Data::Byte(_) => {
                let mut rows: Vec<Vec<u8>> =
                    (0..self.rows).map(|r| self.row_entries(r)).collect();
                bp_rref(self.field, &mut rows).len()
            }
        }
    }

    /// Reduced row echelon form; returns the reduced matrix (zero rows dropped)
    /// and the pivot column of each remaining row.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        match &self.data {
            Data::Bit { wpr, words } => {
                let mut rows: Vec<Vec<u64>> = (0..self.rows)
                    .map(|r| words[r * wpr..(r + 1) * wpr].to_vec())
                    .collect();
                let pivots = b2_rref(&mut rows, self.cols);
                let mut out = FMatrix::zero(self.field, pivots.len(), self.cols);
                if let Data::Bit { wpr: ow, words: o } = &mut out.data {
                    for (i, row) in rows.iter().take(pivots.len()).enumerate() {
                        o[i * *ow..(i + 1) * *ow].copy_from_slice(row);
                    }
                }
                (out, pivots)
            }
            Data::Byte(_) => {
                let mut rows: Vec<Vec<u8>> =
                    (0..self.rows).map(|r| self.row_entries(r)).collect();
                let pivots = bp_rref(self.field, &mut rows);
                let mut out = FMatrix::zero(self.field, pivots.len(), self.cols);
                for (i, row) in rows.iter().take(pivots.len()).enumerate() {
                    for (c, &v) in row.iter().enumerate() {
                        if v != 0 {
                            out.set(i, c, v);
                        }
                    }
                }
                (out, pivots)
            }
        }
    }

    /// Basis of the right kernel `{v : M v = 0}`, one basis vector per row.
    /// Row count is `cols - rank`.
    pub fn nullspace(&self) -> FMatrix {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let f = self.field;
        let mut basis = FMatrix::zero(f, free.len(), self.cols);
        for (bi, &j) in free.iter().enumerate() {
            basis.set(bi, j, 1);
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, j);
                if v != 0 {
                    basis.set(bi, p, f.neg(v));
                }
            }
        }
        basis
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Result<FMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let aug = self.hcat(&FMatrix::identity(self.field, self.rows))?;
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::NotApplicable("matrix is singular"));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (self.cols..2 * self.cols).collect();
        Ok(r.submatrix(&rows, &cols))
    }

    /// Full-rank factorization `A = U D V` with `U`, `V` invertible and
    /// `D` diagonal 0/1 with exactly `rank A` leading ones.
    pub fn full_rank_factorization(&self) -> Result<(FMatrix, FMatrix, FMatrix)> {
        let (u, d, v, _) = self.frf_parts(None)?;
        Ok((u, d, v))
    }

    /// Idempotent pair `(E, F)` with `E^2 = E`, `F^2 = F`, `E A = A F = A`,
    /// and `rank E = rank F = rank A`, built from the factorization.
    pub fn idempotents(&self) -> Result<(FMatrix, FMatrix)> {
        self.idempotents_inner(None)
    }

    /// Same as [`idempotents`](Self::idempotents) but with the elimination run
    /// on rows reordered by `perm`, yielding a different (equally valid) choice.
    pub fn idempotents_with_row_perm(&self, perm: &[usize]) -> Result<(FMatrix, FMatrix)> {
        self.idempotents_inner(Some(perm))
    }

    fn idempotents_inner(&self, perm: Option<&[usize]>) -> Result<(FMatrix, FMatrix)> {
        let (u, d, v, u_inv) = self.frf_parts(perm)?;
        let e = u.mul(&d)?.mul(&u_inv)?;
        let f = v.inverse()?.mul(&d)?.mul(&v)?;
        Ok((e, f))
    }

    /// Returns (U, D, V, U^{-1}) with A = U D V.
    fn frf_parts(
        &self,
        perm: Option<&[usize]>,
    ) -> Result<(FMatrix, FMatrix, FMatrix, FMatrix)> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let f = self.field;
        // Row-reduce (optionally with permuted row order) carrying the
        // transform: P * A_perm = R in reduced echelon form.
        let base = match perm {
            Some(p) => {
                if p.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: p.len(),
                    });
                }
                self.permute_rows(p)
            }
            None => self.clone(),
        };
        // Eliminate with the identity appended, keeping all n rows so the
        // carried transform P stays square: P * base = R in reduced form.
        let (r_mat, pivots) = {
            let mut rows: Vec<Vec<u8>> = (0..n)
                .map(|i| {
                    let mut row = base.row_entries(i);
                    let mut id = vec![0u8; n];
                    id[i] = 1;
                    row.extend_from_slice(&id);
                    row
                })
                .collect();
            let pivots = bp_rref_full(f, &mut rows, self.cols);
            (rows, pivots)
        };
        let rank = pivots.len();
        // P = right block (all n rows), R = left block.
        let p_mat = FMatrix::from_fn(f, n, n, |i, j| r_mat[i][self.cols + j]);
        // V: first `rank` rows are the nonzero rows of R; remaining rows are
        // unit vectors on the non-pivot columns.
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
        let mut v = FMatrix::zero(f, n, n);
        for i in 0..rank {
            for c in 0..n {
                let x = r_mat[i][c];
                if x != 0 {
                    v.set(i, c, x);
                }
            }
        }
        for (i, &j) in free.iter().enumerate() {
            v.set(rank + i, j, 1);
        }
        let mut d = FMatrix::zero(f, n, n);
        for i in 0..rank {
            d.set(i, i, 1);
        }
        let u_of_base = p_mat.inverse()?;
        // Undo the row permutation: A = S^{-1} A_perm, so U = S^{-1} U_base.
        let (u, u_inv) = match perm {
            Some(p) => {
                let mut inv_perm = vec![0usize; n];
                for (i, &pi) in p.iter().enumerate() {
                    inv_perm[pi] = i;
                }
                // base = S A with S the row-selection matrix for `p`, so
                // A = (S^{-1} U_base) D V and U^{-1} = P S.
                (
                    u_of_base.permute_rows(&inv_perm),
                    p_mat.mul(&permutation_matrix(f, p))?,
                )
            }
            None => (u_of_base, p_mat),
        };
        debug_assert_eq!(u.mul(&d).unwrap().mul(&v).unwrap(), *self);
        Ok((u, d, v, u_inv))
    }

    /// Packed words of a row over GF(2); `None` for odd characteristic.
    pub(crate) fn packed_row(&self, r: usize) -> Option<&[u64]> {
        match &self.data {
            Data::Bit { wpr, words } => Some(&words[r * wpr..(r + 1) * wpr]),
            Data::Byte(_) => None,
        }
    }
}

/// Permutation matrix S with S[i][perm[i]] = 1, so (S M) row i = M row perm[i].
pub(crate) fn permutation_matrix(f: PrimeField, perm: &[usize]) -> FMatrix {
    let n = perm.len();
    let mut s = FMatrix::zero(f, n, n);
    for (i, &j) in perm.iter().enumerate() {
        s.set(i, j, 1);
    }
    s
}

/// In-place RREF of packed GF(2) rows; returns pivot columns. Reduced rows are
/// moved to the front in pivot order; the rest become zero. Pivot choice scans
/// columns left to right and rows top to bottom, so output is deterministic.
pub(crate) fn b2_rref(rows: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut done = 0usize;
    for c in 0..cols {
        let (wi, mask) = (c / 64, 1u64 << (c % 64));
        let Some(src) = (done..rows.len()).find(|&r| rows[r][wi] & mask != 0) else {
            continue;
        };
        rows.swap(done, src);
        let prow = rows[done].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != done && row[wi] & mask != 0 {
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        done += 1;
        if done == rows.len() {
            break;
        }
    }
    pivots
}

/// In-place RREF of bytewise rows over GF(p); returns pivot columns.
pub(crate) fn bp_rref(f: PrimeField, rows: &mut [Vec<u8>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    bp_rref_full(f, rows, cols)
}

/// RREF over the first `cols` entries of each (possibly longer) row; trailing
/// entries ride along, which is how inverses and transforms are carried.
pub(crate) fn bp_rref_full(f: PrimeField, rows: &mut [Vec<u8>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut done = 0usize;
    for c in 0..cols {
        let Some(src) = (done..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(done, src);
        let inv = f.inv(rows[done][c]).expect("pivot is nonzero");
        if inv != 1 {
            for x in rows[done].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let prow = rows[done].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == done || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = f.sub(*x, f.mul(factor, *y));
            }
        }
        pivots.push(c);
        done += 1;
        if done == rows.len() {
            break;
        }
    }
    pivots
}

/// Reduced-echelon cache of a row space, supporting O(rank * cols)
/// membership queries.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: PrimeField,
    cols: usize,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    Bit {
        wpr: usize,
        rows: Vec<Vec<u64>>,
        pivots: Vec<usize>,
    },
    Byte {
        rows: Vec<Vec<u8>>,
        pivots: Vec<usize>,
    },
}

impl RowSpace {
    pub fn new(m: &FMatrix) -> RowSpace {
        let (r, pivots) = m.rref();
        let kind = if m.field().is_binary() {
            let wpr = words_for(m.cols());
            let rows = (0..r.rows())
                .map(|i| r.packed_row(i).unwrap().to_vec())
                .collect();
            Kind::Bit { wpr, rows, pivots }
        } else {
            let rows = (0..r.rows()).map(|i| r.row_entries(i)).collect();
            Kind::Byte { rows, pivots }
        };
        RowSpace {
            field: m.field(),
            cols: m.cols(),
            kind,
        }
    }

    pub fn rank(&self) -> usize {
        match &self.kind {
            Kind::Bit { pivots, .. } => pivots.len(),
            Kind::Byte { pivots, .. } => pivots.len(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True iff `v` lies in the cached row space.
    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        match &self.kind {
            Kind::Bit { wpr, .. } => {
                let mut packed = vec![0u64; *wpr];
                for (c, &x) in v.iter().enumerate() {
                    if x & 1 == 1 {
                        packed[c / 64] |= 1u64 << (c % 64);
                    }
                }
                Ok(self.contains_packed_scratch(&mut packed))
            }
            Kind::Byte { .. } => {
                let mut w = v.to_vec();
                Ok(self.contains_bytes_scratch(&mut w))
            }
        }
    }

    /// Membership for a packed GF(2) vector; clobbers `v` as scratch.
    #[inline]
    pub(crate) fn contains_packed_scratch(&self, v: &mut [u64]) -> bool {
        let Kind::Bit { rows, pivots, .. } = &self.kind else {
            unreachable!("packed query on odd-characteristic space");
        };
        for (row, &c) in rows.iter().zip(pivots) {
            if (v[c / 64] >> (c % 64)) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x ^= y;
                }
            }
        }
        v.iter().all(|&w| w == 0)
    }

    /// Membership for a bytewise vector; clobbers `v` as scratch.
    #[inline]
    pub(crate) fn contains_bytes_scratch(&self, v: &mut [u8]) -> bool {
        let Kind::Byte { rows, pivots } = &self.kind else {
            unreachable!("byte query on GF(2) space");
        };
        let f = self.field;
        for (row, &c) in rows.iter().zip(pivots) {
            if v[c] != 0 {
                let factor = v[c];
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(factor, *y));
                }
            }
        }
        v.iter().all(|&w| w == 0)
    }
}
