//! Polynomials over GF(p), Smith normal form of polynomial matrices, and the
//! gcd-based dimension formulas for generalized-bicycle and quasicyclic
//! lifted-product codes.

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Polynomial over a prime field, coefficients lowest degree first, highest
/// stored coefficient nonzero (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u8>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u8>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.modulus();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: vec![1],
        }
    }

    /// x^n - 1, the modulus of F[x]/(x^n - 1).
    pub fn x_pow_minus_one(field: PrimeField, n: usize) -> Self {
        let mut coeffs = vec![0u8; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Poly::new(field, coeffs)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn scale(&self, c: u8) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let p = f.modulus() as u32;
        let mut acc = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u32 * b as u32) % p;
            }
        }
        Poly::new(f, acc.into_iter().map(|x| x as u8).collect())
    }

    /// Shifted multiple: c * x^k * self.
    fn shift_scale(&self, c: u8, k: usize) -> Poly {
        if self.is_zero() || c == 0 {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut coeffs = vec![0u8; k];
        coeffs.extend(self.coeffs.iter().map(|&x| f.mul(x, c)));
        Poly::new(f, coeffs)
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divmod(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let f = self.field;
        let dd = div.degree().unwrap();
        let lead_inv = f.inv(div.leading()).expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Poly::zero(f);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = f.mul(rem.leading(), lead_inv);
            let k = rd - dd;
            let mut qc = vec![0u8; k + 1];
            qc[k] = c;
            quot = quot.add(&Poly::new(f, qc));
            rem = rem.sub(&div.shift_scale(c, k));
        }
        (quot, rem)
    }

    pub fn rem(&self, div: &Poly) -> Poly {
        self.divmod(div).1
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading");
        self.scale(inv)
    }

    /// Monic gcd by the Euclidean algorithm; errors when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: u8) -> u8 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0u8, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

/// gcd(a, b, x^n - 1), tolerating zero arguments.
pub fn gcd_with_modulus(a: &Poly, b: &Poly, n: usize) -> Poly {
    let m = Poly::x_pow_minus_one(a.field(), n);
    let g = a.gcd(b).unwrap_or(m.clone());
    g.gcd(&m).expect("modulus is nonzero")
}

/// Dimension of the generalized-bicycle code GB[a(x), b(x)] of length 2n:
/// k = 2 deg gcd(a, b, x^n - 1).
pub fn gb_dimension(a: &Poly, b: &Poly, n: usize) -> usize {
    2 * gcd_with_modulus(a, b, n).degree().unwrap_or(0)
}

/// Dense matrix with polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            field,
            rows,
            cols,
            entries: vec![Poly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = PolyMatrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Poly::one(field);
        }
        m
    }

    pub fn from_entries(field: PrimeField, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(PolyMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut Poly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(self.field);
                for t in 0..self.cols {
                    acc = acc.add(&self.at(i, t).mul(other.at(t, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    /// Determinant by cofactor expansion (test-scale sizes only).
    pub fn determinant(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        match self.rows {
            0 => Poly::one(self.field),
            1 => self.at(0, 0).clone(),
            n => {
                let mut acc = Poly::zero(self.field);
                for j in 0..n {
                    let a = self.at(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let minor_entries: Vec<Poly> = (1..n)
                        .flat_map(|r| {
                            (0..n).filter(|&c| c != j).map(move |c| self.at(r, c).clone())
                        })
                        .collect();
                    let minor =
                        PolyMatrix::from_entries(self.field, n - 1, n - 1, minor_entries)
                            .unwrap();
                    let term = a.mul(&minor.determinant());
                    acc = if j % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                acc
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &Poly) {
        for c in 0..self.cols {
            let v = self.at(dst, c).add(&q.mul(self.at(src, c)));
            *self.at_mut(dst, c) = v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &Poly) {
        for r in 0..self.rows {
            let v = self.at(r, dst).add(&q.mul(self.at(r, src)));
            *self.at_mut(r, dst) = v;
        }
    }

    fn scale_row(&mut self, r: usize, c: u8) {
        for j in 0..self.cols {
            let v = self.at(r, j).scale(c);
            *self.at_mut(r, j) = v;
        }
    }

    fn scale_col(&mut self, c: usize, x: u8) {
        for r in 0..self.rows {
            let v = self.at(r, c).scale(x);
            *self.at_mut(r, c) = v;
        }
    }
}

/// Smith normal form over F[x]: M = U * D * V with U, V invertible over F[x]
/// (their determinants are nonzero field constants), D diagonal with monic
/// invariants forming a divisibility chain.
///
/// Pivoting picks the lowest-degree nonzero entry, ties broken row-major.
pub fn poly_snf(m: &PolyMatrix) -> (PolyMatrix, PolyMatrix, PolyMatrix) {
    let field = m.field;
    let mut d = m.clone();
    // Accumulate inverses of the applied row/col ops so m = u * d * v holds.
    let mut u = PolyMatrix::identity(field, m.rows);
    let mut v = PolyMatrix::identity(field, m.cols);
    let steps = m.rows.min(m.cols);
    for t in 0..steps {
        'pivot: loop {
            // lowest-degree nonzero entry in the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for r in t..d.rows {
                for c in t..d.cols {
                    if let Some(deg) = d.at(r, c).degree() {
                        if best.map_or(true, |(bd, _, _)| deg < bd) {
                            best = Some((deg, r, c));
                        }
                    }
                }
            }
            let Some((_, pr, pc)) = best else {
                break 'pivot; // trailing block is zero
            };
            // Move pivot to (t, t). Row swap on D compensates as a column
            // swap on U; column swap on D as a row swap on V.
            d.swap_rows(t, pr);
            u.swap_cols(t, pr);
            d.swap_cols(t, pc);
            v.swap_rows(t, pc);
            // Reduce column t below/above and row t right of the pivot.
            let mut dirty = false;
            for r in t + 1..d.rows {
                if !d.at(r, t).is_zero() {
                    let (q, _) = d.at(r, t).divmod(d.at(t, t));
                    let nq = q.scale(field.neg(1));
                    d.add_row_multiple(r, t, &nq);
                    u.add_col_multiple(t, r, &q);
                    if !d.at(r, t).is_zero() {
                        dirty = true; // remainder became the new smaller entry
                    }
                }
            }
            for c in t + 1..d.cols {
                if !d.at(t, c).is_zero() {
                    let (q, _) = d.at(t, c).divmod(d.at(t, t));
                    let nq = q.scale(field.neg(1));
                    d.add_col_multiple(c, t, &nq);
                    v.add_row_multiple(t, c, &q);
                    if !d.at(t, c).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Divisibility: pivot must divide every trailing entry; if not,
            // fold the offending row into row t and reduce again.
            let mut offender = None;
            'scan: for r in t + 1..d.rows {
                for c in t + 1..d.cols {
                    if !d.at(r, c).rem(d.at(t, t)).is_zero() {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => {
                    let one = Poly::one(field);
                    let neg_one = one.scale(field.neg(1));
                    d.add_row_multiple(t, r, &one);
                    u.add_col_multiple(r, t, &neg_one);
                }
                None => break 'pivot,
            }
        }
        // Monic normalization, compensated in U.
        if !d.at(t, t).is_zero() {
            let lead = d.at(t, t).leading();
            if lead != 1 {
                let inv = field.inv(lead).expect("nonzero leading");
                d.scale_row(t, inv);
                u.scale_col(t, lead);
            }
        }
    }
    (u, d, v)
}

/// SNF invariants of `m`, padded with zero polynomials to min(rows, cols).
pub fn snf_invariants(m: &PolyMatrix) -> Vec<Poly> {
    let (_, d, _) = poly_snf(m);
    (0..m.rows.min(m.cols)).map(|i| d.at(i, i).clone()).collect()
}

/// Dimension of the quasicyclic lifted-product code built from polynomial
/// matrices A (r_A x n_A) and B (r_B x n_B) over F[x]/(x^n - 1).
///
/// After Smith reduction the code splits into generalized-bicycle pieces
/// indexed by invariant pairs (zero invariants included). For square inputs
/// this gives k = 2 sum_{i,j} deg gcd(a_i, b_j, x^n - 1); rectangular shapes
/// additionally contribute unchecked qudits and redundant checks, counted by
/// the shape term below. Valid with no semisimplicity assumption on n.
pub fn qc_lp_dimension(a: &PolyMatrix, b: &PolyMatrix, n: usize) -> usize {
    let (ra, na) = (a.rows(), a.cols());
    let (rb, nb) = (b.rows(), b.cols());
    // invariants padded with zeros out to the full index ranges
    let pad = |inv: Vec<Poly>, len: usize, f: PrimeField| -> Vec<Poly> {
        let mut v = inv;
        v.resize(len, Poly::zero(f));
        v
    };
    let f = a.field;
    let ia = pad(snf_invariants(a), ra.max(na), f);
    let ib = pad(snf_invariants(b), rb.max(nb), f);
    let g = |i: usize, j: usize| -> usize {
        gcd_with_modulus(&ia[i], &ib[j], n).degree().unwrap_or(0)
    };
    let mut sum_x = 0usize; // X-check grid [r_A] x [r_B]
    for i in 0..ra {
        for j in 0..rb {
            sum_x += g(i, j);
        }
    }
    let mut sum_z = 0usize; // Z-check grid [n_A] x [n_B]
    for i in 0..na {
        for j in 0..nb {
            sum_z += g(i, j);
        }
    }
    let qudits = n * (na * rb + ra * nb);
    let checks = n * (ra * rb + na * nb);
    qudits + sum_x + sum_z - checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, coeffs: &[u8]) -> Poly {
        Poly::new(gf(p), coeffs.to_vec())
    }

    #[test]
    fn gcd_cases() {
        // gcd(f, 0) = monic f
        let f = poly(3, &[2, 1]);
        assert_eq!(f.gcd(&Poly::zero(gf(3))).unwrap(), f.monic());
        // over GF(2): gcd(1+x, 1+x^2) = 1+x since 1+x^2 = (1+x)^2
        let a = poly(2, &[1, 1]);
        let b = poly(2, &[1, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), a);
        // coprime
        let x = poly(2, &[0, 1]);
        assert_eq!(x.gcd(&a).unwrap(), Poly::one(gf(2)));
        assert!(matches!(
            Poly::zero(gf(2)).gcd(&Poly::zero(gf(2))),
            Err(Error::BothZero)
        ));
    }

    #[test]
    fn divmod_property() {
        let mut rng = SplitMix64::new(2024);
        for p in [2u64, 3, 5] {
            let f = gf(p);
            for _ in 0..100 {
                let a = Poly::new(
                    f,
                    (0..8).map(|_| rng.below(p) as u8).collect(),
                );
                let b = Poly::new(
                    f,
                    (0..4).map(|_| rng.below(p) as u8).collect(),
                );
                if b.is_zero() {
                    continue;
                }
                let (q, r) = a.divmod(&b);
                assert_eq!(q.mul(&b).add(&r), a);
                if let Some(rd) = r.degree() {
                    assert!(rd < b.degree().unwrap());
                }
            }
        }
    }

    #[test]
    fn gb_dimension_cases() {
        // a = b = 0: gcd = x^n - 1, k = 2n
        let z = Poly::zero(gf(2));
        assert_eq!(gb_dimension(&z, &z, 5), 10);
        // GF(2), n = 3, a = 1+x, b = 1+x^2: gcd = 1+x, k = 2
        let a = poly(2, &[1, 1]);
        let b = poly(2, &[1, 0, 1]);
        assert_eq!(gb_dimension(&a, &b, 3), 2);
    }

    #[test]
    fn snf_diagonal_and_swap() {
        let f = gf(2);
        // M = diag(x, 1) sorts into diag(1, x)
        let m = PolyMatrix::from_entries(
            f,
            2,
            2,
            vec![poly(2, &[0, 1]), Poly::zero(f), Poly::zero(f), Poly::one(f)],
        )
        .unwrap();
        let (u, d, v) = poly_snf(&m);
        assert_eq!(u.mul(&d).mul(&v), m);
        assert_eq!(d.at(0, 0), &Poly::one(f));
        assert_eq!(d.at(1, 1), &poly(2, &[0, 1]));
    }

    fn random_poly_matrix(
        f: PrimeField,
        rows: usize,
        cols: usize,
        maxdeg: usize,
        rng: &mut SplitMix64,
    ) -> PolyMatrix {
        let entries = (0..rows * cols)
            .map(|_| {
                Poly::new(
                    f,
                    (0..=rng.below(maxdeg as u64 + 1) as usize)
                        .map(|_| rng.below(f.modulus() as u64) as u8)
                        .collect(),
                )
            })
            .collect();
        PolyMatrix::from_entries(f, rows, cols, entries).unwrap()
    }

    #[test]
    fn snf_random_reconstruction_and_chain() {
        let mut rng = SplitMix64::new(7);
        for p in [2u64, 3] {
            let f = gf(p);
            for _ in 0..60 {
                let rows = 1 + rng.below(3) as usize;
                let cols = 1 + rng.below(3) as usize;
                let m = random_poly_matrix(f, rows, cols, 3, &mut rng);
                let (u, d, v) = poly_snf(&m);
                // reconstruction
                assert_eq!(u.mul(&d).mul(&v), m);
                // diagonal, monic, divisibility chain
                let k = rows.min(cols);
                for i in 0..rows {
                    for j in 0..cols {
                        if i != j {
                            assert!(d.at(i, j).is_zero());
                        }
                    }
                }
                for i in 0..k {
                    let di = d.at(i, i);
                    if !di.is_zero() {
                        assert_eq!(di.leading(), 1);
                    }
                    if i + 1 < k && !d.at(i + 1, i + 1).is_zero() {
                        assert!(!di.is_zero());
                        assert!(d.at(i + 1, i + 1).rem(di).is_zero());
                    }
                }
                // unit determinants: nonzero field constants
                for t in [&u, &v] {
                    let det = t.determinant();
                    assert_eq!(det.degree(), Some(0));
                }
            }
        }
    }

    #[test]
    fn qc_lp_dimension_reduces_to_gb() {
        let f = gf(2);
        let a = PolyMatrix::from_entries(f, 1, 1, vec![poly(2, &[1, 1])]).unwrap();
        let b = PolyMatrix::from_entries(f, 1, 1, vec![poly(2, &[1, 0, 1])]).unwrap();
        assert_eq!(
            qc_lp_dimension(&a, &b, 3),
            gb_dimension(&poly(2, &[1, 1]), &poly(2, &[1, 0, 1]), 3)
        );
    }
}
