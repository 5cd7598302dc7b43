//! Two-block group-algebra CSS codes: assembly from (G, F, a, b), exact
//! dimension and rank-defect structure, double-coset connectivity, pair
//! equivalence transforms, and canonical representatives.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::GroupTable;
use crate::matrix::FMatrix;

/// An assembled two-block code with H_X = (A | B) and H_Z = (B^T | -A^T),
/// where A = L(a) and B = R(b). Both CSS invariants are verified at build
/// time: H_X H_Z^T = 0 and A B = B A.
#[derive(Debug, Clone)]
pub struct TwoBlockCode {
    group: Arc<GroupTable>,
    field: PrimeField,
    a: AlgebraElement,
    b: AlgebraElement,
    a_mat: FMatrix,
    b_mat: FMatrix,
    hx: FMatrix,
    hz: FMatrix,
}

/// Gauge structure of a two-block code: p* = rank(AB), the rank defects, and
/// the subsystem dimension, tied together by k = 2 k_s + delta_x + delta_z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureParams {
    pub p_star: usize,
    pub delta_x: usize,
    pub delta_z: usize,
    pub k_s: usize,
    pub k: usize,
}

/// One double-coset subcode: the coset's elements and the restricted
/// check-matrix pair (rows and both column blocks indexed by the coset).
#[derive(Debug, Clone)]
pub struct Component {
    pub coset: Vec<u32>,
    pub hx: FMatrix,
    pub hz: FMatrix,
}

impl TwoBlockCode {
    pub fn build(a: AlgebraElement, b: AlgebraElement) -> Result<Self> {
        if a.field() != b.field() {
            return Err(Error::MixedContext);
        }
        if !Arc::ptr_eq(a.group(), b.group()) && **a.group() != **b.group() {
            return Err(Error::MixedContext);
        }
        let group = a.group().clone();
        let field = a.field();
        let a_mat = a.left_matrix();
        let b_mat = b.right_matrix();
        let hx = a_mat.hcat(&b_mat)?;
        let hz = b_mat.transpose().hcat(&a_mat.transpose().neg())?;
        debug_assert!(hx.mul(&hz.transpose())?.is_zero());
        debug_assert_eq!(a_mat.mul(&b_mat)?, b_mat.mul(&a_mat)?);
        Ok(TwoBlockCode {
            group,
            field,
            a,
            b,
            a_mat,
            b_mat,
            hx,
            hz,
        })
    }

    #[inline]
    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }
    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn a(&self) -> &AlgebraElement {
        &self.a
    }
    #[inline]
    pub fn b(&self) -> &AlgebraElement {
        &self.b
    }
    /// A = L(a).
    #[inline]
    pub fn a_matrix(&self) -> &FMatrix {
        &self.a_mat
    }
    /// B = R(b).
    #[inline]
    pub fn b_matrix(&self) -> &FMatrix {
        &self.b_mat
    }
    #[inline]
    pub fn hx(&self) -> &FMatrix {
        &self.hx
    }
    #[inline]
    pub fn hz(&self) -> &FMatrix {
        &self.hz
    }

    /// Block length n = 2|G|.
    #[inline]
    pub fn n(&self) -> usize {
        2 * self.group.order()
    }

    /// Code dimension k = n - rank H_X - rank H_Z.
    pub fn dimension(&self) -> usize {
        self.n() - self.hx.rank() - self.hz.rank()
    }

    /// Rank-defect structure.
    ///
    /// The defects are pinned by the check-matrix ranks:
    /// p* + delta_x = rank A + rank B - rank H_X (and likewise for H_Z),
    /// equivalently delta_x = dim(im A intersect im B) - rank(AB). A product
    /// rank over a specific idempotent pair, rank(E_A B), equals p* + delta_x
    /// exactly when the chosen kernel of E_A splits im B; for an arbitrary
    /// factorization-derived choice it can only overshoot, so the rank route
    /// is the well-defined one.
    pub fn structure_params(&self) -> StructureParams {
        let l = self.group.order();
        let rank_a = self.a_mat.rank();
        let rank_b = self.b_mat.rank();
        let p_star = self.a_mat.mul(&self.b_mat).expect("same shape").rank();
        let rank_hx = self.hx.rank();
        let rank_hz = self.hz.rank();
        let delta_x = rank_a + rank_b - rank_hx - p_star;
        let delta_z = rank_a + rank_b - rank_hz - p_star;
        let k_s = l - rank_hx - delta_x;
        let k = 2 * l - rank_hx - rank_hz;
        debug_assert_eq!(rank_hz, l - k_s - delta_z);
        debug_assert_eq!(k, 2 * k_s + delta_x + delta_z);
        StructureParams {
            p_star,
            delta_x,
            delta_z,
            k_s,
            k,
        }
    }

    /// Double cosets G_a\G/G_b of the support groups; one per component.
    pub fn component_cosets(&self) -> Vec<BTreeSet<u32>> {
        let ga = self.a.support_group();
        let gb = self.b.support_group();
        self.group
            .double_cosets(&ga, &gb)
            .expect("support groups are subgroups")
    }

    pub fn is_connected(&self) -> bool {
        self.component_cosets().len() == 1
    }

    /// Polynomial view of a cyclic-group code: the images of a and b in
    /// F[x]/(x^l - 1) under the discrete logarithm of a generator, together
    /// with l. None when the group is not cyclic. The generalized-bicycle
    /// gcd dimension of the view equals the code dimension.
    pub fn gb_view(&self) -> Option<(crate::poly::Poly, crate::poly::Poly, usize)> {
        let g = &self.group;
        let l = g.order();
        let generator = g
            .elements()
            .find(|&e| g.element_order(e) == l)?;
        let mut log = vec![0usize; l];
        let mut cur = g.id();
        for i in 0..l {
            log[cur as usize] = i;
            cur = g.mul(cur, generator);
        }
        let to_poly = |e: &AlgebraElement| {
            let mut coeffs = vec![0u8; l];
            for (idx, c) in e.terms() {
                coeffs[log[idx as usize]] = c;
            }
            crate::poly::Poly::new(self.field, coeffs)
        };
        Some((to_poly(&self.a), to_poly(&self.b), l))
    }

    /// Splits the code into its double-coset subcodes. Row x of H_X and of
    /// H_Z lies in the block of the double coset containing x; the column
    /// blocks are the same coset in each half. Subcode dimensions add up to
    /// the full dimension.
    pub fn components(&self) -> Vec<Component> {
        let l = self.group.order();
        self.component_cosets()
            .into_iter()
            .map(|coset| {
                let rows: Vec<usize> = coset.iter().map(|&x| x as usize).collect();
                let cols: Vec<usize> = rows
                    .iter()
                    .copied()
                    .chain(rows.iter().map(|&x| x + l))
                    .collect();
                Component {
                    coset: coset.into_iter().collect(),
                    hx: self.hx.submatrix(&rows, &cols),
                    hz: self.hz.submatrix(&rows, &cols),
                }
            })
            .collect()
    }
}

impl Component {
    /// Subcode length (twice the coset size).
    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    pub fn dimension(&self) -> usize {
        self.n() - self.hx.rank() - self.hz.rank()
    }
}

/// CSS subsystem-code dimension k = n - rank G_X - rank G_Z + rank(G_X G_Z^T)
/// for gauge generator matrices whose rows need not be orthogonal.
pub fn subsystem_dimension(gx: &FMatrix, gz: &FMatrix) -> Result<usize> {
    if gx.cols() != gz.cols() {
        return Err(Error::DimensionMismatch {
            expected: gx.cols(),
            got: gz.cols(),
        });
    }
    let overlap = gx.mul(&gz.transpose())?.rank();
    Ok(gx.cols() + overlap - gx.rank() - gz.rank())
}

/// Equivalence transformations of a defining pair; each preserves (n, k) and
/// the unordered pair of CSS distances (swapping them for the last two kinds).
#[derive(Debug, Clone)]
pub enum PairTransform<'t> {
    /// (a, b) -> (phi(a), phi(b)) for a group automorphism given elementwise.
    Automorphism(&'t [u32]),
    /// (a, b) -> (alpha^{-1} a alpha, beta^{-1} b beta).
    Conjugate(u32, u32),
    /// (a, b) -> (x a, y b) for nonzero field scalars.
    Scale(u8, u8),
    /// (a, b) -> (a alpha, beta b).
    Translate(u32, u32),
    /// (a, b) -> (b-hat, a-hat).
    HatSwap,
    /// CSS dual: (a, b) -> (b, a).
    CssDual,
}

pub fn transform_pair(
    a: &AlgebraElement,
    b: &AlgebraElement,
    t: &PairTransform<'_>,
) -> Result<(AlgebraElement, AlgebraElement)> {
    let g = a.group().clone();
    match t {
        PairTransform::Automorphism(map) => {
            if !g.is_automorphism(map) {
                return Err(Error::InvalidTransform(
                    "map is not a group automorphism".to_string(),
                ));
            }
            Ok((a.apply_map(map), b.apply_map(map)))
        }
        PairTransform::Conjugate(alpha, beta) => {
            let ai = g.inv(*alpha);
            let bi = g.inv(*beta);
            Ok((
                a.translate_left(ai).translate_right(*alpha),
                b.translate_left(bi).translate_right(*beta),
            ))
        }
        PairTransform::Scale(x, y) => {
            let p = a.field().modulus();
            if x % p == 0 || y % p == 0 {
                return Err(Error::InvalidTransform("zero scale factor".to_string()));
            }
            Ok((a.scale(*x), b.scale(*y)))
        }
        PairTransform::Translate(alpha, beta) => {
            Ok((a.translate_right(*alpha), b.translate_left(*beta)))
        }
        PairTransform::HatSwap => Ok((b.hat(), a.hat())),
        PairTransform::CssDual => Ok((b.clone(), a.clone())),
    }
}

/// Comparison key: supports compared as sorted index sequences, then (for
/// odd characteristic) the coefficient word in support order.
pub fn elem_key(e: &AlgebraElement) -> (Vec<u32>, Vec<u8>) {
    let mut terms: Vec<(u32, u8)> = e.terms().collect();
    terms.sort_unstable();
    let support = terms.iter().map(|&(g, _)| g).collect();
    let coeffs = terms.iter().map(|&(_, c)| c).collect();
    (support, coeffs)
}

fn translated_key(e: &AlgebraElement, alpha: u32, beta: u32) -> (Vec<u32>, Vec<u8>) {
    let g = e.group();
    let mut terms: Vec<(u32, u8)> = e
        .terms()
        .map(|(h, c)| (g.mul(g.mul(alpha, h), beta), c))
        .collect();
    terms.sort_unstable();
    (
        terms.iter().map(|&(h, _)| h).collect(),
        terms.iter().map(|&(_, c)| c).collect(),
    )
}

/// Minimum of {alpha e beta} over all group pairs, under the canonical key.
pub fn two_sided_min(e: &AlgebraElement) -> AlgebraElement {
    let g = e.group().clone();
    let mut best_key = elem_key(e);
    let mut best = (0u32, 0u32);
    for alpha in g.elements() {
        for beta in g.elements() {
            let k = translated_key(e, alpha, beta);
            if k < best_key {
                best_key = k;
                best = (alpha, beta);
            }
        }
    }
    e.translate_left(best.0).translate_right(best.1)
}

/// True when no two-sided translate of `e` has a smaller key.
pub fn is_two_sided_minimal(e: &AlgebraElement) -> bool {
    let g = e.group().clone();
    let key = elem_key(e);
    for alpha in g.elements() {
        for beta in g.elements() {
            if translated_key(e, alpha, beta) < key {
                return false;
            }
        }
    }
    true
}

/// Canonical representative of the pair's equivalence class under two-sided
/// translations of each element separately, plus the hat-swap when the
/// weights agree. Returns (a_min, b_min, input-was-already-canonical).
pub fn canonical_pair(
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> (AlgebraElement, AlgebraElement, bool) {
    let a_min = two_sided_min(a);
    let b_min = two_sided_min(b);
    let (ca, cb) = if a.weight() == b.weight() {
        let swapped_a = two_sided_min(&b.hat());
        let swapped_b = two_sided_min(&a.hat());
        let k1 = (elem_key(&a_min), elem_key(&b_min));
        let k2 = (elem_key(&swapped_a), elem_key(&swapped_b));
        if k2 < k1 {
            (swapped_a, swapped_b)
        } else {
            (a_min, b_min)
        }
    } else {
        (a_min, b_min)
    };
    let canonical = ca == *a && cb == *b;
    (ca, cb, canonical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn elem(g: &Arc<GroupTable>, f: PrimeField, support: &[u32]) -> AlgebraElement {
        AlgebraElement::from_support(g.clone(), f, support)
    }

    fn random_elem(
        g: &Arc<GroupTable>,
        f: PrimeField,
        w: usize,
        rng: &mut SplitMix64,
    ) -> AlgebraElement {
        let terms: Vec<(u32, u8)> = (0..w)
            .map(|_| {
                (
                    rng.below(g.order() as u64) as u32,
                    1 + rng.below(f.modulus() as u64 - 1) as u8,
                )
            })
            .collect();
        AlgebraElement::from_terms(g.clone(), f, &terms)
    }

    fn sample_groups() -> Vec<Arc<GroupTable>> {
        vec![
            GroupTable::cyclic(8).unwrap().into_arc(),
            GroupTable::dihedral(4).unwrap().into_arc(),
            GroupTable::metacyclic(5, 4, 2).unwrap().into_arc(),
            GroupTable::cyclic(3)
                .unwrap()
                .direct_product(&GroupTable::cyclic(3).unwrap())
                .into_arc(),
            GroupTable::cyclic(4)
                .unwrap()
                .direct_product(&GroupTable::cyclic(2).unwrap())
                .into_arc(),
        ]
    }

    #[test]
    fn build_identity_pair() {
        let c3 = GroupTable::cyclic(3).unwrap().into_arc();
        let f = gf(2);
        let one = AlgebraElement::one(c3.clone(), f);
        let code = TwoBlockCode::build(one.clone(), one).unwrap();
        assert_eq!(code.n(), 6);
        assert_eq!(code.hx(), &FMatrix::identity(f, 3).hcat(&FMatrix::identity(f, 3)).unwrap());
        assert_eq!(code.dimension(), 0);
    }

    #[test]
    fn build_rejects_mixed_context() {
        let c3 = GroupTable::cyclic(3).unwrap().into_arc();
        let c4 = GroupTable::cyclic(4).unwrap().into_arc();
        let f = gf(2);
        let a = AlgebraElement::one(c3, f);
        let b = AlgebraElement::one(c4, f);
        assert!(matches!(TwoBlockCode::build(a, b), Err(Error::MixedContext)));
    }

    #[test]
    fn css_orthogonality_random() {
        let mut rng = SplitMix64::new(3);
        for g in sample_groups() {
            for p in [2u64, 3] {
                let f = gf(p);
                for _ in 0..8 {
                    let a = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                    let b = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                    let code = TwoBlockCode::build(a, b).unwrap();
                    assert!(code
                        .hx()
                        .mul(&code.hz().transpose())
                        .unwrap()
                        .is_zero());
                }
            }
        }
    }

    #[test]
    fn structure_params_identity_and_special_cases() {
        let mut rng = SplitMix64::new(5);
        for g in sample_groups() {
            for p in [2u64, 3] {
                let f = gf(p);
                for _ in 0..6 {
                    let a = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                    let b = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                    let code = TwoBlockCode::build(a, b).unwrap();
                    let sp = code.structure_params();
                    assert_eq!(sp.k, code.dimension());
                    assert_eq!(sp.k, 2 * sp.k_s + sp.delta_x + sp.delta_z);
                    if g.is_abelian() {
                        assert_eq!(sp.delta_x, sp.delta_z);
                    }
                }
            }
        }
        // cyclic groups with semisimple group algebra: both defects vanish
        let mut rng = SplitMix64::new(6);
        for (l, p) in [(9usize, 2u64), (15, 2), (8, 3), (10, 3)] {
            let g = GroupTable::cyclic(l).unwrap().into_arc();
            let f = gf(p);
            for _ in 0..15 {
                let a = random_elem(&g, f, 1 + rng.below(5) as usize, &mut rng);
                let b = random_elem(&g, f, 1 + rng.below(5) as usize, &mut rng);
                let sp = TwoBlockCode::build(a, b).unwrap().structure_params();
                assert_eq!(sp.delta_x, 0);
                assert_eq!(sp.delta_z, 0);
            }
        }
    }

    #[test]
    fn nonzero_defects_in_modular_characteristic() {
        // GB[1+x, 1+x] over GF(2)[C2] is the [[4,2,2]] toric code: A·B = 0,
        // k_S = 0, so Eq-(25)-consistent defects are delta_x = delta_z = 1.
        // Cyclic groups do not force vanishing defects when p divides the
        // group order.
        let c2 = GroupTable::cyclic(2).unwrap().into_arc();
        let f = gf(2);
        let a = elem(&c2, f, &[0, 1]);
        let code = TwoBlockCode::build(a.clone(), a).unwrap();
        assert_eq!(code.dimension(), 2);
        let sp = code.structure_params();
        assert_eq!(sp.p_star, 0);
        assert_eq!(sp.k_s, 0);
        assert_eq!(sp.delta_x, 1);
        assert_eq!(sp.delta_z, 1);
    }

    #[test]
    fn idempotent_products_bound_the_defects() {
        // For commuting L/R pairs and ANY valid idempotent pair of A:
        // rank(E_A B) >= p* + delta_x and rank(B F_A) >= p* + delta_z, since
        // E_A acts as the identity on im A and im A intersect im B has
        // dimension p* + delta_x. Equality holds for compatible choices.
        let mut rng = SplitMix64::new(8);
        for g in sample_groups() {
            for p in [2u64, 3] {
                let f = gf(p);
                for _ in 0..6 {
                    let a = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                    let b = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                    let code = TwoBlockCode::build(a, b).unwrap();
                    let sp = code.structure_params();
                    let l = g.order();
                    let (e0, f0) = code.a_matrix().idempotents().unwrap();
                    assert!(e0.mul(code.b_matrix()).unwrap().rank() >= sp.p_star + sp.delta_x);
                    assert!(code.b_matrix().mul(&f0).unwrap().rank() >= sp.p_star + sp.delta_z);
                    let mut perm: Vec<usize> = (0..l).collect();
                    rng.shuffle(&mut perm);
                    let (e1, f1) = code.a_matrix().idempotents_with_row_perm(&perm).unwrap();
                    assert!(e1.mul(code.b_matrix()).unwrap().rank() >= sp.p_star + sp.delta_x);
                    assert!(code.b_matrix().mul(&f1).unwrap().rank() >= sp.p_star + sp.delta_z);
                }
            }
        }
    }

    #[test]
    fn subsystem_dimension_cases() {
        let f = gf(2);
        let id = FMatrix::identity(f, 4);
        assert_eq!(subsystem_dimension(&id, &id).unwrap(), 0);
        // orthogonal rows reduce to the stabilizer formula
        let mut rng = SplitMix64::new(11);
        for g in sample_groups() {
            let a = random_elem(&g, f, 2, &mut rng);
            let b = random_elem(&g, f, 3, &mut rng);
            let code = TwoBlockCode::build(a, b).unwrap();
            let k = subsystem_dimension(code.hx(), code.hz()).unwrap();
            assert_eq!(k, code.dimension());
            // the block-erasure subsystem code has dimension k_s
            let ks = subsystem_dimension(code.a_matrix(), &code.b_matrix().transpose()).unwrap();
            assert_eq!(ks, code.structure_params().k_s);
        }
        let bad = FMatrix::identity(f, 3);
        assert!(matches!(
            subsystem_dimension(&id, &bad),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn components_cases() {
        let f = gf(2);
        // C12, a = 1+x^2, b = 1+x^3: support groups generate everything
        let c12 = GroupTable::cyclic(12).unwrap().into_arc();
        let code = TwoBlockCode::build(elem(&c12, f, &[0, 2]), elem(&c12, f, &[0, 3])).unwrap();
        assert!(code.is_connected());
        // C8, a = 1+x^2, b = 1+x^4: two components, each a length-8 code
        let c8 = GroupTable::cyclic(8).unwrap().into_arc();
        let code = TwoBlockCode::build(elem(&c8, f, &[0, 2]), elem(&c8, f, &[0, 4])).unwrap();
        let comps = code.components();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.n(), 8);
        }
        let total: usize = comps.iter().map(|c| c.dimension()).sum();
        assert_eq!(total, code.dimension());
    }

    #[test]
    fn component_dimensions_sum_randomized() {
        let mut rng = SplitMix64::new(13);
        for g in sample_groups() {
            for p in [2u64, 3] {
                let f = gf(p);
                for _ in 0..5 {
                    let a = random_elem(&g, f, 1 + rng.below(3) as usize, &mut rng);
                    let b = random_elem(&g, f, 1 + rng.below(3) as usize, &mut rng);
                    let code = TwoBlockCode::build(a, b).unwrap();
                    let comps = code.components();
                    assert_eq!(comps.len(), code.component_cosets().len());
                    let total: usize = comps.iter().map(|c| c.dimension()).sum();
                    assert_eq!(total, code.dimension());
                }
            }
        }
    }

    #[test]
    fn centralizer_symmetry_on_kernel() {
        let f = gf(2);
        let mut rng = SplitMix64::new(17);
        for g in sample_groups() {
            let a = random_elem(&g, f, 2, &mut rng);
            let b = random_elem(&g, f, 3, &mut rng);
            let code = TwoBlockCode::build(a.clone(), b).unwrap();
            let cent = g.centralizer(&a.support_group());
            let kernel = code.hx().nullspace();
            let l = g.order();
            for i in 0..kernel.rows().min(4) {
                let v = kernel.row_entries(i);
                for &c in cent.iter().take(4) {
                    let lg = AlgebraElement::from_support(g.clone(), f, &[c]).left_matrix();
                    let u2 = lg.mul_vec(&v[..l]).unwrap();
                    let w2 = lg.mul_vec(&v[l..]).unwrap();
                    let moved: Vec<u8> = u2.into_iter().chain(w2).collect();
                    assert!(code.hx().mul_vec(&moved).unwrap().iter().all(|&x| x == 0));
                }
            }
        }
    }

    #[test]
    fn transforms_preserve_n_and_k() {
        let mut rng = SplitMix64::new(19);
        for g in sample_groups() {
            for p in [2u64, 3] {
                let f = gf(p);
                let a = random_elem(&g, f, 2, &mut rng);
                let b = random_elem(&g, f, 3, &mut rng);
                let code = TwoBlockCode::build(a.clone(), b.clone()).unwrap();
                let k = code.dimension();
                let alpha = rng.below(g.order() as u64) as u32;
                let beta = rng.below(g.order() as u64) as u32;
                // conjugation by a fixed element is an automorphism
                let cmap: Vec<u32> = {
                    let gi = g.inv(alpha);
                    g.elements().map(|h| g.mul(g.mul(gi, h), alpha)).collect()
                };
                let x = 1 + rng.below(f.modulus() as u64 - 1) as u8;
                let y = 1 + rng.below(f.modulus() as u64 - 1) as u8;
                let kinds = [
                    PairTransform::Automorphism(&cmap),
                    PairTransform::Conjugate(alpha, beta),
                    PairTransform::Scale(x, y),
                    PairTransform::Translate(alpha, beta),
                    PairTransform::HatSwap,
                    PairTransform::CssDual,
                ];
                for t in &kinds {
                    let (a2, b2) = transform_pair(&a, &b, t).unwrap();
                    let code2 = TwoBlockCode::build(a2, b2).unwrap();
                    assert_eq!(code2.n(), code.n());
                    assert_eq!(code2.dimension(), k);
                }
            }
        }
    }

    #[test]
    fn transform_edge_cases() {
        let g = GroupTable::dihedral(3).unwrap().into_arc();
        let f = gf(2);
        let a = elem(&g, f, &[0, 1]);
        let b = elem(&g, f, &[0, 4]);
        // translate by identities is the identity transform
        let (a2, b2) = transform_pair(&a, &b, &PairTransform::Translate(0, 0)).unwrap();
        assert_eq!((a2, b2), (a.clone(), b.clone()));
        // hat-swap twice returns the original
        let (a1, b1) = transform_pair(&a, &b, &PairTransform::HatSwap).unwrap();
        let (a2, b2) = transform_pair(&a1, &b1, &PairTransform::HatSwap).unwrap();
        assert_eq!((a2, b2), (a.clone(), b.clone()));
        // invalid parameters
        assert!(matches!(
            transform_pair(&a, &b, &PairTransform::Scale(0, 1)),
            Err(Error::InvalidTransform(_))
        ));
        let not_auto = vec![0u32; 6];
        assert!(matches!(
            transform_pair(&a, &b, &PairTransform::Automorphism(&not_auto)),
            Err(Error::InvalidTransform(_))
        ));
    }

    #[test]
    fn canonical_pair_properties() {
        let mut rng = SplitMix64::new(23);
        for g in sample_groups() {
            let f = gf(2);
            // weight-1 elements normalize to the identity element
            let h = 1 + rng.below(g.order() as u64 - 1) as u32;
            let a = elem(&g, f, &[h]);
            let m = two_sided_min(&a);
            assert_eq!(elem_key(&m).0, vec![0]);
            // idempotent
            for _ in 0..10 {
                let a = random_elem(&g, f, 1 + rng.below(3) as usize, &mut rng);
                let b = random_elem(&g, f, 1 + rng.below(3) as usize, &mut rng);
                let (ca, cb, _) = canonical_pair(&a, &b);
                let (ca2, cb2, flag) = canonical_pair(&ca, &cb);
                assert!(flag);
                assert_eq!((ca2, cb2), (ca, cb));
            }
        }
    }

    #[test]
    fn gb_view_cases() {
        let f = gf(2);
        // direct map on the canonical cyclic table
        let c3 = GroupTable::cyclic(3).unwrap().into_arc();
        let code = TwoBlockCode::build(elem(&c3, f, &[0, 1]), elem(&c3, f, &[0, 2])).unwrap();
        let (pa, pb, l) = code.gb_view().unwrap();
        assert_eq!(l, 3);
        assert_eq!(pa.coeffs(), &[1, 1]);
        assert_eq!(pb.coeffs(), &[1, 0, 1]);
        // non-cyclic groups have no view
        let d4 = GroupTable::dihedral(4).unwrap().into_arc();
        let code = TwoBlockCode::build(elem(&d4, f, &[0, 1]), elem(&d4, f, &[0, 2])).unwrap();
        assert!(code.gb_view().is_none());
        // the gcd dimension of the view matches the rank dimension on random
        // cyclic pairs, including lengths divisible by the characteristic
        let mut rng = SplitMix64::new(47);
        let mut checked = 0;
        while checked < 200 {
            let l = 2 + rng.below(29) as usize;
            let g = GroupTable::cyclic(l).unwrap().into_arc();
            for p in [2u64, 3] {
                let f = gf(p);
                let a = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                let b = random_elem(&g, f, 1 + rng.below(4) as usize, &mut rng);
                let code = TwoBlockCode::build(a, b).unwrap();
                let (pa, pb, lv) = code.gb_view().unwrap();
                assert_eq!(lv, l);
                assert_eq!(
                    crate::poly::gb_dimension(&pa, &pb, l),
                    code.dimension(),
                    "l = {l}, p = {p}"
                );
                checked += 1;
            }
        }
    }

    #[test]
    fn equivalent_pairs_share_canonical_form() {
        let mut rng = SplitMix64::new(29);
        for g in sample_groups() {
            let f = gf(2);
            for _ in 0..20 {
                let w = 2 + rng.below(2) as usize;
                let a = random_elem(&g, f, w, &mut rng);
                let b = random_elem(&g, f, w, &mut rng);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let (ca, cb, _) = canonical_pair(&a, &b);
                let alpha = rng.below(g.order() as u64) as u32;
                let beta = rng.below(g.order() as u64) as u32;
                let kinds = [
                    PairTransform::Conjugate(alpha, beta),
                    PairTransform::Translate(alpha, beta),
                ];
                for t in &kinds {
                    let (a2, b2) = transform_pair(&a, &b, t).unwrap();
                    let (ca2, cb2, _) = canonical_pair(&a2, &b2);
                    assert_eq!((ca2.clone(), cb2.clone()), (ca.clone(), cb.clone()));
                }
                // hat-swap identification requires equal weights
                if a.weight() == b.weight() {
                    let (a2, b2) = transform_pair(&a, &b, &PairTransform::HatSwap).unwrap();
                    let (ca2, cb2, _) = canonical_pair(&a2, &b2);
                    assert_eq!((ca2, cb2), (ca.clone(), cb.clone()));
                }
            }
        }
    }
}
