//! Group-algebra elements F[G]: sparse arithmetic, the hat involution, trace,
//! support groups, and regular-representation matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::GroupTable;
use crate::matrix::FMatrix;

/// A sparse group-algebra element: map from element index to nonzero field
/// coefficient. The zero element is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    group: Arc<GroupTable>,
    field: PrimeField,
    coeffs: BTreeMap<u32, u8>,
}

impl AlgebraElement {
    pub fn zero(group: Arc<GroupTable>, field: PrimeField) -> Self {
        AlgebraElement {
            group,
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: Arc<GroupTable>, field: PrimeField) -> Self {
        Self::from_terms(group, field, &[(0, 1)])
    }

    /// Builds from (element index, coefficient) terms; repeated elements
    /// accumulate mod p and zero coefficients are pruned.
    pub fn from_terms(group: Arc<GroupTable>, field: PrimeField, terms: &[(u32, u8)]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &(g, c) in terms {
            debug_assert!((g as usize) < group.order());
            let c = c % field.modulus();
            let entry = coeffs.entry(g).or_insert(0u8);
            *entry = field.add(*entry, c);
        }
        coeffs.retain(|_, &mut c| c != 0);
        AlgebraElement {
            group,
            field,
            coeffs,
        }
    }

    /// Element supported on the generator words given by `terms` of the form
    /// (group element, coefficient), all coefficients 1.
    pub fn from_support(group: Arc<GroupTable>, field: PrimeField, support: &[u32]) -> Self {
        let terms: Vec<(u32, u8)> = support.iter().map(|&g| (g, 1)).collect();
        Self::from_terms(group, field, &terms)
    }

    #[inline]
    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeff(&self, g: u32) -> u8 {
        self.coeffs.get(&g).copied().unwrap_or(0)
    }

    /// Nonzero terms in canonical element order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u8)> + '_ {
        self.coeffs.iter().map(|(&g, &c)| (g, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_context(&self, other: &AlgebraElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedContext);
        }
        if !Arc::ptr_eq(&self.group, &other.group) && *self.group != *other.group {
            return Err(Error::MixedContext);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (g, c) in other.terms() {
            let entry = out.coeffs.entry(g).or_insert(0);
            *entry = self.field.add(*entry, c);
            if *entry == 0 {
                out.coeffs.remove(&g);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u8) -> AlgebraElement {
        let c = c % self.field.modulus();
        let mut out = self.clone();
        if c == 0 {
            out.coeffs.clear();
            return out;
        }
        for v in out.coeffs.values_mut() {
            *v = self.field.mul(*v, c);
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(self.field.neg(1))
    }

    /// Product in F[G]: (ab)_g = sum_h a_h b_{h^{-1} g}.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_context(other)?;
        let g = &self.group;
        let mut out = AlgebraElement::zero(self.group.clone(), self.field);
        for (ga, ca) in self.terms() {
            for (gb, cb) in other.terms() {
                let prod = g.mul(ga, gb);
                let c = self.field.mul(ca, cb);
                let entry = out.coeffs.entry(prod).or_insert(0);
                *entry = self.field.add(*entry, c);
                if *entry == 0 {
                    out.coeffs.remove(&prod);
                }
            }
        }
        Ok(out)
    }

    /// Hat involution: a-hat = sum_g a_g g^{-1}. An anti-homomorphism.
    pub fn hat(&self) -> AlgebraElement {
        let terms: Vec<(u32, u8)> = self
            .terms()
            .map(|(g, c)| (self.group.inv(g), c))
            .collect();
        AlgebraElement::from_terms(self.group.clone(), self.field, &terms)
    }

    /// Group trace: the coefficient of the identity element.
    pub fn trace(&self) -> u8 {
        self.coeff(0)
    }

    /// Left-multiplication by a group element: g * a.
    pub fn translate_left(&self, g: u32) -> AlgebraElement {
        let terms: Vec<(u32, u8)> = self
            .terms()
            .map(|(h, c)| (self.group.mul(g, h), c))
            .collect();
        AlgebraElement::from_terms(self.group.clone(), self.field, &terms)
    }

    /// Right-multiplication by a group element: a * g.
    pub fn translate_right(&self, g: u32) -> AlgebraElement {
        let terms: Vec<(u32, u8)> = self
            .terms()
            .map(|(h, c)| (self.group.mul(h, g), c))
            .collect();
        AlgebraElement::from_terms(self.group.clone(), self.field, &terms)
    }

    /// Image under a group automorphism given elementwise.
    pub fn apply_map(&self, map: &[u32]) -> AlgebraElement {
        let terms: Vec<(u32, u8)> = self.terms().map(|(g, c)| (map[g as usize], c)).collect();
        AlgebraElement::from_terms(self.group.clone(), self.field, &terms)
    }

    /// Support group: the subgroup generated by the support. `{1}` for the
    /// zero element so downstream code always sees a valid subgroup.
    pub fn support_group(&self) -> BTreeSet<u32> {
        let seed: BTreeSet<u32> = self.support().collect();
        self.group.subgroup_generated(&seed)
    }

    /// Dense coefficient vector of length |G|.
    pub fn to_vec(&self) -> Vec<u8> {
        let mut v = vec![0u8; self.group.order()];
        for (g, c) in self.terms() {
            v[g as usize] = c;
        }
        v
    }

    /// Left regular action: L(a)[i][j] = a_g where i = g j.
    pub fn left_matrix(&self) -> FMatrix {
        let l = self.group.order();
        let mut m = FMatrix::zero(self.field, l, l);
        for (g, c) in self.terms() {
            for j in 0..l as u32 {
                m.set(self.group.mul(g, j) as usize, j as usize, c);
            }
        }
        m
    }

    /// Right regular action: R(b)[i][j] = b_g where i = j g.
    pub fn right_matrix(&self) -> FMatrix {
        let l = self.group.order();
        let mut m = FMatrix::zero(self.field, l, l);
        for (g, c) in self.terms() {
            for j in 0..l as u32 {
                m.set(self.group.mul(j, g) as usize, j as usize, c);
            }
        }
        m
    }

    /// Canonical display string in the element grammar, e.g. "1 + x + s*x^2".
    pub fn to_string_words(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms()
            .map(|(g, c)| {
                let w = self.group.word(g);
                if c == 1 {
                    w.to_string()
                } else if g == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*{w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Inversion permutation matrix P[i][j] = 1 iff i = j^{-1}; symmetric,
/// squares to the identity, and conjugates R(a)^T to L(a).
pub fn hat_permutation(group: &GroupTable, field: PrimeField) -> FMatrix {
    let l = group.order();
    let mut m = FMatrix::zero(field, l, l);
    for j in 0..l as u32 {
        m.set(group.inv(j) as usize, j as usize, 1);
    }
    m
}
