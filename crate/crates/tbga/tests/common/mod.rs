//! Shared helpers for the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use tbga::algebra::AlgebraElement;
use tbga::code::TwoBlockCode;
use tbga::distance::{exact_dx, exact_dz, Distance};
use tbga::field::PrimeField;
use tbga::group::GroupTable;
use tbga::matrix::FMatrix;
use tbga::parse::{parse_algebra_elem, parse_group_spec};
use tbga::poly::{Poly, PolyMatrix};
use tbga::rng::SplitMix64;

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn build(spec: &str, a: &str, b: &str, p: u64) -> TwoBlockCode {
    let g = parse_group_spec(spec).unwrap();
    let f = gf(p);
    let ae = parse_algebra_elem(a, &g, f).unwrap();
    let be = parse_algebra_elem(b, &g, f).unwrap();
    TwoBlockCode::build(ae, be).unwrap()
}

/// Exact (d_X, d_Z).
pub fn exact_both(code: &TwoBlockCode, budget: u32) -> (Distance, Distance) {
    (
        exact_dx(code.hx(), code.hz(), budget).unwrap().distance,
        exact_dz(code.hx(), code.hz(), budget).unwrap().distance,
    )
}

pub fn exact_d(code: &TwoBlockCode, budget: u32) -> Distance {
    let (dx, dz) = exact_both(code, budget);
    dx.min(dz)
}

/// The A4 permutation realization with generators named x, y.
pub fn a4() -> Arc<GroupTable> {
    let names = vec!["x".to_string(), "y".to_string()];
    GroupTable::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], Some(&names), 1024)
        .unwrap()
        .into_arc()
}

/// Constructible groups of order <= 16, by spec string.
pub fn small_group_specs() -> Vec<&'static str> {
    vec![
        "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "C16", "C2xC4",
        "C2xC6", "C2xC8", "C2xC2xC2", "C2xC2xC4", "C2xC2xC2xC2", "C4xC4", "C3xC3", "D3", "D4",
        "D5", "D6", "D7", "D8", "M(3,4,2)", "M(8,2,3)", "M(8,2,5)", "M(4,4,3)",
    ]
}

/// A mixed bag of groups across every constructor family, order <= cap.
pub fn family_groups(cap: usize) -> Vec<(String, Arc<GroupTable>)> {
    let mut out: Vec<(String, Arc<GroupTable>)> = Vec::new();
    for l in [2usize, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 27, 30, 36, 45, 48] {
        if l <= cap {
            out.push((format!("C{l}"), GroupTable::cyclic(l).unwrap().into_arc()));
        }
    }
    for m in [2usize, 3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 21, 24] {
        if 2 * m <= cap {
            out.push((format!("D{m}"), GroupTable::dihedral(m).unwrap().into_arc()));
        }
    }
    for (m, n, t) in [(3usize, 4usize, 2usize), (8, 2, 3), (8, 2, 5), (5, 4, 2), (4, 4, 3), (9, 4, 8), (7, 3, 2), (5, 8, 4)] {
        if m * n <= cap {
            if let Ok(g) = GroupTable::metacyclic(m, n, t) {
                out.push((format!("M({m},{n},{t})"), g.into_arc()));
            }
        }
    }
    for spec in ["C2xC2", "C4xC2", "C3xC3", "C6xC2", "C4xC4", "C2xC2xC2", "C4xC4xC2", "C3xC3xC3", "D4xC2", "D3xC3"] {
        if let Ok(g) = parse_group_spec(spec) {
            if g.order() <= cap {
                out.push((spec.to_string(), g));
            }
        }
    }
    if 12 <= cap {
        out.push(("perm:x=(1,2,3);y=(1,2)(3,4)".to_string(), a4()));
    }
    out
}

pub fn random_element(
    g: &Arc<GroupTable>,
    f: PrimeField,
    weight: usize,
    rng: &mut SplitMix64,
) -> AlgebraElement {
    let terms: Vec<(u32, u8)> = (0..weight)
        .map(|_| {
            (
                rng.below(g.order() as u64) as u32,
                1 + rng.below(f.modulus() as u64 - 1) as u8,
            )
        })
        .collect();
    AlgebraElement::from_terms(g.clone(), f, &terms)
}

// ---------------------------------------------------------------------------
// expanded quasicyclic lifted-product oracle

fn circulant(p: &Poly, l: usize, f: PrimeField) -> FMatrix {
    let mut m = FMatrix::zero(f, l, l);
    for i in 0..l {
        for (j, &c) in p.coeffs().iter().enumerate() {
            if c != 0 {
                let r = (i + j) % l;
                m.set(r, i, f.add(m.get(r, i), c));
            }
        }
    }
    m
}

/// Kronecker-expanded block (A tensor I_id when `poly_left`, else
/// I_id tensor A), with each polynomial replaced by its circulant.
fn kron_expand(a: &PolyMatrix, id: usize, l: usize, f: PrimeField, poly_left: bool) -> FMatrix {
    let (br, bc) = (a.rows(), a.cols());
    let rows = if poly_left { br * id } else { id * br };
    let cols = if poly_left { bc * id } else { id * bc };
    let mut m = FMatrix::zero(f, rows * l, cols * l);
    for i in 0..br {
        for j in 0..bc {
            let blk = circulant(a.at(i, j), l, f);
            for t in 0..id {
                let (bi, bj) = if poly_left {
                    (i * id + t, j * id + t)
                } else {
                    (t * br + i, t * bc + j)
                };
                for r in 0..l {
                    for c in 0..l {
                        let v = blk.get(r, c);
                        if v != 0 {
                            m.set(bi * l + r, bj * l + c, v);
                        }
                    }
                }
            }
        }
    }
    m
}

/// Rank-based dimension of the expanded quasicyclic lifted-product code:
/// an oracle fully independent of the SNF route.
pub fn expanded_qc_dimension(a: &PolyMatrix, b: &PolyMatrix, l: usize, f: PrimeField) -> usize {
    let (ra, na) = (a.rows(), a.cols());
    let (rb, nb) = (b.rows(), b.cols());
    let hx = kron_expand(a, rb, l, f, true)
        .hcat(&kron_expand(b, ra, l, f, false))
        .unwrap();
    let hzt = kron_expand(b, na, l, f, false)
        .vcat(&kron_expand(a, nb, l, f, true).neg())
        .unwrap();
    assert!(hx.mul(&hzt).unwrap().is_zero(), "blocks must commute");
    let hz = hzt.transpose();
    hx.cols() - hx.rank() - hz.rank()
}
