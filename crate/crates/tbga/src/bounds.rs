//! Distance bounds and structural identities for two-block codes: the
//! shortening chain of upper bounds, the block-size bound, the puncturing
//! lower bound, the split identity relating d_Z to two reduced codes, the
//! quasi-abelian lower bound, and the weight-4 surface-code analysis.

use crate::code::{subsystem_dimension, TwoBlockCode};
use crate::distance::{classical_dual_distance, exact_dx, exact_dz, subsystem_dz, Distance};
use crate::error::{Error, Result};
use crate::matrix::FMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The auxiliary matrices of one side: the row-extended H_X, the shortened
/// H_Z, the classical parity check, and the split-identity partner of H_Z.
struct SideMatrices {
    hx_ext: FMatrix,
    hz_short: FMatrix,
    h_classical: FMatrix,
    hz_ext: FMatrix,
    single_block: FMatrix,
}

fn side_matrices(code: &TwoBlockCode, side: Side) -> Result<SideMatrices> {
    let a = code.a_matrix();
    let b = code.b_matrix();
    let f = code.field();
    let l = a.rows();
    let id = FMatrix::identity(f, l);
    let zero = FMatrix::zero(f, l, l);
    let (e_a, f_a) = a.idempotents()?;
    let (e_b, f_b) = b.idempotents()?;
    Ok(match side {
        Side::Left => SideMatrices {
            // rows (A B) over (0 I-E_A)
            hx_ext: a.hcat(b)?.vcat(&zero.hcat(&id.sub(&e_a)?)?)?,
            // (H_Z)_L^T = B (I - F_A)
            hz_short: b.mul(&id.sub(&f_a)?)?.transpose(),
            h_classical: a.vcat(&e_b)?,
            // H_Z^(L) = ((B, I-F_A) over (-A, 0))^T
            hz_ext: b
                .hcat(&id.sub(&f_a)?)?
                .vcat(&a.neg().hcat(&zero)?)?
                .transpose(),
            single_block: a.clone(),
        },
        Side::Right => SideMatrices {
            hx_ext: a.hcat(b)?.vcat(&id.sub(&e_b)?.hcat(&zero)?)?,
            hz_short: a.mul(&id.sub(&f_b)?)?.transpose(),
            h_classical: b.vcat(&e_a)?,
            hz_ext: b
                .hcat(&zero)?
                .vcat(&a.neg().hcat(&id.sub(&f_b)?)?)?
                .transpose(),
            single_block: b.clone(),
        },
    })
}

/// The chain of upper bounds on d_Z obtained by restricting Z-codewords to
/// one block: d_Z <= d_Z(Q') <= d_Z(Q'') <= d(C). All four distances are
/// computed exactly and the chain is verified before returning.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub side: Side,
    pub dz: Distance,
    pub d_prime: Distance,
    pub d_double_prime: Distance,
    pub d_classical: Distance,
}

pub fn upper_chain(code: &TwoBlockCode, side: Side, budget_log2: u32) -> Result<ChainReport> {
    let m = side_matrices(code, side)?;
    let dz = exact_dz(code.hx(), code.hz(), budget_log2)?.distance;
    let d_prime = exact_dz(&m.hx_ext, code.hz(), budget_log2)?.distance;
    let d_double_prime = exact_dz(&m.single_block, &m.hz_short, budget_log2)?.distance;
    let d_classical = classical_dual_distance(&m.h_classical, budget_log2)?.distance;
    assert!(
        dz <= d_prime && d_prime <= d_double_prime && d_double_prime <= d_classical,
        "upper chain violated: {dz} <= {d_prime} <= {d_double_prime} <= {d_classical}"
    );
    Ok(ChainReport {
        side,
        dz,
        d_prime,
        d_double_prime,
        d_classical,
    })
}

/// Block-size upper bound min(|G_a|, |G_b|), applicable to semi-abelian
/// codes (both rank defects zero).
pub fn block_bound(code: &TwoBlockCode) -> Result<usize> {
    let sp = code.structure_params();
    if sp.delta_x != 0 || sp.delta_z != 0 {
        return Err(Error::NotApplicable("rank defects are nonzero"));
    }
    Ok(code
        .a()
        .support_group()
        .len()
        .min(code.b().support_group().len()))
}

/// The erasure-code puncturing value d_S: the distance of the single-block
/// erasure subsystem code CSS(A, B^T) (minimum over its two CSS sides),
/// applicable when both rank defects vanish.
///
/// d >= d_S is NOT guaranteed: a codeword class mixing both blocks can be
/// lighter than every single-block class (e.g. over GF(2)[C5] with
/// a = 1+x^2+x^3+x^4, b = x+x^2+x^3+x^4: d = 2 while d_S = 5). The bound
/// that does follow from the puncturing lemma is [`gauge_fixed_lower`]. When
/// AB = 0 the erasure code is a stabilizer code and d = d_S exactly.
pub fn puncture_lower(code: &TwoBlockCode, budget_log2: u32) -> Result<Distance> {
    let sp = code.structure_params();
    if sp.delta_x != 0 || sp.delta_z != 0 {
        return Err(Error::NotApplicable("rank defects are nonzero"));
    }
    let a = code.a_matrix();
    let bt = code.b_matrix().transpose();
    let z_side = subsystem_dz(a, &bt, budget_log2)?.distance;
    let x_side = subsystem_dz(&bt, a, budget_log2)?.distance;
    Ok(z_side.min(x_side))
}

/// Lower bound on d_Z from the puncturing lemma: when both rank defects
/// vanish, the logical basis splits per block and
/// d_Z >= min over the two gauge-fixed single-block codes
/// CSS((I-E_B)A, B^T) and CSS((I-E_A)B, A^T).
pub fn gauge_fixed_lower(code: &TwoBlockCode, budget_log2: u32) -> Result<Distance> {
    let sp = code.structure_params();
    if sp.delta_x != 0 || sp.delta_z != 0 {
        return Err(Error::NotApplicable("rank defects are nonzero"));
    }
    let a = code.a_matrix();
    let b = code.b_matrix();
    let f = code.field();
    let id = FMatrix::identity(f, a.rows());
    let (e_a, _) = a.idempotents()?;
    let (e_b, _) = b.idempotents()?;
    let left_checks = id.sub(&e_b)?.mul(a)?;
    let right_checks = id.sub(&e_a)?.mul(b)?;
    let left = exact_dz(&left_checks, &b.transpose(), budget_log2)?.distance;
    let right = exact_dz(&right_checks, &a.transpose(), budget_log2)?.distance;
    Ok(left.min(right))
}

/// Split identity: d_Z equals the minimum of the Z-distances of the two
/// reduced codes CSS(H_X^(side), H_Z) and CSS(H_X, H_Z^(side)). Returns the
/// pair and asserts the identity against the directly computed d_Z.
pub fn split_identity(
    code: &TwoBlockCode,
    side: Side,
    budget_log2: u32,
) -> Result<(Distance, Distance)> {
    let m = side_matrices(code, side)?;
    let left = exact_dz(&m.hx_ext, code.hz(), budget_log2)?.distance;
    let right = exact_dz(code.hx(), &m.hz_ext, budget_log2)?.distance;
    let dz = exact_dz(code.hx(), code.hz(), budget_log2)?.distance;
    assert_eq!(
        dz,
        left.min(right),
        "split identity violated: d_Z = {dz}, parts ({left}, {right})"
    );
    Ok((left, right))
}

/// Quasi-abelian lower bound on d_Z.
#[derive(Debug, Clone, Copy)]
pub struct QuasiAbelianBound {
    /// |N| for N = G_a intersect G_b.
    pub c: usize,
    pub d_a_perp: Distance,
    pub d_b_perp: Distance,
    /// ceil(min(d_A-perp, d_B-perp) / c).
    pub d0: Distance,
}

/// Returns None when N = G_a intersect G_b is not abelian or not normal in
/// both support groups (the bound's precondition).
pub fn quasi_abelian_lower(
    code: &TwoBlockCode,
    budget_log2: u32,
) -> Result<Option<QuasiAbelianBound>> {
    let g = code.group();
    let ga = code.a().support_group();
    let gb = code.b().support_group();
    let n: std::collections::BTreeSet<u32> = ga.intersection(&gb).copied().collect();
    if !g.is_abelian_subset(&n) || !g.is_normal_in(&n, &ga) || !g.is_normal_in(&n, &gb) {
        return Ok(None);
    }
    let c = n.len();
    let d_a_perp = classical_dual_distance(code.a_matrix(), budget_log2)?.distance;
    let d_b_perp = classical_dual_distance(code.b_matrix(), budget_log2)?.distance;
    let d0 = match d_a_perp.min(d_b_perp) {
        Distance::Finite(w) => Distance::Finite(w.div_ceil(c as u32)),
        Distance::Infinite => Distance::Infinite,
    };
    Ok(Some(QuasiAbelianBound {
        c,
        d_a_perp,
        d_b_perp,
        d0,
    }))
}

/// Per-component record of the weight-4 analysis.
#[derive(Debug, Clone)]
pub struct W4Component {
    pub n: usize,
    pub k: usize,
    pub dx: Distance,
    pub dz: Distance,
}

/// For wgt(a) = wgt(b) = 2 every connected component is a surface code:
/// k = 2 and both distances obey d^2 <= n (and d^2 <= n - 1 for odd overall
/// distance). Returns the per-component data; `Ok` only if all checks pass.
pub fn w4_check(code: &TwoBlockCode, budget_log2: u32) -> Result<Vec<W4Component>> {
    if code.a().weight() != 2 || code.b().weight() != 2 {
        return Err(Error::NotW4);
    }
    let mut out = Vec::new();
    for comp in code.components() {
        let k = comp.dimension();
        let dx = exact_dx(&comp.hx, &comp.hz, budget_log2)?.distance;
        let dz = exact_dz(&comp.hx, &comp.hz, budget_log2)?.distance;
        let n = comp.n();
        assert_eq!(k, 2, "weight-4 component must encode two qudits");
        for d in [dx, dz] {
            let Distance::Finite(w) = d else {
                panic!("weight-4 component has infinite distance with k = 2");
            };
            assert!(
                (w as usize) * (w as usize) <= n,
                "square bound violated: d={w}, n={n}"
            );
        }
        let d = dx.min(dz).finite().expect("finite by the above");
        if d % 2 == 1 {
            assert!(
                (d as usize) * (d as usize) <= n - 1,
                "odd-distance bound violated: d={d}, n={n}"
            );
        }
        out.push(W4Component { n, k, dx, dz });
    }
    Ok(out)
}

/// Full per-side bound report; inapplicable parts are None.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub side: Side,
    pub d_prime: Distance,
    pub d_double_prime: Distance,
    pub d_classical: Distance,
    pub block_bound: Option<usize>,
    pub d0: Option<Distance>,
    pub ds: Option<Distance>,
}

pub fn bound_report(code: &TwoBlockCode, side: Side, budget_log2: u32) -> Result<BoundReport> {
    let chain = upper_chain(code, side, budget_log2)?;
    let sp = code.structure_params();
    let defects_vanish = sp.delta_x == 0 && sp.delta_z == 0;
    let block = if defects_vanish {
        Some(block_bound(code)?)
    } else {
        None
    };
    let ds = if defects_vanish {
        Some(puncture_lower(code, budget_log2)?)
    } else {
        None
    };
    let d0 = quasi_abelian_lower(code, budget_log2)?.map(|q| q.d0);
    Ok(BoundReport {
        side,
        d_prime: chain.d_prime,
        d_double_prime: chain.d_double_prime,
        d_classical: chain.d_classical,
        block_bound: block,
        d0,
        ds,
    })
}

/// Consistency check used in tests: the two reduced codes of the split
/// identity have dimensions k_s + delta_z and k_s + delta_x.
pub fn split_code_dimensions(code: &TwoBlockCode, side: Side) -> Result<(usize, usize)> {
    let m = side_matrices(code, side)?;
    let k1 = subsystem_dimension(&m.hx_ext, code.hz())?;
    let k2 = subsystem_dimension(code.hx(), &m.hz_ext)?;
    Ok((k1, k2))
}
