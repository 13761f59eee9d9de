//! Per-weight matrices of the multiplication map phi_g : R[-3m] -> M and the
//! isomorphism verdict deciding whether g is good.

use rayon::prelude::*;

use crate::basis::{basis_m, basis_r_shifted, GradedBasis};
use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::linalg::Matrix;
use crate::poly::{Monomial, ParamSet, Ring, WeightedPolynomial};

/// The weight-n block of phi_g. Columns are indexed by the source basis
/// R[-3m]_n, rows by the target basis M_n; entry (mu, nu) is the coefficient
/// of mu in the projection to M of g*nu. This is the transpose of the
/// row-vector convention the map is sometimes written in, so determinants
/// are compared up to sign.
#[derive(Clone, Debug)]
pub struct GradedBlockMatrix {
    pub weight: u32,
    pub rows: GradedBasis,
    pub cols: GradedBasis,
    pub matrix: Matrix,
}

impl GradedBlockMatrix {
    pub fn dim(&self) -> usize {
        self.cols.dim()
    }

    pub fn is_singular(&self) -> bool {
        self.matrix.rank() < self.dim()
    }

    /// Determinant over F_p; unavailable over the rationals.
    pub fn det(&self) -> Result<Coeff> {
        self.matrix.det()
    }

    pub fn entry(&self, row_mono: &Monomial, col_mono: &Monomial) -> Option<&Coeff> {
        let r = self.rows.monomials.iter().position(|m| m == row_mono)?;
        let c = self.cols.monomials.iter().position(|m| m == col_mono)?;
        Some(self.matrix.get(r, c))
    }
}

/// Verdict of the isomorphism test over all weights in range.
#[derive(Clone, Debug)]
pub struct PhiVerdict {
    pub good: bool,
    pub singular_weights: Vec<u32>,
    /// (weight, block dimension) for every scanned weight.
    pub block_dims: Vec<(u32, usize)>,
    /// (weight, determinant); populated only over F_p.
    pub determinants: Vec<(u32, Coeff)>,
}

fn check_g(g: &WeightedPolynomial, params: &ParamSet) -> Result<()> {
    if g.ring() != Ring::Xyz {
        return Err(Error::RingMismatch);
    }
    if !g.is_weight_homogeneous(params.g_weight()) {
        return Err(Error::Precondition(format!(
            "g must be WT-homogeneous of weight {}",
            params.g_weight()
        )));
    }
    Ok(())
}

/// Builds the weight-n block column by column from sparse products g*nu,
/// deleting monomials that vanish in R (x,y-degree >= l) or in M
/// (standard degree < l).
pub fn build_phi_block(
    g: &WeightedPolynomial,
    params: &ParamSet,
    n: u32,
) -> Result<GradedBlockMatrix> {
    check_g(g, params)?;
    let cols = basis_r_shifted(params, n);
    let rows = basis_m(params, n);
    if rows.dim() != cols.dim() {
        return Err(Error::InvariantViolation(format!(
            "phi block at weight {} is {}x{}, expected square",
            n,
            rows.dim(),
            cols.dim()
        )));
    }
    let ell = params.ell();
    let field = g.field();
    let mut matrix = Matrix::zero(field, rows.dim(), cols.dim());
    for (col_idx, nu) in cols.monomials.iter().enumerate() {
        for (mono, coeff) in g.terms() {
            let prod = mono.mul(nu);
            if prod.xy_degree() >= ell || prod.degree() < ell {
                continue;
            }
            let row_idx = rows
                .monomials
                .iter()
                .position(|m| *m == prod)
                .ok_or_else(|| {
                    Error::InvariantViolation(format!(
                        "product monomial {} missing from M basis at weight {}",
                        prod.format(Ring::Xyz),
                        n
                    ))
                })?;
            let old = matrix.get(row_idx, col_idx).clone();
            matrix.set(row_idx, col_idx, field.add(&old, coeff));
        }
    }
    Ok(GradedBlockMatrix {
        weight: n,
        rows,
        cols,
        matrix,
    })
}

/// Isomorphism verdict scanning weights 3m..=9(m-1); the finite range is
/// justified only when z^m appears in g with nonzero coefficient.
pub fn phi_iso_verdict(g: &WeightedPolynomial, params: &ParamSet) -> Result<PhiVerdict> {
    phi_iso_verdict_with_cap(g, params, params.weight_cap())
}

/// Same verdict with an explicit upper weight; used to confirm that scanning
/// past 9(m-1) never changes the answer.
pub fn phi_iso_verdict_with_cap(
    g: &WeightedPolynomial,
    params: &ParamSet,
    cap: u32,
) -> Result<PhiVerdict> {
    check_g(g, params)?;
    let zm = Monomial::new3(0, 0, params.m);
    if g.field().is_zero(&g.coefficient(&zm)) {
        return Err(Error::Precondition(
            "z^m must appear in g with nonzero coefficient".into(),
        ));
    }
    let weights: Vec<u32> = (params.g_weight()..=cap).collect();
    let per_weight: Vec<(u32, usize, bool, Option<Coeff>)> = weights
        .par_iter()
        .map(|&n| -> Result<(u32, usize, bool, Option<Coeff>)> {
            let block = build_phi_block(g, params, n)?;
            let (singular, det) = match g.field() {
                FieldSpec::Prime(_) => {
                    let d = block.det()?;
                    (g.field().is_zero(&d), Some(d))
                }
                FieldSpec::Rational => (block.is_singular(), None),
            };
            Ok((n, block.dim(), singular, det))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut singular_weights = Vec::new();
    let mut block_dims = Vec::new();
    let mut determinants = Vec::new();
    for (n, dim, singular, det) in per_weight {
        block_dims.push((n, dim));
        if singular {
            singular_weights.push(n);
        }
        if let Some(d) = det {
            determinants.push((n, d));
        }
    }
    singular_weights.sort_unstable();
    Ok(PhiVerdict {
        good: singular_weights.is_empty(),
        singular_weights,
        block_dims,
        determinants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;
    use crate::poly::parse_poly;

    fn m2_g(field: FieldSpec, a: [i64; 4]) -> WeightedPolynomial {
        parse_poly(
            &format!(
                "{}*z^2 + {}*x^3*z + {}*x*y*z + {}*y^3",
                a[0], a[1], a[2], a[3]
            ),
            Ring::Xyz,
            field,
        )
        .unwrap()
    }

    #[test]
    fn m2_block_dimensions_and_entries() {
        let f = FieldSpec::prime(DEFAULT_PRIME).unwrap();
        let p = ParamSet::new(2).unwrap();
        let g = m2_g(f, [2, 3, 5, 7]);
        // weight 6: 1x1 block [a1]
        let b6 = build_phi_block(&g, &p, 6).unwrap();
        assert_eq!(b6.dim(), 1);
        assert_eq!(b6.matrix.get(0, 0), &f.from_i64(3));
        // weight 7: 1x1 block [a2]
        let b7 = build_phi_block(&g, &p, 7).unwrap();
        assert_eq!(b7.dim(), 1);
        assert_eq!(b7.matrix.get(0, 0), &f.from_i64(5));
        // weight 8: diagonal a0, a2 against labeled bases
        let b8 = build_phi_block(&g, &p, 8).unwrap();
        assert_eq!(b8.dim(), 2);
        let x2 = Monomial::new3(2, 0, 0);
        let y = Monomial::new3(0, 1, 0);
        let x2z2 = Monomial::new3(2, 0, 2);
        let xy2z = Monomial::new3(1, 2, 1);
        assert_eq!(b8.entry(&x2z2, &x2), Some(&f.from_i64(2)));
        assert_eq!(b8.entry(&xy2z, &y), Some(&f.from_i64(5)));
        assert_eq!(b8.entry(&x2z2, &y), Some(&f.zero()));
        assert_eq!(b8.entry(&xy2z, &x2), Some(&f.zero()));
        // weight 9: 3x3 with det +-a0^2 a3
        let b9 = build_phi_block(&g, &p, 9).unwrap();
        assert_eq!(b9.dim(), 3);
        let det = b9.det().unwrap();
        let expect = f.from_i64(2 * 2 * 7);
        assert!(det == expect || det == f.neg(&expect));
    }

    #[test]
    fn m2_good_iff_all_nonzero() {
        let f = FieldSpec::prime(5).unwrap();
        let p = ParamSet::new(2).unwrap();
        let good = phi_iso_verdict(&m2_g(f, [1, 2, 3, 4]), &p).unwrap();
        assert!(good.good);
        let bad = phi_iso_verdict(&m2_g(f, [1, 0, 3, 4]), &p).unwrap();
        assert!(!bad.good);
        assert_eq!(bad.singular_weights, vec![6]);
    }

    #[test]
    fn zero_zm_coefficient_rejected() {
        let f = FieldSpec::prime(5).unwrap();
        let p = ParamSet::new(2).unwrap();
        assert!(matches!(
            phi_iso_verdict(&m2_g(f, [0, 1, 1, 1]), &p),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn scaling_preserves_verdict() {
        let f = FieldSpec::prime(101).unwrap();
        let p = ParamSet::new(2).unwrap();
        let g = m2_g(f, [1, 2, 0, 4]);
        let v1 = phi_iso_verdict(&g, &p).unwrap();
        let v2 = phi_iso_verdict(&g.scale(&f.from_i64(37)), &p).unwrap();
        assert_eq!(v1.good, v2.good);
        assert_eq!(v1.singular_weights, v2.singular_weights);
    }

    #[test]
    fn verdict_over_rationals() {
        let q = FieldSpec::Rational;
        let p = ParamSet::new(2).unwrap();
        let v = phi_iso_verdict(&m2_g(q, [1, 1, 1, 1]), &p).unwrap();
        assert!(v.good);
        assert!(v.determinants.is_empty());
    }
}
