//! Brute-force detection of low-degree members of I = (x,y)^l + (g) by
//! weight-stratified exact linear algebra, independent of the phi and
//! Groebner routes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{monomials_of_wt_weight, Monomial, ParamSet, Ring, WeightedPolynomial};

/// Result of the direct scan. `bad` means a nonzero member of I of standard
/// degree <= l-1 exists; every BAD verdict carries a witness.
#[derive(Clone, Debug)]
pub struct DirectVerdict {
    pub bad: bool,
    /// Weights whose slice contains a low-degree member.
    pub hit_weights: Vec<u32>,
    pub checked_weights: Vec<u32>,
    /// An explicit member of I of standard degree <= l-1, when bad.
    pub witness: Option<WeightedPolynomial>,
}

/// Spanning columns of the weight-n piece of I: the weight-n monomials of
/// (x,y)^l plus g*mu for each weight-(n-3m) monomial mu.
fn slice_columns(
    g: &WeightedPolynomial,
    params: &ParamSet,
    n: u32,
) -> Vec<WeightedPolynomial> {
    let field = g.field();
    let ell = params.ell();
    let mut cols: Vec<WeightedPolynomial> = monomials_of_wt_weight(n)
        .into_iter()
        .filter(|m| m.xy_degree() >= ell)
        .map(|m| WeightedPolynomial::monomial(Ring::Xyz, field, m, field.one()))
        .collect();
    if n >= params.g_weight() {
        for mu in monomials_of_wt_weight(n - params.g_weight()) {
            cols.push(g.mul_monomial(&mu, &field.one()));
        }
    }
    cols
}

struct SliceOutcome {
    weight: u32,
    bad: bool,
    witness: Option<WeightedPolynomial>,
}

/// Rows are ordered degree-descending, high rows (degree >= l) first, so one
/// elimination pass yields both the full rank and the high-row rank.
fn scan_slice(
    g: &WeightedPolynomial,
    params: &ParamSet,
    n: u32,
    want_witness: bool,
) -> SliceOutcome {
    let field = g.field();
    let ell = params.ell();
    let mut row_monos = monomials_of_wt_weight(n);
    row_monos.sort_by(|a, b| b.degree().cmp(&a.degree()).then(b.cmp(a)));
    let high_count = row_monos.iter().filter(|m| m.degree() >= ell).count();
    let cols = slice_columns(g, params, n);
    let mut matrix = Matrix::zero(field, row_monos.len(), cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (mono, coeff) in col.terms() {
            let r = row_monos.iter().position(|m| m == mono).expect("weight-n row");
            let old = matrix.get(r, c).clone();
            matrix.set(r, c, field.add(&old, coeff));
        }
    }
    let high = matrix.select_rows(&(0..high_count).collect::<Vec<_>>());
    let bad = matrix.rank() > high.rank();
    let witness = if bad && want_witness {
        // a kernel vector of the high block that survives the full matrix
        // pulls back to a member of I supported on low-degree monomials
        high.kernel().into_iter().find_map(|v| {
            let image = matrix.apply(&v);
            if image.iter().all(|c| field.is_zero(c)) {
                return None;
            }
            let mut w = WeightedPolynomial::zero(Ring::Xyz, field);
            for (vc, col) in v.iter().zip(cols.iter()) {
                w = w.add(&col.scale(vc)).expect("same ring");
            }
            Some(w)
        })
    } else {
        None
    };
    SliceOutcome {
        weight: n,
        bad,
        witness,
    }
}

/// True iff I = (x,y)^l + (g) contains a nonzero polynomial of standard
/// degree <= l-1. Scanning weights 3m..=9(m-1) suffices when z^m appears in
/// g: members of lower weight lie in (x,y)^l, and members of degree <= l-1
/// have weight <= 3(l-1).
pub fn low_degree_member_verdict(
    g: &WeightedPolynomial,
    params: &ParamSet,
) -> Result<DirectVerdict> {
    if g.ring() != Ring::Xyz {
        return Err(Error::RingMismatch);
    }
    if !g.is_weight_homogeneous(params.g_weight()) {
        return Err(Error::Precondition(format!(
            "g must be WT-homogeneous of weight {}",
            params.g_weight()
        )));
    }
    if g
        .field()
        .is_zero(&g.coefficient(&Monomial::new3(0, 0, params.m)))
    {
        return Err(Error::Precondition(
            "z^m must appear in g with nonzero coefficient".into(),
        ));
    }
    let weights: Vec<u32> = (params.g_weight()..=params.weight_cap()).collect();
    let outcomes: Vec<SliceOutcome> = weights
        .par_iter()
        .map(|&n| scan_slice(g, params, n, true))
        .collect();
    let hit_weights: Vec<u32> = outcomes
        .iter()
        .filter(|o| o.bad)
        .map(|o| o.weight)
        .collect();
    let witness = outcomes.into_iter().find_map(|o| o.witness);
    Ok(DirectVerdict {
        bad: !hit_weights.is_empty(),
        hit_weights,
        checked_weights: weights,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::{normal_form, xy_power_generators, TermOrder};
    use crate::poly::parse_poly;

    #[test]
    fn degenerate_z2_is_bad() {
        let q = FieldSpec::Rational;
        let p = ParamSet::new(2).unwrap();
        let g = parse_poly("z^2", Ring::Xyz, q).unwrap();
        let v = low_degree_member_verdict(&g, &p).unwrap();
        assert!(v.bad);
        let w = v.witness.unwrap();
        assert!(w.max_degree() <= p.ell() - 1);
        // witness is in the ideal: reduces to zero against (x,y)^l and g
        let mut gens = xy_power_generators(p.ell(), q);
        gens.push(g);
        assert!(normal_form(&w, &gens, TermOrder::GradedLex).is_zero());
    }

    #[test]
    fn generic_m2_is_good() {
        let f5 = FieldSpec::prime(5).unwrap();
        let p = ParamSet::new(2).unwrap();
        let g = parse_poly("z^2 + x^3*z + x*y*z + y^3", Ring::Xyz, f5).unwrap();
        let v = low_degree_member_verdict(&g, &p).unwrap();
        assert!(!v.bad);
        assert!(v.witness.is_none());
        assert_eq!(v.checked_weights, (6..=9).collect::<Vec<u32>>());
    }

    #[test]
    fn redundant_columns_do_not_change_rank_verdict() {
        // sanity check on the rank comparison: duplicating the g-columns
        // leaves both ranks unchanged
        let f5 = FieldSpec::prime(5).unwrap();
        let p = ParamSet::new(2).unwrap();
        let g = parse_poly("z^2 + x^3*z + y^3", Ring::Xyz, f5).unwrap();
        for n in p.g_weight()..=p.weight_cap() {
            let mut cols = slice_columns(&g, &p, n);
            let base: Vec<_> = cols.clone();
            cols.extend(base);
            let row_monos = monomials_of_wt_weight(n);
            let build = |cols: &[WeightedPolynomial]| {
                let mut m = Matrix::zero(f5, row_monos.len(), cols.len());
                for (c, col) in cols.iter().enumerate() {
                    for (mono, coeff) in col.terms() {
                        let r = row_monos.iter().position(|x| x == mono).unwrap();
                        m.set(r, c, coeff.clone());
                    }
                }
                m
            };
            assert_eq!(build(&cols).rank(), build(&cols[..cols.len() / 2]).rank());
        }
    }

    #[test]
    fn rejects_missing_zm() {
        let q = FieldSpec::Rational;
        let p = ParamSet::new(2).unwrap();
        let g = parse_poly("x^3*z + y^3", Ring::Xyz, q).unwrap();
        assert!(low_degree_member_verdict(&g, &p).is_err());
    }
}
