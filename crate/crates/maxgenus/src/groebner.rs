//! Degree-compatible term orders, polynomial reduction, a weight-truncated
//! Buchberger algorithm for WT-homogeneous ideals, and the initial-ideal
//! criterion for good g.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poly::{Monomial, ParamSet, Ring, WeightedPolynomial};

/// Degree-compatible term orders with x > y > z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    GradedLex,
    GradedRevLex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self {
            TermOrder::GradedLex => a.exps.cmp(&b.exps),
            TermOrder::GradedRevLex => {
                for i in (0..4).rev() {
                    if a.exps[i] != b.exps[i] {
                        // smaller exponent in the least variable wins
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Leading (monomial, coefficient) of f under the order; None for zero.
pub fn leading_term<'a>(
    f: &'a WeightedPolynomial,
    order: TermOrder,
) -> Option<(&'a Monomial, &'a Coeff)> {
    f.terms().max_by(|(a, _), (b, _)| order.cmp(a, b))
}

/// Remainder of f on division by the basis: no monomial of the result is
/// divisible by any basis lead monomial, and f - result lies in the ideal.
pub fn normal_form(
    f: &WeightedPolynomial,
    basis: &[WeightedPolynomial],
    order: TermOrder,
) -> WeightedPolynomial {
    let field = f.field();
    let leads: Vec<(Monomial, Coeff)> = basis
        .iter()
        .filter_map(|b| leading_term(b, order).map(|(m, c)| (*m, c.clone())))
        .collect();
    let mut rem = f.clone();
    'outer: loop {
        // reduce the largest reducible monomial
        let mut target: Option<(Monomial, usize)> = None;
        for (mono, _) in rem.terms() {
            for (i, (lm, _)) in leads.iter().enumerate() {
                if lm.divides(mono) {
                    match &target {
                        Some((best, _)) if order.cmp(mono, best) != Ordering::Greater => {}
                        _ => target = Some((*mono, i)),
                    }
                    break;
                }
            }
        }
        let Some((mono, i)) = target else {
            break 'outer;
        };
        let (lm, lc) = &leads[i];
        let factor = field
            .div(&rem.coefficient(&mono), lc)
            .expect("nonzero lead coefficient");
        let quot = mono.div(lm).expect("divisibility checked");
        let sub = basis[i].mul_monomial(&quot, &factor);
        rem = rem.sub(&sub).expect("same ring");
    }
    rem
}

/// A weight-truncated reduced Groebner basis of a WT-homogeneous ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub generators: Vec<WeightedPolynomial>,
    pub order: TermOrder,
    pub weight_cap: u32,
}

impl GroebnerBasis {
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| leading_term(g, self.order).map(|(m, _)| *m))
            .collect()
    }
}

fn spoly(
    f: &WeightedPolynomial,
    g: &WeightedPolynomial,
    order: TermOrder,
) -> WeightedPolynomial {
    let field = f.field();
    let (lmf, lcf) = leading_term(f, order).expect("nonzero");
    let (lmg, lcg) = leading_term(g, order).expect("nonzero");
    let l = lmf.lcm(lmg);
    let a = f.mul_monomial(
        &l.div(lmf).unwrap(),
        &field.inv(lcf).expect("nonzero lead"),
    );
    let b = g.mul_monomial(
        &l.div(lmg).unwrap(),
        &field.inv(lcg).expect("nonzero lead"),
    );
    a.sub(&b).expect("same ring")
}

/// Buchberger with pairs of WT weight above the cap discarded. For graded
/// ideals the lead monomials at each weight <= cap agree with the full basis,
/// since S-polynomials and reductions preserve WT weight.
pub fn buchberger_truncated(
    gens: &[WeightedPolynomial],
    order: TermOrder,
    weight_cap: u32,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<WeightedPolynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.homogeneous_weight().is_none() {
            return Err(Error::Precondition(
                "all generators must be WT-homogeneous".into(),
            ));
        }
        // monic generators keep reductions denominator-free over Q
        let lc = leading_term(g, order).unwrap().1.clone();
        basis.push(g.scale(&g.field().inv(&lc)?));
    }
    // pair queue ordered by lcm weight (normal strategy: lowest first)
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    let enqueue = |pairs: &mut Vec<(u32, usize, usize)>,
                       basis: &[WeightedPolynomial],
                       j: usize| {
        for i in 0..j {
            let lmi = *leading_term(&basis[i], order).unwrap().0;
            let lmj = *leading_term(&basis[j], order).unwrap().0;
            let l = lmi.lcm(&lmj);
            // coprime leads reduce to zero (Buchberger's first criterion)
            if l == lmi.mul(&lmj) {
                continue;
            }
            let w = Ring::Xyz.weight(&l);
            if w > weight_cap {
                continue;
            }
            pairs.push((w, i, j));
        }
    };
    for j in 0..basis.len() {
        enqueue(&mut pairs, &basis, j);
    }
    while !pairs.is_empty() {
        let idx = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(w, _, _))| w)
            .map(|(i, _)| i)
            .unwrap();
        let (_, i, j) = pairs.swap_remove(idx);
        let s = spoly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let lc = leading_term(&r, order).unwrap().1.clone();
        basis.push(r.scale(&r.field().inv(&lc)?));
        enqueue(&mut pairs, &basis, basis.len() - 1);
    }
    // minimalize: drop generators whose lead is divisible by another lead
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| *leading_term(g, order).unwrap().0)
        .collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !leads
                .iter()
                .enumerate()
                .any(|(j, lm)| j != i && lm.divides(&leads[i]) && (lm != &leads[i] || j < i))
        })
        .collect();
    let minimal: Vec<WeightedPolynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    // interreduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<WeightedPolynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(normal_form(&minimal[i], &others, order));
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| {
        let lma = leading_term(a, order).unwrap().0;
        let lmb = leading_term(b, order).unwrap().0;
        order.cmp(lma, lmb)
    });
    Ok(GroebnerBasis {
        generators: reduced,
        order,
        weight_cap,
    })
}

/// Generators of the monomial ideal (x,y)^l.
pub fn xy_power_generators(
    ell: u32,
    field: crate::field::FieldSpec,
) -> Vec<WeightedPolynomial> {
    (0..=ell)
        .map(|i| {
            WeightedPolynomial::monomial(
                Ring::Xyz,
                field,
                Monomial::new3(ell - i, i, 0),
                field.one(),
            )
        })
        .collect()
}

/// Outcome of the initial-ideal criterion: good iff the truncated reduced
/// basis of (x,y)^l + (g) has no lead monomial of standard degree <= l-1.
/// Any member of the ideal of degree <= l-1 is WT-homogeneous of weight
/// <= 3(l-1) and forces such a lead; conversely a degree-compatible lead of
/// degree <= l-1 comes from an element of that degree. Together with the
/// Hilbert-function equality this happens exactly when the initial ideal is
/// (x,y,z)^l.
#[derive(Clone, Debug)]
pub struct InitialIdealVerdict {
    pub good: bool,
    /// Lead monomials of standard degree <= l-1 (empty when good).
    pub low_degree_leads: Vec<Monomial>,
    pub basis_size: usize,
}

pub fn initial_ideal_verdict(
    g: &WeightedPolynomial,
    params: &ParamSet,
    order: TermOrder,
) -> Result<InitialIdealVerdict> {
    if g.ring() != Ring::Xyz {
        return Err(Error::RingMismatch);
    }
    if !g.is_weight_homogeneous(params.g_weight()) {
        return Err(Error::Precondition(format!(
            "g must be WT-homogeneous of weight {}",
            params.g_weight()
        )));
    }
    let ell = params.ell();
    let mut gens = xy_power_generators(ell, g.field());
    gens.push(g.clone());
    let cap = 3 * (ell - 1);
    let gb = buchberger_truncated(&gens, order, cap)?;
    let low_degree_leads: Vec<Monomial> = gb
        .lead_monomials()
        .into_iter()
        .filter(|m| m.degree() <= ell - 1)
        .collect();
    Ok(InitialIdealVerdict {
        good: low_degree_leads.is_empty(),
        basis_size: gb.generators.len(),
        low_degree_leads,
    })
}
