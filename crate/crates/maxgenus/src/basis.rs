//! Graded monomial bases of R = k[x,y,z]/(x,y)^l and of the quotient space M,
//! the bijection psi between them, and the Hilbert-function comparison of
//! S = k[x,y,z]/((x,y)^l + (g)) against T = k[x,y,z]/(x,y,z)^l.

use crate::error::{Error, Result};
use crate::poly::{monomials_of_wt_weight, Monomial, ParamSet, Ring, WeightedPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceTag {
    /// R[-3m]: classes x^i y^j z^k with i+j < l, graded by WT + 3m.
    RShifted,
    /// M: classes x^a y^b z^c with a+b < l and a+b+c >= l.
    M,
}

/// Ordered monomial basis of one weight-graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub weight: u32,
    pub space: SpaceTag,
    pub monomials: Vec<Monomial>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
}

/// Basis of R[-3m]_n: monomials x^i y^j z^k with i+j < l of WT weight n-3m.
/// Empty below the shift.
pub fn basis_r_shifted(params: &ParamSet, n: u32) -> GradedBasis {
    let mut monomials = Vec::new();
    if n >= params.g_weight() {
        monomials = monomials_of_wt_weight(n - params.g_weight())
            .into_iter()
            .filter(|m| m.xy_degree() < params.ell())
            .collect();
    }
    GradedBasis {
        weight: n,
        space: SpaceTag::RShifted,
        monomials,
    }
}

/// Basis of M_n: monomials x^a y^b z^c with a+b < l, a+b+c >= l, weight n.
pub fn basis_m(params: &ParamSet, n: u32) -> GradedBasis {
    let monomials = monomials_of_wt_weight(n)
        .into_iter()
        .filter(|m| m.xy_degree() < params.ell() && m.degree() >= params.ell())
        .collect();
    GradedBasis {
        weight: n,
        space: SpaceTag::M,
        monomials,
    }
}

/// psi(x^i y^j z^k) = x^{l-i-j-1} y^i z^{1+j+k}, defined for i+j < l.
/// Raises WT weight by exactly 3m.
pub fn psi(mono: &Monomial, params: &ParamSet) -> Result<Monomial> {
    let (i, j, k) = (mono.exps[0], mono.exps[1], mono.exps[2]);
    let ell = params.ell();
    if i + j >= ell {
        return Err(Error::Domain(format!(
            "{} is zero in R (x,y-degree {} >= {})",
            mono.format(Ring::Xyz),
            i + j,
            ell
        )));
    }
    Ok(Monomial::new3(ell - i - j - 1, i, 1 + j + k))
}

/// psi^{-1}(x^a y^b z^c) = x^b y^{l-1-a-b} z^{a+b+c-l}, defined on M.
pub fn psi_inverse(mono: &Monomial, params: &ParamSet) -> Result<Monomial> {
    let (a, b, c) = (mono.exps[0], mono.exps[1], mono.exps[2]);
    let ell = params.ell();
    if a + b >= ell || a + b + c < ell {
        return Err(Error::Domain(format!(
            "{} is not a basis monomial of M",
            mono.format(Ring::Xyz)
        )));
    }
    Ok(Monomial::new3(b, ell - 1 - a - b, a + b + c - ell))
}

/// Per-weight dimension table of S = k[x,y,z]/((x,y)^l+(g)) and
/// T = k[x,y,z]/(x,y,z)^l, weights 0..=9(m-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub weights: Vec<u32>,
    pub dim_s: Vec<usize>,
    pub dim_t: Vec<usize>,
}

impl HilbertTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,dim_S,dim_T\n");
        for i in 0..self.weights.len() {
            out.push_str(&format!(
                "{},{},{}\n",
                self.weights[i], self.dim_s[i], self.dim_t[i]
            ));
        }
        out
    }
}

/// Requires g WT-homogeneous of weight 3m and monic in z^m. The S column
/// counts the monomial basis {x^a y^b z^c : a+b < l, c < m}; the T column
/// counts monomials of standard degree < l.
pub fn hilbert_table(params: &ParamSet, g: &WeightedPolynomial) -> Result<HilbertTable> {
    if g.ring() != Ring::Xyz {
        return Err(Error::RingMismatch);
    }
    if !g.is_weight_homogeneous(params.g_weight()) {
        return Err(Error::Precondition(format!(
            "g must be WT-homogeneous of weight {}",
            params.g_weight()
        )));
    }
    let zm = Monomial::new3(0, 0, params.m);
    if !g.field().is_one(&g.coefficient(&zm)) {
        return Err(Error::Precondition("g must be monic in z^m".into()));
    }
    let cap = params.weight_cap();
    let ell = params.ell();
    let mut dim_s = vec![0usize; cap as usize + 1];
    let mut dim_t = vec![0usize; cap as usize + 1];
    for n in 0..=cap {
        for mono in monomials_of_wt_weight(n) {
            if mono.xy_degree() < ell && mono.exps[2] < params.m {
                dim_s[n as usize] += 1;
            }
            if mono.degree() < ell {
                dim_t[n as usize] += 1;
            }
        }
    }
    Ok(HilbertTable {
        weights: (0..=cap).collect(),
        dim_s,
        dim_t,
    })
}
