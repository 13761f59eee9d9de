//! Constructive lift: from g0 and a shift a, produce (gbar, k, kbar, g1, h,
//! h1) together with all intermediates, certify the factorization congruence
//! with symbolic t, and assemble the surface-equation data.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poly::{Monomial, ParamSet, Ring, WeightedPolynomial};

/// The constructed witness. All polynomials live in k[x,y,w]; the
/// intermediates are the w-coefficients appearing in the recipe.
#[derive(Clone, Debug)]
pub struct LiftWitness {
    pub a: u32,
    pub gbar: WeightedPolynomial,
    pub k: WeightedPolynomial,
    pub kbar: WeightedPolynomial,
    pub g1: WeightedPolynomial,
    pub h: WeightedPolynomial,
    pub h1: WeightedPolynomial,
    /// w-coefficients of g_inf (p_0 = 1).
    pub p: Vec<WeightedPolynomial>,
    /// w-coefficients of gbar (q_0 = 1).
    pub q: Vec<WeightedPolynomial>,
    /// w-coefficients of k.
    pub c: Vec<WeightedPolynomial>,
    /// w-coefficients of f = -gbar*k.
    pub e: Vec<WeightedPolynomial>,
    /// w-coefficients of kbar.
    pub b: Vec<WeightedPolynomial>,
}

/// Coefficient of w^exp in f, returned with zero w-exponent.
fn w_coeff_at(f: &WeightedPolynomial, exp: u32) -> WeightedPolynomial {
    let mut out = WeightedPolynomial::zero(f.ring(), f.field());
    for (m, c) in f.terms() {
        if m.exps[2] == exp {
            out.add_term(Monomial::new3(m.exps[0], m.exps[1], 0), c.clone());
        }
    }
    out
}

fn check_g0(g0: &WeightedPolynomial, params: &ParamSet) -> Result<()> {
    if g0.ring() != Ring::Xyz {
        return Err(Error::RingMismatch);
    }
    if !g0.is_weight_homogeneous(params.g_weight()) {
        return Err(Error::Precondition(format!(
            "g0 must be WT-homogeneous of weight {}",
            params.g_weight()
        )));
    }
    let field = g0.field();
    if !field.is_one(&g0.coefficient(&Monomial::new3(0, 0, params.m))) {
        return Err(Error::Precondition("g0 must be monic in z^m".into()));
    }
    if g0.terms().any(|(m, _)| m.xy_degree() >= params.ell()) {
        return Err(Error::Precondition(format!(
            "g0 must have no term in (x,y)^{}",
            params.ell()
        )));
    }
    let xz = Monomial::new3(3 * (params.m - 1), 0, 1);
    if field.is_zero(&g0.coefficient(&xz)) {
        return Err(Error::Precondition(
            "the coefficient of x^{3(m-1)} z in g0 must be nonzero".into(),
        ));
    }
    Ok(())
}

/// Runs the constructive recipe. Each truncation is applied at the modulus
/// the corresponding step works under; `verify_congruence` certifies the
/// final identity independently.
pub fn construct_lift(g0: &WeightedPolynomial, params: &ParamSet) -> Result<LiftWitness> {
    check_g0(g0, params)?;
    let field = g0.field();
    let m = params.m;
    let d = params.d();
    let a = params.a;

    // step 1: the homogenization chain and the p_j
    let ginf = g0.homogenize(d)?.dehomogenize_at_z()?;
    let top = 2 * (m - 1);
    let p: Vec<WeightedPolynomial> = (0..=top).map(|j| w_coeff_at(&ginf, top - j)).collect();

    // step 2: q_0 = 1, q_r = -sum_{j<r} p_{r-j} q_j, then gbar
    let one = WeightedPolynomial::monomial(Ring::Xyw, field, Monomial::one(), field.one());
    let mut q: Vec<WeightedPolynomial> = vec![one];
    for r in 1..=m as usize {
        let mut acc = WeightedPolynomial::zero(Ring::Xyw, field);
        for j in 0..r {
            if r - j < p.len() {
                acc = acc.add(&p[r - j].mul(&q[j])?)?;
            }
        }
        q.push(acc.neg());
    }
    let gbar = WeightedPolynomial::from_w_coefficients(Ring::Xyw, field, &q);

    // step 3: g_inf*gbar - w^{3m-2}, reduce mod y^{d+4}, divide by x,
    // truncate mod (x,y)^{d-1}
    let wd1 = WeightedPolynomial::monomial(
        Ring::Xyw,
        field,
        Monomial::new3(0, 0, 3 * m - 2),
        field.one(),
    );
    let rem = ginf.mul(&gbar)?.sub(&wd1)?;
    let mut k_scaled = WeightedPolynomial::zero(Ring::Xyw, field);
    for (mono, coeff) in rem.terms() {
        if mono.exps[1] >= d + 4 {
            continue;
        }
        if mono.exps[0] == 0 {
            return Err(Error::ConstructionFailure(format!(
                "residual monomial {} not divisible by x and below y^{}",
                mono.format(Ring::Xyw),
                d + 4
            )));
        }
        k_scaled.add_term(
            Monomial::new3(mono.exps[0] - 1, mono.exps[1], mono.exps[2]),
            coeff.clone(),
        );
    }
    let k = k_scaled.truncate_xy_power(d - 1);
    let c: Vec<WeightedPolynomial> = (0..=(2 * m - 3))
        .map(|j| w_coeff_at(&k, 2 * m - 3 - j))
        .collect();

    // step 4: f = -gbar*k mod (x,y)^{d-1}
    let f = gbar.mul(&k)?.neg().truncate_xy_power(d - 1);
    let mut e: Vec<WeightedPolynomial> = Vec::new();
    for j in 0..=(3 * (m - 1)) {
        let ej = w_coeff_at(&f, 3 * m - 3 - j);
        if j + 2 >= m && !ej.is_zero() {
            return Err(Error::ConstructionFailure(format!(
                "coefficient e_{} should vanish mod (x,y)^{}",
                j,
                d - 1
            )));
        }
        if j + 2 < m {
            e.push(ej);
        }
    }

    // step 5: triangular solve b_i = e_i - sum_{j<i} b_j p_{i-j}
    let mut b: Vec<WeightedPolynomial> = Vec::new();
    for i in 0..e.len() {
        let mut acc = e[i].clone();
        for j in 0..i {
            acc = acc.sub(&b[j].mul(&p[i - j])?)?;
        }
        b.push(acc);
    }
    let mut kbar = WeightedPolynomial::zero(Ring::Xyw, field);
    for (i, bi) in b.iter().enumerate() {
        let w = Monomial::new3(0, 0, m - 1 - i as u32);
        for (mono, coeff) in bi.terms() {
            kbar.add_term(mono.mul(&w), coeff.clone());
        }
    }
    let kbar = kbar.truncate_xy_power(d - 1);

    // step 6: shift by w^a and the y factor. The t^2 coefficient of the
    // factorization is -y^2 w^a (w^a k gbar + g_inf kbar'), so kbar must be
    // shifted by w^{2a}, not w^a: w^a kbar solves g_inf (w^a kbar) = w^a f.
    let wa = Monomial::new3(0, 0, a);
    let ywa = Monomial::new3(0, 1, a);
    let yw2a = Monomial::new3(0, 1, 2 * a);
    let g1 = gbar.mul_monomial(&wa, &field.one());
    let h = k.mul_monomial(&ywa, &field.one());
    let h1 = kbar.mul_monomial(&yw2a, &field.one());

    Ok(LiftWitness {
        a,
        gbar,
        k,
        kbar,
        g1,
        h,
        h1,
        p,
        q,
        c,
        e,
        b,
    })
}

/// Checks the factorization congruence
/// (g_inf + t h)(x - t y (g1 + t h1)) = x g_inf - t y w^{a+d-1} mod (x,y)^d
/// coefficient-wise in the formal parameter t. The t^0 coefficient is the
/// syntactic identity x g_inf = x g_inf; the other three are checked exactly.
pub fn verify_congruence(
    wit: &LiftWitness,
    g0: &WeightedPolynomial,
    params: &ParamSet,
) -> Result<bool> {
    check_g0(g0, params)?;
    let field = g0.field();
    let d = params.d();
    let ginf = g0.homogenize(d)?.dehomogenize_at_z()?;
    let x = WeightedPolynomial::monomial(Ring::Xyw, field, Monomial::new3(1, 0, 0), field.one());
    let y = WeightedPolynomial::monomial(Ring::Xyw, field, Monomial::new3(0, 1, 0), field.one());
    let w_target = WeightedPolynomial::monomial(
        Ring::Xyw,
        field,
        Monomial::new3(0, 0, wit.a + d - 1),
        field.one(),
    );
    // [t^1]: x h - y g_inf g1 = -y w^{a+d-1}
    let t1_lhs = x
        .mul_mod_xy_power(&wit.h, d)?
        .sub(&y.mul_mod_xy_power(&ginf.mul_mod_xy_power(&wit.g1, d)?, d)?)?
        .truncate_xy_power(d);
    let t1_rhs = y.mul_mod_xy_power(&w_target, d)?.neg();
    if t1_lhs != t1_rhs {
        return Ok(false);
    }
    // [t^2]: -y h g1 - y g_inf h1 = 0
    let t2 = y
        .mul_mod_xy_power(&wit.h.mul_mod_xy_power(&wit.g1, d)?, d)?
        .add(&y.mul_mod_xy_power(&ginf.mul_mod_xy_power(&wit.h1, d)?, d)?)?;
    if !t2.is_zero() {
        return Ok(false);
    }
    // [t^3]: -y h h1 = 0
    let t3 = y.mul_mod_xy_power(&wit.h.mul_mod_xy_power(&wit.h1, d)?, d)?;
    Ok(t3.is_zero())
}

/// The surface X G Z^a - t Y W^{a+d-1} = 0 carrying the primitive d-line of
/// type e = a+m-1 on the line X = Y = 0.
#[derive(Clone, Debug)]
pub struct SurfaceData {
    /// X * G * Z^a.
    pub fixed_part: WeightedPolynomial,
    /// Y * W^{a+d-1}, the part multiplied by t.
    pub t_part: WeightedPolynomial,
    /// None means t stays a formal parameter.
    pub t_value: Option<Coeff>,
    pub degree: u32,
    pub curve_type: u32,
}

impl SurfaceData {
    /// The full equation for a numeric t.
    pub fn equation(&self) -> Result<WeightedPolynomial> {
        let t = self
            .t_value
            .as_ref()
            .ok_or_else(|| Error::Domain("t is symbolic".into()))?;
        self.fixed_part.sub(&self.t_part.scale(t))
    }

    pub fn display(&self) -> String {
        match &self.t_value {
            Some(_) => match self.equation() {
                Ok(eq) => eq.to_string(),
                Err(_) => String::new(),
            },
            None => format!("{} - t*{}", self.fixed_part, self.t_part),
        }
    }
}

/// Assembles the surface data from g0; numeric t must be nonzero.
pub fn surface_equation(
    g0: &WeightedPolynomial,
    params: &ParamSet,
    t: Option<Coeff>,
) -> Result<SurfaceData> {
    check_g0(g0, params)?;
    let field = g0.field();
    if let Some(ref tv) = t {
        if field.is_zero(tv) {
            return Err(Error::Precondition("t must be a nonzero scalar".into()));
        }
    }
    let d = params.d();
    let a = params.a;
    let g_big = g0.homogenize(d)?;
    let xza = Monomial::new4(1, 0, a, 0);
    let fixed_part = g_big.mul_monomial(&xza, &field.one());
    let t_part = WeightedPolynomial::monomial(
        Ring::Xyzw,
        field,
        Monomial::new4(0, 1, 0, a + d - 1),
        field.one(),
    );
    Ok(SurfaceData {
        fixed_part,
        t_part,
        t_value: t,
        degree: a + d,
        curve_type: params.curve_type(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::parse_poly;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn g0_m2() -> WeightedPolynomial {
        parse_poly("z^2 + x^3*z + x*y*z + y^3", Ring::Xyz, q()).unwrap()
    }

    fn g0_m3() -> WeightedPolynomial {
        parse_poly(
            "z^3 + x^3*z^2 + x*y*z^2 + x^6*z + y^3*z + x^3*y^3",
            Ring::Xyz,
            q(),
        )
        .unwrap()
    }

    #[test]
    fn m2_closed_form_witness() {
        let p = ParamSet::new(2).unwrap();
        let wit = construct_lift(&g0_m2(), &p).unwrap();
        // gbar = w^2 - (xy + y^3) w + ((xy + y^3)^2 - x^3)
        let u = parse_poly("x*y + y^3", Ring::Xyw, q()).unwrap();
        let w1 = parse_poly("w", Ring::Xyw, q()).unwrap();
        let w2 = parse_poly("w^2", Ring::Xyw, q()).unwrap();
        let x3 = parse_poly("x^3", Ring::Xyw, q()).unwrap();
        let expect = w2
            .sub(&u.mul(&w1).unwrap())
            .unwrap()
            .add(&u.mul(&u).unwrap().sub(&x3).unwrap())
            .unwrap();
        assert_eq!(wit.gbar, expect);
        assert!(wit.k.is_zero());
        assert!(wit.kbar.is_zero());
        assert!(wit.h.is_zero());
        assert!(wit.h1.is_zero());
        assert!(verify_congruence(&wit, &g0_m2(), &p).unwrap());
    }

    #[test]
    fn gbar_is_monic_of_weight_3m() {
        for (p, g0) in [
            (ParamSet::new(2).unwrap(), g0_m2()),
            (ParamSet::new(3).unwrap(), g0_m3()),
        ] {
            let wit = construct_lift(&g0, &p).unwrap();
            assert!(wit.gbar.is_weight_homogeneous(3 * p.m));
            let wm = Monomial::new3(0, 0, p.m);
            assert!(q().is_one(&wit.gbar.coefficient(&wm)));
            // k and kbar weights per the recipe, when nonzero
            if !wit.k.is_zero() {
                assert!(wit.k.is_weight_homogeneous(9 * p.m - 8));
            }
            if !wit.kbar.is_zero() {
                assert!(wit.kbar.is_weight_homogeneous(6 * p.m - 2));
            }
        }
    }

    #[test]
    fn core_congruences_mod_xy_power() {
        let p = ParamSet::new(3).unwrap();
        let g0 = g0_m3();
        let wit = construct_lift(&g0, &p).unwrap();
        let d = p.d();
        let ginf = g0.homogenize(d).unwrap().dehomogenize_at_z().unwrap();
        // g_inf*gbar = w^{d-1} + x k mod (x,y)^{d-1}
        let lhs = ginf.mul_mod_xy_power(&wit.gbar, d - 1).unwrap();
        let x = parse_poly("x", Ring::Xyw, q()).unwrap();
        let wd1 = parse_poly(&format!("w^{}", d - 1), Ring::Xyw, q()).unwrap();
        let rhs = wd1
            .add(&x.mul_mod_xy_power(&wit.k, d - 1).unwrap())
            .unwrap()
            .truncate_xy_power(d - 1);
        assert_eq!(lhs, rhs);
        // k*kbar = 0 mod (x,y)^{d-1}
        assert!(wit
            .k
            .mul_mod_xy_power(&wit.kbar, d - 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn congruence_holds_for_shifts() {
        for a in [0u32, 1, 2] {
            let p = ParamSet::with_shift(3, a).unwrap();
            let wit = construct_lift(&g0_m3(), &p).unwrap();
            assert_eq!(wit.a, a);
            assert!(verify_congruence(&wit, &g0_m3(), &p).unwrap());
        }
    }

    #[test]
    fn congruence_holds_for_shifts_with_full_support() {
        // inputs with nonzero k exercise the w^{2a} shift on h1
        let f = FieldSpec::prime(crate::field::DEFAULT_PRIME).unwrap();
        for m in [3u32, 4, 5] {
            for a in [0u32, 1, 2] {
                let p = ParamSet::with_shift(m, a).unwrap();
                let g0 = crate::verify::random_g(m, f, 2 * a as u64).unwrap();
                let wit = construct_lift(&g0, &p).unwrap();
                if m > 2 && a > 0 {
                    assert!(
                        !wit.k.is_zero() || !wit.kbar.is_zero() || m == 2,
                        "want a nontrivial k at m={}",
                        m
                    );
                }
                assert!(verify_congruence(&wit, &g0, &p).unwrap(), "m={} a={}", m, a);
            }
        }
    }

    #[test]
    fn perturbed_witness_rejected() {
        let p = ParamSet::new(2).unwrap();
        let g0 = g0_m2();
        let mut wit = construct_lift(&g0, &p).unwrap();
        // inject x^{l-2} w into h; x*h then changes by x^{l-1} w, which
        // survives mod (x,y)^d
        let fault = parse_poly("x^2*w", Ring::Xyw, q()).unwrap();
        wit.h = wit.h.add(&fault).unwrap();
        assert!(!verify_congruence(&wit, &g0, &p).unwrap());
    }

    #[test]
    fn precondition_failures() {
        let p = ParamSet::new(2).unwrap();
        // not monic
        let g = parse_poly("2*z^2 + x^3*z + y^3", Ring::Xyz, q()).unwrap();
        assert!(construct_lift(&g, &p).is_err());
        // missing x^{3(m-1)} z term
        let g = parse_poly("z^2 + x*y*z + y^3", Ring::Xyz, q()).unwrap();
        assert!(construct_lift(&g, &p).is_err());
    }

    #[test]
    fn surface_equation_m2() {
        let p = ParamSet::new(2).unwrap();
        let s = surface_equation(&g0_m2(), &p, None).unwrap();
        let expect = parse_poly(
            "X*Z^2*W^2 + X^4*Z + X^2*Y*Z*W + X*Y^3*W",
            Ring::Xyzw,
            q(),
        )
        .unwrap();
        assert_eq!(s.fixed_part, expect);
        assert_eq!(s.degree, 5);
        assert_eq!(s.curve_type, 1);
        assert!(s.display().contains("- t*"));
        // every monomial contains the line X = Y = 0
        for part in [&s.fixed_part, &s.t_part] {
            assert!(part.terms().all(|(m, _)| m.exps[0] + m.exps[1] >= 1));
        }
        // numeric t
        let s = surface_equation(&g0_m2(), &p, Some(q().from_i64(3))).unwrap();
        assert_eq!(s.equation().unwrap().num_terms(), 5);
        assert!(surface_equation(&g0_m2(), &p, Some(q().zero())).is_err());
        // a = 3: degree 8, type 4
        let p = ParamSet::with_shift(2, 3).unwrap();
        let s = surface_equation(&g0_m2(), &p, None).unwrap();
        assert_eq!(s.degree, 8);
        assert_eq!(s.curve_type, 4);
    }
}
