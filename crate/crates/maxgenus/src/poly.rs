//! Sparse multivariate polynomials with the two weight gradings and the
//! homogenization chain g0 -> G -> g_inf.
//!
//! Variables are positional: exponent slot 0 is x (or X), slot 1 is y (or Y),
//! and the remaining slots depend on the ambient ring tag.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};

/// Ambient polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    /// k[x,y,z] with the WT grading WT(x)=1, WT(y)=2, WT(z)=3.
    Xyz,
    /// k[x,y,w] with the WT_inf grading WT(x)=2, WT(y)=1, WT(w)=3.
    Xyw,
    /// k[X,Y,Z,W] with the standard grading.
    Xyzw,
}

impl Ring {
    pub fn arity(&self) -> usize {
        match self {
            Ring::Xyz | Ring::Xyw => 3,
            Ring::Xyzw => 4,
        }
    }

    pub fn var_names(&self) -> &'static [&'static str] {
        match self {
            Ring::Xyz => &["x", "y", "z"],
            Ring::Xyw => &["x", "y", "w"],
            Ring::Xyzw => &["X", "Y", "Z", "W"],
        }
    }

    /// Weight of a monomial in the grading attached to this ring
    /// (standard degree for the projective ring).
    pub fn weight(&self, m: &Monomial) -> u32 {
        match self {
            Ring::Xyz => m.exps[0] + 2 * m.exps[1] + 3 * m.exps[2],
            Ring::Xyw => 2 * m.exps[0] + m.exps[1] + 3 * m.exps[2],
            Ring::Xyzw => m.degree(),
        }
    }
}

/// Exponent tuple; unused trailing slots stay zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u32; 4],
}

impl Monomial {
    pub fn new3(a: u32, b: u32, c: u32) -> Monomial {
        Monomial { exps: [a, b, c, 0] }
    }

    pub fn new4(a: u32, b: u32, c: u32, d: u32) -> Monomial {
        Monomial { exps: [a, b, c, d] }
    }

    pub fn one() -> Monomial {
        Monomial { exps: [0; 4] }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Exponent of x plus exponent of y (membership test for (x,y)^r).
    pub fn xy_degree(&self) -> u32 {
        self.exps[0] + self.exps[1]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u32; 4];
        for i in 0..4 {
            e[i] = self.exps[i] + other.exps[i];
        }
        Monomial { exps: e }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..4).all(|i| self.exps[i] <= other.exps[i])
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            let mut e = [0u32; 4];
            for i in 0..4 {
                e[i] = self.exps[i] - other.exps[i];
            }
            Some(Monomial { exps: e })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0u32; 4];
        for i in 0..4 {
            e[i] = self.exps[i].max(other.exps[i]);
        }
        Monomial { exps: e }
    }

    pub fn format(&self, ring: Ring) -> String {
        let names = ring.var_names();
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{}^{}", name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Graded lexicographic order with x > y > z (> w): total degree first,
/// then lexicographic on the exponent tuple.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.exps).cmp(&(other.degree(), other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The integer frame of the construction: m >= 2, d = 3m-1, l = 3m-2,
/// shift a >= 0, type e = a+m-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSet {
    pub m: u32,
    pub a: u32,
}

impl ParamSet {
    pub fn new(m: u32) -> Result<ParamSet> {
        if m < 2 {
            return Err(Error::Domain(format!("m must be >= 2, got {}", m)));
        }
        Ok(ParamSet { m, a: 0 })
    }

    pub fn with_shift(m: u32, a: u32) -> Result<ParamSet> {
        let mut p = ParamSet::new(m)?;
        p.a = a;
        Ok(p)
    }

    pub fn d(&self) -> u32 {
        3 * self.m - 1
    }

    pub fn ell(&self) -> u32 {
        3 * self.m - 2
    }

    pub fn curve_type(&self) -> u32 {
        self.a + self.m - 1
    }

    /// Target weight of g: 3m.
    pub fn g_weight(&self) -> u32 {
        3 * self.m
    }

    /// Largest weight where the quotient spaces are nonzero: 9(m-1).
    pub fn weight_cap(&self) -> u32 {
        9 * (self.m - 1)
    }
}

/// Sparse exact-coefficient polynomial; no explicit zero terms are stored.
/// Term map is keyed by graded-lex order, so iteration is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPolynomial {
    ring: Ring,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Coeff>,
}

impl WeightedPolynomial {
    pub fn zero(ring: Ring, field: FieldSpec) -> WeightedPolynomial {
        WeightedPolynomial {
            ring,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(ring: Ring, field: FieldSpec, it: I) -> WeightedPolynomial
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut p = WeightedPolynomial::zero(ring, field);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(ring: Ring, field: FieldSpec, m: Monomial, c: Coeff) -> WeightedPolynomial {
        WeightedPolynomial::from_terms(ring, field, [(m, c)])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = self.field.add(&old, &c);
                if !self.field.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    fn check_compat(&self, other: &WeightedPolynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &WeightedPolynomial) -> Result<WeightedPolynomial> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeightedPolynomial) -> Result<WeightedPolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WeightedPolynomial {
        let f = self.field;
        WeightedPolynomial {
            ring: self.ring,
            field: f,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> WeightedPolynomial {
        if self.field.is_zero(c) {
            return WeightedPolynomial::zero(self.ring, self.field);
        }
        let f = self.field;
        WeightedPolynomial {
            ring: self.ring,
            field: f,
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> WeightedPolynomial {
        if self.field.is_zero(c) {
            return WeightedPolynomial::zero(self.ring, self.field);
        }
        let f = self.field;
        WeightedPolynomial {
            ring: self.ring,
            field: f,
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &WeightedPolynomial) -> Result<WeightedPolynomial> {
        self.check_compat(other)?;
        let mut out = WeightedPolynomial::zero(self.ring, self.field);
        for (m, c) in other.terms() {
            for (mm, a) in self.terms() {
                out.add_term(mm.mul(m), self.field.mul(a, c));
            }
        }
        Ok(out)
    }

    /// Drops every monomial with e_x + e_y >= r (reduction mod (x,y)^r).
    pub fn truncate_xy_power(&self, r: u32) -> WeightedPolynomial {
        WeightedPolynomial {
            ring: self.ring,
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.xy_degree() < r)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Product reduced mod (x,y)^r; exact in the surviving terms.
    pub fn mul_mod_xy_power(
        &self,
        other: &WeightedPolynomial,
        r: u32,
    ) -> Result<WeightedPolynomial> {
        self.check_compat(other)?;
        let mut out = WeightedPolynomial::zero(self.ring, self.field);
        for (m, c) in other.terms() {
            if m.xy_degree() >= r {
                continue;
            }
            for (mm, a) in self.terms() {
                let prod = mm.mul(m);
                if prod.xy_degree() < r {
                    out.add_term(prod, self.field.mul(a, c));
                }
            }
        }
        Ok(out)
    }

    /// Weight of the polynomial in its ring's grading, when homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = self.ring.weight(it.next()?);
        if it.all(|m| self.ring.weight(m) == w) {
            Some(w)
        } else {
            None
        }
    }

    pub fn is_weight_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|m| self.ring.weight(m) == w)
    }

    pub fn is_degree_homogeneous(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// G(X,Y,Z,W) = W^{d-1} g0(X/W, Y/W, Z/W): each monomial x^a y^b z^c
    /// becomes X^a Y^b Z^c W^{d-1-a-b-c}.
    pub fn homogenize(&self, d: u32) -> Result<WeightedPolynomial> {
        if self.ring != Ring::Xyz {
            return Err(Error::RingMismatch);
        }
        let target = d - 1;
        let mut out = WeightedPolynomial::zero(Ring::Xyzw, self.field);
        for (m, c) in self.terms() {
            let deg = m.degree();
            if deg > target {
                return Err(Error::DegreeOverflow {
                    found: deg,
                    max: target,
                });
            }
            out.add_term(
                Monomial::new4(m.exps[0], m.exps[1], m.exps[2], target - deg),
                c.clone(),
            );
        }
        Ok(out)
    }

    /// g_inf(x,y,w) = G(x,y,1,w).
    pub fn dehomogenize_at_z(&self) -> Result<WeightedPolynomial> {
        if self.ring != Ring::Xyzw {
            return Err(Error::RingMismatch);
        }
        let mut out = WeightedPolynomial::zero(Ring::Xyw, self.field);
        for (m, c) in self.terms() {
            out.add_term(Monomial::new3(m.exps[0], m.exps[1], m.exps[3]), c.clone());
        }
        Ok(out)
    }

    /// Coefficients with respect to w: returns c_0..c_D with
    /// f = sum c_j(x,y) w^{D-j}, D the top w-exponent. The c_j are returned
    /// as elements of k[x,y,w] with zero w-exponent.
    pub fn w_coefficients(&self) -> Result<Vec<WeightedPolynomial>> {
        if self.ring != Ring::Xyw {
            return Err(Error::RingMismatch);
        }
        let top = self.terms.keys().map(|m| m.exps[2]).max().unwrap_or(0);
        let mut out = vec![WeightedPolynomial::zero(Ring::Xyw, self.field); top as usize + 1];
        for (m, c) in self.terms() {
            let j = (top - m.exps[2]) as usize;
            out[j].add_term(Monomial::new3(m.exps[0], m.exps[1], 0), c.clone());
        }
        Ok(out)
    }

    /// Rebuilds f = sum given[j] * w^{D-j}.
    pub fn from_w_coefficients(
        ring: Ring,
        field: FieldSpec,
        coeffs: &[WeightedPolynomial],
    ) -> WeightedPolynomial {
        let top = coeffs.len().saturating_sub(1) as u32;
        let mut out = WeightedPolynomial::zero(ring, field);
        for (j, c) in coeffs.iter().enumerate() {
            let w = Monomial::new3(0, 0, top - j as u32);
            for (m, a) in c.terms() {
                out.add_term(m.mul(&w), a.clone());
            }
        }
        out
    }

    /// Leading term under the map's internal graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field;
        let mut first = true;
        // descending graded-lex, so output is deterministic and diffable
        for (m, c) in self.terms.iter().rev() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = *m == Monomial::one();
            if field.is_one(&abs) && !is_const {
                write!(f, "{}", m.format(self.ring))?;
            } else if is_const {
                write!(f, "{}", field.format(&abs))?;
            } else {
                write!(f, "{}*{}", field.format(&abs), m.format(self.ring))?;
            }
        }
        Ok(())
    }
}

/// Parses the polynomial text grammar:
/// `poly := term (('+'|'-') term)*`, `term := [coeff] ['*'] [monomial]`,
/// `monomial := var('^'exp)?('*'var('^'exp)?)*`, coefficients decimal
/// integers or fractions `n/d`.
pub fn parse_poly(input: &str, ring: Ring, field: FieldSpec) -> Result<WeightedPolynomial> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        ring,
        field,
    };
    p.parse()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    ring: Ring,
    field: FieldSpec,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse(&mut self) -> Result<WeightedPolynomial> {
        let mut out = WeightedPolynomial::zero(self.ring, self.field);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(Error::Parse("empty input".into()));
        }
        if self.chars.iter().collect::<String>().trim() == "0" {
            return Ok(out);
        }
        let mut sign = 1i64;
        if self.peek() == Some('-') {
            self.bump();
            sign = -1;
        } else if self.peek() == Some('+') {
            self.bump();
        }
        loop {
            let (m, c) = self.parse_term()?;
            let c = if sign < 0 { self.field.neg(&c) } else { c };
            out.add_term(m, c);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    sign = 1;
                }
                Some('-') => {
                    self.bump();
                    sign = -1;
                }
                Some(c) => {
                    return Err(Error::Parse(format!(
                        "unexpected character '{}' at offset {}",
                        c, self.pos
                    )))
                }
            }
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<(Monomial, Coeff)> {
        self.skip_ws();
        let mut coeff = self.field.one();
        let mut saw_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.parse_int()?;
            self.skip_ws();
            if self.peek() == Some('/') {
                self.bump();
                self.skip_ws();
                let den = self.parse_int()?;
                coeff = self.field.from_fraction(num, den)?;
            } else {
                coeff = self.field.from_i64(num);
            }
            saw_coeff = true;
        }
        self.skip_ws();
        if saw_coeff && self.peek() == Some('*') {
            self.bump();
            self.skip_ws();
        }
        let mut mono = Monomial::one();
        let mut saw_var = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    self.bump();
                    let idx = self
                        .ring
                        .var_names()
                        .iter()
                        .position(|v| v.chars().next() == Some(c))
                        .ok_or_else(|| {
                            Error::Parse(format!(
                                "variable '{}' not in ring {:?}",
                                c, self.ring
                            ))
                        })?;
                    let mut exp = 1u32;
                    self.skip_ws();
                    if self.peek() == Some('^') {
                        self.bump();
                        self.skip_ws();
                        exp = self.parse_int()? as u32;
                    }
                    mono.exps[idx] += exp;
                    saw_var = true;
                    self.skip_ws();
                    if self.peek() == Some('*') {
                        // lookahead: '*' may join another variable only
                        let save = self.pos;
                        self.bump();
                        self.skip_ws();
                        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                            self.pos = save;
                            break;
                        }
                        continue;
                    }
                    continue;
                }
                _ => break,
            }
        }
        if !saw_coeff && !saw_var {
            return Err(Error::Parse(format!("empty term at offset {}", self.pos)));
        }
        Ok((mono, coeff))
    }

    fn parse_int(&mut self) -> Result<i64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(Error::Parse(format!("expected integer at offset {}", start)));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad integer '{}': {}", s, e)))
    }
}

/// All monomials x^a y^b z^c in k[x,y,z] of WT weight exactly `weight`.
pub fn monomials_of_wt_weight(weight: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for c in 0..=(weight / 3) {
        for b in 0..=((weight - 3 * c) / 2) {
            let a = weight - 3 * c - 2 * b;
            out.push(Monomial::new3(a, b, c));
        }
    }
    out.sort();
    out
}
