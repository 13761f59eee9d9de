//! Closed-form numerology: the maximum genus bound P(d,s), primitive-line
//! genus, the Hilbert polynomial of F and its root, the mod-3 case assembly,
//! and the biliaison/union genus formulas.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Binomial coefficient with C(n,r) = 0 whenever n < r or r < 0.
pub fn binom(n: i64, r: i64) -> i64 {
    if r < 0 || n < r {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..r as i128 {
        acc = acc * (n as i128 - i) / (i + 1);
    }
    acc as i64
}

/// The two-branch bound P(d,s): (s-1)d + 1 - C(s+2,3) for s <= d <= 2s,
/// C(d-s,2) - C(s-1,3) for d >= 2s+1. Requires d >= s >= 1.
pub fn max_genus_bound(d: i64, s: i64) -> Result<i64> {
    if s < 1 || d < s {
        return Err(Error::Domain(format!(
            "P(d,s) requires d >= s >= 1, got d={} s={}",
            d, s
        )));
    }
    if d <= 2 * s {
        Ok((s - 1) * d + 1 - binom(s + 2, 3))
    } else {
        Ok(binom(d - s, 2) - binom(s - 1, 3))
    }
}

/// Genus of a primitive d-line of type e: -sum_{i=1}^{d-1} (ie + 1).
pub fn primitive_genus(d: i64, e: i64) -> i64 {
    -(e * d * (d - 1) / 2 + (d - 1))
}

/// Hilbert polynomial chi_F(n) = (n - e - (2d-1)/3) * C(d,2), exact.
pub fn hilbert_poly_f(d: i64, e: i64, n: i64) -> BigRational {
    let shift = BigRational::new(BigInt::from(2 * d - 1), BigInt::from(3));
    (BigRational::from_integer(BigInt::from(n - e)) - shift)
        * BigRational::from_integer(BigInt::from(binom(d, 2)))
}

/// The integer root n0 = e + (2d-1)/3 = a+d-1; defined only for d = 2 mod 3.
pub fn n0(d: i64, a: i64) -> Result<i64> {
    if d % 3 != 2 {
        return Err(Error::Domain(format!(
            "n0 requires d = 2 mod 3, got d={}",
            d
        )));
    }
    Ok(a + d - 1)
}

/// One piece of a mod-3 case assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Line,
    PrimitiveLine { degree: i64, etype: i64 },
    DoubleLine { etype: i64 },
}

impl Component {
    pub fn genus(&self) -> i64 {
        match self {
            Component::Line => 0,
            Component::PrimitiveLine { degree, etype } => primitive_genus(*degree, *etype),
            Component::DoubleLine { etype } => primitive_genus(2, *etype),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Component::Line => "line".to_string(),
            Component::PrimitiveLine { degree, etype } => {
                format!("primitive {}-line of type {}", degree, etype)
            }
            Component::DoubleLine { etype } => format!("double line of type {}", etype),
        }
    }
}

/// Disjoint-union assembly realizing genus P(d,d), by residue of d mod 3.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub d: i64,
    pub components: Vec<Component>,
    pub total_genus: i64,
    pub bound: i64,
}

impl Assembly {
    pub fn genus_matches_bound(&self) -> bool {
        self.total_genus == self.bound
    }
}

/// The three constructions covering all residues of d mod 3, with the
/// disjoint-union genus p_a(X | Y) = p_a(X) + p_a(Y) - 1.
pub fn conjecture_a_assembly(d: i64) -> Result<Assembly> {
    if d < 5 {
        return Err(Error::Domain(format!("assembly requires d >= 5, got {}", d)));
    }
    let components = match d % 3 {
        2 => vec![Component::PrimitiveLine {
            degree: d,
            etype: (d - 2) / 3,
        }],
        0 => vec![
            Component::Line,
            Component::PrimitiveLine {
                degree: d - 1,
                etype: d / 3,
            },
        ],
        _ => vec![
            Component::DoubleLine { etype: d - 2 },
            Component::PrimitiveLine {
                degree: d - 2,
                etype: (d + 2) / 3,
            },
        ],
    };
    let total_genus = components.iter().map(|c| c.genus()).sum::<i64>()
        - (components.len() as i64 - 1);
    Ok(Assembly {
        d,
        components,
        total_genus,
        bound: max_genus_bound(d, d)?,
    })
}

/// Biliaison on a degree-t surface: g(C) = g(Y) + (t-1)(t-2)/2 + deg(Y) - 1.
pub fn biliaison_genus(g_y: i64, deg_y: i64, t: i64) -> i64 {
    g_y + (t - 1) * (t - 2) / 2 + deg_y - 1
}

/// Union genus p_a(X u Y) = p_a(X) + p_a(Y) + length(X.Y) - 1.
pub fn union_genus(p_x: i64, p_y: i64, meet_length: i64) -> i64 {
    p_x + p_y + meet_length - 1
}

/// CSV table of max_genus_bound over 1 <= s <= d.
pub fn bounds_csv(d_max: i64, s_max: i64) -> Result<String> {
    let mut out = String::from("d,s,P\n");
    for d in 1..=d_max {
        for s in 1..=s_max.min(d) {
            out.push_str(&format!("{},{},{}\n", d, s, max_genus_bound(d, s)?));
        }
    }
    Ok(out)
}
