//! C ABI for the verification library: opaque polynomial handles, status
//! codes, and string output the caller frees. No panics cross the boundary.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use maxgenus::error::Error;
use maxgenus::field::FieldSpec;
use maxgenus::groebner::{initial_ideal_verdict, TermOrder};
use maxgenus::lift::{construct_lift, verify_congruence};
use maxgenus::oracle::low_degree_member_verdict;
use maxgenus::phi::phi_iso_verdict;
use maxgenus::poly::{parse_poly, ParamSet, Ring, WeightedPolynomial};
use maxgenus::verify::random_g;

/// Success.
pub const MG_OK: c_int = 0;
/// A required pointer argument was null.
pub const MG_ERR_NULL: c_int = -1;
/// Invalid argument: bad parse, bad field, violated precondition.
pub const MG_ERR_INVALID: c_int = -2;
/// Internal computation failure or invariant violation.
pub const MG_ERR_COMPUTE: c_int = -3;
/// Argument string was not valid UTF-8.
pub const MG_ERR_UTF8: c_int = -4;
/// A panic was caught at the boundary.
pub const MG_ERR_PANIC: c_int = -5;

/// Opaque polynomial handle.
pub struct MgPoly {
    inner: WeightedPolynomial,
}

fn status_of(e: &Error) -> c_int {
    match e {
        Error::ConstructionFailure(_) | Error::InvariantViolation(_)
        | Error::MethodDisagreement(_) | Error::Io(_) => MG_ERR_COMPUTE,
        _ => MG_ERR_INVALID,
    }
}

fn field_of(prime: u64) -> Result<FieldSpec, Error> {
    if prime == 0 {
        Ok(FieldSpec::Rational)
    } else {
        FieldSpec::prime(prime)
    }
}

fn guarded(f: impl FnOnce() -> c_int) -> c_int {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(MG_ERR_PANIC)
}

/// Parses a polynomial in the text grammar over F_prime (prime = 0 selects
/// the rationals). On success stores a new handle in `out`; free it with
/// `mg_poly_free`.
#[no_mangle]
pub unsafe extern "C" fn mg_poly_parse(
    text: *const c_char,
    prime: u64,
    out: *mut *mut MgPoly,
) -> c_int {
    if text.is_null() || out.is_null() {
        return MG_ERR_NULL;
    }
    guarded(|| {
        let s = match CStr::from_ptr(text).to_str() {
            Ok(s) => s,
            Err(_) => return MG_ERR_UTF8,
        };
        let field = match field_of(prime) {
            Ok(f) => f,
            Err(e) => return status_of(&e),
        };
        match parse_poly(s, Ring::Xyz, field) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(MgPoly { inner: p }));
                MG_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Seeded random weight-3m polynomial, monic in z^m (see the library docs
/// for the support contract). prime = 0 selects the rationals.
#[no_mangle]
pub unsafe extern "C" fn mg_random_g(
    m: u32,
    prime: u64,
    seed: u64,
    out: *mut *mut MgPoly,
) -> c_int {
    if out.is_null() {
        return MG_ERR_NULL;
    }
    guarded(|| {
        let field = match field_of(prime) {
            Ok(f) => f,
            Err(e) => return status_of(&e),
        };
        match random_g(m, field, seed) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(MgPoly { inner: p }));
                MG_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Renders the polynomial; free the returned string with `mg_string_free`.
/// Returns null on null input.
#[no_mangle]
pub unsafe extern "C" fn mg_poly_to_string(p: *const MgPoly) -> *mut c_char {
    if p.is_null() {
        return std::ptr::null_mut();
    }
    let text = (*p).inner.to_string();
    CString::new(text).map_or(std::ptr::null_mut(), CString::into_raw)
}

#[no_mangle]
pub unsafe extern "C" fn mg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn mg_poly_free(p: *mut MgPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn verdict_common(
    p: *const MgPoly,
    m: u32,
    out_good: *mut c_int,
    run: impl FnOnce(&WeightedPolynomial, &ParamSet) -> Result<bool, Error>,
) -> c_int {
    if p.is_null() || out_good.is_null() {
        return MG_ERR_NULL;
    }
    let params = match ParamSet::new(m) {
        Ok(ps) => ps,
        Err(e) => return status_of(&e),
    };
    match run(&(*p).inner, &params) {
        Ok(good) => {
            *out_good = good as c_int;
            MG_OK
        }
        Err(e) => status_of(&e),
    }
}

/// Block-by-block isomorphism check; `*out_good = 1` iff every graded block
/// is invertible.
#[no_mangle]
pub unsafe extern "C" fn mg_phi_verdict(p: *const MgPoly, m: u32, out_good: *mut c_int) -> c_int {
    guarded(|| verdict_common(p, m, out_good, |g, ps| Ok(phi_iso_verdict(g, ps)?.good)))
}

/// Linear-algebra membership check; `*out_good = 1` iff the ideal contains
/// no member of standard degree <= l-1.
#[no_mangle]
pub unsafe extern "C" fn mg_direct_verdict(
    p: *const MgPoly,
    m: u32,
    out_good: *mut c_int,
) -> c_int {
    guarded(|| verdict_common(p, m, out_good, |g, ps| Ok(!low_degree_member_verdict(g, ps)?.bad)))
}

/// Weight-truncated initial-ideal check under graded lex.
#[no_mangle]
pub unsafe extern "C" fn mg_groebner_verdict(
    p: *const MgPoly,
    m: u32,
    out_good: *mut c_int,
) -> c_int {
    guarded(|| {
        verdict_common(p, m, out_good, |g, ps| {
            Ok(initial_ideal_verdict(g, ps, TermOrder::GradedLex)?.good)
        })
    })
}

/// Runs the constructive lift on the polynomial for shift `a` and certifies
/// the factorization congruence; `*out_ok = 1` on success.
#[no_mangle]
pub unsafe extern "C" fn mg_lift_check(
    p: *const MgPoly,
    m: u32,
    a: u32,
    out_ok: *mut c_int,
) -> c_int {
    if p.is_null() || out_ok.is_null() {
        return MG_ERR_NULL;
    }
    guarded(|| {
        let params = match ParamSet::with_shift(m, a) {
            Ok(ps) => ps,
            Err(e) => return status_of(&e),
        };
        let g0 = &(*p).inner;
        let wit = match construct_lift(g0, &params) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        match verify_congruence(&wit, g0, &params) {
            Ok(ok) => {
                *out_ok = ok as c_int;
                MG_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The bound P(d,s); requires d >= s >= 1.
#[no_mangle]
pub unsafe extern "C" fn mg_max_genus_bound(d: i64, s: i64, out: *mut i64) -> c_int {
    if out.is_null() {
        return MG_ERR_NULL;
    }
    guarded(|| match maxgenus::genus::max_genus_bound(d, s) {
        Ok(v) => {
            *out = v;
            MG_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Genus of a primitive d-line of type e.
#[no_mangle]
pub extern "C" fn mg_primitive_genus(d: i64, e: i64) -> i64 {
    maxgenus::genus::primitive_genus(d, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    #[test]
    fn round_trip_and_verdicts() {
        unsafe {
            let text = CString::new("z^2 + x^3*z + x*y*z + y^3").unwrap();
            let mut p: *mut MgPoly = std::ptr::null_mut();
            assert_eq!(mg_poly_parse(text.as_ptr(), 32003, &mut p), MG_OK);
            let mut good = -1;
            assert_eq!(mg_phi_verdict(p, 2, &mut good), MG_OK);
            assert_eq!(good, 1);
            assert_eq!(mg_direct_verdict(p, 2, &mut good), MG_OK);
            assert_eq!(good, 1);
            assert_eq!(mg_groebner_verdict(p, 2, &mut good), MG_OK);
            assert_eq!(good, 1);
            let mut ok = -1;
            assert_eq!(mg_lift_check(p, 2, 1, &mut ok), MG_OK);
            assert_eq!(ok, 1);
            let s = mg_poly_to_string(p);
            assert!(!s.is_null());
            let rendered = CStr::from_ptr(s).to_str().unwrap().to_string();
            assert!(rendered.contains("z^2"));
            mg_string_free(s);
            mg_poly_free(p);
        }
    }

    #[test]
    fn degenerate_and_errors() {
        unsafe {
            let text = CString::new("z^2").unwrap();
            let mut p: *mut MgPoly = std::ptr::null_mut();
            assert_eq!(mg_poly_parse(text.as_ptr(), 32003, &mut p), MG_OK);
            let mut good = -1;
            assert_eq!(mg_phi_verdict(p, 2, &mut good), MG_OK);
            assert_eq!(good, 0);
            mg_poly_free(p);

            assert_eq!(mg_phi_verdict(std::ptr::null(), 2, &mut good), MG_ERR_NULL);
            let bad = CString::new("q + 1").unwrap();
            assert_eq!(mg_poly_parse(bad.as_ptr(), 32003, &mut p), MG_ERR_INVALID);
            let composite = CString::new("z^2").unwrap();
            assert_eq!(mg_poly_parse(composite.as_ptr(), 32004, &mut p), MG_ERR_INVALID);
        }
    }

    #[test]
    fn random_and_numerology() {
        unsafe {
            let mut p: *mut MgPoly = std::ptr::null_mut();
            assert_eq!(mg_random_g(3, 32003, 7, &mut p), MG_OK);
            let mut good = -1;
            assert_eq!(mg_phi_verdict(p, 3, &mut good), MG_OK);
            mg_poly_free(p);
            let mut v = 0i64;
            assert_eq!(mg_max_genus_bound(5, 5, &mut v), MG_OK);
            assert_eq!(v, -14);
            assert_eq!(mg_max_genus_bound(3, 7, &mut v), MG_ERR_INVALID);
            assert_eq!(mg_primitive_genus(5, 1), -14);
        }
    }
}
