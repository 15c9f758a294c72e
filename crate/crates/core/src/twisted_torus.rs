//! Twisted torus knot parameters `K(p, q, r, n)`: braid realization, surface
//! slope, Seifert data, primitivity tests, and the primitive/Seifert
//! classification with its predicted surgery description.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::Error;

/// The parameter quadruple: `r` strands of the `(p,q)` torus knot receive
/// `n` extra full twists. Plain data; the operations validate the ranges
/// they need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedTorusKnot {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub n: i64,
}

impl TwistedTorusKnot {
    pub fn new(p: i64, q: i64, r: i64, n: i64) -> Self {
        Self { p, q, r, n }
    }
}

impl std::fmt::Display for TwistedTorusKnot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K({},{},{},{})", self.p, self.q, self.r, self.n)
    }
}

/// `(a1, a2)` Seifert fibered over the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub base: SeifertBase,
    pub multiplicities: (i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeifertBase {
    Disk,
}

/// Predicted result of surgery at the surface slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryResult {
    pub slope: i64,
    pub kind: SurgeryKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurgeryKind {
    /// Small Seifert fibered space over the sphere; multiplicity signs are
    /// reported exactly as the formula produces them.
    SfsS2 { multiplicities: (i64, i64, i64) },
    LensSpace,
    ConnectedSumOfLensSpaces,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub primitive_h: bool,
    pub primitive_h_prime: bool,
    /// `(k, SeifertData)` when `r = p - kq` has a solution with `k >= 1`.
    pub seifert_h: Option<(i64, SeifertData)>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    PrimitivePrimitive,
    PrimitiveSeifert,
    OutsideCriteria,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::PrimitivePrimitive => "PrimitivePrimitive",
            Verdict::PrimitiveSeifert => "PrimitiveSeifert",
            Verdict::OutsideCriteria => "OutsideCriteria",
        };
        write!(f, "{}", s)
    }
}

/// Braid realization on `q` strands: the torus block `(s_(q-1) .. s_1)^p`
/// followed by the twist block. For `n = -1` the twist block is written
/// letter for letter as `(s_1^-1 s_2^-1 .. s_(r-1)^-1)^r`; for other `n` it
/// is `(s_1 .. s_(r-1))^(n*r)`, the same element when `n = -1`.
///
/// Strictly speaking the closure presents `K(q, p, r, n)`; for `r < p` and
/// `r < q` that knot is isotopic to `K(p, q, r, n)`, so the roles of the
/// first two parameters are interchangeable in that range.
///
/// Only `r <= q` is realizable on `q` strands; the wider parameter range is
/// meaningful as data but has no braid on this strand count.
pub fn ttk_braid(knot: &TwistedTorusKnot) -> Result<BraidWord, Error> {
    let TwistedTorusKnot { p, q, r, n } = *knot;
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "braid realization needs q >= 2, got q = {}",
            q
        )));
    }
    if r < 0 || r > q {
        return Err(Error::InvalidParameter(format!(
            "braid realization needs 0 <= r <= q, got r = {} with q = {}",
            r, q
        )));
    }
    let strands = q as usize;
    let torus = BraidWord::pi(1, strands - 1, strands)?.rev().power(p);
    let twist = if r <= 1 {
        BraidWord::identity(strands)
    } else {
        let run = BraidWord::pi(1, r as usize - 1, strands)?;
        if n == -1 {
            run.rev().invert().power(r)
        } else {
            run.power(n * r)
        }
    };
    torus.concat(&twist)
}

/// Surface slope with respect to the genus-2 surface: `pq + n r^2`.
pub fn surface_slope(knot: &TwistedTorusKnot) -> i64 {
    knot.p * knot.q + knot.n * knot.r * knot.r
}

/// Solves `r = p - kq` for an integer `k` with `1 <= k < p/q`; such a knot
/// is `(k, r)` Seifert fibered over the disk. The solution is unique when it
/// exists.
pub fn seifert_data(p: i64, q: i64, r: i64) -> Result<Option<(i64, SeifertData)>, Error> {
    if q < 2 || r < 1 {
        return Err(Error::InvalidParameter(format!(
            "seifert data needs q >= 2 and r >= 1, got q = {}, r = {}",
            q, r
        )));
    }
    if (p - r) % q != 0 {
        return Ok(None);
    }
    let k = (p - r) / q;
    if k < 1 {
        return Ok(None);
    }
    Ok(Some((
        k,
        SeifertData {
            base: SeifertBase::Disk,
            multiplicities: (k, r),
        },
    )))
}

fn congruent_to_pm(r: i64, target: i64, modulus: i64) -> bool {
    let r_mod = r.rem_euclid(modulus);
    r_mod == target.rem_euclid(modulus) || r_mod == (-target).rem_euclid(modulus)
}

/// Primitive with respect to the inner handlebody: `p = 1` or
/// `r = ±1 or ±q (mod p)`.
pub fn is_primitive_h(p: i64, q: i64, r: i64) -> Result<bool, Error> {
    if p < 1 {
        return Err(Error::InvalidParameter(format!(
            "primitivity test needs p >= 1, got {}",
            p
        )));
    }
    Ok(p == 1 || congruent_to_pm(r, 1, p) || congruent_to_pm(r, q, p))
}

/// Primitive with respect to the outer handlebody: the same test with the
/// roles of `p` and `q` exchanged, since the torus-knot part reads as a
/// `(q,p)` curve from the other side.
pub fn is_primitive_h_prime(p: i64, q: i64, r: i64) -> Result<bool, Error> {
    if q < 1 {
        return Err(Error::InvalidParameter(format!(
            "primitivity test needs q >= 1, got {}",
            q
        )));
    }
    Ok(q == 1 || congruent_to_pm(r, 1, q) || congruent_to_pm(r, p, q))
}

/// Tests the exact criteria for the primitive/Seifert family:
/// `r = p - kq` with `2 <= k <= (p-2)/q`, `1 < q < p/2`, `n = ±1`, and
/// `r < max(p, q)`. Bounds are strict as written.
fn meets_primitive_seifert_criteria(
    knot: &TwistedTorusKnot,
    seifert: &Option<(i64, SeifertData)>,
) -> bool {
    let TwistedTorusKnot { p, q, r, n } = *knot;
    let Some((k, _)) = seifert else {
        return false;
    };
    *k >= 2
        && *k * q <= p - 2
        && q > 1
        && 2 * q < p
        && (n == 1 || n == -1)
        && r < p.max(q)
}

/// Full classification: both primitivity flags, the Seifert data when it
/// exists, and the verdict.
pub fn classify(knot: &TwistedTorusKnot) -> Result<Classification, Error> {
    let TwistedTorusKnot { p, q, r, .. } = *knot;
    let primitive_h = is_primitive_h(p, q, r)?;
    let primitive_h_prime = is_primitive_h_prime(p, q, r)?;
    let seifert_h = if q >= 2 && r >= 1 {
        seifert_data(p, q, r)?
    } else {
        None
    };
    let verdict = if meets_primitive_seifert_criteria(knot, &seifert_h) {
        Verdict::PrimitiveSeifert
    } else if primitive_h && primitive_h_prime {
        Verdict::PrimitivePrimitive
    } else {
        Verdict::OutsideCriteria
    };
    Ok(Classification {
        primitive_h,
        primitive_h_prime,
        seifert_h,
        verdict,
    })
}

/// Surgery at the surface slope: the primitive/Seifert family yields
/// `S^2(k, p-kq, p-(k-n)q)`; a once-twisted torus knot (`r = 1`, `n = ±1`)
/// yields a lens space; anything else is not predicted here.
pub fn surgery_description(knot: &TwistedTorusKnot) -> Result<SurgeryResult, Error> {
    let TwistedTorusKnot { p, q, r, n } = *knot;
    let classification = classify(knot)?;
    let kind = if classification.verdict == Verdict::PrimitiveSeifert {
        let (k, _) = classification.seifert_h.expect("seifert verdict carries data");
        SurgeryKind::SfsS2 {
            multiplicities: (k, p - k * q, p - (k - n) * q),
        }
    } else if r == 1 && (n == 1 || n == -1) {
        SurgeryKind::LensSpace
    } else {
        SurgeryKind::Unknown
    };
    Ok(SurgeryResult {
        slope: surface_slope(knot),
        kind,
    })
}
