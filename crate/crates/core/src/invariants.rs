//! Braid-closure invariants: the reduced Burau representation and the
//! Alexander polynomial it computes, plus the closed-form torus-knot
//! polynomial used as an independent oracle.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::error::Error;
use crate::laurent::LaurentPoly;

/// Degree guard for the exact-arithmetic pipeline; rejects inputs whose
/// polynomial degrees would leave desk scale.
pub const DEFAULT_DEGREE_CAP: i64 = 2000;

/// Square matrix over integer Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = LaurentPoly::one();
        }
        m
    }

    fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    fn get_mut(&mut self, row: usize, col: usize) -> &mut LaurentPoly {
        &mut self.entries[row * self.dim + col]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    *out.get_mut(i, j) = out.get(i, j).add(&prod);
                }
            }
        }
        out
    }

    pub fn sub_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            *out.get_mut(i, i) = out.get(i, i).sub(&LaurentPoly::one());
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.dim)
    }

    /// Exact determinant by dynamic programming over column subsets;
    /// division-free, so no intermediate rationals appear.
    pub fn determinant(&self) -> LaurentPoly {
        let d = self.dim;
        if d == 0 {
            return LaurentPoly::one();
        }
        assert!(d <= 24, "determinant dimension {} beyond supported range", d);
        let mut layer: HashMap<u64, LaurentPoly> = HashMap::new();
        layer.insert(0, LaurentPoly::one());
        for row in 0..d {
            let mut next: HashMap<u64, LaurentPoly> = HashMap::new();
            for (mask, value) in &layer {
                for col in 0..d {
                    let bit = 1u64 << col;
                    if mask & bit != 0 {
                        continue;
                    }
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    let mut term = value.mul(entry);
                    if (mask >> (col + 1)).count_ones() % 2 == 1 {
                        term = term.neg();
                    }
                    next.entry(mask | bit)
                        .and_modify(|acc| *acc = acc.add(&term))
                        .or_insert(term);
                }
            }
            layer = next;
        }
        layer
            .remove(&((1u64 << d) - 1))
            .unwrap_or_else(LaurentPoly::zero)
    }
}

/// The reduced Burau matrix of one letter; `dim = strands - 1`.
fn burau_letter(dim: usize, index: usize, positive: bool) -> BurauMatrix {
    let mut m = BurauMatrix::identity(dim);
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    let i = index; // 1-based generator subscript
    if positive {
        if i >= 2 {
            *m.get_mut(i - 2, i - 1) = t.clone();
        }
        *m.get_mut(i - 1, i - 1) = t.neg();
        if i < dim {
            *m.get_mut(i, i - 1) = LaurentPoly::one();
        }
    } else {
        if i >= 2 {
            *m.get_mut(i - 2, i - 1) = LaurentPoly::one();
        }
        *m.get_mut(i - 1, i - 1) = t_inv.neg();
        if i < dim {
            *m.get_mut(i, i - 1) = t_inv;
        }
    }
    m
}

/// The reduced Burau representation, multiplicative over concatenation.
pub fn reduced_burau(word: &BraidWord) -> Result<BurauMatrix, Error> {
    let n = word.strands();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "reduced Burau needs at least 2 strands".into(),
        ));
    }
    let dim = n - 1;
    let mut cache: HashMap<i32, BurauMatrix> = HashMap::new();
    let mut out = BurauMatrix::identity(dim);
    for letter in word.letters() {
        let m = cache
            .entry(letter.as_int())
            .or_insert_with(|| burau_letter(dim, letter.index(), letter.sign() > 0));
        out = out.mul(m);
    }
    Ok(out)
}

/// Number of components of the braid closure: cycles of the permutation.
pub fn closure_components(word: &BraidWord) -> usize {
    word.permutation().cycle_count()
}

/// Alexander polynomial of the closure of `word`, which must be a knot.
///
/// Computed as `det(burau(w) - I) * (1 - t) / (1 - t^q)` and normalized; the
/// division is exact for every knot closure, and a failure aborts because it
/// can only mean a bug in the representation.
pub fn alexander(word: &BraidWord) -> Result<LaurentPoly, Error> {
    alexander_with_cap(word, DEFAULT_DEGREE_CAP)
}

pub fn alexander_with_cap(word: &BraidWord, degree_cap: i64) -> Result<LaurentPoly, Error> {
    let q = word.strands();
    if q < 2 {
        return Err(Error::InvalidParameter(
            "alexander needs at least 2 strands".into(),
        ));
    }
    let components = closure_components(word);
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    if word.len() as i64 > degree_cap {
        return Err(Error::ResourceLimit(format!(
            "word length {} exceeds degree cap {}",
            word.len(),
            degree_cap
        )));
    }
    let burau = reduced_burau(word)?;
    let det = burau.sub_identity().determinant();
    let numerator = det.mul(&LaurentPoly::one().sub(&LaurentPoly::t()));
    let denominator = LaurentPoly::one().sub(&LaurentPoly::monomial(1, q as i64));
    let quotient = numerator
        .divide_exact(&denominator)
        .expect("alexander correction factor must divide exactly; representation bug");
    Ok(quotient.normalize_alexander())
}

/// Closed-form Alexander polynomial of the `(p,q)` torus knot:
/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, by exact division.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly, Error> {
    torus_alexander_with_cap(p, q, DEFAULT_DEGREE_CAP)
}

pub fn torus_alexander_with_cap(p: i64, q: i64, degree_cap: i64) -> Result<LaurentPoly, Error> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameter(format!(
            "torus parameters must be >= 2, got ({}, {})",
            p, q
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::InvalidParameter(format!(
            "torus parameters must be coprime, got ({}, {})",
            p, q
        )));
    }
    if p.checked_mul(q).is_none_or(|pq| pq > degree_cap) {
        return Err(Error::ResourceLimit(format!(
            "torus exponent {}*{} exceeds degree cap {}",
            p, q, degree_cap
        )));
    }
    let numerator = LaurentPoly::t_power_minus_one(p * q).mul(&LaurentPoly::t_power_minus_one(1));
    let quotient = numerator
        .divide_exact(&LaurentPoly::t_power_minus_one(p))
        .expect("t^pq - 1 is divisible by t^p - 1")
        .divide_exact(&LaurentPoly::t_power_minus_one(q))
        .expect("torus polynomial is integral for coprime parameters");
    Ok(quotient.normalize_alexander())
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside;
    use proptest::prelude::*;

    fn w(strands: usize, word: &[i32]) -> BraidWord {
        BraidWord::from_ints(strands, word).unwrap()
    }

    fn poly(min: i64, coeffs: &[i128]) -> LaurentPoly {
        LaurentPoly::new(min, coeffs.to_vec())
    }

    #[test]
    fn empty_word_is_the_identity_matrix() {
        let m = reduced_burau(&BraidWord::identity(4)).unwrap();
        assert_eq!(m, BurauMatrix::identity(3));
    }

    #[test]
    fn two_strand_generator_is_minus_t() {
        let m = reduced_burau(&w(2, &[1])).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.get(0, 0), &poly(1, &[-1]));
        let inv = reduced_burau(&w(2, &[-1])).unwrap();
        assert_eq!(inv.get(0, 0), &poly(-1, &[-1]));
    }

    #[test]
    fn representation_respects_braid_relations() {
        for n in 3..=6 {
            for i in 1..n - 1 {
                let braid_lhs = w(n, &[i as i32, i as i32 + 1, i as i32]);
                let braid_rhs = w(n, &[i as i32 + 1, i as i32, i as i32 + 1]);
                assert_eq!(
                    reduced_burau(&braid_lhs).unwrap(),
                    reduced_burau(&braid_rhs).unwrap()
                );
            }
        }
        assert_eq!(
            reduced_burau(&w(5, &[1, 3])).unwrap(),
            reduced_burau(&w(5, &[3, 1])).unwrap()
        );
    }

    #[test]
    fn inverse_letters_invert_the_matrix() {
        for word in [w(4, &[1, -2, 3, 3]), w(5, &[4, 2, -1]), w(2, &[1, 1, 1])] {
            let m = reduced_burau(&word).unwrap();
            let m_inv = reduced_burau(&word.invert()).unwrap();
            assert!(m.mul(&m_inv).is_identity());
        }
    }

    #[test]
    fn trefoil_alexander() {
        let trefoil = alexander(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(trefoil, poly(0, &[1, -1, 1]));
        assert_eq!(trefoil, torus_alexander(3, 2).unwrap());
    }

    #[test]
    fn torus_alexander_small_values() {
        assert_eq!(torus_alexander(3, 2).unwrap(), poly(0, &[1, -1, 1]));
        assert_eq!(
            torus_alexander(5, 2).unwrap(),
            poly(0, &[1, -1, 1, -1, 1])
        );
        assert_eq!(torus_alexander(2, 3).unwrap(), torus_alexander(3, 2).unwrap());
        assert!(torus_alexander(4, 2).is_err());
        assert!(torus_alexander(1, 2).is_err());
        assert!(matches!(
            torus_alexander(101, 100),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn burau_path_matches_closed_form_for_torus_words() {
        for (p, q) in [(3i64, 2usize), (5, 2), (4, 3), (5, 3), (7, 3), (11, 5), (16, 5)] {
            let torus_word = BraidWord::pi(1, q - 1, q).unwrap().rev().power(p);
            assert_eq!(
                alexander(&torus_word).unwrap(),
                torus_alexander(p, q as i64).unwrap(),
                "disagreement at ({}, {})",
                p,
                q
            );
        }
    }

    #[test]
    fn closure_component_counts() {
        assert_eq!(closure_components(&BraidWord::identity(3)), 3);
        for q in 2..=6usize {
            for p in 1..=12i64 {
                let torus_word = BraidWord::pi(1, q - 1, q).unwrap().rev().power(p);
                assert_eq!(
                    closure_components(&torus_word) as i64,
                    gcd(p, q as i64),
                    "components of torus word ({}, {})",
                    p,
                    q
                );
            }
        }
    }

    #[test]
    fn alexander_rejects_links_and_huge_words() {
        assert_eq!(
            alexander(&BraidWord::identity(3)),
            Err(Error::NotAKnot { components: 3 })
        );
        let long = w(2, &[1]).power(3001);
        assert!(matches!(alexander(&long), Err(Error::ResourceLimit(_))));
        assert!(alexander_with_cap(&w(2, &[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn alexander_is_symmetric_and_unit_at_one() {
        for word in [
            w(2, &[1, 1, 1]),
            w(3, &[1, -2, 1, -2]), // figure eight
            w(3, &[2, 1, 2, 1]),
        ] {
            let a = alexander(&word).unwrap();
            assert_eq!(a.reciprocal().normalize_alexander(), a);
            assert!(a.eval_at_one().abs() == 1);
        }
    }

    #[test]
    fn figure_eight_alexander() {
        let fig8 = alexander(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(fig8, poly(0, &[1, -3, 1]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn alexander_is_conjugation_invariant(
            word_ints in prop::collection::vec((1..4i32, prop::bool::ANY), 1..14),
            conj_ints in prop::collection::vec((1..4i32, prop::bool::ANY), 0..10),
        ) {
            let ints: Vec<i32> = word_ints.iter().map(|&(i, p)| if p { i } else { -i }).collect();
            let word = BraidWord::from_ints(4, &ints).unwrap();
            prop_assume!(closure_components(&word) == 1);
            let c_ints: Vec<i32> = conj_ints.iter().map(|&(i, p)| if p { i } else { -i }).collect();
            let conj = BraidWord::from_ints(4, &c_ints).unwrap();
            prop_assert_eq!(
                alexander(&word.conjugate_by(&conj).unwrap()).unwrap(),
                alexander(&word).unwrap()
            );
        }

        #[test]
        fn alexander_is_markov_stable(
            word_ints in prop::collection::vec((1..4i32, prop::bool::ANY), 1..12),
            positive in prop::bool::ANY,
        ) {
            let ints: Vec<i32> = word_ints.iter().map(|&(i, p)| if p { i } else { -i }).collect();
            let word = BraidWord::from_ints(4, &ints).unwrap();
            prop_assume!(closure_components(&word) == 1);
            let stabilizer = if positive { 4 } else { -4 };
            let mut wider = ints.clone();
            wider.push(stabilizer);
            let stabilized = BraidWord::from_ints(5, &wider).unwrap();
            prop_assert_eq!(alexander(&stabilized).unwrap(), alexander(&word).unwrap());
        }
    }

    #[test]
    fn burau_agrees_with_garside_on_equality() {
        // matrices of equal words coincide; a cheap cross-check between the
        // two independent pipelines
        let a = w(4, &[1, 2, 3, 1, 2, 1]);
        let b = garside::to_normal_form(&a).to_word();
        assert!(garside::equals(&a, &b).unwrap());
        assert_eq!(reduced_burau(&a).unwrap(), reduced_burau(&b).unwrap());
    }
}
