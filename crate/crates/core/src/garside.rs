//! Garside left normal form for `B_q` and the equality decision built on it.
//!
//! Elements are written `D^inf A_1 .. A_len` where `D` is the positive half
//! twist and the `A_j` are permutation braids with every adjacent pair
//! left-weighted. The form is canonical: two words represent the same group
//! element exactly when their normal forms are identical.
//!
//! Permutation braids are stored as bare permutations and multiplied
//! combinatorially; letter strings only appear at the word boundary.

mod conjugacy;

pub use conjugacy::{are_conjugate, Conjugacy, DEFAULT_CONJUGACY_BUDGET};

use serde::{Deserialize, Serialize};

use crate::braid::{BraidLetter, BraidWord};
use crate::error::Error;
use crate::perm::Permutation;

/// A positive braid in which any two strands cross at most once, identified
/// with its strand permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationBraid {
    perm: Permutation,
}

impl PermutationBraid {
    pub fn identity(strands: usize) -> Self {
        Self {
            perm: Permutation::identity(strands),
        }
    }

    /// The half twist; its permutation reverses all strands.
    pub fn delta(strands: usize) -> Self {
        Self {
            perm: Permutation::reversal(strands),
        }
    }

    pub fn generator(strands: usize, index: usize) -> Self {
        Self {
            perm: Permutation::adjacent_transposition(strands, index - 1),
        }
    }

    pub fn from_permutation(perm: Permutation) -> Self {
        Self { perm }
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn strands(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        self.perm == Permutation::reversal(self.strands())
    }

    /// Crossing count.
    pub fn len(&self) -> usize {
        self.perm.inversion_count()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// True when `s_i` is a left divisor, i.e. the braid starts with a
    /// crossing of strands at positions `i`, `i+1`.
    pub fn starts_with(&self, index: usize) -> bool {
        self.perm.apply(index - 1) > self.perm.apply(index)
    }

    /// True when `s_i` is a right divisor.
    pub fn finishes_with(&self, index: usize) -> bool {
        let inv = self.perm.inverse();
        inv.apply(index - 1) > inv.apply(index)
    }

    /// Conjugation by the half twist: `D^-1 A D`, still a permutation braid.
    pub fn twisted(&self) -> Self {
        let omega = Permutation::reversal(self.strands());
        Self {
            perm: omega.then(&self.perm).then(&omega),
        }
    }

    /// A positive word representing the braid, produced by bubble sort.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands();
        let mut images = self.perm.images().to_vec();
        let mut letters = Vec::with_capacity(self.len());
        while let Some(g) = (0..n - 1).find(|&g| images[g] > images[g + 1]) {
            letters.push(BraidLetter::positive(g + 1));
            images.swap(g, g + 1);
        }
        BraidWord::new(n, letters).expect("indices in range by construction")
    }
}

/// Left normal form `D^inf A_1 .. A_len`; no factor is trivial or the half
/// twist, and every adjacent factor pair is left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NormalFormRepr", into = "NormalFormRepr")]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<PermutationBraid>,
}

/// JSON shape: `{"strands": q, "inf": k, "factors": [[1-indexed images],..]}`.
#[derive(Serialize, Deserialize)]
struct NormalFormRepr {
    strands: usize,
    inf: i64,
    factors: Vec<Vec<usize>>,
}

impl TryFrom<NormalFormRepr> for NormalForm {
    type Error = Error;

    fn try_from(repr: NormalFormRepr) -> Result<Self, Error> {
        let mut factors = Vec::with_capacity(repr.factors.len());
        for images in &repr.factors {
            if images.len() != repr.strands {
                return Err(Error::InvalidParameter(format!(
                    "factor has {} entries, expected {}",
                    images.len(),
                    repr.strands
                )));
            }
            factors.push(PermutationBraid::from_permutation(
                Permutation::from_images_one_indexed(images)?,
            ));
        }
        Ok(Self {
            strands: repr.strands,
            inf: repr.inf,
            factors,
        })
    }
}

impl From<NormalForm> for NormalFormRepr {
    fn from(nf: NormalForm) -> Self {
        Self {
            strands: nf.strands,
            inf: nf.inf,
            factors: nf
                .factors
                .iter()
                .map(|f| f.permutation().images_one_indexed())
                .collect(),
        }
    }
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of the half twist in front.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// Canonical length, the number of non-trivial factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_identity_element(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Re-expands to a braid word `D^inf A_1 .. A_len`.
    pub fn to_word(&self) -> BraidWord {
        let delta = BraidWord::half_twist(self.strands);
        let mut out = delta.power(self.inf);
        for factor in &self.factors {
            out = out
                .concat(&factor.to_word())
                .expect("strand counts agree by construction");
        }
        out
    }

    /// Checks the structural invariants: no trivial or half-twist factor and
    /// every adjacent pair left-weighted.
    pub fn is_left_weighted(&self) -> bool {
        if self
            .factors
            .iter()
            .any(|f| f.is_identity() || f.is_delta())
        {
            return false;
        }
        self.factors
            .windows(2)
            .all(|pair| pair_is_left_weighted(&pair[0], &pair[1]))
    }
}

/// True when every starting generator of `b` finishes `a`.
pub fn pair_is_left_weighted(a: &PermutationBraid, b: &PermutationBraid) -> bool {
    let n = a.strands();
    (1..n).all(|i| !b.starts_with(i) || a.finishes_with(i))
}

/// Slides crossings from `b` to `a` until the pair is left-weighted, keeping
/// the product fixed. Returns true when anything moved.
fn left_weight_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut a_inv = a.inverse();
    let mut moved_any = false;
    loop {
        let mut moved = false;
        for g in 0..n - 1 {
            // g indexes the 0-based generator: positions/values g, g+1
            if b.images()[g] > b.images()[g + 1] && a_inv.images()[g] < a_inv.images()[g + 1] {
                // a <- a * s_g (swap values), b <- s_g^-1 * b (swap entries)
                let pos_low = a_inv.images()[g];
                let pos_high = a_inv.images()[g + 1];
                a.images_mut()[pos_low] = g + 1;
                a.images_mut()[pos_high] = g;
                a_inv.images_mut().swap(g, g + 1);
                b.images_mut().swap(g, g + 1);
                moved = true;
                moved_any = true;
            }
        }
        if !moved {
            break;
        }
    }
    moved_any
}

/// Rewrites `D^delta_power F_1 .. F_m` (arbitrary permutation-braid factors)
/// into left normal form.
fn normalize_factors(
    strands: usize,
    mut delta_power: i64,
    factors: Vec<PermutationBraid>,
) -> NormalForm {
    let omega = Permutation::reversal(strands);
    let mut perms: Vec<Permutation> = factors
        .into_iter()
        .filter(|f| !f.is_identity())
        .map(|f| f.perm.clone())
        .collect();

    loop {
        let mut changed = false;

        // extract half twists, twisting everything to their left
        let mut idx = 0;
        while idx < perms.len() {
            if perms[idx] == omega {
                for p in perms.iter_mut().take(idx) {
                    *p = omega.then(p).then(&omega);
                }
                perms.remove(idx);
                delta_power += 1;
                changed = true;
            } else {
                idx += 1;
            }
        }

        // left-weight adjacent pairs, dropping factors that empty out
        let mut j = 0;
        while j + 1 < perms.len() {
            let (left, right) = perms.split_at_mut(j + 1);
            let a = &mut left[j];
            let b = &mut right[0];
            if left_weight_pair(a, b) {
                changed = true;
                if b.is_identity() {
                    perms.remove(j + 1);
                    continue;
                }
            }
            j += 1;
        }

        if !changed {
            break;
        }
    }

    NormalForm {
        strands,
        inf: delta_power,
        factors: perms
            .into_iter()
            .map(PermutationBraid::from_permutation)
            .collect(),
    }
}

pub(crate) fn normalize_braid_factors(
    strands: usize,
    delta_power: i64,
    factors: Vec<PermutationBraid>,
) -> NormalForm {
    normalize_factors(strands, delta_power, factors)
}

/// Computes the left normal form of a braid word.
pub fn to_normal_form(word: &BraidWord) -> NormalForm {
    let n = word.strands();
    if n == 1 {
        return NormalForm::identity(1);
    }
    let omega = Permutation::reversal(n);

    // Convert the word into interleaved half-twist powers and positive
    // factors: s_i stays as it is (greedily packed into the open factor),
    // s_i^-1 becomes D^-1 * (D s_i^-1).
    enum Item {
        DeltaInverse,
        Factor(Permutation),
    }
    let mut items: Vec<Item> = Vec::new();
    let mut open: Option<(Permutation, Permutation)> = None; // factor and its inverse

    let flush = |open: &mut Option<(Permutation, Permutation)>, items: &mut Vec<Item>| {
        if let Some((p, _)) = open.take() {
            items.push(Item::Factor(p));
        }
    };

    for letter in word.letters() {
        let g = letter.index() - 1;
        if letter.sign() > 0 {
            let can_extend = match &open {
                Some((_, inv)) => inv.images()[g] < inv.images()[g + 1],
                None => false,
            };
            if can_extend {
                let (p, inv) = open.as_mut().unwrap();
                let pos_low = inv.images()[g];
                let pos_high = inv.images()[g + 1];
                p.images_mut()[pos_low] = g + 1;
                p.images_mut()[pos_high] = g;
                inv.images_mut().swap(g, g + 1);
            } else {
                flush(&mut open, &mut items);
                let p = Permutation::adjacent_transposition(n, g);
                open = Some((p.clone(), p));
            }
        } else {
            flush(&mut open, &mut items);
            items.push(Item::DeltaInverse);
            // D s_i^-1 as a permutation braid: first reverse, then swap values
            let tail = omega.then(&Permutation::adjacent_transposition(n, g));
            items.push(Item::Factor(tail));
        }
    }
    flush(&mut open, &mut items);

    // Push all half-twist powers to the front; a factor passing a power of D
    // on its right picks up one twist per parity.
    let mut delta_power: i64 = 0;
    let mut suffix: i64 = 0;
    let mut factors_rev: Vec<PermutationBraid> = Vec::new();
    for item in items.into_iter().rev() {
        match item {
            Item::DeltaInverse => {
                delta_power -= 1;
                suffix -= 1;
            }
            Item::Factor(p) => {
                let twisted = if suffix.rem_euclid(2) == 1 {
                    omega.then(&p).then(&omega)
                } else {
                    p
                };
                factors_rev.push(PermutationBraid::from_permutation(twisted));
            }
        }
    }
    factors_rev.reverse();

    normalize_factors(n, delta_power, factors_rev)
}

/// Decides whether two words represent the same element of `B_q`.
///
/// Exponent sum and permutation image are cheap necessary conditions and are
/// checked before normalizing.
pub fn equals(w1: &BraidWord, w2: &BraidWord) -> Result<bool, Error> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch {
            left: w1.strands(),
            right: w2.strands(),
        });
    }
    if w1.exponent_sum() != w2.exponent_sum() {
        return Ok(false);
    }
    if w1.permutation() != w2.permutation() {
        return Ok(false);
    }
    Ok(to_normal_form(w1) == to_normal_form(w2))
}

/// True when `c^-1 w1 c = w2`.
pub fn is_conjugate_by(w1: &BraidWord, w2: &BraidWord, c: &BraidWord) -> Result<bool, Error> {
    let conjugated = w1.conjugate_by(c)?;
    equals(&conjugated, w2)
}

/// The half-twist automorphism: replaces each `s_i` by `s_(q-i)`, preserving
/// signs and order. Agrees with conjugation by the half twist.
pub fn tau(word: &BraidWord) -> BraidWord {
    let n = word.strands();
    let letters = word.letters().iter().map(|l| l.mirrored(n)).collect();
    BraidWord::new(n, letters).expect("mirrored indices stay in range")
}

/// The full twist `(s_1 s_2 .. s_(q-1))^q`, generating the center of `B_q`
/// for `q >= 3`.
pub fn center_full_twist(strands: usize) -> Result<BraidWord, Error> {
    if strands < 3 {
        return Err(Error::InvalidParameter(format!(
            "center generator requires at least 3 strands, got {}",
            strands
        )));
    }
    Ok(BraidWord::pi(1, strands - 1, strands)?.power(strands as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(strands: usize, word: &[i32]) -> BraidWord {
        BraidWord::from_ints(strands, word).unwrap()
    }

    fn nf_of(strands: usize, word: &[i32]) -> NormalForm {
        to_normal_form(&w(strands, word))
    }

    #[test]
    fn empty_word_normalizes_to_identity() {
        let nf = to_normal_form(&BraidWord::identity(4));
        assert_eq!(nf, NormalForm::identity(4));
        assert!(nf.is_identity_element());
    }

    #[test]
    fn half_twist_normalizes_to_pure_delta() {
        for q in 3..=6 {
            let nf = to_normal_form(&BraidWord::half_twist(q));
            assert_eq!(nf.inf(), 1);
            assert!(nf.factors().is_empty());
        }
    }

    #[test]
    fn negative_generator_normal_form_matches_brute_force() {
        // Independent oracle: enumerate every factorization D^-1 * P with P a
        // permutation braid of B_3, deciding word equality through the Burau
        // representation (faithful on three strands).
        let target = w(3, &[-1]);
        let delta_inv = BraidWord::half_twist(3).invert();
        let mut matches = Vec::new();
        for images in [
            [0usize, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let p = PermutationBraid::from_permutation(
                Permutation::from_images(images.to_vec()).unwrap(),
            );
            let candidate = delta_inv.concat(&p.to_word()).unwrap();
            let lhs = crate::invariants::reduced_burau(&candidate).unwrap();
            let rhs = crate::invariants::reduced_burau(&target).unwrap();
            if lhs == rhs {
                matches.push(p);
            }
        }
        assert_eq!(matches.len(), 1, "factorization must be unique");
        // frozen oracle output: the factor is the braid with image list [3,1,2]
        assert_eq!(
            matches[0].permutation().images_one_indexed(),
            vec![3, 1, 2]
        );

        let nf = nf_of(3, &[-1]);
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors(), std::slice::from_ref(&matches[0]));
    }

    #[test]
    fn braid_relation_and_far_commutation() {
        assert!(equals(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(equals(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!equals(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(equals(&w(3, &[1, -1]), &BraidWord::identity(3)).unwrap());
    }

    #[test]
    fn torus_full_twist_two_spellings() {
        let q = 5;
        let descending = BraidWord::pi(1, 4, q).unwrap().rev().power(q as i64);
        let ascending = BraidWord::pi(1, 4, q).unwrap().power(q as i64);
        assert!(equals(&descending, &ascending).unwrap());
        let nf = to_normal_form(&descending);
        assert_eq!((nf.inf(), nf.canonical_length()), (2, 0));
    }

    #[test]
    fn equals_rejects_strand_mismatch() {
        assert_eq!(
            equals(&w(3, &[1]), &w(4, &[1])),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn conjugator_checks() {
        // identity conjugator reduces to equality
        let a = w(3, &[1, 2]);
        let b = w(3, &[2, 1]);
        let e = BraidWord::identity(3);
        assert!(!is_conjugate_by(&a, &b, &e).unwrap());
        assert!(is_conjugate_by(&a, &a, &e).unwrap());
        // s1 (s2 s1) = (s2 s1) s2 is the braid relation, so s2 = c^-1 s1 c
        assert!(is_conjugate_by(&w(3, &[1]), &w(3, &[2]), &w(3, &[2, 1])).unwrap());
    }

    #[test]
    fn full_twist_is_central() {
        let q = 4;
        let twist = center_full_twist(q).unwrap();
        for word in [w(q, &[1]), w(q, &[3, -2, 1]), w(q, &[2, 2, -3])] {
            let lhs = word.concat(&twist).unwrap();
            let rhs = twist.concat(&word).unwrap();
            assert!(equals(&lhs, &rhs).unwrap());
            assert!(is_conjugate_by(&twist, &twist, &word).unwrap());
        }
        assert!(center_full_twist(2).is_err());
        assert_eq!(center_full_twist(3).unwrap().len(), 6);
        for q in 3..=5 {
            let nf = to_normal_form(&center_full_twist(q).unwrap());
            assert_eq!((nf.inf(), nf.canonical_length()), (2, 0));
        }
    }

    #[test]
    fn full_twist_commutes_with_100_random_words() {
        let q = 5;
        let twist = center_full_twist(q).unwrap();
        let mut state = 0x00C0FFEEu64;
        for _ in 0..100 {
            let len = 1 + (state % 24) as usize;
            let ints: Vec<i32> = (0..len)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let index = (state >> 33) as i32 % (q as i32 - 1) + 1;
                    if state & 1 == 0 {
                        index
                    } else {
                        -index
                    }
                })
                .collect();
            let word = BraidWord::from_ints(q, &ints).unwrap();
            let lhs = word.concat(&twist).unwrap();
            let rhs = twist.concat(&word).unwrap();
            assert!(equals(&lhs, &rhs).unwrap());
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w(5, &[1])), w(5, &[4]));
        assert_eq!(tau(&w(5, &[2, -3])), w(5, &[3, -2]));
    }

    #[test]
    fn normal_form_json_shape() {
        let nf = nf_of(3, &[-1]);
        let json = serde_json::to_string(&nf).unwrap();
        assert_eq!(json, r#"{"strands":3,"inf":-1,"factors":[[3,1,2]]}"#);
        let back: NormalForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, nf);
        assert!(serde_json::from_str::<NormalForm>(
            r#"{"strands":3,"inf":0,"factors":[[1,1,2]]}"#
        )
        .is_err());
    }

    #[test]
    fn normal_form_word_roundtrip() {
        for word in [
            w(4, &[1, -2, 3, 3, -1, 2]),
            w(5, &[-4, -4, 2, 1, 3]),
            w(3, &[1, 1, 1, -2]),
        ] {
            let nf = to_normal_form(&word);
            assert!(nf.is_left_weighted());
            let reworded = nf.to_word();
            assert_eq!(to_normal_form(&reworded), nf);
            assert!(equals(&word, &reworded).unwrap());
        }
    }

    fn arb_word_pair(
        max_strands: usize,
        max_len: usize,
    ) -> impl Strategy<Value = (BraidWord, BraidWord)> {
        (2..=max_strands).prop_flat_map(move |n| {
            let gen = move || {
                prop::collection::vec(
                    (1..n as i32, prop::bool::ANY)
                        .prop_map(|(i, pos)| if pos { i } else { -i }),
                    0..=max_len,
                )
                .prop_map(move |ints| BraidWord::from_ints(n, &ints).unwrap())
            };
            (gen(), gen())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn free_reduction_preserves_the_element((word, _) in arb_word_pair(6, 30)) {
            prop_assert!(equals(&word, &word.free_reduce()).unwrap());
        }

        #[test]
        fn equals_agrees_with_burau_on_three_strands(
            u_ints in prop::collection::vec((1..3i32, prop::bool::ANY), 0..20),
            v_ints in prop::collection::vec((1..3i32, prop::bool::ANY), 0..20),
        ) {
            // the Burau representation is faithful on three strands, giving
            // an independent decision of the word problem to compare with
            let signed = |ints: &[(i32, bool)]| -> BraidWord {
                let ints: Vec<i32> = ints.iter().map(|&(i, p)| if p { i } else { -i }).collect();
                BraidWord::from_ints(3, &ints).unwrap()
            };
            let u = signed(&u_ints);
            let v = signed(&v_ints);
            let burau_equal = crate::invariants::reduced_burau(&u).unwrap()
                == crate::invariants::reduced_burau(&v).unwrap();
            prop_assert_eq!(equals(&u, &v).unwrap(), burau_equal);
        }

        #[test]
        fn word_times_inverse_is_identity((word, _) in arb_word_pair(6, 30)) {
            let product = word.concat(&word.invert()).unwrap();
            prop_assert!(to_normal_form(&product).is_identity_element());
        }

        #[test]
        fn produced_forms_are_left_weighted((word, _) in arb_word_pair(6, 30)) {
            prop_assert!(to_normal_form(&word).is_left_weighted());
        }

        #[test]
        fn tau_is_involution_and_delta_conjugation((word, _) in arb_word_pair(6, 25)) {
            prop_assert_eq!(tau(&tau(&word)), word.clone());
            let delta = BraidWord::half_twist(word.strands());
            prop_assert!(equals(&tau(&word), &word.conjugate_by(&delta).unwrap()).unwrap());
        }

        #[test]
        fn equality_is_an_equivalence((u, c) in arb_word_pair(5, 20)) {
            // reflexive, symmetric on a freely equal pair, transitive through
            // a relator-padded middle term
            prop_assert!(equals(&u, &u).unwrap());
            let padded = u.concat(&c).unwrap().concat(&c.invert()).unwrap();
            prop_assert!(equals(&u, &padded).unwrap());
            prop_assert!(equals(&padded, &u).unwrap());
            let relator = BraidWord::from_ints(u.strands(), &[1, -1]).unwrap();
            let triple = relator.concat(&padded).unwrap();
            prop_assert!(equals(&u, &triple).unwrap() && equals(&triple, &u).unwrap());
        }

        #[test]
        fn lemma_generator_slides_left((_, _) in arb_word_pair(2, 1), l in 1usize..4, extra in 0usize..3) {
            // s_t pi(l,s) = pi(l,s) s_(t-1) for l < t <= s, on enough strands
            let s = l + 1 + extra;
            let n = s + 2;
            for t in (l + 1)..=s {
                let pi = BraidWord::pi(l, s, n).unwrap();
                let lhs = BraidWord::generator(n, t).unwrap().concat(&pi).unwrap();
                let rhs = pi.concat(&BraidWord::generator(n, t - 1).unwrap()).unwrap();
                prop_assert!(equals(&lhs, &rhs).unwrap());
                // inverse variant: s_(t-1) pi^-1 = pi^-1 s_t
                let lhs_inv = BraidWord::generator(n, t - 1).unwrap().concat(&pi.invert()).unwrap();
                let rhs_inv = pi.invert().concat(&BraidWord::generator(n, t).unwrap()).unwrap();
                prop_assert!(equals(&lhs_inv, &rhs_inv).unwrap());
            }
        }
    }
}
