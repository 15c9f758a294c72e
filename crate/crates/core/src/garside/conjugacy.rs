//! Budgeted conjugacy decision: cycling and decycling to super summit
//! representatives, then a breadth-first orbit search over conjugations by
//! permutation braids within the summit level.
//!
//! The search is complete but worst-case exponential; it exists as a
//! cross-check for claims that normally come with an explicit conjugator.

use std::collections::{HashSet, VecDeque};

use crate::braid::BraidWord;
use crate::error::Error;
use crate::perm::Permutation;

use super::{
    equals, is_conjugate_by, normalize_braid_factors, to_normal_form, NormalForm,
    PermutationBraid,
};

/// Work budget: each candidate conjugate examined by the orbit search counts
/// as one node.
pub const DEFAULT_CONJUGACY_BUDGET: u64 = 100_000;

/// Outcome of [`are_conjugate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjugacy {
    /// A conjugator `c` with `c^-1 w1 c = w2` was found and re-checked.
    Conjugate { witness: BraidWord },
    NotConjugate,
    /// The node budget ran out before the orbit was exhausted.
    Inconclusive { explored: u64 },
}

/// One cycling step: conjugate away the first factor. Never decreases `inf`.
fn cycle(nf: &NormalForm) -> (NormalForm, BraidWord) {
    let first = nf.factors()[0].clone();
    let conjugator = if nf.inf().rem_euclid(2) == 1 {
        first.twisted()
    } else {
        first
    };
    let mut factors: Vec<PermutationBraid> = nf.factors()[1..].to_vec();
    factors.push(conjugator.clone());
    let next = normalize_braid_factors(nf.strands(), nf.inf(), factors);
    (next, conjugator.to_word())
}

/// One decycling step: conjugate the last factor to the front. Never
/// increases `sup`.
fn decycle(nf: &NormalForm) -> (NormalForm, BraidWord) {
    let last = nf.factors()[nf.factors().len() - 1].clone();
    let moved = if nf.inf().rem_euclid(2) == 1 {
        last.twisted()
    } else {
        last.clone()
    };
    let mut factors = vec![moved];
    factors.extend_from_slice(&nf.factors()[..nf.factors().len() - 1]);
    let next = normalize_braid_factors(nf.strands(), nf.inf(), factors);
    (next, last.to_word().invert())
}

/// Cycles and decycles to a super summit representative, returning it with
/// the conjugator that reaches it.
fn super_summit(word: &BraidWord) -> (NormalForm, BraidWord) {
    let mut nf = to_normal_form(word);
    let mut conjugator = BraidWord::identity(word.strands());

    loop {
        let before = (nf.inf(), nf.sup());

        let mut seen: HashSet<NormalForm> = HashSet::new();
        while !nf.factors().is_empty() && seen.insert(nf.clone()) {
            let old_inf = nf.inf();
            let (next, c) = cycle(&nf);
            assert!(next.inf() >= old_inf, "cycling must not decrease inf");
            if next.inf() > old_inf {
                seen.clear();
            }
            conjugator = conjugator.concat(&c).expect("same strand count");
            nf = next;
        }

        let mut seen: HashSet<NormalForm> = HashSet::new();
        while !nf.factors().is_empty() && seen.insert(nf.clone()) {
            let old_sup = nf.sup();
            let (next, c) = decycle(&nf);
            assert!(next.sup() <= old_sup, "decycling must not increase sup");
            if next.sup() < old_sup {
                seen.clear();
            }
            conjugator = conjugator.concat(&c).expect("same strand count");
            nf = next;
        }

        if (nf.inf(), nf.sup()) == before {
            return (nf, conjugator);
        }
    }
}

/// Advances `images` to the next permutation in lexicographic order,
/// returning false after the last one.
fn next_permutation(images: &mut [usize]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| images[i] < images[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
    images.swap(i, j);
    images[i + 1..].reverse();
    true
}

/// Decides conjugacy of `w1` and `w2` in `B_q` within a work budget.
///
/// Invariant screens (exponent sum, permutation cycle type) run first, then
/// both words are carried to super summit representatives and the orbit of
/// the first is searched by conjugating with permutation braids, discarding
/// conjugates that leave the summit level.
pub fn are_conjugate(w1: &BraidWord, w2: &BraidWord, budget: u64) -> Result<Conjugacy, Error> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch {
            left: w1.strands(),
            right: w2.strands(),
        });
    }
    if equals(w1, w2)? {
        return Ok(Conjugacy::Conjugate {
            witness: BraidWord::identity(w1.strands()),
        });
    }
    if w1.exponent_sum() != w2.exponent_sum() {
        return Ok(Conjugacy::NotConjugate);
    }
    if w1.permutation().cycle_type() != w2.permutation().cycle_type() {
        return Ok(Conjugacy::NotConjugate);
    }

    let n = w1.strands();
    let (target_nf, to_target) = super_summit(w2);
    let (start_nf, to_start) = super_summit(w1);
    let summit = (start_nf.inf(), start_nf.sup());
    if summit != (target_nf.inf(), target_nf.sup()) {
        return Ok(Conjugacy::NotConjugate);
    }

    let finish = |path: BraidWord| -> Result<Conjugacy, Error> {
        let witness = to_start
            .concat(&path)?
            .concat(&to_target.invert())?
            .free_reduce();
        assert!(
            is_conjugate_by(w1, w2, &witness)?,
            "orbit search produced an invalid witness"
        );
        Ok(Conjugacy::Conjugate { witness })
    };

    if start_nf == target_nf {
        return finish(BraidWord::identity(n));
    }

    let mut explored: u64 = 0;
    let mut visited: HashSet<NormalForm> = HashSet::new();
    visited.insert(start_nf.clone());
    let mut queue: VecDeque<(NormalForm, BraidWord)> = VecDeque::new();
    queue.push_back((start_nf, BraidWord::identity(n)));

    while let Some((node, path)) = queue.pop_front() {
        let node_word = node.to_word();
        let mut images: Vec<usize> = (0..n).collect();
        while next_permutation(&mut images) {
            if explored >= budget {
                return Ok(Conjugacy::Inconclusive { explored });
            }
            explored += 1;

            let simple = PermutationBraid::from_permutation(
                Permutation::from_images(images.clone()).expect("valid by construction"),
            );
            let simple_word = simple.to_word();
            let candidate = to_normal_form(&node_word.conjugate_by(&simple_word)?);
            if (candidate.inf(), candidate.sup()) != summit {
                continue;
            }
            let step_path = path.concat(&simple_word)?;
            if candidate == target_nf {
                return finish(step_path);
            }
            if visited.insert(candidate.clone()) {
                queue.push_back((candidate, step_path));
            }
        }
    }

    Ok(Conjugacy::NotConjugate)
}
