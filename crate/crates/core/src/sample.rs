//! Random ideals with a prescribed Hilbert-Samuel sequence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::CatalogError;
use crate::forms::BinaryForm;
use crate::ideal::{form_to_row, principal_component, row_to_form, GradedIdeal};
use crate::linalg::{int, RowBasis};
use crate::sequence::HsSequence;

pub const SAMPLE_RETRIES: usize = 64;

fn random_linear(rng: &mut ChaCha8Rng) -> BinaryForm {
    loop {
        let (a, b) = (rng.random_range(-3..=3), rng.random_range(-3..=3));
        if a != 0 || b != 0 {
            return BinaryForm::linear(int(a), int(b)).normalized();
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, degree: usize) -> BinaryForm {
    loop {
        let coeffs: Vec<i64> = (0..=degree).map(|_| rng.random_range(-5..=5)).collect();
        let f = BinaryForm::from_integers(&coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn product(forms: &[BinaryForm]) -> BinaryForm {
    forms
        .iter()
        .fold(BinaryForm::one(), |acc, f| acc.multiply(f))
}

/// Degrees `d` where `I_d` must be `(g)_d` with `deg g = t_d`: inside runs,
/// and wherever `x I_(d-1) + y I_(d-1)` would generically exceed the target
/// rank. Factors form a divisibility chain, each later one a product of a
/// subset of the earlier one's linear factors.
fn forced_factors(seq: &HsSequence, rng: &mut ChaCha8Rng) -> Vec<Option<BinaryForm>> {
    let e = seq.entries();
    let n = seq.deviation_index();
    let rank = |d: usize| d + 1 - e[d];
    let forced = |d: usize| {
        let in_run = (d > n && e[d - 1] == e[d]) || (d + 1 < e.len() && e[d + 1] == e[d]);
        in_run || (d > n && 2 * rank(d - 1) > rank(d))
    };
    let mut linear: Vec<BinaryForm> = Vec::new();
    let mut out = vec![None; e.len()];
    for d in n..e.len() {
        if !forced(d) {
            continue;
        }
        if linear.is_empty() {
            linear = (0..e[d]).map(|_| random_linear(rng)).collect();
        } else if linear.len() > e[d] {
            linear.shuffle(rng);
            linear.truncate(e[d]);
        }
        out[d] = Some(product(&linear));
    }
    out
}

/// One attempt; `None` when some degree overshoots its target rank.
fn attempt(seq: &HsSequence, rng: &mut ChaCha8Rng) -> Option<GradedIdeal> {
    let e = seq.entries();
    let top = e.len();
    let factors = forced_factors(seq, rng);
    let mut generators = Vec::new();
    let mut previous: Vec<BinaryForm> = Vec::new();
    for d in seq.deviation_index()..top {
        let target = d + 1 - e[d];
        let shifted = previous
            .iter()
            .flat_map(|f| [f.multiply(&BinaryForm::x()), f.multiply(&BinaryForm::y())]);
        let mut span =
            RowBasis::from_rows(d + 1, shifted.map(|f| form_to_row(&f))).expect("uniform rows");
        if span.rank() > target {
            return None;
        }
        let add = |f: BinaryForm, span: &mut RowBasis, generators: &mut Vec<BinaryForm>| {
            let row = form_to_row(&f);
            if !span.contains(&row).expect("uniform rows") {
                *span = span.extend([row]).expect("uniform rows");
                generators.push(f);
            }
        };
        if let Some(g) = &factors[d] {
            if !span
                .is_subspace_of(&principal_component(g, d))
                .expect("same degree")
            {
                return None;
            }
            for m in BinaryForm::monomials(d - g.degree()) {
                add(m.multiply(g), &mut span, &mut generators);
            }
        } else {
            let next = factors[d..].iter().flatten().next().cloned();
            let h = next.unwrap_or_else(BinaryForm::one);
            let mut tries = 0;
            while span.rank() < target {
                tries += 1;
                if tries > 16 * (d + 1) {
                    return None;
                }
                let f = random_form(rng, d - h.degree()).multiply(&h);
                add(f, &mut span, &mut generators);
            }
        }
        if span.rank() != target {
            return None;
        }
        previous = span.rows().iter().map(|r| row_to_form(r)).collect();
    }
    let ideal = GradedIdeal::new(generators, Some(top)).ok()?;
    (ideal.hilbert_samuel().ok()? == e).then_some(ideal)
}

/// A pseudo-random ideal whose Hilbert-Samuel sequence is `seq`, determined
/// by `seed`. Every returned ideal has been re-checked.
pub fn sample_ideal(seq: &HsSequence, seed: u64) -> Result<GradedIdeal, CatalogError> {
    sample_ideal_with_retries(seq, seed, SAMPLE_RETRIES)
}

/// [`sample_ideal`] with an explicit attempt budget.
pub fn sample_ideal_with_retries(
    seq: &HsSequence,
    seed: u64,
    retries: usize,
) -> Result<GradedIdeal, CatalogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        if let Some(ideal) = attempt(seq, &mut rng) {
            return Ok(ideal);
        }
    }
    Err(CatalogError::SamplingFailed {
        sequence: seq.clone(),
        retries,
    })
}
