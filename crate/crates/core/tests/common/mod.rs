//! Reference implementations shared by the integration tests.
#![allow(dead_code)]

use gallai_core::signseq::SignSequence;
use gallai_core::z3::Z3;

/// `t ⪯ s` straight from the definition: try every increasing index tuple.
pub fn precedes_by_indices(t: &SignSequence, s: &SignSequence) -> bool {
    fn zeros(s: &[Z3]) -> usize {
        s.iter().filter(|&&z| z == Z3::ZERO).count()
    }
    fn go(t: &[Z3], s: &[Z3], from: usize, prev_end: usize) -> bool {
        let Some((&first, rest)) = t.split_first() else {
            return true;
        };
        (from..s.len()).any(|i| {
            s[i] == first && zeros(&s[prev_end..i]).is_multiple_of(2) && go(rest, s, i + 1, i + 1)
        })
    }
    go(t.symbols(), s.symbols(), 0, 0)
}

/// The symbols of `s` at the positions set in `mask`.
pub fn subsequence(s: &SignSequence, mask: u32) -> SignSequence {
    SignSequence::new(
        s.symbols()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &z)| z)
            .collect(),
    )
}

pub fn seqs_up_to(len: usize) -> impl Iterator<Item = SignSequence> {
    (0..=len).flat_map(SignSequence::all_of_length)
}
