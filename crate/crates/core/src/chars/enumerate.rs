use serde::Serialize;

use super::{CharacterTable, ClassFunction};

/// Number of multiplicity tuples `0 <= m_i <= dim_i` for sixteen linear
/// characters and one 4-dimensional one: `2^16 * 5`.
pub const TOTAL_TUPLES: u64 = (1 << 16) * 5;

/// Multiplicities of the irreducible characters in a subrepresentation of
/// the regular representation, in table row order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MultiplicityVector(Vec<u8>);

impl MultiplicityVector {
    /// Panics if any entry exceeds its bound.
    pub fn new(m: Vec<u8>, dims: &[i64]) -> Self {
        assert_eq!(m.len(), dims.len(), "multiplicity vector has wrong length");
        assert!(
            m.iter().zip(dims).all(|(&x, &d)| i64::from(x) <= d),
            "multiplicity exceeds the degree"
        );
        Self(m)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// Number of proper nonzero candidates: every tuple except the zero and
/// the full vector.
pub fn candidate_count(table: &CharacterTable) -> u64 {
    total_tuples(table) - 2
}

fn total_tuples(table: &CharacterTable) -> u64 {
    table.dims.iter().map(|&d| d as u64 + 1).product()
}

/// Lexicographic stream of `(m, sum_i m_i chi_i)` over the proper nonzero
/// multiplicity vectors. Candidate `k` is the `(k + 1)`-th tuple in
/// lexicographic order, so contiguous index ranges can be handed to
/// separate workers.
pub struct SubrepCandidates<'a> {
    table: &'a CharacterTable,
    next: u64,
    end: u64,
}

impl<'a> SubrepCandidates<'a> {
    pub fn new(table: &'a CharacterTable) -> Self {
        Self::range(table, 0..candidate_count(table))
    }

    /// Candidates with index in `range`, clamped to the valid range.
    pub fn range(table: &'a CharacterTable, range: std::ops::Range<u64>) -> Self {
        let count = candidate_count(table);
        Self {
            table,
            next: range.start.min(count),
            end: range.end.min(count),
        }
    }

    /// Multiplicity vector of candidate `index`.
    pub fn decode(table: &CharacterTable, index: u64) -> MultiplicityVector {
        let mut rank = index + 1;
        let mut m = vec![0u8; table.dims.len()];
        for (slot, &d) in m.iter_mut().zip(&table.dims).rev() {
            let radix = d as u64 + 1;
            *slot = (rank % radix) as u8;
            rank /= radix;
        }
        MultiplicityVector(m)
    }
}

impl Iterator for SubrepCandidates<'_> {
    type Item = (MultiplicityVector, ClassFunction);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let m = Self::decode(self.table, self.next);
        self.next += 1;
        let chi = self.table.combine(&m);
        Some((m, chi))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubrepCandidates<'_> {}
