//! Small subset-enumeration helpers shared by the search routines.

/// Lexicographic k-combinations of the given bit positions, as masks.
pub(crate) struct Combinations<'a> {
    positions: &'a [usize],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    pub(crate) fn new(positions: &'a [usize], k: usize) -> Self {
        Combinations {
            positions,
            idx: (0..k).collect(),
            done: k > positions.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self
            .idx
            .iter()
            .fold(0u64, |m, &i| m | (1 << self.positions[i]));
        // advance to the next combination
        let k = self.idx.len();
        let n = self.positions.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] != i + n - k {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// All masks over `positions`, in increasing cardinality then lexicographic
/// position order.
pub(crate) fn masks_by_size(positions: &[usize]) -> impl Iterator<Item = u64> + '_ {
    (0..=positions.len()).flat_map(move |k| Combinations::new(positions, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_of_three() {
        let pos = [0usize, 2, 5];
        let got: Vec<u64> = Combinations::new(&pos, 2).collect();
        assert_eq!(got, vec![0b000101, 0b100001, 0b100100]);
        assert_eq!(Combinations::new(&pos, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_by_size(&pos).count(), 8);
    }
}
