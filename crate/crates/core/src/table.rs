//! Signed basis-product tables for the division algebras.
//!
//! A table is generated at compile time from the list of oriented unit
//! triples `(a, b, c)` meaning `e_a e_b = e_c` (and cyclic). Unit `0` is the
//! real identity and every imaginary unit squares to `-1`.

/// One entry of a basis product: `e_i e_j = sign * e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

/// The full `N x N` product table of the basis `{1, e_1, ..., e_{N-1}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisTable<const N: usize> {
    entries: [[BasisProduct; N]; N],
}

impl<const N: usize> BasisTable<N> {
    /// Generates the table from oriented triples. Slots not covered by any
    /// triple are left with sign `0`, which [`BasisTable::is_complete`]
    /// reports.
    pub const fn from_triples(triples: &[[usize; 3]]) -> Self {
        let mut entries = [[BasisProduct { sign: 0, index: 0 }; N]; N];
        let mut i = 0;
        while i < N {
            entries[0][i] = BasisProduct { sign: 1, index: i };
            entries[i][0] = BasisProduct { sign: 1, index: i };
            if i > 0 {
                entries[i][i] = BasisProduct { sign: -1, index: 0 };
            }
            i += 1;
        }
        let mut t = 0;
        while t < triples.len() {
            let [a, b, c] = triples[t];
            // e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b and the reversed
            // orders pick up a minus sign.
            entries[a][b] = BasisProduct { sign: 1, index: c };
            entries[b][c] = BasisProduct { sign: 1, index: a };
            entries[c][a] = BasisProduct { sign: 1, index: b };
            entries[b][a] = BasisProduct { sign: -1, index: c };
            entries[c][b] = BasisProduct { sign: -1, index: a };
            entries[a][c] = BasisProduct { sign: -1, index: b };
            t += 1;
        }
        BasisTable { entries }
    }

    pub const fn product(&self, i: usize, j: usize) -> BasisProduct {
        self.entries[i][j]
    }

    /// True when every pair of basis units has a defined product.
    pub fn is_complete(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.sign != 0)
    }

    /// Sign of `e_k` in `e_i e_j`, or 0 when the product lies along another
    /// unit.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> i8 {
        let p = self.entries[i][j];
        if p.index == k {
            p.sign
        } else {
            0
        }
    }
}

/// Quaternion units: `e_1 e_2 = e_3` and cyclic.
pub const QUATERNION_TRIPLES: [[usize; 3]; 1] = [[1, 2, 3]];

/// Octonion units: the seven associative cycles on which the structure
/// constants equal `+1`.
pub const OCTONION_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

pub const QUATERNION_TABLE: BasisTable<4> = BasisTable::from_triples(&QUATERNION_TRIPLES);
pub const OCTONION_TABLE: BasisTable<8> = BasisTable::from_triples(&OCTONION_TRIPLES);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_complete() {
        assert!(QUATERNION_TABLE.is_complete());
        assert!(OCTONION_TABLE.is_complete());
    }

    #[test]
    fn octonion_table_is_antisymmetric_off_diagonal() {
        for i in 1..8 {
            for j in 1..8 {
                if i == j {
                    continue;
                }
                let a = OCTONION_TABLE.product(i, j);
                let b = OCTONION_TABLE.product(j, i);
                assert_eq!(a.index, b.index);
                assert_eq!(a.sign, -b.sign);
                assert!(a.index != 0 && a.index != i && a.index != j);
            }
        }
    }

    #[test]
    fn quaternion_table_matches_hamilton_rules() {
        // e1 e2 = e3 = -e2 e1, e2 e3 = e1, e3 e1 = e2
        assert_eq!(QUATERNION_TABLE.product(1, 2), BasisProduct { sign: 1, index: 3 });
        assert_eq!(QUATERNION_TABLE.product(2, 1), BasisProduct { sign: -1, index: 3 });
        assert_eq!(QUATERNION_TABLE.product(2, 3), BasisProduct { sign: 1, index: 1 });
        assert_eq!(QUATERNION_TABLE.product(3, 1), BasisProduct { sign: 1, index: 2 });
        assert_eq!(QUATERNION_TABLE.product(3, 3), BasisProduct { sign: -1, index: 0 });
    }

    #[test]
    fn octonion_table_restricts_to_quaternion_table() {
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(OCTONION_TABLE.product(i, j), QUATERNION_TABLE.product(i, j));
            }
        }
    }
}
