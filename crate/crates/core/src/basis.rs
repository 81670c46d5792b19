//! Basis labels for the four-dimensional space.
//!
//! Positions 1..4 carry two labellings: the qudit projection `m` of `|3/2, m>`
//! and the qubit pair `(m1, m2)` of `|m1 m2>`. Both are bijections onto
//! `{1, 2, 3, 4}`, so any 4×4 matrix can be read as either a single spin-3/2
//! operator or a two-qubit operator.

use std::fmt;

use crate::linalg::Matrix4;

/// A spin projection stored as twice its value, so `3/2` is `Half(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Half(pub i8);

impl Half {
    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// The two index maps, both in position order 1..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexMap {
    pub qudit_labels: [Half; 4],
    pub pair_labels: [(Half, Half); 4],
}

pub const INDEX_MAP: IndexMap = IndexMap {
    qudit_labels: [Half(3), Half(1), Half(-1), Half(-3)],
    pair_labels: [
        (Half(1), Half(1)),
        (Half(1), Half(-1)),
        (Half(-1), Half(1)),
        (Half(-1), Half(-1)),
    ],
};

impl IndexMap {
    /// Qudit projection at 1-based position `index`.
    pub fn qudit_label(&self, index: usize) -> Option<Half> {
        index
            .checked_sub(1)
            .and_then(|i| self.qudit_labels.get(i))
            .copied()
    }

    /// 1-based position of qudit projection `m`.
    pub fn qudit_index(&self, m: Half) -> Option<usize> {
        self.qudit_labels
            .iter()
            .position(|&l| l == m)
            .map(|i| i + 1)
    }

    pub fn pair_label(&self, index: usize) -> Option<(Half, Half)> {
        index
            .checked_sub(1)
            .and_then(|i| self.pair_labels.get(i))
            .copied()
    }

    pub fn pair_index(&self, pair: (Half, Half)) -> Option<usize> {
        self.pair_labels
            .iter()
            .position(|&l| l == pair)
            .map(|i| i + 1)
    }

    /// Qudit projection `m` → qubit pair `(m1, m2)` via the shared position.
    pub fn qudit_to_pair(&self, m: Half) -> Option<(Half, Half)> {
        self.qudit_index(m).and_then(|i| self.pair_label(i))
    }

    pub fn pair_to_qudit(&self, pair: (Half, Half)) -> Option<Half> {
        self.pair_index(pair).and_then(|i| self.qudit_label(i))
    }
}

/// The commuting diagonal operators `Jz`, `2 Jz1` and `2 Jz2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinOperators {
    pub jz: Matrix4,
    pub two_jz1: Matrix4,
    pub two_jz2: Matrix4,
}

impl SpinOperators {
    pub fn diagonals(&self) -> [[f64; 4]; 3] {
        let diag = |m: &Matrix4| [m.0[0][0].re, m.0[1][1].re, m.0[2][2].re, m.0[3][3].re];
        [diag(&self.jz), diag(&self.two_jz1), diag(&self.two_jz2)]
    }
}

/// Builds the three operators from the index map labels.
pub fn spin_operators() -> SpinOperators {
    let map = INDEX_MAP;
    let jz = map.qudit_labels.map(Half::value);
    let two_jz1 = map.pair_labels.map(|(m1, _)| 2.0 * m1.value());
    let two_jz2 = map.pair_labels.map(|(_, m2)| 2.0 * m2.value());
    SpinOperators {
        jz: Matrix4::from_real_diagonal(jz),
        two_jz1: Matrix4::from_real_diagonal(two_jz1),
        two_jz2: Matrix4::from_real_diagonal(two_jz2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::commutator;

    #[test]
    fn operator_diagonals() {
        let [jz, j1, j2] = spin_operators().diagonals();
        assert_eq!(jz, [1.5, 0.5, -0.5, -1.5]);
        assert_eq!(j1, [1.0, 1.0, -1.0, -1.0]);
        assert_eq!(j2, [1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn jz_element_relations() {
        // (Jz)_{3/2} = 3 (Jz)_{1/2} = -3 (Jz)_{-1/2} = -(Jz)_{-3/2} = 3/2
        let [jz, _, _] = spin_operators().diagonals();
        assert_eq!(jz[0], 1.5);
        assert_eq!(3.0 * jz[1], 1.5);
        assert_eq!(-3.0 * jz[2], 1.5);
        assert_eq!(-jz[3], 1.5);
    }

    #[test]
    fn operators_commute_exactly() {
        let ops = spin_operators();
        let pairs = [
            (ops.jz, ops.two_jz1),
            (ops.jz, ops.two_jz2),
            (ops.two_jz1, ops.two_jz2),
        ];
        for (a, b) in pairs {
            assert_eq!(commutator(&a, &b), Matrix4::zeros());
        }
    }

    #[test]
    fn maps_are_bijections() {
        let map = INDEX_MAP;
        for i in 1..=4 {
            let m = map.qudit_label(i).unwrap();
            assert_eq!(map.qudit_index(m), Some(i));
            let pair = map.pair_label(i).unwrap();
            assert_eq!(map.pair_index(pair), Some(i));
            assert_eq!(map.pair_to_qudit(map.qudit_to_pair(m).unwrap()), Some(m));
        }
        assert_eq!(map.qudit_label(0), None);
        assert_eq!(map.qudit_label(5), None);
        assert_eq!(map.qudit_index(Half(5)), None);
        assert_eq!(map.pair_index((Half(1), Half(3))), None);
    }

    #[test]
    fn label_display() {
        assert_eq!(Half(3).to_string(), "3/2");
        assert_eq!(Half(-1).to_string(), "-1/2");
        assert_eq!(Half(2).to_string(), "1");
    }
}
