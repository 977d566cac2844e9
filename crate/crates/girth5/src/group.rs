//! Finite abelian groups used as vertex-label domains.
//!
//! Elements are always the canonical codes `0..order`. For a cyclic group the
//! code is the residue itself; for an elementary abelian group `(Z_p)^m` the
//! code is the base-`p` digit encoding `sum p^i * c_i`, so for `p = 2` the
//! group operation is plain XOR.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    Cyclic(u64),
    ElemAbelian { p: u64, m: u32 },
}

impl Group {
    /// Elementary abelian groups of rank 1 collapse to the cyclic form so that
    /// structurally equal groups compare equal.
    pub fn elem_abelian(p: u64, m: u32) -> Group {
        assert!(m >= 1, "rank must be at least 1");
        if m == 1 {
            Group::Cyclic(p)
        } else {
            Group::ElemAbelian { p, m }
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            Group::Cyclic(n) => n,
            Group::ElemAbelian { p, m } => p.pow(m),
        }
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.order()
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.contains(a) && self.contains(b));
        match *self {
            Group::Cyclic(n) => (a + b) % n,
            Group::ElemAbelian { p, m } => {
                let mut out = 0;
                let mut scale = 1;
                let (mut x, mut y) = (a, b);
                for _ in 0..m {
                    out += ((x + y) % p) * scale;
                    x /= p;
                    y /= p;
                    scale *= p;
                }
                out
            }
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(self.contains(a));
        match *self {
            Group::Cyclic(n) => (n - a) % n,
            Group::ElemAbelian { p, m } => {
                let mut out = 0;
                let mut scale = 1;
                let mut x = a;
                for _ in 0..m {
                    out += ((p - x % p) % p) * scale;
                    x /= p;
                    scale *= p;
                }
                out
            }
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: Group) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.add(a, g.zero()), a);
            assert_eq!(g.add(a, g.neg(a)), 0);
            for b in 0..n {
                assert_eq!(g.add(a, b), g.add(b, a));
                for c in 0..n {
                    assert_eq!(g.add(g.add(a, b), c), g.add(a, g.add(b, c)));
                }
            }
        }
    }

    #[test]
    fn cyclic_axioms() {
        check_axioms(Group::Cyclic(12));
    }

    #[test]
    fn elem_abelian_axioms() {
        check_axioms(Group::elem_abelian(2, 4));
        check_axioms(Group::elem_abelian(3, 2));
    }

    #[test]
    fn xor_for_characteristic_two() {
        let g = Group::elem_abelian(2, 6);
        for a in 0..64 {
            for b in 0..64 {
                assert_eq!(g.add(a, b), a ^ b);
                assert_eq!(g.neg(a), a);
            }
        }
    }

    #[test]
    fn rank_one_collapses_to_cyclic() {
        assert_eq!(Group::elem_abelian(7, 1), Group::Cyclic(7));
    }
}
