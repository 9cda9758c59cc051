//! Group algebras from Cayley tables, and the tables used by the corpus.

use super::HopfData;
use crate::error::{Error, Result};
use crate::linalg::unit_vector;
use crate::scalar::{CyclotomicOrder, Scalar};

/// A multiplication table `table[i][j] = index of g_i·g_j` with element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g))
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        let e = self.identity()?;
        (0..self.order()).find(|&h| self.table[g][h] == e && self.table[h][g] == e)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The table of the opposite group, g·_op h = h·g.
    pub fn opposite(&self) -> GroupTable {
        let n = self.order();
        GroupTable {
            table: (0..n).map(|i| (0..n).map(|j| self.table[j][i]).collect()).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Checks closure, associativity, identity and inverses.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 || self.table.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if self.labels.len() != n {
            return Err(Error::NotAGroup("label count differs from order".into()));
        }
        if self.table.iter().flatten().any(|&k| k >= n) {
            return Err(Error::NotAGroup("not closed".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        if self.identity().is_none() {
            return Err(Error::NotAGroup("no identity element".into()));
        }
        for g in 0..n {
            if self.inverse(g).is_none() {
                return Err(Error::NotAGroup(format!("{} has no inverse", self.labels[g])));
            }
        }
        Ok(())
    }
}

/// The group algebra kG with Δg = g⊗g, ε(g) = 1, Sg = g⁻¹ and the triangular R = 1⊗1.
pub fn group_algebra(g: &GroupTable, order: CyclotomicOrder) -> Result<HopfData> {
    g.validate()?;
    let n = g.order();
    let one = Scalar::one();
    let mult = (0..n * n).map(|ij| vec![(g.mul(ij / n, ij % n), one.clone())]).collect();
    let comult = (0..n).map(|i| vec![(i, i, one.clone())]).collect();
    let e = g.identity().expect("validated");
    let antipode = (0..n).map(|i| vec![(g.inverse(i).expect("validated"), one.clone())]).collect();
    let mut r = vec![Scalar::zero(); n * n];
    r[e * n + e] = one.clone();
    HopfData::new(order, mult, comult, unit_vector(n, e), vec![one; n], antipode)?
        .with_labels(g.labels.clone())?
        .with_r_matrix(r)
}

pub fn cyclic_group_table(n: usize) -> GroupTable {
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    GroupTable { table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), labels }
}

/// How a product of permutations acts: `RightToLeft` means (fg)(x) = f(g(x)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionConvention {
    RightToLeft,
    LeftToRight,
}

/// S₃ on the basis e, (12), (13), (23), (123), (132).
pub fn symmetric3_table(convention: CompositionConvention) -> GroupTable {
    // images of 1, 2, 3
    let perms: [[usize; 3]; 6] = [[1, 2, 3], [2, 1, 3], [3, 2, 1], [1, 3, 2], [2, 3, 1], [3, 1, 2]];
    let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].map(String::from).to_vec();
    let compose = |f: &[usize; 3], g: &[usize; 3]| -> [usize; 3] {
        let mut out = [0; 3];
        for x in 0..3 {
            out[x] = match convention {
                CompositionConvention::RightToLeft => f[g[x] - 1],
                CompositionConvention::LeftToRight => g[f[x] - 1],
            };
        }
        out
    };
    let table = perms
        .iter()
        .map(|f| perms.iter().map(|g| perms.iter().position(|p| *p == compose(f, g)).unwrap()).collect())
        .collect();
    GroupTable { table, labels }
}

/// Dihedral group of order 8 on r^a s^b (index a + 4b) with s r = r⁻¹ s.
pub fn dihedral4_table() -> GroupTable {
    let labels = ["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"].map(String::from).to_vec();
    let mul = |x: usize, y: usize| {
        let (a, b, c, d) = (x % 4, x / 4, y % 4, y / 4);
        let rot = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
        rot + 4 * ((b + d) % 2)
    };
    GroupTable { table: (0..8).map(|x| (0..8).map(|y| mul(x, y)).collect()).collect(), labels }
}

/// Quaternion group on 1, −1, i, −i, j, −j, k, −k.
pub fn quaternion_table() -> GroupTable {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    // unit products (sign, unit) for units 1, i, j, k
    let units = |u: usize, v: usize| -> (bool, usize) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let mul = |x: usize, y: usize| {
        let (neg, u) = units(x / 2, y / 2);
        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
        2 * u + usize::from(sign)
    };
    GroupTable { table: (0..8).map(|x| (0..8).map(|y| mul(x, y)).collect()).collect(), labels }
}

/// G × K on index i·|K| + j.
pub fn direct_product_table(g: &GroupTable, k: &GroupTable) -> GroupTable {
    let (m, n) = (g.order(), k.order());
    let labels = (0..m * n).map(|x| format!("({},{})", g.labels[x / n], k.labels[x % n])).collect();
    let table =
        (0..m * n).map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + k.mul(x % n, y % n)).collect()).collect();
    GroupTable { table, labels }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_groups() {
        for t in [
            cyclic_group_table(6),
            symmetric3_table(CompositionConvention::RightToLeft),
            symmetric3_table(CompositionConvention::LeftToRight),
            dihedral4_table(),
            quaternion_table(),
            direct_product_table(&cyclic_group_table(2), &cyclic_group_table(2)),
        ] {
            t.validate().unwrap();
        }
    }

    #[test]
    fn composition_convention_pins_products() {
        let rl = symmetric3_table(CompositionConvention::RightToLeft);
        let lr = symmetric3_table(CompositionConvention::LeftToRight);
        let (a, b) = (rl.index_of("(12)").unwrap(), rl.index_of("(13)").unwrap());
        assert_eq!(rl.labels[rl.mul(a, b)], "(132)");
        assert_eq!(lr.labels[lr.mul(a, b)], "(123)");
        assert_eq!(lr, rl.opposite());
    }

    #[test]
    fn broken_table_is_rejected() {
        let mut t = cyclic_group_table(3);
        t.table[1][1] = 1;
        assert!(matches!(group_algebra(&t, CyclotomicOrder::RATIONALS), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion_table();
        let idx = |s| q.index_of(s).unwrap();
        assert_eq!(q.mul(idx("i"), idx("j")), idx("k"));
        assert_eq!(q.mul(idx("j"), idx("i")), idx("-k"));
        assert_eq!(q.mul(idx("i"), idx("i")), idx("-1"));
        assert_eq!(q.mul(idx("-i"), idx("-j")), idx("k"));
    }
}
