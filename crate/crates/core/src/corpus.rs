//! The bundled example algebras and their lattices of coideal subalgebras
//! coming from grouplikes.

use std::collections::BTreeSet;

use crate::coideal::{coideal_closure, invariants_of, CoidealContext};
use crate::error::Result;
use crate::hopf::{
    cyclic_group_table, dihedral4_table, drinfeld_double, group_algebra, grouplikes, quaternion_table,
    symmetric3_table, CompositionConvention, GroupTable, HopfData,
};
use crate::linalg::{Subspace, Vector};
use crate::scalar::CyclotomicOrder;

/// Names of the bundled algebras, in a fixed order.
pub const NAMES: [&str; 9] = ["z2", "z3", "z6", "s3", "s3-dual", "d4", "q8", "double-z2", "double-s3"];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub hopf: HopfData,
    /// The underlying group for group algebras.
    pub group: Option<GroupTable>,
}

impl CorpusEntry {
    pub fn file_name(&self) -> String {
        format!("{}.hopf.json", self.name)
    }
}

fn order(n: u32) -> CyclotomicOrder {
    CyclotomicOrder::new(n).expect("positive order")
}

/// Builds one bundled algebra by name.
pub fn build(name: &str) -> Result<Option<CorpusEntry>> {
    let s3 = || symmetric3_table(CompositionConvention::RightToLeft);
    let group = |name: &'static str, table: GroupTable, n: u32| -> Result<CorpusEntry> {
        Ok(CorpusEntry { name, hopf: group_algebra(&table, order(n))?, group: Some(table) })
    };
    let entry = match name {
        "z2" => group("z2", cyclic_group_table(2), 1)?,
        "z3" => group("z3", cyclic_group_table(3), 3)?,
        "z6" => group("z6", cyclic_group_table(6), 6)?,
        "s3" => group("s3", s3(), 3)?,
        "d4" => group("d4", dihedral4_table(), 4)?,
        "q8" => group("q8", quaternion_table(), 4)?,
        "s3-dual" => CorpusEntry { name: "s3-dual", hopf: group_algebra(&s3(), order(3))?.dual(), group: None },
        "double-z2" => CorpusEntry {
            name: "double-z2",
            hopf: drinfeld_double(&group_algebra(&cyclic_group_table(2), order(1))?)?.0,
            group: None,
        },
        "double-s3" => {
            CorpusEntry { name: "double-s3", hopf: drinfeld_double(&group_algebra(&s3(), order(3))?)?.0, group: None }
        }
        _ => return Ok(None),
    };
    Ok(Some(entry))
}

/// Every bundled algebra.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    NAMES.iter().map(|n| build(n).map(|e| e.expect("known name"))).collect()
}

/// Subgroups of the group of grouplikes of `x`, as sorted index sets into
/// `grouplikes(x)`.
pub fn grouplike_subgroups(x: &HopfData) -> Result<(Vec<Vector>, Vec<Vec<usize>>)> {
    let g = grouplikes(x)?;
    let n = g.len();
    let one = g.iter().position(|v| v.as_slice() == x.unit()).expect("1 is grouplike");
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let p = x.mul(&g[a], &g[b]);
                    g.iter().position(|v| *v == p).expect("grouplikes are closed")
                })
                .collect()
        })
        .collect();
    let close = |start: &BTreeSet<usize>| {
        let mut set = start.clone();
        loop {
            let products: Vec<usize> = set.iter().flat_map(|a| set.iter().map(|b| table[*a][*b])).collect();
            let before = set.len();
            set.extend(products);
            if set.len() == before {
                return set;
            }
        }
    };
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier = vec![BTreeSet::from([one])];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for a in 0..n {
            if s.contains(&a) {
                continue;
            }
            let mut bigger = s.clone();
            bigger.insert(a);
            let c = close(&bigger);
            if found.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    let mut subgroups: Vec<Vec<usize>> = found.into_iter().map(|s| s.into_iter().collect()).collect();
    subgroups.sort_by_key(|s| (s.len(), s.clone()));
    Ok((g, subgroups))
}

#[derive(Clone, Debug)]
pub struct LatticeMember {
    pub description: String,
    pub context: CoidealContext,
}

fn describe(x: &HopfData, elements: &[Vector], subgroup: &[usize]) -> String {
    let names: Vec<String> = subgroup
        .iter()
        .map(|i| {
            let v = &elements[*i];
            match v.iter().filter(|s| !s.is_zero()).count() {
                1 => x.label(v.iter().position(|s| !s.is_zero()).expect("nonzero")),
                _ => format!("g{i}"),
            }
        })
        .collect();
    names.join(",")
}

/// Closures kK for subgroups K of G(H) together with invariants H^{kK} for
/// subgroups K of G(H*), without repetition.
pub fn coideal_lattice(h: &HopfData) -> Result<Vec<LatticeMember>> {
    let mut out: Vec<LatticeMember> = Vec::new();
    let mut push = |description: String, context: CoidealContext| {
        if !out.iter().any(|m| m.context.n == context.n) {
            out.push(LatticeMember { description, context });
        }
    };
    let (elements, subgroups) = grouplike_subgroups(h)?;
    for s in &subgroups {
        let gens: Vec<Vector> = s.iter().map(|i| elements[*i].clone()).collect();
        push(format!("k{{{}}}", describe(h, &elements, s)), coideal_closure(h, &gens)?);
    }
    let dual = h.dual_ref();
    let (elements, subgroups) = grouplike_subgroups(dual)?;
    for s in &subgroups {
        let b = Subspace::span(h.dim(), s.iter().map(|i| &elements[*i]));
        let n = invariants_of(h, &b)?;
        push(format!("H^{{{}}}", describe(dual, &elements, s)), CoidealContext::from_subspace(h, n)?);
    }
    out.sort_by_key(|m| m.context.dim());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_members_verify() {
        let dims: Vec<usize> = corpus().unwrap().iter().map(|e| e.hopf.dim()).collect();
        assert_eq!(dims, vec![2, 3, 6, 6, 6, 8, 8, 4, 36]);
        for e in corpus().unwrap().iter().filter(|e| e.hopf.dim() <= 8) {
            assert!(e.hopf.verify().all_passed(), "{}", e.name);
        }
        assert!(build("s4").unwrap().is_none());
    }

    #[test]
    fn subgroup_counts() {
        let count = |name: &str| grouplike_subgroups(&build(name).unwrap().unwrap().hopf).unwrap().1.len();
        assert_eq!(count("s3"), 6);
        assert_eq!(count("d4"), 10);
        assert_eq!(count("q8"), 6);
        assert_eq!(count("z6"), 4);
        assert_eq!(count("s3-dual"), 2);
    }

    #[test]
    fn lattice_of_s3_and_its_dual() {
        let s3 = build("s3").unwrap().unwrap().hopf;
        let dims: Vec<usize> = coideal_lattice(&s3).unwrap().iter().map(|m| m.context.dim()).collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 3, 6]);
        let dual = s3.dual();
        let dims: Vec<usize> = coideal_lattice(&dual).unwrap().iter().map(|m| m.context.dim()).collect();
        assert_eq!(dims, vec![1, 2, 3, 3, 3, 6]);
    }
}
