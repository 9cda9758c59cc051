//! JSON file format for Hopf data, coideal contexts and reports.
//!
//! A Hopf file holds `dim`, `cyclotomic_order`, `mult` as `[i, j, k, s]`
//! (e_i e_j has coefficient s at e_k), `comult` as `[i, j, k, s]` (s e_j⊗e_k
//! occurs in Δe_i), dense `unit` and `counit`, `antipode` as `[i, j, s]`
//! (S e_i has coefficient s at e_j), an optional dense `r_matrix` of length
//! dim² (index j·dim + k) and optional `basis_labels`. Scalars are strings
//! in the scalar syntax, with `z` a primitive root of unity of the file order.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coideal::CoidealContext;
use crate::error::{Error, Result};
use crate::hopf::{HopfData, Sparse, Sparse2};
use crate::linalg::Vector;
use crate::scalar::{CyclotomicOrder, Scalar};

/// Environment variable overriding the cyclotomic order of loaded files.
pub const ORDER_OVERRIDE_VAR: &str = "HOPFLAB_CYCLOTOMIC_ORDER";

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub dim: usize,
    pub cyclotomic_order: u32,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub antipode: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
}

fn render(s: &Scalar, order: CyclotomicOrder) -> String {
    if s.field().order() == order || s.as_rational().is_some() {
        return s.to_string();
    }
    s.embed(order).expect("scalars of a Hopf algebra lie in its field").to_string()
}

impl HopfFile {
    pub fn from_hopf(h: &HopfData) -> HopfFile {
        let order = h.order();
        let d = h.dim();
        let dense = |v: &[Scalar]| v.iter().map(|s| render(s, order)).collect::<Vec<_>>();
        let mut mult = Vec::new();
        for (ij, entries) in h.mult_entries().iter().enumerate() {
            for (k, s) in entries {
                mult.push((ij / d, ij % d, *k, render(s, order)));
            }
        }
        let mut comult = Vec::new();
        for (i, entries) in h.comult_entries().iter().enumerate() {
            for (j, k, s) in entries {
                comult.push((i, *j, *k, render(s, order)));
            }
        }
        let mut antipode = Vec::new();
        for (i, entries) in h.antipode_entries().iter().enumerate() {
            for (j, s) in entries {
                antipode.push((i, *j, render(s, order)));
            }
        }
        HopfFile {
            dim: d,
            cyclotomic_order: order.get(),
            mult,
            comult,
            unit: dense(h.unit()),
            counit: dense(h.counit()),
            antipode,
            r_matrix: h.r_matrix().map(dense),
            basis_labels: h.labels().map(<[String]>::to_vec),
        }
    }

    /// Builds the algebra, parsing scalars at the file order and embedding
    /// them into `target` when given.
    pub fn to_hopf(&self, target: Option<CyclotomicOrder>) -> Result<HopfData> {
        let file_order = CyclotomicOrder::new(self.cyclotomic_order)?;
        let order = target.unwrap_or(file_order);
        if !file_order.divides(order) {
            return Err(Error::Parse(format!("cyclotomic order {order} is not a multiple of {file_order}")));
        }
        let scalar = |s: &str| -> Result<Scalar> {
            let x = Scalar::parse(s, file_order)?;
            if order == file_order {
                Ok(x)
            } else {
                x.embed(order)
            }
        };
        let d = self.dim;
        let check =
            |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Parse(format!("{what} index out of range"))) };
        let mut mult: Vec<Sparse> = vec![Vec::new(); d * d];
        for (i, j, k, s) in &self.mult {
            check(*i < d && *j < d && *k < d, "mult")?;
            mult[i * d + j].push((*k, scalar(s)?));
        }
        let mut comult: Vec<Sparse2> = vec![Vec::new(); d];
        for (i, j, k, s) in &self.comult {
            check(*i < d && *j < d && *k < d, "comult")?;
            comult[*i].push((*j, *k, scalar(s)?));
        }
        let mut antipode: Vec<Sparse> = vec![Vec::new(); d];
        for (i, j, s) in &self.antipode {
            check(*i < d && *j < d, "antipode")?;
            antipode[*i].push((*j, scalar(s)?));
        }
        let dense = |v: &[String], len: usize, what: &str| -> Result<Vector> {
            if v.len() != len {
                return Err(Error::Parse(format!("{what} has length {}, expected {len}", v.len())));
            }
            v.iter().map(|s| scalar(s)).collect()
        };
        let unit = dense(&self.unit, d, "unit")?;
        let counit = dense(&self.counit, d, "counit")?;
        let mut h = HopfData::new(order, mult, comult, unit, counit, antipode)?;
        if let Some(r) = &self.r_matrix {
            h = h.with_r_matrix(dense(r, d * d, "r_matrix")?)?;
        }
        if let Some(labels) = &self.basis_labels {
            h = h.with_labels(labels.clone())?;
        }
        Ok(h)
    }
}

/// Pretty, deterministic JSON for a Hopf algebra.
pub fn to_json(h: &HopfData) -> String {
    let mut out = serde_json::to_string_pretty(&HopfFile::from_hopf(h)).expect("serializable");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<HopfData> {
    from_json_with_order(text, None)
}

pub fn from_json_with_order(text: &str, order: Option<CyclotomicOrder>) -> Result<HopfData> {
    let file: HopfFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_hopf(order)
}

/// SHA-256 of the compact canonical serialization, in hex.
pub fn content_hash(h: &HopfData) -> String {
    let canonical = serde_json::to_string(&HopfFile::from_hopf(h)).expect("serializable");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

/// Reads the order override from the environment.
pub fn order_override() -> Result<Option<CyclotomicOrder>> {
    match std::env::var(ORDER_OVERRIDE_VAR) {
        Ok(v) => {
            let n: u32 =
                v.trim().parse().map_err(|_| Error::Parse(format!("{ORDER_OVERRIDE_VAR}={v} is not a number")))?;
            Ok(Some(CyclotomicOrder::new(n)?))
        }
        Err(_) => Ok(None),
    }
}

/// Reads, parses and (unless skipped) verifies a Hopf file.
pub fn load(path: &Path, skip_verify: bool, order: Option<CyclotomicOrder>) -> Result<HopfData> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let h = from_json_with_order(&text, order)?;
    if !skip_verify {
        let report = h.verify();
        if !report.all_passed() {
            let failed: Vec<&str> = report.failures().iter().map(|c| c.axiom).collect();
            return Err(Error::AxiomFailure(failed.join(", ")));
        }
    }
    Ok(h)
}

/// Serialized coideal context, tied to its parent algebra by content hash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoidealRecord {
    pub hopf_hash: String,
    pub dim: usize,
    pub generators: Vec<Vector>,
    pub basis: Vec<Vector>,
    pub big_lambda_n: Vector,
    pub lambda_b: Vector,
    pub dim_b: usize,
    pub is_normal: bool,
    pub is_hopf_subalgebra: bool,
}

impl CoidealRecord {
    pub fn new(h: &HopfData, ctx: &CoidealContext) -> CoidealRecord {
        CoidealRecord {
            hopf_hash: content_hash(h),
            dim: ctx.dim(),
            generators: ctx.generators.clone(),
            basis: ctx.n.basis().to_vec(),
            big_lambda_n: ctx.big_lambda_n.clone(),
            lambda_b: ctx.lambda_b.clone(),
            dim_b: ctx.b.dim(),
            is_normal: ctx.is_normal,
            is_hopf_subalgebra: ctx.is_hopf_subalgebra,
        }
    }
}

/// Envelope written by every command.
#[derive(Clone, Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_hash: Option<String>,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, input: Option<&HopfData>, result: T) -> Report<T> {
        Report {
            tool: "hopflab",
            version: TOOL_VERSION,
            command: command.to_string(),
            input_hash: input.map(content_hash),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }
}

/// One entry of a chain file: `"k"`, `"H"`, or a list of generators, each a
/// basis label or a coordinate vector of scalar strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainEntry {
    Named(String),
    Generators(Vec<Generator>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Generator {
    Label(String),
    Coordinates(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub chain: Vec<ChainEntry>,
}

/// Resolves a generator against the labels and field of `h`.
pub fn resolve_generator(h: &HopfData, g: &Generator) -> Result<Vector> {
    match g {
        Generator::Label(l) => {
            h.index_of(l).map(|i| h.basis(i)).ok_or_else(|| Error::Parse(format!("unknown basis label {l:?}")))
        }
        Generator::Coordinates(c) => {
            if c.len() != h.dim() {
                return Err(Error::Parse(format!("generator has {} coordinates, expected {}", c.len(), h.dim())));
            }
            c.iter().map(|s| Scalar::parse(s, h.order())).collect()
        }
    }
}

/// Parses a chain file into coideal closures.
pub fn parse_chain(h: &HopfData, text: &str) -> Result<Vec<CoidealContext>> {
    let file: ChainFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.chain
        .iter()
        .map(|entry| match entry {
            ChainEntry::Named(n) if n == "k" => CoidealContext::trivial(h),
            ChainEntry::Named(n) if n == "H" => CoidealContext::whole(h),
            ChainEntry::Named(n) => Err(Error::Parse(format!("chain entry {n:?} is neither \"k\" nor \"H\""))),
            ChainEntry::Generators(gens) => {
                let vs = gens.iter().map(|g| resolve_generator(h, g)).collect::<Result<Vec<_>>>()?;
                crate::coideal::coideal_closure(h, &vs)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{drinfeld_double, group_algebra, quaternion_table, symmetric3_table, CompositionConvention};

    fn ks3() -> HopfData {
        group_algebra(&symmetric3_table(CompositionConvention::RightToLeft), CyclotomicOrder::new(3).unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        let h = ks3();
        for x in [h.clone(), h.dual(), drinfeld_double(&h).unwrap().0] {
            let text = to_json(&x);
            let back = from_json(&text).unwrap();
            assert_eq!(back, x);
            assert_eq!(to_json(&back), text);
            assert_eq!(content_hash(&back), content_hash(&x));
        }
    }

    #[test]
    fn hash_distinguishes_algebras() {
        let h = ks3();
        assert_ne!(content_hash(&h), content_hash(&h.dual()));
        assert_eq!(content_hash(&h).len(), 64);
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        assert!(matches!(from_json("{ not json"), Err(Error::Parse(_))));
        assert!(matches!(from_json(r#"{"dim": 1}"#), Err(Error::Parse(_))));
        let mut file = HopfFile::from_hopf(&ks3());
        file.mult.push((9, 0, 0, "1".into()));
        assert!(matches!(file.to_hopf(None), Err(Error::Parse(_))));
        let mut file = HopfFile::from_hopf(&ks3());
        file.unit[0] = "1/".into();
        assert!(matches!(file.to_hopf(None), Err(Error::Parse(_))));
    }

    #[test]
    fn tampered_antipode_fails_verification() {
        let dir = std::env::temp_dir().join(format!("hopflab-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tampered.hopf.json");
        let mut file = HopfFile::from_hopf(&ks3());
        // S fixes the identity instead of sending (123) to (132)
        for entry in file.antipode.iter_mut().filter(|a| a.0 != 0) {
            entry.1 = entry.0;
        }
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(matches!(load(&path, false, None), Err(Error::AxiomFailure(_))));
        assert!(load(&path, true, None).is_ok());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn order_override_embeds_scalars() {
        let q8 = group_algebra(&quaternion_table(), CyclotomicOrder::new(4).unwrap()).unwrap();
        let dual = q8.dual();
        let text = to_json(&dual);
        let wide = from_json_with_order(&text, Some(CyclotomicOrder::new(12).unwrap())).unwrap();
        assert_eq!(wide.order().get(), 12);
        assert!(wide.verify().all_passed());
        assert_eq!(wide.characters().unwrap().len(), dual.characters().unwrap().len());
        assert!(from_json_with_order(&text, Some(CyclotomicOrder::new(6).unwrap())).is_err());

        let mut file = HopfFile::from_hopf(&ks3());
        let mut r = vec!["0".to_string(); 36];
        r[0] = "1 + z".into();
        file.r_matrix = Some(r);
        let six = CyclotomicOrder::new(6).unwrap();
        let h = file.to_hopf(Some(six)).unwrap();
        assert_eq!(h.r_matrix().unwrap()[0], &Scalar::one() + &Scalar::zeta(six, 2));
        assert_eq!(HopfFile::from_hopf(&h).r_matrix.unwrap()[0], h.r_matrix().unwrap()[0].to_string());
    }

    #[test]
    fn chains_resolve_labels_and_coordinates() {
        let h = ks3();
        let text = r#"{"chain": ["k", ["(123)"], [["0","0","0","0","0","0"], "(12)"], "H"]}"#;
        let chain = parse_chain(&h, text).unwrap();
        let dims: Vec<usize> = chain.iter().map(CoidealContext::dim).collect();
        assert_eq!(dims, vec![1, 3, 2, 6]);
        assert!(parse_chain(&h, r#"{"chain": ["G"]}"#).is_err());
        assert!(parse_chain(&h, r#"{"chain": [["(1234)"]]}"#).is_err());
    }
}
