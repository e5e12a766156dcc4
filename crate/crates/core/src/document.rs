//! Versioned JSON exchange format for bracket systems and `Δ` data.
//!
//! Rationals are always strings (`"num/den"`, bare integers accepted on
//! input) so that no value passes through floating point.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{Element, Generator, GradedSpace};
use crate::linf::{BracketSystem, Grading, Symmetry, DEFAULT_MAX_ARITY};
use crate::rational::{self, Rational};
use crate::series::Series;
use crate::superspace::{DeltaSpec, GenFn, FERMIONS};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub space: Vec<GeneratorDoc>,
    pub symmetry: SymmetryDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingDoc>,
    #[serde(default = "default_max_arity")]
    pub max_arity: usize,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaDoc>,
}

fn default_max_arity() -> usize {
    DEFAULT_MAX_ARITY
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub degree: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryDoc {
    Skew,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradingDoc {
    Integer,
    Parity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub inputs: Vec<String>,
    pub output: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub gen: String,
    pub coeff: String,
}

/// A generating function: either plain coefficients of a series in the total
/// momentum, or that plus a linear part `Σ_j ℓ_j p^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesDoc {
    Coefficients(Vec<String>),
    Structured { radial: Vec<String>, linear: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaDoc {
    #[serde(rename = "N")]
    pub n_bosons: usize,
    pub order: usize,
    #[serde(default)]
    pub selection_rule: bool,
    pub f: Vec<SeriesDoc>,
    pub g: Vec<Vec<SeriesDoc>>,
    pub h: Vec<SeriesDoc>,
}

/// A document after validation.
#[derive(Debug, Clone)]
pub struct LoadedSystem {
    pub name: Option<String>,
    pub brackets: BracketSystem,
    pub delta: Option<DeltaSpec>,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn parse_coeffs(values: &[String], order: usize, what: &str) -> Result<Series> {
    if values.len() > order + 1 {
        return Err(doc_err(format!("{what} has {} coefficients but order is {order}", values.len())));
    }
    let parsed: Vec<Rational> = values.iter().map(|s| rational::parse(s)).collect::<Result<_>>()?;
    Ok(Series::from_poly(&parsed, order))
}

fn parse_genfn(doc: &SeriesDoc, n_bosons: usize, order: usize, what: &str) -> Result<GenFn> {
    match doc {
        SeriesDoc::Coefficients(c) => Ok(GenFn::radial(parse_coeffs(c, order, what)?, n_bosons)),
        SeriesDoc::Structured { radial, linear } => {
            if linear.len() != n_bosons {
                return Err(doc_err(format!("{what}: linear part needs {n_bosons} entries")));
            }
            let linear = linear.iter().map(|s| rational::parse(s)).collect::<Result<_>>()?;
            Ok(GenFn::with_linear(parse_coeffs(radial, order, what)?, linear))
        }
    }
}

fn export_genfn(g: &GenFn) -> SeriesDoc {
    let radial = g.radial_part().coeffs().iter().map(rational::format).collect();
    if g.linear_part().iter().all(num_traits::Zero::is_zero) {
        SeriesDoc::Coefficients(radial)
    } else {
        SeriesDoc::Structured { radial, linear: g.linear_part().iter().map(rational::format).collect() }
    }
}

impl DeltaDoc {
    pub fn to_spec(&self) -> Result<DeltaSpec> {
        let (n, order) = (self.n_bosons, self.order);
        let pair = |v: &[SeriesDoc], what: &str| -> Result<[GenFn; 2]> {
            if v.len() != FERMIONS {
                return Err(doc_err(format!("{what} needs {FERMIONS} entries")));
            }
            Ok([
                parse_genfn(&v[0], n, order, &format!("{what}[0]"))?,
                parse_genfn(&v[1], n, order, &format!("{what}[1]"))?,
            ])
        };
        let f = pair(&self.f, "f")?;
        let h = pair(&self.h, "h")?;
        if self.g.len() != FERMIONS || self.g.iter().any(|row| row.len() != n) {
            return Err(doc_err(format!("g must be a {FERMIONS} × {n} array")));
        }
        let row = |a: usize| -> Result<Vec<GenFn>> {
            self.g[a]
                .iter()
                .enumerate()
                .map(|(i, s)| parse_genfn(s, n, order, &format!("g[{a}][{i}]")))
                .collect()
        };
        let g = [row(0)?, row(1)?];
        if self.selection_rule && h.iter().any(|x| !x.is_zero()) {
            return Err(Error::DegreeRule("h must vanish under the selection rule".into()));
        }
        let spec = DeltaSpec::new(n, f, g, h).map_err(|e| doc_err(e.to_string()))?;
        Ok(if self.selection_rule { spec.with_selection_rule() } else { spec })
    }

    pub fn from_spec(spec: &DeltaSpec) -> Self {
        let n = spec.n_bosons();
        DeltaDoc {
            n_bosons: n,
            order: spec.order().max(0) as usize,
            selection_rule: spec.selection_rule(),
            f: (0..FERMIONS).map(|a| export_genfn(spec.f(a))).collect(),
            g: (0..FERMIONS).map(|a| (0..n).map(|i| export_genfn(spec.g(a, i))).collect()).collect(),
            h: (0..FERMIONS).map(|a| export_genfn(spec.h(a))).collect(),
        }
    }
}

impl SystemDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Validates the document, rejecting unknown generators, degree-rule
    /// violations, and entries forced to vanish by symmetry.
    pub fn load(&self) -> Result<LoadedSystem> {
        if self.version != SCHEMA_VERSION {
            return Err(doc_err(format!("unsupported version {:?}", self.version)));
        }
        let (symmetry, label) = match self.symmetry {
            SymmetryDoc::Skew => (Symmetry::Skew, "V"),
            SymmetryDoc::Symmetric => (Symmetry::Symmetric, "W"),
        };
        let gens = self.space.iter().map(|g| Generator::new(g.name.clone(), g.degree)).collect();
        let space = GradedSpace::new(label, gens).map_err(|e| doc_err(e.to_string()))?;
        let grading = match self.grading {
            Some(GradingDoc::Parity) => Grading::Parity,
            _ => Grading::Integer,
        };
        let mut sys = BracketSystem::new(space, symmetry, self.max_arity).with_grading(grading);
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.brackets {
            let lookup = |name: &str| {
                sys.space().index_of(name).ok_or_else(|| doc_err(format!("unknown generator {name:?}")))
            };
            let inputs: Vec<usize> = b.inputs.iter().map(|n| lookup(n)).collect::<Result<_>>()?;
            let mut out = Element::zero();
            for t in &b.output {
                out.add_term(lookup(&t.gen)?, rational::parse(&t.coeff)?);
            }
            if let Some((key, _)) = sys.canonicalize(&inputs)? {
                if !seen.insert(key) {
                    return Err(doc_err(format!("duplicate bracket on {:?}", b.inputs)));
                }
            }
            sys.insert(&inputs, out)?;
        }
        let delta = self.delta.as_ref().map(DeltaDoc::to_spec).transpose()?;
        Ok(LoadedSystem { name: self.name.clone(), brackets: sys, delta })
    }

    pub fn from_system(name: Option<&str>, sys: &BracketSystem, delta: Option<&DeltaSpec>) -> Self {
        let space = sys.space();
        let name_of = |i: usize| space.generators()[i].name.clone();
        let brackets = sys
            .entries()
            .map(|(key, value)| BracketDoc {
                inputs: key.iter().map(|&i| name_of(i)).collect(),
                output: value.iter().map(|(g, c)| TermDoc { gen: name_of(g), coeff: rational::format(c) }).collect(),
            })
            .collect();
        SystemDocument {
            version: SCHEMA_VERSION.to_string(),
            name: name.map(str::to_string),
            space: space
                .generators()
                .iter()
                .map(|g| GeneratorDoc { name: g.name.clone(), degree: g.degree })
                .collect(),
            symmetry: match sys.symmetry() {
                Symmetry::Skew => SymmetryDoc::Skew,
                Symmetry::Symmetric => SymmetryDoc::Symmetric,
            },
            grading: match sys.grading() {
                Grading::Integer => None,
                Grading::Parity => Some(GradingDoc::Parity),
            },
            max_arity: sys.max_arity(),
            brackets,
            delta: delta.map(DeltaDoc::from_spec),
        }
    }
}
