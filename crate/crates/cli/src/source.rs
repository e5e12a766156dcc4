use std::fs;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};

use linf_core::document::SystemDocument;
use linf_core::examples::{example1_system_with, example2_system_with, ExampleSystems};
use linf_core::linf::BracketSystem;
use linf_core::superspace::DeltaSpec;

/// Parameters of the built-in systems; ignored for documents.
#[derive(Args, Clone)]
pub struct BuiltinOptions {
    /// Series order of the generating functions.
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    /// `example2`: number of odd generators of V (Δ data needs 2).
    #[arg(long, default_value_t = 2)]
    pub dim0: usize,
    /// `example2`: number of even generators of V.
    #[arg(long, default_value_t = 3)]
    pub dim1: usize,
    /// `example2`: number of bosons of the Δ operator.
    #[arg(long, default_value_t = 3)]
    pub bosons: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// Skew brackets on V.
    V,
    /// Symmetric brackets on the desuspension W.
    W,
}

/// A resolved input: a built-in example or a loaded document.
pub struct Source {
    pub name: String,
    pub brackets: BracketSystem,
    /// The symmetric table, when the input provides one directly.
    pub w_brackets: Option<BracketSystem>,
    pub delta: Option<DeltaSpec>,
}

fn builtin(name: &str, max_arity: usize, opts: &BuiltinOptions) -> Result<Option<ExampleSystems>> {
    Ok(match name {
        "example1" => Some(example1_system_with(max_arity, opts.order)),
        "example2" => Some(example2_system_with(opts.dim0, opts.dim1, opts.bosons, max_arity, opts.order)?),
        _ => None,
    })
}

pub fn resolve(input: &str, max_arity: usize, opts: &BuiltinOptions) -> Result<Source> {
    if let Some(ex) = builtin(input, max_arity, opts)? {
        return Ok(Source { name: input.to_string(), brackets: ex.v, w_brackets: Some(ex.w), delta: ex.delta });
    }
    let text = fs::read_to_string(input).with_context(|| format!("cannot read {input}"))?;
    let loaded = SystemDocument::from_json(&text)
        .and_then(|d| d.load())
        .with_context(|| format!("cannot load {input}"))?;
    let w_brackets = (loaded.brackets.symmetry() == linf_core::linf::Symmetry::Symmetric)
        .then(|| loaded.brackets.clone());
    Ok(Source {
        name: loaded.name.unwrap_or_else(|| input.to_string()),
        brackets: loaded.brackets,
        w_brackets,
        delta: loaded.delta,
    })
}

pub fn export(name: &str, side: Side, max_arity: usize, opts: &BuiltinOptions) -> Result<SystemDocument> {
    let Some(ex) = builtin(name, max_arity, opts)? else {
        bail!("unknown built-in system {name:?} (expected example1 or example2)");
    };
    let sys = match side {
        Side::V => &ex.v,
        Side::W => &ex.w,
    };
    Ok(SystemDocument::from_system(Some(name), sys, ex.delta.as_ref()))
}
