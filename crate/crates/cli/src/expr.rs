//! Manifold expressions such as `"CP2 # -CP2"` or `"3*S2xS2 # 2*-E8"`.
//!
//! ```text
//! expr  := term ('#' term)*
//! term  := [count '*'] block
//! block := CP2 | -CP2 | S2xS2 | E8 | -E8 | K3     (case-insensitive)
//! ```
//!
//! `CP2BAR` and `E8BAR` are accepted as aliases.

use circle_bundles::{Block, FourManifold};

use crate::error::CliError;

pub fn parse_block(name: &str) -> Result<Block, CliError> {
    let block = match name.trim().to_ascii_uppercase().as_str() {
        "CP2" => Block::Cp2,
        "-CP2" | "CP2BAR" => Block::Cp2Bar,
        "S2XS2" => Block::S2xS2,
        "E8" => Block::E8,
        "-E8" | "E8BAR" => Block::E8Bar,
        "K3" => Block::K3,
        other => return Err(CliError::Parse(format!("unknown block `{other}`"))),
    };
    Ok(block)
}

/// Parses an expression into `(block, multiplicity)` terms, in order.
pub fn parse_expression(src: &str) -> Result<Vec<(Block, usize)>, CliError> {
    if src.trim().is_empty() {
        return Err(CliError::Parse("empty manifold expression".into()));
    }
    src.split('#')
        .map(|term| {
            let term = term.trim();
            if term.is_empty() {
                return Err(CliError::Parse(format!("empty term in `{src}`")));
            }
            match term.split_once('*') {
                Some((count, block)) => {
                    let count: usize = count.trim().parse().map_err(|_| {
                        CliError::Parse(format!("bad multiplicity `{}`", count.trim()))
                    })?;
                    if count == 0 {
                        return Err(CliError::Parse(format!(
                            "multiplicity must be >= 1 in `{term}`"
                        )));
                    }
                    Ok((parse_block(block)?, count))
                }
                None => Ok((parse_block(term)?, 1)),
            }
        })
        .collect()
}

pub fn manifold_from_expression(src: &str) -> Result<FourManifold, CliError> {
    Ok(FourManifold::from_blocks(&parse_expression(src)?)?)
}
