//! Product formulas for the generating functions, each an independent check on the transfer
//! matrix computations in `vertex`.

mod boundary;
mod cylindric;
mod diamond;
mod pure;

pub use boundary::{
    boundary_exponents, free_multi, free_q, free_space, hook_content_super, mixed_multi, mixed_q, mixed_space,
    super_space, superlittlewood,
};
pub use cylindric::{cyl_multi, cyl_q, cyl_space};
pub use diamond::{extended_multi, extended_q, extended_space};
pub use pure::{
    aztec_degree, aztec_poly, diagonal_space, hook_diagram, hook_q, pure_degree, pure_is_polynomial, pure_multi,
    pure_q, pyramid_limit, pyramid_q, stanley_images, stanley_multi, strip_inert, value_at_one,
};

use crate::error::{Error, Result};
use crate::steep::{BoundaryMode, SignWord};
use crate::{MultiSeries, UniSeries};

/// Rejects words outside the hypotheses of the product formula for `mode`: the periodic product
/// needs both signs.
pub fn check_model(mode: BoundaryMode, w: &SignWord) -> Result<()> {
    if mode == BoundaryMode::Periodic && !w.has_both_signs() {
        return Err(Error::InvalidWord {
            word: w.to_string(),
            reason: "the periodic model needs at least one + and one −".into(),
        });
    }
    Ok(())
}

/// The product formula for `mode`, in `q`.
pub fn formula_q(mode: BoundaryMode, w: &SignWord, n: usize) -> Result<UniSeries> {
    check_model(mode, w)?;
    Ok(match mode {
        BoundaryMode::Pure => pure_q(w, n),
        BoundaryMode::Mixed => mixed_q(w, n),
        BoundaryMode::Free => free_q(w, n),
        BoundaryMode::Periodic => cyl_q(w, n),
    })
}

/// The refined product formula for `mode`, over `diagonal_space`, `mixed_space`, `free_space`
/// or `cyl_space`.
pub fn formula_multi(mode: BoundaryMode, w: &SignWord, n: usize) -> Result<MultiSeries> {
    check_model(mode, w)?;
    Ok(match mode {
        BoundaryMode::Pure => pure_multi(w, n),
        BoundaryMode::Mixed => mixed_multi(w, n),
        BoundaryMode::Free => free_multi(w, n),
        BoundaryMode::Periodic => cyl_multi(w, n),
    })
}
