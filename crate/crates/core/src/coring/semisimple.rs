use serde::Serialize;

use super::{dual_ring, Coring, Side};
use crate::error::{Error, Result};

/// The four ingredients of the semisimplicity decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleEvidence {
    /// `C_A` is projective.
    pub right_projective: bool,
    /// `_A C` is projective.
    pub left_projective: bool,
    /// `rad(C*) = 0`.
    pub right_dual_semisimple: bool,
    /// `rad(*C) = 0`.
    pub left_dual_semisimple: bool,
    pub semisimple: bool,
}

/// `C` is semisimple iff `C_A` is projective and `C*` is semisimple; the mirror
/// verdict through `_A C` and `*C` is computed as well and must agree.
pub fn is_semisimple_coring(c: &Coring) -> Result<SemisimpleEvidence> {
    let right_projective = c.carrier().as_right_module().is_projective();
    let left_projective = c.carrier().as_left_module().is_projective();
    let right_dual_semisimple = dual_ring(c, Side::Right)?.algebra.is_semisimple()?;
    let left_dual_semisimple = dual_ring(c, Side::Left)?.algebra.is_semisimple()?;
    let right = right_projective && right_dual_semisimple;
    let left = left_projective && left_dual_semisimple;
    if right != left {
        return Err(Error::Inconsistent(format!(
            "{}: semisimplicity via C* ({right}) and via *C ({left}) disagree",
            c.name()
        )));
    }
    Ok(SemisimpleEvidence { right_projective, left_projective, right_dual_semisimple, left_dual_semisimple, semisimple: right })
}
