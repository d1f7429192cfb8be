//! Exact arithmetic of the two groups driving the transforms, their actions
//! on the plane and on each parameter space, sections, characters and
//! cocycles.

mod family;
mod shear;
mod sim2;

pub use family::{CharacterKind, GroupElement, RadonFamily, XiPoint};
pub use shear::{LineParamAffine, ShearletElement};
pub use sim2::{CircleParam, LineParamPolar, Sim2Element};
