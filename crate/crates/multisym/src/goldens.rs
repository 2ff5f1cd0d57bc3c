//! Reference polynomials stored as canonical JSON, named `van_mk` /
//! `spoly_mk` after the context they live in.  The files were produced by an
//! external generator and cross-checked against independent constructions;
//! nothing in this crate writes them.

use crate::error::Result;
use crate::polynomial::Polynomial;

pub const VAN_11: &str = include_str!("../goldens/van_11.json");
pub const VAN_21: &str = include_str!("../goldens/van_21.json");
pub const VAN_12: &str = include_str!("../goldens/van_12.json");
pub const SPOLY_11: &str = include_str!("../goldens/spoly_11.json");
pub const SPOLY_21: &str = include_str!("../goldens/spoly_21.json");
pub const SPOLY_12: &str = include_str!("../goldens/spoly_12.json");

pub fn all() -> [(&'static str, &'static str); 6] {
    [
        ("van_11", VAN_11),
        ("van_21", VAN_21),
        ("van_12", VAN_12),
        ("spoly_11", SPOLY_11),
        ("spoly_21", SPOLY_21),
        ("spoly_12", SPOLY_12),
    ]
}

pub fn load(name: &str) -> Option<Result<Polynomial>> {
    all()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, json)| Polynomial::from_json_str(json))
}
