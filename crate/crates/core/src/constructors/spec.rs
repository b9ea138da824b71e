use serde::{Deserialize, Serialize};

use super::{
    cyclic, dihedral, direct_product, heisenberg_gf, quaternion8, scalar_automorphism_extension,
    semidirect_product, symmetric, zm_group, ActionSpec,
};
use crate::error::Result;
use crate::group::Group;

/// A reproducible construction recipe, serialized as
/// `{"family": "...", "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "wire::Spec", into = "wire::Spec")]
pub enum GroupSpec {
    Cyclic {
        n: usize,
    },
    /// Dihedral group of the given order (twice the polygon size).
    Dihedral {
        order: usize,
    },
    Quaternion8 {},
    Symmetric {
        k: usize,
    },
    DirectProduct {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
    },
    Zm {
        m: u64,
        n: u64,
        r: u64,
    },
    /// `a ⋊ b`; `action[i][j]` is the image of generator `j` of `a` under
    /// generator `i` of `b`.
    Semidirect {
        a: Box<GroupSpec>,
        b: Box<GroupSpec>,
        action: Vec<Vec<usize>>,
    },
    HeisenbergGf {
        p: u64,
    },
    ScalarExt {
        p: u64,
        lambda: u64,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Cyclic { n } => cyclic(*n),
            GroupSpec::Dihedral { order } => dihedral(*order),
            GroupSpec::Quaternion8 {} => quaternion8(),
            GroupSpec::Symmetric { k } => symmetric(*k),
            GroupSpec::DirectProduct { left, right } => {
                direct_product(&left.build()?, &right.build()?)
            }
            GroupSpec::Zm { m, n, r } => zm_group(*m, *n, *r),
            GroupSpec::Semidirect { a, b, action } => semidirect_product(
                &a.build()?,
                &b.build()?,
                &ActionSpec {
                    images: action.clone(),
                },
            ),
            GroupSpec::HeisenbergGf { p } => heisenberg_gf(*p),
            GroupSpec::ScalarExt { p, lambda } => {
                scalar_automorphism_extension(&heisenberg_gf(*p)?, *lambda)
            }
        }
    }

    /// Short human-readable name, e.g. `ZM(5,4,2)`.
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Cyclic { n } => format!("Z{n}"),
            GroupSpec::Dihedral { order } => format!("D{}", order / 2),
            GroupSpec::Quaternion8 {} => "Q8".into(),
            GroupSpec::Symmetric { k } => format!("S{k}"),
            GroupSpec::DirectProduct { left, right } => {
                format!("{}x{}", left.name(), right.name())
            }
            GroupSpec::Zm { m, n, r } => format!("ZM({m},{n},{r})"),
            GroupSpec::Semidirect { a, b, action } => {
                format!("{}:{}{:?}", a.name(), b.name(), action)
            }
            GroupSpec::HeisenbergGf { p } => format!("P({p})"),
            GroupSpec::ScalarExt { p, lambda } => format!("P({p}):<x{lambda}>"),
        }
    }

    pub fn cyclic(n: usize) -> Self {
        GroupSpec::Cyclic { n }
    }

    pub fn zm(m: u64, n: u64, r: u64) -> Self {
        GroupSpec::Zm { m, n, r }
    }

    pub fn dihedral(order: usize) -> Self {
        GroupSpec::Dihedral { order }
    }

    pub fn product(left: GroupSpec, right: GroupSpec) -> Self {
        GroupSpec::DirectProduct {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn semidirect(a: GroupSpec, b: GroupSpec, action: Vec<Vec<usize>>) -> Self {
        GroupSpec::Semidirect {
            a: Box::new(a),
            b: Box::new(b),
            action,
        }
    }
}

/// Serialized form. Serde has no per-variant `deny_unknown_fields`, so each
/// variant's parameters live in their own strict struct.
mod wire {
    use serde::{Deserialize, Serialize};

    use super::GroupSpec;

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(
        tag = "family",
        content = "params",
        rename_all = "snake_case",
        deny_unknown_fields
    )]
    pub enum Spec {
        Cyclic(Cyclic),
        Dihedral(Dihedral),
        Quaternion8(Empty),
        Symmetric(Symmetric),
        DirectProduct(Product),
        Zm(Zm),
        Semidirect(Semidirect),
        HeisenbergGf(Prime),
        ScalarExt(ScalarExt),
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Cyclic {
        n: usize,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Dihedral {
        order: usize,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Empty {}

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Symmetric {
        k: usize,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Product {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Zm {
        m: u64,
        n: u64,
        r: u64,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Semidirect {
        a: Box<GroupSpec>,
        b: Box<GroupSpec>,
        action: Vec<Vec<usize>>,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct Prime {
        p: u64,
    }

    #[derive(Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct ScalarExt {
        p: u64,
        lambda: u64,
    }

    impl From<Spec> for GroupSpec {
        fn from(s: Spec) -> Self {
            match s {
                Spec::Cyclic(Cyclic { n }) => GroupSpec::Cyclic { n },
                Spec::Dihedral(Dihedral { order }) => GroupSpec::Dihedral { order },
                Spec::Quaternion8(Empty {}) => GroupSpec::Quaternion8 {},
                Spec::Symmetric(Symmetric { k }) => GroupSpec::Symmetric { k },
                Spec::DirectProduct(Product { left, right }) => {
                    GroupSpec::DirectProduct { left, right }
                }
                Spec::Zm(Zm { m, n, r }) => GroupSpec::Zm { m, n, r },
                Spec::Semidirect(Semidirect { a, b, action }) => {
                    GroupSpec::Semidirect { a, b, action }
                }
                Spec::HeisenbergGf(Prime { p }) => GroupSpec::HeisenbergGf { p },
                Spec::ScalarExt(ScalarExt { p, lambda }) => GroupSpec::ScalarExt { p, lambda },
            }
        }
    }

    impl From<GroupSpec> for Spec {
        fn from(s: GroupSpec) -> Self {
            match s {
                GroupSpec::Cyclic { n } => Spec::Cyclic(Cyclic { n }),
                GroupSpec::Dihedral { order } => Spec::Dihedral(Dihedral { order }),
                GroupSpec::Quaternion8 {} => Spec::Quaternion8(Empty {}),
                GroupSpec::Symmetric { k } => Spec::Symmetric(Symmetric { k }),
                GroupSpec::DirectProduct { left, right } => {
                    Spec::DirectProduct(Product { left, right })
                }
                GroupSpec::Zm { m, n, r } => Spec::Zm(Zm { m, n, r }),
                GroupSpec::Semidirect { a, b, action } => {
                    Spec::Semidirect(Semidirect { a, b, action })
                }
                GroupSpec::HeisenbergGf { p } => Spec::HeisenbergGf(Prime { p }),
                GroupSpec::ScalarExt { p, lambda } => Spec::ScalarExt(ScalarExt { p, lambda }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let spec: GroupSpec =
            serde_json::from_str(r#"{"family":"zm","params":{"m":3,"n":2,"r":2}}"#).unwrap();
        assert_eq!(spec, GroupSpec::zm(3, 2, 2));
        let back = serde_json::to_string(&spec).unwrap();
        assert_eq!(back, r#"{"family":"zm","params":{"m":3,"n":2,"r":2}}"#);
        let q: GroupSpec = serde_json::from_str(r#"{"family":"quaternion8","params":{}}"#).unwrap();
        assert_eq!(q, GroupSpec::Quaternion8 {});
    }

    #[test]
    fn nested_specs() {
        let s = r#"{"family":"semidirect","params":{
            "a":{"family":"cyclic","params":{"n":7}},
            "b":{"family":"cyclic","params":{"n":3}},
            "action":[[2]]}}"#;
        let spec: GroupSpec = serde_json::from_str(s).unwrap();
        assert_eq!(spec.build().unwrap().order(), 21);
    }

    #[test]
    fn unknown_fields_rejected() {
        for bad in [
            r#"{"family":"zm","params":{"m":3,"n":2,"r":2,"q":1}}"#,
            r#"{"family":"zm","params":{"m":3,"n":2,"r":2},"extra":0}"#,
            r#"{"family":"tetrahedral","params":{}}"#,
            r#"{"family":"cyclic","params":{"order":4}}"#,
        ] {
            assert!(serde_json::from_str::<GroupSpec>(bad).is_err(), "{bad}");
        }
    }
}
