//! JSON code descriptors: `{field, sizes, set: {kind, ...}, sense}`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::ff::FieldDescriptor;
use crate::poly::Monomial;
use crate::Rational;

use super::params::optimal_w2;
use super::{CodeSpec, CodesError, MonomialSet, PointEnsemble, Sense};

/// A rational read from a JSON number or a `"p/q"` string.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Q(pub Rational);

impl FromStr for Q {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"));
        match s.split_once('/') {
            Some((a, b)) => {
                let d = parse(b)?;
                if d == 0 {
                    return Err(format!("{s:?}: zero denominator"));
                }
                Ok(Q(Rational::new(parse(a)?, d)))
            }
            None => Ok(Q(Rational::from_integer(parse(s)?))),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i64(*self.0.numer())
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Q(Rational::from_integer(n))),
            Raw::Str(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SetSpec {
    /// Weighted degree cap. Without weights (two variables only) the
    /// optimal weights with w_1 = 1 are used.
    Wrm {
        u: Q,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weights: Option<Vec<Q>>,
    },
    QaryRm {
        u: u32,
    },
    Mcj {
        delta: u64,
    },
    Hyperbolic {
        delta: u64,
    },
    Joyner,
    Custom {
        monomials: Vec<Vec<u32>>,
    },
}

impl SetSpec {
    pub fn build(&self, sizes: &[u32]) -> Result<MonomialSet, CodesError> {
        match self {
            SetSpec::Wrm { u, weights } => {
                let w: Vec<Rational> = match weights {
                    Some(w) => w.iter().map(|x| x.0).collect(),
                    None => {
                        let [s1, s2] = sizes else {
                            return Err(CodesError::Params("optimal weights need exactly two variables".into()));
                        };
                        let one = Rational::from_integer(1);
                        vec![one, optimal_w2(*s1, *s2, u.0, one)?]
                    }
                };
                MonomialSet::wrm(sizes, u.0, &w)
            }
            SetSpec::QaryRm { u } => Ok(MonomialSet::qary_rm(sizes, *u)),
            SetSpec::Mcj { delta } => Ok(MonomialSet::mcj(sizes, *delta)),
            SetSpec::Hyperbolic { delta } => Ok(MonomialSet::hyperbolic(sizes, *delta)),
            SetSpec::Joyner => {
                if sizes != [7, 7] {
                    return Err(CodesError::Params("the Joyner set lives on a 7 x 7 grid".into()));
                }
                Ok(MonomialSet::joyner())
            }
            SetSpec::Custom { monomials } => MonomialSet::custom(sizes, monomials.iter().map(|e| Monomial::new(e.clone()))),
        }
    }
}

fn primal() -> Sense {
    Sense::Primal
}

/// Field, ensemble sizes, monomial set and sense.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub field: FieldDescriptor,
    pub sizes: Vec<u32>,
    pub set: SetSpec,
    #[serde(default = "primal")]
    pub sense: Sense,
    /// Use (F_q^*)^m instead of the canonical ensemble (requires s_j = q - 1).
    #[serde(default)]
    pub nonzero_points: bool,
}

impl CodeDescriptor {
    pub fn build(&self) -> Result<CodeSpec, CodesError> {
        let field = Arc::new(self.field.build()?);
        let ensemble = if self.nonzero_points {
            if self.sizes.iter().any(|&s| s != field.size() - 1) {
                return Err(CodesError::Ensemble("nonzero ensemble needs s_j = q - 1".into()));
            }
            PointEnsemble::nonzero(&field, self.sizes.len())
        } else {
            PointEnsemble::canonical(&field, &self.sizes)?
        };
        let set = self.set.build(&self.sizes)?;
        CodeSpec::new(field, ensemble, set, self.sense)
    }
}
