//! JSON document schemas for the command-line interface. Integers are
//! emitted as JSON numbers when they fit in 64 bits and as decimal strings
//! otherwise; both forms are accepted on input.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::chains::{ChainNode, CurveChain};
use crate::exact::{format_rational, parse_rational, Int, Rational};
use crate::kahler::{ConfigEdge, ConfigNode, CurveConfig, KahlerError};
use crate::surface::{
    OrbifoldRiemannSurface, ParabolicMark, ParabolicRuledSurface, ParabolicStructure, Section,
    SurfaceError,
};
use crate::toric::{Fan2D, LatticeVector, ToricError};

/// Arbitrary-precision integer with a JSON-number fast path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl From<Int> for JsonInt {
    fn from(v: Int) -> Self {
        JsonInt(v)
    }
}

impl From<JsonInt> for Int {
    fn from(v: JsonInt) -> Self {
        v.0
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(n) => serializer.serialize_i64(n),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl<'de> Visitor<'de> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                Int::from_str(v).map(JsonInt).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(IntVisitor)
    }
}

/// Exact rational carried as a "p/q" (or plain integer) string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text)
            .map(JsonRational)
            .map_err(de::Error::custom)
    }
}

fn default_complete() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FanDoc {
    pub rays: Vec<[JsonInt; 2]>,
    #[serde(default = "default_complete")]
    pub complete: bool,
}

impl FanDoc {
    pub fn from_fan(fan: &Fan2D) -> Self {
        FanDoc {
            rays: fan
                .rays()
                .iter()
                .map(|r| [JsonInt(r.x.clone()), JsonInt(r.y.clone())])
                .collect(),
            complete: fan.is_complete(),
        }
    }

    pub fn to_fan(&self) -> Result<Fan2D, ToricError> {
        let rays = self
            .rays
            .iter()
            .map(|[x, y]| LatticeVector::new(x.0.clone(), y.0.clone()))
            .collect();
        Fan2D::new(rays, self.complete)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainNodeDoc {
    pub label: String,
    pub self_int: JsonInt,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainDoc {
    pub chain: Vec<ChainNodeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marker: Option<usize>,
}

impl ChainDoc {
    pub fn from_chain(chain: &CurveChain) -> Self {
        ChainDoc {
            chain: chain
                .nodes
                .iter()
                .map(|n| ChainNodeDoc {
                    label: n.label.clone(),
                    self_int: JsonInt(n.self_int.clone()),
                })
                .collect(),
            marker: chain.marker,
        }
    }

    pub fn to_chain(&self) -> CurveChain {
        CurveChain::new(
            self.chain
                .iter()
                .map(|n| ChainNode::new(n.label.clone(), n.self_int.0.clone()))
                .collect(),
            self.marker,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarkDoc {
    pub base: String,
    pub section: String,
    pub weight: JsonRational,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceDoc {
    pub genus: u32,
    pub degree: JsonInt,
    #[serde(default)]
    pub marks: Vec<MarkDoc>,
}

impl SurfaceDoc {
    pub fn to_surface(&self) -> Result<ParabolicRuledSurface, SurfaceError> {
        let marks = self
            .marks
            .iter()
            .map(|m| {
                let section = match m.section.as_str() {
                    "zero" => Section::Zero,
                    "infinity" => Section::Infinity,
                    other => {
                        return Err(SurfaceError::InvalidData(format!(
                            "section must be \"zero\" or \"infinity\", got {other:?}"
                        )))
                    }
                };
                Ok(ParabolicMark {
                    base_label: m.base.clone(),
                    section,
                    weight: m.weight.0.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        ParabolicRuledSurface::new(
            OrbifoldRiemannSurface::smooth(self.genus),
            self.degree.0.clone(),
            None,
            ParabolicStructure::new(marks)?,
        )
    }

    pub fn from_surface(m: &ParabolicRuledSurface) -> Self {
        SurfaceDoc {
            genus: m.base.genus,
            degree: JsonInt(m.bundle_degree.clone()),
            marks: m
                .parabolic
                .marks
                .iter()
                .map(|mark| MarkDoc {
                    base: mark.base_label.clone(),
                    section: match mark.section {
                        Section::Zero => "zero".to_string(),
                        Section::Infinity => "infinity".to_string(),
                    },
                    weight: JsonRational(mark.weight.clone()),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigNodeDoc {
    pub label: String,
    pub self_int: JsonInt,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub nodes: Vec<ConfigNodeDoc>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

impl ConfigDoc {
    pub fn to_config(&self) -> Result<CurveConfig, KahlerError> {
        CurveConfig::new(
            self.nodes
                .iter()
                .map(|n| ConfigNode {
                    label: n.label.clone(),
                    self_int: n.self_int.0.clone(),
                })
                .collect(),
            self.edges
                .iter()
                .map(|[a, b]| ConfigEdge {
                    a: a.clone(),
                    b: b.clone(),
                    multiplicity: Int::from(1),
                })
                .collect(),
        )
    }

    pub fn from_config(config: &CurveConfig) -> Self {
        ConfigDoc {
            nodes: config
                .nodes
                .iter()
                .map(|n| ConfigNodeDoc {
                    label: n.label.clone(),
                    self_int: JsonInt(n.self_int.clone()),
                })
                .collect(),
            edges: config
                .edges
                .iter()
                .map(|e| [e.a.clone(), e.b.clone()])
                .collect(),
        }
    }
}

/// `{"label": "sympoly-text", …}`.
pub type VolumesDoc = BTreeMap<String, String>;
