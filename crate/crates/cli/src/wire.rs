//! JSON encodings of the library's values.
//!
//! Rationals are written as strings `"p/q"` (or `"p"`) and read from either
//! strings or JSON integers. Index lists are 1-based.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use moncross::classify::GermDescriptor;
use moncross::exactla::{format_rational, parse_rational, Matrix, Rational, Subspace};
use moncross::extendiv::Decomposition;
use moncross::families::LinearFamily;
use moncross::monomideal::{SquareFreeIdeal, TypeLambda};
use moncross::poly::SparsePoly;
use moncross::subset::Subset;
use moncross::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => parse_rational(&t).map(Q).map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Q(Rational::from_integer(n.into()))),
        }
    }
}

fn rationals(v: &[Rational]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

fn values(v: &[Q]) -> Vec<Rational> {
    v.iter().map(|q| q.0.clone()).collect()
}

pub fn subset_json(s: Subset) -> Vec<usize> {
    s.to_one_based()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceJson {
    pub basis: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub ambient: usize,
    pub subspaces: Vec<SubspaceJson>,
}

impl FamilyJson {
    pub fn decode(&self) -> Result<LinearFamily> {
        let members = self
            .subspaces
            .iter()
            .map(|s| {
                let rows: Vec<Vec<Rational>> = s.basis.iter().map(|r| values(r)).collect();
                Subspace::canonicalize(&rows, self.ambient)
            })
            .collect::<Result<Vec<_>>>()?;
        LinearFamily::new(self.ambient, members)
    }

    pub fn encode(f: &LinearFamily) -> Self {
        FamilyJson {
            ambient: f.ambient(),
            subspaces: f
                .members()
                .iter()
                .map(|s| SubspaceJson { basis: s.basis().iter().map(|v| rationals(v)).collect() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeJson {
    pub ambient: usize,
    pub components: Vec<Vec<usize>>,
}

impl TypeJson {
    pub fn decode(&self) -> Result<TypeLambda> {
        TypeLambda::from_lists(self.ambient, &self.components)
    }

    pub fn encode(t: &TypeLambda) -> Self {
        TypeJson { ambient: t.ambient(), components: t.components().iter().map(|&c| subset_json(c)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub ambient: usize,
    pub generators: Vec<Vec<usize>>,
}

impl IdealJson {
    pub fn decode(&self) -> Result<SquareFreeIdeal> {
        SquareFreeIdeal::from_lists(self.ambient, &self.generators)
    }

    pub fn encode(i: &SquareFreeIdeal) -> Self {
        IdealJson { ambient: i.ambient(), generators: i.generators().iter().map(|&g| subset_json(g)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: Q,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn decode(&self) -> Result<SparsePoly> {
        SparsePoly::from_terms(self.nvars, self.terms.iter().map(|t| (t.exps.clone(), t.coeff.0.clone())))
    }

    pub fn encode(p: &SparsePoly) -> Self {
        PolyJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson { coeff: Q(c.clone()), exps: m.exps().to_vec() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub sigma: Vec<usize>,
    pub coeff_poly: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub degree: Option<u32>,
    pub entries: Vec<EntryJson>,
}

impl DecompositionJson {
    pub fn encode(d: &Decomposition) -> Self {
        DecompositionJson {
            degree: d.degree,
            entries: d
                .entries
                .iter()
                .map(|(&s, c)| EntryJson { sigma: subset_json(s), coeff_poly: PolyJson::encode(c) })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermDimJson {
    #[serde(rename = "I")]
    pub set: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermJson {
    pub ambient: usize,
    pub tangents: FamilyJson,
    #[serde(default)]
    pub germ_dims: Vec<GermDimJson>,
}

impl GermJson {
    pub fn decode(&self) -> Result<GermDescriptor> {
        if self.tangents.ambient != self.ambient {
            return Err(Error::Input(format!(
                "descriptor in Q^{} with tangents in Q^{}",
                self.ambient, self.tangents.ambient
            )));
        }
        let tangents = self.tangents.decode()?;
        let dims = self
            .germ_dims
            .iter()
            .map(|g| Ok((Subset::from_one_based(&g.set, tangents.len())?, g.dim)))
            .collect::<Result<Vec<_>>>()?;
        GermDescriptor::new(tangents, dims)
    }
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<Q>> {
    m.to_rows().iter().map(|r| rationals(r)).collect()
}

pub fn vector_json(v: &[Rational]) -> Vec<Q> {
    rationals(v)
}
