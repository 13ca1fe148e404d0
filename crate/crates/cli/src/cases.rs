//! Case dispatch: one JSON payload in, one JSON report out.

use clap::ValueEnum;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use moncross::classify::{is_monomial_singularity, multiplicity, type_invariant_with_budget, SingularityWitness};
use moncross::extendiv::{divide_on_crossings, extend_inclusion_exclusion, lemma_easy_split, loss_constant, PiecewisePoly};
use moncross::families::{
    adapted_basis, build_isomorphism, coordinate_model, extremality, families_equivalent, load_of_collection,
    load_signature, sperner_bound, DEFAULT_PERMUTATION_BUDGET,
};
use moncross::monomideal::{associated_monomials, ideal_membership, prime_decomposition, raw_product_count, zero_set};
use moncross::subset::Subset;
use moncross::Error;

use crate::wire::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Extremal,
    Basis,
    Load,
    Signature,
    Equiv,
    Iso,
    Model,
    Ideal,
    DecomposePrimes,
    Zeroset,
    Member,
    Extend,
    Split,
    Divide,
    Classify,
    Multiplicity,
    TypeEquiv,
    Bound,
    Loss,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub fold_minimal: bool,
    pub reorder: bool,
    pub divisor: bool,
}

/// Guards on the exponential routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    #[serde(default = "default_m")]
    pub m: usize,
    #[serde(default = "default_s")]
    pub s: usize,
    #[serde(default = "default_perm")]
    pub perm: u64,
}

fn default_m() -> usize {
    12
}

fn default_s() -> usize {
    12
}

fn default_perm() -> u64 {
    DEFAULT_PERMUTATION_BUDGET
}

impl Default for Limits {
    fn default() -> Self {
        Limits { m: default_m(), s: default_s(), perm: default_perm() }
    }
}

impl std::str::FromStr for Limits {
    type Err = String;

    /// `m=…,s=…,perm=…`, any subset of the keys.
    fn from_str(text: &str) -> Result<Self, String> {
        let mut limits = Limits::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let bad = |_| format!("bad value for {key}: {value:?}");
            match key.trim() {
                "m" => limits.m = value.trim().parse().map_err(bad)?,
                "s" => limits.s = value.trim().parse().map_err(bad)?,
                "perm" => limits.perm = value.trim().parse().map_err(bad)?,
                other => return Err(format!("unknown limit {other:?}")),
            }
        }
        Ok(limits)
    }
}

#[derive(Debug)]
pub enum Failure {
    Schema(String),
    Core(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Schema(_) | Failure::Core(Error::Input(_)) => 2,
            Failure::Core(Error::Precondition(_)) => 3,
            Failure::Core(Error::Resource(_)) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Schema(m) => write!(f, "malformed input: {m}"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome<T> = Result<T, Failure>;

// Case payloads.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LoadCase {
    family: FamilyJson,
    collection: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyPair {
    left: FamilyJson,
    right: FamilyJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IsoCase {
    source: FamilyJson,
    target: FamilyJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MemberCase {
    ideal: IdealJson,
    poly: PolyJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtendCase {
    #[serde(rename = "type")]
    lambda: TypeJson,
    pieces: Vec<PolyJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitCase {
    poly: PolyJson,
    var: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DivideCase {
    #[serde(rename = "type")]
    lambda: TypeJson,
    poly: PolyJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TypePair {
    left: TypeJson,
    right: TypeJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundCase {
    m: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LossCase {
    m: u64,
    n: u64,
}

// Reports.

fn is_none<T>(v: &Option<T>) -> bool {
    v.is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelJson {
    pub level: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtremalReport {
    pub result: bool,
    #[serde(default, skip_serializing_if = "is_none")]
    pub level: Option<usize>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub lhs: Option<usize>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub rhs: Option<usize>,
}

impl ExtremalReport {
    pub fn new(failure: Option<LevelJson>) -> Self {
        ExtremalReport {
            result: failure.is_none(),
            level: failure.as_ref().map(|c| c.level),
            lhs: failure.as_ref().map(|c| c.lhs),
            rhs: failure.as_ref().map(|c| c.rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    #[serde(rename = "I")]
    pub set: Vec<usize>,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisReport {
    pub result: bool,
    #[serde(default, skip_serializing_if = "is_none")]
    pub basis: Option<Vec<Vec<Q>>>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub blocks: Option<Vec<BlockJson>>,
    #[serde(default, skip_serializing_if = "is_none")]
    pub witness: Option<LevelJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountReport {
    pub result: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoolReport {
    pub result: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightJson {
    #[serde(rename = "I")]
    pub set: Vec<usize>,
    pub w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureReport {
    pub result: Vec<WeightJson>,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivReport {
    pub result: bool,
    /// `permutation[i]` is the member of the right family matched with
    /// member `i + 1` of the left one.
    #[serde(default, skip_serializing_if = "is_none")]
    pub permutation: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixReport {
    pub result: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeReport {
    pub result: TypeJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealReport {
    pub result: IdealJson,
    /// Number of choices of one variable per component, before
    /// deduplication and minimalization.
    pub products: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimesReport {
    pub result: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyReport {
    pub result: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitReport {
    pub f1: PolyJson,
    pub g: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivideReport {
    pub result: DecompositionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WitnessJson {
    NonExtremal {
        level: usize,
        lhs: usize,
        rhs: usize,
    },
    Mismatch {
        #[serde(rename = "I")]
        set: Vec<usize>,
        germ: usize,
        tangent: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub result: bool,
    #[serde(default, skip_serializing_if = "is_none")]
    pub witness: Option<WitnessJson>,
}

fn parse<T: DeserializeOwned>(value: Value) -> Outcome<T> {
    serde_json::from_value(value).map_err(|e| Failure::Schema(e.to_string()))
}

fn emit<T: Serialize>(report: T) -> Outcome<Value> {
    Ok(serde_json::to_value(report).expect("reports serialize"))
}

/// Split off the common `seed` and `limits` fields.
fn envelope(mut value: Value, limits: Limits) -> Outcome<(Value, Limits)> {
    let Value::Object(map) = &mut value else {
        return Err(Failure::Schema("a case must be a JSON object".into()));
    };
    if let Some(seed) = map.remove("seed") {
        if !seed.is_u64() {
            return Err(Failure::Schema("seed must be a nonnegative integer".into()));
        }
    }
    let limits = match map.remove("limits") {
        Some(l) => parse::<Limits>(l)?,
        None => limits,
    };
    Ok((value, limits))
}

impl Limits {
    fn ambient(&self, m: usize) -> Outcome<()> {
        if m > self.m {
            return Err(Error::Resource(format!("ambient dimension {m} exceeds the limit {}", self.m)).into());
        }
        Ok(())
    }

    fn members(&self, s: usize) -> Outcome<()> {
        if s > self.s {
            return Err(Error::Resource(format!("{s} components exceed the limit {}", self.s)).into());
        }
        Ok(())
    }

    fn family(&self, f: &FamilyJson) -> Outcome<()> {
        self.ambient(f.ambient)?;
        self.members(f.subspaces.len())
    }

    fn lambda(&self, t: &TypeJson) -> Outcome<()> {
        self.ambient(t.ambient)?;
        self.members(t.components.len())
    }
}

fn level_json(c: moncross::families::LevelCheck) -> LevelJson {
    LevelJson { level: c.level, lhs: c.lhs, rhs: c.rhs }
}

/// Run one case. `limits` applies unless the case carries its own.
pub fn run_case(command: Command, value: Value, flags: Flags, limits: Limits) -> Outcome<Value> {
    let (value, limits) = envelope(value, limits)?;
    match command {
        Command::Extremal => {
            let f: FamilyJson = parse(value)?;
            limits.family(&f)?;
            let failure = extremality(&f.decode()?).first_failure().map(level_json);
            emit(ExtremalReport::new(failure))
        }
        Command::Basis => {
            let f: FamilyJson = parse(value)?;
            limits.family(&f)?;
            let family = f.decode()?;
            let report = match adapted_basis(&family) {
                Some(b) => BasisReport {
                    result: true,
                    basis: Some(b.vectors.iter().map(|v| vector_json(v)).collect()),
                    blocks: Some(
                        b.blocks
                            .iter()
                            .map(|(i, r)| BlockJson { set: subset_json(*i), start: r.start, len: r.len() })
                            .collect(),
                    ),
                    witness: None,
                },
                None => BasisReport {
                    result: false,
                    basis: None,
                    blocks: None,
                    witness: extremality(&family).first_failure().map(level_json),
                },
            };
            emit(report)
        }
        Command::Load => {
            let c: LoadCase = parse(value)?;
            limits.family(&c.family)?;
            let family = c.family.decode()?;
            let collection = c
                .collection
                .iter()
                .map(|i| Subset::from_one_based(i, family.len()))
                .collect::<Result<Vec<_>, _>>()?;
            emit(CountReport { result: load_of_collection(&family, &collection)? as u128 })
        }
        Command::Signature => {
            let f: FamilyJson = parse(value)?;
            limits.family(&f)?;
            let sig = load_signature(&f.decode()?)?;
            emit(SignatureReport {
                result: sig.entries().map(|(i, w)| WeightJson { set: subset_json(i), w }).collect(),
                total: sig.total(),
            })
        }
        Command::Equiv => {
            let c: FamilyPair = parse(value)?;
            limits.family(&c.left)?;
            limits.family(&c.right)?;
            let found = families_equivalent(&c.left.decode()?, &c.right.decode()?, flags.reorder, limits.perm)?;
            emit(EquivReport {
                result: found.is_some(),
                permutation: found.map(|p| p.iter().map(|j| j + 1).collect()),
            })
        }
        Command::Iso => {
            let c: IsoCase = parse(value)?;
            limits.family(&c.source)?;
            limits.family(&c.target)?;
            let f = build_isomorphism(&c.source.decode()?, &c.target.decode()?)?;
            emit(MatrixReport { result: matrix_json(&f) })
        }
        Command::Model => {
            let f: FamilyJson = parse(value)?;
            limits.family(&f)?;
            emit(TypeReport { result: TypeJson::encode(&coordinate_model(&f.decode()?)?) })
        }
        Command::Ideal => {
            let t: TypeJson = parse(value)?;
            limits.lambda(&t)?;
            let lambda = t.decode()?;
            emit(IdealReport {
                result: IdealJson::encode(&associated_monomials(&lambda)),
                products: raw_product_count(&lambda),
            })
        }
        Command::DecomposePrimes => {
            let i: IdealJson = parse(value)?;
            limits.ambient(i.ambient)?;
            let primes = prime_decomposition(&i.decode()?);
            emit(PrimesReport { result: primes.into_iter().map(subset_json).collect() })
        }
        Command::Zeroset => {
            let i: IdealJson = parse(value)?;
            limits.ambient(i.ambient)?;
            emit(TypeReport { result: TypeJson::encode(&zero_set(&i.decode()?)) })
        }
        Command::Member => {
            let c: MemberCase = parse(value)?;
            limits.ambient(c.ideal.ambient)?;
            emit(BoolReport { result: ideal_membership(&c.poly.decode()?, &c.ideal.decode()?)? })
        }
        Command::Extend => {
            let c: ExtendCase = parse(value)?;
            limits.lambda(&c.lambda)?;
            let pieces = c.pieces.iter().map(PolyJson::decode).collect::<Result<Vec<_>, _>>()?;
            let data = PiecewisePoly::new(c.lambda.decode()?, pieces)?;
            emit(PolyReport { result: PolyJson::encode(&extend_inclusion_exclusion(&data)?) })
        }
        Command::Split => {
            let c: SplitCase = parse(value)?;
            limits.ambient(c.poly.nvars)?;
            let f = c.poly.decode()?;
            if c.var == 0 || c.var > f.nvars() {
                return Err(Error::Input(format!("variable {} outside 1..={}", c.var, f.nvars())).into());
            }
            let (f1, g) = lemma_easy_split(&f, c.var - 1)?;
            emit(SplitReport { f1: PolyJson::encode(&f1), g: PolyJson::encode(&g) })
        }
        Command::Divide => {
            let c: DivideCase = parse(value)?;
            limits.lambda(&c.lambda)?;
            let d = divide_on_crossings(&c.lambda.decode()?, &c.poly.decode()?, flags.fold_minimal)?;
            emit(DivideReport { result: DecompositionJson::encode(&d) })
        }
        Command::Classify => {
            let g: GermJson = parse(value)?;
            limits.family(&g.tangents)?;
            let (result, witness) = is_monomial_singularity(&g.decode()?);
            let witness = witness.map(|w| match w {
                SingularityWitness::NonExtremal(c) => WitnessJson::NonExtremal { level: c.level, lhs: c.lhs, rhs: c.rhs },
                SingularityWitness::Mismatch { set, germ, tangent } => {
                    WitnessJson::Mismatch { set: subset_json(set), germ, tangent }
                }
            });
            emit(ClassifyReport { result, witness })
        }
        Command::Multiplicity => {
            let t: TypeJson = parse(value)?;
            limits.lambda(&t)?;
            emit(CountReport { result: multiplicity(&t.decode()?)? as u128 })
        }
        Command::TypeEquiv => {
            let c: TypePair = parse(value)?;
            limits.lambda(&c.left)?;
            limits.lambda(&c.right)?;
            let (a, b) = (c.left.decode()?, c.right.decode()?);
            let result = a.ambient() == b.ambient()
                && a.len() == b.len()
                && type_invariant_with_budget(&a, limits.perm)? == type_invariant_with_budget(&b, limits.perm)?;
            emit(BoolReport { result })
        }
        Command::Bound => {
            let c: BoundCase = parse(value)?;
            emit(CountReport { result: sperner_bound(c.m)? })
        }
        Command::Loss => {
            let c: LossCase = parse(value)?;
            emit(CountReport { result: loss_constant(c.m, c.n, flags.divisor)? })
        }
    }
}
