//! Case specifications: which real form, which highest weight, which checks.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use hermsig::oracle::DEFAULT_EXPLICIT_CAP;
use hermsig::realform::{parse_diagram, RealFormData, VoganDiagram};
use hermsig::rootsys::{build_root_system, CartanType, RootSystem, Weight};
use hermsig::{Error, ErrorClass};

/// Failure of a case, with the exit-code class and the case it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseError {
    pub class: ErrorClass,
    pub context: String,
    pub message: String,
}

impl CaseError {
    pub fn input(context: impl Into<String>, message: impl Into<String>) -> Self {
        CaseError { class: ErrorClass::Input, context: context.into(), message: message.into() }
    }

    pub fn from_core(context: impl Into<String>, e: Error) -> Self {
        CaseError { class: e.class(), context: context.into(), message: e.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.class {
            ErrorClass::Input => 2,
            ErrorClass::Unsupported => 3,
            ErrorClass::Internal => 4,
        }
    }
}

impl fmt::Display for CaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.context.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.context, self.message)
        }
    }
}

impl std::error::Error for CaseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    #[default]
    Fundamental,
    SimpleRoot,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Fundamental => "fundamental",
            Basis::SimpleRoot => "simple-root",
        })
    }
}

/// A preset name or an explicit Vogan diagram (1-based nodes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Explicit {
        cartan_type: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        involution: Option<Vec<usize>>,
        #[serde(default)]
        painted: Vec<usize>,
    },
}

impl GroupSpec {
    pub fn display(&self) -> String {
        match self {
            GroupSpec::Name(n) => n.clone(),
            GroupSpec::Explicit { .. } => match self.diagram() {
                Ok((_, d)) => d.spec_string(),
                Err(_) => format!("{self:?}"),
            },
        }
    }

    fn diagram(&self) -> Result<(Option<String>, VoganDiagram), Error> {
        match self {
            GroupSpec::Name(n) => parse_diagram(n),
            GroupSpec::Explicit { cartan_type, involution, painted } => {
                let ct: CartanType = cartan_type.parse()?;
                let one_based = |v: &[usize], what: &str| -> Result<Vec<usize>, Error> {
                    v.iter()
                        .map(|&i| i.checked_sub(1).ok_or_else(|| Error::InvalidType(format!("{what} node 0; nodes are 1-based"))))
                        .collect()
                };
                let inv = match involution {
                    Some(v) => one_based(v, "involution")?,
                    None => (0..ct.rank()).collect(),
                };
                Ok((None, VoganDiagram::new(ct, inv, one_based(painted, "painted")?)?))
            }
        }
    }

    pub fn resolve(&self) -> Result<(RootSystem, RealFormData), CaseError> {
        let ctx = self.display();
        let (name, vd) = self.diagram().map_err(|e| CaseError::from_core(&ctx, e))?;
        let rs = build_root_system(vd.cartan_type()).map_err(|e| CaseError::from_core(&ctx, e))?;
        let mut rf = RealFormData::new(&vd, &rs).map_err(|e| CaseError::from_core(&ctx, e))?;
        rf.name = name;
        Ok((rs, rf))
    }
}

/// `"adjoint"`, `"zero"`, `"rho"`, a comma list `"1,0,1"`, or an integer array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Coords(Vec<i64>),
    Text(String),
}

impl WeightSpec {
    pub fn display(&self) -> String {
        match self {
            WeightSpec::Coords(c) => c.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            WeightSpec::Text(s) => s.clone(),
        }
    }

    /// The highest weight in simple-root coordinates; must be dominant integral.
    pub fn resolve(&self, rs: &RootSystem, basis: Basis) -> Result<Weight, CaseError> {
        let ctx = format!("weight {}", self.display());
        let coords: Vec<i64> = match self {
            WeightSpec::Coords(c) => c.clone(),
            WeightSpec::Text(s) => match s.trim().to_lowercase().as_str() {
                "adjoint" => {
                    return rs.highest_root().ok_or_else(|| {
                        CaseError::input(&ctx, format!("{} is not simple; give the adjoint weight explicitly", rs.cartan_type()))
                    })
                }
                "zero" | "trivial" | "0" => return Ok(Weight::zero(rs.rank())),
                "rho" => return Ok(rs.rho().clone()),
                t => t
                    .split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CaseError::input(&ctx, "expected integers separated by commas, or adjoint/zero/rho"))?,
            },
        };
        if coords.len() != rs.rank() {
            return Err(CaseError::from_core(&ctx, Error::RankMismatch { expected: rs.rank(), got: coords.len() }));
        }
        let w = match basis {
            Basis::Fundamental => rs.from_fundamental_ints(&coords),
            Basis::SimpleRoot => Weight::from_ints(&coords),
        };
        if !rs.is_dominant_integral(&w) {
            return Err(CaseError::from_core(&ctx, Error::NonDominant(format!("{w} is not dominant integral"))));
        }
        Ok(w)
    }
}

fn default_true() -> bool {
    true
}

fn default_cap() -> u128 {
    DEFAULT_EXPLICIT_CAP
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseOptions {
    #[serde(default = "default_true")]
    pub run_oracles: bool,
    /// Oracles are skipped above this dimension; the matrix oracle is also capped at 200.
    #[serde(default = "default_cap")]
    pub dim_cap: u128,
    #[serde(default)]
    pub timing: bool,
}

impl Default for CaseOptions {
    fn default() -> Self {
        CaseOptions { run_oracles: true, dim_cap: default_cap(), timing: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseSpec {
    pub group: GroupSpec,
    pub weight: WeightSpec,
    #[serde(default)]
    pub basis: Basis,
    #[serde(default)]
    pub options: CaseOptions,
}

/// A partially specified case read from a file; command-line flags fill or override it.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub group: Option<GroupSpec>,
    pub weight: Option<WeightSpec>,
    pub basis: Option<Basis>,
    #[serde(default)]
    pub options: CaseFileOptions,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFileOptions {
    pub run_oracles: Option<bool>,
    pub dim_cap: Option<u128>,
    pub timing: Option<bool>,
}

impl CaseFile {
    pub fn parse(text: &str) -> Result<Self, CaseError> {
        toml::from_str(text).map_err(|e| CaseError::input("case file", e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CaseError> {
        let text = std::fs::read_to_string(path).map_err(|e| CaseError::input(path.display().to_string(), e.to_string()))?;
        Self::parse(&text).map_err(|e| CaseError { context: path.display().to_string(), ..e })
    }
}

/// Values given on the command line; `None` leaves the file value (or the default) in place.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub group: Option<String>,
    pub weight: Option<String>,
    pub basis: Option<Basis>,
    pub run_oracles: Option<bool>,
    pub dim_cap: Option<u128>,
    pub timing: Option<bool>,
}

pub fn merge(file: CaseFile, flags: Overrides) -> Result<CaseSpec, CaseError> {
    let group = flags
        .group
        .map(GroupSpec::Name)
        .or(file.group)
        .ok_or_else(|| CaseError::input("", "no group given (use --group or a case file)"))?;
    let weight = flags
        .weight
        .map(WeightSpec::Text)
        .or(file.weight)
        .ok_or_else(|| CaseError::input("", "no highest weight given (use --weight or a case file)"))?;
    let d = CaseOptions::default();
    Ok(CaseSpec {
        group,
        weight,
        basis: flags.basis.or(file.basis).unwrap_or_default(),
        options: CaseOptions {
            run_oracles: flags.run_oracles.or(file.options.run_oracles).unwrap_or(d.run_oracles),
            dim_cap: flags.dim_cap.or(file.options.dim_cap).unwrap_or(d.dim_cap),
            timing: flags.timing.or(file.options.timing).unwrap_or(d.timing),
        },
    })
}
