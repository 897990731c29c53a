//! Schubert problems as data: the JSON problem format and the solver that
//! dispatches each space kind to the right computation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flag::FlagDescriptor;
use crate::grassmann::{degeneracy_count, tautological_porteous_class, GrassmannianDescriptor};
use crate::halving::{
    intersection_number, real_degeneracy_lower_bound, ClassIndex, ComplexClass, FixedPointSpace,
    HalvingClass, HalvingKind, HalvingSpace, RawIndex,
};
use crate::serial::DecimalInt;

/// Any space a problem can live on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    Complex(FixedPointSpace),
    Halving(HalvingSpace),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum SpaceJson {
    ComplexGrassmannian {
        k: u32,
        n: u32,
    },
    ComplexFlag {
        dims: Vec<u32>,
    },
    RealEvenGrassmannian {
        k: u32,
        n: u32,
    },
    RealEvenFlag {
        dims: Vec<u32>,
    },
    QuaternionicGrassmannian {
        k: u32,
        n: u32,
    },
    QuaternionicFlag {
        dims: Vec<u32>,
    },
    OctonionicFlag {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dims: Option<Vec<u32>>,
    },
}

impl SpaceJson {
    fn build(self) -> Result<SpaceDescriptor> {
        use SpaceDescriptor::{Complex, Halving};
        Ok(match self {
            SpaceJson::ComplexGrassmannian { k, n } => Complex(FixedPointSpace::Grassmannian(
                GrassmannianDescriptor::new(k, n)?,
            )),
            SpaceJson::ComplexFlag { dims } => {
                Complex(FixedPointSpace::Flag(FlagDescriptor::new(dims)?))
            }
            SpaceJson::RealEvenGrassmannian { k, n } => {
                Halving(HalvingSpace::real_even_grassmannian(k, n)?)
            }
            SpaceJson::RealEvenFlag { dims } => Halving(HalvingSpace::real_even_flag(&dims)?),
            SpaceJson::QuaternionicGrassmannian { k, n } => {
                Halving(HalvingSpace::quaternionic_grassmannian(k, n)?)
            }
            SpaceJson::QuaternionicFlag { dims } => {
                Halving(HalvingSpace::quaternionic_flag(&dims)?)
            }
            SpaceJson::OctonionicFlag { dims } => match dims.as_deref() {
                None | Some([1, 1, 1]) => Halving(HalvingSpace::octonionic_flag()),
                Some(other) => {
                    return Err(Error::InvalidSpace(format!(
                        "the only octonionic flag manifold is Fl(O^3), got dims {other:?}"
                    )))
                }
            },
        })
    }

    fn of(space: &SpaceDescriptor) -> Self {
        match space {
            SpaceDescriptor::Complex(FixedPointSpace::Grassmannian(g)) => {
                SpaceJson::ComplexGrassmannian { k: g.k(), n: g.n() }
            }
            SpaceDescriptor::Complex(FixedPointSpace::Flag(f)) => SpaceJson::ComplexFlag {
                dims: f.dims().to_vec(),
            },
            SpaceDescriptor::Halving(h) => match (h.kind(), h.fixed()) {
                (HalvingKind::RealEven, FixedPointSpace::Grassmannian(g)) => {
                    SpaceJson::RealEvenGrassmannian {
                        k: 2 * g.k(),
                        n: 2 * g.n(),
                    }
                }
                (HalvingKind::RealEven, FixedPointSpace::Flag(f)) => SpaceJson::RealEvenFlag {
                    dims: f.dims().iter().map(|d| 2 * d).collect(),
                },
                (HalvingKind::Quaternionic, FixedPointSpace::Grassmannian(g)) => {
                    SpaceJson::QuaternionicGrassmannian { k: g.k(), n: g.n() }
                }
                (HalvingKind::Quaternionic, FixedPointSpace::Flag(f)) => {
                    SpaceJson::QuaternionicFlag {
                        dims: f.dims().to_vec(),
                    }
                }
                (HalvingKind::Octonionic, _) => SpaceJson::OctonionicFlag { dims: None },
            },
        }
    }
}

impl Serialize for SpaceDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpaceJson::of(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpaceDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SpaceJson::deserialize(d)?
            .build()
            .map_err(serde::de::Error::custom)
    }
}

impl SpaceDescriptor {
    /// Dimension in the units the conditions are measured in: complex for
    /// complex spaces, real for halving spaces.
    pub fn dimension(&self) -> u64 {
        match self {
            SpaceDescriptor::Complex(c) => c.dimension(),
            SpaceDescriptor::Halving(h) => h.real_dimension(),
        }
    }

    pub fn parse_index(&self, raw: &RawIndex) -> Result<ClassIndex> {
        match self {
            SpaceDescriptor::Complex(c) => c.parse_index(raw),
            SpaceDescriptor::Halving(h) => h.parse_index(raw),
        }
    }

    /// Codimension of a Schubert index, same units as [`SpaceDescriptor::dimension`].
    pub fn codimension(&self, index: &ClassIndex) -> Result<u64> {
        match self {
            SpaceDescriptor::Complex(c) => c.degree(index),
            SpaceDescriptor::Halving(h) => h.real_codimension(index),
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDescriptor::Complex(c) => write!(f, "{c}"),
            SpaceDescriptor::Halving(h) => write!(f, "{h}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Count,
    Class,
    LowerBound,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(Mode::Count),
            "class" => Ok(Mode::Class),
            "lower_bound" => Ok(Mode::LowerBound),
            other => Err(Error::InvalidProblem(format!("unknown mode {other:?}"))),
        }
    }
}

fn one() -> u32 {
    1
}

/// `count` copies of the Schubert condition `index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Condition {
    pub index: RawIndex,
    #[serde(default = "one")]
    pub count: u32,
}

/// `maps` generic bundle maps `S -> Q` (or `V -> R^n/V`) required to drop rank by `corank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degeneracy {
    pub corank: u32,
    pub maps: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchubertProblem {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub space: SpaceDescriptor,
    #[serde(default)]
    pub conditions: Vec<Condition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<Degeneracy>,
    #[serde(default)]
    pub mode: Mode,
}

/// Integer answer or class expansion.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Number(DecimalInt),
    Class(serde_json::Value),
}

impl Outcome {
    pub fn as_number(&self) -> Option<&BigInt> {
        match self {
            Outcome::Number(n) => Some(&n.0),
            Outcome::Class(_) => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Number(n) => write!(f, "{}", n.0),
            Outcome::Class(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input: SchubertProblem,
    pub mode: Mode,
    pub result: Outcome,
    /// Human-readable text form of the result.
    pub display: String,
    pub provenance: String,
    /// The complex problem a halving problem reduces to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub halved_problem: Option<SchubertProblem>,
}

impl SchubertProblem {
    fn parsed_conditions(&self) -> Result<Vec<(ClassIndex, u32)>> {
        self.conditions
            .iter()
            .enumerate()
            .map(|(pos, c)| {
                if c.count == 0 {
                    return Err(Error::InvalidProblem(format!(
                        "condition {pos} has count 0"
                    )));
                }
                let index = self.space.parse_index(&c.index).map_err(|e| match e {
                    Error::NotADoubleIndex { index } => Error::NotADoubleIndex {
                        index: format!("{index} (condition {pos})"),
                    },
                    other => other,
                })?;
                Ok((index, c.count))
            })
            .collect()
    }

    /// The same conditions on the complex fixed-point space.
    fn halved(
        &self,
        space: &HalvingSpace,
        conditions: &[(ClassIndex, u32)],
    ) -> Result<SchubertProblem> {
        let conditions = conditions
            .iter()
            .map(|(i, count)| {
                Ok(Condition {
                    index: (&space.to_fixed(i)?).into(),
                    count: *count,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SchubertProblem {
            description: None,
            space: SpaceDescriptor::Complex(space.fixed().clone()),
            conditions,
            degeneracy: self.degeneracy.map(|d| Degeneracy {
                corank: d.corank / 2,
                maps: d.maps,
            }),
            mode: Mode::Count,
        })
    }

    fn check_dimension(&self, conditions: &[(ClassIndex, u32)]) -> Result<()> {
        let mut degree = 0u64;
        for (index, count) in conditions {
            degree += self.space.codimension(index)? * *count as u64;
        }
        if degree != self.space.dimension() {
            return Err(Error::DimensionMismatch {
                degree,
                dimension: self.space.dimension(),
            });
        }
        Ok(())
    }
}

fn complex_product(
    space: &FixedPointSpace,
    conditions: &[(ClassIndex, u32)],
) -> Result<ComplexClass> {
    conditions
        .iter()
        .try_fold(ComplexClass::one(space), |acc, (index, count)| {
            acc.multiply(&ComplexClass::schubert(space, index)?.pow(*count))
        })
}

fn class_outcome<T: Serialize + fmt::Display>(class: &T) -> (Outcome, String) {
    (
        Outcome::Class(serde_json::to_value(class).expect("classes serialize")),
        class.to_string(),
    )
}

fn number_outcome(n: BigInt) -> (Outcome, String) {
    let text = n.to_string();
    (Outcome::Number(DecimalInt(n)), text)
}

fn complex_ring_name(space: &FixedPointSpace) -> &'static str {
    match space {
        FixedPointSpace::Grassmannian(_) => "Littlewood-Richardson products in the Schubert basis",
        FixedPointSpace::Flag(_) => {
            "Schubert polynomial products over minimal coset representatives"
        }
    }
}

/// Solve a problem in its own mode.
pub fn solve(problem: &SchubertProblem) -> Result<Report> {
    let conditions = problem.parsed_conditions()?;
    if let Some(deg) = problem.degeneracy {
        return solve_degeneracy(problem, deg, &conditions);
    }
    let mode = problem.mode;
    let (result, display, provenance, halved_problem) = match &problem.space {
        SpaceDescriptor::Complex(space) => {
            let product = complex_product(space, &conditions)?;
            let (result, display) = match mode {
                Mode::Class => class_outcome(&product),
                Mode::Count | Mode::LowerBound => {
                    problem.check_dimension(&conditions)?;
                    number_outcome(product.integrate())
                }
            };
            let provenance = match mode {
                Mode::Class => format!("complex Schubert calculus on {space}: {}", complex_ring_name(space)),
                _ => format!(
                    "complex Schubert calculus on {space}: {}; the count is the point-class coefficient",
                    complex_ring_name(space)
                ),
            };
            (result, display, provenance, None)
        }
        SpaceDescriptor::Halving(space) => {
            let halved = problem.halved(space, &conditions)?;
            let (result, display) = match mode {
                Mode::Class => {
                    let product = conditions.iter().try_fold(
                        HalvingClass::one(space.clone()),
                        |acc, (i, count)| {
                            acc.multiply(&HalvingClass::schubert(space.clone(), i)?.pow(*count))
                        },
                    )?;
                    class_outcome(&product)
                }
                Mode::LowerBound | Mode::Count => {
                    if mode == Mode::Count && space.kind() == HalvingKind::RealEven {
                        return Err(Error::InvalidProblem(
                            "a real problem has no single count; use mode lower_bound".into(),
                        ));
                    }
                    number_outcome(intersection_number(space, &conditions)?.abs())
                }
            };
            (
                result,
                display,
                halving_provenance(space, mode),
                Some(halved),
            )
        }
    };
    Ok(Report {
        input: problem.clone(),
        mode,
        result,
        display,
        provenance,
        halved_problem,
    })
}

fn halving_provenance(space: &HalvingSpace, mode: Mode) -> String {
    let fixed = space.fixed();
    match (space.kind(), mode) {
        (HalvingKind::RealEven, Mode::Class) => format!(
            "real double Schubert classes on {space}: indices halved to {fixed}, multiplied there, doubled back"
        ),
        (HalvingKind::RealEven, _) => format!(
            "real double Schubert problem on {space}: kappa sends sigma_DI to 2^|I| sigma_I on {fixed}; \
             the 2-powers cancel against the point class, so |signed real count| = complex count of the halved problem, \
             a lower bound for the number of real solutions"
        ),
        (HalvingKind::Quaternionic, Mode::Class) => format!(
            "quaternionic Schubert classes on {space}: structure constants of {fixed}"
        ),
        (HalvingKind::Quaternionic, _) => format!(
            "quaternionic Schubert problem on {space}: kappa sends sigma_I to 2^|I| sigma_I on {fixed}; \
             the generic count equals the complex count"
        ),
        (HalvingKind::Octonionic, _) => format!(
            "octonionic flag {space}: kappa sends sigma_w to the quaternionic sigma_w with multiplicity 1; \
             structure constants of {fixed}"
        ),
    }
}

fn solve_degeneracy(
    problem: &SchubertProblem,
    deg: Degeneracy,
    conditions: &[(ClassIndex, u32)],
) -> Result<Report> {
    if !conditions.is_empty() {
        return Err(Error::InvalidProblem(
            "a degeneracy problem takes no Schubert conditions".into(),
        ));
    }
    let (result, display, provenance, halved) = match &problem.space {
        SpaceDescriptor::Complex(FixedPointSpace::Grassmannian(g)) => {
            if deg.corank > g.k().min(g.l()) {
                return Err(Error::InvalidProblem(format!(
                    "corank {} exceeds the rank of Hom(S, Q)",
                    deg.corank
                )));
            }
            let rho = g.k() - deg.corank;
            let (result, display) = match problem.mode {
                Mode::Class => class_outcome(
                    &tautological_porteous_class(*g, g.k(), g.l(), rho)?.pow(deg.maps),
                ),
                _ => number_outcome(degeneracy_count(*g, g.k(), g.l(), rho, deg.maps)?),
            };
            let provenance = format!(
                "Thom-Porteous class of {{rank(S -> Q) <= {rho}}} on {g} from c(Q)/c(S), raised to the number of maps"
            );
            (result, display, provenance, None)
        }
        SpaceDescriptor::Halving(h) if h.kind() == HalvingKind::RealEven => {
            if problem.mode == Mode::Class {
                return Err(Error::InvalidProblem(
                    "class mode is not available for real degeneracy problems".into(),
                ));
            }
            if problem.mode == Mode::Count {
                return Err(Error::InvalidProblem(
                    "a real problem has no single count; use mode lower_bound".into(),
                ));
            }
            let (result, display) =
                number_outcome(real_degeneracy_lower_bound(h, deg.corank, deg.maps)?);
            let provenance = format!(
                "real degeneracy problem on {h}: halved to the Thom-Porteous count on {} with corank {}; \
                 the complex count is a lower bound for the real one",
                h.fixed(),
                deg.corank / 2
            );
            (
                result,
                display,
                provenance,
                Some(problem.halved(h, conditions)?),
            )
        }
        other => {
            return Err(Error::InvalidProblem(format!(
                "degeneracy problems need a complex or real even Grassmannian, got {other}"
            )))
        }
    };
    Ok(Report {
        input: problem.clone(),
        mode: problem.mode,
        result,
        display,
        provenance,
        halved_problem: halved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(json: &str) -> SchubertProblem {
        serde_json::from_str(json).unwrap()
    }

    fn count(json: &str) -> BigInt {
        solve(&parse(json))
            .unwrap()
            .result
            .as_number()
            .unwrap()
            .clone()
    }

    #[test]
    fn paper_problems() {
        assert_eq!(
            count(
                r#"{"space":{"type":"complex_grassmannian","k":4,"n":8},"conditions":[{"index":[2,2],"count":4}]}"#
            ),
            BigInt::from(6)
        );
        assert_eq!(
            count(
                r#"{"space":{"type":"real_even_grassmannian","k":4,"n":8},"conditions":[{"index":[2,2],"count":4}],"mode":"lower_bound"}"#
            ),
            BigInt::from(2)
        );
        assert_eq!(
            count(
                r#"{"space":{"type":"real_even_grassmannian","k":8,"n":16},"conditions":[{"index":[4,4,4,4],"count":4}],"mode":"lower_bound"}"#
            ),
            BigInt::from(6)
        );
        assert_eq!(
            count(
                r#"{"space":{"type":"quaternionic_grassmannian","k":2,"n":4},"conditions":[{"index":[1],"count":4}]}"#
            ),
            BigInt::from(2)
        );
        assert_eq!(
            count(
                r#"{"space":{"type":"real_even_grassmannian","k":4,"n":8},"degeneracy":{"corank":2,"maps":4},"mode":"lower_bound"}"#
            ),
            BigInt::from(32)
        );
        assert_eq!(
            count(
                r#"{"space":{"type":"complex_grassmannian","k":2,"n":4},"degeneracy":{"corank":1,"maps":4}}"#
            ),
            BigInt::from(32)
        );
    }

    #[test]
    fn flag_problems() {
        // three generic divisors σ_{s1}, σ_{s2}, σ_{s1} on Fl(C^3)
        assert_eq!(
            count(
                r#"{"space":{"type":"complex_flag","dims":[1,1,1]},"conditions":[{"index":[2,1,3],"count":2},{"index":[[1],[3],[2]]}]}"#
            ),
            BigInt::from(1)
        );
        assert_eq!(
            count(
                r#"{"space":{"type":"real_even_flag","dims":[2,2,2]},"conditions":[{"index":[[3,4],[1,2],[5,6]],"count":2},{"index":[[1,2],[5,6],[3,4]]}],"mode":"lower_bound"}"#
            ),
            BigInt::from(1)
        );
        assert_eq!(
            count(r#"{"space":{"type":"octonionic_flag"},"conditions":[{"index":[3,2,1]}]}"#),
            BigInt::from(1)
        );
    }

    #[test]
    fn error_classes() {
        let bad = serde_json::from_str::<SchubertProblem>(
            r#"{"space":{"type":"real_even_grassmannian","k":3,"n":8},"conditions":[]}"#,
        );
        assert!(bad.is_err());
        let e = solve(&parse(
            r#"{"space":{"type":"complex_grassmannian","k":2,"n":4},"conditions":[{"index":[1],"count":3}]}"#,
        ))
        .unwrap_err();
        assert!(e.is_problem_error(), "{e}");
        let e = solve(&parse(
            r#"{"space":{"type":"real_even_grassmannian","k":4,"n":8},"conditions":[{"index":[1],"count":16}],"mode":"lower_bound"}"#,
        ))
        .unwrap_err();
        assert!(matches!(e, Error::NotADoubleIndex { .. }), "{e}");
        let e = solve(&parse(
            r#"{"space":{"type":"complex_grassmannian","k":2,"n":4},"conditions":[{"index":[3]}]}"#,
        ))
        .unwrap_err();
        assert!(e.is_schema_error(), "{e}");
    }

    #[test]
    fn class_mode_and_echo() {
        let problem = parse(
            r#"{"space":{"type":"complex_grassmannian","k":2,"n":4},"conditions":[{"index":[1],"count":2}],"mode":"class"}"#,
        );
        let report = solve(&problem).unwrap();
        assert_eq!(report.display, "σ(1,1) + σ(2)");
        let json = serde_json::to_string(&report).unwrap();
        assert!(
            json.starts_with(r#"{"input":{"space":{"type":"complex_grassmannian","k":2,"n":4}"#),
            "{json}"
        );
        assert_eq!(
            serde_json::to_string(&solve(&problem).unwrap()).unwrap(),
            json
        );
    }
}
