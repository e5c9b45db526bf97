//! Density of H = ℤx₁ + … + ℤx_p in ℝ^d (and in ℂⁿ through the real
//! embedding), decided by the rank criterion: H is dense iff stacking any
//! nonzero integer row under the generator matrix raises the rank to d + 1.
//!
//! Exact mode settles the ∀s quantifier completely by solving a rational
//! constraint system derived from the kernel of the generator matrix over
//! ℚ(θ). Float mode searches for a violating s with LLL and can only return
//! height-qualified answers; the verdict vocabulary keeps the two apart.

use crate::config::Tolerances;
use crate::lattice::{self, IntegerRelation, LatticeError};
use crate::linalg::{numeric_rank_kernel, RMatrix};
use crate::number_field::{exact_rank, FieldElement, FieldError, NumberField};
use crate::rational::{format_rational, Rat};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DensityError {
    #[error("integer vector s must be nonzero")]
    ZeroS,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("basis extraction requires p = d + 1 generators, got p = {p}, d = {d}")]
    WrongCardinality { p: usize, d: usize },
    #[error("operation requires a complex-ambient family")]
    NotComplex,
    #[error("operation requires {0} coordinates")]
    WrongMode(&'static str),
    #[error("{0}")]
    InvalidVerdict(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Ambient space of a generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Ambient {
    Real { dim: usize },
    Complex { dim: usize },
}

impl Ambient {
    /// Dimension of the real vector space in which density is decided
    /// (2n for complex ambient).
    pub fn decision_dim(&self) -> usize {
        match self {
            Ambient::Real { dim } => *dim,
            Ambient::Complex { dim } => 2 * dim,
        }
    }
}

/// Exact complex coordinate as a (re, im) pair of field elements.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexExact {
    pub re: FieldElement,
    pub im: FieldElement,
}

/// Coordinate storage of a family: exact (number-field) or float, real or
/// complex. Generators are vectors over the ambient space.
#[derive(Debug, Clone)]
pub enum Coordinates {
    ExactReal {
        field: NumberField,
        vectors: Vec<Vec<FieldElement>>,
    },
    ExactComplex {
        field: NumberField,
        vectors: Vec<Vec<ComplexExact>>,
    },
    FloatReal {
        vectors: Vec<Vec<f64>>,
    },
    FloatComplex {
        vectors: Vec<Vec<Complex64>>,
    },
}

/// p generator vectors of ℝ^d or ℂⁿ with exact or floating coordinates.
#[derive(Debug, Clone)]
pub struct GeneratorFamily {
    ambient: Ambient,
    coords: Coordinates,
}

impl GeneratorFamily {
    pub fn new(ambient: Ambient, coords: Coordinates) -> Result<GeneratorFamily, DensityError> {
        let expected = match ambient {
            Ambient::Real { dim } => dim,
            Ambient::Complex { dim } => dim,
        };
        if expected == 0 {
            return Err(DensityError::DimensionMismatch(
                "ambient dimension must be ≥ 1".into(),
            ));
        }
        let (count, ok) = match (&ambient, &coords) {
            (Ambient::Real { .. }, Coordinates::ExactReal { vectors, .. }) => {
                (vectors.len(), vectors.iter().all(|v| v.len() == expected))
            }
            (Ambient::Complex { .. }, Coordinates::ExactComplex { vectors, .. }) => {
                (vectors.len(), vectors.iter().all(|v| v.len() == expected))
            }
            (Ambient::Real { .. }, Coordinates::FloatReal { vectors }) => {
                (vectors.len(), vectors.iter().all(|v| v.len() == expected))
            }
            (Ambient::Complex { .. }, Coordinates::FloatComplex { vectors }) => {
                (vectors.len(), vectors.iter().all(|v| v.len() == expected))
            }
            _ => {
                return Err(DensityError::DimensionMismatch(
                    "coordinate kind does not match the ambient".into(),
                ))
            }
        };
        if count == 0 {
            return Err(DensityError::DimensionMismatch(
                "a family needs at least one generator".into(),
            ));
        }
        if !ok {
            return Err(DensityError::DimensionMismatch(
                "all generators must have the ambient dimension".into(),
            ));
        }
        if let Coordinates::ExactReal { field, vectors } = &coords {
            for v in vectors {
                for e in v {
                    field.to_float(e)?; // length check doubles as field check
                }
            }
        }
        if let Coordinates::ExactComplex { field, vectors } = &coords {
            for v in vectors {
                for e in v {
                    field.to_float(&e.re)?;
                    field.to_float(&e.im)?;
                }
            }
        }
        Ok(GeneratorFamily { ambient, coords })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coords(&self) -> &Coordinates {
        &self.coords
    }

    /// Number of generators p.
    pub fn generator_count(&self) -> usize {
        match &self.coords {
            Coordinates::ExactReal { vectors, .. } => vectors.len(),
            Coordinates::ExactComplex { vectors, .. } => vectors.len(),
            Coordinates::FloatReal { vectors } => vectors.len(),
            Coordinates::FloatComplex { vectors } => vectors.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(
            self.coords,
            Coordinates::ExactReal { .. } | Coordinates::ExactComplex { .. }
        )
    }

    pub fn is_complex(&self) -> bool {
        matches!(self.ambient, Ambient::Complex { .. })
    }

    /// Stacks Re over Im: generator z ∈ ℂⁿ maps to
    /// (Re z₁ … Re z_n, Im z₁ … Im z_n) ∈ ℝ^{2n}. Density is preserved by
    /// definition of the topology on ℂⁿ ≅ ℝ^{2n}.
    pub fn complex_to_real_embedding(&self) -> Result<GeneratorFamily, DensityError> {
        let Ambient::Complex { dim } = self.ambient else {
            return Err(DensityError::NotComplex);
        };
        let real_ambient = Ambient::Real { dim: 2 * dim };
        let coords = match &self.coords {
            Coordinates::ExactComplex { field, vectors } => Coordinates::ExactReal {
                field: field.clone(),
                vectors: vectors
                    .iter()
                    .map(|v| {
                        v.iter()
                            .map(|c| c.re.clone())
                            .chain(v.iter().map(|c| c.im.clone()))
                            .collect()
                    })
                    .collect(),
            },
            Coordinates::FloatComplex { vectors } => Coordinates::FloatReal {
                vectors: vectors
                    .iter()
                    .map(|v| v.iter().map(|z| z.re).chain(v.iter().map(|z| z.im)).collect())
                    .collect(),
            },
            _ => return Err(DensityError::NotComplex),
        };
        GeneratorFamily::new(real_ambient, coords)
    }

    /// Embeds exact coordinates to floats; float families pass through.
    pub fn to_float(&self) -> Result<GeneratorFamily, DensityError> {
        let coords = match &self.coords {
            Coordinates::ExactReal { field, vectors } => Coordinates::FloatReal {
                vectors: vectors
                    .iter()
                    .map(|v| v.iter().map(|e| field.to_float(e)).collect())
                    .collect::<Result<_, _>>()?,
            },
            Coordinates::ExactComplex { field, vectors } => Coordinates::FloatComplex {
                vectors: vectors
                    .iter()
                    .map(|v| {
                        v.iter()
                            .map(|c| {
                                Ok(Complex64::new(
                                    field.to_float(&c.re)?,
                                    field.to_float(&c.im)?,
                                ))
                            })
                            .collect()
                    })
                    .collect::<Result<_, FieldError>>()?,
            },
            other => other.clone(),
        };
        GeneratorFamily::new(self.ambient, coords)
    }

    /// Change of generators x'_j = Σᵢ Mᵢⱼ xᵢ by an integer matrix M.
    /// Unimodular M preserves the generated subgroup.
    pub fn apply_integer_transform(
        &self,
        m: &[Vec<i64>],
    ) -> Result<GeneratorFamily, DensityError> {
        let p = self.generator_count();
        if m.len() != p || m.iter().any(|row| row.len() != p) {
            return Err(DensityError::DimensionMismatch(format!(
                "transform must be {p}×{p}"
            )));
        }
        let coords = match &self.coords {
            Coordinates::ExactReal { field, vectors } => {
                let dim = vectors[0].len();
                let mut new_vectors = Vec::with_capacity(p);
                for j in 0..p {
                    let mut acc = vec![field.zero(); dim];
                    for (i, vec_i) in vectors.iter().enumerate() {
                        let c = field.from_rational(Rat::from(BigInt::from(m[i][j])));
                        for (slot, e) in acc.iter_mut().zip(vec_i) {
                            *slot = field.add(slot, &field.mul(&c, e)?)?;
                        }
                    }
                    new_vectors.push(acc);
                }
                Coordinates::ExactReal {
                    field: field.clone(),
                    vectors: new_vectors,
                }
            }
            Coordinates::FloatReal { vectors } => {
                let dim = vectors[0].len();
                let mut new_vectors = Vec::with_capacity(p);
                for j in 0..p {
                    let mut acc = vec![0.0; dim];
                    for (i, vec_i) in vectors.iter().enumerate() {
                        for (slot, e) in acc.iter_mut().zip(vec_i) {
                            *slot += m[i][j] as f64 * e;
                        }
                    }
                    new_vectors.push(acc);
                }
                Coordinates::FloatReal {
                    vectors: new_vectors,
                }
            }
            Coordinates::ExactComplex { field, vectors } => {
                let dim = vectors[0].len();
                let mut new_vectors = Vec::with_capacity(p);
                for j in 0..p {
                    let mut acc = vec![
                        ComplexExact {
                            re: field.zero(),
                            im: field.zero()
                        };
                        dim
                    ];
                    for (i, vec_i) in vectors.iter().enumerate() {
                        let c = field.from_rational(Rat::from(BigInt::from(m[i][j])));
                        for (slot, e) in acc.iter_mut().zip(vec_i) {
                            slot.re = field.add(&slot.re, &field.mul(&c, &e.re)?)?;
                            slot.im = field.add(&slot.im, &field.mul(&c, &e.im)?)?;
                        }
                    }
                    new_vectors.push(acc);
                }
                Coordinates::ExactComplex {
                    field: field.clone(),
                    vectors: new_vectors,
                }
            }
            Coordinates::FloatComplex { vectors } => {
                let dim = vectors[0].len();
                let mut new_vectors = Vec::with_capacity(p);
                for j in 0..p {
                    let mut acc = vec![Complex64::new(0.0, 0.0); dim];
                    for (i, vec_i) in vectors.iter().enumerate() {
                        for (slot, e) in acc.iter_mut().zip(vec_i) {
                            *slot += Complex64::new(m[i][j] as f64, 0.0) * e;
                        }
                    }
                    new_vectors.push(acc);
                }
                Coordinates::FloatComplex {
                    vectors: new_vectors,
                }
            }
        };
        GeneratorFamily::new(self.ambient, coords)
    }
}

/// Decision mode recorded in verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecisionMode {
    Exact,
    Float,
}

/// Outcome vocabulary; certified outcomes only come from exact mode,
/// height-qualified ones only from float mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DensityOutcome {
    #[serde(rename = "CERTIFIED_DENSE")]
    CertifiedDense,
    #[serde(rename = "NOT_DENSE")]
    NotDense,
    #[serde(rename = "NOT_DENSE_NUMERIC")]
    NotDenseNumeric,
    #[serde(rename = "DENSE_UP_TO_HEIGHT")]
    DenseUpToHeight,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl DensityOutcome {
    pub fn is_dense_classified(&self) -> bool {
        matches!(
            self,
            DensityOutcome::CertifiedDense | DensityOutcome::DenseUpToHeight
        )
    }

    pub fn is_not_dense_classified(&self) -> bool {
        matches!(
            self,
            DensityOutcome::NotDense | DensityOutcome::NotDenseNumeric
        )
    }
}

/// Diagnostics attached to a verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictNotes {
    pub mode: DecisionMode,
    /// Dimension of the real decision space (2n for complex input).
    pub decision_dim: usize,
    pub generator_count: usize,
    /// Float mode: whether the no-relation claim came from exhaustive
    /// enumeration.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height_bound: Option<u64>,
    /// Float mode: the tolerances in force.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_rank_rel: Option<f64>,
    /// Proper-subspace case: a basis of annihilating functionals showing
    /// the generators span less than the ambient space.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace_witness: Option<Vec<String>>,
    pub detail: String,
}

/// Certified outcome of the rank criterion with proof artifacts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityVerdict {
    pub outcome: DensityOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<IntegerRelation>,
    pub rank_of_x: usize,
    /// Height up to which a float-mode dense verdict holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<u64>,
    pub notes: VerdictNotes,
}

// ---------------------------------------------------------------------------
// exact decision
// ---------------------------------------------------------------------------

fn exact_matrix(vectors: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let d = vectors[0].len();
    let p = vectors.len();
    (0..d)
        .map(|i| (0..p).map(|j| vectors[j][i].clone()).collect())
        .collect()
}

fn transpose_exact(rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let r = rows.len();
    let c = rows[0].len();
    (0..c)
        .map(|j| (0..r).map(|i| rows[i][j].clone()).collect())
        .collect()
}

fn format_element(e: &FieldElement) -> String {
    let parts: Vec<String> = e.coeffs().iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

/// Complete density decision for an exact real family.
///
/// The kernel of the generator matrix X over ℚ(θ) is expanded over the
/// power basis into a rational constraint system on s; a nonzero rational
/// solution clears to a primitive integer relation (re-verified against X
/// exactly), and the absence of solutions certifies density.
pub fn decide_density_exact(family: &GeneratorFamily) -> Result<DensityVerdict, DensityError> {
    let Coordinates::ExactReal { field, vectors } = &family.coords else {
        return Err(DensityError::WrongMode("exact real"));
    };
    let d = family.ambient.decision_dim();
    let p = vectors.len();
    let x_rows = exact_matrix(vectors);
    let rank_info = exact_rank(field, &x_rows)?;
    let rank = rank_info.rank;

    let mut notes = VerdictNotes {
        mode: DecisionMode::Exact,
        decision_dim: d,
        generator_count: p,
        exhaustive: None,
        height_bound: None,
        residual_tol: None,
        numeric_rank_rel: None,
        subspace_witness: None,
        detail: String::new(),
    };

    if rank < d {
        // generators span a proper subspace; the rank condition fails for
        // every s, so no single witness is meaningful
        let functional = exact_rank(field, &transpose_exact(&x_rows))?;
        notes.subspace_witness = Some(
            functional
                .kernel
                .iter()
                .map(|w| {
                    let parts: Vec<String> = w.iter().map(format_element).collect();
                    format!("({})", parts.join(", "))
                })
                .collect(),
        );
        notes.detail = format!(
            "generators span a proper subspace of dimension {rank} < {d}; H cannot be dense"
        );
        return Ok(DensityVerdict {
            outcome: DensityOutcome::NotDense,
            relation: None,
            rank_of_x: rank,
            height: None,
            notes,
        });
    }

    // relation lattice: integer s orthogonal to every kernel vector of X,
    // expanded over the power basis into rational constraints
    let relation_basis: Vec<Vec<BigInt>> = if rank_info.kernel.is_empty() {
        // trivial kernel: every s lies in the row space
        (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                    .collect()
            })
            .collect()
    } else {
        let degree = field.degree();
        let rationals = NumberField::rationals();
        let mut constraint_rows: Vec<Vec<FieldElement>> = Vec::new();
        for v in &rank_info.kernel {
            for t in 0..degree {
                let row: Vec<FieldElement> = v
                    .iter()
                    .map(|e| rationals.from_rational(e.coeffs()[t].clone()))
                    .collect();
                constraint_rows.push(row);
            }
        }
        let solution = exact_rank(&rationals, &constraint_rows)?;
        solution.kernel.iter().map(|w| clear_denominators(w)).collect()
    };

    if relation_basis.is_empty() {
        notes.detail = "no nonzero integer vector lies in the row space; the rank condition \
                        holds for every s"
            .into();
        return Ok(DensityVerdict {
            outcome: DensityOutcome::CertifiedDense,
            relation: None,
            rank_of_x: rank,
            height: None,
            notes,
        });
    }

    let s = lattice::canonical_short_vector(&relation_basis, 0.99)
        .ok_or_else(|| DensityError::Internal("relation basis collapsed to zero".into()))?;

    // re-verify: stacking s must not raise the rank
    let s_elements: Vec<FieldElement> = s
        .iter()
        .map(|e| field.from_rational(Rat::from(e.clone())))
        .collect();
    let mut stacked = x_rows.clone();
    stacked.push(s_elements);
    let stacked_rank = exact_rank(field, &stacked)?.rank;
    if stacked_rank != rank {
        return Err(DensityError::Internal(format!(
            "relation failed exact re-verification: rank went {rank} → {stacked_rank}"
        )));
    }

    let relation = IntegerRelation::from_raw(&s, 0.0)
        .ok_or_else(|| DensityError::Internal("zero relation survived".into()))?;
    notes.detail = format!(
        "integer vector {:?} lies in the row space of the generator matrix",
        relation.s
    );
    Ok(DensityVerdict {
        outcome: DensityOutcome::NotDense,
        relation: Some(relation),
        rank_of_x: rank,
        height: None,
        notes,
    })
}

fn clear_denominators(v: &[FieldElement]) -> Vec<BigInt> {
    // degree-1 elements: single rational coordinate each
    let rats: Vec<Rat> = v.iter().map(|e| e.coeffs()[0].clone()).collect();
    let mut lcm = BigInt::from(1);
    for r in &rats {
        use num_integer::Integer;
        lcm = (&lcm * r.denom()) / lcm.gcd(r.denom());
    }
    rats.iter()
        .map(|r| (r * Rat::from(lcm.clone())).to_integer())
        .collect()
}

// ---------------------------------------------------------------------------
// numeric decision
// ---------------------------------------------------------------------------

fn float_matrix(vectors: &[Vec<f64>]) -> RMatrix {
    let d = vectors[0].len();
    let p = vectors.len();
    RMatrix::from_fn(d, p, |i, j| vectors[j][i])
}

/// Heuristic density decision for a float real family: numeric rank, then
/// LLL relation search up to the height bound.
pub fn decide_density_numeric(
    family: &GeneratorFamily,
    height_bound: u64,
    tol: &Tolerances,
) -> Result<DensityVerdict, DensityError> {
    let Coordinates::FloatReal { vectors } = &family.coords else {
        return Err(DensityError::WrongMode("float real"));
    };
    let d = family.ambient.decision_dim();
    let p = vectors.len();
    let x = float_matrix(vectors);
    let (rank, _) = numeric_rank_kernel(&x, tol.numeric_rank_rel);

    let mut notes = VerdictNotes {
        mode: DecisionMode::Float,
        decision_dim: d,
        generator_count: p,
        exhaustive: None,
        height_bound: Some(height_bound),
        residual_tol: Some(tol.residual_tol),
        numeric_rank_rel: Some(tol.numeric_rank_rel),
        subspace_witness: None,
        detail: String::new(),
    };

    if rank < d {
        let (_, left_kernel) = numeric_rank_kernel(&x.transpose(), tol.numeric_rank_rel);
        notes.subspace_witness = Some(
            (0..left_kernel.ncols())
                .map(|j| {
                    let parts: Vec<String> = (0..left_kernel.nrows())
                        .map(|i| format!("{:.6}", left_kernel[(i, j)]))
                        .collect();
                    format!("({})", parts.join(", "))
                })
                .collect(),
        );
        notes.detail = format!("numeric rank {rank} < {d}: generators span a proper subspace");
        return Ok(DensityVerdict {
            outcome: DensityOutcome::NotDenseNumeric,
            relation: None,
            rank_of_x: rank,
            height: None,
            notes,
        });
    }

    let search = lattice::find_integer_relation(
        &x,
        height_bound,
        tol.lattice_scale,
        tol.residual_tol,
        tol.numeric_rank_rel,
        tol.lll_delta,
    )?;
    notes.exhaustive = Some(search.exhaustive);
    match search.relation {
        Some(relation) => {
            notes.detail = format!(
                "integer relation {:?} found with residual {:.3e}",
                relation.s, relation.residual
            );
            Ok(DensityVerdict {
                outcome: DensityOutcome::NotDenseNumeric,
                relation: Some(relation),
                rank_of_x: rank,
                height: None,
                notes,
            })
        }
        None => {
            notes.detail = if search.exhaustive {
                format!("no integer relation exists up to height {height_bound} (exhaustive)")
            } else {
                format!("no integer relation surfaced up to height {height_bound} (LLL heuristic)")
            };
            Ok(DensityVerdict {
                outcome: DensityOutcome::DenseUpToHeight,
                relation: None,
                rank_of_x: rank,
                height: Some(height_bound),
                notes,
            })
        }
    }
}

/// Dispatcher: embeds complex families, then decides in the family's own
/// mode.
pub fn decide_density(
    family: &GeneratorFamily,
    height_bound: u64,
    tol: &Tolerances,
) -> Result<DensityVerdict, DensityError> {
    let real = if family.is_complex() {
        family.complex_to_real_embedding()?
    } else {
        family.clone()
    };
    if real.is_exact() {
        decide_density_exact(&real)
    } else {
        decide_density_numeric(&real, height_bound, tol)
    }
}

/// True iff rank([X; s]) = d + 1, i.e. this particular s does not defeat
/// the density criterion.
pub fn check_rank_condition_single(
    family: &GeneratorFamily,
    s: &[i64],
    tol: &Tolerances,
) -> Result<bool, DensityError> {
    if s.iter().all(|&v| v == 0) {
        return Err(DensityError::ZeroS);
    }
    let p = family.generator_count();
    if s.len() != p {
        return Err(DensityError::DimensionMismatch(format!(
            "s has length {}, family has {p} generators",
            s.len()
        )));
    }
    let d = family.ambient.decision_dim();
    match &family.coords {
        Coordinates::ExactReal { field, vectors } => {
            let mut rows = exact_matrix(vectors);
            rows.push(
                s.iter()
                    .map(|&v| field.from_rational(Rat::from(BigInt::from(v))))
                    .collect(),
            );
            Ok(exact_rank(field, &rows)?.rank == d + 1)
        }
        Coordinates::FloatReal { vectors } => {
            let x = float_matrix(vectors);
            let mut stacked = RMatrix::zeros(d + 1, p);
            stacked.view_mut((0, 0), (d, p)).copy_from(&x);
            for (j, &v) in s.iter().enumerate() {
                stacked[(d, j)] = v as f64;
            }
            let (rank, _) = numeric_rank_kernel(&stacked, tol.numeric_rank_rel);
            Ok(rank == d + 1)
        }
        _ => Err(DensityError::WrongMode("real (embed complex input first)")),
    }
}

/// For a dense verdict with p = d + 1: every d-subset of the generators
/// must already be a basis of ℝ^d.
pub fn basis_extraction_check(
    family: &GeneratorFamily,
    verdict: &DensityVerdict,
    tol: &Tolerances,
) -> Result<bool, DensityError> {
    if !verdict.outcome.is_dense_classified() {
        return Err(DensityError::InvalidVerdict(
            "basis extraction requires a dense-classified verdict".into(),
        ));
    }
    let d = family.ambient.decision_dim();
    let p = family.generator_count();
    if p != d + 1 {
        return Err(DensityError::WrongCardinality { p, d });
    }
    for removed in 0..p {
        let rank = match &family.coords {
            Coordinates::ExactReal { field, vectors } => {
                let kept: Vec<Vec<FieldElement>> = vectors
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != removed)
                    .map(|(_, v)| v.clone())
                    .collect();
                exact_rank(field, &exact_matrix(&kept))?.rank
            }
            Coordinates::FloatReal { vectors } => {
                let kept: Vec<Vec<f64>> = vectors
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != removed)
                    .map(|(_, v)| v.clone())
                    .collect();
                numeric_rank_kernel(&float_matrix(&kept), tol.numeric_rank_rel).0
            }
            _ => return Err(DensityError::WrongMode("real (embed complex input first)")),
        };
        if rank != d {
            return Ok(false);
        }
    }
    Ok(true)
}
