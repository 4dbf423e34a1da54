//! Strictly unital ℤ/2-graded A∞ algebras and modules as finite
//! multilinear tables, with relation checking and the k-truncated bar
//! complex ⊕_{j<k} M⊗Ā^{⊗j}⊗N.
//!
//! Sign convention: every summand id^{⊗p} ⊗ μ^q ⊗ id^{⊗r} carries
//! (−1)^♣(−1)^r where ♣ is the mod-2 sum of the plain degrees of the r
//! elements strictly to the right of the μ^q block. This equals the
//! Koszul sign with respect to shifted degree and is validated through
//! d² = 0 on graded data rather than against any external table.

use crate::homology::rank_exact;
use crate::matrix::{Mat, QMat};
use crate::novikov::{qi, Q};
use num::traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Sparse multilinear operation tables: input basis tuple → output combination.
pub type OpTable = BTreeMap<Vec<usize>, Vec<(usize, Q)>>;

#[derive(Debug, Error)]
pub enum AInfError {
    #[error("{structure} failed validation: {summary}")]
    RelationCheckFailed { structure: String, summary: String },
    #[error("bar differential does not square to zero")]
    DifferentialNotSquareZero,
    #[error("malformed table: {0}")]
    MalformedTable(String),
}

/// One failed check: the relation (or unitality constraint) evaluated on
/// `inputs` left the nonzero `residual`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub arity: usize,
    pub inputs: Vec<String>,
    pub residual: String,
}

fn term_sign(suffix_degree: u32, r: usize) -> Q {
    if (suffix_degree as usize + r) % 2 == 0 {
        qi(1)
    } else {
        qi(-1)
    }
}

fn add_into(acc: &mut BTreeMap<usize, Q>, idx: usize, c: Q) {
    let e = acc.entry(idx).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&idx);
    }
}

fn apply_table(ops: &BTreeMap<usize, OpTable>, inputs: &[usize]) -> Vec<(usize, Q)> {
    ops.get(&inputs.len())
        .and_then(|t| t.get(inputs))
        .cloned()
        .unwrap_or_default()
}

fn format_residual(res: &BTreeMap<usize, Q>, names: &[String]) -> String {
    res.iter()
        .map(|(i, c)| format!("{}·{}", c, names[*i]))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Clone, Debug)]
pub struct AInfinityAlgebra {
    pub names: Vec<String>,
    pub degrees: Vec<u8>,
    pub unit: usize,
    /// ops[q] is the μ^q table, q ≥ 1.
    pub ops: BTreeMap<usize, OpTable>,
}

impl AInfinityAlgebra {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Indices of the augmentation complement Ā (everything but the unit).
    pub fn reduced_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| i != self.unit).collect()
    }

    pub fn apply(&self, inputs: &[usize]) -> Vec<(usize, Q)> {
        apply_table(&self.ops, inputs)
    }

    /// μ²(1,a) = μ²(a,1) = a; μ^q with a unit argument vanishes otherwise.
    pub fn check_strict_unitality(&self, q_max: usize) -> Vec<RelationViolation> {
        let mut out = Vec::new();
        for a in 0..self.dim() {
            for inputs in [[self.unit, a], [a, self.unit]] {
                let got: BTreeMap<usize, Q> = self.apply(&inputs).into_iter().collect();
                let want: BTreeMap<usize, Q> = [(a, qi(1))].into_iter().collect();
                if got != want {
                    let mut res = got;
                    add_into(&mut res, a, qi(-1));
                    out.push(RelationViolation {
                        arity: 2,
                        inputs: inputs.iter().map(|&i| self.names[i].clone()).collect(),
                        residual: format_residual(&res, &self.names),
                    });
                }
            }
        }
        for (&q, table) in &self.ops {
            if q == 2 || q > q_max {
                continue;
            }
            for (inputs, outputs) in table {
                if inputs.contains(&self.unit) && !outputs.is_empty() {
                    out.push(RelationViolation {
                        arity: q,
                        inputs: inputs.iter().map(|&i| self.names[i].clone()).collect(),
                        residual: format_residual(&outputs.iter().cloned().collect(), &self.names),
                    });
                }
            }
        }
        out
    }

    /// Σ_{p+q+r=N} (−1)^{♣+r} μ^{p+1+r}(…, μ^q(…), …) over all tuples
    /// from the augmentation complement Ā up to total arity q_max; empty
    /// report means pass. Unit arguments are governed by the strict
    /// unitality check, and the bar differential never feeds the unit to
    /// an operation, so Ā tuples are exactly what d² = 0 relies on.
    pub fn check_ainf_relations(&self, q_max: usize) -> Vec<RelationViolation> {
        let reduced = self.reduced_basis();
        let mut out = Vec::new();
        for n in 1..=q_max {
            for tuple in tuples_from(&reduced, n) {
                let mut res: BTreeMap<usize, Q> = BTreeMap::new();
                for q in 1..=n {
                    for p in 0..=n - q {
                        let r = n - p - q;
                        let suffix_deg: u32 =
                            tuple[n - r..].iter().map(|&i| self.degrees[i] as u32).sum();
                        let sign = term_sign(suffix_deg, r);
                        for (b, c) in self.apply(&tuple[p..p + q]) {
                            let mut outer: Vec<usize> = tuple[..p].to_vec();
                            outer.push(b);
                            outer.extend_from_slice(&tuple[p + q..]);
                            for (o, c2) in self.apply(&outer) {
                                add_into(&mut res, o, sign.clone() * &c * &c2);
                            }
                        }
                    }
                }
                if !res.is_empty() {
                    out.push(RelationViolation {
                        arity: n,
                        inputs: tuple.iter().map(|&i| self.names[i].clone()).collect(),
                        residual: format_residual(&res, &self.names),
                    });
                }
            }
        }
        out
    }

    pub fn validate(&self, q_max: usize) -> Result<(), AInfError> {
        let mut v = self.check_strict_unitality(q_max);
        v.extend(self.check_ainf_relations(q_max));
        if v.is_empty() {
            Ok(())
        } else {
            Err(AInfError::RelationCheckFailed {
                structure: "algebra".into(),
                summary: summarize(&v),
            })
        }
    }
}

fn summarize(v: &[RelationViolation]) -> String {
    let shown: Vec<String> = v
        .iter()
        .take(3)
        .map(|x| format!("arity {} at ({})", x.arity, x.inputs.join(", ")))
        .collect();
    format!("{} violation(s): {}", v.len(), shown.join("; "))
}

fn tuples_from(alphabet: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                alphabet.iter().map(move |&i| {
                    let mut t2 = t.clone();
                    t2.push(i);
                    t2
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModuleSide {
    /// Operations μ^q(m, a₁, …, a_{q−1}).
    Right,
    /// Operations μ^q(a₁, …, a_{q−1}, n).
    Left,
}

#[derive(Clone, Debug)]
pub struct AInfinityModule {
    pub side: ModuleSide,
    pub names: Vec<String>,
    pub degrees: Vec<u8>,
    /// Keys follow the side convention above; the module index sits at
    /// position 0 (Right) or last (Left). Arity 1 is the module differential.
    pub ops: BTreeMap<usize, OpTable>,
}

impl AInfinityModule {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Applies μ^{1+alg.len()} with the module element in its side slot.
    pub fn apply(&self, module_idx: usize, alg: &[usize]) -> Vec<(usize, Q)> {
        let mut key = Vec::with_capacity(alg.len() + 1);
        match self.side {
            ModuleSide::Right => {
                key.push(module_idx);
                key.extend_from_slice(alg);
            }
            ModuleSide::Left => {
                key.extend_from_slice(alg);
                key.push(module_idx);
            }
        }
        apply_table(&self.ops, &key)
    }

    pub fn check_strict_unitality(
        &self,
        alg: &AInfinityAlgebra,
        q_max: usize,
    ) -> Vec<RelationViolation> {
        let mut out = Vec::new();
        for m in 0..self.dim() {
            let got: BTreeMap<usize, Q> = self.apply(m, &[alg.unit]).into_iter().collect();
            let want: BTreeMap<usize, Q> = [(m, qi(1))].into_iter().collect();
            if got != want {
                let mut res = got;
                add_into(&mut res, m, qi(-1));
                out.push(RelationViolation {
                    arity: 2,
                    inputs: vec![self.names[m].clone(), alg.names[alg.unit].clone()],
                    residual: format_residual(&res, &self.names),
                });
            }
        }
        for (&q, table) in &self.ops {
            if q == 2 || q > q_max {
                continue;
            }
            for (inputs, outputs) in table {
                let alg_part: &[usize] = match self.side {
                    ModuleSide::Right => &inputs[1..],
                    ModuleSide::Left => &inputs[..inputs.len() - 1],
                };
                if alg_part.contains(&alg.unit) && !outputs.is_empty() {
                    out.push(RelationViolation {
                        arity: q,
                        inputs: self.describe_key(inputs, alg),
                        residual: format_residual(&outputs.iter().cloned().collect(), &self.names),
                    });
                }
            }
        }
        out
    }

    fn describe_key(&self, key: &[usize], alg: &AInfinityAlgebra) -> Vec<String> {
        key.iter()
            .enumerate()
            .map(|(pos, &i)| {
                let is_module = match self.side {
                    ModuleSide::Right => pos == 0,
                    ModuleSide::Left => pos == key.len() - 1,
                };
                if is_module {
                    self.names[i].clone()
                } else {
                    alg.names[i].clone()
                }
            })
            .collect()
    }

    /// A∞ module relations on all mixed tuples with algebra entries from
    /// Ā, up to total arity q_max.
    pub fn check_module_relations(
        &self,
        alg: &AInfinityAlgebra,
        q_max: usize,
    ) -> Vec<RelationViolation> {
        let reduced = alg.reduced_basis();
        let mut out = Vec::new();
        for n in 1..=q_max {
            for m in 0..self.dim() {
                for word in tuples_from(&reduced, n - 1) {
                    let res = match self.side {
                        ModuleSide::Right => self.relation_residual_right(alg, m, &word, n),
                        ModuleSide::Left => self.relation_residual_left(alg, m, &word, n),
                    };
                    if !res.is_empty() {
                        let mut inputs = match self.side {
                            ModuleSide::Right => vec![self.names[m].clone()],
                            ModuleSide::Left => vec![],
                        };
                        inputs.extend(word.iter().map(|&i| alg.names[i].clone()));
                        if self.side == ModuleSide::Left {
                            inputs.push(self.names[m].clone());
                        }
                        out.push(RelationViolation {
                            arity: n,
                            inputs,
                            residual: format_residual(&res, &self.names),
                        });
                    }
                }
            }
        }
        out
    }

    /// Tuple (m, a₁, …, a_{n−1}).
    fn relation_residual_right(
        &self,
        alg: &AInfinityAlgebra,
        m: usize,
        word: &[usize],
        n: usize,
    ) -> BTreeMap<usize, Q> {
        let mut res = BTreeMap::new();
        for q in 1..=n {
            for p in 0..=n - q {
                let r = n - p - q;
                let suffix = &word[word.len() - r..];
                let suffix_deg: u32 = suffix.iter().map(|&i| alg.degrees[i] as u32).sum();
                let sign = term_sign(suffix_deg, r);
                if p == 0 {
                    // inner block starts at the module element
                    for (m2, c) in self.apply(m, &word[..q - 1]) {
                        for (o, c2) in self.apply(m2, &word[q - 1..]) {
                            add_into(&mut res, o, sign.clone() * &c * &c2);
                        }
                    }
                } else {
                    // inner block lies in the algebra inputs a_p..a_{p+q-1}
                    for (b, c) in alg.apply(&word[p - 1..p - 1 + q]) {
                        let mut outer: Vec<usize> = word[..p - 1].to_vec();
                        outer.push(b);
                        outer.extend_from_slice(&word[p - 1 + q..]);
                        for (o, c2) in self.apply(m, &outer) {
                            add_into(&mut res, o, sign.clone() * &c * &c2);
                        }
                    }
                }
            }
        }
        res
    }

    /// Tuple (a₁, …, a_{n−1}, m).
    fn relation_residual_left(
        &self,
        alg: &AInfinityAlgebra,
        m: usize,
        word: &[usize],
        n: usize,
    ) -> BTreeMap<usize, Q> {
        let mut res = BTreeMap::new();
        for q in 1..=n {
            for p in 0..=n - q {
                let r = n - p - q;
                if r == 0 {
                    // inner block ends at the module element; no suffix
                    let sign = term_sign(0, 0);
                    for (m2, c) in self.apply(m, &word[p..]) {
                        for (o, c2) in self.apply(m2, &word[..p]) {
                            add_into(&mut res, o, sign.clone() * &c * &c2);
                        }
                    }
                } else {
                    // inner block in the algebra; suffix includes the module element
                    let alg_suffix = &word[p + q..];
                    let suffix_deg: u32 = alg_suffix.iter().map(|&i| alg.degrees[i] as u32).sum::<u32>()
                        + self.degrees[m] as u32;
                    let sign = term_sign(suffix_deg, r);
                    for (b, c) in alg.apply(&word[p..p + q]) {
                        let mut outer: Vec<usize> = word[..p].to_vec();
                        outer.push(b);
                        outer.extend_from_slice(alg_suffix);
                        for (o, c2) in self.apply(m, &outer) {
                            add_into(&mut res, o, sign.clone() * &c * &c2);
                        }
                    }
                }
            }
        }
        res
    }

    pub fn validate(&self, alg: &AInfinityAlgebra, q_max: usize) -> Result<(), AInfError> {
        let mut v = self.check_strict_unitality(alg, q_max);
        v.extend(self.check_module_relations(alg, q_max));
        if v.is_empty() {
            Ok(())
        } else {
            Err(AInfError::RelationCheckFailed {
                structure: "module".into(),
                summary: summarize(&v),
            })
        }
    }
}

/// Audit of the vanishing of higher module operations.
#[derive(Clone, Debug, Serialize)]
pub struct VanishingAudit {
    pub passes: bool,
    pub minimal_violating_arity: Option<usize>,
    pub witness: Option<String>,
}

/// True iff the module has μ^j = 0 for 3 ≤ j ≤ q_max; otherwise reports
/// the minimal violating j and the relation tuple (m, x^{⊗j}, 1) that
/// exposes the contradiction for a rank-1 module over the x²=1 algebra.
pub fn module_vanishing_audit(
    module: &AInfinityModule,
    alg: &AInfinityAlgebra,
    q_max: usize,
) -> VanishingAudit {
    for j in 3..=q_max {
        if let Some(table) = module.ops.get(&j) {
            if let Some((key, _)) = table.iter().find(|(_, v)| !v.is_empty()) {
                let m_idx = match module.side {
                    ModuleSide::Right => key[0],
                    ModuleSide::Left => key[key.len() - 1],
                };
                let non_unit = alg
                    .reduced_basis()
                    .first()
                    .map(|&i| alg.names[i].clone())
                    .unwrap_or_else(|| "x".into());
                return VanishingAudit {
                    passes: false,
                    minimal_violating_arity: Some(j),
                    witness: Some(format!(
                        "({}, {}^⊗{}, {})",
                        module.names[m_idx],
                        non_unit,
                        j,
                        alg.names[alg.unit]
                    )),
                };
            }
        }
    }
    VanishingAudit {
        passes: true,
        minimal_violating_arity: None,
        witness: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// ℂ[x]/x² with vanishing module actions of x.
    FormalX2,
    /// ℂ[x]/(x²−1) with μ²(m,x) = ε_m·m, μ²(x,n) = ε_n·n.
    DeformedX2m1,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::FormalX2 => write!(f, "formal_x2"),
            ModelKind::DeformedX2m1 => write!(f, "deformed_x2m1"),
        }
    }
}

/// The two associative model algebras with their rank-1 modules ⟨m⟩, ⟨n⟩.
pub fn build_model(
    model: ModelKind,
    eps_m: i64,
    eps_n: i64,
) -> (AInfinityAlgebra, AInfinityModule, AInfinityModule) {
    assert!(eps_m == 1 || eps_m == -1);
    assert!(eps_n == 1 || eps_n == -1);
    let mut mu2: OpTable = OpTable::new();
    mu2.insert(vec![0, 0], vec![(0, qi(1))]);
    mu2.insert(vec![0, 1], vec![(1, qi(1))]);
    mu2.insert(vec![1, 0], vec![(1, qi(1))]);
    if model == ModelKind::DeformedX2m1 {
        mu2.insert(vec![1, 1], vec![(0, qi(1))]);
    }
    let algebra = AInfinityAlgebra {
        names: vec!["1".into(), "x".into()],
        degrees: vec![0, 0],
        unit: 0,
        ops: [(2, mu2)].into_iter().collect(),
    };

    let mut m_mu2 = OpTable::new();
    m_mu2.insert(vec![0, 0], vec![(0, qi(1))]);
    if model == ModelKind::DeformedX2m1 {
        m_mu2.insert(vec![0, 1], vec![(0, qi(eps_m))]);
    }
    let m_module = AInfinityModule {
        side: ModuleSide::Right,
        names: vec!["m".into()],
        degrees: vec![0],
        ops: [(2, m_mu2)].into_iter().collect(),
    };

    let mut n_mu2 = OpTable::new();
    n_mu2.insert(vec![0, 0], vec![(0, qi(1))]);
    if model == ModelKind::DeformedX2m1 {
        n_mu2.insert(vec![1, 0], vec![(0, qi(eps_n))]);
    }
    let n_module = AInfinityModule {
        side: ModuleSide::Left,
        names: vec!["n".into()],
        degrees: vec![0],
        ops: [(2, n_mu2)].into_iter().collect(),
    };
    (algebra, m_module, n_module)
}

/// One generator m ⊗ a₁ ⊗ … ⊗ a_j ⊗ n of the truncated bar complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BarGenerator {
    pub m: usize,
    pub word: Vec<usize>,
    pub n: usize,
}

pub struct BarComplexInstance {
    pub k: usize,
    pub generators: Vec<BarGenerator>,
    /// Shifted-degree parity of each generator; the differential flips it.
    pub parities: Vec<u8>,
    /// Column s holds d(generator s) in the generator basis.
    pub differential: QMat,
}

pub const DEFAULT_Q_MAX: usize = 8;

/// Builds B_k = ⊕_{j=0}^{k−1} M⊗Ā^{⊗j}⊗N. Inputs are validated first;
/// interior μ^q outputs are projected to Ā through the augmentation.
pub fn build_truncated_bar(
    m_module: &AInfinityModule,
    alg: &AInfinityAlgebra,
    n_module: &AInfinityModule,
    k: usize,
) -> Result<BarComplexInstance, AInfError> {
    assert!(k >= 1, "truncation level must be positive");
    assert_eq!(m_module.side, ModuleSide::Right);
    assert_eq!(n_module.side, ModuleSide::Left);
    alg.validate(DEFAULT_Q_MAX)?;
    m_module.validate(alg, DEFAULT_Q_MAX)?;
    n_module.validate(alg, DEFAULT_Q_MAX)?;

    let reduced = alg.reduced_basis();
    let mut generators = Vec::new();
    for j in 0..k {
        for m in 0..m_module.dim() {
            for word in tuples_from(&reduced, j) {
                for n in 0..n_module.dim() {
                    generators.push(BarGenerator { m, word: word.clone(), n });
                }
            }
        }
    }
    let index: BTreeMap<&BarGenerator, usize> =
        generators.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let parities: Vec<u8> = generators
        .iter()
        .map(|g| {
            let deg: u32 = m_module.degrees[g.m] as u32
                + n_module.degrees[g.n] as u32
                + g.word.iter().map(|&a| alg.degrees[a] as u32).sum::<u32>()
                + g.word.len() as u32;
            (deg % 2) as u8
        })
        .collect();

    let g_count = generators.len();
    let mut diff = QMat::zero(g_count, g_count);
    for (s, g) in generators.iter().enumerate() {
        let j = g.word.len();
        let n_deg = n_module.degrees[g.n] as u32;
        let mut emit = |target: BarGenerator, coeff: Q| {
            let t = *index.get(&target).expect("bar generator stays in basis");
            let cur = diff.at(t, s).clone() + coeff;
            diff.set(t, s, cur);
        };
        // left end: μ_M absorbing m and a prefix of the word
        for s_len in 0..=j {
            let arity = s_len + 1;
            if !m_module.ops.contains_key(&arity) {
                continue;
            }
            let r = (j - s_len) + 1;
            let suffix_deg: u32 = g.word[s_len..]
                .iter()
                .map(|&a| alg.degrees[a] as u32)
                .sum::<u32>()
                + n_deg;
            let sign = term_sign(suffix_deg, r);
            for (m2, c) in m_module.apply(g.m, &g.word[..s_len]) {
                emit(
                    BarGenerator { m: m2, word: g.word[s_len..].to_vec(), n: g.n },
                    sign.clone() * c,
                );
            }
        }
        // interior: μ_A on a contiguous subword, projected to Ā
        for q in 1..=j {
            if !alg.ops.contains_key(&q) {
                continue;
            }
            for i in 0..=j - q {
                let r = (j - i - q) + 1;
                let suffix_deg: u32 = g.word[i + q..]
                    .iter()
                    .map(|&a| alg.degrees[a] as u32)
                    .sum::<u32>()
                    + n_deg;
                let sign = term_sign(suffix_deg, r);
                for (b, c) in alg.apply(&g.word[i..i + q]) {
                    if b == alg.unit {
                        continue;
                    }
                    let mut word: Vec<usize> = g.word[..i].to_vec();
                    word.push(b);
                    word.extend_from_slice(&g.word[i + q..]);
                    emit(BarGenerator { m: g.m, word, n: g.n }, sign.clone() * c);
                }
            }
        }
        // right end: μ_N absorbing a suffix of the word and n
        for s_len in 0..=j {
            let arity = s_len + 1;
            if !n_module.ops.contains_key(&arity) {
                continue;
            }
            let sign = term_sign(0, 0);
            for (n2, c) in n_module.apply(g.n, &g.word[j - s_len..]) {
                emit(
                    BarGenerator { m: g.m, word: g.word[..j - s_len].to_vec(), n: n2 },
                    sign.clone() * c,
                );
            }
        }
    }

    let square = diff.mul_mat(&diff);
    if !square.is_zero_matrix() {
        return Err(AInfError::DifferentialNotSquareZero);
    }
    Ok(BarComplexInstance { k, generators, parities, differential: diff })
}

/// Total homology dimension of the ℤ/2-folded bar complex: the
/// differential flips the shifted-degree parity, so
/// dim H = G − 2·rank(d|even) − 2·rank(d|odd).
pub fn bar_homology(b: &BarComplexInstance) -> usize {
    let g = b.generators.len();
    let mut total_rank = 0;
    for parity in 0..2u8 {
        let cols: Vec<usize> = (0..g).filter(|&i| b.parities[i] == parity).collect();
        if cols.is_empty() {
            continue;
        }
        let sub = Mat::from_fn(g, cols.len(), |i, j| b.differential.at(i, cols[j]).clone());
        total_rank += rank_exact(&sub);
    }
    g - 2 * total_rank
}

// ---------------------------------------------------------------------------
// JSON wire forms: sparse (inputs, output, coeff) entry lists.

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OpEntryJson {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub names: Vec<String>,
    pub degrees: Vec<u8>,
    pub unit: usize,
    pub ops: Vec<OpEntryJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub side: ModuleSide,
    pub names: Vec<String>,
    pub degrees: Vec<u8>,
    pub ops: Vec<OpEntryJson>,
}

fn entries_to_table(entries: &[OpEntryJson]) -> Result<BTreeMap<usize, OpTable>, AInfError> {
    let mut ops: BTreeMap<usize, OpTable> = BTreeMap::new();
    for e in entries {
        let coeff: Q = e
            .coeff
            .parse()
            .map_err(|_| AInfError::MalformedTable(format!("bad coefficient {:?}", e.coeff)))?;
        ops.entry(e.inputs.len())
            .or_default()
            .entry(e.inputs.clone())
            .or_default()
            .push((e.output, coeff));
    }
    Ok(ops)
}

fn table_to_entries(ops: &BTreeMap<usize, OpTable>) -> Vec<OpEntryJson> {
    let mut out = Vec::new();
    for table in ops.values() {
        for (inputs, outputs) in table {
            for (o, c) in outputs {
                out.push(OpEntryJson {
                    inputs: inputs.clone(),
                    output: *o,
                    coeff: c.to_string(),
                });
            }
        }
    }
    out
}

impl AInfinityAlgebra {
    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            names: self.names.clone(),
            degrees: self.degrees.clone(),
            unit: self.unit,
            ops: table_to_entries(&self.ops),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self, AInfError> {
        Ok(AInfinityAlgebra {
            names: j.names.clone(),
            degrees: j.degrees.clone(),
            unit: j.unit,
            ops: entries_to_table(&j.ops)?,
        })
    }
}

impl AInfinityModule {
    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            side: self.side,
            names: self.names.clone(),
            degrees: self.degrees.clone(),
            ops: table_to_entries(&self.ops),
        }
    }

    pub fn from_json(j: &ModuleJson) -> Result<Self, AInfError> {
        Ok(AInfinityModule {
            side: j.side,
            names: j.names.clone(),
            degrees: j.degrees.clone(),
            ops: entries_to_table(&j.ops)?,
        })
    }
}
