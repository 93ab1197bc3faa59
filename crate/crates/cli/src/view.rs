//! Serializable views of library values. Rationals are printed in canonical
//! `p/q` form and weights by their Dynkin labels, so every emitted weight can
//! be passed back through `--weight`.

use admissible::admissibility::AdmissibleNumberCertificate;
use admissible::classification::{BatteryReport, ModuleFailure, ModuleVerdict, PrWeight};
use admissible::{AdmissibilityFailure, AffineWeight, FiniteRootSystem, RealRoot, Q};
use serde::Serialize;

pub fn q(x: &Q) -> String {
    x.to_string()
}

#[derive(Serialize)]
pub struct WeightView {
    pub finite: Vec<String>,
    pub level: String,
    pub delta: String,
}

impl WeightView {
    pub fn new(rs: &FiniteRootSystem, w: &AffineWeight) -> Self {
        WeightView {
            finite: w.labels(rs).iter().map(q).collect(),
            level: q(&w.level),
            delta: q(&w.delta),
        }
    }

    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}", self.finite.join(","), self.level, self.delta)
    }
}

/// A real root as simple-root coefficients of its finite part plus `n`.
#[derive(Serialize)]
pub struct RootView {
    pub alpha: Vec<i64>,
    pub n: i64,
}

impl RootView {
    pub fn new(rs: &FiniteRootSystem, r: &RealRoot) -> Self {
        RootView {
            alpha: rs.coeffs(r.root).to_vec(),
            n: r.n,
        }
    }

    pub fn tsv(&self) -> String {
        let alpha: Vec<String> = self.alpha.iter().map(i64::to_string).collect();
        format!("[{}]{:+}d", alpha.join(","), self.n)
    }
}

#[derive(Serialize)]
pub struct RootDataView {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub roots: Vec<Vec<String>>,
    pub form: Vec<Vec<String>>,
    pub h: i64,
    pub h_dual: i64,
    pub lacing: i64,
    pub simple_roots: Vec<Vec<String>>,
    pub cartan: Vec<Vec<i64>>,
    pub theta: Vec<String>,
    pub theta_short: Vec<String>,
    pub rho: Vec<String>,
    pub weyl_order: String,
}

impl RootDataView {
    pub fn new(rs: &FiniteRootSystem) -> Self {
        let vec = |v: &admissible::Vector| v.iter().map(q).collect::<Vec<_>>();
        RootDataView {
            lie_type: rs.lie_type().to_string(),
            roots: rs.roots().iter().map(vec).collect(),
            form: rs.form_matrix().iter().map(|row| row.iter().map(q).collect()).collect(),
            h: rs.coxeter_number(),
            h_dual: rs.dual_coxeter_number(),
            lacing: rs.lacing_number(),
            simple_roots: (0..rs.rank()).map(|i| vec(rs.simple_root(i))).collect(),
            cartan: rs.cartan_matrix().to_vec(),
            theta: vec(rs.root(rs.theta())),
            theta_short: vec(rs.root(rs.theta_short())),
            rho: vec(rs.rho()),
            weyl_order: rs.lie_type().weyl_order().to_string(),
        }
    }

    pub fn tsv(&self) -> Vec<String> {
        let vecs = |vs: &[Vec<String>]| vs.iter().map(|v| v.join(",")).collect::<Vec<_>>().join(";");
        let ints = |vs: &[Vec<i64>]| {
            vs.iter()
                .map(|v| v.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join(";")
        };
        vec![
            format!("type\t{}", self.lie_type),
            format!("roots\t{}", vecs(&self.roots)),
            format!("form\t{}", vecs(&self.form)),
            format!("h\t{}", self.h),
            format!("h_dual\t{}", self.h_dual),
            format!("lacing\t{}", self.lacing),
            format!("simple_roots\t{}", vecs(&self.simple_roots)),
            format!("cartan\t{}", ints(&self.cartan)),
            format!("theta\t{}", self.theta.join(",")),
            format!("theta_short\t{}", self.theta_short.join(",")),
            format!("rho\t{}", self.rho.join(",")),
            format!("weyl_order\t{}", self.weyl_order),
        ]
    }
}

#[derive(Serialize)]
pub struct LevelView {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub level: String,
    pub p: i64,
    pub q: i64,
    pub lacing: i64,
    pub case: String,
    pub required: i64,
    pub admissible: bool,
}

impl LevelView {
    pub fn new(rs: &FiniteRootSystem, cert: &AdmissibleNumberCertificate) -> Self {
        LevelView {
            lie_type: rs.lie_type().to_string(),
            level: q(&cert.level.k),
            p: cert.level.p,
            q: cert.level.q,
            lacing: rs.lacing_number(),
            case: cert.level.case.to_string(),
            required: cert.required,
            admissible: cert.admissible,
        }
    }

    pub fn tsv(&self) -> Vec<String> {
        vec![
            "type\tlevel\tp\tq\tlacing\tcase\trequired\tadmissible".to_string(),
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                self.lie_type, self.level, self.p, self.q, self.lacing, self.case, self.required, self.admissible
            ),
        ]
    }
}

#[derive(Serialize)]
pub struct PrEntryView {
    #[serde(flatten)]
    pub weight: WeightView,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<usize>,
}

#[derive(Serialize)]
pub struct WeightSetView {
    pub count: usize,
    pub weights: Vec<PrEntryView>,
}

#[derive(Serialize)]
pub struct EnumerationView {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub level: String,
    pub integral_system: String,
    pub pr_plus: WeightSetView,
    pub pr: WeightSetView,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twists: Option<usize>,
}

impl EnumerationView {
    pub fn weight_set(rs: &FiniteRootSystem, weights: &[AffineWeight]) -> WeightSetView {
        WeightSetView {
            count: weights.len(),
            weights: weights
                .iter()
                .map(|w| PrEntryView {
                    weight: WeightView::new(rs, w),
                    multiplicity: None,
                })
                .collect(),
        }
    }

    pub fn pr_set(rs: &FiniteRootSystem, entries: &[PrWeight], verbose: bool) -> WeightSetView {
        WeightSetView {
            count: entries.len(),
            weights: entries
                .iter()
                .map(|e| PrEntryView {
                    weight: WeightView::new(rs, &e.weight),
                    multiplicity: verbose.then_some(e.multiplicity),
                })
                .collect(),
        }
    }

    pub fn tsv(&self) -> Vec<String> {
        let mut out = vec![format!("count\tpr_plus\t{}", self.pr_plus.count), format!("count\tpr\t{}", self.pr.count)];
        if let Some(t) = self.twists {
            out.push(format!("count\ttwists\t{t}"));
        }
        for (name, set) in [("pr_plus", &self.pr_plus), ("pr", &self.pr)] {
            for e in &set.weights {
                let mut row = format!("{name}\t{}", e.weight.tsv());
                if let Some(m) = e.multiplicity {
                    row.push_str(&format!("\t{m}"));
                }
                out.push(row);
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<RootView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

#[derive(Serialize)]
pub struct FailureView {
    pub check: String,
    pub witness: Witness,
}

impl FailureView {
    pub fn new(rs: &FiniteRootSystem, f: &ModuleFailure) -> Self {
        let empty = Witness {
            root: None,
            value: None,
            found: None,
            expected: None,
        };
        let witness = match f {
            ModuleFailure::Admissibility(AdmissibilityFailure::NotRegularDominant { root, value }) => Witness {
                root: Some(RootView::new(rs, root)),
                value: Some(q(value)),
                ..empty
            },
            ModuleFailure::Admissibility(AdmissibilityFailure::NotSpanning { direction }) => Witness {
                root: Some(RootView {
                    alpha: rs.coeffs(*direction).to_vec(),
                    n: 0,
                }),
                ..empty
            },
            ModuleFailure::NonIsomorphic { found, expected } => Witness {
                found: Some(found.clone()),
                expected: Some(expected.clone()),
                ..empty
            },
        };
        FailureView {
            check: f.check().to_string(),
            witness,
        }
    }

    pub fn tsv(&self) -> String {
        let w = &self.witness;
        let mut parts = Vec::new();
        if let Some(r) = &w.root {
            parts.push(r.tsv());
        }
        if let Some(v) = &w.value {
            parts.push(format!("value={v}"));
        }
        if let (Some(f), Some(e)) = (&w.found, &w.expected) {
            parts.push(format!("found={f} expected={e}"));
        }
        format!("failure\t{}\t{}", self.check, parts.join(" "))
    }
}

#[derive(Serialize)]
pub struct ClassifyView {
    pub weight: WeightView,
    pub is_module: bool,
    pub admissible: bool,
    pub integral_system: String,
    pub expected_system: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple_roots: Option<Vec<RootView>>,
    pub failures: Vec<FailureView>,
}

impl ClassifyView {
    pub fn new(
        rs: &FiniteRootSystem,
        lambda: &AffineWeight,
        verdict: &ModuleVerdict,
        expected: String,
        verbose: bool,
    ) -> Self {
        ClassifyView {
            weight: WeightView::new(rs, lambda),
            is_module: verdict.is_module(),
            admissible: verdict.is_admissible(),
            integral_system: verdict.system().type_name(),
            expected_system: expected,
            simple_roots: verbose.then(|| {
                verdict
                    .system()
                    .simple_roots()
                    .iter()
                    .map(|r| RootView::new(rs, r))
                    .collect()
            }),
            failures: verdict.failures.iter().map(|f| FailureView::new(rs, f)).collect(),
        }
    }

    pub fn tsv(&self) -> Vec<String> {
        let mut out = vec![
            format!("weight\t{}", self.weight.tsv()),
            format!("is_module\t{}", self.is_module),
            format!("admissible\t{}", self.admissible),
            format!("integral_system\t{}", self.integral_system),
            format!("expected_system\t{}", self.expected_system),
        ];
        if let Some(roots) = &self.simple_roots {
            out.extend(roots.iter().map(|r| format!("simple_root\t{}", r.tsv())));
        }
        out.extend(self.failures.iter().map(FailureView::tsv));
        out
    }
}

#[derive(Serialize)]
pub struct ReductionRow {
    pub i: usize,
    pub k_i: String,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl2_admissible: Option<bool>,
}

#[derive(Serialize)]
pub struct BoundView {
    pub i: usize,
    pub value: String,
    pub k_i: String,
    pub dominant: bool,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct BatteryView {
    pub passed: bool,
    pub is_module: bool,
    pub consistent: bool,
    pub bound: Option<BoundView>,
}

#[derive(Serialize)]
pub struct ReduceView {
    pub weight: WeightView,
    pub rows: Vec<ReductionRow>,
    pub battery: Option<BatteryView>,
}

impl ReduceView {
    pub fn from_battery(rs: &FiniteRootSystem, lambda: &AffineWeight, report: &BatteryReport) -> Self {
        let rows = report
            .reduction
            .iter()
            .zip(&report.sl2)
            .map(|(d, c)| ReductionRow {
                i: d.index + 1,
                k_i: q(&d.level),
                label: q(&d.label),
                sl2_admissible: Some(c.passed()),
            })
            .collect();
        ReduceView {
            weight: WeightView::new(rs, lambda),
            rows,
            battery: Some(BatteryView {
                passed: report.passed(),
                is_module: report.is_module,
                consistent: report.consistent(),
                bound: report.bound.as_ref().map(|b| BoundView {
                    i: b.index + 1,
                    value: q(&b.value),
                    k_i: q(&b.level),
                    dominant: b.dominant,
                    passed: b.passed,
                }),
            }),
        }
    }

    pub fn tsv(&self) -> Vec<String> {
        let mut out = vec![format!("weight\t{}", self.weight.tsv()), "i\tk_i\tlabel\tsl2_admissible".to_string()];
        for r in &self.rows {
            let adm = r.sl2_admissible.map_or("-".to_string(), |b| b.to_string());
            out.push(format!("{}\t{}\t{}\t{adm}", r.i, r.k_i, r.label));
        }
        if let Some(b) = &self.battery {
            out.push(format!("battery\tpassed={}\tis_module={}\tconsistent={}", b.passed, b.is_module, b.consistent));
            if let Some(bound) = &b.bound {
                out.push(format!(
                    "bound\ti={}\tvalue={}\tk_i={}\tdominant={}\tpassed={}",
                    bound.i, bound.value, bound.k_i, bound.dominant, bound.passed
                ));
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct OrbitStep {
    pub step: usize,
    pub generator: String,
    pub applied: bool,
    pub weight: WeightView,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocking_root: Option<RootView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocking_value: Option<String>,
}

#[derive(Serialize)]
pub struct OrbitView {
    pub start: WeightView,
    pub start_is_module: bool,
    pub steps: Vec<OrbitStep>,
}

impl OrbitView {
    pub fn tsv(&self) -> Vec<String> {
        let mut out = vec![
            format!("start\t{}\t{}", self.start.tsv(), self.start_is_module),
            "step\tgenerator\tapplied\tfinite\tlevel\tdelta\tblocking".to_string(),
        ];
        for s in &self.steps {
            let blocking = match (&s.blocking_root, &s.blocking_value) {
                (Some(r), Some(v)) => format!("{} value={v}", r.tsv()),
                _ => "-".to_string(),
            };
            out.push(format!("{}\t{}\t{}\t{}\t{blocking}", s.step, s.generator, s.applied, s.weight.tsv()));
        }
        out
    }
}

#[derive(Serialize)]
pub struct SweepRow {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub level: String,
    pub pr_plus: usize,
    pub pr: usize,
}

impl SweepRow {
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.lie_type, self.level, self.pr_plus, self.pr)
    }
}
