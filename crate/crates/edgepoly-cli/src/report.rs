//! Report assembly and serialization. Every invocation emits exactly
//! one JSON document; object keys are emitted in sorted order, exact
//! rationals as "p/q" strings.

use std::path::Path;

use edgepoly::facets::{FacetBounds, FacetCertificate, FacetKind};
use edgepoly::neighborly::{ForbiddenWitness, Neighborliness};
use edgepoly::randexp::ExperimentReport;
use edgepoly::skeleton::PolytopeSummary;
use edgepoly::walks::WalkStats;
use edgepoly::Graph;
use num::BigRational;
use serde_json::{json, Value};

pub struct Report {
    command: &'static str,
    input: Value,
    result: Value,
    warnings: Vec<String>,
}

fn rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn edge_str(e: &(usize, usize)) -> String {
    format!("{}-{}", e.0, e.1)
}

fn witness_json(w: &ForbiddenWitness) -> Value {
    match w {
        ForbiddenWitness::EvenCycle(c) => json!({ "type": "even-cycle", "cycle": c }),
        ForbiddenWitness::TwoOddCycles {
            cycle_a,
            cycle_b,
            path,
        } => json!({
            "type": "two-odd-cycles",
            "cycle_a": cycle_a,
            "cycle_b": cycle_b,
            "path": path,
        }),
    }
}

fn facet_json(f: &FacetCertificate) -> Value {
    let kind = match &f.kind {
        FacetKind::Coordinate(i) => json!({ "type": "coordinate", "vertex": i }),
        FacetKind::IndependentSet(a) => json!({ "type": "independent-set", "set": a }),
    };
    json!({
        "kind": kind,
        "coeffs": f.coeffs,
        "tight_edges": f.tight_edges.iter().map(edge_str).collect::<Vec<_>>(),
    })
}

impl Report {
    fn new(command: &'static str, input: Value, result: Value) -> Report {
        Report {
            command,
            input,
            result,
            warnings: Vec::new(),
        }
    }

    pub fn render(&self, pretty: bool) -> String {
        let doc = json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "warnings": self.warnings,
            "version": env!("CARGO_PKG_VERSION"),
        });
        if pretty {
            serde_json::to_string_pretty(&doc).expect("report serialization")
        } else {
            serde_json::to_string(&doc).expect("report serialization")
        }
    }

    pub fn analyze(file: &Path, s: &PolytopeSummary) -> Report {
        Report::new(
            "analyze",
            json!({ "file": file.display().to_string() }),
            json!({
                "n": s.n,
                "e": s.e,
                "dim": s.dim,
                "f0": s.f0,
                "f1": s.f1,
                "edge_bound_ok": s.edge_bound_ok,
                "f1_bound_ok": s.f1_bound_ok,
            }),
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn facets(
        file: &Path,
        max_n: Option<usize>,
        oracle: bool,
        facets: &[FacetCertificate],
        bounds: &FacetBounds,
        oracle_match: Option<bool>,
        warnings: Vec<String>,
    ) -> Report {
        let mut r = Report::new(
            "facets",
            json!({
                "file": file.display().to_string(),
                "max_n": max_n,
                "oracle": oracle,
            }),
            json!({
                "count": facets.len(),
                "dim": bounds.dim,
                "upper_ok": bounds.upper_ok,
                "windmill_lower": bounds.windmill_lower,
                "windmill_claimed": bounds.windmill_claimed.map(|v| v.to_string()),
                "oracle_match": oracle_match,
                "facets": facets.iter().map(facet_json).collect::<Vec<_>>(),
            }),
        );
        r.warnings = warnings;
        r
    }

    pub fn neighborly_at_k(
        file: &Path,
        k: usize,
        verdict: bool,
        witness: Option<&ForbiddenWitness>,
    ) -> Report {
        Report::new(
            "neighborly",
            json!({ "file": file.display().to_string(), "k": k }),
            json!({
                "k_neighborly": verdict,
                "witness": witness.map(witness_json),
            }),
        )
    }

    pub fn neighborly_max(file: &Path, v: Neighborliness) -> Report {
        let result = match v {
            Neighborliness::Simplex => json!({ "simplex": true, "max_k": Value::Null }),
            Neighborliness::K(k) => json!({ "simplex": false, "max_k": k }),
        };
        Report::new(
            "neighborly",
            json!({ "file": file.display().to_string(), "k": Value::Null }),
            result,
        )
    }

    pub fn oracle(file: &Path, face: &str, verdict: bool) -> Report {
        Report::new(
            "oracle",
            json!({ "file": file.display().to_string(), "face": face }),
            json!({ "is_face": verdict }),
        )
    }

    pub fn random(r: &ExperimentReport) -> Report {
        Report::new(
            "random",
            json!({ "n": r.n, "p": r.p, "trials": r.trials, "seed": r.seed }),
            json!({
                "mean_f1": rat(&r.mean_f1),
                "stderr": r.stderr,
                "expected_f1": r.expected_f1,
                "z_score": r.z_score,
            }),
        )
    }

    pub fn walks(
        file: &Path,
        stats: &WalkStats,
        path_count: Option<(usize, usize, u64)>,
        discrepancy: Option<&BigRational>,
    ) -> Report {
        Report::new(
            "walks",
            json!({ "file": file.display().to_string(), "k": stats.k }),
            json!({
                "total": stats.total.to_string(),
                "nu": rat(&stats.nu),
                "moore_bound": stats.moore_bound.as_ref().map(rat),
                "bound_holds": stats.bound_holds,
                "paths": path_count.map(|(u, v, c)| json!({ "u": u, "v": v, "count": c })),
                "discrepancy": discrepancy.map(rat),
            }),
        )
    }

    pub fn generate(kind: &str, params: &[String], out: &Path, g: &Graph) -> Report {
        Report::new(
            "generate",
            json!({
                "kind": kind,
                "params": params,
                "out": out.display().to_string(),
            }),
            json!({ "n": g.n(), "e": g.edge_count() }),
        )
    }
}
