use serde_json::{json, Value};

use crate::algebra::{format_rational, Rational};
use crate::amplitude::{amplitude_pk, catalan_number, find_frame, Backend, GaugeUsed};
use crate::cyclic_points::{
    binomial, count_lyndon, enumerate_aperiodic_classes, FixedPointLabel, SolutionConfiguration,
};
use crate::error::{Error, Result};
use crate::kinematics::{pk_point, KinematicPoint};
use crate::polytopes::{duality_check, newton_polytope_check, pi_polytope, root_polytope, Polytope};
use crate::tropical::evaluate_amplitude;
use crate::verification::{verify_suite, CheckStatus, SuiteOptions};

use super::{check_kn, AmplitudeArgs, KnArgs, Method, PolytopeArgs, Report, VerifyArgs, Which};

const MAX_CLASSES: u128 = 200_000;
const MAX_EXACT_COORDS: usize = 36;
const MAX_FLOAT_COORDS: usize = 80;
const MAX_FRAME_SEARCH: usize = 40;
const MAX_TROPICAL_DIM: usize = 9;
const MAX_POLYTOPE_DIM: usize = 9;
const MAX_PI_LATTICE_BINOMIAL: u128 = 150;
const MAX_VERIFY_COORDS: usize = 44;

fn limit(what: &str, detail: String) -> Error {
    Error::ResourceLimit(format!("{what}: {detail}; see --limits"))
}

fn labels_json(labels: &[FixedPointLabel], reduced: bool) -> Value {
    Value::Array(labels.iter().map(|l| json!(if reduced { l.reduced() } else { l.exponents() })).collect())
}

/// Recommended desk-scale bounds and typical single-core runtimes.
pub fn limits_table() -> Report {
    let rows: Vec<[&str; 3]> = vec![
        ["fixed-points", "Lyndon count <= 200000", "(6,24): < 1 s; (5,30): ~1 s"],
        ["amplitude --method solutions --backend exact", "(k-1)n <= 36", "(4,8): 0.1 s; (4,9): 0.4 s"],
        ["amplitude --method solutions --backend float", "(k-1)n <= 80", "(4,12): < 1 s; (5,16): ~3 s; (7,12): ~1 min"],
        ["amplitude --method tropical", "(k-1)(n-k-1) <= 9", "(3,7): 0.2 s; (3,8): ~2 s"],
        ["polytope --which root", "(k-1)(n-k-1) <= 9", "(3,8): ~2 s; (4,8): ~20 s"],
        ["polytope --which pi", "(k-1)(n-k-1) <= 9; lattice points when C(n,k) <= 150", "(3,7): 0.1 s"],
        ["verify", "(k-1)n <= 44", "(3,6): 0.1 s; (4,9): ~2 s; (5,11): ~45 s"],
    ];
    let json = Value::Array(rows.iter().map(|r| json!({"command": r[0], "bound": r[1], "runtime": r[2]})).collect());
    let table = (
        vec!["command".into(), "bound".into(), "runtime".into()],
        rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
    );
    Report { json, table, ok: true }
}

pub fn cmd_fixed_points(kn: KnArgs) -> Result<Report> {
    check_kn(kn)?;
    let (k, n) = (kn.k, kn.n);
    let lyndon = count_lyndon(k as u64, n as u64);
    if lyndon > MAX_CLASSES {
        return Err(limit("fixed-points", format!("{lyndon} aperiodic classes")));
    }
    let classes = enumerate_aperiodic_classes(k, n as u64);
    let (defective, solutions): (Vec<FixedPointLabel>, Vec<FixedPointLabel>) =
        classes.iter().cloned().partition(FixedPointLabel::is_defective);
    let frameless: Option<Vec<FixedPointLabel>> = ((k - 1) * n <= MAX_FRAME_SEARCH).then(|| {
        use rayon::prelude::*;
        solutions
            .par_iter()
            .filter(|l| find_frame(&SolutionConfiguration::from_label(l).matrix).is_none())
            .cloned()
            .collect()
    });
    let mut json = json!({
        "k": k,
        "n": n,
        "lyndon": lyndon.to_string(),
        "classes": labels_json(&classes, false),
        "defective": labels_json(&defective, false),
        "solutions": labels_json(&solutions, true),
        "solution_count": solutions.len(),
    });
    if let Some(f) = &frameless {
        json["frameless"] = labels_json(f, true);
    }
    let rows = classes
        .iter()
        .map(|l| {
            let kind = if l.is_defective() {
                "defective"
            } else if frameless.as_ref().is_some_and(|f| f.contains(l)) {
                "frameless"
            } else {
                "solution"
            };
            vec![l.to_string(), kind.to_string()]
        })
        .collect();
    Ok(Report { json, table: (vec!["class".into(), "kind".into()], rows), ok: true })
}

pub fn cmd_amplitude(a: &AmplitudeArgs) -> Result<Report> {
    check_kn(a.kn)?;
    let (k, n) = (a.kn.k, a.kn.n);
    match a.method {
        Method::Solutions => {
            if a.kinematics.is_some() {
                return Err(Error::InvalidInput("--kinematics needs --method tropical".into()));
            }
            let backend = a.backend.map(Backend::from).unwrap_or_else(|| Backend::default_for(k, n));
            let coords = (k - 1) * n;
            let cap = if backend == Backend::Exact { MAX_EXACT_COORDS } else { MAX_FLOAT_COORDS };
            if coords > cap {
                return Err(limit("amplitude", format!("(k-1)n = {coords} > {cap} for this backend")));
            }
            let rep = amplitude_pk(k, n, backend)?;
            let per: Vec<Value> = rep
                .terms
                .iter()
                .map(|t| json!({"label": t.label.reduced(), "framed": t.framed(), "value": t.value.render()}))
                .collect();
            let mut json = json!({
                "k": k,
                "n": n,
                "method": "solutions",
                "backend": if backend == Backend::Exact { "exact" } else { "float" },
                "amplitude": format_rational(&rep.amplitude),
                "catalan": rep.catalan.to_string(),
                "match": rep.matches_catalan(),
            });
            if let (Some(fr), Some(fl)) = (rep.partial_sum(|t| t.framed()), rep.partial_sum(|t| !t.framed())) {
                json["framed_sum"] = json!(format_rational(&fr));
                json["frameless_sum"] = json!(format_rational(&fl));
            }
            let standard: Vec<usize> = (1..=k + 1).collect();
            let is_standard = |t: &crate::amplitude::SolutionTerm| t.gauge == GaugeUsed::Frame(standard.clone());
            if let (Some(st), Some(other)) = (rep.partial_sum(is_standard), rep.partial_sum(|t| !is_standard(t))) {
                json["standard_frame_sum"] = json!(format_rational(&st));
                json["other_gauge_sum"] = json!(format_rational(&other));
            }
            json["per_solution"] = Value::Array(per);
            let rows =
                rep.terms.iter().map(|t| vec![t.label.to_string(), t.framed().to_string(), t.value.render()]).collect();
            Ok(Report {
                json,
                table: (vec!["label".into(), "framed".into(), "value".into()], rows),
                ok: rep.matches_catalan(),
            })
        }
        Method::Tropical => {
            if a.backend == Some(super::BackendArg::Float) {
                return Err(Error::InvalidInput("the tropical method is exact only".into()));
            }
            let (s, source) = match &a.kinematics {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
                    let s = KinematicPoint::from_json(&text)?;
                    if (s.k(), s.n()) != (k, n) {
                        return Err(Error::InvalidInput(format!(
                            "kinematics file is for ({},{}), not ({k},{n})",
                            s.k(),
                            s.n()
                        )));
                    }
                    (s, "file")
                }
                None => (pk_point(k, n)?, "pk"),
            };
            let dim = (k - 1) * (n - k - 1);
            if dim > MAX_TROPICAL_DIM {
                return Err(limit("tropical", format!("dimension {dim} > {MAX_TROPICAL_DIM}")));
            }
            let rep = evaluate_amplitude(&s)?;
            let hist: Vec<Value> = rep.histogram.iter().map(|(v, f)| json!([format_rational(v), f])).collect();
            let mut json = json!({
                "k": k,
                "n": n,
                "method": "tropical",
                "kinematics": source,
                "regions": rep.regions.len(),
                "histogram": hist,
                "total": format_rational(&rep.total),
            });
            let mut ok = true;
            if source == "pk" {
                let cat = catalan_number(k as u64, (n - k) as u64);
                ok = rep.total == Rational::from_integer(cat.clone());
                json["catalan"] = json!(cat.to_string());
                json["match"] = json!(ok);
            }
            if a.breakdown {
                json["per_region"] = Value::Array(
                    rep.regions
                        .iter()
                        .map(|(r, v)| json!({"region": r.label(), "value": format_rational(v)}))
                        .collect(),
                );
            }
            let rows: Vec<Vec<String>> = if a.breakdown {
                rep.regions.iter().map(|(r, v)| vec![r.label(), format_rational(v)]).collect()
            } else {
                rep.histogram.iter().map(|(v, f)| vec![format_rational(v), f.to_string()]).collect()
            };
            let header = if a.breakdown { ["region", "value"] } else { ["value", "frequency"] };
            Ok(Report { json, table: (header.iter().map(|h| h.to_string()).collect(), rows), ok })
        }
    }
}

fn vertex_rows(p: &Polytope) -> (Vec<String>, Vec<Vec<String>>) {
    let header = (1..=p.dim).map(|i| format!("x{i}")).collect();
    let mut verts = p.vertices.clone();
    verts.sort();
    (header, verts.iter().map(|v| v.iter().map(format_rational).collect()).collect())
}

pub fn cmd_polytope(a: &PolytopeArgs) -> Result<Report> {
    check_kn(a.kn)?;
    let (k, n) = (a.kn.k, a.kn.n);
    let dim = (k - 1) * (n - k - 1);
    if dim > MAX_POLYTOPE_DIM {
        return Err(limit("polytope", format!("dimension {dim} > {MAX_POLYTOPE_DIM}")));
    }
    let (name, p) = match a.which {
        Which::Root => ("R", root_polytope(k, n, true)),
        Which::Pi => ("Pi", pi_polytope(k, n)?),
    };
    let f = p.f_vector();
    let vol = p.relative_volume();
    let mut ok = true;
    let mut json = json!({
        "polytope": name,
        "k": k,
        "n": n,
        "dimension": dim,
        "fvector": f,
        "relative_volume": format_rational(&vol),
        "facets": p.facets.len(),
        "vertices": p.vertices.len(),
    });
    match a.which {
        Which::Root => {
            let cat = catalan_number(k as u64, (n - k) as u64);
            json["catalan"] = json!(cat.to_string());
            json["volume_matches_catalan"] = json!(vol == Rational::from_integer(cat));
        }
        Which::Pi => {
            let expected = binomial(n as u64, k as u64) as usize - n;
            let facets_ok = p.facets.len() == expected;
            json["expected_facets"] = json!(expected);
            ok &= facets_ok;
            if binomial(n as u64, k as u64) <= MAX_PI_LATTICE_BINOMIAL {
                let interior = p.interior_lattice_points();
                let unique_origin = interior.len() == 1 && interior[0].iter().all(num_traits::Zero::is_zero);
                json["interior_lattice_points"] = json!(interior.len());
                ok &= unique_origin;
            } else {
                json["interior_lattice_points"] = Value::Null;
            }
        }
    }
    if a.checks {
        let d = duality_check(k, n)?;
        let (newton_equal, newton_subspace) = newton_polytope_check(k, n)?;
        json["duality"] = json!({
            "vertices_match_facets": d.vertices_match_facets,
            "facets_match_vertices": d.facets_match_vertices,
            "incidences_match": d.incidences_match,
            "f_vectors_reversed": d.f_vectors_reversed,
        });
        json["newton"] = json!({"equal": newton_equal, "in_subspace": newton_subspace});
        ok &= d.holds() && newton_equal && newton_subspace;
    }
    Ok(Report { json, table: vertex_rows(&p), ok })
}

pub fn cmd_verify(a: &VerifyArgs, seed: u64) -> Result<Report> {
    check_kn(a.kn)?;
    let (k, n) = (a.kn.k, a.kn.n);
    if (k - 1) * n > MAX_VERIFY_COORDS {
        return Err(limit("verify", format!("(k-1)n = {} > {MAX_VERIFY_COORDS}", (k - 1) * n)));
    }
    let opts =
        SuiteOptions { amplitude: a.amplitude.then_some(true), samples: a.samples, seed, ..SuiteOptions::default() };
    let rep = verify_suite(k, n, opts)?;
    let status = |s: CheckStatus| match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skipped => "skipped",
    };
    let rows = rep
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), status(c.status).into(), c.conjecture_support.to_string(), c.detail.clone()])
        .collect();
    let json = json!({
        "k": k,
        "n": n,
        "seed": seed,
        "solutions": rep.solutions,
        "passed": rep.passed(),
        "checks": serde_json::to_value(&rep.checks).expect("serializable"),
    });
    Ok(Report {
        json,
        table: (vec!["check".into(), "status".into(), "conjecture_support".into(), "detail".into()], rows),
        ok: rep.passed(),
    })
}
