use crate::io::{parse_digraph, write_digraph, FileFormat};
use crate::report::{digest, exit};
use crate::{CliError, Command, GroupArgs};
use serde_json::{json, Value};
use std::path::Path;
use unigraph_core::digraph::{families, structure_report};
use unigraph_core::groups::{
    cayley_digraph, coset_generating_set, mansilla_serra_check, unistochastic_group_conditions,
    FiniteGroup, GenSet, GroupSpec,
};
use unigraph_core::linedigraph::{line_digraph, recognize_line_digraph, square_block_cover, Multidigraph};
use unigraph_core::matrix::{circulant_spectrum, dft, hypercube_weighing};
use unigraph_core::membership::{
    certify, conjecture_survey, dft_blocks, necessary_battery, sperner_capacity, BatteryVerdict,
    SpernerMode, Verdict,
};
use unigraph_core::Digraph;

type Outcome = Result<(i32, Value), CliError>;

/// Dense unitarity checks above this order are replaced by per-block checks.
const DENSE_CHECK_LIMIT: usize = 512;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn read_digraph(path: &Path, digest_out: &mut Option<String>) -> Result<Digraph, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    *digest_out = Some(digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Usage(format!("{} is not UTF-8 text", path.display())))?;
    Ok(parse_digraph(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

fn write_graph(path: &Path, d: &Digraph) -> Result<Value, CliError> {
    write_file(path, &write_digraph(d, FileFormat::for_path(path)))?;
    Ok(json!(path.display().to_string()))
}

fn build_group(args: &GroupArgs) -> Result<(GroupSpec, FiniteGroup, Vec<usize>), CliError> {
    let spec: GroupSpec = args.group.parse()?;
    let group = spec.build()?;
    let gens = group.parse_elements(&args.gens)?;
    Ok((spec, group, gens))
}

fn names(group: &FiniteGroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&g| group.element_name(g)).collect()
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Certified => exit::CERTIFIED,
        Verdict::Excluded => exit::EXCLUDED,
        Verdict::Undecided => exit::UNDECIDED,
    }
}

pub(crate) fn execute(command: &Command, seed: u64, digest: &mut Option<String>) -> Outcome {
    match command {
        Command::Analyze(input) => {
            let d = read_digraph(&input.input, digest)?;
            let battery = necessary_battery(&d);
            let excluded = battery.verdict == BatteryVerdict::Excluded;
            let result = json!({
                "n": d.n(),
                "arcs": d.arc_count(),
                "verdict": battery.verdict,
                "reason": battery.first_failure().map(|c| c.name.clone()),
                "battery": battery,
                "structure": structure_report(&d),
            });
            Ok((if excluded { exit::EXCLUDED } else { exit::UNDECIDED }, result))
        }
        Command::Certify { input, solver } => {
            let d = read_digraph(&input.input, digest)?;
            let cfg = solver.config(seed);
            let out = certify(&d, &cfg)?;
            let mut result = to_value(&out);
            result["n"] = json!(d.n());
            result["config"] = to_value(&cfg);
            Ok((verdict_code(out.verdict), result))
        }
        Command::Cayley { group, out } => {
            let (spec, g, elements) = build_group(group)?;
            let allow_identity = elements.contains(&g.identity());
            let set = GenSet::new(&g, elements, allow_identity)?;
            let d = cayley_digraph(&g, &set);
            let structure = structure_report(&d);
            let witness = mansilla_serra_check(&g, &set).map(|w| {
                json!({ "x": g.element_name(w.x), "subgroup": names(&g, &w.subgroup) })
            });
            let mut result = json!({
                "group": spec.to_string(),
                "order": g.order(),
                "connection_set": names(&g, set.elements()),
                "arcs": d.arc_count(),
                "degree": d.regular_degree(),
                "generates": g.generated_subgroup(set.elements()).len() == g.order(),
                "strongly_connected": structure.is_strongly_connected(),
                "line_digraph_witness": witness,
                "conditions": unistochastic_group_conditions(&g, &set),
            });
            if let Some(path) = out {
                result["written"] = write_graph(path, &d)?;
            }
            Ok((exit::OK, result))
        }
        Command::Linedigraph {
            input,
            recognize,
            out,
        } => {
            let d = read_digraph(&input.input, digest)?;
            if *recognize {
                if out.is_some() {
                    return Err(CliError::Usage(
                        "--out is not used with --recognize; the base may have parallel arcs".into(),
                    ));
                }
                let result = match recognize_line_digraph(&d) {
                    Ok(rec) => json!({
                        "accepted": true,
                        "base": rec.base.rows(),
                        "arc_of_vertex": rec.arc_of_vertex,
                        "square_blocks": square_block_cover(&d).is_some(),
                    }),
                    Err(violation) => json!({ "accepted": false, "violation": violation }),
                };
                return Ok((exit::OK, result));
            }
            let l = line_digraph(&Multidigraph::from_digraph(&d))?;
            let mut result = json!({
                "n": l.digraph.n(),
                "arcs": l.digraph.arc_count(),
                "arc_of_vertex": l.arcs,
            });
            if let Some(path) = out {
                result["written"] = write_graph(path, &l.digraph)?;
            }
            Ok((exit::OK, result))
        }
        Command::Hypercube { k, loops, out } => {
            let w = hypercube_weighing(*k, *loops)?;
            let weight = w.weighing_weight()?;
            let mut cube = families::hypercube(*k as usize);
            if *loops {
                cube = cube.with_loops();
            }
            let expected = *k as i64 + *loops as i64;
            // W·Wᵀ = k·I holds exactly, so the float check is only a sanity
            // check and is skipped where it would be cubic in a large order.
            let residual = (w.n() <= DENSE_CHECK_LIMIT)
                .then(|| w.to_complex().scale(1.0 / (expected as f64).sqrt()).unitarity_residual());
            let mut result = json!({
                "k": k,
                "loops": loops,
                "order": w.n(),
                "weight": weight,
                "expected_weight": expected,
                "support_matches_cube": w.support() == cube,
                "normalized_residual": residual,
            });
            if weight != Some(expected) || w.support() != cube {
                return Err(unigraph_core::Error::Internal("weighing matrix failed its exact check".into()).into());
            }
            if let Some(path) = out {
                let text = serde_json::to_string(&w).expect("integer matrices serialize");
                write_file(path, &(text + "\n"))?;
                result["written"] = json!(path.display().to_string());
            }
            Ok((exit::OK, result))
        }
        Command::CosetGens { group, out } => {
            let (spec, g, elements) = build_group(group)?;
            let [s1, s2] = elements[..] else {
                return Err(CliError::Usage(format!(
                    "--gens needs exactly two elements, got {}",
                    elements.len()
                )));
            };
            let t = coset_generating_set(&g, s1, s2)?;
            let witness = mansilla_serra_check(&g, &t);
            let d = cayley_digraph(&g, &t);
            let recognized = recognize_line_digraph(&d).is_ok();
            let certificate = dft_certificate(&d)?;
            let certified = witness.is_some() && recognized;
            let mut result = json!({
                "group": spec.to_string(),
                "order": g.order(),
                "generators": names(&g, &[s1, s2]),
                "connection_set": names(&g, t.elements()),
                "mansilla_serra_witness": witness.map(|w| json!({
                    "x": g.element_name(w.x),
                    "subgroup": names(&g, &w.subgroup),
                })),
                "line_digraph": recognized,
                "certificate": certificate,
            });
            if let Some(path) = out {
                result["written"] = write_graph(path, &d)?;
            }
            Ok((if certified { exit::CERTIFIED } else { exit::UNDECIDED }, result))
        }
        Command::Spectrum { input, group, gens } => {
            let (n, residues) = match (input, group, gens) {
                (Some(path), _, _) => {
                    let d = read_digraph(path, digest)?;
                    let residues: Vec<usize> = d.out_neighbors(0).collect();
                    if d != families::circulant(d.n(), &residues) {
                        return Err(unigraph_core::Error::Input("the input is not a circulant".into()).into());
                    }
                    (d.n(), residues)
                }
                (None, Some(group), Some(gens)) => {
                    let n = match group.parse::<GroupSpec>()? {
                        GroupSpec::Cyclic(n) => n,
                        other => {
                            return Err(CliError::Usage(format!("spectrum needs a cyclic group Z:n, got {other}")))
                        }
                    };
                    let g = FiniteGroup::cyclic(n)?;
                    (n, g.parse_elements(gens)?)
                }
                _ => return Err(CliError::Usage("spectrum needs --in or both --group and --gens".into())),
            };
            let eigenvalues = circulant_spectrum(n, &residues)?;
            let result = json!({
                "n": n,
                "residues": residues,
                "eigenvalues": eigenvalues.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            });
            Ok((exit::OK, result))
        }
        Command::Sperner { input, optimize } => {
            let d = read_digraph(&input.input, digest)?;
            let mode = if *optimize { SpernerMode::Optimize } else { SpernerMode::Uniform };
            let value = sperner_capacity(&d, mode)?;
            let mut result = to_value(&value);
            result["two_over_n"] = json!(2.0 / d.n() as f64);
            Ok((exit::OK, result))
        }
        Command::Survey { max_n, solver } => {
            let cfg = solver.config(seed);
            let survey = conjecture_survey(*max_n, &cfg)?;
            let mut result = to_value(&survey);
            result["config"] = to_value(&cfg);
            Ok((exit::OK, result))
        }
    }
}

/// Checks the DFT-block unitary of a line digraph. Small orders are
/// verified by dense multiplication; above that each distinct block size is
/// checked once, which suffices because the blocks partition the rows and
/// the columns.
fn dft_certificate(d: &Digraph) -> Result<Value, CliError> {
    let Some(cover) = square_block_cover(d) else {
        return Ok(Value::Null);
    };
    if d.n() <= DENSE_CHECK_LIMIT {
        let u = dft_blocks(d).expect("a square cover exists");
        let residual = u.unitarity_residual();
        let support_match = u.support(1e-9) == *d;
        return Ok(json!({
            "kind": "line-digraph-dft",
            "residual": residual,
            "support_match": support_match,
            "check": "dense",
        }));
    }
    let mut sizes: Vec<usize> = cover.blocks.iter().map(|b| b.rows.len()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut residual: f64 = 0.0;
    for &s in &sizes {
        residual = residual.max(dft(s)?.unitarity_residual());
    }
    let covered: usize = cover.blocks.iter().map(|b| b.rows.len() * b.cols.len()).sum();
    Ok(json!({
        "kind": "line-digraph-dft",
        "residual": residual,
        "support_match": covered == d.arc_count(),
        "check": "per-block",
        "block_sizes": sizes,
    }))
}
