//! Command dispatch: each CLI verb maps onto the corresponding operations
//! and produces a deterministic RunReport.

use crate::accept::run_acceptance;
use crate::balanced::{verify_balanced_pair, ExtCalculator};
use crate::cotorsion::{
    completeness_construct, hereditary_check, verify_cotorsion_pair, wakamatsu_check,
};
use crate::derived::{
    gorenstein_report, kb_inclusion, singularity_verdict, InclusionDirection,
    SingularityTriviality,
};
use crate::error::{Error, Result};
use crate::report::{CorpusExtension, RunReport};
use crate::resolution::{
    coresolution_dimension, proper_coresolution, proper_resolution, resolution_dimension,
    DimValue,
};
use crate::sample::Sampler;
use crate::workspace::Workspace;
use serde_json::json;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    CheckBalanced { pair: String },
    ExtTable { pair: String, m: Option<String>, n: Option<String> },
    Resdim { module: String, sub: String },
    CotorsionCheck { spec: String },
    Hereditary { spec: String },
    Complete { spec: String },
    Wakamatsu { sub: String },
    Lift { pair: String },
    Gorenstein,
    Singularity { pair: String },
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckBalanced { .. } => "check-balanced",
            Command::ExtTable { .. } => "ext-table",
            Command::Resdim { .. } => "resdim",
            Command::CotorsionCheck { .. } => "cotorsion-check",
            Command::Hereditary { .. } => "hereditary",
            Command::Complete { .. } => "complete",
            Command::Wakamatsu { .. } => "wakamatsu",
            Command::Lift { .. } => "lift",
            Command::Gorenstein => "gorenstein",
            Command::Singularity { .. } => "singularity",
            Command::Selftest => "selftest",
        }
    }
}

pub fn run(cmd: &Command, w: &Workspace) -> Result<RunReport> {
    let started = Instant::now();
    let mut report = RunReport::new(cmd.name(), &w.name, w.settings.clone());
    match cmd {
        Command::CheckBalanced { pair } => {
            let p = w.pair(pair)?;
            let r = verify_balanced_pair(
                p,
                &w.corpus_modules(),
                w.settings.depth,
                w.settings.samples,
                w.settings.seed,
            );
            report.verdict(
                "admissibility equivalence",
                r.admissibility_equivalence,
                format!(
                    "X admissible: {}, Y coadmissible: {}",
                    r.x_admissibility.admissible, r.y_coadmissibility.admissible
                ),
            );
            report.verdict(
                "resolutions are two-sided acyclic",
                r.resolutions_left_acyclic.iter().all(|&b| b),
                format!("{} corpus objects", r.resolutions_left_acyclic.len()),
            );
            report.verdict(
                "coresolutions are two-sided acyclic",
                r.coresolutions_right_acyclic.iter().all(|&b| b),
                format!("{} corpus objects", r.coresolutions_right_acyclic.len()),
            );
            report.verdict(
                "acyclicity classes coincide on samples",
                r.coincidence_failures.is_empty(),
                format!("{} complexes sampled", r.samples_checked),
            );
            report.counterexamples.extend(r.coincidence_failures.clone());
            report.witnesses = serde_json::to_value(&r)?;
        }
        Command::ExtTable { pair, m, n } => {
            let p = w.pair(pair)?;
            let mut calc = ExtCalculator::new(p, w.settings.depth);
            let max_degree = w.settings.depth.saturating_sub(2).max(1);
            let pairs: Vec<(String, String)> = match (m, n) {
                (Some(a), Some(b)) => vec![(a.clone(), b.clone())],
                _ => {
                    let names: Vec<String> =
                        w.corpus.iter().map(|e| e.name.clone()).collect();
                    names
                        .iter()
                        .flat_map(|a| names.iter().map(move |b| (a.clone(), b.clone())))
                        .collect()
                }
            };
            let mut tables = Vec::new();
            for (an, bn) in &pairs {
                let a = w.module(an)?;
                let b = w.module(bn)?;
                let table = calc.table(a, b, max_degree)?;
                report.verdict(
                    &format!("Ext(*)({an}, {bn}) balanced"),
                    table.balanced,
                    format!("via X {:?} / via Y {:?}", table.dims_via_x, table.dims_via_y),
                );
                tables.push(json!({ "m": an, "n": bn, "table": table }));
            }
            report.witnesses = serde_json::Value::Array(tables);
        }
        Command::Resdim { module, sub } => {
            let m = w.module(module)?;
            let s = w.subcategory(sub)?;
            if let Some(pair) = w.pair_with_x(sub) {
                let _ = pair;
                let rep = resolution_dimension(m, s, w.settings.cap)?;
                report.verdict(
                    &format!("{}-resdim {module}", sub),
                    rep.consistent,
                    format!("{} (membership and Ext routes agree)", rep.value),
                );
                if let Ok(res) = proper_resolution(m, s, w.settings.cap + 2) {
                    for (k, syz) in res.syzygies.iter().enumerate() {
                        if !syz.is_zero() {
                            report.corpus_extensions.push(CorpusExtension {
                                name: format!("syzygy {} of {module}", k + 1),
                                provenance: format!("resdim run over `{sub}`"),
                                dims: syz.dims().to_vec(),
                            });
                        }
                    }
                }
                report.witnesses = serde_json::to_value(&rep)?;
            } else if w.pairs.values().any(|p| p.y.name == *sub) {
                let rep = coresolution_dimension(m, s, w.settings.cap)?;
                report.verdict(
                    &format!("{}-coresdim {module}", sub),
                    rep.consistent,
                    format!("{}", rep.value),
                );
                if let Ok(cores) = proper_coresolution(m, s, w.settings.cap + 2) {
                    for (k, cosyz) in cores.cosyzygies.iter().enumerate() {
                        if !cosyz.is_zero() {
                            report.corpus_extensions.push(CorpusExtension {
                                name: format!("cosyzygy {} of {module}", k + 1),
                                provenance: format!("resdim run over `{sub}`"),
                                dims: cosyz.dims().to_vec(),
                            });
                        }
                    }
                }
                report.witnesses = serde_json::to_value(&rep)?;
            } else {
                return Err(Error::Precondition(format!(
                    "subcategory `{sub}` is not a registered half of any balanced pair"
                )));
            }
        }
        Command::CotorsionCheck { spec } => {
            let s = w.cotorsion_spec(spec)?;
            let p = w.pair(&s.pair_name)?;
            let mut calc = ExtCalculator::new(p, w.settings.depth);
            let v = verify_cotorsion_pair(&mut calc, s, &w.corpus_modules())?;
            report.verdict(
                "mutual Ext^1 orthogonality",
                v.verified,
                format!("{} failing generator pairs", v.orthogonality_failures.len()),
            );
            report.witnesses = serde_json::to_value(&v)?;
        }
        Command::Hereditary { spec } => {
            let s = w.cotorsion_spec(spec)?;
            let p = w.pair(&s.pair_name)?;
            let mut calc = ExtCalculator::new(p, w.settings.depth);
            let corpus = w.corpus_modules();
            let mut sampler = Sampler::new(w.settings.seed);
            let pool = sampler.sequence_pool(&p.x, &p.y, &corpus, 12);
            let maxdeg = w.settings.depth.saturating_sub(2).max(2);
            let r = hereditary_check(&mut calc, s, p, &pool, maxdeg)?;
            report.verdict(
                "higher Ext vanishing",
                r.ext_vanishing,
                format!("{} failures", r.ext_failures.len()),
            );
            report.verdict("criteria agree", r.consistent, format!(
                "resolving={}, coresolving={}, ext={}",
                r.c_resolving, r.d_coresolving, r.ext_vanishing
            ));
            report.witnesses = serde_json::to_value(&r)?;
        }
        Command::Complete { spec } => {
            let s = w.cotorsion_spec(spec)?;
            let p = w.pair(&s.pair_name)?;
            let mut built = Vec::new();
            for entry in &w.corpus {
                match completeness_construct(&entry.module, s, p, None) {
                    Ok(c) => {
                        report.verdict(
                            &format!("enough-projectives sequence for {}", entry.name),
                            true,
                            format!(
                                "middle dims {:?}, E membership {}",
                                c.sequence.mid_term().dims(),
                                if c.e_membership.is_some() {
                                    "decided"
                                } else {
                                    "deferred to extension witness"
                                }
                            ),
                        );
                        built.push(json!({
                            "object": entry.name,
                            "middle_dims": c.sequence.mid_term().dims(),
                            "e_in_add_c": c.e_membership.is_some(),
                        }));
                    }
                    Err(Error::Unsupported(msg)) => {
                        return Err(Error::Unsupported(format!("{}: {msg}", entry.name)));
                    }
                    Err(e) => return Err(e),
                }
            }
            report.witnesses = serde_json::Value::Array(built);
        }
        Command::Wakamatsu { sub } => {
            let e = w.subcategory(sub)?;
            let p = w
                .pairs
                .values()
                .next()
                .ok_or_else(|| Error::Precondition("no balanced pair registered".into()))?;
            let mut calc = ExtCalculator::new(p, w.settings.depth);
            let mut rows = Vec::new();
            for entry in &w.corpus {
                let r = wakamatsu_check(&mut calc, e, &entry.module)?;
                report.verdict(
                    &format!("kernel of minimal approximation of {}", entry.name),
                    r.pass,
                    format!("kernel dims {:?}, Ext^1 dims {:?}", r.kernel.dims(), r.ext_dims),
                );
                rows.push(json!({
                    "object": entry.name,
                    "kernel_dims": r.kernel.dims(),
                    "ext_dims": r.ext_dims,
                    "pass": r.pass,
                }));
            }
            report.witnesses = serde_json::Value::Array(rows);
        }
        Command::Lift { pair } => {
            let p = w.pair(pair)?;
            let into_x = kb_inclusion(
                &p.x,
                &p.y,
                InclusionDirection::YIntoX,
                w.settings.cap,
                w.settings.seed,
                8,
            )?;
            report.verdict(
                "K^b(Y) into K^b(X)",
                into_x.holds,
                format!("{}/{} lifts", into_x.lifts_succeeded, into_x.lifts_attempted),
            );
            let into_y = kb_inclusion(
                &p.x,
                &p.y,
                InclusionDirection::XIntoY,
                w.settings.cap,
                w.settings.seed + 1,
                8,
            )?;
            report.verdict(
                "K^b(X) into K^b(Y)",
                into_y.holds,
                format!("{}/{} lifts", into_y.lifts_succeeded, into_y.lifts_attempted),
            );
            report.witnesses = json!({ "y_into_x": into_x, "x_into_y": into_y });
        }
        Command::Gorenstein => {
            let r = gorenstein_report(
                &w.algebra,
                w.subcategory("proj")?,
                w.subcategory("inj")?,
                w.settings.cap,
            )?;
            report.verdict(
                "Gorenstein",
                r.iff_agrees,
                format!(
                    "pd D(A) finite: {}, id A finite: {}, stalk lifts agree: {}",
                    r.pd_dual_regular_finite, r.id_regular_finite, r.iff_agrees
                ),
            );
            if let Some(cert) = r.equivalence_certified {
                report.verdict(
                    "homotopy equivalence of lift and resolution",
                    cert,
                    "comparison map certified".into(),
                );
            }
            report.witnesses = serde_json::to_value(&r)?;
        }
        Command::Singularity { pair } => {
            let p = w.pair(pair)?;
            let v = singularity_verdict(p, &w.corpus_modules(), w.settings.cap)?;
            let verdict_name = match v.verdict {
                SingularityTriviality::Trivial => "trivial",
                SingularityTriviality::NontrivialWitness => "nontrivial-witness",
                SingularityTriviality::UndecidedAtCap => "undecided-at-cap",
            };
            report.verdict(
                "singularity category verdict",
                v.verdict == SingularityTriviality::Trivial,
                format!(
                    "{verdict_name}; {} objects without witnesses, periods {:?}",
                    v.unwitnessed.len(),
                    v.periodicity_certificates
                ),
            );
            for (idx, rep) in v.object_reports.iter().enumerate() {
                if !matches!(rep.value, DimValue::Finite(_)) {
                    report.corpus_extensions.push(CorpusExtension {
                        name: format!("unwitnessed object {}", w.corpus[idx].name),
                        provenance: "singularity run".into(),
                        dims: w.corpus[idx].module.dims().to_vec(),
                    });
                }
            }
            report.witnesses = serde_json::to_value(&v)?;
        }
        Command::Selftest => {
            let results = run_acceptance()?;
            for r in &results {
                report.verdict(&format!("criterion {}: {}", r.id, r.name), r.pass, r.detail.clone());
            }
            report.witnesses = serde_json::to_value(&results)?;
        }
    }
    report.timings_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Map an operation error onto the CLI exit contract.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsupported(_) | Error::Precondition(_) => 3,
        Error::ApproximationNotEpic { .. } | Error::CoapproximationNotMonic { .. } => 2,
        _ => 4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_workspace;

    #[test]
    fn gorenstein_command_on_kx2() {
        let w = builtin_workspace("kx2").unwrap();
        let r = run(&Command::Gorenstein, &w).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.status().code(), 0);
    }

    #[test]
    fn singularity_commands_on_kx2() {
        let w = builtin_workspace("kx2").unwrap();
        let r = run(&Command::Singularity { pair: "gproj_ginj".into() }, &w).unwrap();
        assert!(r.all_pass());
        let r = run(&Command::Singularity { pair: "proj_inj".into() }, &w).unwrap();
        assert!(!r.all_pass()); // nontrivial witness = counterexample exit
        assert_eq!(r.status().code(), 2);
        assert!(r.render_text().contains("nontrivial-witness"));
    }

    #[test]
    fn resdim_command_examples() {
        let w = builtin_workspace("a3rad2").unwrap();
        let r = run(
            &Command::Resdim { module: "S1".into(), sub: "proj".into() },
            &w,
        )
        .unwrap();
        assert!(r.all_pass());
        assert!(r.verdicts[0].detail.starts_with("2"));
        assert!(!r.corpus_extensions.is_empty());
    }

    #[test]
    fn determinism_of_reports() {
        let w = builtin_workspace("a2").unwrap();
        let cmd = Command::CheckBalanced { pair: "proj_inj".into() };
        let r1 = run(&cmd, &w).unwrap();
        let r2 = run(&cmd, &w).unwrap();
        assert_eq!(r1.canonical_json(), r2.canonical_json());
    }

    #[test]
    fn unknown_references_error() {
        let w = builtin_workspace("a2").unwrap();
        let err = run(&Command::Singularity { pair: "nope".into() }, &w).unwrap_err();
        assert_eq!(error_exit_code(&err), 4);
    }

    #[test]
    fn ext_table_single_pair() {
        let w = builtin_workspace("kx2").unwrap();
        let r = run(
            &Command::ExtTable {
                pair: "proj_inj".into(),
                m: Some("S1".into()),
                n: Some("S1".into()),
            },
            &w,
        )
        .unwrap();
        assert!(r.all_pass());
        assert!(r.verdicts[0].detail.contains("[1, 1, 1, 1, 1, 1]"));
    }

    #[test]
    fn hereditary_and_cotorsion_commands() {
        let w = builtin_workspace("kx2").unwrap();
        for name in ["proj_all", "all_inj", "gp_all_all"] {
            let r = run(&Command::CotorsionCheck { spec: name.into() }, &w).unwrap();
            assert!(r.all_pass(), "{name}: {:?}", r.counterexamples);
            let r = run(&Command::Hereditary { spec: name.into() }, &w).unwrap();
            assert!(r.all_pass(), "{name}: {:?}", r.counterexamples);
        }
    }

    #[test]
    fn complete_and_wakamatsu_commands() {
        let w = builtin_workspace("a2").unwrap();
        let r = run(&Command::Complete { spec: "proj_all".into() }, &w).unwrap();
        assert!(r.all_pass());
        let r = run(&Command::Wakamatsu { sub: "proj".into() }, &w).unwrap();
        assert!(r.all_pass());
    }

    #[test]
    fn lift_command_on_a2() {
        let w = builtin_workspace("a2").unwrap();
        let r = run(&Command::Lift { pair: "proj_inj".into() }, &w).unwrap();
        assert!(r.all_pass(), "{:?}", r.counterexamples);
    }
}
