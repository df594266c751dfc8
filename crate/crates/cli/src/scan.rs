//! Parallel corpus scan. Workers pull graphs by index; a reorder buffer
//! writes reports in input order, so output does not depend on scheduling.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use crate::analyze::{analyze, Options};
use crate::corpus::Entry;
use crate::report::{GraphReport, Outcome, Summary, SummaryLine};

pub struct ScanOutput {
    pub summary: Summary,
}

fn analyze_entry(entry: &Entry, opts: &Options) -> GraphReport {
    match &entry.graph {
        Ok(g) => analyze(g, entry.index, &entry.source, opts),
        Err(e) => GraphReport::unparsed(entry.index, entry.source.clone(), e.clone()),
    }
}

fn count_outcome<T>(o: &Outcome<T>, s: &mut Summary) {
    match o {
        Outcome::Timeout => s.timeouts += 1,
        Outcome::Error(_) => s.field_errors += 1,
        _ => {}
    }
}

fn tally(s: &mut Summary, r: &GraphReport) {
    s.graphs += 1;
    if r.parse_error.is_some() {
        s.parse_errors += 1;
        return;
    }
    if r.counterexample_candidate {
        s.counterexample_candidates += 1;
    }
    s.checks_run += r.checks.len();
    for c in r.failed_checks() {
        s.violations.push((r.index, c.name.clone()));
    }
    if r.structure.ok().is_some_and(|st| st.bridgeless) {
        s.bridgeless += 1;
    }
    if matches!(r.coloring, Outcome::Ok(Some(_))) {
        s.colorable += 1;
    }
    if let Outcome::Ok(w) = &r.fan_raspaud {
        s.fan_raspaud_searched += 1;
        s.fan_raspaud_found += w.is_some() as usize;
    }
    if let Outcome::Ok(w) = &r.fulkerson {
        s.fulkerson_searched += 1;
        s.fulkerson_found += w.is_some() as usize;
    }
    if let Some(Outcome::Ok(mu3)) = r.mu.get(&3) {
        *s.mu3_histogram.entry(mu3.mu).or_default() += 1;
    }
    count_outcome(&r.structure, s);
    count_outcome(&r.perfect_matchings, s);
    count_outcome(&r.oddness, s);
    count_outcome(&r.fan_raspaud, s);
    count_outcome(&r.fulkerson, s);
    count_outcome(&r.cores, s);
    count_outcome(&r.covers, s);
    count_outcome(&r.scc, s);
    count_outcome(&r.hypohamiltonian, s);
    for o in r.mu.values() {
        count_outcome(o, s);
    }
}

/// Analyzes every entry with `workers` threads and writes one JSON line per
/// report, in input order, followed by the summary line.
pub fn scan(entries: &[Entry], opts: &Options, workers: usize, out: &mut dyn Write) -> io::Result<ScanOutput> {
    let workers = workers.max(1).min(entries.len().max(1));
    let next = AtomicUsize::new(0);
    let mut summary = Summary::default();
    std::thread::scope(|scope| -> io::Result<()> {
        let (tx, rx) = mpsc::channel::<(usize, GraphReport)>();
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = entries.get(i) else { break };
                if tx.send((i, analyze_entry(entry, opts))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending = BTreeMap::new();
        let mut emit = 0;
        for (i, report) in rx {
            pending.insert(i, report);
            while let Some(report) = pending.remove(&emit) {
                tally(&mut summary, &report);
                serde_json::to_writer(&mut *out, &report)?;
                out.write_all(b"\n")?;
                emit += 1;
            }
        }
        Ok(())
    })?;
    serde_json::to_writer(&mut *out, &SummaryLine { summary: summary.clone() })?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(ScanOutput { summary })
}
