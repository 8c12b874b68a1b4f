//! Plain-text tables regenerated from the library and diffed against the
//! golden copies under `crates/core/golden/`.
//!
//! Format: one table per file. A `#` line names the table, the next line is
//! the header, and each row is a `|`-separated record. Rows whose last
//! column is `differs` are known discrepancies with the printed data.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::catalog::{check_scaffold, family_record, polygon_x, FamilyId};
use crate::error::{Error, Result};
use crate::hilbert::{cascade_hilbert, ci_hilbert, fractions_equal, pfaffian_numerator, HilbertFraction, IntPolynomial};
use crate::mutation::{find_representative_with_quiver, DEFAULT_SEARCH_BOUND};
use crate::quasismooth::is_quasismooth;
use crate::rootsys::{index_witnesses, root_table, summarize, verify_orbit_table, PolarizedLattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(name: &str, title: &str, header: &[&str]) -> Table {
        Table {
            name: name.to_string(),
            title: title.to_string(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn file_name(&self) -> String {
        format!("{}.txt", self.name)
    }

    pub fn render(&self) -> String {
        let mut out = format!("# {}\n{}\n", self.title, self.header.join(" | "));
        for r in &self.rows {
            out.push_str(&r.join(" | "));
            out.push('\n');
        }
        out
    }

    /// Rows flagged `differs` in their last column.
    pub fn discrepancies(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| r.last().map(String::as_str) == Some("differs"))
            .map(|r| r.join(" | "))
            .collect()
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn matrix(m: &[Vec<i64>]) -> String {
    m.iter().map(|r| format!("({})", list(r))).collect::<Vec<_>>().join(" ")
}

fn verdict(ok: bool) -> String {
    if ok { "ok" } else { "differs" }.to_string()
}

pub fn cascade_table(k: i64) -> Result<Table> {
    let mut t = Table::new(
        &format!("cascade_k{k}"),
        &format!("the cascade for k = {k}"),
        &["family", "degree", "fano index", "toric", "singularity content"],
    );
    let max_l = ((k + 2) * (k + 2) - 1) / k;
    let ids = (0..=max_l.min(k + 4)).map(|l| FamilyId::X { k, l }).chain([FamilyId::B { k }]);
    for id in ids {
        let r = family_record(id)?;
        t.push(vec![
            id.to_string(),
            r.degree.to_string(),
            r.fano_index.to_string(),
            if r.is_toric { "yes" } else { "no" }.into(),
            r.content.to_string(),
        ]);
    }
    Ok(t)
}

fn usizes(v: &[i64]) -> Vec<usize> {
    v.iter().map(|&x| x as usize).collect()
}

/// Series printed for odd `k = 2m-1` at `l = k+3` and `l = k+2`.
fn printed_odd_series(m: usize, l_offset: usize) -> HilbertFraction {
    let k = 2 * m - 1;
    if l_offset == 3 {
        let num = IntPolynomial::from_terms(&[
            (0, 1),
            (m + 1, -2),
            (k + 1, -3),
            (k + 2, 3),
            (3 * m, 2),
            (2 * k + 3, -1),
        ]);
        HilbertFraction::new(num, vec![1, 1, 1, m, m, k])
    } else {
        let num = IntPolynomial::from_terms(&[
            (0, 1),
            (2, -1),
            (m + 1, -4),
            (m + 2, 4),
            (k + 1, -4),
            (k + 2, 8),
            (k + 3, -4),
            (3 * m, 4),
            (m + 2, -4),
            (2 * k + 2, -1),
            (2 * k + 4, 1),
        ]);
        HilbertFraction::new(num, vec![1, 1, 1, 1, m, m, k])
    }
}

/// The model tables for `m = 1..=6`: each codimension `<= 2` model against the
/// cascade series, the printed odd-`k` series, and the Pfaffian model.
pub fn hilbert_model_table() -> Result<Table> {
    let mut t = Table::new(
        "hilbert_models",
        "Hilbert series of the l = k+2, k+3, k+4 surfaces against their models",
        &["k", "l", "source", "series", "cascade numerator over the same denominator", "verdict"],
    );
    for m in 1..=6i64 {
        for k in [2 * m, 2 * m - 1] {
            for l in k + 2..=k + 4 {
                let rec = family_record(FamilyId::X { k, l })?;
                let target = cascade_hilbert(k as usize, l as usize)?;
                let mut rows: Vec<(String, HilbertFraction)> = rec
                    .models
                    .iter()
                    .filter(|md| md.hilbert_claim)
                    .map(|md| (md.to_string(), ci_hilbert(&usizes(&md.weights), &usizes(&md.degrees))))
                    .collect();
                if k % 2 == 1 && l - k <= 3 {
                    let offset = (l - k) as usize;
                    rows.push(("printed series".into(), printed_odd_series(m as usize, offset)));
                }
                if let Some(pf) = &rec.pfaffian {
                    let num = pfaffian_numerator(&pf.entry_degrees)
                        .ok_or_else(|| Error::InternalMismatch("Pfaffian degrees".into()))?;
                    rows.push((
                        format!("Pfaffian in P({})", list(&pf.weights)),
                        HilbertFraction::new(num, usizes(&pf.weights)),
                    ));
                }
                for (source, f) in rows {
                    let over = target
                        .numerator_over(&f.denominator)
                        .map(|p| p.to_string())
                        .unwrap_or_else(|| "-".into());
                    t.push(vec![
                        k.to_string(),
                        l.to_string(),
                        source,
                        f.to_string(),
                        over,
                        verdict(fractions_equal(&f, &target)),
                    ]);
                }
            }
        }
    }
    Ok(t)
}

/// Weight matrices from Laurent inversion for every catalog scaffolding with
/// `k <= 6`, against the printed matrices.
pub fn weight_matrix_table() -> Result<Table> {
    let mut t = Table::new(
        "weight_matrices",
        "weight matrices from Laurent inversion",
        &["family", "struts", "weight matrix", "stability", "equation degrees", "printed", "verdict"],
    );
    let mut ids: Vec<FamilyId> = Vec::new();
    for k in 3..=6 {
        ids.extend((1..=k + 4).map(|l| FamilyId::X { k, l }));
        ids.push(FamilyId::B { k });
    }
    ids.extend([(3, 5), (3, 6), (5, 5), (5, 6), (6, 6)].map(|(k1, k2)| FamilyId::Pair { k1, k2 }));
    for id in ids {
        let Ok(rec) = family_record(id) else { continue };
        for s in &rec.scaffolds {
            let c = check_scaffold(s)?;
            let printed = s
                .printed
                .as_ref()
                .map(|p| matrix(&p.weight_matrix))
                .unwrap_or_else(|| "-".into());
            let ok = c.printed_equivalent != Some(false) && c.binomials_ok != Some(false);
            t.push(vec![
                id.to_string(),
                s.scaffolding.struts.len().to_string(),
                matrix(&c.git.weight_matrix),
                list(&c.git.stability),
                matrix(&c.git.equation_degrees),
                printed,
                verdict(ok),
            ]);
        }
    }
    Ok(t)
}

fn root_cases() -> Vec<(i64, usize)> {
    let mut v: Vec<(i64, usize)> = (3..=10).flat_map(|k| (2..=k as usize + 4).map(move |l| (k, l))).collect();
    v.push((3, 8));
    v.sort();
    v
}

pub fn root_system_table() -> Result<Table> {
    let mut t = Table::new(
        "root_systems",
        "root systems in the Picard lattice",
        &["k", "l", "roots", "rank", "type", "table rows", "orbit check"],
    );
    for (k, l) in root_cases() {
        let (s, _) = summarize(k, l)?;
        let (rows, orbit) = match root_table(k, l) {
            Some(rows) => (
                rows.iter().map(|r| format!("({};{})", r[0], list(&r[1..]))).collect::<Vec<_>>().join(" "),
                verdict(verify_orbit_table(k, l)?),
            ),
            None => ("-".into(), "-".into()),
        };
        t.push(vec![k.to_string(), l.to_string(), s.count.to_string(), s.rank.to_string(), s.type_label, rows, orbit]);
    }
    Ok(t)
}

pub fn index_table() -> Result<Table> {
    let mut t = Table::new(
        "index_of_connectedness",
        "index of connectedness: det(Cartan), Smith discriminant, printed value",
        &["k", "l", "det", "smith", "printed", "verdict"],
    );
    for (k, l) in root_cases() {
        let l64 = l as i64;
        if l64 < k + 2 && (k, l) != (3, 8) {
            continue;
        }
        let lat = PolarizedLattice::new(k, l)?;
        let (d, s) = index_witnesses(&lat.enumerate_roots(), &lat)?;
        let printed = if (k, l) == (3, 8) {
            1
        } else {
            match l64 - k {
                2 => 2 * (k + 1),
                3 => k + 4,
                _ => 4,
            }
        };
        t.push(vec![
            k.to_string(),
            l.to_string(),
            d.to_string(),
            s.to_string(),
            printed.to_string(),
            verdict(d == s && d == printed),
        ]);
    }
    Ok(t)
}

/// Reduced-quiver node counts: the tabulated value, whether a mutation
/// representative with that many nodes was found, and the number of
/// boundary components recorded for the family.
pub fn quiver_table() -> Result<Table> {
    let mut t = Table::new(
        "quiver_nodes",
        "reduced quiver node counts over mutation representatives",
        &["family", "nodes", "components of D", "representative", "verdict"],
    );
    for k in [3, 5] {
        for l in 0..=k + 4 {
            let id = FamilyId::X { k, l };
            let rec = family_record(id)?;
            let want = rec.reduced_quiver_nodes.unwrap_or(0);
            let p = polygon_x(k, l)?;
            let found = find_representative_with_quiver(&p, |q| q.len() == want, DEFAULT_SEARCH_BOUND)?;
            t.push(vec![
                id.to_string(),
                want.to_string(),
                rec.boundary_components.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                found.as_ref().map(|q| q.to_string()).unwrap_or_else(|| "-".into()),
                verdict(found.is_some()),
            ]);
        }
    }
    Ok(t)
}

pub fn pair_table() -> Result<Table> {
    let mut t = Table::new(
        "pair_models",
        "surfaces with two rigid points and their models",
        &["family", "degree", "singularity content", "model", "quasismooth", "claim", "verdict"],
    );
    for (k1, k2) in [(3, 5), (3, 6), (5, 5), (5, 6), (6, 6)] {
        let id = FamilyId::Pair { k1, k2 };
        let rec = family_record(id)?;
        for md in &rec.models {
            let q = is_quasismooth(&md.weights, &md.degrees)?;
            let claim = md.quasismooth_claim;
            t.push(vec![
                id.to_string(),
                rec.degree.to_string(),
                rec.content.to_string(),
                md.to_string(),
                if q.quasismooth { "yes" } else { "no" }.into(),
                claim.map(|c| if c { "yes" } else { "no" }).unwrap_or("-").into(),
                verdict(claim.is_none_or(|c| c == q.quasismooth)),
            ]);
        }
    }
    Ok(t)
}

pub fn generate_tables() -> Result<Vec<Table>> {
    Ok(vec![
        cascade_table(5)?,
        hilbert_model_table()?,
        weight_matrix_table()?,
        root_system_table()?,
        index_table()?,
        quiver_table()?,
        pair_table()?,
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct TableStatus {
    pub file: String,
    /// `same`, `changed`, `missing` or `written`
    pub status: String,
    pub discrepancies: Vec<String>,
}

/// Regenerates every table and compares it with `golden_dir`; with `write`,
/// the golden copies are replaced instead.
pub fn regenerate_tables(golden_dir: &Path, write: bool) -> Result<Vec<TableStatus>> {
    let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", golden_dir.display()));
    if write {
        fs::create_dir_all(golden_dir).map_err(io)?;
    }
    let mut out = Vec::new();
    for t in generate_tables()? {
        let path = golden_dir.join(t.file_name());
        let text = t.render();
        let status = if write {
            fs::write(&path, &text).map_err(io)?;
            "written"
        } else {
            match fs::read_to_string(&path) {
                Ok(old) if old == text => "same",
                Ok(_) => "changed",
                Err(_) => "missing",
            }
        };
        out.push(TableStatus { file: t.file_name(), status: status.into(), discrepancies: t.discrepancies() });
    }
    Ok(out)
}
