//! Row generation and TSV rendering for the structural table (per-order
//! invariants) and the chromatic-sum table.

use std::fmt::Write as _;

use crate::chroma::{ChromaticReport, Solver};
use crate::invariants::{self, underlying_degrees};
use crate::published::{self, Printed};
use crate::{IncidencePolynomial, JacoGraph, Rational, Result, SimpleGraph};

/// Invariants of `J_i(f)` for one order `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralRow {
    pub i: usize,
    pub in_degree: usize,
    pub out_degree_root: u64,
    pub jaconian_set: Vec<usize>,
    pub max_degree: usize,
    /// `None` when `v_i` is unreachable from `v_1`.
    pub dist_v1: Option<usize>,
}

pub const STRUCTURAL_COLUMNS: [&str; 6] = [
    "i",
    "in_degree",
    "out_degree_root",
    "jaconian_set",
    "max_degree",
    "dist_v1",
];

/// One row per order `1..=n`, reusing a single build of `J_n(f)`.
pub fn structural_rows(p: IncidencePolynomial, n: usize) -> Result<Vec<StructuralRow>> {
    let g = JacoGraph::build(p, n)?;
    (1..=n)
        .map(|i| {
            let gi = g.truncated(i)?;
            let degrees = underlying_degrees(&gi);
            let max_degree = degrees.iter().copied().max().unwrap_or(0);
            let record = g.record(i)?;
            Ok(StructuralRow {
                i,
                in_degree: record.in_degree,
                out_degree_root: record.out_degree_root(),
                jaconian_set: (1..=i).filter(|&v| degrees[v - 1] == max_degree).collect(),
                max_degree,
                dist_v1: invariants::v1_distance(&gi).ok(),
            })
        })
        .collect()
}

/// Chromatic report of the underlying graph of `J_i(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticRow {
    pub i: usize,
    pub report: ChromaticReport,
}

pub const CHROMATIC_COLUMNS: [&str; 7] = [
    "i",
    "chi_minus",
    "chi_plus",
    "mu_minus",
    "mu_plus",
    "var_minus",
    "var_plus",
];

pub fn chromatic_rows(
    p: IncidencePolynomial,
    n: usize,
    solver: &Solver,
) -> Result<Vec<ChromaticRow>> {
    let g = JacoGraph::build(p, n)?;
    (1..=n)
        .map(|i| {
            let report = solver.chroma_report(&SimpleGraph::from_jaco(&g.truncated(i)?))?;
            Ok(ChromaticRow { i, report })
        })
        .collect()
}

/// Rational as `p/q` in lowest terms, integers bare.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn printed(p: Printed) -> Rational {
    Rational::new(p.0, p.1)
}

/// `column=printed` entries for every published structural value that
/// differs from the computed row. Empty outside the published range.
pub fn structural_errata(p: IncidencePolynomial, row: &StructuralRow) -> Vec<String> {
    let mut notes = Vec::new();
    if p != IncidencePolynomial::square() {
        return notes;
    }
    let Some(pub_row) = published::STRUCTURAL_TABLE.get(row.i.wrapping_sub(1)) else {
        return notes;
    };
    if pub_row.in_degree != row.in_degree {
        notes.push(format!("in_degree={}", pub_row.in_degree));
    }
    if pub_row.out_degree_root != row.out_degree_root {
        notes.push(format!("out_degree_root={}", pub_row.out_degree_root));
    }
    if pub_row.jaconian_set != row.jaconian_set.as_slice() {
        notes.push(format!("jaconian_set={}", join(pub_row.jaconian_set)));
    }
    if pub_row.max_degree != row.max_degree {
        notes.push(format!("max_degree={}", pub_row.max_degree));
    }
    if Some(pub_row.dist_v1) != row.dist_v1 {
        notes.push(format!("dist_v1={}", pub_row.dist_v1));
    }
    notes
}

/// `column=printed` entries for every published chromatic value that differs
/// in value from the computed one (unreduced but equal fractions are not
/// errata).
pub fn chromatic_errata(p: IncidencePolynomial, row: &ChromaticRow) -> Vec<String> {
    let mut notes = Vec::new();
    if p != IncidencePolynomial::square() {
        return notes;
    }
    let Some(pub_row) = published::CHROMATIC_TABLE.get(row.i.wrapping_sub(1)) else {
        return notes;
    };
    let r = &row.report;
    if pub_row.chi_minus != r.chi_minus {
        notes.push(format!("chi_minus={}", pub_row.chi_minus));
    }
    if pub_row.chi_plus != r.chi_plus {
        notes.push(format!("chi_plus={}", pub_row.chi_plus));
    }
    let fractions = [
        ("mu_minus", pub_row.mu_minus, r.mu_minus),
        ("mu_plus", pub_row.mu_plus, r.mu_plus),
        ("var_minus", pub_row.var_minus, r.var_minus),
        ("var_plus", pub_row.var_plus, r.var_plus),
    ];
    for (name, shown, computed) in fractions {
        if printed(shown) != computed {
            notes.push(format!("{name}={}/{}", shown.0, shown.1));
        }
    }
    notes
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TsvOptions {
    /// Append the minimum and maximum colour-weight vectors.
    pub weights: bool,
    /// Append a `published_errata` column with published values that differ.
    pub errata: bool,
}

pub fn structural_tsv(p: IncidencePolynomial, rows: &[StructuralRow], opts: TsvOptions) -> String {
    let mut out = STRUCTURAL_COLUMNS.join("\t");
    if opts.errata {
        out.push_str("\tpublished_errata");
    }
    out.push('\n');
    for row in rows {
        let dist = row
            .dist_v1
            .map_or_else(|| "-".to_string(), |d| d.to_string());
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            row.i,
            row.in_degree,
            row.out_degree_root,
            join(&row.jaconian_set),
            row.max_degree,
            dist
        );
        if opts.errata {
            out.push('\t');
            out.push_str(&structural_errata(p, row).join(";"));
        }
        out.push('\n');
    }
    out
}

pub fn chromatic_tsv(p: IncidencePolynomial, rows: &[ChromaticRow], opts: TsvOptions) -> String {
    let mut out = CHROMATIC_COLUMNS.join("\t");
    if opts.weights {
        out.push_str("\tweights_min\tweights_max");
    }
    if opts.errata {
        out.push_str("\tpublished_errata");
    }
    out.push('\n');
    for row in rows {
        let r = &row.report;
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.i,
            r.chi_minus,
            r.chi_plus,
            format_rational(&r.mu_minus),
            format_rational(&r.mu_plus),
            format_rational(&r.var_minus),
            format_rational(&r.var_plus)
        );
        if opts.weights {
            let _ = write!(out, "\t{}\t{}", join(&r.weights_min), join(&r.weights_max));
        }
        if opts.errata {
            out.push('\t');
            out.push_str(&chromatic_errata(p, row).join(";"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_structural_row() {
        let rows = structural_rows(IncidencePolynomial::square(), 1).unwrap();
        let tsv = structural_tsv(IncidencePolynomial::square(), &rows, TsvOptions::default());
        assert_eq!(
            tsv,
            "i\tin_degree\tout_degree_root\tjaconian_set\tmax_degree\tdist_v1\n1\t0\t1\t1\t0\t0\n"
        );
    }

    #[test]
    fn zero_polynomial_rows() {
        let rows = structural_rows(IncidencePolynomial::default(), 3).unwrap();
        assert!(rows.iter().all(|r| r.max_degree == 0));
        assert_eq!(rows[2].jaconian_set, vec![1, 2, 3]);
        assert_eq!(rows[2].dist_v1, None);
        let tsv = structural_tsv(IncidencePolynomial::default(), &rows, TsvOptions::default());
        assert!(tsv.ends_with("3\t0\t0\t1,2,3\t0\t-\n"));
    }

    #[test]
    fn chromatic_row_nine() {
        let rows = chromatic_rows(IncidencePolynomial::square(), 9, &Solver::default()).unwrap();
        let tsv = chromatic_tsv(IncidencePolynomial::square(), &rows, TsvOptions::default());
        assert_eq!(tsv.lines().nth(1).unwrap(), "1\t1\t1\t1\t1\t0\t0");
        assert_eq!(
            tsv.lines().nth(9).unwrap(),
            "9\t31\t41\t31/9\t41/9\t344/81\t344/81"
        );
    }

    #[test]
    fn errata_annotations() {
        let p = IncidencePolynomial::square();
        let rows = structural_rows(p, 12).unwrap();
        assert_eq!(structural_errata(p, &rows[8]), vec!["out_degree_root=73"]);
        assert_eq!(structural_errata(p, &rows[11]), vec!["dist_v1=4"]);
        assert!(structural_errata(p, &rows[5]).is_empty());
        assert!(structural_errata(IncidencePolynomial::new(1, 0, 1), &rows[8]).is_empty());

        let crows = chromatic_rows(p, 10, &Solver::default()).unwrap();
        // unreduced 24/8, 32/8, 192/64 are equal values, not errata
        assert!(chromatic_errata(p, &crows[7]).is_empty());
        assert_eq!(
            chromatic_errata(p, &crows[9]),
            vec!["var_minus=469/100", "var_plus=469/100"]
        );
    }
}
