//! Report assembly: certified cells and their plain, JSON, markdown, and
//! CSV emission. All emitters return the full output as one `String`; the
//! binary performs a single write, so identical invocations are
//! byte-identical.

use madhava::{pi_reference, to_decimal, DecimalRendering, Rat, Rounding};
use serde::Serialize;

use crate::render::{bold_correct_prefix, correct_digits, sig3_upper};

/// One certified value: the exact rational, its rendering, an
/// enclosure-certified upper bound on its distance to π, and how many of
/// its rendered decimals are certified correct.
pub struct Cell {
    pub value: Rat,
    pub rendering: DecimalRendering,
    pub abs_error_bound: Rat,
    pub correct_digits: u32,
}

impl Cell {
    /// Builds the cell; the bound is the maximal distance from `value` to
    /// the reference enclosure, which exceeds the true |value − π| by at
    /// most the enclosure width (≤ 10⁻³⁰).
    pub fn new(value: Rat, digits: u32, rounding: Rounding) -> Self {
        let rendering =
            to_decimal(&value, digits, rounding).expect("scale is validated at the flag boundary");
        let abs_error_bound = pi_reference().abs_distance_to(&value);
        let correct_digits = correct_digits(rendering.digits());
        Cell {
            value,
            rendering,
            abs_error_bound,
            correct_digits,
        }
    }
}

/// A rational in JSON form: the rendered decimal plus the exact
/// numerator/denominator pair, so output round-trips losslessly.
#[derive(Serialize)]
pub struct RationalJson {
    pub decimal: String,
    pub num: String,
    pub den: String,
}

impl RationalJson {
    fn value(cell: &Cell) -> Self {
        RationalJson {
            decimal: cell.rendering.digits().to_owned(),
            num: cell.value.numer().to_string(),
            den: cell.value.denom().to_string(),
        }
    }

    fn bound(cell: &Cell) -> Self {
        RationalJson {
            // Directed (never understating) three-significant-digit view;
            // num/den carry the exact bound.
            decimal: sig3_upper(&cell.abs_error_bound),
            num: cell.abs_error_bound.numer().to_string(),
            den: cell.abs_error_bound.denom().to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct ComputeRowJson {
    pub n: u64,
    pub value: RationalJson,
    pub abs_error_bound: RationalJson,
    pub correct_digits: u32,
}

#[derive(Serialize)]
pub struct ComputeJson {
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cf_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounds: Option<u32>,
    pub digits: u32,
    pub rounding: String,
    pub rows: Vec<ComputeRowJson>,
}

/// Plain `compute` output: the rendered value, the certified bound, and
/// the certified-correct decimal count.
pub fn compute_plain(cell: &Cell) -> String {
    format!(
        "{}\nerror bound: {} (certified |value - pi|)\ncorrect decimals: {}\n",
        cell.rendering.digits(),
        sig3_upper(&cell.abs_error_bound),
        cell.correct_digits
    )
}

/// JSON `compute` output (one row; the rows array keeps the shape shared
/// with `table`).
pub fn compute_json(
    method: &str,
    n: u64,
    cf_order: Option<u64>,
    rounds: Option<u32>,
    cell: &Cell,
) -> String {
    let out = ComputeJson {
        method: method.to_owned(),
        cf_order,
        rounds,
        digits: cell.rendering.scale(),
        rounding: cell.rendering.rounding().to_string(),
        rows: vec![ComputeRowJson {
            n,
            value: RationalJson::value(cell),
            abs_error_bound: RationalJson::bound(cell),
            correct_digits: cell.correct_digits,
        }],
    };
    to_pretty(&out)
}

#[derive(Serialize)]
pub struct TableCellJson {
    pub decimal: String,
    pub num: String,
    pub den: String,
    pub abs_error_bound: RationalJson,
    pub correct_digits: u32,
}

impl From<&Cell> for TableCellJson {
    fn from(cell: &Cell) -> Self {
        TableCellJson {
            decimal: cell.rendering.digits().to_owned(),
            num: cell.value.numer().to_string(),
            den: cell.value.denom().to_string(),
            abs_error_bound: RationalJson::bound(cell),
            correct_digits: cell.correct_digits,
        }
    }
}

#[derive(Serialize)]
pub struct TableRowJson {
    pub n: u64,
    pub a: TableCellJson,
    pub b: TableCellJson,
    pub c: TableCellJson,
}

#[derive(Serialize)]
pub struct TableJson {
    pub method: String,
    pub digits: u32,
    pub rounding: String,
    pub rows: Vec<TableRowJson>,
}

/// One table row: the three accelerated-series cells at index n.
pub struct TableRow {
    pub n: u64,
    pub a: Cell,
    pub b: Cell,
    pub c: Cell,
}

/// Markdown pipe table; the enclosure-certified correct decimals of every
/// cell are wrapped in bold.
pub fn table_markdown(rows: &[TableRow]) -> String {
    let mut out = String::from("| n | a_n | b_n | c_n |\n|--:|:--|:--|:--|\n");
    for row in rows {
        let fmt = |cell: &Cell| bold_correct_prefix(cell.rendering.digits(), cell.correct_digits);
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            row.n,
            fmt(&row.a),
            fmt(&row.b),
            fmt(&row.c)
        ));
    }
    out
}

/// CSV with a header row; plain renderings, no quoting needed.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,a,b,c\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.n,
            row.a.rendering.digits(),
            row.b.rendering.digits(),
            row.c.rendering.digits()
        ));
    }
    out
}

/// JSON table: method, rendering parameters, and one object per row with
/// exact rationals alongside every decimal.
pub fn table_json(rows: &[TableRow], digits: u32, rounding: Rounding) -> String {
    let out = TableJson {
        method: "table".to_owned(),
        digits,
        rounding: rounding.to_string(),
        rows: rows
            .iter()
            .map(|row| TableRowJson {
                n: row.n,
                a: (&row.a).into(),
                b: (&row.b).into(),
                c: (&row.c).into(),
            })
            .collect(),
    };
    to_pretty(&out)
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use madhava::series_c;

    #[test]
    fn cell_certifies_the_frozen_example() {
        let cell = Cell::new(series_c(2), 13, Rounding::TowardZero);
        assert_eq!(cell.rendering.digits(), "3.1414634146341");
        assert_eq!(cell.correct_digits, 3);
        assert_eq!(sig3_upper(&cell.abs_error_bound), "1.30e-4");
    }

    #[test]
    fn markdown_bolds_certified_digits() {
        let rows = [TableRow {
            n: 2,
            a: Cell::new(madhava::series_a(2), 13, Rounding::TowardZero),
            b: Cell::new(madhava::series_b(2), 13, Rounding::TowardZero),
            c: Cell::new(series_c(2), 13, Rounding::TowardZero),
        }];
        let md = table_markdown(&rows);
        assert!(md.contains("| 2 | 3.**1**333333333333 | 3.**1**372549019607 | 3.**141**4634146341 |"));
    }

    #[test]
    fn csv_is_plain() {
        let rows = [TableRow {
            n: 1,
            a: Cell::new(madhava::series_a(1), 5, Rounding::TowardZero),
            b: Cell::new(madhava::series_b(1), 5, Rounding::TowardZero),
            c: Cell::new(series_c(1), 5, Rounding::TowardZero),
        }];
        assert_eq!(table_csv(&rows), "n,a,b,c\n1,3.16666,3.20000,3.14285\n");
    }
}
