//! Published optimal weight-8 codes for `n <= 200`, used as golden data.

use num_rational::Ratio;
use serde::Serialize;

use crate::codebuilder::{build_code, CssCode};
use crate::error::{Error, Result};
use crate::gf2poly::{parse_poly, LaurentPoly};
use crate::torus::{canonicalize_torus, TwistedTorus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// 1 for `n <= 110`, 2 above.
    pub table: u8,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub f: &'static str,
    pub a1: [i64; 2],
    pub a2: [i64; 2],
    /// `kd²/n` as printed, rounded to two decimals.
    pub metric: &'static str,
}

const fn row(
    n: usize,
    k: usize,
    d: usize,
    f: &'static str,
    a1: [i64; 2],
    a2: [i64; 2],
    metric: &'static str,
) -> TableRow {
    TableRow {
        table: if n <= 110 { 1 } else { 2 },
        n,
        k,
        d,
        f,
        a1,
        a2,
        metric,
    }
}

pub const ROWS: &[TableRow] = &[
    row(16, 4, 4, "1 + x + y + y^-1", [0, 4], [2, 2], "4"),
    row(24, 8, 4, "1 + x + x^-1*y + x*y", [0, 6], [2, 2], "5.33"),
    row(30, 6, 5, "1 + x + x^2*y + x^-1*y", [0, 3], [5, 0], "5"),
    row(32, 12, 4, "1 + x + x^2*y + x^-1*y", [0, 4], [4, 2], "6"),
    row(
        36,
        10,
        4,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 3],
        [6, 0],
        "4.44",
    ),
    row(40, 6, 6, "1 + x + x*y^-1 + x^-1", [0, 4], [5, 1], "5.4"),
    row(42, 6, 6, "1 + x + x^2*y + x^-1*y", [0, 3], [7, 0], "5.14"),
    row(48, 16, 4, "1 + x + y^2 + x^-2", [0, 4], [6, 0], "5.33"),
    row(50, 10, 5, "1 + x + x^2*y + x^-1*y", [0, 5], [5, 0], "5"),
    row(
        54,
        10,
        6,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 9],
        [3, 3],
        "6.67",
    ),
    row(56, 6, 8, "1 + x + x^2*y + x^-1*y", [0, 7], [4, 3], "6.86"),
    row(60, 12, 5, "1 + x + x^2*y + x^-1*y", [0, 6], [5, 0], "5"),
    row(64, 8, 8, "1 + x + y + y^-1", [0, 8], [4, 4], "8"),
    row(66, 6, 8, "1 + x + y^2 + x^-2", [0, 11], [3, -3], "5.82"),
    row(70, 10, 6, "1 + x + x^2*y + x^-1*y", [0, 5], [7, 0], "5.14"),
    row(72, 12, 6, "1 + x + x^2*y + x^-1*y", [0, 6], [6, 3], "6"),
    row(78, 6, 10, "1 + x + y^2 + x^-2", [0, 13], [3, -3], "7.69"),
    row(80, 10, 8, "1 + x + x^2*y + x^-1*y", [0, 8], [5, 4], "8"),
    row(
        84,
        6,
        10,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 21],
        [2, 5],
        "7.14",
    ),
    row(90, 18, 6, "1 + x + x^3*y + x^-1*y", [0, 15], [3, 6], "7.2"),
    row(
        96,
        12,
        8,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 12],
        [4, 4],
        "8",
    ),
    row(98, 14, 6, "1 + x + x^2*y + x^-1*y", [0, 7], [7, 0], "5.14"),
    row(
        100,
        12,
        8,
        "1 + x + x^2*y + x^-1*y",
        [0, 5],
        [10, 0],
        "7.68",
    ),
    row(102, 6, 10, "1 + x + y^2 + x^-2", [0, 17], [3, 7], "5.88"),
    row(104, 6, 12, "1 + x + y + x^-1*y^-1", [0, 26], [2, 8], "8.31"),
    row(
        108,
        20,
        6,
        "1 + x + x*y^2 + x^-1*y^2",
        [0, 18],
        [3, 6],
        "6.67",
    ),
    row(
        110,
        10,
        8,
        "1 + x + x^2*y + x^-1*y",
        [0, 5],
        [11, 0],
        "5.82",
    ),
    row(
        112,
        6,
        12,
        "1 + x + x^2*y + x^-1*y^2",
        [0, 7],
        [8, 0],
        "7.71",
    ),
    row(114, 6, 10, "1 + x + y^2 + x^-2", [0, 19], [3, 5], "5.26"),
    row(120, 8, 12, "1 + x + y + x^-2*y^-2", [0, 6], [10, 0], "9.6"),
    row(
        126,
        22,
        6,
        "1 + x + x^-2*y + x^-1*y^-2",
        [0, 21],
        [3, 6],
        "6.29",
    ),
    row(128, 16, 8, "1 + x + x^2*y + x^-1*y", [0, 8], [8, 4], "8"),
    row(
        130,
        10,
        10,
        "1 + x + x^3*y + x^-1*y",
        [0, 5],
        [13, 1],
        "7.69",
    ),
    row(
        132,
        8,
        12,
        "1 + x + y^2 + x^-1*y^-1",
        [0, 33],
        [2, 11],
        "8.73",
    ),
    row(
        136,
        6,
        14,
        "1 + x + x^2*y + x^-1*y^2",
        [0, 17],
        [4, 4],
        "8.65",
    ),
    row(138, 6, 12, "1 + x + y^2 + x^-2", [0, 23], [3, 5], "6.26"),
    row(
        140,
        16,
        8,
        "1 + x + x^2*y + x^-1*y",
        [0, 7],
        [10, 0],
        "7.31",
    ),
    row(144, 6, 14, "1 + x + y + y^-2", [0, 24], [3, 11], "8.17"),
    row(
        150,
        6,
        14,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 15],
        [5, 7],
        "7.84",
    ),
    row(
        152,
        6,
        16,
        "1 + x + x^2*y + x^-1*y^2",
        [0, 19],
        [4, 6],
        "10.11",
    ),
    row(
        154,
        14,
        8,
        "1 + x + x^2*y + x^-1*y",
        [0, 7],
        [11, 0],
        "5.82",
    ),
    row(156, 12, 10, "1 + x + y^2 + x^-2", [0, 26], [3, 10], "7.69"),
    row(
        160,
        8,
        16,
        "1 + x + x^2*y^2 + x^-1*y",
        [0, 10],
        [8, 0],
        "12.8",
    ),
    row(162, 6, 14, "1 + x + y + y^-2", [0, 27], [3, 12], "7.26"),
    row(
        168,
        6,
        16,
        "1 + x + y + x^-1*y^-1",
        [0, 42],
        [2, 10],
        "9.14",
    ),
    row(
        170,
        10,
        10,
        "1 + x + x^3*y + x^-1*y",
        [0, 5],
        [17, 0],
        "5.88",
    ),
    row(174, 6, 14, "1 + x + y^2 + x^-2", [0, 29], [3, 5], "6.76"),
    row(176, 8, 16, "1 + x + y + y^-2", [0, 44], [2, 30], "11.64"),
    row(
        180,
        10,
        12,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 15],
        [6, 6],
        "8",
    ),
    row(
        182,
        14,
        10,
        "1 + x + x^3*y + x^-2*y",
        [0, 7],
        [13, 0],
        "7.69",
    ),
    row(
        184,
        6,
        16,
        "1 + x + x^2*y + x^-1*y^2",
        [0, 23],
        [4, 4],
        "8.35",
    ),
    row(186, 6, 14, "1 + x + y^2 + x^-2", [0, 31], [3, 5], "6.32"),
    row(
        190,
        10,
        10,
        "1 + x + x^3*y + x^-1*y",
        [0, 5],
        [19, 0],
        "5.26",
    ),
    row(
        192,
        12,
        12,
        "1 + x + y^2 + x^-1*y^-1",
        [0, 48],
        [2, 21],
        "9",
    ),
    row(
        196,
        14,
        10,
        "1 + x + x^3*y + x^-1*y",
        [0, 7],
        [14, 0],
        "7.14",
    ),
    row(
        198,
        10,
        12,
        "1 + x + x^-1*y^-1 + x^-1*y",
        [0, 33],
        [3, 9],
        "7.27",
    ),
    row(
        200,
        12,
        12,
        "1 + x + x^-1*y + x*y^2",
        [0, 50],
        [2, 14],
        "8.64",
    ),
];

impl TableRow {
    pub fn label(&self) -> String {
        format!("[[{},{},{}]]", self.n, self.k, self.d)
    }

    pub fn poly(&self) -> LaurentPoly {
        parse_poly(self.f).expect("table polynomial parses")
    }

    pub fn torus(&self) -> TwistedTorus {
        canonicalize_torus(self.a1, self.a2).expect("table torus is nondegenerate")
    }

    pub fn code(&self) -> CssCode {
        build_code(&self.poly(), &self.torus(), None)
    }

    pub fn metric(&self) -> Ratio<u64> {
        Ratio::new((self.k * self.d * self.d) as u64, self.n as u64)
    }
}

/// Rows of the given tables (1, 2 or both).
pub fn rows_in(tables: &[u8]) -> Vec<&'static TableRow> {
    ROWS.iter().filter(|r| tables.contains(&r.table)).collect()
}

/// Look a row up by `n` or by its `[[n,k,d]]` label.
pub fn find_row(key: &str) -> Result<&'static TableRow> {
    let key = key.trim();
    ROWS.iter()
        .find(|r| r.n.to_string() == key || r.label() == key.replace(' ', ""))
        .ok_or_else(|| Error::UnknownRow(key.to_string()))
}
