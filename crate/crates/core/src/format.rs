//! TOML file formats for arrangements and graded maps.
//!
//! Arrangement:
//! ```toml
//! ell = 2
//! rows = [[0, 1, -1], ["1/2", 1, 0]]
//! ```
//! Graded map (`orientation = "row"` means the displayed matrices have one
//! row per source basis element, and are transposed on load):
//! ```toml
//! source = "T"
//! target = "T"
//! shift = 0
//! n = 4
//! orientation = "column"
//! [[block]]
//! degree = 1
//! rows = ["a[1]", "a[2]"]
//! cols = ["a[1]", "a[2]"]
//! entries = [["y1", "0"], ["-y2", "y1+y3"]]
//! ```

use serde::{Deserialize, Serialize};

use crate::aomoto::{Block, GradedMap};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::polymat::PolyMatrix;
use crate::rational::{fmt_q, parse_q, Q};

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn rational(&self) -> Result<Q> {
        match self {
            Entry::Int(i) => Ok(Q::from_integer((*i).into())),
            Entry::Text(s) => parse_q(s),
        }
    }

    fn poly(&self) -> Result<PolyQ> {
        match self {
            Entry::Int(i) => Ok(PolyQ::constant(Q::from_integer((*i).into()))),
            Entry::Text(s) => s.parse(),
        }
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    ell: usize,
    rows: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let file: ArrangementFile = toml::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let rows = file
        .rows
        .iter()
        .map(|r| r.iter().map(Entry::rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(file.ell, rows)
}

/// Writes the finite rows only; infinity is implicit.
pub fn arrangement_to_toml(a: &Arrangement) -> String {
    let file = ArrangementFile {
        ell: a.ell(),
        rows: (1..=a.n()).map(|i| a.row(i).iter().map(|x| Entry::Text(fmt_q(x))).collect()).collect(),
        name: None,
    };
    toml::to_string(&file).expect("arrangement serializes")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Columns are images of source basis vectors.
    #[default]
    Column,
    /// Rows are images of source basis vectors.
    Row,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct BlockFile {
    degree: usize,
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<Entry>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    source: String,
    target: String,
    shift: usize,
    n: usize,
    #[serde(default)]
    orientation: Orientation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    #[serde(default, rename = "block")]
    blocks: Vec<BlockFile>,
}

pub fn parse_graded_map(text: &str) -> Result<GradedMap> {
    let file: MapFile = toml::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let mut map = GradedMap::new(&file.source, &file.target, file.shift, file.n);
    for b in file.blocks {
        if b.entries.len() != b.rows.len() || b.entries.iter().any(|r| r.len() != b.cols.len()) {
            return Err(Error::Format(format!(
                "degree {}: entries do not match {} row and {} column labels",
                b.degree,
                b.rows.len(),
                b.cols.len()
            )));
        }
        let cells = b
            .entries
            .iter()
            .map(|r| r.iter().map(Entry::poly).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let shown = PolyMatrix::from_rows(cells);
        let shown = if shown.rows() == 0 { PolyMatrix::zeros(0, b.cols.len()) } else { shown };
        let block = match file.orientation {
            Orientation::Column => Block::new(b.rows, b.cols, shown)?,
            Orientation::Row => Block::new(b.cols, b.rows, shown.transpose())?,
        };
        if block.matrix.max_var() > file.n {
            return Err(Error::Format(format!("degree {}: variable index exceeds n = {}", b.degree, file.n)));
        }
        map.insert(b.degree, block);
    }
    Ok(map)
}

pub fn graded_map_to_toml(map: &GradedMap, orientation: Orientation) -> String {
    let blocks = map
        .blocks()
        .map(|(q, b)| {
            let (rows, cols, m) = match orientation {
                Orientation::Column => (b.rows.clone(), b.cols.clone(), b.matrix.clone()),
                Orientation::Row => (b.cols.clone(), b.rows.clone(), b.matrix.transpose()),
            };
            BlockFile {
                degree: q,
                rows,
                cols,
                entries: (0..m.rows())
                    .map(|i| (0..m.cols()).map(|j| Entry::Text(m[(i, j)].to_string())).collect())
                    .collect(),
            }
        })
        .collect();
    let file = MapFile {
        source: map.source.clone(),
        target: map.target.clone(),
        shift: map.shift,
        n: map.n,
        orientation,
        note: None,
        blocks,
    };
    toml::to_string(&file).expect("graded map serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_round_trip() {
        let a = parse_arrangement("ell = 2\nrows = [[0, 1, -1], [\"1/2\", 1, 0], [0, 0, 1]]\n").unwrap();
        assert_eq!(a.n(), 3);
        assert_eq!(parse_arrangement(&arrangement_to_toml(&a)).unwrap(), a);
        assert!(matches!(parse_arrangement("ell = 2\nrows = [[0, 0, 0]]"), Err(Error::ZeroRow(1))));
        assert!(matches!(parse_arrangement("ell = 2\nrows = [[\"1/0\", 1, 0]]"), Err(Error::MalformedRational(_))));
        assert!(matches!(parse_arrangement("rows = 3"), Err(Error::Format(_))));
    }

    #[test]
    fn row_orientation_transposes() {
        let text = r#"
source = "T"
target = "T"
shift = 1
n = 2
orientation = "row"
[[block]]
degree = 0
rows = ["a[]"]
cols = ["a[1]", "a[2]"]
entries = [["y1", "y2"]]
"#;
        let m = parse_graded_map(text).unwrap();
        let b = m.block(0).unwrap();
        assert_eq!((b.matrix.rows(), b.matrix.cols()), (2, 1));
        assert_eq!(b.rows, ["a[1]", "a[2]"]);
        for o in [Orientation::Row, Orientation::Column] {
            assert_eq!(parse_graded_map(&graded_map_to_toml(&m, o)).unwrap(), m);
        }
        assert!(parse_graded_map(&text.replace("\"y2\"", "\"y3\"")).is_err());
        assert!(parse_graded_map(&text.replace("[[\"y1\", \"y2\"]]", "[[\"y1\"]]")).is_err());
    }
}
