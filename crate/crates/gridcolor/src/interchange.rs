//! The JSON coloring file format.
//!
//! ```json
//! {"dims":[2,2],"k":3,"cells":[1,2,3,2]}
//! ```
//!
//! `cells` lists every cell in row-major order (last coordinate varies
//! fastest), `null` marking empty cells. Coordinates elsewhere in reports
//! are 1-based. An optional `"remainder":[[1,3],...]` field carries pairs a
//! partial coloring is excused from realizing. Serialization is canonical:
//! same coloring, same bytes.

use serde::{Deserialize, Serialize};

use crate::coloring::PartialColoring;
use crate::grid::GridGraph;
use crate::pairs::PairSet;
use crate::Result;

#[derive(Debug, Serialize, Deserialize)]
struct ColoringFile {
    dims: Vec<usize>,
    k: u32,
    cells: Vec<Option<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    remainder: Option<Vec<(u32, u32)>>,
}

pub fn to_json(c: &PartialColoring, remainder: Option<&PairSet>) -> String {
    let file = ColoringFile {
        dims: c.graph().dims().to_vec(),
        k: c.k(),
        cells: c.cells().to_vec(),
        remainder: remainder.map(|r| r.iter().collect()),
    };
    serde_json::to_string(&file).expect("coloring serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<(PartialColoring, Option<PairSet>)> {
    let file: ColoringFile = serde_json::from_str(text)?;
    let graph = GridGraph::new(&file.dims)?;
    let coloring = PartialColoring::from_cells(graph, file.k, file.cells)?;
    let remainder = match file.remainder {
        Some(pairs) => Some(PairSet::from_pairs(file.k, &pairs)?),
        None => None,
    };
    Ok((coloring, remainder))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn round_trip_is_byte_exact() {
        let g = GridGraph::new(&[2, 3]).unwrap();
        let c =
            PartialColoring::from_cells(g, 4, vec![Some(1), None, Some(2), Some(3), Some(4), None])
                .unwrap();
        let text = to_json(&c, None);
        let (back, rem) = from_json(&text).unwrap();
        assert_eq!(back, c);
        assert!(rem.is_none());
        assert_eq!(to_json(&back, None), text);
    }

    #[test]
    fn remainder_round_trip() {
        let g = GridGraph::new(&[1, 2]).unwrap();
        let c = PartialColoring::from_cells(g, 3, vec![Some(1), Some(2)]).unwrap();
        let rem = PairSet::from_pairs(3, &[(1, 3), (2, 3)]).unwrap();
        let text = to_json(&c, Some(&rem));
        assert!(text.contains("\"remainder\":[[1,3],[2,3]]"));
        let (back, back_rem) = from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back_rem.unwrap(), rem);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_json("{"), Err(Error::Malformed(_))));
        assert!(matches!(
            from_json(r#"{"dims":[2,2],"k":3,"cells":[1,2,3]}"#),
            Err(Error::CellCount { .. })
        ));
        assert!(matches!(
            from_json(r#"{"dims":[1,2],"k":3,"cells":[0,1]}"#),
            Err(Error::ZeroColor)
        ));
        assert!(matches!(
            from_json(r#"{"dims":[],"k":3,"cells":[]}"#),
            Err(Error::EmptyDims)
        ));
        assert!(matches!(
            from_json(r#"{"dims":[1,2],"k":3,"cells":[1,2],"remainder":[[1,1]]}"#),
            Err(Error::BadPair { .. })
        ));
    }

    #[test]
    fn example_from_docs() {
        let (c, _) = from_json(r#"{"dims":[2,2],"k":3,"cells":[1,2,3,2]}"#).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.get(2), Some(3));
    }
}
