//! Census JSON: the stable machine format for classified embeddings.
//!
//! ```json
//! {"d":2,"n":3,"sigma":[[1,0,2],[0,1,2]],"theta":[0,1],
//!  "type":{"p":6,"q":4,"r":4},"V":9,"E":18,"F":6,"chi":-3,
//!  "orientable":false,"genus":5,"group_order":72,"witness":[2,2,2],
//!  "census_note":"Conder dual of N5.2"}
//! ```

use serde::{Deserialize, Serialize};

use crate::classify::{ClassifyError, MapRecord};
use crate::map::{MapInvariants, MapType};
use crate::perm::Perm;
use crate::wreath::CanonicalTripleParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub d: usize,
    pub n: usize,
    pub sigma: Vec<Vec<u16>>,
    pub theta: Vec<u16>,
    #[serde(rename = "type")]
    pub map_type: MapType,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub chi: i64,
    pub orientable: bool,
    pub genus: i64,
    pub group_order: usize,
    pub witness: Option<Vec<i64>>,
    pub census_note: Option<String>,
}

impl From<&MapRecord> for CensusEntry {
    fn from(r: &MapRecord) -> Self {
        let inv = &r.invariants;
        CensusEntry {
            d: r.d(),
            n: r.n(),
            sigma: r.params.sigma_images(),
            theta: r.params.theta.images().to_vec(),
            map_type: inv.map_type,
            vertices: inv.vertices,
            edges: inv.edges,
            faces: inv.faces,
            chi: inv.euler,
            orientable: inv.orientable,
            genus: inv.genus,
            group_order: inv.group_order,
            witness: r.witness.clone(),
            census_note: r.census_note.clone(),
        }
    }
}

impl TryFrom<CensusEntry> for MapRecord {
    type Error = ClassifyError;

    /// Rebuilds the record and revalidates its triple.
    fn try_from(e: CensusEntry) -> Result<MapRecord, ClassifyError> {
        let bad = |reason: String| ClassifyError::BadRecord { d: e.d, n: e.n, reason };
        let sigma = e
            .sigma
            .iter()
            .map(|s| Perm::from_images(s.iter().copied()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|err| bad(err.to_string()))?;
        let theta = Perm::from_images(e.theta.iter().copied()).map_err(|err| bad(err.to_string()))?;
        let params = CanonicalTripleParams::new(e.d, e.n, sigma, theta)?;
        let record = MapRecord {
            params,
            invariants: MapInvariants {
                map_type: e.map_type,
                vertices: e.vertices,
                edges: e.edges,
                faces: e.faces,
                euler: e.chi,
                orientable: e.orientable,
                genus: e.genus,
                group_order: e.group_order,
            },
            witness: e.witness.clone(),
            census_note: e.census_note.clone(),
        };
        record.revalidate()?;
        Ok(record)
    }
}

pub fn to_json(records: &[MapRecord]) -> String {
    let entries: Vec<CensusEntry> = records.iter().map(CensusEntry::from).collect();
    serde_json::to_string_pretty(&entries).expect("census entries are plain data")
}

pub fn from_json(text: &str) -> Result<Vec<MapRecord>, ClassifyError> {
    let entries: Vec<CensusEntry> = serde_json::from_str(text).map_err(|e| ClassifyError::BadRecord {
        d: 0,
        n: 0,
        reason: format!("census JSON: {e}"),
    })?;
    entries.into_iter().map(MapRecord::try_from).collect()
}
