//! JSON schema for stratification data and catalog models.
//!
//! Polynomials, rational coordinates, and map images travel as text in the
//! library's polynomial syntax (`"D - 3/2*t^2"`), so files stay exact and
//! readable. Variables are declared with an `inverted` flag.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use strata::catalog::ExampleModel;
use strata::commalg::{parse_poly, parse_rational, AlgMap, Ideal, Point, PolyRing};
use strata::poset::Poset;
use strata::topology::{
    ClosedSet, ComorphismPair, Space, StratificationData, TransferMap, TransferRule,
};

#[derive(Debug, Serialize, Deserialize)]
pub struct ModelJson {
    pub name: String,
    pub poset: PosetJson,
    pub strata: BTreeMap<String, SpaceJson>,
    #[serde(default)]
    pub transfers: Vec<TransferJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    /// strict pairs a < b; reflexivity is implied, transitivity is not
    pub leq: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceJson {
    Finite {
        points: Vec<String>,
        closed: Vec<Vec<String>>,
    },
    Variety {
        vars: Vec<VarJson>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VarJson {
    pub name: String,
    #[serde(default)]
    pub inverted: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TransferJson {
    pub from: String,
    pub to: String,
    pub rule: RuleJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleJson {
    Table {
        entries: Vec<(SetJson, SetJson)>,
    },
    /// `f` and `g` map each intermediate variable to a polynomial of the
    /// upper resp. lower stratum ring.
    Comorphism {
        mid: Vec<VarJson>,
        f: BTreeMap<String, String>,
        g: BTreeMap<String, String>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetJson {
    Empty,
    Whole,
    Points { points: Vec<Vec<String>> },
    Variety { gens: Vec<String> },
    Family { members: Vec<String> },
}

fn vars_to_ring(vars: &[VarJson]) -> Result<PolyRing, String> {
    PolyRing::new(vars.iter().map(|v| (v.name.clone(), v.inverted)).collect())
        .map_err(|e| e.to_string())
}

fn ring_to_vars(ring: &PolyRing) -> Vec<VarJson> {
    ring.vars()
        .iter()
        .map(|v| VarJson { name: v.name.clone(), inverted: v.inverted })
        .collect()
}

pub fn set_to_json(set: &ClosedSet, space: &Space) -> Result<SetJson, String> {
    Ok(match set {
        ClosedSet::Empty => SetJson::Empty,
        ClosedSet::Whole => SetJson::Whole,
        ClosedSet::FinitePoints(pts) => SetJson::Points {
            points: pts
                .iter()
                .map(|p| p.iter().map(|c| c.to_string()).collect())
                .collect(),
        },
        ClosedSet::Variety(ideal) => SetJson::Variety {
            gens: ideal.gens().iter().map(|g| g.render(ideal.ring())).collect(),
        },
        ClosedSet::FiniteFamily(members) => SetJson::Family {
            members: members.iter().cloned().collect(),
        },
        #[allow(unreachable_patterns)]
        _ => return Err(format!("unsupported set in {}", space.name())),
    })
}

pub fn set_from_json(json: &SetJson, space: &Space) -> Result<ClosedSet, String> {
    Ok(match json {
        SetJson::Empty => ClosedSet::Empty,
        SetJson::Whole => ClosedSet::Whole,
        SetJson::Points { points } => {
            let mut pts: Vec<Point> = Vec::new();
            for coords in points {
                let p: Result<Point, _> =
                    coords.iter().map(|c| parse_rational(c)).collect();
                pts.push(p.map_err(|e| e.to_string())?);
            }
            ClosedSet::points(pts)
        }
        SetJson::Variety { gens } => {
            let ring = space
                .ring()
                .ok_or_else(|| format!("variety set in finite stratum {}", space.name()))?;
            let polys: Result<Vec<_>, _> =
                gens.iter().map(|g| parse_poly(ring, g)).collect();
            ClosedSet::Variety(Ideal::new(ring.clone(), polys.map_err(|e| e.to_string())?))
        }
        SetJson::Family { members } => {
            ClosedSet::FiniteFamily(members.iter().cloned().collect())
        }
    })
}

fn map_to_json(map: &AlgMap) -> BTreeMap<String, String> {
    map.source()
        .vars()
        .iter()
        .zip(map.images())
        .map(|(v, img)| (v.name.clone(), img.render(map.target())))
        .collect()
}

fn map_from_json(
    mid: &PolyRing,
    target: &PolyRing,
    images: &BTreeMap<String, String>,
) -> Result<AlgMap, String> {
    let mut polys = Vec::with_capacity(mid.n_vars());
    for v in mid.vars() {
        let text = images
            .get(&v.name)
            .ok_or_else(|| format!("map misses an image for `{}`", v.name))?;
        polys.push(parse_poly(target, text).map_err(|e| e.to_string())?);
    }
    AlgMap::new(mid.clone(), target.clone(), polys).map_err(|e| e.to_string())
}

pub fn data_to_json(name: &str, data: &StratificationData) -> Result<ModelJson, String> {
    let mut strata = BTreeMap::new();
    for (label, space) in &data.strata {
        let json = match space {
            Space::Finite { points, closed, .. } => SpaceJson::Finite {
                points: points.iter().cloned().collect(),
                closed: closed
                    .iter()
                    .map(|c| c.iter().cloned().collect())
                    .collect(),
            },
            Space::Variety { ring, .. } => SpaceJson::Variety { vars: ring_to_vars(ring) },
        };
        strata.insert(label.clone(), json);
    }
    let mut transfers = Vec::new();
    for ((a, b), tm) in &data.transfers {
        let rule = match &tm.rule {
            TransferRule::Table(entries) => {
                let src = data.stratum(a).map_err(|e| e.to_string())?;
                let tgt = data.stratum(b).map_err(|e| e.to_string())?;
                let mut out = Vec::new();
                for (k, v) in entries {
                    out.push((set_to_json(k, src)?, set_to_json(v, tgt)?));
                }
                RuleJson::Table { entries: out }
            }
            TransferRule::Comorphism(pair) => RuleJson::Comorphism {
                mid: ring_to_vars(&pair.mid),
                f: map_to_json(&pair.f),
                g: map_to_json(&pair.g),
            },
        };
        transfers.push(TransferJson { from: a.clone(), to: b.clone(), rule });
    }
    Ok(ModelJson {
        name: name.to_string(),
        poset: PosetJson {
            elements: data.poset.elements().to_vec(),
            leq: data.poset.strict_pairs(),
        },
        strata,
        transfers,
    })
}

pub fn data_from_json(json: &ModelJson) -> Result<StratificationData, String> {
    let poset = Poset::new(json.poset.elements.clone(), &json.poset.leq)
        .map_err(|e| e.to_string())?;
    let mut strata = BTreeMap::new();
    for (label, sj) in &json.strata {
        let space = match sj {
            SpaceJson::Finite { points, closed } => Space::Finite {
                name: label.clone(),
                points: points.iter().cloned().collect(),
                closed: closed
                    .iter()
                    .map(|c| c.iter().cloned().collect())
                    .collect(),
            },
            SpaceJson::Variety { vars } => Space::Variety {
                name: label.clone(),
                ring: vars_to_ring(vars)?,
            },
        };
        strata.insert(label.clone(), space);
    }
    let mut transfers = BTreeMap::new();
    for tj in &json.transfers {
        let src = strata
            .get(&tj.from)
            .ok_or_else(|| format!("transfer from unknown stratum `{}`", tj.from))?;
        let tgt = strata
            .get(&tj.to)
            .ok_or_else(|| format!("transfer to unknown stratum `{}`", tj.to))?;
        let rule = match &tj.rule {
            RuleJson::Table { entries } => {
                let mut out = Vec::new();
                for (k, v) in entries {
                    out.push((set_from_json(k, src)?, set_from_json(v, tgt)?));
                }
                TransferRule::Table(out)
            }
            RuleJson::Comorphism { mid, f, g } => {
                let mid_ring = vars_to_ring(mid)?;
                let src_ring = src
                    .ring()
                    .ok_or_else(|| format!("comorphism out of finite stratum `{}`", tj.from))?;
                let tgt_ring = tgt
                    .ring()
                    .ok_or_else(|| format!("comorphism into finite stratum `{}`", tj.to))?;
                let f = map_from_json(&mid_ring, tgt_ring, f)?;
                let g = map_from_json(&mid_ring, src_ring, g)?;
                TransferRule::Comorphism(
                    ComorphismPair::new(mid_ring, f, g).map_err(|e| e.to_string())?,
                )
            }
        };
        transfers.insert(
            (tj.from.clone(), tj.to.clone()),
            TransferMap { source: tj.from.clone(), target: tj.to.clone(), rule },
        );
    }
    Ok(StratificationData { poset, strata, transfers })
}

/// Catalog models export through their stratification data; the SL₃ entry
/// has no strata and exports poset, generators, and heights instead.
pub fn model_to_json(model: &ExampleModel) -> Result<serde_json::Value, String> {
    if model.strata.is_empty() {
        let gens: BTreeMap<String, Vec<String>> = model.hprime_generators.clone();
        let heights: BTreeMap<String, usize> = model
            .poset
            .elements()
            .iter()
            .map(|l| (l.clone(), model.hprime_height(l).unwrap_or(0)))
            .collect();
        return Ok(serde_json::json!({
            "name": model.name,
            "poset": PosetJson {
                elements: model.poset.elements().to_vec(),
                leq: model.poset.strict_pairs(),
            },
            "generators": gens,
            "heights": heights,
        }));
    }
    let data = model.to_stratification();
    let json = data_to_json(&model.name, &data)?;
    serde_json::to_value(json).map_err(|e| e.to_string())
}
