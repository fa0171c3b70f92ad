//! JSON documents. A `field` header fixes `p` and the radicand `d`; every
//! scalar is a string such as `"3/2"` or `"1/2+r"`, with `r = √d`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupModel, GroupSpec};
use crate::linalg::Mat;
use crate::phimod::{GlobalLedgerInput, PhiModule};
use crate::scalars::Scalar;
use crate::wdrep::{GalGroup, InertialData, WDPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldHeader {
    pub p: u64,
    #[serde(default = "one")]
    pub d: u64,
}

fn one() -> u64 {
    1
}

pub type RawMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawElement {
    pub matrix: RawMatrix,
    #[serde(default)]
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawInertia {
    pub table: Vec<Vec<usize>>,
    pub tau: Vec<RawElement>,
    pub theta: Vec<usize>,
    #[serde(default = "one_usize")]
    pub d: usize,
    #[serde(default)]
    pub frob: usize,
}

fn one_usize() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPoint {
    pub group: GroupSpec,
    #[serde(rename = "fK")]
    pub fk: u32,
    #[serde(rename = "Phi")]
    pub phi: RawElement,
    #[serde(rename = "N")]
    pub n: RawMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inertia: Option<RawInertia>,
}

/// Galois data of a module: `tau[g][i] = τ(g)_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGalois {
    pub table: Vec<Vec<usize>>,
    pub theta: Vec<usize>,
    pub d: usize,
    pub frob: usize,
    pub tau: Vec<Vec<RawElement>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModule {
    pub group: GroupSpec,
    #[serde(rename = "fK")]
    pub fk: u32,
    #[serde(rename = "fL")]
    pub fl: u32,
    #[serde(rename = "Phi")]
    pub phi: Vec<RawElement>,
    #[serde(rename = "N")]
    pub n: Vec<RawMatrix>,
    pub galois: RawGalois,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: FieldHeader,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<RawPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<RawModule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ledger: Option<GlobalLedgerInput>,
}

fn read_matrix(m: &RawMatrix, d: u64) -> Result<Mat> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|s| Scalar::parse_with(s, d)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err(Error::Parse("matrices must be square and non-empty".into()));
    }
    Mat::from_rows(rows)
}

fn write_matrix(m: &Mat) -> RawMatrix {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn read_element(g: &GroupModel, e: &RawElement, d: u64) -> Result<GroupElement> {
    let m = read_matrix(&e.matrix, d)?;
    if m.rows() != g.std_dim {
        return Err(Error::Parse(format!("expected {0}×{0} matrices for {1}", g.std_dim, g.name)));
    }
    if e.component >= g.n_components {
        return Err(Error::Parse(format!("component {} out of range", e.component)));
    }
    Ok(GroupElement::new(m, e.component))
}

fn write_element(e: &GroupElement) -> RawElement {
    RawElement { matrix: write_matrix(&e.matrix), component: e.component }
}

fn read_lie(g: &GroupModel, m: &RawMatrix, d: u64) -> Result<Vec<Scalar>> {
    let m = read_matrix(m, d)?;
    if m.rows() != g.std_dim {
        return Err(Error::Parse(format!("expected {0}×{0} matrices for {1}", g.std_dim, g.name)));
    }
    g.lie_coords(&m)
}

fn check_field(field: &FieldHeader) -> Result<()> {
    if field.d == 0 {
        return Err(Error::Parse("field radicand must be positive".into()));
    }
    Ok(())
}

impl Document {
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        check_field(&doc.field)?;
        Ok(doc)
    }

    /// Pretty JSON with a trailing newline; key order is fixed by the types.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn of_point(x: &WDPoint) -> Result<Self> {
        Ok(Document {
            field: FieldHeader { p: x.p, d: x.field_tag()? },
            point: Some(write_point(x)),
            module: None,
            ledger: None,
        })
    }

    pub fn of_module(m: &PhiModule) -> Result<Self> {
        let mut d = 1;
        for e in m.phis.iter().chain(m.taus.iter().flatten()) {
            let t = e.d_tag();
            if t != 1 {
                if d != 1 && d != t {
                    return Err(Error::FieldMismatch(d, t));
                }
                d = t;
            }
        }
        Ok(Document { field: FieldHeader { p: m.p, d }, point: None, module: Some(write_module(m)), ledger: None })
    }

    /// The point section, parsed but not validated.
    pub fn point(&self) -> Result<WDPoint> {
        let raw = self.point.as_ref().ok_or_else(|| Error::Parse("document has no 'point'".into()))?;
        read_point(raw, &self.field)
    }

    /// The module section, parsed but not validated.
    pub fn module(&self) -> Result<PhiModule> {
        let raw = self.module.as_ref().ok_or_else(|| Error::Parse("document has no 'module'".into()))?;
        read_module(raw, &self.field)
    }
}

pub fn read_point(raw: &RawPoint, field: &FieldHeader) -> Result<WDPoint> {
    let d = field.d;
    let g = GroupModel::from_spec(&raw.group)?;
    let phi = read_element(&g, &raw.phi, d)?;
    let n = read_lie(&g, &raw.n, d)?;
    let inertia = match &raw.inertia {
        None => InertialData::trivial(&g),
        Some(i) => InertialData {
            table: i.table.clone(),
            tau: i.tau.iter().map(|t| read_element(&g, t, d)).collect::<Result<_>>()?,
            theta: i.theta.clone(),
            d: i.d,
            frob: i.frob,
        },
    };
    Ok(WDPoint::new(g, field.p, raw.fk, phi, n, inertia))
}

pub fn write_point(x: &WDPoint) -> RawPoint {
    let i = &x.inertia;
    let trivial = i.order() == 1 && i.d == 1;
    RawPoint {
        group: x.group.spec.clone(),
        fk: x.fk,
        phi: write_element(&x.phi),
        n: write_matrix(&x.group.lie_elem(&x.n)),
        inertia: (!trivial).then(|| RawInertia {
            table: i.table.clone(),
            tau: i.tau.iter().map(write_element).collect(),
            theta: i.theta.clone(),
            d: i.d,
            frob: i.frob,
        }),
    }
}

pub fn read_module(raw: &RawModule, field: &FieldHeader) -> Result<PhiModule> {
    let d = field.d;
    let g = GroupModel::from_spec(&raw.group)?;
    let phis = raw.phi.iter().map(|e| read_element(&g, e, d)).collect::<Result<Vec<_>>>()?;
    let ns = raw.n.iter().map(|m| read_lie(&g, m, d)).collect::<Result<Vec<_>>>()?;
    let taus = raw
        .galois
        .tau
        .iter()
        .map(|row| row.iter().map(|e| read_element(&g, e, d)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let gr = &raw.galois;
    let order = gr.table.len();
    let mut gal = InertialData {
        table: gr.table.clone(),
        tau: vec![g.identity(); order],
        theta: gr.theta.clone(),
        d: gr.d,
        frob: gr.frob,
    };
    if order == 0 || gr.d == 0 || taus.len() != order * gr.d || taus.iter().any(|r| r.is_empty()) {
        return Err(Error::Parse("galois.tau needs one row per element of Gal(L/K)".into()));
    }
    let tau: Vec<GroupElement> = {
        let gg = GalGroup::new(&gal);
        (0..order).map(|h| taus[gg.join(0, h)][0].clone()).collect()
    };
    gal.tau = tau;
    Ok(PhiModule { group: g, p: field.p, fk: raw.fk, fl: raw.fl, phis, ns, gal, taus })
}

pub fn write_module(m: &PhiModule) -> RawModule {
    RawModule {
        group: m.group.spec.clone(),
        fk: m.fk,
        fl: m.fl,
        phi: m.phis.iter().map(write_element).collect(),
        n: m.ns.iter().map(|n| write_matrix(&m.group.lie_elem(n))).collect(),
        galois: RawGalois {
            table: m.gal.table.clone(),
            theta: m.gal.theta.clone(),
            d: m.gal.d,
            frob: m.gal.frob,
            tau: m.taus.iter().map(|r| r.iter().map(write_element).collect()).collect(),
        },
    }
}
