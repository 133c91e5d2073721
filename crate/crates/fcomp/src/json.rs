//! Stable JSON representations of models, codes, networks, and search
//! outcomes. Indices are 1-based on the wire; rationals are "num/den"
//! strings, never floats.

use serde::{Deserialize, Serialize};

use crate::codes::{CodesError, LinearCode, RateReport, SourceCode, TableCode};
use crate::ffield::{FieldSpec, Matrix};
use crate::model::{ConnectivityState, Model, ModelError, PermPair};
use crate::network::{Network, Node};
use crate::search::SearchOutcome;

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Field(#[from] crate::ffield::FFieldError),
    #[error(transparent)]
    Codes(#[from] CodesError),
    #[error("gamma index {0} is not a positive 1-based encoder index")]
    BadIndex(usize),
}

/// Wire form of a model: gamma holds 1-based encoder indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelJson {
    pub q: u32,
    pub s: usize,
    pub m: usize,
    pub gamma: Vec<Vec<usize>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<u32>>,
}

impl ModelJson {
    pub fn from_model(model: &Model) -> ModelJson {
        ModelJson {
            q: model.field().q(),
            s: model.s(),
            m: model.m(),
            gamma: (0..model.s())
                .map(|i| model.omega().gamma(i).iter().map(|&j| j + 1).collect())
                .collect(),
            t: (0..model.s()).map(|i| model.t().row(i).to_vec()).collect(),
        }
    }

    pub fn to_model(&self) -> Result<Model, JsonError> {
        let field = FieldSpec::new(self.q)?;
        let mut gamma0 = Vec::with_capacity(self.gamma.len());
        for g in &self.gamma {
            let mut out = Vec::with_capacity(g.len());
            for &j in g {
                if j == 0 {
                    return Err(JsonError::BadIndex(j));
                }
                out.push(j - 1);
            }
            gamma0.push(out);
        }
        let omega = ConnectivityState::new(self.m, gamma0)?;
        let t = Matrix::from_rows(field, &self.t)?;
        Ok(Model::new(omega, t)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EncoderJson {
    Linear { linear: Vec<Vec<u32>> },
    Table { table: Vec<u32> },
}

/// Wire form of a code: one encoder entry per encoder, in encoder order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeJson {
    pub k: usize,
    pub encoders: Vec<EncoderJson>,
}

impl CodeJson {
    pub fn from_code(code: &SourceCode) -> CodeJson {
        match code {
            SourceCode::Linear(c) => CodeJson {
                k: c.k,
                encoders: c
                    .enc
                    .iter()
                    .map(|mj| EncoderJson::Linear {
                        linear: (0..mj.rows()).map(|r| mj.row(r).to_vec()).collect(),
                    })
                    .collect(),
            },
            SourceCode::Table(c) => CodeJson {
                k: c.k,
                encoders: c.enc.iter().map(|tj| EncoderJson::Table { table: tj.clone() }).collect(),
            },
        }
    }

    /// Decodes against a model (the model fixes the field and the
    /// expected per-encoder input widths).
    pub fn to_code(&self, model: &Model) -> Result<SourceCode, JsonError> {
        let field = model.field().clone();
        let all_linear = self.encoders.iter().all(|e| matches!(e, EncoderJson::Linear { .. }));
        if all_linear {
            let mut enc = Vec::with_capacity(self.encoders.len());
            for (j, e) in self.encoders.iter().enumerate() {
                let EncoderJson::Linear { linear } = e else { unreachable!() };
                let width = self.k * model.theta_of(j).len();
                let mj = if linear.is_empty() {
                    Matrix::zero(field.clone(), width, 0)
                } else {
                    Matrix::from_rows(field.clone(), linear)?
                };
                enc.push(mj);
            }
            return Ok(SourceCode::Linear(LinearCode { k: self.k, enc }));
        }
        let mut enc = Vec::with_capacity(self.encoders.len());
        for e in &self.encoders {
            match e {
                EncoderJson::Table { table } => enc.push(table.clone()),
                EncoderJson::Linear { .. } => {
                    return Err(JsonError::Codes(CodesError::ShapeMismatch(
                        "mixed linear and table encoders".into(),
                    )))
                }
            }
        }
        Ok(SourceCode::Table(TableCode { k: self.k, enc }))
    }
}

fn node_name(n: Node) -> String {
    match n {
        Node::Source(i) => format!("sigma{}", i + 1),
        Node::Encoder(j) => format!("v{}", j + 1),
        Node::Sink => "rho".into(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeJson {
    pub tail: String,
    pub head: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkJson {
    pub s: usize,
    pub m: usize,
    pub ell: usize,
    pub edges: Vec<EdgeJson>,
}

impl NetworkJson {
    pub fn from_network(net: &Network) -> NetworkJson {
        NetworkJson {
            s: net.s(),
            m: net.m(),
            ell: net.ell(),
            edges: net
                .edges()
                .iter()
                .map(|e| EdgeJson { tail: node_name(e.tail), head: node_name(e.head) })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RateReportJson {
    pub n_per_encoder: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub rate: String,
}

impl RateReportJson {
    pub fn from_report(r: &RateReport) -> RateReportJson {
        RateReportJson {
            n_per_encoder: r.n_per_encoder.clone(),
            n: r.n,
            k: r.k,
            rate: r.rate.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchOutcomeJson {
    pub found: Option<CodeJson>,
    pub nodes_visited: u64,
    pub pruned: u64,
}

impl SearchOutcomeJson {
    pub fn from_outcome(o: &SearchOutcome) -> SearchOutcomeJson {
        SearchOutcomeJson {
            found: o.found.as_ref().map(CodeJson::from_code),
            nodes_visited: o.nodes_visited,
            pruned: o.pruned,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermPairJson {
    pub pi: Vec<usize>,
    pub tau: Vec<usize>,
}

impl PermPairJson {
    pub fn from_pair(pp: &PermPair) -> PermPairJson {
        PermPairJson {
            pi: pp.pi.iter().map(|&x| x + 1).collect(),
            tau: pp.tau.iter().map(|&x| x + 1).collect(),
        }
    }
}
