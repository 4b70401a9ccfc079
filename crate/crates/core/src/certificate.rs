//! JSON certificates for move chains and SSE/SE witnesses. Matrices are
//! stored in the text syntax of [`crate::parse`] together with the group, so
//! a certificate can be re-verified without this crate.

use crate::equivalence::{
    verify_chain, verify_se, verify_sse, ElementaryMove, Mode, MoveChain, SEWitness, SSEWitness,
    Semiring, Side,
};
use crate::error::{Error, Result};
use crate::groups::{make_group, GroupRef, GroupSpec};
use crate::matrix::MatGRPoly;
use crate::parse::{parse_matrix, parse_poly, render_matrix};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoveDoc {
    pub side: Side,
    pub i: usize,
    pub j: usize,
    pub r: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilize_to: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Chain {
        group: GroupSpec,
        mode: Mode,
        start: String,
        end: String,
        moves: Vec<MoveDoc>,
    },
    Sse {
        group: GroupSpec,
        semiring: Semiring,
        a: String,
        b: String,
        steps: Vec<[String; 2]>,
    },
    Se {
        group: GroupSpec,
        semiring: Semiring,
        lag: usize,
        a: String,
        b: String,
        r: String,
        s: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub valid: bool,
    pub failed_step: Option<usize>,
    pub message: String,
}

fn spec_of(g: &GroupRef) -> GroupSpec {
    g.spec().clone()
}

impl Certificate {
    pub fn from_chain(chain: &MoveChain) -> Self {
        Certificate::Chain {
            group: spec_of(chain.start.group()),
            mode: chain.mode,
            start: render_matrix(&chain.start),
            end: render_matrix(&chain.end),
            moves: chain
                .moves
                .iter()
                .map(|m| MoveDoc {
                    side: m.side,
                    i: m.i,
                    j: m.j,
                    r: m.r.to_string(),
                    stabilize_to: m.stabilize_to,
                })
                .collect(),
        }
    }

    pub fn from_sse(a: &MatGRPoly, b: &MatGRPoly, w: &SSEWitness) -> Self {
        Certificate::Sse {
            group: spec_of(a.group()),
            semiring: w.semiring,
            a: render_matrix(a),
            b: render_matrix(b),
            steps: w
                .steps
                .iter()
                .map(|(r, s)| [render_matrix(r), render_matrix(s)])
                .collect(),
        }
    }

    pub fn from_se(a: &MatGRPoly, b: &MatGRPoly, w: &SEWitness) -> Self {
        Certificate::Se {
            group: spec_of(a.group()),
            semiring: w.semiring,
            lag: w.lag,
            a: render_matrix(a),
            b: render_matrix(b),
            r: render_matrix(&w.r),
            s: render_matrix(&w.s),
        }
    }

    pub fn group(&self) -> &GroupSpec {
        match self {
            Certificate::Chain { group, .. }
            | Certificate::Sse { group, .. }
            | Certificate::Se { group, .. } => group,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_chain(&self) -> Result<MoveChain> {
        let Certificate::Chain {
            group,
            mode,
            start,
            end,
            moves,
        } = self
        else {
            return Err(Error::Certificate("not a chain certificate".into()));
        };
        let g = make_group(group)?;
        let moves = moves
            .iter()
            .map(|m| {
                Ok(ElementaryMove {
                    side: m.side,
                    i: m.i,
                    j: m.j,
                    r: parse_poly(&g, &m.r)?,
                    stabilize_to: m.stabilize_to,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MoveChain {
            start: parse_matrix(&g, start)?,
            end: parse_matrix(&g, end)?,
            moves,
            mode: *mode,
        })
    }

    /// Parses and replays the certificate. Parse failures are errors; a
    /// certificate that parses but does not check out is a report with
    /// `valid = false`.
    pub fn verify(&self) -> Result<CertificateReport> {
        let g = make_group(self.group())?;
        match self {
            Certificate::Chain { .. } => {
                let r = verify_chain(&self.to_chain()?);
                Ok(CertificateReport {
                    valid: r.valid,
                    failed_step: r.failed_step,
                    message: r.message.unwrap_or_default(),
                })
            }
            Certificate::Sse {
                semiring,
                a,
                b,
                steps,
                ..
            } => {
                let steps = steps
                    .iter()
                    .map(|[r, s]| Ok((parse_matrix(&g, r)?, parse_matrix(&g, s)?)))
                    .collect::<Result<Vec<_>>>()?;
                let w = SSEWitness {
                    semiring: *semiring,
                    steps,
                };
                let r = verify_sse(&parse_matrix(&g, a)?, &parse_matrix(&g, b)?, &w);
                Ok(CertificateReport {
                    valid: r.valid,
                    failed_step: r.failed_step,
                    message: r.message.unwrap_or_default(),
                })
            }
            Certificate::Se {
                semiring,
                lag,
                a,
                b,
                r,
                s,
                ..
            } => {
                let w = SEWitness {
                    semiring: *semiring,
                    lag: *lag,
                    r: parse_matrix(&g, r)?,
                    s: parse_matrix(&g, s)?,
                };
                let rep = verify_se(&parse_matrix(&g, a)?, &parse_matrix(&g, b)?, &w);
                Ok(CertificateReport {
                    valid: rep.valid,
                    failed_step: rep.failed_step,
                    message: rep.message.unwrap_or_default(),
                })
            }
        }
    }
}
