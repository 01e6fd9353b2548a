//! Replayable verdict records.
//!
//! A certificate either names a witness `k` with its exact distance, or
//! claims exhaustion over all residues coprime to `n`. Both claims are
//! mechanically checkable from the serialized form alone: `revalidate`
//! recomputes the distance (or reruns the full scan) and compares exactly.

use crate::rational::{parse_rat, rat_to_string, Rat};
use crate::{Error, Result};
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `gcd(k, n) = 1` and the point `k (1/p, 1/q, 1/r)` lies at exact
    /// parity-lattice distance `distance >= 1`.
    Witness { k: i64, distance: Rat },
    /// All `residues_scanned = phi(n)` coprime residues were scanned and
    /// none reaches distance 1.
    Exhausted { residues_scanned: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Sorted ascending.
    pub triple: [i64; 3],
    pub n: i64,
    pub verdict: Verdict,
    pub engine: String,
    pub seed: u64,
}

/// Wire form; field layout is part of the external interface.
#[derive(Serialize, Deserialize)]
struct CertificateWire {
    triple: [i64; 3],
    n: i64,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    distance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residues_scanned: Option<u64>,
    engine: String,
    seed: u64,
}

impl Certificate {
    pub fn is_witness(&self) -> bool {
        matches!(self.verdict, Verdict::Witness { .. })
    }

    pub fn to_json(&self) -> String {
        let wire = match &self.verdict {
            Verdict::Witness { k, distance } => CertificateWire {
                triple: self.triple,
                n: self.n,
                verdict: "witness".into(),
                k: Some(*k),
                distance: Some(rat_to_string(distance)),
                residues_scanned: None,
                engine: self.engine.clone(),
                seed: self.seed,
            },
            Verdict::Exhausted { residues_scanned } => CertificateWire {
                triple: self.triple,
                n: self.n,
                verdict: "exhausted".into(),
                k: None,
                distance: None,
                residues_scanned: Some(*residues_scanned),
                engine: self.engine.clone(),
                seed: self.seed,
            },
        };
        serde_json::to_string(&wire).expect("certificate serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        let wire: CertificateWire = serde_json::from_str(s)
            .map_err(|e| Error::InvalidCertificate(e.to_string()))?;
        let verdict = match wire.verdict.as_str() {
            "witness" => {
                let k = wire
                    .k
                    .ok_or_else(|| Error::InvalidCertificate("witness without k".into()))?;
                let d = wire
                    .distance
                    .as_deref()
                    .and_then(parse_rat)
                    .ok_or_else(|| Error::InvalidCertificate("bad distance".into()))?;
                Verdict::Witness { k, distance: d }
            }
            "exhausted" => Verdict::Exhausted {
                residues_scanned: wire.residues_scanned.ok_or_else(|| {
                    Error::InvalidCertificate("exhausted without residue count".into())
                })?,
            },
            other => {
                return Err(Error::InvalidCertificate(format!(
                    "unknown verdict {other:?}"
                )))
            }
        };
        Ok(Certificate {
            triple: wire.triple,
            n: wire.n,
            verdict,
            engine: wire.engine,
            seed: wire.seed,
        })
    }

    /// Recomputes everything the certificate claims.
    ///
    /// For a witness: coprimality, the stored modulus, and exact equality of
    /// the stored distance with a fresh computation, plus `distance >= 1`.
    /// For exhaustion: a full rerun of the scan must again exhaust with the
    /// same residue count.
    pub fn revalidate(&self) -> Result<()> {
        let [p, q, r] = self.triple;
        let n = crate::lcm2pqr(p, q, r)?;
        if n != self.n {
            return Err(Error::InvalidCertificate(format!(
                "stored n = {} but lcm(2,p,q,r) = {n}",
                self.n
            )));
        }
        match &self.verdict {
            Verdict::Witness { k, distance } => {
                if crate::gcd_i64(*k, n) != 1 {
                    return Err(Error::InvalidCertificate(format!(
                        "witness k = {k} shares a factor with n = {n}"
                    )));
                }
                let (d, l) = crate::lattice::parity_dist_of_multiple(*k, p, q, r)?;
                let fresh = crate::lattice::frac_to_rat(d, l);
                if fresh != *distance {
                    return Err(Error::InvalidCertificate(format!(
                        "stored distance {} but recomputed {}",
                        rat_to_string(distance),
                        rat_to_string(&fresh)
                    )));
                }
                if *distance < Rat::one() {
                    return Err(Error::InvalidCertificate(
                        "witness distance below one".into(),
                    ));
                }
                Ok(())
            }
            Verdict::Exhausted { residues_scanned } => {
                let rerun = crate::lemmas::check_triple(p, q, r)?;
                match rerun.verdict {
                    Verdict::Exhausted {
                        residues_scanned: fresh,
                    } if fresh == *residues_scanned => Ok(()),
                    Verdict::Exhausted { residues_scanned: fresh } => {
                        Err(Error::InvalidCertificate(format!(
                            "residue count {residues_scanned} but rerun scanned {fresh}"
                        )))
                    }
                    Verdict::Witness { k, .. } => Err(Error::InvalidCertificate(format!(
                        "claimed exhaustion but k = {k} is a witness"
                    ))),
                }
            }
        }
    }
}
