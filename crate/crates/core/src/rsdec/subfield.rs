//! Decoding E(M, S) through a Reed-Solomon code over GF(q^m).

use std::sync::Arc;

use crate::codes::{CodeSpec, MonomialSet, PointEnsemble, Sense};
use crate::ff::{Field, Gf, Tower};
use crate::report::{hamming, Candidate, DecodeReport};

use super::{gs_capability_ultimate, gs_list, gs_parameters, report_params, RsCode, RsdecError};

/// E(M, S) seen as a subcode of the GF(q)-subfield subcode of an RS code
/// of dimension t q^{m-1} + 1 on the points φ(P_i).
pub struct SubfieldDecoder {
    code: CodeSpec,
    tower: Tower,
    points: Vec<Gf>,
    k: u64,
    rs: Option<RsCode>,
}

impl SubfieldDecoder {
    pub fn new(code: CodeSpec, tower: Tower) -> Result<Self, RsdecError> {
        if code.sense() != Sense::Primal {
            return Err(RsdecError::Params("subfield decoding needs a primal code".into()));
        }
        if **code.field() != **tower.base() {
            return Err(RsdecError::Params("code field differs from the tower base".into()));
        }
        if tower.degree() != code.ensemble().dim() {
            return Err(RsdecError::Params(format!(
                "extension degree {} for {} variables",
                tower.degree(),
                code.ensemble().dim()
            )));
        }
        let points = code.ensemble().points().map(|p| tower.phi(&p)).collect::<Result<Vec<_>, _>>()?;
        let t = code.monomials().max_total_degree().unwrap_or(0) as u64;
        let q = tower.base().size() as u64;
        let k = t * q.pow(tower.degree() as u32 - 1) + 1;
        let rs = if k <= points.len() as u64 {
            Some(RsCode::new(tower.ext().clone(), points.clone(), k as usize)?)
        } else {
            None
        };
        Ok(SubfieldDecoder {
            code,
            tower,
            points,
            k,
            rs,
        })
    }

    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    /// Dimension of the Reed-Solomon code, t q^{m-1} + 1.
    pub fn rs_dimension(&self) -> u64 {
        self.k
    }

    pub fn ultimate_capability(&self) -> u64 {
        gs_capability_ultimate(self.points.len() as u64, self.k)
    }

    pub fn decode(&self, received: &[Gf], r: u32) -> Result<DecodeReport, RsdecError> {
        let n = self.points.len();
        if received.len() != n {
            return Err(RsdecError::Length {
                expected: n,
                got: received.len(),
            });
        }
        let rs = match (&self.rs, self.ultimate_capability()) {
            (Some(rs), c) if c > 0 => rs,
            _ => {
                return Err(RsdecError::Refused(format!(
                    "Reed-Solomon dimension {} on {} points leaves radius 0; \
                     the Guruswami-Sudan radius is not positive for this code",
                    self.k, n
                )))
            }
        };
        let base = self.tower.base();
        if let Some(s) = received.iter().find(|s| !base.contains(**s)) {
            return Err(RsdecError::Symbol(s.0));
        }
        let lifted: Vec<Gf> = received.iter().map(|&a| self.tower.embed(a)).collect();
        let (params, list) = gs_list(rs, &lifted, r, None)?;
        let mut out = Vec::new();
        for c in list {
            let Some(word) = c.word.iter().map(|&z| self.tower.project(z)).collect::<Option<Vec<Gf>>>() else {
                continue;
            };
            if self.code.contains(&word) {
                let distance = hamming(&word, received);
                out.push(Candidate { word, distance });
            }
        }
        Ok(DecodeReport::new("subfield-gs", report_params(&params, params.e_max), out))
    }
}

pub fn subfield_subcode_decode(code: &CodeSpec, tower: &Tower, received: &[Gf], r: u32) -> Result<DecodeReport, RsdecError> {
    SubfieldDecoder::new(code.clone(), tower.clone())?.decode(received, r)
}

/// The [49, 11] code on (F_8^*)^2 with the shift and divide trick: after
/// removing the constant term and dividing by x_i y_i, the word lies in
/// E({i + j <= 3}, S), a subcode of the [49, 25] RS code over GF(64).
pub struct JoynerDecoder {
    code: CodeSpec,
    tower: Tower,
    xy: Vec<Gf>,
    rs: RsCode,
}

impl JoynerDecoder {
    pub fn new() -> Result<Self, RsdecError> {
        let f8 = Arc::new(Field::binary(3)?);
        let f64 = Arc::new(Field::binary(6)?);
        let tower = Tower::new(f8.clone(), f64.clone())?;
        let ensemble = PointEnsemble::nonzero(&f8, 2);
        let xy = ensemble.points().map(|p| f8.mul(p[0], p[1])).collect();
        let points = ensemble.points().map(|p| tower.phi(&p)).collect::<Result<Vec<_>, _>>()?;
        let rs = RsCode::new(f64, points, 3 * 8 + 1)?;
        let code = CodeSpec::primal(f8, ensemble, MonomialSet::joyner())?;
        Ok(JoynerDecoder { code, tower, xy, rs })
    }

    pub fn code(&self) -> &CodeSpec {
        &self.code
    }

    pub fn rs(&self) -> &RsCode {
        &self.rs
    }

    /// Codewords of the Joyner code within distance `e` of `received`
    /// found over the eight guesses for the constant coefficient.
    pub fn decode(&self, received: &[Gf], r: u32, e: usize) -> Result<DecodeReport, RsdecError> {
        let f = self.code.field();
        if received.len() != 49 {
            return Err(RsdecError::Length {
                expected: 49,
                got: received.len(),
            });
        }
        if let Some(s) = received.iter().find(|s| !f.contains(**s)) {
            return Err(RsdecError::Symbol(s.0));
        }
        let params = gs_parameters(49, 25, r)?;
        let mut out = Vec::new();
        for f00 in f.elements() {
            let shifted: Vec<Gf> = received
                .iter()
                .zip(&self.xy)
                .map(|(&y, &d)| self.tower.embed(f.div(f.sub(y, f00), d)))
                .collect();
            let (_, list) = gs_list(&self.rs, &shifted, r, None)?;
            for c in list {
                let Some(inner) = c.word.iter().map(|&z| self.tower.project(z)).collect::<Option<Vec<Gf>>>() else {
                    continue;
                };
                let word: Vec<Gf> = inner.iter().zip(&self.xy).map(|(&v, &d)| f.add(f.mul(v, d), f00)).collect();
                let distance = hamming(&word, received);
                if distance <= e && self.code.contains(&word) {
                    out.push(Candidate { word, distance });
                }
            }
        }
        Ok(DecodeReport::new("joyner", report_params(&params, e as i64), out))
    }
}

pub fn joyner_decode(received: &[Gf], r: u32, e: usize) -> Result<DecodeReport, RsdecError> {
    JoynerDecoder::new()?.decode(received, r, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::Channel;
    use crate::codes::SetSpec;

    fn tower(q_bits: u32, m: u32) -> Tower {
        let base = Arc::new(Field::binary(q_bits).unwrap());
        let ext = Arc::new(Field::binary(q_bits * m).unwrap());
        Tower::new(base, ext).unwrap()
    }

    #[test]
    fn rm_over_gf4_corrects_one_error() {
        let t = tower(2, 2);
        let f = t.base().clone();
        let code = SetSpec::QaryRm { u: 1 }.build(&[4, 4]).unwrap();
        let code = CodeSpec::primal(f.clone(), PointEnsemble::canonical(&f, &[4, 4]).unwrap(), code).unwrap();
        let dec = SubfieldDecoder::new(code.clone(), t).unwrap();
        assert_eq!(dec.rs_dimension(), 5);
        for trial in 0..30 {
            let mut ch = Channel::for_trial(4, trial);
            let sent = code.encode(&ch.vector(&f, code.dimension())).unwrap();
            let (y, _) = ch.corrupt(&f, &sent, 1);
            let rep = dec.decode(&y, 1).unwrap();
            assert!(rep.contains(&sent));
            assert!(dec.decode(&sent, 1).unwrap().contains(&sent));
        }
    }

    #[test]
    fn refuses_without_radius() {
        let t = tower(2, 2);
        let f = t.base().clone();
        // t = 6 gives k = 25 > 16
        let set = MonomialSet::qary_rm(&[4, 4], 6);
        let code = CodeSpec::primal(f.clone(), PointEnsemble::canonical(&f, &[4, 4]).unwrap(), set).unwrap();
        let dec = SubfieldDecoder::new(code, t).unwrap();
        assert_eq!(dec.ultimate_capability(), 0);
        assert!(matches!(dec.decode(&[Gf::ZERO; 16], 1), Err(RsdecError::Refused(_))));
    }

    #[test]
    fn joyner_round_trip() {
        let dec = JoynerDecoder::new().unwrap();
        let f = dec.code().field().clone();
        assert_eq!(dec.code().dimension(), 11);
        for trial in 0..8u64 {
            let mut ch = Channel::for_trial(8, trial);
            let mut msg = ch.vector(&f, 11);
            // the constant monomial comes first
            msg[0] = Gf(trial as u32);
            let sent = dec.code().encode(&msg).unwrap();
            let clean = dec.decode(&sent, 1, 12).unwrap();
            assert!(clean.contains(&sent));
            let (y, _) = ch.corrupt(&f, &sent, 12);
            let rep = dec.decode(&y, 1, 12).unwrap();
            assert!(rep.contains(&sent), "trial {trial}");
            assert!(rep.candidates.iter().all(|c| c.distance <= 12 && dec.code().contains(&c.word)));
        }
    }
}
