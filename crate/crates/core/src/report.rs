//! Stable JSON and CSV output schemas.
//!
//! Exact scalars are written as `p/q pi` strings; `*_approx` fields carry a float
//! for convenience only. Interval sets use the canonical text form, which
//! [`crate::expr::parse_set`] reads back.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{IntervalSet, RationalPi};
use crate::msf_dimension::{CoreEquivalence, StepFunction};
use crate::numeric::{AgreementReport, GramSchmidtState};
use crate::scalar::Real;
use crate::sigma::{CommutantVerdict, SigmaMap};
use crate::translation::PiecewiseTranslation;
use crate::wavelet_sets::WaveletSetReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub exact: String,
    pub approx: f64,
}

impl From<&RationalPi> for ScalarJson {
    fn from(x: &RationalPi) -> Self {
        ScalarJson {
            exact: x.to_spaced_string(),
            approx: x.to_f64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieceShiftJson {
    pub piece: String,
    pub shift: String,
    pub shift_approx: f64,
}

pub fn piecewise_json(map: &PiecewiseTranslation) -> Vec<PieceShiftJson> {
    map.entries()
        .iter()
        .map(|(piece, shift)| PieceShiftJson {
            piece: piece.to_string(),
            shift: shift.to_spaced_string(),
            shift_approx: shift.to_f64(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WaveletSetReportJson {
    pub set: String,
    pub accepted: bool,
    pub measure: ScalarJson,
    pub is_translation_congruent: bool,
    pub is_dilation_congruent: bool,
    pub tau_witness: Option<Vec<PieceShiftJson>>,
    pub failure_regions: String,
}

impl From<&WaveletSetReport> for WaveletSetReportJson {
    fn from(r: &WaveletSetReport) -> Self {
        WaveletSetReportJson {
            set: r.set.to_string(),
            accepted: r.accepted(),
            measure: (&r.set.measure()).into(),
            is_translation_congruent: r.is_translation_congruent,
            is_dilation_congruent: r.is_dilation_congruent,
            tau_witness: r.tau_witness.as_ref().map(piecewise_json),
            failure_regions: r.failure_regions.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepPieceJson {
    pub piece: String,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepFunctionJson {
    pub window: String,
    pub pieces: Vec<StepPieceJson>,
}

impl From<&StepFunction> for StepFunctionJson {
    fn from(f: &StepFunction) -> Self {
        StepFunctionJson {
            window: f.window().to_string(),
            pieces: f
                .segments()
                .iter()
                .map(|(iv, v)| StepPieceJson {
                    piece: iv.to_string(),
                    value: *v,
                })
                .collect(),
        }
    }
}

/// One breakpoint row; endpoints are `num/den · π`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCsvRow {
    pub lo_pi_num: String,
    pub lo_pi_den: String,
    pub hi_pi_num: String,
    pub hi_pi_den: String,
    pub value: u32,
}

pub fn write_step_csv<W: Write>(f: &StepFunction, out: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    for (iv, v) in f.segments() {
        wtr.serialize(StepCsvRow {
            lo_pi_num: iv.lo().numer().to_string(),
            lo_pi_den: iv.lo().denom().to_string(),
            hi_pi_num: iv.hi().numer().to_string(),
            hi_pi_den: iv.hi().denom().to_string(),
            value: *v,
        })?;
    }
    wtr.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub power: u32,
    pub in_local_commutant: bool,
    pub composed: Vec<PieceShiftJson>,
    pub witness: Option<PieceShiftJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SigmaJson {
    pub w1: String,
    pub w2: String,
    pub sigma: Vec<PieceShiftJson>,
    pub power: Option<VerdictJson>,
}

impl SigmaJson {
    pub fn new(sigma: &SigmaMap, verdict: Option<&CommutantVerdict>) -> Self {
        SigmaJson {
            w1: sigma.w1().set().to_string(),
            w2: sigma.w2().set().to_string(),
            sigma: piecewise_json(sigma.map()),
            power: verdict.map(|v| VerdictJson {
                power: v.power,
                in_local_commutant: v.holds,
                composed: piecewise_json(&v.composed),
                witness: v.witness.as_ref().map(|(piece, shift)| PieceShiftJson {
                    piece: piece.to_string(),
                    shift: shift.to_spaced_string(),
                    shift_approx: shift.to_f64(),
                }),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoreEquivalenceJson {
    pub equivalent: bool,
    pub window: String,
    pub differing: String,
    pub a: StepFunctionJson,
    pub b: StepFunctionJson,
}

impl From<&CoreEquivalence> for CoreEquivalenceJson {
    fn from(c: &CoreEquivalence) -> Self {
        CoreEquivalenceJson {
            equivalent: c.equivalent,
            window: c.a.window().to_string(),
            differing: c.differing.to_string(),
            a: (&c.a).into(),
            b: (&c.b).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AgreementRowJson {
    pub xi: String,
    pub xi_approx: f64,
    pub rank: usize,
    pub dim_sum: f64,
    pub exact: Option<u32>,
    pub truncation_exact: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AgreementJson {
    pub all_agree: bool,
    pub points: usize,
    pub rows: Vec<AgreementRowJson>,
}

impl<F: Real> From<&AgreementReport<F>> for AgreementJson {
    fn from(r: &AgreementReport<F>) -> Self {
        let rows: Vec<AgreementRowJson> = r
            .rows
            .iter()
            .map(|row| AgreementRowJson {
                xi: row.xi.to_spaced_string(),
                xi_approx: row.xi.to_f64(),
                rank: row.rank,
                dim_sum: row.dim_sum.to_f64().unwrap_or(f64::NAN),
                exact: row.exact,
                truncation_exact: row.truncation_exact,
                agree: row.agree,
            })
            .collect();
        AgreementJson {
            all_agree: r.all_agree(),
            points: rows.len(),
            rows,
        }
    }
}

pub fn write_agreement_csv<W: Write>(report: &AgreementJson, out: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record([
        "xi",
        "xi_approx",
        "rank",
        "dim_sum",
        "exact",
        "truncation_exact",
        "agree",
    ])?;
    for row in &report.rows {
        wtr.write_record([
            row.xi.clone(),
            row.xi_approx.to_string(),
            row.rank.to_string(),
            row.dim_sum.to_string(),
            row.exact.map(|e| e.to_string()).unwrap_or_default(),
            row.truncation_exact.to_string(),
            row.agree.to_string(),
        ])?;
    }
    wtr.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplicityJson {
    pub xi: ScalarJson,
    pub multiplicity: usize,
    pub h: Vec<f64>,
    pub active: Vec<bool>,
    pub threshold: f64,
    pub dim_sum: f64,
    pub truncation_exact: bool,
}

impl MultiplicityJson {
    pub fn new<F: Real>(
        xi: &RationalPi,
        state: &GramSchmidtState<F>,
        dim_sum: F,
        truncation_exact: bool,
    ) -> Self {
        let f = |x: F| x.to_f64().unwrap_or(f64::NAN);
        MultiplicityJson {
            xi: xi.into(),
            multiplicity: state.rank(),
            h: state.h_values.iter().map(|h| f(*h)).collect(),
            active: state.active.clone(),
            threshold: f(state.threshold),
            dim_sum: f(dim_sum),
            truncation_exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub set: String,
}

/// Parses a `p/q pi` shift back into an exact value.
pub fn parse_shift(text: &str) -> Result<RationalPi> {
    crate::expr::parse_scalar(text)
}

/// Parses a canonical set string back into an [`IntervalSet`].
pub fn parse_piece(text: &str) -> Result<IntervalSet> {
    crate::expr::parse_set(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msf_dimension::dimension_step_function;
    use crate::wavelet_sets::WaveletSet;

    #[test]
    fn step_csv_columns() {
        let w = WaveletSet::from_catalog("shannon").unwrap();
        let f = dimension_step_function(&w, &"[1/8pi,pi)".parse().unwrap()).unwrap();
        let mut buf = Vec::new();
        write_step_csv(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("lo_pi_num,lo_pi_den,hi_pi_num,hi_pi_den,value")
        );
        assert_eq!(lines.next(), Some("1,8,1,1,1"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn sigma_json_round_trips_through_parser() {
        let s = SigmaMap::between(
            &crate::wavelet_sets::catalog("paper_w1").unwrap(),
            &crate::wavelet_sets::catalog("paper_w2").unwrap(),
        )
        .unwrap();
        let json = serde_json::to_string(&SigmaJson::new(&s, None)).unwrap();
        let back: SigmaJson = serde_json::from_str(&json).unwrap();
        let fragments = back.sigma.iter().flat_map(|e| {
            let shift = parse_shift(&e.shift).unwrap();
            parse_piece(&e.piece)
                .unwrap()
                .intervals()
                .to_vec()
                .into_iter()
                .map(move |iv| (iv, shift.clone()))
        });
        assert_eq!(&PiecewiseTranslation::from_fragments(fragments).unwrap(), s.map());
        assert_eq!(parse_piece(&back.w2).unwrap(), *s.w2().set());
    }
}
