//! Mechanical checks of the threshold statement, the cyclic family depths
//! and the Stanley inequality, plus the ideal streams they run over.

pub mod enumerate;
pub mod lemma5;
pub mod sweep;
pub mod threshold;

pub use enumerate::{enumerate_ideals, sample_ideals, ENUMERATE_MAX_VARS};
pub use lemma5::{lemma5_check, Lemma5Report, Lemma5Row};
pub use sweep::{oracle_sweep, prop1_sweep, stanley_sweep, truncation_sweep, AgreementSweep, Prop1Sweep, StanleySweep};
pub use threshold::{
    compare_threshold, prop1_check, remark_st_threshold_probe, threshold, threshold_exceeded, Prop1Check,
    ThresholdComparison, ThresholdReport,
};
