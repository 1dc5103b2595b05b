//! Prediction of native-language-specific grammatical error distributions
//! in English-as-a-second-language (ESL) writing, driven by linguistic
//! typology.
//!
//! The library covers the full pipeline:
//!
//! - [`typology`] — ingestion and filtering of WALS-style categorical
//!   feature databases, feature binarization, native-vs-English divergence
//!   encoding, and typological cosine similarity.
//! - [`corpus`] — error-annotated ESL documents over a closed taxonomy of
//!   20 structural error types, with per-document and per-language relative
//!   error frequencies.
//! - [`stats`] — Kruskal-Wallis and Mann-Whitney rank tests (mid-ranks,
//!   tie correction) and the per-error-type variance report.
//! - [`regression`] — per-error-type least-squares models on typological
//!   encodings, mean and nearest-neighbor baselines, and the leave-one-out
//!   protocol with feature-salience inspection.
//! - [`nli`] — CoNLL-U profile extraction, a log-linear native-language
//!   classifier, confusion-based language similarity, and typology
//!   projection for languages without typological documentation.
//! - [`eval`] — absolute-error and KL-divergence metrics, summary tables,
//!   and top-k comparison reports.
//! - [`synth`] — seeded generation of synthetic typology databases and
//!   corpora with a planted typology-to-error relation.
//! - [`cli`] — the orchestration layer behind the `esl-transfer` binary.
//!
//! Runnable end-to-end demonstrations live in `examples/`; each major
//! capability has one.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod fingerprint;
pub mod nli;
pub mod regression;
pub mod stats;
pub mod synth;
pub mod typology;

pub use corpus::{Corpus, Document, ErrorDistribution, ErrorType};
pub use error::{Error, Result};
pub use regression::{PredictionRecord, RegressorSet, System};
pub use typology::{EncodedFeatureVector, Mode, TypologyDatabase};
