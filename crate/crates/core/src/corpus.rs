//! Error-annotated ESL documents and relative error frequencies.
//!
//! The corpus input format is line-delimited JSON, one record per document:
//!
//! ```json
//! {"doc_id":"d0001","native_language":"jpn","word_count":312,"errors":{"MD":4,"TV":2}}
//! ```
//!
//! Extra fields (for example annotation spans) are accepted and ignored;
//! only the error counts matter here. Error codes form a closed taxonomy of
//! the 20 structural types; anything else is rejected at ingestion.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the sum-to-one invariant of [`ErrorDistribution`].
pub const DISTRIBUTION_SUM_TOL: f64 = 1e-9;

/// The 20 structural grammatical error types, in corpus frequency order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ErrorType {
    VerbTense,
    ReplacePreposition,
    MissingDeterminer,
    WrongVerbForm,
    WordOrder,
    MissingPreposition,
    UnnecessaryDeterminer,
    UnnecessaryPreposition,
    MissingPronoun,
    VerbAgreement,
    WrongFormNoun,
    ReplacePronoun,
    NounAgreement,
    ReplaceDeterminer,
    DerivedAdjective,
    DerivedNoun,
    DerivedAdverb,
    UnnecessaryPronoun,
    MissingConjunction,
    ReplaceConjunction,
}

impl ErrorType {
    /// All 20 error types in canonical (frequency-rank) order.
    pub const ALL: [ErrorType; 20] = [
        ErrorType::VerbTense,
        ErrorType::ReplacePreposition,
        ErrorType::MissingDeterminer,
        ErrorType::WrongVerbForm,
        ErrorType::WordOrder,
        ErrorType::MissingPreposition,
        ErrorType::UnnecessaryDeterminer,
        ErrorType::UnnecessaryPreposition,
        ErrorType::MissingPronoun,
        ErrorType::VerbAgreement,
        ErrorType::WrongFormNoun,
        ErrorType::ReplacePronoun,
        ErrorType::NounAgreement,
        ErrorType::ReplaceDeterminer,
        ErrorType::DerivedAdjective,
        ErrorType::DerivedNoun,
        ErrorType::DerivedAdverb,
        ErrorType::UnnecessaryPronoun,
        ErrorType::MissingConjunction,
        ErrorType::ReplaceConjunction,
    ];

    pub const COUNT: usize = 20;

    /// Two-or-three-letter annotation code.
    pub fn code(self) -> &'static str {
        match self {
            ErrorType::VerbTense => "TV",
            ErrorType::ReplacePreposition => "RT",
            ErrorType::MissingDeterminer => "MD",
            ErrorType::WrongVerbForm => "FV",
            ErrorType::WordOrder => "W",
            ErrorType::MissingPreposition => "MT",
            ErrorType::UnnecessaryDeterminer => "UD",
            ErrorType::UnnecessaryPreposition => "UT",
            ErrorType::MissingPronoun => "MA",
            ErrorType::VerbAgreement => "AGV",
            ErrorType::WrongFormNoun => "FN",
            ErrorType::ReplacePronoun => "RA",
            ErrorType::NounAgreement => "AGN",
            ErrorType::ReplaceDeterminer => "RD",
            ErrorType::DerivedAdjective => "DJ",
            ErrorType::DerivedNoun => "DN",
            ErrorType::DerivedAdverb => "DY",
            ErrorType::UnnecessaryPronoun => "UA",
            ErrorType::MissingConjunction => "MC",
            ErrorType::ReplaceConjunction => "RC",
        }
    }

    /// Human-readable name.
    pub fn name(self) -> &'static str {
        match self {
            ErrorType::VerbTense => "Verb Tense",
            ErrorType::ReplacePreposition => "Replace Preposition",
            ErrorType::MissingDeterminer => "Missing Determiner",
            ErrorType::WrongVerbForm => "Wrong Verb Form",
            ErrorType::WordOrder => "Word Order",
            ErrorType::MissingPreposition => "Missing Preposition",
            ErrorType::UnnecessaryDeterminer => "Unnecessary Determiner",
            ErrorType::UnnecessaryPreposition => "Unnecessary Preposition",
            ErrorType::MissingPronoun => "Missing Pronoun",
            ErrorType::VerbAgreement => "Verb Agreement",
            ErrorType::WrongFormNoun => "Wrong Form Noun",
            ErrorType::ReplacePronoun => "Replace Pronoun",
            ErrorType::NounAgreement => "Noun Agreement",
            ErrorType::ReplaceDeterminer => "Replace Determiner",
            ErrorType::DerivedAdjective => "Wrongly Derived Adjective",
            ErrorType::DerivedNoun => "Wrongly Derived Noun",
            ErrorType::DerivedAdverb => "Wrongly Derived Adverb",
            ErrorType::UnnecessaryPronoun => "Unnecessary Pronoun",
            ErrorType::MissingConjunction => "Missing Conjunction",
            ErrorType::ReplaceConjunction => "Replace Conjunction",
        }
    }

    /// Position in [`ErrorType::ALL`].
    pub fn index(self) -> usize {
        ErrorType::ALL.iter().position(|e| *e == self).unwrap()
    }
}

impl FromStr for ErrorType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ErrorType::ALL
            .iter()
            .copied()
            .find(|e| e.code() == s)
            .ok_or_else(|| Error::UnknownErrorType(s.to_string()))
    }
}

impl fmt::Display for ErrorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One error-annotated ESL document.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub doc_id: String,
    pub native_language: String,
    pub word_count: u64,
    counts: [u64; ErrorType::COUNT],
}

impl Document {
    pub fn new(
        doc_id: impl Into<String>,
        native_language: impl Into<String>,
        word_count: u64,
        counts: &BTreeMap<ErrorType, u64>,
    ) -> Result<Self> {
        let doc_id = doc_id.into();
        if word_count == 0 {
            return Err(Error::Data(format!(
                "document {doc_id} has word_count 0, expected >= 1"
            )));
        }
        let mut arr = [0u64; ErrorType::COUNT];
        for (e, c) in counts {
            arr[e.index()] = *c;
        }
        Ok(Document {
            doc_id,
            native_language: native_language.into(),
            word_count,
            counts: arr,
        })
    }

    pub fn count(&self, e: ErrorType) -> u64 {
        self.counts[e.index()]
    }

    pub fn total_errors(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// A valid relative-frequency vector over the 20 error types.
///
/// Entries are nonnegative and sum to 1 within [`DISTRIBUTION_SUM_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorDistribution {
    fractions: [f64; ErrorType::COUNT],
}

impl ErrorDistribution {
    /// Validates and wraps a fraction vector in canonical error-type order.
    pub fn new(fractions: [f64; ErrorType::COUNT]) -> Result<Self> {
        let sum: f64 = fractions.iter().sum();
        if fractions.iter().any(|f| *f < 0.0 || !f.is_finite()) {
            return Err(Error::Data(
                "error distribution has a negative or non-finite entry".into(),
            ));
        }
        if (sum - 1.0).abs() > DISTRIBUTION_SUM_TOL {
            return Err(Error::Data(format!(
                "error distribution sums to {sum}, expected 1 within {DISTRIBUTION_SUM_TOL}"
            )));
        }
        Ok(ErrorDistribution { fractions })
    }

    /// Normalizes nonnegative weights into a distribution.
    pub fn from_weights(weights: [f64; ErrorType::COUNT]) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if total <= 0.0 || !total.is_finite() {
            return Err(Error::EmptySample(
                "cannot normalize weights with non-positive total".into(),
            ));
        }
        let mut fractions = weights;
        for f in &mut fractions {
            *f /= total;
        }
        ErrorDistribution::new(fractions)
    }

    fn from_counts(counts: &[u64; ErrorType::COUNT]) -> Result<Self> {
        let mut weights = [0.0; ErrorType::COUNT];
        for (w, c) in weights.iter_mut().zip(counts) {
            *w = *c as f64;
        }
        ErrorDistribution::from_weights(weights)
    }

    pub fn get(&self, e: ErrorType) -> f64 {
        self.fractions[e.index()]
    }

    pub fn fractions(&self) -> &[f64; ErrorType::COUNT] {
        &self.fractions
    }

    /// Error types with their fractions, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (ErrorType, f64)> + '_ {
        ErrorType::ALL.iter().map(move |e| (*e, self.get(*e)))
    }
}

/// How per-language target distributions aggregate document counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pooling {
    /// Pool raw counts over all documents of the language, then normalize.
    #[default]
    Counts,
    /// Average the per-document fraction vectors (zero-error documents
    /// excluded), then renormalize.
    MeanFractions,
}

/// An immutable collection of documents grouped by native language.
#[derive(Debug, Clone)]
pub struct Corpus {
    documents: Vec<Document>,
    by_language: BTreeMap<String, Vec<usize>>,
}

impl Corpus {
    pub fn new(documents: Vec<Document>) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for (i, d) in documents.iter().enumerate() {
            if let Some(_prev) = seen.insert(d.doc_id.clone(), i) {
                return Err(Error::Data(format!("duplicate doc_id: {}", d.doc_id)));
            }
        }
        let mut by_language: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, d) in documents.iter().enumerate() {
            by_language
                .entry(d.native_language.clone())
                .or_default()
                .push(i);
        }
        Ok(Corpus {
            documents,
            by_language,
        })
    }

    pub fn languages(&self) -> impl Iterator<Item = &str> {
        self.by_language.keys().map(|s| s.as_str())
    }

    pub fn language_count(&self) -> usize {
        self.by_language.len()
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn documents_of(&self, language: &str) -> Result<impl Iterator<Item = &Document>> {
        let idx = self
            .by_language
            .get(language)
            .ok_or_else(|| Error::UnknownLanguage(language.to_string()))?;
        Ok(idx.iter().map(move |i| &self.documents[*i]))
    }

    /// Total corpus count of one error type.
    pub fn total_count(&self, e: ErrorType) -> u64 {
        self.documents.iter().map(|d| d.count(e)).sum()
    }

    /// Replaces every document of `language` with perturbed error counts.
    /// Used by leakage audits; the rest of the corpus is untouched.
    pub fn with_perturbed_language(&self, language: &str, extra: u64) -> Result<Corpus> {
        let documents = self
            .documents
            .iter()
            .map(|d| {
                let mut d = d.clone();
                if d.native_language == language {
                    d.counts[0] += extra;
                }
                d
            })
            .collect();
        Corpus::new(documents)
    }
}

#[derive(Deserialize)]
struct RawRecord {
    doc_id: String,
    native_language: String,
    word_count: u64,
    #[serde(default)]
    errors: BTreeMap<String, u64>,
}

/// Serialized form of a document record, used when emitting corpora.
#[derive(Serialize)]
struct RecordOut<'a> {
    doc_id: &'a str,
    native_language: &'a str,
    word_count: u64,
    errors: BTreeMap<&'static str, u64>,
}

/// Reads a line-delimited record corpus from a file.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    load_corpus_from(BufReader::new(file), &path.display().to_string())
}

/// Reads a line-delimited record corpus from any reader. `location` labels
/// parse errors.
pub fn load_corpus_from(reader: impl BufRead, location: &str) -> Result<Corpus> {
    let mut documents = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.map_err(|e| Error::parse(location, lineno, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(&line)
            .map_err(|e| Error::parse(location, lineno, e.to_string()))?;
        let mut counts = BTreeMap::new();
        for (code, count) in &raw.errors {
            let e = ErrorType::from_str(code).map_err(|_| {
                Error::UnknownErrorType(format!("{code} (doc {}, line {lineno})", raw.doc_id))
            })?;
            if counts.insert(e, *count).is_some() {
                return Err(Error::parse(
                    location,
                    lineno,
                    format!("duplicate error code {code}"),
                ));
            }
        }
        if raw.word_count == 0 {
            return Err(Error::parse(
                location,
                lineno,
                format!("doc {} has word_count 0", raw.doc_id),
            ));
        }
        documents.push(Document::new(
            raw.doc_id,
            raw.native_language,
            raw.word_count,
            &counts,
        )?);
    }
    Corpus::new(documents)
}

/// Serializes a corpus back to the line-delimited record format.
pub fn corpus_to_records(corpus: &Corpus) -> String {
    let mut out = String::new();
    for d in corpus.documents() {
        let mut errors = BTreeMap::new();
        for e in ErrorType::ALL {
            let c = d.count(e);
            if c > 0 {
                errors.insert(e.code(), c);
            }
        }
        let rec = RecordOut {
            doc_id: &d.doc_id,
            native_language: &d.native_language,
            word_count: d.word_count,
            errors,
        };
        out.push_str(&serde_json::to_string(&rec).expect("record serialization"));
        out.push('\n');
    }
    out
}

/// Relative error frequencies within a single document.
///
/// Documents without any structural error have no defined fraction vector;
/// those signal [`Error::EmptySample`] and are excluded from rank tests.
pub fn doc_error_fractions(doc: &Document) -> Result<ErrorDistribution> {
    if doc.total_errors() == 0 {
        return Err(Error::EmptySample(format!(
            "document {} has no structural errors",
            doc.doc_id
        )));
    }
    ErrorDistribution::from_counts(&doc.counts)
}

/// Per-language relative error frequencies with the default pooling (raw
/// counts pooled across documents, then normalized).
pub fn language_error_distribution(corpus: &Corpus, language: &str) -> Result<ErrorDistribution> {
    language_error_distribution_with(corpus, language, Pooling::Counts)
}

/// Per-language relative error frequencies under an explicit pooling rule.
pub fn language_error_distribution_with(
    corpus: &Corpus,
    language: &str,
    pooling: Pooling,
) -> Result<ErrorDistribution> {
    let docs: Vec<&Document> = corpus.documents_of(language)?.collect();
    match pooling {
        Pooling::Counts => {
            let mut pooled = [0u64; ErrorType::COUNT];
            for d in &docs {
                for e in ErrorType::ALL {
                    pooled[e.index()] += d.count(e);
                }
            }
            ErrorDistribution::from_counts(&pooled).map_err(|_| {
                Error::EmptySample(format!("language {language} has no documents with errors"))
            })
        }
        Pooling::MeanFractions => {
            let mut acc = [0.0; ErrorType::COUNT];
            let mut n = 0usize;
            for d in &docs {
                match doc_error_fractions(d) {
                    Ok(dist) => {
                        for (a, f) in acc.iter_mut().zip(dist.fractions()) {
                            *a += *f;
                        }
                        n += 1;
                    }
                    Err(Error::EmptySample(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            if n == 0 {
                return Err(Error::EmptySample(format!(
                    "language {language} has no documents with errors"
                )));
            }
            ErrorDistribution::from_weights(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(id: &str, lang: &str, counts: &[(ErrorType, u64)]) -> Document {
        let map: BTreeMap<ErrorType, u64> = counts.iter().copied().collect();
        Document::new(id, lang, 100, &map).unwrap()
    }

    #[test]
    fn taxonomy_is_closed_and_complete() {
        assert_eq!(ErrorType::ALL.len(), 20);
        let codes: std::collections::BTreeSet<&str> =
            ErrorType::ALL.iter().map(|e| e.code()).collect();
        assert_eq!(codes.len(), 20);
        for e in ErrorType::ALL {
            assert_eq!(ErrorType::from_str(e.code()).unwrap(), e);
        }
        assert!(matches!(
            ErrorType::from_str("XX"),
            Err(Error::UnknownErrorType(c)) if c == "XX"
        ));
    }

    #[test]
    fn load_groups_by_language() {
        let input = concat!(
            r#"{"doc_id":"a","native_language":"jpn","word_count":50,"errors":{"MD":2}}"#,
            "\n",
            r#"{"doc_id":"b","native_language":"jpn","word_count":60,"errors":{"TV":1}}"#,
            "\n",
        );
        let corpus = load_corpus_from(input.as_bytes(), "test").unwrap();
        assert_eq!(corpus.language_count(), 1);
        assert_eq!(corpus.documents().len(), 2);
    }

    #[test]
    fn load_rejects_unknown_code() {
        let input = r#"{"doc_id":"a","native_language":"jpn","word_count":50,"errors":{"XX":2}}"#;
        let err = load_corpus_from(input.as_bytes(), "test").unwrap_err();
        assert!(matches!(err, Error::UnknownErrorType(msg) if msg.contains("XX")));
    }

    #[test]
    fn load_rejects_duplicate_doc_id() {
        let input = concat!(
            r#"{"doc_id":"a","native_language":"jpn","word_count":50,"errors":{"MD":2}}"#,
            "\n",
            r#"{"doc_id":"a","native_language":"deu","word_count":60,"errors":{"TV":1}}"#,
            "\n",
        );
        let err = load_corpus_from(input.as_bytes(), "test").unwrap_err();
        assert!(matches!(err, Error::Data(msg) if msg.contains("doc_id")));
    }

    #[test]
    fn load_ignores_extra_fields() {
        let input = r#"{"doc_id":"a","native_language":"jpn","word_count":50,"errors":{"MD":2},"spans":[[3,7]]}"#;
        let corpus = load_corpus_from(input.as_bytes(), "test").unwrap();
        assert_eq!(corpus.documents().len(), 1);
    }

    #[test]
    fn doc_fractions_equal_split() {
        let d = doc(
            "a",
            "jpn",
            &[
                (ErrorType::MissingDeterminer, 2),
                (ErrorType::VerbTense, 2),
            ],
        );
        let dist = doc_error_fractions(&d).unwrap();
        assert_eq!(dist.get(ErrorType::MissingDeterminer), 0.5);
        assert_eq!(dist.get(ErrorType::VerbTense), 0.5);
    }

    #[test]
    fn doc_fractions_single_type() {
        let d = doc("a", "jpn", &[(ErrorType::MissingDeterminer, 3)]);
        let dist = doc_error_fractions(&d).unwrap();
        assert_eq!(dist.get(ErrorType::MissingDeterminer), 1.0);
    }

    #[test]
    fn doc_fractions_direct_division() {
        let d = doc(
            "a",
            "jpn",
            &[
                (ErrorType::MissingDeterminer, 2),
                (ErrorType::VerbTense, 1),
                (ErrorType::ReplacePreposition, 1),
            ],
        );
        let dist = doc_error_fractions(&d).unwrap();
        assert_eq!(dist.get(ErrorType::MissingDeterminer), 0.5);
        assert_eq!(dist.get(ErrorType::VerbTense), 0.25);
        assert_eq!(dist.get(ErrorType::ReplacePreposition), 0.25);
    }

    #[test]
    fn doc_fractions_zero_errors_signals_empty_sample() {
        let d = doc("a", "jpn", &[]);
        assert!(matches!(
            doc_error_fractions(&d),
            Err(Error::EmptySample(_))
        ));
    }

    #[test]
    fn language_distribution_pools_counts() {
        let corpus = Corpus::new(vec![
            doc(
                "a",
                "jpn",
                &[
                    (ErrorType::MissingDeterminer, 2),
                    (ErrorType::VerbTense, 2),
                ],
            ),
            doc("b", "jpn", &[(ErrorType::MissingDeterminer, 1)]),
        ])
        .unwrap();
        let dist = language_error_distribution(&corpus, "jpn").unwrap();
        assert!((dist.get(ErrorType::MissingDeterminer) - 0.6).abs() < 1e-12);
        assert!((dist.get(ErrorType::VerbTense) - 0.4).abs() < 1e-12);
    }

    #[test]
    fn language_distribution_single_doc_matches_doc_fractions() {
        let d = doc(
            "a",
            "jpn",
            &[(ErrorType::MissingDeterminer, 2), (ErrorType::VerbTense, 3)],
        );
        let corpus = Corpus::new(vec![d.clone()]).unwrap();
        let lang = language_error_distribution(&corpus, "jpn").unwrap();
        let doc_level = doc_error_fractions(&d).unwrap();
        assert_eq!(lang, doc_level);
    }

    #[test]
    fn language_distribution_invariant_under_document_order() {
        let a = doc("a", "jpn", &[(ErrorType::MissingDeterminer, 2)]);
        let b = doc(
            "b",
            "jpn",
            &[(ErrorType::VerbTense, 5), (ErrorType::WordOrder, 1)],
        );
        let c1 = Corpus::new(vec![a.clone(), b.clone()]).unwrap();
        let c2 = Corpus::new(vec![b, a]).unwrap();
        assert_eq!(
            language_error_distribution(&c1, "jpn").unwrap(),
            language_error_distribution(&c2, "jpn").unwrap()
        );
    }

    #[test]
    fn pooling_invariance_under_document_concatenation() {
        let a = doc(
            "a",
            "jpn",
            &[(ErrorType::MissingDeterminer, 2), (ErrorType::VerbTense, 1)],
        );
        let b = doc("b", "jpn", &[(ErrorType::VerbTense, 4)]);
        let merged = doc(
            "ab",
            "jpn",
            &[(ErrorType::MissingDeterminer, 2), (ErrorType::VerbTense, 5)],
        );
        let split = Corpus::new(vec![a, b]).unwrap();
        let joined = Corpus::new(vec![merged]).unwrap();
        assert_eq!(
            language_error_distribution(&split, "jpn").unwrap(),
            language_error_distribution(&joined, "jpn").unwrap()
        );
    }

    #[test]
    fn mean_fraction_pooling_differs_from_count_pooling() {
        // One short and one long document pull the two rules apart.
        let corpus = Corpus::new(vec![
            doc("a", "jpn", &[(ErrorType::MissingDeterminer, 1)]),
            doc("b", "jpn", &[(ErrorType::VerbTense, 9)]),
        ])
        .unwrap();
        let pooled =
            language_error_distribution_with(&corpus, "jpn", Pooling::Counts).unwrap();
        let averaged =
            language_error_distribution_with(&corpus, "jpn", Pooling::MeanFractions).unwrap();
        assert!((pooled.get(ErrorType::MissingDeterminer) - 0.1).abs() < 1e-12);
        assert!((averaged.get(ErrorType::MissingDeterminer) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn unknown_language_is_a_lookup_error() {
        let corpus = Corpus::new(vec![doc("a", "jpn", &[(ErrorType::VerbTense, 1)])]).unwrap();
        assert!(matches!(
            language_error_distribution(&corpus, "xyz"),
            Err(Error::UnknownLanguage(_))
        ));
    }

    #[test]
    fn distributions_validate_sum_and_sign() {
        let mut bad = [0.0; 20];
        bad[0] = 0.5;
        assert!(ErrorDistribution::new(bad).is_err());
        bad[1] = 0.6;
        assert!(ErrorDistribution::new(bad).is_err());
        let mut ok = [0.0; 20];
        ok[0] = 1.0;
        assert!(ErrorDistribution::new(ok).is_ok());
    }

    #[test]
    fn records_round_trip() {
        let corpus = Corpus::new(vec![
            doc(
                "a",
                "jpn",
                &[(ErrorType::MissingDeterminer, 2), (ErrorType::VerbTense, 1)],
            ),
            doc("b", "rus", &[(ErrorType::WordOrder, 3)]),
        ])
        .unwrap();
        let text = corpus_to_records(&corpus);
        let reloaded = load_corpus_from(text.as_bytes(), "roundtrip").unwrap();
        assert_eq!(corpus.documents(), reloaded.documents());
    }
}
