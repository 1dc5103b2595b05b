//! WALS-style typological data: ingestion, filtering, and binary encoding.
//!
//! The input is one flat tab-separated file with a header row:
//!
//! ```text
//! language_code	feature_id	feature_name	category	value_label
//! ```
//!
//! Feature value sets are inferred from the data rather than a schema, which
//! keeps ingestion independent of the particular database export version.
//! Encoding layouts are deterministic: features sorted by id, values sorted
//! by label, divergence slots appended in feature-id order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default language code designating English in a typology database.
pub const DEFAULT_ENGLISH_CODE: &str = "eng";

/// The 11 feature categories of the WALS taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Category {
    Phonology,
    Morphology,
    NominalCategories,
    NominalSyntax,
    VerbalCategories,
    WordOrder,
    SimpleClauses,
    ComplexSentences,
    Lexicon,
    SignLanguages,
    Other,
}

impl Category {
    pub const ALL: [Category; 11] = [
        Category::Phonology,
        Category::Morphology,
        Category::NominalCategories,
        Category::NominalSyntax,
        Category::VerbalCategories,
        Category::WordOrder,
        Category::SimpleClauses,
        Category::ComplexSentences,
        Category::Lexicon,
        Category::SignLanguages,
        Category::Other,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Category::Phonology => "Phonology",
            Category::Morphology => "Morphology",
            Category::NominalCategories => "Nominal Categories",
            Category::NominalSyntax => "Nominal Syntax",
            Category::VerbalCategories => "Verbal Categories",
            Category::WordOrder => "Word Order",
            Category::SimpleClauses => "Simple Clauses",
            Category::ComplexSentences => "Complex Sentences",
            Category::Lexicon => "Lexicon",
            Category::SignLanguages => "Sign Languages",
            Category::Other => "Other",
        }
    }

    /// Categories excluded from structural analysis: they concern spoken
    /// form, vocabulary, or signed modality rather than written structure.
    pub fn is_discarded(self) -> bool {
        matches!(
            self,
            Category::Phonology | Category::Lexicon | Category::SignLanguages | Category::Other
        )
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Category::ALL
            .iter()
            .copied()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::Data(format!("unknown feature category: {s}")))
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One categorical typological feature with its observed value labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalsFeature {
    pub id: String,
    pub name: String,
    pub category: Category,
    /// Distinct value labels observed in the data, sorted lexicographically.
    pub value_names: Vec<String>,
}

impl WalsFeature {
    pub fn value_count(&self) -> usize {
        self.value_names.len()
    }
}

/// Encoding mode: native-language typology only, or native typology plus
/// explicit divergence-from-English indicators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Reg,
    #[default]
    RegCa,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Reg => "Reg",
            Mode::RegCa => "RegCA",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "reg" => Ok(Mode::Reg),
            "regca" => Ok(Mode::RegCa),
            _ => Err(Error::Config(format!(
                "unknown mode {s:?}, expected Reg or RegCA"
            ))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A languages-by-features categorical database with missing values.
///
/// Immutable after construction; all accessors are read-only.
#[derive(Debug, Clone, PartialEq)]
pub struct TypologyDatabase {
    features: BTreeMap<String, WalsFeature>,
    /// language code -> feature id -> value label
    assignments: BTreeMap<String, BTreeMap<String, String>>,
    /// All language codes seen at ingestion. Stable under filtering, so a
    /// language that loses every feature remains addressable.
    languages: BTreeSet<String>,
    english_code: String,
}

/// One ingested (language, feature, value) row.
#[derive(Debug, Clone)]
pub struct TypologyRow {
    pub language: String,
    pub feature_id: String,
    pub feature_name: String,
    pub category: Category,
    pub value: String,
}

impl TypologyDatabase {
    /// Builds a database from rows, inferring feature value sets from the
    /// observed labels. Duplicate (language, feature) rows and conflicting
    /// feature metadata are data errors.
    pub fn from_rows(rows: Vec<TypologyRow>, english_code: impl Into<String>) -> Result<Self> {
        let mut features: BTreeMap<String, WalsFeature> = BTreeMap::new();
        let mut valuesomit: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        let mut assignments: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        let mut languages = BTreeSet::new();

        for row in rows {
            languages.insert(row.language.clone());
            match features.get(&row.feature_id) {
                Some(f) => {
                    if f.name != row.feature_name || f.category != row.category {
                        return Err(Error::Data(format!(
                            "conflicting metadata for feature {}: ({}, {}) vs ({}, {})",
                            row.feature_id, f.name, f.category, row.feature_name, row.category
                        )));
                    }
                }
                None => {
                    features.insert(
                        row.feature_id.clone(),
                        WalsFeature {
                            id: row.feature_id.clone(),
                            name: row.feature_name.clone(),
                            category: row.category,
                            value_names: Vec::new(),
                        },
                    );
                }
            }
            values!(values omit);
            let prev = assignments
                .entry(row.language.clone())
                .or_default()
                .insert(row.feature_id.clone(), row.value.clone());
            if prev.is_some() {
                return Err(Error::Data(format!(
                    "duplicate assignment for ({}, {})",
                    row.language, row.feature_id
                )));
            }
            values omit
                .entry(row.feature_id.clone())
                .or_default()
                .insert(row.value);
        }

        for (id, vals) in values omit {
            if let Some(f) = features.get_mut(&id) {
                f.value_names = vals.into_iter().collect();
            }
        }

        Ok(TypologyDatabase {
            features,
            assignments,
            languages,
            english_code: english_code.into(),
        })
    }

    pub fn english_code(&self) -> &str {
        &self.english_code
    }

    pub fn languages(&self) -> impl Iterator<Item = &str> {
        self.languages.iter().map(|s| s.as_str())
    }

    pub fn contains_language(&self, code: &str) -> bool {
        self.languages.contains(code)
    }

    pub fn features(&self) -> impl Iterator<Item = &WalsFeature> {
        self.features.values()
    }

    pub fn feature_count(&self) -> usize {
        self.features.len()
    }

    pub fn feature(&self, id: &str) -> Option<&WalsFeature> {
        self.features.get(id)
    }

    pub fn value_of(&self, language: &str, feature_id: &str) -> Option<&str> {
        self.assignments
            .get(language)?
            .get(feature_id)
            .map(|s| s.as_str())
    }

    /// Documented (feature -> value) assignments of one language.
    pub fn assignments_of(&self, language: &str) -> BTreeMap<String, String> {
        self.assignments.get(language).cloned().unwrap_or_default()
    }

    /// Number of documented features for one language.
    pub fn documented_count(&self, language: &str) -> usize {
        self.assignments.get(language).map_or(0, |m| m.len())
    }

    /// Mean documented-feature count across languages.
    pub fn mean_documented_per_language(&self) -> f64 {
        if self.languages.is_empty() {
            return 0.0;
        }
        let total: usize = self
            .languages
            .iter()
            .map(|l| self.documented_count(l))
            .sum();
        total as f64 / self.languages.len() as f64
    }

    /// Mean number of values per feature.
    pub fn mean_values_per_feature(&self) -> f64 {
        if self.features.is_empty() {
            return 0.0;
        }
        let total: usize = self.features.values().map(|f| f.value_count()).sum();
        total as f64 / self.features.len() as f64
    }

    /// Serializes back to the flat tab-separated format (with header).
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("language_code\tfeature_id\tfeature_name\tcategory\tvalue_label\n");
        for (lang, feats) in &self.assignments {
            for (fid, value) in feats {
                let f = &self.features[fid];
                out.push_str(&format!(
                    "{lang}\t{fid}\t{}\t{}\t{value}\n",
                    f.name, f.category
                ));
            }
        }
        out
    }
}

/// Reads a typology database from a tab-separated file, using the default
/// English language code.
pub fn load_typology(path: impl AsRef<Path>) -> Result<TypologyDatabase> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    load_typology_from(
        BufReader::new(file),
        &path.display().to_string(),
        DEFAULT_ENGLISH_CODE,
    )
}

/// Reads a typology database from any reader. `location` labels parse
/// errors; `english_code` designates English for divergence encoding.
pub fn load_typology_from(
    reader: impl BufRead,
    location: &str,
    english_code: &str,
) -> Result<TypologyDatabase> {
    const HEADER: &str = "language_code\tfeature_id\tfeature_name\tcategory\tvalue_label";
    let mut rows = Vec::new();
    let mut lines = reader.lines().enumerate();

    match lines.next() {
        Some((_, Ok(first))) if first.trim_end() == HEADER => {}
        Some((_, Ok(first))) => {
            return Err(Error::parse(
                location,
                1,
                format!("expected header {HEADER:?}, found {first:?}"),
            ))
        }
        Some((_, Err(e))) => return Err(Error::parse(location, 1, e.to_string())),
        None => return Err(Error::parse(location, 1, "empty file".to_string())),
    }

    for (lineno, line) in lines {
        let lineno = lineno + 1;
        let line = line.map_err(|e| Error::parse(location, lineno, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(Error::parse(
                location,
                lineno,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            ));
        }
        let category = Category::from_str(fields[3])
            .map_err(|e| Error::parse(location, lineno, e.to_string()))?;
        if fields.iter().any(|f| f.trim().is_empty()) {
            return Err(Error::parse(location, lineno, "empty field".to_string()));
        }
        rows.push(TypologyRow {
            language: fields[0].to_string(),
            feature_id: fields[1].to_string(),
            feature_name: fields[2].to_string(),
            category,
            value: fields[4].to_string(),
        });
    }
    TypologyDatabase::from_rows(rows, english_code)
}

/// Drops features in the discarded categories, features documented for at
/// most one language, and features constant across all documented languages.
///
/// Constancy only considers documented values; filtering is evaluated over
/// the database's own language set. Idempotent.
pub fn filter_features(db: &TypologyDatabase) -> TypologyDatabase {
    let mut keep = BTreeSet::new();
    for f in db.features.values() {
        if f.category.is_discarded() {
            continue;
        }
        let mut documented_langs = 0usize;
        let mut observed: BTreeSet<&str> = BTreeSet::new();
        for lang in &db.languages {
            if let Some(v) = db.value_of(lang, &f.id) {
                documented_langs += 1;
                observed.insert(v);
            }
        }
        if documented_langs <= 1 || observed.len() <= 1 {
            continue;
        }
        keep.insert(f.id.clone());
    }

    let features = db
        .features
        .iter()
        .filter(|(id, _)| keep.contains(*id))
        .map(|(id, f)| (id.clone(), f.clone()))
        .collect();
    let assignments = db
        .assignments
        .iter()
        .map(|(lang, feats)| {
            let kept: BTreeMap<String, String> = feats
                .iter()
                .filter(|(fid, _)| keep.contains(*fid))
                .map(|(fid, v)| (fid.clone(), v.clone()))
                .collect();
            (lang.clone(), kept)
        })
        .collect();

    TypologyDatabase {
        features,
        assignments,
        languages: db.languages.clone(),
        english_code: db.english_code.clone(),
    }
}

/// What one encoder slot represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    /// 1 iff the language documents `feature` with exactly `value`.
    Binarized { feature: String, value: String },
    /// 1 iff the language documents `feature` with a value different from
    /// English's.
    Divergence { feature: String },
}

/// Deterministic index-to-slot manifest for encoded vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncoderLayout {
    mode: Mode,
    slots: Vec<Slot>,
    binarized_len: usize,
}

impl EncoderLayout {
    /// Builds the layout for a database and mode. RegCA layouts require
    /// English to be documented.
    pub fn build(db: &TypologyDatabase, mode: Mode) -> Result<Self> {
        let mut slots = Vec::new();
        for f in db.features.values() {
            for v in &f.value_names {
                slots.push(Slot::Binarized {
                    feature: f.id.clone(),
                    value: v.clone(),
                });
            }
        }
        let binarized_len = slots.len();
        if mode == Mode::RegCa {
            if db.documented_count(&db.english_code) == 0 {
                return Err(Error::Config(format!(
                    "divergence encoding requires English ({}) to be documented",
                    db.english_code
                )));
            }
            for f in db.features.values() {
                if db.value_of(&db.english_code, &f.id).is_some() {
                    slots.push(Slot::Divergence {
                        feature: f.id.clone(),
                    });
                }
            }
        }
        Ok(EncoderLayout {
            mode,
            slots,
            binarized_len,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn binarized_len(&self) -> usize {
        self.binarized_len
    }

    pub fn divergence_len(&self) -> usize {
        self.slots.len() - self.binarized_len
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Human-readable description of one slot, in the style used by
    /// feature-analysis reports.
    pub fn describe(&self, db: &TypologyDatabase, index: usize) -> String {
        match &self.slots[index] {
            Slot::Binarized { feature, value } => {
                let name = db.feature(feature).map_or("?", |f| f.name.as_str());
                format!("{feature} {name}: {value}")
            }
            Slot::Divergence { feature } => {
                let name = db.feature(feature).map_or("?", |f| f.name.as_str());
                format!("{feature} {name}: Different from English")
            }
        }
    }

    /// Two-column manifest (index, slot description) for export.
    pub fn manifest_tsv(&self, db: &TypologyDatabase) -> String {
        let mut out = String::from("index\tslot\n");
        for i in 0..self.slots.len() {
            out.push_str(&format!("{i}\t{}\n", self.describe(db, i)));
        }
        out
    }
}

/// A binarized (optionally divergence-augmented) typological feature vector.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedFeatureVector {
    values: Vec<f64>,
    layout: Arc<EncoderLayout>,
}

impl EncodedFeatureVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mode(&self) -> Mode {
        self.layout.mode()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn layout(&self) -> &Arc<EncoderLayout> {
        &self.layout
    }

    /// First portion of the vector: the one-hot feature blocks.
    pub fn binarized(&self) -> &[f64] {
        &self.values[..self.layout.binarized_len()]
    }

    /// Trailing divergence indicators (empty in Reg mode).
    pub fn divergence(&self) -> &[f64] {
        &self.values[self.layout.binarized_len()..]
    }
}

fn encode_with_layout(
    db: &TypologyDatabase,
    layout: &Arc<EncoderLayout>,
    assignments: &BTreeMap<String, String>,
) -> Result<EncodedFeatureVector> {
    for (fid, value) in assignments {
        match db.feature(fid) {
            None => {
                return Err(Error::Data(format!(
                    "assignment references unknown feature {fid}"
                )))
            }
            Some(f) if !f.value_names.iter().any(|v| v == value) => {
                return Err(Error::Data(format!(
                    "assignment references unknown value {value:?} for feature {fid}"
                )))
            }
            Some(_) => {}
        }
    }
    let english = db.english_code();
    let values = layout
        .slots()
        .iter()
        .map(|slot| match slot {
            Slot::Binarized { feature, value } => {
                match assignments.get(feature) {
                    Some(v) if v == value => 1.0,
                    _ => 0.0,
                }
            }
            Slot::Divergence { feature } => {
                let eng_value = db.value_of(english, feature);
                match (assignments.get(feature), eng_value) {
                    (Some(v), Some(e)) if v != e => 1.0,
                    _ => 0.0,
                }
            }
        })
        .collect();
    Ok(EncodedFeatureVector {
        values,
        layout: Arc::clone(layout),
    })
}

/// Encodes a language's typology under the given mode.
pub fn encode(db: &TypologyDatabase, language: &str, mode: Mode) -> Result<EncodedFeatureVector> {
    if !db.contains_language(language) {
        return Err(Error::UnknownLanguage(language.to_string()));
    }
    let layout = Arc::new(EncoderLayout::build(db, mode)?);
    encode_with_layout(db, &layout, &db.assignments_of(language))
}

/// Encodes an explicit (feature -> value) assignment map under the
/// database's layout. Used for projected typologies of languages whose own
/// documentation is absent or withheld.
pub fn encode_assignments(
    db: &TypologyDatabase,
    assignments: &BTreeMap<String, String>,
    mode: Mode,
) -> Result<EncodedFeatureVector> {
    let layout = Arc::new(EncoderLayout::build(db, mode)?);
    encode_with_layout(db, &layout, assignments)
}

/// One-hot encoding of the native typology only (Reg mode).
pub fn binarize(db: &TypologyDatabase, language: &str) -> Result<EncodedFeatureVector> {
    encode(db, language, Mode::Reg)
}

/// The divergence-from-English indicator block: one slot per
/// English-documented feature, active when the language documents the
/// feature with a different value.
pub fn divergence_encode(db: &TypologyDatabase, language: &str) -> Result<Vec<f64>> {
    let full = encode(db, language, Mode::RegCa)?;
    Ok(full.divergence().to_vec())
}

/// Cosine similarity of the binarized (Reg-mode) encodings of two
/// languages. Both must have at least one documented surviving feature.
pub fn typological_cosine(db: &TypologyDatabase, l1: &str, l2: &str) -> Result<f64> {
    let a = binarize(db, l1)?;
    let b = binarize(db, l2)?;
    cosine(a.values(), b.values()).map_err(|_| {
        Error::UndefinedSimilarity(format!(
            "cosine undefined: {l1} or {l2} has an all-zero encoding"
        ))
    })
}

/// Cosine of two equal-length vectors; errors on zero vectors.
pub(crate) fn cosine(a: &[f64], b: &[f64]) -> Result<f64> {
    debug_assert_eq!(a.len(), b.len());
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return Err(Error::UndefinedSimilarity("zero vector".into()));
    }
    Ok((dot / (na * nb)).min(1.0))
}
