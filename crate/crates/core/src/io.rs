//! JSON input formats. Every failure is reported with the offending field
//! and, when it can be located in the source, its line.
//!
//! ```text
//! presentation  {"generators": ["x1","x2"], "relators": ["x1 x2 x1^-1 x2^-1"],
//!                "phi": {"x1": [1,0], "x2": [0,1]}}          (phi optional: all 1)
//! braid         {"strands": 3, "word": [1,1,1]}
//! factorization {"strands": 3, "factors": [[1,1],[2]], "projective": false}
//! link          {"braid": {...}, "colours": {"1": 0, "3": 1}, "marked": 1, "degree": 6}
//! curve         {"components": [{"name": "L", "degree": 1, "genus": 0}, ...],
//!                "singularities": [{"link": {...}, "on_L": true}, ...]}
//! ```
//!
//! Link components are named by their smallest strand, counted from 1.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serializer};
use serde_json::value::RawValue;

use crate::braid::{validate_factorization, BraidError, BraidWord, Factorization};
use crate::curve::{CurveComponent, CurveData, CurveError, Singularity};
use crate::group::{AbelMap, GroupError, Presentation, Word};
use crate::linkpoly::{LinkError, MarkedLink};

pub(crate) fn serialize_display<T: fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Seg {
    Key(String),
    Index(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Path(Vec<Seg>);

impl Path {
    fn key(&self, k: &str) -> Path {
        let mut p = self.clone();
        p.0.push(Seg::Key(k.to_string()));
        p
    }

    fn index(&self, i: usize) -> Path {
        let mut p = self.clone();
        p.0.push(Seg::Index(i));
        p
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(document)");
        }
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Seg::Key(k) if i == 0 => write!(f, "{k}")?,
                Seg::Key(k) => write!(f, ".{k}")?,
                Seg::Index(n) => write!(f, "[{n}]")?,
            }
        }
        Ok(())
    }
}

/// Malformed input: what went wrong, in which field, on which line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub field: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: field `{}`: {}", self.field, self.message),
            None => write!(f, "field `{}`: {}", self.field, self.message),
        }
    }
}

impl std::error::Error for InputError {}

/// Line of the deepest value along `path` that exists in `src`.
fn locate(src: &str, path: &Path) -> Option<usize> {
    let line_of = |raw: &RawValue| {
        let offset = raw.get().as_ptr() as usize - src.as_ptr() as usize;
        src[..offset].matches('\n').count() + 1
    };
    let mut current: &RawValue = serde_json::from_str(src).ok()?;
    let mut line = line_of(current);
    for seg in &path.0 {
        let next = match seg {
            Seg::Key(k) => serde_json::from_str::<BTreeMap<String, &RawValue>>(current.get()).ok()?.remove(k),
            Seg::Index(i) => serde_json::from_str::<Vec<&RawValue>>(current.get()).ok()?.get(*i).copied(),
        };
        let Some(next) = next else { break };
        current = next;
        line = line_of(current);
    }
    Some(line)
}

struct Ctx<'a> {
    src: &'a str,
}

impl Ctx<'_> {
    fn err(&self, path: &Path, message: impl fmt::Display) -> InputError {
        InputError { line: locate(self.src, path), field: path.to_string(), message: message.to_string() }
    }
}

fn parse_raw<'de, T: Deserialize<'de>>(src: &'de str) -> Result<T, InputError> {
    let de = &mut serde_json::Deserializer::from_str(src);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        let line = (inner.line() > 0).then_some(inner.line());
        InputError { line, field, message: inner.to_string() }
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<String>,
    #[serde(default)]
    phi: Option<BTreeMap<String, PhiValue>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PhiValue {
    Scalar(i64),
    Vector(Vec<i64>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BraidJson {
    strands: usize,
    word: Vec<i32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorizationJson {
    strands: usize,
    factors: Vec<Vec<i32>>,
    #[serde(default)]
    projective: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkJson {
    braid: BraidJson,
    #[serde(default)]
    colours: Option<BTreeMap<String, usize>>,
    #[serde(default)]
    marked: Option<usize>,
    #[serde(default)]
    degree: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentJson {
    name: String,
    degree: u32,
    genus: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SingularityJson {
    link: LinkJson,
    #[serde(rename = "on_L")]
    on_line: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveJson {
    components: Vec<ComponentJson>,
    singularities: Vec<SingularityJson>,
}

/// A presentation with its map to `Z^k` (all generators to 1 by default).
pub fn parse_presentation(src: &str) -> Result<(Presentation, AbelMap), InputError> {
    let raw: PresentationJson = parse_raw(src)?;
    let cx = Ctx { src };
    let root = Path::default();
    let relators = raw
        .relators
        .iter()
        .enumerate()
        .map(|(i, r)| Word::parse(r, &raw.generators).map_err(|e| cx.err(&root.key("relators").index(i), e)))
        .collect::<Result<Vec<_>, _>>()?;
    let p = Presentation::new(raw.generators.clone(), relators)
        .map_err(|e| cx.err(&root.key("generators"), e))?;
    let phi_path = root.key("phi");
    let phi = match raw.phi {
        None => AbelMap::all_ones(p.generator_count()),
        Some(map) => {
            if let Some(k) = map.keys().find(|k| !raw.generators.contains(k)) {
                return Err(cx.err(&phi_path.key(k), "not a generator"));
            }
            let mut rank = None;
            let mut images = Vec::new();
            for g in &raw.generators {
                let v = match map.get(g) {
                    None => return Err(cx.err(&phi_path, format!("no image for generator {g}"))),
                    Some(PhiValue::Scalar(x)) => vec![*x],
                    Some(PhiValue::Vector(v)) => v.clone(),
                };
                if *rank.get_or_insert(v.len()) != v.len() {
                    return Err(cx.err(&phi_path.key(g), "images have different lengths"));
                }
                images.push(v);
            }
            AbelMap::new(rank.unwrap_or(1), images).map_err(|e| cx.err(&phi_path, e))?
        }
    };
    phi.validate_for(&p).map_err(|e| match e {
        GroupError::Incompatible { relator } => cx.err(&root.key("relators").index(relator), e),
        e => cx.err(&phi_path, e),
    })?;
    Ok((p, phi))
}

fn braid_from(raw: &BraidJson, cx: &Ctx, path: &Path) -> Result<BraidWord, InputError> {
    BraidWord::new(raw.strands, raw.word.clone()).map_err(|e| match e {
        BraidError::LetterOutOfRange { letter, .. } => {
            let i = raw.word.iter().position(|&l| l == letter).unwrap_or(0);
            cx.err(&path.key("word").index(i), e)
        }
        e => cx.err(&path.key("strands"), e),
    })
}

pub fn parse_braid(src: &str) -> Result<BraidWord, InputError> {
    let raw: BraidJson = parse_raw(src)?;
    braid_from(&raw, &Ctx { src }, &Path::default())
}

/// A factorization, rejected unless it composes to the full twist. The
/// flag says whether the projective relator is requested.
pub fn parse_factorization(src: &str) -> Result<(Factorization, bool), InputError> {
    let raw: FactorizationJson = parse_raw(src)?;
    let cx = Ctx { src };
    let root = Path::default();
    if raw.strands < 2 {
        return Err(cx.err(&root.key("strands"), BraidError::TooFewStrands(raw.strands)));
    }
    let factors = raw
        .factors
        .iter()
        .enumerate()
        .map(|(i, w)| {
            BraidWord::new(raw.strands, w.clone()).map_err(|e| cx.err(&root.key("factors").index(i), e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let f = Factorization::new(raw.strands, factors).map_err(|e| cx.err(&root.key("factors"), e))?;
    if !validate_factorization(&f) {
        return Err(cx.err(&root.key("factors"), BraidError::NotFullTwist(raw.strands)));
    }
    Ok((f, raw.projective))
}

fn link_from(raw: &LinkJson, cx: &Ctx, path: &Path) -> Result<MarkedLink, InputError> {
    let braid = braid_from(&raw.braid, cx, &path.key("braid"))?;
    let components = braid.strand_components();
    let by_strand = |path: &Path, s: usize| {
        components
            .iter()
            .position(|c| c[0] + 1 == s)
            .ok_or_else(|| cx.err(path, format!("{s} is not the smallest strand of a component")))
    };
    let colours_path = path.key("colours");
    let colours = match &raw.colours {
        None => vec![1; components.len()],
        Some(map) => {
            let mut colours = vec![None; components.len()];
            for (key, &colour) in map {
                let s: usize = key.parse().map_err(|_| cx.err(&colours_path.key(key), "not a strand number"))?;
                colours[by_strand(&colours_path.key(key), s)?] = Some(colour);
            }
            colours
                .into_iter()
                .enumerate()
                .map(|(c, col)| {
                    col.ok_or_else(|| {
                        cx.err(&colours_path, format!("no colour for the component of strand {}", components[c][0] + 1))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    let marked = raw.marked.map(|s| by_strand(&path.key("marked"), s)).transpose()?;
    if marked.is_some() && raw.degree.is_none() {
        return Err(cx.err(&path.key("degree"), "required for a marked link"));
    }
    MarkedLink::new(braid, colours, marked, raw.degree.unwrap_or(1)).map_err(|e| {
        let field = match e {
            LinkError::ColourCount { .. } | LinkError::SeveralOnLine(..) => "colours",
            LinkError::BadDegree(_) => "degree",
            _ => "marked",
        };
        cx.err(&path.key(field), e)
    })
}

pub fn parse_link(src: &str) -> Result<MarkedLink, InputError> {
    let raw: LinkJson = parse_raw(src)?;
    link_from(&raw, &Ctx { src }, &Path::default())
}

pub fn parse_curve(src: &str) -> Result<CurveData, InputError> {
    let raw: CurveJson = parse_raw(src)?;
    let cx = Ctx { src };
    let root = Path::default();
    let sings_path = root.key("singularities");
    let mut singularities = Vec::new();
    for (i, s) in raw.singularities.iter().enumerate() {
        let link = link_from(&s.link, &cx, &sings_path.index(i).key("link"))?;
        singularities.push(Singularity { link, on_line: s.on_line });
    }
    let components = raw
        .components
        .into_iter()
        .map(|c| CurveComponent { name: c.name, degree: c.degree, genus: c.genus })
        .collect();
    CurveData::new(components, singularities).map_err(|e| {
        let sing = |i: usize, rest: &[&str]| rest.iter().fold(sings_path.index(i), |p, k| p.key(k));
        let path = match &e {
            CurveError::BadLine => root.key("components").index(0),
            CurveError::NoComponents => root.key("components"),
            CurveError::ZeroDegree(j) => root.key("components").index(*j).key("degree"),
            CurveError::UnknownColour { index, .. } => sing(*index, &["link", "colours"]),
            CurveError::LineFlag { index } => sing(*index, &["on_L"]),
            CurveError::LineNotMarked { index } => sing(*index, &["link", "marked"]),
            CurveError::DegreeMismatch { index, .. } => sing(*index, &["link", "degree"]),
            CurveError::Link { index, .. } => sing(*index, &["link"]),
        };
        cx.err(&path, e)
    })
}
