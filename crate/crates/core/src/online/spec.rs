//! Strategy selection by name, e.g. `random:p=0.2,seed=3` or
//! `split:s=3,inner=witness:t=4`. The `inner` parameter takes the rest of
//! the string, so wrappers nest.

use std::collections::BTreeMap;
use std::str::FromStr;

use thiserror::Error;

use super::painters::{default_t, RecursivePainter, SplitClasses, WitnessPainter};
use super::{
    Builder, FirstFit, FixedGraphBuilder, ForceColors, ForceIndependent, GameConfig, Painter, RandomBuilder,
    RandomLegal, TrivialBuilder,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("unknown strategy {0:?}")]
    Unknown(String),
    #[error("malformed parameter {0:?} (expected key=value)")]
    Malformed(String),
    #[error("parameter {key}: cannot parse {value:?}")]
    BadValue { key: String, value: String },
    #[error("missing parameter {0}")]
    Missing(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategySpec {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl FromStr for StrategySpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let (name, mut rest) = s.split_once(':').unwrap_or((s, ""));
        let mut params = BTreeMap::new();
        while !rest.is_empty() {
            if let Some(inner) = rest.strip_prefix("inner=") {
                params.insert("inner".to_string(), inner.to_string());
                break;
            }
            let (item, tail) = rest.split_once(',').unwrap_or((rest, ""));
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| SpecError::Malformed(item.to_string()))?;
            params.insert(k.trim().to_string(), v.trim().to_string());
            rest = tail;
        }
        Ok(StrategySpec {
            name: name.trim().to_string(),
            params,
        })
    }
}

impl StrategySpec {
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, SpecError> {
        self.params
            .get(key)
            .map(|v| {
                v.parse().map_err(|_| SpecError::BadValue {
                    key: key.into(),
                    value: v.clone(),
                })
            })
            .transpose()
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, SpecError> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T, SpecError> {
        self.get(key)?.ok_or_else(|| SpecError::Missing(key.into()))
    }
}

pub const BUILDERS: &[&str] = &[
    "trivial",
    "random",
    "force-independent",
    "force-colors",
    "path",
    "path-adversary",
];
pub const PAINTERS: &[&str] = &["first-fit", "random-legal", "witness", "split", "recursive"];

/// `seed` and `r` default to the game's.
pub fn build_builder(spec: &str, cfg: &GameConfig) -> Result<Box<dyn Builder>, SpecError> {
    let s: StrategySpec = spec.parse()?;
    Ok(match s.name.as_str() {
        "trivial" => Box::new(TrivialBuilder),
        "random" => {
            let p: f64 = s.require("p")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(SpecError::Invalid(format!("p = {p} is not a probability")));
            }
            Box::new(RandomBuilder::new(
                p,
                s.get_or("r", cfg.r)?,
                s.get_or("seed", cfg.seed)?,
            ))
        }
        "force-independent" => {
            let fi = ForceIndependent::new(s.get_or("r", cfg.r)?, s.require("y")?).map_err(SpecError::Invalid)?;
            Box::new(fi)
        }
        "force-colors" => Box::new(ForceColors::new(s.require("k")?)),
        "path" => Box::new(FixedGraphBuilder::path(s.get_or("n", cfg.n)?)),
        "path-adversary" => Box::new(FixedGraphBuilder::path_adversary()),
        other => return Err(SpecError::Unknown(other.into())),
    })
}

pub fn build_painter(spec: &str, cfg: &GameConfig) -> Result<Box<dyn Painter>, SpecError> {
    let s: StrategySpec = spec.parse()?;
    Ok(match s.name.as_str() {
        "first-fit" => Box::new(FirstFit),
        "random-legal" => Box::new(RandomLegal::new(s.get_or("seed", cfg.seed)?)),
        "witness" => {
            let n = s.get_or("n", cfg.n)?;
            let t = s.get_or("t", default_t(n))?;
            Box::new(WitnessPainter::new(t, n, s.get_or("proper", true)?))
        }
        "split" => {
            let block: usize = s.require("s")?;
            if block == 0 {
                return Err(SpecError::Invalid("s must be positive".into()));
            }
            let inner = build_painter(&s.get_or("inner", "first-fit".to_string())?, cfg)?;
            Box::new(SplitClasses::new(inner, block))
        }
        "recursive" => {
            let r = s.get_or("r", cfg.r)?;
            let n = s.get_or("n", cfg.n)?;
            match s.params.get("levels") {
                None => Box::new(RecursivePainter::paper(r, n)),
                Some(text) => {
                    let schedule = parse_levels(text)?;
                    Box::new(RecursivePainter::with_schedule(r, n, &schedule).map_err(SpecError::Invalid)?)
                }
            }
        }
        other => return Err(SpecError::Unknown(other.into())),
    })
}

/// `t/s;t/s;...`, outermost level first.
fn parse_levels(text: &str) -> Result<Vec<(usize, usize)>, SpecError> {
    let bad = || SpecError::BadValue {
        key: "levels".into(),
        value: text.into(),
    };
    text.split(';')
        .filter(|x| !x.is_empty())
        .map(|pair| {
            let (t, s) = pair.split_once('/').ok_or_else(bad)?;
            Ok((t.parse().map_err(|_| bad())?, s.parse().map_err(|_| bad())?))
        })
        .collect()
}

impl<P: Painter + ?Sized> Painter for Box<P> {
    fn color(&mut self, view: &super::PainterView<'_>) -> Option<super::Color> {
        (**self).color(view)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}

impl<B: Builder + ?Sized> Builder for Box<B> {
    fn next_move(&mut self, view: &super::BuilderView<'_>) -> super::BuilderStep {
        (**self).next_move(view)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}
