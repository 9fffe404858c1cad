//! The secret key and its text file format.
//!
//! A key file holds one `name = value` line per scalar:
//!
//! ```text
//! # mpcs key
//! henon.a = 1.7600000000000000e0
//! henon.x0 = 1.0000000000000001e-1
//! …
//! seed.r = 111
//! theta = 5.0000000000000000e-1
//! ```
//!
//! Blank lines and `#` comments are ignored. Every field must be present
//! exactly once. Doubles are written with 17 significant digits so they
//! parse back to the same bits.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::Rng;

use crate::chaos::{SystemId, SystemParams, SystemState};
use crate::diffusion::SeedBytes;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct KeyConfig {
    /// Coefficients in system order (Hénon, Lorenz, Chua, Rössler).
    pub params: [SystemParams; 4],
    pub initial: [SystemState; 4],
    /// Binarisation threshold for the randomness battery.
    pub theta: f64,
    pub seeds: SeedBytes,
}

impl Default for KeyConfig {
    fn default() -> Self {
        KeyConfig {
            params: SystemId::ALL.map(SystemParams::default_for),
            initial: SystemId::ALL.map(SystemState::default_for),
            theta: 0.5,
            seeds: SeedBytes::default(),
        }
    }
}

/// Iterations a candidate key must survive in [`KeyConfig::random`].
const VALIDATION_STEPS: u64 = 20_000;

impl KeyConfig {
    pub fn validate(&self) -> Result<()> {
        for (i, p) in self.params.iter().enumerate() {
            if p.id() != SystemId::ALL[i] {
                return Err(Error::InvalidKey(format!(
                    "slot {i} holds {} parameters",
                    p.id().name()
                )));
            }
            p.validate()?;
            if !self.initial[i].is_finite() {
                return Err(Error::InvalidKey(format!(
                    "{} initial state is not finite",
                    p.id().name()
                )));
            }
        }
        if !(self.theta > 0.0 && self.theta < 1.0) {
            return Err(Error::InvalidKey(format!("theta {} outside (0, 1)", self.theta)));
        }
        Ok(())
    }

    /// Default coefficients with every initial condition perturbed and fresh
    /// seed bytes. Candidates whose trajectories leave the attractor during a
    /// trial run are redrawn.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let base = KeyConfig::default();
        loop {
            let mut key = base.clone();
            for (state, id) in key.initial.iter_mut().zip(SystemId::ALL) {
                let spread = match id {
                    SystemId::Henon => 0.05,
                    _ => 0.5,
                };
                state.x += rng.gen_range(-spread..spread);
                state.y += rng.gen_range(-spread..spread);
                state.z += rng.gen_range(-spread..spread);
            }
            key.seeds = SeedBytes {
                r: rng.gen(),
                g: rng.gen(),
                b: rng.gen(),
            };
            let stays_bounded = key
                .params
                .iter()
                .zip(&key.initial)
                .all(|(p, s)| p.burn_in(*s, VALIDATION_STEPS).is_ok());
            if stays_bounded {
                return key;
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# mpcs key\n");
        for (p, s) in self.params.iter().zip(&self.initial) {
            let name = p.id().name();
            for (field, value) in p.fields() {
                writeln!(out, "{name}.{field} = {value:.16e}").unwrap();
            }
            for (field, value) in [("x0", s.x), ("y0", s.y), ("z0", s.z)] {
                writeln!(out, "{name}.{field} = {value:.16e}").unwrap();
            }
        }
        writeln!(out, "seed.r = {}", self.seeds.r).unwrap();
        writeln!(out, "seed.g = {}", self.seeds.g).unwrap();
        writeln!(out, "seed.b = {}", self.seeds.b).unwrap();
        writeln!(out, "theta = {:.16e}", self.theta).unwrap();
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: HashMap<&str, (usize, &str)> = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, value) = line.split_once('=').ok_or_else(|| Error::KeyFile {
                line: line_no,
                msg: "expected `name = value`".into(),
            })?;
            let name = name.trim();
            if entries.insert(name, (line_no, value.trim())).is_some() {
                return Err(Error::KeyFile {
                    line: line_no,
                    msg: format!("duplicate entry `{name}`"),
                });
            }
        }

        let mut take = |name: &str| -> Result<(usize, &str)> {
            entries.remove(name).ok_or_else(|| Error::KeyFile {
                line: 0,
                msg: format!("missing entry `{name}`"),
            })
        };
        let float = |(line, v): (usize, &str)| -> Result<f64> {
            v.parse::<f64>().map_err(|e| Error::KeyFile {
                line,
                msg: format!("`{v}`: {e}"),
            })
        };
        let byte = |(line, v): (usize, &str)| -> Result<u8> {
            v.parse::<u8>().map_err(|e| Error::KeyFile {
                line,
                msg: format!("`{v}`: {e}"),
            })
        };

        let mut key = KeyConfig::default();
        for (i, id) in SystemId::ALL.into_iter().enumerate() {
            let name = id.name();
            let fields: Vec<&str> = key.params[i].fields().into_iter().map(|(f, _)| f).collect();
            for field in fields {
                let value = float(take(&format!("{name}.{field}"))?)?;
                *key.params[i].field_mut(field).expect("field listed by fields()") = value;
            }
            key.initial[i] = SystemState::new(
                float(take(&format!("{name}.x0"))?)?,
                float(take(&format!("{name}.y0"))?)?,
                float(take(&format!("{name}.z0"))?)?,
            );
        }
        key.seeds = SeedBytes {
            r: byte(take("seed.r")?)?,
            g: byte(take("seed.g")?)?,
            b: byte(take("seed.b")?)?,
        };
        key.theta = float(take("theta")?)?;

        if let Some((name, (line, _))) = entries.into_iter().min_by_key(|(_, (line, _))| *line) {
            return Err(Error::KeyFile {
                line,
                msg: format!("unknown entry `{name}`"),
            });
        }
        key.validate()?;
        Ok(key)
    }
}
