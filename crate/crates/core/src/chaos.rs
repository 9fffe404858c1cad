//! The four three-dimensional chaotic systems that drive the cipher.
//!
//! Everything on the keystream path is plain IEEE-754 double arithmetic
//! (`+ - * /`, `abs`, `floor`) evaluated in source order. Rust never contracts
//! `a * b + c` into a fused multiply-add on its own, so a given key produces
//! the same trajectory on every platform.

use crate::bitplane::TransientCounts;
use crate::error::{Error, Result};
use crate::key::KeyConfig;

/// States whose magnitude exceeds this are treated as divergent.
pub const DIVERGENCE_BOUND: f64 = 1e10;

/// Identifies one of the four chaotic systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemId {
    Henon,
    Lorenz,
    Chua,
    Rossler,
}

impl SystemId {
    /// System order used throughout: the index `i` of `X_i`, `Y_i`, `Z_i` minus one.
    pub const ALL: [SystemId; 4] = [
        SystemId::Henon,
        SystemId::Lorenz,
        SystemId::Chua,
        SystemId::Rossler,
    ];

    pub fn index(self) -> usize {
        match self {
            SystemId::Henon => 0,
            SystemId::Lorenz => 1,
            SystemId::Chua => 2,
            SystemId::Rossler => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SystemId::Henon => "henon",
            SystemId::Lorenz => "lorenz",
            SystemId::Chua => "chua",
            SystemId::Rossler => "rossler",
        }
    }
}

/// Coefficients of one chaotic system.
///
/// The continuous systems carry their own RK4 step `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemParams {
    /// 3D generalised Hénon map: `x' = a - y² - b·z`, `y' = x`, `z' = y`.
    Henon { a: f64, b: f64 },
    Lorenz { sigma: f64, rho: f64, beta: f64, h: f64 },
    /// Dimensionless Chua circuit with the piecewise-linear diode
    /// `g(x) = m1·x + (m0 - m1)·(|x + 1| - |x - 1|) / 2`.
    Chua { alpha: f64, beta: f64, m0: f64, m1: f64, h: f64 },
    Rossler { a: f64, b: f64, c: f64, h: f64 },
}

impl SystemParams {
    pub fn default_for(id: SystemId) -> Self {
        match id {
            SystemId::Henon => SystemParams::Henon { a: 1.76, b: 0.1 },
            SystemId::Lorenz => SystemParams::Lorenz {
                sigma: 10.0,
                rho: 28.0,
                beta: 8.0 / 3.0,
                h: 0.01,
            },
            SystemId::Chua => SystemParams::Chua {
                alpha: 10.0,
                beta: 14.87,
                m0: -1.27,
                m1: -0.68,
                h: 0.01,
            },
            SystemId::Rossler => SystemParams::Rossler {
                a: 0.2,
                b: 0.2,
                c: 5.7,
                h: 0.01,
            },
        }
    }

    pub fn id(&self) -> SystemId {
        match self {
            SystemParams::Henon { .. } => SystemId::Henon,
            SystemParams::Lorenz { .. } => SystemId::Lorenz,
            SystemParams::Chua { .. } => SystemId::Chua,
            SystemParams::Rossler { .. } => SystemId::Rossler,
        }
    }

    /// Named coefficients in a fixed order, as used by the key file.
    pub fn fields(&self) -> Vec<(&'static str, f64)> {
        match *self {
            SystemParams::Henon { a, b } => vec![("a", a), ("b", b)],
            SystemParams::Lorenz { sigma, rho, beta, h } => {
                vec![("sigma", sigma), ("rho", rho), ("beta", beta), ("h", h)]
            }
            SystemParams::Chua { alpha, beta, m0, m1, h } => vec![
                ("alpha", alpha),
                ("beta", beta),
                ("m0", m0),
                ("m1", m1),
                ("h", h),
            ],
            SystemParams::Rossler { a, b, c, h } => vec![("a", a), ("b", b), ("c", c), ("h", h)],
        }
    }

    /// Mutable access to a named coefficient.
    pub fn field_mut(&mut self, name: &str) -> Option<&mut f64> {
        match (self, name) {
            (SystemParams::Henon { a, .. }, "a") => Some(a),
            (SystemParams::Henon { b, .. }, "b") => Some(b),
            (SystemParams::Lorenz { sigma, .. }, "sigma") => Some(sigma),
            (SystemParams::Lorenz { rho, .. }, "rho") => Some(rho),
            (SystemParams::Lorenz { beta, .. }, "beta") => Some(beta),
            (SystemParams::Lorenz { h, .. }, "h") => Some(h),
            (SystemParams::Chua { alpha, .. }, "alpha") => Some(alpha),
            (SystemParams::Chua { beta, .. }, "beta") => Some(beta),
            (SystemParams::Chua { m0, .. }, "m0") => Some(m0),
            (SystemParams::Chua { m1, .. }, "m1") => Some(m1),
            (SystemParams::Chua { h, .. }, "h") => Some(h),
            (SystemParams::Rossler { a, .. }, "a") => Some(a),
            (SystemParams::Rossler { b, .. }, "b") => Some(b),
            (SystemParams::Rossler { c, .. }, "c") => Some(c),
            (SystemParams::Rossler { h, .. }, "h") => Some(h),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let name = self.id().name();
        for (field, value) in self.fields() {
            if !value.is_finite() {
                return Err(Error::InvalidKey(format!("{name}.{field} is not finite")));
            }
            if field == "h" && value <= 0.0 {
                return Err(Error::InvalidKey(format!("{name}.h must be positive")));
            }
        }
        Ok(())
    }

    /// Advances `state` by one map application (Hénon) or one RK4 step.
    pub fn step(&self, state: SystemState) -> Result<SystemState> {
        let next = match *self {
            SystemParams::Henon { a, b } => SystemState {
                x: a - state.y * state.y - b * state.z,
                y: state.x,
                z: state.y,
            },
            SystemParams::Lorenz { h, .. }
            | SystemParams::Chua { h, .. }
            | SystemParams::Rossler { h, .. } => rk4(self, state, h),
        };
        if next.is_bounded() {
            Ok(next)
        } else {
            Err(Error::Divergence {
                system: self.id(),
                iteration: 0,
            })
        }
    }

    /// Applies [`step`](Self::step) `count` times and returns the final state.
    pub fn burn_in(&self, mut state: SystemState, count: u64) -> Result<SystemState> {
        for i in 0..count {
            state = self.step(state).map_err(|e| with_iteration(e, i + 1))?;
        }
        Ok(state)
    }

    fn derivative(&self, s: SystemState) -> SystemState {
        match *self {
            SystemParams::Lorenz { sigma, rho, beta, .. } => SystemState {
                x: sigma * (s.y - s.x),
                y: s.x * (rho - s.z) - s.y,
                z: s.x * s.y - beta * s.z,
            },
            SystemParams::Chua { alpha, beta, m0, m1, .. } => {
                let diode = m1 * s.x + 0.5 * (m0 - m1) * ((s.x + 1.0).abs() - (s.x - 1.0).abs());
                SystemState {
                    x: alpha * (s.y - s.x - diode),
                    y: s.x - s.y + s.z,
                    z: -beta * s.y,
                }
            }
            SystemParams::Rossler { a, b, c, .. } => SystemState {
                x: -s.y - s.z,
                y: s.x + a * s.y,
                z: b + s.z * (s.x - c),
            },
            SystemParams::Henon { .. } => unreachable!("the Hénon map is discrete"),
        }
    }
}

fn with_iteration(err: Error, iteration: u64) -> Error {
    match err {
        Error::Divergence { system, .. } => Error::Divergence { system, iteration },
        other => other,
    }
}

fn rk4(params: &SystemParams, s: SystemState, h: f64) -> SystemState {
    let half = 0.5 * h;
    let k1 = params.derivative(s);
    let k2 = params.derivative(s.offset(k1, half));
    let k3 = params.derivative(s.offset(k2, half));
    let k4 = params.derivative(s.offset(k3, h));
    let sixth = h / 6.0;
    SystemState {
        x: s.x + sixth * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
        y: s.y + sixth * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
        z: s.z + sixth * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SystemState {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SystemState {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        SystemState { x, y, z }
    }

    pub fn default_for(id: SystemId) -> Self {
        match id {
            SystemId::Henon => SystemState::new(0.1, 0.2, 0.3),
            SystemId::Lorenz => SystemState::new(1.0, 1.0, 1.0),
            SystemId::Chua => SystemState::new(0.7, 0.0, 0.0),
            SystemId::Rossler => SystemState::new(1.0, 1.0, 1.0),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    fn is_bounded(&self) -> bool {
        self.is_finite()
            && self.x.abs() <= DIVERGENCE_BOUND
            && self.y.abs() <= DIVERGENCE_BOUND
            && self.z.abs() <= DIVERGENCE_BOUND
    }

    fn offset(self, d: SystemState, scale: f64) -> SystemState {
        SystemState {
            x: self.x + scale * d.x,
            y: self.y + scale * d.y,
            z: self.z + scale * d.z,
        }
    }
}

/// Free-function form of [`SystemParams::step`].
pub fn step_system(params: &SystemParams, state: SystemState) -> Result<SystemState> {
    params.step(state)
}

/// Free-function form of [`SystemParams::burn_in`].
pub fn burn_in(params: &SystemParams, state: SystemState, count: u64) -> Result<SystemState> {
    params.burn_in(state, count)
}

/// Fractional part of `value · 10⁶`, always in `[0, 1)`.
pub fn preprocess(value: f64) -> f64 {
    let scaled = value * 1e6;
    let frac = scaled - scaled.floor();
    // tiny negative inputs round up to exactly 1.0
    if frac >= 1.0 {
        ONE_MINUS_ULP
    } else {
        frac
    }
}

const ONE_MINUS_ULP: f64 = 1.0 - f64::EPSILON / 2.0;

/// Thresholds a preprocessed sequence: 1 where `value >= theta`, else 0.
pub fn binarize(seq: &[f64], theta: f64) -> Vec<u8> {
    seq.iter().map(|&v| u8::from(v >= theta)).collect()
}

/// Which coordinate of a system a sequence was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    X,
    Y,
    Z,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::X, Component::Y, Component::Z];

    fn index(self) -> usize {
        match self {
            Component::X => 0,
            Component::Y => 1,
            Component::Z => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Component::X => 'X',
            Component::Y => 'Y',
            Component::Z => 'Z',
        }
    }
}

/// The twelve raw chaotic sequences of one encryption and their preprocessed forms.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceBundle {
    raw: [[Vec<f64>; 3]; 4],
    pre: [[Vec<f64>; 3]; 4],
}

impl SequenceBundle {
    pub fn len(&self) -> usize {
        self.raw[0][0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn raw(&self, system: SystemId, c: Component) -> &[f64] {
        &self.raw[system.index()][c.index()]
    }

    pub fn preprocessed(&self, system: SystemId, c: Component) -> &[f64] {
        &self.pre[system.index()][c.index()]
    }

    /// Preprocessed sequences in interleaved order
    /// `X̂1, Ŷ1, Ẑ1, X̂2, …, Ẑ4` (the diffusion key table order).
    pub fn interleaved(&self) -> [&[f64]; 12] {
        std::array::from_fn(|t| self.pre[t / 3][t % 3].as_slice())
    }

    /// Preprocessed sequences grouped by component: `X̂1..X̂4, Ŷ1..Ŷ4, Ẑ1..Ẑ4`.
    pub fn grouped(&self) -> [&[f64]; 12] {
        std::array::from_fn(|t| self.pre[t % 4][t / 4].as_slice())
    }

    /// The twelve preprocessed values at position `mu`, interleaved order.
    pub fn row_vector(&self, mu: usize) -> [f64; 12] {
        std::array::from_fn(|t| self.pre[t / 3][t % 3][mu])
    }

    /// Labels for [`grouped`](Self::grouped), e.g. `X1`.
    pub fn grouped_labels() -> [String; 12] {
        std::array::from_fn(|t| format!("{}{}", Component::ALL[t / 4].letter(), t % 4 + 1))
    }
}

/// Records `length` states of one system after discarding `transient` iterations.
pub fn trajectory(
    params: &SystemParams,
    initial: SystemState,
    transient: u64,
    length: usize,
) -> Result<[Vec<f64>; 3]> {
    let mut state = params.burn_in(initial, transient)?;
    let mut out = [
        Vec::with_capacity(length),
        Vec::with_capacity(length),
        Vec::with_capacity(length),
    ];
    for k in 0..length {
        state = params
            .step(state)
            .map_err(|e| with_iteration(e, transient + k as u64 + 1))?;
        out[0].push(state.x);
        out[1].push(state.y);
        out[2].push(state.z);
    }
    Ok(out)
}

/// Burns in each system for its transient count, then records `length`
/// successive states as the twelve raw sequences.
pub fn generate_bundle(
    key: &KeyConfig,
    transients: TransientCounts,
    length: usize,
) -> Result<SequenceBundle> {
    let counts = transients.as_array();
    let mut raw: [[Vec<f64>; 3]; 4] = Default::default();
    for id in SystemId::ALL {
        let i = id.index();
        raw[i] = trajectory(&key.params[i], key.initial[i], counts[i], length)?;
    }
    let pre = raw
        .clone()
        .map(|sys| sys.map(|seq| seq.into_iter().map(preprocess).collect()));
    Ok(SequenceBundle { raw, pre })
}
