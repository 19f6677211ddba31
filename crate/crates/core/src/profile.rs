//! Radial profile functions `h(r)` used for `f(r)`, the real-form
//! coefficients and conformal factors.

use crate::scalar::{Scalar, C64};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Profile {
    /// `amp · e^{rate·r}`
    Exp { amp: C64, rate: C64 },
    /// `amp · cos(freq·r)`
    Cos { amp: C64, freq: C64 },
    /// `amp · sin(freq·r)`
    Sin { amp: C64, freq: C64 },
}

impl Profile {
    pub fn constant(c: C64) -> Self {
        Profile::Exp {
            amp: c,
            rate: C64::new(0.0, 0.0),
        }
    }

    pub fn exp(amp: C64, rate: C64) -> Self {
        Profile::Exp { amp, rate }
    }

    pub fn eval<S: Scalar>(&self, r: S) -> S {
        match *self {
            Profile::Exp { amp, rate } => (r * rate).exp() * amp,
            Profile::Cos { amp, freq } => (r * freq).cos() * amp,
            Profile::Sin { amp, freq } => (r * freq).sin() * amp,
        }
    }

    pub fn at(&self, r: f64) -> C64 {
        self.eval(C64::new(r, 0.0))
    }

    pub fn scaled(&self, k: C64) -> Self {
        match *self {
            Profile::Exp { amp, rate } => Profile::Exp { amp: amp * k, rate },
            Profile::Cos { amp, freq } => Profile::Cos { amp: amp * k, freq },
            Profile::Sin { amp, freq } => Profile::Sin { amp: amp * k, freq },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c64, derivative};

    #[test]
    fn derivatives_of_profiles() {
        let p = Profile::exp(c64(2.0, 0.0), c64(0.0, -1.0 / 3.0));
        let r = c64(0.4, 0.0);
        let d = derivative(|t| p.eval(t), r);
        assert!((d - c64(0.0, -1.0 / 3.0) * p.eval(r)).norm() < 1e-15);

        let q = Profile::Cos {
            amp: c64(1.5, 0.0),
            freq: c64(3.0, 0.0),
        };
        let d = derivative(|t| q.eval(t), r);
        assert!((d - c64(-4.5 * (1.2f64).sin(), 0.0)).norm() < 1e-14);
    }
}
