//! Monodromy combinatorics of the local fibration `x^m y^n`: marked-point
//! indices on the transversal sections, the single anticlockwise monodromy
//! step, its iterates, and the logarithmic winding weights of the cylinder
//! loop.
//!
//! States track a straight path from a marked point `zeta_{k,h}` on the
//! section `{x = 1}` to `xi_{l,h}` on `{y = 1}`, together with the number
//! of turns `s` the path makes around the cylinder loop. Marked points are
//! stored as canonical residues; no transcendental coordinates are ever
//! evaluated.

use crate::num::{gcd_u32, lcm_u32, rat, Rat};

/// The tuple `(m, n, e, p, q, a, b)` governing monodromy at one saddle:
/// `e = gcd(m, n)`, `p = m/e`, `q = n/e`, and `(a, b)` the normalized
/// Bezout pair with `a p - b q = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocalFibrationModel {
    pub m: u32,
    pub n: u32,
    pub e: u32,
    pub p: u32,
    pub q: u32,
    pub a: i64,
    pub b: i64,
}

/// Endpoint data of a straight path plus its winding count around the
/// cylinder loop: `k` mod `q`, `l` mod `p`, sheet `h` in `0..e`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StraightPathState {
    pub k: u32,
    pub l: u32,
    pub h: u32,
    pub s: i64,
}

impl StraightPathState {
    pub fn new(k: u32, l: u32, h: u32, s: i64) -> Self {
        StraightPathState { k, l, h, s }
    }

    /// Endpoint part `(k, l, h)` without the winding count.
    pub fn endpoints(&self) -> (u32, u32, u32) {
        (self.k, self.l, self.h)
    }
}

impl LocalFibrationModel {
    /// Builds the model for `x^m y^n`, `m, n >= 1`.
    ///
    /// For `p, q >= 2` the Bezout pair is the unique one with
    /// `0 <= a <= q-1`, `0 <= b <= p-1`; the degenerate cases are pinned to
    /// `(a, b) = (1, 0)` for `p = 1` and `(1, p-1)` for `q = 1`.
    pub fn build(m: u32, n: u32) -> Self {
        assert!(m >= 1 && n >= 1, "exponents must be positive");
        let e = gcd_u32(m, n);
        let p = m / e;
        let q = n / e;
        let (a, b) = if p == 1 {
            (1, 0)
        } else if q == 1 {
            (1, p as i64 - 1)
        } else {
            // a = p^{-1} mod q, then b from a p - b q = 1.
            let a = mod_inverse(p as i64, q as i64);
            let b = (a * p as i64 - 1) / q as i64;
            (a, b)
        };
        debug_assert_eq!(a * p as i64 - b * q as i64, 1);
        LocalFibrationModel { m, n, e, p, q, a, b }
    }

    /// Rank `m + n` of the relative homology of a model fiber.
    pub fn relative_rank(&self) -> u32 {
        self.m + self.n
    }

    pub fn lcm(&self) -> u32 {
        lcm_u32(self.m, self.n)
    }

    pub fn state_valid(&self, st: &StraightPathState) -> bool {
        st.k < self.q && st.l < self.p && st.h < self.e
    }

    /// One anticlockwise monodromy step.
    ///
    /// Below the top sheet the endpoints ride to the next cylinder
    /// unchanged. Wrapping from `h = e-1` back to cylinder 0 shifts the
    /// marked indices by the Bezout pair; the winding update is
    /// `s - floor((k-a)/q) + floor((l-b)/p)`, whose total over a full
    /// `lcm(m, n)` cycle telescopes to `a p - b q = +1`, which is exactly
    /// the classical Picard-Lefschetz increment.
    pub fn monodromy_step(&self, st: &StraightPathState) -> StraightPathState {
        assert!(self.state_valid(st), "state out of range for model");
        if st.h + 1 < self.e {
            return StraightPathState::new(st.k, st.l, st.h + 1, st.s);
        }
        let q = self.q as i64;
        let p = self.p as i64;
        let dk = st.k as i64 - self.a;
        let dl = st.l as i64 - self.b;
        StraightPathState {
            k: dk.rem_euclid(q) as u32,
            l: dl.rem_euclid(p) as u32,
            h: 0,
            s: st.s - dk.div_euclid(q) + dl.div_euclid(p),
        }
    }

    /// `count`-fold composition of the monodromy step.
    pub fn iterate(&self, st: &StraightPathState, count: u32) -> StraightPathState {
        let mut cur = *st;
        for _ in 0..count {
            cur = self.monodromy_step(&cur);
        }
        cur
    }

    /// Winding numbers `(lcm/m, -lcm/n) = (n/e, -m/e)` of `x` and `y`
    /// along the cylinder loop, in full turns; from
    /// `omega = m dx/x = -n dy/y` with `int_delta omega = 2 pi i lcm(m,n)`.
    pub fn loop_log_weights(&self) -> (Rat, Rat) {
        (
            rat(self.n as i64 / self.e as i64, 1),
            rat(-(self.m as i64 / self.e as i64), 1),
        )
    }

    /// All valid states with `s = 0`, for exhaustive checks.
    pub fn all_endpoint_states(&self) -> alloc::vec::Vec<StraightPathState> {
        let mut out = alloc::vec::Vec::new();
        for k in 0..self.q {
            for l in 0..self.p {
                for h in 0..self.e {
                    out.push(StraightPathState::new(k, l, h, 0));
                }
            }
        }
        out
    }
}

/// Inverse of `x` modulo `m` for coprime inputs, in `0..m`.
fn mod_inverse(x: i64, m: i64) -> i64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m, x.rem_euclid(m));
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let m = LocalFibrationModel::build(1, 1);
        assert_eq!((m.e, m.p, m.q, m.a, m.b), (1, 1, 1, 1, 0));
        let m = LocalFibrationModel::build(6, 9);
        assert_eq!((m.e, m.p, m.q, m.a, m.b), (3, 2, 3, 2, 1));
        let m = LocalFibrationModel::build(2, 3);
        assert_eq!((m.e, m.p, m.q, m.a, m.b), (1, 2, 3, 2, 1));
    }

    #[test]
    fn bezout_invariants_exhaustive() {
        for m in 1..=64u32 {
            for n in 1..=64u32 {
                let model = LocalFibrationModel::build(m, n);
                assert_eq!(model.a * model.p as i64 - model.b * model.q as i64, 1);
                assert_eq!(
                    model.a * model.m as i64 - model.b * model.n as i64,
                    model.e as i64
                );
                if model.p >= 2 && model.q >= 2 {
                    assert!(0 <= model.a && model.a <= model.q as i64 - 1);
                    assert!(0 <= model.b && model.b <= model.p as i64 - 1);
                } else if model.p == 1 {
                    assert_eq!((model.a, model.b), (1, 0));
                } else {
                    assert_eq!((model.a, model.b), (1, model.p as i64 - 1));
                }
            }
        }
    }

    #[test]
    fn relative_rank_examples() {
        assert_eq!(LocalFibrationModel::build(1, 1).relative_rank(), 2);
        assert_eq!(LocalFibrationModel::build(6, 9).relative_rank(), 15);
        assert_eq!(LocalFibrationModel::build(1, 5).relative_rank(), 6);
    }

    #[test]
    fn single_steps() {
        let m69 = LocalFibrationModel::build(6, 9);
        // Below the top sheet: endpoints ride along, no winding change.
        let st = StraightPathState::new(1, 0, 0, 0);
        assert_eq!(m69.monodromy_step(&st), StraightPathState::new(1, 0, 1, 0));
        // Wrap step: k -> k-a mod q, l -> l-b mod p, winding telescopes.
        let st = StraightPathState::new(1, 0, 2, 0);
        assert_eq!(m69.monodromy_step(&st), StraightPathState::new(2, 1, 0, 0));

        let m11 = LocalFibrationModel::build(1, 1);
        let st = StraightPathState::new(0, 0, 0, 0);
        assert_eq!(m11.monodromy_step(&st), StraightPathState::new(0, 0, 0, 1));
    }

    #[test]
    fn iterate_examples() {
        let m11 = LocalFibrationModel::build(1, 1);
        let st = StraightPathState::new(0, 0, 0, 0);
        assert_eq!(m11.iterate(&st, 1).s, 1);

        let m23 = LocalFibrationModel::build(2, 3);
        for st in m23.all_endpoint_states() {
            let end = m23.iterate(&st, 6);
            assert_eq!(end.endpoints(), st.endpoints());
            assert_eq!(end.s, st.s + 1);
        }

        let m69 = LocalFibrationModel::build(6, 9);
        for st in m69.all_endpoint_states() {
            let end = m69.iterate(&st, 18);
            assert_eq!(end.endpoints(), st.endpoints());
            assert_eq!(end.s, st.s + 1);
        }
    }

    #[test]
    fn iterate_law_exhaustive_small() {
        for m in 1..=12u32 {
            for n in 1..=12u32 {
                let model = LocalFibrationModel::build(m, n);
                let steps = model.lcm();
                for st in model.all_endpoint_states() {
                    let end = model.iterate(&st, steps);
                    assert_eq!(end.endpoints(), st.endpoints(), "({m},{n})");
                    assert_eq!(end.s, st.s + 1, "({m},{n})");
                }
            }
        }
    }

    #[test]
    fn step_endpoint_map_is_bijective() {
        for (m, n) in [(1, 1), (2, 3), (6, 9), (4, 6), (5, 5), (12, 8)] {
            let model = LocalFibrationModel::build(m, n);
            let states = model.all_endpoint_states();
            let mut images: alloc::vec::Vec<(u32, u32, u32)> = states
                .iter()
                .map(|st| model.monodromy_step(st).endpoints())
                .collect();
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), states.len());
        }
    }

    #[test]
    fn loop_weights() {
        use num_traits::Zero;
        assert_eq!(
            LocalFibrationModel::build(1, 1).loop_log_weights(),
            (rat(1, 1), rat(-1, 1))
        );
        assert_eq!(
            LocalFibrationModel::build(6, 9).loop_log_weights(),
            (rat(3, 1), rat(-2, 1))
        );
        assert_eq!(
            LocalFibrationModel::build(2, 3).loop_log_weights(),
            (rat(3, 1), rat(-2, 1))
        );
        // m w_x + n w_y = 0 since omega = m dx/x = -n dy/y.
        for m in 1..=20u32 {
            for n in 1..=20u32 {
                let model = LocalFibrationModel::build(m, n);
                let (wx, wy) = model.loop_log_weights();
                assert!((rat(m as i64, 1) * wx + rat(n as i64, 1) * wy).is_zero());
            }
        }
    }
}
