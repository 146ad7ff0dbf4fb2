//! A battery of exact identity checks over all small partitions, used by
//! `jackpoly verify suite`.

use num::Zero;
use serde::Serialize;

use crate::binomial::verify_binomial;
use crate::error::Result;
use crate::integral::{verify_discrete_identity, verify_integral, QuadratureSpec};
use crate::jack::{
    jack_by_branching, jack_combinatorial, jack_principal, sekiguchi_apply, sekiguchi_eigenvalue, JackParams,
};
use crate::partitions::{hook_h, partitions_of_size_at_most, Partition};
use crate::rational::{int, ratio, Rational};
use crate::shifted::{check_shifted_symmetry, shifted_jack, top_term, ShiftedEvaluator};
use crate::thetadim::{thetadim_by_expansion, thetadim_skew, PieriCache};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckSummary {
    fn new(name: &'static str) -> Self {
        CheckSummary { name, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: Result<bool>, case: impl FnOnce() -> String) {
        self.cases += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(case()),
            Err(e) => self.failures.push(format!("{}: {e}", case())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_N: usize = 3;

fn thetas() -> [Rational; 3] {
    [ratio(1, 2), int(1), int(2)]
}

fn small(max_size: usize, max_len: usize) -> impl Iterator<Item = Partition> {
    partitions_of_size_at_most(max_size, max_len)
}

/// Runs every check on partitions of size at most `max_size` with up to three
/// variables. Results come back in a fixed order.
pub fn run_suite(max_size: usize) -> Vec<CheckSummary> {
    let mut eigen = CheckSummary::new("sekiguchi eigenvalue");
    let mut principal = CheckSummary::new("principal specialization");
    let mut cross = CheckSummary::new("tableau sum = branching");
    let mut binomial = CheckSummary::new("binomial formula");
    let mut interpolation = CheckSummary::new("interpolation and vanishing");
    let mut top = CheckSummary::new("top term");
    let mut symmetry = CheckSummary::new("shifted symmetry");
    let mut dims = CheckSummary::new("theta-dimension routes");
    let mut discrete = CheckSummary::new("discrete integral identity");
    let mut integral = CheckSummary::new("integral representation");

    for theta in thetas() {
        for n in 1..=MAX_N {
            let params = JackParams::new(n, theta.clone()).expect("valid parameters");
            let ones = vec![int(1); n];
            for mu in small(max_size, n) {
                let p = jack_combinatorial(&mu, &params);
                let case = || format!("mu={mu} n={n} theta={theta}");
                for u in [int(0), int(1), -theta.clone()] {
                    let lhs = sekiguchi_apply(&p, &u, &theta);
                    let rhs = p.scale(&sekiguchi_eigenvalue(&mu, n, &u, &theta));
                    eigen.record(lhs.map(|l| l == rhs), || format!("{} u={u}", case()));
                }
                principal.record(p.evaluate(&ones).map(|v| v == jack_principal(&mu, &params)), case);
                cross.record(Ok(jack_by_branching(&mu, &params) == p), case);
                let sp = shifted_jack(&mu, &params);
                top.record(Ok(top_term(&sp) == p), case);
                symmetry.record(Ok(check_shifted_symmetry(&sp)), case);
                binomial.record(verify_binomial(&mu, &params).map(|r| r.equal), case);

                let ev = ShiftedEvaluator::new(&mu, &params);
                for lam in small(max_size, n) {
                    let expected = if lam == mu {
                        Some(hook_h(&mu, &theta))
                    } else if lam.size() <= mu.size() || !lam.contains(&mu) {
                        Some(Rational::zero())
                    } else {
                        None
                    };
                    if let Some(expected) = expected {
                        interpolation
                            .record(ev.eval(&lam).map(|v| v == expected), || format!("{} lambda={lam}", case()));
                    }
                    if mu.length() < n {
                        discrete.record(verify_discrete_identity(&mu, &lam, &params), || {
                            format!("{} lambda={lam}", case())
                        });
                    }
                }
            }

            // θ-dimensions with n = length(λ) up to MAX_N.
            let mut pieri = PieriCache::new(params.clone());
            for lam in small(max_size, n).filter(|l| l.length() == n) {
                for mu in small(lam.size(), n).filter(|m| lam.contains(m)) {
                    let mut check = || -> Result<bool> {
                        let a = thetadim_by_expansion(&lam, &mu, &params)?;
                        let b = thetadim_skew(&lam, &mu, &params)?;
                        let c = pieri.skew(&lam, &mu)?;
                        Ok(a == b && b == c)
                    };
                    dims.record(check(), || format!("lambda={lam} mu={mu} theta={theta}"));
                }
            }
        }
    }

    for theta in [int(1), int(2)] {
        for lambda in [vec![3.0, 1.0], vec![4.0, 2.0, 0.0]] {
            let n = lambda.len();
            for mu in small(max_size.min(3), n - 1) {
                let spec = QuadratureSpec::legendre(12);
                let check = verify_integral(&mu, &lambda, &theta, &spec).map(|c| c.rel_err < 1e-9);
                integral.record(check, || format!("mu={mu} lambda={lambda:?} theta={theta}"));
            }
        }
    }

    vec![eigen, principal, cross, binomial, interpolation, top, symmetry, dims, discrete, integral]
}
