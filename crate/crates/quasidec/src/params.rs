//! Parameter bundles governing hypothesis checks and retry budgets.

use crate::error::{Error, Result};
use crate::graph::DegreeProfile;

/// The `(p, eps, eta, alpha, nu, tau)` bundle plus the retry budget for
/// randomized steps.
///
/// The asymptotic hierarchy gives no concrete numbers, so the default
/// profile is an engineering choice that experiments report alongside their
/// results: `eps = eta = 0.1`, `alpha = p/2`, `nu = eps`, `tau = 0.2`,
/// `retry_budget = 100`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasirandomParams {
    /// Density parameter in (0,1).
    pub p: f64,
    /// Regularity slack.
    pub eps: f64,
    /// Degree-spread bound: the regime asks `max_degree - min_degree <= eta * n`.
    pub eta: f64,
    /// Minimum-degree fraction: regime asks `min_degree >= alpha * n`.
    pub alpha: f64,
    /// Robust-expansion parameters.
    pub nu: f64,
    pub tau: f64,
    /// Bound on restarts of randomized constructions.
    pub retry_budget: usize,
}

impl QuasirandomParams {
    /// Default experiment profile for a given density.
    pub fn default_profile(p: f64) -> Result<Self> {
        QuasirandomParams {
            p,
            eps: 0.1,
            eta: 0.1,
            alpha: p / 2.0,
            nu: 0.1,
            tau: 0.2,
            retry_budget: 100,
        }
        .validated()
    }

    /// Like [`default_profile`](Self::default_profile), but with `eta`
    /// enlarged so the given graph's degree spread passes the hypothesis
    /// check. Desk-scale G(n,p) has spread well above `0.1 n`; the sweep
    /// harness reports the effective profile it used.
    pub fn profile_for_graph(p: f64, n: usize, profile: &DegreeProfile) -> Result<Self> {
        let mut params = QuasirandomParams {
            p,
            eps: 0.1,
            eta: 0.1,
            alpha: p / 2.0,
            nu: 0.1,
            tau: 0.2,
            retry_budget: 100,
        };
        if n > 0 {
            let needed = (profile.spread() as f64 + 1.0) / n as f64;
            if needed > params.eta {
                params.eta = needed;
            }
        }
        params.validated_relaxed()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.eps > 0.0 && self.eps <= self.eta && self.eta < self.p && self.p < 1.0) {
            return Err(Error::Usage(format!(
                "need 0 < eps <= eta < p < 1, got eps={} eta={} p={}",
                self.eps, self.eta, self.p
            )));
        }
        self.validated_relaxed()
    }

    // Spread-adjusted profiles may have eta >= p; the remaining invariants
    // still hold.
    fn validated_relaxed(self) -> Result<Self> {
        if !(self.p > 0.0 && self.p < 1.0) {
            return Err(Error::Usage(format!("need 0 < p < 1, got {}", self.p)));
        }
        if !(self.eps > 0.0 && self.eps <= self.eta) {
            return Err(Error::Usage(format!(
                "need 0 < eps <= eta, got eps={} eta={}",
                self.eps, self.eta
            )));
        }
        if !(self.nu > 0.0 && self.nu <= self.tau && self.tau < 1.0) {
            return Err(Error::Usage(format!(
                "need 0 < nu <= tau < 1, got nu={} tau={}",
                self.nu, self.tau
            )));
        }
        if self.retry_budget < 1 {
            return Err(Error::Usage("retry_budget must be >= 1".into()));
        }
        Ok(self)
    }
}

/// Parameters of the degree-prescribed orientation step.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationConfig {
    /// Imbalance tolerance.
    pub gamma: f64,
    /// Target degree fraction for the flow prescription. `None` picks the
    /// smallest feasible value from the observed imbalances, which is the
    /// only workable choice at desk scale.
    pub xi: Option<f64>,
    pub retry_budget: usize,
}

impl Default for OrientationConfig {
    fn default() -> Self {
        OrientationConfig {
            gamma: 0.1,
            xi: None,
            retry_budget: 100,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_profile_validates() {
        let p = QuasirandomParams::default_profile(0.5).unwrap();
        assert!(p.eps <= p.eta && p.eta < p.p);
        assert_eq!(p.alpha, 0.25);
    }

    #[test]
    fn default_profile_rejects_small_p() {
        assert!(QuasirandomParams::default_profile(0.05).is_err());
    }

    #[test]
    fn graph_profile_relaxes_eta() {
        let prof = DegreeProfile {
            max_degree: 14,
            min_degree: 4,
            odd_count: 0,
            odd_set: vec![],
            max_vertices: vec![0],
        };
        let p = QuasirandomParams::profile_for_graph(0.3, 30, &prof).unwrap();
        assert!(p.eta * 30.0 >= 10.0);
    }
}
