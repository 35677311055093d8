//! The named verification suites, one per result of the calculus, plus
//! report serialization.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    pair_cartesian, pair_signum, rising_from_m, verify_identity, OracleError, VerifyConfig,
};
use crate::kernel::{
    prop35_coefficient, prop35_compose, radial_basis, Distribution, GeneralizedFunction,
    Prop35Family, RadialLabel, SignumDistribution,
};
use crate::poly::{random_poly, spherical_mean0, spherical_mean1};
use crate::symq::{linear_product, odd_rising_coeff, rat_int, DimScalar};

/// The eleven named suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Prop31,
    Prop32,
    Cor33,
    Cor34,
    IdentitiesX,
    Prop35,
    ExamplesSec7,
    PropertiesSec8,
    RemarkCompositions,
    Homogeneity,
    PhysicsSec5,
}

impl SuiteName {
    pub const ALL: [SuiteName; 11] = [
        SuiteName::Prop31,
        SuiteName::Prop32,
        SuiteName::Cor33,
        SuiteName::Cor34,
        SuiteName::IdentitiesX,
        SuiteName::Prop35,
        SuiteName::ExamplesSec7,
        SuiteName::PropertiesSec8,
        SuiteName::RemarkCompositions,
        SuiteName::Homogeneity,
        SuiteName::PhysicsSec5,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SuiteName::Prop31 => "prop31",
            SuiteName::Prop32 => "prop32",
            SuiteName::Cor33 => "cor33",
            SuiteName::Cor34 => "cor34",
            SuiteName::IdentitiesX => "identities_x",
            SuiteName::Prop35 => "prop35",
            SuiteName::ExamplesSec7 => "examples_sec7",
            SuiteName::PropertiesSec8 => "properties_sec8",
            SuiteName::RemarkCompositions => "remark_compositions",
            SuiteName::Homogeneity => "homogeneity",
            SuiteName::PhysicsSec5 => "physics_sec5",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl FromStr for SuiteName {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.token() == s)
            .ok_or_else(|| OracleError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    pub id: String,
    pub status: SuiteStatus,
    pub lhs: String,
    pub rhs: String,
    pub dims: Vec<u32>,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == SuiteStatus::Pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("## suite `{}`\n\n", self.suite));
        out.push_str("| id | status | lhs | rhs |\n|---|---|---|---|\n");
        for e in &self.entries {
            let status = match e.status {
                SuiteStatus::Pass => "pass",
                SuiteStatus::Fail => "fail",
            };
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                e.id, status, e.lhs, e.rhs
            ));
        }
        out
    }
}

/// Suite execution bounds; `verify` carries the randomized-trial settings.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub kmax: usize,
    pub lmax: usize,
    pub verify: VerifyConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            kmax: 4,
            lmax: 4,
            verify: VerifyConfig::default(),
        }
    }
}

struct SuiteBuilder<'a> {
    cfg: &'a SuiteConfig,
    entries: Vec<SuiteEntry>,
    error: Option<OracleError>,
}

impl<'a> SuiteBuilder<'a> {
    fn new(cfg: &'a SuiteConfig) -> Self {
        SuiteBuilder {
            cfg,
            entries: Vec::new(),
            error: None,
        }
    }

    /// Symbolic + pairing identity check via `verify_identity`.
    fn identity(&mut self, id: String, lhs: &GeneralizedFunction, rhs: &GeneralizedFunction) {
        if self.error.is_some() {
            return;
        }
        match verify_identity(lhs, rhs, &self.cfg.verify) {
            Ok(outcome) => self.entries.push(SuiteEntry {
                id,
                status: if outcome.pass {
                    SuiteStatus::Pass
                } else {
                    SuiteStatus::Fail
                },
                lhs: outcome.lhs,
                rhs: outcome.rhs,
                dims: self.cfg.verify.dims.clone(),
                seed: self.cfg.verify.seed,
            }),
            Err(e) => self.error = Some(e),
        }
    }

    /// Custom check with pre-rendered sides.
    fn check(&mut self, id: String, pass: bool, lhs: String, rhs: String) {
        self.entries.push(SuiteEntry {
            id,
            status: if pass {
                SuiteStatus::Pass
            } else {
                SuiteStatus::Fail
            },
            lhs,
            rhs,
            dims: self.cfg.verify.dims.clone(),
            seed: self.cfg.verify.seed,
        });
    }

    /// Pairing-level equality of two closures over random trials; sides are
    /// reported as the given formula strings, with values appended on
    /// failure.
    fn pairing_check<F, G>(&mut self, id: String, lhs_desc: &str, rhs_desc: &str, lhs: F, rhs: G)
    where
        F: Fn(u32, &crate::poly::MultiPoly) -> Result<crate::poly::PairingValue, OracleError>,
        G: Fn(u32, &crate::poly::MultiPoly) -> Result<crate::poly::PairingValue, OracleError>,
    {
        if self.error.is_some() {
            return;
        }
        let v = &self.cfg.verify;
        for &m in &v.dims {
            for trial in 0..v.trials {
                let phi = random_poly(m as usize, v.max_degree, v.trial_seed(m, trial));
                let (lv, rv) = match (lhs(m, &phi), rhs(m, &phi)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => {
                        self.error = Some(e);
                        return;
                    }
                };
                if !lv.agrees(&rv) {
                    self.check(
                        id,
                        false,
                        format!("{lhs_desc} -> {lv} (m={m}, trial={trial})"),
                        format!("{rhs_desc} -> {rv} (m={m}, trial={trial})"),
                    );
                    return;
                }
            }
        }
        self.check(id, true, lhs_desc.to_string(), rhs_desc.to_string());
    }

    fn finish(mut self, name: SuiteName) -> Result<SuiteReport, OracleError> {
        if let Some(e) = self.error {
            return Err(e);
        }
        self.entries.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(SuiteReport {
            suite: name.token().to_string(),
            entries: self.entries,
        })
    }
}

/// Runs one named suite under the given configuration.
pub fn run_suite(name: SuiteName, cfg: &SuiteConfig) -> Result<SuiteReport, OracleError> {
    let mut b = SuiteBuilder::new(cfg);
    match name {
        SuiteName::Prop31 => suite_prop31(&mut b),
        SuiteName::Prop32 => suite_prop32(&mut b),
        SuiteName::Cor33 => suite_cor33(&mut b),
        SuiteName::Cor34 => suite_cor34(&mut b),
        SuiteName::IdentitiesX => suite_identities_x(&mut b),
        SuiteName::Prop35 => suite_prop35(&mut b),
        SuiteName::ExamplesSec7 => suite_examples_sec7(&mut b),
        SuiteName::PropertiesSec8 => suite_properties_sec8(&mut b),
        SuiteName::RemarkCompositions => suite_remark_compositions(&mut b),
        SuiteName::Homogeneity => suite_homogeneity(&mut b),
        SuiteName::PhysicsSec5 => suite_physics_sec5(&mut b),
    }
    b.finish(name)
}

/// Accepts the textual suite name used by the CLI.
pub fn run_suite_by_name(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, OracleError> {
    run_suite(SuiteName::from_str(name)?, cfg)
}

fn gf(d: Distribution) -> GeneralizedFunction {
    d.into()
}

fn delta() -> Distribution {
    Distribution::delta()
}

fn m_plus(c: i64) -> DimScalar {
    DimScalar::m_plus(c)
}

fn int(c: i64) -> DimScalar {
    DimScalar::from_int(c)
}

// dr^2 delta = (m+1)/2 Lap delta ; (1/r dr) delta = -1/2 Lap delta ;
// their (m-1)-weighted sum reassembles the Laplacian.
fn suite_prop31(b: &mut SuiteBuilder) {
    let lap = delta().apply_laplace();
    b.identity(
        "dr2_delta".into(),
        &gf(delta().apply_dr2()),
        &gf(lap.scale(&(m_plus(1) / int(2)))),
    );
    b.identity(
        "inv_r_dr_delta".into(),
        &gf(delta().apply_inv_r_dr().expect("even index")),
        &gf(lap.scale(&-(DimScalar::one() / int(2)))),
    );
    let recomposed = &delta().apply_dr2()
        + &delta()
            .apply_inv_r_dr()
            .expect("even index")
            .scale(&(m_plus(0) - DimScalar::one()));
    b.identity("laplace_decomposition".into(), &gf(recomposed), &gf(lap));
}

// (omega dr) delta = D delta, and its square gives back -dr^2.
fn suite_prop32(b: &mut SuiteBuilder) {
    b.identity(
        "omega_dr_delta".into(),
        &gf(delta().apply_omega_dr()),
        &gf(delta().apply_dirac()),
    );
    b.identity(
        "omega_dr_squared".into(),
        &gf(delta().apply_omega_dr().apply_omega_dr()),
        &gf(-delta().apply_dr2()),
    );
}

fn suite_cor33(b: &mut SuiteBuilder) {
    let kmax = b.cfg.kmax;
    for k in 0..=kmax {
        // (omega dr)^{2k} delta = A_k D^{2k} delta = (-1)^k dr^{2k} delta
        let mut even_pow = delta();
        for _ in 0..2 * k {
            even_pow = even_pow.apply_omega_dr();
        }
        b.identity(
            format!("pow_even_k{k:02}"),
            &gf(even_pow.clone()),
            &gf(Distribution::term(2 * k, odd_rising_coeff(k))),
        );
        let sign = int(if k % 2 == 0 { 1 } else { -1 });
        b.identity(
            format!("pow_even_radial_k{k:02}"),
            &gf(even_pow.clone()),
            &radial_basis(RadialLabel::D, k).scale(&sign),
        );
        // (omega dr)^{2k+1} delta = A_k D^{2k+1} delta = (-1)^k (omega dr^{2k+1}) delta
        let odd_pow = even_pow.apply_omega_dr();
        b.identity(
            format!("pow_odd_k{k:02}"),
            &gf(odd_pow.clone()),
            &gf(Distribution::term(2 * k + 1, odd_rising_coeff(k))),
        );
        b.identity(
            format!("pow_odd_radial_k{k:02}"),
            &gf(odd_pow),
            &radial_basis(RadialLabel::V, k).scale(&sign),
        );
        // the one-step rules on the canonical basis
        b.identity(
            format!("step_even_k{k:02}"),
            &gf(Distribution::basis(2 * k).apply_omega_dr()),
            &gf(Distribution::basis(2 * k + 1)),
        );
        let ratio = m_plus(2 * k as i64 + 1) / int(2 * (k as i64 + 1));
        b.identity(
            format!("step_odd_k{k:02}"),
            &gf(Distribution::basis(2 * k + 1).apply_omega_dr()),
            &gf(Distribution::term(2 * k + 2, ratio)),
        );
    }
}

fn suite_cor34(b: &mut SuiteBuilder) {
    let kmax = b.cfg.kmax.max(6);
    let mut iterated = delta();
    for k in 0..=kmax {
        // (1/r dr)^k delta = 1/(2^k k!) D^{2k} delta
        let mut denom: i64 = 1;
        for i in 1..=k as i64 {
            denom *= 2 * i;
        }
        b.identity(
            format!("iterate_k{k:02}"),
            &gf(iterated.clone()),
            &gf(Distribution::term(2 * k, DimScalar::from_frac(1, denom))),
        );
        iterated = iterated.apply_inv_r_dr().expect("even index");
    }
}

/// Literal product `(2k)(2k-2)...` over `count` factors starting at `2k`.
fn even_falling(k: usize, count: usize) -> DimScalar {
    let mut acc = int(1);
    for i in 0..count as i64 {
        acc = acc * int(2 * k as i64 - 2 * i);
    }
    acc
}

/// Literal product `(m+2k-2s)(m+2k-2s-2)...` over `count` factors.
fn m_even_falling(k: usize, start: usize, count: usize) -> DimScalar {
    let mut acc = DimScalar::one();
    for i in 0..count as i64 {
        acc = acc * m_plus(2 * k as i64 - 2 * start as i64 - 2 * i);
    }
    acc
}

// x-multiplication identities (i)-(iv): closed forms against iterated mul_x.
fn suite_identities_x(b: &mut SuiteBuilder) {
    for k in 0..=b.cfg.kmax {
        for l in 0..=b.cfg.lmax.min(k) {
            // (i)  x^{2l} D^{2k} delta
            let closed = even_falling(k, l) * m_even_falling(k, 1, l);
            let target = 2 * (k - l);
            b.identity(
                format!("i_k{k:02}_l{l:02}"),
                &gf(Distribution::basis(2 * k).mul_x_pow(2 * l as u32)),
                &gf(Distribution::term(target, closed)),
            );
            // (ii) x^{2l+1} D^{2k} delta
            let closed = even_falling(k, l + 1) * m_even_falling(k, 1, l);
            let rhs = if k == l {
                Distribution::zero()
            } else {
                Distribution::term(2 * (k - l) - 1, closed)
            };
            b.identity(
                format!("ii_k{k:02}_l{l:02}"),
                &gf(Distribution::basis(2 * k).mul_x_pow(2 * l as u32 + 1)),
                &gf(rhs),
            );
            // (iii) x^{2l} D^{2k+1} delta
            let closed = even_falling(k, l) * m_even_falling(k, 0, l);
            b.identity(
                format!("iii_k{k:02}_l{l:02}"),
                &gf(Distribution::basis(2 * k + 1).mul_x_pow(2 * l as u32)),
                &gf(Distribution::term(2 * (k - l) + 1, closed)),
            );
            // (iv) x^{2l+1} D^{2k+1} delta
            let closed = even_falling(k, l) * m_even_falling(k, 0, l + 1);
            b.identity(
                format!("iv_k{k:02}_l{l:02}"),
                &gf(Distribution::basis(2 * k + 1).mul_x_pow(2 * l as u32 + 1)),
                &gf(Distribution::term(2 * (k - l), closed)),
            );
        }
    }
}

fn suite_prop35(b: &mut SuiteBuilder) {
    for family in Prop35Family::ALL {
        for k in 0..=b.cfg.kmax {
            for l in 0..=b.cfg.lmax.min(k) {
                let (coeff, target) =
                    prop35_coefficient(family, k, l).expect("k >= l enforced by loop");
                let literal = gf(Distribution::term(target, coeff));
                let composed = prop35_compose(family, k, l).expect("k >= l enforced by loop");
                b.identity(format!("{family}_k{k:02}_l{l:02}"), &composed, &literal);
            }
        }
    }
}

// The worked examples of the signumdistribution section.
fn suite_examples_sec7(b: &mut SuiteBuilder) {
    let sign_zero = GeneralizedFunction::Sign(SignumDistribution::zero());
    let w_delta = GeneralizedFunction::delta().act_omega();
    let dr_delta = GeneralizedFunction::delta().act_dr();

    // r delta = 0
    b.identity("r_delta".into(), &GeneralizedFunction::delta().act_r(), &sign_zero);
    // r D delta = -m omega delta
    b.identity(
        "r_dirac_delta".into(),
        &gf(delta().apply_dirac()).act_r(),
        &w_delta.scale(&-m_plus(0)),
    );
    // r Lap delta = -2 dr delta
    b.identity(
        "r_laplace_delta".into(),
        &gf(delta().apply_laplace()).act_r(),
        &dr_delta.scale(&int(-2)),
    );
    // r dr^2 delta = -(m+1) dr delta
    b.identity(
        "r_dr2_delta".into(),
        &gf(delta().apply_dr2()).act_r(),
        &dr_delta.scale(&-m_plus(1)),
    );
    // r (1/r dr) delta = dr delta
    b.identity(
        "r_inv_r_dr_delta".into(),
        &gf(delta().apply_inv_r_dr().expect("even")).act_r(),
        &dr_delta,
    );
    // omega (omega dr) delta = -dr delta
    b.identity(
        "omega_omega_dr_delta".into(),
        &gf(delta().apply_omega_dr()).act_omega(),
        &dr_delta.neg(),
    );
    // (1/x) delta = (1/m) D delta
    b.identity(
        "div_x_delta".into(),
        &gf(delta().div_x()),
        &gf(Distribution::term(1, DimScalar::one() / m_plus(0))),
    );
    // (1/r) delta = -(1/m) dr delta
    b.identity(
        "div_r_delta".into(),
        &GeneralizedFunction::Sign(delta().div_r(1).expect("power 1")),
        &dr_delta.scale(&-(DimScalar::one() / m_plus(0))),
    );
    for k in 0..=b.cfg.kmax {
        // (1/x) D^{2k} delta = 1/(m+2k) D^{2k+1} delta
        b.identity(
            format!("div_x_even_k{k:02}"),
            &gf(Distribution::basis(2 * k).div_x()),
            &gf(Distribution::term(
                2 * k + 1,
                DimScalar::one() / m_plus(2 * k as i64),
            )),
        );
        // (1/x) D^{2k+1} delta = 1/(2k+2) D^{2k+2} delta
        b.identity(
            format!("div_x_odd_k{k:02}"),
            &gf(Distribution::basis(2 * k + 1).div_x()),
            &gf(Distribution::term(
                2 * k + 2,
                DimScalar::from_frac(1, 2 * k as i64 + 2),
            )),
        );
        // x (1/x) and r(1/r) inverses
        b.identity(
            format!("x_div_x_k{k:02}"),
            &gf(Distribution::basis(k).div_x().mul_x()),
            &gf(Distribution::basis(k)),
        );
        b.identity(
            format!("r_div_r_k{k:02}"),
            &GeneralizedFunction::Sign(Distribution::basis(k).div_r(1).expect("power 1")).act_r(),
            &gf(Distribution::basis(k)),
        );
        // (1/r) dr^{2k} delta = -1/(m+2k) dr^{2k+1} delta
        let d2k = radial_basis(RadialLabel::D, k).as_dist().expect("dist").clone();
        b.identity(
            format!("div_r_even_k{k:02}"),
            &GeneralizedFunction::Sign(d2k.div_r(1).expect("power 1")),
            &radial_basis(RadialLabel::Sd, k)
                .scale(&-(DimScalar::one() / m_plus(2 * k as i64))),
        );
        // (1/r)(omega dr^{2k+1}) delta = -1/(m+2k+1) (omega dr^{2k+2}) delta
        let v2k1 = radial_basis(RadialLabel::V, k).as_dist().expect("dist").clone();
        b.identity(
            format!("div_r_odd_k{k:02}"),
            &GeneralizedFunction::Sign(v2k1.div_r(1).expect("power 1")),
            &radial_basis(RadialLabel::Sv, k + 1)
                .scale(&-(DimScalar::one() / m_plus(2 * k as i64 + 1))),
        );
        // (1/r^{2k+1}) delta = -(m-1)!/(m+2k)! dr^{2k+1} delta
        let falling = linear_product(0..=2 * k as i64);
        b.identity(
            format!("div_r_pow_k{k:02}"),
            &GeneralizedFunction::Sign(delta().div_r(2 * k as u32 + 1).expect("odd power")),
            &radial_basis(RadialLabel::Sd, k).scale(&-(DimScalar::one() / falling)),
        );
    }
}

// Properties 1-2 and Definitions (def11)-(def22): transition rules on the
// two parallel sequences, plus the defining pairings that anchor the
// signum-basis normalization.
fn suite_properties_sec8(b: &mut SuiteBuilder) {
    for k in 0..=b.cfg.kmax {
        let d2k = radial_basis(RadialLabel::D, k);
        let v2k1 = radial_basis(RadialLabel::V, k);
        let sd2k1 = radial_basis(RadialLabel::Sd, k);
        let sv2k = radial_basis(RadialLabel::Sv, k);

        // Property 1: r and dr on the distribution sequence
        b.identity(
            format!("p1_r_v_k{k:02}"),
            &v2k1.act_r(),
            &radial_basis(RadialLabel::Sv, k).scale(&-m_plus(2 * k as i64)),
        );
        if k >= 1 {
            b.identity(
                format!("p1_r_d_k{k:02}"),
                &d2k.act_r(),
                &radial_basis(RadialLabel::Sd, k - 1).scale(&-m_plus(2 * k as i64 - 1)),
            );
        } else {
            b.identity(
                format!("p1_r_d_k{k:02}"),
                &d2k.act_r(),
                &GeneralizedFunction::Sign(SignumDistribution::zero()),
            );
        }
        b.identity(
            format!("p1_dr_v_k{k:02}"),
            &v2k1.act_dr(),
            &radial_basis(RadialLabel::Sv, k + 1),
        );
        b.identity(
            format!("p1_dr_d_k{k:02}"),
            &d2k.act_dr(),
            &radial_basis(RadialLabel::Sd, k),
        );

        // Property 2: r and dr on the signum sequence
        b.identity(
            format!("p2_r_sd_k{k:02}"),
            &sd2k1.act_r(),
            &radial_basis(RadialLabel::D, k).scale(&-m_plus(2 * k as i64)),
        );
        if k >= 1 {
            b.identity(
                format!("p2_r_sv_k{k:02}"),
                &sv2k.act_r(),
                &radial_basis(RadialLabel::V, k - 1).scale(&-m_plus(2 * k as i64 - 1)),
            );
        } else {
            // r (omega delta) = 0: the k = 0 gap, fixed by rotation invariance
            b.identity(
                format!("p2_r_sv_k{k:02}"),
                &sv2k.act_r(),
                &gf(Distribution::zero()),
            );
        }
        b.identity(
            format!("p2_dr_sd_k{k:02}"),
            &sd2k1.act_dr(),
            &radial_basis(RadialLabel::D, k + 1),
        );
        b.identity(
            format!("p2_dr_sv_k{k:02}"),
            &sv2k.act_dr(),
            &radial_basis(RadialLabel::V, k),
        );

        // Definitions: the omega transitions in all four directions
        b.identity(format!("def11_k{k:02}"), &d2k.act_omega(), &sv2k);
        b.identity(format!("def12_k{k:02}"), &v2k1.act_omega(), &sd2k1.neg());
        b.identity(format!("def21_k{k:02}"), &sv2k.act_omega(), &d2k.neg());
        b.identity(format!("def22_k{k:02}"), &sd2k1.act_omega(), &v2k1);
    }

    // Defining pairings: for every distribution basis element T,
    //   <omega T, omega phi> = -<T, phi>
    //   <dr T, omega phi>    = <(omega dr) T, phi>
    //   <r T, omega phi>     = <x T, phi>
    // and for every signum basis element U, <omega U, phi> = <U, omega phi>.
    for n in 0..=2 * b.cfg.kmax + 1 {
        let t = Distribution::basis(n);
        let wt = gf(t.clone()).act_omega().as_sign().expect("sign").clone();
        b.pairing_check(
            format!("pairing_omega_dist_n{n:02}"),
            &format!("<omega D^{n} delta, omega phi>"),
            &format!("-<D^{n} delta, phi>"),
            {
                let wt = wt.clone();
                move |m, phi| pair_signum(&wt, phi, m)
            },
            {
                let t = t.clone();
                move |m, phi| Ok(pair_cartesian(&t, phi, m)?.neg())
            },
        );
        let drt = gf(t.clone()).act_dr().as_sign().expect("sign").clone();
        let wdrt = t.apply_omega_dr();
        b.pairing_check(
            format!("pairing_dr_dist_n{n:02}"),
            &format!("<dr D^{n} delta, omega phi>"),
            &format!("<(omega dr) D^{n} delta, phi>"),
            move |m, phi| pair_signum(&drt, phi, m),
            move |m, phi| pair_cartesian(&wdrt, phi, m),
        );
        let t = Distribution::basis(n);
        let rt = gf(t.clone()).act_r().as_sign().expect("sign").clone();
        let xt = t.mul_x();
        b.pairing_check(
            format!("pairing_r_dist_n{n:02}"),
            &format!("<r D^{n} delta, omega phi>"),
            &format!("<x D^{n} delta, phi>"),
            move |m, phi| pair_signum(&rt, phi, m),
            move |m, phi| pair_cartesian(&xt, phi, m),
        );
        let u = SignumDistribution::basis(n);
        let wu = GeneralizedFunction::Sign(u.clone())
            .act_omega()
            .as_dist()
            .expect("dist")
            .clone();
        b.pairing_check(
            format!("pairing_omega_sign_n{n:02}"),
            &format!("<omega s[{n}], phi>"),
            &format!("<s[{n}], omega phi>"),
            move |m, phi| pair_cartesian(&wu, phi, m),
            move |m, phi| pair_signum(&u, phi, m),
        );
    }
}

// Two-step routes through the signum space against the classical
// one-step operators, for every basis element.
fn suite_remark_compositions(b: &mut SuiteBuilder) {
    let nmax = (2 * b.cfg.kmax + 1).max(9);
    for n in 0..=nmax {
        let t = Distribution::basis(n);
        let g = gf(t.clone());
        // (i) r r = r^2 = -x^2
        b.identity(
            format!("i_r2_n{n:02}"),
            &g.act_r().act_r(),
            &gf(-t.mul_x_pow(2)),
        );
        // (ii) r dr = Euler
        b.identity(
            format!("ii_euler_n{n:02}"),
            &g.act_dr().act_r(),
            &gf(t.apply_euler()),
        );
        // (ii') dr r = Euler + 1 away from delta; r delta = 0 at n = 0
        let expect = if n == 0 {
            Distribution::zero()
        } else {
            &t.apply_euler() + &t
        };
        b.identity(format!("ii_dr_r_n{n:02}"), &g.act_r().act_dr(), &gf(expect));
        // (iii) r omega = omega r = x-multiplication
        b.identity(
            format!("iii_r_omega_n{n:02}"),
            &g.act_omega().act_r(),
            &gf(t.mul_x()),
        );
        b.identity(
            format!("iii_omega_r_n{n:02}"),
            &g.act_r().act_omega(),
            &gf(t.mul_x()),
        );
        // (iv) dr dr = dr^2
        b.identity(
            format!("iv_dr2_n{n:02}"),
            &g.act_dr().act_dr(),
            &gf(t.apply_dr2()),
        );
        // (v) omega dr two-step = classical omega dr
        b.identity(
            format!("v_omega_dr_n{n:02}"),
            &g.act_dr().act_omega(),
            &gf(t.apply_omega_dr()),
        );
        // (vi) omega omega = -1, on both spaces
        b.identity(format!("vi_omega2_dist_n{n:02}"), &g.act_omega().act_omega(), &g.neg());
        let s = GeneralizedFunction::Sign(SignumDistribution::basis(n));
        b.identity(format!("vi_omega2_sign_n{n:02}"), &s.act_omega().act_omega(), &s.neg());
    }
}

// Euler eigenvalues and the degree bookkeeping of the transition maps.
fn suite_homogeneity(b: &mut SuiteBuilder) {
    let nmax = 2 * b.cfg.kmax + 1;
    for n in 0..=nmax {
        let t = Distribution::basis(n);
        b.identity(
            format!("euler_basis_n{n:02}"),
            &gf(t.apply_euler()),
            &gf(Distribution::term(n, -m_plus(n as i64))),
        );
    }
    for k in 0..=b.cfg.kmax {
        let d2k = radial_basis(RadialLabel::D, k).as_dist().expect("dist").clone();
        b.identity(
            format!("euler_radial_d_k{k:02}"),
            &gf(d2k.apply_euler()),
            &gf(d2k.scale(&-m_plus(2 * k as i64))),
        );
        let v2k1 = radial_basis(RadialLabel::V, k).as_dist().expect("dist").clone();
        b.identity(
            format!("euler_radial_v_k{k:02}"),
            &gf(v2k1.apply_euler()),
            &gf(v2k1.scale(&-m_plus(2 * k as i64 + 1))),
        );
    }
    // index bookkeeping: r lowers the basis index by one (degree +1),
    // dr raises it (degree -1), omega preserves it
    for n in 1..=nmax {
        let g = gf(Distribution::basis(n));
        let shifted = g.act_r();
        let pass = match &shifted {
            GeneralizedFunction::Sign(s) => s.max_index() == Some(n - 1),
            _ => false,
        };
        b.check(
            format!("degree_r_n{n:02}"),
            pass,
            format!("index of r D^{n} delta"),
            format!("{}", n - 1),
        );
    }
    for n in 0..=nmax {
        let g = gf(Distribution::basis(n));
        let up = g.act_dr();
        let pass_up = matches!(&up, GeneralizedFunction::Sign(s) if s.max_index() == Some(n + 1));
        b.check(
            format!("degree_dr_n{n:02}"),
            pass_up,
            format!("index of dr D^{n} delta"),
            format!("{}", n + 1),
        );
        let same = g.act_omega();
        let pass_same =
            matches!(&same, GeneralizedFunction::Sign(s) if s.max_index() == Some(n));
        b.check(
            format!("degree_omega_n{n:02}"),
            pass_same,
            format!("index of omega D^{n} delta"),
            format!("{n}"),
        );
    }
}

// The "physics" expressions: radial-derivative elements paired through the
// spherical means with the (m)(m+1)... coefficients.
fn suite_physics_sec5(b: &mut SuiteBuilder) {
    let lmax = b.cfg.kmax.min(3);
    for l in 0..=lmax {
        let d2l = radial_basis(RadialLabel::D, l).as_dist().expect("dist").clone();
        let fact_even: i64 = (1..=2 * l as i64).product::<i64>().max(1);
        b.pairing_check(
            format!("even_l{l:02}"),
            &format!("<dr^{} delta, phi>", 2 * l),
            &format!("(m)...(m+{}-1)/({})! * d_r^{} Sigma0[phi] at 0", 2 * l, 2 * l, 2 * l),
            move |m, phi| pair_cartesian(&d2l, phi, m),
            move |m, phi| {
                let coeff = rising_from_m(2 * l, m) / rat_int(fact_even);
                Ok(spherical_mean0(phi)
                    .radial_deriv_at_zero(2 * l)
                    .scale(&coeff))
            },
        );
        let v2l1 = radial_basis(RadialLabel::V, l).as_dist().expect("dist").clone();
        let fact_odd: i64 = (1..=2 * l as i64 + 1).product();
        b.pairing_check(
            format!("odd_l{l:02}"),
            &format!("<(omega dr^{}) delta, phi>", 2 * l + 1),
            &format!(
                "-(m)...(m+{})/({})! * d_r^{} Sigma1[phi] at 0",
                2 * l,
                2 * l + 1,
                2 * l + 1
            ),
            move |m, phi| pair_cartesian(&v2l1, phi, m),
            move |m, phi| {
                let coeff = -rising_from_m(2 * l + 1, m) / rat_int(fact_odd);
                Ok(spherical_mean1(phi)
                    .radial_deriv_at_zero(2 * l + 1)
                    .scale(&coeff))
            },
        );
    }
}
