//! Named identities, each a pure function from an order to a list of
//! sub-checks. The CLI lists and runs them uniformly.

use serde::Serialize;

use crate::identities as id;
use crate::report::{errored, summarize, Check, IdentityReport};
use crate::{Error, Result};

/// One registered identity.
pub struct RegistryEntry {
    pub name: &'static str,
    pub anchor: &'static str,
    pub default_order: i64,
    run: fn(i64) -> Result<Vec<Check>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegistryInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    pub default_order: i64,
}

pub fn entries() -> &'static [RegistryEntry] {
    ENTRIES
}

pub fn registry_listing() -> Vec<RegistryInfo> {
    ENTRIES
        .iter()
        .map(|e| RegistryInfo { name: e.name, anchor: e.anchor, default_order: e.default_order })
        .collect()
}

pub fn lookup(name: &str) -> Result<&'static RegistryEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Run one entry. Unknown names are an error; failures inside the
/// computation become a failing report.
pub fn verify_registry(name: &str, order: i64) -> Result<IdentityReport> {
    let e = lookup(name)?;
    Ok(match (e.run)(order) {
        Ok(checks) => summarize(e.name, e.anchor, order, &checks),
        Err(err) => errored(e.name, e.anchor, order, &err),
    })
}

static ENTRIES: &[RegistryEntry] = &[
    RegistryEntry { name: "quintic-fifth-powers", anchor: "fifth-powers", default_order: 100, run: id::quintic_fifth_powers },
    RegistryEntry { name: "sqrt-t-products", anchor: "sqrt-t", default_order: 50, run: id::sqrt_t_products },
    RegistryEntry { name: "jacobi-quartic", anchor: "jacobi-quartic", default_order: 100, run: id::jacobi_quartic },
    RegistryEntry { name: "triple-product", anchor: "triple-product", default_order: 100, run: id::triple_product },
    RegistryEntry { name: "theta-sum-product", anchor: "theta-forms", default_order: 100, run: id::theta_sum_product },
    RegistryEntry { name: "rogers-ramanujan", anchor: "rr-functions", default_order: 100, run: id::rogers_ramanujan_relations },
    RegistryEntry { name: "continued-fraction", anchor: "rr-fraction", default_order: 100, run: id::continued_fraction },
    RegistryEntry { name: "weight-one-eisenstein", anchor: "eis-weight-1", default_order: 100, run: id::weight_one_eisenstein },
    RegistryEntry { name: "weight-two-eisenstein", anchor: "eis-weight-2", default_order: 100, run: id::weight_two_eisenstein },
    RegistryEntry { name: "weight-three-eisenstein", anchor: "eis-weight-3", default_order: 100, run: id::weight_three_eisenstein },
    RegistryEntry { name: "lambert-polynomials", anchor: "lambert-forms", default_order: 100, run: id::lambert_polynomials },
    RegistryEntry { name: "e2-log-derivative", anchor: "e2-forms", default_order: 100, run: id::e2_log_derivative },
    RegistryEntry { name: "level-one-polynomials", anchor: "level-one", default_order: 100, run: id::level_one_forms },
    RegistryEntry { name: "level-one-at-q5", anchor: "level-one-q5", default_order: 100, run: id::level_one_at_q5 },
    RegistryEntry { name: "level-one-at-fifth-root", anchor: "level-one-root", default_order: 60, run: id::level_one_at_fifth_root },
    RegistryEntry { name: "chi4-dissection", anchor: "chi4-classes", default_order: 60, run: id::chi4_dissection },
    RegistryEntry { name: "sigma1-dissection", anchor: "sigma1-classes", default_order: 60, run: id::sigma1_dissection },
    RegistryEntry { name: "legendre-dissection", anchor: "legendre-classes", default_order: 60, run: id::legendre_dissection },
    RegistryEntry { name: "sigma3-dissection", anchor: "sigma3-classes", default_order: 40, run: id::sigma3_dissection },
    RegistryEntry { name: "tau-dissection", anchor: "tau-classes", default_order: 30, run: id::tau_dissection },
    RegistryEntry { name: "e4-hecke-iterates", anchor: "e4-iterates", default_order: 40, run: id::e4_hecke_iterates },
    RegistryEntry { name: "inverse-hecke", anchor: "inverse-hecke", default_order: 40, run: id::inverse_hecke },
    RegistryEntry { name: "eisenstein-invariance", anchor: "omega-invariance", default_order: 60, run: id::eisenstein_invariance },
    RegistryEntry { name: "lambert-eigenvalues", anchor: "omega-eigenvalues", default_order: 60, run: id::lambert_eigenvalues },
    RegistryEntry { name: "weierstrass-eigenforms", anchor: "p-function-forms", default_order: 60, run: id::weierstrass_eigenforms },
    RegistryEntry { name: "pentication", anchor: "pentication", default_order: 60, run: id::pentication },
    RegistryEntry { name: "nested-radicals", anchor: "nested-radicals", default_order: 8, run: id::nested_radicals },
    RegistryEntry { name: "change-of-sign", anchor: "change-of-sign", default_order: 100, run: id::change_of_sign },
    RegistryEntry { name: "pentamidiation-route", anchor: "pent-route", default_order: 80, run: id::pentamidiation_route },
    RegistryEntry { name: "partition-5-dissection", anchor: "p-5n4", default_order: 100, run: id::partition_dissection },
    RegistryEntry { name: "partition-25n24", anchor: "p-25n24", default_order: 50, run: id::partition_25n24 },
    RegistryEntry { name: "partition-level-2", anchor: "p-level-2", default_order: 40, run: id::partition_level_two },
    RegistryEntry { name: "partition-level-3", anchor: "p-level-3", default_order: 12, run: id::partition_level_three },
    RegistryEntry { name: "multipartition-dissections", anchor: "multipartitions", default_order: 60, run: id::multipartition_dissections },
    RegistryEntry { name: "watson-modular-eq", anchor: "watson", default_order: 100, run: id::watson_modular_eq },
    RegistryEntry { name: "ramanujan-eta-quotient", anchor: "eta-quotient-fraction", default_order: 100, run: id::eta_quotient_by_fraction },
    RegistryEntry { name: "tau-multisection", anchor: "tau-multisection", default_order: 40, run: id::tau_multisection },
    RegistryEntry { name: "five-core", anchor: "five-core", default_order: 60, run: id::five_core },
    RegistryEntry { name: "quintic-ode", anchor: "quintic-ode", default_order: 100, run: id::quintic_ode },
    RegistryEntry { name: "t-system", anchor: "t-system", default_order: 100, run: id::t_system },
    RegistryEntry { name: "kaneko-ode", anchor: "kaneko-ode", default_order: 100, run: id::kaneko_ode },
    RegistryEntry { name: "kaneko-recursion", anchor: "kaneko-recursion", default_order: 100, run: id::kaneko_recursion },
    RegistryEntry { name: "fricke-continued-fraction", anchor: "fricke-series", default_order: 100, run: id::fricke_continued_fraction },
    RegistryEntry { name: "fricke-numeric", anchor: "fricke-numeric", default_order: 80, run: id::fricke_numeric },
    RegistryEntry { name: "rogers-ramanujan-quartet", anchor: "rr-at-q5", default_order: 100, run: id::rogers_ramanujan_quartet },
    RegistryEntry { name: "fifth-power-lemma", anchor: "fifth-power-lemma", default_order: 50, run: id::fifth_power_lemma },
];
