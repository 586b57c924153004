use serde::Serialize;

use super::lattice::{verify_lattice, Check, LatticeNode};
use super::{
    composition_factors, is_homogeneous, is_simple_verma, maximal_submodule, simple_dims, socle,
    socle_is_simple, weights_of, weights_of_quotient,
};
use crate::group::{GroupData, Weight};
use crate::linalg::Subspace;
use crate::verma::VermaModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleSummary {
    pub dim: usize,
    pub weights: Vec<String>,
}

impl ModuleSummary {
    fn new(dim: usize, mut weights: Vec<Weight>) -> Self {
        let g = GroupData::s3();
        weights.sort();
        ModuleSummary {
            dim,
            weights: weights.into_iter().map(|w| g.weight_id(w)).collect(),
        }
    }
}

/// Everything computed about one Verma module.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub weight: String,
    pub dim: usize,
    pub graded_dims: Vec<usize>,
    pub simple: bool,
    pub head: ModuleSummary,
    pub socle: ModuleSummary,
    pub factors: Vec<String>,
    pub lattice: Vec<LatticeNode>,
    pub checks: Vec<Check>,
}

impl ModuleReport {
    pub fn new(m: &VermaModule) -> ModuleReport {
        let g = GroupData::s3();
        let full = Subspace::full(m.dim());
        let x = maximal_submodule(m);
        let soc = socle(m);
        let head_w = weights_of_quotient(m, &full, &x).expect("X is a submodule");
        let soc_w = weights_of(m, &soc).expect("socle is a submodule");
        let mut lattice = verify_lattice(m);
        let factors = composition_factors(m);
        let dims = simple_dims();
        lattice.push_check(
            "factor dimensions sum to dim M",
            factors.iter().map(|w| dims[w]).sum::<usize>() == m.dim(),
        );
        lattice.push_check("X is homogeneous", is_homogeneous(m, &x));
        lattice.push_check("socle is simple", socle_is_simple(m));
        lattice.push_check(
            "y_top x_top test agrees with X = 0",
            is_simple_verma(m) == x.is_zero(),
        );
        ModuleReport {
            weight: g.weight_id(m.weight()),
            dim: m.dim(),
            graded_dims: m.graded_dims(),
            simple: x.is_zero(),
            head: ModuleSummary::new(m.dim() - x.dim(), head_w),
            socle: ModuleSummary::new(soc.dim(), soc_w),
            factors: factors.into_iter().map(|w| g.weight_id(w)).collect(),
            lattice: lattice.lattice,
            checks: lattice.checks,
        }
    }
}
