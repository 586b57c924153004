#![allow(dead_code)]

use fkverma::group::{GroupData, Weight};
use fkverma::verma::VermaModule;

pub fn g() -> &'static GroupData {
    GroupData::s3()
}

pub fn weight(id: &str) -> Weight {
    g().parse_weight(id).expect("weight id")
}

pub fn verma(id: &str) -> VermaModule {
    VermaModule::build(weight(id))
}

pub fn weights(ids: &[&str]) -> Vec<Weight> {
    let mut v: Vec<Weight> = ids.iter().map(|s| weight(s)).collect();
    v.sort();
    v
}

pub fn all_vermas() -> Vec<VermaModule> {
    g().weights().into_iter().map(VermaModule::build).collect()
}
pub mod oracle;
