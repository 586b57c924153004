//! Explicit embeddings of simple `D(S3)`-modules into tensor products of two
//! simple modules.

use std::fmt;
use std::str::FromStr;

use crate::error::ModuleError;
use crate::group::{s3, GroupData, Weight};
use crate::linalg::{axpy, zero_vector, Mat, Subspace, Vector};
use crate::scalar::Cyc;

use super::{make_simple, tensor, DGMap, DGModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingFormula {
    /// `M(tau,l+1)` and `M(tau,l+2)` inside `M(tau,l) (x) M(e,rho)`.
    TauInTauRho,
    /// The summands of `M(tau,i) (x) M(tau,j)`.
    TauTensorTau,
    /// `M(sigma,+-)` inside `M(tau,l) (x) M(sigma,-)`.
    TauTensorSigma,
    /// `M(sigma,+-)` inside `M(sigma,-) (x) M(tau,l)`.
    SigmaTensorTau,
    /// `M(e,rho)` inside `M(sigma,-) (x) M(sigma,+-)`.
    RhoInSigmaSigma,
    /// `M(tau,l)` inside `M(sigma,-) (x) M(sigma,+-)`.
    TauInSigmaSigma,
    /// `M(sigma,+-)` inside `M(sigma,-) (x) M(e,rho)`.
    SigmaTensorRho,
}

impl EmbeddingFormula {
    pub const ALL: [EmbeddingFormula; 7] = [
        EmbeddingFormula::TauInTauRho,
        EmbeddingFormula::TauTensorTau,
        EmbeddingFormula::TauTensorSigma,
        EmbeddingFormula::SigmaTensorTau,
        EmbeddingFormula::RhoInSigmaSigma,
        EmbeddingFormula::TauInSigmaSigma,
        EmbeddingFormula::SigmaTensorRho,
    ];

    pub fn id(self) -> &'static str {
        match self {
            EmbeddingFormula::TauInTauRho => "tau-in-tau-rho",
            EmbeddingFormula::TauTensorTau => "tau-tensor-tau",
            EmbeddingFormula::TauTensorSigma => "tau-tensor-sigma",
            EmbeddingFormula::SigmaTensorTau => "sigma-tensor-tau",
            EmbeddingFormula::RhoInSigmaSigma => "rho-in-sigma-sigma",
            EmbeddingFormula::TauInSigmaSigma => "tau-in-sigma-sigma",
            EmbeddingFormula::SigmaTensorRho => "sigma-tensor-rho",
        }
    }

    /// Every `(left, right, target)` triple the formula covers.
    pub fn instances(self) -> Vec<(Weight, Weight, Weight)> {
        let g = GroupData::s3();
        let w = |s: String| g.parse_weight(&s).expect("known weight");
        let mut out = Vec::new();
        for l in 0..3 {
            let tau = |k: usize| w(format!("tau{}", k % 3));
            match self {
                EmbeddingFormula::TauInTauRho => {
                    for k in [l + 1, l + 2] {
                        out.push((tau(l), w("erho".into()), tau(k)));
                    }
                }
                EmbeddingFormula::TauTensorTau => {
                    for m in 0..3 {
                        let k = (6 - l - m) % 3;
                        if m == l {
                            out.push((tau(l), tau(l), w("e+".into())));
                            out.push((tau(l), tau(l), w("e-".into())));
                        } else {
                            out.push((tau(l), tau(m), w("erho".into())));
                        }
                        out.push((tau(l), tau(m), tau(k)));
                    }
                }
                EmbeddingFormula::TauTensorSigma | EmbeddingFormula::SigmaTensorTau => {
                    for s in ["sigma+", "sigma-"] {
                        let (a, b) = if self == EmbeddingFormula::TauTensorSigma {
                            (tau(l), w("sigma-".into()))
                        } else {
                            (w("sigma-".into()), tau(l))
                        };
                        out.push((a, b, w(s.into())));
                    }
                }
                EmbeddingFormula::TauInSigmaSigma => {
                    for s in ["sigma+", "sigma-"] {
                        out.push((w("sigma-".into()), w(s.into()), tau(l)));
                    }
                }
                EmbeddingFormula::RhoInSigmaSigma | EmbeddingFormula::SigmaTensorRho => {}
            }
        }
        match self {
            EmbeddingFormula::RhoInSigmaSigma => {
                for s in ["sigma+", "sigma-"] {
                    out.push((w("sigma-".into()), w(s.into()), w("erho".into())));
                }
            }
            EmbeddingFormula::SigmaTensorRho => {
                for s in ["sigma+", "sigma-"] {
                    out.push((w("sigma-".into()), w("erho".into()), w(s.into())));
                }
            }
            _ => {}
        }
        out
    }
}

impl fmt::Display for EmbeddingFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for EmbeddingFormula {
    type Err = ModuleError;

    fn from_str(s: &str) -> Result<Self, ModuleError> {
        let norm = s.trim().replace([' ', '_'], "-").replace("-en-", "-in-");
        EmbeddingFormula::ALL
            .into_iter()
            .find(|f| f.id() == norm)
            .ok_or_else(|| ModuleError::UnknownFormula(s.to_string()))
    }
}

/// Images of the basis of `M(target)` inside `M(left) (x) M(right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub formula: EmbeddingFormula,
    pub left: Weight,
    pub right: Weight,
    pub target: Weight,
    pub images: Vec<Vector>,
}

impl Embedding {
    pub fn tensor_module(&self, g: &GroupData) -> DGModule {
        tensor(g, &make_simple(g, self.left), &make_simple(g, self.right))
    }

    pub fn span(&self) -> Subspace {
        let n = self.images.first().map_or(0, Vec::len);
        Subspace::spanned_by(n, self.images.iter().cloned())
    }

    pub fn map(&self) -> DGMap {
        let n = self.images.first().map_or(0, Vec::len);
        DGMap {
            matrix: Mat::from_columns(n, &self.images),
        }
    }
}

// Basis positions inside the simple modules of S3.
fn sig(t: i64) -> usize {
    t.rem_euclid(3) as usize
}

fn pm(e: i64) -> usize {
    if e > 0 {
        0
    } else {
        1
    }
}

struct Builder {
    right_dim: usize,
    n: usize,
}

impl Builder {
    fn pure(&self, a: usize, b: usize, c: Cyc) -> Vector {
        let mut v = zero_vector(self.n);
        v[a * self.right_dim + b] = c;
        v
    }

    fn sum(&self, parts: &[(usize, usize, Cyc)]) -> Vector {
        let mut v = zero_vector(self.n);
        for (a, b, c) in parts {
            axpy(&mut v, c, &self.pure(*a, *b, Cyc::one()));
        }
        v
    }
}

fn tau_label(g: &GroupData, w: Weight) -> Option<i64> {
    let id = g.weight_id(w);
    id.strip_prefix("tau").and_then(|l| l.parse().ok())
}

fn sigma_sign(g: &GroupData, w: Weight) -> Option<i64> {
    match g.weight_id(w).as_str() {
        "sigma+" => Some(1),
        "sigma-" => Some(-1),
        _ => None,
    }
}

/// The vectors of an explicit embedding formula, for the given factors and target
/// weight.
pub fn named_embedding(
    formula: EmbeddingFormula,
    left: Weight,
    right: Weight,
    target: Weight,
) -> Result<Embedding, ModuleError> {
    let g = GroupData::s3();
    let bad = |msg: &str| ModuleError::BadFormulaArgs {
        formula: formula.id().to_string(),
        msg: msg.to_string(),
    };
    if !formula.instances().contains(&(left, right, target)) {
        return Err(bad(&format!(
            "no summand {} in {} (x) {}",
            g.weight_label(target),
            g.weight_label(left),
            g.weight_label(right)
        )));
    }
    let tensor_mod = tensor(g, &make_simple(g, left), &make_simple(g, right));
    let b = Builder {
        right_dim: g.simple_dim(right),
        n: tensor_mod.dim(),
    };
    let z = Cyc::zeta_pow;
    let one = Cyc::one;
    let images: Vec<Vector> = match formula {
        EmbeddingFormula::TauInTauRho => {
            let l = tau_label(g, left).expect("tau weight");
            let k = tau_label(g, target).expect("tau weight");
            // Same exponents for M(tau,l+1), opposite ones for M(tau,l+2).
            let flip = if (k - l).rem_euclid(3) == 1 { 1 } else { -1 };
            [1, -1]
                .iter()
                .map(|&e| b.pure(pm(e), pm(flip * e), one()))
                .collect()
        }
        EmbeddingFormula::TauTensorTau => {
            let i = tau_label(g, left).expect("tau weight");
            let j = tau_label(g, right).expect("tau weight");
            match g.weight_id(target).as_str() {
                "e+" | "e-" => {
                    let s = if g.weight_id(target) == "e+" { 1 } else { -1 };
                    vec![b.sum(&[(0, 1, one()), (1, 0, Cyc::int(s))])]
                }
                "erho" => {
                    let first = if (i - j).rem_euclid(3) == 1 { 1 } else { -1 };
                    [first, -first]
                        .iter()
                        .map(|&e| b.pure(pm(e), pm(-e), one()))
                        .collect()
                }
                _ => vec![b.pure(1, 1, one()), b.pure(0, 0, one())],
            }
        }
        EmbeddingFormula::TauTensorSigma => {
            let l = tau_label(g, left).expect("tau weight");
            let s = sigma_sign(g, target).expect("sigma weight");
            (0..3)
                .map(|i| {
                    b.sum(&[
                        (0, sig(i + 1), z(i * l)),
                        (1, sig(i + 2), -Cyc::int(s) * z(-i * l)),
                    ])
                })
                .collect()
        }
        EmbeddingFormula::SigmaTensorTau => {
            let l = tau_label(g, right).expect("tau weight");
            let s = sigma_sign(g, target).expect("sigma weight");
            (0..3)
                .map(|i| {
                    b.sum(&[
                        (sig(i + 2), 0, z(i * l)),
                        (sig(i + 1), 1, -Cyc::int(s) * z(-i * l)),
                    ])
                })
                .collect()
        }
        EmbeddingFormula::RhoInSigmaSigma => {
            let plus = sigma_sign(g, right) == Some(1);
            [1i64, -1]
                .iter()
                .map(|&j| {
                    let c = if plus { Cyc::int(j) } else { one() };
                    let parts: Vec<_> = (0..3).map(|i| (sig(i), sig(i), &c * &z(-i * j))).collect();
                    b.sum(&parts)
                })
                .collect()
        }
        EmbeddingFormula::TauInSigmaSigma => {
            let l = tau_label(g, target).expect("tau weight");
            let plus = sigma_sign(g, right) == Some(1);
            [1i64, -1]
                .iter()
                .map(|&i| {
                    let base = b.pure(0, sig(i), one());
                    let tau_i = g.pow(s3::TAU, i);
                    let tau_minus_i = g.pow(s3::TAU, -i);
                    let mut v = crate::linalg::scaled(&base, &z(l));
                    axpy(&mut v, &z(-l), &tensor_mod.act(tau_minus_i, &base));
                    axpy(&mut v, &one(), &tensor_mod.act(tau_i, &base));
                    if plus {
                        v = crate::linalg::scaled(&v, &Cyc::int(i));
                    }
                    v
                })
                .collect()
        }
        EmbeddingFormula::SigmaTensorRho => {
            let s = sigma_sign(g, target).expect("sigma weight");
            (0..3)
                .map(|i| b.sum(&[(sig(i), 0, z(i)), (sig(i), 1, -Cyc::int(s) * z(-i))]))
                .collect()
        }
    };
    Ok(Embedding {
        formula,
        left,
        right,
        target,
        images,
    })
}
