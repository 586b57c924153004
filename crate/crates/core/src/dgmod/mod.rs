//! Finite-dimensional modules over the Drinfeld double `D(G)`, presented as
//! `G`-graded representations of `G` (Yetter-Drinfeld modules).

mod embedding;
mod fusion;

pub use embedding::{named_embedding, Embedding, EmbeddingFormula};
pub use fusion::{
    check_fusion_rules, fusion_corrections, fusion_table, listed_fusion_rules, mismatched_rules,
    FusionEntry, FusionRule, RuleCheck,
};

use std::collections::BTreeSet;

use crate::error::ModuleError;
use crate::group::{Elem, GroupData, Weight};
use crate::linalg::{is_zero, unit_vector, zero_vector, Coordinates, Mat, Subspace, Vector};
use crate::scalar::Cyc;

/// A `D(G)`-module with a basis of `G`-homogeneous vectors. `delta_h` acts as the
/// projection onto the vectors of degree `h` and `g` maps degree `h` to `g h g^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGModule {
    symbols: Vec<String>,
    degrees: Vec<Elem>,
    actions: Vec<Mat>,
}

impl DGModule {
    pub fn new(
        group: &GroupData,
        symbols: Vec<String>,
        degrees: Vec<Elem>,
        actions: Vec<Mat>,
    ) -> Result<Self, ModuleError> {
        let n = degrees.len();
        if symbols.len() != n {
            return Err(ModuleError::DimensionMismatch {
                expected: n,
                got: symbols.len(),
            });
        }
        if actions.len() != group.order() {
            return Err(ModuleError::DimensionMismatch {
                expected: group.order(),
                got: actions.len(),
            });
        }
        if let Some(m) = actions.iter().find(|m| m.nrows() != n || m.ncols() != n) {
            return Err(ModuleError::DimensionMismatch {
                expected: n,
                got: m.nrows(),
            });
        }
        let module = DGModule {
            symbols,
            degrees,
            actions,
        };
        module.check_axioms(group)?;
        Ok(module)
    }

    fn check_axioms(&self, group: &GroupData) -> Result<(), ModuleError> {
        if self.actions[group.identity().0] != Mat::identity(self.dim()) {
            return Err(ModuleError::NotStable);
        }
        for g in group.elements() {
            for h in group.elements() {
                if self.action(g).mul(self.action(h)) != *self.action(group.mul(g, h)) {
                    return Err(ModuleError::NotStable);
                }
            }
            for j in 0..self.dim() {
                let target = group.conj(g, self.degrees[j]);
                if let Some((i, _)) = self
                    .action(g)
                    .column(j)
                    .iter()
                    .find(|(i, _)| self.degrees[*i] != target)
                {
                    return Err(ModuleError::Inhomogeneous(*i));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn degree(&self, i: usize) -> Elem {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[Elem] {
        &self.degrees
    }

    pub fn action(&self, g: Elem) -> &Mat {
        &self.actions[g.0]
    }

    pub fn act(&self, g: Elem, v: &[Cyc]) -> Vector {
        self.actions[g.0].apply(v)
    }

    /// `delta_h v`: the degree-`h` component of `v`.
    pub fn project(&self, h: Elem, v: &[Cyc]) -> Vector {
        v.iter()
            .zip(&self.degrees)
            .map(|(c, d)| if *d == h { c.clone() } else { Cyc::zero() })
            .collect()
    }

    pub fn delta(&self, h: Elem) -> Mat {
        let cols: Vec<Vector> = (0..self.dim())
            .map(|i| {
                if self.degrees[i] == h {
                    unit_vector(self.dim(), i)
                } else {
                    zero_vector(self.dim())
                }
            })
            .collect();
        Mat::from_columns(self.dim(), &cols)
    }

    /// Indices of basis vectors of degree `h`.
    pub fn component(&self, h: Elem) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == h).collect()
    }

    pub fn is_homogeneous(&self, v: &[Cyc]) -> bool {
        let degs: BTreeSet<Elem> = v
            .iter()
            .zip(&self.degrees)
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, d)| *d)
            .collect();
        degs.len() <= 1
    }

    pub fn is_submodule(&self, group: &GroupData, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            group
                .elements()
                .all(|g| s.contains(&self.act(g, v)) && s.contains(&self.project(g, v)))
        })
    }

    /// The `D(G)`-submodule generated by the given vectors.
    pub fn span_of(&self, group: &GroupData, gens: &[Vector]) -> Subspace {
        let mut s = Subspace::new(self.dim());
        let mut queue: Vec<Vector> = Vec::new();
        for v in gens {
            for h in group.elements() {
                let p = self.project(h, v);
                if s.insert(p.clone()) {
                    queue.push(p);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for g in group.elements() {
                let w = self.act(g, &v);
                if s.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// The subquotient `a / b` with a homogeneous basis of representatives.
    pub fn subquotient(
        &self,
        group: &GroupData,
        a: &Subspace,
        b: &Subspace,
    ) -> Result<Subquotient, ModuleError> {
        if !b.is_subspace_of(a) || !self.is_submodule(group, a) || !self.is_submodule(group, b) {
            return Err(ModuleError::NotStable);
        }
        let mut reps: Vec<Vector> = Vec::new();
        let mut rep_degrees = Vec::new();
        let mut lower = b.clone();
        for h in group.elements() {
            for v in a.basis() {
                let p = self.project(h, v);
                if lower.insert(p.clone()) {
                    reps.push(p);
                    rep_degrees.push(h);
                }
            }
        }
        let mut family: Vec<Vector> = reps.clone();
        family.extend(b.basis().iter().cloned());
        let coords = Coordinates::new(self.dim(), &family).expect("independent by construction");
        let k = reps.len();
        let actions = group
            .elements()
            .map(|g| {
                let cols: Vec<Vector> = reps
                    .iter()
                    .map(|r| {
                        let c = coords.solve(&self.act(g, r)).expect("a is stable");
                        c[..k].to_vec()
                    })
                    .collect();
                Mat::from_columns(k, &cols)
            })
            .collect();
        let symbols = (0..k).map(|i| format!("q{i}")).collect();
        let module = DGModule::new(group, symbols, rep_degrees, actions)?;
        Ok(Subquotient { module, reps })
    }

    pub fn submodule(&self, group: &GroupData, a: &Subspace) -> Result<Subquotient, ModuleError> {
        self.subquotient(group, a, &Subspace::new(self.dim()))
    }
}

/// A module `A / B` together with ambient representatives of its basis.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub module: DGModule,
    pub reps: Vec<Vector>,
}

impl Subquotient {
    /// Ambient vector representing a quotient vector.
    pub fn lift(&self, v: &[Cyc]) -> Vector {
        let n = self.reps.first().map_or(0, Vec::len);
        let mut out = zero_vector(n);
        for (c, r) in v.iter().zip(&self.reps) {
            crate::linalg::axpy(&mut out, c, r);
        }
        out
    }
}

/// A `D(G)`-linear map between two modules, given by its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGMap {
    pub matrix: Mat,
}

impl DGMap {
    pub fn is_morphism(&self, group: &GroupData, dom: &DGModule, cod: &DGModule) -> bool {
        if self.matrix.ncols() != dom.dim() || self.matrix.nrows() != cod.dim() {
            return false;
        }
        group.elements().all(|g| {
            self.matrix.mul(dom.action(g)) == cod.action(g).mul(&self.matrix)
                && self.matrix.mul(&dom.delta(g)) == cod.delta(g).mul(&self.matrix)
        })
    }
}

fn symbol_for(group: &GroupData, w: Weight, coset: usize, j: usize) -> String {
    let class = &group.classes()[w.class];
    let dim = group.irrep(w).dim;
    let deg = group.conj(class.transversal[coset], class.rep);
    let name = group
        .name(deg)
        .trim_matches(|c| c == '(' || c == ')')
        .to_string();
    if class.members.len() > 1 {
        if dim == 1 {
            format!("m[{name}]")
        } else {
            format!("m[{name}]_{j}")
        }
    } else if dim == 1 {
        format!("m_{name}")
    } else {
        format!("m{}^{}", j, group.irrep(w).label)
    }
}

/// The simple module of weight `w`: the representation of the centralizer
/// induced up to `G`, with basis `t_i (x) u_j` ordered by transversal first.
pub fn make_simple(group: &GroupData, w: Weight) -> DGModule {
    let class = &group.classes()[w.class];
    let irrep = group.irrep(w);
    let d = irrep.dim;
    let k = class.transversal.len();
    let n = k * d;
    let mut symbols = Vec::with_capacity(n);
    let mut degrees = Vec::with_capacity(n);
    for (i, &t) in class.transversal.iter().enumerate() {
        for j in 0..d {
            symbols.push(symbol_for(group, w, i, j));
            degrees.push(group.conj(t, class.rep));
        }
    }
    let actions = group
        .elements()
        .map(|g| {
            let mut cols = vec![zero_vector(n); n];
            for (i, &t) in class.transversal.iter().enumerate() {
                let gt = group.mul(g, t);
                let (target, c) = class
                    .transversal
                    .iter()
                    .enumerate()
                    .find_map(|(l, &s)| {
                        let c = group.mul(group.inv(s), gt);
                        class.centralizer.contains(&c).then_some((l, c))
                    })
                    .expect("transversal covers all cosets");
                let m = irrep.matrix(c);
                for j in 0..d {
                    for (r, x) in m.column(j) {
                        cols[i * d + j][target * d + r] = x.clone();
                    }
                }
            }
            Mat::from_columns(n, &cols)
        })
        .collect();
    DGModule::new(group, symbols, degrees, actions).expect("induced module is valid")
}

/// Tensor product with diagonal action; index `(i, j)` maps to `i * b.dim() + j`
/// and degrees multiply.
pub fn tensor(group: &GroupData, a: &DGModule, b: &DGModule) -> DGModule {
    let mut symbols = Vec::with_capacity(a.dim() * b.dim());
    let mut degrees = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            symbols.push(format!("{}⊗{}", a.symbols[i], b.symbols[j]));
            degrees.push(group.mul(a.degrees[i], b.degrees[j]));
        }
    }
    let actions = group
        .elements()
        .map(|g| a.action(g).kron(b.action(g)))
        .collect();
    DGModule::new(group, symbols, degrees, actions).expect("tensor product is valid")
}

/// One simple summand of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub weight: Weight,
    pub subspace: Subspace,
}

/// Splits a module into simple summands. The summands are independent and their
/// sum is the whole module; the choice of summands inside an isotypic component
/// is arbitrary.
pub fn decompose(group: &GroupData, m: &DGModule) -> Vec<Summand> {
    let mut out = Vec::new();
    for (ci, class) in group.classes().iter().enumerate() {
        let fiber = m.component(class.rep);
        if fiber.is_empty() {
            continue;
        }
        let order = class.centralizer.len() as i64;
        for (ri, irrep) in class.irreps.iter().enumerate() {
            let weight = Weight {
                class: ci,
                irrep: ri,
            };
            let factor = Cyc::from_ratio(irrep.dim as i64, order);
            let proj = class
                .centralizer
                .iter()
                .fold(Mat::zeros(m.dim(), m.dim()), |acc, &h| {
                    let c = irrep.matrix(group.inv(h)).get(0, 0);
                    acc.add(&m.action(h).scale(&(&c * &factor)))
                });
            let image = Subspace::spanned_by(
                m.dim(),
                fiber.iter().map(|&i| proj.apply(&unit_vector(m.dim(), i))),
            );
            for v in image.basis() {
                let subspace = m.span_of(group, std::slice::from_ref(v));
                debug_assert_eq!(subspace.dim(), group.simple_dim(weight));
                out.push(Summand { weight, subspace });
            }
        }
    }
    out
}

/// Sorted multiset of the weights of the simple summands.
pub fn weights(group: &GroupData, m: &DGModule) -> Vec<Weight> {
    let mut ws: Vec<Weight> = decompose(group, m).into_iter().map(|s| s.weight).collect();
    ws.sort();
    ws
}

/// The weight of `m` if `m` is simple.
pub fn identify_simple(group: &GroupData, m: &DGModule) -> Option<Weight> {
    match weights(group, m).as_slice() {
        [w] => Some(*w),
        _ => None,
    }
}

/// The weights of the summands of `m` meeting the span of `vectors`, which must
/// be a submodule of `m`.
pub fn weights_of_span(
    group: &GroupData,
    m: &DGModule,
    span: &Subspace,
) -> Result<Vec<Weight>, ModuleError> {
    let sub = m.submodule(group, span)?;
    Ok(weights(group, &sub.module))
}

/// Checks `v` lies in the module's degree-`h` component.
pub fn has_degree(m: &DGModule, v: &[Cyc], h: Elem) -> bool {
    !is_zero(v) && is_zero(&crate::linalg::sub(v, &m.project(h, v)))
}
