//! Submodules of Verma modules: closures, socle, maximal submodule, heads and
//! composition factors.

mod lattice;
mod named;
mod report;

pub use lattice::{head_socle_match, verify_lattice, Check, LatticeNode, LatticeReport};
pub use named::{named_generator, named_generators, NamedVector};
pub use report::{ModuleReport, ModuleSummary};

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::dgmod::{decompose, tensor, weights_of_span};
use crate::error::ModuleError;
use crate::group::{GroupData, Weight};
use crate::linalg::{axpy, is_zero, left_kernel, zero_vector, Subspace, Vector};
use crate::nichols::{Letter, Nichols};
use crate::scalar::Cyc;
use crate::verma::{Generator, VermaModule, N_TOP};

/// The smallest submodule containing `gens`.
pub fn closure(m: &VermaModule, gens: &[Vector]) -> Subspace {
    let mut s = Subspace::new(m.dim());
    let mut queue: Vec<Vector> = Vec::new();
    for v in gens {
        if s.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    let ops = Generator::all();
    while let Some(v) = queue.pop() {
        for &op in &ops {
            let w = m.apply(op, &v);
            if s.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    s
}

pub fn closure_of(m: &VermaModule, s: &Subspace) -> Subspace {
    closure(m, s.basis())
}

/// Whether `s` is stable under every generator.
pub fn is_submodule(m: &VermaModule, s: &Subspace) -> bool {
    Generator::all()
        .into_iter()
        .all(|op| s.basis().iter().all(|v| s.contains(&m.apply(op, v))))
}

/// The largest submodule contained in `start`, by shrinking
/// `X <- {v in X : a v in X for all generators a}` to a fixpoint.
pub fn largest_submodule_in(m: &VermaModule, start: &Subspace) -> Subspace {
    let ops = Generator::all();
    let mut x = start.clone();
    loop {
        let basis = x.basis().to_vec();
        if basis.is_empty() {
            return x;
        }
        let rows: Vec<Vector> = basis
            .iter()
            .map(|b| {
                ops.iter()
                    .flat_map(|&op| x.reduce(&m.apply(op, b)))
                    .collect()
            })
            .collect();
        let next = Subspace::spanned_by(
            m.dim(),
            left_kernel(&rows)
                .into_iter()
                .map(|c| combine(m.dim(), &c, &basis)),
        );
        if next.dim() == x.dim() {
            return x;
        }
        x = next;
    }
}

fn combine(n: usize, coeffs: &[Cyc], family: &[Vector]) -> Vector {
    let mut v = zero_vector(n);
    for (c, b) in coeffs.iter().zip(family) {
        axpy(&mut v, c, b);
    }
    v
}

/// Sum of the pieces of degree `-n` with `n` in `range`.
pub fn degree_band(m: &VermaModule, range: std::ops::RangeInclusive<usize>) -> Subspace {
    range.fold(Subspace::new(m.dim()), |acc, n| acc.sum(&m.graded_piece(n)))
}

/// The unique maximal submodule: the largest submodule of `sum_{n<0} M^n`.
pub fn maximal_submodule(m: &VermaModule) -> Subspace {
    largest_submodule_in(m, &degree_band(m, 1..=N_TOP))
}

/// The socle, generated by `B^4(V) (x) M(w)`.
pub fn socle(m: &VermaModule) -> Subspace {
    closure(m, &m.soc_generators())
}

/// The pieces `s ∩ M^{-n}`, `n = 0..=4`.
pub fn graded_pieces(m: &VermaModule, s: &Subspace) -> Vec<Subspace> {
    (0..=N_TOP)
        .map(|n| s.intersection(&m.graded_piece(n)))
        .collect()
}

/// Whether `s` is the sum of its graded pieces.
pub fn is_homogeneous(m: &VermaModule, s: &Subspace) -> bool {
    let total: usize = graded_pieces(m, s).iter().map(Subspace::dim).sum();
    total == s.dim()
}

/// `D(G)`-weights of a `D(G)`-stable subspace.
pub fn weights_of(m: &VermaModule, s: &Subspace) -> Result<Vec<Weight>, ModuleError> {
    weights_of_span(GroupData::s3(), m.dg_module(), s)
}

/// `D(G)`-weights of the quotient `a / b`.
pub fn weights_of_quotient(
    m: &VermaModule,
    a: &Subspace,
    b: &Subspace,
) -> Result<Vec<Weight>, ModuleError> {
    let g = GroupData::s3();
    let q = m.dg_module().subquotient(g, a, b)?;
    Ok(crate::dgmod::weights(g, &q.module))
}

/// The simplicity test through `y_top (x_top (x) m) != 0`.
pub fn is_simple_verma(m: &VermaModule) -> bool {
    !is_zero(&m.y_top_x_top(0))
}

/// Which side a weight closure grows from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `s` is killed by the `y`'s and the closure is `B(V) s`.
    Highest,
    /// `s` is killed by the `x`'s and the closure is `B(Vbar) s`.
    Lowest,
}

/// The submodule generated by a `D(G)`-submodule `s` killed by the `y`'s
/// (or the `x`'s), grown one degree at a time: split `V (x) S` into simple
/// summands, keep the images of those the action map does not kill, repeat.
pub fn weight_closure(
    m: &VermaModule,
    s: &Subspace,
    dir: Direction,
) -> Result<Subspace, ModuleError> {
    let g = GroupData::s3();
    let dg = m.dg_module();
    if !dg.is_submodule(g, s) {
        return Err(ModuleError::Precondition("not a D(G)-submodule".into()));
    }
    let (prefix, op): (char, fn(Letter) -> Generator) = match dir {
        Direction::Highest => ('x', Generator::X),
        Direction::Lowest => ('y', Generator::Y),
    };
    let killer = match dir {
        Direction::Highest => Generator::Y,
        Direction::Lowest => Generator::X,
    };
    if Letter::ALL
        .iter()
        .any(|&l| s.basis().iter().any(|v| !is_zero(&m.apply(killer(l), v))))
    {
        return Err(ModuleError::Precondition(match dir {
            Direction::Highest => "the y's do not kill the generating space".into(),
            Direction::Lowest => "the x's do not kill the generating space".into(),
        }));
    }
    let space = Nichols::fk3().graded_module(1, prefix);
    let letters: Vec<Letter> = crate::nichols::Pbw::all()
        .filter(|p| p.len() == 1)
        .map(|p| p.letters()[0])
        .collect();
    let mut current = s.clone();
    let mut total = s.clone();
    for _ in 0..N_TOP {
        if current.is_zero() {
            break;
        }
        let sub = dg.submodule(g, &current)?;
        let k = sub.module.dim();
        let pair = tensor(g, &space, &sub.module);
        let act = |w: &Vector| {
            let mut out = zero_vector(m.dim());
            for i in crate::linalg::support(w) {
                let image = m.apply(op(letters[i / k]), &sub.reps[i % k]);
                axpy(&mut out, &w[i], &image);
            }
            out
        };
        let mut next = Subspace::new(m.dim());
        for summand in decompose(g, &pair) {
            // By Schur the map is zero or injective on a simple summand.
            if is_zero(&act(&summand.subspace.basis()[0])) {
                continue;
            }
            for v in summand.subspace.basis() {
                next.insert(act(v));
            }
        }
        total = total.sum(&next);
        current = next;
    }
    Ok(total)
}

/// Head of `m`: `(dimension, weights)` of `M / X`.
pub fn head(m: &VermaModule) -> (usize, Vec<Weight>) {
    let x = maximal_submodule(m);
    let w = weights_of_quotient(m, &Subspace::full(m.dim()), &x).expect("X is a submodule");
    (m.dim() - x.dim(), w)
}

/// Index `n` of the highest nonzero piece of `a / b` (degree `-n`), for
/// homogeneous `b ⊆ a`.
fn top_piece(m: &VermaModule, a: &Subspace, b: &Subspace) -> Option<(usize, Subspace)> {
    (0..=N_TOP).find_map(|n| {
        let piece = a.intersection(&m.graded_piece(n));
        (!piece.is_subspace_of(b)).then_some((n, piece))
    })
}

/// Index of the lowest nonzero piece of `a / b` and its weights.
pub fn lowest_weights(
    m: &VermaModule,
    a: &Subspace,
    b: &Subspace,
) -> Result<Vec<Weight>, ModuleError> {
    for n in (0..=N_TOP).rev() {
        let piece = a.intersection(&m.graded_piece(n)).sum(b);
        if !piece.is_subspace_of(b) {
            return weights_of_quotient(m, &piece, b);
        }
    }
    Ok(Vec::new())
}

/// Weights of the highest nonzero piece of `a / b`.
pub fn highest_weights(
    m: &VermaModule,
    a: &Subspace,
    b: &Subspace,
) -> Result<Vec<Weight>, ModuleError> {
    match top_piece(m, a, b) {
        Some((_, piece)) => weights_of_quotient(m, &piece.sum(b), b),
        None => Ok(Vec::new()),
    }
}

/// Dimensions of the simple heads `L(w)` for all eight weights.
pub fn simple_dims() -> &'static BTreeMap<Weight, usize> {
    static DIMS: OnceLock<BTreeMap<Weight, usize>> = OnceLock::new();
    DIMS.get_or_init(|| {
        GroupData::s3()
            .weights()
            .into_iter()
            .map(|w| (w, head(&VermaModule::build(w)).0))
            .collect()
    })
}

/// Whether the socle has no proper nonzero submodule: nothing survives
/// inside it once the bottom piece is dropped, and each bottom basis vector
/// generates all of it.
pub fn socle_is_simple(m: &VermaModule) -> bool {
    let s = socle(m);
    let truncated = s.intersection(&degree_band(m, 0..=N_TOP - 1));
    largest_submodule_in(m, &truncated).is_zero()
        && m.soc_generators()
            .into_iter()
            .all(|v| closure(m, &[v]) == s)
}

/// Composition factors of `m`, by highest weight, sorted.
pub fn composition_factors(m: &VermaModule) -> Vec<Weight> {
    let mut out = factors_between(m, &Subspace::full(m.dim()), &Subspace::new(m.dim()));
    out.sort();
    out
}

/// Composition factors of `a / b` for homogeneous submodules `b ⊆ a`: peel off the
/// highest-weight submodule generated by one simple summand of the top piece,
/// split it at its maximal submodule and recurse on both remaining layers.
pub fn factors_between(m: &VermaModule, a: &Subspace, b: &Subspace) -> Vec<Weight> {
    let g = GroupData::s3();
    let dg = m.dg_module();
    let Some((n, piece)) = top_piece(m, a, b) else {
        return Vec::new();
    };
    let top = piece.sum(b);
    let q = dg
        .subquotient(g, &top, b)
        .expect("graded pieces are D(G)-stable");
    let first = decompose(g, &q.module)
        .into_iter()
        .next()
        .expect("nonzero quotient");
    let mut gens: Vec<Vector> = first.subspace.basis().iter().map(|v| q.lift(v)).collect();
    gens.extend(b.basis().iter().cloned());
    let generated = closure(m, &gens);
    let lower = generated
        .intersection(&degree_band(m, n + 1..=N_TOP))
        .sum(b);
    let maximal = largest_submodule_in(m, &lower);
    let mut out = vec![first.weight];
    out.extend(factors_between(m, &maximal, b));
    out.extend(factors_between(m, a, &generated));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verma(id: &str) -> VermaModule {
        VermaModule::build(GroupData::s3().parse_weight(id).unwrap())
    }

    fn ws(ids: &[&str]) -> Vec<Weight> {
        let g = GroupData::s3();
        let mut v: Vec<Weight> = ids.iter().map(|s| g.parse_weight(s).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn maximal_submodules() {
        assert_eq!(maximal_submodule(&verma("e+")).dim(), 11);
        assert_eq!(maximal_submodule(&verma("sigma-")).dim(), 26);
        assert!(maximal_submodule(&verma("tau1")).is_zero());
    }

    #[test]
    fn socle_examples() {
        let m = verma("e+");
        assert_eq!(socle(&m).dim(), 1);
        let m = verma("sigma-");
        let s = socle(&m);
        assert_eq!(s.dim(), 10);
        assert_eq!(
            weights_of(&m, &s).unwrap(),
            ws(&["sigma-", "tau1", "tau2", "sigma-"])
        );
        let m = verma("e-");
        assert_eq!(socle(&m).dim(), 12);
    }

    #[test]
    fn heads() {
        let (d, w) = head(&verma("erho"));
        assert_eq!((d, w), (7, ws(&["erho", "sigma+", "tau0"])));
        let (d, w) = head(&verma("e+"));
        assert_eq!((d, w), (1, ws(&["e+"])));
    }

    #[test]
    fn factors() {
        assert_eq!(
            composition_factors(&verma("sigma-")),
            ws(&["sigma-", "tau0", "erho", "e+", "e+", "sigma-"])
        );
        assert_eq!(
            composition_factors(&verma("e+")),
            ws(&["e+", "sigma-", "e+"])
        );
        assert_eq!(composition_factors(&verma("tau2")), ws(&["tau2"]));
    }

    #[test]
    fn socle_by_lowest_weight_closure() {
        let m = verma("sigma-");
        let soc = Subspace::spanned_by(m.dim(), m.soc_generators());
        let s = weight_closure(&m, &soc, Direction::Lowest).unwrap();
        assert_eq!(s, socle(&m));
    }

    #[test]
    fn precondition_is_checked() {
        let m = verma("sigma-");
        let soc = Subspace::spanned_by(m.dim(), m.soc_generators());
        assert!(weight_closure(&m, &soc, Direction::Highest).is_err());
    }
}
