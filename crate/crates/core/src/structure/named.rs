//! Explicit generators of the submodules of the non-simple Verma modules.

use crate::error::ModuleError;
use crate::group::{s3, GroupData};
use crate::linalg::{add, scaled, sub, Vector};
use crate::nichols::Letter::{self, L12, L13, L23};
use crate::scalar::Cyc;
use crate::verma::{Generator, VermaModule};

#[derive(Clone, Debug)]
pub struct NamedVector {
    pub name: String,
    pub vector: Vector,
}

fn z(k: i64) -> Cyc {
    Cyc::zeta_pow(k)
}

fn int(n: i64) -> Cyc {
    Cyc::int(n)
}

fn letter(t: crate::group::Elem) -> Letter {
    Letter::from_transposition(t)
}

// simple basis positions
const M12: usize = 0;
const M23: usize = 1;
const M13: usize = 2;
const M_TAU: usize = 0;
const M_TAU_INV: usize = 1;

fn named(name: impl Into<String>, vector: Vector) -> NamedVector {
    NamedVector {
        name: name.into(),
        vector,
    }
}

/// `(1 - g) v`.
fn one_minus(m: &VermaModule, g: crate::group::Elem, v: &[Cyc]) -> Vector {
    sub(v, &m.apply(Generator::Group(g), v))
}

fn sigma_minus(m: &VermaModule) -> Vec<NamedVector> {
    let mut out = Vec::new();
    for l in 0..3 {
        out.push(named(
            format!("n{l}"),
            m.vector(&[
                (&[L13, L12, L23], M23, z(l)),
                (&[L12, L13, L23], M12, z(-l)),
                (&[L12, L13, L12], M13, int(-1)),
            ]),
        ));
    }
    out.push(named(
        "r",
        m.vector(&[
            (&[L12, L13], M12, int(-1)),
            (&[L13, L23], M12, int(-1)),
            (&[L12, L23], M13, int(-1)),
            (&[L13, L12], M13, int(-1)),
        ]),
    ));
    out.push(named(
        "v",
        m.vector(&[
            (&[L23], M23, z(-1)),
            (&[L13], M13, z(1)),
            (&[L12], M12, int(1)),
        ]),
    ));
    out.push(named(
        "q",
        m.vector(&[(&[L12, L23], M23, int(1)), (&[L12, L13], M13, int(-1))]),
    ));
    out.push(named(
        "u",
        m.vector(&[
            (&[L12, L13, L12], M23, -z(-1)),
            (&[L12, L13, L23], M13, z(1)),
            (&[L13, L12, L23], M12, int(1)),
        ]),
    ));
    out.push(named(
        "p",
        m.vector(&[
            (&[L13, L12], M23, int(-2)),
            (&[L12, L23], M23, int(-1)),
            (&[L13, L23], M13, int(-2)),
            (&[L12, L13], M13, int(-1)),
        ]),
    ));
    for l in 0..3 {
        out.push(named(
            format!("o{l}"),
            m.vector(&[
                (&[L13], M12, z(-l)),
                (&[L12], M23, z(l)),
                (&[L23], M13, int(1)),
            ]),
        ));
    }
    out.push(named(
        "me1",
        m.vector(&[
            (&[L12], M12, int(1)),
            (&[L23], M23, int(1)),
            (&[L13], M13, int(1)),
        ]),
    ));
    out.push(named(
        "me3",
        m.vector(&[
            (&[L13, L12, L23], M12, int(1)),
            (&[L12, L13, L12], M23, int(-1)),
            (&[L12, L13, L23], M13, int(1)),
        ]),
    ));
    out
}

/// `(1 - sigma tau^i) x_{sigma tau^(i+shift)} m_tau`, scaled by `zeta^(i*twist)`.
fn twisted_family(m: &VermaModule, prefix: &str, shift: i64, twist: i64) -> Vec<NamedVector> {
    let g = GroupData::s3();
    (0..3)
        .map(|i| {
            let head = g.mul(s3::SIGMA, g.pow(s3::TAU, i));
            let l = letter(g.mul(s3::SIGMA, g.pow(s3::TAU, i + shift)));
            let base = m.vector(&[(&[l], M_TAU, z(i * twist))]);
            named(format!("{prefix}{i}"), one_minus(m, head, &base))
        })
        .collect()
}

fn with_sigma_image(m: &VermaModule, name: &str, v: Vector) -> [NamedVector; 2] {
    let image = m.apply(Generator::Group(s3::SIGMA), &v);
    [named(name, v), named(format!("sigma.{name}"), image)]
}

fn tau_zero(m: &VermaModule) -> Vec<NamedVector> {
    let mut out = twisted_family(m, "j", 2, 0);
    let g = m.vector(&[
        (&[L13, L23], M_TAU, int(1)),
        (&[L12, L13], M_TAU, -z(2)),
        (&[L13, L12], M_TAU_INV, int(1)),
        (&[L12, L23], M_TAU_INV, -z(2)),
    ]);
    out.extend(with_sigma_image(m, "g", g));
    out
}

fn e_rho(m: &VermaModule) -> Vec<NamedVector> {
    let mut out = twisted_family(m, "e", 2, 1);
    let c = m.vector(&[
        (&[L13, L12], M_TAU, z(1)),
        (&[L12, L23], M_TAU, int(-1)),
        (&[L12, L23], M_TAU_INV, int(1)),
        (&[L13, L12], M_TAU_INV, -z(-1)),
    ]);
    out.extend(with_sigma_image(m, "c", c));
    out
}

/// The variant `e_i = zeta^i (1 - sigma tau^i) x_{sigma tau^i} m_tau`.
pub fn e_rho_alternative(m: &VermaModule) -> Vec<NamedVector> {
    twisted_family(m, "e", 0, 1)
}

fn e_plus(m: &VermaModule) -> Vec<NamedVector> {
    let mut out: Vec<NamedVector> = Letter::ALL
        .iter()
        .map(|&l| {
            named(
                format!("x{}", l.subscript()),
                m.vector(&[(&[l], 0, int(1))]),
            )
        })
        .collect();
    out.push(named("soc", m.soc_generators().remove(0)));
    out
}

/// Named generators of `m`, for the weights `sigma-`, `tau0`, `erho` and `e+`.
pub fn named_generators(m: &VermaModule) -> Result<Vec<NamedVector>, ModuleError> {
    let g = GroupData::s3();
    let id = g.weight_id(m.weight());
    match id.as_str() {
        "sigma-" => Ok(sigma_minus(m)),
        "tau0" => Ok(tau_zero(m)),
        "erho" => Ok(e_rho(m)),
        "e+" => Ok(e_plus(m)),
        _ => Err(ModuleError::UnknownGenerator {
            name: "*".into(),
            weight: id,
        }),
    }
}

/// A generator by name; `t<a>,<b>` gives `a me1 + b me3` in `M(sigma,-)`.
pub fn named_generator(m: &VermaModule, name: &str) -> Result<Vector, ModuleError> {
    let all = named_generators(m)?;
    if let Some(found) = all.iter().find(|n| n.name == name) {
        return Ok(found.vector.clone());
    }
    let unknown = || ModuleError::UnknownGenerator {
        name: name.into(),
        weight: GroupData::s3().weight_id(m.weight()),
    };
    let (a, b) = name
        .strip_prefix('t')
        .and_then(|rest| rest.split_once(','))
        .ok_or_else(unknown)?;
    let parse = |s: &str| s.trim().parse::<Cyc>().map_err(|_| unknown());
    let (a, b) = (parse(a)?, parse(b)?);
    let get = |n: &str| all.iter().find(|x| x.name == n).map(|x| x.vector.clone());
    let (e1, e3) = get("me1").zip(get("me3")).ok_or_else(unknown)?;
    Ok(add(&scaled(&e1, &a), &scaled(&e3, &b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_exist_for_four_weights() {
        let g = GroupData::s3();
        for (id, count) in [("sigma-", 13), ("tau0", 5), ("erho", 5), ("e+", 4)] {
            let m = VermaModule::build(g.parse_weight(id).unwrap());
            assert_eq!(named_generators(&m).unwrap().len(), count, "{id}");
        }
        let m = VermaModule::build(g.parse_weight("tau1").unwrap());
        assert!(named_generators(&m).is_err());
    }

    #[test]
    fn first_j_is_as_written() {
        let g = GroupData::s3();
        let m = VermaModule::build(g.parse_weight("tau0").unwrap());
        let base = m.vector(&[(&[L13], M_TAU, int(1))]);
        let expected = one_minus(&m, s3::T12, &base);
        assert_eq!(named_generator(&m, "j0").unwrap(), expected);
    }

    #[test]
    fn pencil_members() {
        let g = GroupData::s3();
        let m = VermaModule::build(g.parse_weight("sigma-").unwrap());
        let t = named_generator(&m, "t1,0").unwrap();
        assert_eq!(t, named_generator(&m, "me1").unwrap());
        assert!(named_generator(&m, "t1").is_err());
        assert!(named_generator(&m, "w").is_err());
    }
}
