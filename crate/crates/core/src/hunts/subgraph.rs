use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use super::certificate::{Certificate, CertificateKind};
use super::{shells, HuntError};
use crate::cycles::SymCycle;
use crate::geom::{
    circle_param, circle_plane_intersection, equidistant_circle, Param, PlaneMeet, RCircle,
};
use crate::graph::{h_device, H_DEVICE_LABELS};
use crate::numtheory::{antipodal_dist_sq, phi_criteria};
use crate::qcore::{QPoint3, Rational};

/// The ten points of the H device in [`H_DEVICE_LABELS`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HDevice {
    pub x: [QPoint3; 5],
    pub y0: QPoint3,
    pub y1: QPoint3,
    pub y3: QPoint3,
    pub y4: QPoint3,
    pub z: QPoint3,
}

impl HDevice {
    pub fn points(&self) -> Vec<QPoint3> {
        let mut out = self.x.to_vec();
        out.extend([&self.y0, &self.y1, &self.y3, &self.y4, &self.z].map(Clone::clone));
        out
    }

    pub fn from_points(points: &[QPoint3]) -> Result<HDevice, HuntError> {
        if points.len() != H_DEVICE_LABELS.len() {
            return Err(HuntError::Precondition(format!(
                "expected 10 points, got {}",
                points.len()
            )));
        }
        Ok(HDevice {
            x: std::array::from_fn(|i| points[i].clone()),
            y0: points[5].clone(),
            y1: points[6].clone(),
            y3: points[7].clone(),
            y4: points[8].clone(),
            z: points[9].clone(),
        })
    }

    /// `|x2 - z|^2`, the distance the device forces to be monochromatic.
    pub fn forced_same_sq(&self) -> Rational {
        self.x[2].dist_sq(&self.z)
    }
}

/// How the device rules out a 3-coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `|x2 - z|^2 = h` meets the closure criteria.
    A { h: Rational },
    /// The circle about `x1, x3` has squared radius `m/n` with `n = 2 (mod 4)`
    /// and its antipodal squared distance meets the closure criteria.
    B {
        h: Rational,
        radius_sq: Rational,
        antipodal_sq: Rational,
    },
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::A { .. } => "A",
            Branch::B { .. } => "B",
        }
    }

    /// The squared step length the chain certificate uses.
    pub fn step_norm_sq(&self) -> &Rational {
        match self {
            Branch::A { h } => h,
            Branch::B { antipodal_sq, .. } => antipodal_sq,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphFound {
    pub device: HDevice,
    pub branch: Branch,
    pub params: (Param, Param),
    pub certificate: Certificate,
}

/// All pairs over `params` in shells of the larger index.
pub fn shell_pairs(params: &[Param]) -> Vec<(Param, Param)> {
    shells::<2>(params.len())
        .flatten()
        .map(|[a, b]| (params[a].clone(), params[b].clone()))
        .collect()
}

/// Circle about `x1, x3` when its squared radius has denominator 2 mod 4.
fn branch_b_circle(sym: &SymCycle) -> Result<Option<(RCircle, Rational)>, HuntError> {
    let s = equidistant_circle(sym.x(1), sym.x(3), sym.t())?;
    if s.radius_sq.denom().mod_floor(&BigInt::from(4)) != BigInt::from(2) {
        return Ok(None);
    }
    let antipodal = antipodal_dist_sq(&s.radius_sq)?;
    debug_assert!(phi_criteria(&antipodal).unwrap_or(false));
    Ok(Some((s, antipodal)))
}

pub(crate) fn h_device_certificate(
    t: u64,
    device: &HDevice,
    branch: &Branch,
    sym: &SymCycle,
) -> Certificate {
    let mut cert = Certificate::new(CertificateKind::HDevice, t, device.points())
        .with_edges(h_device().edges().iter().copied())
        .with("branch", branch.name())
        .with("z", &device.z)
        .with("h", device.forced_same_sq());
    if let Branch::B {
        radius_sq,
        antipodal_sq,
        ..
    } = branch
    {
        cert = cert
            .with("center", sym.x(1).midpoint(sym.x(3)))
            .with("radius_sq", radius_sq)
            .with("antipodal_sq", antipodal_sq);
    }
    cert
}

/// Complete a symmetric 5-cycle to an H device.
///
/// For each pair `(a, b)` in order, `y0` is the point of the circle about
/// `x4, x1` at parameter `a`, `y1` the point of the circle about `x0, x2` at
/// `b`, `y4, y3` their mirror images, and `z` a rational point of the circle
/// about `y0, y1` on the mirror plane. The first pair that yields ten
/// distinct points and a closing branch wins.
pub fn grotzsch_subgraph_hunt(
    sym: &SymCycle,
    pairs: &[(Param, Param)],
) -> Result<Option<SubgraphFound>, HuntError> {
    let t = sym.t().clone();
    let t_int = t
        .is_integer()
        .then(|| num_traits::ToPrimitive::to_u64(&t.to_integer()))
        .flatten()
        .ok_or_else(|| HuntError::Precondition(format!("t = {t} is not a positive integer")))?;
    let x = sym.points();
    let plane = sym.plane();
    let c0 = circle_param(&equidistant_circle(&x[4], &x[1], &t)?, &x[0])?;
    let c1 = circle_param(&equidistant_circle(&x[0], &x[2], &t)?, &x[1])?;
    let fallback = branch_b_circle(sym)?;

    let found = pairs.par_iter().find_map_first(|(a, b)| {
        let y0 = c0.point(a).ok()?;
        let y1 = c1.point(b).ok()?;
        let y4 = plane.reflect_point(&y0);
        let y3 = plane.reflect_point(&y1);
        let cz = equidistant_circle(&y0, &y1, &t).ok()?;
        let PlaneMeet::Points(zs) = circle_plane_intersection(&cz, plane) else {
            return None;
        };
        zs.into_iter().find_map(|z| {
            let device = HDevice {
                x: x.clone(),
                y0: y0.clone(),
                y1: y1.clone(),
                y3: y3.clone(),
                y4: y4.clone(),
                z,
            };
            let pts = device.points();
            let distinct = (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| pts[i] != pts[j]));
            if !distinct {
                return None;
            }
            let h = device.forced_same_sq();
            let branch = if phi_criteria(&h).ok()? {
                Branch::A { h }
            } else {
                let (s, antipodal) = fallback.clone()?;
                Branch::B {
                    h,
                    radius_sq: s.radius_sq,
                    antipodal_sq: antipodal,
                }
            };
            Some((device, branch, (a.clone(), b.clone())))
        })
    });
    let Some((device, branch, params)) = found else {
        return Ok(None);
    };
    let bad: Vec<_> = h_device()
        .edges()
        .iter()
        .filter(|&&(u, v)| device.points()[u].dist_sq(&device.points()[v]) != t)
        .copied()
        .collect();
    if !bad.is_empty() {
        return Err(HuntError::Internal(format!("H edges {bad:?} are inexact")));
    }
    let certificate = h_device_certificate(t_int, &device, &branch, sym);
    Ok(Some(SubgraphFound {
        device,
        branch,
        params,
        certificate,
    }))
}
