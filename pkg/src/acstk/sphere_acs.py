"""The cross-product almost complex structure on the unit spheres inside
the imaginary quaternions and octonions, with an exact Nijenhuis-tensor
evaluator.

The 2-sphere sits in the imaginary part of the level-2 algebra and the
6-sphere in the imaginary part of the level-3 algebra.  For a base point
p and a tangent vector v, the structure is J_p(v) = p x v, where
u x v = (uv - vu)/2 is the commutator cross product of imaginary
elements.  Sphere points are produced by inverse stereographic
projection, which keeps every coordinate an exact rational.

The Nijenhuis tensor

    N(u, v) = [JU, JV] - [U, V] - J[JU, V] - J[U, JV]     (at p)

is evaluated by extending tangent vectors to the polynomial vector
fields U(x) = u - <u, x> x on the ambient imaginary space, extending J
to (JW)(x) = x x W(x), taking exact ambient Lie brackets by symbolic
differentiation, and letting the trailing J act at p.  No normalizing
factor (such as 1/4) is applied; conventions only matter up to nonzero
scale here and this one is fixed so frozen values stay stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cayley_dickson import CDElement, associator, basis_product
from .symfun import MultiPoly

#: sphere dimension -> level of the ambient doubling algebra
SPHERE_LEVEL = {2: 2, 6: 3}


def _level_for(sphere_dim: int) -> int:
    if sphere_dim not in SPHERE_LEVEL:
        raise ValueError(f"sphere dimension must be 2 or 6, got {sphere_dim}")
    return SPHERE_LEVEL[sphere_dim]


@dataclass(frozen=True)
class SpherePoint:
    """A point of S^2 or S^6: an imaginary element of exact unit norm."""

    vector: CDElement

    def __post_init__(self):
        if self.vector.level not in (2, 3):
            raise ValueError(
                f"sphere points live at level 2 or 3, got level {self.vector.level}"
            )
        if not self.vector.is_imaginary():
            raise ValueError("sphere points must be imaginary")
        if self.vector.norm_sq() != 1:
            raise ValueError(
                f"sphere points must have unit norm, got |p|^2 = {self.vector.norm_sq()}"
            )

    @property
    def sphere_dim(self) -> int:
        return (1 << self.vector.level) - 2

    def as_dict(self) -> dict:
        return self.vector.as_dict()


@dataclass(frozen=True)
class TangentVector:
    """A base point together with an exactly-orthogonal imaginary vector."""

    base: SpherePoint
    vector: CDElement

    def __post_init__(self):
        if self.vector.level != self.base.vector.level:
            raise ValueError(
                f"tangent level {self.vector.level} does not match base level "
                f"{self.base.vector.level}"
            )
        if not self.vector.is_imaginary():
            raise ValueError("tangent vectors must be imaginary")
        if self.vector.inner(self.base.vector) != 0:
            raise ValueError(
                "tangent vector is not orthogonal to its base point: "
                f"<v, p> = {self.vector.inner(self.base.vector)}"
            )

    def scale(self, q) -> "TangentVector":
        return TangentVector(self.base, self.vector * q)

    def as_dict(self) -> dict:
        return self.vector.as_dict()


def cross(u: CDElement, v: CDElement) -> CDElement:
    """Cross product (uv - vu)/2 of imaginary elements.

    Equal to the imaginary part of u*v, and to u*v itself when u and v
    are orthogonal.
    """
    u._check_level(v, "cross")
    for name, x in (("first", u), ("second", v)):
        if not x.is_imaginary():
            raise ValueError(f"cross product needs imaginary inputs; {name} has real part {x.real_part()}")
    return (u * v - v * u) * Fraction(1, 2)


def j_apply(t: TangentVector) -> TangentVector:
    """Apply J at the base point: v -> p x v.  Applying twice negates."""
    return TangentVector(t.base, cross(t.base.vector, t.vector))


def rational_sphere_point(sphere_dim: int, params: Sequence) -> SpherePoint:
    """Inverse stereographic projection from rational parameters.

    With s = sum(q_i^2) the point is (2q_1, ..., 2q_d, s - 1)/(s + 1) on
    the imaginary axes e_1..e_{d+1}; the all-zero parameter list gives
    the south pole -e_{d+1} and the norm is exactly 1 for any input.
    """
    level = _level_for(sphere_dim)
    qs = [q if isinstance(q, Fraction) else Fraction(q) for q in params]
    if len(qs) != sphere_dim:
        raise ValueError(
            f"S^{sphere_dim} needs {sphere_dim} stereographic parameters, got {len(qs)}"
        )
    s = sum((q * q for q in qs), Fraction(0))
    denom = s + 1
    coeffs = [Fraction(0)] + [2 * q / denom for q in qs] + [(s - 1) / denom]
    return SpherePoint(CDElement(level, tuple(coeffs)))


def tangent_projection(p: SpherePoint, w: CDElement) -> TangentVector:
    """Project an imaginary ambient vector onto the tangent space at p:
    w -> w - <w, p> p.  Idempotent; w = p maps to zero."""
    if w.level != p.vector.level:
        raise ValueError(
            f"cannot project a level-{w.level} vector at a level-{p.vector.level} point"
        )
    if not w.is_imaginary():
        raise ValueError(f"tangent projection needs an imaginary vector, got real part {w.real_part()}")
    return TangentVector(p, w - p.vector * w.inner(p.vector))


def random_sphere_point(sphere_dim: int, rng: random.Random) -> SpherePoint:
    params = [
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(sphere_dim)
    ]
    return rational_sphere_point(sphere_dim, params)


def random_tangent(p: SpherePoint, rng: random.Random) -> TangentVector:
    dim = 1 << p.vector.level
    coeffs = [Fraction(0)] + [
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(dim - 1)
    ]
    return tangent_projection(p, CDElement(p.vector.level, tuple(coeffs)))


# ----------------------------------------------------------------------
# Nijenhuis tensor via polynomial vector fields


def _ambient_variables(level: int) -> tuple[str, ...]:
    d = (1 << level) - 1
    return tuple(f"x{i}" for i in range(1, d + 1))


def _extension_field(u: CDElement, variables) -> list[MultiPoly]:
    """The canonical tangent extension U(x) = u - <u, x> x as a polynomial
    vector field on the ambient imaginary space (components on e_1..e_d)."""
    d = len(variables)
    coeffs = u.coeffs[1:]
    inner = MultiPoly.zero(variables)
    xs = [MultiPoly.variable(variables, v) for v in variables]
    for c, x in zip(coeffs, xs):
        if c:
            inner = inner + x * c
    return [MultiPoly.constant(variables, coeffs[i]) - inner * xs[i] for i in range(d)]


def _identity_field(variables) -> list[MultiPoly]:
    return [MultiPoly.variable(variables, v) for v in variables]


def _cross_fields(a: list[MultiPoly], b: list[MultiPoly], level: int) -> list[MultiPoly]:
    """Componentwise cross product of two imaginary-valued polynomial
    fields, via the basis structure constants (e_i e_j = sign e_k maps
    a_i b_j into component k for i != j; i = j lands in the real part
    and does not contribute)."""
    variables = a[0].variables
    d = len(variables)
    out = [MultiPoly.zero(variables) for _ in range(d)]
    for i in range(1, d + 1):
        if a[i - 1].is_zero():
            continue
        for j in range(1, d + 1):
            if i == j or b[j - 1].is_zero():
                continue
            sign, k = basis_product(level, i, j)
            prod = a[i - 1] * b[j - 1]
            out[k - 1] = (out[k - 1] + prod) if sign > 0 else (out[k - 1] - prod)
    return out


def lie_bracket(a: list[MultiPoly], b: list[MultiPoly]) -> list[MultiPoly]:
    """Ambient Lie bracket [A, B]_i = sum_j A_j dB_i/dx_j - B_j dA_i/dx_j,
    with exact symbolic differentiation."""
    variables = a[0].variables
    out = []
    for i in range(len(variables)):
        acc = MultiPoly.zero(variables)
        for j, name in enumerate(variables):
            acc = acc + a[j] * b[i].diff(name) - b[j] * a[i].diff(name)
        out.append(acc)
    return out


def _evaluate_field(field: list[MultiPoly], coords: Sequence[Fraction], level: int) -> CDElement:
    values = [f.evaluate(coords) for f in field]
    return CDElement(level, tuple([Fraction(0)] + values))


def nijenhuis(p: SpherePoint, u: TangentVector, v: TangentVector) -> CDElement:
    """Exact Nijenhuis tensor value N(u, v) at p; see the module docstring
    for the extension and sign conventions.  The result is an imaginary
    element, exactly tangent at p; it vanishes identically on S^2 and is
    nonzero for generic inputs on S^6."""
    if u.base != p or v.base != p:
        raise ValueError("nijenhuis arguments must be tangent at the given point")
    level = p.vector.level
    variables = _ambient_variables(level)
    x = _identity_field(variables)
    cap_u = _extension_field(u.vector, variables)
    cap_v = _extension_field(v.vector, variables)
    ju = _cross_fields(x, cap_u, level)
    jv = _cross_fields(x, cap_v, level)

    coords = p.vector.coeffs[1:]
    b1 = _evaluate_field(lie_bracket(ju, jv), coords, level)
    b2 = _evaluate_field(lie_bracket(cap_u, cap_v), coords, level)
    b3 = _evaluate_field(lie_bracket(ju, cap_v), coords, level)
    b4 = _evaluate_field(lie_bracket(cap_u, jv), coords, level)
    pv = p.vector
    return b1 - b2 - cross(pv, b3) - cross(pv, b4)


@dataclass(frozen=True)
class AssociatorComparison:
    """Side-by-side data for <N(u,v), w> against the associator [u,v,w].

    Purely an exploration instrument: no relation between the two is
    asserted.  `ratio` is populated only in the (never yet observed)
    event that the associator is a nonzero real scalar while the pairing
    is nonzero.
    """

    sphere_dim: int
    nijenhuis_value: CDElement
    pairing_with_w: Fraction
    associator_value: CDElement
    associator_real_part: Fraction
    ratio: Optional[Fraction]

    def as_dict(self) -> dict:
        return {
            "sphere": self.sphere_dim,
            "nijenhuis": self.nijenhuis_value.as_dict(),
            "pairing_with_w": str(self.pairing_with_w),
            "associator": self.associator_value.as_dict(),
            "associator_real_part": str(self.associator_real_part),
            "ratio": None if self.ratio is None else str(self.ratio),
        }


def compare_nijenhuis_associator(
    p: SpherePoint, u: TangentVector, v: TangentVector, w: TangentVector
) -> AssociatorComparison:
    """Evaluate <N(u,v), w> and [u,v,w] for tangent vectors at p."""
    if w.base != p:
        raise ValueError("comparison arguments must be tangent at the given point")
    n = nijenhuis(p, u, v)
    pairing = n.inner(w.vector)
    assoc = associator(u.vector, v.vector, w.vector)
    real = assoc.real_part()
    ratio = None
    if pairing != 0 and real != 0 and not assoc.imaginary_part():
        ratio = pairing / real
    return AssociatorComparison(p.sphere_dim, n, pairing, assoc, real, ratio)


@dataclass(frozen=True)
class JVerificationReport:
    """Result of sampling J over random rational points and tangents."""

    sphere_dim: int
    samples: int
    seed: int
    j_squared_negates: bool
    image_tangent: bool
    norm_preserved: bool
    example_point: Optional[CDElement] = None
    example_tangent: Optional[CDElement] = None

    @property
    def all_passed(self) -> bool:
        return self.j_squared_negates and self.image_tangent and self.norm_preserved

    def as_dict(self) -> dict:
        out = {
            "sphere": self.sphere_dim,
            "samples": self.samples,
            "seed": self.seed,
            "j_squared_is_minus_identity": self.j_squared_negates,
            "image_tangent": self.image_tangent,
            "norm_preserved": self.norm_preserved,
            "all_passed": self.all_passed,
        }
        if self.example_point is not None:
            out["example_point"] = self.example_point.as_dict()
            out["example_tangent"] = self.example_tangent.as_dict()
        return out


def verify_j_structure(sphere_dim: int, samples: int, seed: int = 0) -> JVerificationReport:
    """Check J^2 v = -v, tangency of Jv and |Jv|^2 = |v|^2 exactly on
    `samples` random stereographic points with random rational tangents."""
    _level_for(sphere_dim)
    rng = random.Random(seed)
    squared = tangent = normed = True
    example = None
    for _ in range(samples):
        p = random_sphere_point(sphere_dim, rng)
        t = random_tangent(p, rng)
        jt = j_apply(t)
        jjt = j_apply(jt)
        squared &= jjt.vector == -t.vector
        tangent &= jt.vector.inner(p.vector) == 0
        normed &= jt.vector.norm_sq() == t.vector.norm_sq()
        if example is None:
            example = (p.vector, t.vector)
    return JVerificationReport(
        sphere_dim,
        samples,
        seed,
        squared,
        tangent,
        normed,
        example[0] if example else None,
        example[1] if example else None,
    )
