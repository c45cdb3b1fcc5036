"""Exact arithmetic in the Cayley-Dickson tower of algebras over Q.

Level n is the algebra of dimension 2^n obtained by applying the doubling
construction n times to the rationals: level 0 is Q itself, level 1 the
complex rationals, level 2 the quaternions, level 3 the octonions and
level 4 the sedenions.  Coefficients are exact `fractions.Fraction`
values throughout, so structural claims (a nonzero associator, a failed
norm identity) are decided exactly instead of numerically.

The doubling product used everywhere is

    (a1, a2) * (b1, b2) = (a1*b1 - conj(b2)*a2,  b2*a1 + a2*conj(b1))

with conj(x1, x2) = (conj(x1), -x2).  Basis vectors are written
e_0 = 1, e_1, ..., e_{2^n - 1}; with this convention the level-2 basis
satisfies e1*e2 = e3, e2*e3 = e1, e3*e1 = e2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

Rational = Union[int, Fraction]

#: Exhaustive probes refuse to run above this level; basis-triple
#: searches grow as (2^n)^3.
PROBE_LEVEL_CAP = 5


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _conj_tuple(a):
    return (a[0],) + tuple(-c for c in a[1:])


def _mul_tuple(a, b):
    if len(a) == 1:
        return (a[0] * b[0],)
    h = len(a) // 2
    a1, a2, b1, b2 = a[:h], a[h:], b[:h], b[h:]
    first = tuple(
        x - y for x, y in zip(_mul_tuple(a1, b1), _mul_tuple(_conj_tuple(b2), a2))
    )
    second = tuple(
        x + y for x, y in zip(_mul_tuple(b2, a1), _mul_tuple(a2, _conj_tuple(b1)))
    )
    return first + second


@dataclass(frozen=True)
class CDElement:
    """An element of the level-n doubling algebra: 2^n exact rationals.

    Coefficient 0 is the real part.  Arithmetic between different levels
    is rejected; use :func:`embed` for an explicit zero-padded inclusion.
    """

    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"level must be non-negative, got {self.level}")
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if len(coeffs) != 1 << self.level:
            raise ValueError(
                f"level {self.level} elements need {1 << self.level} "
                f"coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, level: int) -> "CDElement":
        return cls(level, (Fraction(0),) * (1 << level))

    @classmethod
    def one(cls, level: int) -> "CDElement":
        return cls.scalar(level, 1)

    @classmethod
    def scalar(cls, level: int, value: Rational) -> "CDElement":
        coeffs = [Fraction(0)] * (1 << level)
        coeffs[0] = _frac(value)
        return cls(level, tuple(coeffs))

    @classmethod
    def basis(cls, level: int, index: int) -> "CDElement":
        """The basis vector e_index at the given level."""
        dim = 1 << level
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for level {level}")
        coeffs = [Fraction(0)] * dim
        coeffs[index] = Fraction(1)
        return cls(level, tuple(coeffs))

    @classmethod
    def from_coeffs(cls, level: int, coeffs: Iterable[Rational]) -> "CDElement":
        return cls(level, tuple(_frac(c) for c in coeffs))

    # ------------------------------------------------------------------
    # ring structure

    def _check_level(self, other: "CDElement", what: str):
        if self.level != other.level:
            raise ValueError(
                f"cannot {what} a level-{self.level} and a "
                f"level-{other.level} element"
            )

    def __add__(self, other: "CDElement") -> "CDElement":
        self._check_level(other, "add")
        return CDElement(self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._check_level(other, "subtract")
        return CDElement(self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CDElement):
            self._check_level(other, "multiply")
            return CDElement(self.level, _mul_tuple(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            q = _frac(other)
            return CDElement(self.level, tuple(a * q for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # ------------------------------------------------------------------
    # involution, norm, decomposition

    def conjugate(self) -> "CDElement":
        """Negate every imaginary coefficient (real part is preserved)."""
        return CDElement(self.level, _conj_tuple(self.coeffs))

    def norm_sq(self) -> Fraction:
        """Sum of squared coefficients; equals the real part of a * conj(a)."""
        return sum((c * c for c in self.coeffs), Fraction(0))

    def real_part(self) -> Fraction:
        return self.coeffs[0]

    def imaginary_part(self) -> "CDElement":
        return CDElement(self.level, (Fraction(0),) + self.coeffs[1:])

    def is_imaginary(self) -> bool:
        return self.coeffs[0] == 0

    def inner(self, other: "CDElement") -> Fraction:
        """Euclidean inner product of the coefficient vectors."""
        self._check_level(other, "pair")
        return sum((a * b for a, b in zip(self.coeffs, other.coeffs)), Fraction(0))

    # ------------------------------------------------------------------
    # serialization and display

    def as_dict(self) -> dict:
        return {"level": self.level, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "CDElement":
        return cls(int(data["level"]), tuple(Fraction(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            name = "1" if i == 0 else f"e{i}"
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def cd_multiply(a: CDElement, b: CDElement) -> CDElement:
    """Product under the recursive doubling rule; alias for ``a * b``."""
    return a * b


def associator(u: CDElement, v: CDElement, w: CDElement) -> CDElement:
    """(u*v)*w - u*(v*w).  Vanishes identically up to level 2, alternates
    at level 3, and fails to alternate from level 4 on."""
    u._check_level(v, "associate")
    v._check_level(w, "associate")
    return (u * v) * w - u * (v * w)


def embed(a: CDElement, target_level: int) -> CDElement:
    """Zero-padded inclusion into a higher level (explicit, never implicit)."""
    if target_level < a.level:
        raise ValueError(
            f"cannot embed a level-{a.level} element into level {target_level}"
        )
    pad = (Fraction(0),) * ((1 << target_level) - len(a.coeffs))
    return CDElement(target_level, a.coeffs + pad)


@lru_cache(maxsize=None)
def basis_product(level: int, i: int, j: int) -> tuple[int, int]:
    """Structure constants: e_i * e_j = sign * e_k, returned as (sign, k).

    Computed by structural induction on the doubling rule; products of
    basis vectors are always signed basis vectors.
    """
    if not (0 <= i < 1 << level and 0 <= j < 1 << level):
        raise ValueError(f"basis indices ({i}, {j}) out of range for level {level}")
    if level == 0:
        return (1, 0)
    h = 1 << (level - 1)
    if i < h and j < h:
        return basis_product(level - 1, i, j)
    if i < h and j >= h:
        s, k = basis_product(level - 1, j - h, i)
        return (s, k + h)
    if i >= h and j < h:
        s, k = basis_product(level - 1, i - h, j)
        return (s if j == 0 else -s, k + h)
    s, k = basis_product(level - 1, j - h, i - h)
    if j - h != 0:
        s = -s
    return (-s, k)


def _basis_associator(level: int, a: int, b: int, c: int) -> Optional[tuple[int, int]]:
    """[e_a, e_b, e_c] via the structure table: None when it vanishes,
    otherwise (coefficient, index).  Both triple products land on the same
    basis index (indices compose by XOR), so the associator is either zero
    or +-2 times one basis vector."""
    s1, m = basis_product(level, a, b)
    s2, x = basis_product(level, m, c)
    t1, m2 = basis_product(level, b, c)
    t2, y = basis_product(level, a, m2)
    left = (s1 * s2, x)
    right = (t1 * t2, y)
    if left == right:
        return None
    if x != y:
        # cannot happen for signed-basis products, but fail loudly
        raise AssertionError("basis associator with mismatched indices")
    return (left[0] - right[0], x)


def random_element(
    level: int,
    rng: random.Random,
    imaginary: bool = False,
    max_num: int = 6,
    max_den: int = 4,
) -> CDElement:
    """A random element with small rational coefficients (for probes/tests)."""
    coeffs = [
        Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        for _ in range(1 << level)
    ]
    if imaginary:
        coeffs[0] = Fraction(0)
    return CDElement(level, tuple(coeffs))


@dataclass(frozen=True)
class AlternativityReport:
    """Outcome of probing whether the associator alternates at one level."""

    level: int
    alternative: bool
    basis_checks: int
    random_checks: int
    witness_form: Optional[str] = None
    witness_u: Optional[CDElement] = None
    witness_v: Optional[CDElement] = None
    witness_associator: Optional[CDElement] = None

    def as_dict(self) -> dict:
        out = {
            "level": self.level,
            "alternative": self.alternative,
            "basis_checks": self.basis_checks,
            "random_checks": self.random_checks,
        }
        if self.witness_form is not None:
            out["witness"] = {
                "form": self.witness_form,
                "u": self.witness_u.as_dict(),
                "v": self.witness_v.as_dict(),
                "associator": self.witness_associator.as_dict(),
            }
        return out


def probe_alternative(level: int, samples: int = 200, seed: int = 0) -> AlternativityReport:
    """Probe the alternating law [u, v, w] = 0 whenever two arguments agree.

    Runs three searches: an exhaustive basis scan of repeated-argument
    associators, an exhaustive basis scan for antisymmetry failures
    [e_i, e_j, e_k] != -[e_j, e_i, e_k] (which yield a repeated-argument
    witness u = e_i + e_j), and random repeated-argument triples.  Any
    witness is re-verified with generic coefficient arithmetic before it
    is reported.
    """
    if level > PROBE_LEVEL_CAP:
        raise ValueError(
            f"probe level {level} exceeds the cost cap {PROBE_LEVEL_CAP}"
        )
    dim = 1 << level
    basis_checks = 0
    witness = None

    # Repeated-argument basis triples.  In every level of the tower these
    # vanish on pure basis vectors, but the scan is cheap and keeps the
    # claim honest.
    for i in range(dim):
        for j in range(dim):
            for (a, b, c), form in (
                ((i, i, j), "[u,u,v]"),
                ((i, j, j), "[u,v,v]"),
                ((i, j, i), "[u,v,u]"),
            ):
                basis_checks += 1
                if _basis_associator(level, a, b, c) is not None:
                    u, v = CDElement.basis(level, i), CDElement.basis(level, j)
                    trip = {
                        "[u,u,v]": (u, u, v),
                        "[u,v,v]": (u, v, v),
                        "[u,v,u]": (u, v, u),
                    }[form]
                    val = associator(*trip)
                    if val:
                        witness = (form, u, v, val)
                        break
            if witness:
                break
        if witness:
            break

    # Antisymmetry scan: a violation at (i, j, k) makes u = e_i + e_j a
    # concrete repeated-argument counterexample.
    if witness is None:
        for i in range(dim):
            for j in range(i + 1, dim):
                for k in range(dim):
                    basis_checks += 1
                    lhs = _basis_associator(level, i, j, k)
                    rhs = _basis_associator(level, j, i, k)
                    broken = (
                        (lhs is None) != (rhs is None)
                        or (lhs is not None and (lhs[0] != -rhs[0] or lhs[1] != rhs[1]))
                    )
                    if broken:
                        u = CDElement.basis(level, i) + CDElement.basis(level, j)
                        v = CDElement.basis(level, k)
                        val = associator(u, u, v)
                        if val:
                            witness = ("[u,u,v]", u, v, val)
                            break
                if witness:
                    break
            if witness:
                break

    rng = random.Random(seed)
    random_checks = 0
    for _ in range(samples):
        u = random_element(level, rng)
        v = random_element(level, rng)
        for form, trip in (
            ("[u,u,v]", (u, u, v)),
            ("[u,v,v]", (u, v, v)),
            ("[u,v,u]", (u, v, u)),
        ):
            random_checks += 1
            val = associator(*trip)
            if val and witness is None:
                witness = (form, u, v, val)

    if witness is None:
        return AlternativityReport(level, True, basis_checks, random_checks)
    form, u, v, val = witness
    return AlternativityReport(
        level, False, basis_checks, random_checks, form, u, v, val
    )
