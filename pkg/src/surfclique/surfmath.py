"""Closed-form surface quantities and clique-count bounds.

Everything here is exact: integer square roots and ``Fraction``.  Here
``omega`` is the largest ``n`` such that ``K_n`` embeds in the surface,
except that it is fixed to 3 on the sphere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .embed import Surface

__all__ = [
    "SPHERE",
    "BoundReport",
    "omega_of",
    "complete_graph_genus",
    "complete_triangulates",
    "min_degree_cap",
    "small_degree_caps",
    "s_value",
    "clique_upper_bound",
    "theorem_lower_bound",
    "planar_bound",
    "irreducible_order_bound",
    "minimal_triangulation_order",
    "bound_report",
    "surfaces_down_to",
]

SPHERE = Surface(True, 0)
_KLEIN_BOTTLE = Surface(False, 2)
_PLUS_TWO = {Surface(True, 2), Surface(False, 2), Surface(False, 3)}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def omega_of(surface: Surface) -> int:
    if surface == SPHERE:
        return 3
    if surface == _KLEIN_BOTTLE:
        return 6
    # floor((7 + sqrt(D)) / 2) == (7 + isqrt(D)) // 2 for every D >= 0
    return (7 + isqrt(49 - 24 * surface.chi)) // 2


def complete_graph_genus(n: int, orientable: bool) -> int:
    """Orientable or non-orientable genus of ``K_n``."""
    if n < 3:
        raise ValueError(f"genus formula needs n >= 3, got {n}")
    if orientable:
        return _ceil_div((n - 3) * (n - 4), 12)
    if n == 7:
        return 3
    return _ceil_div((n - 3) * (n - 4), 6)


def complete_triangulates(surface: Surface) -> bool:
    """Whether ``K_omega`` triangulates the surface."""
    if surface == SPHERE:
        return True
    disc = 49 - 24 * surface.chi
    root = isqrt(disc)
    if root * root != disc or (7 + root) % 2:
        return False
    return (7 + root) // 2 == omega_of(surface)


def _require_not_sphere(surface: Surface) -> None:
    if surface == SPHERE:
        raise ValueError("bound requires a surface other than the sphere S0")


def min_degree_cap(surface: Surface, n: int) -> Fraction:
    """Upper bound ``6 + (omega**2 - 5*omega - 7) / n`` on the minimum degree."""
    _require_not_sphere(surface)
    if n < 1:
        raise ValueError("n must be positive")
    w = omega_of(surface)
    return 6 + Fraction(w * w - 5 * w - 7, n)


def s_value(omega: int) -> int:
    """``ceil(sqrt(omega + 11) - 3)``."""
    if omega < 3:
        raise ValueError(f"omega must be at least 3, got {omega}")
    m = omega + 11
    root = isqrt(m)
    ceil_root = root if root * root == m else root + 1
    return ceil_root - 3


def small_degree_caps(surface: Surface) -> dict[int, int]:
    """Minimum-degree caps for graphs with at least ``omega + j`` vertices.

    Key 1 covers graphs with at most ``omega + 1`` vertices (cap
    ``omega - 1``); keys ``2..s`` give ``omega - j + 1``.
    """
    _require_not_sphere(surface)
    w = omega_of(surface)
    caps = {1: w - 1}
    for j in range(2, s_value(w) + 1):
        caps[j] = w - j + 1
    return caps


def clique_upper_bound(surface: Surface, n: int) -> int:
    _require_not_sphere(surface)
    w = omega_of(surface)
    s = s_value(w)
    base = 5 * 2 ** (w - 1)
    if n <= w + s:
        return base
    return base + (n - w - s) * 2 ** (w - s + 1)


def theorem_lower_bound(surface: Surface, n: int) -> int:
    """Clique count of ``K_omega`` grown to ``n`` vertices by face splits."""
    w = omega_of(surface)
    if n < w:
        raise ValueError(f"lower bound needs n >= omega = {w}, got {n}")
    return 8 * (n - w) + 2 ** w


def planar_bound(n: int) -> int:
    """Maximum clique count of a planar graph on ``n >= 3`` vertices."""
    if n < 3:
        raise ValueError("planar bound needs n >= 3")
    return 8 * n - 16


def irreducible_order_bound(surface: Surface) -> int:
    return 22 - 13 * surface.chi


def minimal_triangulation_order(surface: Surface) -> int:
    """Number of vertices of a vertex-minimal triangulation."""
    w = omega_of(surface)
    if complete_triangulates(surface):
        return w
    if surface in _PLUS_TWO:
        return w + 2
    return w + 1


@dataclass(frozen=True)
class BoundReport:
    surface: Surface
    n: int
    omega: int
    s: int | None
    lower: int | None
    upper: int | None
    min_degree_cap: Fraction | None
    degree_caps: dict[int, int] = field(default_factory=dict)
    irreducible_order_bound: int = 0
    minimal_order: int = 0
    complete_triangulates: bool = False

    def as_dict(self) -> dict:
        cap = self.min_degree_cap
        return {
            "surface": self.surface.name,
            "chi": self.surface.chi,
            "n": self.n,
            "omega": self.omega,
            "s": self.s,
            "lower": self.lower,
            "upper": self.upper,
            "min_degree_cap": None if cap is None else f"{cap.numerator}/{cap.denominator}",
            "degree_caps": {str(j): c for j, c in sorted(self.degree_caps.items())},
            "irreducible_order_bound": self.irreducible_order_bound,
            "minimal_order": self.minimal_order,
            "complete_triangulates": self.complete_triangulates,
        }


def bound_report(surface: Surface, n: int) -> BoundReport:
    """Collect every closed-form quantity for ``surface`` at order ``n``.

    On the sphere the general lemmas do not apply; ``upper`` is then the
    planar bound ``8n - 16`` and the degree fields are empty.
    """
    if n < 1:
        raise ValueError("n must be positive")
    w = omega_of(surface)
    lower = theorem_lower_bound(surface, n) if n >= w else None
    common = dict(
        surface=surface,
        n=n,
        omega=w,
        lower=lower,
        irreducible_order_bound=irreducible_order_bound(surface),
        minimal_order=minimal_triangulation_order(surface),
        complete_triangulates=complete_triangulates(surface),
    )
    if surface == SPHERE:
        return BoundReport(s=None, upper=planar_bound(n) if n >= 3 else None,
                           min_degree_cap=None, **common)
    return BoundReport(
        s=s_value(w),
        upper=clique_upper_bound(surface, n),
        min_degree_cap=min_degree_cap(surface, n),
        degree_caps=small_degree_caps(surface),
        **common,
    )


def surfaces_down_to(min_chi: int) -> list[Surface]:
    """Every surface with Euler characteristic at least ``min_chi``."""
    out = []
    for chi in range(2, min_chi - 1, -1):
        if chi % 2 == 0:
            out.append(Surface(True, (2 - chi) // 2))
        if chi <= 1:
            out.append(Surface(False, 2 - chi))
    return out
