"""Mod-2 framing calculus on the boundary tori of a surgery presentation.

The link complement inside the standard solid torus carries the frame
``(d/dtheta, d/dx, d/dy)``.  Measured against the Lie-group framing of each
boundary torus, it turns once along each surgery curve ``sigma_i`` and not at
all along ``sigma_inf``.  A frame extends over a glued-in solid torus exactly
when it turns an odd number of times along the meridian, so only parities
are tracked.

Twisting the frame once along a properly embedded surface adds one turn
along every boundary curve that meets the surface, i.e. the intersection
parity.  Surfaces are bookkept as homology classes
``sum(a_i Sigma_i) + a_inf Sigma_inf``.  Representing such a class by
surfaces transverse to the first frame vector needs ``|a_inf|`` large, but
mod 2 only ``a_inf = 1`` matters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .braids import FramedLink, closure_components, self_linking
from .gf2 import DimensionError, Gf2Vector, InternalInvariantError, LinkingParity, solve_framing_system

INF = "inf"


@dataclass(frozen=True, order=True)
class SurgeryCurveId:
    """``sigma_i`` for ``index`` in ``1..n``, or ``sigma_inf`` when ``index`` is None."""

    index: Optional[int] = None

    @classmethod
    def infinity(cls) -> "SurgeryCurveId":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.index is None

    def check(self, n: int) -> None:
        if self.index is not None and not 1 <= self.index <= n:
            raise IndexError(f"surgery curve sigma_{self.index} outside 1..{n}")

    def __str__(self) -> str:
        return "sigma_inf" if self.index is None else f"sigma_{self.index}"


@dataclass(frozen=True, order=True)
class SurfaceClassId:
    """``Sigma_i`` for ``index`` in ``1..n``, or ``Sigma_inf`` when ``index`` is None."""

    index: Optional[int] = None

    @classmethod
    def infinity(cls) -> "SurfaceClassId":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.index is None

    def check(self, n: int) -> None:
        if self.index is not None and not 1 <= self.index <= n:
            raise IndexError(f"surface class Sigma_{self.index} outside 1..{n}")

    def __str__(self) -> str:
        return "Sigma_inf" if self.index is None else f"Sigma_{self.index}"


def curves(n: int) -> list[SurgeryCurveId]:
    return [SurgeryCurveId(i) for i in range(1, n + 1)] + [SurgeryCurveId.infinity()]


@dataclass(frozen=True)
class TwistState:
    """Turn parity of the boundary framing along each of the ``n + 1`` surgery curves.

    ``parities[i - 1]`` belongs to ``sigma_i``; ``inf`` to ``sigma_inf``.
    """

    parities: tuple[int, ...]
    inf: int

    def __post_init__(self) -> None:
        for bit in self.parities + (self.inf,):
            if bit not in (0, 1):
                raise ValueError(f"twist parity {bit!r} is not a bit")

    @property
    def n(self) -> int:
        return len(self.parities)

    def __getitem__(self, curve: Union[SurgeryCurveId, int, str]) -> int:
        if isinstance(curve, str) and curve == INF:
            curve = SurgeryCurveId.infinity()
        elif isinstance(curve, int):
            curve = SurgeryCurveId(curve)
        curve.check(self.n)
        return self.inf if curve.is_infinity else self.parities[curve.index - 1]

    def as_dict(self) -> dict[str, int]:
        return {str(c): self[c] for c in curves(self.n)}

    def all_odd(self) -> bool:
        return self.inf == 1 and all(self.parities)


def base_twists(n: int) -> TwistState:
    """Turn parities of the unmodified frame: one turn along each ``sigma_i``, none along ``sigma_inf``."""
    if n < 0:
        raise ValueError(f"component count must be non-negative, got {n}")
    return TwistState((1,) * n, 0)


def intersection_parity(curve: SurgeryCurveId, surface: SurfaceClassId, lp: LinkingParity) -> int:
    """Mod-2 intersection number of a surgery curve with the boundary of a surface class."""
    curve.check(lp.n)
    surface.check(lp.n)
    if curve.is_infinity:
        return 1 if surface.is_infinity else 0
    if surface.is_infinity:
        return 1
    if curve.index == surface.index:
        return 1
    return lp.lk(curve.index - 1, surface.index - 1)


def apply_surface_twists(base: TwistState, a: Gf2Vector, a_inf: int, lp: LinkingParity) -> TwistState:
    """Add one twist along each surface in ``sum(a_i Sigma_i) + a_inf Sigma_inf``."""
    n = lp.n
    if base.n != n or len(a) != n:
        raise DimensionError(
            f"twist state on {base.n} curves and {len(a)} coefficients for {n} components"
        )
    if a_inf not in (0, 1):
        raise ValueError(f"a_inf must be a bit, got {a_inf!r}")
    aw = a.word
    words = lp.matrix.row_words
    # row i of L already encodes #(sigma_i, Sigma_j) including the diagonal
    parities = tuple(
        base.parities[i] ^ (bin(words[i] & aw).count("1") & 1) ^ a_inf for i in range(n)
    )
    return TwistState(parities, base.inf ^ a_inf)


@dataclass(frozen=True)
class ParallelisationCertificate:
    a: Gf2Vector
    resulting: TwistState
    a_inf: int = 1

    @property
    def valid(self) -> bool:
        return self.resulting.all_odd()


def compute_certificate(lp: LinkingParity) -> ParallelisationCertificate:
    """Choose surface twists making the frame extend over every glued torus.

    Raises:
        InternalInvariantError: if the twisted frame is not odd along every
            surgery curve, which cannot happen for valid input.
    """
    a = solve_framing_system(lp)
    resulting = apply_surface_twists(base_twists(lp.n), a, 1, lp)
    cert = ParallelisationCertificate(a=a, resulting=resulting, a_inf=1)
    if not cert.valid:
        raise InternalInvariantError(f"certificate not valid: {resulting.as_dict()}")
    return cert


def reverify_certificate(cert: ParallelisationCertificate, lp: LinkingParity) -> dict[str, int]:
    """Recompute each curve parity by summing the intersection table entry by entry."""
    n = lp.n
    surfaces = [SurfaceClassId(j) for j in range(1, n + 1)]
    out = {}
    base = base_twists(n)
    for curve in curves(n):
        total = base[curve]
        for j, s in enumerate(surfaces):
            total += cert.a[j] * intersection_parity(curve, s, lp)
        total += cert.a_inf * intersection_parity(curve, SurfaceClassId.infinity(), lp)
        out[str(curve)] = total % 2
    return out


@dataclass(frozen=True)
class ComponentVerdict:
    coefficient: int
    self_linking: int
    difference_parity: int
    extends: bool


@dataclass(frozen=True)
class EvenSurgeryReport:
    components: tuple[ComponentVerdict, ...]
    all_even: bool = field(default=False)

    @property
    def overall(self) -> bool:
        return all(c.extends for c in self.components)


def check_even_surgery(fl: FramedLink) -> EvenSurgeryReport:
    """Decide, per component, whether the contact frame extends over the surgery torus.

    Works with coefficients measured against the surface framing; the frame
    extends iff ``n_i - sl_i`` is odd.
    """
    count = closure_components(fl.braid).count
    verdicts = []
    for c in range(count):
        sl = self_linking(fl.braid, c)
        if sl % 2 == 0:
            raise InternalInvariantError(f"component {c} has even self-linking {sl}")
        n = fl.framings[c]
        diff = (n - sl) % 2
        verdicts.append(ComponentVerdict(n, sl, diff, diff == 1))
    return EvenSurgeryReport(tuple(verdicts), all(f % 2 == 0 for f in fl.framings))

