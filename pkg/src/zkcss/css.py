"""CSS code pairs ``(C_X, C_Z)`` with mutually orthogonal duals."""

from __future__ import annotations

import threading
from fractions import Fraction
from importlib import resources

import numpy as np

from .code import DEFAULT_BUDGET, LinearCode, min_weight_excluding
from .errors import DegenerateCodeError, OrthogonalityError


class CssCode:
    """A pair of codes of equal length whose duals are orthogonal.

    Orthogonality is checked on the dual bases (the parity-check rows) when
    the object is built; a failure raises :class:`OrthogonalityError` with a
    violating pair of dual vectors. Distances are computed on first use and
    cached.
    """

    def __init__(self, cx: LinearCode, cz: LinearCode):
        if cx.n != cz.n:
            raise ValueError(f"block lengths differ: {cx.n} vs {cz.n}")
        if cx.field != cz.field:
            raise ValueError(f"fields differ: {cx.field} vs {cz.field}")
        Hx, Hz = cx.parity_check.array, cz.parity_check.array
        gram = Hx @ Hz.T % cx.field.p
        if gram.any():
            i, j = (int(v) for v in np.argwhere(gram)[0])
            witness = (Hx[i].copy(), Hz[j].copy())
            raise OrthogonalityError(
                f"duals are not orthogonal: <{Hx[i].tolist()}, {Hz[j].tolist()}> = {int(gram[i, j])}",
                witness,
            )
        self.cx = cx
        self.cz = cz
        # dim(C_X) - dim(C_Z^perp) == dim(C_Z) - dim(C_X^perp) is automatic
        # for equal n; kept as a guard against a broken LinearCode
        assert cx.k - (cz.n - cz.k) == cz.k - (cx.n - cx.k)
        self._lock = threading.Lock()
        self._distances: dict[str, int] = {}

    @property
    def n(self) -> int:
        return self.cx.n

    @property
    def field(self):
        return self.cx.field

    @property
    def dimension(self) -> int:
        """``dim(C_X) - dim(C_Z^perp)``."""
        return self.cx.k - (self.n - self.cz.k)

    def is_degenerate(self) -> bool:
        return self.dimension == 0

    def swapped(self) -> CssCode:
        return CssCode(self.cz, self.cx)

    def __eq__(self, other):
        if not isinstance(other, CssCode):
            return NotImplemented
        return self.cx == other.cx and self.cz == other.cz

    def __hash__(self):
        return hash((self.cx, self.cz))

    def __repr__(self):
        return f"CssCode(n={self.n}, dim={self.dimension}, {self.field})"

    def _distance(self, which: str, budget: int) -> int:
        if which in self._distances:
            return self._distances[which]
        if self.is_degenerate():
            raise DegenerateCodeError("CSS dimension is zero; d_X and d_Z are undefined")
        if which == "x":
            value = min_weight_excluding(self.cx, self.cz.dual(), budget=budget)
        else:
            value = min_weight_excluding(self.cz, self.cx.dual(), budget=budget)
        with self._lock:
            self._distances.setdefault(which, value)
        return value


def new_css(cx: LinearCode, cz: LinearCode) -> CssCode:
    return CssCode(cx, cz)


def css_rate(Q: CssCode) -> Fraction:
    rate = Fraction(Q.cx.k - (Q.n - Q.cz.k), Q.n)
    assert rate == Fraction(Q.cz.k - (Q.n - Q.cx.k), Q.n)
    return rate


def distance_x(Q: CssCode, *, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest weight of a vector in ``C_X`` outside ``C_Z^perp``."""
    return Q._distance("x", budget)


def distance_z(Q: CssCode, *, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest weight of a vector in ``C_Z`` outside ``C_X^perp``."""
    return Q._distance("z", budget)


def distance(Q: CssCode, *, budget: int = DEFAULT_BUDGET) -> int:
    return min(distance_x(Q, budget=budget), distance_z(Q, budget=budget))


GALLERY_NAMES = ("steane", "shamir5", "threebit", "shor9")


def gallery_text(name: str) -> str:
    """Raw fixture file behind a gallery entry."""
    if name not in GALLERY_NAMES:
        raise KeyError(f"unknown gallery entry {name!r}; choose from {', '.join(GALLERY_NAMES)}")
    return resources.files("zkcss.data").joinpath(f"{name}.txt").read_text()


def gallery_entry(name: str) -> CssCode:
    from .equiv import zk_to_css
    from .formats import loads
    from .zkenc import RandomizedEncoder

    obj = loads(gallery_text(name)).obj
    if isinstance(obj, RandomizedEncoder):
        return zk_to_css(obj).css
    return obj


def gallery() -> dict[str, CssCode]:
    """Named fixture CSS codes.

    ``steane``: both sides the [7,4] Hamming code over GF(2).
    ``shamir5``: the pair obtained from the degree-1 Shamir encoder over GF(5).
    ``threebit``: the pair obtained from the 3-bit encoder with generator
    columns (1,0,1), (1,1,1) and one message symbol.
    ``shor9``: Shor's 9-bit pair, ``C_X`` the kernel of the in-block
    repetition checks and ``C_Z`` the kernel of the two block-parity checks.
    """
    return {name: gallery_entry(name) for name in GALLERY_NAMES}
