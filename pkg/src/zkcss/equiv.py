"""Transforms between randomized ZK encoders and CSS code pairs.

From an encoder ``(G, k_prime)``: ``C_X`` is the code spanned by ``G`` and
``C_Z`` is the set of vectors orthogonal to the randomness columns of ``G``
(its last ``k - k_prime`` columns). The Z-distance of the pair then measures
zero knowledge (``t``-ZK iff ``d_Z > t``) and the X-distance measures error
correction (decodable from ``e`` errors iff ``d_X > 2e``).

Going back, a CSS pair becomes an encoder over ``C_X`` whose randomness
columns are a basis of ``C_Z^perp``, completed to a generator of ``C_X``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .code import DEFAULT_BUDGET, LinearCode
from .css import CssCode, distance_x, distance_z
from .errors import DegenerateCodeError
from .matrix import Matrix, complete_basis
from .zkenc import (
    RandomizedEncoder,
    max_decoding_radius,
    max_zk_threshold,
)


@dataclass(frozen=True)
class ZkToCssResult:
    css: CssCode
    randomness_columns: tuple[int, ...]
    """Columns of the source generator whose span is ``C_Z^perp``."""


@dataclass(frozen=True)
class CssToZkResult:
    encoder: RandomizedEncoder
    randomness_columns: tuple[int, ...]
    """Columns of ``encoder.generator`` forming a basis of ``C_Z^perp``."""

    @property
    def generator(self) -> Matrix:
        return self.encoder.generator


def zk_to_css(E: RandomizedEncoder) -> ZkToCssResult:
    cols = tuple(range(E.k_prime, E.k))
    cx = E.code
    cz = LinearCode.from_parity_check(E.generator.take_cols(cols).T)
    try:
        Q = CssCode(cx, cz)
    except ValueError as exc:
        # the randomness columns lie in C by construction, so this cannot fail
        raise AssertionError(f"internal invariant broken in zk_to_css: {exc}") from exc
    return ZkToCssResult(Q, cols)


def css_to_zk(Q: CssCode) -> CssToZkResult:
    z_dual = Q.cz.dual()
    k = Q.cx.k
    k_prime = k - z_dual.k
    if k_prime < 1:
        raise DegenerateCodeError(
            f"CSS pair is degenerate: dim(C_X) - dim(C_Z^perp) = {k_prime}, but k_prime >= 1 is required"
        )
    G = complete_basis(z_dual.generator, Q.cx)
    return CssToZkResult(RandomizedEncoder(G, k_prime), tuple(range(k_prime, k)))


@dataclass
class RoundTripReport:
    """Each checked equality as ``(name, before, after, equal)``."""

    checks: list[tuple[str, object, object, bool]] = field(default_factory=list)

    def add(self, name: str, before, after, equal: bool | None = None):
        if equal is None:
            equal = before == after
        self.checks.append((name, before, after, bool(equal)))

    @property
    def ok(self) -> bool:
        return all(eq for *_, eq in self.checks)

    def __str__(self):
        return "\n".join(f"{'ok  ' if eq else 'FAIL'} {name}: {a} -> {b}" for name, a, b, eq in self.checks)


def roundtrip_check(E: RandomizedEncoder, *, method: str = "algebraic", budget: int = DEFAULT_BUDGET) -> RoundTripReport:
    """Send an encoder to its CSS pair and back; compare code and thresholds.

    ``method`` selects how thresholds are computed on both encoders:
    ``"algebraic"`` (from distances) or ``"oracle"`` (exhaustive definitions).
    The generator itself may change.
    """
    back = css_to_zk(zk_to_css(E).css).encoder
    report = RoundTripReport()
    report.add("code", E.code, back.code)
    report.add("k_prime", E.k_prime, back.k_prime)
    zk_method = "oracle" if method == "oracle" else "algebraic"
    dec_method = "pairwise" if method == "oracle" else "algebraic"
    report.add(
        "max t-ZK",
        max_zk_threshold(E, method=zk_method, budget=budget),
        max_zk_threshold(back, method=zk_method, budget=budget),
    )
    report.add(
        "max decodable e",
        max_decoding_radius(E, method=dec_method, budget=budget),
        max_decoding_radius(back, method=dec_method, budget=budget),
    )
    return report


def roundtrip_check_css(Q: CssCode, *, budget: int = DEFAULT_BUDGET) -> RoundTripReport:
    """Send a CSS pair to an encoder and back; both codes and distances must survive."""
    back = zk_to_css(css_to_zk(Q).encoder).css
    report = RoundTripReport()
    report.add("C_X", Q.cx, back.cx)
    report.add("C_Z", Q.cz, back.cz)
    report.add("d_X", distance_x(Q, budget=budget), distance_x(back, budget=budget))
    report.add("d_Z", distance_z(Q, budget=budget), distance_z(back, budget=budget))
    return report
