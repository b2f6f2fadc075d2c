"""Deformation coefficients r*s = rs + mu_1(r, s) t + mu_2(r, s) t^2 + ..."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .algebra import AlgebraElement, HeckeAlgebra, Monomial, NormalFormAlgebra
from .checks import ProductCache, monomial_pairs
from .const import _LOGGER
from .exceptions import DegreeLawViolation


def mu(algebra: NormalFormAlgebra, x: AlgebraElement, y: AlgebraElement, i: int) -> AlgebraElement:
    """Return mu_i(x, y) for t-free elements."""
    return algebra.multiply(x, y).t_coefficient(i)


def deformation_mu(algebra: HeckeAlgebra, r: Monomial, s: Monomial) -> list[AlgebraElement]:
    """Split r*s by t-power; entry i-1 of the result is mu_i(r, s).

    Every term of mu_i must have S(V)-degree deg r + deg s - 2i/d, where t^d
    is the t-power carried by one bracket.
    """
    if r.tpow or s.tpow:
        raise ValueError("deformation coefficients are defined on t-free monomials")
    product = algebra.multiply(AlgebraElement.monomial(r), AlgebraElement.monomial(s))
    _check_degree_law(algebra, r, s, product)
    top = max(product.t_powers(), default=0)
    return [product.t_coefficient(i) for i in range(1, top + 1)]


def _check_degree_law(
    algebra: NormalFormAlgebra, r: Monomial, s: Monomial, product: AlgebraElement
) -> None:
    step = algebra.bracket_tpow
    for mono in product.terms:
        if mono.tpow % step:
            raise DegreeLawViolation(f"t^{mono.tpow} is not a multiple of t^{step}", (r, s))
        expected = r.degree + s.degree - 2 * mono.tpow // step
        if mono.degree != expected:
            raise DegreeLawViolation(
                f"term {mono} has degree {mono.degree}, expected {expected}", (r, s)
            )


@dataclass(frozen=True, slots=True)
class DegreeLawReport:
    """Outcome of degree_law_check."""

    passed: bool
    pairs_checked: int


def degree_law_check(algebra: HeckeAlgebra, degree_bound: int) -> DegreeLawReport:
    """Run deformation_mu on every basis pair up to the bound."""
    checked = 0
    for r, s in monomial_pairs(algebra, degree_bound):
        deformation_mu(algebra, r, s)
        checked += 1
    return DegreeLawReport(True, checked)


def low_degree_mu_vanishes(algebra: HeckeAlgebra) -> bool:
    """Check mu_i(G, G) = mu_i(G, V) = mu_i(V, G) = 0 for all i."""
    n = algebra.dim
    groups = [Monomial((0,) * n, g) for g in range(algebra.group.order)]
    variables = [Monomial(tuple(int(k == i) for k in range(n))) for i in range(n)]
    pairs = [
        *((x, y) for x in groups for y in groups),
        *((x, v) for x in groups for v in variables),
        *((v, x) for v in variables for x in groups),
    ]
    return all(not any(deformation_mu(algebra, x, y)) for x, y in pairs)


def mu1_skew(algebra: HeckeAlgebra, i: int, j: int) -> AlgebraElement:
    """Return mu_1(v_j, v_i) - mu_1(v_i, v_j)."""
    vi, vj = algebra.variable(i), algebra.variable(j)
    return mu(algebra, vj, vi, 1) - mu(algebra, vi, vj, 1)


@dataclass(frozen=True, slots=True)
class HochschildReport:
    """Outcome of hochschild_check."""

    passed: bool
    triples_checked: int
    witness: tuple[Monomial, Monomial, Monomial] | None = None


def hochschild_check(
    algebra: HeckeAlgebra, sample_triples: Iterable[tuple[Monomial, Monomial, Monomial]]
) -> HochschildReport:
    """Check mu_1(w, r)s + mu_1(wr, s) = mu_1(w, rs) + w mu_1(r, s) with crossed-product juxtaposition."""
    crossed = ProductCache(algebra.crossed())
    deformed = ProductCache(algebra)

    def mu1(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        return deformed(x, y).t_coefficient(1)

    checked = 0
    for w, r, s in sample_triples:
        checked += 1
        ew, er, es = (AlgebraElement.monomial(m) for m in (w, r, s))
        left = crossed(mu1(ew, er), es) + mu1(crossed(ew, er), es)
        right = mu1(ew, crossed(er, es)) + crossed(ew, mu1(er, es))
        if left != right:
            _LOGGER.debug("%s; Hochschild identity fails at %s", algebra.group.name, (w, r, s))
            return HochschildReport(False, checked, (w, r, s))
    return HochschildReport(True, checked)
