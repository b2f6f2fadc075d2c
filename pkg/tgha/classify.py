"""Admissible classes, form families and their verification."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .const import _LOGGER
from .cocycle import TwoCocycle, commutator_ratio
from .cyclo import ONE, ZERO, Cyclotomic, as_cyclotomic
from .exceptions import (
    IdentityElement,
    InconsistentPropagation,
    InternalInconsistency,
    NotAdmissible,
    WrongCodimension,
    WrongGroupShape,
)
from .linalg import Matrix, Subspace, kernel
from .matgroup import FiniteMatrixGroup


@dataclass(frozen=True, slots=True)
class SkewForm:
    """Bilinear form a(v, w) = v^T M w on the standard basis."""

    matrix: Matrix

    def __call__(self, i: int, j: int) -> Cyclotomic:
        return self.matrix[i][j]

    def is_zero(self) -> bool:
        """Return whether the form vanishes."""
        return self.matrix.is_zero()

    def kernel(self) -> Subspace:
        """Return {v | a(v, w) = 0 for all w}."""
        return Subspace.span(self.matrix.dim, kernel(self.matrix.transpose()))

    def pullback(self, h: Matrix) -> SkewForm:
        """Return (v, w) -> a(h v, h w)."""
        return SkewForm(h.transpose() @ self.matrix @ h)

    def scale(self, factor: Cyclotomic | int | Fraction) -> SkewForm:
        """Return the scaled form."""
        return SkewForm(self.matrix.scale(factor))


@dataclass(frozen=True, eq=False)
class FormFamily:
    """The forms a_g, keyed by element index; absent means zero, index 0 is a_1."""

    group: FiniteMatrixGroup
    cocycle: TwoCocycle
    forms: Mapping[int, SkewForm] = field(default_factory=dict)

    def form(self, g: int) -> SkewForm | None:
        """Return a_g, or None when it vanishes."""
        return self.forms.get(g)

    def support(self) -> list[int]:
        """Return the elements with a nonzero form, sorted."""
        return sorted(g for g, a in self.forms.items() if not a.is_zero())

    def value(self, g: int, i: int, j: int) -> Cyclotomic:
        """Return a_g(e_i, e_j)."""
        a = self.forms.get(g)
        return a(i, j) if a is not None else ZERO

    def with_form(self, g: int, form: SkewForm) -> FormFamily:
        """Return a copy with a_g replaced."""
        return FormFamily(self.group, self.cocycle, {**self.forms, g: form})


@dataclass(frozen=True, slots=True)
class Admissibility:
    """Outcome of the determinant criterion for one element."""

    element: int
    codim: int
    admissible: bool
    witness: int | None = None
    det: Cyclotomic | None = None
    ratio: Cyclotomic | None = None


@dataclass(frozen=True, slots=True)
class ClassEntry:
    """One row of the classification table."""

    representative: int
    word: str
    size: int
    codim: int
    admissible: bool
    witness: int | None = None
    regular: bool = True


@dataclass(frozen=True, slots=True)
class ClassReport:
    """Per-class admissibility and the parameter space dimension."""

    classes: tuple[ClassEntry, ...]
    d: int
    inv2dim: int

    @property
    def total(self) -> int:
        """Return d + dim (Lambda^2 V)^G."""
        return self.d + self.inv2dim

    @property
    def admissible(self) -> tuple[int, ...]:
        """Return the representatives of the admissible classes."""
        return tuple(entry.representative for entry in self.classes if entry.admissible)

    def flags(self) -> tuple[tuple[int, bool], ...]:
        """Return (representative, admissible) pairs."""
        return tuple((entry.representative, entry.admissible) for entry in self.classes)


@dataclass(frozen=True, slots=True)
class Violation:
    """First failing condition found by verify_family."""

    condition: str
    elements: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        where = ", ".join(str(e) for e in self.elements)
        return f"{self.condition} fails at ({where}){'; ' + self.detail if self.detail else ''}"


@dataclass(frozen=True, slots=True)
class FamilyReport:
    """Outcome of verify_family."""

    passed: bool
    support: tuple[int, ...]
    conjugation_pairs: int = 0
    jacobi_triples: int = 0
    violation: Violation | None = None


def class_admissible(group: FiniteMatrixGroup, alpha: TwoCocycle, g: int) -> Admissibility:
    """Check codim V^g = 2 and det(h^perp) = alpha(h, g)/alpha(g, h) on C(g)."""
    if g == 0:
        raise IdentityElement("a_1 is handled by invariant_two_form_dim")
    codim = group.codim(g)
    if codim != 2:
        return Admissibility(g, codim, False)
    for h in group.centralizer(g):
        det = group.h_perp_det(g, h)
        ratio = commutator_ratio(alpha, h, g)
        if det != ratio:
            return Admissibility(g, codim, False, witness=h, det=det, ratio=ratio)
    return Admissibility(g, codim, True)


def invariant_two_form_dim(group: FiniteMatrixGroup) -> int:
    """Return dim (Lambda^2 V)^G by averaging the character of Lambda^2 V."""
    total = ZERO
    for g, m in enumerate(group.elements):
        trace = m.trace()
        square_trace = group.elements[group.mul(g, g)].trace()
        total = total + (trace * trace - square_trace) / 2
    average = total / group.order
    if not average.is_rational:
        raise InternalInconsistency(f"character average {average} is not rational")
    value = average.rational_value
    if value.denominator != 1 or value < 0:
        raise InternalInconsistency(f"character average {value} is not a nonnegative integer")
    return int(value)


def classify_all(group: FiniteMatrixGroup, alpha: TwoCocycle) -> ClassReport:
    """Run the determinant criterion on every nonidentity class."""
    entries = []
    for members in group.classes[1:]:
        g = members[0]
        result = class_admissible(group, alpha, g)
        entries.append(
            ClassEntry(
                representative=g,
                word=group.word(g),
                size=len(members),
                codim=result.codim,
                admissible=result.admissible,
                witness=result.witness,
                regular=all(alpha(g, h) == alpha(h, g) for h in group.centralizer(g)),
            )
        )
    d = sum(1 for entry in entries if entry.admissible)
    inv2dim = invariant_two_form_dim(group)
    _LOGGER.debug("%s; %s: d=%d, inv2dim=%d", group.name, alpha.name, d, inv2dim)
    return ClassReport(tuple(entries), d, inv2dim)


def canonical_form(group: FiniteMatrixGroup, g: int) -> SkewForm:
    """Return the skew form with kernel V^g and a(b1, b2) = 1 on the perp basis."""
    codim = group.codim(g)
    if codim != 2:
        raise WrongCodimension(g, codim)
    dual = group.adapted_basis(g).inverse()
    first, second = dual[0], dual[1]
    n = group.dim
    return SkewForm(
        Matrix(
            tuple(
                tuple(first[i] * second[j] - second[i] * first[j] for j in range(n))
                for i in range(n)
            )
        )
    )


def conjugation_factor(alpha: TwoCocycle, g: int, h: int) -> Cyclotomic:
    """Return alpha(h, h^-1)^-1 alpha(g, h) alpha(h^-1, gh)."""
    group = alpha.group
    h_inv = group.inv(h)
    return alpha(g, h) * alpha(h_inv, group.mul(g, h)) / alpha(h, h_inv)


def _is_invariant(group: FiniteMatrixGroup, form: SkewForm) -> bool:
    return all(form.pullback(m) == form for m in group.elements)


def propagate_family(
    group: FiniteMatrixGroup,
    alpha: TwoCocycle,
    seeds: Mapping[int, Cyclotomic | int | Fraction],
    identity_form: Matrix | None = None,
    *,
    force: bool = False,
) -> FormFamily:
    """Spread seeded canonical forms over their classes.

    a_k(v, w) = alpha(h, h^-1)^-1 alpha(g, h) alpha(h^-1, gh) a_g(h v, h w)
    for k = h^-1 g h. With force set, seeds skip the admissibility check.
    """
    forms: dict[int, SkewForm] = {}
    for g, seed in sorted(seeds.items()):
        seed = as_cyclotomic(seed)
        if not seed:
            continue
        if g == 0:
            raise IdentityElement("seed a_1 through identity_form")
        if not force:
            result = class_admissible(group, alpha, g)
            if not result.admissible:
                raise NotAdmissible(
                    f"class of {group.word(g)} is not admissible",
                    result.witness if result.witness is not None else g,
                )
        base = canonical_form(group, g).scale(seed)
        for h in range(group.order):
            k = group.conjugate(g, h)
            candidate = base.pullback(group.matrix(h)).scale(conjugation_factor(alpha, g, h))
            existing = forms.get(k)
            if existing is None:
                forms[k] = candidate
            elif existing != candidate:
                raise InconsistentPropagation(f"two definitions of a_{k}", (g, h))
    if identity_form is not None:
        form = SkewForm(identity_form)
        if not form.matrix.is_skew():
            raise WrongGroupShape("identity form is not skew-symmetric")
        if not _is_invariant(group, form):
            raise WrongGroupShape("identity form is not G-invariant")
        if not form.is_zero():
            forms[0] = form
    _LOGGER.debug("%s; propagated %d forms", group.name, len(forms))
    return FormFamily(group, alpha, forms)


def zero_family(group: FiniteMatrixGroup, alpha: TwoCocycle) -> FormFamily:
    """Return the family with every form zero."""
    return FormFamily(group, alpha, {})


def symplectic_reflection_family(
    group: FiniteMatrixGroup,
    alpha: TwoCocycle,
    omega: Matrix,
    class_params: Mapping[int, Cyclotomic | int | Fraction],
    c: Cyclotomic | int | Fraction = 0,
) -> FormFamily:
    """Return a_g = c_g omega_g on symplectic reflections and a_1 = c omega.

    omega_g is omega restricted to (V^g)^perp and zero on V^g; c_g is constant
    on classes and keyed by class representative.
    """
    base = SkewForm(omega)
    if not omega.is_skew() or not _is_invariant(group, base):
        raise WrongGroupShape("group does not preserve omega")
    forms: dict[int, SkewForm] = {}
    for g in range(1, group.order):
        param = as_cyclotomic(class_params.get(group.representative(g), 0))
        if not param or group.codim(g) != 2:
            continue
        adapted = group.adapted_basis(g)
        keep = Matrix(
            tuple(
                tuple(ONE if i == j and i < 2 else ZERO for j in range(group.dim))
                for i in range(group.dim)
            )
        )
        projection = adapted @ keep @ adapted.inverse()
        forms[g] = base.pullback(projection).scale(param)
    c = as_cyclotomic(c)
    if c:
        forms[0] = base.scale(c)
    return FormFamily(group, alpha, forms)


def verify_family(family: FormFamily) -> FamilyReport:
    """Check skewness, the conjugation condition, the Jacobi condition and the kernel conditions."""
    group, alpha = family.group, family.cocycle
    support = tuple(family.support())
    n = group.dim

    def failed(violation: Violation, pairs: int = 0, triples: int = 0) -> FamilyReport:
        _LOGGER.debug("%s; family check failed: %s", group.name, violation)
        return FamilyReport(False, support, pairs, triples, violation)

    for g in support:
        if not family.forms[g].matrix.is_skew():
            return failed(Violation("skew", (g,), "form is not skew-symmetric"))

    zero = SkewForm(Matrix.zeros(n))
    pairs = 0
    for g in range(group.order):
        a_g = family.forms.get(g, zero)
        for h in range(group.order):
            k = group.conjugate(g, h)
            a_k = family.forms.get(k, zero)
            if a_g.is_zero() and a_k.is_zero():
                continue
            pairs += 1
            expected = a_g.pullback(group.matrix(h)).scale(conjugation_factor(alpha, g, h))
            if a_k != expected:
                return failed(
                    Violation("conjugation", (g, h), f"a_{k} differs from the transported a_{g}"),
                    pairs,
                )

    triples = 0
    for g in support:
        m = group.matrix(g)
        a = family.forms[g]
        moved = [tuple(x - (ONE if r == c else ZERO) for r, x in enumerate(m.column(c))) for c in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    triples += 1
                    total = [
                        a(i, j) * moved[k][r] + a(j, k) * moved[i][r] + a(k, i) * moved[j][r]
                        for r in range(n)
                    ]
                    if any(total):
                        return failed(Violation("jacobi", (g, i, j, k)), pairs, triples)

    for g in support:
        if g == 0:
            continue
        codim = group.codim(g)
        if codim != 2:
            return failed(Violation("codim", (g,), f"codim V^g = {codim}"), pairs, triples)
        if family.forms[g].kernel() != group.fixed_space(g):
            return failed(Violation("kernel", (g,), "Ker a_g differs from V^g"), pairs, triples)

    if 0 in family.forms and not _is_invariant(group, family.forms[0]):
        return failed(Violation("invariance", (0,), "a_1 is not G-invariant"), pairs, triples)

    return FamilyReport(True, support, pairs, triples)
