"""Hopf braces: one shared coalgebra and unit carrying two Hopf structures.

The defining compatibility ties the second product to the first through
the canonical action gamma of the second structure on the first.  For
cocommutative braces there is additionally a right action phi of the
second structure on the carrier.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BraceAxiomsFailed, NotCocommutative, PrereqFailed
from .hopf import (AlgebraData, CoalgebraData, HopfAlgebraData, _check_map,
                   check_hopf, is_cocommutative)
from .linmap import LinMap, Space, braiding, compose, equation_entry, tensor
from .report import AxiomReport


@dataclass(frozen=True)
class HopfBraceData:
    space: Space
    unit: LinMap
    counit: LinMap
    coproduct: LinMap
    product1: LinMap
    antipode1: LinMap
    product2: LinMap
    antipode2: LinMap
    meta: dict | None = None

    def __post_init__(self):
        n, field = self.space.dim, self.unit.field
        _check_map(self.unit, 1, n, field, "unit")
        _check_map(self.counit, n, 1, field, "counit")
        _check_map(self.coproduct, n, n * n, field, "coproduct")
        for name in ("product1", "product2"):
            _check_map(getattr(self, name), n * n, n, field, name)
        for name in ("antipode1", "antipode2"):
            _check_map(getattr(self, name), n, n, field, name)

    @property
    def field(self):
        return self.unit.field

    def first(self) -> HopfAlgebraData:
        return HopfAlgebraData(
            algebra=AlgebraData(self.space, self.unit, self.product1),
            coalgebra=CoalgebraData(self.space, self.counit, self.coproduct),
            antipode=self.antipode1)

    def second(self) -> HopfAlgebraData:
        return HopfAlgebraData(
            algebra=AlgebraData(self.space, self.unit, self.product2),
            coalgebra=CoalgebraData(self.space, self.counit, self.coproduct),
            antipode=self.antipode2)


def gamma(b: HopfBraceData) -> LinMap:
    """Canonical left action of the second structure on the first:
    gamma = product1 o (antipode1 (x) product2) o (coproduct (x) id)."""
    id_h = LinMap.identity(b.field, b.space)
    return compose(
        b.product1,
        tensor(b.antipode1, b.product2),
        tensor(b.coproduct, id_h))


def check_hopf_brace(b: HopfBraceData) -> AxiomReport:
    """Both Hopf structures plus the product compatibility law."""
    rep = AxiomReport()
    rep.merge(check_hopf(b.first()), "first.")
    rep.merge(check_hopf(b.second()), "second.")
    field, space = b.field, b.space
    id_h = LinMap.identity(field, space)
    swap = braiding(field, space, space)
    lhs = compose(b.product2, tensor(id_h, b.product1))
    rhs = compose(
        b.product1,
        tensor(b.product2, gamma(b)),
        tensor(id_h, swap, id_h),
        tensor(b.coproduct, id_h, id_h))
    rep.append(equation_entry("compatibility", lhs, rhs))
    return rep


def phi(b: HopfBraceData) -> LinMap:
    """Right action of the second structure on the carrier, for
    cocommutative braces:
    phi = product2 o ((antipode2 o gamma) (x) product2) o (id (x) swap (x) id) o (coproduct (x) coproduct)."""
    if not is_cocommutative(b.first()):
        raise NotCocommutative("phi needs a cocommutative coproduct")
    field, space = b.field, b.space
    id_h = LinMap.identity(field, space)
    swap = braiding(field, space, space)
    return compose(
        b.product2,
        tensor(compose(b.antipode2, gamma(b)), b.product2),
        tensor(id_h, swap, id_h),
        tensor(b.coproduct, b.coproduct))


def check_brace_identities(b: HopfBraceData) -> AxiomReport:
    """Consequences of the brace axioms, checked exactly on verified braces:

    - exchanging the first antipode through the action,
    - each product recovered from the other one and the action.
    """
    base = check_hopf_brace(b)
    if not base.ok:
        raise PrereqFailed("identities are gated on check_hopf_brace", base)
    field, space = b.field, b.space
    id_h = LinMap.identity(field, space)
    swap = braiding(field, space, space)
    g = gamma(b)
    rep = AxiomReport()
    rep.append(equation_entry(
        "action_antipode_exchange",
        compose(g, tensor(id_h, b.antipode1)),
        compose(b.product1,
                tensor(compose(b.antipode1, b.product2), id_h),
                tensor(id_h, swap),
                tensor(b.coproduct, id_h))))
    rep.append(equation_entry(
        "product2_from_action",
        b.product2,
        compose(b.product1, tensor(id_h, g), tensor(b.coproduct, id_h))))
    rep.append(equation_entry(
        "product1_from_action",
        b.product1,
        compose(b.product2,
                tensor(id_h, compose(g, tensor(b.antipode2, id_h))),
                tensor(b.coproduct, id_h))))
    return rep


def trivial_brace(h: HopfAlgebraData) -> HopfBraceData:
    """Both structures equal to the given Hopf algebra."""
    base = check_hopf(h)
    if not base.ok:
        raise PrereqFailed("trivial brace is gated on check_hopf", base)
    return HopfBraceData(
        space=h.space, unit=h.unit, counit=h.counit, coproduct=h.coproduct,
        product1=h.product, antipode1=h.antipode,
        product2=h.product, antipode2=h.antipode)


def check_brace_morphism(f: LinMap, src: HopfBraceData,
                         dst: HopfBraceData) -> AxiomReport:
    """f is a Hopf morphism for both structures; action compatibility
    f o gamma = gamma o (f (x) f) follows and is reported as derived."""
    from .hopf import check_hopf_morphism

    rep = AxiomReport()
    rep.merge(check_hopf_morphism(f, src.first(), dst.first()), "first.")
    rep.merge(check_hopf_morphism(f, src.second(), dst.second()), "second.")
    rep.append(equation_entry(
        "derived.action",
        compose(f, gamma(src)),
        compose(gamma(dst), tensor(f, f))))
    return rep


def require_valid_brace(b: HopfBraceData) -> None:
    """Raise BraceAxiomsFailed unless b passes check_hopf_brace."""
    rep = check_hopf_brace(b)
    if not rep.ok:
        raise BraceAxiomsFailed("hopf brace axioms fail", rep)
