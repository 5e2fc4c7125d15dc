"""Hopf algebras as structure-constant data, with exact axiom checkers.

All structure maps are LinMaps over one shared field:

    unit      : K -> H          product   : H (x) H -> H
    counit    : H -> K          coproduct : H -> H (x) H
    antipode  : H -> H

Construction validates shapes and fields only; the axioms are verified by
explicit checker calls which return AxiomReports with counterexample
witnesses.  Checkers accept data that is broken on purpose.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, NotAGroup, NotCocommutative, PrereqFailed
from .linmap import LinMap, Space, braiding, compose, equation_entry, tensor
from .report import AxiomReport
from .skewbraces import CayleyTable, check_group


def _require(cond: bool, message: str, exc=DimensionMismatch) -> None:
    if not cond:
        raise exc(message)


def _check_map(f: LinMap, dom: int, cod: int, field, what: str) -> None:
    _require(f.domain.dim == dom and f.codomain.dim == cod,
             f"{what} must be {cod}x{dom}, got {f.codomain.dim}x{f.domain.dim}")
    if f.field != field:
        raise FieldMismatch(f"{what} is over {f.field.name}, expected {field.name}")


@dataclass(frozen=True)
class AlgebraData:
    space: Space
    unit: LinMap
    product: LinMap

    def __post_init__(self):
        n, field = self.space.dim, self.unit.field
        _check_map(self.unit, 1, n, field, "unit")
        _check_map(self.product, n * n, n, field, "product")

    @property
    def field(self):
        return self.unit.field


@dataclass(frozen=True)
class CoalgebraData:
    space: Space
    counit: LinMap
    coproduct: LinMap

    def __post_init__(self):
        n, field = self.space.dim, self.counit.field
        _check_map(self.counit, n, 1, field, "counit")
        _check_map(self.coproduct, n, n * n, field, "coproduct")

    @property
    def field(self):
        return self.counit.field


@dataclass(frozen=True)
class HopfAlgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: LinMap
    meta: dict | None = None

    def __post_init__(self):
        n = self.algebra.space.dim
        _require(self.coalgebra.space.dim == n,
                 "algebra and coalgebra live on different spaces")
        _check_map(self.antipode, n, n, self.algebra.field, "antipode")
        if self.coalgebra.field != self.algebra.field:
            raise FieldMismatch("algebra and coalgebra fields differ")

    @property
    def space(self) -> Space:
        return self.algebra.space

    @property
    def field(self):
        return self.algebra.field

    @property
    def unit(self) -> LinMap:
        return self.algebra.unit

    @property
    def product(self) -> LinMap:
        return self.algebra.product

    @property
    def counit(self) -> LinMap:
        return self.coalgebra.counit

    @property
    def coproduct(self) -> LinMap:
        return self.coalgebra.coproduct


def make_hopf(unit: LinMap, product: LinMap, counit: LinMap, coproduct: LinMap,
              antipode: LinMap, meta: dict | None = None) -> HopfAlgebraData:
    """Assemble HopfAlgebraData from the five structure maps."""
    space = unit.codomain
    return HopfAlgebraData(
        algebra=AlgebraData(space, unit, product),
        coalgebra=CoalgebraData(space, counit, coproduct),
        antipode=antipode,
        meta=meta,
    )


# ---------------------------------------------------------------------------
# checkers

def check_algebra(a: AlgebraData) -> AxiomReport:
    field, space = a.field, a.space
    ident = LinMap.identity(field, space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "unit.left", compose(a.product, tensor(a.unit, ident)), ident))
    rep.append(equation_entry(
        "unit.right", compose(a.product, tensor(ident, a.unit)), ident))
    rep.append(equation_entry(
        "associativity",
        compose(a.product, tensor(a.product, ident)),
        compose(a.product, tensor(ident, a.product))))
    return rep


def check_coalgebra(c: CoalgebraData) -> AxiomReport:
    field, space = c.field, c.space
    ident = LinMap.identity(field, space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "counit.left", compose(tensor(c.counit, ident), c.coproduct), ident))
    rep.append(equation_entry(
        "counit.right", compose(tensor(ident, c.counit), c.coproduct), ident))
    rep.append(equation_entry(
        "coassociativity",
        compose(tensor(c.coproduct, ident), c.coproduct),
        compose(tensor(ident, c.coproduct), c.coproduct)))
    return rep


def convolve(f: LinMap, g: LinMap, c: CoalgebraData, a: AlgebraData) -> LinMap:
    """Convolution product (f * g) = product o (f (x) g) o coproduct."""
    return compose(a.product, tensor(f, g), c.coproduct)


def convolution_unit(c: CoalgebraData, a: AlgebraData) -> LinMap:
    """The convolution-neutral map unit o counit."""
    return compose(a.unit, c.counit)


def check_hopf(h: HopfAlgebraData) -> AxiomReport:
    """Algebra + coalgebra axioms, bialgebra compatibility, antipode identity."""
    field, space = h.field, h.space
    ident = LinMap.identity(field, space)
    id_k = LinMap.identity(field, Space(1))
    swap = braiding(field, space, space)
    rep = AxiomReport()
    rep.merge(check_algebra(h.algebra), "algebra.")
    rep.merge(check_coalgebra(h.coalgebra), "coalgebra.")
    # unit and product are coalgebra morphisms
    rep.append(equation_entry(
        "bialgebra.unit.counit", compose(h.counit, h.unit), id_k))
    rep.append(equation_entry(
        "bialgebra.unit.coproduct",
        compose(h.coproduct, h.unit), tensor(h.unit, h.unit)))
    rep.append(equation_entry(
        "bialgebra.product.counit",
        compose(h.counit, h.product), tensor(h.counit, h.counit)))
    rep.append(equation_entry(
        "bialgebra.product.coproduct",
        compose(h.coproduct, h.product),
        compose(tensor(h.product, h.product),
                tensor(ident, swap, ident),
                tensor(h.coproduct, h.coproduct))))
    neutral = convolution_unit(h.coalgebra, h.algebra)
    rep.append(equation_entry(
        "antipode.left",
        convolve(h.antipode, ident, h.coalgebra, h.algebra), neutral))
    rep.append(equation_entry(
        "antipode.right",
        convolve(ident, h.antipode, h.coalgebra, h.algebra), neutral))
    return rep


def is_commutative(h: HopfAlgebraData) -> bool:
    swap = braiding(h.field, h.space, h.space)
    return compose(h.product, swap) == h.product


def is_cocommutative(h: HopfAlgebraData) -> bool:
    swap = braiding(h.field, h.space, h.space)
    return compose(swap, h.coproduct) == h.coproduct


def check_antipode_properties(h: HopfAlgebraData) -> AxiomReport:
    """Anti-morphism properties of the antipode, on verified Hopf data.

    The involution entry is only meaningful (and only emitted) when the
    product is commutative or the coproduct is cocommutative.
    """
    base = check_hopf(h)
    if not base.ok:
        raise PrereqFailed("antipode properties are gated on check_hopf", base)
    field, space = h.field, h.space
    ident = LinMap.identity(field, space)
    swap = braiding(field, space, space)
    lam = h.antipode
    rep = AxiomReport()
    rep.append(equation_entry(
        "antimultiplicative",
        compose(lam, h.product),
        compose(h.product, swap, tensor(lam, lam))))
    rep.append(equation_entry(
        "anticomultiplicative",
        compose(h.coproduct, lam),
        compose(tensor(lam, lam), swap, h.coproduct)))
    rep.append(equation_entry("unit", compose(lam, h.unit), h.unit))
    rep.append(equation_entry("counit", compose(h.counit, lam), h.counit))
    if is_commutative(h) or is_cocommutative(h):
        rep.append(equation_entry("involution", compose(lam, lam), ident))
    return rep


def opposite_hopf(h: HopfAlgebraData) -> HopfAlgebraData:
    """Same data with the product reversed; gated on cocommutativity.

    For cocommutative data the original antipode still works for the
    opposite product, so no antipode inverse is needed.
    """
    if not is_cocommutative(h):
        raise NotCocommutative("opposite product needs a cocommutative coproduct")
    swap = braiding(h.field, h.space, h.space)
    return HopfAlgebraData(
        algebra=AlgebraData(h.space, h.unit, compose(h.product, swap)),
        coalgebra=h.coalgebra,
        antipode=h.antipode,
    )


def group_algebra(table: CayleyTable, field) -> HopfAlgebraData:
    """The group algebra over an exact field: basis = group elements,
    group-like coproduct, antipode = inversion."""
    grp = check_group(table)
    if not grp.ok:
        raise NotAGroup("table fails the group axioms", grp)
    n, e = table.order, table.identity
    one = field.one()
    space = Space(n, table.label)
    unit = LinMap(field, Space(1), space, {(e, 0): one})
    product = LinMap(field, Space(n * n), space,
                     {(table.table[a][b], a * n + b): one
                      for a in range(n) for b in range(n)})
    counit = LinMap(field, space, Space(1), {(0, a): one for a in range(n)})
    coproduct = LinMap(field, space, Space(n * n),
                       {(a * n + a, a): one for a in range(n)})
    antipode = LinMap(field, space, space,
                      {(table.inverse(a), a): one for a in range(n)})
    meta = {"label": table.label} if table.label else None
    return make_hopf(unit, product, counit, coproduct, antipode, meta)


def check_hopf_morphism(f: LinMap, src: HopfAlgebraData,
                        dst: HopfAlgebraData) -> AxiomReport:
    """f intertwines units, products, counits, coproducts.

    Antipode compatibility is a consequence and is reported under a
    derived. prefix; it cannot fail when the primary entries pass on
    valid Hopf data.
    """
    _check_map(f, src.space.dim, dst.space.dim, src.field, "morphism")
    ff = tensor(f, f)
    rep = AxiomReport()
    rep.append(equation_entry("algebra.unit", compose(f, src.unit), dst.unit))
    rep.append(equation_entry(
        "algebra.product", compose(f, src.product), compose(dst.product, ff)))
    rep.append(equation_entry("coalgebra.counit", compose(dst.counit, f), src.counit))
    rep.append(equation_entry(
        "coalgebra.coproduct", compose(dst.coproduct, f), compose(ff, src.coproduct)))
    rep.append(equation_entry(
        "derived.antipode", compose(dst.antipode, f), compose(f, src.antipode)))
    return rep
