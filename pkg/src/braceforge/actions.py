"""Module actions of a Hopf algebra and their compatibility checkers.

A left module is an action H (x) M -> M; a right module acts from the
other side, M (x) H -> M.  Module-algebra and module-coalgebra checks
verify that a carrier algebra or coalgebra structure is respected, using
the diagonal action on tensor squares built from the coproduct of the
acting Hopf algebra and the explicit braiding.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PrereqFailed
from .hopf import AlgebraData, CoalgebraData, HopfAlgebraData, _check_map, check_hopf
from .linmap import LinMap, Space, braiding, compose, equation_entry, tensor
from .report import AxiomReport


@dataclass(frozen=True)
class LeftModuleData:
    hopf: HopfAlgebraData
    carrier: Space
    action: LinMap

    def __post_init__(self):
        h, m = self.hopf.space.dim, self.carrier.dim
        _check_map(self.action, h * m, m, self.hopf.field, "left action")


@dataclass(frozen=True)
class RightModuleData:
    hopf: HopfAlgebraData
    carrier: Space
    action: LinMap

    def __post_init__(self):
        h, m = self.hopf.space.dim, self.carrier.dim
        _check_map(self.action, m * h, m, self.hopf.field, "right action")


def check_left_module(m: LeftModuleData) -> AxiomReport:
    h, field = m.hopf, m.hopf.field
    id_m = LinMap.identity(field, m.carrier)
    id_h = LinMap.identity(field, h.space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "action.unit", compose(m.action, tensor(h.unit, id_m)), id_m))
    rep.append(equation_entry(
        "action.product",
        compose(m.action, tensor(id_h, m.action)),
        compose(m.action, tensor(h.product, id_m))))
    return rep


def check_right_module(m: RightModuleData) -> AxiomReport:
    h, field = m.hopf, m.hopf.field
    id_m = LinMap.identity(field, m.carrier)
    id_h = LinMap.identity(field, h.space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "action.unit", compose(m.action, tensor(id_m, h.unit)), id_m))
    rep.append(equation_entry(
        "action.product",
        compose(m.action, tensor(m.action, id_h)),
        compose(m.action, tensor(id_m, h.product))))
    return rep


def left_tensor_square_action(m: LeftModuleData) -> LinMap:
    """Diagonal action of H on M (x) M: act on both factors through the coproduct."""
    h, field = m.hopf, m.hopf.field
    id_m = LinMap.identity(field, m.carrier)
    return compose(
        tensor(m.action, m.action),
        tensor(LinMap.identity(field, h.space), braiding(field, h.space, m.carrier), id_m),
        tensor(h.coproduct, id_m, id_m))


def right_tensor_square_action(m: RightModuleData) -> LinMap:
    """Diagonal action of H on M (x) M from the right."""
    h, field = m.hopf, m.hopf.field
    id_m = LinMap.identity(field, m.carrier)
    return compose(
        tensor(m.action, m.action),
        tensor(id_m, braiding(field, m.carrier, h.space), LinMap.identity(field, h.space)),
        tensor(id_m, id_m, h.coproduct))


def check_module_algebra(m: LeftModuleData, alg: AlgebraData) -> AxiomReport:
    """The action respects a carrier algebra: units absorb, products distribute."""
    base = check_left_module(m)
    if not base.ok:
        raise PrereqFailed("module-algebra check is gated on check_left_module", base)
    h, field = m.hopf, m.hopf.field
    id_h = LinMap.identity(field, h.space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "carrier_unit",
        compose(m.action, tensor(id_h, alg.unit)),
        compose(alg.unit, h.counit)))
    rep.append(equation_entry(
        "carrier_product",
        compose(m.action, tensor(id_h, alg.product)),
        compose(alg.product, left_tensor_square_action(m))))
    return rep


def check_module_coalgebra(m: LeftModuleData, coa: CoalgebraData) -> AxiomReport:
    """The action respects a carrier coalgebra.

    Checked twice on purpose: once through the tensor-square action, once
    as "the action is a coalgebra morphism", plus a cross-assertion that
    the two routes agreed.
    """
    base = check_left_module(m)
    if not base.ok:
        raise PrereqFailed("module-coalgebra check is gated on check_left_module", base)
    h, field = m.hopf, m.hopf.field
    id_m = LinMap.identity(field, m.carrier)
    id_h = LinMap.identity(field, h.space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "carrier_counit",
        compose(coa.counit, m.action),
        tensor(h.counit, coa.counit)))
    via_square = compose(left_tensor_square_action(m), tensor(id_h, coa.coproduct))
    rep.append(equation_entry(
        "carrier_coproduct", compose(coa.coproduct, m.action), via_square))
    # same axiom stated as: the action is a coalgebra morphism from H (x) C to C
    via_morphism = compose(
        tensor(m.action, m.action),
        tensor(id_h, braiding(field, h.space, m.carrier), id_m),
        tensor(h.coproduct, coa.coproduct))
    rep.append(equation_entry(
        "morphism_counit",
        compose(coa.counit, m.action),
        tensor(h.counit, coa.counit)))
    rep.append(equation_entry(
        "morphism_coproduct", compose(coa.coproduct, m.action), via_morphism))
    rep.append(equation_entry("routes_agree", via_square, via_morphism))
    return rep


def check_right_module_coalgebra(m: RightModuleData, coa: CoalgebraData) -> AxiomReport:
    """Right-handed mirror of check_module_coalgebra."""
    base = check_right_module(m)
    if not base.ok:
        raise PrereqFailed("module-coalgebra check is gated on check_right_module", base)
    h, field = m.hopf, m.hopf.field
    id_m = LinMap.identity(field, m.carrier)
    id_h = LinMap.identity(field, h.space)
    rep = AxiomReport()
    rep.append(equation_entry(
        "carrier_counit",
        compose(coa.counit, m.action),
        tensor(coa.counit, h.counit)))
    via_square = compose(right_tensor_square_action(m), tensor(coa.coproduct, id_h))
    rep.append(equation_entry(
        "carrier_coproduct", compose(coa.coproduct, m.action), via_square))
    via_morphism = compose(
        tensor(m.action, m.action),
        tensor(id_m, braiding(field, m.carrier, h.space), id_h),
        tensor(coa.coproduct, h.coproduct))
    rep.append(equation_entry(
        "morphism_coproduct", compose(coa.coproduct, m.action), via_morphism))
    rep.append(equation_entry("routes_agree", via_square, via_morphism))
    return rep


def adjoint_action(h: HopfAlgebraData) -> LeftModuleData:
    """H acting on itself by the antipode-twisted sandwich action."""
    base = check_hopf(h)
    if not base.ok:
        raise PrereqFailed("adjoint action is gated on check_hopf", base)
    field, space = h.field, h.space
    id_h = LinMap.identity(field, space)
    action = compose(
        h.product,
        tensor(h.product, h.antipode),
        tensor(id_h, braiding(field, space, space)),
        tensor(h.coproduct, id_h))
    return LeftModuleData(hopf=h, carrier=space, action=action)
