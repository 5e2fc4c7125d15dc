"""Matched pairs of Hopf algebras and their equivalence with Hopf braces.

A matched pair is two Hopf algebras with a left action of the second on
the first and a right action of the first on the second, compatible
through the interweaving map psi.  The diagonal subcategory (both Hopf
components equal, cocommutative, product absorbed by psi) is equivalent
to Hopf braces via functor_F / functor_G.
"""
from __future__ import annotations

from dataclasses import dataclass

from .actions import (LeftModuleData, RightModuleData, check_left_module,
                      check_module_coalgebra, check_right_module,
                      check_right_module_coalgebra)
from .brace import HopfBraceData, gamma, phi, require_valid_brace
from .errors import MpAxiomsFailed, NotCocommutative, NotDiagonal, PrereqFailed
from .hopf import (AlgebraData, CoalgebraData, HopfAlgebraData, _check_map,
                   check_hopf, is_cocommutative)
from .linmap import LinMap, braiding, compose, equation_entry, tensor
from .report import AxiomReport


@dataclass(frozen=True)
class MatchedPairData:
    """first is acted on from the left, second from the right:
    left_action : second (x) first -> first,
    right_action : second (x) first -> second."""

    first: HopfAlgebraData
    second: HopfAlgebraData
    left_action: LinMap
    right_action: LinMap
    meta: dict | None = None

    def __post_init__(self):
        na, nh, field = self.first.space.dim, self.second.space.dim, self.first.field
        _check_map(self.left_action, nh * na, na, field, "left action")
        _check_map(self.right_action, nh * na, nh, field, "right action")

    @property
    def field(self):
        return self.first.field


def psi(m: MatchedPairData) -> LinMap:
    """The interweaving map second (x) first -> first (x) second."""
    a, h, field = m.first, m.second, m.field
    return compose(
        tensor(m.left_action, m.right_action),
        tensor(LinMap.identity(field, h.space),
               braiding(field, h.space, a.space),
               LinMap.identity(field, a.space)),
        tensor(h.coproduct, a.coproduct))


def check_matched_pair(m: MatchedPairData) -> AxiomReport:
    """The six matched pair axioms.

    (i)   module coalgebra structures on both sides
    (ii)  the left action fixes the unit
    (iii) the right action by the unit collapses
    (iv)  the left action distributes over the product through psi
    (v)   the right action distributes over the product through psi
    (vi)  psi braids the two actions
    """
    a, h, field = m.first, m.second, m.field
    for name, component in (("first", a), ("second", h)):
        base = check_hopf(component)
        if not base.ok:
            raise PrereqFailed(f"{name} component fails the Hopf axioms", base)
    id_a = LinMap.identity(field, a.space)
    id_h = LinMap.identity(field, h.space)
    rep = AxiomReport()
    left = LeftModuleData(hopf=h, carrier=a.space, action=m.left_action)
    left_rep = check_left_module(left)
    rep.merge(left_rep, "i.left_module.")
    if left_rep.ok:
        rep.merge(check_module_coalgebra(left, a.coalgebra), "i.left_module.")
    right = RightModuleData(hopf=a, carrier=h.space, action=m.right_action)
    right_rep = check_right_module(right)
    rep.merge(right_rep, "i.right_module.")
    if right_rep.ok:
        rep.merge(check_right_module_coalgebra(right, h.coalgebra),
                  "i.right_module.")
    rep.append(equation_entry(
        "ii",
        compose(m.left_action, tensor(id_h, a.unit)),
        compose(a.unit, h.counit)))
    rep.append(equation_entry(
        "iii",
        compose(m.right_action, tensor(h.unit, id_a)),
        compose(h.unit, a.counit)))
    ps = psi(m)
    rep.append(equation_entry(
        "iv",
        compose(m.left_action, tensor(id_h, a.product)),
        compose(a.product, tensor(id_a, m.left_action), tensor(ps, id_a))))
    rep.append(equation_entry(
        "v",
        compose(m.right_action, tensor(h.product, id_a)),
        compose(h.product, tensor(m.right_action, id_h), tensor(id_h, ps))))
    rep.append(equation_entry(
        "vi",
        compose(braiding(field, a.space, h.space), ps),
        compose(tensor(m.right_action, m.left_action),
                tensor(id_h, braiding(field, h.space, a.space), id_a),
                tensor(h.coproduct, a.coproduct))))
    return rep


def _is_diagonal(m: MatchedPairData) -> bool:
    a, h = m.first, m.second
    return (a.space.dim == h.space.dim
            and a.unit == h.unit and a.product == h.product
            and a.counit == h.counit and a.coproduct == h.coproduct
            and a.antipode == h.antipode)


def check_mp_over_A(m: MatchedPairData) -> AxiomReport:
    """Matched pair axioms plus the diagonal interweaving identity
    product = product o psi; both Hopf components must coincide and be
    cocommutative."""
    if not _is_diagonal(m):
        raise NotDiagonal("both Hopf components must have equal structure constants")
    if not is_cocommutative(m.first):
        raise NotCocommutative("diagonal matched pairs need a cocommutative coproduct")
    rep = check_matched_pair(m)
    rep.append(equation_entry(
        "interweaving_identity",
        m.first.product,
        compose(m.first.product, psi(m))))
    return rep


def require_valid_mp_over_A(m: MatchedPairData) -> None:
    rep = check_mp_over_A(m)
    if not rep.ok:
        raise MpAxiomsFailed("diagonal matched pair axioms fail", rep)


# ---------------------------------------------------------------------------
# functors between braces and diagonal matched pairs

def functor_F(b: HopfBraceData) -> MatchedPairData:
    """Brace to diagonal matched pair: the second structure acting on
    itself by gamma (left) and phi (right)."""
    if not is_cocommutative(b.first()):
        raise NotCocommutative("matched pair extraction needs cocommutativity")
    require_valid_brace(b)
    h2 = b.second()
    return MatchedPairData(
        first=h2, second=h2, left_action=gamma(b), right_action=phi(b))


def functor_G(m: MatchedPairData) -> HopfBraceData:
    """Diagonal matched pair to brace: first product deformed along the
    left action, second the original Hopf structure."""
    require_valid_mp_over_A(m)
    a, field = m.first, m.field
    id_a = LinMap.identity(field, a.space)
    product1 = compose(
        a.product,
        tensor(id_a, compose(m.left_action, tensor(a.antipode, id_a))),
        tensor(a.coproduct, id_a))
    antipode1 = compose(m.left_action, tensor(id_a, a.antipode), a.coproduct)
    return HopfBraceData(
        space=a.space, unit=a.unit, counit=a.counit, coproduct=a.coproduct,
        product1=product1, antipode1=antipode1,
        product2=a.product, antipode2=a.antipode)


def roundtrip_FG(m: MatchedPairData) -> AxiomReport:
    """Componentwise equality of m and F(G(m))."""
    back = functor_F(functor_G(m))
    rep = AxiomReport()
    rep.append(equation_entry("unit", back.first.unit, m.first.unit))
    rep.append(equation_entry("counit", back.first.counit, m.first.counit))
    rep.append(equation_entry("coproduct", back.first.coproduct, m.first.coproduct))
    rep.append(equation_entry("product", back.first.product, m.first.product))
    rep.append(equation_entry("antipode", back.first.antipode, m.first.antipode))
    rep.append(equation_entry("left_action", back.left_action, m.left_action))
    rep.append(equation_entry("right_action", back.right_action, m.right_action))
    return rep


def roundtrip_GF(b: HopfBraceData) -> AxiomReport:
    """Componentwise equality of b and G(F(b))."""
    back = functor_G(functor_F(b))
    rep = AxiomReport()
    rep.append(equation_entry("unit", back.unit, b.unit))
    rep.append(equation_entry("counit", back.counit, b.counit))
    rep.append(equation_entry("coproduct", back.coproduct, b.coproduct))
    rep.append(equation_entry("product1", back.product1, b.product1))
    rep.append(equation_entry("antipode1", back.antipode1, b.antipode1))
    rep.append(equation_entry("product2", back.product2, b.product2))
    rep.append(equation_entry("antipode2", back.antipode2, b.antipode2))
    return rep


def obt_from_matched_pair(m: MatchedPairData):
    """The opposite brace triple induced directly by a diagonal matched
    pair: action = left_action o (antipode (x) id), involution =
    left_action o (id (x) antipode) o coproduct."""
    from .obt import OppBraceTripleData

    require_valid_mp_over_A(m)
    a, field = m.first, m.field
    id_a = LinMap.identity(field, a.space)
    action = compose(m.left_action, tensor(a.antipode, id_a))
    involution = compose(m.left_action, tensor(id_a, a.antipode), a.coproduct)
    return OppBraceTripleData(hopf=a, action=action, involution=involution)


def check_mp_morphism(f: LinMap, g: LinMap, src: MatchedPairData,
                      dst: MatchedPairData) -> AxiomReport:
    """(f, g) intertwines both Hopf structures and both actions."""
    from .hopf import check_hopf_morphism

    rep = AxiomReport()
    rep.merge(check_hopf_morphism(f, src.first, dst.first), "first.")
    rep.merge(check_hopf_morphism(g, src.second, dst.second), "second.")
    rep.append(equation_entry(
        "left_action",
        compose(f, src.left_action), compose(dst.left_action, tensor(g, f))))
    rep.append(equation_entry(
        "right_action",
        compose(g, src.right_action), compose(dst.right_action, tensor(g, f))))
    return rep
