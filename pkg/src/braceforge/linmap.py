"""Exact linear maps between finite-dimensional based spaces.

Scalars live in an exact field: arbitrary-precision rationals or a prime
field F_p.  A LinMap is a codomain x domain matrix of such scalars; the
matrix of f holds f(e_j) in column j.  Composition, the Kronecker tensor
product and the symmetric swap braiding are the primitives every other
module builds on.

Tensor index convention (pinned, shared with the file format): the basis
of A (x) B is ordered with the left factor major,

    index(i, j) = i * dim(B) + j.

The braiding c_{A,B} : A (x) B -> B (x) A maps e_i (x) e_j to e_j (x) e_i.
It is kept an explicit map in every formula (never inlined as an index
shuffle), so a different braiding can be swapped in at this one point.

Matrices are semantically dense; internally only nonzero entries are
keyed, which keeps composites of structure-constant maps (mostly
permutation-like) cheap at tensor-cube and tensor-fourth sizes.  All
values are immutable after construction.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DimensionMismatch, FieldMismatch
from .report import CheckEntry

# ---------------------------------------------------------------------------
# scalar fields

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid for n < 3.3e24
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_Q_RE = re.compile(r"(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?")
_FP_RE = re.compile(r"0|[1-9][0-9]*")


class Rationals:
    """Arbitrary-precision rational scalars, always reduced, denominator > 0.

    Canonical string form: "n" for integers, "n/d" otherwise with
    gcd(n, d) = 1, d > 1, and no leading zeros or explicit plus sign.
    """

    name = "Q"

    def zero(self) -> Fraction:
        return _Q_ZERO

    def one(self) -> Fraction:
        return _Q_ONE

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def coerce(self, v) -> Fraction:
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(v).__name__} into Q")
        return Fraction(v)

    def parse(self, s: str) -> Fraction:
        m = _Q_RE.fullmatch(s)
        if m is None:
            raise ValueError(f"not a canonical rational: {s!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return Fraction(num)
        den = int(m.group(2))
        if den == 1:
            raise ValueError(f"not a canonical rational (explicit /1): {s!r}")
        v = Fraction(num, den)
        if v.denominator != den:
            raise ValueError(f"not a canonical rational (not reduced): {s!r}")
        return v

    def format(self, v) -> str:
        v = Fraction(v)
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "Rationals()"


_Q_ZERO = Fraction(0)
_Q_ONE = Fraction(1)

QQ = Rationals()


class PrimeField:
    """Integers mod a prime p, representatives in [0, p).

    Canonical string form: the decimal residue, no leading zeros.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
            raise ValueError(f"modulus must be a prime integer, got {p!r}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("PrimeField is immutable")

    def __reduce__(self):
        return (PrimeField, (self.p,))

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def coerce(self, v) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"cannot coerce {type(v).__name__} into {self.name}")
        return v % self.p

    def parse(self, s: str) -> int:
        if _FP_RE.fullmatch(s) is None:
            raise ValueError(f"not a canonical residue: {s!r}")
        v = int(s)
        if v >= self.p:
            raise ValueError(f"residue {s} out of range for {self.name}")
        return v

    def format(self, v) -> str:
        return str(v % self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


Field = Union[Rationals, PrimeField]


def parse_field(spec: str) -> Field:
    """Parse a field spec string: "Q" or "Fp:<p>"."""
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        body = spec[3:]
        if not body.isdigit() or (body != "0" and body[0] == "0") or body == "":
            raise ValueError(f"bad field spec: {spec!r}")
        return PrimeField(int(body))
    raise ValueError(f"bad field spec: {spec!r}")


# ---------------------------------------------------------------------------
# spaces

@dataclass(frozen=True)
class Space:
    """A based space known only by its dimension, with an optional label."""

    dim: int
    label: str | None = None

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DimensionMismatch(f"space dimension must be >= 1, got {self.dim!r}")

    def tensor(self, other: "Space") -> "Space":
        return Space(self.dim * other.dim)


UNIT_SPACE = Space(1, "K")


# ---------------------------------------------------------------------------
# linear maps

class LinMap:
    """An exact matrix with explicit domain and codomain.

    entry(i, j) is the coefficient of the i-th codomain basis vector in the
    image of the j-th domain basis vector.
    """

    __slots__ = ("field", "domain", "codomain", "_nz")

    def __init__(self, field: Field, domain: Space, codomain: Space,
                 entries: Mapping[tuple[int, int], object]):
        nz = {}
        zero = field.zero()
        for (i, j), v in entries.items():
            if not (0 <= i < codomain.dim and 0 <= j < domain.dim):
                raise DimensionMismatch(
                    f"entry ({i},{j}) outside {codomain.dim}x{domain.dim}")
            v = field.coerce(v)
            if v != zero:
                nz[(i, j)] = v
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "_nz", nz)

    def __setattr__(self, *a):
        raise AttributeError("LinMap is immutable")

    def __reduce__(self):
        return (LinMap, (self.field, self.domain, self.codomain, dict(self._nz)))

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable[object]],
                  domain: Space | None = None,
                  codomain: Space | None = None) -> "LinMap":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix needs at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        dom = domain if domain is not None else Space(ncols)
        cod = codomain if codomain is not None else Space(len(rows))
        if dom.dim != ncols or cod.dim != len(rows):
            raise DimensionMismatch(
                f"declared spaces {cod.dim}x{dom.dim} do not match "
                f"matrix {len(rows)}x{ncols}")
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(field, dom, cod, entries)

    @classmethod
    def identity(cls, field: Field, space: Space) -> "LinMap":
        one = field.one()
        return cls(field, space, space, {(i, i): one for i in range(space.dim)})

    @classmethod
    def zero(cls, field: Field, domain: Space, codomain: Space) -> "LinMap":
        return cls(field, domain, codomain, {})

    # -- accessors ---------------------------------------------------------

    def entry(self, i: int, j: int):
        if not (0 <= i < self.codomain.dim and 0 <= j < self.domain.dim):
            raise DimensionMismatch(
                f"entry ({i},{j}) outside {self.codomain.dim}x{self.domain.dim}")
        return self._nz.get((i, j), self.field.zero())

    def items(self):
        """Nonzero entries as an iterator of ((row, col), value)."""
        return iter(self._nz.items())

    def support_size(self) -> int:
        return len(self._nz)

    def rows(self) -> list[list[object]]:
        """Dense matrix as nested lists (row major)."""
        zero = self.field.zero()
        out = [[zero] * self.domain.dim for _ in range(self.codomain.dim)]
        for (i, j), v in self._nz.items():
            out[i][j] = v
        return out

    def shape(self) -> tuple[int, int]:
        return (self.codomain.dim, self.domain.dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field
                and self.domain.dim == other.domain.dim
                and self.codomain.dim == other.codomain.dim
                and self._nz == other._nz)

    def __hash__(self):
        return hash((self.field, self.domain.dim, self.codomain.dim,
                     frozenset(self._nz.items())))

    def __repr__(self) -> str:
        return (f"LinMap({self.field.name}, {self.codomain.dim}x{self.domain.dim}, "
                f"nnz={len(self._nz)})")


# ---------------------------------------------------------------------------
# operations

def _require_same_field(*maps: LinMap) -> Field:
    field = maps[0].field
    for f in maps[1:]:
        if f.field != field:
            raise FieldMismatch(f"{f.field.name} vs {field.name}")
    return field


def compose(*maps: LinMap) -> LinMap:
    """Composite m1 o m2 o ... o mk (rightmost applies first)."""
    if not maps:
        raise ValueError("compose needs at least one map")
    _require_same_field(*maps)
    out = maps[0]
    for g in maps[1:]:
        out = _compose2(out, g)
    return out


def _compose2(f: LinMap, g: LinMap) -> LinMap:
    if f.domain.dim != g.codomain.dim:
        raise DimensionMismatch(
            f"compose: domain dim {f.domain.dim} != codomain dim {g.codomain.dim}")
    field = f.field
    fcols: dict[int, list[tuple[int, object]]] = {}
    for (i, k), v in f._nz.items():
        fcols.setdefault(k, []).append((i, v))
    acc: dict[tuple[int, int], object] = {}
    add, mul = field.add, field.mul
    for (k, j), vg in g._nz.items():
        col = fcols.get(k)
        if col is None:
            continue
        for i, vf in col:
            key = (i, j)
            prev = acc.get(key)
            acc[key] = mul(vf, vg) if prev is None else add(prev, mul(vf, vg))
    zero = field.zero()
    nz = {k: v for k, v in acc.items() if v != zero}
    out = LinMap.__new__(LinMap)
    object.__setattr__(out, "field", field)
    object.__setattr__(out, "domain", g.domain)
    object.__setattr__(out, "codomain", f.codomain)
    object.__setattr__(out, "_nz", nz)
    return out


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product, left factor major in both domain and codomain."""
    if not maps:
        raise ValueError("tensor needs at least one map")
    _require_same_field(*maps)
    out = maps[0]
    for g in maps[1:]:
        out = _tensor2(out, g)
    return out


def _tensor2(f: LinMap, g: LinMap) -> LinMap:
    field = f.field
    gd, gc = g.domain.dim, g.codomain.dim
    mul = field.mul
    nz = {}
    for (fi, fj), fv in f._nz.items():
        for (gi, gj), gv in g._nz.items():
            nz[(fi * gc + gi, fj * gd + gj)] = mul(fv, gv)
    out = LinMap.__new__(LinMap)
    object.__setattr__(out, "field", field)
    object.__setattr__(out, "domain", Space(f.domain.dim * gd))
    object.__setattr__(out, "codomain", Space(f.codomain.dim * gc))
    object.__setattr__(out, "_nz", nz)
    return out


def braiding(field: Field, a: Space, b: Space) -> LinMap:
    """The symmetric swap c_{A,B} : A (x) B -> B (x) A, e_i (x) e_j -> e_j (x) e_i."""
    one = field.one()
    entries = {}
    for i in range(a.dim):
        for j in range(b.dim):
            entries[(j * a.dim + i, i * b.dim + j)] = one
    return LinMap(field, Space(a.dim * b.dim), Space(b.dim * a.dim), entries)


def first_difference(f: LinMap, g: LinMap) -> dict | None:
    """Witness of the first difference between two maps, or None if equal.

    Scans column by column (basis vector by basis vector), then by row, so
    the witness names the first domain basis vector on which the maps differ.
    """
    if f.field != g.field:
        return {"kind": "field", "left": f.field.name, "right": g.field.name}
    if f.shape() != g.shape():
        ls, rs = f.shape(), g.shape()
        return {"kind": "shape", "left": f"{ls[0]}x{ls[1]}", "right": f"{rs[0]}x{rs[1]}"}
    keys = set(f._nz) | set(g._nz)
    if not keys:
        return None
    fmt = f.field.format
    zero = f.field.zero()
    for i, j in sorted(keys, key=lambda k: (k[1], k[0])):
        a = f._nz.get((i, j), zero)
        b = g._nz.get((i, j), zero)
        if a != b:
            return {"kind": "entry", "row": i, "col": j, "left": fmt(a), "right": fmt(b)}
    return None


def equal(f: LinMap, g: LinMap) -> tuple[bool, dict | None]:
    """Exact equality with a witness for the first difference."""
    wit = first_difference(f, g)
    return (wit is None, wit)


def equation_entry(name: str, lhs: LinMap, rhs: LinMap) -> CheckEntry:
    """Report entry for an exact map equation lhs = rhs."""
    ok, wit = equal(lhs, rhs)
    return CheckEntry(name, ok, wit)
