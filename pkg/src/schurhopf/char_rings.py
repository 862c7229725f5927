"""Universal character rings of GL, O and Sp in their stable bases.

Elements are written in one of three bases indexed by partitions: {lambda}
(GL, plain Schur functions), [lambda] (orthogonal) and <lambda> (symplectic).
All three live inside the same ring of symmetric functions; the bases are
related by skewing with the Littlewood series

    {lambda} = [lambda/D] = <lambda/B>
    [lambda] = {lambda/C} = <lambda/BC>
    <lambda> = {lambda/A} = [lambda/AD]

so conversion, branching and the Newell-Littlewood tensor products

    [lambda].[mu] = sum_sigma [(lambda/sigma).(mu/sigma)]

all reduce to Littlewood-Richardson arithmetic.  Mixed-basis arithmetic is
rejected; convert explicitly.  Conversions and antipodes can produce negative
coefficients, branchings and tensor products cannot.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Mapping

from . import lr
from .errors import BasisMismatchError
from .partition import Partition, subpartitions, term_sort_key
from .schur_ring import SchurElement, _format_combination, _merge
from .series import (
    SchurSeries,
    littlewood_series,
    series_product,
    series_term,
    skew_by_series,
    delta_double_prime,
)


class Basis(enum.Enum):
    GL = "GL"
    O = "O"
    SP = "Sp"

    @property
    def brackets(self) -> tuple[str, str]:
        return _BRACKETS[self]

    @classmethod
    def parse(cls, text: str) -> "Basis":
        key = str(text).strip().upper()
        for b in cls:
            if b.value.upper() == key:
                return b
        raise ValueError(f"unknown basis {text!r}; expected GL, O or Sp")


_BRACKETS = {
    Basis.GL: ("{", "}"),
    Basis.O: ("[", "]"),
    Basis.SP: ("⟨", "⟩"),
}


class CharElement:
    """An integer combination of universal characters in a single basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Basis, terms: Mapping | Iterable = ()):
        if not isinstance(basis, Basis):
            basis = Basis.parse(basis)
        self.basis = basis
        table: dict[Partition, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {c!r}")
            if c:
                _merge(table, Partition(p), c)
        self._terms = table

    @classmethod
    def basis_element(cls, basis: Basis, p) -> "CharElement":
        return cls(basis, {Partition(p): 1})

    @classmethod
    def _raw(cls, basis: Basis, table: dict) -> "CharElement":
        e = cls.__new__(cls)
        e.basis = basis
        e._terms = {p: c for p, c in table.items() if c}
        return e

    def coefficient(self, p) -> int:
        return self._terms.get(Partition(p), 0)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: term_sort_key(kv[0]))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def max_degree(self) -> int:
        return max((p.weight for p in self._terms), default=0)

    def as_schur_element(self) -> SchurElement:
        """Forget the basis label and read the table as Schur coefficients.

        Only honest for GL elements; internal conversions use it after
        skewing by the appropriate series.
        """
        return SchurElement(self._terms)

    def _check(self, other: "CharElement") -> None:
        if not isinstance(other, CharElement):
            raise TypeError("expected a CharElement")
        if other.basis is not self.basis:
            raise BasisMismatchError(
                f"cannot combine {self.basis.value} and {other.basis.value} "
                "elements; convert() one of them first"
            )

    def __eq__(self, other) -> bool:
        if isinstance(other, CharElement):
            return self.basis is other.basis and self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other) -> "CharElement":
        self._check(other)
        table = dict(self._terms)
        for p, c in other._terms.items():
            _merge(table, p, c)
        return CharElement._raw(self.basis, table)

    def __sub__(self, other) -> "CharElement":
        self._check(other)
        table = dict(self._terms)
        for p, c in other._terms.items():
            _merge(table, p, -c)
        return CharElement._raw(self.basis, table)

    def __neg__(self) -> "CharElement":
        return CharElement._raw(self.basis, {p: -c for p, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, CharElement):
            self._check(other)
            return char_multiply(self, other)
        if isinstance(other, int):
            return CharElement._raw(
                self.basis,
                {} if other == 0 else {p: other * c for p, c in self._terms.items()},
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "terms": [
                {"partition": list(p), "coeff": c} for p, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CharElement":
        return cls(
            Basis.parse(obj["basis"]),
            ((t["partition"], t["coeff"]) for t in obj["terms"]),
        )

    def __str__(self) -> str:
        ob, cb = self.basis.brackets
        return _format_combination(self._terms.items(), ob, cb)

    def __repr__(self) -> str:
        return f"CharElement({self.basis.value}, {dict(self.sorted_terms())!r})"

    def __bool__(self) -> bool:
        return bool(self._terms)


class CharTensorElement:
    """A two-slot tensor with both slots in the same character basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Basis, terms: Mapping | Iterable = ()):
        if not isinstance(basis, Basis):
            basis = Basis.parse(basis)
        self.basis = basis
        table: dict[tuple[Partition, Partition], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            if c:
                _merge(table, (Partition(a), Partition(b)), c)
        self._terms = table

    def coefficient(self, left, right) -> int:
        return self._terms.get((Partition(left), Partition(right)), 0)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        return sorted(
            self._terms.items(),
            key=lambda kv: (term_sort_key(kv[0][0]), term_sort_key(kv[0][1])),
        )

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CharTensorElement):
            return self.basis is other.basis and self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "terms": [
                {"left": list(a), "right": list(b), "coeff": c}
                for (a, b), c in self.sorted_terms()
            ],
        }

    def __str__(self) -> str:
        ob, cb = self.basis.brackets
        return _format_combination(self._terms.items(), ob, cb)

    def __repr__(self) -> str:
        return f"CharTensorElement({self.basis.value}, {dict(self.sorted_terms())!r})"


@lru_cache(maxsize=None)
def _composite_term(names: tuple[str, str], d: int) -> SchurElement:
    """Degree-d term of a product of two named series (AD, BC, ...)."""
    first, second = names
    total = SchurElement.zero()
    for e in range(d + 1):
        total = total + series_term(first, e) * series_term(second, d - e)
    return total


def _series_for(names: str, cutoff: int) -> SchurSeries:
    if len(names) == 1:
        return littlewood_series(names, cutoff)
    pair = (names[0], names[1])
    return SchurSeries(lambda d: _composite_term(pair, d), cutoff, names)


# Conversion recipes: to re-express basis X in basis Y, skew by this series.
_CONVERSION = {
    (Basis.GL, Basis.O): "D",
    (Basis.GL, Basis.SP): "B",
    (Basis.O, Basis.GL): "C",
    (Basis.SP, Basis.GL): "A",
    (Basis.O, Basis.SP): "BC",
    (Basis.SP, Basis.O): "AD",
}


def convert(x: CharElement, to: Basis | str) -> CharElement:
    """Rewrite x in another basis of the same underlying ring."""
    to = to if isinstance(to, Basis) else Basis.parse(to)
    if to is x.basis:
        return CharElement._raw(to, dict(x._terms))
    series = _series_for(_CONVERSION[(x.basis, to)], max(x.max_degree(), 0))
    out = skew_by_series(x.as_schur_element(), series)
    return CharElement._raw(to, dict(out.items()))


def branch_gl_to_o(lam) -> CharElement:
    """Restriction of the GL character {lam} to the orthogonal subgroup."""
    lam = Partition(lam)
    series = littlewood_series("D", lam.weight)
    out = skew_by_series(SchurElement.basis(lam), series)
    return CharElement._raw(Basis.O, dict(out.items()))


def branch_gl_to_sp(lam) -> CharElement:
    """Restriction of the GL character {lam} to the symplectic subgroup."""
    lam = Partition(lam)
    series = littlewood_series("B", lam.weight)
    out = skew_by_series(SchurElement.basis(lam), series)
    return CharElement._raw(Basis.SP, dict(out.items()))


def tensor_product(lam, mu, basis: Basis | str) -> CharElement:
    """Decompose the product of two basis characters in the same basis.

    GL is the plain Littlewood-Richardson expansion.  For O and Sp the
    Newell-Littlewood rule contracts along a shared sigma, which is forced
    to fit inside both factors, so its weight never exceeds min(|lam|,|mu|).
    """
    basis = basis if isinstance(basis, Basis) else Basis.parse(basis)
    lam = Partition(lam)
    mu = Partition(mu)
    if basis is Basis.GL:
        return CharElement._raw(Basis.GL, lr.product_expansion(lam, mu))
    small, big = (lam, mu) if lam.weight <= mu.weight else (mu, lam)
    table: dict[Partition, int] = {}
    for sigma in subpartitions(small):
        if not big.contains(sigma):
            continue
        left = lr.skew_expansion(lam, sigma)
        right = lr.skew_expansion(mu, sigma)
        for p, a in left.items():
            for q, b in right.items():
                for r, c in lr.product_expansion(p, q).items():
                    _merge(table, r, a * b * c)
    return CharElement._raw(basis, table)


def tensor_product_generic(lam, mu, t: SchurSeries) -> CharElement:
    """Tensor product via the twisted-coproduct coefficients of a series T:

        [[lam]].[[mu]] = sum_{sigma,tau} b^T_{sigma,tau} [[(lam/sigma).(mu/tau)]]

    With T = D this reproduces the orthogonal rule, with T = B the symplectic
    one, and with the unit series the GL product.  The result is labelled
    accordingly (O for D, Sp for B, GL otherwise); for any other T the table
    is in the basis {lam / T^-1} determined by T.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    need = lam.weight + mu.weight
    coeffs = delta_double_prime(t, min(need, t.cutoff))
    table: dict[Partition, int] = {}
    for (sigma, tau), b in coeffs.items():
        if sigma.weight > lam.weight or tau.weight > mu.weight:
            continue
        left = lr.skew_expansion(lam, sigma)
        if not left:
            continue
        right = lr.skew_expansion(mu, tau)
        for p, x in left.items():
            for q, y in right.items():
                for r, c in lr.product_expansion(p, q).items():
                    _merge(table, r, b * x * y * c)
    label = {"D": Basis.O, "B": Basis.SP}.get(t.name or "", Basis.GL)
    return CharElement._raw(label, table)


def char_multiply(x: CharElement, y: CharElement) -> CharElement:
    """Bilinear extension of tensor_product to whole elements."""
    x._check(y)
    table: dict[Partition, int] = {}
    for p, a in x.items():
        for q, b in y.items():
            for r, c in tensor_product(p, q, x.basis).items():
                _merge(table, r, a * b * c)
    return CharElement._raw(x.basis, table)


# Coproduct recipes per basis: Delta sends a basis character to
# sum_zeta (lam/zeta) (x) (zeta/S) with this series S on the right slot.
_COPRODUCT_SERIES = {Basis.GL: None, Basis.O: "D", Basis.SP: "B"}


def char_coproduct(x: CharElement) -> CharTensorElement:
    """The comultiplication of the character ring, slotwise in x's basis."""
    series_name = _COPRODUCT_SERIES[x.basis]
    table: dict[tuple[Partition, Partition], int] = {}
    for lam, a in x.items():
        series = (
            None
            if series_name is None
            else littlewood_series(series_name, lam.weight)
        )
        for zeta in subpartitions(lam):
            left = lr.skew_expansion(lam, zeta)
            if series is None:
                right = {zeta: 1}
            else:
                right = dict(
                    skew_by_series(SchurElement.basis(zeta), series).items()
                )
            for p, u in left.items():
                for q, v in right.items():
                    _merge(table, (p, q), a * u * v)
    t = CharTensorElement.__new__(CharTensorElement)
    t.basis = x.basis
    t._terms = table
    return t


def _counit_weights(x: CharElement, series_name: str) -> int:
    total = 0
    for p, c in x.items():
        total += c * series_term(series_name, p.weight).coefficient(p)
    return total


def char_counit(x: CharElement) -> int:
    """GL: the coefficient of {0}.  O and Sp: the signed indicator supported
    on the C (resp. A) series partitions."""
    if x.basis is Basis.GL:
        return x.coefficient(())
    return _counit_weights(x, "C" if x.basis is Basis.O else "A")


# Antipode recipes: S sends lam to (-1)^|lam| (lam' / this series).
_ANTIPODE_SERIES = {Basis.GL: None, Basis.O: "AD", Basis.SP: "CB"}


def char_antipode(x: CharElement) -> CharElement:
    """The antipode; conjugates shapes, signs by weight, and (for O and Sp)
    corrects by the composite series AD and CB."""
    series_name = _ANTIPODE_SERIES[x.basis]
    table: dict[Partition, int] = {}
    for p, c in x.items():
        sign = -1 if p.weight % 2 else 1
        conj = p.conjugate()
        if series_name is None:
            _merge(table, conj, sign * c)
            continue
        series = _series_for(series_name, conj.weight)
        for q, u in skew_by_series(SchurElement.basis(conj), series).items():
            _merge(table, q, sign * c * u)
    return CharElement._raw(x.basis, table)
