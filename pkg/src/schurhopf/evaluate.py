"""Exact evaluation of Schur polynomials and universal characters.

Values are big rationals (fractions.Fraction) or Gaussian rationals; floats
are rejected everywhere, since every identity this package checks is exact.
The tableau-sum and bialternant evaluators are written against different
definitions on purpose: agreement between them is evidence, not tautology.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ._oracle import (
    homogeneous_part,
    horizontal_extensions,
    poly_mul,
    poly_one,
    schur_polynomial,
)
from .char_rings import Basis, CharElement, convert
from .errors import (
    SingularDenominatorError,
    StableRangeError,
    UnsupportedGroupError,
)
from .partition import Partition, partitions_up_to


class GaussianRational:
    """Exact complex number re + im*i with Fraction components.

    Supports mixed arithmetic with int and Fraction.  Needed when the -1
    eigenvalues of the odd orthogonal components meet complex test points;
    purely real results compare (and hash) equal to plain Fractions.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_fraction(re)
        self.im = _to_fraction(im)

    @staticmethod
    def _lift(v):
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            return GaussianRational(v)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = f"{self.im}i"
        if not self.re:
            return im
        return f"{self.re}+{im}" if self.im > 0 else f"{self.re}-{-self.im}i"


def _to_fraction(v) -> Fraction:
    if isinstance(v, (bool, float, complex)):
        raise TypeError(f"exact value required, got {type(v).__name__}")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


def coerce_value(v):
    """Normalize a user-supplied value to Fraction or GaussianRational."""
    if isinstance(v, GaussianRational):
        return v
    return _to_fraction(v)


_GROUP_RE = re.compile(r"^\s*(GL|SL|SO|Sp|O-)\s*\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)

_CANONICAL = {"gl": "GL", "sl": "SL", "so": "SO", "sp": "Sp", "o-": "O-"}


class EigenvalueSpec:
    """A classical group element given by its free eigenvalue parameters.

    The full eigenvalue multiset is induced from the free values:

        GL(n), SL(n)   x_1..x_n                     (SL requires product 1)
        SO(2k+1)       x_1..x_k, inverses, +1
        O-(2k+1)       x_1..x_k, inverses, -1
        Sp(2k)         x_1..x_k, inverses
        SO(2k)         x_1..x_k, inverses
        O-(2k)         x_1..x_{k-1}, inverses, +1, -1
        Sp(2k+1)       x_1..x_k, inverses, x_{k+1}

    "O-" denotes the component of O(N) away from the identity.  Sp(2k+1)
    specs can be represented but not evaluated; see eval_character.
    """

    __slots__ = ("family", "size", "free_values")

    def __init__(self, group: str, free_values):
        m = _GROUP_RE.match(group)
        if not m:
            raise UnsupportedGroupError(
                f"cannot parse group {group!r}; expected GL(n), SL(n), "
                "SO(n), O-(n) or Sp(n)"
            )
        self.family = _CANONICAL[m.group(1).lower()]
        self.size = int(m.group(2))
        if self.size < 1:
            raise UnsupportedGroupError("group size must be positive")
        values = tuple(coerce_value(v) for v in free_values)
        if any(not v for v in values):
            raise ValueError("eigenvalue parameters must be nonzero")
        expected = self.free_count_for(self.family, self.size)
        if len(values) != expected:
            raise ValueError(
                f"{self.group_name} takes {expected} free value(s), "
                f"got {len(values)}"
            )
        if self.family == "SL":
            prod = Fraction(1)
            for v in values:
                prod = prod * v
            if prod != 1:
                raise ValueError("SL(n) eigenvalues must have product 1")
        self.free_values = values

    @staticmethod
    def free_count_for(family: str, size: int) -> int:
        k, odd = divmod(size, 2)
        if family in ("GL", "SL"):
            return size
        if family == "Sp":
            return k + 1 if odd else k
        if family == "O-" and not odd:
            if k < 1:
                raise UnsupportedGroupError("O-(0) is empty")
            return k - 1
        return k

    @property
    def group_name(self) -> str:
        return f"{self.family}({self.size})"

    @property
    def rank(self) -> int:
        """Stable-range bound: characters need length(lambda) <= rank."""
        return self.size if self.family in ("GL", "SL") else self.size // 2

    @property
    def character_basis(self) -> Basis:
        if self.family in ("GL", "SL"):
            return Basis.GL
        if self.family == "Sp":
            return Basis.SP
        return Basis.O

    def eigenvalues(self) -> tuple:
        xs = self.free_values
        k, odd = divmod(self.size, 2)
        if self.family in ("GL", "SL"):
            return xs
        if self.family == "Sp":
            if odd:
                pairs = xs[:k]
                return pairs + tuple(1 / v for v in pairs) + (xs[k],)
            return xs + tuple(1 / v for v in xs)
        inv = tuple(1 / v for v in xs)
        if self.family == "SO":
            return xs + inv + ((Fraction(1),) if odd else ())
        # O- component
        if odd:
            return xs + inv + (Fraction(-1),)
        return xs + inv + (Fraction(1), Fraction(-1))

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.free_values)
        return f"EigenvalueSpec({self.group_name}; {vals})"


def eval_schur_tableaux(lam, values):
    """s_lam(values) as the monomial sum over column-strict tableaux.

    Tableaux with entries at most n are chains of horizontal strips, so the
    sum folds one variable at a time.  Returns 0 when lam has more rows
    than there are values.
    """
    lam = Partition(lam)
    vals = [coerce_value(v) for v in values]
    if lam.length > len(vals):
        return Fraction(0)
    if not lam:
        return Fraction(1)
    table = {(): Fraction(1)}
    for x in vals:
        new_table = {}
        for mu, acc in table.items():
            for nu, added in horizontal_extensions(mu, lam):
                term = acc * x**added if added else acc
                if nu in new_table:
                    new_table[nu] = new_table[nu] + term
                else:
                    new_table[nu] = term
        table = new_table
    return table.get(tuple(lam), Fraction(0))


def _det_bareiss(m):
    """Exact determinant by fraction-free (Bareiss) elimination with row
    pivoting.  Entries may be Fractions or GaussianRationals."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def eval_schur_bialternant(lam, values):
    """s_lam(values) as the ratio |x_i^(lam_j+n-j)| / |x_i^(n-j)|.

    The denominator is the Vandermonde product, so the values must be
    pairwise distinct; repeated values raise SingularDenominatorError and
    the caller should fall back to eval_schur_tableaux.
    """
    lam = Partition(lam)
    vals = [coerce_value(v) for v in values]
    n = len(vals)
    for i in range(n):
        for j in range(i + 1, n):
            if vals[i] == vals[j]:
                raise SingularDenominatorError(
                    f"repeated eigenvalue {vals[i]}; bialternant denominator "
                    "vanishes (use eval_schur_tableaux)"
                )
    if lam.length > n:
        return Fraction(0)
    if not lam:
        return Fraction(1)
    padded = tuple(lam) + (0,) * (n - lam.length)
    numer = [[vals[i] ** (padded[j] + n - 1 - j) for j in range(n)] for i in range(n)]
    denom = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            denom = denom * (vals[i] - vals[j])
    return _det_bareiss(numer) / denom


def eval_character(lam, spec: EigenvalueSpec):
    """Evaluate the universal character labeled by lam at a group element.

    The basis is dictated by the group family (GL/SL use {lam}, the
    orthogonal families [lam], Sp(2k) <lam>).  The character is expanded
    into Schur terms and each is evaluated at the full eigenvalue list.

    Sp(2k+1) is rejected: its universal characters are indecomposable but
    not irreducible, so no specialization rule is available here.  O/Sp
    labels need length(lam) <= k; outside that stable range universal and
    irreducible characters differ by modification rules, which are out of
    scope, so the guard is a hard error rather than a silent wrong answer.
    """
    lam = Partition(lam)
    if spec.family == "Sp" and spec.size % 2:
        raise UnsupportedGroupError(
            f"cannot evaluate characters of {spec.group_name}: the universal "
            "character specializes to an indecomposable but reducible "
            "module, and no specialization rule applies"
        )
    basis = spec.character_basis
    if basis is not Basis.GL and lam.length > spec.rank:
        raise StableRangeError(
            f"{basis.value} character of shape with {lam.length} rows is "
            f"outside the stable range of {spec.group_name} "
            f"(needs length <= {spec.rank})"
        )
    gl = convert(CharElement.basis_element(basis, lam), Basis.GL)
    xs = spec.eigenvalues()
    total = Fraction(0)
    for p, c in gl.items():
        total = total + c * eval_schur_tableaux(p, xs)
    return total


def _embed(poly: dict, nx: int, ny: int, side: str) -> dict:
    if side == "x":
        return {e + (0,) * ny: c for e, c in poly.items()}
    return {(0,) * nx + e: c for e, c in poly.items()}


def verify_cauchy(nx: int, ny: int, max_degree: int) -> bool:
    """Check both Cauchy kernels against their Schur-sum expansions.

    Works in nx+ny variables with every polynomial truncated at total
    degree 2*max_degree, which keeps exactly the terms whose x-degree and
    y-degree are both at most max_degree.
    """
    nvars = nx + ny
    bound = 2 * max_degree
    direct = poly_one(nvars)
    inverse = poly_one(nvars)
    for i in range(nx):
        for a in range(ny):
            e = [0] * nvars
            e[i] = 1
            e[nx + a] = 1
            e = tuple(e)
            direct = poly_mul(direct, {(0,) * nvars: 1, e: -1}, bound)
            geo = {}
            m = 0
            while 2 * m <= bound:
                geo[tuple(x * m for x in e)] = 1
                m += 1
            inverse = poly_mul(inverse, geo, bound)

    sum_inverse: dict = {}
    sum_direct: dict = {}
    for lam in partitions_up_to(max_degree):
        sx = schur_polynomial(tuple(lam), nx)
        if not sx:
            continue
        sy = schur_polynomial(tuple(lam), ny)
        if sy:
            for e, c in poly_mul(
                _embed(sx, nx, ny, "x"), _embed(sy, nx, ny, "y"), bound
            ).items():
                v = sum_inverse.get(e, 0) + c
                if v:
                    sum_inverse[e] = v
                else:
                    del sum_inverse[e]
        syc = schur_polynomial(tuple(lam.conjugate()), ny)
        if syc:
            sign = -1 if lam.weight % 2 else 1
            for e, c in poly_mul(
                _embed(sx, nx, ny, "x"), _embed(syc, nx, ny, "y"), bound
            ).items():
                v = sum_direct.get(e, 0) + sign * c
                if v:
                    sum_direct[e] = v
                else:
                    del sum_direct[e]

    trim = lambda poly: {e: c for e, c in poly.items() if sum(e) <= bound}
    return trim(inverse) == sum_inverse and trim(direct) == sum_direct
