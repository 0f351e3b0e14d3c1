"""Exact sparse multivariate polynomials and unreduced polynomial fractions.

Variables are named by strings: the formal symbols ``x y r s z w q alpha beta``
and per-label blocks ``t:<label>`` / ``v:<label>``.  Coefficients are Python
ints (or ``Fraction`` when a computation is carried out over the rationals);
integral fractions are always normalised back to ``int``.

Internally a monomial is a single packed integer: the exponent of the
variable registered in slot ``i`` occupies bits ``[i*W, (i+1)*W)``.  Monomial
multiplication is then integer addition, which keeps the subset sums and
localization sums of this package fast in pure Python.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

FORMAL = ("x", "y", "r", "s", "z", "w", "q", "alpha", "beta")

_W = 24
_FIELD = (1 << _W) - 1
MAX_EXPONENT = _FIELD

_names: list[str] = []
_slots: dict[str, int] = {}

Number = Union[int, Fraction]


class PolyError(ValueError):
    pass


class NotDivisible(PolyError):
    """Raised by exact division; ``remainder`` carries the nonzero witness."""

    def __init__(self, message: str, remainder: "MultiPoly"):
        super().__init__(message)
        self.remainder = remainder


class ResidualTVariable(PolyError):
    pass


class UnboundVariable(PolyError):
    pass


class ZeroDenominator(PolyError, ZeroDivisionError):
    pass


def tname(label: str) -> str:
    return f"t:{label}"


def vname(label: str) -> str:
    return f"v:{label}"


def is_t(name: str) -> bool:
    return name.startswith("t:")


def label_of(name: str) -> str:
    return name[2:]


def _check_name(name: str) -> None:
    if name in FORMAL:
        return
    if (name.startswith("t:") or name.startswith("v:")) and len(name) > 2:
        return
    raise PolyError(f"unknown variable {name!r}")


def _slot(name: str) -> int:
    i = _slots.get(name)
    if i is None:
        _check_name(name)
        i = len(_names)
        _names.append(name)
        _slots[name] = i
    return i


def _unpack(m: int) -> list[tuple[int, int]]:
    out = []
    i = 0
    while m:
        e = m & _FIELD
        if e:
            out.append((i, e))
        m >>= _W
        i += 1
    return out


def _exp(m: int, slot: int) -> int:
    return (m >> (_W * slot)) & _FIELD


def _pack(exps: Mapping[str, int]) -> int:
    m = 0
    for name, e in exps.items():
        if e < 0 or e > MAX_EXPONENT:
            raise PolyError(f"exponent {e} out of range for {name}")
        if e:
            m += e << (_W * _slot(name))
    return m


def _norm(c) -> Number:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _natural(label: str):
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def var_sort_key(name: str, ground: Iterable[str] | None = None):
    """Total order on variables: formal symbols, then t-block, then v-block."""
    if name in FORMAL:
        return (0, FORMAL.index(name), (0, 0, ""))
    block = 1 if is_t(name) else 2
    label = label_of(name)
    if ground is not None:
        ground = list(ground)
        if label in ground:
            return (block, 0, (0, ground.index(label), ""))
    return (block, 1, _natural(label))


class MultiPoly:
    """Immutable sparse polynomial with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Number] | None = None):
        self._terms: dict[int, Number] = {}
        if terms:
            self._terms = {m: _norm(c) for m, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Number]) -> "MultiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # construction

    @classmethod
    def const(cls, c: Number) -> "MultiPoly":
        return cls._raw({0: _norm(c)} if c != 0 else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw({1 << (_W * _slot(name)): 1})

    @classmethod
    def t(cls, label: str) -> "MultiPoly":
        return cls.var(tname(label))

    @classmethod
    def v(cls, label: str) -> "MultiPoly":
        return cls.var(vname(label))

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Number = 1) -> "MultiPoly":
        if coeff == 0:
            return cls._raw({})
        return cls._raw({_pack(exps): _norm(coeff)})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Number, Mapping[str, int]]]) -> "MultiPoly":
        acc: dict[int, Number] = {}
        for c, exps in terms:
            m = _pack(exps)
            acc[m] = acc.get(m, 0) + c
        return cls({m: c for m, c in acc.items()})

    # inspection

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self) -> Number:
        return self._terms.get(0, 0)

    def terms(self) -> Iterable[tuple[dict[str, int], Number]]:
        for m, c in self._terms.items():
            yield {_names[i]: e for i, e in _unpack(m)}, c

    def variables(self) -> set[str]:
        return {_names[i] for m in self._terms for i, _ in _unpack(m)}

    def degree(self, name: str | None = None) -> int:
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e for _, e in _unpack(m)) for m in self._terms)
        if name not in _slots:
            return 0
        i = _slots[name]
        return max(_exp(m, i) for m in self._terms)

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split into ``{k: c_k}`` with ``self = sum c_k * name**k``."""
        if name not in _slots:
            return {0: self} if self._terms else {}
        i = _slots[name]
        shift = _W * i
        buckets: dict[int, dict[int, Number]] = {}
        for m, c in self._terms.items():
            k = (m >> shift) & _FIELD
            buckets.setdefault(k, {})[m - (k << shift)] = c
        return {k: MultiPoly._raw(d) for k, d in buckets.items()}

    def coeff(self, exps: Mapping[str, int]) -> "MultiPoly":
        """Coefficient of the given exact exponents of the listed variables."""
        slots = [(_slot(n), e) for n, e in exps.items()]
        out: dict[int, Number] = {}
        for m, c in self._terms.items():
            rest = m
            for i, e in slots:
                if _exp(m, i) != e:
                    break
                rest -= e << (_W * i)
            else:
                out[rest] = c
        return MultiPoly._raw(out)

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        acc = dict(a)
        for m, c in b.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = _norm(s)
            else:
                acc.pop(m, None)
        return MultiPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, PolyFraction):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly._raw({})
        if len(b) == 1:
            (mb, cb), = b.items()
            return MultiPoly._raw({ma + mb: _norm(ca * cb) for ma, ca in a.items()})
        if len(a) == 1:
            (ma, ca), = a.items()
            return MultiPoly._raw({ma + mb: _norm(ca * cb) for mb, cb in b.items()})
        acc: dict[int, Number] = {}
        get = acc.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma + mb
                acc[m] = get(m, 0) + ca * cb
        return MultiPoly._raw({m: _norm(c) for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolyError("exponent must be a nonnegative int")
        if n and self._terms and self.degree() * n > MAX_EXPONENT:
            raise PolyError("exponent overflow")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDenominator("division by zero")
            inv = Fraction(1, 1) / other
            return MultiPoly._raw({m: _norm(c * inv) for m, c in self._terms.items()})
        if isinstance(other, (MultiPoly, PolyFraction)):
            return PolyFraction(self, 1) / other
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PolyFraction(other, self)

    def __eq__(self, other):
        if isinstance(other, PolyFraction):
            return other == self
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution / evaluation

    def subs(self, bindings: Mapping[str, "MultiPoly | Number"]) -> "MultiPoly":
        """Polynomial substitution (ring homomorphism); bindings must be polynomials."""
        if not bindings:
            return self
        bound = []
        for name, val in bindings.items():
            if name not in _slots:
                continue
            if isinstance(val, PolyFraction):
                raise PolyError("subs() takes polynomial bindings; use substitute()")
            bound.append((_slots[name], self._coerce(val)))
        if not bound:
            return self
        buckets: dict[tuple, dict[int, Number]] = {}
        for m, c in self._terms.items():
            key = []
            rest = m
            for i, _ in bound:
                e = _exp(m, i)
                key.append(e)
                rest -= e << (_W * i)
            buckets.setdefault(tuple(key), {})[rest] = c
        powers: list[dict[int, MultiPoly]] = [{} for _ in bound]
        out = MultiPoly._raw({})
        for key, rest in buckets.items():
            term = MultiPoly._raw(rest)
            for j, e in enumerate(key):
                if e:
                    cache = powers[j]
                    if e not in cache:
                        cache[e] = bound[j][1] ** e
                    term = term * cache[e]
            out = out + term
        return out

    def eval(self, point: Mapping[str, Number]) -> Number:
        """Exact evaluation; every variable occurring must be bound."""
        total: Number = 0
        vals: dict[int, Number] = {}
        for m, c in self._terms.items():
            val: Number = c
            for i, e in _unpack(m):
                if i not in vals:
                    name = _names[i]
                    if name not in point:
                        raise UnboundVariable(f"no value for {name}")
                    vals[i] = point[name]
                val = val * vals[i] ** e
            total += val
        return _norm(Fraction(total))

    # ordering / printing

    def sorted_terms(self, ground: Iterable[str] | None = None) -> list[tuple[dict[str, int], Number]]:
        """Terms in graded lexicographic order, leading term first."""
        ground = list(ground) if ground is not None else None
        items = list(self.terms())
        names = sorted({n for exps, _ in items for n in exps}, key=lambda n: var_sort_key(n, ground))

        def key(item):
            exps = item[0]
            vec = tuple(exps.get(n, 0) for n in names)
            return (sum(vec), vec)

        items.sort(key=key, reverse=True)
        return [({n: exps[n] for n in names if n in exps}, c) for exps, c in items]

    def leading_coefficient(self) -> Number:
        if not self._terms:
            return 0
        return self.sorted_terms()[0][1]

    def to_text(self, ground: Iterable[str] | None = None) -> str:
        items = self.sorted_terms(ground)
        if not items:
            return "0"
        parts = []
        for k, (exps, c) in enumerate(items):
            factors = [_var_text(n) + (f"^{e}" if e > 1 else "") for n, e in exps.items()]
            mag = -c if c < 0 else c
            if factors:
                body = "*".join(factors) if mag == 1 else "*".join([_coeff_text(mag)] + factors)
            else:
                body = _coeff_text(mag)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


def _coeff_text(c: Number) -> str:
    return str(c) if isinstance(c, int) else f"({c})"


def _var_text(name: str) -> str:
    if name in FORMAL:
        return name
    return f"{name[0]}[{label_of(name)}]"


def as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, PolyFraction):
        return value.to_poly()
    return MultiPoly.const(value)


X, Y, R, S, Z, W, Q, ALPHA, BETA = (MultiPoly.var(n) for n in FORMAL)
ONE = MultiPoly.const(1)
ZERO = MultiPoly.const(0)


class PolyFraction:
    """Unreduced ``num/den``.  Equality is decided by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = as_poly(num)
        den = as_poly(den)
        if den.is_zero():
            raise ZeroDenominator("fraction with zero denominator")
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    def _coerce(self, other) -> "PolyFraction":
        if isinstance(other, PolyFraction):
            return other
        if isinstance(other, MultiPoly) or (isinstance(other, (int, Fraction)) and not isinstance(other, bool)):
            return PolyFraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return PolyFraction(self.num + other.num, self.den)
        return PolyFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDenominator("division by zero fraction")
        return PolyFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return PolyFraction(1) / PolyFraction(self.num ** -n, self.den ** -n)
        return PolyFraction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return fraction_eq(self, other)

    __hash__ = None  # equality is not structural

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_poly(self) -> MultiPoly:
        """The polynomial ``num/den``; raises NotDivisible if it is not one."""
        return divide_exact(self.num, self.den)

    def eval(self, point: Mapping[str, Number]) -> Fraction:
        return fraction_eval(self, point)

    def __repr__(self):
        return f"PolyFraction(({self.num.to_text()}) / ({self.den.to_text()}))"


def fraction_eq(f: PolyFraction, g: PolyFraction) -> bool:
    return f.num * g.den == g.num * f.den


def fraction_eval(f: PolyFraction, point: Mapping[str, Number]) -> Number:
    d = f.den.eval(point)
    if d == 0:
        raise ZeroDenominator("denominator vanishes at the point")
    return _norm(Fraction(f.num.eval(point)) / d)


def eval_rational(p: MultiPoly, point: Mapping[str, Number]) -> Number:
    return p.eval(point)


def substitute(p: MultiPoly, bindings: Mapping[str, "PolyFraction | MultiPoly | Number"]) -> PolyFraction:
    """Ring-homomorphic substitution into fractions, left unreduced.

    The denominator is the product of each binding's denominator raised to the
    maximal degree of its variable in ``p``.
    """
    nums: dict[str, MultiPoly] = {}
    dens: dict[str, MultiPoly] = {}
    for name, val in bindings.items():
        frac = val if isinstance(val, PolyFraction) else PolyFraction(val)
        nums[name] = frac.num
        dens[name] = frac.den
    present = [n for n in nums if n in _slots and p.degree(n) > 0]
    if all(dens[n] == ONE for n in present):
        return PolyFraction(p.subs({n: nums[n] for n in present}))
    # simultaneous: bucket monomials by the exponents of the bound variables
    slots = [_slots[n] for n in present]
    tops = [p.degree(n) for n in present]
    buckets: dict[tuple, dict[int, Number]] = {}
    for m, c in p._terms.items():
        key = tuple(_exp(m, i) for i in slots)
        rest = m - sum(e << (_W * i) for e, i in zip(key, slots))
        buckets.setdefault(key, {})[rest] = c
    cache: dict[tuple, MultiPoly] = {}

    def power(kind: str, j: int, e: int) -> MultiPoly:
        if (kind, j, e) not in cache:
            base = nums[present[j]] if kind == "n" else dens[present[j]]
            cache[kind, j, e] = base ** e
        return cache[kind, j, e]

    num = ZERO
    for key, rest in buckets.items():
        term = MultiPoly._raw(rest)
        for j, e in enumerate(key):
            term = term * power("n", j, e) * power("d", j, tops[j] - e)
        num = num + term
    den = ONE
    for j in range(len(present)):
        den = den * power("d", j, tops[j])
    return PolyFraction(num, den)


def substitute_fraction(f: PolyFraction, bindings: Mapping[str, "PolyFraction | MultiPoly | Number"]) -> PolyFraction:
    n = substitute(f.num, bindings)
    d = substitute(f.den, bindings)
    return n / d


def divide_by_linear(N: MultiPoly, name: str, root: MultiPoly | Number) -> MultiPoly:
    """Exact quotient of ``N`` by ``(name - root)`` via synthetic division.

    ``root`` must not involve ``name``.  Raises NotDivisible with the remainder.
    """
    root = as_poly(root)
    if root.degree(name) > 0:
        raise PolyError("root must not involve the division variable")
    coeffs = N.coefficients_in(name)
    if not coeffs:
        return ZERO
    top = max(coeffs)
    var = MultiPoly.var(name)
    quotient = ZERO
    carry = ZERO
    for k in range(top, 0, -1):
        carry = coeffs.get(k, ZERO) + carry * root
        quotient = quotient + carry * var ** (k - 1)
    remainder = coeffs.get(0, ZERO) + carry * root
    if not remainder.is_zero():
        raise NotDivisible(f"not divisible by ({name} - ({root}))", remainder)
    return quotient


def divide_exact_alpha_plus_beta(N: MultiPoly) -> MultiPoly:
    return divide_by_linear(N, "alpha", -BETA)


def divide_exact(N: MultiPoly, D: MultiPoly) -> MultiPoly:
    """Exact multivariate division ``N / D`` (rational coefficients allowed)."""
    if D.is_zero():
        raise ZeroDenominator("division by zero polynomial")
    if D.is_constant():
        return N / D.constant_term()
    lead = max(D._terms)
    lead_c = D._terms[lead]
    lead_exps = _unpack(lead)
    rem = dict(N._terms)
    quot: dict[int, Number] = {}
    while rem:
        m = max(rem)
        if any(_exp(m, i) < e for i, e in lead_exps):
            raise NotDivisible("polynomial division leaves a remainder", MultiPoly._raw(rem))
        qm = m - lead
        qc = _norm(Fraction(rem[m]) / lead_c)
        quot[qm] = qc
        for md, cd in D._terms.items():
            k = qm + md
            val = rem.get(k, 0) - qc * cd
            if val:
                rem[k] = _norm(val)
            else:
                rem.pop(k, None)
    return MultiPoly._raw(quot)


def elementary_symmetric(values: list[MultiPoly], i: int) -> MultiPoly:
    if i < 0 or i > len(values):
        raise PolyError(f"index {i} outside 0..{len(values)}")
    # e_k of the first j values, built up one value at a time
    e = [ONE] + [ZERO] * i
    for v in values:
        for k in range(i, 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return e[i]


def coefficient_of_t_monomial(p: MultiPoly, labels: Iterable[str]) -> MultiPoly:
    """Coefficient of ``prod_{e in A} t_e`` (every other t at exponent 0)."""
    want = {_slot(tname(a)) for a in labels}
    tslots = {i for i, n in enumerate(_names) if is_t(n)}
    out: dict[int, Number] = {}
    for m, c in p._terms.items():
        tparts = [(i, e) for i, e in _unpack(m) if i in tslots]
        if any(i in want and e >= 2 for i, e in tparts):
            raise ResidualTVariable("t-variable of the monomial appears squared")
        if {i for i, _ in tparts} == want and all(e == 1 for _, e in tparts):
            out[m - sum(1 << (_W * i) for i in want)] = c
    return MultiPoly._raw(out)


def t_support(p: MultiPoly) -> set[frozenset[str]]:
    """Label sets A with a nonzero t_A-part (squarefree t-monomials only)."""
    out = set()
    for exps, _ in p.terms():
        ts = {label_of(n): e for n, e in exps.items() if is_t(n)}
        if any(e > 1 for e in ts.values()):
            raise ResidualTVariable("t-exponent above 1")
        out.add(frozenset(ts))
    return out
