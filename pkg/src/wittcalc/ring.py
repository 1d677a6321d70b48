"""Exact base arithmetic: number theory helpers, truncation sets, and sparse
multivariate polynomials over Z and Z/p^m.

Coefficients are plain Python ints, so everything is arbitrary precision and
all divisibility questions are decided exactly.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, Optional


class NotDivisible(ArithmeticError):
    """Raised when an exact division over Z fails.

    Upstream this is a certificate of non-membership (a ghost tuple outside
    the Witt image, a form outside the complex), not a programming error.
    """


# ---------------------------------------------------------------------------
# number theory


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for desk-scale inputs."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    """Moebius function: (-1)^k on squarefree n with k prime factors, else 0."""
    if n < 1:
        raise ValueError(f"mobius is defined on positive integers, got {n}")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def ord_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("ord_p(0) is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# ---------------------------------------------------------------------------
# truncation sets


class TruncationSet:
    """Finite set of positive integers stable under taking divisors.

    Indexes the truncation of the big Witt vectors; provides the derived
    views S/n, S(p) and sigma = lcm(S).
    """

    __slots__ = ("elems",)

    def __init__(self, elems: Iterable[int]):
        elems = sorted(set(int(e) for e in elems))
        if any(e < 1 for e in elems):
            raise ValueError("truncation sets contain positive integers only")
        have = set(elems)
        for n in elems:
            for d in divisors(n):
                if d not in have:
                    raise ValueError(
                        f"not divisor-closed: {d} divides {n} but is missing"
                    )
        self.elems = tuple(elems)

    def __contains__(self, n: int) -> bool:
        return n in self.elems

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncationSet) and self.elems == other.elems

    def __hash__(self) -> int:
        return hash(self.elems)

    def __repr__(self) -> str:
        return f"TruncationSet({list(self.elems)})"

    @property
    def sigma(self) -> int:
        """lcm of all elements."""
        return lcm_all(self.elems) if self.elems else 1

    def quotient(self, n: int) -> "TruncationSet":
        """S/n = {k : kn in S}."""
        return TruncationSet(k // n for k in self.elems if k % n == 0)

    def coprime_part(self, p: int) -> "TruncationSet":
        """S(p) = {k in S : p does not divide k}."""
        return TruncationSet(k for k in self.elems if k % p != 0)

    def primes(self) -> list[int]:
        return [n for n in self.elems if n > 1 and factorize(n) == {n: 1}]

    def is_subset_of(self, other: "TruncationSet") -> bool:
        return set(self.elems) <= set(other.elems)

    def is_p_typical(self, p: int) -> bool:
        """Whether S = {1, p, ..., p^n} for the given prime p."""
        return self.elems == tuple(p**i for i in range(len(self.elems)))


# ---------------------------------------------------------------------------
# sparse polynomials over Z

ExpVec = tuple[int, ...]


def grlex_key(exps: ExpVec) -> tuple[int, ExpVec]:
    return (sum(exps), exps)


class IntPoly:
    """Sparse multivariate polynomial with integer coefficients.

    Terms map exponent vectors of length ``vars`` to nonzero ints.  Values
    are immutable after construction and can be shared freely.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: int, terms: Optional[dict[ExpVec, int]] = None):
        if vars < 0:
            raise ValueError("variable count must be >= 0")
        self.vars = vars
        clean: dict[ExpVec, int] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != vars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {vars} vars")
                c = int(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors

    @classmethod
    def const(cls, c: int, vars: int = 0) -> "IntPoly":
        return cls(vars, {(0,) * vars: int(c)} if c else {})

    @classmethod
    def variable(cls, i: int, vars: int) -> "IntPoly":
        """x_i with 1-based index i."""
        if not 1 <= i <= vars:
            raise ValueError(f"variable index {i} out of range 1..{vars}")
        exps = [0] * vars
        exps[i - 1] = 1
        return cls(vars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, c: int, exps: ExpVec) -> "IntPoly":
        return cls(len(exps), {tuple(exps): int(c)})

    # -- queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.vars: 1}

    def constant_value(self) -> int:
        """The coefficient of the constant term."""
        return self.terms.get((0,) * self.vars, 0)

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[ExpVec, int]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    # -- arithmetic

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            if other.vars != self.vars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, int):
            return IntPoly.const(other, self.vars)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return IntPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[ExpVec, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return IntPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = IntPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other, self.vars)
        return (
            isinstance(other, IntPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i+1}" if e == 1 else f"x{i+1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            bits.append(f"{c}" if not mono else (f"{c}*{mono}" if c != 1 else mono))
        return " + ".join(bits)

    # -- calculus and substitution

    def partial(self, j: int) -> "IntPoly":
        """d/dx_j with 1-based j."""
        out: dict[ExpVec, int] = {}
        for exps, c in self.terms.items():
            e = exps[j - 1]
            if e:
                key = exps[: j - 1] + (e - 1,) + exps[j:]
                out[key] = out.get(key, 0) + c * e
        return IntPoly(self.vars, out)

    def raise_exponents(self, p: int) -> "IntPoly":
        """Substitute x_i -> x_i^p for every variable."""
        return IntPoly(
            self.vars, {tuple(e * p for e in exps): c for exps, c in self.terms.items()}
        )

    def homogeneous_part(self, degree: int) -> "IntPoly":
        return IntPoly(
            self.vars, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def reduce_mod(self, m: int) -> "IntPoly":
        """Representative with coefficients in [0, m)."""
        return IntPoly(self.vars, {e: c % m for e, c in self.terms.items()})

    def divisible_by(self, n: int) -> bool:
        return all(c % n == 0 for c in self.terms.values())

    # -- serialization: {"vars": t, "terms": [[c_str, [e...]], ...]} graded-lex

    def to_json(self) -> dict:
        return {
            "vars": self.vars,
            "terms": [[str(c), list(e)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IntPoly":
        vars = int(data["vars"])
        terms: dict[ExpVec, int] = {}
        for c_str, exps in data["terms"]:
            terms[tuple(int(e) for e in exps)] = int(c_str)
        return cls(vars, terms)


def exact_div(f: IntPoly, n: int) -> IntPoly:
    """Divide every coefficient of f by n, raising NotDivisible on remainder."""
    if n == 0:
        raise ZeroDivisionError("exact_div by zero")
    out: dict[ExpVec, int] = {}
    for exps, c in f.terms.items():
        q, r = divmod(c, n)
        if r:
            raise NotDivisible(f"coefficient {c} of {exps} is not divisible by {n}")
        out[exps] = q
    return IntPoly(f.vars, out)


def frobenius_lift_poly(f: IntPoly, p: int) -> IntPoly:
    """The standard Frobenius lift on Z[x1..xt]: x_i -> x_i^p, fixing Z.

    Satisfies phi_p(f) - f^p in p*Z[x], the hypothesis of the Dwork tests.
    """
    return f.raise_exponents(p)


# ---------------------------------------------------------------------------
# polynomials over Z/p^m


class ModPoly:
    """Polynomial with coefficients reduced into [0, modulus).

    Thin carrier for mod-p^m exactness decisions; arithmetic stays on
    IntPoly, this type records the reduction and lifts back.
    """

    __slots__ = ("modulus", "vars", "terms")

    def __init__(self, modulus: int, vars: int, terms: Optional[dict[ExpVec, int]] = None):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = modulus
        self.vars = vars
        clean: dict[ExpVec, int] = {}
        if terms:
            for exps, c in terms.items():
                c = int(c) % modulus
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def reduce(cls, f: IntPoly, modulus: int) -> "ModPoly":
        return cls(modulus, f.vars, dict(f.terms))

    def lift(self) -> IntPoly:
        return IntPoly(self.vars, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.modulus == other.modulus
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"({self.lift()!r} mod {self.modulus})"
