"""The Lucas-shifted semigroup families S(a) and T(a).

S(a) is generated by l_a together with all l_a + l_n, T(a) by the shifts
l_a + l_n alone.  This module evaluates the closed forms for their
minimal generators, Apery tables, Frobenius numbers and genus, and can
cross-check every value against the generic oracle in `semigroup`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .semigroup import (
    DEFAULT_TABLE_BOUND,
    AperyTable,
    NumericalSemigroup,
    TableBoundExceeded,
)
from .sequences import lucas
from .zeckendorf import beta


def _ceil_half(k: int) -> int:
    return -(-k // 2)


@dataclass
class FamilyReport:
    """Computed invariants for one family member, with cross-check flags."""

    family: str
    a: int
    msg: list[int]
    e: int
    m: int
    F: int
    g: int
    n_count: int
    wilf_ok: bool
    oracle_checked: bool = False
    mismatches: list[str] = field(default_factory=list)


def build_S(a: int, table_bound: int = DEFAULT_TABLE_BOUND) -> NumericalSemigroup:
    """S(a) from its finite minimal generator set (S(0) = <2,3>, S(1) = N)."""
    if a < 0:
        raise ValueError(f"family index must be >= 0, got {a}")
    if a == 0:
        gens = [2, 3]
    elif a == 1:
        gens = [1]
    else:
        la = lucas(a)
        gens = [la] + [la + lucas(i) for i in range(a)]
    return NumericalSemigroup(gens, table_bound=table_bound)


def build_T(a: int, table_bound: int = DEFAULT_TABLE_BOUND) -> NumericalSemigroup:
    """T(a) from its finite minimal generator set (small a listed explicitly)."""
    if a < 0:
        raise ValueError(f"family index must be >= 0, got {a}")
    if a == 0:
        gens = [3, 4, 5]
    elif a == 1:
        gens = [2, 3]
    elif a == 2:
        gens = [4, 5, 6, 7]
    else:
        la = lucas(a)
        gens = [la + lucas(i) for i in range(a + 1)]
    return NumericalSemigroup(gens, table_bound=table_bound)


def embedding_dimension_closed(family: str, a: int) -> int:
    """e = a + 1 in the closed-form range (S: a >= 2, T: a >= 3)."""
    family = family.upper()
    if family == "S" and a >= 2:
        return a + 1
    if family == "T" and a >= 3:
        return a + 1
    raise ValueError(f"no closed-form embedding dimension for {family}({a})")


def apery_closed_form(a: int) -> AperyTable:
    """Ap(S(a), l_a) via w(x) = beta(x) * l_a + x for 0 <= x < l_a."""
    if a < 2:
        raise ValueError(f"closed-form Apery table requires a >= 2, got {a}")
    la = lucas(a)
    return AperyTable(la, tuple(beta(x) * la + x for x in range(la)))


def frobenius_S_closed(a: int) -> int:
    """F(S(a)) = ceil((a-1)/2) * l_a - 1 for a >= 2."""
    if a < 2:
        raise ValueError(f"closed-form Frobenius number requires a >= 2, got {a}")
    return _ceil_half(a - 1) * lucas(a) - 1


def genus_S_closed(a: int) -> int:
    """g(S(a)) = a * (l_a + l_{a-2}) / 5 for a >= 1 (l_{-1} = -1 at a = 1)."""
    if a < 1:
        raise ValueError(f"closed-form genus requires a >= 1, got {a}")
    num = a * (lucas(a) + lucas(a - 2))
    q, r = divmod(num, 5)
    if r:
        raise ArithmeticError(f"genus numerator {num} not divisible by 5 (a={a})")
    return q


def genus_S_binomial(a: int) -> int:
    """g(S(a)) as the double binomial sum, valid for a >= 3."""
    if a < 3:
        raise ValueError(f"binomial genus form requires a >= 3, got {a}")
    pos = sum(i * comb(a + 1 - i, i) for i in range(1, (a + 1) // 2 + 1))
    neg = sum((i + 2) * comb(a - 3 - i, i) for i in range((a - 3) // 2 + 1))
    return pos - neg


def genus_beta_sum(a: int, table_bound: int = DEFAULT_TABLE_BOUND) -> int:
    """g(S(a)) = sum of beta(x) for 1 <= x <= l_a - 1 (materializes l_a terms)."""
    if a < 2:
        raise ValueError(f"beta-sum genus requires a >= 2, got {a}")
    la = lucas(a)
    if la > table_bound:
        raise TableBoundExceeded(f"beta sum for l_{a}={la} exceeds bound {table_bound}")
    return sum(beta(x) for x in range(1, la))


def frobenius_T_closed(a: int) -> int:
    """F(T(a)) = max(F(S(a)), 2*l_a + 1) for a >= 3."""
    if a < 3:
        raise ValueError(f"closed-form T Frobenius number requires a >= 3, got {a}")
    return max(frobenius_S_closed(a), 2 * lucas(a) + 1)


def genus_T_closed(a: int) -> int:
    """g(T(a)) = g(S(a)) + 2 for a >= 3."""
    if a < 3:
        raise ValueError(f"closed-form T genus requires a >= 3, got {a}")
    return genus_S_closed(a) + 2


def check_S_T_decomposition(a: int, table_bound: int = DEFAULT_TABLE_BOUND) -> bool:
    """Certificate that S(a) = T(a) u {l_a, 2l_a+1} and the pair is outside T(a).

    Memberships are compared up to max(F) + 1; past that both sets contain
    every integer.
    """
    if a < 3:
        raise ValueError(f"decomposition check requires a >= 3, got {a}")
    s = build_S(a, table_bound=table_bound)
    t = build_T(a, table_bound=table_bound)
    la = lucas(a)
    extra = {la, 2 * la + 1}
    if any(x in t for x in extra):
        return False
    limit = max(s.frobenius(), t.frobenius()) + 1
    return all((x in s) == (x in t or x in extra) for x in range(limit + 1))


def _closed_values(family: str, a: int) -> tuple[list[int], int, int, int, int]:
    """(msg, e, m, F, g) from closed forms; caller guarantees the a-range."""
    la = lucas(a)
    if family == "S":
        msg = sorted([la] + [la + lucas(i) for i in range(a)])
        return msg, a + 1, la, frobenius_S_closed(a), genus_S_closed(a)
    msg = sorted(la + lucas(i) for i in range(a + 1))
    return msg, a + 1, msg[0], frobenius_T_closed(a), genus_T_closed(a)


def oracle_report(
    family: str, a: int, table_bound: int = DEFAULT_TABLE_BOUND
) -> FamilyReport:
    """FamilyReport computed entirely by the generic-semigroup oracle."""
    family = family.upper()
    s = (build_S if family == "S" else build_T)(a, table_bound=table_bound)
    msg = s.minimal_generators()
    f = s.frobenius()
    g = s.genus()
    return FamilyReport(
        family=family,
        a=a,
        msg=msg,
        e=len(msg),
        m=s.multiplicity,
        F=f,
        g=g,
        n_count=s.sporadic_count(),
        wilf_ok=s.wilf_check(),
        oracle_checked=True,
    )


def report(
    family: str,
    a: int,
    use_oracle: bool = False,
    table_bound: int = DEFAULT_TABLE_BOUND,
) -> FamilyReport:
    """Closed-form report, optionally cross-checked value by value.

    Outside the closed-form range (S: a < 2, T: a < 3) the values come
    from the oracle on the explicitly listed small semigroups.
    """
    family = family.upper()
    if family not in ("S", "T"):
        raise ValueError(f"family must be S or T, got {family!r}")
    if a < 0:
        raise ValueError(f"family index must be >= 0, got {a}")
    closed = a >= 2 if family == "S" else a >= 3

    if not closed:
        return oracle_report(family, a, table_bound=table_bound)

    msg, e, m, f, g = _closed_values(family, a)
    rep = FamilyReport(
        family=family,
        a=a,
        msg=msg,
        e=e,
        m=m,
        F=f,
        g=g,
        n_count=f + 1 - g,
        wilf_ok=f + 1 <= e * (f + 1 - g),
    )
    if use_oracle:
        _cross_check(rep, table_bound)
    return rep


def _cross_check(rep: FamilyReport, table_bound: int) -> None:
    s = (build_S if rep.family == "S" else build_T)(rep.a, table_bound=table_bound)
    checks = [
        ("msg", rep.msg, s.minimal_generators()),
        ("e", rep.e, s.embedding_dimension()),
        ("m", rep.m, s.multiplicity),
        ("F", rep.F, s.frobenius()),
        ("g", rep.g, s.genus()),
        ("n", rep.n_count, s.sporadic_count()),
        ("wilf", rep.wilf_ok, s.wilf_check()),
    ]
    if rep.family == "S":
        checks.append(("apery", apery_closed_form(rep.a).w, s.apery().w))
    for label, ours, oracle in checks:
        if ours != oracle:
            rep.mismatches.append(f"{label}: closed={ours!r} oracle={oracle!r}")
    rep.oracle_checked = True
