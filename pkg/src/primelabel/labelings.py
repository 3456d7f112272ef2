"""Closed-form prime labelings, one per graph family.

Every scheme first computes labels by role (a dict keyed like the roles of a
:class:`~primelabel.families.FamilyInstance`) and then binds them to vertex ids
through an instance. Overlapping congruence conditions are resolved with the
most specific modulus first.
"""
from __future__ import annotations

from typing import Callable, Optional

from .errors import InvalidParameter, NotApplicable, UnsupportedScheme
from .families import (
    FamilyInstance,
    Role,
    build_book,
    build_cycle_chain,
    build_cycle_pendant_star,
    build_fibonacci_chain,
    build_prism,
    supported_chain_size,
)
from .graph import Labeling
from .numtheory import fibonacci, is_mersenne_prime_exponent, is_prime

RoleLabels = dict[Role, int]


def bind(instance: FamilyInstance, role_labels: RoleLabels) -> Labeling:
    if set(role_labels) != set(instance.roles):
        raise InvalidParameter("role labels do not match the instance roles")
    return Labeling.from_mapping(
        {instance.roles[r]: lab for r, lab in role_labels.items()}, instance.graph.vertex_count
    )


def _check_instance(instance: FamilyInstance, name: str, params: tuple[int, ...]) -> None:
    if instance.family.name != name or instance.family.params != params:
        raise InvalidParameter(f"instance is {instance.family}, expected {name}{params}")


# -- cycle pendant stars ----------------------------------------------------


def _cps_block_m4(i: int) -> tuple[int, list[int]]:
    b = 6 * i
    return b - 1, [b - 2, b - 3, b - 4, b]


def _cps_block_m5(i: int) -> tuple[int, list[int]]:
    b = 7 * i
    r = i % 6
    if i % 30 == 0:
        return b - 1, [b - 5, b - 4, b - 3, b - 2, b]
    if r in (1, 3):
        p = b - 2
    elif r in (2, 4):
        p = b - 3
    elif r == 5:
        p = b - 4
    else:
        p = b - 5
    o1 = b - 4 if r == 0 else b - 5
    o2 = b - 3 if r in (0, 5) else b - 4
    # The o_{i,3} branches overlap only at i = 0 mod 30, handled above.
    o3 = b - 3 if r in (1, 3) else b - 2
    return p, [o1, o2, o3, b - 1, b]


def _cps_block_m6(i: int) -> tuple[int, list[int]]:
    b = 8 * i
    if i % 15 == 0:
        return b - 1, [b - 6, b - 5, b - 4, b - 3, b - 2, b]
    if i % 3 == 0:
        return b - 5, [b - 6, b - 3, b - 4, b - 1, b - 2, b]
    return b - 3, [b - 6, b - 5, b - 4, b - 1, b - 2, b]


def _cps_block_m7(i: int) -> tuple[int, list[int]]:
    b = 9 * i
    if i % 70 == 0:
        return b - 1, [b - 7, b - 6, b - 5, b - 4, b - 3, b - 2, b]
    if i % 10 == 0:
        return b - 7, [b - 5, b - 6, b - 4, b - 1, b - 3, b - 2, b]
    if i % 2 == 0:
        return b - 5, [b - 7, b - 6, b - 4, b - 1, b - 3, b - 2, b]
    return b - 4, [b - 7, b - 6, b - 5, b - 1, b - 3, b - 2, b]


def _cps_block_m8(i: int) -> tuple[int, list[int]]:
    b = 10 * i
    if i % 21 == 0:
        return b - 1, [b - 8, b - 7, b - 6, b - 5, b - 4, b - 3, b - 2, b]
    if i % 3 == 0:
        return b - 7, [b - 8, b - 3, b - 6, b - 5, b - 4, b - 1, b - 2, b]
    return b - 3, [b - 8, b - 7, b - 6, b - 5, b - 4, b - 1, b - 2, b]


_CPS_BLOCKS = {4: _cps_block_m4, 5: _cps_block_m5, 6: _cps_block_m6, 7: _cps_block_m7, 8: _cps_block_m8}


def cps_role_labels(n: int, m: int) -> RoleLabels:
    if m not in _CPS_BLOCKS:
        raise UnsupportedScheme(f"cycle pendant star labeling implemented for 4 <= m <= 8, got m={m}")
    if n < 3:
        raise InvalidParameter(f"cycle pendant star needs n >= 3, got {n}")
    block = _CPS_BLOCKS[m]
    out: RoleLabels = {}
    for i in range(1, n + 1):
        p, outer = block(i)
        out[("c", (i,))] = (m + 2) * i - (m + 1)
        out[("p", (i,))] = p
        for k, lab in enumerate(outer, start=1):
            out[("o", (i, k))] = lab
    return out


def label_cps(n: int, m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    role_labels = cps_role_labels(n, m)
    if instance is None:
        instance = build_cycle_pendant_star(n, m)
    _check_instance(instance, "cps", (n, m))
    return bind(instance, role_labels)


# -- cycle chains -----------------------------------------------------------


def chain4_role_labels(m: int) -> RoleLabels:
    out: RoleLabels = {("c", (1, k)): k + 1 for k in range(1, 5)}
    for i in range(2, m + 1):
        for k in range(1, 4):
            out[("c", (i, k))] = 3 * i + k - 1
    # The largest label 3m+2 is replaced by 1; for a lone cycle it sits on c_{1,4}.
    out[("c", (m, 3) if m >= 2 else (1, 4))] = 1
    return out


def chain6_role_labels(m: int) -> RoleLabels:
    out: RoleLabels = {("c", (1, k)): k for k in range(1, 7)}
    for i in range(2, m + 1):
        for k in range(1, 6):
            out[("c", (i, k))] = 5 * i + k - 4
    return out


def chain_power_of_two_role_labels(n: int, m: int) -> RoleLabels:
    out: RoleLabels = {("c", (1, k)): k for k in range(1, n + 1)}
    for i in range(2, m + 1):
        for k in range(1, n):
            out[("c", (i, k))] = (n - 1) * i + k - (n - 2)
    return out


def _label_chain(n: int, m: int, role_labels: RoleLabels, instance) -> Labeling:
    if instance is None:
        instance = build_cycle_chain(n, m)
    _check_instance(instance, "chain", (n, m))
    return bind(instance, role_labels)


def _chain_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"chain length m must be >= 1, got {m}")


def label_chain4(m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    _chain_m(m)
    return _label_chain(4, m, chain4_role_labels(m), instance)


def label_chain6(m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    _chain_m(m)
    return _label_chain(6, m, chain6_role_labels(m), instance)


def label_chain8(m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    return label_chain_mersenne(3, m, instance)


def label_chain_mersenne(k: int, m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    """Chain of 2^k-cycles, valid whenever 2^k - 1 is prime (k >= 3)."""
    if k < 3 or not is_mersenne_prime_exponent(k):
        raise UnsupportedScheme(f"2^{k} - 1 = {2**k - 1} is not a Mersenne prime with k >= 3")
    _chain_m(m)
    n = 2**k
    return _label_chain(n, m, chain_power_of_two_role_labels(n, m), instance)


def label_chain(n: int, m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    if n == 4:
        return label_chain4(m, instance)
    if n == 6:
        return label_chain6(m, instance)
    if supported_chain_size(n):
        return label_chain_mersenne(n.bit_length() - 1, m, instance)
    raise UnsupportedScheme(f"no cycle chain labeling for n={n}")


# -- Fibonacci chains -------------------------------------------------------


def fibonacci_role_labels(m: int) -> RoleLabels:
    """Spine p_j gets F_{j+1}; detour vertices fill the gap to F_{j+2} in order."""
    out: RoleLabels = {("p", (j,)): fibonacci(j + 1) for j in range(1, m + 3)}
    for j in range(3, m + 2):
        start = fibonacci(j + 1)
        for t in range(1, fibonacci(j)):
            out[("d", (j, t))] = start + t
    return out


def label_fibonacci_chain(m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"Fibonacci chain needs m >= 1, got {m}")
    if instance is None:
        instance = build_fibonacci_chain(m)
    _check_instance(instance, "fib", (m,))
    return bind(instance, fibonacci_role_labels(m))


# -- prisms -----------------------------------------------------------------


def prism_role_labels(n: int) -> RoleLabels:
    if n < 3:
        raise InvalidParameter(f"prism needs n >= 3, got {n}")
    if n % 2 == 1:
        raise NotApplicable(f"C_{n} x P_2 has no prime labeling for odd n")
    if n < 4 or not is_prime(n - 1):
        raise UnsupportedScheme(f"prism labeling needs n - 1 prime; {n - 1} is not")
    inner = {1: n - 1, n - 1: 1, n: 2 * n}
    out: RoleLabels = {}
    for i in range(1, n + 1):
        out[("c", (1, i))] = inner.get(i, i)
        out[("c", (2, i))] = n if i == 1 else i + n - 1
    return out


def label_prism(n: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    role_labels = prism_role_labels(n)
    if instance is None:
        instance = build_prism(n)
    _check_instance(instance, "prism", (n,))
    return bind(instance, role_labels)


# -- generalized books ------------------------------------------------------

ROW_PATTERNS: dict[str, tuple[int, ...]] = {
    "A": (2, 3, 4, 5, 6, 7, 1),
    "B": (2, 3, 6, 7, 4, 5, 1),
    "C": (3, 2, 7, 6, 5, 4, 1),
    "D": (5, 6, 7, 2, 3, 4, 1),
    "E": (4, 5, 6, 7, 2, 3, 1),
    "F": (3, 4, 5, 6, 7, 2, 1),
    "G": (6, 7, 2, 3, 4, 5, 1),
    "H": (2, 1, 3, 7, 6, 5, 4),
    "I": (7, 6, 1, 2, 3, 4, 5),
    "J": (7, 6, 5, 4, 3, 2, 1),
}

BOOK7_CYCLE = "CEJAJADEJAFGCHJAJAIEFEJADEJAJA"


def row_permutation(pattern: str, k: int) -> list[int]:
    """The seven labels 7k+1..7k+7 of row k, reordered by ``pattern``."""
    if pattern not in ROW_PATTERNS:
        raise InvalidParameter(f"unknown row pattern {pattern!r}")
    if k < 1:
        raise InvalidParameter(f"row index must be >= 1, got {k}")
    return [7 * k + j for j in ROW_PATTERNS[pattern]]


def _book_row_m3(k: int) -> list[int]:
    if k % 2 == 1:
        return [3 * k - i + 4 for i in (1, 2, 3)]
    return [3 * k + 2, 3 * k + 3, 3 * k + 1]


def _book_row_m4(k: int) -> list[int]:
    if k % 3 == 1:
        return [4 * k + 2, 4 * k + 3, 4 * k + 4, 4 * k + 1]
    return [4 * k - i + 5 for i in (1, 2, 3, 4)]


def _book_row_m5(k: int) -> list[int]:
    if k == 1:
        return [11 - i for i in range(1, 6)]
    r = (k - 1) % 6
    b = 5 * k
    if r in (1, 5):
        return [b + 1 + i for i in range(1, 5)] + [b + 1]
    if r in (0, 2):
        return [b + 2 + i for i in range(1, 4)] + [b + 6 - 4, b + 6 - 5]
    if r == 3:
        return [b + 5 - i for i in range(1, 4)] + [b + 5, b + 1]
    return [b + 6 - i for i in range(1, 6)]


def _book_row_m6(k: int) -> list[int]:
    b = 6 * k
    if k <= 2 or (k > 3 and (k - 3) % 5 != 0):
        # Rows past the third use 6(k+1)+1-i as well; 6k+1-i would leave the
        # row's label range 6k+1..6k+6.
        return [b + 7 - i for i in range(1, 7)]
    return [b + 1 + i for i in range(1, 6)] + [b + 1]


def _book_row_m7(k: int) -> list[int]:
    return row_permutation(BOOK7_CYCLE[(k - 1) % 30], k)


_BOOK_ROWS: dict[int, Callable[[int], list[int]]] = {
    3: _book_row_m3,
    4: _book_row_m4,
    5: _book_row_m5,
    6: _book_row_m6,
    7: _book_row_m7,
}


def book_row(m: int, k: int) -> list[int]:
    """Labels of row k, listed by page i = 1..m."""
    if m not in _BOOK_ROWS:
        raise UnsupportedScheme(f"generalized book labeling implemented for 3 <= m <= 7, got m={m}")
    return _BOOK_ROWS[m](k)


def book_role_labels(n: int, m: int) -> RoleLabels:
    if m not in _BOOK_ROWS:
        raise UnsupportedScheme(f"generalized book labeling implemented for 3 <= m <= 7, got m={m}")
    if n < 1:
        raise InvalidParameter(f"book needs n >= 1, got {n}")
    out: RoleLabels = {("c", (j,)): j for j in range(1, m + 1)}
    for k in range(1, n + 1):
        for i, lab in enumerate(book_row(m, k), start=1):
            out[("v", (i, k))] = lab
    return out


def label_book(n: int, m: int, instance: Optional[FamilyInstance] = None) -> Labeling:
    role_labels = book_role_labels(n, m)
    if instance is None:
        instance = build_book(n, m)
    _check_instance(instance, "book", (n, m))
    return bind(instance, role_labels)


# -- dispatch ---------------------------------------------------------------


def label_instance(instance: FamilyInstance) -> Labeling:
    """Apply the closed-form scheme matching the instance's family."""
    name, params = instance.family.name, instance.family.params
    if name == "cps":
        return label_cps(*params, instance=instance)
    if name == "chain":
        return label_chain(*params, instance=instance)
    if name == "fib":
        return label_fibonacci_chain(*params, instance=instance)
    if name == "prism":
        return label_prism(*params, instance=instance)
    if name == "book":
        return label_book(*params, instance=instance)
    raise UnsupportedScheme(f"no closed-form labeling for family {name!r}")
