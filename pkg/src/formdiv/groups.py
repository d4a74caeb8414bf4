"""Finite groups as Cayley tables.

Elements are dense indices ``0..N-1``; names are for display and for
binding constants from the command line.  Catalog groups:

* ``Zn``   cyclic, element ``k`` is ``g^k``
* ``Dn``   dihedral of order ``2n``, index ``f*n + k`` is ``r^k s^f``
* ``Sn``   symmetric (``n <= 4``), permutations in lexicographic one-line order
* ``Q8``   quaternion group ``1, -1, i, -i, j, -j, k, -k``
* ``AxB``  direct products, lexicographic on components
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

MAX_ORDER = 64
SUBGROUP_BOUND = 24


class GroupError(ValueError):
    """Raised for unknown catalog names and invalid Cayley tables."""


@dataclass(frozen=True, eq=False)
class GroupTable:
    name: str
    element_names: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.mult)

    def __len__(self) -> int:
        return len(self.mult)

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        result = self.identity
        while k:
            if k & 1:
                result = self.mult[result][g]
            g = self.mult[g][g]
            k >>= 1
        return result

    def conj(self, x: int, y: int) -> int:
        """``x^y = y^-1 x y``."""
        return self.mult[self.mult[self.inv[y]][x]][y]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mult[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mult[a][b] == self.mult[b][a] for a in range(n) for b in range(a + 1, n))

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.element_names)}

    def element(self, name: str) -> int:
        """Resolve an element by name, by ``#index``, or ``e``/``1`` for the identity."""
        if name in self.index_of:
            return self.index_of[name]
        if name in ("e", "1"):
            return self.identity
        if name.startswith("#") and name[1:].isdigit() and int(name[1:]) < self.order:
            return int(name[1:])
        raise GroupError(f"{self.name} has no element named {name!r}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "elements": list(self.element_names),
            "table": [list(row) for row in self.mult],
        }


def from_table(name: str, element_names: Sequence[str], table: Sequence[Sequence[int]]) -> GroupTable:
    """Validate a multiplication table and build a :class:`GroupTable`.

    The identity is inferred and inverses are derived.  Every failure names
    the first violating entry or triple.
    """
    n = len(table)
    if n == 0:
        raise GroupError("empty table")
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds the limit {MAX_ORDER}")
    if len(element_names) != n:
        raise GroupError(f"{len(element_names)} element names for a table of {n} rows")
    if len(set(element_names)) != n:
        raise GroupError("element names are not distinct")
    rows = []
    for a, row in enumerate(table):
        if len(row) != n:
            raise GroupError(f"row {a} has length {len(row)}, expected {n}")
        for b, c in enumerate(row):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < n:
                raise GroupError(f"closure fails at ({a}, {b}): entry {c!r} is not an index in [0, {n})")
        rows.append(tuple(row))
    mult = tuple(rows)

    identity = next(
        (e for e in range(n) if all(mult[e][g] == g and mult[g][e] == g for g in range(n))),
        None,
    )
    if identity is None:
        raise GroupError("no identity element")

    inv = []
    for g in range(n):
        h = next((h for h in range(n) if mult[g][h] == identity and mult[h][g] == identity), None)
        if h is None:
            raise GroupError(f"element {g} ({element_names[g]}) has no inverse")
        inv.append(h)

    for a in range(n):
        ra = mult[a]
        for b in range(n):
            ab = ra[b]
            rab, rb = mult[ab], mult[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupError(f"associativity fails at ({a}, {b}, {c})")

    return GroupTable(name, tuple(element_names), mult, tuple(inv), identity)


def load_table_file(path: str | Path) -> GroupTable:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GroupError(f"cannot read group table {path}: {exc}") from exc
    if not isinstance(doc, dict) or not {"elements", "table"} <= doc.keys():
        raise GroupError(f"{path}: expected an object with 'elements' and 'table'")
    return from_table(doc.get("name", Path(path).stem), doc["elements"], doc["table"])


# -- catalog ---------------------------------------------------------------


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    names = ["e"] + [("g" if k == 1 else f"g^{k}") for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return from_table(f"Z{n}", names, table)


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order ``2n`` with ``s r s = r^-1``."""
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")

    def name(k: int, f: int) -> str:
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        s = "s" if f else ""
        return (r + s) or "e"

    elems = [(k, f) for f in range(2) for k in range(n)]
    index = {el: i for i, el in enumerate(elems)}

    def mul(x, y):
        (a, f), (b, g) = x, y
        return ((a + (-b if f else b)) % n, (f + g) % 2)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return from_table(f"D{n}", [name(*el) for el in elems], table)


def symmetric(n: int) -> GroupTable:
    """Symmetric group; ``p*q`` applies ``p`` first, then ``q``."""
    if not 1 <= n <= 4:
        raise GroupError("symmetric groups are catalogued for 1 <= n <= 4")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(q[p[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["".join(str(i + 1) for i in p) for p in perms]
    return from_table(f"S{n}", names, table)


def quaternion() -> GroupTable:
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # unit basis products: (sign, unit) with units 0=1, 1=i, 2=j, 3=k
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }  # fmt: skip
    elems = [(s, u) for u in range(4) for s in (1, -1)]
    index = {el: i for i, el in enumerate(elems)}

    def mul(x, y):
        sign, unit = unit_mul[x[1], y[1]]
        return (x[0] * y[0] * sign, unit)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return from_table("Q8", names, table)


def direct_product(*factors: GroupTable) -> GroupTable:
    if not factors:
        raise GroupError("direct product of no groups")
    if len(factors) == 1:
        return factors[0]
    order = math.prod(f.order for f in factors)
    if order > MAX_ORDER:
        raise GroupError(f"group order {order} exceeds the limit {MAX_ORDER}")
    elems = list(itertools.product(*(range(f.order) for f in factors)))
    index = {el: i for i, el in enumerate(elems)}
    table = [
        [index[tuple(f.mult[a][b] for f, a, b in zip(factors, x, y))] for y in elems]
        for x in elems
    ]
    names = ["(" + ",".join(f.element_names[a] for f, a in zip(factors, x)) + ")" for x in elems]
    return from_table("x".join(f.name for f in factors), names, table)


_ATOM = re.compile(r"^(Z|D|S)(\d+)$|^(Q8)$")


def _catalog_atom(name: str) -> GroupTable:
    m = _ATOM.match(name)
    if not m:
        raise GroupError(f"unknown group {name!r}")
    if m.group(3):
        return quaternion()
    kind, n = m.group(1), int(m.group(2))
    if kind == "Z":
        if n > MAX_ORDER:
            raise GroupError(f"group order {n} exceeds the limit {MAX_ORDER}")
        return cyclic(n)
    if kind == "D":
        if 2 * n > MAX_ORDER:
            raise GroupError(f"group order {2 * n} exceeds the limit {MAX_ORDER}")
        return dihedral(n)
    return symmetric(n)


_cache: dict[str, GroupTable] = {}


def load_group(descriptor: str) -> GroupTable:
    """Load a catalog group (``"S3"``, ``"Z2xQ8"``) or a JSON table (``"@path"``
    or any existing path ending in ``.json``)."""
    if descriptor.startswith("@"):
        return load_table_file(descriptor[1:])
    if descriptor.endswith(".json"):
        return load_table_file(descriptor)
    if descriptor not in _cache:
        parts = descriptor.split("x")
        _cache[descriptor] = direct_product(*(_catalog_atom(p) for p in parts))
    return _cache[descriptor]


CATALOG = (
    ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z12", "Z16", "Z24"]
    + ["S1", "S2", "S3", "S4"]
    + ["D2", "D3", "D4", "D5", "D6", "D8", "D12"]
    + ["Q8", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "Z2xS3", "Z2xQ8", "Z3xS3", "Z2xD4", "Z4xZ4"]
)


def catalog(max_order: int | None = None) -> list[GroupTable]:
    groups = [load_group(name) for name in CATALOG]
    if max_order is not None:
        groups = [g for g in groups if g.order <= max_order]
    return groups


# -- subgroups -------------------------------------------------------------


def centralizer(G: GroupTable, S: Iterable[int]) -> frozenset[int]:
    S = list(set(S))
    mult = G.mult
    return frozenset(h for h in range(G.order) if all(mult[h][g] == mult[g][h] for g in S))


def generated_subgroup(G: GroupTable, gens: Iterable[int]) -> frozenset[int]:
    gens = list(gens)
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.mult[x][g]
                if y not in members:
                    members.add(y)
                    new.append(y)
        frontier = new
    return frozenset(members)


def is_subgroup(G: GroupTable, H: Iterable[int]) -> bool:
    H = set(H)
    if G.identity not in H:
        return False
    return all(G.mult[a][b] in H for a in H for b in H) and all(G.inv[a] in H for a in H)


def enumerate_subgroups(G: GroupTable, bound: int = SUBGROUP_BOUND) -> list[frozenset[int]]:
    """All subgroups, each once, sorted by (order, members).

    Starts from the cyclic subgroups and closes under joins until no new
    subgroup appears.
    """
    if G.order > bound:
        raise GroupError(f"subgroup enumeration limited to order <= {bound}, got {G.order}")
    found = {generated_subgroup(G, [g]) for g in range(G.order)}
    frontier = set(found)
    while frontier:
        new = set()
        for H in frontier:
            for K in found:
                if H <= K or K <= H:
                    continue
                J = generated_subgroup(G, H | K)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def divides(d: int, n: int) -> bool:
    """``d | n`` for positive ``d``; every positive integer divides 0."""
    return n % d == 0


def gcd_group_int(G: GroupTable | int, n: int) -> int:
    """GCD of a finite group (or a finite order) and ``n >= 0``.

    For finite groups the LCM of subgroup orders dividing ``n`` collapses
    to ``gcd(|G|, n)``; ``gcd(|G|, 0) = |G|`` matches the convention that
    every order divides 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    order = G if isinstance(G, int) else G.order
    return math.gcd(order, n)


def gcd_group_int_by_subgroups(G: GroupTable, n: int) -> int:
    """Reference definition: LCM of the orders of subgroups dividing ``n``."""
    orders = {len(H) for H in enumerate_subgroups(G, bound=MAX_ORDER)}
    return reduce(math.lcm, (k for k in orders if divides(k, n)), 1)


def is_normal_in(G: GroupTable, U: frozenset[int], V: Iterable[int]) -> bool:
    return all(G.conj(u, v) in U for v in V for u in U)


def brauer_check(G: GroupTable, U: Iterable[int], v: int) -> bool:
    """For every ``u`` in ``U``, ``(vu)^|U|`` is a ``U``-conjugate of ``v^|U|``.

    ``U`` must be a subgroup normal in ``<U, v>``.
    """
    U = frozenset(U)
    if not is_subgroup(G, U):
        raise GroupError("U is not a subgroup")
    if not is_normal_in(G, U, generated_subgroup(G, U | {v})):
        raise GroupError("U is not normal in <U, v>")
    k = len(U)
    target = G.power(v, k)
    conjugates = {G.conj(target, w) for w in U}
    return all(G.power(G.mult[v][u], k) in conjugates for u in U)
