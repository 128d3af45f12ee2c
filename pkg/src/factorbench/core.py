"""Finite monoids given by full multiplication tables.

Conventions used everywhere in this package: elements of a monoid of size n
are the integers 0..n-1, the identity is always element 0, and table[x][y]
is the product x*y with x the left factor.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import (
    IndexOutOfRange,
    NoIdentity,
    NotAssociative,
    SizeLimit,
    UnknownKind,
)

# Raw-enumeration instances (gl, full transformations) refuse above this
# many candidate elements.
ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class AssociationPartition:
    """Partition of the carrier into two-sided associate classes u*x*v (u, v units).

    class_of[x] is the index of x's class; classes are ordered by smallest
    member, so representatives are reproducible.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PropertyReport:
    """Structural flags of a finite monoid, with a counterexample per false flag.

    Witnesses are tuples of element ids found in lexicographic scan order:
    acyclic -> (u, x, v) with u*x*v == x and u or v a non-unit;
    unit_cancellative -> (x, y) with y a non-unit and x*y == x or y*x == x;
    cancellative -> (x, y, z) with x != y and x*z == y*z or z*x == z*y;
    normalizing -> (a,) with a*H != H*a; commutative -> (x, y) with x*y != y*x;
    reduced -> (u,) a non-identity unit; group -> (x,) a non-unit.
    """

    acyclic: bool
    unit_cancellative: bool
    cancellative: bool
    normalizing: bool
    commutative: bool
    reduced: bool
    group: bool
    witnesses: dict[str, tuple[int, ...]]


@dataclass(frozen=True)
class OrderReport:
    orders: tuple[int, ...]
    idempotents: tuple[int, ...]
    nontrivial_idempotents: tuple[int, ...]


class FiniteMonoid:
    """A finite monoid, validated at construction.

    Construction is O(n^3) (full associativity check) and eagerly computes the
    unit group and the association partition.  Instances are immutable and all
    queries are pure, so they are safe to share between workers.
    """

    identity = 0

    def __init__(self, table, names=None):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n < 1:
            raise NoIdentity("a monoid needs at least the identity element")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise IndexOutOfRange(f"row {x} has length {len(row)}, expected {n}")
            for y, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise IndexOutOfRange(f"entry ({x}, {y}) = {v!r} not in [0, {n})")
        for x in range(n):
            if rows[0][x] != x or rows[x][0] != x:
                raise NoIdentity(f"element 0 is not a two-sided identity (fails at {x})")
        for x in range(n):
            rx = rows[x]
            for y in range(n):
                rxy = rows[rx[y]]
                ry = rows[y]
                for z in range(n):
                    if rxy[z] != rx[ry[z]]:
                        raise NotAssociative(x, y, z)
        if names is None:
            names = ("1",) + tuple(f"x{i}" for i in range(1, n))
        else:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise ValueError(f"got {len(names)} names for {n} elements")
            if len(set(names)) != n:
                raise ValueError("element names must be distinct")
        self.size = n
        self.table = rows
        self.names = names
        self.units, self.inverse = self._compute_units()
        self.association = self._compute_association()

    # -- basic queries -------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def elements(self) -> range:
        return range(self.size)

    def is_unit(self, x: int) -> bool:
        return x in self.units

    def element_order(self, x: int) -> int:
        seen = set()
        p = x
        while p not in seen:
            seen.add(p)
            p = self.table[p][x]
        return len(seen)

    def divides(self, x: int, y: int) -> bool:
        """x divides y: y = u*x*v for some u, v in H."""
        return y in self._two_sided_orbits[x]

    def associated(self, x: int, y: int) -> bool:
        """x and y differ by unit factors on both sides."""
        return self.association.class_of[x] == self.association.class_of[y]

    def name_of(self, x: int) -> str:
        return self.names[x]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    # -- cached structure ----------------------------------------------

    def _compute_units(self):
        n = self.size
        t = self.table
        inverse = {}
        for u in range(n):
            for v in range(n):
                if t[u][v] == 0 and t[v][u] == 0:
                    inverse[u] = v
                    break
        return frozenset(inverse), inverse

    def _compute_association(self):
        n = self.size
        t = self.table
        units = sorted(self.units)
        class_of = [-1] * n
        classes = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            orbit = sorted({t[t[u][x]][v] for u in units for v in units})
            idx = len(classes)
            for y in orbit:
                class_of[y] = idx
            classes.append(tuple(orbit))
        return AssociationPartition(tuple(class_of), tuple(classes))

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        """Non-units that are not a product of two non-units."""
        nonunits = [x for x in self.elements() if x not in self.units]
        products = {self.table[x][y] for x in nonunits for y in nonunits}
        return tuple(a for a in nonunits if a not in products)

    @cached_property
    def atom_classes(self) -> tuple[tuple[int, ...], ...]:
        """Associate classes of the atom alphabet, ordered by smallest member.

        Sandwiching an atom between units yields an atom, so the association
        partition restricts cleanly to the atoms.
        """
        part = self.association
        seen: dict[int, int] = {}
        classes: list[list[int]] = []
        for a in self.atoms:
            c = part.class_of[a]
            if c in seen:
                classes[seen[c]].append(a)
            else:
                seen[c] = len(classes)
                classes.append([a])
        return tuple(tuple(c) for c in classes)

    @cached_property
    def atom_class_of(self) -> dict[int, int]:
        return {a: i for i, cls in enumerate(self.atom_classes) for a in cls}

    @cached_property
    def _two_sided_orbits(self) -> tuple[frozenset[int], ...]:
        # _two_sided_orbits[x] = H x H, the set of elements x divides.
        n = self.size
        t = self.table
        orbits = []
        for x in range(n):
            left = {t[u][x] for u in range(n)}
            orbits.append(frozenset(t[l][v] for l in left for v in range(n)))
        return tuple(orbits)

    def __repr__(self):
        return f"FiniteMonoid(size={self.size})"


# -- structural analyses ------------------------------------------------


def units(H: FiniteMonoid) -> tuple[frozenset[int], dict[int, int]]:
    """The unit group together with the inverse of each unit."""
    return H.units, dict(H.inverse)


def atoms(H: FiniteMonoid) -> tuple[int, ...]:
    return H.atoms


def order_and_idempotents(H: FiniteMonoid) -> OrderReport:
    orders = tuple(H.element_order(x) for x in H.elements())
    idem = tuple(x for x in H.elements() if H.table[x][x] == x)
    return OrderReport(orders, idem, tuple(x for x in idem if x != 0))


def semigroup_closure(H: FiniteMonoid, seed) -> frozenset[int]:
    """Smallest subset containing seed and closed under the product (no
    identity unless generated)."""
    cur = set(seed)
    work = list(cur)
    t = H.table
    while work:
        z = work.pop()
        for x in tuple(cur):
            for p in (t[z][x], t[x][z]):
                if p not in cur:
                    cur.add(p)
                    work.append(p)
    return frozenset(cur)


def divisor_closed_submonoid(H: FiniteMonoid, xs) -> frozenset[int]:
    """Least submonoid containing xs that also contains every divisor of each
    of its elements; computed by fixpoint iteration."""
    cur = {0} | set(xs)
    t = H.table
    changed = True
    while changed:
        changed = False
        for x in tuple(cur):
            for y in tuple(cur):
                p = t[x][y]
                if p not in cur:
                    cur.add(p)
                    changed = True
        for m in tuple(cur):
            for d in H.elements():
                if d not in cur and H.divides(d, m):
                    cur.add(d)
                    changed = True
    return frozenset(cur)


def property_battery(H: FiniteMonoid) -> PropertyReport:
    """Decide the structural flags by exhaustive scan, recording the first
    counterexample (lexicographic by element indices) for each false flag."""
    n = H.size
    t = H.table
    un = H.units
    rng = range(n)
    wit: dict[str, tuple[int, ...]] = {}

    acyclic_wit = next(
        (
            (u, x, v)
            for u in rng
            for x in rng
            for v in rng
            if (u not in un or v not in un) and t[t[u][x]][v] == x
        ),
        None,
    )
    if acyclic_wit:
        wit["acyclic"] = acyclic_wit

    uc_wit = next(
        (
            (x, y)
            for x in rng
            for y in rng
            if y not in un and (t[x][y] == x or t[y][x] == x)
        ),
        None,
    )
    if uc_wit:
        wit["unit_cancellative"] = uc_wit

    canc_wit = next(
        (
            (x, y, z)
            for x in rng
            for y in rng
            for z in rng
            if x != y and (t[x][z] == t[y][z] or t[z][x] == t[z][y])
        ),
        None,
    )
    if canc_wit:
        wit["cancellative"] = canc_wit

    norm_wit = next(
        (
            (a,)
            for a in rng
            if {t[a][x] for x in rng} != {t[x][a] for x in rng}
        ),
        None,
    )
    if norm_wit:
        wit["normalizing"] = norm_wit

    comm_wit = next(
        ((x, y) for x in rng for y in rng if t[x][y] != t[y][x]), None
    )
    if comm_wit:
        wit["commutative"] = comm_wit

    red_wit = next(((u,) for u in sorted(un) if u != 0), None)
    if red_wit:
        wit["reduced"] = red_wit

    grp_wit = next(((x,) for x in rng if x not in un), None)
    if grp_wit:
        wit["group"] = grp_wit

    return PropertyReport(
        acyclic=acyclic_wit is None,
        unit_cancellative=uc_wit is None,
        cancellative=canc_wit is None,
        normalizing=norm_wit is None,
        commutative=comm_wit is None,
        reduced=red_wit is None,
        group=grp_wit is None,
        witnesses=wit,
    )


def atom_transversal(H: FiniteMonoid) -> tuple[int, ...]:
    """One representative per associate class of atoms (smallest index)."""
    out = []
    seen = set()
    for a in H.atoms:
        c = H.association.class_of[a]
        if c not in seen:
            seen.add(c)
            out.append(a)
    return tuple(out)


def reduce_generating_set(H: FiniteMonoid, gens) -> frozenset[int]:
    """Shrink gens to a subset generating the same unit-sandwiched
    subsemigroup, with no member generated by the sandwiched others.

    Removal is iterative in ascending element order, so the result is
    deterministic.
    """
    part = H.association
    current = sorted(set(gens))

    def sandwiched(elems):
        out = set()
        for b in elems:
            out.update(part.classes[part.class_of[b]])
        return out

    changed = True
    while changed:
        changed = False
        for a in current:
            rest = [b for b in current if part.class_of[b] != part.class_of[a]]
            if a in semigroup_closure(H, sandwiched(rest)):
                current.remove(a)
                changed = True
                break
    return frozenset(current)


def submonoid(H: FiniteMonoid, subset) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Restrict H to a product-closed subset containing the identity.

    Returns the restricted monoid plus the list mapping new indices back to
    elements of H (new index 0 is the identity).
    """
    elems = sorted(set(subset))
    if not elems or elems[0] != 0:
        raise ValueError("subset must contain the identity 0")
    pos = {e: i for i, e in enumerate(elems)}
    for x in elems:
        for y in elems:
            if H.table[x][y] not in pos:
                raise ValueError(f"subset not closed: {x}*{y} escapes")
    table = [[pos[H.table[x][y]] for y in elems] for x in elems]
    names = tuple(H.names[e] for e in elems)
    return FiniteMonoid(table, names), tuple(elems)


def direct_product(H: FiniteMonoid, K: FiniteMonoid, size_cap: int = ENUMERATION_CAP) -> FiniteMonoid:
    """Componentwise product; names are paired."""
    n, m = H.size, K.size
    if n * m > size_cap:
        raise SizeLimit(f"product of sizes {n} x {m} exceeds cap {size_cap}")
    table = [
        [H.table[i1][i2] * m + K.table[j1][j2] for i2 in range(n) for j2 in range(m)]
        for i1 in range(n)
        for j1 in range(m)
    ]
    names = tuple(
        f"({H.names[i]},{K.names[j]})" for i in range(n) for j in range(m)
    )
    return FiniteMonoid(table, names)


# -- instance catalog ----------------------------------------------------


def trivial() -> FiniteMonoid:
    return FiniteMonoid(((0,),), ("1",))


def cyclic(m: int) -> FiniteMonoid:
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    names = ("1",) + tuple("g" if i == 1 else f"g^{i}" for i in range(1, m))
    return FiniteMonoid([[(i + j) % m for j in range(m)] for i in range(m)], names)


_GEN_LETTERS = "abcdfhklmnpqrstuv"  # skips e (empty word) and g (cyclic generator)


def null_monoid(k: int) -> FiniteMonoid:
    """Identity plus k nilpotent generators; every product of non-identity
    elements is the absorbing element."""
    if k < 1:
        raise ValueError("need at least one generator")
    n = k + 2
    zero = n - 1
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    for i in range(1, n):
        for j in range(1, n):
            table[i][j] = zero
    gens = tuple(
        _GEN_LETTERS[i] if i < len(_GEN_LETTERS) else f"a{i}" for i in range(k)
    )
    return FiniteMonoid(table, ("1",) + gens + ("0",))


def two_element_with_zero() -> FiniteMonoid:
    return FiniteMonoid(((0, 1), (1, 1)), ("1", "0"))


def full_transformation(m: int) -> FiniteMonoid:
    """All maps on m points under composition (apply right factor first)."""
    if m < 1:
        raise ValueError("need at least one point")
    if m > 3:
        raise SizeLimit("full transformation monoid capped at 3 points")
    maps = sorted(product(range(m), repeat=m))
    ident = tuple(range(m))
    maps.remove(ident)
    maps.insert(0, ident)
    pos = {f: i for i, f in enumerate(maps)}
    table = [
        [pos[tuple(f[g[x]] for x in range(m))] for g in maps] for f in maps
    ]
    names = tuple("".join(map(str, f)) for f in maps)
    return FiniteMonoid(table, names)


def _det_mod(mat, m: int) -> int:
    n = len(mat)
    if n == 1:
        return mat[0][0] % m
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _det_mod(minor, m)
        total += -term if j % 2 else term
    return total % m


def gl(n: int, m: int) -> FiniteMonoid:
    """n-by-n matrices over Z/m whose determinant is regular in Z/m.

    In Z/m regularity of d means d*x != 0 for every x != 0, i.e. gcd(d, m) = 1,
    so this is the group of invertible matrices.
    """
    if n < 1 or m < 2:
        raise ValueError("need n >= 1 and modulus >= 2")
    if m ** (n * n) > ENUMERATION_CAP:
        raise SizeLimit(f"{m}^{n * n} candidate matrices exceed cap {ENUMERATION_CAP}")
    mats = []
    for flat in product(range(m), repeat=n * n):
        mat = tuple(flat[i * n : (i + 1) * n] for i in range(n))
        if math.gcd(_det_mod([list(r) for r in mat], m), m) == 1:
            mats.append(mat)
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    mats.remove(ident)
    mats.insert(0, ident)
    pos = {a: i for i, a in enumerate(mats)}

    def matmul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) % m for j in range(n))
            for i in range(n)
        )

    table = [[pos[matmul(a, b)] for b in mats] for a in mats]
    names = tuple(
        "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in a) + "]"
        for a in mats
    )
    return FiniteMonoid(table, names)


_CATALOG = {
    "trivial": trivial,
    "cyclic": cyclic,
    "null_monoid": null_monoid,
    "two_element_with_zero": two_element_with_zero,
    "full_transformation": full_transformation,
    "gl": gl,
}


def instance(kind: str, *params) -> FiniteMonoid:
    """Build a catalog monoid by name; see _CATALOG for the kinds."""
    try:
        builder = _CATALOG[kind]
    except KeyError:
        raise UnknownKind(f"unknown instance kind {kind!r}") from None
    return builder(*params)


# -- Cayley table files ---------------------------------------------------


def monoid_from_dict(data: dict) -> FiniteMonoid:
    if not isinstance(data, dict) or "table" not in data:
        raise ValueError("expected an object with a 'table' key")
    return FiniteMonoid(data["table"], data.get("names"))


def load_cayley(path) -> FiniteMonoid:
    with open(path, "r", encoding="utf-8") as fh:
        return monoid_from_dict(json.load(fh))


def dump_cayley(H: FiniteMonoid) -> str:
    """Byte-stable JSON rendering (sorted keys, integers only)."""
    payload = {"names": list(H.names), "table": [list(r) for r in H.table]}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def save_cayley(H: FiniteMonoid, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_cayley(H))
