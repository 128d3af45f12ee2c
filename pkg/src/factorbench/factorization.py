"""Factorization into atoms: enumeration, length sets, congruence classes,
the domination preorder and minimal catalogs, primes, powerful atoms, and the
classifier batteries.

Every operation here works over a "factorization system": a carrier exposing
identity, mul, is_unit, elements, divides, an atom alphabet and its associate
classes.  Two carriers are provided: FiniteMonoid (from .core) and
IntegerFragment (the integers 1..limit under multiplication, atoms = primes,
all associate classes singletons).

Atom words are plain tuples of carrier elements; the empty tuple is the empty
word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import semigroup_closure
from .errors import (
    AlphabetMismatch,
    CapExceeded,
    CrossCheckMismatch,
    DichotomyViolation,
    ExplosionGuard,
)

DEFAULT_WORD_CAP = 10**6
LAYER_CAP = 10**5


class IntegerFragment:
    """The integers 1..limit under multiplication.

    Atoms are the primes up to the limit.  Multiplication is the plain integer
    product, so factorization queries must stay inside the fragment (they do:
    every factor of n <= limit is itself <= limit).
    """

    identity = 1

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        self.limit = limit
        self.atoms = primes_up_to(limit)
        self.atom_classes = tuple((p,) for p in self.atoms)
        self.atom_class_of = {p: i for i, p in enumerate(self.atoms)}

    def elements(self) -> range:
        return range(1, self.limit + 1)

    def mul(self, x: int, y: int) -> int:
        return x * y

    def is_unit(self, x: int) -> bool:
        return x == 1

    def divides(self, x: int, y: int) -> bool:
        return y % x == 0

    def name_of(self, x: int) -> str:
        return str(x)

    def __repr__(self):
        return f"IntegerFragment({self.limit})"


def primes_up_to(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i in range(2, limit + 1) if sieve[i])


# -- words over the atom alphabet -----------------------------------------


def check_atom_word(S, w) -> tuple:
    w = tuple(w)
    for a in w:
        if a not in S.atom_class_of:
            raise AlphabetMismatch(f"letter {a!r} is not an atom of {S!r}")
    return w


def pi_eval(S, w):
    """Evaluate an atom word left to right; the empty word gives the identity."""
    x = S.identity
    for a in check_atom_word(S, w):
        x = S.mul(x, a)
    return x


def class_counts(S, w) -> tuple[int, ...]:
    """Letter counts of w grouped by atom associate class."""
    counts = [0] * len(S.atom_classes)
    for a in check_atom_word(S, w):
        counts[S.atom_class_of[a]] += 1
    return tuple(counts)


@dataclass(frozen=True)
class FactorizationClass:
    """Canonical key of a factorization congruence class: the evaluated
    element plus the per-associate-class letter counts."""

    element: object
    class_counts: tuple[int, ...]


def factorization_class(S, w) -> FactorizationClass:
    return FactorizationClass(pi_eval(S, w), class_counts(S, w))


def format_atom_word(S, w) -> str:
    return "*".join(S.name_of(a) for a in w) if w else "e"


# -- enumeration -----------------------------------------------------------


def _completion_test(S, x):
    # Predicate on prefix products: can this prefix still be completed to x?
    if isinstance(S, IntegerFragment):
        return lambda s: x % s == 0
    # Reverse reachability over the atom Cayley digraph s -> s*a.
    preds: dict[int, set[int]] = {}
    for s in S.elements():
        for a in S.atoms:
            preds.setdefault(S.mul(s, a), set()).add(s)
    reach = {x}
    queue = deque([x])
    while queue:
        t = queue.popleft()
        for s in preds.get(t, ()):
            if s not in reach:
                reach.add(s)
                queue.append(s)
    return reach.__contains__


def enumerate_factorizations(S, x, max_len: int, word_cap: int = DEFAULT_WORD_CAP) -> list[tuple]:
    """All atom words of length <= max_len evaluating to x, in depth-first
    (lexicographic by atom order) order."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    admissible = _completion_test(S, x)
    out: list[tuple] = []
    atoms = S.atoms
    nodes = 0

    def rec(prod, word):
        nonlocal nodes
        nodes += 1
        if nodes > word_cap:
            raise ExplosionGuard(f"more than {word_cap} prefixes examined")
        if prod == x:
            out.append(tuple(word))
        if len(word) == max_len:
            return
        for a in atoms:
            nxt = S.mul(prod, a)
            if admissible(nxt):
                word.append(a)
                rec(nxt, word)
                word.pop()

    if admissible(S.identity):
        rec(S.identity, [])
    return out


def factorization_class_keys(S, x, max_len: int, word_cap: int = DEFAULT_WORD_CAP) -> set[tuple[int, ...]]:
    """Distinct class-count vectors over factorizations of x up to max_len."""
    return {class_counts(S, w) for w in enumerate_factorizations(S, x, max_len, word_cap)}


# -- length sets -----------------------------------------------------------


@dataclass(frozen=True)
class LengthSet:
    """An exact, eventually periodic subset of the naturals.

    Represents finite_part | {n >= threshold : n % period in residues}; the
    representation is canonical (minimal period, then minimal threshold), and
    period == 0 exactly when the set is finite.
    """

    finite_part: tuple[int, ...]
    threshold: int
    period: int
    residues: frozenset[int]

    @classmethod
    def build(cls, finite, threshold: int, period: int, residues) -> "LengthSet":
        fin = set(finite)
        res = set(residues)
        if any(k < 0 for k in fin) or threshold < 0 or period < 0:
            raise ValueError("negative data in length set")
        if any(k >= threshold for k in fin):
            raise ValueError("finite part must sit below the threshold")
        if period == 0 or not res:
            ordered = tuple(sorted(fin))
            return cls(ordered, ordered[-1] + 1 if ordered else 0, 0, frozenset())
        res = {r % period for r in res}
        for d in range(1, period + 1):
            if period % d == 0 and all(
                ((r + d) % period in res) == (r in res) for r in range(period)
            ):
                res = {r % d for r in res}
                period = d
                break
        while threshold > 0 and ((threshold - 1) in fin) == (
            (threshold - 1) % period in res
        ):
            fin.discard(threshold - 1)
            threshold -= 1
        return cls(tuple(sorted(fin)), threshold, period, frozenset(res))

    @classmethod
    def from_finite(cls, values) -> "LengthSet":
        ordered = tuple(sorted(set(values)))
        return cls(ordered, ordered[-1] + 1 if ordered else 0, 0, frozenset())

    def __contains__(self, k: int) -> bool:
        if k < self.threshold:
            return k in self.finite_part
        if self.period == 0:
            return False
        return k % self.period in self.residues

    @property
    def is_finite(self) -> bool:
        return self.period == 0

    def up_to(self, horizon: int) -> list[int]:
        return [k for k in range(horizon + 1) if k in self]

    def sup(self) -> int | float:
        if self.period:
            return float("inf")
        return self.finite_part[-1] if self.finite_part else 0

    def is_empty(self) -> bool:
        return not self.finite_part and not self.residues

    def describe(self) -> dict:
        return {
            "finite": list(self.finite_part),
            "threshold": self.threshold,
            "period": self.period,
            "residues": sorted(self.residues),
        }


def length_set(H, x, layer_cap: int = LAYER_CAP) -> LengthSet:
    """Exact set of atom-word lengths evaluating to x.

    Iterates the layer sets S_k (elements reachable from the identity in
    exactly k atom steps); the sequence of layers over a finite carrier must
    repeat, which pins down the preperiod and period of membership of x.
    """
    atoms = H.atoms
    layers: list[frozenset] = []
    seen: dict[frozenset, int] = {}
    cur = frozenset({H.identity})
    while cur not in seen:
        seen[cur] = len(layers)
        layers.append(cur)
        if len(layers) > layer_cap:
            raise CapExceeded(f"layer iteration exceeded {layer_cap} steps")
        cur = frozenset(H.mul(s, a) for s in cur for a in atoms)
    first = seen[cur]
    p = len(layers) - first
    finite = [k for k in range(first) if x in layers[k]]
    residues = {(k - first) % p for k in range(first, len(layers)) if x in layers[k]}
    return LengthSet.build(finite, first, p, residues)


# -- classifier battery ------------------------------------------------------


@dataclass(frozen=True)
class ArithmeticFlags:
    """atomic / bounded lengths (BF) / finitely many classes (FF) /
    half-factorial (HF), with a counterexample per false flag."""

    atomic: bool
    bf: bool
    ff: bool
    hf: bool
    witnesses: dict[str, object]


def _pumpable_vertex(H):
    # A vertex reachable from the identity that lies on a directed cycle of
    # the atom Cayley digraph; pumping that cycle yields ever-longer
    # factorizations, hence ever more congruence classes.
    atoms = H.atoms
    if not atoms:
        return None
    reach = {H.identity}
    queue = deque(reach)
    while queue:
        s = queue.popleft()
        for a in atoms:
            t = H.mul(s, a)
            if t not in reach:
                reach.add(t)
                queue.append(t)
    for v in sorted(reach):
        frontier = {H.mul(v, a) for a in atoms}
        seen = set(frontier)
        queue = deque(frontier)
        if v in seen:
            return v
        while queue:
            s = queue.popleft()
            for a in atoms:
                t = H.mul(s, a)
                if t == v:
                    return v
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    return None


def classify_arithmetic(H) -> ArithmeticFlags:
    """Decide atomic/BF/FF/HF for a finite carrier.

    BF is decided from the exact length sets; FF independently from the
    absence of a pumpable cycle in the atom Cayley digraph.  The two must
    agree on finite carriers, which the test suite asserts.
    """
    witnesses: dict[str, object] = {}
    nonunits = [x for x in H.elements() if not H.is_unit(x)]
    closure = semigroup_closure(H, H.atoms) if H.atoms else frozenset()
    atomic_wit = next((x for x in nonunits if x not in closure), None)
    atomic = atomic_wit is None
    if not atomic:
        witnesses["atomic"] = atomic_wit

    lsets = {x: length_set(H, x) for x in H.elements()}
    bf_wit = next((x for x in H.elements() if not lsets[x].is_finite), None)
    bf = atomic and bf_wit is None
    if bf_wit is not None:
        witnesses["bf"] = bf_wit

    ff_wit = _pumpable_vertex(H)
    ff = atomic and ff_wit is None
    if ff_wit is not None:
        witnesses["ff"] = ff_wit

    hf_wit = next(
        (
            x
            for x in nonunits
            if not (lsets[x].is_finite and len(lsets[x].finite_part) == 1)
        ),
        None,
    )
    hf = atomic and hf_wit is None
    if hf_wit is not None:
        witnesses["hf"] = hf_wit

    return ArithmeticFlags(atomic=atomic, bf=bf, ff=ff, hf=hf, witnesses=witnesses)


# -- the domination preorder -------------------------------------------------


class Comparison(Enum):
    EQUIVALENT = "equivalent"
    A_STRICTLY_BELOW = "a_strictly_below"
    B_STRICTLY_BELOW = "b_strictly_below"
    INCOMPARABLE = "incomparable"
    DIFFERENT_PRODUCTS = "different_products"


def compare(S, wa, wb) -> Comparison:
    """Compare two atom words under the domination preorder.

    Domination: equal evaluations, and the associate-class multiset of the
    shorter word embeds into that of the longer.  Mutual domination collapses
    to congruence (same evaluation and the same class-count vector).
    """
    wa = check_atom_word(S, wa)
    wb = check_atom_word(S, wb)
    if pi_eval(S, wa) != pi_eval(S, wb):
        return Comparison.DIFFERENT_PRODUCTS
    ca = class_counts(S, wa)
    cb = class_counts(S, wb)
    if ca == cb:
        return Comparison.EQUIVALENT
    if all(a <= b for a, b in zip(ca, cb)):
        return Comparison.A_STRICTLY_BELOW
    if all(b <= a for a, b in zip(ca, cb)):
        return Comparison.B_STRICTLY_BELOW
    return Comparison.INCOMPARABLE


def is_minimal(S, w, word_cap: int = DEFAULT_WORD_CAP) -> bool:
    """True iff no strictly shorter word with the same evaluation embeds into
    w class-wise.  Strict domination forces strictly smaller length, so the
    search is bounded by len(w) - 1."""
    w = check_atom_word(S, w)
    if len(w) == 0:
        return True
    target = pi_eval(S, w)
    cw = class_counts(S, w)
    for v in enumerate_factorizations(S, target, len(w) - 1, word_cap):
        cv = class_counts(S, v)
        if all(a <= b for a, b in zip(cv, cw)):
            return False
    return True


# -- minimal catalog and kappa ------------------------------------------------


@dataclass(frozen=True)
class MinimalClassEntry:
    counts: tuple[int, ...]
    representative: tuple


@dataclass(frozen=True)
class MinimalCatalog:
    """All minimal factorization classes of every element, with one
    representative word per class; kappa is the largest representative
    length."""

    per_element: dict[int, tuple[MinimalClassEntry, ...]]
    kappa: int

    def classes_of(self, x) -> tuple[MinimalClassEntry, ...]:
        return self.per_element.get(x, ())

    def minimal_lengths(self, x) -> tuple[int, ...]:
        return tuple(sorted({sum(e.counts) for e in self.classes_of(x)}))


def minimal_catalog(H, word_cap: int = DEFAULT_WORD_CAP) -> MinimalCatalog:
    """Exact minimal classes for every element.

    Only words whose prefix-product sequence (identity included) has pairwise
    distinct entries are generated: a repeated prefix product means a loop can
    be excised, leaving a strictly shorter word that dominates the original.
    Hence all candidates have length <= |H| - 1 and the catalog is exact; the
    test suite checks this against a pruning-free enumeration.
    """
    atoms = H.atoms
    class_of = H.atom_class_of
    width = len(H.atom_classes)
    candidates: dict[object, dict[tuple[int, ...], tuple]] = {
        x: {} for x in H.elements()
    }
    nodes = 0

    def rec(prod, seen, word, counts):
        nonlocal nodes
        nodes += 1
        if nodes > word_cap:
            raise ExplosionGuard(f"more than {word_cap} prefixes examined")
        reps = candidates[prod]
        key = tuple(counts)
        if key not in reps:
            reps[key] = tuple(word)
        for a in atoms:
            nxt = H.mul(prod, a)
            if nxt in seen:
                continue
            seen.add(nxt)
            word.append(a)
            counts[class_of[a]] += 1
            rec(nxt, seen, word, counts)
            counts[class_of[a]] -= 1
            word.pop()
            seen.discard(nxt)

    rec(H.identity, {H.identity}, [], [0] * width)

    per_element: dict[object, tuple[MinimalClassEntry, ...]] = {}
    kappa = 0
    for x in H.elements():
        keys = candidates[x]
        minimal = [
            k
            for k in keys
            if not any(
                other != k and all(o <= c for o, c in zip(other, k))
                for other in keys
            )
        ]
        entries = tuple(
            MinimalClassEntry(k, keys[k])
            for k in sorted(minimal, key=lambda k: (sum(k), k))
        )
        per_element[x] = entries
        if entries:
            kappa = max(kappa, max(sum(e.counts) for e in entries))
    return MinimalCatalog(per_element, kappa)


def kappa_and_dichotomy(H, catalog: MinimalCatalog | None = None) -> tuple[int, tuple[int, ...]]:
    """kappa plus the union of minimal length sets, asserting the union is the
    full interval 0..kappa."""
    cat = catalog if catalog is not None else minimal_catalog(H)
    lengths = sorted(
        {sum(e.counts) for entries in cat.per_element.values() for e in entries}
    )
    if lengths != list(range(cat.kappa + 1)):
        raise DichotomyViolation(
            f"minimal lengths {lengths} do not fill 0..{cat.kappa}"
        )
    return cat.kappa, tuple(lengths)


# -- primes and powerful atoms -------------------------------------------------


def _pair_stream(S):
    if isinstance(S, IntegerFragment):
        for x in range(1, S.limit + 1):
            for y in range(1, S.limit // x + 1):
                yield x, y
    else:
        for x in S.elements():
            for y in S.elements():
                yield x, y


def is_prime(S, p) -> tuple[bool, tuple | None]:
    """Exhaustive primality scan: p is prime iff it is a non-unit and divides
    a product only by dividing a factor.  Returns (flag, counterexample); the
    counterexample is a pair (x, y) with p | x*y but p dividing neither."""
    if S.is_unit(p):
        return False, None
    for x, y in _pair_stream(S):
        if S.divides(p, S.mul(x, y)) and not S.divides(p, x) and not S.divides(p, y):
            return False, (x, y)
    return True, None


def is_powerful(S, a) -> tuple[bool, tuple | None]:
    """Decide whether the atom a occurs with a fixed multiplicity (up to
    association) in every factorization of every element.

    For a finite monoid this is a potential labeling of the atom Cayley
    digraph from the identity, with edge weight 1 exactly on edges whose atom
    is associated to a: factorizations of an element are walks to its vertex,
    so a is powerful iff no vertex receives two distinct potentials.  Returns
    (flag, conflict) with conflict = (element, potential_a, potential_b).

    For the integer fragment the prime valuation is determined by the element
    itself, so every prime is powerful.
    """
    if a not in S.atom_class_of:
        raise ValueError(f"{a!r} is not an atom")
    if isinstance(S, IntegerFragment):
        return True, None
    target = S.atom_class_of[a]
    weights = {b: (1 if S.atom_class_of[b] == target else 0) for b in S.atoms}
    potential = {S.identity: 0}
    queue = deque([S.identity])
    while queue:
        s = queue.popleft()
        base = potential[s]
        for b in S.atoms:
            t = S.mul(s, b)
            w = base + weights[b]
            if t not in potential:
                potential[t] = w
                queue.append(t)
            elif potential[t] != w:
                return False, (t, potential[t], w)
    return True, None


def integer_class_table(limit: int) -> list[set[tuple[int, ...]] | None]:
    """For each n <= limit, every prime multiset realizable by a factorization
    of n, computed bottom-up over all prime divisors (no uniqueness assumed).

    table[n] is a set of sorted prime tuples; table[0] is None, table[1] is
    the singleton empty factorization.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    primes = primes_up_to(limit)
    prime_divisors: list[list[int]] = [[] for _ in range(limit + 1)]
    for p in primes:
        for m in range(p, limit + 1, p):
            prime_divisors[m].append(p)
    table: list[set[tuple[int, ...]] | None] = [None] * (limit + 1)
    table[1] = {()}
    for n in range(2, limit + 1):
        found: set[tuple[int, ...]] = set()
        for p in prime_divisors[n]:
            found.update(tuple(sorted(m + (p,))) for m in table[n // p])
        table[n] = found
    return table


# -- factoriality battery -------------------------------------------------------


@dataclass(frozen=True)
class FactorialFlags:
    """Unique-factorization flags, decided with built-in cross-checks.

    factorial: one congruence class per non-unit (two independent routes);
    minimally_factorial / hmf: one minimal class / one minimal length per
    non-unit; bmf / fmf: atomic with finite minimal length/class sets, which
    the finite catalog witnesses outright.
    """

    factorial: bool
    minimally_factorial: bool
    hmf: bool
    bmf: bool
    fmf: bool
    witnesses: dict[str, object]


def factorial_battery(H, word_cap: int = DEFAULT_WORD_CAP) -> FactorialFlags:
    flags = classify_arithmetic(H)
    nonunits = [x for x in H.elements() if not H.is_unit(x)]
    witnesses: dict[str, object] = {}

    weak_atom = next((a for a in H.atoms if not is_powerful(H, a)[0]), None)
    route_a = flags.atomic and weak_atom is None
    if weak_atom is not None:
        witnesses["non_powerful_atom"] = weak_atom

    route_b = flags.bf
    if route_b:
        for x in nonunits:
            bound = length_set(H, x).sup()
            keys = factorization_class_keys(H, x, int(bound), word_cap)
            if len(keys) != 1:
                route_b = False
                witnesses["factorial"] = x
                break
    if route_a != route_b:
        raise CrossCheckMismatch(
            f"factoriality routes disagree: powerful-atoms={route_a}, class-count={route_b}"
        )

    cat = minimal_catalog(H, word_cap)
    if flags.atomic:
        missing = next((x for x in nonunits if not cat.classes_of(x)), None)
        if missing is not None:
            raise CrossCheckMismatch(
                f"atomic carrier but element {missing} has no minimal class"
            )
    mf_wit = next((x for x in nonunits if len(cat.classes_of(x)) != 1), None)
    hmf_wit = next((x for x in nonunits if len(cat.minimal_lengths(x)) != 1), None)
    if mf_wit is not None:
        witnesses["minimally_factorial"] = mf_wit
    if hmf_wit is not None:
        witnesses["hmf"] = hmf_wit

    return FactorialFlags(
        factorial=route_a,
        minimally_factorial=mf_wit is None,
        hmf=hmf_wit is None,
        bmf=flags.atomic,
        fmf=flags.atomic,
        witnesses=witnesses,
    )
