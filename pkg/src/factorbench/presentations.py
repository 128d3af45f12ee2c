"""Finitely presented monoids: rewriting chains, a bounded word problem,
the cycle-free presentation check, and an exact normal-form engine for the
built-in "ladder" family.

Generator words are tuples of generator names.  Three families ship built in:

  sandwich-power(n): <x, y | x^n = y * x^n * y>
  sandwich-xyx:      <x, y | x*y*x = y * x*y*x * y>
  ladder:            <w, x, y, z | x*y^k*z = y * x*y^(k+1)*z * w  for k >= 0>

The ladder family admits a confluent contraction y x y^m z w -> x y^(m-1) z
whose normal forms are unique, so its word problem is decided exactly; the
family's relation list is materialized up to a rung cutoff for generic
rewriting-based searches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from random import Random

from .errors import AlphabetMismatch, EmptyRelationSide, ParseError, UnknownGenerator
from .words import parse_word_text

GenWord = tuple[str, ...]

DEFAULT_SEARCH_BUDGET = 20_000
DEFAULT_LADDER_RUNGS = 12


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[GenWord, GenWord], ...]
    family: str = ""
    family_param: int = 0

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ParseError("duplicate generator")
        if "e" in self.generators:
            raise ParseError("'e' is reserved for the empty word")
        declared = set(self.generators)
        for lhs, rhs in self.relations:
            for word in (lhs, rhs):
                for g in word:
                    if g not in declared:
                        raise UnknownGenerator(f"undeclared generator {g!r}")

    def check_word(self, word) -> GenWord:
        word = tuple(word)
        declared = set(self.generators)
        for g in word:
            if g not in declared:
                raise UnknownGenerator(f"undeclared generator {g!r}")
        return word


def parse_presentation(text: str) -> Presentation:
    """Parse `gens: x y; rel: x*x = y*x*x*y; rel: ...` (words are *-joined
    symbols, `e` is the empty word)."""
    generators: tuple[str, ...] | None = None
    relations: list[tuple[GenWord, GenWord]] = []
    clauses = [c.strip() for c in text.split(";")]
    for k, clause in enumerate(clauses):
        where = f"clause {k + 1}"
        if not clause:
            continue
        if clause.startswith("gens:"):
            if generators is not None:
                raise ParseError("second gens clause", where)
            generators = tuple(clause[len("gens:") :].split())
            if not generators:
                raise ParseError("gens clause declares nothing", where)
        elif clause.startswith("rel:"):
            if generators is None:
                raise ParseError("rel before gens", where)
            body = clause[len("rel:") :]
            sides = body.split("=")
            if len(sides) != 2:
                raise ParseError("relation needs exactly one '='", where)
            try:
                lhs = parse_word_text(sides[0])
                rhs = parse_word_text(sides[1])
            except ValueError as exc:
                raise ParseError(str(exc), where) from None
            relations.append((lhs, rhs))
        else:
            raise ParseError(f"expected 'gens:' or 'rel:', got {clause!r}", where)
    if generators is None:
        raise ParseError("no gens clause")
    return Presentation(generators, tuple(relations))


# -- built-in families --------------------------------------------------------


def sandwich_power(n: int) -> Presentation:
    """<x, y | x^n = y * x^n * y>."""
    if n < 1:
        raise ValueError("n must be >= 1")
    core = ("x",) * n
    return Presentation(
        ("x", "y"),
        ((core, ("y",) + core + ("y",)),),
        family="sandwich-power",
        family_param=n,
    )


def sandwich_xyx() -> Presentation:
    """<x, y | x*y*x = y * x*y*x * y>."""
    core = ("x", "y", "x")
    return Presentation(
        ("x", "y"), ((core, ("y",) + core + ("y",)),), family="sandwich-xyx"
    )


def ladder_presentation(rungs: int = DEFAULT_LADDER_RUNGS) -> Presentation:
    """The four-generator family with one relation per rung k <= rungs."""
    if rungs < 0:
        raise ValueError("rungs must be >= 0")
    rels = []
    for k in range(rungs + 1):
        lhs = ("x",) + ("y",) * k + ("z",)
        rhs = ("y", "x") + ("y",) * (k + 1) + ("z", "w")
        rels.append((lhs, rhs))
    return Presentation(
        ("w", "x", "y", "z"), tuple(rels), family="ladder", family_param=rungs
    )


FAMILY_BUILDERS = {
    "sandwich-power": sandwich_power,
    "sandwich-xyx": sandwich_xyx,
    "ladder": ladder_presentation,
}


def _generators_proven_atoms(P: Presentation) -> bool:
    if P.family == "ladder" or P.family == "sandwich-xyx":
        return True
    if P.family == "sandwich-power":
        return P.family_param >= 2
    return False


# -- left/right graphs and the cycle-free check -------------------------------


@dataclass(frozen=True)
class AdianCheck:
    left_graph: tuple[tuple[str, str], ...]
    right_graph: tuple[tuple[str, str], ...]
    is_adian: bool


def _is_forest(vertices, edges) -> bool:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        if a == b:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def adian_check(P: Presentation) -> AdianCheck:
    """Left/right multigraphs on the generators (one edge per relation, taken
    from the outermost letters); the presentation qualifies iff both graphs
    are cycle-free, loops and parallel edges included."""
    for lhs, rhs in P.relations:
        if not lhs or not rhs:
            raise EmptyRelationSide("relations with an empty side have no graphs")
    left = tuple((lhs[0], rhs[0]) for lhs, rhs in P.relations)
    right = tuple((lhs[-1], rhs[-1]) for lhs, rhs in P.relations)
    ok = _is_forest(P.generators, left) and _is_forest(P.generators, right)
    return AdianCheck(left, right, ok)


# -- conserved letter-count functionals ----------------------------------------


def letter_counts(P: Presentation, word: GenWord) -> tuple[int, ...]:
    return tuple(word.count(g) for g in P.generators)


def conserved_functionals(P: Presentation) -> tuple[tuple[int, ...], ...]:
    """Integer basis of the linear letter-count functionals that every
    defining relation preserves."""
    width = len(P.generators)
    rows = [
        [a - b for a, b in zip(letter_counts(P, lhs), letter_counts(P, rhs))]
        for lhs, rhs in P.relations
    ]
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    basis = []
    pivot_set = set(pivots)
    for fc in (c for c in range(width) if c not in pivot_set):
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for pr, pc in enumerate(pivots):
            vec[pc] = -mat[pr][fc]
        den = 1
        for v in vec:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in vec]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints] if g else ints
        lead = next((v for v in ints if v), 1)
        if lead < 0:
            ints = [-v for v in ints]
        basis.append(tuple(ints))
    return tuple(basis)


# -- bounded word problem -------------------------------------------------------


class CongruenceStatus(Enum):
    EQUIVALENT = "equivalent"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CongruenceResult:
    status: CongruenceStatus
    chain: tuple[GenWord, ...] | None = None
    functional: tuple[int, ...] | None = None


def _rewrites(word: GenWord, relations):
    for lhs, rhs in relations:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            la = len(a)
            for i in range(len(word) - la + 1):
                if word[i : i + la] == a:
                    yield word[:i] + b + word[i + la :]


def congruent_bounded(
    P: Presentation, u, v, budget: int = DEFAULT_SEARCH_BUDGET
) -> CongruenceResult:
    """Bidirectional breadth-first search over single-relation rewrites, with
    a definite NO from any conserved letter-count functional separating u and
    v; otherwise unknown once the expansion budget runs out.  On success the
    rewriting chain from u to v is returned."""
    u = P.check_word(u)
    v = P.check_word(v)
    cu, cv = letter_counts(P, u), letter_counts(P, v)
    for f in conserved_functionals(P):
        if sum(a * b for a, b in zip(f, cu)) != sum(a * b for a, b in zip(f, cv)):
            return CongruenceResult(CongruenceStatus.REFUTED, functional=f)
    if u == v:
        return CongruenceResult(CongruenceStatus.EQUIVALENT, chain=(u,))

    parents: list[dict[GenWord, GenWord | None]] = [{u: None}, {v: None}]
    frontiers: list[list[GenWord]] = [[u], [v]]
    expansions = 0

    def stitch(meet):
        # meet is present in both parent maps; walk back to both roots.
        path = []
        w = meet
        while w is not None:
            path.append(w)
            w = parents[0][w]
        path.reverse()  # u .. meet
        w = parents[1][meet]
        while w is not None:
            path.append(w)
            w = parents[1][w]
        return tuple(path)

    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        fresh: list[GenWord] = []
        for w in frontiers[side]:
            expansions += 1
            if expansions > budget:
                return CongruenceResult(CongruenceStatus.UNKNOWN)
            for nxt in _rewrites(w, P.relations):
                if nxt in mine:
                    continue
                mine[nxt] = w
                if nxt in other:
                    return CongruenceResult(
                        CongruenceStatus.EQUIVALENT, chain=stitch(nxt)
                    )
                fresh.append(nxt)
        frontiers[side] = fresh
    return CongruenceResult(CongruenceStatus.UNKNOWN)


def validate_chain(P: Presentation, chain) -> bool:
    """Every consecutive pair must differ by one relation application."""
    for a, b in zip(chain, chain[1:]):
        if b not in set(_rewrites(a, P.relations)):
            return False
    return True


# -- the ladder engine -----------------------------------------------------------

LADDER_ALPHABET = ("w", "x", "y", "z")

_FACTOR = re.compile(r"xy*z")
_CONTRACT = re.compile(r"yxy+zw")


def _ladder_str(word) -> str:
    word = tuple(word)
    for g in word:
        if g not in LADDER_ALPHABET:
            raise AlphabetMismatch(f"letter {g!r} outside alphabet w,x,y,z")
    return "".join(word)


@dataclass(frozen=True)
class PsiDecomposition:
    """Canonical block decomposition of a ladder word.

    ell counts the disjoint x y^s z factors; blocks holds the (r, s, t)
    exponents of each y^r * (x y^s z) * w^t block; fillers are the ell + 1
    gap words, each containing no complete factor, never ending in y before a
    block and never starting with w after one.
    """

    ell: int
    blocks: tuple[tuple[int, int, int], ...]
    fillers: tuple[GenWord, ...]

    def reassemble(self) -> GenWord:
        out = list(self.fillers[0])
        for (r, s, t), filler in zip(self.blocks, self.fillers[1:]):
            out += ["y"] * r + ["x"] + ["y"] * s + ["z"] + ["w"] * t
            out += list(filler)
        return tuple(out)


def psi(word) -> PsiDecomposition:
    """Count the disjoint x y^s z factors (left-to-right matching is exact:
    distinct factor occurrences can never overlap) and produce the canonical
    block decomposition."""
    s = _ladder_str(word)
    matches = list(_FACTOR.finditer(s))
    if not matches:
        return PsiDecomposition(0, (), (tuple(s),))
    segments = [s[: matches[0].start()]]
    segments += [
        s[matches[i - 1].end() : matches[i].start()] for i in range(1, len(matches))
    ]
    segments.append(s[matches[-1].end() :])
    blocks = []
    fillers = []
    pending = segments[0]
    for i, m in enumerate(matches):
        stripped = pending.rstrip("y")
        r = len(pending) - len(stripped)
        fillers.append(tuple(stripped))
        after = segments[i + 1]
        shaved = after.lstrip("w")
        t = len(after) - len(shaved)
        blocks.append((r, m.end() - m.start() - 2, t))
        pending = shaved
    fillers.append(tuple(pending))
    return PsiDecomposition(len(matches), tuple(blocks), tuple(fillers))


def normal_form(word) -> GenWord:
    """Contract y x y^m z w -> x y^(m-1) z at the leftmost position until no
    occurrence remains; the result is the unique normal form of the word's
    congruence class and the map is idempotent."""
    s = _ladder_str(word)
    while True:
        m = _CONTRACT.search(s)
        if m is None:
            return tuple(s)
        inner = (m.end() - m.start()) - 4
        s = s[: m.start()] + "x" + "y" * (inner - 1) + "z" + s[m.end() :]


def is_normal(word) -> bool:
    return _CONTRACT.search(_ladder_str(word)) is None


def _random_ladder_word(rng: Random, max_len: int) -> GenWord:
    return tuple(rng.choice(LADDER_ALPHABET) for _ in range(rng.randint(0, max_len)))


def _random_congruent(rng: Random, word: GenWord, steps: int) -> GenWord:
    s = _ladder_str(word)
    for _ in range(steps):
        moves = [("expand", m.start(), m.end()) for m in _FACTOR.finditer(s)]
        moves += [("contract", m.start(), m.end()) for m in _CONTRACT.finditer(s)]
        if not moves:
            break
        kind, i, j = rng.choice(moves)
        if kind == "expand":
            k = j - i - 2
            s = s[:i] + "yx" + "y" * (k + 1) + "zw" + s[j:]
        else:
            m = j - i - 4
            s = s[:i] + "x" + "y" * (m - 1) + "z" + s[j:]
    return tuple(s)


def _random_order_normal_form(rng: Random, word: GenWord) -> GenWord:
    s = _ladder_str(word)
    while True:
        ms = list(_CONTRACT.finditer(s))
        if not ms:
            return tuple(s)
        m = rng.choice(ms)
        inner = (m.end() - m.start()) - 4
        s = s[: m.start()] + "x" + "y" * (inner - 1) + "z" + s[m.end() :]


@dataclass(frozen=True)
class LadderVerification:
    samples: int
    cancellation_hits: int
    cancellation_failures: int
    acyclicity_hits: int
    acyclicity_failures: int
    confluence_checked: int
    confluence_failures: int

    @property
    def ok(self) -> bool:
        return (
            self.cancellation_failures
            == self.acyclicity_failures
            == self.confluence_failures
            == 0
        )


def verify_ladder_properties(
    samples: int, max_len: int, seed: int = 0
) -> LadderVerification:
    """Randomized smoke test of the ladder engine.

    Cancellation: whenever nf(z*u) == nf(z*v) (or on the right), nf(u) must
    equal nf(v).  Acyclicity: nf(u*z*v) == nf(z) forces u = v = empty.
    Confluence: contracting in random order must land on the same normal
    form.  Congruent pairs are manufactured by random rewriting so the
    premises actually fire.
    """
    rng = Random(seed)
    canc_hits = canc_fail = 0
    acyc_hits = acyc_fail = 0
    conf_fail = 0
    for _ in range(samples):
        z = _random_ladder_word(rng, max_len)
        u = _random_ladder_word(rng, max_len)
        if rng.random() < 0.5:
            v = _random_congruent(rng, u, rng.randint(1, 3))
        else:
            v = _random_ladder_word(rng, max_len)

        if normal_form(z + u) == normal_form(z + v):
            canc_hits += 1
            if normal_form(u) != normal_form(v):
                canc_fail += 1
        if normal_form(u + z) == normal_form(v + z):
            canc_hits += 1
            if normal_form(u) != normal_form(v):
                canc_fail += 1

        a = u if rng.random() < 0.5 else ()
        b = v if rng.random() < 0.5 else ()
        if normal_form(a + z + b) == normal_form(z):
            acyc_hits += 1
            if a or b:
                acyc_fail += 1

        probe = _random_congruent(rng, z + u, rng.randint(0, 2))
        if _random_order_normal_form(rng, probe) != normal_form(probe):
            conf_fail += 1
    return LadderVerification(
        samples, canc_hits, canc_fail, acyc_hits, acyc_fail, samples, conf_fail
    )


def sample_psi_invariance(samples: int, max_len: int, seed: int = 0) -> tuple[int, int]:
    """(checked, failures) for psi over randomly rewritten congruent pairs."""
    rng = Random(seed)
    failures = 0
    for _ in range(samples):
        u = _random_ladder_word(rng, max_len)
        v = _random_congruent(rng, u, rng.randint(1, 4))
        if psi(u).ell != psi(v).ell:
            failures += 1
    return samples, failures


# -- bounded length sets -----------------------------------------------------------


@dataclass(frozen=True)
class LengthProbe:
    """Lengths of generator words congruent to a target, up to a horizon.

    A verified lower bound of the true length set unless complete is set;
    generators_proven_atoms records whether the generator letters are known
    atoms (true for the built-in families where that holds), i.e. whether
    these are honest factorization lengths.
    """

    lengths: tuple[int, ...]
    complete: bool
    generators_proven_atoms: bool


def bounded_length_set(
    P: Presentation, target, max_len: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> LengthProbe:
    """Lengths l <= max_len of generator words congruent to the target.

    The ladder family is decided exactly through its normal form: the
    congruence class of a word with ell >= 1 blocks realizes exactly the
    lengths |nf| + 3k, and is a singleton otherwise.  Other presentations are
    explored by breadth-first rewriting under the budget.
    """
    target = P.check_word(target)
    if P.family == "ladder":
        nf = normal_form(target)
        base = len(nf)
        if base > max_len:
            return LengthProbe((), True, True)
        if psi(nf).ell == 0:
            return LengthProbe((base,), True, True)
        return LengthProbe(tuple(range(base, max_len + 1, 3)), True, True)

    stretch = max((abs(len(l) - len(r)) for l, r in P.relations), default=0)
    cap = max_len + stretch
    seen = {target}
    frontier = [target]
    lengths = {len(target)} if len(target) <= max_len else set()
    complete = True
    expansions = 0
    while frontier:
        fresh = []
        for w in frontier:
            expansions += 1
            if expansions > budget:
                return LengthProbe(
                    tuple(sorted(lengths)), False, _generators_proven_atoms(P)
                )
            for nxt in _rewrites(w, P.relations):
                if nxt in seen:
                    continue
                seen.add(nxt)
                if len(nxt) <= max_len:
                    lengths.add(len(nxt))
                if len(nxt) <= cap:
                    fresh.append(nxt)
                else:
                    complete = False
        frontier = fresh
    return LengthProbe(tuple(sorted(lengths)), complete, _generators_proven_atoms(P))
