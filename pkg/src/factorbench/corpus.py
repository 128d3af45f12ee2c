"""Regression corpus: every monoid table of small order (identity fixed at
element 0) plus a curated menagerie, and the invariant scan run by the
`corpus` command."""

from __future__ import annotations

from itertools import product as iproduct

from .core import (
    FiniteMonoid,
    cyclic,
    direct_product,
    gl,
    null_monoid,
    order_and_idempotents,
    property_battery,
    two_element_with_zero,
)
from .errors import IndexOutOfRange, NoIdentity, NotAssociative
from .factorization import classify_arithmetic, length_set
from .power import build_reduced_power_monoid

SUBADDITIVITY_HORIZON = 30


def small_monoids(order: int):
    """All monoid tables of exactly this order: every full table is a
    candidate, kept iff element 0 is an identity and the table associates."""
    n = order
    for flat in iproduct(range(n), repeat=n * n):
        table = [flat[i * n : (i + 1) * n] for i in range(n)]
        try:
            yield FiniteMonoid(table)
        except (NoIdentity, NotAssociative, IndexOutOfRange):
            continue


def all_small_monoids(max_order: int = 3):
    for n in range(1, max_order + 1):
        yield from small_monoids(n)


def curated_corpus() -> list[tuple[str, FiniteMonoid]]:
    n3 = null_monoid(1)
    t4 = null_monoid(2)
    members = [
        ("N3", n3),
        ("T4", t4),
        ("H2", two_element_with_zero()),
    ]
    members += [(f"C{m}", cyclic(m)) for m in range(2, 7)]
    members += [
        ("N3xC2", direct_product(n3, cyclic(2))),
        ("C2xC3", direct_product(cyclic(2), cyclic(3))),
        ("H2xC2", direct_product(two_element_with_zero(), cyclic(2))),
        ("gl(2,2)", gl(2, 2)),
        ("gl(2,3)", gl(2, 3)),
    ]
    members += [
        (f"P1(C{m})", build_reduced_power_monoid(cyclic(m)).result)
        for m in range(2, 6)
    ]
    return members


def corpus_members(max_order: int = 3) -> list[tuple[str, FiniteMonoid]]:
    out = []
    for n in range(1, max_order + 1):
        for i, H in enumerate(small_monoids(n)):
            out.append((f"order{n}#{i}", H))
    out += curated_corpus()
    return out


def scan_member(name: str, H: FiniteMonoid, horizon: int = SUBADDITIVITY_HORIZON) -> list[str]:
    """Check the structural invariants one corpus member must satisfy;
    returns human-readable violation strings (empty = clean)."""
    violations = []
    rep = property_battery(H)
    flags = classify_arithmetic(H)
    oi = order_and_idempotents(H)

    if rep.acyclic != rep.group:
        violations.append(f"{name}: acyclic={rep.acyclic} but group={rep.group}")
    if flags.bf != flags.ff:
        violations.append(f"{name}: bf={flags.bf} but ff={flags.ff}")
    if rep.acyclic and not rep.unit_cancellative:
        violations.append(f"{name}: acyclic but not unit-cancellative")
    if rep.acyclic and oi.nontrivial_idempotents:
        violations.append(
            f"{name}: acyclic with non-trivial idempotents {oi.nontrivial_idempotents}"
        )
    lsets = {x: length_set(H, x) for x in H.elements()}
    for x in H.elements():
        lx = lsets[x].up_to(horizon)
        if not lx:
            continue
        for y in H.elements():
            ly = lsets[y].up_to(horizon)
            if not ly:
                continue
            lxy = lsets[H.mul(x, y)]
            for a in lx:
                for b in ly:
                    if (a + b) not in lxy:
                        violations.append(
                            f"{name}: lengths {a}+{b} missing at {x}*{y}"
                        )
                        break
                else:
                    continue
                break
    return violations


def scan_corpus(max_order: int = 3, horizon: int = SUBADDITIVITY_HORIZON) -> list[str]:
    violations = []
    for name, H in corpus_members(max_order):
        violations += scan_member(name, H, horizon)
    return violations
