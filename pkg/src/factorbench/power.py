"""Reduced power monoids: identity-containing subsets of a finite monoid
under setwise multiplication, with the atomicity criterion and the kappa
bound read off the base monoid."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteMonoid
from .errors import BoundViolation, CrossCheckMismatch, SizeLimit
from .factorization import MinimalCatalog, classify_arithmetic, minimal_catalog

DEFAULT_BASE_CAP = 12


@dataclass(frozen=True)
class PowerMonoidBuild:
    """The reduced power monoid of a base monoid.

    Elements of the result are indexed by the numeric value of their
    characteristic bitmask over the base (bit 0, the identity, always set),
    so the singleton {1} is element 0.  subset_of maps each result element to
    the underlying set of base elements.
    """

    base: FiniteMonoid
    result: FiniteMonoid
    subset_of: tuple[frozenset[int], ...]


def build_reduced_power_monoid(K: FiniteMonoid, base_cap: int = DEFAULT_BASE_CAP) -> PowerMonoidBuild:
    n = K.size
    if n > base_cap:
        raise SizeLimit(f"base of size {n} exceeds cap {base_cap}")
    masks = [m | 1 for m in range(0, 1 << n, 2)]
    pos = {m: i for i, m in enumerate(masks)}

    def bits(mask):
        return [i for i in range(n) if mask >> i & 1]

    def setwise(ma, mb):
        out = 0
        for x in bits(ma):
            row = K.table[x]
            for y in bits(mb):
                out |= 1 << row[y]
        return out

    table = [[pos[setwise(ma, mb)] for mb in masks] for ma in masks]
    names = tuple(
        "{" + ",".join(K.names[i] for i in bits(m)) + "}" for m in masks
    )
    result = FiniteMonoid(table, names)
    return PowerMonoidBuild(K, result, tuple(frozenset(bits(m)) for m in masks))


def atomicity_criterion(K: FiniteMonoid) -> bool:
    """The base-monoid test (no x outside the identity with x*x == 1 or
    x*x == x), cross-checked against direct atomicity of the built power
    monoid."""
    syntactic = all(
        K.table[x][x] != 0 and K.table[x][x] != x for x in range(1, K.size)
    )
    direct = classify_arithmetic(build_reduced_power_monoid(K).result).atomic
    if syntactic != direct:
        raise CrossCheckMismatch(
            f"power-monoid atomicity: criterion={syntactic}, direct={direct}"
        )
    return syntactic


@dataclass(frozen=True)
class KappaReport:
    kappa: int
    bound: int
    attains_bound: bool
    atomic: bool


def kappa_report(K: FiniteMonoid, catalog: MinimalCatalog | None = None) -> KappaReport:
    """kappa of the reduced power monoid against the proven bound |K| - 1."""
    build = build_reduced_power_monoid(K)
    cat = catalog if catalog is not None else minimal_catalog(build.result)
    bound = K.size - 1
    if cat.kappa > bound:
        raise BoundViolation(f"kappa {cat.kappa} exceeds bound {bound}")
    atomic = classify_arithmetic(build.result).atomic
    return KappaReport(cat.kappa, bound, cat.kappa == bound, atomic)
