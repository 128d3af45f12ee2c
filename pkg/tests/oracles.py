"""Independent reference computations the tests check the package against.

Everything here is deliberately naive: exhaustive enumeration, no pruning,
no shared code paths with the implementations under test.
"""

from itertools import product


def associativity_triples(table):
    """All (x, y, z) with (x*y)*z != x*(y*z)."""
    n = len(table)
    bad = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x][y]][z] != table[x][table[y][z]]:
                    bad.append((x, y, z))
    return bad


def brute_units(table):
    n = len(table)
    return {u for u in range(n) if any(table[u][v] == 0 == table[v][u] for v in range(n))}


def brute_atoms(table):
    n = len(table)
    units = brute_units(table)
    nonunits = [x for x in range(n) if x not in units]
    return {
        a
        for a in nonunits
        if all(table[x][y] != a for x in nonunits for y in nonunits)
    }


def brute_divides(table, x, y):
    n = len(table)
    return any(table[table[u][x]][v] == y for u in range(n) for v in range(n))


def brute_lengths(H, x, horizon):
    """Walk lengths from the identity to x, by direct layer iteration."""
    found = set()
    layer = {0}
    if x in layer:
        found.add(0)
    for k in range(1, horizon + 1):
        layer = {H.mul(s, a) for s in layer for a in H.atoms}
        if x in layer:
            found.add(k)
    return found


def word_catalog(H, max_words=200_000):
    """Minimal classes per element by enumerating every atom word of length
    <= |H| - 1, no pruning.  Returns (per-element class-key sets, kappa), or
    None when the word count would be unreasonable."""
    atoms = H.atoms
    horizon = H.size - 1
    total = sum(len(atoms) ** k for k in range(horizon + 1))
    if total > max_words:
        return None
    classes = {x: set() for x in H.elements()}
    width = len(H.atom_classes)
    for k in range(horizon + 1):
        for word in product(atoms, repeat=k):
            el = 0
            counts = [0] * width
            for a in word:
                el = H.mul(el, a)
                counts[H.atom_class_of[a]] += 1
            classes[el].add(tuple(counts))
    return _min_filter(classes)


def class_space_catalog(H):
    """Minimal classes per element via breadth-first search over
    (element, count-vector) states up to length |H| - 1; independent of the
    word-level pruning used in production."""
    atoms = H.atoms
    width = len(H.atom_classes)
    horizon = H.size - 1
    classes = {x: set() for x in H.elements()}
    frontier = {(0, (0,) * width)}
    classes[0].add((0,) * width)
    for _ in range(horizon):
        nxt = set()
        for el, counts in frontier:
            for a in atoms:
                el2 = H.mul(el, a)
                c2 = list(counts)
                c2[H.atom_class_of[a]] += 1
                state = (el2, tuple(c2))
                if state not in nxt and tuple(c2) not in classes[el2]:
                    nxt.add(state)
        for el, counts in nxt:
            classes[el].add(counts)
        frontier = nxt
    return _min_filter(classes)


def _min_filter(classes):
    minimal = {}
    kappa = 0
    for el, keys in classes.items():
        kept = {
            k
            for k in keys
            if not any(
                other != k and all(o <= c for o, c in zip(other, k))
                for other in keys
            )
        }
        minimal[el] = kept
        for k in kept:
            kappa = max(kappa, sum(k))
    return minimal, kappa


def brute_ordered_factorizations(limit, n, max_len):
    """Every ordered prime word with product n, by divisor-tree recursion."""
    primes = [p for p in range(2, limit + 1) if all(p % d for d in range(2, p))]

    def rec(m, depth):
        if m == 1:
            yield ()
            return
        if depth == 0:
            return
        for p in primes:
            if p > m:
                break
            if m % p == 0:
                for rest in rec(m // p, depth - 1):
                    yield (p,) + rest

    return sorted(rec(n, max_len))


def smallest_prime_factorization(n):
    """Trial-division factorization: the classical single multiset."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def multigraph_has_cycle(vertices, edges):
    """Exhaustive: loops, parallel edges, or any simple cycle."""
    for a, b in edges:
        if a == b:
            return True
    seen_pairs = set()
    for a, b in edges:
        key = frozenset((a, b))
        if key in seen_pairs:
            return True
        seen_pairs.add(key)
    adjacency = {v: set() for v in vertices}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    visited = set()
    for start in vertices:
        if start in visited:
            continue
        stack = [(start, None)]
        component = set()
        while stack:
            v, parent = stack.pop()
            if v in component:
                return True
            component.add(v)
            for w in adjacency[v]:
                if w != parent:
                    stack.append((w, v))
        visited |= component
    return False


def psi_dp(s):
    """Max number of disjoint x y^k z substrings via dynamic programming."""
    n = len(s)
    best = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        best[i] = best[i + 1]
        if s[i] == "x":
            j = i + 1
            while j < n and s[j] == "y":
                j += 1
            if j < n and s[j] == "z":
                best[i] = max(best[i], 1 + best[j + 1])
    return best[0]
