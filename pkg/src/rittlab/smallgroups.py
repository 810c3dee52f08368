"""Identification of small abstract groups.

Quotient groups reported by the chain invariants carry a human-readable
isomorphism label.  Groups of order <= 16 are matched exhaustively against
the full catalog below (regular representations built from multiplication
tables); anything larger is reported as its order plus an abelian flag.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Sequence

from .permgroup import Permutation, PermutationGroup, close, is_abelian


def _regular(elements: Sequence, mul: Callable, generators: Sequence
             ) -> PermutationGroup:
    """Regular representation: each element acts on the element list by
    left multiplication."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)

    def perm(e) -> Permutation:
        return Permutation(tuple(index[mul(e, elements[i])] for i in range(n)))

    return PermutationGroup(n, tuple(perm(g) for g in generators),
                            {perm(e) for e in elements})


def _cyclic(n: int) -> PermutationGroup:
    return _regular(tuple(range(n)), lambda a, b: (a + b) % n, (1 % n,) if n > 1 else ())


def _direct(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    dG, dH = G.degree, H.degree

    def emb(g: Permutation, h: Permutation) -> Permutation:
        return Permutation(tuple(g.images) + tuple(x + dG for x in h.images))

    idG, idH = Permutation.identity(dG), Permutation.identity(dH)
    gens = [emb(g, idH) for g in G.generators] + [emb(idG, h) for h in H.generators]
    return close(dG + dH, tuple(gens))


def _metacyclic(m: int, k: int, t: int, r: int) -> PermutationGroup:
    """<a, b | a^m = 1, b^k = a^t, b a b^-1 = a^r> of order m*k, as pairs
    (i, j) <-> a^i b^j.  Requires r^k = 1 and t(r-1) = 0 mod m."""
    assert pow(r, k, m) == 1 and (t * (r - 1)) % m == 0

    def reduce(i: int, j: int) -> tuple[int, int]:
        while j >= k:
            i, j = (i + t) % m, j - k
        return (i % m, j)

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        return reduce(i1 + i2 * pow(r, j1, m), j1 + j2)

    elements = tuple((i, j) for i in range(m) for j in range(k))
    return _regular(elements, mul, ((1, 0), (0, 1)))


def _a4() -> PermutationGroup:
    return close(4, (Permutation.from_cycles(4, [(0, 1, 2)]),
                     Permutation.from_cycles(4, [(0, 1), (2, 3)])))


def _klein_semidirect_c4() -> PermutationGroup:
    """(C2 x C2) : C4, the C4 acting through its C2 quotient by swapping
    the two Klein coordinates."""
    def mul(x, y):
        (a1, b1, c1), (a2, b2, c2) = x, y
        if c1 % 2:
            a2, b2 = b2, a2
        return ((a1 + a2) % 2, (b1 + b2) % 2, (c1 + c2) % 4)

    elements = tuple((a, b, c) for a in range(2) for b in range(2) for c in range(4))
    return _regular(elements, mul, ((1, 0, 0), (0, 0, 1)))


_QUAT_MUL = {}  # (basis, basis) -> (sign, basis) for 1,i,j,k encoded 0..3
for _x in range(4):
    _QUAT_MUL[(0, _x)] = (1, _x)
    _QUAT_MUL[(_x, 0)] = (1, _x)
_QUAT_MUL.update({(1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
                  (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
                  (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)})


def _quat_mul(x, y):
    (s1, b1), (s2, b2) = x, y
    s, b = _QUAT_MUL[(b1, b2)]
    return (s1 * s2 * s, b)


def _q8() -> PermutationGroup:
    elements = tuple((s, b) for s in (1, -1) for b in range(4))
    return _regular(elements, _quat_mul, ((1, 1), (1, 2)))


def _pauli16() -> PermutationGroup:
    """Central product C4 o D4 = C4 o Q8: pairs (q, c) in Q8 x C4 with
    (-1, 0) identified with (1, 2), so c is reduced into {0, 1}."""
    def reduce(q, c):
        while c >= 2:
            q, c = _quat_mul((-1, 0), q), c - 2
        return (q, c)

    def mul(x, y):
        (q1, c1), (q2, c2) = x, y
        return reduce(_quat_mul(q1, q2), c1 + c2)

    elements = tuple(((s, b), c) for s in (1, -1) for b in range(4) for c in range(2))
    return _regular(elements, mul, (((1, 1), 0), ((1, 2), 0), ((1, 0), 1)))


@lru_cache(maxsize=1)
def catalog() -> tuple[tuple[str, PermutationGroup], ...]:
    """All groups of order <= 16 up to isomorphism, with display labels."""
    C = _cyclic
    entries: list[tuple[str, PermutationGroup]] = [
        ("C1", C(1)), ("C2", C(2)), ("C3", C(3)),
        ("C4", C(4)), ("C2xC2", _direct(C(2), C(2))),
        ("C5", C(5)),
        ("C6", C(6)), ("S3", _metacyclic(3, 2, 0, 2)),
        ("C7", C(7)),
        ("C8", C(8)), ("C4xC2", _direct(C(4), C(2))),
        ("C2^3", _direct(_direct(C(2), C(2)), C(2))),
        ("D4", _metacyclic(4, 2, 0, 3)), ("Q8", _q8()),
        ("C9", C(9)), ("C3xC3", _direct(C(3), C(3))),
        ("C10", C(10)), ("D5", _metacyclic(5, 2, 0, 4)),
        ("C11", C(11)),
        ("C12", C(12)), ("C6xC2", _direct(C(6), C(2))),
        ("D6", _metacyclic(6, 2, 0, 5)), ("A4", _a4()),
        ("Dic3", _metacyclic(6, 2, 3, 5)),
        ("C13", C(13)),
        ("C14", C(14)), ("D7", _metacyclic(7, 2, 0, 6)),
        ("C15", C(15)),
        ("C16", C(16)), ("C8xC2", _direct(C(8), C(2))),
        ("C4xC4", _direct(C(4), C(4))),
        ("C4xC2^2", _direct(_direct(C(4), C(2)), C(2))),
        ("C2^4", _direct(_direct(C(2), C(2)), _direct(C(2), C(2)))),
        ("D8", _metacyclic(8, 2, 0, 7)),
        ("SD16", _metacyclic(8, 2, 0, 3)),
        ("M16", _metacyclic(8, 2, 0, 5)),
        ("Q16", _metacyclic(8, 2, 4, 7)),
        ("D4xC2", _direct(_metacyclic(4, 2, 0, 3), C(2))),
        ("Q8xC2", _direct(_q8(), C(2))),
        ("C4oD4", _pauli16()),
        ("C2^2:C4", _klein_semidirect_c4()),
        ("C4:C4", _metacyclic(4, 4, 0, 3)),
    ]
    return tuple(entries)


def _order_profile(G: PermutationGroup) -> tuple[int, ...]:
    return tuple(sorted(g.order() for g in G))


def _generating_set(G: PermutationGroup) -> list[Permutation]:
    gens: list[Permutation] = []
    reached = {Permutation.identity(G.degree)}
    for g in G:
        if g in reached:
            continue
        gens.append(g)
        reached = set(close(G.degree, tuple(gens)).elements)
        if len(reached) == G.order:
            break
    return gens


def abstract_isomorphic(G1: PermutationGroup, G2: PermutationGroup) -> bool:
    """Abstract-group isomorphism (ignores the permutation actions).

    Backtracks over images of a small generating set of G1, keeping only
    order-compatible candidates, then verifies the induced map is a
    bijective homomorphism.
    """
    if G1.order != G2.order:
        return False
    if _order_profile(G1) != _order_profile(G2):
        return False
    n = G1.order
    gens = _generating_set(G1)
    if not gens:  # trivial group
        return True
    by_order: dict[int, list[Permutation]] = {}
    for h in G2:
        by_order.setdefault(h.order(), []).append(h)
    candidates = [by_order.get(g.order(), []) for g in gens]

    def full_check(images: Sequence[Permutation]) -> bool:
        # Express every element of G1 as a word in gens via BFS, mirror the
        # word in G2, then confirm the map is a bijective homomorphism.
        phi = {Permutation.identity(G1.degree): Permutation.identity(G2.degree)}
        frontier = [Permutation.identity(G1.degree)]
        while frontier:
            new = []
            for x in frontier:
                for g, h in zip(gens, images):
                    y = x * g
                    if y not in phi:
                        phi[y] = phi[x] * h
                        new.append(y)
            frontier = new
        if len(phi) != n or len(set(phi.values())) != n:
            return False
        return all(phi[x * y] == phi[x] * phi[y]
                   for x in G1 for y in G1)

    def backtrack(i: int, chosen: list[Permutation]) -> bool:
        if i == len(gens):
            return full_check(chosen)
        partial1 = close(G1.degree, tuple(gens[:i + 1]))
        for h in candidates[i]:
            if close(G2.degree, tuple(chosen) + (h,)).order != partial1.order:
                continue
            if backtrack(i + 1, chosen + [h]):
                return True
        return False

    return backtrack(0, [])


def identify_group(G: PermutationGroup) -> str:
    """A display label for the abstract isomorphism type of G.

    Exact for order <= 16; beyond that only the order and an abelian flag
    are reported.
    """
    if G.order > 16:
        kind = "abelian" if is_abelian(G) else "nonabelian"
        return f"order {G.order} ({kind})"
    for label, model in catalog():
        if model.order == G.order and abstract_isomorphic(G, model):
            return label
    raise AssertionError(f"group of order {G.order} missing from catalog")
