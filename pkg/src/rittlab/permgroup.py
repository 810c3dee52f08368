"""Exact finite permutation groups at desk scale.

Groups are stored fully enumerated (generators plus the complete element
set), which keeps cores, set products, normalizers and subgroup lattices
trivially exact.  Everything is immutable and deterministically ordered:
elements sort lexicographically by their image sequences, so any two runs
produce identical output.

Points are 0-indexed throughout, including cycle notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import CapExceeded

#: Groups larger than this are refused at construction time.
DEFAULT_CAP = 50_000


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
                images[a] = b
        return Permutation(tuple(images))

    def __call__(self, pt: int) -> int:
        return self.images[pt]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x)), i.e. q acts first."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixpoints omitted; each cycle starts at its least
        point and cycles are sorted by that point."""
        seen: set[int] = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


class PermutationGroup:
    """A fully enumerated permutation group on {0..degree-1}.

    Equality and hashing compare the element *sets* (and degree), not the
    generating sets, so groups found along different search paths
    deduplicate correctly.
    """

    __slots__ = ("degree", "generators", "elements", "_element_set", "_hash")

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Iterable[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._element_set = frozenset(self.elements)
        self._hash = hash((degree, self._element_set))
        if Permutation.identity(degree) not in self._element_set:
            raise ValueError("element set does not contain the identity")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermutationGroup)
                and self.degree == other.degree
                and self._element_set == other._element_set)

    def __hash__(self):
        return self._hash

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and self._element_set <= other._element_set

    def key(self) -> tuple:
        """Deterministic sort key: (order, sorted element images)."""
        return (self.order, tuple(p.images for p in self.elements))

    def generator_string(self) -> str:
        if not self.generators:
            return "()"
        return ", ".join(g.cycle_string() for g in self.generators)

    def __repr__(self):
        return (f"PermutationGroup(degree={self.degree}, order={self.order}, "
                f"generators=<{self.generator_string()}>)")


def close(degree: int, generators: Sequence[Permutation],
          cap: int = DEFAULT_CAP) -> PermutationGroup:
    """Enumerate the group generated by ``generators`` (orbit closure).

    Fails loudly with :class:`CapExceeded` rather than grinding past the
    configured element cap.
    """
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    gens = [g for g in generators if not g.is_identity()]
    while frontier:
        new: list[Permutation] = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"group closure exceeds cap of {cap} elements")
        frontier = new
    return PermutationGroup(degree, generators, elements)


def trivial_group(degree: int) -> PermutationGroup:
    identity = Permutation.identity(degree)
    return PermutationGroup(degree, (), (identity,))


def _subgroup(ambient_degree: int, elements: Iterable[Permutation],
              generators: Sequence[Permutation] = ()) -> PermutationGroup:
    """Build a group from an element set already known to be closed."""
    elements = tuple(sorted(elements))
    gens = tuple(generators) or tuple(p for p in elements if not p.is_identity())
    return PermutationGroup(ambient_degree, gens, elements)


def orbit(G: PermutationGroup, pt: int) -> tuple[int, ...]:
    seen = {pt}
    frontier = [pt]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def is_transitive(G: PermutationGroup) -> bool:
    return len(orbit(G, 0)) == G.degree


def is_abelian(G: PermutationGroup) -> bool:
    return all(a * b == b * a
               for a, b in itertools.combinations(G.generators, 2))


def point_stabilizer(G: PermutationGroup, pt: int) -> PermutationGroup:
    """The subgroup {g in G : g(pt) = pt}."""
    if not 0 <= pt < G.degree:
        raise ValueError(f"point {pt} out of range")
    return _subgroup(G.degree, (g for g in G if g(pt) == pt))


def _cyclic_elements(degree: int, g: Permutation) -> frozenset[Permutation]:
    elems = [Permutation.identity(degree)]
    p = g
    while not p.is_identity():
        elems.append(p)
        p = p * g
    return frozenset(elems)


def cyclic_subgroup(G: PermutationGroup, g: Permutation) -> PermutationGroup:
    return _subgroup(G.degree, _cyclic_elements(G.degree, g), (g,))


def is_dedekind(G: PermutationGroup) -> bool:
    """Every subgroup normal.  It suffices that every cyclic subgroup is
    normal, since any subgroup is generated by its cyclic ones; the
    all-subgroups oracle in the tests cross-checks this shortcut.
    """
    for g in G:
        gen = _cyclic_elements(G.degree, g)
        for h in G.generators:
            hinv = h.inverse()
            if any(h * x * hinv not in gen for x in gen):
                return False
    return True


def is_quasi_hamiltonian(G: PermutationGroup) -> bool:
    """IJ = JI for all subgroups I, J.

    Checked on cyclic pairs only, which suffices (Iwasawa); the tests keep
    the all-subgroup-pairs oracle as the authority and assert agreement.
    """
    cyclics = sorted({_cyclic_elements(G.degree, g) for g in G},
                     key=lambda s: sorted(p.images for p in s))
    for ci, cj in itertools.combinations(cyclics, 2):
        ij = {a * b for a in ci for b in cj}
        ji = {b * a for a in ci for b in cj}
        if ij != ji:
            return False
    return True


def set_product(I: PermutationGroup, J: PermutationGroup
                ) -> tuple[tuple[Permutation, ...], bool]:
    """The element set IJ = {ij} and whether it is a subgroup.

    IJ is a group iff IJ = JI; by Lagrange its cardinality is always
    |I||J| / |I inter J|.
    """
    ij = {a * b for a in I for b in J}
    ji = {b * a for a in I for b in J}
    return tuple(sorted(ij)), ij == ji


def intersection(I: PermutationGroup, J: PermutationGroup) -> PermutationGroup:
    if I.degree != J.degree:
        raise ValueError("ambient degree mismatch")
    return _subgroup(I.degree, I._element_set & J._element_set)


def is_normal_in(G: PermutationGroup, U: PermutationGroup) -> bool:
    """Whether U is normal in G (requires U <= G)."""
    for g in G.generators:
        ginv = g.inverse()
        if any(g * u * ginv not in U for u in U.generators):
            return False
    return True


def normalizer_in(G: PermutationGroup, U: PermutationGroup) -> PermutationGroup:
    def normalizes(g: Permutation) -> bool:
        ginv = g.inverse()
        return all(g * u * ginv in U for u in U.generators)

    return _subgroup(G.degree, (g for g in G if normalizes(g)))


def core_in(G: PermutationGroup, U: PermutationGroup) -> PermutationGroup:
    """The largest normal subgroup of G inside U: the intersection of all
    G-conjugates of U (equivalently, the kernel of the coset action)."""
    core = set(U._element_set)
    for g in G:
        ginv = g.inverse()
        core &= {ginv * u * g for u in U}
        if len(core) == 1:
            break
    return _subgroup(G.degree, core)


@dataclass(frozen=True)
class CosetAction:
    """Left-multiplication action of G on the left cosets of U."""

    image: PermutationGroup
    kernel: PermutationGroup
    coset_reps: tuple[Permutation, ...]


def coset_action(G: PermutationGroup, U: PermutationGroup) -> CosetAction:
    """G acting by left multiplication on G/U.

    Cosets are ordered by their lexicographically least representative, so
    the image group is reproducible.  The kernel equals core_in(G, U).
    """
    if not U.is_subgroup_of(G):
        raise ValueError("U is not a subgroup of G")
    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for g in G.elements:  # already sorted, so reps come out least-first
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for u in U:
            coset_of[g * u] = idx
    n_cosets = len(reps)

    def act(g: Permutation) -> Permutation:
        return Permutation(tuple(coset_of[g * reps[i]] for i in range(n_cosets)))

    image_of = {g: act(g) for g in G}
    gens = []
    for g in G.generators:
        img = image_of[g]
        if img not in gens:
            gens.append(img)
    image = PermutationGroup(n_cosets, tuple(gens), set(image_of.values()))
    kernel = _subgroup(G.degree,
                       (g for g, img in image_of.items() if img.is_identity()))
    return CosetAction(image=image, kernel=kernel, coset_reps=tuple(reps))


def generated_subgroup(G: PermutationGroup, perms: Iterable[Permutation],
                       cap: int = DEFAULT_CAP) -> PermutationGroup:
    """<perms> inside the ambient degree of G."""
    return close(G.degree, tuple(perms), cap=cap)


def intermediate_subgroups(G: PermutationGroup, H: PermutationGroup,
                           cap: int = DEFAULT_CAP
                           ) -> tuple[PermutationGroup, ...]:
    """All subgroups U with H <= U <= G.

    Layered single-element extensions: every known subgroup U is extended
    by each g in G \\ U; any V between H and G is reached because a chain
    H < <H,g1> < ... < V of single-element extensions stays inside V.
    Returned sorted by (order, elements).
    """
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    found: dict[frozenset, PermutationGroup] = {H._element_set: H,
                                                G._element_set: G}
    frontier = [H]
    while frontier:
        new: list[PermutationGroup] = []
        for U in frontier:
            for g in G:
                if g in U:
                    continue
                V = close(G.degree, tuple(U.generators) + (g,), cap=cap)
                if V._element_set not in found:
                    found[V._element_set] = V
                    if V.order < G.order:
                        new.append(V)
        frontier = new
    return tuple(sorted(found.values(), key=PermutationGroup.key))


def all_subgroups(G: PermutationGroup,
                  cap: int = DEFAULT_CAP) -> tuple[PermutationGroup, ...]:
    return intermediate_subgroups(G, trivial_group(G.degree), cap=cap)


def _pair_profile(G: PermutationGroup) -> list[list[tuple[int, ...]]]:
    """profile[x][y] = sorted orders of elements mapping x to y; a
    permutation isomorphism must preserve this table."""
    n = G.degree
    table: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(n)]
    for g in G:
        o = g.order()
        for x in range(n):
            table[x][g(x)].append(o)
    return [[tuple(sorted(cell)) for cell in row] for row in table]


def perm_isomorphism(G1: PermutationGroup, G2: PermutationGroup
                     ) -> Optional[dict]:
    """A point bijection conjugating G1 onto G2, if one exists.

    Returns {"points": tuple pi with pi[x] the image of x, "generators":
    list of (g, conjugate of g)} or None.  Backtracking over point images,
    pruned by the pairwise element-order profile.
    """
    if G1.degree != G2.degree or G1.order != G2.order:
        return None
    n = G1.degree
    prof1, prof2 = _pair_profile(G1), _pair_profile(G2)
    if (sorted(map(sorted, prof1))) != (sorted(map(sorted, prof2))):
        return None

    assignment: list[int] = []
    used = [False] * n

    def consistent(x: int, y: int) -> bool:
        if prof1[x][x] != prof2[y][y]:
            return False
        for a, b in enumerate(assignment):
            if prof1[x][a] != prof2[y][b] or prof1[a][x] != prof2[b][y]:
                return False
        return True

    def conjugate(g: Permutation, pi: Sequence[int]) -> Permutation:
        images = [0] * n
        for x in range(n):
            images[pi[x]] = pi[g(x)]
        return Permutation(tuple(images))

    found: list[tuple[int, ...]] = []

    # The profile prunes hard but is not a complete invariant, so full
    # assignments are confirmed by the exact element-set comparison.
    def extend() -> bool:
        x = len(assignment)
        if x == n:
            pi = tuple(assignment)
            if {conjugate(g, pi) for g in G1} == set(G2.elements):
                found.append(pi)
                return True
            return False
        for y in range(n):
            if used[y] or not consistent(x, y):
                continue
            assignment.append(y)
            used[y] = True
            if extend():
                return True
            assignment.pop()
            used[y] = False
        return False

    extend()
    if not found:
        return None
    pi = found[0]
    return {"points": pi,
            "generators": [(g, conjugate(g, pi)) for g in G1.generators]}


def perm_isomorphic(G1: PermutationGroup, G2: PermutationGroup) -> bool:
    """Whether G1 and G2 are isomorphic *as permutation groups* (same degree,
    conjugate element sets under some point bijection)."""
    return perm_isomorphism(G1, G2) is not None
