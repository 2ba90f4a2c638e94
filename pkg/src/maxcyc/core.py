"""Explicitly enumerated finite permutation groups and structural operations.

Every group here carries its full element table, so each predicate used by
the verification layer (normality, conjugacy, coset structure) is decided by
direct enumeration.  Operations are pure; the module-level ``lru_cache``
memoization keys on object identity and never changes observable results.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, InternalCheckError, NotNormal, NotSubgroup
from .numutil import p_part, prime_factors, prime_power_base
from .perm import Permutation, perm_order

DEFAULT_ORDER_CAP = 20_000
DEFAULT_DEGREE_CAP = 128


class Group:
    """A finite permutation group with its full element table.

    Instances are immutable.  ``element_list`` enumerates the closure
    breadth-first from the identity with generators applied in the given
    order, so iteration order is reproducible across runs.  Construct
    through :func:`enumerate_elements` or :func:`subgroup_generated`.
    """

    __slots__ = ("degree", "generators", "elements", "element_list")

    def __init__(
        self,
        degree: int,
        generators: tuple[Permutation, ...],
        elements: frozenset[Permutation],
        element_list: tuple[Permutation, ...],
    ):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.element_list = element_list

    @property
    def order(self) -> int:
        return len(self.element_list)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.element_list)

    def __len__(self) -> int:
        return len(self.element_list)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical key of the element set: sorted tuple of image tuples."""
        return tuple(sorted(p.images for p in self.element_list))

    def __repr__(self) -> str:
        return f"<Group degree={self.degree} order={self.order}>"


def _close(
    degree: int, seed: Sequence[Permutation], order_cap: int
) -> tuple[list[Permutation], set[Permutation]]:
    """Breadth-first closure of the seed under composition.

    Returns (discovery-ordered list, element set).  Raises CapExceeded as
    soon as the closure is known to be larger than order_cap.
    """
    ident = Permutation.identity(degree)
    found = {ident}
    ordered = [ident]
    gens = [g for g in seed if not g.is_identity()]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in found:
                if len(found) >= order_cap:
                    raise CapExceeded(
                        f"closure exceeds order cap {order_cap} (degree {degree})"
                    )
                found.add(y)
                ordered.append(y)
                queue.append(y)
    return ordered, found


def enumerate_elements(
    degree: int,
    generators: Iterable[Permutation],
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Group:
    """The group generated by `generators` on `degree` points."""
    gens = tuple(generators)
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if degree > degree_cap:
        raise CapExceeded(f"degree {degree} exceeds degree cap {degree_cap}")
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    ordered, found = _close(degree, gens, order_cap)
    return Group(degree, gens, frozenset(found), tuple(ordered))


def _reduced_generators(degree: int, elements: Iterable[Permutation]) -> list[Permutation]:
    """Greedy small generating set, deterministic under the element order."""
    target = set(elements)
    gens: list[Permutation] = []
    have: set[Permutation] = {Permutation.identity(degree)}
    for x in sorted(target):
        if x not in have:
            gens.append(x)
            have = _close(degree, gens, len(target))[1]
            if len(have) == len(target):
                break
    return gens


def group_from_elements(degree: int, elements: Iterable[Permutation]) -> Group:
    """Wrap an already-closed element set as a Group with small generators."""
    els = frozenset(elements)
    gens = _reduced_generators(degree, els)
    ordered, found = _close(degree, gens, len(els))
    if len(found) != len(els):
        raise ValueError("element set is not closed under composition")
    return Group(degree, tuple(gens), frozenset(found), tuple(ordered))


def subgroup_generated(G: Group, seed: Iterable[Permutation]) -> Group:
    """Closure of `seed` inside G, on the same point set."""
    seed_list = sorted(set(seed))
    for s in seed_list:
        if s not in G.elements:
            raise ValueError("seed element is not in the parent group")
    ordered, found = _close(G.degree, seed_list, G.order)
    return Group(G.degree, tuple(seed_list), frozenset(found), tuple(ordered))


@dataclass(eq=False)
class ElementClassPartition:
    """Conjugacy classes of group elements, with their minimal representatives."""

    classes: tuple[frozenset[Permutation], ...]
    representatives: tuple[Permutation, ...]
    index_of: dict[Permutation, int]


@lru_cache(maxsize=None)
def conjugacy_classes(G: Group) -> ElementClassPartition:
    """Orbit partition of G under conjugation; classes ordered by minimum."""
    index_of: dict[Permutation, int] = {}
    classes: list[frozenset[Permutation]] = []
    for x in sorted(G.element_list):
        if x in index_of:
            continue
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in G.generators:
                z = y.conjugate_by(g)
                if z not in orbit:
                    orbit.add(z)
                    stack.append(z)
        idx = len(classes)
        fs = frozenset(orbit)
        classes.append(fs)
        for y in fs:
            index_of[y] = idx
    reps = tuple(min(c) for c in classes)
    return ElementClassPartition(tuple(classes), reps, index_of)


def is_normal(G: Group, H: Group) -> bool:
    """Whether gHg^-1 = H for every generator g of G."""
    if not H.elements <= G.elements:
        raise NotSubgroup("H is not contained in G")
    return all(
        h.conjugate_by(g) in H.elements for g in G.generators for h in H.generators
    )


def normal_closure(G: Group, seed: Iterable[Permutation]) -> Group:
    """Smallest normal subgroup of G containing the seed."""
    current = subgroup_generated(G, seed).elements
    while True:
        extra = [
            y
            for x in current
            for g in G.generators
            if (y := x.conjugate_by(g)) not in current
        ]
        if not extra:
            break
        current = _close(G.degree, sorted(set(current) | set(extra)), G.order)[1]
    return group_from_elements(G.degree, current)


@dataclass(eq=False)
class CosetTable:
    """Left cosets of a normal subgroup, in the quotient's point order.

    ``point_of`` maps each parent element to the point its coset occupies.
    Point 0 is always the coset of the identity, so the quotient element
    that carries the coset xN is the unique q with q(0) == point_of[x].
    """

    cosets: tuple[frozenset[Permutation], ...]
    index: int
    point_of: dict[Permutation, int]
    representatives: tuple[Permutation, ...]


@lru_cache(maxsize=None)
def quotient_group(G: Group, N: Group) -> tuple[Group, CosetTable]:
    """G/N realized faithfully by the regular action on the cosets of N."""
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in G")
    assigned: set[Permutation] = set()
    cosets: list[frozenset[Permutation]] = []
    for x in G.element_list:
        if x in assigned:
            continue
        cs = frozenset(x * n for n in N.element_list)
        cosets.append(cs)
        assigned |= cs
    cosets.sort(key=min)
    point_of: dict[Permutation, int] = {}
    for i, cs in enumerate(cosets):
        for y in cs:
            point_of[y] = i
    index = len(cosets)
    reps = tuple(min(c) for c in cosets)
    qgens = [
        Permutation(tuple(point_of[g * r] for r in reps)) for g in G.generators
    ]
    Q = enumerate_elements(index, qgens, order_cap=index + 1, degree_cap=index)
    if Q.order != index:
        raise InternalCheckError(
            f"regular action of quotient has order {Q.order}, expected {index}"
        )
    return Q, CosetTable(tuple(cosets), index, point_of, reps)


@lru_cache(maxsize=None)
def center(G: Group) -> Group:
    """The subgroup of elements commuting with every generator."""
    members = [
        x for x in G.element_list if all(x * g == g * x for g in G.generators)
    ]
    return group_from_elements(G.degree, members)


@lru_cache(maxsize=None)
def derived_subgroup(G: Group) -> Group:
    """Normal closure of the commutators of generator pairs."""
    comms = {
        a.inverse() * b.inverse() * a * b
        for a in G.generators
        for b in G.generators
    }
    return normal_closure(G, comms)


@lru_cache(maxsize=None)
def normal_subgroups(G: Group) -> tuple[Group, ...]:
    """Every normal subgroup of G, sorted by order then canonical key.

    A normal subgroup is exactly a join of the subgroups generated by the
    conjugacy classes it contains, so the list is the join-closure of those
    class closures together with the trivial subgroup.
    """
    part = conjugacy_classes(G)
    atom_sets: dict[frozenset[Permutation], None] = {}
    for cls in part.classes:
        closed = frozenset(_close(G.degree, sorted(cls), G.order)[1])
        atom_sets.setdefault(closed, None)
    atoms = [(s, tuple(_reduced_generators(G.degree, s))) for s in atom_sets]

    trivial = frozenset([G.identity])
    known: dict[frozenset[Permutation], tuple[Permutation, ...]] = {trivial: ()}
    for s, gens in atoms:
        known.setdefault(s, gens)
    work = list(known.items())
    while work:
        s, sgens = work.pop()
        for a, agens in atoms:
            if a <= s:
                continue
            joined = frozenset(_close(G.degree, list(sgens) + list(agens), G.order)[1])
            if joined not in known:
                jgens = tuple(_reduced_generators(G.degree, joined))
                known[joined] = jgens
                work.append((joined, jgens))

    groups = []
    for s, gens in known.items():
        ordered, _ = _close(G.degree, list(gens), G.order)
        groups.append(Group(G.degree, gens, s, tuple(ordered)))
    groups.sort(key=lambda H: (H.order, H.key()))
    return tuple(groups)


def is_simple_nonabelian_60(G: Group) -> bool:
    """Order 60 with no normal subgroups besides 1 and G.

    Among groups of order 60 this characterizes the alternating group on
    five points.
    """
    return G.order == 60 and len(normal_subgroups(G)) == 2


def point_stabilizer(G: Group, point: int) -> Group:
    """The subgroup fixing the given point."""
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    members = [x for x in G.element_list if x.images[point] == point]
    return group_from_elements(G.degree, members)


@lru_cache(maxsize=None)
def exponent(G: Group) -> int:
    """lcm of the element orders."""
    return math.lcm(*(perm_order(x) for x in G.element_list))


def is_cyclic(G: Group) -> bool:
    return any(perm_order(x) == G.order for x in G.element_list)


def is_abelian(G: Group) -> bool:
    return all(a * b == b * a for a in G.generators for b in G.generators)


def is_p_group(G: Group) -> int | None:
    """The prime p when |G| = p**k with k >= 1, else None."""
    return prime_power_base(G.order)


def is_nilpotent(G: Group) -> bool:
    """Whether the p-elements form a subgroup of full p-part for each prime p."""
    for p in prime_factors(G.order):
        part = [x for x in G.element_list if p_part(perm_order(x), p) == perm_order(x)]
        if len(part) != p_part(G.order, p):
            return False
        members = set(part)
        if any(a * b not in members for a in part for b in part):
            return False
    return True


def is_solvable(G: Group) -> bool:
    """Whether the derived series reaches the trivial group."""
    current = G
    while current.order > 1:
        nxt = derived_subgroup(current)
        if nxt.order == current.order:
            return False
        current = nxt
    return True
