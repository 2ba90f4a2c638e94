"""Executable verifiers for the structural facts about eta and G^-.

Each verifier returns a structured report rather than a bare boolean, so
a failing instance carries witnesses.  Negative controls (inputs expected
to violate a hypothesis) are handled by the suite layer in
:mod:`maxcyc.corpus`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .core import (
    Group,
    center,
    conjugacy_classes,
    derived_subgroup,
    exponent,
    group_from_elements,
    is_cyclic,
    is_nilpotent,
    is_normal,
    is_p_group,
    is_simple_nonabelian_60,
    normal_subgroups,
    quotient_group,
    subgroup_generated,
)
from .constructors import direct_product
from .cyclic import (
    _cyclic_index,
    eta,
    eta_p,
    eta_star,
    g_minus,
    maximal_cyclic_subgroups,
)
from .errors import (
    ClassificationFailed,
    GroupIsCyclic,
    HypothesisFailed,
    InternalCheckError,
    NotExponentP,
    NotFrobenius,
    NotNormal,
    NotPGroup,
    NotProper,
    NotSubgroup,
)
from .numutil import is_prime, p_part, prime_factors
from .perm import Permutation, perm_order


def _prime_power(n: int) -> bool:
    return len(prime_factors(n)) <= 1


# ---------------------------------------------------------------------------
# Report types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    """One named sub-check with its expected and actual values."""

    name: str
    passed: bool
    expected: Any = True
    actual: Any = None


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verifier on one instance."""

    suite: str
    instance: str
    passed: bool
    checks: tuple[Check, ...]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "expected": repr(c.expected),
                    "actual": repr(c.actual),
                }
                for c in self.checks
            ],
        }


def make_report(suite: str, instance: str, checks: Sequence[Check]) -> VerifyReport:
    return VerifyReport(suite, instance, all(c.passed for c in checks), tuple(checks))


@dataclass(frozen=True)
class PrimeOrderClass:
    """Structure of a group all of whose nonidentity elements have prime order.

    kind is one of ``exponent_p``, ``frobenius_pq``, ``a5`` and
    ``not_all_prime_order``; p and q carry the primes where applicable.
    """

    kind: str
    p: int | None = None
    q: int | None = None

    def describe(self) -> str:
        if self.kind == "exponent_p":
            return f"exponent-{self.p} {self.p}-group"
        if self.kind == "frobenius_pq":
            return f"Frobenius: exponent-{self.p} kernel, complement of order {self.q}"
        if self.kind == "a5":
            return "alternating group on 5 points"
        return "has an element of composite order"


@dataclass(frozen=True)
class GKGraph:
    """Prime graph: vertices are primes dividing |G|, p-q an edge when some
    element order is divisible by p*q."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def component_count(self) -> int:
        parent = {v: v for v in self.vertices}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges:
            parent[find(a)] = find(b)
        return len({find(v) for v in self.vertices})


@dataclass(frozen=True)
class QuotCheckReport:
    """All coset-condition data for one pair (G, N).

    ``equal`` must coincide with ``cond_a and cond_b and cond_c``; the
    suite layer asserts that biconditional.  The part-five fields are None
    unless eta is preserved and G^- is a union of N-cosets.
    """

    eta_g: int
    eta_q: int
    equal: bool
    cond_a: bool
    cond_b: bool
    cond_c: bool
    gminus_coset_union: bool
    strong_generator_condition: bool
    gminus_n_stable: bool | None
    quotient_gminus_matches: bool | None
    witnesses: dict[str, tuple[str, ...]] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Quotient conditions
# ---------------------------------------------------------------------------

def _generator_class_indices(G: Group) -> tuple[dict, dict]:
    """Element -> conjugacy class index, and cyclic key -> generator classes."""
    part = conjugacy_classes(G)
    _, elem_key = _cyclic_index(G)
    return part.index_of, elem_key


def check_quot_conditions(G: Group, N: Group) -> QuotCheckReport:
    """Evaluate when eta survives the quotient by N.

    eta(G/N) = eta(G) holds exactly when (a) N lies in G^-, (b) the
    non-generators of the quotient are the cosets inside G^-, and (c) for
    every x outside G^-, each element of xN outside G^- is conjugate to a
    generator of <x>.
    """
    if not is_normal(G, N):
        raise NotNormal("check_quot_conditions requires N normal in G")
    if N.order == G.order:
        raise NotProper("check_quot_conditions requires N proper in G")

    gminus_set = g_minus(G)
    eta_g = eta(G).eta
    Q, table = quotient_group(G, N)
    eta_q = eta(Q).eta
    equal = eta_g == eta_q
    witnesses: dict[str, tuple[str, ...]] = {}

    cond_a = N.elements <= gminus_set
    if not cond_a:
        witnesses["cond_a"] = tuple(
            x.cycle_string() for x in sorted(N.elements - gminus_set)[:3]
        )

    quotient_gminus_points = {q.images[0] for q in g_minus(Q)}
    covered_points = {
        i for i, coset in enumerate(table.cosets) if coset <= gminus_set
    }
    cond_b = quotient_gminus_points == covered_points
    if not cond_b:
        diff = quotient_gminus_points ^ covered_points
        witnesses["cond_b"] = tuple(str(i) for i in sorted(diff)[:3])

    class_index, elem_key = _generator_class_indices(G)
    gen_classes: dict[frozenset, frozenset[int]] = {}

    def generator_classes_of(x: Permutation) -> frozenset[int]:
        key = elem_key[x]
        got = gen_classes.get(key)
        if got is None:
            n = len(key)
            got = frozenset(
                class_index[y] for y in key if perm_order(y) == n
            )
            gen_classes[key] = got
        return got

    cond_c = True
    strong = True
    bad_c: list[str] = []
    bad_strong: list[str] = []
    for x in G.element_list:
        if x in gminus_set:
            continue
        targets = generator_classes_of(x)
        for n in N.element_list:
            y = x * n
            if class_index[y] in targets:
                continue
            strong = False
            if len(bad_strong) < 3:
                bad_strong.append(f"{x.cycle_string()} ~ {y.cycle_string()}")
            if y not in gminus_set:
                cond_c = False
                if len(bad_c) < 3:
                    bad_c.append(f"{x.cycle_string()} ~ {y.cycle_string()}")
    if bad_c:
        witnesses["cond_c"] = tuple(bad_c)
    if bad_strong:
        witnesses["strong"] = tuple(bad_strong)

    coset_union = all(
        table.cosets[table.point_of[g]] <= gminus_set for g in gminus_set
    )

    gminus_n_stable: bool | None = None
    quotient_gminus_matches: bool | None = None
    if equal and coset_union:
        product = {g * n for g in gminus_set for n in N.element_list}
        gminus_n_stable = product == gminus_set
        quotient_gminus_matches = (
            {table.point_of[g] for g in product} == quotient_gminus_points
        )

    return QuotCheckReport(
        eta_g=eta_g,
        eta_q=eta_q,
        equal=equal,
        cond_a=cond_a,
        cond_b=cond_b,
        cond_c=cond_c,
        gminus_coset_union=coset_union,
        strong_generator_condition=strong,
        gminus_n_stable=gminus_n_stable,
        quotient_gminus_matches=quotient_gminus_matches,
        witnesses=witnesses,
    )


def quot_report_checks(G: Group, N: Group, rep: QuotCheckReport, label: str) -> list[Check]:
    """Turn one QuotCheckReport into named sub-checks, including the
    biconditional, monotonicity and the p-group/coset-union refinements."""
    conds = rep.cond_a and rep.cond_b and rep.cond_c
    checks = [
        Check(f"{label}.monotone", rep.eta_q <= rep.eta_g, "eta(G/N) <= eta(G)",
              (rep.eta_q, rep.eta_g)),
        Check(f"{label}.biconditional", rep.equal == conds,
              "equal <=> (a and b and c)",
              {"equal": rep.equal, "a": rep.cond_a, "b": rep.cond_b,
               "c": rep.cond_c, "witnesses": rep.witnesses}),
        Check(f"{label}.union_biconditional",
              (rep.equal and rep.gminus_coset_union) == rep.strong_generator_condition,
              "(equal and union) <=> all of xN conjugate to generators",
              {"equal": rep.equal, "union": rep.gminus_coset_union,
               "strong": rep.strong_generator_condition}),
    ]
    if is_p_group(G):
        checks.append(
            Check(f"{label}.pgroup_union", (not rep.equal) or rep.gminus_coset_union,
                  "p-group: equal => G^- a union of N-cosets",
                  {"equal": rep.equal, "union": rep.gminus_coset_union})
        )
    if rep.gminus_n_stable is not None:
        checks.append(Check(f"{label}.gminusN", rep.gminus_n_stable, True,
                            rep.gminus_n_stable))
        checks.append(Check(f"{label}.quotient_gminus", rep.quotient_gminus_matches,
                            True, rep.quotient_gminus_matches))
    return checks


# ---------------------------------------------------------------------------
# X(G)
# ---------------------------------------------------------------------------

def compute_X(G: Group) -> Group:
    """Largest normal subgroup X of a noncyclic p-group with eta(G/X) = eta(G).

    X is the join of every normal M with eta(G/M) = eta(G); the function
    re-checks that X itself qualifies and that it contains each qualifying
    subgroup.
    """
    if not is_p_group(G):
        raise NotPGroup("compute_X requires a p-group")
    if is_cyclic(G):
        raise GroupIsCyclic("compute_X requires a noncyclic group")
    target = eta(G).eta
    qualifying = [
        M for M in normal_subgroups(G)
        if M.order < G.order and eta(quotient_group(G, M)[0]).eta == target
    ]
    union: set[Permutation] = {G.identity}
    for M in qualifying:
        union |= M.elements
    X = group_from_elements(G.degree, subgroup_generated(G, union).elements)
    if eta(quotient_group(G, X)[0]).eta != target:
        raise InternalCheckError("join of eta-preserving normals does not preserve eta")
    if not all(M.elements <= X.elements for M in qualifying):
        raise InternalCheckError("a qualifying normal subgroup escapes the join")
    if not is_normal(G, X):
        raise InternalCheckError("X is not normal")
    return X


# ---------------------------------------------------------------------------
# Classification of all-prime-order groups
# ---------------------------------------------------------------------------

def _closed_under_product(members: set[Permutation]) -> bool:
    return all(a * b in members for a in members for b in members)


def classify_prime_order_group(G: Group) -> PrimeOrderClass:
    """Structural class of a group whose nonidentity elements all have
    prime order.

    Returns ``not_all_prime_order`` when some element order is composite.
    Otherwise the group is an exponent-p p-group, a Frobenius group with
    exponent-p kernel and complement of prime order q, or the simple group
    of order 60, and the matching structure is verified directly.  The
    trivial group counts, vacuously, as a 2-group of exponent 2.
    """
    orders = {perm_order(x) for x in G.element_list}
    if any(o != 1 and not is_prime(o) for o in orders):
        return PrimeOrderClass("not_all_prime_order")
    if G.order == 1:
        return PrimeOrderClass("exponent_p", p=2)
    p = is_p_group(G)
    if p is not None:
        return PrimeOrderClass("exponent_p", p=p)
    if is_simple_nonabelian_60(G):
        return PrimeOrderClass("a5")
    primes = prime_factors(G.order)
    if len(primes) == 2:
        for kernel_p, comp_q in ((primes[0], primes[1]), (primes[1], primes[0])):
            if p_part(G.order, comp_q) != comp_q:
                continue
            kernel = {
                x for x in G.element_list if perm_order(x) in (1, kernel_p)
            }
            if len(kernel) != G.order // comp_q:
                continue
            if not _closed_under_product(kernel):
                continue
            q_elements = [x for x in G.element_list if perm_order(x) == comp_q]
            ident = G.identity
            free = all(
                x.conjugate_by(h) != x
                for h in q_elements
                for x in kernel
                if x != ident
            )
            if free:
                return PrimeOrderClass("frobenius_pq", p=kernel_p, q=comp_q)
    raise ClassificationFailed(
        f"group of order {G.order} with all prime element orders matches no "
        "expected structure"
    )


def check_first_main(G: Group) -> VerifyReport:
    """If <G^-> is proper, the quotient by it must be an exponent-p group,
    a Frobenius group with prime-order complement, or the simple group of
    order 60."""
    instance = f"order {G.order}"
    gm = g_minus(G)
    H = subgroup_generated(G, gm) if gm else subgroup_generated(G, [G.identity])
    normal = is_normal(G, H)
    checks = [Check("gminus_closure_normal", normal, True, normal)]
    if H.order == G.order:
        checks.append(Check("vacuous (<G^-> = G)", True, "skip", "skip"))
        return make_report("first-main", instance, checks)
    Q, _ = quotient_group(G, H)
    try:
        cls = classify_prime_order_group(Q)
        checks.append(
            Check("quotient_class", cls.kind != "not_all_prime_order",
                  "exponent_p | frobenius_pq | a5", cls.kind)
        )
    except ClassificationFailed as exc:
        checks.append(Check("quotient_class", False, "a known class", str(exc)))
    return make_report("first-main", instance, checks)


# ---------------------------------------------------------------------------
# G^- as a set
# ---------------------------------------------------------------------------

def check_gminus_containment(G: Group, N: Group) -> VerifyReport:
    """G^- lies in N exactly when everything outside N has prime power
    order and the quotient has prime element orders; plus the prime-index
    and exponent-p refinements."""
    if not is_normal(G, N):
        raise NotNormal("check_gminus_containment requires N normal")
    gm = g_minus(G)
    contained = gm <= N.elements
    outside_ppo = all(
        _prime_power(perm_order(x))
        for x in G.element_list
        if x not in N.elements
    )
    Q, _ = quotient_group(G, N)
    q_prime = all(
        perm_order(x) == 1 or is_prime(perm_order(x)) for x in Q.element_list
    )
    checks = [
        Check("part1", contained == (outside_ppo and q_prime),
              "G^- in N <=> (prime-power outside, prime orders in G/N)",
              {"contained": contained, "outside_ppo": outside_ppo, "q_prime": q_prime}),
    ]
    index = G.order // N.order
    if is_prime(index):
        p = index
        outside_p_power = all(
            p_part(perm_order(x), p) == perm_order(x)
            for x in G.element_list
            if x not in N.elements
        )
        checks.append(
            Check("part2", contained == outside_p_power,
                  "index p: G^- in M <=> p-power orders outside M",
                  {"contained": contained, "outside_p_power": outside_p_power})
        )
    p = is_p_group(G)
    if p is not None and exponent(Q) in (1, p):
        checks.append(
            Check("part3", contained, "p-group with exponent-p quotient: G^- in N",
                  contained)
        )
    return make_report("gminus-containment", f"order {G.order}, N order {N.order}", checks)


def check_gminus_subgroup_lemma(G: Group) -> VerifyReport:
    """When G^- is closed under the product, every element order must be a
    prime power; vacuous when G^- is not a subgroup."""
    gm = g_minus(G)
    closed = _closed_under_product(set(gm))
    checks = [Check("gminus_is_subgroup", True, None, closed)]
    if closed:
        all_ppo = all(_prime_power(perm_order(x)) for x in G.element_list)
        checks.append(Check("all_prime_power_orders", all_ppo, True, all_ppo))
    else:
        checks.append(Check("vacuous (G^- not a subgroup)", True, "skip", "skip"))
    return make_report("gminus-subgroup", f"order {G.order}", checks)


def gk_graph(G: Group) -> GKGraph:
    """Prime graph of G."""
    vertices = tuple(prime_factors(G.order))
    edges: set[tuple[int, int]] = set()
    for x in G.element_list:
        ps = prime_factors(perm_order(x))
        for i, a in enumerate(ps):
            for b in ps[i + 1:]:
                edges.add((a, b))
    return GKGraph(vertices, tuple(sorted(edges)))


def check_l_relation(G: Group) -> VerifyReport:
    """eta(G) = l(G) - 1 exactly when every nonidentity element has prime
    order."""
    if G.order == 1:
        raise ValueError("check_l_relation requires a nontrivial group")
    rep = eta(G)
    lhs = rep.eta == rep.l_value - 1
    rhs = all(
        is_prime(perm_order(x)) for x in G.element_list if not x.is_identity()
    )
    checks = [
        Check("eta_le_l_minus_1", rep.eta <= rep.l_value - 1,
              "eta <= l - 1", (rep.eta, rep.l_value)),
        Check("biconditional", lhs == rhs,
              "eta = l - 1 <=> all prime element orders",
              {"eta": rep.eta, "l": rep.l_value, "all_prime": rhs}),
    ]
    return make_report("l-relation", f"order {G.order}", checks)


# ---------------------------------------------------------------------------
# Products and Frobenius groups
# ---------------------------------------------------------------------------

def check_dirproduct_laws(H: Group, K: Group) -> VerifyReport:
    """The five direct-product laws, each evaluated when applicable."""
    G = direct_product(H, K)
    e_h, e_k, e_g = eta(H).eta, eta(K).eta, eta(G).eta
    instance = f"|H|={H.order}, |K|={K.order}"
    checks = [
        Check("i.product_lower_bound", e_g >= e_h * e_k,
              f"eta >= {e_h}*{e_k}", e_g)
    ]
    if math.gcd(H.order, K.order) == 1:
        checks.append(
            Check("ii.coprime_equality", e_g == e_h * e_k, e_h * e_k, e_g)
        )
    for name, A, B, e_a, e_b in (("H", H, K, e_h, e_k), ("K", K, H, e_k, e_h)):
        p = is_p_group(A)
        if p is not None and B.order % p == 0:
            bound = e_a * e_b + eta_p(B, p)
            checks.append(
                Check(f"iii.pgroup_{name}", e_g >= bound and e_g > e_a * e_b,
                      f"eta >= {bound} > {e_a * e_b}", e_g)
            )
    shared = [p for p in prime_factors(H.order) if K.order % p == 0]
    for name, A, B, e_b in (("H", H, K, e_k), ("K", K, H, e_h)):
        if A.order > 1 and shared and is_nilpotent(A):
            checks.append(
                Check(f"iv.nilpotent_{name}", e_g > e_b, f"eta > {e_b}", e_g)
            )
    p_h, p_k = is_p_group(H), is_p_group(K)
    if p_h is not None and p_h == p_k:
        bound = e_h * e_k + e_h + e_k
        checks.append(
            Check("v.same_prime_pgroups", e_g >= bound, f"eta >= {bound}", e_g)
        )
    return make_report("dirproduct", instance, checks)


def verify_frobenius(G: Group, N: Group, H: Group) -> None:
    """Raise NotFrobenius unless G = NH with N normal, trivial N∩H, and
    distinct conjugates of H meeting trivially."""
    try:
        normal = is_normal(G, N)
    except NotSubgroup as exc:
        raise NotFrobenius(f"kernel is not a subgroup of G: {exc}") from exc
    if not normal:
        raise NotFrobenius("kernel is not normal")
    if not H.elements <= G.elements:
        raise NotFrobenius("complement is not a subgroup of G")
    if len(N.elements & H.elements) != 1:
        raise NotFrobenius("kernel and complement intersect nontrivially")
    if N.order * H.order != G.order:
        raise NotFrobenius("|N| * |H| != |G|")
    for g in G.element_list:
        if g in H.elements:
            continue
        conj = {h.conjugate_by(g) for h in H.elements}
        if len(conj & H.elements) > 1:
            raise NotFrobenius(
                f"H meets its conjugate by {g.cycle_string()} nontrivially"
            )


def check_frobenius_eta(G: Group, N: Group, H: Group) -> VerifyReport:
    """eta of a Frobenius group is eta*(kernel) + eta(complement)."""
    verify_frobenius(G, N, H)
    e_star = eta_star(G, N)
    e_h = eta(H).eta
    e_g = eta(G).eta
    checks = [
        Check("frobenius_sum", e_g == e_star + e_h,
              f"eta(G) == {e_star} + {e_h}", e_g)
    ]
    return make_report("frobenius", f"|G|={G.order}, |N|={N.order}, |H|={H.order}", checks)


def check_centre_bounds(G: Group, N: Group) -> VerifyReport:
    """eta(G) >= eta*(N); the central and index-k refinements."""
    if not is_normal(G, N):
        raise NotNormal("check_centre_bounds requires N normal")
    e_g = eta(G).eta
    e_star = eta_star(G, N)
    checks = [Check("star_bound", e_g >= e_star, f"eta(G) >= {e_star}", e_g)]
    e_n = eta(N).eta
    if N.elements <= center(G).elements:
        checks.append(Check("central_case", e_g >= e_n, f"eta(G) >= {e_n}", e_g))
    k = G.order // N.order
    checks.append(
        Check("index_k_case", k * e_g >= e_n, f"{k}*eta(G) >= {e_n}", k * e_g)
    )
    return make_report("centre", f"order {G.order}, N order {N.order}", checks)


# ---------------------------------------------------------------------------
# Derived subgroup, exponent bound, dichotomy, joins
# ---------------------------------------------------------------------------

def _noncyclic_sylows_of_abelianization(G: Group) -> tuple[bool, Group]:
    """Whether every nontrivial Sylow subgroup of G/G' is noncyclic."""
    D = derived_subgroup(G)
    A, _ = quotient_group(G, D)
    hyp = True
    for p in prime_factors(A.order):
        size = p_part(A.order, p)
        if size > 1 and any(perm_order(a) == size for a in A.element_list):
            hyp = False
            break
    return hyp, D


def check_derived_criterion(G: Group, N: Group) -> VerifyReport:
    """When eta survives G -> G/N and no Sylow subgroup of G/G' is cyclic,
    N must lie inside the derived subgroup."""
    if not is_normal(G, N):
        raise NotNormal("check_derived_criterion requires N normal")
    instance = f"order {G.order}, N order {N.order}"
    e_g = eta(G).eta
    e_q = eta(quotient_group(G, N)[0]).eta
    if e_q != e_g:
        return make_report("derived", instance,
                           [Check("vacuous (eta not preserved)", True, "skip",
                                  {"eta_g": e_g, "eta_q": e_q})])
    hyp, D = _noncyclic_sylows_of_abelianization(G)
    inside = N.elements <= D.elements
    checks = [Check("hypothesis_noncyclic_sylows", True, None, hyp)]
    if hyp:
        checks.append(Check("N_inside_derived", inside, True, inside))
    else:
        checks.append(Check("vacuous (some Sylow of G/G' cyclic)", True, "skip",
                            {"N_inside_derived": inside}))
    return make_report("derived", instance, checks)


def check_exp_bound(G: Group) -> VerifyReport:
    """eta >= n + p - 1 for an exponent-p group of order p**n, n >= 2."""
    p = is_p_group(G)
    if p is None or exponent(G) != p:
        raise NotExponentP("check_exp_bound requires a p-group of exponent p")
    n = round(math.log(G.order, p))
    if n < 2:
        raise NotExponentP("check_exp_bound requires order >= p**2")
    e_g = eta(G).eta
    bound = n + p - 1
    return make_report(
        "exp-bound",
        f"order {G.order} = {p}^{n}",
        [Check("growth_bound", e_g >= bound, f"eta >= {bound}", e_g)],
    )


def check_eitheror(G: Group, N: Group, M: Group) -> VerifyReport:
    """For a noncyclic p-group with eta(G/N) = eta(G) and N nontrivial:
    every normal M satisfies N <= M or M <= G^-; a normal maximal cyclic
    subgroup, when present, must contain N."""
    if not is_p_group(G):
        raise NotPGroup("check_eitheror requires a p-group")
    if is_cyclic(G):
        raise GroupIsCyclic("check_eitheror requires a noncyclic group")
    if N.order == 1:
        raise HypothesisFailed("N must be nontrivial")
    if not is_normal(G, N) or not is_normal(G, M):
        raise NotNormal("N and M must be normal")
    if eta(quotient_group(G, N)[0]).eta != eta(G).eta:
        raise HypothesisFailed("eta(G/N) != eta(G)")
    gm = g_minus(G)
    dichotomy = N.elements <= M.elements or M.elements <= gm
    checks = [
        Check("dichotomy", dichotomy, "N <= M or M <= G^-",
              {"N_in_M": N.elements <= M.elements, "M_in_gminus": M.elements <= gm})
    ]
    for sub in maximal_cyclic_subgroups(G):
        stable = all(
            y.conjugate_by(g) in sub.elements
            for g in G.generators
            for y in sub.elements
        )
        if stable:
            checks.append(
                Check(f"normal_maximal_cyclic_order_{sub.order}_contains_N",
                      N.elements <= sub.elements, True,
                      N.elements <= sub.elements)
            )
    return make_report(
        "eitheror",
        f"order {G.order}, N order {N.order}, M order {M.order}",
        checks,
    )


def check_quotient_join(G: Group, N: Group, M: Group) -> VerifyReport:
    """For a noncyclic p-group, two eta-preserving normal subgroups have an
    eta-preserving join."""
    if not is_p_group(G):
        raise NotPGroup("check_quotient_join requires a p-group")
    if is_cyclic(G):
        raise GroupIsCyclic("check_quotient_join requires a noncyclic group")
    e_g = eta(G).eta
    for s in (N, M):
        if not is_normal(G, s):
            raise NotNormal("N and M must be normal")
        if eta(quotient_group(G, s)[0]).eta != e_g:
            raise HypothesisFailed("eta(G/N) = eta(G/M) = eta(G) required")
    join = subgroup_generated(G, N.elements | M.elements)
    e_join = eta(quotient_group(G, join)[0]).eta
    return make_report(
        "products-join",
        f"order {G.order}, |N|={N.order}, |M|={M.order}",
        [Check("join_preserves_eta", e_join == e_g, e_g, e_join)],
    )
