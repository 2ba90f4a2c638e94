"""Corpus loading and the verification suite runner.

A corpus is a line-oriented file of records ``spec ; key=value ; ...``
('#' starts a comment).  Each suite runs over the entries it applies to
and yields one report per (suite, entry); selector keys such as
``quot_eta[5,0]`` address the normal subgroup of order 5 at index 0 in
the deterministic ordering of :func:`maxcyc.core.normal_subgroups`.

Negative controls pass by failing: an entry marked ``frobenius=9:notfrob``
passes its suite exactly when the Frobenius verification rejects it.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable

from .constructors import DirectProductSpec, GroupSpec, named_normal, parse_spec, realize
from .core import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_ORDER_CAP,
    Group,
    derived_subgroup,
    is_cyclic,
    is_p_group,
    is_solvable,
    normal_subgroups,
    point_stabilizer,
    quotient_group,
    subgroup_generated,
)
from .cyclic import eta, eta_star, g_minus, g_minus_via_powers, g_power_set
from .errors import CorpusError, InternalCheckError, MaxcycError, NotExponentP, NotFrobenius
from .numutil import prime_factors
from .perm import perm_order
from .theorems import (
    Check,
    VerifyReport,
    _noncyclic_sylows_of_abelianization,
    check_centre_bounds,
    check_derived_criterion,
    check_dirproduct_laws,
    check_eitheror,
    check_exp_bound,
    check_first_main,
    check_frobenius_eta,
    check_gminus_containment,
    check_gminus_subgroup_lemma,
    check_l_relation,
    check_quot_conditions,
    check_quotient_join,
    classify_prime_order_group,
    compute_X,
    gk_graph,
    make_report,
    quot_report_checks,
)

_SELECTOR_RE = re.compile(r"^([a-z_]+)\[([0-9,]+)\]$")


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus record: a group spec plus optional expectations."""

    line_no: int
    spec_text: str
    tag: str
    expect: dict[str, str]

    def selected(self, name: str) -> list[tuple[tuple[int, ...], str]]:
        """All ``name[a,b,...]=value`` expectations, as (selector, value)."""
        out = []
        for key, value in self.expect.items():
            m = _SELECTOR_RE.match(key)
            if m and m.group(1) == name:
                out.append((tuple(int(v) for v in m.group(2).split(",")), value))
        return sorted(out)


def _split_fields(line: str) -> list[str]:
    """Split a record on ';' at parenthesis depth 0 (Perm specs carry ';'
    inside their parentheses)."""
    fields = []
    depth = 0
    start = 0
    for i, ch in enumerate(line):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == ";" and depth == 0:
            fields.append(line[start:i])
            start = i + 1
    fields.append(line[start:])
    return [f.strip() for f in fields]


def parse_corpus(text: str) -> list[CorpusEntry]:
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = _split_fields(line)
        spec_text = fields[0]
        if not spec_text:
            raise CorpusError(line_no, "empty spec")
        expect: dict[str, str] = {}
        tag = "derived"
        for f in fields[1:]:
            if not f:
                continue
            if "=" not in f:
                raise CorpusError(line_no, f"field {f!r} is not key=value")
            key, _, value = f.partition("=")
            key, value = key.strip(), value.strip()
            if key == "tag":
                tag = value
            else:
                expect[key] = value
        try:
            parse_spec(spec_text)
        except MaxcycError as exc:
            raise CorpusError(line_no, f"bad spec {spec_text!r}: {exc}") from exc
        entries.append(CorpusEntry(line_no, spec_text, tag, expect))
    return entries


def default_corpus_text() -> str:
    return resources.files("maxcyc").joinpath("data/default.corpus").read_text("utf-8")


@dataclass
class Instance:
    """A realized corpus entry."""

    entry: CorpusEntry
    spec: GroupSpec
    group: Group
    order_cap: int
    degree_cap: int


def realize_entry(
    entry: CorpusEntry,
    order_cap: int = DEFAULT_ORDER_CAP,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Instance:
    spec = parse_spec(entry.spec_text)
    return Instance(entry, spec, realize(spec, order_cap=order_cap, degree_cap=degree_cap),
                    order_cap, degree_cap)


def _labelled_normals(G: Group) -> list[tuple[int, int, Group]]:
    """(order, index-within-order, subgroup) in deterministic order."""
    out = []
    counts: dict[int, int] = {}
    for N in normal_subgroups(G):
        idx = counts.get(N.order, 0)
        counts[N.order] = idx + 1
        out.append((N.order, idx, N))
    return out


def _flatten(parts: Iterable[tuple[str, VerifyReport]]) -> list[Check]:
    checks = []
    for prefix, rep in parts:
        for c in rep.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            checks.append(Check(name, c.passed, c.expected, c.actual))
    return checks


def _merge(suite: str, instance: str, parts: Iterable[tuple[str, VerifyReport]]) -> VerifyReport:
    return make_report(suite, instance, _flatten(parts))


def _int_check(name: str, expected: str, actual: int) -> Check:
    return Check(name, int(expected) == actual, int(expected), actual)


# ---------------------------------------------------------------------------
# Suite runners (each returns a VerifyReport, or None when not applicable)
# ---------------------------------------------------------------------------

def run_values(inst: Instance) -> VerifyReport | None:
    e = inst.entry.expect
    keys = {"eta", "l", "gminus", "maxcyc", "normals"} & e.keys()
    if not keys:
        return None
    G = inst.group
    rep = eta(G)
    checks = []
    if "eta" in e:
        checks.append(_int_check("eta", e["eta"], rep.eta))
    if "l" in e:
        checks.append(_int_check("l", e["l"], rep.l_value))
    if "gminus" in e:
        checks.append(_int_check("gminus_size", e["gminus"], rep.gminus_size))
    if "maxcyc" in e:
        want = sorted(int(v) for v in e["maxcyc"].split(":"))
        got = sorted(o for o, _ in rep.class_reps)
        checks.append(Check("maxcyc_class_orders", want == got, want, got))
    if "normals" in e:
        want = sorted(int(v) for v in e["normals"].split(":"))
        got = sorted(N.order for N in normal_subgroups(G))
        checks.append(Check("normal_subgroup_orders", want == got, want, got))
    return make_report("values", inst.entry.spec_text, checks)


def run_pgrp_lemma(inst: Instance) -> VerifyReport:
    G = inst.group
    gm = g_minus(G)
    gm_pow = g_minus_via_powers(G)
    checks = [Check("gminus_equals_power_set", gm == gm_pow,
                    "G^- == {g^q : q | o(g)}", len(gm ^ gm_pow))]
    p = is_p_group(G)
    if p is not None:
        pw = g_power_set(G, p)
        checks.append(Check("pgroup_gminus_is_pth_powers", gm == pw,
                            f"G^- == G^{{{p}}}", len(gm ^ pw)))
    return make_report("pgrp-lemma", inst.entry.spec_text, checks)


def run_gminus_subgroup(inst: Instance) -> VerifyReport:
    rep = check_gminus_subgroup_lemma(inst.group)
    return _merge("gminus-subgroup", inst.entry.spec_text, [("", rep)])


def run_gminus_containment(inst: Instance) -> VerifyReport:
    G = inst.group
    parts = []
    for order, idx, N in _labelled_normals(G):
        parts.append((f"N[{order},{idx}]", check_gminus_containment(G, N)))
    return _merge("gminus-containment", inst.entry.spec_text, parts)


def run_l_relation(inst: Instance) -> VerifyReport | None:
    if inst.group.order == 1:
        return None
    return _merge("l-relation", inst.entry.spec_text,
                  [("", check_l_relation(inst.group))])


def run_gk_graph(inst: Instance) -> VerifyReport:
    G = inst.group
    graph = gk_graph(G)
    all_ppo = all(
        len(prime_factors(perm_order(x))) <= 1 for x in G.element_list
    )
    checks = [
        Check("no_edges_iff_prime_power_orders",
              (not graph.edges) == all_ppo,
              "empty graph <=> all prime power orders",
              {"edges": graph.edges, "all_ppo": all_ppo}),
    ]
    if all_ppo and len(graph.vertices) == 2 and is_solvable(G):
        checks.append(Check("solvable_two_primes_two_components",
                            graph.component_count() == 2, 2,
                            graph.component_count()))
    e = inst.entry.expect
    if "gk_edges" in e:
        want = e["gk_edges"]
        got = ":".join(f"{a}-{b}" for a, b in graph.edges) or "none"
        checks.append(Check("edges", want == got, want, got))
    if "gk_comps" in e:
        checks.append(_int_check("components", e["gk_comps"], graph.component_count()))
    return make_report("gk-graph", inst.entry.spec_text, checks)


_CLASSIFY_RENDER = {
    "exponent_p": lambda c: f"p:{c.p}",
    "frobenius_pq": lambda c: f"frob:{c.p}:{c.q}",
    "a5": lambda c: "a5",
    "not_all_prime_order": lambda c: "composite",
}


def run_first_main(inst: Instance) -> VerifyReport:
    G = inst.group
    checks = list(check_first_main(G).checks)
    expected = inst.entry.expect.get("classify")
    if expected is not None:
        cls = classify_prime_order_group(G)
        got = _CLASSIFY_RENDER[cls.kind](cls)
        checks.append(Check("classify", got == expected, expected, got))
    return make_report("first-main", inst.entry.spec_text, checks)


def run_dirproduct(inst: Instance) -> VerifyReport | None:
    if not isinstance(inst.spec, DirectProductSpec):
        return None
    H = realize(inst.spec.left, order_cap=inst.order_cap, degree_cap=inst.degree_cap)
    K = realize(inst.spec.right, order_cap=inst.order_cap, degree_cap=inst.degree_cap)
    return _merge("dirproduct", inst.entry.spec_text,
                  [("", check_dirproduct_laws(H, K))])


def run_frobenius(inst: Instance) -> VerifyReport | None:
    e = inst.entry.expect.get("frobenius")
    if e is None:
        return None
    G = inst.group
    kernel_order_text, _, mode = e.partition(":")
    N = named_normal(G, int(kernel_order_text), 0)
    H = point_stabilizer(G, 0)
    checks: list[Check] = []
    if mode == "eq":
        try:
            rep = check_frobenius_eta(G, N, H)
            checks.extend(rep.checks)
        except NotFrobenius as exc:
            checks.append(Check("frobenius_sum", False, "Frobenius structure", str(exc)))
    elif mode == "notfrob":
        try:
            check_frobenius_eta(G, N, H)
            checks.append(Check("rejected_as_frobenius", False,
                                "NotFrobenius raised", "structure accepted"))
        except NotFrobenius as exc:
            checks.append(Check("rejected_as_frobenius", True,
                                "NotFrobenius raised", str(exc)))
    else:
        checks.append(Check("mode", False, "eq|notfrob", mode))
    gap = inst.entry.expect.get("frob_gap")
    if gap is not None:
        actual = eta_star(G, N) + eta(H).eta - eta(G).eta
        checks.append(_int_check("sum_minus_eta_gap", gap, actual))
    return make_report("frobenius", inst.entry.spec_text, checks)


def run_centre(inst: Instance) -> VerifyReport:
    G = inst.group
    parts = []
    for order, idx, N in _labelled_normals(G):
        parts.append((f"N[{order},{idx}]", check_centre_bounds(G, N)))
    checks = _flatten(parts)
    for selector, value in inst.entry.selected("eta_star"):
        N = named_normal(G, selector[0], selector[1])
        checks.append(_int_check(f"eta_star[{selector[0]},{selector[1]}]",
                                 value, eta_star(G, N)))
    return make_report("centre", inst.entry.spec_text, checks)


def run_quot(inst: Instance) -> VerifyReport:
    G = inst.group
    checks: list[Check] = []
    reports: dict[tuple[int, int], object] = {}
    for order, idx, N in _labelled_normals(G):
        if N.order == G.order:
            continue
        rep = check_quot_conditions(G, N)
        reports[(order, idx)] = rep
        checks.extend(quot_report_checks(G, N, rep, f"N[{order},{idx}]"))
    for selector, value in inst.entry.selected("quot_eta"):
        rep = reports[selector]
        checks.append(_int_check(f"quot_eta[{selector[0]},{selector[1]}]",
                                 value, rep.eta_q))
    for selector, value in inst.entry.selected("quot_union"):
        rep = reports[selector]
        checks.append(Check(f"quot_union[{selector[0]},{selector[1]}]",
                            bool(int(value)) == rep.gminus_coset_union,
                            bool(int(value)), rep.gminus_coset_union))
    return make_report("quot", inst.entry.spec_text, checks)


def run_products_join(inst: Instance) -> VerifyReport | None:
    G = inst.group
    checks: list[Check] = []
    p = is_p_group(G)
    if p is not None and not is_cyclic(G):
        target = eta(G).eta
        qualifying = [
            (order, idx, N)
            for order, idx, N in _labelled_normals(G)
            if N.order < G.order and eta(quotient_group(G, N)[0]).eta == target
        ]
        for o1, i1, N in qualifying:
            for o2, i2, M in qualifying:
                rep = check_quotient_join(G, N, M)
                for c in rep.checks:
                    checks.append(Check(f"N[{o1},{i1}]vM[{o2},{i2}].{c.name}",
                                        c.passed, c.expected, c.actual))
    for selector, value in inst.entry.selected("join_eta"):
        o1, i1, o2, i2 = selector
        N = named_normal(G, o1, i1)
        M = named_normal(G, o2, i2)
        J = subgroup_generated(G, N.elements | M.elements)
        e_join = eta(quotient_group(G, J)[0]).eta
        checks.append(_int_check(f"join_eta[{o1},{i1},{o2},{i2}]", value, e_join))
    if not checks:
        return None
    return make_report("products-join", inst.entry.spec_text, checks)


def run_xsub(inst: Instance) -> VerifyReport | None:
    G = inst.group
    if is_p_group(G) is None or is_cyclic(G):
        return None
    checks: list[Check] = []
    try:
        X = compute_X(G)
    except InternalCheckError as exc:
        return make_report("xsub", inst.entry.spec_text,
                           [Check("compute_X", False, "well-defined join", str(exc))])
    target = eta(G).eta
    scan_ok = all(
        (eta(quotient_group(G, M)[0]).eta == target) == (M.elements <= X.elements)
        for M in normal_subgroups(G)
    )
    checks.append(Check("eta_preserved", eta(quotient_group(G, X)[0]).eta == target,
                        target, eta(quotient_group(G, X)[0]).eta))
    checks.append(Check("maximality_scan", scan_ok,
                        "M qualifies <=> M <= X", scan_ok))
    e = inst.entry.expect
    if "x_order" in e:
        checks.append(_int_check("x_order", e["x_order"], X.order))
    if "x_cyclic" in e:
        checks.append(Check("x_cyclic", bool(int(e["x_cyclic"])) == is_cyclic(X),
                            bool(int(e["x_cyclic"])), is_cyclic(X)))
    return make_report("xsub", inst.entry.spec_text, checks)


def run_derived(inst: Instance) -> VerifyReport:
    G = inst.group
    parts = []
    for order, idx, N in _labelled_normals(G):
        if N.order == G.order:
            continue
        parts.append((f"N[{order},{idx}]", check_derived_criterion(G, N)))
    checks = _flatten(parts)
    D = derived_subgroup(G)
    for selector, value in inst.entry.selected("in_derived"):
        N = named_normal(G, selector[0], selector[1])
        inside = N.elements <= D.elements
        checks.append(Check(f"in_derived[{selector[0]},{selector[1]}]",
                            bool(int(value)) == inside, bool(int(value)), inside))
    if "derived_hyp" in inst.entry.expect:
        hyp, _ = _noncyclic_sylows_of_abelianization(G)
        want = bool(int(inst.entry.expect["derived_hyp"]))
        checks.append(Check("derived_hyp", want == hyp, want, hyp))
    return make_report("derived", inst.entry.spec_text, checks)


def run_exp_bound(inst: Instance) -> VerifyReport | None:
    try:
        rep = check_exp_bound(inst.group)
    except NotExponentP:
        return None
    return _merge("exp-bound", inst.entry.spec_text, [("", rep)])


def run_eitheror(inst: Instance) -> VerifyReport | None:
    G = inst.group
    if is_p_group(G) is None or is_cyclic(G):
        return None
    target = eta(G).eta
    labelled = _labelled_normals(G)
    qualifying = [
        (order, idx, N)
        for order, idx, N in labelled
        if 1 < N.order < G.order and eta(quotient_group(G, N)[0]).eta == target
    ]
    if not qualifying:
        return make_report("eitheror", inst.entry.spec_text,
                           [Check("vacuous (no eta-preserving nontrivial N)",
                                  True, "skip", "skip")])
    checks: list[Check] = []
    for o1, i1, N in qualifying:
        for o2, i2, M in labelled:
            rep = check_eitheror(G, N, M)
            for c in rep.checks:
                checks.append(Check(f"N[{o1},{i1}]vM[{o2},{i2}].{c.name}",
                                    c.passed, c.expected, c.actual))
    return make_report("eitheror", inst.entry.spec_text, checks)


SUITES: dict[str, Callable[[Instance], VerifyReport | None]] = {
    "values": run_values,
    "dirproduct": run_dirproduct,
    "frobenius": run_frobenius,
    "centre": run_centre,
    "pgrp-lemma": run_pgrp_lemma,
    "gminus-containment": run_gminus_containment,
    "gminus-subgroup": run_gminus_subgroup,
    "quot": run_quot,
    "products-join": run_products_join,
    "xsub": run_xsub,
    "derived": run_derived,
    "exp-bound": run_exp_bound,
    "eitheror": run_eitheror,
    "l-relation": run_l_relation,
    "first-main": run_first_main,
    "gk-graph": run_gk_graph,
}


def _run_task(task: tuple[str, CorpusEntry, int, int]) -> VerifyReport | None:
    """Worker entry: run one suite on one corpus record (used by --jobs)."""
    suite, entry, order_cap, degree_cap = task
    inst = realize_entry(entry, order_cap, degree_cap)
    return SUITES[suite](inst)


def run_suites(
    suite_names: list[str],
    entries: list[CorpusEntry],
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    jobs: int = 1,
) -> list[VerifyReport]:
    """Run the named suites over the corpus, reports in (suite, entry) order.

    With jobs > 1 the (suite, entry) tasks run in a process pool; reports
    are still returned in task order, so output is identical to a serial
    run.
    """
    for name in suite_names:
        if name not in SUITES:
            raise MaxcycError(f"unknown suite {name!r}")
    if jobs > 1:
        tasks = [
            (name, entry, order_cap, degree_cap)
            for name in suite_names
            for entry in entries
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
        return [r for r in results if r is not None]
    instances: dict[int, Instance] = {}
    reports = []
    for name in suite_names:
        fn = SUITES[name]
        for entry in entries:
            inst = instances.get(entry.line_no)
            if inst is None:
                inst = realize_entry(entry, order_cap, degree_cap)
                instances[entry.line_no] = inst
            report = fn(inst)
            if report is not None:
                reports.append(report)
    return reports
