"""Acceptance battery: every closed-form result replayed with exact equality.

Each criterion yields a list of cases (label, expected, computed) and passes
when every case matches exactly. ``run_suite`` returns results sorted by
check id; the CLI ``verify`` subcommand renders them as a table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import families as F
from .graph import (
    Graph, build_graph, component_profile, connected_components, cut_vertices, disjoint_union,
    hamiltonian_cycle, has_true_twins, is_bipartite, is_connected,
)
from .io import write_graph
from .isomorphism import is_isomorphic
from .optimize import (
    invariant_report, max_matching, max_weight_on_optimal_face, sdim, sdim_f, sdim_f_reduced,
)
from .optimize.bounds import (
    cartesian_bounds, cartesian_matching_bounds, corona_value, k1_corona_bounds,
    lexicographic_bounds, twin_class_lower_bound,
)
from .products import cartesian, corona, direct, lexicographic
from .resolving import strong_resolving_graph


def fmt(value: object) -> str:
    """Exact rendering: ``p/q`` for non-integral rationals, plain text otherwise."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, tuple):
        return "(" + ", ".join(fmt(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class Case:
    label: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class CheckResult:
    check_id: int
    title: str
    citation: str
    cases: tuple[Case, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def summary(self) -> tuple[str, str]:
        """(expected, computed) strings for the table row."""
        bad = self.failures()
        if len(self.cases) == 1 or bad:
            c = bad[0] if bad else self.cases[0]
            prefix = f"{c.label}: " if len(self.cases) > 1 else ""
            return prefix + fmt(c.expected), prefix + fmt(c.computed)
        text = f"{len(self.cases)} cases exact"
        return text, text


@dataclass
class VerifyConfig:
    seed: int = 1
    random_graphs: int = 500
    max_n: int = 12
    fixture_dir: Path = field(default_factory=lambda: Path("verify-failures"))


@dataclass(frozen=True)
class _Criterion:
    check_id: int
    title: str
    citation: str
    run: Callable[[VerifyConfig], list[Case]]


CRITERIA: dict[int, _Criterion] = {}


def _criterion(check_id: int, title: str, citation: str):
    def register(fn: Callable[[VerifyConfig], list[Case]]):
        CRITERIA[check_id] = _Criterion(check_id, title, citation, fn)
        return fn
    return register


def _f(g: Graph) -> Fraction:
    return sdim_f(g)[0]


def _partitions(n: int, largest: Optional[int] = None) -> Iterable[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def multipartite_vectors(max_n: int) -> list[tuple[int, ...]]:
    """All part-size vectors (non-increasing) with at least two parts and order <= max_n."""
    return [p for n in range(2, max_n + 1) for p in _partitions(n) if len(p) >= 2]


def _seeded_trees(seed: int, count: int, max_n: int) -> list[Graph]:
    rng = random.Random(seed)
    return [F.random_tree(rng.randrange(2, max_n + 1), rng.randrange(2**31)) for _ in range(count)]


@_criterion(1, "sdim_f(P_n) = 1, n = 2..8", "path characterization: sdim_f(G) = 1 exactly for paths")
def _c1(cfg: VerifyConfig) -> list[Case]:
    return [Case(f"P_{n}", Fraction(1), _f(F.path(n))) for n in range(2, 9)]


@_criterion(2, "sdim_f(C_n) = n/2, n = 3..10", "cycle value: sdim_f(C_n) = n/2")
def _c2(cfg: VerifyConfig) -> list[Case]:
    return [Case(f"C_{n}", Fraction(n, 2), _f(F.cycle(n))) for n in range(3, 11)]


@_criterion(3, "sdim_f(Petersen) = 5", "Petersen graph value: sdim_f = 5")
def _c3(cfg: VerifyConfig) -> list[Case]:
    return [Case("Petersen", Fraction(5), _f(F.petersen()))]


@_criterion(4, "wheels W_4..W_9", "wheel value: 2 for W_4, (n-1)/2 for n >= 5")
def _c4(cfg: VerifyConfig) -> list[Case]:
    cases = [Case("W_4", Fraction(2), _f(F.wheel(4)))]
    cases += [Case(f"W_{n}", Fraction(n - 1, 2), _f(F.wheel(n))) for n in range(5, 10)]
    return cases


@_criterion(5, "sdim_f(T) = sigma(T)/2, 50 random trees", "tree value: half the leaf count")
def _c5(cfg: VerifyConfig) -> list[Case]:
    trees = _seeded_trees(cfg.seed, 50, cfg.max_n)
    return [Case(f"tree#{i}(n={t.n})", Fraction(t.leaf_count(), 2), _f(t)) for i, t in enumerate(trees)]


def multipartite_formula(parts: tuple[int, ...]) -> Fraction:
    n = sum(parts)
    return Fraction(n - 1, 2) if sum(1 for a in parts if a == 1) == 1 else Fraction(n, 2)


@_criterion(6, "complete multipartite, n <= 10", "complete multipartite value: (n-1)/2 with one singleton part, else n/2")
def _c6(cfg: VerifyConfig) -> list[Case]:
    return [Case(f"K_{parts}", multipartite_formula(parts), _f(F.complete_multipartite(*parts)))
            for parts in multipartite_vectors(10)]


@_criterion(7, "gadget G_q, q = 1..4", "gadget family: |M| = 3q+3, sdim = 2q+2, sdim_f = q+2, G_SR = K_{2q+2} + K_{1,q}")
def _c7(cfg: VerifyConfig) -> list[Case]:
    cases = []
    for q in range(1, 5):
        g = F.gq_full(q)
        r = invariant_report(g)
        cases.append(Case(f"q={q} (|M|, sdim, sdim_f)", (3 * q + 3, 2 * q + 2, Fraction(q + 2)),
                          (r.boundary_size, r.sdim, r.sdim_f)))
        target = disjoint_union(F.complete(2 * q + 2), F.star(q))
        cases.append(Case(f"q={q} G_SR shape", True, is_isomorphic(strong_resolving_graph(g).graph, target)))
    return cases


def _small_graph(rng: random.Random, lo: int, hi: int, connected: bool) -> Graph:
    n = rng.randrange(lo, hi + 1)
    if connected:
        return F.random_connected(n, rng.randrange(2**31))
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.4])


@_criterion(8, "corona sdim_f(G . H) = nm/2, 30 pairs", "corona value: nm/2 for connected G of order n >= 2")
def _c8(cfg: VerifyConfig) -> list[Case]:
    rng = random.Random(cfg.seed * 1000 + 8)
    cases = []
    while len(cases) < 30:
        g = _small_graph(rng, 2, 6, connected=True)
        m_max = 30 // g.n - 1
        if m_max < 1:
            continue
        h = _small_graph(rng, 1, min(m_max, 6), connected=False)
        cases.append(Case(f"n={g.n},m={h.n}", Fraction(g.n * h.n, 2), _f(corona(g, h)[0])))
    return cases


@_criterion(9, "P_4[P_3]", "lexicographic remark: sdim_f(P_4[P_3]) = 5 < 6, SR graph K_2[K_2 + K_1] + 2K_2")
def _c9(cfg: VerifyConfig) -> list[Case]:
    g = lexicographic(F.path(4), F.path(3))[0]
    k2k1 = disjoint_union(F.complete(2), F.complete(1))
    target = disjoint_union(lexicographic(F.complete(2), k2k1)[0], F.complete(2), F.complete(2))
    return [Case("sdim_f", Fraction(5), _f(g)),
            Case("SR shape", True, is_isomorphic(strong_resolving_graph(g).graph, target))]


@_criterion(10, "C_5[P_3]", "lexicographic example: sdim_f(C_5[P_3]) = 15/2")
def _c10(cfg: VerifyConfig) -> list[Case]:
    return [Case("sdim_f", Fraction(15, 2), _f(lexicographic(F.cycle(5), F.path(3))[0]))]


@_criterion(11, "six-vertex twin example [P_3]", "twin-class example: sdim_f = 17/2 with lower bound 2(1)+3+3 = 8")
def _c11(cfg: VerifyConfig) -> list[Case]:
    g, h = F.fig5_example(), F.path(3)
    value = _f(lexicographic(g, h)[0])
    bound = twin_class_lower_bound(g, h)
    return [Case("sdim_f", Fraction(17, 2), value), Case("lower bound", Fraction(8), bound),
            Case("bound <= value", True, bound <= value)]


@_criterion(12, "house[house] and K_{1,n-1}[house]", "lexicographic sharpness: 25/2 attains the upper bound, (5n-1)/2 the lower")
def _c12(cfg: VerifyConfig) -> list[Case]:
    hh = F.house()
    cases = [Case("house[house]", Fraction(25, 2), _f(lexicographic(hh, hh)[0]))]
    for n in (3, 4, 5):
        g = F.star(n - 1)
        value = _f(lexicographic(g, hh)[0])
        b = lexicographic_bounds(g, hh)
        cases.append(Case(f"K_1,{n - 1}[house]", Fraction(5 * n - 1, 2), value))
        cases.append(Case(f"K_1,{n - 1}[house] = lower bound", value, b.lower))
    b = lexicographic_bounds(hh, hh)
    cases.append(Case("house[house] = upper bound", Fraction(25, 2), b.upper))
    return cases


@_criterion(13, "sdim_f(P_s x P_t) = 2, s,t = 2..5", "grid value: sdim_f(P_s box P_t) = 2")
def _c13(cfg: VerifyConfig) -> list[Case]:
    return [Case(f"P_{s}xP_{t}", Fraction(2), _f(cartesian(F.path(s), F.path(t))[0]))
            for s in range(2, 6) for t in range(s, 6)]


@_criterion(14, "C_n x C_m and C_n x K_m", "vertex-transitive products: sdim_f = nm/2")
def _c14(cfg: VerifyConfig) -> list[Case]:
    cases = [Case(f"C_{n}xC_{m}", Fraction(n * m, 2), _f(cartesian(F.cycle(n), F.cycle(m))[0]))
             for n, m in ((3, 3), (3, 4), (4, 5))]
    cases += [Case(f"C_{n}xK_{m}", Fraction(n * m, 2), _f(cartesian(F.cycle(n), F.complete(m))[0]))
              for n, m in ((3, 2), (4, 3))]
    return cases


@_criterion(15, "(G x H)_SR = G_SR (direct) H_SR, 20 pairs", "Cartesian structure: SR graph of G box H is the direct product of the SR graphs")
def _c15(cfg: VerifyConfig) -> list[Case]:
    rng = random.Random(cfg.seed * 1000 + 15)
    cases = []
    while len(cases) < 20:
        g = _small_graph(rng, 2, 7, connected=True)
        h = _small_graph(rng, 2, 7, connected=True)
        if g.n * h.n > 36:
            continue
        lhs = strong_resolving_graph(cartesian(g, h)[0]).graph
        rhs = direct(strong_resolving_graph(g).graph, strong_resolving_graph(h).graph)[0]
        cases.append(Case(f"n={g.n},m={h.n}", True, is_isomorphic(lhs, rhs)))
    return cases


@_criterion(16, "G_q (core) x P_n, q,n in {2,3}", "gadget product remark: sdim_f = 2q+2 and |M| = 3q+1")
def _c16(cfg: VerifyConfig) -> list[Case]:
    cases = []
    for q in (2, 3):
        core = F.gq_core(q)
        cases.append(Case(f"|M(core_{q})|", 3 * q + 1, len(strong_resolving_graph(core).boundary)))
        for n in (2, 3):
            cases.append(Case(f"core_{q}xP_{n}", Fraction(2 * q + 2), _f(cartesian(core, F.path(n))[0])))
    return cases


@_criterion(17, "sdim_f(T x K_n) = n sigma(T)/2", "tree times clique: n sigma(T)/2")
def _c17(cfg: VerifyConfig) -> list[Case]:
    trees = _seeded_trees(cfg.seed * 1000 + 17, 10, 8)
    return [Case(f"tree#{i}(n={t.n})xK_{n}", Fraction(n * t.leaf_count(), 2),
                 _f(cartesian(t, F.complete(n))[0]))
            for i, t in enumerate(trees) for n in (2, 3)]


@_criterion(18, "nu(K_{a_1..a_k}), n <= 10", "multipartite matching number: min(n - a_k, floor(n/2))")
def _c18(cfg: VerifyConfig) -> list[Case]:
    cases = []
    for parts in multipartite_vectors(10):
        n = sum(parts)
        cases.append(Case(f"K_{parts}", min(n - max(parts), n // 2),
                          max_matching(F.complete_multipartite(*parts))))
    return cases


@_criterion(20, "sdim(C_{2k+1} x K_2) = 2k+1", "odd-cycle remark: 2k+1 < 2 sdim(C_{2k+1})")
def _c20(cfg: VerifyConfig) -> list[Case]:
    cases = []
    for k in (1, 2, 3):
        c = F.cycle(2 * k + 1)
        value = sdim(cartesian(c, F.complete(2))[0])
        cases.append(Case(f"k={k}", 2 * k + 1, value))
        cases.append(Case(f"k={k} strict", True, value < 2 * sdim(c)))
    return cases


# --- criterion 19: corpus-wide properties ---------------------------------

_PARTNERS = ("path:2", "path:3", "cycle:3", "cycle:4", "star:3", "complete:3", "cycle:5", "house")


def _graph_properties(g: Graph, idx: int) -> dict[str, bool]:
    """Every corpus property evaluated on ``g``; ``True`` means it holds."""
    out: dict[str, bool] = {}
    report = invariant_report(g)  # asserts the sandwich
    out["sandwich"] = True
    full = sdim_f(g, prune=False)
    out["full = reduced LP"] = full[0] == sdim_f_reduced(g) == report.sdim_f
    sr = strong_resolving_graph(g)
    out["bipartite G_SR => sdim_f = sdim"] = (not is_bipartite(sr.graph)) or report.sdim_f == report.sdim
    regular = all(p.is_regular for p in component_profile(sr.graph))
    half_m = Fraction(report.boundary_size, 2)
    out["regular components => |M|/2"] = (not regular) or report.sdim_f == half_m
    if sr.graph.n >= 3 and is_connected(sr.graph) and hamiltonian_cycle(sr.graph) is not None:
        out["Hamiltonian G_SR => |M|/2"] = report.sdim_f == half_m
    weights = full[1]
    out["witness valid"] = sum(weights) == full[0] and all(0 <= w <= 1 for w in weights)
    out["cut vertex face max = 0"] = all(max_weight_on_optimal_face(g, v, report.sdim_f) == 0
                                         for v in cut_vertices(g))
    if g.n <= 12:
        b = k1_corona_bounds(g)
        out["K_1 . H bracket"] = b.contains(_f(corona(F.complete(1), g)[0]))
    partner = F.generate(_PARTNERS[idx % len(_PARTNERS)])
    if g.n * (1 + partner.n) <= 40:
        out["corona nm/2"] = _f(corona(g, partner)[0]) == corona_value(g, partner)
    if g.n * partner.n <= 36:
        value = _f(cartesian(g, partner)[0])
        out["Cartesian bounds"] = cartesian_bounds(g, partner).contains(value)
        out["Cartesian matching bounds"] = cartesian_matching_bounds(g, partner).contains(value)
        lex = _f(lexicographic(g, partner)[0])
        if not has_true_twins(g):
            out["lexicographic bounds"] = lexicographic_bounds(g, partner).contains(lex)
        out["twin-class lower bound"] = twin_class_lower_bound(g, partner) <= lex
    return out


def _disconnected_k1_cases(seed: int, count: int) -> Iterable[tuple[Graph, bool]]:
    rng = random.Random(seed)
    made = 0
    while made < count:
        h = _small_graph(rng, 2, 9, connected=False)
        if len(connected_components(h)) < 2:
            continue
        made += 1
        yield h, k1_corona_bounds(h).contains(_f(corona(F.complete(1), h)[0]))


def _archive(cfg: VerifyConfig, g: Graph, name: str) -> Path:
    cfg.fixture_dir.mkdir(parents=True, exist_ok=True)
    path = cfg.fixture_dir / f"{name}.el"
    write_graph(g, path)
    return path


@_criterion(19, "corpus property suite", "general bounds, product bounds and LP reduction equivalence over the corpus")
def _c19(cfg: VerifyConfig) -> list[Case]:
    graphs = F.corpus(cfg.seed, cfg.random_graphs, cfg.max_n)
    holds: dict[str, int] = {}
    fails: dict[str, list[int]] = {}
    for idx, g in enumerate(graphs):
        try:
            props = _graph_properties(g, idx)
        except AssertionError:
            props = {"sandwich": False}
        for name, ok in props.items():
            holds.setdefault(name, 0)
            if ok:
                holds[name] += 1
            else:
                fails.setdefault(name, []).append(idx)
                _archive(cfg, g, f"corpus{idx}_{name.split()[0].lower()}")
    name = "K_1 . H bracket (disconnected H)"
    holds[name] = 0
    for k, (h, ok) in enumerate(_disconnected_k1_cases(cfg.seed * 1000 + 19, 60)):
        if ok:
            holds[name] += 1
        else:
            fails.setdefault(name, []).append(k)
            _archive(cfg, h, f"disconnected{k}_k1")
    cases = []
    for name in holds:
        bad = fails.get(name, [])
        total = holds[name] + len(bad)
        cases.append(Case(name, f"holds on {total}", f"holds on {holds[name]}"
                          + (f", fails on {bad[:5]}" if bad else "")))
    return cases


def run_suite(cfg: Optional[VerifyConfig] = None, only: Optional[Iterable[int]] = None) -> list[CheckResult]:
    cfg = cfg or VerifyConfig()
    ids = sorted(CRITERIA) if only is None else sorted(set(only))
    results = []
    for cid in ids:
        crit = CRITERIA[cid]
        results.append(CheckResult(cid, crit.title, crit.citation, tuple(crit.run(cfg))))
    return results


def render_results(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        exp, got = r.summary()
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] #{r.check_id:>2} {r.title} | expected: {exp} | computed: {got} | source: {r.citation}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
