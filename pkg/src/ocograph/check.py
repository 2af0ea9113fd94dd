"""Cross-validation runner: every fast routine against its brute-force oracle.

Each property draws deterministic random inputs from ``random.Random(seed)``
and counts mismatches.  The functions under test are looked up in a
:class:`Toolkit`, which lets tests swap in a deliberately broken one.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, replace

from . import algorithms, oracle, recognition
from .cotree import (
    CoExpr,
    canonicalize,
    evaluate,
    is_canonical,
    random_canonical,
    relabel_tree,
    shuffle_unions,
)
from .digraph import (
    check_witness,
    disjoint_union,
    induced_subdigraph,
    is_acyclic,
    is_oriented,
    is_transitive,
    order_composition,
    random_digraph,
    random_oriented,
    relabel,
    underlying,
)

__all__ = ["Toolkit", "PropertyResult", "PROPERTIES", "run_check", "format_table"]


@dataclass(frozen=True)
class Toolkit:
    chromatic_number: Callable = algorithms.chromatic_number
    label_coloring: Callable = algorithms.label_coloring
    longest_path_length: Callable = algorithms.longest_path_length
    undirected_chromatic_and_clique: Callable = algorithms.undirected_chromatic_and_clique
    hom_to_transitive_tournament: Callable = algorithms.hom_to_transitive_tournament
    cotree_isomorphic: Callable = algorithms.cotree_isomorphic
    verify_oriented_coloring: Callable = algorithms.verify_oriented_coloring
    recognize: Callable = recognition.recognize
    is_oriented_cograph: Callable = recognition.is_oriented_cograph


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if not self.first_failure:
                self.first_failure = detail()


@dataclass
class _Context:
    tools: Toolkit
    rng: random.Random
    n_max: int
    cases: int
    budget: oracle.OracleBudget

    def random_trees(self) -> Iterator[CoExpr]:
        cap = min(self.n_max, self.budget.max_vertices)
        for _ in range(self.cases):
            n = self.rng.randint(1, cap)
            yield random_canonical(n, self.rng.randrange(2**32))


def _coloring_oracle(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        g = evaluate(t)
        fast, slow = ctx.tools.chromatic_number(t), oracle.brute_chromatic(g, ctx.budget)
        res.record(fast == slow, lambda: f"{t}: chromatic_number={fast}, oracle={slow}")


def _label_validity(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        coloring, state = ctx.tools.label_coloring(t)
        g = evaluate(t)
        ok = (
            ctx.tools.verify_oriented_coloring(g, coloring)
            and coloring.k == state.out[0] == ctx.tools.chromatic_number(t)
        )
        res.record(ok, lambda: f"{t}: label coloring {coloring.colors} invalid or not optimal")


def _corollary_chain(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        chi_o = ctx.tools.chromatic_number(t)
        ell = ctx.tools.longest_path_length(t)
        chi, omega = ctx.tools.undirected_chromatic_and_clique(t)
        res.record(
            chi_o == ell + 1 == chi == omega,
            lambda: f"{t}: chi_o={chi_o} l={ell} chi={chi} omega={omega}",
        )


def _longest_path_oracle(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        fast = ctx.tools.longest_path_length(t)
        slow = oracle.brute_longest_path(evaluate(t), ctx.budget)
        res.record(fast == slow, lambda: f"{t}: longest_path_length={fast}, oracle={slow}")


def _canonical_form(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        g = evaluate(t)
        c = canonicalize(t)
        ok = is_canonical(c) and evaluate(c) == g and canonicalize(c) == c
        res.record(ok, lambda: f"{t}: canonicalize changed the digraph or is not idempotent")


def _recognition_round_trip(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        n = evaluate(t).n
        perm = list(range(n))
        ctx.rng.shuffle(perm)
        g = evaluate(relabel_tree(t, perm))
        out = ctx.tools.recognize(g)
        ok = out.tree is not None and evaluate(out.tree) == g and is_canonical(out.tree)
        res.record(ok, lambda: f"{g}: recognize did not reproduce the digraph")


def _recognition_agreement(ctx: _Context, res: PropertyResult) -> None:
    cap = min(ctx.n_max, 6)
    for _ in range(ctx.cases):
        n = ctx.rng.randint(1, cap)
        if ctx.rng.random() < 0.5:
            g = random_digraph(n, ctx.rng, ctx.rng.choice((0.2, 0.4, 0.6)))
        else:
            t = random_canonical(n, ctx.rng.randrange(2**32))
            g = evaluate(t)
        out = ctx.tools.recognize(g)
        member = ctx.tools.is_oriented_cograph(g)
        if out.tree is not None:
            ok = member and evaluate(out.tree) == g and is_transitive(g) and is_oriented(g)
        else:
            ok = not member and check_witness(g, out.witness)
        res.record(ok, lambda: f"{g}: recognize={out}, pattern test={member}")


def _monotonicity(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        g = evaluate(t)
        s = [v for v in range(g.n) if ctx.rng.random() < 0.6]
        if not s:
            continue
        sub = oracle.brute_chromatic(induced_subdigraph(g, s), ctx.budget)
        whole = ctx.tools.chromatic_number(t)
        res.record(sub <= whole, lambda: f"{t} on {s}: {sub} > {whole}")


def _composition_rules(ctx: _Context, res: PropertyResult) -> None:
    cap = min(ctx.n_max, 4, ctx.budget.max_vertices // 2)
    if cap < 1:
        return
    for _ in range(ctx.cases):
        g1 = random_oriented(ctx.rng.randint(1, cap), ctx.rng)
        g2 = random_oriented(ctx.rng.randint(1, cap), ctx.rng)
        a, b = oracle.brute_chromatic(g1, ctx.budget), oracle.brute_chromatic(g2, ctx.budget)
        o = oracle.brute_chromatic(order_composition(g1, g2), ctx.budget)
        u = oracle.brute_chromatic(disjoint_union(g1, g2), ctx.budget)
        res.record(o == a + b and u >= max(a, b), lambda: f"{g1}, {g2}: {a},{b} order={o} union={u}")


def _hom_duality(ctx: _Context, res: PropertyResult) -> None:
    cap = min(ctx.n_max, 5)
    for _ in range(ctx.cases):
        n = ctx.rng.randint(1, cap)
        g = random_oriented(n, ctx.rng, ctx.rng.choice((0.3, 0.5, 0.8)))
        for k in range(1, n + 1):
            h = ctx.tools.hom_to_transitive_tournament(g, k)
            walk = oracle.brute_path_hom_exists(g, k, ctx.budget)
            sound = h is None or all(1 <= h[v] <= k for v in range(n)) and all(
                h[u] < h[v] for u, v in g.arcs
            )
            res.record(
                sound and (h is not None) == (not walk),
                lambda: f"{g}, k={k}: hom={h}, path walk={walk}",
            )


def _hom_threshold(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        g = evaluate(t)
        k = ctx.tools.chromatic_number(t)
        ok = (
            ctx.tools.hom_to_transitive_tournament(g, k) is not None
            and ctx.tools.hom_to_transitive_tournament(g, k - 1) is None
        )
        res.record(ok, lambda: f"{t}: homomorphism threshold is not chi_o={k}")


def _isomorphism_oracle(ctx: _Context, res: PropertyResult) -> None:
    cap = min(ctx.n_max, 7, ctx.budget.max_vertices)
    for _ in range(ctx.cases):
        n = ctx.rng.randint(1, cap)
        t1 = random_canonical(n, ctx.rng.randrange(2**32))
        mode = ctx.rng.random()
        if mode < 0.4:
            perm = list(range(n))
            ctx.rng.shuffle(perm)
            t2 = relabel_tree(shuffle_unions(t1, ctx.rng), perm)
        else:
            t2 = random_canonical(n, ctx.rng.randrange(2**32))
        fast = ctx.tools.cotree_isomorphic(t1, t2)
        slow = oracle.brute_isomorphic(evaluate(t1), evaluate(t2), ctx.budget)
        res.record(fast == slow, lambda: f"{t1} vs {t2}: fast={fast}, oracle={slow}")


def _acyclic_accepted(ctx: _Context, res: PropertyResult) -> None:
    for t in ctx.random_trees():
        g = evaluate(t)
        res.record(is_acyclic(g), lambda: f"{t}: accepted digraph has a cycle")


def _underlying_commutes(ctx: _Context, res: PropertyResult) -> None:
    cap = min(ctx.n_max, 6)
    for _ in range(ctx.cases):
        g = random_digraph(ctx.rng.randint(1, cap), ctx.rng)
        s = [v for v in range(g.n) if ctx.rng.random() < 0.6]
        ok = underlying(induced_subdigraph(g, s)) == underlying(g).induced(s)
        perm = list(range(g.n))
        ctx.rng.shuffle(perm)
        ok = ok and oracle.brute_isomorphic(g, relabel(g, perm), ctx.budget)
        res.record(ok, lambda: f"{g} on {s}: underlying/induced do not commute")


PROPERTIES: dict[str, Callable[[_Context, PropertyResult], None]] = {
    "coloring-vs-oracle": _coloring_oracle,
    "label-coloring-valid": _label_validity,
    "chi-ell-omega-chain": _corollary_chain,
    "longest-path-vs-oracle": _longest_path_oracle,
    "canonicalize": _canonical_form,
    "recognize-round-trip": _recognition_round_trip,
    "recognize-vs-patterns": _recognition_agreement,
    "induced-monotonicity": _monotonicity,
    "composition-rules": _composition_rules,
    "hom-path-duality": _hom_duality,
    "hom-threshold": _hom_threshold,
    "isomorphism-vs-oracle": _isomorphism_oracle,
    "accepted-acyclic": _acyclic_accepted,
    "underlying-induced": _underlying_commutes,
}


def run_check(
    n_max: int = 8,
    seeds: tuple[int, ...] = (1,),
    budget: oracle.OracleBudget = oracle.DEFAULT_BUDGET,
    cases: int = 100,
    tools: Toolkit | None = None,
    only: list[str] | None = None,
) -> list[PropertyResult]:
    """Run every property for every seed; results are merged per property."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    tools = tools or Toolkit()
    results = []
    for name, prop in PROPERTIES.items():
        if only and name not in only:
            continue
        res = PropertyResult(name)
        for seed in seeds:
            rng = random.Random(f"{name}:{seed}")
            try:
                prop(_Context(tools, rng, n_max, cases, budget), res)
            except Exception as exc:  # a crash counts as a failure of that property
                res.failures += 1
                res.first_failure = res.first_failure or f"{type(exc).__name__}: {exc}"
        results.append(res)
    return results


def format_table(results: list[PropertyResult]) -> str:
    width = max(len(r.name) for r in results) if results else 8
    lines = [f"{'property':<{width}}  {'cases':>6}  {'fail':>5}  status"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {r.cases:>6}  {r.failures:>5}  {status}")
        if not r.passed:
            lines.append(f"{'':<{width}}  first failure: {r.first_failure}")
    return "\n".join(lines)


def with_overrides(**functions: Callable) -> Toolkit:
    """A :class:`Toolkit` with some functions replaced (fault injection)."""
    return replace(Toolkit(), **functions)
