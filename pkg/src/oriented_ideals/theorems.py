"""Executable checks for the structural results on symbolic powers.

Each check builds a concrete graph family instance, runs the exact
machinery, and compares the computed outcome against the predicted one,
returning a CheckResult verdict.  Instances that violate a check's
hypotheses are skipped with a notice rather than failed.

The families covered:

  * full cover: with all weights >= 2 (and no isolated vertices) the full
    vertex set is a strong cover exactly when there is no source, and
    then ordinary and symbolic powers agree;
  * naturally oriented cycles with all weights >= 2: powers agree;
  * brooms (a handle x -> y -> z in front of a tree rooted at z): powers
    agree, and the strong covers split into two families with explicitly
    predictable intersections;
  * oriented lines: a weight drop from >= 2 to 1 in the interior forces a
    cubic witness, powers agree for every s exactly when the interior
    weights >= 2 form a suffix, and in the single-break case the maximal
    strong covers and their component intersections have a closed form.
"""

from __future__ import annotations

import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .covers import maximal_strong_covers
from .graphs import (
    WeightedOrientedGraph,
    forest_broom,
    oriented_cycle,
    oriented_line,
)
from .ideals import (
    decomposition_intersection,
    edge_ideal,
    irreducible_component,
    irreducible_decomposition,
)
from .monomials import Monomial, MonomialIdeal, intersect_all
from .symbolic import compare_powers, q_sub_p, symbolic_power, symbolic_power_oracle


@dataclass
class CheckResult:
    """Outcome of one theorem check on one instance."""

    check: str
    instance: str
    hypotheses_ok: bool
    prediction: str
    computed: str
    passed: bool
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.hypotheses_ok:
            return "skip"
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "hypotheses_ok": self.hypotheses_ok,
            "prediction": self.prediction,
            "computed": self.computed,
            "pass": self.passed,
            "status": self.status,
            "details": self.details,
        }


def _skip(check: str, instance: str, notice: str) -> CheckResult:
    return CheckResult(
        check=check,
        instance=instance,
        hypotheses_ok=False,
        prediction="",
        computed=notice,
        passed=False,
        details={"notice": notice},
    )


def check_full_cover_equality(
    g: WeightedOrientedGraph, s_max: int = 3, cap: int | None = None
) -> CheckResult:
    """All weights >= 2: the full vertex set is strong iff there is no source,
    and when it is strong the powers agree.

    Isolated vertices are outside the statement (they are neither sources
    nor coverable into a strong full cover), so they skip the check.
    """
    name = "full_cover_equality"
    instance = f"graph with {len(g.vertices)} vertices, {len(g.edges)} edges"
    if any(w < 2 for w in g.weights.values()):
        return _skip(name, instance, "needs every weight >= 2")
    if any(g.is_isolated(v) for v in g.vertices):
        return _skip(name, instance, "isolated vertices are outside the statement")

    from .covers import is_strong_cover

    full_strong = is_strong_cover(g, g.vertices)
    no_sources = not g.sources()
    equivalence_ok = full_strong == no_sources

    details: dict = {
        "full_cover_strong": full_strong,
        "sources": sorted(g.sources()),
    }
    prediction = "full cover strong iff no sources"
    if full_strong:
        report = compare_powers(g, s_max, cap)
        details["comparison"] = report.to_json()
        prediction += f"; powers equal up to s={s_max}"
        passed = equivalence_ok and report.all_equal
        computed = (
            f"strong={full_strong}, sources={len(g.sources())}, "
            f"first_inequality={report.first_inequality}"
        )
    else:
        passed = equivalence_ok
        computed = f"strong={full_strong}, sources={len(g.sources())}"
    return CheckResult(
        check=name,
        instance=instance,
        hypotheses_ok=True,
        prediction=prediction,
        computed=computed,
        passed=passed,
        details=details,
    )


def check_cycle_equality(weights: Sequence[int], s_max: int = 3) -> CheckResult:
    """Naturally oriented cycle, all weights >= 2: powers agree up to s_max."""
    name = "cycle_equality"
    weights = tuple(weights)
    instance = f"cycle weights={weights}"
    if len(weights) < 3:
        return _skip(name, instance, "a cycle needs at least three vertices")
    if any(w < 2 for w in weights):
        return _skip(name, instance, "needs every weight >= 2")
    g = oriented_cycle(len(weights), weights)
    report = compare_powers(g, s_max)
    return CheckResult(
        check=name,
        instance=instance,
        hypotheses_ok=True,
        prediction=f"powers equal up to s={s_max}",
        computed=f"first_inequality={report.first_inequality}",
        passed=report.all_equal,
        details={"comparison": report.to_json()},
    )


def check_broom_equality(
    tree: WeightedOrientedGraph,
    root: str,
    w_y: int,
    w_z: int,
    s_max: int = 3,
    *,
    w_x: int = 2,
) -> CheckResult:
    """Handle x -> y -> root in front of a tree: powers agree, and the strong
    covers split into the family through x (with root, without y) and the
    family through y (without x), with closed-form intersections:

        through x:  (x, root^w) + tree edge ideal
        through y:  (y^w(y), y*root^w) + tree edge ideal
    """
    name = "broom_equality"
    instance = (
        f"broom w_y={w_y} w_z={w_z} tree_vertices={len(tree.vertices)} root={root!r}"
    )
    try:
        broom = forest_broom(w_y, w_z, tree, root, w_x=w_x)
    except ValueError as exc:
        return _skip(name, instance, str(exc))

    x, y = broom.vertices[0], broom.vertices[1]
    ambient = broom.vertices
    tree_part = broom.induced_subgraph(tree.vertices)
    tree_ideal = edge_ideal(tree_part).with_ambient(ambient)

    from .covers import enumerate_strong_covers

    strong = enumerate_strong_covers(broom)
    through_x = []
    through_y = []
    stray = []
    for c in strong:
        if x in c and y not in c and root in c:
            through_x.append(c)
        elif y in c and x not in c:
            through_y.append(c)
        else:
            stray.append(c)

    comps = {c.cover: c for c in (irreducible_component(broom, cv) for cv in strong)}
    computed_1 = intersect_all([comps[c].ideal for c in through_x], ambient=ambient)
    computed_2 = intersect_all([comps[c].ideal for c in through_y], ambient=ambient)

    w_root = broom.weight(root)
    predicted_1 = MonomialIdeal(
        ambient, [Monomial({x: 1}), Monomial({root: w_root})]
    ) + tree_ideal
    predicted_2 = MonomialIdeal(
        ambient,
        [Monomial({y: broom.weight(y)}), Monomial({y: 1, root: w_root})],
    ) + tree_ideal

    expected_maximal = {
        frozenset(broom.vertices) - {y},
        frozenset(broom.vertices) - {x},
    }
    maximal = set(maximal_strong_covers(broom))

    report = compare_powers(broom, s_max)
    passed = (
        report.all_equal
        and not stray
        and computed_1 == predicted_1
        and computed_2 == predicted_2
        and maximal == expected_maximal
    )
    return CheckResult(
        check=name,
        instance=instance,
        hypotheses_ok=True,
        prediction=(
            f"powers equal up to s={s_max}; covers split through x or y; "
            "family intersections have the closed form"
        ),
        computed=(
            f"first_inequality={report.first_inequality}, stray_covers={len(stray)}, "
            f"family_1={'ok' if computed_1 == predicted_1 else 'mismatch'}, "
            f"family_2={'ok' if computed_2 == predicted_2 else 'mismatch'}, "
            f"maximal={'ok' if maximal == expected_maximal else 'mismatch'}"
        ),
        passed=passed,
        details={
            "comparison": report.to_json(),
            "family_1_ideal": computed_1.generator_strings(),
            "family_2_ideal": computed_2.generator_strings(),
            "stray_covers": [sorted(c) for c in stray],
        },
    )


def check_line_cubic_witness(
    weights: Sequence[int], i: int, cap: int | None = None
) -> CheckResult:
    """Oriented line with w(x_i) >= 2 and w(x_(i+1)) = 1 for an interior i
    (1 < i < n-1): the monomial

        x_(i-1) * x_i^w(x_i) * x_(i+1)^2 * x_(i+2)^w(x_(i+2))

    lies in the third symbolic power but not in I^3.
    """
    name = "line_cubic_witness"
    weights = tuple(weights)
    n = len(weights)
    instance = f"line weights={weights}, i={i}"
    if not 1 < i < n - 1:
        return _skip(name, instance, f"i={i} is not interior (need 1 < i < {n - 1})")
    if weights[i - 1] < 2:
        return _skip(name, instance, f"w(x{i})={weights[i - 1]} but needs >= 2")
    if weights[i] != 1:
        return _skip(name, instance, f"w(x{i + 1})={weights[i]} but needs exactly 1")

    g = oriented_line(n, weights)
    f = Monomial(
        {
            f"x{i - 1}": 1,
            f"x{i}": weights[i - 1],
            f"x{i + 1}": 2,
            f"x{i + 2}": weights[i + 1],
        }
    )
    cube = edge_ideal(g) ** 3
    third_symbolic = symbolic_power(g, 3, cap=cap)
    in_symbolic = third_symbolic.contains(f)
    in_cube = cube.contains(f)
    report = compare_powers(g, 3, cap)
    unequal_at_3 = not report.per_s[2].equal
    passed = in_symbolic and not in_cube and unequal_at_3
    return CheckResult(
        check=name,
        instance=instance,
        hypotheses_ok=True,
        prediction="witness in third symbolic power, not in I^3; powers differ at s=3",
        computed=(
            f"witness={f.format(g.vertices)}, in_symbolic={in_symbolic}, "
            f"in_cube={in_cube}, unequal_at_3={unequal_at_3}"
        ),
        passed=passed,
        details={"witness": f.format(g.vertices), "comparison": report.to_json()},
    )


def line_equality_condition(weights: Sequence[int]) -> bool:
    """True iff the interior weights that are >= 2 form a suffix of the interior.

    Equivalently: whenever w(x_j) >= 2 for some 1 < j < n, every x_i with
    j <= i <= n-1 also has weight >= 2.  The endpoint weights are free.
    """
    weights = tuple(weights)
    n = len(weights)
    for j in range(2, n):  # interior positions, 1-based
        if weights[j - 1] >= 2:
            return all(weights[i - 1] >= 2 for i in range(j, n))
    return True


def check_line_characterization(weights: Sequence[int]) -> CheckResult:
    """Oriented line: powers agree for every s exactly when the suffix
    condition on interior weights holds.  Tested computationally as
    equality at s = 1, 2, 3 in the positive case and inequality at s = 3
    in the negative case (where the cubic witness lives).
    """
    name = "line_characterization"
    weights = tuple(weights)
    instance = f"line weights={weights}"
    if len(weights) < 2:
        return _skip(name, instance, "a line needs at least two vertices")
    g = oriented_line(len(weights), weights)
    condition = line_equality_condition(weights)
    report = compare_powers(g, 3)
    if condition:
        passed = report.all_equal
        prediction = "equal at s=1,2,3"
    else:
        passed = not report.per_s[2].equal
        prediction = "unequal at s=3"
    return CheckResult(
        check=name,
        instance=instance,
        hypotheses_ok=True,
        prediction=f"condition={condition}: {prediction}",
        computed=f"first_inequality={report.first_inequality}",
        passed=passed,
        details={"condition": condition, "comparison": report.to_json()},
    )


def _line_break_index(weights: Sequence[int]) -> int | None:
    """The k with w(x_i)=1 for i<k and w(x_i)>=2 for k<=i<=n-1, if any."""
    n = len(weights)
    interior = [i for i in range(2, n) if weights[i - 1] >= 2]
    if not interior:
        return None
    k = interior[0]
    if all(weights[i - 1] == 1 for i in range(1, k)) and all(
        weights[i - 1] >= 2 for i in range(k, n)
    ):
        return k
    return None


def check_line_cover_families(weights: Sequence[int]) -> CheckResult:
    """Single-break line (weights 1 before x_k, >= 2 from x_k through x_(n-1),
    with 4 < k < n): the maximal strong covers fall into three families by
    their pattern on {x_(k-1), x_k, x_(k+1)}, each family is a minimal cover
    of a prefix line joined to a fixed tail, and the intersection of the
    components under each maximal cover is the prefix cover's variables
    plus an explicit tail ideal.
    """
    name = "line_cover_families"
    weights = tuple(weights)
    n = len(weights)
    instance = f"line weights={weights}"
    k = _line_break_index(weights)
    if k is None:
        return _skip(name, instance, "weights do not have a single break index")
    if not 4 < k < n:
        return _skip(name, instance, f"break index k={k} needs 4 < k < n={n}")

    g = oriented_line(n, weights)
    vs = g.vertices  # vs[i-1] is x_i
    w = {i: weights[i - 1] for i in range(1, n + 1)}

    def var(i: int) -> str:
        return vs[i - 1]

    def prefix_line(m: int) -> WeightedOrientedGraph:
        return g.induced_subgraph(vs[:m])

    from .covers import minimal_vertex_covers

    fixed = {
        "alpha": frozenset({var(k - 1)} | {var(i) for i in range(k + 1, n + 1)}),
        "beta": frozenset({var(k - 2)} | {var(i) for i in range(k, n + 1)}),
        "gamma": frozenset(
            {var(k - 3), var(k - 1), var(k)} | {var(i) for i in range(k + 2, n + 1)}
        ),
    }
    prefix_len = {"alpha": k - 2, "beta": k - 3, "gamma": k - 4}
    predicted_families = {
        fam: {
            mvc | fixed[fam]
            for mvc in minimal_vertex_covers(prefix_line(prefix_len[fam]))
        }
        for fam in fixed
    }

    def tail_edges(start: int) -> list[Monomial]:
        return [
            Monomial({var(t): 1, var(t + 1): w[t + 1]}) for t in range(start, n)
        ]

    tails = {
        "alpha": [Monomial({var(k - 1): 1}), Monomial({var(k + 1): w[k + 1]})]
        + tail_edges(k + 1),
        "beta": [Monomial({var(k - 2): 1}), Monomial({var(k): w[k]})]
        + tail_edges(k),
        "gamma": [
            Monomial({var(k - 3): 1}),
            Monomial({var(k - 1): 1}),
            Monomial({var(k): 1}),
        ]
        + ([Monomial({var(k + 2): w[k + 2]})] if k + 2 <= n else [])
        + tail_edges(k + 2),
    }

    def classify(c: frozenset[str]) -> str | None:
        has = lambda i: var(i) in c
        if not has(k):
            return "alpha" if has(k - 1) and has(k + 1) else None
        if has(k + 1) and not has(k - 1):
            return "beta"
        if has(k - 1) and not has(k + 1):
            return "gamma"
        return None

    computed_families: dict[str, set[frozenset[str]]] = {
        "alpha": set(), "beta": set(), "gamma": set()
    }
    unclassified = []
    maximal = maximal_strong_covers(g)
    for c in maximal:
        fam = classify(c)
        if fam is None:
            unclassified.append(c)
        else:
            computed_families[fam].add(c)

    families_ok = not unclassified and all(
        computed_families[fam] == predicted_families[fam] for fam in fixed
    )

    comps = irreducible_decomposition(g)
    ideal_mismatches = []
    for fam in fixed:
        prefix_vars = set(vs[: prefix_len[fam]])
        for c in computed_families[fam]:
            predicted = MonomialIdeal(
                vs,
                [Monomial({v: 1}) for v in c & prefix_vars] + tails[fam],
            )
            computed = q_sub_p(comps, c)
            if computed != predicted:
                ideal_mismatches.append(
                    {
                        "cover": sorted(c),
                        "family": fam,
                        "computed": computed.generator_strings(),
                        "predicted": predicted.generator_strings(),
                    }
                )

    passed = families_ok and not ideal_mismatches
    return CheckResult(
        check=name,
        instance=instance,
        hypotheses_ok=True,
        prediction=(
            f"maximal strong covers split into the three families at k={k} "
            "and their component intersections match the tail ideals"
        ),
        computed=(
            f"families={'ok' if families_ok else 'mismatch'}, "
            f"ideal_mismatches={len(ideal_mismatches)}"
        ),
        passed=passed,
        details={
            "k": k,
            "maximal_covers": [sorted(c) for c in maximal],
            "families": {
                fam: sorted(sorted(c) for c in computed_families[fam])
                for fam in fixed
            },
            "unclassified": [sorted(c) for c in unclassified],
            "ideal_mismatches": ideal_mismatches,
        },
    )


def random_graph(
    rng: random.Random,
    *,
    n_min: int = 2,
    n_max: int = 7,
    edge_prob: float = 0.5,
    weight_min: int = 1,
    weight_max: int = 3,
    allow_isolated: bool = True,
) -> WeightedOrientedGraph:
    """A random weighted oriented graph on x1..xn, n drawn from [n_min, n_max].

    Each vertex pair gets an edge with the given probability and a random
    orientation; weights are uniform in [weight_min, weight_max].
    """
    while True:
        n = rng.randint(n_min, n_max)
        vs = [f"x{i}" for i in range(1, n + 1)]
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < edge_prob:
                    if rng.random() < 0.5:
                        edges.append((vs[i], vs[j]))
                    else:
                        edges.append((vs[j], vs[i]))
        weights = {v: rng.randint(weight_min, weight_max) for v in vs}
        g = WeightedOrientedGraph(vs, edges, weights)
        if allow_isolated or all(not g.is_isolated(v) for v in vs):
            return g


@dataclass
class RegressionSummary:
    """Result of a randomized sweep of the module-level identities."""

    seed: int
    trials: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "pass": self.passed,
            "failures": self.failures,
        }


def random_regression(
    seed: int,
    trials: int,
    *,
    s_max: int = 3,
    n_max: int = 7,
    weight_max: int = 3,
    cap: int | None = None,
) -> RegressionSummary:
    """Random graphs through the standing identities: the decomposition
    intersection recovers the edge ideal, the two symbolic routes agree,
    and every ordinary power sits inside its symbolic power.

    Any counterexample is recorded with the full graph for reproduction.
    """
    rng = random.Random(seed)
    summary = RegressionSummary(seed=seed, trials=trials)
    for _ in range(trials):
        g = random_graph(rng, n_max=n_max, weight_max=weight_max)
        ideal = edge_ideal(g)
        comps = irreducible_decomposition(g, cap)
        if decomposition_intersection(comps, g) != ideal:
            summary.failures.append(
                {"graph": g.to_json(), "problem": "decomposition identity"}
            )
            continue
        ordinary = ideal
        for s in range(1, s_max + 1):
            if s > 1:
                ordinary = ordinary * ideal
            symbolic = symbolic_power(g, s, cap=cap)
            if symbolic != symbolic_power_oracle(g, s, cap):
                summary.failures.append(
                    {"graph": g.to_json(), "problem": "symbolic routes differ", "s": s}
                )
                break
            if not symbolic.contains_ideal(ordinary):
                summary.failures.append(
                    {
                        "graph": g.to_json(),
                        "problem": "ordinary power not inside symbolic power",
                        "s": s,
                    }
                )
                break
    return summary
