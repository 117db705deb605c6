"""The acceptance suite: every check that gates a release, runnable from the
CLI (`parhom selfcheck`) and from pytest.

Checks are deterministic given the seed; each gets its own derived RNG so a
parallel run produces the same report as a serial one.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import corpus
from .automorphisms import (
    automorphisms,
    are_isomorphic,
    find_involution,
    fixed_subgraph,
    involution_free_reduction,
    orbit_preserving_endomorphisms,
)
from .classify import classify
from .gadgets import verify_hardness_gadget
from .gadgetfind import brute_force_gadget_search, find_hardness_gadget
from .graphs import Graph, Path, unique_shortest_path
from .homcount import (
    count_homs,
    count_homs_mod2,
    independent_set_parity,
    z_general_is,
)
from .mosaics import t_walk_partition
from .reduction import verify_reduction
from .walks import walk_count


class CheckFailure(AssertionError):
    pass


@dataclass(frozen=True)
class SelfcheckSizes:
    congruence_pairs: int = 200
    congruence_max_source: int = 6
    congruence_max_target: int = 10
    uniqueness_graphs: int = 100
    uniqueness_orders: int = 5
    uniqueness_max_n: int = 12
    coverage_exhaustive_max: int = 10
    coverage_random: int = 300
    coverage_random_range: tuple[int, int] = (11, 14)
    oracle_random: int = 20
    oracle_max_n: int = 9
    endo_max_n: int = 9
    walk_partition_cases: int = 100
    walk_partition_max_n: int = 12
    walk_partition_max_len: int = 6
    counter_pairs: int = 500
    counter_max_n: int = 5
    z_cases: int = 100
    z_max_n: int = 15


FULL_SIZES = SelfcheckSizes()
QUICK_SIZES = SelfcheckSizes(
    congruence_pairs=20,
    uniqueness_graphs=10,
    uniqueness_max_n=9,
    coverage_exhaustive_max=7,
    coverage_random=10,
    coverage_random_range=(8, 10),
    oracle_random=4,
    oracle_max_n=7,
    endo_max_n=7,
    walk_partition_cases=15,
    counter_pairs=60,
    z_cases=20,
    z_max_n=10,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    seconds: float
    details: str


# -- individual checks ------------------------------------------------------------


def check_fixpoint_congruence(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Exact hom counts into a graph and into the fixed subgraph of one of its
    involutions agree mod 2."""
    for trial in range(sizes.congruence_pairs):
        g = corpus.random_graph(rng, rng.randint(1, sizes.congruence_max_source))
        h = corpus.random_cactus_with_involution(
            rng, rng.randint(2, sizes.congruence_max_target)
        )
        sigma = find_involution(h)
        reduced = fixed_subgraph(h, sigma).graph
        full = count_homs(g, h)
        small = count_homs(g, reduced)
        if full % 2 != small % 2:
            raise CheckFailure(
                f"trial {trial}: |Hom|={full} vs fixed-subgraph |Hom|={small}"
            )
    return f"{sizes.congruence_pairs} random pairs agree mod 2"


def check_reduction_uniqueness(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Involution-free reductions under different tie-breaking orders are
    pairwise isomorphic."""
    for trial in range(sizes.uniqueness_graphs):
        g = corpus.random_cactus(rng, rng.randint(2, sizes.uniqueness_max_n))
        finals = []
        base = rng.random()
        for order in range(sizes.uniqueness_orders):
            sub_rng = random.Random(f"{base}:{order}")
            finals.append(involution_free_reduction(g, rng=sub_rng).final)
        for other in finals[1:]:
            if not are_isomorphic(finals[0], other):
                raise CheckFailure(f"trial {trial}: reduction orders disagree")
    return (
        f"{sizes.uniqueness_graphs} graphs x {sizes.uniqueness_orders} orders, "
        "all final graphs isomorphic"
    )


def check_gadget_coverage(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Every involution-free cactus in range yields a verified hardness gadget."""
    graphs = corpus.involution_free(
        corpus.all_cactus_graphs(sizes.coverage_exhaustive_max, min_n=2)
    )
    lo, hi = sizes.coverage_random_range
    for _ in range(sizes.coverage_random):
        graphs.append(corpus.random_involution_free_cactus(rng, rng.randint(lo, hi)))
    for g in graphs:
        gadget = find_hardness_gadget(g)
        bad = verify_hardness_gadget(g, gadget)
        if bad:
            raise CheckFailure(f"gadget fails verification on {g.edges}: {bad}")
    return f"{len(graphs)} involution-free cactus graphs, all gadgets verified"


def check_gadget_search_oracle(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """The exhaustive bounded search finds the constructive finder's gadget."""
    graphs = [corpus.spider_tree()]
    while len(graphs) < 1 + sizes.oracle_random:
        # involution-free cactus graphs need at least 6 vertices
        g = corpus.random_involution_free_cactus(
            rng, rng.randint(6, sizes.oracle_max_n)
        )
        graphs.append(g)
    for g in graphs:
        constructed = find_hardness_gadget(g)
        found = brute_force_gadget_search(g)
        if not found:
            raise CheckFailure(f"empty search on {g.edges}")
        if constructed not in found:
            raise CheckFailure(
                f"constructive gadget {constructed} missing from the {len(found)} search results"
            )
    return f"{len(graphs)} graphs, constructive output always among search results"


def check_reduction_congruence(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Weighted independent-set parity equals the pinned hom parity on the
    spliced instance, across the source/target matrix."""
    sources = [
        ("K1", Graph(1)),
        ("K2", corpus.path_graph(2)),
        ("P3", corpus.path_graph(3)),
        ("C3", corpus.cycle_graph(3)),
        ("P4", corpus.path_graph(4)),
    ]
    targets = [("spider", corpus.spider_tree()), ("tailed9", corpus.tailed_cycle_9())]
    done = 0
    for hname, h in targets:
        gadget = find_hardness_gadget(h)
        for gname, g in sources:
            report = verify_reduction(g, h, gadget, method="treedec")
            if not report.ok:
                raise CheckFailure(
                    f"({gname},{hname}): lhs={report.lhs} rhs={report.rhs}"
                )
            done += 1
    return f"{done}/10 congruences hold"


def check_orbit_endomorphisms(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Orbit-preserving endomorphisms of involution-free cacti are exactly the
    automorphisms; the 4-cycle shows the hypothesis is needed."""
    graphs = corpus.involution_free(corpus.all_cactus_graphs(sizes.endo_max_n, min_n=1))
    for g in graphs:
        endos = set(orbit_preserving_endomorphisms(g, cap=sizes.endo_max_n))
        autos = set(automorphisms(g, cap=max(16, sizes.endo_max_n)))
        if endos != autos:
            raise CheckFailure(f"mismatch on {g.edges}")
    c4 = corpus.cycle_graph(4)
    endos = set(orbit_preserving_endomorphisms(c4))
    autos = set(automorphisms(c4))
    if not endos > autos:
        raise CheckFailure("4-cycle should have strictly more orbit-preserving endomorphisms")
    return f"{len(graphs)} involution-free graphs match; 4-cycle strictly exceeds"


def check_classification_fixtures(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Frozen verdicts for the bristled square-chain and tailed-cycle fixtures."""
    cases = [
        (corpus.square_chain("a"), "ParityPComplete"),
        (corpus.square_chain("b"), "PolynomialTime"),
        (corpus.square_chain("c"), "ParityPComplete"),
        (corpus.tailed_cycle_9(), "ParityPComplete"),
        (corpus.tailed_cycle_12(), "PolynomialTime"),
    ]
    for idx, (g, want) in enumerate(cases):
        got = classify(g).verdict
        if got != want:
            raise CheckFailure(f"fixture {idx}: got {got}, want {want}")
    return "5/5 fixture verdicts match"


def check_walk_partition(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """T-walk families tile all (length+2)-walks along unique shortest paths."""
    done = 0
    attempts = 0
    while done < sizes.walk_partition_cases:
        attempts += 1
        if attempts > 200 * sizes.walk_partition_cases:
            raise CheckFailure("could not sample enough unique shortest paths")
        g = corpus.random_cactus(rng, rng.randint(2, sizes.walk_partition_max_n))
        u = rng.randrange(g.n)
        v = rng.randrange(g.n)
        if u == v:
            continue
        path = unique_shortest_path(g, u, v)
        if not isinstance(path, Path) or path.length > sizes.walk_partition_max_len:
            continue
        part = t_walk_partition(g, path)
        expect = walk_count(g, u, v, path.length + 2)
        if part.total != expect:
            raise CheckFailure(
                f"partition has {part.total} walks, exact count is {expect} "
                f"on {g.edges} path {path.vertices}"
            )
        done += 1
    return f"{done} partitions tile exactly"


def check_counter_cross_validation(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """Brute-force and tree-decomposition counters agree, pinned and unpinned."""
    n = sizes.counter_max_n
    for trial in range(sizes.counter_pairs):
        g = corpus.random_graph(rng, rng.randint(0, n))
        h = corpus.random_graph(rng, rng.randint(1, n))
        pin = {
            v: frozenset(rng.sample(range(h.n), rng.randint(0, h.n)))
            for v in range(g.n)
            if rng.random() < 0.5
        }
        for p in (None, pin):
            brute = count_homs(g, h, p, method="brute")
            dp = count_homs(g, h, p, method="treedec")
            if brute != dp:
                raise CheckFailure(f"trial {trial}: {brute} != {dp} (pin={p})")
            if count_homs_mod2(g, h, p, method="treedec") != brute % 2:
                raise CheckFailure(f"trial {trial}: parity table disagrees")
    return f"{sizes.counter_pairs} pairs agree exactly, pinned and unpinned"


def check_generalized_is_parity(rng: random.Random, sizes: SelfcheckSizes) -> str:
    """The enumerated weighted sum matches the independent-set parity for odd
    weights."""
    for trial in range(sizes.z_cases):
        g = corpus.random_graph(rng, rng.randint(0, sizes.z_max_n))
        lam = rng.choice((1, 3, 5))
        mu = rng.choice((1, 3, 5))
        lhs = z_general_is(g, lam, mu, method="enumerate")
        rhs = independent_set_parity(g)
        if lhs != rhs:
            raise CheckFailure(f"trial {trial}: Z={lhs} parity={rhs} on {g.edges}")
    return f"{sizes.z_cases} cases agree"


CHECKS = [
    ("fixpoint_congruence", check_fixpoint_congruence),
    ("reduction_uniqueness", check_reduction_uniqueness),
    ("gadget_coverage", check_gadget_coverage),
    ("gadget_search_oracle", check_gadget_search_oracle),
    ("reduction_congruence", check_reduction_congruence),
    ("orbit_endomorphisms", check_orbit_endomorphisms),
    ("classification_fixtures", check_classification_fixtures),
    ("walk_partition", check_walk_partition),
    ("counter_cross_validation", check_counter_cross_validation),
    ("generalized_is_parity", check_generalized_is_parity),
]

CHECK_INDEX = {name: fn for name, fn in CHECKS}


def run_check(name: str, seed: int, sizes: SelfcheckSizes) -> CheckResult:
    fn = CHECK_INDEX[name]
    rng = random.Random(f"{seed}:{name}")
    start = time.perf_counter()
    try:
        details = fn(rng, sizes)
        ok = True
    except CheckFailure as exc:
        details = str(exc)
        ok = False
    seconds = time.perf_counter() - start
    return CheckResult(name=name, ok=ok, seconds=seconds, details=details)


def run_selfcheck(
    seed: int = 0,
    sizes: SelfcheckSizes | None = None,
    jobs: int = 1,
    names: list[str] | None = None,
) -> list[CheckResult]:
    sizes = FULL_SIZES if sizes is None else sizes
    names = [n for n, _ in CHECKS] if names is None else names
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_check, n, seed, sizes) for n in names]
            return [f.result() for f in futures]
    return [run_check(n, seed, sizes) for n in names]


def format_report(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "pass" if r.ok else "FAIL"
        lines.append(f"{r.name}: {status} ({r.seconds:.2f}s) {r.details}")
    passed = sum(r.ok for r in results)
    lines.append(f"summary: {passed}/{len(results)} checks passed")
    return "\n".join(lines)
