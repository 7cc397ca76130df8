"""
Cross-oracle validation: every identity in the library is recomputed at
desk scale through an independent route and compared.  The CLI `check`
subcommand runs the whole battery and reports one PASS/FAIL line per
invariant; the acceptance tests reuse the same functions.
"""
from __future__ import annotations

import itertools
import math
import random

import numpy as np

from ._backend import get_backend
from .basis import BASIS_TIER_0, BASIS_TIER_1, avoids_basis, compute_basis
from .parker import descent_histogram, descents, parker_to_perm, perm_to_parker
from .perm import minus_combine, minus_decompose, plus_combine, plus_decompose, separated_pairs
from .series import RationalSeries, psi_tower, t1_closed_form, t_coefficient
from .tables import catalan_number, table_bruteforce, table_recurrence
from .tiers import (
    max_tier,
    max_tier_floor_sum,
    max_tier_recursive,
    max_tier_witness,
    tier,
    tier_of_minus_chain,
)

WITNESS_15 = (8, 12, 7, 14, 6, 11, 5, 15, 4, 10, 3, 13, 2, 9, 1)


def check_sim_equals_pairs(max_n: int) -> tuple[bool, str]:
    """Machine pass count agrees with the separated-pair count on all of S_n."""
    bound = min(max_n, 9)
    kernels = get_backend()
    for n in range(1, bound + 1):
        if not kernels.sim_agrees_with_pairs(n):
            return False, f"disagreement inside S_{n}"
    return True, f"exhaustive through n={bound}"


def check_tables_agree(max_n: int) -> tuple[bool, str]:
    """Brute force, recurrence, and series extraction give the same triangle."""
    bound = min(max_n, 10)
    brute = table_bruteforce(bound)
    rec, _ = table_recurrence(12)
    for n in range(1, bound + 1):
        for t in range(max_tier(n) + 1):
            if brute.entry(n, t) != rec.entry(n, t):
                return False, f"brute vs recurrence at ({n}, {t})"
    for n in range(1, 13):
        for t in range(min(max_tier(n), 4) + 1):
            if rec.entry(n, t) != t_coefficient(n, t):
                return False, f"recurrence vs series at ({n}, {t})"
    return True, f"brute n<={bound}; series n<=12 t<=4"


def check_row_sums_and_catalan(max_n: int) -> tuple[bool, str]:
    """Rows of the triangle sum to n! and the t=0 column is Catalan."""
    bound = min(max_n, 10)
    table = table_bruteforce(bound)
    for n in range(1, bound + 1):
        if sum(table.row(n)) != math.factorial(n):
            return False, f"row sum off at n={n}"
        if table.entry(n, 0) != catalan_number(n):
            return False, f"t=0 column off at n={n}"
    return True, f"rows n<={bound}"


def check_parker_histogram(max_n: int) -> tuple[bool, str]:
    """Descent counts over Parker sequences reproduce the triangle."""
    bound = min(max_n, 9)
    table = table_bruteforce(bound)
    for n in range(1, bound + 1):
        hist = descent_histogram(n)
        if hist != [table.entry(n, t) for t in range(n)]:
            return False, f"descent histogram off at n={n}"
    return True, f"third oracle through n={bound}"


def _floor_log2_array(ns: np.ndarray) -> np.ndarray:
    # frexp gives n = m * 2^e with m in [0.5, 1), so e - 1 = floor(log2 n)
    return np.frexp(ns.astype(np.float64))[1].astype(np.int64) - 1


def check_max_tier(max_n: int) -> tuple[bool, str]:
    """Exhaustive maxima, the recurrence, and the binary floor sum all match
    the closed form; the length-15 witness is the known unique one."""
    bound = min(max_n, 10)
    kernels = get_backend()
    for n in range(1, bound + 1):
        hist = kernels.tier_histogram(n)
        achieved = max(t for t, c in enumerate(hist) if c)
        if achieved != max_tier(n):
            return False, f"exhaustive max off at n={n}"

    limit = 1_000_000
    ns = np.arange(1, limit + 1, dtype=np.int64)
    closed = ns - 1 - _floor_log2_array(ns)
    # recurrence tau(n) = floor((n-1)/2) + tau(floor(n/2)), vectorized over
    # the closed form's own values
    tau = np.zeros(limit + 1, dtype=np.int64)
    tau[1:] = closed
    if not np.array_equal(tau[ns], (ns - 1) // 2 + tau[ns // 2]):
        return False, "recurrence identity off below 10^6"
    for n in itertools.chain(range(1, 2050), (10**4, 10**5 + 7, 10**6)):
        if max_tier_recursive(n) != max_tier(n):
            return False, f"memoized recurrence off at n={n}"

    sums = np.zeros(limit, dtype=np.int64)
    j = 1
    while (1 << (j - 1)) <= limit:
        term = (ns - (1 << (j - 1))) >> j
        sums += np.where(ns >= (1 << (j - 1)), term, 0)
        j += 1
    if not np.array_equal(sums, closed):
        return False, "floor-sum identity off below 10^6"
    if any(max_tier_floor_sum(n) != max_tier(n) for n in (1, 2, 63, 64, 65, 4096)):
        return False, "floor-sum function off at spot checks"

    for n in range(1, 65):
        if tier(max_tier_witness(n)) != max_tier(n):
            return False, f"witness tier off at n={n}"
    if max_tier_witness(15) != WITNESS_15 or tier(WITNESS_15) != 11:
        return False, "length-15 witness mismatch"
    return True, f"exhaustive n<={bound}; identities n<=10^6; witnesses n<=64"


def check_bijection(max_n: int) -> tuple[bool, str]:
    """Roundtrips both ways and descent/pair transport, exhaustively."""
    bound = min(max_n, 8)
    for n in range(1, bound + 1):
        for p in itertools.permutations(range(1, n + 1)):
            seq = perm_to_parker(p)
            if parker_to_perm(seq) != p:
                return False, f"roundtrip failed at {p}"
            pairs = tuple(sorted(sp.large for sp in separated_pairs(p)))
            if descents(seq) != pairs:
                return False, f"descent transport failed at {p}"
    return True, f"exhaustive through n={bound}"


def check_bases(max_n: int) -> tuple[bool, str]:
    """Searched bases match the known constants, and avoidance matches tier."""
    b0 = compute_basis(0, 3)
    if b0.elements != BASIS_TIER_0:
        return False, "tier-0 basis mismatch"
    b1 = compute_basis(1, 6)
    if b1.elements != BASIS_TIER_1:
        return False, "tier-1 basis mismatch"
    bound = min(max_n, 7)
    for n in range(1, bound + 1):
        for p in itertools.permutations(range(1, n + 1)):
            if avoids_basis(p, b1) != (tier(p) <= 1):
                return False, f"avoidance/tier mismatch at {p}"
    return True, f"constants plus avoidance n<={bound}"


def check_decomposition_laws(max_n: int) -> tuple[bool, str]:
    """Tier additivity for direct sums and the skew-sum +1 rule, exhaustively."""
    total = min(max_n, 9)
    kernels = get_backend()
    for a in range(1, total):
        s_perms = np.array(list(itertools.permutations(range(1, a + 1))), dtype=np.int64)
        s_tiers = kernels.batch_tier(s_perms)
        for b in range(1, total - a + 1):
            t_perms = np.array(list(itertools.permutations(range(1, b + 1))), dtype=np.int64)
            t_tiers = kernels.batch_tier(t_perms)
            ns, nt = len(s_perms), len(t_perms)
            plus = np.empty((ns * nt, a + b), dtype=np.int64)
            plus[:, :a] = np.repeat(s_perms, nt, axis=0)
            plus[:, a:] = np.tile(t_perms + a, (ns, 1))
            expected = (s_tiers[:, None] + t_tiers[None, :]).ravel()
            if not np.array_equal(kernels.batch_tier(plus), expected):
                return False, f"direct-sum law failed at sizes ({a}, {b})"
            minus = np.empty((ns * nt, a + b), dtype=np.int64)
            minus[:, :a] = np.repeat(s_perms + b, nt, axis=0)
            minus[:, a:] = np.tile(t_perms, (ns, 1))
            bump = (s_perms[:, -1] != 1).astype(np.int64)
            expected = ((s_tiers + bump)[:, None] + t_tiers[None, :]).ravel()
            if not np.array_equal(kernels.batch_tier(minus), expected):
                return False, f"skew-sum law failed at sizes ({a}, {b})"
    return True, f"all component pairs with total length <= {total}"


def _random_indecomposable(rng: random.Random, size: int) -> tuple[int, ...]:
    while True:
        p = tuple(rng.sample(range(1, size + 1), size))
        if len(minus_decompose(p).components) == 1:
            return p


def check_minus_chains(max_n: int, trials: int = 10_000) -> tuple[bool, str]:
    """Chain tier formula against direct tier on random skew chains."""
    rng = random.Random(20250810)
    for _ in range(trials):
        budget = rng.randint(1, 14)
        comps = []
        while budget > 0:
            size = rng.randint(1, min(4, budget))
            comps.append(_random_indecomposable(rng, size))
            budget -= size
        combined = minus_combine(comps)
        if tier_of_minus_chain(comps) != tier(combined):
            return False, f"chain formula failed on {comps}"
    return True, f"{trials} random chains of total length <= 14"


def check_roundtrip_decompositions(max_n: int) -> tuple[bool, str]:
    """Decompose-then-recombine is the identity for both sum kinds."""
    bound = min(max_n, 7)
    for n in range(1, bound + 1):
        for p in itertools.permutations(range(1, n + 1)):
            if plus_combine(plus_decompose(p).components) != p:
                return False, f"plus roundtrip failed at {p}"
            if minus_combine(minus_decompose(p).components) != p:
                return False, f"minus roundtrip failed at {p}"
    return True, f"exhaustive through n={bound}"


def check_series_identities(max_n: int) -> tuple[bool, str]:
    """Radical-tower identities: squaring, telescoping product, closed form."""
    order = 32
    tower = psi_tower(6, order)
    for j in range(1, 6):
        squared = tower[j] * tower[j]
        target = tower[j - 1].scale(2).add_constant(-1).truncate(squared.order)
        if squared.coeffs != target.coeffs:
            return False, f"squaring identity failed at level {j}"

    # halves[j] = (1 - psi_j)/(2u); the ratio halves[j+1]/halves[j] telescopes
    halves = [(-tower[j]).add_constant(1).shift_down(1).scale("1/2") for j in range(6)]
    for j in range(6):
        prod = RationalSeries.one(order - 1)
        for i in range(j):
            prod = prod * (halves[i + 1] / halves[i])
        if prod.coeffs != halves[j].truncate(prod.order).coeffs:
            return False, f"telescoping product failed at level {j}"

    closed = t1_closed_form(14)
    if closed.coefficient(0) != 0:
        return False, "tier-1 closed form has nonzero constant"
    for n in range(1, 15):
        if closed.coefficient(n) != t_coefficient(n, 1):
            return False, f"tier-1 closed form off at n={n}"
    return True, "squaring, product, and closed form through order 32"


ALL_CHECKS = [
    ("sim-vs-pairs", check_sim_equals_pairs),
    ("table-oracles", check_tables_agree),
    ("row-sums-catalan", check_row_sums_and_catalan),
    ("parker-histogram", check_parker_histogram),
    ("max-tier", check_max_tier),
    ("bijection", check_bijection),
    ("bases", check_bases),
    ("decomposition-laws", check_decomposition_laws),
    ("minus-chains", check_minus_chains),
    ("decomposition-roundtrip", check_roundtrip_decompositions),
    ("series-identities", check_series_identities),
]


def run_all(max_n: int = 8) -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in ALL_CHECKS:
        ok, detail = fn(max_n)
        results.append((name, ok, detail))
    return results
