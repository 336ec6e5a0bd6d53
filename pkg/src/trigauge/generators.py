"""Seeded benchmark-graph generators.

Five ensembles: Erdős–Rényi, Barabási–Albert growth, Watts–Strogatz
rewired lattices, a planted partition of equal blocks, and an LFR-style
benchmark (power-law degrees and community sizes with a tunable mixing
fraction).  Every generator is deterministic in (spec, seed); independent
sub-streams are derived per purpose so the pieces stay reproducible even
if one stage changes how much randomness it consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GenerationError
from .graph import DegreeStats, Graph, build_graph, degree_stats
from .seeding import substream


@dataclass(frozen=True)
class NgSpec:
    """Planted partition of equal ER-type blocks.

    ``k_out`` is the mean number of a node's edges that leave its block;
    the within/between wiring probabilities follow from it.
    """

    n: int = 256
    communities: int = 4
    mean_k: float = 16.0
    k_out: float = 4.0
    seed: int = 0


@dataclass(frozen=True)
class LfrSpec:
    """Power-law benchmark with planted communities.

    ``mu`` is the fraction of each node's edges that point outside its
    community.  Degrees follow a truncated power law with exponent
    ``gamma`` whose lower cutoff is solved so the distribution mean hits
    ``mean_k``; community sizes follow a power law with exponent
    ``gamma_c`` inside ``community_size_range``.
    """

    n: int = 1000
    mean_k: float = 20.0
    k_max: int = 50
    gamma: float = 2.0
    gamma_c: float = 1.0
    community_size_range: tuple[int, int] = (20, 100)
    mu: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class GenReport:
    stats: DegreeStats
    membership: np.ndarray | None
    realized_mixing: float | None
    rewiring_attempts: int
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.stats.n,
            "e": self.stats.e,
            "mean_k": self.stats.mean_k,
            "mean_k2": self.stats.mean_k2,
            "k_max": self.stats.k_max,
            "communities": int(self.membership.max()) + 1 if self.membership is not None else None,
            "realized_mixing": self.realized_mixing,
            "rewiring_attempts": self.rewiring_attempts,
            "details": dict(self.details),
        }


# ---------------------------------------------------------------------------
# uniform sampling of distinct node pairs

def _pair_row_starts(n: int) -> np.ndarray:
    i = np.arange(n, dtype=np.int64)
    return i * (2 * n - 1 - i) // 2


def _decode_pair_codes(codes: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # code t enumerates pairs (0,1),(0,2),...,(0,n-1),(1,2),... row-major
    starts = _pair_row_starts(n)
    i = np.searchsorted(starts, codes, side="right") - 1
    j = codes - starts[i] + i + 1
    return i, j


def _sample_distinct_codes(rng: np.random.Generator, limit: int, m: int) -> np.ndarray:
    """Uniform m-subset of [0, limit) as a sorted array of codes."""
    if m >= limit:
        return np.arange(limit, dtype=np.int64)
    if m == 0:
        return np.empty(0, dtype=np.int64)
    pool = np.unique(rng.integers(0, limit, size=m))
    while pool.size < m:
        extra = rng.integers(0, limit, size=m - pool.size)
        pool = np.unique(np.concatenate([pool, extra]))
    if pool.size == m:
        return pool
    # distinct values collected from i.i.d. draws are exchangeable, so a
    # uniform m-subset of them is a uniform m-subset of [0, limit)
    keep = rng.permutation(pool.size)[:m]
    return np.sort(pool[keep])


def gen_er(n: int, mean_k: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) with p = mean_k / (n - 1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= mean_k <= n - 1:
        raise ValueError(f"mean degree {mean_k} infeasible for n={n}")
    p = mean_k / (n - 1) if n > 1 else 0.0
    rng = substream(seed, "er")
    limit = n * (n - 1) // 2
    m = int(rng.binomial(limit, p)) if limit > 0 else 0
    u, v = _decode_pair_codes(_sample_distinct_codes(rng, limit, m), n)
    graph, _ = build_graph(np.stack([u, v], axis=1), node_count=n)
    return graph


def gen_ba(n: int, m: int, seed: int) -> Graph:
    """Barabási–Albert growth from a seed clique on m + 1 nodes.

    Each new node attaches to m distinct existing nodes chosen with
    probability proportional to their current degree (duplicate draws are
    rejected and redrawn).
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    rng = substream(seed, "ba")
    clique = m + 1
    seed_u, seed_v = np.triu_indices(clique, k=1)
    total_edges = clique * (clique - 1) // 2 + m * (n - clique)
    src = np.empty(total_edges, dtype=np.int64)
    dst = np.empty(total_edges, dtype=np.int64)
    src[: seed_u.size] = seed_u
    dst[: seed_u.size] = seed_v
    filled = seed_u.size

    # endpoint multiset: picking uniformly from it is degree-proportional
    rep = np.empty(2 * total_edges, dtype=np.int64)
    rep[: 2 * filled : 2] = seed_u
    rep[1 : 2 * filled : 2] = seed_v
    rep_fill = 2 * filled
    for v in range(clique, n):
        chosen = np.unique(rep[rng.integers(0, rep_fill, size=m)])
        while chosen.size < m:
            extra = rep[rng.integers(0, rep_fill, size=m - chosen.size)]
            chosen = np.unique(np.concatenate([chosen, extra]))
        src[filled : filled + m] = v
        dst[filled : filled + m] = chosen
        filled += m
        rep[rep_fill : rep_fill + m] = v
        rep[rep_fill + m : rep_fill + 2 * m] = chosen
        rep_fill += 2 * m
    graph, _ = build_graph(np.stack([src, dst], axis=1), node_count=n)
    return graph


def gen_ws(n: int, k: int, p_rewire: float, seed: int) -> Graph:
    """Watts–Strogatz: ring lattice with k/2 neighbors a side, then rewiring.

    Each lattice edge is independently rewired with probability
    ``p_rewire`` to a uniform new endpoint, skipping self-loops and
    duplicates.
    """
    if k % 2 != 0:
        raise ValueError(f"lattice degree k must be even, got {k}")
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    if not 0.0 <= p_rewire <= 1.0:
        raise ValueError(f"rewiring probability must be in [0, 1], got {p_rewire}")
    rng = substream(seed, "ws")
    adj: list[set[int]] = [set() for _ in range(n)]
    half = k // 2
    for j in range(1, half + 1):
        for i in range(n):
            t = (i + j) % n
            adj[i].add(t)
            adj[t].add(i)
    if p_rewire > 0.0:
        for j in range(1, half + 1):
            for i in range(n):
                if rng.random() >= p_rewire:
                    continue
                old = (i + j) % n
                if len(adj[i]) >= n - 1:
                    continue
                while True:
                    w = int(rng.integers(n))
                    if w != i and w not in adj[i]:
                        break
                adj[i].discard(old)
                adj[old].discard(i)
                adj[i].add(w)
                adj[w].add(i)
    pairs = [(i, t) for i in range(n) for t in adj[i] if t > i]
    edges = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    graph, _ = build_graph(edges, node_count=n)
    return graph


def gen_ng(spec: NgSpec) -> tuple[Graph, GenReport]:
    """Planted partition: equal blocks, ER wiring within and between."""
    c, n = spec.communities, spec.n
    if c < 2:
        raise ValueError(f"need at least 2 communities, got {c}")
    if n % c != 0:
        raise ValueError(f"n={n} not divisible by {c} communities")
    nb = n // c
    if nb < 2:
        raise ValueError(f"block size {nb} too small")
    if not 0 <= spec.k_out <= spec.mean_k:
        raise ValueError(f"need 0 <= k_out <= mean_k, got k_out={spec.k_out}, mean_k={spec.mean_k}")
    p_in = (spec.mean_k - spec.k_out) / (nb - 1)
    p_out = spec.k_out / (n - nb)
    if not 0.0 <= p_in <= 1.0:
        raise ValueError(f"within-block probability {p_in:.4f} outside [0, 1]")
    if not 0.0 <= p_out <= 1.0:
        raise ValueError(f"between-block probability {p_out:.4f} outside [0, 1]")

    rng = substream(spec.seed, "ng")
    within_limit = nb * (nb - 1) // 2
    parts = []
    within_edges = 0
    for b in range(c):
        m_b = int(rng.binomial(within_limit, p_in)) if within_limit else 0
        u, v = _decode_pair_codes(_sample_distinct_codes(rng, within_limit, m_b), nb)
        parts.append(np.stack([u, v], axis=1) + b * nb)
        within_edges += m_b

    membership = np.repeat(np.arange(c, dtype=np.int64), nb)
    total_limit = n * (n - 1) // 2
    cross_limit = total_limit - c * within_limit
    m_x = int(rng.binomial(cross_limit, p_out)) if cross_limit else 0
    pool = np.empty(0, dtype=np.int64)
    while pool.size < m_x:
        draw = rng.integers(0, total_limit, size=max(2 * (m_x - pool.size), 64))
        u, v = _decode_pair_codes(draw, n)
        draw = draw[membership[u] != membership[v]]
        pool = np.unique(np.concatenate([pool, draw]))
    if pool.size > m_x:
        keep = rng.permutation(pool.size)[:m_x]
        pool = pool[keep]
    u, v = _decode_pair_codes(pool, n)
    parts.append(np.stack([u, v], axis=1))

    graph, _ = build_graph(np.concatenate(parts, axis=0), node_count=n)
    edges_total = within_edges + m_x
    report = GenReport(
        stats=degree_stats(graph),
        membership=membership,
        realized_mixing=(m_x / edges_total) if edges_total else None,
        rewiring_attempts=0,
        details={"p_in": p_in, "p_out": p_out},
    )
    return graph, report


# ---------------------------------------------------------------------------
# truncated power laws (floor-discretized so the mean is tunable continuously)

def _power_cdf(x, gamma: float, a: float, b: float):
    if gamma == 1.0:
        return np.log(np.asarray(x, dtype=np.float64) / a) / math.log(b / a)
    g = 1.0 - gamma
    return (a ** g - np.asarray(x, dtype=np.float64) ** g) / (a ** g - b ** g)


def _power_ppf(u, gamma: float, a: float, b: float):
    if gamma == 1.0:
        return a * (b / a) ** np.asarray(u, dtype=np.float64)
    g = 1.0 - gamma
    return (a ** g - np.asarray(u, dtype=np.float64) * (a ** g - b ** g)) ** (1.0 / g)


def _floor_law_mean(gamma: float, a: float, k_max: int) -> float:
    b = k_max + 1.0
    ks = np.arange(int(math.floor(a)), k_max + 1, dtype=np.int64)
    upper = np.minimum(ks + 1.0, b)
    lower = np.maximum(ks.astype(np.float64), a)
    pmf = np.clip(_power_cdf(upper, gamma, a, b) - _power_cdf(lower, gamma, a, b), 0.0, None)
    return float((ks * pmf).sum())


def _solve_degree_cutoff(gamma: float, k_max: int, target_mean: float) -> float:
    """Lower cutoff of the floor-discretized power law hitting the target mean."""
    lo, hi = 1.0, float(k_max)
    if not _floor_law_mean(gamma, lo, k_max) <= target_mean <= k_max:
        raise ValueError(
            f"mean degree {target_mean} unreachable for gamma={gamma}, k_max={k_max}"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _floor_law_mean(gamma, mid, k_max) < target_mean:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    return 0.5 * (lo + hi)


def _sample_power_floor(rng: np.random.Generator, count: int, gamma: float,
                        a: float, k_max: int) -> np.ndarray:
    x = _power_ppf(rng.random(count), gamma, a, k_max + 1.0)
    return np.clip(np.floor(x).astype(np.int64), int(math.floor(a)), k_max)


def _sample_community_sizes(rng: np.random.Generator, n: int, gamma_c: float,
                            s_min: int, s_max: int, max_tries: int = 1000) -> np.ndarray:
    for _ in range(max_tries):
        sizes: list[int] = []
        total = 0
        while total < n:
            s = int(_sample_power_floor(rng, 1, gamma_c, float(s_min), s_max)[0])
            sizes.append(s)
            total += s
        if total == n:
            return np.asarray(sizes, dtype=np.int64)
        if sizes[-1] - (total - n) >= s_min:
            sizes[-1] -= total - n
            return np.asarray(sizes, dtype=np.int64)
    raise GenerationError(
        "could not partition nodes into communities",
        {"n": n, "size_range": (s_min, s_max), "tries": max_tries},
    )


def _assign_to_communities(rng: np.random.Generator, internal_degree: np.ndarray,
                           sizes: np.ndarray, max_tries: int = 50) -> np.ndarray:
    """Place nodes into fixed-size communities with room for their internal stubs."""
    n = internal_degree.shape[0]
    for _ in range(max_tries):
        remaining = sizes.copy()
        membership = np.full(n, -1, dtype=np.int64)
        shuffled = rng.permutation(n)
        order = shuffled[np.argsort(-internal_degree[shuffled], kind="stable")]
        ok = True
        for node in order:
            feasible = (remaining > 0) & (sizes - 1 >= internal_degree[node])
            cands = np.flatnonzero(feasible)
            if cands.size == 0:
                ok = False
                break
            weights = np.cumsum(remaining[cands])
            pick = cands[np.searchsorted(weights, rng.integers(weights[-1]), side="right")]
            membership[node] = pick
            remaining[pick] -= 1
        if ok:
            return membership
    raise GenerationError(
        "could not place nodes into communities",
        {"communities": sizes.size, "max_internal": int(internal_degree.max(initial=0))},
    )


def _match_stubs(rng: np.random.Generator, stubs: np.ndarray, n: int,
                 existing: set[int], groups: np.ndarray | None,
                 budget: int, stage: str) -> tuple[np.ndarray, int]:
    """Pair stubs into simple edges, repairing defects by random swaps.

    A pair is defective if it is a self-loop, duplicates an edge (placed
    here or in ``existing``), or joins two nodes of the same group when
    ``groups`` is given.  Repair swaps endpoints between a defective pair
    and a random partner pair; when no progress is made for a while the
    whole pool is reshuffled.  The number of attempted swaps is bounded by
    ``budget``.
    """
    stubs = stubs.copy()
    npairs = stubs.size // 2

    def key(x: int, y: int) -> int:
        return (x * n + y) if x < y else (y * n + x)

    def acceptable(x: int, y: int, k: int) -> bool:
        if x == y or k in existing or k in placed:
            return False
        return groups is None or groups[x] != groups[y]

    def build():
        rng.shuffle(stubs)
        a = stubs[0::2].copy()
        b = stubs[1::2].copy()
        placed.clear()
        good = np.zeros(npairs, dtype=bool)
        bad = []
        for i in range(npairs):
            k = key(a[i], b[i])
            if acceptable(a[i], b[i], k):
                placed.add(k)
                good[i] = True
            else:
                bad.append(i)
        return a, b, good, bad

    placed: set[int] = set()
    a, b, good, bad = build()
    attempts = 0
    stall = 0
    stall_limit = max(1000, 20 * npairs)
    while bad:
        i = bad[-1]
        if good[i]:
            bad.pop()
            continue
        if attempts >= budget:
            raise GenerationError(
                "stub matching failed to produce a simple graph",
                {"stage": stage, "unresolved": len(bad), "attempts": attempts,
                 "pairs": npairs},
            )
        if stall >= stall_limit:
            a, b, good, bad = build()
            stall = 0
            continue
        attempts += 1
        j = int(rng.integers(npairs))
        if j == i:
            stall += 1
            continue
        if rng.integers(2) == 1:
            a[j], b[j] = b[j], a[j]      # pairs are unordered
        old_j_key = key(a[j], b[j]) if good[j] else None
        if old_j_key is not None:
            placed.discard(old_j_key)
        ki = key(a[i], b[j])
        kj = key(a[j], b[i])
        if ki != kj and acceptable(a[i], b[j], ki) and acceptable(a[j], b[i], kj):
            b[i], b[j] = b[j], b[i]
            placed.add(ki)
            placed.add(kj)
            good[i] = True
            good[j] = True
            bad.pop()
            stall = 0
        else:
            if old_j_key is not None:
                placed.add(old_j_key)
            stall += 1
    return np.stack([a, b], axis=1), attempts


def _erdos_gallai_ok(deg: np.ndarray) -> bool:
    """True iff the degree sequence has a simple-graph realization."""
    d = np.sort(np.asarray(deg, dtype=np.int64))[::-1]
    if d.size == 0:
        return True
    if int(d.sum()) % 2 == 1 or int(d[0]) >= d.size:
        return False
    prefix = np.cumsum(d)
    ks = np.arange(1, d.size + 1, dtype=np.int64)
    clipped = np.minimum(d[None, :], ks[:, None])
    tail = np.array([clipped[k - 1, k:].sum() for k in ks])
    return bool(np.all(prefix <= ks * (ks - 1) + tail))


def _dense_block_realization(rng: np.random.Generator, deg: np.ndarray,
                             stage: str, swap_rounds: int = 4) -> tuple[np.ndarray, int]:
    """Realize a degree sequence exactly, then randomize it.

    Builds one realization greedily (largest remaining degree first, wired
    to the next-largest — succeeds iff the sequence is graphical) and mixes
    it with degree-preserving double-edge swaps.  Used for dense blocks
    where stub matching with repair thrashes.
    """
    s = deg.size
    remaining = deg.astype(np.int64).copy()
    edges: list[tuple[int, int]] = []
    for _ in range(s):
        u = int(np.argmax(remaining))
        k = int(remaining[u])
        if k == 0:
            break
        remaining[u] = 0
        order = np.argsort(-remaining, kind="stable")
        cands = order[remaining[order] > 0][:k]
        if cands.size < k:
            raise GenerationError(
                "internal degree sequence is not graphical",
                {"stage": stage, "nodes": s, "stuck_degree": k},
            )
        for v in cands:
            edges.append((u, int(v)))
            remaining[v] -= 1

    def canon(x: int, y: int) -> int:
        return (x * s + y) if x < y else (y * s + x)

    keys = {canon(a, b) for a, b in edges}
    n_edges = len(edges)
    attempts = swap_rounds * n_edges
    for _ in range(attempts):
        i = int(rng.integers(n_edges))
        j = int(rng.integers(n_edges))
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if rng.integers(2) == 1:
            c, d = d, c
        if len({a, b, c, d}) < 4:
            continue
        k1, k2 = canon(a, d), canon(c, b)
        if k1 in keys or k2 in keys:
            continue
        keys.discard(canon(a, b))
        keys.discard(canon(c, d))
        keys.add(k1)
        keys.add(k2)
        edges[i] = (a, d)
        edges[j] = (c, b)
    return np.asarray(edges, dtype=np.int64).reshape(-1, 2), attempts


def _wire_community(rng: np.random.Generator, members: np.ndarray,
                    internal_degree: np.ndarray, n: int,
                    budget: int, stage: str) -> tuple[np.ndarray, int]:
    """Realize the internal degree sequence of one community exactly.

    Blocks denser than half their possible pairs are wired through the
    complement (matching s-1-k and inverting yields the same degrees).
    Sparse blocks use plain stub matching with swap repair; moderately
    dense ones use conditional sequential matching, which cannot create
    defects.
    """
    s = members.size
    local_deg = internal_degree[members].astype(np.int64)
    possible = s * (s - 1) // 2
    complement = int(local_deg.sum()) > possible  # sum of degrees is 2x the edges
    deg = (s - 1) - local_deg if complement else local_deg
    edges_needed = int(deg.sum()) // 2

    if edges_needed == 0:
        local_edges = np.empty((0, 2), dtype=np.int64)
        used = 0
    elif edges_needed > 0.25 * possible or int(deg.max()) >= s - 2:
        local_edges, used = _dense_block_realization(rng, deg, stage)
    else:
        stubs = np.repeat(np.arange(s, dtype=np.int64), deg)
        local_edges, used = _match_stubs(rng, stubs, s, set(), None, budget, stage)

    if complement:
        taken = {int(min(u, v)) * s + int(max(u, v)) for u, v in local_edges}
        lu, lv = np.triu_indices(s, k=1)
        keep = np.fromiter(
            (int(u) * s + int(v) not in taken for u, v in zip(lu, lv)),
            dtype=bool, count=lu.size,
        )
        local_edges = np.stack([lu[keep], lv[keep]], axis=1)
    return members[local_edges], used


def gen_lfr_like(spec: LfrSpec) -> tuple[Graph, GenReport]:
    """LFR-style benchmark via stub matching within and across communities.

    Stages: solve the degree law's lower cutoff, sample degrees and
    community sizes, split each node's stubs into an internal budget
    (1 - mu) * k and an external budget mu * k with unbiased randomized
    rounding, place nodes into communities that can host their internal
    budget, then wire internal stubs per community and external stubs
    globally (forbidding same-community pairs), repairing defects by
    bounded random swaps.
    """
    s_min, s_max = spec.community_size_range
    if not 0.0 <= spec.mu <= 1.0:
        raise ValueError(f"mixing fraction must be in [0, 1], got {spec.mu}")
    if s_min > s_max or s_min < 2:
        raise ValueError(f"bad community size range {spec.community_size_range}")
    if s_min <= spec.mean_k / 2:
        raise ValueError(
            f"min community size {s_min} must exceed mean_k/2 = {spec.mean_k / 2}"
        )
    if spec.n < s_min:
        raise ValueError(f"n={spec.n} smaller than the minimum community size")

    n, mu = spec.n, spec.mu
    cutoff = _solve_degree_cutoff(spec.gamma, spec.k_max, spec.mean_k)

    rng_deg = substream(spec.seed, "lfr", "degrees")
    degrees = _sample_power_floor(rng_deg, n, spec.gamma, cutoff, spec.k_max)
    if degrees.sum() % 2 == 1:
        node = int(rng_deg.integers(n))
        degrees[node] += 1 if degrees[node] < spec.k_max else -1

    rng_sizes = substream(spec.seed, "lfr", "sizes")
    sizes = _sample_community_sizes(rng_sizes, n, spec.gamma_c, s_min, s_max)

    rng_split = substream(spec.seed, "lfr", "split")
    internal_target = (1.0 - mu) * degrees
    k_int = np.floor(internal_target).astype(np.int64)
    k_int += rng_split.random(n) < (internal_target - k_int)
    k_int = np.minimum(k_int, degrees)

    rng_assign = substream(spec.seed, "lfr", "assign")
    membership = _assign_to_communities(rng_assign, k_int, sizes)

    # per community the internal stub sum must be even and the sequence
    # realizable as a simple graph; defective stubs become external budget
    # (or are dropped outright when mu = 0 forbids external edges)
    k_ext = degrees - k_int
    stub_drops = 0
    reassigned = 0

    def move_internal_stub(members: np.ndarray) -> None:
        nonlocal stub_drops, reassigned
        cands = members[k_int[members] > 0]
        pick = int(cands[rng_assign.integers(cands.size)])
        k_int[pick] -= 1
        if mu > 0.0:
            k_ext[pick] += 1
            reassigned += 1
        else:
            stub_drops += 1

    for comm in range(sizes.size):
        members = np.flatnonzero(membership == comm)
        if int(k_int[members].sum()) % 2 == 1:
            move_internal_stub(members)
        while not _erdos_gallai_ok(k_int[members]):
            move_internal_stub(members)
            move_internal_stub(members)
    if int(k_ext.sum()) % 2 == 1:
        cands = np.flatnonzero(k_ext > 0)
        pick = int(cands[rng_assign.integers(cands.size)])
        k_ext[pick] -= 1
        stub_drops += 1

    rng_wire = substream(spec.seed, "lfr", "wire")
    target_edges = int(k_int.sum() + k_ext.sum()) // 2
    budget = 100 * max(target_edges, 1)
    attempts_total = 0
    placed: set[int] = set()
    parts: list[np.ndarray] = []
    for comm in range(sizes.size):
        members = np.flatnonzero(membership == comm)
        if int(k_int[members].sum()) == 0:
            continue
        edges, used = _wire_community(
            rng_wire, members, k_int, n, budget - attempts_total, f"community {comm}"
        )
        attempts_total += used
        placed.update(int(min(u, v)) * n + int(max(u, v)) for u, v in edges)
        parts.append(edges)
    ext_stubs = np.repeat(np.arange(n, dtype=np.int64), k_ext)
    if ext_stubs.size:
        edges, used = _match_stubs(
            rng_wire, ext_stubs, n, placed, membership, budget - attempts_total, "external"
        )
        attempts_total += used
        parts.append(edges)

    all_edges = (
        np.concatenate(parts, axis=0) if parts else np.empty((0, 2), dtype=np.int64)
    )
    graph, _ = build_graph(all_edges, node_count=n)
    if all_edges.shape[0]:
        cross = membership[all_edges[:, 0]] != membership[all_edges[:, 1]]
        mixing = float(cross.mean())
    else:
        mixing = None
    report = GenReport(
        stats=degree_stats(graph),
        membership=membership,
        realized_mixing=mixing,
        rewiring_attempts=attempts_total,
        details={
            "degree_cutoff": cutoff,
            "stub_drops": stub_drops,
            "stubs_reassigned_external": reassigned,
            "communities": int(sizes.size),
        },
    )
    return graph, report
