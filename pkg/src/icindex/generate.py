"""Seeded generators for IC structures used in property testing.

Two families: a constructive one whose relay-only subgraph is always
acyclic (start from the bidirected inner clique, then stretch arcs through
fresh relays, re-validating and rolling back after every move), and a
rejection sampler that routes inner pairs through shared relay chains plus
random relay-to-relay arcs, which produces relay cycles and
condition-violating shapes as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, has_cycle_within
from .structure import ICStructure, ic_structure, validate

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit stream; fixed algorithm so seeds are stable fixtures."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def random(self) -> float:
        return self.next_u64() / 2.0**64

    def choice(self, seq):
        return seq[self.randrange(len(seq))]


class GenerationFailedError(RuntimeError):
    """No valid structure found within the attempt budget."""


@dataclass(frozen=True)
class GenParams:
    k: int
    max_extra: int
    seed: int
    attempts: int = 400
    cross_arc_rate: float = 0.12

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if self.max_extra < 0:
            raise ValueError("max_extra must be >= 0")
        if self.attempts < 1:
            raise ValueError("attempts must be >= 1")
        # ceiling keeps validation and oracle enumeration fast
        if self.k + self.max_extra > 16:
            raise ValueError("k + max_extra must not exceed 16 vertices")


def _clique_arcs(k: int) -> set[tuple[int, int]]:
    return {(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j}


def gen_theorem2_family(params: GenParams) -> ICStructure:
    """A valid structure whose relay-only induced subgraph is acyclic.

    Moves (each validated, rolled back if invalid):
      * relay: replace several direct arcs out of one inner vertex by a
        fan through one fresh relay;
      * stretch: insert a fresh relay in the middle of an existing arc
        leaving a relay, deepening a chain;
      * share: re-route a second inner vertex through an existing relay
        whose fan it already covers with direct arcs.
    With max_extra = 0 the result is the bidirected inner clique.
    """
    rng = SplitMix64(params.seed)
    k = params.k
    arcs = _clique_arcs(k)
    n = k
    target_extra = rng.randrange(params.max_extra + 1) if params.max_extra else 0
    budget = params.attempts

    def non_inner() -> list[int]:
        return list(range(k + 1, n + 1))

    for _ in range(target_extra):
        if budget <= 0:
            break
        budget -= 1
        v = n + 1
        trial = set(arcs)
        if rng.random() < 0.55 or n == k:
            # relay: fan a subset of one inner vertex's direct inner targets through v
            source = 1 + rng.randrange(k)
            targets = sorted(j for j in range(1, k + 1) if (source, j) in trial)
            if not targets:
                continue
            chosen = [j for j in targets if rng.random() < 0.6]
            if not chosen:
                chosen = [rng.choice(targets)]
            for j in chosen:
                trial.discard((source, j))
                trial.add((v, j))
            trial.add((source, v))
        else:
            # stretch: split an arc leaving a relay, putting v in the middle
            candidates = sorted(a for a in trial if a[0] > k)
            if not candidates:
                continue
            u, w = rng.choice(candidates)
            trial.discard((u, w))
            trial.add((u, v))
            trial.add((v, w))
        g = Digraph(n + 1, trial)
        if validate(g, k).is_ic and not has_cycle_within(g, range(k + 1, n + 2)):
            arcs = trial
            n += 1

    # share moves keep n fixed but let relays serve several trees
    for _ in range(rng.randrange(3)):
        relays = [v for v in non_inner()]
        if not relays or budget <= 0:
            break
        budget -= 1
        v = rng.choice(relays)
        fan = sorted(j for j in range(1, k + 1) if (v, j) in arcs)
        if not fan:
            continue
        hosts = [
            i
            for i in range(1, k + 1)
            if i not in fan
            and (i, v) not in arcs
            and all((i, j) in arcs for j in fan)
        ]
        if not hosts:
            continue
        i = rng.choice(hosts)
        trial = set(arcs)
        for j in fan:
            trial.discard((i, j))
        trial.add((i, v))
        g = Digraph(n, trial)
        if validate(g, k).is_ic and not has_cycle_within(g, range(k + 1, n + 1)):
            arcs = trial

    g = Digraph(n, arcs)
    report = validate(g, k)
    if not report.is_ic:
        raise GenerationFailedError("constructive moves left an invalid structure")
    return ic_structure(g, k)


def _sample_ring(
    rng: SplitMix64, k: int, budget: int, arcs: set[tuple[int, int]], next_relay: int
) -> tuple[set[tuple[int, int]], int, int] | None:
    """Plant a directed relay ring with inner entries and exits.

    Trees entering the ring travel it forward to their exits; an entry may
    go through a stub relay, which puts the first ring vertex at depth 2
    and doubles its feeder count.  Returns (ring pairs, relays consumed,
    next free label) or None when the draw does not fit the budget.
    """
    if k < 3 or budget < 2:
        return None
    m = 2 + rng.randrange(min(4, budget) - 1)
    ring = list(range(next_relay, next_relay + m))
    consumed = m
    for t in range(m):
        arcs.add((ring[t], ring[(t + 1) % m]))
    inner = list(range(1, k + 1))
    for idx in range(k - 1, 0, -1):  # seeded shuffle
        other = rng.randrange(idx + 1)
        inner[idx], inner[other] = inner[other], inner[idx]
    e_count = 2 + rng.randrange(max(1, min(k - 1, m) - 1))
    e_count = min(e_count, k - 1, m)
    entries = inner[:e_count]
    x_count = 1 + rng.randrange(min(k - e_count, m))
    exits = inner[e_count : e_count + x_count]
    positions = list(range(m))
    for idx in range(m - 1, 0, -1):
        other = rng.randrange(idx + 1)
        positions[idx], positions[other] = positions[other], positions[idx]
    entry_pos = positions[:e_count]
    for idx, i in enumerate(entries):
        target = ring[entry_pos[idx]]
        if idx == 0 and rng.random() < 0.35 and consumed < budget:
            stub = next_relay + consumed
            consumed += 1
            arcs.add((i, stub))
            arcs.add((stub, target))
        else:
            arcs.add((i, target))
    exit_pos = list(range(m))
    for idx in range(m - 1, 0, -1):
        other = rng.randrange(idx + 1)
        exit_pos[idx], exit_pos[other] = exit_pos[other], exit_pos[idx]
    for idx, j in enumerate(exits):
        arcs.add((ring[exit_pos[idx]], j))
    ring_pairs = {(i, j) for i in entries for j in exits}
    return ring_pairs, consumed, next_relay + consumed


def gen_random_ic(params: GenParams) -> ICStructure:
    """Rejection-sampled structure; relay cycles and violating shapes included.

    Samples optionally plant a relay ring (the source of relay-only cycles
    and of even or out-of-tree feeder counts); every ordered inner pair not
    served by the ring is routed directly or through a chain of one or two
    pool relays, where chains may be reused reversed by later pairs.  The
    first sample passing validation is returned.
    """
    rng = SplitMix64(params.seed)
    k = params.k
    for _ in range(params.attempts):
        arcs: set[tuple[int, int]] = set()
        next_relay = k + 1
        ring_pairs: set[tuple[int, int]] = set()
        budget = params.max_extra
        if budget >= 2 and k >= 3 and rng.random() < 0.55:
            planted = _sample_ring(rng, k, budget, arcs, next_relay)
            if planted is not None:
                ring_pairs, consumed, next_relay = planted
                budget -= consumed
        pool_n = rng.randrange(budget + 1) if budget else 0
        pool = list(range(next_relay, next_relay + pool_n))
        used: set[int] = set(range(k + 1, next_relay))
        two_chains: list[tuple[int, int]] = []
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i == j or (i, j) in ring_pairs:
                    continue
                hops = 0
                if pool:
                    x = rng.random()
                    hops = 0 if x < 0.45 else (1 if x < 0.80 else 2)
                    hops = min(hops, len(pool))
                if hops == 0:
                    arcs.add((i, j))
                    continue
                if hops == 2 and two_chains and rng.random() < params.cross_arc_rate * 3:
                    a, b = two_chains[rng.randrange(len(two_chains))]
                    chain = [b, a]
                else:
                    chain = [pool[rng.randrange(len(pool))]]
                    while len(chain) < hops:
                        nxt = pool[rng.randrange(len(pool))]
                        if nxt not in chain:
                            chain.append(nxt)
                if len(chain) == 2:
                    two_chains.append((chain[0], chain[1]))
                used.update(chain)
                prev = i
                for v in chain:
                    arcs.add((prev, v))
                    prev = v
                arcs.add((prev, j))
        relays = sorted(used)
        relabel = {v: k + 1 + idx for idx, v in enumerate(relays)}
        final = {(relabel.get(p, p), relabel.get(q, q)) for p, q in arcs}
        g = Digraph(k + len(relays), final)
        if validate(g, k).is_ic:
            return ic_structure(g, k)
    raise GenerationFailedError(
        f"no valid structure in {params.attempts} attempts (seed {params.seed})"
    )
