"""Genetic search for boards with large ``t(G) - deg(G)``, and the
``t <= deg + deg2/2`` monitor.

Genomes are untinted graphs stored as tuples of neighbour bitmasks. All
randomness flows from ``SearchConfig.rng_seed`` through one ``random.Random``;
fitness evaluation never touches it, so runs are bit-reproducible.
"""

from __future__ import annotations

import enum
import json
import logging
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from snortcgt.dyadic import Dyadic
from snortcgt.families import make_star, witness_position
from snortcgt.graphio import position_from_dict, position_to_dict
from snortcgt.snort import (
    Position,
    canonical_key,
    degree,
    from_board,
    position_temperature,
    second_degree,
    to_board,
)

log = logging.getLogger(__name__)

MUTATIONS = ("edge_toggle", "add_pendant", "delete_low_degree", "add_joined_vertex")

Genome = tuple[int, ...]


class ConfigError(ValueError):
    pass


class Fitness(enum.Enum):
    TEMP_MINUS_DEG = "TempMinusDeg"
    TEMP_MINUS_DEG_MINUS_HALF_DEG2 = "TempMinusDegMinusHalfDeg2"


# JSON key -> attribute
_KEYS = {
    "populationSize": "population_size",
    "generations": "generations",
    "mutationRates": "mutation_rates",
    "crossoverRate": "crossover_rate",
    "tournamentSize": "tournament_size",
    "eliteCount": "elite_count",
    "maxVertices": "max_vertices",
    "rngSeed": "rng_seed",
    "fitness": "fitness",
    "hallSize": "hall_size",
}


@dataclass
class SearchConfig:
    population_size: int = 48
    generations: int = 30
    mutation_rates: dict = field(default_factory=lambda: {
        "edge_toggle": 0.5,
        "add_pendant": 0.2,
        "delete_low_degree": 0.2,
        "add_joined_vertex": 0.1,
    })
    crossover_rate: float = 0.3
    tournament_size: int = 3
    elite_count: int = 4
    max_vertices: int = 16
    rng_seed: int = 20240607
    fitness: Fitness = Fitness.TEMP_MINUS_DEG
    hall_size: int = 10

    def validate(self) -> "SearchConfig":
        for attr in ("population_size", "generations", "tournament_size", "elite_count",
                     "max_vertices", "rng_seed", "hall_size"):
            v = getattr(self, attr)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ConfigError(f"{attr} must be an integer, got {v!r}")
        if not isinstance(self.fitness, Fitness):
            raise ConfigError(f"unknown fitness {self.fitness!r}")
        if self.population_size < 2:
            raise ConfigError("population_size must be >= 2")
        if not 0 <= self.elite_count < self.population_size:
            raise ConfigError("elite_count must satisfy 0 <= elite_count < population_size")
        if self.generations < 0:
            raise ConfigError("generations must be >= 0")
        if self.tournament_size < 1:
            raise ConfigError("tournament_size must be >= 1")
        if self.max_vertices < 2:
            raise ConfigError("max_vertices must be >= 2")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ConfigError("crossover_rate must be a probability")
        unknown = set(self.mutation_rates) - set(MUTATIONS)
        if unknown:
            raise ConfigError(f"unknown mutation operators: {sorted(unknown)}")
        rates = [self.mutation_rates.get(m, 0.0) for m in MUTATIONS]
        if any(r < 0 for r in rates) or sum(rates) <= 0:
            raise ConfigError("mutation rates must be non-negative and not all zero")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise ConfigError("rng_seed must be an unsigned 64-bit integer")
        if self.hall_size < 1:
            raise ConfigError("hall_size must be >= 1")
        return self

    def to_dict(self) -> dict:
        out = {}
        for key, attr in _KEYS.items():
            v = getattr(self, attr)
            if attr == "mutation_rates":
                v = {m: v.get(m, 0.0) for m in MUTATIONS}
            elif attr == "fitness":
                v = v.value
            out[key] = v
        return out

    @classmethod
    def from_dict(cls, raw: dict) -> "SearchConfig":
        """Accepts camelCase keys as written by ``to_dict`` or snake_case."""
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        d = {}
        attrs = set(_KEYS.values())
        for k, v in raw.items():
            attr = _KEYS.get(k, k)
            if attr not in attrs:
                raise ConfigError(f"unknown config key {k!r}")
            d[attr] = v
        if "fitness" in d:
            try:
                d["fitness"] = Fitness(d["fitness"])
            except ValueError:
                raise ConfigError(f"unknown fitness {d['fitness']!r}") from None
        if "mutation_rates" in d:
            base = cls().mutation_rates
            base.update(d["mutation_rates"])
            d["mutation_rates"] = base
        try:
            cfg = cls(**d)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc
        return cfg.validate()


# --- genomes ---------------------------------------------------------------

def genome_of(p: Position) -> Genome:
    return to_board(p)[1]


def position_of(g: Genome) -> Position:
    return from_board((0,) * len(g), g)


def _add_edge(adj: list[int], u: int, v: int) -> None:
    adj[u] |= 1 << v
    adj[v] |= 1 << u


def _remove_vertex(adj: Sequence[int], v: int) -> Genome:
    out = []
    for u, m in enumerate(adj):
        if u == v:
            continue
        low = m & ((1 << v) - 1)
        high = (m >> (v + 1)) << v
        out.append(low | high)
    return tuple(out)


def random_connected(rng: random.Random, n: int, extra_edges: int = 0) -> Genome:
    adj = [0] * n
    for v in range(1, n):
        _add_edge(adj, v, rng.randrange(v))
    for _ in range(extra_edges):
        if n >= 2:
            u, v = rng.sample(range(n), 2)
            _add_edge(adj, u, v)
    return tuple(adj)


def mutate(g: Genome, op: str, rng: random.Random, max_vertices: int) -> Genome:
    adj = list(g)
    n = len(adj)
    if op == "edge_toggle" and n >= 2:
        u, v = rng.sample(range(n), 2)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
    elif op == "add_pendant" and 0 < n < max_vertices:
        adj.append(0)
        _add_edge(adj, n, rng.randrange(n))
    elif op == "delete_low_degree" and n > 2:
        low = [v for v in range(n) if bin(adj[v]).count("1") <= 1]
        if low:
            return _remove_vertex(adj, rng.choice(low))
    elif op == "add_joined_vertex" and 0 < n < max_vertices:
        # new vertex joined to a random vertex and, when possible, one more
        adj.append(0)
        for u in rng.sample(range(n), min(2, n)):
            _add_edge(adj, n, u)
    return tuple(adj)


def crossover(a: Genome, b: Genome, rng: random.Random, max_vertices: int) -> Genome:
    """Graft a random induced subgraph of ``b`` onto a random vertex of ``a``."""
    room = max_vertices - len(a)
    if room <= 0 or not a or not b:
        return a
    k = rng.randint(1, min(room, len(b)))
    chosen = sorted(rng.sample(range(len(b)), k))
    idx = {v: i for i, v in enumerate(chosen)}
    adj = list(a) + [0] * k
    base = len(a)
    for v in chosen:
        for u in chosen:
            if u != v and b[v] >> u & 1:
                adj[base + idx[v]] |= 1 << (base + idx[u])
    _add_edge(adj, base + rng.randrange(k), rng.randrange(base))
    return tuple(adj)


# --- fitness ---------------------------------------------------------------

@dataclass(frozen=True)
class Evaluation:
    fitness: Dyadic
    temperature: Dyadic
    degree: int
    second_degree: int


class FitnessCache:
    def __init__(self, kind: Fitness = Fitness.TEMP_MINUS_DEG):
        self.kind = kind
        self._cache: dict[bytes, Evaluation] = {}

    def evaluate(self, p: Position) -> Evaluation:
        key = canonical_key(p)
        ev = self._cache.get(key)
        if ev is None:
            t = position_temperature(p)
            d = degree(p)
            d2 = second_degree(p)
            f = t - d
            if self.kind is Fitness.TEMP_MINUS_DEG_MINUS_HALF_DEG2:
                f = f - Dyadic(d2).half()
            ev = Evaluation(f, t, d, d2)
            self._cache[key] = ev
        return ev

    def __len__(self):
        return len(self._cache)


def fitness(p: Position, cfg: Optional[SearchConfig] = None, cache: Optional[FitnessCache] = None) -> Dyadic:
    kind = cfg.fitness if cfg else Fitness.TEMP_MINUS_DEG
    if cfg is not None and len(p) > cfg.max_vertices:
        raise ConfigError(f"position has {len(p)} vertices, cap is {cfg.max_vertices}")
    cache = cache if cache is not None and cache.kind is kind else FitnessCache(kind)
    return cache.evaluate(p).fitness


# --- hall of fame ----------------------------------------------------------

@dataclass
class HallEntry:
    position: Position
    key: bytes
    evaluation: Evaluation
    generation: int

    def to_dict(self) -> dict:
        ev = self.evaluation
        return {
            "fitness": str(ev.fitness),
            "temperature": str(ev.temperature),
            "degree": ev.degree,
            "secondDegree": ev.second_degree,
            "generation": self.generation,
            "position": position_to_dict(self.position),
        }


@dataclass
class HallOfFame:
    capacity: int = 10
    entries: list[HallEntry] = field(default_factory=list)
    history: list[str] = field(default_factory=list)
    config: Optional[SearchConfig] = None
    generations_run: int = 0

    def offer(self, p: Position, key: bytes, ev: Evaluation, generation: int) -> bool:
        for e in self.entries:
            if e.key == key:
                return False
        if len(self.entries) >= self.capacity and ev.fitness <= self.entries[-1].evaluation.fitness:
            return False
        self.entries.append(HallEntry(p, key, ev, generation))
        # stable: earlier discoveries stay ahead on ties
        self.entries.sort(key=lambda e: -e.evaluation.fitness.to_fraction())
        del self.entries[self.capacity:]
        return True

    @property
    def best(self) -> Optional[HallEntry]:
        return self.entries[0] if self.entries else None

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict() if self.config else None,
            "generationsRun": self.generations_run,
            "bestFitnessHistory": list(self.history),
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def save(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n")


def load_hall_of_fame(path) -> dict:
    return json.loads(Path(path).read_text())


def default_seeds() -> list[Position]:
    return [witness_position()] + [make_star(n) for n in (3, 4, 5)]


def _tournament(rng: random.Random, scored: list[tuple[Genome, Dyadic]], size: int) -> Genome:
    best = None
    for _ in range(size):
        cand = scored[rng.randrange(len(scored))]
        if best is None or cand[1] > best[1]:
            best = cand
    return best[0]


def evolve(cfg: SearchConfig, seeds: Optional[Iterable[Position]] = None,
           resume: Optional[dict] = None,
           progress: Optional[Callable[[int, HallOfFame], None]] = None) -> HallOfFame:
    """Run the GA and return the hall of fame.

    ``resume`` is a previously saved hall-of-fame dict; its entries join the
    seeds and generation numbering continues from it.
    """
    cfg.validate()
    seeds = list(seeds) if seeds is not None else default_seeds()
    start_gen = 0
    history: list[str] = []
    if resume:
        seeds = [position_from_dict(e["position"]) for e in resume.get("entries", [])] + seeds
        start_gen = int(resume.get("generationsRun", 0))
        history = list(resume.get("bestFitnessHistory", []))
    if not seeds:
        raise ConfigError("at least one seed position is required")
    for s in seeds:
        if len(s) > cfg.max_vertices:
            raise ConfigError(f"seed with {len(s)} vertices exceeds max_vertices")

    rng = random.Random(cfg.rng_seed)
    cache = FitnessCache(cfg.fitness)
    hall = HallOfFame(capacity=cfg.hall_size, config=cfg, history=history)
    ops = list(MUTATIONS)
    weights = [cfg.mutation_rates.get(m, 0.0) for m in ops]

    population: list[Genome] = [genome_of(s) for s in seeds][: cfg.population_size]
    while len(population) < cfg.population_size:
        n = rng.randint(2, min(8, cfg.max_vertices))
        population.append(random_connected(rng, n, rng.randint(0, 2)))

    def score(pop: list[Genome], gen: int) -> list[tuple[Genome, Dyadic]]:
        scored = []
        for g in pop:
            p = position_of(g)
            ev = cache.evaluate(p)
            hall.offer(p, canonical_key(p), ev, gen)
            scored.append((g, ev.fitness))
        return scored

    scored = score(population, start_gen)
    hall.history.append(str(hall.best.evaluation.fitness))
    if progress:
        progress(start_gen, hall)
    for gen in range(start_gen + 1, start_gen + cfg.generations + 1):
        ranked = sorted(scored, key=lambda gf: -gf[1].to_fraction())
        nxt = [g for g, _ in ranked[: cfg.elite_count]]
        while len(nxt) < cfg.population_size:
            parent = _tournament(rng, scored, cfg.tournament_size)
            if rng.random() < cfg.crossover_rate:
                other = _tournament(rng, scored, cfg.tournament_size)
                child = crossover(parent, other, rng, cfg.max_vertices)
            else:
                child = parent
            op = rng.choices(ops, weights)[0]
            child = mutate(child, op, rng, cfg.max_vertices)
            nxt.append(child)
        scored = score(nxt, gen)
        hall.history.append(str(hall.best.evaluation.fitness))
        if progress:
            progress(gen, hall)
    hall.generations_run = start_gen + cfg.generations
    return hall


# --- conjecture monitor ----------------------------------------------------

@dataclass
class ConjectureRow:
    name: str
    temperature: Dyadic
    degree: int
    second_degree: int

    @property
    def bound(self) -> Dyadic:
        return Dyadic(self.degree) + Dyadic(self.second_degree).half()

    @property
    def margin(self) -> Dyadic:
        return self.bound - self.temperature

    @property
    def holds(self) -> bool:
        return self.margin >= 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "temperature": str(self.temperature),
            "degree": self.degree,
            "secondDegree": self.second_degree,
            "bound": str(self.bound),
            "margin": str(self.margin),
            "holds": self.holds,
        }


def check_conjecture(positions: Iterable, names: Optional[Iterable[str]] = None) -> list[ConjectureRow]:
    """``t <= deg + deg2/2`` per position; violations are logged at ERROR."""
    positions = list(positions)
    names = list(names) if names is not None else [f"#{i}" for i in range(len(positions))]
    rows = []
    for name, p in zip(names, positions):
        row = ConjectureRow(name, position_temperature(p), degree(p), second_degree(p))
        if not row.holds:
            log.error("CONJECTURE VIOLATION: %s has t=%s > deg + deg2/2 = %s",
                      name, row.temperature, row.bound)
        rows.append(row)
    return rows


def format_conjecture(rows: list[ConjectureRow]) -> str:
    lines = []
    for r in rows:
        flag = "ok" if r.holds else "VIOLATION"
        lines.append(f"{r.name}: t={r.temperature} deg={r.degree} deg2={r.second_degree} "
                     f"bound={r.bound} margin={r.margin} {flag}")
    return "\n".join(lines)
