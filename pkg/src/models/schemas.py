from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import List, Optional, Dict, Tuple, FrozenSet
from enum import Enum


class Monomial(BaseModel):
    """A monomial x_1^{e_1}...x_n^{e_n} stored as a dense exponent vector."""

    model_config = ConfigDict(frozen=True)

    exps: Tuple[int, ...]

    @field_validator("exps")
    @classmethod
    def _non_negative(cls, exps: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(e < 0 for e in exps):
            raise ValueError(f"exponents must be non-negative, got {exps}")
        return exps

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> Tuple[int, ...]:
        """1-based labels of the variables dividing this monomial."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls(exps=(0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Monomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside universe of {n} variables")
        return cls(exps=tuple(1 if k == i - 1 else 0 for k in range(n)))

    @classmethod
    def from_support(cls, labels, n: int) -> "Monomial":
        """Squarefree monomial whose support is the given 1-based labels."""
        chosen = set(labels)
        if any(not 1 <= i <= n for i in chosen):
            raise ValueError(f"labels {sorted(chosen)} outside universe of {n} variables")
        return cls(exps=tuple(1 if k + 1 in chosen else 0 for k in range(n)))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        return "*".join(factors) if factors else "1"


MonomialSet = FrozenSet[Monomial]


class Graph(BaseModel):
    """Simple undirected graph on a subset of the labels 1..n.

    ``n`` is the size of the variable universe and never shrinks; deleting
    vertices removes them from ``vertices`` but keeps every label stable.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    vertices: FrozenSet[int]
    edges: FrozenSet[Tuple[int, int]]

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data):
        if isinstance(data, dict):
            data = dict(data)
            if data.get("vertices") is None:
                data["vertices"] = range(1, int(data.get("n", 0)) + 1)
            data["vertices"] = frozenset(int(v) for v in data["vertices"])
            normalized = set()
            for edge in data.get("edges", ()):
                i, j = (int(x) for x in edge)
                normalized.add((min(i, j), max(i, j)))
            data["edges"] = frozenset(normalized)
        return data

    @model_validator(mode="after")
    def _check_edges(self) -> "Graph":
        for v in self.vertices:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside labels 1..{self.n}")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i not in self.vertices or j not in self.vertices:
                raise ValueError(f"edge {{{i}, {j}}} uses a vertex not in the graph")
        return self

    @property
    def has_edges(self) -> bool:
        return bool(self.edges)

    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj: Dict[int, set] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}


class Provenance(str, Enum):
    PATH_ROOTED = "path-rooted"
    CHORDAL_ROOTED = "chordal-rooted"
    CUSTOM = "custom"


class GeneratorList(BaseModel):
    """An ordered list of distinct monomials u_1 > u_2 > ... > u_q."""

    model_config = ConfigDict(frozen=True)

    gens: Tuple[Monomial, ...]
    provenance: Provenance = Provenance.CUSTOM
    universe: int = Field(ge=0)
    source: Optional[str] = None
    trace: Optional[Tuple[Tuple[int, ...], ...]] = None

    @model_validator(mode="after")
    def _check_gens(self) -> "GeneratorList":
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("generator list contains duplicate monomials")
        for m in self.gens:
            if m.n != self.universe:
                raise ValueError(f"generator {m} does not live in {self.universe} variables")
        return self

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, index: int) -> Monomial:
        return self.gens[index]

    def labels(self) -> List[str]:
        return [str(m) for m in self.gens]


class Expression(BaseModel):
    """Count vector (a_1, ..., a_q) of one s-fold factorization."""

    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]

    @field_validator("counts")
    @classmethod
    def _non_negative(cls, counts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(a < 0 for a in counts):
            raise ValueError(f"counts must be non-negative, got {counts}")
        return counts

    @property
    def s(self) -> int:
        return sum(self.counts)

    @property
    def factors(self) -> Tuple[int, ...]:
        """Non-decreasing 1-based generator indices i_1 <= ... <= i_s."""
        return tuple(i + 1 for i, a in enumerate(self.counts) for _ in range(a))

    @property
    def used(self) -> Tuple[int, ...]:
        """1-based indices with positive count."""
        return tuple(i + 1 for i, a in enumerate(self.counts) if a)

    @classmethod
    def from_factors(cls, factors, q: int) -> "Expression":
        counts = [0] * q
        for i in factors:
            counts[i - 1] += 1
        return cls(counts=tuple(counts))


class Ordering(str, Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"


class ChooserStrategy(str, Enum):
    CANONICAL = "canonical"
    LARGEST = "largest"
    ENUMERATE_ALL = "enumerate-all"
    SCRIPT = "script"


class ChordalChooser(BaseModel):
    model_config = ConfigDict(frozen=True)

    strategy: ChooserStrategy = ChooserStrategy.CANONICAL
    script: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _script_needs_labels(self) -> "ChordalChooser":
        if self.strategy == ChooserStrategy.SCRIPT and not self.script:
            raise ValueError("script chooser requires at least one vertex label")
        return self


class RootedListBatch(BaseModel):
    lists: List[GeneratorList]
    truncated: bool = False


class Method(str, Enum):
    BRUTE = "brute"
    PAIRS = "pairs"


class PowerGens(BaseModel):
    """F(I^s) and G(I^s) for the ideal generated by ``base``."""

    model_config = ConfigDict(frozen=True)

    base: GeneratorList
    s: int = Field(ge=1)
    all_products: FrozenSet[Monomial]
    minimal: FrozenSet[Monomial]
    method: Method
    ranked: Tuple[Monomial, ...] = ()
    expressions: Dict[Monomial, Expression] = {}
    excluded_multiset_count: int = 0

    @model_validator(mode="after")
    def _minimal_inside_products(self) -> "PowerGens":
        if not self.minimal <= self.all_products:
            raise ValueError("minimal generators must be s-fold products")
        return self

    @property
    def max_degree(self) -> int:
        return max((m.degree for m in self.minimal), default=0)


class BadPairTable(BaseModel):
    """1-based index pairs (p, q), p <= q, with u_p u_q not minimal in I^2."""

    model_config = ConfigDict(frozen=True)

    base: GeneratorList
    pairs: FrozenSet[Tuple[int, int]]

    def is_bad(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.pairs


class PowerRecord(BaseModel):
    n: int
    source: Optional[str] = None
    s: int
    method: Method
    count: int
    max_degree: int
    excluded_multiset_count: int
    elapsed_ms: Optional[float] = None


class LqStep(BaseModel):
    r: int
    colon_vars: List[int]
    raw_colon_count: int
    colon_gens: Optional[List[str]] = None


class LqReport(BaseModel):
    ordered: GeneratorList
    verdict: bool
    failure_index: Optional[int] = None
    steps: List[LqStep] = []

    @model_validator(mode="after")
    def _verdict_matches_failure(self) -> "LqReport":
        if self.verdict != (self.failure_index is None):
            raise ValueError("verdict must be true exactly when no failure index is recorded")
        return self

    def to_payload(self) -> dict:
        payload = {"verdict": self.verdict}
        if self.failure_index is not None:
            payload["failure_index"] = self.failure_index
        payload["steps"] = [
            step.model_dump(exclude_none=True) for step in self.steps
        ]
        return payload


class RegularityReport(BaseModel):
    formula: int
    max_degree: int
    match: bool
    assumption: str = (
        "componentwise linear ideals have regularity equal to their maximal "
        "generator degree; linear quotients imply componentwise linearity"
    )


class ClauseResult(BaseModel):
    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[str] = None
    witnesses: List[List[int]] = []


class LemmaReport(BaseModel):
    n: int
    s: int
    passed: bool
    clauses: List[ClauseResult]


class ExploreSummary(str, Enum):
    ALL_PASS = "all-pass"
    FOUND_ORDER = "found-order-passing-all-s"
    COUNTEREXAMPLE = "counterexample-candidate"
    INCONCLUSIVE = "inconclusive"


class Trial(BaseModel):
    list_index: int
    chooser: List[List[int]]
    s: int
    f_equals_g: Optional[bool] = None
    lq_verdict: Optional[bool] = None
    failure_index: Optional[int] = None
    smart_claim: Optional[bool] = None
    skipped: bool = False
    skip_reason: Optional[str] = None

    @model_validator(mode="after")
    def _verdict_needs_f_equals_g(self) -> "Trial":
        if self.lq_verdict is not None and self.f_equals_g is None:
            raise ValueError("a trial cannot report lq_verdict without f_equals_g")
        if self.skipped and self.lq_verdict is not None:
            raise ValueError("a skipped trial carries no verdict")
        return self

    @property
    def passed(self) -> bool:
        return self.lq_verdict is True


class CharacterizationCheck(BaseModel):
    s: int
    agrees: Optional[bool] = None


class ExploreReport(BaseModel):
    graph: Graph
    max_s: int
    cap: int
    lists_enumerated: int
    truncated: bool
    trials: List[Trial]
    characterization: List[CharacterizationCheck] = []
    summary: ExploreSummary
    errors: List[str] = []

    def to_payload(self) -> dict:
        return {
            "graph": {
                "n": self.graph.n,
                "edges": sorted([list(e) for e in self.graph.edges]),
            },
            "max_s": self.max_s,
            "cap": self.cap,
            "lists_enumerated": self.lists_enumerated,
            "truncated": self.truncated,
            "trials": [t.model_dump() for t in self.trials],
            "characterization": [c.model_dump() for c in self.characterization],
            "summary": self.summary.value,
            "errors": self.errors,
        }
