"""Step-by-step record of a proof-guided search."""

from __future__ import annotations

import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..patterns import PathWitness

# branch labels
CRITICAL = "CRITICAL"
EXTERNAL = "EXTERNAL"
BASE = "BASE"
RECURSE_H = "RECURSE_H"
TOURNAMENT_HPRIME = "TOURNAMENT_HPRIME"
SPLIT = "SPLIT"
RETURN = "RETURN"
RESTART = "RESTART"
CLAIM = "CLAIM"
TOURNAMENT = "TOURNAMENT"
REDUCE = "REDUCE"


@dataclass
class TraceStep:
    step: int
    branch: str
    anchor: str
    sets: dict[str, list[int]] = field(default_factory=dict)
    params: dict[str, int] = field(default_factory=dict)
    path_so_far: list[int] = field(default_factory=list)
    external: bool = False
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "step": self.step,
            "branch": self.branch,
            "sets": self.sets,
            "anchor": self.anchor,
            "path_so_far": self.path_so_far,
        }
        if self.params:
            out["params"] = self.params
        if self.external:
            out["external"] = True
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ProofTrace:
    """Steps in host labels. ``scope`` holds the current local-to-host map
    so finders working inside a relabelled subdigraph record host ids."""

    finder: str
    steps: list[TraceStep] = field(default_factory=list)
    outcome: Optional[PathWitness] = None
    scope: Optional[Sequence[int]] = field(default=None, repr=False)

    def _host(self, vs) -> list[int]:
        vs = list(vs)
        if self.scope is None:
            return [int(v) for v in vs]
        return [int(self.scope[v]) for v in vs]

    def add(
        self,
        branch: str,
        anchor: str,
        sets: Optional[dict] = None,
        params: Optional[dict] = None,
        path: Sequence[int] = (),
        external: bool = False,
        note: str = "",
    ) -> TraceStep:
        st = TraceStep(
            step=len(self.steps),
            branch=branch,
            anchor=anchor,
            sets={k: sorted(self._host(v)) if isinstance(v, (set, frozenset)) else self._host(v)
                  for k, v in (sets or {}).items()},
            params=dict(params or {}),
            path_so_far=self._host(path),
            external=external,
            note=note,
        )
        self.steps.append(st)
        return st

    @contextmanager
    def within(self, mapping: Sequence[int]):
        """Record steps of a sub-search whose vertex ``v`` is ``mapping[v]`` here."""
        old = self.scope
        self.scope = list(mapping) if old is None else [old[v] for v in mapping]
        try:
            yield
        finally:
            self.scope = old

    def branches(self) -> list[str]:
        return [s.branch for s in self.steps]

    def to_json(self) -> dict:
        return {
            "finder": self.finder,
            "steps": [s.to_json() for s in self.steps],
            "outcome": self.outcome.to_json() if self.outcome else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def jsonl(self) -> str:
        return "\n".join(json.dumps(s.to_json(), sort_keys=True) for s in self.steps)
