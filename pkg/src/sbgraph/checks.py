"""Cross-checks of the fast paths against their oracles.

Used by the CLI oracle subcommand and handy when hunting for
counterexamples: on a mismatch the offending graph is shrunk greedily to
a minimal witness that still mismatches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import (
    oracle_two_edge_biconnected_blocks,
    two_edge_biconnected_blocks,
)
from .connectivity import is_strongly_biconnected
from .errors import GraphError, GuardError
from .graph import remove_edge, remove_vertex
from .sbc import sbc_oracle, strongly_biconnected_components


@dataclass(frozen=True)
class OracleCheckReport:
    passed: bool
    failure: str | None = None
    witness: object = None

    def describe(self):
        if self.passed:
            return "ok: fast paths agree with their oracles"
        w = self.witness
        return (
            f"MISMATCH in {self.failure}; minimized witness: n={w.n} "
            f"edges={list(w.edges)}"
        )


def _sbc_mismatch(g, guard):
    if g.n > guard:
        return False
    fast = strongly_biconnected_components(g).components
    slow = sbc_oracle(g, guard=guard).components
    return fast != slow


def _blocks_mismatch(g, guard):
    if g.n > guard or not is_strongly_biconnected(g):
        return False
    return two_edge_biconnected_blocks(g) != oracle_two_edge_biconnected_blocks(
        g, guard=guard
    )


def _minimize(g, mismatch):
    """Greedily drop edges, then vertices, while the mismatch persists."""
    shrunk = True
    while shrunk:
        shrunk = False
        for e in list(g.edges):
            try:
                h = remove_edge(g, e)
                if mismatch(h):
                    g = h
                    shrunk = True
                    break
            except GraphError:
                continue
        if shrunk:
            continue
        for v in range(g.n):
            try:
                h, _ = remove_vertex(g, v)
                if mismatch(h):
                    g = h
                    shrunk = True
                    break
            except GraphError:
                continue
    return g


def oracle_check(g, guard=12, clique_guard=24):
    """Compare the refinement SBC decomposition with the enumeration
    oracle, and the helper-graph block algorithm with the clique oracle.

    Returns a report; on the first mismatch the witness graph is shrunk
    to a minimal failing example.
    """
    if g.n > guard or g.n > clique_guard:
        raise GuardError(
            f"oracle_check requires n <= {min(guard, clique_guard)}, got "
            f"n={g.n}; raise the guard explicitly to override"
        )
    if _sbc_mismatch(g, guard):
        witness = _minimize(g, lambda h: _sbc_mismatch(h, guard))
        return OracleCheckReport(
            passed=False, failure="sbc refinement vs enumeration oracle",
            witness=witness,
        )
    if _blocks_mismatch(g, clique_guard):
        witness = _minimize(g, lambda h: _blocks_mismatch(h, clique_guard))
        return OracleCheckReport(
            passed=False,
            failure="helper-graph blocks vs maximal-clique oracle",
            witness=witness,
        )
    return OracleCheckReport(passed=True)
