"""Micro-scale cross-checking of the fast operations against naive oracles.

Enumerates every coloring of K_n with m colors when the space is small
enough (m^C(n,2) at most the sample budget), otherwise checks a seeded
random sample of that size.  Any disagreement is reported with the exact
coloring that produced it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from .core import ColoredComplete, restrict
from .connectivity import largest_k_connected, vertex_connectivity
from .oracles import (
    oracle_largest_k_connected,
    oracle_longest_path_order,
    oracle_rainbow_exists,
    oracle_vertex_connectivity,
)
from .paths import longest_mono_path
from .patterns import parse_pattern
from .rainbow import find_rainbow, validate_embedding

SAMPLE_BUDGET = 100_000

_FULL_PATTERNS = ["P3", "K3", "P4", "2K2", "K1_3"]
_SAMPLED_PATTERNS = ["P3", "K3", "2K2"]


@dataclass
class CrosscheckReport:
    max_n: int
    max_m: int
    mode: str  # "full" or "sampled"
    colorings: int = 0
    comparisons: int = 0
    mismatches: list = field(default_factory=list)
    millis: int = 0
    seed: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_m": self.max_m,
            "mode": self.mode,
            "colorings": self.colorings,
            "comparisons": self.comparisons,
            "mismatches": self.mismatches[:10],
            "ok": self.ok,
            "millis": self.millis,
            "seed": self.seed,
        }


def _check_host(host: ColoredComplete, patterns, ks, lkc_masks, report) -> None:
    note = report.mismatches.append
    colors = tuple(host._colors)
    for pat in patterns:
        emb = find_rainbow(host, pat)
        if emb is not None:
            validate_embedding(host, pat, emb.mapping)
        fast = emb is not None
        slow = oracle_rainbow_exists(host, pat)
        report.comparisons += 1
        if fast != slow:
            note(("rainbow", pat.canonical_name, colors, fast, slow))
    used = sorted(host.used_colors())
    per_color = {c: restrict(host, {c}) for c in used}
    for c in used:
        g = per_color[c]
        fast = vertex_connectivity(g)
        slow = oracle_vertex_connectivity(g)
        report.comparisons += 1
        if fast != slow:
            note(("kappa", c, colors, fast, slow))
        wit = longest_mono_path(host, c)
        slow_len = oracle_longest_path_order(g)
        report.comparisons += 1
        if not wit.exact or wit.order != slow_len:
            note(("path", c, colors, wit.order, slow_len))
    for mask in lkc_masks:
        mask = frozenset(mask) & set(used)
        if not mask:
            continue
        for k in ks:
            rep = largest_k_connected(host, mask, k, mode="exact")
            slow = oracle_largest_k_connected(restrict(host, mask), k)
            report.comparisons += 1
            if rep.lower != slow or rep.upper != slow:
                note(("lkc", sorted(mask), k, colors, rep.lower, slow))


def micro_crosscheck(max_n: int, max_m: int, seed: int = 0, budget: int = SAMPLE_BUDGET) -> CrosscheckReport:
    """Cross-check rainbow detection, vertex connectivity, exact
    largest-k-connected search, and longest monochromatic paths against
    brute-force oracles over all (or ``budget`` sampled) colorings."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    n, m = max_n, max_m
    pairs = n * (n - 1) // 2
    space = m**pairs
    start = time.monotonic()
    full = space <= budget
    report = CrosscheckReport(n, m, "full" if full else "sampled", seed=seed)
    names = _FULL_PATTERNS if full else _SAMPLED_PATTERNS
    patterns = [parse_pattern(s) for s in names if parse_pattern(s).order <= n]
    if full:
        ks = [1, 2, 3]
        for colors in product(range(1, m + 1), repeat=pairs):
            host = ColoredComplete(n, m, colors)
            masks = [{c} for c in sorted(host.used_colors())]
            if m >= 2:
                masks.append({1, 2})
            _check_host(host, patterns, ks, masks, report)
            report.colorings += 1
    else:
        rng = random.Random(seed)
        for i in range(budget):
            colors = tuple(rng.randint(1, m) for _ in range(pairs))
            host = ColoredComplete(n, m, colors)
            # rotate the heavier largest-k-connected check across colors
            mask = {(i % m) + 1}
            _check_host(host, patterns, [1, 2], [mask], report)
            report.colorings += 1
    report.millis = int((time.monotonic() - start) * 1000)
    return report
