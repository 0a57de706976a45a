"""Empirical distributions and uniformity checks for sampler validation."""

from __future__ import annotations

import json
from collections import Counter
from typing import Callable, Iterable, Mapping, NamedTuple

from scipy import stats as _sps

from hypersample.core import as_generator


def encoding(x) -> str:
    """Canonical string key for hypergraphs, bipartite graphs and plain values."""
    enc = getattr(x, "encode", None)
    if callable(enc) and not isinstance(x, (str, bytes)):
        return enc()
    return str(x)


def empirical_distribution(sampler: Callable, draws: int, rng) -> Counter:
    """Histogram of ``draws`` calls to ``sampler(rng)`` keyed by canonical encoding.

    Histograms from independent runs merge with ``+``.
    """
    if draws < 1:
        raise ValueError("draws must be >= 1")
    rng = as_generator(rng)
    return Counter(encoding(sampler(rng)) for _ in range(draws))


def uniform(keys: Iterable) -> dict:
    keys = [encoding(k) for k in keys]
    return {k: 1 / len(keys) for k in keys}


def normalize(hist: Mapping) -> dict:
    total = sum(hist.values())
    return {k: v / total for k, v in hist.items()}


def tv_distance(hist: Mapping, reference: Mapping) -> float:
    """Half the L1 distance between the normalised ``hist`` and ``reference``."""
    p = normalize(hist)
    keys = set(p) | set(reference)
    return 0.5 * sum(abs(p.get(x, 0.0) - reference.get(x, 0.0)) for x in keys)


class ChiSquare(NamedTuple):
    statistic: float
    p_value: float
    low_expected_count: bool


def chi_square_uniformity(hist: Mapping, states: int) -> ChiSquare:
    """Pearson test of ``hist`` against uniform over ``states`` cells.

    Cells absent from ``hist`` count as zero. The p-value is the exact
    chi-square upper tail with ``states - 1`` degrees of freedom. The flag
    is set when the expected count per cell is below 5.
    """
    if states < 2:
        raise ValueError("need at least 2 states")
    counts = list(hist.values())
    if len(counts) > states:
        raise ValueError("histogram has more cells than states")
    counts += [0] * (states - len(counts))
    total = sum(counts)
    expected = total / states
    stat = sum((c - expected) ** 2 for c in counts) / expected
    return ChiSquare(stat, float(_sps.chi2.sf(stat, states - 1)), expected < 5)


def histogram_to_json(hist: Mapping) -> str:
    return json.dumps(dict(sorted(hist.items())))


def histogram_from_json(text: str) -> Counter:
    return Counter({k: int(v) for k, v in json.loads(text).items()})
