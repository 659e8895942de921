"""Static catalogs: the type table and the quick-example list."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .rootdata import TYPE_TAGS, root_datum

SUGGESTED_BOUND = {2: 5, 3: 2}


def type_catalog() -> list[dict]:
    entries = []
    for tag in TYPE_TAGS:
        datum = root_datum(tag)
        entries.append(
            {
                "tag": tag,
                "rank": datum.rank,
                "suggested_bound": SUGGESTED_BOUND[datum.rank],
                "generator_indices": list(range(datum.num_generators)),
                "spherical_generator_indices": list(datum.finite_generators),
            }
        )
    return entries


@lru_cache(maxsize=None)
def quick_examples() -> tuple[dict, ...]:
    raw = json.loads(resources.files("alcoves.data").joinpath("quick_examples.json").read_text())
    return tuple(raw["examples"])
