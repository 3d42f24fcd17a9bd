"""Size caps for the exponential routines.

Defaults can be overridden with the ``GBEI_CAPS`` environment variable, a
comma separated list of ``name=value`` pairs, e.g.
``GBEI_CAPS="oracle_vars=16,gb_timeout=300"``.
"""

import os
from dataclasses import dataclass, fields, replace

from .errors import CapExceeded


@dataclass(frozen=True)
class Caps:
    brute_connectivity: int = 12
    cutsets: int = 16
    h2: int = 10
    strongly_unmixed: int = 12
    cliques: int = 32
    gb_generators: int = 60
    gb_variables: int = 16
    gb_timeout: float = 60.0
    oracle_vars: int = 15
    homology_subset: int = 15


def parse_caps(text, base=None):
    base = base or Caps()
    if not text:
        return base
    known = {f.name: f.type for f in fields(Caps)}
    updates = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in known:
            raise ValueError(f"bad GBEI_CAPS entry {item!r}")
        updates[name] = float(value) if name == "gb_timeout" else int(value)
    return replace(base, **updates)


def get_caps():
    return parse_caps(os.environ.get("GBEI_CAPS", ""))


def check_cap(what, size, cap):
    if size > cap:
        raise CapExceeded(what, size, cap)
