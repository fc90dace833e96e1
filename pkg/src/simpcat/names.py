"""Deterministic ordering and canonical labels for simplex / object names.

Names are ints, strings, or (nested) tuples of those.  Quotient
constructions pick the least class member under `sort_key`, so every
operation in the package is reproducible run to run.
"""


def sort_key(name):
    """Total order on the heterogeneous name universe."""
    if isinstance(name, bool):
        return (0, int(name))
    if isinstance(name, int):
        return (0, name)
    if isinstance(name, str):
        return (1, name)
    if isinstance(name, tuple):
        return (2, tuple(sort_key(part) for part in name))
    raise TypeError(f"unsupported name type: {type(name).__name__}")


def least(names):
    return min(names, key=sort_key)


def name_str(name):
    """Flat string form used by the document serializer."""
    if isinstance(name, tuple):
        return "(" + ",".join(name_str(part) for part in name) + ")"
    return str(name)
