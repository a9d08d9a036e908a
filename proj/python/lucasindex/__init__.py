try:
    from ._lucasindex import *  # noqa: F401,F403
except ImportError:  # in-tree builds put the extension directly on sys.path
    from _lucasindex import *  # noqa: F401,F403

__all__ = [
    "artin_constant",
    "decompose",
    "gu_table",
    "delta",
    "delta_table",
    "delta_series",
    "rank_of_appearance",
    "index_of_appearance",
    "scan",
    "compare",
]
