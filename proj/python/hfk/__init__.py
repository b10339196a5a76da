from ._core import HfkError, alexander, check_invariance, compute, parse_braid, relations

__all__ = ["HfkError", "alexander", "check_invariance", "compute", "parse_braid", "relations"]
