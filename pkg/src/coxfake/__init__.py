"""Fake degrees of finite reflection groups acting on their roots."""

from .qpoly import IntPoly, q_int, q_int_scaled
from .rootsys import GroupType, parse_type, root_system
from .fakedeg import fakedeg_bfs, fakedeg_quotient, verify_all

__all__ = [
    "IntPoly",
    "q_int",
    "q_int_scaled",
    "GroupType",
    "parse_type",
    "root_system",
    "fakedeg_bfs",
    "fakedeg_quotient",
    "verify_all",
]
