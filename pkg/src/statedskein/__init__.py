"""Exact Kauffman-bracket and stated skein computations."""

from .bigon import StatedTangle, evaluate, evaluate_basis, inv_edge, monogon_eval, stack
from .cutting import cut_state_sum, disk_module, half_ideal_slit
from .hh0 import CommutatorSpan, Verdict, core_loop_value, tau
from .oq import OqElement, PBWMonomial, antipode, coproduct, counit, nf
from .ring import CyclotomicSpec, HalfLaurent, quantum_int
from .tl import Matching, Slice, SliceWord, TLElement, jones_wenzl, resolve

__all__ = [
    "CommutatorSpan",
    "CyclotomicSpec",
    "HalfLaurent",
    "Matching",
    "OqElement",
    "PBWMonomial",
    "Slice",
    "SliceWord",
    "StatedTangle",
    "TLElement",
    "Verdict",
    "antipode",
    "coproduct",
    "core_loop_value",
    "counit",
    "cut_state_sum",
    "disk_module",
    "evaluate",
    "evaluate_basis",
    "half_ideal_slit",
    "inv_edge",
    "jones_wenzl",
    "monogon_eval",
    "nf",
    "quantum_int",
    "resolve",
    "stack",
    "tau",
]
