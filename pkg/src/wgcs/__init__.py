"""Cyclotomic sequences of order six over two primes, their linear complexity and cyclic codes."""

from .cyclotomy import whiteman, valid_pairs
from .sequence import wgcs1, wgcs2, PeriodicSequence
from .codes import CyclicCode, code_from_sequence, wgcs_code, theoretical_generator
from .verify import AnalysisReport, analyze, all_checks

__all__ = [
    "whiteman", "valid_pairs", "wgcs1", "wgcs2", "PeriodicSequence", "CyclicCode",
    "code_from_sequence", "wgcs_code", "theoretical_generator", "AnalysisReport", "analyze", "all_checks",
]
