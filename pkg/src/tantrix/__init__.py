"""Tantrix rotation puzzles: exact solving and counting, and a parsimonious
reduction from boolean circuits and CNF formulas to puzzle instances."""

from .circuit import CNF, And, Circuit, Input, Not, cnf_to_circuit, count_sat, evaluate, parse_dimacs
from .compiler import CompiledPuzzle, compile, extract_assignment, reduce_sat, schedule
from .gadgets import GadgetSpec, load_library, verify_gadget
from .hexgrid import Coord
from .instance import Instance, Solution, check_solution, parse_instance, serialize_instance
from .solver import brute_force_count, count_solutions, decide, enumerate_solutions, is_unique, solve
from .tiles import CATALOGUE, canonicalize, enumerate_catalogue

__version__ = "0.1.0"
