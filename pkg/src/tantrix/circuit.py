"""Boolean circuits over AND/NOT, DIMACS CNF input and the CNF lowering.

A circuit is an instruction sequence a_1..a_m.  The first n instructions are
the inputs; every later one is ``And(j, k)`` or ``Not(j)`` with
``j <= k < i`` (1-based).  The last instruction is the output.

Circuit text format::

    n 2
    and 1 2
    not 3
"""

import itertools
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple, Union

from .errors import CircuitError, EmptyClause, HeaderMismatch, LengthMismatch, ParseError, TooLarge

DEFAULT_LIMIT = 20


class Input(NamedTuple):
    i: int


class And(NamedTuple):
    j: int
    k: int


class Not(NamedTuple):
    j: int


Instruction = Union[Input, And, Not]


@dataclass(frozen=True)
class Circuit:
    n: int
    instructions: Tuple[Instruction, ...]

    def __post_init__(self):
        object.__setattr__(self, "instructions", tuple(self.instructions))
        problems = circuit_problems(self)
        if problems:
            raise CircuitError("; ".join(problems))

    @classmethod
    def build(cls, n: int, gates: Sequence[Instruction] = ()) -> "Circuit":
        """Inputs 1..n followed by ``gates``."""
        return cls(n, tuple(Input(i) for i in range(1, n + 1)) + tuple(gates))

    @property
    def output(self) -> int:
        return len(self.instructions)

    def __len__(self):
        return len(self.instructions)

    def gates(self):
        """``(index, instruction)`` for every non-input instruction."""
        return [(i, g) for i, g in enumerate(self.instructions, 1) if i > self.n]

    def operands(self, i) -> Tuple[int, ...]:
        g = self.instructions[i - 1]
        if isinstance(g, And):
            return (g.j, g.k)
        if isinstance(g, Not):
            return (g.j,)
        return ()


def circuit_problems(c: Circuit) -> List[str]:
    """Violations of the normal form; empty when the circuit is valid."""
    out = []
    if c.n < 1:
        out.append("a circuit needs at least one input")
    if len(c.instructions) < max(c.n, 1):
        out.append(f"{len(c.instructions)} instructions for {c.n} inputs")
    for i, g in enumerate(c.instructions, 1):
        if i <= c.n:
            if type(g) is not Input or g.i != i:
                out.append(f"instruction {i} must be Input({i})")
            continue
        if isinstance(g, And):
            if not 1 <= g.j <= g.k < i:
                out.append(f"instruction {i}: AND({g.j},{g.k}) breaks j <= k < i")
        elif isinstance(g, Not):
            if not 1 <= g.j < i:
                out.append(f"instruction {i}: NOT({g.j}) breaks j < i")
        else:
            out.append(f"instruction {i}: unexpected {g!r}")
    return out


def evaluate(c: Circuit, a: Sequence[bool]) -> bool:
    if len(a) != c.n:
        raise LengthMismatch(f"assignment has {len(a)} values, circuit has {c.n} inputs")
    val = [False]
    for i, g in enumerate(c.instructions, 1):
        if isinstance(g, Input):
            val.append(bool(a[g.i - 1]))
        elif isinstance(g, And):
            val.append(val[g.j] and val[g.k])
        else:
            val.append(not val[g.j])
    return val[c.output]


def assignments(n: int):
    """All 2**n assignments, (False, ..., False) first."""
    return itertools.product((False, True), repeat=n)


def count_sat(c: Circuit, limit: int = DEFAULT_LIMIT) -> int:
    if c.n > limit:
        raise TooLarge(f"{c.n} inputs exceed the brute-force limit of {limit}")
    return sum(evaluate(c, a) for a in assignments(c.n))


def satisfying_assignments(c: Circuit, limit: int = DEFAULT_LIMIT):
    if c.n > limit:
        raise TooLarge(f"{c.n} inputs exceed the brute-force limit of {limit}")
    return [a for a in assignments(c.n) if evaluate(c, a)]


# -- circuit text format ----------------------------------------------------


def parse_circuit(text: str) -> Circuit:
    n = None
    gates = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split("#", 1)[0].split()
        if not fields:
            continue
        try:
            args = [int(f) for f in fields[1:]]
        except ValueError:
            raise ParseError(f"expected integers in {line.strip()!r}", lineno) from None
        head = fields[0]
        if head == "n" and len(args) == 1 and n is None:
            n = args[0]
        elif n is None:
            raise ParseError("circuit must start with 'n <N>'", lineno)
        elif head == "and" and len(args) == 2:
            gates.append(And(*args))
        elif head == "not" and len(args) == 1:
            gates.append(Not(*args))
        else:
            raise ParseError(f"bad instruction {line.strip()!r}", lineno)
    if n is None:
        raise ParseError("missing 'n <N>' header")
    try:
        return Circuit.build(n, gates)
    except CircuitError as exc:
        raise ParseError(str(exc)) from None


def serialize_circuit(c: Circuit) -> str:
    lines = [f"n {c.n}"]
    for _, g in c.gates():
        if isinstance(g, And):
            lines.append(f"and {g.j} {g.k}")
        else:
            lines.append(f"not {g.j}")
    return "".join(line + "\n" for line in lines)


# -- CNF ----------------------------------------------------------------------


@dataclass(frozen=True)
class CNF:
    num_vars: int
    clauses: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in cl) for cl in self.clauses)
        for cl in clauses:
            if not cl:
                raise EmptyClause("empty clause")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise HeaderMismatch(f"literal {lit} outside 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)


def parse_dimacs(text: str) -> CNF:
    header = None
    clauses = []
    current = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        if fields[0] == "%":  # SATLIB end marker
            break
        if fields[0] == "p":
            if header is not None:
                raise ParseError("second 'p' line", lineno)
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError("header must be 'p cnf V C'", lineno)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if min(header) < 0:
                raise ParseError("header counts must be nonnegative", lineno)
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for f in fields:
            try:
                lit = int(f)
            except ValueError:
                raise ParseError(f"bad literal {f!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise EmptyClause("empty clause", lineno)
                clauses.append(tuple(current))
                current = []
                continue
            if abs(lit) > header[0]:
                raise HeaderMismatch(f"literal {lit} exceeds {header[0]} variables", lineno)
            current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise HeaderMismatch(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CNF(header[0], tuple(clauses))


def serialize_dimacs(f: CNF) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(str(l) for l in cl) + " 0" for cl in f.clauses]
    return "".join(line + "\n" for line in lines)


def count_models(f: CNF, limit: int = DEFAULT_LIMIT) -> int:
    """Model count straight from clause semantics (no circuit involved)."""
    return len(models(f, limit))


def models(f: CNF, limit: int = DEFAULT_LIMIT):
    if f.num_vars > limit:
        raise TooLarge(f"{f.num_vars} variables exceed the brute-force limit of {limit}")
    out = []
    for a in assignments(f.num_vars):
        if all(any(a[abs(l) - 1] == (l > 0) for l in cl) for cl in f.clauses):
            out.append(a)
    return out


def random_cnf(rng, max_vars=4, max_clauses=6, max_len=3) -> CNF:
    """A random CNF drawn with ``rng`` (a :class:`random.Random`)."""
    v = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        size = rng.randint(1, max_len)
        clauses.append(tuple(rng.choice((1, -1)) * rng.randint(1, v) for _ in range(size)))
    return CNF(v, tuple(clauses))


def cnf_to_circuit(f: CNF) -> Circuit:
    """Lower by De Morgan: each clause becomes NOT(AND(NOT l1', NOT l2', ...)).

    ``l'`` is the input gate for a positive literal and a fresh NOT of it for a
    negative one.  AND chains are left-associated, clause outputs are joined
    the same way.  Nothing is simplified, so the models are exactly those of f.
    """
    if f.num_vars < 1:
        raise CircuitError("a formula without variables has no circuit form")
    n = f.num_vars
    gates = []

    def emit(g):
        if isinstance(g, And) and g.j > g.k:
            g = And(g.k, g.j)
        gates.append(g)
        return n + len(gates)

    if not f.clauses:
        # empty conjunction is true: x1 OR NOT x1 written as a clause
        return cnf_to_circuit(CNF(n, ((1, -1),)))

    clause_outs = []
    for cl in f.clauses:
        negs = []
        for lit in cl:
            g = abs(lit) if lit > 0 else emit(Not(abs(lit)))
            negs.append(emit(Not(g)))
        acc = negs[0]
        for g in negs[1:]:
            acc = emit(And(acc, g))
        clause_outs.append(emit(Not(acc)))
    acc = clause_outs[0]
    for g in clause_outs[1:]:
        acc = emit(And(acc, g))
    return Circuit.build(n, gates)


__all__ = [
    "And",
    "CNF",
    "Circuit",
    "Input",
    "Not",
    "circuit_problems",
    "cnf_to_circuit",
    "count_models",
    "count_sat",
    "evaluate",
    "models",
    "parse_circuit",
    "parse_dimacs",
    "random_cnf",
    "satisfying_assignments",
    "serialize_circuit",
    "serialize_dimacs",
]
