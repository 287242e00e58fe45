from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.utils.errors import InvalidInputError

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class ChainVector:
    """1-chain over the canonical edge orientations.

    The reversed edge ē is represented by the coefficient -1, so reversal
    and negation coincide and the ±1 inner product is the plain dot product.
    """

    coefficients: tuple[Coefficient, ...]

    @classmethod
    def zero(cls, edge_count: int) -> "ChainVector":
        return cls((0,) * edge_count)

    @classmethod
    def edge(cls, edge_count: int, edge: int, reversed_: bool = False) -> "ChainVector":
        values = [0] * edge_count
        values[edge] = -1 if reversed_ else 1
        return cls(tuple(values))

    @classmethod
    def from_half_edges(cls, edge_count: int, half_edges: Iterable[int]) -> "ChainVector":
        """Sum of the half-edges of a walk; half-edge 2k is +e_k and 2k+1 is -e_k."""
        values = [0] * edge_count
        for half_edge in half_edges:
            values[half_edge // 2] += -1 if half_edge % 2 else 1
        return cls(tuple(values))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coefficients) if c != 0]

    def _check(self, other: "ChainVector") -> None:
        if other.dimension != self.dimension:
            raise InvalidInputError(
                f"chain dimension mismatch: {self.dimension} != {other.dimension}"
            )

    def __add__(self, other: "ChainVector") -> "ChainVector":
        self._check(other)
        return ChainVector(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "ChainVector") -> "ChainVector":
        self._check(other)
        return ChainVector(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "ChainVector":
        return ChainVector(tuple(-a for a in self.coefficients))

    def __rmul__(self, scalar: Coefficient) -> "ChainVector":
        return ChainVector(tuple(scalar * a for a in self.coefficients))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = "" if abs(c) == 1 else f"{abs(c)}"
            terms.append(f"{sign} {magnitude}e{k + 1}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def boundary(g: MultiGraph, chain: ChainVector) -> tuple[Coefficient, ...]:
    """Linear extension of d(e) = t(e) - o(e); a loop contributes nothing."""
    if chain.dimension != g.edge_count:
        raise InvalidInputError(
            f"chain has {chain.dimension} coefficients but the graph has {g.edge_count} edges"
        )
    result = [0] * g.vertex_count
    for (o, t), c in zip(g.edges, chain.coefficients):
        result[t] += c
        result[o] -= c
    return tuple(result)


def is_cycle(g: MultiGraph, chain: ChainVector) -> bool:
    return all(x == 0 for x in boundary(g, chain))


def chain_inner_product(c1: ChainVector, c2: ChainVector) -> Coefficient:
    c1._check(c2)
    return sum((a * b for a, b in zip(c1.coefficients, c2.coefficients)), 0)
