import pytest

from geneograph.perm import Homomorphism, generate_group, parse_cycles
from geneograph.permutant import ActionContext

EDGES6 = ("a", "b", "c", "d", "e", "f")
EDGES3 = ("g", "h", "i")


def dihedral_edge_context() -> ActionContext:
    """The C6/C3 edge-set action built directly from dihedral presentations."""
    alpha = parse_cycles("(a,b,c,d,e,f)", EDGES6)
    beta = parse_cycles("(a,f)(b,e)(c,d)", EDGES6)
    gamma = parse_cycles("(g,h,i)", EDGES3)
    delta = parse_cycles("(g,i)", EDGES3)
    g6 = generate_group([alpha, beta])
    g3 = generate_group([gamma, delta])
    hom = Homomorphism.from_generator_images(g6, g3, [(alpha, gamma), (beta, delta)])
    return ActionContext(g6, g3, hom)


@pytest.fixture(scope="session")
def c6c3() -> ActionContext:
    return dihedral_edge_context()
