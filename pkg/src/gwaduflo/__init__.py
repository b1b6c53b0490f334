"""Primitive ideals of generalized Weyl algebras with translation automorphisms."""

__version__ = "0.1.0"

from .algebra import GwaElement, GwaSpec, multiply, verify_relations  # noqa: E402
from .exactnum import GaussianRational, RingElement, UnivariateFactored, gr, parse_gauss  # noqa: E402
from .geometry import (ClosedSet, SupportRect, break_positions, support_of_simple,  # noqa: E402
                       support_of_verma, zariski_closure)
from .ideals import (PrimitiveIdeal, annihilator_of_simple, check_conditions,  # noqa: E402
                     duflo_refine, enumerate_primitive_ideals, verify_annihilation)
from .modules import (enumerate_submodules, find_top_vector, realize_window,  # noqa: E402
                      simple_subquotients)
from .config import GwaConfig, load_config, parse_config  # noqa: E402
