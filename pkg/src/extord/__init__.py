"""Extensional acyclic orientations, hyper-extensional digraphs and related codes."""

from .bisimulation import Partition, is_hyper_extensional, max_bisimulation, quotient
from .checkers import (
    all_reach_sink,
    is_acyclic,
    is_extensional,
    is_reversal_robust,
    is_slim,
    sinks,
    sources,
)
from .codes import (
    is_discriminating_code,
    is_oosc,
    min_discriminating_code,
    min_hitting_set,
    min_oosc,
)
from .errors import CapacityError, DefectError, DomainError, ExtordError, GraphError, ParseError
from .graph_core import Digraph, Graph, Orientation, parse, serialize
from .hamiltonian import count_hamiltonian_paths, find_hamiltonian_path, is_hamiltonian_path
from .hfsets import HFSet, ackermann, canonical_string, membership_digraph, mostowski_collapse
from .reductions import (
    compose,
    dc_to_oosc,
    gadget,
    gadget_verify,
    heo_instance,
    hp_prime_extend,
    lemma2_orientation,
    subdivision,
)
from .solvers import Variant, brute_force_count, count, enumerate_orientations, solve

__version__ = "0.1.0"
