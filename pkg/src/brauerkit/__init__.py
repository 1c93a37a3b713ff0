"""Exact-arithmetic toolkit for Brauer diagram algebras.

Diagram combinatorics, the standard arc filtration and its blocks, trace-form
radicals, tensor-power representations with exact kernels, diagrammatic
minors and Pfaffians, and the parameter-1 full-arc specialization with
pointed chord diagrams.
"""

from .backend import BACKEND
from .diagrams import (
    ArcStructure,
    Diagram,
    Junction,
    Permutation,
    act_on_junction,
    arc_structure,
    compose_diagrams,
    encode_diagram,
    enumerate_diagrams,
    enumerate_diagrams_with_arcs,
    enumerate_junctions,
    factorize,
    glue_junctions,
    identity_diagram,
    insert_arcs,
    make_d_sigma,
    make_h,
    parse_diagram,
    render_diagram,
    s2f_act,
    sigma_part,
    sign,
)
from .linalg import PrimeField, QQ, UnsupportedFieldError
from .symgroup import (
    GroupAlgebraElement,
    antisymmetrizer,
    central_idempotent,
    character,
    dual_partition,
    partitions,
    specht_module,
    standard_tableau_count,
    symmetrizer,
)
from .algebra import (
    AlgebraContext,
    BrauerElement,
    FiltrationView,
    block_descriptors,
    block_radical_dim,
    block_radical_lift,
    block_route_radical_dim,
    block_structure_matrix,
    context,
    context_report,
    element_in_radical,
    radical_basis,
    radical_summary,
    semisimple_quotient_dims,
    semisimplicity_criterion,
)
from .cells import CellModule, CellVector, act, check_R_action, gram_matrix, module_radical_basis
from .minors import (
    MinorSpec,
    PfaffianSpec,
    build_minor,
    build_pfaffian,
    enumerate_minors,
    enumerate_pfaffians,
    multiply_diagram_spec,
    phi_V,
    phi_W,
    r_space_basis,
)
from .tensorrep import BilinearSpace, TensorOperator, kernel_basis, pi, psi_tensor, tau
from .temperley import (
    ChordDiagram,
    chord_of_junction,
    cube_zero_check,
    junction_of_chord,
    monoid_product,
    tl_module_radical,
    tl_radical_basis,
)

__version__ = "0.1.0"
