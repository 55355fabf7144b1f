"""Schubert classes of cominuscule flag varieties: (a, J) data, singular loci,
partition dictionaries and the verification oracle."""

from .rootsys import (
    Root,
    RootSystem,
    build_root_system,
    coefficient,
    root_sum,
)
from .grading import (
    GradingContext,
    bigraded_roots,
    cominuscule_nodes,
    g1_roots,
    make_context,
    tilde_level,
    zi_level,
    zw_level,
)
from .weyl import (
    HasseDiagram,
    WeylElement,
    bruhat_leq,
    enumerate_Wp,
    get_diagram,
    inversion_set,
    reduced_word,
    word_element,
)
from .schubert import (
    AJ,
    ClassRecord,
    Marker,
    aj_index,
    aj_of,
    class_table,
    context_for,
    ideal_of_aj,
)
from .singloc import (
    SingComponent,
    SingReport,
    delta_w_eps,
    g00_positive,
    min_codim_analysis,
    pi_set,
    predicted_component_count,
    sing_components,
    sing_report,
    stabilizer_root_set,
)
from .oracle import (
    SpaceReport,
    component_count_by_graph,
    default_suite,
    maximal_deficient_subideals,
    verify_all,
    verify_space,
)

__all__ = [name for name in dir() if not name.startswith("_")]
