"""Tools for one-relator extensions of free groups.

Word algebra in G*<t>, level strata in the kernel of the t-exponent sum,
labelled sphere subdivisions, exact-time car-crash flows on them, and
surjectivity analysis of the natural map G -> (G*<t>)/<<w>>.
"""
from .words import (
    AUX,
    STABLE,
    Word,
    WordSyntaxError,
    assemble,
    blocks,
    coefficients,
    conjugacy_canonical,
    cyclic_reduce,
    exponent_sum,
    free_alphabet,
    free_reduce,
    is_conjugate_to_gt,
    letter_key,
    make_alphabet,
    parse_word,
    t_shape,
    word_key,
)
from .strata import (
    KernelForm,
    Lemma2Decomposition,
    NonzeroExponentSum,
    StratumFlags,
    build_two_variable_word,
    decompositions,
    expand,
    kernel_canonical_form,
    lemma2_decompose,
    level_bounds,
    phi,
    stratum_membership,
    substitute_aux,
)
from .spheres import (
    ComplexFormatError,
    CSLReport,
    Face,
    RelatorSet,
    SphereComplex,
    ValidationReport,
    add_loop,
    check_csl,
    complex_from_dict,
    complex_to_dict,
    detect_type1,
    detect_type2,
    dipole,
    generate_random,
    load_complex,
    read_face_word,
    read_vertex_word,
    save_complex,
    split_edge,
    split_face,
    validate_sphere,
)
from .traffic import (
    CrashEvent,
    FlowSchedule,
    ScheduleError,
    VertexReading,
    adversarial_schedule,
    crash_vertex_reading,
    simulate,
    standard_schedule,
    standard_schedule_II,
    uniform_schedule,
    uphill_schedule,
    verify_at_least_two_crashes,
)
from .surjectivity import (
    AmenabilityResult,
    Collapse,
    Presentation,
    QuotientCertificate,
    SearchHit,
    SurjectivityVerdict,
    amenable_shape,
    analyze,
    collapse_isomorphism,
    normal_closure_search,
    one_relator_presentation,
    order_evidence,
    quotient_certificate,
    verify_certificate,
)

__version__ = "0.1.0"
