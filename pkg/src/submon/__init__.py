"""Decision procedures for finitely generated submonoids of free groups.

Group elements are reduced words: tuples of nonzero ints, ``i`` for the
i-th generator of F and ``-i`` for its inverse (text form ``a``/``A``).
"""

from .config import Budget
from .decisions import HomSpec, HomVerdict, IsoVerdict, hom_extends, irreducibles, iso, subset_of_diagonal
from .errors import (
    EmptyLanguage,
    IdentityGenerator,
    InfiniteLanguage,
    InfinitePreimage,
    LetterOutOfRange,
    NotGraded,
    NotInMonoid,
    NotTrim,
    ParseError,
    RankMismatch,
    ResourceLimit,
    SubmonError,
)
from .geometry import ConstantsRecord, PathSample, constants, hausdorff_check, verify_quasigeodesic
from .gradedness import GradedVerdict, factors, is_graded, nontrivial_factorizations, xi_max, zeta
from .normal_forms import DescriptionTransducer, PairWordAutomaton, description, minimal_language, normalize
from .preimage import PreimageGrammar, PreimagePda, build_pda, preimage_grammar, to_grammar
from .rational import RatSetAutomaton, benois, flower, member, monoid
from .relation import (
    PairLetter,
    RelationAutomaton,
    accepted_pairs,
    build_certified,
    build_gamma,
    certified_cutoff,
    wp_exact,
    wp_member,
)
from .submonoid import SubmonoidSpec
from .words import FreeWord, dist, format_word, inv, mul, parse_word, reduce

__all__ = [
    "accepted_pairs",
    "benois",
    "Budget",
    "build_certified",
    "build_gamma",
    "build_pda",
    "certified_cutoff",
    "constants",
    "ConstantsRecord",
    "description",
    "DescriptionTransducer",
    "dist",
    "EmptyLanguage",
    "factors",
    "flower",
    "format_word",
    "FreeWord",
    "GradedVerdict",
    "hausdorff_check",
    "hom_extends",
    "HomSpec",
    "HomVerdict",
    "IdentityGenerator",
    "InfiniteLanguage",
    "InfinitePreimage",
    "inv",
    "irreducibles",
    "is_graded",
    "iso",
    "IsoVerdict",
    "LetterOutOfRange",
    "member",
    "minimal_language",
    "monoid",
    "mul",
    "nontrivial_factorizations",
    "normalize",
    "NotGraded",
    "NotInMonoid",
    "NotTrim",
    "PairLetter",
    "PairWordAutomaton",
    "parse_word",
    "ParseError",
    "PathSample",
    "preimage_grammar",
    "PreimageGrammar",
    "PreimagePda",
    "RankMismatch",
    "RatSetAutomaton",
    "reduce",
    "RelationAutomaton",
    "ResourceLimit",
    "SubmonError",
    "SubmonoidSpec",
    "subset_of_diagonal",
    "to_grammar",
    "verify_quasigeodesic",
    "wp_exact",
    "wp_member",
    "xi_max",
    "zeta",
]

__version__ = "0.1.0"
