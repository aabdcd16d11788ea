"""Nonabelian tensor and exterior products of normal subgroups of small finite
groups, with exact relative commutativity, tensor and exterior degrees."""

from .catalog import catalog_group, read_group_file
from .census import CensusConfig, analyze_case, enumerate_normal_pairs, run_census
from .degrees import DegreeBundle, degree, degree_bundle, lemma_embedding_report, star_centralizer
from .errors import (CosetLimitExceeded, ElementOutOfRange, GroupError, IncompatibleActions,
                     InternalCheckFailed, NotAGroup, NotNormal, ParseError, UnknownGroup)
from .fp_enum import EnumeratedGroup, Presentation, evaluate_word, quotient_group, todd_coxeter
from .group_core import (ClassPartition, FiniteGroup, Subgroup, build_group, centralizer,
                         conjugacy_classes, is_normal, relative_commutator,
                         smallest_prime_divisor, subgroup_closure)
from .tensor import (ExteriorData, TensorData, build, check_compatibility, exterior_data,
                     tensor_presentation, tensor_square, vanishes)

__version__ = "0.1.0"
