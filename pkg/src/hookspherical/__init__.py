"""Exact spherical function values for hook isotypes over Young subgroups."""
from .exact import KappaPoly, Rational, format_rational, parse_rational
from .hookchar import HookShape, hook_character, hook_dimension, mn_character, spherical_bruteforce
from .permgroup import BlockStructure, Permutation, compose, cycle_type, support_cycle, young_subgroup
from .spectrum import DegreeProfile, Normalization, eigenvalue_sum, shifted_degrees
from .spherical import (NoInvariants, SphericalQuery, multiplicity, normalize_support, spherical_big1,
                        spherical_big2, spherical_value)

__version__ = "0.1.0"
