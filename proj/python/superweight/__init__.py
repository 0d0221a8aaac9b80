"""Exact-arithmetic toolkit for weight modules over basic classical Lie
superalgebras: root systems, shadows, evaluation and loop modules, Kac
modules.  Thin dict-returning wrappers around the C++ core."""

import json as _json

from superweight._core import (  # noqa: F401
    DomainError,
    __version__,
    chi_period,
    cone_member,
    cyclo_normalize,
    endomorphisms,
    invariants_dimension,
    irreducible_tensor_tag,
    is_closed,
    is_parabolic,
    is_root,
    form_value,
    level_forced_zero,
    module_dim,
    scalar_add,
    scalar_inv,
    scalar_mul,
    simplicity,
    zeta,
)

from superweight import _core


def _loads(payload):
    return _json.loads(payload)


def build_root_system(family, *params):
    return _loads(_core.root_system_json(family, [str(p) for p in params]))


def distinguished_grading(family, *params):
    return _loads(_core.grading_json(family, [str(p) for p in params]))


def shadow_from_inj(family, params, inj):
    return _loads(_core.shadow_json(family, [str(p) for p in params], inj))


def classify_string(base, directions, alpha, kind="coset"):
    return _core.classify_string(base, directions, kind, alpha)


def module(fixture):
    return _loads(_core.module_json(fixture))


def character(fixture):
    return _loads(_core.character_json(fixture))


def tensor(left, right, mode="diag"):
    return _loads(_core.tensor_json(left, right, mode))


def shadow_of_module(fixture):
    return _loads(_core.shadow_of_module_json(fixture))


def induced_character(family, params, functional, charw, adim=1, depth=6):
    return _loads(
        _core.induced_character_json(family, [str(p) for p in params], functional, charw,
                                     adim, depth))


def eval_window(points, factors):
    return _loads(_core.eval_window_json([str(p) for p in points], factors))


def annihilator(points, factors, bound=4):
    return _loads(_core.annihilator_json([str(p) for p in points], factors, bound))


def boundedness(points, factors, direction, depth):
    return _loads(_core.boundedness_json([str(p) for p in points], factors, direction, depth))


def classification_witness(points, factors):
    return _loads(_core.classification_witness_json([str(p) for p in points], factors))


def loop_decompose(points, factors, radius, generators):
    return _loads(
        _core.loop_decompose_json([str(p) for p in points], factors, radius, generators))


def affine_kac_character(family, params, charw, depth):
    return _loads(
        _core.affine_kac_character_json(family, [str(p) for p in params], charw, depth))


def g1_invariants(points, factors, radius, op_range):
    return _loads(
        _core.g1_invariants_json([str(p) for p in points], factors, radius, op_range))
