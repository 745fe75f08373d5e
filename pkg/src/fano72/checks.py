"""Verification suites: every certified fact becomes a PASS/FAIL record.

Records compare exact values (rationals, integers, tuples rendered to
text); there is no tolerance anywhere.  The ``claim`` field states the
mathematical fact a record certifies in its own words, or "plumbing" for
internal consistency checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from .bundles import BundleSystemSpec, RuledClass, SplitBundle, system_dim
from .grading import hilbert_count, is_homogeneous
from .linalg import rank_of_rows
from .linsys import (InvalidPencilError, LinearSystem, PencilCubic, X1, X2,
                     X3, X4, build_degree12_system, build_sextic_system,
                     compare_spans, coordinate_plane_residual, factor_out,
                     is_scalar_multiple, multiplicity_along_line,
                     random_member, restrict_to_pencil,
                     restrict_to_pencil_plane, sextic_constraint_rows,
                     solve_sextic_constraints, spans_equal)
from .poly import ParseError, Polynomial
from .ratmap import pullback_system, weighted_parametrization
from .wps import WeightedProjectiveSpace

SUITES = ("wps", "scroll", "system-s", "system-t", "theorem")
EXTRA_SUITES = ("sprime",)


class ConfigurationError(Exception):
    """The requested run cannot start (bad pencil cubic or unknown suite)."""


@dataclass
class VerifyConfig:
    xi_text: str | None = None
    suite: str = "all"
    seed: int = 0


@dataclass
class CheckRecord:
    check_id: str
    description: str
    claim: str
    status: str
    computed: str
    expected: str
    elapsed: float


def _run(records: list[CheckRecord], check_id: str, description: str, claim: str,
         expected, compute: Callable[[], object]) -> None:
    start = perf_counter()
    try:
        computed = compute()
    except Exception as error:  # a crashed check is a failed check, not a crashed run
        computed = f"error: {error}"
    elapsed = perf_counter() - start
    status = "PASS" if computed == expected else "FAIL"
    records.append(CheckRecord(check_id, description, claim, status,
                               str(computed), str(expected), elapsed))


def resolve_pencil(xi_text: str | None) -> PencilCubic:
    if xi_text is None:
        return PencilCubic.default()
    try:
        return PencilCubic.from_text(xi_text)
    except (InvalidPencilError, ParseError) as error:
        raise ConfigurationError(f"invalid pencil cubic: {error}") from error


# -- suite: weighted projective spaces ------------------------------------

def wps_suite() -> list[CheckRecord]:
    records: list[CheckRecord] = []
    p146 = WeightedProjectiveSpace((1, 1, 4, 6))
    p113 = WeightedProjectiveSpace((1, 1, 1, 3))
    _run(records, "wps.weight.1146", "anticanonical weight of P(1,1,4,6)",
         "the anticanonical sheaf of P(1,1,4,6) is O(12)",
         12, p146.anticanonical_weight)
    _run(records, "wps.weight.1113", "anticanonical weight of P(1,1,1,3)",
         "the anticanonical sheaf of P(1,1,1,3) is O(6)",
         6, p113.anticanonical_weight)
    _run(records, "wps.degree.1146", "anticanonical self-intersection of P(1,1,4,6)",
         "the anticanonical self-intersection of P(1,1,4,6) is 72",
         72, p146.anticanonical_selfintersection)
    _run(records, "wps.degree.1113", "anticanonical self-intersection of P(1,1,1,3)",
         "the anticanonical self-intersection of P(1,1,1,3) is 72",
         72, p113.anticanonical_selfintersection)
    _run(records, "wps.hilbert.1146", "recurrence count of weighted degree-12 monomials",
         "the monomials of degree 12 under weights (1,1,4,6) number 39",
         39, lambda: hilbert_count((1, 1, 4, 6), 12))
    _run(records, "wps.basis.1146", "enumerated anticanonical basis size of P(1,1,4,6)",
         "the anticanonical space of P(1,1,4,6) has a 39-monomial basis",
         39, lambda: len(p146.anticanonical_basis()))
    _run(records, "wps.basis.1113", "enumerated anticanonical basis size of P(1,1,1,3)",
         "the anticanonical space of P(1,1,1,3) has a 39-monomial basis",
         39, lambda: len(p113.anticanonical_basis()))
    _run(records, "wps.embedding.1146", "anticanonical embedding dimension of P(1,1,4,6)",
         "P(1,1,4,6) embeds anticanonically in P^38",
         38, lambda: len(p146.anticanonical_basis()) - 1)

    def basis_shape() -> str:
        counts: dict[tuple[int, int], int] = {}
        for e in p146.anticanonical_basis():
            key = (e[2], e[3])
            counts[key] = counts.get(key, 0) + 1
        blocks = [counts.get(key, 0) for key in
                  ((0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0))]
        return "+".join(str(b) for b in blocks)

    _run(records, "wps.basis-shape.1146", "anticanonical basis grouped by (y3, y4) exponents",
         "the anticanonical basis splits into blocks y4^2 | y3*y4*f2 | y4*f6 | "
         "y3^3 | y3^2*f4 | y3*f8 | f12",
         "1+3+7+1+5+9+13", basis_shape)
    return records


# -- suite: scroll and cone bookkeeping ------------------------------------

def scroll_suite() -> list[CheckRecord]:
    records: list[CheckRecord] = []
    scroll = SplitBundle((2, 6))
    cone = SplitBundle((0, 2, 6))
    e4 = RuledClass(4, 1, 0)
    hyperplane = RuledClass(4, 1, 6)
    fibre = RuledClass(4, 0, 1)
    _run(records, "scroll.h0.surface", "sections of O(2) + O(6) on P^1",
         "the tautological system of O(2)+O(6) embeds the scroll in P^9",
         10, scroll.h0)
    _run(records, "scroll.h0.cone", "sections of O + O(2) + O(6) on P^1",
         "the cone over the scroll spans P^10",
         11, cone.h0)
    _run(records, "scroll.selfint", "self-intersection of the hyperplane class on F_4",
         "the scroll has minimal degree 8 in P^9",
         8, lambda: hyperplane.intersect(hyperplane))
    _run(records, "scroll.conic", "hyperplane degree of the negative section",
         "the negative section of F_4 maps to a conic",
         2, lambda: e4.intersect(hyperplane))
    _run(records, "scroll.lines", "hyperplane degree of a ruling",
         "the rulings of F_4 map to lines",
         1, lambda: fibre.intersect(hyperplane))
    _run(records, "scroll.sym3.count", "summand count of the cubed cone bundle",
         "plumbing",
         10, lambda: cone.sym_power(3).rank)
    _run(records, "scroll.system.cubics", "dimension of the cubic-minus-six-fibres system",
         "cubic hypersurface sections through six ruling planes cut a "
         "38-dimensional system on the cone",
         38, lambda: system_dim(cone, BundleSystemSpec(3, -6)))
    _run(records, "scroll.system.tautological", "dimension of the tautological system",
         "the tautological system maps the cone's resolution to P^10",
         10, lambda: system_dim(cone, BundleSystemSpec(1, 0)))
    _run(records, "scroll.match.wps", "bundle dimension against anticanonical dimension",
         "the 38-dimensional cubic-section system matches the anticanonical "
         "system of P(1,1,4,6)",
         "38 = 38",
         lambda: f"{system_dim(cone, BundleSystemSpec(3, -6))} = "
                 f"{len(WeightedProjectiveSpace((1, 1, 4, 6)).anticanonical_basis()) - 1}")
    return records


# -- suite: the sextic system ----------------------------------------------

def _members_with_random(system: LinearSystem, rng: random.Random) -> list[Polynomial]:
    return list(system.generators) + [random_member(system, rng)]


def sextic_suite(pencil: PencilCubic, rng: random.Random) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    system = build_sextic_system(pencil)
    members = _members_with_random(system, rng)
    unit = (1, 1, 1, 1)
    _run(records, "system-s.generators", "generator count of the sextic system",
         "the sextic system depends on 11 independent parameters",
         11, lambda: len(system.generators))
    _run(records, "system-s.dim", "projective dimension of the sextic system",
         "the sextic system has projective dimension 10",
         10, system.projective_dim)
    _run(records, "system-s.degrees", "degrees of the sextic generators",
         "every member is a surface of degree 6",
         "{6}", lambda: str({is_homogeneous(g, unit) for g in system.generators}))
    _run(records, "system-s.multiplicity", "minimal generator multiplicity along the line",
         "the members have multiplicity 5 along the line x1 = x2 = 0",
         5, lambda: min(multiplicity_along_line(g) for g in system.generators))
    _run(records, "system-s.multiplicity.random", "multiplicity of a random member",
         "a general member has multiplicity exactly 5 along the line",
         5, lambda: multiplicity_along_line(members[-1]))

    def residual_degrees() -> str:
        degrees = set()
        for f in members:
            residual = factor_out(restrict_to_pencil(f), "x1", 5)
            degrees.add(residual.degree_in(("x1", "x3", "x4")))
        return str(degrees)

    _run(records, "system-s.pencil-residual", "moving intersection with a general pencil plane",
         "off the quintuple line, a member meets a general pencil plane in a line",
         "{1}", residual_degrees)

    def plane_count(plane: str) -> str:
        good = sum(1 for f in members
                   if not coordinate_plane_residual(f, plane).uses_variable("x4"))
        return f"{good}/{len(members)}"

    for plane in ("x1", "x2"):
        _run(records, f"system-s.plane-{plane}",
             f"residual lines on the plane {plane} = 0",
             f"members meet the plane {plane} = 0, off the line, in lines "
             "through [0,0,0,1]",
             f"{len(members)}/{len(members)}", lambda plane=plane: plane_count(plane))

    for k, tau in enumerate(pencil.roots, start=1):
        def root_count(tau=tau) -> str:
            good = sum(1 for f in members
                       if is_scalar_multiple(restrict_to_pencil_plane(f, tau), (6, 0, 0, 0)))
            return f"{good}/{len(members)}"
        _run(records, f"system-s.root-{k}",
             f"restriction to the pencil plane x2 = {tau}*x1",
             f"members meet the plane x2 = {tau}*x1 in the line alone, "
             "with multiplicity 6",
             f"{len(members)}/{len(members)}", root_count)

    records += sprime_records(pencil, system)
    return records


def sprime_records(pencil: PencilCubic, system: LinearSystem | None = None) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    if system is None:
        system = build_sextic_system(pencil)
    solved = solve_sextic_constraints(pencil)
    _run(records, "system-s.sprime.rank", "rank of the incidence-constraint matrix",
         "the 8 incidence conditions (one per coordinate plane, two per pencil "
         "root) are linearly independent",
         8, lambda: rank_of_rows(sextic_constraint_rows(pencil)[1]))
    _run(records, "system-s.sprime.dim", "solution dimension of the incidence constraints",
         "the constraint-cut space of sextics has vector dimension 11 "
         "(projective dimension 10)",
         11, lambda: len(solved.generators))
    _run(records, "system-s.sprime.span", "constraint route against generator route",
         "the incidence constraints cut out exactly the sextic system",
         True, lambda: spans_equal(solved, system))
    return records


# -- suite: the degree-12 system --------------------------------------------

def degree12_suite(pencil: PencilCubic) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    system = build_degree12_system(pencil)
    xi = pencil.cubic
    unit = (1, 1, 1, 1)
    _run(records, "system-t.generators", "generator count of the degree-12 system",
         "the degree-12 system depends on 39 independent parameters",
         39, lambda: len(system.generators))
    _run(records, "system-t.dim", "projective dimension of the degree-12 system",
         "the degree-12 system has projective dimension 38",
         38, system.projective_dim)
    _run(records, "system-t.degrees", "degrees of the degree-12 generators",
         "every member is a surface of degree 12",
         "{12}", lambda: str({is_homogeneous(g, unit) for g in system.generators}))
    _run(records, "system-t.multiplicity", "minimal generator multiplicity along the line",
         "every member passes through the line x1 = x2 = 0 with multiplicity "
         "at least 9",
         9, lambda: min(multiplicity_along_line(g) for g in system.generators))
    _run(records, "system-t.member.squared", "membership of x1^2*x2^2*x4^2*xi^2",
         "the doubled product surface x1^2*x2^2*x4^2*xi^2 = 0 belongs to the system",
         True, lambda: system.member((X1 * X2 * X4 * xi) ** 2))
    _run(records, "system-t.member.cubed", "membership of x3^3*xi^3",
         "the tripled surface x3^3*xi^3 = 0 belongs to the system",
         True, lambda: system.member((X3 * xi) ** 3))
    _run(records, "system-t.nonmember", "membership of x4^12",
         "x4^12 = 0 misses the line entirely, so it cannot belong to the system",
         False, lambda: system.member(X4 ** 12))
    return records


# -- suite: the span identity ------------------------------------------------

def theorem_suite(pencil: PencilCubic) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    space = WeightedProjectiveSpace((1, 1, 4, 6))
    eta = weighted_parametrization(pencil)
    pulled = pullback_system(eta, space.anticanonical_basis())
    direct = build_degree12_system(pencil)
    _run(records, "theorem.grading", "component degrees of the weighted parametrization",
         "the parametrization of P(1,1,4,6) has component degrees (1, 1, 4, 6)",
         "(1, 1, 4, 6)", lambda: str(eta.component_degrees()))
    _run(records, "theorem.rank.pullback", "rank of the pulled-back anticanonical basis",
         "the 39 pulled-back anticanonical monomials are linearly independent",
         39, lambda: pulled.projective_dim() + 1)
    _run(records, "theorem.rank.direct", "rank of the degree-12 system",
         "the 39 degree-12 generators are linearly independent",
         39, lambda: direct.projective_dim() + 1)

    def containment(source: LinearSystem, target: LinearSystem) -> str:
        inside = sum(1 for g in source.generators
                     if target.row_space().contains(target.coefficient_vector(g)))
        return f"{inside}/{len(source.generators)}"

    _run(records, "theorem.containment.forward",
         "pulled-back monomials inside the degree-12 span",
         "every pulled-back anticanonical monomial is a degree-12 member",
         "39/39", lambda: containment(pulled, direct))
    _run(records, "theorem.containment.reverse",
         "degree-12 generators inside the pulled-back span",
         "every degree-12 generator is a pulled-back anticanonical combination",
         "39/39", lambda: containment(direct, pulled))

    _run(records, "theorem.identity", "span identity between the two systems",
         "composing the parametrization with the anticanonical system of "
         "P(1,1,4,6) yields exactly the degree-12 system",
         "PASS", lambda: "PASS" if compare_spans(pulled, direct).passed else "FAIL")
    return records


def run_all(config: VerifyConfig) -> list[CheckRecord]:
    """Run the selected suites in declaration order and return all records."""
    pencil = resolve_pencil(config.xi_text)
    suite = config.suite or "all"
    if suite not in ("all",) + SUITES + EXTRA_SUITES:
        raise ConfigurationError(
            f"unknown suite {suite!r}; choose from all, {', '.join(SUITES + EXTRA_SUITES)}")
    rng = random.Random(config.seed)
    records: list[CheckRecord] = []
    if suite in ("all", "wps"):
        records += wps_suite()
    if suite in ("all", "scroll"):
        records += scroll_suite()
    if suite in ("all", "system-s"):
        records += sextic_suite(pencil, rng)
    if suite == "sprime":
        records += sprime_records(pencil)
    if suite in ("all", "system-t"):
        records += degree12_suite(pencil)
    if suite in ("all", "theorem"):
        records += theorem_suite(pencil)
    return records
