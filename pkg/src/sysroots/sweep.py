"""Whole-catalog sweep: every exit check over all families and classical systems.

Each ``check_*`` function returns ``(ok, details)`` where details is JSON
serializable. :func:`run_sweep` runs them in a fixed order.
"""

from __future__ import annotations

import time

from . import linalg as la
from .axioms import CHAIN_REVERSAL, NEGATION_ANTISYMMETRY, SIGN_IMPLICATION, ZERO_ROW, verify_all
from .catalog import all_families, build_family, check_simplicity
from .euclidean import build_classical, cross_validate, to_rootset
from .nilradical import (build_nilradical, check_sandwich, decompose_adjoint, rep_matrices,
                         root_subalgebra)
from .roots import compare_chain_sum, extremal_chain

C_RANKS = range(1, 9)
CLASSICAL = ("A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4")


def _entries():
    return all_families(C_RANKS)


def check_axioms():
    details = {}
    ok = True
    for e in _entries():
        rep = verify_all(e.restricted)
        statuses = {k: rep.axioms[k].status for k in sorted(rep.axioms)}
        n_cex = sum(len(rep.axioms[k].counterexamples) for k in ("1", "2", "4", "5"))
        good = all(s == "pass" for s in statuses.values()) and n_cex == 0
        ok &= good
        details[e.restricted.label] = {"axioms": statuses, "counterexamples": n_cex,
                                       "chain_scans": rep.chain_scans}
    return ok, details


def check_zeta():
    details = {e.restricted.label: la.format_vector(e.zeta_restricted) for e in _entries()}
    ok = all(la.is_zero(e.zeta_restricted) for e in _entries())
    return ok, details


def check_self_chains():
    ok = True
    details = {}
    for e in _entries():
        rs = e.restricted
        bad = []
        for a in rs.roots:
            ch = extremal_chain(rs, a, a)
            if ch.pair.as_tuple() != (2, 0) or ch.elements != (la.neg(a), rs.zero, a):
                bad.append(la.format_vector(a))
        ok &= not bad
        details[rs.label] = {"roots": len(rs), "bad": bad}
    return ok, details


def check_counts():
    ok = True
    details = {}
    for e in _entries():
        good = e.nilradical_dim == e.expected_dim and len(e.restricted) == 2 * e.m
        if e.family == "Ctilde":
            good &= e.m == e.rank
        good &= check_simplicity(e)
        ok &= good
        details[e.restricted.label] = {"M": e.m, "dim": e.nilradical_dim, "expected": e.expected_dim}
    return ok, details


def check_classical():
    ok = True
    details = {}
    for name in CLASSICAL:
        cv = cross_validate(build_classical(name))
        ok &= cv.ok
        details[name] = {"ok": cv.ok, "pairs": cv.pairs_checked, "mismatches": len(cv.mismatches),
                         "reflection_failures": len(cv.reflection_failures)}
    return ok, details


def check_properties():
    ok = True
    details = {}
    keys = (SIGN_IMPLICATION, NEGATION_ANTISYMMETRY, CHAIN_REVERSAL, ZERO_ROW)
    sets = [e.restricted for e in _entries()]
    sets += [to_rootset(build_classical(n))[0] for n in CLASSICAL]
    for rs in sets:
        rep = verify_all(rs)
        if not all(rep.axioms[k].status == "pass" for k in rep.axioms):
            continue
        statuses = {k: rep.properties[k].status for k in keys}
        ok &= all(s == "pass" for s in statuses.values())
        details[rs.label] = statuses
    return ok, details


def check_nilradicals():
    ok = True
    details = {}
    for e in _entries():
        alg = build_nilradical(e)
        sandwich_bad = check_sandwich(alg)
        types_ok = invariant_ok = partition_ok = True
        for a in alg.pi_hat:
            rep = decompose_adjoint(alg, root_subalgebra(alg, a))
            types_ok &= rep.jordan_type == (2,) + (1,) * (alg.dim - 2)
            invariant_ok &= all(c.invariant for c in rep.chain_spaces)
            covered = sorted(i for c in rep.chain_spaces for i in c.indices)
            partition_ok &= covered == list(range(alg.dim))
        good = not sandwich_bad and types_ok and invariant_ok and partition_ok
        ok &= good
        details[e.restricted.label] = {"sandwich": not sandwich_bad, "jordan_type": types_ok,
                                       "invariant": invariant_ok, "partition": partition_ok}
    return ok, details


def check_discrepancies():
    g2 = build_family("G2tilde").restricted
    rep = compare_chain_sum(g2, la.vec(3), la.vec(-3), la.vec(1))
    sum_ok = (rep.additivity and not rep.containment
              and (rep.pair1.q + rep.pair2.q, rep.pair1.p + rep.pair2.p) == (0, 0)
              and rep.pair_sum.as_tuple() == (1, 1))
    g1 = build_family("G1tilde")
    alg = build_nilradical(g1)
    dec = decompose_adjoint(alg, root_subalgebra(alg, alg.pi_hat[0]))
    self_space = next(c for c in dec.chain_spaces if c.top == alg.pi_hat[0])
    dec_ok = (dec.jordan_type == (2, 1) and self_space.dim == 3
              and not self_space.matches_irreducible)
    return sum_ok and dec_ok, {"chain_sum": rep.to_json(), "decomposition": dec.to_json()}


def check_deletions():
    ok = True
    details = {}
    for e in _entries():
        rs = e.restricted
        misses = 0
        for r in rs.roots:
            rep = verify_all(rs.without(r))
            witnesses = [c.witness for c in rep.axioms["2"].counterexamples]
            if rep.ok or (la.neg(r),) not in witnesses:
                misses += 1
        ok &= misses == 0
        details[rs.label] = {"deletions": len(rs), "missed": misses}
    return ok, details


def check_rep_matrices():
    ok = True
    details = {}
    for n in range(7):
        rep = rep_matrices(n)
        good = rep.relations_hold() and la.nilpotency_index(rep.rho_y) == n + 1
        ok &= good
        details[str(n)] = good
    return ok, details


CRITERIA = (
    ("axioms", check_axioms),
    ("zeta_vanishes", check_zeta),
    ("self_chains", check_self_chains),
    ("counts", check_counts),
    ("classical", check_classical),
    ("properties", check_properties),
    ("nilradical", check_nilradicals),
    ("discrepancies", check_discrepancies),
    ("deletions", check_deletions),
    ("rep_matrices", check_rep_matrices),
)


def run_sweep(include_timing: bool = False) -> dict:
    results = {}
    for name, fn in CRITERIA:
        t0 = time.perf_counter()
        ok, details = fn()
        results[name] = {"ok": ok, "details": details}
        if include_timing:
            results[name]["seconds"] = round(time.perf_counter() - t0, 3)
    return {"ok": all(r["ok"] for r in results.values()), "criteria": results}
