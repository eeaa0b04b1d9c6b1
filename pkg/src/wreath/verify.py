"""Batch verification of the model and character identities on a single G(r, n)."""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .characters import (
    char_table,
    classes_with_sizes,
    lemma_chi_sum,
    row_orthogonality,
    sum_irr_chars,
)
from .colored_perm import (
    ClassType,
    check_order,
    configure_max_order,
    enumerate_group,
    group_order,
    max_order,
    simple_reflections,
    transpose,
)
from .model import (
    act,
    conjecture_experiment,
    decompose_model,
    homomorphism_failures,
    model_basis,
    model_character,
    random_element,
    rho,
    sign_generator,
)
from .roots import count_bruteforce, count_formula
from .rsk import colored_rsk, inverse_colored_rsk
from .shapes import multi_syt_count, multipartitions

EXHAUSTIVE_HOMOMORPHISM_LIMIT = 200
RANDOM_PAIRS = 200


@dataclass
class Check:
    name: str
    scope: str
    passed: bool
    counterexample: dict | None = None
    wall_time: float = 0.0
    rows: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "scope": self.scope,
            "pass": self.passed,
            "counterexample": self.counterexample,
            "wall_time": round(self.wall_time, 4),
        }
        if self.rows:
            out["rows"] = self.rows
        return out


@dataclass
class VerificationReport:
    r: int
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "pass": self.passed, "checks": [c.to_json() for c in self.checks]}

    def to_text(self) -> str:
        lines = [f"G({self.r},{self.n}), order {group_order(self.r, self.n)}"]
        for c in self.checks:
            flag = "PASS" if c.passed else "FAIL"
            lines.append(f"  {flag}  {c.name:<28} {c.scope:<11} {c.wall_time:8.3f}s")
            if c.counterexample:
                lines.append(f"        counterexample: {c.counterexample}")
        lines.append("ALL PASS" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)


def _timed(name: str, scope: str, fn: Callable[[], tuple[bool, dict | None, list[dict]]]) -> Check:
    t0 = time.perf_counter()
    ok, cex, rows = fn()
    return Check(name, scope, ok, None if ok else cex, time.perf_counter() - t0, rows)


def _init_worker(bound: int) -> None:
    configure_max_order(bound)


def pmap(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """Order-preserving map; uses a process pool when jobs > 1."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(max_order(),)) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- per-class rows ----------------------------------------------------------

def sqroot_row(ct: ClassType) -> dict:
    g = ct.representative()
    brute = count_bruteforce(g)
    formula = count_formula(g)
    chars = sum_irr_chars(g)
    return {
        "class": ct.to_json(),
        "representative": g.to_json(),
        "bruteforce": brute,
        "formula": formula,
        "character_sum": chars,
        "pass": brute == formula == chars,
    }


def model_row(ct: ClassType) -> dict:
    g = ct.representative()
    trace = model_character(g)
    chars = sum_irr_chars(g)
    return {"class": ct.to_json(), "model_character": trace, "character_sum": chars, "pass": trace == chars}


def lemma_row(ct: ClassType) -> dict:
    g = ct.representative()
    a, b = lemma_chi_sum(g), sum_irr_chars(g)
    return {"class": ct.to_json(), "resummed": a, "character_sum": b, "pass": a == b}


def _rows_check(rows: list[dict]) -> tuple[bool, dict | None, list[dict]]:
    bad = next((row for row in rows if not row["pass"]), None)
    return bad is None, bad, rows


def sqroot_table(r: int, n: int, jobs: int = 1) -> list[dict]:
    return pmap(sqroot_row, [ct for ct, _ in classes_with_sizes(r, n)], jobs)


def check_sqroots(r: int, n: int, jobs: int = 1) -> Check:
    return _timed("absolute_square_roots", "exhaustive", lambda: _rows_check(sqroot_table(r, n, jobs)))


def check_model_character(r: int, n: int, jobs: int = 1) -> Check:
    classes = [ct for ct, _ in classes_with_sizes(r, n)]
    return _timed("model_character", "all classes", lambda: _rows_check(pmap(model_row, classes, jobs)))


def check_lemma(r: int, n: int, jobs: int = 1) -> Check:
    classes = [ct for ct, _ in classes_with_sizes(r, n)]
    return _timed("resummed_character_sum", "all classes", lambda: _rows_check(pmap(lemma_row, classes, jobs)))


def check_multiplicities(r: int, n: int) -> Check:
    def run():
        mult = decompose_model(r, n)
        rows = [{"shape": [list(p) for p in mp], "multiplicity": m} for mp, m in mult.items()]
        bad = next((row for row in rows if row["multiplicity"] != 1), None)
        return bad is None, bad, rows
    return _timed("multiplicities", "all irreps", run)


def homomorphism_pairs(r: int, n: int, seed: int = 0, exhaustive: bool = False,
                       samples: int = RANDOM_PAIRS) -> tuple[str, Iterable]:
    if exhaustive or group_order(r, n) <= EXHAUSTIVE_HOMOMORPHISM_LIMIT:
        elems = list(enumerate_group(r, n))
        return "exhaustive", itertools.product(elems, elems)
    gens = simple_reflections(r, n)
    rng = random.Random(seed)
    pairs = list(itertools.product(gens, gens))
    pairs += [(random_element(r, n, rng), random_element(r, n, rng)) for _ in range(samples)]
    return "sampled", pairs


def check_homomorphism(r: int, n: int, seed: int = 0, exhaustive: bool = False) -> Check:
    scope, pairs = homomorphism_pairs(r, n, seed, exhaustive)

    def run():
        bad = homomorphism_failures(r, n, pairs)
        cex = {"pi1": bad[0][0].to_json(), "pi2": bad[0][1].to_json()} if bad else None
        return not bad, cex, []
    return _timed("homomorphism", scope, run)


def check_generators(r: int, n: int) -> Check:
    """rho on each simple reflection matches the generator-level sign rule."""
    def run():
        if n == 0:
            return True, None, []
        basis = model_basis(r, n)
        for i, s in enumerate(simple_reflections(r, n)):
            op = rho(s, basis)
            for k, v in enumerate(basis.elements):
                target = basis.index[act(s, v)]
                if int(op.targets[k]) != target or int(op.signs[k]) != sign_generator(i, v):
                    return False, {"generator": i, "v": v.to_json()}, []
        return True, None, []
    return _timed("generator_signs", "exhaustive", run)


def check_dimension(r: int, n: int) -> Check:
    def run():
        dims = [multi_syt_count(mp) for mp in multipartitions(r, n)]
        n_inv = len(model_basis(r, n))
        ok = n_inv == sum(dims) and sum(d * d for d in dims) == group_order(r, n)
        info = {"involutions": n_inv, "sum_dims": sum(dims), "sum_squares": sum(d * d for d in dims)}
        return ok, info, [info]
    return _timed("dimension", "exact", run)


def check_rsk(r: int, n: int) -> Check:
    def run():
        images = set()
        for g in enumerate_group(r, n):
            pair = colored_rsk(g)
            if colored_rsk(transpose(g)) != pair.swap():
                return False, {"element": g.to_json(), "failure": "duality"}, []
            if inverse_colored_rsk(pair, r, n) != g:
                return False, {"element": g.to_json(), "failure": "round trip"}, []
            images.add((pair.P, pair.Q))
        if len(images) != group_order(r, n):
            return False, {"failure": "not injective"}, []
        return True, None, []
    return _timed("rsk_duality", "exhaustive", run)


def check_orthogonality(r: int, n: int) -> Check:
    def run():
        table = char_table(r, n)
        order = group_order(r, n)
        for i, j, val in row_orthogonality(table):
            if val != (order if i == j else 0):
                return False, {"row": [list(p) for p in table.rows[i]],
                               "col": [list(p) for p in table.rows[j]], "value": str(val)}, []
        ident = table.classes.index(identity_class(r, n))
        for mp, row in zip(table.rows, table.values):
            if row[ident] != multi_syt_count(mp):
                return False, {"shape": [list(p) for p in mp], "failure": "degree"}, []
        return True, None, []
    return _timed("row_orthogonality", "exact", run)


def identity_class(r: int, n: int) -> ClassType:
    parts = [(1,) * n] + [()] * (r - 1)
    return ClassType(r, n, tuple(parts))


def check_conjecture(r: int, n: int) -> tuple[Check, list]:
    t0 = time.perf_counter()
    reports = conjecture_experiment(r, n)
    invariant = all(rep.invariant for rep in reports)
    check = Check("submodule_invariance", "generators", invariant,
                  None if invariant else {"two_cycles": [rep.two_cycles for rep in reports if not rep.invariant]},
                  time.perf_counter() - t0)
    return check, reports


def verify_all(r: int, n: int, seed: int = 0, jobs: int = 1, exhaustive: bool = False) -> VerificationReport:
    check_order(r, n)
    report = VerificationReport(r, n)
    report.checks += [
        check_sqroots(r, n, jobs),
        check_lemma(r, n, jobs),
        check_orthogonality(r, n),
        check_model_character(r, n, jobs),
        check_multiplicities(r, n),
        check_generators(r, n),
        check_homomorphism(r, n, seed, exhaustive),
        check_dimension(r, n),
        check_rsk(r, n),
        check_conjecture(r, n)[0],
    ]
    return report


def verify_model(r: int, n: int, seed: int = 0, jobs: int = 1, exhaustive: bool = False) -> dict:
    check_order(r, n)
    hom = check_homomorphism(r, n, seed, exhaustive)
    gens = check_generators(r, n)
    rows = pmap(model_row, [ct for ct, _ in classes_with_sizes(r, n)], jobs)
    mult = decompose_model(r, n)
    ok = hom.passed and gens.passed and all(row["pass"] for row in rows) and all(m == 1 for m in mult.values())
    return {
        "r": r,
        "n": n,
        "homomorphism": "pass" if hom.passed and gens.passed else "fail",
        "homomorphism_scope": hom.scope,
        "homomorphism_counterexample": hom.counterexample or gens.counterexample,
        "character_identity": [{**row, "pass": "pass" if row["pass"] else "fail"} for row in rows],
        "multiplicities": [{"shape": [list(p) for p in mp], "multiplicity": m} for mp, m in mult.items()],
        "pass": ok,
    }
