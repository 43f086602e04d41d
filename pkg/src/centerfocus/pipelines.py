"""The two end-to-end verification runs for the cubic Riccati family.

``verify_theorem1`` checks the center-variety decomposition (focus
quantities, vanishing on components, radical membership, the intersection
ideal, ideal identities, Darboux certificates and the modular lift);
``verify_cyclicity`` checks component dimensions and Jacobian ranks.
Each check records pass / fail / budget-exceeded; stretch checks are reported
but do not decide the overall status.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict

from gmpy2 import mpq, is_prime

from . import __version__
from . import fixtures as fx
from .darboux import (DarbouxCertificate, cofactor, verify_hamiltonian,
                      verify_integrating_factor, is_invariant)
from .domains import PrimeField
from .focus import focus_quantities, residual
from .groebner import (Budget, BudgetExceeded, IdealBasis, groebner_basis, ideal_dimension,
                       ideal_equal, ideal_intersect, radical_membership)
from .modular import lift_poly, rational_reconstruct
from .poly import canonical_string, eval_point, reduce_mod_p
from .variety import (Parametrization, SamplingExhausted, implicitize, jacobian, make_rng,
                      rank_at_point, sample_points, tangent_space_dim, vanishes_on_parametrization)

PASS, FAIL, BUDGET = "pass", "fail", "budget-exceeded"


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    prime: int = 32003
    k: int = 4
    budget_pairs: int | None = None
    budget_seconds: float | None = None
    stretch_seconds: float | None = 60.0
    seed: int = 0
    samples: int = 5
    stretch_k: int = 0
    reverse_field: str = "modp"
    timing: bool = True

    def validate(self):
        if not isinstance(self.prime, int) or self.prime <= 1000 or not is_prime(self.prime):
            raise ConfigError(f"prime must be a prime larger than 1000, got {self.prime}")
        if self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.samples < 1:
            raise ConfigError("sample count must be at least 1")
        if self.budget_pairs is not None and self.budget_pairs < 0:
            raise ConfigError("pair budget must be non-negative")
        if self.budget_seconds is not None and self.budget_seconds < 0:
            raise ConfigError("time budget must be non-negative")
        if self.reverse_field not in ("modp", "q"):
            raise ConfigError("reverse-inclusion field must be 'modp' or 'q'")
        return self

    def budget(self, stretch=False):
        seconds = self.budget_seconds
        if stretch and self.stretch_seconds is not None:
            seconds = self.stretch_seconds if seconds is None else min(seconds, self.stretch_seconds)
        return Budget(max_pairs=self.budget_pairs, max_seconds=seconds)


@dataclass
class Check:
    name: str
    status: str
    millis: int
    detail: dict = field(default_factory=dict)
    stretch: bool = False


@dataclass
class VerificationReport:
    command: str
    config: dict
    checks: list = field(default_factory=list)
    version: str = __version__

    @property
    def overall(self):
        gating = [c for c in self.checks if not c.stretch]
        if any(c.status == FAIL for c in gating):
            return FAIL
        if any(c.status == BUDGET for c in gating):
            return BUDGET
        return PASS

    @property
    def exit_code(self):
        return {PASS: 0, FAIL: 1, BUDGET: 3}[self.overall]

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    def to_dict(self):
        return {
            "version": self.version,
            "command": self.command,
            "config": self.config,
            "checks": [asdict(c) for c in self.checks],
            "overall": self.overall,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def summary_lines(self):
        lines = []
        for c in self.checks:
            tag = " (stretch)" if c.stretch else ""
            lines.append(f"{c.status.upper():16s} {c.name}{tag}")
        lines.append(f"overall: {self.overall}")
        return lines


class _Runner:
    def __init__(self, report, config):
        self.report = report
        self.config = config

    def run(self, name, fn, stretch=False):
        budget = self.config.budget(stretch)
        t0 = time.perf_counter()
        try:
            ok, detail = fn(budget)
            status = PASS if ok else FAIL
        except BudgetExceeded as exc:
            status, detail = BUDGET, {"reason": str(exc)}
        except SamplingExhausted as exc:
            status, detail = FAIL, {"error": str(exc)}
        millis = int((time.perf_counter() - t0) * 1000) if self.config.timing else 0
        check = Check(name, status, millis, detail, stretch)
        self.report.checks.append(check)
        return check


def _s(p):
    return canonical_string(p)


def _q(x):
    x = mpq(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _quantities(k, domain="QQ"):
    res = focus_quantities(fx.riccati3(domain), k)
    ring = fx.param_ring(domain)
    return res, [g.to_ring(ring) for g in res.quantities]


# ---------------------------------------------------------------------------


def verify_theorem1(config=None):
    config = (config or Config()).validate()
    report = VerificationReport("verify-theorem1", asdict(config))
    run = _Runner(report, config).run
    k = config.k
    state = {}

    def focus(_budget):
        res, gs = _quantities(k)
        state["gs"] = gs
        zero = residual(res).is_zero()
        return zero, {"k": k, "residual_degree": 2 * k + 2, "residual_zero": zero,
                      "quantities": [_s(g) for g in gs]}

    run("focus-quantities", focus)
    gs = state["gs"]

    def vanishing(_budget):
        table = {}
        for comp in range(1, 7):
            par = Parametrization(fx.parametrization(comp))
            table[f"V{comp}"] = [vanishes_on_parametrization(g, par) for g in gs]
        return all(all(v) for v in table.values()), table

    run("vanishing-on-components", vanishing)

    ideals = fx.center_ideals()

    def radical(budget):
        table = {}
        for s, I in ideals.items():
            G = groebner_basis(I, budget=budget)
            table[f"I{s}"] = [radical_membership(g, G, budget) for g in gs]
        return all(all(v) for v in table.values()), table

    run("radical-membership", radical)

    def rejection(budget):
        out = {}
        for name, I in (("I7hat", fx.i7_hat()), ("I8hat", fx.i8_hat())):
            G = groebner_basis(I, budget=budget)
            out[name] = [radical_membership(g, G, budget) for g in gs]
        ok = not all(out["I7hat"]) and not all(out["I8hat"])
        return ok, out

    run("rejection-of-wrong-lifts", rejection, stretch=True)

    def intersection(budget):
        Itil = ideal_intersect(*ideals.values(), budget=budget)
        G = groebner_basis(Itil, budget=budget)
        state["Itil"] = G
        member = [radical_membership(g, G, budget) for g in gs]
        return all(member), {"generators": [_s(g) for g in G.basis], "radical_membership": member}

    run("intersection-inclusion", intersection)

    def reverse_inclusion(budget):
        Itil = state.get("Itil")
        if Itil is None:
            Itil = groebner_basis(ideal_intersect(*ideals.values(), budget=budget), budget=budget)
        if config.reverse_field == "modp":
            B = IdealBasis([reduce_mod_p(g, config.prime) for g in gs])
            fs = [reduce_mod_p(f, config.prime) for f in Itil.basis]
            field_name = f"GF({config.prime})"
        else:
            B = IdealBasis(gs)
            fs = list(Itil.basis)
            field_name = "QQ"
        GB = groebner_basis(B, budget=budget)
        results = [radical_membership(f, GB, budget) for f in fs]
        return all(results), {"field": field_name, "k": k, "results": results,
                              "note": "probabilistic when run modulo a prime"}

    run("reverse-inclusion", reverse_inclusion, stretch=True)

    def i5_equal(budget):
        I5 = ideals[5]
        literal = fx.i5_hat()
        completed = IdealBasis(literal.gens + [fx.param_ring()("a02")])
        eq_completed = ideal_equal(I5, completed, budget)
        eq_literal = ideal_equal(I5, literal, budget)
        return eq_completed, {"equal_with_a02": eq_completed, "equal_literal": eq_literal,
                              "note": "the three printed generators omit a02, which vanishes on V5"}

    run("i5-equals-i5hat", i5_equal)

    def elimination(budget):
        E = implicitize(Parametrization(fx.parametrization(5)), fx.param_ring(), budget)
        ok = ideal_equal(E, ideals[5], budget)
        return ok, {"eliminated": ["w", "t1", "t2", "t3"], "generators": [_s(g) for g in E.gens]}

    run("elimination-recovers-i5", elimination)

    run("darboux-certificates", lambda _b: _darboux_suite())

    def reconstruction(_budget):
        vectors = {}
        ok = True
        for c, expect in fx.RECONSTRUCTION_VECTORS:
            got = rational_reconstruct(c, 32003)
            vectors[str(c)] = {"expected": expect, "got": None if got is None else _q(got)}
            ok &= got == mpq(expect)
        return ok, {"modulus": 32003, "vectors": vectors}

    run("reconstruction-vectors", reconstruction)

    def lift7(_budget):
        gf = fx.param_ring(PrimeField(32003))
        lifted = [lift_poly(gf(t)) for t in fx.MODULAR_IDEALS[7]]
        hat = [fx.param_ring()(t) for t in fx.I7_HAT]
        same = [a is not None and a == b for a, b in zip(lifted, hat)]
        return all(same), {"lifted": [None if q is None else _s(q) for q in lifted],
                           "matches": same}

    run("lift-modular-i7", lift7)

    def lift_components(budget):
        comps = {}
        for s in range(1, 7):
            Gp = groebner_basis(fx.modular_ideal(s, 32003), budget=budget)
            Gq = groebner_basis(ideals[s], budget=budget)
            comps[f"I{s}"] = [lift_poly(g) for g in Gp.basis] == Gq.basis
        return all(comps.values()), comps

    run("lift-modular-components", lift_components)

    if config.stretch_k:
        def modp_membership(budget):
            kk = max(config.stretch_k, k)
            gf = PrimeField(config.prime)
            _, gp = _quantities(kk, gf)
            table = {}
            for s in range(1, 8):
                G = groebner_basis(IdealBasis([reduce_mod_p(g, config.prime) for g in ideals[s].gens]),
                                   budget=budget)
                table[f"I{s}"] = [radical_membership(g, G, budget) for g in gp]
            return all(all(v) for v in table.values()), {"k": kk, "field": gf.name, "table": table}

        run("radical-membership-modp", modp_membership, stretch=True)

    return report


def _darboux_suite():
    detail = {}
    sc1 = fx.sc1_system()
    f = sc1.ring(fx.SC1_F)
    K = cofactor(sc1, f)
    detail["sc1_cofactor"] = None if K is None else _s(K)
    ok = K == sc1.ring(fx.SC1_K)
    detail["sc1_mu_inverse_f"] = verify_integrating_factor(sc1, DarbouxCertificate([(f, -1)]))
    ok &= detail["sc1_mu_inverse_f"]
    v6 = fx.v6_system()
    detail["v6_hamiltonian"] = verify_hamiltonian(v6, v6.ring(fx.HAMILTONIAN_V6))
    ok &= detail["v6_hamiltonian"]
    for sign, label in ((1, "plus"), (-1, "minus")):
        sys7 = fx.v7_system(sign)
        f7 = fx.v7_darboux(sign)
        K7 = cofactor(sys7, f7)
        expected = sys7.ring(f"1/3*i*b20*({'' if sign > 0 else '-'}r6*x + 4*i*y)")
        good = K7 is not None and K7 == expected and is_invariant(sys7, f7, K7)
        cert = verify_integrating_factor(sys7, DarbouxCertificate([(f7, mpq(-5, 2))]))
        detail[f"v7_{label}_cofactor"] = None if K7 is None else _s(K7)
        detail[f"v7_{label}_mu_f^-5/2"] = cert
        ok &= good and cert
    return bool(ok), detail


# ---------------------------------------------------------------------------


def _free_nonzero(par, rng, count, accept=None):
    def acc(pt):
        return accept is None or accept(pt)
    return sample_points(par, count, rng, accept=acc, height=20, nonzero=True)


def verify_cyclicity(config=None):
    config = (config or Config()).validate()
    report = VerificationReport("verify-cyclicity", asdict(config))
    run = _Runner(report, config).run
    rng = make_rng(config.seed)
    PR = fx.param_ring()
    k = max(config.k, 4)
    _, gs = _quantities(k)
    ideals = fx.center_ideals()
    minor = fx.minor_polynomial()
    state = {"ranks": {}, "dims": {}}

    def dims(budget):
        got = {f"I{s}": ideal_dimension(I, budget) for s, I in ideals.items()}
        state["dims"] = got
        ok = all(got[f"I{s}"] == d for s, d in fx.EXPECTED_DIMENSIONS.items())
        return ok, got

    run("component-dimensions", dims)

    samples = {}
    for comp in range(1, 7):
        par = Parametrization(fx.parametrization(comp))
        accept = (lambda pt: eval_point(minor, pt) != 0) if comp == 1 else None
        samples[comp] = par, accept

    points = {}

    def draw(comp):
        if comp not in points:
            par, accept = samples[comp]
            points[comp] = _free_nonzero(par, rng, config.samples, accept)
        return points[comp]

    def rank_check(comps, n, expect):
        def fn(_budget):
            J = jacobian(gs[:n], PR.vars)
            out = {}
            ok = True
            for comp in comps:
                ranks = [rank_at_point(J, p) for p in draw(comp)]
                out[f"V{comp}"] = ranks
                state["ranks"][comp] = ranks
                ok &= all(r == expect for r in ranks)
            return ok, {"quantities": n, "expected_rank": expect, "ranks": out}
        return fn

    def minor_values(_budget):
        vals = [eval_point(minor, p) for p in draw(1)]
        return all(v != 0 for v in vals), {"f_values": [_q(v) for v in vals]}

    run("minor-f-on-V1-samples", minor_values)
    run("rank-J3-on-V1-V4", rank_check([1, 4], 3, 3))
    run("rank-J4-on-V2-V5-V6", rank_check([2, 5, 6], 4, 4))

    def v3_ranks(_budget):
        out = {}
        ok = True
        for n in range(3, k + 1):
            J = jacobian(gs[:n], PR.vars)
            ranks = [rank_at_point(J, p) for p in draw(3)]
            out[f"J{n}"] = ranks
            ok &= all(r == 3 for r in ranks)
        state["ranks"][3] = out[f"J{k}"]
        return ok, {"expected_rank": 3, "ranks": out}

    run("rank-on-V3", v3_ranks)

    def smoothness(budget):
        out = {}
        ok = True
        for comp in range(1, 7):
            I = ideals[comp]
            dim = state["dims"].get(f"I{comp}")
            if dim is None:
                dim = ideal_dimension(I, budget)
            tds = [tangent_space_dim(I, p) for p in draw(comp)]
            out[f"V{comp}"] = {"dimension": dim, "tangent_dims": tds}
            ok &= all(t == dim for t in tds)
        return ok, out

    run("tangent-space-smoothness", smoothness)

    def conclusions(_budget):
        table = {}
        n = PR.nvars
        for comp in range(1, 7):
            dim = state["dims"].get(f"I{comp}")
            ranks = state["ranks"].get(comp)
            if dim is None or not ranks:
                table[f"V{comp}"] = None
                continue
            codim = n - dim
            r = min(ranks)
            if r == codim:
                table[f"V{comp}"] = str(r - 1)
            else:
                table[f"V{comp}"] = f">={r - 1}"
        expected = {f"V{c}": v for c, v in fx.CYCLICITY.items()}
        return table == expected, {"cyclicity": table, "expected": expected}

    run("cyclicity-conclusions", conclusions)
    return report
