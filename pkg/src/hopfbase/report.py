"""Run reports: tagged checks, artifacts, deterministic serialization."""

from __future__ import annotations

from dataclasses import dataclass, field

from .io import canonical_dumps

REPORT_VERSION = 1

# Every check names the statement it exercises.
STATEMENT_TAGS = {
    "hopf-axioms": "structure constants satisfy the Hopf algebra axioms",
    "grouplikes": "declared group-likes are group-like and span the coradical",
    "commutative-pointed-group-algebra": "a commutative pointed finite-dimensional Hopf algebra is a group algebra",
    "retraction-gamma": "a right k[G]-module coalgebra retraction of the inclusion of k[G]",
    "free-hopf-structure": "coproduct, counit and antipode of the free commutative Hopf algebra",
    "coinvariants-localization": "the H_ab-coinvariants form a localization of the generic base algebra",
    "theta-grouplike": "the determinants Theta and Theta' are group-like and q(Theta Theta') = 1",
    "generic-base-inclusion": "the generators sigma, sigma^-1, p, q, p', q' are coinvariant",
    "group-coaction-action": "coaction of O(G) on S(t_H) matches the regular action; Dedekind determinant",
    "group-algebra-base": "for H = k[G] the generic base algebra is a lattice-monomial algebra",
    "group-algebra-presentation": "presentation of the generic base algebra of a group algebra",
    "pointed-presentation": "presentation of the generic base algebra of a pointed Hopf algebra",
    "lattice-basis": "explicit basis of the lattice of Gbar-invariant exponents",
    "degree-two-generators": "polynomial generators of degree at most two",
    "noether-number": "degree bound for generators of the regular invariant ring",
    "canonical-coinvariants": "P_x and Q_xy are coinvariant with mu(P_x) = p_x and mu(Q_xy) = q_xy",
    "identity-ideal": "identities of H form the kernel of the comodule algebra map mu",
    "localization-formulas": "closed forms for the inverses of p_x and q_xy",
    "localization-witnesses": "generic base algebra is a localization of the coinvariant image",
    "abelianization-square": "(id x q) mu = delta_S pi",
    "truncated-iyer": "coinvariants of T(X_H) surject onto those of S(t_H) for O(G)",
}


@dataclass
class Check:
    tag: str
    name: str
    passed: bool
    witness: object = None

    def __post_init__(self):
        if self.tag not in STATEMENT_TAGS:
            raise ValueError("unregistered statement tag %r" % self.tag)
        self.passed = bool(self.passed)

    def to_json(self):
        return {"tag": self.tag, "name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class RunReport:
    command: str
    parameters: dict
    input_digest: str
    seed: int
    checks: list = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)

    def add(self, tag, name, passed, witness=None):
        self.checks.append(Check(tag, name, passed, witness))

    def extend(self, other, prefix):
        for c in other.checks:
            self.checks.append(Check(c.tag, "%s/%s" % (prefix, c.name), c.passed, c.witness))
        self.artifacts[prefix] = other.artifacts

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        checks = sorted((c.to_json() for c in self.checks), key=lambda c: (c["name"], c["tag"]))
        return {
            "report_version": REPORT_VERSION,
            "command": {"name": self.command, "parameters": self.parameters},
            "input_digest": self.input_digest,
            "seed": self.seed,
            "ok": self.ok,
            "checks": checks,
            "artifacts": self.artifacts,
        }

    def dumps(self):
        return canonical_dumps(self.to_json())

    def table(self):
        """Plain-text summary, one line per check."""
        rows = sorted(self.checks, key=lambda c: (c.name, c.tag))
        width = max((len(c.name) for c in rows), default=4)
        lines = ["%s  %s  %s" % ("PASS" if c.passed else "FAIL", c.name.ljust(width), c.tag) for c in rows]
        lines.append("%s: %d/%d checks passed" % (self.command, sum(c.passed for c in rows), len(rows)))
        return "\n".join(lines) + "\n"
