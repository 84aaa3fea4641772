"""Command-line interface: every subcommand prints a deterministic JSON report.

Exit status is 0 when all checks pass, 1 when some check fails and 2 for
input or size-limit errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import combinations_with_replacement

from . import __version__
from .errors import AlgebraError, InputError, SizeLimit
from .freehopf import FreeHopf
from .genbase import (
    build_presentation,
    localization_witness,
    prepare,
    skew_primitive_type,
    verify_generator_coinvariance,
)
from .groups import (
    abelianization,
    dedekind_determinant,
    lattice_basis_explicit,
    lattice_equals_oracle,
    primary_decompose,
)
from .hopf import grouplike_certify, hab_is_group_algebra, hab_quotient, verify_hopf
from .io import builtin_algebra, canonical_dumps, digest, hopf_to_json, load_group, load_hopf, ncpoly_from_json, parse_json_text
from .laurent import LaurentPoly
from .noether import coaction_action_dictionary_check, invariant_generators, theta_invariance_check
from .pitheory import (
    check_delta_T,
    check_mu_comodule_map,
    identities_in_degree,
    is_identity,
    mu,
    pi_abelianize,
    random_words,
    square_check,
    verify_canonical,
)
from .report import RunReport

ALGEBRA_COMMANDS = ("check-hopf", "grouplikes", "hab", "generic-base", "coinvariance", "pi-identity", "report-all")
GROUP_COMMANDS = ("lattice", "dedekind", "noether", "iyer-check")
CENSUS_LIMIT = 2000
MAX_THETA_DIM = 32
# above this dimension, pair checks use a seeded sample of PAIR_SAMPLE pairs
EXHAUSTIVE_DIM = 16
PAIR_SAMPLE = 64


def _sample_size(H):
    return None if H.dim <= EXHAUSTIVE_DIM else PAIR_SAMPLE


def _pairs(H, seed):
    """(x, y) pairs for two-argument checks, y = None meaning one argument."""
    import random

    pairs = [(x, None) for x in range(H.dim)] + [(x, y) for x in range(H.dim) for y in range(H.dim)]
    k = _sample_size(H)
    if k is None:
        return pairs
    rng = random.Random(seed)
    return sorted(rng.sample(pairs, k), key=lambda p: (p[0], -1 if p[1] is None else p[1]))


# ------------------------------------------------------------------ inputs
class Inputs:
    """Resolved command inputs: an algebra, a group, or both."""

    def __init__(self, args):
        self.args = args
        self.H = None
        self.G = None
        self.digest = None
        self.label = None
        if getattr(args, "input", None):
            self.H, self.digest = load_hopf(args.input)
            self.label = os.path.basename(args.input)
        elif getattr(args, "builtin", None):
            self.H = builtin_algebra(args.builtin)
            self.digest = digest(canonical_dumps(hopf_to_json(self.H)))
            self.label = args.builtin
        if getattr(args, "group", None) or getattr(args, "group_file", None):
            self.G, gd = load_group(args.group, args.group_file)
            if self.digest is None:
                self.digest = gd
                self.label = args.group or os.path.basename(args.group_file)

    def require_algebra(self):
        if self.H is None:
            raise InputError("this command needs --input or --builtin", "input")
        return self.H


def _params(args, inputs):
    return {
        "input": inputs.label,
        "max_degree": args.max_degree,
        "det_size_limit": args.det_size_limit,
    }


def _new_report(command, args, inputs):
    return RunReport(command, _params(args, inputs), inputs.digest, args.seed)


def _fail_from(report, tag, name, exc):
    report.add(tag, name, False, {"error": type(exc).__name__, "message": str(exc)})


# ---------------------------------------------------------------- commands
def cmd_check_hopf(H, args, report):
    result = verify_hopf(H)
    for c in result.checks:
        report.add("hopf-axioms", "axiom:" + c.name, c.ok, c.witness)
    report.artifacts["algebra"] = {"name": H.name, "dim": H.dim, "cyclotomic_order": H.field.order}


def cmd_grouplikes(H, args, report):
    try:
        GL = grouplike_certify(H)
    except AlgebraError as exc:
        _fail_from(report, "grouplikes", "grouplikes:certified", exc)
        report.artifacts["grouplikes"] = {
            "coradical_dim": getattr(exc, "coradical_dim", None),
            "declared": getattr(exc, "declared", None),
        }
        return None
    report.add("grouplikes", "grouplikes:certified", True)
    report.add("grouplikes", "grouplikes:pointed", GL.pointed, {"coradical_dim": GL.coradical_dim, "ell": GL.ell})
    if H.is_commutative():
        holds = (not GL.pointed) or GL.ell == H.dim
        report.add("commutative-pointed-group-algebra", "grouplikes:commutative_pointed_spanned", holds)
    art = GL.to_json(H)
    art["group"] = GL.group.to_json()
    report.artifacts["grouplikes"] = art
    return GL


def cmd_hab(H, args, report):
    QH = hab_quotient(H)
    report.add("grouplikes", "hab:hopf_axioms", verify_hopf(QH.quotient).ok)
    art = {"dim": QH.dim, "basis": [H.basis[i] for i in QH.section]}
    try:
        GL = grouplike_certify(H, require_pointed=False)
        info = hab_is_group_algebra(QH, GL)
        report.add("commutative-pointed-group-algebra", "hab:is_group_algebra", info.ok, info.witness)
        if info.ok:
            art["group"] = info.Gbar.to_json()
            art["image_of_grouplikes"] = [info.Gbar.elements[k] for k in info.qbar]
    except AlgebraError as exc:
        _fail_from(report, "commutative-pointed-group-algebra", "hab:is_group_algebra", exc)
    report.artifacts["hab"] = art


def _context(H, args, report, name):
    try:
        return prepare(H, args.seed)
    except AlgebraError as exc:
        _fail_from(report, "pointed-presentation", name + ":hypotheses", exc)
        return None


PRESENTATION_TAGS = {
    "lattice_oracle": "lattice-basis",
    "lattice_det_equals_gbar": "lattice-basis",
    "laurent_degree_bound": "pointed-presentation",
    "poly_degree_le_2": "degree-two-generators",
    "generators_coinvariant": "generic-base-inclusion",
    "jacobian_rank": "pointed-presentation",
    "counts": "pointed-presentation",
}


def cmd_generic_base(H, args, report, ctx=None):
    ctx = ctx or _context(H, args, report, "generic-base")
    if ctx is None:
        return
    try:
        pres = build_presentation(ctx.H, seed=args.seed, ctx=ctx)
    except AlgebraError as exc:
        _fail_from(report, "retraction-gamma", "generic-base:gamma", exc)
        return
    group_case = pres.ell == pres.n
    for name, ok in sorted(pres.checks.items()):
        tag = PRESENTATION_TAGS[name]
        if group_case and tag == "pointed-presentation":
            tag = "group-algebra-presentation"
        report.add(tag, "generic-base:" + name, ok)
    for name, cert in sorted(pres.gamma_certificate.items()):
        report.add("retraction-gamma", "generic-base:gamma:" + name, cert["ok"], cert.get("witness"))
    if group_case:
        report.add("group-algebra-base", "generic-base:all_generators_laurent", not pres.poly_gens)
    report.artifacts["presentation"] = pres.to_json()


def _census(F, QH, D):
    n = F.n
    total = sum(1 for d in range(D + 1) for _ in combinations_with_replacement(range(n), d))
    if total > CENSUS_LIMIT:
        return {"skipped": "%d monomials exceed the census limit %d" % (total, CENSUS_LIMIT)}
    coinv = []
    for d in range(D + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            if F.is_coinvariant(LaurentPoly.monomial(n, e), QH):
                coinv.append(F.fmt(LaurentPoly.monomial(n, e)))
    return {"max_degree": D, "monomials": total, "coinvariant": coinv}


def _witness_targets(H, idx):
    gset = set(idx)
    for x in range(H.dim):
        if x in gset or (skew_primitive_type(H, x, gset) is not None and not H.counit[x]):
            yield x


def cmd_coinvariance(H, args, report, ctx=None):
    ctx = ctx or _context(H, args, report, "coinvariance")
    if ctx is None:
        return
    F, QH, H = ctx.F, ctx.QH, ctx.H
    bad = F.check_tinv()
    report.add("free-hopf-structure", "coinvariance:tinv_relations", not bad, bad or None)
    bad = F.check_counit_law()
    report.add("free-hopf-structure", "coinvariance:counit_law", not bad, bad or None)
    bad = F.check_antipode_involution()
    report.add("free-hopf-structure", "coinvariance:antipode_involution", not bad, bad or None)
    bad = F.check_coaction(QH)
    report.add("free-hopf-structure", "coinvariance:coaction_axioms", not bad, bad or None)
    if H.dim <= MAX_THETA_DIM:
        theta, theta_p = F.theta_pair
        report.add("theta-grouplike", "coinvariance:theta_grouplike", F.is_grouplike(theta))
        report.add("theta-grouplike", "coinvariance:theta_prime_grouplike", F.is_grouplike(theta_p))
        prod = F.qtilde(theta * theta_p, QH)
        report.add("theta-grouplike", "coinvariance:q_theta_theta_prime", prod == QH.quotient.one())
    k = _sample_size(H)
    poly = verify_generator_coinvariance(F, QH, kinds=("p", "q"), sample=k, seed=args.seed)
    report.add("generic-base-inclusion", "coinvariance:p_q_generators", poly["ok"], poly["failures"] or None)
    frac = verify_generator_coinvariance(F, QH, kinds=("sigma", "sigma_inv", "p_prime", "q_prime"), sample=k, seed=args.seed)
    report.add("coinvariants-localization", "coinvariance:fraction_generators", frac["ok"], frac["failures"] or None)
    records = []
    for x in _witness_targets(H, ctx.grouplike_indices):
        records += localization_witness(F, x, None, ctx.grouplike_indices)
        for y in ctx.grouplike_indices:
            records += [r for r in localization_witness(F, x, y, ctx.grouplike_indices) if "y" in r]
    failing = [r for r in records if not r["holds"]]
    report.add("localization-formulas", "coinvariance:localization_formulas", not failing, failing or None)
    report.artifacts["coinvariance"] = {
        "generator_counts": dict(sorted({**poly["counts"], **frac["counts"]}.items())),
        "sampled": k is not None,
        "localization_identities": len(records),
        "census": _census(F, QH, args.max_degree),
    }


def cmd_pi_identity(H, args, report, ctx=None):
    F = ctx.F if ctx else FreeHopf(H, invertible=[])
    H = F.H
    QH = ctx.QH if ctx else hab_quotient(H)
    names = H.basis
    bad = check_delta_T(H)
    report.add("identity-ideal", "pi-identity:delta_T_coassociative", not bad, bad or None)
    words = random_words(H.dim, count=100, max_length=4, seed=args.seed)
    failing = [w.to_string(names) for w in words if not square_check(F, QH, w)]
    report.add("abelianization-square", "pi-identity:square_random_words", not failing, failing[:5] or None)
    comodule_sample = words[:20] if _sample_size(H) is None else words[:5]
    failing = [w.to_string(names) for w in comodule_sample if not check_mu_comodule_map(F, w)]
    report.add("identity-ideal", "pi-identity:mu_comodule_map", not failing, failing[:5] or None)
    art = {"random_words": len(words)}
    if args.poly:
        try:
            with open(args.poly, "rb") as fh:
                P = ncpoly_from_json(parse_json_text(fh.read().decode("utf-8"), args.poly), H)
        except OSError as exc:
            raise InputError("cannot read %s: %s" % (args.poly, exc.strerror), "poly") from exc
        value = mu(F, P)
        art["poly"] = {
            "input": P.to_string(names),
            "mu": value.to_json(F.names),
            "pi": F.fmt(pi_abelianize(P)),
            "is_identity": is_identity(F, P),
        }
        report.add("abelianization-square", "pi-identity:square_input", square_check(F, QH, P))
        report.add("identity-ideal", "pi-identity:mu_comodule_map_input", check_mu_comodule_map(F, P))
    if ctx is not None:
        bad = []
        pairs = _pairs(H, args.seed)
        for x, y in pairs:
            r = verify_canonical(F, x, y)
            if not all(r.values()):
                bad.append({"x": names[x], "y": None if y is None else names[y], **r})
        art["canonical_pairs_checked"] = len(pairs)
        report.add("canonical-coinvariants", "pi-identity:canonical_coinvariants", not bad, bad[:5] or None)
        wit = []
        for x in _witness_targets(H, ctx.grouplike_indices):
            for r in localization_witness(F, x, None, ctx.grouplike_indices):
                r = dict(r, mu_equals_p=verify_canonical(F, x)["mu_equals_generator"])
                wit.append(r)
        failing = [r for r in wit if not (r["holds"] and r["mu_equals_p"])]
        report.add("localization-witnesses", "pi-identity:localization_witnesses", not failing, failing or None)
    if H.dim ** 2 <= 1024:
        ids = identities_in_degree(F, 2)
        art["degree2_identities"] = [P.to_string(names) for P in ids]
        sample = words[:10]
        closed = all(is_identity(F, P * w) and is_identity(F, w * P) for P in ids[:3] for w in sample)
        report.add("identity-ideal", "pi-identity:identities_form_ideal", closed)
    report.artifacts["pi_identity"] = art


def _group_for(inputs, args, report, name):
    """The group for a group command: explicit, or G(H) of the algebra."""
    if inputs.G is not None:
        G = inputs.G
        Gab, proj = abelianization(G)
        return G, proj, Gab
    H = inputs.require_algebra()
    ctx = _context(H, args, report, name)
    if ctx is None:
        return None
    return ctx.grouplikes.group, ctx.hab.qbar, ctx.hab.Gbar


def cmd_lattice(inputs, args, report):
    found = _group_for(inputs, args, report, "lattice")
    if found is None:
        return
    G, proj, Gbar = found
    dec = primary_decompose(Gbar)
    lat = lattice_basis_explicit(G, proj, dec)
    report.add("lattice-basis", "lattice:oracle_equal", lattice_equals_oracle(lat, G, proj, dec))
    report.add("lattice-basis", "lattice:det_equals_gbar", abs(lat.det()) == Gbar.order, {"det": lat.det()})
    report.add(
        "pointed-presentation",
        "lattice:degree_bound",
        max(lat.degrees()) <= dec.d - dec.r + 1,
        {"degrees": lat.degrees(), "bound": dec.d - dec.r + 1},
    )
    report.artifacts["lattice"] = {"group": G.name, "decomposition": dec.to_json(), "basis": lat.to_json()}


def cmd_dedekind(inputs, args, report):
    found = _group_for(inputs, args, report, "dedekind")
    if found is None:
        return
    G = found[0]
    theta = dedekind_determinant(G, args.det_size_limit)
    names = ["t[%s]" % x for x in G.elements]
    inv = theta_invariance_check(G, args.det_size_limit)
    report.add("group-coaction-action", "dedekind:theta_square_invariant", inv["square_invariant"])
    report.add("group-coaction-action", "dedekind:character_is_sign", inv["character_is_sign"], inv["character"])
    dic = coaction_action_dictionary_check(G, seed=args.seed)
    report.add("group-coaction-action", "dedekind:coaction_matches_action", dic["coaction_matches_action"], dic["witnesses"] or None)
    report.add("group-coaction-action", "dedekind:coinvariant_iff_invariant", dic["coinvariant_iff_invariant"])
    report.add("group-coaction-action", "dedekind:coproduct_formula", dic["coproduct_formula"])
    report.artifacts["dedekind"] = {"group": G.name, "theta": theta.to_string(names), "terms": len(theta)}


def cmd_noether(inputs, args, report):
    found = _group_for(inputs, args, report, "noether")
    if found is None:
        return
    G = found[0]
    # degrees beyond |G| + 1 cannot produce new generators here
    sl = invariant_generators(G, min(args.max_degree, G.order + 1))
    for d, (dim, _) in sorted(sl.dims_by_degree.items()):
        report.add("noether-number", "noether:molien_degree_%d" % d, dim == sl.molien[d], {"orbit_sums": dim, "molien": sl.molien[d]})
    report.add(
        "noether-number",
        "noether:top_degree_at_most_order",
        sl.top_degree <= G.order,
        {"top_degree": sl.top_degree, "order": G.order},
    )
    report.artifacts["noether"] = sl.to_json()


def cmd_iyer(inputs, args, report):
    from .pitheory import iyer_truncated_check

    found = _group_for(inputs, args, report, "iyer-check")
    if found is None:
        return
    G = found[0]
    result = iyer_truncated_check(G, args.max_degree)
    for rec in result["degrees"]:
        report.add("truncated-iyer", "iyer:degree_%d" % rec["degree"], rec["ok"], rec)
    report.artifacts["iyer"] = {"group": G.name, "max_degree": result["max_degree"]}


def cmd_report_all(inputs, args, report):
    H = inputs.require_algebra()
    sections = [("check-hopf", cmd_check_hopf), ("grouplikes", cmd_grouplikes), ("hab", cmd_hab)]
    for name, fn in sections:
        sub = RunReport(name, {}, None, args.seed)
        fn(H, args, sub)
        report.extend(sub, name)
    sub = RunReport("generic-base", {}, None, args.seed)
    ctx = _context(H, args, sub, "generic-base")
    if ctx is not None:
        for name, fn in (("generic-base", cmd_generic_base), ("coinvariance", cmd_coinvariance), ("pi-identity", cmd_pi_identity)):
            part = RunReport(name, {}, None, args.seed)
            fn(ctx.H, args, part, ctx=ctx)
            report.extend(part, name)
        group_inputs = _GroupInputs(ctx.grouplikes.group)
        for name, fn in (("lattice", cmd_lattice), ("dedekind", cmd_dedekind), ("noether", cmd_noether), ("iyer-check", cmd_iyer)):
            part = RunReport(name, {}, None, args.seed)
            try:
                fn(group_inputs, args, part)
            except SizeLimit as exc:
                part.artifacts = {"skipped": str(exc)}
            report.extend(part, name)
    else:
        report.extend(sub, "generic-base")


class _GroupInputs:
    def __init__(self, G):
        self.G = G
        self.H = None


# ---------------------------------------------------------------- argparse
def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", help="Hopf algebra JSON file")
    src.add_argument("--builtin", help="built-in algebra: sweedler, taft3, uqbar2, k[S3], O(Z4), ...")
    src.add_argument("--group", help="built-in group: trivial, Z<n>, D<n>, S3, Q8, Z2xZ2")
    src.add_argument("--group-file", help="group JSON file with elements and table")
    common.add_argument("--max-degree", type=int, default=4, help="degree cap for censuses and invariants (default 4)")
    common.add_argument("--det-size-limit", type=int, default=8, help="largest Dedekind determinant (default 8)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    common.add_argument("--output", help="write the JSON report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json", help="json report or a text table")

    parser = argparse.ArgumentParser(prog="hopfbase", description="Exact checks for generic base algebras of Hopf algebras.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subs = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check-hopf": "verify the Hopf algebra axioms",
        "grouplikes": "certify group-likes and pointedness",
        "hab": "largest commutative quotient",
        "generic-base": "presentation of the generic base algebra",
        "lattice": "lattice basis for a group or for G(H)",
        "dedekind": "Dedekind determinant and the O(G) dictionary",
        "noether": "generators of the regular invariant ring",
        "coinvariance": "free Hopf algebra, coinvariance and localization checks",
        "pi-identity": "polynomial identities, mu and the abelianization square",
        "iyer-check": "truncated coinvariant surjectivity for O(G)",
        "report-all": "every applicable check for an algebra",
    }
    for name, text in helps.items():
        p = subs.add_parser(name, parents=[common], help=text, description=text)
        if name == "pi-identity":
            p.add_argument("--poly", help="JSON list of [word, scalar] pairs")
    return parser


def run(argv=None):
    """Parse arguments and build the report; returns ``(report, args)``."""
    args = build_parser().parse_args(argv)
    if not hasattr(args, "poly"):
        args.poly = None
    inputs = Inputs(args)
    report = _new_report(args.command, args, inputs)
    if args.command in GROUP_COMMANDS:
        {"lattice": cmd_lattice, "dedekind": cmd_dedekind, "noether": cmd_noether, "iyer-check": cmd_iyer}[args.command](
            inputs, args, report
        )
    elif args.command == "report-all":
        cmd_report_all(inputs, args, report)
    else:
        H = inputs.require_algebra()
        fn = {
            "check-hopf": cmd_check_hopf,
            "grouplikes": cmd_grouplikes,
            "hab": cmd_hab,
            "generic-base": cmd_generic_base,
            "coinvariance": cmd_coinvariance,
            "pi-identity": cmd_pi_identity,
        }[args.command]
        if args.command == "pi-identity":
            ctx = None
            try:
                ctx = prepare(H, args.seed)
            except AlgebraError:
                pass
            fn(H, args, report, ctx=ctx)
        else:
            fn(H, args, report)
    return report, args


def main(argv=None):
    try:
        report, args = run(argv)
    except (InputError, SizeLimit) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    text = report.dumps() if args.format == "json" else report.table()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
