"""Command-line surface: batch analysis and regression runs.

Reports are deterministic: identical configuration (including seed) yields
byte-identical output.  JSON is the machine contract; text renders the same
data.  Every report embeds the tool version and a digest of its input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .core import (
    FiniteMonoid,
    cyclic,
    full_transformation,
    gl,
    load_cayley,
    null_monoid,
    property_battery,
    trivial,
    two_element_with_zero,
)
from .corpus import scan_corpus
from .errors import FactorbenchError
from .factorization import (
    IntegerFragment,
    classify_arithmetic,
    enumerate_factorizations,
    factorial_battery,
    format_atom_word,
    integer_class_table,
    is_powerful,
    is_prime,
    kappa_and_dichotomy,
    length_set,
    minimal_catalog,
    primes_up_to,
)
from .power import atomicity_criterion, build_reduced_power_monoid, kappa_report
from .presentations import (
    FAMILY_BUILDERS,
    CongruenceStatus,
    adian_check,
    bounded_length_set,
    congruent_bounded,
    normal_form,
    parse_presentation,
    sample_psi_invariance,
    verify_ladder_properties,
)
from .words import format_word_text, parse_word_text


@dataclass
class RunConfig:
    command: str
    source: str  # canonical description of the input, digested into reports
    max_len: int = 6
    budget: int = 20_000
    seed: int = 0
    fmt: str = "json"
    out: str | None = None
    args: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_len < 0 or self.budget <= 0 or self.seed < 0:
            raise ValueError("bounds must be positive")


def _digest(payload: bytes) -> str:
    return hashlib.sha256(payload).hexdigest()


def _load_monoid(ns) -> tuple[FiniteMonoid, str]:
    if ns.infile:
        with open(ns.infile, "rb") as fh:
            raw = fh.read()
        return load_cayley(ns.infile), _digest(raw)
    if ns.cyclic is not None:
        return cyclic(ns.cyclic), _digest(f"cyclic:{ns.cyclic}".encode())
    if ns.null is not None:
        return null_monoid(ns.null), _digest(f"null:{ns.null}".encode())
    if ns.gl is not None:
        n, m = ns.gl
        return gl(n, m), _digest(f"gl:{n},{m}".encode())
    if getattr(ns, "full_transformation", None) is not None:
        k = ns.full_transformation
        return full_transformation(k), _digest(f"full_transformation:{k}".encode())
    if getattr(ns, "two_zero", False):
        return two_element_with_zero(), _digest(b"two_element_with_zero")
    if getattr(ns, "trivial", False):
        return trivial(), _digest(b"trivial")
    raise FactorbenchError("no monoid given: use --in or an instance flag")


def _monoid_payload(H: FiniteMonoid, max_len_unused=None) -> dict:
    rep = property_battery(H)
    flags = classify_arithmetic(H)
    fact = factorial_battery(H)
    cat = minimal_catalog(H)
    kappa, union_lengths = kappa_and_dichotomy(H, cat)
    elements = []
    for x in H.elements():
        ls = length_set(H, x)
        elements.append(
            {
                "element": H.names[x],
                "lengths": ls.describe(),
                "minimal_classes": [
                    {
                        "counts": list(e.counts),
                        "representative": format_atom_word(H, e.representative),
                    }
                    for e in cat.classes_of(x)
                ],
            }
        )
    witness_names = {
        key: [H.names[i] for i in w] for key, w in rep.witnesses.items()
    }
    return {
        "size": H.size,
        "properties": {
            "acyclic": rep.acyclic,
            "unit_cancellative": rep.unit_cancellative,
            "cancellative": rep.cancellative,
            "normalizing": rep.normalizing,
            "commutative": rep.commutative,
            "reduced": rep.reduced,
            "group": rep.group,
            "witnesses": witness_names,
        },
        "classifiers": {
            "atomic": flags.atomic,
            "bf": flags.bf,
            "ff": flags.ff,
            "hf": flags.hf,
        },
        "factoriality": {
            "factorial": fact.factorial,
            "minimally_factorial": fact.minimally_factorial,
            "hmf": fact.hmf,
            "bmf": fact.bmf,
            "fmf": fact.fmf,
        },
        "atoms": [H.names[a] for a in H.atoms],
        "units": [H.names[u] for u in sorted(H.units)],
        "kappa": kappa,
        "minimal_length_union": list(union_lengths),
        "elements": elements,
    }


def _cmd_analyze(ns, cfg: RunConfig):
    H, digest = _load_monoid(ns)
    return 0, digest, _monoid_payload(H)


def _cmd_factorize(ns, cfg: RunConfig):
    H, digest = _load_monoid(ns)
    x = H.index_of(ns.element)
    words = enumerate_factorizations(H, x, cfg.max_len)
    ls = length_set(H, x)
    cat = minimal_catalog(H)
    payload = {
        "element": ns.element,
        "max_len": cfg.max_len,
        "factorizations": [format_atom_word(H, w) for w in words],
        "lengths": ls.describe(),
        "minimal_classes": [
            {
                "counts": list(e.counts),
                "representative": format_atom_word(H, e.representative),
            }
            for e in cat.classes_of(x)
        ],
    }
    return 0, digest, payload


def _cmd_powerset(ns, cfg: RunConfig):
    K, digest = _load_monoid(ns)
    build = build_reduced_power_monoid(K)
    criterion = atomicity_criterion(K)
    report = kappa_report(K)
    payload = {
        "base_size": K.size,
        "result_size": build.result.size,
        "atomicity_criterion": criterion,
        "kappa": report.kappa,
        "bound": report.bound,
        "attains_bound": report.attains_bound,
        "reduced": sorted(build.result.units) == [0],
        "subsets": list(build.result.names),
    }
    return 0, digest, payload


def _resolve_presentation(ns):
    if ns.infile:
        with open(ns.infile, "rb") as fh:
            raw = fh.read()
        return parse_presentation(raw.decode("utf-8")), _digest(raw)
    if ns.family:
        builder = FAMILY_BUILDERS[ns.family]
        if ns.family == "sandwich-power":
            P = builder(ns.n)
            return P, _digest(f"family:{ns.family}:{ns.n}".encode())
        return builder(), _digest(f"family:{ns.family}".encode())
    raise FactorbenchError("no presentation given: use --family or --in")


def _cmd_present(ns, cfg: RunConfig):
    P, digest = _resolve_presentation(ns)
    action = ns.action
    needed = {"adian": 0, "nf": 1, "congruent": 2, "lengths": 1, "verify": 0}[action]
    if len(ns.words) < needed:
        raise FactorbenchError(f"action {action!r} needs {needed} word argument(s)")
    payload: dict = {"family": P.family or "custom", "action": action}
    if action == "adian":
        chk = adian_check(P)
        payload.update(
            {
                "left_graph": [list(e) for e in chk.left_graph],
                "right_graph": [list(e) for e in chk.right_graph],
                "is_adian": chk.is_adian,
            }
        )
    elif action == "nf":
        if P.family != "ladder":
            raise FactorbenchError("nf is only decided for the ladder family")
        word = parse_word_text(ns.words[0])
        payload["input"] = format_word_text(word)
        payload["normal_form"] = format_word_text(normal_form(word))
    elif action == "congruent":
        u = parse_word_text(ns.words[0])
        v = parse_word_text(ns.words[1])
        res = congruent_bounded(P, u, v, cfg.budget)
        payload["status"] = res.status.value
        if res.status is CongruenceStatus.EQUIVALENT:
            payload["chain"] = [format_word_text(w) for w in res.chain]
            payload["chain_length"] = len(res.chain) - 1
        elif res.status is CongruenceStatus.REFUTED:
            payload["functional"] = dict(zip(P.generators, res.functional))
    elif action == "lengths":
        target = parse_word_text(ns.words[0])
        probe = bounded_length_set(P, target, cfg.max_len, cfg.budget)
        payload.update(
            {
                "target": format_word_text(target),
                "max_len": cfg.max_len,
                "lengths": list(probe.lengths),
                "complete": probe.complete,
                "generators_proven_atoms": probe.generators_proven_atoms,
            }
        )
    elif action == "verify":
        rep = verify_ladder_properties(ns.samples, cfg.max_len, cfg.seed)
        checked, failures = sample_psi_invariance(
            max(ns.samples // 10, 1), cfg.max_len, cfg.seed
        )
        payload.update(
            {
                "samples": rep.samples,
                "cancellation_hits": rep.cancellation_hits,
                "cancellation_failures": rep.cancellation_failures,
                "acyclicity_hits": rep.acyclicity_hits,
                "acyclicity_failures": rep.acyclicity_failures,
                "confluence_failures": rep.confluence_failures,
                "psi_pairs_checked": checked,
                "psi_failures": failures,
                "ok": rep.ok and failures == 0,
            }
        )
        return (0 if payload["ok"] else 2), digest, payload
    else:
        raise FactorbenchError(f"unknown action {action!r}")
    return 0, digest, payload


def _cmd_ints(ns, cfg: RunConfig):
    limit = ns.limit
    prime_bound = ns.prime_bound
    S = IntegerFragment(limit)
    digest = _digest(f"ints:{limit}:{prime_bound}".encode())

    # Unique factorization: exactly one congruence class per n.
    classes = integer_class_table(limit)
    non_unique = [n for n in range(2, limit + 1) if len(classes[n]) != 1]

    primes = [p for p in primes_up_to(prime_bound)]
    prime_failures = [p for p in primes if not is_prime(S, p)[0]]
    powerful_failures = [p for p in primes if not is_powerful(S, p)[0]]
    ok = not non_unique and not prime_failures and not powerful_failures
    payload = {
        "limit": limit,
        "prime_bound": prime_bound,
        "checked": limit - 1,
        "non_unique": non_unique[:10],
        "primes_checked": len(primes),
        "prime_failures": prime_failures,
        "powerful_failures": powerful_failures,
        "ok": ok,
    }
    return (0 if ok else 2), digest, payload


def _cmd_corpus(ns, cfg: RunConfig):
    violations = scan_corpus(max_order=ns.max_order)
    digest = _digest(f"corpus:{ns.max_order}".encode())
    payload = {
        "max_order": ns.max_order,
        "violations": violations,
        "ok": not violations,
    }
    return (0 if not violations else 2), digest, payload


def _render_text(data, indent=0) -> str:
    lines = []
    pad = "  " * indent
    if isinstance(data, dict):
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            elif isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}: {'{}' if isinstance(value, dict) else '[]'}")
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(data, list):
        for value in data:
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {value}")
    else:
        lines.append(f"{pad}{data}")
    return "\n".join(lines)


def _emit(report: dict, cfg: RunConfig) -> None:
    if cfg.fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = _render_text(report) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_monoid_flags(sub):
    sub.add_argument("--in", dest="infile", metavar="FILE", help="Cayley table JSON")
    sub.add_argument("--cyclic", type=int, metavar="N")
    sub.add_argument("--null", type=int, metavar="K")
    sub.add_argument("--gl", type=int, nargs=2, metavar=("N", "M"))
    sub.add_argument("--full-transformation", dest="full_transformation", type=int, metavar="M")
    sub.add_argument("--two-zero", dest="two_zero", action="store_true")
    sub.add_argument("--trivial", dest="trivial", action="store_true")


def _add_common_flags(sub):
    sub.add_argument("--max-len", dest="max_len", type=int, default=6, metavar="K")
    sub.add_argument("--budget", type=int, default=20_000, metavar="K")
    sub.add_argument("--seed", type=int, default=0, metavar="K")
    sub.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    sub.add_argument("--out", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorbench",
        description="Factorization workbench for finite monoids and presentations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="property battery, classifiers, catalog, kappa")
    _add_monoid_flags(p)
    _add_common_flags(p)

    p = subs.add_parser("factorize", help="factorizations of one element")
    p.add_argument("element", help="element name")
    _add_monoid_flags(p)
    _add_common_flags(p)

    p = subs.add_parser("powerset", help="reduced power monoid report")
    _add_monoid_flags(p)
    _add_common_flags(p)

    p = subs.add_parser("present", help="presentation tools")
    p.add_argument("action", choices=("adian", "nf", "congruent", "lengths", "verify"))
    p.add_argument("words", nargs="*", help="word literals for the action")
    p.add_argument("--in", dest="infile", metavar="FILE", help="presentation text")
    p.add_argument("--family", choices=tuple(FAMILY_BUILDERS))
    p.add_argument("--n", type=int, default=2, help="parameter for sandwich-power")
    p.add_argument("--samples", type=int, default=1000, help="samples for verify")
    _add_common_flags(p)

    p = subs.add_parser("ints", help="integer-fragment unique factorization demo")
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--prime-bound", dest="prime_bound", type=int, default=100)
    _add_common_flags(p)

    p = subs.add_parser("corpus", help="run the exhaustive small-monoid scan")
    p.add_argument("--max-order", dest="max_order", type=int, default=3)
    _add_common_flags(p)

    return parser


_HANDLERS = {
    "analyze": _cmd_analyze,
    "factorize": _cmd_factorize,
    "powerset": _cmd_powerset,
    "present": _cmd_present,
    "ints": _cmd_ints,
    "corpus": _cmd_corpus,
}


def dispatch(ns) -> int:
    cfg = RunConfig(
        command=ns.command,
        source="",
        max_len=ns.max_len,
        budget=ns.budget,
        seed=ns.seed,
        fmt=ns.fmt,
        out=ns.out,
    )
    code, digest, payload = _HANDLERS[ns.command](ns, cfg)
    report = {
        "version": __version__,
        "command": ns.command,
        "input_digest": digest,
        "report": payload,
    }
    _emit(report, cfg)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return dispatch(ns)
    except FactorbenchError as exc:
        print(f"factorbench: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"factorbench: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
