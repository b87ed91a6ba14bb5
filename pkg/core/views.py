import logging
import sys
from pathlib import Path

from gridtop import settings

from .complex import face_count
from .cutgen import build_cut_complex
from .exceptions import EXIT_FAILED, EXIT_OK, DomainError
from .graph import family_from_spec, parse_family
from .homology import cross_check, euler_characteristic, reduced_betti, wedge_profile
from .models import HomologySummary
from .morse import appendix_total2cut_matching, matching_report, sequence_matching, vertices_from_labels
from .serializers import (
    cases_to_csv,
    cases_to_json,
    homology_to_json,
    matching_report_to_json,
    read_facets,
    read_order,
    write_facets,
    write_order,
)
from .shelling import check_shelling_order, search_shelling_order, shelling_for_cut_2xn
from .utils import check_prime
from .verify import SweepBounds, all_passed, verify

logger = logging.getLogger(__name__)


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"Cannot read {path}: {exc.strerror or exc}") from None


def _emit(text, out=None):
    if out:
        Path(out).write_text(text)
        logger.info(f"📁 Wrote {out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _complex_from_args(args):
    if getattr(args, "input", None):
        return read_facets(_read(args.input))
    if not getattr(args, "family", None) or args.k is None:
        raise DomainError("Give either --input FILE or --family SPEC with --k")
    return build_cut_complex(family_from_spec(args.family), args.k, args.kind)


# === BUILD ===
def build_view(args):
    K = _complex_from_args(args)
    logger.info(f"Built {args.kind} {args.k}-cut complex of {args.family}: {len(K.facets)} facets")
    _emit(write_facets(K), args.out)
    return EXIT_OK


def graph_view(args):
    graph = family_from_spec(args.family)
    _emit(graph.to_dot(name=args.family.replace("'", "p").replace(":", "_")), args.out)
    return EXIT_OK


# === HOMOLOGY ===
def betti_view(args):
    K = _complex_from_args(args)
    p = check_prime(args.field if args.field is not None else settings.DEFAULT_PRIME)
    profile = reduced_betti(K, p)
    summary = HomologySummary(field=p, betti=profile.betti, euler=euler_characteristic(K), wedge=wedge_profile(profile))
    if args.text:
        lines = [str(profile), f"euler: {summary.euler}"]
        if summary.wedge is not None:
            lines.append(f"wedge: {summary.wedge.count} spheres of dimension {summary.wedge.dim}")
        _emit("\n".join(lines))
    else:
        _emit(homology_to_json(summary))

    if args.check:
        check = cross_check(K)
        if not check.ok:
            logger.warning(f"❌ Homology self-check failed on {face_count(K)} faces")
            return EXIT_FAILED
        logger.info("✅ Homology self-check passed")
    return EXIT_OK


# === SHELLING ===
class ShellView:
    """`shell check|build-2xn|search`; one method per action."""

    def dispatch(self, args):
        handler = {
            "check": self.check,
            "build-2xn": self.build_2xn,
            "search": self.search,
        }[args.action]
        return handler(args)

    def check(self, args):
        K = read_facets(_read(args.input))
        order = read_order(_read(args.order), K)
        verdict = check_shelling_order(K, order)
        if verdict:
            _emit(f"shelling: ok ({len(order)} facets)")
            return EXIT_OK
        _emit(f"shelling: fails at facet {verdict.failed_at}")
        return EXIT_FAILED

    def build_2xn(self, args):
        order = shelling_for_cut_2xn(args.n, args.k, args.budget)
        _emit(write_order(order), args.out)
        return EXIT_OK

    def search(self, args):
        K = read_facets(_read(args.input))
        found = search_shelling_order(K, args.budget)
        if found is None:
            _emit("shelling: none exists")
            return EXIT_FAILED
        _emit(write_order(found), args.out)
        return EXIT_OK


def shell_view(args):
    return ShellView().dispatch(args)


# === MORSE ===
def morse_view(args):
    family, size = parse_family(args.family)
    if args.vertices:
        K = build_cut_complex(family_from_spec(args.family), args.k, "total")
        names = [v.strip() for v in args.vertices.split(",") if v.strip()]
        matching = sequence_matching(K, vertices_from_labels(K, names))
        report = matching_report(K, matching)
    else:
        if args.k != 2:
            raise DomainError("The built-in matching sequence is defined for k = 2; pass --vertices otherwise")
        _, report = appendix_total2cut_matching(family, size[0], order=args.order)

    if args.report == "json":
        _emit(matching_report_to_json(report))
    else:
        lines = [f"pairs: {report.pairs}", f"acyclic: {report.acyclic}", f"critical: {report.n_critical}"]
        for d, faces in report.critical.items():
            lines.append(f"critical dim {d}: " + " ".join("{" + ",".join(f) + "}" for f in faces))
        if report.verdict is not None:
            lines.append(f"verdict: wedge of {report.verdict.count} spheres of dimension {report.verdict.dim}")
        _emit("\n".join(lines))
    return EXIT_OK if report.acyclic else EXIT_FAILED


# === VERIFY ===
def _primes(text):
    try:
        return tuple(check_prime(int(p)) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise DomainError(f"Bad prime list {text!r}: {exc}") from None


def verify_view(args):
    primes = _primes(args.primes) if args.primes else None
    bounds = SweepBounds().override(n_max=args.n_max, m_max=args.m_max, primes=primes)
    cases = verify(args.claim, bounds, workers=args.workers, progress=args.progress)

    if args.csv:
        _emit(cases_to_csv(cases), args.out)
    elif args.json:
        _emit(cases_to_json(cases), args.out)
    else:
        width = max((len(c.id) for c in cases), default=0)
        rows = [f"{'PASS' if c.passed else 'FAIL'}  {c.id:<{width}}  {c.params}" for c in cases]
        rows.append(f"{sum(c.passed for c in cases)}/{len(cases)} cases passed")
        _emit("\n".join(rows), args.out)

    if all_passed(cases):
        logger.info(f"✅ {args.claim}: {len(cases)} cases passed")
        return EXIT_OK
    logger.warning(f"❌ {args.claim}: {sum(not c.passed for c in cases)} of {len(cases)} cases failed")
    return EXIT_FAILED
