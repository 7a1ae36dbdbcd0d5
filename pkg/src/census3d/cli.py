"""Batch command-line interface.

Subcommands generate censuses, annotate existing census files with computed
properties, and verify counts against the built-in reference tables.  Exit
codes: 1 malformed input, 2 checkpoint mismatch, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import sys

from . import balls as balls_mod
from . import bistellar, expected
from .canonical import automorphism_group
from .censusio import (
    DedupeStore,
    facets_from_str,
    facets_to_str,
    format_record,
    parse_record,
    read_census,
    read_single_census,
    write_census,
)
from .complexes import Complex, closed_fvector_ok
from .decompose import constructibility_certificate, is_shellable, is_vertex_decomposable, verify_shelling
from .homology import classify, walkup_check
from .manifolds import (
    CheckpointMismatch,
    InvariantViolation,
    build_link_catalog,
    enumerate_2spheres,
    enumerate_3manifold_forms,
)


def _annotate(facets, which):
    K = Complex(facets)
    ann = {}
    if "fvec" in which:
        ann["fvec"] = K.f_vector()
    if "type" in which:
        ann["type"] = classify(K)
    if "group" in which:
        g = automorphism_group(K)
        ann["|G|"] = g.order
        ann["transitive"] = g.transitive
    if "shellable" in which:
        ann["shellable"] = is_shellable(K) is not None
    if "vd" in which:
        ann["vd"] = is_vertex_decomposable(K)
    return ann


def _cmd_enum2(args):
    if args.vertices:
        spheres = enumerate_2spheres(args.vertices)
        sections = [(2, args.vertices, [(facets_to_str(K.facets), {"fvec": K.f_vector()})
                                        for K in spheres])]
    else:
        sections = []
        for n in range(9, 3, -1):
            spheres = enumerate_2spheres(n)
            sections.append((2, n, [(facets_to_str(K.facets), {"fvec": K.f_vector()})
                                    for K in spheres]))
    write_census(args.out, sections)
    total = sum(len(rows) for _, _, rows in sections)
    print(f"wrote {total} 2-spheres to {args.out}")
    return 0


def _load_catalog(path):
    if not path:
        return None
    catalog = []
    for meta, rows in read_census(path):
        if meta["dim"] != 2:
            raise ValueError("catalog file must contain 2-spheres")
        catalog.extend(Complex(facets_from_str(fs)) for fs, _ in rows)
    return catalog


def _cmd_enum3(args):
    catalog = _load_catalog(args.catalog_file)
    forms = enumerate_3manifold_forms(
        args.vertices, jobs=args.jobs, checkpoint=args.checkpoint, catalog=catalog)
    rows = []
    summary = {}
    for facets in forms:
        ann = _annotate(facets, ("fvec", "type", "group"))
        if not closed_fvector_ok(ann["fvec"]):
            raise InvariantViolation(f"bad f-vector {ann['fvec']}")
        if not walkup_check(Complex(facets), ann["type"]):
            raise InvariantViolation("edge-count lower bound violated")
        summary[ann["type"]] = summary.get(ann["type"], 0) + 1
        rows.append((facets_to_str(facets), ann))
    write_census(args.out, [(3, args.vertices, rows)])
    parts = ", ".join(f"{v} {k}" for k, v in sorted(summary.items()))
    print(f"wrote {len(rows)} manifolds to {args.out} ({parts})")
    return 0


def _cmd_balls(args):
    meta, rows = read_single_census(args.spheres)
    store = DedupeStore()
    spheres = 0
    for facet_str, ann in rows:
        if ann.get("type", "S3") != "S3":
            continue
        spheres += 1
        S = Complex(facets_from_str(facet_str))
        for B in balls_mod.balls_from_sphere(S, verify=False):
            from .canonical import canonical_facets

            store.add(facets_to_str(canonical_facets(B.facets)))
    out_rows = [(key, {"fvec": Complex(facets_from_str(key)).f_vector()})
                for key in store]
    write_census(args.out, [(3, meta["n"] - 1, out_rows)])
    print(f"wrote {len(out_rows)} balls from {spheres} spheres to {args.out}")
    return 0


def _annotate_file(args, which):
    meta, rows = read_single_census(args.infile)
    out_rows = []
    for facet_str, ann in rows:
        ann.update(_annotate(facets_from_str(facet_str), which))
        out_rows.append((facet_str, ann))
    write_census(args.out, [(meta["dim"], meta["n"], out_rows)])
    print(f"annotated {len(out_rows)} records into {args.out}")
    return 0


def _cmd_constructible(args):
    meta, rows = read_single_census(args.infile)
    failures = 0
    splits = []
    for facet_str, _ in rows:
        B = Complex(facets_from_str(facet_str))
        cert = constructibility_certificate(B)
        if cert is None:
            failures += 1
            print(f"UNRESOLVED\t{facet_str}")
        elif cert[0] == "split":
            splits.append((facet_str, cert))
    print(f"{len(rows) - failures}/{len(rows)} certified constructible "
          f"({len(splits)} via splits)")
    if args.splits_out and splits:
        with open(args.splits_out, "w") as fh:
            for facet_str, (_, K1, K2, _, _, interface) in splits:
                fh.write(f"ball\t{facet_str}\n")
                fh.write(f"part1\t{facets_to_str(K1.facets)}\n")
                fh.write(f"part2\t{facets_to_str(K2.facets)}\n")
                fh.write(f"interface\t{facets_to_str(interface.facets)}\n")
    return 0 if failures == 0 else 1


def _cmd_bistellar(args):
    meta, rows = read_single_census(args.infile)
    certified = 0
    for facet_str, ann in rows:
        K = Complex(facets_from_str(facet_str))
        R = bistellar.reduce(K, budget=args.budget, seed=args.seed)
        ok = bistellar.certifies_sphere(R)
        certified += ok
        if args.verbose:
            print(f"{'SPHERE' if ok else 'UNREDUCED'}\t{facet_str}")
    print(f"{certified}/{len(rows)} certified as 3-spheres "
          f"(budget {args.budget}, seed {args.seed})")
    return 0


def _cmd_shell(args):
    meta, rows = read_single_census(args.infile)
    out_rows = []
    bad = 0
    for facet_str, ann in rows:
        K = Complex(facets_from_str(facet_str))
        witness = is_shellable(K)
        if witness is not None and not verify_shelling(K, witness):
            raise InvariantViolation("shelling witness failed replay")
        ann["shellable"] = witness is not None
        bad += witness is None
        out_rows.append((facet_str, ann))
    write_census(args.out, [(meta["dim"], meta["n"], out_rows)])
    print(f"annotated {len(out_rows)} records into {args.out} ({bad} non-shellable)")
    return 0


def _cmd_verify(args):
    failures = 0

    def check(label, computed, wanted):
        nonlocal failures
        ok = computed == wanted
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {label}: computed {computed}, expected {wanted}")

    counts = {n: len(enumerate_2spheres(n)) for n in range(4, 10)}
    check("link catalog size", sum(counts.values()), expected.SPHERE2_TOTAL)
    for n, c in counts.items():
        check(f"2-spheres n={n}", c, expected.SPHERE2_COUNTS[n])

    catalog = build_link_catalog()
    for n in range(5, args.max_vertices + 1):
        forms = enumerate_3manifold_forms(n, jobs=args.jobs, catalog=catalog)
        split = {"All": len(forms), "S3": 0, "S2xS1": 0, "S2twistS1": 0}
        nontrivial = 0
        records = []
        for facets in forms:
            K = Complex(facets)
            records.append(K)
            split[classify(K)] += 1
            nontrivial += automorphism_group(K).order > 1
        check(f"manifolds n={n}", split, expected.MANIFOLD_COUNTS[n])
        check(f"nontrivial symmetry n={n}", nontrivial,
              expected.NONTRIVIAL_GROUP_COUNTS[n])
        if n <= args.max_vertices:
            m = n - 1
            spheres = [K for K in records if classify(K) == "S3"]
            nballs = len(balls_mod.enumerate_balls(m, spheres))
            check(f"balls m={m}", nballs, expected.BALL_COUNTS[m])
    return 0 if failures == 0 else 1


def main(argv=None):
    ap = argparse.ArgumentParser(prog="census3d", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum2", help="enumerate triangulated 2-spheres")
    p.add_argument("--vertices", type=int, help="single vertex count (4..9); omit for the full catalog")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enum2)

    p = sub.add_parser("enum3", help="enumerate triangulated closed 3-manifolds")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", help="path prefix for resumable work-unit files")
    p.add_argument("--catalog-file", help="precomputed link catalog census file")
    p.set_defaults(func=_cmd_enum3)

    p = sub.add_parser("balls", help="derive the ball census from a sphere census")
    p.add_argument("--spheres", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_balls)

    for name, which in (("classify", ("fvec", "type")), ("autgroup", ("group",)),
                        ("vd", ("vd",))):
        p = sub.add_parser(name, help=f"annotate a census file with {which}")
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--out", required=True)
        p.set_defaults(func=lambda a, w=which: _annotate_file(a, w))

    p = sub.add_parser("shell", help="annotate a census file with shellability")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_shell)

    p = sub.add_parser("constructible", help="constructibility certificates for a ball census")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--splits-out", help="write split certificates to this file")
    p.set_defaults(func=_cmd_constructible)

    p = sub.add_parser("bistellar", help="certify 3-spheres by bistellar reduction")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_bistellar)

    p = sub.add_parser("verify", help="check computed counts against the reference tables")
    p.add_argument("--max-vertices", type=int, default=8,
                   help="largest manifold vertex count to recompute (default 8)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CheckpointMismatch as exc:
        print(f"checkpoint mismatch: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
