"""dblcat: run the checkers from the command line and emit a JSON report.

Exit status is 0 when every verdict with a shipped expectation matches it,
1 on a mismatch, and 2 on bad configuration or malformed input.
"""
import argparse
import functools
import json
import random
import sys
import time
from importlib import resources

from . import __version__
from .double import UnsupportedInstance
from .finset import InvalidInput
from .verdict import Verdict

SCHEMA = "dblcat-report/1"
INSTANCES = ("span", "rel", "vmat", "prof")


class ConfigError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def _data(name):
    return json.loads(resources.files("dblcat").joinpath("data", name).read_text())


def citations():
    return _data("citations.json")


def expectations():
    return _data("expectations.json")


def instance(name):
    if name == "span":
        from .span import span_double_category
        return span_double_category()
    if name == "rel":
        from .rel import rel_double_category
        return rel_double_category()
    if name == "vmat":
        from .vmat import vmat_double_category
        return vmat_double_category()
    if name == "prof":
        from .prof import prof_of_finset
        return prof_of_finset()
    raise ConfigError("unknown instance %r" % name)


class Report:
    def __init__(self, command, config):
        self.command = command
        self.config = config
        self.rows = []

    def add(self, check, cite, verdict, expect_key=None, inst=None, wall=0.0, extra=None):
        if cite not in citations():
            raise KeyError("citation %r missing from the index" % cite)
        status = verdict.status if isinstance(verdict, Verdict) else verdict["status"]
        expected = expectations().get(expect_key, {}).get(inst) if expect_key else None
        row = {"check": check, "citation": citations()[cite], "status": status,
               "expected": expected, "match": None if expected is None else status == expected}
        if isinstance(verdict, Verdict):
            row.update(checked=verdict.checked, exhaustive=verdict.exhaustive,
                       counterexample=verdict.counterexample)
            if verdict.note:
                row["note"] = verdict.note
        if extra:
            row.update(extra)
        row["wall_time"] = round(wall, 3)
        self.rows.append(row)
        return row

    @property
    def ok(self):
        return all(r["match"] is not False for r in self.rows)

    def to_json(self):
        return {"schema": SCHEMA, "version": __version__, "command": self.command,
                "config": self.config, "rows": self.rows, "ok": self.ok}

    def human(self):
        lines = []
        for r in self.rows:
            exp = "" if r["expected"] is None else " (expected %s%s)" % (
                r["expected"], "" if r["match"] else ", MISMATCH")
            lines.append("%-8s %s%s" % (r["status"].upper(), r["check"], exp))
        lines.append("result: %s" % ("ok" if self.ok else "mismatch"))
        return "\n".join(lines)


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


# -- subcommands ----------------------------------------------------------------------

def cmd_laws(args, rep):
    from .double import check_laws
    d = instance(args.instance)
    # profunctor frames grow fast: enumerate the smallest categories, sample the next size
    full = min(args.max_size, 1 if args.instance == "prof" else 2)
    vs, wall = _timed(lambda: check_laws(d, max_size=full, samples=args.samples,
                                         seed=args.seed, sample_size=max(args.max_size, full)))
    for v in vs:
        cite = "double.interchange" if v.name == "interchange" else "double.definition"
        rep.add("laws." + v.name, cite, v, "laws", args.instance, wall / len(vs))


def cmd_fibrancy(args, rep):
    from .fibrancy import check_fibrancy
    d = instance(args.instance)
    for check in ("companions", "adjunction", "fillings"):
        size = args.max_size if check != "fillings" else min(args.max_size, 2)
        v, wall = _timed(lambda: check_fibrancy(d, max_size=size, check=check, seed=args.seed))
        rep.add("fibrancy." + check, "fibrancy." + check, v, "fibrancy", args.instance, wall)


def cmd_cartesian(args, rep):
    from . import cartesian
    d = instance(args.instance)
    w = cartesian.build_cartesian(d)
    small = min(args.max_size, 2)
    runs = [
        ("precartesian", lambda: cartesian.check_precartesian(d, w, small, args.samples, args.seed)),
        ("pseudo", lambda: cartesian.check_pseudo(d, w, small, args.samples, args.seed)),
    ]
    if args.instance != "prof":
        runs.append(("local_products", lambda: cartesian.check_local_products(
            d, w, small, max(1, args.samples // 4), args.seed)))
    runs.append(("unit_pure", lambda: cartesian.check_unit_pure(d, small)))
    for name, fn in runs:
        v, wall = _timed(fn)
        rep.add("cartesian." + name, "cartesian." + name, v, name, args.instance, wall)


def cmd_tabulator(args, rep):
    from . import tabulators
    from .cartesian import build_cartesian
    from .verdict import Tally
    if args.instance == "prof":
        raise ConfigError("tabulators are constructed for span, rel and vmat only")
    d = instance(args.instance)
    w = build_cartesian(d)
    rng = random.Random(args.seed)
    objs = d.objects(args.max_size)
    tl = Tally("tabulator")

    def run():
        for _ in range(args.samples):
            A, X = rng.choice(objs), rng.choice(objs)
            F = d.sample_horizontal(rng, A, X)
            t = tabulators.tabulator(d, w, F)
            v = tabulators.verify_strong_tabulator(d, t, F)
            ok = v.passed and (args.instance != "span" or tabulators.apex_matches(t, F) is not None)
            tl.record(ok, lambda: {"F": d.dump(F), "failed": v.counterexample})
        return tl.verdict()
    v, wall = _timed(run)
    rep.add("tabulator.strong", "tabulators.strong", v, "tabulator", args.instance, wall)


def cmd_characterize(args, rep):
    from .equivalence import characterization_report
    d = instance(args.instance)
    r, wall = _timed(lambda: characterization_report(d, budget=args.max_size, seed=args.seed,
                                                     samples=args.samples))
    for cond in ("condition_2", "condition_3"):
        block = r[cond]
        rep.add(cond, "equivalence.characterization", {"status": block["status"]}, cond, args.instance,
                wall / 2, {"checks": block["checks"]})
    rep.rows[-1]["agree"] = r["agree"]


def cmd_karoubi(args, rep):
    from . import karoubi
    if args.base != "rel":
        raise ConfigError("the Karoubi checks run over --base rel only")
    cites = {"cartesian_structure": "karoubi.cartesian_structure", "cw_round_trip": "karoubi.cw_round_trip",
             "idempotent_interpolative": "karoubi.idempotents", "kar_cartesian": "karoubi.kar_cartesian",
             "sharp_adj": "karoubi.sharp", "sharp_iso": "karoubi.sharp", "sharp_laws": "karoubi.sharp",
             "mod_cartesian": "karoubi.mod_cartesian", "monads_preorders_bijection": "karoubi.preorders",
             "modules_are_ideals": "karoubi.ideals", "bimodule_local_products": "karoubi.bimodules"}
    vs, wall = _timed(lambda: karoubi.karoubi_report(karoubi.rel_lobicat(), max_size=args.max_size,
                                                     samples=args.samples, seed=args.seed))
    for v in vs:
        rep.add("karoubi." + v.name, cites[v.name], v, "karoubi", "rel", wall / len(vs))


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InvalidInput("%s: line %d column %d: %s" % (path, e.lineno, e.colno, e.msg))
    except OSError as e:
        raise InvalidInput("%s: %s" % (path, e.strerror))


def _categories(doc):
    from .prof import InternalCategory
    cats = doc.get("categories") if isinstance(doc, dict) else None
    if not isinstance(cats, dict):
        raise InvalidInput("input must have a 'categories' object")
    out = {}
    for name, obj in cats.items():
        try:
            out[name] = InternalCategory.from_json(obj)
        except InvalidInput as e:
            raise InvalidInput("categories.%s: %s" % (name, e))
    return out


def _profunctor(doc, cats, key):
    from .prof import Profunctor
    obj = doc.get(key) if isinstance(doc, dict) else None
    if not isinstance(obj, dict) or obj.get("src") not in cats or obj.get("tgt") not in cats:
        raise InvalidInput("%s: needs 'src' and 'tgt' naming categories" % key)
    body = {k: v for k, v in obj.items() if k not in ("src", "tgt")}
    try:
        return Profunctor.from_json(body, cats[obj["src"]], cats[obj["tgt"]])
    except InvalidInput as e:
        raise InvalidInput("%s: %s" % (key, e))


def cmd_prof(args, rep):
    from . import prof
    from .verdict import FAIL, PASS, Tally
    action = args.action
    if action in ("compose", "validate") and not args.input:
        raise ConfigError("prof %s needs --input" % action)
    if action == "validate":
        doc = _load(args.input)
        cats = _categories(doc)
        names = [k for k in doc if k != "categories"]
        for k in names:
            _profunctor(doc, cats, k)
        rep.add("prof.validate", "prof.validate", Verdict("validate", PASS, None, len(cats) + len(names)))
    elif action == "compose":
        doc = _load(args.input)
        cats = _categories(doc)
        M, N = _profunctor(doc, cats, "M"), _profunctor(doc, cats, "N")
        if M.tgt != N.src:
            raise InvalidInput("M.tgt and N.src differ")
        c, wall = _timed(lambda: prof.compose_profunctors(M, N))
        rep.add("prof.compose", "prof.composition", Verdict("compose", PASS, None, len(c.module.carrier)),
                "composition", "prof", wall, {"composite": c.module.to_json()})
    elif action == "cartesian":
        v, wall = _timed(lambda: prof.check_prof_cartesian(min(args.max_size, 2), args.samples, args.seed))
        rep.add("prof.cartesian", "prof.cartesian", v, "prof_cartesian", "prof", wall)
    elif action == "kleisli":
        from .finset import coequalizer
        tl = Tally("kleisli")

        def run():
            for c in prof.prof_of_finset().objects(args.max_size):
                k = prof.kleisli_object(c)
                K, v = coequalizer(c.src, c.tgt)
                ok, n = prof.verify_kleisli(c, k, max_size=2)
                tl.record(ok and k.obj == K and k.v == v, lambda: {"category": c.to_json()})
            return tl.verdict()
        v, wall = _timed(run)
        rep.add("prof.kleisli", "prof.kleisli", v, "kleisli", "prof", wall)
    elif action == "discrete":
        d = prof.prof_of_finset()
        w = d.cartesian_witness()
        for c in d.objects(min(args.max_size, 3)):
            v, wall = _timed(lambda: prof.check_discrete(d, w, c))
            hyp = PASS if c.is_discrete() else FAIL
            rep.add("prof.discrete", "prof.discrete", v, wall=wall,
                    extra={"category": c.to_json(), "hypothesis": hyp, "hypothesis_holds": v.status == hyp})
    elif action == "conjectures":
        r, wall = _timed(lambda: prof.conjecture_report(min(args.max_size, 3), args.samples, args.seed))
        rep.add("prof.conjectures", "prof.conjectures", {"status": r.status}, wall=wall,
                extra={"evidence": r.to_json()})
    else:
        raise ConfigError("unknown prof action %r" % action)


COMMANDS = {"laws": cmd_laws, "fibrancy": cmd_fibrancy, "cartesian": cmd_cartesian,
            "tabulator": cmd_tabulator, "characterize": cmd_characterize, "karoubi": cmd_karoubi,
            "prof": cmd_prof}


def parser():
    p = argparse.ArgumentParser(prog="dblcat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-size", type=int, default=2)
    common.add_argument("--samples", type=int, default=40)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default="dblcat-report.json", help="JSON report path ('-' for none)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--human", dest="fmt", action="store_const", const="human")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("laws", "fibrancy", "cartesian", "tabulator", "characterize"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--instance", required=True, choices=INSTANCES)
    sp = sub.add_parser("karoubi", parents=[common])
    sp.add_argument("--base", default="rel")
    sp = sub.add_parser("prof", parents=[common])
    sp.add_argument("action", choices=("compose", "validate", "cartesian", "discrete", "kleisli", "conjectures"))
    sp.add_argument("--input")
    return p


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.max_size < 0 or args.samples < 0:
        print("dblcat: --max-size and --samples must be non-negative", file=sys.stderr)
        return 2
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "fmt")}
    rep = Report(args.command, config)
    try:
        COMMANDS[args.command](args, rep)
    except (ConfigError, InvalidInput, UnsupportedInstance) as e:
        print("dblcat: %s" % e, file=sys.stderr)
        return 2
    text = json.dumps(rep.to_json(), indent=2, sort_keys=True, default=str)
    if args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text if args.fmt == "json" else rep.human(), file=stdout)
    return 0 if rep.ok else 1


def main():
    sys.exit(run())
