"""Command-line entry point: ``sbitlab <command> ...``.

Exit status: 0 success, 1 domain verdict failure (violation, not
convertible, inconsistent oracle), 2 usage or structural error, 3 a
resource cap was exceeded.  Options may also come from ``SBITLAB_CAP``,
``SBITLAB_SEED``, ``SBITLAB_ALLOW_FALLBACK`` and ``SBITLAB_SKIP_VERIFY``;
flags win over the environment.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import algorithms, circuit, convert as convert_mod, dualrail
from .core import Sbit, word
from .errors import CapExceededError, MalformedError, SbitError, VerdictError
from .gates import (
    DEFAULT_CAP,
    BasisTable,
    FullTable,
    GateKind,
    check_weak_additivity,
    extension_array,
    full_table_of_gate,
    random_basis_table,
)

log = logging.getLogger("sbitlab")


@dataclass
class Config:
    cap_exhaustive: int = DEFAULT_CAP
    seed: int = 0
    allow_fallback: bool = False
    skip_verify: bool = False

    def __post_init__(self):
        if self.cap_exhaustive < 1:
            raise MalformedError("--cap must be at least 1")


def _env_bool(name: str) -> bool | None:
    v = os.environ.get(name)
    if v is None:
        return None
    return v.strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str) -> int | None:
    v = os.environ.get(name)
    if v is None:
        return None
    try:
        return int(v)
    except ValueError:
        raise MalformedError(f"{name} must be an integer, got {v!r}") from None


def make_config(args: argparse.Namespace) -> Config:
    def pick(flag, env, default):
        if flag is not None:
            return flag
        return env if env is not None else default

    flag = lambda name: getattr(args, name, None)
    return Config(
        cap_exhaustive=pick(flag("cap"), _env_int("SBITLAB_CAP"), DEFAULT_CAP),
        seed=pick(flag("seed"), _env_int("SBITLAB_SEED"), 0),
        allow_fallback=pick(flag("allow_fallback"), _env_bool("SBITLAB_ALLOW_FALLBACK"), False),
        skip_verify=pick(flag("skip_verify"), _env_bool("SBITLAB_SKIP_VERIFY"), False),
    )


# -- file helpers -----------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _first_token(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return ""


def _load_ternary(path: str) -> circuit.TernaryCircuit:
    return circuit.TernaryCircuit.parse(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------

def cmd_eval(args, cfg):
    c = _load_ternary(args.netlist)
    print(c.evaluate(word(args.word)))
    return 0


def cmd_table(args, cfg):
    fmt = "full" if args.full else args.format
    target = args.target
    gate = None
    if not Path(target).exists():
        try:
            gate = GateKind.parse(target)
        except MalformedError:
            raise MalformedError(f"{target!r} is neither a file nor a gate name") from None
    if gate is not None:
        full = full_table_of_gate(gate)
        basis = BasisTable.of_gate(gate)
    else:
        c = _load_ternary(target)
        basis = circuit.basis_table_of(c, cap=cfg.cap_exhaustive)
        full = FullTable(c.n_inputs, c.n_outputs, c.full_array(cfg.cap_exhaustive)) if fmt == "full" else None
    sys.stdout.write(full.dumps() if fmt == "full" else basis.dumps())
    return 0


def _verdict_line(v, **extra) -> str:
    parts = [v.status.value]
    if v.witness is not None:
        parts.append(f"witness={v.witness}")
    parts += [f"{k}={val}" for k, val in extra.items()]
    return " ".join(parts)


def cmd_check_wadd(args, cfg):
    text = _read(args.file)
    head = _first_token(text)
    if head == "full":
        ft = FullTable.parse(text)
        v = check_weak_additivity(ft, cap=cfg.cap_exhaustive)
        print(_verdict_line(v, inputs=ft.n_in))
    elif head == "basis":
        # a basis table defines its operator by extension, so this is a tautology check
        t = BasisTable.parse(text)
        v = check_weak_additivity(extension_array(t), t.n_in, cap=cfg.cap_exhaustive)
        print(_verdict_line(v, inputs=t.n_in))
    else:
        c = circuit.TernaryCircuit.parse(text)
        v = circuit.check_circuit(c, cap=cfg.cap_exhaustive)
        print(_verdict_line(v, gates=v.gate_count))
    return 0 if v.ok else 1


def cmd_convert(args, cfg):
    c = convert_mod.ClassicalCircuit.parse(_read(args.netlist))
    report = convert_mod.convert(
        c, allow_fallback=cfg.allow_fallback, verify=not cfg.skip_verify, cap=cfg.cap_exhaustive
    )
    log_stream = sys.stdout if args.output else sys.stderr
    for line in report.log_lines():
        print(line, file=log_stream)
    if report.circuit is None:
        for k in report.unmatched:
            print(f"UNMATCHED fanout node={k}", file=log_stream)
        return 1
    _emit(report.circuit.dumps(), args.output)
    return 0


def cmd_synth(args, cfg):
    t = BasisTable.parse(_read(args.table))
    if t.n_in > cfg.cap_exhaustive:
        raise CapExceededError(t.n_in, cfg.cap_exhaustive, base=2)
    c = circuit.synthesize(t, primitive=args.primitive_set)
    if not cfg.skip_verify and t.n_in <= cfg.cap_exhaustive:
        v = circuit.check_circuit(c, cap=cfg.cap_exhaustive)
        if not v.ok:
            print(_verdict_line(v, gates=v.gate_count), file=sys.stderr)
            return 1
    _emit(c.dumps(), args.output)
    return 0


def cmd_dj(args, cfg):
    c = _load_ternary(args.netlist)
    r = algorithms.deutsch_classify(c, verify=not cfg.skip_verify, cap=cfg.cap_exhaustive)
    print(f"{r.classification.value} queries={r.queries}")
    return 0


def cmd_search(args, cfg):
    c = _load_ternary(args.netlist)
    r = algorithms.search(c, args.n, verify=not cfg.skip_verify)
    print(f"FOUND {r.found} queries={r.queries}")
    return 0


def cmd_oracle_gen(args, cfg):
    _emit(algorithms.oracle_circuit(word(args.word)).dumps(), args.output)
    return 0


def cmd_gen(args, cfg):
    if args.family == "constant":
        c = algorithms.constant_circuit(args.n, Sbit(args.value))
    elif args.family == "projection":
        c = algorithms.projection_circuit(args.n, args.j)
    else:
        from . import examples

        c = examples.convertible_classical()
    _emit(c.dumps(), args.output)
    return 0


def cmd_dualrail(args, cfg):
    d = dualrail.compile_dualrail(_load_ternary(args.netlist))
    _emit(d.dumps(), args.output)
    return 0


def cmd_eval_dualrail(args, cfg):
    d = dualrail.DualRailCircuit.parse(_read(args.netlist))
    out = dualrail.eval_dualrail(d, args.bits)
    line = dualrail.rails_str(out)
    if args.decode:
        line += f" {dualrail.decode(out)}"
    print(line)
    return 0


def cmd_random_wadd(args, cfg):
    t = random_basis_table(args.n_in, args.n_out, cfg.seed, cap=cfg.cap_exhaustive)
    if args.full:
        sys.stdout.write(FullTable(t.n_in, t.n_out, extension_array(t)).dumps())
    else:
        sys.stdout.write(t.dumps())
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subparser from resetting a flag given before the command
    quiet = argparse.SUPPRESS
    common.add_argument("--cap", type=int, default=quiet, help="max input width for exhaustive sweeps (default 12)")
    common.add_argument("--seed", type=int, default=quiet, help="seed for generators")
    common.add_argument("--allow-fallback", action="store_true", default=quiet,
                        help="convert: synthesize from the truth table when rules fail")
    common.add_argument("--skip-verify", action="store_true", default=quiet, help="skip exhaustive verification steps")
    common.add_argument("-v", "--verbose", action="store_true", default=quiet)

    p = argparse.ArgumentParser(prog="sbitlab", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate a ternary netlist on one word")
    sp.add_argument("netlist")
    sp.add_argument("word")

    sp = add("table", cmd_table, "print the basis or full table of a netlist or named gate")
    sp.add_argument("target", help="netlist file or gate name")
    sp.add_argument("--format", choices=["basis", "full"], default="basis")
    sp.add_argument("--full", action="store_true", help="same as --format full")

    sp = add("check-wadd", cmd_check_wadd, "check weak additivity of a netlist or table file")
    sp.add_argument("file")

    sp = add("convert", cmd_convert, "lower a classical netlist to a w-additive one")
    sp.add_argument("netlist")
    sp.add_argument("-o", "--output")

    sp = add("synth", cmd_synth, "synthesize a circuit from a basis table")
    sp.add_argument("table")
    sp.add_argument("--primitive-set", action="store_true", help="use only NOT, S0, FANOUT, AND, OR and T")
    sp.add_argument("-o", "--output")

    sp = add("dj", cmd_dj, "constant / non-constant test with one query")
    sp.add_argument("netlist")

    sp = add("search", cmd_search, "find the marked point of a point-function oracle")
    sp.add_argument("netlist")
    sp.add_argument("--n", type=int, default=None)

    sp = add("oracle-gen", cmd_oracle_gen, "write the point-function oracle marking a word")
    sp.add_argument("word")
    sp.add_argument("-o", "--output")

    sp = add("gen", cmd_gen, "write a circuit from a builder family")
    sp.add_argument("family", choices=["constant", "projection", "example"])
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--value", type=int, choices=[0, 1], default=0)
    sp.add_argument("--j", type=int, default=1)
    sp.add_argument("-o", "--output")

    sp = add("dualrail", cmd_dualrail, "compile a ternary netlist to a dual-rail Boolean netlist")
    sp.add_argument("netlist")
    sp.add_argument("-o", "--output")

    sp = add("eval-dualrail", cmd_eval_dualrail, "simulate a dual-rail netlist on a rail bitstring")
    sp.add_argument("netlist")
    sp.add_argument("bits")
    sp.add_argument("--decode", action="store_true", help="also print the decoded word")

    sp = add("random-wadd", cmd_random_wadd, "print a random basis table (a w-additive operator)")
    sp.add_argument("--n-in", type=int, default=2)
    sp.add_argument("--n-out", type=int, default=1)
    sp.add_argument("--full", action="store_true", help="print the extended full table instead")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        cfg = make_config(args)
        return args.func(args, cfg)
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except VerdictError as e:
        print(f"{type(e).__name__.upper()} {e}", file=sys.stderr)
        return 1
    except (MalformedError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SbitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
