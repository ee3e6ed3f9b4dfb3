"""State counts of S_E, T_E and D_E over a random corpus, with an oracle check.

    python3 scripts/corpus_stats.py --semiring int --count 1000 --seed 1
"""
import argparse
import statistics
import time
from dataclasses import dataclass

from derterm.automaton import behaviour_series, is_conjugate
from derterm.derived import derived_term_automaton, standard_derived_term_automaton
from derterm.expr import literal_length
from derterm.monoid import make_monoid
from derterm.randexpr import corpus
from derterm.semiring import get_semiring
from derterm.series import denote
from derterm.standard import position_automaton


@dataclass
class Config:
    semiring: str = "int"
    count: int = 1000
    seed: int = 1
    depth: int = 5
    max_len: int = 6
    product: bool = False


def main(cfg: Config):
    sr = get_semiring(cfg.semiring)
    monoid = make_monoid(["a"], ["x"]) if cfg.product else make_monoid(["a", "b"])
    start = time.perf_counter()
    rows, mismatches = [], 0
    for e in corpus(cfg.seed, cfg.count, monoid, sr, cfg.depth):
        s = position_automaton(e, monoid, sr).to_automaton()
        t = standard_derived_term_automaton(e, monoid, sr).automaton
        d = derived_term_automaton(e, monoid, sr)
        ref = denote(e, cfg.max_len, monoid, sr)
        if any(behaviour_series(a, cfg.max_len) != ref for a in (s, t, d.automaton)) \
                or not is_conjugate(s, d.automaton, d.transfer):
            mismatches += 1
        rows.append((literal_length(e), s.dim, t.dim, d.automaton.dim))
    elapsed = time.perf_counter() - start
    ell, sd, td, dd = zip(*rows)
    print(f"semiring={sr.name} monoid={monoid!r} expressions={cfg.count} depth<={cfg.depth}")
    print(f"literal length   mean {statistics.mean(ell):.2f} max {max(ell)}")
    for name, dims in (("S_E", sd), ("T_E", td), ("D_E", dd)):
        print(f"{name} states       mean {statistics.mean(dims):.2f} max {max(dims)}")
    print(f"T_E smaller than S_E: {sum(t < s for _, s, t, _ in rows)}")
    print(f"D_E smaller than T_E: {sum(d < t for _, _, t, d in rows)}")
    print(f"oracle or witness mismatches: {mismatches}")
    print(f"elapsed {elapsed:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        if isinstance(default, bool):
            p.add_argument(f"--{name.replace('_', '-')}", action="store_true")
        else:
            p.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
