"""Tiny helper: expose a dataclass as command line flags."""

import argparse
import dataclasses


def parse_config(cls, argv=None):
    p = argparse.ArgumentParser(description=cls.__doc__)
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        kind = type(default)
        if kind is bool:
            p.add_argument(f"--{f.name.replace('_', '-')}", action=argparse.BooleanOptionalAction,
                           default=default)
        elif kind in (list, tuple):
            p.add_argument(f"--{f.name.replace('_', '-')}", nargs="*", default=default)
        else:
            p.add_argument(f"--{f.name.replace('_', '-')}", type=kind, default=default)
    return cls(**vars(p.parse_args(argv)))
