"""
обработчик команды couplings: печатает коэффициенты связи для строки модели
"""

import argparse
from dataclasses import fields

import torch

from dynamics import couplings, damping_matrix, parse_model
from handlers.common import EXIT_OK, guarded


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("couplings", help="коэффициенты связи для модели")
    parser.add_argument("model", help="например geometric:R=0.2")
    parser.add_argument("--gamma", type=float, default=None, help="γ, для custom коэффициенты пересчитываются")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    return cmd_couplings(args.model, args.gamma)


@guarded
def cmd_couplings(model: str, gamma: float | None = None) -> int:
    c = couplings(parse_model(model), gamma)
    for item in fields(c):
        print(f"{item.name}={getattr(c, item.name):.12g}")
    lowest = float(torch.linalg.eigvalsh(damping_matrix(c))[0])
    print(f"damping_min_eigenvalue={lowest:.12g}")
    return EXIT_OK
