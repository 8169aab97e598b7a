import argparse
import json
import sys

from typing import Optional
from pydantic import ValidationError
from sociolect.cli.stages import (
    EXIT_CONFIGURATION,
    EXIT_FAILURE,
    EXIT_OK,
    Pipeline,
    exit_status,
    run_pipeline,
)
from sociolect.config import config as conf
from sociolect.exc import ConfigurationError, SociolectError, StageFailedError
from sociolect.logger import logger
from sociolect.schemas.constants.stage import Stage
from sociolect.schemas.pipeline import PipelineConfig


# argparse dests, named after the PipelineConfig and TrainConfig fields they set
PIPELINE_FIELDS = (
    "reviews",
    "businesses",
    "conllu",
    "workdir",
    "dale_chall_list",
    "seed",
    "min_reviews",
    "train_fraction",
    "representations",
    "models",
    "runs",
    "word_ngrams",
    "char_ngrams",
    "top_k",
    "freq_buckets",
    "language_filter",
    "trust_language_field",
    "unigram_top_features",
)
TRAIN_FIELDS = (
    "learning_rate",
    "l2",
    "dropout",
    "epochs",
    "batch_size",
    "d_emb",
    "n_filters",
    "window",
    "d_hidden",
    "max_seq_len",
)


def comma_list(value: str) -> list[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


def add_shared_arguments(parser: argparse.ArgumentParser) -> None:
    paths = parser.add_argument_group("inputs")
    paths.add_argument("--config", help="JSON file with pipeline settings")
    paths.add_argument("--workdir", help=f"artifact directory (default {conf.workdir})")
    paths.add_argument("--reviews", help="reviews JSON-lines file")
    paths.add_argument("--businesses", help="businesses JSON-lines file")
    paths.add_argument("--conllu", help="dependency parses, one document per author")
    paths.add_argument("--dale-chall-list", help="easy-word list, one word per line")

    pipeline = parser.add_argument_group("pipeline")
    pipeline.add_argument("--seed", type=int)
    pipeline.add_argument("--min-reviews", type=int)
    pipeline.add_argument("--train-fraction", type=float)
    pipeline.add_argument(
        "--representations", type=comma_list, help="comma list of lexical,bleach,pos,deptriple"
    )
    pipeline.add_argument("--models", type=comma_list, help="comma list of lr,cnn")
    pipeline.add_argument("--runs", type=int, help="CNN runs averaged per cell")
    pipeline.add_argument("--word-ngrams", help="word n-gram orders, e.g. 1,3-6")
    pipeline.add_argument("--char-ngrams", help="character n-gram orders, e.g. 3-6")
    pipeline.add_argument("--top-k", type=int, help="top LR features per class")
    pipeline.add_argument(
        "--freq-buckets",
        action="store_const",
        const=True,
        help="replace the raw frequency field of bleached tokens with a log-frequency bucket",
    )
    pipeline.add_argument(
        "--no-language-filter", dest="language_filter", action="store_const", const=False
    )
    pipeline.add_argument("--trust-language-field", action="store_const", const=True)
    pipeline.add_argument(
        "--all-top-features",
        dest="unigram_top_features",
        action="store_const",
        const=False,
        help="rank every lexical feature, not only word unigrams",
    )

    train = parser.add_argument_group("training")
    train.add_argument("--learning-rate", type=float)
    train.add_argument("--l2", type=float)
    train.add_argument("--dropout", type=float)
    train.add_argument("--epochs", type=int)
    train.add_argument("--batch-size", type=int)
    train.add_argument("--d-emb", type=int)
    train.add_argument("--n-filters", type=int)
    train.add_argument("--window", type=int)
    train.add_argument("--d-hidden", type=int)
    train.add_argument("--max-seq-len", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sociolect",
        description="Predict an author's price-range class from the style of their reviews",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for stage in Stage:
        add_shared_arguments(commands.add_parser(stage.value, help=f"run the {stage.value} stage"))
    add_shared_arguments(commands.add_parser("run", help="run every stage in order"))
    return parser


def load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Unable to read config file '{path}': {e}")
    if not isinstance(payload, dict):
        raise ConfigurationError(f"Config file '{path}' must hold a JSON object")
    return payload


def build_config(args: argparse.Namespace) -> PipelineConfig:
    "Flags override the config file, which overrides environment and defaults"
    settings = load_config_file(args.config) if args.config else {}
    train = dict(settings.pop("train", {}) or {})

    for field in PIPELINE_FIELDS:
        if getattr(args, field, None) is not None:
            settings[field] = getattr(args, field)
    for field in TRAIN_FIELDS:
        if getattr(args, field, None) is not None:
            train[field] = getattr(args, field)
    if "seed" in settings and "seed" not in train:
        train["seed"] = settings["seed"]

    try:
        return PipelineConfig(**settings, train=train)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid configuration: {e}")


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    log = logger.bind(command=args.command)
    try:
        config = build_config(args)
    except ConfigurationError as e:
        log.error(e.message)
        return EXIT_CONFIGURATION

    if args.command == "run":
        return run_pipeline(config)
    try:
        getattr(Pipeline(config), args.command)()
    except StageFailedError as e:
        return exit_status(e)
    except SociolectError as e:
        log.error(e.message)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
