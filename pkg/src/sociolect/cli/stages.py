import functools
import os

from sociolect.corpus import filter_language, group_by_author, load_businesses, load_reviews
from sociolect.evaluation import (
    average_runs,
    evaluate,
    random_baseline,
    render_confusion_svg,
    split_digest,
    stratified_split,
    top_features,
)
from sociolect.evaluation.importance import write_top_features_tsv
from sociolect.exc import (
    ConfigurationError,
    ConsistencyError,
    MissingArtifactError,
    SociolectError,
    StageFailedError,
)
from sociolect.features import Vocabulary, featurize, read_conllu
from sociolect.labeling import (
    balance_downsample,
    build_documents,
    class_distribution,
    dataset_overview,
    filter_authors,
    label_authors,
)
from sociolect.labeling.silver import entropy_threshold
from sociolect.logger import logger
from sociolect.models import (
    cnn_predict_classes,
    cnn_train,
    load_checkpoint,
    lr_predict_classes,
    lr_train,
    save_checkpoint,
)
from sociolect.readability.kruskal import increases_with_class, kruskal_by_metric
from sociolect.readability.scores import mean_scores, score_documents
from sociolect.readability.stats import load_easy_words
from sociolect.schemas.constants.model_type import ModelType
from sociolect.schemas.constants.representation import Representation
from sociolect.schemas.constants.stage import Stage
from sociolect.schemas.corpus import AuthorProfile, IngestReport
from sociolect.schemas.evaluation import CLASS_IDS
from sociolect.schemas.labeling import LabeledDocument, SilverLabel
from sociolect.schemas.pipeline import FeatureRecord, PipelineConfig
from sociolect.schemas.readability import ReadabilityReport
from sociolect.utils.decorators import log_elapsed_time
from sociolect.utils.io import read_json, read_jsonl, sha256_file, write_json, write_jsonl
from sociolect.cli.manifest import ManifestStore


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIGURATION = 2

PROFILES = "profiles.jsonl"
INGEST_REPORT = "ingest_report.json"
LABELED_AUTHORS = "labeled_authors.jsonl"
DOCUMENTS = "documents.jsonl"
LABEL_SUMMARY = "label_summary.json"
READABILITY_REPORT = "readability_report.json"
SPLIT = "split.json"
EVALUATION = "evaluation.json"
TOP_FEATURES = "top_features.tsv"
REPORT = "report.json"


def features_name(representation: Representation) -> str:
    return f"features_{representation.value}.jsonl"


def vocab_name(representation: Representation, sequence: bool = False) -> str:
    return f"vocab_{representation.value}{'.seq' if sequence else ''}.tsv"


def checkpoint_name(model: ModelType, representation: Representation, run: int) -> str:
    return os.path.join("models", f"{model.value}_{representation.value}_run{run}.npz")


def confusion_name(model: ModelType, representation: Representation) -> str:
    return f"confusion_{model.value}_{representation.value}.svg"


def pipeline_stage(stage: Stage):
    "Validate the manifest chain, run the stage, record its artifacts or its failure"

    def wrapper(func):
        @functools.wraps(func)
        def run(self: "Pipeline", *args, **kwargs) -> list[str]:
            log = logger.bind(stage=stage.value)
            try:
                consumed = self.store.require(stage)
                log.info("Starting")
                inputs, outputs = func(self, *args, **kwargs)
                self.store.record(
                    stage,
                    inputs={**consumed, **inputs},
                    outputs=outputs,
                    config=self.config.hashed_view(),
                    seed=self.config.seed,
                )
                return outputs
            except SociolectError as e:
                self.store.record_failure(stage, e.message)
                log.error(e.message)
                raise StageFailedError(e.message, stage=stage.value) from e
            except Exception as e:
                message = f"{type(e).__name__}: {e}"
                self.store.record_failure(stage, message)
                log.exception(message)
                raise StageFailedError(message, stage=stage.value) from e

        return run

    return wrapper


class Pipeline:
    "The distant-supervision pipeline, one method per stage, artifacts under the workdir"

    def __init__(self, config: PipelineConfig) -> None:
        self.config = config
        self.store = ManifestStore(config.workdir)

    def path(self, name: str) -> str:
        return self.store.artifact(name)

    # ingest
    @pipeline_stage(Stage.INGEST)
    @log_elapsed_time
    def ingest(self) -> tuple[dict, list[str]]:
        cfg = self.config
        if not cfg.reviews or not cfg.businesses:
            raise ConfigurationError("ingest needs --reviews and --businesses")
        report = IngestReport()
        prices = load_businesses(cfg.businesses, report)
        reviews = load_reviews(cfg.reviews, report)
        if cfg.language_filter:
            reviews = filter_language(reviews, report, trust_field=cfg.trust_language_field)
        profiles = group_by_author(reviews, prices, report)

        write_jsonl(self.path(PROFILES), (profile.dict() for profile in profiles))
        write_json(self.path(INGEST_REPORT), report.dict())
        inputs = {
            os.path.basename(cfg.reviews): sha256_file(cfg.reviews),
            os.path.basename(cfg.businesses): sha256_file(cfg.businesses),
        }
        return inputs, [PROFILES, INGEST_REPORT]

    # label
    def load_profiles(self) -> list[AuthorProfile]:
        return [AuthorProfile(**row) for row in read_jsonl(self.path(PROFILES))]

    @pipeline_stage(Stage.LABEL)
    @log_elapsed_time
    def label(self) -> tuple[dict, list[str]]:
        cfg = self.config
        profiles = self.load_profiles()
        authors, ties = label_authors(profiles)
        before = class_distribution(authors)
        threshold = entropy_threshold(authors) if authors else 0.0
        filtered = filter_authors(authors, cfg.min_reviews)
        balanced = balance_downsample(filtered, cfg.seed)
        documents = build_documents(balanced, {profile.user_id: profile for profile in profiles})

        write_jsonl(
            self.path(LABELED_AUTHORS),
            (
                dict(
                    user_id=author.user_id,
                    class_id=author.class_id,
                    entropy=author.entropy_nats,
                    review_count=author.review_count,
                )
                for author in balanced
            ),
        )
        write_jsonl(
            self.path(DOCUMENTS),
            (dict(user_id=d.user_id, class_id=d.class_id, text=d.text) for d in documents),
        )
        write_json(
            self.path(LABEL_SUMMARY),
            dict(
                tied_authors=ties,
                entropy_threshold=threshold,
                before_filtering=before,
                after_filtering=class_distribution(filtered),
                overview={k: v.dict() for k, v in dataset_overview(documents).items()},
            ),
        )
        return {}, [LABELED_AUTHORS, DOCUMENTS, LABEL_SUMMARY]

    # readability
    def load_documents(self) -> list[LabeledDocument]:
        return [
            LabeledDocument(
                user_id=row["user_id"],
                label=SilverLabel(class_id=row["class_id"]),
                text=row["text"],
            )
            for row in read_jsonl(self.path(DOCUMENTS))
        ]

    @pipeline_stage(Stage.READABILITY)
    @log_elapsed_time
    def readability(self) -> tuple[dict, list[str]]:
        word_list = self.config.dale_chall_list
        easy_words = load_easy_words(word_list)
        scored = score_documents(self.load_documents(), easy_words)
        means = {class_id: mean_scores(scored[class_id]) for class_id in sorted(scored)}
        report = ReadabilityReport(
            classes=means,
            documents={class_id: len(scored[class_id]) for class_id in sorted(scored)},
            missing=[class_id for class_id in CLASS_IDS if class_id not in means],
            tests=kruskal_by_metric(scored) if len(scored) >= 2 else {},
            increasing=increases_with_class(means),
        )
        write_json(self.path(READABILITY_REPORT), report.dict())
        return {os.path.basename(word_list): sha256_file(word_list)}, [READABILITY_REPORT]

    # featurize
    @pipeline_stage(Stage.FEATURIZE)
    @log_elapsed_time
    def featurize(self) -> tuple[dict, list[str]]:
        cfg = self.config
        documents = self.load_documents()
        train, test = stratified_split(documents, cfg.train_fraction, cfg.seed)
        digest = split_digest(test)
        write_json(
            self.path(SPLIT),
            dict(
                train=sorted(doc.user_id for doc in train),
                test=sorted(doc.user_id for doc in test),
                digest=digest,
            ),
        )
        logger.bind(stage="featurize").info(f"split digest {digest[:12]}")

        inputs, parses = {}, None
        if any(representation.needs_parse for representation in cfg.representations):
            parses = read_conllu(cfg.conllu, known_doc_ids=[doc.user_id for doc in documents])
            inputs[os.path.basename(cfg.conllu)] = sha256_file(cfg.conllu)

        outputs = [SPLIT]
        for representation in cfg.representations:
            feature_set = featurize(
                train,
                test,
                representation,
                parses=parses,
                word_ns=cfg.word_ngrams,
                char_ns=cfg.char_ngrams,
                freq_buckets=cfg.freq_buckets,
                max_seq_len=cfg.train.max_seq_len,
                sparse=ModelType.LR in cfg.models,
                sequence=ModelType.CNN in cfg.models,
            )
            write_jsonl(
                self.path(features_name(representation)),
                (record.dict(exclude_none=True) for record in feature_set.records),
            )
            outputs.append(features_name(representation))
            for vocab, sequence in (
                (feature_set.sparse_vocab, False),
                (feature_set.sequence_vocab, True),
            ):
                if vocab is not None:
                    vocab.to_tsv(self.path(vocab_name(representation, sequence)))
                    outputs.append(vocab_name(representation, sequence))
        return inputs, outputs

    # train
    def load_records(self, representation: Representation) -> list[FeatureRecord]:
        path = self.path(features_name(representation))
        if not os.path.exists(path):
            raise MissingArtifactError(
                f"'{features_name(representation)}' is missing: run `sociolect featurize` "
                f"with --representations {representation.value}",
                required_stage=Stage.FEATURIZE.value,
            )
        return [FeatureRecord(**row) for row in read_jsonl(path)]

    def load_vocab(self, representation: Representation, model: ModelType) -> Vocabulary:
        name = vocab_name(representation, sequence=model is ModelType.CNN)
        if not os.path.exists(self.path(name)):
            raise MissingArtifactError(
                f"'{name}' is missing: run `sociolect featurize` with --models {model.value}",
                required_stage=Stage.FEATURIZE.value,
            )
        return Vocabulary.from_tsv(self.path(name))

    def run_seeds(self, model: ModelType) -> list[int]:
        "LR training is deterministic given the split, so it runs once"
        runs = self.config.runs if model is ModelType.CNN else 1
        return [self.config.seed + run for run in range(runs)]

    @pipeline_stage(Stage.TRAIN)
    @log_elapsed_time
    def train(self) -> tuple[dict, list[str]]:
        cfg = self.config
        outputs = []
        for representation in cfg.representations:
            records = [r for r in self.load_records(representation) if r.split == "train"]
            for model in cfg.models:
                vocab = self.load_vocab(representation, model)
                for run, seed in enumerate(self.run_seeds(model)):
                    train_config = cfg.train.copy(update={"seed": seed})
                    logger.bind(
                        stage="train", model=model.value, representation=representation.value
                    ).info(f"run {run} seed {seed}")
                    if model is ModelType.LR:
                        data = [(r.sparse_counts, r.label) for r in records]
                        params = lr_train(data, train_config, vocab_size=len(vocab))
                    else:
                        data = [(r.sequence or [0], r.label) for r in records]
                        params = cnn_train(data, train_config, vocab_size=len(vocab))
                    name = checkpoint_name(model, representation, run)
                    save_checkpoint(self.path(name), params, vocab.digest(), train_config)
                    outputs.append(name)
        return {}, outputs

    # evaluate
    @pipeline_stage(Stage.EVALUATE)
    @log_elapsed_time
    def evaluate(self) -> tuple[dict, list[str]]:
        cfg = self.config
        digest = read_json(self.path(SPLIT))["digest"]
        cells: dict[str, dict] = {}
        rankings: dict[str, dict[int, list[str]]] = {}
        outputs = []
        for representation in cfg.representations:
            records = [r for r in self.load_records(representation) if r.split == "test"]
            gold = [r.label for r in records]
            for model in cfg.models:
                vocab = self.load_vocab(representation, model)
                reports = []
                for run, seed in enumerate(self.run_seeds(model)):
                    name = checkpoint_name(model, representation, run)
                    if not os.path.exists(self.path(name)):
                        raise MissingArtifactError(
                            f"'{name}' is missing: run `sociolect train`",
                            required_stage=Stage.TRAIN.value,
                        )
                    params, _ = load_checkpoint(self.path(name), vocab.digest())
                    if model is ModelType.LR:
                        preds = lr_predict_classes(params, [r.sparse_counts for r in records])
                    else:
                        preds = cnn_predict_classes(params, [r.sequence or [0] for r in records])
                    report = evaluate(preds, gold, model.value, representation.value)
                    reports.append(report.copy(update={"seeds": [seed]}))
                cell = average_runs(reports).copy(update={"split_digest": digest})
                cells[cell.cell] = cell.dict()
                render_confusion_svg(cell, self.path(confusion_name(model, representation)))
                outputs.append(confusion_name(model, representation))
                if model is ModelType.LR:
                    rankings[cell.cell] = top_features(
                        params,
                        vocab,
                        cfg.top_k,
                        word_unigrams_only=cfg.unigram_top_features
                        and representation is Representation.LEXICAL,
                    )
                logger.bind(stage="evaluate", cell=cell.cell).info(
                    f"weighted F1 {cell.weighted_f1:.4f}, macro F1 {cell.macro_f1:.4f}"
                )

        baseline = evaluate(random_baseline(gold, cfg.seed), gold, ModelType.RANDOM.value)
        write_json(
            self.path(EVALUATION),
            dict(
                cells=cells,
                random_baseline=baseline.copy(update={"seeds": [cfg.seed]}).dict(),
                split_digest=digest,
            ),
        )
        outputs.append(EVALUATION)
        if rankings:
            write_top_features_tsv(self.path(TOP_FEATURES), rankings)
            outputs.append(TOP_FEATURES)
        return {}, outputs

    # report
    @pipeline_stage(Stage.REPORT)
    @log_elapsed_time
    def report(self) -> tuple[dict, list[str]]:
        evaluation = read_json(self.path(EVALUATION))
        digests = {cell["split_digest"] for cell in evaluation["cells"].values()}
        if len(digests) > 1:
            raise ConsistencyError(f"Cells were evaluated on {len(digests)} different splits")
        write_json(
            self.path(REPORT),
            dict(
                config=self.config.hashed_view(),
                split_digest=evaluation["split_digest"],
                ingest=read_json(self.path(INGEST_REPORT)),
                labels=read_json(self.path(LABEL_SUMMARY)),
                readability=read_json(self.path(READABILITY_REPORT)),
                cells=evaluation["cells"],
                random_baseline=evaluation["random_baseline"],
            ),
        )
        return {}, [REPORT]

    def run(self) -> None:
        "All stages in order"
        self.ingest()
        self.label()
        self.readability()
        self.featurize()
        self.train()
        self.evaluate()
        self.report()


def exit_status(error: StageFailedError) -> int:
    return EXIT_CONFIGURATION if isinstance(error.__cause__, ConfigurationError) else EXIT_FAILURE


def run_pipeline(config: PipelineConfig) -> int:
    "Run every stage; 0 on success, nonzero when a stage failed (recorded in the manifest)"
    try:
        Pipeline(config).run()
    except StageFailedError as e:
        logger.bind(stage=e.stage).error(f"Pipeline stopped: {e.message}")
        return exit_status(e)
    return EXIT_OK
