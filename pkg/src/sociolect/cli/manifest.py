import os

from typing import Optional
from sociolect.exc import MissingArtifactError, StaleArtifactError
from sociolect.logger import logger
from sociolect.schemas.constants.stage import STAGE_DEPENDENCIES, Stage
from sociolect.schemas.pipeline import Manifest, StageEntry
from sociolect.utils.io import read_json, sha256_file, write_json


MANIFEST_NAME = "manifest.json"


class ManifestStore:
    """
    Keeps `manifest.json` in the work directory: per stage, the hashes of what it read and
    wrote, the config it ran with, and whether it succeeded. Artifacts are addressed by
    their name relative to the work directory.
    """

    def __init__(self, workdir: str) -> None:
        self.workdir = workdir
        self.path = os.path.join(workdir, MANIFEST_NAME)
        os.makedirs(workdir, exist_ok=True)
        exists = os.path.exists(self.path)
        self.manifest = Manifest(**read_json(self.path)) if exists else Manifest()

    def artifact(self, name: str) -> str:
        return os.path.join(self.workdir, name)

    def entry(self, stage: Stage) -> Optional[StageEntry]:
        return self.manifest.stages.get(stage.value)

    def require(self, stage: Stage) -> dict[str, str]:
        """
        Check that every upstream stage succeeded, that its outputs are unchanged on disk, and
        that it is not itself stale. Returns the upstream output hashes this stage consumes.
        """
        consumed = {}
        for upstream in STAGE_DEPENDENCIES[stage]:
            entry = self.entry(upstream)
            if entry is None or entry.status != "ok":
                raise MissingArtifactError(
                    f"'{stage.value}' needs the outputs of '{upstream.value}': "
                    f"run `sociolect {upstream.value}` first",
                    required_stage=upstream.value,
                )
            for name, recorded in entry.outputs.items():
                path = self.artifact(name)
                if not os.path.exists(path):
                    raise MissingArtifactError(
                        f"'{name}' is missing: rerun `sociolect {upstream.value}`",
                        required_stage=upstream.value,
                    )
                if sha256_file(path) != recorded:
                    raise StaleArtifactError(
                        f"'{name}' changed since `sociolect {upstream.value}` wrote it",
                        required_stage=upstream.value,
                    )
                consumed[name] = recorded
            self._check_chain(upstream)
        return consumed

    def _check_chain(self, stage: Stage) -> None:
        "An upstream stage is stale when its own inputs were rewritten after it ran"
        entry = self.entry(stage)
        for upstream in STAGE_DEPENDENCIES[stage]:
            upstream_entry = self.entry(upstream)
            if upstream_entry is None:
                continue
            for name, recorded in upstream_entry.outputs.items():
                if name in entry.inputs and entry.inputs[name] != recorded:
                    raise StaleArtifactError(
                        f"'{stage.value}' consumed an older '{name}': "
                        f"rerun `sociolect {stage.value}`",
                        required_stage=stage.value,
                    )

    def record(
        self,
        stage: Stage,
        inputs: dict[str, str],
        outputs: list[str],
        config: dict,
        seed: Optional[int] = None,
    ) -> None:
        self.manifest.stages[stage.value] = StageEntry(
            status="ok",
            inputs=inputs,
            outputs={name: sha256_file(self.artifact(name)) for name in sorted(outputs)},
            config=config,
            seed=seed,
        )
        if self.manifest.failed_stage == stage.value:
            self.manifest.failed_stage = None
        self.save()
        logger.bind(stage=stage.value).info(f"Recorded {len(outputs)} artifacts")

    def record_failure(self, stage: Stage, error: str) -> None:
        self.manifest.stages[stage.value] = StageEntry(status="failed", error=error)
        self.manifest.failed_stage = stage.value
        self.save()

    def save(self) -> None:
        write_json(self.path, self.manifest.dict())
