import hashlib
import json
import os

from typing import Any, Iterable, Iterator
from sociolect.exc import CorpusReadError


def iter_json_lines(path: str) -> Iterator[tuple[int, str]]:
    "Yield (line number, raw line) for every non-blank line; unreadable files are fatal"
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for line_number, line in enumerate(handle, start=1):
                if line.strip():
                    yield line_number, line
    except OSError as e:
        raise CorpusReadError(f"Unable to read '{path}': {e}")
    except UnicodeDecodeError as e:
        raise CorpusReadError(f"'{path}' is not valid UTF-8: {e}")


def read_jsonl(path: str) -> list[dict]:
    return [json.loads(line) for _, line in iter_json_lines(path)]


def dumps(payload: Any) -> str:
    "Canonical JSON: sorted keys, no timestamps, stable float repr"
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def write_jsonl(path: str, rows: Iterable[Any]) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(dumps(row) + "\n")


def write_json(path: str, payload: Any) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n")


def read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
