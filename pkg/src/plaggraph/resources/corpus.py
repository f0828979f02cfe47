"""
Read documents and corpora of plain-text files.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ..exceptions import DocumentEmptyError
from ..preprocess.document import RawDocument

logger = logging.getLogger('plaggraph')

CORPUS_SUFFIX = '.txt'


def read_document(path: str | Path, root: str | Path | None = None) -> RawDocument:
    """Read a UTF-8 text file.

    Args:
        path (str | Path): Path to the file.
        root (str | Path | None, optional): Corpus root. The document id is the path relative to the root.
            Defaults to None, in which case the id is the file name.

    Raises:
        DocumentEmptyError: The file only contains whitespace.

    Returns:
        RawDocument: The document.
    """
    path = Path(path)
    doc_id = path.relative_to(root).as_posix() if root is not None else path.name
    text = path.read_text(encoding='utf-8')
    return RawDocument(doc_id=doc_id, text=text, source_path=str(path))


def list_corpus(root: str | Path) -> list[Path]:
    """List the text files of a corpus.

    Args:
        root (str | Path): A directory searched recursively, or a single file.

    Returns:
        list[Path]: Sorted paths.
    """
    root = Path(root)
    if root.is_file():
        return [root]
    return sorted(p for p in root.rglob(f'*{CORPUS_SUFFIX}') if p.is_file())


def read_corpus(root: str | Path, jobs: int = 1) -> tuple[list[RawDocument], list[tuple[str, str]]]:
    """Read every text file of a corpus.

    A file that cannot be read or is empty is reported and skipped.

    Args:
        root (str | Path): Corpus directory or a single file.
        jobs (int, optional): Number of reader threads. Defaults to 1.

    Raises:
        FileNotFoundError: The root does not exist.

    Returns:
        tuple[list[RawDocument], list[tuple[str, str]]]: Documents sorted by id,
            and (path, message) for every skipped file.
    """
    root = Path(root)
    if not root.exists():
        raise FileNotFoundError(f'corpus not found: {root}')
    base = root.parent if root.is_file() else root
    paths = list_corpus(root)

    def _read(path: Path) -> RawDocument | tuple[str, str]:
        try:
            return read_document(path, root=base)
        except (OSError, UnicodeDecodeError, DocumentEmptyError) as e:
            return (str(path), str(e))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_read, paths))
    else:
        results = [_read(path) for path in paths]

    documents = []
    skipped = []
    for result in results:
        if isinstance(result, RawDocument):
            documents.append(result)
        else:
            logger.warning('Skipping %s: %s', *result)
            skipped.append(result)
    documents.sort(key=lambda doc: doc.doc_id)
    logger.info('Read %s document(s) from %s.', len(documents), root)
    return documents, skipped
