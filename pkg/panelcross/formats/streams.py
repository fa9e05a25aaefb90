"""Path / stream helpers; ``-`` means stdin or stdout."""
import contextlib
import sys
from pathlib import Path
from typing import IO, Iterator, Union

Source = Union[str, Path, IO[str]]


@contextlib.contextmanager
def open_text(source: Source, mode: str = 'r') -> Iterator[IO[str]]:
    if hasattr(source, 'read') or hasattr(source, 'write'):
        yield source
    elif str(source) == '-':
        yield sys.stdin if 'r' in mode else sys.stdout
    else:
        with open(source, mode, encoding='utf-8', newline='') as f:
            yield f


def suffix_format(source: Source) -> Union[str, None]:
    if isinstance(source, (str, Path)) and str(source) != '-':
        suffix = Path(source).suffix.lower()
        if suffix in ('.csv', '.json'):
            return suffix[1:]
    return None
