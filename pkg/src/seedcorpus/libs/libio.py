"""Input and output helpers shared by components and clients."""
import os
import tempfile

from seedcorpus import Path
from seedcorpus.core.exceptions import MissingFileError


def make_folder_or_cwd(folder):
    """
    Return the folder as a Path, creating it if needed.

    ``None`` resolves to the current working directory.
    """
    if folder is None:
        return Path.cwd()
    folder = Path(folder)
    folder.mkdir(parents=True, exist_ok=True)
    return folder


def check_file_exists(fpath):
    """Raise :class:`MissingFileError` if `fpath` is not a file."""
    if not Path(fpath).is_file():
        raise MissingFileError(fpath)
    return Path(fpath)


def read_text_lines(fpath):
    """
    Read a UTF-8 text file as a list of lines without line terminators.

    Only ``\\n`` (optionally preceded by ``\\r``) ends a line, so Unicode
    line separators inside a verse do not shift the alignment.
    """
    fpath = check_file_exists(fpath)
    with open(fpath, encoding='utf-8', newline='') as fin:
        text = fin.read()
    if not text:
        return []
    lines = text.split('\n')
    if lines[-1] == '':
        lines.pop()
    return [line[:-1] if line.endswith('\r') else line for line in lines]


def write_atomic(fpath, text):
    """
    Write `text` to `fpath` through a temporary file and a rename.

    Readers never observe a partially written file.
    """
    fpath = Path(fpath)
    fpath.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(
        dir=fpath.parent,
        prefix=f'.{fpath.name}.',
        suffix='.tmp',
        )
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='\n') as fout:
            fout.write(text)
        os.replace(tmp, fpath)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return fpath
