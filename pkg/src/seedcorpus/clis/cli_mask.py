r"""
Mask named entities of one corpus language, or restore them.

Masking replaces every lexicon entity of a line by ``__NE<k>``, longest
match first, and writes the masked text, one tokenized line per corpus
line, next to a map file of the masked spans:

    <line number>  <k>  <entity>

With `--unmask`, a file aligned to the masked text (for example its
translation) gets its ``__NE<k>`` tokens replaced back from the map.
Mask tokens are restored only when they stand between whitespace.

USAGE:
    $ seedcorpus mask \
        --corpus manifest.yml \
        --lang fry \
        [--lexicon ne.csv] \
        [--output fry.masked.txt]

    $ seedcorpus mask \
        --unmask translated.txt \
        --maps fry.masked.txt.ne.tsv \
        [--output translated.unmasked.txt]
"""
import argparse

from seedcorpus import Path, log
from seedcorpus.components.corpus import (
    TokenizedLine,
    load_corpus,
    mask_corpus,
    read_lexicon,
    unmask_named_entities,
    )
from seedcorpus.core.exceptions import MissingFileError
from seedcorpus.libs import libcli
from seedcorpus.libs.libio import (
    make_folder_or_cwd,
    read_text_lines,
    write_atomic,
    )
from seedcorpus.logger import S, T, close_files, init_files


LOGFILESNAME = '.seedcorpus_mask'
MAPS_EXT = '.ne.tsv'

_name = 'mask'
_help = 'Mask named entities of a language, or unmask a translation.'

_prog, _des, _usage = libcli.parse_doc_params(__doc__)

ap = libcli.CustomParser(
    prog=_prog,
    description=libcli.detailed.format(_des),
    usage=_usage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

ap.add_argument(
    '-c',
    '--corpus',
    help='YAML corpus manifest.',
    type=str,
    default=None,
    )

ap.add_argument(
    '-l',
    '--lang',
    help='Language to mask.',
    type=str,
    default=None,
    )

ap.add_argument(
    '-x',
    '--lexicon',
    help='Named-entity lexicon. Defaults to the lexicon of the manifest.',
    type=str,
    default=None,
    )

ap.add_argument(
    '-u',
    '--unmask',
    help='Text aligned to a masked file whose entities to restore.',
    type=str,
    default=None,
    )

ap.add_argument(
    '--maps',
    help='Map file written when masking. Required with `--unmask`.',
    type=str,
    default=None,
    )

ap.add_argument(
    '-o',
    '--output',
    help=(
        'Output file, written atomically. Defaults to `<lang>.masked.txt` '
        'when masking and `<unmask>.unmasked.txt` when unmasking.'
        ),
    type=str,
    default=None,
    )


def format_entity_maps(maps):
    """Map file text of per line entity maps; unmasked lines add no row."""
    rows = []
    for number, entity_map in enumerate(maps, start=1):
        for k, span in sorted(entity_map.items()):
            rows.append(f'{number}\t{k}\t{" ".join(span)}')
    return ''.join(f'{row}\n' for row in rows)


def read_entity_maps(fpath):
    """
    Read a map file.

    Returns
    -------
    dict
        Line number to its ``{k: span tuple}`` entity map.
    """
    maps = {}
    for row in read_text_lines(fpath):
        if not row.strip():
            continue
        number, k, entity = row.split('\t', 2)
        maps.setdefault(int(number), {})[int(k)] = tuple(entity.split())
    return maps


def mask_language(corpus, lang, lexicon=None):
    """
    Masked lines and entity maps of `lang`.

    Raises
    ------
    MissingFileError
        If neither `lexicon` nor the manifest names a lexicon.
    """
    lexicon = lexicon or corpus.lexicon_path
    if lexicon is None:
        raise MissingFileError('named-entity lexicon')
    masked, maps = mask_corpus(corpus, lang, read_lexicon(lexicon, lang))
    log.info(S(
        '{} entities masked in {} lines',
        sum(len(m) for m in maps),
        sum(1 for m in maps if m),
        ))
    return masked, maps


def unmask_lines(lines, maps):
    """Restore the entities of `maps` into whitespace split `lines`."""
    out = []
    for number, text in enumerate(lines, start=1):
        entity_map = maps.get(number)
        if not entity_map:
            out.append(text)
            continue
        line = TokenizedLine(str(number), text.split())
        out.append(' '.join(unmask_named_entities(line, entity_map).tokens))
    return out


def main(
        corpus=None,
        lang=None,
        lexicon=None,
        unmask=None,
        maps=None,
        output=None,
        func=None,
        ):
    """
    Mask a corpus language or unmask an aligned file.

    Parameters
    ----------
    corpus : str or Path, optional
        YAML corpus manifest.
    lang : str, optional
    lexicon : str or Path, optional
        Overrides the lexicon of the manifest.
    unmask : str or Path, optional
        File to restore; switches to unmasking.
    maps : str or Path, optional
    output : str or Path, optional
    """
    folder = make_folder_or_cwd(Path(output).absparent if output else None)
    init_files(log, Path(folder, LOGFILESNAME))
    try:
        if unmask is not None:
            if maps is None:
                ap.error('--unmask requires --maps')
            log.info(T('unmasking named entities'))
            restored = unmask_lines(
                read_text_lines(unmask),
                read_entity_maps(maps),
                )
            output = output or f'{unmask}.unmasked.txt'
            write_atomic(output, ''.join(f'{line}\n' for line in restored))
            log.info(S('unmasked text saved to {}', output))
            return restored

        if corpus is None or lang is None:
            ap.error('--corpus and --lang are required')

        log.info(T('masking named entities'))
        corpus = load_corpus(corpus)
        corpus.check_language(lang)
        masked, entity_maps = mask_language(corpus, lang, lexicon)

        output = output or f'{lang}.masked.txt'
        text = ''.join(f'{" ".join(m.tokens)}\n' for m in masked)
        write_atomic(output, text)
        write_atomic(f'{output}{MAPS_EXT}', format_entity_maps(entity_maps))
        log.info(S('masked text saved to {}', output))
        print(f'{sum(len(m) for m in entity_maps)} entities masked')
        return masked, entity_maps
    finally:
        close_files(log)


if __name__ == '__main__':
    libcli.maincli(ap, main)
