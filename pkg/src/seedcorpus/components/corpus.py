"""
Parallel corpus ingestion, tokenization and frequency tables.

A corpus is described by a YAML manifest next to its text files::

    languages:
      eng: eng.txt
      fry: fry.txt
    ids: vref.txt          # optional, one line id per line
    metadata: langs.csv    # optional
    lexicon: ne.csv        # optional
    bpe_size: 3000         # optional, recorded for downstream trainers

Text files are UTF-8 with one line per line id. Without an ``ids`` file
line ids are the 1-based line positions.

Metadata is comma separated with the columns
``code,name,family,speakers,resource_level,neighbors`` where neighbors is
a semicolon separated list of codes. The named-entity lexicon has one
entity per row and one column per language code.
"""
import unicodedata
from collections import Counter
from functools import lru_cache

import pandas as pd
import yaml

from seedcorpus import Path, log, sha256_of
from seedcorpus.components import (
    manifest_ids,
    manifest_languages,
    manifest_lexicon,
    manifest_metadata,
    max_ngram_order,
    max_resource_level,
    metadata_columns,
    min_resource_level,
    named_spans,
    ne_mask_prefix,
    span_range_sep,
    )
from seedcorpus.core.exceptions import (
    AlignmentMismatchError,
    DuplicateLineIdError,
    EmptySpanError,
    InsufficientMetadataError,
    InvalidParameterError,
    MissingFileError,
    UnknownLanguageError,
    UnknownLineError,
    )
from seedcorpus.libs.libio import check_file_exists, read_text_lines
from seedcorpus.libs.libparse import split_codes
from seedcorpus.logger import S


class Language():
    """Language metadata entry."""

    def __init__(
            self,
            code,
            name=None,
            family=None,
            speakers=None,
            resource_level=None,
            neighbors=(),
            ):
        self.code = code
        self.name = name if name is not None else code
        self.family = family
        self.speakers = speakers
        self.resource_level = resource_level
        self.neighbors = tuple(neighbors)

        if resource_level is not None \
                and not min_resource_level <= resource_level <= max_resource_level:  # noqa: E501
            raise InsufficientMetadataError(
                f'resource level of {code} out of range: {resource_level}'
                )
        if speakers is not None and speakers < 0:
            raise InsufficientMetadataError(
                f'negative speaker count for {code}'
                )

    def __repr__(self):
        return f'Language({self.code!r})'


def read_metadata(fpath):
    """
    Read language metadata.

    Returns
    -------
    dict
        Language code to :class:`Language`, in file order.
    """
    fpath = check_file_exists(fpath)
    df = pd.read_csv(
        fpath,
        dtype={'code': str, 'name': str, 'family': str, 'neighbors': str},
        keep_default_na=False,
        na_values={'speakers': [''], 'resource_level': ['']},
        )

    missing = [c for c in ('code',) if c not in df.columns]
    if missing:
        raise InsufficientMetadataError(f'missing columns {missing}')

    metadata = {}
    for row in df.to_dict('records'):
        code = row['code'].strip()
        if code in metadata:
            raise InsufficientMetadataError(f'duplicate language code {code}')
        metadata[code] = Language(
            code,
            name=row.get('name') or code,
            family=row.get('family') or None,
            speakers=_int_or_none(row.get('speakers')),
            resource_level=_int_or_none(row.get('resource_level')),
            neighbors=split_codes(row.get('neighbors')),
            )

    for lang in metadata.values():
        unknown = [n for n in lang.neighbors if n not in metadata]
        if unknown:
            raise UnknownLanguageError(
                f'{unknown} (neighbors of {lang.code})'
                )
    return metadata


def _int_or_none(value):
    if value is None or pd.isna(value):
        return None
    return int(value)


class TokenizedLine():
    """A line as an ordered tuple of word tokens."""

    __slots__ = ('line_id', 'tokens')

    def __init__(self, line_id, tokens):
        self.line_id = line_id
        self.tokens = tuple(tokens)

    @property
    def length(self):
        """Number of tokens, ``L``."""
        return len(self.tokens)

    def ngrams(self, j):
        """Order-`j` n-grams by position; never crosses the line boundary."""
        return ngrams(self.tokens, j)

    def __eq__(self, other):
        return (
            isinstance(other, TokenizedLine)
            and self.line_id == other.line_id
            and self.tokens == other.tokens
            )

    def __hash__(self):
        return hash((self.line_id, self.tokens))

    def __repr__(self):
        return f'TokenizedLine({self.line_id!r}, {self.tokens!r})'


def ngrams(tokens, j):
    """Return the order-`j` n-grams of `tokens` as tuples, by position."""
    return [tuple(tokens[i:i + j]) for i in range(len(tokens) - j + 1)]


def _is_punct(ch):
    return unicodedata.category(ch).startswith('P')


@lru_cache(maxsize=None)
def _split_chunk(chunk):
    start = 0
    while start < len(chunk) and _is_punct(chunk[start]):
        start += 1
    if start == len(chunk):
        return (chunk,)

    end = len(chunk)
    while _is_punct(chunk[end - 1]):
        end -= 1

    parts = (chunk[:start], chunk[start:end], chunk[end:])
    return tuple(p for p in parts if p)


def tokenize(text, line_id=None):
    """
    Tokenize a line.

    Splits on Unicode whitespace, then detaches the leading and the
    trailing run of punctuation of every chunk as tokens of their own.
    Punctuation inside a word (``don't``, ``1:1``) stays attached.

    Returns
    -------
    :class:`TokenizedLine`
    """
    tokens = []
    for chunk in text.split():
        tokens.extend(_split_chunk(chunk))
    return TokenizedLine(line_id, tokens)


class ParallelCorpus():
    """
    Line-aligned text in several languages.

    Parameters
    ----------
    lines : dict
        Language code to a list of raw lines, all of the same length.
    line_ids : list of str, optional
        Shared line ids, one per line. Defaults to 1-based positions.
    metadata : dict, optional
        Language code to :class:`Language`.
    lexicon_path : Path, optional
    extra : dict, optional
        Manifest fields kept for downstream trainers (e.g. ``bpe_size``).
    """

    def __init__(
            self,
            lines,
            line_ids=None,
            metadata=None,
            lexicon_path=None,
            extra=None,
            ):
        self.languages = sorted(lines)
        n = len(lines[self.languages[0]]) if self.languages else 0
        if line_ids is None:
            line_ids = [str(i + 1) for i in range(n)]
        self.line_ids = [str(i) for i in line_ids]

        seen = set()
        for line_id in self.line_ids:
            if line_id in seen:
                raise DuplicateLineIdError(line_id)
            seen.add(line_id)

        expected = len(self.line_ids)
        for lang in self.languages:
            if len(lines[lang]) != expected:
                raise AlignmentMismatchError(lang, expected, len(lines[lang]))

        self.lines = {
            lang: dict(zip(self.line_ids, lines[lang]))
            for lang in self.languages
            }
        self.metadata = metadata or {}
        self.lexicon_path = lexicon_path
        self.extra = extra or {}
        self._positions = {lid: i for i, lid in enumerate(self.line_ids)}
        self._tokenized = {}
        self._checksum = None

    def __len__(self):
        return len(self.line_ids)

    def check_language(self, lang):
        """Raise :class:`UnknownLanguageError` if `lang` is not loaded."""
        if lang not in self.lines:
            raise UnknownLanguageError(lang)

    def position(self, line_id):
        """Return the 0-based position of `line_id`."""
        try:
            return self._positions[str(line_id)]
        except KeyError:
            raise UnknownLineError(line_id)

    def text(self, lang, line_id):
        """Raw text of `line_id` in `lang`."""
        self.check_language(lang)
        return self.lines[lang][line_id]

    def tokenized(self, lang):
        """Tokenized lines of `lang` in corpus order (cached)."""
        self.check_language(lang)
        if lang not in self._tokenized:
            texts = self.lines[lang]
            self._tokenized[lang] = [
                tokenize(texts[lid], lid) for lid in self.line_ids
                ]
        return self._tokenized[lang]

    def word_counts(self, lang):
        """Token count per line of `lang`, in corpus order."""
        return [line.length for line in self.tokenized(lang)]

    @property
    def checksum(self):
        """SHA-256 of the ordered line ids and every language's lines."""
        if self._checksum is None:
            def chunks():
                yield from self.line_ids
                for lang in self.languages:
                    yield f'@{lang}'
                    texts = self.lines[lang]
                    yield from (texts[lid] for lid in self.line_ids)
            self._checksum = sha256_of(chunks())
        return self._checksum


def load_corpus(manifest_path):
    """
    Load a parallel corpus from its YAML manifest.

    Relative paths are resolved against the manifest folder.
    """
    manifest_path = check_file_exists(manifest_path)
    with open(manifest_path, encoding='utf-8') as fin:
        manifest = yaml.safe_load(fin) or {}

    folder = Path(manifest_path).absparent

    def resolve(p):
        p = Path(p)
        return p if p.is_absolute() else Path(folder, p)

    files = manifest.get(manifest_languages) or {}
    if not files:
        raise MissingFileError(f'no languages listed in {manifest_path}')

    lines = {}
    for code, fpath in files.items():
        fpath = resolve(fpath)
        if not fpath.is_file():
            raise MissingFileError(fpath)
        lines[str(code)] = read_text_lines(fpath)
        log.debug(S('read {} lines for {}', len(lines[str(code)]), code))

    line_ids = None
    if manifest.get(manifest_ids):
        line_ids = [i.strip() for i in read_text_lines(resolve(manifest[manifest_ids]))]  # noqa: E501
    else:
        # every language is checked against the longest one
        n = max(len(v) for v in lines.values())
        line_ids = [str(i + 1) for i in range(n)]

    metadata = None
    if manifest.get(manifest_metadata):
        metadata = read_metadata(resolve(manifest[manifest_metadata]))

    lexicon_path = None
    if manifest.get(manifest_lexicon):
        lexicon_path = check_file_exists(resolve(manifest[manifest_lexicon]))

    known = {
        manifest_languages,
        manifest_ids,
        manifest_metadata,
        manifest_lexicon,
        }
    extra = {k: v for k, v in manifest.items() if k not in known}

    return ParallelCorpus(
        lines,
        line_ids=line_ids,
        metadata=metadata,
        lexicon_path=lexicon_path,
        extra=extra,
        )


class FrequencyTable():
    """
    N-gram occurrence counts over the full text of one language.

    Frozen after construction: ``F`` does not change during selection.
    """

    def __init__(self, lang, max_order, counts):
        self.lang = lang
        self.max_order = max_order
        self.counts = counts

    def __call__(self, gram):
        """Return ``F(gram)``, zero for unseen n-grams."""
        gram = tuple(gram)
        table = self.counts.get(len(gram))
        if table is None:
            return 0
        return table.get(gram, 0)

    def total(self, j=1):
        """Sum of the order-`j` counts."""
        return sum(self.counts.get(j, {}).values())


def build_frequency_table(corpus, lang, J):
    """
    Count n-grams of orders 1 to `J` over every line of `lang`.

    N-grams never cross line boundaries.
    """
    corpus.check_language(lang)
    if not 1 <= J <= max_ngram_order:
        raise InvalidParameterError('n-gram order', J, f'within 1 and {max_ngram_order}')  # noqa: E501

    counts = {j: Counter() for j in range(1, J + 1)}
    for line in corpus.tokenized(lang):
        for j in range(1, min(J, line.length) + 1):
            counts[j].update(line.ngrams(j))
    return FrequencyTable(lang, J, counts)


class NeLexicon():
    """
    Named-entity lexicon for exact, longest-match lookup on token spans.

    Parameters
    ----------
    entries : dict
        Tokenized surface form (tuple) to the set of entity strings of
        its lexicon row.
    """

    def __init__(self, entries):
        self.entries = entries
        self.max_span = max((len(k) for k in entries), default=0)

    def __contains__(self, span):
        return tuple(span) in self.entries

    def __len__(self):
        return len(self.entries)


def read_lexicon(fpath, lang=None):
    """
    Read a parallel named-entity lexicon.

    Parameters
    ----------
    fpath : str or Path
        Comma separated, one column per language code.
    lang : str, optional
        Only this language's column provides surface forms. Defaults to
        every column.
    """
    fpath = check_file_exists(fpath)
    df = pd.read_csv(fpath, dtype=str, keep_default_na=False)
    if lang is not None and lang not in df.columns:
        raise UnknownLanguageError(lang)
    columns = [lang] if lang is not None else list(df.columns)

    entries = {}
    for row in df.to_dict('records'):
        row_forms = frozenset(v.strip() for v in row.values() if v.strip())
        for col in columns:
            form = row[col].strip()
            if not form:
                continue
            key = tokenize(form).tokens
            entries[key] = entries.get(key, frozenset()) | row_forms
    return NeLexicon(entries)


def mask_named_entities(line, lexicon):
    """
    Replace lexicon entities by ordered ``__NE`` tokens.

    Scans left to right; at each position the longest matching span
    wins. The k-th matched span becomes ``__NE{k}``.

    Returns
    -------
    tuple
        (masked :class:`TokenizedLine`, entity map ``{k: span tuple}``)
    """
    tokens = line.tokens
    out = []
    entity_map = {}
    i = 0
    while i < len(tokens):
        longest = min(lexicon.max_span, len(tokens) - i)
        for span in range(longest, 0, -1):
            candidate = tokens[i:i + span]
            if candidate in lexicon.entries:
                k = len(entity_map)
                entity_map[k] = candidate
                out.append(f'{ne_mask_prefix}{k}')
                i += span
                break
        else:
            out.append(tokens[i])
            i += 1
    return TokenizedLine(line.line_id, out), entity_map


def unmask_named_entities(line, entity_map):
    """Inverse of :func:`mask_named_entities`."""
    out = []
    for token in line.tokens:
        if token.startswith(ne_mask_prefix):
            k = token[len(ne_mask_prefix):]
            if k.isdigit() and int(k) in entity_map:
                out.extend(entity_map[int(k)])
                continue
        out.append(token)
    return TokenizedLine(line.line_id, out)


def mask_corpus(corpus, lang, lexicon):
    """Mask every line of `lang`; returns lists of lines and entity maps."""
    masked = []
    maps = []
    for line in corpus.tokenized(lang):
        m, e = mask_named_entities(line, lexicon)
        masked.append(m)
        maps.append(e)
    return masked, maps


def resolve_span(corpus, span):
    """
    Resolve a span reference to the ordered list of its line ids.

    Parameters
    ----------
    span : str or iterable
        A named span (``'luke'``), an inclusive ``'first..last'`` id
        range, or an iterable of line ids.
    """
    if isinstance(span, str):
        name = span.lower()
        if name in named_spans:
            label_prefix, book_number = named_spans[name]
            ids = [
                lid for lid in corpus.line_ids
                if lid.startswith(label_prefix)
                or (len(lid) == 8 and lid.isdigit() and lid[:2] == book_number)
                ]
            if not ids:
                raise EmptySpanError(span)
            return ids

        if span_range_sep in span:
            first, last = span.split(span_range_sep, 1)
            i = corpus.position(first.strip())
            j = corpus.position(last.strip())
            if j < i:
                raise EmptySpanError(span)
            return corpus.line_ids[i:j + 1]

        return [corpus.line_ids[corpus.position(span)]]

    ids = [str(i) for i in span]
    for lid in ids:
        corpus.position(lid)
    return ids


def word_budget(corpus, lang, span):
    """
    Number of words of `lang` over `span`.

    An empty iterable span counts zero words; a span reference that
    resolves to nothing raises :class:`EmptySpanError`.
    """
    corpus.check_language(lang)
    ids = resolve_span(corpus, span)
    tokenized = corpus.tokenized(lang)
    return sum(tokenized[corpus.position(lid)].length for lid in ids)
