"""Test corpus ingestion, tokenization and frequency tables."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from seedcorpus.components.corpus import (
    Language,
    NeLexicon,
    ParallelCorpus,
    build_frequency_table,
    load_corpus,
    mask_corpus,
    mask_named_entities,
    read_lexicon,
    read_metadata,
    resolve_span,
    tokenize,
    unmask_named_entities,
    word_budget,
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
from seedcorpus.libs.libio import read_text_lines

from tests.conftest import corpus_manifest, data_folder, short_manifest


def test_load_fixture(fixture_corpus):
    """Test the fixture manifest loads every part."""
    assert fixture_corpus.languages == ['afr', 'deu', 'eng', 'fry', 'nld']
    assert len(fixture_corpus) == 10
    assert fixture_corpus.line_ids[3] == 'LUK 1:1'
    assert fixture_corpus.extra == {'bpe_size': 3000}
    assert fixture_corpus.lexicon_path.name == 'ne.csv'
    assert fixture_corpus.text('eng', 'JHN 1:1') == 'In the beginning was the Word.'  # noqa: E501


def test_metadata(fixture_corpus):
    """Test metadata fields are parsed and typed."""
    fry = fixture_corpus.metadata['fry']
    assert fry.name == 'Frisian'
    assert fry.family == 'Germanic'
    assert fry.speakers == 470000
    assert fry.resource_level == 1
    assert fry.neighbors == ('eng', 'deu', 'nld', 'afr')


def test_metadata_neighbors_table():
    """Test a neighbor list of ten languages."""
    metadata = read_metadata(data_folder / 'langs_neighbors.csv')
    assert len(metadata) == 11
    assert metadata['fry'].neighbors == (
        'eng', 'deu', 'nld', 'nor', 'afr', 'swe', 'fra', 'ita', 'por', 'ron',
        )


def test_metadata_unknown_neighbor(tmp_path):
    """Test neighbors must be languages of the file."""
    fpath = tmp_path / 'langs.csv'
    fpath.write_text(
        'code,name,family,speakers,resource_level,neighbors\n'
        'fry,Frisian,Germanic,470000,1,eng\n'
        )
    with pytest.raises(UnknownLanguageError):
        read_metadata(fpath)


@pytest.mark.parametrize('level', [-1, 6])
def test_resource_level_range(level):
    """Test resource levels live in 0 to 5."""
    with pytest.raises(InsufficientMetadataError):
        Language('xx', resource_level=level)


def test_checksum_deterministic(fixture_corpus):
    """Test the checksum is stable across loads and sensitive to text."""
    again = load_corpus(corpus_manifest)
    assert again.checksum == fixture_corpus.checksum
    assert len(fixture_corpus.checksum) == 64

    lines = {
        lang: [fixture_corpus.text(lang, lid) for lid in fixture_corpus.line_ids]  # noqa: E501
        for lang in fixture_corpus.languages
        }
    lines['eng'][0] += ' '
    changed = ParallelCorpus(lines, line_ids=fixture_corpus.line_ids)
    assert changed.checksum != fixture_corpus.checksum


def test_alignment_mismatch():
    """Test a language one line short is rejected."""
    with pytest.raises(AlignmentMismatchError):
        load_corpus(short_manifest)


def test_duplicate_line_id():
    """Test repeated line ids are rejected."""
    with pytest.raises(DuplicateLineIdError):
        ParallelCorpus({'xx': ['a', 'b']}, line_ids=['1', '1'])


def test_missing_language_file(tmp_path):
    """Test a manifest naming a missing file."""
    manifest = tmp_path / 'corpus.yml'
    manifest.write_text('languages:\n  eng: eng.txt\n')
    with pytest.raises(MissingFileError):
        load_corpus(manifest)


def test_default_line_ids():
    """Test line ids default to 1-based positions."""
    corpus = ParallelCorpus({'xx': ['a', 'b', 'c']})
    assert corpus.line_ids == ['1', '2', '3']
    assert corpus.position('3') == 2
    with pytest.raises(UnknownLineError):
        corpus.position('4')


def test_unknown_language(toy):
    """Test asking for a language not loaded."""
    with pytest.raises(UnknownLanguageError):
        toy.tokenized('eng')


def test_tokenize_golden(fixture_corpus):
    """Test Frisian tokens against the hand tokenized file."""
    golden = read_text_lines(data_folder / 'fry_tokens.txt')
    tokens = [line.tokens for line in fixture_corpus.tokenized('fry')]
    assert tokens == [tuple(g.split(' ')) for g in golden]


@pytest.mark.parametrize(
    'text,expected',
    [
        ('a b a', ('a', 'b', 'a')),
        ('"Yes," he said.', ('"', 'Yes', ',"', 'he', 'said', '.')),
        ("don't stop", ("don't", 'stop')),
        ('LUK 1:1', ('LUK', '1:1')),
        ('...', ('...',)),
        ('  ', ()),
        ],
    )
def test_tokenize(text, expected):
    """Test whitespace split and punctuation detachment."""
    assert tokenize(text).tokens == expected


@given(st.text())
def test_tokenize_keeps_characters(text):
    """Test tokens concatenate back to the text without whitespace."""
    tokens = tokenize(text).tokens
    assert all(tokens)
    assert ''.join(tokens) == ''.join(text.split())


def test_ngrams_do_not_cross_lines():
    """Test n-grams stay within their line."""
    line = tokenize('a b c')
    assert line.ngrams(2) == [('a', 'b'), ('b', 'c')]
    assert line.ngrams(3) == [('a', 'b', 'c')]
    assert line.ngrams(4) == []


def test_frequency_table():
    """Test counts of `a b a` up to bigrams."""
    corpus = ParallelCorpus({'xx': ['a b a']})
    F = build_frequency_table(corpus, 'xx', 2)
    assert F(('a',)) == 2
    assert F(('b',)) == 1
    assert F(('a', 'b')) == 1
    assert F(('b', 'a')) == 1
    assert F(('c',)) == 0
    assert F(('a', 'b', 'a')) == 0
    assert F.total(1) == 3


def test_frequency_table_lines_boundary():
    """Test no bigram spans two lines."""
    corpus = ParallelCorpus({'xx': ['a', 'b']})
    F = build_frequency_table(corpus, 'xx', 2)
    assert F(('a', 'b')) == 0
    assert F.total(2) == 0


@pytest.mark.parametrize('J', [0, 9])
def test_frequency_table_order_range(J):
    """Test orders outside 1 to 8."""
    corpus = ParallelCorpus({'xx': ['a']})
    with pytest.raises(InvalidParameterError):
        build_frequency_table(corpus, 'xx', J)


def test_mask_named_entities():
    """Test entities become ordered mask tokens."""
    lexicon = NeLexicon({
        ('Ruth',): frozenset({'Ruth'}),
        ('David',): frozenset({'David'}),
        })
    masked, entity_map = mask_named_entities(tokenize('Ruth spoke to David'), lexicon)  # noqa: E501
    assert masked.tokens == ('__NE0', 'spoke', 'to', '__NE1')
    assert entity_map == {0: ('Ruth',), 1: ('David',)}

    masked, _ = mask_named_entities(tokenize('David David'), lexicon)
    assert masked.tokens == ('__NE0', '__NE1')


def test_mask_longest_match(fixture_corpus):
    """Test the longest lexicon span wins and masking inverts."""
    lexicon = read_lexicon(fixture_corpus.lexicon_path, 'eng')
    line = fixture_corpus.tokenized('eng')[0]
    masked, entity_map = mask_named_entities(line, lexicon)
    assert masked.tokens == (
        'The', 'book', 'of', 'the', 'genealogy', 'of', '__NE0', '.',
        )
    assert entity_map == {0: ('Jesus', 'Christ')}
    assert unmask_named_entities(masked, entity_map) == line


def test_mask_corpus_inverts(fixture_corpus):
    """Test every masked Frisian line unmasks to the original."""
    lexicon = read_lexicon(fixture_corpus.lexicon_path, 'fry')
    masked, maps = mask_corpus(fixture_corpus, 'fry', lexicon)
    original = fixture_corpus.tokenized('fry')
    assert [unmask_named_entities(m, e) for m, e in zip(masked, maps)] == original  # noqa: E501
    assert masked[8].tokens[-2] == '__NE0'


def test_lexicon_unknown_column(fixture_corpus):
    """Test a lexicon without the asked language."""
    with pytest.raises(UnknownLanguageError):
        read_lexicon(fixture_corpus.lexicon_path, 'swe')


def test_resolve_span(fixture_corpus):
    """Test named spans, ranges and explicit ids."""
    assert resolve_span(fixture_corpus, 'luke') == [
        'LUK 1:1', 'LUK 1:2', 'LUK 1:3', 'LUK 1:4',
        ]
    assert resolve_span(fixture_corpus, 'MAT 1:3..LUK 1:1') == [
        'MAT 1:3', 'LUK 1:1',
        ]
    assert resolve_span(fixture_corpus, ['JHN 1:2']) == ['JHN 1:2']
    with pytest.raises(EmptySpanError):
        resolve_span(fixture_corpus, 'LUK 1:1..MAT 1:1')


def test_resolve_span_numeric_ids():
    """Test the eight digit id convention for Luke."""
    corpus = ParallelCorpus(
        {'xx': ['a', 'b c', 'd']},
        line_ids=['41016020', '42001001', '43001001'],
        )
    assert resolve_span(corpus, 'luke') == ['42001001']
    assert word_budget(corpus, 'xx', 'luke') == 2


def test_word_budget(fixture_corpus):
    """Test the Luke budget in English and Frisian."""
    assert word_budget(fixture_corpus, 'eng', 'luke') == 40
    assert word_budget(fixture_corpus, 'fry', 'luke') == 42
    assert word_budget(fixture_corpus, 'eng', []) == 0
