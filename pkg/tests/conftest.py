"""Shared fixtures and corpus builders."""
import numpy as np
import pytest

from seedcorpus import Path
from seedcorpus.components.corpus import ParallelCorpus, load_corpus


data_folder = Path(__file__).absparent / 'data'
corpus_manifest = data_folder / 'corpus.yml'
short_manifest = data_folder / 'short.yml'


def make_corpus(nlines=60, nlangs=3, vocab=40, max_len=10, seed=0, empty=0.0):
    """
    Synthetic Zipf-distributed parallel corpus.

    Languages are ``l0``, ``l1``, ...; every language draws its own words.
    A share `empty` of the lines is left blank in every language.
    """
    rng = np.random.default_rng(seed)
    lines = {}
    blanks = rng.random(nlines) < empty
    for k in range(nlangs):
        texts = []
        for i in range(nlines):
            if blanks[i]:
                texts.append('')
                continue
            length = int(rng.integers(1, max_len + 1))
            words = np.minimum(rng.zipf(1.5, size=length), vocab)
            texts.append(' '.join(f'w{k}x{w}' for w in words))
        lines[f'l{k}'] = texts
    return ParallelCorpus(lines)


@pytest.fixture(name='fixture_corpus')
def fixture_corpus_():
    """Five-language fixture corpus with metadata and lexicon."""
    return load_corpus(corpus_manifest)


@pytest.fixture(name='synthetic')
def synthetic_():
    """Synthetic three-language corpus."""
    return make_corpus()


@pytest.fixture(name='toy')
def toy_():
    """Three one-language lines: ``a b``, ``c``, ``a``."""
    return ParallelCorpus({'xx': ['a b', 'c', 'a']})
