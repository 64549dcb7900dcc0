"""
Language pools and multilingual score aggregation.

A pool names the reference languages that vote on every sentence:

* ``per_language``  every language except the target
* ``per_family``    the most-spoken member of each of the ``k`` families
                    with the most speakers
* ``per_person``    the ``k`` most-spoken languages
* ``per_neighbor``  the target's declared neighbors

Votes are summed over the pool rows of a :class:`ScoreMatrix`.
"""
from collections import defaultdict

from seedcorpus import log
from seedcorpus.components import (
    default_pool_k,
    policy_family,
    policy_language,
    policy_neighbor,
    policy_person,
    pool_policies,
    )
from seedcorpus.core.exceptions import (
    InsufficientMetadataError,
    InvalidParameterError,
    MissingRowError,
    UnknownLanguageError,
    UnknownPolicyError,
    )
from seedcorpus.logger import S


class LanguagePool():
    """
    Reference languages aggregated under one policy.

    Parameters
    ----------
    policy : str
    members : iterable of str
        Language codes, kept sorted.
    k : int, optional
        Pool size parameter of ``per_family`` and ``per_person``.
    target : str, optional
        Language the seed corpus is selected for.
    """

    def __init__(self, policy, members, k=None, target=None):
        self.policy = policy
        self.members = tuple(sorted(set(members)))
        self.k = k
        self.target = target

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, code):
        return code in self.members

    def __eq__(self, other):
        return (
            isinstance(other, LanguagePool)
            and self.policy == other.policy
            and self.members == other.members
            )

    def __repr__(self):
        return f'LanguagePool({self.policy!r}, {list(self.members)})'

    def describe(self):
        """Header friendly description: ``policy:code;code``."""
        return f'{self.policy}:{";".join(self.members)}'


def _speakers(lang):
    if lang.speakers is None:
        raise InsufficientMetadataError(f'{lang.code} has no speaker count')
    return lang.speakers


def _most_spoken(langs):
    # more speakers first, then code order
    return sorted(langs, key=lambda lang: (-_speakers(lang), lang.code))


def build_pool(metadata, policy, target=None, k=default_pool_k, available=None):
    """
    Build the pool of `policy` for `target`.

    Parameters
    ----------
    metadata : dict
        Language code to :class:`~seedcorpus.components.corpus.Language`.
    policy : str
        One of ``per_language``, ``per_family``, ``per_person``,
        ``per_neighbor``.
    target : str, optional
        Excluded from every pool; required for ``per_neighbor``.
    k : int
    available : iterable of str, optional
        Restrict candidates to these codes (the languages the corpus
        actually holds).

    Raises
    ------
    UnknownPolicyError
    UnknownLanguageError
        If `target` is required and not in `metadata`.
    InsufficientMetadataError
        If metadata lack the speaker or family fields the policy needs,
        or the pool comes out empty.
    """
    if policy not in pool_policies:
        raise UnknownPolicyError(policy, ', '.join(pool_policies))
    if not metadata:
        raise InsufficientMetadataError('no language metadata loaded')
    if k is not None and k < 1:
        raise InvalidParameterError('pool size', k, 'at least 1')

    available = set(available) if available is not None else set(metadata)
    candidates = [
        lang for code, lang in sorted(metadata.items())
        if code != target and code in available
        ]

    if policy == policy_language:
        members = [lang.code for lang in candidates]

    elif policy == policy_person:
        members = [lang.code for lang in _most_spoken(candidates)[:k]]

    elif policy == policy_family:
        families = defaultdict(list)
        for lang in candidates:
            if not lang.family:
                raise InsufficientMetadataError(f'{lang.code} has no family')
            families[lang.family].append(lang)
        totals = sorted(
            families,
            key=lambda f: (-sum(_speakers(m) for m in families[f]), f),
            )
        members = [_most_spoken(families[f])[0].code for f in totals[:k]]

    elif policy == policy_neighbor:
        if target not in metadata:
            raise UnknownLanguageError(target)
        members = [
            code for code in metadata[target].neighbors
            if code in available and code != target
            ]

    if not members:
        raise InsufficientMetadataError(
            f'policy {policy} yields an empty pool for {target}'
            )

    pool = LanguagePool(policy, members, k=k, target=target)
    log.debug(S('pool {} for {}: {}', policy, target, ' '.join(pool.members)))
    return pool


def aggregate_scores(matrix, pool):
    """
    Sum the rows of `matrix` over the members of `pool`.

    Rows are added in language-code order starting from a copy of the
    first, so the result does not depend on member order or on the number
    of workers that refreshed the rows. Stale entries must be refreshed
    beforehand.

    Parameters
    ----------
    matrix : :class:`~seedcorpus.components.memo.ScoreMatrix`
    pool : :class:`LanguagePool` or iterable of str

    Returns
    -------
    np.ndarray
        Combined score per corpus line.

    Raises
    ------
    MissingRowError
        If a member has no row in `matrix`.
    """
    members = sorted(set(pool))
    if not members:
        raise InvalidParameterError('pool', 'empty', 'at least one language')
    for code in members:
        if code not in matrix.rows:
            raise MissingRowError(code)

    combined = matrix.row(members[0]).copy()
    for code in members[1:]:
        combined += matrix.row(code)
    return combined
