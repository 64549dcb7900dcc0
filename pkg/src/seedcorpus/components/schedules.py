"""
Training schedule planner.

Five stages can compose a schedule, always in this order:

====  ==========  =========================================================
P0    [M2M100]    start from the pretrained multilingual checkpoint
P1    [N]^2       train all N source languages into each other
P2    [N+1]^2     add the target language on both sides
P3    [N+1]       train the N sources and the target into the target
P4    [1]^2       target-side autoencoder
====  ==========  =========================================================

A schedule needs pretraining, so it holds P0 or P1. Schedules A to H
start from P1 without the checkpoint; I to X start from the checkpoint.
Within each group letters follow descending binary counting over the
optional stages, so A and I hold every stage and H and X only the
required one.

This module only plans: manifests describe the stages for an external
trainer.
"""
import itertools
from collections import namedtuple

import yaml

from seedcorpus.components import (
    default_hyperparameters,
    pretrain_split,
    train_split,
    )
from seedcorpus.core.exceptions import InvalidScheduleError
from seedcorpus.libs.libio import check_file_exists, write_atomic
from seedcorpus.libs.libparse import values_to_dict


Stage = namedtuple('Stage', ['key', 'name', 'data_scope', 'direction'])

P0 = Stage('P0', '[M2M100]', 'pretrained checkpoint', 'pretrained')
P1 = Stage('P1', '[N]^2', 'source languages', 'NxN')
P2 = Stage('P2', '[N+1]^2', 'source languages and target', '(N+1)x(N+1)')
P3 = Stage('P3', '[N+1]', 'source languages and target', '(N+1)x1')
P4 = Stage('P4', '[1]^2', 'target', 'autoencoder')

stages = (P0, P1, P2, P3, P4)
_stage_lookup = {
    **{s.key: s for s in stages},
    **{s.name: s for s in stages},
    **{s.name.replace('^2', '²'): s for s in stages},
    }

violation_no_pretraining = 'NoPretraining'
violation_stage_order = 'StageOrder'
violation_unknown_stage = 'UnknownStage'

Violation = namedtuple('Violation', ['kind', 'detail'])


class Schedule():
    """
    A labeled, ordered subset of the five stages.

    Parameters
    ----------
    label : str
        Letter ``A`` to ``X``.
    stages : iterable of :class:`Stage`
    """

    def __init__(self, label, stages):
        self.label = label
        self.stages = tuple(stages)

    @property
    def uses_pretrained(self):
        """Whether the schedule starts from the pretrained checkpoint."""
        return P0 in self.stages

    @property
    def uses_seed_corpus(self):
        """Whether a stage trains on the target's seed corpus."""
        return any(s in (P2, P3, P4) for s in self.stages)

    @property
    def keys(self):
        """Stage keys, e.g. ``('P1', 'P2')``."""
        return tuple(s.key for s in self.stages)

    def __eq__(self, other):
        return (
            isinstance(other, Schedule)
            and self.label == other.label
            and self.stages == other.stages
            )

    def __hash__(self):
        return hash((self.label, self.stages))

    def __repr__(self):
        return f'Schedule({self.label!r}, {list(self.keys)})'

    def describe(self):
        """``label  uses_pretrained  stage names``, tab separated."""
        names = ' -> '.join(s.name for s in self.stages)
        return f'{self.label}\t{str(self.uses_pretrained).lower()}\t{names}'


def _label_subsets(required, optional, first_label):
    schedules = []
    for i, bits in enumerate(itertools.product((1, 0), repeat=len(optional))):
        chosen = [required] + [s for s, b in zip(optional, bits) if b]
        schedules.append(Schedule(chr(ord(first_label) + i), chosen))
    return schedules


def enumerate_schedules():
    """
    The 24 schedules, ``A`` to ``X``.

    Returns
    -------
    list of :class:`Schedule`
    """
    without_checkpoint = _label_subsets(P1, (P2, P3, P4), 'A')
    with_checkpoint = _label_subsets(P0, (P1, P2, P3, P4), 'I')
    return without_checkpoint + with_checkpoint


_schedules = {s.label: s for s in enumerate_schedules()}
schedule_labels = tuple(_schedules)


def get_schedule(label):
    """
    Schedule of `label`.

    Raises
    ------
    InvalidScheduleError
    """
    try:
        return _schedules[str(label).upper()]
    except KeyError:
        raise InvalidScheduleError(
            label,
            f'valid labels are {", ".join(schedule_labels)}',
            )


def parse_stage(value):
    """Stage from a key (``P2``), a name (``[N+1]^2``) or a Stage."""
    if isinstance(value, Stage):
        return value
    return _stage_lookup.get(str(value).strip())


def validate_schedule(stage_list):
    """
    Check a stage list.

    Returns
    -------
    None or :class:`Violation`
        ``None`` if the list is a valid schedule. Never raises.
    """
    parsed = []
    for value in stage_list:
        stage = parse_stage(value)
        if stage is None:
            return Violation(violation_unknown_stage, f'unknown stage {value!r}')  # noqa: E501
        parsed.append(stage)

    if P0 not in parsed and P1 not in parsed:
        return Violation(
            violation_no_pretraining,
            'a schedule needs [M2M100] or [N]^2',
            )

    positions = [stages.index(s) for s in parsed]
    for a, b in zip(positions, positions[1:]):
        if b <= a:
            return Violation(
                violation_stage_order,
                f'{stages[b].key} cannot follow {stages[a].key}',
                )
    return None


class ExperimentConfig():
    """
    What a schedule manifest trains on.

    Parameters
    ----------
    target : str
        Code of the new language.
    sources : list of str
        Source language codes, the N of the stage names.
    seed_corpus : str, optional
        Ranking file of the target's seed corpus.
    hyperparameters : dict, optional
        Overrides of the default hyperparameters; carried as data.
    name : str, optional
    """

    def __init__(
            self,
            target,
            sources=(),
            seed_corpus=None,
            hyperparameters=None,
            name=None,
            ):
        self.target = target
        self.sources = list(sources)
        self.seed_corpus = None if seed_corpus is None else str(seed_corpus)
        self.hyperparameters = {**default_hyperparameters, **(hyperparameters or {})}  # noqa: E501
        self.name = name or target

    def __eq__(self, other):
        return isinstance(other, ExperimentConfig) and vars(self) == vars(other)  # noqa: E501

    @classmethod
    def from_values(cls, values):
        """
        Build from ``key=value`` strings.

        ``target``, ``sources`` (comma separated), ``seed_corpus`` and
        ``name`` are fields; every other key overrides a hyperparameter.
        """
        params = values_to_dict(values)
        return cls._from_dict(params)

    @classmethod
    def from_yaml(cls, fpath):
        """Build from a YAML file with the same keys as :meth:`from_values`."""  # noqa: E501
        fpath = check_file_exists(fpath)
        with open(fpath, encoding='utf-8') as fin:
            params = yaml.safe_load(fin) or {}
        return cls._from_dict(params)

    @classmethod
    def _from_dict(cls, params):
        params = dict(params)
        target = params.pop('target', None)
        if target is None:
            raise InvalidScheduleError('config', 'no target language given')
        sources = params.pop('sources', ())
        if isinstance(sources, str):
            sources = [s for s in sources.replace(';', ',').split(',') if s]
        hyper = dict(params.pop('hyperparameters', None) or {})
        seed_corpus = params.pop('seed_corpus', None)
        name = params.pop('name', None)
        hyper.update(params)
        return cls(
            str(target),
            sources=[str(s) for s in sources],
            seed_corpus=seed_corpus,
            hyperparameters=hyper,
            name=name,
            )


def _stage_block(stage, config):
    sources = list(config.sources)
    target = config.target
    pretrain = dict(zip(('train', 'valid', 'test'), pretrain_split))
    seed = dict(zip(('train', 'valid', 'test'), train_split))

    if stage is P0:
        src, tgt, split, seed_corpus = [], [], None, None
    elif stage is P1:
        src, tgt, split, seed_corpus = sources, sources, pretrain, None
    elif stage is P2:
        src = tgt = sources + [target]
        split, seed_corpus = seed, config.seed_corpus
    elif stage is P3:
        src, tgt = sources + [target], [target]
        split, seed_corpus = seed, config.seed_corpus
    else:
        src, tgt, split, seed_corpus = [target], [target], seed, config.seed_corpus  # noqa: E501

    languages = sorted(set(src) | set(tgt))
    return {
        'stage': stage.key,
        'name': stage.name,
        'data_scope': stage.data_scope,
        'direction': stage.direction,
        'languages': languages,
        'source_languages': list(src),
        'target_languages': list(tgt),
        'split': split,
        'seed_corpus': seed_corpus,
        }


def emit_manifest(schedule, config):
    """
    Manifest document of `schedule` for `config`.

    Returns
    -------
    dict
        Insertion ordered, ready for :func:`format_manifest`.

    Raises
    ------
    InvalidScheduleError
    """
    if not isinstance(schedule, Schedule):
        schedule = get_schedule(schedule)
    violation = validate_schedule(schedule.stages)
    if violation is not None:
        raise InvalidScheduleError(schedule.label, violation.detail)

    manifest = {
        'schedule': schedule.label,
        'uses_pretrained': schedule.uses_pretrained,
        'experiment': config.name,
        'target': config.target,
        'sources': list(config.sources),
        }
    # pretraining only schedules never see target data
    if schedule.uses_seed_corpus:
        manifest['seed_corpus'] = config.seed_corpus
    manifest['hyperparameters'] = dict(config.hyperparameters)
    manifest['stages'] = [_stage_block(s, config) for s in schedule.stages]
    return manifest


def format_manifest(manifest):
    """YAML text of a manifest, fields in a stable order."""
    return yaml.safe_dump(
        manifest,
        sort_keys=False,
        default_flow_style=False,
        allow_unicode=True,
        )


def write_manifest(manifest, fpath):
    """Write a manifest atomically."""
    return write_atomic(fpath, format_manifest(manifest))


def parse_manifest(document):
    """
    Schedule and experiment config of a manifest.

    Parameters
    ----------
    document : str or dict
        YAML text or an already loaded manifest.

    Returns
    -------
    tuple
        (:class:`Schedule`, :class:`ExperimentConfig`)
    """
    if isinstance(document, str):
        document = yaml.safe_load(document)
    try:
        label = document['schedule']
        blocks = document['stages']
        target = document['target']
    except (KeyError, TypeError) as err:
        raise InvalidScheduleError('manifest', f'missing field {err}')

    stage_list = [parse_stage(b.get('stage')) for b in blocks]
    violation = validate_schedule(stage_list)
    if violation is not None:
        raise InvalidScheduleError(label, violation.detail)

    schedule = Schedule(label, stage_list)
    if schedule != get_schedule(label):
        raise InvalidScheduleError(label, 'stages do not match the label')

    config = ExperimentConfig(
        target,
        sources=document.get('sources') or [],
        seed_corpus=document.get('seed_corpus'),
        hyperparameters=document.get('hyperparameters'),
        name=document.get('experiment'),
        )
    return schedule, config
