r"""
Plan training schedules.

Schedules combine, in this order, the stages

    P0  [M2M100]   pretrained checkpoint
    P1  [N]^2      source languages into each other
    P2  [N+1]^2    sources and target into each other
    P3  [N+1]      sources and target into the target
    P4  [1]^2      target autoencoder

Every schedule holds P0 or P1. A to H start from P1, I to X from P0.

Actions:

    list                print the 24 schedules
    emit LABEL          write the YAML manifest of one schedule
    validate STAGE ...  check a stage list, e.g. `P1 P3`

USAGE:
    $ seedcorpus schedule list
    $ seedcorpus schedule emit B \
        --target fry \
        --sources eng deu nld \
        [--seed-corpus ranking.tsv] \
        [--params key=value ...] \
        [--config experiment.yml] \
        [--output]
    $ seedcorpus schedule validate P1 P2 P3
"""
import argparse

from seedcorpus import Path, log
from seedcorpus.components.schedules import (
    ExperimentConfig,
    emit_manifest,
    enumerate_schedules,
    get_schedule,
    validate_schedule,
    write_manifest,
    )
from seedcorpus.core.exceptions import InvalidScheduleError
from seedcorpus.libs import libcli
from seedcorpus.libs.libio import make_folder_or_cwd
from seedcorpus.logger import S, T, close_files, init_files


LOGFILESNAME = '.seedcorpus_schedule'

_name = 'schedule'
_help = 'List, validate and emit manifests of the 24 training schedules.'

_prog, _des, _usage = libcli.parse_doc_params(__doc__)

ap = libcli.CustomParser(
    prog=_prog,
    description=libcli.detailed.format(_des),
    usage=_usage,
    formatter_class=argparse.RawDescriptionHelpFormatter,
    )

ap.add_argument(
    'action',
    help='One of: list, emit, validate.',
    choices=('list', 'emit', 'validate'),
    )

ap.add_argument(
    'items',
    help='Schedule label for `emit`; stage keys or names for `validate`.',
    nargs='*',
    )

ap.add_argument(
    '-t',
    '--target',
    help='Target language code.',
    type=str,
    default=None,
    )

ap.add_argument(
    '--sources',
    help='Source language codes.',
    nargs='+',
    default=None,
    )

ap.add_argument(
    '--seed-corpus',
    help='Ranking file of the target seed corpus.',
    type=str,
    default=None,
    )

ap.add_argument(
    '--config',
    help='YAML experiment config: target, sources, seed_corpus, overrides.',
    type=str,
    default=None,
    )

ap.add_argument(
    '--params',
    help='Experiment `key=value` pairs; unknown keys set hyperparameters.',
    nargs='+',
    action=libcli.ParamsToDict,
    default=None,
    )

ap.add_argument(
    '-o',
    '--output',
    help='Manifest file. Defaults to `schedule_<LABEL>.yml`.',
    type=str,
    default=None,
    )


def build_config(target=None, sources=None, seed_corpus=None, config=None, params=None):  # noqa: E501
    """
    Experiment config from a YAML file, then ``key=value`` pairs, then flags.

    Later sources override earlier ones.
    """
    values = {}
    if config is not None:
        values.update(vars(ExperimentConfig.from_yaml(config)))
        values['hyperparameters'] = dict(values['hyperparameters'])
    for key, value in (params or {}).items():
        if key in ('target', 'sources', 'seed_corpus', 'name'):
            values[key] = value
        else:
            values.setdefault('hyperparameters', {})[key] = value
    if target is not None:
        values['target'] = target
    if sources is not None:
        values['sources'] = list(sources)
    if seed_corpus is not None:
        values['seed_corpus'] = seed_corpus
    return ExperimentConfig._from_dict(values)


def main(
        action,
        items=(),
        target=None,
        sources=None,
        seed_corpus=None,
        config=None,
        params=None,
        output=None,
        func=None,
        ):
    """
    Run a schedule action.

    Parameters
    ----------
    action : str
        ``list``, ``emit`` or ``validate``.
    items : list of str
        Label for ``emit``; stages for ``validate``.
    target, sources, seed_corpus, config, params
        Experiment configuration for ``emit``.
    output : str or Path, optional
    """
    items = list(items or [])

    if action == 'list':
        rows = [s.describe() for s in enumerate_schedules()]
        print('\n'.join(rows))
        return rows

    if action == 'validate':
        violation = validate_schedule(items)
        if violation is not None:
            raise InvalidScheduleError(' '.join(items), f'{violation.kind}: {violation.detail}')  # noqa: E501
        print('ok')
        return None

    if len(items) != 1:
        raise InvalidScheduleError(' '.join(items) or 'none', 'emit takes one label')  # noqa: E501
    schedule = get_schedule(items[0])

    output = Path(output or f'schedule_{schedule.label}.yml')
    folder = make_folder_or_cwd(output.absparent)
    init_files(log, Path(folder, LOGFILESNAME))
    try:
        log.info(T('emitting schedule {}', schedule.label))
        experiment = build_config(
            target=target,
            sources=sources,
            seed_corpus=seed_corpus,
            config=config,
            params=params,
            )
        manifest = emit_manifest(schedule, experiment)
        write_manifest(manifest, output)
        log.info(S('{} stages saved to {}', len(manifest['stages']), output))
        print(f'{schedule.label}\t{len(manifest["stages"])} stages\t{output}')
    finally:
        close_files(log)
    return manifest


if __name__ == '__main__':
    libcli.maincli(ap, main)
