"""Log line formatting, per-run log files and crash reports."""
import logging
import traceback
from inspect import signature
from time import time_ns

from seedcorpus import Path, __version__, log
from seedcorpus.core.exceptions import ReportOnCrashError


# extension of each per-run file and the lowest level it records
log_file_levels = (
    ('debug', logging.DEBUG),
    ('log', logging.INFO),
    ('error', logging.ERROR),
    )

_plain_format = '[%(asctime)s]%(message)s'
_debug_format = (
    '[%(asctime)s]%(filename)s:%(funcName)s:%(lineno)d: %(message)s'
    )


def titlelog(msg, *args):
    """Format a message to a title: ``Reading Corpus:``."""
    msg = msg.title()
    return f'{msg.format(*args)}:'


def subline(msg, *args, spacer=' ', indent=4):
    """Format an indented progress line under a title."""
    return f'{spacer * indent}{msg.format(*args)}'


T = titlelog
S = subline


def init_files(log, logfilesname):
    """
    Attach the log files of one run to `log`.

    ``<logfilesname>.debug`` records everything with its source location,
    ``.log`` the progress a user keeps with the outputs, and ``.error``
    what made the run fail. Files are overwritten on every run.
    """
    for ext, level in log_file_levels:
        handler = logging.FileHandler(
            f'{logfilesname}.{ext}',
            mode='w',
            encoding='utf-8',
            )
        handler.setLevel(level)
        fmt = _debug_format if level == logging.DEBUG else _plain_format
        handler.setFormatter(logging.Formatter(fmt))
        log.addHandler(handler)


def close_files(log):
    """Detach and close the file handlers added by :func:`init_files`."""
    for handler in list(log.handlers):
        if isinstance(handler, logging.FileHandler):
            log.removeHandler(handler)
            handler.close()


def report_on_crash(
        func,
        *args,
        ROC_exception=Exception,
        ROC_folder=None,
        ROC_prefix='ROC',
        ROC_ext='rpr_on_crash',
        **kwargs,
        ):
    """
    Run `func`; on failure save a report file and raise.

    Worker code runs far from the client that started it, so the report
    keeps what is needed to replay the call: the function, its arguments,
    the package version and the traceback.

    Parameters
    ----------
    ROC_exception : Exception or tuple of Exceptions
        The exception types to report.
    ROC_folder : str or Path, optional
        Folder of the report; defaults to the working directory.
    ROC_prefix, ROC_ext : str
        Report file name is ``<prefix>_<time>.<ext>``.

    Raises
    ------
    ReportOnCrashError
        Chained to the original exception.
    """
    try:
        return func(*args, **kwargs)

    except ROC_exception as err:
        report = '\n\n'.join((
            f'#seedcorpus {__version__}',
            f'#exception: {err!r}',
            f'#function: {func!r}{signature(func)}',
            '#args:\n' + '\n'.join(map(repr, args)),
            '#kwargs:\n' + '\n'.join(f'{k}={v!r}' for k, v in kwargs.items()),  # noqa: E501
            '#traceback:\n' + traceback.format_exc(),
            ))

        fout_path = Path(
            ROC_folder or Path.cwd(),
            f'{ROC_prefix}_{time_ns()}.{ROC_ext}',
            )
        fout_path.write_text(report, encoding='utf-8')
        log.error(S('saved crash report: {}', fout_path))
        raise ReportOnCrashError(fout_path) from err
