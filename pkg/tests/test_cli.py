"""Test main command-line client."""
import pytest

from seedcorpus.clis.cli import maincli
from seedcorpus.components.corpus import tokenize
from seedcorpus.components.ranking import read_ranking
from seedcorpus.components.schedules import get_schedule, parse_manifest

from tests.conftest import corpus_manifest, data_folder


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    """Run every client in a scratch folder."""
    monkeypatch.chdir(tmp_path)


def run(*argv):
    """Run the CLI; return its exit code."""
    try:
        maincli([str(a) for a in argv])
    except SystemExit as err:
        return err.code
    return 0


def test_main():
    """Test CLI main function prints help without arguments."""
    assert run() == 0


def test_version(capsys):
    """Test the version flag."""
    assert run('-v') == 0
    assert '0.1.0' in capsys.readouterr().out


def test_inspect(capsys):
    """Test token counts and the Luke budget per language."""
    assert run('inspect', '-c', corpus_manifest, '--span', 'luke') == 0
    out = capsys.readouterr().out.splitlines()
    assert 'lines\t10' in out
    assert 'bpe_size\t3000' in out
    assert 'eng\t87\t40' in out
    assert 'fry\t90\t42' in out


def test_select_deterministic(tmp_path, capsys):
    """Test two runs write identical ranking files."""
    outputs = [tmp_path / 'a.tsv', tmp_path / 'b.tsv']
    for out in outputs:
        code = run(
            'select', '-c', corpus_manifest,
            '-m', 'sng', '-J', '4',
            '-bs', 'luke', '-r', 'eng',
            '-o', out,
            )
        assert code == 0
    assert outputs[0].read_bytes() == outputs[1].read_bytes()

    ranking = read_ranking(outputs[0])
    assert ranking.method == 'sng4'
    assert ranking.budget == 40
    assert ranking.check()
    assert 'sng4' in capsys.readouterr().out
    assert (tmp_path / '.seedcorpus_select.log').exists()


def test_select_random_seed(tmp_path):
    """Test the seed reaches the ranking header."""
    out = tmp_path / 'rand.tsv'
    assert run('select', '-c', corpus_manifest, '-m', 'rand', '-s', '7', '-b', '30', '-o', out) == 0  # noqa: E501
    ranking = read_ranking(out)
    assert ranking.seed == 7
    assert ranking.rng == 'numpy.random.Philox'


def test_select_exhausted(tmp_path, capsys):
    """Test a budget above the corpus is flagged."""
    out = tmp_path / 'all.tsv'
    assert run('select', '-c', corpus_manifest, '-m', 'sn', '-b', '10000', '-r', 'fry', '-o', out) == 0  # noqa: E501
    assert capsys.readouterr().out.rstrip().endswith('exhausted')
    assert read_ranking(out).exhausted


def test_select_unknown_method(tmp_path):
    """Test module errors exit with code 1."""
    code = run('select', '-c', corpus_manifest, '-m', 'sng9', '-b', '10', '-o', tmp_path / 'x.tsv')  # noqa: E501
    assert code == 1
    assert not (tmp_path / 'x.tsv').exists()


@pytest.mark.parametrize(
    'args',
    [
        ('-m', 'aggL', '-J', '9', '-t', 'fry'),
        ('-m', 'aggL', '-k', '0'),
        ('-m', 'sng', '-J', '0'),
        ],
    )
def test_select_invalid_parameters(tmp_path, capsys, args):
    """Test out of range parameters exit with code 1 and a report."""
    out = tmp_path / 'x.tsv'
    code = run('select', '-c', corpus_manifest, '-bs', 'luke', *args, '-o', out)  # noqa: E501
    assert code == 1
    assert not out.exists()
    assert 'InvalidParameterError' in capsys.readouterr().err


def test_select_missing_budget():
    """Test argument errors exit with code 2."""
    assert run('select', '-c', corpus_manifest, '-m', 'sn') == 2


def test_select_missing_corpus(tmp_path):
    """Test a manifest that does not exist."""
    assert run('select', '-c', tmp_path / 'none.yml', '-m', 'sn', '-b', '5') == 1  # noqa: E501


def test_aggregate(tmp_path, capsys):
    """Test aggregated selection over the Frisian neighbors."""
    out = tmp_path / 'aggN.tsv'
    code = run(
        'aggregate', '-c', corpus_manifest,
        '-p', 'per_neighbor', '-t', 'fry',
        '-bs', 'luke', '-bl', 'eng',
        '-o', out,
        )
    assert code == 0
    ranking = read_ranking(out)
    assert ranking.method == 'aggN'
    assert ranking.pool == ['afr', 'deu', 'eng', 'nld']
    assert ranking.params['target'] == 'fry'
    assert 'afr;deu;eng;nld' in capsys.readouterr().out


def test_aggregate_unknown_policy(tmp_path):
    """Test a policy outside the four."""
    code = run('aggregate', '-c', corpus_manifest, '-p', 'per_planet', '-b', '10', '-o', tmp_path / 'x.tsv')  # noqa: E501
    assert code == 1


def test_evaluate(tmp_path, capsys):
    """Test chrF and BLEU of each hypothesis file."""
    out = tmp_path / 'scores.tsv'
    code = run(
        'evaluate',
        '-ref', data_folder / 'ref.txt',
        '-hyp', data_folder / 'hyp_b.txt', data_folder / 'hyp_a.txt',
        '--bleu',
        '-o', out,
        )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith('hyp_a.txt\tchrF\t100.0000')
    assert lines[1].startswith('hyp_a.txt\tBLEU\t100.0000')
    assert lines[2].startswith('hyp_b.txt\tchrF\t')
    assert len(lines) == 4
    assert capsys.readouterr().out.splitlines() == lines


def test_evaluate_centeredness(capsys):
    """Test two agreeing systems outvote a third line by line."""
    code = run(
        'evaluate',
        '-ref', data_folder / 'ref.txt',
        '-hyp', *(data_folder / f'hyp_{x}.txt' for x in 'abc'),
        '--combine', 'centeredness',
        '--per-line',
        )
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == 'centeredness\tchrF\t100.0000\torder=6;beta=2'
    assert out[1:] == [f'centeredness\tline {i}\t100.0000' for i in (1, 2, 3)]  # noqa: E501


def test_evaluate_length_mismatch():
    """Test a hypothesis file shorter than the reference."""
    code = run(
        'evaluate',
        '-ref', data_folder / 'eng.txt',
        '-hyp', data_folder / 'hyp_a.txt',
        )
    assert code == 1


def test_evaluate_test_set(tmp_path, capsys):
    """Test carving the Luke excerpt out of the corpus."""
    ranking = tmp_path / 'luke.tsv'
    assert run('select', '-c', corpus_manifest, '-m', 'luke', '-bs', 'luke', '-o', ranking) == 0  # noqa: E501
    out = tmp_path / 'test_ids.txt'
    code = run('evaluate', '-c', corpus_manifest, '--rankings', ranking, '-o', out)  # noqa: E501
    assert code == 0
    assert '6 test lines' in capsys.readouterr().out
    ids = [i for i in out.read_text().splitlines() if not i.startswith('#')]
    assert ids == ['MAT 1:1', 'MAT 1:2', 'MAT 1:3', 'JHN 1:1', 'JHN 1:2', 'JHN 1:3']  # noqa: E501


def test_schedule_list(capsys):
    """Test the 24 schedule rows."""
    assert run('schedule', 'list') == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 24
    assert rows[0].startswith('A\tfalse\t')
    assert rows[-1] == 'X\ttrue\t[M2M100]'


def test_schedule_validate(capsys):
    """Test valid and invalid stage lists."""
    assert run('schedule', 'validate', 'P1', 'P3') == 0
    assert capsys.readouterr().out.strip() == 'ok'
    assert run('schedule', 'validate', 'P2', 'P3') == 1


def test_schedule_emit(tmp_path):
    """Test a manifest written for schedule B."""
    code = run(
        'schedule', 'emit', 'B',
        '--target', 'fry',
        '--sources', 'eng', 'deu', 'nld',
        '--params', 'dropout=0.3',
        )
    assert code == 0
    schedule, config = parse_manifest((tmp_path / 'schedule_B.yml').read_text())  # noqa: E501
    assert schedule == get_schedule('B')
    assert config.sources == ['eng', 'deu', 'nld']
    assert config.hyperparameters['dropout'] == 0.3


def test_schedule_emit_unknown_label():
    """Test a label past X."""
    assert run('schedule', 'emit', 'Z', '--target', 'fry') == 1


def test_mask_and_unmask(tmp_path, capsys):
    """Test Frisian entities are masked and restored into a translation."""
    out = tmp_path / 'fry.masked.txt'
    assert run('mask', '-c', corpus_manifest, '-l', 'fry', '-o', out) == 0
    assert 'entities masked' in capsys.readouterr().out
    masked = out.read_text(encoding='utf-8').splitlines()
    assert masked[0] == 'It boek fan it skaai fan __NE0 .'
    assert masked[1] == '__NE0 woe de heit fan __NE1 .'

    maps = tmp_path / 'fry.masked.txt.ne.tsv'
    rows = maps.read_text(encoding='utf-8').splitlines()
    assert rows[:3] == ['1\t0\tJezus Kristus', '2\t0\tAbraham', '2\t1\tIzaäk']

    translated = tmp_path / 'translated.txt'
    translated.write_text(out.read_text(encoding='utf-8'), encoding='utf-8')
    assert run('mask', '-u', translated, '--maps', maps) == 0
    restored = (tmp_path / 'translated.txt.unmasked.txt').read_text(encoding='utf-8').splitlines()  # noqa: E501
    original = (data_folder / 'fry.txt').read_text(encoding='utf-8').splitlines()  # noqa: E501
    assert restored == [' '.join(tokenize(line).tokens) for line in original]


def test_mask_without_lexicon(tmp_path):
    """Test a manifest without a lexicon and no `--lexicon`."""
    manifest = tmp_path / 'nolex.yml'
    manifest.write_text(
        f'languages:\n  eng: {data_folder / "eng.txt"}\n',
        encoding='utf-8',
        )
    assert run('mask', '-c', manifest, '-l', 'eng') == 1
    assert run('mask', '-c', manifest, '-l', 'eng', '-x', data_folder / 'ne.csv') == 0  # noqa: E501
    assert (tmp_path / 'eng.masked.txt').exists()


def test_unmask_requires_maps(tmp_path):
    """Test unmasking without a map file."""
    hyp = tmp_path / 'hyp.txt'
    hyp.write_text('__NE0\n', encoding='utf-8')
    assert run('mask', '-u', hyp) == 2
