"""
Command Line Front End
----------------------

Reads a quiver with potential from a small line-oriented text file, runs
one pipeline command and writes the report as JSON, CSV or aligned text.

Input format::

    # comment
    [quiver]
    vertices = 2
    arrow x 0 1
    arrow y 1 0
    [potential]
    term 1 x y x y

Each `term` line holds an exact rational coefficient and one cyclic word,
its arrows separated by spaces.

Exit codes: 0 on success, 1 on a failed check, 2 on input errors, 3 on
budget or field-selection errors.

Usage:
~~~~~~
::

    python -m quivdt bps a2.qp --max-total-degree 2 --format json
    python -m quivdt verify one_loop.qp --self-test
    python -m quivdt spectrum one_loop.qp --format text
"""
__version__ = "1.2"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/25 (initial version) ~ 2026/10/15 (last revision)"

__all__ = [
    'JobSpec',
    'parse_input',
    'format_input',
    'run_job',
    'emit_report',
    'dispatch',
    'main',
]

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import QuivdtError, InputError
from .quiver import Quiver, dim_vector, dim_vectors
from .ncalg import Potential, to_fraction
from .jacobi import (FinitenessCertificate, truncated_dim_profile,
                     finiteness_certificate)
from .spectrum import SpectrumTable, sector_spectrum
from .fqrep import (CountReport, exp_sum_count, framed_exp_sum_count,
                    field_for, congruence_modulus, calibrated_fields)
from .dtbps import (BpsEntry, BpsTable, GvRow, CheckReport, bps_extract,
                    verify_theoremB, inject_adversarial, framed_exp_check,
                    gv_table, milnor_sector)
from .table_utils import records_to_frame, groupby_length
from .file_utils import report_path
from .utils import (DEFAULT_TRUNCATION, DEFAULT_MAX_TOTAL_DEGREE,
                    DEFAULT_POINT_BUDGET, DEFAULT_CHUNK_SIZE, DEFAULT_JOBS,
                    OutputFormat, Command, parse_enum,
                    setup_file_logging, setup_console_logging)


logger = logging.getLogger(__name__)

BPS_COLUMNS = ['gamma', 'omega', 'omega_num', 'positive', 'palindromic',
               'simple_sector']
GV_COLUMNS = ['r', 'gv_num', 'gv_refined', 'gv_bivariate']
CHECK_COLUMNS = ['check', 'status', 'detail']
COUNT_COLUMNS = ['gamma', 'q', 'N0', 'N1', 'E', 'elapsed_ms']
JACOBI_COLUMNS = ['certified', 'n_star', 'dim_total', 'dim_by_vertex_pair']
SPECTRUM_COLUMNS = ['alpha']

# Columns that differ between identical runs; left out of JSON.
VOLATILE_COLUMNS = ('elapsed_ms',)

#------------------------------------------------------------------------------
# Input format
#------------------------------------------------------------------------------

def _tokens(line):
    """(column, token) pairs with 1-based columns."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r'\S+', line)]


def _build_quiver(vertices, arrows, line):
    if vertices is None:
        raise InputError('missing "vertices = <n>" line', line, 1)
    try:
        Q = Quiver(vertices, [(name, s, t) for name, s, t, _ in arrows])
    except InputError as e:
        at = next((ln for name, _, _, ln in reversed(arrows)
                   if repr(name) in str(e)), line)
        raise InputError(str(e), at, 1)
    if not Q.is_symmetric():
        raise InputError('the quiver is not symmetric', line, 1)
    return Q


def parse_input(text):
    """Parse a quiver with potential.

    Parameters
    ----------
    text: str
        Contents of an input file.

    Returns
    -------
    tuple of (Quiver, Potential)

    Raises
    ------
    InputError
        With the line and column of the offending token.

    Examples
    --------
    >>> Q, W = parse_input('''
    ... [quiver]
    ... vertices = 1
    ... arrow x 0 0
    ... [potential]
    ... term 1 x x x
    ... ''')
    >>> Q, W
    (Quiver(1, [x:0->0]), 1*xxx)
    >>> parse_input('''[quiver]
    ... vertices = 2
    ... arrow x 0 1
    ... arrow y 1 0
    ... [potential]
    ... term 1 x z''')
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: line 6, column 10: unknown arrow 'z'
    """
    section = None
    vertices, arrows, terms = None, [], []
    Q = None
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        tokens = _tokens(line)
        if not tokens:
            continue
        col, head = tokens[0]

        if head.startswith('['):
            name = line.strip()
            if name not in ('[quiver]', '[potential]'):
                raise InputError(f'unknown section {name}', lineno, col)
            if name == '[potential]':
                if Q is not None:
                    raise InputError('duplicate [potential] section',
                                     lineno, col)
                Q = _build_quiver(vertices, arrows, lineno)
            elif section is not None:
                raise InputError('duplicate [quiver] section', lineno, col)
            section = name
            continue

        if section == '[quiver]':
            m = re.fullmatch(r'\s*vertices\s*=\s*(\S+)\s*', line)
            if m:
                if not m.group(1).isdigit():
                    raise InputError(f'malformed vertex count {m.group(1)!r}',
                                     lineno, m.start(1) + 1)
                vertices = int(m.group(1))
            elif head == 'arrow' and len(tokens) == 4:
                (_, name), (sc, s), (tc, t) = tokens[1:]
                for c, v in ((sc, s), (tc, t)):
                    if not v.isdigit():
                        raise InputError(f'malformed vertex {v!r}', lineno, c)
                arrows.append((name, int(s), int(t), lineno))
            else:
                raise InputError('expected "vertices = <n>" or "arrow '
                                 '<name> <source> <target>"', lineno, col)
        elif section == '[potential]':
            if head != 'term' or len(tokens) < 3:
                raise InputError('expected "term <coefficient> <arrows>"',
                                 lineno, col)
            cc, coeff = tokens[1]
            try:
                coeff = to_fraction(coeff)
            except InputError as e:
                raise InputError(str(e), lineno, cc)
            word = []
            for c, a in tokens[2:]:
                if not Q.has_arrow(a):
                    raise InputError(f'unknown arrow {a!r}', lineno, c)
                word.append(a)
            try:
                Potential(Q, [(coeff, word)])
            except InputError as e:
                raise InputError(str(e), lineno, tokens[2][0])
            terms.append((coeff, word))
        else:
            raise InputError('content before the [quiver] section',
                             lineno, col)

    if Q is None:
        Q = _build_quiver(vertices, arrows, lineno)
    return Q, Potential(Q, terms)


def format_input(Q, W):
    """Print a quiver with potential in the input format.

    >>> from quivdt.models import doubled_a2
    >>> print(format_input(*doubled_a2(1)), end='')
    [quiver]
    vertices = 2
    arrow x 0 1
    arrow y 1 0
    [potential]
    term 1 x y x y
    """
    lines = ['[quiver]', f'vertices = {Q.vertex_count}']
    lines += [f'arrow {a.name} {a.source} {a.target}' for a in Q.arrows]
    lines.append('[potential]')
    lines += [f"term {coeff} {' '.join(word)}" for word, coeff in W.items()]
    return '\n'.join(lines) + '\n'

#------------------------------------------------------------------------------
# Jobs
#------------------------------------------------------------------------------

@dataclass
class JobSpec:
    """One command line run."""
    source: str
    command: Command
    max_total_degree: int = DEFAULT_MAX_TOTAL_DEGREE
    truncation: int = DEFAULT_TRUNCATION
    rank_max: Optional[int] = None
    framing: Optional[int] = None
    fields: Optional[tuple] = None          # None means "auto"
    length: Optional[int] = None
    output_format: OutputFormat = OutputFormat.JSON
    jobs: int = DEFAULT_JOBS
    budget: int = DEFAULT_POINT_BUDGET
    chunk_size: int = DEFAULT_CHUNK_SIZE
    self_test: bool = False
    margin: int = 0
    gamma: Optional[tuple] = None
    out_dir: Optional[str] = None

    def validate(self):
        self.command = parse_enum(Command, self.command)
        self.output_format = parse_enum(OutputFormat, self.output_format)
        only = {
            'framing': (self.framing, (Command.FRAMED_CHECK, Command.COUNT)),
            'length': (self.length, (Command.GV,)),
            'rank-max': (self.rank_max, (Command.GV,)),
            'gamma': (self.gamma, (Command.SPECTRUM,)),
            'fields': (self.fields, (Command.BPS, Command.GV,
                                     Command.FRAMED_CHECK, Command.VERIFY,
                                     Command.COUNT)),
        }
        for option, (value, commands) in only.items():
            if value is not None and self.command not in commands:
                raise InputError(f'--{option} does not apply to '
                                 f'{self.command.value}')
        if self.command == Command.GV and self.rank_max is None:
            raise InputError('gv needs --rank-max')
        if self.fields is not None and \
                (len(set(self.fields)) != len(self.fields) or
                 min(self.fields) < 2):
            raise InputError('--fields must list distinct field sizes')
        if self.self_test and self.command != Command.VERIFY:
            raise InputError('--self-test applies to verify only')
        for option in ('max_total_degree', 'truncation', 'jobs', 'budget',
                       'chunk_size'):
            if getattr(self, option) < 1:
                raise InputError(f'--{option.replace("_", "-")} must be '
                                 'positive')
        if self.margin < 0:
            raise InputError('--margin must not be negative')
        return self

    @property
    def options(self):
        return dict(jobs=self.jobs, budget=self.budget,
                    chunk_size=self.chunk_size)


def _certificate(Q, W, N):
    try:
        return finiteness_certificate(truncated_dim_profile(Q, W, N))
    except QuivdtError as e:
        logger.warning(f'no finiteness certificate: {e}')
        return None


def _count(job, Q, W):
    fields = job.fields
    if fields is None:
        M = congruence_modulus(W)
        if M is None:
            raise InputError('"auto" fields need a quasi-homogeneous '
                             'potential')
        fields = calibrated_fields(M, 1)
    reports = []
    for q in fields:
        field = field_for(q)
        for gamma in dim_vectors(Q, job.max_total_degree):
            if job.framing is None:
                reports.append(exp_sum_count(Q, W, gamma, field,
                                             **job.options))
            else:
                reports.append(framed_exp_sum_count(Q, W, gamma, job.framing,
                                                    field, **job.options))
    return reports


def run_job(job, text):
    """Run the command of `job` on the input `text` and return its result."""
    Q, W = parse_input(text)
    G, N = job.max_total_degree, job.truncation
    cmd = job.command

    if cmd == Command.JACOBI:
        cert = finiteness_certificate(truncated_dim_profile(Q, W, N))
        if not cert.certified:
            logger.warning(f'Jacobi algebra not certified up to degree {N}')
        return cert
    if cmd == Command.MILNOR:
        return milnor_sector(Q, W, N)
    if cmd == Command.SPECTRUM:
        gamma = job.gamma or (1,) * Q.vertex_count
        return sector_spectrum(W, dim_vector(Q, gamma), N)
    if cmd == Command.COUNT:
        return _count(job, Q, W)

    cert = _certificate(Q, W, N)
    if cmd == Command.GV:
        bps = bps_extract(Q, W, job.rank_max, fields=job.fields,
                          margin=job.margin, certificate=cert, **job.options)
        return gv_table(Q, W, job.rank_max, length=job.length, bps=bps)

    # framed-check samples its framed counts at the extraction fields too
    bps = bps_extract(Q, W, G, fields=job.fields, margin=job.margin,
                      certificate=cert, **job.options)
    if cmd == Command.BPS:
        return bps
    if cmd == Command.FRAMED_CHECK:
        return framed_exp_check(Q, W, job.framing or 1, G, fields=job.fields,
                                bps=bps, **job.options)

    if job.self_test:
        bps = inject_adversarial(bps)
    dim = cert.dim_total if cert is not None and cert.certified else None
    return verify_theoremB(Q, W, bps, dim)

#------------------------------------------------------------------------------
# Reports
#------------------------------------------------------------------------------

def _table(result):
    """Records and column order of a command result."""
    if isinstance(result, BpsTable):
        return result.to_records(), BPS_COLUMNS
    if isinstance(result, BpsEntry):
        return [result.to_record()], BPS_COLUMNS
    if isinstance(result, CheckReport):
        return result.to_records(), CHECK_COLUMNS
    if isinstance(result, FinitenessCertificate):
        return result.to_records(), JACOBI_COLUMNS
    if isinstance(result, SpectrumTable):
        return result.to_records(), SPECTRUM_COLUMNS
    rows = list(result)
    if rows and isinstance(rows[0], GvRow):
        return [r.to_record() for r in rows], GV_COLUMNS
    if rows and isinstance(rows[0], CountReport):
        return [rec for r in rows for rec in r.to_records()], COUNT_COLUMNS
    return [], []


def emit_report(result, output_format=OutputFormat.JSON):
    """Serialize a command result.

    JSON has sorted keys and no whitespace; CSV always has its header row;
    text is an aligned table (a spectrum prints as a fraction list).

    Examples
    --------
    >>> from quivdt.spectrum import steenbrink_spectrum
    >>> emit_report(steenbrink_spectrum((1,), 3), 'text')
    b'1/3, 2/3\\n'
    >>> emit_report([], 'json')
    b'[]'
    >>> emit_report(BpsTable((), (9, 25, 49), 0, 2), 'csv')
    b'gamma,omega,omega_num,positive,palindromic,simple_sector\\n'
    """
    output_format = parse_enum(OutputFormat, output_format)
    records, columns = _table(result)

    if output_format == OutputFormat.JSON:
        records = [{k: v for k, v in r.items() if k not in VOLATILE_COLUMNS}
                   for r in records]
        return json.dumps(records, sort_keys=True,
                          separators=(',', ':')).encode('utf-8')

    df = records_to_frame(records, columns)
    if output_format == OutputFormat.CSV:
        return df.to_csv(index=False).encode('utf-8')

    if isinstance(result, SpectrumTable):
        return (result.to_text() + '\n').encode('utf-8')
    text = df.to_string(index=False)
    if isinstance(result, BpsTable) and records:
        by_length = groupby_length(records, ['omega_num'])
        text += '\n\n' + by_length.to_string(index=False)
    return (text + '\n').encode('utf-8')


def _failed(result):
    return isinstance(result, CheckReport) and not result.passed


def dispatch(job, stdout=None, stderr=None):
    """Run a job and write its report.

    Returns
    -------
    int
        0 on success, 1 on failed checks or internal errors, 2 on input
        errors, 3 on budget or field-selection errors.
    """
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    try:
        job.validate()
        try:
            if job.source == '-':
                text = sys.stdin.read()
            else:
                with open(job.source, encoding='utf-8') as f:
                    text = f.read()
        except OSError as e:
            raise InputError(f'cannot read {job.source}: {e.strerror}')

        result = run_job(job, text)
        data = emit_report(result, job.output_format)
        if job.out_dir:
            path = report_path(job.out_dir, job.source, job.command.value,
                               job.output_format.value,
                               G=job.max_total_degree, m=job.framing)
            with open(path, 'wb') as f:
                f.write(data)
            print(f'Your "{path}" is ready.', file=stderr)
        else:
            stdout.write(data)
            stdout.flush()
    except QuivdtError as e:
        logger.error(f'{job.command}: {e}')
        print(f'error: {e}', file=stderr)
        return e.exit_code
    except ValueError as e:
        print(f'error: {e}', file=stderr)
        return InputError.exit_code

    if _failed(result):
        for entry in result.failures():
            print(f'check failed: {entry.check}: {entry.detail}',
                  file=stderr)
        return 1
    return 0

#------------------------------------------------------------------------------
# Argument parsing
#------------------------------------------------------------------------------

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer')
    if value < 1:
        raise argparse.ArgumentTypeError(f'{text!r} is not positive')
    return value


def _fields(text):
    if text == 'auto':
        return None
    try:
        return tuple(int(q) for q in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not "auto" or a '
                                         'comma separated list of integers')


def _gamma(text):
    try:
        return tuple(int(g) for g in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not a dimension vector')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='quivdt',
        description='Refined DT/BPS invariants of symmetric quivers with '
                    'potential')
    parser.add_argument('command', choices=[c.value for c in Command])
    parser.add_argument('input', help="input file ('-' for stdin)")
    parser.add_argument('--max-total-degree', type=_positive_int,
                        default=DEFAULT_MAX_TOTAL_DEGREE, metavar='G')
    parser.add_argument('--truncation', type=_positive_int,
                        default=DEFAULT_TRUNCATION, metavar='N')
    parser.add_argument('--rank-max', type=_positive_int, metavar='r')
    parser.add_argument('--framing', type=_positive_int, metavar='m')
    parser.add_argument('--fields', type=_fields, default=None,
                        metavar='q1,q2,...|auto')
    parser.add_argument('--length', type=_positive_int, metavar='l')
    parser.add_argument('--gamma', type=_gamma, metavar='g1,g2,...')
    parser.add_argument('--margin', type=int, default=0)
    parser.add_argument('--format', dest='output_format',
                        choices=[f.value for f in OutputFormat],
                        default=OutputFormat.JSON.value)
    parser.add_argument('--jobs', type=_positive_int, default=DEFAULT_JOBS)
    parser.add_argument('--budget', type=_positive_int,
                        default=DEFAULT_POINT_BUDGET, metavar='points')
    parser.add_argument('--self-test', action='store_true')
    parser.add_argument('--out-dir')
    parser.add_argument('--log-file')
    parser.add_argument('-v', '--verbose', action='store_true')
    return parser


def main(argv=None):
    """Entry point; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return InputError.exit_code if e.code else 0

    handlers = []
    if args.log_file:
        handlers.append(setup_file_logging(args.log_file))
    elif args.verbose:
        handlers.append(setup_console_logging(verbose=True))

    job = JobSpec(source=args.input, command=args.command,
                  max_total_degree=args.max_total_degree,
                  truncation=args.truncation, rank_max=args.rank_max,
                  framing=args.framing, fields=args.fields,
                  length=args.length, output_format=args.output_format,
                  jobs=args.jobs, budget=args.budget,
                  self_test=args.self_test, margin=args.margin,
                  gamma=args.gamma, out_dir=args.out_dir)
    try:
        return dispatch(job)
    finally:
        package_logger = logging.getLogger('quivdt')
        for handler in handlers:
            package_logger.removeHandler(handler)
            handler.close()
        package_logger.propagate = True


if __name__ == "__main__":
    sys.exit(main())
