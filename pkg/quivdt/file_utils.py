"""
Common utility for report files.
"""
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/24 (initial version) ~ 2026/10/11 (last revision)"

__all__ = [
    'make_dir',
    'gen_fn_info',
    'report_path',
]

import os
import re


def is_valid_dir_name(name):
    """Check if a directory path is portable (also valid on Windows).

    Args:
        name (str): the directory path, '/' separated.

    Returns:
        bool: True if every component is valid; False otherwise.

    Examples:
        >>> is_valid_dir_name(':')
        False
        >>> is_valid_dir_name('out/bps?')
        False
        >>> is_valid_dir_name('out/bps')
        True
    """
    parts = [p for p in name.replace('\\', '/').split('/') if p]
    return bool(parts) and all(
        re.match(r'^[A-Za-z0-9_\-\.]+$', p) and not p.endswith('.')
        or p in ('.', '..') for p in parts)


def make_dir(directory_path):
    """Create a report directory and return its normalized path.

    Args:
        directory_path (str): the directory path.

    Returns:
        str: the normalized path, or an empty string if the path is not
        valid or cannot be created.

    Examples:
        >>> make_dir("./out/")
        'out'
        >>> make_dir(":")
        ''
    """
    directory_path = os.path.normpath(directory_path)
    if not is_valid_dir_name(directory_path):
        return ""
    try:
        os.makedirs(directory_path, exist_ok=True)
        return directory_path
    except OSError:
        return ""


def gen_fn_info(source, command, **options):
    """Generate the stem of a report filename.

    Args:
        source (str): path of the input file.
        command (str): the command that produced the report.
        **options: option values appended as `<key><value>`; None values
            are left out.

    Returns:
        str: the filename stem.

    Examples:
        >>> gen_fn_info('fixtures/a2 d=1.qp', 'framed-check', G=2, m=1)
        'a2_d1_framedcheck_G2_m1'
        >>> gen_fn_info('one_loop.qp', 'bps', G=3, fields=None)
        'one_loop_bps_G3'
    """
    stem, _ = os.path.splitext(os.path.basename(source))
    parts = [stem, command]
    parts += [f'{key}{value}' for key, value in options.items()
              if value is not None]
    fn = '_'.join(parts)
    fn = fn.translate({ord(i): None for i in ':-=,'})
    fn = fn.replace(' ', '_')
    return fn


def report_path(out_dir, source, command, ext, **options):
    """Full path of a report file inside `out_dir` (created on demand).

    Raises:
        ValueError: if `out_dir` is not a valid directory.
    """
    directory = make_dir(out_dir)
    if not directory:
        raise ValueError(f'invalid output directory {out_dir!r}')
    fn = gen_fn_info(source, command, **options)
    return os.path.join(directory, f'{fn}.{ext}')


if __name__ == "__main__":
    import doctest
    doctest.testmod()
