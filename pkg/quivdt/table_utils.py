"""
Utilities for report tables
"""
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/24 (initial version) ~ 2026/10/12 (last revision)"

__all__ = [
    'format_cell',
    'records_to_frame',
    'groupby_length',
]
import pandas as pd


#------------------------------------------------------------------------------

def format_cell(value):
    """Render a record value for CSV and text tables.

    Lists become space separated, nested lists are joined by ';', and None
    becomes an empty cell.

    Examples
    --------
    >>> format_cell([1, 2]), format_cell([[3, 2], [2, 3]]), format_cell(None)
    ('1 2', '3 2;2 3', '')
    """
    if value is None:
        return ''
    if isinstance(value, (list, tuple)):
        if any(isinstance(v, (list, tuple)) for v in value):
            return ';'.join(format_cell(v) for v in value)
        return ' '.join(str(v) for v in value)
    return value


def records_to_frame(records, columns):
    """
    Build a DataFrame from report records with a fixed column order.

    Parameters
    ----------
    records: list of dict
        One dict per row.

    columns: list of str
        Column order; an empty record list still yields these columns.

    Returns
    -------
    pd.DataFrame

    Examples
    --------
    >>> df = records_to_frame([{'gamma': [1], 'omega': '2'}],
    ...                       ['gamma', 'omega'])
    >>> df.to_csv(index=False)
    'gamma,omega\\n1,2\\n'
    >>> list(records_to_frame([], ['gamma', 'omega']).columns)
    ['gamma', 'omega']
    """
    rows = [{col: format_cell(r.get(col)) for col in columns}
            for r in records]
    return pd.DataFrame(rows, columns=columns)

#------------------------------------------------------------------------------

def groupby_length(records, columns, key='gamma'):
    """
    Sum numeric columns over dimension vectors of equal total |gamma|.

    Parameters
    ----------
    records: list of dict
        Records holding the dimension vector under `key`.

    columns: list of str
        Numeric columns to add up.

    key: str, optional
        Column of the dimension vector. Defaults to 'gamma'.

    Returns
    -------
    pd.DataFrame
        One row per length, in increasing order.

    Examples
    --------
    >>> recs = [{'gamma': [0, 1], 'omega_num': 1},
    ...         {'gamma': [1, 0], 'omega_num': 1},
    ...         {'gamma': [1, 1], 'omega_num': 2}]
    >>> groupby_length(recs, ['omega_num']).values.tolist()
    [[1, 2], [2, 2]]
    """
    df = pd.DataFrame([{'length': sum(r[key]),
                        **{col: r[col] for col in columns}}
                       for r in records], columns=['length'] + columns)
    return df.groupby('length', as_index=False)[columns].sum()

#------------------------------------------------------------------------------

if __name__ == "__main__":
    import doctest
    doctest.testmod()
