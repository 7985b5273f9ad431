"""Basic module to write and read CSV tables.

Tables have a single header row and comma-separated columns.  Floating
point values are written with 17 significant digits, so that files can
be read back without loss and identical data give identical files.

Field tables are time-major: one row per time, the first column holding
the time and the header holding the positions.

"""

import os
import typing as tp

import numpy as np

from fracspec.base.errors import ArgumentError
from fracspec.base.interval import FieldGrid
from fracspec.data.numerics import NUMDEFS

# ================
# Module Constants
# ================

SEP = ','
FMT_FLOAT = f'{{:.{NUMDEFS.csv_digits}g}}'
FIELD_CORNER = 't\\x'


# ==============
# Module Classes
# ==============

class FileCSV(object):
    """Carry read operations on a CSV table.

    Parameters
    ----------
    fname
        CSV file name.
    """

    def __init__(self, fname: str) -> None:
        self.filename = fname
        with open(self.__fname, 'r', encoding='utf-8') as fobj:
            header = fobj.readline()
        if not header.strip():
            raise ArgumentError('fname', 'CSV file without header')
        self.__header = [item.strip() for item in header.split(SEP)]

    @property
    def filename(self) -> str:
        """Get or set the filename associated to the CSV object."""
        return self.__fname

    @filename.setter
    def filename(self, name: str) -> None:
        if not os.path.exists(name):
            raise FileNotFoundError('CSV file not found')
        self.__fname = name

    @property
    def header(self) -> tp.List[str]:
        """Column labels."""
        return self.__header

    @property
    def is_field(self) -> bool:
        """True if the table is a space-time field."""
        return self.__header[0] == FIELD_CORNER

    def read_data(self,
                  columns: tp.Optional[tp.Sequence[str]] = None
                  ) -> np.ndarray:
        """Read numerical columns.

        Parameters
        ----------
        columns
            Labels of the columns to read (default: all).

        Returns
        -------
        np.ndarray
            Array of shape (rows, columns).

        Raises
        ------
        KeyError
            Unknown column label.
        """
        if columns is None:
            usecols = None
        else:
            usecols = [self.__header.index(key) for key in columns]
        return np.loadtxt(self.__fname, delimiter=SEP, skiprows=1,
                          usecols=usecols, ndmin=2)

    def read_field(self) -> FieldGrid:
        """Read a space-time field table."""
        if not self.is_field:
            raise ArgumentError('fname', 'Not a field table')
        xval = np.array([float(item) for item in self.__header[1:]])
        data = self.read_data()
        return FieldGrid(xval, data[:, 0], data[:, 1:])


# ==============
# Module Methods
# ==============

def format_item(value: tp.Any) -> str:
    """Format a table entry, floats with 17 significant digits."""
    if isinstance(value, (float, np.floating)):
        return FMT_FLOAT.format(float(value))
    return str(value)


def write_table(fname: str,
                header: tp.Sequence[str],
                rows: tp.Iterable[tp.Sequence[tp.Any]]) -> None:
    """Write a table with a header row.

    Parameters
    ----------
    fname
        Output file.
    header
        Column labels.
    rows
        Rows, each with one entry per label.

    Raises
    ------
    ArgumentError
        Row length inconsistent with the header.
    """
    ncols = len(header)
    with open(fname, 'w', encoding='utf-8', newline='\n') as fobj:
        fobj.write(SEP.join(header) + '\n')
        for irow, row in enumerate(rows):
            if len(row) != ncols:
                raise ArgumentError(
                    'rows', f'Row {irow} has {len(row)} entries, '
                    + f'expected {ncols}')
            fobj.write(SEP.join(format_item(item) for item in row) + '\n')


def write_field(fname: str, grid: FieldGrid) -> None:
    """Write a space-time field, one row per time."""
    header = [FIELD_CORNER] + [FMT_FLOAT.format(x) for x in grid.x]
    rows = (np.concatenate(([t], row))
            for t, row in zip(grid.t, grid.values))
    write_table(fname, header, (list(row) for row in rows))


def read_field(fname: str) -> FieldGrid:
    """Read a space-time field written by `write_field`."""
    return FileCSV(fname).read_field()
