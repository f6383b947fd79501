from typing import Set

import pandas as pd


class ValidatedTable:
    """A pandas dataframe guaranteed to carry the columns its subclass declares in
    ``required_fields``."""

    required_fields: Set[str] = NotImplemented

    def __init__(self, table: pd.DataFrame, required_fields: Set[str]) -> None:
        missing = required_fields.difference(table.columns)
        if missing:
            raise ValueError(f"table with columns {list(table.columns)} lacks {sorted(missing)}")
        self._data = table

    @property
    def data(self) -> pd.DataFrame:
        return self._data
