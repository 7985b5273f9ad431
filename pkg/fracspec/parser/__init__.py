"""Module with the parsers and writers of FRACSPEC files

List of sub-modules
-------------------
`base`
    Generic file wrapper, dispatching on the file extension.
`config`
    Run configurations (INI or JSON).
`csv`
    Field tables in CSV format.
"""
