"""
Package interface.

This is the main package interface.
"""
from seedcorpus.clis import cli


if __name__ == '__main__':
    cli.maincli()
