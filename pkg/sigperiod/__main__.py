"""`python -m sigperiod` 진입점"""

from .cli import cli_entrypoint

if __name__ == "__main__":
    cli_entrypoint()
