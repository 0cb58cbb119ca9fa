"""
Exit command - Leave the interactive session.
"""

import typer

app = typer.Typer(help="Leave the interactive session")


@app.command(name="exit")
def exit_command():
    """
    Leave the interactive session.

    Raises EOFError, which the REPL loop in main.py treats as end of input.
    """
    raise EOFError
