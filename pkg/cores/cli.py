"""
``run(argv)``: the ``cores`` management command as a plain function returning an exit code.

Exit codes: 0 success, 1 ``check`` on a non-core, 2 usage errors,
3 infinite family, 4 internal assertion failure.
"""
import os
import sys


def run(argv=None):
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "simulcores.settings")
    import django
    from django.apps import apps

    if not apps.ready:
        django.setup()

    from cores.management.commands.cores import Command

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        Command().run_from_argv(["manage.py", "cores", *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
